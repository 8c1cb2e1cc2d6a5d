//! Region emitters: JSON lines, an ASCII grid and an SVG figure.
//!
//! Both pictures put `a` on the horizontal axis and `b` on the vertical one,
//! with `b` increasing upwards.

use std::fmt::Write as _;
use std::io::{self, Write};

use ruled_core::{EffectivityStatus, RegionCell, SurfaceModel};

use crate::Span;

pub fn json_lines(w: &mut dyn Write, cells: &[RegionCell]) -> io::Result<()> {
    for cell in cells {
        serde_json::to_writer(&mut *w, cell)?;
        writeln!(w)?;
    }
    Ok(())
}

/// The most specific property of a cell, in decreasing order of strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mark {
    NormallyPresented,
    AmpleBpf,
    Ample,
    AllBpf,
    Effective,
    EffectivityUnknown,
    Nothing,
}

impl Mark {
    pub const ALL: [Mark; 7] = [
        Mark::NormallyPresented,
        Mark::AmpleBpf,
        Mark::Ample,
        Mark::AllBpf,
        Mark::Effective,
        Mark::EffectivityUnknown,
        Mark::Nothing,
    ];

    pub fn of(cell: &RegionCell) -> Mark {
        if cell.np {
            Mark::NormallyPresented
        } else if cell.ample_bpf {
            Mark::AmpleBpf
        } else if cell.ample {
            Mark::Ample
        } else if cell.all_bpf {
            Mark::AllBpf
        } else {
            match cell.effective {
                EffectivityStatus::AllEffective | EffectivityStatus::FinitelyMany { .. } => {
                    Mark::Effective
                }
                EffectivityStatus::Indeterminate => Mark::EffectivityUnknown,
                EffectivityStatus::NoneEffective => Mark::Nothing,
            }
        }
    }

    pub fn glyph(self) -> char {
        match self {
            Mark::NormallyPresented => '#',
            Mark::AmpleBpf => '@',
            Mark::Ample => 'o',
            Mark::AllBpf => '+',
            Mark::Effective => '.',
            Mark::EffectivityUnknown => '?',
            Mark::Nothing => '-',
        }
    }

    pub fn from_glyph(g: char) -> Option<Mark> {
        Mark::ALL.into_iter().find(|m| m.glyph() == g)
    }

    pub fn legend(self) -> &'static str {
        match self {
            Mark::NormallyPresented => "normally presented and Koszul (dashed disc)",
            Mark::AmpleBpf => "ample and base point free (shaded disc)",
            Mark::Ample => "ample (blank disc)",
            Mark::AllBpf => "all members base point free, not ample (cross)",
            Mark::Effective => "effective members, not ample",
            Mark::EffectivityUnknown => "effectivity undecided numerically",
            Mark::Nothing => "none of the above",
        }
    }

    pub fn css_class(self) -> &'static str {
        match self {
            Mark::NormallyPresented => "np",
            Mark::AmpleBpf => "ample-bpf",
            Mark::Ample => "ample",
            Mark::AllBpf => "all-bpf",
            Mark::Effective => "effective",
            Mark::EffectivityUnknown => "unknown",
            Mark::Nothing => "none",
        }
    }
}

fn cell_at(
    cells: &[RegionCell],
    a_range: Span,
    b_count: i64,
    a: i64,
    b: i64,
    b_lo: i64,
) -> &RegionCell {
    // scan() orders by a, then b.
    let idx = (a - a_range.lo) * b_count + (b - b_lo);
    let cell = &cells[idx as usize];
    debug_assert_eq!((cell.cls.a, cell.cls.b), (a, b));
    cell
}

pub fn ascii(
    w: &mut dyn Write,
    s: SurfaceModel,
    a_range: Span,
    b_range: Span,
    cells: &[RegionCell],
) -> io::Result<()> {
    let b_count = b_range.hi - b_range.lo + 1;
    let label_width = [b_range.lo, b_range.hi]
        .iter()
        .map(|b| b.to_string().len())
        .max()
        .unwrap_or(1)
        .max(1);
    writeln!(w, "Num(X) for {s}: a -> (horizontal), b ^ (vertical)")?;
    for b in (b_range.lo..=b_range.hi).rev() {
        let mut line = format!("{b:>label_width$} |");
        for a in a_range.lo..=a_range.hi {
            line.push(' ');
            line.push(Mark::of(cell_at(cells, a_range, b_count, a, b, b_range.lo)).glyph());
        }
        writeln!(w, "{line}")?;
    }
    let columns = (a_range.hi - a_range.lo + 1) as usize;
    writeln!(w, "{:>label_width$} +{}", "", "--".repeat(columns))?;
    writeln!(
        w,
        "{:>label_width$}   a = {}..{}",
        "", a_range.lo, a_range.hi
    )?;
    writeln!(w, "legend:")?;
    for m in Mark::ALL {
        writeln!(w, "  {}  {}", m.glyph(), m.legend())?;
    }
    Ok(())
}

/// Parses the grid produced by [`ascii`] back into `(a, b, mark)` triples.
pub fn parse_ascii(text: &str, a_lo: i64) -> Vec<(i64, i64, Mark)> {
    let mut out = Vec::new();
    for line in text.lines() {
        let Some((label, row)) = line.split_once(" |") else {
            continue;
        };
        let Ok(b) = label.trim().parse::<i64>() else {
            continue;
        };
        for (i, g) in row.chars().skip(1).step_by(2).enumerate() {
            if let Some(m) = Mark::from_glyph(g) {
                out.push((a_lo + i as i64, b, m));
            }
        }
    }
    out
}

const CELL: i64 = 28;
const MARGIN: i64 = 56;
const LEGEND_WIDTH: i64 = 360;

pub fn svg(
    w: &mut dyn Write,
    s: SurfaceModel,
    a_range: Span,
    b_range: Span,
    cells: &[RegionCell],
) -> io::Result<()> {
    let cols = a_range.hi - a_range.lo + 1;
    let rows = b_range.hi - b_range.lo + 1;
    let plot_w = cols * CELL;
    let plot_h = rows * CELL;
    let width = MARGIN * 2 + plot_w + LEGEND_WIDTH;
    let height = (MARGIN * 2 + plot_h).max(MARGIN * 2 + 9 * 26);
    let x_of = |a: i64| MARGIN + (a - a_range.lo) * CELL + CELL / 2;
    let y_of = |b: i64| MARGIN + (b_range.hi - b) * CELL + CELL / 2;

    let mut doc = String::new();
    let _ = writeln!(doc, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        doc,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(doc, "<title>Num(X) for {s}</title>");
    doc.push_str(concat!(
        "<defs>\n",
        r#"<pattern id="dashed" width="4" height="4" patternUnits="userSpaceOnUse" patternTransform="rotate(45)"><line x1="0" y1="0" x2="0" y2="4" stroke="black" stroke-width="1.5"/></pattern>"#,
        "\n",
        r#"<pattern id="hatch" width="6" height="6" patternUnits="userSpaceOnUse" patternTransform="rotate(-45)"><line x1="0" y1="0" x2="0" y2="6" stroke="gray" stroke-width="1"/></pattern>"#,
        "\n</defs>\n",
    ));

    // Axes through a = 0 and b = 0 when they are in view, otherwise along the frame.
    let axis_x = if a_range.range().contains(&0) {
        x_of(0)
    } else {
        MARGIN
    };
    let axis_y = if b_range.range().contains(&0) {
        y_of(0)
    } else {
        MARGIN + plot_h
    };
    let _ = writeln!(
        doc,
        r#"<g class="axes" stroke="gray"><line x1="{}" y1="{axis_y}" x2="{}" y2="{axis_y}"/><line x1="{axis_x}" y1="{}" x2="{axis_x}" y2="{}"/></g>"#,
        MARGIN,
        MARGIN + plot_w,
        MARGIN,
        MARGIN + plot_h
    );
    let _ = writeln!(
        doc,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">a</text>"#,
        MARGIN + plot_w / 2,
        MARGIN + plot_h + 40
    );
    let _ = writeln!(
        doc,
        r#"<text x="{}" y="{}" text-anchor="middle" font-size="14">b</text>"#,
        MARGIN - 40,
        MARGIN + plot_h / 2
    );
    for a in a_range.range() {
        let _ = writeln!(
            doc,
            r#"<text x="{}" y="{}" text-anchor="middle">{a}</text>"#,
            x_of(a),
            MARGIN + plot_h + 18
        );
    }
    for b in b_range.range() {
        let _ = writeln!(
            doc,
            r#"<text x="{}" y="{}" text-anchor="end">{b}</text>"#,
            MARGIN - 8,
            y_of(b) + 4
        );
    }

    for cell in cells {
        let (x, y) = (x_of(cell.cls.a), y_of(cell.cls.b));
        let mark = Mark::of(cell);
        let _ = write!(
            doc,
            r#"<g class="cell {}" data-a="{}" data-b="{}">"#,
            mark.css_class(),
            cell.cls.a,
            cell.cls.b
        );
        if cell.all_bpf {
            push_cross(&mut doc, x, y);
        }
        push_disc(&mut doc, mark, x, y);
        doc.push_str("</g>\n");
    }

    // Legend.
    let lx = MARGIN * 2 + plot_w;
    let mut ly = MARGIN;
    let _ = writeln!(
        doc,
        r#"<g class="legend"><text x="{lx}" y="{ly}" font-size="13">Legend</text>"#
    );
    ly += 22;
    let mut entry = |doc: &mut String, draw: &dyn Fn(&mut String, i64, i64), label: &str| {
        draw(doc, lx + 10, ly);
        let _ = writeln!(
            doc,
            r#"<text x="{}" y="{}">{label}</text>"#,
            lx + 28,
            ly + 4
        );
        ly += 26;
    };
    entry(
        &mut doc,
        &|d, x, y| push_cross(d, x, y),
        "all members in the class base point free",
    );
    entry(
        &mut doc,
        &|d, x, y| push_disc(d, Mark::NormallyPresented, x, y),
        "normally presented (and Koszul)",
    );
    entry(
        &mut doc,
        &|d, x, y| {
            let _ = write!(
                d,
                r#"<circle cx="{x}" cy="{y}" r="8" fill="url(#hatch)" stroke="gray" stroke-width="4" stroke-dasharray="2 2"/>"#
            );
        },
        "annulus: normally generated (not computed, out of scope)",
    );
    entry(
        &mut doc,
        &|d, x, y| push_disc(d, Mark::AmpleBpf, x, y),
        "ample and base point free",
    );
    entry(
        &mut doc,
        &|d, x, y| push_disc(d, Mark::Ample, x, y),
        "ample",
    );
    entry(
        &mut doc,
        &|d, x, y| push_disc(d, Mark::Effective, x, y),
        "effective members",
    );
    entry(
        &mut doc,
        &|d, x, y| push_disc(d, Mark::EffectivityUnknown, x, y),
        "effectivity undecided",
    );
    doc.push_str("</g>\n</svg>\n");
    w.write_all(doc.as_bytes())
}

fn push_cross(doc: &mut String, x: i64, y: i64) {
    let r = 10;
    let _ = write!(
        doc,
        r#"<path d="M{} {} L{} {} M{} {} L{} {}" stroke="black" stroke-width="1"/>"#,
        x - r,
        y - r,
        x + r,
        y + r,
        x - r,
        y + r,
        x + r,
        y - r
    );
}

fn push_disc(doc: &mut String, mark: Mark, x: i64, y: i64) {
    let _ = match mark {
        Mark::NormallyPresented => write!(
            doc,
            r#"<circle cx="{x}" cy="{y}" r="8" fill="url(#dashed)" stroke="black"/>"#
        ),
        Mark::AmpleBpf => write!(
            doc,
            r#"<circle cx="{x}" cy="{y}" r="8" fill="gray" stroke="black"/>"#
        ),
        Mark::Ample => write!(
            doc,
            r#"<circle cx="{x}" cy="{y}" r="8" fill="white" stroke="black"/>"#
        ),
        Mark::Effective => write!(doc, r#"<circle cx="{x}" cy="{y}" r="2.5" fill="black"/>"#),
        Mark::EffectivityUnknown => write!(
            doc,
            r#"<text x="{x}" y="{}" text-anchor="middle" fill="gray">?</text>"#,
            y + 4
        ),
        Mark::AllBpf | Mark::Nothing => Ok(()),
    };
}

/// Reads back the `(a, b, css class)` of every cell group in an SVG.
pub fn parse_svg_cells(text: &str) -> Vec<(i64, i64, String)> {
    let mut out = Vec::new();
    for chunk in text.split(r#"<g class="cell "#).skip(1) {
        let field = |key: &str| -> Option<&str> {
            let start = chunk.find(key)? + key.len();
            let rest = &chunk[start..];
            Some(&rest[..rest.find('"')?])
        };
        let (Some(a), Some(b)) = (field("data-a=\""), field("data-b=\"")) else {
            continue;
        };
        let class = &chunk[..chunk.find('"').unwrap_or(0)];
        if let (Ok(a), Ok(b)) = (a.parse(), b.parse()) {
            out.push((a, b, class.to_string()));
        }
    }
    out
}
