use std::path::Path;
use std::process::{Command, Output};

use clap::Parser;
use ruled_cli::render::{parse_ascii, parse_svg_cells, Mark};
use ruled_cli::{run, run_with, Cli};
use ruled_core::verify::Predicates;
use ruled_core::{classify_cell, NumClass, SurfaceModel};
use serde_json::Value;

fn ruled(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ruled"))
        .args(args)
        .output()
        .expect("spawn ruled")
}

fn stdout_of(args: &[&str]) -> String {
    let out = ruled(args);
    assert!(
        out.status.success(),
        "ruled {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

fn cells_of(args: &[&str]) -> Vec<Value> {
    stdout_of(args)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn in_process(args: &[&str]) -> (u8, String) {
    let cli = Cli::try_parse_from(std::iter::once("ruled").chain(args.iter().copied())).unwrap();
    let mut buf = Vec::new();
    let code = run(cli, &mut buf).unwrap();
    (code, String::from_utf8(buf).unwrap())
}

fn golden(name: &str) -> Vec<Vec<String>> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(path)
        .unwrap()
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| l.split_whitespace().map(str::to_string).collect())
        .collect()
}

fn exact(v: &Value) -> i64 {
    assert_eq!(v["kind"], "exact", "{v}");
    v["value"].as_i64().unwrap()
}

#[test]
fn classify_np_witness() {
    let v = json_of(&["classify", "--e", "-1", "--a", "5", "--b", "0"]);
    assert_eq!(v["cell"]["np"], true);
    let d = &v["decomposition"];
    assert_eq!(
        (d["b1"]["a"].as_i64(), d["b1"]["b"].as_i64()),
        (Some(4), Some(-1))
    );
    assert_eq!(
        (d["b2"]["a"].as_i64(), d["b2"]["b"].as_i64()),
        (Some(1), Some(1))
    );
    assert_eq!(v["assumptions"]["normal_presentation"], "char(k) != 2");
}

#[test]
fn classify_ray_member() {
    let v = json_of(&[
        "classify", "--e", "-1", "--a", "4", "--b", "-2", "--tag", "zero",
    ]);
    assert_eq!(exact(&v["cohomology"]["h0"]), 2);
    assert_eq!(v["tag"], "zero");
}

#[test]
fn classify_not_np_on_e0() {
    let v = json_of(&["classify", "--e", "0", "--a", "1", "--b", "3"]);
    assert_eq!(v["cell"]["np"], false);
    assert_eq!(v["cell"]["koszul"], false);
    assert!(v["decomposition"].is_null());
}

#[test]
fn classify_rejects_bad_input() {
    for args in [
        &["classify", "--e", "-2", "--a", "1", "--b", "1"][..],
        &[
            "classify", "--e", "-1", "--a", "3", "--b", "0", "--tag", "eta1",
        ],
        &[
            "classify", "--e", "0", "--a", "2", "--b", "-1", "--tag", "zero",
        ],
        &["classify", "--e", "-1", "--a", "1"],
    ] {
        let out = ruled(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn ray_table_golden() {
    for row in golden("ray_table.txt") {
        let n: i64 = row[0].parse().unwrap();
        let (a, b) = ((2 * n).to_string(), (-n).to_string());
        let (code, text) = in_process(&[
            "classify", "--e", "-1", "--a", &a, "--b", &b, "--tag", &row[1],
        ]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        let got: Vec<String> = ["h0", "h1", "h2"]
            .iter()
            .map(|k| exact(&v["cohomology"][k]).to_string())
            .collect();
        assert_eq!(got, row[2..5].to_vec(), "n = {n}, tag {}", row[1]);
    }
}

#[test]
fn sharpness_golden() {
    for row in golden("sharpness.txt") {
        let v = json_of(&["classify", "--e", &row[0], "--a", &row[1], "--b", &row[2]]);
        let cell = &v["cell"];
        let got = [&cell["ample"], &cell["all_bpf"], &cell["np"]].map(|x| x.to_string());
        assert_eq!(got.to_vec(), row[3..6].to_vec(), "{row:?}");
    }
}

#[test]
fn region_window() {
    let cells = cells_of(&[
        "region",
        "--e",
        "-1",
        "--a-range",
        "0:6",
        "--b-range",
        "-3:6",
    ]);
    assert_eq!(cells.len(), 70);
    let find = |a: i64, b: i64| {
        cells
            .iter()
            .find(|c| c["a"] == a && c["b"] == b)
            .unwrap()
            .clone()
    };
    assert_eq!(find(1, 3)["np"], true);
    let mut keys: Vec<(i64, i64)> = cells
        .iter()
        .map(|c| (c["a"].as_i64().unwrap(), c["b"].as_i64().unwrap()))
        .collect();
    let before = keys.clone();
    keys.sort();
    assert_eq!(keys, before);
}

#[test]
fn region_single_cells() {
    let cells = cells_of(&[
        "region",
        "--e",
        "-1",
        "--a-range",
        "0:0",
        "--b-range",
        "0:0",
    ]);
    assert_eq!(cells.len(), 1);
    assert_eq!(cells[0]["ample"], false);
    assert_ne!(cells[0]["effective"]["kind"], "none_effective");

    let cells = cells_of(&[
        "region",
        "--e",
        "-1",
        "--a-range",
        "1:1",
        "--b-range",
        "0:0",
    ]);
    assert_eq!(
        (cells[0]["ample"].as_bool(), cells[0]["np"].as_bool()),
        (Some(true), Some(false))
    );
}

#[test]
fn region_cap_and_ranges() {
    let out = ruled(&[
        "region",
        "--e",
        "0",
        "--a-range",
        "0:1000",
        "--b-range",
        "0:1000",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = ruled(&[
        "region",
        "--e",
        "0",
        "--a-range",
        "0:9",
        "--b-range",
        "0:9",
        "--max-cells",
        "99",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = ruled(&["region", "--e", "0", "--a-range", "3:1", "--b-range", "0:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn region_output_is_stable() {
    let args = [
        "region",
        "--e",
        "-1",
        "--a-range",
        "-5:8",
        "--b-range",
        "-4:7",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
    let args = ["classify", "--e", "2", "--a", "3", "--b", "10"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn ascii_and_svg_agree_with_json() {
    for e in ["-1", "0", "1"] {
        let base = ["region", "--e", e, "--a-range", "-2:7", "--b-range", "-4:8"];
        let cells = cells_of(&base);
        let s = SurfaceModel::new(e.parse().unwrap()).unwrap();
        let expected: Vec<(i64, i64, Mark)> = cells
            .iter()
            .map(|c| {
                let (a, b) = (c["a"].as_i64().unwrap(), c["b"].as_i64().unwrap());
                let cell = classify_cell(NumClass::new(a, b), s);
                assert_eq!(c["np"], cell.np);
                (a, b, Mark::of(&cell))
            })
            .collect();

        let ascii = stdout_of(&[&base[..], &["--format", "ascii"]].concat());
        let mut got = parse_ascii(&ascii, -2);
        got.sort_by_key(|&(a, b, _)| (a, b));
        assert_eq!(got, expected, "ascii on e = {e}");
        for m in Mark::ALL {
            assert!(ascii.contains(&format!("  {}  ", m.glyph())));
        }

        let svg = stdout_of(&[&base[..], &["--format", "svg"]].concat());
        let got: Vec<(i64, i64, String)> = parse_svg_cells(&svg);
        let want: Vec<(i64, i64, String)> = expected
            .iter()
            .map(|&(a, b, m)| (a, b, m.css_class().to_string()))
            .collect();
        assert_eq!(got, want, "svg on e = {e}");
        assert!(svg.contains(">a</text>") && svg.contains(">b</text>"));
        assert!(svg.contains("normally generated"));
    }
}

#[test]
fn decompose_modes() {
    let v = json_of(&["decompose", "--e", "-1", "--a", "2", "--b", "1"]);
    assert!(v["decomposition"].is_null());
    assert_eq!(v["normally_presented"], false);

    let v = json_of(&["decompose", "--e", "-1", "--a", "5", "--b", "0"]);
    assert_eq!(v["decomposition"]["case_tag"], "c423");

    let v = json_of(&[
        "decompose",
        "--e",
        "2",
        "--a",
        "3",
        "--b",
        "10",
        "--mode",
        "brute",
    ]);
    assert_eq!(v["mode"], "brute");
    assert_eq!(v["decomposition"]["case_tag"], "brute_force");
    let d = &v["decomposition"];
    let sum = (
        d["b1"]["a"].as_i64().unwrap() + d["b2"]["a"].as_i64().unwrap(),
        d["b1"]["b"].as_i64().unwrap() + d["b2"]["b"].as_i64().unwrap(),
    );
    assert_eq!(sum, (3, 10));
    assert!(!v["search"]["rows"].as_array().unwrap().is_empty());
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("ruled-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cell.json");
    let path_str = path.to_str().unwrap();
    let out = ruled(&[
        "classify", "--e", "0", "--a", "1", "--b", "4", "--out", path_str,
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["cell"]["np"], true);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_small_window_passes() {
    let (code, text) = in_process(&["verify", "--window", "4", "--e", "-1,0"]);
    assert_eq!(code, 0, "{text}");
    assert_eq!(text.matches("[PASS]").count(), 8);

    let (code, text) = in_process(&["verify", "--window", "4", "--e", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["suite"], "ruled-verify");
    assert_eq!(v["results"].as_array().unwrap().len(), 8);
}

#[test]
fn verify_rejects_tiny_window() {
    assert_eq!(ruled(&["verify", "--window", "3"]).status.code(), Some(2));
    assert_eq!(
        ruled(&["verify", "--window", "4", "--e", "-3"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_reports_corrupted_predicate() {
    let p = Predicates {
        is_normally_presented: |c, _| c.a >= 1 && c.a + c.b >= 3,
        ..Predicates::default()
    };
    let cli = Cli::try_parse_from(["ruled", "verify", "--window", "4", "--e", "-1"]).unwrap();
    let mut buf = Vec::new();
    let code = run_with(cli, &mut buf, &p).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert_eq!(code, 1);
    assert!(text.contains("[FAIL] main_theorem_equivalence"), "{text}");
    assert!(text.contains("counterexample: (2, 1) on e = -1"), "{text}");
}
