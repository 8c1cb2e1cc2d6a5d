use thiserror::Error;

use crate::surface::NumClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invariant e must be >= -1, got {0}")]
    InvalidInvariant(i64),

    #[error(
        "tag {tag} is only valid on the e = -1 ray (2n, -n), n >= 0; got class {class} on e = {e}"
    )]
    InvalidTag {
        tag: &'static str,
        class: NumClass,
        e: i64,
    },

    #[error("class {class} is not ample on e = {e}")]
    NotAmple { class: NumClass, e: i64 },

    #[error("class {class} fails the {condition} precondition on e = {e}")]
    Precondition {
        class: NumClass,
        e: i64,
        condition: &'static str,
    },

    #[error("cohomology table inconsistent with chi = {chi} at class {class} on e = {e}")]
    InconsistentTable { class: NumClass, e: i64, chi: i64 },

    #[error("negative genus {0}")]
    NegativeGenus(i64),

    #[error("empty tuple of factors")]
    EmptyTuple,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
