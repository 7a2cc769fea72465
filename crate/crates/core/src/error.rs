use thiserror::Error;

/// Errors raised by the library.
///
/// Verification failures are not errors: they are reported as content of a
/// [`crate::harness::VerificationReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown {kind} `{given}`; valid values: {valid}")]
    UnknownId {
        kind: &'static str,
        given: String,
        valid: String,
    },
    #[error("class {class} holds {expected} objects, got the other kind")]
    SideMismatch {
        class: &'static str,
        expected: &'static str,
    },
    #[error("{object} is not a member of {class}")]
    NotInClass { class: &'static str, object: String },
    #[error("{map} produced {object}, which is not a member of {class}")]
    InvalidImage {
        map: &'static str,
        class: &'static str,
        object: String,
    },
    #[error("map produced a non-positive part ({value}) at index {index}")]
    NonPositivePart { index: usize, value: i64 },
    #[error("map produced parts out of order at index {index}")]
    Misordered { index: usize },
    #[error("recovered part at index {index} disagrees with its negative-part flag")]
    ParityMismatch { index: usize },
    #[error("negative part {part} is not admissible for this map")]
    BadNegativePart { part: u32 },
    #[error("binary sequence must be nonempty")]
    EmptyBinarySequence,
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("no product side is stated for identity {0}")]
    ProductNotStated(&'static str),
    #[error("class {class} has no finite bound on the number of positive parts")]
    Unbounded { class: &'static str },
    #[error("malformed partition at position {position} (`{token}`): {reason}")]
    Parse {
        position: usize,
        token: String,
        reason: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
