use thiserror::Error;

pub type Result<T, E = HnsError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HnsError {
    #[error("structural constant `{0}` is not finite")]
    NonFinite(&'static str),

    #[error("unit denominator vanishes at probe ({m1}, {m2})")]
    SingularProbe { m1: f64, m2: f64 },

    #[error("basis transform is singular (det = {0})")]
    SingularTransform(f64),

    #[error("parameter `{0}` must be nonzero")]
    ZeroParameter(&'static str),

    #[error("system is not diagonal: E1·E2 = {a12} E1 + {b12} E2")]
    NotDiagonal { a12: f64, b12: f64 },

    #[error("system has no constant unit element")]
    NoConstantUnit,

    #[error("system has no constant unit element; no normal form exists")]
    NonUnitalSystem,

    #[error("a22·b22 + b22²/4 = {0} is not positive; no real transition to R⊕R exists")]
    NonPositiveDiscriminant(f64),

    #[error("solution index must be 1 or 2, got {0}")]
    InvalidSolution(u8),

    #[error("chain link from `{found}` does not continue from `{expected}`")]
    BrokenChain { expected: String, found: String },
}
