use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unsupported cochain degree {0}")]
    UnsupportedDegree(usize),

    #[error("{check} failed: {summary}")]
    CheckFailed { check: &'static str, summary: String },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("morphisms are not composable: source of the second differs from target of the first")]
    NotComposable,

    #[error("value escapes the kernel of the crossed module map at {tuple:?}")]
    OutsideKernel { tuple: Vec<usize> },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn ensure_dims(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(what()))
    }
}
