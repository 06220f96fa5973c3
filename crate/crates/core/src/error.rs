use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrankError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("capacity exceeded: {what} = {requested} is above the configured cap {cap}")]
    Capacity {
        what: &'static str,
        requested: u64,
        cap: u64,
    },

    #[error("singular sum: sin(pi*{a}*{h_prime}/{c}) vanishes for h = {h} (mod {k})")]
    Singularity {
        a: u64,
        c: u64,
        k: u64,
        h: u64,
        h_prime: u64,
    },

    #[error("non-integral Fourier index {value} in D-sum")]
    Integrality { value: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T, E = CrankError> = std::result::Result<T, E>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(CrankError::Domain(msg.into()))
}
