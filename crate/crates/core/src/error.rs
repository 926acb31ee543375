use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("gcd(0,0) undefined")]
    ZeroZero,

    #[error("{what} must be at least {min}, got {got}")]
    OutOfRange {
        what: &'static str,
        min: u64,
        got: u64,
    },

    #[error("failed writing {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("csv output failed: {0}")]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
