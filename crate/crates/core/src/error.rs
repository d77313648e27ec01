use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid boost: |u| = {speed} must be < 1")]
    InvalidBoost { speed: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("spectrum has zero total weight")]
    ZeroNorm,

    #[error("spectrum is empty")]
    EmptySpectrum,

    #[error("spectrum mixes particle masses ({0} and {1})")]
    MixedMass(f64, f64),

    #[error("{operation} needs a structured spectrum (ring or grid), got a sample cloud")]
    UnsupportedRepresentation { operation: &'static str },

    #[error("mean four-momentum is not timelike (norm = {norm})")]
    NotTimelike { norm: f64 },

    #[error("four-momentum is off the mass shell: E^2 - p^2 = {norm}, m^2 = {mass_sq}")]
    OffShell { norm: f64, mass_sq: f64 },

    #[error("grid amplitude at the boundary is {ratio:e} of its maximum (limit {limit:e})")]
    Localization { ratio: f64, limit: f64 },

    #[error("field at the grid boundary is {ratio:e} of its maximum (limit {limit:e})")]
    BoundaryLeakage { ratio: f64, limit: f64 },

    #[error("cannot infer output format from {0:?}; use .csv or .ppm")]
    UnknownFormat(PathBuf),

    #[error("unknown scenario `{name}`; expected one of: {known}")]
    UnknownScenario { name: String, known: String },

    #[error("unknown key `{key}`; expected one of: {known}")]
    UnknownKey { key: String, known: String },

    #[error("bad value for `{key}`: {message}")]
    BadValue { key: String, message: String },

    #[error("line {line}: {message}")]
    Csv { line: usize, message: String },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
