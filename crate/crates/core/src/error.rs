use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("pole of {function} at {at}")]
    Pole { function: &'static str, at: String },

    #[error("{function}: argument {value} outside domain ({requirement})")]
    Domain {
        function: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("{function}: series not converged after {terms} terms (last term {last_term:e})")]
    Truncation {
        function: &'static str,
        terms: usize,
        last_term: f64,
    },

    #[error("quadrature did not reach tolerance: estimate {value:e} with error {abs_err:e} after {subdivisions} subdivisions")]
    Quadrature {
        value: f64,
        abs_err: f64,
        subdivisions: usize,
    },

    #[error("{what}: value {magnitude:e} is too close to zero for a logarithmic derivative")]
    NearZero { what: &'static str, magnitude: f64 },

    #[error("index {requested} exceeds zero table size {available}")]
    Index { requested: usize, available: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("zero table ordinates not strictly increasing at line {line} ({previous} then {current})")]
    NonMonotone {
        line: usize,
        previous: f64,
        current: f64,
    },

    #[error("{0}")]
    Coverage(String),

    #[error("requested height {t} exceeds the validated range |t| <= {limit}")]
    RangeCap { t: f64, limit: f64 },

    #[error("Newton iteration for Gram point {index} did not converge in {iterations} iterations")]
    NoConvergence { index: i64, iterations: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
