use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Re ε(ω) + 2 has no sign change on the polariton band.
    #[error("no surface-polariton root of Re ε = -2 between {lower:e} and {upper:e} rad/s")]
    NoRoot { lower: f64, upper: f64 },

    /// ε(ω) = -2 exactly, so the Clausius-Mossotti factor is singular.
    #[error("polarizability pole at ω = {omega:e} rad/s")]
    Pole { omega: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quadrature did not converge after {subdivisions} subdivisions (value {value:e}, error estimate {abs_error:e})")]
    QuadratureFailure {
        value: f64,
        abs_error: f64,
        subdivisions: usize,
    },

    /// The coupling denominator nearly vanishes on the integration range.
    #[error("singular scenario: denominator minimum {min_denominator:e} at ω = {omega:e} rad/s (guard {threshold:e})")]
    SingularScenario {
        min_denominator: f64,
        omega: f64,
        threshold: f64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
