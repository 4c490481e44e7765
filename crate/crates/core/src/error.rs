use thiserror::Error;

pub type Result<T> = std::result::Result<T, EvalError>;

/// Failures raised while building or evaluating q-series objects.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EvalError {
    #[error("series is zero on its valid window, cannot invert")]
    ZeroLeadingCoefficient,
    #[error("infinite product ({0};q)_inf is not a formal power series")]
    NonformalInfiniteProduct(String),
    #[error("formal sum does not converge: term valuation stalls ({0})")]
    NonconvergentFormal(String),
    #[error("lower parameter {0} makes a Pochhammer factor vanish")]
    PoleInLowerParameter(String),
    #[error("term ratio does not contract (max observed ratio {ratio:.4}) after {terms} terms")]
    RatioNotContracting { ratio: f64, terms: usize },
    #[error("division by zero in {0}")]
    DivisionByZero(String),
    #[error("error ball swallowed the divisor: {0}")]
    PrecisionLoss(String),
    #[error("term {index} has valuation {actual}, below the declared bound {declared}")]
    ValuationBound { index: i64, actual: i64, declared: i64 },
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),
    #[error("pole guard violated: {0}")]
    PoleGuardViolation(String),
    #[error("no admissible binding for {id} after {attempts} rejections")]
    SamplingExhausted { id: String, attempts: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl EvalError {
    /// True for errors that mean "this binding sits on a pole" rather than a
    /// defect in the identity or the engine.
    pub fn is_pole(&self) -> bool {
        matches!(
            self,
            EvalError::DivisionByZero(_)
                | EvalError::ZeroLeadingCoefficient
                | EvalError::PoleInLowerParameter(_)
                | EvalError::PoleGuardViolation(_)
                | EvalError::PrecisionLoss(_)
        )
    }
}
