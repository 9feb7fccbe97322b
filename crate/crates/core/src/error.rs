use std::fmt;

/// Errors surfaced by the laboratory modules. Variant names double as the
/// machine-readable error names printed by the CLI diagnostics.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The evaluation policy cannot reach the requested accuracy at this
    /// height; raise the correction order or switch method.
    UnsupportedHeight { t: f64, detail: String },
    /// An evaluation budget (max_evals, max_points) was exhausted before
    /// convergence.
    BudgetExceeded { what: String, needed: usize, budget: usize },
    /// A table size exceeds the configured memory budget.
    CapacityExceeded { requested: usize, budget: usize },
    /// The divisor table does not cover the range a query needs.
    TableTooSmall { needed: usize, limit: usize },
    /// An argument lies outside the supported domain.
    DomainError(String),
    /// Normal equations of a least-squares fit are too ill-conditioned.
    IllConditioned { cond: f64 },
    /// The Mellin tail bound diverges for this (sigma, tail_exponent).
    TailDiverges { sigma: f64, tail_exponent: f64 },
    /// A configuration failed validation.
    ConfigInvalid(String),
    /// A result file does not match the schema a consumer expects.
    SchemaMismatch(String),
}

impl Error {
    /// Stable machine-readable name, one per variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UnsupportedHeight { .. } => "UnsupportedHeight",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::CapacityExceeded { .. } => "CapacityExceeded",
            Error::TableTooSmall { .. } => "TableTooSmall",
            Error::DomainError(_) => "DomainError",
            Error::IllConditioned { .. } => "IllConditioned",
            Error::TailDiverges { .. } => "TailDiverges",
            Error::ConfigInvalid(_) => "ConfigInvalid",
            Error::SchemaMismatch(_) => "SchemaMismatch",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedHeight { t, detail } => {
                write!(f, "UnsupportedHeight: t = {t}: {detail}")
            }
            Error::BudgetExceeded { what, needed, budget } => {
                write!(f, "BudgetExceeded: {what} needs {needed} > budget {budget}")
            }
            Error::CapacityExceeded { requested, budget } => {
                write!(f, "CapacityExceeded: requested {requested} > budget {budget}")
            }
            Error::TableTooSmall { needed, limit } => {
                write!(f, "TableTooSmall: need divisor table through {needed}, have {limit}")
            }
            Error::DomainError(msg) => write!(f, "DomainError: {msg}"),
            Error::IllConditioned { cond } => {
                write!(f, "IllConditioned: condition number {cond:.3e} exceeds 1e12")
            }
            Error::TailDiverges { sigma, tail_exponent } => write!(
                f,
                "TailDiverges: sigma = {sigma} must exceed 1 + tail_exponent = {}",
                1.0 + tail_exponent
            ),
            Error::ConfigInvalid(msg) => write!(f, "ConfigInvalid: {msg}"),
            Error::SchemaMismatch(msg) => write!(f, "SchemaMismatch: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
