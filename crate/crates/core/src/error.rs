use thiserror::Error;

/// Everything that can go wrong while building or certifying orbit systems.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("elements belong to different groups")]
    GroupMismatch,

    #[error("operator is not in the right group algebra (commutator defect {defect:.3e})")]
    NotInAlgebra { defect: f64 },

    #[error("operator is not Hermitian (defect {defect:.3e})")]
    NotHermitian { defect: f64 },

    #[error("operator is not positive semidefinite (min eigenvalue {min_eigenvalue:.3e})")]
    NotPsd { min_eigenvalue: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix for element {element} is not unitary (defect {defect:.3e})")]
    NotUnitary { element: usize, defect: f64 },

    #[error("Pi({first})Pi({second}) != Pi({first}*{second}) (defect {defect:.3e})")]
    NotHomomorphism { first: usize, second: usize, defect: f64 },

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("generator vector is zero")]
    ZeroGenerator,

    #[error("span is not invariant under element {element} (defect {defect:.3e})")]
    NotInvariant { element: usize, defect: f64 },

    #[error("action is not free: element {element} fixes point {point}")]
    NotFree { point: usize, element: usize },

    #[error("invalid tiling set: {0}")]
    InvalidTiling(String),

    #[error("fiber mismatch: expected {expected} fibers, found {found}")]
    FiberMismatch { expected: usize, found: usize },

    #[error("orbit is not minimal: bracket min eigenvalue {min_eigenvalue:.3e}")]
    NotMinimal { min_eigenvalue: f64 },

    #[error("vector is not in the principal space (residual {residual:.3e})")]
    NotInPrincipalSpace { residual: f64 },

    #[error("degenerate comb: {0}")]
    DegenerateComb(String),

    #[error("group is not cyclic in canonical form")]
    NotCyclic,

    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// True for failures of a mathematical certification, as opposed to bad input.
    pub fn is_certification_failure(&self) -> bool {
        matches!(
            self,
            Error::NotMinimal { .. }
                | Error::NotInPrincipalSpace { .. }
                | Error::NotFree { .. }
                | Error::NotInvariant { .. }
                | Error::NotInAlgebra { .. }
                | Error::NotPsd { .. }
                | Error::NotHermitian { .. }
        )
    }

    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }
}
