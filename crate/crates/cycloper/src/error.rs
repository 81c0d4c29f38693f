use cycloper_arith::ArithError;
use cycloper_lie::LieError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CoreError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("connection is not in oper form: {0}")]
    MalformedOper(String),
    #[error("pole at {point} is not regular singular (basis component {component})")]
    NotRegularSingular { point: String, component: usize },
    #[error("connection does not have the required shape: {0}")]
    Shape(String),
    #[error("Miura oper is not of the expected general form: {0}")]
    NotOfForm(String),
    #[error("coweight {0} is not integral")]
    NonIntegralCoweight(String),
    #[error("points {0} and {1} lie in the same orbit of the rotation group")]
    OrbitCollision(String, String),
    #[error("nonzero residues {residues:?} block integration at height {level:?}")]
    Monodromy { residues: Vec<(String, String)>, level: Option<usize> },
    #[error("element is not in the open cell: minor {minor} vanishes")]
    NotInOpenCell { minor: String },
    #[error("Riccati equation has no rational solution: {0}")]
    NoRationalSolution(String),
    #[error("function does not solve the Riccati equation, residual {0}")]
    RiccatiViolated(String),
    #[error("cyclotomy obstruction: {0}")]
    CyclotomyObstruction(String),
    #[error("seed does not solve the reproduction system: {0}")]
    SeedNotSolution(String),
    #[error("seed is not fixed by the automorphism")]
    FixedPointViolation,
    #[error("no representative with dominant shifted coweight in the orbit of {0}")]
    NoDominantRepresentative(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl CoreError {
    /// Exit-code family used by the command line front end.
    pub fn family(&self) -> ErrorFamily {
        use CoreError::*;
        match self {
            Lie(_) | NonIntegralCoweight(_) | NotInOpenCell { .. } | NoDominantRepresentative(_) => ErrorFamily::Algebra,
            Arith(ArithError::Parse { .. }) | Arith(ArithError::UnboundSymbol(_)) => ErrorFamily::Parse,
            Arith(_) | NotRegularSingular { .. } | Monodromy { .. } | NoRationalSolution(_) => ErrorFamily::Analytic,
            CyclotomyObstruction(_) | SeedNotSolution(_) | RiccatiViolated(_) | FixedPointViolation => ErrorFamily::Cyclotomy,
            MalformedOper(_) | Shape(_) | NotOfForm(_) | OrbitCollision(..) | InvalidInput(_) => ErrorFamily::Validation,
            Internal(_) => ErrorFamily::Algebra,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorFamily {
    Parse,
    Validation,
    Algebra,
    Analytic,
    Cyclotomy,
}

pub type Result<T> = std::result::Result<T, CoreError>;
