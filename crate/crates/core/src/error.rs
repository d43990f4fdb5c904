use thiserror::Error;

/// A failed identity, named together with the first basis witness that breaks it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub check: String,
    pub witness: String,
}

impl Violation {
    pub fn new(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Violation { check: check.into(), witness: witness.into() }
    }
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (witness: {})", self.check, self.witness)
    }
}

fn join(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("{0} is not a prime below 2^61")]
    NotPrime(u64),
    #[error("dependent relation basis")]
    DependentRelations,
    #[error("Hopf algebra axioms violated: {}", join(.0))]
    HopfAxioms(Vec<Violation>),
    #[error("module/comodule axioms violated: {}", join(.0))]
    Structure(Vec<Violation>),
    #[error("antipode is not invertible; {0} requires S^-1")]
    MissingAntipodeInverse(&'static str),
    #[error("no primitive {0}-th root of unity: {1}")]
    MissingRoot(usize, String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("not cleft: {0}")]
    NotCleft(String),
    #[error("invalid calculus ideal: {}", join(.0))]
    InvalidIdeal(Vec<Violation>),
    #[error("ill-defined {what}: {witness}")]
    IllDefined { what: String, witness: String },
    #[error("identity failed: {0}")]
    Identity(Violation),
    #[error("coaction not differentiable for this calculus: {0}")]
    NotDifferentiable(String),
    #[error("braiding defect: (id - sigma) singular on g^g")]
    BraidingDefect,
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn identity(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Error::Identity(Violation::new(check, witness))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
