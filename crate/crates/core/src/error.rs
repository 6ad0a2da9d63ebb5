use thiserror::Error;

/// Errors raised anywhere in the synthesis and validation pipeline.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {left} qubits vs {right} qubits")]
    DimensionMismatch { left: usize, right: usize },

    #[error("qubit count {0} is out of range (supported: 1..=64)")]
    QubitCount(usize),

    #[error("bits set beyond qubit count {n}")]
    StrayBits { n: usize },

    #[error("expected a diagonal (Z-type) Pauli string, got {0}")]
    NotDiagonal(String),

    #[error("expected an X-type Pauli string, got {0}")]
    NotXType(String),

    #[error("Pauli string {0} is not Hermitian")]
    NotHermitian(String),

    #[error("cannot parse {what}: {detail}")]
    Parse { what: &'static str, detail: String },

    #[error("states are identical; no logical X exists")]
    IdenticalStates,

    #[error("need at least two feasible states")]
    TooFewStates,

    #[error("duplicate feasible state {0}")]
    DuplicateState(String),

    #[error("line {line}: expected {expected} bits, found {found}")]
    LineLength { line: usize, expected: usize, found: usize },

    #[error("error {0} commutes with every generator; the code space would not double")]
    UndetectableError(String),

    #[error("generators are not independent")]
    DependentGenerators,

    #[error("group enumeration guard exceeded: {0} generators (max 20)")]
    EnumerationGuard(usize),

    #[error("outside state {0} lies in the code space")]
    OutsideInCodeSpace(String),

    #[error("row for state {0} is unbalanced; the column set is not a full stabilizer group")]
    UnbalancedRow(String),

    #[error("projector is not 0/1-valued on feasible state {0}")]
    NonBinaryProjector(String),

    #[error("invalid Hamming-weight range k1={k1}, k2={k2} for n={n}")]
    InvalidRange { n: usize, k1: usize, k2: usize },

    #[error("qubit blocks overlap or are not contiguous")]
    OverlappingBlocks,

    #[error("simulation limited to {max} qubits, requested {requested}")]
    SimulationTooLarge { requested: usize, max: usize },

    #[error("layout mismatch: {0}")]
    Layout(String),

    #[error("invalid plan: {0}")]
    InvalidPlan(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
