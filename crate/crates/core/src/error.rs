use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("directed cycle through vertex {0}")]
    CycleDetected(usize),
    #[error("vertex index {index} out of range for {len} vertices")]
    BadIndex { index: usize, len: usize },
    #[error("invalid weight {weight} at vertex {vertex}: weights must be finite and nonnegative")]
    BadWeight { vertex: usize, weight: f64 },
    #[error("vertex {0} is not in the universe")]
    VertexNotInUniverse(usize),
    #[error("vertex {vertex} appears in {count} sets, allowed range is 1..={bound}")]
    Multiplicity { vertex: usize, count: usize, bound: usize },
    #[error("set {set} is not an antichain: edge {from} -> {to}")]
    NotAntichain { set: usize, from: usize, to: usize },
    #[error("exponential mechanism called with an empty support")]
    EmptySupport,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("malformed interval [{l}, {r}) at item {index}")]
    MalformedInterval { index: usize, l: f64, r: f64 },
    #[error("instance too large: {what} = {size} exceeds cap {cap}")]
    InstanceTooLarge { what: &'static str, size: u64, cap: u64 },
    #[error("distribution support of size {size} exceeds cap {cap}")]
    SupportTooLarge { size: usize, cap: usize },
    #[error("index {0} is used by more than one pair")]
    DuplicateIndex(usize),
    #[error("triples at list position {0} are incomparable")]
    IncomparableTriples(usize),
    #[error("chain decodes to an infeasible folding: {0}")]
    InfeasibleChain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
