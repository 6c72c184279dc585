use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} out of range (need 2 <= q <= 255)")]
    Modulus(u32),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("weight {weight} out of range for modulus {q}")]
    WeightOutOfRange { weight: u32, q: u32 },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("mismatched operands: {0}")]
    Mismatch(String),
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("invalid family parameters: {0}")]
    FamilyParams(String),
    #[error("budget exceeded: need {required}, budget is {budget}")]
    Budget { required: u128, budget: u128 },
    #[error("point is not on the domain: coordinate sum {sum} != {a} (mod {q})")]
    OffDomain { sum: u32, a: u32, q: u32 },
    #[error("degree {0} exceeds 2")]
    NotQuadratic(usize),
    #[error("argument set {0:?} has inadmissible size")]
    SetSize(Vec<usize>),
    #[error("argument {index} out of range for arity {arity}")]
    ArgOutOfRange { index: usize, arity: usize },
    #[error("not a quasigroup table")]
    NotQuasigroup,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
