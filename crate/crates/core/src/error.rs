use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument must be positive, got 0")]
    ZeroArgument,
    #[error("mismatched cyclotomic orders {0} and {1}")]
    MismatchedOrders(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, found: usize, expected: usize },
    #[error("hyperplane {index} has {found} coefficients, expected {expected}")]
    DimensionMismatch { index: usize, found: usize, expected: usize },
    #[error("hyperplane {0} has zero linear part")]
    ZeroLinearPart(usize),
    #[error("hyperplanes {0} and {1} are proportional")]
    DuplicateHyperplane(usize, usize),
    #[error("arrangement is not essential: linear parts have rank {rank}, ambient dimension is {dim}")]
    NotEssential { rank: usize, dim: usize },
    #[error("arrangement is not central")]
    NotCentral,
    #[error("hyperplane index {index} out of range (n = {n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index tuple {0:?} is not strictly increasing")]
    NonIncreasingTuple(Vec<usize>),
    #[error("weight vector has length {found}, expected {expected}")]
    WeightLength { found: usize, expected: usize },
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("asserted b_{q}(L^{k}_1) = {value} lies outside [{lower}..{upper}]")]
    AssertionOutOfBounds { k: u64, q: usize, value: u64, lower: u64, upper: u64 },
    #[error("asserted degree {q} exceeds ambient dimension {dim}")]
    AssertionDegree { q: usize, dim: usize },
    #[error("unresolved local Betti at k={k}: {}", format_intervals(.intervals))]
    Unresolved { k: u64, intervals: Vec<(usize, u64, u64)> },
    #[error("lower bound {lower} exceeds upper bound {upper} at k={k}, q={q}")]
    BoundsCrossed { k: u64, q: usize, lower: u64, upper: u64 },
    #[error("Euler characteristic mismatch at k={k}: expected {expected}, found {found}")]
    EulerMismatch { k: u64, expected: i64, found: i64 },
    #[error("{0} overflows u64")]
    Overflow(String),
    #[error("{context}: {message}")]
    Parse { context: String, message: String },
}

fn format_intervals(intervals: &[(usize, u64, u64)]) -> String {
    intervals
        .iter()
        .map(|(q, lo, hi)| format!("q={q} in [{lo}..{hi}]"))
        .collect::<Vec<_>>()
        .join(", ")
}
