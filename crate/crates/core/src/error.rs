use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a}x + {b}y = {c} has no integer solution")]
    NoSolution { a: i64, b: i64, c: i64 },
    #[error("value {value} outside [{lo}, {hi}]")]
    InvalidRange { value: i64, lo: i64, hi: i64 },
    #[error("gcd({n}, {k}) = {gcd}, expected 1")]
    NotCoprime { n: usize, k: usize, gcd: usize },
    #[error("order {0} is too small, need at least 3 vertices")]
    OrderTooSmall(usize),
    #[error("jump {jump} is invalid for n = {n}")]
    InvalidJump { n: usize, jump: usize },
    #[error("jumps {jumps:?} collapse to a smaller set modulo {n}")]
    DuplicateJump { n: usize, jumps: Vec<usize> },
    #[error("jumps {k1} and {k2} coincide modulo {n}")]
    JumpCoincidence { n: usize, k1: usize, k2: usize },
    #[error("k = {k} outside [{lo}, {hi}] for n = {n}")]
    KOutOfRange {
        n: usize,
        k: usize,
        lo: usize,
        hi: usize,
    },
    #[error("graph is not of the form C(n, k): jumps {0:?}")]
    NotSingleStep(Vec<usize>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("certificate covers {found} vertices, target has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("vertex {0} is not in the layout")]
    UnknownVertex(usize),
    #[error("exhaustive search limited to n <= {max}, got n = {n}")]
    TooLarge { n: usize, max: usize },
    #[error("no layout embeds the graph in at most {0} pages")]
    ExceedsCap(usize),
    #[error("no construction available for C({n}, {k})")]
    Unsupported { n: usize, k: usize },
}
