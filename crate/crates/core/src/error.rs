use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the underlying set must be non-empty (n = 0)")]
    EmptySet,

    #[error("dimension mismatch in {table}: expected {expected}, found {found}")]
    DimensionMismatch {
        table: &'static str,
        expected: String,
        found: String,
    },

    #[error("entry out of range in {table}[{row}][{col}]: {value} is not in [0, {n})")]
    EntryOutOfRange {
        table: &'static str,
        row: usize,
        col: usize,
        value: usize,
        n: usize,
    },

    #[error("letter {letter} is not a generator of a set of size {n}")]
    LetterOutOfRange { letter: usize, n: usize },

    #[error("solution is not left non-degenerate (sigma_{0} is not bijective)")]
    NotLeftNondegenerate(usize),

    #[error("gamma_{0} is not bijective")]
    GammaNotBijective(usize),

    #[error("degree {degree} exceeds the configured maximum degree {max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("resource guard: {words} words at degree {degree} exceeds the limit of {limit}; lower the maximum degree")]
    ResourceGuard {
        degree: usize,
        words: u128,
        limit: u64,
    },

    #[error("no class c of degree {degree} with b + c = a + b inside the window; enlarge the window")]
    NoDifference { degree: usize },

    #[error("{count} classes c satisfy b + c = a + b inside the window; the window is not yet left cancellative")]
    AmbiguousDifference { count: usize },

    #[error("n = {n} is not supported here (supported: {supported})")]
    UnsupportedSize { n: usize, supported: &'static str },

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}
