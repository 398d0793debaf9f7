//! Exact tooling for finite left non-degenerate set-theoretic solutions of the
//! Yang–Baxter equation: braided sets and cycle sets, the guitar map, boundary
//! families and their homology, cocycle extensions and multipermutation search.

pub mod complexes;
pub mod extensions;
pub mod fixtures;
pub mod guitar;
pub mod homology;
pub mod io;
pub mod multipermutation;
pub mod structures;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table entry out of range: {0}")]
    Range(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("Yang-Baxter equation fails on triple {0:?}")]
    YbeViolation((usize, usize, usize)),
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("cycle property fails on triple {0:?}")]
    CycleViolation((usize, usize, usize)),
    #[error("self-distributivity fails on triple {0:?}")]
    SdViolation((usize, usize, usize)),
    #[error("module compatibility fails on triple {0:?}")]
    ModuleViolation((usize, usize, usize)),
    #[error("multiplication is not associative on triple {0:?}")]
    NotAssociative((usize, usize, usize)),
    #[error("element {0} is not a two-sided unit")]
    NotUnit(usize),
    #[error("braided set is not left non-degenerate")]
    NotLeftNondegenerate,
    #[error("braiding is not invertible")]
    NotInvertible,
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error("model has no degeneracies")]
    NoDegeneracies,
    #[error("not a chain complex in degree {0}")]
    NotAComplex(usize),
    #[error("splitting failed: {0}")]
    SplittingFailure(String),
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("cochain is not a 2-cocycle")]
    NotACocycle,
    #[error("not a section of the projection")]
    NotASection,
    #[error("cochain pair is not compatible: {0}")]
    NotCompatible(String),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("cycle set is degenerate (squaring map is not bijective)")]
    Degenerate,
    #[error("cycle set is not square-free")]
    NotSquareFree,
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Outcome of an exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct CheckReport {
    pub passed: bool,
    pub checked: usize,
    pub failure: Option<String>,
}

impl CheckReport {
    pub(crate) fn new() -> Self {
        CheckReport { passed: true, checked: 0, failure: None }
    }

    /// Records one identity; keeps the first failure message.
    pub(crate) fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.failure = Some(witness());
        }
    }
}

/// All tuples of length `k` over `0..n`, in lexicographic order.
pub fn tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let total = n.checked_pow(k as u32).expect("tuple count overflow");
    let mut out = Vec::with_capacity(total);
    let mut cur = vec![0; k];
    for _ in 0..total {
        out.push(cur.clone());
        for j in (0..k).rev() {
            cur[j] += 1;
            if cur[j] < n {
                break;
            }
            cur[j] = 0;
        }
    }
    out
}
