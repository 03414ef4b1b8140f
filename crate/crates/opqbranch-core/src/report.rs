//! Sweep reports: what was checked, over which grid, and every
//! counterexample found.

use alloc::string::String;
use alloc::vec::Vec;

use crate::halfint::HalfInt;

/// The parameter grid a report covers. Signature ranges are inclusive;
/// `lambda_max` bounds the largest spectral parameter touched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSpec {
    pub p_min: u32,
    pub p_max: u32,
    pub q_min: u32,
    pub q_max: u32,
    pub lambda_max: HalfInt,
}

/// One counterexample: which check failed, at which parameters, and
/// the expected/actual pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub check: String,
    pub params: String,
    pub expected: String,
    pub got: String,
}

/// Result of an exhaustive verification sweep. The report passes iff
/// no failures were recorded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchingReport {
    pub grid: GridSpec,
    pub checks_run: u64,
    pub failures: Vec<Failure>,
}

impl BranchingReport {
    pub fn new(grid: GridSpec) -> Self {
        BranchingReport {
            grid,
            checks_run: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Folds another report into this one, keeping this grid. Used to
    /// merge per-signature sweeps into one report over the outer grid.
    pub fn absorb(&mut self, other: BranchingReport) {
        self.checks_run += other.checks_run;
        self.failures.extend(other.failures);
    }
}
