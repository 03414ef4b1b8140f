//! Independent checks at the compact limit q = 0.
//!
//! With q = 0 the branching law degenerates to the classical one-row
//! restriction rule for rotation groups, and spherical-harmonic
//! dimensions can be recomputed from scratch as Laplacian kernel
//! dimensions on monomial bases. Neither path shares code with the
//! closed-form engine, so agreement is meaningful evidence.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::halfint::HalfInt;
use crate::intmat::integer_rank;
use crate::rep::harmonic_dim;
use crate::report::{BranchingReport, Failure, GridSpec};

/// An irreducible representation of the rotation group in `p`
/// variables with one-row highest weight (ell, 0, ..., 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompactRep {
    p: u32,
    ell: u32,
}

impl CompactRep {
    pub fn new(p: u32, ell: u32) -> Result<Self, OracleError> {
        if p < 3 {
            return Err(OracleError::Scale {
                what: "p",
                value: p,
                min: 3,
                max: u32::MAX,
            });
        }
        Ok(CompactRep { p, ell })
    }

    pub const fn p(self) -> u32 {
        self.p
    }

    pub const fn ell(self) -> u32 {
        self.ell
    }
}

/// A parameter is outside the range an oracle operation supports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleError {
    Scale {
        what: &'static str,
        value: u32,
        min: u32,
        max: u32,
    },
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OracleError::Scale {
                what,
                value,
                min,
                max,
            } => {
                if max == u32::MAX {
                    write!(f, "{what} = {value} is below the supported minimum {min}")
                } else {
                    write!(
                        f,
                        "{what} = {value} is outside the supported range {min}..={max}"
                    )
                }
            }
        }
    }
}

impl core::error::Error for OracleError {}

/// First entries of the highest weights occurring when the one-row
/// representation (ell, 0, ..., 0) restricts one rank down: every
/// value from 0 through ell, each once.
pub fn classical_branching(r: &CompactRep) -> BTreeSet<u32> {
    (0..=r.ell).collect()
}

/// All exponent vectors of length `n` summing to `d`, lexicographic.
fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn go(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            go(i + 1, left - v, cur, out);
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    go(0, d, &mut cur, &mut out);
    out
}

const BRUTE_N_MAX: u32 = 6;
const BRUTE_B_MAX: u32 = 6;

/// Dimension of the degree-b harmonic polynomials in n variables,
/// from first principles: the Laplacian is written out as an exact
/// integer matrix on the monomial basis and its kernel dimension is
/// the column count minus the rank.
pub fn brute_force_harmonic_dim(n: u32, b: u32) -> Result<u64, OracleError> {
    if !(1..=BRUTE_N_MAX).contains(&n) {
        return Err(OracleError::Scale {
            what: "n",
            value: n,
            min: 1,
            max: BRUTE_N_MAX,
        });
    }
    if b > BRUTE_B_MAX {
        return Err(OracleError::Scale {
            what: "b",
            value: b,
            min: 0,
            max: BRUTE_B_MAX,
        });
    }
    let cols = monomials(n as usize, b);
    if b < 2 {
        // the Laplacian is the zero map out of degrees 0 and 1
        return Ok(cols.len() as u64);
    }
    let rows = monomials(n as usize, b - 2);
    let row_index: BTreeMap<&[u32], usize> =
        rows.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    // matrix of the Laplacian: column alpha sends weight a_i(a_i - 1)
    // to the row alpha - 2 e_i for every i with a_i >= 2
    let mut matrix = vec![vec![BigInt::zero(); cols.len()]; rows.len()];
    for (j, alpha) in cols.iter().enumerate() {
        let mut beta = alpha.clone();
        for i in 0..alpha.len() {
            let a = alpha[i];
            if a < 2 {
                continue;
            }
            beta[i] = a - 2;
            let r = row_index[beta.as_slice()];
            matrix[r][j] = BigInt::from(a as u64 * (a as u64 - 1));
            beta[i] = a;
        }
    }
    Ok((cols.len() - integer_rank(matrix)) as u64)
}

const COMPACT_P_MIN: u32 = 3;
const COMPACT_P_MAX: u32 = 10;

/// Cross-checks the branching engine against the compact limit for
/// one rotation group of rank parameter `p`.
///
/// For each ell >= 0 with lambda = ell + p/2 <= lambda_max, two checks
/// run: the spectrum-side parameter set {mu = lambda - 1/2 - n with
/// mu >= (p-1)/2}, shifted by m = mu - (p-1)/2, must biject onto the
/// classical branching set {0..=ell}; and the dimensions must add up,
/// harmonic_dim(p, ell) = sum of harmonic_dim(p-1, m) over that set.
pub fn compact_consistency(
    p: u32,
    lambda_max: HalfInt,
) -> Result<BranchingReport, OracleError> {
    if !(COMPACT_P_MIN..=COMPACT_P_MAX).contains(&p) {
        return Err(OracleError::Scale {
            what: "p",
            value: p,
            min: COMPACT_P_MIN,
            max: COMPACT_P_MAX,
        });
    }
    let mut report = BranchingReport::new(GridSpec {
        p_min: p,
        p_max: p,
        q_min: 0,
        q_max: 0,
        lambda_max,
    });
    for ell in 0u32.. {
        let lambda = HalfInt::from_twice(2 * ell as i64 + p as i64);
        if lambda > lambda_max {
            break;
        }
        // restrict the spectrum-side parameters to the dominant cone
        let mut mapped = BTreeSet::new();
        let mut sources = 0u32;
        for n in 0u32.. {
            let twice_mu = lambda.twice() - 1 - 2 * n as i64;
            if twice_mu < (p - 1) as i64 {
                break;
            }
            mapped.insert(((twice_mu - (p - 1) as i64) / 2) as u32);
            sources += 1;
        }
        let expected = classical_branching(&CompactRep::new(p, ell).expect("p checked"));
        report.checks_run += 1;
        if mapped != expected || sources as usize != mapped.len() {
            report.failures.push(Failure {
                check: "compact_branching_bijection".to_string(),
                params: format!("p={p} ell={ell}"),
                expected: format!("{expected:?}"),
                got: format!("{mapped:?} from {sources} sources"),
            });
        }
        let total: u64 = mapped.iter().map(|&m| harmonic_dim(p - 1, m as i64)).sum();
        let whole = harmonic_dim(p, ell as i64);
        report.checks_run += 1;
        if whole != total {
            report.failures.push(Failure {
                check: "compact_dimension_conservation".to_string(),
                params: format!("p={p} ell={ell}"),
                expected: whole.to_string(),
                got: total.to_string(),
            });
        }
    }
    Ok(report)
}
