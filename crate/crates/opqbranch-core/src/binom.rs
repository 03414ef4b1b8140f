//! Exact binomial coefficients with the combinatorial zero convention.

use core::fmt;

/// The binomial value would not fit in a `u64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BinomialOverflow {
    pub n: u64,
    pub k: i64,
}

impl fmt::Display for BinomialOverflow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "binomial({}, {}) exceeds u64", self.n, self.k)
    }
}

/// C(n, k), with C(n, k) = 0 for k < 0 or k > n.
///
/// Computed multiplicatively; every intermediate product is an exact
/// multiple of its divisor, so the division below is exact. Intermediates
/// use `u128` so the only failure mode is a final value above `u64::MAX`.
pub fn binomial(n: u64, k: i64) -> Result<u64, BinomialOverflow> {
    if k < 0 || k as u64 > n {
        return Ok(0);
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(BinomialOverflow { n, k: k as i64 })?;
        acc /= (i + 1) as u128;
    }
    u64::try_from(acc).map_err(|_| BinomialOverflow { n, k: k as i64 })
}
