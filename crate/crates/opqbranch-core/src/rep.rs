//! Representation data model for the indefinite orthogonal families.
//!
//! A [`Rep`] names one member of the two one-parameter families of
//! irreducible unitary representations attached to a signature (p, q):
//! the `+` family modeled on harmonics of the first factor and the `-`
//! family modeled on harmonics of the second. The model tracks the
//! zero-representation convention at the degenerate signatures, the
//! regularity threshold, canonical infinitesimal characters, minimal
//! K-types, and spherical-harmonic dimensions.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::binom::binomial;
use crate::halfint::HalfInt;

/// Which of the two families a representation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Failure to read a sign from text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseSignError;

impl fmt::Display for ParseSignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected \"+\" or \"-\"")
    }
}

impl core::error::Error for ParseSignError {}

impl FromStr for Sign {
    type Err = ParseSignError;

    fn from_str(s: &str) -> Result<Self, ParseSignError> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            _ => Err(ParseSignError),
        }
    }
}

/// A signature (p, q) with p >= 1.
///
/// Construction is permissive (q = 0 is allowed; the compact oracle
/// lives there). The stricter window on which the packet theorems are
/// stated is the separate predicate [`Signature::in_theorem_range`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    p: u32,
    q: u32,
}

impl Signature {
    pub fn new(p: u32, q: u32) -> Result<Self, RepError> {
        if p == 0 {
            return Err(RepError::Signature { p, q });
        }
        Ok(Signature { p, q })
    }

    pub const fn p(self) -> u32 {
        self.p
    }

    pub const fn q(self) -> u32 {
        self.q
    }

    pub const fn sum(self) -> u32 {
        self.p + self.q
    }

    /// The window p >= 3, q >= 2 on which the packet multiplicity
    /// theorems are stated.
    pub const fn in_theorem_range(self) -> bool {
        self.p >= 3 && self.q >= 2
    }

    /// The signature (p-1, q) of the subgroup the branching laws
    /// restrict to; undefined when p = 1.
    pub fn subgroup(self) -> Option<Signature> {
        if self.p >= 2 {
            Some(Signature {
                p: self.p - 1,
                q: self.q,
            })
        } else {
            None
        }
    }

    /// True iff `lambda` lies in Z + (p+q)/2, the parameter lattice of
    /// this signature's families.
    pub fn parity_ok(self, lambda: HalfInt) -> bool {
        (lambda.twice() - self.sum() as i64) % 2 == 0
    }

    /// (p+q-2)/2: parameters at or above it are regular, and it is
    /// also the leading entry of the trivial infinitesimal character.
    pub fn regular_threshold(self) -> HalfInt {
        HalfInt::from_twice(self.sum() as i64 - 2)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Invalid representation data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RepError {
    /// p = 0 is not a signature of an orthogonal family.
    Signature { p: u32, q: u32 },
    /// The parameter lies outside the lattice Z + (p+q)/2.
    Parity { sig: Signature, lambda: HalfInt },
    /// The parameter is not positive.
    Range { lambda: HalfInt },
    /// The requested invariant is undefined on the zero representation.
    ZeroRep,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::Signature { p, q } => {
                write!(f, "signature ({p},{q}) is invalid: p must be at least 1")
            }
            RepError::Parity { sig, lambda } => {
                let residue = HalfInt::from_twice((sig.sum() % 2) as i64);
                write!(
                    f,
                    "lambda = {lambda} has the wrong parity for signature {sig}: \
                     the parameter must lie in Z + {residue}"
                )
            }
            RepError::Range { lambda } => {
                write!(f, "parameter must be positive, got {lambda}")
            }
            RepError::ZeroRep => {
                f.write_str("the zero representation carries no invariants")
            }
        }
    }
}

impl core::error::Error for RepError {}

/// One member of the two families on a signature (p, q).
///
/// `is_zero` records the convention that the `+` family degenerates to
/// the zero representation when p = 1, and the `-` family when q = 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    sig: Signature,
    sign: Sign,
    lambda: HalfInt,
    is_zero: bool,
}

impl Rep {
    /// Validates parity (lambda in Z + (p+q)/2) and positivity, then
    /// applies the zero-representation convention.
    pub fn new(sig: Signature, sign: Sign, lambda: HalfInt) -> Result<Self, RepError> {
        if !sig.parity_ok(lambda) {
            return Err(RepError::Parity { sig, lambda });
        }
        if !lambda.is_positive() {
            return Err(RepError::Range { lambda });
        }
        let is_zero = match sign {
            Sign::Plus => sig.p() == 1,
            Sign::Minus => sig.q() == 1,
        };
        Ok(Rep {
            sig,
            sign,
            lambda,
            is_zero,
        })
    }

    pub const fn sig(&self) -> Signature {
        self.sig
    }

    pub const fn sign(&self) -> Sign {
        self.sign
    }

    pub const fn lambda(&self) -> HalfInt {
        self.lambda
    }

    pub const fn is_zero(&self) -> bool {
        self.is_zero
    }

    /// True iff lambda >= (p+q-2)/2 on this representation's own
    /// signature; regular parameters share their infinitesimal
    /// character with a finite-dimensional representation.
    pub fn is_regular(&self) -> bool {
        self.lambda >= self.sig.regular_threshold()
    }

    /// The canonical infinitesimal character (lambda, s-1, s-2, ...)
    /// with s = (p+q-2)/2, of length floor((p+q)/2).
    pub fn inf_char(&self) -> Result<InfChar, RepError> {
        if self.is_zero {
            return Err(RepError::ZeroRep);
        }
        let m = (self.sig.sum() / 2) as usize;
        let mut raw = Vec::with_capacity(m);
        if m > 0 {
            raw.push(self.lambda);
            let s = self.sig.regular_threshold();
            for i in 1..m {
                raw.push(s - HalfInt::from_int(i as i64));
            }
        }
        Ok(InfChar::canonicalize(&raw))
    }

    /// The lowest maximal-compact type: a harmonic degree on the first
    /// factor for the `+` family, on the second for the `-` family,
    /// truncated to the trivial type when the degree formula goes
    /// negative.
    pub fn minimal_k_type(&self) -> Result<KType, RepError> {
        if self.is_zero {
            return Err(RepError::ZeroRep);
        }
        let p = self.sig.p() as i64;
        let q = self.sig.q() as i64;
        // degree = lambda - (p-q-2)/2 on the + side, mirror on the - side;
        // integral whenever the parity invariant holds
        let offset = match self.sign {
            Sign::Plus => HalfInt::from_twice(p - q - 2),
            Sign::Minus => HalfInt::from_twice(q - p - 2),
        };
        let degree = self.lambda - offset;
        let degree = if degree.is_positive() {
            (degree.twice() / 2) as u64
        } else {
            0
        };
        Ok(match self.sign {
            Sign::Plus => KType { a: degree, b: 0 },
            Sign::Minus => KType { a: 0, b: degree },
        })
    }
}

/// The pair of family members sharing one parameter on one signature.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Packet {
    plus: Rep,
    minus: Rep,
}

impl Packet {
    pub fn new(sig: Signature, lambda: HalfInt) -> Result<Self, RepError> {
        Ok(Packet {
            plus: Rep::new(sig, Sign::Plus, lambda)?,
            minus: Rep::new(sig, Sign::Minus, lambda)?,
        })
    }

    pub const fn plus(&self) -> &Rep {
        &self.plus
    }

    pub const fn minus(&self) -> &Rep {
        &self.minus
    }

    pub const fn sig(&self) -> Signature {
        self.plus.sig
    }

    pub const fn lambda(&self) -> HalfInt {
        self.plus.lambda
    }

    pub fn member(&self, sign: Sign) -> &Rep {
        match sign {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }
}

/// An infinitesimal character in canonical form: absolute values of
/// the entries, sorted non-increasing. Canonical forms are equal iff
/// the underlying characters agree up to permutations and sign flips.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InfChar {
    entries: Vec<HalfInt>,
}

impl InfChar {
    /// The orbit representative of `raw` under permutations and entry
    /// sign flips. Idempotent.
    pub fn canonicalize(raw: &[HalfInt]) -> InfChar {
        let mut entries: Vec<HalfInt> = raw.iter().map(|x| x.abs()).collect();
        entries.sort_unstable_by(|a, b| b.cmp(a));
        InfChar { entries }
    }

    /// The infinitesimal character (s, s-1, ..., 0 or 1/2) of the
    /// trivial representation on `sig`, with s = (p+q-2)/2.
    pub fn trivial(sig: Signature) -> InfChar {
        let m = (sig.sum() / 2) as usize;
        let s = sig.regular_threshold();
        let entries = (0..m)
            .map(|i| s - HalfInt::from_int(i as i64))
            .collect();
        InfChar { entries }
    }

    pub fn entries(&self) -> &[HalfInt] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn first(&self) -> Option<HalfInt> {
        self.entries.first().copied()
    }

    /// Everything after the leading entry.
    pub fn tail(&self) -> &[HalfInt] {
        self.entries.get(1..).unwrap_or(&[])
    }
}

impl fmt::Display for InfChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

/// The last entry of the trivial infinitesimal character string on a
/// group of total dimension parameter `n`: 0 for n even, 1/2 for n odd.
pub fn inf_char_tail_end(n: u32) -> HalfInt {
    HalfInt::from_twice((n % 2) as i64)
}

/// An irreducible type of the maximal compact subgroup: harmonics of
/// degree `a` on the first factor tensored with harmonics of degree
/// `b` on the second. Degree 0 is the trivial factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct KType {
    pub a: u64,
    pub b: u64,
}

/// Dimension of the space of degree-b harmonic homogeneous polynomials
/// in n variables: C(n+b-1, b) - C(n+b-3, b-2), and 0 for b < 0.
///
/// Panics on u64 overflow (detected by the binomial layer) and on
/// n = 0; neither is reachable at the parameter scales of this crate.
pub fn harmonic_dim(n: u32, b: i64) -> u64 {
    assert!(n >= 1, "harmonic_dim needs at least one variable");
    if b < 0 {
        return 0;
    }
    let n = n as u64;
    let b_u = b as u64;
    let first = binomial(n + b_u - 1, b).expect("harmonic_dim overflows u64");
    let second = if b >= 2 {
        binomial(n + b_u - 3, b - 2).expect("harmonic_dim overflows u64")
    } else {
        0
    };
    first - second
}
