//! The multiplicity engine: closed-form branching multiplicities for
//! the restriction from signature (p, q) to (p-1, q), discrete-spectrum
//! enumeration with rank-one character tracking, interlacing predicates
//! on infinitesimal characters, packet theorems, and the exhaustive
//! cross-checks tying them together.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::halfint::HalfInt;
use crate::rep::{InfChar, Rep, RepError, Sign, Signature};
use crate::report::{BranchingReport, Failure, GridSpec};

/// A character of the rank-one compact factor split off by the
/// restriction; powers of the nontrivial one alternate with the index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OneChar {
    Trivial,
    Sgn,
}

impl OneChar {
    /// The n-th power of the nontrivial character.
    pub fn sgn_pow(n: u32) -> OneChar {
        if n.is_multiple_of(2) {
            OneChar::Trivial
        } else {
            OneChar::Sgn
        }
    }
}

impl fmt::Display for OneChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OneChar::Trivial => "trivial",
            OneChar::Sgn => "sgn",
        })
    }
}

/// Failure to read a rank-one character from text.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParseOneCharError;

impl fmt::Display for ParseOneCharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected \"trivial\" or \"sgn\"")
    }
}

impl core::error::Error for ParseOneCharError {}

impl FromStr for OneChar {
    type Err = ParseOneCharError;

    fn from_str(s: &str) -> Result<Self, ParseOneCharError> {
        match s {
            "trivial" => Ok(OneChar::Trivial),
            "sgn" => Ok(OneChar::Sgn),
            _ => Err(ParseOneCharError),
        }
    }
}

/// One discrete summand of a restriction: the subgroup representation,
/// the accompanying rank-one character, and the index it came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub rep: Rep,
    pub ochar: OneChar,
    pub n: u32,
}

/// The discrete spectrum of a restriction, or a prefix of it.
///
/// `truncated` is true exactly when the underlying sum is infinite and
/// only the first entries are listed. Summands that degenerate to the
/// zero representation are dropped from `entries` and counted in
/// `omitted_zero_reps` instead.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    pub entries: Vec<SpectrumEntry>,
    pub truncated: bool,
    pub omitted_zero_reps: u32,
}

/// Default prefix length for the infinite spectra of the `-` family.
pub const DEFAULT_MAX_ENTRIES: u32 = 16;

/// Which interlacing chain to test between two infinitesimal
/// characters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InterlacingKind {
    /// Subgroup parameter leads: the discretely decomposable family.
    Discrete,
    /// Big-group parameter leads: the finite-type family.
    Finite,
}

/// The unique sign pair carrying the packet's multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PacketPartner {
    pub big_member: Sign,
    pub small_member: Sign,
}

/// Multiplicities of one subgroup parameter against both packet
/// members, split by sign pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PacketBranching {
    /// Order: (+,+), (+,-), (-,+), (-,-).
    pub by_pair: [u32; 4],
}

impl PacketBranching {
    pub fn total(&self) -> u32 {
        self.by_pair.iter().sum()
    }

    /// The carrying pair, when the total is exactly one.
    pub fn witness(&self) -> Option<PacketPartner> {
        if self.total() != 1 {
            return None;
        }
        const PAIRS: [(Sign, Sign); 4] = [
            (Sign::Plus, Sign::Plus),
            (Sign::Plus, Sign::Minus),
            (Sign::Minus, Sign::Plus),
            (Sign::Minus, Sign::Minus),
        ];
        let i = self.by_pair.iter().position(|&m| m == 1)?;
        Some(PacketPartner {
            big_member: PAIRS[i].0,
            small_member: PAIRS[i].1,
        })
    }
}

/// Errors of the branching operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BranchError {
    /// The second representation does not live on (p-1, q).
    SignatureMismatch { big: Signature, small: Signature },
    /// p = 1: there is no subgroup signature to restrict to.
    SubgroupUndefined { sig: Signature },
    /// Outside the window p >= 3, q >= 2 of the packet theorems.
    TheoremRange { sig: Signature },
    /// A parameter required to be regular is below its threshold.
    NotRegular {
        name: &'static str,
        value: HalfInt,
        threshold: HalfInt,
    },
    /// Infinitesimal character lengths fit no signature pair.
    Length { big_len: usize, small_len: usize },
    /// An infinitesimal character lacks the family tail shape.
    Domain { side: &'static str },
    /// Invalid representation data.
    Rep(RepError),
}

impl From<RepError> for BranchError {
    fn from(e: RepError) -> Self {
        BranchError::Rep(e)
    }
}

impl fmt::Display for BranchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BranchError::SignatureMismatch { big, small } => write!(
                f,
                "signature {small} is not the restriction target of {big}: \
                 expected ({},{})",
                big.p().saturating_sub(1),
                big.q()
            ),
            BranchError::SubgroupUndefined { sig } => {
                write!(f, "signature {sig} has no subgroup to restrict to (p = 1)")
            }
            BranchError::TheoremRange { sig } => write!(
                f,
                "signature {sig} is outside the verified window p >= 3, q >= 2"
            ),
            BranchError::NotRegular {
                name,
                value,
                threshold,
            } => write!(
                f,
                "{name} = {value} is not regular: the threshold is {threshold}"
            ),
            BranchError::Length { big_len, small_len } => write!(
                f,
                "infinitesimal character lengths {big_len} and {small_len} \
                 fit no signature pair"
            ),
            BranchError::Domain { side } => write!(
                f,
                "the {side}-group infinitesimal character does not have the \
                 fixed descending tail of these families"
            ),
            BranchError::Rep(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for BranchError {
    fn source(&self) -> Option<&(dyn core::error::Error + 'static)> {
        match self {
            BranchError::Rep(e) => Some(e),
            _ => None,
        }
    }
}

fn check_subgroup(big: &Rep, small: &Rep) -> Result<(), BranchError> {
    if big.sig().subgroup() != Some(small.sig()) {
        return Err(BranchError::SignatureMismatch {
            big: big.sig(),
            small: small.sig(),
        });
    }
    Ok(())
}

/// Multiplicity of `small` in the restriction of `big` to (p-1, q).
///
/// Always 0 or 1: zero representations and cross-sign pairs contribute
/// nothing; within the `-` family the subgroup parameter must exceed
/// the big one, within the `+` family it must fall below it. The
/// half-odd offset between the parameters is automatic from parity.
pub fn multiplicity(big: &Rep, small: &Rep) -> Result<u32, BranchError> {
    check_subgroup(big, small)?;
    if big.is_zero() || small.is_zero() || big.sign() != small.sign() {
        return Ok(0);
    }
    let hit = match big.sign() {
        Sign::Minus => small.lambda() > big.lambda(),
        Sign::Plus => small.lambda() < big.lambda(),
    };
    Ok(hit as u32)
}

/// The index n with subgroup parameter offset n + 1/2 from the big
/// one. Only meaningful when `multiplicity` is 1; exact by parity.
fn witness_index(big: &Rep, small: &Rep) -> u32 {
    let twice_n = match big.sign() {
        Sign::Minus => small.lambda().twice() - big.lambda().twice() - 1,
        Sign::Plus => big.lambda().twice() - small.lambda().twice() - 1,
    };
    (twice_n / 2) as u32
}

/// Multiplicity refined by the rank-one character; the summand at
/// index n carries the n-th power of the nontrivial character.
pub fn multiplicity_with_o1(
    big: &Rep,
    small: &Rep,
    chi: OneChar,
) -> Result<u32, BranchError> {
    if multiplicity(big, small)? == 0 {
        return Ok(0);
    }
    let n = witness_index(big, small);
    Ok((chi == OneChar::sgn_pow(n)) as u32)
}

/// The discrete spectrum of the restriction of `big` to (p-1, q).
///
/// For the `+` family the list is complete and finite (indices with
/// subgroup parameter still positive) and `max_entries` is ignored;
/// for the `-` family the sum is infinite and the first `max_entries`
/// indices are emitted with `truncated` set. The zero representation
/// restricts to the empty spectrum.
pub fn discrete_spectrum(big: &Rep, max_entries: u32) -> Result<Spectrum, BranchError> {
    if big.is_zero() {
        return Ok(Spectrum {
            entries: Vec::new(),
            truncated: false,
            omitted_zero_reps: 0,
        });
    }
    let sub = big
        .sig()
        .subgroup()
        .ok_or(BranchError::SubgroupUndefined { sig: big.sig() })?;
    let mut entries = Vec::new();
    let mut omitted = 0u32;
    let mut push = |n: u32, mu: HalfInt| {
        let rep = Rep::new(sub, big.sign(), mu).expect("summand parameters are valid");
        if rep.is_zero() {
            omitted += 1;
        } else {
            entries.push(SpectrumEntry {
                rep,
                ochar: OneChar::sgn_pow(n),
                n,
            });
        }
    };
    let truncated = match big.sign() {
        Sign::Plus => {
            for n in 0.. {
                let mu = HalfInt::from_twice(big.lambda().twice() - 1 - 2 * n as i64);
                if !mu.is_positive() {
                    break;
                }
                push(n, mu);
            }
            false
        }
        Sign::Minus => {
            for n in 0..max_entries {
                let mu = HalfInt::from_twice(big.lambda().twice() + 1 + 2 * n as i64);
                push(n, mu);
            }
            true
        }
    };
    Ok(Spectrum {
        entries,
        truncated,
        omitted_zero_reps: omitted,
    })
}

/// Tail entries continuing the fixed descending string below the
/// leading one: expected doubled values total-4, total-6, ...
fn tail_is_family_string(tail: &[HalfInt], total: i64) -> bool {
    tail.iter()
        .enumerate()
        .all(|(i, &e)| e.twice() == total - 4 - 2 * i as i64)
}

/// Tests the interlacing chain between two infinitesimal characters of
/// the families on (p, q) and (p-1, q).
///
/// The sum p+q is recovered from the tuple lengths. Both tails must be
/// the fixed descending strings these families always carry; only the
/// leading entries are live. Writing b and s for the leading entries
/// and t = (p+q-4)/2: the discrete chain is s > b > t with b > 0, the
/// finite chain is b > s > t with s > 0.
pub fn interlacing_holds(
    chi_big: &InfChar,
    chi_small: &InfChar,
    kind: InterlacingKind,
) -> Result<bool, BranchError> {
    let m = chi_big.len();
    let n = chi_small.len();
    let total: i64 = if n == m && n >= 1 {
        2 * m as i64 + 1
    } else if n + 1 == m && n >= 1 {
        2 * m as i64
    } else {
        return Err(BranchError::Length {
            big_len: m,
            small_len: n,
        });
    };
    if !tail_is_family_string(chi_big.tail(), total) {
        return Err(BranchError::Domain { side: "big" });
    }
    if !tail_is_family_string(chi_small.tail(), total - 1) {
        return Err(BranchError::Domain { side: "small" });
    }
    let lead_big = chi_big.first().expect("length checked");
    let lead_small = chi_small.first().expect("length checked");
    let t = HalfInt::from_twice(total - 4);
    Ok(match kind {
        InterlacingKind::Discrete => {
            lead_small > lead_big && lead_big > t && lead_big.is_positive()
        }
        InterlacingKind::Finite => {
            lead_big > lead_small && lead_small > t && lead_small.is_positive()
        }
    })
}

/// Multiplicity of the subgroup parameter `mu` against the full packet
/// at `lambda`, split over the four sign pairs. Requires the theorem
/// window p >= 3, q >= 2.
pub fn packet_multiplicity(
    sig: Signature,
    lambda: HalfInt,
    mu: HalfInt,
) -> Result<PacketBranching, BranchError> {
    if !sig.in_theorem_range() {
        return Err(BranchError::TheoremRange { sig });
    }
    let sub = sig.subgroup().expect("p >= 3 has a subgroup");
    let mut by_pair = [0u32; 4];
    for (i, &big_sign) in Sign::BOTH.iter().enumerate() {
        let big = Rep::new(sig, big_sign, lambda)?;
        for (j, &small_sign) in Sign::BOTH.iter().enumerate() {
            let small = Rep::new(sub, small_sign, mu)?;
            by_pair[2 * i + j] = multiplicity(&big, &small)?;
        }
    }
    Ok(PacketBranching { by_pair })
}

/// The unique sign pair pairing the packets at `lambda` and `mu`.
/// Both parameters must be regular; parity forbids a tie, so the pair
/// is (+,+) when lambda > mu and (-,-) when mu > lambda.
pub fn packet_partner(
    sig: Signature,
    lambda: HalfInt,
    mu: HalfInt,
) -> Result<PacketPartner, BranchError> {
    if !sig.in_theorem_range() {
        return Err(BranchError::TheoremRange { sig });
    }
    let sub = sig.subgroup().expect("p >= 3 has a subgroup");
    let big = Rep::new(sig, Sign::Plus, lambda)?;
    let small = Rep::new(sub, Sign::Plus, mu)?;
    if !big.is_regular() {
        return Err(BranchError::NotRegular {
            name: "lambda",
            value: lambda,
            threshold: sig.regular_threshold(),
        });
    }
    if !small.is_regular() {
        return Err(BranchError::NotRegular {
            name: "mu",
            value: mu,
            threshold: sub.regular_threshold(),
        });
    }
    let sign = if lambda > mu { Sign::Plus } else { Sign::Minus };
    Ok(PacketPartner {
        big_member: sign,
        small_member: sign,
    })
}

/// All values of the parameter lattice on `sig` that are regular and
/// at most `max`, ascending.
fn regular_params(sig: Signature, max: HalfInt) -> impl Iterator<Item = HalfInt> {
    let start = sig.regular_threshold();
    (0i64..)
        .map(move |k| start + HalfInt::from_int(k))
        .take_while(move |&v| v <= max)
}

/// Exhaustively cross-checks, on one signature, the equivalence of the
/// closed-form multiplicity and the interlacing predicate for both
/// families, and the packet multiplicity-one statement, over all
/// regular lambda <= lambda_max and regular mu <= lambda_max + 1.
pub fn verify_versions(
    sig: Signature,
    lambda_max: HalfInt,
) -> Result<BranchingReport, BranchError> {
    if !sig.in_theorem_range() {
        return Err(BranchError::TheoremRange { sig });
    }
    let sub = sig.subgroup().expect("p >= 3 has a subgroup");
    let mut report = BranchingReport::new(GridSpec {
        p_min: sig.p(),
        p_max: sig.p(),
        q_min: sig.q(),
        q_max: sig.q(),
        lambda_max,
    });
    let mu_max = lambda_max + HalfInt::ONE;
    for lambda in regular_params(sig, lambda_max) {
        for mu in regular_params(sub, mu_max) {
            for sign in Sign::BOTH {
                let big = Rep::new(sig, sign, lambda)?;
                let small = Rep::new(sub, sign, mu)?;
                let mult = multiplicity(&big, &small)?;
                let kind = match sign {
                    Sign::Plus => InterlacingKind::Finite,
                    Sign::Minus => InterlacingKind::Discrete,
                };
                let inter =
                    interlacing_holds(&big.inf_char()?, &small.inf_char()?, kind)?;
                report.checks_run += 1;
                if (mult == 1) != inter {
                    report.failures.push(Failure {
                        check: "multiplicity_matches_interlacing".to_string(),
                        params: format!("sig={sig} sign={sign} lambda={lambda} mu={mu}"),
                        expected: format!("interlacing {}", mult == 1),
                        got: format!("interlacing {inter}"),
                    });
                }
            }
            let packet = packet_multiplicity(sig, lambda, mu)?;
            report.checks_run += 1;
            if packet.total() != 1 {
                report.failures.push(Failure {
                    check: "packet_multiplicity_one".to_string(),
                    params: format!("sig={sig} lambda={lambda} mu={mu}"),
                    expected: "1".to_string(),
                    got: packet.total().to_string(),
                });
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn sig(p: u32, q: u32) -> Signature {
        Signature::new(p, q).unwrap()
    }

    fn rep(p: u32, q: u32, sign: Sign, twice_lambda: i64) -> Rep {
        Rep::new(sig(p, q), sign, HalfInt::from_twice(twice_lambda)).unwrap()
    }

    #[test]
    fn multiplicity_examples() {
        let big_plus = rep(3, 2, Sign::Plus, 5);
        let big_minus = rep(3, 2, Sign::Minus, 5);
        assert_eq!(multiplicity(&big_plus, &rep(2, 2, Sign::Plus, 4)), Ok(1));
        assert_eq!(multiplicity(&big_minus, &rep(2, 2, Sign::Minus, 6)), Ok(1));
        assert_eq!(multiplicity(&big_plus, &rep(2, 2, Sign::Minus, 6)), Ok(0));
        assert_eq!(multiplicity(&big_minus, &rep(2, 2, Sign::Minus, 4)), Ok(0));
    }

    #[test]
    fn multiplicity_rejects_wrong_subgroup() {
        let big = rep(3, 2, Sign::Plus, 5);
        let not_sub = rep(3, 2, Sign::Plus, 5);
        assert_eq!(
            multiplicity(&big, &not_sub),
            Err(BranchError::SignatureMismatch {
                big: sig(3, 2),
                small: sig(3, 2),
            })
        );
    }

    #[test]
    fn zero_reps_contribute_nothing() {
        let big = rep(2, 2, Sign::Plus, 6); // subgroup (1,2): + members are zero
        let small = rep(1, 2, Sign::Plus, 5);
        assert!(small.is_zero());
        assert_eq!(multiplicity(&big, &small), Ok(0));
    }

    #[test]
    fn o1_examples() {
        let big_minus = rep(3, 2, Sign::Minus, 5);
        let small4 = rep(2, 2, Sign::Minus, 8);
        assert_eq!(multiplicity_with_o1(&big_minus, &small4, OneChar::Sgn), Ok(1));
        assert_eq!(
            multiplicity_with_o1(&big_minus, &small4, OneChar::Trivial),
            Ok(0)
        );
        let big_plus = rep(3, 2, Sign::Plus, 5);
        let small1 = rep(2, 2, Sign::Plus, 2);
        assert_eq!(multiplicity_with_o1(&big_plus, &small1, OneChar::Sgn), Ok(1));
    }

    #[test]
    fn o1_splits_multiplicity() {
        for twice_mu in 1..=15 {
            let mu = HalfInt::from_twice(twice_mu);
            if !sig(2, 2).parity_ok(mu) {
                continue;
            }
            for sign in Sign::BOTH {
                let big = rep(3, 2, sign, 5);
                let small = Rep::new(sig(2, 2), sign, mu).unwrap();
                let total = multiplicity(&big, &small).unwrap();
                let split = multiplicity_with_o1(&big, &small, OneChar::Trivial).unwrap()
                    + multiplicity_with_o1(&big, &small, OneChar::Sgn).unwrap();
                assert_eq!(total, split);
            }
        }
    }

    #[test]
    fn finite_spectrum_example() {
        let s = discrete_spectrum(&rep(3, 2, Sign::Plus, 5), DEFAULT_MAX_ENTRIES).unwrap();
        assert!(!s.truncated);
        assert_eq!(s.omitted_zero_reps, 0);
        assert_eq!(
            s.entries,
            vec![
                SpectrumEntry {
                    rep: rep(2, 2, Sign::Plus, 4),
                    ochar: OneChar::Trivial,
                    n: 0,
                },
                SpectrumEntry {
                    rep: rep(2, 2, Sign::Plus, 2),
                    ochar: OneChar::Sgn,
                    n: 1,
                },
            ]
        );
    }

    #[test]
    fn finite_spectrum_empty_below_threshold() {
        let s = discrete_spectrum(&rep(3, 2, Sign::Plus, 1), DEFAULT_MAX_ENTRIES).unwrap();
        assert!(s.entries.is_empty());
        assert!(!s.truncated);
    }

    #[test]
    fn infinite_spectrum_prefix() {
        let s = discrete_spectrum(&rep(3, 2, Sign::Minus, 5), 3).unwrap();
        assert!(s.truncated);
        let got: Vec<(i64, OneChar)> = s
            .entries
            .iter()
            .map(|e| (e.rep.lambda().twice(), e.ochar))
            .collect();
        assert_eq!(
            got,
            vec![
                (6, OneChar::Trivial),
                (8, OneChar::Sgn),
                (10, OneChar::Trivial),
            ]
        );
    }

    #[test]
    fn spectrum_of_zero_rep_is_empty() {
        let z = rep(3, 1, Sign::Minus, 2);
        assert!(z.is_zero());
        let s = discrete_spectrum(&z, 5).unwrap();
        assert!(s.entries.is_empty());
        assert_eq!(s.omitted_zero_reps, 0);
    }

    #[test]
    fn spectrum_needs_a_subgroup() {
        let big = rep(1, 3, Sign::Minus, 2);
        assert!(!big.is_zero());
        assert_eq!(
            discrete_spectrum(&big, 5),
            Err(BranchError::SubgroupUndefined { sig: sig(1, 3) })
        );
    }

    #[test]
    fn p2_spectrum_only_omissions() {
        let s = discrete_spectrum(&rep(2, 3, Sign::Plus, 9), DEFAULT_MAX_ENTRIES).unwrap();
        assert!(s.entries.is_empty());
        assert_eq!(s.omitted_zero_reps, 4);
    }

    fn chi(twices: &[i64]) -> InfChar {
        let raw: Vec<HalfInt> = twices.iter().map(|&t| HalfInt::from_twice(t)).collect();
        InfChar::canonicalize(&raw)
    }

    #[test]
    fn interlacing_examples() {
        let big = chi(&[5, 1]);
        assert_eq!(
            interlacing_holds(&big, &chi(&[4, 0]), InterlacingKind::Finite),
            Ok(true)
        );
        assert_eq!(
            interlacing_holds(&big, &chi(&[6, 0]), InterlacingKind::Discrete),
            Ok(true)
        );
        assert_eq!(
            interlacing_holds(&big, &chi(&[4, 0]), InterlacingKind::Discrete),
            Ok(false)
        );
    }

    #[test]
    fn interlacing_validates_shapes() {
        assert_eq!(
            interlacing_holds(&chi(&[5, 1]), &chi(&[4, 0, 0]), InterlacingKind::Finite),
            Err(BranchError::Length {
                big_len: 2,
                small_len: 3,
            })
        );
        // big tail should be (1/2) for total 5, not (3/2)
        assert_eq!(
            interlacing_holds(&chi(&[5, 3]), &chi(&[4, 0]), InterlacingKind::Finite),
            Err(BranchError::Domain { side: "big" })
        );
        assert_eq!(
            interlacing_holds(&chi(&[5, 1]), &chi(&[4, 1]), InterlacingKind::Finite),
            Err(BranchError::Domain { side: "small" })
        );
    }

    #[test]
    fn packet_examples() {
        let h = HalfInt::from_twice;
        let b = packet_multiplicity(sig(3, 2), h(5), h(4)).unwrap();
        assert_eq!(b.by_pair, [1, 0, 0, 0]);
        assert_eq!(b.total(), 1);
        assert_eq!(
            b.witness(),
            Some(PacketPartner {
                big_member: Sign::Plus,
                small_member: Sign::Plus,
            })
        );

        let b = packet_multiplicity(sig(3, 2), h(5), h(6)).unwrap();
        assert_eq!(b.by_pair, [0, 0, 0, 1]);
        assert_eq!(b.total(), 1);

        assert_eq!(
            packet_multiplicity(sig(2, 2), h(4), h(3)),
            Err(BranchError::TheoremRange { sig: sig(2, 2) })
        );
    }

    #[test]
    fn partner_examples() {
        let h = HalfInt::from_twice;
        assert_eq!(
            packet_partner(sig(3, 2), h(5), h(4)),
            Ok(PacketPartner {
                big_member: Sign::Plus,
                small_member: Sign::Plus,
            })
        );
        assert_eq!(
            packet_partner(sig(3, 2), h(5), h(6)),
            Ok(PacketPartner {
                big_member: Sign::Minus,
                small_member: Sign::Minus,
            })
        );
        assert_eq!(
            packet_partner(sig(4, 2), h(6), h(5)),
            Ok(PacketPartner {
                big_member: Sign::Plus,
                small_member: Sign::Plus,
            })
        );
        assert_eq!(
            packet_partner(sig(3, 2), h(1), h(4)),
            Err(BranchError::NotRegular {
                name: "lambda",
                value: h(1),
                threshold: h(3),
            })
        );
    }

    #[test]
    fn verify_versions_passes() {
        let r = verify_versions(sig(3, 2), HalfInt::from_twice(21)).unwrap();
        assert!(r.passed());
        // 10 lambdas, 11 mus, 3 checks per pair
        assert_eq!(r.checks_run, 330);

        let r = verify_versions(sig(4, 3), HalfInt::from_int(10)).unwrap();
        assert!(r.passed());

        let r = verify_versions(sig(3, 2), HalfInt::HALF).unwrap();
        assert!(r.passed());
        assert_eq!(r.checks_run, 0);
    }

    #[test]
    fn verify_versions_check_count() {
        // 5 lambdas {3/2..11/2}, 7 mus {1..7}, 3 checks per pair
        let r = verify_versions(sig(3, 2), HalfInt::from_int(6)).unwrap();
        assert_eq!(r.checks_run, 105);
    }
}
