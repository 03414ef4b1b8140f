//! Exact branching engine for the two one-parameter families of
//! irreducible unitary representations living on indefinite orthogonal
//! signatures (p, q), restricted one step down to (p-1, q).
//!
//! Everything is computed in exact arithmetic over half-integers: the
//! closed-form multiplicity rules, discrete-spectrum enumeration with
//! rank-one character tracking, infinitesimal characters in canonical
//! form with their interlacing predicates, packet multiplicity checks,
//! and an independent compact-limit oracle built on integer linear
//! algebra. No floating point appears anywhere.
//!
//! The crate is `no_std` (with `alloc`); IO, JSON rendering, and the
//! command-line front end live in the companion `opqbranch-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod binom;
pub mod branching;
pub mod halfint;
pub mod intmat;
pub mod oracle;
pub mod rep;
pub mod report;

pub use binom::{binomial, BinomialOverflow};
pub use branching::{
    discrete_spectrum, interlacing_holds, multiplicity, multiplicity_with_o1,
    packet_multiplicity, packet_partner, verify_versions, BranchError, InterlacingKind,
    OneChar, PacketBranching, PacketPartner, ParseOneCharError, Spectrum, SpectrumEntry,
    DEFAULT_MAX_ENTRIES,
};
pub use halfint::{HalfInt, ParseHalfIntError};
pub use intmat::integer_rank;
pub use oracle::{
    brute_force_harmonic_dim, classical_branching, compact_consistency, CompactRep,
    OracleError,
};
pub use rep::{
    harmonic_dim, inf_char_tail_end, InfChar, KType, Packet, ParseSignError, Rep,
    RepError, Sign, Signature,
};
pub use report::{BranchingReport, Failure, GridSpec};
