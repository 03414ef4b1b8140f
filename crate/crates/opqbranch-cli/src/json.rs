//! JSON renderings with contract-stable shapes.
//!
//! Field order is the declaration order below and is part of the CLI
//! contract: output for fixed inputs is byte-identical across runs, so
//! golden files can compare exact bytes.

use opqbranch_core::{
    BranchingReport, KType, PacketBranching, Rep, Spectrum, SpectrumEntry,
};
use serde::Serialize;

#[derive(Serialize)]
pub struct KTypeJson {
    pub a: u64,
    pub b: u64,
}

impl From<KType> for KTypeJson {
    fn from(k: KType) -> Self {
        KTypeJson { a: k.a, b: k.b }
    }
}

#[derive(Serialize)]
pub struct RepJson {
    pub p: u32,
    pub q: u32,
    pub sign: String,
    pub lambda: String,
    pub zero: bool,
    pub regular: bool,
    pub inf_char: Option<Vec<String>>,
    pub min_k_type: Option<KTypeJson>,
}

impl From<&Rep> for RepJson {
    fn from(r: &Rep) -> Self {
        let inf_char = r.inf_char().ok().map(|chi| {
            chi.entries().iter().map(|e| e.to_string()).collect()
        });
        let min_k_type = r.minimal_k_type().ok().map(KTypeJson::from);
        RepJson {
            p: r.sig().p(),
            q: r.sig().q(),
            sign: r.sign().to_string(),
            lambda: r.lambda().to_string(),
            zero: r.is_zero(),
            regular: r.is_regular(),
            inf_char,
            min_k_type,
        }
    }
}

#[derive(Serialize)]
pub struct MultiplicityJson {
    pub multiplicity: u32,
}

#[derive(Serialize)]
pub struct SpectrumEntryJson {
    pub sign: String,
    pub mu: String,
    pub ochar: String,
    pub n: u32,
}

impl From<&SpectrumEntry> for SpectrumEntryJson {
    fn from(e: &SpectrumEntry) -> Self {
        SpectrumEntryJson {
            sign: e.rep.sign().to_string(),
            mu: e.rep.lambda().to_string(),
            ochar: e.ochar.to_string(),
            n: e.n,
        }
    }
}

#[derive(Serialize)]
pub struct SpectrumJson {
    pub entries: Vec<SpectrumEntryJson>,
    pub truncated: bool,
    pub omitted_zero_reps: u32,
}

impl From<&Spectrum> for SpectrumJson {
    fn from(s: &Spectrum) -> Self {
        SpectrumJson {
            entries: s.entries.iter().map(SpectrumEntryJson::from).collect(),
            truncated: s.truncated,
            omitted_zero_reps: s.omitted_zero_reps,
        }
    }
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub big_member: String,
    pub small_member: String,
}

#[derive(Serialize)]
pub struct PacketJson {
    pub multiplicity: u32,
    pub by_pair: [u32; 4],
    pub witness: Option<WitnessJson>,
}

impl From<&PacketBranching> for PacketJson {
    fn from(b: &PacketBranching) -> Self {
        PacketJson {
            multiplicity: b.total(),
            by_pair: b.by_pair,
            witness: b.witness().map(|w| WitnessJson {
                big_member: w.big_member.to_string(),
                small_member: w.small_member.to_string(),
            }),
        }
    }
}

#[derive(Serialize)]
pub struct GridJson {
    pub p_min: u32,
    pub p_max: u32,
    pub q_min: u32,
    pub q_max: u32,
    pub lambda_max: String,
}

#[derive(Serialize)]
pub struct FailureJson {
    pub check: String,
    pub params: String,
    pub expected: String,
    pub got: String,
}

#[derive(Serialize)]
pub struct ReportJson {
    pub grid: GridJson,
    pub checks: u64,
    pub failures: Vec<FailureJson>,
}

impl From<&BranchingReport> for ReportJson {
    fn from(r: &BranchingReport) -> Self {
        ReportJson {
            grid: GridJson {
                p_min: r.grid.p_min,
                p_max: r.grid.p_max,
                q_min: r.grid.q_min,
                q_max: r.grid.q_max,
                lambda_max: r.grid.lambda_max.to_string(),
            },
            checks: r.checks_run,
            failures: r
                .failures
                .iter()
                .map(|f| FailureJson {
                    check: f.check.clone(),
                    params: f.params.clone(),
                    expected: f.expected.clone(),
                    got: f.got.clone(),
                })
                .collect(),
        }
    }
}

/// Stable pretty rendering used for all JSON output.
pub fn print_json<T: Serialize>(value: &T) {
    let mut text =
        serde_json::to_string_pretty(value).expect("serializable output types");
    text.push('\n');
    crate::emit(&text);
}
