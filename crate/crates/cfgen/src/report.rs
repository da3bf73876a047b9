//! JSON report schema shared by every command.
//!
//! The payload under `report` is fully deterministic for identical inputs;
//! wall-clock timing lives next to it in the envelope so byte comparisons
//! of the report stay meaningful.

use cfrac::cf::{CFExpansion, ConvergentPair, DisplaySign};
use cfrac::poly::Poly;
use cfrac::series::Valuation;
use serde::Serialize;

use crate::family::FamilyEcho;

#[derive(Serialize, Debug)]
pub struct Envelope<R: Serialize> {
    pub report: R,
    pub timing_ms: u128,
}

pub fn poly_strings(p: &Poly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct TermJson {
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct CfJson {
    pub head: Vec<String>,
    pub terms: Vec<TermJson>,
}

impl CfJson {
    pub fn of(cf: &CFExpansion) -> Self {
        CfJson {
            head: poly_strings(&cf.head),
            terms: cf
                .terms
                .iter()
                .map(|t| TermJson {
                    num: poly_strings(&t.num),
                    den: poly_strings(&t.den),
                })
                .collect(),
        }
    }
}

#[derive(Serialize, PartialEq, Eq, Debug)]
pub struct PairJson {
    pub n: usize,
    pub p: Vec<String>,
    pub q: Vec<String>,
}

pub fn pairs_json(pairs: &[ConvergentPair]) -> Vec<PairJson> {
    pairs
        .iter()
        .map(|pair| PairJson {
            n: pair.index,
            p: poly_strings(&pair.p),
            q: poly_strings(&pair.q),
        })
        .collect()
}

pub fn sign_str(sign: DisplaySign) -> &'static str {
    match sign {
        DisplaySign::Minus => "minus",
        DisplaySign::Plus => "plus",
    }
}

pub fn valuation_str(v: Valuation) -> String {
    match v {
        Valuation::Finite(k) => k.to_string(),
        Valuation::AtLeast(k) => format!(">={k}"),
    }
}

#[derive(Serialize, Debug)]
pub struct ExpandReport {
    pub command: &'static str,
    pub family: FamilyEcho,
    pub label: String,
    pub depth: usize,
    pub display_sign: &'static str,
    pub terminated: bool,
    pub cf: CfJson,
    pub convergents: Vec<PairJson>,
}

#[derive(Serialize, Clone, PartialEq, Eq, Debug)]
pub struct CheckJson {
    pub name: &'static str,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Serialize, Debug)]
pub struct VerifyTargetJson {
    pub family: FamilyEcho,
    pub label: String,
    pub depth: usize,
    pub checks: Vec<CheckJson>,
}

#[derive(Serialize, Debug)]
pub struct VerifyReport {
    pub command: &'static str,
    pub all: bool,
    pub depth: usize,
    pub targets: Vec<VerifyTargetJson>,
    pub passed: bool,
}

#[derive(Serialize, Debug)]
pub struct EvalReport {
    pub command: &'static str,
    pub family: FamilyEcho,
    pub label: String,
    pub depth: usize,
    pub x: String,
    pub digits: usize,
    pub exact: String,
    pub decimal: String,
    pub decimal_is_exact: bool,
}

#[derive(Serialize, Debug)]
pub struct MapJson {
    pub a: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

#[derive(Serialize, Debug)]
pub struct DefectJson {
    pub index: usize,
    pub required: usize,
    pub order: String,
    pub status: &'static str,
}

#[derive(Serialize, Debug)]
pub struct TransformReport {
    pub command: &'static str,
    pub family: FamilyEcho,
    pub label: String,
    pub map: MapJson,
    pub depth: usize,
    pub display_sign: &'static str,
    pub terminated: bool,
    pub cf: CfJson,
    pub defect: DefectJson,
}

#[derive(Serialize, Debug)]
pub struct StepJson {
    pub a: String,
    pub b: String,
}

#[derive(Serialize, Debug)]
pub struct Series2cfReport {
    pub command: &'static str,
    pub source: String,
    pub depth: usize,
    pub input_order: usize,
    pub c0: String,
    pub steps: Vec<StepJson>,
    pub terminated: bool,
    pub roundtrip_order: usize,
    pub roundtrip: &'static str,
}

#[derive(Serialize, Debug)]
pub struct TableRowJson {
    pub n: usize,
    pub value: String,
}

#[derive(Serialize, Debug)]
pub struct TableReport {
    pub command: &'static str,
    pub family: FamilyEcho,
    pub label: String,
    pub symbol: String,
    pub count: usize,
    pub rows: Vec<TableRowJson>,
}

/// Serializes the envelope as pretty JSON with a trailing newline.
pub fn to_json<R: Serialize>(report: R, timing_ms: u128) -> String {
    let envelope = Envelope { report, timing_ms };
    let mut s = serde_json::to_string_pretty(&envelope).expect("report serialization");
    s.push('\n');
    s
}
