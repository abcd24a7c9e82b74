//! Scan reports in the stable JSON schema and a flat CSV rendering.

use serde::Serialize;

use crate::gf::{FieldTower, FiniteField, E3};
use crate::planarity::{Branch, Method, ScanReport};

#[derive(Debug, Clone, Serialize)]
pub struct Meta {
    pub p: u32,
    pub m: u32,
    pub q: u64,
    pub seed: u64,
    pub version: &'static str,
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub index: u64,
    pub coeffs: [u32; 3],
}

impl Witness {
    pub fn new(tower: &FieldTower, c: E3) -> Self {
        Witness {
            index: tower.fq3().index(c),
            coeffs: c.0,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdicts {
    pub theorem: Option<bool>,
    pub det: Option<bool>,
    pub brute: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct PairJson {
    #[serde(rename = "A")]
    pub a: u32,
    #[serde(rename = "B")]
    pub b: u32,
    pub verdicts: Verdicts,
    pub branch: Option<Branch>,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub planar_count: usize,
    pub expected_count: i64,
    pub disagreements: Vec<[u32; 2]>,
    pub planar_counts: std::collections::BTreeMap<Method, usize>,
    pub count_asserted: bool,
    pub count_matches: bool,
    pub theorem_subset: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanJson {
    pub meta: Meta,
    pub pairs: Vec<PairJson>,
    pub summary: Summary,
}

/// Pairs where two exact deciders (det, brute) disagree.
pub fn exact_disagreements(report: &ScanReport) -> Vec<(u32, u32)> {
    report
        .pairs
        .iter()
        .filter(|r| matches!((r.det, r.brute), (Some(x), Some(y)) if x != y))
        .map(|r| (r.a, r.b))
        .collect()
}

/// Whether the scan passes: full agreement and the count for `q > 3`; the
/// exact deciders agreeing and the theorem set being contained in the
/// planar set for `q = 3`.
pub fn scan_passes(report: &ScanReport) -> bool {
    if report.q > 3 {
        report.all_agree() && report.count_matches()
    } else {
        exact_disagreements(report).is_empty() && report.theorem_subset != Some(false)
    }
}

pub fn scan_json(tower: &FieldTower, report: &ScanReport, seed: u64) -> ScanJson {
    let pairs = report
        .pairs
        .iter()
        .map(|r| PairJson {
            a: r.a,
            b: r.b,
            verdicts: Verdicts {
                theorem: r.theorem,
                det: r.det,
                brute: r.brute,
            },
            branch: r.branch,
            witness: r.witness.map(|c| Witness::new(tower, c)),
        })
        .collect();
    ScanJson {
        meta: Meta {
            p: report.p,
            m: report.m,
            q: report.q,
            seed,
            version: env!("CARGO_PKG_VERSION"),
        },
        pairs,
        summary: Summary {
            planar_count: report.planar_count,
            expected_count: report.expected_count,
            disagreements: report.disagreements.iter().map(|&(a, b)| [a, b]).collect(),
            planar_counts: report.planar_counts.clone(),
            count_asserted: report.q > 3,
            count_matches: report.count_matches(),
            theorem_subset: report.theorem_subset,
        },
    }
}

#[derive(Serialize)]
struct CsvRow {
    #[serde(rename = "A")]
    a: u32,
    #[serde(rename = "B")]
    b: u32,
    theorem: Option<bool>,
    det: Option<bool>,
    brute: Option<bool>,
    branch: Option<Branch>,
    witness_index: Option<u64>,
    witness_coeffs: Option<String>,
}

pub fn scan_csv(tower: &FieldTower, report: &ScanReport) -> Result<Vec<u8>, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in &report.pairs {
        let wit = r.witness.map(|c| Witness::new(tower, c));
        w.serialize(CsvRow {
            a: r.a,
            b: r.b,
            theorem: r.theorem,
            det: r.det,
            brute: r.brute,
            branch: r.branch,
            witness_index: wit.as_ref().map(|w| w.index),
            witness_coeffs: wit.map(|w| {
                w.coeffs
                    .iter()
                    .map(u32::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }),
        })?;
    }
    w.into_inner().map_err(|e| e.into_error().into())
}
