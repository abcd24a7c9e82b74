//! Exhaustive sweep of the `(A, B)` plane with any subset of the deciders.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::brute::{f_ab_values, BruteContext};
use super::deciders::{classify_pair, count_formula, is_planar_det, Branch, Verdict};
use crate::gf::{FieldTower, GfError, E3};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theorem,
    Det,
    Brute,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Theorem, Method::Det, Method::Brute];

    pub fn name(self) -> &'static str {
        match self {
            Method::Theorem => "theorem",
            Method::Det => "det",
            Method::Brute => "brute",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "theorem" => Ok(Method::Theorem),
            "det" => Ok(Method::Det),
            "brute" => Ok(Method::Brute),
            other => Err(format!(
                "unknown method '{other}' (expected theorem, det or brute)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairRecord {
    pub a: u32,
    pub b: u32,
    pub theorem: Option<bool>,
    pub det: Option<bool>,
    pub brute: Option<bool>,
    pub branch: Option<Branch>,
    pub witness: Option<E3>,
}

impl PairRecord {
    pub fn verdict(&self, method: Method) -> Option<bool> {
        match method {
            Method::Theorem => self.theorem,
            Method::Det => self.det,
            Method::Brute => self.brute,
        }
    }

    /// All verdicts that were computed coincide.
    pub fn consistent(&self) -> bool {
        let mut it = [self.theorem, self.det, self.brute].into_iter().flatten();
        match it.next() {
            None => true,
            Some(first) => it.all(|v| v == first),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub p: u32,
    pub m: u32,
    pub q: u64,
    pub methods: Vec<Method>,
    /// Ordered by `(A, B)` encodings.
    pub pairs: Vec<PairRecord>,
    pub planar_counts: BTreeMap<Method, usize>,
    /// Count from the most exact method that ran (det, then brute, then theorem).
    pub planar_count: usize,
    pub expected_count: i64,
    pub disagreements: Vec<(u32, u32)>,
    /// Theorem-planar pairs are planar for every exact method that ran.
    pub theorem_subset: Option<bool>,
    /// Wall-clock time per method. Not part of any serialized report.
    pub timing: BTreeMap<Method, Duration>,
}

impl ScanReport {
    pub fn all_agree(&self) -> bool {
        self.disagreements.is_empty()
    }

    pub fn count_matches(&self) -> bool {
        self.planar_count as i64 == self.expected_count
    }

    pub fn planar_pairs(&self, method: Method) -> Vec<(u32, u32)> {
        self.pairs
            .iter()
            .filter(|r| r.verdict(method) == Some(true))
            .map(|r| (r.a, r.b))
            .collect()
    }
}

/// Runs each requested decider on every `(A, B) ∈ F_q^2`.
///
/// Pairs are processed in parallel on the current rayon pool; results are
/// assembled in pair order, so the report does not depend on the pool size.
pub fn scan(tower: &FieldTower, methods: &[Method]) -> Result<ScanReport, GfError> {
    let mut methods: Vec<Method> = methods.to_vec();
    methods.sort();
    methods.dedup();
    if methods.iter().any(|&m| m != Method::Theorem) {
        tower.require_enumerable()?;
    }

    let q = tower.q() as u32;
    let mut pairs: Vec<PairRecord> = (0..q)
        .flat_map(|a| (0..q).map(move |b| (a, b)))
        .map(|(a, b)| PairRecord {
            a,
            b,
            theorem: None,
            det: None,
            brute: None,
            branch: None,
            witness: None,
        })
        .collect();
    let mut timing = BTreeMap::new();

    for &method in &methods {
        let start = Instant::now();
        match method {
            Method::Theorem => {
                let fq = tower.fq();
                let out: Vec<_> = pairs
                    .par_iter()
                    .map(|r| classify_pair(fq, r.a, r.b))
                    .collect();
                for (r, class) in pairs.iter_mut().zip(out) {
                    r.theorem = Some(class.verdict == Verdict::Planar);
                    r.branch = class.branch;
                }
            }
            Method::Det => {
                let out: Vec<_> = pairs
                    .par_iter()
                    .map(|r| is_planar_det(tower, r.a, r.b, true))
                    .collect::<Result<_, _>>()?;
                for (r, (planar, witness)) in pairs.iter_mut().zip(out) {
                    r.det = Some(planar);
                    r.witness = witness;
                }
            }
            Method::Brute => {
                let ctx = BruteContext::new(tower.fq3(), &tower.limits())?;
                let out: Vec<bool> = pairs
                    .par_iter()
                    .map_init(Vec::new, |hits, r| {
                        let values = f_ab_values(tower, ctx.elements(), r.a, r.b);
                        ctx.is_planar_values(&values, hits)
                    })
                    .collect();
                for (r, planar) in pairs.iter_mut().zip(out) {
                    r.brute = Some(planar);
                }
            }
        }
        timing.insert(method, start.elapsed());
    }

    let planar_counts: BTreeMap<Method, usize> = methods
        .iter()
        .map(|&m| {
            (
                m,
                pairs.iter().filter(|r| r.verdict(m) == Some(true)).count(),
            )
        })
        .collect();
    let headline = [Method::Det, Method::Brute, Method::Theorem]
        .into_iter()
        .find(|m| planar_counts.contains_key(m))
        .map(|m| planar_counts[&m])
        .unwrap_or(0);
    let disagreements = pairs
        .iter()
        .filter(|r| !r.consistent())
        .map(|r| (r.a, r.b))
        .collect();
    let exact: Vec<Method> = methods
        .iter()
        .copied()
        .filter(|&m| m != Method::Theorem)
        .collect();
    let theorem_subset = (methods.contains(&Method::Theorem) && !exact.is_empty()).then(|| {
        pairs
            .iter()
            .filter(|r| r.theorem == Some(true))
            .all(|r| exact.iter().all(|&m| r.verdict(m) == Some(true)))
    });

    Ok(ScanReport {
        p: tower.p(),
        m: tower.m(),
        q: tower.q(),
        methods,
        pairs,
        planar_counts,
        planar_count: headline,
        expected_count: count_formula(tower.q()),
        disagreements,
        theorem_subset,
        timing,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_tower;

    #[test]
    fn q5_all_methods() {
        let t = build_tower(5, 1).unwrap();
        let r = scan(&t, &Method::ALL).unwrap();
        let expected = vec![
            (0, 0),
            (1, 0),
            (1, 4),
            (2, 0),
            (2, 1),
            (3, 0),
            (3, 3),
            (4, 2),
            (4, 3),
        ];
        for m in Method::ALL {
            assert_eq!(r.planar_pairs(m), expected, "method {m}");
        }
        assert_eq!(r.planar_count, 9);
        assert_eq!(r.expected_count, 9);
        assert!(r.all_agree());
        assert_eq!(r.theorem_subset, Some(true));
        // witnesses exactly for non-planar pairs
        for rec in &r.pairs {
            assert_eq!(rec.witness.is_some(), rec.det == Some(false));
        }
    }

    #[test]
    fn q3_theorem_set_is_contained_in_brute_set() {
        let t = build_tower(3, 1).unwrap();
        let r = scan(&t, &[Method::Theorem, Method::Brute]).unwrap();
        assert_eq!(
            r.planar_pairs(Method::Theorem),
            vec![(0, 0), (1, 0), (1, 2)]
        );
        assert_eq!(r.theorem_subset, Some(true));
    }

    #[test]
    fn method_parsing() {
        assert_eq!("DET".parse::<Method>().unwrap(), Method::Det);
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn pool_size_does_not_change_results() {
        let t = build_tower(7, 1).unwrap();
        let run = |threads| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap()
                .install(|| scan(&t, &[Method::Theorem, Method::Det]).unwrap())
        };
        let (a, b) = (run(1), run(4));
        assert_eq!(a.pairs, b.pairs);
        assert_eq!(a.planar_count, 7);
    }
}
