//! Everything known about a single pair `(A, B)`, with cross-checks.

use serde::Serialize;

use super::report::Witness;
use crate::curves::{
    build_f_det, count_nonzero_fq_zeros, find_linear_factors, transform_h,
    verify_branch_factorization, CurveError, FactorReport, LineFactor,
};
use crate::gf::{find_normal_element, FieldTower, GfError};
use crate::linearized::circulant_norm;
use crate::planarity::{
    brute_is_planar_pair, classify_pair, is_planar_det, prop1_necessary, Branch, Verdict,
};

#[derive(Debug, Clone, Serialize)]
pub struct Dossier {
    #[serde(rename = "A")]
    pub a: u32,
    #[serde(rename = "B")]
    pub b: u32,
    pub q: u64,
    pub classification: Verdict,
    pub branch: Option<Branch>,
    pub prop1_necessary: bool,
    pub det_planar: bool,
    pub witness: Option<Witness>,
    pub brute_planar: Option<bool>,
    pub factorization: Option<FactorReport>,
    pub linear_factors: Vec<LineFactor>,
    pub h_point_count: u64,
    pub problems: Vec<String>,
}

impl Dossier {
    pub fn consistent(&self) -> bool {
        self.problems.is_empty()
    }
}

pub fn build_dossier(tower: &FieldTower, a: u32, b: u32) -> Result<Dossier, GfError> {
    let fq = tower.fq();
    let class = classify_pair(fq, a, b);
    let (det_planar, witness) = is_planar_det(tower, a, b, true)?;
    let brute_planar = match brute_is_planar_pair(tower, a, b) {
        Ok(v) => Some(v),
        Err(GfError::SizeLimit { .. }) => None,
        Err(e) => return Err(e),
    };
    let factorization = match verify_branch_factorization(fq, a, b) {
        Ok(r) => Some(r),
        Err(CurveError::NotOnLocus { .. }) | Err(CurveError::SquareRootUnavailable) => None,
        Err(CurveError::Gf(e)) => return Err(e),
        Err(e) => unreachable!("factorization check: {e}"),
    };
    let g = build_f_det(fq, a, b);
    let linear_factors = find_linear_factors(tower, &g, 3)?;
    let xi = find_normal_element(tower);
    let h = match transform_h(tower, a, b, xi) {
        Ok(h) => h,
        Err(CurveError::Gf(e)) => return Err(e),
        Err(e) => unreachable!("normal-basis transform: {e}"),
    };
    let h_point_count = count_nonzero_fq_zeros(fq, &h, &tower.limits())?;

    let mut problems = Vec::new();
    let theorem_planar = class.verdict == Verdict::Planar;
    if tower.q() > 3 && theorem_planar != det_planar {
        problems.push("closed form and determinant sweep disagree".to_string());
    }
    if tower.q() == 3 && theorem_planar && !det_planar {
        problems.push("closed form planar but determinant sweep is not".to_string());
    }
    if let Some(bp) = brute_planar {
        if bp != det_planar {
            problems.push("brute force and determinant sweep disagree".to_string());
        }
    }
    if det_planar && !prop1_necessary(fq, a, b) {
        problems.push("planar although x^{q^2} + A x^q + B x is not bijective".to_string());
    }
    if det_planar != (h_point_count == 0) {
        problems.push("H point count does not match the determinant roots".to_string());
    }
    if witness.is_some() == det_planar {
        problems.push("witness presence does not match the verdict".to_string());
    }
    if let Some(r) = &factorization {
        if !r.all_hold() {
            problems.push("a branch factorization check failed".to_string());
        }
    }
    for l in linear_factors.iter().filter(|l| l.ext_degree == 1) {
        let [u, v, w] = l.coeffs.map(|c| c as u32);
        if circulant_norm(fq, w, v, u) == 0 && det_planar {
            problems.push(format!(
                "F_q line {:?} forces a root but the pair is planar",
                l.coeffs
            ));
        }
    }

    Ok(Dossier {
        a,
        b,
        q: tower.q(),
        classification: class.verdict,
        branch: class.branch,
        prop1_necessary: prop1_necessary(fq, a, b),
        det_planar,
        witness: witness.map(|c| Witness::new(tower, c)),
        brute_planar,
        factorization,
        linear_factors,
        h_point_count,
        problems,
    })
}
