//! The normal-basis form `H_{A,B}` of `G_{A,B}` and `F_q` point counting.
//!
//! With `C = xξ + yξ^q + tξ^{q^2}` the conjugates of `C` are linear in
//! `(x, y, t)`, so `H(x, y, t) = G(C, C^q, C^{q^2})` and nonzero `F_q`-zeros of
//! `H` are in bijection with nonzero roots of `det(M_{A,B,C})`.

use rayon::prelude::*;

use super::cubic::TernaryCubic;
use super::determinant::{build_f_det, embed_cubic};
use super::CurveError;
use crate::gf::{is_normal_element, FieldTower, FiniteField, GfError, Limits, PrimeExtField, E3};

/// `G_{A,B}` in the normal basis generated by `xi`, with coefficients in `F_q`.
pub fn transform_h(
    tower: &FieldTower,
    a: u32,
    b: u32,
    xi: E3,
) -> Result<TernaryCubic<u32>, CurveError> {
    if !is_normal_element(tower, xi) {
        return Err(CurveError::NotNormal);
    }
    let f = tower.fq3();
    let x0 = xi;
    let x1 = tower.frobenius_q(xi, 1);
    let x2 = tower.frobenius_q(xi, 2);
    let forms = [[x0, x1, x2], [x1, x2, x0], [x2, x0, x1]];
    let g = embed_cubic(tower, &build_f_det(tower.fq(), a, b));
    let h = g.substitute(f, &forms);
    let mut coeffs = [0u32; 10];
    for (slot, &c) in coeffs.iter_mut().zip(&h.coeffs) {
        *slot = f.project(c).ok_or(CurveError::CoefficientNotInSubfield)?;
    }
    Ok(TernaryCubic { coeffs })
}

/// Number of `(x, y, t) ∈ F_q^3 \ {0}` with `P(x, y, t) = 0`.
pub fn count_nonzero_fq_zeros(
    fq: &PrimeExtField,
    p: &TernaryCubic<u32>,
    limits: &Limits,
) -> Result<u64, GfError> {
    let q = fq.order();
    limits.check((q as u128).pow(3))?;
    let zeros: u64 = (0..q * q)
        .into_par_iter()
        .map(|xy| {
            let (x, y) = ((xy / q) as u32, (xy % q) as u32);
            (0..q as u32)
                .filter(|&t| fq.is_zero(p.eval(fq, x, y, t)))
                .count() as u64
        })
        .sum();
    // the origin is always a zero of a homogeneous cubic
    Ok(zeros - 1)
}

/// `|{C ∈ F_{q^3}^* : det(M_{A,B,C}) = 0}|` by direct evaluation.
pub fn count_nonzero_det_roots(tower: &FieldTower, a: u32, b: u32) -> Result<u64, GfError> {
    tower.require_enumerable()?;
    let f = tower.fq3();
    Ok((1..tower.order_top())
        .into_par_iter()
        .filter(|&i| f.is_zero(crate::planarity::det_value(tower, a, b, f.from_index(i))))
        .count() as u64)
}
