//! Linear components of a cubic over `F_q`, searched over `F_{q^k}`, `k ≤ 3`.
//!
//! Lines `Y = aX + bT` are found by scanning slopes `a`: substituting gives
//! four coefficient polynomials in `b` whose common roots are the admissible
//! intercepts. Vertical lines `X = cT` are handled the same way with `c` as
//! the unknown, and `T = 0` is checked directly.

use std::sync::Arc;

use serde::Serialize;

use super::cubic::TernaryCubic;
use crate::gf::{
    find_irreducible, poly_eval, poly_roots, ExtField, FieldTower, FiniteField, GfError,
};

/// A line `uX + vY + wT` defined over `F_{q^k}`, normalized so that its first
/// nonzero coefficient is 1. Coefficients are canonical encodings in the
/// degree-`k` extension used by [`LineSearch`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LineFactor {
    pub ext_degree: u32,
    pub coeffs: [u64; 3],
}

fn binomial(n: u8, k: u8) -> i64 {
    match (n, k) {
        (_, 0) => 1,
        (n, k) if k == n => 1,
        (2, 1) => 2,
        (3, 1) | (3, 2) => 3,
        _ => 0,
    }
}

/// Lines over `field` dividing `p`, normalized, in discovery order:
/// non-vertical lines by slope then intercept, then vertical lines, then
/// `T = 0`.
pub fn lines_over<F: FiniteField>(field: &F, p: &TernaryCubic<F::Elem>) -> Vec<[F::Elem; 3]> {
    let mut out = Vec::new();
    let (z, o) = (field.zero(), field.one());
    let elems = field.elements();

    // Y = aX + bT: coefficient of X^{3-s} T^s is a polynomial in b
    let top: Vec<F::Elem> = [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0)]
        .iter()
        .map(|&(i, j, k)| p.coeff(i, j, k))
        .collect();
    for &a in &elems {
        // X^3 coefficient is P(1, a, 0)
        if !field.is_zero(poly_eval(field, &top, a)) {
            continue;
        }
        let polys = intercept_polys(field, p, a);
        for b in common_roots(field, &polys) {
            let line = if field.is_zero(a) {
                [z, o, field.neg(b)]
            } else {
                let ainv = field.inv(a).unwrap();
                [o, field.neg(ainv), field.mul(b, ainv)]
            };
            out.push(line);
        }
    }

    // X = cT: coefficient of Y^{3-s} T^s is sum over i + k = s of c_{i,3-s,k} c^i
    let vertical: Vec<Vec<F::Elem>> = (0..=3u8)
        .map(|s| {
            let j = 3 - s;
            (0..=s).map(|i| p.coeff(i, j, s - i)).collect()
        })
        .collect();
    for c in common_roots(field, &vertical) {
        out.push([o, z, field.neg(c)]);
    }

    if [(3, 0, 0), (2, 1, 0), (1, 2, 0), (0, 3, 0)]
        .iter()
        .all(|&(i, j, k)| field.is_zero(p.coeff(i, j, k)))
    {
        out.push([z, z, o]);
    }
    out
}

/// For fixed slope `a`, the coefficients of `P(X, aX + bT, T)` as polynomials
/// in `b`, one per power of `T`.
fn intercept_polys<F: FiniteField>(
    field: &F,
    p: &TernaryCubic<F::Elem>,
    a: F::Elem,
) -> Vec<Vec<F::Elem>> {
    let mut polys = vec![vec![field.zero(); 4]; 4];
    for &(i, j, k) in super::cubic::MONOMIALS.iter() {
        let c = p.coeff(i, j, k);
        if field.is_zero(c) {
            continue;
        }
        // X^i (aX + bT)^j T^k = sum_l C(j,l) a^{j-l} b^l X^{i+j-l} T^{k+l}
        for l in 0..=j {
            let s = (k + l) as usize;
            let coef = field.mul(
                field.mul(c, field.from_int(binomial(j, l))),
                field.pow(a, (j - l) as u64),
            );
            polys[s][l as usize] = field.add(polys[s][l as usize], coef);
        }
    }
    polys
}

/// Elements that are roots of every polynomial in `polys`, in enumeration order.
fn common_roots<F: FiniteField>(field: &F, polys: &[Vec<F::Elem>]) -> Vec<F::Elem> {
    let nonzero: Vec<&Vec<F::Elem>> = polys
        .iter()
        .filter(|p| p.iter().any(|&c| !field.is_zero(c)))
        .collect();
    let Some(pivot) = nonzero
        .iter()
        .min_by_key(|p| p.iter().rposition(|&c| !field.is_zero(c)).unwrap_or(0))
    else {
        // every coefficient vanishes identically
        return field.elements();
    };
    poly_roots(field, pivot)
        .into_iter()
        .filter(|&r| {
            nonzero
                .iter()
                .all(|p| field.is_zero(poly_eval(field, p, r)))
        })
        .collect()
}

/// The quadratic and cubic extensions of `F_q` the line search runs in.
pub struct LineSearch<'a> {
    tower: &'a FieldTower,
    fq2: ExtField<2>,
}

impl<'a> LineSearch<'a> {
    pub fn new(tower: &'a FieldTower) -> Result<Self, GfError> {
        let base: Arc<_> = tower.fq3().base_arc().clone();
        let modulus = find_irreducible(base.as_ref(), 2);
        let fq2 = ExtField::new(base, &modulus)?;
        Ok(LineSearch { tower, fq2 })
    }

    /// The degree-2 extension used for `ext_degree = 2` encodings.
    pub fn fq2(&self) -> &ExtField<2> {
        &self.fq2
    }

    /// Every line over `F_{q^k}`, `k ≤ max_ext`, dividing `p`, each reported
    /// once with the smallest `k` it is defined over.
    pub fn find_linear_factors(
        &self,
        p: &TernaryCubic<u32>,
        max_ext: u32,
    ) -> Result<Vec<LineFactor>, GfError> {
        let tower = self.tower;
        let mut out = Vec::new();
        if max_ext >= 1 {
            for l in lines_over(tower.fq(), p) {
                out.push(LineFactor {
                    ext_degree: 1,
                    coeffs: l.map(|c| c as u64),
                });
            }
        }
        if max_ext >= 2 {
            let f = &self.fq2;
            let pe = p.map(|c| f.embed(c));
            for l in lines_over(f, &pe) {
                if l.iter().all(|&c| f.in_base(c)) {
                    continue;
                }
                out.push(LineFactor {
                    ext_degree: 2,
                    coeffs: l.map(|c| f.index(c)),
                });
            }
        }
        if max_ext >= 3 {
            tower.require_enumerable()?;
            let f = tower.fq3();
            let pe = p.map(|c| f.embed(c));
            for l in lines_over(f, &pe) {
                if l.iter().all(|&c| f.in_base(c)) {
                    continue;
                }
                out.push(LineFactor {
                    ext_degree: 3,
                    coeffs: l.map(|c| f.index(c)),
                });
            }
        }
        Ok(out)
    }
}

/// Convenience wrapper building a fresh [`LineSearch`].
pub fn find_linear_factors(
    tower: &FieldTower,
    p: &TernaryCubic<u32>,
    max_ext: u32,
) -> Result<Vec<LineFactor>, GfError> {
    LineSearch::new(tower)?.find_linear_factors(p, max_ext)
}
