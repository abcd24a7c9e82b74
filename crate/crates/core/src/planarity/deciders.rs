use serde::{Deserialize, Serialize};

use super::SparsePoly;
use crate::gf::{gcd, FieldTower, FiniteField, GfError, PrimeExtField, E3};
use crate::linearized::{circulant_norm, det3, dickson_matrix, LinTriple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Planar,
    NotPlanar,
}

/// Which closed-form condition certified planarity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Branch {
    /// `B = 0`, `A^3 + 1 != 0`
    #[serde(rename = "BranchBZero")]
    BZero,
    /// `A^3 - 2AB + 1 = 0`, `A^3 != ±1`
    #[serde(rename = "BranchCubic")]
    Cubic,
    /// `A = B^2`, `B^3 != 1`
    #[serde(rename = "BranchSquare")]
    Square,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairClass {
    pub verdict: Verdict,
    pub branch: Option<Branch>,
    pub witness: Option<E3>,
}

/// `x^{q^2+1} + A x^{q+1} + B x^2` over `F_{q^3}`.
pub fn f_poly(tower: &FieldTower, a: u32, b: u32) -> SparsePoly<E3> {
    let q = tower.q() as u128;
    SparsePoly::new(
        tower.fq3(),
        [
            (q * q + 1, tower.embed(1)),
            (q + 1, tower.embed(a)),
            (2, tower.embed(b)),
        ],
    )
}

/// Coefficients of `f(x + C) - f(x) - f(C)` on `(x, x^q, x^{q^2})`:
/// `(C^{q^2} + A C^q + 2BC, AC, C)`.
pub fn difference_triple(tower: &FieldTower, a: u32, b: u32, c: E3) -> LinTriple {
    let f = tower.fq3();
    let fq = tower.fq();
    let c1 = tower.frobenius_q(c, 1);
    let c2 = tower.frobenius_q(c, 2);
    let two_b = fq.add(b, b);
    let c0 = f.add(f.add(c2, f.scale(a, c1)), f.scale(two_b, c));
    LinTriple::new(c0, f.scale(a, c), c)
}

/// `det(M_{A,B,C})` through the Dickson matrix of the difference triple.
pub fn det_value(tower: &FieldTower, a: u32, b: u32, c: E3) -> E3 {
    det3(
        tower.fq3(),
        &dickson_matrix(tower, &difference_triple(tower, a, b, c)),
    )
}

/// Determinant sweep over all `C != 0`. Returns the first root in
/// enumeration order as witness when asked.
pub fn is_planar_det(
    tower: &FieldTower,
    a: u32,
    b: u32,
    want_witness: bool,
) -> Result<(bool, Option<E3>), GfError> {
    tower.require_enumerable()?;
    let f = tower.fq3();
    let root = (1..f.order())
        .map(|i| f.from_index(i))
        .find(|&c| f.is_zero(det_value(tower, a, b, c)));
    Ok(match root {
        None => (true, None),
        Some(c) => (false, want_witness.then_some(c)),
    })
}

fn branch_conditions(fq: &PrimeExtField, a: u32, b: u32) -> [(Branch, bool); 3] {
    let a3 = fq.pow(a, 3);
    let b3 = fq.pow(b, 3);
    let minus_one = fq.neg(1);
    let two_ab = fq.mul(fq.from_int(2), fq.mul(a, b));
    let cubic = fq.add(fq.sub(a3, two_ab), 1) == 0 && a3 != 1 && a3 != minus_one;
    [
        (Branch::BZero, b == 0 && fq.add(a3, 1) != 0),
        (Branch::Cubic, cubic),
        (Branch::Square, a == fq.mul(b, b) && b3 != 1),
    ]
}

/// Every closed-form branch that holds for `(A, B)`, in priority order.
pub fn satisfied_branches(fq: &PrimeExtField, a: u32, b: u32) -> Vec<Branch> {
    branch_conditions(fq, a, b)
        .into_iter()
        .filter_map(|(br, ok)| ok.then_some(br))
        .collect()
}

/// Closed-form classification; the first satisfied branch in the order
/// BZero, Cubic, Square is recorded.
pub fn classify_pair(fq: &PrimeExtField, a: u32, b: u32) -> PairClass {
    let branch = satisfied_branches(fq, a, b).into_iter().next();
    PairClass {
        verdict: if branch.is_some() {
            Verdict::Planar
        } else {
            Verdict::NotPlanar
        },
        branch,
        witness: None,
    }
}

/// `M_{A,B,C}` written out entry by entry.
pub fn printed_matrix(t: &FieldTower, a: u32, b: u32, c: E3) -> [[E3; 3]; 3] {
    let f = t.fq3();
    let fq = t.fq();
    let cq = t.frobenius_q(c, 1);
    let cq2 = t.frobenius_q(c, 2);
    let two_b = fq.add(b, b);
    let s = |k: u32, x: E3| f.scale(k, x);
    [
        [f.add(f.add(s(a, cq), s(two_b, c)), cq2), s(a, c), c],
        [cq, f.add(f.add(s(a, cq2), s(two_b, cq)), c), s(a, cq)],
        [s(a, cq2), cq2, f.add(f.add(s(a, c), s(two_b, cq2)), cq)],
    ]
}

/// `1 + A^3 + B^3 - 3AB != 0`: bijectivity of `x^{q^2} + A x^q + B x`.
pub fn prop1_necessary(fq: &PrimeExtField, a: u32, b: u32) -> bool {
    circulant_norm(fq, 1, a, b) != 0
}

/// `3q - 2 - 4 gcd(3, q - 1)`.
pub fn count_formula(q: u64) -> i64 {
    3 * q as i64 - 2 - 4 * gcd(3, q - 1) as i64
}
