//! The cubic `G_{A,B}` with `det(M_{A,B,C}) = G_{A,B}(C, C^q, C^{q^2})`.
//!
//! [`build_f_det`] expands the determinant of the difference-map matrix with
//! entries written as linear forms in `X = C`, `Y = C^q`, `T = C^{q^2}`.
//! [`f_det_formula`] is the closed form of that expansion and
//! [`build_f_printed`] is the reference form of the polynomial, which equals
//! `build_f_det` with `X` and `Y` exchanged.

use super::cubic::{LinearForm, TernaryCubic};
use crate::gf::{FieldTower, FiniteField, PrimeExtField, E3};
use crate::planarity::det_value;

/// Quadratic form stored densely over `X^2, XY, XT, Y^2, YT, T^2`.
type Quad = [u32; 6];

fn quad_index(a: usize, b: usize) -> usize {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    match (a, b) {
        (0, 0) => 0,
        (0, 1) => 1,
        (0, 2) => 2,
        (1, 1) => 3,
        (1, 2) => 4,
        _ => 5,
    }
}

fn lin_mul(f: &PrimeExtField, l1: &LinearForm<u32>, l2: &LinearForm<u32>) -> Quad {
    let mut out = [0u32; 6];
    for (a, &x) in l1.iter().enumerate() {
        for (b, &y) in l2.iter().enumerate() {
            let idx = quad_index(a, b);
            out[idx] = f.add(out[idx], f.mul(x, y));
        }
    }
    out
}

fn quad_sub(f: &PrimeExtField, x: &Quad, y: &Quad) -> Quad {
    let mut out = [0u32; 6];
    for i in 0..6 {
        out[i] = f.sub(x[i], y[i]);
    }
    out
}

fn quad_times_lin(f: &PrimeExtField, qd: &Quad, l: &LinearForm<u32>) -> TernaryCubic<u32> {
    const PAIRS: [(usize, usize); 6] = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut out = TernaryCubic::zero(f);
    for (qi, &(a, b)) in PAIRS.iter().enumerate() {
        if qd[qi] == 0 {
            continue;
        }
        for (c, &lc) in l.iter().enumerate() {
            let mut e = [0u8; 3];
            e[a] += 1;
            e[b] += 1;
            e[c] += 1;
            let idx = super::cubic::monomial_index(e[0], e[1], e[2]);
            out.coeffs[idx] = f.add(out.coeffs[idx], f.mul(qd[qi], lc));
        }
    }
    out
}

/// Entries of `M_{A,B,C}` as linear forms in `(X, Y, T) = (C, C^q, C^{q^2})`.
pub fn matrix_forms(fq: &PrimeExtField, a: u32, b: u32) -> [[LinearForm<u32>; 3]; 3] {
    let two_b = fq.add(b, b);
    [
        [[two_b, a, 1], [a, 0, 0], [1, 0, 0]],
        [[0, 1, 0], [1, two_b, a], [0, a, 0]],
        [[0, 0, a], [0, 0, 1], [a, 1, two_b]],
    ]
}

/// Determinant of [`matrix_forms`] by cofactor expansion along the first row.
pub fn build_f_det(fq: &PrimeExtField, a: u32, b: u32) -> TernaryCubic<u32> {
    let m = matrix_forms(fq, a, b);
    let minor = |c0: usize, c1: usize| {
        quad_sub(
            fq,
            &lin_mul(fq, &m[1][c0], &m[2][c1]),
            &lin_mul(fq, &m[1][c1], &m[2][c0]),
        )
    };
    let t0 = quad_times_lin(fq, &minor(1, 2), &m[0][0]);
    let t1 = quad_times_lin(fq, &minor(0, 2), &m[0][1]);
    let t2 = quad_times_lin(fq, &minor(0, 1), &m[0][2]);
    t0.add(fq, &t1.scale(fq, fq.neg(1))).add(fq, &t2)
}

struct Groups {
    cubes: u32,
    g1: u32,
    g2: u32,
    xyt: u32,
}

fn groups(fq: &PrimeExtField, a: u32, b: u32) -> Groups {
    let k = |n| fq.from_int(n);
    let (a2, b2) = (fq.mul(a, a), fq.mul(b, b));
    Groups {
        // 2AB
        cubes: fq.mul(k(2), fq.mul(a, b)),
        // 2A^2B + 4B^2
        g1: fq.add(fq.mul(k(2), fq.mul(a2, b)), fq.mul(k(4), b2)),
        // 4AB^2 + 2B
        g2: fq.add(fq.mul(k(4), fq.mul(a, b2)), fq.mul(k(2), b)),
        // 2A^3 + 8B^3 + 2
        xyt: fq.add(
            fq.add(fq.mul(k(2), fq.pow(a, 3)), fq.mul(k(8), fq.pow(b, 3))),
            k(2),
        ),
    }
}

fn from_terms(fq: &PrimeExtField, terms: &[((u8, u8, u8), u32)]) -> TernaryCubic<u32> {
    let mut out = TernaryCubic::zero(fq);
    for &((i, j, k), c) in terms {
        let idx = super::cubic::monomial_index(i, j, k);
        out.coeffs[idx] = fq.add(out.coeffs[idx], c);
    }
    out
}

/// `2AB(X^3+Y^3+T^3) + (2A^2B+4B^2)(X^2T+XY^2+YT^2)
///  + (4AB^2+2B)(X^2Y+Y^2T+XT^2) + (2A^3+8B^3+2)XYT`.
pub fn f_det_formula(fq: &PrimeExtField, a: u32, b: u32) -> TernaryCubic<u32> {
    let g = groups(fq, a, b);
    from_terms(
        fq,
        &[
            ((3, 0, 0), g.cubes),
            ((0, 3, 0), g.cubes),
            ((0, 0, 3), g.cubes),
            ((2, 0, 1), g.g1),
            ((1, 2, 0), g.g1),
            ((0, 1, 2), g.g1),
            ((2, 1, 0), g.g2),
            ((0, 2, 1), g.g2),
            ((1, 0, 2), g.g2),
            ((1, 1, 1), g.xyt),
        ],
    )
}

/// The reference polynomial, homogenized with `T`:
/// `2AB(X^3+Y^3+T^3) + (2A^2B+4B^2)(XT^2+Y^2T+X^2Y)
///  + (4AB^2+2B)(X^2T+YT^2+XY^2) + (2A^3+8B^3+2)XYT`.
pub fn build_f_printed(fq: &PrimeExtField, a: u32, b: u32) -> TernaryCubic<u32> {
    let g = groups(fq, a, b);
    from_terms(
        fq,
        &[
            ((3, 0, 0), g.cubes),
            ((0, 3, 0), g.cubes),
            ((0, 0, 3), g.cubes),
            ((1, 0, 2), g.g1),
            ((0, 2, 1), g.g1),
            ((2, 1, 0), g.g1),
            ((2, 0, 1), g.g2),
            ((0, 1, 2), g.g2),
            ((1, 2, 0), g.g2),
            ((1, 1, 1), g.xyt),
        ],
    )
}

/// Embeds an `F_q` cubic into `F_{q^3}`.
pub fn embed_cubic(tower: &FieldTower, p: &TernaryCubic<u32>) -> TernaryCubic<E3> {
    p.map(|c| tower.embed(c))
}

/// `P(C, C^q, C^{q^2})` for an `F_q` cubic.
pub fn eval_at_conjugates(tower: &FieldTower, p: &TernaryCubic<u32>, c: E3) -> E3 {
    embed_cubic(tower, p).eval(
        tower.fq3(),
        c,
        tower.frobenius_q(c, 1),
        tower.frobenius_q(c, 2),
    )
}

/// Matrix determinant and cubic agree at `C`, and the value lies in `F_q`.
pub fn check_det_identity(tower: &FieldTower, a: u32, b: u32, c: E3) -> bool {
    let lhs = det_value(tower, a, b, c);
    let rhs = eval_at_conjugates(tower, &build_f_det(tower.fq(), a, b), c);
    lhs == rhs && tower.fq3().in_base(lhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::build_tower;

    #[test]
    fn expansion_matches_closed_form() {
        for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2), (11, 1)] {
            let t = build_tower(p, m).unwrap();
            let fq = t.fq();
            for a in 0..fq.q() {
                for b in 0..fq.q() {
                    assert_eq!(build_f_det(fq, a, b), f_det_formula(fq, a, b));
                }
            }
        }
    }

    #[test]
    fn b_zero_collapses_to_xyt() {
        let t = build_tower(7, 1).unwrap();
        let fq = t.fq();
        for a in 0..7 {
            let mut expected = TernaryCubic::zero(fq);
            expected.coeffs[super::super::cubic::monomial_index(1, 1, 1)] =
                fq.mul(2, fq.add(fq.pow(a, 3), 1));
            assert_eq!(build_f_det(fq, a, 0), expected);
        }
    }

    #[test]
    fn evaluation_examples_q5() {
        let fq = PrimeExtField::prime(5).unwrap();
        let det = build_f_det(&fq, 2, 1);
        let printed = build_f_printed(&fq, 2, 1);
        assert_eq!(det.eval(&fq, 1, 1, 1), 4);
        assert_eq!(printed.eval(&fq, 1, 1, 1), 4);
        assert_eq!(printed.eval(&fq, 2, 0, 1), 0);
        assert_eq!(det.eval(&fq, 2, 0, 1), 4);
    }

    #[test]
    fn cyclic_invariance() {
        let fq = PrimeExtField::prime(7).unwrap();
        let (z, o) = (0, 1);
        // (X, Y, T) -> (Y, T, X)
        let shift = [[z, o, z], [z, z, o], [o, z, z]];
        for a in 0..7 {
            for b in 0..7 {
                let p = build_f_det(&fq, a, b);
                assert_eq!(p.substitute(&fq, &shift), p);
            }
        }
    }

    #[test]
    fn printed_form_is_the_swap() {
        let fq = PrimeExtField::prime(5).unwrap();
        for a in 0..5 {
            for b in 0..5 {
                assert_eq!(
                    build_f_printed(&fq, a, b),
                    build_f_det(&fq, a, b).swap_xy(&fq)
                );
            }
        }
    }

    #[test]
    fn identity_at_c_examples() {
        let t = build_tower(5, 1).unwrap();
        assert!(check_det_identity(&t, 2, 1, t.embed(0)));
        assert_eq!(det_value(&t, 2, 1, t.embed(0)), t.embed(0));
        assert!(check_det_identity(&t, 2, 1, t.embed(1)));
        assert_eq!(
            eval_at_conjugates(&t, &build_f_det(t.fq(), 2, 1), t.embed(1)),
            t.embed(4)
        );
    }
}
