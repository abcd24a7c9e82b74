//! Explicit factorizations of `G_{A,B}` along the loci where it acquires
//! linear components.
//!
//! Lines are given in dehomogenized form with the constant carried by `T`.
//! Each claim is checked first against `G_{A,B}` as expanded from the
//! matrix, then against the `X <-> Y` relabeling; the report records which
//! labeling held. Square roots of `-3` are tried in both signs.

use serde::Serialize;

use super::cubic::{line_divides, LinearForm, TernaryCubic};
use super::determinant::build_f_det;
use super::CurveError;
use crate::gf::{sqrt_in_fq, FiniteField, PrimeExtField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Locus {
    /// `A - 2B + 1 = 0` or `(A, B) ∈ {(1, 1), (1, -1/2)}`: `X + Y + T` divides.
    TraceLine,
    /// `A^3 - 2AB + 1 = 0`, `A^3 + 1 != 0`, `AB != 0`: three lines.
    CubicProduct,
    /// `A = B^2`, `AB != 0`: three lines.
    SquareProduct,
    /// `A^2 + 2AB - A + 4B^2 + 2B + 1 = 0`, `-3` a square.
    ConicAlpha,
    /// `A^2 + A + 1 = 0`, `B ∈ {A^2, -A^2/2}`, `-3` a square.
    CubeRootAlpha,
    /// `A = 0`, `B^3 = 1/8`: `2BX + 4B^2Y + T` divides.
    AZeroLine,
    /// `B = 0`: `G = 2(A^3 + 1) XYT`.
    BZeroProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Labeling {
    Identity,
    SwapXY,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// `G = lambda * (product of lines)`; `lambda = 0` only on `B = 0`,
    /// `A^3 = -1`, where `G` vanishes identically.
    Product { lambda: u32, labeling: Labeling },
    /// The line divides `G`.
    Divides {
        line: [u32; 3],
        labeling: Labeling,
        alpha: Option<u32>,
    },
    /// No labeling or sign makes the claim hold.
    Fails,
    /// `-3` has no square root in `F_q`.
    SquareRootUnavailable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorCheck {
    pub locus: Locus,
    pub outcome: Outcome,
}

impl FactorCheck {
    pub fn holds(&self) -> bool {
        matches!(
            self.outcome,
            Outcome::Product { .. } | Outcome::Divides { .. }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub a: u32,
    pub b: u32,
    pub checks: Vec<FactorCheck>,
}

impl FactorReport {
    /// Every check that could be run held.
    pub fn all_hold(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.holds() || c.outcome == Outcome::SquareRootUnavailable)
    }
}

/// Loci containing `(A, B)`, with `-3 ∈ □_q` ignored.
pub fn loci(fq: &PrimeExtField, a: u32, b: u32) -> Vec<Locus> {
    let k = |n| fq.from_int(n);
    let (a2, b2, a3, b3) = (fq.mul(a, a), fq.mul(b, b), fq.pow(a, 3), fq.pow(b, 3));
    let minus_half = fq.neg(fq.inv(k(2)).unwrap());
    let mut out = Vec::new();

    let trace =
        fq.add(fq.sub(a, fq.mul(k(2), b)), 1) == 0 || (a, b) == (1, 1) || (a, b) == (1, minus_half);
    if trace {
        out.push(Locus::TraceLine);
    }
    let ab_nonzero = a != 0 && b != 0;
    if ab_nonzero && fq.add(fq.sub(a3, fq.mul(k(2), fq.mul(a, b))), 1) == 0 && fq.add(a3, 1) != 0 {
        out.push(Locus::CubicProduct);
    }
    if ab_nonzero && a == b2 {
        out.push(Locus::SquareProduct);
    }
    // A^2 + 2AB - A + 4B^2 + 2B + 1
    let conic = [
        a2,
        fq.mul(k(2), fq.mul(a, b)),
        fq.neg(a),
        fq.mul(k(4), b2),
        fq.mul(k(2), b),
        1,
    ]
    .into_iter()
    .fold(0, |acc, x| fq.add(acc, x));
    if conic == 0 {
        out.push(Locus::ConicAlpha);
    }
    if fq.add(fq.add(a2, a), 1) == 0 && (b == a2 || b == fq.mul(minus_half, a2)) {
        out.push(Locus::CubeRootAlpha);
    }
    // 8B^3 = 1; the opposite sign gives no rational line
    if a == 0 && fq.mul(k(8), b3) == 1 {
        out.push(Locus::AZeroLine);
    }
    if b == 0 {
        out.push(Locus::BZeroProduct);
    }
    out
}

fn labeled(fq: &PrimeExtField, g: &TernaryCubic<u32>) -> [(Labeling, TernaryCubic<u32>); 2] {
    [(Labeling::Identity, *g), (Labeling::SwapXY, g.swap_xy(fq))]
}

fn check_product(
    fq: &PrimeExtField,
    g: &TernaryCubic<u32>,
    lines: &[LinearForm<u32>; 3],
) -> Outcome {
    let prod = TernaryCubic::product_of_lines(fq, lines);
    for (labeling, target) in labeled(fq, g) {
        if let Some(lambda) = target.ratio_to(fq, &prod) {
            return Outcome::Product { lambda, labeling };
        }
    }
    Outcome::Fails
}

fn check_line(
    fq: &PrimeExtField,
    g: &TernaryCubic<u32>,
    line: [u32; 3],
    alpha: Option<u32>,
) -> Option<Outcome> {
    labeled(fq, g)
        .into_iter()
        .find(|(_, target)| line_divides(fq, target, &line))
        .map(|(labeling, _)| Outcome::Divides {
            line,
            labeling,
            alpha,
        })
}

/// `2X - Y - T + alpha (Y - T)`, both signs of `alpha` under each labeling.
fn check_alpha_line(fq: &PrimeExtField, g: &TernaryCubic<u32>) -> Outcome {
    let minus_three = fq.from_int(-3);
    let Some(root) = sqrt_in_fq(fq, minus_three) else {
        return Outcome::SquareRootUnavailable;
    };
    let mut roots = vec![root, fq.neg(root)];
    roots.dedup();
    for (labeling, target) in labeled(fq, g) {
        for &alpha in &roots {
            let line = [fq.from_int(2), fq.sub(alpha, 1), fq.sub(fq.neg(1), alpha)];
            if line_divides(fq, &target, &line) {
                return Outcome::Divides {
                    line,
                    labeling,
                    alpha: Some(alpha),
                };
            }
        }
    }
    Outcome::Fails
}

fn run_check(fq: &PrimeExtField, g: &TernaryCubic<u32>, locus: Locus, a: u32, b: u32) -> Outcome {
    let (a2, b2) = (fq.mul(a, a), fq.mul(b, b));
    match locus {
        Locus::TraceLine => check_line(fq, g, [1, 1, 1], None).unwrap_or(Outcome::Fails),
        // (A^2 + AX + Y)(A^2 Y + A + X)(A^2 X + AY + 1)
        Locus::CubicProduct => check_product(fq, g, &[[a, 1, a2], [1, a2, a], [a2, a, 1]]),
        // (B^2 + BY + X)(B^2 Y + BX + 1)(B^2 X + B + Y)
        Locus::SquareProduct => check_product(fq, g, &[[1, b, b2], [b, b2, 1], [b2, 1, b]]),
        Locus::ConicAlpha | Locus::CubeRootAlpha => check_alpha_line(fq, g),
        Locus::AZeroLine => {
            let line = [fq.mul(fq.from_int(2), b), fq.mul(fq.from_int(4), b2), 1];
            check_line(fq, g, line, None).unwrap_or(Outcome::Fails)
        }
        Locus::BZeroProduct => {
            let lambda = fq.mul(fq.from_int(2), fq.add(fq.pow(a, 3), 1));
            let xyt = TernaryCubic::product_of_lines(fq, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
            if *g == xyt.scale(fq, lambda) {
                Outcome::Product {
                    lambda,
                    labeling: Labeling::Identity,
                }
            } else {
                Outcome::Fails
            }
        }
    }
}

/// Checks every factorization claim that applies to `(A, B)`.
pub fn verify_branch_factorization(
    fq: &PrimeExtField,
    a: u32,
    b: u32,
) -> Result<FactorReport, CurveError> {
    let loci = loci(fq, a, b);
    if loci.is_empty() {
        return Err(CurveError::NotOnLocus { a, b });
    }
    let g = build_f_det(fq, a, b);
    let checks: Vec<FactorCheck> = loci
        .into_iter()
        .map(|locus| FactorCheck {
            locus,
            outcome: run_check(fq, &g, locus, a, b),
        })
        .collect();
    if checks
        .iter()
        .all(|c| c.outcome == Outcome::SquareRootUnavailable)
    {
        return Err(CurveError::SquareRootUnavailable);
    }
    Ok(FactorReport { a, b, checks })
}
