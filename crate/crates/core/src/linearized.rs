//! Linearized maps `x -> c0 x + c1 x^q + c2 x^{q^2}` on `F_{q^3}` and their
//! Dickson matrices.

use crate::gf::{Ex, FieldTower, FiniteField, GfError, PrimeExtField, E3};

/// Coefficients of `x -> c0 x + c1 x^q + c2 x^{q^2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LinTriple {
    pub c0: E3,
    pub c1: E3,
    pub c2: E3,
}

pub type Matrix3 = [[E3; 3]; 3];

impl LinTriple {
    pub fn new(c0: E3, c1: E3, c2: E3) -> Self {
        LinTriple { c0, c1, c2 }
    }

    /// `alpha x^{q^2} + beta x^q + gamma x` with coefficients in `F_q`.
    pub fn from_subfield(tower: &FieldTower, alpha: u32, beta: u32, gamma: u32) -> Self {
        LinTriple {
            c0: tower.embed(gamma),
            c1: tower.embed(beta),
            c2: tower.embed(alpha),
        }
    }

    pub fn coeff(&self, i: usize) -> E3 {
        match i % 3 {
            0 => self.c0,
            1 => self.c1,
            _ => self.c2,
        }
    }

    pub fn apply(&self, tower: &FieldTower, x: E3) -> E3 {
        let f = tower.fq3();
        let t0 = f.mul(self.c0, x);
        let t1 = f.mul(self.c1, tower.frobenius_q(x, 1));
        let t2 = f.mul(self.c2, tower.frobenius_q(x, 2));
        f.add(f.add(t0, t1), t2)
    }
}

/// Entry `(i, j)` is `c_{(j - i) mod 3}^{q^i}`.
pub fn dickson_matrix(tower: &FieldTower, l: &LinTriple) -> Matrix3 {
    let mut m = [[Ex([0; 3]); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            *entry = tower.frobenius_q(l.coeff(j + 3 - i), i);
        }
    }
    m
}

/// Cofactor expansion along the first row.
pub fn det3<F: FiniteField>(f: &F, m: &[[F::Elem; 3]; 3]) -> F::Elem {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][c], m[2][d]))
    };
    let t0 = f.mul(m[0][0], minor(1, 2, 2, 1));
    let t1 = f.mul(m[0][1], minor(0, 2, 2, 0));
    let t2 = f.mul(m[0][2], minor(0, 1, 1, 0));
    f.add(f.sub(t0, t1), t2)
}

/// Bijectivity on `F_{q^3}` via the Dickson determinant.
pub fn is_permutation(tower: &FieldTower, l: &LinTriple) -> bool {
    let f = tower.fq3();
    !f.is_zero(det3(f, &dickson_matrix(tower, l)))
}

/// `alpha^3 + beta^3 + gamma^3 - 3 alpha beta gamma`, the determinant of the
/// circulant Dickson matrix of a map with coefficients in `F_q`.
pub fn circulant_norm(fq: &PrimeExtField, alpha: u32, beta: u32, gamma: u32) -> u32 {
    let cube = |x| fq.pow(x, 3);
    let sum = fq.add(fq.add(cube(alpha), cube(beta)), cube(gamma));
    let prod = fq.mul(fq.mul(alpha, beta), gamma);
    fq.sub(sum, fq.mul(fq.from_int(3), prod))
}

/// Whether `alpha x^{q^2} + beta x^q + gamma x` (coefficients in `F_q`) has a
/// nonzero root in `F_{q^3}`.
pub fn has_nonzero_root_subfield_coeffs(
    fq: &PrimeExtField,
    alpha: u32,
    beta: u32,
    gamma: u32,
) -> bool {
    circulant_norm(fq, alpha, beta, gamma) == 0
}

/// Kernel by exhaustive evaluation, in enumeration order.
pub fn brute_kernel(tower: &FieldTower, l: &LinTriple) -> Result<Vec<E3>, GfError> {
    tower.require_enumerable()?;
    let f = tower.fq3();
    Ok((0..f.order())
        .map(|i| f.from_index(i))
        .filter(|&x| f.is_zero(l.apply(tower, x)))
        .collect())
}

/// Number of distinct values of the map over `F_{q^3}`.
pub fn image_size(tower: &FieldTower, l: &LinTriple) -> Result<usize, GfError> {
    tower.require_enumerable()?;
    let f = tower.fq3();
    let mut seen = vec![false; f.order() as usize];
    let mut count = 0;
    for i in 0..f.order() {
        let y = f.index(l.apply(tower, f.from_index(i))) as usize;
        if !seen[y] {
            seen[y] = true;
            count += 1;
        }
    }
    Ok(count)
}
