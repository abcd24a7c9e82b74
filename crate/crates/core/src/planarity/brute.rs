//! Exhaustive planarity: every difference map `x -> f(x+a) - f(x)`, `a != 0`,
//! must hit each field element exactly once.

use rayon::prelude::*;

use super::SparsePoly;
use crate::gf::{FieldTower, FiniteField, GfError, Limits, E3};

/// Enumerated field elements shared by repeated brute checks over one field.
pub struct BruteContext<'a, F: FiniteField> {
    field: &'a F,
    elems: Vec<F::Elem>,
}

impl<'a, F: FiniteField> BruteContext<'a, F> {
    pub fn new(field: &'a F, limits: &Limits) -> Result<Self, GfError> {
        limits.check(field.order() as u128)?;
        Ok(BruteContext {
            field,
            elems: field.elements(),
        })
    }

    pub fn field(&self) -> &F {
        self.field
    }

    pub fn elements(&self) -> &[F::Elem] {
        &self.elems
    }

    /// Values of `poly` on every element, in enumeration order.
    pub fn values(&self, poly: &SparsePoly<F::Elem>) -> Vec<F::Elem> {
        self.elems
            .iter()
            .map(|&x| poly.eval(self.field, x))
            .collect()
    }

    /// Whether `D_a` is a permutation. `hits` is scratch of length `N`
    /// holding generation stamps; `stamp` must differ from every value
    /// already stored in it.
    fn difference_is_permutation(
        &self,
        values: &[F::Elem],
        a: usize,
        hits: &mut [u32],
        stamp: u32,
    ) -> bool {
        let f = self.field;
        let shift = self.elems[a];
        for (x, &fx) in self.elems.iter().zip(values) {
            let y = f.index(f.add(*x, shift)) as usize;
            let d = f.index(f.sub(values[y], fx)) as usize;
            if hits[d] == stamp {
                return false;
            }
            hits[d] = stamp;
        }
        true
    }

    /// Sequential check, short-circuiting on the first failing shift.
    pub fn is_planar_values(&self, values: &[F::Elem], hits: &mut Vec<u32>) -> bool {
        let n = self.elems.len();
        hits.clear();
        hits.resize(n, 0);
        (1..n).all(|a| self.difference_is_permutation(values, a, hits, a as u32))
    }

    /// Same decision with the shifts spread over the rayon pool.
    pub fn is_planar_values_par(&self, values: &[F::Elem]) -> bool {
        let n = self.elems.len();
        (1..n)
            .into_par_iter()
            .map_init(
                || vec![0u32; n],
                |hits, a| self.difference_is_permutation(values, a, hits, a as u32),
            )
            .all(|ok| ok)
    }

    /// Number of `x` with `f(x + a) = f(x)`.
    pub fn difference_roots(&self, values: &[F::Elem], a: usize) -> usize {
        let f = self.field;
        let shift = self.elems[a];
        self.elems
            .iter()
            .zip(values)
            .filter(|(x, &fx)| values[f.index(f.add(**x, shift)) as usize] == fx)
            .count()
    }

    /// Number of distinct values, i.e. the image size of the function.
    pub fn image_size(&self, values: &[F::Elem]) -> usize {
        let mut seen = vec![false; self.elems.len()];
        values
            .iter()
            .filter(|&&v| {
                let i = self.field.index(v) as usize;
                !std::mem::replace(&mut seen[i], true)
            })
            .count()
    }
}

/// Brute-force planarity of an arbitrary polynomial function.
pub fn brute_is_planar<F: FiniteField>(
    field: &F,
    poly: &SparsePoly<F::Elem>,
    limits: &Limits,
) -> Result<bool, GfError> {
    let ctx = BruteContext::new(field, limits)?;
    let values = ctx.values(poly);
    Ok(ctx.is_planar_values_par(&values))
}

/// Values of `x^{q^2+1} + A x^{q+1} + B x^2` using Frobenius images and one
/// extension multiplication per point.
pub fn f_ab_values(tower: &FieldTower, elems: &[E3], a: u32, b: u32) -> Vec<E3> {
    let f = tower.fq3();
    elems
        .iter()
        .map(|&x| {
            let inner = f.add(
                f.add(tower.frobenius_q(x, 2), f.scale(a, tower.frobenius_q(x, 1))),
                f.scale(b, x),
            );
            f.mul(x, inner)
        })
        .collect()
}

/// Brute-force planarity of `f_{A,B}` over `F_{q^3}`.
pub fn brute_is_planar_pair(tower: &FieldTower, a: u32, b: u32) -> Result<bool, GfError> {
    let ctx = BruteContext::new(tower.fq3(), &tower.limits())?;
    let values = f_ab_values(tower, ctx.elements(), a, b);
    Ok(ctx.is_planar_values_par(&values))
}
