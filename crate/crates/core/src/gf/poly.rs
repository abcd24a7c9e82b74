//! Small dense univariate polynomials over any [`FiniteField`].
//!
//! Coefficients are stored low degree first. Only what the tower construction
//! and the line search need: evaluation, remainder, exhaustive root listing
//! and an exhaustive irreducibility test.

use super::FiniteField;

pub type DensePoly<E> = Vec<E>;

fn trim<F: FiniteField>(field: &F, p: &mut DensePoly<F::Elem>) {
    while p.last().is_some_and(|&c| field.is_zero(c)) {
        p.pop();
    }
}

pub fn poly_eval<F: FiniteField>(field: &F, coeffs: &[F::Elem], x: F::Elem) -> F::Elem {
    coeffs
        .iter()
        .rev()
        .fold(field.zero(), |acc, &c| field.add(field.mul(acc, x), c))
}

/// Remainder of `a` modulo `b`. `b` must be nonzero.
fn poly_rem<F: FiniteField>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> DensePoly<F::Elem> {
    let mut b = b.to_vec();
    trim(field, &mut b);
    let lead_inv = field
        .inv(*b.last().expect("nonzero divisor"))
        .expect("trimmed leading coefficient is nonzero");
    let mut r = a.to_vec();
    trim(field, &mut r);
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = field.mul(*r.last().unwrap(), lead_inv);
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = field.sub(r[shift + i], field.mul(factor, bc));
        }
        trim(field, &mut r);
    }
    r
}

/// Roots of a polynomial by exhaustive evaluation, in enumeration order.
/// The zero polynomial vanishes everywhere, so every element is returned.
pub fn poly_roots<F: FiniteField>(field: &F, coeffs: &[F::Elem]) -> Vec<F::Elem> {
    (0..field.order())
        .map(|i| field.from_index(i))
        .filter(|&x| field.is_zero(poly_eval(field, coeffs, x)))
        .collect()
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-`order` digits of `n` (little endian).
fn monic_from_counter<F: FiniteField>(field: &F, degree: usize, mut n: u64) -> DensePoly<F::Elem> {
    let order = field.order();
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..degree {
        coeffs.push(field.from_index(n % order));
        n /= order;
    }
    coeffs.push(field.one());
    coeffs
}

/// Exhaustive irreducibility check: trial division by every monic polynomial
/// of degree `1..=deg/2`.
pub fn is_irreducible<F: FiniteField>(field: &F, f: &[F::Elem]) -> bool {
    let mut f = f.to_vec();
    trim(field, &mut f);
    if f.len() < 2 {
        return false;
    }
    let deg = f.len() - 1;
    let order = field.order();
    for d in 1..=deg / 2 {
        let count = order.checked_pow(d as u32).expect("divisor count overflow");
        for n in 0..count {
            let g = monic_from_counter(field, d, n);
            if poly_rem(field, &f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Lexicographically smallest monic irreducible polynomial of `degree` over
/// `field`, comparing the tuple `(c_{d-1}, ..., c_0)` of canonical encodings.
/// Returned low degree first, leading 1 included.
pub fn find_irreducible<F: FiniteField>(field: &F, degree: usize) -> DensePoly<F::Elem> {
    assert!(degree >= 1, "degree must be positive");
    let count = field
        .order()
        .checked_pow(degree as u32)
        .expect("candidate count overflow");
    (0..count)
        .map(|n| monic_from_counter(field, degree, n))
        .find(|f| is_irreducible(field, f))
        .expect("irreducible polynomials exist in every degree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeExtField;

    fn idx(f: &PrimeExtField, p: &[u32]) -> Vec<u64> {
        p.iter().map(|&c| f.index(c)).collect()
    }

    #[test]
    fn smallest_irreducibles_over_prime_fields() {
        let f3 = PrimeExtField::prime(3).unwrap();
        let f5 = PrimeExtField::prime(5).unwrap();
        // t^2 + 1
        assert_eq!(idx(&f3, &find_irreducible(&f3, 2)), vec![1, 0, 1]);
        // x^3 + x + 1
        assert_eq!(idx(&f5, &find_irreducible(&f5, 3)), vec![1, 1, 0, 1]);
        // x^3 + 2x + 1
        assert_eq!(idx(&f3, &find_irreducible(&f3, 3)), vec![1, 2, 0, 1]);
    }

    #[test]
    fn lex_order_oracle_degree_three_over_f5() {
        // every x^3 + c is reducible since cubing permutes F_5
        let f5 = PrimeExtField::prime(5).unwrap();
        for c in 0..5 {
            let poly = vec![c, 0, 0, 1];
            assert!(!poly_roots(&f5, &poly).is_empty());
            assert!(!is_irreducible(&f5, &poly));
        }
    }

    #[test]
    fn reducible_quartic_without_roots() {
        // (x^2+1)^2 over F_3 has no roots but is reducible
        let f3 = PrimeExtField::prime(3).unwrap();
        let poly = vec![1, 0, 2, 0, 1];
        assert!(poly_roots(&f3, &poly).is_empty());
        assert!(!is_irreducible(&f3, &poly));
    }

    #[test]
    fn deterministic() {
        let f7 = PrimeExtField::prime(7).unwrap();
        assert_eq!(find_irreducible(&f7, 3), find_irreducible(&f7, 3));
    }
}
