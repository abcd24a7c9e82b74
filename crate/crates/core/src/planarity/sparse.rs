use std::collections::BTreeMap;

use crate::gf::FiniteField;

/// Polynomial stored as exponent -> nonzero coefficient.
///
/// Exponents are reduced modulo `x^N - x` (`N` the field order) at
/// construction, so only functions on the field are represented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparsePoly<E> {
    terms: BTreeMap<u64, E>,
}

/// Exponent of the monomial equal to `x^e` as a function on a field of order `n`.
pub fn reduce_exponent(e: u128, n: u64) -> u64 {
    if e < n as u128 {
        e as u64
    } else {
        ((e - 1) % (n as u128 - 1) + 1) as u64
    }
}

impl<E: Copy + Eq> SparsePoly<E> {
    pub fn new<F, I>(field: &F, terms: I) -> Self
    where
        F: FiniteField<Elem = E>,
        I: IntoIterator<Item = (u128, E)>,
    {
        let n = field.order();
        let mut map: BTreeMap<u64, E> = BTreeMap::new();
        for (e, c) in terms {
            let e = reduce_exponent(e, n);
            let slot = map.entry(e).or_insert_with(|| field.zero());
            *slot = field.add(*slot, c);
        }
        map.retain(|_, c| !field.is_zero(*c));
        SparsePoly { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, E)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coeff(&self, e: u64) -> Option<E> {
        self.terms.get(&e).copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval<F: FiniteField<Elem = E>>(&self, field: &F, x: E) -> E {
        self.terms.iter().fold(field.zero(), |acc, (&e, &c)| {
            field.add(acc, field.mul(c, field.pow(x, e)))
        })
    }

    /// Human-readable form using canonical encodings for coefficients.
    pub fn display<F: FiniteField<Elem = E>>(&self, field: &F) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .rev()
            .map(|(&e, &c)| {
                let c = field.index(c);
                match (c, e) {
                    (_, 0) => format!("{c}"),
                    (1, 1) => "x".into(),
                    (1, _) => format!("x^{e}"),
                    (_, 1) => format!("[{c}]*x"),
                    _ => format!("[{c}]*x^{e}"),
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::PrimeExtField;

    #[test]
    fn exponent_reduction() {
        assert_eq!(reduce_exponent(0, 27), 0);
        assert_eq!(reduce_exponent(26, 27), 26);
        assert_eq!(reduce_exponent(27, 27), 1);
        assert_eq!(reduce_exponent(53, 27), 1);
        assert_eq!(reduce_exponent(54, 27), 2);
    }

    #[test]
    fn reduction_preserves_the_function() {
        let f = PrimeExtField::new(3, vec![1, 2, 0, 1]).unwrap();
        let raw = [(82u128, 1u32), (5, 2), (31, 1)];
        let poly = SparsePoly::new(&f, raw);
        for x in 0..27 {
            let direct = raw
                .iter()
                .fold(0, |acc, &(e, c)| f.add(acc, f.mul(c, f.pow(x, e as u64))));
            assert_eq!(poly.eval(&f, x), direct);
        }
    }

    #[test]
    fn merges_and_drops_zeros() {
        let f = PrimeExtField::prime(5).unwrap();
        // x^5 = x on F_5, so 2x^5 + 3x cancels
        let poly = SparsePoly::new(&f, [(5u128, 2u32), (1, 3), (2, 1)]);
        assert_eq!(poly.len(), 1);
        assert_eq!(poly.coeff(2), Some(1));
        assert_eq!(poly.display(&f), "x^2");
    }
}
