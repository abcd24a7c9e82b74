use std::sync::Arc;

use super::poly::is_irreducible;
use super::{FiniteField, GfError, PrimeExtField};

/// Element of a degree-`D` extension: coefficients of `1, y, ..., y^{D-1}`
/// over the base field, each in its canonical encoding.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Ex<const D: usize>(pub [u32; D]);

/// `F_q[y] / (modulus)` for a monic irreducible `modulus` of degree `D`.
///
/// Frobenius `x -> x^{q^k}` is stored as the images of the power basis, so
/// applying it costs `D^2` base multiplications.
#[derive(Debug, Clone)]
pub struct ExtField<const D: usize> {
    base: Arc<PrimeExtField>,
    modulus: [u32; D],
    frob: Vec<[[u32; D]; D]>,
    order: u64,
}

impl<const D: usize> ExtField<D> {
    /// `modulus` is given low degree first including the leading 1.
    pub fn new(base: Arc<PrimeExtField>, modulus: &[u32]) -> Result<Self, GfError> {
        assert!(
            (1..=4).contains(&D),
            "extension degree out of supported range"
        );
        if modulus.len() != D + 1 || modulus[D] != 1 {
            return Err(GfError::InvalidModulus(format!(
                "expected a monic polynomial of degree {D}"
            )));
        }
        if modulus.iter().any(|&c| c as u64 >= base.order()) {
            return Err(GfError::InvalidModulus("coefficient out of range".into()));
        }
        if !is_irreducible(base.as_ref(), modulus) {
            return Err(GfError::InvalidModulus(format!(
                "{modulus:?} is reducible over F_{}",
                base.q()
            )));
        }
        let order = (base.order() as u128).pow(D as u32);
        if order > u64::MAX as u128 {
            return Err(GfError::SizeLimit {
                order,
                limit: u64::MAX,
            });
        }
        let mut low = [0u32; D];
        low.copy_from_slice(&modulus[..D]);
        let mut field = ExtField {
            base,
            modulus: low,
            frob: Vec::new(),
            order: order as u64,
        };

        // images of y^i under x -> x^{q^k}, by generic exponentiation
        let q = field.base.order();
        let mut frob = Vec::with_capacity(D);
        for k in 0..D {
            let mut rows = [[0u32; D]; D];
            for (i, row) in rows.iter_mut().enumerate() {
                let mut basis = [0u32; D];
                basis[i] = 1;
                let mut img = Ex(basis);
                for _ in 0..k {
                    img = field.pow(img, q);
                }
                *row = img.0;
            }
            frob.push(rows);
        }
        field.frob = frob;
        Ok(field)
    }

    pub fn base(&self) -> &PrimeExtField {
        &self.base
    }

    pub fn base_arc(&self) -> &Arc<PrimeExtField> {
        &self.base
    }

    /// Defining polynomial, low degree first, leading 1 included.
    pub fn modulus(&self) -> Vec<u32> {
        let mut v = self.modulus.to_vec();
        v.push(1);
        v
    }

    /// Base field element viewed in the extension.
    #[inline]
    pub fn embed(&self, a: u32) -> Ex<D> {
        let mut c = [0u32; D];
        c[0] = a;
        Ex(c)
    }

    /// Multiplication by a base field scalar.
    #[inline]
    pub fn scale(&self, a: u32, x: Ex<D>) -> Ex<D> {
        Ex(std::array::from_fn(|i| self.base.mul(a, x.0[i])))
    }

    /// `x^{q^k}` through the precomputed linear action; `k` is taken mod `D`.
    #[inline]
    pub fn frob(&self, x: Ex<D>, k: usize) -> Ex<D> {
        let k = k % D;
        if k == 0 {
            return x;
        }
        let b = &self.base;
        let images = &self.frob[k];
        let mut out = [0u32; D];
        for (i, &xi) in x.0.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..D {
                out[j] = b.add(out[j], b.mul(xi, images[i][j]));
            }
        }
        Ex(out)
    }

    /// True when `x` lies in the base field, i.e. is fixed by Frobenius.
    pub fn in_base(&self, x: Ex<D>) -> bool {
        self.frob(x, 1) == x
    }

    /// Base field coordinate of an element that lies in the base field.
    pub fn project(&self, x: Ex<D>) -> Option<u32> {
        if self.in_base(x) {
            debug_assert!(x.0[1..].iter().all(|&c| c == 0));
            Some(x.0[0])
        } else {
            None
        }
    }

    /// Absolute trace down to the base field.
    pub fn trace(&self, x: Ex<D>) -> u32 {
        let mut acc = self.zero();
        for k in 0..D {
            acc = self.add(acc, self.frob(x, k));
        }
        self.project(acc).expect("trace lies in the base field")
    }
}

impl<const D: usize> FiniteField for ExtField<D> {
    type Elem = Ex<D>;

    fn characteristic(&self) -> u32 {
        self.base.p()
    }

    fn order(&self) -> u64 {
        self.order
    }

    #[inline]
    fn zero(&self) -> Ex<D> {
        Ex([0; D])
    }

    #[inline]
    fn one(&self) -> Ex<D> {
        self.embed(1)
    }

    #[inline]
    fn add(&self, a: Ex<D>, b: Ex<D>) -> Ex<D> {
        Ex(std::array::from_fn(|i| self.base.add(a.0[i], b.0[i])))
    }

    #[inline]
    fn sub(&self, a: Ex<D>, b: Ex<D>) -> Ex<D> {
        Ex(std::array::from_fn(|i| self.base.sub(a.0[i], b.0[i])))
    }

    #[inline]
    fn neg(&self, a: Ex<D>) -> Ex<D> {
        Ex(std::array::from_fn(|i| self.base.neg(a.0[i])))
    }

    #[inline]
    fn mul(&self, a: Ex<D>, b: Ex<D>) -> Ex<D> {
        let f = &self.base;
        let mut prod = [0u32; 8];
        for i in 0..D {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..D {
                prod[i + j] = f.add(prod[i + j], f.mul(a.0[i], b.0[j]));
            }
        }
        // y^D = -(m_0 + m_1 y + ... + m_{D-1} y^{D-1})
        for k in (D..2 * D - 1).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for i in 0..D {
                prod[k - D + i] = f.sub(prod[k - D + i], f.mul(c, self.modulus[i]));
            }
        }
        let mut out = [0u32; D];
        out.copy_from_slice(&prod[..D]);
        Ex(out)
    }

    fn inv(&self, a: Ex<D>) -> Option<Ex<D>> {
        if self.is_zero(a) {
            None
        } else {
            Some(self.pow(a, self.order - 2))
        }
    }

    fn from_index(&self, mut index: u64) -> Ex<D> {
        let q = self.base.order();
        let mut c = [0u32; D];
        for slot in c.iter_mut() {
            *slot = (index % q) as u32;
            index /= q;
        }
        Ex(c)
    }

    #[inline]
    fn index(&self, a: Ex<D>) -> u64 {
        let q = self.base.order();
        a.0.iter().rev().fold(0, |acc, &c| acc * q + c as u64)
    }

    fn from_int(&self, n: i64) -> Ex<D> {
        self.embed(self.base.from_int(n))
    }
}
