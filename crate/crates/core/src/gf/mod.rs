//! Finite field arithmetic for the tower `F_p ⊂ F_q = F_{p^m} ⊂ F_{q^3}`.
//!
//! Two concrete field types live here:
//!
//! - [`PrimeExtField`]: a flat field `F_{p^m}` with elements stored as their
//!   canonical integer encoding (little-endian base-`p` digits). Multiplication
//!   goes through log/antilog tables.
//! - [`ExtField`]: a degree-`D` extension of a [`PrimeExtField`], elements are
//!   coefficient arrays over the base field. Frobenius is a precomputed
//!   linear map.
//!
//! [`FieldTower`] ties them together for the `q`/`q^3` pair the rest of the
//! crate works with. Everything here is immutable after construction.

mod ext;
mod poly;
mod prime_ext;
mod tower;

pub use ext::{Ex, ExtField};
pub use poly::{find_irreducible, is_irreducible, poly_eval, poly_roots, DensePoly};
pub use prime_ext::PrimeExtField;
pub use tower::{
    build_tower, build_tower_with_limits, build_tower_with_moduli, find_normal_element,
    is_normal_element, sqrt_in_fq, ArithOp, Elt, FieldTower, Level, E3,
};

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

/// Default cap on `q^3` for anything that enumerates the top field.
pub const DEFAULT_MAX_Q3: u64 = 1 << 24;

/// Environment variable that overrides [`DEFAULT_MAX_Q3`].
pub const MAX_Q3_ENV: &str = "PLANARQ_MAX_Q3";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GfError {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("field order {order} exceeds the enumeration limit {limit}")]
    SizeLimit { order: u128, limit: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live at different levels ({0:?} vs {1:?})")]
    LevelMismatch(Level, Level),
    #[error("operation {0:?} needs a second operand")]
    MissingOperand(ArithOp),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("encoding {value} out of range for {level:?} (order {order})")]
    InvalidEncoding {
        value: u64,
        level: Level,
        order: u64,
    },
    #[error("extension degree must be at least 1")]
    InvalidDegree,
}

/// Enumeration bounds shared by every exhaustive routine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_q3: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_q3: DEFAULT_MAX_Q3,
        }
    }
}

impl Limits {
    /// Reads [`MAX_Q3_ENV`], falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_Q3_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<u64>().ok())
            .map(|max_q3| Limits { max_q3 })
            .unwrap_or_default()
    }

    pub fn check(&self, order: u128) -> Result<(), GfError> {
        if order > self.max_q3 as u128 {
            Err(GfError::SizeLimit {
                order,
                limit: self.max_q3,
            })
        } else {
            Ok(())
        }
    }
}

/// Common interface over the finite fields in this crate.
///
/// Elements are cheap `Copy` values; all arithmetic goes through the field
/// object, which owns the tables.
#[allow(clippy::wrong_self_convention)]
pub trait FiniteField: Send + Sync {
    type Elem: Copy + Eq + Hash + Debug + Send + Sync;

    fn characteristic(&self) -> u32;
    fn order(&self) -> u64;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn inv(&self, a: Self::Elem) -> Option<Self::Elem>;

    /// Element with the given canonical encoding. `index` must be below `order()`.
    fn from_index(&self, index: u64) -> Self::Elem;
    /// Canonical integer encoding.
    fn index(&self, a: Self::Elem) -> u64;

    /// Image of an integer in the prime subfield.
    fn from_int(&self, n: i64) -> Self::Elem;

    fn is_zero(&self, a: Self::Elem) -> bool {
        a == self.zero()
    }

    fn div(&self, a: Self::Elem, b: Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    fn square(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// All elements in enumeration (canonical encoding) order.
    fn elements(&self) -> Vec<Self::Elem> {
        (0..self.order()).map(|i| self.from_index(i)).collect()
    }

    /// Multiplicative order of a nonzero element.
    fn mult_order(&self, a: Self::Elem) -> Option<u64> {
        if self.is_zero(a) {
            return None;
        }
        let n = self.order() - 1;
        let mut ord = n;
        for (prime, _) in factorize(n) {
            while ord.is_multiple_of(prime) && self.pow(a, ord / prime) == self.one() {
                ord /= prime;
            }
        }
        Some(ord)
    }
}

/// Trial-division primality test; adequate for the field sizes handled here.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
