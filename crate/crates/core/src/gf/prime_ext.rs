use super::poly::is_irreducible;
use super::{is_prime, FiniteField, GfError};

/// Largest order for which a full addition table is materialized.
const ADD_TABLE_MAX: u32 = 4096;
/// Hard cap on the flat field order (table memory).
const FLAT_ORDER_MAX: u64 = 1 << 26;

/// The field `F_{p^m} = F_p[t] / (modulus)`.
///
/// An element is its canonical encoding: the coefficient of `t^i` is the
/// `i`-th base-`p` digit. Multiplication and inversion use log/antilog tables
/// over a primitive element found at construction time.
#[derive(Debug, Clone)]
pub struct PrimeExtField {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add_table: Option<Vec<u16>>,
    primitive: u32,
}

fn mul_mod_digits(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let m = modulus.len() - 1;
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p64;
        }
    }
    // modulus is monic: t^m = -(c_0 + ... + c_{m-1} t^{m-1})
    for k in (m..2 * m).rev() {
        let c = prod[k];
        if c == 0 {
            continue;
        }
        prod[k] = 0;
        for (i, &mc) in modulus[..m].iter().enumerate() {
            let sub = c * mc as u64 % p64;
            prod[k - m + i] = (prod[k - m + i] + p64 - sub) % p64;
        }
    }
    prod.truncate(m);
    prod.into_iter().map(|x| x as u32).collect()
}

impl PrimeExtField {
    /// The prime field `F_p`, realized with modulus `t`.
    pub fn prime(p: u32) -> Result<Self, GfError> {
        Self::build(p, vec![0, 1])
    }

    /// `F_p[t]/(modulus)` with `modulus` monic, given low degree first as
    /// integers in `0..p`. Irreducibility is verified exhaustively.
    pub fn new(p: u32, modulus: Vec<u32>) -> Result<Self, GfError> {
        if !is_prime(p as u64) || p == 2 {
            return Err(GfError::NotOddPrime(p as u64));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(GfError::InvalidModulus(
                "modulus must be monic of degree >= 1".into(),
            ));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(GfError::InvalidModulus(format!(
                "coefficients must lie in 0..{p}"
            )));
        }
        if modulus.len() > 2 {
            let fp = Self::prime(p)?;
            if !is_irreducible(&fp, &modulus) {
                return Err(GfError::InvalidModulus(format!(
                    "{modulus:?} is reducible over F_{p}"
                )));
            }
        }
        Self::build(p, modulus)
    }

    fn build(p: u32, modulus: Vec<u32>) -> Result<Self, GfError> {
        if !is_prime(p as u64) || p == 2 {
            return Err(GfError::NotOddPrime(p as u64));
        }
        let m = (modulus.len() - 1) as u32;
        let order = (p as u128).pow(m);
        if order > FLAT_ORDER_MAX as u128 {
            return Err(GfError::SizeLimit {
                order,
                limit: FLAT_ORDER_MAX,
            });
        }
        let q = order as u32;

        let to_digits = |mut n: u32| -> Vec<u32> {
            (0..m)
                .map(|_| {
                    let d = n % p;
                    n /= p;
                    d
                })
                .collect()
        };
        let from_digits = |d: &[u32]| -> u32 { d.iter().rev().fold(0, |acc, &x| acc * p + x) };

        // first element (in encoding order) whose powers cover F_q^*
        let mut exp = Vec::new();
        let mut primitive = 0;
        for cand in 1..q {
            let g = to_digits(cand);
            let mut powers = Vec::with_capacity((q - 1) as usize);
            let mut cur = to_digits(1);
            loop {
                powers.push(from_digits(&cur));
                cur = mul_mod_digits(&cur, &g, &modulus, p);
                if from_digits(&cur) == 1 || powers.len() >= (q - 1) as usize {
                    break;
                }
            }
            if powers.len() == (q - 1) as usize && from_digits(&cur) == 1 {
                exp = powers;
                primitive = cand;
                break;
            }
        }
        if q == 2 {
            exp = vec![1];
            primitive = 1;
        }
        if exp.len() != (q - 1) as usize {
            return Err(GfError::InvalidModulus("no primitive element found".into()));
        }
        let mut log = vec![0u32; q as usize];
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u32;
        }
        let doubled: Vec<u32> = exp.iter().chain(exp.iter()).copied().collect();

        let neg: Vec<u32> = (0..q)
            .map(|a| {
                let d: Vec<u32> = to_digits(a).iter().map(|&x| (p - x) % p).collect();
                from_digits(&d)
            })
            .collect();

        let mut field = PrimeExtField {
            p,
            m,
            q,
            modulus,
            exp: doubled,
            log,
            neg,
            add_table: None,
            primitive,
        };
        if q <= ADD_TABLE_MAX {
            let mut table = Vec::with_capacity((q as usize) * (q as usize));
            for a in 0..q {
                for b in 0..q {
                    table.push(field.add_digits(a, b) as u16);
                }
            }
            field.add_table = Some(table);
        }
        Ok(field)
    }

    fn add_digits(&self, mut a: u32, mut b: u32) -> u32 {
        let mut r = 0;
        let mut place = 1;
        for _ in 0..self.m {
            let d = (a % self.p + b % self.p) % self.p;
            r += d * place;
            place *= self.p;
            a /= self.p;
            b /= self.p;
        }
        r
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Defining polynomial over `F_p`, low degree first (monic).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Generator of the multiplicative group used for the log tables.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    /// Base-`p` digits of an element (coefficients of `1, t, ..., t^{m-1}`).
    pub fn digits(&self, mut a: u32) -> Vec<u32> {
        (0..self.m)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.p + d % self.p)
    }
}

impl FiniteField for PrimeExtField {
    type Elem = u32;

    fn characteristic(&self) -> u32 {
        self.p
    }

    fn order(&self) -> u64 {
        self.q as u64
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }

    #[inline]
    fn one(&self) -> u32 {
        1
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        match &self.add_table {
            Some(t) => t[(a * self.q + b) as usize] as u32,
            None => self.add_digits(a, b),
        }
    }

    #[inline]
    fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize]
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[(self.log[a as usize] as u64 * (e % n) % n) as usize]
    }

    fn from_index(&self, index: u64) -> u32 {
        debug_assert!(index < self.q as u64);
        index as u32
    }

    fn index(&self, a: u32) -> u64 {
        a as u64
    }

    fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_examples() {
        let f5 = PrimeExtField::prime(5).unwrap();
        assert_eq!(f5.add(3, 4), 2);
        assert_eq!(f5.inv(3), Some(2));
        assert_eq!(f5.inv(0), None);
        assert_eq!(f5.sub(1, 3), 3);
        assert_eq!(f5.from_int(-3), 2);
    }

    #[test]
    fn f9_with_t_squared_plus_one() {
        let f9 = PrimeExtField::new(3, vec![1, 0, 1]).unwrap();
        // t has encoding 3; t*t = -1 = 2
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.digits(7), vec![1, 2]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            PrimeExtField::prime(2).unwrap_err(),
            GfError::NotOddPrime(2)
        );
        assert_eq!(
            PrimeExtField::prime(9).unwrap_err(),
            GfError::NotOddPrime(9)
        );
        // t^2 + 2 = (t+1)(t+2) over F_3
        assert!(matches!(
            PrimeExtField::new(3, vec![2, 0, 1]),
            Err(GfError::InvalidModulus(_))
        ));
        assert!(PrimeExtField::new(3, vec![1, 0, 2]).is_err());
    }

    #[test]
    fn table_and_digitwise_addition_agree() {
        let f = PrimeExtField::new(3, vec![1, 2, 0, 1]).unwrap();
        for a in 0..27 {
            for b in 0..27 {
                assert_eq!(f.add(a, b), f.add_digits(a, b));
            }
        }
    }

    #[test]
    fn exhaustive_axioms_f27() {
        let f = PrimeExtField::new(3, vec![1, 2, 0, 1]).unwrap();
        for a in 0..27 {
            assert_eq!(f.add(a, f.neg(a)), 0);
            if a != 0 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.pow(a, 26), 1);
            }
            for b in 0..27 {
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for c in 0..27 {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                }
            }
        }
    }

    #[test]
    fn multiplication_matches_schoolbook() {
        let f = PrimeExtField::new(5, vec![2, 0, 1]).unwrap();
        for a in 0..25u32 {
            for b in 0..25u32 {
                let direct = mul_mod_digits(&f.digits(a), &f.digits(b), f.modulus(), 5);
                assert_eq!(f.mul(a, b), f.from_digits(&direct));
            }
        }
    }
}
