use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::poly::find_irreducible;
use super::{is_prime, Ex, ExtField, FiniteField, GfError, Limits, PrimeExtField};

/// Element of `F_{q^3}` in the tower representation.
pub type E3 = Ex<3>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Level {
    Fp,
    Fq,
    Fq3,
}

/// A field element tagged with the level it lives at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Elt {
    Fp(u32),
    Fq(u32),
    Fq3(E3),
}

impl Elt {
    pub fn level(&self) -> Level {
        match self {
            Elt::Fp(_) => Level::Fp,
            Elt::Fq(_) => Level::Fq,
            Elt::Fq3(_) => Level::Fq3,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
    Pow(u64),
}

/// `F_p ⊂ F_q = F_{p^m} ⊂ F_{q^3}` with fixed moduli.
#[derive(Debug, Clone)]
pub struct FieldTower {
    fp: PrimeExtField,
    fq: Arc<PrimeExtField>,
    fq3: ExtField<3>,
    limits: Limits,
}

/// Tower with the lexicographically smallest moduli, bounded by the
/// environment-configured limit.
pub fn build_tower(p: u32, m: u32) -> Result<FieldTower, GfError> {
    build_tower_with_limits(p, m, Limits::from_env())
}

pub fn build_tower_with_limits(p: u32, m: u32, limits: Limits) -> Result<FieldTower, GfError> {
    check_params(p, m, &limits)?;
    let fp = PrimeExtField::prime(p)?;
    let mid = find_irreducible(&fp, m as usize);
    let fq = Arc::new(PrimeExtField::new(p, mid)?);
    let top = find_irreducible(fq.as_ref(), 3);
    let fq3 = ExtField::new(fq.clone(), &top)?;
    Ok(FieldTower {
        fp,
        fq,
        fq3,
        limits,
    })
}

/// Tower with caller-supplied moduli (low degree first, monic). Both are
/// checked for irreducibility.
pub fn build_tower_with_moduli(
    p: u32,
    mid_modulus: Vec<u32>,
    top_modulus: &[u32],
    limits: Limits,
) -> Result<FieldTower, GfError> {
    if mid_modulus.len() < 2 {
        return Err(GfError::InvalidDegree);
    }
    let m = (mid_modulus.len() - 1) as u32;
    check_params(p, m, &limits)?;
    let fp = PrimeExtField::prime(p)?;
    let fq = Arc::new(PrimeExtField::new(p, mid_modulus)?);
    let fq3 = ExtField::new(fq.clone(), top_modulus)?;
    Ok(FieldTower {
        fp,
        fq,
        fq3,
        limits,
    })
}

fn check_params(p: u32, m: u32, limits: &Limits) -> Result<(), GfError> {
    if p == 2 || !is_prime(p as u64) {
        return Err(GfError::NotOddPrime(p as u64));
    }
    if m == 0 {
        return Err(GfError::InvalidDegree);
    }
    let order = (p as u128).checked_pow(3 * m).ok_or(GfError::SizeLimit {
        order: u128::MAX,
        limit: limits.max_q3,
    })?;
    limits.check(order)
}

fn apply<F: FiniteField>(
    f: &F,
    op: ArithOp,
    a: F::Elem,
    b: Option<F::Elem>,
) -> Result<F::Elem, GfError> {
    let rhs = || b.ok_or(GfError::MissingOperand(op));
    Ok(match op {
        ArithOp::Add => f.add(a, rhs()?),
        ArithOp::Sub => f.sub(a, rhs()?),
        ArithOp::Mul => f.mul(a, rhs()?),
        ArithOp::Div => f.div(a, rhs()?).ok_or(GfError::DivisionByZero)?,
        ArithOp::Neg => f.neg(a),
        ArithOp::Inv => f.inv(a).ok_or(GfError::DivisionByZero)?,
        ArithOp::Pow(e) => f.pow(a, e),
    })
}

impl FieldTower {
    pub fn p(&self) -> u32 {
        self.fq.p()
    }

    pub fn m(&self) -> u32 {
        self.fq.degree()
    }

    pub fn q(&self) -> u64 {
        self.fq.order()
    }

    pub fn order_top(&self) -> u64 {
        self.fq3.order()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn fp(&self) -> &PrimeExtField {
        &self.fp
    }

    pub fn fq(&self) -> &PrimeExtField {
        &self.fq
    }

    pub fn fq3(&self) -> &ExtField<3> {
        &self.fq3
    }

    /// Defining polynomial of `F_q` over `F_p`, low degree first.
    pub fn mid_modulus(&self) -> &[u32] {
        self.fq.modulus()
    }

    /// Defining polynomial of `F_{q^3}` over `F_q`, low degree first
    /// (coefficients as `F_q` encodings).
    pub fn top_modulus(&self) -> Vec<u32> {
        self.fq3.modulus()
    }

    /// Errors with `SizeLimit` unless `q^3` may be enumerated.
    pub fn require_enumerable(&self) -> Result<(), GfError> {
        self.limits.check(self.order_top() as u128)
    }

    /// `x^{q^k}`, `k` taken mod 3.
    pub fn frobenius_q(&self, x: E3, k: usize) -> E3 {
        self.fq3.frob(x, k)
    }

    /// `F_q` element embedded in `F_{q^3}`.
    pub fn embed(&self, a: u32) -> E3 {
        self.fq3.embed(a)
    }

    pub fn field_arith(&self, op: ArithOp, a: Elt, b: Option<Elt>) -> Result<Elt, GfError> {
        if let Some(b) = b {
            if b.level() != a.level() {
                return Err(GfError::LevelMismatch(a.level(), b.level()));
            }
        }
        Ok(match a {
            Elt::Fp(x) => {
                let y = b.map(|e| match e {
                    Elt::Fp(v) => v,
                    _ => unreachable!(),
                });
                Elt::Fp(apply(&self.fp, op, x, y)?)
            }
            Elt::Fq(x) => {
                let y = b.map(|e| match e {
                    Elt::Fq(v) => v,
                    _ => unreachable!(),
                });
                Elt::Fq(apply(self.fq.as_ref(), op, x, y)?)
            }
            Elt::Fq3(x) => {
                let y = b.map(|e| match e {
                    Elt::Fq3(v) => v,
                    _ => unreachable!(),
                });
                Elt::Fq3(apply(&self.fq3, op, x, y)?)
            }
        })
    }

    pub fn level_order(&self, level: Level) -> u64 {
        match level {
            Level::Fp => self.p() as u64,
            Level::Fq => self.q(),
            Level::Fq3 => self.order_top(),
        }
    }

    /// Canonical integer encoding.
    pub fn encode(&self, e: Elt) -> u64 {
        match e {
            Elt::Fp(x) | Elt::Fq(x) => x as u64,
            Elt::Fq3(x) => self.fq3.index(x),
        }
    }

    pub fn decode(&self, level: Level, value: u64) -> Result<Elt, GfError> {
        let order = self.level_order(level);
        if value >= order {
            return Err(GfError::InvalidEncoding {
                value,
                level,
                order,
            });
        }
        Ok(match level {
            Level::Fp => Elt::Fp(value as u32),
            Level::Fq => Elt::Fq(value as u32),
            Level::Fq3 => Elt::Fq3(self.fq3.from_index(value)),
        })
    }

    /// Coefficients over the immediate base field.
    pub fn coeffs(&self, e: Elt) -> Vec<u32> {
        match e {
            Elt::Fp(x) => vec![x],
            Elt::Fq(x) => self.fq.digits(x),
            Elt::Fq3(x) => x.0.to_vec(),
        }
    }
}

fn det3_fq(f: &PrimeExtField, m: [[u32; 3]; 3]) -> u32 {
    let t0 = f.mul(
        m[0][0],
        f.sub(f.mul(m[1][1], m[2][2]), f.mul(m[1][2], m[2][1])),
    );
    let t1 = f.mul(
        m[0][1],
        f.sub(f.mul(m[1][0], m[2][2]), f.mul(m[1][2], m[2][0])),
    );
    let t2 = f.mul(
        m[0][2],
        f.sub(f.mul(m[1][0], m[2][1]), f.mul(m[1][1], m[2][0])),
    );
    f.add(f.sub(t0, t1), t2)
}

/// True when `{x, x^q, x^{q^2}}` is an `F_q`-basis of `F_{q^3}`.
pub fn is_normal_element(tower: &FieldTower, x: E3) -> bool {
    let rows = [x.0, tower.frobenius_q(x, 1).0, tower.frobenius_q(x, 2).0];
    det3_fq(tower.fq(), rows) != 0
}

/// First element in enumeration order generating a normal basis.
pub fn find_normal_element(tower: &FieldTower) -> E3 {
    (1..tower.order_top())
        .map(|i| tower.fq3().from_index(i))
        .find(|&x| is_normal_element(tower, x))
        .expect("normal bases always exist")
}

/// Smaller (by encoding) square root of `a` in `F_q`, `None` for non-squares.
pub fn sqrt_in_fq(fq: &PrimeExtField, a: u32) -> Option<u32> {
    (0..fq.q()).find(|&x| fq.mul(x, x) == a)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_examples() {
        let t = build_tower(5, 1).unwrap();
        assert_eq!((t.q(), t.order_top()), (5, 125));
        let t = build_tower(3, 2).unwrap();
        assert_eq!((t.q(), t.order_top()), (9, 729));
        assert_eq!(t.mid_modulus(), &[1, 0, 1]);
        assert_eq!(build_tower(2, 1).unwrap_err(), GfError::NotOddPrime(2));
        assert_eq!(build_tower(15, 1).unwrap_err(), GfError::NotOddPrime(15));
    }

    #[test]
    fn size_limit() {
        let small = Limits { max_q3: 1000 };
        assert!(build_tower_with_limits(7, 1, small).is_ok());
        assert!(matches!(
            build_tower_with_limits(11, 1, small),
            Err(GfError::SizeLimit { order: 1331, .. })
        ));
        assert!(matches!(
            build_tower_with_limits(3, 200, small),
            Err(GfError::SizeLimit { .. })
        ));
    }

    #[test]
    fn arith_examples() {
        let t5 = build_tower(5, 1).unwrap();
        let add = t5
            .field_arith(ArithOp::Add, Elt::Fq(3), Some(Elt::Fq(4)))
            .unwrap();
        assert_eq!(add, Elt::Fq(2));
        assert_eq!(
            t5.field_arith(ArithOp::Inv, Elt::Fq(3), None).unwrap(),
            Elt::Fq(2)
        );
        assert_eq!(
            t5.field_arith(ArithOp::Inv, Elt::Fq(0), None).unwrap_err(),
            GfError::DivisionByZero
        );
        assert_eq!(
            t5.field_arith(ArithOp::Div, Elt::Fp(1), Some(Elt::Fp(0)))
                .unwrap_err(),
            GfError::DivisionByZero
        );
        assert!(matches!(
            t5.field_arith(ArithOp::Add, Elt::Fq(1), Some(Elt::Fp(1))),
            Err(GfError::LevelMismatch(Level::Fq, Level::Fp))
        ));
        assert!(matches!(
            t5.field_arith(ArithOp::Mul, Elt::Fq(1), None),
            Err(GfError::MissingOperand(ArithOp::Mul))
        ));

        // F_9 = F_3[t]/(t^2+1): t*t = 2
        let t9 = build_tower(3, 2).unwrap();
        let tt = t9
            .field_arith(ArithOp::Mul, Elt::Fq(3), Some(Elt::Fq(3)))
            .unwrap();
        assert_eq!(tt, Elt::Fq(2));
    }

    #[test]
    fn encode_decode() {
        let t = build_tower(3, 2).unwrap();
        for level in [Level::Fp, Level::Fq, Level::Fq3] {
            for v in 0..t.level_order(level) {
                let e = t.decode(level, v).unwrap();
                assert_eq!(t.encode(e), v);
            }
            assert!(t.decode(level, t.level_order(level)).is_err());
        }
        let e = t.decode(Level::Fq3, 5 + 9 * 7).unwrap();
        assert_eq!(t.coeffs(e), vec![5, 7, 0]);
        assert_eq!(t.coeffs(Elt::Fq(7)), vec![1, 2]);
    }

    #[test]
    fn frobenius_properties() {
        let t = build_tower(3, 1).unwrap();
        let f = t.fq3();
        for a in 0..3 {
            for k in 0..5 {
                assert_eq!(t.frobenius_q(t.embed(a), k), t.embed(a));
            }
        }
        for i in 0..27 {
            let x = f.from_index(i);
            assert_eq!(t.frobenius_q(x, 3), x);
            assert_eq!(t.frobenius_q(x, 1), f.pow(x, 3));
            for j in 0..27 {
                let y = f.from_index(j);
                assert_eq!(
                    t.frobenius_q(f.add(x, y), 1),
                    f.add(t.frobenius_q(x, 1), t.frobenius_q(y, 1))
                );
                assert_eq!(
                    t.frobenius_q(f.mul(x, y), 1),
                    f.mul(t.frobenius_q(x, 1), t.frobenius_q(y, 1))
                );
            }
        }
    }

    #[test]
    fn normal_element_q3_matches_scan() {
        let t = build_tower(3, 1).unwrap();
        let xi = find_normal_element(&t);
        assert!(is_normal_element(&t, xi));
        // independent oracle: solve for F_3-linear independence by brute force
        let f = t.fq3();
        let conj = [xi, t.frobenius_q(xi, 1), t.frobenius_q(xi, 2)];
        for combo in 1..27u64 {
            let (a, b, c) = (combo % 3, combo / 3 % 3, combo / 9);
            let s = f.add(
                f.add(f.scale(a as u32, conj[0]), f.scale(b as u32, conj[1])),
                f.scale(c as u32, conj[2]),
            );
            assert_ne!(s, f.zero());
        }
        // no earlier element passes
        for i in 0..f.index(xi) {
            assert!(!is_normal_element(&t, f.from_index(i)));
        }
        for a in 0..3 {
            assert!(!is_normal_element(&t, t.embed(a)));
        }
        assert_eq!(find_normal_element(&t), xi);
    }

    #[test]
    fn square_roots() {
        let f7 = PrimeExtField::prime(7).unwrap();
        assert_eq!(sqrt_in_fq(&f7, 4), Some(2));
        let f5 = PrimeExtField::prime(5).unwrap();
        assert_eq!(sqrt_in_fq(&f5, 2), None);
        assert_eq!(sqrt_in_fq(&f5, 0), Some(0));
        assert_eq!(sqrt_in_fq(&f5, 4), Some(2));
    }

    #[test]
    fn explicit_moduli_override() {
        let t =
            build_tower_with_moduli(3, vec![2, 2, 1], &[1, 2, 0, 1], Limits::default()).unwrap();
        assert_eq!(t.q(), 9);
        assert!(
            build_tower_with_moduli(3, vec![2, 0, 1], &[1, 2, 0, 1], Limits::default()).is_err()
        );
    }
}
