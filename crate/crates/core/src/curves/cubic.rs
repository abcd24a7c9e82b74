use crate::gf::FiniteField;

/// Exponents `(i, j, k)` of `X^i Y^j T^k`, the coefficient order used by
/// [`TernaryCubic`].
pub const MONOMIALS: [(u8, u8, u8); 10] = [
    (3, 0, 0),
    (2, 1, 0),
    (2, 0, 1),
    (1, 2, 0),
    (1, 1, 1),
    (1, 0, 2),
    (0, 3, 0),
    (0, 2, 1),
    (0, 1, 2),
    (0, 0, 3),
];

/// Position of `X^i Y^j T^k` in [`MONOMIALS`].
pub fn monomial_index(i: u8, j: u8, k: u8) -> usize {
    debug_assert_eq!(i + j + k, 3);
    MONOMIALS
        .iter()
        .position(|&m| m == (i, j, k))
        .expect("degree-3 monomial")
}

/// `u X + v Y + w T`.
pub type LinearForm<E> = [E; 3];

/// Homogeneous cubic in `(X, Y, T)`.
///
/// When a cubic is evaluated at `(C, C^q, C^{q^2})` the variables carry the
/// Frobenius twists in that order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TernaryCubic<E> {
    pub coeffs: [E; 10],
}

impl<E: Copy + Eq> TernaryCubic<E> {
    pub fn zero<F: FiniteField<Elem = E>>(field: &F) -> Self {
        TernaryCubic {
            coeffs: [field.zero(); 10],
        }
    }

    pub fn coeff(&self, i: u8, j: u8, k: u8) -> E {
        self.coeffs[monomial_index(i, j, k)]
    }

    pub fn is_zero<F: FiniteField<Elem = E>>(&self, field: &F) -> bool {
        self.coeffs.iter().all(|&c| field.is_zero(c))
    }

    pub fn eval<F: FiniteField<Elem = E>>(&self, field: &F, x: E, y: E, t: E) -> E {
        let pw = |v: E| {
            [
                field.one(),
                v,
                field.mul(v, v),
                field.mul(field.mul(v, v), v),
            ]
        };
        let (px, py, pt) = (pw(x), pw(y), pw(t));
        MONOMIALS
            .iter()
            .zip(&self.coeffs)
            .fold(field.zero(), |acc, (&(i, j, k), &c)| {
                if field.is_zero(c) {
                    return acc;
                }
                let m = field.mul(field.mul(px[i as usize], py[j as usize]), pt[k as usize]);
                field.add(acc, field.mul(c, m))
            })
    }

    pub fn add<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut out = *self;
        for (o, &c) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *o = field.add(*o, c);
        }
        out
    }

    pub fn scale<F: FiniteField<Elem = E>>(&self, field: &F, s: E) -> Self {
        let mut out = *self;
        for c in out.coeffs.iter_mut() {
            *c = field.mul(*c, s);
        }
        out
    }

    /// Coefficient-wise conversion, e.g. embedding into an extension field.
    pub fn map<G: Copy + Eq>(&self, f: impl Fn(E) -> G) -> TernaryCubic<G> {
        TernaryCubic {
            coeffs: self.coeffs.map(f),
        }
    }

    /// `P(L_0, L_1, L_2)` for linear forms `L_i` in `(X, Y, T)`.
    pub fn substitute<F: FiniteField<Elem = E>>(
        &self,
        field: &F,
        forms: &[LinearForm<E>; 3],
    ) -> Self {
        let mut out = Self::zero(field);
        let powers = |l: &LinearForm<E>| -> [Poly3<E>; 4] {
            let one = Poly3::constant(field, field.one());
            let p1 = Poly3::linear(field, l);
            let p2 = p1.mul(field, &p1);
            let p3 = p2.mul(field, &p1);
            [one, p1, p2, p3]
        };
        let px = powers(&forms[0]);
        let py = powers(&forms[1]);
        let pt = powers(&forms[2]);
        for (&(i, j, k), &c) in MONOMIALS.iter().zip(&self.coeffs) {
            if field.is_zero(c) {
                continue;
            }
            let term = px[i as usize]
                .mul(field, &py[j as usize])
                .mul(field, &pt[k as usize]);
            for (e, v) in term.terms {
                let idx = monomial_index(e.0, e.1, e.2);
                out.coeffs[idx] = field.add(out.coeffs[idx], field.mul(c, v));
            }
        }
        out
    }

    /// `P(Y, X, T)`.
    pub fn swap_xy<F: FiniteField<Elem = E>>(&self, field: &F) -> Self {
        let (z, o) = (field.zero(), field.one());
        self.substitute(field, &[[z, o, z], [o, z, z], [z, z, o]])
    }

    /// Product of three linear forms.
    pub fn product_of_lines<F: FiniteField<Elem = E>>(
        field: &F,
        lines: &[LinearForm<E>; 3],
    ) -> Self {
        let p = Poly3::linear(field, &lines[0])
            .mul(field, &Poly3::linear(field, &lines[1]))
            .mul(field, &Poly3::linear(field, &lines[2]));
        let mut out = Self::zero(field);
        for (e, v) in p.terms {
            let idx = monomial_index(e.0, e.1, e.2);
            out.coeffs[idx] = field.add(out.coeffs[idx], v);
        }
        out
    }

    /// `Some(λ)` with `self = λ · other` when `other` is nonzero and the two
    /// are proportional.
    pub fn ratio_to<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Option<E> {
        let pivot = other.coeffs.iter().position(|&c| !field.is_zero(c))?;
        let lambda = field.div(self.coeffs[pivot], other.coeffs[pivot])?;
        (*self == other.scale(field, lambda)).then_some(lambda)
    }
}

/// Sparse product of linear forms while expanding, keyed by exponents.
#[derive(Debug, Clone)]
struct Poly3<E> {
    terms: Vec<((u8, u8, u8), E)>,
}

impl<E: Copy + Eq> Poly3<E> {
    fn constant<F: FiniteField<Elem = E>>(_field: &F, c: E) -> Self {
        Poly3 {
            terms: vec![((0, 0, 0), c)],
        }
    }

    fn linear<F: FiniteField<Elem = E>>(field: &F, l: &LinearForm<E>) -> Self {
        let exps = [(1, 0, 0), (0, 1, 0), (0, 0, 1)];
        Poly3 {
            terms: exps
                .into_iter()
                .zip(l.iter().copied())
                .filter(|(_, c)| !field.is_zero(*c))
                .collect(),
        }
    }

    fn mul<F: FiniteField<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        let mut terms: Vec<((u8, u8, u8), E)> = Vec::new();
        for &(ea, ca) in &self.terms {
            for &(eb, cb) in &other.terms {
                let e = (ea.0 + eb.0, ea.1 + eb.1, ea.2 + eb.2);
                let v = field.mul(ca, cb);
                match terms.iter_mut().find(|(k, _)| *k == e) {
                    Some((_, acc)) => *acc = field.add(*acc, v),
                    None => terms.push((e, v)),
                }
            }
        }
        Poly3 { terms }
    }
}

/// Whether the line `uX + vY + wT = 0` is a component of `P`.
pub fn line_divides<F: FiniteField>(
    field: &F,
    p: &TernaryCubic<F::Elem>,
    line: &LinearForm<F::Elem>,
) -> bool {
    let (z, o) = (field.zero(), field.one());
    // solve the line for one variable with a nonzero coefficient
    let Some(pivot) = line.iter().position(|&c| !field.is_zero(c)) else {
        return false;
    };
    let inv = field.inv(line[pivot]).expect("nonzero pivot");
    let mut forms = [[z, z, z]; 3];
    for (v, form) in forms.iter_mut().enumerate() {
        if v == pivot {
            for (w, slot) in form.iter_mut().enumerate() {
                if w != pivot {
                    *slot = field.neg(field.mul(line[w], inv));
                }
            }
        } else {
            form[v] = o;
        }
    }
    p.substitute(field, &forms).is_zero(field)
}
