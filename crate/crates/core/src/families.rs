//! Catalog of known planar families with parameter validation, explicit
//! instantiation over `F_{p^d}` and exhaustive planarity checks.
//!
//! Side conditions are implemented verbatim. An instance that validates but
//! fails the brute-force check is reported as a discrepancy.
//!
//! `T3.3` requires `{a ∈ F^* : a^{p^m} = -a = a^{p^s}}` to be empty.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::gf::{find_irreducible, gcd, FiniteField, GfError, Limits, PrimeExtField};
use crate::planarity::{brute_is_planar, SparsePoly};

/// Largest field order checked exhaustively.
pub const BRUTE_MAX_ORDER: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyId {
    #[serde(rename = "T2.1")]
    T2_1,
    #[serde(rename = "T2.2")]
    T2_2,
    #[serde(rename = "T2.3")]
    T2_3,
    #[serde(rename = "T2.4")]
    T2_4,
    #[serde(rename = "T2.5")]
    T2_5,
    #[serde(rename = "T2.6")]
    T2_6,
    #[serde(rename = "T3.1")]
    T3_1,
    #[serde(rename = "T3.2")]
    T3_2,
    #[serde(rename = "T3.3")]
    T3_3,
    #[serde(rename = "T3.4")]
    T3_4,
    #[serde(rename = "T3.5")]
    T3_5,
}

impl FamilyId {
    pub const ALL: [FamilyId; 11] = [
        FamilyId::T2_1,
        FamilyId::T2_2,
        FamilyId::T2_3,
        FamilyId::T2_4,
        FamilyId::T2_5,
        FamilyId::T2_6,
        FamilyId::T3_1,
        FamilyId::T3_2,
        FamilyId::T3_3,
        FamilyId::T3_4,
        FamilyId::T3_5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::T2_1 => "T2.1",
            FamilyId::T2_2 => "T2.2",
            FamilyId::T2_3 => "T2.3",
            FamilyId::T2_4 => "T2.4",
            FamilyId::T2_5 => "T2.5",
            FamilyId::T2_6 => "T2.6",
            FamilyId::T3_1 => "T3.1",
            FamilyId::T3_2 => "T3.2",
            FamilyId::T3_3 => "T3.3",
            FamilyId::T3_4 => "T3.4",
            FamilyId::T3_5 => "T3.5",
        }
    }

    pub fn formula(self) -> &'static str {
        match self {
            FamilyId::T2_1 => "x^2",
            FamilyId::T2_2 => "x^(p^k+1)",
            FamilyId::T2_3 => "x^10 + x^6 - x^2",
            FamilyId::T2_4 => "x^10 - x^6 - x^2",
            FamilyId::T2_5 => "x^(p^s+1) - u^(p^k-1) x^(p^k+p^(2k+s))",
            FamilyId::T2_6 => "x^((3^k+1)/2)",
            FamilyId::T3_1 => "x^(p^s+1) - v x^(p^(2k)+p^(k+s))",
            FamilyId::T3_2 => "x^(p^s+1) - v x^(p^(3k)+p^(k+s))",
            FamilyId::T3_3 => "x^(p^m+1) + w b x^(p^s+1) + w b^(p^m) x^(p^m (p^s+1))",
            FamilyId::T3_4 => "x^2 + x^(2q^m) + G(x^(q^2+1)), G(x) = h(x - x^(q^m)), q = p^e",
            FamilyId::T3_5 => "x^2 + x^90",
        }
    }

    pub fn field(self) -> &'static str {
        match self {
            FamilyId::T2_1 | FamilyId::T2_2 => "F_{p^n}",
            FamilyId::T2_3 | FamilyId::T2_4 | FamilyId::T2_6 => "F_{3^n}",
            FamilyId::T2_5 | FamilyId::T3_1 => "F_{p^{3k}}",
            FamilyId::T3_2 => "F_{p^{4k}}",
            FamilyId::T3_3 => "F_{p^{2m}}",
            FamilyId::T3_4 => "F_{q^{2m}}",
            FamilyId::T3_5 => "F_{3^5}",
        }
    }

    /// Parameter names the family reads.
    pub fn parameters(self) -> &'static [&'static str] {
        match self {
            FamilyId::T2_1 => &["p", "n"],
            FamilyId::T2_2 => &["p", "n", "k"],
            FamilyId::T2_3 | FamilyId::T2_4 => &["n"],
            FamilyId::T2_5 => &["p", "k", "s", "u"],
            FamilyId::T2_6 => &["n", "k"],
            FamilyId::T3_1 | FamilyId::T3_2 => &["p", "k", "s", "v"],
            FamilyId::T3_3 => &["p", "m", "s", "omega", "beta"],
            FamilyId::T3_4 => &["p", "e", "m"],
            FamilyId::T3_5 => &[],
        }
    }

    fn fixed_p(self) -> Option<u32> {
        match self {
            FamilyId::T2_3 | FamilyId::T2_4 | FamilyId::T2_6 | FamilyId::T3_5 => Some(3),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        FamilyId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown family '{s}'"))
    }
}

/// A family together with its integer and element parameters. Element
/// parameters are canonical encodings; absent ones are searched in
/// enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub p: u32,
    pub n: Option<u32>,
    pub k: Option<u32>,
    pub s: Option<u32>,
    pub m: Option<u32>,
    pub e: Option<u32>,
    pub u: Option<u64>,
    pub v: Option<u64>,
    pub omega: Option<u64>,
    pub beta: Option<u64>,
}

impl FamilySpec {
    pub fn new(id: FamilyId) -> Self {
        FamilySpec {
            id,
            p: id.fixed_p().unwrap_or(3),
            n: None,
            k: None,
            s: None,
            m: None,
            e: None,
            u: None,
            v: None,
            omega: None,
            beta: None,
        }
    }

    /// Smallest admissible instance small enough for the brute check.
    pub fn default_instance(id: FamilyId) -> Self {
        let mut s = FamilySpec::new(id);
        match id {
            FamilyId::T2_1 | FamilyId::T2_3 | FamilyId::T2_4 => s.n = Some(5),
            FamilyId::T2_2 => (s.n, s.k) = (Some(5), Some(1)),
            FamilyId::T2_5 => (s.k, s.s) = (Some(1), Some(4)),
            FamilyId::T2_6 => (s.n, s.k) = (Some(5), Some(3)),
            FamilyId::T3_1 => (s.p, s.k, s.s) = (7, Some(1), Some(1)),
            FamilyId::T3_2 => (s.p, s.k, s.s) = (5, Some(1), Some(2)),
            FamilyId::T3_3 => (s.m, s.s) = (Some(2), Some(1)),
            FamilyId::T3_4 => (s.e, s.m) = (Some(1), Some(3)),
            FamilyId::T3_5 => {}
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("parameter validation failed: {}", .0.iter().map(|v| v.condition.as_str()).collect::<Vec<_>>().join("; "))]
    ValidationFailed(Vec<Violation>),
    #[error(
        "field F_{{{p}^{degree}}} does not match the family's field F_{{{want_p}^{want_degree}}}"
    )]
    FieldMismatch {
        p: u32,
        degree: u32,
        want_p: u32,
        want_degree: u32,
    },
    #[error(transparent)]
    Gf(#[from] GfError),
}

fn pow_u128(base: u32, e: u32) -> u128 {
    (base as u128).pow(e)
}

/// A side condition: its name and whether it holds.
struct Check {
    condition: String,
    ok: bool,
    detail: String,
}

fn check(condition: &str, ok: bool, detail: String) -> Check {
    Check {
        condition: condition.to_string(),
        ok,
        detail,
    }
}

fn require(name: &str, value: Option<u32>) -> Result<u32, Violation> {
    value.ok_or_else(|| Violation {
        condition: format!("parameter {name} is required"),
        detail: String::new(),
    })
}

/// Degree over `F_p` of the family's field.
pub fn field_degree(spec: &FamilySpec) -> Result<u32, Vec<Violation>> {
    let one = |r: Result<u32, Violation>| r.map_err(|v| vec![v]);
    Ok(match spec.id {
        FamilyId::T2_1 | FamilyId::T2_2 | FamilyId::T2_3 | FamilyId::T2_4 | FamilyId::T2_6 => {
            one(require("n", spec.n))?
        }
        FamilyId::T2_5 | FamilyId::T3_1 => 3 * one(require("k", spec.k))?,
        FamilyId::T3_2 => 4 * one(require("k", spec.k))?,
        FamilyId::T3_3 => 2 * one(require("m", spec.m))?,
        FamilyId::T3_4 => 2 * one(require("m", spec.m))? * one(require("e", spec.e))?,
        FamilyId::T3_5 => 5,
    })
}

/// `F_{p^d}` with the lexicographically smallest monic irreducible modulus.
pub fn family_field(spec: &FamilySpec) -> Result<PrimeExtField, FamilyError> {
    let d = field_degree(spec).map_err(FamilyError::ValidationFailed)?;
    if d == 0 {
        return Err(FamilyError::ValidationFailed(vec![Violation {
            condition: "field degree is positive".into(),
            detail: String::new(),
        }]));
    }
    if d == 1 {
        return Ok(PrimeExtField::prime(spec.p)?);
    }
    let fp = PrimeExtField::prime(spec.p)?;
    let order = pow_u128(spec.p, d);
    if order > 1 << 26 {
        return Err(GfError::SizeLimit {
            order,
            limit: 1 << 26,
        }
        .into());
    }
    Ok(PrimeExtField::new(
        spec.p,
        find_irreducible(&fp, d as usize),
    )?)
}

/// `a^{p^m} = -a = a^{p^s}` has a solution in `F^*`. Solved on discrete logs:
/// with `a = g^j`, `n = N - 1`, both `j (p^m - 1)` and `j (p^s - 1)` must be
/// `n/2 mod n`.
fn exceptional_set_nonempty(order: u64, p: u32, m: u32, s: u32) -> bool {
    let n = (order - 1) as u128;
    let half = n / 2;
    let am = (pow_u128(p, m) - 1) % n;
    let as_ = (pow_u128(p, s) - 1) % n;
    (0..n).any(|j| j * am % n == half && j * as_ % n == half)
}

/// Element parameters after the deterministic search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Elements {
    pub u: Option<u32>,
    pub v: Option<u32>,
    pub omega: Option<u32>,
    pub beta: Option<u32>,
}

fn first_element(field: &PrimeExtField, pred: impl Fn(u32) -> bool) -> Option<u32> {
    (1..field.order() as u32).find(|&x| pred(x))
}

fn given(field: &PrimeExtField, name: &str, value: Option<u64>) -> Result<Option<u32>, Violation> {
    match value {
        Some(x) if x >= field.order() => Err(Violation {
            condition: format!("{name} is a field element"),
            detail: format!("encoding {x} >= {}", field.order()),
        }),
        other => Ok(other.map(|x| x as u32)),
    }
}

/// Order `p^{2k} + p^k + 1` for `T3.1`, `p^{3k} + p^{2k} + p^k + 1` for `T3.2`.
fn required_v_order(spec: &FamilySpec, k: u32) -> u64 {
    let pk = |i| pow_u128(spec.p, i * k);
    let o = match spec.id {
        FamilyId::T3_1 => pk(2) + pk(1) + 1,
        _ => pk(3) + pk(2) + pk(1) + 1,
    };
    o as u64
}

fn integer_checks(spec: &FamilySpec) -> Result<Vec<Check>, Vec<Violation>> {
    let p = spec.p;
    let mut out = Vec::new();
    if !crate::gf::is_prime(p as u64) || p == 2 {
        return Err(vec![Violation {
            condition: "p is an odd prime".into(),
            detail: format!("p = {p}"),
        }]);
    }
    if let Some(fixed) = spec.id.fixed_p() {
        out.push(check(
            &format!("p = {fixed}"),
            p == fixed,
            format!("p = {p}"),
        ));
    }
    let req = |name: &str, v: Option<u32>| require(name, v).map_err(|e| vec![e]);
    match spec.id {
        FamilyId::T2_1 | FamilyId::T3_5 => {}
        FamilyId::T2_2 => {
            let (n, k) = (req("n", spec.n)?, req("k", spec.k)?);
            out.push(check("k <= n/2", 2 * k <= n, format!("k = {k}, n = {n}")));
            let r = n / gcd(k as u64, n as u64) as u32;
            out.push(check(
                "n/GCD(k,n) odd",
                r % 2 == 1,
                format!("n/gcd(k,n) = {r}"),
            ));
        }
        FamilyId::T2_3 | FamilyId::T2_4 => {
            let n = req("n", spec.n)?;
            out.push(check(
                "n >= 5 odd",
                n >= 5 && n % 2 == 1,
                format!("n = {n}"),
            ));
        }
        FamilyId::T2_5 => {
            let (k, s) = (req("k", spec.k)?, req("s", spec.s)?);
            out.push(check("GCD(k,3) = 1", k % 3 != 0, format!("k = {k}")));
            out.push(check(
                "k ≡ s (mod 3)",
                k % 3 == s % 3,
                format!("k = {k}, s = {s}"),
            ));
            out.push(check("s != k", s != k, format!("s = {s}")));
            let r = k / gcd(k as u64, s as u64) as u32;
            out.push(check(
                "k/GCD(k,s) odd",
                r % 2 == 1,
                format!("k/gcd(k,s) = {r}"),
            ));
        }
        FamilyId::T2_6 => {
            let (n, k) = (req("n", spec.n)?, req("k", spec.k)?);
            out.push(check(
                "k >= 3 odd",
                k >= 3 && k % 2 == 1,
                format!("k = {k}"),
            ));
            out.push(check(
                "GCD(k,n) = 1",
                gcd(k as u64, n as u64) == 1,
                format!("gcd = {}", gcd(k as u64, n as u64)),
            ));
        }
        FamilyId::T3_1 | FamilyId::T3_2 => {
            let (k, s) = (req("k", spec.k)?, req("s", spec.s)?);
            let g = gcd(k as u64, s as u64) as u32;
            if spec.id == FamilyId::T3_1 {
                let r = k / g;
                out.push(check(
                    "k/GCD(k,s) odd",
                    r % 2 == 1,
                    format!("k/gcd(k,s) = {r}"),
                ));
            } else {
                let r = 2 * k / gcd(2 * k as u64, s as u64) as u32;
                out.push(check(
                    "2k/GCD(2k,s) odd",
                    r % 2 == 1,
                    format!("2k/gcd(2k,s) = {r}"),
                ));
            }
            let three = (s / g + k / g).is_multiple_of(3);
            let modulus = if spec.id == FamilyId::T3_1 { 3 } else { 4 };
            let congruent = pow_u128(p, k) % modulus == 1 && pow_u128(p, s) % modulus == 1;
            let name = format!("3 | (s/GCD(k,s)+k/GCD(k,s)) or p^k ≡ p^s ≡ 1 (mod {modulus})");
            out.push(check(
                &name,
                three || congruent,
                format!("k = {k}, s = {s}, p = {p}"),
            ));
        }
        FamilyId::T3_3 => {
            let (m, s) = (req("m", spec.m)?, req("s", spec.s)?);
            out.push(check("s > 0", s > 0, format!("s = {s}")));
            let _ = m;
        }
        FamilyId::T3_4 => {
            let (e, m) = (req("e", spec.e)?, req("m", spec.m)?);
            out.push(check("q = p^e with e >= 1", e >= 1, format!("e = {e}")));
            out.push(check("m = 2k+1", m % 2 == 1, format!("m = {m}")));
        }
    }
    Ok(out)
}

/// Element parameters resolved by search or taken from the [`FamilySpec`], together
/// with the element-level side conditions.
fn element_checks(
    spec: &FamilySpec,
    field: &PrimeExtField,
) -> (Elements, Vec<Check>, Vec<Violation>) {
    let mut els = Elements::default();
    let mut checks = Vec::new();
    let mut bad = Vec::new();
    let order = field.order();
    let p = spec.p;
    match spec.id {
        FamilyId::T2_5 => match given(field, "u", spec.u) {
            Err(v) => bad.push(v),
            Ok(u) => {
                let primitive = |x| field.mult_order(x) == Some(order - 1);
                let u = u.or_else(|| first_element(field, primitive));
                if let Some(u) = u {
                    checks.push(check(
                        "u primitive",
                        primitive(u),
                        format!("ord(u) = {:?}", field.mult_order(u)),
                    ));
                }
                els.u = u;
            }
        },
        FamilyId::T3_1 | FamilyId::T3_2 => match given(field, "v", spec.v) {
            Err(v) => bad.push(v),
            Ok(v) => {
                let want = required_v_order(spec, spec.k.unwrap_or(0));
                let has_order = |x| field.mult_order(x) == Some(want);
                let v = v.or_else(|| first_element(field, has_order));
                let name = match spec.id {
                    FamilyId::T3_1 => "ord(v) = p^{2k}+p^k+1",
                    _ => "ord(v) = p^{3k}+p^{2k}+p^k+1",
                };
                match v {
                    Some(v) => checks.push(check(
                        name,
                        has_order(v),
                        format!("ord(v) = {:?}, want {want}", field.mult_order(v)),
                    )),
                    None => checks.push(check(name, false, format!("no element of order {want}"))),
                }
                els.v = v;
            }
        },
        FamilyId::T3_3 => {
            let (m, s) = (spec.m.unwrap_or(0), spec.s.unwrap_or(0));
            let pm = pow_u128(p, m) as u64;
            let anti = |w: u32| field.pow(w, pm) == field.neg(w);
            match given(field, "omega", spec.omega) {
                Err(v) => bad.push(v),
                Ok(w) => {
                    let w = w.or_else(|| first_element(field, anti));
                    match w {
                        Some(w) => checks.push(check("ω+ω^{p^m}=0", anti(w), format!("ω = {w}"))),
                        None => checks.push(check("ω+ω^{p^m}=0", false, "no nonzero ω".into())),
                    }
                    els.omega = w;
                }
            }
            let g = gcd(pm + 1, pow_u128(p, s) as u64 + 1);
            let e = (order - 1) / g;
            let name = "β^{(p^{2m}-1)/GCD(p^m+1,p^s+1)} != 1";
            match given(field, "beta", spec.beta) {
                Err(v) => bad.push(v),
                Ok(b) => {
                    let ok = |x: u32| x != 0 && field.pow(x, e) != 1;
                    let b = b.or_else(|| first_element(field, ok));
                    match b {
                        Some(b) => {
                            checks.push(check(name, ok(b), format!("β = {b}, exponent {e}")))
                        }
                        None => checks.push(check(name, false, format!("exponent {e}"))),
                    }
                    els.beta = b;
                }
            }
            let nonempty = exceptional_set_nonempty(order, p, m, s);
            checks.push(check(
                "{a ∈ F^* : a^{p^m} = -a = a^{p^s}} = ∅",
                !nonempty,
                "set read as a^{p^m} = -a and -a = a^{p^s}".into(),
            ));
        }
        _ => {}
    }
    (els, checks, bad)
}

/// Violated side conditions; empty iff the instance is admissible.
pub fn validate_family(spec: &FamilySpec) -> Vec<Violation> {
    match resolve(spec) {
        Ok(_) => Vec::new(),
        Err(FamilyError::ValidationFailed(v)) => v,
        Err(e) => vec![Violation {
            condition: "field is constructible".into(),
            detail: e.to_string(),
        }],
    }
}

/// Builds the field and resolves element parameters, failing with every
/// violated condition.
pub fn resolve(spec: &FamilySpec) -> Result<(PrimeExtField, Elements), FamilyError> {
    let checks = integer_checks(spec).map_err(FamilyError::ValidationFailed)?;
    let mut violations: Vec<Violation> = checks
        .into_iter()
        .filter(|c| !c.ok)
        .map(|c| Violation {
            condition: c.condition,
            detail: c.detail,
        })
        .collect();
    if !violations.is_empty() {
        return Err(FamilyError::ValidationFailed(violations));
    }
    let field = family_field(spec)?;
    let (els, checks, bad) = element_checks(spec, &field);
    violations.extend(bad);
    violations.extend(checks.into_iter().filter(|c| !c.ok).map(|c| Violation {
        condition: c.condition,
        detail: c.detail,
    }));
    if violations.is_empty() {
        Ok((field, els))
    } else {
        Err(FamilyError::ValidationFailed(violations))
    }
}

/// The family's polynomial over `field`, exponents reduced modulo `x^N - x`.
pub fn instantiate_family(
    spec: &FamilySpec,
    field: &PrimeExtField,
) -> Result<SparsePoly<u32>, FamilyError> {
    let (own, els) = resolve(spec)?;
    if own.p() != field.p() || own.degree() != field.degree() || own.modulus() != field.modulus() {
        return Err(FamilyError::FieldMismatch {
            p: field.p(),
            degree: field.degree(),
            want_p: own.p(),
            want_degree: own.degree(),
        });
    }
    Ok(build_poly(spec, field, &els))
}

fn build_poly(spec: &FamilySpec, f: &PrimeExtField, els: &Elements) -> SparsePoly<u32> {
    let p = spec.p;
    let pp = |e: u32| pow_u128(p, e);
    let one = 1u32;
    let minus = f.neg(1);
    let terms: Vec<(u128, u32)> = match spec.id {
        FamilyId::T2_1 => vec![(2, one)],
        FamilyId::T2_2 => vec![(pp(spec.k.unwrap()) + 1, one)],
        FamilyId::T2_3 => vec![(10, one), (6, one), (2, minus)],
        FamilyId::T2_4 => vec![(10, one), (6, minus), (2, minus)],
        FamilyId::T2_5 => {
            let (k, s) = (spec.k.unwrap(), spec.s.unwrap());
            let coeff = f.neg(f.pow(els.u.unwrap(), (pp(k) - 1) as u64));
            vec![(pp(s) + 1, one), (pp(k) + pp(2 * k + s), coeff)]
        }
        FamilyId::T2_6 => vec![(pow_u128(3, spec.k.unwrap()).div_ceil(2), one)],
        FamilyId::T3_1 | FamilyId::T3_2 => {
            let (k, s) = (spec.k.unwrap(), spec.s.unwrap());
            let lead = if spec.id == FamilyId::T3_1 {
                2 * k
            } else {
                3 * k
            };
            vec![
                (pp(s) + 1, one),
                (pp(lead) + pp(k + s), f.neg(els.v.unwrap())),
            ]
        }
        FamilyId::T3_3 => {
            let (m, s) = (spec.m.unwrap(), spec.s.unwrap());
            let (w, b) = (els.omega.unwrap(), els.beta.unwrap());
            let pm = pp(m);
            vec![
                (pm + 1, one),
                (pp(s) + 1, f.mul(w, b)),
                (pm * (pp(s) + 1), f.mul(w, f.pow(b, pm as u64))),
            ]
        }
        FamilyId::T3_4 => {
            let (e, m) = (spec.e.unwrap(), spec.m.unwrap());
            let k = (m - 1) / 2;
            let q = pp(e);
            let qp = |i: u32| q.pow(i);
            let y = qp(2) + 1;
            // h(z) = sum_{r=0}^{2k} z^{q^r}, additive, so
            // G(y) = sum_r y^{q^r} - y^{q^{m+r}}
            let mut t = vec![(2, one), (2 * qp(m), one)];
            for r in 0..=2 * k {
                t.push((y * qp(r), one));
                t.push((y * qp(m + r), minus));
            }
            t
        }
        FamilyId::T3_5 => vec![(2, one), (90, one)],
    };
    SparsePoly::new(f, terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    /// Admissible and exhaustively planar.
    Planar,
    /// Admissible but a difference map is not a permutation.
    Discrepancy,
    /// Admissible; the field exceeds the brute budget.
    NotDeskVerifiable,
    /// A side condition fails.
    Invalid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub spec: FamilySpec,
    pub field_order: Option<u64>,
    pub modulus: Option<Vec<u32>>,
    pub elements: Elements,
    pub polynomial: Option<String>,
    pub violations: Vec<Violation>,
    pub planar: Option<bool>,
    pub status: CheckStatus,
}

/// Validates, instantiates and, within [`BRUTE_MAX_ORDER`], brute-checks.
pub fn brute_check_family(spec: &FamilySpec, limits: &Limits) -> Result<FamilyCheck, FamilyError> {
    let mut out = FamilyCheck {
        spec: *spec,
        field_order: None,
        modulus: None,
        elements: Elements::default(),
        polynomial: None,
        violations: Vec::new(),
        planar: None,
        status: CheckStatus::Invalid,
    };
    let (field, els) = match resolve(spec) {
        Ok(r) => r,
        Err(FamilyError::ValidationFailed(v)) => {
            out.violations = v;
            return Ok(out);
        }
        Err(FamilyError::Gf(GfError::SizeLimit { .. })) => {
            out.status = CheckStatus::NotDeskVerifiable;
            return Ok(out);
        }
        Err(e) => return Err(e),
    };
    let poly = build_poly(spec, &field, &els);
    out.field_order = Some(field.order());
    out.modulus = Some(field.modulus().to_vec());
    out.elements = els;
    out.polynomial = Some(poly.display(&field));
    if field.order() > BRUTE_MAX_ORDER || limits.check(field.order() as u128).is_err() {
        out.status = CheckStatus::NotDeskVerifiable;
        return Ok(out);
    }
    let planar = brute_is_planar(&field, &poly, limits)?;
    out.planar = Some(planar);
    out.status = if planar {
        CheckStatus::Planar
    } else {
        CheckStatus::Discrepancy
    };
    Ok(out)
}
