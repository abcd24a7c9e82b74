//! Identity batteries: determinant cubic, the `X <-> Y` relation between the
//! two cubic forms, the circulant root criterion and the matrix layout.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curves::{
    build_f_det, build_f_printed, eval_at_conjugates, monomial_index, TernaryCubic,
};
use crate::gf::{FieldTower, FiniteField, GfError, E3};
use crate::linearized::{
    brute_kernel, dickson_matrix, has_nonzero_root_subfield_coeffs, LinTriple,
};
use crate::planarity::{det_value, difference_triple, printed_matrix};

/// Triples `(A, B, C)` are enumerated exhaustively up to this many.
const EXHAUSTIVE_TRIPLES: u64 = 1 << 16;
/// Subfield triples checked against a brute kernel above `q = 7`.
const KERNEL_SAMPLES_MAX: usize = 64;

#[derive(Debug, Clone, Serialize)]
pub struct Battery {
    pub name: &'static str,
    pub exhaustive: bool,
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl Battery {
    fn new(name: &'static str, exhaustive: bool) -> Self {
        Battery {
            name,
            exhaustive,
            checked: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub p: u32,
    pub m: u32,
    pub q: u64,
    pub seed: u64,
    pub samples: usize,
    pub batteries: Vec<Battery>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.batteries.iter().all(|b| b.failures == 0)
    }
}

/// Flips the sign of the `XYT` coefficient; used to confirm that the
/// batteries detect a corrupted cubic.
fn tamper(fq: &crate::gf::PrimeExtField, mut g: TernaryCubic<u32>) -> TernaryCubic<u32> {
    let i = monomial_index(1, 1, 1);
    g.coeffs[i] = fq.neg(g.coeffs[i]);
    g
}

fn triples(
    tower: &FieldTower,
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> (bool, Vec<(u32, u32, E3)>) {
    let (q, n) = (tower.q(), tower.order_top());
    let f = tower.fq3();
    if (q * q).saturating_mul(n) <= EXHAUSTIVE_TRIPLES {
        let all = (0..q as u32)
            .flat_map(|a| (0..q as u32).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
            .map(|(a, b, c)| (a, b, f.from_index(c)))
            .collect();
        (true, all)
    } else {
        let sample = (0..samples)
            .map(|_| {
                (
                    rng.gen_range(0..q) as u32,
                    rng.gen_range(0..q) as u32,
                    f.from_index(rng.gen_range(0..n)),
                )
            })
            .collect();
        (false, sample)
    }
}

pub fn run_identities(
    tower: &FieldTower,
    samples: usize,
    seed: u64,
    inject_fault: bool,
) -> Result<IdentityReport, GfError> {
    tower.require_enumerable()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let fq = tower.fq();
    let f3 = tower.fq3();
    let q = tower.q() as u32;

    let (exhaustive, list) = triples(tower, samples, &mut rng);
    let mut det = Battery::new("det_identity", exhaustive);
    let mut layout = Battery::new("dickson_layout", exhaustive);
    for &(a, b, c) in &list {
        let mut g = build_f_det(fq, a, b);
        if inject_fault {
            g = tamper(fq, g);
        }
        let lhs = det_value(tower, a, b, c);
        let rhs = eval_at_conjugates(tower, &g, c);
        det.record(lhs == rhs && f3.in_base(lhs), || {
            format!("A={a} B={b} C={}", f3.index(c))
        });
        let m = dickson_matrix(tower, &difference_triple(tower, a, b, c));
        layout.record(m == printed_matrix(tower, a, b, c), || {
            format!("A={a} B={b} C={}", f3.index(c))
        });
    }

    let mut swap = Battery::new("swap_relation", true);
    for a in 0..q {
        for b in 0..q {
            let mut g = build_f_det(fq, a, b);
            if inject_fault {
                g = tamper(fq, g);
            }
            swap.record(build_f_printed(fq, a, b) == g.swap_xy(fq), || {
                format!("A={a} B={b}")
            });
        }
    }

    let subfield: Vec<(u32, u32, u32)> = if q <= 7 {
        (0..q)
            .flat_map(|x| (0..q).flat_map(move |y| (0..q).map(move |z| (x, y, z))))
            .collect()
    } else {
        (0..samples.min(KERNEL_SAMPLES_MAX))
            .map(|_| {
                (
                    rng.gen_range(0..q),
                    rng.gen_range(0..q),
                    rng.gen_range(0..q),
                )
            })
            .collect()
    };
    let mut roots = Battery::new("circulant_root_criterion", q <= 7);
    for &(alpha, beta, gamma) in &subfield {
        let l = LinTriple::from_subfield(tower, alpha, beta, gamma);
        let has_root = brute_kernel(tower, &l)?.len() > 1;
        roots.record(
            has_nonzero_root_subfield_coeffs(fq, alpha, beta, gamma) == has_root,
            || format!("alpha={alpha} beta={beta} gamma={gamma}"),
        );
    }

    Ok(IdentityReport {
        p: tower.p(),
        m: tower.m(),
        q: tower.q(),
        seed,
        samples,
        batteries: vec![det, swap, roots, layout],
    })
}
