//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

use std::collections::BTreeSet;
use std::panic;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use planarq::curves::{
    build_f_det, build_f_printed, check_det_identity, count_nonzero_det_roots,
    count_nonzero_fq_zeros, loci, transform_h, verify_branch_factorization, Labeling, LineSearch,
    Locus, Outcome,
};
use planarq::families::{brute_check_family, CheckStatus, FamilyId, FamilySpec};
use planarq::gf::{build_tower, find_normal_element, FieldTower, FiniteField, Limits};
use planarq::linearized::{brute_kernel, has_nonzero_root_subfield_coeffs, LinTriple};
use planarq::planarity::{count_formula, scan, Method};

type CriterionResult = Result<String, String>;
type Criterion = (&'static str, fn() -> CriterionResult);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn tower(p: u32, m: u32) -> FieldTower {
    build_tower(p, m).expect("tower")
}

fn c1_counts() -> CriterionResult {
    let start = Instant::now();
    let mut seen = Vec::new();
    for ((p, m), want) in [
        ((5, 1), 9),
        ((7, 1), 7),
        ((3, 2), 21),
        ((11, 1), 27),
        ((13, 1), 25),
    ] {
        let t = tower(p, m);
        let r = scan(&t, &[Method::Theorem, Method::Det]).map_err(|e| e.to_string())?;
        let q = t.q();
        ensure(
            count_formula(q) == want,
            format!("count_formula({q}) = {}", count_formula(q)),
        )?;
        for method in [Method::Theorem, Method::Det] {
            let got = r.planar_counts[&method] as i64;
            ensure(
                got == want,
                format!("q={q} {method}: {got} planar pairs, want {want}"),
            )?;
        }
        seen.push(format!("q={q}:{want}"));
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(10),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} in {:.2}s",
        seen.join(" "),
        elapsed.as_secs_f64()
    ))
}

fn c2_agreement() -> CriterionResult {
    let start = Instant::now();
    let mut parts = Vec::new();
    for p in [5, 7, 11] {
        let t = tower(p, 1);
        let r = scan(&t, &Method::ALL).map_err(|e| e.to_string())?;
        ensure(r.pairs.len() as u64 == t.q() * t.q(), "pair count")?;
        ensure(
            r.all_agree(),
            format!("q={p}: disagreements at {:?}", r.disagreements),
        )?;
        parts.push(format!("q={p}:{}/{} agree", r.pairs.len(), r.pairs.len()));
    }
    let elapsed = start.elapsed();
    ensure(
        elapsed < Duration::from_secs(600),
        format!("took {elapsed:?}"),
    )?;
    Ok(format!(
        "{} in {:.1}s",
        parts.join(" "),
        elapsed.as_secs_f64()
    ))
}

fn c3_q3_subset() -> CriterionResult {
    let t = tower(3, 1);
    let r = scan(&t, &Method::ALL).map_err(|e| e.to_string())?;
    let theorem: BTreeSet<_> = r.planar_pairs(Method::Theorem).into_iter().collect();
    let brute: BTreeSet<_> = r.planar_pairs(Method::Brute).into_iter().collect();
    let want: BTreeSet<_> = [(0, 0), (1, 0), (1, 2)].into_iter().collect();
    ensure(theorem == want, format!("theorem set {theorem:?}"))?;
    ensure(theorem.is_subset(&brute), format!("brute set {brute:?}"))?;
    Ok(format!("theorem {theorem:?} within brute {brute:?}"))
}

fn c4_det_identity() -> CriterionResult {
    let t = tower(3, 1);
    let f = t.fq3();
    let mut n = 0;
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..t.order_top() {
                ensure(
                    check_det_identity(&t, a, b, f.from_index(c)),
                    format!("q=3 A={a} B={b} C={c}"),
                )?;
                n += 1;
            }
        }
    }
    let mut parts = vec![format!("q=3 exhaustive {n}")];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (p, m) in [(5, 1), (7, 1), (3, 2), (5, 2)] {
        let t = tower(p, m);
        let f = t.fq3();
        for _ in 0..1000 {
            let a = rng.gen_range(0..t.q()) as u32;
            let b = rng.gen_range(0..t.q()) as u32;
            let c = f.from_index(rng.gen_range(0..t.order_top()));
            ensure(
                check_det_identity(&t, a, b, c),
                format!("q={} A={a} B={b} C={}", t.q(), f.index(c)),
            )?;
        }
        parts.push(format!("q={}:1000", t.q()));
    }
    Ok(parts.join(" "))
}

fn c5_swap_relation() -> CriterionResult {
    let mut parts = Vec::new();
    for (p, m) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
        let t = tower(p, m);
        let fq = t.fq();
        let q = t.q() as u32;
        for a in 0..q {
            for b in 0..q {
                ensure(
                    build_f_printed(fq, a, b) == build_f_det(fq, a, b).swap_xy(fq),
                    format!("q={q} A={a} B={b}"),
                )?;
            }
        }
        parts.push(format!("q={q}:{}", q * q));
    }
    Ok(parts.join(" "))
}

fn c6_root_criterion() -> CriterionResult {
    let mut parts = Vec::new();
    for p in [3, 5, 7] {
        let t = tower(p, 1);
        let fq = t.fq();
        let mut singular = 0;
        for alpha in 0..p {
            for beta in 0..p {
                for gamma in 0..p {
                    let l = LinTriple::from_subfield(&t, alpha, beta, gamma);
                    let has_root = brute_kernel(&t, &l).map_err(|e| e.to_string())?.len() > 1;
                    ensure(
                        has_root == has_nonzero_root_subfield_coeffs(fq, alpha, beta, gamma),
                        format!("q={p} ({alpha},{beta},{gamma})"),
                    )?;
                    singular += has_root as u32;
                }
            }
        }
        parts.push(format!(
            "q={p}:{} triples ({singular} with roots)",
            p * p * p
        ));
    }
    Ok(parts.join(" "))
}

fn c7_factorizations() -> CriterionResult {
    let mut parts = Vec::new();
    for p in [5, 7, 11, 13] {
        let t = tower(p, 1);
        let fq = t.fq();
        let (mut points, mut checks, mut swapped, mut no_sqrt) = (0, 0, 0, 0);
        let mut swapped_loci = BTreeSet::new();
        for a in 0..p {
            for b in 0..p {
                if loci(fq, a, b).is_empty() {
                    continue;
                }
                points += 1;
                let r = match verify_branch_factorization(fq, a, b) {
                    Ok(r) => r,
                    Err(planarq::curves::CurveError::SquareRootUnavailable) => {
                        no_sqrt += 1;
                        continue;
                    }
                    Err(e) => return Err(format!("q={p} ({a},{b}): {e}")),
                };
                for c in &r.checks {
                    match &c.outcome {
                        Outcome::Product { lambda, labeling } => {
                            let sq = |x: u32| fq.mul(x, x);
                            let expected = match c.locus {
                                Locus::CubicProduct => fq.div(fq.mul(2, b), sq(a)),
                                Locus::SquareProduct => fq.div(fq.mul(2, a), sq(b)),
                                // vanishes identically when A^3 = -1
                                _ => Some(fq.mul(2, fq.add(fq.pow(a, 3), 1))),
                            };
                            if matches!(c.locus, Locus::CubicProduct | Locus::SquareProduct) {
                                ensure(*lambda != 0, format!("q={p} ({a},{b}) zero scalar"))?;
                            }
                            ensure(
                                expected == Some(*lambda),
                                format!("q={p} ({a},{b}) {:?} scalar {lambda}", c.locus),
                            )?;
                            if *labeling == Labeling::SwapXY {
                                swapped += 1;
                                swapped_loci.insert(format!("{:?}", c.locus));
                            }
                        }
                        Outcome::Divides { labeling, .. } => {
                            if *labeling == Labeling::SwapXY {
                                swapped += 1;
                                swapped_loci.insert(format!("{:?}", c.locus));
                            }
                        }
                        Outcome::SquareRootUnavailable => {
                            ensure(
                                matches!(c.locus, Locus::ConicAlpha | Locus::CubeRootAlpha),
                                "square root needed outside the alpha loci",
                            )?;
                            no_sqrt += 1;
                            continue;
                        }
                        Outcome::Fails => {
                            return Err(format!("q={p} ({a},{b}) {:?} fails", c.locus));
                        }
                    }
                    checks += 1;
                }
            }
        }
        parts.push(format!(
            "q={p}:{points} pts/{checks} checks/{swapped} swapped {swapped_loci:?}/{no_sqrt} no-sqrt"
        ));
    }
    Ok(parts.join(" "))
}

fn c8_curve_roots() -> CriterionResult {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut parts = Vec::new();
    for p in [5, 7] {
        let t = tower(p, 1);
        let xi = find_normal_element(&t);
        let mut planar = 0;
        for _ in 0..50 {
            let a = rng.gen_range(0..p);
            let b = rng.gen_range(0..p);
            let h = transform_h(&t, a, b, xi).map_err(|e| e.to_string())?;
            let zeros =
                count_nonzero_fq_zeros(t.fq(), &h, &t.limits()).map_err(|e| e.to_string())?;
            let roots = count_nonzero_det_roots(&t, a, b).map_err(|e| e.to_string())?;
            ensure(
                zeros == roots,
                format!("q={p} ({a},{b}): {zeros} zeros vs {roots} roots"),
            )?;
            if roots == 0 {
                planar += 1;
            }
        }
        parts.push(format!("q={p}:50 pairs ({planar} with no roots)"));
    }
    Ok(parts.join(" "))
}

fn c9_irreducible_have_points() -> CriterionResult {
    let mut parts = Vec::new();
    for p in [5, 7, 11] {
        let t = tower(p, 1);
        let fq = t.fq();
        let search = LineSearch::new(&t).map_err(|e| e.to_string())?;
        let xi = find_normal_element(&t);
        let r = scan(&t, &[Method::Det]).map_err(|e| e.to_string())?;
        let (mut irreducible, mut min_points) = (0, u64::MAX);
        for rec in r.pairs.iter().filter(|r| r.det == Some(false)) {
            let g = build_f_det(fq, rec.a, rec.b);
            if !search
                .find_linear_factors(&g, 3)
                .map_err(|e| e.to_string())?
                .is_empty()
            {
                continue;
            }
            irreducible += 1;
            let h = transform_h(&t, rec.a, rec.b, xi).map_err(|e| e.to_string())?;
            let n = count_nonzero_fq_zeros(fq, &h, &t.limits()).map_err(|e| e.to_string())?;
            ensure(n > 0, format!("q={p} ({},{}) has no points", rec.a, rec.b))?;
            min_points = min_points.min(n);
        }
        parts.push(format!(
            "q={p}:{irreducible} irreducible, min {min_points} zeros"
        ));
    }
    Ok(parts.join(" "))
}

fn c10_families() -> CriterionResult {
    let limits = Limits::default();
    let mut parts = Vec::new();
    for (id, k) in [
        (FamilyId::T2_1, None),
        (FamilyId::T2_3, None),
        (FamilyId::T2_4, None),
        (FamilyId::T2_6, Some(3)),
        (FamilyId::T3_5, None),
    ] {
        let mut spec = FamilySpec::new(id);
        spec.n = Some(5);
        spec.k = k;
        let start = Instant::now();
        let r = brute_check_family(&spec, &limits).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(
            r.field_order == Some(243),
            format!("{id}: field {:?}", r.field_order),
        )?;
        ensure(
            r.status == CheckStatus::Planar,
            format!("{id}: {:?} {:?}", r.status, r.violations),
        )?;
        ensure(
            elapsed < Duration::from_secs(5),
            format!("{id}: took {elapsed:?}"),
        )?;
        parts.push(format!("{id} {}", r.polynomial.unwrap_or_default()));
    }
    Ok(parts.join("; "))
}

fn c11_determinism() -> CriterionResult {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let bin = env!("CARGO_BIN_EXE_planarq");
    let mut parts = Vec::new();
    for format in ["json", "csv"] {
        let mut outputs = Vec::new();
        for workers in ["1", "4"] {
            let path = dir.path().join(format!("scan-{workers}.{format}"));
            let status = Command::new(bin)
                .args([
                    "scan",
                    "--p",
                    "7",
                    "--methods",
                    "theorem,det,brute",
                    "--seed",
                    "11",
                ])
                .args(["--workers", workers, "--format", format, "--out"])
                .arg(&path)
                .output()
                .map_err(|e| e.to_string())?;
            ensure(
                status.status.code() == Some(0),
                format!("exit {:?}", status.status.code()),
            )?;
            outputs.push(std::fs::read(&path).map_err(|e| e.to_string())?);
        }
        ensure(outputs[0] == outputs[1], format!("{format} reports differ"))?;
        parts.push(format!("{format}:{} bytes identical", outputs[0].len()));
    }
    Ok(parts.join(" "))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("counting formula", c1_counts),
        ("three-decider agreement", c2_agreement),
        ("q=3 sufficiency", c3_q3_subset),
        ("determinant identity", c4_det_identity),
        ("X/Y swap relation", c5_swap_relation),
        ("subfield root criterion", c6_root_criterion),
        ("branch factorizations", c7_factorizations),
        ("curve-root correspondence", c8_curve_roots),
        ("points on irreducible cubics", c9_irreducible_have_points),
        ("planar families over F_243", c10_families),
        ("determinism", c11_determinism),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = panic::catch_unwind(check).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match result {
            Ok(detail) => println!("criterion {:>2} PASS {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
