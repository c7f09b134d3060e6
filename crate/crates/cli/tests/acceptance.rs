//! Runs the acceptance criteria and prints one PASS/FAIL line for each.
//! Always exits 0; the lines are the report.

use std::process::Command;
use std::time::Instant;

use capcover::catalog::all_entries;
use capcover::optimize::{converge_step, perturb, run_converge};
use capcover::voronoi::{lattice_spacing, sampled_covering_radius};
use capcover::{approx_radius, build_code, catalog_entry, covering_radius, refine_root, verify_entry, verify_pair, ConvergeOptions, SphericalCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Outcome { passed: true, detail: summary }
    } else {
        Outcome { passed: false, detail: failures.join("; ") }
    }
}

fn degrees(n: usize) -> Result<f64, String> {
    let entry = catalog_entry(n).map_err(|e| e.to_string())?;
    let code = build_code(&entry).map_err(|e| e.to_string())?;
    covering_radius(&code).map(|c| c.degrees()).map_err(|e| e.to_string())
}

fn cross_check() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let mut sizes: Vec<usize> = (2..=18).collect();
    sizes.extend([20, 22, 32, 38]);
    for n in sizes {
        let entry = catalog_entry(n).unwrap();
        let tol = entry.provenance.radius_tolerance_deg();
        match degrees(n) {
            Ok(d) if (d - entry.recorded_degrees).abs() <= tol => {}
            Ok(d) => failures.push(format!("n={n}: {d:.10} vs {:.10}", entry.recorded_degrees)),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    for (n, want) in [(19, 30.3749090533), (42, 20.2572026800)] {
        match degrees(n) {
            Ok(d) if (d - want).abs() <= 1e-8 => {}
            Ok(d) => failures.push(format!("n={n}: {d:.10} vs {want:.10}")),
            Err(e) => failures.push(format!("n={n}: {e}")),
        }
    }
    let secs = t.elapsed().as_secs_f64();
    if secs > 5.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    outcome(failures, format!("23 sizes in {secs:.2}s"))
}

fn stated_values() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for e in all_entries() {
        let (Some(h), Some(r)) = (&e.stated_height, &e.stated_radius) else { continue };
        count += 1;
        let theta = match degrees(e.n) {
            Ok(d) => d.to_radians(),
            Err(err) => {
                failures.push(format!("n={}: {err}", e.n));
                continue;
            }
        };
        let hv = h.refined().unwrap_or(h.value);
        let rv = r.refined().unwrap_or(r.value);
        let (dh, dr) = ((theta.cos() - hv).abs(), (theta.sin() - rv).abs());
        if dh > 1e-10 || dr > 1e-10 {
            failures.push(format!("n={}: cos off by {dh:e}, sin off by {dr:e}", e.n));
        }
    }
    let nine = catalog_entry(9).unwrap();
    match (&nine.stated_height, &nine.stated_radius) {
        (Some(h), Some(r)) => match (&h.polynomial, &r.polynomial) {
            (Some(hp), Some(rp)) => {
                let v = verify_pair(hp, rp, h.value, r.value);
                if !v.holds {
                    failures.push(format!("n=9 pair: {:?}", v.failure));
                }
            }
            _ => failures.push("n=9 pair has no polynomials".into()),
        },
        _ => failures.push("n=9 has no stated pair".into()),
    }
    outcome(failures, format!("{count} entries with stated height and radius, 9-cap pair holds"))
}

fn polynomial_residuals() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    let mut worst: f64 = 0.0;
    for n in [8, 9, 15, 22, 32, 38] {
        let e = catalog_entry(n).unwrap();
        let values = e.parameters.iter().chain(e.stated_height.iter()).chain(e.stated_radius.iter());
        for v in values {
            let Some(p) = &v.polynomial else { continue };
            count += 1;
            match refine_root(p, v.value, 1e-12) {
                Ok(r) if r.relative_residual < 1e-12 => worst = worst.max(r.relative_residual),
                Ok(r) => failures.push(format!("n={n} {}: residual {:e}", v.name, r.relative_residual)),
                Err(err) => failures.push(format!("n={n} {}: {err}", v.name)),
            }
        }
    }
    if count == 0 {
        failures.push("no polynomial values found".into());
    }
    outcome(failures, format!("{count} values, worst relative residual {worst:.1e}"))
}

fn converge_recovery() -> Outcome {
    let t = Instant::now();
    let mut failures = Vec::new();
    let opts = ConvergeOptions { max_iters: 200, ..ConvergeOptions::default() };
    let mut most = 0;
    for n in [6, 9, 10, 12, 14, 16] {
        let entry = catalog_entry(n).unwrap();
        let code = build_code(&entry).unwrap();
        let want = covering_radius(&code).unwrap().degrees();
        for seed in 0..10 {
            match run_converge(&perturb(&code, 1e-2, seed), &entry.scheme(), &opts) {
                Ok(r) => {
                    let got = r.covering.degrees();
                    most = most.max(r.iterations);
                    if (got - want).abs() > 1e-8 {
                        failures.push(format!("n={n} seed={seed}: {got:.10} vs {want:.10}"));
                    }
                }
                Err(e) => failures.push(format!("n={n} seed={seed}: {}", e.source)),
            }
        }
    }
    let secs = t.elapsed().as_secs_f64();
    if secs > 30.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    outcome(failures, format!("60 runs, at most {most} iterations, {secs:.2}s"))
}

fn fixed_points() -> Outcome {
    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    for e in all_entries().into_iter().filter(|e| e.n >= 4) {
        let code = build_code(&e).unwrap();
        match converge_step(&code, &e.scheme(), &ConvergeOptions::default()) {
            Ok(step) => {
                let d = step.code.max_displacement(&code);
                worst = worst.max(d);
                if d > 1e-10 {
                    failures.push(format!("n={}: displaced {d:e}", e.n));
                }
            }
            Err(err) => failures.push(format!("n={}: {err}", e.n)),
        }
    }
    outcome(failures, format!("largest displacement {worst:.1e} rad"))
}

fn random_code(rng: &mut ChaCha8Rng, n: usize) -> SphericalCode {
    let pts: Vec<[f64; 3]> = (0..n)
        .map(|_| {
            let z: f64 = rng.gen_range(-1.0..1.0);
            let phi: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let s = (1.0 - z * z).sqrt();
            [s * phi.cos(), s * phi.sin(), z]
        })
        .collect();
    SphericalCode::from_coords(&pts).unwrap()
}

fn oracle() -> Outcome {
    const SAMPLES: usize = 1_000_000;
    let t = Instant::now();
    let spacing = lattice_spacing(SAMPLES);
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();
    let mut widest: f64 = 0.0;
    for k in 0..50 {
        let n = rng.gen_range(4..=16);
        let code = random_code(&mut rng, n);
        let exact = match covering_radius(&code) {
            Ok(c) => c.angular_radius(),
            Err(e) => {
                failures.push(format!("code {k}: {e}"));
                continue;
            }
        };
        let grid = sampled_covering_radius(&code, SAMPLES);
        widest = widest.max(exact - grid);
        if grid > exact + 1e-12 || exact > grid + spacing {
            failures.push(format!("code {k} (n={n}): exact {exact} grid {grid}"));
        }
    }
    let secs = t.elapsed().as_secs_f64();
    if secs > 120.0 {
        failures.push(format!("took {secs:.1}s"));
    }
    outcome(failures, format!("50 codes, largest gap {widest:.1e} of spacing {spacing:.1e} rad, {secs:.1}s"))
}

fn approximation() -> Outcome {
    let mut failures = Vec::new();
    let h = approx_radius(19).unwrap().cos();
    if (h - 0.8643750430693183).abs() > 1e-12 {
        failures.push(format!("cos r(19) = {h:.16}"));
    }
    let rational = 33441846558889.0 / 38689046875000.0;
    if (h - rational).abs() > 1e-12 {
        failures.push(format!("cos r(19) = {h:.16} vs {rational:.16}"));
    }
    for n in 4..150 {
        match (approx_radius(n), approx_radius(n + 1)) {
            (Ok(a), Ok(b)) if b < a => {}
            (a, b) => failures.push(format!("n={n}: {a:?} then {b:?}")),
        }
    }
    outcome(failures, format!("cos r(19) = {h:.16}, decreasing on [4, 150]"))
}

fn coplanarity() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for e in all_entries().into_iter().filter(|e| e.n >= 4 && e.n != 19) {
        let report = verify_entry(&e, 1e-9);
        match report.checks.iter().find(|c| c.name == "coplanarity") {
            Some(c) if c.measured < 1e-9 => checked += 1,
            Some(c) => failures.push(format!("n={}: {:.1e}", e.n, c.measured)),
            None => failures.push(format!("n={}: not checked", e.n)),
        }
    }
    outcome(failures, format!("{checked} codes"))
}

fn cli() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_capcover");
    let mut failures = Vec::new();
    match Command::new(bin).args(["verify", "--all"]).output() {
        Ok(o) if o.status.success() => {}
        Ok(o) => {
            let text = String::from_utf8_lossy(&o.stdout);
            let failed: Vec<&str> = text.lines().filter(|l| l.contains(" FAIL ")).map(|l| l.split_whitespace().next().unwrap_or("?")).collect();
            failures.push(format!("verify --all exited {:?}, failing n = {}", o.status.code(), failed.join(",")));
        }
        Err(e) => failures.push(format!("verify --all: {e}")),
    }
    let csv = || Command::new(bin).args(["check-table", "--csv"]).output().map(|o| o.stdout);
    match (csv(), csv()) {
        (Ok(a), Ok(b)) if a == b && !a.is_empty() => {}
        (Ok(_), Ok(_)) => failures.push("check-table --csv differs between runs".into()),
        (Err(e), _) | (_, Err(e)) => failures.push(format!("check-table: {e}")),
    }
    outcome(failures, "verify --all exits 0, check-table --csv byte-stable".into())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("cross-check reproduction", cross_check),
        ("stated height and radius", stated_values),
        ("polynomial residuals", polynomial_residuals),
        ("converge recovery", converge_recovery),
        ("fixed points", fixed_points),
        ("oracle equivalence", oracle),
        ("approximation", approximation),
        ("coplanarity", coplanarity),
        ("cli regression", cli),
    ];
    let mut passed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if o.passed {
            passed += 1;
        }
        println!("{} {}. {name}: {}", if o.passed { "PASS" } else { "FAIL" }, k + 1, o.detail);
    }
    println!("{passed} of {} criteria pass", criteria.len());
}
