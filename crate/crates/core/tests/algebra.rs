use capcover::algebra::PairFailure;
use capcover::RootApprox;
use capcover::catalog::all_entries;
use capcover::{poly_eval, refine_root, verify_pair, AlgebraError, IntPolynomial};

fn poly(s: &str) -> IntPolynomial {
    s.parse().unwrap()
}

/// Every printed polynomial of the catalog with its decimal.
fn catalog_pairs() -> Vec<(usize, String, IntPolynomial, String, f64)> {
    let mut out = Vec::new();
    for e in all_entries() {
        for v in e.parameters.iter().chain(e.stated_height.iter()).chain(e.stated_radius.iter()) {
            if let Some(p) = &v.polynomial {
                out.push((e.n, v.name.clone(), p.clone(), v.source.clone(), v.value));
            }
        }
    }
    out
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

/// Compensated Horner: as accurate as Horner in twice the precision.
fn compensated(p: &IntPolynomial, x: f64) -> f64 {
    let mut s = 0.0;
    let mut c = 0.0;
    for &k in p.coeffs() {
        let (prod, pe) = two_prod(s, x);
        let (sum, se) = two_sum(prod, k as f64);
        s = sum;
        c = c * x + (pe + se);
    }
    s + c
}

fn ulp(x: f64) -> f64 {
    let a = x.abs();
    if a == 0.0 {
        return f64::MIN_POSITIVE;
    }
    f64::from_bits(a.to_bits() + 1) - a
}

#[test]
fn poly_eval_examples() {
    assert_eq!(poly_eval(&poly("x^2 - 2"), 1.0), -1.0);
    let p = poly("16x^8 - 72x^6 + 129x^4 - 66x^2 + 9");
    assert!(poly_eval(&p, 0.6961773622954127f64).abs() < 1e-12);
    let q = poly("4x^4 - 4x^3 + 3x^2 + 4x - 4");
    assert!(poly_eval(&q, 0.7178698212262455f64).abs() < 1e-12);
    assert_eq!(poly_eval(&poly("3x - 1"), 2.0f32), 5.0f32);
}

#[test]
#[allow(clippy::approx_constant)]
fn refine_root_examples() {
    // Roots are searched within 1e-3 of the start.
    assert!(matches!(refine_root(&poly("x^2 - 2"), 1.4, 1e-12), Err(AlgebraError::NoRootNearby { .. })));
    let r = refine_root(&poly("x^2 - 2"), 1.4142, 1e-12).unwrap();
    assert_eq!(r.value, std::f64::consts::SQRT_2);
    assert!(r.simple);
    let r = refine_root(&poly("931x^6 + 204x^5 - 438x^4 - 36x^3 + 123x^2 - 16"), 0.4608f64, 1e-12).unwrap();
    assert!((r.value - 0.4608212551057438).abs() < 2e-16);
    let r = refine_root(&poly("2245x^8 - 2480x^6 + 530x^4 - 40x^2 + 1"), 0.9226f64, 1e-12).unwrap();
    assert!((r.value - 0.9226021945439895).abs() < 2e-16);
}

#[test]
fn refine_root_failures() {
    assert!(matches!(refine_root(&poly("x^2 + 1"), 0.5, 1e-12), Err(AlgebraError::NoRootNearby { .. })));
    assert!(matches!(refine_root(&poly("x - 1"), 0.9, 1e-12), Err(AlgebraError::NoRootNearby { .. })));
    // No sign change, but Newton converges inside the window.
    assert!(refine_root(&poly("x^2 - 2x + 1"), 1.0005, 1e-12).is_ok());
    assert!(matches!("0x^2 + 1".parse::<IntPolynomial>(), Err(AlgebraError::ZeroLeading)));
    assert!(matches!("x^2 +".parse::<IntPolynomial>(), Err(AlgebraError::Parse(_))));
}

#[test]
fn residual_fields_are_consistent() {
    let p = poly("16x^8 - 72x^6 + 129x^4 - 66x^2 + 9");
    let r: RootApprox = refine_root(&p, 0.69617736, 1e-12).unwrap();
    assert_eq!(r.residual, poly_eval(&p, r.value).abs());
    assert!(r.relative_residual <= 1e-12);
    assert_eq!(r.polynomial, p);
}

#[test]
fn double_root_is_not_simple() {
    let r = refine_root(&poly("x^2 - 2x + 1"), 1.0 + 1e-9, 1e-12).unwrap();
    assert!(!r.simple);
}

#[test]
fn eight_cap_radius_polynomial_has_sign_change() {
    let e = capcover::catalog_entry(8).unwrap();
    let r = e.stated_radius.unwrap();
    let p = r.polynomial.unwrap();
    assert_eq!(*p.coeffs().last().unwrap(), 128);
    assert!(poly_eval(&p, 0.0f64) > 0.0);
    let x = 0.7447721152188417f64;
    assert!(poly_eval(&p, x - 1e-5).signum() != poly_eval(&p, x + 1e-5).signum());
    assert!((refine_root(&p, x, 1e-12).unwrap().value - x).abs() < 1e-15);
}

#[test]
fn verify_pair_examples() {
    let h = poly("16x^8 - 72x^6 + 129x^4 - 66x^2 + 9");
    let r = poly("4x^4 - 4x^3 + 3x^2 + 4x - 4");
    let v = verify_pair(&h, &r, 0.69617736, 0.71786982);
    assert!(v.holds, "{v:?}");

    let v = verify_pair(&poly("3x - 1"), &poly("9x^2 - 8"), 1.0 / 3.0, 2.0 * 2f64.sqrt() / 3.0);
    assert!(v.holds);

    for e in all_entries() {
        if let (Some(hp), Some(rp)) = (
            e.stated_height.as_ref().and_then(|v| v.polynomial.clone()),
            e.stated_radius.as_ref().and_then(|v| v.polynomial.clone()),
        ) {
            let v = verify_pair(&hp, &rp, 0.5, 0.5);
            assert!(!v.holds, "n={}", e.n);
            let v = verify_pair(&hp, &rp, e.stated_height.unwrap().value, e.stated_radius.unwrap().value);
            assert!(v.holds, "n={}", e.n);
        }
    }
    let v = verify_pair(&poly("3x - 1"), &poly("9x^2 - 8"), 1.5, 0.5);
    assert_eq!(v.failure, Some(PairFailure::OutOfRange));
}

#[test]
fn catalog_roots_are_simple_and_match_printed_digits() {
    let pairs = catalog_pairs();
    assert!(pairs.len() >= 20);
    for (n, name, p, src, value) in pairs {
        let r = refine_root(&p, value, 1e-12).unwrap_or_else(|e| panic!("n={n} {name}: {e}"));
        assert!(r.simple, "n={n} {name}");
        assert!(r.relative_residual < 1e-12, "n={n} {name}");
        // First 15 significant digits of the printed decimal.
        let printed = format!("{:.14e}", src.parse::<f64>().unwrap());
        let refined = format!("{:.14e}", r.value);
        let close = (r.value - value).abs() <= 1e-15 * value.abs().max(1e-300) * 10.0;
        assert!(printed == refined || close, "n={n} {name}: {printed} vs {refined}");
    }
}

/// Horner against compensated Horner, in ulps of the evaluation scale
/// sum |c_i| |x|^i (the value itself can be arbitrarily small near a root).
#[test]
fn horner_matches_compensated_reference() {
    let mut worst: f64 = 0.0;
    for (_, _, p, _, _) in catalog_pairs() {
        for k in 0..=2000 {
            let x = k as f64 / 2000.0;
            let h = poly_eval(&p, x);
            let c = compensated(&p, x);
            worst = worst.max((h - c).abs() / ulp(p.magnitude(x)));
        }
    }
    assert!(worst <= 4.0, "worst {worst} ulps");
}
