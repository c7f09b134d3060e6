use capcover::{build_code, catalog_entry, SphericalCode};
use capcover_cli::{detect, fmt17, parse_code_file, write_circles, write_code, write_off, Format, ParseError};
use proptest::prelude::*;

fn catalog(n: usize) -> SphericalCode {
    build_code(&catalog_entry(n).unwrap()).unwrap()
}

fn close(a: &SphericalCode, b: &SphericalCode, tol: f64) -> bool {
    a.len() == b.len() && a.max_displacement(b) <= tol
}

#[test]
fn two_cap_xyz() {
    let text = "# antipodal pair\n1 0 0\n\n-1 0 0\n";
    assert_eq!(detect(text), Format::Xyz);
    let code = parse_code_file(text, None).unwrap();
    assert_eq!(code.coords(), vec![[1.0, 0.0, 0.0], [-1.0, 0.0, 0.0]]);
}

#[test]
fn sloane_tetrahedron() {
    let s = 1.0 / 3f64.sqrt();
    let rows = [[s, s, s], [s, -s, -s], [-s, s, -s], [-s, -s, s]];
    let text: String = rows.iter().flatten().map(|x| format!("{x:.10}\n")).collect();
    assert_eq!(text.lines().count(), 12);
    assert_eq!(detect(&text), Format::Sloane);
    let code = parse_code_file(&text, None).unwrap();
    assert_eq!(code.len(), 4);
    let want = SphericalCode::from_coords(&rows).unwrap();
    assert!(close(&code, &want, 1e-9));
}

#[test]
fn seven_tokens_fail_at_line_seven() {
    let text = "1\n0\n0\n-1\n0\n0\n0.5\n";
    match parse_code_file(text, None) {
        Err(ParseError::Line { line, .. }) => assert_eq!(line, 7),
        other => panic!("{other:?}"),
    }
}

#[test]
fn parse_errors() {
    let line = |r: Result<SphericalCode, ParseError>| match r {
        Err(ParseError::Line { line, .. }) => line,
        other => panic!("{other:?}"),
    };
    assert_eq!(line(parse_code_file("1 0 0\n0 x 0\n", None)), 2);
    assert_eq!(line(parse_code_file("1 0 0\n0 1\n", Some(Format::Xyz))), 2);
    assert_eq!(line(parse_code_file("1 0 0\n0 1.01 0\n", None)), 2);
    assert!(parse_code_file("1 0 0\n0 1.0000005 0\n", None).is_ok());
    assert!(matches!(parse_code_file("1 0 0\n1 0 0\n", None), Err(ParseError::Code(_))));
    assert!(matches!(parse_code_file("1 0 0\n", None), Err(ParseError::Code(_))));
    assert_eq!(parse_code_file("OFF", Some(Format::Off)), Err(ParseError::WriteOnly));
}

#[test]
fn json_forms() {
    let bare = parse_code_file("[[0,0,1],[0,0,-1]]", None).unwrap();
    let object = parse_code_file(r#"{"n": 2, "points": [[0,0,1],[0,0,-1]]}"#, None).unwrap();
    let alias = parse_code_file(r#"{"coordinates": [[0,0,1],[0,0,-1]]}"#, None).unwrap();
    assert_eq!(bare, object);
    assert_eq!(bare, alias);
    assert!(parse_code_file(r#"{"n": 3, "points": [[0,0,1],[0,0,-1]]}"#, None).is_err());
}

#[test]
fn fmt17_examples() {
    assert_eq!(fmt17(0.0), "0");
    assert_eq!(fmt17(1.0), "1");
    assert_eq!(fmt17(-0.5), "-0.5");
    assert_eq!(fmt17(0.1), "0.10000000000000001");
    assert_eq!(fmt17(1e-20), "9.9999999999999995e-21");
    assert_eq!(fmt17(-(2f64.powi(-100))), "-7.8886090522101181e-31");
    assert_eq!(fmt17(1.5e300), "1.5000000000000001e300");
    for x in [std::f64::consts::PI, 1.0 / 3.0, -2.5e-7, 123456.789] {
        assert_eq!(fmt17(x).parse::<f64>().unwrap(), x);
    }
}

#[test]
fn catalog_round_trips() {
    for n in [2, 5, 12, 19, 42] {
        let code = catalog(n);
        for f in [Format::Sloane, Format::Xyz, Format::Json] {
            let back = parse_code_file(&write_code(&code, f), None).unwrap();
            assert!(close(&code, &back, 1e-12), "n={n} {f:?}");
        }
    }
}

#[test]
fn off_output() {
    let text = write_off(&catalog(6));
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("OFF"));
    assert_eq!(lines.next(), Some("6 8 0"));
    let faces: Vec<&str> = text.lines().skip(8).collect();
    assert_eq!(faces.len(), 8);
    assert!(faces.iter().all(|f| f.starts_with("3 ")));
    assert!(write_off(&catalog(3)).lines().nth(1) == Some("3 0 0"));
}

#[test]
fn circles_output() {
    let text = write_circles(&catalog(4), 1.0);
    assert_eq!(text.lines().filter(|l| l.starts_with("# cap")).count(), 4);
    let rows: Vec<[f64; 3]> = text
        .lines()
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| {
            let v: Vec<f64> = l.split_whitespace().map(|t| t.parse().unwrap()).collect();
            [v[0], v[1], v[2]]
        })
        .collect();
    assert_eq!(rows.len(), 4 * 65);
    let c = catalog(4).point(0).to_array();
    for r in &rows[..65] {
        let dot = r[0] * c[0] + r[1] * c[1] + r[2] * c[2];
        assert!((dot - 1f64.cos()).abs() < 1e-12);
    }
    assert_eq!(rows[0], rows[64]);
}

fn arb_code() -> impl Strategy<Value = SphericalCode> {
    prop::collection::vec((-1.0f64..1.0, 0.0f64..std::f64::consts::TAU), 2..20).prop_filter_map("coincident", |v| {
        let pts: Vec<[f64; 3]> = v
            .iter()
            .map(|&(z, phi)| {
                let s = (1.0 - z * z).sqrt();
                [s * phi.cos(), s * phi.sin(), z]
            })
            .collect();
        SphericalCode::from_coords(&pts).ok()
    })
}

proptest! {
    #[test]
    fn round_trip_every_format(code in arb_code()) {
        for f in [Format::Sloane, Format::Xyz, Format::Json] {
            let text = write_code(&code, f);
            let back = parse_code_file(&text, Some(f)).unwrap();
            prop_assert!(close(&code, &back, 1e-12));
            prop_assert_eq!(parse_code_file(&text, None).unwrap(), back);
        }
    }
}
