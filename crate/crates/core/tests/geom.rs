use std::f64::consts::{FRAC_PI_2, PI};

use capcover::geom::rot3;
use capcover::{angular_distance, cap_from_angular, cap_from_height, GeomError, Rotation, UnitVector3};
use proptest::prelude::*;

fn v(x: f64, y: f64, z: f64) -> UnitVector3 {
    UnitVector3::new(x, y, z).unwrap()
}

fn close(a: [f64; 3], b: [f64; 3], tol: f64) -> bool {
    (0..3).all(|i| (a[i] - b[i]).abs() <= tol)
}

#[test]
fn angular_distance_examples() {
    let z = UnitVector3::z_axis();
    assert_eq!(angular_distance(&z, &z), 0.0);
    assert!((angular_distance(&z, &UnitVector3::x_axis()) - FRAC_PI_2).abs() < 1e-15);
    let t = v(2.0 * 2f64.sqrt() / 3.0, 0.0, -1.0 / 3.0);
    let d = angular_distance(&z, &t);
    assert!((d - (-1.0f64 / 3.0).acos()).abs() < 1e-15);
    assert!((d - 1.9106332362490186).abs() < 1e-12);
}

#[test]
fn cap_from_height_examples() {
    let c = cap_from_height(0.0f64).unwrap();
    assert_eq!(c.planar_radius(), 1.0);
    assert!((c.degrees() - 90.0).abs() < 1e-12);
    let c = cap_from_height(1.0 / 3.0).unwrap();
    assert!((c.planar_radius() - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-15);
    assert!((c.planar_radius() - 0.94280904).abs() < 1e-8);
    let c = cap_from_height(1.0 / 5f64.sqrt()).unwrap();
    assert!((c.planar_radius() - 2.0 / 5f64.sqrt()).abs() < 1e-15);
    assert!(matches!(cap_from_height(1.5f64), Err(GeomError::HeightOutOfRange(_))));
    assert!(cap_from_height(f64::NAN).is_err());
}

#[test]
fn cap_from_angular_examples() {
    let c = cap_from_angular(70.5287793655f64.to_radians()).unwrap();
    assert!((c.height() - 1.0 / 3.0).abs() < 1e-10);
    let c = cap_from_angular(FRAC_PI_2).unwrap();
    assert!(c.height().abs() < 1e-16);
    assert_eq!(c.planar_radius(), 1.0);
    let c = cap_from_angular(54.7356103172f64.to_radians()).unwrap();
    assert!((c.height() - 1.0 / 3f64.sqrt()).abs() < 1e-10);
    assert!(matches!(cap_from_angular(-0.1f64), Err(GeomError::AngleOutOfRange(_))));
    assert!(cap_from_angular(PI + 1e-9).is_err());
}

#[test]
fn rot3_examples() {
    let x = UnitVector3::x_axis();
    let z = UnitVector3::z_axis();
    let id = rot3(&z, &z);
    assert_eq!(id.matrix(), Rotation::identity().matrix());

    let r = rot3(&x, &z);
    assert!(close(r.apply(&x).to_array(), [0.0, 0.0, 1.0], 1e-15));
    let quarter = Rotation::about_axis(&v(0.0, -1.0, 0.0), FRAC_PI_2);
    for (a, b) in r.matrix().iter().zip(quarter.matrix().iter()) {
        assert!(close(*a, *b, 1e-15));
    }

    let south = v(0.0, 0.0, -1.0);
    let r = rot3(&south, &z);
    assert!(close(r.apply(&south).to_array(), [0.0, 0.0, 1.0], 1e-15));
    assert!((r.determinant() - 1.0).abs() < 1e-15);
    // Half turn about the projection of +x.
    assert!(close(r.apply(&x).to_array(), [1.0, 0.0, 0.0], 1e-15));
}

#[test]
fn unit_vector_constructors() {
    assert!(UnitVector3::new(1.0 + 5e-9, 0.0, 0.0).is_ok());
    assert!(matches!(UnitVector3::new(1.0 + 1e-6, 0.0, 0.0), Err(GeomError::NotUnit { .. })));
    assert!(matches!(UnitVector3::from_direction([0.0; 3]), Err(GeomError::Degenerate)));
    let p = UnitVector3::from_spherical(0.7, 2.1);
    let (t, f) = p.to_spherical();
    assert!((t - 0.7).abs() < 1e-14 && (f - 2.1).abs() < 1e-14);
}

#[test]
fn rotation_from_matrix_rejects_reflections() {
    let m = [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]];
    assert!(Rotation::from_matrix(m, 1e-12).is_err());
    let r = Rotation::about_z(0.3).compose(&Rotation::about_x(1.1));
    let back = Rotation::from_matrix(r.matrix(), 1e-12).unwrap();
    assert!(close(back.compose(&r.inverse()).matrix()[0], [1.0, 0.0, 0.0], 1e-15));
}

fn unit() -> impl Strategy<Value = UnitVector3> {
    (-1.0f64..1.0, 0.0f64..std::f64::consts::TAU).prop_map(|(z, phi)| {
        let s = (1.0 - z * z).sqrt();
        UnitVector3::new(s * phi.cos(), s * phi.sin(), z).unwrap()
    })
}

proptest! {
    #[test]
    fn pythagoras(h in -1.0f64..=1.0) {
        let c = cap_from_height(h).unwrap();
        prop_assert!((c.planar_radius().powi(2) + h * h - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn height_angle_round_trip(h in -1.0f64..=1.0) {
        let c = cap_from_height(h).unwrap();
        prop_assert!((cap_from_angular(c.angular_radius()).unwrap().height() - h).abs() <= 1e-12);
    }

    #[test]
    fn rot3_maps_and_preserves(u in unit(), w in unit(), set in proptest::collection::vec(unit(), 2..6)) {
        let r = rot3(&u, &w);
        prop_assert!(close(r.apply(&u).to_array(), w.to_array(), 1e-12));
        for a in &set {
            for b in &set {
                let before = angular_distance(a, b);
                let after = angular_distance(&r.apply(a), &r.apply(b));
                prop_assert!((before - after).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn antipodal_rot3(u in unit()) {
        let w = UnitVector3::new(-u.x(), -u.y(), -u.z()).unwrap();
        let r = rot3(&u, &w);
        prop_assert!(close(r.apply(&u).to_array(), w.to_array(), 1e-12));
        prop_assert!((r.determinant() - 1.0).abs() < 1e-12);
    }
}
