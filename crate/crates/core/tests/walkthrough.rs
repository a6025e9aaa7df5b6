//! End-to-end checks through the public API only.

use std::f64::consts::FRAC_1_SQRT_2;

use qubit_mobius::dynamics::{self, Hamiltonian};
use qubit_mobius::extplane::{self, chordal_distance};
use qubit_mobius::gates::{self, UnitaryGate};
use qubit_mobius::qubit::{self, QubitState};
use qubit_mobius::{Circline, Complex64, Error, ExtendedComplex, MoebiusTransform};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn pt(re: f64, im: f64) -> ExtendedComplex {
    ExtendedComplex::from_complex(c(re, im))
}

#[test]
fn hadamard_story() {
    let h = UnitaryGate::hadamard();
    let f = h.moebius();
    assert!(chordal_distance(&f.apply(&pt(0.0, 0.0)), &pt(-1.0, 0.0)) < 1e-12);
    assert!(f.apply(&pt(1.0, 0.0)).is_infinity(1e-12));

    let minus = QubitState::new(c(FRAC_1_SQRT_2, 0.0), c(-FRAC_1_SQRT_2, 0.0)).unwrap();
    let h1 = gates::apply_gate(&h, &QubitState::ket1());
    assert!(qubit::fidelity(&qubit::project(&h1), &qubit::project(&minus)) > 1.0 - 1e-12);

    let fixed = f.fixed_points().unwrap();
    assert_eq!(fixed.len(), 2);
    let axis = gates::decompose_axis_angle(&h).bloch_axis();
    for p in &fixed {
        let b = qubit::stereo_unproject(p);
        assert!(b.dot(&axis).abs() > 1.0 - 1e-12);
    }
}

#[test]
fn conjugation_identities() {
    let (h, x, y, z) = (
        UnitaryGate::hadamard(),
        UnitaryGate::x(),
        UnitaryGate::y(),
        UnitaryGate::z(),
    );
    assert!(gates::verify_identity(&[h, z, h], &[x], 1e-10).unwrap());
    assert!(gates::verify_identity(&[h, x, h], &[z], 1e-10).unwrap());
    assert!(gates::verify_identity(&[x, y], &[z], 1e-10).unwrap());
    assert!(!gates::verify_identity(&[h], &[z], 1e-10).unwrap());
    let check = gates::compare_sequences(&[h], &[z], 1e-10).unwrap();
    assert!(check.distance > 0.1 && check.route_discrepancy < 1e-10);
}

#[test]
fn moebius_circlines_and_cross_ratio() {
    let f_h = UnitaryGate::hadamard().moebius();
    let real_axis =
        Circline::through(&pt(0.0, 0.0), &pt(1.0, 0.0), &ExtendedComplex::infinity()).unwrap();
    let image = real_axis.image(&f_h).unwrap();
    assert!(image.is_line(1e-12));
    for p in [pt(-1.0, 0.0), ExtendedComplex::infinity(), pt(1.0, 0.0)] {
        assert!(image.contains(&p, 1e-9));
    }

    let r = extplane::cross_ratio(
        &pt(2.0, 0.0),
        &pt(1.0, 0.0),
        &pt(0.0, 0.0),
        &ExtendedComplex::infinity(),
    )
    .unwrap();
    assert!(chordal_distance(&r, &pt(2.0, 0.0)) < 1e-12);
    let square = [pt(0.0, 0.0), pt(1.0, 0.0), pt(0.0, 1.0), pt(3.0, 3.0)];
    assert!(!extplane::concyclic(&square, 1e-9).unwrap());

    let twice = MoebiusTransform::new(c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)).unwrap();
    assert!(matches!(
        gates::unitary_from_moebius(&twice),
        Err(Error::NotARotation(_))
    ));
}

#[test]
fn precession_about_z_is_the_unit_circle() {
    let h = Hamiltonian::new(0.0, 0.0, 0.0, 1.0).unwrap();
    let records =
        dynamics::sample_trajectory(&h, &QubitState::plus(), std::f64::consts::TAU, 32).unwrap();
    assert!(dynamics::verify_concyclic(&records, 1e-9).unwrap());
    let k = dynamics::precession_circline(&h, &QubitState::plus()).unwrap();
    let (center, radius) = k.center_radius().unwrap();
    assert!(center.norm() < 1e-12 && (radius - 1.0).abs() < 1e-12);
    assert!(matches!(
        dynamics::precession_circline(&h, &QubitState::ket0()),
        Err(Error::DegenerateOrbit(_))
    ));
}
