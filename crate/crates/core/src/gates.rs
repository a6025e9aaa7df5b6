//! Single-qubit gates and their Möbius maps.
//!
//! A unitary `U = e^{iα}[[c, d], [−d̄, c̄]]` sends `(a, b)` to
//! `e^{iα}(c·a + d·b, −d̄·a + c̄·b)`, whose projection is
//! `(c·z + d) / (−d̄·z + c̄)` with `z = a/b`. The Möbius map of a gate is
//! therefore the projective action of its own matrix; the phase `e^{iα}` is
//! invisible on the plane.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::MoebiusTransform;
use crate::qubit::{BlochVector, QubitState};

type Mat2 = [[Complex64; 2]; 2];

const UNITARY_TOL: f64 = 1e-10;
const ROTATION_TOL: f64 = 1e-9;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    std::array::from_fn(|i| std::array::from_fn(|j| a[i][0] * b[0][j] + a[i][1] * b[1][j]))
}

/// Largest entry of `|M·M† − I|`.
fn unitarity_defect(m: &Mat2) -> f64 {
    let mut worst: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let mut entry = m[i][0] * m[j][0].conj() + m[i][1] * m[j][1].conj();
            if i == j {
                entry -= 1.0;
            }
            worst = worst.max(entry.norm());
        }
    }
    worst
}

/// A 2×2 unitary matrix.
#[derive(Debug, Clone, Copy)]
pub struct UnitaryGate {
    m: Mat2,
}

impl UnitaryGate {
    /// Checks `U·U† = I` to within 1e-10.
    pub fn new(m: Mat2) -> Result<Self> {
        let defect = unitarity_defect(&m);
        if defect.is_nan() || defect > UNITARY_TOL {
            return Err(Error::NotUnitary(defect));
        }
        Ok(Self { m })
    }

    pub fn from_entries(
        u00: Complex64,
        u01: Complex64,
        u10: Complex64,
        u11: Complex64,
    ) -> Result<Self> {
        Self::new([[u00, u01], [u10, u11]])
    }

    pub(crate) fn from_unitary_matrix(m: Mat2) -> Self {
        debug_assert!(unitarity_defect(&m) <= UNITARY_TOL);
        Self { m }
    }

    pub fn identity() -> Self {
        Self {
            m: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(1.0, 0.0)]],
        }
    }

    pub fn x() -> Self {
        Self {
            m: [[c(0.0, 0.0), c(1.0, 0.0)], [c(1.0, 0.0), c(0.0, 0.0)]],
        }
    }

    pub fn y() -> Self {
        Self {
            m: [[c(0.0, 0.0), c(0.0, -1.0)], [c(0.0, 1.0), c(0.0, 0.0)]],
        }
    }

    pub fn z() -> Self {
        Self {
            m: [[c(1.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]],
        }
    }

    /// Hadamard with determinant one: `(i/√2)[[1, 1], [1, −1]]`.
    pub fn hadamard() -> Self {
        let k = c(0.0, std::f64::consts::FRAC_1_SQRT_2);
        Self {
            m: [[k, k], [k, -k]],
        }
    }

    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    pub fn determinant(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.m;
        Self {
            m: [
                [m[0][0].conj(), m[1][0].conj()],
                [m[0][1].conj(), m[1][1].conj()],
            ],
        }
    }

    /// Matrix product `self · other` (apply `other` first).
    pub fn product(&self, other: &Self) -> Self {
        Self::from_unitary_matrix(mat_mul(&self.m, &other.m))
    }

    pub fn with_phase(&self, gamma: f64) -> Self {
        let w = Complex64::from_polar(1.0, gamma);
        Self {
            m: self.m.map(|row| row.map(|x| x * w)),
        }
    }

    pub fn moebius(&self) -> MoebiusTransform {
        moebius_from_unitary(self)
    }
}

impl std::ops::Mul for UnitaryGate {
    type Output = UnitaryGate;

    fn mul(self, rhs: UnitaryGate) -> UnitaryGate {
        self.product(&rhs)
    }
}

/// Phase and rotation: `U = e^{iα}(cos(β/2)·I − i·sin(β/2)·(n̂·σ⃗))`.
///
/// Branches: `α ∈ [0, π)`, `β ∈ [0, 2π]`, `sin(β/2) ≥ 0`. `β = 2π` occurs
/// only for `U = −e^{iα}·I`, which the `α` range cannot absorb. `axis` holds
/// the Pauli components `n̂`; see [`AxisAngleDecomposition::bloch_axis`] for
/// the corresponding point on the sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AxisAngleDecomposition {
    pub alpha: f64,
    pub axis: [f64; 3],
    pub beta: f64,
}

impl AxisAngleDecomposition {
    /// Normalizes `axis`; a zero axis is rejected.
    pub fn new(alpha: f64, axis: [f64; 3], beta: f64) -> Result<Self> {
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if !(norm > 0.0 && norm.is_finite()) || !alpha.is_finite() || !beta.is_finite() {
            return Err(Error::InvalidArgument(
                "rotation axis must be a finite nonzero vector".into(),
            ));
        }
        Ok(Self {
            alpha,
            axis: axis.map(|x| x / norm),
            beta,
        })
    }

    /// Point of the Bloch sphere left fixed by the rotation (the `+1`
    /// eigenstate of `n̂·σ⃗`).
    pub fn bloch_axis(&self) -> BlochVector {
        BlochVector::from_pauli_axis(self.axis[0], self.axis[1], self.axis[2]).expect("unit axis")
    }
}

/// Coefficient matrix of `f_U` is `U` itself; phase and scale drop out in PSL(2,C).
pub fn moebius_from_unitary(u: &UnitaryGate) -> MoebiusTransform {
    MoebiusTransform::from_matrix(u.m).expect("unitary matrices have |det| = 1")
}

/// SU(2) representative of a Möbius map, if the map is a sphere rotation.
pub fn unitary_from_moebius(m: &MoebiusTransform) -> Result<UnitaryGate> {
    let canon = m.canonical()?.matrix();
    let defect = unitarity_defect(&canon);
    if defect.is_nan() || defect > ROTATION_TOL {
        return Err(Error::NotARotation(defect));
    }
    Ok(UnitaryGate { m: canon })
}

pub fn apply_gate(u: &UnitaryGate, s: &QubitState) -> QubitState {
    let [a, b] = s.amplitudes();
    let m = &u.m;
    QubitState::normalized(m[0][0] * a + m[0][1] * b, m[1][0] * a + m[1][1] * b)
        .expect("unitary maps unit vectors to unit vectors")
}

pub fn decompose_axis_angle(u: &UnitaryGate) -> AxisAngleDecomposition {
    use std::f64::consts::PI;

    // det U = e^{2iα}
    let mut alpha = u.determinant().arg() / 2.0;
    if alpha < 0.0 {
        alpha += PI;
    }
    if alpha >= PI {
        alpha -= PI;
    }
    let phase = Complex64::from_polar(1.0, -alpha);
    let v = u.m.map(|row| row.map(|x| x * phase));

    // V = w·I − i·(p·σ⃗) with w = cos(β/2), p = sin(β/2)·n̂.
    let w = (v[0][0] + v[1][1]).re / 2.0;
    let p = [
        (Complex64::i() * (v[0][1] + v[1][0]) / 2.0).re,
        ((v[1][0] - v[0][1]) / 2.0).re,
        (Complex64::i() * (v[0][0] - v[1][1]) / 2.0).re,
    ];
    let sin_half = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    let beta = 2.0 * sin_half.atan2(w);
    let axis = if sin_half > f64::EPSILON {
        p.map(|x| x / sin_half)
    } else {
        [0.0, 0.0, 1.0]
    };
    AxisAngleDecomposition { alpha, axis, beta }
}

pub fn unitary_from_axis_angle(d: &AxisAngleDecomposition) -> UnitaryGate {
    let (s, w) = (d.beta / 2.0).sin_cos();
    let [n1, n2, n3] = d.axis;
    let r = [
        [c(w, -s * n3), c(-s * n2, -s * n1)],
        [c(s * n2, -s * n1), c(w, s * n3)],
    ];
    let phase = Complex64::from_polar(1.0, d.alpha);
    UnitaryGate::from_unitary_matrix(r.map(|row| row.map(|x| x * phase)))
}

/// `min_γ ‖U − e^{iγ}V‖_F`.
///
/// The minimizing phase is `e^{iγ} = conj(t)/|t|` with `t = tr(U†V)`, giving
/// `sqrt(4 − 2|t|)`; the norm is evaluated from the entries at that phase,
/// which keeps full precision when the gates agree.
pub fn phase_distance(u: &UnitaryGate, v: &UnitaryGate) -> f64 {
    let t = u.adjoint().product(v).trace();
    let phase = if t.norm() > 0.0 {
        t.conj() / t.norm()
    } else {
        c(1.0, 0.0)
    };
    u.m.iter()
        .flatten()
        .zip(v.m.iter().flatten())
        .map(|(x, y)| (x - phase * y).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

pub fn equal_up_to_phase(u: &UnitaryGate, v: &UnitaryGate, tol: f64) -> bool {
    phase_distance(u, v) <= tol
}

/// Outcome of comparing two gate sequences.
#[derive(Debug, Clone, Copy)]
pub struct IdentityCheck {
    /// PSL(2,C) distance between the composed Möbius maps of both sides.
    pub distance: f64,
    /// Largest disagreement between matrix-product and Möbius-composition
    /// routes on either side.
    pub route_discrepancy: f64,
    pub lhs: MoebiusTransform,
    pub rhs: MoebiusTransform,
}

impl IdentityCheck {
    pub fn holds(&self, tol: f64) -> bool {
        self.distance <= tol
    }
}

/// Composes a gate sequence written in operator order: `[A, B, C]` is `A·B·C`.
pub fn compose_sequence(gates: &[UnitaryGate]) -> Result<UnitaryGate> {
    let (first, rest) = gates
        .split_first()
        .ok_or_else(|| Error::InvalidArgument("empty gate sequence".into()))?;
    Ok(rest.iter().fold(*first, |acc, g| acc.product(g)))
}

fn compose_moebius(gates: &[UnitaryGate]) -> MoebiusTransform {
    gates
        .iter()
        .map(moebius_from_unitary)
        .reduce(|acc, m| acc.compose(&m))
        .unwrap_or_else(MoebiusTransform::identity)
}

/// Compares `lhs` and `rhs` as Möbius maps, composing each side both by
/// matrix multiplication and by Möbius composition.
pub fn compare_sequences(
    lhs: &[UnitaryGate],
    rhs: &[UnitaryGate],
    tol: f64,
) -> Result<IdentityCheck> {
    let lhs_product = moebius_from_unitary(&compose_sequence(lhs)?);
    let rhs_product = moebius_from_unitary(&compose_sequence(rhs)?);
    let lhs_map = compose_moebius(lhs);
    let rhs_map = compose_moebius(rhs);
    let route_discrepancy = lhs_product
        .distance(&lhs_map)?
        .max(rhs_product.distance(&rhs_map)?);
    if route_discrepancy > tol {
        return Err(Error::RouteMismatch(route_discrepancy));
    }
    Ok(IdentityCheck {
        distance: lhs_map.distance(&rhs_map)?,
        route_discrepancy,
        lhs: lhs_map,
        rhs: rhs_map,
    })
}

/// Whether the two sequences agree up to global phase.
pub fn verify_identity(lhs: &[UnitaryGate], rhs: &[UnitaryGate], tol: f64) -> Result<bool> {
    Ok(compare_sequences(lhs, rhs, tol)?.holds(tol))
}
