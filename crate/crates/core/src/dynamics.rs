//! Evolution under a constant Hamiltonian `Ĥ = H0 + Σ Hi·σi`.
//!
//! `e^{−iĤt/ħ}` is closed-form for a 2×2 Hamiltonian, so trajectories are
//! sampled exactly; no integrator is involved. On the plane each time step
//! is a Möbius map, and the precessing state traces a circline.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{self, Circline, ExtendedComplex, MoebiusTransform};
use crate::gates::UnitaryGate;
use crate::qubit::{self, BlochVector, QubitState, SphereCircle};
use crate::GEOMETRIC_TOL;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hamiltonian {
    h0: f64,
    field: [f64; 3],
    hbar: f64,
}

impl Hamiltonian {
    /// Coefficients of `I, σ1, σ2, σ3`, with `ħ = 1`.
    pub fn new(h0: f64, h1: f64, h2: f64, h3: f64) -> Result<Self> {
        Self::with_hbar(h0, h1, h2, h3, 1.0)
    }

    pub fn with_hbar(h0: f64, h1: f64, h2: f64, h3: f64, hbar: f64) -> Result<Self> {
        if ![h0, h1, h2, h3].iter().all(|x| x.is_finite()) {
            return Err(Error::InvalidArgument(
                "Hamiltonian coefficients must be finite".into(),
            ));
        }
        if !(hbar > 0.0 && hbar.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "hbar must be positive, got {hbar}"
            )));
        }
        Ok(Self {
            h0,
            field: [h1, h2, h3],
            hbar,
        })
    }

    pub fn h0(&self) -> f64 {
        self.h0
    }

    /// `(H1, H2, H3)`
    pub fn field(&self) -> [f64; 3] {
        self.field
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// `|H⃗|`
    pub fn field_norm(&self) -> f64 {
        let [a, b, c] = self.field;
        (a * a + b * b + c * c).sqrt()
    }

    /// Unit field direction, or `None` when `H⃗ = 0`.
    fn direction(&self) -> Option<[f64; 3]> {
        let norm = self.field_norm();
        (norm > 0.0).then(|| self.field.map(|x| x / norm))
    }

    /// Coefficients of the traceless part of `e^{−iĤt/ħ}`:
    /// `[[c − i·n3·s, −i·s·(n1 − i·n2)], [−i·s·(n1 + i·n2), c + i·s·n3]]`
    /// with `θ = |H⃗|t/ħ` and `n` the unit field direction.
    fn rotation_entries(&self, t: f64) -> [[Complex64; 2]; 2] {
        let Some([n1, n2, n3]) = self.direction() else {
            let one = Complex64::new(1.0, 0.0);
            let zero = Complex64::new(0.0, 0.0);
            return [[one, zero], [zero, one]];
        };
        let theta = self.field_norm() * t / self.hbar;
        let (s, c) = theta.sin_cos();
        let i = Complex64::i();
        [
            [c - i * n3 * s, -i * s * Complex64::new(n1, -n2)],
            [-i * s * Complex64::new(n1, n2), c + i * s * n3],
        ]
    }

    /// Bloch point the state precesses around.
    pub fn precession_axis(&self) -> Option<BlochVector> {
        let [a, b, c] = self.direction()?;
        BlochVector::from_pauli_axis(a, b, c).ok()
    }
}

/// `U(t) = e^{−iĤt/ħ}`, including the global phase `e^{−i·H0·t/ħ}`.
pub fn evolution_operator(h: &Hamiltonian, t: f64) -> UnitaryGate {
    let phase = Complex64::from_polar(1.0, -h.h0 * t / h.hbar);
    let m = h.rotation_entries(t).map(|row| row.map(|x| x * phase));
    UnitaryGate::from_unitary_matrix(m)
}

/// `z ↦ ((c − iH3s)z − is(H1 − iH2)) / (−is(H1 + iH2)z + c + isH3)` with
/// unit-normalized `Hi`. Independent of `H0`.
pub fn evolution_moebius(h: &Hamiltonian, t: f64) -> MoebiusTransform {
    MoebiusTransform::from_matrix(h.rotation_entries(t)).expect("rotation matrices have det 1")
}

/// One sample of a trajectory.
#[derive(Debug, Clone, Copy)]
pub struct TrajectoryRecord {
    pub t: f64,
    pub z: ExtendedComplex,
    pub bloch: BlochVector,
    pub at_infinity: bool,
}

impl TrajectoryRecord {
    pub fn new(t: f64, z: ExtendedComplex) -> Self {
        Self {
            t,
            z,
            bloch: qubit::stereo_unproject(&z),
            at_infinity: z.is_infinity(GEOMETRIC_TOL),
        }
    }
}

/// `n` exact samples at `t_k = k·t_max/(n−1)`; record 0 is the initial state.
pub fn sample_trajectory(
    h: &Hamiltonian,
    s0: &QubitState,
    t_max: f64,
    n: usize,
) -> Result<Vec<TrajectoryRecord>> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {n}"
        )));
    }
    if !(t_max > 0.0 && t_max.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "t_max must be positive, got {t_max}"
        )));
    }
    let z0 = qubit::project(s0);
    let last = (n - 1) as f64;
    Ok((0..n)
        .map(|k| {
            let t = t_max * k as f64 / last;
            TrajectoryRecord::new(t, evolution_moebius(h, t).apply(&z0))
        })
        .collect())
}

/// The circline swept by `s0` as it precesses about the field axis.
///
/// On the sphere the orbit is the circle `{x : n·x = n·x0}` with `n` the
/// precession axis; its stereographic image is the returned circline.
pub fn precession_circline(h: &Hamiltonian, s0: &QubitState) -> Result<Circline> {
    let axis = h
        .precession_axis()
        .ok_or_else(|| Error::DegenerateOrbit("zero field: the state does not move".into()))?;
    let x0 = qubit::bloch_from_state(s0);
    let [a1, a2, a3] = axis.to_array();
    let [b1, b2, b3] = x0.to_array();
    let sin_angle =
        ((a2 * b3 - a3 * b2).powi(2) + (a3 * b1 - a1 * b3).powi(2) + (a1 * b2 - a2 * b1).powi(2))
            .sqrt();
    if sin_angle <= GEOMETRIC_TOL {
        return Err(Error::DegenerateOrbit(
            "initial state is an eigenstate of the field".into(),
        ));
    }
    let circle = SphereCircle::new(axis, axis.dot(&x0))?;
    qubit::sphere_circle_to_circline(&circle)
}

/// Whether the sampled points lie on one circline (see [`extplane::concyclic`]).
pub fn verify_concyclic(records: &[TrajectoryRecord], tol: f64) -> Result<bool> {
    let points: Vec<ExtendedComplex> = records.iter().map(|r| r.z).collect();
    extplane::concyclic(&points, tol)
}
