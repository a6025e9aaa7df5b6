//! Pure qubit states and their pictures on the Bloch and Riemann spheres.
//!
//! A state `a|0⟩ + b|1⟩` is sent to the point `a / b` of the extended plane.
//! With `a = cos(φ/2)` and `b = e^{−iθ} sin(φ/2)` this is `e^{iθ} cot(φ/2)`,
//! the stereographic image of the Bloch vector
//! `(sin φ cos θ, sin φ sin θ, cos φ)` seen from the north pole `|0⟩`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::extplane::{Circline, ExtendedComplex};
use crate::ALGEBRAIC_TOL;

/// Normalized amplitude pair `a|0⟩ + b|1⟩`.
#[derive(Debug, Clone, Copy)]
pub struct QubitState {
    a: Complex64,
    b: Complex64,
}

impl QubitState {
    /// Accepts amplitudes that are already normalized to within 1e-12.
    pub fn new(a: Complex64, b: Complex64) -> Result<Self> {
        let norm_sq = a.norm_sqr() + b.norm_sqr();
        if !norm_sq.is_finite() || (norm_sq - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self { a, b })
    }

    /// Scales arbitrary amplitudes onto the unit sphere of C².
    pub fn normalized(a: Complex64, b: Complex64) -> Result<Self> {
        let norm = a.norm().hypot(b.norm());
        if norm <= ALGEBRAIC_TOL || !norm.is_finite() {
            return Err(Error::ZeroVector);
        }
        Ok(Self {
            a: a / norm,
            b: b / norm,
        })
    }

    /// `cos(φ/2)|0⟩ + e^{−iθ} sin(φ/2)|1⟩`.
    pub fn from_angles(phi: f64, theta: f64) -> Self {
        Self {
            a: Complex64::from(f64::cos(phi / 2.0)),
            b: Complex64::from_polar(f64::sin(phi / 2.0), -theta),
        }
    }

    pub fn ket0() -> Self {
        Self {
            a: Complex64::from(1.0),
            b: Complex64::from(0.0),
        }
    }

    pub fn ket1() -> Self {
        Self {
            a: Complex64::from(0.0),
            b: Complex64::from(1.0),
        }
    }

    /// `(|0⟩ + |1⟩)/√2`
    pub fn plus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            a: Complex64::from(h),
            b: Complex64::from(h),
        }
    }

    /// `(|0⟩ − |1⟩)/√2`
    pub fn minus() -> Self {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        Self {
            a: Complex64::from(h),
            b: Complex64::from(-h),
        }
    }

    pub fn a(&self) -> Complex64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn amplitudes(&self) -> [Complex64; 2] {
        [self.a, self.b]
    }

    /// Multiplies both amplitudes by `e^{iγ}`.
    pub fn with_phase(&self, gamma: f64) -> Self {
        let w = Complex64::from_polar(1.0, gamma);
        Self {
            a: self.a * w,
            b: self.b * w,
        }
    }

    /// Representative with `a` real and non-negative (`b` real and positive
    /// when `a` vanishes).
    pub fn canonical(&self) -> Self {
        let lead = if self.a.norm() > ALGEBRAIC_TOL {
            self.a
        } else {
            self.b
        };
        let phase = lead.conj() / lead.norm();
        Self {
            a: self.a * phase,
            b: self.b * phase,
        }
    }

    /// Angles `(φ, θ)` with `φ ∈ [0, π]`, `θ ∈ [0, 2π)`.
    pub fn angles(&self) -> (f64, f64) {
        let bloch = bloch_from_state(self);
        let phi = bloch.x1.hypot(bloch.x2).atan2(bloch.x3);
        let theta = bloch
            .x2
            .atan2(bloch.x1)
            .rem_euclid(2.0 * std::f64::consts::PI);
        (phi, theta)
    }
}

/// A point of the unit sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    x1: f64,
    x2: f64,
    x3: f64,
}

impl BlochVector {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let norm = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > ALGEBRAIC_TOL {
            return Err(Error::NotUnitVector(norm));
        }
        Ok(Self { x1, x2, x3 })
    }

    /// Rescales any nonzero vector onto the sphere.
    pub fn normalized(x1: f64, x2: f64, x3: f64) -> Result<Self> {
        let norm = (x1 * x1 + x2 * x2 + x3 * x3).sqrt();
        if norm <= ALGEBRAIC_TOL || !norm.is_finite() {
            return Err(Error::NotUnitVector(norm));
        }
        Ok(Self {
            x1: x1 / norm,
            x2: x2 / norm,
            x3: x3 / norm,
        })
    }

    /// Bloch point of the `+1` eigenstate of `n1·σ1 + n2·σ2 + n3·σ3`.
    ///
    /// With `e^{−iθ}` on the `|1⟩` amplitude the `x2` coordinate is the
    /// negated `σ2` expectation, so a Pauli direction `(n1, n2, n3)` sits at
    /// `(n1, −n2, n3)` on this sphere. Rotation axes of gates and
    /// Hamiltonians go through here before meeting the projection.
    pub fn from_pauli_axis(n1: f64, n2: f64, n3: f64) -> Result<Self> {
        Self::normalized(n1, -n2, n3)
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn to_array(&self) -> [f64; 3] {
        [self.x1, self.x2, self.x3]
    }

    pub fn dot(&self, other: &Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2 + self.x3 * other.x3
    }

    pub fn negated(&self) -> Self {
        Self {
            x1: -self.x1,
            x2: -self.x2,
            x3: -self.x3,
        }
    }

    pub fn distance(&self, other: &Self) -> f64 {
        ((self.x1 - other.x1).powi(2) + (self.x2 - other.x2).powi(2) + (self.x3 - other.x3).powi(2))
            .sqrt()
    }
}

/// The circle `{x ∈ S² : n·x = h}` cut from the sphere by a plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereCircle {
    normal: BlochVector,
    offset: f64,
}

impl SphereCircle {
    pub fn new(normal: BlochVector, offset: f64) -> Result<Self> {
        if offset.is_nan() || offset.abs() >= 1.0 {
            return Err(Error::DegeneratePlane(offset.abs()));
        }
        Ok(Self { normal, offset })
    }

    pub fn normal(&self) -> BlochVector {
        self.normal
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    /// Point of the circle at parameter `angle` (radians).
    pub fn point_at(&self, angle: f64) -> BlochVector {
        let n = self.normal.to_array();
        // Orthonormal frame (e1, e2) of the plane orthogonal to n.
        let helper = if n[0].abs() < 0.9 {
            [1.0, 0.0, 0.0]
        } else {
            [0.0, 1.0, 0.0]
        };
        let cross = |p: [f64; 3], q: [f64; 3]| {
            [
                p[1] * q[2] - p[2] * q[1],
                p[2] * q[0] - p[0] * q[2],
                p[0] * q[1] - p[1] * q[0],
            ]
        };
        let e1 = cross(n, helper);
        let len = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
        let e1 = e1.map(|x| x / len);
        let e2 = cross(n, e1);
        let r = (1.0 - self.offset * self.offset).sqrt();
        let (s, c) = angle.sin_cos();
        let x: [f64; 3] = std::array::from_fn(|i| self.offset * n[i] + r * (c * e1[i] + s * e2[i]));
        BlochVector::normalized(x[0], x[1], x[2]).expect("circle points are nonzero")
    }
}

/// `P(|ψ⟩) = a / b`, kept homogeneous so `|0⟩` lands on ∞.
pub fn project(s: &QubitState) -> ExtendedComplex {
    ExtendedComplex::from_homogeneous(s.a, s.b).expect("normalized state is nonzero")
}

/// Canonical state over a point: `a = |z| / sqrt(1 + |z|²)` real, `b = a / z`.
pub fn unproject(p: &ExtendedComplex) -> QubitState {
    QubitState { a: p.u(), b: p.v() }.canonical()
}

/// Bloch vector `x1 + i·x2 = 2·a·conj(b)`, `x3 = |a|² − |b|²`.
///
/// The sign of `x2` follows from putting `e^{−iθ}` on the `|1⟩` amplitude,
/// which makes `x1 + i·x2 = sin φ·e^{iθ}`. Global phase cancels.
pub fn bloch_from_state(s: &QubitState) -> BlochVector {
    let w = 2.0 * s.a * s.b.conj();
    let x3 = s.a.norm_sqr() - s.b.norm_sqr();
    BlochVector::normalized(w.re, w.im, x3).expect("normalized state has a unit Bloch vector")
}

/// Canonical state with `φ = atan2(sqrt(x1² + x2²), x3)`, `θ = atan2(x2, x1)`.
pub fn state_from_bloch(v: &BlochVector) -> QubitState {
    let phi = v.x1.hypot(v.x2).atan2(v.x3);
    let theta = v.x2.atan2(v.x1);
    QubitState::from_angles(phi, theta)
}

/// `(x1 + i·x2) / (1 − x3)`, with the north pole sent to ∞.
pub fn stereo_project(v: &BlochVector) -> ExtendedComplex {
    // (x1 + i x2, 1 − x3) and (1 + x3, x1 − i x2) are proportional on the
    // sphere; use whichever stays away from (0, 0).
    let (u, w) = if v.x3 >= 0.0 {
        (Complex64::from(1.0 + v.x3), Complex64::new(v.x1, -v.x2))
    } else {
        (Complex64::new(v.x1, v.x2), Complex64::from(1.0 - v.x3))
    };
    ExtendedComplex::from_homogeneous(u, w).expect("unit vector projects to a point")
}

/// Inverse stereographic projection, evaluated on homogeneous coordinates.
pub fn stereo_unproject(p: &ExtendedComplex) -> BlochVector {
    let (u, v) = (p.u(), p.v());
    let w = 2.0 * u * v.conj();
    BlochVector::normalized(w.re, w.im, u.norm_sqr() - v.norm_sqr()).expect("unit pair")
}

/// The plane point of `α|ψ1⟩ + β|ψ2⟩`: `(α·a1 + β·a2) / (α·b1 + β·b2)`.
pub fn superpose(
    alpha: Complex64,
    s1: &QubitState,
    beta: Complex64,
    s2: &QubitState,
) -> Result<ExtendedComplex> {
    let u = alpha * s1.a + beta * s2.a;
    let v = alpha * s1.b + beta * s2.b;
    let scale = (alpha.norm() + beta.norm()).max(1.0);
    if u.norm().hypot(v.norm()) <= ALGEBRAIC_TOL * scale {
        return Err(Error::ZeroVector);
    }
    ExtendedComplex::from_homogeneous(u, v)
}

/// `⟨ψ1|ψ2⟩ = a1·a2 + conj(b1)·b2` on the canonical representatives over
/// the two points (real, non-negative `a`). Defined everywhere, including
/// 0 and ∞.
pub fn inner_product_canonical(p1: &ExtendedComplex, p2: &ExtendedComplex) -> Complex64 {
    let s1 = unproject(p1);
    let s2 = unproject(p2);
    s1.a * s2.a + s1.b.conj() * s2.b
}

/// `|z1||z2| (1 + 1/(conj(z1)·z2)) / sqrt((1+|z1|²)(1+|z2|²))`.
///
/// Affine form of the canonical inner product; indeterminate when either
/// point is 0 (and unusable at ∞), so it is only a cross-check for
/// [`inner_product_canonical`].
pub fn inner_product_literal(z1: Complex64, z2: Complex64) -> Complex64 {
    let scale = z1.norm() * z2.norm() / ((1.0 + z1.norm_sqr()) * (1.0 + z2.norm_sqr())).sqrt();
    scale * (1.0 + (z1.conj() * z2).inv())
}

/// Phase-free overlap `|⟨ψ1|ψ2⟩|`, in `[0, 1]`.
pub fn fidelity(p1: &ExtendedComplex, p2: &ExtendedComplex) -> f64 {
    (p1.u().conj() * p2.u() + p1.v().conj() * p2.v())
        .norm()
        .min(1.0)
}

/// Stereographic image of a sphere circle:
/// `A = n3 − h`, `B = n1 + i·n2`, `C = −(n3 + h)`.
///
/// `A` vanishes exactly when the circle runs through the north pole, in
/// which case the image is a line.
pub fn sphere_circle_to_circline(c: &SphereCircle) -> Result<Circline> {
    let n = c.normal;
    let h = c.offset;
    Circline::new(n.x3 - h, Complex64::new(n.x1, n.x2), -(n.x3 + h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_1_SQRT_2, FRAC_PI_2, PI};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pt(re: f64, im: f64) -> ExtendedComplex {
        ExtendedComplex::from_complex(c(re, im))
    }

    fn state(a: Complex64, b: Complex64) -> QubitState {
        QubitState::normalized(a, b).unwrap()
    }

    fn close3(v: &BlochVector, expected: [f64; 3], tol: f64) -> bool {
        v.to_array()
            .iter()
            .zip(expected)
            .all(|(x, y)| (x - y).abs() <= tol)
    }

    #[test]
    fn project_examples() {
        assert!(project(&QubitState::ket0()).equals(&ExtendedComplex::infinity(), 1e-15));
        assert!(project(&QubitState::ket1()).equals(&pt(0.0, 0.0), 1e-15));
        assert!(project(&QubitState::plus()).equals(&pt(1.0, 0.0), 1e-15));
        assert!(project(&QubitState::minus()).equals(&pt(-1.0, 0.0), 1e-15));
        let s = state(c(1.0, 0.0), c(0.0, 1.0));
        assert!(project(&s).equals(&pt(0.0, -1.0), 1e-15));
    }

    #[test]
    fn unproject_examples() {
        let s = unproject(&ExtendedComplex::infinity());
        assert_eq!((s.a(), s.b()), (c(1.0, 0.0), c(0.0, 0.0)));
        let s = unproject(&pt(0.0, 0.0));
        assert_eq!((s.a(), s.b()), (c(0.0, 0.0), c(1.0, 0.0)));
        let s = unproject(&pt(1.0, 0.0));
        assert!((s.a() - FRAC_1_SQRT_2).norm() < 1e-15 && (s.b() - FRAC_1_SQRT_2).norm() < 1e-15);
    }

    #[test]
    fn bloch_examples() {
        assert!(close3(
            &bloch_from_state(&QubitState::ket0()),
            [0.0, 0.0, 1.0],
            1e-15
        ));
        assert!(close3(
            &bloch_from_state(&QubitState::plus()),
            [1.0, 0.0, 0.0],
            1e-15
        ));
        // a = 1/√2, b = i/√2 = e^{−iθ}/√2 with θ = −π/2: x1 + i x2 = e^{−iπ/2}.
        let s = state(c(1.0, 0.0), c(0.0, 1.0));
        let v = bloch_from_state(&s);
        assert!(close3(&v, [0.0, -1.0, 0.0], 1e-15));
        assert!(stereo_project(&v).equals(&project(&s), 1e-15));
        let z = Complex64::from_polar(1.0 / (PI / 4.0).tan(), -FRAC_PI_2);
        assert!(project(&s).equals(&ExtendedComplex::from_complex(z), 1e-15));
    }

    #[test]
    fn state_from_bloch_examples() {
        let s = state_from_bloch(&BlochVector::new(0.0, 0.0, 1.0).unwrap());
        assert!((s.a() - 1.0).norm() < 1e-15 && s.b().norm() < 1e-15);
        let s = state_from_bloch(&BlochVector::new(0.0, 0.0, -1.0).unwrap());
        assert!(s.a().norm() < 1e-15 && (s.b() - 1.0).norm() < 1e-15);
        let v = BlochVector::new(1.0, 0.0, 0.0).unwrap();
        let s = state_from_bloch(&v);
        assert!((s.a() - FRAC_1_SQRT_2).norm() < 1e-15 && (s.b() - FRAC_1_SQRT_2).norm() < 1e-15);
        assert!(close3(&bloch_from_state(&s), [1.0, 0.0, 0.0], 1e-15));
    }

    #[test]
    fn stereo_examples() {
        let north = BlochVector::new(0.0, 0.0, 1.0).unwrap();
        assert!(stereo_project(&north).equals(&ExtendedComplex::infinity(), 1e-15));
        let south = BlochVector::new(0.0, 0.0, -1.0).unwrap();
        assert!(stereo_project(&south).equals(&pt(0.0, 0.0), 1e-15));
        let east = BlochVector::new(1.0, 0.0, 0.0).unwrap();
        assert!(stereo_project(&east).equals(&pt(1.0, 0.0), 1e-15));

        assert!(close3(
            &stereo_unproject(&ExtendedComplex::infinity()),
            [0.0, 0.0, 1.0],
            0.0
        ));
        assert!(close3(
            &stereo_unproject(&pt(0.0, 0.0)),
            [0.0, 0.0, -1.0],
            0.0
        ));
        let v = stereo_unproject(&pt(0.0, 1.0));
        assert!(close3(&v, [0.0, 1.0, 0.0], 1e-15));
        assert!(stereo_project(&v).equals(&pt(0.0, 1.0), 1e-15));
    }

    #[test]
    fn superpose_examples() {
        let one = c(1.0, 0.0);
        let z = superpose(one, &QubitState::ket0(), one, &QubitState::ket1()).unwrap();
        assert!(z.equals(&pt(1.0, 0.0), 1e-15));

        let s1 = state(c(0.3, 0.2), c(-0.7, 0.1));
        let z = superpose(one, &s1, c(0.0, 0.0), &QubitState::plus()).unwrap();
        assert!(z.equals(&project(&s1), 1e-15));

        let err = superpose(one, &QubitState::plus(), -one, &QubitState::plus()).unwrap_err();
        assert_eq!(err, Error::ZeroVector);
    }

    #[test]
    fn inner_product_examples() {
        let one = pt(1.0, 0.0);
        assert!((inner_product_canonical(&one, &one) - 1.0).norm() < 1e-15);
        assert!(inner_product_canonical(&one, &pt(-1.0, 0.0)).norm() < 1e-15);
        let v = inner_product_canonical(&one, &ExtendedComplex::infinity());
        assert!((v - FRAC_1_SQRT_2).norm() < 1e-15);
        // ⟨+|0⟩ in Hilbert space.
        let plus = QubitState::plus();
        let direct = plus.a().conj() * 1.0 + plus.b().conj() * 0.0;
        assert!((v - direct).norm() < 1e-15);
    }

    #[test]
    fn fidelity_examples() {
        let p = pt(0.4, -1.3);
        assert!((fidelity(&p, &p) - 1.0).abs() < 1e-15);
        assert!(fidelity(&pt(0.0, 0.0), &ExtendedComplex::infinity()).abs() < 1e-15);
        let f = fidelity(&pt(1.0, 0.0), &pt(0.0, 1.0));
        assert!((f - FRAC_1_SQRT_2).abs() < 1e-15);
        let (s1, s2) = (unproject(&pt(1.0, 0.0)), unproject(&pt(0.0, 1.0)));
        let direct = (s1.a().conj() * s2.a() + s1.b().conj() * s2.b()).norm();
        assert!((f - direct).abs() < 1e-15);
    }

    fn sample_equator(circle: &SphereCircle, k: &Circline, n: usize) {
        for j in 0..n {
            let x = circle.point_at(2.0 * PI * j as f64 / n as f64);
            assert!((x.dot(&circle.normal()) - circle.offset()).abs() < 1e-12);
            assert!(
                k.contains(&stereo_project(&x), 1e-9),
                "point {j} off the circline"
            );
        }
    }

    #[test]
    fn sphere_circle_examples() {
        let z_axis = BlochVector::new(0.0, 0.0, 1.0).unwrap();
        let equator = SphereCircle::new(z_axis, 0.0).unwrap();
        let k = sphere_circle_to_circline(&equator).unwrap();
        assert_eq!((k.a(), k.b(), k.c()), (1.0, c(0.0, 0.0), -1.0));
        sample_equator(&equator, &k, 8);

        let meridian = SphereCircle::new(BlochVector::new(1.0, 0.0, 0.0).unwrap(), 0.0).unwrap();
        let k = sphere_circle_to_circline(&meridian).unwrap();
        assert_eq!(k.a(), 0.0);
        assert!(k.contains(&ExtendedComplex::infinity(), 1e-12));
        sample_equator(&meridian, &k, 16);

        let upper = SphereCircle::new(z_axis, 0.5).unwrap();
        let k = sphere_circle_to_circline(&upper).unwrap();
        let (center, radius) = k.center_radius().unwrap();
        assert!(center.norm() < 1e-15);
        assert!((radius - 3f64.sqrt()).abs() < 1e-15);
        sample_equator(&upper, &k, 8);

        assert_eq!(
            SphereCircle::new(z_axis, 1.0).unwrap_err(),
            Error::DegeneratePlane(1.0)
        );
    }

    #[test]
    fn pauli_axis_points_at_eigenstates() {
        // σ2 eigenstate with eigenvalue +1 is (1, i)/√2, which projects to −i.
        let y = BlochVector::from_pauli_axis(0.0, 1.0, 0.0).unwrap();
        assert!(stereo_project(&y).equals(&pt(0.0, -1.0), 1e-15));
        let s = state(c(1.0, 0.0), c(0.0, 1.0));
        assert!(bloch_from_state(&s).distance(&y) < 1e-15);
        // (σ1 + σ3)/√2 has +1 eigenvector (cos π/8, sin π/8).
        let h = BlochVector::from_pauli_axis(1.0, 0.0, 1.0).unwrap();
        let s = QubitState::new(c((PI / 8.0).cos(), 0.0), c((PI / 8.0).sin(), 0.0)).unwrap();
        assert!(bloch_from_state(&s).distance(&h) < 1e-15);
    }

    #[test]
    fn constructors_validate() {
        assert!(matches!(
            QubitState::new(c(1.0, 0.0), c(1.0, 0.0)),
            Err(Error::NotNormalized(_))
        ));
        assert_eq!(
            QubitState::normalized(c(0.0, 0.0), c(0.0, 0.0)).unwrap_err(),
            Error::ZeroVector
        );
        assert!(matches!(
            BlochVector::new(1.0, 1.0, 0.0),
            Err(Error::NotUnitVector(_))
        ));
    }

    fn state_strategy() -> impl Strategy<Value = QubitState> {
        prop_oneof![
            1 => Just(QubitState::ket0()),
            1 => Just(QubitState::ket1()),
            10 => (-1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64, -1.0..1.0f64)
                .prop_filter_map("zero", |(a, b, c, d)| {
                    QubitState::normalized(Complex64::new(a, b), Complex64::new(c, d)).ok()
                }),
        ]
    }

    fn point_strategy() -> impl Strategy<Value = ExtendedComplex> {
        prop_oneof![
            1 => Just(ExtendedComplex::infinity()),
            1 => Just(ExtendedComplex::zero()),
            10 => (-20.0..20.0f64, -20.0..20.0f64).prop_map(|(x, y)| ExtendedComplex::from_complex(Complex64::new(x, y))),
        ]
    }

    proptest! {
        #[test]
        fn state_plane_round_trip(s in state_strategy(), p in point_strategy()) {
            let back = unproject(&project(&s));
            let overlap = (back.a().conj() * s.a() + back.b().conj() * s.b()).norm();
            prop_assert!(overlap >= 1.0 - 1e-12);
            prop_assert!(project(&unproject(&p)).equals(&p, 1e-12));
        }

        #[test]
        fn commuting_square(s in state_strategy()) {
            prop_assert!(stereo_project(&bloch_from_state(&s)).equals(&project(&s), 1e-12));
        }

        #[test]
        fn projection_forgets_phase(s in state_strategy(), gamma in -10.0..10.0f64) {
            prop_assert!(project(&s.with_phase(gamma)).equals(&project(&s), 1e-15));
            let v = bloch_from_state(&s).distance(&bloch_from_state(&s.with_phase(gamma)));
            prop_assert!(v < 1e-15);
        }

        #[test]
        fn superposition_matches_normalized_state(s1 in state_strategy(), s2 in state_strategy(),
                                                  a in (-2.0..2.0f64, -2.0..2.0f64),
                                                  b in (-2.0..2.0f64, -2.0..2.0f64)) {
            let (alpha, beta) = (Complex64::new(a.0, a.1), Complex64::new(b.0, b.1));
            let Ok(z) = superpose(alpha, &s1, beta, &s2) else { return Ok(()); };
            let explicit = QubitState::normalized(alpha * s1.a() + beta * s2.a(), alpha * s1.b() + beta * s2.b()).unwrap();
            prop_assert!(z.equals(&project(&explicit), 1e-12));
        }

        #[test]
        fn literal_inner_product_agrees(r1 in -3.0..3.0f64, t1 in 0.0..6.3f64,
                                        r2 in -3.0..3.0f64, t2 in 0.0..6.3f64) {
            let z1 = Complex64::from_polar(10f64.powf(r1), t1);
            let z2 = Complex64::from_polar(10f64.powf(r2), t2);
            let canon = inner_product_canonical(&ExtendedComplex::from_complex(z1), &ExtendedComplex::from_complex(z2));
            prop_assert!((canon - inner_product_literal(z1, z2)).norm() < 1e-10);
        }

        #[test]
        fn antipodes_are_orthogonal(p in point_strategy()) {
            prop_assert!(fidelity(&p, &p.antipode()) < 1e-15);
            let x = stereo_unproject(&p);
            prop_assert!(stereo_unproject(&p.antipode()).distance(&x.negated()) < 1e-12);
        }

        #[test]
        fn sphere_plane_round_trip(p in point_strategy()) {
            prop_assert!(stereo_project(&stereo_unproject(&p)).equals(&p, 1e-12));
        }

        #[test]
        fn bloch_state_round_trip(s in state_strategy()) {
            let v = bloch_from_state(&s);
            prop_assert!(bloch_from_state(&state_from_bloch(&v)).distance(&v) < 1e-12);
        }
    }
}
