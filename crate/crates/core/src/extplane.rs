//! The extended complex plane C ∪ {∞}.
//!
//! Points are stored as homogeneous pairs `(u, v)` standing for `u / v`, so
//! the point at infinity is simply `(1, 0)` and Möbius maps act by plain
//! 2×2 matrix multiplication with no pole branching. Equality of points is
//! measured with the chordal metric, which stays uniform near ∞.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::{ALGEBRAIC_TOL, GEOMETRIC_TOL};

type Mat2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A point of the Riemann sphere in homogeneous coordinates.
///
/// Always held in canonical form: `|u|² + |v|² = 1` and the first component
/// with modulus above [`ALGEBRAIC_TOL`] real and positive. Two pairs that
/// differ by a nonzero complex factor produce the same canonical form, but
/// comparisons should still go through [`ExtendedComplex::equals`].
#[derive(Debug, Clone, Copy)]
pub struct ExtendedComplex {
    u: Complex64,
    v: Complex64,
}

impl ExtendedComplex {
    /// Embeds a finite complex number. Non-finite input maps to ∞.
    pub fn from_complex(z: Complex64) -> Self {
        if !z.is_finite() {
            return Self::infinity();
        }
        Self::normalize(z, ONE).expect("(z, 1) is never the zero vector")
    }

    pub fn infinity() -> Self {
        Self { u: ONE, v: ZERO }
    }

    pub fn zero() -> Self {
        Self { u: ZERO, v: ONE }
    }

    /// Builds the point `u / v`. Fails when both coordinates vanish.
    pub fn from_homogeneous(u: Complex64, v: Complex64) -> Result<Self> {
        Self::normalize(u, v).ok_or(Error::ZeroVector)
    }

    fn normalize(u: Complex64, v: Complex64) -> Option<Self> {
        let norm = u.norm().hypot(v.norm());
        if norm == 0.0 || !norm.is_finite() {
            return None;
        }
        let (u, v) = (u / norm, v / norm);
        let lead = if u.norm() > ALGEBRAIC_TOL { u } else { v };
        let phase = lead.conj() / lead.norm();
        Some(Self {
            u: u * phase,
            v: v * phase,
        })
    }

    pub fn u(&self) -> Complex64 {
        self.u
    }

    pub fn v(&self) -> Complex64 {
        self.v
    }

    /// The affine value `u / v`, or `None` at ∞.
    pub fn to_complex(&self) -> Option<Complex64> {
        if self.v == ZERO {
            None
        } else {
            Some(self.u / self.v)
        }
    }

    pub fn is_infinity(&self, tol: f64) -> bool {
        self.chordal_distance(&Self::infinity()) <= tol
    }

    /// Euclidean distance between the two preimages on the unit sphere.
    ///
    /// For finite points this is `2|z1 − z2| / sqrt((1+|z1|²)(1+|z2|²))`.
    pub fn chordal_distance(&self, other: &Self) -> f64 {
        let cross = self.u * other.v - other.u * self.v;
        (2.0 * cross.norm()).min(2.0)
    }

    /// Scale-invariant equality: chordal distance at most `tol`.
    pub fn equals(&self, other: &Self, tol: f64) -> bool {
        self.chordal_distance(other) <= tol
    }

    /// The diametrically opposite point `−1 / conj(z)`.
    pub fn antipode(&self) -> Self {
        Self::normalize(-self.v.conj(), self.u.conj()).expect("unit pair")
    }

    /// Whether the point lies on the extended real line R ∪ {∞}.
    pub fn is_real(&self, tol: f64) -> bool {
        (self.u * self.v.conj()).im.abs() <= tol
    }
}

impl fmt::Display for ExtendedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_complex() {
            None => write!(f, "inf"),
            Some(z) => write!(f, "{}", z),
        }
    }
}

/// Chordal distance between two points of the extended plane.
pub fn chordal_distance(p: &ExtendedComplex, q: &ExtendedComplex) -> f64 {
    p.chordal_distance(q)
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn mat_adjoint(a: &Mat2) -> Mat2 {
    [
        [a[0][0].conj(), a[1][0].conj()],
        [a[0][1].conj(), a[1][1].conj()],
    ]
}

fn frobenius_sq(a: &Mat2) -> f64 {
    a.iter().flatten().map(|x| x.norm_sqr()).sum()
}

/// A Möbius transformation `z ↦ (m00·z + m01) / (m10·z + m11)`.
///
/// The coefficient matrix is only meaningful up to a nonzero scale factor;
/// use [`MoebiusTransform::distance`] to compare maps.
#[derive(Debug, Clone, Copy)]
pub struct MoebiusTransform {
    m: Mat2,
}

impl MoebiusTransform {
    pub fn new(m00: Complex64, m01: Complex64, m10: Complex64, m11: Complex64) -> Result<Self> {
        Self::from_matrix([[m00, m01], [m10, m11]])
    }

    /// Rejects matrices whose determinant is negligible relative to their size.
    pub fn from_matrix(m: Mat2) -> Result<Self> {
        let scale = frobenius_sq(&m);
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if !scale.is_finite() || !det.is_finite() || det.norm() <= ALGEBRAIC_TOL * scale {
            let rel = if scale > 0.0 && scale.is_finite() {
                det.norm() / scale
            } else {
                0.0
            };
            return Err(Error::DegenerateTransform(rel));
        }
        Ok(Self { m })
    }

    pub fn identity() -> Self {
        Self {
            m: [[ONE, ZERO], [ZERO, ONE]],
        }
    }

    pub fn matrix(&self) -> Mat2 {
        self.m
    }

    pub fn determinant(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn apply(&self, p: &ExtendedComplex) -> ExtendedComplex {
        let u = self.m[0][0] * p.u + self.m[0][1] * p.v;
        let v = self.m[1][0] * p.u + self.m[1][1] * p.v;
        ExtendedComplex::normalize(u, v)
            .expect("non-degenerate map sends nonzero pairs to nonzero pairs")
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        Self {
            m: mat_mul(&self.m, &other.m),
        }
    }

    /// Adjugate matrix; equal to the inverse up to the (irrelevant) scale.
    pub fn inverse(&self) -> Self {
        let m = &self.m;
        Self {
            m: [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]],
        }
    }

    fn det_one(&self) -> Result<Mat2> {
        let det = self.determinant();
        if det.norm() <= ALGEBRAIC_TOL * frobenius_sq(&self.m) {
            return Err(Error::DegenerateTransform(det.norm()));
        }
        let k = det.sqrt().inv();
        Ok(self.m.map(|row| row.map(|x| x * k)))
    }

    /// Det-1 representative with a fixed sign.
    ///
    /// The first row-major entry with modulus above ε is made to have positive
    /// real part, or positive imaginary part when its real part is within ε
    /// of zero.
    pub fn canonical(&self) -> Result<Self> {
        let m = self.det_one()?;
        let sign = m
            .iter()
            .flatten()
            .find(|x| x.norm() > ALGEBRAIC_TOL)
            .map(|x| {
                let negative = if x.re.abs() > ALGEBRAIC_TOL {
                    x.re < 0.0
                } else {
                    x.im < 0.0
                };
                if negative {
                    -1.0
                } else {
                    1.0
                }
            })
            .unwrap_or(1.0);
        Ok(Self {
            m: m.map(|row| row.map(|x| x * sign)),
        })
    }

    /// Frobenius distance between det-1 representatives, minimized over sign.
    /// Zero exactly when both matrices define the same map.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        let a = self.det_one()?;
        let b = other.det_one()?;
        let mut minus = 0.0;
        let mut plus = 0.0;
        for (x, y) in a.iter().flatten().zip(b.iter().flatten()) {
            minus += (x - y).norm_sqr();
            plus += (x + y).norm_sqr();
        }
        Ok(minus.min(plus).sqrt())
    }

    /// Points with `f(p) = p`: roots of `m10·z² + (m11 − m00)·z − m01 = 0`
    /// over C ∪ {∞}, solved in homogeneous form. Two points, or one for a
    /// parabolic map.
    pub fn fixed_points(&self) -> Result<Vec<ExtendedComplex>> {
        let canon = self.canonical()?;
        if canon.distance(&Self::identity())? <= ALGEBRAIC_TOL {
            return Err(Error::IdentityTransform);
        }
        let m = canon.m;
        // a·u² + b·u·v + c·v² = 0
        let a = m[1][0];
        let b = m[1][1] - m[0][0];
        let c = -m[0][1];
        let mut root = (b * b - 4.0 * a * c).sqrt();
        if (b.conj() * root).re < 0.0 {
            root = -root;
        }
        let q = -(b + root) / 2.0;
        let mut points: Vec<ExtendedComplex> = Vec::with_capacity(2);
        for (u, v) in [(q, a), (c, q)] {
            if let Ok(p) = ExtendedComplex::from_homogeneous(u, v) {
                if u.norm().hypot(v.norm()) > ALGEBRAIC_TOL
                    && !points.iter().any(|x| x.equals(&p, GEOMETRIC_TOL))
                {
                    points.push(p);
                }
            }
        }
        Ok(points)
    }
}

impl fmt::Display for MoebiusTransform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(
            f,
            "(({})z + ({})) / (({})z + ({}))",
            m[0][0], m[0][1], m[1][0], m[1][1]
        )
    }
}

fn distinct_count(points: &[&ExtendedComplex], tol: f64) -> usize {
    let mut reps: Vec<&ExtendedComplex> = Vec::new();
    for p in points {
        if !reps.iter().any(|r| r.equals(p, tol)) {
            reps.push(p);
        }
    }
    reps.len()
}

/// Cross-ratio `((z1−z3)(z2−z4)) / ((z2−z3)(z1−z4))`, evaluated on
/// homogeneous coordinates so any argument may be ∞.
///
/// With this convention `z ↦ cross_ratio(z, 1, 0, ∞)` is the identity.
pub fn cross_ratio(
    p1: &ExtendedComplex,
    p2: &ExtendedComplex,
    p3: &ExtendedComplex,
    p4: &ExtendedComplex,
) -> Result<ExtendedComplex> {
    if distinct_count(&[p1, p2, p3, p4], GEOMETRIC_TOL) < 3 {
        return Err(Error::DegenerateInput(
            "cross-ratio needs at least three distinct points".into(),
        ));
    }
    let d = |p: &ExtendedComplex, q: &ExtendedComplex| p.u * q.v - q.u * p.v;
    ExtendedComplex::from_homogeneous(d(p1, p3) * d(p2, p4), d(p2, p3) * d(p1, p4))
        .map_err(|_| Error::DegenerateInput("cross-ratio is indeterminate".into()))
}

/// Whether all points lie on one circline.
///
/// Fits the circline through the first three distinct points, checks that
/// every other point is on it, and cross-checks each extra point through
/// realness of its cross-ratio with the three anchors.
pub fn concyclic(points: &[ExtendedComplex], tol: f64) -> Result<bool> {
    let mut anchors: Vec<&ExtendedComplex> = Vec::with_capacity(3);
    for p in points {
        if anchors.len() == 3 {
            break;
        }
        if !anchors.iter().any(|a| a.equals(p, GEOMETRIC_TOL)) {
            anchors.push(p);
        }
    }
    if anchors.len() < 3 {
        return Err(Error::DegenerateInput(format!(
            "only {} distinct point(s); a circline needs three",
            anchors.len()
        )));
    }
    let circle = Circline::through(anchors[0], anchors[1], anchors[2])?;
    let mut on_circle = true;
    let mut real_ratio = true;
    for p in points {
        on_circle &= circle.contains(p, tol);
        if anchors.iter().all(|a| !a.equals(p, GEOMETRIC_TOL)) {
            let cr = cross_ratio(anchors[0], anchors[1], anchors[2], p)?;
            real_ratio &= cr.is_real(tol);
        }
    }
    Ok(on_circle && real_ratio)
}

/// A generalized circle `A|z|² + B·z̄ + B̄·z + C = 0` with real `A`, `C`.
///
/// Equivalently the Hermitian form `[[A, B], [B̄, C]]` vanishing on the
/// homogeneous point. Lines are the circlines with `A = 0`; they pass
/// through ∞. Coefficients are scaled so that `max(|A|, |B|, |C|) = 1`, with
/// the first coefficient above ε made positive (real part first for `B`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Circline {
    a: f64,
    b: Complex64,
    c: f64,
}

impl Circline {
    pub fn new(a: f64, b: Complex64, c: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(Error::DegenerateInput(
                "non-finite circline coefficient".into(),
            ));
        }
        let scale = a.abs().max(b.norm()).max(c.abs());
        if scale == 0.0 {
            return Err(Error::DegenerateInput(
                "all circline coefficients vanish".into(),
            ));
        }
        let (mut a, mut b, mut c) = (a / scale, b / scale, c / scale);
        let negative = if a.abs() > ALGEBRAIC_TOL {
            a < 0.0
        } else if b.norm() > ALGEBRAIC_TOL {
            if b.re.abs() > ALGEBRAIC_TOL {
                b.re < 0.0
            } else {
                b.im < 0.0
            }
        } else {
            c < 0.0
        };
        if negative {
            a = -a;
            b = -b;
            c = -c;
        }
        if b.norm_sqr() - a * c <= ALGEBRAIC_TOL {
            return Err(Error::DegenerateInput(
                "circline has no real points or a single point".into(),
            ));
        }
        Ok(Self { a, b, c })
    }

    /// From a 2×2 Hermitian matrix `[[A, B], [B̄, C]]`.
    pub fn from_hermitian(h: Mat2) -> Result<Self> {
        let scale = frobenius_sq(&h).sqrt();
        let skew = h[0][0].im.abs() + h[1][1].im.abs() + (h[1][0] - h[0][1].conj()).norm();
        if skew > 1e-9 * scale.max(f64::MIN_POSITIVE) {
            return Err(Error::DegenerateInput("matrix is not Hermitian".into()));
        }
        let b = (h[0][1] + h[1][0].conj()) / 2.0;
        Self::new(h[0][0].re, b, h[1][1].re)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> Complex64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn hermitian(&self) -> Mat2 {
        [
            [Complex64::from(self.a), self.b],
            [self.b.conj(), Complex64::from(self.c)],
        ]
    }

    pub fn is_line(&self, tol: f64) -> bool {
        self.a.abs() <= tol
    }

    /// Center and radius, or `None` for a line.
    pub fn center_radius(&self) -> Option<(Complex64, f64)> {
        if self.is_line(ALGEBRAIC_TOL) {
            return None;
        }
        let center = -self.b / self.a;
        let radius = ((self.b.norm_sqr() - self.a * self.c) / (self.a * self.a)).sqrt();
        Some((center, radius))
    }

    /// Value of the Hermitian form on the unit-normalized representative.
    pub fn residual(&self, p: &ExtendedComplex) -> f64 {
        let (u, v) = (p.u(), p.v());
        let value =
            u.conj() * (self.a * u + self.b * v) + v.conj() * (self.b.conj() * u + self.c * v);
        value.norm()
    }

    pub fn contains(&self, p: &ExtendedComplex, tol: f64) -> bool {
        self.residual(p) <= tol
    }

    /// Image under `m`: Hermitian matrix `(M⁻¹)† H (M⁻¹)`.
    pub fn image(&self, m: &MoebiusTransform) -> Result<Self> {
        let det = m.determinant();
        if det.norm() <= ALGEBRAIC_TOL * frobenius_sq(&m.m) {
            return Err(Error::DegenerateTransform(det.norm()));
        }
        let inv = m.inverse().m;
        let h = mat_mul(&mat_adjoint(&inv), &mat_mul(&self.hermitian(), &inv));
        Self::from_hermitian(h)
    }

    /// The unique circline through three distinct points.
    pub fn through(
        p1: &ExtendedComplex,
        p2: &ExtendedComplex,
        p3: &ExtendedComplex,
    ) -> Result<Self> {
        if distinct_count(&[p1, p2, p3], GEOMETRIC_TOL) < 3 {
            return Err(Error::DegenerateInput(
                "circline needs three pairwise distinct points".into(),
            ));
        }
        // Each point gives one real linear equation in (A, C, Re B, Im B):
        //   A|u|² + C|v|² + 2 Re(B)·Re(ū v) − 2 Im(B)·Im(ū v) = 0.
        let rows: Vec<[f64; 4]> = [p1, p2, p3]
            .iter()
            .map(|p| {
                let w = p.u().conj() * p.v();
                [p.u().norm_sqr(), p.v().norm_sqr(), 2.0 * w.re, -2.0 * w.im]
            })
            .collect();
        let null = null_vector_3x4(&rows);
        Self::new(null[0], Complex64::new(null[2], null[3]), null[1])
    }
}

fn det3(m: [[f64; 3]; 3]) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Generalized cross product of three vectors in R⁴.
fn null_vector_3x4(rows: &[[f64; 4]]) -> [f64; 4] {
    let mut out = [0.0; 4];
    for (j, slot) in out.iter_mut().enumerate() {
        let mut minor = [[0.0; 3]; 3];
        for (r, row) in rows.iter().enumerate() {
            let mut k = 0;
            for (col, &x) in row.iter().enumerate() {
                if col != j {
                    minor[r][k] = x;
                    k += 1;
                }
            }
        }
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        *slot = sign * det3(minor);
    }
    out
}
