//! The subcommands, as functions from parsed input to report text.

use std::fmt::Write;

use qubit_mobius::dynamics::{self, Hamiltonian};
use qubit_mobius::gates;
use qubit_mobius::{qubit, Circline, Complex64, Error, MoebiusTransform};

use crate::error::Result;
use crate::expr::GateExpression;
use crate::state::parse_state;
use crate::text::{format_complex_sig, format_point, format_real_sig};
use crate::trajectory::{
    CirclineCoefficients, Concyclicity, TrajectoryFile, TrajectoryMetadata, TrajectoryRow,
};

const DIGITS: usize = 12;

fn num(x: f64) -> String {
    format_real_sig(x, DIGITS)
}

fn cnum(z: Complex64) -> String {
    format_complex_sig(z, DIGITS)
}

pub fn cmd_gate(expr: &GateExpression) -> Result<String> {
    let u = expr.unitary();
    let f = u.moebius().canonical()?;
    let d = gates::decompose_axis_angle(&u);
    let [[u00, u01], [u10, u11]] = u.matrix();
    let [[a, b], [c, dd]] = f.matrix();

    let mut out = String::new();
    let _ = writeln!(out, "unitary:");
    let _ = writeln!(out, "  [{}, {}]", cnum(u00), cnum(u01));
    let _ = writeln!(out, "  [{}, {}]", cnum(u10), cnum(u11));
    let _ = writeln!(out, "moebius (det = 1):");
    let _ = writeln!(out, "  a = {}", cnum(a));
    let _ = writeln!(out, "  b = {}", cnum(b));
    let _ = writeln!(out, "  c = {}", cnum(c));
    let _ = writeln!(out, "  d = {}", cnum(dd));
    let _ = writeln!(
        out,
        "axis-angle: alpha = {}, axis = ({}, {}, {}), beta = {}",
        num(d.alpha),
        num(d.axis[0]),
        num(d.axis[1]),
        num(d.axis[2]),
        num(d.beta)
    );
    let _ = writeln!(
        out,
        "map: f(z) = (({})·z + ({}))/(({})·z + ({}))",
        cnum(a),
        cnum(b),
        cnum(c),
        cnum(dd)
    );
    let _ = writeln!(out, "simplified: f(z) = {}", simplified_map(&f));
    Ok(out)
}

/// The map with a unit coefficient pulled out: `(z + 1)/(z - 1)`, `1/z`, `-z`.
pub fn simplified_map(f: &MoebiusTransform) -> String {
    let [[a, b], [c, d]] = f.matrix();
    let scale = [a, b, c, d].iter().map(|x| x.norm()).fold(0.0, f64::max);
    if c.norm() <= 1e-12 * scale {
        let (p, q) = (a / d, b / d);
        let tidy = tidy_scale(&[p, q]);
        return linear(tidy(p), tidy(q));
    }
    let (p, q, r) = (a / c, b / c, d / c);
    let tidy = tidy_scale(&[p, q, r]);
    let numerator = linear(tidy(p), tidy(q));
    let denominator = linear(Complex64::new(1.0, 0.0), tidy(r));
    match (numerator.as_str(), denominator.as_str()) {
        ("0", _) => "0".to_string(),
        (n, d) => format!("{}/{}", wrap(n), wrap(d)),
    }
}

/// Zeroes parts that are negligible next to the largest coefficient.
fn tidy_scale(values: &[Complex64]) -> impl Fn(Complex64) -> Complex64 {
    let scale = values.iter().map(|x| x.norm()).fold(0.0, f64::max);
    move |z: Complex64| {
        let clean = |x: f64| if x.abs() <= 1e-12 * scale { 0.0 } else { x };
        Complex64::new(clean(z.re), clean(z.im))
    }
}

fn wrap(s: &str) -> String {
    if s.contains(' ') {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Renders `p·z + q`.
fn linear(p: Complex64, q: Complex64) -> String {
    let p_text = cnum(p);
    let q_text = cnum(q);
    let z_term = match p_text.as_str() {
        "0" => None,
        "1" => Some("z".to_string()),
        "-1" => Some("-z".to_string()),
        s if p.im == 0.0 || p.re == 0.0 => Some(format!("{s}·z")),
        s => Some(format!("({s})·z")),
    };
    let real_q = q.im == 0.0 && q_text != "0";
    match (z_term, q_text.as_str()) {
        (None, q) => q.to_string(),
        (Some(z), "0") => z,
        (Some(z), q) if real_q => match q.strip_prefix('-') {
            Some(magnitude) => format!("{z} - {magnitude}"),
            None => format!("{z} + {q}"),
        },
        (Some(z), q) => format!("{z} + ({q})"),
    }
}

pub struct VerifyOutcome {
    pub equal: bool,
    pub distance: f64,
    pub report: String,
}

pub fn cmd_verify(lhs: &GateExpression, rhs: &GateExpression, tol: f64) -> Result<VerifyOutcome> {
    let check = gates::compare_sequences(&lhs.gates(), &rhs.gates(), tol)?;
    let equal = check.holds(tol);
    let report = if equal {
        "EQUAL (up to global phase)\n".to_string()
    } else {
        format!(
            "NOT EQUAL: psl2 distance = {}\n",
            format_real_sig(check.distance, DIGITS)
        )
    };
    Ok(VerifyOutcome {
        equal,
        distance: check.distance,
        report,
    })
}

pub fn cmd_project(spec: &str) -> Result<String> {
    let s = parse_state(spec)?;
    let z = qubit::project(&s);
    let bloch = qubit::bloch_from_state(&s);
    let canonical = s.canonical();
    let mut out = String::new();
    let _ = writeln!(out, "z = {}", format_point(&z, DIGITS));
    let _ = writeln!(
        out,
        "bloch = ({}, {}, {})",
        num(bloch.x1()),
        num(bloch.x2()),
        num(bloch.x3())
    );
    let _ = writeln!(
        out,
        "amplitudes = ({}, {})",
        cnum(canonical.a()),
        cnum(canonical.b())
    );
    Ok(out)
}

pub fn cmd_fixed_points(expr: &GateExpression) -> Result<String> {
    let f = expr.unitary().moebius();
    let mut out = String::new();
    match f.fixed_points() {
        Err(Error::IdentityTransform) => {
            let _ = writeln!(out, "identity map: every point is fixed");
        }
        Err(e) => return Err(e.into()),
        Ok(points) => {
            for p in points {
                let bloch = qubit::stereo_unproject(&p);
                let _ = writeln!(
                    out,
                    "z = {}, bloch = ({}, {}, {})",
                    format_point(&p, DIGITS),
                    num(bloch.x1()),
                    num(bloch.x2()),
                    num(bloch.x3())
                );
            }
        }
    }
    Ok(out)
}

pub struct EvolveOutcome {
    pub file: TrajectoryFile,
    pub circline: Option<Circline>,
    /// Why no circline exists, when it does not.
    pub degeneracy: Option<String>,
}

pub fn cmd_evolve(
    h: &Hamiltonian,
    state_spec: &str,
    t_max: f64,
    n: usize,
    tol: f64,
) -> Result<EvolveOutcome> {
    let s0 = parse_state(state_spec)?;
    let records = dynamics::sample_trajectory(h, &s0, t_max, n)?;
    let (circline, degeneracy) = match dynamics::precession_circline(h, &s0) {
        Ok(k) => (Some(k), None),
        Err(Error::DegenerateOrbit(why)) => (None, Some(why)),
        Err(e) => return Err(e.into()),
    };
    let concyclic = match (&circline, dynamics::verify_concyclic(&records, tol)) {
        (None, _) | (_, Err(_)) => Concyclicity::Degenerate,
        (Some(_), Ok(true)) => Concyclicity::Concyclic,
        (Some(_), Ok(false)) => Concyclicity::NotConcyclic,
    };
    let canonical = s0.canonical();
    let [h1, h2, h3] = h.field();
    let metadata = TrajectoryMetadata {
        h0: h.h0(),
        h1,
        h2,
        h3,
        hbar: h.hbar(),
        state: state_spec.to_string(),
        a_re: canonical.a().re,
        a_im: canonical.a().im,
        b_re: canonical.b().re,
        b_im: canonical.b().im,
        t_max,
        n,
        circline: circline.as_ref().map(CirclineCoefficients::from),
        concyclic,
    };
    let file = TrajectoryFile {
        metadata,
        records: records.iter().map(TrajectoryRow::from).collect(),
    };
    Ok(EvolveOutcome {
        file,
        circline,
        degeneracy,
    })
}

pub fn evolve_report(outcome: &EvolveOutcome) -> String {
    let mut out = String::new();
    let rows = &outcome.file.records;
    let infinite = rows.iter().filter(|r| r.at_infinity).count();
    let _ = writeln!(out, "samples: {} ({} at infinity)", rows.len(), infinite);
    match (&outcome.circline, &outcome.degeneracy) {
        (Some(k), _) => {
            let _ = writeln!(
                out,
                "circline: A = {}, B = {}, C = {}",
                num(k.a()),
                cnum(k.b()),
                num(k.c())
            );
            match k.center_radius() {
                Some((center, radius)) => {
                    let _ = writeln!(
                        out,
                        "  circle: center = {}, radius = {}",
                        cnum(center),
                        num(radius)
                    );
                }
                None => {
                    let _ = writeln!(out, "  straight line (passes through infinity)");
                }
            }
        }
        (None, Some(why)) => {
            let _ = writeln!(out, "circline: DEGENERATE ({why})");
        }
        (None, None) => {
            let _ = writeln!(out, "circline: DEGENERATE");
        }
    }
    let _ = writeln!(out, "concyclic: {}", outcome.file.metadata.concyclic);
    out
}
