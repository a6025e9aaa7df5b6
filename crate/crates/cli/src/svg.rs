//! Static SVG plot of a planar trajectory with its circline.

use std::fmt::Write;

use qubit_mobius::{Circline, Complex64};

use crate::trajectory::TrajectoryFile;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 40.0;

struct Frame {
    half_width: f64,
}

impl Frame {
    fn new(file: &TrajectoryFile) -> Self {
        let extent = file
            .records
            .iter()
            .filter_map(|r| Some(Complex64::new(r.z_re?, r.z_im?).norm()))
            .fold(0.0, f64::max);
        Self {
            half_width: (1.15 * extent).clamp(1.5, 20.0),
        }
    }

    fn scale(&self) -> f64 {
        (SIZE / 2.0 - MARGIN) / self.half_width
    }

    fn x(&self, re: f64) -> f64 {
        SIZE / 2.0 + re * self.scale()
    }

    fn y(&self, im: f64) -> f64 {
        SIZE / 2.0 - im * self.scale()
    }
}

pub fn render(file: &TrajectoryFile, circline: Option<&Circline>) -> String {
    let frame = Frame::new(file);
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="800" viewBox="0 0 800 800">"#
    );
    let _ = writeln!(svg, r#"<rect width="800" height="800" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r##"<line x1="0" y1="400" x2="800" y2="400" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<line x1="400" y1="0" x2="400" y2="800" stroke="#999" stroke-width="1"/>"##
    );
    let _ = writeln!(
        svg,
        r##"<circle cx="400" cy="400" r="{:.3}" fill="none" stroke="#ccc" stroke-dasharray="4 4"/>"##,
        frame.scale()
    );
    let _ = writeln!(
        svg,
        r##"<text x="{:.3}" y="416" font-family="sans-serif" font-size="12" fill="#666">1</text>"##,
        frame.x(1.0) + 4.0
    );

    if let Some(k) = circline {
        draw_circline(&mut svg, &frame, k);
    }

    let mut at_infinity = Vec::new();
    for row in &file.records {
        match (row.z_re, row.z_im) {
            (Some(re), Some(im)) => {
                let _ = writeln!(
                    svg,
                    r##"<circle cx="{:.3}" cy="{:.3}" r="3" fill="#c03"><title>t={}</title></circle>"##,
                    frame.x(re),
                    frame.y(im),
                    row.t
                );
            }
            _ => at_infinity.push(row.t),
        }
    }
    if !at_infinity.is_empty() {
        let _ = writeln!(
            svg,
            r##"<text x="16" y="28" font-family="sans-serif" font-size="14" fill="#333">{} point(s) at infinity (not drawn)</text>"##,
            at_infinity.len()
        );
    }
    let m = &file.metadata;
    let _ = writeln!(
        svg,
        r##"<text x="16" y="784" font-family="sans-serif" font-size="12" fill="#333">H = ({}, {}, {}, {}), state {}, concyclic={}</text>"##,
        m.h0,
        m.h1,
        m.h2,
        m.h3,
        escape(&m.state),
        m.concyclic
    );
    svg.push_str("</svg>\n");
    svg
}

fn draw_circline(svg: &mut String, frame: &Frame, k: &Circline) {
    if let Some((center, radius)) = k.center_radius() {
        let _ = writeln!(
            svg,
            r##"<circle cx="{:.3}" cy="{:.3}" r="{:.3}" fill="none" stroke="#06c" stroke-width="2"/>"##,
            frame.x(center.re),
            frame.y(center.im),
            radius * frame.scale()
        );
        return;
    }
    let b = k.b();
    if b.norm() == 0.0 {
        return;
    }
    let base = -k.c() * b / (2.0 * b.norm_sqr());
    let direction = Complex64::i() * b / b.norm();
    let reach = 4.0 * frame.half_width + base.norm();
    let (p, q) = (base - direction * reach, base + direction * reach);
    let _ = writeln!(
        svg,
        r##"<line x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#06c" stroke-width="2"/>"##,
        frame.x(p.re),
        frame.y(p.im),
        frame.x(q.re),
        frame.y(q.im)
    );
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
