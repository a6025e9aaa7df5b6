//! Plain-text complex numbers: `re+imi` (`0.5-0.25i`, `-i`, `3`, `2e-3i`),
//! and `inf` for the point at infinity.

use num_complex::Complex64;
use qubit_mobius::ExtendedComplex;

fn parse_real(s: &str) -> Option<f64> {
    let lower = s.to_ascii_lowercase();
    if lower.contains("inf") || lower.contains("nan") {
        return None;
    }
    s.parse::<f64>().ok().filter(|x| x.is_finite())
}

/// Parses `re`, `imi`, or `re±imi`. A bare `i` means one.
pub fn parse_complex(text: &str) -> Option<Complex64> {
    let s = text.trim();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix('i') else {
        return parse_real(s).map(Complex64::from);
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imaginary = |part: &str| match part {
        "" | "+" => Some(1.0),
        "-" => Some(-1.0),
        other => parse_real(other),
    };
    match split {
        Some(k) => Some(Complex64::new(
            parse_real(&body[..k])?,
            imaginary(&body[k..])?,
        )),
        None => Some(Complex64::new(0.0, imaginary(body)?)),
    }
}

/// Shortest round-trip decimal; `-0` is printed as `0`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else {
        format!("{x}")
    }
}

/// `x` rounded to `digits` significant digits, without trailing zeros.
pub fn format_real_sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format_real(x);
    }
    let magnitude = x.abs().log10().floor() as i32;
    if !(-6..=15).contains(&magnitude) {
        return format!("{:.*e}", digits.saturating_sub(1), x);
    }
    let decimals = (digits as i32 - 1 - magnitude).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if s == "-0" {
        s = "0".to_string();
    }
    s
}

fn join_complex(re: String, im: String, im_negative: bool, im_zero: bool, re_zero: bool) -> String {
    match (re_zero, im_zero) {
        (_, true) => re,
        (true, false) => format!("{im}i"),
        (false, false) if im_negative => format!("{re}{im}i"),
        (false, false) => format!("{re}+{im}i"),
    }
}

pub fn format_complex(z: Complex64) -> String {
    join_complex(
        format_real(z.re),
        format_real(z.im),
        z.im < 0.0,
        z.im == 0.0,
        z.re == 0.0,
    )
}

/// Like [`format_complex`] with `digits` significant digits per part.
pub fn format_complex_sig(z: Complex64, digits: usize) -> String {
    let re = format_real_sig(z.re, digits);
    let im = format_real_sig(z.im, digits);
    let im_zero = im == "0";
    let re_zero = re == "0";
    let im_negative = im.starts_with('-');
    join_complex(re, im, im_negative, im_zero, re_zero)
}

pub fn format_point(p: &ExtendedComplex, digits: usize) -> String {
    match p.to_complex() {
        None => "inf".to_string(),
        Some(z) => format_complex_sig(z, digits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn parses_scalar_forms() {
        assert_eq!(parse_complex("0.5+0.5i"), Some(c(0.5, 0.5)));
        assert_eq!(parse_complex("0.5-0.5i"), Some(c(0.5, -0.5)));
        assert_eq!(parse_complex("-3"), Some(c(-3.0, 0.0)));
        assert_eq!(parse_complex("i"), Some(c(0.0, 1.0)));
        assert_eq!(parse_complex("-i"), Some(c(0.0, -1.0)));
        assert_eq!(parse_complex("2e-3i"), Some(c(0.0, 2e-3)));
        assert_eq!(parse_complex("1e+2-1E-1i"), Some(c(100.0, -0.1)));
        assert_eq!(parse_complex(" 1+i "), Some(c(1.0, 1.0)));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "x", "1+", "1+2", "ii", "inf", "nan", "1++2i", "1e999"] {
            assert_eq!(parse_complex(bad), None, "{bad}");
        }
    }

    #[test]
    fn formats_round_trip() {
        for z in [
            c(0.5, -0.25),
            c(0.0, 1.0),
            c(-3.0, 0.0),
            c(1e-300, 7e20),
            c(0.1, 0.2),
        ] {
            assert_eq!(parse_complex(&format_complex(z)), Some(z));
        }
        assert_eq!(format_complex(c(-0.0, 0.0)), "0");
    }

    #[test]
    fn significant_digits() {
        assert_eq!(
            format_real_sig(std::f64::consts::FRAC_1_SQRT_2, 12),
            "0.707106781187"
        );
        assert_eq!(format_real_sig(-1.0000000000001, 12), "-1");
        assert_eq!(format_real_sig(123456.0, 12), "123456");
        assert_eq!(format_real_sig(-1e-20, 12), "-1.00000000000e-20");
        assert_eq!(format_complex_sig(c(0.0, -1.0), 12), "-1i");
        assert_eq!(format_complex_sig(c(0.5, 0.25), 12), "0.5+0.25i");
    }
}
