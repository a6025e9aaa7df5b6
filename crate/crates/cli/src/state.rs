//! State specifications: amplitudes `a,b` (normalized on the fly) or angles
//! `phi=...,theta=...` in radians.

use std::str::FromStr;

use qubit_mobius::QubitState;

use crate::error::{CliError, Result};
use crate::text::parse_complex;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    Amplitudes(qubit_mobius::Complex64, qubit_mobius::Complex64),
    Angles { phi: f64, theta: f64 },
}

impl StateSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let Some(comma) = text.find(',') else {
            return Err(CliError::parse(
                text.chars().count() + 1,
                "expected `a,b` or `phi=...,theta=...`",
            ));
        };
        if text[comma + 1..].contains(',') {
            let extra = comma + 1 + text[comma + 1..].find(',').unwrap();
            return Err(CliError::parse(column(text, extra), "unexpected `,`"));
        }
        let (left, right) = (&text[..comma], &text[comma + 1..]);
        let right_start = comma + 1;
        if left.contains('=') || right.contains('=') {
            let mut phi = None;
            let mut theta = None;
            for (part, start) in [(left, 0), (right, right_start)] {
                let Some(eq) = part.find('=') else {
                    return Err(CliError::parse(
                        column(text, start),
                        "expected `name=value`",
                    ));
                };
                let key = part[..eq].trim();
                let value_start = start + eq + 1;
                let value = part[eq + 1..]
                    .trim()
                    .parse::<f64>()
                    .ok()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| {
                        CliError::parse(column(text, value_start), "expected an angle in radians")
                    })?;
                let slot = match key {
                    "phi" => &mut phi,
                    "theta" => &mut theta,
                    _ => {
                        return Err(CliError::parse(
                            column(text, start),
                            format!("unknown angle `{key}` (expected phi or theta)"),
                        ))
                    }
                };
                if slot.replace(value).is_some() {
                    return Err(CliError::parse(
                        column(text, start),
                        format!("`{key}` given twice"),
                    ));
                }
            }
            match (phi, theta) {
                (Some(phi), Some(theta)) => Ok(StateSpec::Angles { phi, theta }),
                _ => Err(CliError::parse(1, "both phi and theta are required")),
            }
        } else {
            let a = parse_complex(left)
                .ok_or_else(|| CliError::parse(1, format!("bad amplitude `{}`", left.trim())))?;
            let b = parse_complex(right).ok_or_else(|| {
                CliError::parse(
                    column(text, right_start),
                    format!("bad amplitude `{}`", right.trim()),
                )
            })?;
            Ok(StateSpec::Amplitudes(a, b))
        }
    }

    pub fn state(&self) -> Result<QubitState> {
        match *self {
            StateSpec::Amplitudes(a, b) => Ok(QubitState::normalized(a, b)?),
            StateSpec::Angles { phi, theta } => Ok(QubitState::from_angles(phi, theta)),
        }
    }
}

impl FromStr for StateSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

pub fn parse_state(text: &str) -> Result<QubitState> {
    StateSpec::parse(text)?.state()
}

fn column(text: &str, byte: usize) -> usize {
    text[..byte].chars().count() + 1
}
