//! Gate expressions such as `H Z H`, `rot(0,0,1,3.14159)` or
//! `[[0,1],[1,0]]`, written in operator order: the leftmost term is applied
//! last, so `H Z H` is the product `H·Z·H`.

use std::fmt;
use std::str::FromStr;

use qubit_mobius::gates::{self, AxisAngleDecomposition};
use qubit_mobius::{Complex64, UnitaryGate};

use crate::error::{CliError, Result};
use crate::text::parse_complex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGate {
    I,
    X,
    Y,
    Z,
    H,
}

impl NamedGate {
    fn from_symbol(s: &str) -> Option<Self> {
        match s {
            "I" => Some(NamedGate::I),
            "X" => Some(NamedGate::X),
            "Y" => Some(NamedGate::Y),
            "Z" => Some(NamedGate::Z),
            "H" => Some(NamedGate::H),
            _ => None,
        }
    }

    pub fn gate(self) -> UnitaryGate {
        match self {
            NamedGate::I => UnitaryGate::identity(),
            NamedGate::X => UnitaryGate::x(),
            NamedGate::Y => UnitaryGate::y(),
            NamedGate::Z => UnitaryGate::z(),
            NamedGate::H => UnitaryGate::hadamard(),
        }
    }
}

#[derive(Debug, Clone)]
pub enum GateTerm {
    Named(NamedGate),
    /// `rot(nx, ny, nz, beta)`: rotation by `beta` about the Pauli axis, no phase.
    Rotation(AxisAngleDecomposition),
    Matrix(UnitaryGate),
}

impl GateTerm {
    pub fn gate(&self) -> UnitaryGate {
        match self {
            GateTerm::Named(g) => g.gate(),
            GateTerm::Rotation(d) => gates::unitary_from_axis_angle(d),
            GateTerm::Matrix(u) => *u,
        }
    }
}

impl fmt::Display for GateTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GateTerm::Named(g) => write!(f, "{g:?}"),
            GateTerm::Rotation(d) => write!(
                f,
                "rot({},{},{},{})",
                d.axis[0], d.axis[1], d.axis[2], d.beta
            ),
            GateTerm::Matrix(_) => write!(f, "[[..]]"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GateExpression {
    terms: Vec<GateTerm>,
}

impl GateExpression {
    pub fn parse(text: &str) -> Result<Self> {
        Parser::new(text).expression()
    }

    pub fn terms(&self) -> &[GateTerm] {
        &self.terms
    }

    pub fn gates(&self) -> Vec<UnitaryGate> {
        self.terms.iter().map(GateTerm::gate).collect()
    }

    /// Product of all terms in written order.
    pub fn unitary(&self) -> UnitaryGate {
        gates::compose_sequence(&self.gates()).expect("expressions are nonempty")
    }
}

impl FromStr for GateExpression {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Self {
        Self {
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(CliError::parse(self.column(), message))
    }

    fn expect(&mut self, wanted: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == wanted => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected `{wanted}`, found `{c}`")),
            None => self.error(format!("expected `{wanted}`, found end of input")),
        }
    }

    fn take_while(&mut self, accept: impl Fn(char) -> bool) -> String {
        let start = self.pos;
        while self.peek().is_some_and(&accept) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn expression(mut self) -> Result<GateExpression> {
        let mut terms = Vec::new();
        loop {
            self.skip_ws();
            if self.peek().is_none() {
                break;
            }
            terms.push(self.term()?);
            match self.peek() {
                None => {}
                Some(c) if c.is_whitespace() => {}
                Some(c) => return self.error(format!("unexpected `{c}` after gate term")),
            }
        }
        if terms.is_empty() {
            return self.error("empty gate expression");
        }
        Ok(GateExpression { terms })
    }

    fn term(&mut self) -> Result<GateTerm> {
        let start = self.pos;
        match self.peek() {
            Some('[') => self.matrix(),
            Some(c) if c.is_ascii_alphabetic() => {
                let word = self.take_while(|c| c.is_ascii_alphanumeric());
                if word == "rot" {
                    return self.rotation();
                }
                match NamedGate::from_symbol(&word) {
                    Some(g) => Ok(GateTerm::Named(g)),
                    None => {
                        self.pos = start;
                        self.error(format!("unknown gate `{word}` (expected X, Y, Z, I, H, rot(...) or [[a,b],[c,d]])"))
                    }
                }
            }
            Some(c) => self.error(format!("unexpected `{c}`")),
            None => self.error("expected a gate term"),
        }
    }

    fn number(&mut self) -> Result<f64> {
        self.skip_ws();
        let start = self.pos;
        let text =
            self.take_while(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-'));
        match text.parse::<f64>() {
            Ok(x) if x.is_finite() => Ok(x),
            _ => {
                self.pos = start;
                self.error(format!("expected a number, found `{}`", self.preview()))
            }
        }
    }

    fn scalar(&mut self) -> Result<Complex64> {
        self.skip_ws();
        let start = self.pos;
        let text = self
            .take_while(|c| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-' | 'i'));
        match parse_complex(&text) {
            Some(z) => Ok(z),
            None => {
                self.pos = start;
                self.error(format!(
                    "expected a complex number like 0.5-0.5i, found `{}`",
                    self.preview()
                ))
            }
        }
    }

    fn preview(&self) -> String {
        let rest: String = self.chars[self.pos..].iter().take(12).collect();
        if rest.is_empty() {
            "end of input".to_string()
        } else {
            rest
        }
    }

    fn rotation(&mut self) -> Result<GateTerm> {
        let start = self.pos.saturating_sub(3);
        self.expect('(')?;
        let mut args = [0.0; 4];
        for (k, slot) in args.iter_mut().enumerate() {
            if k > 0 {
                self.expect(',')?;
            }
            *slot = self.number()?;
        }
        self.expect(')')?;
        let [nx, ny, nz, beta] = args;
        AxisAngleDecomposition::new(0.0, [nx, ny, nz], beta)
            .map(GateTerm::Rotation)
            .map_err(|_| CliError::parse(start + 1, "rotation axis must be nonzero"))
    }

    fn matrix(&mut self) -> Result<GateTerm> {
        self.expect('[')?;
        let mut m = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (r, row) in m.iter_mut().enumerate() {
            if r > 0 {
                self.expect(',')?;
            }
            self.expect('[')?;
            row[0] = self.scalar()?;
            self.expect(',')?;
            row[1] = self.scalar()?;
            self.expect(']')?;
        }
        self.expect(']')?;
        Ok(GateTerm::Matrix(UnitaryGate::new(m)?))
    }
}
