//! Trajectory files in CSV or JSON.
//!
//! CSV starts with `# key=<json>` metadata lines followed by a header row and
//! one row per sample. JSON is `{"metadata": {...}, "records": [...]}`. Both
//! encodings store floats in shortest round-trip form, so reading a written
//! file gives back identical values.

use std::fmt;
use std::io::{BufRead, Read, Write};

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use qubit_mobius::{Circline, TrajectoryRecord};

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Concyclicity {
    #[serde(rename = "true")]
    Concyclic,
    #[serde(rename = "false")]
    NotConcyclic,
    #[serde(rename = "DEGENERATE")]
    Degenerate,
}

impl fmt::Display for Concyclicity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Concyclicity::Concyclic => "true",
            Concyclicity::NotConcyclic => "false",
            Concyclicity::Degenerate => "DEGENERATE",
        })
    }
}

/// Coefficients of `A|z|² + B z̄ + B̄ z + C = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CirclineCoefficients {
    pub a: f64,
    pub b_re: f64,
    pub b_im: f64,
    pub c: f64,
}

impl From<&Circline> for CirclineCoefficients {
    fn from(k: &Circline) -> Self {
        Self {
            a: k.a(),
            b_re: k.b().re,
            b_im: k.b().im,
            c: k.c(),
        }
    }
}

impl CirclineCoefficients {
    pub fn circline(&self) -> Result<Circline> {
        Ok(Circline::new(
            self.a,
            qubit_mobius::Complex64::new(self.b_re, self.b_im),
            self.c,
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryMetadata {
    pub h0: f64,
    pub h1: f64,
    pub h2: f64,
    pub h3: f64,
    pub hbar: f64,
    /// The state as given on the command line.
    pub state: String,
    pub a_re: f64,
    pub a_im: f64,
    pub b_re: f64,
    pub b_im: f64,
    pub t_max: f64,
    pub n: usize,
    /// `None` when the orbit is a single point.
    pub circline: Option<CirclineCoefficients>,
    pub concyclic: Concyclicity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryRow {
    pub t: f64,
    pub z_re: Option<f64>,
    pub z_im: Option<f64>,
    pub at_infinity: bool,
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl From<&TrajectoryRecord> for TrajectoryRow {
    fn from(r: &TrajectoryRecord) -> Self {
        let z = if r.at_infinity {
            None
        } else {
            r.z.to_complex()
        };
        let [x1, x2, x3] = r.bloch.to_array();
        Self {
            t: r.t,
            z_re: z.map(|z| z.re),
            z_im: z.map(|z| z.im),
            at_infinity: z.is_none(),
            x1,
            x2,
            x3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrajectoryFile {
    pub metadata: TrajectoryMetadata,
    pub records: Vec<TrajectoryRow>,
}

impl TrajectoryFile {
    /// Checks the row count, time ordering and row consistency.
    pub fn validate(&self) -> Result<()> {
        if self.records.len() != self.metadata.n {
            return Err(CliError::Format(format!(
                "expected {} rows, found {}",
                self.metadata.n,
                self.records.len()
            )));
        }
        if let Some(k) = self.records.windows(2).position(|w| w[1].t <= w[0].t) {
            return Err(CliError::Format(format!(
                "t is not increasing at row {}",
                k + 2
            )));
        }
        for (k, row) in self.records.iter().enumerate() {
            if row.at_infinity != row.z_re.is_none() || row.z_re.is_none() != row.z_im.is_none() {
                return Err(CliError::Format(format!(
                    "row {} mixes finite and infinite z",
                    k + 1
                )));
            }
        }
        Ok(())
    }

    pub fn write<W: Write>(&self, format: OutputFormat, writer: W) -> Result<()> {
        match format {
            OutputFormat::Csv => self.write_csv(writer),
            OutputFormat::Json => self.write_json(writer),
        }
    }

    pub fn read<R: Read>(format: OutputFormat, reader: R) -> Result<Self> {
        let file = match format {
            OutputFormat::Csv => Self::read_csv(reader)?,
            OutputFormat::Json => serde_json::from_reader(reader)?,
        };
        file.validate()?;
        Ok(file)
    }

    pub fn to_string(&self, format: OutputFormat) -> Result<String> {
        let mut buf = Vec::new();
        self.write(format, &mut buf)?;
        String::from_utf8(buf).map_err(|e| CliError::Format(e.to_string()))
    }

    pub fn from_str(format: OutputFormat, text: &str) -> Result<Self> {
        Self::read(format, text.as_bytes())
    }

    fn write_json<W: Write>(&self, mut writer: W) -> Result<()> {
        serde_json::to_writer_pretty(&mut writer, self)?;
        writer.write_all(b"\n")?;
        Ok(())
    }

    fn write_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        let serde_json::Value::Object(fields) = serde_json::to_value(&self.metadata)? else {
            unreachable!("metadata serializes to an object");
        };
        for (key, value) in &fields {
            writeln!(writer, "# {key}={value}")?;
        }
        let mut csv = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(writer);
        for row in &self.records {
            csv.serialize(row)?;
        }
        if self.records.is_empty() {
            csv.write_record(["t", "z_re", "z_im", "at_infinity", "x1", "x2", "x3"])?;
        }
        csv.flush()?;
        Ok(())
    }

    fn read_csv<R: Read>(reader: R) -> Result<Self> {
        let mut lines = std::io::BufReader::new(reader);
        let mut fields = serde_json::Map::new();
        let mut body = String::new();
        let mut line = String::new();
        loop {
            line.clear();
            if lines.read_line(&mut line)? == 0 {
                break;
            }
            let Some(meta) = line.strip_prefix("# ") else {
                body.push_str(&line);
                break;
            };
            let (key, value) = meta.trim_end_matches('\n').split_once('=').ok_or_else(|| {
                CliError::Format(format!("metadata line without `=`: {}", line.trim_end()))
            })?;
            fields.insert(key.to_string(), serde_json::from_str(value)?);
        }
        lines.read_to_string(&mut body)?;
        let metadata: TrajectoryMetadata =
            serde_json::from_value(serde_json::Value::Object(fields))?;
        let records = csv::Reader::from_reader(body.as_bytes())
            .deserialize()
            .collect::<std::result::Result<Vec<TrajectoryRow>, _>>()?;
        Ok(Self { metadata, records })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> TrajectoryFile {
        TrajectoryFile {
            metadata: TrajectoryMetadata {
                h0: -5.0,
                h1: 0.1,
                h2: 1.0 / 3.0,
                h3: 1.0,
                hbar: 1.0,
                state: "phi=1.5707963,theta=0".into(),
                a_re: std::f64::consts::FRAC_1_SQRT_2,
                a_im: 0.0,
                b_re: 0.7071067811865475,
                b_im: -1e-17,
                t_max: std::f64::consts::TAU,
                n: 3,
                circline: Some(CirclineCoefficients {
                    a: 1.0,
                    b_re: 0.0,
                    b_im: 0.0,
                    c: -0.9999999999999998,
                }),
                concyclic: Concyclicity::Concyclic,
            },
            records: vec![
                TrajectoryRow {
                    t: 0.0,
                    z_re: Some(1.0),
                    z_im: Some(0.0),
                    at_infinity: false,
                    x1: 1.0,
                    x2: 0.0,
                    x3: 0.0,
                },
                TrajectoryRow {
                    t: 0.1,
                    z_re: None,
                    z_im: None,
                    at_infinity: true,
                    x1: 0.0,
                    x2: 0.0,
                    x3: 1.0,
                },
                TrajectoryRow {
                    t: 0.3,
                    z_re: Some(-1e-300),
                    z_im: Some(123456789.123),
                    at_infinity: false,
                    x1: 0.1,
                    x2: -0.2,
                    x3: 0.3,
                },
            ],
        }
    }

    #[test]
    fn csv_round_trip() {
        let file = sample();
        let text = file.to_string(OutputFormat::Csv).unwrap();
        assert!(text.starts_with("# a_im=0.0\n"), "{text}");
        assert!(text.contains("t,z_re,z_im,at_infinity,x1,x2,x3\n"));
        assert!(text.contains("\n0.1,,,true,"));
        assert!(text.contains("# concyclic=\"true\"\n"));
        assert_eq!(
            TrajectoryFile::from_str(OutputFormat::Csv, &text).unwrap(),
            file
        );
    }

    #[test]
    fn json_round_trip() {
        let file = sample();
        let text = file.to_string(OutputFormat::Json).unwrap();
        assert!(text.contains("\"concyclic\": \"true\""));
        assert_eq!(
            TrajectoryFile::from_str(OutputFormat::Json, &text).unwrap(),
            file
        );
    }

    #[test]
    fn degenerate_metadata_round_trips() {
        let mut file = sample();
        file.metadata.circline = None;
        file.metadata.concyclic = Concyclicity::Degenerate;
        for format in [OutputFormat::Csv, OutputFormat::Json] {
            let text = file.to_string(format).unwrap();
            assert!(text.contains("DEGENERATE"));
            assert_eq!(TrajectoryFile::from_str(format, &text).unwrap(), file);
        }
    }

    #[test]
    fn validation() {
        let mut file = sample();
        file.records[2].t = 0.1;
        let text = file.to_string(OutputFormat::Json).unwrap();
        assert!(matches!(
            TrajectoryFile::from_str(OutputFormat::Json, &text),
            Err(CliError::Format(_))
        ));

        let mut file = sample();
        file.metadata.n = 4;
        let text = file.to_string(OutputFormat::Csv).unwrap();
        assert!(matches!(
            TrajectoryFile::from_str(OutputFormat::Csv, &text),
            Err(CliError::Format(_))
        ));

        let mut file = sample();
        file.records[0].at_infinity = true;
        let text = file.to_string(OutputFormat::Csv).unwrap();
        assert!(matches!(
            TrajectoryFile::from_str(OutputFormat::Csv, &text),
            Err(CliError::Format(_))
        ));
    }
}
