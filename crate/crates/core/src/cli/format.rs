//! The JSON arrangement file format.
//!
//! ```json
//! {
//!   "ambient_dim": 2,
//!   "cyclotomic_order": 3,
//!   "hyperplanes": [{ "coeffs": [["1", "0"], ["0", "1"]], "constant": ["-1", "0"] }],
//!   "name": "example"
//! }
//! ```
//!
//! Every number is an array of `φ(d)` rational strings, the coordinates in the
//! power basis `1, ζ_d, …, ζ_d^{φ(d)-1}`.

use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arrangement::{Arrangement, Hyperplane};
use crate::cyclofield::{euler_phi, CycNum, Rational};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HyperplaneRecord {
    pub constant: Vec<String>,
    pub coeffs: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub name: String,
    pub ambient_dim: usize,
    pub cyclotomic_order: u64,
    pub hyperplanes: Vec<HyperplaneRecord>,
}

fn parse_error(context: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { context: context.into(), message: message.into() }
}

fn parse_rational(s: &str, context: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((_, den)) = t.split_once('/') {
        if den.trim().trim_start_matches(['+', '-']).chars().all(|c| c == '0') {
            return Err(parse_error(context, format!("zero denominator in {s:?}")));
        }
    }
    Rational::from_str(t).map_err(|_| parse_error(context, format!("malformed rational {s:?}")))
}

fn parse_number(parts: &[String], d: u64, phi: usize, context: &str) -> Result<CycNum> {
    if parts.len() != phi {
        return Err(parse_error(
            context,
            format!("expected {phi} rational coordinates for cyclotomic order {d}, found {}", parts.len()),
        ));
    }
    let coeffs = parts
        .iter()
        .enumerate()
        .map(|(i, p)| parse_rational(p, &format!("{context}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    CycNum::from_coeffs(d, coeffs)
}

fn format_number(c: &CycNum) -> Vec<String> {
    c.coeffs().iter().map(|r| r.to_string()).collect()
}

impl ArrangementFile {
    pub fn from_arrangement(name: &str, arr: &Arrangement) -> Self {
        let hyperplanes = arr
            .hyperplanes()
            .iter()
            .map(|h| HyperplaneRecord {
                constant: format_number(&h.constant),
                coeffs: h.coeffs.iter().map(format_number).collect(),
            })
            .collect();
        ArrangementFile {
            name: name.to_string(),
            ambient_dim: arr.ambient_dim(),
            cyclotomic_order: arr.cyc_order(),
            hyperplanes,
        }
    }

    /// Validate and build the arrangement.
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let d = self.cyclotomic_order;
        if d == 0 {
            return Err(parse_error("cyclotomic_order", "must be positive"));
        }
        let phi = euler_phi(d)? as usize;
        let mut hyperplanes = Vec::with_capacity(self.hyperplanes.len());
        for (i, rec) in self.hyperplanes.iter().enumerate() {
            let constant = parse_number(&rec.constant, d, phi, &format!("hyperplanes[{i}].constant"))?;
            if rec.coeffs.len() != self.ambient_dim {
                return Err(Error::DimensionMismatch { index: i, found: rec.coeffs.len(), expected: self.ambient_dim });
            }
            let coeffs = rec
                .coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| parse_number(c, d, phi, &format!("hyperplanes[{i}].coeffs[{j}]")))
                .collect::<Result<Vec<_>>>()?;
            hyperplanes.push(Hyperplane::new(constant, coeffs));
        }
        Arrangement::build(self.ambient_dim, d, hyperplanes)
    }

    /// Rewrite every rational in lowest terms.
    pub fn canonical(&self) -> Result<Self> {
        Ok(Self::from_arrangement(&self.name, &self.to_arrangement()?))
    }

    /// Pretty JSON with sorted keys and a trailing newline.
    pub fn to_json(&self) -> String {
        let v: Value = serde_json::to_value(self).expect("file records serialize");
        let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
        s.push('\n');
        s
    }
}

/// Parse file bytes into the file record, with line and column on syntax
/// errors.
pub fn parse_file_record(bytes: &[u8]) -> Result<ArrangementFile> {
    let text = std::str::from_utf8(bytes).map_err(|e| parse_error("input", format!("not UTF-8: {e}")))?;
    serde_json::from_str(text)
        .map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

/// Parse and validate an arrangement file.
pub fn parse_file(bytes: &[u8]) -> Result<Arrangement> {
    parse_file_record(bytes)?.to_arrangement()
}

#[cfg(test)]
mod tests {
    use super::*;

    const SELBERG: &str = r#"{
      "name": "selberg", "ambient_dim": 2, "cyclotomic_order": 1,
      "hyperplanes": [
        {"constant": ["0"], "coeffs": [["1"], ["0"]]},
        {"constant": ["0"], "coeffs": [["0"], ["1"]]},
        {"constant": ["0"], "coeffs": [["1"], ["-1"]]},
        {"constant": ["-1"], "coeffs": [["1"], ["0"]]},
        {"constant": ["-2/2"], "coeffs": [["0"], ["1"]]}
      ]
    }"#;

    #[test]
    fn parses_selberg() {
        let a = parse_file(SELBERG.as_bytes()).unwrap();
        assert_eq!((a.len(), a.ambient_dim()), (5, 2));
    }

    #[test]
    fn canonical_round_trip() {
        let rec = parse_file_record(SELBERG.as_bytes()).unwrap().canonical().unwrap();
        assert_eq!(rec.hyperplanes[4].constant, vec!["-1".to_string()]);
        let text = rec.to_json();
        let again = parse_file_record(text.as_bytes()).unwrap();
        assert_eq!(again.to_json(), text);
    }

    #[test]
    fn arity_and_syntax_errors() {
        let bad = SELBERG.replacen(r#"["1"], ["0"]]},"#, r#"["1", "0"], ["0"]]},"#, 1);
        let err = parse_file(bad.as_bytes()).unwrap_err();
        assert!(matches!(&err, Error::Parse { context, .. } if context == "hyperplanes[0].coeffs[0]"), "{err}");
        let err = parse_file(b"{\"name\": }").unwrap_err();
        assert!(matches!(&err, Error::Parse { context, .. } if context.starts_with("line 1")), "{err}");
        let bad = SELBERG.replace("-2/2", "1/0");
        assert!(parse_file(bad.as_bytes()).is_err());
        let bad = SELBERG.replace("-2/2", "one");
        assert!(parse_file(bad.as_bytes()).is_err());
    }

    #[test]
    fn duplicate_rejected() {
        let dup = SELBERG.replace(r#"["-2/2"], "coeffs": [["0"], ["1"]]"#, r#"["-2"], "coeffs": [["2"], ["0"]]"#);
        assert_eq!(parse_file(dup.as_bytes()).unwrap_err(), Error::DuplicateHyperplane(3, 4));
    }
}
