//! The versioned problem-file format and its translation into library types.
//!
//! A problem file is a single JSON document:
//!
//! ```json
//! {
//!   "schema": 1,
//!   "n": 3,
//!   "k": 1,
//!   "supports": [[[0], [1], [2]]],
//!   "coefficients": [["1", "2", "1"]],
//!   "parameters": [["1/3", "0"], ["1/2", "0"]],
//!   "convention": "section3"
//! }
//! ```
//!
//! `n` is the total dimension, `k` the number of polynomials; each support is
//! a matrix whose rows are exponent vectors of length `n - k`. Coefficients
//! are optional per-polynomial lists (exact scalars as strings, or the string
//! `"generic"`); the parameter vector lists `n` scalars as `[re, im]` pairs
//! of rational strings — the first `n - k` are torus entries, the last `k`
//! polynomial entries.

use serde::{Deserialize, Serialize};

use vancert_core::arith::{rat_from_str, GaussRat, IntVec, Rat};
use vancert_core::laurent::{LaurentPoly, PolyData};
use vancert_core::nondegeneracy::LaurentSystem;
use vancert_core::nonresonance::{Convention, ParameterVector};

/// An error carrying the exit code it maps to: 1 for a failed mathematical
/// hypothesis, 2 for bad input, 3 for a question this tier cannot decide.
#[derive(Debug, Clone)]
pub struct CliError {
    pub message: String,
    pub exit: i32,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError { message: message.into(), exit: 2 }
    }

    pub fn hypothesis(message: impl Into<String>) -> Self {
        CliError { message: message.into(), exit: 1 }
    }

    pub fn undecided(message: impl Into<String>) -> Self {
        CliError { message: message.into(), exit: 3 }
    }
}

/// Per-polynomial coefficient specification: a list of exact scalars, one
/// per support row, or the literal string `"generic"`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum CoeffSpec {
    List(Vec<String>),
    Generic(String),
}

/// A declared singular point with its Milnor number, for cross-checking.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct MilnorEntry {
    /// Coordinates as `[re, im]` rational-string pairs, length `n - k`.
    pub point: Vec<[String; 2]>,
    pub mu: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub schema: u32,
    pub n: usize,
    pub k: usize,
    pub supports: Vec<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coefficients: Option<Vec<CoeffSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor: Option<Vec<MilnorEntry>>,
}

/// Parse `"a"`, `"a+bi"`, or `"a-bi"` (also bare `"bi"`) into an exact
/// scalar; the components are rationals in `p/q` form.
pub fn gauss_from_str(s: &str) -> Result<GaussRat, String> {
    let t = s.trim();
    let bad = |_| format!("not a rational scalar: '{t}'");
    if let Some(body) = t.strip_suffix('i') {
        // Split at the last sign that separates the two components.
        if let Some(at) = body.rfind(['+', '-']).filter(|&at| at > 0) {
            let re = rat_from_str(&body[..at]).map_err(bad)?;
            let im_mag = rat_from_str(&body[at + 1..]).map_err(bad)?;
            let im = if body.as_bytes()[at] == b'-' { -im_mag } else { im_mag };
            return Ok(GaussRat::new(re, im));
        }
        let im = if body.is_empty() || body == "-" {
            rat_from_str(&format!("{body}1")).map_err(bad)?
        } else {
            rat_from_str(body).map_err(bad)?
        };
        return Ok(GaussRat::new(Rat::default(), im));
    }
    Ok(GaussRat::from_rat(rat_from_str(t).map_err(bad)?))
}

fn parse_pair(pair: &[String; 2], path: &str) -> Result<GaussRat, CliError> {
    let re = rat_from_str(&pair[0])
        .map_err(|_| CliError::input(format!("{path}[0]: not a rational: '{}'", pair[0])))?;
    let im = rat_from_str(&pair[1])
        .map_err(|_| CliError::input(format!("{path}[1]: not a rational: '{}'", pair[1])))?;
    Ok(GaussRat::new(re, im))
}

impl ProblemFile {
    pub fn load(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let file: ProblemFile = serde_json::from_str(&text)
            .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
        file.validate()?;
        Ok(file)
    }

    pub fn torus_dim(&self) -> usize {
        self.n - self.k
    }

    fn validate(&self) -> Result<(), CliError> {
        if self.schema != 1 {
            return Err(CliError::input(format!(
                "schema: expected 1, got {}",
                self.schema
            )));
        }
        if self.k == 0 {
            return Err(CliError::input("k: need at least one polynomial"));
        }
        if self.n <= self.k {
            return Err(CliError::input(format!(
                "n: total dimension {} must exceed the polynomial count k = {}",
                self.n, self.k
            )));
        }
        if self.supports.len() != self.k {
            return Err(CliError::input(format!(
                "supports: expected k = {} matrices, got {}",
                self.k,
                self.supports.len()
            )));
        }
        let n0 = self.torus_dim();
        for (i, rows) in self.supports.iter().enumerate() {
            if rows.is_empty() {
                return Err(CliError::input(format!("supports[{i}]: empty support")));
            }
            for (j, row) in rows.iter().enumerate() {
                if row.len() != n0 {
                    return Err(CliError::input(format!(
                        "supports[{i}][{j}]: exponent vector has length {}, expected n - k = {n0}",
                        row.len()
                    )));
                }
            }
        }
        if let Some(lists) = &self.coefficients {
            if lists.len() != self.k {
                return Err(CliError::input(format!(
                    "coefficients: expected k = {} entries, got {}",
                    self.k,
                    lists.len()
                )));
            }
            for (i, spec) in lists.iter().enumerate() {
                match spec {
                    CoeffSpec::Generic(tag) if tag == "generic" => {}
                    CoeffSpec::Generic(tag) => {
                        return Err(CliError::input(format!(
                            "coefficients[{i}]: expected a list of scalars or \"generic\", got \"{tag}\""
                        )));
                    }
                    CoeffSpec::List(list) => {
                        if list.len() != self.supports[i].len() {
                            return Err(CliError::input(format!(
                                "coefficients[{i}]: {} scalars for {} support rows",
                                list.len(),
                                self.supports[i].len()
                            )));
                        }
                        for (j, s) in list.iter().enumerate() {
                            gauss_from_str(s).map_err(|e| {
                                CliError::input(format!("coefficients[{i}][{j}]: {e}"))
                            })?;
                        }
                    }
                }
            }
        }
        if let Some(params) = &self.parameters {
            if params.len() != self.n {
                return Err(CliError::input(format!(
                    "parameters: expected n = {} entries, got {}",
                    self.n,
                    params.len()
                )));
            }
            for (i, pair) in params.iter().enumerate() {
                parse_pair(pair, &format!("parameters[{i}]"))?;
            }
        }
        match self.convention.as_deref() {
            None | Some("section3") | Some("section5") => {}
            Some(other) => {
                return Err(CliError::input(format!(
                    "convention: expected \"section3\" or \"section5\", got \"{other}\""
                )));
            }
        }
        if let Some(entries) = &self.milnor {
            for (i, entry) in entries.iter().enumerate() {
                if entry.point.len() != n0 {
                    return Err(CliError::input(format!(
                        "milnor[{i}].point: length {}, expected n - k = {n0}",
                        entry.point.len()
                    )));
                }
                for (j, pair) in entry.point.iter().enumerate() {
                    parse_pair(pair, &format!("milnor[{i}].point[{j}]"))?;
                }
            }
        }
        Ok(())
    }

    /// The support matrices as lattice-point lists.
    pub fn support_vectors(&self) -> Vec<Vec<IntVec>> {
        self.supports
            .iter()
            .map(|rows| rows.iter().map(|r| IntVec::from_i64(r)).collect())
            .collect()
    }

    /// One `PolyData` per polynomial; exact when coefficients are supplied.
    pub fn polys(&self) -> Result<Vec<PolyData>, CliError> {
        let n0 = self.torus_dim();
        let supports = self.support_vectors();
        let mut out = Vec::with_capacity(self.k);
        for (i, support) in supports.into_iter().enumerate() {
            let spec = self.coefficients.as_ref().map(|lists| &lists[i]);
            match spec {
                Some(CoeffSpec::List(list)) => {
                    let terms = support.into_iter().zip(list.iter().map(|s| {
                        gauss_from_str(s).expect("validated at load time")
                    }));
                    let poly = LaurentPoly::from_terms(n0, terms);
                    if poly.is_zero() {
                        return Err(CliError::input(format!(
                            "coefficients[{i}]: the polynomial cancels to zero"
                        )));
                    }
                    out.push(PolyData::Exact(poly));
                }
                _ => out.push(PolyData::Generic { n: n0, support }),
            }
        }
        Ok(out)
    }

    pub fn system(&self) -> Result<LaurentSystem, CliError> {
        LaurentSystem::new(self.polys()?).map_err(|e| CliError::input(e.to_string()))
    }

    /// The declared convention, `section3` when absent.
    pub fn convention(&self) -> Convention {
        match self.convention.as_deref() {
            Some("section5") => Convention::Section5,
            _ => Convention::Section3,
        }
    }

    /// The parameter vector, split into torus and polynomial entries.
    pub fn parameter_vector(&self) -> Result<ParameterVector, CliError> {
        let Some(params) = &self.parameters else {
            return Err(CliError::input(
                "parameters: required by this subcommand but absent",
            ));
        };
        let scalars: Vec<GaussRat> = params
            .iter()
            .enumerate()
            .map(|(i, pair)| parse_pair(pair, &format!("parameters[{i}]")))
            .collect::<Result<_, _>>()?;
        let n0 = self.torus_dim();
        let torus = scalars[..n0].to_vec();
        let poly = scalars[n0..].to_vec();
        Ok(ParameterVector::new(torus, poly, self.convention()))
    }

    /// The first polynomial with exact coefficients, for subcommands that
    /// need actual numbers.
    pub fn first_exact(&self) -> Result<LaurentPoly, CliError> {
        match self.polys()?.into_iter().next().expect("k >= 1") {
            PolyData::Exact(p) => Ok(p),
            PolyData::Generic { .. } => Err(CliError::input(
                "coefficients: this subcommand needs exact coefficients for the first polynomial",
            )),
        }
    }

    /// Declared Milnor numbers, in file order.
    pub fn supplied_mu(&self) -> Option<Vec<usize>> {
        self.milnor
            .as_ref()
            .map(|entries| entries.iter().map(|e| e.mu).collect())
    }

    /// Declared singular points as exact coordinates.
    pub fn milnor_points(&self) -> Vec<(Vec<GaussRat>, usize)> {
        let Some(entries) = &self.milnor else { return Vec::new() };
        entries
            .iter()
            .map(|e| {
                let point = e
                    .point
                    .iter()
                    .enumerate()
                    .map(|(j, pair)| {
                        parse_pair(pair, &format!("milnor.point[{j}]"))
                            .expect("validated at load time")
                    })
                    .collect();
                (point, e.mu)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_strings_round_trip() {
        for s in ["0", "3", "-1/2", "1/2+1/3i", "1/2-3i", "2i", "-i"] {
            let z = gauss_from_str(s).unwrap();
            let back = gauss_from_str(&z.to_string()).unwrap();
            assert_eq!(z, back, "round trip through display for '{s}'");
        }
        assert!(gauss_from_str("one half").is_err());
        assert_eq!(gauss_from_str("1/2").unwrap().to_string(), "1/2");
        assert_eq!(gauss_from_str("-i").unwrap().to_string(), "0-1i");
    }

    #[test]
    fn validation_reports_field_paths() {
        let text = r#"{"schema":1,"n":3,"k":1,"supports":[[[0,0],[1]]]}"#;
        let file: ProblemFile = serde_json::from_str(text).unwrap();
        let err = file.validate().unwrap_err();
        assert_eq!(err.exit, 2);
        assert!(err.message.contains("supports[0]"), "{}", err.message);
    }

    #[test]
    fn parameters_split_torus_then_poly() {
        let text = r#"{
            "schema": 1, "n": 2, "k": 1,
            "supports": [[[0], [1], [2]]],
            "parameters": [["1/3", "0"], ["1/2", "0"]]
        }"#;
        let file: ProblemFile = serde_json::from_str(text).unwrap();
        file.validate().unwrap();
        let c = file.parameter_vector().unwrap();
        assert_eq!(c.torus_dim(), 1);
        assert_eq!(c.poly_count(), 1);
    }
}
