//! JSON curve catalogs.

use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::curve::{is_prime_power, Curve};
use crate::error::{Error, Result};
use crate::exact::{int, parse_ratio, Rational};

/// A coefficient given either as a JSON integer or as a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coefficient {
    Int(i64),
    Text(String),
}

impl Coefficient {
    fn to_rational(&self) -> Option<Rational> {
        match self {
            Coefficient::Int(v) => Some(int(*v)),
            Coefficient::Text(s) => parse_ratio(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub q: u64,
    pub g: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub point_counts: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_coefficients: Option<Vec<Coefficient>>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogFile {
    pub curves: Vec<CatalogEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntryError {
    pub index: usize,
    pub name: String,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub curves: Vec<Curve>,
    /// Entries that did not yield a curve, in file order.
    pub errors: Vec<EntryError>,
}

impl Catalog {
    pub fn get(&self, name: &str) -> Option<&Curve> {
        self.curves.iter().find(|c| c.name() == name)
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct LoadOptions {
    pub reject_non_prime_power: bool,
}

/// Builds a curve from one entry. When both point counts and coefficients
/// are present the coefficients define the curve and the counts must agree.
pub fn entry_to_curve(e: &CatalogEntry, opts: LoadOptions) -> Result<Curve> {
    if opts.reject_non_prime_power && !is_prime_power(e.q) {
        return Err(Error::InvalidCurve(format!(
            "q = {} is not a prime power",
            e.q
        )));
    }
    match (&e.point_counts, &e.p_coefficients) {
        (None, None) => Err(Error::InvalidCurve(
            "entry has neither point_counts nor p_coefficients".into(),
        )),
        (Some(counts), None) => Curve::from_point_counts(&e.name, e.q, e.g, counts),
        (counts, Some(coeffs)) => {
            let mut parsed = Vec::with_capacity(coeffs.len());
            for (i, c) in coeffs.iter().enumerate() {
                let r = c.to_rational().ok_or_else(|| {
                    Error::InvalidCurve(format!("p_coefficients[{i}] = {c:?} is not a rational"))
                })?;
                parsed.push(r);
            }
            let curve = Curve::from_p_coefficients(&e.name, e.q, e.g, parsed)?;
            if let Some(counts) = counts {
                let derived = curve.point_counts(counts.len());
                if let Some(k) = (0..counts.len()).find(|&k| derived[k] != int(counts[k])) {
                    return Err(Error::InvalidCurve(format!(
                        "point_counts[{k}] = {} but p_coefficients give {}",
                        counts[k], derived[k]
                    )));
                }
            }
            Ok(curve)
        }
    }
}

/// Parses catalog text. Syntax errors abort with a position; problems with
/// individual entries are collected.
pub fn parse_catalog(text: &str, opts: LoadOptions) -> Result<Catalog> {
    let file: CatalogFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut catalog = Catalog::default();
    let mut seen = BTreeSet::new();
    for (index, e) in file.curves.iter().enumerate() {
        let fail = |message: String| EntryError {
            index,
            name: e.name.clone(),
            message,
        };
        if !seen.insert(e.name.clone()) {
            catalog.errors.push(fail("duplicate curve name".into()));
            continue;
        }
        match entry_to_curve(e, opts) {
            Ok(c) => catalog.curves.push(c),
            Err(err) => catalog.errors.push(fail(err.to_string())),
        }
    }
    Ok(catalog)
}

pub fn load_catalog(path: &Path, opts: LoadOptions) -> Result<Catalog> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text, opts)
}

/// The supersingular elliptic curve `E0` over F₂ and the genus-2 curve
/// `y² + y = x⁵` over F₂.
pub const DEMO_CATALOG: &str = r#"{
  "curves": [
    {"name": "E0", "q": 2, "g": 1, "point_counts": [3]},
    {"name": "C5", "q": 2, "g": 2, "point_counts": [3, 5]}
  ]
}
"#;

pub fn demo_catalog() -> Catalog {
    parse_catalog(DEMO_CATALOG, LoadOptions::default()).expect("built-in catalog parses")
}
