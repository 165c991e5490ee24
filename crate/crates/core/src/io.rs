//! JSON wire formats shared by the library and the command-line tool.
//!
//! Scalars travel as `{"p": 5, "prec": 24, "val": 2, "digits": [1, 3]}`
//! with little-endian base-p digits (index-0 digit nonzero, trailing
//! zeros trimmed) and `prec` the exponent of the known modulus; a zero at
//! precision has `"val": null` and empty digits. Everywhere a scalar is
//! expected on input, the rational shorthand `"a/b"` (or just `"a"`) is
//! accepted and ingested through the exact expansion.
//!
//! Norms are emitted as the JSON number 0 when zero and otherwise as the
//! exact rational string, e.g. `"1/125"`.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::mahler::GridFunction;
use crate::models::{ContractionMatrix, EVector, EVectorSequence, FactorialSeries};
use crate::padic::{PNorm, PadicScalar, PrimeConfig};
use crate::sequence::C0Vector;
use crate::tate::{MonicPoly, TateSeries};

/// Textual scalar format used by the CLI and in JSON files.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScalarJson {
    pub p: u64,
    pub prec: i64,
    pub val: Option<i64>,
    pub digits: Vec<u64>,
}

impl ScalarJson {
    pub fn from_scalar(x: &PadicScalar) -> Self {
        Self {
            p: x.cfg().p(),
            prec: x.known_exp(),
            val: x.valuation(),
            digits: x.digits(),
        }
    }

    pub fn to_scalar(&self, cfg: PrimeConfig, field: &str) -> Result<PadicScalar> {
        if self.p != cfg.p() {
            return Err(Error::parse(
                field,
                format!("scalar prime {} does not match p = {}", self.p, cfg.p()),
            ));
        }
        PadicScalar::from_parts(cfg, self.prec, self.val, &self.digits)
    }
}

/// One entry of a vector/series/grid: a rational string on input, a full
/// scalar object on output (both accepted when parsing).
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Rational(String),
    Scalar(ScalarJson),
}

impl EntryJson {
    pub fn to_scalar(&self, cfg: PrimeConfig, field: &str) -> Result<PadicScalar> {
        match self {
            EntryJson::Rational(s) => {
                let (a, b) = parse_rational(s, field)?;
                PadicScalar::from_rational(cfg, &a, &b)
            }
            EntryJson::Scalar(obj) => obj.to_scalar(cfg, field),
        }
    }
}

/// Parses `"a/b"` or `"a"` into an exact integer pair.
pub fn parse_rational(s: &str, field: &str) -> Result<(BigInt, BigInt)> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let a = BigInt::from_str(num)
        .map_err(|e| Error::parse(field, format!("bad numerator {num:?}: {e}")))?;
    let b = BigInt::from_str(den)
        .map_err(|e| Error::parse(field, format!("bad denominator {den:?}: {e}")))?;
    Ok((a, b))
}

fn config_from(p: u64, prec: u32) -> Result<PrimeConfig> {
    PrimeConfig::new(p, prec)
}

fn entries_to_scalars(
    entries: &[EntryJson],
    cfg: PrimeConfig,
    field: &str,
) -> Result<Vec<PadicScalar>> {
    entries
        .iter()
        .enumerate()
        .map(|(i, e)| e.to_scalar(cfg, &format!("{field}[{i}]")))
        .collect()
}

fn scalars_to_entries(scalars: &[PadicScalar]) -> Vec<EntryJson> {
    scalars
        .iter()
        .map(|s| EntryJson::Scalar(ScalarJson::from_scalar(s)))
        .collect()
}

/// `{"p": .., "prec": .., "entries": [..]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VectorJson {
    pub p: u64,
    pub prec: u32,
    pub entries: Vec<EntryJson>,
}

impl VectorJson {
    pub fn from_c0(v: &C0Vector) -> Self {
        Self {
            p: v.cfg().p(),
            prec: v.cfg().precision(),
            entries: scalars_to_entries(v.entries()),
        }
    }

    pub fn to_c0(&self) -> Result<(PrimeConfig, C0Vector)> {
        let cfg = config_from(self.p, self.prec)?;
        let v = C0Vector::new(cfg, entries_to_scalars(&self.entries, cfg, "entries")?)?;
        Ok((cfg, v))
    }
}

/// `{"p": .., "prec": .., "M": .., "values": [..]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridJson {
    pub p: u64,
    pub prec: u32,
    #[serde(rename = "M")]
    pub m: usize,
    pub values: Vec<EntryJson>,
}

impl GridJson {
    pub fn from_grid(g: &GridFunction) -> Self {
        Self {
            p: g.cfg().p(),
            prec: g.cfg().precision(),
            m: g.grid_size(),
            values: scalars_to_entries(g.values()),
        }
    }

    pub fn to_grid(&self) -> Result<(PrimeConfig, GridFunction)> {
        let cfg = config_from(self.p, self.prec)?;
        if self.values.len() != self.m + 1 {
            return Err(Error::parse(
                "M",
                format!(
                    "grid size {} does not match {} stored values (need M + 1)",
                    self.m,
                    self.values.len()
                ),
            ));
        }
        let g = GridFunction::new(cfg, entries_to_scalars(&self.values, cfg, "values")?)?;
        Ok((cfg, g))
    }
}

/// `{"p": .., "prec": .., "coeffs": [..]}`, with the tail bound of a
/// truncated result attached on output.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SeriesJson {
    pub p: u64,
    pub prec: u32,
    pub coeffs: Vec<EntryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tail_bound: Option<Value>,
}

impl SeriesJson {
    pub fn from_series(f: &TateSeries) -> Self {
        Self {
            p: f.cfg().p(),
            prec: f.cfg().precision(),
            coeffs: scalars_to_entries(f.coeffs().entries()),
            tail_bound: Some(norm_to_json(f.tail_bound(), f.cfg().p())),
        }
    }

    pub fn to_series(&self) -> Result<(PrimeConfig, TateSeries)> {
        let cfg = config_from(self.p, self.prec)?;
        let coeffs = C0Vector::new(cfg, entries_to_scalars(&self.coeffs, cfg, "coeffs")?)?;
        Ok((cfg, TateSeries::new(coeffs)))
    }
}

/// `{"p": .., "prec": .., "factorial_coeffs": [..]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FactorialSeriesJson {
    pub p: u64,
    pub prec: u32,
    pub factorial_coeffs: Vec<EntryJson>,
}

impl FactorialSeriesJson {
    pub fn from_series(g: &FactorialSeries) -> Self {
        Self {
            p: g.cfg().p(),
            prec: g.cfg().precision(),
            factorial_coeffs: scalars_to_entries(g.coeffs().entries()),
        }
    }

    pub fn to_series(&self) -> Result<(PrimeConfig, FactorialSeries)> {
        let cfg = config_from(self.p, self.prec)?;
        let coeffs = C0Vector::new(
            cfg,
            entries_to_scalars(&self.factorial_coeffs, cfg, "factorial_coeffs")?,
        )?;
        Ok((cfg, FactorialSeries::new(coeffs)))
    }
}

/// `{"monic_degree": d, "coeffs": ["a/b", ..]}` -- the d coefficients
/// below the implicit leading 1. The prime configuration comes from the
/// surrounding context (flags or a companion file).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub monic_degree: usize,
    pub coeffs: Vec<EntryJson>,
}

impl PolyJson {
    pub fn from_poly(poly: &MonicPoly) -> Self {
        Self {
            monic_degree: poly.degree(),
            coeffs: scalars_to_entries(poly.lower()),
        }
    }

    pub fn to_poly(&self, cfg: PrimeConfig) -> Result<MonicPoly> {
        if self.coeffs.len() != self.monic_degree {
            return Err(Error::parse(
                "monic_degree",
                format!(
                    "degree {} does not match {} stored coefficients",
                    self.monic_degree,
                    self.coeffs.len()
                ),
            ));
        }
        MonicPoly::new(cfg, entries_to_scalars(&self.coeffs, cfg, "coeffs")?)
    }
}

/// `{"d": .., "rows": [["a/b", ..], ..]}` -- a contraction matrix; the
/// prime configuration comes from the surrounding context.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub d: usize,
    pub rows: Vec<Vec<EntryJson>>,
}

impl MatrixJson {
    pub fn from_matrix(a: &ContractionMatrix) -> Self {
        Self {
            d: a.dim(),
            rows: a.rows().iter().map(|r| scalars_to_entries(r)).collect(),
        }
    }

    pub fn to_matrix(&self, cfg: PrimeConfig) -> Result<ContractionMatrix> {
        if self.rows.len() != self.d {
            return Err(Error::parse(
                "d",
                format!("declared d = {} but {} rows stored", self.d, self.rows.len()),
            ));
        }
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, r)| entries_to_scalars(r, cfg, &format!("rows[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        ContractionMatrix::new(cfg, rows)
    }
}

/// A block sequence `{"p": .., "prec": .., "d": .., "blocks": [[..], ..]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockSequenceJson {
    pub p: u64,
    pub prec: u32,
    pub d: usize,
    pub blocks: Vec<Vec<EntryJson>>,
}

impl BlockSequenceJson {
    pub fn from_sequence(s: &EVectorSequence) -> Self {
        Self {
            p: s.cfg().p(),
            prec: s.cfg().precision(),
            d: s.dim(),
            blocks: s
                .blocks()
                .iter()
                .map(|b| scalars_to_entries(b.coords()))
                .collect(),
        }
    }

    pub fn to_sequence(&self) -> Result<(PrimeConfig, EVectorSequence)> {
        let cfg = config_from(self.p, self.prec)?;
        let blocks = self
            .blocks
            .iter()
            .enumerate()
            .map(|(i, b)| {
                EVector::new(cfg, entries_to_scalars(b, cfg, &format!("blocks[{i}]"))?)
            })
            .collect::<Result<Vec<_>>>()?;
        let seq = EVectorSequence::new(cfg, self.d, blocks)?;
        Ok((cfg, seq))
    }
}

/// Norm serialization: the number 0 for the zero norm, otherwise the
/// exact rational string.
pub fn norm_to_json(norm: PNorm, p: u64) -> Value {
    if norm.is_zero() {
        Value::from(0)
    } else {
        Value::from(norm.rational_string(p))
    }
}
