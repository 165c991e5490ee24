//! The factorial-weighted differentiation model and the universality of
//! the backward shift over finite-dimensional coefficient spaces.
//!
//! A [`FactorialSeries`] g(z) = sum b_n z^n / n! is represented purely by
//! its coefficient list; no factorial division is ever materialized, so
//! the model is lossless. Differentiation acts as the backward shift on
//! the coefficients.
//!
//! For the universality construction, E is fixed to Q_p^d with the
//! sup-norm and the contraction hypothesis is strengthened to "every
//! matrix entry has valuation >= 1": that certifies ||A^n u|| -> 0 with a
//! one-line argument, which is stricter than the pointwise hypothesis of
//! the general statement but exactly checkable.

use crate::error::{Error, Result};
use crate::padic::{factorial_valuation, PNorm, PadicScalar, PrimeConfig};
use crate::sequence::C0Vector;

/// Truncated element of the space of factorial-weighted power series:
/// g(z) = sum b_n z^n / n!, stored as the coefficient vector (b_n).
#[derive(Clone, Debug, PartialEq)]
pub struct FactorialSeries {
    coeffs: C0Vector,
}

impl FactorialSeries {
    pub fn new(coeffs: C0Vector) -> Self {
        Self { coeffs }
    }

    pub fn from_integers(cfg: PrimeConfig, coeffs: &[i64]) -> Self {
        Self::new(C0Vector::from_integers(cfg, coeffs))
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.coeffs.cfg()
    }

    pub fn coeffs(&self) -> &C0Vector {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// ||g||_3 = sup_n |b_n|_p.
    pub fn norm(&self) -> PNorm {
        self.coeffs.sup_norm()
    }

    /// Differentiation: d/dz maps b_n z^n/n! to b_n z^{n-1}/(n-1)!, so
    /// the coefficient vector is shifted backward. Norm non-increasing.
    pub fn t3_apply(&self) -> Self {
        Self::new(self.coeffs.shift_t())
    }
}

/// Asserts, for every n <= n_max, the exact exponent comparison
/// n/(p-1) >= nu(n), i.e. |z^n / n!|_p <= 1 on the ball |z|_p <=
/// p^{-1/(p-1)}. Done in integers as n >= (p-1) nu(n).
pub fn radius_check(n_max: u64, p: u64) -> Result<bool> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    Ok((0..=n_max).all(|n| n >= (p - 1) * factorial_valuation(n, p)))
}

/// A d-dimensional vector over Q_p with the sup-norm.
#[derive(Clone, Debug, PartialEq)]
pub struct EVector {
    cfg: PrimeConfig,
    coords: Vec<PadicScalar>,
}

impl EVector {
    pub fn new(cfg: PrimeConfig, coords: Vec<PadicScalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty("vector"));
        }
        for c in &coords {
            cfg.check_same(&c.cfg())?;
        }
        Ok(Self { cfg, coords })
    }

    pub fn zero(cfg: PrimeConfig, dim: usize) -> Self {
        Self {
            cfg,
            coords: vec![PadicScalar::zero(cfg); dim],
        }
    }

    pub fn from_integers(cfg: PrimeConfig, coords: &[i64]) -> Result<Self> {
        Self::new(
            cfg,
            coords
                .iter()
                .map(|&c| PadicScalar::from_integer(cfg, c))
                .collect(),
        )
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[PadicScalar] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &PadicScalar {
        &self.coords[i]
    }

    pub fn sup_norm(&self) -> PNorm {
        self.coords
            .iter()
            .map(PadicScalar::abs)
            .max()
            .unwrap_or(PNorm::ZERO)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.cfg.check_same(&rhs.cfg)?;
        if self.dim() != rhs.dim() {
            return Err(Error::DimensionMismatch {
                what: "vector subtraction",
                expected: self.dim(),
                got: rhs.dim(),
            });
        }
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.sub(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cfg: self.cfg,
            coords,
        })
    }
}

/// A d x d matrix over Q_p whose entries all have |a_ij|_p <= 1/p. That
/// bound makes the matrix a strict contraction: ||A u|| <= ||u|| / p, so
/// ||A^n u|| -> 0 for every u.
#[derive(Clone, Debug)]
pub struct ContractionMatrix {
    cfg: PrimeConfig,
    dim: usize,
    rows: Vec<Vec<PadicScalar>>,
}

impl ContractionMatrix {
    pub fn new(cfg: PrimeConfig, rows: Vec<Vec<PadicScalar>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::Empty("matrix"));
        }
        for row in &rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    what: "matrix row",
                    expected: dim,
                    got: row.len(),
                });
            }
            for entry in row {
                cfg.check_same(&entry.cfg())?;
                let ok = match entry.valuation() {
                    Some(v) => v >= 1,
                    None => entry.known_exp() >= 1,
                };
                if !ok {
                    return Err(Error::Precondition(format!(
                        "matrix entry {entry} has valuation < 1; \
                         the contraction certificate needs every entry in p Z_p"
                    )));
                }
            }
        }
        Ok(Self { cfg, dim, rows })
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, i: usize, j: usize) -> &PadicScalar {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<PadicScalar>] {
        &self.rows
    }

    pub fn apply(&self, u: &EVector) -> Result<EVector> {
        self.cfg.check_same(&u.cfg())?;
        if u.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                what: "matrix application",
                expected: self.dim,
                got: u.dim(),
            });
        }
        let mut coords = Vec::with_capacity(self.dim);
        for row in &self.rows {
            let mut acc = PadicScalar::zero(self.cfg);
            for (a, x) in row.iter().zip(u.coords()) {
                acc = acc.add(&a.mul(x)?)?;
            }
            coords.push(acc);
        }
        EVector::new(self.cfg, coords)
    }
}

/// Truncation of an element of c_0(E): finitely many blocks of Q_p^d.
#[derive(Clone, Debug, PartialEq)]
pub struct EVectorSequence {
    cfg: PrimeConfig,
    dim: usize,
    blocks: Vec<EVector>,
}

impl EVectorSequence {
    pub fn new(cfg: PrimeConfig, dim: usize, blocks: Vec<EVector>) -> Result<Self> {
        for b in &blocks {
            cfg.check_same(&b.cfg())?;
            if b.dim() != dim {
                return Err(Error::DimensionMismatch {
                    what: "sequence block",
                    expected: dim,
                    got: b.dim(),
                });
            }
        }
        Ok(Self { cfg, dim, blocks })
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block(&self, k: usize) -> &EVector {
        &self.blocks[k]
    }

    pub fn blocks(&self) -> &[EVector] {
        &self.blocks
    }

    pub fn sup_norm(&self) -> PNorm {
        self.blocks
            .iter()
            .map(EVector::sup_norm)
            .max()
            .unwrap_or(PNorm::ZERO)
    }

    /// The backward shift on c_0(E): drops the head block.
    pub fn te_apply(&self) -> Self {
        Self {
            cfg: self.cfg,
            dim: self.dim,
            blocks: self.blocks.iter().skip(1).cloned().collect(),
        }
    }
}

/// The isometric embedding W u = (u, Au, A^2 u, ...), truncated to `len`
/// blocks. The head block dominates the norm because A is a strict
/// contraction, so ||W u|| = ||u||.
pub fn embed_w(a: &ContractionMatrix, u: &EVector, len: usize) -> Result<EVectorSequence> {
    a.cfg().check_same(&u.cfg())?;
    let mut blocks = Vec::with_capacity(len);
    let mut current = u.clone();
    for _ in 0..len {
        blocks.push(current.clone());
        current = a.apply(&current)?;
    }
    EVectorSequence::new(a.cfg(), a.dim(), blocks)
}

/// Outcome of the instance-wise universality check.
#[derive(Clone, Debug)]
pub struct UniversalityReport {
    /// T_E(W u) equals W(A u) entrywise at precision.
    pub conjugacy_holds: bool,
    /// First (block, coordinate) where the two sides differ.
    pub first_mismatch: Option<(usize, usize)>,
    /// ||W u|| equals ||u||.
    pub isometry_holds: bool,
    pub vector_norm: PNorm,
    pub embedded_norm: PNorm,
    /// Every block of T_E(W u) is A^{k+1} applied to the head, i.e. the
    /// image stays inside the embedded subspace.
    pub range_invariant: bool,
    pub blocks_checked: usize,
}

impl UniversalityReport {
    pub fn passed(&self) -> bool {
        self.conjugacy_holds && self.isometry_holds && self.range_invariant
    }
}

/// Checks the conjugacy T_E W u = W A u entrywise modulo p^N, together
/// with the isometry of W and the invariance of the embedded subspace.
pub fn verify_universality(
    a: &ContractionMatrix,
    u: &EVector,
    len: usize,
) -> Result<UniversalityReport> {
    if len == 0 {
        return Err(Error::Precondition(
            "universality check needs at least one block".into(),
        ));
    }
    let embedded = embed_w(a, u, len)?;
    let lhs = embedded.te_apply();
    let rhs = embed_w(a, &a.apply(u)?, len - 1)?;
    let mut first_mismatch = None;
    'outer: for k in 0..lhs.len() {
        for i in 0..lhs.dim() {
            if lhs.block(k).coord(i) != rhs.block(k).coord(i) {
                first_mismatch = Some((k, i));
                break 'outer;
            }
        }
    }
    let vector_norm = u.sup_norm();
    let embedded_norm = embedded.sup_norm();
    // independent route: iterate A from the head block of the image
    let mut range_invariant = true;
    if !lhs.is_empty() {
        let mut power = lhs.block(0).clone();
        for k in 1..lhs.len() {
            power = a.apply(&power)?;
            if lhs.block(k) != &power {
                range_invariant = false;
                break;
            }
        }
    }
    Ok(UniversalityReport {
        conjugacy_holds: first_mismatch.is_none(),
        first_mismatch,
        isometry_holds: vector_norm == embedded_norm,
        vector_norm,
        embedded_norm,
        range_invariant,
        blocks_checked: len,
    })
}
