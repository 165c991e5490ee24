//! Continuous functions on Z_p through their values at 0..M.
//!
//! The integers are dense in Z_p and the Mahler coefficients up to degree
//! M are exactly determined by the values at 0..M, so a [`GridFunction`]
//! is a faithful finite window onto C(Z_p, C_p) restricted to Q_p data.
//! The transform to Mahler coefficients uses finite differences only --
//! integer combinations, no division -- so it is precision-lossless, and
//! the inverse evaluation uses exact integer binomials.
//!
//! The indefinite sum realizes the unilateral shift in this model and the
//! forward difference realizes the backward shift: taking Mahler
//! coefficients intertwines them with S and T on c_0 exactly.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::padic::{PNorm, PadicScalar, PrimeConfig};
use crate::sequence::C0Vector;

/// Values of a continuous function at the grid points 0, 1, ..., M.
#[derive(Clone, Debug, PartialEq)]
pub struct GridFunction {
    cfg: PrimeConfig,
    values: Vec<PadicScalar>,
}

impl GridFunction {
    /// Wraps values at 0..=M; the list must be nonempty.
    pub fn new(cfg: PrimeConfig, values: Vec<PadicScalar>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("grid function"));
        }
        for v in &values {
            cfg.check_same(&v.cfg())?;
        }
        Ok(Self { cfg, values })
    }

    pub fn constant_one(cfg: PrimeConfig, m: usize) -> Self {
        Self {
            cfg,
            values: vec![PadicScalar::one(cfg); m + 1],
        }
    }

    pub fn from_integers(cfg: PrimeConfig, values: &[i64]) -> Result<Self> {
        Self::new(
            cfg,
            values
                .iter()
                .map(|&v| PadicScalar::from_integer(cfg, v))
                .collect(),
        )
    }

    /// Samples the Mahler polynomial P_n on 0..=m.
    pub fn mahler_basis(cfg: PrimeConfig, n: usize, m: usize) -> Self {
        let values = (0..=m as u64).map(|x| mahler_p(cfg, n, x)).collect();
        Self { cfg, values }
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    /// M, the largest grid point.
    pub fn grid_size(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[PadicScalar] {
        &self.values
    }

    pub fn value(&self, x: usize) -> &PadicScalar {
        &self.values[x]
    }

    pub fn sup_norm(&self) -> PNorm {
        self.values
            .iter()
            .map(PadicScalar::abs)
            .max()
            .unwrap_or(PNorm::ZERO)
    }

    /// Restriction to the smaller grid 0..=m.
    pub fn restrict(&self, m: usize) -> Self {
        Self {
            cfg: self.cfg,
            values: self.values[..=m.min(self.grid_size())].to_vec(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.cfg.check_same(&rhs.cfg)?;
        if self.values.len() != rhs.values.len() {
            return Err(Error::DimensionMismatch {
                what: "grid addition",
                expected: self.values.len(),
                got: rhs.values.len(),
            });
        }
        let values = self
            .values
            .iter()
            .zip(&rhs.values)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cfg: self.cfg,
            values,
        })
    }

    pub fn scale(&self, k: &PadicScalar) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.mul(k))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            cfg: self.cfg,
            values,
        })
    }
}

/// Mahler coefficients (b_0, ..., b_M) of a grid function.
#[derive(Clone, Debug, PartialEq)]
pub struct MahlerCoeffs {
    coeffs: C0Vector,
}

impl MahlerCoeffs {
    pub fn new(coeffs: C0Vector) -> Self {
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &C0Vector {
        &self.coeffs
    }

    pub fn into_vector(self) -> C0Vector {
        self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn entry(&self, n: usize) -> PadicScalar {
        self.coeffs.entry(n)
    }

    pub fn sup_norm(&self) -> PNorm {
        self.coeffs.sup_norm()
    }
}

/// The Mahler polynomial P_n at an integer point: the binomial
/// coefficient C(x, n), an exact p-adic integer. P_0 = 1 everywhere and
/// P_n(x) = 0 for x < n.
pub fn mahler_p(cfg: PrimeConfig, n: usize, x: u64) -> PadicScalar {
    PadicScalar::from_bigint(cfg, &binomial(x, n as u64).into())
}

fn binomial(x: u64, n: u64) -> BigUint {
    if n > x {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..n {
        acc = acc * (x - i) / (i + 1);
    }
    acc
}

/// Mahler coefficients by finite differences: b_n = (Delta^n phi)(0),
/// computed through the difference triangle. Integer combinations only,
/// so no precision is lost; the output has length M+1.
pub fn mahler_coeffs(phi: &GridFunction) -> Result<MahlerCoeffs> {
    let mut row: Vec<PadicScalar> = phi.values.to_vec();
    let mut coeffs = Vec::with_capacity(row.len());
    coeffs.push(row[0].clone());
    while row.len() > 1 {
        let mut next = Vec::with_capacity(row.len() - 1);
        for pair in row.windows(2) {
            next.push(pair[1].sub(&pair[0])?);
        }
        coeffs.push(next[0].clone());
        row = next;
    }
    Ok(MahlerCoeffs::new(C0Vector::new(phi.cfg, coeffs)?))
}

/// Evaluates sum_n b_n C(x, n) at an integer point.
pub fn mahler_eval(b: &MahlerCoeffs, x: u64) -> Result<PadicScalar> {
    let cfg = b.coeffs.cfg();
    let mut acc = PadicScalar::zero(cfg);
    for n in 0..b.len() {
        let term = b.entry(n).mul(&mahler_p(cfg, n, x))?;
        acc = acc.add(&term)?;
    }
    Ok(acc)
}

/// The indefinite sum: (S2 phi)(n) = sum_{j<n} phi(j), with value 0 at 0.
/// Output on the same grid 0..=M. Under the Mahler transform this is the
/// unilateral shift of the coefficient vector.
pub fn indefinite_sum(phi: &GridFunction) -> Result<GridFunction> {
    if phi.grid_size() < 1 {
        return Err(Error::Precondition(
            "indefinite sum needs a grid of size M >= 1".into(),
        ));
    }
    let cfg = phi.cfg;
    let mut values = Vec::with_capacity(phi.values.len());
    let mut acc = PadicScalar::zero(cfg);
    values.push(acc.clone());
    for j in 0..phi.grid_size() {
        acc = acc.add(phi.value(j))?;
        values.push(acc.clone());
    }
    GridFunction::new(cfg, values)
}

/// The forward difference: (T2 phi)(x) = phi(x+1) - phi(x), on 0..=M-1.
/// Acts on the Mahler basis by P_n -> P_{n-1}, P_0 -> 0.
pub fn difference(phi: &GridFunction) -> Result<GridFunction> {
    if phi.grid_size() < 1 {
        return Err(Error::Precondition(
            "difference needs a grid of size M >= 1".into(),
        ));
    }
    let values = phi
        .values
        .windows(2)
        .map(|pair| pair[1].sub(&pair[0]))
        .collect::<Result<Vec<_>>>()?;
    GridFunction::new(phi.cfg, values)
}

/// The shifted convolution (phi *_ psi)(n) = sum_{i+j=n-1} phi(i) psi(j),
/// zero at n = 0, on the common grid 0..=min(M_phi, M_psi).
pub fn shifted_convolution(phi: &GridFunction, psi: &GridFunction) -> Result<GridFunction> {
    phi.cfg.check_same(&psi.cfg)?;
    let m = phi.grid_size().min(psi.grid_size());
    let cfg = phi.cfg;
    let mut values = Vec::with_capacity(m + 1);
    values.push(PadicScalar::zero(cfg));
    for n in 1..=m {
        let mut acc = PadicScalar::zero(cfg);
        for i in 0..n {
            let j = n - 1 - i;
            acc = acc.add(&phi.value(i).mul(psi.value(j))?)?;
        }
        values.push(acc);
    }
    GridFunction::new(cfg, values)
}

/// The coherent state phi_lambda(x) = (1 + lambda)^x sampled on 0..=m.
/// Requires |lambda|_p <= 1/p: over Q_p the realizable point spectrum of
/// the difference operator is p Z_p, because the value group is discrete.
/// Satisfies T2 phi = lambda phi exactly on the grid, and its Mahler
/// coefficients are the geometric sequence (lambda^n).
pub fn coherent_state(lambda: &PadicScalar, m: usize) -> Result<GridFunction> {
    let admissible = match lambda.valuation() {
        Some(v) => v >= 1,
        None => lambda.known_exp() >= 1,
    };
    if !admissible {
        return Err(Error::OutsidePointSpectrum {
            got: lambda.valuation().unwrap_or(lambda.known_exp()),
        });
    }
    let cfg = lambda.cfg();
    let base = PadicScalar::one(cfg).add(lambda)?;
    let mut values = Vec::with_capacity(m + 1);
    let mut acc = PadicScalar::one(cfg);
    for _ in 0..=m {
        values.push(acc.clone());
        acc = acc.mul(&base)?;
    }
    GridFunction::new(cfg, values)
}
