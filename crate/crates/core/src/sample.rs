//! Deterministic random instance generators for the property suites.
//!
//! Every generator is a pure function of the supplied RNG, so a seeded
//! RNG reproduces the same instances byte for byte. The CLI demos and the
//! acceptance suite both draw from here.

use rand::Rng;

use num_bigint::BigUint;

use crate::mahler::GridFunction;
use crate::models::{ContractionMatrix, EVector};
use crate::padic::{PadicScalar, PrimeConfig};
use crate::sequence::C0Vector;
use crate::tate::{MonicPoly, TateSeries};

/// A scalar of valuation exactly 0: random unit digits up to precision N.
pub fn unit_scalar<R: Rng>(rng: &mut R, cfg: PrimeConfig) -> PadicScalar {
    let p = cfg.p();
    let mut acc = BigUint::from(rng.gen_range(1..p));
    let mut power = cfg.p_big();
    for _ in 1..cfg.precision() {
        let d = rng.gen_range(0..p);
        if d != 0 {
            acc += d * &power;
        }
        power *= cfg.p_big();
    }
    PadicScalar::from_bigint(cfg, &acc.into())
}

/// A scalar with random valuation in `lo..=hi` and a random unit part.
pub fn scalar_in_val_range<R: Rng>(
    rng: &mut R,
    cfg: PrimeConfig,
    lo: i64,
    hi: i64,
) -> PadicScalar {
    let v = rng.gen_range(lo..=hi);
    let u = unit_scalar(rng, cfg);
    u.mul(&PadicScalar::p_power(cfg, v)).expect("same config")
}

/// An integral scalar (valuation in 0..=max_val), occasionally zero.
pub fn integral_scalar<R: Rng>(rng: &mut R, cfg: PrimeConfig, max_val: i64) -> PadicScalar {
    if rng.gen_range(0..8) == 0 {
        return PadicScalar::zero(cfg);
    }
    scalar_in_val_range(rng, cfg, 0, max_val)
}

/// A truncated c_0 element: integral entries, sprinkled with zeros.
pub fn c0_vector<R: Rng>(rng: &mut R, cfg: PrimeConfig, len: usize) -> C0Vector {
    let entries = (0..len).map(|_| integral_scalar(rng, cfg, 4)).collect();
    C0Vector::new(cfg, entries).expect("entries share the config")
}

/// A vector whose entries decay: valuation at least j at index j.
pub fn decaying_vector<R: Rng>(rng: &mut R, cfg: PrimeConfig, len: usize) -> C0Vector {
    let n = cfg.precision() as i64;
    let entries = (0..len)
        .map(|j| {
            let v = (j as i64 + rng.gen_range(0..2)).min(n - 1);
            PadicScalar::p_power(cfg, v)
                .mul(&unit_scalar(rng, cfg))
                .expect("same config")
        })
        .collect();
    C0Vector::new(cfg, entries).expect("entries share the config")
}

/// A grid function on 0..=m with integral values.
pub fn grid<R: Rng>(rng: &mut R, cfg: PrimeConfig, m: usize) -> GridFunction {
    let values = (0..=m).map(|_| integral_scalar(rng, cfg, 4)).collect();
    GridFunction::new(cfg, values).expect("nonempty integral grid")
}

/// A truncated Tate series (a polynomial) with integral coefficients.
pub fn series<R: Rng>(rng: &mut R, cfg: PrimeConfig, len: usize) -> TateSeries {
    TateSeries::new(c0_vector(rng, cfg, len))
}

/// A monic polynomial with integral lower coefficients.
pub fn monic_poly<R: Rng>(rng: &mut R, cfg: PrimeConfig, degree: usize) -> MonicPoly {
    let lower = (0..degree).map(|_| integral_scalar(rng, cfg, 3)).collect();
    MonicPoly::new(cfg, lower).expect("integral coefficients")
}

/// A split monic polynomial built from small integer roots (repetitions
/// allowed), returned together with its roots.
pub fn split_monic_poly<R: Rng>(
    rng: &mut R,
    cfg: PrimeConfig,
    degree: usize,
) -> (MonicPoly, Vec<PadicScalar>) {
    let mut roots: Vec<i64> = Vec::with_capacity(degree);
    for _ in 0..degree {
        let reuse = !roots.is_empty() && rng.gen_range(0..4) == 0;
        if reuse {
            let pick = rng.gen_range(0..roots.len());
            let r = roots[pick];
            roots.push(r);
        } else {
            roots.push(rng.gen_range(-9..=9i64));
        }
    }
    let scalars: Vec<PadicScalar> = roots
        .iter()
        .map(|&r| PadicScalar::from_integer(cfg, r))
        .collect();
    let poly = MonicPoly::from_roots(cfg, &scalars).expect("integer roots are integral");
    (poly, scalars)
}

/// A d x d matrix whose entries all have valuation >= 1.
pub fn contraction_matrix<R: Rng>(rng: &mut R, cfg: PrimeConfig, dim: usize) -> ContractionMatrix {
    let rows = (0..dim)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    if rng.gen_range(0..6) == 0 {
                        PadicScalar::zero(cfg)
                    } else {
                        scalar_in_val_range(rng, cfg, 1, 3)
                    }
                })
                .collect()
        })
        .collect();
    ContractionMatrix::new(cfg, rows).expect("entries have valuation >= 1")
}

/// A vector of Q_p^d with integral coordinates, not all zero.
pub fn e_vector<R: Rng>(rng: &mut R, cfg: PrimeConfig, dim: usize) -> EVector {
    loop {
        let coords: Vec<PadicScalar> = (0..dim).map(|_| integral_scalar(rng, cfg, 3)).collect();
        if coords.iter().any(|c| !c.is_zero_at_precision()) {
            return EVector::new(cfg, coords).expect("coords share the config");
        }
    }
}

/// A random rational (numerator, nonzero denominator) for ingestion tests.
pub fn small_rational<R: Rng>(rng: &mut R) -> (i64, i64) {
    let a = rng.gen_range(-500..=500i64);
    let b = rng.gen_range(1..=60i64);
    (a, b)
}
