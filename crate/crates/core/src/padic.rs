//! Exact p-adic scalar arithmetic with explicit precision tracking.
//!
//! A [`PadicScalar`] is one element of Q_p known modulo a power of p.
//! Inputs enter the system known modulo p^N, where N is the working
//! precision of the [`PrimeConfig`]; every operation then tracks how much
//! absolute precision survives. Digits that are kept are exact, nothing is
//! rounded silently, and "equal" means "congruent modulo the shared known
//! power of p" -- a decidable predicate.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Prime and working precision shared by every value in a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeConfig {
    p: u64,
    precision: u32,
}

impl PrimeConfig {
    /// Validates that `p` is prime (trial division) and `precision >= 1`.
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if precision == 0 {
            return Err(Error::ZeroPrecision);
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Self { p, precision })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn p_big(&self) -> BigUint {
        BigUint::from(self.p)
    }

    /// p^k as a big integer.
    pub fn p_pow(&self, k: u32) -> BigUint {
        self.p_big().pow(k)
    }

    pub(crate) fn check_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ConfigMismatch {
                lhs_p: self.p,
                lhs_prec: self.precision,
                rhs_p: other.p,
                rhs_prec: other.precision,
            })
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// The value of an ultrametric absolute value: 0 or a power p^{-e}.
///
/// Only the exponent is stored, so products and comparisons are exact.
/// Ordering follows the real value: 0 is smallest, and a larger exponent
/// means a smaller norm.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PNorm(Option<i64>);

impl PNorm {
    pub const ZERO: Self = PNorm(None);
    pub const ONE: Self = PNorm(Some(0));

    /// The norm p^{-e}.
    pub fn from_exponent(e: i64) -> Self {
        PNorm(Some(e))
    }

    /// `Some(e)` with norm = p^{-e}, or `None` for the zero norm.
    pub fn exponent(&self) -> Option<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_none()
    }

    /// Exact value as a rational string: "0", "1", "1/125", "25", ...
    pub fn rational_string(&self, p: u64) -> String {
        match self.0 {
            None => "0".to_owned(),
            Some(e) if e > 0 => format!("1/{}", BigUint::from(p).pow(e as u32)),
            Some(e) => BigUint::from(p).pow((-e) as u32).to_string(),
        }
    }
}

impl std::ops::Mul for PNorm {
    type Output = PNorm;

    // norms multiply by adding exponents: p^{-a} * p^{-b} = p^{-(a+b)}
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        match (self.0, rhs.0) {
            (Some(a), Some(b)) => PNorm(Some(a + b)),
            _ => PNorm::ZERO,
        }
    }
}

impl PartialOrd for PNorm {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PNorm {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.0, other.0) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            // p^{-a} > p^{-b} iff a < b
            (Some(a), Some(b)) => b.cmp(&a),
        }
    }
}

/// One element of Q_p, known modulo p^{known_exp}.
///
/// A nonzero value is stored as p^valuation * unit with the unit reduced
/// modulo p^{known_exp - valuation} and never divisible by p. `value ==
/// None` means the element is zero at the stored precision: its digits are
/// indistinguishable from 0, though it may be a nonzero element of
/// valuation >= known_exp. The distinction matters for division and is
/// preserved in error messages.
#[derive(Clone, Debug)]
pub struct PadicScalar {
    cfg: PrimeConfig,
    known_exp: i64,
    value: Option<(i64, BigUint)>,
}

impl PadicScalar {
    /// Zero, known modulo p^N.
    pub fn zero(cfg: PrimeConfig) -> Self {
        Self::zero_at(cfg, cfg.precision() as i64)
    }

    /// Zero modulo p^known_exp.
    pub fn zero_at(cfg: PrimeConfig, known_exp: i64) -> Self {
        Self {
            cfg,
            known_exp,
            value: None,
        }
    }

    pub fn one(cfg: PrimeConfig) -> Self {
        Self::from_integer(cfg, 1)
    }

    /// p^k (k may be negative).
    pub fn p_power(cfg: PrimeConfig, k: i64) -> Self {
        Self::reduced(cfg, cfg.precision() as i64, k, BigUint::one())
    }

    pub fn from_integer(cfg: PrimeConfig, n: i64) -> Self {
        Self::from_bigint(cfg, &BigInt::from(n))
    }

    pub fn from_bigint(cfg: PrimeConfig, n: &BigInt) -> Self {
        match Self::from_rational(cfg, n, &BigInt::one()) {
            Ok(x) => x,
            Err(_) => unreachable!("denominator 1 cannot fail"),
        }
    }

    /// The p-adic expansion of a/b to the working precision N.
    ///
    /// The valuation of the result is v_p(a) - v_p(b); if that reaches N
    /// the result is zero at precision.
    pub fn from_rational(cfg: PrimeConfig, numer: &BigInt, denom: &BigInt) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::zero(cfg));
        }
        let p = BigInt::from(cfg.p());
        let (va, ua) = split_valuation(numer, &p);
        let (vb, ub) = split_valuation(denom, &p);
        let val = va - vb;
        let n = cfg.precision() as i64;
        if val >= n {
            return Ok(Self::zero_at(cfg, n));
        }
        let rel = (n - val) as u32;
        let modulus = BigInt::from(cfg.p_pow(rel));
        let ua = ua.mod_floor_by(&modulus);
        let ub = ub.mod_floor_by(&modulus);
        let inv = modinv_bigint(&ub, &modulus)
            .expect("unit part of the denominator is invertible mod p^rel");
        let unit = (ua * inv).mod_floor_by(&modulus);
        let unit = unit.to_biguint().expect("residue is non-negative");
        Ok(Self::reduced(cfg, n, val, unit))
    }

    /// Convenience wrapper for machine-integer rationals.
    pub fn from_rational_i64(cfg: PrimeConfig, numer: i64, denom: i64) -> Result<Self> {
        Self::from_rational(cfg, &BigInt::from(numer), &BigInt::from(denom))
    }

    /// Rebuilds a scalar from its wire representation: little-endian
    /// base-p digits of the unit part at the given valuation, known
    /// modulo p^known_exp. `valuation == None` encodes zero-at-precision
    /// (digits must then be empty).
    pub fn from_parts(
        cfg: PrimeConfig,
        known_exp: i64,
        valuation: Option<i64>,
        digits: &[u64],
    ) -> Result<Self> {
        let val = match valuation {
            None => {
                if !digits.is_empty() {
                    return Err(Error::parse(
                        "digits",
                        "must be empty when the valuation is null",
                    ));
                }
                return Ok(Self::zero_at(cfg, known_exp));
            }
            Some(v) => v,
        };
        if digits.is_empty() {
            return Err(Error::parse(
                "digits",
                "must be nonempty for a finite valuation",
            ));
        }
        if digits[0] == 0 {
            return Err(Error::parse("digits", "the index-0 digit must be nonzero"));
        }
        if let Some(d) = digits.iter().find(|d| **d >= cfg.p()) {
            return Err(Error::parse(
                "digits",
                format!("digit {d} is not below p = {}", cfg.p()),
            ));
        }
        if val >= known_exp {
            return Err(Error::parse(
                "val",
                format!("valuation {val} is not below the known exponent {known_exp}"),
            ));
        }
        let mut unit = BigUint::zero();
        for d in digits.iter().rev() {
            unit = unit * cfg.p_big() + BigUint::from(*d);
        }
        Ok(Self::reduced(cfg, known_exp, val, unit))
    }

    /// Builds p^valuation * unit, assuming p does not divide `unit`.
    /// Reduces the unit modulo p^{known_exp - valuation}.
    fn reduced(cfg: PrimeConfig, known_exp: i64, valuation: i64, unit: BigUint) -> Self {
        debug_assert!(!unit.is_zero());
        debug_assert!(!(&unit % cfg.p_big()).is_zero());
        if valuation >= known_exp {
            return Self::zero_at(cfg, known_exp);
        }
        let rel = exponent_to_u32(known_exp - valuation);
        let modulus = cfg.p_pow(rel);
        let unit = unit % &modulus;
        if unit.is_zero() {
            // cannot happen for p-coprime units, but keep the reduction total
            return Self::zero_at(cfg, known_exp);
        }
        Self {
            cfg,
            known_exp,
            value: Some((valuation, unit)),
        }
    }

    /// Builds p^shift * t for an arbitrary integer t known mod
    /// p^{known_exp - shift}; extracts the valuation of t.
    fn normalized(cfg: PrimeConfig, known_exp: i64, shift: i64, t: BigUint) -> Self {
        if known_exp <= shift {
            return Self::zero_at(cfg, known_exp);
        }
        let modulus = cfg.p_pow(exponent_to_u32(known_exp - shift));
        let t = t % &modulus;
        if t.is_zero() {
            return Self::zero_at(cfg, known_exp);
        }
        let (w, unit) = split_valuation_biguint(&t, &cfg.p_big());
        Self::reduced(cfg, known_exp, shift + w, unit)
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    /// Exponent A such that the value is known modulo p^A.
    pub fn known_exp(&self) -> i64 {
        self.known_exp
    }

    /// `None` encodes an infinite valuation (zero at precision).
    pub fn valuation(&self) -> Option<i64> {
        self.value.as_ref().map(|(v, _)| *v)
    }

    pub fn is_zero_at_precision(&self) -> bool {
        self.value.is_none()
    }

    /// |x|_p as an exact power of p; zero-at-precision reports 0.
    pub fn abs(&self) -> PNorm {
        match &self.value {
            Some((v, _)) => PNorm::from_exponent(*v),
            None => PNorm::ZERO,
        }
    }

    /// The exponent e with |x|_p = p^{-e}; `None` when |x|_p = 0.
    pub fn abs_exponent(&self) -> Option<i64> {
        self.valuation()
    }

    /// Base-p digits of the unit part, little-endian, trailing zeros
    /// trimmed. Empty for zero-at-precision. The index-0 digit is nonzero.
    pub fn digits(&self) -> Vec<u64> {
        match &self.value {
            None => Vec::new(),
            Some((_, unit)) => biguint_digits(unit, self.cfg.p()),
        }
    }

    /// The unit part as an integer residue, when nonzero at precision.
    pub fn unit(&self) -> Option<&BigUint> {
        self.value.as_ref().map(|(_, u)| u)
    }

    /// Canonical integer representative p^v * unit, defined when the
    /// valuation is >= 0 (or the value is zero at precision).
    pub fn integer_residue(&self) -> Option<BigUint> {
        match &self.value {
            None => Some(BigUint::zero()),
            Some((v, unit)) => {
                if *v < 0 {
                    None
                } else {
                    Some(unit * self.cfg.p_pow(*v as u32))
                }
            }
        }
    }

    fn min_known(&self, rhs: &Self) -> i64 {
        self.known_exp.min(rhs.known_exp)
    }

    /// True when both values are congruent modulo the smaller of the two
    /// known powers of p. This is what `==` delegates to.
    pub fn congruent(&self, rhs: &Self) -> bool {
        if self.cfg != rhs.cfg {
            return false;
        }
        let a = self.min_known(rhs);
        match (&self.value, &rhs.value) {
            (None, None) => true,
            (Some((v, _)), None) | (None, Some((v, _))) => *v >= a,
            (Some((vx, ux)), Some((vy, uy))) => {
                if *vx >= a && *vy >= a {
                    return true;
                }
                if vx != vy {
                    return false;
                }
                let rel = exponent_to_u32(a - vx);
                let modulus = self.cfg.p_pow(rel);
                ux % &modulus == uy % &modulus
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.cfg.check_same(&rhs.cfg)?;
        let a = self.min_known(rhs);
        match (&self.value, &rhs.value) {
            (None, None) => Ok(Self::zero_at(self.cfg, a)),
            (None, Some((v, u))) | (Some((v, u)), None) => {
                Ok(Self::reduced(self.cfg, a, *v, u.clone()))
            }
            (Some((vx, ux)), Some((vy, uy))) => {
                let m = (*vx).min(*vy);
                let modulus = self.cfg.p_pow(exponent_to_u32(a - m));
                let tx = ux * self.cfg.p_pow(exponent_to_u32(vx - m)) % &modulus;
                let ty = uy * self.cfg.p_pow(exponent_to_u32(vy - m)) % &modulus;
                let t = (tx + ty) % &modulus;
                Ok(Self::normalized(self.cfg, a, m, t))
            }
        }
    }

    pub fn neg(&self) -> Self {
        match &self.value {
            None => self.clone(),
            Some((v, u)) => {
                let rel = exponent_to_u32(self.known_exp - v);
                let unit = self.cfg.p_pow(rel) - u;
                Self::reduced(self.cfg, self.known_exp, *v, unit)
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.cfg.check_same(&rhs.cfg)?;
        match (&self.value, &rhs.value) {
            (None, None) => Ok(Self::zero_at(self.cfg, self.known_exp + rhs.known_exp)),
            (None, Some((v, _))) => Ok(Self::zero_at(self.cfg, self.known_exp + v)),
            (Some((v, _)), None) => Ok(Self::zero_at(self.cfg, rhs.known_exp + v)),
            (Some((vx, ux)), Some((vy, uy))) => {
                let known = (vx + rhs.known_exp).min(vy + self.known_exp);
                let val = vx + vy;
                let rel = exponent_to_u32(known - val);
                let unit = ux * uy % self.cfg.p_pow(rel);
                Ok(Self::reduced(self.cfg, known, val, unit))
            }
        }
    }

    /// Multiplicative inverse. Fails on zero-at-precision: a true zero has
    /// no inverse and a small nonzero value cannot be inverted from its
    /// stored digits.
    pub fn inverse(&self) -> Result<Self> {
        match &self.value {
            None => Err(Error::DivisorZeroAtPrecision {
                known_exp: self.known_exp,
            }),
            Some((v, u)) => {
                let rel = exponent_to_u32(self.known_exp - v);
                let modulus = BigInt::from(self.cfg.p_pow(rel));
                let inv = modinv_bigint(&BigInt::from(u.clone()), &modulus)
                    .expect("unit is invertible mod p^rel");
                let unit = inv.to_biguint().expect("residue is non-negative");
                Ok(Self::reduced(self.cfg, rel as i64 - v, -v, unit))
            }
        }
    }

    /// x * y^{-1}; the valuation of the result is v(x) - v(y).
    pub fn div(&self, rhs: &Self) -> Result<Self> {
        self.cfg.check_same(&rhs.cfg)?;
        self.mul(&rhs.inverse()?)
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Self::one(self.cfg);
        for _ in 0..k {
            acc = acc.mul(self).expect("same config");
        }
        acc
    }

    /// Scales by a machine integer.
    pub fn mul_i64(&self, k: i64) -> Self {
        self.mul(&Self::from_integer(self.cfg, k)).expect("same config")
    }
}

impl PartialEq for PadicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.congruent(other)
    }
}

impl fmt::Display for PadicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.cfg.p();
        match &self.value {
            None => write!(f, "O({}^{})", p, self.known_exp),
            Some((v, _)) => {
                let digits = self.digits();
                let mut first = true;
                for (i, d) in digits.iter().enumerate() {
                    if *d == 0 {
                        continue;
                    }
                    if !first {
                        write!(f, " + ")?;
                    }
                    first = false;
                    let e = v + i as i64;
                    match e {
                        0 => write!(f, "{d}")?,
                        1 => write!(f, "{d}*{p}")?,
                        _ => write!(f, "{d}*{p}^{e}")?,
                    }
                }
                write!(f, " + O({}^{})", p, self.known_exp)
            }
        }
    }
}

/// Legendre's formula: nu(n) = sum_{i>=1} floor(n / p^i), the exponent of
/// p in n!. Equivalently (n - s_p(n)) / (p - 1).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut total = 0;
    let mut q = n / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    total
}

/// Sum of the base-p digits of n.
pub fn digit_sum(n: u64, p: u64) -> u64 {
    debug_assert!(p >= 2);
    let mut s = 0;
    let mut m = n;
    while m > 0 {
        s += m % p;
        m /= p;
    }
    s
}

/// Splits x = p^v * u with p not dividing u. Requires x != 0.
fn split_valuation(x: &BigInt, p: &BigInt) -> (i64, BigInt) {
    debug_assert!(!x.is_zero());
    let mut v = 0i64;
    let mut u = x.clone();
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

fn split_valuation_biguint(x: &BigUint, p: &BigUint) -> (i64, BigUint) {
    debug_assert!(!x.is_zero());
    let mut v = 0i64;
    let mut u = x.clone();
    while (&u % p).is_zero() {
        u /= p;
        v += 1;
    }
    (v, u)
}

fn biguint_digits(x: &BigUint, p: u64) -> Vec<u64> {
    let p = BigUint::from(p);
    let mut digits = Vec::new();
    let mut m = x.clone();
    while !m.is_zero() {
        let d = &m % &p;
        digits.push(d.to_u64().expect("digit fits in u64"));
        m /= &p;
    }
    digits
}

fn modinv_bigint(a: &BigInt, modulus: &BigInt) -> Option<BigInt> {
    a.modinv(modulus)
}

fn exponent_to_u32(e: i64) -> u32 {
    u32::try_from(e).expect("precision exponent fits in u32")
}

trait ModFloor {
    fn mod_floor_by(&self, modulus: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor_by(&self, modulus: &BigInt) -> BigInt {
        let r = self % modulus;
        if r.sign() == Sign::Minus {
            r + modulus.abs()
        } else {
            r
        }
    }
}
