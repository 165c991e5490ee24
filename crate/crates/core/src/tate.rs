//! Truncated Tate algebra: Gauss norm, ring structure, shift models,
//! Weierstrass-style reduction, and the ideal lattice.
//!
//! A [`TateSeries`] stores the coefficients it knows exactly; when a
//! computation drops coefficients past the stored length, the sup of the
//! dropped part is carried along as `tail_bound`, so exact (polynomial)
//! claims remain distinguishable from truncated ones.
//!
//! Index polynomials for invariant subspaces are monic with integral
//! coefficients. That is exactly the Newton-polygon condition forcing all
//! roots into the unit ball, so ideal membership is decidable by long
//! division alone, without root finding.

use crate::error::{Error, Result};
use crate::padic::{PNorm, PadicScalar, PrimeConfig};
use crate::sequence::C0Vector;

/// Truncated element of the Tate algebra: f(z) = sum a_n z^n with the
/// stored coefficients exact and any dropped tail bounded by `tail_bound`.
#[derive(Clone, Debug)]
pub struct TateSeries {
    coeffs: C0Vector,
    tail_bound: PNorm,
}

impl TateSeries {
    /// A polynomial: all nonzero coefficients stored, zero tail.
    pub fn new(coeffs: C0Vector) -> Self {
        Self {
            coeffs,
            tail_bound: PNorm::ZERO,
        }
    }

    fn with_tail(coeffs: C0Vector, tail_bound: PNorm) -> Self {
        Self { coeffs, tail_bound }
    }

    pub fn zero(cfg: PrimeConfig) -> Self {
        Self::new(C0Vector::zero(cfg, 0))
    }

    pub fn one(cfg: PrimeConfig) -> Self {
        Self::new(C0Vector::unit(cfg, 0, 1))
    }

    /// The monomial z^n.
    pub fn monomial(cfg: PrimeConfig, n: usize) -> Self {
        Self::new(C0Vector::unit(cfg, n, n + 1))
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

    pub fn coefficient(&self, n: usize) -> PadicScalar {
        self.coeffs.entry(n)
    }

    /// Norm bound on the coefficients dropped by truncation; zero means
    /// the series is an exactly known polynomial.
    pub fn tail_bound(&self) -> PNorm {
        self.tail_bound
    }

    /// The Gauss norm max_n |a_n|_p of the stored part.
    pub fn gauss_norm(&self) -> PNorm {
        self.coeffs.sup_norm()
    }

    /// All stored coefficients indistinguishable from zero.
    pub fn is_zero_at_precision(&self) -> bool {
        self.gauss_norm().is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::with_tail(
            self.coeffs.add(&rhs.coeffs)?,
            self.tail_bound.max(rhs.tail_bound),
        ))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::with_tail(
            self.coeffs.sub(&rhs.coeffs)?,
            self.tail_bound.max(rhs.tail_bound),
        ))
    }

    pub fn scale(&self, k: &PadicScalar) -> Result<Self> {
        Ok(Self::with_tail(
            self.coeffs.scale(k)?,
            self.tail_bound * k.abs(),
        ))
    }

    /// Cauchy product. The full product of the stored parts is kept, so
    /// products of polynomials are exact; tail bounds of truncated inputs
    /// propagate ultrametrically.
    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        self.cfg().check_same(&rhs.cfg())?;
        let cfg = self.cfg();
        if self.is_empty() || rhs.is_empty() {
            let tail = (self.tail_bound * rhs.gauss_norm().max(rhs.tail_bound))
                .max(rhs.tail_bound * self.gauss_norm().max(self.tail_bound));
            return Ok(Self::with_tail(C0Vector::zero(cfg, 0), tail));
        }
        let len = self.len() + rhs.len() - 1;
        let mut acc = vec![PadicScalar::zero(cfg); len];
        for i in 0..self.len() {
            let a = self.coefficient(i);
            if a.is_zero_at_precision() {
                continue;
            }
            for j in 0..rhs.len() {
                let term = a.mul(&rhs.coefficient(j))?;
                acc[i + j] = acc[i + j].add(&term)?;
            }
        }
        let whole_self = self.gauss_norm().max(self.tail_bound);
        let whole_rhs = rhs.gauss_norm().max(rhs.tail_bound);
        let tail = (self.tail_bound * whole_rhs).max(rhs.tail_bound * whole_self);
        Ok(Self::with_tail(C0Vector::new(cfg, acc)?, tail))
    }

    /// Keeps the first `len` coefficients and folds the norm of the
    /// dropped ones into the tail bound.
    pub fn truncate(&self, len: usize) -> Self {
        if len >= self.len() {
            return self.clone();
        }
        let dropped = self.coeffs.entries()[len..]
            .iter()
            .map(PadicScalar::abs)
            .max()
            .unwrap_or(PNorm::ZERO);
        let kept = C0Vector::new(self.cfg(), self.coeffs.entries()[..len].to_vec())
            .expect("prefix shares the config");
        Self::with_tail(kept, self.tail_bound.max(dropped))
    }

    /// Horner evaluation at a point of the unit ball.
    pub fn evaluate(&self, z: &PadicScalar) -> Result<PadicScalar> {
        self.cfg().check_same(&z.cfg())?;
        if let Some(v) = z.valuation() {
            if v < 0 {
                return Err(Error::OutsideUnitBall {
                    what: "evaluation point",
                    valuation: v,
                });
            }
        }
        let cfg = self.cfg();
        let mut acc = PadicScalar::zero(cfg);
        for n in (0..self.len()).rev() {
            acc = acc.mul(z)?.add(&self.coefficient(n))?;
        }
        Ok(acc)
    }

    /// Formal derivative, for root-multiplicity oracles.
    pub fn derivative(&self) -> Result<Self> {
        let cfg = self.cfg();
        let mut coeffs = Vec::with_capacity(self.len().saturating_sub(1));
        for n in 1..self.len() {
            coeffs.push(self.coefficient(n).mul_i64(n as i64));
        }
        Ok(Self::with_tail(
            C0Vector::new(cfg, coeffs)?,
            self.tail_bound,
        ))
    }

    /// Multiplication by z: the coefficient vector is shifted by S.
    pub fn s1_apply(&self) -> Self {
        Self::with_tail(self.coeffs.shift_s(), self.tail_bound)
    }

    /// (f(z) - f(0)) / z: the coefficient vector is shifted by T.
    pub fn t1_apply(&self) -> Self {
        Self::with_tail(self.coeffs.shift_t(), self.tail_bound)
    }
}

impl PartialEq for TateSeries {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

/// Monic polynomial with integral coefficients, the index object of the
/// invariant-subspace lattice. Only the coefficients below the leading 1
/// are stored.
#[derive(Clone, Debug, PartialEq)]
pub struct MonicPoly {
    cfg: PrimeConfig,
    lower: Vec<PadicScalar>,
}

impl MonicPoly {
    /// `lower` holds c_0, ..., c_{d-1}; the leading coefficient is 1.
    /// Every c_i must be integral so that all roots lie in the unit ball.
    pub fn new(cfg: PrimeConfig, lower: Vec<PadicScalar>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::Empty("monic polynomial (degree must be >= 1)"));
        }
        for (index, c) in lower.iter().enumerate() {
            cfg.check_same(&c.cfg())?;
            if let Some(v) = c.valuation() {
                if v < 0 {
                    return Err(Error::NotIntegral {
                        index,
                        valuation: v,
                    });
                }
            }
        }
        Ok(Self { cfg, lower })
    }

    pub fn from_integers(cfg: PrimeConfig, lower: &[i64]) -> Result<Self> {
        Self::new(
            cfg,
            lower
                .iter()
                .map(|&c| PadicScalar::from_integer(cfg, c))
                .collect(),
        )
    }

    /// Expands prod_i (z - r_i) for roots in the unit ball.
    pub fn from_roots(cfg: PrimeConfig, roots: &[PadicScalar]) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::Empty("root list"));
        }
        let mut poly = vec![PadicScalar::one(cfg)];
        for r in roots {
            // multiply by (z - r)
            let mut next = vec![PadicScalar::zero(cfg); poly.len() + 1];
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = next[i + 1].add(c)?;
                next[i] = next[i].sub(&c.mul(r)?)?;
            }
            poly = next;
        }
        let lower = poly[..poly.len() - 1].to_vec();
        Self::new(cfg, lower)
    }

    pub fn cfg(&self) -> PrimeConfig {
        self.cfg
    }

    pub fn degree(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[PadicScalar] {
        &self.lower
    }

    /// The polynomial as a Tate series of length d+1.
    pub fn as_series(&self) -> TateSeries {
        let mut coeffs = self.lower.clone();
        coeffs.push(PadicScalar::one(self.cfg));
        TateSeries::new(C0Vector::new(self.cfg, coeffs).expect("coefficients share the config"))
    }

    pub fn evaluate(&self, z: &PadicScalar) -> Result<PadicScalar> {
        self.as_series().evaluate(z)
    }
}

/// Long division f = q P + r with deg r < deg P. Because P is monic with
/// integral coefficients, every elimination step rewrites the top term by
/// z^d = P(z) - (P(z) - z^d) without dividing, so the reduction is exact
/// on truncated input and norm-non-increasing: ||q|| <= ||f|| and
/// ||r|| <= ||f||.
pub fn weierstrass_reduce(f: &TateSeries, poly: &MonicPoly) -> Result<(TateSeries, TateSeries)> {
    f.cfg().check_same(&poly.cfg())?;
    let cfg = f.cfg();
    let d = poly.degree();
    if f.len() <= d {
        return Ok((TateSeries::zero(cfg), f.clone()));
    }
    let mut rem: Vec<PadicScalar> = f.coeffs().entries().to_vec();
    let mut quot = vec![PadicScalar::zero(cfg); rem.len() - d];
    for k in (d..rem.len()).rev() {
        let c = rem[k].clone();
        quot[k - d] = c.clone();
        if c.is_zero_at_precision() {
            continue;
        }
        for (i, low) in poly.lower().iter().enumerate() {
            rem[k - d + i] = rem[k - d + i].sub(&c.mul(low)?)?;
        }
    }
    rem.truncate(d);
    let quotient = TateSeries::with_tail(C0Vector::new(cfg, quot)?, f.tail_bound());
    let remainder = TateSeries::with_tail(C0Vector::new(cfg, rem)?, f.tail_bound());
    Ok((quotient, remainder))
}

/// Verdict of an ideal-membership test, with the witness remainder.
#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub remainder: TateSeries,
    pub remainder_norm: PNorm,
}

/// Decides g in P.H by Weierstrass reduction: member iff the remainder is
/// zero at the working precision. A near-miss is reported with its norm,
/// never rounded away.
pub fn ideal_member(g: &TateSeries, poly: &MonicPoly) -> Result<Membership> {
    let (_, remainder) = weierstrass_reduce(g, poly)?;
    let remainder_norm = remainder.gauss_norm().max(remainder.tail_bound());
    Ok(Membership {
        member: remainder_norm.is_zero(),
        remainder,
        remainder_norm,
    })
}

/// True iff `divisor` divides `dividend` (remainder of the long division
/// is zero at precision). With `ideal_member` this realizes the lattice
/// isomorphism: P' H is contained in P'' H iff P'' divides P'.
pub fn divides(divisor: &MonicPoly, dividend: &MonicPoly) -> Result<bool> {
    Ok(ideal_member(&dividend.as_series(), divisor)?.member)
}

/// Truncation of the multiplication operator M_phi to a polynomial in the
/// shift: sum_{n <= cutoff} a_n S1^n, with the exact operator-norm error
/// max_{n > cutoff} |a_n|_p.
#[derive(Clone, Debug)]
pub struct CommutantApprox {
    symbol: TateSeries,
    error: PNorm,
}

impl CommutantApprox {
    /// The truncated symbol sum_{n <= cutoff} a_n z^n.
    pub fn symbol(&self) -> &TateSeries {
        &self.symbol
    }

    /// ||M_phi - sum_{n <= cutoff} a_n S1^n||, the norm of the dropped
    /// tail of the symbol (the operator norm of a multiplication operator
    /// is the Gauss norm of its symbol).
    pub fn error(&self) -> PNorm {
        self.error
    }

    /// Applies the approximant as a multiplication operator.
    pub fn apply(&self, f: &TateSeries) -> Result<TateSeries> {
        self.symbol.multiply(f)
    }

    /// Applies the approximant literally as sum a_n S1^n f: repeated
    /// shifts, scaled and summed. Must agree with `apply` exactly.
    pub fn apply_operator_sum(&self, f: &TateSeries) -> Result<TateSeries> {
        let cfg = f.cfg();
        let mut acc = TateSeries::zero(cfg);
        let mut shifted = f.clone();
        for n in 0..self.symbol.len() {
            acc = acc.add(&shifted.scale(&self.symbol.coefficient(n))?)?;
            shifted = shifted.s1_apply();
        }
        Ok(acc)
    }
}

/// Truncates the multiplication operator by `phi` to the polynomial
/// sum_{n <= cutoff} a_n S1^n. Requires cutoff < len(phi) so that the
/// truncation actually cuts inside the stored coefficients.
pub fn commutant_poly_approx(phi: &TateSeries, cutoff: usize) -> Result<CommutantApprox> {
    if cutoff >= phi.len() {
        return Err(Error::Precondition(format!(
            "cutoff {cutoff} must be smaller than the stored length {}",
            phi.len()
        )));
    }
    let symbol = TateSeries::new(
        C0Vector::new(phi.cfg(), phi.coeffs().entries()[..=cutoff].to_vec())
            .expect("prefix shares the config"),
    );
    let tail = phi.coeffs().entries()[cutoff + 1..]
        .iter()
        .map(PadicScalar::abs)
        .max()
        .unwrap_or(PNorm::ZERO);
    Ok(CommutantApprox {
        symbol,
        error: tail.max(phi.tail_bound()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn cfg(p: u64, n: u32) -> PrimeConfig {
        PrimeConfig::new(p, n).unwrap()
    }

    #[test]
    fn gauss_norm_examples() {
        let c = cfg(5, 8);
        assert_eq!(TateSeries::one(c).gauss_norm(), PNorm::ONE);
        // ||p + z|| = 1
        let f = TateSeries::from_integers(c, &[5, 1]);
        assert_eq!(f.gauss_norm(), PNorm::ONE);
        assert_eq!(TateSeries::zero(c).gauss_norm(), PNorm::ZERO);
    }

    #[test]
    fn gauss_norm_is_multiplicative() {
        let c = cfg(3, 20);
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let f = sample::series(&mut rng, c, 6);
            let g = sample::series(&mut rng, c, 6);
            let prod = f.multiply(&g).unwrap();
            assert_eq!(prod.gauss_norm(), f.gauss_norm() * g.gauss_norm());
        }
    }

    #[test]
    fn multiply_identities() {
        let c = cfg(5, 10);
        let mut rng = ChaCha8Rng::seed_from_u64(32);
        let f = sample::series(&mut rng, c, 5);
        assert_eq!(f.multiply(&TateSeries::one(c)).unwrap(), f);
        let z = TateSeries::monomial(c, 1);
        assert_eq!(z.multiply(&z).unwrap(), TateSeries::monomial(c, 2));
    }

    #[test]
    fn multiply_is_associative_and_commutative() {
        let c = cfg(5, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(33);
        for _ in 0..25 {
            let f = sample::series(&mut rng, c, 4);
            let g = sample::series(&mut rng, c, 4);
            let h = sample::series(&mut rng, c, 4);
            assert_eq!(f.multiply(&g).unwrap(), g.multiply(&f).unwrap());
            assert_eq!(
                f.multiply(&g).unwrap().multiply(&h).unwrap(),
                f.multiply(&g.multiply(&h).unwrap()).unwrap()
            );
        }
    }

    #[test]
    fn truncate_records_tail_norm() {
        let c = cfg(5, 10);
        let f = TateSeries::from_integers(c, &[1, 5, 25, 125]);
        let t = f.truncate(2);
        assert_eq!(t.len(), 2);
        assert_eq!(t.tail_bound(), PNorm::from_exponent(2));
        // exact polynomial has zero tail
        assert_eq!(f.tail_bound(), PNorm::ZERO);
    }

    #[test]
    fn evaluate_examples() {
        let c = cfg(5, 10);
        let sq = TateSeries::monomial(c, 2);
        let p = PadicScalar::p_power(c, 1);
        assert_eq!(sq.evaluate(&p).unwrap(), PadicScalar::p_power(c, 2));
        let mut rng = ChaCha8Rng::seed_from_u64(34);
        let f = sample::series(&mut rng, c, 5);
        assert_eq!(f.evaluate(&PadicScalar::zero(c)).unwrap(), f.coefficient(0));
    }

    #[test]
    fn evaluate_rejects_points_outside_unit_ball() {
        let c = cfg(5, 10);
        let f = TateSeries::one(c);
        let z = PadicScalar::from_rational_i64(c, 1, 5).unwrap();
        assert!(matches!(
            f.evaluate(&z),
            Err(Error::OutsideUnitBall { valuation: -1, .. })
        ));
    }

    #[test]
    fn evaluation_is_bounded_by_gauss_norm() {
        let c = cfg(3, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(35);
        for _ in 0..100 {
            let f = sample::series(&mut rng, c, 6);
            let z = sample::integral_scalar(&mut rng, c, 3);
            assert!(f.evaluate(&z).unwrap().abs() <= f.gauss_norm());
        }
    }

    #[test]
    fn s1_and_t1_are_the_shifts_on_coefficients() {
        let c = cfg(5, 12);
        assert_eq!(TateSeries::one(c).s1_apply(), TateSeries::monomial(c, 1));
        assert_eq!(TateSeries::monomial(c, 1).t1_apply(), TateSeries::one(c));
        assert!(TateSeries::one(c).t1_apply().is_zero_at_precision());
        let mut rng = ChaCha8Rng::seed_from_u64(36);
        for _ in 0..100 {
            let f = sample::series(&mut rng, c, 6);
            assert_eq!(f.s1_apply().coeffs(), &f.coeffs().shift_s());
            assert_eq!(f.t1_apply().coeffs(), &f.coeffs().shift_t());
            assert_eq!(f.s1_apply().gauss_norm(), f.gauss_norm());
        }
    }

    #[test]
    fn reduce_cubic_by_quadratic() {
        let c = cfg(5, 10);
        // f = z^3, P = z^2 - p  =>  q = z, r = p z
        let f = TateSeries::monomial(c, 3);
        let poly = MonicPoly::from_integers(c, &[-5, 0]).unwrap();
        let (q, r) = weierstrass_reduce(&f, &poly).unwrap();
        assert_eq!(q, TateSeries::monomial(c, 1));
        assert_eq!(r, TateSeries::from_integers(c, &[0, 5]));
    }

    #[test]
    fn reduce_p_by_itself() {
        let c = cfg(5, 10);
        let poly = MonicPoly::from_integers(c, &[2, 3]).unwrap();
        let (q, r) = weierstrass_reduce(&poly.as_series(), &poly).unwrap();
        assert_eq!(q, TateSeries::one(c));
        assert!(r.is_zero_at_precision());
    }

    #[test]
    fn reduction_reconstructs_and_bounds_norms() {
        let c = cfg(3, 18);
        let mut rng = ChaCha8Rng::seed_from_u64(37);
        for _ in 0..100 {
            let f = sample::series(&mut rng, c, 8);
            let d = rng.gen_range(1..=3);
            let poly = sample::monic_poly(&mut rng, c, d);
            let (q, r) = weierstrass_reduce(&f, &poly).unwrap();
            assert!(r.len() <= d);
            // multiply-and-add oracle
            let back = q.multiply(&poly.as_series()).unwrap().add(&r).unwrap();
            assert_eq!(back, f);
            assert!(q.gauss_norm() <= f.gauss_norm());
            assert!(r.gauss_norm() <= f.gauss_norm());
            // idempotence: reducing the remainder changes nothing
            let (q2, r2) = weierstrass_reduce(&r, &poly).unwrap();
            assert!(q2.is_zero_at_precision());
            assert_eq!(r2, r);
        }
    }

    #[test]
    fn membership_in_the_maximal_ideal_at_zero() {
        let c = cfg(5, 12);
        let mut rng = ChaCha8Rng::seed_from_u64(38);
        let z = MonicPoly::from_integers(c, &[0]).unwrap();
        for _ in 0..20 {
            let f = sample::series(&mut rng, c, 5);
            let g = f.s1_apply(); // z * f
            let m = ideal_member(&g, &z).unwrap();
            assert!(m.member);
            assert!(m.remainder_norm.is_zero());
        }
    }

    #[test]
    fn non_membership_detected_by_evaluation() {
        let c = cfg(5, 12);
        let a = PadicScalar::from_integer(c, 2);
        let poly = MonicPoly::from_roots(c, std::slice::from_ref(&a)).unwrap();
        // g = z + 1 has g(2) = 3 != 0
        let g = TateSeries::from_integers(c, &[1, 1]);
        let m = ideal_member(&g, &poly).unwrap();
        assert!(!m.member);
        assert!(!g.evaluate(&a).unwrap().is_zero_at_precision());
    }

    #[test]
    fn constructed_multiples_are_members() {
        let c = cfg(3, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(39);
        for _ in 0..100 {
            let f = sample::series(&mut rng, c, 5);
            let d = rng.gen_range(1..=3);
            let poly = sample::monic_poly(&mut rng, c, d);
            let g = poly.as_series().multiply(&f).unwrap();
            assert!(ideal_member(&g, &poly).unwrap().member);
        }
    }

    #[test]
    fn membership_matches_root_evaluation_oracle() {
        let c = cfg(5, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(40);
        for trial in 0..100 {
            let d = rng.gen_range(1..=3);
            let (poly, roots) = sample::split_monic_poly(&mut rng, c, d);
            let g = if trial % 2 == 0 {
                // construct a member
                poly.as_series()
                    .multiply(&sample::series(&mut rng, c, 4))
                    .unwrap()
            } else {
                sample::series(&mut rng, c, 6)
            };
            let verdict = ideal_member(&g, &poly).unwrap().member;
            // oracle: g and its derivatives up to multiplicity vanish at each root
            let mut oracle = true;
            for root in &roots {
                let mult = roots.iter().filter(|r| *r == root).count();
                let mut h = g.clone();
                for _ in 0..mult {
                    if !h.evaluate(root).unwrap().is_zero_at_precision() {
                        oracle = false;
                    }
                    h = h.derivative().unwrap();
                }
            }
            assert_eq!(verdict, oracle, "trial {trial}");
        }
    }

    #[test]
    fn divisibility_examples() {
        let c = cfg(5, 12);
        let z = MonicPoly::from_integers(c, &[0]).unwrap();
        let z2 = MonicPoly::from_integers(c, &[0, 0]).unwrap();
        assert!(divides(&z, &z2).unwrap());
        assert!(!divides(&z2, &z).unwrap());
        // (z - a) divides (z - a)(z - b)
        let a = PadicScalar::from_integer(c, 3);
        let b = PadicScalar::from_integer(c, 7);
        let za = MonicPoly::from_roots(c, std::slice::from_ref(&a)).unwrap();
        let zab = MonicPoly::from_roots(c, &[a, b]).unwrap();
        assert!(divides(&za, &zab).unwrap());
        assert!(!divides(&zab, &za).unwrap());
    }

    #[test]
    fn divisibility_agrees_with_ideal_containment() {
        let c = cfg(3, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        for _ in 0..100 {
            let d1 = rng.gen_range(1..=3);
            let d2 = rng.gen_range(1..=3);
            let p_prime = sample::monic_poly(&mut rng, c, d1);
            let p_second = sample::monic_poly(&mut rng, c, d2);
            let by_division = divides(&p_second, &p_prime).unwrap();
            let by_membership = ideal_member(&p_prime.as_series(), &p_second).unwrap().member;
            assert_eq!(by_division, by_membership);
        }
    }

    /// Helper for the lattice tests: the product of two monic integral
    /// polynomials, again monic integral.
    fn monic_product(a: &MonicPoly, b: &MonicPoly) -> MonicPoly {
        let series = a.as_series().multiply(&b.as_series()).unwrap();
        MonicPoly::new(
            a.cfg(),
            series.coeffs().entries()[..a.degree() + b.degree()].to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn divisibility_is_reflexive_and_transitive_on_samples() {
        let c = cfg(5, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..50 {
            let d1 = rng.gen_range(1..=2);
            let p1 = sample::monic_poly(&mut rng, c, d1);
            assert!(divides(&p1, &p1).unwrap());
            let d2 = rng.gen_range(1..=2);
            let p2 = sample::monic_poly(&mut rng, c, d2);
            let d3 = rng.gen_range(1..=2);
            let p3 = sample::monic_poly(&mut rng, c, d3);
            // transitivity along the chain p1 | p1 p2 | p1 p2 p3
            let p12 = monic_product(&p1, &p2);
            let p123 = monic_product(&p12, &p3);
            assert!(divides(&p1, &p12).unwrap());
            assert!(divides(&p12, &p123).unwrap());
            assert!(divides(&p1, &p123).unwrap());
        }
    }

    #[test]
    fn ideals_are_invariant_under_s1() {
        let c = cfg(3, 16);
        let mut rng = ChaCha8Rng::seed_from_u64(43);
        for _ in 0..50 {
            let d = rng.gen_range(1..=3);
            let poly = sample::monic_poly(&mut rng, c, d);
            let g = poly
                .as_series()
                .multiply(&sample::series(&mut rng, c, 4))
                .unwrap();
            assert!(ideal_member(&g.s1_apply(), &poly).unwrap().member);
        }
    }

    #[test]
    fn commutant_error_is_the_tail_maximum() {
        let c = cfg(5, 12);
        // a_n = p^n: tail past cutoff has max p^{-(cutoff+1)}
        let coeffs: Vec<PadicScalar> = (0..8).map(|n| PadicScalar::p_power(c, n)).collect();
        let phi = TateSeries::new(C0Vector::new(c, coeffs).unwrap());
        let approx = commutant_poly_approx(&phi, 3).unwrap();
        assert_eq!(approx.error(), PNorm::from_exponent(4));
        // a polynomial within the cutoff is reproduced exactly
        let poly = TateSeries::from_integers(c, &[4, 1, 3]);
        let exact = commutant_poly_approx(&poly, 2).unwrap();
        assert_eq!(exact.error(), PNorm::ZERO);
    }

    #[test]
    fn commutant_approximant_reproduces_truncated_symbol_on_e0() {
        let c = cfg(5, 14);
        let mut rng = ChaCha8Rng::seed_from_u64(44);
        for _ in 0..25 {
            let phi = sample::series(&mut rng, c, 8);
            let approx = commutant_poly_approx(&phi, 4).unwrap();
            let e0 = TateSeries::one(c);
            let image = approx.apply(&e0).unwrap();
            // phi truncated to the cutoff
            for n in 0..=4 {
                assert_eq!(image.coefficient(n), phi.coefficient(n));
            }
            assert_eq!(image.len(), 5);
            // both application routes agree
            assert_eq!(approx.apply_operator_sum(&e0).unwrap(), image);
        }
    }

    #[test]
    fn multiplication_operators_commute_with_s1() {
        let c = cfg(3, 14);
        let mut rng = ChaCha8Rng::seed_from_u64(45);
        for _ in 0..50 {
            let phi = sample::series(&mut rng, c, 5);
            let f = sample::series(&mut rng, c, 5);
            let lhs = phi.multiply(&f.s1_apply()).unwrap();
            let rhs = phi.multiply(&f).unwrap().s1_apply();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn monic_poly_rejects_non_integral_coefficients() {
        let c = cfg(5, 8);
        let bad = PadicScalar::from_rational_i64(c, 1, 5).unwrap();
        assert!(matches!(
            MonicPoly::new(c, vec![bad]),
            Err(Error::NotIntegral {
                index: 0,
                valuation: -1
            })
        ));
    }
}
