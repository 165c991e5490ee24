//! Canned demonstrations: randomized property suites with fixed seeds,
//! one pass/fail line per property. Reports are deterministic byte for
//! byte for a given set of flags.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ushift_core::mahler::{coherent_state, difference, indefinite_sum, mahler_coeffs, GridFunction};
use ushift_core::models::{embed_w, radius_check, verify_universality, FactorialSeries};
use ushift_core::padic::{digit_sum, factorial_valuation, PNorm, PadicScalar, PrimeConfig};
use ushift_core::sample;
use ushift_core::sequence::{
    annihilator_geometric, basis_approximation_error, cyclic_error, cyclic_vector, densify_cyclic,
    pairing, BoundedVector, CyclicKind,
};
use ushift_core::tate::{commutant_poly_approx, divides, ideal_member, TateSeries};
use ushift_core::Result;

use crate::output::DemoReport;

#[derive(Clone, Copy, Debug)]
pub struct DemoParams {
    pub p: u64,
    pub prec: u32,
    pub len: usize,
    pub trials: usize,
    pub seed: u64,
}

impl DemoParams {
    fn cfg(&self) -> Result<PrimeConfig> {
        PrimeConfig::new(self.p, self.prec)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    fn report(&self, demo: &'static str, report: Vec<String>, pass: bool) -> DemoReport {
        DemoReport {
            demo,
            p: self.p,
            prec: self.prec,
            len: self.len,
            trials: self.trials,
            seed: self.seed,
            report,
            pass,
        }
    }
}

fn tally(label: &str, good: usize, total: usize, exact: bool) -> (String, bool) {
    let suffix = if exact { " exact" } else { "" };
    (
        format!("{label}: {good}/{total}{suffix}"),
        good == total,
    )
}

/// Adjoint identities, norm laws, annihilators, and the backward-shift
/// models (difference operator, division operator, coherent states).
pub fn duality(params: &DemoParams) -> Result<DemoReport> {
    let cfg = params.cfg()?;
    let mut rng = params.rng();
    let trials = params.trials;
    let len = params.len;
    let mut lines = Vec::new();
    let mut pass = true;
    let mut push = |line: String, ok: bool, pass: &mut bool| {
        lines.push(line);
        *pass &= ok;
    };

    let mut adjoint = 0;
    let mut isometry = 0;
    let mut contraction = 0;
    for _ in 0..trials {
        let x = BoundedVector::from_c0(sample::c0_vector(&mut rng, cfg, len));
        let y = sample::c0_vector(&mut rng, cfg, len);
        let first = pairing(&x, &y.shift_s())? == pairing(&x.shift_t(), &y)?;
        let second = pairing(&x, &y.shift_t())? == pairing(&x.shift_s(), &y)?;
        if first && second {
            adjoint += 1;
        }
        if y.shift_s().sup_norm() == y.sup_norm() {
            isometry += 1;
        }
        if y.shift_t().sup_norm() <= y.sup_norm() {
            contraction += 1;
        }
    }
    let (line, ok) = tally("adjoint identities", adjoint, trials, true);
    push(line, ok, &mut pass);
    let (line, ok) = tally("shift isometry |Sx| = |x|", isometry, trials, false);
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "backward shift contraction |Tx| <= |x|",
        contraction,
        trials,
        false,
    );
    push(line, ok, &mut pass);

    let ann_trials = (trials / 2).max(1);
    let mut vanishing = 0;
    let mut invariant = 0;
    for _ in 0..ann_trials {
        let a = sample::integral_scalar(&mut rng, cfg, 2);
        let ann = annihilator_geometric(&a, len)?;
        let b = sample::c0_vector(&mut rng, cfg, len - 1);
        let target = b.shift_s().sub(&b.scale(&a)?)?;
        if pairing(&ann, &target)?.is_zero_at_precision() {
            vanishing += 1;
        }
        let shifted = ann.shift_t();
        if (0..len - 1).all(|n| match (shifted.entry(n), ann.entry(n).mul(&a)) {
            (lhs, Ok(rhs)) => lhs == rhs,
            _ => false,
        }) {
            invariant += 1;
        }
    }
    let (line, ok) = tally(
        "annihilator pairing <(a^n), Sb - a b> = 0",
        vanishing,
        ann_trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "annihilator T-invariance T(a^n) = a (a^n)",
        invariant,
        ann_trials,
        false,
    );
    push(line, ok, &mut pass);

    let mut s2_ok = 0;
    let mut t2_ok = 0;
    let mut t1_ok = 0;
    for _ in 0..trials {
        let phi = sample::grid(&mut rng, cfg, len);
        let b = mahler_coeffs(&phi)?;
        let lhs_s = mahler_coeffs(&indefinite_sum(&phi)?)?;
        let rhs_s = b.coeffs().shift_s();
        if (0..=len).all(|n| lhs_s.entry(n) == rhs_s.entry(n)) {
            s2_ok += 1;
        }
        let lhs_t = mahler_coeffs(&difference(&phi)?)?;
        if lhs_t.coeffs() == &b.coeffs().shift_t() {
            t2_ok += 1;
        }
        let f = sample::series(&mut rng, cfg, len);
        if f.t1_apply().coeffs() == &f.coeffs().shift_t() {
            t1_ok += 1;
        }
    }
    let (line, ok) = tally(
        "indefinite-sum conjugacy coeffs(S2 phi) = S coeffs(phi)",
        s2_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "difference conjugacy coeffs(T2 phi) = T coeffs(phi)",
        t2_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "division conjugacy coeffs(T1 f) = T coeffs(f)",
        t1_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);

    let coherent_trials = 20;
    let mut eigen = 0;
    let mut geometric = 0;
    for _ in 0..coherent_trials {
        let lambda = sample::scalar_in_val_range(&mut rng, cfg, 1, 3);
        let phi = coherent_state(&lambda, len)?;
        let lhs = difference(&phi)?;
        let rhs = GridFunction::new(
            cfg,
            phi.values()[..len]
                .iter()
                .map(|v| v.mul(&lambda))
                .collect::<Result<Vec<_>>>()?,
        )?;
        if lhs == rhs {
            eigen += 1;
        }
        let b = mahler_coeffs(&phi)?;
        let mut power = PadicScalar::one(cfg);
        let mut all = true;
        for n in 0..=len {
            if b.entry(n) != power {
                all = false;
                break;
            }
            power = power.mul(&lambda)?;
        }
        if all {
            geometric += 1;
        }
    }
    let (line, ok) = tally(
        "coherent eigenrelation T2 phi = lambda phi",
        eigen,
        coherent_trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "coherent coefficients are (lambda^n)",
        geometric,
        coherent_trials,
        true,
    );
    push(line, ok, &mut pass);

    Ok(params.report("duality", lines, pass))
}

/// The invariant-subspace lattice and the commutant of the unilateral
/// shift in the multiplication model.
pub fn thm1(params: &DemoParams) -> Result<DemoReport> {
    let cfg = params.cfg()?;
    let mut rng = params.rng();
    let trials = params.trials;
    let len = params.len;
    let mut lines = Vec::new();
    let mut pass = true;
    let mut push = |line: String, ok: bool, pass: &mut bool| {
        lines.push(line);
        *pass &= ok;
    };

    let mut s1_ok = 0;
    let mut gauss_ok = 0;
    for _ in 0..trials {
        let f = sample::series(&mut rng, cfg, len);
        if f.s1_apply().coeffs() == &f.coeffs().shift_s() {
            s1_ok += 1;
        }
        let g = sample::series(&mut rng, cfg, len / 2);
        let prod = f.multiply(&g)?;
        if prod.gauss_norm() == f.gauss_norm() * g.gauss_norm() {
            gauss_ok += 1;
        }
    }
    let (line, ok) = tally(
        "multiplication conjugacy coeffs(S1 f) = S coeffs(f)",
        s1_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "Gauss norm multiplicativity |f g| = |f| |g|",
        gauss_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);

    let mut members = 0;
    let mut oracle_agree = 0;
    let mut lattice_agree = 0;
    for trial in 0..trials {
        let d = rng.gen_range(1..=3);
        let poly = sample::monic_poly(&mut rng, cfg, d);
        let f = sample::series(&mut rng, cfg, len / 2);
        let g = poly.as_series().multiply(&f)?;
        if ideal_member(&g, &poly)?.member {
            members += 1;
        }

        let d_split = rng.gen_range(1..=3);
        let (split, roots) = sample::split_monic_poly(&mut rng, cfg, d_split);
        let candidate = if trial % 2 == 0 {
            split.as_series().multiply(&sample::series(&mut rng, cfg, 4))?
        } else {
            sample::series(&mut rng, cfg, 6)
        };
        let verdict = ideal_member(&candidate, &split)?.member;
        let mut oracle = true;
        for root in &roots {
            let mult = roots.iter().filter(|r| *r == root).count();
            let mut h = candidate.clone();
            for _ in 0..mult {
                if !h.evaluate(root)?.is_zero_at_precision() {
                    oracle = false;
                }
                h = h.derivative()?;
            }
        }
        if verdict == oracle {
            oracle_agree += 1;
        }

        let d_prime = rng.gen_range(1..=3);
        let p_prime = sample::monic_poly(&mut rng, cfg, d_prime);
        let d_second = rng.gen_range(1..=3);
        let p_second = sample::monic_poly(&mut rng, cfg, d_second);
        if divides(&p_second, &p_prime)? == ideal_member(&p_prime.as_series(), &p_second)?.member {
            lattice_agree += 1;
        }
    }
    let (line, ok) = tally(
        "constructed multiples are ideal members",
        members,
        trials,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "membership agrees with root-evaluation oracle",
        oracle_agree,
        trials,
        false,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "divisibility agrees with ideal containment",
        lattice_agree,
        trials,
        false,
    );
    push(line, ok, &mut pass);

    let half = (trials / 2).max(1);
    let mut invariant = 0;
    let mut error_exact = 0;
    let mut action_exact = 0;
    for _ in 0..half {
        let d_inv = rng.gen_range(1..=3);
        let poly = sample::monic_poly(&mut rng, cfg, d_inv);
        let g = poly.as_series().multiply(&sample::series(&mut rng, cfg, 4))?;
        if ideal_member(&g.s1_apply(), &poly)?.member {
            invariant += 1;
        }

        let phi = sample::series(&mut rng, cfg, len);
        let cutoff = rng.gen_range(2..len / 2 + 2);
        let approx = commutant_poly_approx(&phi, cutoff)?;
        let tail = (cutoff + 1..len)
            .map(|n| phi.coefficient(n).abs())
            .max()
            .unwrap_or(PNorm::ZERO);
        if approx.error() == tail {
            error_exact += 1;
        }
        let mut all = true;
        for j in 0..3usize {
            let e_j = TateSeries::monomial(cfg, j);
            let image = approx.apply(&e_j)?;
            if approx.apply_operator_sum(&e_j)? != image {
                all = false;
            }
            let exact = phi.multiply(&e_j)?;
            for n in 0..=cutoff + j {
                if image.coefficient(n) != exact.coefficient(n) {
                    all = false;
                }
            }
            if exact.sub(&image)?.gauss_norm() > approx.error() {
                all = false;
            }
        }
        if all {
            action_exact += 1;
        }
    }
    let (line, ok) = tally("ideals invariant under S1", invariant, half, true);
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "commutant error equals tail maximum",
        error_exact,
        half,
        true,
    );
    push(line, ok, &mut pass);
    let (line, ok) = tally(
        "approximant matches multiplication on e_0..e_2",
        action_exact,
        half,
        true,
    );
    push(line, ok, &mut pass);

    Ok(params.report("thm1", lines, pass))
}

/// Cyclic vectors for the backward shift: the error formulas of the two
/// gap schedules and the densification construction.
pub fn thm2(params: &DemoParams) -> Result<DemoReport> {
    let cfg = params.cfg()?;
    let mut rng = params.rng();
    let p = params.p;
    let prec = params.prec as i64;
    let mut lines = Vec::new();
    let mut pass = true;
    let mut push = |line: String, ok: bool, pass: &mut bool| {
        lines.push(line);
        *pass &= ok;
    };

    // quadratic gap: largest checkable step within precision and length
    let budget_k = (0..)
        .take_while(|k| (k + 1) * (k + 2) / 2 < prec)
        .last()
        .unwrap_or(0) as usize;
    let k_max = budget_k.min(params.len.saturating_sub(2));
    let x = cyclic_vector(CyclicKind::QuadraticGap, 0, k_max + 2, cfg)?;
    let mut exact = true;
    for k in 0..=k_max {
        if cyclic_error(&x, k)? != PNorm::from_exponent(k as i64 + 1) {
            exact = false;
        }
    }
    push(
        format!(
            "quadratic-gap cyclic errors p^-(k+1) for k = 0..{k_max}: {}",
            if exact { "exact" } else { "FAIL" }
        ),
        exact,
        &mut pass,
    );

    // the doubly-exponential schedule, as far as the precision allows
    let mut k2 = None;
    let mut e = 1i64;
    loop {
        let next = e.checked_mul(p as i64);
        match next {
            Some(v) if v < prec => {
                k2 = Some(k2.map_or(0usize, |k| k + 1));
                e = v;
            }
            _ => break,
        }
    }
    match k2 {
        Some(k2) => {
            let k2 = k2.min(params.len.saturating_sub(2));
            let y = cyclic_vector(CyclicKind::DoublyExponential, 0, k2 + 2, cfg)?;
            let mut exact = true;
            for k in 0..=k2 {
                let gap = (p as i64).pow(k as u32 + 1) - (p as i64).pow(k as u32);
                if cyclic_error(&y, k)? != PNorm::from_exponent(gap) {
                    exact = false;
                }
            }
            push(
                format!(
                    "doubly-exponential cyclic errors p^-(p^(k+1)-p^k) for k = 0..{k2}: {}",
                    if exact { "exact" } else { "FAIL" }
                ),
                exact,
                &mut pass,
            );
        }
        None => push(
            "doubly-exponential schedule: skipped (p already exceeds the precision)".into(),
            true,
            &mut pass,
        ),
    }

    // strictly increasing gaps for both schedules
    let schedules_ok = [CyclicKind::QuadraticGap, CyclicKind::DoublyExponential]
        .iter()
        .all(|kind| {
            let vals: Vec<i64> = (0..6)
                .filter_map(|k| kind.valuation_at(k, p))
                .collect();
            vals.windows(3).all(|w| w[2] - w[1] > w[1] - w[0])
        });
    push(
        format!(
            "gap schedules strictly increasing: {}",
            if schedules_ok { "ok" } else { "FAIL" }
        ),
        schedules_ok,
        &mut pass,
    );

    // the proof's e_n approximants for n <= 2 follow the same ratio
    let n_max = 2.min(k_max);
    let mut basis_ok = true;
    for n in 0..=n_max {
        for k in n..=(n + 1).min(k_max) {
            let err = basis_approximation_error(&x, n, k)?;
            let vk = x.entry(k).valuation().unwrap();
            let ratio = (1..x.len() - k)
                .filter_map(|j| x.entry(k + j).valuation())
                .map(|v| PNorm::from_exponent(v - vk))
                .max()
                .unwrap_or(PNorm::ZERO);
            if err != ratio {
                basis_ok = false;
            }
        }
    }
    push(
        format!(
            "basis approximants e_0..e_{n_max} follow the ratio formula: {}",
            if basis_ok { "ok" } else { "FAIL" }
        ),
        basis_ok,
        &mut pass,
    );

    // densification
    let dens_trials = (params.trials / 2).max(1);
    let mut dens_ok = 0;
    for _ in 0..dens_trials {
        let y = sample::decaying_vector(&mut rng, cfg, 6);
        let eps_exp = rng.gen_range(2..=4);
        let out = densify_cyclic(&y, eps_exp, CyclicKind::QuadraticGap, 2)?;
        let mut good = out.distance < PNorm::from_exponent(eps_exp);
        let k = out.k0.max(1);
        if k + 1 < out.vector.len() {
            good &= cyclic_error(&out.vector, k + 1)? < cyclic_error(&out.vector, k)?;
        }
        if good {
            dens_ok += 1;
        }
    }
    let (line, ok) = tally(
        "densification |y - y~| < eps with decay check",
        dens_ok,
        dens_trials,
        false,
    );
    push(line, ok, &mut pass);

    Ok(params.report("thm2", lines, pass))
}

/// The differentiation model and the universality of the backward shift
/// over Q_p^d.
pub fn thm3(params: &DemoParams) -> Result<DemoReport> {
    let cfg = params.cfg()?;
    let mut rng = params.rng();
    let trials = params.trials;
    let mut lines = Vec::new();
    let mut pass = true;
    let mut push = |line: String, ok: bool, pass: &mut bool| {
        lines.push(line);
        *pass &= ok;
    };

    let mut t3_ok = 0;
    for _ in 0..trials {
        let g = FactorialSeries::new(sample::c0_vector(&mut rng, cfg, params.len));
        if g.t3_apply().coeffs() == &g.coeffs().shift_t() && g.t3_apply().norm() <= g.norm() {
            t3_ok += 1;
        }
    }
    let (line, ok) = tally(
        "differentiation conjugacy coeffs(T3 g) = T coeffs(g)",
        t3_ok,
        trials,
        true,
    );
    push(line, ok, &mut pass);

    let radius_ok = radius_check(10_000, params.p)?;
    push(
        format!(
            "radius exponent check n/(p-1) >= nu(n) for n <= 10000: {}",
            if radius_ok { "ok" } else { "FAIL" }
        ),
        radius_ok,
        &mut pass,
    );

    let deficit_ok = (0..=1000u64)
        .all(|n| n - (params.p - 1) * factorial_valuation(n, params.p) == digit_sum(n, params.p));
    push(
        format!(
            "digit-sum deficit identity for n <= 1000: {}",
            if deficit_ok { "ok" } else { "FAIL" }
        ),
        deficit_ok,
        &mut pass,
    );

    let blocks = 8.min(params.prec as usize / 3).max(2);
    let mut isometry = 0;
    let mut universal = 0;
    for trial in 0..trials {
        let d = trial % 3 + 1;
        let a = sample::contraction_matrix(&mut rng, cfg, d);
        let u = sample::e_vector(&mut rng, cfg, d);
        let w = embed_w(&a, &u, blocks)?;
        if w.sup_norm() == u.sup_norm() {
            isometry += 1;
        }
        if verify_universality(&a, &u, blocks)?.passed() {
            universal += 1;
        }
    }
    let (line, ok) = tally("embedding isometry |W u| = |u|", isometry, trials, true);
    push(line, ok, &mut pass);
    let (line, ok) = tally("universality T_E W u = W A u", universal, trials, true);
    push(line, ok, &mut pass);

    let half = (trials / 2).max(1);
    let mut certified = 0;
    for _ in 0..half {
        let d = rng.gen_range(1..=3);
        let a = sample::contraction_matrix(&mut rng, cfg, d);
        let u = sample::e_vector(&mut rng, cfg, d);
        let w = embed_w(&a, &u, blocks)?;
        let nu = u.sup_norm();
        let good = (0..blocks).all(|k| {
            let bound = match nu.exponent() {
                Some(e) => PNorm::from_exponent(e + k as i64),
                None => PNorm::ZERO,
            };
            w.block(k).sup_norm() <= bound
        });
        if good {
            certified += 1;
        }
    }
    let (line, ok) = tally(
        "contraction certificate |A^k u| <= p^-k |u|",
        certified,
        half,
        false,
    );
    push(line, ok, &mut pass);

    Ok(params.report("thm3", lines, pass))
}
