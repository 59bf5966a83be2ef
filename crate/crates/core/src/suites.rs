//! Named verification suites over seeded random instances.
//!
//! Every suite is deterministic under (params, seed): instance dimensions,
//! coefficients, and evaluation points all derive from one ChaCha8 stream.
//! Per-instance checks aggregate into one report per property, keeping the
//! worst (largest-ratio) instance so a single failure is visible.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::cheb::{
    cheb_psi_coeff, chebyshev, markov_coefficient_check, markov_growth_trace, markov_number,
    psi_expand, sup_norm_unit_interval, two_block_constant, UnivariatePoly, MARKOV_CHECK_TOL,
};
use crate::cube::{BooleanFunction, FourierSpectrum};
use crate::error::{Error, Result};
use crate::inequalities::{
    aa_flat_case, aa_ratio, bh_ratio, blei_check, hypercontractivity_check,
    lorentz_dominance_check, lorentz_norm, noise_contraction_check, recursion_upper_bound, Tensor,
};
use crate::polarization::{
    class_ratio_check, homogeneous_polarization_check, two_block_bound_check, two_block_eval,
    two_block_oracle, two_block_weights, TetrahedralPoly,
};
use crate::report::{InequalityReport, SuiteResult};
use crate::witness::{majority, majority_part_norm, RandomSpectrum};

/// Size knobs shared by all suites.
#[derive(Debug, Clone, Copy)]
pub struct SuiteParams {
    /// Max cube dimension for random instances.
    pub n: u32,
    /// Max degree for random instances.
    pub d: u32,
    /// Random instances per property.
    pub trials: u32,
    pub seed: u64,
    /// Relative tolerance for inequality comparisons.
    pub tol: f64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 5,
            d: 3,
            trials: 60,
            seed: 0,
            tol: crate::report::DEFAULT_TOL,
        }
    }
}

/// The named suites; `All` runs everything in a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SuiteName {
    Fourier,
    Hyper,
    Blei,
    Polarization,
    Markov,
    Psi,
    Lorentz,
    Aa,
    All,
}

impl SuiteName {
    pub const ALL_NAMES: [&'static str; 9] = [
        "fourier",
        "hyper",
        "blei",
        "polarization",
        "markov",
        "psi",
        "lorentz",
        "aa",
        "all",
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SuiteName::Fourier => "fourier",
            SuiteName::Hyper => "hyper",
            SuiteName::Blei => "blei",
            SuiteName::Polarization => "polarization",
            SuiteName::Markov => "markov",
            SuiteName::Psi => "psi",
            SuiteName::Lorentz => "lorentz",
            SuiteName::Aa => "aa",
            SuiteName::All => "all",
        }
    }
}

impl std::str::FromStr for SuiteName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fourier" => Ok(SuiteName::Fourier),
            "hyper" => Ok(SuiteName::Hyper),
            "blei" => Ok(SuiteName::Blei),
            "polarization" => Ok(SuiteName::Polarization),
            "markov" => Ok(SuiteName::Markov),
            "psi" => Ok(SuiteName::Psi),
            "lorentz" => Ok(SuiteName::Lorentz),
            "aa" => Ok(SuiteName::Aa),
            "all" => Ok(SuiteName::All),
            other => Err(Error::invalid(format!(
                "unknown suite '{other}' (expected one of {})",
                SuiteName::ALL_NAMES.join(", ")
            ))),
        }
    }
}

/// Runs one suite and aggregates its reports.
pub fn run_suite(name: SuiteName, p: &SuiteParams) -> Result<SuiteResult> {
    let mut echo = BTreeMap::new();
    echo.insert("n".to_string(), p.n as f64);
    echo.insert("d".to_string(), p.d as f64);
    echo.insert("trials".to_string(), p.trials as f64);
    echo.insert("tol".to_string(), p.tol);
    let mut result = SuiteResult::new(name.name(), p.seed, echo);
    match name {
        SuiteName::Fourier => fourier_suite(p, &mut result)?,
        SuiteName::Hyper => hyper_suite(p, &mut result)?,
        SuiteName::Blei => blei_suite(p, &mut result)?,
        SuiteName::Polarization => polarization_suite(p, &mut result)?,
        SuiteName::Markov => markov_suite(p, &mut result)?,
        SuiteName::Psi => psi_suite(p, &mut result)?,
        SuiteName::Lorentz => lorentz_suite(p, &mut result)?,
        SuiteName::Aa => aa_suite(p, &mut result)?,
        SuiteName::All => {
            fourier_suite(p, &mut result)?;
            markov_suite(p, &mut result)?;
            psi_suite(p, &mut result)?;
            polarization_suite(p, &mut result)?;
            hyper_suite(p, &mut result)?;
            blei_suite(p, &mut result)?;
            lorentz_suite(p, &mut result)?;
            aa_suite(p, &mut result)?;
        }
    }
    Ok(result)
}

/// Keeps the instance with the largest ratio under a fixed name.
struct Worst(Option<InequalityReport>);

impl Worst {
    fn new() -> Self {
        Worst(None)
    }

    fn consider(&mut self, r: InequalityReport) {
        let replace = match &self.0 {
            None => true,
            Some(cur) => r.ratio > cur.ratio || (r.failed() && !cur.failed()),
        };
        if replace {
            self.0 = Some(r);
        }
    }

    fn finish(self, result: &mut SuiteResult, trials: u32) {
        if let Some(mut r) = self.0 {
            r.params.insert("trials".to_string(), trials as f64);
            result.push(r);
        }
    }
}

fn rng_for(p: &SuiteParams, salt: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
    rng.set_stream(salt);
    rng
}

fn random_instance(
    rng: &mut ChaCha8Rng,
    p: &SuiteParams,
    n_cap: u32,
    d_cap: u32,
) -> Result<FourierSpectrum> {
    let n = rng.random_range(1..=p.n.clamp(1, n_cap));
    let d = rng.random_range(0..=p.d.min(d_cap).min(n));
    let seed = rng.random::<u64>();
    RandomSpectrum::new(n, d).generate(seed, 0)
}

fn random_poly(rng: &mut ChaCha8Rng, d: u32) -> UnivariatePoly {
    let mut coeffs: Vec<f64> = (0..=d).map(|_| rng.sample(StandardNormal)).collect();
    if coeffs[d as usize] == 0.0 {
        coeffs[d as usize] = 1.0;
    }
    UnivariatePoly::new(coeffs).expect("finite coefficients")
}

// ---------------------------------------------------------------------------
// fourier
// ---------------------------------------------------------------------------

fn fourier_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 1);
    let mut round_trip = 0.0f64;
    let mut parseval = 0.0f64;
    let mut influence_sum = 0.0f64;
    let mut semigroup = 0.0f64;
    let mut extension = 0.0f64;
    for _ in 0..p.trials {
        let n = rng.random_range(1..=p.n.max(1));
        let values: Vec<f64> = (0..1usize << n)
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        let f = BooleanFunction::new(n, values)?;
        let s = f.walsh_transform();

        let back = s.inverse_transform()?;
        for (a, b) in f.values().iter().zip(back.values()) {
            round_trip = round_trip.max((a - b).abs());
        }

        let mean_sq = f.p_norm(2.0)?.powi(2);
        parseval = parseval.max((s.energy() - mean_sq).abs() / mean_sq.max(1e-300));

        let weighted: f64 = s
            .coefficients()
            .iter()
            .map(|(&m, &c)| m.count_ones() as f64 * c * c)
            .sum();
        let inf_sum: f64 = (1..=n).map(|j| s.influence(j).unwrap()).sum();
        influence_sum = influence_sum.max((weighted - inf_sum).abs());

        let (rho1, rho2) = (rng.random_range(-0.95..0.95), rng.random_range(-0.95..0.95));
        let twice = s.noise_operator(rho1).noise_operator(rho2);
        let once = s.noise_operator(rho1 * rho2);
        semigroup = semigroup.max(twice.max_abs_diff(&once));

        // Random convex combinations never exceed the vertex sup.
        let sup = f.sup_norm();
        let q = TetrahedralPoly::new(&s);
        for _ in 0..20 {
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let v = q.eval(&x)?.abs();
            if sup > 0.0 {
                extension = extension.max(v / sup);
            }
        }
    }
    result.push(
        InequalityReport::asserted("fourier/round-trip", round_trip, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("fourier/parseval", parseval, 1e-9, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("fourier/influence-sum", influence_sum, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("fourier/noise-semigroup", semigroup, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("fourier/tetrahedral-extension", extension, 1.0, 1e-12)
            .with_param("trials", p.trials as f64),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// markov
// ---------------------------------------------------------------------------

fn markov_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 2);
    let d_max = p.d.clamp(1, 15);

    let mut random_bound = Worst::new();
    for _ in 0..p.trials {
        let d = rng.random_range(1..=d_max);
        random_bound.consider(markov_coefficient_check(
            &random_poly(&mut rng, d),
            d,
            MARKOV_CHECK_TOL,
        )?);
    }
    random_bound.finish(result, p.trials);

    let mut anchor = Worst::new();
    let mut anchor_low = 2.0f64;
    for d in 1..=d_max {
        let r = markov_coefficient_check(&chebyshev(d)?, d, MARKOV_CHECK_TOL)?;
        anchor_low = anchor_low.min(r.ratio);
        anchor.consider(r);
    }
    anchor.finish(result, d_max);
    // The extremal ratio is 1 from both sides.
    result.push(
        InequalityReport::asserted("markov-chebyshev-attains", 1.0 - 1e-6, anchor_low, 0.0)
            .with_param("d_max", d_max as f64),
    );

    let mut leading_exact = true;
    for d in 1..=30u32 {
        leading_exact &= markov_number(d, d)? == 1u128 << (d - 1);
    }
    result.push(
        InequalityReport::asserted(
            "markov-leading-exact",
            if leading_exact { 0.0 } else { 1.0 },
            0.0,
            0.0,
        )
        .with_param("d_max", 30.0),
    );

    let trace = markov_growth_trace(40)?;
    let worst = trace.iter().cloned().fold(0.0, f64::max);
    result.push(
        InequalityReport::asserted("markov-growth-silver", worst, 1.0 + 2f64.sqrt(), 1e-12)
            .with_param("d_max", 40.0),
    );
    result.push(InequalityReport::asserted(
        "markov-growth-d30-low",
        2.2,
        trace[29],
        0.0,
    ));
    Ok(())
}

// ---------------------------------------------------------------------------
// psi
// ---------------------------------------------------------------------------

fn psi_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 3);
    let d = p.d.clamp(1, 20);

    // Chebyshev anchor: interpolation route vs exact coefficients, d <= 20.
    let mut anchor_dev = 0.0f64;
    let mut signs_match = true;
    for dd in 1..=20u32 {
        let e = psi_expand(&chebyshev(dd)?, dd)?;
        for n in 0..=dd {
            let exact = cheb_psi_coeff(n, dd)? as f64;
            let got = e.coeffs()[n as usize];
            anchor_dev = anchor_dev.max((got - exact).abs() / exact.abs().max(1.0));
            signs_match &= got.signum() == exact.signum();
        }
    }
    result.push(
        InequalityReport::asserted("psi-chebyshev-anchor", anchor_dev, 1e-6, 0.0)
            .with_param("d_max", 20.0),
    );
    result.push(InequalityReport::asserted(
        "psi-chebyshev-signs",
        if signs_match { 0.0 } else { 1.0 },
        0.0,
        0.0,
    ));

    // Extremality: normalized polynomials stay below the Chebyshev pattern.
    let mut extremal = Worst::new();
    for _ in 0..p.trials {
        let q = random_poly(&mut rng, d);
        let (sup, _) = sup_norm_unit_interval(&q);
        let q = q.add_scaled(&UnivariatePoly::zero(), 1.0 / sup, 0.0)?;
        let e = psi_expand(&q, d)?;
        let mut worst = (0.0f64, 0u32);
        for n in 0..=d {
            let bound = cheb_psi_coeff(n, d)?.unsigned_abs() as f64;
            let r = e.coeffs()[n as usize].abs() / bound;
            if r > worst.0 {
                worst = (r, n);
            }
        }
        extremal.consider(
            InequalityReport::asserted("psi-extremality", worst.0, 1.0, 1e-6)
                .with_param("d", d as f64)
                .with_param("n", worst.1 as f64),
        );
    }
    extremal.finish(result, p.trials);

    // Linearity and reconstruction on random pairs.
    let mut linear = 0.0f64;
    let mut reconstruct = 0.0f64;
    for _ in 0..p.trials {
        let a = random_poly(&mut rng, d);
        let b = random_poly(&mut rng, d);
        let (alpha, beta) = (rng.random_range(-2.0..2.0), rng.random_range(-2.0..2.0));
        let combo = a.add_scaled(&b, alpha, beta)?;
        let ea = psi_expand(&a, d)?;
        let eb = psi_expand(&b, d)?;
        let ec = psi_expand(&combo, d)?;
        for n in 0..=d as usize {
            let lhs = ec.coeffs()[n];
            let rhs = alpha * ea.coeffs()[n] + beta * eb.coeffs()[n];
            linear = linear.max((lhs - rhs).abs() / rhs.abs().max(1.0));
        }
        for k in 0..64 {
            let t = -1.0 + 2.0 * k as f64 / 63.0;
            reconstruct = reconstruct
                .max((ec.reconstruct(t) - combo.eval(t)).abs() / combo.eval(t).abs().max(1.0));
        }
    }
    result.push(
        InequalityReport::asserted("psi-linearity", linear, 1e-9, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("psi-reconstruction", reconstruct, 1e-8, 0.0)
            .with_param("trials", p.trials as f64),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// polarization
// ---------------------------------------------------------------------------

fn polarization_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 4);

    let mut oracle_dev = 0.0f64;
    let mut diagonal_dev = 0.0f64;
    for _ in 0..p.trials {
        let s = random_instance(&mut rng, p, 5, 5)?;
        let q = TetrahedralPoly::new(&s);
        let d = q.degree();
        let m = rng.random_range(0..=d);
        let w = two_block_weights(m, d)?;
        let x: Vec<f64> = (0..q.n()).map(|_| rng.random_range(-1.0..1.0)).collect();
        let y: Vec<f64> = (0..q.n()).map(|_| rng.random_range(-1.0..1.0)).collect();
        oracle_dev = oracle_dev
            .max((two_block_eval(&q, &w, &x, &y)? - two_block_oracle(&q, m, &x, &y)?).abs());
        diagonal_dev = diagonal_dev.max((two_block_eval(&q, &w, &x, &x)? - q.eval(&x)?).abs());
    }
    result.push(
        InequalityReport::asserted("polarization/oracle-equivalence", oracle_dev, 1e-9, 0.0)
            .with_param("trials", p.trials as f64),
    );
    result.push(
        InequalityReport::asserted("polarization/diagonal", diagonal_dev, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );

    let mut two_block = Worst::new();
    let mut homogeneous = Worst::new();
    for _ in 0..p.trials {
        let n = rng.random_range(1..=p.n.clamp(1, 4));
        let d = rng.random_range(1..=p.d.min(n).clamp(1, 4));
        let seed = rng.random::<u64>();
        let s = RandomSpectrum::new(n, d).generate(seed, 0)?;
        let q = TetrahedralPoly::new(&s);
        for m in 0..=q.degree() / 2 {
            two_block.consider(two_block_bound_check(&q, m, p.tol)?);
        }

        let hs = RandomSpectrum {
            levels: Some(vec![d]),
            ..RandomSpectrum::new(n, d)
        }
        .generate(seed, 1)?;
        if hs.degree() == d {
            let hq = TetrahedralPoly::new(&hs);
            for k in 1..=d {
                homogeneous.consider(homogeneous_polarization_check(&hq, k, p.tol)?);
            }
        }
    }
    two_block.finish(result, p.trials);
    homogeneous.finish(result, p.trials);

    let mut class = Worst::new();
    for d in 1..=p.d.clamp(1, 10) {
        for m in 0..=d {
            class.consider(class_ratio_check(m, d, p.trials, p.seed, p.tol)?);
        }
    }
    class.finish(result, p.trials);

    // Exact two-block constants stay below the 2 d^m cap.
    let mut cap_ok = true;
    let mut cap_worst = 0.0f64;
    for d in 0..=30u32 {
        for m in 0..=d / 2 {
            let c = two_block_constant(m, d)?;
            cap_ok &= c.within_cap(m, d)?;
            cap_worst = cap_worst.max(c.value / c.cap);
        }
    }
    result.push(
        InequalityReport::asserted("polarization/constant-cap", cap_worst, 1.0, 0.0)
            .with_param("exact_ok", if cap_ok { 1.0 } else { 0.0 })
            .with_param("d_max", 30.0),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// hyper
// ---------------------------------------------------------------------------

fn hyper_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 5);
    let mut hyper = Worst::new();
    let mut contraction = Worst::new();
    for _ in 0..p.trials {
        let s = random_instance(&mut rng, p, 8, 4)?;
        let f = s.inverse_transform()?;
        for pv in [1.0, 4.0 / 3.0, 1.5, 2.0] {
            hyper.consider(hypercontractivity_check(&f, pv, p.tol)?);
        }
        contraction.consider(noise_contraction_check(
            &f,
            2.0,
            4.0,
            1.0 / 3f64.sqrt(),
            p.tol,
        )?);
        contraction.consider(noise_contraction_check(
            &f,
            1.5,
            1.5,
            rng.random_range(0.0..1.0),
            p.tol,
        )?);
    }
    hyper.finish(result, p.trials);
    contraction.finish(result, p.trials);
    Ok(())
}

// ---------------------------------------------------------------------------
// blei
// ---------------------------------------------------------------------------

fn blei_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 6);
    let mut blei = Worst::new();
    let mut tight = 0.0f64;
    for _ in 0..p.trials {
        let d = rng.random_range(1..=p.d.clamp(1, 4));
        let n = rng.random_range(1..=p.n.clamp(1, 4)) as usize;
        let data: Vec<f64> = (0..n.pow(d)).map(|_| rng.sample(StandardNormal)).collect();
        let t = Tensor::new(n, d, data)?;
        for k in 1..=d {
            blei.consider(blei_check(&t, k, p.tol)?);
        }
        let eq = blei_check(&t, d, p.tol)?;
        tight = tight.max((eq.lhs - eq.rhs).abs() / eq.lhs.max(1e-300));
    }
    blei.finish(result, p.trials);
    result.push(
        InequalityReport::asserted("blei-k-equals-d-equality", tight, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// lorentz
// ---------------------------------------------------------------------------

fn lorentz_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 7);
    let mut dominance = Worst::new();
    let mut invariance = 0.0f64;
    for _ in 0..p.trials {
        let s = random_instance(&mut rng, p, 8, 6)?;
        if s.is_zero() {
            continue;
        }
        dominance.consider(lorentz_dominance_check(&s, p.tol)?);

        // Relabeling coordinates preserves the norm exactly.
        let mut perm: Vec<u32> = (0..s.n()).collect();
        for i in 0..perm.len() {
            let j = rng.random_range(i..perm.len());
            perm.swap(i, j);
        }
        let permuted: Vec<(u64, f64)> = s
            .coefficients()
            .iter()
            .map(|(&mask, &v)| {
                let mut new_mask = 0u64;
                for (i, &pi) in perm.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        new_mask |= 1 << pi;
                    }
                }
                (new_mask, v)
            })
            .collect();
        let t = FourierSpectrum::new(s.n(), permuted)?;
        invariance = invariance.max((lorentz_norm(&s) - lorentz_norm(&t)).abs());
    }
    dominance.finish(result, p.trials);
    result.push(
        InequalityReport::asserted("lorentz-rearrangement-invariance", invariance, 0.0, 0.0)
            .with_param("trials", p.trials as f64),
    );

    // Degree-1 exactness of the BH quotient.
    let mut degree1 = 0.0f64;
    for _ in 0..p.trials {
        let n = rng.random_range(1..=p.n.max(1));
        let s = RandomSpectrum::new(n, 1).generate(rng.random::<u64>(), 0)?;
        if s.degree() == 1 {
            degree1 = degree1.max((bh_ratio(&s, p.tol)?.ratio - 1.0).abs());
        }
    }
    result.push(
        InequalityReport::asserted("bh-degree1-exact", degree1, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );
    Ok(())
}

// ---------------------------------------------------------------------------
// aa
// ---------------------------------------------------------------------------

fn aa_suite(p: &SuiteParams, result: &mut SuiteResult) -> Result<()> {
    let mut rng = rng_for(p, 8);
    let mut ratio = Worst::new();
    let mut chain_dev = 0.0f64;
    for _ in 0..p.trials {
        // Normalized to sup 1: the d^4 e^{4d} bound is for maps into [-1,1].
        let n = rng.random_range(1..=p.n.clamp(1, 8));
        let d = rng.random_range(1..=p.d.min(n).clamp(1, 4));
        let s = RandomSpectrum {
            normalize: true,
            ..RandomSpectrum::new(n, d)
        }
        .generate(rng.random::<u64>(), 0)?;
        if s.variance() == 0.0 {
            continue;
        }
        let r = aa_ratio(&s, p.tol)?;
        let var = r.params["var"];
        let sum_inf = r.params["sum_inf"];
        let chain = r.params["chain"];
        chain_dev = chain_dev
            .max((var - sum_inf).max(0.0))
            .max((sum_inf - chain).max(0.0));
        ratio.consider(r);
    }
    ratio.finish(result, p.trials);
    result.push(
        InequalityReport::asserted("aa-chain-monotone", chain_dev, 1e-12, 0.0)
            .with_param("trials", p.trials as f64),
    );

    let mut flat = Worst::new();
    for _ in 0..p.trials.min(50) {
        let n = rng.random_range(1..=p.n.clamp(1, 5));
        let d = rng.random_range(1..=p.d.min(n).clamp(1, 2));
        let alpha = rng.random_range(0.25..2.0);
        let signs: BTreeMap<u64, f64> = (1u64..1 << n)
            .filter(|m| m.count_ones() <= d)
            .map(|m| (m, if rng.random::<bool>() { 1.0 } else { -1.0 }))
            .collect();
        flat.consider(aa_flat_case(n, d, alpha, &signs, p.tol)?);
    }
    flat.finish(result, p.trials.min(50));

    // Recursion shape: log bound / sqrt(d log d) bounded up to 10^6.
    let mut shape = 0.0f64;
    for exp in 2..=6u32 {
        let d = 10u64.pow(exp);
        let b = recursion_upper_bound(d, 1.0)?;
        shape = shape.max(b.log_value / (d as f64 * (d as f64).ln()).sqrt());
    }
    result.push(InequalityReport::asserted(
        "recursion-shape",
        shape,
        12.0,
        0.0,
    ));

    // Majority anchors.
    let mut maj_dev = 0.0f64;
    for d in (1u32..=9).step_by(2) {
        let s = majority(d)?.walsh_transform();
        for m in (1..=d).step_by(2) {
            let enumerated = s.homogeneous_part(m)?.inverse_transform()?.sup_norm();
            maj_dev = maj_dev.max((majority_part_norm(d, m)? - enumerated).abs());
        }
    }
    result.push(
        InequalityReport::asserted("majority-part-norms", maj_dev, 1e-12, 0.0)
            .with_param("d_max", 9.0),
    );

    let maj3 = majority(3)?.walsh_transform();
    let got = bh_ratio(&maj3, p.tol)?.ratio;
    let expected = (4.0 * 2f64.powf(-1.5)).powf(2.0 / 3.0);
    result.push(InequalityReport::asserted(
        "majority3-bh-ratio",
        (got - expected).abs(),
        1e-12,
        0.0,
    ));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_suite_passes_at_default_sizes() {
        let p = SuiteParams::default();
        for name in [
            SuiteName::Fourier,
            SuiteName::Hyper,
            SuiteName::Blei,
            SuiteName::Polarization,
            SuiteName::Markov,
            SuiteName::Psi,
            SuiteName::Lorentz,
            SuiteName::Aa,
        ] {
            let r = run_suite(name, &p).unwrap();
            assert!(
                r.all_passed(),
                "{}: {:?}",
                name.name(),
                r.reports.iter().filter(|x| x.failed()).collect::<Vec<_>>()
            );
            assert!(!r.reports.is_empty());
        }
    }

    #[test]
    fn all_suite_is_deterministic() {
        let p = SuiteParams {
            trials: 20,
            seed: 7,
            ..SuiteParams::default()
        };
        let a = run_suite(SuiteName::All, &p).unwrap();
        let b = run_suite(SuiteName::All, &p).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert!(a.all_passed());
    }

    #[test]
    fn suite_names_parse() {
        for name in SuiteName::ALL_NAMES {
            assert_eq!(name.parse::<SuiteName>().unwrap().name(), name);
        }
        assert!("bogus".parse::<SuiteName>().is_err());
    }
}
