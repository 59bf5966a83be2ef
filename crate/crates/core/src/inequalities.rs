//! Certified inequality instances at concrete (n, d): Bohnenblust–Hille
//! ratios, Blei's mixed-norm interpolation formula, hypercontractive and
//! noise-contraction bounds, the Lorentz-norm dominance variant, the
//! Aaronson–Ambainis quantities, and the explicit recursion upper bound.

use std::collections::BTreeMap;

use crate::cube::{BooleanFunction, FourierSpectrum};
use crate::error::{Error, Result};
use crate::report::InequalityReport;
use crate::util::{binomial, pairwise_sum};

/// Capacity cap on dense tensors: n^d entries.
pub const MAX_TENSOR_ENTRIES: usize = 10_000_000;

/// The ℓ_{2d/(d+1)} sum of the Fourier coefficients, with d the actual
/// spectrum degree (the exponent is degree-coupled). A zero spectrum gives 0
/// and a constant gives its absolute value.
pub fn bh_lhs(s: &FourierSpectrum) -> f64 {
    let d = s.degree();
    if s.is_zero() {
        return 0.0;
    }
    if d == 0 {
        return s.coefficient(0).abs();
    }
    let p = 2.0 * d as f64 / (d as f64 + 1.0);
    let powered: Vec<f64> = s.coefficients().values().map(|c| c.abs().powf(p)).collect();
    pairwise_sum(&powered).powf(1.0 / p)
}

/// Empirical Bohnenblust–Hille quotient: bh_lhs over the enumerated sup norm.
/// No constant is asserted; the report carries the ratio for aggregation.
pub fn bh_ratio(s: &FourierSpectrum, tol: f64) -> Result<InequalityReport> {
    if s.is_zero() {
        return Err(Error::invalid(
            "bh ratio needs a nonzero spectrum".to_string(),
        ));
    }
    let (sup, row) = s.inverse_transform()?.sup_norm_witness();
    Ok(InequalityReport::observed("bh-ratio", bh_lhs(s), sup, tol)
        .with_witness(format!("sup at row {row}"))
        .with_param("n", s.n() as f64)
        .with_param("d", s.degree() as f64))
}

/// Dense array indexed by \[n\]^d in row-major order (last axis contiguous).
#[derive(Debug, Clone)]
pub struct Tensor {
    n: usize,
    d: u32,
    data: Vec<f64>,
}

impl Tensor {
    pub fn new(n: usize, d: u32, data: Vec<f64>) -> Result<Self> {
        if n == 0 || d == 0 {
            return Err(Error::invalid("tensor needs n >= 1 and d >= 1".to_string()));
        }
        let entries = n
            .checked_pow(d)
            .filter(|&e| e <= MAX_TENSOR_ENTRIES)
            .ok_or_else(|| {
                Error::capacity(format!("tensor size {n}^{d} exceeds {MAX_TENSOR_ENTRIES}"))
            })?;
        if data.len() != entries {
            return Err(Error::invalid(format!(
                "tensor data has {} entries, expected {n}^{d} = {entries}",
                data.len()
            )));
        }
        if data.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("non-finite tensor entry".to_string()));
        }
        Ok(Tensor { n, d, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }
}

/// Blei's mixed-norm bound: the full ℓ_{2d/(d+1)} norm against the geometric
/// mean over all C(d,k) position subsets S of the mixed (k, d-k) norms
/// (Σ_{i_1} (Σ_{i_2} a²)^{(1/2)·2k/(k+1)})^{(k+1)/(2k)}; the geometric mean
/// accumulates in log space.
pub fn blei_check(a: &Tensor, k: u32, tol: f64) -> Result<InequalityReport> {
    let d = a.d;
    if k == 0 || k > d {
        return Err(Error::invalid(format!(
            "blei block size k={k} out of range 1..={d}"
        )));
    }
    let p = 2.0 * d as f64 / (d as f64 + 1.0);
    let powered: Vec<f64> = a.data.iter().map(|v| v.abs().powf(p)).collect();
    let lhs = pairwise_sum(&powered).powf(1.0 / p);
    if lhs == 0.0 {
        return Ok(InequalityReport::asserted("blei", 0.0, 0.0, tol)
            .with_param("n", a.n as f64)
            .with_param("d", d as f64)
            .with_param("k", k as f64));
    }

    // Row-major strides: position t (1-based, t = 1 slowest) has stride n^{d-t}.
    let strides: Vec<usize> = (0..d).map(|t| a.n.pow(d - 1 - t)).collect();
    let outer_exp = k as f64 / (k as f64 + 1.0);
    let mut log_sum = 0.0f64;
    let mut subset_count = 0u64;
    for mask in 0u32..1 << d {
        if mask.count_ones() != k {
            continue;
        }
        subset_count += 1;
        let s_strides: Vec<usize> = (0..d as usize)
            .filter(|t| mask >> t & 1 == 1)
            .map(|t| strides[t])
            .collect();
        let c_strides: Vec<usize> = (0..d as usize)
            .filter(|t| mask >> t & 1 == 0)
            .map(|t| strides[t])
            .collect();
        let outer_cells = a.n.pow(k);
        let inner_cells = a.n.pow(d - k);
        let mut outer_terms = Vec::with_capacity(outer_cells);
        let mut inner_terms = vec![0.0f64; inner_cells];
        for oc in 0..outer_cells {
            let base = flat_offset(oc, a.n, &s_strides);
            for (ic, slot) in inner_terms.iter_mut().enumerate() {
                let v = a.data[base + flat_offset(ic, a.n, &c_strides)];
                *slot = v * v;
            }
            outer_terms.push(pairwise_sum(&inner_terms).sqrt().powf(2.0 * outer_exp));
        }
        let factor = pairwise_sum(&outer_terms).powf(1.0 / (2.0 * outer_exp));
        log_sum += factor.ln();
    }
    debug_assert_eq!(subset_count as u128, binomial(d as u64, k as u64)?);
    let rhs = (log_sum / subset_count as f64).exp();
    Ok(InequalityReport::asserted("blei", lhs, rhs, tol)
        .with_param("n", a.n as f64)
        .with_param("d", d as f64)
        .with_param("k", k as f64))
}

fn flat_offset(mut cell: usize, n: usize, strides: &[usize]) -> usize {
    let mut offset = 0;
    for &stride in strides.iter().rev() {
        offset += (cell % n) * stride;
        cell /= n;
    }
    offset
}

/// Hypercontractive bound for a degree-d function:
/// ‖f‖₂ ≤ (p-1)^{-d/2} ‖f‖_p for p in (1,2], and ‖f‖₂ ≤ e^d ‖f‖₁ at p = 1.
pub fn hypercontractivity_check(f: &BooleanFunction, p: f64, tol: f64) -> Result<InequalityReport> {
    if !(1.0..=2.0).contains(&p) {
        return Err(Error::invalid(format!(
            "hypercontractivity needs p in [1,2], got {p}"
        )));
    }
    let d = f.walsh_transform().degree();
    let lhs = f.p_norm(2.0)?;
    let factor = if p == 1.0 {
        (d as f64).exp()
    } else {
        (p - 1.0).powf(-(d as f64) / 2.0)
    };
    let rhs = factor * f.p_norm(p)?;
    Ok(
        InequalityReport::asserted("hypercontractivity", lhs, rhs, tol)
            .with_param("n", f.n() as f64)
            .with_param("d", d as f64)
            .with_param("p", p),
    )
}

/// Bonami–Gross contraction ‖T_ρ f‖_q ≤ ‖f‖_p for 1 < p ≤ q ≤ ∞ and
/// ρ ≤ √((p-1)/(q-1)); with ρ outside the admissible range the report is
/// constructed without asserting pass and flagged "outside-hypothesis".
pub fn noise_contraction_check(
    f: &BooleanFunction,
    p: f64,
    q: f64,
    rho: f64,
    tol: f64,
) -> Result<InequalityReport> {
    if p.is_nan() || q.is_nan() || p <= 1.0 || q < p {
        return Err(Error::invalid(format!(
            "noise contraction needs 1 < p <= q, got p={p}, q={q}"
        )));
    }
    let admissible_sq = (p - 1.0) / (q - 1.0);
    let admissible = rho * rho <= admissible_sq * (1.0 + 1e-12);
    let noisy = f
        .walsh_transform()
        .noise_operator(rho)
        .inverse_transform()?;
    let lhs = if q.is_infinite() {
        noisy.sup_norm()
    } else {
        noisy.p_norm(q)?
    };
    let rhs = f.p_norm(p)?;
    let mut report = if admissible {
        InequalityReport::asserted("noise-contraction", lhs, rhs, tol)
    } else {
        InequalityReport::observed("noise-contraction", lhs, rhs, tol)
            .with_witness("outside-hypothesis")
    };
    report = report
        .with_param("p", p)
        .with_param("rho", rho)
        .with_param("rho_admissible", admissible_sq.sqrt());
    if q.is_finite() {
        report = report.with_param("q", q);
    } else {
        report = report.with_param("q_infinite", 1.0);
    }
    Ok(report)
}

/// Lorentz ℓ_{2d/(d+1),1} norm of the coefficients:
/// Σ_k f*(k) k^{-(d-1)/(2d)} with f* the descending rearrangement, ties
/// broken stably by ascending mask.
pub fn lorentz_norm(s: &FourierSpectrum) -> f64 {
    let d = s.degree();
    if s.is_zero() {
        return 0.0;
    }
    if d == 0 {
        return s.coefficient(0).abs();
    }
    let mut entries: Vec<(f64, u64)> = s
        .coefficients()
        .iter()
        .map(|(&m, &v)| (v.abs(), m))
        .collect();
    entries.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));
    let exponent = -((d as f64 - 1.0) / (2.0 * d as f64));
    let terms: Vec<f64> = entries
        .iter()
        .enumerate()
        .map(|(idx, (v, _))| v * ((idx + 1) as f64).powf(exponent))
        .collect();
    pairwise_sum(&terms)
}

/// Dominance bh_lhs ≤ lorentz_norm (the ℓ_{p,1} norm majorizes ℓ_p for
/// p = 2d/(d+1) ≤ 2), reporting lorentz/sup as the empirical Lorentz
/// quotient when enumeration is in capacity. No universal constant is
/// asserted.
pub fn lorentz_dominance_check(s: &FourierSpectrum, tol: f64) -> Result<InequalityReport> {
    if s.is_zero() {
        return Err(Error::invalid(
            "lorentz dominance needs a nonzero spectrum".to_string(),
        ));
    }
    let lorentz = lorentz_norm(s);
    let mut report = InequalityReport::asserted("lorentz-dominance", bh_lhs(s), lorentz, tol)
        .with_param("n", s.n() as f64)
        .with_param("d", s.degree() as f64);
    if let Ok(table) = s.inverse_transform() {
        let sup = table.sup_norm();
        if sup > 0.0 {
            report = report.with_param("lorentz_bh_ratio", lorentz / sup);
        }
    }
    Ok(report)
}

/// Aaronson–Ambainis quantity Var(f)²/max_j Inf_j against d⁴e^{4d}, with the
/// intermediate chain Var ≤ Σ_j Inf_j ≤ √(max Inf)·Σ_j √Inf_j recorded.
///
/// The bound is a statement about functions into [-1,1]: the left side
/// scales quadratically while the right side is fixed, so callers must
/// normalize the spectrum to sup norm at most 1 for the assertion to be
/// theorem-backed.
pub fn aa_ratio(s: &FourierSpectrum, tol: f64) -> Result<InequalityReport> {
    let var = s.variance();
    let d = s.degree();
    let rhs = (d as f64).powi(4) * (4.0 * d as f64).exp();
    if var == 0.0 {
        return Ok(InequalityReport::observed("aa-ratio", 0.0, rhs, tol)
            .with_witness("degenerate: Var = 0")
            .with_param("n", s.n() as f64)
            .with_param("d", d as f64));
    }
    let (max_inf, j) = s.max_influence()?;
    let infs: Vec<f64> = (1..=s.n()).map(|j| s.influence(j).unwrap()).collect();
    let sum_inf = pairwise_sum(&infs);
    let sqrt_infs: Vec<f64> = infs.iter().map(|v| v.sqrt()).collect();
    let sum_sqrt_inf = pairwise_sum(&sqrt_infs);
    Ok(
        InequalityReport::asserted("aa-ratio", var * var / max_inf, rhs, tol)
            .with_witness(format!("max influence at j={j}"))
            .with_param("n", s.n() as f64)
            .with_param("d", d as f64)
            .with_param("var", var)
            .with_param("max_inf", max_inf)
            .with_param("sum_inf", sum_inf)
            .with_param("sum_sqrt_inf", sum_sqrt_inf)
            .with_param("chain", max_inf.sqrt() * sum_sqrt_inf),
    )
}

/// Flat-coefficient family f̂(S) = ±α for every nonempty S with |S| ≤ d.
///
/// Verifies the closed forms Var = α² Σ_m C(n,m) and Inf_j = α² Σ_m C(n-1,m-1)
/// against enumeration within 1e-12, then asserts the chain
/// Var²/max Inf ≤ α²·n·Σ_m C(n,m) ≤ d·bh_lhs(f)². `signs` must carry one ±1
/// per nonempty mask of popcount ≤ d.
pub fn aa_flat_case(
    n: u32,
    d: u32,
    alpha: f64,
    signs: &BTreeMap<u64, f64>,
    tol: f64,
) -> Result<InequalityReport> {
    if d == 0 || d > n {
        return Err(Error::invalid(format!(
            "flat case needs 1 <= d <= n, got d={d}, n={n}"
        )));
    }
    if alpha.is_nan() || alpha <= 0.0 {
        return Err(Error::invalid(format!(
            "flat case needs alpha > 0, got {alpha}"
        )));
    }
    let mut coeffs = Vec::new();
    for mask in 1u64..1 << n {
        if mask.count_ones() <= d {
            let sign = signs
                .get(&mask)
                .copied()
                .ok_or_else(|| Error::invalid(format!("missing sign for mask {mask:#b}")))?;
            if sign.abs() != 1.0 {
                return Err(Error::invalid(format!(
                    "sign for mask {mask:#b} must be ±1"
                )));
            }
            coeffs.push((mask, alpha * sign));
        }
    }
    let s = FourierSpectrum::new(n, coeffs)?;

    let mut level_count = 0u128;
    let mut level_count_j = 0u128;
    for m in 1..=d {
        level_count += binomial(n as u64, m as u64)?;
        level_count_j += binomial((n - 1) as u64, (m - 1) as u64)?;
    }
    let var_closed = alpha * alpha * level_count as f64;
    let inf_closed = alpha * alpha * level_count_j as f64;

    let var = s.variance();
    let mut max_dev = (var - var_closed).abs();
    for j in 1..=n {
        max_dev = max_dev.max((s.influence(j)? - inf_closed).abs());
    }
    let scale = var_closed.max(1.0);

    let (max_inf, _) = s.max_influence()?;
    let lhs = var * var / max_inf;
    let middle = alpha * alpha * n as f64 * level_count as f64;
    let bh = bh_lhs(&s);
    let rhs = d as f64 * bh * bh;

    let mut report = InequalityReport::asserted("aa-flat-chain", lhs, rhs, tol)
        .with_param("n", n as f64)
        .with_param("d", d as f64)
        .with_param("alpha", alpha)
        .with_param("var_closed", var_closed)
        .with_param("inf_closed", inf_closed)
        .with_param("middle", middle)
        .with_param("bh_lhs", bh)
        .with_param("closed_form_dev", max_dev);
    let chain_ok = lhs <= middle * (1.0 + tol) && middle <= rhs * (1.0 + tol);
    if max_dev > 1e-12 * scale || !chain_ok {
        report.pass = Some(false);
        report = report.with_witness("closed-form or chain mismatch");
    }
    Ok(report)
}

/// One evaluated instance of the proof's recursion bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RecursionBound {
    /// base · Π exp(2(d/(m+1) + m log d)); may overflow to +∞.
    pub value: f64,
    /// Log of the bound, always finite; use this for shape checks.
    pub log_value: f64,
    /// Number of contraction steps d ← ⌊√(d/log d)⌋ taken.
    pub iterations: u32,
}

/// Iterates d ← ⌊√(d/log d)⌋ while d > 3, multiplying the step factors
/// exp(2(d/(m+1) + m·log d)); `base` stands in for the bound at the
/// recursion's floor. Nondecreasing in `base`.
pub fn recursion_upper_bound(d: u64, base: f64) -> Result<RecursionBound> {
    if d < 3 {
        return Err(Error::invalid(format!(
            "recursion bound needs d >= 3, got {d}"
        )));
    }
    if !base.is_finite() || base <= 0.0 {
        return Err(Error::invalid(format!(
            "recursion bound needs base > 0, got {base}"
        )));
    }
    let mut log_value = base.ln();
    let mut cur = d;
    let mut iterations = 0u32;
    while cur > 3 {
        let df = cur as f64;
        let m = (df / df.ln()).sqrt().floor().max(1.0);
        log_value += 2.0 * (df / (m + 1.0) + m * df.ln());
        cur = m as u64;
        iterations += 1;
    }
    Ok(RecursionBound {
        value: log_value.exp(),
        log_value,
        iterations,
    })
}
