//! Exact univariate machinery: Chebyshev polynomials, Markov numbers, the
//! Markov coefficient bound, and the ψ-basis expansion with its extremal
//! Chebyshev coefficients.
//!
//! All integer quantities are computed exactly (128-bit with overflow
//! detection); d ≤ 40 keeps everything in range since M_{d,d} = 2^{d-1}.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::report::InequalityReport;
use crate::util::{binomial, checked_mul};

/// Overflow guard for exact Chebyshev/Markov arithmetic.
pub const MAX_EXACT_DEGREE: u32 = 40;

/// Conditioning cap for the floating ψ-expansion; the interpolation nodes
/// cos(mπ/d) are irrational, so no exact path exists, and reconstruction
/// error stays below 1e-8 in this range.
pub const MAX_PSI_DEGREE: u32 = 25;

/// Grid tolerance for sup-norm-based ratio checks: the supremum on [-1,1] is
/// sampled on 4096 Chebyshev-distributed points plus a local refinement.
pub const MARKOV_CHECK_TOL: f64 = 1e-6;

const SUP_GRID: usize = 4096;

/// Real polynomial in the monomial basis; `coeffs[m]` multiplies t^m and
/// trailing zeros are trimmed (the zero polynomial stores no coefficients).
#[derive(Debug, Clone, PartialEq)]
pub struct UnivariatePoly {
    coeffs: Vec<f64>,
}

impl UnivariatePoly {
    pub fn new(mut coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid(
                "non-finite polynomial coefficient".to_string(),
            ));
        }
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        Ok(UnivariatePoly { coeffs })
    }

    pub fn zero() -> Self {
        UnivariatePoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, m: usize) -> f64 {
        self.coeffs.get(m).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Index of the last nonzero coefficient; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.coeffs.len().saturating_sub(1) as u32
    }

    /// Compensated Horner evaluation (error-free transformations), accurate
    /// even for high-degree Chebyshev polynomials whose monomial coefficients
    /// reach 2^{d-1}.
    pub fn eval(&self, t: f64) -> f64 {
        let mut it = self.coeffs.iter().rev();
        let Some(&first) = it.next() else {
            return 0.0;
        };
        let mut s = first;
        let mut e = 0.0f64;
        for &a in it {
            let p = s * t;
            let p_err = s.mul_add(t, -p);
            let sum = p + a;
            let z = sum - p;
            let s_err = (p - (sum - z)) + (a - z);
            e = e.mul_add(t, p_err + s_err);
            s = sum;
        }
        s + e
    }

    /// α·self + β·other.
    pub fn add_scaled(&self, other: &Self, alpha: f64, beta: f64) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| alpha * self.coeff(i) + beta * other.coeff(i))
            .collect();
        Self::new(coeffs)
    }
}

/// Coefficients of a degree-d polynomial in the basis
/// ψ_{d,n}(t) = ((1+t)/2)^n ((1-t)/2)^{d-n}.
#[derive(Debug, Clone, PartialEq)]
pub struct PsiExpansion {
    d: u32,
    a: Vec<f64>,
}

impl PsiExpansion {
    pub fn basis_degree(&self) -> u32 {
        self.d
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.a
    }

    /// Σ_n a_n ψ_{d,n}(t).
    pub fn reconstruct(&self, t: f64) -> f64 {
        self.a
            .iter()
            .enumerate()
            .map(|(n, &a)| a * psi_basis(self.d, n as u32, t))
            .sum()
    }
}

/// Monomial coefficients of the Chebyshev polynomial T_d, exact.
pub fn chebyshev(d: u32) -> Result<UnivariatePoly> {
    let exact = chebyshev_exact(d)?;
    UnivariatePoly::new(exact.into_iter().map(|c| c as f64).collect())
}

/// Three-term recurrence T_{k+1} = 2t·T_k - T_{k-1} in exact integers.
pub fn chebyshev_exact(d: u32) -> Result<Vec<i128>> {
    check_exact_degree(d)?;
    let mut prev: Vec<i128> = vec![1];
    if d == 0 {
        return Ok(prev);
    }
    let mut cur: Vec<i128> = vec![0, 1];
    for _ in 1..d {
        let mut next = vec![0i128; cur.len() + 1];
        for (i, &c) in cur.iter().enumerate() {
            let doubled = c
                .checked_mul(2)
                .ok_or_else(|| Error::overflow("chebyshev recurrence".to_string()))?;
            next[i + 1] = next[i + 1]
                .checked_add(doubled)
                .ok_or_else(|| Error::overflow("chebyshev recurrence".to_string()))?;
        }
        for (i, &c) in prev.iter().enumerate() {
            next[i] -= c;
        }
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Markov number M_{m,d}: the absolute Chebyshev coefficient |a_m(T_{d'})|
/// with the parity rule d' = d when m ≡ d (mod 2) and d' = d-1 otherwise.
pub fn markov_number(m: u32, d: u32) -> Result<u128> {
    check_exact_degree(d)?;
    if m > d {
        return Err(Error::invalid(format!(
            "markov number needs m <= d, got m={m}, d={d}"
        )));
    }
    if m == 0 {
        return Ok(1);
    }
    let dp = if (d - m).is_multiple_of(2) { d } else { d - 1 };
    debug_assert!(dp >= 1 && (dp - m).is_multiple_of(2));
    // |a_m(T_{d'})| = 2^{m-1} (d'/m) C((d'+m-2)/2, m-1), exact.
    let a = (dp + m - 2) / 2;
    let mut num = 1u128 << (m - 1);
    num = checked_mul(num, dp as u128, "markov number")?;
    num = checked_mul(num, binomial(a as u64, (m - 1) as u64)?, "markov number")?;
    debug_assert_eq!(num % m as u128, 0);
    Ok(num / m as u128)
}

/// sup_{m≤d} M_{m,d}^{1/d} for d = 1..=d_max; every entry is below 1+√2.
pub fn markov_growth_trace(d_max: u32) -> Result<Vec<f64>> {
    (1..=d_max).map(|d| Ok(markov_growth_point(d)?.1)).collect()
}

/// (attaining m, sup_{m≤d} M_{m,d}^{1/d}) for one degree.
pub fn markov_growth_point(d: u32) -> Result<(u32, f64)> {
    let mut best = (0u32, 0.0f64);
    for m in 0..=d {
        let v = (markov_number(m, d)? as f64).powf(1.0 / d as f64);
        if v > best.1 {
            best = (m, v);
        }
    }
    Ok(best)
}

/// Estimated sup of |p| on [-1,1]: Chebyshev-distributed grid of 4096 points
/// (endpoints included) followed by golden-section refinement in the
/// bracketing interval. Returns (value, argmax t).
pub fn sup_norm_unit_interval(p: &UnivariatePoly) -> (f64, f64) {
    if p.is_zero() {
        return (0.0, 1.0);
    }
    let node = |i: usize| (PI * i as f64 / (SUP_GRID - 1) as f64).cos();
    let mut best = (p.eval(1.0).abs(), 0usize);
    for i in 1..SUP_GRID {
        let v = p.eval(node(i)).abs();
        if v > best.0 {
            best = (v, i);
        }
    }
    // Nodes descend in i, so the bracket around node i is [node(i+1), node(i-1)].
    let lo = if best.1 + 1 < SUP_GRID {
        node(best.1 + 1)
    } else {
        -1.0
    };
    let hi = if best.1 > 0 { node(best.1 - 1) } else { 1.0 };
    let (refined, t) = golden_max_abs(p, lo, hi);
    if refined > best.0 {
        (refined, t)
    } else {
        (best.0, node(best.1))
    }
}

fn golden_max_abs(p: &UnivariatePoly, mut lo: f64, mut hi: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = hi - INV_PHI * (hi - lo);
    let mut d = lo + INV_PHI * (hi - lo);
    let mut fc = p.eval(c).abs();
    let mut fd = p.eval(d).abs();
    for _ in 0..90 {
        if fc > fd {
            hi = d;
            d = c;
            fd = fc;
            c = hi - INV_PHI * (hi - lo);
            fc = p.eval(c).abs();
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + INV_PHI * (hi - lo);
            fd = p.eval(d).abs();
        }
    }
    let t = 0.5 * (lo + hi);
    (p.eval(t).abs(), t)
}

/// Markov's coefficient bound |a_m| ≤ M_{m,d}·sup|p| for every m ≤ d.
///
/// lhs is max_m |a_m|/M_{m,d}, rhs the estimated supremum; the witness
/// records the attaining m (smallest on ties).
pub fn markov_coefficient_check(p: &UnivariatePoly, d: u32, tol: f64) -> Result<InequalityReport> {
    if p.degree() > d && !p.is_zero() {
        return Err(Error::invalid(format!(
            "polynomial degree {} exceeds declared d = {d}",
            p.degree()
        )));
    }
    let (sup, sup_t) = sup_norm_unit_interval(p);
    let mut worst = (0.0f64, 0u32);
    for m in 0..=d.min(p.degree()) {
        let bound = markov_number(m, d)? as f64;
        let scaled = p.coeff(m as usize).abs() / bound;
        if scaled > worst.0 {
            worst = (scaled, m);
        }
    }
    Ok(
        InequalityReport::asserted("markov-coefficient", worst.0, sup, tol)
            .with_witness(format!("m={}, argmax t={:.6}", worst.1, sup_t))
            .with_param("d", d as f64)
            .with_param("m", worst.1 as f64),
    )
}

/// ψ_{d,m}(t) = ((1+t)/2)^m ((1-t)/2)^{d-m}.
pub fn psi_basis(d: u32, m: u32, t: f64) -> f64 {
    assert!(m <= d, "psi basis index m={m} out of range for d={d}");
    ((1.0 + t) / 2.0).powi(m as i32) * ((1.0 - t) / 2.0).powi((d - m) as i32)
}

/// Expands `p` in the ψ basis of degree `d` by Lagrange interpolation at the
/// Chebyshev extrema cos(mπ/d).
///
/// Each Lagrange numerator is rewritten as the bivariate product
/// Π_{j≠m} ((1-t_j)u - (1+t_j)v) with u = (1+t)/2, v = (1-t)/2, accumulated
/// by incremental convolution in O(d²) per node rather than subset sums.
pub fn psi_expand(p: &UnivariatePoly, d: u32) -> Result<PsiExpansion> {
    if d == 0 || d > MAX_PSI_DEGREE {
        return Err(Error::invalid(format!(
            "psi expansion supports 1 <= d <= {MAX_PSI_DEGREE}, got {d}"
        )));
    }
    if p.degree() > d && !p.is_zero() {
        return Err(Error::invalid(format!(
            "polynomial degree {} exceeds basis degree {d}",
            p.degree()
        )));
    }
    let dd = d as usize;
    let nodes: Vec<f64> = (0..=dd).map(|m| (PI * m as f64 / d as f64).cos()).collect();
    let mut a = vec![0.0f64; dd + 1];
    for m in 0..=dd {
        // Signed coefficients of Π_{j≠m} ((1-t_j)u - (1+t_j)v) over u^k v^{d-k}.
        let mut beta = vec![0.0f64; dd + 1];
        beta[0] = 1.0;
        let mut applied = 0usize;
        let mut denom = 1.0f64;
        for j in 0..=dd {
            if j == m {
                continue;
            }
            let cu = 1.0 - nodes[j];
            let cv = -(1.0 + nodes[j]);
            for k in (0..=applied + 1).rev() {
                let from_u = if k > 0 { cu * beta[k - 1] } else { 0.0 };
                beta[k] = from_u + cv * beta[k];
            }
            applied += 1;
            denom *= nodes[m] - nodes[j];
        }
        if denom == 0.0 {
            return Err(Error::invalid("degenerate interpolation nodes".to_string()));
        }
        let scale = p.eval(nodes[m]) / denom;
        for n in 0..=dd {
            a[n] += scale * beta[n];
        }
    }
    Ok(PsiExpansion { d, a })
}

/// The ψ-coefficient of the Chebyshev polynomial:
/// a_n(T_d) = (-1)^{d-n} Σ_{m=0}^{min(d-n,n)} 4^m C(d,2m) C(d-2m, n-m), exact.
pub fn cheb_psi_coeff(n: u32, d: u32) -> Result<i128> {
    check_exact_degree(d)?;
    if n > d {
        return Err(Error::invalid(format!(
            "psi coefficient index n={n} out of range for d={d}"
        )));
    }
    let mag = cheb_psi_magnitude(n, d)?;
    let mag = i128::try_from(mag).map_err(|_| Error::overflow("psi coefficient".to_string()))?;
    Ok(if (d - n).is_multiple_of(2) { mag } else { -mag })
}

fn cheb_psi_magnitude(n: u32, d: u32) -> Result<u128> {
    let mut sum: u128 = 0;
    for m in 0..=n.min(d - n) {
        let mut term = 1u128 << (2 * m);
        term = checked_mul(term, binomial(d as u64, 2 * m as u64)?, "psi coefficient")?;
        term = checked_mul(
            term,
            binomial((d - 2 * m) as u64, (n - m) as u64)?,
            "psi coefficient",
        )?;
        sum = sum
            .checked_add(term)
            .ok_or_else(|| Error::overflow("psi coefficient".to_string()))?;
    }
    Ok(sum)
}

/// The exact two-block polarization constant
/// (1/C(d,m)) Σ_{k=0}^{m} 4^k C(d,2k) C(d-2k, m-k) together with its cap 2d^m.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoBlockConstant {
    pub numerator: u128,
    pub denominator: u128,
    pub value: f64,
    pub cap: f64,
}

impl TwoBlockConstant {
    /// Exact integer comparison numerator ≤ 2·d^m·denominator.
    pub fn within_cap(&self, m: u32, d: u32) -> Result<bool> {
        let mut cap = 2u128;
        for _ in 0..m {
            cap = checked_mul(cap, d as u128, "two-block cap")?;
        }
        Ok(self.numerator <= checked_mul(cap, self.denominator, "two-block cap")?)
    }
}

/// Exact value of the two-block constant for 0 ≤ m ≤ d/2.
pub fn two_block_constant(m: u32, d: u32) -> Result<TwoBlockConstant> {
    check_exact_degree(d)?;
    if 2 * m > d {
        return Err(Error::invalid(format!(
            "two-block constant needs m <= d/2, got m={m}, d={d}"
        )));
    }
    let numerator = cheb_psi_magnitude(m, d)?;
    let denominator = binomial(d as u64, m as u64)?;
    Ok(TwoBlockConstant {
        numerator,
        denominator,
        value: numerator as f64 / denominator as f64,
        cap: 2.0 * (d as f64).powi(m as i32),
    })
}

fn check_exact_degree(d: u32) -> Result<()> {
    if d > MAX_EXACT_DEGREE {
        return Err(Error::capacity(format!(
            "degree {d} exceeds the exact-arithmetic cap {MAX_EXACT_DEGREE}"
        )));
    }
    Ok(())
}
