//! Tetrahedral polynomials and two-block evaluation of their symmetric
//! d-affine forms.
//!
//! A sparse Fourier spectrum, read as a multilinear real polynomial, is
//! tetrahedral: affine in each variable separately. Its unique symmetric
//! d-affine form is never materialized as a tensor; only evaluations at two
//! blocks (m copies of x, d-m copies of y) are supported, driven by a closed
//! table of combinatorial weights. An independent expectation-based oracle
//! over 2^d sign patterns cross-checks the weight table.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cheb::markov_number;
use crate::cube::{fwht_in_place, FourierSpectrum};
use crate::error::{Error, Result};
use crate::report::InequalityReport;
use crate::util::{binomial, character_sign, checked_mul, factorial, gcd, pairwise_sum, submasks};

/// Cap on the form arity for the expectation oracle (2^d sign patterns).
pub const MAX_ORACLE_DEGREE: u32 = 12;

/// Cap on the dimension for exhaustive vertex-pair scans (2^{2n} pairs).
pub const MAX_PAIR_SCAN_N: u32 = 10;

const COORD_SLACK: f64 = 1e-12;

/// A Fourier spectrum viewed as the real multilinear polynomial
/// Q(x) = Σ_S f̂(S) Π_{i∈S} x_i on [-1,1]^n; no extra storage.
#[derive(Debug, Clone, Copy)]
pub struct TetrahedralPoly<'a> {
    spectrum: &'a FourierSpectrum,
}

impl<'a> TetrahedralPoly<'a> {
    pub fn new(spectrum: &'a FourierSpectrum) -> Self {
        TetrahedralPoly { spectrum }
    }

    pub fn spectrum(&self) -> &'a FourierSpectrum {
        self.spectrum
    }

    pub fn degree(&self) -> u32 {
        self.spectrum.degree()
    }

    pub fn n(&self) -> u32 {
        self.spectrum.n()
    }

    /// Q(x) for x in [-1,1]^n (small slack for rounding).
    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        self.check_coords(x)?;
        Ok(self.eval_unchecked(x))
    }

    /// Monomial evaluation without the range check; the polarization oracle
    /// needs points far outside the unit cube.
    fn eval_unchecked(&self, x: &[f64]) -> f64 {
        let terms: Vec<f64> = self
            .spectrum
            .coefficients()
            .iter()
            .map(|(&mask, &c)| c * monomial(mask, x))
            .collect();
        pairwise_sum(&terms)
    }

    /// The level-r part evaluated at an arbitrary real point.
    fn eval_level_unchecked(&self, r: u32, x: &[f64]) -> f64 {
        let terms: Vec<f64> = self
            .spectrum
            .coefficients()
            .iter()
            .filter(|(mask, _)| mask.count_ones() == r)
            .map(|(&mask, &c)| c * monomial(mask, x))
            .collect();
        pairwise_sum(&terms)
    }

    fn check_coords(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n() as usize {
            return Err(Error::invalid(format!(
                "point has {} coordinates, expected {}",
                x.len(),
                self.n()
            )));
        }
        for (i, &xi) in x.iter().enumerate() {
            if xi.is_nan() || xi.abs() > 1.0 + COORD_SLACK {
                return Err(Error::invalid(format!(
                    "coordinate {} = {xi} outside [-1,1]",
                    i + 1
                )));
            }
        }
        Ok(())
    }
}

fn monomial(mask: u64, x: &[f64]) -> f64 {
    let mut prod = 1.0;
    let mut bits = mask;
    while bits != 0 {
        let i = bits.trailing_zeros() as usize;
        prod *= x[i];
        bits &= bits - 1;
    }
    prod
}

/// An exact nonnegative rational, kept reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: u128,
    pub den: u128,
}

impl Ratio {
    fn new(num: u128, den: u128) -> Self {
        debug_assert!(den != 0);
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

/// Level-wise weights for evaluating the d-affine form at m copies of x and
/// d-m copies of y.
///
/// For a monomial of level k and a sub-monomial of level j placed in the
/// x-block, the weight is C(m,j)·C(d-m,k-j) / (C(d,k)·C(k,j)): the fraction
/// of slot assignments of the k distinct indices that lands j of them among
/// the m x-slots. Setting x = y recovers Q exactly: `Σ_j w[k][j]·C(k,j) = 1`.
#[derive(Debug, Clone)]
pub struct TwoBlockForm {
    d: u32,
    m: u32,
    weights: Vec<Vec<Ratio>>,
    weights_f64: Vec<Vec<f64>>,
}

impl TwoBlockForm {
    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn weight(&self, k: u32, j: u32) -> f64 {
        self.weights_f64[k as usize][j as usize]
    }

    pub fn weight_exact(&self, k: u32, j: u32) -> Ratio {
        self.weights[k as usize][j as usize]
    }
}

/// Builds the exact weight table for block sizes (m, d-m), 0 ≤ m ≤ d.
pub fn two_block_weights(m: u32, d: u32) -> Result<TwoBlockForm> {
    if m > d {
        return Err(Error::invalid(format!(
            "block size m={m} exceeds arity d={d}"
        )));
    }
    let mut weights = Vec::with_capacity(d as usize + 1);
    for k in 0..=d {
        let mut row = Vec::with_capacity(k as usize + 1);
        for j in 0..=k {
            let feasible = j <= m && k - j <= d - m;
            let ratio = if feasible {
                let num = checked_mul(
                    binomial(m as u64, j as u64)?,
                    binomial((d - m) as u64, (k - j) as u64)?,
                    "two-block weight",
                )?;
                let den = checked_mul(
                    binomial(d as u64, k as u64)?,
                    binomial(k as u64, j as u64)?,
                    "two-block weight",
                )?;
                Ratio::new(num, den)
            } else {
                Ratio { num: 0, den: 1 }
            };
            row.push(ratio);
        }
        weights.push(row);
    }
    let weights_f64 = weights
        .iter()
        .map(|row| row.iter().map(|r| r.to_f64()).collect())
        .collect();
    Ok(TwoBlockForm {
        d,
        m,
        weights,
        weights_f64,
    })
}

/// `L_Q(x,…,x,y,…,y) = Σ_S f̂(S) Σ_{T⊆S} w[|S|][|T|] x^T y^{S∖T}`,
/// iterating stored masks and their submasks in ascending order.
pub fn two_block_eval(q: &TetrahedralPoly, w: &TwoBlockForm, x: &[f64], y: &[f64]) -> Result<f64> {
    q.check_coords(x)?;
    q.check_coords(y)?;
    if q.degree() > w.d() {
        return Err(Error::invalid(format!(
            "polynomial degree {} exceeds form arity {}",
            q.degree(),
            w.d()
        )));
    }
    let mut terms = Vec::new();
    for (&mask, &c) in q.spectrum.coefficients() {
        let k = mask.count_ones();
        for sub in submasks(mask) {
            let weight = w.weight(k, sub.count_ones());
            if weight != 0.0 {
                terms.push(c * weight * monomial(sub, x) * monomial(mask ^ sub, y));
            }
        }
    }
    Ok(pairwise_sum(&terms))
}

/// Expectation-formula oracle for the same two-block value: averages
/// Σ_r (ξ_1…ξ_d / d!) (ξ_1+…+ξ_d)^{d-r} Q_r(ξ_1 z^{(1)} + … + ξ_d z^{(d)})
/// over all ξ ∈ {±1}^d, with z^{(k)} = x for k ≤ m and y beyond.
///
/// Test-only cross-check for the closed weight table; cost 2^d evaluations.
pub fn two_block_oracle(q: &TetrahedralPoly, m: u32, x: &[f64], y: &[f64]) -> Result<f64> {
    let d = q.degree();
    if d > MAX_ORACLE_DEGREE {
        return Err(Error::capacity(format!(
            "oracle degree {d} exceeds the 2^d sign-pattern cap {MAX_ORACLE_DEGREE}"
        )));
    }
    if m > d {
        return Err(Error::invalid(format!(
            "block size m={m} exceeds degree d={d}"
        )));
    }
    q.check_coords(x)?;
    q.check_coords(y)?;
    let n = q.n() as usize;
    let d_us = d as usize;
    let m_us = m as usize;
    let low_mask: u64 = if m_us == 0 { 0 } else { (1u64 << m_us) - 1 };
    let mut point = vec![0.0f64; n];
    let mut acc = Vec::with_capacity(1 << d_us);
    for xi in 0u64..1u64 << d_us {
        let sign = if xi.count_ones() & 1 == 0 { 1.0 } else { -1.0 };
        let sx = (m_us as i64 - 2 * (xi & low_mask).count_ones() as i64) as f64;
        let sy = ((d_us - m_us) as i64 - 2 * (xi >> m_us).count_ones() as i64) as f64;
        let total = sx + sy;
        for i in 0..n {
            point[i] = sx * x[i] + sy * y[i];
        }
        let mut inner = 0.0;
        for r in 0..=d {
            inner += total.powi((d - r) as i32) * q.eval_level_unchecked(r, &point);
        }
        acc.push(sign * inner);
    }
    let d_fact = factorial(d as u64)? as f64;
    Ok(pairwise_sum(&acc) / ((1u64 << d_us) as f64 * d_fact))
}

/// Exhaustive two-block bound check: max_{x,y vertices} |L_Q(x^m, y^{d-m})|
/// against 2·d^m·sup|Q| for m ≤ d/2.
pub fn two_block_bound_check(q: &TetrahedralPoly, m: u32, tol: f64) -> Result<InequalityReport> {
    let d = q.degree();
    if 2 * m > d {
        return Err(Error::invalid(format!(
            "two-block bound needs m <= d/2, got m={m}, d={d}"
        )));
    }
    let w = two_block_weights(m, d)?;
    let (max_abs, x_row, y_row) = max_over_vertex_pairs(q, &w)?;
    let sup = q.spectrum.inverse_transform()?.sup_norm();
    let rhs = 2.0 * (q.degree() as f64).powi(m as i32) * sup;
    Ok(
        InequalityReport::asserted("two-block-bound", max_abs, rhs, tol)
            .with_witness(format!("x_row={x_row}, y_row={y_row}"))
            .with_param("n", q.n() as f64)
            .with_param("d", d as f64)
            .with_param("m", m as f64)
            .with_param("sup", sup),
    )
}

/// Polarization bound for homogeneous Q: max over vertex pairs of
/// |L(x^k, y^{d-k})| against M_{k,d}·d^d/(k^k (d-k)^{d-k})·k!(d-k)!/d!·sup|Q|.
pub fn homogeneous_polarization_check(
    q: &TetrahedralPoly,
    k: u32,
    tol: f64,
) -> Result<InequalityReport> {
    let d = q.degree();
    if q.spectrum.coefficients().is_empty()
        || q.spectrum
            .coefficients()
            .keys()
            .any(|mask| mask.count_ones() != d)
    {
        return Err(Error::invalid(
            "homogeneous polarization bound needs a nonzero homogeneous polynomial".to_string(),
        ));
    }
    if k == 0 || k > d {
        return Err(Error::invalid(format!(
            "block size k={k} out of range 1..={d}"
        )));
    }
    // For homogeneous Q the d-affine form coincides with the d-linear form,
    // so the m = k weight table evaluates it directly.
    let w = two_block_weights(k, d)?;
    let (max_abs, x_row, y_row) = max_over_vertex_pairs(q, &w)?;
    let sup = q.spectrum.inverse_transform()?.sup_norm();
    let df = d as f64;
    let kf = k as f64;
    let stirling = df.powi(d as i32) / (kf.powi(k as i32) * (df - kf).powi((d - k) as i32));
    let constant = markov_number(k, d)? as f64 * stirling / binomial(d as u64, k as u64)? as f64;
    Ok(
        InequalityReport::asserted("homogeneous-polarization", max_abs, constant * sup, tol)
            .with_witness(format!("x_row={x_row}, y_row={y_row}"))
            .with_param("n", q.n() as f64)
            .with_param("d", d as f64)
            .with_param("k", k as f64)
            .with_param("constant", constant)
            .with_param("sup", sup),
    )
}

/// Shared exhaustive scan: for each x-vertex, assemble the y-spectrum of
/// L(x,…,y,…) and synthesize it over all y rows with one transform.
fn max_over_vertex_pairs(q: &TetrahedralPoly, w: &TwoBlockForm) -> Result<(f64, u64, u64)> {
    let n = q.n();
    if n > MAX_PAIR_SCAN_N {
        return Err(Error::capacity(format!(
            "vertex-pair scan needs n <= {MAX_PAIR_SCAN_N}, got {n}"
        )));
    }
    let size = 1usize << n;
    let mut best = (f64::NEG_INFINITY, 0u64, 0u64);
    let mut y_coeffs = vec![0.0f64; size];
    for x_row in 0..size as u64 {
        y_coeffs.fill(0.0);
        for (&mask, &c) in q.spectrum.coefficients() {
            let k = mask.count_ones();
            for sub in submasks(mask) {
                let weight = w.weight(k, sub.count_ones());
                if weight != 0.0 {
                    y_coeffs[(mask ^ sub) as usize] += c * weight * character_sign(x_row, sub);
                }
            }
        }
        fwht_in_place(&mut y_coeffs);
        for (y_row, &v) in y_coeffs.iter().enumerate() {
            if v.abs() > best.0 {
                best = (v.abs(), x_row, y_row as u64);
            }
        }
    }
    Ok(best)
}

/// Size of the permutation-equivalence class of an index multiset (zeros
/// allowed): |A|! / Π_v (multiplicity of v)!, exact.
pub fn class_size(indices: &[u32]) -> Result<u128> {
    let mut sorted = indices.to_vec();
    sorted.sort_unstable();
    let mut result = factorial(indices.len() as u64)?;
    let mut run = 1u64;
    for i in 1..=sorted.len() {
        if i < sorted.len() && sorted[i] == sorted[i - 1] {
            run += 1;
        } else {
            result /= factorial(run)?;
            run = 1;
        }
    }
    Ok(result)
}

/// Randomized exact check that class sizes of affine index pairs satisfy
/// `|[j1 ⊕ j2]| ≤ C(d,m)·|[j1]|·|[j2]|`; the first trial is forced to the
/// fully-supported pair where equality holds.
pub fn class_ratio_check(
    m: u32,
    d: u32,
    trials: u32,
    seed: u64,
    tol: f64,
) -> Result<InequalityReport> {
    if m > d {
        return Err(Error::invalid(format!(
            "class ratio needs m <= d, got m={m}, d={d}"
        )));
    }
    if d > 12 {
        return Err(Error::capacity(format!(
            "class ratio check supports d <= 12, got {d}"
        )));
    }
    let bound = binomial(d as u64, m as u64)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut all_exact = true;
    for trial in 0..trials.max(1) {
        let (s1, s2) = if trial == 0 {
            (m, d - m)
        } else {
            (rng.random_range(0..=m), rng.random_range(0..=d - m))
        };
        let mut values: Vec<u32> = (1..=d).collect();
        for i in 0..(s1 + s2) as usize {
            let j = rng.random_range(i..values.len());
            values.swap(i, j);
        }
        let mut j1: Vec<u32> = values[..s1 as usize].to_vec();
        j1.resize(m as usize, 0);
        let mut j2: Vec<u32> = values[s1 as usize..(s1 + s2) as usize].to_vec();
        j2.resize((d - m) as usize, 0);
        let joined: Vec<u32> = j1.iter().chain(j2.iter()).copied().collect();
        let c1 = class_size(&j1)?;
        let c2 = class_size(&j2)?;
        let c12 = class_size(&joined)?;
        let denom = checked_mul(c1, c2, "class ratio")?;
        if c12 > checked_mul(bound, denom, "class ratio")? {
            all_exact = false;
        }
        worst = worst.max(c12 as f64 / denom as f64);
    }
    let mut report = InequalityReport::asserted("class-ratio", worst, bound as f64, tol)
        .with_param("m", m as f64)
        .with_param("d", d as f64)
        .with_param("trials", trials as f64);
    // The exact integer comparison is authoritative.
    report.pass = Some(all_exact);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::BooleanFunction;

    fn parity_xy() -> FourierSpectrum {
        FourierSpectrum::new(2, [(0b11u64, 1.0)]).unwrap()
    }

    #[test]
    fn eval_matches_vertex_table() {
        let f = BooleanFunction::from_point_fn(3, |x| (x[0] + x[1] + x[2]).signum()).unwrap();
        let s = f.walsh_transform();
        let q = TetrahedralPoly::new(&s);
        for row in 0..8u64 {
            let x = f.point(row);
            assert!((q.eval(&x).unwrap() - f.values()[row as usize]).abs() < 1e-12);
        }
        // At the origin the value is the mean coefficient.
        assert_eq!(q.eval(&[0.0, 0.0, 0.0]).unwrap(), s.coefficient(0));
        assert!(q.eval(&[1.5, 0.0, 0.0]).is_err());
        assert!(q.eval(&[0.0, 0.0]).is_err());
    }

    #[test]
    fn class_size_examples() {
        assert_eq!(class_size(&[3, 1, 2]).unwrap(), 6);
        assert_eq!(class_size(&[5, 5, 5]).unwrap(), 1);
        assert_eq!(class_size(&[0, 0, 1, 2]).unwrap(), 12);
        assert_eq!(class_size(&[]).unwrap(), 1);
        assert!(class_size(&[1; 40]).is_err());
    }

    #[test]
    fn weight_table_examples() {
        let w = two_block_weights(0, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(w.weight(k, 0), 1.0);
        }
        let w = two_block_weights(3, 3).unwrap();
        for k in 0..=3 {
            assert_eq!(w.weight(k, k), 1.0);
        }
        let w = two_block_weights(1, 3).unwrap();
        let r = w.weight_exact(2, 1);
        assert_eq!((r.num, r.den), (1, 3));
        assert!(two_block_weights(4, 3).is_err());
    }

    #[test]
    fn weight_rows_sum_to_one_exactly() {
        // Vandermonde: Σ_j C(m,j) C(d-m,k-j) = C(d,k), the diagonal identity.
        for d in 0u32..=12 {
            for m in 0..=d {
                for k in 0..=d {
                    let sum: u128 = (0..=k.min(m))
                        .map(|j| {
                            binomial(m as u64, j as u64).unwrap()
                                * binomial((d - m) as u64, (k - j) as u64).unwrap()
                        })
                        .sum();
                    assert_eq!(sum, binomial(d as u64, k as u64).unwrap());
                }
            }
        }
    }

    #[test]
    fn diagonal_recovers_polynomial() {
        let s = FourierSpectrum::new(
            3,
            [
                (0b000u64, 0.3),
                (0b011u64, -1.0),
                (0b101u64, 0.5),
                (0b111u64, 2.0),
            ],
        )
        .unwrap();
        let q = TetrahedralPoly::new(&s);
        for m in 0..=3 {
            let w = two_block_weights(m, 3).unwrap();
            for &x in &[[1.0, -1.0, 1.0], [0.25, -0.75, 0.5], [0.0, 0.0, 0.0]] {
                let diag = two_block_eval(&q, &w, &x, &x).unwrap();
                assert!((diag - q.eval(&x).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn single_top_monomial_full_block_is_identity() {
        let s = parity_xy();
        let q = TetrahedralPoly::new(&s);
        let w = two_block_weights(2, 2).unwrap();
        let x = [0.7, -0.4];
        let y = [-1.0, 0.2];
        let v = two_block_eval(&q, &w, &x, &y).unwrap();
        assert!((v - x[0] * x[1]).abs() < 1e-15);
    }

    #[test]
    fn parity_two_block_is_symmetrized_product() {
        let s = parity_xy();
        let q = TetrahedralPoly::new(&s);
        let w = two_block_weights(1, 2).unwrap();
        let x = [0.9, -0.3];
        let y = [-0.5, 0.8];
        let expected = (x[0] * y[1] + x[1] * y[0]) / 2.0;
        assert!((two_block_eval(&q, &w, &x, &y).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn oracle_agrees_on_structured_cases() {
        let s = parity_xy();
        let q = TetrahedralPoly::new(&s);
        let x = [0.9, -0.3];
        let y = [-0.5, 0.8];
        let expected = (x[0] * y[1] + x[1] * y[0]) / 2.0;
        assert!((two_block_oracle(&q, 1, &x, &y).unwrap() - expected).abs() < 1e-12);
        // m = d with x = y gives Q(x).
        assert!((two_block_oracle(&q, 2, &x, &x).unwrap() - x[0] * x[1]).abs() < 1e-12);
        // Constants polarize to themselves.
        let c = FourierSpectrum::new(2, [(0u64, 0.7)]).unwrap();
        let qc = TetrahedralPoly::new(&c);
        assert!((two_block_oracle(&qc, 0, &x, &y).unwrap() - 0.7).abs() < 1e-15);
    }

    #[test]
    fn oracle_matches_weights_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..60 {
            let n = rng.random_range(1..=4u32);
            let d = rng.random_range(0..=n);
            let mut coeffs = Vec::new();
            for mask in 0..1u64 << n {
                if mask.count_ones() <= d {
                    coeffs.push((mask, rng.random_range(-1.0..1.0)));
                }
            }
            let s = FourierSpectrum::new(n, coeffs).unwrap();
            let q = TetrahedralPoly::new(&s);
            let d = q.degree();
            let m = rng.random_range(0..=d);
            let w = two_block_weights(m, d).unwrap();
            let x: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let y: Vec<f64> = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
            let via_weights = two_block_eval(&q, &w, &x, &y).unwrap();
            let via_oracle = two_block_oracle(&q, m, &x, &y).unwrap();
            assert!(
                (via_weights - via_oracle).abs() < 1e-9,
                "trial {trial}: {via_weights} vs {via_oracle}"
            );
        }
    }

    #[test]
    fn swap_symmetry_of_complementary_blocks() {
        let s = FourierSpectrum::new(
            3,
            [
                (0b001u64, 0.4),
                (0b011u64, -0.9),
                (0b110u64, 0.6),
                (0b111u64, 1.1),
            ],
        )
        .unwrap();
        let q = TetrahedralPoly::new(&s);
        let d = q.degree();
        let x = [0.3, -0.8, 1.0];
        let y = [-0.2, 0.5, -1.0];
        for m in 0..=d {
            let wm = two_block_weights(m, d).unwrap();
            let wc = two_block_weights(d - m, d).unwrap();
            let a = two_block_eval(&q, &wm, &x, &y).unwrap();
            let b = two_block_eval(&q, &wc, &y, &x).unwrap();
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn multiaffine_in_each_coordinate() {
        let s = FourierSpectrum::new(
            3,
            [
                (0b001u64, 0.4),
                (0b011u64, -0.9),
                (0b101u64, 0.6),
                (0b111u64, 1.1),
            ],
        )
        .unwrap();
        let q = TetrahedralPoly::new(&s);
        let w = two_block_weights(1, 3).unwrap();
        let y = [-0.2, 0.5, -1.0];
        let base = [0.3, -0.8, 1.0];
        for i in 0..3 {
            let at = |v: f64| {
                let mut x = base;
                x[i] = v;
                two_block_eval(&q, &w, &x, &y).unwrap()
            };
            let (lo, mid, hi) = (at(-1.0), at(0.0), at(1.0));
            assert!((mid - (lo + hi) / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn product_distribution_mean_identity() {
        // Independent coordinates: E[Q(X)] = Q(E[X]), exhaustively over a
        // two-point product distribution.
        let s = FourierSpectrum::new(
            3,
            [
                (0b000u64, 0.2),
                (0b001u64, 0.4),
                (0b011u64, -0.9),
                (0b111u64, 1.1),
            ],
        )
        .unwrap();
        let q = TetrahedralPoly::new(&s);
        let probs = [0.3, 0.65, 0.1];
        let mut expectation = 0.0;
        for pattern in 0..8u64 {
            let mut weight = 1.0;
            let mut x = [0.0f64; 3];
            for i in 0..3 {
                if pattern >> i & 1 == 1 {
                    weight *= probs[i];
                    x[i] = -1.0;
                } else {
                    weight *= 1.0 - probs[i];
                    x[i] = 1.0;
                }
            }
            expectation += weight * q.eval(&x).unwrap();
        }
        let mean: Vec<f64> = probs.iter().map(|p| 1.0 - 2.0 * p).collect();
        assert!((expectation - q.eval(&mean).unwrap()).abs() < 1e-12);
    }

    #[test]
    fn two_block_bound_parity_example() {
        let s = parity_xy();
        let q = TetrahedralPoly::new(&s);
        let report = two_block_bound_check(&q, 1, 1e-9).unwrap();
        assert_eq!(report.pass, Some(true));
        assert!((report.lhs - 1.0).abs() < 1e-12);
        assert!((report.rhs - 4.0).abs() < 1e-12);
        // m = 0 reduces to |Q(y)| <= 2 sup.
        let report = two_block_bound_check(&q, 0, 1e-9).unwrap();
        assert_eq!(report.pass, Some(true));
        assert!((report.ratio - 0.5).abs() < 1e-12);
        assert!(two_block_bound_check(&q, 2, 1e-9).is_err());
    }

    #[test]
    fn homogeneous_polarization_parity_example() {
        let s = parity_xy();
        let q = TetrahedralPoly::new(&s);
        let report = homogeneous_polarization_check(&q, 1, 1e-9).unwrap();
        assert_eq!(report.pass, Some(true));
        assert!((report.lhs - 1.0).abs() < 1e-12);
        assert!((report.rhs - 2.0).abs() < 1e-12);

        let mixed = FourierSpectrum::new(2, [(0b01u64, 1.0), (0b11u64, 1.0)]).unwrap();
        let qm = TetrahedralPoly::new(&mixed);
        assert!(homogeneous_polarization_check(&qm, 1, 1e-9).is_err());
    }

    #[test]
    fn class_ratio_exact_bound() {
        for (m, d) in [(1u32, 3u32), (2, 4), (3, 7), (5, 10)] {
            let report = class_ratio_check(m, d, 500, 7, 1e-9).unwrap();
            assert_eq!(report.pass, Some(true), "m={m} d={d}");
            // Fully supported pair attains the binomial bound exactly.
            assert_eq!(report.ratio, 1.0, "m={m} d={d}");
        }
        assert!(class_ratio_check(4, 13, 10, 7, 1e-9).is_err());
    }
}
