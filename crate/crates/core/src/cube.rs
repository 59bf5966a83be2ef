//! Functions on the Boolean cube {±1}^n and their Fourier–Walsh spectra.
//!
//! Point indexing: row index r encodes the point x(r) with x_i = +1 when bit
//! (i-1) of r is clear and x_i = -1 when it is set, so row 0 is the all-plus
//! point and the character value is x(r)^S = (-1)^{popcount(r AND S)}.
//! Subset masks use the same bit convention: bit (i-1) set means i is in S.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::util::{argmax_by, character_sign, pairwise_sum, pairwise_sum_by};

/// Largest dimension for which dense 2^n tables are enumerated.
pub const MAX_DENSE_N: u32 = 24;

/// Largest dimension representable by a sparse spectrum (mask width).
pub const MAX_SPARSE_N: u32 = 63;

/// Coefficients below this absolute value are dropped when a sparse spectrum
/// is built from a dense transform; it suppresses butterfly round-off without
/// hiding genuine small coefficients at desk scale.
pub const COEFF_DROP_TOLERANCE: f64 = 1e-14;

const PAR_FWHT_CUTOFF: usize = 1 << 16;

/// Dense value table of a real function on {±1}^n.
#[derive(Debug, Clone, PartialEq)]
pub struct BooleanFunction {
    n: u32,
    values: Vec<f64>,
}

/// Sparse subset-indexed Fourier–Walsh coefficients with cached degree.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierSpectrum {
    n: u32,
    coeffs: BTreeMap<u64, f64>,
    degree: u32,
}

impl BooleanFunction {
    /// Wraps a value table; `values[r]` is f at the point encoded by row r.
    pub fn new(n: u32, values: Vec<f64>) -> Result<Self> {
        check_dense_dimension(n)?;
        if values.len() != 1usize << n {
            return Err(Error::invalid(format!(
                "value table has {} entries, expected 2^{} = {}",
                values.len(),
                n,
                1usize << n
            )));
        }
        if let Some(bad) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::invalid(format!(
                "non-finite value {} at row {}",
                values[bad], bad
            )));
        }
        Ok(BooleanFunction { n, values })
    }

    /// Builds the table by evaluating `f` at every point of the cube.
    pub fn from_point_fn(n: u32, f: impl Fn(&[f64]) -> f64) -> Result<Self> {
        check_dense_dimension(n)?;
        let mut coords = vec![1.0f64; n as usize];
        let values = (0..1usize << n)
            .map(|row| {
                fill_point(n, row as u64, &mut coords);
                f(&coords)
            })
            .collect();
        Self::new(n, values)
    }

    pub fn constant(n: u32, c: f64) -> Result<Self> {
        check_dense_dimension(n)?;
        Self::new(n, vec![c; 1 << n])
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// The ±1 coordinates of the point encoded by `row`.
    pub fn point(&self, row: u64) -> Vec<f64> {
        let mut coords = vec![1.0f64; self.n as usize];
        fill_point(self.n, row, &mut coords);
        coords
    }

    /// Forward transform: all 2^n coefficients f̂(S) = 2^{-n} Σ_x f(x) x^S,
    /// by the in-place butterfly in O(n 2^n); entries below
    /// [`COEFF_DROP_TOLERANCE`] are omitted from the sparse map.
    pub fn walsh_transform(&self) -> FourierSpectrum {
        let mut data = self.values.clone();
        fwht_in_place(&mut data);
        let scale = 1.0 / (1u64 << self.n) as f64;
        let coeffs = data
            .iter()
            .enumerate()
            .filter_map(|(mask, &v)| {
                let c = v * scale;
                (c.abs() >= COEFF_DROP_TOLERANCE).then_some((mask as u64, c))
            })
            .collect();
        FourierSpectrum::from_map(self.n, coeffs)
    }

    /// E\[f\] under the uniform measure.
    pub fn mean(&self) -> f64 {
        pairwise_sum(&self.values) / (1u64 << self.n) as f64
    }

    /// max_x |f(x)|.
    pub fn sup_norm(&self) -> f64 {
        self.sup_norm_witness().0
    }

    /// max_x |f(x)| together with the attaining row index (smallest on ties).
    pub fn sup_norm_witness(&self) -> (f64, u64) {
        let (row, value) = argmax_by(self.values.len(), &|i| self.values[i].abs());
        (value, row as u64)
    }

    /// (2^{-n} Σ_x |f(x)|^p)^{1/p} for p ≥ 1.
    pub fn p_norm(&self, p: f64) -> Result<f64> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::invalid(format!("p-norm requires p >= 1, got {p}")));
        }
        let n_points = (1u64 << self.n) as f64;
        let sum = if p == 2.0 {
            pairwise_sum_by(self.values.len(), &|i| self.values[i] * self.values[i])
        } else {
            pairwise_sum_by(self.values.len(), &|i| self.values[i].abs().powf(p))
        };
        Ok((sum / n_points).powf(1.0 / p))
    }
}

impl FourierSpectrum {
    /// Builds a spectrum from (mask, coefficient) pairs; exact zeros are
    /// dropped so the cached degree matches the stored support.
    pub fn new(n: u32, coeffs: impl IntoIterator<Item = (u64, f64)>) -> Result<Self> {
        if n > MAX_SPARSE_N {
            return Err(Error::capacity(format!(
                "dimension {n} exceeds the sparse mask width {MAX_SPARSE_N}"
            )));
        }
        let mut map = BTreeMap::new();
        for (mask, value) in coeffs {
            if n < 64 && mask >> n != 0 {
                return Err(Error::invalid(format!(
                    "mask {mask:#b} does not fit in {n} bits"
                )));
            }
            if !value.is_finite() {
                return Err(Error::invalid(format!(
                    "non-finite coefficient at {mask:#b}"
                )));
            }
            if value != 0.0 && map.insert(mask, value).is_some() {
                return Err(Error::invalid(format!("duplicate mask {mask:#b}")));
            }
        }
        Ok(Self::from_map(n, map))
    }

    fn from_map(n: u32, coeffs: BTreeMap<u64, f64>) -> Self {
        let degree = coeffs.keys().map(|m| m.count_ones()).max().unwrap_or(0);
        FourierSpectrum { n, coeffs, degree }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Max popcount over stored masks; 0 for the zero function.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coefficients(&self) -> &BTreeMap<u64, f64> {
        &self.coeffs
    }

    pub fn coefficient(&self, mask: u64) -> f64 {
        self.coeffs.get(&mask).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, c: f64) -> Self {
        let coeffs = self.coeffs.iter().map(|(&m, &v)| (m, c * v)).collect();
        Self::from_map(self.n, coeffs)
    }

    /// Synthesis f(x) = Σ_S f̂(S) x^S at all 2^n points.
    pub fn inverse_transform(&self) -> Result<BooleanFunction> {
        check_dense_dimension(self.n)?;
        let mut data = vec![0.0f64; 1 << self.n];
        for (&mask, &value) in &self.coeffs {
            data[mask as usize] = value;
        }
        fwht_in_place(&mut data);
        BooleanFunction::new(self.n, data)
    }

    /// Restriction of the spectrum to level m (masks of popcount m).
    pub fn homogeneous_part(&self, m: u32) -> Result<Self> {
        if m > self.n {
            return Err(Error::invalid(format!(
                "level {m} out of range for dimension {}",
                self.n
            )));
        }
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(mask, _)| mask.count_ones() == m)
            .map(|(&mask, &v)| (mask, v))
            .collect();
        Ok(Self::from_map(self.n, coeffs))
    }

    /// Truncation to degree ≤ m.
    pub fn truncate_degree(&self, m: u32) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .filter(|(mask, _)| mask.count_ones() <= m)
            .map(|(&mask, &v)| (mask, v))
            .collect();
        Self::from_map(self.n, coeffs)
    }

    /// Noise operator T_ρ: multiplies the level-|S| coefficient by ρ^{|S|}.
    /// ρ outside (-1, 1) is accepted here; hypothesis checks happen in the
    /// report layer.
    pub fn noise_operator(&self, rho: f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(&mask, &v)| (mask, v * rho.powi(mask.count_ones() as i32)))
            .filter(|(_, v)| *v != 0.0)
            .collect();
        Self::from_map(self.n, coeffs)
    }

    /// Var(f) = Σ_{S≠∅} f̂(S)².
    pub fn variance(&self) -> f64 {
        let sq: Vec<f64> = self
            .coeffs
            .iter()
            .filter(|(&mask, _)| mask != 0)
            .map(|(_, &v)| v * v)
            .collect();
        pairwise_sum(&sq)
    }

    /// Inf_j(f) = Σ_{S∋j} f̂(S)² for a 1-based coordinate j.
    pub fn influence(&self, j: u32) -> Result<f64> {
        if j == 0 || j > self.n {
            return Err(Error::invalid(format!(
                "coordinate {j} out of range 1..={}",
                self.n
            )));
        }
        let bit = 1u64 << (j - 1);
        let sq: Vec<f64> = self
            .coeffs
            .iter()
            .filter(|(&mask, _)| mask & bit != 0)
            .map(|(_, &v)| v * v)
            .collect();
        Ok(pairwise_sum(&sq))
    }

    /// (max_j Inf_j, attaining j), ties broken by the smallest coordinate.
    pub fn max_influence(&self) -> Result<(f64, u32)> {
        if self.n == 0 {
            return Err(Error::invalid("max_influence needs n >= 1".to_string()));
        }
        let mut best = (self.influence(1)?, 1u32);
        for j in 2..=self.n {
            let inf = self.influence(j)?;
            if inf > best.0 {
                best = (inf, j);
            }
        }
        Ok(best)
    }

    /// Σ_S f̂(S)², the Parseval sum.
    pub fn energy(&self) -> f64 {
        let sq: Vec<f64> = self.coeffs.values().map(|&v| v * v).collect();
        pairwise_sum(&sq)
    }

    /// Largest absolute coefficient difference against `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut masks: Vec<u64> = self.coeffs.keys().copied().collect();
        masks.extend(other.coeffs.keys());
        masks.sort_unstable();
        masks.dedup();
        masks
            .into_iter()
            .map(|m| (self.coefficient(m) - other.coefficient(m)).abs())
            .fold(0.0, f64::max)
    }
}

/// Writes the ±1 coordinates of row `row` into `coords`.
pub(crate) fn fill_point(n: u32, row: u64, coords: &mut [f64]) {
    for (i, c) in coords.iter_mut().enumerate().take(n as usize) {
        *c = if row >> i & 1 == 0 { 1.0 } else { -1.0 };
    }
}

fn check_dense_dimension(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("dimension must be at least 1".to_string()));
    }
    if n > MAX_DENSE_N {
        return Err(Error::capacity(format!(
            "dimension {n} exceeds the dense enumeration cap {MAX_DENSE_N}"
        )));
    }
    Ok(())
}

/// Unnormalized in-place fast Walsh–Hadamard transform.
///
/// Every output entry is computed by the same butterfly expression regardless
/// of how the blocks are partitioned across workers, so the parallel path is
/// bit-identical to the sequential one.
pub(crate) fn fwht_in_place(data: &mut [f64]) {
    let size = data.len();
    debug_assert!(size.is_power_of_two());
    let mut half = 1usize;
    while half < size {
        let block = half * 2;
        let butterfly = |chunk: &mut [f64]| {
            let (lo, hi) = chunk.split_at_mut(half);
            for i in 0..half {
                let a = lo[i];
                let b = hi[i];
                lo[i] = a + b;
                hi[i] = a - b;
            }
        };
        if size >= PAR_FWHT_CUTOFF && block < size {
            data.par_chunks_mut(block).for_each(butterfly);
        } else {
            data.chunks_mut(block).for_each(butterfly);
        }
        half = block;
    }
}

/// Evaluates the synthesis Σ_S f̂(S) x^S at a single vertex row.
pub fn evaluate_at_vertex(spectrum: &FourierSpectrum, row: u64) -> f64 {
    let terms: Vec<f64> = spectrum
        .coefficients()
        .iter()
        .map(|(&mask, &v)| v * character_sign(row, mask))
        .collect();
    pairwise_sum(&terms)
}
