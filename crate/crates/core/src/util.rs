//! Shared numeric helpers: reproducible reductions and exact combinatorics.
//!
//! All floating-point reductions go through [`pairwise_sum`], which splits the
//! input at the midpoint recursively. The combination tree depends only on the
//! slice length, so results are bit-identical no matter how many rayon workers
//! participate.

use crate::error::{Error, Result};

const SEQ_CUTOFF: usize = 64;
const PAR_CUTOFF: usize = 1 << 15;

/// Pairwise (cascade) summation with a length-determined reduction tree.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= SEQ_CUTOFF {
        return v.iter().sum();
    }
    let (lo, hi) = v.split_at(v.len() / 2);
    if v.len() >= PAR_CUTOFF {
        let (a, b) = rayon::join(|| pairwise_sum(lo), || pairwise_sum(hi));
        a + b
    } else {
        pairwise_sum(lo) + pairwise_sum(hi)
    }
}

/// Pairwise sum of `f` mapped over an index range, same tree as [`pairwise_sum`].
pub fn pairwise_sum_by<F: Fn(usize) -> f64 + Sync>(len: usize, f: &F) -> f64 {
    fn go<F: Fn(usize) -> f64 + Sync>(start: usize, len: usize, f: &F) -> f64 {
        if len <= SEQ_CUTOFF {
            return (start..start + len).map(f).sum();
        }
        let half = len / 2;
        if len >= PAR_CUTOFF {
            let (a, b) = rayon::join(|| go(start, half, f), || go(start + half, len - half, f));
            a + b
        } else {
            go(start, half, f) + go(start + half, len - half, f)
        }
    }
    go(0, len, f)
}

/// Index of the maximizer of `f` over `0..len`, smallest index on ties.
///
/// The combine step prefers strictly larger values and smaller indices on
/// exact ties, which is associative, so the parallel split cannot change the
/// winner.
pub fn argmax_by<F: Fn(usize) -> f64 + Sync>(len: usize, f: &F) -> (usize, f64) {
    fn go<F: Fn(usize) -> f64 + Sync>(start: usize, len: usize, f: &F) -> (usize, f64) {
        if len <= SEQ_CUTOFF {
            let mut best = (start, f(start));
            for i in start + 1..start + len {
                let v = f(i);
                if v > best.1 {
                    best = (i, v);
                }
            }
            return best;
        }
        let half = len / 2;
        let (a, b) = if len >= PAR_CUTOFF {
            rayon::join(|| go(start, half, f), || go(start + half, len - half, f))
        } else {
            (go(start, half, f), go(start + half, len - half, f))
        };
        if b.1 > a.1 {
            b
        } else {
            a
        }
    }
    assert!(len > 0, "argmax over empty range");
    go(0, len, f)
}

// ---------------------------------------------------------------------------
// Exact integer combinatorics (u128 with overflow detection)
// ---------------------------------------------------------------------------

pub fn checked_mul(a: u128, b: u128, what: &str) -> Result<u128> {
    a.checked_mul(b)
        .ok_or_else(|| Error::overflow(what.to_string()))
}

/// Binomial coefficient C(n, k) in exact arithmetic.
pub fn binomial(n: u64, k: u64) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = checked_mul(acc, (n - i) as u128, "binomial")?;
        acc /= (i + 1) as u128;
    }
    Ok(acc)
}

/// n! in exact arithmetic; overflows above n = 34.
pub fn factorial(n: u64) -> Result<u128> {
    let mut acc: u128 = 1;
    for i in 2..=n as u128 {
        acc = checked_mul(acc, i, "factorial")?;
    }
    Ok(acc)
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Iterates the submasks of `mask` in ascending numeric order, including 0
/// and `mask` itself.
pub fn submasks(mask: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == mask {
            None
        } else {
            Some((cur.wrapping_sub(mask)) & mask)
        };
        Some(cur)
    })
}

/// Sign of the Walsh character x(r)^S: +1.0 or -1.0 per popcount parity.
#[inline]
pub fn character_sign(row: u64, mask: u64) -> f64 {
    if (row & mask).count_ones() & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairwise_matches_naive() {
        let v: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = v.iter().sum();
        assert!((pairwise_sum(&v) - naive).abs() < 1e-10);
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(40, 20).unwrap(), 137846528820);
    }

    #[test]
    fn factorial_overflow_guard() {
        assert_eq!(factorial(5).unwrap(), 120);
        assert!(factorial(34).is_ok());
        assert!(factorial(35).is_err());
    }

    #[test]
    fn submask_order_is_ascending() {
        let got: Vec<u64> = submasks(0b1010).collect();
        assert_eq!(got, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        let single: Vec<u64> = submasks(0).collect();
        assert_eq!(single, vec![0]);
    }

    #[test]
    fn argmax_prefers_smallest_index_on_ties() {
        let v = [1.0, 3.0, 3.0, 2.0];
        let (i, m) = argmax_by(v.len(), &|i| v[i]);
        assert_eq!((i, m), (1, 3.0));
    }
}
