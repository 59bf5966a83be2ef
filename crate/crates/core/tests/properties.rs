//! Property tests for the structural invariants: transform round trips,
//! Parseval, noise semigroup, scale invariances, and format round trips.

use proptest::collection::vec;
use proptest::prelude::*;

use bspec_core::cheb::{psi_expand, UnivariatePoly};
use bspec_core::cube::{BooleanFunction, FourierSpectrum};
use bspec_core::inequalities::{bh_lhs, bh_ratio, lorentz_norm};
use bspec_core::io;
use bspec_core::polarization::{two_block_eval, two_block_weights, TetrahedralPoly};
use bspec_core::report::DEFAULT_TOL;

fn boolean_function() -> impl Strategy<Value = BooleanFunction> {
    (1u32..=8).prop_flat_map(|n| {
        vec(-4.0f64..4.0, 1usize << n)
            .prop_map(move |values| BooleanFunction::new(n, values).unwrap())
    })
}

fn spectrum() -> impl Strategy<Value = FourierSpectrum> {
    boolean_function().prop_map(|f| f.walsh_transform())
}

proptest! {
    #[test]
    fn round_trip_reproduces_values(f in boolean_function()) {
        let back = f.walsh_transform().inverse_transform().unwrap();
        for (a, b) in f.values().iter().zip(back.values()) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn parseval_holds(f in boolean_function()) {
        let energy = f.walsh_transform().energy();
        let mean_sq = f.p_norm(2.0).unwrap().powi(2);
        prop_assert!((energy - mean_sq).abs() <= 1e-9 * mean_sq.max(1e-30));
    }

    #[test]
    fn influences_sum_to_level_weighted_energy(f in boolean_function()) {
        let s = f.walsh_transform();
        let weighted: f64 = s
            .coefficients()
            .iter()
            .map(|(&m, &c)| m.count_ones() as f64 * c * c)
            .sum();
        let total: f64 = (1..=f.n()).map(|j| s.influence(j).unwrap()).sum();
        prop_assert!((weighted - total).abs() <= 1e-12);
    }

    #[test]
    fn noise_operator_is_a_semigroup(s in spectrum(), r1 in -0.99f64..0.99, r2 in -0.99f64..0.99) {
        let twice = s.noise_operator(r1).noise_operator(r2);
        let once = s.noise_operator(r1 * r2);
        prop_assert!(twice.max_abs_diff(&once) <= 1e-12);
    }

    #[test]
    fn bh_quantities_scale_correctly(s in spectrum(), c in prop::sample::select(vec![-3.0f64, -0.5, 0.25, 2.0])) {
        prop_assume!(!s.is_zero());
        let scaled = s.scale(c);
        prop_assert!((bh_lhs(&scaled) - c.abs() * bh_lhs(&s)).abs() <= 1e-12 * bh_lhs(&s).max(1.0));
        let r = bh_ratio(&s, DEFAULT_TOL).unwrap().ratio;
        let rs = bh_ratio(&scaled, DEFAULT_TOL).unwrap().ratio;
        prop_assert!((r - rs).abs() <= 1e-12 * r.max(1.0));
    }

    #[test]
    fn lorentz_norm_ignores_coordinate_relabeling(s in spectrum(), salt in 0u64..1000) {
        prop_assume!(!s.is_zero());
        let n = s.n();
        // Rotate coordinates by salt.
        let shift = (salt % n as u64) as u32;
        let permuted: Vec<(u64, f64)> = s
            .coefficients()
            .iter()
            .map(|(&mask, &v)| {
                let mut new_mask = 0u64;
                for i in 0..n {
                    if mask >> i & 1 == 1 {
                        new_mask |= 1 << ((i + shift) % n);
                    }
                }
                (new_mask, v)
            })
            .collect();
        let t = FourierSpectrum::new(n, permuted).unwrap();
        prop_assert_eq!(lorentz_norm(&s), lorentz_norm(&t));
    }

    #[test]
    fn two_block_diagonal_is_the_polynomial(f in boolean_function(), m_frac in 0.0f64..1.0) {
        let s = f.walsh_transform();
        let q = TetrahedralPoly::new(&s);
        let d = q.degree();
        let m = ((d as f64 + 1.0) * m_frac) as u32;
        let w = two_block_weights(m.min(d), d).unwrap();
        let x: Vec<f64> = (0..f.n()).map(|i| ((i as f64) * 0.37).sin()).collect();
        let diag = two_block_eval(&q, &w, &x, &x).unwrap();
        prop_assert!((diag - q.eval(&x).unwrap()).abs() <= 1e-12 * diag.abs().max(1.0));
    }

    #[test]
    fn psi_expansion_is_linear(
        a in vec(-2.0f64..2.0, 6),
        b in vec(-2.0f64..2.0, 6),
        alpha in -2.0f64..2.0,
        beta in -2.0f64..2.0,
    ) {
        let pa = UnivariatePoly::new(a).unwrap();
        let pb = UnivariatePoly::new(b).unwrap();
        let combo = pa.add_scaled(&pb, alpha, beta).unwrap();
        let d = 8;
        let ea = psi_expand(&pa, d).unwrap();
        let eb = psi_expand(&pb, d).unwrap();
        let ec = psi_expand(&combo, d).unwrap();
        for n in 0..=d as usize {
            let want = alpha * ea.coeffs()[n] + beta * eb.coeffs()[n];
            prop_assert!((ec.coeffs()[n] - want).abs() <= 1e-9 * want.abs().max(1.0));
        }
    }

    #[test]
    fn formats_round_trip(f in boolean_function()) {
        let text = io::write_truth_table(&f);
        let back = io::read_truth_table(&text).unwrap();
        prop_assert_eq!(back.values(), f.values());

        let s = f.walsh_transform();
        let json = io::spectrum_to_json(&s).unwrap();
        let back = io::spectrum_from_json(&json).unwrap();
        prop_assert_eq!(back.coefficients(), s.coefficients());
    }
}
