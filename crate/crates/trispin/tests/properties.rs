//! Property tests over randomized couplings, temperatures and states.

use proptest::prelude::*;

use trispin::linalg::{
    eigh_symmetric, kron, partial_trace, wootters_concurrence, DensityMatrix, Matrix,
};
use trispin::model::{analytic_spectrum, build_hamiltonian, ModelParams, Pair};
use trispin::thermal::{gibbs_state, thermal_concurrence, xstate_closed_form};

fn params() -> impl Strategy<Value = ModelParams> {
    (
        (-2.0..2.0_f64).prop_filter("J must be nonzero", |j| j.abs() > 1e-3),
        -3.0..3.0_f64,
        -3.0..3.0_f64,
    )
        .prop_map(|(j, h, k)| ModelParams::new(j, h, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn analytic_energies_match_jacobi(p in params()) {
        let h = build_hamiltonian(&p);
        let numeric = eigh_symmetric(&h).unwrap().values;
        let mut analytic = analytic_spectrum(&p).unwrap().energies();
        analytic.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (got, want) in numeric.iter().zip(analytic) {
            prop_assert!((got - want).abs() <= 1e-10);
        }
    }

    #[test]
    fn closed_form_and_numeric_concurrence_agree(p in params(), t in 0.01..5.0_f64) {
        let point = thermal_concurrence(&p, t, Pair::OneThree).unwrap();
        let closed = point.closed_form.unwrap();
        prop_assert!((point.concurrence - closed).abs() <= 1e-8,
            "{} vs {closed}", point.concurrence);
    }

    #[test]
    fn xstate_weight_identities(p in params(), t in 0.001..5.0_f64) {
        let x = xstate_closed_form(&p, t).unwrap();
        prop_assert!(x.u >= 0.0 && x.v >= 0.0 && x.w >= 0.0 && x.z > 0.0);
        prop_assert!(x.trace_residual() <= 1e-10);
        prop_assert!(x.degenerate_weight_residual() <= 1e-10);
        let c = x.concurrence();
        prop_assert!((0.0..=1.0).contains(&c));
    }

    #[test]
    fn reduced_thermal_state_is_an_x_state(p in params(), t in 0.02..3.0_f64) {
        let rho = gibbs_state(&build_hamiltonian(&p), t).unwrap();
        let red = partial_trace(&rho, 2).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let x_position = i == j || (i == 1 && j == 2) || (i == 2 && j == 1);
                if !x_position {
                    prop_assert!(red.entry(i, j).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn mirror_and_j_sign_symmetries(p in params(), t in 0.02..5.0_f64) {
        let c = thermal_concurrence(&p, t, Pair::OneThree).unwrap().concurrence;
        let mirror = ModelParams::new(p.j, -p.h, -p.k);
        let c_m = thermal_concurrence(&mirror, t, Pair::OneThree).unwrap().concurrence;
        prop_assert!((c - c_m).abs() <= 1e-10);
        let j_flip = ModelParams::new(-p.j, p.h, p.k);
        let c_j = thermal_concurrence(&j_flip, t, Pair::OneThree).unwrap().concurrence;
        prop_assert!((c - c_j).abs() <= 1e-10);
    }

    #[test]
    fn wootters_matches_x_state_closed_form(
        u in 0.0..1.0_f64,
        v in 0.0..1.0_f64,
        w in 1e-12..1.0_f64,
        y_frac in -1.0..1.0_f64,
    ) {
        let y = y_frac * w;
        let z = u + v + 2.0 * w;
        let rho = DensityMatrix::new(Matrix::from_rows(&[
            vec![u / z, 0.0, 0.0, 0.0],
            vec![0.0, w / z, y / z, 0.0],
            vec![0.0, y / z, w / z, 0.0],
            vec![0.0, 0.0, 0.0, v / z],
        ]))
        .unwrap();
        let oracle = wootters_concurrence(&rho).unwrap();
        let closed = (2.0 / z) * (y.abs() - (u * v).sqrt()).max(0.0);
        prop_assert!((oracle - closed).abs() <= 1e-8);
    }

    #[test]
    fn partial_trace_preserves_trace(p in params(), t in 0.02..3.0_f64, q in 1_usize..4) {
        let rho = gibbs_state(&build_hamiltonian(&p), t).unwrap();
        let red = partial_trace(&rho, q).unwrap();
        prop_assert!((red.matrix().trace() - 1.0).abs() <= 1e-12);
        for i in 0..4 {
            for j in 0..4 {
                prop_assert!(red.entry(i, j) == red.entry(j, i));
            }
        }
    }

    #[test]
    fn kron_is_associative_on_dyadic_entries(idx in proptest::collection::vec(0_usize..7, 12)) {
        let pool = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0];
        let mat = |sel: &[usize]| {
            Matrix::from_rows(&[
                vec![pool[sel[0]], pool[sel[1]]],
                vec![pool[sel[2]], pool[sel[3]]],
            ])
        };
        let (a, b, c) = (mat(&idx[0..4]), mat(&idx[4..8]), mat(&idx[8..12]));
        prop_assert!(kron(&kron(&a, &b), &c) == kron(&a, &kron(&b, &c)));
    }

    #[test]
    fn spectral_decomposition_reconstructs(entries in proptest::collection::vec(-2.0..2.0_f64, 36)) {
        let n = 6;
        let mut m = Matrix::zeros(n, n);
        let mut it = entries.iter();
        for i in 0..n {
            for j in i..n {
                let x = *it.next().unwrap();
                m[(i, j)] = x;
                m[(j, i)] = x;
            }
        }
        let dec = eigh_symmetric(&m).unwrap();
        let rec = dec.reconstruct();
        let scale = m.norm_inf().max(1.0);
        for i in 0..n {
            for j in 0..n {
                prop_assert!((rec[(i, j)] - m[(i, j)]).abs() <= 1e-10 * scale);
            }
        }
    }
}
