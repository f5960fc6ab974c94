//! Invariants checked on random inputs.

use proptest::prelude::*;

use eur_hawking::channels::{
    apply_on_subsystem, depolarizing_channel, phase_damping_channel, weak_measurement, xz_flip_channel,
};
use eur_hawking::closed_form;
use eur_hawking::correlations::{discord_numeric, discord_xstate_closed_form, mixedness};
use eur_hawking::linalg::{hermitian_eigen, partial_trace, tensor, ComplexMatrix, DensityMatrix, C64};
use eur_hawking::scenario::{evaluate_point, noisy_state, NoiseKind, PointParams, PointStatus};
use eur_hawking::state::{bell_diagonal, embed_hawking, hawking_coeffs, BellParams, HawkingMode};
use eur_hawking::uncertainty::{eur_bound_numeric, eur_lhs_numeric, von_neumann_entropy, ObservablePair};

fn bell() -> impl Strategy<Value = BellParams> {
    (-1.0..=1.0f64, -1.0..=1.0f64, -1.0..=1.0f64)
        .prop_map(|(a, b, c)| BellParams::unchecked(a, b, c))
        .prop_filter("physical", |b| b.is_physical())
}

fn ratio() -> impl Strategy<Value = f64> {
    prop_oneof![Just(0.0), (-2.0..3.0f64).prop_map(|e| 10f64.powf(e))]
}

fn complex() -> impl Strategy<Value = C64> {
    (-1.0..1.0f64, -1.0..1.0f64).prop_map(|(r, i)| C64::new(r, i))
}

fn hermitian(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec(complex(), dim * dim).prop_map(move |v| {
        let m = ComplexMatrix::from_vec(dim, dim, v).unwrap();
        (&m + &m.dagger()).scale(C64::new(0.5, 0.0))
    })
}

fn integer_matrix(dim: usize) -> impl Strategy<Value = ComplexMatrix> {
    prop::collection::vec((-9i32..=9, -9i32..=9), dim * dim).prop_map(move |v| {
        let data = v.into_iter().map(|(r, i)| C64::new(r as f64, i as f64)).collect();
        ComplexMatrix::from_vec(dim, dim, data).unwrap()
    })
}

fn random_hermitian() -> impl Strategy<Value = ComplexMatrix> {
    (2usize..=8).prop_flat_map(hermitian)
}

/// Random density matrix `G G^dagger / Tr`.
fn density(dim: usize) -> impl Strategy<Value = DensityMatrix> {
    prop::collection::vec(complex(), dim * dim).prop_map(move |v| {
        let g = ComplexMatrix::from_vec(dim, dim, v).unwrap();
        let m = &g * &g.dagger();
        let tr = m.trace().re;
        DensityMatrix::new(m.scale(C64::new(1.0 / tr, 0.0))).unwrap()
    })
}

/// Random two-qubit X-state with complex coherences.
fn x_state() -> impl Strategy<Value = DensityMatrix> {
    (
        prop::array::uniform4(0.001..1.0f64),
        0.0..=1.0f64,
        0.0..=1.0f64,
        0.0..std::f64::consts::TAU,
        0.0..std::f64::consts::TAU,
    )
        .prop_map(|(w, s14, s23, ph14, ph23)| {
            let tot: f64 = w.iter().sum();
            let d = w.map(|x| x / tot);
            let mut m = ComplexMatrix::from_diagonal(&d);
            let r14 = C64::from_polar(s14 * (d[0] * d[3]).sqrt(), ph14);
            let r23 = C64::from_polar(s23 * (d[1] * d[2]).sqrt(), ph23);
            m[(0, 3)] = r14;
            m[(3, 0)] = r14.conj();
            m[(1, 2)] = r23;
            m[(2, 1)] = r23.conj();
            DensityMatrix::new(m).unwrap()
        })
}

fn unitary_defect(v: &ComplexMatrix) -> f64 {
    (&v.dagger() * v).max_abs_diff(&ComplexMatrix::identity(v.rows()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn eigen_reconstructs_random_hermitian(m in random_hermitian()) {
        let e = hermitian_eigen(&m).unwrap();
        prop_assert!(e.reconstruct().max_abs_diff(&m) <= 1e-10);
        prop_assert!(unitary_defect(&e.vectors) <= 1e-10);
        let sum: f64 = e.values.iter().sum();
        prop_assert!((sum - m.trace().re).abs() <= 1e-10);
        prop_assert!(e.values.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn eigen_is_deterministic(m in random_hermitian()) {
        let a = hermitian_eigen(&m).unwrap();
        let b = hermitian_eigen(&m).unwrap();
        prop_assert_eq!(a.values, b.values);
        prop_assert_eq!(a.vectors, b.vectors);
    }

    #[test]
    fn partial_trace_composes(rho in density(8)) {
        let joint = partial_trace(&rho, &[2, 2, 2], &[0]).unwrap();
        let step = partial_trace(&rho, &[2, 2, 2], &[0, 1]).unwrap();
        let step = partial_trace(&step, &[2, 2], &[0]).unwrap();
        prop_assert!(joint.matrix().max_abs_diff(step.matrix()) <= 1e-12);
        let other = partial_trace(&partial_trace(&rho, &[2, 2, 2], &[0, 2]).unwrap(), &[2, 2], &[0]).unwrap();
        prop_assert!(joint.matrix().max_abs_diff(other.matrix()) <= 1e-12);
    }

    #[test]
    fn tensor_is_associative(a in integer_matrix(2), b in integer_matrix(3), c in integer_matrix(2)) {
        // Integer entries keep every product exact, so the layout must agree bit for bit.
        prop_assert_eq!(tensor(&tensor(&a, &b), &c), tensor(&a, &tensor(&b, &c)));
    }

    #[test]
    fn tensor_is_associative_to_rounding(a in hermitian(2), b in hermitian(2), c in hermitian(2)) {
        prop_assert!(tensor(&tensor(&a, &b), &c).max_abs_diff(&tensor(&a, &tensor(&b, &c))) <= 1e-15);
    }

    #[test]
    fn hawking_amplitudes_are_normalised(omega in 1e-3..1e3f64, t in ratio()) {
        let (a, b) = hawking_coeffs(omega, t * omega).unwrap();
        prop_assert!((a * a + b * b - 1.0).abs() <= 1e-12);
        prop_assert!((std::f64::consts::FRAC_1_SQRT_2 - 1e-15..=1.0).contains(&a));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn embedding_preserves_trace_and_positivity(b in bell()) {
        let rho = bell_diagonal(b).unwrap();
        for i in 0..20 {
            let t = if i == 0 { 0.0 } else { 10f64.powf(-2.0 + 0.25 * i as f64) };
            let emb = embed_hawking(&rho, &HawkingMode::from_ratio(t).unwrap());
            // DensityMatrix::new enforces trace, hermiticity and PSD.
            prop_assert!(emb.is_ok(), "t = {}: {:?}", t, emb.err());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn trace_preserving_channels_keep_states_valid(rho in density(4), s in 0.0..=1.0f64, target in 0usize..2) {
        for ch in [depolarizing_channel(s).unwrap(), phase_damping_channel(s).unwrap(), xz_flip_channel(s).unwrap()] {
            let (out, ps) = apply_on_subsystem(&rho, &[2, 2], target, &ch).unwrap();
            prop_assert_eq!(ps, 1.0);
            prop_assert!((out.matrix().trace().re - 1.0).abs() <= 1e-12);
            prop_assert!(*out.eigenvalues().unwrap().last().unwrap() >= -1e-10);
        }
    }

    #[test]
    fn weak_measurement_success_probability(rho in density(4), g in 0.0..0.999f64) {
        let (_, ps) = apply_on_subsystem(&rho, &[2, 2], 0, &weak_measurement(g).unwrap()).unwrap();
        let pa0 = rho[(0, 0)].re + rho[(1, 1)].re;
        prop_assert!(ps > 0.0 && ps <= 1.0 + 1e-15);
        prop_assert!((ps - (pa0 + (1.0 - g) * (1.0 - pa0))).abs() <= 1e-12);
    }

    #[test]
    fn uncertainty_relation_holds_for_any_state(rho in density(4)) {
        let pair = ObservablePair::pauli_xz();
        prop_assert!(eur_lhs_numeric(&rho, &pair).unwrap() >= eur_bound_numeric(&rho, &pair).unwrap() - 1e-9);
    }

    #[test]
    fn mixedness_matches_purity(rho in density(4)) {
        let m = mixedness(&rho);
        let purity = (rho.matrix() * rho.matrix()).trace().re;
        prop_assert!((m.mixedness - 4.0 / 3.0 * (1.0 - purity)).abs() <= 1e-12);
        prop_assert!(m.mixedness >= -1e-12 && m.mixedness <= 1.0 + 1e-12);
    }

    #[test]
    fn dp_closed_forms_match_pipeline(b in bell(), p in 0.0..=1.0f64, t in ratio()) {
        let mode = HawkingMode::from_ratio(t).unwrap();
        let out = evaluate_point(&PointParams::new(b, NoiseKind::Dp, p, mode)).unwrap();
        prop_assert_eq!(out.status, PointStatus::Ok, "gap {:?}", out.mismatch);
        let r = out.report.unwrap();
        prop_assert!((r.lhs_analytic.unwrap() - r.lhs_numeric).abs() <= 1e-9);
        prop_assert!((r.bound_analytic.unwrap() - r.bound_numeric).abs() <= 1e-9);
        prop_assert!(r.lhs_numeric >= r.bound_numeric - 1e-9);
    }

    #[test]
    fn pd_closed_forms_match_pipeline(b in bell(), q in 0.0..=1.0f64, t in ratio()) {
        let mode = HawkingMode::from_ratio(t).unwrap();
        let out = evaluate_point(&PointParams::new(b, NoiseKind::Pd, q, mode)).unwrap();
        prop_assert_eq!(out.status, PointStatus::Ok, "gap {:?}", out.mismatch);
        let r = out.report.unwrap();
        prop_assert!((r.lhs_analytic.unwrap() - r.lhs_numeric).abs() <= 1e-9);
        prop_assert!((r.bound_analytic.unwrap() - r.bound_numeric).abs() <= 1e-9);
    }

    #[test]
    fn scenario_states_match_printed_matrices(b in bell(), s in 0.0..=1.0f64, t in ratio()) {
        let mode = HawkingMode::from_ratio(t).unwrap();
        let dp = noisy_state(&PointParams::new(b, NoiseKind::Dp, s, mode)).unwrap();
        prop_assert!(dp.max_abs_diff(&closed_form::dp_state(b, s, mode.a()).to_matrix()) <= 1e-12);
        let pd = noisy_state(&PointParams::new(b, NoiseKind::Pd, s, mode)).unwrap();
        prop_assert!(pd.max_abs_diff(&closed_form::pd_state(b, s, mode.a()).to_matrix()) <= 1e-12);
    }

    #[test]
    fn weak_measurement_forms_match_pipeline(b in bell(), s in 0.0..=1.0f64, t in ratio(), g in 0.0..=1.0f64) {
        let mode = HawkingMode::from_ratio(t).unwrap();
        for noise in [NoiseKind::Dp, NoiseKind::Pd] {
            let out = evaluate_point(&PointParams::new(b, noise, s, mode).with_gamma(g)).unwrap();
            let r = out.report.unwrap();
            prop_assert!((r.lhs_analytic.unwrap() - r.lhs_numeric).abs() <= 1e-9, "{:?}", noise);
            prop_assert!((r.success_probability - (1.0 - g / 2.0)).abs() <= 1e-12);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn numeric_discord_never_exceeds_closed_form(rho in x_state()) {
        let cf = discord_xstate_closed_form(&rho).unwrap();
        let num = discord_numeric(&rho).unwrap();
        prop_assert!(num.discord <= cf.discord + 1e-9, "{} > {}", num.discord, cf.discord);
        prop_assert!((cf.discord - num.discord).abs() <= 2e-3);
        prop_assert!(num.discord >= -1e-9);
        prop_assert!(num.mutual_information >= num.classical_correlation - 1e-9);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_states_gain_nothing_from_memory(ra in density(2), rb in density(2)) {
        let rho = DensityMatrix::new(tensor(ra.matrix(), rb.matrix())).unwrap();
        let pair = ObservablePair::pauli_xz();
        let sb = von_neumann_entropy(&rb).unwrap();
        let deph = eur_hawking::uncertainty::dephase_after_measurement(&rho, pair.first()).unwrap();
        let h_cond = von_neumann_entropy(&deph).unwrap() - sb;
        let h_marg = {
            let d = eur_hawking::uncertainty::dephase_after_measurement(&rho, pair.first()).unwrap();
            von_neumann_entropy(&partial_trace(&d, &[2, 2], &[0]).unwrap()).unwrap()
        };
        prop_assert!((h_cond - h_marg).abs() <= 1e-10);
        prop_assert!(discord_numeric(&rho).unwrap().discord.abs() <= 1e-8);
    }

    #[test]
    fn bound_equals_minus_discord_plus_measured_entropy(rho in density(4)) {
        let pair = ObservablePair::pauli_xz();
        let num = discord_numeric(&rho).unwrap();
        // Q = S(B) - S(AB) + min_k S(A|k), so S(A|B) + 1 = -Q + min_k S(A|k) + 1.
        let sa = von_neumann_entropy(&partial_trace(&rho, &[2, 2], &[0]).unwrap()).unwrap();
        let min_measured = sa - num.classical_correlation;
        let bound = eur_bound_numeric(&rho, &pair).unwrap();
        prop_assert!((bound - (-num.discord + min_measured + 1.0)).abs() <= 1e-6);
    }
}
