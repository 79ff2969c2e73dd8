use photon_heat_core::model::DEFAULT_N_PHOTONS_MAX;
use photon_heat_core::quantum::{
    effective_temperature, solve_equilibrium_t2, transition_rates, two_level_power, BathSpec, CavityState,
    quasiequilibrium_temperature, FixedPointOptions, QuantumModel, RESISTOR_1, RESISTOR_2,
};
use photon_heat_core::SystemParams;
use proptest::prelude::*;

fn model(coupling: f64, bath: f64) -> QuantumModel {
    QuantumModel::new(SystemParams::reference_device(230.0, Some(coupling), bath)).unwrap()
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / a.abs().max(b.abs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cavity_energy_balance(
        log_gamma in 6.0f64..10.0,
        t1 in 0.02f64..0.5,
        t2 in 0.02f64..0.5,
        t in 0.02f64..0.5,
    ) {
        let sol = model(10f64.powf(log_gamma), t).solve(t1, t2).unwrap();
        let p = sol.power.per_resistor_net_power;
        let scale = p[0].abs().max(p[1].abs()).max(sol.power.internal_loss_power.abs());
        prop_assert!(sol.power.cavity_imbalance().abs() <= 1e-10 * scale);
    }

    #[test]
    fn heat_flows_from_hot_to_cold(
        log_gamma1 in 6.0f64..10.0,
        log_gamma2 in 6.0f64..10.0,
        t1 in 0.02f64..0.5,
        t2 in 0.02f64..0.5,
    ) {
        prop_assume!(t1 != t2);
        // lossless line, so the resistors only exchange heat with each other
        let mut params = SystemParams::reference_device(230.0, Some(10f64.powf(log_gamma1)), 0.04);
        params.resistor2.coupling_override = Some(10f64.powf(log_gamma2));
        params.cavity.loss_per_len = 0.0;
        let p = QuantumModel::new(params).unwrap().solve(t1, t2).unwrap().power;
        let into_2 = p.per_resistor_net_power[1];
        prop_assert_eq!(into_2 > 0.0, t1 > t2);
        prop_assert_eq!(p.per_resistor_net_power[0] > 0.0, t2 > t1);
    }
}

#[test]
fn equal_temperatures_are_an_equilibrium() {
    for t in [0.04, 0.1, 0.25, 0.4] {
        let sol = model(1.53e9, t).solve(t, t).unwrap();
        for p in sol.power.per_resistor_net_power {
            assert!(p.abs() < 1e-22, "T = {t}: {p:e}");
        }
        assert!(sol.power.internal_loss_power.abs() < 1e-22);
        assert!(rel(sol.effective_temperature().unwrap(), t) < 1e-9);
    }
}

#[test]
fn power_into_second_resistor_grows_with_t1() {
    let m = model(1.53e9, 0.04);
    let powers: Vec<f64> = (0..50)
        .map(|i| 0.04 + 0.36 * i as f64 / 49.0)
        .map(|t1| m.power_into_resistor2(t1, 0.1).unwrap())
        .collect();
    assert!(powers.windows(2).all(|w| w[1] > w[0]));
}

#[test]
fn photon_truncation_is_converged() {
    let base = SystemParams::reference_device(230.0, Some(1.53e9), 0.04);
    let mut doubled = base;
    doubled.n_photons_max = 2 * DEFAULT_N_PHOTONS_MAX;
    let (a, b) = (QuantumModel::new(base).unwrap(), QuantumModel::new(doubled).unwrap());
    for (t1, t2) in [(0.4, 0.3), (0.4, 0.04), (0.1, 0.2), (0.25, 0.05)] {
        let pa = a.solve(t1, t2).unwrap().power;
        let pb = b.solve(t1, t2).unwrap().power;
        for (x, y) in pa.per_resistor_net_power.iter().zip(&pb.per_resistor_net_power) {
            assert!(rel(*x, *y) < 1e-10);
        }
    }
}

#[test]
fn mode_sum_is_converged() {
    let base = SystemParams::reference_device(230.0, Some(1.53e9), 0.04);
    let mut more = base;
    more.n_modes = 2 * base.n_modes;
    let (a, b) = (QuantumModel::new(base).unwrap(), QuantumModel::new(more).unwrap());
    for (t1, t2) in [(0.4, 0.3), (0.4, 0.04), (0.15, 0.13)] {
        let pa = a.power_into_resistor2(t1, t2).unwrap();
        let pb = b.power_into_resistor2(t1, t2).unwrap();
        assert!(rel(pa, pb) < 1e-8, "{pa:e} vs {pb:e}");
    }
}

#[test]
fn single_photon_chain_is_the_two_level_model() {
    let omega = 6.2828e10;
    for (g1, g2, t1, t2) in [
        (1.53e9, 1.53e9, 0.1, 0.08),
        (1.46e10, 1.46e10, 0.15, 0.13),
        (1e7, 3e9, 0.04, 0.4),
        (2e8, 5e6, 0.3, 0.02),
    ] {
        let baths = [BathSpec::new(g1, t1).unwrap(), BathSpec::new(g2, t2).unwrap()];
        let state = CavityState::solve(&[omega], &baths, 1).unwrap();
        let full = state.net_power_into(RESISTOR_2).unwrap();
        let analytic = -two_level_power(&baths[0], &baths[1], omega).unwrap();
        assert!(rel(full, analytic) < 1e-12, "{full:e} vs {analytic:e}");
        assert!(rel(state.net_power_into(RESISTOR_1).unwrap(), -full) < 1e-12);
    }
}

#[test]
fn single_bath_sets_the_cavity_temperature() {
    for i in 0..=36 {
        let t1 = 0.04 + 0.01 * i as f64;
        let baths = [BathSpec::new(1.53e9, t1).unwrap(), BathSpec::new(0.0, 0.04).unwrap()];
        let rates = transition_rates(1, 6.2828e10, &baths).unwrap();
        assert!(rel(effective_temperature(&rates).unwrap(), t1) < 1e-9);
    }
}

#[test]
fn effective_temperature_lies_between_the_baths() {
    let m = model(1.53e9, 0.04);
    for (t1, t2) in [(0.4, 0.1), (0.05, 0.25), (0.2, 0.19)] {
        let t_eff = m.solve(t1, t2).unwrap().effective_temperature().unwrap();
        assert!(t_eff > t1.min(t2).min(0.04) && t_eff < t1.max(t2));
    }
}

#[test]
fn self_consistent_t2_balances_heat() {
    let opts = FixedPointOptions::default();
    for (gamma, bath) in [(1.53e9, 0.04), (1.53e7, 0.04), (1.53e9, 0.25)] {
        let m = model(gamma, bath);
        for t1 in [0.05, 0.1, 0.25, 0.4] {
            let eq = solve_equilibrium_t2(&m, t1, &opts).unwrap();
            let p_cav = eq.solution.power.per_resistor_net_power[RESISTOR_2];
            let sigma_v = m.params().resistor2.phonon_conductance_coefficient();
            let balanced = quasiequilibrium_temperature(p_cav, sigma_v, bath).unwrap();
            assert!((balanced - eq.t2).abs() < 1e-8, "γ = {gamma:e}, T = {bath}, T₁ = {t1}");
            let (lo, hi) = (t1.min(bath), t1.max(bath));
            assert!(eq.t2 >= lo && eq.t2 <= hi);
        }
    }
}
