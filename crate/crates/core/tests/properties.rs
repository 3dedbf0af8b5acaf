use proptest::prelude::*;

use wise_alice::equilibrium::audit::deviation_scan;
use wise_alice::equilibrium::{find_equilibria, verify_nash_quantum, SolverSettings};
use wise_alice::game::PayoffMatrix;
use wise_alice::report::{self, AnalysisReport, Format};
use wise_alice::scenario::Scenario;
use wise_alice::simulation::{sample_round, SimulationConfig};
use wise_alice::strategy::{Frames, QuantumGame, StrategyAngle};

fn payoff() -> impl Strategy<Value = f64> {
    (0.1f64.ln()..10f64.ln()).prop_map(f64::exp)
}

fn frame() -> impl Strategy<Value = f64> {
    1.0f64..89.0
}

fn game() -> impl Strategy<Value = QuantumGame> {
    ([payoff(), payoff(), payoff(), payoff()], frame(), frame()).prop_map(|(h, ta, tb)| {
        QuantumGame::new(
            PayoffMatrix::new(h[0], h[1], h[2], h[3]).unwrap(),
            Frames::new(ta, tb).unwrap(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn found_equilibria_survive_brute_force(g in game()) {
        let settings = SolverSettings::default();
        let tol = settings.nash_tolerance_for(&g);
        for e in find_equilibria(&g, &settings).unwrap() {
            prop_assert!(verify_nash_quantum(&g, e.alpha, e.beta, tol).accepted);
            prop_assert!(deviation_scan(&g, e.alpha, e.beta, 0.05) <= tol);
            prop_assert!((e.value - g.payoff_surface(e.alpha, e.beta)).abs() < 1e-12);
        }
    }

    #[test]
    fn surface_within_bounds(g in game(), a in 0.0f64..180.0, b in 0.0f64..180.0) {
        let h = &g.payoffs;
        let f = g.payoff_surface(StrategyAngle::from_degrees(a), StrategyAngle::from_degrees(b));
        prop_assert!(f >= -1e-12);
        prop_assert!(f <= h.a().max(h.c()) + h.b().max(h.d()) + 1e-12);
    }

    #[test]
    fn round_payoffs_are_cells(g in game(), a in 0.0f64..180.0, b in 0.0f64..180.0, seed: u64, i in 0u64..1_000_000) {
        let cfg = SimulationConfig::new(
            g,
            StrategyAngle::from_degrees(a),
            StrategyAngle::from_degrees(b),
            1,
            seed,
        ).unwrap();
        let r = sample_round(&cfg, i);
        prop_assert_eq!(r, sample_round(&cfg, i));
        let h = &g.payoffs;
        for s in r.sub_rounds {
            prop_assert_eq!(s.payoff, h.entry(s.alice_outcome, s.bob_outcome));
        }
        prop_assert_eq!(r.payoff, r.sub_rounds[0].payoff + r.sub_rounds[1].payoff);
    }

    #[test]
    fn reports_round_trip(h in [payoff(), payoff(), payoff(), payoff()], ta in frame(), tb in frame()) {
        let s = Scenario::new(h, ta, tb).unwrap();
        let r = report::analyze(&s).unwrap();
        let back = AnalysisReport::from_json(&r.render(Format::Json)).unwrap();
        prop_assert_eq!(&back, &r);
        for c in back.reverify().unwrap() {
            prop_assert!(c.accepted);
        }
    }
}
