//! Monte Carlo play of the quantum game and a step-by-step ball automaton.
//!
//! A round is two independent binary measurements: Alice and Bob each
//! measure in their `{1, 3}` frame and the matrix entry at the two outcomes
//! is paid, then both measure in their `{2, 4}` frame and that entry is paid
//! too. By linearity the round's expectation is exactly `F(α, β)`.
//!
//! Round `i` draws from its own ChaCha8 stream (`stream = i`), so any round
//! can be regenerated alone and parallel runs match sequential ones.

use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::{bob_outcome, Answer, PayoffMatrix, SquareGeometry, Vertex};
use crate::strategy::{OutcomeWeights, QuantumGame, StrategyAngle};

const CHUNK: u64 = 1 << 15;

#[derive(Debug, Clone)]
pub struct SimulationConfig {
    rounds: u64,
    seed: u64,
    key: <ChaCha8Rng as SeedableRng>::Seed,
    game: QuantumGame,
    alpha: StrategyAngle,
    beta: StrategyAngle,
    p: OutcomeWeights,
    q: OutcomeWeights,
}

impl SimulationConfig {
    pub fn new(
        game: QuantumGame,
        alpha: StrategyAngle,
        beta: StrategyAngle,
        rounds: u64,
        seed: u64,
    ) -> Result<Self> {
        if rounds == 0 {
            return Err(Error::InvalidSetting {
                name: "rounds",
                message: "must be at least 1".into(),
            });
        }
        let mut key = <ChaCha8Rng as SeedableRng>::Seed::default();
        key[..8].copy_from_slice(&seed.to_le_bytes());
        Ok(Self {
            rounds,
            seed,
            key,
            game,
            alpha,
            beta,
            p: game.alice_weights(alpha),
            q: game.bob_weights(beta),
        })
    }

    pub fn rounds(&self) -> u64 {
        self.rounds
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn game(&self) -> &QuantumGame {
        &self.game
    }

    pub fn alpha(&self) -> StrategyAngle {
        self.alpha
    }

    pub fn beta(&self) -> StrategyAngle {
        self.beta
    }

    fn rng_for(&self, round_index: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::from_seed(self.key);
        rng.set_stream(round_index);
        rng
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QuestionPair {
    #[serde(rename = "13")]
    OneThree,
    #[serde(rename = "24")]
    TwoFour,
}

impl QuestionPair {
    pub fn label(self) -> &'static str {
        match self {
            QuestionPair::OneThree => "13",
            QuestionPair::TwoFour => "24",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SubRound {
    pub pair: QuestionPair,
    pub alice_outcome: Vertex,
    pub bob_outcome: Vertex,
    pub payoff: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RoundOutcome {
    pub index: u64,
    pub sub_rounds: [SubRound; 2],
    pub payoff: f64,
}

fn measure(rng: &mut ChaCha8Rng, first: f64, outcomes: [Vertex; 2]) -> Vertex {
    if rng.random::<f64>() < first {
        outcomes[0]
    } else {
        outcomes[1]
    }
}

/// Plays round `round_index` of `config`.
pub fn sample_round(config: &SimulationConfig, round_index: u64) -> RoundOutcome {
    let mut rng = config.rng_for(round_index);
    let h = &config.game.payoffs;
    let v = |n: usize| Vertex::ALL[n - 1];
    let mut play = |pair, pf: f64, qf: f64, outcomes: [Vertex; 2]| {
        let alice = measure(&mut rng, pf, outcomes);
        let bob = measure(&mut rng, qf, outcomes);
        SubRound {
            pair,
            alice_outcome: alice,
            bob_outcome: bob,
            payoff: h.entry(alice, bob),
        }
    };
    let odd = play(QuestionPair::OneThree, config.p.p1(), config.q.p1(), [v(1), v(3)]);
    let even = play(QuestionPair::TwoFour, config.p.p2(), config.q.p2(), [v(2), v(4)]);
    RoundOutcome {
        index: round_index,
        payoff: odd.payoff + even.payoff,
        sub_rounds: [odd, even],
    }
}

/// How often outcome 1 (resp. 2) came up for each player.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct MarginalCounts {
    pub alice_1: u64,
    pub bob_1: u64,
    pub alice_2: u64,
    pub bob_2: u64,
}

#[derive(Debug, Clone, Copy, Default)]
struct Accumulator {
    count: u64,
    mean: f64,
    m2: f64,
    marginals: MarginalCounts,
}

impl Accumulator {
    fn push(&mut self, r: &RoundOutcome) {
        self.count += 1;
        let delta = r.payoff - self.mean;
        self.mean += delta / self.count as f64;
        self.m2 += delta * (r.payoff - self.mean);
        let [odd, even] = r.sub_rounds;
        self.marginals.alice_1 += u64::from(odd.alice_outcome.label() == 1);
        self.marginals.bob_1 += u64::from(odd.bob_outcome.label() == 1);
        self.marginals.alice_2 += u64::from(even.alice_outcome.label() == 2);
        self.marginals.bob_2 += u64::from(even.bob_outcome.label() == 2);
    }

    fn merge(self, other: Accumulator) -> Accumulator {
        if self.count == 0 {
            return other;
        }
        if other.count == 0 {
            return self;
        }
        let count = self.count + other.count;
        let delta = other.mean - self.mean;
        let m = &other.marginals;
        Accumulator {
            count,
            mean: self.mean + delta * other.count as f64 / count as f64,
            m2: self.m2
                + other.m2
                + delta * delta * (self.count as f64 * other.count as f64) / count as f64,
            marginals: MarginalCounts {
                alice_1: self.marginals.alice_1 + m.alice_1,
                bob_1: self.marginals.bob_1 + m.bob_1,
                alice_2: self.marginals.alice_2 + m.alice_2,
                bob_2: self.marginals.bob_2 + m.bob_2,
            },
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub rounds: u64,
    pub seed: u64,
    pub mean: f64,
    /// Sample standard deviation; undefined for a single round.
    pub std_dev: Option<f64>,
    pub std_error: Option<f64>,
    pub analytic: f64,
    pub z_score: Option<f64>,
    pub marginals: MarginalCounts,
}

impl SimulationSummary {
    /// `|mean − analytic| ≤ k · SE`; false when SE is undefined.
    pub fn within_standard_errors(&self, k: f64) -> bool {
        match self.std_error {
            Some(se) => (self.mean - self.analytic).abs() <= k * se,
            None => false,
        }
    }
}

/// Plays every round of `config` in parallel and aggregates the payoffs.
/// The result depends only on the configuration.
pub fn run(config: &SimulationConfig) -> SimulationSummary {
    let chunks = config.rounds.div_ceil(CHUNK);
    let partials: Vec<Accumulator> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = Accumulator::default();
            for i in c * CHUNK..((c + 1) * CHUNK).min(config.rounds) {
                acc.push(&sample_round(config, i));
            }
            acc
        })
        .collect();
    let acc = partials.into_iter().fold(Accumulator::default(), Accumulator::merge);

    let analytic = config.game.payoff_surface(config.alpha, config.beta);
    let std_dev = (acc.count > 1).then(|| (acc.m2 / (acc.count - 1) as f64).sqrt());
    let std_error = std_dev.map(|s| s / (acc.count as f64).sqrt());
    let z_score = std_error.and_then(|se| (se > 0.0).then(|| (acc.mean - analytic) / se));
    SimulationSummary {
        rounds: acc.count,
        seed: config.seed,
        mean: acc.mean,
        std_dev,
        std_error,
        analytic,
        z_score,
        marginals: acc.marginals,
    }
}

/// Pearson statistic for `hits` successes in `n` trials of probability `p`.
pub fn chi_square_binary(hits: u64, n: u64, p: f64) -> f64 {
    let (n, hits) = (n as f64, hits as f64);
    let (e1, e2) = (n * p, n * (1.0 - p));
    (hits - e1).powi(2) / e1 + (n - hits - e2).powi(2) / e2
}

pub fn transcript(config: &SimulationConfig) -> Vec<RoundOutcome> {
    (0..config.rounds)
        .into_par_iter()
        .map(|i| sample_round(config, i))
        .collect()
}

/// Writes `round,pair,alice_outcome,bob_outcome,payoff`, two rows per round.
pub fn write_transcript_csv<W: Write>(out: &mut W, rounds: &[RoundOutcome]) -> std::io::Result<()> {
    writeln!(out, "round,pair,alice_outcome,bob_outcome,payoff")?;
    for r in rounds {
        for s in &r.sub_rounds {
            writeln!(
                out,
                "{},{},{},{},{}",
                r.index,
                s.pair.label(),
                s.alice_outcome,
                s.bob_outcome,
                s.payoff
            )?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AutomatonStep {
    pub question: Vertex,
    pub answer: Answer,
    pub payoff: f64,
    pub ball: Vertex,
}

/// Replays Alice's questions against the ball automaton. Every round
/// starts with the ball at `initial_ball`.
pub fn run_automaton(
    geometry: &SquareGeometry,
    payoffs: &PayoffMatrix,
    questions: &[Vertex],
    initial_ball: Vertex,
) -> Vec<AutomatonStep> {
    questions
        .iter()
        .map(|&question| {
            let mv = bob_outcome(geometry, question, initial_ball);
            let payoff = match mv.answer {
                Answer::No => payoffs.row_payoff(question),
                Answer::Yes => 0.0,
            };
            AutomatonStep {
                question,
                answer: mv.answer,
                payoff,
                ball: mv.ball,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strategy::Frames;

    fn game(h: [f64; 4], ta: f64, tb: f64) -> QuantumGame {
        QuantumGame::new(
            PayoffMatrix::new(h[0], h[1], h[2], h[3]).unwrap(),
            Frames::new(ta, tb).unwrap(),
        )
    }

    fn deg(x: f64) -> StrategyAngle {
        StrategyAngle::from_degrees(x)
    }

    fn v(n: i64) -> Vertex {
        Vertex::new(n).unwrap()
    }

    #[test]
    fn zero_rounds_rejected() {
        let g = game([1.0; 4], 45.0, 45.0);
        assert!(SimulationConfig::new(g, deg(0.0), deg(0.0), 0, 1).is_err());
    }

    #[test]
    fn pure_weights_hit_zero_cell() {
        // α = β = 0 puts both players on outcome 1 with certainty
        let g = game([3.0, 3.0, 5.0, 1.0], 45.0, 45.0);
        let cfg = SimulationConfig::new(g, deg(0.0), deg(0.0), 2000, 9).unwrap();
        assert_eq!((cfg.p.p1(), cfg.q.p1()), (1.0, 1.0));
        for i in 0..2000 {
            assert_eq!(sample_round(&cfg, i).sub_rounds[0].payoff, 0.0);
        }
    }

    #[test]
    fn rounds_are_reproducible() {
        let g = game([3.0, 3.0, 5.0, 1.0], 10.0, 70.0);
        let a = SimulationConfig::new(g, deg(145.5), deg(59.5), 50, 42).unwrap();
        let b = SimulationConfig::new(g, deg(145.5), deg(59.5), 50, 42).unwrap();
        assert_eq!(transcript(&a), transcript(&b));
        assert_eq!(sample_round(&a, 17), transcript(&b)[17]);
        let c = SimulationConfig::new(g, deg(145.5), deg(59.5), 50, 43).unwrap();
        assert_ne!(transcript(&a), transcript(&c));
    }

    #[test]
    fn parallel_matches_sequential() {
        let g = game([3.0, 3.0, 5.0, 1.0], 30.0, 20.0);
        let cfg = SimulationConfig::new(g, deg(12.0), deg(99.0), 100_000, 5).unwrap();
        let par = run(&cfg);
        let mut seq = Accumulator::default();
        let mut chunk = Accumulator::default();
        for i in 0..cfg.rounds() {
            chunk.push(&sample_round(&cfg, i));
            if (i + 1) % CHUNK == 0 {
                seq = seq.merge(chunk);
                chunk = Accumulator::default();
            }
        }
        seq = seq.merge(chunk);
        assert_eq!(par.mean, seq.mean);
        assert_eq!(par.marginals, seq.marginals);
        assert_eq!(run(&cfg), par);
    }

    #[test]
    fn single_round_has_no_standard_error() {
        let g = game([1.0; 4], 45.0, 45.0);
        let s = run(&SimulationConfig::new(g, deg(0.0), deg(0.0), 1, 3).unwrap());
        assert_eq!(s.std_error, None);
        assert_eq!(s.z_score, None);
        assert!(!s.within_standard_errors(3.0));
    }

    #[test]
    fn marginals_match_weights() {
        let g = game([3.0, 3.0, 5.0, 1.0], 15.0, 35.0);
        let cfg = SimulationConfig::new(g, deg(140.4), deg(55.8), 100_000, 11).unwrap();
        let s = run(&cfg);
        let n = cfg.rounds();
        // df = 1, 99.9% quantile
        let crit = 10.828;
        assert!(chi_square_binary(s.marginals.alice_1, n, cfg.p.p1()) < crit);
        assert!(chi_square_binary(s.marginals.bob_1, n, cfg.q.p1()) < crit);
        assert!(chi_square_binary(s.marginals.alice_2, n, cfg.p.p2()) < crit);
        assert!(chi_square_binary(s.marginals.bob_2, n, cfg.q.p2()) < crit);
    }

    #[test]
    fn estimator_tracks_surface() {
        let g = game([0.7, 2.5, 4.1, 1.3], 37.0, 62.0);
        let mut hits = 0;
        for seed in 0..10 {
            let cfg = SimulationConfig::new(g, deg(20.0 + 13.0 * seed as f64), deg(71.0), 200_000, seed).unwrap();
            hits += usize::from(run(&cfg).within_standard_errors(3.0));
        }
        assert!(hits >= 9, "{hits}/10 within 3 SE");
    }

    #[test]
    fn transcript_csv_layout() {
        let g = game([1.0; 4], 45.0, 45.0);
        let cfg = SimulationConfig::new(g, deg(0.0), deg(0.0), 3, 0).unwrap();
        let mut buf = Vec::new();
        write_transcript_csv(&mut buf, &transcript(&cfg)).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "round,pair,alice_outcome,bob_outcome,payoff");
        assert_eq!(lines.len(), 7);
        assert!(lines[1].starts_with("0,13,"));
        assert!(lines[2].starts_with("0,24,"));
        assert!(!text.contains('\r'));
    }

    #[test]
    fn automaton_examples() {
        let g = SquareGeometry::new();
        let h = PayoffMatrix::new(3.0, 3.0, 5.0, 1.0).unwrap();
        let t = run_automaton(&g, &h, &[v(1)], v(3));
        assert_eq!(t[0].answer, Answer::No);
        assert_eq!(t[0].payoff, 3.0);
        let t = run_automaton(&g, &h, &[v(1)], v(4));
        assert_eq!(t[0].answer, Answer::Yes);
        assert_eq!(t[0].payoff, 0.0);
        assert_eq!(t[0].ball, v(1));
    }

    #[test]
    fn automaton_reproduces_table() {
        let g = SquareGeometry::new();
        let h = PayoffMatrix::new(3.0, 3.0, 5.0, 1.0).unwrap();
        for ball in Vertex::ALL {
            let t = run_automaton(&g, &h, &Vertex::ALL, ball);
            for step in t {
                assert_eq!(step.payoff, h.entry(step.question, ball));
            }
        }
    }
}
