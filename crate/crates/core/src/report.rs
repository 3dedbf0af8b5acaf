//! The analysis commands and their text, JSON and CSV renderings.
//!
//! Angles are reported in degrees rounded to 6 decimal places, values and
//! probabilities to 6 significant digits.

use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classical::solve_zero_sum;
use crate::equilibrium::{find_equilibria, reaction_curve, verify_nash_quantum, Equilibrium, NashCheck, Player, ReactionCurve};
use crate::error::{Error, Result};
use crate::game::pure_saddle_analysis;
use crate::lattice::{check_representation, DisjunctionReport, FiniteOrtholattice, PlaneSubspaceRep};
use crate::scenario::Scenario;
use crate::simulation::{self, SimulationConfig, SimulationSummary};
use crate::strategy::StrategyAngle;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::InvalidSetting {
                name: "format",
                message: format!("`{s}` is not one of text, json, csv"),
            }),
        }
    }
}

fn unsupported(command: &str, format: Format) -> Error {
    Error::InvalidSetting {
        name: "format",
        message: format!("{format:?} output is not available for {command}").to_lowercase(),
    }
}

pub fn round_deg(x: f64) -> f64 {
    let r = (x * 1e6).round() / 1e6;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.5e}").parse().unwrap_or(x)
}

/// `x` with 6 significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    if (-4..6).contains(&mag) {
        format!("{:.*}", (5 - mag) as usize, x)
    } else {
        format!("{x:.5e}")
    }
}

fn deg6(x: f64) -> String {
    format!("{:.6}", round_deg(x))
}

fn vec4(v: &[f64; 4]) -> String {
    let parts: Vec<String> = v.iter().map(|&x| sig6(x)).collect();
    format!("({})", parts.join(", "))
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassicalSummary {
    pub maxmin: f64,
    pub minmax: f64,
    pub saddle_exists: bool,
    pub mixed_value: f64,
    pub x: [f64; 4],
    pub y: [f64; 4],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EquilibriumRecord {
    pub alpha_deg: f64,
    pub beta_deg: f64,
    pub value: f64,
    pub p: [f64; 4],
    pub q: [f64; 4],
    pub residual: f64,
}

impl From<&Equilibrium> for EquilibriumRecord {
    fn from(e: &Equilibrium) -> Self {
        Self {
            alpha_deg: round_deg(e.alpha.degrees()),
            beta_deg: round_deg(e.beta.degrees()),
            value: round_sig(e.value),
            p: e.weights_a.to_array().map(round_sig),
            q: e.weights_b.to_array().map(round_sig),
            residual: round_sig(e.residual),
        }
    }
}

pub const STATUS_FOUND: &str = "equilibria found";
pub const STATUS_NONE: &str = "no equilibrium";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub scenario: Scenario,
    pub classical: ClassicalSummary,
    pub quantum: Vec<EquilibriumRecord>,
    pub equilibrium_count: usize,
    pub status: String,
}

pub fn equilibria(scenario: &Scenario) -> Result<Vec<Equilibrium>> {
    find_equilibria(&scenario.game()?, &scenario.solver_settings())
}

pub fn analyze(scenario: &Scenario) -> Result<AnalysisReport> {
    let h = scenario.payoffs()?;
    let pure = pure_saddle_analysis(&h);
    let mixed = solve_zero_sum(&h);
    let quantum: Vec<EquilibriumRecord> = equilibria(scenario)?.iter().map(Into::into).collect();
    Ok(AnalysisReport {
        scenario: scenario.clone(),
        classical: ClassicalSummary {
            maxmin: pure.maxmin,
            minmax: pure.minmax,
            saddle_exists: pure.saddle_exists,
            mixed_value: round_sig(mixed.value),
            x: mixed.x.map(round_sig),
            y: mixed.y.map(round_sig),
        },
        equilibrium_count: quantum.len(),
        status: if quantum.is_empty() { STATUS_NONE } else { STATUS_FOUND }.into(),
        quantum,
    })
}

impl AnalysisReport {
    pub fn from_json(text: &str) -> Result<Self> {
        let report: Self = serde_json::from_str(text).map_err(|e| Error::InvalidSetting {
            name: "report",
            message: e.to_string(),
        })?;
        report.scenario.validate()?;
        Ok(report)
    }

    /// Re-checks every listed equilibrium against the scenario it came from.
    pub fn reverify(&self) -> Result<Vec<NashCheck>> {
        let game = self.scenario.game()?;
        Ok(self
            .quantum
            .iter()
            .map(|e| {
                verify_nash_quantum(
                    &game,
                    StrategyAngle::from_degrees(e.alpha_deg),
                    StrategyAngle::from_degrees(e.beta_deg),
                    self.scenario.nash_tolerance,
                )
            })
            .collect())
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Csv => equilibria_csv(&self.quantum),
            Format::Text => {
                let s = &self.scenario;
                let c = &self.classical;
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "payoffs: a={} b={} c={} d={}  frames: theta_A={}° theta_B={}°",
                    sig6(s.a),
                    sig6(s.b),
                    sig6(s.c),
                    sig6(s.d),
                    deg6(s.theta_a_deg),
                    deg6(s.theta_b_deg)
                );
                let _ = writeln!(
                    out,
                    "pure strategies: maxmin {}  minmax {}  saddle point: {}",
                    sig6(c.maxmin),
                    sig6(c.minmax),
                    if c.saddle_exists { "yes" } else { "no" }
                );
                let _ = writeln!(out, "classical mixed value: {}", sig6(c.mixed_value));
                let _ = writeln!(out, "  Alice x = {}", vec4(&c.x));
                let _ = writeln!(out, "  Bob   y = {}", vec4(&c.y));
                out.push_str(&equilibria_text(&self.quantum));
                out
            }
        }
    }
}

pub fn equilibria_text(records: &[EquilibriumRecord]) -> String {
    let mut out = String::new();
    if records.is_empty() {
        let _ = writeln!(out, "quantum equilibria: 0 ({STATUS_NONE})");
        return out;
    }
    let _ = writeln!(out, "quantum equilibria: {}", records.len());
    for (k, e) in records.iter().enumerate() {
        let _ = writeln!(
            out,
            "  #{} alpha={}° beta={}° value={} residual={}",
            k + 1,
            deg6(e.alpha_deg),
            deg6(e.beta_deg),
            sig6(e.value),
            sig6(e.residual)
        );
        let _ = writeln!(out, "     p = {}", vec4(&e.p));
        let _ = writeln!(out, "     q = {}", vec4(&e.q));
    }
    out
}

pub fn equilibria_csv(records: &[EquilibriumRecord]) -> String {
    let mut out = String::from("alpha_deg,beta_deg,value,p1,p2,p3,p4,q1,q2,q3,q4,residual\n");
    for e in records {
        let mut row = vec![deg6(e.alpha_deg), deg6(e.beta_deg), sig6(e.value)];
        row.extend(e.p.iter().chain(&e.q).map(|&x| sig6(x)));
        row.push(sig6(e.residual));
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

pub fn render_equilibria(records: &[EquilibriumRecord], format: Format) -> String {
    match format {
        Format::Text => equilibria_text(records),
        Format::Json => json(&records),
        Format::Csv => equilibria_csv(records),
    }
}

/// `input_deg,response_deg,amplitude,degenerate,discontinuity_flag`, one
/// row per sample.
pub fn curve_csv(curve: &ReactionCurve) -> String {
    let mut out = String::from("input_deg,response_deg,amplitude,degenerate,discontinuity_flag\n");
    for (s, jump) in curve.samples.iter().zip(curve.jump_flags()) {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            deg6(s.input.degrees()),
            deg6(s.response.degrees()),
            sig6(s.amplitude),
            u8::from(s.degenerate),
            u8::from(jump)
        );
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CurveFiles {
    pub alice_csv: PathBuf,
    pub bob_csv: PathBuf,
    pub svg: PathBuf,
}

fn with_suffix(prefix: &Path, suffix: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Writes `<prefix>.alice.csv`, `<prefix>.bob.csv` and `<prefix>.svg`.
pub fn write_curves(scenario: &Scenario, prefix: &Path) -> Result<CurveFiles> {
    let game = scenario.game()?;
    let res = scenario.scan_resolution_deg;
    let alice = reaction_curve(Player::Alice, &game, res)?;
    let bob = reaction_curve(Player::Bob, &game, res)?;
    let eq = find_equilibria(&game, &scenario.solver_settings())?;
    let title = format!(
        "Reaction curves, θA = {}°, θB = {}°",
        round_deg(scenario.theta_a_deg),
        round_deg(scenario.theta_b_deg)
    );
    let files = CurveFiles {
        alice_csv: with_suffix(prefix, ".alice.csv"),
        bob_csv: with_suffix(prefix, ".bob.csv"),
        svg: with_suffix(prefix, ".svg"),
    };
    write_file(&files.alice_csv, &curve_csv(&alice))?;
    write_file(&files.bob_csv, &curve_csv(&bob))?;
    write_file(&files.svg, &crate::svg::render(&alice, &bob, &eq, &title))?;
    Ok(files)
}

/// Inclusive range of frame angles.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaRange {
    pub start: f64,
    pub stop: f64,
}

impl FromStr for ThetaRange {
    type Err = Error;

    /// `START:STOP` in degrees, or a single angle.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidSetting {
            name: "theta range",
            message: format!("`{s}` is not START:STOP"),
        };
        let (a, b) = s.split_once(':').unwrap_or((s, s));
        let start = a.trim().parse().map_err(|_| bad())?;
        let stop = b.trim().parse().map_err(|_| bad())?;
        Ok(Self { start, stop })
    }
}

impl ThetaRange {
    fn points(&self, step: f64, name: &str) -> Result<Vec<f64>> {
        if !(self.start > 0.0 && self.stop < 90.0) {
            return Err(Error::InvalidSetting {
                name: "theta range",
                message: format!("{name} range {}..{} leaves (0, 90)", self.start, self.stop),
            });
        }
        if self.start > self.stop {
            return Err(Error::EmptyRange(format!("{name} from {} to {}", self.start, self.stop)));
        }
        let n = ((self.stop - self.start) / step + 1e-9).floor() as usize + 1;
        Ok((0..n).map(|k| self.start + k as f64 * step).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub theta_a_deg: f64,
    pub theta_b_deg: f64,
    pub equilibrium_count: usize,
    pub best_value_for_alice: Option<f64>,
}

/// Equilibrium counts over the grid, θ_A-major.
pub fn sweep(scenario: &Scenario, theta_a: ThetaRange, theta_b: ThetaRange, step: f64) -> Result<Vec<SweepRow>> {
    if !(step.is_finite() && step > 0.0) {
        return Err(Error::InvalidSetting {
            name: "step",
            message: format!("{step} is not positive"),
        });
    }
    let ta = theta_a.points(step, "theta_A")?;
    let tb = theta_b.points(step, "theta_B")?;
    let cells: Vec<(f64, f64)> = ta.iter().flat_map(|&a| tb.iter().map(move |&b| (a, b))).collect();
    cells
        .par_iter()
        .map(|&(a, b)| {
            let eq = equilibria(&scenario.with_frames(a, b)?)?;
            Ok(SweepRow {
                theta_a_deg: round_deg(a),
                theta_b_deg: round_deg(b),
                equilibrium_count: eq.len(),
                best_value_for_alice: eq.iter().map(|e| round_sig(e.value)).reduce(f64::max),
            })
        })
        .collect()
}

pub fn render_sweep(rows: &[SweepRow], format: Format) -> String {
    match format {
        Format::Json => json(&rows),
        Format::Csv | Format::Text => {
            let mut out = String::from("theta_A,theta_B,equilibrium_count,best_value_for_Alice\n");
            for r in rows {
                let _ = writeln!(
                    out,
                    "{},{},{},{}",
                    deg6(r.theta_a_deg),
                    deg6(r.theta_b_deg),
                    r.equilibrium_count,
                    r.best_value_for_alice.map(sig6).unwrap_or_default()
                );
            }
            out
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub scenario: Scenario,
    pub alpha_deg: f64,
    pub beta_deg: f64,
    #[serde(flatten)]
    pub summary: SimulationSummary,
}

pub fn simulate(scenario: &Scenario, alpha_deg: f64, beta_deg: f64) -> Result<(SimulationReport, SimulationConfig)> {
    let alpha = StrategyAngle::new(alpha_deg)?;
    let beta = StrategyAngle::new(beta_deg)?;
    let config = SimulationConfig::new(scenario.game()?, alpha, beta, scenario.rounds, scenario.seed)?;
    let summary = simulation::run(&config);
    Ok((
        SimulationReport {
            scenario: scenario.clone(),
            alpha_deg: round_deg(alpha.degrees()),
            beta_deg: round_deg(beta.degrees()),
            summary,
        },
        config,
    ))
}

impl SimulationReport {
    pub fn render(&self, format: Format) -> String {
        let s = &self.summary;
        let opt = |x: Option<f64>| x.map(sig6).unwrap_or_else(|| "undefined".into());
        match format {
            Format::Json => json(self),
            Format::Csv => format!(
                "alpha_deg,beta_deg,rounds,seed,mean,std_error,analytic,z_score\n{},{},{},{},{},{},{},{}\n",
                deg6(self.alpha_deg),
                deg6(self.beta_deg),
                s.rounds,
                s.seed,
                sig6(s.mean),
                s.std_error.map(sig6).unwrap_or_default(),
                sig6(s.analytic),
                s.z_score.map(sig6).unwrap_or_default()
            ),
            Format::Text => {
                let mut out = String::new();
                let _ = writeln!(
                    out,
                    "alpha={}° beta={}°  rounds={} seed={}",
                    deg6(self.alpha_deg),
                    deg6(self.beta_deg),
                    s.rounds,
                    s.seed
                );
                let _ = writeln!(out, "empirical mean: {}", sig6(s.mean));
                let se = match s.std_error {
                    Some(se) => sig6(se),
                    None => "undefined (fewer than 2 rounds)".into(),
                };
                let _ = writeln!(out, "standard error: {se}");
                let _ = writeln!(out, "analytic F:     {}", sig6(s.analytic));
                let _ = writeln!(out, "z-score:        {}", opt(s.z_score));
                out
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LatticeCheckReport {
    pub theta_deg: f64,
    pub laws: Vec<(String, bool)>,
    pub distributivity_witness: Option<[String; 3]>,
    pub disjunction: DisjunctionReport,
    pub representation_holds: bool,
}

pub fn lattice_check(theta_deg: f64) -> Result<LatticeCheckReport> {
    let rep = PlaneSubspaceRep::new(theta_deg)?;
    let lattice = FiniteOrtholattice::wise_alice();
    let witness = lattice
        .find_distributivity_violation()
        .map(|(x, y, z)| [x, y, z].map(|e| lattice.label(e).to_string()));
    let uniform = vec![0.25; lattice.atoms().len()];
    Ok(LatticeCheckReport {
        theta_deg,
        laws: lattice.laws().entries().iter().map(|&(n, ok)| (n.to_string(), ok)).collect(),
        distributivity_witness: witness,
        disjunction: lattice.disjunction_paradox(&uniform)?,
        representation_holds: check_representation(&lattice, &rep),
    })
}

impl LatticeCheckReport {
    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => Ok(json(self)),
            Format::Csv => Err(unsupported("lattice-check", format)),
            Format::Text => {
                let mut out = String::from("ortholattice laws:\n");
                for (name, ok) in &self.laws {
                    let _ = writeln!(out, "  {:<28} {}", name, if *ok { "pass" } else { "FAIL" });
                }
                match &self.distributivity_witness {
                    Some([x, y, z]) => {
                        let _ = writeln!(
                            out,
                            "distributivity fails at x={x} y={y} z={z}: x ∧ (y ∨ z) ≠ (x ∧ y) ∨ (x ∧ z)"
                        );
                    }
                    None => out.push_str("distributivity holds everywhere\n"),
                }
                out.push_str("disjunction table (uniform atom weights):\n");
                for p in &self.disjunction.pairs {
                    let _ = writeln!(out, "  {} ∨ {} = {}  sum of weights {}", p.x, p.y, p.join, sig6(p.sum_of_pair));
                }
                let _ = writeln!(
                    out,
                    "additive: {}",
                    if self.disjunction.additive { "yes" } else { "no" }
                );
                let _ = writeln!(
                    out,
                    "plane representation at theta={}°: {}",
                    deg6(self.theta_deg),
                    if self.representation_holds { "isomorphic" } else { "NOT isomorphic" }
                );
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(sig6(2.4515210215), "2.45152");
        assert_eq!(sig6(0.5), "0.500000");
        assert_eq!(sig6(123.456789), "123.457");
        assert_eq!(sig6(-0.00012345678), "-0.000123457");
        assert_eq!(sig6(8.881784197001252e-16), "8.88178e-16");
        assert_eq!(sig6(0.0), "0");
        assert_eq!(round_sig(2.4515210215), 2.45152);
        assert_eq!(round_deg(145.44223050959), 145.442231);
        assert_eq!(round_deg(-1e-9), 0.0);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("json".parse::<Format>().unwrap(), Format::Json);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn theta_ranges() {
        let r: ThetaRange = "10:30".parse().unwrap();
        assert_eq!(r.points(10.0, "t").unwrap(), vec![10.0, 20.0, 30.0]);
        let r: ThetaRange = "45".parse().unwrap();
        assert_eq!(r.points(5.0, "t").unwrap(), vec![45.0]);
        let r: ThetaRange = "30:10".parse().unwrap();
        assert!(matches!(r.points(5.0, "t"), Err(Error::EmptyRange(_))));
        let r: ThetaRange = "0:10".parse().unwrap();
        assert!(r.points(5.0, "t").is_err());
        assert!("a:b".parse::<ThetaRange>().is_err());
    }

    #[test]
    fn lattice_report() {
        let r = lattice_check(45.0).unwrap();
        assert!(r.laws.iter().all(|(_, ok)| *ok));
        assert_eq!(
            r.distributivity_witness,
            Some(["2".to_string(), "1".to_string(), "3".to_string()])
        );
        assert_eq!(r.disjunction.pairs.len(), 6);
        assert!(r.representation_holds);
        let text = r.render(Format::Text).unwrap();
        assert!(text.contains("x=2 y=1 z=3"));
        assert!(lattice_check(95.0).is_err());
        assert!(r.render(Format::Csv).is_err());
    }
}
