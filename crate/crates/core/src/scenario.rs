//! Flat `key = value` scenario files.
//!
//! ```text
//! # a, b, c, d and both frame angles are required
//! a = 3
//! b = 3
//! c = 5
//! d = 1
//! theta_a_deg = 10
//! theta_b_deg = 70
//! scan_resolution_deg = 0.05   # optional
//! ```

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::equilibrium::SolverSettings;
use crate::error::{Error, Result};
use crate::game::PayoffMatrix;
use crate::strategy::{Frames, QuantumGame};

pub const DEFAULT_SCAN_RESOLUTION_DEG: f64 = 0.05;
pub const DEFAULT_ROUNDS: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0;

const KEYS: [&str; 10] = [
    "a",
    "b",
    "c",
    "d",
    "theta_a_deg",
    "theta_b_deg",
    "scan_resolution_deg",
    "nash_tolerance",
    "rounds",
    "seed",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scenario {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub theta_a_deg: f64,
    pub theta_b_deg: f64,
    pub scan_resolution_deg: f64,
    pub nash_tolerance: f64,
    pub rounds: u64,
    pub seed: u64,
}

impl Scenario {
    /// A scenario with default solver and simulation settings.
    pub fn new(payoffs: [f64; 4], theta_a_deg: f64, theta_b_deg: f64) -> Result<Self> {
        let [a, b, c, d] = payoffs;
        let s = Self {
            a,
            b,
            c,
            d,
            theta_a_deg,
            theta_b_deg,
            scan_resolution_deg: DEFAULT_SCAN_RESOLUTION_DEG,
            nash_tolerance: default_tolerance(payoffs),
            rounds: DEFAULT_ROUNDS,
            seed: DEFAULT_SEED,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text, path)
    }

    /// Parses scenario text; `origin` is only used in diagnostics.
    pub fn parse(text: &str, origin: impl AsRef<Path>) -> Result<Self> {
        let origin = origin.as_ref();
        let syntax = |line: usize, message: String| Error::ScenarioSyntax {
            path: PathBuf::from(origin),
            line,
            message,
        };

        let mut values: [Option<(usize, &str)>; KEYS.len()] = [None; KEYS.len()];
        for (n, raw) in text.lines().enumerate() {
            let n = n + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(syntax(n, format!("expected `key = value`, got `{line}`")));
            };
            let (key, value) = (key.trim(), value.trim());
            let Some(slot) = KEYS.iter().position(|k| *k == key) else {
                return Err(syntax(n, format!("unknown key `{key}`")));
            };
            if let Some((first, _)) = values[slot] {
                return Err(syntax(n, format!("`{key}` already set on line {first}")));
            }
            if value.is_empty() {
                return Err(syntax(n, format!("`{key}` has no value")));
            }
            values[slot] = Some((n, value));
        }

        let real = |slot: usize| -> Result<Option<f64>> {
            match values[slot] {
                None => Ok(None),
                Some((n, v)) => v
                    .parse::<f64>()
                    .map(Some)
                    .map_err(|_| syntax(n, format!("`{}`: `{v}` is not a number", KEYS[slot]))),
            }
        };
        let count = |slot: usize| -> Result<Option<u64>> {
            match values[slot] {
                None => Ok(None),
                Some((n, v)) => parse_count(v)
                    .map(Some)
                    .ok_or_else(|| syntax(n, format!("`{}`: `{v}` is not a non-negative integer", KEYS[slot]))),
            }
        };
        let required = |slot: usize| -> Result<f64> {
            real(slot)?.ok_or_else(|| Error::ScenarioField {
                field: KEYS[slot],
                message: "missing".into(),
            })
        };

        let payoffs = [required(0)?, required(1)?, required(2)?, required(3)?];
        let [a, b, c, d] = payoffs;
        let s = Self {
            a,
            b,
            c,
            d,
            theta_a_deg: required(4)?,
            theta_b_deg: required(5)?,
            scan_resolution_deg: real(6)?.unwrap_or(DEFAULT_SCAN_RESOLUTION_DEG),
            nash_tolerance: real(7)?.unwrap_or_else(|| default_tolerance(payoffs)),
            rounds: count(8)?.unwrap_or(DEFAULT_ROUNDS),
            seed: count(9)?.unwrap_or(DEFAULT_SEED),
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        let field = |field: &'static str, message: String| Error::ScenarioField { field, message };
        for (name, v) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(field(name, format!("must be positive, got {v}")));
            }
        }
        for (name, v) in [("theta_a_deg", self.theta_a_deg), ("theta_b_deg", self.theta_b_deg)] {
            if !(v > 0.0 && v < 90.0) {
                return Err(field(name, format!("must lie strictly between 0 and 90, got {v}")));
            }
        }
        if !(self.scan_resolution_deg.is_finite() && self.scan_resolution_deg > 0.0 && self.scan_resolution_deg <= 90.0) {
            return Err(field(
                "scan_resolution_deg",
                format!("must lie in (0, 90], got {}", self.scan_resolution_deg),
            ));
        }
        if !(self.nash_tolerance.is_finite() && self.nash_tolerance > 0.0) {
            return Err(field("nash_tolerance", format!("must be positive, got {}", self.nash_tolerance)));
        }
        if self.rounds == 0 {
            return Err(field("rounds", "must be at least 1".into()));
        }
        Ok(())
    }

    pub fn payoffs(&self) -> Result<PayoffMatrix> {
        PayoffMatrix::new(self.a, self.b, self.c, self.d)
    }

    pub fn game(&self) -> Result<QuantumGame> {
        Ok(QuantumGame::new(
            self.payoffs()?,
            Frames::new(self.theta_a_deg, self.theta_b_deg)?,
        ))
    }

    pub fn solver_settings(&self) -> SolverSettings {
        SolverSettings {
            scan_resolution_deg: self.scan_resolution_deg,
            nash_tolerance: Some(self.nash_tolerance),
            ..SolverSettings::default()
        }
    }

    /// Same scenario with different frames; the tolerance is kept.
    pub fn with_frames(&self, theta_a_deg: f64, theta_b_deg: f64) -> Result<Self> {
        let s = Self {
            theta_a_deg,
            theta_b_deg,
            ..self.clone()
        };
        s.validate()?;
        Ok(s)
    }
}

fn default_tolerance(payoffs: [f64; 4]) -> f64 {
    1e-8 * payoffs.iter().sum::<f64>()
}

/// Accepts `1000000` as well as `1e6`.
fn parse_count(v: &str) -> Option<u64> {
    if let Ok(n) = v.parse::<u64>() {
        return Some(n);
    }
    let x = v.parse::<f64>().ok()?;
    (x >= 0.0 && x.fract() == 0.0 && x < u64::MAX as f64).then_some(x as u64)
}
