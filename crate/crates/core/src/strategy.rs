//! Wave-function strategies and the quantum payoff.
//!
//! A player's state is a unit vector in the plane, fully described (for
//! squared amplitudes) by its angle mod 180°. Each player measures along two
//! orthogonal frames rotated by `theta` from each other, producing outcome
//! weights `p1 + p3 = 1` and `p2 + p4 = 1`. Alice's expected win is
//!
//! ```text
//! F(α, β) = a·p1·q3 + c·p3·q1 + b·p2·q4 + d·p4·q2
//! ```
//!
//! with `p1 = cos²α`, `p2 = cos²(α − θ_A)` and similarly for Bob. For fixed
//! β, `F` is a pure second harmonic in α (and vice versa), which is what
//! makes best responses closed-form.
//!
//! Angles are degrees at the interface and radians inside.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::PayoffMatrix;

const NORMALIZATION_TOL: f64 = 1e-12;

/// The angle between a player's two measurement frames.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct MeasurementFrame {
    theta_deg: f64,
}

impl MeasurementFrame {
    pub fn new(theta_deg: f64) -> Result<Self> {
        if theta_deg > 0.0 && theta_deg < 90.0 {
            Ok(Self { theta_deg })
        } else {
            Err(Error::InvalidFrame(theta_deg))
        }
    }

    pub fn degrees(&self) -> f64 {
        self.theta_deg
    }

    pub fn radians(&self) -> f64 {
        self.theta_deg.to_radians()
    }
}

impl TryFrom<f64> for MeasurementFrame {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

impl From<MeasurementFrame> for f64 {
    fn from(f: MeasurementFrame) -> f64 {
        f.theta_deg
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Frames {
    pub alice: MeasurementFrame,
    pub bob: MeasurementFrame,
}

impl Frames {
    pub fn new(theta_a_deg: f64, theta_b_deg: f64) -> Result<Self> {
        Ok(Self {
            alice: MeasurementFrame::new(theta_a_deg)?,
            bob: MeasurementFrame::new(theta_b_deg)?,
        })
    }
}

/// A pure quantum strategy: the state vector's angle, reduced to [0°, 180°).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Default, Serialize, Deserialize)]
#[serde(into = "f64", from = "f64")]
pub struct StrategyAngle(f64);

impl From<f64> for StrategyAngle {
    fn from(deg: f64) -> Self {
        StrategyAngle::from_degrees(deg)
    }
}

impl From<StrategyAngle> for f64 {
    fn from(a: StrategyAngle) -> f64 {
        a.0
    }
}

fn reduce_deg(deg: f64) -> f64 {
    let r = deg.rem_euclid(180.0);
    // rem_euclid can round up to the modulus for tiny negative inputs
    if r >= 180.0 {
        0.0
    } else {
        r
    }
}

impl StrategyAngle {
    pub const ZERO: StrategyAngle = StrategyAngle(0.0);

    pub fn new(deg: f64) -> Result<Self> {
        if deg.is_finite() {
            Ok(Self(reduce_deg(deg)))
        } else {
            Err(Error::InvalidAngle(deg))
        }
    }

    /// Panics on non-finite input; for angles produced by internal math.
    pub fn from_degrees(deg: f64) -> Self {
        Self::new(deg).expect("finite angle")
    }

    pub fn from_radians(rad: f64) -> Self {
        Self::from_degrees(rad.to_degrees())
    }

    pub fn degrees(self) -> f64 {
        self.0
    }

    pub fn radians(self) -> f64 {
        self.0.to_radians()
    }

    /// Signed difference `self − other` wrapped into (−90°, 90°].
    pub fn wrapped_diff(self, other: StrategyAngle) -> f64 {
        wrap_half_turn(self.0 - other.0)
    }

    /// Distance on the half-turn circle, in [0°, 90°].
    pub fn distance(self, other: StrategyAngle) -> f64 {
        self.wrapped_diff(other).abs()
    }
}

impl fmt::Display for StrategyAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.6}°", self.0)
    }
}

/// Wraps a degree difference into (−90°, 90°].
pub fn wrap_half_turn(deg: f64) -> f64 {
    let r = (deg + 90.0).rem_euclid(180.0) - 90.0;
    if r <= -90.0 {
        r + 180.0
    } else {
        r
    }
}

/// Squared amplitudes of the two binary measurements.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OutcomeWeights {
    p1: f64,
    p2: f64,
    p3: f64,
    p4: f64,
}

impl OutcomeWeights {
    pub fn new(p1: f64, p2: f64, p3: f64, p4: f64) -> Result<Self> {
        for (i, p) in [p1, p2, p3, p4].into_iter().enumerate() {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::NotNormalized(format!("p{} = {p} outside [0, 1]", i + 1)));
            }
        }
        if (p1 + p3 - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized(format!("p1 + p3 = {}", p1 + p3)));
        }
        if (p2 + p4 - 1.0).abs() > NORMALIZATION_TOL {
            return Err(Error::NotNormalized(format!("p2 + p4 = {}", p2 + p4)));
        }
        Ok(Self { p1, p2, p3, p4 })
    }

    pub fn p1(&self) -> f64 {
        self.p1
    }
    pub fn p2(&self) -> f64 {
        self.p2
    }
    pub fn p3(&self) -> f64 {
        self.p3
    }
    pub fn p4(&self) -> f64 {
        self.p4
    }

    pub fn to_array(&self) -> [f64; 4] {
        [self.p1, self.p2, self.p3, self.p4]
    }
}

pub fn outcome_weights(strategy: StrategyAngle, frame: MeasurementFrame) -> OutcomeWeights {
    let a = strategy.radians();
    let b = a - frame.radians();
    OutcomeWeights {
        p1: a.cos().powi(2),
        p2: b.cos().powi(2),
        p3: a.sin().powi(2),
        p4: b.sin().powi(2),
    }
}

/// Alice's expectation for the product state. Bob receives the negation.
pub fn quantum_payoff(h: &PayoffMatrix, p: &OutcomeWeights, q: &OutcomeWeights) -> f64 {
    h.a() * p.p1 * q.p3 + h.c() * p.p3 * q.p1 + h.b() * p.p2 * q.p4 + h.d() * p.p4 * q.p2
}

/// `F` restricted to one player's angle: `constant + cos2·cos 2x + sin2·sin 2x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Harmonic {
    pub constant: f64,
    pub cos2: f64,
    pub sin2: f64,
}

/// Location of an extremum of a [`Harmonic`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Extremum {
    At(StrategyAngle),
    /// Amplitude below threshold: every angle is optimal.
    Indifferent,
}

impl Harmonic {
    pub fn eval(&self, angle: StrategyAngle) -> f64 {
        let t = 2.0 * angle.radians();
        self.constant + self.cos2 * t.cos() + self.sin2 * t.sin()
    }

    pub fn amplitude(&self) -> f64 {
        self.cos2.hypot(self.sin2)
    }

    pub fn max_value(&self) -> f64 {
        self.constant + self.amplitude()
    }

    pub fn min_value(&self) -> f64 {
        self.constant - self.amplitude()
    }

    pub fn maximizer(&self, threshold: f64) -> Extremum {
        if self.amplitude() < threshold {
            Extremum::Indifferent
        } else {
            Extremum::At(StrategyAngle::from_radians(self.sin2.atan2(self.cos2) / 2.0))
        }
    }

    pub fn minimizer(&self, threshold: f64) -> Extremum {
        if self.amplitude() < threshold {
            Extremum::Indifferent
        } else {
            let phase = self.sin2.atan2(self.cos2) + std::f64::consts::PI;
            Extremum::At(StrategyAngle::from_radians(phase / 2.0))
        }
    }
}

/// A payoff matrix together with both players' frames.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct QuantumGame {
    pub payoffs: PayoffMatrix,
    pub frames: Frames,
}

impl QuantumGame {
    pub fn new(payoffs: PayoffMatrix, frames: Frames) -> Self {
        Self { payoffs, frames }
    }

    pub fn alice_weights(&self, alpha: StrategyAngle) -> OutcomeWeights {
        outcome_weights(alpha, self.frames.alice)
    }

    pub fn bob_weights(&self, beta: StrategyAngle) -> OutcomeWeights {
        outcome_weights(beta, self.frames.bob)
    }

    /// `F(α, β)`.
    pub fn payoff_surface(&self, alpha: StrategyAngle, beta: StrategyAngle) -> f64 {
        quantum_payoff(&self.payoffs, &self.alice_weights(alpha), &self.bob_weights(beta))
    }

    /// `F(·, β)` as a harmonic in Alice's angle.
    pub fn alice_harmonic(&self, beta: StrategyAngle) -> Harmonic {
        let h = &self.payoffs;
        let q = self.bob_weights(beta);
        let two_theta = 2.0 * self.frames.alice.radians();
        let first = 0.5 * (h.a() * q.p3 - h.c() * q.p1);
        let second = 0.5 * (h.b() * q.p4 - h.d() * q.p2);
        Harmonic {
            constant: 0.5 * (h.a() * q.p3 + h.c() * q.p1 + h.b() * q.p4 + h.d() * q.p2),
            cos2: first + second * two_theta.cos(),
            sin2: second * two_theta.sin(),
        }
    }

    /// `F(α, ·)` as a harmonic in Bob's angle.
    pub fn bob_harmonic(&self, alpha: StrategyAngle) -> Harmonic {
        let h = &self.payoffs;
        let p = self.alice_weights(alpha);
        let two_theta = 2.0 * self.frames.bob.radians();
        let first = 0.5 * (h.c() * p.p3 - h.a() * p.p1);
        let second = 0.5 * (h.d() * p.p4 - h.b() * p.p2);
        Harmonic {
            constant: 0.5 * (h.a() * p.p1 + h.c() * p.p3 + h.b() * p.p2 + h.d() * p.p4),
            cos2: first + second * two_theta.cos(),
            sin2: second * two_theta.sin(),
        }
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Ok(Self {
            payoffs: self.payoffs.scaled(factor)?,
            frames: self.frames,
        })
    }
}
