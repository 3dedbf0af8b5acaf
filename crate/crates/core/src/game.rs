//! The ball game on the square: vertex geometry, Bob's move rule, and
//! Alice's payoff matrix.
//!
//! Bob hides a ball at a vertex; Alice names a vertex. Bob may slide the
//! ball along one edge before answering, so he can always say "yes" unless
//! the ball sits on the vertex opposite the question. Only those four
//! situations pay Alice, giving the anti-diagonal matrix
//!
//! ```text
//!        1  2  3  4
//!    1 [ 0  0  a  0 ]
//!    2 [ 0  0  0  b ]
//!    3 [ c  0  0  0 ]
//!    4 [ 0  d  0  0 ]
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A corner of the square, labelled 1..=4 in cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub struct Vertex(u8);

impl Vertex {
    pub const ALL: [Vertex; 4] = [Vertex(1), Vertex(2), Vertex(3), Vertex(4)];

    pub fn new(label: i64) -> Result<Self> {
        match label {
            1..=4 => Ok(Vertex(label as u8)),
            _ => Err(Error::InvalidVertex(label)),
        }
    }

    pub fn label(self) -> u8 {
        self.0
    }

    /// Zero-based index, for array access.
    pub fn index(self) -> usize {
        usize::from(self.0 - 1)
    }

    fn from_index(index: usize) -> Self {
        Vertex((index % 4) as u8 + 1)
    }
}

impl TryFrom<u8> for Vertex {
    type Error = Error;

    fn try_from(label: u8) -> Result<Self> {
        Vertex::new(i64::from(label))
    }
}

impl From<Vertex> for u8 {
    fn from(v: Vertex) -> u8 {
        v.0
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Adjacency and opposition on the four corners of the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareGeometry {
    neighbors: [[Vertex; 2]; 4],
    opposite: [Vertex; 4],
}

impl Default for SquareGeometry {
    fn default() -> Self {
        Self::new()
    }
}

impl SquareGeometry {
    /// Square with vertices 1, 2, 3, 4 in cyclic order.
    pub fn new() -> Self {
        let mut neighbors = [[Vertex(1); 2]; 4];
        let mut opposite = [Vertex(1); 4];
        for i in 0..4 {
            neighbors[i] = [Vertex::from_index(i + 3), Vertex::from_index(i + 1)];
            opposite[i] = Vertex::from_index(i + 2);
        }
        Self {
            neighbors,
            opposite,
        }
    }

    pub fn neighbors(&self, v: Vertex) -> [Vertex; 2] {
        self.neighbors[v.index()]
    }

    pub fn opposite(&self, v: Vertex) -> Vertex {
        self.opposite[v.index()]
    }

    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).contains(&v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Answer {
    Yes,
    No,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "yes",
            Answer::No => "no",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BobMove {
    pub answer: Answer,
    pub ball: Vertex,
}

/// Bob's reply to "is the ball at `question`?".
///
/// Bob is honest but moves first: if the ball is on the asked vertex or one
/// step away he slides it there and says yes. From the opposite vertex no
/// single move helps, so he says no and the ball stays where it was.
pub fn bob_outcome(geometry: &SquareGeometry, question: Vertex, ball: Vertex) -> BobMove {
    if ball == question || geometry.adjacent(question, ball) {
        BobMove {
            answer: Answer::Yes,
            ball: question,
        }
    } else {
        BobMove {
            answer: Answer::No,
            ball,
        }
    }
}

/// Alice's payoff matrix. Bob's matrix is the negation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PayoffMatrix {
    a: f64,
    b: f64,
    c: f64,
    d: f64,
}

impl PayoffMatrix {
    /// `a`, `b`, `c`, `d` are the amounts Bob pays when questions 1, 2, 3, 4
    /// respectively find the ball on the opposite corner.
    pub fn new(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        for (field, value) in [("a", a), ("b", b), ("c", c), ("d", d)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidPayoff { field, value });
            }
        }
        Ok(Self { a, b, c, d })
    }

    /// Recovers `a..d` from a full 4×4 matrix, rejecting anything outside the
    /// anti-diagonal pattern.
    pub fn from_full(h: &[[f64; 4]; 4]) -> Result<Self> {
        let geometry = SquareGeometry::new();
        for j in Vertex::ALL {
            for k in Vertex::ALL {
                let entry = h[j.index()][k.index()];
                if geometry.opposite(j) != k && entry != 0.0 {
                    return Err(Error::MalformedMatrix(format!(
                        "entry ({j},{k}) is {entry}, expected 0"
                    )));
                }
            }
        }
        Self::new(h[0][2], h[1][3], h[2][0], h[3][1])
    }

    pub fn a(&self) -> f64 {
        self.a
    }
    pub fn b(&self) -> f64 {
        self.b
    }
    pub fn c(&self) -> f64 {
        self.c
    }
    pub fn d(&self) -> f64 {
        self.d
    }

    /// Payoff to Alice when her question is `row`, paid only on a "no".
    pub fn row_payoff(&self, row: Vertex) -> f64 {
        [self.a, self.b, self.c, self.d][row.index()]
    }

    pub fn total(&self) -> f64 {
        self.a + self.b + self.c + self.d
    }

    pub fn min_payoff(&self) -> f64 {
        self.a.min(self.b).min(self.c).min(self.d)
    }

    pub fn entry(&self, question: Vertex, ball: Vertex) -> f64 {
        self.full()[question.index()][ball.index()]
    }

    pub fn full(&self) -> [[f64; 4]; 4] {
        let mut h = [[0.0; 4]; 4];
        h[0][2] = self.a;
        h[1][3] = self.b;
        h[2][0] = self.c;
        h[3][1] = self.d;
        h
    }

    pub fn bob_full(&self) -> [[f64; 4]; 4] {
        self.full().map(|row| row.map(|v| -v))
    }

    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(
            self.a * factor,
            self.b * factor,
            self.c * factor,
            self.d * factor,
        )
    }
}

/// Builds the matrix by playing every (question, ball) situation through
/// [`bob_outcome`] and charging Bob the row's payoff on each "no".
pub fn payoff_matrix_from_rules(geometry: &SquareGeometry, payoffs: [f64; 4]) -> Result<PayoffMatrix> {
    for (value, field) in payoffs.iter().zip(["a", "b", "c", "d"]) {
        if !(value.is_finite() && *value > 0.0) {
            return Err(Error::InvalidPayoff {
                field,
                value: *value,
            });
        }
    }
    let mut h = [[0.0; 4]; 4];
    for question in Vertex::ALL {
        for ball in Vertex::ALL {
            if bob_outcome(geometry, question, ball).answer == Answer::No {
                h[question.index()][ball.index()] = payoffs[question.index()];
            }
        }
    }
    PayoffMatrix::from_full(&h)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SaddleAnalysis {
    pub maxmin: f64,
    pub minmax: f64,
    pub saddle_exists: bool,
}

/// Pure-strategy lower and upper values of the matrix game.
pub fn pure_saddle_analysis(h: &PayoffMatrix) -> SaddleAnalysis {
    let m = h.full();
    let maxmin = m
        .iter()
        .map(|row| row.iter().copied().fold(f64::INFINITY, f64::min))
        .fold(f64::NEG_INFINITY, f64::max);
    let minmax = (0..4)
        .map(|k| m.iter().map(|row| row[k]).fold(f64::NEG_INFINITY, f64::max))
        .fold(f64::INFINITY, f64::min);
    SaddleAnalysis {
        maxmin,
        minmax,
        saddle_exists: maxmin == minmax,
    }
}
