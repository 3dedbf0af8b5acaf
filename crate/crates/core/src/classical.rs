//! Classical mixed extension of the 4×4 zero-sum game.
//!
//! The solver enumerates every pair of equal-size supports, solves the
//! indifference equations on each square subgame and keeps the first
//! feasible profile. By the Shapley–Snow theorem some optimal pair lives
//! on a nonsingular square subgame, so the enumeration is exhaustive.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::game::PayoffMatrix;

const SIMPLEX_TOL: f64 = 1e-12;
const FEASIBILITY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixedProfile {
    pub x: [f64; 4],
    pub y: [f64; 4],
    pub value: f64,
    /// Rows (zero-based) carrying Alice's weight.
    pub support_x: Vec<usize>,
    /// Columns (zero-based) carrying Bob's weight.
    pub support_y: Vec<usize>,
}

fn check_simplex(name: &str, v: &[f64; 4]) -> Result<()> {
    if v.iter().any(|p| !p.is_finite() || *p < -SIMPLEX_TOL) {
        return Err(Error::NotDistribution(format!("{name} has a negative entry: {v:?}")));
    }
    let sum: f64 = v.iter().sum();
    if (sum - 1.0).abs() > SIMPLEX_TOL {
        return Err(Error::NotDistribution(format!("{name} sums to {sum}")));
    }
    Ok(())
}

fn bilinear(h: &[[f64; 4]; 4], x: &[f64; 4], y: &[f64; 4]) -> f64 {
    let mut total = 0.0;
    for j in 0..4 {
        for k in 0..4 {
            total += h[j][k] * x[j] * y[k];
        }
    }
    total
}

/// Alice's expected payoff `Σ h[j][k] x[j] y[k]`.
pub fn expected_payoff(h: &PayoffMatrix, x: &[f64; 4], y: &[f64; 4]) -> Result<f64> {
    check_simplex("x", x)?;
    check_simplex("y", y)?;
    Ok(bilinear(&h.full(), x, y))
}

fn unit(i: usize) -> [f64; 4] {
    let mut e = [0.0; 4];
    e[i] = 1.0;
    e
}

/// Payoff of each pure row against `y`.
fn row_values(h: &[[f64; 4]; 4], y: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|j| (0..4).map(|k| h[j][k] * y[k]).sum())
}

/// Payoff of `x` against each pure column.
fn column_values(h: &[[f64; 4]; 4], x: &[f64; 4]) -> [f64; 4] {
    std::array::from_fn(|k| (0..4).map(|j| h[j][k] * x[j]).sum())
}

/// Solves `a · sol = rhs` in place by Gaussian elimination with partial
/// pivoting. Returns `None` for a (numerically) singular system.
fn solve_linear(mut a: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = rhs.len();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1.0);
    for col in 0..n {
        let pivot = (col..n).max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))?;
        if a[pivot][col].abs() < 1e-12 * scale {
            return None;
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            if f != 0.0 {
                for c in col..n {
                    a[row][c] -= f * a[col][c];
                }
                rhs[row] -= f * rhs[col];
            }
        }
    }
    let mut sol = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|c| a[row][c] * sol[c]).sum();
        sol[row] = (rhs[row] - tail) / a[row][row];
    }
    Some(sol)
}

/// Mixes `support` so that every column in `against` yields the same value.
/// `m[i][t]` is the payoff of mixing index `i` against opponent index `t`.
fn indifferent_mix(
    m: impl Fn(usize, usize) -> f64,
    support: &[usize],
    against: &[usize],
) -> Option<([f64; 4], f64)> {
    let k = support.len();
    let mut a = vec![vec![0.0; k + 1]; k + 1];
    let mut rhs = vec![0.0; k + 1];
    for (r, &t) in against.iter().enumerate() {
        for (c, &i) in support.iter().enumerate() {
            a[r][c] = m(i, t);
        }
        a[r][k] = -1.0;
    }
    for c in 0..k {
        a[k][c] = 1.0;
    }
    rhs[k] = 1.0;
    let sol = solve_linear(a, rhs)?;
    let mut mix = [0.0; 4];
    for (c, &i) in support.iter().enumerate() {
        if sol[c] < -FEASIBILITY_TOL {
            return None;
        }
        mix[i] = sol[c].max(0.0);
    }
    let total: f64 = mix.iter().sum();
    for p in &mut mix {
        *p /= total;
    }
    Some((mix, sol[k]))
}

fn subsets() -> Vec<Vec<usize>> {
    (1u8..16)
        .map(|mask| (0..4).filter(|i| mask & (1 << i) != 0).collect())
        .collect()
}

/// Optimal mixed strategies and value of the classical game.
///
/// Among several optimal profiles the one with lexicographically smallest
/// `(support_x, support_y)` is returned.
pub fn solve_zero_sum(h: &PayoffMatrix) -> MixedProfile {
    let m = h.full();
    let subsets = subsets();
    let mut pairs: Vec<(&Vec<usize>, &Vec<usize>)> = subsets
        .iter()
        .flat_map(|s| subsets.iter().filter(|t| t.len() == s.len()).map(move |t| (s, t)))
        .collect();
    pairs.sort();

    let tol = FEASIBILITY_TOL * h.total();
    for (rows, cols) in pairs {
        let Some((x, v)) = indifferent_mix(|j, k| m[j][k], rows, cols) else {
            continue;
        };
        let Some((y, w)) = indifferent_mix(|k, j| m[j][k], cols, rows) else {
            continue;
        };
        if (v - w).abs() > tol {
            continue;
        }
        let guaranteed = column_values(&m, &x).into_iter().fold(f64::INFINITY, f64::min);
        let conceded = row_values(&m, &y).into_iter().fold(f64::NEG_INFINITY, f64::max);
        if guaranteed < v - tol || conceded > v + tol {
            continue;
        }
        return MixedProfile {
            value: bilinear(&m, &x, &y),
            x,
            y,
            support_x: rows.clone(),
            support_y: cols.clone(),
        };
    }
    unreachable!("every finite zero-sum game has an optimal profile on a square support")
}

/// Checks that no pure deviation gains more than `tol` for either player.
pub fn verify_nash_classical(h: &PayoffMatrix, profile: &MixedProfile, tol: f64) -> bool {
    if check_simplex("x", &profile.x).is_err() || check_simplex("y", &profile.y).is_err() {
        return false;
    }
    let m = h.full();
    let value = bilinear(&m, &profile.x, &profile.y);
    let alice_ok = (0..4).all(|j| value >= bilinear(&m, &unit(j), &profile.y) - tol);
    // Bob's payoff is -value
    let bob_ok = (0..4).all(|k| -value >= -bilinear(&m, &profile.x, &unit(k)) - tol);
    alice_ok && bob_ok
}

/// `min_k H(x, e_k)`: what `x` guarantees Alice.
pub fn guaranteed_value(h: &PayoffMatrix, x: &[f64; 4]) -> f64 {
    column_values(&h.full(), x).into_iter().fold(f64::INFINITY, f64::min)
}

/// `max_j H(e_j, y)`: the most Alice can extract from `y`.
pub fn conceded_value(h: &PayoffMatrix, y: &[f64; 4]) -> f64 {
    row_values(&h.full(), y).into_iter().fold(f64::NEG_INFINITY, f64::max)
}
