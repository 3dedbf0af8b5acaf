//! Self-contained SVG plot of both reaction curves on the [0°, 180°]²
//! square: α on the horizontal axis, β on the vertical one.

use std::fmt::Write;

use crate::equilibrium::{Equilibrium, JumpKind, Player, ReactionCurve, JUMP_THRESHOLD_DEG};

const SIZE: f64 = 560.0;
const MARGIN: f64 = 60.0;
const PLOT: f64 = SIZE - 2.0 * MARGIN;

const ALICE_COLOR: &str = "#1f5fbf";
const BOB_COLOR: &str = "#c2401c";

fn x_px(alpha_deg: f64) -> f64 {
    MARGIN + alpha_deg / 180.0 * PLOT
}

fn y_px(beta_deg: f64) -> f64 {
    MARGIN + (180.0 - beta_deg) / 180.0 * PLOT
}

/// (α, β) of a curve point.
fn point(player: Player, input: f64, response: f64) -> (f64, f64) {
    match player {
        Player::Alice => (response, input),
        Player::Bob => (input, response),
    }
}

/// Splits the curve wherever consecutive responses are further apart than
/// the jump threshold. The sample at 0° is repeated at 180° to close the
/// square.
fn branches(curve: &ReactionCurve) -> Vec<Vec<(f64, f64)>> {
    let mut pts: Vec<(f64, f64)> = curve
        .samples
        .iter()
        .map(|s| (s.input.degrees(), s.response.degrees()))
        .collect();
    if let Some(&(_, r0)) = pts.first() {
        pts.push((180.0, r0));
    }
    let mut out = vec![Vec::new()];
    for (k, &(input, response)) in pts.iter().enumerate() {
        if k > 0 && (response - pts[k - 1].1).abs() > JUMP_THRESHOLD_DEG {
            out.push(Vec::new());
        }
        out.last_mut().unwrap().push(point(curve.player, input, response));
    }
    out
}

fn polyline(svg: &mut String, pts: &[(f64, f64)], color: &str) {
    if pts.len() < 2 {
        if let Some(&(a, b)) = pts.first() {
            let _ = writeln!(svg, r#"<circle cx="{:.2}" cy="{:.2}" r="1.2" fill="{color}"/>"#, x_px(a), y_px(b));
        }
        return;
    }
    let coords: Vec<String> = pts
        .iter()
        .map(|&(a, b)| format!("{:.2},{:.2}", x_px(a), y_px(b)))
        .collect();
    let _ = writeln!(
        svg,
        r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="2"/>"#,
        coords.join(" ")
    );
}

fn jumps(svg: &mut String, curve: &ReactionCurve, color: &str) {
    for d in &curve.discontinuities {
        let (a0, b0) = point(curve.player, d.at_deg, d.from_deg);
        let (a1, b1) = point(curve.player, d.at_deg, d.to_deg);
        let dash = match d.kind {
            JumpKind::Seam => r#" stroke-dasharray="4 3""#,
            JumpKind::Genuine => "",
        };
        let _ = writeln!(
            svg,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="0.6"{dash}/>"#,
            x_px(a0),
            y_px(b0),
            x_px(a1),
            y_px(b1)
        );
    }
}

pub fn render(alice: &ReactionCurve, bob: &ReactionCurve, equilibria: &[Equilibrium], title: &str) -> String {
    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(svg, r#"<rect width="{SIZE}" height="{SIZE}" fill="white"/>"#);
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="24" text-anchor="middle" font-size="14">{}</text>"#,
        SIZE / 2.0,
        escape(title)
    );

    for t in (0..=180).step_by(30) {
        let t = t as f64;
        let _ = writeln!(
            svg,
            r##"<line x1="{x:.2}" y1="{top}" x2="{x:.2}" y2="{bottom}" stroke="#dddddd" stroke-width="0.5"/>"##,
            x = x_px(t),
            top = MARGIN,
            bottom = MARGIN + PLOT
        );
        let _ = writeln!(
            svg,
            r##"<line x1="{left}" y1="{y:.2}" x2="{right}" y2="{y:.2}" stroke="#dddddd" stroke-width="0.5"/>"##,
            y = y_px(t),
            left = MARGIN,
            right = MARGIN + PLOT
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{t}</text>"#,
            x_px(t),
            MARGIN + PLOT + 18.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{t}</text>"#,
            MARGIN - 8.0,
            y_px(t) + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<rect x="{MARGIN}" y="{MARGIN}" width="{PLOT}" height="{PLOT}" fill="none" stroke="black"/>"#
    );
    let _ = writeln!(
        svg,
        r#"<text x="{}" y="{}" text-anchor="middle">α (degrees)</text>"#,
        SIZE / 2.0,
        SIZE - 18.0
    );
    let _ = writeln!(
        svg,
        r#"<text x="18" y="{}" text-anchor="middle" transform="rotate(-90 18 {})">β (degrees)</text>"#,
        SIZE / 2.0,
        SIZE / 2.0
    );

    for (curve, color) in [(alice, ALICE_COLOR), (bob, BOB_COLOR)] {
        for branch in branches(curve) {
            polyline(&mut svg, &branch, color);
        }
        jumps(&mut svg, curve, color);
    }

    for e in equilibria {
        let _ = writeln!(
            svg,
            r#"<circle cx="{:.2}" cy="{:.2}" r="5" fill="none" stroke="black" stroke-width="2"><title>α={:.6}° β={:.6}° value={}</title></circle>"#,
            x_px(e.alpha.degrees()),
            y_px(e.beta.degrees()),
            e.alpha.degrees(),
            e.beta.degrees(),
            crate::report::sig6(e.value)
        );
    }

    let legend_y = MARGIN + PLOT + 34.0;
    for (k, (label, color)) in [("Alice: α = R_A(β)", ALICE_COLOR), ("Bob: β = R_B(α)", BOB_COLOR)]
        .into_iter()
        .enumerate()
    {
        let x = MARGIN + k as f64 * 180.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{x}" y1="{legend_y}" x2="{}" y2="{legend_y}" stroke="{color}" stroke-width="2"/>"#,
            x + 24.0
        );
        let _ = writeln!(svg, r#"<text x="{}" y="{}">{}</text>"#, x + 30.0, legend_y + 4.0, escape(label));
    }
    svg.push_str("</svg>\n");
    svg
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equilibrium::{find_equilibria, reaction_curve, SolverSettings};
    use crate::game::PayoffMatrix;
    use crate::strategy::{Frames, QuantumGame};

    fn game(h: [f64; 4], ta: f64, tb: f64) -> QuantumGame {
        QuantumGame::new(
            PayoffMatrix::new(h[0], h[1], h[2], h[3]).unwrap(),
            Frames::new(ta, tb).unwrap(),
        )
    }

    #[test]
    fn renders_curves_jumps_and_markers() {
        let g = game([3.0, 3.0, 5.0, 1.0], 15.0, 35.0);
        let a = reaction_curve(Player::Alice, &g, 0.5).unwrap();
        let b = reaction_curve(Player::Bob, &g, 0.5).unwrap();
        let eq = find_equilibria(&g, &SolverSettings::default()).unwrap();
        let svg = render(&a, &b, &eq, "a<b");
        assert!(svg.starts_with("<svg xmlns=\"http://www.w3.org/2000/svg\""));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<title>").count(), eq.len());
        assert_eq!(
            svg.matches("stroke-width=\"0.6\"").count(),
            a.discontinuities.len() + b.discontinuities.len()
        );
        assert!(svg.contains("a&lt;b"));
        assert!(!svg.contains("href"));
    }

    #[test]
    fn branches_break_at_jumps() {
        let g = game([1.0; 4], 45.0, 45.0);
        let a = reaction_curve(Player::Alice, &g, 1.0).unwrap();
        // R_A(β) = β + 90° wraps once, at β = 90°
        let parts = branches(&a);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), 181);
    }
}
