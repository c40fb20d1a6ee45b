//! Grid charts of bigraded groups.
//!
//! Legend: `[]` is ℤ, `o` is ℤ/2, `(n)` is ℤ/n, anything else is written
//! out (`Z^2`, `(Z/2)^2`, `Z+Z/2`). Nonzero ρ-maps are drawn as diagonals;
//! x-maps that are nonzero but not isomorphisms are drawn dashed and
//! labelled with their multiplier.

use crate::decomposition::Graded;
use crate::grading::{Bidegree, Window};
use crate::group::{FinAbGroup, GroupHom};
use std::fmt::Write as _;
use std::str::FromStr;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unsupported chart format {0:?} (expected ascii or svg)")]
pub struct UnsupportedFormat(pub String);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChartFormat {
    Ascii,
    Svg,
}

impl FromStr for ChartFormat {
    type Err = UnsupportedFormat;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ascii" | "text" => Ok(ChartFormat::Ascii),
            "svg" => Ok(ChartFormat::Svg),
            _ => Err(UnsupportedFormat(s.to_string())),
        }
    }
}

/// Chart symbol of a group; empty for the zero group.
pub fn cell_symbol(g: &FinAbGroup) -> String {
    match (g.rank(), g.torsion()) {
        (0, []) => String::new(),
        (1, []) => "[]".to_string(),
        (0, [2]) => "o".to_string(),
        (0, [n]) => format!("({n})"),
        _ => g.ascii(),
    }
}

/// Multiplier of a nonzero x-map that is not an isomorphism.
fn x_label(h: &GroupHom) -> Option<String> {
    if h.is_zero() || h.is_iso() {
        return None;
    }
    let m = h.matrix();
    if m.rows() == 1 && m.cols() == 1 {
        Some(format!("x{}", m.get(0, 0)))
    } else {
        Some(format!("im {}", h.image().ascii()))
    }
}

fn special_x_maps(d: &impl Graded, window: &Window) -> Vec<(Bidegree, String)> {
    let (_, _, _, q1) = window.bounds();
    window
        .iter()
        .filter(|at| at.q + 2 <= q1)
        .filter_map(|at| x_label(&d.act_x(at.p, at.q)).map(|l| (at, l)))
        .collect()
}

pub fn render_chart(d: &impl Graded, window: &Window, format: ChartFormat) -> String {
    match format {
        ChartFormat::Ascii => render_ascii(d, window),
        ChartFormat::Svg => render_svg(d, window),
    }
}

fn render_ascii(d: &impl Graded, window: &Window) -> String {
    let (p0, p1, q0, q1) = window.bounds();
    let cells: Vec<Vec<String>> = window
        .q_range()
        .rev()
        .map(|q| {
            window
                .p_range()
                .map(|p| cell_symbol(&d.group_at(p, q)))
                .collect()
        })
        .collect();
    let width = cells
        .iter()
        .flatten()
        .map(|s| s.chars().count())
        .max()
        .unwrap_or(0)
        .max(3)
        + 1;
    let mut out = String::new();
    let _ = write!(out, "{:>4} ", "q\\p");
    for p in p0..=p1 {
        let _ = write!(out, "{p:>width$}");
    }
    out.push('\n');
    for (row, q) in (q0..=q1).rev().enumerate() {
        let _ = write!(out, "{q:>4} ");
        for s in &cells[row] {
            let s = if s.is_empty() { "." } else { s.as_str() };
            let _ = write!(out, "{s:>width$}");
        }
        out.push('\n');
        if q > q0 {
            // diagonals for ρ from (p, q-1) to (p+1, q)
            let mut line = format!("{:>4} ", "");
            let mut any = false;
            for p in p0..=p1 {
                let mark = p < p1 && !d.act_rho(p, q - 1).is_zero();
                any |= mark;
                let _ = write!(line, "{:>width$}", if mark { "/ " } else { "" });
            }
            if any {
                out.push_str(line.trim_end());
                out.push('\n');
            }
        }
    }
    let specials = special_x_maps(d, window);
    if !specials.is_empty() {
        out.push_str("x-maps that are not isomorphisms:\n");
        for (at, label) in specials {
            let _ = writeln!(out, "  {at} -> {}: {label}", at.shifted(0, 2));
        }
    }
    out
}

fn render_svg(d: &impl Graded, window: &Window) -> String {
    const CELL: i64 = 40;
    const MARGIN: i64 = 40;
    let (p0, p1, q0, q1) = window.bounds();
    let w = (p1 - p0 + 1) * CELL + 2 * MARGIN;
    let h = (q1 - q0 + 1) * CELL + 2 * MARGIN;
    let cx = |p: i64| MARGIN + (p - p0) * CELL + CELL / 2;
    let cy = |q: i64| MARGIN + (q1 - q) * CELL + CELL / 2;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}" font-family="monospace" font-size="11">"#
    );
    let _ = writeln!(out, r##"<rect width="{w}" height="{h}" fill="#ffffff"/>"##);
    for p in p0..=p1 {
        let x = cx(p);
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{MARGIN}" x2="{x}" y2="{}" stroke="#eeeeee"/>"##,
            h - MARGIN
        );
        let _ = writeln!(
            out,
            r#"<text x="{x}" y="{}" text-anchor="middle">{p}</text>"#,
            h - MARGIN / 3
        );
    }
    for q in q0..=q1 {
        let y = cy(q);
        let _ = writeln!(
            out,
            r##"<line x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}" stroke="#eeeeee"/>"##,
            w - MARGIN
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{q}</text>"#,
            MARGIN / 2,
            y + 4
        );
    }
    for at in window.iter() {
        if at.p < p1 && at.q < q1 && !d.act_rho(at.p, at.q).is_zero() {
            let _ = writeln!(
                out,
                r##"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#333333"/>"##,
                cx(at.p),
                cy(at.q),
                cx(at.p + 1),
                cy(at.q + 1)
            );
        }
    }
    for (at, label) in special_x_maps(d, window) {
        let x = cx(at.p) - 6;
        let _ = writeln!(
            out,
            r##"<line x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="#333333" stroke-dasharray="3,3"/>"##,
            cy(at.q),
            cy(at.q + 2)
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" text-anchor="end">{label}</text>"#,
            x - 2,
            cy(at.q + 1) + 4
        );
    }
    for at in window.iter() {
        let g = d.group_at(at.p, at.q);
        let (x, y) = (cx(at.p), cy(at.q));
        match (g.rank(), g.torsion()) {
            (0, []) => {}
            (1, []) => {
                let _ = writeln!(
                    out,
                    r##"<rect x="{}" y="{}" width="12" height="12" fill="#ffffff" stroke="#000000"/>"##,
                    x - 6,
                    y - 6
                );
            }
            (0, [2]) => {
                let _ = writeln!(out, r##"<circle cx="{x}" cy="{y}" r="4" fill="#000000"/>"##);
            }
            (0, [n]) => {
                let _ = writeln!(
                    out,
                    r##"<circle cx="{x}" cy="{y}" r="9" fill="#ffffff" stroke="#000000"/>"##
                );
                let _ = writeln!(
                    out,
                    r#"<text x="{x}" y="{}" text-anchor="middle">{n}</text>"#,
                    y + 4
                );
            }
            _ => {
                let _ = writeln!(
                    out,
                    r##"<text x="{x}" y="{}" text-anchor="middle" fill="#000000">{}</text>"##,
                    y + 4,
                    g.ascii()
                );
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::Decomposition;
    use crate::module::StandardModule;

    #[test]
    fn format_names() {
        assert_eq!("svg".parse::<ChartFormat>(), Ok(ChartFormat::Svg));
        assert!("png".parse::<ChartFormat>().is_err());
    }

    #[test]
    fn empty_decomposition_has_no_symbols() {
        let w = Window::square(-2, 2).unwrap();
        let s = render_chart(&Decomposition::zero(), &w, ChartFormat::Ascii);
        assert!(!s.contains("[]") && !s.contains('o') && !s.contains('/'));
        assert_eq!(s.lines().count(), 6);
    }

    #[test]
    fn d4_shows_circled_four() {
        let w = Window::square(-2, 2).unwrap();
        let d = Decomposition::single(StandardModule::d4n(1).unwrap());
        assert_eq!(cell_symbol(&d.group_at(1, 1)), "(4)");
        let s = render_chart(&d, &w, ChartFormat::Ascii);
        assert!(s.contains("(4)"));
        assert!(s.contains("(1,-1) -> (1,1): x2"));
    }
}
