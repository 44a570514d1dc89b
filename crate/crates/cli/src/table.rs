//! Bound values over a `(d_min, d_max)` grid, rendered the way they are
//! usually tabulated: two decimals, trailing zeros dropped.

use gspec_core::bounds::{classify_region, eigenvalue_bound_set, BoundSet, RegionLabel};
use gspec_core::DegreeSummary;
use serde::Serialize;

/// Placeholder for a bound that is undefined (`d_min = 0`).
pub const UNDEFINED: &str = "·";
/// Cell content for `d_min > d_max`.
pub const EMPTY: &str = "*";

#[derive(Debug, Clone, Serialize)]
pub struct TableCell {
    pub d_min: u32,
    pub d_max: u32,
    /// `None` when `d_min > d_max`.
    pub bounds: Option<BoundSet>,
    pub region: Option<RegionLabel>,
    pub rendered: String,
}

/// Rounds to two decimals and strips trailing zeros: `0.50 -> "0.5"`,
/// `2.00 -> "2"`.
pub fn fmt2(x: f64) -> String {
    let s = format!("{x:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".into()
    } else {
        s.into()
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| UNDEFINED.to_string(), fmt2)
}

/// `(e_AL, e_LLrw, e_ALrw)` as a tuple string.
pub fn render_bounds(b: &BoundSet) -> String {
    format!(
        "({}, {}, {})",
        fmt2(b.e_al),
        fmt_opt(b.e_llrw),
        fmt_opt(b.e_alrw)
    )
}

pub fn cell(d_min: u32, d_max: u32) -> TableCell {
    if d_min > d_max {
        return TableCell {
            d_min,
            d_max,
            bounds: None,
            region: None,
            rendered: EMPTY.into(),
        };
    }
    let ds = DegreeSummary::from_extremes(d_min as f64, d_max as f64);
    let b = eigenvalue_bound_set(&ds);
    TableCell {
        d_min,
        d_max,
        bounds: Some(b),
        region: Some(classify_region(&ds).label),
        rendered: render_bounds(&b),
    }
}

/// Cells row by row: `d_max` in `1..=dmax_max`, `d_min` in `0..=dmin_max`.
pub fn cells(dmin_max: u32, dmax_max: u32) -> Vec<TableCell> {
    (1..=dmax_max)
        .flat_map(|k| (0..=dmin_max).map(move |j| cell(j, k)))
        .collect()
}

/// Plain-text grid with `d_min` across and `d_max` down.
pub fn render_text(dmin_max: u32, dmax_max: u32) -> String {
    let all = cells(dmin_max, dmax_max);
    let width = all
        .iter()
        .map(|c| c.rendered.chars().count())
        .max()
        .unwrap_or(1)
        .max(3);
    let pad = |s: &str| format!("{s:<width$}");
    let mut out = format!("{:<12}", "d_max\\d_min");
    for j in 0..=dmin_max {
        out.push_str("  ");
        out.push_str(&pad(&j.to_string()));
    }
    out = out.trim_end().to_string();
    out.push('\n');
    for row in all.chunks(dmin_max as usize + 1) {
        let mut line = format!("{:<12}", row[0].d_max);
        for c in row {
            line.push_str("  ");
            line.push_str(&pad(&c.rendered));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_decimal_rendering() {
        assert_eq!(fmt2(0.5), "0.5");
        assert_eq!(fmt2(2.0), "2");
        assert_eq!(fmt2(2.0 / 9.0), "0.22");
        assert_eq!(fmt2(1.0 / 3.0), "0.33");
        assert_eq!(fmt2(0.0), "0");
        assert_eq!(fmt2(-1e-17), "0");
    }

    #[test]
    fn sample_cells() {
        assert_eq!(cell(4, 5).rendered, "(0.5, 0.22, 0.33)");
        assert_eq!(cell(0, 3).rendered, "(1.5, ·, ·)");
        assert_eq!(cell(3, 3).rendered, "(0, 0, 0)");
        assert_eq!(cell(4, 3).rendered, "*");
    }

    #[test]
    fn text_grid_shape() {
        let t = render_text(5, 7);
        assert_eq!(t.lines().count(), 8);
        assert!(t.lines().nth(5).unwrap().contains("(0.5, 0.22, 0.33)"));
    }
}
