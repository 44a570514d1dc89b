//! Series behind the eigenvalue and eigengap comparison plots.
//!
//! Each row carries one index of a pair comparison plus an interval of
//! half-width equal to the bound, centred between the two compared values.
//! When the pair also has a tighter "inner" bound a second interval is
//! included.

use clap::ValueEnum;
use gspec_core::bounds::{eigenvalue_bound_set, gap_bound_set, pair_spectra, Pair, PairSpectra};
use gspec_core::spectra::normalized_eigengaps;
use gspec_core::Graph;
use serde::Serialize;

use crate::error::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Figure {
    /// Eigenvalues: transformed source against target
    Eigs,
    /// Support-normalised eigengaps
    Gaps,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotRow {
    /// 1-based eigenvalue index (gap `i` lies between eigenvalues `i` and `i + 1`).
    pub index: usize,
    pub source: f64,
    pub transformed: f64,
    pub target: f64,
    pub center: f64,
    pub interval_low: f64,
    pub interval_high: f64,
    pub inner_low: Option<f64>,
    pub inner_high: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotDataset {
    pub graph: String,
    pub figure: Figure,
    pub pair: Pair,
    pub bound: f64,
    pub inner_bound: Option<f64>,
    pub rows: Vec<PlotRow>,
}

fn interval(a: f64, b: f64, half: f64) -> (f64, f64, f64) {
    let c = 0.5 * (a + b);
    (c, c - half, c + half)
}

/// Eigenvalue figure: `source` is the raw source eigenvalue, `transformed`
/// its affine image, `target` the target eigenvalue; the interval is centred
/// at `(transformed + target) / 2`.
fn eigs(ps: &PairSpectra) -> (f64, Option<f64>, Vec<PlotRow>) {
    let d = ps.differences();
    let inner = match ps.pair {
        Pair::ALrw => eigenvalue_bound_set(&ps.degrees).e_prime_alrw,
        _ => None,
    };
    let rows = (0..ps.source.len())
        .map(|i| {
            let (x, f, t) = (ps.source.values[i], ps.transformed[i], ps.target.values[i]);
            let (center, lo, hi) = interval(f, t, d.bound);
            let inner_iv = inner.map(|e| interval(f, t, e));
            PlotRow {
                index: i + 1,
                source: x,
                transformed: f,
                target: t,
                center,
                interval_low: lo,
                interval_high: hi,
                inner_low: inner_iv.map(|v| v.1),
                inner_high: inner_iv.map(|v| v.2),
            }
        })
        .collect();
    (d.bound, inner, rows)
}

/// Eigengap figure: `source` and `target` are support-normalised gaps and
/// the interval is centred at their mean. `transformed` is the gap of the
/// transformed source measured on the target support; the inner interval is
/// centred between it and `target`.
fn gaps(ps: &PairSpectra) -> Result<(f64, Option<f64>, Vec<PlotRow>)> {
    let gd = ps.gap_differences();
    let gb = gap_bound_set(&ps.degrees)?;
    let inner = ps.pair.primed_gap_bound(&gb);
    let source = normalized_eigengaps(&ps.source);
    let target = normalized_eigengaps(&ps.target);
    let len = ps.target.support_length;
    let rows = source
        .iter()
        .zip(&target)
        .enumerate()
        .map(|(i, (&s, &t))| {
            let f = if len > 0.0 {
                (ps.transformed[i + 1] - ps.transformed[i]).abs() / len
            } else {
                0.0
            };
            let (center, lo, hi) = interval(s, t, gd.bound);
            let inner_iv = inner.map(|g| interval(f, t, g));
            PlotRow {
                index: i + 1,
                source: s,
                transformed: f,
                target: t,
                center,
                interval_low: lo,
                interval_high: hi,
                inner_low: inner_iv.map(|v| v.1),
                inner_high: inner_iv.map(|v| v.2),
            }
        })
        .collect();
    Ok((gd.bound, inner, rows))
}

pub fn plot_dataset(id: &str, g: &Graph, figure: Figure, pair: Pair) -> Result<PlotDataset> {
    let ps = pair_spectra(pair, g)?;
    let (bound, inner_bound, rows) = match figure {
        Figure::Eigs => eigs(&ps),
        Figure::Gaps => gaps(&ps)?,
    };
    Ok(PlotDataset {
        graph: id.to_string(),
        figure,
        pair,
        bound,
        inner_bound,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use gspec_core::generators::star;

    #[test]
    fn eig_intervals_are_centred_with_bound_half_width() {
        let g = star(18).unwrap();
        let p = plot_dataset("star", &g, Figure::Eigs, Pair::AL).unwrap();
        assert_eq!(p.rows.len(), 18);
        assert_eq!(p.bound, 8.0);
        for r in &p.rows {
            assert!((r.interval_high - r.interval_low - 2.0 * p.bound).abs() < 1e-12);
            assert!((r.center - 0.5 * (r.transformed + r.target)).abs() < 1e-12);
            assert!(r.inner_low.is_none());
        }
    }

    #[test]
    fn inner_intervals_for_normalised_targets() {
        let g = star(6).unwrap();
        let p = plot_dataset("star", &g, Figure::Eigs, Pair::ALrw).unwrap();
        assert!(p.inner_bound.unwrap() <= p.bound);
        assert!(p.rows.iter().all(|r| r.inner_low.is_some()));
        let q = plot_dataset("star", &g, Figure::Gaps, Pair::LLrw).unwrap();
        assert_eq!(q.rows.len(), 5);
        assert!(q.rows.iter().all(|r| r.inner_high.is_some()));
    }
}
