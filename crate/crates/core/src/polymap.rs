//! Polynomial interpolation from one spectrum onto another.
//!
//! Such a polynomial exists only if coinciding inputs map to coinciding
//! outputs. In floating point the check needs a merge tolerance: inputs
//! closer than `merge_tol` are treated as one node. When the outputs of a
//! merged cluster disagree the map is reported unstable and no coefficients
//! are produced.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spectra::Spectrum;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyMapReport {
    /// Interpolation nodes (ascending) when stable.
    pub nodes: Option<Vec<f64>>,
    /// Newton-form coefficients `f[x0], f[x0,x1], ...` when stable.
    pub coefficients: Option<Vec<f64>>,
    pub max_residual: Option<f64>,
    /// Smallest distance between consecutive sorted inputs.
    pub min_input_gap: Option<f64>,
    /// Largest spread of outputs over a cluster of merged inputs.
    pub output_span_over_degenerate_inputs: f64,
    /// Input range (1-based positions in the source spectrum) of the cluster
    /// attaining that spread.
    pub widest_cluster: Option<Vec<usize>>,
    pub unstable: bool,
}

impl PolyMapReport {
    pub fn degree(&self) -> Option<usize> {
        self.nodes.as_ref().map(|n| n.len().saturating_sub(1))
    }

    /// Evaluates the interpolant, if one was built.
    pub fn eval(&self, x: f64) -> Option<f64> {
        Some(newton_eval(
            self.nodes.as_ref()?,
            self.coefficients.as_ref()?,
            x,
        ))
    }
}

/// Divided-difference table top row for `(xs, ys)`; `xs` must be distinct.
pub fn divided_differences(xs: &[f64], ys: &[f64]) -> Vec<f64> {
    let mut coef = ys.to_vec();
    let n = xs.len();
    for level in 1..n {
        for i in (level..n).rev() {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    coef
}

/// Nested evaluation of the Newton form.
pub fn newton_eval(xs: &[f64], coef: &[f64], x: f64) -> f64 {
    let mut acc = 0.0;
    for i in (0..coef.len()).rev() {
        acc = acc * (x - xs[i]) + coef[i];
    }
    acc
}

/// Interpolates `src.values[i] -> dst.values[i]` (index-aligned).
pub fn polynomial_spectrum_map(
    src: &Spectrum,
    dst: &Spectrum,
    merge_tol: f64,
) -> Result<PolyMapReport> {
    if src.len() != dst.len() {
        return Err(Error::DimensionMismatch {
            left: src.len(),
            right: dst.len(),
        });
    }
    if merge_tol.is_nan() || merge_tol < 0.0 {
        return Err(Error::InvalidArgument(format!(
            "merge tolerance must be non-negative, got {merge_tol}"
        )));
    }
    let mut order: Vec<usize> = (0..src.len()).collect();
    order.sort_by(|&a, &b| src.values[a].total_cmp(&src.values[b]).then(a.cmp(&b)));

    let min_input_gap = order
        .windows(2)
        .map(|w| src.values[w[1]] - src.values[w[0]])
        .reduce(f64::min);

    // single-linkage clusters along the sorted inputs
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for &i in &order {
        match clusters.last_mut() {
            Some(c) if src.values[i] - src.values[*c.last().unwrap()] <= merge_tol => c.push(i),
            _ => clusters.push(vec![i]),
        }
    }

    let span = |c: &[usize]| {
        let (lo, hi) = c
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &i| {
                (lo.min(dst.values[i]), hi.max(dst.values[i]))
            });
        hi - lo
    };
    let widest = clusters
        .iter()
        .filter(|c| c.len() > 1)
        .max_by(|a, b| span(a).total_cmp(&span(b)));
    let output_span = widest.map_or(0.0, |c| span(c));
    let unstable = output_span > merge_tol;
    let widest_cluster = widest.map(|c| {
        let mut ids: Vec<usize> = c.iter().map(|i| i + 1).collect();
        ids.sort_unstable();
        ids
    });

    let mut report = PolyMapReport {
        nodes: None,
        coefficients: None,
        max_residual: None,
        min_input_gap,
        output_span_over_degenerate_inputs: output_span,
        widest_cluster,
        unstable,
    };
    if unstable {
        return Ok(report);
    }

    let mean = |c: &[usize], v: &[f64]| c.iter().map(|&i| v[i]).sum::<f64>() / c.len() as f64;
    let nodes: Vec<f64> = clusters.iter().map(|c| mean(c, &src.values)).collect();
    let values: Vec<f64> = clusters.iter().map(|c| mean(c, &dst.values)).collect();
    let coef = divided_differences(&nodes, &values);
    let max_residual = src
        .values
        .iter()
        .zip(&dst.values)
        .map(|(&x, &y)| (newton_eval(&nodes, &coef, x) - y).abs())
        .fold(0.0, f64::max);
    report.nodes = Some(nodes);
    report.coefficients = Some(coef);
    report.max_residual = Some(max_residual);
    Ok(report)
}
