//! Normalised eigengaps of `C(k)` (a `k`-clique plus nine disjoint edges)
//! for a range of `k`.

use gspec_core::generators::graph_c;
use gspec_core::spectra::{normalized_eigengaps, spectrum};
use gspec_core::RepresentationKind;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;

/// Gaps at or below this are not considered notable.
pub const NOTABLE_GAP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepEntry {
    pub k: usize,
    pub kind: RepresentationKind,
    /// `gaps[i]` is the normalised gap between eigenvalues `i + 1` and `i + 2`.
    pub gaps: Vec<f64>,
    /// 1-based indices of the (up to) two largest gaps above
    /// [`NOTABLE_GAP_TOL`], largest first; ties go to the lower index.
    pub notable: Vec<usize>,
}

fn notable(gaps: &[f64]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..gaps.len())
        .filter(|&i| gaps[i] > NOTABLE_GAP_TOL)
        .collect();
    idx.sort_by(|&a, &b| gaps[b].total_cmp(&gaps[a]).then(a.cmp(&b)));
    idx.into_iter().take(2).map(|i| i + 1).collect()
}

/// Entries ordered by `k`, then by kind (`A`, `L`, `Lrw`).
pub fn sweep(lo: usize, hi: usize) -> Result<Vec<SweepEntry>> {
    let per_k: Vec<Result<Vec<SweepEntry>>> = (lo..=hi)
        .into_par_iter()
        .map(|k| {
            let g = graph_c(k)?;
            RepresentationKind::ALL
                .iter()
                .map(|&kind| {
                    let gaps = normalized_eigengaps(&spectrum(&g, kind)?);
                    Ok(SweepEntry {
                        k,
                        kind,
                        notable: notable(&gaps),
                        gaps,
                    })
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for entries in per_k {
        out.extend(entries?);
    }
    Ok(out)
}
