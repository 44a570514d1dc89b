//! Affine maps between representation spectra and the closed-form bounds on
//! the resulting eigenvalue and normalised-eigengap differences.
//!
//! With `d1 = d2 = (d_max + d_min) / 2` and `c1 = c2 = 2 / (d_max + d_min)`:
//!
//! ```text
//! f1(mu)     = d1 - mu        A    -> L
//! f2(lambda) = c1 * lambda    L    -> L_rw
//! f3(mu)     = 1 - c2 * mu    A    -> L_rw
//! ```
//!
//! Every bound depends on the graph only through `d_min` and `d_max`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DegreeSummary, Graph, DEGREE_TOL};
use crate::spectra::{normalized_eigengaps, spectrum, Interval, RepresentationKind, Spectrum};

/// Slack allowed when checking a computed difference against its bound.
pub const VERIFY_TOL: f64 = 1e-9;
pub const DEFAULT_CROSSOVER_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformParams {
    pub d1: f64,
    pub d2: f64,
    pub c1: f64,
    pub c2: f64,
}

pub fn transform_params(ds: &DegreeSummary) -> Result<TransformParams> {
    let sum = ds.d_max + ds.d_min;
    if sum <= 0.0 {
        return Err(Error::DegenerateDegrees);
    }
    let d = sum / 2.0;
    let c = 2.0 / sum;
    Ok(TransformParams {
        d1: d,
        d2: d,
        c1: c,
        c2: c,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Transform {
    F1,
    F2,
    F3,
}

impl Transform {
    pub fn eval(self, p: &TransformParams, x: f64) -> f64 {
        match self {
            Transform::F1 => p.d1 - x,
            Transform::F2 => p.c1 * x,
            Transform::F3 => p.c2 * (p.d2 - x),
        }
    }

    pub fn source_kind(self) -> RepresentationKind {
        match self {
            Transform::F1 | Transform::F3 => RepresentationKind::Adjacency,
            Transform::F2 => RepresentationKind::Laplacian,
        }
    }
}

/// Applies `which` to every eigenvalue. Because the adjacency spectrum is
/// listed in descending order, the output is ascending and lines up index
/// by index with the target Laplacian spectrum.
pub fn apply_transform(which: Transform, p: &TransformParams, s: &Spectrum) -> Result<Vec<f64>> {
    let expected = which.source_kind();
    if s.kind != expected {
        return Err(Error::KindMismatch {
            expected: expected.tag(),
            actual: s.kind.tag(),
        });
    }
    Ok(s.values.iter().map(|&x| which.eval(p, x)).collect())
}

/// Image of the source spectral support under `which`.
pub fn mapped_support(which: Transform, ds: &DegreeSummary) -> Result<Interval> {
    let (lo, hi) = (ds.d_min, ds.d_max);
    let sum = hi + lo;
    if sum <= 0.0 {
        return Err(Error::DegenerateDegrees);
    }
    Ok(match which {
        Transform::F1 => Interval::new(-(hi - lo) / 2.0, (3.0 * hi + lo) / 2.0),
        Transform::F2 => Interval::new(0.0, 4.0 * hi / sum),
        Transform::F3 => Interval::new(-(hi - lo) / sum, (3.0 * hi + lo) / sum),
    })
}

/// Eigenvalue-difference bounds. The `L_rw` bounds are absent when
/// `d_min == 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundSet {
    pub e_al: f64,
    pub e_llrw: Option<f64>,
    pub e_alrw: Option<f64>,
    /// Tighter alternative to `e_alrw` whose optimal transform degenerates
    /// to a constant once `d_max > 5 d_min`. Reported, never the default.
    pub e_prime_alrw: Option<f64>,
}

pub fn eigenvalue_bound_set(ds: &DegreeSummary) -> BoundSet {
    let (lo, hi) = (ds.d_min, ds.d_max);
    let e_al = (hi - lo) / 2.0;
    if lo <= 0.0 {
        return BoundSet {
            e_al,
            e_llrw: None,
            e_alrw: None,
            e_prime_alrw: None,
        };
    }
    let ratio = (hi - lo) / (hi + lo);
    let e_alrw = 3.0 * ratio;
    BoundSet {
        e_al,
        e_llrw: Some(2.0 * ratio),
        e_alrw: Some(e_alrw),
        e_prime_alrw: Some(if hi <= 5.0 * lo { e_alrw } else { 2.0 }),
    }
}

/// Bounds on differences of support-normalised eigengaps. The primed
/// variants compare transformed (unnormalised) gaps scaled by `1/2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapBoundSet {
    pub g_al: f64,
    pub g_llrw: Option<f64>,
    pub g_prime_llrw: Option<f64>,
    pub g_alrw: Option<f64>,
    pub g_prime_alrw: Option<f64>,
}

pub fn gap_bound_set(ds: &DegreeSummary) -> Result<GapBoundSet> {
    let (lo, hi) = (ds.d_min, ds.d_max);
    if hi <= 0.0 {
        return Err(Error::DegenerateDegrees);
    }
    let e = eigenvalue_bound_set(ds);
    let rel = (hi - lo) / hi;
    let defined = lo > 0.0;
    Ok(GapBoundSet {
        g_al: rel / 2.0,
        g_llrw: defined.then_some(2.0 * rel),
        g_prime_llrw: e.e_llrw,
        g_alrw: defined.then_some(2.5 * rel),
        g_prime_alrw: e.e_prime_alrw,
    })
}

/// The six regions of the `(d_min, d_max)` plane, each with its own
/// ordering of the three eigenvalue bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    Regular,
    Bold,
    Underlined,
    Teletype,
    Italic,
    Normal,
}

impl RegionLabel {
    /// Bound ordering implied by the region.
    pub fn ordering(self) -> &'static str {
        match self {
            RegionLabel::Regular => "e_AL = e_LLrw = e_ALrw",
            RegionLabel::Bold => "e_AL < e_LLrw < e_ALrw",
            RegionLabel::Underlined => "e_AL = e_LLrw < e_ALrw",
            RegionLabel::Teletype => "e_LLrw < e_AL < e_ALrw",
            RegionLabel::Italic => "e_LLrw < e_AL = e_ALrw",
            RegionLabel::Normal => "e_LLrw < e_ALrw < e_AL",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegionClassification {
    pub label: RegionLabel,
    pub ordering: String,
}

pub fn classify_region(ds: &DegreeSummary) -> RegionClassification {
    let sum = ds.d_min + ds.d_max;
    let near = |x: f64| (sum - x).abs() <= DEGREE_TOL;
    let label = if ds.is_regular() {
        RegionLabel::Regular
    } else if near(4.0) {
        RegionLabel::Underlined
    } else if near(5.0) {
        RegionLabel::Teletype
    } else if near(6.0) {
        RegionLabel::Italic
    } else if sum < 4.0 {
        RegionLabel::Bold
    } else if sum < 6.0 {
        // non-integer sums strictly between 4 and 6 (weighted graphs) share
        // the ordering of sum = 5
        RegionLabel::Teletype
    } else {
        RegionLabel::Normal
    };
    RegionClassification {
        label,
        ordering: label.ordering().to_string(),
    }
}

/// Ordering of the three bounds read off their values (ties within `tol`).
/// `None` when the `L_rw` bounds are undefined.
pub fn observed_ordering(b: &BoundSet, tol: f64) -> Option<String> {
    let mut items = [
        ("e_AL", b.e_al),
        ("e_LLrw", b.e_llrw?),
        ("e_ALrw", b.e_alrw?),
    ];
    // stable sort keeps the canonical name order among ties
    items.sort_by(|a, b| a.1.total_cmp(&b.1));
    let mut out = items[0].0.to_string();
    for w in items.windows(2) {
        let op = if (w[1].1 - w[0].1).abs() <= tol {
            " = "
        } else {
            " < "
        };
        out.push_str(op);
        out.push_str(w[1].0);
    }
    Some(out)
}

/// A pair of representation matrices compared through one affine map.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pair {
    #[serde(rename = "A_L")]
    AL,
    #[serde(rename = "L_Lrw")]
    LLrw,
    #[serde(rename = "A_Lrw")]
    ALrw,
}

impl Pair {
    pub const ALL: [Pair; 3] = [Pair::AL, Pair::LLrw, Pair::ALrw];

    pub fn tag(self) -> &'static str {
        match self {
            Pair::AL => "A_L",
            Pair::LLrw => "L_Lrw",
            Pair::ALrw => "A_Lrw",
        }
    }

    pub fn from_tag(s: &str) -> Option<Pair> {
        match s {
            "A_L" | "AL" | "A-L" => Some(Pair::AL),
            "L_Lrw" | "LLrw" | "L-Lrw" => Some(Pair::LLrw),
            "A_Lrw" | "ALrw" | "A-Lrw" => Some(Pair::ALrw),
            _ => None,
        }
    }

    pub fn transform(self) -> Transform {
        match self {
            Pair::AL => Transform::F1,
            Pair::LLrw => Transform::F2,
            Pair::ALrw => Transform::F3,
        }
    }

    pub fn source(self) -> RepresentationKind {
        self.transform().source_kind()
    }

    pub fn target(self) -> RepresentationKind {
        match self {
            Pair::AL => RepresentationKind::Laplacian,
            Pair::LLrw | Pair::ALrw => RepresentationKind::NormalizedLaplacian,
        }
    }

    pub fn eigenvalue_bound(self, b: &BoundSet) -> Option<f64> {
        match self {
            Pair::AL => Some(b.e_al),
            Pair::LLrw => b.e_llrw,
            Pair::ALrw => b.e_alrw,
        }
    }

    pub fn gap_bound(self, g: &GapBoundSet) -> Option<f64> {
        match self {
            Pair::AL => Some(g.g_al),
            Pair::LLrw => g.g_llrw,
            Pair::ALrw => g.g_alrw,
        }
    }

    pub fn primed_gap_bound(self, g: &GapBoundSet) -> Option<f64> {
        match self {
            Pair::AL => None,
            Pair::LLrw => g.g_prime_llrw,
            Pair::ALrw => g.g_prime_alrw,
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Both spectra of a pair with the source mapped onto the target scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairSpectra {
    pub pair: Pair,
    pub degrees: DegreeSummary,
    pub params: TransformParams,
    pub source: Spectrum,
    pub target: Spectrum,
    pub transformed: Vec<f64>,
}

pub fn pair_spectra(pair: Pair, g: &Graph) -> Result<PairSpectra> {
    let degrees = g.degree_summary();
    if pair.target() == RepresentationKind::NormalizedLaplacian && degrees.d_min <= 0.0 {
        return Err(Error::IsolatedVertex);
    }
    let params = transform_params(&degrees)?;
    let source = spectrum(g, pair.source())?;
    let target = spectrum(g, pair.target())?;
    let transformed = apply_transform(pair.transform(), &params, &source)?;
    Ok(PairSpectra {
        pair,
        degrees,
        params,
        source,
        target,
        transformed,
    })
}

/// Signed per-index differences `delta_i = target_i - transformed_i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDifferences {
    pub pair: Pair,
    pub deltas: Vec<f64>,
    pub bound: f64,
    pub max_abs: f64,
    pub verified: bool,
}

impl PairSpectra {
    pub fn differences(&self) -> PairDifferences {
        let deltas: Vec<f64> = self
            .target
            .values
            .iter()
            .zip(&self.transformed)
            .map(|(t, f)| t - f)
            .collect();
        let bound = self
            .pair
            .eigenvalue_bound(&eigenvalue_bound_set(&self.degrees))
            .expect("L_rw bounds exist once d_min > 0 has been checked");
        let max_abs = deltas.iter().map(|d| d.abs()).fold(0.0, f64::max);
        PairDifferences {
            pair: self.pair,
            deltas,
            bound,
            max_abs,
            verified: max_abs <= bound + VERIFY_TOL,
        }
    }

    pub fn gap_differences(&self) -> GapDifferences {
        let gb = gap_bound_set(&self.degrees).expect("d_max > 0 once transform parameters exist");
        let source_gaps = normalized_eigengaps(&self.source);
        let target_gaps = normalized_eigengaps(&self.target);
        let diffs: Vec<f64> = source_gaps
            .iter()
            .zip(&target_gaps)
            .map(|(s, t)| (s - t).abs())
            .collect();
        let bound = self.pair.gap_bound(&gb).expect("defined for d_min > 0");
        let max_abs = diffs.iter().copied().fold(0.0, f64::max);

        let primed = self.pair.primed_gap_bound(&gb).map(|bound| {
            let diffs: Vec<f64> = self
                .transformed
                .windows(2)
                .zip(self.target.values.windows(2))
                .map(|(f, t)| 0.5 * ((f[1] - f[0]) - (t[1] - t[0])).abs())
                .collect();
            let max_abs = diffs.iter().copied().fold(0.0, f64::max);
            PrimedGapDifferences {
                diffs,
                bound,
                max_abs,
                verified: max_abs <= bound + VERIFY_TOL,
            }
        });

        GapDifferences {
            pair: self.pair,
            source_gaps,
            target_gaps,
            diffs,
            bound,
            max_abs,
            verified: max_abs <= bound + VERIFY_TOL,
            primed,
        }
    }
}

pub fn pair_differences(pair: Pair, g: &Graph) -> Result<PairDifferences> {
    Ok(pair_spectra(pair, g)?.differences())
}

/// Differences of support-normalised eigengaps, `|source_i - target_i|`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapDifferences {
    pub pair: Pair,
    pub source_gaps: Vec<f64>,
    pub target_gaps: Vec<f64>,
    pub diffs: Vec<f64>,
    pub bound: f64,
    pub max_abs: f64,
    pub verified: bool,
    pub primed: Option<PrimedGapDifferences>,
}

/// `(1/2) |(f(x_{i+1}) - f(x_i)) - (eta_{i+1} - eta_i)|` against `g'`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrimedGapDifferences {
    pub diffs: Vec<f64>,
    pub bound: f64,
    pub max_abs: f64,
    pub verified: bool,
}

pub fn gap_differences(pair: Pair, g: &Graph) -> Result<GapDifferences> {
    Ok(pair_spectra(pair, g)?.gap_differences())
}

/// 1-based indices `i` at which `(delta_i, delta_{i+1})` form a maximal
/// crossover.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossoverReport {
    pub indices: Vec<usize>,
    pub tolerance: f64,
}

/// Reports `i` when both `|delta_i|` and `|delta_{i+1}|` reach `bound - tol`
/// with opposite signs. A zero bound gives an empty report.
pub fn detect_maximal_crossover(diffs: &[f64], bound: f64, tol: f64) -> Result<CrossoverReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "crossover tolerance must be positive, got {tol}"
        )));
    }
    let mut indices = Vec::new();
    if bound > 0.0 {
        let reach = bound - tol;
        for (i, w) in diffs.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if a.abs() >= reach && b.abs() >= reach && a.signum() == -b.signum() && a != 0.0 {
                indices.push(i + 1);
            }
        }
    }
    Ok(CrossoverReport {
        indices,
        tolerance: tol,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylEntry {
    pub index: usize,
    /// `lambda_i(L_hat) - lambda_i` with `lambda_i(L_hat) = d1 - mu_i`.
    pub difference: f64,
    pub touches_lower: bool,
    pub touches_upper: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylReport {
    pub d1: f64,
    pub lower: f64,
    pub upper: f64,
    pub entries: Vec<WeylEntry>,
    pub holds: bool,
}

/// Checks `d1 - d_max <= (d1 - mu_i) - lambda_i <= d1 - d_min` for all `i`.
pub fn weyl_check(g: &Graph) -> Result<WeylReport> {
    let ps = pair_spectra(Pair::AL, g)?;
    let d1 = ps.params.d1;
    let lower = d1 - ps.degrees.d_max;
    let upper = d1 - ps.degrees.d_min;
    let touch = 1e-8;
    let entries: Vec<WeylEntry> = ps
        .transformed
        .iter()
        .zip(&ps.target.values)
        .enumerate()
        .map(|(i, (lh, l))| {
            let difference = lh - l;
            WeylEntry {
                index: i + 1,
                difference,
                touches_lower: (difference - lower).abs() <= touch,
                touches_upper: (difference - upper).abs() <= touch,
            }
        })
        .collect();
    let holds = entries
        .iter()
        .all(|e| e.difference >= lower - VERIFY_TOL && e.difference <= upper + VERIFY_TOL);
    Ok(WeylReport {
        d1,
        lower,
        upper,
        entries,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bipartite_b, complete, graph_c, path, star};
    use crate::spectra::spectral_support;
    use approx::assert_abs_diff_eq;

    fn ds(lo: f64, hi: f64) -> DegreeSummary {
        DegreeSummary::from_extremes(lo, hi)
    }

    #[test]
    fn params() {
        let p = transform_params(&ds(1.0, 17.0)).unwrap();
        assert_eq!((p.d1, p.d2), (9.0, 9.0));
        assert_abs_diff_eq!(p.c1, 1.0 / 9.0, epsilon = 1e-15);
        let p = transform_params(&ds(2.0, 2.0)).unwrap();
        assert_eq!((p.d1, p.c1), (2.0, 0.5));
        let p = transform_params(&ds(1.0, 2.0)).unwrap();
        assert_abs_diff_eq!(p.d1, 1.5);
        assert_abs_diff_eq!(p.c2, 2.0 / 3.0, epsilon = 1e-15);
        assert_eq!(
            transform_params(&ds(0.0, 0.0)),
            Err(Error::DegenerateDegrees)
        );
    }

    #[test]
    fn transforms_on_small_graphs() {
        let k3 = complete(3).unwrap();
        let p = transform_params(&k3.degree_summary()).unwrap();
        let a = spectrum(&k3, RepresentationKind::Adjacency).unwrap();
        let f1 = apply_transform(Transform::F1, &p, &a).unwrap();
        for (x, want) in f1.iter().zip([0.0, 3.0, 3.0]) {
            assert_abs_diff_eq!(*x, want, epsilon = 1e-12);
        }

        let p3 = path(3).unwrap();
        let p = transform_params(&p3.degree_summary()).unwrap();
        let l = spectrum(&p3, RepresentationKind::Laplacian).unwrap();
        let f2 = apply_transform(Transform::F2, &p, &l).unwrap();
        for (x, want) in f2.iter().zip([0.0, 2.0 / 3.0, 2.0]) {
            assert_abs_diff_eq!(*x, want, epsilon = 1e-12);
        }
        let d = pair_differences(Pair::LLrw, &p3).unwrap();
        for (x, want) in d.deltas.iter().zip([0.0, 1.0 / 3.0, 0.0]) {
            assert_abs_diff_eq!(x.abs(), want, epsilon = 1e-12);
        }

        assert!(matches!(
            apply_transform(Transform::F2, &p, &a),
            Err(Error::KindMismatch { .. })
        ));
    }

    #[test]
    fn f3_on_star_matches_lrw_in_the_middle() {
        let g = star(18).unwrap();
        let ps = pair_spectra(Pair::ALrw, &g).unwrap();
        assert_abs_diff_eq!(ps.params.c2, 1.0 / 9.0, epsilon = 1e-15);
        for i in 1..17 {
            assert_abs_diff_eq!(ps.transformed[i], 1.0, epsilon = 1e-10);
            assert_abs_diff_eq!(ps.target.values[i], 1.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn bound_sets() {
        let b = eigenvalue_bound_set(&ds(1.0, 17.0));
        assert_eq!(b.e_al, 8.0);
        assert_abs_diff_eq!(b.e_llrw.unwrap(), 16.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b.e_alrw.unwrap(), 8.0 / 3.0, epsilon = 1e-15);
        assert_eq!(b.e_prime_alrw, Some(2.0));

        let b = eigenvalue_bound_set(&ds(2.0, 4.0));
        assert_eq!(b.e_al, 1.0);
        assert_abs_diff_eq!(b.e_llrw.unwrap(), 2.0 / 3.0, epsilon = 1e-15);
        assert_eq!(b.e_alrw, Some(1.0));
        assert_eq!(b.e_prime_alrw, Some(1.0));

        let b = eigenvalue_bound_set(&ds(3.0, 3.0));
        assert_eq!(
            (b.e_al, b.e_llrw, b.e_alrw, b.e_prime_alrw),
            (0.0, Some(0.0), Some(0.0), Some(0.0))
        );

        let b = eigenvalue_bound_set(&ds(0.0, 4.0));
        assert_eq!(b.e_al, 2.0);
        assert_eq!((b.e_llrw, b.e_alrw, b.e_prime_alrw), (None, None, None));
    }

    #[test]
    fn gap_bound_sets() {
        let g = gap_bound_set(&ds(1.0, 17.0)).unwrap();
        assert_abs_diff_eq!(g.g_al, 16.0 / 34.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g.g_llrw.unwrap(), 32.0 / 17.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g.g_alrw.unwrap(), 40.0 / 17.0, epsilon = 1e-15);
        assert_abs_diff_eq!(g.g_prime_llrw.unwrap(), 16.0 / 9.0, epsilon = 1e-15);
        assert_eq!(g.g_prime_alrw, Some(2.0));

        let g = gap_bound_set(&ds(4.0, 4.0)).unwrap();
        assert_eq!(g.g_al, 0.0);
        assert_eq!(g.g_llrw, Some(0.0));
        assert_eq!(g.g_alrw, Some(0.0));
        assert!(gap_bound_set(&ds(0.0, 0.0)).is_err());
    }

    #[test]
    fn regions() {
        let r = classify_region(&ds(1.0, 2.0));
        assert_eq!(r.label, RegionLabel::Bold);
        assert_eq!(r.ordering, "e_AL < e_LLrw < e_ALrw");
        assert_eq!(
            classify_region(&ds(1.0, 3.0)).label,
            RegionLabel::Underlined
        );
        assert_eq!(classify_region(&ds(2.0, 3.0)).label, RegionLabel::Teletype);
        assert_eq!(classify_region(&ds(2.0, 4.0)).label, RegionLabel::Italic);
        assert_eq!(classify_region(&ds(1.0, 17.0)).label, RegionLabel::Normal);
        assert_eq!(classify_region(&ds(2.0, 2.0)).label, RegionLabel::Regular);
        assert_eq!(classify_region(&ds(0.0, 0.0)).label, RegionLabel::Regular);

        let b = eigenvalue_bound_set(&ds(1.0, 3.0));
        assert_eq!(
            observed_ordering(&b, 1e-12).unwrap(),
            "e_AL = e_LLrw < e_ALrw"
        );
    }

    #[test]
    fn star_differences() {
        let d = pair_differences(Pair::AL, &star(18).unwrap()).unwrap();
        assert_eq!(d.bound, 8.0);
        assert!(d.verified);
        let ends = 9.0 - 17f64.sqrt();
        assert_abs_diff_eq!(d.deltas[0].abs(), ends, epsilon = 1e-10);
        assert_abs_diff_eq!(d.deltas[17].abs(), ends, epsilon = 1e-10);
        assert!(d.deltas[1..17]
            .iter()
            .all(|x| (x.abs() - 8.0).abs() < 1e-10));
    }

    #[test]
    fn bipartite_b_differences() {
        let d = pair_differences(Pair::AL, &bipartite_b()).unwrap();
        assert_abs_diff_eq!(d.deltas[0], 7.49, epsilon = 0.01);
        assert_abs_diff_eq!(d.deltas[1], -7.06, epsilon = 0.01);
        // close to, but not within 1e-6 of, a maximal crossover
        assert!(detect_maximal_crossover(&d.deltas, d.bound, 1e-6)
            .unwrap()
            .indices
            .is_empty());
        let loose = detect_maximal_crossover(&d.deltas, d.bound, 0.95).unwrap();
        assert_eq!(loose.indices, vec![1]);
    }

    #[test]
    fn p3_differences() {
        let d = pair_differences(Pair::AL, &path(3).unwrap()).unwrap();
        let end = 1.5 - 2f64.sqrt();
        for (x, want) in d.deltas.iter().zip([end, 0.5, end]) {
            assert_abs_diff_eq!(x.abs(), want, epsilon = 1e-12);
        }
        assert_eq!(d.bound, 0.5);
        assert!(d.verified);
    }

    #[test]
    fn crossovers() {
        let d = pair_differences(Pair::AL, &graph_c(18).unwrap()).unwrap();
        let r = detect_maximal_crossover(&d.deltas, d.bound, DEFAULT_CROSSOVER_TOL).unwrap();
        assert_eq!(r.indices, vec![1, 19]);

        let k3 = pair_differences(Pair::AL, &complete(3).unwrap()).unwrap();
        assert!(detect_maximal_crossover(&k3.deltas, k3.bound, 1e-6)
            .unwrap()
            .indices
            .is_empty());
        assert!(detect_maximal_crossover(&[1.0, -1.0], 1.0, 0.0).is_err());
        assert_eq!(
            detect_maximal_crossover(&[1.0, -1.0, 1.0], 1.0, 1e-6)
                .unwrap()
                .indices,
            vec![1, 2]
        );
    }

    #[test]
    fn graph_c_gap_differences() {
        let gd = gap_differences(Pair::AL, &graph_c(18).unwrap()).unwrap();
        assert_abs_diff_eq!(gd.diffs[0], 16.0 / 34.0, epsilon = 1e-10);
        assert_abs_diff_eq!(gd.diffs[0], gd.bound, epsilon = 1e-10);
        assert_abs_diff_eq!(gd.diffs[9], 0.0, epsilon = 1e-10);
        assert!(gd.verified);
        assert!(gd.primed.is_none());
        let k3 = gap_differences(Pair::ALrw, &complete(3).unwrap()).unwrap();
        assert!(k3.diffs.iter().all(|x| x.abs() < 1e-12));
        assert!(k3.primed.unwrap().diffs.iter().all(|x| x.abs() < 1e-12));
    }

    #[test]
    fn mapped_supports() {
        assert_eq!(
            mapped_support(Transform::F1, &ds(1.0, 17.0)).unwrap(),
            Interval::new(-8.0, 26.0)
        );
        assert_eq!(
            mapped_support(Transform::F2, &ds(3.0, 3.0)).unwrap(),
            Interval::new(0.0, 2.0)
        );
        let f3 = mapped_support(Transform::F3, &ds(1.0, 17.0)).unwrap();
        assert_abs_diff_eq!(f3.lo, -8.0 / 9.0, epsilon = 1e-15);
        assert_abs_diff_eq!(f3.hi, 52.0 / 18.0, epsilon = 1e-15);
    }

    #[test]
    fn mapped_support_is_image_of_source_support() {
        for (lo, hi) in [(1.0, 17.0), (2.0, 5.0), (0.0, 3.0), (0.5, 1.25)] {
            let d = ds(lo, hi);
            let p = transform_params(&d).unwrap();
            for t in [Transform::F1, Transform::F2, Transform::F3] {
                let src = spectral_support(t.source_kind(), hi);
                let (a, b) = (t.eval(&p, src.lo), t.eval(&p, src.hi));
                let got = mapped_support(t, &d).unwrap();
                assert_abs_diff_eq!(got.lo, a.min(b), epsilon = 1e-12);
                assert_abs_diff_eq!(got.hi, a.max(b), epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn weyl() {
        let r = weyl_check(&star(18).unwrap()).unwrap();
        assert!(r.holds);
        let touching = r
            .entries
            .iter()
            .filter(|e| e.touches_lower || e.touches_upper)
            .count();
        assert_eq!(touching, 16);
        let k3 = weyl_check(&complete(3).unwrap()).unwrap();
        assert!(k3.holds);
        assert!(k3.entries.iter().all(|e| e.difference.abs() < 1e-12));
    }
}
