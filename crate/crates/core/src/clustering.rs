//! Spectral clustering: eigenvector embedding followed by k-means.

use pathfinding::kuhn_munkres::kuhn_munkres;
use pathfinding::matrix::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{eigensystem, RepresentationKind};

pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_RESTARTS: usize = 50;
pub const MAX_LLOYD_ITERATIONS: usize = 300;

/// Row `i` holds the coordinates of vertex `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Embedding {
    pub kind: Option<RepresentationKind>,
    pub points: Vec<Vec<f64>>,
}

impl Embedding {
    pub fn from_points(points: Vec<Vec<f64>>) -> Self {
        Embedding { kind: None, points }
    }

    pub fn dim(&self) -> usize {
        self.points.first().map_or(0, Vec::len)
    }
}

/// Embeds each vertex by the "first k" eigenvectors of the chosen matrix:
/// the k largest eigenvalues for `A`, the k smallest for the Laplacians.
/// `L_rw` eigenvectors are `D^{-1/2}` times those of `L_sym`; rows are not
/// normalised.
pub fn spectral_embed(g: &Graph, kind: RepresentationKind, k: usize) -> Result<Embedding> {
    let n = g.n();
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "k must be in 1..={n}, got {k}"
        )));
    }
    let es = eigensystem(g, kind)?;
    let points = (0..n)
        .map(|i| es.vectors[..k].iter().map(|v| v[i]).collect())
        .collect();
    Ok(Embedding {
        kind: Some(kind),
        points,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusteringResult {
    pub labels: Vec<usize>,
    /// Sum of squared distances to the assigned centroids.
    pub inertia: f64,
    pub kind: Option<RepresentationKind>,
    pub k: usize,
    /// Cluster ids that ended up with no members.
    pub empty_clusters: Vec<usize>,
    /// Inertia after each assignment step of the winning restart.
    #[serde(skip)]
    pub inertia_trace: Vec<f64>,
}

impl ClusteringResult {
    /// Wraps a given labelling (e.g. ground truth) for comparison.
    pub fn from_labels(labels: Vec<usize>) -> Self {
        let k = labels.iter().max().map_or(0, |m| m + 1);
        let empty_clusters = (0..k).filter(|c| !labels.contains(c)).collect();
        ClusteringResult {
            labels,
            inertia: 0.0,
            kind: None,
            k,
            empty_clusters,
            inertia_trace: Vec::new(),
        }
    }

    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &l in &self.labels {
            sizes[l] += 1;
        }
        sizes
    }
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

/// k-means++ seeding.
fn seed_centroids(points: &[Vec<f64>], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let n = points.len();
    let mut chosen = vec![rng.gen_range(0..n)];
    let mut d2: Vec<f64> = points
        .iter()
        .map(|p| sq_dist(p, &points[chosen[0]]))
        .collect();
    while chosen.len() < k {
        let total: f64 = d2.iter().sum();
        let next = if total > 0.0 {
            let target = rng.gen::<f64>() * total;
            let mut acc = 0.0;
            let mut pick = None;
            for (i, &w) in d2.iter().enumerate() {
                acc += w;
                if w > 0.0 && acc > target {
                    pick = Some(i);
                    break;
                }
            }
            // rounding can leave target just above the final sum
            pick.unwrap_or_else(|| d2.iter().rposition(|&w| w > 0.0).unwrap())
        } else {
            (0..n).find(|i| !chosen.contains(i)).unwrap_or(0)
        };
        chosen.push(next);
        for (i, p) in points.iter().enumerate() {
            d2[i] = d2[i].min(sq_dist(p, &points[next]));
        }
    }
    chosen.into_iter().map(|i| points[i].clone()).collect()
}

struct LloydRun {
    labels: Vec<usize>,
    inertia: f64,
    trace: Vec<f64>,
}

fn lloyd(points: &[Vec<f64>], mut centroids: Vec<Vec<f64>>) -> LloydRun {
    let n = points.len();
    let k = centroids.len();
    let dim = points[0].len();
    let mut labels = vec![usize::MAX; n];
    let mut trace = Vec::new();
    for _ in 0..MAX_LLOYD_ITERATIONS {
        let mut changed = false;
        let mut inertia = 0.0;
        for (i, p) in points.iter().enumerate() {
            let (best, d) = centroids
                .iter()
                .enumerate()
                .map(|(c, cen)| (c, sq_dist(p, cen)))
                .fold(
                    (0, f64::INFINITY),
                    |acc, x| if x.1 < acc.1 { x } else { acc },
                );
            inertia += d;
            if labels[i] != best {
                labels[i] = best;
                changed = true;
            }
        }
        trace.push(inertia);
        if !changed {
            break;
        }
        let mut sums = vec![vec![0.0; dim]; k];
        let mut counts = vec![0usize; k];
        for (p, &l) in points.iter().zip(&labels) {
            counts[l] += 1;
            for (s, x) in sums[l].iter_mut().zip(p) {
                *s += x;
            }
        }
        for c in 0..k {
            // an empty cluster keeps its previous centroid
            if counts[c] > 0 {
                centroids[c] = sums[c].iter().map(|s| s / counts[c] as f64).collect();
            }
        }
    }
    let inertia = points
        .iter()
        .zip(&labels)
        .map(|(p, &l)| sq_dist(p, &centroids[l]))
        .sum();
    LloydRun {
        labels,
        inertia,
        trace,
    }
}

/// Renumbers clusters by their lowest member vertex; empty ids go last.
fn canonical_labels(labels: &[usize], k: usize) -> (Vec<usize>, Vec<usize>) {
    let mut map = vec![usize::MAX; k];
    let mut next = 0;
    for &l in labels {
        if map[l] == usize::MAX {
            map[l] = next;
            next += 1;
        }
    }
    let empty = (next..k).collect();
    (labels.iter().map(|&l| map[l]).collect(), empty)
}

/// Lloyd's algorithm from k-means++ seeds, best of `restarts`.
///
/// Restart `r` draws from a ChaCha8 stream `r` seeded with `seed`, so each
/// restart is reproducible on its own. The winner is the lowest inertia,
/// then the lowest restart index.
pub fn kmeans(
    points: &Embedding,
    k: usize,
    restarts: usize,
    seed: u64,
) -> Result<ClusteringResult> {
    let n = points.points.len();
    if k < 1 || k > n {
        return Err(Error::InvalidArgument(format!(
            "k must be in 1..={n}, got {k}"
        )));
    }
    if restarts < 1 {
        return Err(Error::InvalidArgument("restarts must be at least 1".into()));
    }
    let dim = points.dim();
    if points.points.iter().any(|p| p.len() != dim) {
        return Err(Error::InvalidArgument(
            "embedding rows differ in length".into(),
        ));
    }

    let mut best: Option<LloydRun> = None;
    for r in 0..restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(r as u64);
        let run = lloyd(&points.points, seed_centroids(&points.points, k, &mut rng));
        if best.as_ref().is_none_or(|b| run.inertia < b.inertia) {
            best = Some(run);
        }
    }
    let best = best.expect("at least one restart");
    let (labels, empty_clusters) = canonical_labels(&best.labels, k);
    Ok(ClusteringResult {
        labels,
        inertia: best.inertia,
        kind: points.kind,
        k,
        empty_clusters,
        inertia_trace: best.trace,
    })
}

pub fn cluster(
    g: &Graph,
    kind: RepresentationKind,
    k: usize,
    restarts: usize,
    seed: u64,
) -> Result<ClusteringResult> {
    kmeans(&spectral_embed(g, kind, k)?, k, restarts, seed)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClusterComparison {
    pub misplaced: usize,
    /// 0-based vertex ids whose labels disagree under the best matching.
    pub misplaced_ids: Vec<usize>,
}

/// Minimal number of disagreeing vertices over all one-to-one matchings of
/// the two label sets (maximum-weight assignment on the confusion matrix).
pub fn compare_clusterings(
    a: &ClusteringResult,
    b: &ClusteringResult,
) -> Result<ClusterComparison> {
    compare_labelings(&a.labels, &b.labels)
}

pub fn compare_labelings(a: &[usize], b: &[usize]) -> Result<ClusterComparison> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Ok(ClusterComparison {
            misplaced: 0,
            misplaced_ids: Vec::new(),
        });
    }
    let size = a.iter().chain(b).max().unwrap() + 1;
    let mut confusion = vec![vec![0i64; size]; size];
    for (&x, &y) in a.iter().zip(b) {
        confusion[x][y] += 1;
    }
    let weights = Matrix::from_rows(confusion).expect("square confusion matrix");
    let (_, assignment) = kuhn_munkres(&weights);
    let misplaced_ids: Vec<usize> = a
        .iter()
        .zip(b)
        .enumerate()
        .filter(|(_, (&x, &y))| assignment[x] != y)
        .map(|(i, _)| i)
        .collect();
    Ok(ClusterComparison {
        misplaced: misplaced_ids.len(),
        misplaced_ids,
    })
}
