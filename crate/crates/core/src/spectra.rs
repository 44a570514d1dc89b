//! Representation matrices `A`, `L = D - A` and `L_rw = D^{-1} L`, their
//! ordered spectra, spectral supports and normalised eigengaps.
//!
//! `L_rw` is not symmetric. Its eigenvalues are obtained from the similar
//! matrix `L_sym = D^{-1/2} L D^{-1/2}`, and its eigenvectors are recovered
//! as `D^{-1/2} u` for each eigenvector `u` of `L_sym`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{eig_sym_named, EigenPairs, SymMatrix};

/// Absolute threshold below which a Laplacian eigenvalue counts as zero.
pub const ZERO_EIGENVALUE_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RepresentationKind {
    #[serde(rename = "A")]
    Adjacency,
    #[serde(rename = "L")]
    Laplacian,
    #[serde(rename = "Lrw")]
    NormalizedLaplacian,
}

impl RepresentationKind {
    pub const ALL: [RepresentationKind; 3] = [
        RepresentationKind::Adjacency,
        RepresentationKind::Laplacian,
        RepresentationKind::NormalizedLaplacian,
    ];

    /// Short tag: `A`, `L` or `Lrw`.
    pub fn tag(self) -> &'static str {
        match self {
            RepresentationKind::Adjacency => "A",
            RepresentationKind::Laplacian => "L",
            RepresentationKind::NormalizedLaplacian => "Lrw",
        }
    }

    pub fn from_tag(s: &str) -> Option<Self> {
        match s {
            "A" | "a" | "adjacency" => Some(RepresentationKind::Adjacency),
            "L" | "l" | "laplacian" => Some(RepresentationKind::Laplacian),
            "Lrw" | "lrw" | "LRW" | "normalized" | "normalised" => {
                Some(RepresentationKind::NormalizedLaplacian)
            }
            _ => None,
        }
    }

    /// Adjacency spectra are listed largest first, Laplacian spectra
    /// smallest first.
    pub fn is_descending(self) -> bool {
        self == RepresentationKind::Adjacency
    }
}

impl fmt::Display for RepresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Closed interval `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        Interval { lo, hi }
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }
}

/// A representation matrix. For [`RepresentationKind::NormalizedLaplacian`]
/// the stored matrix is `L_sym`, flagged by `is_lsym_surrogate`.
#[derive(Debug, Clone, PartialEq)]
pub struct RepresentationMatrix {
    pub kind: RepresentationKind,
    pub matrix: SymMatrix,
    pub is_lsym_surrogate: bool,
}

pub fn build_matrix(g: &Graph, kind: RepresentationKind) -> Result<RepresentationMatrix> {
    let n = g.n();
    let mut m = SymMatrix::zeros(n);
    match kind {
        RepresentationKind::Adjacency => {
            for (u, v, w) in g.edges() {
                m.set(u, v, w);
            }
        }
        RepresentationKind::Laplacian => {
            for (i, d) in g.degrees().into_iter().enumerate() {
                m.set(i, i, d);
            }
            for (u, v, w) in g.edges() {
                m.set(u, v, -w);
            }
        }
        RepresentationKind::NormalizedLaplacian => {
            let degrees = g.degrees();
            if degrees.iter().any(|&d| d <= 0.0) {
                return Err(Error::IsolatedVertex);
            }
            let inv_sqrt: Vec<f64> = degrees.iter().map(|d| 1.0 / d.sqrt()).collect();
            for i in 0..n {
                m.set(i, i, 1.0);
            }
            for (u, v, w) in g.edges() {
                m.set(u, v, -w * inv_sqrt[u] * inv_sqrt[v]);
            }
        }
    }
    Ok(RepresentationMatrix {
        kind,
        matrix: m,
        is_lsym_surrogate: kind == RepresentationKind::NormalizedLaplacian,
    })
}

/// Gershgorin support of a representation spectrum.
pub fn spectral_support(kind: RepresentationKind, d_max: f64) -> Interval {
    match kind {
        RepresentationKind::Adjacency => Interval::new(-d_max, d_max),
        RepresentationKind::Laplacian => Interval::new(0.0, 2.0 * d_max),
        RepresentationKind::NormalizedLaplacian => Interval::new(0.0, 2.0),
    }
}

/// Ordered eigenvalues of one representation matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub kind: RepresentationKind,
    pub values: Vec<f64>,
    pub support: Interval,
    pub support_length: f64,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Eigenvalues and eigenvectors of a representation matrix, both in the
/// kind's convention order. For the normalised Laplacian the vectors are
/// true `L_rw` eigenvectors (not unit length).
#[derive(Debug, Clone, PartialEq)]
pub struct Eigensystem {
    pub spectrum: Spectrum,
    pub vectors: Vec<Vec<f64>>,
}

fn solve(g: &Graph, kind: RepresentationKind) -> Result<(EigenPairs, Vec<f64>)> {
    let m = build_matrix(g, kind)?;
    let pairs = eig_sym_named(&m.matrix, kind.tag())?;
    Ok((pairs, g.degrees()))
}

fn make_spectrum(kind: RepresentationKind, mut values: Vec<f64>, d_max: f64) -> Spectrum {
    if kind.is_descending() {
        values.reverse();
    }
    let support = spectral_support(kind, d_max);
    Spectrum {
        kind,
        values,
        support,
        support_length: support.length(),
    }
}

pub fn spectrum(g: &Graph, kind: RepresentationKind) -> Result<Spectrum> {
    let (pairs, degrees) = solve(g, kind)?;
    let d_max = degrees.iter().copied().fold(0.0, f64::max);
    Ok(make_spectrum(kind, pairs.values, d_max))
}

pub fn eigensystem(g: &Graph, kind: RepresentationKind) -> Result<Eigensystem> {
    let (pairs, degrees) = solve(g, kind)?;
    let d_max = degrees.iter().copied().fold(0.0, f64::max);
    let mut vectors = pairs.vectors;
    if kind == RepresentationKind::NormalizedLaplacian {
        for v in &mut vectors {
            for (x, d) in v.iter_mut().zip(&degrees) {
                *x /= d.sqrt();
            }
        }
    }
    if kind.is_descending() {
        vectors.reverse();
    }
    Ok(Eigensystem {
        spectrum: make_spectrum(kind, pairs.values, d_max),
        vectors,
    })
}

/// Consecutive eigengaps divided by the support length, oriented so that
/// every entry is non-negative: `(mu_i - mu_{i+1}) / l` for the adjacency
/// matrix and `(x_{i+1} - x_i) / l` for the Laplacians. A zero-length
/// support (edgeless graph) yields zero gaps.
pub fn normalized_eigengaps(s: &Spectrum) -> Vec<f64> {
    let l = s.support_length;
    s.values
        .windows(2)
        .map(|w| {
            let gap = if s.kind.is_descending() {
                w[0] - w[1]
            } else {
                w[1] - w[0]
            };
            if l > 0.0 {
                gap / l
            } else {
                0.0
            }
        })
        .collect()
}
