//! Undirected simple weighted graphs stored as a dense symmetric weight matrix.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance used when comparing (floating-point) degrees.
pub const DEGREE_TOL: f64 = 1e-12;

/// An undirected simple graph with edge weights in `[0, 1]`.
///
/// The weight matrix is kept dense and row-major; it is exactly symmetric
/// with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    n: usize,
    weights: Vec<f64>,
}

impl Graph {
    /// Graph on `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            weights: vec![0.0; n * n],
        }
    }

    /// Builds a graph from a row-major `n x n` weight matrix, checking all
    /// the representation invariants.
    pub fn from_weights(n: usize, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: weights.len(),
                right: n * n,
            });
        }
        for i in 0..n {
            if weights[i * n + i] != 0.0 {
                return Err(Error::InvalidGraph(format!(
                    "non-zero diagonal at vertex {i}"
                )));
            }
            for j in 0..n {
                let w = weights[i * n + j];
                if !(0.0..=1.0).contains(&w) {
                    return Err(Error::InvalidGraph(format!(
                        "weight {w} at ({i}, {j}) outside [0, 1]"
                    )));
                }
                if w != weights[j * n + i] {
                    return Err(Error::InvalidGraph(format!(
                        "asymmetric weight at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Graph { n, weights })
    }

    /// Builds a graph from unit-weight edges given as 0-based vertex pairs.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on vertex {u}")));
            }
            g.set_weight(u, v, 1.0);
        }
        Ok(g)
    }

    pub(crate) fn set_weight(&mut self, u: usize, v: usize, w: f64) {
        self.weights[u * self.n + v] = w;
        self.weights[v * self.n + u] = w;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn weight(&self, i: usize, j: usize) -> f64 {
        self.weights[i * self.n + j]
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.weights[i * self.n..(i + 1) * self.n]
    }

    /// Edges `(u, v, w)` with `u < v` and non-zero weight, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n).filter_map(move |v| {
                let w = self.weight(u, v);
                (w != 0.0).then_some((u, v, w))
            })
        })
    }

    pub fn edge_count(&self) -> usize {
        self.edges().count()
    }

    /// True when every non-zero weight equals one.
    pub fn is_unweighted(&self) -> bool {
        self.weights.iter().all(|&w| w == 0.0 || w == 1.0)
    }

    pub fn degrees(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn degree_summary(&self) -> DegreeSummary {
        DegreeSummary::from_degrees(self.degrees())
    }

    /// Relabels vertices so that old vertex `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n;
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                left: perm.len(),
                right: n,
            });
        }
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let mut out = Graph::empty(n);
        for (u, v, w) in self.edges() {
            out.set_weight(perm[u], perm[v], w);
        }
        Ok(out)
    }

    /// Subgraph induced by the vertices with at least one incident edge.
    /// Returns the reduced graph and the original id of each kept vertex.
    pub fn without_isolated(&self) -> (Graph, Vec<usize>) {
        let keep: Vec<usize> = self
            .degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0.0)
            .map(|(i, _)| i)
            .collect();
        let mut out = Graph::empty(keep.len());
        for (a, &u) in keep.iter().enumerate() {
            for (b, &v) in keep.iter().enumerate().skip(a + 1) {
                let w = self.weight(u, v);
                if w != 0.0 {
                    out.set_weight(a, b, w);
                }
            }
        }
        (out, keep)
    }

    /// Returns `Some(d)` when all degrees agree within [`DEGREE_TOL`].
    pub fn is_d_regular(&self) -> Option<f64> {
        if self.n == 0 {
            return None;
        }
        let ds = self.degree_summary();
        (ds.d_max - ds.d_min <= DEGREE_TOL).then_some(ds.d_max)
    }
}

/// Degree sequence together with its extremes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub degrees: Vec<f64>,
    pub d_min: f64,
    pub d_max: f64,
}

impl DegreeSummary {
    pub fn from_degrees(degrees: Vec<f64>) -> Self {
        let (d_min, d_max) = if degrees.is_empty() {
            (0.0, 0.0)
        } else {
            degrees
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| {
                    (lo.min(d), hi.max(d))
                })
        };
        DegreeSummary {
            degrees,
            d_min,
            d_max,
        }
    }

    /// Summary carrying only the extremes, for closed-form bound evaluation.
    pub fn from_extremes(d_min: f64, d_max: f64) -> Self {
        DegreeSummary {
            degrees: Vec::new(),
            d_min,
            d_max,
        }
    }

    pub fn is_regular(&self) -> bool {
        (self.d_max - self.d_min).abs() <= DEGREE_TOL
    }

    /// The class `C_{j,k}` the graph belongs to. `None` when an extreme is
    /// not an integer (weighted graphs).
    pub fn class_tag(&self) -> Option<ClassTag> {
        let as_int = |d: f64| {
            let r = d.round();
            ((d - r).abs() <= DEGREE_TOL && r >= 0.0).then_some(r as u64)
        };
        Some(ClassTag {
            j: as_int(self.d_min)?,
            k: as_int(self.d_max)?,
        })
    }
}

/// Degree-extreme class `C_{j,k}`: `d_min = j`, `d_max = k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassTag {
    pub j: u64,
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentLabeling {
    pub labels: Vec<usize>,
    pub component_count: usize,
}

impl ComponentLabeling {
    /// Vertex ids grouped per component, in label order.
    pub fn members(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.component_count];
        for (v, &c) in self.labels.iter().enumerate() {
            out[c].push(v);
        }
        out
    }
}

/// Breadth-first labelling over non-zero weights. Labels are assigned in
/// order of each component's lowest vertex id.
pub fn connected_components(g: &Graph) -> ComponentLabeling {
    let n = g.n();
    let mut labels = vec![usize::MAX; n];
    let mut count = 0;
    let mut queue = VecDeque::new();
    for start in 0..n {
        if labels[start] != usize::MAX {
            continue;
        }
        labels[start] = count;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            for (v, &w) in g.row(u).iter().enumerate() {
                if w != 0.0 && labels[v] == usize::MAX {
                    labels[v] = count;
                    queue.push_back(v);
                }
            }
        }
        count += 1;
    }
    ComponentLabeling {
        labels,
        component_count: count,
    }
}

/// Block-diagonal union: vertices of `a` first, then those of `b`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let n = a.n() + b.n();
    let mut out = Graph::empty(n);
    for (u, v, w) in a.edges() {
        out.set_weight(u, v, w);
    }
    let off = a.n();
    for (u, v, w) in b.edges() {
        out.set_weight(u + off, v + off, w);
    }
    out
}

/// Two-colouring by breadth-first search; `None` if an odd cycle exists.
pub fn two_coloring(g: &Graph) -> Option<Vec<u8>> {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s] != u8::MAX {
            continue;
        }
        color[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for (v, &w) in g.row(u).iter().enumerate() {
                if w == 0.0 {
                    continue;
                }
                if color[v] == u8::MAX {
                    color[v] = 1 - color[u];
                    queue.push_back(v);
                } else if color[v] == color[u] {
                    return None;
                }
            }
        }
    }
    Some(color)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, graph_c, path, star};

    #[test]
    fn from_weights_rejects_asymmetry_and_loops() {
        assert!(Graph::from_weights(2, vec![0.0, 1.0, 0.5, 0.0]).is_err());
        assert!(Graph::from_weights(2, vec![1.0, 0.0, 0.0, 0.0]).is_err());
        assert!(Graph::from_weights(2, vec![0.0, 1.5, 1.5, 0.0]).is_err());
        assert!(Graph::from_weights(2, vec![0.0, 0.5, 0.5, 0.0]).is_ok());
    }

    #[test]
    fn degrees_of_known_graphs() {
        let k3 = complete(3).unwrap();
        let ds = k3.degree_summary();
        assert_eq!(ds.degrees, vec![2.0; 3]);
        assert_eq!((ds.d_min, ds.d_max), (2.0, 2.0));

        let s = star(18).unwrap().degree_summary();
        assert_eq!(s.degrees.iter().filter(|&&d| d == 1.0).count(), 17);
        assert_eq!(s.d_max, 17.0);
    }

    #[test]
    fn regularity() {
        assert_eq!(complete(3).unwrap().is_d_regular(), Some(2.0));
        assert_eq!(path(3).unwrap().is_d_regular(), None);
        assert_eq!(graph_c(2).unwrap().is_d_regular(), Some(1.0));
    }

    #[test]
    fn components() {
        assert_eq!(
            connected_components(&graph_c(18).unwrap()).component_count,
            10
        );
        assert_eq!(
            connected_components(&complete(18).unwrap()).component_count,
            1
        );
        assert_eq!(connected_components(&Graph::empty(5)).component_count, 5);
    }

    #[test]
    fn union_properties() {
        let k2 = complete(2).unwrap();
        let u = disjoint_union(&k2, &k2);
        assert_eq!(u.n(), 4);
        assert_eq!(connected_components(&u).component_count, 2);
        let p = path(3).unwrap();
        assert_eq!(disjoint_union(&p, &Graph::empty(0)), p);
    }

    #[test]
    fn class_tags() {
        let tag = graph_c(7).unwrap().degree_summary().class_tag().unwrap();
        assert_eq!(tag, ClassTag { j: 1, k: 6 });
        let weighted = DegreeSummary::from_extremes(0.5, 2.0);
        assert_eq!(weighted.class_tag(), None);
    }

    #[test]
    fn permutation_and_isolated_removal() {
        let p = path(3).unwrap();
        let q = p.permuted(&[2, 0, 1]).unwrap();
        assert_eq!(q.weight(2, 0), 1.0);
        assert_eq!(q.weight(0, 1), 1.0);
        assert!(p.permuted(&[0, 0, 1]).is_err());

        let g = disjoint_union(&p, &Graph::empty(2));
        let (h, keep) = g.without_isolated();
        assert_eq!(h, p);
        assert_eq!(keep, vec![0, 1, 2]);
    }
}
