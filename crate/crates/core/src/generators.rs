//! Model graphs used throughout the comparisons.

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, Graph};

/// Star on `n` vertices; vertex 0 is the hub.
pub fn star(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "star needs n >= 2, got {n}"
        )));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Complete graph `K_k`.
pub fn complete(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::InvalidArgument("complete graph needs k >= 1".into()));
    }
    let mut g = Graph::empty(k);
    for u in 0..k {
        for v in (u + 1)..k {
            g.set_weight(u, v, 1.0);
        }
    }
    Ok(g)
}

/// Path `P_n`.
pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(Error::InvalidArgument("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// Graph `C(k)`: the complete graph `K_k` (vertices `0..k`) followed by nine
/// disjoint copies of `K_2` (vertices `k..k+18`).
pub fn graph_c(k: usize) -> Result<Graph> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!(
            "graph C(k) needs k >= 2, got {k}"
        )));
    }
    let k2 = complete(2)?;
    let mut g = complete(k)?;
    for _ in 0..9 {
        g = disjoint_union(&g, &k2);
    }
    Ok(g)
}

/// Bipartite graph B on 34 vertices with degree sequence
/// `{1, 16^16, 17^17}`.
///
/// Parts are `X = 0..17` and `Y = 17..34`. Vertex 0 is joined only to
/// vertex 17; every other X vertex is joined to all of Y. The degree
/// sequence does not determine the wiring; this is one valid choice.
pub fn bipartite_b() -> Graph {
    let mut g = Graph::empty(34);
    g.set_weight(0, 17, 1.0);
    for x in 1..17 {
        for y in 17..34 {
            g.set_weight(x, y, 1.0);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{connected_components, two_coloring};

    fn sorted_degrees(g: &Graph) -> Vec<f64> {
        let mut d = g.degrees();
        d.sort_by(f64::total_cmp);
        d
    }

    #[test]
    fn star_shapes() {
        assert_eq!(star(2).unwrap(), complete(2).unwrap());
        // P3 up to relabelling: hub in the middle
        let s3 = star(3).unwrap();
        assert_eq!(s3.permuted(&[1, 0, 2]).unwrap(), path(3).unwrap());
        assert!(star(1).is_err());
        let d = sorted_degrees(&star(18).unwrap());
        assert_eq!(&d[..17], &[1.0; 17]);
        assert_eq!(d[17], 17.0);
    }

    #[test]
    fn complete_is_regular() {
        let k = complete(18).unwrap();
        assert_eq!(k.is_d_regular(), Some(17.0));
        assert_eq!(complete(2).unwrap().edge_count(), 1);
        assert!(complete(0).is_err());
    }

    #[test]
    fn graph_c_layout() {
        let g = graph_c(18).unwrap();
        assert_eq!(g.n(), 36);
        let ds = g.degree_summary();
        assert_eq!((ds.d_min, ds.d_max), (1.0, 17.0));
        assert_eq!(connected_components(&g).component_count, 10);
        // complete component occupies the first k ids
        assert!((1..18).all(|v| g.weight(0, v) == 1.0));
        assert_eq!(g.weight(18, 19), 1.0);

        let g3 = graph_c(3).unwrap();
        assert_eq!(g3.n(), 21);
        assert_eq!(g3.degree_summary().d_max, 2.0);
        assert!(graph_c(1).is_err());
    }

    #[test]
    fn bipartite_b_degrees() {
        let g = bipartite_b();
        assert_eq!(g.n(), 34);
        let d = sorted_degrees(&g);
        assert_eq!(d[0], 1.0);
        assert!(d[1..17].iter().all(|&x| x == 16.0));
        assert!(d[17..].iter().all(|&x| x == 17.0));
        assert!(two_coloring(&g).is_some());
        assert!(two_coloring(&complete(3).unwrap()).is_none());
    }
}
