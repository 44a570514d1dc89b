use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },

    #[error("line {line}: vertex id {id} out of range for {n} vertices (base {base})")]
    VertexOutOfRange {
        line: usize,
        id: i64,
        n: usize,
        base: usize,
    },

    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },

    #[error("missing header: {0}")]
    MissingHeader(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error(
        "the normalised Laplacian is undefined for graphs with an isolated vertex (d_min = 0)"
    )]
    IsolatedVertex,

    #[error("degenerate degree extremes: d_max + d_min must be positive")]
    DegenerateDegrees,

    #[error("{expected} spectrum required, got {actual}")]
    KindMismatch {
        expected: &'static str,
        actual: &'static str,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("Jacobi eigensolver did not converge for {matrix} after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence {
        matrix: String,
        sweeps: usize,
        residual: f64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
