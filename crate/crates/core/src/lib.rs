//! Spectra of the adjacency matrix, the graph Laplacian and the random-walk
//! normalised Laplacian of a graph, compared through affine maps whose
//! parameters depend only on the degree extremes.
//!
//! * [`graph`], [`generators`], [`io`]: graphs, model graphs, file formats.
//! * [`linalg`], [`spectra`]: Jacobi eigensolver, representation spectra.
//! * [`bounds`], [`polymap`]: transforms, eigenvalue and eigengap bounds,
//!   crossover detection, polynomial spectrum maps.
//! * [`clustering`]: spectral clustering and clustering comparison.

pub mod bounds;
pub mod clustering;
pub mod datasets;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod polymap;
pub mod spectra;

pub use error::{Error, Result};
pub use graph::{DegreeSummary, Graph};
pub use spectra::{RepresentationKind, Spectrum};
