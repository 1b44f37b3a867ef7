//! Exact computation over finite-dimensional bound quiver algebras:
//! representations, Auslander-Reiten theory, two-term silting complexes and
//! extension-dimension bounds, all over Q or a prime field with no floating
//! point anywhere.
//!
//! Values are immutable after construction and safe to share across threads.
//! The `parallel` feature (default) maps independent subcomputations over a
//! rayon pool; disabling it gives a sequential build with identical results.

pub mod algebra;
pub mod ar;
pub mod complex;
pub mod decomp;
pub mod dims;
pub mod fdalg;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod quiver;
pub mod rep;
pub mod scalar;
pub mod util;

pub use algebra::{AlgElt, AlgebraError, Path, PathAlgebra};
pub use parse::parse_algebra;
pub use quiver::{classify_graph, GraphClass, Quiver};
pub use scalar::{FieldSpec, Scalar};
