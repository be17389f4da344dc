//! Exact linear algebra over ℚ(i).

mod closure;
mod echelon;
mod eigen;
mod matrix;
pub mod modp;
mod poly;
mod roots;
pub mod text;

pub use closure::{algebra_closure, Closure};
pub use echelon::{inverse, nullspace, rank, rref, solve_in_span, Echelon, SparseVec, Subspace};
pub use eigen::{eigen_split, eigen_split_auto, EigenSplit};
pub use matrix::ExactMatrix;
pub use poly::{minimal_polynomial, Poly};
pub use roots::{rational_roots, RootSearch};
