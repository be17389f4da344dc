//! Exact computations around the universal Racah algebra, its map into
//! U(sl₂), and the modules and operator algebras built from them.

pub mod algebra;
pub mod check;
pub mod decompose;
pub mod error;
pub mod exact_linalg;
pub mod gaussian;
pub mod leonard;
pub mod racah_ops;
pub mod rational;
pub mod rd_modules;
pub mod sl2_reps;
pub mod suite;
pub mod usl2_pbw;

pub use error::{Error, Result};
pub use gaussian::{q, GaussianRational, Q};
pub use rational::Rational;
