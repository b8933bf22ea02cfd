//! Exact arithmetic: Gaussian rationals, sparse polynomials, and
//! fraction-free linear algebra.

mod context;
pub mod elimination;
mod gaussian;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod ring;
mod sparse;

pub use context::{Var, VariableContext};
pub use gaussian::{gq_div, GaussianRational};
pub use matrix::{rank_kernel, ExactMatrix, Kernel, Matrix, RankKernel};
pub use monomial::{monomials_of_degree, Monomial, MAX_PRODUCT_DEGREE, MAX_VARS};
pub use poly::{monomial_basis, poly_from_coefficients, MultiPoly, Value};
pub use ring::{GaussInt, Ring};
pub use sparse::SparsePoly;
