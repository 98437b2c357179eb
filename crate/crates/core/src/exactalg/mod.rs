//! Exact integer linear algebra: dense matrices, Smith normal form, integer
//! system solving and rank over the two-element field.

mod matrix;
mod mod2;
mod snf;

pub use matrix::Matrix;
pub use mod2::rank_mod2;
pub use snf::{smith_normal_form, solve_integer, Smith};
