//! Sparse multivariate polynomials over disjoint named variable spaces.

pub mod order;
pub mod polynomial;
pub mod term;
pub mod text;
pub mod var;

pub use order::{Direction, TermOrder};
pub use polynomial::Polynomial;
pub use term::{Term, WeightFn};
pub use var::{Space, Var, VarSpace};
