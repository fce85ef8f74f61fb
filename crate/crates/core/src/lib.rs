//! Exact detection of μ-symmetric polynomials in the distinct roots of a
//! polynomial with multiple roots, and computation of their gists.
//!
//! A polynomial F(r₁,…,r_m) is μ-symmetric when it is the image of a
//! symmetric polynomial in x₁,…,x_n under the specialization that sends
//! μ_j of the x's to r_j. Its gist is a polynomial in z₁,…,z_n that recovers
//! F once each z_i is replaced by the specialized i-th elementary (or power
//! sum, or complete homogeneous) symmetric function.
//!
//! Three algorithms are provided: a Gröbner normal form ([`groebner::ggist`]),
//! canonize-then-reduce ([`reduce::crgist`]) and an exact linear solve
//! ([`linsolve::lsgist`]). [`gist::compute_gist`] dispatches between them.

pub mod bench;
pub mod error;
pub mod gist;
pub mod groebner;
pub mod linsolve;
pub mod poly;
pub mod rational;
pub mod reduce;
pub mod sym;

pub use error::{Error, Result};
pub use gist::{compute_gist, verify_gist, Algorithm, Gist, GistResult};
pub use poly::{Polynomial, Term, TermOrder, Var};
pub use rational::Rational;
pub use sym::{BasisKind, Partition, WeakPartition};
