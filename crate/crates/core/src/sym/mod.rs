//! Symmetric generators, their μ-specializations and the concrete root functions.

pub mod dims;
pub mod generators;
pub mod partition;
pub mod roots;

pub use dims::sym_dimensions;
pub use generators::{
    basis_element, generator, monomial_symmetric, specialize, z_alpha, BasisKind, Specialization,
    SpecializedGenerators,
};
pub use partition::{enumerate_weak_partitions, Flavor, Partition, WeakPartition};
