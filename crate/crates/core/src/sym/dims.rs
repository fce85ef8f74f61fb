use super::generators::{BasisKind, SpecializedGenerators};
use super::partition::Partition;
use crate::error::Result;
use crate::linsolve::rank_of_polys;

/// (dim K^δ_sym[x], dim K^δ_μ[r]).
///
/// The first is the number of e-products of weighted degree δ, the second the
/// rank of their μ-specializations.
pub fn sym_dimensions(mu: &Partition, delta: u32) -> Result<(usize, usize)> {
    let mut gens = SpecializedGenerators::new(mu, BasisKind::Elementary)?;
    let (index, elems) = gens.basis(delta)?;
    Ok((index.len(), rank_of_polys(&elems)))
}
