//! Gist results and the front-end dispatcher over the three algorithms.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Space, Term, Var, WeightFn};
use crate::rational::Rational;
use crate::sym::{z_alpha, BasisKind, Partition, SpecializedGenerators, WeakPartition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "groebner")]
    Groebner,
    #[serde(rename = "cr")]
    CanonizeReduce,
    #[serde(rename = "ls")]
    LinearSystem,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Groebner, Algorithm::CanonizeReduce, Algorithm::LinearSystem];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Groebner => "groebner",
            Algorithm::CanonizeReduce => "cr",
            Algorithm::LinearSystem => "ls",
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Algorithm> {
        match s {
            "groebner" | "g" => Ok(Algorithm::Groebner),
            "cr" => Ok(Algorithm::CanonizeReduce),
            "ls" => Ok(Algorithm::LinearSystem),
            _ => Err(Error::InvalidInput(format!("unknown algorithm {s:?} (groebner|cr|ls)"))),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A μ-gist of some F.
///
/// For e/p/c the polynomial lives in K[z]. For the monomial basis each z_α is
/// its own symbol, so the gist is written in y_1, y_2, … with y_j standing
/// for m̄ of `monomial_index[j-1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gist {
    pub poly: Polynomial,
    pub basis: BasisKind,
    pub monomial_index: Vec<WeakPartition>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GistResult {
    Symmetric(Gist),
    NotSymmetric,
}

impl GistResult {
    pub fn is_symmetric(&self) -> bool {
        matches!(self, GistResult::Symmetric(_))
    }

    pub fn gist(&self) -> Option<&Gist> {
        match self {
            GistResult::Symmetric(g) => Some(g),
            GistResult::NotSymmetric => None,
        }
    }

    pub fn into_gist(self) -> Option<Gist> {
        match self {
            GistResult::Symmetric(g) => Some(g),
            GistResult::NotSymmetric => None,
        }
    }
}

impl Gist {
    pub fn zero(basis: BasisKind) -> Gist {
        Gist { poly: Polynomial::zero(), basis, monomial_index: Vec::new() }
    }

    /// Σ c_α z_α (or Σ c_j y_j for the monomial basis).
    pub fn from_coefficients(basis: BasisKind, index: &[WeakPartition], coeffs: &[Rational]) -> Gist {
        debug_assert_eq!(index.len(), coeffs.len());
        let mut poly = Polynomial::zero();
        if basis == BasisKind::Monomial {
            for (j, c) in coeffs.iter().enumerate() {
                poly.add_term(Term::var(Var::y(j as u32 + 1)), c.clone());
            }
            return Gist { poly, basis, monomial_index: index.to_vec() };
        }
        for (alpha, c) in index.iter().zip(coeffs) {
            poly.add_term(z_alpha(alpha), c.clone());
        }
        Gist { poly, basis, monomial_index: Vec::new() }
    }

    /// Sum of gists of different homogeneous parts.
    pub fn sum(basis: BasisKind, parts: Vec<Gist>) -> Gist {
        let mut poly = Polynomial::zero();
        let mut index = Vec::new();
        for g in parts {
            if basis == BasisKind::Monomial {
                let offset = index.len() as u32;
                let shifted = Polynomial::from_terms(g.poly.into_terms().map(|(t, c)| {
                    let t = Term::from_pairs(t.exps().iter().map(|&(v, e)| {
                        let v = if v.space == Space::Y { Var::y(v.index + offset) } else { v };
                        (v, e)
                    }));
                    (t, c)
                }));
                poly += &shifted;
                index.extend(g.monomial_index);
            } else {
                poly += &g.poly;
            }
        }
        Gist { poly, basis, monomial_index: index }
    }

    /// G(ḡ₁,…,ḡ_n): the gist with each symbol replaced by its μ-specialized
    /// symmetric function. Equals F for a correct gist.
    pub fn expand(&self, mu: &Partition) -> Result<Polynomial> {
        let mut gens = SpecializedGenerators::new(mu, self.basis)?;
        let images: HashMap<Var, Polynomial> = if self.basis == BasisKind::Monomial {
            self.monomial_index
                .iter()
                .enumerate()
                .map(|(j, a)| Ok((Var::y(j as u32 + 1), gens.element(a)?)))
                .collect::<Result<_>>()?
        } else {
            gens.generators().iter().enumerate().map(|(i, g)| (Var::z(i as u32 + 1), g.clone())).collect()
        };
        if let Some(v) = self.poly.variables().into_iter().find(|v| !images.contains_key(v)) {
            return Err(Error::InvalidInput(format!("gist symbol {v} has no image for μ = {mu}")));
        }
        Ok(self.poly.substitute(&images))
    }

    /// Evaluates an e/p/c gist at z = values.
    pub fn eval(&self, values: &[Rational]) -> Result<Rational> {
        if self.basis == BasisKind::Monomial {
            return Err(Error::Unsupported("evaluation of monomial-basis gists".into()));
        }
        let map: HashMap<Var, Rational> =
            values.iter().enumerate().map(|(i, v)| (Var::z(i as u32 + 1), v.clone())).collect();
        self.poly.eval(&map)
    }

    pub fn wdeg(&self) -> u64 {
        self.poly.wdeg(&WeightFn::gist()).unwrap_or(0)
    }
}

impl fmt::Display for Gist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Checks that F lives in K[r₁..r_m] and is homogeneous; returns its degree,
/// or `None` for F = 0.
pub(crate) fn homogeneous_degree(f: &Polynomial, mu: &Partition) -> Result<Option<u32>> {
    check_root_polynomial(f, mu)?;
    let parts = f.homogeneous_parts(&WeightFn::total());
    match parts.len() {
        0 => Ok(None),
        1 => Ok(Some(parts[0].0 as u32)),
        _ => Err(Error::NotHomogeneous(parts.iter().map(|p| p.0).collect())),
    }
}

pub fn check_root_polynomial(f: &Polynomial, mu: &Partition) -> Result<()> {
    for v in f.variables() {
        if v.space != Space::R || v.index as usize > mu.m() {
            return Err(Error::InvalidInput(format!(
                "{v} is not one of the roots r1..r{} of μ = {mu}",
                mu.m()
            )));
        }
    }
    Ok(())
}

/// Gist of an arbitrary F ∈ K[r]: splits into homogeneous parts, runs the
/// chosen algorithm on each and sums the results.
pub fn compute_gist(f: &Polynomial, mu: &Partition, kind: BasisKind, algo: Algorithm) -> Result<GistResult> {
    check_root_polynomial(f, mu)?;
    if algo == Algorithm::Groebner && kind == BasisKind::Monomial {
        return Err(Error::Unsupported(
            "the Gröbner algorithm needs one generator per z_i; use --algo ls or cr with the m-basis".into(),
        ));
    }
    let mut parts = Vec::new();
    for (_, part) in f.homogeneous_parts(&WeightFn::total()) {
        let r = match algo {
            Algorithm::Groebner => crate::groebner::ggist(&part, mu, kind)?,
            Algorithm::CanonizeReduce => crate::reduce::crgist(&part, mu, kind)?,
            Algorithm::LinearSystem => crate::linsolve::lsgist(&part, mu, kind)?,
        };
        match r {
            GistResult::Symmetric(g) => parts.push(g),
            GistResult::NotSymmetric => return Ok(GistResult::NotSymmetric),
        }
    }
    Ok(GistResult::Symmetric(Gist::sum(kind, parts)))
}

/// Exact check that G(ḡ) = F.
pub fn verify_gist(g: &Gist, f: &Polynomial, mu: &Partition) -> Result<bool> {
    Ok((&g.expand(mu)? - f).is_zero())
}

/// Values z_i = (−1)^i a_i / a_0 for P = a_0 xⁿ + a_1 x^{n−1} + ⋯ + a_n.
pub fn vieta_point(coeffs: &[Rational]) -> Result<Vec<Rational>> {
    let a0 = coeffs.first().ok_or_else(|| Error::InvalidInput("empty coefficient list".into()))?;
    if a0.is_zero() {
        return Err(Error::InvalidInput("leading coefficient is zero".into()));
    }
    Ok(coeffs[1..]
        .iter()
        .enumerate()
        .map(|(i, a)| if i % 2 == 0 { -a / a0 } else { a / a0 })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse;
    use crate::rational::int;

    fn mu(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn golden_all_algorithms() {
        let f = parse("3*r1^2+2*r1*r2+r2^2").unwrap();
        for algo in Algorithm::ALL {
            let g = compute_gist(&f, &mu("2,1"), BasisKind::Elementary, algo).unwrap().into_gist().unwrap();
            assert!(verify_gist(&g, &f, &mu("2,1")).unwrap(), "{algo}");
        }
    }

    #[test]
    fn non_homogeneous_is_split() {
        let f = parse("3*r1^2+2*r1*r2+r2^2 + 2*r1 + r2 + 7").unwrap();
        for algo in Algorithm::ALL {
            let g = compute_gist(&f, &mu("2,1"), BasisKind::Elementary, algo).unwrap().into_gist().unwrap();
            assert!(verify_gist(&g, &f, &mu("2,1")).unwrap());
        }
        let bad = parse("r1 + r2 + r1^2").unwrap();
        for algo in Algorithm::ALL {
            assert!(!compute_gist(&bad, &mu("2,1"), BasisKind::Elementary, algo).unwrap().is_symmetric());
        }
    }

    #[test]
    fn monomial_basis_parts_are_renumbered() {
        let f = parse("3*r1^2+2*r1*r2+r2^2 + 2*r1 + r2").unwrap();
        let g = compute_gist(&f, &mu("2,1"), BasisKind::Monomial, Algorithm::LinearSystem)
            .unwrap()
            .into_gist()
            .unwrap();
        assert!(verify_gist(&g, &f, &mu("2,1")).unwrap());
        assert!(compute_gist(&f, &mu("2,1"), BasisKind::Monomial, Algorithm::Groebner).is_err());
    }

    #[test]
    fn rejects_foreign_variables() {
        for bad in ["r3", "x1", "z1*r1"] {
            let f = parse(bad).unwrap();
            assert!(compute_gist(&f, &mu("2,1"), BasisKind::Elementary, Algorithm::LinearSystem).is_err());
        }
    }

    #[test]
    fn vieta_signs() {
        let z = vieta_point(&[int(2), int(4), int(6), int(8)]).unwrap();
        assert_eq!(z, vec![int(-2), int(3), int(-4)]);
    }
}
