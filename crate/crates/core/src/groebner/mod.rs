//! Gröbner bases over ℚ, normal forms, μ-ideals and the Gröbner gist algorithm.

mod engine;

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gist::{check_root_polynomial, Gist, GistResult};
use crate::poly::{Direction, Polynomial, Space, Term, TermOrder, Var, WeightFn};
use crate::rational::Rational;
use crate::sym::{BasisKind, Partition, SpecializedGenerators};
use engine::{IPoly, Mono};

/// Generators of an ideal together with the term order to use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealBasis {
    pub generators: Vec<Polynomial>,
    pub ordering: TermOrder,
}

impl IdealBasis {
    pub fn new(generators: Vec<Polynomial>, ordering: TermOrder) -> IdealBasis {
        IdealBasis { generators, ordering }
    }

    /// ⟨z_i − ḡ_i : i = 1..n⟩ under the elimination order.
    pub fn mu_ideal(mu: &Partition, kind: BasisKind) -> Result<IdealBasis> {
        if kind == BasisKind::Monomial {
            return Err(Error::Unsupported("the μ-ideal is only defined for the e, p and c families".into()));
        }
        let gens = SpecializedGenerators::new(mu, kind)?;
        let generators = gens
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| &Polynomial::var(Var::z(i as u32 + 1)) - g)
            .collect();
        Ok(IdealBasis { generators, ordering: TermOrder::elimination(Space::Z) })
    }
}

/// A reduced Gröbner basis: monic, sorted by ascending leading term.
///
/// A basis built with a degree bound holds exactly the reduced basis
/// elements of weighted degree ≤ `degree_bound` (plus possibly some higher
/// ones) and decides membership only up to that degree.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    pub elements: Vec<Polynomial>,
    pub ordering: TermOrder,
    pub degree_bound: Option<u64>,
    layout: Vec<Var>,
    internal: Vec<IPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && self.ordering == other.ordering && self.degree_bound == other.degree_bound
    }
}

/// Variables in decreasing significance under `ord`.
fn layout(ord: &TermOrder, vars: &BTreeSet<Var>) -> Result<Vec<Var>> {
    let spaces = ord.spaces();
    if let Some(v) = vars.iter().find(|v| !spaces.iter().any(|(s, _)| *s == v.space)) {
        return Err(Error::InvalidInput(format!("variable {v} is not covered by the term order")));
    }
    let mut out = Vec::new();
    for (space, dir) in spaces {
        let mut vs: Vec<Var> = vars.iter().copied().filter(|v| v.space == space).collect();
        if dir == Direction::Ascending {
            vs.reverse();
        }
        out.extend(vs);
    }
    Ok(out)
}

fn weights(layout: &[Var]) -> Vec<u32> {
    let w = WeightFn::gist();
    layout.iter().map(|&v| w.weight(v)).collect()
}

fn to_mono(t: &Term, pos: &HashMap<Var, usize>, n: usize) -> Mono {
    let mut m = vec![0u16; n];
    for &(v, e) in t.exps() {
        m[pos[&v]] = u16::try_from(e).expect("exponent fits in u16");
    }
    m
}

fn from_mono(m: &[u16], layout: &[Var]) -> Term {
    Term::from_pairs(m.iter().zip(layout).filter(|(&e, _)| e > 0).map(|(&e, &v)| (v, e as u32)))
}

/// Clears denominators; returns the integer polynomial and the factor used.
fn to_ipoly(p: &Polynomial, layout: &[Var]) -> (IPoly, BigInt) {
    let pos: HashMap<Var, usize> = layout.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let den = p.terms().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let terms = p
        .terms()
        .map(|(t, c)| (to_mono(t, &pos, layout.len()), (c * BigRational::from_integer(den.clone())).to_integer()))
        .collect();
    (IPoly::new(terms), den)
}

fn from_ipoly(p: &IPoly, layout: &[Var], scale: &Rational) -> Polynomial {
    Polynomial::from_terms(
        p.terms.iter().map(|(m, c)| (from_mono(m, layout), BigRational::from_integer(c.clone()) * scale)),
    )
}

/// Reduced Gröbner basis of the ideal.
pub fn buchberger(gens: &IdealBasis) -> Result<GroebnerBasis> {
    run_buchberger(gens, None)
}

/// Gröbner basis up to weighted degree `degree` (ω(z_i) = i, every other
/// variable 1). The generators must be weighted homogeneous. If no pair had to
/// be skipped the result is the full basis and carries no bound.
pub fn buchberger_to_degree(gens: &IdealBasis, degree: u64) -> Result<GroebnerBasis> {
    let w = WeightFn::gist();
    if let Some(g) = gens.generators.iter().find(|g| !g.is_homogeneous(&w)) {
        return Err(Error::InvalidInput(format!("generator {g} is not weighted homogeneous")));
    }
    run_buchberger(gens, Some(degree))
}

fn run_buchberger(gens: &IdealBasis, bound: Option<u64>) -> Result<GroebnerBasis> {
    if gens.generators.is_empty() {
        return Err(Error::InvalidInput("empty generator list".into()));
    }
    let vars: BTreeSet<Var> = gens.generators.iter().flat_map(Polynomial::variables).collect();
    let layout = layout(&gens.ordering, &vars)?;
    let w = weights(&layout);
    let inputs = gens.generators.iter().map(|g| to_ipoly(g, &layout).0).filter(|p| !p.is_zero()).collect();
    let (internal, truncated) = engine::buchberger(inputs, &w, bound);
    let elements = internal
        .iter()
        .map(|p| {
            let lc = BigRational::from_integer(p.terms[0].1.clone());
            from_ipoly(p, &layout, &lc.recip())
        })
        .collect();
    let degree_bound = if truncated { bound } else { None };
    Ok(GroebnerBasis { elements, ordering: gens.ordering.clone(), degree_bound, layout, internal })
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Every S-polynomial (within the degree bound) reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        engine::is_groebner(&self.internal, &weights(&self.layout), self.degree_bound)
    }

    pub fn is_complete(&self) -> bool {
        self.degree_bound.is_none()
    }

    /// Whether normal forms of polynomials of weighted degree `d` are exact.
    pub fn covers_degree(&self, d: u64) -> bool {
        self.degree_bound.is_none_or(|b| d <= b)
    }

    /// Members lying in K[space] only.
    pub fn restricted_to(&self, space: Space) -> Vec<Polynomial> {
        self.elements.iter().filter(|p| p.is_in_space(space)).cloned().collect()
    }
}

/// The unique remainder of `f` modulo a reduced Gröbner basis.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(Polynomial::zero());
    }
    let d = f.wdeg(&WeightFn::gist())?;
    if !g.covers_degree(d) {
        return Err(Error::InvalidInput(format!(
            "basis is only complete up to weighted degree {}, input has degree {d}",
            g.degree_bound.unwrap_or_default()
        )));
    }
    let extra: BTreeSet<Var> = f.variables().into_iter().filter(|v| !g.layout.contains(v)).collect();
    let (lay, internal);
    let (lay_ref, basis): (&[Var], Vec<&IPoly>) = if extra.is_empty() {
        (&g.layout, g.internal.iter().collect())
    } else {
        let mut all: BTreeSet<Var> = g.layout.iter().copied().collect();
        all.extend(extra);
        lay = layout(&g.ordering, &all)?;
        internal = g.elements.iter().map(|p| to_ipoly(p, &lay).0).collect::<Vec<_>>();
        (&lay, internal.iter().collect())
    };
    let (fi, den) = to_ipoly(f, lay_ref);
    let (r, lambda) = engine::reduce(fi.terms.into_iter().collect(), &basis);
    // λ·den·f ≡ r
    let scale = (lambda * BigRational::from_integer(den)).recip();
    Ok(from_ipoly(&r, lay_ref, &scale))
}

type CacheKey = (Partition, BasisKind);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Complete Gröbner basis of ⟨z_i − ḡ_i⟩ for (μ, kind), computed once per
/// process.
pub fn mu_ideal_basis(mu: &Partition, kind: BasisKind) -> Result<Arc<GroebnerBasis>> {
    cached_basis(mu, kind, None)
}

/// A basis of the same ideal good for normal forms up to weighted degree
/// `degree`; reuses any cached basis that covers it.
pub fn mu_ideal_basis_to_degree(mu: &Partition, kind: BasisKind, degree: u64) -> Result<Arc<GroebnerBasis>> {
    cached_basis(mu, kind, Some(degree))
}

fn cached_basis(mu: &Partition, kind: BasisKind, degree: Option<u64>) -> Result<Arc<GroebnerBasis>> {
    let key = (mu.clone(), kind);
    let covers = |g: &GroebnerBasis| match degree {
        None => g.is_complete(),
        Some(d) => g.covers_degree(d),
    };
    if let Some(g) = cache().read().expect("cache lock").get(&key) {
        if covers(g) {
            return Ok(g.clone());
        }
    }
    let g = Arc::new(mu_ideal_basis_fresh(mu, kind, degree)?);
    let mut map = cache().write().expect("cache lock");
    let slot = map.entry(key).or_insert_with(|| g.clone());
    if !covers(slot) {
        *slot = g.clone();
    }
    Ok(g)
}

/// Uncached variant, for timing comparisons. `degree` as in
/// [`mu_ideal_basis_to_degree`]; `None` computes the complete basis.
pub fn mu_ideal_basis_fresh(mu: &Partition, kind: BasisKind, degree: Option<u64>) -> Result<GroebnerBasis> {
    let ideal = IdealBasis::mu_ideal(mu, kind)?;
    match degree {
        None => buchberger(&ideal),
        Some(d) => buchberger_to_degree(&ideal, d),
    }
}

/// Generators of the ideal of μ-constraints, monic and sorted by leading
/// term.
pub fn mu_ideal_generators(mu: &Partition) -> Result<Vec<Polynomial>> {
    mu_ideal_generators_for(mu, BasisKind::Elementary)
}

pub fn mu_ideal_generators_for(mu: &Partition, kind: BasisKind) -> Result<Vec<Polynomial>> {
    Ok(mu_ideal_basis(mu, kind)?.restricted_to(Space::Z))
}

/// The generators of weighted degree ≤ `degree` only.
pub fn mu_ideal_generators_to_degree(mu: &Partition, kind: BasisKind, degree: u64) -> Result<Vec<Polynomial>> {
    let w = WeightFn::gist();
    let g = mu_ideal_basis_to_degree(mu, kind, degree)?;
    let mut out = Vec::new();
    for p in g.restricted_to(Space::Z) {
        if p.wdeg(&w)? <= degree {
            out.push(p);
        }
    }
    Ok(out)
}

/// Gist by normal form modulo the μ-ideal basis: symmetric iff the normal
/// form is free of r, and then it is a gist of least weighted degree.
pub fn ggist(f: &Polynomial, mu: &Partition, kind: BasisKind) -> Result<GistResult> {
    check_root_polynomial(f, mu)?;
    let g = mu_ideal_basis_to_degree(mu, kind, f.degree().unwrap_or(0))?;
    ggist_with(f, &g, kind)
}

/// As [`ggist`], against a given basis of the μ-ideal.
pub fn ggist_with(f: &Polynomial, g: &GroebnerBasis, kind: BasisKind) -> Result<GistResult> {
    let r = normal_form(f, g)?;
    if r.degree_in(Space::R) > 0 {
        return Ok(GistResult::NotSymmetric);
    }
    Ok(GistResult::Symmetric(Gist { poly: r, basis: kind, monomial_index: Vec::new() }))
}

/// Drops every cached μ-ideal basis.
pub fn clear_cache() {
    cache().write().expect("cache lock").clear();
}
