use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::One;
use serde::{Deserialize, Serialize};

use super::partition::{enumerate_weak_partitions, Flavor, Partition, WeakPartition};
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Space, Term, Var};
use crate::rational::Rational;

/// The generator family a gist is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisKind {
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "c")]
    CompleteHomogeneous,
    #[serde(rename = "m")]
    Monomial,
}

impl BasisKind {
    pub const ALL: [BasisKind; 4] =
        [BasisKind::Elementary, BasisKind::PowerSum, BasisKind::CompleteHomogeneous, BasisKind::Monomial];

    pub fn flavor(self) -> Flavor {
        match self {
            BasisKind::Monomial => Flavor::Exact,
            _ => Flavor::Capped,
        }
    }

    pub fn letter(self) -> char {
        match self {
            BasisKind::Elementary => 'e',
            BasisKind::PowerSum => 'p',
            BasisKind::CompleteHomogeneous => 'c',
            BasisKind::Monomial => 'm',
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<BasisKind> {
        match s.trim() {
            "e" => Ok(BasisKind::Elementary),
            "p" => Ok(BasisKind::PowerSum),
            "c" => Ok(BasisKind::CompleteHomogeneous),
            "m" => Ok(BasisKind::Monomial),
            other => Err(Error::InvalidInput(format!("unknown basis {other:?} (expected e|p|c|m)"))),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

fn subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    fn rec(start: u32, n: u32, k: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn k_subsets(n: u32, k: u32) -> Vec<Vec<u32>> {
    subsets(n, k)
}

/// Exponent vectors of length `n` summing to `d`.
fn compositions(d: u32, n: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, slots: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if slots == 1 {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for e in 0..=rest {
            cur.push(e);
            rec(rest - e, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(d, n, &mut Vec::new(), &mut out);
    }
    out
}

pub(crate) fn degree_terms(space: Space, d: u32, count: u32) -> Vec<Term> {
    compositions(d, count)
        .into_iter()
        .map(|ex| Term::from_pairs(ex.into_iter().enumerate().map(|(i, e)| (Var::new(space, i as u32 + 1), e))))
        .collect()
}

fn exps_term(exps: &[u32]) -> Term {
    Term::from_pairs(exps.iter().enumerate().map(|(i, &e)| (Var::x(i as u32 + 1), e)))
}

/// Distinct permutations of a multiset, each once.
fn distinct_permutations(items: &[u32]) -> Vec<Vec<u32>> {
    let mut v = items.to_vec();
    v.sort_unstable();
    let mut out = vec![v.clone()];
    // next lexicographic permutation
    while let Some(i) = (0..v.len().saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) {
        let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).expect("successor exists");
        v.swap(i, j);
        v[i + 1..].reverse();
        out.push(v.clone());
    }
    out
}

/// The i-th generator of `kind` in x_1..x_n. `i = 0` gives 1.
///
/// The monomial family is indexed by weak partitions; use
/// [`monomial_symmetric`] for it.
pub fn generator(kind: BasisKind, i: u32, n: u32) -> Result<Polynomial> {
    if i > n {
        return Err(Error::IndexOutOfRange(format!("generator index {i} exceeds n = {n}")));
    }
    if i == 0 {
        return Ok(Polynomial::one());
    }
    let one = Rational::one();
    Ok(match kind {
        BasisKind::Elementary => Polynomial::from_terms(
            subsets(n, i)
                .into_iter()
                .map(|s| (Term::from_pairs(s.into_iter().map(|j| (Var::x(j), 1))), one.clone())),
        ),
        BasisKind::PowerSum => {
            Polynomial::from_terms((1..=n).map(|j| (Term::var_pow(Var::x(j), i), one.clone())))
        }
        BasisKind::CompleteHomogeneous => {
            Polynomial::from_terms(degree_terms(Space::X, i, n).into_iter().map(|t| (t, one.clone())))
        }
        BasisKind::Monomial => {
            return Err(Error::FlavorMismatch("the monomial family is indexed by weak partitions".into()))
        }
    })
}

/// m_α = Σ x^β over the distinct permutations β of α.
pub fn monomial_symmetric(alpha: &WeakPartition, n: u32) -> Result<Polynomial> {
    if alpha.parts.len() != n as usize {
        return Err(Error::FlavorMismatch(format!("{alpha} does not have exactly {n} parts")));
    }
    Ok(Polynomial::from_terms(
        distinct_permutations(&alpha.parts).into_iter().map(|b| (exps_term(&b), Rational::one())),
    ))
}

/// Basis element of K^δ_sym[x] indexed by α: a product of generators for
/// e/p/c, or m_α for the monomial basis.
pub fn basis_element(kind: BasisKind, alpha: &WeakPartition, n: u32) -> Result<Polynomial> {
    if alpha.flavor != kind.flavor() {
        return Err(Error::FlavorMismatch(format!("{alpha} is not a valid index for the {kind}-basis")));
    }
    if kind == BasisKind::Monomial {
        return monomial_symmetric(alpha, n);
    }
    let mut acc = Polynomial::one();
    for part in alpha.nonzero() {
        acc = &acc * &generator(kind, part, n)?;
    }
    Ok(acc)
}

/// The canonical specialization σ_μ: x_i ↦ r_{j(i)}, block-monotone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Specialization {
    pub mu: Partition,
    block: Vec<u32>,
}

impl Specialization {
    pub fn new(mu: &Partition) -> Specialization {
        Specialization { mu: mu.clone(), block: mu.block_of() }
    }

    pub fn image(&self, i: u32) -> Option<Var> {
        self.block.get(i as usize - 1).map(|&j| Var::r(j))
    }

    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        for (t, c) in p.terms() {
            let mut pairs = Vec::with_capacity(t.exps().len());
            for &(v, e) in t.exps() {
                if v.space == Space::X {
                    let img = self.image(v.index).ok_or_else(|| {
                        Error::IndexOutOfRange(format!("{v} beyond n = {} for μ = {}", self.block.len(), self.mu))
                    })?;
                    pairs.push((img, e));
                } else {
                    pairs.push((v, e));
                }
            }
            out.add_term(Term::from_pairs(pairs), c.clone());
        }
        Ok(out)
    }
}

/// σ_μ(p).
pub fn specialize(p: &Polynomial, mu: &Partition) -> Result<Polynomial> {
    Specialization::new(mu).apply(p)
}

/// σ_μ-images of the generators of one family, with memoized products.
pub struct SpecializedGenerators {
    pub mu: Partition,
    pub kind: BasisKind,
    gens: Vec<Polynomial>,
    products: HashMap<Vec<u32>, Polynomial>,
}

impl SpecializedGenerators {
    pub fn new(mu: &Partition, kind: BasisKind) -> Result<SpecializedGenerators> {
        let n = mu.n();
        let gens = if kind == BasisKind::Monomial {
            Vec::new()
        } else {
            let spec = Specialization::new(mu);
            (1..=n).map(|i| spec.apply(&generator(kind, i, n)?)).collect::<Result<Vec<_>>>()?
        };
        Ok(SpecializedGenerators { mu: mu.clone(), kind, gens, products: HashMap::new() })
    }

    /// ḡ_i for i in 1..=n (empty for the monomial family).
    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// ḡ_α = σ_μ(basis_element(kind, α)).
    pub fn element(&mut self, alpha: &WeakPartition) -> Result<Polynomial> {
        if alpha.flavor != self.kind.flavor() {
            return Err(Error::FlavorMismatch(format!("{alpha} is not a valid index for the {}-basis", self.kind)));
        }
        if self.kind == BasisKind::Monomial {
            return specialize(&monomial_symmetric(alpha, self.mu.n())?, &self.mu);
        }
        let key: Vec<u32> = alpha.nonzero().collect();
        Ok(self.product(&key))
    }

    fn product(&mut self, key: &[u32]) -> Polynomial {
        if key.is_empty() {
            return Polynomial::one();
        }
        if let Some(p) = self.products.get(key) {
            return p.clone();
        }
        let rest = self.product(&key[1..]);
        let p = &self.gens[key[0] as usize - 1] * &rest;
        self.products.insert(key.to_vec(), p.clone());
        p
    }

    /// Index set and specialized basis (ḡ_α) for degree δ.
    pub fn basis(&mut self, delta: u32) -> Result<(Vec<WeakPartition>, Vec<Polynomial>)> {
        let index = enumerate_weak_partitions(delta, self.mu.n(), self.kind.flavor());
        let elems = index.iter().map(|a| self.element(a)).collect::<Result<Vec<_>>>()?;
        Ok((index, elems))
    }
}

/// The gist symbol z_α = Π z_{α_i} for the n-generator families.
pub fn z_alpha(alpha: &WeakPartition) -> Term {
    Term::from_pairs(alpha.nonzero().map(|p| (Var::z(p), 1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::text::parse;

    fn p(s: &str) -> Polynomial {
        parse(s).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generator(BasisKind::Elementary, 2, 3).unwrap(), p("x1*x2+x1*x3+x2*x3"));
        assert_eq!(generator(BasisKind::PowerSum, 2, 2).unwrap(), p("x1^2+x2^2"));
        assert_eq!(generator(BasisKind::CompleteHomogeneous, 2, 2).unwrap(), p("x1^2+x1*x2+x2^2"));
        assert_eq!(generator(BasisKind::Elementary, 0, 3).unwrap(), Polynomial::one());
        assert!(generator(BasisKind::Elementary, 4, 3).is_err());
        let a = WeakPartition::new(vec![2, 0, 0], Flavor::Exact).unwrap();
        assert_eq!(monomial_symmetric(&a, 3).unwrap(), p("x1^2+x2^2+x3^2"));
    }

    #[test]
    fn basis_element_examples() {
        let a = WeakPartition::new(vec![2, 1, 1, 0], Flavor::Capped).unwrap();
        let e1 = generator(BasisKind::Elementary, 1, 2).unwrap();
        let e2 = generator(BasisKind::Elementary, 2, 2).unwrap();
        assert_eq!(basis_element(BasisKind::Elementary, &a, 2).unwrap(), &e2 * &e1.pow(2));
        let b = WeakPartition::new(vec![1, 1], Flavor::Capped).unwrap();
        assert_eq!(basis_element(BasisKind::PowerSum, &b, 2).unwrap(), p("(x1+x2)^2"));
        let ones = WeakPartition::new(vec![1; 4], Flavor::Capped).unwrap();
        let e1 = generator(BasisKind::Elementary, 1, 3).unwrap();
        assert_eq!(basis_element(BasisKind::Elementary, &ones, 3).unwrap(), e1.pow(4));
        assert!(basis_element(BasisKind::Monomial, &ones, 4).is_err());
    }

    #[test]
    fn specialize_examples() {
        let mu: Partition = "2,1".parse().unwrap();
        let e1 = generator(BasisKind::Elementary, 1, 3).unwrap();
        let e2 = generator(BasisKind::Elementary, 2, 3).unwrap();
        assert_eq!(specialize(&e1, &mu).unwrap(), p("2*r1+r2"));
        assert_eq!(specialize(&e2, &mu).unwrap(), p("r1^2+2*r1*r2"));
    }

    #[test]
    fn specialized_e2_closed_form() {
        for n in 2..=7 {
            for mu in Partition::all(n) {
                let e2 = generator(BasisKind::Elementary, 2, n).unwrap();
                let got = specialize(&e2, &mu).unwrap();
                let mut want = Polynomial::zero();
                let parts = mu.parts();
                for (i, &a) in parts.iter().enumerate() {
                    let ri = Polynomial::var(Var::r(i as u32 + 1));
                    want += &ri.pow(2).scale(&crate::rational::int((a * a.saturating_sub(1) / 2) as i64));
                    for (j, &b) in parts.iter().enumerate().skip(i + 1) {
                        let rj = Polynomial::var(Var::r(j as u32 + 1));
                        want += &(&ri * &rj).scale(&crate::rational::int((a * b) as i64));
                    }
                }
                assert_eq!(got, want, "μ = {mu}");
            }
        }
    }

    #[test]
    fn distinct_perms() {
        assert_eq!(distinct_permutations(&[2, 0, 0]).len(), 3);
        assert_eq!(distinct_permutations(&[1, 1, 0, 0]).len(), 6);
        assert_eq!(distinct_permutations(&[3, 2, 1]).len(), 6);
    }
}
