//! Reduction against canonical sequences, canonization, and the
//! canonize-reduce gist algorithm.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gist::{homogeneous_degree, Gist, GistResult};
use crate::linsolve::Matrix;
use crate::poly::text::{from_json_terms, to_json_terms, JsonTerm};
use crate::poly::{Polynomial, Term, TermOrder};
use crate::rational::{parse_rational, to_fraction_string, Rational};
use crate::sym::{BasisKind, Partition, SpecializedGenerators, WeakPartition};

/// Nonzero polynomials with strictly increasing leading terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalSequence {
    order: TermOrder,
    elems: Vec<Polynomial>,
    lts: Vec<Term>,
    lcos: Vec<Rational>,
}

impl CanonicalSequence {
    pub fn empty(order: TermOrder) -> CanonicalSequence {
        CanonicalSequence { order, elems: Vec::new(), lts: Vec::new(), lcos: Vec::new() }
    }

    /// Validates that leading terms strictly increase.
    pub fn new(elems: Vec<Polynomial>, order: TermOrder) -> Result<CanonicalSequence> {
        let mut seq = CanonicalSequence::empty(order);
        for p in elems {
            let (lt, lco) = p.leading(&seq.order)?;
            if let Some(last) = seq.lts.last() {
                if seq.order.cmp(last, &lt) != Ordering::Less {
                    return Err(Error::InvalidInput(format!(
                        "leading terms must strictly increase, {lt} follows {last}"
                    )));
                }
            }
            seq.elems.push(p);
            seq.lts.push(lt);
            seq.lcos.push(lco);
        }
        Ok(seq)
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elems
    }

    pub fn leading_terms(&self) -> &[Term] {
        &self.lts
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Inserts a polynomial whose leading term is not yet present; returns
    /// its position.
    fn insert(&mut self, p: Polynomial) -> Result<usize> {
        let (lt, lco) = p.leading(&self.order)?;
        let pos = self.lts.partition_point(|t| self.order.cmp(t, &lt) == Ordering::Less);
        if self.lts.get(pos) == Some(&lt) {
            return Err(Error::InvalidInput(format!("leading term {lt} already present")));
        }
        self.elems.insert(pos, p);
        self.lts.insert(pos, lt);
        self.lcos.insert(pos, lco);
        Ok(pos)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub remainder: Polynomial,
    /// F = Σ qᵢCᵢ + R, when tracked.
    pub quotients: Option<Vec<Rational>>,
    /// Iterations of the main loop.
    pub loops: usize,
}

fn leading(f: &Polynomial, ord: &TermOrder) -> (Term, Rational) {
    f.leading(ord).expect("nonzero")
}

/// Single downward sweep over C_ℓ, …, C₁.
///
/// Each iteration either moves the current leading term of F to the
/// remainder (when it exceeds lt(Cᵢ)), or cancels it against Cᵢ and steps to
/// the next i.
pub fn reduce(f: &Polynomial, c: &CanonicalSequence, track_quotients: bool) -> Reduction {
    let ord = &c.order;
    let mut f = f.clone();
    let mut r = Polynomial::zero();
    let mut q = track_quotients.then(|| vec![Rational::zero(); c.len()]);
    let mut i = c.len();
    let mut loops = 0;
    while !f.is_zero() && i > 0 {
        loops += 1;
        let (p, lco) = leading(&f, ord);
        let ci = &c.lts[i - 1];
        match ord.cmp(&p, ci) {
            Ordering::Greater => {
                f.add_term(p.clone(), -lco.clone());
                r.add_term(p, lco);
            }
            Ordering::Equal => {
                let factor = &lco / &c.lcos[i - 1];
                f.add_scaled(&c.elems[i - 1], &-factor.clone(), &Term::one());
                if let Some(q) = q.as_mut() {
                    q[i - 1] += factor;
                }
                i -= 1;
            }
            Ordering::Less => i -= 1,
        }
    }
    Reduction { remainder: &r + &f, quotients: q, loops }
}

/// A canonical sequence spanning B, with C = B·Q when tracked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonized {
    pub seq: CanonicalSequence,
    /// |B| × ℓ; column j holds the coordinates of Cⱼ over B.
    pub q: Option<Matrix>,
}

/// Builds a canonical sequence from B.
///
/// Elements are consumed by increasing leading term (ties by position), each
/// reduced against the sequence so far and inserted if nonzero.
pub fn canonize(b: &[Polynomial], order: &TermOrder, track_quotients: bool) -> Canonized {
    let mut idx: Vec<(usize, Term)> =
        b.iter().enumerate().filter_map(|(i, p)| p.leading_term(order).map(|t| (i, t.clone()))).collect();
    idx.sort_by(|x, y| order.cmp(&x.1, &y.1).then(x.0.cmp(&y.0)));

    let mut seq = CanonicalSequence::empty(order.clone());
    // Coordinates of each Cⱼ over B, kept in step with `seq`.
    let mut coords: Vec<Vec<Rational>> = Vec::new();
    for (i, _) in idx {
        let red = reduce(&b[i], &seq, track_quotients);
        if red.remainder.is_zero() {
            continue;
        }
        let pos = seq.insert(red.remainder).expect("reduced remainder has a fresh leading term");
        if let Some(qv) = red.quotients {
            let mut v = vec![Rational::zero(); b.len()];
            v[i] = Rational::one();
            for (qj, cj) in qv.iter().zip(&coords) {
                if qj.is_zero() {
                    continue;
                }
                for (x, y) in v.iter_mut().zip(cj) {
                    *x -= qj * y;
                }
            }
            coords.insert(pos, v);
        }
    }
    let q = track_quotients.then(|| {
        (0..b.len()).map(|row| coords.iter().map(|col| col[row].clone()).collect()).collect()
    });
    Canonized { seq, q }
}

/// Picks one of the applicable reduction steps.
pub trait StepChooser {
    /// `applicable` holds the indices i with lt(Cᵢ) ∈ Supp(F), ascending; the
    /// return value must be one of them.
    fn choose(&mut self, f: &Polynomial, applicable: &[usize]) -> usize;
}

impl<F: FnMut(&Polynomial, &[usize]) -> usize> StepChooser for F {
    fn choose(&mut self, f: &Polynomial, applicable: &[usize]) -> usize {
        self(f, applicable)
    }
}

/// Always reduces against the lowest-index applicable element.
#[derive(Debug, Clone, Copy, Default)]
pub struct LowestIndex;

impl StepChooser for LowestIndex {
    fn choose(&mut self, _: &Polynomial, applicable: &[usize]) -> usize {
        applicable[0]
    }
}

/// Always reduces against the element with the largest leading term.
#[derive(Debug, Clone, Copy, Default)]
pub struct LeadingFirst;

impl StepChooser for LeadingFirst {
    fn choose(&mut self, _: &Polynomial, applicable: &[usize]) -> usize {
        *applicable.last().expect("nonempty")
    }
}

/// Applies reduction steps F ← F − (coef(F, lt(C))/lco(C))·C in the order the
/// chooser dictates until none applies. Returns the remainder and the step count.
pub fn nreduce(f: &Polynomial, c: &CanonicalSequence, chooser: &mut dyn StepChooser) -> (Polynomial, usize) {
    let mut f = f.clone();
    let mut steps = 0;
    loop {
        let applicable: Vec<usize> = (0..c.len()).filter(|&i| f.contains_term(&c.lts[i])).collect();
        if applicable.is_empty() {
            return (f, steps);
        }
        let i = chooser.choose(&f, &applicable);
        assert!(applicable.contains(&i), "chooser returned a non-applicable index {i}");
        let factor = &f.coeff(&c.lts[i]) / &c.lcos[i];
        f.add_scaled(&c.elems[i], &-factor, &Term::one());
        steps += 1;
    }
}

/// Canonized degree-δ basis for one (μ, kind), with C = B·Q.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    pub mu: Partition,
    pub delta: u32,
    pub kind: BasisKind,
    pub index: Vec<WeakPartition>,
    pub seq: CanonicalSequence,
    pub q: Matrix,
}

impl CanonicalBasis {
    pub fn compute(mu: &Partition, delta: u32, kind: BasisKind) -> Result<CanonicalBasis> {
        let mut gens = SpecializedGenerators::new(mu, kind)?;
        let (index, elems) = gens.basis(delta)?;
        let Canonized { seq, q } = canonize(&elems, &TermOrder::r_lex(), true);
        Ok(CanonicalBasis { mu: mu.clone(), delta, kind, index, seq, q: q.expect("tracked") })
    }

    /// Coefficients over the index set of the combination B·Q·q.
    pub fn combine(&self, q: &[Rational]) -> Vec<Rational> {
        self.q
            .iter()
            .map(|row| row.iter().zip(q).filter(|(a, b)| !a.is_zero() && !b.is_zero()).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&CanonicalBasisJson::from(self)).expect("json encoding")
    }

    pub fn from_json(s: &str) -> Result<CanonicalBasis> {
        let j: CanonicalBasisJson = serde_json::from_str(s)?;
        j.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct CanonicalBasisJson {
    mu: Vec<u32>,
    delta: u32,
    basis: BasisKind,
    index: Vec<Vec<u32>>,
    c: Vec<Vec<JsonTerm>>,
    q: Vec<Vec<String>>,
}

impl From<&CanonicalBasis> for CanonicalBasisJson {
    fn from(b: &CanonicalBasis) -> Self {
        CanonicalBasisJson {
            mu: b.mu.parts().to_vec(),
            delta: b.delta,
            basis: b.kind,
            index: b.index.iter().map(|a| a.parts.clone()).collect(),
            c: b.seq.elements().iter().map(to_json_terms).collect(),
            q: b.q.iter().map(|row| row.iter().map(to_fraction_string).collect()).collect(),
        }
    }
}

impl TryFrom<CanonicalBasisJson> for CanonicalBasis {
    type Error = Error;
    fn try_from(j: CanonicalBasisJson) -> Result<CanonicalBasis> {
        let mu = Partition::new(j.mu)?;
        let index =
            j.index.into_iter().map(|p| WeakPartition::new(p, j.basis.flavor())).collect::<Result<Vec<_>>>()?;
        let elems = j.c.iter().map(|t| from_json_terms(t)).collect::<Result<Vec<_>>>()?;
        let seq = CanonicalSequence::new(elems, TermOrder::r_lex())?;
        let q = j
            .q
            .iter()
            .map(|row| row.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Matrix>>()?;
        if q.len() != index.len() || q.iter().any(|row| row.len() != seq.len()) {
            return Err(Error::InvalidInput("Q has the wrong shape".into()));
        }
        Ok(CanonicalBasis { mu, delta: j.delta, kind: j.basis, index, seq, q })
    }
}

type CacheKey = (Partition, u32, BasisKind);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<CanonicalBasis>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<CanonicalBasis>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn disk_path(key: &CacheKey) -> Option<PathBuf> {
    let dir = std::env::var_os("MUSYM_CACHE_DIR")?;
    let mu: Vec<String> = key.0.parts().iter().map(u32::to_string).collect();
    Some(PathBuf::from(dir).join(format!("canon-{}-{}-{}.json", mu.join("_"), key.1, key.2)))
}

/// The canonized basis for (μ, δ, kind), computed once per process and, when
/// `MUSYM_CACHE_DIR` is set, persisted there as JSON.
pub fn canonical_basis(mu: &Partition, delta: u32, kind: BasisKind) -> Result<Arc<CanonicalBasis>> {
    let key = (mu.clone(), delta, kind);
    if let Some(b) = cache().read().expect("cache lock").get(&key) {
        return Ok(b.clone());
    }
    let path = disk_path(&key);
    let loaded = path
        .as_ref()
        .and_then(|p| std::fs::read_to_string(p).ok())
        .and_then(|s| CanonicalBasis::from_json(&s).ok())
        .filter(|b| b.mu == key.0 && b.delta == delta && b.kind == kind);
    let basis = match loaded {
        Some(b) => b,
        None => {
            let b = CanonicalBasis::compute(mu, delta, kind)?;
            if let Some(p) = &path {
                if let Some(dir) = p.parent() {
                    std::fs::create_dir_all(dir)?;
                }
                std::fs::write(p, b.to_json())?;
            }
            b
        }
    };
    let basis = Arc::new(basis);
    cache().write().expect("cache lock").entry(key).or_insert_with(|| basis.clone());
    Ok(basis)
}

/// Drops every in-memory canonized basis.
pub fn clear_cache() {
    cache().write().expect("cache lock").clear();
}

/// Reduce phase of the canonize-reduce algorithm against a prepared basis.
pub fn crgist_with(f: &Polynomial, basis: &CanonicalBasis) -> GistResult {
    let red = reduce(f, &basis.seq, true);
    if !red.remainder.is_zero() {
        return GistResult::NotSymmetric;
    }
    let coeffs = basis.combine(&red.quotients.expect("tracked"));
    GistResult::Symmetric(Gist::from_coefficients(basis.kind, &basis.index, &coeffs))
}

/// Gist by canonize (cached per (μ, δ, kind)) followed by reduce.
pub fn crgist(f: &Polynomial, mu: &Partition, kind: BasisKind) -> Result<GistResult> {
    let Some(delta) = homogeneous_degree(f, mu)? else {
        return Ok(GistResult::Symmetric(Gist::zero(kind)));
    };
    let basis = canonical_basis(mu, delta, kind)?;
    Ok(crgist_with(f, &basis))
}
