use std::collections::BTreeMap;
use std::fmt;

use smallvec::SmallVec;

use super::var::{Space, Var};

/// A power product. Exponents are kept sorted by variable and never zero, so
/// the empty term is the constant 1 and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Term {
    exps: SmallVec<[(Var, u32); 6]>,
}

impl Term {
    pub fn one() -> Term {
        Term::default()
    }

    pub fn var(v: Var) -> Term {
        Term::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: u32) -> Term {
        let mut exps = SmallVec::new();
        if e > 0 {
            exps.push((v, e));
        }
        Term { exps }
    }

    /// Builds a term from arbitrary (variable, exponent) pairs, merging
    /// repeats and dropping zeros.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Term {
        let mut m: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *m.entry(v).or_insert(0) += e;
        }
        Term { exps: m.into_iter().filter(|&(_, e)| e > 0).collect() }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[(Var, u32)] {
        &self.exps
    }

    pub fn exp(&self, v: Var) -> u32 {
        match self.exps.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.exps[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&(_, e)| e as u64).sum()
    }

    pub fn wdeg(&self, w: &WeightFn) -> u64 {
        self.exps.iter().map(|&(v, e)| e as u64 * w.weight(v) as u64).sum()
    }

    /// Degree counting only variables of `space`.
    pub fn degree_in(&self, space: Space) -> u64 {
        self.exps.iter().filter(|(v, _)| v.space == space).map(|&(_, e)| e as u64).sum()
    }

    pub fn is_in_space(&self, space: Space) -> bool {
        self.exps.iter().all(|(v, _)| v.space == space)
    }

    pub fn mul(&self, other: &Term) -> Term {
        let (a, b) = (&self.exps, &other.exps);
        let mut out: SmallVec<[(Var, u32); 6]> = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Term { exps: out }
    }

    pub fn pow(&self, e: u32) -> Term {
        if e == 0 {
            return Term::one();
        }
        Term { exps: self.exps.iter().map(|&(v, x)| (v, x * e)).collect() }
    }

    pub fn divides(&self, other: &Term) -> bool {
        self.exps.iter().all(|&(v, e)| other.exp(v) >= e)
    }

    /// `other / self` when exact.
    pub fn quotient_of(&self, other: &Term) -> Option<Term> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .filter_map(|&(v, e)| {
                let d = e - self.exp(v);
                (d > 0).then_some((v, d))
            })
            .collect();
        Some(Term { exps })
    }

    pub fn lcm(&self, other: &Term) -> Term {
        Term::from_pairs(
            self.exps
                .iter()
                .map(|&(v, e)| (v, e.max(other.exp(v))))
                .chain(other.exps.iter().filter(|(v, _)| self.exp(*v) == 0).copied()),
        )
    }

    /// Keeps only the variables of `space`.
    pub fn restrict(&self, space: Space) -> Term {
        Term { exps: self.exps.iter().filter(|(v, _)| v.space == space).copied().collect() }
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.iter().map(|&(v, _)| v)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (i, (v, e)) in self.exps.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Positive integer weights on variables.
///
/// Spaces listed as index-weighted give variable `v_i` weight `i`; all other
/// variables weigh 1 unless overridden.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightFn {
    index_weighted: Vec<Space>,
    overrides: BTreeMap<Var, u32>,
}

impl WeightFn {
    /// ω ≡ 1, i.e. total degree.
    pub fn total() -> WeightFn {
        WeightFn::default()
    }

    /// ω(z_i) = i and weight 1 everywhere else.
    pub fn gist() -> WeightFn {
        WeightFn { index_weighted: vec![Space::Z], overrides: BTreeMap::new() }
    }

    pub fn with_override(mut self, v: Var, weight: u32) -> WeightFn {
        assert!(weight >= 1, "weights are positive");
        self.overrides.insert(v, weight);
        self
    }

    pub fn weight(&self, v: Var) -> u32 {
        if let Some(&w) = self.overrides.get(&v) {
            return w;
        }
        if self.index_weighted.contains(&v.space) {
            v.index
        } else {
            1
        }
    }
}
