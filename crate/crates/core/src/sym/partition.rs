use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A multiplicity structure μ = (μ₁ ≥ μ₂ ≥ ⋯ ≥ μ_m ≥ 1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of distinct roots.
    pub fn m(&self) -> usize {
        self.parts.len()
    }

    /// Degree n = Σ μᵢ.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Root index (1-based) that x_i is sent to by the canonical specialization.
    pub fn block_of(&self) -> Vec<u32> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(j, &mu)| std::iter::repeat_n(j as u32 + 1, mu as usize))
            .collect()
    }

    /// All partitions of `n`, in ascending lexicographic order of parts.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, &mut cur, &mut |p| out.push(p.to_vec()));
        out.sort();
        out.into_iter().map(|parts| Partition { parts }).collect()
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Which index set a weak partition belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    /// α ⊢ (δ,n): δ parts, each at most n.
    Capped,
    /// α ⊢ (δ)_n: exactly n parts.
    Exact,
}

/// A weakly decreasing sequence of non-negative parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeakPartition {
    pub parts: Vec<u32>,
    pub flavor: Flavor,
}

impl WeakPartition {
    pub fn new(parts: Vec<u32>, flavor: Flavor) -> Result<WeakPartition> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(WeakPartition { parts, flavor })
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Nonzero parts only.
    pub fn nonzero(&self) -> impl Iterator<Item = u32> + '_ {
        self.parts.iter().copied().filter(|&p| p > 0)
    }
}

impl fmt::Display for WeakPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

fn partitions_rec(rest: u32, max: u32, cur: &mut Vec<u32>, emit: &mut dyn FnMut(&[u32])) {
    if rest == 0 {
        emit(cur);
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        partitions_rec(rest - p, p, cur, emit);
        cur.pop();
    }
}

/// Enumerates α ⊢ (δ,n) (capped) or α ⊢ (δ)_n (exact), sorted ascending
/// lexicographically so that (1,1,…) comes before (2,0,…).
pub fn enumerate_weak_partitions(delta: u32, n: u32, flavor: Flavor) -> Vec<WeakPartition> {
    let (max_part, max_len, len) = match flavor {
        Flavor::Capped => (n, delta, delta),
        Flavor::Exact => (delta, n, n),
    };
    let mut out: Vec<Vec<u32>> = Vec::new();
    let mut cur = Vec::new();
    partitions_rec(delta, max_part.min(delta), &mut cur, &mut |p| {
        if p.len() as u32 <= max_len {
            let mut v = p.to_vec();
            v.resize(len as usize, 0);
            out.push(v);
        }
    });
    out.sort();
    out.into_iter().map(|parts| WeakPartition { parts, flavor }).collect()
}
