#![allow(dead_code)]

use musym::poly::{Polynomial, Term, Var};
use musym::rational::int;
use musym::sym::{BasisKind, Partition, SpecializedGenerators};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn p(s: &str) -> Polynomial {
    s.parse().unwrap()
}

pub fn mu(s: &str) -> Partition {
    s.parse().unwrap()
}

pub fn random_partition(rng: &mut ChaCha8Rng, max_n: u32) -> Partition {
    let n = rng.gen_range(2..=max_n);
    Partition::all(n).choose(rng).unwrap().clone()
}

/// A random homogeneous polynomial of degree `delta` in r₁..r_m.
pub fn random_root_poly(rng: &mut ChaCha8Rng, m: u32, delta: u32, max_terms: usize) -> Polynomial {
    let mut f = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut exps = vec![0u32; m as usize];
        for _ in 0..delta {
            exps[rng.gen_range(0..m as usize)] += 1;
        }
        let t = Term::from_pairs(exps.iter().enumerate().map(|(i, &e)| (Var::r(i as u32 + 1), e)));
        f.add_term(t, int(rng.gen_range(-3..=3)));
    }
    f
}

/// A random μ-symmetric polynomial: a small combination of specialized basis elements.
pub fn random_symmetric(rng: &mut ChaCha8Rng, mu: &Partition, delta: u32) -> Polynomial {
    let mut gens = SpecializedGenerators::new(mu, BasisKind::Elementary).unwrap();
    let (_, elems) = gens.basis(delta).unwrap();
    let mut f = Polynomial::zero();
    for e in elems {
        if rng.gen_bool(0.5) {
            f += &e.scale(&int(rng.gen_range(-3..=3)));
        }
    }
    f
}

/// Mix of symmetric, random and perturbed-symmetric instances.
pub fn random_instance(rng: &mut ChaCha8Rng, mu: &Partition, delta: u32) -> Polynomial {
    let m = mu.m() as u32;
    match rng.gen_range(0..3) {
        0 => random_symmetric(rng, mu, delta),
        1 => random_root_poly(rng, m, delta, 4),
        _ => &random_symmetric(rng, mu, delta) + &random_root_poly(rng, m, delta, 1),
    }
}

pub fn random_z_poly(rng: &mut ChaCha8Rng, n: u32, max_wdeg: u32, max_terms: usize) -> Polynomial {
    let mut f = Polynomial::zero();
    for _ in 0..rng.gen_range(1..=max_terms) {
        let mut budget = rng.gen_range(0..=max_wdeg);
        let mut pairs = Vec::new();
        while budget > 0 {
            let i = rng.gen_range(1..=n.min(budget));
            pairs.push((Var::z(i), 1));
            budget -= i;
        }
        f.add_term(Term::from_pairs(pairs), int(rng.gen_range(-4..=4)));
    }
    f
}

pub fn pick_kind(rng: &mut ChaCha8Rng) -> BasisKind {
    *[BasisKind::Elementary, BasisKind::PowerSum, BasisKind::CompleteHomogeneous].choose(rng).unwrap()
}
