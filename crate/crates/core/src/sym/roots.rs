//! Concrete root functions and their closed-form lifts and gists.

use super::generators::k_subsets;
use super::partition::Partition;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Var};
use crate::rational::{frac, int, Rational};

fn diff(a: Var, b: Var) -> Polynomial {
    &Polynomial::var(a) - &Polynomial::var(b)
}

fn need_two_roots(mu: &Partition, what: &str) -> Result<()> {
    if mu.m() < 2 {
        return Err(Error::InvalidPartition(format!("{what} needs at least two distinct roots, got μ = {mu}")));
    }
    Ok(())
}

/// Π_{i<j} (r_i − r_j)^{e(i,j)} over the m roots of μ.
fn pairwise_product(mu: &Partition, exponent: impl Fn(u32, u32) -> u32) -> Polynomial {
    let parts = mu.parts();
    let mut acc = Polynomial::one();
    for i in 0..parts.len() {
        for j in i + 1..parts.len() {
            let e = exponent(parts[i], parts[j]);
            acc = &acc * &diff(Var::r(i as u32 + 1), Var::r(j as u32 + 1)).pow(e);
        }
    }
    acc
}

/// D⁺(μ) = Π_{i<j} (r_i − r_j)^{μ_i+μ_j}.
pub fn dplus(mu: &Partition) -> Result<Polynomial> {
    need_two_roots(mu, "D-plus")?;
    Ok(pairwise_product(mu, |a, b| a + b))
}

/// D*(μ) = Π_{i<j} (r_i − r_j)^{2μ_iμ_j}.
pub fn dstar(mu: &Partition) -> Result<Polynomial> {
    need_two_roots(mu, "D-star")?;
    Ok(pairwise_product(mu, |a, b| 2 * a * b))
}

/// Δ = Π_{i<j} (r_i − r_j)² over the m distinct roots.
pub fn delta(mu: &Partition) -> Result<Polynomial> {
    need_two_roots(mu, "Δ")?;
    Ok(pairwise_product(mu, |_, _| 2))
}

pub fn dplus_degree(mu: &Partition) -> u64 {
    let p = mu.parts();
    let mut d = 0u64;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            d += (p[i] + p[j]) as u64;
        }
    }
    d
}

/// Π_{i<j ∈ I} (x_i − x_j)² over an index set.
fn squared_vandermonde(idx: &[u32]) -> Polynomial {
    let mut v = Polynomial::one();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            v = &v * &diff(Var::x(i), Var::x(j));
        }
    }
    &v * &v
}

/// The k-th subdiscriminant in n variables,
/// S^n_k = Σ_{|I| = n−k} Π_{i<j ∈ I} (x_i − x_j)², with S^n_{n−1} = 1.
///
/// Each unordered pair of I contributes one squared factor.
pub fn subdiscriminant(n: u32, k: u32) -> Result<Polynomial> {
    if n == 0 || k >= n {
        return Err(Error::IndexOutOfRange(format!("subdiscriminant S^{n}_{k} needs 0 ≤ k ≤ n−1")));
    }
    if k == n - 1 {
        return Ok(Polynomial::one());
    }
    let mut acc = Polynomial::zero();
    for subset in k_subsets(n, n - k) {
        acc += &squared_vandermonde(&subset);
    }
    Ok(acc)
}

/// Lift of Δ: (1/Πμ_i) · S^n_{n−m}.
pub fn delta_lift(mu: &Partition) -> Result<Polynomial> {
    need_two_roots(mu, "Δ")?;
    let prod: i64 = mu.parts().iter().map(|&p| p as i64).product();
    let s = subdiscriminant(mu.n(), mu.n() - mu.m() as u32)?;
    Ok(s.scale(&frac(1, prod)))
}

/// ((n−1)z₁² − 2n z₂)/(μ₁μ₂), the gist of (r₁−r₂)² for two roots.
fn two_root_delta_gist(n: i64, m1: i64, m2: i64) -> Polynomial {
    let z1 = Polynomial::var(Var::z(1));
    let z2 = Polynomial::var(Var::z(2));
    (&z1.pow(2).scale(&int(n - 1)) - &z2.scale(&int(2 * n))).scale(&frac(1, m1 * m2))
}

/// Closed-form gist of D⁺(μ) for μ = (μ₁, μ₂).
pub fn dplus_gist_m2(mu: &Partition) -> Result<Polynomial> {
    if mu.m() != 2 {
        return Err(Error::InvalidPartition(format!("expected two parts, got μ = {mu}")));
    }
    let (m1, m2) = (mu.parts()[0] as i64, mu.parts()[1] as i64);
    let n = m1 + m2;
    let base = two_root_delta_gist(n, m1, m2);
    if n % 2 == 0 {
        return Ok(base.pow((n / 2) as u32));
    }
    let d = m1 * m2 * (m1 - m2);
    if d == 0 {
        return Err(Error::Degenerate(format!("μ = {mu} gives d = μ₁μ₂(μ₁−μ₂) = 0")));
    }
    let k1 = Rational::new((-(n - 1) * (n - 2)).into(), d.into());
    let k2 = Rational::new((3 * n * (n - 2)).into(), d.into());
    let k3 = Rational::new((-3 * n * n).into(), d.into());
    let z1 = Polynomial::var(Var::z(1));
    let z2 = Polynomial::var(Var::z(2));
    let z3 = Polynomial::var(Var::z(3));
    let cubic = &(&z1.pow(3).scale(&k1) + &(&z1 * &z2).scale(&k2)) + &z3.scale(&k3);
    Ok(&base.pow(((n - 3) / 2) as u32) * &cubic)
}

/// Closed-form lift of D⁺(μ) when all parts are equal: (S^n_{n−m}/μ^m)^μ.
pub fn dplus_lift_equal(mu: &Partition) -> Result<Polynomial> {
    let p = mu.parts();
    if p.iter().any(|&x| x != p[0]) {
        return Err(Error::InvalidPartition(format!("parts of μ = {mu} are not all equal")));
    }
    need_two_roots(mu, "D-plus")?;
    let (part, m) = (p[0], mu.m() as u32);
    let s = subdiscriminant(mu.n(), mu.n() - m)?;
    let scale = Rational::new(1.into(), num_bigint::BigInt::from(part).pow(m));
    Ok(s.scale(&scale).pow(part))
}
