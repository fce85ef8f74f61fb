//! Buchberger's algorithm on dense exponent vectors.
//!
//! Variables are laid out most significant first, so the pure lexicographic
//! order is plain slice comparison. Coefficients are integers kept primitive;
//! every reduction tracks the scalar it multiplied the input by.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Mono = Vec<u16>;

/// Terms in strictly descending order, nonzero coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IPoly {
    pub terms: Vec<(Mono, BigInt)>,
    mask: u64,
}

fn mask_of(m: &[u16]) -> u64 {
    m.iter().enumerate().filter(|(_, &e)| e > 0).fold(0, |acc, (i, _)| acc | 1 << (i % 64))
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn mono_div(num: &[u16], den: &[u16]) -> Mono {
    num.iter().zip(den).map(|(x, y)| x - y).collect()
}

fn lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl IPoly {
    pub fn new(mut terms: Vec<(Mono, BigInt)>) -> IPoly {
        terms.retain(|t| !t.1.is_zero());
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mask = terms.first().map_or(0, |t| mask_of(&t.0));
        IPoly { terms, mask }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lt(&self) -> &Mono {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Divides by the content and makes the leading coefficient positive;
    /// returns the factor the polynomial was divided by.
    pub fn make_primitive(&mut self) -> BigInt {
        let Some(first) = self.terms.first() else {
            return BigInt::one();
        };
        let mut g = first.1.abs();
        for (_, c) in &self.terms[1..] {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if first.1.is_negative() {
            g = -g;
        }
        if !g.is_one() {
            for t in &mut self.terms {
                t.1 /= &g;
            }
        }
        g
    }
}

/// Weighted degree of a monomial.
pub(crate) fn wdeg(m: &[u16], weights: &[u32]) -> u64 {
    m.iter().zip(weights).map(|(&e, &w)| e as u64 * w as u64).sum()
}

fn find_divisor<'a>(t: &[u16], basis: &[&'a IPoly]) -> Option<&'a IPoly> {
    let tm = mask_of(t);
    basis.iter().copied().find(|g| g.mask & !tm == 0 && divides(g.lt(), t))
}

fn content_of(rem: &BTreeMap<Mono, BigInt>, out: &[(Mono, BigInt)]) -> BigInt {
    let mut g = BigInt::zero();
    for c in rem.values().chain(out.iter().map(|t| &t.1)) {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Full reduction of `h` modulo `basis`.
///
/// Returns (R, λ) with λ·h − R in the ideal and no term of R divisible by a
/// leading term of the basis.
pub(crate) fn reduce(h: BTreeMap<Mono, BigInt>, basis: &[&IPoly]) -> (IPoly, BigRational) {
    let mut rem = h;
    let mut out: Vec<(Mono, BigInt)> = Vec::new();
    let mut lambda = BigRational::one();
    let mut steps = 0usize;
    while let Some((t, a)) = rem.pop_last() {
        let Some(g) = find_divisor(&t, basis) else {
            out.push((t, a));
            continue;
        };
        let b = g.lc();
        let d = a.gcd(b);
        let mul_h = b / &d;
        let mul_g = &a / &d;
        if !mul_h.is_one() {
            for v in rem.values_mut() {
                *v *= &mul_h;
            }
            for o in &mut out {
                o.1 *= &mul_h;
            }
            lambda *= BigRational::from_integer(mul_h);
        }
        let q = mono_div(&t, g.lt());
        for (m, c) in &g.terms[1..] {
            let key = mono_mul(&q, m);
            let delta = &mul_g * c;
            match rem.entry(key) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    *e.get_mut() -= delta;
                    if e.get().is_zero() {
                        e.remove();
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(-delta);
                }
            }
        }
        steps += 1;
        if steps.is_multiple_of(16) {
            let c = content_of(&rem, &out);
            if !c.is_zero() && !c.is_one() {
                for v in rem.values_mut() {
                    *v /= &c;
                }
                for o in &mut out {
                    o.1 /= &c;
                }
                lambda /= BigRational::from_integer(c);
            }
        }
    }
    (IPoly::new(out), lambda)
}

fn spoly(f: &IPoly, g: &IPoly) -> BTreeMap<Mono, BigInt> {
    let l = lcm(f.lt(), g.lt());
    let d = f.lc().gcd(g.lc());
    let (mf, mg) = (g.lc() / &d, f.lc() / &d);
    let (qf, qg) = (mono_div(&l, f.lt()), mono_div(&l, g.lt()));
    let mut out: BTreeMap<Mono, BigInt> = BTreeMap::new();
    for (m, c) in &f.terms[1..] {
        *out.entry(mono_mul(&qf, m)).or_default() += &mf * c;
    }
    for (m, c) in &g.terms[1..] {
        *out.entry(mono_mul(&qg, m)).or_default() -= &mg * c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Debug, Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
    wdeg: u64,
}

/// Gebauer–Möller update for the new element `k`.
fn update(polys: &[IPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, k: usize, weights: &[u32]) {
    let hk = polys[k].lt();
    let mut cand: Vec<(usize, Mono, bool)> =
        active.iter().map(|&i| (i, lcm(polys[i].lt(), hk), coprime(polys[i].lt(), hk))).collect();

    // Chain criterion among the new pairs themselves.
    let mut kept: Vec<(usize, Mono, bool)> = Vec::new();
    for idx in 0..cand.len() {
        let (ref l, cp) = (cand[idx].1.clone(), cand[idx].2);
        let dominated = !cp
            && (cand[idx + 1..].iter().any(|c| divides(&c.1, l))
                || kept.iter().any(|c| divides(&c.1, l)));
        if !dominated {
            kept.push(cand[idx].clone());
        }
    }
    cand.clear();

    // Old pairs made redundant by the new leading term.
    pairs.retain(|p| {
        !(divides(hk, &p.lcm)
            && lcm(polys[p.i].lt(), hk) != p.lcm
            && lcm(polys[p.j].lt(), hk) != p.lcm)
    });

    // Coprime leading terms: the S-polynomial reduces to zero.
    for (i, l, cp) in kept {
        if !cp {
            let w = wdeg(&l, weights);
            pairs.push(Pair { i, j: k, lcm: l, wdeg: w });
        }
    }

    active.retain(|&i| !divides(hk, polys[i].lt()));
    active.push(k);
}

/// Reduced Gröbner basis, as primitive integer polynomials sorted by
/// ascending leading term.
///
/// With `bound = Some(d)` the inputs must be homogeneous for `weights`; pairs
/// of weighted degree above `d` are left alone, which still yields every
/// basis element of degree ≤ d. The flag reports whether any pair was skipped.
pub(crate) fn buchberger(gens: Vec<IPoly>, weights: &[u32], bound: Option<u64>) -> (Vec<IPoly>, bool) {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    // Feed the inputs one by one, each reduced by what is already there.
    let mut inputs = gens;
    inputs.sort_by(|a, b| {
        let (wa, wb) = (a.terms.first().map(|t| wdeg(&t.0, weights)), b.terms.first().map(|t| wdeg(&t.0, weights)));
        wa.cmp(&wb).then_with(|| a.terms.first().map(|t| &t.0).cmp(&b.terms.first().map(|t| &t.0)))
    });
    for g in inputs {
        let basis: Vec<&IPoly> = active.iter().map(|&i| &polys[i]).collect();
        let (mut h, _) = reduce(g.terms.into_iter().collect(), &basis);
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, weights);
    }

    let mut truncated = false;
    while !pairs.is_empty() {
        if let Some(d) = bound {
            pairs.retain(|p| p.wdeg <= d || {
                truncated = true;
                false
            });
            if pairs.is_empty() {
                break;
            }
        }
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (p, q) = (&pairs[a], &pairs[b]);
                p.wdeg.cmp(&q.wdeg).then_with(|| p.lcm.cmp(&q.lcm)).then((p.i, p.j).cmp(&(q.i, q.j)))
            })
            .expect("nonempty");
        let pair = pairs.swap_remove(best);
        let s = spoly(&polys[pair.i], &polys[pair.j]);
        let basis: Vec<&IPoly> = active.iter().map(|&i| &polys[i]).collect();
        let (mut h, _) = reduce(s, &basis);
        if h.is_zero() {
            continue;
        }
        h.make_primitive();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, weights);
    }

    (interreduce(active.into_iter().map(|i| polys[i].clone()).collect()), truncated)
}

/// Tail-reduces a minimal basis and sorts it by leading term.
pub(crate) fn interreduce(mut g: Vec<IPoly>) -> Vec<IPoly> {
    g.sort_by(|a, b| a.lt().cmp(b.lt()));
    let mut out = Vec::with_capacity(g.len());
    for k in 0..g.len() {
        let others: Vec<&IPoly> = g.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, p)| p).collect();
        let lead = g[k].terms[0].clone();
        let tail: BTreeMap<Mono, BigInt> = g[k].terms[1..].iter().cloned().collect();
        let (r, lambda) = reduce(tail, &others);
        // g_k ≡ lead + r/λ, scaled back to integers.
        let (num, den) = (lambda.numer().clone(), lambda.denom().clone());
        let mut terms = vec![(lead.0, lead.1 * num)];
        terms.extend(r.terms.into_iter().map(|(m, c)| (m, c * &den)));
        let mut p = IPoly::new(terms);
        p.make_primitive();
        out.push(p);
    }
    out
}

/// Checks that every S-polynomial (up to weighted degree `bound`) reduces to
/// zero.
pub(crate) fn is_groebner(g: &[IPoly], weights: &[u32], bound: Option<u64>) -> bool {
    let basis: Vec<&IPoly> = g.iter().collect();
    for i in 0..g.len() {
        for j in i + 1..g.len() {
            if bound.is_some_and(|d| wdeg(&lcm(g[i].lt(), g[j].lt()), weights) > d) {
                continue;
            }
            if !reduce(spoly(&g[i], &g[j]), &basis).0.is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(terms: &[(&[u16], i64)]) -> IPoly {
        IPoly::new(terms.iter().map(|(m, c)| (m.to_vec(), BigInt::from(*c))).collect())
    }

    #[test]
    fn principal_ideal() {
        let (g, _) = buchberger(vec![ip(&[(&[1, 0], 2), (&[0, 1], 4)])], &[1, 1], None);
        assert_eq!(g, vec![ip(&[(&[1, 0], 1), (&[0, 1], 2)])]);
    }

    #[test]
    fn circle_and_line() {
        // x² + y² − 1, x − y in lex x > y.
        let (g, _) = buchberger(
            vec![ip(&[(&[2, 0], 1), (&[0, 2], 1), (&[0, 0], -1)]), ip(&[(&[1, 0], 1), (&[0, 1], -1)])],
            &[1, 1],
            None,
        );
        assert_eq!(g, vec![ip(&[(&[0, 2], 2), (&[0, 0], -1)]), ip(&[(&[1, 0], 1), (&[0, 1], -1)])]);
        assert!(is_groebner(&g, &[1, 1], None));
    }

    #[test]
    fn reduce_tracks_scale() {
        // 3x reduced by 2x − 1: 2·(3x) − 3·(2x − 1) = 3.
        let g = ip(&[(&[1], 2), (&[0], -1)]);
        let (r, lambda) = reduce([(vec![1], BigInt::from(3))].into_iter().collect(), &[&g]);
        assert_eq!(r, ip(&[(&[0], 3)]));
        assert_eq!(lambda, BigRational::from_integer(2.into()));
    }
}
