use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::order::TermOrder;
use super::term::{Term, WeightFn};
use super::var::{Space, Var};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A sparse polynomial with exact rational coefficients.
///
/// The map never stores a zero coefficient, so the key set is the support
/// and equality is structural.
#[derive(Debug, Clone, PartialEq, Eq, Default, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Term, Rational>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial::default()
    }

    pub fn one() -> Polynomial {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Polynomial {
        Polynomial::monomial(Term::one(), c)
    }

    pub fn var(v: Var) -> Polynomial {
        Polynomial::monomial(Term::var(v), Rational::one())
    }

    pub fn monomial(t: Term, c: Rational) -> Polynomial {
        let mut p = Polynomial::zero();
        p.add_term(t, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Term, Rational)>>(it: I) -> Polynomial {
        let mut p = Polynomial::zero();
        for (t, c) in it {
            p.add_term(t, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Term, Rational)> {
        self.terms.into_iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Term> {
        self.terms.keys()
    }

    pub fn coeff(&self, t: &Term) -> Rational {
        self.terms.get(t).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn contains_term(&self, t: &Term) -> bool {
        self.terms.contains_key(t)
    }

    /// Adds `c·t`, dropping the entry if it cancels.
    pub fn add_term(&mut self, t: Term, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(t) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c · t · other`
    pub fn add_scaled(&mut self, other: &Polynomial, c: &Rational, t: &Term) {
        if c.is_zero() {
            return;
        }
        for (s, d) in &other.terms {
            self.add_term(s.mul(t), d * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(t, d)| (t.clone(), d * c)).collect() }
    }

    pub fn mul_term(&self, t: &Term, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial { terms: self.terms.iter().map(|(s, d)| (s.mul(t), d * c)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// (lt, lco) under `ord`.
    pub fn leading(&self, ord: &TermOrder) -> Result<(Term, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(a.0, b.0))
            .map(|(t, c)| (t.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_term(&self, ord: &TermOrder) -> Option<&Term> {
        self.terms.keys().max_by(|a, b| ord.cmp(a, b))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.keys().map(Term::degree).max()
    }

    pub fn degree_in(&self, space: Space) -> u64 {
        self.terms.keys().map(|t| t.degree_in(space)).max().unwrap_or(0)
    }

    /// Weighted degree: max over the support of Σ dᵢ·ω(vᵢ).
    pub fn wdeg(&self, w: &WeightFn) -> Result<u64> {
        self.terms.keys().map(|t| t.wdeg(w)).max().ok_or(Error::ZeroPolynomial)
    }

    pub fn is_homogeneous(&self, w: &WeightFn) -> bool {
        let mut it = self.terms.keys().map(|t| t.wdeg(w));
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    /// Splits into ω-homogeneous parts, by strictly increasing degree.
    pub fn homogeneous_parts(&self, w: &WeightFn) -> Vec<(u64, Polynomial)> {
        let mut parts: BTreeMap<u64, Polynomial> = BTreeMap::new();
        for (t, c) in &self.terms {
            parts.entry(t.wdeg(w)).or_default().terms.insert(t.clone(), c.clone());
        }
        parts.into_iter().collect()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|t| t.vars().collect::<Vec<_>>()).collect()
    }

    pub fn is_in_space(&self, space: Space) -> bool {
        self.terms.keys().all(|t| t.is_in_space(space))
    }

    /// Renames every variable of space `from` into `to`, keeping indices.
    pub fn rename_space(&self, from: Space, to: Space) -> Polynomial {
        Polynomial::from_terms(self.terms.iter().map(|(t, c)| {
            let t = Term::from_pairs(t.exps().iter().map(|&(v, e)| {
                let v = if v.space == from { Var::new(to, v.index) } else { v };
                (v, e)
            }));
            (t, c.clone())
        }))
    }

    /// Applies a variable substitution; variables without an image are kept.
    pub fn substitute(&self, images: &HashMap<Var, Polynomial>) -> Polynomial {
        let mut powers: HashMap<(Var, u32), Polynomial> = HashMap::new();
        let mut out = Polynomial::zero();
        for (t, c) in &self.terms {
            let mut prod = Polynomial::constant(c.clone());
            let mut kept = Term::one();
            for &(v, e) in t.exps() {
                match images.get(&v) {
                    Some(img) => {
                        let pw = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        prod = &prod * pw;
                    }
                    None => kept = kept.mul(&Term::var_pow(v, e)),
                }
            }
            if !kept.is_one() {
                prod = prod.mul_term(&kept, &Rational::one());
            }
            out += &prod;
        }
        out
    }

    /// Evaluates at a point; every variable must have a value.
    pub fn eval(&self, values: &HashMap<Var, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (t, c) in &self.terms {
            let mut v = c.clone();
            for &(var, e) in t.exps() {
                let x = values
                    .get(&var)
                    .ok_or_else(|| Error::InvalidInput(format!("no value for {var}")))?;
                v *= num_traits::pow(x.clone(), e as usize);
            }
            acc += v;
        }
        Ok(acc)
    }

    /// Floating point evaluation, for cross-checks only.
    pub fn eval_f64(&self, values: &HashMap<Var, f64>) -> f64 {
        self.terms
            .iter()
            .map(|(t, c)| {
                t.exps().iter().fold(crate::rational::to_f64(c), |acc, &(v, e)| {
                    acc * values.get(&v).copied().unwrap_or(f64::NAN).powi(e as i32)
                })
            })
            .sum()
    }

    /// Rescales so the leading coefficient under `ord` is 1.
    pub fn monic(&self, ord: &TermOrder) -> Polynomial {
        match self.leading(ord) {
            Ok((_, c)) => self.scale(&c.recip()),
            Err(_) => Polynomial::zero(),
        }
    }
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(mut self, rhs: Polynomial) -> Polynomial {
        self -= &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (t, c) in &rhs.terms {
            self.add_term(t.clone(), c.clone());
        }
    }
}

impl SubAssign<&Polynomial> for Polynomial {
    fn sub_assign(&mut self, rhs: &Polynomial) {
        for (t, c) in &rhs.terms {
            self.add_term(t.clone(), -c.clone());
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { terms: self.terms.iter().map(|(t, c)| (t.clone(), -c.clone())).collect() }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        // Accumulate in a hash map; the BTreeMap is only built once.
        let mut acc: HashMap<Term, Rational> = HashMap::with_capacity(self.len() * rhs.len());
        for (s, a) in &self.terms {
            for (t, b) in &rhs.terms {
                let c = a * b;
                acc.entry(s.mul(t)).and_modify(|x| *x += &c).or_insert(c);
            }
        }
        Polynomial { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl From<Var> for Polynomial {
    fn from(v: Var) -> Self {
        Polynomial::var(v)
    }
}

impl From<i64> for Polynomial {
    fn from(c: i64) -> Self {
        Polynomial::constant(crate::rational::int(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn x(i: u32) -> Polynomial {
        Polynomial::var(Var::x(i))
    }
    fn z(i: u32) -> Polynomial {
        Polynomial::var(Var::z(i))
    }

    #[test]
    fn cancellation() {
        let p = &(&x(1) + &x(2)) + &(-x(2));
        assert_eq!(p, x(1));
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x(1) + &x(2)) * &(&x(1) - &x(2));
        assert_eq!(p, &x(1).pow(2) - &x(2).pow(2));
    }

    #[test]
    fn zero_annihilates() {
        let p = &(&x(1) + &x(2)).pow(3) + &Polynomial::from(7);
        assert!((&Polynomial::zero() * &p).is_zero());
    }

    #[test]
    fn leading_of_e1_and_e1e2() {
        let ord = TermOrder::lex(Space::X, crate::poly::order::Direction::Ascending);
        for n in 2..6u32 {
            let e1 = crate::sym::generators::generator(crate::sym::BasisKind::Elementary, 1, n).unwrap();
            let e2 = crate::sym::generators::generator(crate::sym::BasisKind::Elementary, 2, n).unwrap();
            assert_eq!(e1.leading(&ord).unwrap().0, Term::var(Var::x(n)));
            let want = Term::from_pairs([(Var::x(n), 2), (Var::x(n - 1), 1)]);
            assert_eq!((&e1 * &e2).leading(&ord).unwrap().0, want);
        }
    }

    #[test]
    fn leading_of_constant_and_zero() {
        let ord = TermOrder::r_lex();
        assert_eq!(Polynomial::from(5).leading(&ord).unwrap(), (Term::one(), int(5)));
        assert_eq!(Polynomial::zero().leading(&ord), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn weighted_degrees() {
        let w = WeightFn::gist();
        assert_eq!(z(1).pow(3).wdeg(&w).unwrap(), 3);
        let p = &(&z(1) * &z(2)) + &z(3);
        assert_eq!(p.wdeg(&w).unwrap(), 3);
        assert!(p.is_homogeneous(&w));
        assert_eq!((&z(2).pow(2) + &z(1)).wdeg(&w).unwrap(), 4);
        assert_eq!(Polynomial::zero().wdeg(&w), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn homogeneous_split() {
        let r1 = Polynomial::var(Var::r(1));
        let p = &r1.pow(2) + &r1;
        let parts = p.homogeneous_parts(&WeightFn::total());
        assert_eq!(parts, vec![(1, r1.clone()), (2, r1.pow(2))]);

        let w = WeightFn::gist();
        let h = &(&z(1).pow(3) + &z(3).scale(&int(8))) - &(&z(1) * &z(2)).scale(&int(4));
        let parts = h.homogeneous_parts(&w);
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, 3);
        assert_eq!(parts[0].1, h);
    }
}
