//! Exact rational linear algebra and the linear-system gist algorithm.

use std::io::Write;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::gist::{homogeneous_degree, Gist, GistResult};
use crate::poly::{Polynomial, Space, Term, TermOrder};
use crate::rational::{to_fraction_string, Rational};
use crate::sym::generators::degree_terms;
use crate::sym::{BasisKind, Partition, SpecializedGenerators, WeakPartition};

pub type Matrix = Vec<Vec<Rational>>;

/// Reduced row echelon form with the pivot column of each nonzero row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rows: Matrix,
    pub pivots: Vec<usize>,
}

/// Gauss-Jordan elimination over ℚ. Zero rows are dropped.
pub fn rref(mut m: Matrix, ncols: usize) -> Rref {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for x in m[r].iter_mut().skip(col) {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    m.truncate(r);
    Rref { rows: m, pivots }
}

pub fn rank(m: &Matrix, ncols: usize) -> usize {
    rref(m.clone(), ncols).pivots.len()
}

/// Basis of {v : A v = 0}, one vector per free column.
pub fn nullspace(a: &Matrix, ncols: usize) -> Vec<Vec<Rational>> {
    let Rref { rows, pivots } = rref(a.clone(), ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (row, &p) in rows.iter().zip(&pivots) {
            v[p] = -row[free].clone();
        }
        out.push(v);
    }
    out
}

/// Coefficient matrix of a list of polynomials (one column each).
pub fn coefficient_matrix(rows: &[Term], polys: &[Polynomial]) -> Matrix {
    rows.iter().map(|t| polys.iter().map(|p| p.coeff(t)).collect()).collect()
}

/// Rank of a family of polynomials viewed as coefficient vectors.
pub fn rank_of_polys(polys: &[Polynomial]) -> usize {
    let mut terms: Vec<Term> = polys.iter().flat_map(|p| p.support().cloned()).collect();
    terms.sort();
    terms.dedup();
    rank(&coefficient_matrix(&terms, polys), polys.len())
}

/// A·k = b where row i compares the coefficient of `row_index[i]` and column
/// j carries the unknown k_α for α = `column_index[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    pub a: Matrix,
    pub b: Vec<Rational>,
    pub column_index: Vec<WeakPartition>,
    pub row_index: Vec<Term>,
}

impl LinearSystem {
    /// A bare system without index labels.
    pub fn from_matrix(a: Matrix, b: Vec<Rational>) -> LinearSystem {
        LinearSystem { a, b, column_index: Vec::new(), row_index: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.a.first().map_or(self.column_index.len(), Vec::len)
    }

    /// Writes A|b as CSV of exact fractions, with a header naming the columns.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let mut header = vec!["term".to_string()];
        if self.column_index.len() == self.ncols() {
            header.extend(self.column_index.iter().map(|a| format!("k{a}")));
        } else {
            header.extend((1..=self.ncols()).map(|j| format!("k{j}")));
        }
        header.push("b".into());
        out.write_record(&header).map_err(csv_err)?;
        for (i, row) in self.a.iter().enumerate() {
            let label = self.row_index.get(i).map_or_else(|| format!("row{}", i + 1), Term::to_string);
            let mut rec = vec![label];
            rec.extend(row.iter().map(to_fraction_string));
            rec.push(to_fraction_string(&self.b[i]));
            out.write_record(&rec).map_err(csv_err)?;
        }
        out.flush()?;
        Ok(())
    }
}

fn csv_err(e: csv::Error) -> crate::error::Error {
    crate::error::Error::Io(e.to_string())
}

/// A particular solution with every free variable set to 0, or `None` when
/// the system is inconsistent.
///
/// Pivots are taken from the last column backwards, so the unknowns that
/// stay free (and hence zero) are the leftmost ones.
pub fn rref_solve(sys: &LinearSystem) -> Option<Vec<Rational>> {
    let n = sys.ncols();
    let aug: Matrix = sys
        .a
        .iter()
        .zip(&sys.b)
        .map(|(row, bi)| {
            let mut r: Vec<Rational> = row.iter().rev().cloned().collect();
            r.push(bi.clone());
            r
        })
        .collect();
    let Rref { rows, pivots } = rref(aug, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut k = vec![Rational::zero(); n];
    for (row, &p) in rows.iter().zip(&pivots) {
        k[n - 1 - p] = row[n].clone();
    }
    Some(k)
}

/// The degree-δ monomials in r₁..r_m, in the row order of the system:
/// r₁^δ first, r_m^δ last.
pub fn row_terms(m: u32, delta: u32) -> Vec<Term> {
    let ord = TermOrder::r_lex();
    let mut rows = degree_terms(Space::R, delta, m);
    rows.sort_by(|a, b| ord.cmp(a, b));
    rows
}

/// Sets up H(k; r) = F(r) for F homogeneous of degree δ.
pub fn build_system(f: &Polynomial, mu: &Partition, kind: BasisKind) -> Result<LinearSystem> {
    let delta = homogeneous_degree(f, mu)?.unwrap_or(0);
    build_system_for_degree(f, mu, kind, delta)
}

fn build_system_for_degree(f: &Polynomial, mu: &Partition, kind: BasisKind, delta: u32) -> Result<LinearSystem> {
    let mut gens = SpecializedGenerators::new(mu, kind)?;
    let (column_index, elems) = gens.basis(delta)?;
    let row_index = row_terms(mu.m() as u32, delta);
    let a = coefficient_matrix(&row_index, &elems);
    let b = row_index.iter().map(|t| f.coeff(t)).collect();
    Ok(LinearSystem { a, b, column_index, row_index })
}

/// Gist by solving the linear system; the pivot convention makes the output
/// reproducible.
pub fn lsgist(f: &Polynomial, mu: &Partition, kind: BasisKind) -> Result<GistResult> {
    let Some(delta) = homogeneous_degree(f, mu)? else {
        return Ok(GistResult::Symmetric(Gist::zero(kind)));
    };
    let sys = build_system_for_degree(f, mu, kind, delta)?;
    Ok(match rref_solve(&sys) {
        Some(k) => GistResult::Symmetric(Gist::from_coefficients(kind, &sys.column_index, &k)),
        None => GistResult::NotSymmetric,
    })
}
