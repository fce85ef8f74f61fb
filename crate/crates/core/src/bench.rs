//! Benchmark harness: suites of (F, μ) instances timed across algorithms and
//! bases, with per-phase wall-clock timings.

use std::io::Write;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gist::{check_root_polynomial, verify_gist, Algorithm, Gist, GistResult};
use crate::groebner::{ggist_with, mu_ideal_basis_fresh};
use crate::linsolve::lsgist;
use crate::poly::{text::parse, Polynomial, Term, Var, WeightFn};
use crate::reduce::{crgist_with, CanonicalBasis};
use crate::sym::roots::{delta, dplus, dstar, subdiscriminant};
use crate::sym::{BasisKind, Partition};

fn default_algos() -> Vec<Algorithm> {
    Algorithm::ALL.to_vec()
}

fn default_bases() -> Vec<BasisKind> {
    vec![BasisKind::Elementary]
}

/// One suite entry. `poly` is either polynomial text in r or a named input:
/// `dplus`, `dstar`, `delta`, or `subdisc:k` (the k-th subdiscriminant of the
/// m distinct roots).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteEntry {
    pub id: String,
    pub poly: String,
    pub mu: String,
    #[serde(default = "default_algos")]
    pub algos: Vec<Algorithm>,
    #[serde(default = "default_bases")]
    pub bases: Vec<BasisKind>,
    /// Adds r₁^δ to every homogeneous part, usually breaking μ-symmetry.
    #[serde(default)]
    pub perturb: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suite {
    pub entries: Vec<SuiteEntry>,
}

impl Suite {
    pub fn from_json(s: &str) -> Result<Suite> {
        let suite: Suite = serde_json::from_str(s)?;
        for e in &suite.entries {
            let mu: Partition = e.mu.parse()?;
            resolve_input(&e.poly, &mu)?;
        }
        Ok(suite)
    }

    /// D⁺ polynomials, subdiscriminants and perturbations over n = 4..6,
    /// standing in for the unpublished test polynomials of the original
    /// experiments.
    pub fn builtin() -> Suite {
        let entry = |id: &str, poly: &str, mu: &str, perturb: bool| SuiteEntry {
            id: id.into(),
            poly: poly.into(),
            mu: mu.into(),
            algos: default_algos(),
            bases: default_bases(),
            perturb,
        };
        Suite {
            entries: vec![
                entry("B1", "dplus", "2,1,1", false),
                entry("B2", "dplus", "2,2", false),
                entry("B3", "dplus", "1,1,1,1", false),
                entry("B4", "dplus", "3,1", false),
                entry("B5", "dplus", "2,2,1", false),
                entry("B6", "dplus", "2,2,1", true),
                entry("B7", "subdisc:0", "2,1,1,1", false),
                entry("B8", "subdisc:1", "2,1,1,1", false),
                entry("B9", "dplus", "3,2", false),
                entry("B10", "dplus", "3,2", true),
                entry("B11", "delta", "2,2,1,1", false),
                entry("B12", "dplus", "4,1", false),
            ],
        }
    }
}

/// Resolves named inputs, otherwise parses polynomial text.
pub fn resolve_input(source: &str, mu: &Partition) -> Result<Polynomial> {
    let s = source.trim();
    let f = match s {
        "dplus" => dplus(mu)?,
        "dstar" => dstar(mu)?,
        "delta" => delta(mu)?,
        _ => match s.strip_prefix("subdisc:") {
            Some(k) => {
                let k: u32 = k
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad subdiscriminant index in {s:?}")))?;
                subdiscriminant(mu.m() as u32, k)?.rename_space(crate::poly::Space::X, crate::poly::Space::R)
            }
            None => parse(s)?,
        },
    };
    check_root_polynomial(&f, mu)?;
    Ok(f)
}

fn perturb(f: &Polynomial) -> Polynomial {
    let mut out = f.clone();
    for (d, _) in f.homogeneous_parts(&WeightFn::total()) {
        out.add_term(Term::var_pow(Var::r(1), d as u32), crate::rational::int(1));
    }
    out
}

/// Wall-clock per phase, milliseconds.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Phases {
    pub canonize: Option<f64>,
    pub reduce: Option<f64>,
    pub groebner: Option<f64>,
    pub normal_form: Option<f64>,
    pub solve: Option<f64>,
    pub total: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub id: String,
    pub mu: String,
    pub delta: u64,
    pub n: u32,
    pub basis: BasisKind,
    pub algorithm: Algorithm,
    pub symmetric: bool,
    pub gist: Option<String>,
    pub times: Phases,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn combine(kind: BasisKind, parts: Vec<GistResult>) -> GistResult {
    let mut gists = Vec::new();
    for p in parts {
        match p {
            GistResult::Symmetric(g) => gists.push(g),
            GistResult::NotSymmetric => return GistResult::NotSymmetric,
        }
    }
    GistResult::Symmetric(Gist::sum(kind, gists))
}

/// One timed run, with the precomputation for the instance done fresh.
pub fn timed_run(f: &Polynomial, mu: &Partition, kind: BasisKind, algo: Algorithm) -> Result<(GistResult, Phases)> {
    let parts = f.homogeneous_parts(&WeightFn::total());
    let start = Instant::now();
    let mut ph = Phases::default();
    let result = match algo {
        Algorithm::Groebner => {
            if kind == BasisKind::Monomial {
                return Err(Error::Unsupported("the Gröbner algorithm does not take the m-basis".into()));
            }
            let t = Instant::now();
            let g = mu_ideal_basis_fresh(mu, kind, f.degree())?;
            ph.groebner = Some(ms(t));
            let t = Instant::now();
            let r = parts.iter().map(|(_, p)| ggist_with(p, &g, kind)).collect::<Result<Vec<_>>>()?;
            ph.normal_form = Some(ms(t));
            combine(kind, r)
        }
        Algorithm::CanonizeReduce => {
            let t = Instant::now();
            let bases = parts
                .iter()
                .map(|(d, _)| CanonicalBasis::compute(mu, *d as u32, kind))
                .collect::<Result<Vec<_>>>()?;
            ph.canonize = Some(ms(t));
            let t = Instant::now();
            let r = parts.iter().zip(&bases).map(|((_, p), b)| crgist_with(p, b)).collect();
            ph.reduce = Some(ms(t));
            combine(kind, r)
        }
        Algorithm::LinearSystem => {
            let t = Instant::now();
            let r = parts.iter().map(|(_, p)| lsgist(p, mu, kind)).collect::<Result<Vec<_>>>()?;
            ph.solve = Some(ms(t));
            combine(kind, r)
        }
    };
    ph.total = ms(start);
    Ok((result, ph))
}

/// Runs `reps` times and keeps the run with the median total time.
pub fn median_run(
    f: &Polynomial,
    mu: &Partition,
    kind: BasisKind,
    algo: Algorithm,
    reps: usize,
) -> Result<(GistResult, Phases)> {
    let mut runs = (0..reps.max(1)).map(|_| timed_run(f, mu, kind, algo)).collect::<Result<Vec<_>>>()?;
    runs.sort_by(|a, b| a.1.total.total_cmp(&b.1.total));
    Ok(runs.swap_remove(runs.len() / 2))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub runs: Vec<RunReport>,
    /// Entry ids whose algorithms disagreed on a verdict or returned a gist
    /// that fails the substitution check.
    pub inconsistent: Vec<String>,
}

pub fn run_suite(suite: &Suite, reps: usize, check: bool) -> Result<BenchReport> {
    let mut runs = Vec::new();
    let mut inconsistent = Vec::new();
    for e in &suite.entries {
        let mu: Partition = e.mu.parse()?;
        let mut f = resolve_input(&e.poly, &mu)?;
        if e.perturb {
            f = perturb(&f);
        }
        let delta = f.degree().unwrap_or(0);
        for &kind in &e.bases {
            let mut verdicts = Vec::new();
            let mut bad = false;
            for &algo in &e.algos {
                if algo == Algorithm::Groebner && kind == BasisKind::Monomial {
                    continue;
                }
                let (res, times) = median_run(&f, &mu, kind, algo, reps)?;
                if check {
                    if let Some(g) = res.gist() {
                        bad |= !verify_gist(g, &f, &mu)?;
                    }
                }
                verdicts.push(res.is_symmetric());
                runs.push(RunReport {
                    id: e.id.clone(),
                    mu: mu.to_string(),
                    delta,
                    n: mu.n(),
                    basis: kind,
                    algorithm: algo,
                    symmetric: res.is_symmetric(),
                    gist: res.gist().map(|g| g.to_string()),
                    times,
                });
            }
            bad |= verdicts.windows(2).any(|w| w[0] != w[1]);
            if bad && !inconsistent.contains(&e.id) {
                inconsistent.push(e.id.clone());
            }
        }
    }
    Ok(BenchReport { runs, inconsistent })
}

/// One line per (entry, basis) in the layout of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    #[serde(rename = "F")]
    pub id: String,
    pub delta: u64,
    pub mu: String,
    pub n: u32,
    pub basis: BasisKind,
    #[serde(rename = "Y/N")]
    pub verdict: String,
    pub ggist_ms: Option<f64>,
    pub lsgist_ms: Option<f64>,
    pub speedup_g_over_ls: Option<f64>,
    pub canonize_ms: Option<f64>,
    pub reduce_ms: Option<f64>,
    pub crgist_total_ms: Option<f64>,
    pub speedup_g_over_cr: Option<f64>,
}

pub fn summarize(report: &BenchReport) -> Vec<SummaryRow> {
    let mut rows: Vec<SummaryRow> = Vec::new();
    for r in &report.runs {
        let idx = match rows.iter().position(|s| s.id == r.id && s.basis == r.basis) {
            Some(i) => i,
            None => {
                rows.push(SummaryRow {
                    id: r.id.clone(),
                    delta: r.delta,
                    mu: r.mu.clone(),
                    n: r.n,
                    basis: r.basis,
                    verdict: if r.symmetric { "Y" } else { "N" }.into(),
                    ggist_ms: None,
                    lsgist_ms: None,
                    speedup_g_over_ls: None,
                    canonize_ms: None,
                    reduce_ms: None,
                    crgist_total_ms: None,
                    speedup_g_over_cr: None,
                });
                rows.len() - 1
            }
        };
        let row = &mut rows[idx];
        if (row.verdict == "Y") != r.symmetric {
            row.verdict = "?".into();
        }
        match r.algorithm {
            Algorithm::Groebner => row.ggist_ms = Some(r.times.total),
            Algorithm::LinearSystem => row.lsgist_ms = Some(r.times.total),
            Algorithm::CanonizeReduce => {
                row.canonize_ms = r.times.canonize;
                row.reduce_ms = r.times.reduce;
                row.crgist_total_ms = Some(r.times.total);
            }
        }
    }
    for row in &mut rows {
        if let Some(g) = row.ggist_ms {
            row.speedup_g_over_ls = row.lsgist_ms.map(|l| g / l);
            row.speedup_g_over_cr = row.crgist_total_ms.map(|c| g / c);
        }
    }
    rows
}

pub fn write_csv<W: Write>(rows: &[SummaryRow], w: W) -> Result<()> {
    let mut out = csv::Writer::from_writer(w);
    for r in rows {
        out.serialize(r).map_err(|e| Error::Io(e.to_string()))?;
    }
    out.flush()?;
    Ok(())
}

fn cell(v: Option<f64>) -> String {
    v.map_or_else(|| "-".into(), |x| format!("{x:.2}"))
}

pub fn format_table(rows: &[SummaryRow]) -> String {
    let mut s = format!(
        "{:<6} {:>3} {:<12} {:>2} {:<2} {:>3} {:>10} {:>10} {:>8} {:>10} {:>10} {:>10} {:>8}\n",
        "F", "δ", "μ", "n", "b", "Y/N", "ggist", "lsgist", "g/ls", "canonize", "reduce", "cr total", "g/cr"
    );
    for r in rows {
        s += &format!(
            "{:<6} {:>3} {:<12} {:>2} {:<2} {:>3} {:>10} {:>10} {:>8} {:>10} {:>10} {:>10} {:>8}\n",
            r.id,
            r.delta,
            r.mu,
            r.n,
            r.basis.letter(),
            r.verdict,
            cell(r.ggist_ms),
            cell(r.lsgist_ms),
            cell(r.speedup_g_over_ls),
            cell(r.canonize_ms),
            cell(r.reduce_ms),
            cell(r.crgist_total_ms),
            cell(r.speedup_g_over_cr),
        );
    }
    s
}
