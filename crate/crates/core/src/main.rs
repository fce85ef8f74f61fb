use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use musym::bench::{format_table, resolve_input, run_suite, summarize, write_csv, Suite};
use musym::gist::{compute_gist, Algorithm, GistResult};
use musym::groebner::{mu_ideal_generators_for, mu_ideal_generators_to_degree};
use musym::linsolve::build_system;
use musym::poly::text::to_json_terms;
use musym::rational::{parse_rational, to_fraction_string};
use musym::reduce::canonical_basis;
use musym::sym::sym_dimensions;
use musym::{BasisKind, Error, Partition, Polynomial};

// Output to a closed pipe is dropped rather than treated as a crash.
macro_rules! outln {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! out {
    ($($t:tt)*) => {{
        use std::io::Write;
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

#[derive(Parser)]
#[command(name = "musym", version, about = "Detect μ-symmetric polynomials and compute their gists")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide μ-symmetry of F and print a gist.
    Gist {
        /// Polynomial text in r1..rm, a named input (dplus, dstar, delta,
        /// subdisc:k), `@path`, or a path to a file holding the text.
        f: String,
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "ls")]
        algo: Algorithm,
        #[arg(long, default_value = "e")]
        basis: BasisKind,
        /// Evaluate the gist at z = v1,...,vn.
        #[arg(long, allow_hyphen_values = true)]
        eval: Option<String>,
        #[arg(long)]
        json: bool,
        /// Write the linear system A|b as CSV of exact fractions.
        #[arg(long)]
        dump_system: Option<PathBuf>,
    },
    /// Dimensions of the degree-δ symmetric space and its μ-specialization.
    Dims {
        #[arg(long, required = true)]
        mu: Vec<Partition>,
        /// A single degree or a range such as 3..5.
        #[arg(long)]
        delta: String,
        #[arg(long)]
        json: bool,
    },
    /// Generators of the ideal of μ-constraints.
    Ideal {
        #[arg(long)]
        mu: Partition,
        #[arg(long, default_value = "e")]
        basis: BasisKind,
        /// Only constraints of weighted degree ≤ D; much faster for larger μ.
        #[arg(long, value_name = "D")]
        max_degree: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Canonical sequence C and transition matrix Q for one (μ, δ, basis).
    Canonize {
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        delta: u32,
        #[arg(long, default_value = "e")]
        basis: BasisKind,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time the algorithms over a suite (built-in if none given).
    Bench {
        suite: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Require all algorithms to agree and every gist to pass the substitution check.
        #[arg(long)]
        check: bool,
        #[arg(long)]
        json: bool,
    },
}

enum Failure {
    Usage(String),
    NotSymmetric,
    Inconsistent,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_input(arg: &str, mu: &Partition) -> Result<Polynomial, Failure> {
    let text = if let Some(p) = arg.strip_prefix('@') {
        fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{p}: {e}")))?
    } else if !arg.contains('*') && Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(resolve_input(&text, mu)?)
}

fn parse_delta_range(s: &str) -> Result<Vec<u32>, Failure> {
    let bad = || Failure::Usage(format!("bad degree range {s:?}"));
    let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (num(a)?, num(b.trim_start_matches('='))?);
            if a > b {
                return Err(bad());
            }
            Ok((a..=b).collect())
        }
        None => Ok(vec![num(s)?]),
    }
}

fn cmd_gist(
    f: &str,
    mu: &Partition,
    algo: Algorithm,
    basis: BasisKind,
    eval: Option<&str>,
    as_json: bool,
    dump: Option<&Path>,
) -> Result<(), Failure> {
    let poly = read_input(f, mu)?;
    if let Some(path) = dump {
        let sys = build_system(&poly, mu, basis)?;
        let file = fs::File::create(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        sys.write_csv(file)?;
    }
    let values = eval
        .map(|s| s.split(',').map(|v| parse_rational(v.trim())).collect::<Result<Vec<_>, _>>())
        .transpose()?;
    if let Some(v) = &values {
        if v.len() != mu.n() as usize {
            return Err(Failure::Usage(format!("--eval needs {} values, got {}", mu.n(), v.len())));
        }
    }
    let result = compute_gist(&poly, mu, basis, algo)?;
    let value = match (&result, &values) {
        (GistResult::Symmetric(g), Some(v)) => Some(g.eval(v)?),
        _ => None,
    };
    if as_json {
        let body = match &result {
            GistResult::Symmetric(g) => json!({
                "mu": mu.parts(),
                "basis": basis,
                "algorithm": algo,
                "symmetric": true,
                "gist": to_json_terms(&g.poly),
                "gist_text": g.to_string(),
                "monomial_index": g.monomial_index.iter().map(|a| a.parts.clone()).collect::<Vec<_>>(),
                "eval": value.as_ref().map(to_fraction_string),
            }),
            GistResult::NotSymmetric => json!({
                "mu": mu.parts(),
                "basis": basis,
                "algorithm": algo,
                "symmetric": false,
            }),
        };
        outln!("{body}");
    } else {
        match &result {
            GistResult::Symmetric(g) => {
                outln!("{g}");
                if basis == BasisKind::Monomial {
                    for (j, a) in g.monomial_index.iter().enumerate() {
                        outln!("y{} = m{a}", j + 1);
                    }
                }
                if let Some(v) = &value {
                    outln!("eval = {}", musym::Polynomial::constant(v.clone()));
                }
            }
            GistResult::NotSymmetric => outln!("F is not mu-symmetric"),
        }
    }
    if result.is_symmetric() {
        Ok(())
    } else {
        Err(Failure::NotSymmetric)
    }
}

fn cmd_dims(mus: &[Partition], delta: &str, as_json: bool) -> Result<(), Failure> {
    let degrees = parse_delta_range(delta)?;
    let mut rows = Vec::new();
    for mu in mus {
        for &d in &degrees {
            let (sym, mu_dim) = sym_dimensions(mu, d)?;
            rows.push((mu.clone(), d, sym, mu_dim));
        }
    }
    if as_json {
        let v: Vec<_> = rows
            .iter()
            .map(|(mu, d, s, m)| json!({"mu": mu.parts(), "delta": d, "dim_sym": s, "dim_mu": m}))
            .collect();
        outln!("{}", serde_json::Value::Array(v));
    } else {
        outln!("{:<12} {:>3} {:>8} {:>7}", "μ", "δ", "dim_sym", "dim_mu");
        for (mu, d, s, m) in rows {
            let mark = if m < s { "  drop" } else { "" };
            outln!("{:<12} {:>3} {:>8} {:>7}{mark}", mu.to_string(), d, s, m);
        }
    }
    Ok(())
}

fn cmd_ideal(mu: &Partition, basis: BasisKind, max_degree: Option<u64>, as_json: bool) -> Result<(), Failure> {
    if basis == BasisKind::Monomial {
        return Err(Failure::Usage("the μ-ideal is only available for the e, p and c bases".into()));
    }
    let gens = match max_degree {
        Some(d) => mu_ideal_generators_to_degree(mu, basis, d)?,
        None => mu_ideal_generators_for(mu, basis)?,
    };
    if as_json {
        let v: Vec<_> = gens.iter().map(to_json_terms).collect();
        outln!("{}", serde_json::to_string(&v).expect("json"));
    } else {
        for g in gens {
            outln!("{g}");
        }
    }
    Ok(())
}

fn cmd_canonize(mu: &Partition, delta: u32, basis: BasisKind, out: Option<&Path>) -> Result<(), Failure> {
    let b = canonical_basis(mu, delta, basis)?;
    let text = b.to_json();
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => outln!("{text}"),
    }
    Ok(())
}

fn cmd_bench(suite: Option<&Path>, reps: usize, csv: Option<&Path>, check: bool, as_json: bool) -> Result<(), Failure> {
    let suite = match suite {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            Suite::from_json(&text).map_err(|e| Failure::Usage(format!("malformed suite: {e}")))?
        }
        None => Suite::builtin(),
    };
    let report = run_suite(&suite, reps, check)?;
    let rows = summarize(&report);
    if as_json {
        outln!("{}", serde_json::to_string_pretty(&report).expect("json"));
    } else {
        out!("{}", format_table(&rows));
    }
    if let Some(p) = csv {
        let file = fs::File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
        write_csv(&rows, file)?;
    }
    if check && !report.inconsistent.is_empty() {
        eprintln!("inconsistent entries: {}", report.inconsistent.join(", "));
        return Err(Failure::Inconsistent);
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Gist { f, mu, algo, basis, eval, json, dump_system } => {
            cmd_gist(f, mu, *algo, *basis, eval.as_deref(), *json, dump_system.as_deref())
        }
        Cmd::Dims { mu, delta, json } => cmd_dims(mu, delta, *json),
        Cmd::Ideal { mu, basis, max_degree, json } => cmd_ideal(mu, *basis, *max_degree, *json),
        Cmd::Canonize { mu, delta, basis, out } => cmd_canonize(mu, *delta, *basis, out.as_deref()),
        Cmd::Bench { suite, reps, csv, check, json } => cmd_bench(suite.as_deref(), *reps, csv.as_deref(), *check, *json),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::NotSymmetric) | Err(Failure::Inconsistent) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
