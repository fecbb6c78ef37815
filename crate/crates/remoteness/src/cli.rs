//! Argument definitions and subcommand dispatch for the `remoteness` binary.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use remoteness_core::group::{
    cyclic_group_remoteness, dihedral_remoteness, max_distance_to_powers, parse_generators, transitive_remoteness,
    DEFAULT_ORDER_CAP,
};
use remoteness_core::latin::{
    cyclic_latin, extended_latin_code, find_transversal, first_k_rows_bound, first_k_rows_remoteness, uncovered_cells,
};
use remoteness_core::metric::{
    bound_m, greedy_size_bound, m_exact, permutation_remoteness, permutation_summary, set_cover_bounds, space_radius,
    symmetric_m_lower_bound, FiniteMetricSpace, MOutcome, DEFAULT_SEARCH_BUDGET,
};
use remoteness_core::perm::all_permutations;
use remoteness_core::rgraph::{graph_stats, stability_number_parallel};
use remoteness_core::{
    pair_remoteness, GroupError, HammingSpace, LatinError, LatinSquare, MetricError, PairError, PermError, Permutation,
    PermutationGroup, RemotenessGraph, SymmetricSpace,
};

use crate::catalog::{load_catalog, verify_table, CatalogError};
use crate::io::{self, IoError};
use crate::report::{perm_json, perms_json, Report, Verification};

/// Degrees up to this size are cross-checked against the brute-force oracle by `--verify`.
pub const VERIFY_MAX_DEGREE: usize = 6;

/// Random streams used by the bachelor search, fixed so results do not depend on `--jobs`.
pub const BACHELOR_WORKERS: usize = 8;

/// Largest degree for which exact remoteness over `S_n` is computed on request.
const EXACT_MAX_DEGREE: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "remoteness", version, about = "Remoteness of permutation codes and permutation groups")]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for parallel searches (default: available cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Seed for randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Cross-check formula results against brute force when the degree is at most 6.
    #[arg(long, global = true)]
    pub verify: bool,
    #[command(subcommand)]
    pub command: Command,
}

impl Cli {
    pub fn output_format(&self) -> Format {
        if self.json {
            Format::Json
        } else {
            self.format
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Remoteness, radius, diameter and covering radius of a permutation code.
    Remoteness {
        /// Codewords separated by `;` (image notation) or cycle-notation words.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        code: Option<String>,
        /// File with one codeword per line.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Remoteness of the pair {id, sigma} from its cycle structure.
    Pair {
        #[arg(long)]
        sigma: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Structure and remoteness of the group generated by the given permutations.
    Group {
        /// Generators, e.g. "(0 1 2 3 4),(1 4)(2 3)".
        #[arg(long)]
        generators: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Remoteness of the cyclic group generated by one permutation.
    Cyclic {
        #[arg(long)]
        generator: String,
        #[arg(long)]
        degree: Option<usize>,
    },
    /// Remoteness of the dihedral group of degree n.
    Dihedral {
        #[arg(long)]
        n: usize,
    },
    /// Transversals and row-code bounds for a Latin square.
    Latin {
        /// Use the cyclic Latin square of this order.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        order: Option<usize>,
        /// Read the square from a file of comma-separated rows.
        #[arg(long)]
        file: Option<PathBuf>,
        /// Also report bounds for the first k rows.
        #[arg(long)]
        k: Option<usize>,
        /// List the cells through which no transversal passes.
        #[arg(long)]
        bachelor: bool,
    },
    /// Find a confirmed bachelor square and its extended code of remoteness n.
    Bachelor {
        /// Odd order, at least 5.
        #[arg(long)]
        order: usize,
        /// Random squares tried per worker stream for orders above 5.
        #[arg(long, default_value_t = 20_000)]
        attempts: u64,
        /// Write the normalized square to this file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// The remoteness graph of a transitive group and its stability number.
    Rgraph {
        #[arg(long, alias = "group")]
        generators: String,
        #[arg(long)]
        degree: Option<usize>,
        /// Write the edge list to this file.
        #[arg(long)]
        edges: Option<PathBuf>,
    },
    /// Exact m(S_n, t) for every t by increasing-cardinality search.
    Mtable {
        #[arg(long)]
        n: usize,
        /// Largest number of candidate codes examined per cardinality level.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        budget: u64,
    },
    /// Recompute the transitive-group table from the embedded catalog.
    Table,
    /// Set-cover bounds on m(X, t) for S_n or the Hamming space H(n, q).
    Bounds {
        #[arg(long)]
        n: usize,
        /// Alphabet size; selects H(n, q) instead of S_n.
        #[arg(long)]
        q: Option<usize>,
        /// Only this t (default: every t from 1 to the space radius).
        #[arg(long)]
        t: Option<usize>,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Input(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Latin(#[from] LatinError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Io(#[from] IoError),
}

/// Exit status for a finished report.
pub fn exit_code(report: &Report) -> i32 {
    if report.succeeded() {
        0
    } else {
        1
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let verify = cli.verify;
    match &cli.command {
        Command::Remoteness { code, file, degree } => cmd_remoteness(code.as_deref(), file.as_ref(), *degree, verify),
        Command::Pair { sigma, degree } => cmd_pair(sigma, *degree, verify),
        Command::Group { generators, degree } => cmd_group(generators, *degree, verify),
        Command::Cyclic { generator, degree } => cmd_cyclic(generator, *degree, verify),
        Command::Dihedral { n } => cmd_dihedral(*n, verify),
        Command::Latin {
            order,
            file,
            k,
            bachelor,
        } => cmd_latin(*order, file.as_ref(), *k, *bachelor, verify),
        Command::Bachelor { order, attempts, out } => cmd_bachelor(*order, cli.seed, *attempts, out.as_ref(), verify),
        Command::Rgraph {
            generators,
            degree,
            edges,
        } => cmd_rgraph(generators, *degree, edges.as_ref(), verify),
        Command::Mtable { n, budget } => cmd_mtable(*n, *budget, verify),
        Command::Table => cmd_table(),
        Command::Bounds { n, q, t } => cmd_bounds(*n, *q, *t, verify),
    }
}

fn square_rows(square: &LatinSquare) -> Value {
    json!((0..square.order()).map(|i| square.row(i).to_vec()).collect::<Vec<_>>())
}

fn skipped(degree: usize) -> Verification {
    Verification {
        agrees: true,
        detail: format!("skipped: degree {degree} exceeds {VERIFY_MAX_DEGREE}"),
    }
}

fn compare(what: &str, formula: usize, oracle: usize) -> Verification {
    Verification {
        agrees: formula == oracle,
        detail: format!("{what} {formula}, brute force {oracle}"),
    }
}

fn parse_perm(text: &str, degree: Option<usize>) -> Result<Permutation, CliError> {
    Ok(Permutation::parse(text, degree)?)
}

fn parse_list(text: &str, degree: Option<usize>) -> Result<Vec<Permutation>, CliError> {
    let list = parse_generators(text, degree)?;
    if list.is_empty() {
        return Err(CliError::Input(format!("no permutations in `{text}`")));
    }
    let n = list[0].degree();
    if let Some(p) = list.iter().find(|p| p.degree() != n) {
        return Err(CliError::Input(format!("`{p}` has degree {}, expected {n}", p.degree())));
    }
    Ok(list)
}

/// Remoteness by a direct double loop over `S_n`, independent of the metric-space code.
fn naive_remoteness(code: &[Permutation]) -> usize {
    let n = code[0].degree();
    all_permutations(n)
        .map(|p| code.iter().map(|c| p.distance(c)).max().unwrap_or(0))
        .min()
        .unwrap_or(0)
}

fn brute_group_remoteness(group: &PermutationGroup) -> Result<usize, CliError> {
    let elements = group.elements_with_cap(DEFAULT_ORDER_CAP)?;
    Ok(permutation_remoteness(&elements)?.0)
}

fn cmd_remoteness(code: Option<&str>, file: Option<&PathBuf>, degree: Option<usize>, verify: bool) -> Result<Report, CliError> {
    let code = match (code, file) {
        (Some(text), _) => parse_list(text, degree)?,
        (None, Some(path)) => io::read_code(path, degree)?,
        (None, None) => return Err(CliError::Input("give --code or --file".into())),
    };
    let (space, s) = permutation_summary(&code)?;
    let n = space.degree();
    let mut report = Report::new(
        "remoteness",
        json!({
            "degree": n,
            "size": code.len(),
            "remoteness": s.remoteness,
            "witness": perm_json(space.point(s.witness)),
            "radius": s.radius,
            "diameter": s.diameter,
            "covering_radius": s.covering_radius,
            "mu_count": s.mu_count,
        }),
    );
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("remoteness", s.remoteness, naive_remoteness(&code))
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_pair(sigma: &str, degree: Option<usize>, verify: bool) -> Result<Report, CliError> {
    let sigma = parse_perm(sigma, degree)?;
    let n = sigma.degree();
    let a = pair_remoteness(&sigma)?;
    let id = Permutation::identity(n);
    let attained = a.minimal_permutation.distance(&id).max(a.minimal_permutation.distance(&sigma));
    let mut report = Report::new(
        "pair",
        json!({
            "degree": n,
            "d": a.d,
            "partitionable": a.partitionable,
            "remoteness": a.remoteness,
            "minimal_permutation": perm_json(&a.minimal_permutation),
            "straddle": a.straddle,
        }),
    );
    report.failed = attained != a.remoteness;
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("formula", a.remoteness, permutation_remoteness(&[id, sigma])?.0)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn build_group(generators: &str, degree: Option<usize>) -> Result<PermutationGroup, CliError> {
    let gens = parse_list(generators, degree)?;
    let n = degree.unwrap_or(gens[0].degree());
    Ok(PermutationGroup::new(n, gens)?)
}

fn cmd_group(generators: &str, degree: Option<usize>, verify: bool) -> Result<Report, CliError> {
    let group = build_group(generators, degree)?;
    let n = group.degree();
    let transitive = group.is_transitive();
    let mut result = json!({
        "degree": n,
        "order": group.order().to_string(),
        "orbits": group.orbits(),
        "transitive": transitive,
        "regular": group.is_regular(),
    });
    let remoteness = if transitive {
        let orbitals = group.orbitals();
        let a = transitive_remoteness(&group)?;
        result["two_transitive"] = json!(group.is_2transitive());
        result["rank"] = json!(orbitals.rank());
        result["suborbit_sizes"] = json!(orbitals.suborbit_sizes());
        result["decision"] = json!(a.decision.name());
        result["witness"] = a.witness.as_ref().map_or(Value::Null, perm_json);
        a.remoteness
    } else {
        if n > EXACT_MAX_DEGREE {
            return Err(CliError::Input(format!(
                "intransitive group of degree {n}: brute force is limited to degree {EXACT_MAX_DEGREE}"
            )));
        }
        let elements = group.elements_with_cap(DEFAULT_ORDER_CAP)?;
        let (r, w) = permutation_remoteness(&elements)?;
        result["decision"] = json!("brute-force");
        result["witness"] = perm_json(&w);
        r
    };
    result["remoteness"] = json!(remoteness);
    let mut report = Report::new("group", result);
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("computed", remoteness, brute_group_remoteness(&group)?)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_cyclic(generator: &str, degree: Option<usize>, verify: bool) -> Result<Report, CliError> {
    let g = parse_perm(generator, degree)?;
    let n = g.degree();
    let a = cyclic_group_remoteness(&g);
    let attained = max_distance_to_powers(&g, &a.witness);
    let mut report = Report::new(
        "cyclic",
        json!({
            "degree": n,
            "order": g.order(),
            "cycles": a.cycles,
            "fixed_points": a.fixed_points,
            "parity": if a.parity.is_even() { "even" } else { "odd" },
            "remoteness": a.remoteness,
            "witness": perm_json(&a.witness),
            "witness_max_distance": attained,
        }),
    );
    report.failed = attained != a.remoteness;
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("formula", a.remoteness, brute_group_remoteness(&PermutationGroup::cyclic(&g))?)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_dihedral(n: usize, verify: bool) -> Result<Report, CliError> {
    let (r, witness) = dihedral_remoteness(n)?;
    let mut report = Report::new(
        "dihedral",
        json!({
            "n": n,
            "remoteness": r,
            "witness": witness.as_ref().map_or(Value::Null, perm_json),
        }),
    )
    .with_text(format!("{r}\n"));
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("formula", r, brute_group_remoteness(&PermutationGroup::dihedral(n)?)?)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_latin(order: Option<usize>, file: Option<&PathBuf>, k: Option<usize>, bachelor: bool, verify: bool) -> Result<Report, CliError> {
    let square = match (order, file) {
        (_, Some(path)) => io::read_latin(path)?,
        (Some(n), None) => {
            if n == 0 || n > 32 {
                return Err(LatinError::InvalidOrder(n).into());
            }
            cyclic_latin(n)
        }
        (None, None) => return Err(CliError::Input("give --order or --file".into())),
    };
    let n = square.order();
    let transversal = find_transversal(&square);
    // A transversal is a permutation at distance n - 1 from every row.
    let corollary = if transversal.is_some() { n - 1 } else { n };
    let mut result = json!({
        "order": n,
        "cyclic": square.is_cyclic(),
        "square": square_rows(&square),
        "transversal": transversal.as_ref().map_or(Value::Null, |t| perm_json(&t.as_permutation(&square))),
        "rows_remoteness": corollary,
    });
    if let Some(k) = k {
        result["k"] = json!(k);
        if n <= EXACT_MAX_DEGREE {
            let (bound, exact) = first_k_rows_remoteness(&square, k)?;
            result["k_rows_bound"] = json!(bound);
            result["k_rows_remoteness"] = json!(exact);
        } else {
            result["k_rows_bound"] = json!(first_k_rows_bound(&square, k)?);
        }
    }
    if bachelor {
        let cells = uncovered_cells(&square);
        result["bachelor_cells"] = json!(cells);
    }
    let mut report = Report::new("latin", result);
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            compare("rows remoteness", corollary, permutation_remoteness(&square.rows())?.0)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_bachelor(order: usize, seed: u64, attempts: u64, out: Option<&PathBuf>, verify: bool) -> Result<Report, CliError> {
    if order > 5 {
        eprintln!("searching for a bachelor square of order {order} ({BACHELOR_WORKERS} streams, {attempts} attempts each)");
    }
    let ext = extended_latin_code(order, seed, BACHELOR_WORKERS, attempts)?;
    let square = &ext.bachelor.square;
    if let Some(path) = out {
        io::write_latin(path, square)?;
    }
    let mut result = json!({
        "order": order,
        "seed": seed,
        "square": square_rows(square),
        "cell": ext.bachelor.cell,
        "code": perms_json(&ext.code),
        "code_size": ext.code.len(),
    });
    let mut failed = false;
    if order <= EXACT_MAX_DEGREE {
        let r = permutation_remoteness(&ext.code)?.0;
        result["remoteness"] = json!(r);
        failed = r != order;
    }
    let mut report = Report::new("bachelor", result);
    report.failed = failed;
    if verify {
        report.verification = Some(if order <= VERIFY_MAX_DEGREE {
            compare("extended code remoteness", order, naive_remoteness(&ext.code))
        } else {
            skipped(order)
        });
    }
    Ok(report)
}

fn cmd_rgraph(generators: &str, degree: Option<usize>, edges: Option<&PathBuf>, verify: bool) -> Result<Report, CliError> {
    let group = build_group(generators, degree)?;
    let n = group.degree();
    let graph = RemotenessGraph::build(&group)?;
    if let Some(path) = edges {
        io::write_edge_list(path, &graph)?;
    }
    let stability = stability_number_parallel(&graph);
    let stats = graph_stats(&graph);
    let witness = stability.permutation(&graph);
    let mut report = Report::new(
        "rgraph",
        json!({
            "degree": n,
            "vertices": stats.vertices,
            "edges": stats.edges,
            "valency": stats.valency,
            "formula_valency": stats.formula_valency(),
            "alpha": stability.alpha,
            "witness": witness.as_ref().map_or(Value::Null, perm_json),
            "clique_number": stats.clique_number,
            "strongly_regular": stats.strongly_regular,
        }),
    );
    report.failed = stats.valency != stats.formula_valency();
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            let brute = brute_group_remoteness(&group)?;
            let from_alpha = if stability.alpha == n { n - 1 } else { n };
            compare("remoteness from alpha", from_alpha, brute)
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_mtable(n: usize, budget: u64, verify: bool) -> Result<Report, CliError> {
    let space = SymmetricSpace::new(n)?;
    let mut rows = Vec::new();
    let mut text = format!("{:>2}  {:<16} {:>4}  {:>5}\n", "t", "outcome", "m", "lower");
    let mut agrees = true;
    for t in 0..=n {
        eprintln!("m(S_{n}, {t}) ...");
        let outcome = m_exact(&space, t, budget);
        let lower = (t >= 1).then(|| symmetric_m_lower_bound(n, t));
        let (kind, m, code) = match &outcome {
            MOutcome::Found { size, code } => {
                let perms: Vec<Permutation> = code.iter().map(|&i| space.point(i).clone()).collect();
                if verify && n <= VERIFY_MAX_DEGREE {
                    agrees &= naive_remoteness(&perms) >= t;
                }
                ("found", Some(*size), perms_json(&perms))
            }
            MOutcome::Unattainable => ("unattainable", None, Value::Null),
            MOutcome::BudgetExceeded { .. } => ("budget-exceeded", None, Value::Null),
        };
        let (evaluated, level) = match outcome {
            MOutcome::BudgetExceeded { evaluated, level } => (Some(evaluated), Some(level)),
            _ => (None, None),
        };
        let _ = writeln!(
            text,
            "{t:>2}  {kind:<16} {:>4}  {:>5}",
            m.map_or("-".to_string(), |v| v.to_string()),
            lower.map_or("-".to_string(), |v| v.to_string())
        );
        rows.push(json!({
            "t": t,
            "outcome": kind,
            "m": m,
            "code": code,
            "lower_bound": lower,
            "evaluated": evaluated,
            "stopped_at_level": level,
        }));
    }
    let mut report = Report::new("mtable", json!({ "n": n, "budget": budget, "rows": rows })).with_text(text);
    if verify {
        report.verification = Some(if n <= VERIFY_MAX_DEGREE {
            Verification {
                agrees,
                detail: "every code found has brute-force remoteness at least t".into(),
            }
        } else {
            skipped(n)
        });
    }
    Ok(report)
}

fn cmd_table() -> Result<Report, CliError> {
    eprintln!("loading catalog");
    let entries = load_catalog()?;
    eprintln!("checking {} groups", entries.len());
    let table = verify_table(&entries);
    let value = serde_json::to_value(&table).expect("table report serializes");
    let mut report = Report::new("table", value).with_text(table.to_text());
    report.failed = !table.pass;
    Ok(report)
}

fn bounds_rows<S: FiniteMetricSpace>(space: &S, ts: &[usize], symmetric_n: Option<usize>) -> Vec<Value> {
    ts.iter()
        .map(|&t| {
            let published = bound_m(space, t).ok();
            let cover = set_cover_bounds(space, t).ok();
            json!({
                "t": t,
                "published_lower": published.map(|b| b.lower),
                "published_upper": published.map(|b| b.upper),
                "set_cover_lower": cover.map(|b| b.lower),
                "set_cover_upper": cover.map(|b| b.upper),
                "greedy_bound": greedy_size_bound(space, t).ok(),
                "symmetric_lower": symmetric_n.filter(|&n| t <= n).map(|n| symmetric_m_lower_bound(n, t)),
            })
        })
        .collect()
}

fn cmd_bounds(n: usize, q: Option<usize>, t: Option<usize>, verify: bool) -> Result<Report, CliError> {
    let (name, rows, exact) = match q {
        Some(q) => {
            let space = HammingSpace::new(n, q)?;
            let ts = thresholds(&space, t)?;
            let exact = verify.then(|| exact_column(&space, &ts));
            (format!("H({n},{q})"), bounds_rows(&space, &ts, None), exact)
        }
        None => {
            let space = SymmetricSpace::new(n)?;
            let ts = thresholds(&space, t)?;
            let exact = verify.then(|| exact_column(&space, &ts));
            (format!("S_{n}"), bounds_rows(&space, &ts, Some(n)), exact)
        }
    };
    let mut text = format!("bounds on m(X, t) for X = {name}\n");
    let _ = writeln!(text, "{:>2}  {:>9} {:>9}  {:>9} {:>9}  {:>6}", "t", "pub.low", "pub.up", "cover.low", "cover.up", "greedy");
    let cell = |v: &Value| v.as_f64().map_or("-".to_string(), |x| format!("{x:.3}"));
    for r in &rows {
        let _ = writeln!(
            text,
            "{:>2}  {:>9} {:>9}  {:>9} {:>9}  {:>6}",
            r["t"],
            cell(&r["published_lower"]),
            cell(&r["published_upper"]),
            cell(&r["set_cover_lower"]),
            cell(&r["set_cover_upper"]),
            r["greedy_bound"].as_u64().map_or("-".to_string(), |v| v.to_string())
        );
    }
    let mut report = Report::new("bounds", json!({ "space": name, "rows": rows })).with_text(text);
    if let Some(exact) = exact {
        let mut agrees = true;
        let mut detail = String::from("exact m within set-cover bounds:");
        for (row, m) in rows.iter().zip(&exact) {
            if let (Some(m), Some(lo), Some(hi)) = (m, row["set_cover_lower"].as_f64(), row["set_cover_upper"].as_f64()) {
                agrees &= (*m as f64) >= lo - 1e-9 && (*m as f64) <= hi + 1e-9;
                let _ = write!(detail, " t={}:{m}", row["t"]);
            }
        }
        report.verification = Some(Verification { agrees, detail });
    }
    Ok(report)
}

fn thresholds<S: FiniteMetricSpace>(space: &S, t: Option<usize>) -> Result<Vec<usize>, CliError> {
    match t {
        Some(0) => Err(CliError::Input("t must be at least 1".into())),
        Some(t) => Ok(vec![t]),
        None => Ok((1..=space_radius(space)).collect()),
    }
}

/// Exact `m(X, t)` under a small budget, for the `--verify` comparison.
fn exact_column<S: FiniteMetricSpace>(space: &S, ts: &[usize]) -> Vec<Option<usize>> {
    ts.iter().map(|&t| m_exact(space, t, 10_000_000).size()).collect()
}
