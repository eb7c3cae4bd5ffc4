//! Command-line front end. All real work lives in the library; this binary
//! parses arguments, wires files to library calls, and maps outcomes to
//! exit codes: 0 success/valid, 1 invalid input or parse failure,
//! 2 negative verdict (invalid decomposition, false inequality,
//! disagreeing verification row), 3 resource or budget limit.

use clap::{Args, Parser, Subcommand};
use kneser_tw::exact::{self, Budget, TwStatus};
use kneser_tw::graphs::{
    brute_force_independence, build_generalized_kneser_with_cap, build_johnson_complement,
    build_johnson_complement_with_cap, build_johnson_with_cap, ekr_independence_number,
    ekr_star_independent_set, Graph, ParamTriple, DEFAULT_VERTEX_CAP,
};
use kneser_tw::pace;
use kneser_tw::separators::{check_p_separator, min_p_separator_order, Frac};
use kneser_tw::subsets::min_shadow_size;
use kneser_tw::td::{
    build_star_decomposition, decomposition_from_elimination_order, johnson_complement_witness,
    JohnsonWitness, TreeDecomposition, Verdict,
};
use kneser_tw::theorems::{
    binomial_gap_inequality, shadow_mass_inequality, shadow_mass_threshold, threshold_n0,
    upper_bound_dominance,
};
use kneser_tw::verify::{verify_gkneser_certificates, verify_johnson_complement};
use kneser_tw::Error;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "kneser-tw",
    about = "Generalized Kneser / Johnson-complement graphs: generation, exact treewidth, decomposition certificates, and formula verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph family as a PACE .gr file.
    Gen {
        /// gkneser | kneser | johnson | johnson-complement
        family: String,
        n: u32,
        k: u32,
        /// Intersection threshold; required for gkneser, implied 1 for kneser.
        t: Option<u32>,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Explicit-graph cap override.
        #[arg(long, default_value_t = DEFAULT_VERTEX_CAP)]
        max_vertices: u64,
    },
    /// Compute treewidth of a .gr file.
    Tw {
        gr: PathBuf,
        /// exact | bounds
        #[arg(long, default_value = "exact")]
        mode: String,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Write the certificate decomposition here.
        #[arg(long)]
        emit_td: Option<PathBuf>,
    },
    /// Build a tree decomposition for a .gr file.
    Decompose {
        gr: PathBuf,
        /// star | minfill | exact | figure1
        #[arg(long)]
        method: String,
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Validate a .td file against its .gr graph.
    Validate { gr: PathBuf, td: PathBuf },
    /// Check a treewidth theorem: 2 = exact sweep over Johnson complements,
    /// 1 = star certificates for generalized Kneser graphs at threshold.
    Verify {
        theorem: u32,
        #[arg(long)]
        max_vertices: Option<u64>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        t: Option<u32>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this path.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Sweep a counting inequality over a range of n.
    Inequalities {
        /// 2.1 | 2.2 | dominance
        id: String,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        t: u32,
        /// Inclusive range `a..b`; defaults to threshold..threshold+50.
        #[arg(long)]
        range: Option<String>,
        /// Balance parameter for 2.2, as a rational like 2/3.
        #[arg(long, default_value = "2/3")]
        p: String,
        #[arg(long)]
        json: bool,
    },
    /// Minimum shadow size: |shadow(first_family(m,n,k), g)|.
    Shadow { m: u64, n: u32, k: u32, g: u32 },
    /// Balanced-separator checks on a .gr file.
    Separator {
        gr: PathBuf,
        /// Balance parameter as a rational like 2/3.
        #[arg(long)]
        p: String,
        /// Comma-separated 1-based vertex ids to check as a separator.
        #[arg(long)]
        check: Option<String>,
        /// Search for the minimum separator order instead.
        #[arg(long)]
        min: bool,
    },
}

#[derive(Args)]
struct BudgetArgs {
    /// Time budget in seconds.
    #[arg(long, default_value_t = 60)]
    time_budget: u64,
    /// Memory budget in MiB.
    #[arg(long, default_value_t = 2048)]
    memory_budget: u64,
}

impl BudgetArgs {
    fn to_budget(&self) -> Budget {
        Budget {
            time_limit: std::time::Duration::from_secs(self.time_budget),
            memory_limit_bytes: self.memory_budget << 20,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Resource(_) => ExitCode::from(3),
                _ => ExitCode::from(1),
            }
        }
    }
}

fn run(cmd: Cmd) -> kneser_tw::Result<ExitCode> {
    match cmd {
        Cmd::Gen {
            family,
            n,
            k,
            t,
            out,
            max_vertices,
        } => cmd_gen(&family, n, k, t, out.as_deref(), max_vertices),
        Cmd::Tw {
            gr,
            mode,
            budget,
            emit_td,
        } => cmd_tw(&gr, &mode, &budget.to_budget(), emit_td.as_deref()),
        Cmd::Decompose {
            gr,
            method,
            out,
            budget,
        } => cmd_decompose(&gr, &method, out.as_deref(), &budget.to_budget()),
        Cmd::Validate { gr, td } => cmd_validate(&gr, &td),
        Cmd::Verify {
            theorem,
            max_vertices,
            k,
            t,
            json,
            out,
            budget,
        } => cmd_verify(
            theorem,
            max_vertices,
            k,
            t,
            json,
            out.as_deref(),
            &budget.to_budget(),
        ),
        Cmd::Inequalities {
            id,
            k,
            t,
            range,
            p,
            json,
        } => cmd_inequalities(&id, k, t, range.as_deref(), &p, json),
        Cmd::Shadow { m, n, k, g } => {
            println!("{}", min_shadow_size(m, n, k, g)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Separator { gr, p, check, min } => cmd_separator(&gr, &p, check.as_deref(), min),
    }
}

fn emit(out: Option<&Path>, content: &str) -> kneser_tw::Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn load_graph(path: &Path) -> kneser_tw::Result<Graph> {
    pace::parse_gr(&std::fs::read_to_string(path)?)
}

fn cmd_gen(
    family: &str,
    n: u32,
    k: u32,
    t: Option<u32>,
    out: Option<&Path>,
    cap: u64,
) -> kneser_tw::Result<ExitCode> {
    let g = match family {
        "gkneser" => {
            let t = t.ok_or_else(|| Error::InvalidInput("gkneser needs t".to_string()))?;
            build_generalized_kneser_with_cap(ParamTriple::new(n, k, t)?, cap)?
        }
        "kneser" => build_generalized_kneser_with_cap(ParamTriple::new(n, k, 1)?, cap)?,
        "johnson" => build_johnson_with_cap(n, k, cap)?,
        "johnson-complement" => {
            if n < k + 2 {
                return Err(Error::InvalidInput(format!(
                    "the Johnson complement is an empty graph for n < k+2, got (n,k) = ({n},{k})"
                )));
            }
            build_johnson_complement_with_cap(n, k, cap)?
        }
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown family `{other}` (expected gkneser, kneser, johnson, johnson-complement)"
            )))
        }
    };
    emit(out, &pace::write_gr(&g))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_tw(
    gr: &Path,
    mode: &str,
    budget: &Budget,
    emit_td: Option<&Path>,
) -> kneser_tw::Result<ExitCode> {
    let g = load_graph(gr)?;
    let result = match mode {
        "exact" => exact::exact_tw(&g, budget)?,
        "bounds" => exact::upper_bound_heuristic(&g),
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown mode `{other}` (expected exact or bounds)"
            )))
        }
    };
    if let (Some(path), Some(order)) = (emit_td, result.certificate.as_ref()) {
        let td = decomposition_from_elimination_order(&g, order)?;
        std::fs::write(path, pace::write_td(&td))?;
    }
    match result.status {
        TwStatus::Exact => {
            println!("{}", result.upper);
            Ok(ExitCode::SUCCESS)
        }
        TwStatus::Bounds => {
            println!("{}..{}", result.lower, result.upper);
            if mode == "exact" {
                eprintln!("budget exhausted before the exact value was proved");
                Ok(ExitCode::from(3))
            } else {
                Ok(ExitCode::SUCCESS)
            }
        }
    }
}

/// Independent set fed to the star construction: the EKR star when the graph
/// carries an applicable Kneser-family tag (usable at any size), otherwise a
/// brute-force maximum independent set (capped).
fn star_set(g: &Graph) -> kneser_tw::Result<Vec<usize>> {
    if let Some(star) = ekr_star_independent_set(g) {
        let (n, k, t) = match g.family() {
            kneser_tw::graphs::FamilyTag::GeneralizedKneser { n, k, t } => (n, k, t),
            kneser_tw::graphs::FamilyTag::JohnsonComplement { n, k } => (n, k, k - 1),
            _ => unreachable!("labelled families only"),
        };
        if ekr_independence_number(ParamTriple::new(n, k, t)?).applicable {
            return Ok(star);
        }
    }
    let alpha = brute_force_independence(g)?;
    // Recover a witness set greedily against the known size.
    let mut chosen: Vec<usize> = Vec::new();
    for v in 0..g.n_vertices() {
        let mut trial = chosen.clone();
        trial.push(v);
        if g.is_independent_set(&trial) {
            let rest = brute_force_on_exclusion(g, &trial)?;
            if trial.len() + rest == alpha {
                chosen = trial;
            }
        }
        if chosen.len() == alpha {
            break;
        }
    }
    Ok(chosen)
}

/// Maximum independent set size among vertices not adjacent to (or part of)
/// the fixed partial set.
fn brute_force_on_exclusion(g: &Graph, fixed: &[usize]) -> kneser_tw::Result<usize> {
    let n = g.n_vertices();
    let mut allowed: Vec<usize> = Vec::new();
    'outer: for v in 0..n {
        if fixed.contains(&v) {
            continue;
        }
        for &f in fixed {
            if g.has_edge(f, v) {
                continue 'outer;
            }
        }
        allowed.push(v);
    }
    // Build the induced subgraph on `allowed`.
    let mut edges = Vec::new();
    for (i, &u) in allowed.iter().enumerate() {
        for (j, &w) in allowed.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, w) {
                edges.push((i, j));
            }
        }
    }
    brute_force_independence(&Graph::from_edges(allowed.len(), &edges)?)
}

fn cmd_decompose(
    gr: &Path,
    method: &str,
    out: Option<&Path>,
    budget: &Budget,
) -> kneser_tw::Result<ExitCode> {
    let g = load_graph(gr)?;
    let td: TreeDecomposition = match method {
        "star" => {
            let s = star_set(&g)?;
            build_star_decomposition(&g, &s)?
        }
        "minfill" => {
            let res = exact::upper_bound_heuristic(&g);
            decomposition_from_elimination_order(&g, &res.certificate.expect("heuristic order"))?
        }
        "exact" => {
            let res = exact::exact_tw(&g, budget)?;
            if res.status != TwStatus::Exact {
                eprintln!("budget exhausted before the exact value was proved");
                return Ok(ExitCode::from(3));
            }
            decomposition_from_elimination_order(&g, &res.certificate.expect("exact order"))?
        }
        "figure1" => pinned_witness_for(&g)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown method `{other}` (expected star, minfill, exact, figure1)"
            )))
        }
    };
    debug_assert!(td.validate(&g)?.is_valid());
    eprintln!("width {}", td.width());
    emit(out, &pace::write_td(&td))?;
    Ok(ExitCode::SUCCESS)
}

/// The hand-pinned decomposition matching the given graph, which must be the
/// Johnson complement for (5,3) or (6,3) up to identical edge sets.
fn pinned_witness_for(g: &Graph) -> kneser_tw::Result<TreeDecomposition> {
    for (n, which) in [(5u32, JohnsonWitness::N5K3), (6, JohnsonWitness::N6K3)] {
        let reference = build_johnson_complement(n, 3)?;
        if g.n_vertices() == reference.n_vertices() && g.edges() == reference.edges() {
            return Ok(johnson_complement_witness(which).1);
        }
    }
    Err(Error::InvalidInput(
        "the pinned decomposition exists only for the Johnson complements (5,3) and (6,3)"
            .to_string(),
    ))
}

fn cmd_validate(gr: &Path, td_path: &Path) -> kneser_tw::Result<ExitCode> {
    let g = load_graph(gr)?;
    let td = pace::parse_td(&std::fs::read_to_string(td_path)?)?;
    match td.validate(&g)? {
        Verdict::Valid => {
            println!("valid width={}", td.width());
            Ok(ExitCode::SUCCESS)
        }
        Verdict::Violation(v) => {
            println!("invalid: {v}");
            Ok(ExitCode::from(2))
        }
    }
}

fn cmd_verify(
    theorem: u32,
    max_vertices: Option<u64>,
    k: Option<u32>,
    t: Option<u32>,
    json: bool,
    out: Option<&Path>,
    budget: &Budget,
) -> kneser_tw::Result<ExitCode> {
    let report = match theorem {
        1 => verify_gkneser_certificates(k, t, max_vertices.unwrap_or(DEFAULT_VERTEX_CAP))?,
        2 => verify_johnson_complement(max_vertices.unwrap_or(21), budget)?,
        other => {
            return Err(Error::InvalidInput(format!(
                "unknown theorem `{other}` (expected 1 or 2)"
            )))
        }
    };
    let rendered = if json {
        serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
    } else {
        report.render_table()
    };
    print!("{rendered}");
    if let Some(path) = out {
        std::fs::write(
            path,
            serde_json::to_string_pretty(&report).expect("report serializes"),
        )?;
    }
    Ok(if report.all_agree() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn parse_frac(s: &str) -> kneser_tw::Result<Frac> {
    let (num, den) = s
        .split_once('/')
        .ok_or_else(|| Error::InvalidInput(format!("rational `{s}` must look like 2/3")))?;
    let num: u64 = num
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad numerator in `{s}`")))?;
    let den: u64 = den
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad denominator in `{s}`")))?;
    if den == 0 {
        return Err(Error::InvalidInput("zero denominator".to_string()));
    }
    Ok(Frac::new(num, den))
}

fn parse_range(s: &str) -> kneser_tw::Result<(u32, u32)> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| Error::InvalidInput(format!("range `{s}` must look like 24..74")))?;
    let a: u32 = a
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range start in `{s}`")))?;
    let b: u32 = b
        .trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("bad range end in `{s}`")))?;
    if a > b {
        return Err(Error::InvalidInput(format!("empty range `{s}`")));
    }
    Ok((a, b))
}

fn cmd_inequalities(
    id: &str,
    k: u32,
    t: u32,
    range: Option<&str>,
    p: &str,
    json: bool,
) -> kneser_tw::Result<ExitCode> {
    if t >= k {
        return Err(Error::InvalidInput(format!(
            "need t < k, got (k,t) = ({k},{t})"
        )));
    }
    let frac = parse_frac(p)?;
    let (lo, hi) = match range {
        Some(s) => parse_range(s)?,
        None => {
            let n0 = match id {
                "2.2" => shadow_mass_threshold(k, t, frac)?,
                _ => threshold_n0(k, t),
            };
            let n0 = u32::try_from(n0)
                .map_err(|_| Error::InvalidInput("threshold too large to sweep".to_string()))?;
            (n0, n0 + 50)
        }
    };
    let mut rows = Vec::with_capacity((hi - lo + 1) as usize);
    for n in lo..=hi {
        let holds = match id {
            "2.1" => binomial_gap_inequality(n, k, t),
            "2.2" => shadow_mass_inequality(n, k, t, frac)?,
            "dominance" => upper_bound_dominance(n, k, t),
            other => {
                return Err(Error::InvalidInput(format!(
                    "unknown inequality `{other}` (expected 2.1, 2.2, dominance)"
                )))
            }
        };
        rows.push((n, holds));
    }
    let all_hold = rows.iter().all(|&(_, h)| h);
    if json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .map(|&(n, h)| serde_json::json!({"n": n, "holds": h}))
            .collect();
        let doc = serde_json::json!({
            "schema_version": kneser_tw::verify::REPORT_SCHEMA_VERSION,
            "inequality": id,
            "k": k,
            "t": t,
            "p": format!("{frac}"),
            "rows": items,
            "all_hold": all_hold,
        });
        println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
    } else {
        for &(n, h) in &rows {
            println!("{n} {h}");
        }
        println!("all {all_hold}");
    }
    Ok(if all_hold {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_separator(
    gr: &Path,
    p: &str,
    check: Option<&str>,
    min: bool,
) -> kneser_tw::Result<ExitCode> {
    let g = load_graph(gr)?;
    let frac = parse_frac(p)?;
    match (check, min) {
        (Some(list), false) => {
            let mut vertices = Vec::new();
            for field in list.split(',') {
                let v: usize = field
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidInput(format!("bad vertex id `{field}`")))?;
                if v == 0 || v > g.n_vertices() {
                    return Err(Error::InvalidInput(format!(
                        "vertex {v} outside 1..={}",
                        g.n_vertices()
                    )));
                }
                vertices.push(v - 1);
            }
            let report = check_p_separator(&g, &vertices, frac)?;
            let sizes: Vec<String> = report
                .component_sizes
                .iter()
                .map(usize::to_string)
                .collect();
            println!(
                "balanced={} components=[{}] remaining={}",
                report.balanced,
                sizes.join(","),
                report.remaining_vertices()
            );
            Ok(if report.balanced {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        (None, true) => {
            println!("{}", min_p_separator_order(&g, frac)?);
            Ok(ExitCode::SUCCESS)
        }
        _ => Err(Error::InvalidInput(
            "pass exactly one of --check <ids> or --min".to_string(),
        )),
    }
}
