//! Orbit atlas for line-stabilizer actions on complete flags: enumeration
//! dumps, the orbit-count triangle, weak-order graph export, generating-
//! series tables, and a one-shot verification suite.

use std::env;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use orbit_atlas::checks::{all_checks, Config};
use orbit_atlas::dot::graph_to_dot;
use orbit_atlas::dto::{DecoratedDto, FlagDto, GraphDto, PairDto, PartialDto, PilDto};
use orbit_atlas_core::egf::{orbit_count_series, total_count_series, Series};
use orbit_atlas_core::monoid::weak_order_graph;
use orbit_atlas_core::pil::{
    count_orbits, count_pil, count_pil_with_list, enumerate_partial, enumerate_pil,
    enumerate_pil_with_list,
};
use orbit_atlas_core::reps::{enumerate_decorated, enumerate_flags, enumerate_std_pairs};

#[derive(Parser)]
#[command(
    name = "orbit-atlas",
    version,
    about = "Enumerates and counts line-stabilizer orbits on complete flags"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump one family of orbit representatives as a JSON array.
    Enumerate {
        /// Degree of the flags.
        #[arg(long)]
        n: usize,
        /// Stabilizer index for decorated/flags/pairs; distinguished-list
        /// length for pil-lists.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Write here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Orbit-count triangle as ragged CSV: n, counts for i = 1..n, row sum.
    Triangle {
        #[arg(long = "max-n")]
        max_n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export the weak-order graph of standardized pairs.
    Graph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        i: usize,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run every named consistency check and report pass/fail.
    Verify {
        /// Exhaustive-suite degree bound (at most 7).
        #[arg(long = "max-n", default_value_t = 5)]
        max_n: usize,
        /// Series truncation order.
        #[arg(long, default_value_t = 12)]
        order: usize,
    },
    /// Coefficient table of a counting series as CSV: n, [x^n], n!·[x^n].
    Sequence {
        #[arg(long, value_enum)]
        series: SeriesKind,
        /// Shift exponent for the shifted series.
        #[arg(long)]
        i: Option<usize>,
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    /// Decorated permutations (w, delta).
    Decorated,
    /// Flags in i-standard form.
    Flags,
    /// Standardized pairs of Weyl elements.
    Pairs,
    /// Partitions of {1..n} into ordered lists.
    Pils,
    /// Partitions into lists with a distinguished list of length i.
    PilLists,
    /// Strict partial permutations of {1..n}.
    Partial,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesKind {
    /// (e^{x/(1-x)} - x)/(1-x): all orbits over every stabilizer index.
    Total,
    /// e^{x/(1-x)}: partitions into ordered lists.
    Pil,
    /// x^i e^{x/(1-x)}: orbits with co-rank i.
    Shifted,
}

/// Largest orbit family an enumeration command will materialize; the
/// closed-form predicted count is compared against this before any work.
const DEFAULT_GUARD: u64 = 10_000_000;

fn guard_limit() -> Result<BigUint, String> {
    match env::var("ORBIT_ATLAS_GUARD") {
        Ok(raw) => raw
            .parse::<BigUint>()
            .map_err(|_| format!("ORBIT_ATLAS_GUARD is not a non-negative integer: {:?}", raw)),
        Err(_) => Ok(BigUint::from(DEFAULT_GUARD)),
    }
}

fn check_guard(what: &str, predicted: &BigUint) -> Result<(), String> {
    let limit = guard_limit()?;
    if *predicted > limit {
        return Err(format!(
            "refusing to enumerate {}: predicted count {} exceeds the guard {} \
             (set ORBIT_ATLAS_GUARD to raise it)",
            what, predicted, limit
        ));
    }
    Ok(())
}

fn require_index(n: usize, i: Option<usize>) -> Result<usize, String> {
    let i = i.ok_or("this kind needs --i")?;
    if i < 1 || i > n {
        return Err(format!("--i must lie in 1..={}, got {}", n, i));
    }
    Ok(i)
}

/// JSON array with one compact element per line: parseable as one document
/// yet friendly to line-based tools.
fn json_dump<T: serde::Serialize>(items: &[T]) -> Result<String, String> {
    let mut text = String::from("[");
    for (k, item) in items.iter().enumerate() {
        text.push_str(if k == 0 { "\n" } else { ",\n" });
        text.push_str(&serde_json::to_string(item).map_err(|e| e.to_string())?);
    }
    text.push_str("\n]\n");
    Ok(text)
}

fn cmd_enumerate(n: usize, i: Option<usize>, kind: Kind) -> Result<String, String> {
    if n < 1 {
        return Err("--n must be at least 1".to_string());
    }
    match kind {
        Kind::Decorated => {
            let i = require_index(n, i)?;
            check_guard("decorated permutations", &count_orbits(n, i))?;
            json_dump(&enumerate_decorated(n, i).iter().map(DecoratedDto::from).collect::<Vec<_>>())
        }
        Kind::Flags => {
            let i = require_index(n, i)?;
            check_guard("standard flags", &count_orbits(n, i))?;
            json_dump(&enumerate_flags(n, i).iter().map(FlagDto::from).collect::<Vec<_>>())
        }
        Kind::Pairs => {
            let i = require_index(n, i)?;
            check_guard("standardized pairs", &count_orbits(n, i))?;
            json_dump(&enumerate_std_pairs(n, i).iter().map(PairDto::from).collect::<Vec<_>>())
        }
        Kind::Pils => {
            check_guard("list partitions", &count_pil(n))?;
            let ground: Vec<usize> = (1..=n).collect();
            let dtos: Vec<PilDto> = enumerate_pil(&ground)
                .iter()
                .map(|p| PilDto {
                    blocks: p.blocks().to_vec(),
                    distinguished: None,
                })
                .collect();
            json_dump(&dtos)
        }
        Kind::PilLists => {
            let k = i.ok_or("this kind needs --i (the distinguished-list length)")?;
            if k > n {
                return Err(format!("--i must lie in 0..={}, got {}", n, k));
            }
            check_guard("distinguished list partitions", &count_pil_with_list(n, k))?;
            json_dump(&enumerate_pil_with_list(n, k).iter().map(PilDto::from).collect::<Vec<_>>())
        }
        Kind::Partial => {
            let total: BigUint = (1..=n).map(|i| count_orbits(n, i)).sum();
            check_guard("partial permutations", &total)?;
            json_dump(&enumerate_partial(n).iter().map(PartialDto::from).collect::<Vec<_>>())
        }
    }
}

fn cmd_triangle(max_n: usize) -> Result<String, String> {
    if max_n < 1 {
        return Err("--max-n must be at least 1".to_string());
    }
    let mut out = String::new();
    for n in 1..=max_n {
        let counts: Vec<BigUint> = (1..=n).map(|i| count_orbits(n, i)).collect();
        let sum: BigUint = counts.iter().sum();
        write!(out, "{}", n).unwrap();
        for c in &counts {
            write!(out, ",{}", c).unwrap();
        }
        writeln!(out, ",{}", sum).unwrap();
    }
    Ok(out)
}

fn cmd_graph(n: usize, i: usize, format: GraphFormat) -> Result<String, String> {
    if n < 1 || i < 1 || i > n {
        return Err(format!("need 1 <= i <= n, got n = {}, i = {}", n, i));
    }
    check_guard("weak-order graph nodes", &count_orbits(n, i))?;
    let g = weak_order_graph(n, i);
    match format {
        GraphFormat::Dot => Ok(graph_to_dot(&g)),
        GraphFormat::Json => {
            let mut text =
                serde_json::to_string_pretty(&GraphDto::from(&g)).map_err(|e| e.to_string())?;
            text.push('\n');
            Ok(text)
        }
    }
}

fn cmd_verify(max_n: usize, order: usize) -> Result<(String, bool), String> {
    if max_n < 1 || max_n > 7 {
        return Err("--max-n must lie in 1..=7 for the exhaustive suites".to_string());
    }
    let cfg = Config { max_n, order };
    let mut out = String::new();
    let mut failed = 0usize;
    let checks = all_checks();
    let total = checks.len();
    for check in checks {
        match (check.run)(&cfg) {
            Ok(info) => {
                writeln!(out, "pass {}", check.name).unwrap();
                for line in info {
                    writeln!(out, "  {}", line).unwrap();
                }
            }
            Err(msg) => {
                failed += 1;
                writeln!(out, "FAIL {}: {}", check.name, msg).unwrap();
            }
        }
    }
    writeln!(
        out,
        "verify: {} checks, {} passed, {} failed",
        total,
        total - failed,
        failed
    )
    .unwrap();
    Ok((out, failed == 0))
}

fn cmd_sequence(series: SeriesKind, i: Option<usize>, order: usize) -> Result<String, String> {
    let s: Series = match series {
        SeriesKind::Total => total_count_series(order),
        SeriesKind::Pil => orbit_count_series(0, order),
        SeriesKind::Shifted => {
            let shift = i.ok_or("--series shifted needs --i (the shift exponent)")?;
            if shift > order {
                return Err(format!("--i must lie in 0..={}, got {}", order, shift));
            }
            orbit_count_series(shift, order)
        }
    };
    let mut out = String::from("n,coefficient,count\n");
    for n in 0..=order {
        writeln!(out, "{},{},{}", n, s.coeff(n), s.egf_value(n)).unwrap();
    }
    Ok(out)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {}", path.display(), e)),
        None => {
            use std::io::Write;
            // A consumer hanging up mid-pipe is not an error worth a panic.
            match std::io::stdout().write_all(text.as_bytes()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => {
                    Err(format!("cannot write to stdout: {}", e))
                }
                _ => Ok(()),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, Option<PathBuf>, bool), String> = match cli.command {
        Cmd::Enumerate { n, i, kind, out } => {
            if matches!(kind, Kind::Decorated | Kind::Flags | Kind::Pairs) && i.is_none() {
                Cli::command()
                    .error(
                        clap::error::ErrorKind::MissingRequiredArgument,
                        "--i is required for this kind",
                    )
                    .exit();
            }
            cmd_enumerate(n, i, kind).map(|t| (t, out, true))
        }
        Cmd::Triangle { max_n, out } => cmd_triangle(max_n).map(|t| (t, out, true)),
        Cmd::Graph { n, i, format, out } => cmd_graph(n, i, format).map(|t| (t, out, true)),
        Cmd::Verify { max_n, order } => cmd_verify(max_n, order).map(|(t, ok)| (t, None, ok)),
        Cmd::Sequence { series, i, order, out } => {
            cmd_sequence(series, i, order).map(|t| (t, out, true))
        }
    };
    match result {
        Ok((text, out, ok)) => {
            if let Err(msg) = emit(&text, out.as_ref()) {
                eprintln!("error: {}", msg);
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {}", msg);
            ExitCode::FAILURE
        }
    }
}
