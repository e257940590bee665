//! `tms`: model checking, theorem harness runs, and counterexample search
//! for finite topological measure spaces.
//!
//! Exit codes: 0 on success / assertions hold, 1 when a violation, assertion
//! failure, or oracle mismatch is found (first violation goes to stderr with
//! the model source), 2 on usage or parse errors. Diagnostics go to stderr;
//! machine-readable output goes to stdout only.

use std::fs;
use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tms_core::harness::run_harness;
use tms_core::oracle;
use tms_core::record::{record_from_report, write_report, ReportFormat};
use tms_core::registry::check_implications;
use tms_core::report::{evaluate_report, Property};
use tms_core::{
    builtins, enumerate_spaces, enumerate_topologies, eval_expr, parse_mass_list,
    parse_property_expr, EnumConfig, HarnessConfig, Mass, SigmaMode, Space,
};

#[derive(Parser)]
#[command(
    name = "tms",
    version,
    about = "exact model checker for finite topological measure spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Jsonl,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SigmaArg {
    /// every σ-algebra between Borel and the powerset
    All,
    /// the powerset σ-algebra only
    Powerset,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a model file, report all properties, and check
    /// the implication registry on it.
    Check {
        file: String,
        /// Additionally run all brute-force definitional oracles and
        /// compare them with the optimized deciders.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "human")]
        format: Format,
    },
    /// Print the built-in example table.
    Examples {
        /// Exit nonzero if any computed report differs from the expected
        /// one.
        #[arg(long)]
        assert: bool,
    },
    /// Run the implication registry over an enumerated model family.
    Theorems {
        #[arg(long)]
        n: usize,
        /// Comma-separated mass grid, e.g. `0,1/2,1,inf`.
        #[arg(long, default_value = "0,1,inf")]
        values: String,
        /// One representative per homeomorphism class.
        #[arg(long)]
        unlabeled: bool,
        #[arg(long, value_enum, default_value = "powerset")]
        sigma: SigmaArg,
        /// Worker threads.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Stream report records of enumerated models satisfying a property
    /// expression, sorted by canonical model key.
    Search {
        #[arg(long)]
        n: usize,
        /// Property expression, e.g. `outer & !inner`.
        #[arg(long = "where")]
        where_expr: String,
        #[arg(long, default_value = "0,1,inf")]
        values: String,
        /// Keep at most this many records (after sorting).
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        unlabeled: bool,
        /// Write records to a file instead of stdout.
        #[arg(long)]
        out: Option<String>,
    },
    /// Topology enumeration utility.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        unlabeled: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check {
            file,
            oracle,
            format,
        } => cmd_check(&file, oracle, format),
        Command::Examples { assert } => cmd_examples(assert),
        Command::Theorems {
            n,
            values,
            unlabeled,
            sigma,
            jobs,
        } => cmd_theorems(n, &values, unlabeled, sigma, jobs),
        Command::Search {
            n,
            where_expr,
            values,
            limit,
            unlabeled,
            out,
        } => cmd_search(n, &where_expr, &values, limit, unlabeled, out.as_deref()),
        Command::Enumerate {
            n,
            count_only,
            unlabeled,
        } => cmd_enumerate(n, count_only, unlabeled),
    };
    ExitCode::from(code)
}

fn parse_grid(values: &str) -> Result<Vec<Mass>, u8> {
    parse_mass_list(values).map_err(|e| {
        eprintln!("invalid --values: {e}");
        2
    })
}

fn cmd_check(file: &str, with_oracle: bool, format: Format) -> u8 {
    let text = match fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("cannot read {file}: {e}");
            return 2;
        }
    };
    let space = match tms_core::parse_model(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{file}: {e}");
            return 2;
        }
    };
    let report = evaluate_report(&space);
    let record = record_from_report(&space, &report);

    match format {
        Format::Jsonl => {
            let mut stdout = io::stdout().lock();
            write_report(&[record], ReportFormat::Jsonl, &mut stdout).expect("stdout");
        }
        Format::Human => {
            println!("model: {file}");
            println!("points: {}", space.points().join(" "));
            for (name, holds) in &record.properties {
                println!("{name}={holds}");
            }
            for (name, witness) in &record.witnesses {
                println!("witness {name}: {witness}");
            }
        }
    }

    let mut failed = false;
    let violations = check_implications(&space, &report);
    if !violations.is_empty() {
        failed = true;
        for v in &violations {
            eprintln!("implication violation: {v}");
        }
    } else if format == Format::Human {
        println!("implications: ok");
    }

    if with_oracle {
        if space.points().len() > oracle::MAX_ORACLE_POINTS {
            eprintln!(
                "--oracle supports at most {} points",
                oracle::MAX_ORACLE_POINTS
            );
            return 2;
        }
        let mismatches = oracle::compare_with_deciders(&space);
        if mismatches.is_empty() {
            if format == Format::Human {
                println!("oracle: all deciders agree");
            }
        } else {
            failed = true;
            for m in &mismatches {
                eprintln!(
                    "oracle mismatch on {}: decider={} oracle={}",
                    m.what, m.decider, m.oracle
                );
            }
        }
    }

    u8::from(failed)
}

fn cmd_examples(assert: bool) -> u8 {
    let examples = builtins::builtin_examples();
    let mut header = vec!["name".to_string()];
    header.extend(Property::ALL.iter().map(|p| p.name().to_string()));
    let mut rows = vec![header];
    let mut failures = Vec::new();

    for e in &examples {
        let report = evaluate_report(&e.space);
        let mut row = vec![e.name.to_string()];
        row.extend(Property::ALL.iter().map(|p| {
            if report.holds(*p) {
                "yes".to_string()
            } else {
                "no".to_string()
            }
        }));
        rows.push(row);
        if assert {
            for p in e.expected.mismatches(&report) {
                failures.push(format!(
                    "{}: {} expected {}, computed {}",
                    e.name,
                    p.name(),
                    e.expected.holds(p),
                    report.holds(p)
                ));
            }
        }
    }

    let widths: Vec<usize> = (0..rows[0].len())
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap())
        .collect();
    let mut stdout = io::stdout().lock();
    for row in &rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:<width$}", width = widths[c]))
            .collect();
        writeln!(stdout, "{}", line.join("  ").trim_end()).expect("stdout");
    }

    if assert && !failures.is_empty() {
        for f in &failures {
            eprintln!("assertion failed: {f}");
        }
        return 1;
    }
    0
}

fn build_config(
    n: usize,
    values: &str,
    unlabeled: bool,
    sigma: SigmaArg,
) -> Result<EnumConfig, u8> {
    let mut config = EnumConfig::new(n);
    config.mass_grid = parse_grid(values)?;
    config.unlabeled = unlabeled;
    config.sigma_mode = match sigma {
        SigmaArg::All => SigmaMode::AllRefinements,
        SigmaArg::Powerset => SigmaMode::Powerset,
    };
    Ok(config)
}

fn cmd_theorems(n: usize, values: &str, unlabeled: bool, sigma: SigmaArg, jobs: usize) -> u8 {
    let config = match build_config(n, values, unlabeled, sigma) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let spaces = match enumerate_spaces(&config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let summary = run_harness(spaces, &HarnessConfig { jobs });
    print!("{}", summary.render());
    if summary.violations.is_empty() {
        0
    } else {
        let first = &summary.violations[0];
        eprintln!(
            "violation {}[{}]: {}",
            first.entry, first.clause, first.detail
        );
        eprintln!("model:\n{}", first.model_source);
        1
    }
}

fn cmd_search(
    n: usize,
    where_expr: &str,
    values: &str,
    limit: Option<usize>,
    unlabeled: bool,
    out: Option<&str>,
) -> u8 {
    let expr = match parse_property_expr(where_expr) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("invalid --where expression: {e}");
            return 2;
        }
    };
    let config = match build_config(n, values, unlabeled, SigmaArg::Powerset) {
        Ok(c) => c,
        Err(code) => return code,
    };
    let spaces = match enumerate_spaces(&config) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };

    // Evaluation fans out to the worker pool; the canonical sort below makes
    // the output independent of production order.
    let spaces: Vec<Space> = spaces.collect();
    use rayon::prelude::*;
    let mut records: Vec<_> = spaces
        .par_iter()
        .filter_map(|space| {
            let report = evaluate_report(space);
            eval_expr(&expr, &report).then(|| record_from_report(space, &report))
        })
        .collect();
    records.sort_by(|a, b| a.canonical_key.cmp(&b.canonical_key));
    if let Some(k) = limit {
        records.truncate(k);
    }

    let result = match out {
        Some(path) => fs::File::create(path).and_then(|mut f| {
            write_report(&records, ReportFormat::Jsonl, &mut f)?;
            f.flush()
        }),
        None => {
            let mut stdout = io::stdout().lock();
            write_report(&records, ReportFormat::Jsonl, &mut stdout)
        }
    };
    if let Err(e) = result {
        eprintln!("E_IO: {e}");
        return 2;
    }
    0
}

fn cmd_enumerate(n: usize, count_only: bool, unlabeled: bool) -> u8 {
    let topologies = match enumerate_topologies(n, unlabeled) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{e}");
            return 2;
        }
    };
    let mut stdout = io::stdout().lock();
    if count_only {
        writeln!(stdout, "{}", topologies.len()).expect("stdout");
        return 0;
    }
    let names = tms_core::enumerate::point_names(n);
    for t in &topologies {
        let opens: Vec<String> = t
            .opens()
            .iter()
            .map(|o| o.display(&names).to_string())
            .collect();
        writeln!(stdout, "{}", opens.join(" ")).expect("stdout");
    }
    0
}
