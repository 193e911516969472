use clap::{Args, Parser, Subcommand};
use grouplat::poset::PosetKind;
use grouplat::report::{to_dot, write_scan_csv, AnalysisReport, VerifyReport};
use grouplat::scan::{scan_class_c, Family};
use grouplat::verify::{run_suites, Suite};
use grouplat::{build_group, validate_group, Analysis, Error, GroupSpec, Limits};
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

/// Subgroup lattices, conjugacy-class posets and two-interval covers of
/// small finite groups.
#[derive(Parser)]
#[command(name = "grouplat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Caps {
    /// Largest group order that will be constructed.
    #[arg(long, env = "GROUPLAT_MAX_ORDER", default_value_t = Limits::DEFAULT_MAX_ORDER)]
    max_order: usize,
    /// Largest number of subgroups that will be enumerated.
    #[arg(long, env = "GROUPLAT_MAX_SUBGROUPS", default_value_t = Limits::DEFAULT_MAX_SUBGROUPS)]
    max_subgroups: usize,
}

impl Caps {
    fn limits(self) -> Limits {
        Limits {
            max_order: self.max_order,
            max_subgroups: self.max_subgroups,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Build and validate a group, printing its elements.
    Build {
        spec: String,
        /// Also print the Cayley table.
        #[arg(long)]
        table: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run the full analysis pipeline on one group.
    Analyze {
        spec: String,
        /// Write the report as JSON (`-` for stdout).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write a Hasse diagram in DOT syntax.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Poset used for --dot.
        #[arg(long, env = "GROUPLAT_POSET", default_value = "Lbar")]
        poset: PosetKind,
        /// Count every two-interval cover witness.
        #[arg(long, env = "GROUPLAT_ALL_WITNESSES")]
        all_witnesses: bool,
        #[command(flatten)]
        caps: Caps,
    },
    /// Run verification suites: theorem1, corollary3, prop4-5, theorem6, theorem9, all.
    Verify {
        #[arg(required = true, value_parser = parse_suite_arg)]
        suites: Vec<SuiteArg>,
        /// Write results as JSON (`-` for stdout).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
    /// Sweep group families up to --max-order.
    Scan {
        /// Comma-separated families (default: all).
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        #[command(flatten)]
        caps: Caps,
    },
}

#[derive(Clone, Copy)]
enum SuiteArg {
    All,
    One(Suite),
}

fn parse_suite_arg(s: &str) -> Result<SuiteArg, String> {
    if s == "all" {
        Ok(SuiteArg::All)
    } else {
        s.parse().map(SuiteArg::One)
    }
}

macro_rules! out {
    ($($t:tt)*) => { write!(io::stdout(), $($t)*).map_err(Failure::from)? };
}

macro_rules! outln {
    ($($t:tt)*) => { writeln!(io::stdout(), $($t)*).map_err(Failure::from)? };
}

enum Failure {
    Lib(Error),
    Io(String),
    ClosedPipe,
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        if e.kind() == io::ErrorKind::BrokenPipe {
            Failure::ClosedPipe
        } else {
            Failure::Io(e.to_string())
        }
    }
}

fn write_out(path: &Path, content: &str) -> Result<(), Failure> {
    if path == Path::new("-") {
        out!("{content}");
        io::stdout().flush()?;
        Ok(())
    } else {
        fs::write(path, content).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Build { spec, table, caps } => {
            let spec: GroupSpec = spec.parse()?;
            let g = build_group(&spec, &caps.limits())?;
            outln!("group   {}", g.spec());
            outln!("order   {}", g.order());
            outln!("valid   {:?}", validate_group(&g));
            for a in 0..g.order() {
                outln!("{a:>5}  {:<24} order {}", g.label(a), g.element_order(a));
            }
            if table {
                for a in 0..g.order() {
                    let row: Vec<String> = g.row(a).map(|x| x.to_string()).collect();
                    outln!("{}", row.join(" "));
                }
            }
        }
        Command::Analyze {
            spec,
            json,
            dot,
            poset,
            all_witnesses,
            caps,
        } => {
            let start = Instant::now();
            let a = Analysis::parse(&spec, &caps.limits())?;
            let report = AnalysisReport::new(&a, all_witnesses, start.elapsed().as_micros() as u64);
            let stdout_taken = [&json, &dot]
                .iter()
                .any(|p| p.as_deref() == Some(Path::new("-")));
            if !stdout_taken {
                out!("{}", report.to_text());
            }
            if let Some(path) = json {
                write_out(&path, &(report.to_json() + "\n"))?;
            }
            if let Some(path) = dot {
                write_out(&path, &to_dot(a.poset(poset)))?;
            }
        }
        Command::Verify { suites, json, caps } => {
            let mut chosen: Vec<Suite> = Vec::new();
            for s in suites {
                let add: &[Suite] = match s {
                    SuiteArg::All => &Suite::ALL,
                    SuiteArg::One(ref one) => std::slice::from_ref(one),
                };
                for &x in add {
                    if !chosen.contains(&x) {
                        chosen.push(x);
                    }
                }
            }
            let report = VerifyReport::new(run_suites(&chosen, &caps.limits())?);
            let json_to_stdout = json.as_deref() == Some(Path::new("-"));
            if !json_to_stdout {
                out!("{}", report.to_table());
            }
            if let Some(path) = json {
                write_out(&path, &(report.to_json() + "\n"))?;
            }
            if !report.pass {
                return Err(Failure::Verification);
            }
        }
        Command::Scan {
            families,
            csv,
            json,
            caps,
        } => {
            let families = if families.is_empty() {
                Family::ALL.to_vec()
            } else {
                families
            };
            let rows = scan_class_c(caps.max_order, &families, &caps.limits());
            if csv.is_none() && json.is_none() {
                print_scan_table(&rows)?;
            }
            if let Some(path) = csv {
                let mut buf = Vec::new();
                write_scan_csv(&rows, &mut buf).map_err(|e| Failure::Io(e.to_string()))?;
                write_out(&path, &String::from_utf8_lossy(&buf))?;
            }
            if let Some(path) = json {
                let text = serde_json::to_string_pretty(&rows).expect("rows serialize");
                write_out(&path, &(text + "\n"))?;
            }
        }
    }
    Ok(())
}

fn print_scan_table(rows: &[grouplat::scan::ScanRow]) -> Result<(), Failure> {
    let w = rows.iter().map(|r| r.spec.len()).max().unwrap_or(4).max(4);
    outln!(
        "{:<w$}  {:>5}  {:>6}  {:>7}  {:<13}  {:<7}  witnesses",
        "spec",
        "order",
        "subgrp",
        "classes",
        "bp L/Lb/C/Cb",
        "in_C"
    );
    let yn = |b: Option<bool>| match b {
        Some(true) => "y",
        Some(false) => "n",
        None => "?",
    };
    for r in rows {
        if let Some(reason) = &r.skipped {
            outln!("{:<w$}  {:>5}  skipped: {reason}", r.spec, r.order);
            continue;
        }
        let bps = format!(
            "{}/{}/{}/{}",
            yn(r.bp_l),
            yn(r.bp_lbar),
            yn(r.bp_c),
            yn(r.bp_cbar)
        );
        outln!(
            "{:<w$}  {:>5}  {:>6}  {:>7}  {:<13}  {:<7}  {}",
            r.spec,
            r.order,
            r.n_subgroups.unwrap_or(0),
            r.n_classes.unwrap_or(0),
            bps,
            yn(r.in_c),
            r.witnesses.unwrap_or(0)
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::ClosedPipe) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(EXIT_FAIL),
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_FAIL)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            if e.is_resource_cap() {
                ExitCode::from(EXIT_CAP)
            } else {
                ExitCode::from(EXIT_USAGE)
            }
        }
    }
}
