//! Command-line surface: the `classes`, `derive` and `mn` subcommands.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a mathematical
//! verification fails (sharp transitivity, golden comparison, any
//! derivation check), 2 on usage or I/O problems.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::classfun::{central_check_pairs, ClassFrame};
use crate::derivation::{self, export, structure_report, GroupId};
use crate::indres::{mn_value, Partition};
use crate::permgroup::{parse_fixture, GroupData, DEFAULT_CLOSURE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "chartab",
    about = "Exact character tables of the sharply multiply transitive groups on 9-12 points",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate a group fixture and report its conjugacy class data.
    Classes(ClassesArgs),
    /// Replay the derivation of a group's character table.
    Derive(DeriveArgs),
    /// Evaluate a symmetric-group character by partition and cycle type.
    Mn(MnArgs),
}

#[derive(Args)]
struct CommonGroupArgs {
    /// Group selector: g9, g10, g11 or g12.
    #[arg(long)]
    group: String,
    /// Generator fixture file; defaults to <fixtures>/<group>.gens where
    /// <fixtures> is $CHARTAB_FIXTURES or ./fixtures.
    #[arg(long)]
    fixture: Option<PathBuf>,
    /// Compare the result against the bundled golden tables.
    #[arg(long)]
    golden: bool,
    /// Output format: text or json (derive also accepts csv).
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the primary output to this path instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Verbose diagnostics.
    #[arg(short, long)]
    verbose: bool,
}

#[derive(Args)]
struct ClassesArgs {
    #[command(flatten)]
    common: CommonGroupArgs,
    /// Also probe one Sylow p-subgroup for this prime.
    #[arg(long)]
    sylow: Option<u64>,
    /// Deterministic seed selecting the Sylow probe starting element.
    #[arg(long, default_value = "0")]
    seed: u64,
}

#[derive(Args)]
struct DeriveArgs {
    #[command(flatten)]
    common: CommonGroupArgs,
}

#[derive(Args)]
struct MnArgs {
    /// Partition labeling the character, e.g. 9,3.
    #[arg(long)]
    lambda: String,
    /// Cycle type as a partition of the same weight, e.g. 2,2,2,2,1,1,1,1.
    #[arg(long)]
    mu: String,
}

/// Parses the process arguments and runs; returns the exit code.
pub fn run() -> i32 {
    run_from(std::env::args().collect())
}

pub fn run_from(args: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version itself with success status.
            let code = if e.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Classes(args) => cmd_classes(args),
        Command::Derive(args) => cmd_derive(args),
        Command::Mn(args) => cmd_mn(args),
    }
}

fn resolve_group(name: &str) -> Result<GroupId, i32> {
    GroupId::parse(name).ok_or_else(|| {
        eprintln!("unknown group `{name}`: expected g9, g10, g11 or g12");
        EXIT_USAGE
    })
}

fn fixture_path(id: GroupId, explicit: &Option<PathBuf>) -> PathBuf {
    if let Some(p) = explicit {
        return p.clone();
    }
    let dir = std::env::var_os("CHARTAB_FIXTURES")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from("fixtures"));
    dir.join(id.fixture_file())
}

fn load_group(id: GroupId, path: &Path) -> Result<GroupData, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("cannot read fixture {}: {e}", path.display());
        EXIT_USAGE
    })?;
    let (degree, gens) = parse_fixture(&text).map_err(|e| {
        eprintln!("cannot parse fixture {}: {e}", path.display());
        EXIT_USAGE
    })?;
    if degree != id.degree() {
        eprintln!(
            "fixture degree {degree} does not match {} (degree {})",
            id.name(),
            id.degree()
        );
        return Err(EXIT_USAGE);
    }
    GroupData::closure(&gens, DEFAULT_CLOSURE_CAP).map_err(|e| {
        eprintln!("closure failed: {e}");
        EXIT_VERIFICATION
    })
}

fn emit(output: &Option<PathBuf>, content: &str) -> Result<(), i32> {
    match output {
        Some(path) => std::fs::write(path, content).map_err(|e| {
            eprintln!("cannot write {}: {e}", path.display());
            EXIT_USAGE
        }),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_classes(args: ClassesArgs) -> i32 {
    let id = match resolve_group(&args.common.group) {
        Ok(id) => id,
        Err(code) => return code,
    };
    let path = fixture_path(id, &args.common.fixture);
    let g = match load_group(id, &path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let transitivity = id.transitivity();
    let report = g.verify_sharp_transitivity(transitivity);
    if !report.ok {
        eprintln!(
            "{} fixture is not sharply {transitivity}-transitive: {}",
            id.name(),
            report.reason.unwrap_or_default()
        );
        return EXIT_VERIFICATION;
    }
    let entries = g.class_report();
    let content = match args.common.format.as_str() {
        "json" => format!(
            "{}\n",
            serde_json::to_string_pretty(&entries).expect("serializable")
        ),
        "text" => {
            let mut out = format!(
                "{}: order {}, sharply {}-transitive on {} points, {} classes\n",
                id.name(),
                g.order(),
                transitivity,
                g.degree(),
                g.classes().len()
            );
            for e in &entries {
                out.push_str(&format!(
                    "{:<12} size {:>6}  order {:>2}  real {:<5}  inverse {:<12} powers {:?}\n",
                    e.label, e.size, e.order_of_element, e.real, e.inverse_class, e.power_map
                ));
            }
            out
        }
        other => {
            eprintln!("unknown format `{other}` for classes (text or json)");
            return EXIT_USAGE;
        }
    };
    if let Err(code) = emit(&args.common.output, &content) {
        return code;
    }
    if let Some(p) = args.sylow {
        match g.sylow_probe(p, args.seed) {
            Ok(report) => {
                println!(
                    "sylow {p}: order {}, abelian {}, exponent {}, orbit sizes {:?}, element orders {:?}",
                    report.order,
                    report.abelian,
                    report.exponent,
                    report.orbit_sizes,
                    report.element_order_census
                );
            }
            Err(e) => {
                eprintln!("sylow probe failed: {e}");
                return EXIT_USAGE;
            }
        }
    }
    if args.common.golden {
        let cmp = derivation::compare_classes(&g, &derivation::load_classes(id));
        if !cmp.matched {
            eprintln!("class data differs from the golden table:");
            for m in &cmp.mismatches {
                eprintln!("  {m}");
            }
            return EXIT_VERIFICATION;
        }
        println!("class data matches golden table for {}", id.name());
    }
    EXIT_OK
}

fn cmd_derive(args: DeriveArgs) -> i32 {
    let id = match resolve_group(&args.common.group) {
        Ok(id) => id,
        Err(code) => return code,
    };
    let path = fixture_path(id, &args.common.fixture);
    let g = match load_group(id, &path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let mut outcome = match derivation::derive(id, g) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("derivation failed: {e}");
            return EXIT_VERIFICATION;
        }
    };
    let golden_cmp = if args.common.golden {
        match derivation::compare_with_golden(&mut outcome) {
            Ok(cmp) => Some(cmp),
            Err(e) => {
                eprintln!("golden comparison failed: {e}");
                return EXIT_VERIFICATION;
            }
        }
    } else {
        None
    };
    let table_text = match args.common.format.as_str() {
        "text" => export::table_to_text(&outcome.table),
        "json" => export::table_to_json(&outcome.table) + "\n",
        "csv" => export::table_to_csv(&outcome.table),
        other => {
            eprintln!("unknown format `{other}` for derive (text, json or csv)");
            return EXIT_USAGE;
        }
    };
    if let Err(code) = emit(&args.common.output, &table_text) {
        return code;
    }
    let structure = structure_report(&outcome.table);
    outcome
        .log
        .note(format!("structure: {}", structure.verdict));
    let log_text = outcome.log.render_text();
    match &args.common.output {
        Some(path) => {
            let log_path = path.with_extension("log");
            let json_path = path.with_extension("log.json");
            if std::fs::write(&log_path, &log_text).is_err()
                || std::fs::write(&json_path, outcome.log.render_json()).is_err()
            {
                eprintln!("cannot write derivation log next to {}", path.display());
                return EXIT_USAGE;
            }
        }
        None => {
            println!();
            print!("{log_text}");
        }
    }
    if args.common.verbose {
        let frame: &ClassFrame = &outcome.frame;
        let pairs = central_check_pairs(frame.len(), frame.order, 20);
        match outcome.table.central_character_check(&outcome.group, &pairs) {
            Ok(report) if report.ok() => {
                println!(
                    "central character check passed on {} class pairs",
                    report.pairs_checked.len()
                );
            }
            Ok(report) => {
                eprintln!("central character check failed: {report:?}");
                return EXIT_VERIFICATION;
            }
            Err(e) => {
                eprintln!("central character check errored: {e}");
                return EXIT_VERIFICATION;
            }
        }
    }
    if let Some(cmp) = golden_cmp {
        if !cmp.matched {
            eprintln!("derived table does not match the golden table:");
            for m in &cmp.mismatches {
                eprintln!("  {m}");
            }
            return EXIT_VERIFICATION;
        }
        println!(
            "derived table matches golden table for {} ({} documented errata detected)",
            id.name(),
            cmp.detected_errata.len()
        );
        if args.common.verbose {
            let rows: Vec<String> = cmp
                .row_mapping
                .iter()
                .map(|(d, g)| format!("{d}->{g}"))
                .collect();
            let cols: Vec<String> = cmp
                .column_mapping
                .iter()
                .filter(|(d, g)| d != g)
                .map(|(d, g)| format!("{d}->{g}"))
                .collect();
            println!("row mapping to the golden labels: {}", rows.join(" "));
            if cols.is_empty() {
                println!("column mapping: identity");
            } else {
                println!("column mapping differences: {}", cols.join(" "));
            }
        }
    }
    EXIT_OK
}

fn cmd_mn(args: MnArgs) -> i32 {
    let lambda: Partition = match args.lambda.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("bad --lambda: {e}");
            return EXIT_USAGE;
        }
    };
    let mu: Partition = match args.mu.parse() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("bad --mu: {e}");
            return EXIT_USAGE;
        }
    };
    match mn_value(&lambda, &mu) {
        Ok(v) => {
            println!("{v}");
            EXIT_OK
        }
        Err(e) => {
            eprintln!("{e}");
            EXIT_USAGE
        }
    }
}
