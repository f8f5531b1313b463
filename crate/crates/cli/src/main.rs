//! `fibtree`: codecs, node queries, tree dumps and the verification suite.
//!
//! Exit status: 0 on success, 1 when verification finds a violation, 2 on a
//! usage error, 3 on invalid input, 4 when a request exceeds the depth limit.

mod dump;

use std::fmt::Write as _;
use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use fibtree::navigation::{
    preferred_son_golden, preferred_son_white, successor_black_fib, successor_black_golden,
    verify_theorems_on, FibNodeType, GoldenNodeType, Numeration,
};
use fibtree::numeration::{verify_codecs, Validation};
use fibtree::tiling::{verify_strip_partition, GridKind, TileAddress};
use fibtree::tree::{level_of, verify_structure, TreeError};
use fibtree::{FibCode, GoldenCode, Report, TreeKind, TreeTable};
use num_bigint::BigUint;

#[derive(Parser)]
#[command(
    name = "fibtree",
    version,
    about = "Fibonacci trees, their codes and their tilings"
)]
struct Cli {
    /// Deepest tree level any command may generate.
    #[arg(long, global = true, env = "FIBTREE_MAX_DEPTH", default_value_t = fibtree::tree::DEFAULT_DEPTH_LIMIT)]
    max_depth: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the canonical code of a positive integer.
    Encode {
        #[command(flatten)]
        numeration: NumerationFlag,
        n: String,
    },
    /// Print the value of a code word.
    Decode {
        #[command(flatten)]
        numeration: NumerationFlag,
        word: String,
        /// Reject non-canonical golden words.
        #[arg(long)]
        strict: bool,
    },
    /// Print everything known about one node.
    Node {
        #[command(flatten)]
        tree: TreeFlag,
        node: String,
    },
    /// Run the verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = Scope::All)]
        scope: Scope,
        #[arg(long, default_value_t = 12)]
        depth: usize,
        /// Upper end of the codec sweep.
        #[arg(long, default_value_t = 1_000_000)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Print a tree down to a given depth.
    Dump {
        #[command(flatten)]
        tree: TreeFlag,
        #[arg(long)]
        depth: usize,
        #[arg(long, value_enum, default_value_t = dump::Format::Text)]
        format: dump::Format,
    },
    /// Convert between global tile ids and sector addresses (`g0`, `s<sector>:n<node>`).
    Tile {
        #[arg(long, value_enum)]
        grid: Grid,
        tile: String,
    },
}

#[derive(Args)]
#[command(group(ArgGroup::new("numeration").required(true)))]
struct NumerationFlag {
    #[arg(long, group = "numeration")]
    fib: bool,
    #[arg(long, group = "numeration")]
    golden: bool,
}

impl NumerationFlag {
    fn get(&self) -> Numeration {
        if self.golden {
            Numeration::Golden
        } else {
            Numeration::Fibonacci
        }
    }
}

#[derive(Args)]
#[command(group(ArgGroup::new("tree").required(true)))]
struct TreeFlag {
    #[arg(long, group = "tree")]
    white: bool,
    #[arg(long, group = "tree")]
    black: bool,
}

impl TreeFlag {
    fn get(&self) -> TreeKind {
        if self.black {
            TreeKind::BlackRoot
        } else {
            TreeKind::WhiteRoot
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    All,
    Codecs,
    Theorems,
    Strips,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Records,
}

#[derive(Clone, Copy, ValueEnum)]
enum Grid {
    Pentagrid,
    Heptagrid,
}

enum Failure {
    Verification,
    Invalid(String),
    Depth(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<TreeError> for Failure {
    fn from(e: TreeError) -> Self {
        match e {
            TreeError::DepthLimit { .. } => {
                Failure::Depth(format!("{e}; raise --max-depth or FIBTREE_MAX_DEPTH"))
            }
            TreeError::NodeOutOfRange { .. } => Failure::Invalid(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = io::stdout().lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Depth(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(4)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    let limit = cli.max_depth;
    match cli.command {
        Command::Encode { numeration, n } => {
            let n = parse_positive(&n)?;
            let code = match numeration.get() {
                Numeration::Fibonacci => FibCode::encode(&n).map(|c| c.to_string()),
                Numeration::Golden => GoldenCode::encode(&n).map(|c| c.to_string()),
            }
            .map_err(|e| Failure::Invalid(e.to_string()))?;
            writeln!(out, "{code}")?;
        }
        Command::Decode {
            numeration,
            word,
            strict,
        } => {
            let invalid = |e: fibtree::NumerationError| Failure::Invalid(e.to_string());
            let value = match numeration.get() {
                Numeration::Fibonacci => FibCode::from_str(&word).map_err(invalid)?.decode(),
                Numeration::Golden => {
                    let validation = if strict {
                        Validation::Strict
                    } else {
                        Validation::Lenient
                    };
                    GoldenCode::from_str(&word)
                        .and_then(|c| c.decode_checked(validation))
                        .map_err(invalid)?
                        .value
                }
            };
            writeln!(out, "{value}")?;
        }
        Command::Node { tree, node } => {
            let node = parse_positive(&node)?;
            write!(out, "{}", node_record(tree.get(), &node, limit)?)?;
        }
        Command::Verify {
            scope,
            depth,
            max_n,
            format,
        } => {
            if depth > limit {
                return Err(TreeError::DepthLimit {
                    requested: depth,
                    limit,
                }
                .into());
            }
            let reports = run_suite(scope, depth, max_n)?;
            print_reports(out, &reports, format)?;
            if reports.iter().any(|r| !r.is_clean()) {
                return Err(Failure::Verification);
            }
        }
        Command::Dump {
            tree,
            depth,
            format,
        } => {
            let table = TreeTable::build_with_limit(tree.get(), depth, limit)?;
            dump::write(out, &table, format)?;
        }
        Command::Tile { grid, tile } => {
            let grid = match grid {
                Grid::Pentagrid => GridKind::Pentagrid,
                Grid::Heptagrid => GridKind::Heptagrid,
            };
            match BigUint::from_str(&tile) {
                Ok(id) => writeln!(out, "{}", TileAddress::from_global_id(grid, &id))?,
                Err(_) => {
                    let address = TileAddress::parse(grid, &tile)
                        .map_err(|e| Failure::Invalid(e.to_string()))?;
                    writeln!(out, "{}", address.to_global_id())?;
                }
            }
        }
    }
    Ok(())
}

fn parse_positive(s: &str) -> Result<BigUint, Failure> {
    match BigUint::from_str(s) {
        Ok(n) if n > BigUint::ZERO => Ok(n),
        Ok(_) => Err(Failure::Invalid("0 has no code; values start at 1".into())),
        Err(_) => Err(Failure::Invalid(format!("{s:?} is not a positive integer"))),
    }
}

fn node_record(kind: TreeKind, node: &BigUint, limit: usize) -> Result<String, Failure> {
    let fib_code = FibCode::encode(node).expect("positive");
    let golden_code = GoldenCode::encode(node).expect("positive");
    // deep enough for the sons and for the successors, which lie one level down
    let required = [
        fib_code.append_zeros(2).decode(),
        golden_code.append_zero().decode(),
    ]
    .iter()
    .map(|n| level_of(kind, n))
    .max()
    .expect("two candidates")
    .max(level_of(kind, node) + 1);
    if required > limit {
        return Err(Failure::Depth(format!(
            "node {node} needs depth {required}, above the limit {limit}; raise --max-depth or FIBTREE_MAX_DEPTH"
        )));
    }
    let table = TreeTable::build_with_limit(kind, required, limit)?;
    let number = u64::try_from(node).expect("tables fit in u64");
    let info = table.node_info(number)?;

    let mut s = String::new();
    let mut field = |key: &str, value: String| {
        let _ = writeln!(s, "{key:<16} {value}");
    };
    field("node", number.to_string());
    field("tree", kind.to_string());
    field("status", info.status.to_string());
    field("level", info.level.to_string());
    if let Some(f) = info.father {
        field("father", f.to_string());
    }
    field(
        "sons",
        info.sons
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    field("fib_code", fib_code.to_string());
    field("golden_code", golden_code.to_string());
    match kind {
        TreeKind::WhiteRoot => {
            let p =
                preferred_son_white(&table, number).map_err(|e| Failure::Invalid(e.to_string()))?;
            let g = preferred_son_golden(&table, number)
                .map_err(|e| Failure::Invalid(e.to_string()))?;
            field("preferred_son", p.to_string());
            field("golden_preferred", g.to_string());
        }
        TreeKind::BlackRoot => {
            let nav = |e: fibtree::navigation::NavigationError| Failure::Invalid(e.to_string());
            field(
                "fib_type",
                FibNodeType::classify(number, info.status).to_string(),
            );
            field(
                "golden_type",
                GoldenNodeType::classify(number, info.status).to_string(),
            );
            let f = successor_black_fib(&table, number).map_err(nav)?;
            field("successor", format!("{} ({})", f.node, f.relation));
            let g = successor_black_golden(&table, number).map_err(nav)?;
            field("golden_successor", format!("{} ({})", g.node, g.relation));
        }
    }
    Ok(s)
}

fn run_suite(scope: Scope, depth: usize, max_n: u64) -> Result<Vec<Report>, Failure> {
    let mut reports = Vec::new();
    if matches!(scope, Scope::All | Scope::Codecs) {
        reports.push(verify_codecs(max_n));
    }
    if matches!(scope, Scope::All | Scope::Theorems) {
        for kind in [TreeKind::WhiteRoot, TreeKind::BlackRoot] {
            let table = TreeTable::build(kind, depth)?;
            reports.push(verify_structure(&table));
            for numeration in [Numeration::Fibonacci, Numeration::Golden] {
                reports.push(verify_theorems_on(&table, numeration));
            }
        }
    }
    if matches!(scope, Scope::All | Scope::Strips) {
        reports.push(verify_strip_partition(depth)?);
    }
    Ok(reports)
}

fn print_reports(out: &mut impl Write, reports: &[Report], format: ReportFormat) -> io::Result<()> {
    let passed: u64 = reports.iter().map(Report::passes).sum();
    let failed: u64 = reports.iter().map(Report::failures).sum();
    let warnings: usize = reports.iter().map(|r| r.warnings.len()).sum();
    match format {
        ReportFormat::Text => {
            for r in reports {
                writeln!(out, "{r}")?;
            }
            writeln!(
                out,
                "summary: {} reports, passed {passed}, failed {failed}, warnings {warnings}",
                reports.len()
            )?;
        }
        ReportFormat::Records => {
            for r in reports {
                out.write_all(r.to_records().as_bytes())?;
            }
            writeln!(
                out,
                "{}",
                serde_json::json!({
                    "record": "total",
                    "reports": reports.len(),
                    "passed": passed,
                    "failed": failed,
                    "warnings": warnings,
                })
            )?;
        }
    }
    Ok(())
}
