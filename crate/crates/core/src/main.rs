use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use sepcount::audit::{Auditor, Grid, TermConvention};
use sepcount::commands::{self, ReportFormat, EXIT_OK, EXIT_USAGE};
use sepcount::method::{TableFormat, TableRequest};
use sepcount::{CountQuery, MethodChoice, Oracle, SeparationParams, Topology};

#[derive(Parser)]
#[command(name = "sepcount", version, about = "Count and enumerate separated k-subsets on a line or circle")]
struct Cli {
    /// Largest n the brute-force enumerator accepts.
    #[arg(long, global = true, default_value_t = sepcount::oracle::DEFAULT_CAP)]
    cap: i64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(long, value_parser = parse::<Topology>)]
    topology: Topology,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    #[arg(long, allow_negative_numbers = true)]
    k: i64,
    #[arg(long, allow_negative_numbers = true)]
    m: i64,
    #[arg(long, allow_negative_numbers = true)]
    p: i64,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of separated k-subsets.
    Count {
        #[command(flatten)]
        query: QueryArgs,
        #[arg(long, default_value = "auto", value_parser = parse::<MethodChoice>)]
        method: MethodChoice,
    },
    /// Print every separated k-subset, one per line.
    List {
        #[command(flatten)]
        query: QueryArgs,
    },
    /// Print the (n, k) grid of counts.
    Table {
        #[arg(long, value_parser = parse::<Topology>)]
        topology: Topology,
        #[arg(long)]
        m: i64,
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n_max: i64,
        #[arg(long)]
        k_max: i64,
        #[arg(long, default_value = "csv", value_parser = parse::<TableFormat>)]
        format: TableFormat,
    },
    /// Check identities over a parameter grid.
    Audit {
        /// Identity id, a comma-separated list, or `all`. Ids: Eq2.1, Eq2.2,
        /// Eq3.1, Eq3.2, Eq3.3-printed, Eq3.3-corrected, Eq3.4, Eq3.5, Thm-H1,
        /// Thm-H2, Thm-H3-printed, Thm-H3-corrected, Eq4.1, Eq4.2-printed,
        /// Eq4.2-corrected, Eq4.4, Eq4.5, HwangWei, Gould, BijectionCount.
        #[arg(long, default_value = "all")]
        identity: String,
        /// Clauses like `m<=3`, `k>=1`, `p=2`, `2<=n<=20`, or `standard`.
        #[arg(long, default_value = "m<=3,p<=2,k<=4,n<=24")]
        grid: String,
        /// text or json.
        #[arg(long, default_value = "text")]
        format: String,
        /// extended: out-of-range terms use the residue continuation;
        /// literal: true counts, zero for n < 0.
        #[arg(long, default_value = "extended", value_parser = parse::<TermConvention>)]
        convention: TermConvention,
    },
}

fn parse<T: std::str::FromStr<Err = sepcount::Error>>(s: &str) -> Result<T, String> {
    s.parse().map_err(|e: sepcount::Error| e.to_string())
}

fn query(args: &QueryArgs) -> sepcount::Result<CountQuery> {
    CountQuery::new(args.topology, args.n, args.k, SeparationParams::new(args.m, args.p)?)
}

fn run(cli: Cli) -> sepcount::Result<(String, i32)> {
    let oracle = Oracle::with_cap(cli.cap);
    match cli.command {
        Command::Count { query: q, method } => Ok((commands::cmd_count(&query(&q)?, method, oracle)?, EXIT_OK)),
        Command::List { query: q } => Ok((commands::cmd_list(&query(&q)?, oracle)?, EXIT_OK)),
        Command::Table { topology, m, p, n_max, k_max, format } => {
            let req = TableRequest { topology, params: SeparationParams::new(m, p)?, n_max, k_max, format };
            Ok((commands::cmd_table(&req, oracle)?, EXIT_OK))
        }
        Command::Audit { identity, grid, format, convention } => {
            let identities = commands::parse_identities(&identity)?;
            let grid: Grid = grid.parse()?;
            let format = match format.as_str() {
                "text" => ReportFormat::Text,
                "json" => ReportFormat::Json,
                other => {
                    return Err(sepcount::Error::Precondition(format!(
                        "format must be `text` or `json`, got `{other}`"
                    )))
                }
            };
            commands::cmd_audit(&identities, &grid, format, &Auditor::new(oracle, convention))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(EXIT_USAGE as u8);
        }
    };
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE as u8)
        }
    }
}
