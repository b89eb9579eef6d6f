//! Command-line harness: enumeration, per-matrix statistics, identity
//! checks with machine-readable reports, and the tournament audit table.
//!
//! Exit codes: 0 when every requested check passed, 1 when an identity
//! violation was witnessed (the report is still emitted), 2 on usage errors
//! such as an order outside a guard.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::asm::{enumerate_asms, Asm};
use crate::ik::{
    asm_count_formula, check_borchardt, check_cauchy, check_count, check_ik_symmetry,
    check_izergin_korepin, check_minus_one,
};
use crate::lambda_det::{check_asm_expansion, check_condensation_identity, check_vandermonde};
use crate::report::CheckReport;
use crate::six_vertex::{check_vertex_counts_upto, AsmStats, SixVertexConfig};
use crate::tournament::{audit_table, check_tournament_identity};

const GUARD_HELP: &str = "Order guards (exit 2 outside these ranges):
  enumerate          1..=7
  audit              1..=5
  check prop1        1..=7
  check prop2        1..=6
  check problem1     3..=6
  check prop3        1..=6
  check eq6          1..=5  (1..=6 with --long)
  check cauchy       1..=8
  check borchardt    1..=7
  check ik           1..=6
  check ik-symmetry  1..=5
  check eq11         1..=4  (1..=5 with --long)
  check count        1..=7
  count --verify     1..=7  (the bare formula takes any order)

`check all` runs every identity whose guard admits the requested order and
exits with the worst individual status. Checks without random trials ignore
--trials and --seed and record zeros for both.";

#[derive(Parser)]
#[command(
    name = "altsign",
    version,
    about = "Exact verification of alternating-sign-matrix identities",
    after_long_help = GUARD_HELP
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
enum Identity {
    /// Condensation on the power matrix vs the pairwise linear product
    Prop1,
    /// Condensation vs the weighted matrix-sum expansion
    Prop2,
    /// The denominator-cleared condensation identity on six blocks
    Problem1,
    /// Vertex census laws for every matrix up to the given order
    Prop3,
    /// Tournament sum vs weighted matrix sum vs expanded product
    Eq6,
    /// Normalized double-alternant determinant equals 1
    Cauchy,
    /// Squared-entry determinant vs permanent
    Borchardt,
    /// Partition-function determinant vs weighted matrix sum
    Ik,
    /// Matrix-sum invariance under adjacent variable swaps
    IkSymmetry,
    /// Two-family generating function vs alternating sum, exact polynomials
    Eq11,
    /// Closed counting formula vs direct enumeration
    Count,
    /// Every identity whose order guard admits the requested order
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every alternating sign matrix of one order, plus a count line
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Read a matrix as JSON rows on standard input and print its statistics
    Stats {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Verify an identity and emit a check report
    Check {
        #[arg(value_enum)]
        identity: Identity,
        #[arg(long)]
        n: usize,
        /// Random evaluation points for trial-based checks
        #[arg(long, default_value_t = 10)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Raise the eq6 guard to order 6 and the eq11 guard to order 5
        #[arg(long)]
        long: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tournament-vs-decorated-matrix audit table
    Audit {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Print the closed-formula count of matrices of the given order
    Count {
        n: usize,
        /// Also enumerate and compare (guarded to orders up to 7)
        #[arg(long)]
        verify: bool,
    },
}

pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Enumerate { n, format } => cmd_enumerate(n, format),
        Command::Stats { format } => cmd_stats(format),
        Command::Check { identity, n, trials, seed, long, format } => {
            cmd_check(identity, n, trials, seed, long, format)
        }
        Command::Audit { n, format } => cmd_audit(n, format),
        Command::Count { n, verify } => cmd_count(n, verify),
    }
}

fn usage_error(message: impl AsRef<str>) -> i32 {
    eprintln!("error: {}", message.as_ref());
    2
}

fn guard(n: usize, min: usize, max: usize, what: &str) -> Result<(), i32> {
    if n < min || n > max {
        return Err(usage_error(format!("{what} is guarded to orders {min}..={max}, got {n}")));
    }
    Ok(())
}

fn matrix_csv_field(a: &Asm) -> String {
    a.rows()
        .iter()
        .map(|row| {
            row.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

fn cmd_enumerate(n: usize, format: Format) -> i32 {
    if let Err(code) = guard(n, 1, 7, "enumerate") {
        return code;
    }
    let stdout = std::io::stdout().lock();
    let mut out = std::io::BufWriter::new(stdout);
    let mut count = 0u64;
    match format {
        Format::Json => {
            for a in enumerate_asms(n) {
                count += 1;
                let line = serde_json::json!({ "index": count, "matrix": a });
                writeln!(out, "{line}").expect("write to stdout");
            }
            writeln!(out, "{}", serde_json::json!({ "count": count })).expect("write to stdout");
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["index", "matrix"]).expect("write to stdout");
            for a in enumerate_asms(n) {
                count += 1;
                w.write_record([count.to_string(), matrix_csv_field(&a)])
                    .expect("write to stdout");
            }
            w.write_record(["count", &count.to_string()]).expect("write to stdout");
            w.flush().expect("flush stdout");
            return 0;
        }
    }
    out.flush().expect("flush stdout");
    0
}

fn cmd_stats(format: Format) -> i32 {
    let input = match std::io::read_to_string(std::io::stdin()) {
        Ok(s) => s,
        Err(e) => return usage_error(format!("could not read standard input: {e}")),
    };
    let a: Asm = match serde_json::from_str(&input) {
        Ok(a) => a,
        Err(e) => return usage_error(format!("invalid matrix: {e}")),
    };
    let stats = AsmStats::of(&a);
    let config = SixVertexConfig::from_asm(&a);
    match format {
        Format::Json => {
            let line = serde_json::json!({
                "n": a.n(),
                "stats": stats,
                "kinds": config.kinds(),
            });
            println!("{line}");
        }
        Format::Csv => {
            let join = |vals: &[u64]| {
                vals.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(";")
            };
            let kinds = config
                .kinds()
                .iter()
                .map(|row| {
                    row.iter().map(|k| k.code()).collect::<Vec<_>>().join(" ")
                })
                .collect::<Vec<_>>()
                .join(";");
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["field", "value"]).unwrap();
            for (field, value) in [
                ("n", a.n().to_string()),
                ("inversion", stats.inversion.to_string()),
                ("negOnes", stats.neg_ones.to_string()),
                ("swTotal", stats.sw_total.to_string()),
                ("seTotal", stats.se_total.to_string()),
                ("neTotal", stats.ne_total.to_string()),
                ("nwTotal", stats.nw_total.to_string()),
                ("vTotal", stats.v_total.to_string()),
                ("hTotal", stats.h_total.to_string()),
                ("swByCol", join(&stats.sw_by_col)),
                ("seByCol", join(&stats.se_by_col)),
                ("vByCol", join(&stats.v_by_col)),
                ("einByRow", join(&stats.ein_by_row)),
                ("ninByCol", join(&stats.nin_by_col)),
                ("kinds", kinds),
            ] {
                w.write_record([field, &value]).unwrap();
            }
            print!("{}", String::from_utf8(w.into_inner().unwrap()).unwrap());
        }
    }
    0
}

/// (min, max) admissible order for one identity under the given --long flag.
fn identity_guard(identity: Identity, long: bool) -> (usize, usize) {
    match identity {
        Identity::Prop1 => (1, 7),
        Identity::Prop2 => (1, 6),
        Identity::Problem1 => (3, 6),
        Identity::Prop3 => (1, 6),
        Identity::Eq6 => (1, if long { 6 } else { 5 }),
        Identity::Cauchy => (1, 8),
        Identity::Borchardt => (1, 7),
        Identity::Ik => (1, 6),
        Identity::IkSymmetry => (1, 5),
        Identity::Eq11 => (1, if long { 5 } else { 4 }),
        Identity::Count => (1, 7),
        Identity::All => (1, usize::MAX),
    }
}

fn dispatch(identity: Identity, n: usize, trials: u64, seed: u64) -> CheckReport {
    match identity {
        Identity::Prop1 => check_vandermonde(n, trials, seed),
        Identity::Prop2 => check_asm_expansion(n, trials, seed),
        Identity::Problem1 => check_condensation_identity(n, trials, seed),
        Identity::Prop3 => check_vertex_counts_upto(n),
        Identity::Eq6 => check_tournament_identity(n),
        Identity::Cauchy => check_cauchy(n, trials, seed),
        Identity::Borchardt => check_borchardt(n, trials, seed),
        Identity::Ik => check_izergin_korepin(n, trials, seed),
        Identity::IkSymmetry => check_ik_symmetry(n, trials, seed),
        Identity::Eq11 => check_minus_one(n),
        Identity::Count => check_count(n),
        Identity::All => unreachable!("expanded by the caller"),
    }
}

const EVERY_IDENTITY: [Identity; 11] = [
    Identity::Prop1,
    Identity::Prop2,
    Identity::Problem1,
    Identity::Prop3,
    Identity::Eq6,
    Identity::Cauchy,
    Identity::Borchardt,
    Identity::Ik,
    Identity::IkSymmetry,
    Identity::Eq11,
    Identity::Count,
];

fn cmd_check(
    identity: Identity,
    n: usize,
    trials: u64,
    seed: u64,
    long: bool,
    format: Format,
) -> i32 {
    let selected: Vec<Identity> = if identity == Identity::All {
        EVERY_IDENTITY
            .into_iter()
            .filter(|&id| {
                let (min, max) = identity_guard(id, long);
                (min..=max).contains(&n)
            })
            .collect()
    } else {
        let (min, max) = identity_guard(identity, long);
        if !(min..=max).contains(&n) {
            let raise = match identity {
                Identity::Eq6 if !long => " (--long raises the limit to 6)",
                Identity::Eq11 if !long => " (--long raises the limit to 5)",
                _ => "",
            };
            return usage_error(format!(
                "check {} is guarded to orders {min}..={max}{raise}, got {n}",
                token(identity)
            ));
        }
        vec![identity]
    };
    if selected.is_empty() {
        return usage_error(format!("no identity guard admits order {n}"));
    }
    let mut worst = 0;
    for (i, id) in selected.iter().enumerate() {
        let report = dispatch(*id, n, trials, seed);
        match format {
            Format::Json => println!("{}", report.to_json()),
            Format::Csv => {
                if i > 0 {
                    println!();
                }
                print!("{}", report.to_csv());
            }
        }
        worst = worst.max(report.exit_code());
    }
    worst
}

/// The command-line spelling of an identity token.
fn token(identity: Identity) -> &'static str {
    match identity {
        Identity::Prop1 => "prop1",
        Identity::Prop2 => "prop2",
        Identity::Problem1 => "problem1",
        Identity::Prop3 => "prop3",
        Identity::Eq6 => "eq6",
        Identity::Cauchy => "cauchy",
        Identity::Borchardt => "borchardt",
        Identity::Ik => "ik",
        Identity::IkSymmetry => "ik-symmetry",
        Identity::Eq11 => "eq11",
        Identity::Count => "count",
        Identity::All => "all",
    }
}

fn cmd_audit(n: usize, format: Format) -> i32 {
    if let Err(code) = guard(n, 1, 5, "audit") {
        return code;
    }
    let table = audit_table(n);
    match format {
        Format::Json => println!("{}", serde_json::to_string(&table).expect("serializable")),
        Format::Csv => print!("{}", table.to_csv()),
    }
    if table.balanced() {
        0
    } else {
        1
    }
}

fn cmd_count(n: usize, verify: bool) -> i32 {
    if n == 0 {
        return usage_error("count needs an order of at least 1");
    }
    println!("{}", asm_count_formula(n));
    if !verify {
        return 0;
    }
    if let Err(code) = guard(n, 1, 7, "count --verify") {
        return code;
    }
    let report = check_count(n);
    println!("{}", report.to_json());
    report.exit_code()
}
