//! Timing harness: generates deterministic instances and reports median
//! wall time per phase as CSV on stdout.

use clap::{Parser, ValueEnum};

use crabmeet_core::bench::{rows_to_csv, time_solvers, GenKind, GenSpec};

#[derive(Parser, Debug)]
#[command(
    name = "crabmeet-bench",
    version,
    about = "Time the solvers on generated instances and print CSV"
)]
struct BenchArgs {
    /// Instance shape
    #[arg(long, value_enum, default_value_t = KindArg::Uniform)]
    kind: KindArg,

    /// Instance size; repeat the flag for several sizes
    #[arg(long = "n", value_name = "N", required = true)]
    sizes: Vec<usize>,

    /// Low end of the value range
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    lo: i64,

    /// High end of the value range
    #[arg(long, default_value_t = 1_000_000, allow_negative_numbers = true)]
    hi: i64,

    /// Generator seed
    #[arg(long, default_value_t = 42)]
    seed: u64,

    /// Repetitions per phase; the median is reported
    #[arg(long, default_value_t = 5)]
    reps: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Uniform,
    TwoCluster,
    AllEqual,
    PresortedRamp,
}

impl From<KindArg> for GenKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Uniform => GenKind::Uniform,
            KindArg::TwoCluster => GenKind::TwoCluster,
            KindArg::AllEqual => GenKind::AllEqual,
            KindArg::PresortedRamp => GenKind::PresortedRamp,
        }
    }
}

fn main() {
    let args = BenchArgs::parse();
    if args.reps < 3 {
        eprintln!("error: --reps must be at least 3");
        std::process::exit(1);
    }
    if args.lo > args.hi {
        eprintln!("error: --lo must not exceed --hi");
        std::process::exit(1);
    }

    let mut rows = Vec::new();
    for &n in &args.sizes {
        let spec = GenSpec {
            kind: args.kind.into(),
            n,
            value_range: (args.lo, args.hi),
            seed: args.seed,
        };
        rows.extend(time_solvers(&spec, args.reps));
    }
    print!("{}", rows_to_csv(&rows));
}
