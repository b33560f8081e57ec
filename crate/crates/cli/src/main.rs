use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use succession::oracle::DEFAULT_MAX_N_GUARD;
use succession::{
    build_table, count, cycle_decomposition, enumerate_avoiders, longest_forbidden_chain,
    oeis_bfile, render, verify_formulas, EnumerationConfig, Error, Format, OeisSequence,
    ShiftProblem, TableKind, Variant,
};

const GUARD_ENV: &str = "SUCCESSION_MAX_GUARD";

/// Count and enumerate permutations avoiding k-shift successions.
#[derive(Debug, Parser)]
#[command(name = "succession", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print d_n^k, or D_n^k with --modular.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        modular: bool,
    },
    /// List avoiders in lexicographic order, one per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        modular: bool,
        #[arg(long)]
        limit: Option<usize>,
        /// Allow n above the enumeration guard.
        #[arg(long)]
        no_guard: bool,
    },
    /// Cycle structure of (1 2 ... n)^k and a longest forbidden chain.
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Print a table of counts or cycle summaries.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Check the formulas against brute-force enumeration.
    Verify {
        #[arg(long)]
        max_n: usize,
    },
    /// Write an OEIS b-file.
    Bfile {
        #[arg(long, value_enum)]
        seq: SeqArg,
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    Linear,
    Modular,
    Cycles,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SeqArg {
    #[value(name = "A000240", alias = "a000240")]
    A000240,
    #[value(name = "A277609", alias = "a277609")]
    A277609,
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Mismatch,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn guard() -> Result<usize, Failure> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Failure::Domain(format!("{GUARD_ENV} must be a positive integer, got {v:?}"))
        }),
        Err(_) => Ok(DEFAULT_MAX_N_GUARD),
    }
}

fn variant(modular: bool) -> Variant {
    if modular {
        Variant::Modular
    } else {
        Variant::Linear
    }
}

fn joined(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), Failure> {
    match cli.command {
        Command::Count { n, k, modular } => {
            let problem = ShiftProblem::new(n, k, variant(modular))?;
            writeln!(out, "{}", count(&problem))?;
        }
        Command::Enumerate {
            n,
            k,
            modular,
            limit,
            no_guard,
        } => {
            let problem = ShiftProblem::new(n, k, variant(modular))?;
            let config = EnumerationConfig::new(problem)
                .with_guard(guard()?)
                .with_override(no_guard)
                .with_limit(limit);
            for perm in enumerate_avoiders(&config)? {
                writeln!(out, "{}", joined(&perm))?;
            }
        }
        Command::Cycles { n, k } => {
            let c = cycle_decomposition(n, k)?;
            let chain = longest_forbidden_chain(n, k)?;
            writeln!(out, "gcd: {}", c.gcd())?;
            writeln!(out, "cycle lengths: {}", joined(&c.cycle_lengths()))?;
            writeln!(out, "kth power: {}", c.cycle_notation())?;
            writeln!(out, "max cycle length: {}", c.max_cycle_length())?;
            writeln!(
                out,
                "longest chain: {} ({})",
                chain.length,
                joined(&chain.witness)
            )?;
        }
        Command::Table {
            kind,
            max_n,
            format,
        } => {
            let kind = match kind {
                KindArg::Linear => TableKind::LinearTriangle,
                KindArg::Modular => TableKind::ModularGrid,
                KindArg::Cycles => TableKind::CycleSummary,
            };
            let format = match format {
                FormatArg::Text => Format::Text,
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let table = build_table(kind, max_n)?;
            out.write_all(render(&table, format)?.as_bytes())?;
        }
        Command::Verify { max_n } => {
            let report = verify_formulas(max_n, guard()?, count)?;
            writeln!(out, "{report}")?;
            if !report.ok() {
                return Err(Failure::Mismatch);
            }
        }
        Command::Bfile { seq, max_n } => {
            let seq = match seq {
                SeqArg::A000240 => OeisSequence::A000240,
                SeqArg::A277609 => OeisSequence::A277609,
            };
            out.write_all(oeis_bfile(seq, max_n).as_bytes())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::Io));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => {
            let _ = out.flush();
            ExitCode::from(1)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            let _ = out.flush();
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
