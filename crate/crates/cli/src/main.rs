use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use euclid_potential::{
    analyze, fib, fibonacci_pair, scan, tightness_fibonacci, trace, write_scan_csv_file,
    write_tightness_csv, write_tightness_csv_file, BoundReport, Error, GoldenInt, Natural,
    Normalization, ScanOptions,
};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_IO: u8 = 3;

/// Trace Euclid's algorithm and check its iteration-count bounds exactly.
#[derive(Debug, Parser)]
#[command(name = "euclid-potential", version)]
struct Cli {
    /// Increase diagnostic output on stderr (-v, -vv).
    #[arg(short, long, action = clap::ArgAction::Count, global = true)]
    verbose: u8,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Operands {
    /// First operand (non-negative decimal, any length).
    #[arg(value_parser = parse_natural)]
    x: Natural,
    /// Second operand (non-negative decimal, any length).
    #[arg(value_parser = parse_natural)]
    y: Natural,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print gcd(x, y) and the number of iterations.
    Gcd(Operands),
    /// Print every iteration with both potentials.
    Trace(Operands),
    /// Check every bound for one pair; exit status 1 if any fails.
    Verify(Operands),
    /// Check every pair 0 ≤ y < x ≤ N.
    Scan {
        #[arg(long = "max", value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        partitions: u64,
        /// Write the summary CSV here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Print a Fibonacci number or a worst-case pair.
    Fib(FibArgs),
    /// Fibonacci worst-case family against the golden bound.
    Tightness {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        kmax: u64,
        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct FibArgs {
    /// Print F_k.
    #[arg(long)]
    index: Option<u64>,
    /// Print the pair (F_{k+2}, F_{k+1}) needing exactly k iterations.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pair: Option<u64>,
}

fn parse_natural(s: &str) -> Result<Natural, String> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("'{s}' is not a non-negative decimal integer"));
    }
    s.parse::<Natural>().map_err(|e| e.to_string())
}

fn fail(err: &Error) -> ExitCode {
    eprintln!("error: {err}");
    match err {
        Error::Io { .. } | Error::Csv(_) => ExitCode::from(EXIT_IO),
        Error::ZeroZero | Error::OutOfRange { .. } => ExitCode::from(EXIT_USAGE),
    }
}

fn note_swap(ops: &Operands) {
    if ops.x < ops.y {
        eprintln!("note: operands swapped to x={} y={}", ops.y, ops.x);
    }
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "FAIL"
    }
}

fn golden_cell(g: &GoldenInt) -> String {
    let approx = g.to_f64();
    let mark = if approx.reliable {
        "≈"
    } else {
        "~unreliable "
    };
    format!("{g} ({mark}{:.6})", approx.value)
}

fn print_report(out: &mut impl Write, r: &BoundReport) -> io::Result<()> {
    writeln!(
        out,
        "m={} thm1_bound≈{:.6} thm2_bound≈{:.6} all_checks={}",
        r.m,
        r.thm1.display_bound,
        r.thm2.display_bound,
        pass_fail(r.all_pass())
    )?;
    writeln!(out, "thm1={}", pass_fail(r.thm1.holds))?;
    writeln!(out, "thm2={}", pass_fail(r.thm2.holds))?;
    writeln!(out, "lemma_additive={}", pass_fail(r.lemma1_holds()))?;
    writeln!(out, "lemma_golden={}", pass_fail(r.lemma2_holds()))?;
    let eq: Vec<String> = r
        .lemma2_equality_steps()
        .iter()
        .map(usize::to_string)
        .collect();
    writeln!(out, "lemma_golden_equality_steps=[{}]", eq.join(","))?;
    writeln!(out, "cor1={}", pass_fail(r.cor1_holds))?;
    writeln!(out, "cor2={}", pass_fail(r.cor2_holds))?;
    let lame = if r.lame.applicable {
        pass_fail(r.lame.holds)
    } else {
        "n/a"
    };
    writeln!(out, "lame={lame}")
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let io_err = |source| Error::Io {
        path: PathBuf::from("<stdout>"),
        source,
    };
    match cli.command {
        Command::Gcd(ops) => {
            note_swap(&ops);
            let t = trace(&ops.x, &ops.y)?;
            writeln!(out, "gcd={} iterations={}", t.gcd(), t.m()).map_err(io_err)?;
        }
        Command::Trace(ops) => {
            note_swap(&ops);
            let t = trace(&ops.x, &ops.y)?;
            if t.normalization() == Normalization::EqualOperands {
                eprintln!("note: equal operands, first step reduces (x, x) to (x, 0)");
            }
            let additive = euclid_potential::additive_series(&t);
            let golden = euclid_potential::golden_series(&t);
            writeln!(out, "i\tx\ty\tq\tr\ts_add\ts_golden").map_err(io_err)?;
            for (i, step) in t.steps().iter().enumerate() {
                let opt =
                    |v: &Option<Natural>| v.as_ref().map_or("-".to_string(), Natural::to_string);
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    i + 1,
                    step.x,
                    step.y,
                    opt(&step.quotient),
                    opt(&step.remainder),
                    additive.values()[i],
                    golden_cell(&golden.values()[i]),
                )
                .map_err(io_err)?;
            }
            writeln!(out, "gcd={} iterations={}", t.gcd(), t.m()).map_err(io_err)?;
        }
        Command::Verify(ops) => {
            note_swap(&ops);
            let report = analyze(&ops.x, &ops.y)?;
            print_report(&mut out, &report).map_err(io_err)?;
            if !report.all_pass() {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Scan {
            max,
            partitions,
            csv,
        } => {
            let summary = scan(
                max,
                ScanOptions {
                    partitions: partitions as usize,
                },
            )?;
            let (wx, wy) = summary.max_m_witness;
            writeln!(
                out,
                "x_max={} pairs={} max_m={} witness=({},{}) violations={}",
                summary.x_max, summary.pairs_checked, summary.max_m, wx, wy, summary.violations
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "thm1_gap=[{:.6},{:.6}] thm2_gap=[{:.6},{:.6}]",
                summary.thm1_gap.min,
                summary.thm1_gap.max,
                summary.thm2_gap.min,
                summary.thm2_gap.max
            )
            .map_err(io_err)?;
            let hist: Vec<String> = summary
                .histogram_m
                .iter()
                .map(|(m, c)| format!("{m}:{c}"))
                .collect();
            writeln!(out, "histogram_m={}", hist.join(",")).map_err(io_err)?;
            log::info!("violations by check: {:?}", summary.by_check);
            if let Some(path) = csv {
                write_scan_csv_file(&summary, &path)?;
            }
            if summary.violations > 0 {
                return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
            }
        }
        Command::Fib(args) => match (args.index, args.pair) {
            (Some(k), _) => writeln!(out, "{}", fib(k)).map_err(io_err)?,
            (_, Some(k)) => {
                let (x, y) = fibonacci_pair(k)?;
                writeln!(out, "x={x} y={y}").map_err(io_err)?;
            }
            (None, None) => unreachable!("clap enforces one of --index/--pair"),
        },
        Command::Tightness { kmax, csv } => {
            let records = tightness_fibonacci(kmax)?;
            let max_gap = records
                .iter()
                .map(|r| r.gap)
                .fold(f64::NEG_INFINITY, f64::max);
            if records.iter().any(|r| !r.exact_bracket) {
                log::warn!("exact bracket φ^(m+2) ≤ φx+y < φ^(m+3) failed for some k");
            }
            match csv {
                Some(path) => {
                    write_tightness_csv_file(&records, &path)?;
                    writeln!(out, "rows={} max_gap={max_gap:.6}", records.len()).map_err(io_err)?;
                }
                None => {
                    write_tightness_csv(&records, &mut out)?;
                    eprintln!("max_gap={max_gap:.6}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let level = match cli.verbose {
        0 => log::LevelFilter::Warn,
        1 => log::LevelFilter::Info,
        _ => log::LevelFilter::Debug,
    };
    env_logger::Builder::new()
        .filter_level(level)
        .target(env_logger::Target::Stderr)
        .init();
    run(cli).unwrap_or_else(|e| fail(&e))
}
