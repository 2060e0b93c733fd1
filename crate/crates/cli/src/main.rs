//! Command-line front end for `poset-morse`.
//!
//! Exit codes: 0 success, 1 invariant mismatch, 2 incomparable input,
//! 3 parse or usage error.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use poset_morse::bijection::{verify_isomorphism, BijectionPair};
use poset_morse::cache::{MobiusCache, CACHE_ENV};
use poset_morse::harness::{crosscheck, crosscheck_factor, mobius_breakdown, Crosscheck, CrosscheckReport};
use poset_morse::iso::{iso_search, IsoCatalog};
use poset_morse::morse::analyze;
use poset_morse::poset::{FactorOrder, Interval, PatternOrder};
use poset_morse::report::{chain_listing, homotopy_report, render_table, table1, MorseReport};
use poset_morse::{Alphabet, ChainPoset, Error, Permutation};

#[derive(Parser, Debug)]
#[command(name = "poset-morse", version, about = "Möbius functions and homotopy types of pattern and factor intervals")]
struct Cli {
    /// Which poset to work in.
    #[arg(long, global = true, value_enum, default_value_t = PosetKind::Pattern)]
    poset: PosetKind,

    /// Alphabet for factor order: `ab`, or comma-separated symbols.
    #[arg(long, global = true, default_value = "ab")]
    alphabet: String,

    /// Size cap for crosscheck, iso-search (pattern side) and bijection verify.
    #[arg(long, global = true)]
    max_size: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// File of cached brute-force Möbius values.
    #[arg(long, global = true, env = CACHE_ENV)]
    cache: Option<PathBuf>,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Lift the size guardrails.
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum PosetKind {
    Pattern,
    Factor,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// μ(bottom, top) by every method.
    Mobius { bottom: String, top: String },
    /// Maximal chains of [bottom, top] in chain-id order.
    Chains { bottom: String, top: String },
    /// I(C), J(C), critical chains, μ and homotopy type of [bottom, top].
    MorseReport { bottom: String, top: String },
    /// Homotopy type of the open interval (bottom, top).
    Homotopy { bottom: String, top: String },
    /// The isomorphism between {a,b}* and the 213,231-avoiders.
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
    /// Check every interval up to --max-size by every method.
    Crosscheck,
    /// Reproduce the I(C)/J(C) table for [1, 213546].
    Table1,
    /// Look for factor-order intervals isomorphic to pattern intervals.
    IsoSearch {
        /// Longest top word considered.
        #[arg(long, default_value_t = 4)]
        word_cap: usize,
    },
}

#[derive(Subcommand, Debug)]
enum BijectionAction {
    /// Word to permutation.
    Map { word: String },
    /// Permutation to word.
    Unmap { permutation: String },
    /// Exhaustively check the order isomorphism up to --max-size.
    Verify,
}

enum Failure {
    Mismatch(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        Failure::Lib(err)
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NotComparable { .. } => 2,
        Error::Inconsistent(_) | Error::Io(_) => 1,
        _ => 3,
    }
}

type Outcome = Result<String, Failure>;

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&T) -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
            s.push('\n');
            s
        }
        Format::Table => table(value),
    }
}

struct Ctx {
    format: Format,
    max_size: Option<usize>,
    cache: Option<MobiusCache>,
}

fn interval<P: ChainPoset>(poset: &P, bottom: &str, top: &str) -> Result<Interval<P::Elem>, Error> {
    Interval::new(poset, poset.parse(bottom)?, poset.parse(top)?)
}

fn run_interval_command<P: Crosscheck>(poset: &P, ctx: &Ctx, command: &Command) -> Outcome {
    let format = ctx.format;
    match command {
        Command::Mobius { bottom, top } => {
            let iv = interval(poset, bottom, top)?;
            let b = mobius_breakdown(poset, &iv, ctx.cache.as_ref())?;
            let out = emit(format, &b, |b| {
                let euler = b.euler.map_or("-".to_string(), |v| v.to_string());
                format!(
                    "mu({}, {}) = {}\n  closed form  {}\n  morse        {}\n  brute force  {}\n  euler        {}\n",
                    show(&b.bottom),
                    show(&b.top),
                    b.brute_force,
                    b.closed_form,
                    b.morse,
                    b.brute_force,
                    euler
                )
            });
            if b.agree() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Mismatch("methods disagree".into()))
            }
        }
        Command::Chains { bottom, top } => {
            let iv = interval(poset, bottom, top)?;
            let listing = chain_listing(poset, &iv);
            Ok(emit(format, &listing, |l| {
                let mut s = String::new();
                for c in &l.chains {
                    let _ = writeln!(s, "{}  {}", c.id, c.embeddings.join(" "));
                }
                let _ = writeln!(s, "{} maximal chains", l.chains.len());
                s
            }))
        }
        Command::MorseReport { bottom, top } => {
            let iv = interval(poset, bottom, top)?;
            let analysis = analyze(poset, &iv)?;
            let report = MorseReport::from_analysis(poset, &analysis);
            Ok(emit(format, &report, |r| {
                let mut s = render_table(poset, &analysis);
                let _ = writeln!(s, "\nmu = {}", r.mobius);
                match &r.homotopy {
                    Some(h) => {
                        let _ = writeln!(s, "homotopy type: {h}");
                    }
                    None => s.push_str("homotopy type: open interval is empty\n"),
                }
                s
            }))
        }
        Command::Homotopy { bottom, top } => {
            let iv = interval(poset, bottom, top)?;
            let report = homotopy_report(poset, &iv)?;
            Ok(emit(format, &report, |r| match &r.homotopy {
                Some(h) => format!("{h}\n"),
                None if r.rank_gap == 0 => "point interval\n".to_string(),
                None => "empty\n".to_string(),
            }))
        }
        _ => unreachable!("not an interval command"),
    }
}

fn show(s: &str) -> &str {
    if s.is_empty() {
        "ε"
    } else {
        s
    }
}

fn crosscheck_table(r: &CrosscheckReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "{} poset{}, max size {}",
        r.poset,
        r.alphabet
            .as_ref()
            .map(|a| format!(", alphabet {a}"))
            .unwrap_or_default(),
        r.max_size
    );
    let _ = writeln!(s, "intervals          {}", r.summary.intervals);
    let _ = writeln!(s, "maximal chains     {}", r.summary.chains);
    let _ = writeln!(s, "critical chains    {}", r.summary.critical_chains);
    let _ = writeln!(s, "max critical/int.  {}", r.summary.max_critical_per_interval);
    let _ = writeln!(s, "mismatches         {}", r.summary.mismatches);
    for m in &r.mismatches {
        let _ = writeln!(s, "  [{}, {}] {}", show(&m.bottom), m.top, m.what);
    }
    s
}

fn iso_table(c: &IsoCatalog) -> String {
    let mut s = String::new();
    for e in &c.entries {
        let found = match &e.matched {
            Some(m) => format!("[{}, {}]", show(&m.bottom), show(&m.top)),
            None => "-".to_string(),
        };
        let _ = writeln!(s, "[{}, {}]  size {}  {}", e.bottom, e.top, e.size, found);
    }
    let _ = writeln!(s, "{} matched, {} unmatched", c.matched, c.unmatched);
    s
}

fn run(cli: &Cli) -> Outcome {
    let alphabet: Alphabet = cli.alphabet.parse()?;
    let cache = cli.cache.as_ref().map(MobiusCache::open).transpose()?;
    let ctx = Ctx {
        format: cli.format,
        max_size: cli.max_size,
        cache,
    };
    let patterns = if cli.force { PatternOrder::unlimited() } else { PatternOrder::new() };
    let words = if cli.force {
        FactorOrder::unlimited(alphabet.clone())
    } else {
        FactorOrder::new(alphabet.clone())
    };

    match &cli.command {
        Command::Mobius { .. } | Command::Chains { .. } | Command::MorseReport { .. } | Command::Homotopy { .. } => {
            match cli.poset {
                PosetKind::Pattern => run_interval_command(&patterns, &ctx, &cli.command),
                PosetKind::Factor => run_interval_command(&words, &ctx, &cli.command),
            }
        }
        Command::Bijection { action } => match action {
            BijectionAction::Map { word } => {
                let pair = BijectionPair::from_word(&Alphabet::ab().parse_word(word)?)?;
                Ok(emit(ctx.format, &pair, |p| format!("{}\n", p.permutation)))
            }
            BijectionAction::Unmap { permutation } => {
                let perm: Permutation = permutation.parse()?;
                let pair = BijectionPair::from_permutation(&perm)?;
                Ok(emit(ctx.format, &pair, |p| format!("{}\n", show(&p.word))))
            }
            BijectionAction::Verify => {
                let report = verify_isomorphism(ctx.max_size.unwrap_or(6))?;
                let out = emit(ctx.format, &report, |r| {
                    let mut s = String::new();
                    let _ = writeln!(s, "words up to length {}: {}", r.max_len - 1, r.words);
                    let _ = writeln!(s, "pairs checked: {}", r.pairs_checked);
                    for (m, count) in &r.avoider_counts {
                        let _ = writeln!(s, "avoiders in S_{m}: {count}");
                    }
                    let _ = writeln!(s, "image is the avoider set: {}", r.image_is_avoider_set);
                    let _ = writeln!(s, "round trip: {}", r.round_trip_ok);
                    let _ = writeln!(s, "counterexamples: {}", r.counterexamples.len());
                    s
                });
                if report.passed() {
                    Ok(out)
                } else {
                    print!("{out}");
                    Err(Failure::Mismatch("isomorphism check failed".into()))
                }
            }
        },
        Command::Crosscheck => {
            let max_size = ctx.max_size.unwrap_or(5);
            let report = match cli.poset {
                PosetKind::Pattern => crosscheck(&patterns, max_size, ctx.cache.as_ref())?,
                PosetKind::Factor => crosscheck_factor(&words, max_size, ctx.cache.as_ref())?,
            };
            let out = emit(ctx.format, &report, crosscheck_table);
            if report.passed() {
                Ok(out)
            } else {
                print!("{out}");
                Err(Failure::Mismatch(format!("{} mismatches", report.mismatches.len())))
            }
        }
        Command::Table1 => match ctx.format {
            Format::Table => Ok(table1()),
            Format::Json => {
                let iv = interval(&patterns, "1", "213546")?;
                let report = MorseReport::from_analysis(&patterns, &analyze(&patterns, &iv)?);
                Ok(emit(Format::Json, &report, |_| String::new()))
            }
        },
        Command::IsoSearch { word_cap } => {
            let catalog = iso_search(ctx.max_size.unwrap_or(4), *word_cap, &alphabet)?;
            Ok(emit(ctx.format, &catalog, iso_table))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(3);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Mismatch(what)) => {
            eprintln!("mismatch: {what}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(err)) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
