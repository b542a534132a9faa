//! Command line front end. Subcommands cover counting, enumeration, factor
//! and geometric avoidance, paving and its inverse, insertion families, the
//! growth bounds, and the verification suites. Exit code 0 is success, 1 is
//! a failed verification, 2 is a usage error.

mod formats;
mod shards;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::Zero;

use formats::{PatternSource, TableRow};
use rectwalk_core::analysis::{bounds, count_table, decimal_string};
use rectwalk_core::geometry::{contains_pattern, GeomPattern};
use rectwalk_core::pattern::{count_avoiding, insertion_family, FactorPattern};
use rectwalk_core::paving::{pave, procedure, render_ascii, render_svg};
use rectwalk_core::walk::{completions, Walk, WalkClass};

/// Listing walks one by one is exponential in the length; tables come from
/// recurrences and reach much further. Both limits yield to --force.
const ENUMERATION_CAP: usize = 12;
const TABLE_CAP: usize = 50;

const DECIMAL_DIGITS: usize = 12;

#[derive(Parser)]
#[command(name = "rectwalk", version, about = "History quadrant walks and their rectangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the count of walks per length as a table
    Count(CountArgs),
    /// List every walk of one length
    Enumerate(EnumerateArgs),
    /// Count walks avoiding a pattern, per length
    AvoidCount(AvoidCountArgs),
    /// Pave a walk into its rectangulation
    Pave(PaveArgs),
    /// Read the walk back off a rectangulation
    Procedure(ProcedureArgs),
    /// List the walks obtained by inserting copies of a pattern
    Insert(InsertArgs),
    /// Print the growth bounds for a pattern size and factor length
    Bounds(BoundsArgs),
    /// Run a verification suite and report PASS or FAIL per check
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClassArg {
    Hqw,
    Lhqw,
    Lhqwadm,
    Lhqe,
}

impl ClassArg {
    fn class(self) -> WalkClass {
        match self {
            ClassArg::Hqw => WalkClass::Hqw,
            ClassArg::Lhqw => WalkClass::Lhqw,
            ClassArg::Lhqwadm => WalkClass::LhqwAdm,
            ClassArg::Lhqe => WalkClass::Lhqe,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Text,
    Svg,
}

#[derive(Args)]
struct CountArgs {
    #[arg(long)]
    class: ClassArg,
    #[arg(long = "n-max")]
    n_max: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    class: ClassArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct AvoidCountArgs {
    /// Walk class to count; factor patterns only. Defaults to lhqwadm.
    #[arg(long)]
    class: Option<ClassArg>,
    /// Single length to count
    #[arg(long)]
    n: Option<usize>,
    /// Count every length up to this one
    #[arg(long = "n-max")]
    n_max: Option<usize>,
    /// Factor pattern as inline walk text
    #[arg(long)]
    walk: Option<String>,
    /// Factor pattern as a walk text file
    #[arg(long = "walk-file")]
    walk_file: Option<PathBuf>,
    /// Pattern file: walk text for a factor, segment JSON for geometry
    #[arg(long = "pattern-file")]
    pattern_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    force: bool,
}

#[derive(Args)]
struct PaveArgs {
    /// Excursion as inline walk text
    #[arg(long)]
    walk: Option<String>,
    /// Excursion as a walk text file
    #[arg(long = "walk-file")]
    walk_file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ProcedureArgs {
    /// Rectangulation JSON file
    #[arg(value_name = "RECT_JSON")]
    rect: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct InsertArgs {
    /// Host walk as inline walk text
    #[arg(long)]
    walk: Option<String>,
    /// Host walk as a walk text file
    #[arg(long = "walk-file")]
    walk_file: Option<PathBuf>,
    /// Factor pattern to insert, as a walk text file
    #[arg(long = "pattern-file")]
    pattern_file: PathBuf,
    /// Number of copies to insert
    #[arg(long)]
    q: usize,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Pattern size
    #[arg(long = "L")]
    pattern_size: usize,
    /// Factor length; defaults to three times the pattern size
    #[arg(long = "L0")]
    factor_length: Option<usize>,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Roundtrip,
    Distinctness,
    Insertion,
    Inequality,
    Proportion,
    All,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    /// Largest walk length the suite works through
    #[arg(long, default_value_t = 6)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long)]
    force: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Count(args) => cmd_count(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::AvoidCount(args) => cmd_avoid_count(args),
        Command::Pave(args) => cmd_pave(args),
        Command::Procedure(args) => cmd_procedure(args),
        Command::Insert(args) => cmd_insert(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn emit(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("--out: cannot write {}", path.display()))?,
        None => print!("{content}"),
    }
    Ok(())
}

fn check_cap(n: usize, cap: usize, force: bool, flag: &str) -> Result<()> {
    if n > cap && !force {
        bail!("{flag} {n} exceeds the cap of {cap}; pass --force to lift it");
    }
    Ok(())
}

/// The walk named by exactly one of --walk and --walk-file.
fn load_walk(inline: Option<&String>, file: Option<&PathBuf>) -> Result<Walk> {
    match (inline, file) {
        (Some(text), None) => formats::parse_walk(text).context("--walk"),
        (None, Some(path)) => formats::read_walk_file(path).context("--walk-file"),
        _ => bail!("exactly one of --walk and --walk-file is required"),
    }
}

fn render_table(rows: &[TableRow], format: FormatArg) -> Result<String> {
    match format {
        FormatArg::Csv => Ok(formats::table_csv(rows)),
        FormatArg::Json => Ok(formats::table_json(rows)),
        FormatArg::Text => Ok(formats::table_text(rows)),
        FormatArg::Svg => bail!("--format svg does not apply to count tables"),
    }
}

fn cmd_count(args: CountArgs) -> Result<u8> {
    check_cap(args.n_max, TABLE_CAP, args.force, "--n-max")?;
    let table = count_table(args.class.class(), args.n_max, None)
        .map_err(|e| anyhow::anyhow!("--class: {e}"))?;
    let rows: Vec<TableRow> = table
        .entries()
        .iter()
        .enumerate()
        .map(|(n, entry)| TableRow { n, value: entry.value.clone() })
        .collect();
    emit(args.out.as_ref(), &render_table(&rows, args.format)?)?;
    Ok(0)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8> {
    check_cap(args.n, ENUMERATION_CAP, args.force, "--n")?;
    let class = args.class.class();
    let walks: Vec<String> = shards::map_shards(args.n, class, args.threads, |prefix| {
        completions(prefix, args.n, class).map(|w| w.to_string()).collect::<Vec<_>>()
    })
    .map_err(|e| anyhow::anyhow!("--class: {e}"))?
    .into_iter()
    .flatten()
    .collect();
    let content = match args.format {
        FormatArg::Text => {
            let mut out = String::new();
            for w in &walks {
                out.push_str(w);
                out.push('\n');
            }
            out
        }
        FormatArg::Json => serde_json::to_string_pretty(&walks).expect("strings serialize") + "\n",
        FormatArg::Csv | FormatArg::Svg => {
            bail!("--format: enumerate prints walk text or JSON")
        }
    };
    emit(args.out.as_ref(), &content)?;
    Ok(0)
}

fn cmd_avoid_count(args: AvoidCountArgs) -> Result<u8> {
    let sources =
        args.walk.is_some() as u8 + args.walk_file.is_some() as u8 + args.pattern_file.is_some() as u8;
    if sources != 1 {
        bail!("exactly one of --walk, --walk-file, --pattern-file is required");
    }
    let pattern = if let Some(path) = &args.pattern_file {
        formats::read_pattern_file(path).context("--pattern-file")?
    } else {
        let walk = load_walk(args.walk.as_ref(), args.walk_file.as_ref())?;
        PatternSource::Factor(
            FactorPattern::new(walk).map_err(|e| anyhow::anyhow!("--walk: {e}"))?,
        )
    };

    let range = match (args.n, args.n_max) {
        (Some(n), None) => n..=n,
        (None, Some(n_max)) => 0..=n_max,
        _ => bail!("exactly one of --n and --n-max is required"),
    };
    let top = *range.end();

    let rows = match &pattern {
        PatternSource::Factor(p) => {
            check_cap(top, TABLE_CAP, args.force, if args.n.is_some() { "--n" } else { "--n-max" })?;
            let class = args.class.unwrap_or(ClassArg::Lhqwadm).class();
            range
                .map(|n| {
                    let value =
                        count_avoiding(n, class, p).map_err(|e| anyhow::anyhow!("--class: {e}"))?;
                    Ok(TableRow { n, value })
                })
                .collect::<Result<Vec<_>>>()?
        }
        PatternSource::Geometric(p) => {
            if args.class.map(ClassArg::class).is_some_and(|c| c != WalkClass::Lhqe) {
                bail!("--class: geometric avoidance counts excursions, so only lhqe applies");
            }
            check_cap(top, ENUMERATION_CAP, args.force, if args.n.is_some() { "--n" } else { "--n-max" })?;
            range
                .map(|n| {
                    let value = count_avoiding_rect_sharded(n, p, args.threads);
                    Ok(TableRow { n, value })
                })
                .collect::<Result<Vec<_>>>()?
        }
    };
    emit(args.out.as_ref(), &render_table(&rows, args.format)?)?;
    Ok(0)
}

/// Paves every excursion of length n and counts the ones avoiding the
/// pattern, splitting the enumeration across threads.
fn count_avoiding_rect_sharded(n: usize, p: &GeomPattern, threads: usize) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    shards::map_shards(n, WalkClass::Lhqe, threads, |prefix| {
        let mut count = 0usize;
        for e in completions(prefix, n, WalkClass::Lhqe) {
            let r = pave(&e).expect("excursions pave");
            if !contains_pattern(&r, p) {
                count += 1;
            }
        }
        BigUint::from(count)
    })
    .expect("excursions form a finite class")
    .into_iter()
    .sum()
}

fn cmd_pave(args: PaveArgs) -> Result<u8> {
    let walk = load_walk(args.walk.as_ref(), args.walk_file.as_ref())?;
    let r = pave(&walk).map_err(|e| anyhow::anyhow!("{e}"))?;
    let content = match args.format {
        FormatArg::Text => render_ascii(&r),
        FormatArg::Svg => render_svg(&r),
        FormatArg::Json => formats::rectangulation_json(&r),
        FormatArg::Csv => bail!("--format csv does not apply to pave"),
    };
    emit(args.out.as_ref(), &content)?;
    Ok(0)
}

fn cmd_procedure(args: ProcedureArgs) -> Result<u8> {
    let r = formats::read_rectangulation_file(&args.rect)?;
    let walk = procedure(&r).map_err(|e| anyhow::anyhow!("{e}"))?;
    let content = match args.format {
        FormatArg::Text => format!("{walk}\n"),
        FormatArg::Json => {
            serde_json::to_string_pretty(&serde_json::json!({ "walk": walk.to_string() }))
                .expect("walk serializes")
                + "\n"
        }
        FormatArg::Csv | FormatArg::Svg => bail!("--format: procedure prints walk text or JSON"),
    };
    emit(args.out.as_ref(), &content)?;
    Ok(0)
}

fn cmd_insert(args: InsertArgs) -> Result<u8> {
    let host = load_walk(args.walk.as_ref(), args.walk_file.as_ref())?;
    let pattern = match formats::read_pattern_file(&args.pattern_file).context("--pattern-file")? {
        PatternSource::Factor(p) => p,
        PatternSource::Geometric(_) => {
            bail!("--pattern-file: insert takes a walk factor, not a geometric pattern")
        }
    };
    let family = insertion_family(&host, &pattern, args.q).map_err(|e| anyhow::anyhow!("{e}"))?;
    let content = match args.format {
        FormatArg::Text => {
            let mut out = String::new();
            for w in &family {
                out.push_str(&w.to_string());
                out.push('\n');
            }
            out
        }
        FormatArg::Json => {
            let texts: Vec<String> = family.iter().map(|w| w.to_string()).collect();
            serde_json::to_string_pretty(&texts).expect("strings serialize") + "\n"
        }
        FormatArg::Csv | FormatArg::Svg => bail!("--format: insert prints walk text or JSON"),
    };
    emit(args.out.as_ref(), &content)?;
    Ok(0)
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8> {
    if args.pattern_size == 0 {
        bail!("--L must be at least 1");
    }
    let factor_length = args.factor_length.unwrap_or(3 * args.pattern_size);
    if factor_length == 0 {
        bail!("--L0 must be at least 1");
    }
    let report = bounds(args.pattern_size, factor_length);
    let rows = [
        ("main_bound", &report.main_bound),
        ("refined_bound", &report.refined_bound),
        ("radius", &report.radius),
    ];
    let content = match args.format {
        FormatArg::Text => {
            let mut out = format!("L = {}\nL0 = {}\n", report.pattern_size, report.factor_length);
            for (name, value) in rows {
                out.push_str(&format!(
                    "{name} = {value} = {}\n",
                    decimal_string(value, DECIMAL_DIGITS)
                ));
            }
            out
        }
        FormatArg::Csv => {
            let mut out = String::from("quantity,exact,decimal\n");
            for (name, value) in rows {
                out.push_str(&format!(
                    "{name},{value},{}\n",
                    decimal_string(value, DECIMAL_DIGITS)
                ));
            }
            out
        }
        FormatArg::Json => {
            let doc = serde_json::json!({
                "L": report.pattern_size,
                "L0": report.factor_length,
                "main_bound": {
                    "exact": report.main_bound.to_string(),
                    "decimal": decimal_string(&report.main_bound, DECIMAL_DIGITS),
                },
                "refined_bound": {
                    "exact": report.refined_bound.to_string(),
                    "decimal": decimal_string(&report.refined_bound, DECIMAL_DIGITS),
                },
                "radius": {
                    "exact": report.radius.to_string(),
                    "decimal": decimal_string(&report.radius, DECIMAL_DIGITS),
                },
            });
            serde_json::to_string_pretty(&doc).expect("bounds serialize") + "\n"
        }
        FormatArg::Svg => bail!("--format svg does not apply to bounds"),
    };
    emit(args.out.as_ref(), &content)?;
    Ok(0)
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    check_cap(args.n, ENUMERATION_CAP, args.force, "--n")?;
    let report = match args.suite {
        SuiteArg::All => verify::run_all(args.n, args.threads),
        SuiteArg::Roundtrip => verify::run_one("roundtrip", args.n, args.threads),
        SuiteArg::Distinctness => verify::run_one("distinctness", args.n, args.threads),
        SuiteArg::Insertion => verify::run_one("insertion", args.n, args.threads),
        SuiteArg::Inequality => verify::run_one("inequality", args.n, args.threads),
        SuiteArg::Proportion => verify::run_one("proportion", args.n, args.threads),
    };
    let mut content = String::new();
    for line in &report.lines {
        content.push_str(line);
        content.push('\n');
    }
    emit(args.out.as_ref(), &content)?;
    Ok(if report.failed { 1 } else { 0 })
}
