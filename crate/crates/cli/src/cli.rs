//! Argument parsing and command dispatch.
//!
//! Exit codes: 0 success (or polychromatic for `verify`), 1 not polychromatic,
//! 2 usage or input errors, 3 budget exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use polychrome_core::constructions::{
    build_seed, construct_bipartite_witness, construct_quasi, construct_simply_ordered, extend_seed,
};
use polychrome_core::numbers::{self, NumberResult};
use polychrome_core::search::{self, SearchMode};
use polychrome_core::structure::block_shift_normalize;
use polychrome_core::{Budget, EdgeColoring, Error, FamilyKind, FamilySpec};

use crate::format::{parse_coloring, ColoringFile, NumberFile, SearchReportFile, SeedFile, VerdictFile};
use crate::verify_parallel;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_POLYCHROMATIC: i32 = 1;
pub const EXIT_ERROR: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "polychrome", version, about = "Polychromatic edge-colorings of complete graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Work limit for exact searches, in elementary steps.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for per-color oracle queries.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Matchings spanning n - q vertices.
    F,
    /// Cycles of length n - q.
    C,
    /// 2-regular subgraphs spanning at least n - q vertices.
    R,
    /// r-regular subgraphs spanning n - q vertices.
    Rr,
    /// Connected r-regular subgraphs spanning n - q vertices.
    Crr,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: FamilyArg,
    #[arg(long, default_value_t = 0)]
    pub q: usize,
    /// Degree, for `rr` and `crr`.
    #[arg(long)]
    pub r: Option<usize>,
}

impl FamilyArgs {
    fn spec(&self) -> Result<FamilySpec> {
        let need_r = || self.r.ok_or_else(|| anyhow!("--family rr/crr needs --r"));
        Ok(match self.family {
            FamilyArg::F => FamilySpec::matchings(self.q),
            FamilyArg::C => FamilySpec::cycles(self.q),
            FamilyArg::R => FamilySpec::two_regular(self.q),
            FamilyArg::Rr => FamilySpec::r_regular(need_r()?, self.q),
            FamilyArg::Crr => FamilySpec::connected_r_regular(need_r()?, self.q),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Greedy,
    Blocks,
    Full,
    /// Seeded quasi-simply-ordered structures (R_0, C_0, R_1, C_1).
    Quasi,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the optimal known coloring for a family.
    Construct {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
    },
    /// Check a coloring; exits 0 if polychromatic, 1 if not.
    Verify {
        #[command(flatten)]
        family: FamilyArgs,
        /// Coloring JSON file; stdin when absent or `-`.
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Rewrite an ordered polychromatic coloring into a simply-ordered one.
    Normalize {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long = "in")]
        input: Option<PathBuf>,
    },
    /// Polychromatic number of K_n for a family.
    Number {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        /// Print a TSV table for every valid n up to --n.
        #[arg(long)]
        table: bool,
    },
    /// Cyclic Ramsey numbers: pr_t(s), or c(s) for t = 2.
    Ramsey {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        s: usize,
        /// Brute-force the smallest n forcing an s-cycle with at most j colors (tiny n only).
        #[arg(long)]
        j: Option<usize>,
        /// Print a TSV table for every s up to --s.
        #[arg(long)]
        table: bool,
    },
    /// Search for the largest polychromatic coloring of a given structure.
    Search {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "greedy")]
        mode: ModeArg,
    },
    /// Seed coloring for r-regular families, optionally extended to n vertices.
    Seed {
        #[arg(long)]
        r: usize,
        #[arg(long, default_value_t = 0)]
        q: usize,
        #[arg(long)]
        n: Option<usize>,
    },
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(text.as_bytes()) } else { stdout.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli, stdin) {
        Ok((text, code)) => match emit(&cli, stdout, &text) {
            Ok(()) => code,
            Err(e) => report(stderr, &e),
        },
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, e: &anyhow::Error) -> i32 {
    let _ = writeln!(stderr, "error: {e:#}");
    let budget = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })));
    if budget {
        EXIT_BUDGET
    } else {
        EXIT_ERROR
    }
}

fn emit(cli: &Cli, stdout: &mut dyn Write, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => stdout.write_all(text.as_bytes()).context("cannot write to stdout"),
    }
}

fn json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn read_input(path: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<EdgeColoring> {
    let text = match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).context("cannot read stdin")?;
            s
        }
    };
    parse_coloring(&text)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(String, i32)> {
    let budget = cli.budget.map_or_else(Budget::default, Budget::new);
    let ok = |text: String| Ok((text, EXIT_OK));
    match &cli.command {
        Command::Construct { family, n } => ok(json(&construct(&family.spec()?, *n, &budget)?)?),
        Command::Verify { family, input } => {
            let coloring = read_input(input, stdin)?;
            let verdict = verify_parallel(&coloring, &family.spec()?, &budget, cli.jobs)?;
            let code = if verdict.polychromatic { EXIT_OK } else { EXIT_NOT_POLYCHROMATIC };
            Ok((json(&VerdictFile::new(&verdict, coloring.k()))?, code))
        }
        Command::Normalize { family, input } => {
            let coloring = read_input(input, stdin)?;
            ok(json(&ColoringFile::new(&block_shift_normalize(&coloring, &family.spec()?)?))?)
        }
        Command::Number { family, n, table } => {
            let spec = family.spec()?;
            if !*table {
                return ok(json(&NumberFile::from(number(&spec, *n)?))?);
            }
            let mut text = String::from("n\tvalue\tprovenance\n");
            for m in 1..=*n {
                if let Ok(r) = number(&spec, m) {
                    writeln!(text, "{m}\t{}\t{}", r.value, r.provenance.name())?;
                }
            }
            ok(text)
        }
        Command::Ramsey { t, s, j, table } => {
            if let Some(j) = *j {
                let n = search::cyclic_ramsey_number(*s, *t, j, search::MAX_RAMSEY_N, &budget)?;
                #[derive(serde::Serialize)]
                struct BruteForce {
                    value: Option<usize>,
                    provenance: &'static str,
                }
                return ok(json(&BruteForce { value: n, provenance: "brute_force" })?);
            }
            if !*table {
                return ok(json(&NumberFile::from(numbers::pr_t(*s, *t)?))?);
            }
            let mut text = String::from("s\tvalue\tprovenance\n");
            for s in (*t).max(3)..=*s {
                let r = numbers::pr_t(s, *t)?;
                writeln!(text, "{s}\t{}\t{}", r.value, r.provenance.name())?;
            }
            ok(text)
        }
        Command::Search { family, n, mode } => {
            let spec = family.spec()?;
            let report = match mode {
                ModeArg::Greedy => search::best_simply_ordered(*n, &spec, SearchMode::Greedy, &budget)?,
                ModeArg::Blocks => search::best_simply_ordered(*n, &spec, SearchMode::ExhaustiveBlocks, &budget)?,
                ModeArg::Full => search::search_full(*n, &spec, &budget)?,
                ModeArg::Quasi => search::best_quasi(*n, &spec, &budget)?,
            };
            ok(json(&SearchReportFile::new(&report))?)
        }
        Command::Seed { r, q, n } => {
            let seed = build_seed(*r, *q)?;
            let mut file = SeedFile::new(&seed);
            if let Some(n) = *n {
                let (coloring, classes) = extend_seed(&seed, n, FamilyKind::TwoRegular)?;
                file.coloring = ColoringFile::new(&coloring);
                file.classes = Some(classes);
            }
            ok(json(&file)?)
        }
    }
}

fn number(spec: &FamilySpec, n: usize) -> Result<NumberResult> {
    Ok(match spec.kind {
        FamilyKind::Matchings => numbers::p_f(n, spec.q)?,
        FamilyKind::Cycles => numbers::p_c(n, spec.q)?,
        FamilyKind::TwoRegular => numbers::p_r(n, spec.q)?,
        _ => bail!("no polychromatic number is known for {spec}"),
    })
}

/// The best known coloring: simply-ordered or seeded optima, two-color
/// witnesses where no simply-ordered optimum exists, seed extensions for
/// `r`-regular families.
pub fn construct(spec: &FamilySpec, n: usize, budget: &Budget) -> Result<ColoringFile> {
    spec.validate(n)?;
    match spec.kind {
        FamilyKind::RRegular | FamilyKind::ConnectedRRegular => {
            let seed = build_seed(spec.r, spec.q)?;
            let (coloring, _) = extend_seed(&seed, n, FamilyKind::TwoRegular)?;
            Ok(ColoringFile::new(&coloring))
        }
        FamilyKind::Cycles | FamilyKind::TwoRegular if spec.q <= 1 => {
            if spec.kind == FamilyKind::Cycles && spec.q == 1 && n == 4 {
                return Ok(ColoringFile::new(&search::best_quasi(n, spec, budget)?.coloring));
            }
            Ok(ColoringFile::new(&construct_quasi(spec, n)?.coloring))
        }
        _ => match construct_simply_ordered(spec, n) {
            Ok((coloring, blocks)) => Ok(ColoringFile::with_blocks(&coloring, &blocks)),
            Err(Error::NoSimplyOrderedOptimum { .. }) if n - spec.q >= 5 => {
                Ok(ColoringFile::new(&construct_bipartite_witness(n - spec.q, n)?))
            }
            Err(Error::NoSimplyOrderedOptimum { .. }) => {
                let found = search::full_search(n, spec, 2, budget)?;
                Ok(ColoringFile::new(&found.ok_or_else(|| anyhow!("no 2-coloring found for {spec} on {n} vertices"))?))
            }
            Err(e) => Err(e.into()),
        },
    }
}
