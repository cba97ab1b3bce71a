//! `sqscope`: distinct-square sequences, constructions and verification
//! suites from the command line.

mod render;

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use sqscope_core::analysis::{
    best_i_for_j, exists_prefix_run, ExistenceQuery, SearchStatus, DEFAULT_BUDGET_MS,
};
use sqscope_core::constructions::{build_yij, ConstructionSpec};
use sqscope_core::verify::{run_suites, Bounds, CheckStatus, Suite, DEFAULT_SEED};
use sqscope_core::{fs_factorize, Engine, Error, SquareAnalysis, Word};

/// The nine `(i, j)` pairs of the published density table.
const PUBLISHED_PAIRS: [(usize, usize); 9] = [
    (1, 2),
    (1, 3),
    (2, 4),
    (2, 5),
    (5, 15),
    (6, 19),
    (8, 25),
    (11, 36),
    (19, 64),
];

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_INCONCLUSIVE: u8 = 4;

#[derive(Parser)]
#[command(name = "sqscope", version, about = "Distinct squares in words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Aligned,
    Digits,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Preset {
    /// The nine rows of the published density table.
    Published,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Wm,
    Yij,
    Zword,
    Catalog,
    Selfish,
    Impossibility,
    Xk,
    Equivalence,
    Factorization,
    Uniqueness,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Distinct-square sequence of a word, or of a construction with `spec <SPEC>`.
    Seq {
        /// A word such as `abaab`, or `spec` followed by a construction spec.
        #[arg(required = true, num_args = 1..=2, value_name = "WORD | spec SPEC")]
        input: Vec<String>,
        #[arg(long, default_value = "fast")]
        engine: Engine,
        #[arg(long, value_enum, default_value = "aligned")]
        format: Format,
        /// Add a position row to the aligned layout.
        #[arg(long)]
        positions: bool,
        /// Columns per block in the aligned layout.
        #[arg(long, default_value_t = 40)]
        width: usize,
    },
    /// Densities of `Y_{i,j}` words, computed by enumeration, as CSV.
    Table {
        #[arg(long, value_enum, conflicts_with = "j")]
        preset: Option<Preset>,
        /// Comma-separated `j` values; `i` is chosen to maximise the density.
        #[arg(long, value_delimiter = ',')]
        j: Vec<usize>,
        #[arg(long, default_value = "fast")]
        engine: Engine,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 20)]
        m_max: usize,
        #[arg(long, default_value_t = 25)]
        j_max: usize,
        #[arg(long, default_value_t = 12)]
        k_max: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Number of random words for the equivalence suite.
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, env = "SQSCOPE_BUDGET_MS", default_value_t = DEFAULT_BUDGET_MS)]
        budget_ms: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Exhaustive search for a word opening with `m` FS-double-squares of given root lengths.
    Search {
        #[arg(long)]
        m: usize,
        #[arg(long = "len-u")]
        len_u: usize,
        #[arg(long = "len-big-u")]
        len_big_u: usize,
        #[arg(long, default_value_t = 2)]
        alphabet: usize,
        /// Word length to scan; defaults to the shortest that fits.
        #[arg(long)]
        length: Option<usize>,
        #[arg(long, env = "SQSCOPE_BUDGET_MS", default_value_t = DEFAULT_BUDGET_MS)]
        budget_ms: u64,
    },
    /// Canonical `(v1, v2, e1, e2)` of an FS-double-square `(u, U)`.
    Factorize {
        u: String,
        #[arg(value_name = "U")]
        big_u: String,
    },
    /// Print the word a construction spec describes, with its predictions.
    Build {
        spec: String,
        #[arg(long, value_enum, default_value = "digits")]
        format: Format,
    },
}

enum Failure {
    Core(Error),
    Usage(String),
    Exit(u8),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Exit(code)) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() {
                EXIT_INPUT
            } else {
                EXIT_INTERNAL
            })
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Seq {
            input,
            engine,
            format,
            positions,
            width,
        } => cmd_seq(&input, engine, format, positions, width),
        Command::Table { preset, j, engine } => cmd_table(preset, &j, engine),
        Command::Verify {
            suite,
            m_max,
            j_max,
            k_max,
            seed,
            count,
            budget_ms,
            format,
        } => {
            let bounds = Bounds {
                m_max,
                j_max,
                k_max,
                seed,
                random_words: count,
                budget: Duration::from_millis(budget_ms),
            };
            cmd_verify(suite, &bounds, format)
        }
        Command::Search {
            m,
            len_u,
            len_big_u,
            alphabet,
            length,
            budget_ms,
        } => {
            let q = match length {
                Some(n) => ExistenceQuery::new(m, len_u, len_big_u, alphabet, n)?,
                None => ExistenceQuery::at_minimal_length(m, len_u, len_big_u, alphabet)?,
            };
            let r = exists_prefix_run(&q, Duration::from_millis(budget_ms))?;
            println!("{}", to_json(&r)?);
            if r.status == SearchStatus::Inconclusive {
                return Err(Failure::Exit(EXIT_INCONCLUSIVE));
            }
            Ok(())
        }
        Command::Factorize { u, big_u } => {
            let f = fs_factorize(&Word::parse(&u)?, &Word::parse(&big_u)?)?;
            println!("{f}");
            Ok(())
        }
        Command::Build { spec, format } => cmd_build(&spec, format),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value).map_err(|e| Failure::Core(Error::Internal(e.to_string())))
}

fn parse_input(input: &[String]) -> Result<Word, Failure> {
    match input {
        [word] if word.contains(':') => Ok(word.parse::<ConstructionSpec>()?.word()?),
        [word] => Ok(Word::parse(word)?),
        [kw, spec] if kw == "spec" => Ok(spec.parse::<ConstructionSpec>()?.word()?),
        _ => Err(Failure::Usage(format!(
            "expected a word or `spec <SPEC>`, got {input:?}"
        ))),
    }
}

fn cmd_seq(
    input: &[String],
    engine: Engine,
    format: Format,
    positions: bool,
    width: usize,
) -> Result<(), Failure> {
    let word = parse_input(input)?;
    let analysis = SquareAnalysis::new(&word, engine)?;
    match format {
        Format::Digits => println!("{}", analysis.sequence()),
        Format::Aligned => {
            print!("{}", render::aligned(&analysis, positions, width));
            print!("{}", render::summary(&analysis));
        }
        Format::Csv => print!("{}", render::csv(&analysis)),
        Format::Json => {
            let d = analysis.density();
            let fs = analysis.fs_positions();
            let out = render::SeqJson {
                word: word.to_string(),
                length: word.len(),
                count: d.distinct_count,
                density: d.density_decimal(),
                sequence: analysis.sequence().to_string(),
                fs_positions: &fs,
            };
            println!("{}", to_json(&out)?);
        }
    }
    Ok(())
}

fn cmd_table(preset: Option<Preset>, js: &[usize], engine: Engine) -> Result<(), Failure> {
    let pairs: Vec<(usize, usize)> = match preset {
        Some(Preset::Published) => PUBLISHED_PAIRS.to_vec(),
        None if js.is_empty() => {
            return Err(Failure::Usage(
                "give --preset published or --j <list>".into(),
            ))
        }
        None => js
            .iter()
            .map(|&j| Ok((best_i_for_j(j)?, j)))
            .collect::<Result<_, Error>>()?,
    };
    println!("i,j,squares,length,density");
    for (i, j) in pairs {
        let word = build_yij(i, j)?.word;
        let d = SquareAnalysis::new(&word, engine)?.density();
        println!(
            "{i},{j},{},{},{}",
            d.distinct_count,
            d.length,
            d.density_3dp()
        );
    }
    Ok(())
}

fn cmd_verify(suite: SuiteArg, bounds: &Bounds, format: ReportFormat) -> Result<(), Failure> {
    let suites: Vec<Suite> = match suite {
        SuiteArg::All => Suite::ALL.to_vec(),
        SuiteArg::Wm => vec![Suite::Wm],
        SuiteArg::Yij => vec![Suite::Yij],
        SuiteArg::Zword => vec![Suite::Zword],
        SuiteArg::Catalog => vec![Suite::Catalog],
        SuiteArg::Selfish => vec![Suite::Selfish],
        SuiteArg::Impossibility => vec![Suite::Impossibility],
        SuiteArg::Xk => vec![Suite::Xk],
        SuiteArg::Equivalence => vec![Suite::Equivalence],
        SuiteArg::Factorization => vec![Suite::Factorization],
        SuiteArg::Uniqueness => vec![Suite::Uniqueness],
    };
    let reports = run_suites(&suites, bounds)?;
    match format {
        ReportFormat::Json => println!("{}", to_json(&reports)?),
        ReportFormat::Text => {
            for r in &reports {
                print!("{}", r.render());
            }
        }
    }
    if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        Err(Failure::Exit(EXIT_MISMATCH))
    } else if reports
        .iter()
        .any(|r| r.status == CheckStatus::Inconclusive)
    {
        Err(Failure::Exit(EXIT_INCONCLUSIVE))
    } else {
        Ok(())
    }
}

fn cmd_build(spec: &str, format: Format) -> Result<(), Failure> {
    let spec: ConstructionSpec = spec.parse()?;
    let p = spec.build()?;
    match format {
        Format::Json => {
            let out = json!({
                "spec": spec.to_string(),
                "word": p.word.to_string(),
                "length": p.expected_length,
                "expectedSequence": p.expected_sequence.as_ref().map(|s| s.to_string()),
                "expectedCount": p.expected_count,
                "expectedDensity": p.expected_density.map(|d| d.to_string()),
                "fsPrefix": p.expected_fs_prefix.map(|f| json!({
                    "m": f.m, "len_u": f.len_u, "len_U": f.len_big_u,
                })),
            });
            println!("{out}");
        }
        _ => println!("{}", p.word),
    }
    Ok(())
}
