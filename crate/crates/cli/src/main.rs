use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use lexshell::enumeration::{
    based_matroids, enumerate_up_to, format_db, parse_db, parse_revlex, serialize_revlex, RevlexRecord,
};
use lexshell::gamma::restricted_h_by_label;
use lexshell::oseq::{check_conditions, render_table};
use lexshell::{
    construct, lex_shelling, restricted_h_family, run_full_verification, BasedMatroid, ElementSet, Matroid,
};

#[derive(Parser)]
#[command(name = "lexshell", version, about = "Lexicographic shellings, restricted h-vectors and pure order ideals of matroids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(clap::Args)]
struct Based {
    /// Matroid JSON `{"n": .., "bases": [[..], ..]}` or a revlex line `n r indicator`
    file: PathBuf,
    /// Distinguished basis, e.g. `1,2,3`; defaults to the lexicographically smallest basis
    #[arg(long, value_delimiter = ',')]
    base: Option<Vec<usize>>,
    /// Order of the elements outside the base, e.g. `5,4,6`; defaults to ascending
    #[arg(long, value_delimiter = ',')]
    order: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Command {
    /// Check the basis axioms (exit 2 when they fail)
    Validate { file: PathBuf },
    /// Print the f-vector and h-vector
    Hvector { file: PathBuf },
    /// Print the lexicographic shelling with restriction sets
    Shell(Based),
    /// Print h(Gamma_I) for every independent I off the base
    Gammas(Based),
    /// Construct the order ideal
    Construct {
        #[command(flatten)]
        based: Based,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Construct and check every condition (exit 3 when any fails)
    Check {
        #[command(flatten)]
        based: Based,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Enumerate matroid classes of one rank and their based-matroid signatures
    Enumerate {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        max_n: usize,
        /// Write matroids.json, revlex.txt and signatures.tsv here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Validate every record of a revlex database file
    ParseDb { file: PathBuf },
    /// Enumerate, construct and check everything for one rank (exit 3 when anything fails)
    VerifyAll {
        #[arg(long)]
        rank: usize,
        /// Worker threads; defaults to the number of cores
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        /// Witnesses listed per check in the table output
        #[arg(long, default_value_t = 5)]
        witnesses: usize,
    },
}

/// Exit code 1 with a message.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<ExitCode, Usage>;

const INVALID: u8 = 2;
const FAILED: u8 = 3;

enum Input {
    Json { n: usize, bases: Vec<Vec<usize>> },
    Revlex(RevlexRecord),
}

fn read_input(path: &Path) -> Result<Input, Usage> {
    let text = fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))?;
    let text = text.trim();
    if text.starts_with('{') {
        let v: serde_json::Value = serde_json::from_str(text)?;
        let n = v["n"].as_u64().ok_or_else(|| Usage("matroid JSON needs an integer `n`".into()))? as usize;
        let bases: Vec<Vec<usize>> = serde_json::from_value(v["bases"].clone())
            .map_err(|e| Usage(format!("matroid JSON needs `bases` as arrays of integers: {e}")))?;
        return Ok(Input::Json { n, bases });
    }
    let records = parse_db(text)?;
    match records.as_slice() {
        [r] => Ok(Input::Revlex(r.clone())),
        _ => Err(Usage(format!("expected one revlex record, found {}", records.len()))),
    }
}

fn to_matroid(input: Input) -> lexshell::Result<Matroid> {
    match input {
        Input::Json { n, bases } => Matroid::from_lists(n, &bases),
        Input::Revlex(r) => parse_revlex(&r),
    }
}

fn load(path: &Path) -> Result<Matroid, Usage> {
    Ok(to_matroid(read_input(path)?)?)
}

fn load_based(args: &Based) -> Result<BasedMatroid, Usage> {
    let m = load(&args.file)?;
    let bm = match &args.base {
        Some(b) => {
            let base: ElementSet = b.iter().copied().collect();
            BasedMatroid::with_base(m, base)?
        }
        None => BasedMatroid::natural(m),
    };
    Ok(match &args.order {
        Some(order) => BasedMatroid::new(bm.matroid().clone(), bm.base(), order.clone())?,
        None => bm,
    })
}

fn vector(h: &lexshell::HVector) -> serde_json::Value {
    json!(h.entries())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Validate { file } => match to_matroid(read_input(&file)?) {
            Ok(m) => {
                println!("valid: rank {} on {} elements, {} bases", m.rank(), m.n(), m.bases().len());
                Ok(ExitCode::SUCCESS)
            }
            Err(e) => {
                println!("invalid: {e}");
                Ok(ExitCode::from(INVALID))
            }
        },
        Command::Hvector { file } => {
            let m = load(&file)?;
            println!("f = {}", m.f_vector());
            println!("h = {}", m.h_vector());
            Ok(ExitCode::SUCCESS)
        }
        Command::Shell(args) => {
            let bm = load_based(&args)?;
            let sr = lex_shelling(&bm);
            println!("vertex order: {:?}", bm.vertex_order());
            for (b, r) in sr.ordered_bases.iter().zip(&sr.restriction_sets) {
                println!("{b}  R = {r}");
            }
            println!("h = {}", lexshell::h_vector_from_shelling(&sr, bm.rank()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gammas(args) => {
            let bm = load_based(&args)?;
            let family = restricted_h_by_label(&bm);
            let mut keys: Vec<ElementSet> = family.keys().copied().collect();
            keys.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
            let w = keys.iter().map(|k| k.to_string().len()).max().unwrap_or(1);
            println!("{:<w$} | h(Gamma_I)", "I");
            for k in keys {
                println!("{:<w$} | {}", k.to_string(), family[&k]);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Construct { based, format } => {
            let bm = load_based(&based)?;
            let o = construct(&bm)?;
            match format {
                Format::Table => print!("{}", render_table(&bm, &o)),
                Format::Json => println!(
                    "{}",
                    json!({
                        "base": bm.base(),
                        "order": bm.order(),
                        "monomials": o.listing().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                        "f_vector": vector(&o.f_vector()),
                        "h_vector": vector(&bm.matroid().h_vector()),
                    })
                ),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { based, format } => {
            let bm = load_based(&based)?;
            let o = construct(&bm)?;
            let report = check_conditions(&bm, &o, &restricted_h_family(&bm));
            match format {
                Format::Table => {
                    print!("{}", render_table(&bm, &o));
                    for (name, w) in report.failures() {
                        println!("FAIL {name}: {w}");
                    }
                    println!("{}", if report.passed() { "all checks passed" } else { "checks failed" });
                }
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILED)
            })
        }
        Command::Enumerate { rank, max_n, out } => {
            let corpus = based_matroids(enumerate_up_to(rank, max_n)?);
            for n in rank.max(1)..=max_n {
                println!("n = {n}: {}", corpus.classes_on(n));
            }
            println!("classes: {}", corpus.matroids.len());
            println!("signatures: {}", corpus.based.len());
            if let Some(dir) = out {
                fs::create_dir_all(&dir)?;
                fs::write(dir.join("matroids.json"), serde_json::to_string_pretty(&corpus.matroids_json())?)?;
                let records: Vec<RevlexRecord> = corpus.matroids.iter().map(serialize_revlex).collect();
                fs::write(dir.join("revlex.txt"), format_db(&records))?;
                fs::write(dir.join("signatures.tsv"), corpus.signature_lines())?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::ParseDb { file } => {
            let text = fs::read_to_string(&file).map_err(|e| Usage(format!("{}: {e}", file.display())))?;
            let records = parse_db(&text)?;
            let mut invalid = 0;
            let mut by_shape = std::collections::BTreeMap::new();
            for r in &records {
                *by_shape.entry((r.n, r.r)).or_insert(0) += 1;
                if let Err(e) = parse_revlex(r) {
                    invalid += 1;
                    println!("invalid record `{r}`: {e}");
                }
            }
            for ((n, r), k) in by_shape {
                println!("n = {n}, r = {r}: {k}");
            }
            println!("records: {}", records.len());
            println!("invalid: {invalid}");
            Ok(if invalid == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(INVALID)
            })
        }
        Command::VerifyAll {
            rank,
            jobs,
            format,
            witnesses,
        } => {
            if let Some(k) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(k).build_global()?;
            }
            let report = run_full_verification(rank);
            if let Some(e) = &report.error {
                return Err(Usage(e.clone()));
            }
            match format {
                Format::Table => print!("{}", report.summary(witnesses)),
                Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
            }
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(FAILED)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(1);
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
