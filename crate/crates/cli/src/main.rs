use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;

use bitour::acyclic::{build_dx, dx_representation, has_4_dicycle, IntegerSet};
use bitour::oracle::{brute_decide, census_iter, random_bipartite, recount, seeded_rng};
use bitour::quad::{no_aug, SpecMode};
use bitour::tri::{one_aug_21, one_aug_3};
use bitour::{BipartiteTournament, Completion, Signature};
use bitour_cli::{export_dot, parse_document, DigraphDocument, FormatError};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "bitour",
    version,
    about = "Tournament completions of bipartite tournaments"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a document and summarize it
    Validate { file: PathBuf },
    /// Exit 0 if the bipartite tournament has no dicycle, 1 otherwise
    Acyclic { file: PathBuf },
    /// Print an integer set X with D isomorphic to D_X
    DxRepr { file: PathBuf },
    /// Write D_X for a comma-separated set of positive integers
    BuildDx {
        #[arg(long, value_delimiter = ',', required = true)]
        set: Vec<u64>,
    },
    /// Decide whether a completion with the given property exists
    Decide { problem: Problem, file: PathBuf },
    /// Write a completion with the given property
    Construct { problem: Problem, file: PathBuf },
    /// Brute-force queries over all completions
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Write a random bipartite tournament
    Gen {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Write the document as Graphviz DOT
    ExportDot { file: PathBuf },
}

#[derive(Subcommand)]
enum OracleQuery {
    /// Augmented dicycle counts per completion and signature
    Census {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        k: Vec<usize>,
    },
    /// Whether some completion has exactly `t` augmented k-dicycles with the given signatures
    Decide {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: usize,
        /// A signature such as `2,1`; repeat for several
        #[arg(long = "sig", required = true, value_parser = parse_signature)]
        sigs: Vec<Signature>,
        file: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Problem {
    /// exactly one augmented 3-dicycle, of signature (2,1)
    #[value(name = "one21")]
    One21,
    /// exactly one augmented 3-dicycle
    #[value(name = "one3")]
    One3,
    /// no augmented (2,2)-dicycle
    #[value(name = "no22")]
    No22,
    /// no augmented (3,1)-dicycle
    #[value(name = "no31")]
    No31,
    /// no augmented 4-dicycle
    #[value(name = "no31-22")]
    No3122,
}

impl Problem {
    fn solve(self, d: &BipartiteTournament) -> Result<Option<Completion>, bitour::Error> {
        let mode = match self {
            Problem::One21 => return Ok(one_aug_21(d)),
            Problem::One3 => return Ok(one_aug_3(d)),
            Problem::No22 => SpecMode::DOnly,
            Problem::No31 => SpecMode::COnly,
            Problem::No3122 => SpecMode::Both,
        };
        Ok(no_aug(d, mode)?.map(|r| r.completion))
    }
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    match parts.as_slice() {
        [a, b] => {
            let a = a.parse().map_err(|e| format!("{a:?}: {e}"))?;
            let b = b.parse().map_err(|e| format!("{b:?}: {e}"))?;
            Ok(Signature::new(a, b))
        }
        _ => Err(format!("expected `major,minor`, got {s:?}")),
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Format { path: String, source: FormatError },
    #[error(transparent)]
    Graph(#[from] bitour::Error),
}

/// Whether the command answered yes or no.
enum Answer {
    Yes,
    No,
}

impl From<bool> for Answer {
    fn from(b: bool) -> Self {
        if b {
            Answer::Yes
        } else {
            Answer::No
        }
    }
}

fn load(path: &PathBuf) -> Result<DigraphDocument, CliError> {
    let shown = path.display().to_string();
    let mut text = String::new();
    let read = if shown == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| text = t)
    };
    read.map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    parse_document(&text).map_err(|source| CliError::Format {
        path: shown,
        source,
    })
}

fn base(doc: &DigraphDocument) -> BipartiteTournament {
    doc.to_bipartite().expect("validated when parsed")
}

fn run(command: Command) -> Result<Answer, CliError> {
    match command {
        Command::Validate { file } => {
            let doc = load(&file)?;
            print!(
                "{} + {} vertices, {} cross arcs",
                doc.v1.len(),
                doc.v2.len(),
                doc.arcs.len()
            );
            match &doc.intra {
                Some(intra) => println!(", completion with {} intra arcs", intra.len()),
                None => println!(),
            }
            Ok(Answer::Yes)
        }
        Command::Acyclic { file } => {
            let doc = load(&file)?;
            match has_4_dicycle(&base(&doc)) {
                None => {
                    println!("acyclic");
                    Ok(Answer::Yes)
                }
                Some(c) => {
                    let names: Vec<&str> = c.vertices().iter().map(|&v| doc.name(v)).collect();
                    println!("cyclic: {} -> {}", names.join(" -> "), names[0]);
                    Ok(Answer::No)
                }
            }
        }
        Command::DxRepr { file } => {
            let doc = load(&file)?;
            let Some(form) = dx_representation(&base(&doc)) else {
                println!("cyclic: no integer set represents it");
                return Ok(Answer::No);
            };
            let xs: Vec<String> = form.set.as_slice().iter().map(u64::to_string).collect();
            println!("X = {{{}}}", xs.join(", "));
            for (v, x) in form.order.iter().zip(form.set.as_slice()) {
                println!("{} = {x}", doc.name(*v));
            }
            Ok(Answer::Yes)
        }
        Command::BuildDx { set } => {
            let x = IntegerSet::new(set)?;
            let d = build_dx(&x)?;
            let (odd, even): (Vec<u64>, Vec<u64>) = x.as_slice().iter().partition(|&&v| v % 2 == 1);
            let label = |vs: Vec<u64>| vs.iter().map(u64::to_string).collect();
            let doc = DigraphDocument::named(&d, label(odd), label(even));
            let xs: Vec<String> = x.as_slice().iter().map(u64::to_string).collect();
            println!("# D_X for X = {{{}}}", xs.join(", "));
            print!("{doc}");
            Ok(Answer::Yes)
        }
        Command::Decide { problem, file } => {
            let doc = load(&file)?;
            let found = problem.solve(&base(&doc))?.is_some();
            println!("{found}");
            Ok(found.into())
        }
        Command::Construct { problem, file } => {
            let doc = load(&file)?;
            match problem.solve(&base(&doc))? {
                Some(t) => {
                    print!("{}", doc.with_completion(&t));
                    Ok(Answer::Yes)
                }
                None => {
                    eprintln!("no such completion exists");
                    Ok(Answer::No)
                }
            }
        }
        Command::Oracle {
            query: OracleQuery::Census { file, k },
        } => {
            let doc = load(&file)?;
            let line =
                |label: String, counts: std::collections::BTreeMap<(usize, Signature), usize>| {
                    let cells: Vec<String> = counts
                        .iter()
                        .map(|((k, s), n)| format!("{k}{s}={n}"))
                        .collect();
                    println!("{label}: {}", cells.join(" "));
                };
            let given = doc.to_completion().expect("validated when parsed");
            match given {
                Some(t) => line("given".into(), recount(&t, &k)?),
                None => {
                    for (_, entry) in census_iter(&base(&doc), &k)? {
                        line(entry.index.to_string(), entry.counts);
                    }
                }
            }
            Ok(Answer::Yes)
        }
        Command::Oracle {
            query: OracleQuery::Decide { t, k, sigs, file },
        } => {
            let doc = load(&file)?;
            let found = brute_decide(&base(&doc), t, k, &sigs)?;
            println!("{found}");
            Ok(found.into())
        }
        Command::Gen { n1, n2, seed } => {
            let d = random_bipartite(n1, n2, &mut seeded_rng(seed))?;
            println!("# bitour gen --n1 {n1} --n2 {n2} --seed {seed}");
            print!("{}", DigraphDocument::from_bipartite(&d));
            Ok(Answer::Yes)
        }
        Command::ExportDot { file } => {
            print!("{}", export_dot(&load(&file)?));
            Ok(Answer::Yes)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Answer::Yes) => ExitCode::SUCCESS,
        Ok(Answer::No) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
