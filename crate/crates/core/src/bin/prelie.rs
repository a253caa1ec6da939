use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use prelie::checks::Suite;
use prelie::coalgebra::delta_k;
use prelie::operads::{Composition, LabeledElement};
use prelie::presented::PresentedAlgebra;
use prelie::prelie::{nap_product, prelie_product};
use prelie::reconstruct::reconstruct;
use prelie::rigidity::idempotent_e;
use prelie::tree::{enumerate_heap_ordered, enumerate_labeled, enumerate_trees};
use prelie::{Element, Error, FreePreLie, Label, LabeledTree};

/// Exact computations in the free pre-Lie algebra of rooted trees.
///
/// Trees are written `label[child,child,...]`; elements are sums like
/// `2 * a[b] - 1/2 * c`.
#[derive(Parser)]
#[command(name = "prelie", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Product of two elements.
    Product {
        kind: ProductKind,
        lhs: String,
        rhs: String,
    },
    /// The iterated coproduct Δ^k.
    Coproduct {
        x: String,
        #[arg(default_value_t = 1)]
        k: usize,
    },
    /// The projection e onto primitives.
    E { x: String },
    /// Run an identity suite: prelie, nap, coalgebra, dlaw, fundamental, section4, operads or all.
    Check {
        suite: String,
        max_degree: usize,
        seed: u64,
    },
    /// Rebuild a presented algebra (JSON) from its primitives.
    Reconstruct {
        file: PathBuf,
        max_degree: usize,
        /// Apply a random change of basis with this seed first.
        #[arg(long)]
        change_basis: Option<u64>,
    },
    /// Write the free algebra on the given generators as a presented algebra.
    Present {
        /// Comma-separated generator names.
        alphabet: String,
        max_degree: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Partial composition of labeled trees, written `n;root;parents`.
    Compose {
        kind: ProductKind,
        t: String,
        i: usize,
        s: String,
    },
    /// List trees.
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Prelie,
    Nap,
}

#[derive(Subcommand)]
enum EnumerateKind {
    /// Rooted trees with `n` vertices labeled from a comma-separated alphabet.
    Trees { alphabet: String, n: usize },
    /// Rooted trees on the vertex set {1..n}.
    Labeled { n: usize },
    /// Heap-ordered trees on {1..n}.
    Heap { n: usize },
}

enum Failure {
    Check(String),
    Usage(String),
    Validation(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Validation(_) => Failure::Validation(e.to_string()),
            Error::Io(_) => Failure::Io(e.to_string()),
            Error::NotIsomorphic { .. } => Failure::Check(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn alphabet(text: &str) -> Result<Vec<Label>, Error> {
    text.split(',').map(|s| Label::new(s.trim())).collect()
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Product { kind, lhs, rhs } => {
            let (x, y) = (Element::parse(&lhs)?, Element::parse(&rhs)?);
            let p = match kind {
                ProductKind::Prelie => prelie_product(&x, &y),
                ProductKind::Nap => nap_product(&x, &y),
            };
            println!("{p}");
        }
        Command::Coproduct { x, k } => println!("{}", delta_k(&Element::parse(&x)?, k)),
        Command::E { x } => println!("{}", idempotent_e(&Element::parse(&x)?)),
        Command::Check { suite, max_degree, seed } => {
            let suite: Suite = suite.parse()?;
            let reports = suite.run(max_degree, seed)?;
            for r in &reports {
                println!("{r}");
            }
            let failed = reports.iter().filter(|r| !r.passed()).count();
            if failed > 0 {
                return Err(Failure::Check(format!("{failed} of {} checks failed", reports.len())));
            }
            println!("all {} checks passed", reports.len());
        }
        Command::Reconstruct { file, max_degree, change_basis } => {
            let mut alg = PresentedAlgebra::load(&file)?;
            if let Some(seed) = change_basis {
                alg = alg.change_basis(&mut ChaCha8Rng::seed_from_u64(seed));
            }
            let validated = alg.validate().map_err(Error::from)?;
            println!("{}", reconstruct(&validated, max_degree)?);
        }
        Command::Present { alphabet: names, max_degree, output } => {
            let (alg, _) = PresentedAlgebra::from_free(&FreePreLie::new(alphabet(&names)?), max_degree)?;
            let json = alg.to_json();
            match output {
                Some(path) => fs::write(&path, json + "\n").map_err(Error::from)?,
                None => println!("{json}"),
            }
        }
        Command::Compose { kind, t, i, s } => {
            let (t, s) = (LabeledTree::parse(&t)?, LabeledTree::parse(&s)?);
            let comp = match kind {
                ProductKind::Prelie => Composition::PreLie,
                ProductKind::Nap => Composition::Nap,
            };
            let out: LabeledElement = comp.compose(&t, i, &s)?;
            println!("{out}");
        }
        Command::Enumerate { kind } => {
            let lines: Vec<String> = match kind {
                EnumerateKind::Trees { alphabet: names, n } => {
                    enumerate_trees(&alphabet(&names)?, n)?.iter().map(ToString::to_string).collect()
                }
                EnumerateKind::Labeled { n } => enumerate_labeled(n)?.iter().map(ToString::to_string).collect(),
                EnumerateKind::Heap { n } => enumerate_heap_ordered(n)?.iter().map(ToString::to_string).collect(),
            };
            for l in &lines {
                println!("{l}");
            }
            eprintln!("{} trees", lines.len());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(m)) => {
            eprintln!("{m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Validation(m)) => {
            eprintln!("{m}");
            ExitCode::from(3)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(4)
        }
    }
}
