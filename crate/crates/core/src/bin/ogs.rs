//! Command-line front end for the canonical-form library.

use std::io::{IsTerminal, Read, Write};

use clap::{Args, Parser, Subcommand};

use ogs_core::cli::{self, Command, Verb};
use ogs_core::verify::Group;

#[derive(Parser)]
#[command(
    name = "ogs",
    about = "Ordered canonical forms for the symmetric and alternating groups",
    version
)]
struct OgsArgs {
    #[command(subcommand)]
    verb: VerbArgs,
}

#[derive(Args)]
struct GroupDegree {
    /// Group: sym or alt
    #[arg(long)]
    group: String,
    /// Degree n of the underlying set {1..n}
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand)]
enum VerbArgs {
    /// Encode a permutation into its canonical form
    Encode {
        #[command(flatten)]
        at: GroupDegree,
        /// Permutation in one-line or cycle notation; stdin when omitted
        input: Option<String>,
    },
    /// Decode a canonical form back to a permutation
    Decode {
        #[command(flatten)]
        at: GroupDegree,
        /// Canonical form text; stdin when omitted
        input: Option<String>,
    },
    /// Normalize a generator word into canonical form
    Normalize {
        #[command(flatten)]
        at: GroupDegree,
        /// Word text, e.g. "t4^2 * t3^-1"; stdin when omitted
        input: Option<String>,
    },
    /// Run verification suites and print a TSV report
    Verify {
        /// Run every suite (the default when --suite is absent)
        #[arg(long)]
        all: bool,
        /// A single suite: enumeration, uniqueness, generators, exchange,
        /// v_exchange, alt4, relations, maj, conventions, fuzz
        #[arg(long)]
        suite: Option<String>,
        /// Restrict uniqueness certification to one group
        #[arg(long)]
        group: Option<String>,
        /// Degree ceiling for the exhaustive suites
        #[arg(long, default_value_t = 8)]
        nmax: usize,
        /// Seed for the randomized fuzzer
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Exceed the default enumeration budgets
        #[arg(long)]
        force: bool,
    },
    /// Print the full canonical-form table of a group as TSV
    Table {
        #[command(flatten)]
        at: GroupDegree,
        /// Exceed the default table budget
        #[arg(long)]
        force: bool,
    },
    /// Print descent set, major index, inversions, parity, and order
    Stats {
        /// Degree n of the underlying set {1..n}
        #[arg(long)]
        n: usize,
        /// Permutation text; stdin when omitted
        input: Option<String>,
    },
    /// Convert between one-line and cycle notation
    Convert {
        /// Degree n of the underlying set {1..n}
        #[arg(long)]
        n: usize,
        /// Permutation text; stdin when omitted
        input: Option<String>,
    },
}

fn parse_group(text: &str) -> Group {
    match text.parse() {
        Ok(group) => group,
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}

fn resolve_input(explicit: Option<String>) -> Option<String> {
    if explicit.is_some() {
        return explicit;
    }
    let mut stdin = std::io::stdin();
    if stdin.is_terminal() {
        return None;
    }
    let mut buffer = String::new();
    stdin.read_to_string(&mut buffer).ok()?;
    Some(buffer)
}

fn main() {
    let args = OgsArgs::parse();
    let cmd = match args.verb {
        VerbArgs::Encode { at, input } => {
            let mut c = Command::new(Verb::Encode);
            c.group = Some(parse_group(&at.group));
            c.degree = Some(at.n);
            c.input = resolve_input(input);
            c
        }
        VerbArgs::Decode { at, input } => {
            let mut c = Command::new(Verb::Decode);
            c.group = Some(parse_group(&at.group));
            c.degree = Some(at.n);
            c.input = resolve_input(input);
            c
        }
        VerbArgs::Normalize { at, input } => {
            let mut c = Command::new(Verb::Normalize);
            c.group = Some(parse_group(&at.group));
            c.degree = Some(at.n);
            c.input = resolve_input(input);
            c
        }
        VerbArgs::Verify {
            all: _,
            suite,
            group,
            nmax,
            seed,
            force,
        } => {
            let mut c = Command::new(Verb::Verify);
            c.suite = suite;
            c.group = group.as_deref().map(parse_group);
            c.nmax = nmax;
            c.seed = seed;
            c.force = force;
            c
        }
        VerbArgs::Table { at, force } => {
            let mut c = Command::new(Verb::Table);
            c.group = Some(parse_group(&at.group));
            c.degree = Some(at.n);
            c.force = force;
            c
        }
        VerbArgs::Stats { n, input } => {
            let mut c = Command::new(Verb::Stats);
            c.degree = Some(n);
            c.input = resolve_input(input);
            c
        }
        VerbArgs::Convert { n, input } => {
            let mut c = Command::new(Verb::Convert);
            c.degree = Some(n);
            c.input = resolve_input(input);
            c
        }
    };

    let outcome = cli::run(&cmd);
    let mut stdout = std::io::stdout();
    let mut stderr = std::io::stderr();
    stdout.write_all(outcome.stdout.as_bytes()).ok();
    stderr.write_all(outcome.stderr.as_bytes()).ok();
    std::process::exit(outcome.exit_code);
}
