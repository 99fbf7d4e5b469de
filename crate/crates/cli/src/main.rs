mod commands;
mod doc;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "tangles", version, about = "Orientations of set separations: axioms, inducers and certificates")]
struct Cli {
    /// Output format for reports. Documents are always JSON.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Where to read an instance document from; `-` or nothing means standard input.
#[derive(Args, Debug)]
pub struct InstanceArg {
    pub instance: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a named instance family.
    Generate {
        #[command(subcommand)]
        family: Family,
    },
    /// Check axioms of the instance orientation and/or re-verify a certificate.
    Verify {
        /// Comma-separated axioms: consistent, profile, regular, tangle, f-ell=<p/q>.
        #[arg(long)]
        axioms: Option<String>,
        /// Certificate document to re-verify against the instance.
        #[arg(long)]
        certificate: Option<String>,
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Decide by exact LP whether a weight function induces the orientation; emits the certificate.
    Decide {
        /// Exit 1 unless the outcome is `induced`.
        #[arg(long, value_parser = ["induced"])]
        expect: Option<String>,
        /// Use every element as an LP column rather than only the maximal ones.
        #[arg(long)]
        all_elements: bool,
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Compute the resilience of the orientation.
    Resilience {
        /// Largest cover size searched.
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Decide k-local ℓ-induction; emits the local witness set.
    LocallyInduced {
        #[arg(long)]
        k: usize,
        /// Rational ℓ as "p/q" or an integer.
        #[arg(long)]
        ell: String,
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Emit the dual instance (separations φ(v) of the set S).
    Dualize {
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Brute-force reference computations.
    Oracle {
        #[command(subcommand)]
        query: OracleQuery,
    },
    /// Regenerate the reference instances and check every acceptance criterion.
    Reproduce {
        #[arg(long)]
        seed: Option<u64>,
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u8>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    /// All bipartitions of an n-set oriented toward x.
    Principal {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: usize,
    },
    /// The 3-subset construction on m separations.
    Intro {
        #[arg(long)]
        m: usize,
    },
    /// The tangle on k-subsets of [m]; only maximal elements unless --materialize.
    TauMk {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: Option<u64>,
        /// Emit every bipartition of crossing order < m (small instances only).
        #[arg(long)]
        materialize: bool,
    },
    /// Bipartitions with a side smaller than n/3, oriented toward the larger side.
    Thirds {
        #[arg(long)]
        n: usize,
    },
    /// Separations of order at most 4 of the n×n grid.
    Grid {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleQuery {
    /// Search subsets of V for one whose indicator induces the orientation.
    SetInducer {
        #[command(flatten)]
        input: InstanceArg,
    },
    /// Enumerate orientations of the system that satisfy an axiom filter.
    Enumerate {
        /// any, consistent, regular, profile, regular-profile or tangle.
        #[arg(long, default_value = "any")]
        filter: String,
        #[command(flatten)]
        input: InstanceArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = commands::Context::from_env(cli.format);
    let result = ctx.and_then(|ctx| match cli.command {
        Command::Generate { family } => ctx.generate(family),
        Command::Verify {
            axioms,
            certificate,
            input,
        } => ctx.verify(axioms.as_deref(), certificate.as_deref(), &input),
        Command::Decide {
            expect,
            all_elements,
            input,
        } => ctx.decide(expect.is_some(), !all_elements, &input),
        Command::Resilience { cap, input } => ctx.resilience(cap, &input),
        Command::LocallyInduced { k, ell, input } => ctx.locally_induced(k, &ell, &input),
        Command::Dualize { input } => ctx.dualize(&input),
        Command::Oracle { query } => ctx.oracle(query),
        Command::Reproduce { seed, only } => ctx.reproduce(seed, only),
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
