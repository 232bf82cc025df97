//! `bigcm`: closure operations, Frobenius machinery and module
//! modifications over F_p graded rings.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bigcm_core::Error;

mod commands;
mod context;
mod session;

#[derive(Parser)]
#[command(
    name = "bigcm",
    version,
    about = "Closure operations over positive-characteristic graded rings",
    after_help = "Rings are corpus names (poly2-7, poly3-7, cubic-cone-7, cubic-cone-2, segre-7)\n\
                  or session files (`p: 7` / `vars: x y` / `relations: ...` / `ideal I: x, y`).\n\
                  Closures: identity | frobenius:e_max=N | bmod:B=R | tight-witness:c=<poly>,e_max=N | total.\n\
                  Exit codes: 0 pass, 1 check failed, 2 usage or parse error, 3 certified bound exceeded."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Groebner basis of an ideal
    Gb(commands::GbArgs),
    /// Ideal or closure membership of an element
    Member(commands::MemberArgs),
    /// Generators of a colon ideal (I : f)
    Colon(commands::ColonArgs),
    /// Frobenius closure of an ideal
    Fclosure(commands::FclosureArgs),
    /// Run the closure-axiom suite over seeded random instances
    CheckAxioms(commands::CheckAxiomsArgs),
    /// Check colon-capturing along a system of parameters
    ColonCapture(commands::ColonCaptureArgs),
    /// Analyze the phantom property of an injection R -> M
    Phantom(commands::PhantomArgs),
    /// Run a chain of parameter-relation module modifications
    ModifyChain(commands::ModifyChainArgs),
    /// Reproduce the Segre-product counterexample end to end
    #[command(name = "repro-example-5-2")]
    Repro(commands::ReproArgs),
    /// Re-verify all built-in corpus metadata
    CorpusSelftest(commands::SelftestArgs),
}

fn run(cli: &Cli) -> Result<i32, Error> {
    match &cli.cmd {
        Cmd::Gb(a) => commands::gb(a),
        Cmd::Member(a) => commands::member(a),
        Cmd::Colon(a) => commands::colon(a),
        Cmd::Fclosure(a) => commands::fclosure(a),
        Cmd::CheckAxioms(a) => commands::check_axioms(a),
        Cmd::ColonCapture(a) => commands::colon_capture(a),
        Cmd::Phantom(a) => commands::phantom(a),
        Cmd::ModifyChain(a) => commands::modify_chain(a),
        Cmd::Repro(a) => commands::repro(a),
        Cmd::CorpusSelftest(a) => commands::corpus_selftest(a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            if matches!(e, Error::DegreeBoundExceeded { .. }) {
                eprintln!("error: exceeded certified bound: {e}");
                ExitCode::from(3)
            } else {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        }
    }
}
