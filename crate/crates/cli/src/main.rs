//! Command-line front end for the groupoid stream cipher.
//!
//! Data goes to standard output or the named files; diagnostics go to
//! standard error. Exit status is 0 on success, 1 on operational failure,
//! and 2 on usage errors.

mod codec;
mod demo;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use keyforge::{
    census, generate_key, key_fingerprint, keygen_comment, parse_key, CensusMethod, KeyFile,
};
use markovski_cipher::CipherKey;
use rand::RngCore;

#[derive(Parser)]
#[command(
    name = "markovski",
    version,
    about = "Stream cipher over n-ary groupoids invertible at the last argument place.\n\
             A research construction for study and experimentation; makes no security claims."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key file deterministically from a seed
    Keygen {
        /// Arity n of the groupoid operation
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=24))]
        n: u64,
        /// Alphabet size q (use 256 for byte-mode keys)
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=4096))]
        q: u64,
        /// Generator seed; drawn from the OS when omitted
        #[arg(long)]
        seed: Option<u64>,
        /// Number of exponents in the cycling schedule
        #[arg(long = "schedule-length", default_value_t = 2,
              value_parser = clap::value_parser!(u64).range(1..=4096))]
        schedule_length: u64,
        /// Where to write the key file
        #[arg(long)]
        out: PathBuf,
    },
    /// Encrypt a file symbol by symbol
    Encrypt(CryptoArgs),
    /// Decrypt a file symbol by symbol
    Decrypt(CryptoArgs),
    /// Validate a key file and print its summary and fingerprint
    CheckKey {
        /// Key file to validate
        #[arg(long)]
        key: PathBuf,
    },
    /// Print the built-in ternary worked example, step by step
    Demo,
    /// Count tables invertible at one place versus full quasigroups
    Census {
        /// Arity n
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..=24))]
        n: u64,
        /// Alphabet size q
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=4096))]
        q: u64,
        /// Place whose invertible tables are counted (1-based)
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..=24))]
        place: u64,
        /// Counting mode; picked automatically when omitted
        #[arg(long, value_enum)]
        mode: Option<CensusModeArg>,
    },
}

#[derive(Args)]
struct CryptoArgs {
    /// Key file
    #[arg(long)]
    key: PathBuf,
    /// Input file
    #[arg(long = "in")]
    input: PathBuf,
    /// Output file
    #[arg(long)]
    out: PathBuf,
    /// symbols: whitespace-separated decimals; bytes: raw bytes, q must be 256
    #[arg(long, value_enum, default_value_t = ModeArg::Symbols)]
    mode: ModeArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbols,
    Bytes,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CensusModeArg {
    Exhaustive,
    ClosedForm,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {error:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Keygen {
            n,
            q,
            seed,
            schedule_length,
            out,
        } => cmd_keygen(n as usize, q as usize, seed, schedule_length as usize, &out),
        Command::Encrypt(args) => cmd_crypt(&args, Direction::Encrypt),
        Command::Decrypt(args) => cmd_crypt(&args, Direction::Decrypt),
        Command::CheckKey { key } => cmd_check_key(&key),
        Command::Demo => {
            print!("{}", demo::transcript());
            Ok(())
        }
        Command::Census { n, q, place, mode } => {
            cmd_census(n as usize, q as usize, place as usize, mode)
        }
    }
}

fn cmd_keygen(
    arity: usize,
    order: usize,
    seed: Option<u64>,
    schedule_length: usize,
    out: &PathBuf,
) -> Result<()> {
    let seed = seed.unwrap_or_else(|| rand::rngs::OsRng.next_u64());
    let key = generate_key(arity, order, seed, schedule_length)?;
    let file = KeyFile::from_key(&key).with_comment(keygen_comment(seed));
    fs::write(out, file.serialize())
        .with_context(|| format!("writing key file {}", out.display()))?;
    println!("{}", key_fingerprint(&key));
    Ok(())
}

enum Direction {
    Encrypt,
    Decrypt,
}

fn cmd_crypt(args: &CryptoArgs, direction: Direction) -> Result<()> {
    let key = load_key(&args.key)?;
    match args.mode {
        ModeArg::Symbols => {
            let text = fs::read_to_string(&args.input)
                .with_context(|| format!("reading {}", args.input.display()))?;
            let symbols = codec::parse_symbols(&text, key.order())?;
            let processed = match direction {
                Direction::Encrypt => key.encrypt(&symbols)?,
                Direction::Decrypt => key.decrypt(&symbols)?,
            };
            fs::write(&args.out, codec::render_symbols(&processed))
                .with_context(|| format!("writing {}", args.out.display()))?;
        }
        ModeArg::Bytes => {
            if key.order() != 256 {
                bail!(
                    "bytes mode requires q = 256, but the key has q = {}",
                    key.order()
                );
            }
            let data = fs::read(&args.input)
                .with_context(|| format!("reading {}", args.input.display()))?;
            let symbols = codec::bytes_to_symbols(&data);
            let processed = match direction {
                Direction::Encrypt => key.encrypt(&symbols)?,
                Direction::Decrypt => key.decrypt(&symbols)?,
            };
            fs::write(&args.out, codec::symbols_to_bytes(&processed))
                .with_context(|| format!("writing {}", args.out.display()))?;
        }
    }
    Ok(())
}

fn cmd_check_key(path: &PathBuf) -> Result<()> {
    let bytes = fs::read(path).with_context(|| format!("reading key file {}", path.display()))?;
    let file =
        KeyFile::parse(&bytes).with_context(|| format!("parsing key file {}", path.display()))?;
    let comment = file.comment.clone();
    let key = file
        .into_key()
        .with_context(|| format!("validating key file {}", path.display()))?;
    println!(
        "valid GCK1 key: n={} q={} i={} cells={} leaders={} schedule={}",
        key.arity(),
        key.order(),
        key.arity(),
        key.forward().cells(),
        key.leaders().len(),
        key.exponents().len()
    );
    if let Some(comment) = comment {
        println!("comment: {comment}");
    }
    println!("fingerprint: {}", key_fingerprint(&key));
    Ok(())
}

fn cmd_census(arity: usize, order: usize, place: usize, mode: Option<CensusModeArg>) -> Result<()> {
    let method = mode.map(|m| match m {
        CensusModeArg::Exhaustive => CensusMethod::Exhaustive,
        CensusModeArg::ClosedForm => CensusMethod::ClosedForm,
    });
    let report = census(arity, order, place, method)?;
    println!(
        "n={} q={} place={} invertible={} quasigroups={} method={}",
        report.arity,
        report.order,
        report.place,
        report.invertible,
        report.quasigroups,
        report.method
    );
    Ok(())
}

fn load_key(path: &PathBuf) -> Result<CipherKey> {
    let bytes = fs::read(path).with_context(|| format!("reading key file {}", path.display()))?;
    parse_key(&bytes).with_context(|| format!("invalid key file {}", path.display()))
}
