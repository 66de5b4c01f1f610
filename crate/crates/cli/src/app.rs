//! Argument parsing and process-level behaviour: exit codes, batch mode.

use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};

use crate::bench::BenchParams;
use crate::query::{decide_line, run_command, Command, OutputMode, Query};

#[derive(Debug, Parser)]
#[command(name = "sbraid", version, about = "Word problem for singular braids")]
pub struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Args)]
pub struct WordArgs {
    /// Number of strands.
    #[arg(long, short = 'n')]
    pub strands: usize,
    pub words: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Decide whether two words are equal. With no words, reads
    /// tab-separated pairs from stdin.
    Eq(WordArgs),
    /// Garside normal form of a braid word.
    Nf(WordArgs),
    /// Image in the integral group ring.
    Eta(WordArgs),
    /// Permutation image.
    Perm(WordArgs),
    /// Britton form of a pure singular word.
    Britton(WordArgs),
    /// Complexity benchmark.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, short = 'n', default_value_t = 5)]
    pub strands: usize,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, default_value_t = 400)]
    pub max_len: usize,
    #[arg(long, default_value_t = 8)]
    pub max_sing: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status: 0 equal or success, 1 unequal, 2 error.
pub fn run<I, T>(args: I, stdin: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let status = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return status;
        }
    };
    let output = if cli.json {
        OutputMode::Json
    } else {
        OutputMode::Text
    };
    let (command, args) = match cli.command {
        Sub::Eq(a) if a.words.is_empty() => return batch(a.strands, output, stdin, out, err),
        Sub::Eq(a) => (Command::Eq, a),
        Sub::Nf(a) => (Command::Nf, a),
        Sub::Eta(a) => (Command::Eta, a),
        Sub::Perm(a) => (Command::Perm, a),
        Sub::Britton(a) => (Command::Britton, a),
        Sub::Bench(b) => {
            let q = Query::new(Command::Bench, b.strands, &[], output).map(|mut q| {
                q.bench = BenchParams {
                    strands: b.strands,
                    trials: b.trials,
                    max_len: b.max_len,
                    max_sing: b.max_sing,
                    seed: b.seed,
                };
                q
            });
            return finish(q.and_then(|q| run_command(&q)), out, err);
        }
    };
    let result =
        Query::new(command, args.strands, &args.words, output).and_then(|q| run_command(&q));
    finish(result, out, err)
}

fn finish(
    result: sbraid_core::Result<crate::query::Outcome>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    match result {
        Ok(o) => {
            let _ = out.write_all(o.output.as_bytes());
            o.status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// One verdict per input line. Malformed lines print `ERROR` and make the
/// overall status 2; otherwise the status is 1 if any pair was unequal.
fn batch(
    strands: usize,
    output: OutputMode,
    stdin: &mut dyn BufRead,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let mut status = 0;
    for (lineno, line) in stdin.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                return 2;
            }
        };
        if line.trim().is_empty() {
            continue;
        }
        let result = match line.split_once('\t') {
            Some((a, b)) => Query::new(
                Command::Eq,
                strands,
                &[a.to_string(), b.to_string()],
                output,
            )
            .and_then(|q| decide_line(&q.words[0], &q.words[1], output)),
            None => Err(sbraid_core::Error::Syntax {
                position: 0,
                message: "expected two words separated by a tab".into(),
            }),
        };
        match result {
            Ok((equal, text)) => {
                let _ = writeln!(out, "{text}");
                if !equal {
                    status = status.max(1);
                }
            }
            Err(e) => {
                let _ = writeln!(out, "ERROR");
                let _ = writeln!(err, "error: line {}: {e}", lineno + 1);
                status = 2;
            }
        }
    }
    status
}
