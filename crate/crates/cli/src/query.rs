//! Parsed requests and their execution.

use std::fmt::Write as _;

use sbraid_core::{
    decide_equal, eta, normal_form, parse_word, to_britton_form, Error, Result, SingularWord,
};
use serde::Serialize;

use crate::bench::{run_bench, BenchParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Eq,
    Nf,
    Eta,
    Perm,
    Britton,
    Bench,
}

impl Command {
    /// Number of words the command takes.
    pub fn arity(self) -> usize {
        match self {
            Command::Eq => 2,
            Command::Bench => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputMode {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub command: Command,
    pub strands: usize,
    pub words: Vec<SingularWord>,
    pub output: OutputMode,
    pub bench: BenchParams,
}

impl Query {
    /// Parses the word arguments and checks the arity.
    pub fn new(
        command: Command,
        strands: usize,
        words: &[String],
        output: OutputMode,
    ) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        if words.len() != command.arity() {
            return Err(Error::Syntax {
                position: 0,
                message: format!("expected {} word(s), got {}", command.arity(), words.len()),
            });
        }
        let words = words
            .iter()
            .map(|w| parse_word(w, strands))
            .collect::<Result<Vec<_>>>()?;
        Ok(Query {
            command,
            strands,
            words,
            output,
            bench: BenchParams {
                strands,
                ..BenchParams::default()
            },
        })
    }
}

/// Text printed to stdout and the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub status: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { status: 0, output }
    }
}

#[derive(Serialize)]
struct EqJson<'a> {
    equal: bool,
    certificate: &'a str,
    steps: usize,
}

#[derive(Serialize)]
struct Term {
    coefficient: String,
    key: String,
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

pub fn decide_line(
    u: &SingularWord,
    v: &SingularWord,
    output: OutputMode,
) -> Result<(bool, String)> {
    let verdict = decide_equal(u, v)?;
    let text = match output {
        OutputMode::Text => verdict.to_string(),
        OutputMode::Json => json(&EqJson {
            equal: verdict.equal,
            certificate: verdict.certificate.tag(),
            steps: verdict.steps,
        }),
    };
    Ok((verdict.equal, text))
}

/// Runs one query. Errors map to exit status 2 at the caller.
pub fn run_command(q: &Query) -> Result<Outcome> {
    let js = q.output == OutputMode::Json;
    let mut out = match q.command {
        Command::Eq => {
            let (equal, line) = decide_line(&q.words[0], &q.words[1], q.output)?;
            return Ok(Outcome {
                status: if equal { 0 } else { 1 },
                output: line + "\n",
            });
        }
        Command::Nf => {
            let w = q.words[0]
                .as_braid()
                .ok_or_else(|| Error::InvalidGenerator {
                    name: "nf".into(),
                    reason: "normal forms are defined for braid words only".into(),
                })?;
            let key = normal_form(&w).to_string();
            if js {
                json(&serde_json::json!({ "key": key }))
            } else {
                key
            }
        }
        Command::Eta => {
            let x = eta(&q.words[0])?;
            if js {
                let terms: Vec<Term> = x
                    .terms()
                    .map(|(k, c)| Term {
                        coefficient: c.to_string(),
                        key: k.to_string(),
                    })
                    .collect();
                json(&serde_json::json!({ "eta": x.to_string(), "terms": terms }))
            } else {
                x.to_string()
            }
        }
        Command::Perm => {
            let p = q.words[0].perm_image();
            if js {
                json(&serde_json::json!({ "permutation": p.one_line(), "text": p.to_string() }))
            } else {
                p.to_string()
            }
        }
        Command::Britton => {
            let b = to_britton_form(&q.words[0])?;
            if js {
                let segments: Vec<String> = b.segments().iter().map(|s| s.to_string()).collect();
                let labels: Vec<[usize; 2]> = b.labels().iter().map(|l| [l.k, l.j]).collect();
                json(&serde_json::json!({
                    "form": b.to_string(),
                    "segments": segments,
                    "labels": labels,
                }))
            } else {
                b.to_string()
            }
        }
        Command::Bench => {
            let report = run_bench(&q.bench)?;
            if js {
                serde_json::to_string_pretty(&report).expect("serializable")
            } else {
                render_report(&report)
            }
        }
    };
    out.push('\n');
    Ok(Outcome::ok(out))
}

fn render_report(r: &crate::bench::BenchReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "n = {}, trials = {}, seed = {}",
        r.strands, r.trials, r.seed
    );
    for sweep in &r.sweeps {
        let _ = writeln!(s, "sweep over {}", sweep.axis);
        let _ = writeln!(
            s,
            "  {:>6} {:>4} {:>7} {:>5} {:>12} {:>12} {:>10} {:>8}",
            "|w|", "|w|s", "queries", "wrong", "mean ns", "median ns", "nf calls", "eta"
        );
        for c in &sweep.cells {
            let _ = writeln!(
                s,
                "  {:>6} {:>4} {:>7} {:>5} {:>12.0} {:>12.0} {:>10} {:>8}",
                c.length,
                c.singular,
                c.queries,
                c.wrong,
                c.mean_ns,
                c.median_ns,
                c.normal_forms,
                c.eta_expansions
            );
        }
        let fmt = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{v:.3}"));
        let _ = writeln!(
            s,
            "  slope {} (ops {})",
            fmt(sweep.slope),
            fmt(sweep.ops_slope)
        );
    }
    let _ = write!(s, "total {:.3} s", r.total_ns as f64 / 1e9);
    s
}
