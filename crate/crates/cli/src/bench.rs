//! Complexity harness: times `decide_equal` over a grid of word lengths and
//! singular degrees and fits log-log slopes.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sbraid_core::relations::{perturb, presentation, random_singular_word, rewrite, TauChoice};
use sbraid_core::{decide_equal, stats, Result};
use serde::Serialize;

/// Rewrites applied to build each equal pair.
pub const REWRITES: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchParams {
    pub strands: usize,
    pub trials: usize,
    pub max_len: usize,
    pub max_sing: usize,
    pub seed: u64,
}

impl Default for BenchParams {
    fn default() -> Self {
        BenchParams {
            strands: 5,
            trials: 5,
            max_len: 400,
            max_sing: 8,
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cell {
    pub length: usize,
    pub singular: usize,
    /// Queries timed in this cell, one equal and one unequal pair per trial.
    pub queries: usize,
    /// Queries whose verdict contradicts the construction.
    pub wrong: usize,
    pub normal_forms: u64,
    pub eta_expansions: u64,
    pub mean_ns: f64,
    pub median_ns: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Sweep {
    /// `length` or `singular`.
    pub axis: &'static str,
    pub cells: Vec<Cell>,
    /// Least-squares slope of log median time against log of the axis value.
    pub slope: Option<f64>,
    /// The same fit on operation counts instead of time.
    pub ops_slope: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchReport {
    pub strands: usize,
    pub trials: usize,
    pub seed: u64,
    pub sweeps: Vec<Sweep>,
    pub total_ns: u64,
}

impl BenchReport {
    pub fn sweep(&self, axis: &str) -> Option<&Sweep> {
        self.sweeps.iter().find(|s| s.axis == axis)
    }

    pub fn wrong(&self) -> usize {
        self.sweeps
            .iter()
            .flat_map(|s| &s.cells)
            .map(|c| c.wrong)
            .sum()
    }
}

/// Word lengths `max_len/8, max_len/4, max_len/2, max_len`, deduplicated.
pub fn length_grid(max_len: usize) -> Vec<usize> {
    let mut v: Vec<usize> = [8, 4, 2, 1].iter().map(|d| (max_len / d).max(2)).collect();
    v.dedup();
    v
}

/// Powers of two up to `max_sing`.
pub fn singular_grid(max_sing: usize) -> Vec<usize> {
    std::iter::successors(Some(1usize), |s| Some(s * 2))
        .take_while(|&s| s <= max_sing.max(1))
        .collect()
}

/// Least-squares slope of `ln y` against `ln x`; `None` with fewer than two
/// distinct points or nonpositive values.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let pts: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    if sxx == 0.0 {
        return None;
    }
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    Some(sxy / sxx)
}

fn median(v: &mut [f64]) -> f64 {
    v.sort_by(f64::total_cmp);
    let m = v.len() / 2;
    if v.len().is_multiple_of(2) {
        (v[m - 1] + v[m]) / 2.0
    } else {
        v[m]
    }
}

fn run_cell(p: &BenchParams, length: usize, singular: usize, rng: &mut ChaCha8Rng) -> Result<Cell> {
    let rels = presentation(p.strands);
    let mut times = Vec::with_capacity(2 * p.trials);
    let mut wrong = 0;
    stats::reset();
    for _ in 0..p.trials {
        let w = random_singular_word(p.strands, length, singular, TauChoice::First, rng);
        let mut same = w.clone();
        rewrite(&mut same, &rels, REWRITES, rng);
        let other = perturb(&w, rng);
        for (v, expect) in [(same, true), (other, false)] {
            let start = Instant::now();
            let verdict = decide_equal(&w, &v)?;
            times.push(start.elapsed().as_nanos() as f64);
            if verdict.equal != expect {
                wrong += 1;
            }
        }
    }
    let ops = stats::snapshot();
    let queries = times.len();
    let mean_ns = times.iter().sum::<f64>() / queries as f64;
    Ok(Cell {
        length,
        singular,
        queries,
        wrong,
        normal_forms: ops.normal_forms,
        eta_expansions: ops.eta_expansions,
        mean_ns,
        median_ns: median(&mut times),
    })
}

fn sweep(
    p: &BenchParams,
    axis: &'static str,
    grid: &[(usize, usize)],
    rng: &mut ChaCha8Rng,
) -> Result<Sweep> {
    let cells = grid
        .iter()
        .map(|&(len, sing)| run_cell(p, len, sing, rng))
        .collect::<Result<Vec<_>>>()?;
    let x = |c: &Cell| {
        (if axis == "length" {
            c.length
        } else {
            c.singular
        }) as f64
    };
    let slope = loglog_slope(
        &cells
            .iter()
            .map(|c| (x(c), c.median_ns))
            .collect::<Vec<_>>(),
    );
    let ops_slope = loglog_slope(
        &cells
            .iter()
            .map(|c| (x(c), (c.normal_forms + c.eta_expansions) as f64))
            .collect::<Vec<_>>(),
    );
    Ok(Sweep {
        axis,
        cells,
        slope,
        ops_slope,
    })
}

/// Runs both sweeps: lengths at two singular letters, and singular degrees at
/// length `min(100, max_len)`. Zero trials give an empty report.
pub fn run_bench(p: &BenchParams) -> Result<BenchReport> {
    let start = Instant::now();
    let mut sweeps = Vec::new();
    if p.trials > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
        let lengths: Vec<_> = length_grid(p.max_len).into_iter().map(|l| (l, 2)).collect();
        sweeps.push(sweep(p, "length", &lengths, &mut rng)?);
        let len = p.max_len.min(100);
        let sings: Vec<_> = singular_grid(p.max_sing)
            .into_iter()
            .map(|s| (len.max(s), s))
            .collect();
        sweeps.push(sweep(p, "singular", &sings, &mut rng)?);
    }
    Ok(BenchReport {
        strands: p.strands,
        trials: p.trials,
        seed: p.seed,
        sweeps,
        total_ns: start.elapsed().as_nanos() as u64,
    })
}
