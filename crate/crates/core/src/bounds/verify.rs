//! Brute-force sweeps over the subfigure lemmas and the prime-counting bound.
//!
//! Work is split into fixed-size chunks whose results are merged in input
//! order, so a report does not depend on the number of worker threads.

use std::collections::HashSet;
use std::io::Write;

use rayon::prelude::*;

use super::{
    bound_for_height, bound_is_exact, count_subfigures_rect, enumerate_subfigures, floor_lg_int,
    power_text, ChainState, RectDims, VerificationReport,
};
use crate::diagram::{self, Partition};
use crate::error::{Error, Result};
use crate::primes;

/// Column layout of the per-case CSV written by [`verify_theorem`].
pub const CSV_HEADER: &str = "x,h,w,m_size,binom,power,bound_value,bound_ok,chain_ok";

const CHUNK: u64 = 4096;

/// Closest distance to an integer tolerated for an inexact bound value.
const BOUND_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    /// Worker threads; 1 runs on the calling thread.
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { jobs: 1 }
    }
}

impl SweepOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SweepOptions { jobs: jobs.max(1) }
    }

    fn executor(&self) -> Result<Executor> {
        if self.jobs <= 1 {
            return Ok(Executor(None));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map(|pool| Executor(Some(pool)))
            .map_err(|e| Error::Io(e.to_string()))
    }
}

/// Runs parallel iterators on a dedicated pool, or inline for a single job.
struct Executor(Option<rayon::ThreadPool>);

impl Executor {
    fn run<T: Send>(&self, op: impl FnOnce() -> T + Send) -> T {
        match &self.0 {
            Some(pool) => pool.install(op),
            None => op(),
        }
    }
}

fn chunks(lo: u64, hi: u64) -> Vec<(u64, u64)> {
    (lo..=hi)
        .step_by(CHUNK as usize)
        .map(|start| (start, (start + CHUNK - 1).min(hi)))
        .collect()
}

/// Checks that `F(a) ⊆ F(b)` implies `a <= b` for every pair in `[1, n_max]^2`.
pub fn verify_lemma1(n_max: u64, opts: &SweepOptions) -> Result<VerificationReport> {
    if n_max == 0 {
        return Err(Error::Domain("verify_lemma1 needs n_max >= 1".into()));
    }
    primes::shared().reserve(n_max);
    let figures: Vec<Partition> = (1..=n_max)
        .map(diagram::to_diagram)
        .collect::<Result<_>>()?;

    let counterexamples = opts.executor()?.run(|| {
        figures
            .par_iter()
            .enumerate()
            .flat_map_iter(|(i, f)| {
                let a = i as u64 + 1;
                figures
                    .iter()
                    .enumerate()
                    .filter(move |&(j, g)| a > j as u64 + 1 && f.is_subfigure_of(g))
                    .map(move |(j, g)| format!("F({a}) = {f} is a subfigure of F({}) = {g}", j + 1))
            })
            .collect::<Vec<_>>()
    });

    Ok(VerificationReport {
        range_description: format!("pairs (a, b) in [1, {n_max}]^2"),
        cases_checked: n_max * n_max,
        counterexamples,
    })
}

/// Checks that each `i x j` rectangle with `i <= i_max`, `j <= j_max` has
/// exactly `C(i + j, j)` distinct subfigures.
pub fn verify_lemma2(i_max: u64, j_max: u64) -> Result<VerificationReport> {
    let mut counterexamples = Vec::new();
    for i in 0..=i_max {
        for j in 0..=j_max {
            let dims = RectDims::new(i, j);
            let expected = count_subfigures_rect(dims)?;
            let rect = Partition::rectangle(i, j);
            let found = enumerate_subfigures(&rect);

            if found.len() as u128 != expected {
                counterexamples.push(format!(
                    "{i}x{j} rectangle: enumerated {} subfigures, C({}, {j}) = {expected}",
                    found.len(),
                    i + j
                ));
            }
            let distinct: HashSet<&Partition> = found.iter().collect();
            if distinct.len() != found.len() {
                counterexamples.push(format!("{i}x{j} rectangle: enumeration repeats a figure"));
            }
            if let Some(f) = found.iter().find(|f| !f.is_subfigure_of(&rect)) {
                counterexamples.push(format!("{i}x{j} rectangle: {f} is not a subfigure"));
            }
        }
    }
    Ok(VerificationReport {
        range_description: format!("rectangles i x j for i in [0, {i_max}], j in [0, {j_max}]"),
        cases_checked: (i_max + 1) * (j_max + 1),
        counterexamples,
    })
}

struct ChunkOutcome {
    first_x: u64,
    /// `(height, width)` of `F(n)` for each `n` in the chunk.
    dims: Vec<(u64, u64)>,
    counterexamples: Vec<String>,
    csv: String,
}

/// Sweeps every integer `x` in `[2, x_max]`, checking
///
/// - `pi(x) >= floor(lg x) / lg(floor(lg x) + 1)`,
/// - the exact chain `2^h <= x <= C(h + w, w) <= (h + 1)^w`,
/// - that the tallest figure among `F(1..=x)` has height `floor(lg x)` and is
///   first reached at `2^h`, and the widest has width `pi(x)` and is first
///   reached at `p_w`.
///
/// When `csv` is given, one row per `x` is streamed to it after [`CSV_HEADER`].
pub fn verify_theorem(
    x_max: u64,
    opts: &SweepOptions,
    mut csv: Option<&mut dyn Write>,
) -> Result<VerificationReport> {
    if x_max < 2 {
        return Err(Error::Domain("verify_theorem needs x_max >= 2".into()));
    }
    primes::shared().reserve(x_max);
    if let Some(out) = csv.as_deref_mut() {
        writeln!(out, "{CSV_HEADER}")?;
    }

    let mut counterexamples = Vec::new();
    for h in 1..=u64::from(floor_lg_int(x_max)?) {
        let b = bound_for_height(h)?;
        if !bound_is_exact(h) && (b - b.round()).abs() < BOUND_MARGIN {
            counterexamples.push(format!(
                "bound {b} at h = {h} lies within {BOUND_MARGIN} of an integer"
            ));
        }
    }

    // Running maxima over F(1..=x); F(1) is empty.
    let mut max_height = 0u64;
    let mut max_width = 0u64;
    let all_chunks = chunks(2, x_max);
    let batch = opts.jobs.max(1) * 4;
    let executor = opts.executor()?;
    let want_csv = csv.is_some();

    for group in all_chunks.chunks(batch) {
        let outcomes: Vec<Result<ChunkOutcome>> = executor.run(|| {
            group
                .par_iter()
                .map(|&(lo, hi)| sweep_chunk(lo, hi, want_csv))
                .collect()
        });
        for outcome in outcomes {
            let outcome = outcome?;
            counterexamples.extend(outcome.counterexamples);
            let lo = outcome.first_x;
            for (offset, &(height, width)) in outcome.dims.iter().enumerate() {
                let x = lo + offset as u64;
                if height > max_height {
                    max_height = height;
                    if !x.is_power_of_two() || u64::from(x.ilog2()) != height {
                        counterexamples.push(format!(
                            "x = {x}: first figure of height {height} is F({x}), expected F(2^{height})"
                        ));
                    }
                }
                if width > max_width {
                    max_width = width;
                    let expected = primes::nth_prime(width);
                    if x != expected {
                        counterexamples.push(format!(
                            "x = {x}: first figure of width {width} is F({x}), expected F(p_{width}) = F({expected})"
                        ));
                    }
                }
                let h = u64::from(floor_lg_int(x)?);
                if max_height != h {
                    counterexamples.push(format!(
                        "x = {x}: max height {max_height} != floor(lg x) = {h}"
                    ));
                }
                let w = primes::prime_count(x as f64)?;
                if max_width != w {
                    counterexamples.push(format!("x = {x}: max width {max_width} != pi(x) = {w}"));
                }
            }
            if let Some(out) = csv.as_deref_mut() {
                out.write_all(outcome.csv.as_bytes())?;
            }
        }
    }
    if let Some(out) = csv {
        out.flush()?;
    }

    Ok(VerificationReport {
        range_description: format!("integers x in [2, {x_max}]"),
        cases_checked: x_max - 1,
        counterexamples,
    })
}

fn sweep_chunk(lo: u64, hi: u64, want_csv: bool) -> Result<ChunkOutcome> {
    let mut dims = Vec::with_capacity((hi - lo + 1) as usize);
    let mut counterexamples = Vec::new();
    let mut csv = String::new();

    let mut state = ChainState::new(floor_lg_int(lo)?, primes::prime_count(lo as f64)?)?;
    let mut cached: Option<(String, String)> = None;
    for x in lo..=hi {
        let d = diagram::to_diagram(x)?;
        dims.push((d.height(), d.width()));

        let h = floor_lg_int(x)?;
        let w = primes::prime_count(x as f64)?;
        if (h, w) != (state.h(), state.w()) {
            state.advance(h, w)?;
            cached = None;
        }
        let bound_value = bound_for_height(u64::from(h))?;
        let bound_ok = w as f64 >= bound_value;
        let chain_ok = state.chain_holds(x);
        if !bound_ok {
            counterexamples.push(format!("x = {x}: pi(x) = {w} < bound {bound_value}"));
        }
        if !chain_ok {
            counterexamples.push(format!(
                "x = {x}: chain 2^{h} <= {x} <= C({}, {w}) <= {}^{w} fails",
                u64::from(h) + w,
                h + 1
            ));
        }
        if want_csv {
            let (binom, power) = cached.get_or_insert_with(|| {
                (state.binom().to_string(), power_text(state.power(), h, w))
            });
            csv.push_str(&format!(
                "{x},{h},{w},{x},{binom},{power},{bound_value},{bound_ok},{chain_ok}\n"
            ));
        }
    }
    Ok(ChunkOutcome {
        first_x: lo,
        dims,
        counterexamples,
        csv,
    })
}
