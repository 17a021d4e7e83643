use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::metrics::{ulam_edit, weighted_ulam, Metric};
use crate::solvers::{brute_force_center, l1_center};
use crate::ulam_center::{ceil_sqrt, compress_pair, detect_regime, Regime};

use super::generate::{random_permutations, random_points};
use super::{BenchArgs, Suite, EXIT_OK};

#[derive(Debug, Serialize)]
struct Row {
    suite: &'static str,
    algo: &'static str,
    n: usize,
    d: usize,
    rep: usize,
    wall_ms: f64,
    /// Objective value or distance sum, identical across repetitions.
    value: String,
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    let k = xs.len();
    if k == 0 {
        f64::NAN
    } else if k % 2 == 1 {
        xs[k / 2]
    } else {
        (xs[k / 2 - 1] + xs[k / 2]) / 2.0
    }
}

fn time_ms<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, f64)> {
    let start = Instant::now();
    let out = f()?;
    Ok((out, start.elapsed().as_secs_f64() * 1e3))
}

/// Runs a suite, writing CSV rows to `out` and per-configuration median
/// times to `err`.
pub(super) fn bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if args.reps == 0 {
        return Err(Error::InvalidParameter("--reps must be positive".into()));
    }
    let mut rows = Vec::new();
    match args.suite {
        Suite::L1Scaling => {
            let d = args.dim.unwrap_or(8);
            let configs = args.sizes.iter().map(|&n| ("l1-fast", n)).chain(args.brute_sizes.iter().map(|&n| ("brute", n)));
            for (algo, n) in configs {
                let points = random_points(n, d, 1_000_000, false, Metric::L1, args.seed)?;
                for rep in 0..args.reps {
                    let (r, ms) = time_ms(|| if algo == "brute" { brute_force_center(&points) } else { l1_center(&points) })?;
                    rows.push(Row { suite: "l1-scaling", algo, n, d, rep, wall_ms: ms, value: r.radius.to_string() });
                }
            }
        }
        Suite::UlamPairs => {
            let d = args.dim.unwrap_or(256);
            let moves = args.moves.unwrap_or_else(|| ceil_sqrt(d));
            let set = random_permutations(args.n, d, Some(moves), args.seed)?;
            let Regime::Low { scripts } = detect_regime(&set)? else {
                return Err(Error::InvalidParameter(format!("{moves} moves per permutation leave the low regime")));
            };
            let n = set.len();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
            for rep in 0..args.reps {
                let (exact, ms) = time_ms(|| {
                    pairs.iter().map(|&(i, j)| ulam_edit(set.get(i), set.get(j)).map(|v| v as u64)).sum::<Result<u64>>()
                })?;
                rows.push(Row { suite: "ulam-pairs", algo: "exact", n, d, rep, wall_ms: ms, value: exact.to_string() });
                let (compressed, ms) = time_ms(|| {
                    pairs
                        .iter()
                        .map(|&(i, j)| {
                            let (a, b) = compress_pair(set.get(i), set.get(j), &scripts[i], &scripts[j])?;
                            weighted_ulam(&a, &b)
                        })
                        .sum::<Result<u64>>()
                })?;
                if compressed != exact {
                    return Err(Error::InconsistentScript(format!("compressed sum {compressed} != exact sum {exact}")));
                }
                rows.push(Row {
                    suite: "ulam-pairs",
                    algo: "compressed",
                    n,
                    d,
                    rep,
                    wall_ms: ms,
                    value: compressed.to_string(),
                });
            }
        }
    }
    let mut w = csv::Writer::from_writer(&mut *out);
    for row in &rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.flush()?;
    drop(w);
    let mut seen: Vec<(&str, usize, usize)> = Vec::new();
    for r in &rows {
        if !seen.contains(&(r.algo, r.n, r.d)) {
            seen.push((r.algo, r.n, r.d));
        }
    }
    for (algo, n, d) in seen {
        let times = rows.iter().filter(|r| (r.algo, r.n, r.d) == (algo, n, d)).map(|r| r.wall_ms).collect();
        writeln!(err, "median {algo} n={n} d={d}: {:.3} ms", median(times))?;
    }
    Ok(EXIT_OK)
}
