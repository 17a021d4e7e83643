//! Reference implementations used as oracles. Each one is written from the
//! definition and shares no code with the library.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use proptest::prelude::*;

/// Levenshtein distance from the full `(|s|+1) x (|t|+1)` table.
pub fn full_dp_edit<T: PartialEq>(s: &[T], t: &[T]) -> usize {
    let mut dp = vec![vec![0usize; t.len() + 1]; s.len() + 1];
    for (i, row) in dp.iter_mut().enumerate() {
        row[0] = i;
    }
    for (j, cell) in dp[0].iter_mut().enumerate() {
        *cell = j;
    }
    for i in 1..=s.len() {
        for j in 1..=t.len() {
            let sub = dp[i - 1][j - 1] + usize::from(s[i - 1] != t[j - 1]);
            dp[i][j] = sub.min(dp[i - 1][j] + 1).min(dp[i][j - 1] + 1);
        }
    }
    dp[s.len()][t.len()]
}

/// Longest common subsequence by the quadratic table.
pub fn lcs_len<T: PartialEq>(s: &[T], t: &[T]) -> usize {
    let mut prev = vec![0usize; t.len() + 1];
    for x in s {
        let mut cur = vec![0usize; t.len() + 1];
        for (j, y) in t.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { prev[j + 1].max(cur[j]) };
        }
        prev = cur;
    }
    prev[t.len()]
}

/// Insert/delete distance between two permutations via LCS.
pub fn ulam_oracle(s: &[u32], t: &[u32]) -> usize {
    2 * (s.len() - lcs_len(s, t))
}

/// Fewest single-character moves turning `s` into `t`, by breadth-first
/// search over all permutations.
pub fn bfs_moves(s: &[u32], t: &[u32]) -> usize {
    let mut seen: HashSet<Vec<u32>> = HashSet::from([s.to_vec()]);
    let mut queue = VecDeque::from([(s.to_vec(), 0usize)]);
    while let Some((cur, dist)) = queue.pop_front() {
        if cur == t {
            return dist;
        }
        for from in 0..cur.len() {
            for to in 0..cur.len() {
                let mut next = cur.clone();
                let c = next.remove(from);
                next.insert(to, c);
                if seen.insert(next.clone()) {
                    queue.push_back((next, dist + 1));
                }
            }
        }
    }
    unreachable!("every permutation is reachable")
}

/// Heaviest common subsequence of two weighted sequences by the quadratic
/// table; returns `W(a) + W(b) - 2 W*`.
pub fn weighted_oracle(a: &[(u32, u64)], b: &[(u32, u64)]) -> u64 {
    let mut prev = vec![0u64; b.len() + 1];
    for &(x, w) in a {
        let mut cur = vec![0u64; b.len() + 1];
        for (j, &(y, _)) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + w } else { prev[j + 1].max(cur[j]) };
        }
        prev = cur;
    }
    let total: u64 = a.iter().chain(b).map(|p| p.1).sum();
    total - 2 * prev[b.len()]
}

/// Buckets split wherever a symbol's successor in `si` differs from its
/// successor in `sj`. Returns both strings as `(first symbol, length)`
/// runs.
pub type Runs = Vec<(u32, u64)>;

pub fn successor_buckets(si: &[u32], sj: &[u32]) -> (Runs, Runs) {
    let succ_j: HashMap<u32, u32> = sj.windows(2).map(|w| (w[0], w[1])).collect();
    let runs = |s: &[u32], same: &dyn Fn(u32, u32) -> bool| {
        let mut out: Vec<(u32, u64)> = Vec::new();
        for (k, &x) in s.iter().enumerate() {
            if k > 0 && same(s[k - 1], x) {
                out.last_mut().unwrap().1 += 1;
            } else {
                out.push((x, 1));
            }
        }
        out
    };
    let left = runs(si, &|a, b| succ_j.get(&a) == Some(&b));
    let succ_i: HashMap<u32, u32> = si.windows(2).map(|w| (w[0], w[1])).collect();
    let right = runs(sj, &|a, b| succ_i.get(&a) == Some(&b));
    (left, right)
}

pub fn l1_dist(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).sum()
}

pub fn linf_dist(x: &[i64], y: &[i64]) -> i64 {
    x.iter().zip(y).map(|(a, b)| (a - b).abs()).max().unwrap_or(0)
}

/// Smallest eccentricity under `dist` and the first index attaining it.
pub fn center_oracle<P>(points: &[P], dist: impl Fn(&P, &P) -> i64) -> (usize, i64) {
    let mut best = (0, i64::MAX);
    for (i, x) in points.iter().enumerate() {
        let ecc = points.iter().map(|y| dist(x, y)).max().unwrap();
        if ecc < best.1 {
            best = (i, ecc);
        }
    }
    best
}

pub fn diameter_oracle<P>(points: &[P], dist: impl Fn(&P, &P) -> i64) -> i64 {
    let mut best = 0;
    for x in points {
        for y in points {
            best = best.max(dist(x, y));
        }
    }
    best
}

pub fn hamming(a: &[bool], b: &[bool]) -> usize {
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

/// A uniformly shuffled permutation of `1..=d`.
pub fn perm_strategy(d: usize) -> impl Strategy<Value = Vec<u32>> {
    Just((1..=d as u32).collect::<Vec<u32>>()).prop_shuffle()
}

/// Identity of length `d` after up to `k` random character moves.
pub fn near_identity(d: usize, k: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec((0..d, 0..d), 0..=k).prop_map(move |moves| {
        let mut v: Vec<u32> = (1..=d as u32).collect();
        for (from, to) in moves {
            let c = v.remove(from);
            v.insert(to, c);
        }
        v
    })
}

pub fn int_rows(n: usize, d: usize, range: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-range..=range, d), n)
}
