use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::metrics::{EditScript, Permutation, WeightedSeq};

/// One bucket: a run of symbols that is contiguous and identically ordered
/// in both strings, named by its first symbol.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Block {
    pub id: u32,
    pub weight: u64,
    pub marked: bool,
}

/// Buckets of a pair of permutations, listed in each string's order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BucketDecomposition {
    pub left: Vec<Block>,
    pub right: Vec<Block>,
    /// Moved symbols of either script plus their neighbours in either string.
    pub marked: Vec<u32>,
}

impl BucketDecomposition {
    fn seq(blocks: &[Block]) -> WeightedSeq {
        WeightedSeq::from_parts_unchecked(blocks.iter().map(|b| b.id).collect(), blocks.iter().map(|b| b.weight).collect())
    }

    pub fn compressed(&self) -> (WeightedSeq, WeightedSeq) {
        (Self::seq(&self.left), Self::seq(&self.right))
    }
}

/// Splits `s` at the marked positions: each marked symbol is a singleton
/// and each maximal unmarked stretch one run.
fn blocks(s: &[u32], mut marked_pos: Vec<usize>) -> Vec<Block> {
    marked_pos.sort_unstable();
    let mut out = Vec::with_capacity(2 * marked_pos.len() + 1);
    let mut cursor = 0;
    for q in marked_pos {
        if q > cursor {
            out.push(Block { id: s[cursor], weight: (q - cursor) as u64, marked: false });
        }
        out.push(Block { id: s[q], weight: 1, marked: true });
        cursor = q + 1;
    }
    if cursor < s.len() {
        out.push(Block { id: s[cursor], weight: (s.len() - cursor) as u64, marked: false });
    }
    out
}

fn sorted_union(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    out.extend_from_slice(a);
    out.extend_from_slice(b);
    out.sort_unstable();
    out.dedup();
    out
}

/// Bucket decomposition from precomputed positions (`pos[s]` = index of
/// symbol `s`).
///
/// Run endpoints and lengths are always cross-checked between the two
/// strings; `check_interior` also compares every symbol inside the runs.
pub(crate) fn decompose(
    (si, pos_i): (&[u32], &[u32]),
    (sj, pos_j): (&[u32], &[u32]),
    moved_i: &[u32],
    moved_j: &[u32],
    check_interior: bool,
) -> Result<BucketDecomposition> {
    let d = si.len();
    let moved = sorted_union(moved_i, moved_j);
    let mut marked = Vec::with_capacity(5 * moved.len());
    for &m in &moved {
        marked.push(m);
        for (s, pos) in [(si, pos_i), (sj, pos_j)] {
            let p = pos[m as usize] as usize;
            if p > 0 {
                marked.push(s[p - 1]);
            }
            if p + 1 < d {
                marked.push(s[p + 1]);
            }
        }
    }
    marked.sort_unstable();
    marked.dedup();

    let left = blocks(si, marked.iter().map(|&m| pos_i[m as usize] as usize).collect());
    let right = blocks(sj, marked.iter().map(|&m| pos_j[m as usize] as usize).collect());

    // Both strings must split their unmarked symbols into the same runs.
    let runs: HashMap<u32, u64> = left.iter().filter(|b| !b.marked).map(|b| (b.id, b.weight)).collect();
    let mut matched = 0;
    for b in right.iter().filter(|b| !b.marked) {
        let start_i = pos_i[b.id as usize] as usize;
        let start_j = pos_j[b.id as usize] as usize;
        let len = b.weight as usize;
        let ok = runs.get(&b.id) == Some(&b.weight)
            && si[start_i + len - 1] == sj[start_j + len - 1]
            && (!check_interior || si[start_i..start_i + len] == sj[start_j..start_j + len]);
        if !ok {
            return Err(Error::InconsistentScript(format!(
                "unmarked run starting at symbol {} differs between the strings",
                b.id
            )));
        }
        matched += 1;
    }
    if matched != runs.len() {
        return Err(Error::InconsistentScript("unmarked runs differ between the strings".into()));
    }
    Ok(BucketDecomposition { left, right, marked })
}

fn check_script(s: &Permutation, pos: &[u32], tr: &EditScript) -> Result<()> {
    let d = s.len();
    if tr.kept.len() + tr.moved.len() != d {
        return Err(Error::InconsistentScript(format!(
            "{} kept + {} moved symbols for length {d}",
            tr.kept.len(),
            tr.moved.len()
        )));
    }
    if tr.moved.windows(2).any(|w| w[0] >= w[1]) || tr.moved.iter().any(|&m| m == 0 || m as usize > d) {
        return Err(Error::InconsistentScript("moved symbols must be sorted, distinct and in range".into()));
    }
    let mut last = None;
    for &k in &tr.kept {
        if k == 0 || k as usize > d || tr.moved.binary_search(&k).is_ok() {
            return Err(Error::InconsistentScript(format!("kept symbol {k} is invalid")));
        }
        let p = pos[k as usize];
        if last.is_some_and(|l| p <= l) {
            return Err(Error::InconsistentScript("kept symbols are not a subsequence".into()));
        }
        last = Some(p);
    }
    Ok(())
}

/// Bucket decomposition of `(s_i, s_j)` from scripts that both start at the
/// same anchor permutation.
pub fn bucket_decomposition(
    si: &Permutation,
    sj: &Permutation,
    tr_i: &EditScript,
    tr_j: &EditScript,
) -> Result<BucketDecomposition> {
    if si.len() != sj.len() {
        return Err(Error::SymbolMismatch { left: si.len(), right: sj.len() });
    }
    let (pos_i, pos_j) = (si.positions(), sj.positions());
    check_script(si, &pos_i, tr_i)?;
    check_script(sj, &pos_j, tr_j)?;
    decompose((si.as_slice(), &pos_i), (sj.as_slice(), &pos_j), &tr_i.moved, &tr_j.moved, true)
}

/// Replaces every bucket by one weighted super-symbol. The weighted Ulam
/// distance of the result equals the insert/delete Ulam distance of the
/// originals.
pub fn compress_pair(
    si: &Permutation,
    sj: &Permutation,
    tr_i: &EditScript,
    tr_j: &EditScript,
) -> Result<(WeightedSeq, WeightedSeq)> {
    Ok(bucket_decomposition(si, sj, tr_i, tr_j)?.compressed())
}
