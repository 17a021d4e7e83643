use crate::error::{Error, Result};

use super::{MaxFenwick, Permutation};

/// A minimal transformation between two permutations: the symbols of one
/// longest common subsequence stay put, every other symbol is moved.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EditScript {
    /// Common subsequence, in order.
    pub kept: Vec<u32>,
    /// Everything not in `kept`, sorted ascending.
    pub moved: Vec<u32>,
}

impl EditScript {
    pub fn moves(&self) -> usize {
        self.moved.len()
    }
}

/// Length of the longest strictly increasing subsequence (patience sorting).
pub fn lis_len(seq: &[u32]) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for &x in seq {
        match tails.binary_search(&x) {
            Ok(_) => {}
            Err(i) if i == tails.len() => tails.push(x),
            Err(i) => tails[i] = x,
        }
    }
    tails.len()
}

fn check_same_symbols(sigma: &Permutation, tau: &Permutation) -> Result<()> {
    if sigma.len() != tau.len() {
        return Err(Error::SymbolMismatch { left: sigma.len(), right: tau.len() });
    }
    Ok(())
}

/// Positions in `tau` of the symbols of `sigma`, in `sigma` order.
fn position_map(sigma: &Permutation, tau: &Permutation) -> Vec<u32> {
    let pos = tau.positions();
    sigma.as_slice().iter().map(|&s| pos[s as usize]).collect()
}

/// Number of characters that must be moved to turn `sigma` into `tau`:
/// `d - LCS(sigma, tau)`.
pub fn ulam_moves(sigma: &Permutation, tau: &Permutation) -> Result<usize> {
    check_same_symbols(sigma, tau)?;
    Ok(sigma.len() - lis_len(&position_map(sigma, tau)))
}

/// Insert/delete operation count between two permutations,
/// `2 * ulam_moves`.
pub fn ulam_edit(sigma: &Permutation, tau: &Permutation) -> Result<usize> {
    Ok(2 * ulam_moves(sigma, tau)?)
}

/// One optimal script. Among all longest common subsequences, `kept` is the
/// one whose positions in `sigma` form the lexicographically smallest index
/// sequence.
pub fn ulam_edit_script(sigma: &Permutation, tau: &Permutation) -> Result<EditScript> {
    check_same_symbols(sigma, tau)?;
    let d = sigma.len();
    let seq = position_map(sigma, tau);

    // run[k] = length of the longest increasing subsequence starting at k.
    // Values are indexed in reverse so that "values above seq[k]" is a prefix.
    let mut run = vec![0u64; d];
    let mut tree = MaxFenwick::new(d);
    for k in (0..d).rev() {
        let rank = d - 1 - seq[k] as usize;
        run[k] = tree.prefix_max(rank) + 1;
        tree.update(rank, run[k]);
    }
    let lcs = run.iter().copied().max().unwrap_or(0);

    let mut kept = Vec::with_capacity(lcs as usize);
    let mut need = lcs;
    let mut last: Option<u32> = None;
    for k in 0..d {
        if need == 0 {
            break;
        }
        if run[k] == need && last.is_none_or(|v| seq[k] > v) {
            kept.push(sigma.as_slice()[k]);
            last = Some(seq[k]);
            need -= 1;
        }
    }

    let mut is_kept = vec![false; d + 1];
    for &s in &kept {
        is_kept[s as usize] = true;
    }
    let moved = (1..=d as u32).filter(|&s| !is_kept[s as usize]).collect();
    Ok(EditScript { kept, moved })
}
