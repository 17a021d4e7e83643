/// Result of a thresholded edit distance computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bounded {
    Within(usize),
    AboveThreshold,
}

/// Levenshtein distance (unit-cost insertions, deletions, substitutions)
/// by the full dynamic program, two rows at a time.
pub fn edit_distance<T: PartialEq>(s: &[T], t: &[T]) -> usize {
    if s.is_empty() {
        return t.len();
    }
    let mut prev: Vec<usize> = (0..=t.len()).collect();
    let mut cur = vec![0usize; t.len() + 1];
    for (i, a) in s.iter().enumerate() {
        cur[0] = i + 1;
        for (j, b) in t.iter().enumerate() {
            let sub = prev[j] + usize::from(a != b);
            cur[j + 1] = sub.min(prev[j + 1] + 1).min(cur[j] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[t.len()]
}

/// Edit distance restricted to the diagonal band `|i - j| <= threshold`.
///
/// Any alignment of cost at most `threshold` stays inside the band, so the
/// banded table is exact whenever the true distance is at most `threshold`.
/// Runs in `O(threshold * min(|s|, |t|))`.
pub fn edit_distance_bounded<T: PartialEq>(s: &[T], t: &[T], threshold: usize) -> Bounded {
    let (n, m) = (s.len(), t.len());
    if n.abs_diff(m) > threshold {
        return Bounded::AboveThreshold;
    }
    let inf = threshold + 1;
    let width = 2 * threshold + 1;
    // Row i stores columns j = i - threshold + k for k in 0..width.
    let mut prev = vec![inf; width];
    let mut cur = vec![inf; width];
    for (k, slot) in prev.iter_mut().enumerate() {
        let j = k as isize - threshold as isize;
        if (0..=m as isize).contains(&j) {
            *slot = (j as usize).min(inf);
        }
    }
    for i in 1..=n {
        let mut row_min = inf;
        for k in 0..width {
            let j = i as isize - threshold as isize + k as isize;
            if j < 0 || j > m as isize {
                cur[k] = inf;
                continue;
            }
            let j = j as usize;
            // Cell (i-1, j) is at offset k + 1 in the previous row, (i-1, j-1) at k.
            let mut best = if j == 0 { i.min(inf) } else { inf };
            if j > 0 {
                best = best.min(prev[k] + usize::from(s[i - 1] != t[j - 1]));
                if k > 0 {
                    best = best.min(cur[k - 1] + 1);
                }
            }
            if k + 1 < width {
                best = best.min(prev[k + 1] + 1);
            }
            cur[k] = best.min(inf);
            row_min = row_min.min(cur[k]);
        }
        if row_min > threshold {
            return Bounded::AboveThreshold;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let k = m + threshold - n;
    match prev[k] {
        v if v <= threshold => Bounded::Within(v),
        _ => Bounded::AboveThreshold,
    }
}
