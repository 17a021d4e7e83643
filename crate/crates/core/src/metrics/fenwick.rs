/// Fenwick tree over `0..len` answering prefix maxima under point
/// increases.
#[derive(Debug, Clone)]
pub struct MaxFenwick {
    tree: Vec<u64>,
}

impl MaxFenwick {
    pub fn new(len: usize) -> Self {
        MaxFenwick { tree: vec![0; len + 1] }
    }

    /// Raises slot `i` to at least `value`.
    pub fn update(&mut self, i: usize, value: u64) {
        let mut k = i + 1;
        while k < self.tree.len() {
            if self.tree[k] < value {
                self.tree[k] = value;
            }
            k += k & k.wrapping_neg();
        }
    }

    /// Maximum over slots `0..end` (0 when empty).
    pub fn prefix_max(&self, end: usize) -> u64 {
        let mut k = end.min(self.tree.len() - 1);
        let mut best = 0;
        while k > 0 {
            best = best.max(self.tree[k]);
            k &= k - 1;
        }
        best
    }
}
