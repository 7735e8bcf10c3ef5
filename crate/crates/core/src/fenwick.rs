//! Binary indexed tree over `0..len` used for rank counting and
//! order-statistic selection in O(log n).

pub(crate) struct Fenwick {
    tree: Vec<i64>,
}

impl Fenwick {
    pub(crate) fn new(len: usize) -> Self {
        Fenwick {
            tree: vec![0; len + 1],
        }
    }

    /// A tree with every slot in `0..len` holding one unit.
    pub(crate) fn full(len: usize) -> Self {
        let mut tree = vec![0i64; len + 1];
        for i in 1..=len {
            tree[i] += 1;
            let parent = i + (i & i.wrapping_neg());
            if parent <= len {
                tree[parent] += tree[i];
            }
        }
        Fenwick { tree }
    }

    pub(crate) fn add(&mut self, index: usize, delta: i64) {
        let mut i = index + 1;
        while i < self.tree.len() {
            self.tree[i] += delta;
            i += i & i.wrapping_neg();
        }
    }

    /// Sum over slots `0..index` (exclusive).
    pub(crate) fn prefix(&self, index: usize) -> i64 {
        let mut i = index;
        let mut sum = 0;
        while i > 0 {
            sum += self.tree[i];
            i -= i & i.wrapping_neg();
        }
        sum
    }

    /// Smallest slot whose inclusive prefix sum reaches `k` (1-based `k`).
    /// Assumes all weights are non-negative and the total is at least `k`.
    pub(crate) fn select(&self, k: i64) -> usize {
        let len = self.tree.len() - 1;
        let mut pos = 0usize;
        let mut remaining = k;
        let mut step = if len == 0 {
            0
        } else {
            1usize << (usize::BITS - 1 - len.leading_zeros())
        };
        while step > 0 {
            let next = pos + step;
            if next <= len && self.tree[next] < remaining {
                pos = next;
                remaining -= self.tree[next];
            }
            step >>= 1;
        }
        pos
    }
}
