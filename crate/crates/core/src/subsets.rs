//! Lexicographic k-subset iteration over `0..n`.

/// Binomial coefficient in `u128`; saturates instead of overflowing so that
/// work-splitting arithmetic stays safe on degenerate inputs.
pub fn choose(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i + 1) as u128;
    }
    acc
}

/// Iterator over k-subsets of `{lo, .., n-1}` as sorted index vectors, in
/// lexicographic order.
pub struct LexSubsets {
    n: usize,
    current: Vec<usize>,
    started: bool,
    exhausted: bool,
}

impl LexSubsets {
    pub fn new(n: usize, k: usize) -> Self {
        Self::in_range(n, k, 0)
    }

    pub fn in_range(n: usize, k: usize, lo: usize) -> Self {
        let current: Vec<usize> = (lo..lo + k).collect();
        let exhausted = lo + k > n;
        LexSubsets {
            n,
            current,
            started: false,
            exhausted,
        }
    }

    /// Subsets whose first elements equal `prefix`, remaining elements drawn
    /// above the last prefix entry.
    pub fn with_prefix(n: usize, k: usize, prefix: &[usize]) -> Self {
        assert!(prefix.len() <= k);
        assert!(prefix.windows(2).all(|w| w[0] < w[1]));
        let lo = prefix.last().map_or(0, |&p| p + 1);
        let tail = k - prefix.len();
        let mut current = prefix.to_vec();
        current.extend(lo..lo + tail);
        let exhausted = lo + tail > n;
        LexSubsets {
            n,
            current,
            started: false,
            exhausted,
        }
    }

    /// Advances to the next subset keeping the first `fixed` entries pinned.
    fn advance(&mut self, fixed: usize) -> bool {
        let k = self.current.len();
        let mut i = k;
        while i > fixed {
            i -= 1;
            if self.current[i] < self.n - (k - i) {
                self.current[i] += 1;
                for j in i + 1..k {
                    self.current[j] = self.current[j - 1] + 1;
                }
                return true;
            }
        }
        false
    }

    /// Next subset with the original prefix of length `fixed` preserved.
    pub fn next_with_fixed(&mut self, fixed: usize) -> Option<&[usize]> {
        if self.exhausted {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.current);
        }
        if self.advance(fixed) {
            Some(&self.current)
        } else {
            self.exhausted = true;
            None
        }
    }

    pub fn next_subset(&mut self) -> Option<&[usize]> {
        self.next_with_fixed(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn choose_values() {
        assert_eq!(choose(15, 11), 1365);
        assert_eq!(choose(32, 10), 64512240);
        assert_eq!(choose(5, 0), 1);
        assert_eq!(choose(4, 5), 0);
    }

    #[test]
    fn lex_order_and_count() {
        let mut it = LexSubsets::new(5, 3);
        let mut all = Vec::new();
        while let Some(s) = it.next_subset() {
            all.push(s.to_vec());
        }
        assert_eq!(all.len(), choose(5, 3) as usize);
        assert_eq!(all[0], vec![0, 1, 2]);
        assert_eq!(all[1], vec![0, 1, 3]);
        assert_eq!(all.last().unwrap(), &vec![2, 3, 4]);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }

    #[test]
    fn prefix_blocks_cover_everything() {
        let n = 7;
        let k = 4;
        let mut blocks = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let mut it = LexSubsets::with_prefix(n, k, &[a, b]);
                while let Some(s) = it.next_with_fixed(2) {
                    blocks.push(s.to_vec());
                }
            }
        }
        let mut direct = Vec::new();
        let mut it = LexSubsets::new(n, k);
        while let Some(s) = it.next_subset() {
            direct.push(s.to_vec());
        }
        blocks.sort();
        direct.sort();
        assert_eq!(blocks, direct);
    }

    #[test]
    fn empty_subset() {
        let mut it = LexSubsets::new(4, 0);
        assert_eq!(it.next_subset(), Some(&[][..]));
        assert_eq!(it.next_subset(), None);
    }
}
