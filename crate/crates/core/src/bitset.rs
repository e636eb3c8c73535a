//! Fixed-capacity bitsets over a graph's vertex indices.
//!
//! A [`VertexSet`] is sized to the owning graph's order at construction and
//! never grows. All set algebra keeps the unused tail bits of the last word
//! zero, so equality and popcount are exact.

const WORD_BITS: usize = 64;

/// Fixed-capacity set of vertex indices, backed by `u64` words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    capacity: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// Empty set able to hold indices `0..capacity`.
    pub fn new(capacity: usize) -> Self {
        VertexSet {
            capacity,
            words: vec![0; capacity.div_ceil(WORD_BITS)],
        }
    }

    /// Set containing every index in `0..capacity`.
    pub fn full(capacity: usize) -> Self {
        let mut set = VertexSet::new(capacity);
        for (i, w) in set.words.iter_mut().enumerate() {
            let base = i * WORD_BITS;
            *w = if base + WORD_BITS <= capacity {
                u64::MAX
            } else {
                mask_below(capacity - base)
            };
        }
        set
    }

    pub fn from_indices(capacity: usize, indices: &[usize]) -> Self {
        let mut set = VertexSet::new(capacity);
        for &v in indices {
            set.insert(v);
        }
        set
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.capacity,
            "index {v} out of capacity {}",
            self.capacity
        );
        self.words[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(
            v < self.capacity,
            "index {v} out of capacity {}",
            self.capacity
        );
        self.words[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.capacity && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Exact cardinality.
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.fill(0);
    }

    /// Least index in the set, if any.
    pub fn first(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_in_place(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_in_place(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    /// Removes every member of `other` from `self`.
    pub fn subtract_in_place(&mut self, other: &VertexSet) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_in_place(other);
        out
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint_from(&self, other: &VertexSet) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i * WORD_BITS + v)
            })
        })
    }

    /// Sorted member list, the form used in witnesses and reports.
    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    fn check(&self, other: &VertexSet) {
        assert_eq!(
            self.capacity, other.capacity,
            "vertex set capacity mismatch ({} vs {})",
            self.capacity, other.capacity
        );
    }
}

fn mask_below(bits: usize) -> u64 {
    debug_assert!(bits < WORD_BITS);
    (1u64 << bits) - 1
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexSet{:?}", self.to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_contains() {
        let mut s = VertexSet::new(100);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(99);
        assert!(s.contains(0) && s.contains(63) && s.contains(64) && s.contains(99));
        assert_eq!(s.len(), 4);
        s.remove(64);
        assert!(!s.contains(64));
        assert_eq!(s.to_vec(), vec![0, 63, 99]);
    }

    #[test]
    fn full_respects_capacity() {
        for cap in [0, 1, 63, 64, 65, 130] {
            let s = VertexSet::full(cap);
            assert_eq!(s.len(), cap);
            assert_eq!(s.to_vec(), (0..cap).collect::<Vec<_>>());
        }
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(10, &[1, 3, 5]);
        let b = VertexSet::from_indices(10, &[3, 5, 7]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 5]);
        let mut u = a.clone();
        u.union_in_place(&b);
        assert_eq!(u.to_vec(), vec![1, 3, 5, 7]);
        let mut d = u.clone();
        d.subtract_in_place(&a);
        assert_eq!(d.to_vec(), vec![7]);
        assert!(a.is_subset_of(&u));
        assert!(!u.is_subset_of(&a));
        assert!(d.is_disjoint_from(&a));
    }

    #[test]
    fn first_and_empty() {
        let mut s = VertexSet::new(70);
        assert_eq!(s.first(), None);
        assert!(s.is_empty());
        s.insert(68);
        assert_eq!(s.first(), Some(68));
    }

    #[test]
    #[should_panic]
    fn out_of_capacity_panics() {
        let mut s = VertexSet::new(8);
        s.insert(8);
    }
}
