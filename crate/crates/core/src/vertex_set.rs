use std::fmt;

/// Index of a vertex in `0..n`. The ascending index order is the fixed
/// total order used by every search in this crate.
pub type VertexId = usize;

const WORD: usize = 64;

/// A set of vertices over a universe `{0, .., n-1}`, stored as a bit vector of
/// `ceil(n / 64)` words. Bits at positions `>= n` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(n: usize) -> usize {
    n.div_ceil(WORD)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = VertexSet {
            universe,
            words: vec![!0; word_count(universe)],
        };
        s.clear_tail();
        s
    }

    pub fn singleton(universe: usize, v: VertexId) -> Self {
        let mut s = Self::empty(universe);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = VertexId>>(universe: usize, it: I) -> Self {
        let mut s = Self::empty(universe);
        for v in it {
            s.insert(v);
        }
        s
    }

    /// Builds the set whose members are the set bits of `mask` (universe at most 64).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut s = Self::empty(universe);
        if universe > 0 {
            s.words[0] = mask;
            s.clear_tail();
        }
        s
    }

    fn clear_tail(&mut self) {
        let rem = self.universe % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: VertexId) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`; panics if `v` is outside the universe.
    #[inline]
    pub fn insert(&mut self, v: VertexId) {
        assert!(v < self.universe, "vertex {v} outside universe of size {}", self.universe);
        self.words[v / WORD] |= 1 << (v % WORD);
    }

    #[inline]
    pub fn remove(&mut self, v: VertexId) {
        if v < self.universe {
            self.words[v / WORD] &= !(1 << (v % WORD));
        }
    }

    pub fn with(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.insert(v);
        s
    }

    pub fn without(&self, v: VertexId) -> Self {
        let mut s = self.clone();
        s.remove(v);
        s
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member in the vertex order.
    pub fn first(&self) -> Option<VertexId> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<VertexId> {
        self.iter().collect()
    }

    #[inline]
    fn check(&self, other: &Self) {
        debug_assert_eq!(self.universe, other.universe, "vertex sets over different universes");
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.check(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn complement(&self) -> Self {
        let mut s = VertexSet {
            universe: self.universe,
            words: self.words.iter().map(|w| !w).collect(),
        };
        s.clear_tail();
        s
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &Self) -> bool {
        other.is_subset(self)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        !self.intersects(other)
    }

    pub fn intersection_len(&self, other: &Self) -> usize {
        self.check(other);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// If `self ∩ other` is a single vertex, returns it.
    pub fn single_common(&self, other: &Self) -> Option<VertexId> {
        self.check(other);
        let mut found = None;
        for (i, (a, b)) in self.words.iter().zip(&other.words).enumerate() {
            let w = a & b;
            if w == 0 {
                continue;
            }
            if found.is_some() || w.count_ones() > 1 {
                return None;
            }
            found = Some(i * WORD + w.trailing_zeros() as usize);
        }
        found
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = VertexId;

    fn next(&mut self) -> Option<VertexId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = VertexId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}
