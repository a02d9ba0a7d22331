use std::fmt;

const WORD: usize = 64;

/// A set of vertex ids over a fixed universe `0..universe`.
///
/// Backed by a packed bitset; two sets compare equal only when they share the
/// same universe size and members.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; universe.div_ceil(WORD)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut set = Self::empty(universe);
        for v in 0..universe {
            set.insert(v);
        }
        set
    }

    /// Builds a set from ids, panicking on an id outside the universe.
    pub fn from_ids(universe: usize, ids: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(universe);
        for v in ids {
            set.insert(v);
        }
        set
    }

    pub fn singleton(universe: usize, v: usize) -> Self {
        Self::from_ids(universe, [v])
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    /// Inserts `v`; returns whether it was newly added.
    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe of size {}",
            self.universe
        );
        let word = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let fresh = *word & bit == 0;
        *word |= bit;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let word = &mut self.words[v / WORD];
        let bit = 1u64 << (v % WORD);
        let present = *word & bit != 0;
        *word &= !bit;
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let bit = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    Some(i * WORD + bit)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    fn zip_with(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        assert_eq!(self.universe, other.universe, "vertex sets over different universes");
        self.words.iter().zip(&other.words).all(|(&a, &b)| a & b == 0)
    }

    /// The members as a single word, when the universe fits in 64 bits.
    pub fn to_mask(&self) -> Option<u64> {
        (self.universe <= WORD).then(|| self.words.first().copied().unwrap_or(0))
    }

    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= WORD);
        let mut set = Self::empty(universe);
        if universe > 0 {
            set.words[0] = mask & low_bits(universe);
        }
        set
    }
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= WORD {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = VertexSet::empty(130);
        assert!(a.insert(3));
        assert!(!a.insert(3));
        a.insert(129);
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![3, 129]);
        assert_eq!(a.len(), 2);
        let b = VertexSet::from_ids(130, [3, 64]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![129]);
        assert_eq!(a.union(&b).len(), 3);
        assert!(VertexSet::singleton(130, 3).is_subset(&a));
        assert!(a.remove(3));
        assert!(!a.contains(3));
        assert!(a.to_mask().is_none());
    }

    #[test]
    fn mask_round_trip() {
        let s = VertexSet::from_ids(10, [0, 9]);
        let m = s.to_mask().unwrap();
        assert_eq!(m, 0b10_0000_0001);
        assert_eq!(VertexSet::from_mask(10, m), s);
        assert_eq!(VertexSet::full(64).to_mask(), Some(u64::MAX));
    }
}
