//! Bitset-backed vertex sets.
//!
//! Sets are universe-agnostic: a `VertexSet` may mention identifiers outside
//! any particular graph (flip sides are allowed to), and gets intersected
//! with a graph's live set at the point of use. The canonical order used for
//! flip normalization compares (minimum element, size, elements
//! lexicographically).

use std::cmp::Ordering;
use std::fmt;

pub type Vertex = usize;

const BITS: usize = 64;

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    /// Invariant: no trailing zero words.
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new() -> Self {
        VertexSet { words: Vec::new() }
    }

    pub fn singleton(v: Vertex) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// The set {0, 1, ..., n-1}.
    pub fn full(n: usize) -> Self {
        let mut words = vec![!0u64; n.div_ceil(BITS)];
        if !n.is_multiple_of(BITS) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (n % BITS)) - 1;
            }
        }
        let mut s = VertexSet { words };
        s.trim();
        s
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn insert(&mut self, v: Vertex) {
        let w = v / BITS;
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1u64 << (v % BITS);
    }

    pub fn remove(&mut self, v: Vertex) {
        let w = v / BITS;
        if w < self.words.len() {
            self.words[w] &= !(1u64 << (v % BITS));
            self.trim();
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        let w = v / BITS;
        w < self.words.len() && self.words[w] & (1u64 << (v % BITS)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<Vertex> {
        self.words
            .iter()
            .position(|w| *w != 0)
            .map(|i| i * BITS + self.words[i].trailing_zeros() as usize)
    }

    pub fn last(&self) -> Option<Vertex> {
        self.words
            .last()
            .map(|w| (self.words.len() - 1) * BITS + (63 - w.leading_zeros() as usize))
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { set: self, word: 0, bits: self.words.first().copied().unwrap_or(0) }
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.words.truncate(other.words.len());
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        self.trim();
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        self.trim();
    }

    pub fn symmetric_difference_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        self.trim();
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.symmetric_difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// self ∩ mask == other ∩ mask, without allocating.
    pub fn eq_under_mask(&self, other: &VertexSet, mask: &VertexSet) -> bool {
        for (i, m) in mask.words.iter().enumerate() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            if (a ^ b) & m != 0 {
                return false;
            }
        }
        true
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending element sequences
    /// (prefix-closed: [0,1] precedes [0,1,5]). Used by the JSON encoding
    /// of flip pairs.
    pub fn lex_cmp(&self, other: &VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }
}

/// Canonical set order: minimum element first (empty set least), then size,
/// then elements lexicographically.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.first(), other.first()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => a
                .cmp(&b)
                .then_with(|| self.len().cmp(&other.len()))
                .then_with(|| self.lex_cmp(other)),
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = Vertex;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl From<&[Vertex]> for VertexSet {
    fn from(vs: &[Vertex]) -> Self {
        vs.iter().copied().collect()
    }
}

pub struct Iter<'a> {
    set: &'a VertexSet,
    word: usize,
    bits: u64,
}

impl Iterator for Iter<'_> {
    type Item = Vertex;
    fn next(&mut self) -> Option<Vertex> {
        while self.bits == 0 {
            self.word += 1;
            if self.word >= self.set.words.len() {
                return None;
            }
            self.bits = self.set.words[self.word];
        }
        let tz = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(self.word * BITS + tz)
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
        let mut s = VertexSet::new();
        assert!(s.is_empty());
        s.insert(3);
        s.insert(70);
        s.insert(3);
        assert_eq!(s.len(), 2);
        assert!(s.contains(3) && s.contains(70) && !s.contains(4));
        assert_eq!(s.first(), Some(3));
        assert_eq!(s.last(), Some(70));
        assert_eq!(s.to_vec(), vec![3, 70]);
        s.remove(70);
        assert_eq!(s.to_vec(), vec![3]);
        s.remove(99);
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn trailing_words_do_not_affect_equality() {
        let mut a = VertexSet::singleton(200);
        a.remove(200);
        assert_eq!(a, VertexSet::new());
        a.insert(1);
        assert_eq!(a, VertexSet::singleton(1));
    }

    #[test]
    fn full_set() {
        let s = VertexSet::full(67);
        assert_eq!(s.len(), 67);
        assert!(s.contains(0) && s.contains(66) && !s.contains(67));
        assert_eq!(VertexSet::full(0), VertexSet::new());
    }

    #[test]
    fn boolean_algebra() {
        let a: VertexSet = [1, 2, 3, 64].into_iter().collect();
        let b: VertexSet = [3, 64, 100].into_iter().collect();
        assert_eq!(a.union(&b).to_vec(), vec![1, 2, 3, 64, 100]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 64]);
        assert_eq!(a.difference(&b).to_vec(), vec![1, 2]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![1, 2, 100]);
        assert!(a.intersection(&b).is_subset(&a));
        assert!(!a.is_disjoint(&b));
        assert!(a.difference(&b).is_disjoint(&b));
    }

    #[test]
    fn masked_equality() {
        let a: VertexSet = [1, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 5, 9].into_iter().collect();
        let m1: VertexSet = [2, 5].into_iter().collect();
        let m2: VertexSet = [1, 2].into_iter().collect();
        assert!(a.eq_under_mask(&b, &m1));
        assert!(!a.eq_under_mask(&b, &m2));
        assert!(a.eq_under_mask(&b, &VertexSet::new()));
    }

    #[test]
    fn canonical_order() {
        let e = VertexSet::new();
        let s05: VertexSet = [0, 5].into_iter().collect();
        let s012: VertexSet = [0, 1, 2].into_iter().collect();
        let s013: VertexSet = [0, 1, 3].into_iter().collect();
        let s1: VertexSet = [1].into_iter().collect();
        // empty first, then by min element, then by size, then lexicographic
        assert!(e < s05);
        assert!(s05 < s012, "smaller set sorts first on equal minimum");
        assert!(s012 < s013);
        assert!(s012 < s1);
        // lex order differs from canonical order on the (min,size) example
        assert_eq!(s012.lex_cmp(&s05), Ordering::Less);
    }
}
