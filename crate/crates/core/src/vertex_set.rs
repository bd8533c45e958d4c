//! Dense bitset over the vertices of one host graph.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(n: usize) -> usize {
    n.div_ceil(WORD)
}

/// A subset of `{0, .., host_size - 1}`, stored as fixed-width 64-bit blocks.
///
/// Two sets only compare equal when they refer to hosts of the same order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    host: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(host_size: usize) -> Self {
        VertexSet {
            host: host_size,
            words: vec![0; words_for(host_size)],
        }
    }

    pub fn full(host_size: usize) -> Self {
        let mut s = Self::new(host_size);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let count = (host_size - lo).min(WORD);
            *w = if count == WORD { !0 } else { (1u64 << count) - 1 };
        }
        s
    }

    pub fn from_vertices<I>(host_size: usize, vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(host_size);
        for v in vertices {
            s.try_insert(v)?;
        }
        Ok(s)
    }

    /// Builds a set from the low `host_size` bits of a single word.
    pub fn from_mask(host_size: usize, mask: u64) -> Self {
        debug_assert!(host_size <= WORD);
        let mut s = Self::new(host_size);
        if let Some(w) = s.words.first_mut() {
            *w = mask;
        }
        s
    }

    /// The set as a single word, if the host fits in one.
    pub fn as_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn host_size(&self) -> usize {
        self.host
    }

    pub fn check_host(&self, n: usize) -> Result<()> {
        if self.host == n {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                expected: n,
                found: self.host,
            })
        }
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.host {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.host,
            })
        }
    }

    pub fn try_insert(&mut self, v: usize) -> Result<bool> {
        self.check_vertex(v)?;
        Ok(self.insert(v))
    }

    /// Panics if `v` is out of range.
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.host, "vertex {v} out of range {}", self.host);
        let (i, b) = (v / WORD, v % WORD);
        let fresh = self.words[i] & (1 << b) == 0;
        self.words[i] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.host {
            return false;
        }
        let (i, b) = (v / WORD, v % WORD);
        let present = self.words[i] & (1 << b) != 0;
        self.words[i] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.host && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn min(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.host, other.host);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.host, other.host);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        debug_assert_eq!(self.host, other.host);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
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

    /// Complement relative to the host's vertex set.
    pub fn complement(&self) -> VertexSet {
        Self::full(self.host).difference(self)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.host == other.host && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Orders sets by their ascending vertex sequences, then by host size.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.host.cmp(&other.host))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}
