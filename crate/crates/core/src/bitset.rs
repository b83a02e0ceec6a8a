//! Fixed-width bit sets used for adjacency rows and vertex subsets.
//! All crossing counts reduce to word-wise AND plus popcount.

/// A set of vertices out of a fixed universe 0..n-1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Vec<u64>,
}

#[inline]
pub fn word_count(n: usize) -> usize {
    n.div_ceil(64)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            words: vec![0; word_count(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in 0..s.words.len() {
            s.words[w] = !0;
        }
        s.trim();
        s
    }

    pub fn from_indices(n: usize, indices: &[usize]) -> crate::Result<Self> {
        let mut s = Self::empty(n);
        for &i in indices {
            if i >= n {
                return Err(crate::Error::VertexOutOfRange { index: i, n });
            }
            s.insert(i);
        }
        Ok(s)
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1u64 << (i & 63));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i >> 6] >> (i & 63) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Clears bits at positions >= n (keeps word arithmetic honest).
    fn trim(&mut self) {
        let tail = self.n & 63;
        if tail != 0 {
            let last = self.words.len() - 1;
            self.words[last] &= (1u64 << tail) - 1;
        }
    }

    pub fn intersects(&self, other: &VertexSet) -> Option<usize> {
        for (w, (&a, &b)) in self.words.iter().zip(&other.words).enumerate() {
            let both = a & b;
            if both != 0 {
                return Some((w << 6) + both.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        for (a, &b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn iter(&self) -> BitIter<'_> {
        BitIter {
            words: &self.words,
            word_index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_indices(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct BitIter<'a> {
    words: &'a [u64],
    word_index: usize,
    current: u64,
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.current == 0 {
            self.word_index += 1;
            if self.word_index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.word_index];
        }
        let bit = self.current.trailing_zeros() as usize;
        self.current &= self.current - 1;
        Some((self.word_index << 6) + bit)
    }
}

/// popcount of a & b
#[inline]
pub fn and_count(a: &[u64], b: &[u64]) -> usize {
    a.iter()
        .zip(b)
        .map(|(&x, &y)| (x & y).count_ones() as usize)
        .sum()
}

/// popcount of a & b restricted to positions strictly above `above`,
/// additionally masking out words of `exclude` sets.
#[inline]
pub fn and_count_above(a: &[u64], b: &[u64], above: usize, exclude: &[&[u64]]) -> usize {
    let start_word = (above + 1) >> 6;
    let start_bit = (above + 1) & 63;
    let mut total = 0usize;
    for w in start_word..a.len() {
        let mut x = a[w] & b[w];
        for e in exclude {
            x &= !e[w];
        }
        if w == start_word && start_bit != 0 {
            x &= !0u64 << start_bit;
        }
        total += x.count_ones() as usize;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = VertexSet::empty(130);
        for i in [0, 5, 63, 64, 127, 129] {
            s.insert(i);
        }
        assert_eq!(s.to_indices(), vec![0, 5, 63, 64, 127, 129]);
        assert_eq!(s.len(), 6);
        assert!(s.contains(64));
        assert!(!s.contains(65));
    }

    #[test]
    fn full_respects_universe() {
        let s = VertexSet::full(70);
        assert_eq!(s.len(), 70);
    }

    #[test]
    fn and_count_above_masks() {
        let a = VertexSet::from_indices(100, &[1, 2, 3, 70, 71]).unwrap();
        let b = VertexSet::from_indices(100, &[2, 3, 70, 71, 90]).unwrap();
        assert_eq!(and_count(a.words(), b.words()), 4);
        assert_eq!(and_count_above(a.words(), b.words(), 3, &[]), 2);
        let excl = VertexSet::from_indices(100, &[70]).unwrap();
        assert_eq!(
            and_count_above(a.words(), b.words(), 3, &[excl.words()]),
            1
        );
    }
}
