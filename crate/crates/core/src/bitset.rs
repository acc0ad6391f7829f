//! Fixed-width bit sets used for adjacency rows and clique candidate sets.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
  words: Vec<u64>,
  len:   usize,
}

impl BitSet {
  pub fn new(len: usize) -> Self { Self { words: vec![0; len.div_ceil(64)], len } }

  pub fn full(len: usize) -> Self {
    let mut s = Self::new(len);
    for i in 0..len {
      s.insert(i);
    }
    s
  }

  pub fn capacity(&self) -> usize { self.len }

  /// Backing words, least significant bit first.
  pub fn words(&self) -> &[u64] { &self.words }

  #[inline]
  pub fn insert(&mut self, i: usize) { self.words[i >> 6] |= 1 << (i & 63); }

  #[inline]
  pub fn remove(&mut self, i: usize) { self.words[i >> 6] &= !(1 << (i & 63)); }

  #[inline]
  pub fn contains(&self, i: usize) -> bool { i < self.len && self.words[i >> 6] >> (i & 63) & 1 == 1 }

  pub fn count(&self) -> usize { self.words.iter().map(|w| w.count_ones() as usize).sum() }

  pub fn is_empty(&self) -> bool { self.words.iter().all(|&w| w == 0) }

  pub fn intersect_with(&mut self, other: &BitSet) {
    for (a, b) in self.words.iter_mut().zip(&other.words) {
      *a &= b;
    }
  }

  pub fn intersection(&self, other: &BitSet) -> BitSet {
    let mut out = self.clone();
    out.intersect_with(other);
    out
  }

  pub fn difference_with(&mut self, other: &BitSet) {
    for (a, b) in self.words.iter_mut().zip(&other.words) {
      *a &= !b;
    }
  }

  pub fn intersection_count(&self, other: &BitSet) -> usize {
    self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
  }

  /// Keeps only members strictly greater than `v`.
  pub fn retain_above(&mut self, v: usize) {
    let word = v >> 6;
    let upto = word.min(self.words.len());
    for w in &mut self.words[..upto] {
      *w = 0;
    }
    if word < self.words.len() {
      let bit = v & 63;
      let mask = if bit == 63 { 0 } else { !0u64 << (bit + 1) };
      self.words[word] &= mask;
    }
  }

  /// Ascending iterator over members.
  pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
    self.words.iter().enumerate().flat_map(|(wi, &w)| {
      let mut w = w;
      core::iter::from_fn(move || {
        if w == 0 {
          return None;
        }
        let t = w.trailing_zeros() as usize;
        w &= w - 1;
        Some(wi * 64 + t)
      })
    })
  }

  pub fn first(&self) -> Option<usize> { self.iter().next() }
}
