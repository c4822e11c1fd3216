//! Sets of grid cells backed by word masks.

use crate::grid::{GridSpec, Vertex};
use std::fmt;

/// A set of cells of a fixed [`GridSpec`], stored as a bit mask.
///
/// Bit `(i - 1) * m + (j - 1)` holds vertex `(i, j)`, so ascending bit order
/// is the vertex order (`i` major, `j` minor). All binary operations panic
/// if the operands belong to different specs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    spec: GridSpec,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set over `spec`.
    pub fn empty(spec: GridSpec) -> Self {
        let words = vec![0u64; spec.cell_count().div_ceil(64)];
        Self { spec, words }
    }

    /// The set of all `n * m` cells of `spec`.
    pub fn full(spec: GridSpec) -> Self {
        let mut s = Self::empty(spec);
        for idx in 0..spec.cell_count() {
            s.words[idx / 64] |= 1u64 << (idx % 64);
        }
        s
    }

    /// Builds a set from vertices; panics if any vertex is out of range.
    pub fn from_vertices<I: IntoIterator<Item = Vertex>>(spec: GridSpec, vs: I) -> Self {
        let mut s = Self::empty(spec);
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    /// Inserts `v`; panics if `v` is outside the spec.
    pub fn insert(&mut self, v: Vertex) {
        let idx = self.index_of(v);
        self.words[idx / 64] |= 1u64 << (idx % 64);
    }

    /// Removes `v`; panics if `v` is outside the spec.
    pub fn remove(&mut self, v: Vertex) {
        let idx = self.index_of(v);
        self.words[idx / 64] &= !(1u64 << (idx % 64));
    }

    pub fn contains(&self, v: Vertex) -> bool {
        if !self.spec.contains_vertex(v) {
            return false;
        }
        let idx = self.spec.index_of(v);
        self.words[idx / 64] >> (idx % 64) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Iterates members in ascending vertex order (`i` major, `j` minor).
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        let spec = self.spec;
        (0..spec.cell_count())
            .filter(move |idx| self.words[idx / 64] >> (idx % 64) & 1 == 1)
            .map(move |idx| spec.vertex_at(idx))
    }

    /// Members as a sorted vector.
    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_words(other, |a, b| a & !b)
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.spec, other.spec, "vertex sets belong to different grids");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        assert_eq!(self.spec, other.spec, "vertex sets belong to different grids");
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn index_of(&self, v: Vertex) -> usize {
        assert!(
            self.spec.contains_vertex(v),
            "vertex {v} outside grid {}x{}",
            self.spec.n(),
            self.spec.m()
        );
        self.spec.index_of(v)
    }

    fn zip_words(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.spec, other.spec, "vertex sets belong to different grids");
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(&a, &b)| f(a, b))
            .collect();
        Self { spec: self.spec, words }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
