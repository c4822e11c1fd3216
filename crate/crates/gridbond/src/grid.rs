//! Grid graphs with removal masks, canonical edge naming, and symmetries.
//!
//! `G(n, m)` has vertices `x(i, j)` for `1 <= i <= n`, `1 <= j <= m`.
//! A *horizontal* edge `H:i,j` joins `x(i,j)` and `x(i+1,j)`; a *vertical*
//! edge `V:i,j` joins `x(i,j)` and `x(i,j+1)`. Coordinates are 1-based
//! everywhere, including textual names, and deletions are masks over the
//! full grid so that cell names stay stable.

use crate::set::VertexSet;
use crate::{Error, Result};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Dimensions of a grid graph: `n` columns by `m` rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GridSpec {
    n: u32,
    m: u32,
}

impl GridSpec {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidInput(format!(
                "grid dimensions must be positive, got {n}x{m}"
            )));
        }
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn cell_count(&self) -> usize {
        self.n as usize * self.m as usize
    }

    pub fn horizontal_edge_count(&self) -> usize {
        (self.n as usize - 1) * self.m as usize
    }

    pub fn vertical_edge_count(&self) -> usize {
        self.n as usize * (self.m as usize - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.horizontal_edge_count() + self.vertical_edge_count()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v.i) && (1..=self.m).contains(&v.j)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        match e.kind {
            EdgeKind::Horizontal => {
                (1..self.n).contains(&e.i) && (1..=self.m).contains(&e.j)
            }
            EdgeKind::Vertical => {
                (1..=self.n).contains(&e.i) && (1..self.m).contains(&e.j)
            }
        }
    }

    /// Cell index of `v` in vertex order (`i` major, `j` minor).
    pub(crate) fn index_of(&self, v: Vertex) -> usize {
        (v.i as usize - 1) * self.m as usize + (v.j as usize - 1)
    }

    pub(crate) fn vertex_at(&self, idx: usize) -> Vertex {
        Vertex {
            i: (idx / self.m as usize) as u32 + 1,
            j: (idx % self.m as usize) as u32 + 1,
        }
    }

    /// All vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        let spec = *self;
        (0..self.cell_count()).map(move |idx| spec.vertex_at(idx))
    }

    /// All edges in canonical order: horizontal before vertical, then by
    /// `i`, then by `j`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..self.n {
            for j in 1..=self.m {
                out.push(Edge::horizontal(i, j));
            }
        }
        for i in 1..=self.n {
            for j in 1..self.m {
                out.push(Edge::vertical(i, j));
            }
        }
        out
    }

    pub fn transposed(&self) -> GridSpec {
        GridSpec { n: self.m, m: self.n }
    }
}

/// A grid cell, written `i,j` with 1-based coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub i: u32,
    pub j: u32,
}

impl Vertex {
    pub fn new(i: u32, j: u32) -> Self {
        Self { i, j }
    }

    pub fn transposed(&self) -> Vertex {
        Vertex { i: self.j, j: self.i }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i, self.j)
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("expected vertex name \"i,j\", got {s:?}"));
        let (i, j) = s.split_once(',').ok_or_else(bad)?;
        Ok(Vertex {
            i: i.trim().parse().map_err(|_| bad())?,
            j: j.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// Edge orientation. Horizontal edges vary the column index `i`, vertical
/// edges vary the row index `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
}

/// A grid edge, written `H:i,j` or `V:i,j`.
///
/// The derived ordering (kind, then `i`, then `j`) is the canonical total
/// order used for subset enumeration and witness reporting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub kind: EdgeKind,
    pub i: u32,
    pub j: u32,
}

impl Edge {
    /// The edge joining `x(i,j)` and `x(i+1,j)`.
    pub fn horizontal(i: u32, j: u32) -> Self {
        Self { kind: EdgeKind::Horizontal, i, j }
    }

    /// The edge joining `x(i,j)` and `x(i,j+1)`.
    pub fn vertical(i: u32, j: u32) -> Self {
        Self { kind: EdgeKind::Vertical, i, j }
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        match self.kind {
            EdgeKind::Horizontal => (Vertex::new(self.i, self.j), Vertex::new(self.i + 1, self.j)),
            EdgeKind::Vertical => (Vertex::new(self.i, self.j), Vertex::new(self.i, self.j + 1)),
        }
    }

    pub fn is_incident_to(&self, v: Vertex) -> bool {
        let (a, b) = self.endpoints();
        a == v || b == v
    }

    pub fn transposed(&self) -> Edge {
        match self.kind {
            EdgeKind::Horizontal => Edge::vertical(self.j, self.i),
            EdgeKind::Vertical => Edge::horizontal(self.j, self.i),
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            EdgeKind::Horizontal => 'H',
            EdgeKind::Vertical => 'V',
        };
        write!(f, "{k}:{},{}", self.i, self.j)
    }
}

impl FromStr for Edge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::InvalidInput(format!(
                "expected edge name \"H:i,j\" or \"V:i,j\", got {s:?}"
            ))
        };
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let kind = match kind.trim() {
            "H" | "h" => EdgeKind::Horizontal,
            "V" | "v" => EdgeKind::Vertical,
            _ => return Err(bad()),
        };
        let (i, j) = rest.split_once(',').ok_or_else(bad)?;
        Ok(Edge {
            kind,
            i: i.trim().parse().map_err(|_| bad())?,
            j: j.trim().parse().map_err(|_| bad())?,
        })
    }
}

/// A grid graph: a spec plus removed-edge and deleted-vertex masks.
///
/// Values are immutable after construction; `remove_edges` and
/// `delete_vertices` return new graphs. Adjacency is answered from
/// per-cell neighbor masks, so queries are O(words).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    spec: GridSpec,
    removed_edges: BTreeSet<Edge>,
    deleted_vertices: BTreeSet<Vertex>,
    live: VertexSet,
    neighbor_masks: Vec<VertexSet>,
}

impl GridGraph {
    /// The full grid `G(n, m)` with nothing removed.
    pub fn new(spec: GridSpec) -> Self {
        Self::rebuild(spec, BTreeSet::new(), BTreeSet::new())
    }

    fn rebuild(
        spec: GridSpec,
        removed_edges: BTreeSet<Edge>,
        deleted_vertices: BTreeSet<Vertex>,
    ) -> Self {
        let mut live = VertexSet::full(spec);
        for &v in &deleted_vertices {
            live.remove(v);
        }
        let mut neighbor_masks = vec![VertexSet::empty(spec); spec.cell_count()];
        for e in spec.edges() {
            if removed_edges.contains(&e) {
                continue;
            }
            let (a, b) = e.endpoints();
            if live.contains(a) && live.contains(b) {
                neighbor_masks[spec.index_of(a)].insert(b);
                neighbor_masks[spec.index_of(b)].insert(a);
            }
        }
        Self { spec, removed_edges, deleted_vertices, live, neighbor_masks }
    }

    pub fn spec(&self) -> GridSpec {
        self.spec
    }

    pub fn removed_edges(&self) -> &BTreeSet<Edge> {
        &self.removed_edges
    }

    pub fn deleted_vertices(&self) -> &BTreeSet<Vertex> {
        &self.deleted_vertices
    }

    /// True when nothing has been removed or deleted.
    pub fn is_clean(&self) -> bool {
        self.removed_edges.is_empty() && self.deleted_vertices.is_empty()
    }

    pub fn is_live(&self, v: Vertex) -> bool {
        self.live.contains(v)
    }

    /// Mask of all live vertices.
    pub fn live_vertices(&self) -> &VertexSet {
        &self.live
    }

    pub fn live_count(&self) -> usize {
        self.live.len()
    }

    /// True when `e` is an edge of the current graph: in range, not
    /// removed, and not incident to a deleted vertex.
    pub fn edge_present(&self, e: Edge) -> bool {
        if !self.spec.contains_edge(e) || self.removed_edges.contains(&e) {
            return false;
        }
        let (a, b) = e.endpoints();
        self.live.contains(a) && self.live.contains(b)
    }

    /// Present edges in canonical order.
    pub fn present_edges(&self) -> Vec<Edge> {
        self.spec
            .edges()
            .into_iter()
            .filter(|&e| self.edge_present(e))
            .collect()
    }

    /// Neighbor mask of `v`; precomputed, so this is a clone of a small
    /// bit mask.
    pub fn neighbors(&self, v: Vertex) -> Result<VertexSet> {
        if !self.live.contains(v) {
            return Err(Error::InvalidVertex(v));
        }
        Ok(self.neighbor_masks[self.spec.index_of(v)].clone())
    }

    /// Borrowed neighbor mask of a live vertex (panics on a dead cell;
    /// internal fast path for solvers).
    pub(crate) fn neighbor_mask(&self, v: Vertex) -> &VertexSet {
        debug_assert!(self.live.contains(v));
        &self.neighbor_masks[self.spec.index_of(v)]
    }

    pub fn degree(&self, v: Vertex) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// Returns a new graph with `edges` additionally removed.
    ///
    /// Every requested edge must be present; a repeated edge or an edge
    /// incident to a deleted vertex is an error, not a no-op.
    pub fn remove_edges(&self, edges: &[Edge]) -> Result<GridGraph> {
        let mut removed = self.removed_edges.clone();
        for &e in edges {
            if !self.edge_present(e) || removed.contains(&e) {
                return Err(Error::EdgeNotPresent(e));
            }
            removed.insert(e);
        }
        Ok(Self::rebuild(self.spec, removed, self.deleted_vertices.clone()))
    }

    /// Returns a new graph with `vertices` deleted. Edges incident to
    /// deleted vertices are absorbed into the deletion (dropped from the
    /// removed-edge mask).
    pub fn delete_vertices(&self, vertices: &[Vertex]) -> Result<GridGraph> {
        let mut deleted = self.deleted_vertices.clone();
        for &v in vertices {
            if !self.live.contains(v) || deleted.contains(&v) {
                return Err(Error::InvalidVertex(v));
            }
            deleted.insert(v);
        }
        let removed = self
            .removed_edges
            .iter()
            .copied()
            .filter(|e| {
                let (a, b) = e.endpoints();
                !deleted.contains(&a) && !deleted.contains(&b)
            })
            .collect();
        Ok(Self::rebuild(self.spec, removed, deleted))
    }

    /// The live part of column `Y_i = { x(i,j) : 1 <= j <= m }`.
    pub fn column(&self, i: u32) -> Result<VertexSet> {
        if i < 1 || i > self.spec.n {
            return Err(Error::InvalidColumn(i));
        }
        let mut s = VertexSet::empty(self.spec);
        for j in 1..=self.spec.m {
            let v = Vertex::new(i, j);
            if self.live.contains(v) {
                s.insert(v);
            }
        }
        Ok(s)
    }

    /// True iff some live vertex has no live neighbor.
    pub fn has_isolated_vertex(&self) -> bool {
        self.live
            .iter()
            .any(|v| self.neighbor_masks[self.spec.index_of(v)].is_empty())
    }

    /// The same graph with `i` and `j` swapped everywhere.
    pub fn transposed(&self) -> GridGraph {
        let removed = self.removed_edges.iter().map(|e| e.transposed()).collect();
        let deleted = self
            .deleted_vertices
            .iter()
            .map(|v| v.transposed())
            .collect();
        GridGraph::rebuild(self.spec.transposed(), removed, deleted)
    }
}

/// An automorphism of the clean grid: optional flips of each axis followed
/// by an optional transpose (squares only). Grids have 4 such maps,
/// squares 8.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SymmetryMap {
    pub flip_i: bool,
    pub flip_j: bool,
    pub transpose: bool,
}

impl SymmetryMap {
    pub const IDENTITY: SymmetryMap =
        SymmetryMap { flip_i: false, flip_j: false, transpose: false };

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Applies the map to a vertex of `spec`. Errors when a transpose is
    /// requested on a non-square grid.
    pub fn apply_vertex(&self, spec: GridSpec, v: Vertex) -> Result<Vertex> {
        if self.transpose && spec.n() != spec.m() {
            return Err(Error::InvalidSymmetry);
        }
        let i = if self.flip_i { spec.n() + 1 - v.i } else { v.i };
        let j = if self.flip_j { spec.m() + 1 - v.j } else { v.j };
        Ok(if self.transpose { Vertex::new(j, i) } else { Vertex::new(i, j) })
    }

    /// Applies the map to an edge of `spec`.
    pub fn apply_edge(&self, spec: GridSpec, e: Edge) -> Result<Edge> {
        if self.transpose && spec.n() != spec.m() {
            return Err(Error::InvalidSymmetry);
        }
        // Map both endpoints and rebuild the canonical (lower-endpoint)
        // name, which also handles the flip reindexing H:i,j -> H:n-i,j.
        let (a, b) = e.endpoints();
        let a = self.apply_vertex(spec, a)?;
        let b = self.apply_vertex(spec, b)?;
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        debug_assert!(lo.i + 1 == hi.i && lo.j == hi.j || lo.i == hi.i && lo.j + 1 == hi.j);
        Ok(if lo.i + 1 == hi.i {
            Edge::horizontal(lo.i, lo.j)
        } else {
            Edge::vertical(lo.i, lo.j)
        })
    }
}

/// The full automorphism group of the clean grid `spec`: the four flip
/// combinations, doubled by transposition when `n == m`.
pub fn symmetries(spec: GridSpec) -> Vec<SymmetryMap> {
    let mut maps = Vec::new();
    let transposes: &[bool] = if spec.n() == spec.m() { &[false, true] } else { &[false] };
    for &transpose in transposes {
        for &flip_i in &[false, true] {
            for &flip_j in &[false, true] {
                maps.push(SymmetryMap { flip_i, flip_j, transpose });
            }
        }
    }
    maps
}
