//! Closed-form values, explicit dominating-set constructions, and known
//! witness edge sets for grids of height at most four.
//!
//! Everything here is independent of the solvers and exists to
//! cross-validate them: formulas against the dynamic program, constructions
//! against the total-domination predicate, witness edge sets against the
//! bondage verifier.

use crate::grid::{Edge, GridGraph, GridSpec, Vertex};
use crate::set::VertexSet;
use crate::{Error, Result};

/// A closed-form prediction. `Exact` and `UpperBound` must agree with (or
/// bound) the solver; `Unknown` means the literature determines nothing
/// for that shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaValue {
    Exact(u32),
    UpperBound(u32),
    Unknown,
}

impl FormulaValue {
    pub fn exact(&self) -> Option<u32> {
        match self {
            FormulaValue::Exact(v) => Some(*v),
            _ => None,
        }
    }

    pub fn bound(&self) -> Option<u32> {
        match self {
            FormulaValue::Exact(v) | FormulaValue::UpperBound(v) => Some(*v),
            FormulaValue::Unknown => None,
        }
    }
}

/// Closed-form total domination number of `G(n, m)`.
///
/// Exact for every shape with a side of length 2 or 3, and for height 4
/// with the other side at least 4. Strips of height 1 (paths) and all
/// shapes with both sides at least 5 are unknown here; the solver is
/// authoritative for those.
pub fn gamma_t_formula(n: u32, m: u32) -> FormulaValue {
    if n == 0 || m == 0 {
        return FormulaValue::Unknown;
    }
    if m == 2 {
        return FormulaValue::Exact(2 * ((n + 2) / 3));
    }
    if n == 2 {
        return FormulaValue::Exact(2 * ((m + 2) / 3));
    }
    if (n, m) == (1, 3) || (n, m) == (3, 1) {
        return FormulaValue::Exact(2);
    }
    if m == 3 && n >= 2 {
        return FormulaValue::Exact(n);
    }
    if n == 3 && m >= 2 {
        return FormulaValue::Exact(m);
    }
    if m == 4 && n >= 4 {
        return FormulaValue::Exact(height_four_gamma_t(n));
    }
    if n == 4 && m >= 4 {
        return FormulaValue::Exact(height_four_gamma_t(m));
    }
    FormulaValue::Unknown
}

fn height_four_gamma_t(n: u32) -> u32 {
    let base = (6 * n + 8) / 5;
    match n % 5 {
        1 | 2 | 4 => base,
        _ => base + 1,
    }
}

/// Closed-form total bondage number of `G(n, m)`.
///
/// Height 1 (paths): exact for length at least 4; the shorter paths are
/// not settled in the literature and return `Unknown` (the solver computes
/// them as infinite). Heights 2 and 3: exact. Height 4: exact for
/// `n = 6`, `n ≡ 1 (mod 5)` with `n ≠ 6`, and `n ≡ 4 (mod 5)`; upper
/// bounds of 3 and 4 for the remaining residues. Height 5 and up: unknown.
pub fn bondage_formula(n: u32, m: u32) -> FormulaValue {
    if n == 0 || m == 0 {
        return FormulaValue::Unknown;
    }
    let (n, m) = if m <= n { (n, m) } else { (m, n) };
    match m {
        1 => {
            if n >= 4 {
                FormulaValue::Exact(if n % 4 == 2 { 2 } else { 1 })
            } else {
                FormulaValue::Unknown
            }
        }
        2 => FormulaValue::Exact(match n % 3 {
            0 => 1,
            2 => 2,
            _ => 3,
        }),
        3 => FormulaValue::Exact(1),
        4 => {
            if n == 6 {
                FormulaValue::Exact(2)
            } else {
                match n % 5 {
                    1 => FormulaValue::Exact(1),
                    4 => FormulaValue::Exact(2),
                    2 => FormulaValue::UpperBound(3),
                    _ => FormulaValue::UpperBound(4),
                }
            }
        }
        _ => FormulaValue::Unknown,
    }
}

/// Named explicit total-dominating-set constructions.
///
/// The two-row families live on height-2 strips with one or two edges
/// deleted and match the closed-form cardinality exactly; the four-row
/// families are minimum sets of the clean height-4 grid for `n ≡ 4
/// (mod 5)`. Use [`construction_graph`] for the graph each family is
/// stated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Construction {
    /// Height 2, the vertical edge at column `i` deleted: full columns
    /// `k ≡ 1 or 2 (mod 3)`, picked to dodge the cut. Needs `n ≡ 2 (mod 3)`.
    TwoRowVerticalCut { i: u32 },
    /// Height 2, bottom horizontal edge `i -> i+1` deleted, `i` not
    /// `1 (mod 3)`: a shifted full-column comb. Needs `n ≡ 2 (mod 3)`.
    TwoRowHorizontalCutComb { i: u32 },
    /// Height 2, bottom horizontal edge `i -> i+1` deleted, `i ≡ 1
    /// (mod 3)`: combs on both fragments bridged by the top pair above the
    /// cut. Needs `n ≡ 2 (mod 3)`.
    TwoRowHorizontalCutBridge { i: u32 },
    /// Height 2, vertical edges at columns `i < j` deleted: a comb chosen
    /// by the residues of `i` and `j`, padded at one end when necessary.
    /// Needs `n ≡ 1 (mod 3)`.
    TwoRowTwoVerticalCuts { i: u32, j: u32 },
    /// Height 4, `n ≡ 4 (mod 5)`: center pairs in rows 2-3 followed by
    /// flanking pairs on rows 1 and 4, every five columns.
    FourRowCenterFlank,
    /// Mirror image of `FourRowCenterFlank` (anchored at the right end of
    /// each period).
    FourRowCenterFlankMirror,
    /// Height 4, `n ≡ 4 (mod 5)`: bottom-pair / top-pair blocks
    /// alternating with period ten.
    FourRowAlternating,
    /// Mirror image of `FourRowAlternating` (rows swapped).
    FourRowAlternatingMirror,
}

impl Construction {
    pub const ALL_TWO_ROW_KINDS: [&'static str; 4] = [
        "vertical-cut",
        "horizontal-cut-comb",
        "horizontal-cut-bridge",
        "two-vertical-cuts",
    ];
}

/// Generates the vertex set of a named construction on `G(n, m)`.
pub fn construct(c: Construction, n: u32) -> Result<VertexSet> {
    match c {
        Construction::TwoRowVerticalCut { i } => {
            require(n % 3 == 2, "column count must be 2 (mod 3)")?;
            require(1 <= i && i <= n, "cut column out of range")?;
            let residue = if i % 3 == 2 { 1 } else { 2 };
            Ok(two_row_comb(n, residue))
        }
        Construction::TwoRowHorizontalCutComb { i } => {
            require(n % 3 == 2, "column count must be 2 (mod 3)")?;
            require(1 <= i && i < n, "cut column out of range")?;
            require(i % 3 != 1, "cut column must not be 1 (mod 3)")?;
            let residue = if i % 3 == 0 { 2 } else { 1 };
            Ok(two_row_comb(n, residue))
        }
        Construction::TwoRowHorizontalCutBridge { i } => {
            require(n % 3 == 2, "column count must be 2 (mod 3)")?;
            require(1 <= i && i < n, "cut column out of range")?;
            require(i % 3 == 1, "cut column must be 1 (mod 3)")?;
            let spec = GridSpec::new(n, 2)?;
            let mut set = VertexSet::empty(spec);
            for k in two_row_min_columns(i - 1) {
                set.insert(Vertex::new(k, 1));
                set.insert(Vertex::new(k, 2));
            }
            for k in two_row_min_columns(n - i - 1) {
                set.insert(Vertex::new(i + 1 + k, 1));
                set.insert(Vertex::new(i + 1 + k, 2));
            }
            set.insert(Vertex::new(i, 2));
            set.insert(Vertex::new(i + 1, 2));
            Ok(set)
        }
        Construction::TwoRowTwoVerticalCuts { i, j } => {
            require(n % 3 == 1, "column count must be 1 (mod 3)")?;
            require(1 <= i && i < j && j <= n, "cut columns out of order or range")?;
            let spec = GridSpec::new(n, 2)?;
            if i % 3 != 1 && j % 3 != 1 {
                Ok(two_row_comb(n, 1))
            } else if i % 3 != 2 && j % 3 != 2 {
                let mut set = two_row_comb(n, 2);
                set.insert(Vertex::new(n - 1, 1));
                set.insert(Vertex::new(n - 1, 2));
                Ok(set)
            } else {
                let mut set = VertexSet::empty(spec);
                for k in (1..=n).filter(|k| k % 3 == 0) {
                    set.insert(Vertex::new(k, 1));
                    set.insert(Vertex::new(k, 2));
                }
                set.insert(Vertex::new(2, 1));
                set.insert(Vertex::new(2, 2));
                Ok(set)
            }
        }
        Construction::FourRowCenterFlank => {
            require(n % 5 == 4, "column count must be 4 (mod 5)")?;
            let spec = GridSpec::new(n, 4)?;
            let mut set = VertexSet::empty(spec);
            for i in (1..=n.saturating_sub(3)).filter(|i| i % 5 == 1) {
                for v in [(i, 2), (i, 3), (i + 2, 1), (i + 3, 1), (i + 2, 4), (i + 3, 4)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            Ok(set)
        }
        Construction::FourRowCenterFlankMirror => {
            require(n % 5 == 4, "column count must be 4 (mod 5)")?;
            let spec = GridSpec::new(n, 4)?;
            let mut set = VertexSet::empty(spec);
            for i in (4..=n).filter(|i| i % 5 == 4) {
                for v in [(i, 2), (i, 3), (i - 3, 1), (i - 2, 1), (i - 3, 4), (i - 2, 4)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            Ok(set)
        }
        Construction::FourRowAlternating => {
            require(n % 5 == 4, "column count must be 4 (mod 5)")?;
            let spec = GridSpec::new(n, 4)?;
            let mut set = VertexSet::empty(spec);
            for i in (1..=n.saturating_sub(3)).filter(|i| i % 10 == 1) {
                for v in [(i, 1), (i, 2), (i + 3, 1), (i + 3, 2), (i + 1, 4), (i + 2, 4)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            for j in (1..=n.saturating_sub(3)).filter(|j| j % 10 == 6) {
                for v in [(j, 3), (j, 4), (j + 3, 3), (j + 3, 4), (j + 1, 1), (j + 2, 1)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            Ok(set)
        }
        Construction::FourRowAlternatingMirror => {
            require(n % 5 == 4, "column count must be 4 (mod 5)")?;
            let spec = GridSpec::new(n, 4)?;
            let mut set = VertexSet::empty(spec);
            for i in (1..=n.saturating_sub(3)).filter(|i| i % 10 == 1) {
                for v in [(i, 3), (i, 4), (i + 3, 3), (i + 3, 4), (i + 1, 1), (i + 2, 1)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            for j in (1..=n.saturating_sub(3)).filter(|j| j % 10 == 6) {
                for v in [(j, 1), (j, 2), (j + 3, 1), (j + 3, 2), (j + 1, 4), (j + 2, 4)] {
                    set.insert(Vertex::new(v.0, v.1));
                }
            }
            Ok(set)
        }
    }
}

/// The graph each construction is a total dominating set of: the clean
/// grid for the four-row families, the edge-deleted height-2 strip for the
/// two-row families.
pub fn construction_graph(c: Construction, n: u32) -> Result<GridGraph> {
    match c {
        Construction::TwoRowVerticalCut { i } => {
            let g = GridGraph::new(GridSpec::new(n, 2)?);
            g.remove_edges(&[Edge::vertical(i, 1)])
        }
        Construction::TwoRowHorizontalCutComb { i }
        | Construction::TwoRowHorizontalCutBridge { i } => {
            let g = GridGraph::new(GridSpec::new(n, 2)?);
            g.remove_edges(&[Edge::horizontal(i, 1)])
        }
        Construction::TwoRowTwoVerticalCuts { i, j } => {
            let g = GridGraph::new(GridSpec::new(n, 2)?);
            g.remove_edges(&[Edge::vertical(i, 1), Edge::vertical(j, 1)])
        }
        Construction::FourRowCenterFlank
        | Construction::FourRowCenterFlankMirror
        | Construction::FourRowAlternating
        | Construction::FourRowAlternatingMirror => Ok(GridGraph::new(GridSpec::new(n, 4)?)),
    }
}

/// Full columns `k ≡ residue (mod 3)` of the height-2 strip.
fn two_row_comb(n: u32, residue: u32) -> VertexSet {
    let spec = GridSpec::new(n, 2).expect("positive dimensions");
    let mut set = VertexSet::empty(spec);
    for k in (1..=n).filter(|k| k % 3 == residue) {
        set.insert(Vertex::new(k, 1));
        set.insert(Vertex::new(k, 2));
    }
    set
}

/// Columns of a minimum total dominating set of the height-2 strip of
/// length `r` (full columns at `k ≡ 2 (mod 3)`, plus the last column when
/// `r ≡ 1 (mod 3)`). Empty for `r = 0`.
fn two_row_min_columns(r: u32) -> Vec<u32> {
    let mut cols: Vec<u32> = (1..=r).filter(|k| k % 3 == 2).collect();
    if r % 3 == 1 {
        cols.push(r);
    }
    cols
}

/// The known edge set whose removal raises the total domination number of
/// `G(n, m)`, when one is on record; its size always equals the value or
/// bound of [`bondage_formula`]. `None` when no explicit set is covered.
pub fn witness_edges(n: u32, m: u32) -> Option<Vec<Edge>> {
    if n == 0 || m == 0 {
        return None;
    }
    if m > n {
        // State the set on the canonical orientation, then transpose back.
        return witness_edges(m, n)
            .map(|es| {
                let mut es: Vec<Edge> = es.into_iter().map(|e| e.transposed()).collect();
                es.sort();
                es
            });
    }
    let set = match m {
        2 => match n % 3 {
            0 => vec![Edge::horizontal(n - 1, 1)],
            2 if n >= 2 => vec![Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)],
            1 if n >= 4 => vec![
                Edge::horizontal(n - 2, 1),
                Edge::horizontal(n - 1, 1),
                Edge::horizontal(n - 1, 2),
            ],
            _ => return None,
        },
        3 => {
            if n >= 2 {
                vec![Edge::horizontal(n - 1, 2)]
            } else {
                return None;
            }
        }
        4 => match n {
            // Directly verified small strips where the general end-cut and
            // column-cut patterns fail to raise the value; each of these
            // sets was found by exhaustive search and is re-verified by
            // the witness tests.
            4 => vec![Edge::horizontal(1, 1), Edge::horizontal(2, 4)],
            5 => vec![
                Edge::horizontal(1, 1),
                Edge::horizontal(1, 2),
                Edge::horizontal(1, 3),
                Edge::vertical(1, 2),
            ],
            8 => vec![
                Edge::horizontal(1, 1),
                Edge::horizontal(1, 2),
                Edge::horizontal(1, 4),
                Edge::vertical(1, 2),
            ],
            _ => match n % 5 {
                1 if n >= 11 => vec![Edge::vertical(n, 2)],
                1 if n == 6 => vec![Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)],
                4 => vec![Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)],
                2 if n >= 7 => vec![
                    Edge::horizontal(n - 1, 1),
                    Edge::horizontal(n - 1, 2),
                    Edge::vertical(n, 2),
                ],
                0 | 3 if n >= 10 => vec![
                    Edge::horizontal(n - 5, 1),
                    Edge::horizontal(n - 5, 2),
                    Edge::horizontal(n - 5, 3),
                    Edge::horizontal(n - 5, 4),
                ],
                _ => return None,
            },
        },
        _ => return None,
    };
    let mut set = set;
    set.sort();
    Some(set)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidInput(msg.into()))
    }
}
