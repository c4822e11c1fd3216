//! Exact domination solvers: brute-force oracles, a column-profile dynamic
//! program, minimum-set enumeration, and the prefix rewrite that projects a
//! total dominating set onto a shorter grid.

mod dp;

pub use dp::{gamma_t_dp, gamma_t_dp_value, DP_MAX_ROWS};

use crate::grid::{GridGraph, Vertex};
use crate::set::VertexSet;
use crate::{Error, Result};
use std::ops::ControlFlow;

/// Default cap on live vertices for the brute-force solvers; each call
/// stays around a second below this size.
pub const BRUTE_FORCE_VERTEX_CAP: usize = 24;

/// Default cap on live vertices for minimum-set enumeration.
pub const ENUMERATION_VERTEX_CAP: usize = 20;

/// Result of a domination-number computation.
///
/// `Undefined` is a first-class value (isolated vertex, or an empty graph),
/// not an error: the bondage search consumes it in bulk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GammaResult {
    Undefined,
    Defined { value: u32, witness: Option<VertexSet> },
}

impl GammaResult {
    pub fn value(&self) -> Option<u32> {
        match self {
            GammaResult::Undefined => None,
            GammaResult::Defined { value, .. } => Some(*value),
        }
    }

    pub fn witness(&self) -> Option<&VertexSet> {
        match self {
            GammaResult::Undefined => None,
            GammaResult::Defined { witness, .. } => witness.as_ref(),
        }
    }

    pub fn is_undefined(&self) -> bool {
        matches!(self, GammaResult::Undefined)
    }
}

/// True iff every live vertex outside `d` has a neighbor in `d`.
/// Panics if `d` contains dead cells.
pub fn is_dominating(g: &GridGraph, d: &VertexSet) -> bool {
    assert!(
        d.is_subset_of(g.live_vertices()),
        "candidate set contains deleted or out-of-range vertices"
    );
    g.live_vertices()
        .iter()
        .all(|v| d.contains(v) || g.neighbor_mask(v).intersects(d))
}

/// True iff every live vertex, including members of `d`, has a neighbor
/// in `d`. Panics if `d` contains dead cells.
pub fn is_total_dominating(g: &GridGraph, d: &VertexSet) -> bool {
    assert!(
        d.is_subset_of(g.live_vertices()),
        "candidate set contains deleted or out-of-range vertices"
    );
    g.live_vertices().iter().all(|v| g.neighbor_mask(v).intersects(d))
}

/// Exact domination number by exhaustive search in increasing cardinality.
/// Undefined only for the empty graph.
pub fn gamma_bruteforce(g: &GridGraph) -> Result<GammaResult> {
    gamma_bruteforce_capped(g, BRUTE_FORCE_VERTEX_CAP)
}

pub fn gamma_bruteforce_capped(g: &GridGraph, cap: usize) -> Result<GammaResult> {
    check_cap(g, cap)?;
    if g.live_count() == 0 {
        return Ok(GammaResult::Undefined);
    }
    let found = smallest_set(g, &VertexSet::empty(g.spec()), 1, is_dominating);
    // The set of all live vertices dominates, so the search always lands.
    let (value, witness) = found.expect("full vertex set dominates");
    Ok(GammaResult::Defined { value, witness: Some(witness) })
}

/// Exact total domination number over sets containing `required`, by
/// exhaustive search in increasing cardinality. Undefined when the graph
/// is empty or has an isolated vertex.
pub fn gamma_t_bruteforce(g: &GridGraph, required: &VertexSet) -> Result<GammaResult> {
    gamma_t_bruteforce_capped(g, required, BRUTE_FORCE_VERTEX_CAP)
}

pub fn gamma_t_bruteforce_capped(
    g: &GridGraph,
    required: &VertexSet,
    cap: usize,
) -> Result<GammaResult> {
    check_cap(g, cap)?;
    if !required.is_subset_of(g.live_vertices()) {
        return Err(Error::InvalidInput(
            "required vertices must be live vertices of the graph".into(),
        ));
    }
    if g.live_count() == 0 || g.has_isolated_vertex() {
        return Ok(GammaResult::Undefined);
    }
    // A total dominating set has at least two vertices.
    let lower = required.len().max(2) as u32;
    match smallest_set(g, required, lower, is_total_dominating) {
        Some((value, witness)) => Ok(GammaResult::Defined { value, witness: Some(witness) }),
        None => Ok(GammaResult::Undefined),
    }
}

/// Searches cardinalities `lower..=live` for the first size admitting a set
/// that contains `required` and satisfies `accept`; free cells are tried in
/// ascending vertex order, so the witness is deterministic.
fn smallest_set(
    g: &GridGraph,
    required: &VertexSet,
    lower: u32,
    accept: impl Fn(&GridGraph, &VertexSet) -> bool,
) -> Option<(u32, VertexSet)> {
    let free: Vec<Vertex> = g.live_vertices().difference(required).iter().collect();
    for size in lower..=g.live_count() as u32 {
        let extra = size as usize - required.len();
        if extra > free.len() {
            break;
        }
        let mut hit = None;
        for_each_combination(free.len(), extra, |picks| {
            let mut d = required.clone();
            for &p in picks {
                d.insert(free[p]);
            }
            if accept(g, &d) {
                hit = Some(d);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(witness) = hit {
            return Some((size, witness));
        }
    }
    None
}

/// All minimum total dominating sets, up to `limit`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinTdsEnumeration {
    pub gamma_t: u32,
    pub sets: Vec<VertexSet>,
    pub truncated: bool,
}

/// Enumerates every total dominating set of minimum cardinality, in
/// ascending set order, truncating after `limit` sets.
pub fn enumerate_min_tds(g: &GridGraph, limit: usize) -> Result<MinTdsEnumeration> {
    enumerate_min_tds_capped(g, limit, ENUMERATION_VERTEX_CAP)
}

pub fn enumerate_min_tds_capped(
    g: &GridGraph,
    limit: usize,
    cap: usize,
) -> Result<MinTdsEnumeration> {
    check_cap(g, cap)?;
    let gamma_t = match gamma_t_bruteforce_capped(g, &VertexSet::empty(g.spec()), cap)? {
        GammaResult::Undefined => {
            return Ok(MinTdsEnumeration { gamma_t: 0, sets: Vec::new(), truncated: false })
        }
        GammaResult::Defined { value, .. } => value,
    };
    let live: Vec<Vertex> = g.live_vertices().iter().collect();
    let mut sets = Vec::new();
    let mut truncated = false;
    for_each_combination(live.len(), gamma_t as usize, |picks| {
        let d = VertexSet::from_vertices(g.spec(), picks.iter().map(|&p| live[p]));
        if is_total_dominating(g, &d) {
            if sets.len() == limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            sets.push(d);
        }
        ControlFlow::Continue(())
    });
    Ok(MinTdsEnumeration { gamma_t, sets, truncated })
}

/// Projects a total dominating set of the full grid onto the first `i`
/// columns: restrict to columns `1..=i+1`, drop column `i+1`, and re-cover
/// every column-`i` vertex that was dominated exclusively from the dropped
/// column by adding its left neighbor.
///
/// Each re-covered row consumes a distinct dropped vertex (its horizontal
/// neighbor), so the result never exceeds `|d ∩ columns(1..=i+1)|`.
/// Requires a clean grid, a total dominating set `d`, and `2 <= i <= n-1`.
pub fn push_down(g: &GridGraph, d: &VertexSet, i: u32) -> Result<VertexSet> {
    if !g.is_clean() {
        return Err(Error::InvalidInput("push_down requires a clean grid".into()));
    }
    let n = g.spec().n();
    if i < 2 || i > n.saturating_sub(1) {
        return Err(Error::InvalidInput(format!(
            "column {i} out of range 2..={} for push_down",
            n.saturating_sub(1)
        )));
    }
    if !d.is_subset_of(g.live_vertices()) || !is_total_dominating(g, d) {
        return Err(Error::InvalidInput(
            "push_down requires a total dominating set of the grid".into(),
        ));
    }

    let spec = g.spec();
    let mut prefix = VertexSet::empty(spec);
    for v in d.iter().filter(|v| v.i <= i + 1) {
        prefix.insert(v);
    }
    let next_column = g.column(i + 1)?;

    let mut result = prefix.difference(&next_column);
    for j in 1..=spec.m() {
        let v = Vertex::new(i, j);
        // All dominators of a column-i vertex live in columns i-1..=i+1,
        // so `prefix` already holds every one of them.
        let dominators = g.neighbor_mask(v).intersection(&prefix);
        if !dominators.is_empty() && dominators.is_subset_of(&next_column) {
            result.insert(Vertex::new(i - 1, j));
        }
    }
    Ok(result)
}

fn check_cap(g: &GridGraph, cap: usize) -> Result<()> {
    if g.live_count() > cap {
        return Err(Error::TooLarge(format!(
            "{} live vertices exceed the cap of {cap}",
            g.live_count()
        )));
    }
    Ok(())
}

/// Visits all `k`-subsets of `0..pool` in lexicographic order, stopping
/// early when the callback breaks.
pub(crate) fn for_each_combination(
    pool: usize,
    k: usize,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) {
    if k > pool {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx).is_break() {
            return;
        }
        // Advance to the next combination.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != pos + pool - k {
                idx[pos] += 1;
                for later in pos + 1..k {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
        if k == 0 {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{Edge, GridSpec};

    fn grid(n: u32, m: u32) -> GridGraph {
        GridGraph::new(GridSpec::new(n, m).unwrap())
    }

    fn vset(g: &GridGraph, cells: &[(u32, u32)]) -> VertexSet {
        VertexSet::from_vertices(g.spec(), cells.iter().map(|&(i, j)| Vertex::new(i, j)))
    }

    #[test]
    fn combination_visitor_counts() {
        let mut count = 0;
        for_each_combination(5, 3, |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 10);

        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );

        // k = 0 visits the empty subset once.
        let mut count = 0;
        for_each_combination(3, 0, |c| {
            assert!(c.is_empty());
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 1);

        // k > pool visits nothing.
        for_each_combination(2, 3, |_| panic!("unexpected"));
    }

    #[test]
    fn dominating_predicates_on_the_square() {
        let g = grid(2, 2);
        let diagonal = vset(&g, &[(1, 1), (2, 2)]);
        assert!(is_dominating(&g, &diagonal));
        // No member of the diagonal has a neighbor inside it.
        assert!(!is_total_dominating(&g, &diagonal));

        let single = vset(&g, &[(1, 1)]);
        assert!(!is_dominating(&g, &single));

        let pair = vset(&g, &[(1, 1), (2, 1)]);
        assert!(is_total_dominating(&g, &pair));

        let all = g.live_vertices().clone();
        assert!(is_dominating(&g, &all));
    }

    #[test]
    fn gamma_bruteforce_small_values() {
        assert_eq!(gamma_bruteforce(&grid(2, 2)).unwrap().value(), Some(2));
        assert_eq!(gamma_bruteforce(&grid(3, 3)).unwrap().value(), Some(3));
        // The middle of a three-vertex path dominates alone.
        let p3 = grid(1, 3);
        let r = gamma_bruteforce(&p3).unwrap();
        assert_eq!(r.value(), Some(1));
        assert_eq!(r.witness().unwrap().to_vec(), vec![Vertex::new(1, 2)]);
        // A lone vertex must pick itself.
        assert_eq!(gamma_bruteforce(&grid(1, 1)).unwrap().value(), Some(1));
    }

    #[test]
    fn gamma_witnesses_are_valid() {
        for (n, m) in [(2, 2), (3, 3), (4, 2), (1, 4)] {
            let g = grid(n, m);
            let r = gamma_bruteforce(&g).unwrap();
            let w = r.witness().unwrap();
            assert!(is_dominating(&g, w));
            assert_eq!(w.len() as u32, r.value().unwrap());
        }
    }

    #[test]
    fn gamma_t_bruteforce_small_values() {
        let none = VertexSet::empty(grid(4, 3).spec());
        assert_eq!(gamma_t_bruteforce(&grid(4, 3), &none).unwrap().value(), Some(4));

        let p2 = grid(1, 2);
        let r = gamma_t_bruteforce(&p2, &VertexSet::empty(p2.spec())).unwrap();
        assert_eq!(r.value(), Some(2));

        // Isolated vertex: undefined.
        let g = grid(1, 1);
        assert!(gamma_t_bruteforce(&g, &VertexSet::empty(g.spec())).unwrap().is_undefined());
    }

    #[test]
    fn forcing_a_corner_raises_the_strip_value() {
        let g = grid(5, 3);
        let forced = vset(&g, &[(5, 1)]);
        assert_eq!(gamma_t_bruteforce(&g, &forced).unwrap().value(), Some(6));
        let free = VertexSet::empty(g.spec());
        assert_eq!(gamma_t_bruteforce(&g, &free).unwrap().value(), Some(5));
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let g = grid(5, 5);
        assert!(matches!(
            gamma_t_bruteforce(&g, &VertexSet::empty(g.spec())),
            Err(Error::TooLarge(_))
        ));
        // A raised cap admits the same instance.
        assert!(gamma_t_bruteforce_capped(&g, &VertexSet::empty(g.spec()), 25).is_ok());
    }

    #[test]
    fn required_must_be_live() {
        let g = grid(3, 2).delete_vertices(&[Vertex::new(3, 1)]).unwrap();
        let mut required = VertexSet::empty(g.spec());
        required.insert(Vertex::new(3, 1));
        assert!(matches!(
            gamma_t_bruteforce(&g, &required),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn enumerate_min_tds_of_square_and_path() {
        let g = grid(2, 2);
        let e = enumerate_min_tds(&g, 100).unwrap();
        assert_eq!(e.gamma_t, 2);
        assert!(!e.truncated);
        // Exactly the four adjacent pairs.
        let expect: Vec<VertexSet> = vec![
            vset(&g, &[(1, 1), (1, 2)]),
            vset(&g, &[(1, 1), (2, 1)]),
            vset(&g, &[(1, 2), (2, 2)]),
            vset(&g, &[(2, 1), (2, 2)]),
        ];
        assert_eq!(e.sets.len(), 4);
        for s in &expect {
            assert!(e.sets.contains(s));
        }

        let p4 = grid(1, 4);
        let e = enumerate_min_tds(&p4, 100).unwrap();
        assert_eq!(e.sets, vec![vset(&p4, &[(1, 2), (1, 3)])]);

        // Truncation flag.
        let e = enumerate_min_tds(&g, 2).unwrap();
        assert_eq!(e.sets.len(), 2);
        assert!(e.truncated);
    }

    #[test]
    fn push_down_identity_when_next_column_unused() {
        let g = grid(4, 2);
        // Total dominating set leaving column 3 empty.
        let d = vset(&g, &[(1, 1), (1, 2), (4, 1), (4, 2), (2, 1), (3, 1)]);
        assert!(is_total_dominating(&g, &d));
        let d2 = push_down(&g, &d, 2).unwrap();
        let expect: VertexSet = vset(&g, &[(1, 1), (1, 2), (2, 1)]);
        assert_eq!(d2, expect);
    }

    #[test]
    fn push_down_center_block() {
        let g = grid(4, 2);
        let d = vset(&g, &[(2, 1), (2, 2), (3, 1), (3, 2)]);
        assert!(is_total_dominating(&g, &d));
        let d2 = push_down(&g, &d, 2).unwrap();
        assert_eq!(d2, vset(&g, &[(2, 1), (2, 2)]));
        assert!(d2.len() <= 4);
        // The projection totally dominates the two-column prefix.
        let prefix = g
            .delete_vertices(&[Vertex::new(3, 1), Vertex::new(3, 2), Vertex::new(4, 1), Vertex::new(4, 2)])
            .unwrap();
        assert!(is_total_dominating(&prefix, &d2));
    }

    #[test]
    fn push_down_recovers_vertices_outside_the_set() {
        // Column 3 holds no member and is dominated entirely from column
        // 4, so dropping column 4 must re-cover it from column 2.
        let g = grid(5, 3);
        let d = vset(&g, &[(1, 2), (2, 2), (4, 1), (4, 2), (4, 3)]);
        assert!(is_total_dominating(&g, &d));
        let d2 = push_down(&g, &d, 3).unwrap();
        assert_eq!(d2, vset(&g, &[(1, 2), (2, 1), (2, 2), (2, 3)]));
        assert!(d2.len() <= 5);
        let prefix = g
            .delete_vertices(&(4..=5u32).flat_map(|i| (1..=3).map(move |j| Vertex::new(i, j))).collect::<Vec<_>>())
            .unwrap();
        assert!(is_total_dominating(&prefix, &d2));
    }

    #[test]
    fn push_down_rejects_bad_inputs() {
        let g = grid(4, 2);
        let d = vset(&g, &[(2, 1), (2, 2), (3, 1), (3, 2)]);
        assert!(push_down(&g, &d, 1).is_err());
        assert!(push_down(&g, &d, 4).is_err());
        let not_tds = vset(&g, &[(1, 1)]);
        assert!(push_down(&g, &not_tds, 2).is_err());
        let dirty = g.remove_edges(&[Edge::horizontal(1, 1)]).unwrap();
        assert!(push_down(&dirty, &d, 2).is_err());
    }
}
