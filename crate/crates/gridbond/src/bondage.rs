//! Exhaustive search for total bondage numbers.
//!
//! The total bondage number of a graph is the minimum number of edges whose
//! removal strictly increases the total domination number; removals that
//! leave an isolated vertex are never considered, and when no valid removal
//! of any size exists the value is infinite.

use crate::grid::{symmetries, Edge, GridGraph, GridSpec, Vertex};
use crate::set::VertexSet;
use crate::solver::{self, for_each_combination, GammaResult};
use crate::Result;
use std::ops::ControlFlow;
use std::time::{Duration, Instant};

/// Counters from one bondage search.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidate subsets drawn from the enumerator (valid, and canonical
    /// when symmetry reduction is on).
    pub subsets_examined: u64,
    /// Candidates that survived the witness pre-filter and required a
    /// solver call.
    pub dp_calls: u64,
    pub elapsed: Duration,
}

/// Outcome of a bondage search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BondageOutcome {
    /// `value` edges suffice and no smaller valid subset does; `witness`
    /// is the lexicographically least witness of that size.
    Exact { value: u32, witness: Vec<Edge> },
    /// No valid edge subset of any size can raise the total domination
    /// number; reported only when the search space is provably exhausted.
    Infinity,
    /// All valid subsets up to `searched_k` fail to raise the value.
    LowerBoundOnly { searched_k: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BondageResult {
    pub outcome: BondageOutcome,
    pub stats: SearchStats,
}

impl BondageResult {
    pub fn exact_value(&self) -> Option<u32> {
        match &self.outcome {
            BondageOutcome::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&[Edge]> {
        match &self.outcome {
            BondageOutcome::Exact { witness, .. } => Some(witness),
            _ => None,
        }
    }
}

/// True iff removing `edges` leaves no isolated vertex and strictly raises
/// the total domination number. Propagates `EdgeNotPresent` for edges
/// missing from `g`.
pub fn verify_witness(g: &GridGraph, edges: &[Edge]) -> Result<bool> {
    let removed = g.remove_edges(edges)?;
    if removed.has_isolated_vertex() {
        return Ok(false);
    }
    let base = match solver::gamma_t_dp_value(g)? {
        GammaResult::Undefined => return Ok(false),
        GammaResult::Defined { value, .. } => value,
    };
    let after = solver::gamma_t_dp_value(&removed)?
        .value()
        .expect("no isolated vertices after removal");
    Ok(after > base)
}

/// Exact total bondage search on a clean grid by k-increasing enumeration.
///
/// Candidates are enumerated in canonical lexicographic edge order, so the
/// first success at the smallest k is the lexicographically least witness;
/// with `use_symmetry` only orbit-least representatives are tested, which
/// keeps the reported witness identical.
///
/// Panics if `g` is not clean or `k_max == 0`; errors only when the grid
/// exceeds the solver size cap.
pub fn total_bondage(g: &GridGraph, k_max: u32, use_symmetry: bool) -> Result<BondageResult> {
    assert!(g.is_clean(), "bondage search requires a clean grid");
    assert!(k_max >= 1, "k_max must be at least 1");
    let start = Instant::now();
    let mut stats = SearchStats::default();

    let (base_value, base_witness) = match solver::gamma_t_dp(g)? {
        // No total dominating set to disturb (e.g. a single vertex).
        GammaResult::Undefined => {
            stats.elapsed = start.elapsed();
            return Ok(BondageResult { outcome: BondageOutcome::Infinity, stats });
        }
        GammaResult::Defined { value, witness } => (value, witness.expect("dp returns a witness")),
    };

    let edges = g.present_edges();
    let enumerator = SubsetEnumerator::new(g, use_symmetry);

    for k in 1..=k_max {
        let mut any_valid = false;
        let mut found: Option<Vec<Edge>> = None;
        enumerator.for_each(k as usize, |picks| {
            any_valid = true;
            stats.subsets_examined += 1;
            let candidate: Vec<Edge> = picks.iter().map(|&p| edges[p]).collect();
            if witness_survives(g, &base_witness, &candidate) {
                return ControlFlow::Continue(());
            }
            stats.dp_calls += 1;
            let removed = g.remove_edges(&candidate).expect("enumerator yields present edges");
            let after = solver::gamma_t_dp_value(&removed)
                .expect("within solver cap")
                .value()
                .expect("enumerator keeps minimum degree >= 1");
            if after > base_value {
                found = Some(candidate);
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        if let Some(witness) = found {
            stats.elapsed = start.elapsed();
            return Ok(BondageResult { outcome: BondageOutcome::Exact { value: k, witness }, stats });
        }
        if !any_valid {
            // Supersets of an isolating subset still isolate, so an empty
            // level k proves every larger level empty as well.
            stats.elapsed = start.elapsed();
            return Ok(BondageResult { outcome: BondageOutcome::Infinity, stats });
        }
    }
    stats.elapsed = start.elapsed();
    Ok(BondageResult { outcome: BondageOutcome::LowerBoundOnly { searched_k: k_max }, stats })
}

/// One representative per symmetry orbit of valid k-edge removals of the
/// clean grid, in canonical lexicographic order. Every yielded subset
/// keeps minimum degree at least 1; the representative is the least member
/// of its orbit, so expanding all yielded orbits recovers every valid
/// subset.
pub fn canonical_subsets(spec: GridSpec, k: u32) -> Vec<Vec<Edge>> {
    let g = GridGraph::new(spec);
    let edges = g.present_edges();
    let enumerator = SubsetEnumerator::new(&g, true);
    let mut out = Vec::new();
    enumerator.for_each(k as usize, |picks| {
        out.push(picks.iter().map(|&p| edges[p]).collect());
        ControlFlow::Continue(())
    });
    out
}

/// All valid k-edge removals without symmetry reduction, in canonical
/// order.
pub fn valid_subsets(spec: GridSpec, k: u32) -> Vec<Vec<Edge>> {
    let g = GridGraph::new(spec);
    let edges = g.present_edges();
    let enumerator = SubsetEnumerator::new(&g, false);
    let mut out = Vec::new();
    enumerator.for_each(k as usize, |picks| {
        out.push(picks.iter().map(|&p| edges[p]).collect());
        ControlFlow::Continue(())
    });
    out
}

/// Cheap pre-filter: if the cached minimum total dominating set is still a
/// total dominating set after removing `candidate`, the removal cannot
/// raise the value. Only vertices incident to a removed edge can lose
/// their last dominator, so only endpoints are checked.
fn witness_survives(g: &GridGraph, witness: &VertexSet, candidate: &[Edge]) -> bool {
    for &e in candidate {
        let (a, b) = e.endpoints();
        for v in [a, b] {
            let mut dominators = g.neighbor_mask(v).intersection(witness);
            for &other in candidate.iter() {
                if other.is_incident_to(v) {
                    let (x, y) = other.endpoints();
                    dominators.remove(if x == v { y } else { x });
                }
            }
            if dominators.is_empty() {
                return false;
            }
        }
    }
    true
}

/// Shared enumeration machinery: k-subsets of the present edges, filtered
/// to keep minimum degree at least 1, optionally reduced to orbit-least
/// representatives.
struct SubsetEnumerator {
    edge_count: usize,
    degrees: Vec<u8>,
    endpoint_cells: Vec<(usize, usize)>,
    // One edge-index permutation per non-identity symmetry.
    permutations: Vec<Vec<u16>>,
}

impl SubsetEnumerator {
    fn new(g: &GridGraph, use_symmetry: bool) -> Self {
        let spec = g.spec();
        let edges = g.present_edges();
        let index_of = |e: Edge| -> u16 {
            edges.binary_search(&e).expect("automorphism image of a present edge") as u16
        };

        let mut degrees = vec![0u8; spec.cell_count()];
        let mut endpoint_cells = Vec::with_capacity(edges.len());
        for &e in &edges {
            let (a, b) = e.endpoints();
            let (ia, ib) = (cell(spec, a), cell(spec, b));
            degrees[ia] += 1;
            degrees[ib] += 1;
            endpoint_cells.push((ia, ib));
        }

        let mut permutations = Vec::new();
        if use_symmetry && g.is_clean() {
            for map in symmetries(spec) {
                if map.is_identity() {
                    continue;
                }
                permutations.push(
                    edges
                        .iter()
                        .map(|&e| index_of(map.apply_edge(spec, e).expect("valid map")))
                        .collect(),
                );
            }
        }
        Self { edge_count: edges.len(), degrees, endpoint_cells, permutations }
    }

    fn for_each(&self, k: usize, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
        let mut loss = vec![0u8; self.degrees.len()];
        let mut mapped = vec![0u16; k];
        for_each_combination(self.edge_count, k, |picks| {
            // Degree check: all endpoints keep at least one edge.
            for &p in picks {
                let (a, b) = self.endpoint_cells[p];
                loss[a] += 1;
                loss[b] += 1;
            }
            let isolates = picks.iter().any(|&p| {
                let (a, b) = self.endpoint_cells[p];
                self.degrees[a] == loss[a] || self.degrees[b] == loss[b]
            });
            for &p in picks {
                let (a, b) = self.endpoint_cells[p];
                loss[a] -= 1;
                loss[b] -= 1;
            }
            if isolates {
                return ControlFlow::Continue(());
            }
            if !self.is_orbit_least(picks, &mut mapped) {
                return ControlFlow::Continue(());
            }
            f(picks)
        });
    }

    /// True when no symmetry sends the subset to a lexicographically
    /// smaller one.
    fn is_orbit_least(&self, picks: &[usize], mapped: &mut [u16]) -> bool {
        'maps: for perm in &self.permutations {
            for (slot, &p) in mapped.iter_mut().zip(picks) {
                *slot = perm[p];
            }
            mapped.sort_unstable();
            for (&m, &p) in mapped.iter().zip(picks) {
                match (m as usize).cmp(&p) {
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Greater => continue 'maps,
                    std::cmp::Ordering::Equal => {}
                }
            }
        }
        true
    }
}

fn cell(spec: GridSpec, v: Vertex) -> usize {
    (v.i as usize - 1) * spec.m() as usize + (v.j as usize - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::GridSpec;
    use crate::Error;
    use std::collections::BTreeSet;

    fn grid(n: u32, m: u32) -> GridGraph {
        GridGraph::new(GridSpec::new(n, m).unwrap())
    }

    #[test]
    fn single_edge_witness_on_the_two_row_strip() {
        // Cutting the penultimate bottom edge of the 6x2 strip raises the
        // value; on the 5x2 strip no single edge can.
        assert!(verify_witness(&grid(6, 2), &[Edge::horizontal(5, 1)]).unwrap());
        assert!(!verify_witness(&grid(5, 2), &[Edge::horizontal(4, 1)]).unwrap());
    }

    #[test]
    fn verify_witness_matches_direct_recomputation() {
        for n in [3, 5, 6] {
            let g = grid(n, 3);
            let es = [Edge::vertical(n, 1), Edge::vertical(n, 2)];
            let direct = {
                let h = g.remove_edges(&es).unwrap();
                !h.has_isolated_vertex()
                    && solver::gamma_t_dp_value(&h).unwrap().value()
                        > solver::gamma_t_dp_value(&g).unwrap().value()
            };
            assert_eq!(verify_witness(&g, &es).unwrap(), direct, "n={n}");
        }
    }

    #[test]
    fn verify_witness_propagates_missing_edges() {
        let g = grid(3, 2);
        let absent = Edge::horizontal(3, 1);
        assert_eq!(verify_witness(&g, &[absent]), Err(Error::EdgeNotPresent(absent)));
    }

    #[test]
    fn strip_bondage_values() {
        let r = total_bondage(&grid(4, 2), 3, true).unwrap();
        assert_eq!(r.exact_value(), Some(3));
        assert_eq!(r.witness().unwrap().len(), 3);

        let r = total_bondage(&grid(6, 2), 3, true).unwrap();
        assert_eq!(r.exact_value(), Some(1));

        let r = total_bondage(&grid(5, 2), 3, true).unwrap();
        assert_eq!(r.exact_value(), Some(2));
    }

    #[test]
    fn single_edge_grid_is_infinite() {
        let r = total_bondage(&grid(1, 2), 3, true).unwrap();
        assert_eq!(r.outcome, BondageOutcome::Infinity);
        // A lone vertex has no total domination number at all.
        let r = total_bondage(&grid(1, 1), 2, false).unwrap();
        assert_eq!(r.outcome, BondageOutcome::Infinity);
        // Three-vertex path: every removal isolates an endpoint.
        let r = total_bondage(&grid(3, 1), 4, false).unwrap();
        assert_eq!(r.outcome, BondageOutcome::Infinity);
    }

    #[test]
    fn four_by_four_needs_two_edges() {
        let r = total_bondage(&grid(4, 4), 2, true).unwrap();
        assert_eq!(r.exact_value(), Some(2));
        assert!(verify_witness(&grid(4, 4), r.witness().unwrap()).unwrap());
    }

    #[test]
    fn symmetry_reduction_is_transparent() {
        for (n, m) in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3), (6, 2), (4, 3)] {
            let g = grid(n, m);
            let with = total_bondage(&g, 2, true).unwrap();
            let without = total_bondage(&g, 2, false).unwrap();
            assert_eq!(with.outcome, without.outcome, "{n}x{m}");
        }
    }

    #[test]
    fn reported_witness_verifies_and_smaller_k_is_exhausted() {
        let g = grid(5, 2);
        let r = total_bondage(&g, 3, true).unwrap();
        let witness = r.witness().unwrap();
        assert!(verify_witness(&g, witness).unwrap());
        // Full re-search without symmetry at k-1 finds nothing.
        for subset in valid_subsets(g.spec(), 1) {
            assert!(!verify_witness(&g, &subset).unwrap());
        }
    }

    #[test]
    fn canonical_subsets_cover_all_orbits() {
        let spec = GridSpec::new(3, 2).unwrap();
        // Orbits of single valid edges, brute-forced.
        let g = GridGraph::new(spec);
        let mut orbits: BTreeSet<BTreeSet<Edge>> = BTreeSet::new();
        for subset in valid_subsets(spec, 1) {
            let orbit: BTreeSet<Edge> = symmetries(spec)
                .iter()
                .map(|map| map.apply_edge(spec, subset[0]).unwrap())
                .collect();
            orbits.insert(orbit);
        }
        let reps = canonical_subsets(spec, 1);
        assert_eq!(reps.len(), orbits.len());
        assert_eq!(reps.len(), 3);

        // Representatives expand back to every valid subset.
        let mut expanded: BTreeSet<Vec<Edge>> = BTreeSet::new();
        for rep in &reps {
            for map in symmetries(spec) {
                let mut image: Vec<Edge> =
                    rep.iter().map(|&e| map.apply_edge(spec, e).unwrap()).collect();
                image.sort();
                expanded.insert(image);
            }
        }
        let all: BTreeSet<Vec<Edge>> = valid_subsets(spec, 1).into_iter().collect();
        assert_eq!(expanded, all);
        let _ = g;
    }

    #[test]
    fn square_grid_has_one_edge_class() {
        assert_eq!(canonical_subsets(GridSpec::new(2, 2).unwrap(), 1).len(), 1);
    }

    #[test]
    fn unreduced_subset_count_matches_formula() {
        // All single edges are valid on this strip (minimum degree 2).
        let spec = GridSpec::new(4, 3).unwrap();
        assert_eq!(valid_subsets(spec, 1).len(), spec.edge_count());
        // On the 1x2 path the only edge isolates both ends.
        assert!(valid_subsets(GridSpec::new(1, 2).unwrap(), 1).is_empty());
    }

    #[test]
    fn search_is_monotone_in_k() {
        let g = grid(5, 2);
        let r = total_bondage(&g, 2, false).unwrap();
        assert_eq!(r.exact_value(), Some(2));
        // Level 1 was fully exhausted before any level-2 candidate.
        let level1 = valid_subsets(g.spec(), 1).len() as u64;
        assert!(r.stats.subsets_examined > level1);
        assert!(r.stats.dp_calls <= r.stats.subsets_examined);
    }
}
