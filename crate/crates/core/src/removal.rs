//! Surgery on the constructed decompositions: deleting a star or a tadpole
//! `T_{m,1}` from `K_n` while keeping at most `⌊(n+1)/2⌋` paths, and the
//! general operation of trimming edges off path ends.
//!
//! The removed subgraph is placed at fixed labels (star centered at `n`,
//! tadpole cycle on `1..=m`); [`Surgery::relabel`] moves it anywhere else.

use std::collections::BTreeSet;

use crate::constructions::construct;
use crate::enumeration::{enumerate_decompositions, EnumerationConfig};
use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, gallai_bound, verify_decomposition, Edge, LabeledGraph, Path,
    PathDecomposition, Permutation, Vertex,
};
use crate::workbench::Workbench;

/// Largest `n` for which [`path_ends_feasible`] searches by default.
pub const DEFAULT_SEARCH_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RemovalKind {
    Star,
    Tadpole,
    FreeForm,
}

impl RemovalKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RemovalKind::Star => "star",
            RemovalKind::Tadpole => "tadpole",
            RemovalKind::FreeForm => "free-form",
        }
    }
}

/// The exact subgraph deleted from `K_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalRecord {
    pub kind: RemovalKind,
    pub removed_edges: BTreeSet<Edge>,
    /// Star center.
    pub center: Option<Vertex>,
    /// Tadpole cycle length `m`.
    pub cycle_length: Option<usize>,
    /// Tadpole cycle in traversal order.
    pub cycle: Vec<Vertex>,
    /// Tadpole pendant edge.
    pub tail: Option<Edge>,
}

impl RemovalRecord {
    fn star(center: Vertex, removed_edges: BTreeSet<Edge>) -> RemovalRecord {
        RemovalRecord {
            kind: RemovalKind::Star,
            removed_edges,
            center: Some(center),
            cycle_length: None,
            cycle: Vec::new(),
            tail: None,
        }
    }

    pub fn relabel(&self, perm: &Permutation) -> RemovalRecord {
        RemovalRecord {
            kind: self.kind,
            removed_edges: self
                .removed_edges
                .iter()
                .map(|&e| perm.apply_edge(e))
                .collect(),
            center: self.center.map(|c| perm.apply(c)),
            cycle_length: self.cycle_length,
            cycle: self.cycle.iter().map(|&v| perm.apply(v)).collect(),
            tail: self.tail.map(|e| perm.apply_edge(e)),
        }
    }
}

/// Two consecutive edges of one path meeting at `center`, and the `base`
/// joining their outer endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Fork {
    pub center: Vertex,
    pub arms: [Edge; 2],
    pub base: Edge,
}

impl Fork {
    /// The fork `left – center – right`.
    pub fn new(left: Vertex, center: Vertex, right: Vertex) -> Fork {
        Fork {
            center,
            arms: [Edge::new(left, center), Edge::new(center, right)],
            base: Edge::new(left, right),
        }
    }
}

/// Every fork centered at `v`, in path order. A vertex that is interior to a
/// path is the center of exactly one fork on it.
pub fn forks_at(d: &PathDecomposition, v: Vertex) -> Vec<Fork> {
    d.paths()
        .iter()
        .filter_map(|p| {
            let s = p.vertices();
            let i = s.iter().position(|&x| x == v)?;
            (i > 0 && i + 1 < s.len()).then(|| Fork::new(s[i - 1], v, s[i + 1]))
        })
        .collect()
}

/// Result of a star or tadpole removal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surgery {
    pub host: LabeledGraph,
    pub decomposition: PathDecomposition,
    pub record: RemovalRecord,
}

impl Surgery {
    pub fn relabel(&self, perm: &Permutation) -> Surgery {
        Surgery {
            host: self.host.relabel(perm),
            decomposition: self.decomposition.relabel(perm),
            record: self.record.relabel(perm),
        }
    }
}

/// Deletes a star with `m` edges centered at vertex `n` from `K_n` and
/// repairs the decomposition of [`construct(n)`](construct).
///
/// Odd `n`: the center sits next to an end of most paths, so end edges go
/// first and the edges next to them after. When `k = (n−1)/2` is even, one
/// path runs through the center; cutting it there is repaired with the end
/// edge `{1, 2k}`. Even `n`: forks centered at `n` are removed and their
/// bases (end edges of other paths) splice the cut paths back together; a
/// single leftover edge is the path end at `n`.
///
/// ```
/// let s = gallai::remove_star(7, 5).unwrap();
/// assert_eq!(s.host.edge_count(), 16);
/// assert!(s.decomposition.paths().len() <= 4);
/// ```
pub fn remove_star(n: usize, m: usize) -> Result<Surgery> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "star removal needs n ≥ 3, got {n}"
        )));
    }
    if m == 0 || m > n - 2 {
        return Err(Error::InvalidParameter(format!(
            "star size must be in 1..={}, got {m}",
            n - 2
        )));
    }
    let bound = gallai_bound(n)?;
    let center = n;
    let base = construct(n)?;
    let mut bench = Workbench::new(&base);
    let mut removed = BTreeSet::new();

    if n.is_multiple_of(2) {
        let forks: Vec<Fork> = forks_at(&base, center).into_iter().take(m / 2).collect();
        let mut pending: BTreeSet<Edge> = forks.iter().flat_map(|f| f.arms).collect();
        if m % 2 == 1 {
            let lone = base
                .paths()
                .iter()
                .find_map(|p| end_edge_at(p, center))
                .ok_or_else(|| Error::Construction(format!("no path ends at {center}")))?;
            pending.insert(lone);
        }
        removed.extend(pending.iter().copied());
        bench.drain(&mut pending, &forks, bound)?;
    } else {
        let k = n / 2;
        let (ends, sides) = end_and_side_edges(&base, center);
        let through = Edge::new(2 * k, center);
        if k % 2 == 1 || base.paths().iter().any(|p| p.is_end_edge(through)) {
            // For k = 2 the through edge is itself an end edge.
            let mut pending: BTreeSet<Edge> = ends.iter().chain(&sides).copied().take(m).collect();
            removed.extend(pending.iter().copied());
            bench.drain(&mut pending, &[], bound)?;
        } else {
            let mut pending: BTreeSet<Edge> = ends.iter().copied().take(m).collect();
            removed.extend(pending.iter().copied());
            bench.drain(&mut pending, &[], bound)?;
            if m > ends.len() {
                let (i, _) = bench
                    .locate(through)
                    .ok_or(Error::EdgeNotCovered(through))?;
                bench.cut(through)?;
                bench.bridge(Edge::new(1, 2 * k), i, i + 1)?;
                removed.insert(through);
                let mut pending: BTreeSet<Edge> = [Edge::new(k + 1, center)]
                    .into_iter()
                    .chain(sides.iter().copied())
                    .take(m - ends.len() - 1)
                    .collect();
                removed.extend(pending.iter().copied());
                bench.drain(&mut pending, &[], bound)?;
            }
        }
    }

    finish(bench, RemovalRecord::star(center, removed), bound)
}

/// Deletes a tadpole `T_{m,1}` (an `m`-cycle plus one pendant edge) from
/// `K_n` and repairs the decomposition of [`construct(n)`](construct).
///
/// The cycle is `1-2-…-m-1`. With `n ∈ {2k, 2k+1}`: for even `m` the tail is
/// `{m, 2k}`, for odd `m` it is `{1, m+1}`, and for odd `n` with `m = 2k` it is
/// `{2k, 2k+1}`. The tail and the cycle's closing edge form a fork on one
/// path; its base is an end edge elsewhere and reconnects the cut path. The
/// remaining cycle edges are path ends.
///
/// Note that for `n = 4` the attachment vertex loses all three of its edges.
pub fn remove_tadpole(n: usize, m: usize) -> Result<Surgery> {
    if n < 4 {
        return Err(Error::InvalidParameter(format!(
            "tadpole removal needs n ≥ 4, got {n}"
        )));
    }
    if m < 3 || m > n - 1 {
        return Err(Error::InvalidParameter(format!(
            "tadpole cycle length must be in 3..={}, got {m}",
            n - 1
        )));
    }
    let bound = gallai_bound(n)?;
    let k = n / 2;
    let cycle: Vec<Vertex> = (1..=m).collect();
    let tail = if n % 2 == 1 && m == 2 * k {
        Edge::new(2 * k, 2 * k + 1)
    } else if m.is_multiple_of(2) {
        Edge::new(m, 2 * k)
    } else {
        Edge::new(1, m + 1)
    };
    let cycle_edges: BTreeSet<Edge> = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .map(|(&a, &b)| Edge::new(a, b))
        .collect();

    let base = construct(n)?;
    let forks: Vec<Fork> = tadpole_fork(&base, tail, &cycle_edges)
        .into_iter()
        .collect();
    let mut pending = cycle_edges.clone();
    pending.insert(tail);
    let removed = pending.clone();

    let mut bench = Workbench::new(&base);
    bench.drain(&mut pending, &forks, bound)?;

    let record = RemovalRecord {
        kind: RemovalKind::Tadpole,
        removed_edges: removed,
        center: None,
        cycle_length: Some(m),
        cycle,
        tail: Some(tail),
    };
    finish(bench, record, bound)
}

/// The fork formed by `tail` and a cycle edge next to it on the tail's path;
/// the lexicographically least such edge when both neighbors qualify.
fn tadpole_fork(d: &PathDecomposition, tail: Edge, cycle: &BTreeSet<Edge>) -> Option<Fork> {
    let path = &d.paths()[d.path_containing(tail)?];
    let s = path.vertices();
    let pos = path.position_of(tail)?;
    let mut candidates = Vec::new();
    if pos > 0 {
        candidates.push(Fork::new(s[pos - 1], s[pos], s[pos + 1]));
    }
    if pos + 2 < s.len() {
        candidates.push(Fork::new(s[pos], s[pos + 1], s[pos + 2]));
    }
    candidates
        .into_iter()
        .filter(|f| f.arms.iter().any(|a| *a != tail && cycle.contains(a)))
        .min_by_key(|f| f.arms.iter().copied().filter(|a| *a != tail).min())
}

fn end_edge_at(p: &Path, v: Vertex) -> Option<Edge> {
    let s = p.vertices();
    if s[0] == v {
        Some(Edge::new(s[0], s[1]))
    } else if s[s.len() - 1] == v {
        Some(Edge::new(s[s.len() - 1], s[s.len() - 2]))
    } else {
        None
    }
}

/// End edges at `v` (where `v` is next to an endpoint) and the edges beyond
/// them at `v`, both in path order.
fn end_and_side_edges(d: &PathDecomposition, v: Vertex) -> (Vec<Edge>, Vec<Edge>) {
    let mut ends = Vec::new();
    let mut sides = Vec::new();
    for p in d.paths() {
        let s = p.vertices();
        let len = s.len();
        if len >= 3 && s[1] == v {
            ends.push(Edge::new(s[0], v));
            sides.push(Edge::new(v, s[2]));
        } else if len >= 3 && s[len - 2] == v {
            ends.push(Edge::new(s[len - 1], v));
            sides.push(Edge::new(v, s[len - 3]));
        }
    }
    (ends, sides)
}

fn finish(bench: Workbench, record: RemovalRecord, bound: usize) -> Result<Surgery> {
    let decomposition = bench.into_decomposition()?;
    let report = verify_decomposition(&decomposition);
    if !report.is_partition() || decomposition.paths().len() > bound {
        return Err(Error::Construction(report.to_string()));
    }
    Ok(Surgery {
        host: decomposition.host().clone(),
        decomposition,
        record,
    })
}

/// True iff `edges` is a non-empty star centered at `center`.
pub fn is_star(edges: &BTreeSet<Edge>, center: Vertex) -> bool {
    !edges.is_empty() && edges.iter().all(|e| e.contains(center))
}

/// True iff `edges` forms `T_{m,1}`: an `m`-cycle with one pendant edge.
pub fn is_tadpole(edges: &BTreeSet<Edge>, m: usize) -> bool {
    if m < 3 || edges.len() != m + 1 {
        return false;
    }
    let mut degree = std::collections::BTreeMap::<Vertex, usize>::new();
    for e in edges {
        *degree.entry(e.lo()).or_default() += 1;
        *degree.entry(e.hi()).or_default() += 1;
    }
    let leaves: Vec<Vertex> = degree
        .iter()
        .filter(|(_, &d)| d == 1)
        .map(|(&v, _)| v)
        .collect();
    if degree.len() != m + 1 || leaves.len() != 1 {
        return false;
    }
    let pendant = *edges
        .iter()
        .find(|e| e.contains(leaves[0]))
        .expect("leaf has an edge");
    let cycle: BTreeSet<Edge> = edges.iter().copied().filter(|&e| e != pendant).collect();
    let mut walk_degree = std::collections::BTreeMap::<Vertex, usize>::new();
    for e in &cycle {
        *walk_degree.entry(e.lo()).or_default() += 1;
        *walk_degree.entry(e.hi()).or_default() += 1;
    }
    if walk_degree.len() != m || walk_degree.values().any(|&d| d != 2) {
        return false;
    }
    // 2-regular on m vertices with m edges: a single cycle iff connected.
    let start = *walk_degree.keys().next().expect("non-empty");
    let (mut prev, mut cur, mut steps) = (0, start, 0);
    loop {
        let next = cycle
            .iter()
            .filter_map(|e| e.other(cur))
            .find(|&w| w != prev)
            .expect("2-regular");
        prev = cur;
        cur = next;
        steps += 1;
        if cur == start {
            break;
        }
    }
    steps == m
}

/// Removes `removals` in order, each of which must be an end edge of some
/// path at its turn. Paths that lose their last edge disappear.
///
/// ```
/// use gallai::{removal::trim_path_ends, constructions::walecki_even, Edge};
///
/// let d = walecki_even(3).unwrap();
/// let (host, trimmed) = trim_path_ends(&d, &[Edge::new(5, 4)]).unwrap();
/// assert_eq!(host.edge_count(), 14);
/// assert_eq!(trimmed.paths()[0].vertices(), &[1, 2, 6, 3, 5]);
/// ```
pub fn trim_path_ends(
    d: &PathDecomposition,
    removals: &[Edge],
) -> Result<(LabeledGraph, PathDecomposition)> {
    let mut bench = Workbench::new(d);
    for (index, &edge) in removals.iter().enumerate() {
        if bench.locate(edge).is_none() {
            return Err(Error::RemovalNotCovered { index, edge });
        }
        if bench.end_owner(edge).is_none() {
            return Err(Error::NotAnEndEdge { index, edge });
        }
        bench.trim(edge)?;
    }
    let trimmed = bench.into_decomposition()?;
    Ok((trimmed.host().clone(), trimmed))
}

/// The lexicographically least order in which `target` can be trimmed from
/// `d`, if any order works.
///
/// An edge that is a path end stays one while other ends are trimmed, so
/// always taking the least available edge finds the least order whenever one
/// exists.
pub fn trim_order(d: &PathDecomposition, target: &BTreeSet<Edge>) -> Option<Vec<Edge>> {
    let mut bench = Workbench::new(d);
    let mut pending = target.clone();
    let mut order = Vec::with_capacity(target.len());
    while !pending.is_empty() {
        let e = pending
            .iter()
            .copied()
            .find(|&e| bench.end_owner(e).is_some())?;
        bench.trim(e).ok()?;
        pending.remove(&e);
        order.push(e);
    }
    Some(order)
}

/// A decomposition of `K_n` and an order in which the target edges can be
/// trimmed from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrimWitness {
    pub decomposition: PathDecomposition,
    pub order: Vec<Edge>,
}

/// Can `target` be removed from `K_n` purely by trimming path ends of some
/// Gallai-bound decomposition?
///
/// `construct(n)` is tried first. Otherwise every labeled decomposition is
/// searched: class representatives in fingerprint order, each under all
/// relabelings in lexicographic order. The first decomposition that admits
/// the target is returned with its least trim order. `Ok(None)` means no
/// decomposition meeting the bound works.
pub fn path_ends_feasible(
    n: usize,
    target: &BTreeSet<Edge>,
    cap: usize,
) -> Result<Option<TrimWitness>> {
    if n > cap {
        return Err(Error::AboveSearchCap { n, cap });
    }
    let complete = complete_graph(n)?;
    if let Some(e) = target.iter().find(|e| !complete.contains(**e)) {
        return Err(Error::InvalidParameter(format!("edge {e} is not in K_{n}")));
    }
    if n == 1 {
        return Ok(None);
    }
    let constructed = construct(n)?;
    if let Some(order) = trim_order(&constructed, target) {
        return Ok(Some(TrimWitness {
            decomposition: constructed,
            order,
        }));
    }

    let config = EnumerationConfig { cap, budget: None };
    for class in enumerate_decompositions(n, &config)? {
        let rep = &class.representative;
        let mut images: Vec<Vertex> = (1..=n).collect();
        loop {
            let perm = Permutation::new(images.clone())?;
            let inverse = perm.inverse();
            let pulled: BTreeSet<Edge> = target.iter().map(|&e| inverse.apply_edge(e)).collect();
            if trimmable(rep, &pulled) {
                let decomposition = rep.relabel(&perm);
                let order =
                    trim_order(&decomposition, target).expect("trimmable sets have a trim order");
                return Ok(Some(TrimWitness {
                    decomposition,
                    order,
                }));
            }
            if !crate::enumeration::next_permutation(&mut images) {
                break;
            }
        }
    }
    Ok(None)
}

/// Each path's share of `target` must be a prefix plus a suffix of its edges.
fn trimmable(d: &PathDecomposition, target: &BTreeSet<Edge>) -> bool {
    let mut covered = 0;
    for p in d.paths() {
        let hits: Vec<bool> = p.edges().map(|e| target.contains(&e)).collect();
        let count = hits.iter().filter(|&&h| h).count();
        covered += count;
        let prefix = hits.iter().take_while(|&&h| h).count();
        let suffix = hits.iter().rev().take_while(|&&h| h).count();
        if (prefix + suffix).min(hits.len()) != count {
            return false;
        }
    }
    covered == target.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_connected;

    fn edges(pairs: &[(Vertex, Vertex)]) -> BTreeSet<Edge> {
        pairs.iter().map(|&(a, b)| Edge::new(a, b)).collect()
    }

    #[test]
    fn star_examples() {
        let s = remove_star(7, 5).unwrap();
        assert_eq!(s.host.edge_count(), 16);
        assert!(s.decomposition.paths().len() <= 4);
        assert!(is_star(&s.record.removed_edges, 7));

        let s = remove_star(6, 2).unwrap();
        assert_eq!(s.host.edge_count(), 13);
        assert_eq!(s.decomposition.paths().len(), 3);

        let s = remove_star(4, 1).unwrap();
        assert_eq!(s.host.edge_count(), 5);
        assert_eq!(s.decomposition.paths().len(), 2);
    }

    #[test]
    fn star_sweep_even_k() {
        // k = 2 has the through edge at a path end; k = 4, 6 need the bridge.
        for n in [5, 9, 13] {
            for m in 1..=n - 2 {
                let s = remove_star(n, m).unwrap();
                assert!(is_connected(&s.host), "({n},{m})");
                assert_eq!(s.record.removed_edges.len(), m);
                assert!(verify_decomposition(&s.decomposition).passed(), "({n},{m})");
            }
        }
        let s = remove_star(9, 7).unwrap();
        assert!(s
            .decomposition
            .paths()
            .iter()
            .any(|p| p.vertices() == [5, 4, 3, 2, 1, 8, 7, 6]));
    }

    #[test]
    fn k4_minus_edge_oracle() {
        // Five edges, paths of at most three edges: two paths are needed.
        let s = remove_star(4, 1).unwrap();
        let odd = (1..=4).filter(|&v| s.host.degree(v) % 2 == 1).count();
        let lower = (odd / 2).max(s.host.edge_count().div_ceil(3));
        assert_eq!(lower, 2);
        assert_eq!(s.decomposition.paths().len(), lower);
    }

    #[test]
    fn six_two_reassigns_base() {
        let base = construct(6).unwrap();
        let forks = forks_at(&base, 6);
        assert_eq!(forks.len(), 2);
        let s = remove_star(6, 2).unwrap();
        let first = forks[0];
        assert_eq!(s.record.removed_edges, first.arms.into_iter().collect());
        // The base now continues the path that lost its fork.
        let holder = s.decomposition.path_containing(first.base).unwrap();
        let (l, r) = first.base.endpoints();
        let p = &s.decomposition.paths()[holder];
        assert!(p.contains_vertex(l) && p.contains_vertex(r));
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn star_rejects() {
        assert!(remove_star(5, 4).is_err());
        assert!(remove_star(2, 0).is_err());
        assert!(remove_star(5, 0).is_err());
    }

    #[test]
    fn tadpole_examples() {
        for (n, m, remaining, paths) in [(8, 6, 21, 4), (7, 4, 16, 4)] {
            let s = remove_tadpole(n, m).unwrap();
            assert_eq!(s.host.edge_count(), remaining);
            assert_eq!(s.decomposition.paths().len(), paths);
            assert!(is_tadpole(&s.record.removed_edges, m));
        }
        let s = remove_tadpole(5, 3).unwrap();
        assert_eq!(s.host.edge_count(), 6);
        assert!(s.decomposition.paths().len() <= 3);
    }

    #[test]
    fn k8_tadpole_follows_the_fork_recipe() {
        let s = remove_tadpole(8, 6).unwrap();
        assert_eq!(s.record.tail, Some(Edge::new(6, 8)));
        // {1,8} was the end of a path and now closes the gap left by 1-6-8;
        // the path has also lost its end edge {3,4} to the cycle.
        let holder = s.decomposition.path_containing(Edge::new(1, 8)).unwrap();
        let p = &s.decomposition.paths()[holder];
        assert_eq!(p.vertices(), &[4, 2, 5, 1, 8, 7]);
    }

    #[test]
    fn tadpole_n4_isolates_a_vertex() {
        let s = remove_tadpole(4, 3).unwrap();
        assert_eq!(s.host.edge_count(), 2);
        assert!(!is_connected(&s.host));
        assert!(verify_decomposition(&s.decomposition).passed());
    }

    #[test]
    fn tadpole_rejects() {
        assert!(remove_tadpole(6, 2).is_err());
        assert!(remove_tadpole(6, 6).is_err());
        assert!(remove_tadpole(3, 3).is_err());
    }

    #[test]
    fn tadpole_shape_checks() {
        assert!(is_tadpole(&edges(&[(1, 2), (2, 3), (3, 1), (3, 4)]), 3));
        assert!(!is_tadpole(&edges(&[(1, 2), (2, 3), (3, 4), (4, 5)]), 3));
        // Two triangles sharing nothing plus... wrong count.
        assert!(!is_tadpole(
            &edges(&[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 7)]),
            6
        ));
        assert!(is_star(&edges(&[(1, 7), (2, 7)]), 7));
        assert!(!is_star(&edges(&[(1, 7), (2, 3)]), 7));
    }

    #[test]
    fn trim_examples() {
        let k2 = construct(2).unwrap();
        let (host, d) = trim_path_ends(&k2, &[Edge::new(1, 2)]).unwrap();
        assert_eq!(host.edge_count(), 0);
        assert!(d.paths().is_empty());

        let k6 = construct(6).unwrap();
        assert_eq!(
            trim_path_ends(&k6, &[Edge::new(2, 6)]),
            Err(Error::NotAnEndEdge {
                index: 0,
                edge: Edge::new(2, 6)
            })
        );
        assert_eq!(
            trim_path_ends(&k6, &[Edge::new(5, 4), Edge::new(5, 4)]),
            Err(Error::RemovalNotCovered {
                index: 1,
                edge: Edge::new(5, 4)
            })
        );
    }

    #[test]
    fn trim_never_increases_count_and_removes_exactly() {
        let d = construct(9).unwrap();
        let order: Vec<Edge> = d.paths().iter().map(|p| p.end_edges().0).collect();
        let (host, trimmed) = trim_path_ends(&d, &order).unwrap();
        assert_eq!(host.edge_count(), 36 - order.len());
        assert!(trimmed.paths().len() <= d.paths().len());
        for p in trimmed.paths() {
            let contiguous = d.paths().iter().any(|q| {
                q.vertices()
                    .windows(p.vertices().len())
                    .any(|w| w == p.vertices())
                    || q.vertices()
                        .windows(p.vertices().len())
                        .any(|w| w.iter().rev().eq(p.vertices()))
            });
            assert!(contiguous);
        }
    }

    #[test]
    fn star_trim_replay_on_k7() {
        let d = construct(7).unwrap();
        let (ends, sides) = end_and_side_edges(&d, 7);
        let order = vec![ends[0], sides[0], ends[1], sides[1], ends[2]];
        let (host, trimmed) = trim_path_ends(&d, &order).unwrap();
        let s = remove_star(7, 5).unwrap();
        assert_eq!(host, s.host);
        assert_eq!(trimmed.sorted_paths(), s.decomposition.sorted_paths());
    }

    #[test]
    fn feasibility_examples() {
        let star: BTreeSet<Edge> = (1..=5).map(|v| Edge::new(v, 7)).collect();
        let w = path_ends_feasible(7, &star, DEFAULT_SEARCH_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(w.order.len(), 5);
        trim_path_ends(&w.decomposition, &w.order).unwrap();

        let w = path_ends_feasible(6, &BTreeSet::new(), DEFAULT_SEARCH_CAP)
            .unwrap()
            .unwrap();
        assert!(w.order.is_empty());

        let all: BTreeSet<Edge> = complete_graph(6).unwrap().edges().clone();
        let w = path_ends_feasible(6, &all, DEFAULT_SEARCH_CAP)
            .unwrap()
            .unwrap();
        assert_eq!(w.order.len(), 15);

        assert!(path_ends_feasible(9, &BTreeSet::new(), DEFAULT_SEARCH_CAP).is_err());
        assert!(path_ends_feasible(5, &edges(&[(1, 6)]), DEFAULT_SEARCH_CAP).is_err());
    }

    #[test]
    fn feasibility_matches_brute_force() {
        // Oracle: try the greedy trim on every labeled decomposition.
        for n in 4..=5 {
            let all: Vec<Edge> = complete_graph(n).unwrap().edges().iter().copied().collect();
            let census = crate::enumeration::labeled_decompositions(n).unwrap();
            let mut infeasible = 0;
            for mask in 0u32..(1 << all.len()) {
                let target: BTreeSet<Edge> = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                let expected = census.iter().any(|d| trim_order(d, &target).is_some());
                let got = path_ends_feasible(n, &target, DEFAULT_SEARCH_CAP).unwrap();
                assert_eq!(got.is_some(), expected, "n={n} target={target:?}");
                if let Some(w) = got {
                    assert!(census
                        .iter()
                        .any(|d| d.sorted_paths() == w.decomposition.sorted_paths()));
                    trim_path_ends(&w.decomposition, &w.order).unwrap();
                } else {
                    infeasible += 1;
                }
            }
            // Every target is reachable for n ≤ 5.
            assert_eq!(infeasible, 0);
        }
    }

    #[test]
    fn k6_double_star_is_infeasible() {
        let target = edges(&[
            (1, 3),
            (1, 4),
            (1, 5),
            (1, 6),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 6),
        ]);
        assert_eq!(
            path_ends_feasible(6, &target, DEFAULT_SEARCH_CAP).unwrap(),
            None
        );
        let census = crate::enumeration::labeled_decompositions(6).unwrap();
        assert_eq!(census.len(), 960);
        assert!(census.iter().all(|d| trim_order(d, &target).is_none()));
    }

    #[test]
    fn trimmable_matches_greedy() {
        let d = construct(7).unwrap();
        let all: Vec<Edge> = complete_graph(7).unwrap().edges().iter().copied().collect();
        for mask in 0u32..4096 {
            let target: BTreeSet<Edge> = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> (i % 12) & 1 == 1 && i % 3 == 0)
                .map(|(_, e)| *e)
                .collect();
            assert_eq!(trimmable(&d, &target), trim_order(&d, &target).is_some());
        }
    }

    #[test]
    fn relabel_moves_the_removed_subgraph() {
        let s = remove_star(6, 3).unwrap();
        let swap = Permutation::new(vec![6, 2, 3, 4, 5, 1]).unwrap();
        let moved = s.relabel(&swap);
        assert_eq!(moved.record.center, Some(1));
        assert!(is_star(&moved.record.removed_edges, 1));
        assert!(verify_decomposition(&moved.decomposition).passed());
        let full: BTreeSet<Edge> = moved
            .host
            .edges()
            .union(&moved.record.removed_edges)
            .copied()
            .collect();
        assert_eq!(&full, complete_graph(6).unwrap().edges());
    }
}
