//! Exhaustive census of Gallai-bound path decompositions of small `K_n`,
//! grouped into isomorphism classes under vertex relabeling.
//!
//! # Canonical forms
//!
//! The canonical form of a decomposition is the lexicographic minimum, over
//! all relabelings, of its sorted list of orientation-normalized paths. The
//! first entry of that minimum is always `[1, 2, …, L]` where `L` is the vertex
//! count of a shortest path, so only relabelings sending a shortest path onto
//! `1..=L` need to be tried. This is exact: every minimizing relabeling is in
//! that set, and counting them gives the automorphism group order.
//!
//! # Search
//!
//! Every decomposition of `K_n` within the bound has exactly `⌊(n+1)/2⌋`
//! paths (edge and odd-degree counting), and for even `n` they are all
//! Hamiltonian. Up to relabeling, a shortest path can be fixed to
//! `1-2-…-(L+1)`; the remaining paths are found by backtracking, always
//! extending through the least uncovered edge so no path set is produced
//! twice, and pruning on odd-degree vertices and remaining capacity.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, gallai_bound, normalize_orientation, verify_decomposition, Path,
    PathDecomposition, Vertex,
};

/// Default largest `n` enumerated without a time budget.
pub const DEFAULT_ENUMERATION_CAP: usize = 8;
/// Hard upper limit for enumeration, budget or not.
pub const MAX_ENUMERATION_N: usize = 9;
/// Environment variable overriding [`DEFAULT_ENUMERATION_CAP`].
pub const CAP_ENV_VAR: &str = "GALLAI_ENUM_CAP";

/// Largest `n` accepted by [`count_labeled`].
pub const NAIVE_LIMIT: usize = 6;

/// Limits for [`enumerate_decompositions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub cap: usize,
    /// Allows `n` above `cap` (up to [`MAX_ENUMERATION_N`]) and aborts the
    /// search once exceeded.
    pub budget: Option<Duration>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            budget: None,
        }
    }
}

impl EnumerationConfig {
    /// Default limits with the cap taken from `GALLAI_ENUM_CAP` when set.
    pub fn from_env() -> Result<EnumerationConfig> {
        let mut config = EnumerationConfig::default();
        if let Ok(raw) = std::env::var(CAP_ENV_VAR) {
            config.cap = raw.trim().parse().map_err(|_| {
                Error::InvalidParameter(format!("{CAP_ENV_VAR}={raw:?} is not an integer"))
            })?;
        }
        Ok(config)
    }

    fn admits(&self, n: usize) -> Result<()> {
        let cap = self.cap.min(MAX_ENUMERATION_N);
        if n <= cap || (self.budget.is_some() && n <= MAX_ENUMERATION_N) {
            Ok(())
        } else {
            Err(Error::AboveSearchCap { n, cap })
        }
    }
}

/// Relabeling-invariant fingerprint: sorted, orientation-normalized paths
/// under the minimizing relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    fingerprint: Vec<Vec<Vertex>>,
}

impl CanonicalForm {
    pub fn fingerprint(&self) -> &[Vec<Vertex>] {
        &self.fingerprint
    }

    /// The decomposition of `K_n` the fingerprint spells out.
    pub fn to_decomposition(&self, n: usize) -> Result<PathDecomposition> {
        let paths = self
            .fingerprint
            .iter()
            .map(|p| Path::new(p.clone()))
            .collect::<Result<Vec<_>>>()?;
        Ok(PathDecomposition::new(complete_graph(n)?, paths))
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.fingerprint.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (j, v) in p.iter().enumerate() {
                if j > 0 {
                    f.write_str("-")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// One isomorphism class of decompositions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub canonical: CanonicalForm,
    /// The decomposition spelled out by `canonical`.
    pub representative: PathDecomposition,
    /// Order of the automorphism group of the representative.
    pub automorphisms: u64,
    /// Number of labeled decompositions in the class, `n! / automorphisms`.
    pub labeled_count: u64,
}

/// Canonical form of a decomposition of a complete graph.
///
/// ```
/// use gallai::{canonical_form, construct, Permutation};
///
/// let d = construct(6).unwrap();
/// let shuffled = d.relabel(&Permutation::new(vec![4, 6, 1, 3, 2, 5]).unwrap());
/// assert_eq!(canonical_form(&d).unwrap(), canonical_form(&shuffled).unwrap());
/// ```
pub fn canonical_form(d: &PathDecomposition) -> Result<CanonicalForm> {
    Ok(canonical_search(&checked_paths(d)?, d.n()).0)
}

/// Order of the automorphism group of a decomposition of a complete graph.
pub fn automorphism_count(d: &PathDecomposition) -> Result<u64> {
    Ok(canonical_search(&checked_paths(d)?, d.n()).1)
}

fn checked_paths(d: &PathDecomposition) -> Result<Vec<Vec<Vertex>>> {
    if !d.host().is_complete() {
        return Err(Error::NotComplete(d.n()));
    }
    let report = verify_decomposition(d);
    if !report.is_partition() {
        return Err(Error::InvalidDecomposition(report.to_string()));
    }
    Ok(d.paths().iter().map(|p| p.vertices().to_vec()).collect())
}

/// Exact minimum over relabelings that send a shortest path onto `1..=L`,
/// with the number of relabelings attaining it.
fn canonical_search(paths: &[Vec<Vertex>], n: usize) -> (CanonicalForm, u64) {
    if paths.is_empty() {
        return (
            CanonicalForm {
                fingerprint: Vec::new(),
            },
            factorial(n),
        );
    }
    let shortest = paths.iter().map(Vec::len).min().expect("non-empty");
    let mut best: Option<Vec<Vec<Vertex>>> = None;
    let mut ties = 0u64;
    let mut image = vec![0; n + 1];
    let mut scratch: Vec<Vec<Vertex>> = paths.to_vec();

    for anchor in paths.iter().filter(|p| p.len() == shortest) {
        for reversed in [false, true] {
            let mut oriented = anchor.clone();
            if reversed {
                oriented.reverse();
            }
            let mut on_anchor = vec![false; n + 1];
            for (i, &v) in oriented.iter().enumerate() {
                image[v] = i + 1;
                on_anchor[v] = true;
            }
            let rest: Vec<Vertex> = (1..=n).filter(|&v| !on_anchor[v]).collect();
            let mut labels: Vec<Vertex> = (shortest + 1..=n).collect();
            loop {
                for (&v, &l) in rest.iter().zip(&labels) {
                    image[v] = l;
                }
                for (dst, src) in scratch.iter_mut().zip(paths) {
                    for (d, &s) in dst.iter_mut().zip(src) {
                        *d = image[s];
                    }
                    normalize_orientation(dst);
                }
                scratch.sort_unstable();
                match best.as_ref().map(|b| scratch.cmp(b)) {
                    None | Some(std::cmp::Ordering::Less) => {
                        best = Some(scratch.clone());
                        ties = 1;
                    }
                    Some(std::cmp::Ordering::Equal) => ties += 1,
                    Some(std::cmp::Ordering::Greater) => {}
                }
                // `scratch` is reordered by sorting; restore lengths to match `paths`.
                scratch.clone_from_slice(paths);
                if !next_permutation(&mut labels) {
                    break;
                }
            }
        }
    }
    (
        CanonicalForm {
            fingerprint: best.expect("at least one candidate"),
        },
        ties,
    )
}

/// Advances `items` to the next permutation in lexicographic order; returns
/// false (leaving `items` sorted) after the last one.
pub fn next_permutation<T: Ord>(items: &mut [T]) -> bool {
    if items.len() < 2 {
        return false;
    }
    let mut i = items.len() - 1;
    while i > 0 && items[i - 1] >= items[i] {
        i -= 1;
    }
    if i == 0 {
        items.reverse();
        return false;
    }
    let mut j = items.len() - 1;
    while items[j] <= items[i - 1] {
        j -= 1;
    }
    items.swap(i - 1, j);
    items[i..].reverse();
    true
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// All isomorphism classes of path decompositions of `K_n` with at most
/// `⌊(n+1)/2⌋` paths, sorted by canonical form.
pub fn enumerate_decompositions(n: usize, config: &EnumerationConfig) -> Result<Vec<IsoClass>> {
    let mut classes = Vec::new();
    for_each_class(n, config, |class| classes.push(class))?;
    Ok(classes)
}

/// Streams the classes of [`enumerate_decompositions`] in fingerprint order.
pub fn for_each_class(
    n: usize,
    config: &EnumerationConfig,
    mut visit: impl FnMut(IsoClass),
) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "enumeration needs n ≥ 2, got {n}"
        )));
    }
    config.admits(n)?;
    let bound = gallai_bound(n)?;
    let total_edges = n * (n - 1) / 2;
    let longest = n - 1;
    let shortest_low = total_edges.saturating_sub((bound - 1) * longest).max(1);
    let shortest_high = total_edges / bound;
    let deadline = config.budget.map(|b| Instant::now() + b);

    let mut found: BTreeMap<CanonicalForm, u64> = BTreeMap::new();
    for shortest in shortest_low..=shortest_high {
        let anchor: Vec<Vertex> = (1..=shortest + 1).collect();
        let mut search = Search::new(n, bound, shortest, longest, deadline);
        search.take(&anchor);
        search.descend(&mut |paths: &[Vec<Vertex>]| {
            let (form, automorphisms) = canonical_search(paths, n);
            found.entry(form).or_insert(automorphisms);
        })?;
    }

    let n_factorial = factorial(n);
    for (canonical, automorphisms) in found {
        let representative = canonical.to_decomposition(n)?;
        visit(IsoClass {
            canonical,
            representative,
            automorphisms,
            labeled_count: n_factorial / automorphisms,
        });
    }
    Ok(())
}

/// Backtracking over edge-disjoint path systems of the complement of the
/// already chosen paths.
struct Search {
    n: usize,
    adjacency: [u16; MAX_ENUMERATION_N + 1],
    remaining: usize,
    paths: Vec<Vec<Vertex>>,
    max_paths: usize,
    min_edges: usize,
    max_edges: usize,
    deadline: Option<Instant>,
    nodes: u64,
}

impl Search {
    fn new(
        n: usize,
        max_paths: usize,
        min_edges: usize,
        max_edges: usize,
        deadline: Option<Instant>,
    ) -> Search {
        let mut adjacency = [0u16; MAX_ENUMERATION_N + 1];
        for (v, row) in adjacency.iter_mut().enumerate().take(n + 1).skip(1) {
            *row = (((1u32 << (n + 1)) - 2) as u16) & !(1 << v);
        }
        Search {
            n,
            adjacency,
            remaining: n * (n - 1) / 2,
            paths: Vec::new(),
            max_paths,
            min_edges,
            max_edges,
            deadline,
            nodes: 0,
        }
    }

    fn drop_edge(&mut self, a: Vertex, b: Vertex) {
        self.adjacency[a] &= !(1 << b);
        self.adjacency[b] &= !(1 << a);
        self.remaining -= 1;
    }

    fn restore_edge(&mut self, a: Vertex, b: Vertex) {
        self.adjacency[a] |= 1 << b;
        self.adjacency[b] |= 1 << a;
        self.remaining += 1;
    }

    fn take(&mut self, path: &[Vertex]) {
        for w in path.windows(2) {
            self.drop_edge(w[0], w[1]);
        }
        self.paths.push(path.to_vec());
    }

    fn descend(&mut self, emit: &mut dyn FnMut(&[Vec<Vertex>])) -> Result<()> {
        if self.remaining == 0 {
            emit(&self.paths);
            return Ok(());
        }
        let slots = self.max_paths - self.paths.len();
        if slots == 0 || self.remaining > slots * self.max_edges {
            return Ok(());
        }
        let odd = (1..=self.n)
            .filter(|&v| self.adjacency[v].count_ones() % 2 == 1)
            .count();
        if odd > 2 * slots {
            return Ok(());
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(4096) {
            if let Some(deadline) = self.deadline {
                if Instant::now() > deadline {
                    return Err(Error::BudgetExceeded);
                }
            }
        }

        let a = (1..=self.n)
            .find(|&v| self.adjacency[v] != 0)
            .expect("edges remain");
        let b = self.adjacency[a].trailing_zeros() as Vertex;
        self.drop_edge(a, b);
        let mut right = vec![b];
        let used = (1u16 << a) | (1u16 << b);
        let result = self.extend_right(a, &mut right, used, emit);
        self.restore_edge(a, b);
        result
    }

    /// Grows the path beyond `b` (the first entry of `right`), then hands
    /// each prefix over to `extend_left`.
    fn extend_right(
        &mut self,
        a: Vertex,
        right: &mut Vec<Vertex>,
        used: u16,
        emit: &mut dyn FnMut(&[Vec<Vertex>]),
    ) -> Result<()> {
        let mut left = Vec::new();
        self.extend_left(a, &mut left, right, used, emit)?;
        if right.len() >= self.max_edges {
            return Ok(());
        }
        let tip = *right.last().expect("non-empty");
        let mut options = self.adjacency[tip] & !used;
        while options != 0 {
            let w = options.trailing_zeros() as Vertex;
            options &= options - 1;
            self.drop_edge(tip, w);
            right.push(w);
            let r = self.extend_right(a, right, used | (1 << w), emit);
            right.pop();
            self.restore_edge(tip, w);
            r?;
        }
        Ok(())
    }

    fn extend_left(
        &mut self,
        a: Vertex,
        left: &mut Vec<Vertex>,
        right: &[Vertex],
        used: u16,
        emit: &mut dyn FnMut(&[Vec<Vertex>]),
    ) -> Result<()> {
        let edges = left.len() + right.len();
        if edges >= self.min_edges {
            let path: Vec<Vertex> = left
                .iter()
                .rev()
                .copied()
                .chain(std::iter::once(a))
                .chain(right.iter().copied())
                .collect();
            self.paths.push(path);
            let r = self.descend(emit);
            self.paths.pop();
            r?;
        }
        if edges >= self.max_edges {
            return Ok(());
        }
        let tip = left.last().copied().unwrap_or(a);
        let mut options = self.adjacency[tip] & !used;
        while options != 0 {
            let w = options.trailing_zeros() as Vertex;
            options &= options - 1;
            self.drop_edge(tip, w);
            left.push(w);
            let r = self.extend_left(a, left, right, used | (1 << w), emit);
            left.pop();
            self.restore_edge(tip, w);
            r?;
        }
        Ok(())
    }
}

/// Every labeled Gallai-bound decomposition of `K_n`, generated directly from
/// the list of all simple paths with no symmetry breaking. Only for
/// `n ≤ 6`; used as an oracle for the census.
pub fn labeled_decompositions(n: usize) -> Result<Vec<PathDecomposition>> {
    if !(2..=NAIVE_LIMIT).contains(&n) {
        return Err(Error::InvalidParameter(format!(
            "naive generation supports 2 ≤ n ≤ {NAIVE_LIMIT}, got {n}"
        )));
    }
    let bound = gallai_bound(n)?;
    let bit = |a: Vertex, b: Vertex| {
        let (lo, hi) = (a.min(b), a.max(b));
        1u64 << ((lo - 1) * n + (hi - 1))
    };
    let full: u64 = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
        .fold(0, |m, (a, b)| m | bit(a, b));

    // All simple paths, each in the orientation with the smaller endpoint first.
    let mut all_paths: Vec<(Vec<Vertex>, u64)> = Vec::new();
    let mut stack: Vec<Vec<Vertex>> = (1..=n).map(|v| vec![v]).collect();
    while let Some(p) = stack.pop() {
        if p.len() >= 2 && p[0] < p[p.len() - 1] {
            let mask = p.windows(2).fold(0, |m, w| m | bit(w[0], w[1]));
            all_paths.push((p.clone(), mask));
        }
        for v in 1..=n {
            if !p.contains(&v) {
                let mut q = p.clone();
                q.push(v);
                stack.push(q);
            }
        }
    }
    all_paths.sort();

    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn pick(
        start: usize,
        covered: u64,
        full: u64,
        bound: usize,
        all: &[(Vec<Vertex>, u64)],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if covered == full {
            out.push(chosen.clone());
            return;
        }
        if chosen.len() == bound {
            return;
        }
        for i in start..all.len() {
            if all[i].1 & covered == 0 {
                chosen.push(i);
                pick(i + 1, covered | all[i].1, full, bound, all, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut picks = Vec::new();
    pick(0, 0, full, bound, &all_paths, &mut chosen, &mut picks);
    let host = complete_graph(n)?;
    for pick in picks {
        let paths = pick
            .into_iter()
            .map(|i| Path::new(all_paths[i].0.clone()))
            .collect::<Result<Vec<_>>>()?;
        out.push(PathDecomposition::new(host.clone(), paths));
    }
    Ok(out)
}

/// Number of labeled Gallai-bound decompositions of `K_n` (`2 ≤ n ≤ 6`).
pub fn count_labeled(n: usize) -> Result<u64> {
    Ok(labeled_decompositions(n)?.len() as u64)
}
