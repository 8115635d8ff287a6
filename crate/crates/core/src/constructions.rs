//! Explicit decompositions of `K_n` into `⌊(n+1)/2⌋` paths.
//!
//! Even `n = 2k` uses the Walecki zigzag `1, 2, 2k, 3, 2k−1, 4, …` and its
//! rotations by `0..k`. Odd `n = 2k+1` starts from the `K_{2k}` decomposition
//! and absorbs the new vertex `2k+1` by rerouting edges through it; the two
//! recipes differ by the parity of `k`.
//!
//! Every step that relies on an edge being at the end of its path is checked
//! at runtime, and every result is verified before it is returned.

use crate::error::{Error, Result};
use crate::graph::{
    complete_graph, gallai_bound, verify_decomposition, Edge, LabeledGraph, Path,
    PathDecomposition, Vertex,
};
use crate::workbench::Workbench;

/// The map `v ↦ ((v − 1 + shift) mod n) + 1` on an even vertex count `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rotation {
    n: usize,
    shift: usize,
}

impl Rotation {
    pub fn new(n: usize, shift: usize) -> Result<Rotation> {
        if n == 0 || !n.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "rotations act on an even vertex count, got {n}"
            )));
        }
        if shift >= n / 2 {
            return Err(Error::InvalidParameter(format!(
                "rotation shift {shift} must be below {}",
                n / 2
            )));
        }
        Ok(Rotation { n, shift })
    }

    pub fn shift(&self) -> usize {
        self.shift
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        (v - 1 + self.shift) % self.n + 1
    }

    pub fn apply_all(&self, vertices: &[Vertex]) -> Vec<Vertex> {
        vertices.iter().map(|&v| self.apply(v)).collect()
    }
}

/// The base zigzag on `2k` vertices: `s_1 = 1`, `s_2 = 2`, then
/// `s_{2i+1} = 2k+1−i` and `s_{2i+2} = i+2`.
///
/// ```
/// assert_eq!(gallai::constructions::zigzag(3), vec![1, 2, 6, 3, 5, 4]);
/// ```
pub fn zigzag(k: usize) -> Vec<Vertex> {
    let n = 2 * k;
    let mut seq = Vec::with_capacity(n);
    seq.push(1);
    if n >= 2 {
        seq.push(2);
    }
    let mut i = 1;
    while seq.len() < n {
        seq.push(n + 1 - i);
        if seq.len() < n {
            seq.push(i + 2);
        }
        i += 1;
    }
    seq
}

/// Decomposes `K_{2k}` into `k` Hamiltonian paths; path `t` is the zigzag
/// rotated by `t`.
pub fn walecki_even(k: usize) -> Result<PathDecomposition> {
    if k == 0 {
        return Err(Error::InvalidParameter("walecki_even needs k ≥ 1".into()));
    }
    let n = 2 * k;
    let base = zigzag(k);
    let paths = (0..k)
        .map(|t| Path::new(Rotation::new(n, t)?.apply_all(&base)))
        .collect::<Result<Vec<_>>>()?;
    self_verified(PathDecomposition::new(complete_graph(n)?, paths), k)
}

/// Replaces edge `e = {v_i, v_j}` on its path by the detour `v_i – m – v_j`.
///
/// The host loses `e` and gains `{v_i, m}` and `{v_j, m}`; if `m` is a new
/// vertex the host grows to include it.
///
/// ```
/// use gallai::{constructions::{reroute, walecki_even}, Edge};
///
/// let k6 = walecki_even(3).unwrap();
/// let d = reroute(&k6, Edge::new(1, 2), 7).unwrap();
/// assert_eq!(d.paths()[0].vertices(), &[1, 7, 2, 6, 3, 5, 4]);
/// assert_eq!(d.host().edge_count(), 16);
/// ```
pub fn reroute(d: &PathDecomposition, e: Edge, m: Vertex) -> Result<PathDecomposition> {
    if m == 0 {
        return Err(Error::VertexOutOfRange {
            vertex: m,
            n: d.n(),
        });
    }
    let index = d.path_containing(e).ok_or(Error::EdgeNotCovered(e))?;
    let path = &d.paths()[index];
    if path.contains_vertex(m) {
        return Err(Error::VertexAlreadyOnPath {
            vertex: m,
            path: index,
        });
    }
    let (a, b) = e.endpoints();
    for detour in [Edge::new(a, m), Edge::new(b, m)] {
        if d.path_containing(detour).is_some() {
            return Err(Error::EdgeAlreadyCovered(detour));
        }
    }

    let pos = path.position_of(e).expect("edge located above");
    let mut vertices = path.vertices().to_vec();
    vertices.insert(pos + 1, m);

    let mut paths = d.paths().to_vec();
    paths[index] = Path::new(vertices)?;
    let mut edges = d.host().edges().clone();
    edges.remove(&e);
    edges.insert(Edge::new(a, m));
    edges.insert(Edge::new(b, m));
    let host = LabeledGraph::new(d.n().max(m), edges)?;
    Ok(PathDecomposition::new(host, paths))
}

/// `K_{2k+1}` for odd `k`: reroute `{1,2}, {3,4}, …, {2k−1,2k}` through
/// `2k+1`, detach the end edges `{2,3}, {4,5}, …, {2k−2,2k−1}`, and add the
/// path `1-2-…-2k`.
pub fn odd_decomposition_odd_k(k: usize) -> Result<PathDecomposition> {
    if k == 0 || k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd_decomposition_odd_k needs odd k ≥ 1, got {k}"
        )));
    }
    let apex = 2 * k + 1;
    let rerouted: Vec<Edge> = (1..=k).map(|j| Edge::new(2 * j - 1, 2 * j)).collect();
    let mut d = walecki_even(k)?;
    require_distinct_paths(&d, &rerouted)?;
    for &e in &rerouted {
        d = reroute(&d, e, apex)?;
    }

    let mut bench = Workbench::new(&d);
    for j in 1..k {
        detach_checked(&mut bench, Edge::new(2 * j, 2 * j + 1))?;
    }
    bench.paths.push((1..=2 * k).collect());
    let d = bench.into_decomposition()?;
    let host = complete_graph(apex)?;
    self_verified(PathDecomposition::new(host, d.into_parts().1), k + 1)
}

/// `K_{2k+1}` for even `k`: reroute `{1,2}, …, {k−1,k}` and
/// `{k+2,k+3}, …, {2k−2,2k−1}` through `2k+1`, then add the path
/// `1-2-…-(k+1)-(2k+1)-(2k)-…-(k+2)`, detaching each of its edges that is
/// still on an older path (always an end edge there).
pub fn odd_decomposition_even_k(k: usize) -> Result<PathDecomposition> {
    if k == 0 || !k.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "odd_decomposition_even_k needs even k ≥ 2, got {k}"
        )));
    }
    let apex = 2 * k + 1;
    let rerouted: Vec<Edge> = (1..k)
        .step_by(2)
        .chain((k + 2..2 * k - 1).step_by(2))
        .map(|i| Edge::new(i, i + 1))
        .collect();
    let mut d = walecki_even(k)?;
    require_distinct_paths(&d, &rerouted)?;
    for &e in &rerouted {
        d = reroute(&d, e, apex)?;
    }

    let new_path: Vec<Vertex> = (1..=k + 1)
        .chain([apex])
        .chain((k + 2..=2 * k).rev())
        .collect();
    let mut bench = Workbench::new(&d);
    for w in new_path.windows(2) {
        let e = Edge::new(w[0], w[1]);
        if bench.locate(e).is_some() {
            detach_checked(&mut bench, e)?;
        }
    }
    bench.paths.push(new_path);
    let d = bench.into_decomposition()?;
    let host = complete_graph(apex)?;
    self_verified(PathDecomposition::new(host, d.into_parts().1), k + 1)
}

/// Dispatches to the even or odd construction; the result always has exactly
/// `gallai_bound(n)` paths.
///
/// ```
/// let d = gallai::construct(7).unwrap();
/// assert_eq!(d.paths().len(), 4);
/// assert!(gallai::verify_decomposition(&d).passed());
/// ```
pub fn construct(n: usize) -> Result<PathDecomposition> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "construct needs n ≥ 2, got {n}"
        )));
    }
    let k = n / 2;
    if n.is_multiple_of(2) {
        walecki_even(k)
    } else if k % 2 == 1 {
        odd_decomposition_odd_k(k)
    } else {
        odd_decomposition_even_k(k)
    }
}

/// Short name of the recipe `construct(n)` uses.
pub fn construction_name(n: usize) -> &'static str {
    match (n % 2, (n / 2) % 2) {
        (0, _) => "walecki_even",
        (_, 1) => "odd_decomposition_odd_k",
        _ => "odd_decomposition_even_k",
    }
}

fn require_distinct_paths(d: &PathDecomposition, edges: &[Edge]) -> Result<()> {
    let mut owners = Vec::with_capacity(edges.len());
    for &e in edges {
        let owner = d.path_containing(e).ok_or(Error::EdgeNotCovered(e))?;
        if let Some(prev) = owners.iter().position(|&o| o == owner) {
            return Err(Error::Construction(format!(
                "rerouted edges {} and {e} share path {owner}",
                edges[prev]
            )));
        }
        owners.push(owner);
    }
    Ok(())
}

fn detach_checked(bench: &mut Workbench, e: Edge) -> Result<()> {
    if bench.end_owner(e).is_none() {
        return Err(Error::Construction(format!(
            "edge {e} should be an end edge but is interior"
        )));
    }
    bench.detach_end(e)
}

fn self_verified(d: PathDecomposition, expected_paths: usize) -> Result<PathDecomposition> {
    let report = verify_decomposition(&d);
    if !report.passed() {
        return Err(Error::Construction(report.to_string()));
    }
    debug_assert_eq!(gallai_bound(d.n()).ok(), Some(expected_paths));
    if d.paths().len() != expected_paths {
        return Err(Error::Construction(format!(
            "expected {expected_paths} paths, built {}",
            d.paths().len()
        )));
    }
    Ok(d)
}
