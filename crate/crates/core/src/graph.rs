//! Graph, path and decomposition data model, plus the partition verifier
//! that every construction in this crate uses as its postcondition.
//!
//! Vertices are 1-based labels. A [`Path`] is stored as a vertex sequence in
//! orientation-normalized form: of the sequence and its reverse, the
//! lexicographically smaller one is kept.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

/// A 1-based vertex label.
pub type Vertex = usize;

/// `⌊(n+1)/2⌋`, the largest path count Gallai's conjecture allows for a
/// connected graph on `n` vertices.
///
/// ```
/// assert_eq!(gallai::gallai_bound(6).unwrap(), 3);
/// assert_eq!(gallai::gallai_bound(7).unwrap(), 4);
/// assert!(gallai::gallai_bound(0).is_err());
/// ```
pub fn gallai_bound(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    Ok(n.div_ceil(2))
}

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: Vertex,
    hi: Vertex,
}

impl Edge {
    /// Builds the edge `{a, b}`.
    ///
    /// # Panics
    ///
    /// Panics if `a == b`. Use [`Edge::try_new`] for untrusted input.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        Edge::try_new(a, b).expect("edge endpoints must differ")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Result<Edge> {
        if a == b {
            return Err(Error::Loop(a));
        }
        Ok(Edge {
            lo: a.min(b),
            hi: a.max(b),
        })
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.lo, self.hi)
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: Vertex) -> Option<Vertex> {
        if v == self.lo {
            Some(self.hi)
        } else if v == self.hi {
            Some(self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// A simple path with at least one edge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    /// Builds a path from a vertex sequence, rejecting sequences shorter than
    /// two vertices or with a repeated vertex. The stored orientation is the
    /// lexicographically smaller of the sequence and its reverse.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Path> {
        if vertices.len() < 2 {
            return Err(Error::InvalidPath(format!(
                "a path needs at least two vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(Error::InvalidPath(format!("vertex {v} repeats")));
            }
        }
        normalize_orientation(&mut vertices);
        Ok(Path { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Always false: a path has at least one edge.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.vertices.windows(2).map(|w| Edge::new(w[0], w[1]))
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.position_of(e).is_some()
    }

    /// Index `i` such that `e` joins `vertices[i]` and `vertices[i + 1]`.
    pub fn position_of(&self, e: Edge) -> Option<usize> {
        self.vertices
            .windows(2)
            .position(|w| Edge::new(w[0], w[1]) == e)
    }

    /// The first and last edges (equal when the path has one edge).
    pub fn end_edges(&self) -> (Edge, Edge) {
        let v = &self.vertices;
        let last = v.len() - 1;
        (Edge::new(v[0], v[1]), Edge::new(v[last - 1], v[last]))
    }

    pub fn is_end_edge(&self, e: Edge) -> bool {
        let (a, b) = self.end_edges();
        a == e || b == e
    }

    /// Applies a relabeling and renormalizes the orientation.
    pub fn relabel(&self, perm: &Permutation) -> Path {
        let mut vertices: Vec<Vertex> = self.vertices.iter().map(|&v| perm.apply(v)).collect();
        normalize_orientation(&mut vertices);
        Path { vertices }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str("-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn normalize_orientation(vertices: &mut [Vertex]) {
    if vertices.iter().rev().lt(vertices.iter()) {
        vertices.reverse();
    }
}

/// A bijection of `1..=n`, stored as the image list of `1, 2, …, n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<Vertex>,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// `images[i]` is where vertex `i + 1` is sent.
    pub fn new(images: Vec<Vertex>) -> Result<Permutation> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter(format!(
                    "permutation image {v} repeats"
                )));
            }
        }
        Ok(Permutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, v: Vertex) -> Vertex {
        self.images[v - 1]
    }

    pub fn apply_edge(&self, e: Edge) -> Edge {
        Edge::new(self.apply(e.lo), self.apply(e.hi))
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn images(&self) -> &[Vertex] {
        &self.images
    }
}

/// An undirected simple graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

/// The complete graph `K_n`.
pub fn complete_graph(n: usize) -> Result<LabeledGraph> {
    if n == 0 {
        return Err(Error::ZeroVertices);
    }
    let edges = (1..=n)
        .flat_map(|a| (a + 1..=n).map(move |b| Edge::new(a, b)))
        .collect();
    Ok(LabeledGraph { n, edges })
}

impl LabeledGraph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<LabeledGraph> {
        if n == 0 {
            return Err(Error::ZeroVertices);
        }
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        if let Some(e) = edges.iter().find(|e| e.hi > n || e.lo == 0) {
            let vertex = if e.lo == 0 { 0 } else { e.hi };
            return Err(Error::VertexOutOfRange { vertex, n });
        }
        Ok(LabeledGraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.edges.iter().filter(|e| e.contains(v)).count()
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    /// The same vertex set with `removed` deleted from the edge set.
    pub fn without_edges<'a>(&self, removed: impl IntoIterator<Item = &'a Edge>) -> LabeledGraph {
        let mut edges = self.edges.clone();
        for e in removed {
            edges.remove(e);
        }
        LabeledGraph { n: self.n, edges }
    }

    /// True iff every vertex of `1..=n` is reachable from vertex 1.
    pub fn is_connected(&self) -> bool {
        let mut adjacency: Vec<Vec<Vertex>> = vec![Vec::new(); self.n + 1];
        for e in &self.edges {
            adjacency[e.lo].push(e.hi);
            adjacency[e.hi].push(e.lo);
        }
        let mut seen = vec![false; self.n + 1];
        let mut queue = VecDeque::from([1]);
        seen[1] = true;
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.n
    }

    pub fn relabel(&self, perm: &Permutation) -> LabeledGraph {
        LabeledGraph {
            n: self.n,
            edges: self.edges.iter().map(|&e| perm.apply_edge(e)).collect(),
        }
    }
}

/// Free-function form of [`LabeledGraph::is_connected`].
pub fn is_connected(g: &LabeledGraph) -> bool {
    g.is_connected()
}

/// A collection of paths claimed to partition the edges of `host`.
///
/// Construction does not validate the claim; call [`verify_decomposition`]
/// (or [`PathDecomposition::verified`]) for that. Path order is kept as
/// given, since some constructions index their paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathDecomposition {
    host: LabeledGraph,
    paths: Vec<Path>,
}

impl PathDecomposition {
    pub fn new(host: LabeledGraph, paths: Vec<Path>) -> PathDecomposition {
        PathDecomposition { host, paths }
    }

    /// Builds the decomposition and fails unless it is a partition of the
    /// host's edges within the Gallai bound.
    pub fn verified(host: LabeledGraph, paths: Vec<Path>) -> Result<PathDecomposition> {
        let d = PathDecomposition { host, paths };
        let report = verify_decomposition(&d);
        if report.passed() {
            Ok(d)
        } else {
            Err(Error::InvalidDecomposition(report.to_string()))
        }
    }

    pub fn host(&self) -> &LabeledGraph {
        &self.host
    }

    pub fn n(&self) -> usize {
        self.host.n
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn into_parts(self) -> (LabeledGraph, Vec<Path>) {
        (self.host, self.paths)
    }

    /// Index of the path carrying `e`.
    pub fn path_containing(&self, e: Edge) -> Option<usize> {
        self.paths.iter().position(|p| p.contains_edge(e))
    }

    /// Paths in sorted order; two decompositions with equal path sets have
    /// equal sorted paths.
    pub fn sorted_paths(&self) -> Vec<Path> {
        let mut paths = self.paths.clone();
        paths.sort();
        paths
    }

    pub fn relabel(&self, perm: &Permutation) -> PathDecomposition {
        PathDecomposition {
            host: self.host.relabel(perm),
            paths: self.paths.iter().map(|p| p.relabel(perm)).collect(),
        }
    }
}

/// The first problem found for one verified property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    VertexOutOfRange {
        path: usize,
        vertex: Vertex,
    },
    EdgeNotInHost {
        path: usize,
        edge: Edge,
    },
    SharedEdge {
        edge: Edge,
        first: usize,
        second: usize,
    },
    UncoveredEdge {
        edge: Edge,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexOutOfRange { path, vertex } => {
                write!(f, "path {path} uses vertex {vertex} outside the host")
            }
            Violation::EdgeNotInHost { path, edge } => {
                write!(f, "path {path} uses edge {edge} which is not in the host")
            }
            Violation::SharedEdge {
                edge,
                first,
                second,
            } => {
                write!(f, "edge {edge} lies on paths {first} and {second}")
            }
            Violation::UncoveredEdge { edge } => write!(f, "edge {edge} is not covered"),
        }
    }
}

/// Per-property outcome of [`verify_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub path_count: usize,
    pub bound: usize,
    /// First path that is not a simple path of the host.
    pub simple_paths: Option<Violation>,
    /// First edge carried by two paths.
    pub edge_disjoint: Option<Violation>,
    /// First host edge carried by no path.
    pub covering: Option<Violation>,
}

impl VerificationReport {
    pub fn is_partition(&self) -> bool {
        self.simple_paths.is_none() && self.edge_disjoint.is_none() && self.covering.is_none()
    }

    pub fn within_bound(&self) -> bool {
        self.path_count <= self.bound
    }

    pub fn passed(&self) -> bool {
        self.is_partition() && self.within_bound()
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.simple_paths
            .as_ref()
            .or(self.edge_disjoint.as_ref())
            .or(self.covering.as_ref())
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn line(f: &mut fmt::Formatter<'_>, name: &str, v: &Option<Violation>) -> fmt::Result {
            match v {
                None => writeln!(f, "{name}: pass"),
                Some(v) => writeln!(f, "{name}: FAIL ({v})"),
            }
        }
        line(f, "simple paths", &self.simple_paths)?;
        line(f, "edge-disjoint", &self.edge_disjoint)?;
        line(f, "covers host", &self.covering)?;
        write!(
            f,
            "path count: {} (bound {}): {}",
            self.path_count,
            self.bound,
            if self.within_bound() { "pass" } else { "FAIL" }
        )
    }
}

/// Checks that `d` is a path decomposition of its host and compares its size
/// with the Gallai bound. Invalid input yields a failing report.
pub fn verify_decomposition(d: &PathDecomposition) -> VerificationReport {
    let host = &d.host;
    let mut simple_paths = None;
    let mut edge_disjoint = None;
    let mut owner: HashMap<Edge, usize> = HashMap::new();

    for (i, path) in d.paths.iter().enumerate() {
        if simple_paths.is_none() {
            if let Some(&v) = path.vertices().iter().find(|&&v| v == 0 || v > host.n) {
                simple_paths = Some(Violation::VertexOutOfRange { path: i, vertex: v });
            }
        }
        for e in path.edges() {
            if simple_paths.is_none() && !host.contains(e) {
                simple_paths = Some(Violation::EdgeNotInHost { path: i, edge: e });
            }
            if let Some(&first) = owner.get(&e) {
                if edge_disjoint.is_none() {
                    edge_disjoint = Some(Violation::SharedEdge {
                        edge: e,
                        first,
                        second: i,
                    });
                }
            } else {
                owner.insert(e, i);
            }
        }
    }

    let covering = host
        .edges
        .iter()
        .find(|e| !owner.contains_key(e))
        .map(|&edge| Violation::UncoveredEdge { edge });

    VerificationReport {
        n: host.n,
        path_count: d.paths.len(),
        bound: host.n.div_ceil(2),
        simple_paths,
        edge_disjoint,
        covering,
    }
}
