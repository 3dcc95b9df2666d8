//! Immutable simple graphs, the standard generators, and Cartesian products.
//!
//! Vertices are `0..n`. Edges are stored once, smaller endpoint first, sorted
//! lexicographically.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

/// Orders an unordered pair with the smaller endpoint first.
#[inline]
pub fn canonical(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Records which generator produced a graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Hypercube(usize),
    Petersen,
    Product(Box<Provenance>, Box<Provenance>),
    Subgraph(Box<Provenance>, Vec<Edge>),
    /// Loaded from an external description; the tag is kept verbatim.
    External(String),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Path(n) => write!(f, "path({n})"),
            Provenance::Cycle(n) => write!(f, "cycle({n})"),
            Provenance::Complete(n) => write!(f, "complete({n})"),
            Provenance::Hypercube(r) => write!(f, "hypercube({r})"),
            Provenance::Petersen => write!(f, "petersen"),
            Provenance::Product(a, b) => write!(f, "product({a},{b})"),
            Provenance::Subgraph(a, x) => {
                write!(f, "subgraph({a},[")?;
                for (i, (u, v)) in x.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "[{u},{v}]")?;
                }
                write!(f, "])")
            }
            Provenance::External(s) => f.write_str(s),
        }
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    incident: Vec<Vec<usize>>,
    provenance: Option<Provenance>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and out-of-range
    /// endpoints. Edge order in the input does not matter.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({u}, {v}) has an endpoint outside 0..{n}"
                )));
            }
            list.push(canonical(u, v));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!("duplicate edge ({}, {})", w[0].0, w[0].1)));
        }
        Ok(Self::from_sorted(n, list, None))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>, provenance: Option<Provenance>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut incident = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            incident[u].push(i);
            incident[v].push(i);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            adj,
            incident,
            provenance,
        }
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = Some(provenance);
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical lexicographic order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    /// Indices (into [`Graph::edges`]) of the edges incident to `v`.
    pub fn incident_edges(&self, v: Vertex) -> &[usize] {
        &self.incident[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_index(u, v).is_some()
    }

    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&canonical(u, v)).ok()
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: BTreeSet<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeProfile {
            regular: degrees.len() <= 1,
            max_degree: degrees.iter().next_back().copied().unwrap_or(0),
            degrees,
        }
    }

    pub fn is_regular(&self) -> bool {
        self.degree_profile().regular
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Breadth-first distances from `source`; unreachable vertices get `None`.
    pub fn distances_from(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n];
        for start in 0..self.n {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u]?;
                for &w in &self.adj[u] {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(|s| s.unwrap_or(false)).collect())
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| canonical(pos[u], pos[v]))
            .collect();
        edges.sort_unstable();
        Graph::from_sorted(vertices.len(), edges, None)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: BTreeSet<usize>,
    pub regular: bool,
    pub max_degree: usize,
}

/// Named graph families understood by [`build_generator`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneratorKind {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Hypercube(usize),
    Petersen,
}

impl std::str::FromStr for GeneratorKind {
    type Err = Error;

    /// Parses `path:3`, `cycle:5`, `complete:4`, `hypercube:3` or `petersen`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("petersen") {
            return Ok(GeneratorKind::Petersen);
        }
        let (name, arg) = s.split_once(':').ok_or_else(|| Error::SizeOutOfRange {
            kind: "generator",
            detail: format!("expected <kind>:<size>, got {s:?}"),
        })?;
        let size: usize = arg.trim().parse().map_err(|_| Error::SizeOutOfRange {
            kind: "generator",
            detail: format!("bad size {arg:?}"),
        })?;
        match name.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => Ok(GeneratorKind::Path(size)),
            "cycle" | "c" => Ok(GeneratorKind::Cycle(size)),
            "complete" | "k" => Ok(GeneratorKind::Complete(size)),
            "hypercube" | "q" => Ok(GeneratorKind::Hypercube(size)),
            other => Err(Error::SizeOutOfRange {
                kind: "generator",
                detail: format!("unknown generator {other:?}"),
            }),
        }
    }
}

pub fn build_generator(kind: GeneratorKind) -> Result<Graph> {
    match kind {
        GeneratorKind::Path(n) => path(n),
        GeneratorKind::Cycle(n) => cycle(n),
        GeneratorKind::Complete(n) => complete(n),
        GeneratorKind::Hypercube(r) => hypercube(r),
        GeneratorKind::Petersen => Ok(petersen()),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::SizeOutOfRange {
            kind: "path",
            detail: "need at least 1 vertex".into(),
        });
    }
    let edges = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_sorted(n, edges, Some(Provenance::Path(n))))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::SizeOutOfRange {
            kind: "cycle",
            detail: format!("need at least 3 vertices, got {n}"),
        });
    }
    let mut edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
    edges.push((0, n - 1));
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges, Some(Provenance::Cycle(n))))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::SizeOutOfRange {
            kind: "complete",
            detail: "need at least 1 vertex".into(),
        });
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok(Graph::from_sorted(n, edges, Some(Provenance::Complete(n))))
}

/// The r-cube; vertex `b` is the r-bit word with value `b`.
pub fn hypercube(r: usize) -> Result<Graph> {
    if r == 0 || r > 20 {
        return Err(Error::SizeOutOfRange {
            kind: "hypercube",
            detail: format!("dimension must be in 1..=20, got {r}"),
        });
    }
    let n = 1usize << r;
    let mut edges = Vec::with_capacity(r << (r - 1));
    for u in 0..n {
        for bit in 0..r {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted(n, edges, Some(Provenance::Hypercube(r))))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push(canonical(i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push(canonical(5 + i, 5 + (i + 2) % 5));
    }
    edges.sort_unstable();
    Graph::from_sorted(10, edges, Some(Provenance::Petersen))
}

/// Row-major position of a vertex of a product graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProductIndex {
    pub g_index: Vertex,
    pub h_index: Vertex,
    pub flat_index: Vertex,
}

impl ProductIndex {
    pub fn encode(g_index: Vertex, h_index: Vertex, h_order: usize) -> Self {
        ProductIndex {
            g_index,
            h_index,
            flat_index: g_index * h_order + h_index,
        }
    }

    pub fn decode(flat_index: Vertex, h_order: usize) -> Self {
        ProductIndex {
            g_index: flat_index / h_order,
            h_index: flat_index % h_order,
            flat_index,
        }
    }
}

/// `G □ H`, with vertex `(x, z)` stored at `x * |V(H)| + z`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n == 0 || h.n == 0 {
        return Err(Error::EmptyGraph("cartesian product factors must be nonempty"));
    }
    let nh = h.n;
    let mut edges = Vec::with_capacity(g.edges.len() * nh + h.edges.len() * g.n);
    for &(x, y) in &g.edges {
        for z in 0..nh {
            edges.push((x * nh + z, y * nh + z));
        }
    }
    for z1 in 0..g.n {
        for &(a, b) in &h.edges {
            edges.push((z1 * nh + a, z1 * nh + b));
        }
    }
    edges.sort_unstable();
    let provenance = Provenance::Product(
        Box::new(
            g.provenance
                .clone()
                .unwrap_or_else(|| Provenance::External("graph".into())),
        ),
        Box::new(
            h.provenance
                .clone()
                .unwrap_or_else(|| Provenance::External("graph".into())),
        ),
    );
    Ok(Graph::from_sorted(g.n * nh, edges, Some(provenance)))
}

/// The spanning subgraph `G - X`.
pub fn remove_edges(g: &Graph, removed: &[Edge]) -> Result<Graph> {
    let mut drop = vec![false; g.edges.len()];
    let mut canon = Vec::with_capacity(removed.len());
    for &(u, v) in removed {
        let idx = g.edge_index(u, v).ok_or(Error::NotAnEdge(canonical(u, v)))?;
        drop[idx] = true;
        canon.push(canonical(u, v));
    }
    canon.sort_unstable();
    canon.dedup();
    let edges = g
        .edges
        .iter()
        .zip(&drop)
        .filter(|(_, &d)| !d)
        .map(|(&e, _)| e)
        .collect();
    let base = g
        .provenance
        .clone()
        .unwrap_or_else(|| Provenance::External("graph".into()));
    Ok(Graph::from_sorted(
        g.n,
        edges,
        Some(Provenance::Subgraph(Box::new(base), canon)),
    ))
}
