//! Matchings and deterministic perfect-matching search.

use petgraph::algo::maximum_matching;
use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph, Vertex};

/// A set of pairwise disjoint edges of some host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<Edge>,
    perfect: bool,
}

impl Matching {
    /// Validates `edges` against `host`: every pair must be an edge and no
    /// two may share a vertex.
    pub fn new(host: &Graph, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().map(|(u, v)| canonical(u, v)).collect();
        list.sort_unstable();
        list.dedup();
        let mut owner: Vec<Option<Edge>> = vec![None; host.vertex_count()];
        for &e in &list {
            if !host.has_edge(e.0, e.1) {
                return Err(Error::NotAnEdge(e));
            }
            for x in [e.0, e.1] {
                if let Some(prev) = owner[x] {
                    return Err(Error::NotAMatching(prev, e));
                }
                owner[x] = Some(e);
            }
        }
        let perfect = 2 * list.len() == host.vertex_count();
        Ok(Matching { edges: list, perfect })
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// True iff the matching covers every vertex of the host it was built on.
    pub fn is_perfect(&self) -> bool {
        self.perfect
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.binary_search(&canonical(u, v)).is_ok()
    }
}

fn has_perfect_matching_on(g: &Graph, alive: &[bool]) -> bool {
    let live: Vec<Vertex> = (0..g.vertex_count()).filter(|&v| alive[v]).collect();
    if live.len() % 2 == 1 {
        return false;
    }
    if live.is_empty() {
        return true;
    }
    let mut pos = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in live.iter().enumerate() {
        pos[v] = i;
    }
    let edges = g
        .edges()
        .iter()
        .filter(|&&(u, v)| alive[u] && alive[v])
        .map(|&(u, v)| (pos[u] as u32, pos[v] as u32));
    let mut pg: UnGraph<(), ()> = UnGraph::with_capacity(live.len(), 0);
    for _ in 0..live.len() {
        pg.add_node(());
    }
    pg.extend_with_edges(edges);
    maximum_matching(&pg).is_perfect()
}

/// The lexicographically least perfect matching of `g`, if one exists.
///
/// The smallest uncovered vertex is matched to its smallest neighbor for which
/// the rest of the graph still has a perfect matching (Edmonds' algorithm via
/// `petgraph` answers that question).
pub fn find_perfect_matching(g: &Graph) -> Option<Matching> {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return None;
    }
    let mut alive = vec![true; n];
    if !has_perfect_matching_on(g, &alive) {
        return None;
    }
    let mut chosen = Vec::with_capacity(n / 2);
    for u in 0..n {
        if !alive[u] {
            continue;
        }
        alive[u] = false;
        let mut matched = false;
        for &v in g.neighbors(u) {
            if !alive[v] {
                continue;
            }
            alive[v] = false;
            if has_perfect_matching_on(g, &alive) {
                chosen.push(canonical(u, v));
                matched = true;
                break;
            }
            alive[v] = true;
        }
        debug_assert!(matched, "perfect matching vanished during greedy extension");
        if !matched {
            return None;
        }
    }
    Matching::new(g, chosen).ok()
}

/// Every perfect matching of `g`, in lexicographic order. Exponential; meant
/// for desk-scale graphs.
pub fn all_perfect_matchings(g: &Graph) -> Vec<Matching> {
    fn rec(g: &Graph, covered: &mut [bool], acc: &mut Vec<Edge>, out: &mut Vec<Vec<Edge>>) {
        let Some(u) = covered.iter().position(|c| !c) else {
            out.push(acc.clone());
            return;
        };
        covered[u] = true;
        for &v in g.neighbors(u) {
            if covered[v] {
                continue;
            }
            covered[v] = true;
            acc.push(canonical(u, v));
            rec(g, covered, acc, out);
            acc.pop();
            covered[v] = false;
        }
        covered[u] = false;
    }
    if g.vertex_count() % 2 == 1 {
        return Vec::new();
    }
    let mut out = Vec::new();
    rec(g, &mut vec![false; g.vertex_count()], &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|m| Matching::new(g, m).expect("enumerated matching is valid"))
        .collect()
}
