//! Djoković–Winkler Θ-classes and the Θ-class removal coloring.

use std::sync::Arc;

use serde::Serialize;

use crate::budget::Budget;
use crate::coloring::{Color, EdgeColoring};
use crate::constructions::{nrg_product_coloring, qualifying_matchings, NrgSpec};
use crate::error::{Error, Result};
use crate::graph::{canonical, Edge, Graph};
use crate::matching::Matching;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaClasses {
    /// Edge classes ordered by their smallest edge.
    pub classes: Vec<Vec<Edge>>,
    pub is_partial_cube: bool,
    /// Every vertex meets every class exactly once.
    pub per_vertex_full: bool,
}

impl ThetaClasses {
    /// Index of the class holding `e`.
    pub fn class_of(&self, e: Edge) -> Option<usize> {
        let e = canonical(e.0, e.1);
        self.classes.iter().position(|c| c.binary_search(&e).is_ok())
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut cur = x;
        while self.0[cur] != root {
            let next = self.0[cur];
            self.0[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn all_distances(g: &Graph) -> Result<Vec<Vec<usize>>> {
    (0..g.vertex_count())
        .map(|v| {
            g.distances_from(v)
                .into_iter()
                .collect::<Option<Vec<usize>>>()
                .ok_or(Error::Disconnected)
        })
        .collect()
}

fn related(d: &[Vec<usize>], (x, y): Edge, (u, v): Edge) -> bool {
    d[x][u] + d[y][v] != d[x][v] + d[y][u]
}

/// Θ-classes from the distance relation and its transitive closure.
pub fn theta_classes(g: &Graph) -> Result<ThetaClasses> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph("theta classes need a vertex"));
    }
    let d = all_distances(g)?;
    let edges = g.edges();
    let m = edges.len();
    let mut uf = UnionFind((0..m).collect());
    let mut raw = vec![vec![false; m]; m];
    for a in 0..m {
        for b in a..m {
            if related(&d, edges[a], edges[b]) {
                raw[a][b] = true;
                raw[b][a] = true;
                uf.union(a, b);
            }
        }
    }
    let mut by_root: std::collections::BTreeMap<usize, Vec<Edge>> = Default::default();
    let mut transitive = true;
    for a in 0..m {
        let ra = uf.find(a);
        by_root.entry(ra).or_default().push(edges[a]);
        for (b, &related) in raw[a].iter().enumerate() {
            if !related && uf.find(b) == ra {
                transitive = false;
            }
        }
    }
    let classes: Vec<Vec<Edge>> = by_root.into_values().collect();
    let is_partial_cube = g.bipartition().is_some() && transitive && classes.iter().all(|c| convex_cut(g, &d, c));
    let per_vertex_full = m > 0
        && (0..g.vertex_count()).all(|v| {
            g.degree(v) == classes.len()
                && classes
                    .iter()
                    .all(|c| c.iter().filter(|&&(x, y)| x == v || y == v).count() == 1)
        });
    Ok(ThetaClasses {
        classes,
        is_partial_cube,
        per_vertex_full,
    })
}

/// Removing `class` leaves exactly two components, each convex.
fn convex_cut(g: &Graph, d: &[Vec<usize>], class: &[Edge]) -> bool {
    let Ok(rest) = crate::graph::remove_edges(g, class) else {
        return false;
    };
    let comps = rest.components();
    if comps.len() != 2 {
        return false;
    }
    let n = g.vertex_count();
    comps.iter().all(|side| {
        let mut inside = vec![false; n];
        for &v in side {
            inside[v] = true;
        }
        side.iter().all(|&a| {
            side.iter()
                .all(|&b| (0..n).all(|w| inside[w] || d[a][w] + d[w][b] != d[a][b]))
        })
    })
}

/// A two-palette coloring of `(G - X) □ H` for `X` a nonempty proper subset of
/// the Θ-class `class_index`.
///
/// When every vertex meets every class, the Θ-class coloring (class
/// `class_index` colored `r`) is the base coloring. Otherwise `G` must be
/// regular and `X` must extend to a perfect matching `M` with `G - M` class 1;
/// the first such `M` is used.
pub fn theta_removal_coloring(
    g: &Graph,
    class_index: usize,
    removed: &[Edge],
    h: &EdgeColoring,
    budget: &Budget,
) -> Result<EdgeColoring> {
    let theta = theta_classes(g)?;
    let class = theta.classes.get(class_index).ok_or_else(|| {
        Error::Precondition(format!(
            "class index {class_index} out of range (0..{})",
            theta.classes.len()
        ))
    })?;
    let removed: Vec<Edge> = removed.iter().map(|&(u, v)| canonical(u, v)).collect();
    if removed.is_empty() {
        return Err(Error::Precondition("X must be nonempty".into()));
    }
    if let Some(e) = removed.iter().find(|e| class.binary_search(e).is_err()) {
        return Err(Error::Precondition(format!("edge {e:?} is not in class {class_index}")));
    }
    let spec = if theta.per_vertex_full {
        let r = theta.classes.len() as Color;
        let host = Arc::new(g.clone());
        let colors = g
            .edges()
            .iter()
            .map(|&e| {
                let j = theta.class_of(e).unwrap_or(0);
                match j.cmp(&class_index) {
                    std::cmp::Ordering::Equal => r,
                    std::cmp::Ordering::Less => j as Color + 1,
                    std::cmp::Ordering::Greater => j as Color,
                }
            })
            .collect();
        let base = EdgeColoring::new(host, colors)?;
        NrgSpec::new(Matching::new(g, class.iter().copied())?, &removed, base)?
    } else {
        if !g.is_regular() {
            return Err(Error::Precondition(
                "G must be regular; every vertex must meet every Θ-class or X must extend to a qualifying perfect matching".into(),
            ));
        }
        let m = qualifying_matchings(g, budget)?
            .into_iter()
            .find(|m| removed.iter().all(|&(u, v)| m.contains(u, v)) && m.len() > removed.len())
            .ok_or_else(|| Error::Precondition("X extends to no qualifying perfect matching".into()))?;
        NrgSpec::derive(g, &m, &removed, budget)?
    };
    nrg_product_coloring(&spec, h)
}
