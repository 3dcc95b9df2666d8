//! `C_s □ G` and `P_s □ G` for class-2 cubic `G` through a perfect matching:
//! color each `C_s □ C_k` (or `P_s □ C_k`) for the cycles `C_k` of `G - M`
//! with shared palettes, then give the copies of `M` one fresh color.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::chromatic::{chromatic_index, class_one_coloring, optimal_coloring, Verdict};
use crate::coloring::{extend_by_matching, EdgeColoring, Palette};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle, path, remove_edges, Graph, Vertex};
use crate::matching::{find_perfect_matching, Matching};
use crate::oracle::find_coloring_with_pool;
use crate::torus::torus_three_palette_coloring;

use super::class1_product_coloring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CubicMode {
    Cycle,
    Path,
}

/// Colors `C_s □ G` (at most 3 palettes) or `P_s □ G` (at most 4).
///
/// `matching` defaults to the first perfect matching found. `budget` bounds
/// the class-2 check of `G` and, in path mode, the palette search on odd
/// components.
pub fn cubic_matching_reduction(
    s: usize,
    g: &Graph,
    matching: Option<&Matching>,
    mode: CubicMode,
    budget: &Budget,
) -> Result<EdgeColoring> {
    if s < 3 || s.is_multiple_of(2) {
        return Err(Error::SizeOutOfRange {
            kind: "layers",
            detail: format!("s must be odd and at least 3, got {s}"),
        });
    }
    let profile = g.degree_profile();
    if !profile.regular || profile.max_degree != 3 {
        return Err(Error::Precondition("G must be cubic".into()));
    }
    match chromatic_index(g, budget)?.verdict() {
        Some(Verdict::ClassTwo) => {}
        Some(Verdict::ClassOne) => return Err(Error::Precondition("G must be class 2".into())),
        None => return Err(Error::BudgetExceeded("class of G undetermined".into())),
    }
    let m = match matching {
        Some(m) => {
            let m = Matching::new(g, m.edges().iter().copied())?;
            if !m.is_perfect() {
                return Err(Error::NotPerfect);
            }
            m
        }
        None => find_perfect_matching(g).ok_or(Error::NotPerfect)?,
    };
    let rest = remove_edges(g, m.edges())?;
    let n = g.vertex_count();

    // component id and position along its cycle for every vertex
    let mut comp = vec![0usize; n];
    let mut pos = vec![0usize; n];
    let mut lengths = Vec::new();
    for (id, members) in rest.components().into_iter().enumerate() {
        let walk = cycle_walk(&rest, &members)?;
        for (p, &v) in walk.iter().enumerate() {
            comp[v] = id;
            pos[v] = p;
        }
        lengths.push(walk.len());
    }

    let mut pieces: BTreeMap<usize, Piece> = BTreeMap::new();
    let order: Vec<usize> = {
        let mut ks: Vec<usize> = lengths.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        // fixed-scheme components first
        ks.sort_by_key(|&k| (k % 2 == 1, k));
        ks
    };
    let mut pool: BTreeSet<Palette> = BTreeSet::new();
    for k in order {
        let piece = match mode {
            CubicMode::Cycle => cycle_piece(s, k)?,
            CubicMode::Path => path_piece(s, k, &pool, budget)?,
        };
        pool.extend(piece.coloring.palette_summary()?.distinct);
        pieces.insert(k, piece);
    }

    let base_graph = match mode {
        CubicMode::Cycle => cycle(s)?,
        CubicMode::Path => path(s)?,
    };
    let base_host = Arc::new(cartesian_product(&base_graph, &rest)?);
    let mut colors = Vec::with_capacity(base_host.edge_count());
    for &(a, b) in base_host.edges() {
        let (i1, v1) = (a / n, a % n);
        let (i2, v2) = (b / n, b % n);
        let piece = &pieces[&lengths[comp[v1]]];
        let c = piece
            .coloring
            .color_of(piece.vertex(i1, pos[v1]), piece.vertex(i2, pos[v2]))
            .ok_or_else(|| Error::DomainMismatch("component edge missing from piece".into()))?;
        colors.push(c);
    }
    let base = EdgeColoring::new(base_host, colors)?;

    let host = Arc::new(cartesian_product(&base_graph, g)?);
    let fiber = Matching::new(
        &host,
        (0..s).flat_map(|i| m.edges().iter().map(move |&(u, v)| (i * n + u, i * n + v))),
    )?;
    let fresh = match mode {
        CubicMode::Cycle => 7,
        CubicMode::Path => (1..).find(|c| !base.colors().contains(c)).unwrap_or(1),
    };
    extend_by_matching(&base, host, &fiber, fresh)
}

/// A coloring of some product standing for `X_s □ C_k`, and how layer `i`,
/// cycle position `p` maps into it.
struct Piece {
    coloring: EdgeColoring,
    transposed: bool,
    s: usize,
    k: usize,
}

impl Piece {
    fn vertex(&self, i: usize, p: usize) -> Vertex {
        if self.transposed {
            p * self.s + i
        } else {
            i * self.k + p
        }
    }
}

fn cycle_piece(s: usize, k: usize) -> Result<Piece> {
    if k.is_multiple_of(2) {
        // C_k □ C_s in colors [4]
        let g = class_one_coloring(&cycle(k)?, &Budget::UNLIMITED)?;
        let h = optimal_coloring(&cycle(s)?, &Budget::UNLIMITED)?;
        let coloring = class1_product_coloring(&g, &h, Some(2))?;
        Ok(Piece {
            coloring,
            transposed: true,
            s,
            k,
        })
    } else if s >= k {
        Ok(Piece {
            coloring: torus_three_palette_coloring(s, k)?,
            transposed: false,
            s,
            k,
        })
    } else {
        Ok(Piece {
            coloring: torus_three_palette_coloring(k, s)?,
            transposed: true,
            s,
            k,
        })
    }
}

fn path_piece(s: usize, k: usize, pool: &BTreeSet<Palette>, budget: &Budget) -> Result<Piece> {
    if k.is_multiple_of(2) {
        // C_k □ P_s in colors [4]
        let g = class_one_coloring(&cycle(k)?, &Budget::UNLIMITED)?;
        let h = class_one_coloring(&path(s)?, &Budget::UNLIMITED)?;
        let coloring = class1_product_coloring(&g, &h, None)?;
        return Ok(Piece {
            coloring,
            transposed: true,
            s,
            k,
        });
    }
    let graph = cartesian_product(&cycle(k)?, &path(s)?)?;
    let pool: Vec<Palette> = pool.iter().cloned().collect();
    match find_coloring_with_pool(&graph, 4, &pool, budget)? {
        Some(coloring) => Ok(Piece {
            coloring,
            transposed: true,
            s,
            k,
        }),
        None => Err(Error::Precondition(format!(
            "P_{s} □ C_{k} has no coloring sharing 4 palettes with the other components"
        ))),
    }
}

/// The vertices of a cycle component in walk order, starting at the smallest
/// vertex towards its smaller neighbor.
fn cycle_walk(g: &Graph, members: &[Vertex]) -> Result<Vec<Vertex>> {
    let start = *members.iter().min().ok_or(Error::EmptyGraph("component"))?;
    if members.iter().any(|&v| g.degree(v) != 2) {
        return Err(Error::Precondition("components of G - M must be cycles".into()));
    }
    let mut walk = vec![start];
    let mut prev = start;
    let mut cur = *g.neighbors(start).iter().min().unwrap_or(&start);
    while cur != start {
        walk.push(cur);
        let next = g.neighbors(cur).iter().copied().find(|&w| w != prev).unwrap_or(start);
        prev = cur;
        cur = next;
    }
    Ok(walk)
}
