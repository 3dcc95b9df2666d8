//! Reference palette index by plain enumeration.
//!
//! Every proper edge coloring is, up to renaming colors, a partition of the
//! edge set into matchings. This enumerates those partitions as restricted
//! growth strings over the edges in index order and takes the minimum palette
//! count. No ordering heuristics, no palette pruning: it exists to cross-check
//! [`super::palette_index_exact`] on small graphs.

use crate::graph::Graph;

/// Exact palette index; `None` if the graph has more than `max_edges` edges.
pub fn naive_palette_index(g: &Graph, max_edges: usize) -> Option<usize> {
    let m = g.edge_count();
    if m > max_edges {
        return None;
    }
    if m == 0 {
        return Some(1.min(g.vertex_count()));
    }
    let mut block = vec![0usize; m];
    let mut best = usize::MAX;
    enumerate(g, 0, 0, &mut block, &mut best);
    Some(best)
}

fn enumerate(g: &Graph, i: usize, blocks: usize, block: &mut [usize], best: &mut usize) {
    let edges = g.edges();
    if i == edges.len() {
        *best = (*best).min(count_palettes(g, block));
        return;
    }
    let (u, v) = edges[i];
    for b in 0..=blocks {
        // block b must stay a matching
        let clash = (0..i).any(|j| {
            block[j] == b && {
                let (x, y) = edges[j];
                x == u || x == v || y == u || y == v
            }
        });
        if clash {
            continue;
        }
        block[i] = b;
        enumerate(g, i + 1, blocks.max(b + 1), block, best);
    }
}

fn count_palettes(g: &Graph, block: &[usize]) -> usize {
    let mut palettes: Vec<Vec<usize>> = (0..g.vertex_count())
        .map(|v| {
            let mut p: Vec<usize> = g.incident_edges(v).iter().map(|&e| block[e]).collect();
            p.sort_unstable();
            p
        })
        .collect();
    palettes.sort();
    palettes.dedup();
    palettes.len()
}
