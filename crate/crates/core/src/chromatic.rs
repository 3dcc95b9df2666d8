//! Exact chromatic index by backtracking.
//!
//! Edges are colored in a fixed order (larger endpoint degree first, then
//! lexicographic). A color above the largest one used so far may only be the
//! next unused color, which removes color-permutation symmetry without losing
//! completeness. Forward checking rejects a partial coloring as soon as some
//! uncolored edge has no color left.

use std::sync::Arc;

use crate::budget::Budget;
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) type Mask = u128;
pub(crate) const MAX_COLORS: usize = 128;

/// Edge indices in solver order.
pub(crate) fn edge_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.edge_count()).collect();
    order.sort_by_key(|&i| {
        let (u, v) = g.edges()[i];
        (std::cmp::Reverse(g.degree(u).max(g.degree(v))), u, v)
    });
    order
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// χ' = Δ.
    ClassOne,
    /// χ' = Δ + 1, proved by exhausting every Δ-coloring.
    ClassTwo,
}

#[derive(Clone, Debug)]
pub enum ChromaticIndex {
    Determined {
        verdict: Verdict,
        chromatic_index: usize,
        witness: EdgeColoring,
        nodes: u64,
    },
    /// The budget ran out before a verdict; nothing is claimed.
    Indeterminate { nodes: u64, reason: String },
}

impl ChromaticIndex {
    pub fn value(&self) -> Option<usize> {
        match self {
            ChromaticIndex::Determined { chromatic_index, .. } => Some(*chromatic_index),
            ChromaticIndex::Indeterminate { .. } => None,
        }
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        match self {
            ChromaticIndex::Determined { verdict, .. } => Some(verdict),
            ChromaticIndex::Indeterminate { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match self {
            ChromaticIndex::Determined { witness, .. } => Some(witness),
            ChromaticIndex::Indeterminate { .. } => None,
        }
    }

    pub fn is_class_one(&self) -> bool {
        matches!(self.verdict(), Some(Verdict::ClassOne))
    }

    pub fn is_class_two(&self) -> bool {
        matches!(self.verdict(), Some(Verdict::ClassTwo))
    }
}

pub(crate) enum Search {
    Found(Vec<Color>),
    Exhausted,
    OutOfBudget,
}

struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    order: Vec<usize>,
    colors: Vec<Color>,
    used: Vec<Mask>,
    full: Mask,
}

impl KColoring<'_> {
    fn available(&self, e: usize) -> Mask {
        let (u, v) = self.g.edges()[e];
        !(self.used[u] | self.used[v]) & self.full
    }

    fn neighbors_still_colorable(&self, e: usize) -> bool {
        let (u, v) = self.g.edges()[e];
        for x in [u, v] {
            for &f in self.g.incident_edges(x) {
                if self.colors[f] == 0 && self.available(f) == 0 {
                    return false;
                }
            }
        }
        true
    }

    fn run(&mut self, depth: usize, max_used: usize, meter: &mut crate::budget::Meter) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        if meter.tick() {
            return None;
        }
        let e = self.order[depth];
        let (u, v) = self.g.edges()[e];
        let limit = (max_used + 1).min(self.k);
        let avail = self.available(e);
        for c in 1..=limit {
            let bit: Mask = 1 << (c - 1);
            if avail & bit == 0 {
                continue;
            }
            self.colors[e] = c as Color;
            self.used[u] |= bit;
            self.used[v] |= bit;
            if self.neighbors_still_colorable(e) {
                match self.run(depth + 1, max_used.max(c), meter) {
                    Some(true) => return Some(true),
                    None => {
                        self.undo(e, bit);
                        return None;
                    }
                    Some(false) => {}
                }
            }
            self.undo(e, bit);
        }
        Some(false)
    }

    fn undo(&mut self, e: usize, bit: Mask) {
        let (u, v) = self.g.edges()[e];
        self.colors[e] = 0;
        self.used[u] &= !bit;
        self.used[v] &= !bit;
    }
}

/// Searches for a proper edge coloring with colors in `1..=k`.
pub(crate) fn try_k_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<(Search, u64)> {
    if k > MAX_COLORS {
        return Err(Error::Precondition(format!(
            "at most {MAX_COLORS} colors supported, asked for {k}"
        )));
    }
    if g.max_degree() > k {
        return Ok((Search::Exhausted, 0));
    }
    let full: Mask = if k == MAX_COLORS { Mask::MAX } else { (1 << k) - 1 };
    let mut state = KColoring {
        g,
        k,
        order: edge_order(g),
        colors: vec![0; g.edge_count()],
        used: vec![0; g.vertex_count()],
        full,
    };
    let mut meter = budget.meter();
    let outcome = match state.run(0, 0, &mut meter) {
        Some(true) => Search::Found(state.colors),
        Some(false) => Search::Exhausted,
        None => Search::OutOfBudget,
    };
    Ok((outcome, meter.nodes()))
}

/// Determines χ'(G) ∈ {Δ, Δ+1}.
///
/// A class-two verdict is only returned after every Δ-coloring has been
/// ruled out; running out of budget yields [`ChromaticIndex::Indeterminate`].
pub fn chromatic_index(g: &Graph, budget: &Budget) -> Result<ChromaticIndex> {
    if g.edge_count() == 0 {
        return Err(Error::EmptyGraph("chromatic index needs at least one edge"));
    }
    let delta = g.max_degree();
    let host = Arc::new(g.clone());
    let (first, nodes_a) = try_k_coloring(g, delta, budget)?;
    match first {
        Search::Found(colors) => Ok(ChromaticIndex::Determined {
            verdict: Verdict::ClassOne,
            chromatic_index: delta,
            witness: EdgeColoring::new(host, colors)?,
            nodes: nodes_a,
        }),
        Search::OutOfBudget => Ok(ChromaticIndex::Indeterminate {
            nodes: nodes_a,
            reason: format!("no verdict on {delta}-colorability within budget"),
        }),
        Search::Exhausted => {
            let (second, nodes_b) = try_k_coloring(g, delta + 1, budget)?;
            match second {
                Search::Found(colors) => Ok(ChromaticIndex::Determined {
                    verdict: Verdict::ClassTwo,
                    chromatic_index: delta + 1,
                    witness: EdgeColoring::new(host, colors)?,
                    nodes: nodes_a + nodes_b,
                }),
                Search::OutOfBudget => Ok(ChromaticIndex::Indeterminate {
                    nodes: nodes_a + nodes_b,
                    reason: format!(
                        "not {delta}-colorable, but no {}-coloring found within budget",
                        delta + 1
                    ),
                }),
                Search::Exhausted => Err(Error::Precondition(format!(
                    "no {}-edge-coloring exists; graph violates the Δ+1 bound",
                    delta + 1
                ))),
            }
        }
    }
}

/// A proper coloring with colors `1..=Δ` if the graph is class one within
/// budget. Errors if the graph is class two or the budget runs out.
pub fn class_one_coloring(g: &Graph, budget: &Budget) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return EdgeColoring::new(Arc::new(g.clone()), Vec::new());
    }
    match chromatic_index(g, budget)? {
        ChromaticIndex::Determined {
            verdict: Verdict::ClassOne,
            witness,
            ..
        } => Ok(witness),
        ChromaticIndex::Determined { .. } => Err(Error::Precondition(
            "graph is class 2; a class-1 coloring does not exist".into(),
        )),
        ChromaticIndex::Indeterminate { reason, .. } => Err(Error::BudgetExceeded(reason)),
    }
}

/// A proper coloring with χ'(G) colors.
pub fn optimal_coloring(g: &Graph, budget: &Budget) -> Result<EdgeColoring> {
    if g.edge_count() == 0 {
        return EdgeColoring::new(Arc::new(g.clone()), Vec::new());
    }
    match chromatic_index(g, budget)? {
        ChromaticIndex::Determined { witness, .. } => Ok(witness),
        ChromaticIndex::Indeterminate { reason, .. } => Err(Error::BudgetExceeded(reason)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, hypercube, petersen};

    #[test]
    fn even_cycle_is_class_one() {
        let r = chromatic_index(&cycle(6).unwrap(), &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(2));
        assert!(r.is_class_one());
        assert!(r.witness().unwrap().is_proper());
    }

    #[test]
    fn odd_cycle_is_class_two() {
        let r = chromatic_index(&cycle(5).unwrap(), &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(3));
        assert!(r.is_class_two());
    }

    #[test]
    fn q3_is_class_one() {
        let r = chromatic_index(&hypercube(3).unwrap(), &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(3));
        assert!(r.is_class_one());
    }

    #[test]
    fn petersen_is_class_two() {
        let r = chromatic_index(&petersen(), &Budget::UNLIMITED).unwrap();
        assert_eq!(r.value(), Some(4));
        let w = r.witness().unwrap();
        assert!(w.is_proper());
        assert_eq!(w.max_color(), 4);
    }

    #[test]
    fn complete_graphs() {
        // K_n is class one iff n is even
        for n in 2..=7 {
            let r = chromatic_index(&complete(n).unwrap(), &Budget::UNLIMITED).unwrap();
            assert_eq!(r.is_class_one(), n % 2 == 0, "K_{n}");
        }
    }

    #[test]
    fn tiny_budget_is_indeterminate() {
        let r = chromatic_index(&petersen(), &Budget::nodes(5)).unwrap();
        assert!(matches!(r, ChromaticIndex::Indeterminate { .. }));
        assert!(r.value().is_none());
    }

    #[test]
    fn edgeless_rejected() {
        let g = Graph::new(3, []).unwrap();
        assert!(chromatic_index(&g, &Budget::UNLIMITED).is_err());
    }
}
