//! Two-palette colorings of `(G' - X) □ H` for class-1 nearly regular graphs.

use std::sync::Arc;

use crate::budget::Budget;
use crate::chromatic::class_one_coloring;
use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{canonical, cartesian_product, remove_edges, Edge, Graph};
use crate::matching::{all_perfect_matchings, Matching};

use super::class1_product_coloring;

/// A class-1 nearly regular graph `G' - X` together with the data that makes
/// the two-palette construction work.
#[derive(Clone, Debug)]
pub struct NrgSpec {
    g_prime: Arc<Graph>,
    degree: usize,
    matching: Matching,
    removed: Vec<Edge>,
    base_coloring: EdgeColoring,
}

impl NrgSpec {
    /// Validates a fully specified instance: `G'` connected and `r`-regular,
    /// `M` perfect, `∅ ≠ X ⊊ M`, and `base` a proper `r`-coloring of `G'`
    /// with every edge of `X` colored `r`.
    pub fn new(matching: Matching, removed: &[Edge], base: EdgeColoring) -> Result<Self> {
        let g_prime = base.host_arc().clone();
        let profile = g_prime.degree_profile();
        if !profile.regular || profile.max_degree == 0 {
            return Err(Error::Precondition("G' must be regular and nontrivial".into()));
        }
        if !g_prime.is_connected() {
            return Err(Error::Disconnected);
        }
        let r = profile.max_degree;
        let checked = Matching::new(&g_prime, matching.edges().iter().copied())?;
        if !checked.is_perfect() {
            return Err(Error::NotPerfect);
        }
        let mut removed: Vec<Edge> = removed.iter().map(|&(u, v)| canonical(u, v)).collect();
        removed.sort_unstable();
        removed.dedup();
        if removed.is_empty() {
            return Err(Error::Precondition(
                "X must be nonempty; G' - X would be regular".into(),
            ));
        }
        if let Some(&e) = removed.iter().find(|&&(u, v)| !checked.contains(u, v)) {
            return Err(Error::Precondition(format!("removed edge {e:?} is not in M")));
        }
        if removed.len() == checked.len() {
            return Err(Error::Precondition("X must be a proper subset of M".into()));
        }
        base.ensure_proper()?;
        if base.max_color() as usize > r {
            return Err(Error::ColorRange(format!(
                "base coloring must use colors in [{r}], found {}",
                base.max_color()
            )));
        }
        for &(u, v) in &removed {
            if base.color_of(u, v) != Some(r as Color) {
                return Err(Error::ColorRange(format!(
                    "removed edge ({u}, {v}) must have color {r} in the base coloring"
                )));
            }
        }
        Ok(NrgSpec {
            g_prime,
            degree: r,
            matching: checked,
            removed,
            base_coloring: base,
        })
    }

    /// Builds the base coloring: an `(r-1)`-coloring of `G' - M` from the
    /// solver, plus color `r` on `M`. Fails if `G' - M` is not class 1.
    pub fn derive(g_prime: &Graph, matching: &Matching, removed: &[Edge], budget: &Budget) -> Result<Self> {
        let host = Arc::new(g_prime.clone());
        let r = g_prime.max_degree() as Color;
        let rest = remove_edges(g_prime, matching.edges())?;
        let rest_coloring = class_one_coloring(&rest, budget)
            .map_err(|e| Error::Precondition(format!("G' - M must be class 1: {e}")))?;
        let colors: Vec<Color> = g_prime
            .edges()
            .iter()
            .map(|&(u, v)| {
                if matching.contains(u, v) {
                    r
                } else {
                    rest_coloring.color_of(u, v).unwrap_or(0)
                }
            })
            .collect();
        let base = EdgeColoring::new(host, colors)?;
        NrgSpec::new(matching.clone(), removed, base)
    }

    pub fn g_prime(&self) -> &Graph {
        &self.g_prime
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn removed(&self) -> &[Edge] {
        &self.removed
    }

    pub fn base_coloring(&self) -> &EdgeColoring {
        &self.base_coloring
    }

    /// The nearly regular graph `G' - X`.
    pub fn graph(&self) -> Result<Graph> {
        remove_edges(&self.g_prime, &self.removed)
    }
}

/// Perfect matchings `M` of `g_prime` for which `G' - M` is class 1.
pub fn qualifying_matchings(g_prime: &Graph, budget: &Budget) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    for m in all_perfect_matchings(g_prime) {
        let rest = remove_edges(g_prime, m.edges())?;
        match class_one_coloring(&rest, budget) {
            Ok(_) => out.push(m),
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(out)
}

/// A proper coloring of `(G' - X) □ H` with exactly two palettes,
/// `[r + r']` and `[r + r' - 1]`, for `H` `r'`-regular.
///
/// `h` uses `[r']` or `[r' + 1]`. In the second case base color 1 is the
/// recolored class; removed edges keep color `r + r'`.
pub fn nrg_product_coloring(spec: &NrgSpec, h: &EdgeColoring) -> Result<EdgeColoring> {
    let hh = h.host();
    if !hh.is_regular() {
        return Err(Error::Precondition("H must be regular".into()));
    }
    let r_h = hh.max_degree() as Color;
    let class_two = h.max_color() > r_h;
    if class_two && spec.degree < 2 {
        return Err(Error::Precondition("class-2 branch needs r >= 2".into()));
    }
    let full = class1_product_coloring(&spec.base_coloring, h, Some(1))?;
    let host = Arc::new(cartesian_product(&spec.graph()?, hh)?);
    let colors = host
        .edges()
        .iter()
        .map(|&(a, b)| {
            full.color_of(a, b)
                .ok_or_else(|| Error::DomainMismatch("edge missing from G' □ H".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeColoring::new(host, colors)
}
