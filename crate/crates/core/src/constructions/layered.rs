//! Colorings of `C_s □ G` and `P_s □ G` built layer by layer: one coloring of
//! `G` per copy plus a color per rung between consecutive copies.

use std::sync::Arc;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle, path, Graph};

use super::smallest_missing;

/// Layer `i` is the copy `{i} × V(G)`; `rungs[i][v]` colors the edge
/// `(i, v)(i + 1, v)`, and when `closed` the last row colors `(s - 1, v)(0, v)`.
#[derive(Clone, Debug)]
pub struct LayeredColoringPlan {
    pub layers: Vec<EdgeColoring>,
    pub rungs: Vec<Vec<Color>>,
    pub closed: bool,
}

impl LayeredColoringPlan {
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// The coloring of `C_s □ G` (closed) or `P_s □ G` described by the plan.
    pub fn realize(&self) -> Result<EdgeColoring> {
        let s = self.layers.len();
        let g = self
            .layers
            .first()
            .ok_or(Error::EmptyGraph("layered plan has no layers"))?
            .host_arc()
            .clone();
        if self.layers.iter().any(|l| l.host() != &*g) {
            return Err(Error::DomainMismatch("layers color different graphs".into()));
        }
        let expected = if self.closed { s } else { s - 1 };
        if self.rungs.len() != expected || self.rungs.iter().any(|r| r.len() != g.vertex_count()) {
            return Err(Error::DomainMismatch(format!("expected {expected} rung rows")));
        }
        let base = if self.closed { cycle(s)? } else { path(s)? };
        let host = Arc::new(cartesian_product(&base, &g)?);
        let n = g.vertex_count();
        let mut colors = Vec::with_capacity(host.edge_count());
        for &(a, b) in host.edges() {
            let (i1, v1) = (a / n, a % n);
            let (i2, v2) = (b / n, b % n);
            let c = if i1 == i2 {
                self.layers[i1].color_of(v1, v2).unwrap_or(0)
            } else if i2 == i1 + 1 {
                self.rungs[i1][v1]
            } else {
                // wrap rung (0, v)(s - 1, v)
                self.rungs[s - 1][v1]
            };
            colors.push(c);
        }
        EdgeColoring::new(host, colors)
    }
}

fn check_odd(s: usize) -> Result<()> {
    if s < 3 || s.is_multiple_of(2) {
        return Err(Error::SizeOutOfRange {
            kind: "layers",
            detail: format!("s must be odd and at least 3, got {s}"),
        });
    }
    Ok(())
}

/// Shared checks for the class-2 layered constructions; returns `r`.
fn check_class2_inputs(g: &EdgeColoring, h: &EdgeColoring, avoid: &[Color]) -> Result<Color> {
    let gg = g.host();
    if !gg.is_regular() || gg.edge_count() == 0 {
        return Err(Error::Precondition("G must be regular with at least one edge".into()));
    }
    if h.host() != gg {
        return Err(Error::DomainMismatch("g and h must color the same graph".into()));
    }
    g.ensure_proper()?;
    h.ensure_proper()?;
    let r = gg.max_degree() as Color;
    if g.max_color() > r + 1 {
        return Err(Error::ColorRange(format!(
            "g must use colors in [{}], found {}",
            r + 1,
            g.max_color()
        )));
    }
    if let Some(c) = h.colors_used().into_iter().find(|c| avoid.contains(c)) {
        return Err(Error::ColorRange(format!("h must avoid colors {avoid:?}, uses {c}")));
    }
    Ok(r)
}

fn class2_plan(s: usize, g: &EdgeColoring, h: &EdgeColoring, r: Color, closed: bool) -> LayeredColoringPlan {
    let n = g.host().vertex_count();
    let missing: Vec<Color> = (0..n).map(|v| smallest_missing(&g.palette_at(v), r + 1)).collect();
    let mut layers = vec![g.clone(); s - 1];
    layers.push(h.clone());
    let mut rungs: Vec<Vec<Color>> = (0..s - 1)
        .map(|i| if i % 2 == 0 { missing.clone() } else { vec![r + 2; n] })
        .collect();
    if closed {
        rungs.push(vec![r + 3; n]);
    }
    LayeredColoringPlan { layers, rungs, closed }
}

/// `C_s □ G` for odd `s` and `r`-regular `G` with a proper coloring `g` in
/// `[r + 1]` and any proper coloring `h` avoiding `r + 2` and `r + 3`.
///
/// Palettes: `[r + 2]` on interior layers, `[r + 1] ∪ {r + 3}` on layer 0 and
/// `P_h(v) ∪ {r + 2, r + 3}` on layer `s - 1`.
pub fn cycle_times_regular_coloring(s: usize, g: &EdgeColoring, h: &EdgeColoring) -> Result<EdgeColoring> {
    check_odd(s)?;
    let r = check_class2_inputs(g, h, &[])?;
    check_class2_inputs(g, h, &[r + 2, r + 3])?;
    class2_plan(s, g, h, r, true).realize()
}

/// `P_s □ G`, the cycle construction without the wrap rungs.
///
/// Palettes: `[r + 2]` inside, `[r + 1]` on layer 0, `P_h(v) ∪ {r + 2}` on
/// layer `s - 1`.
pub fn path_times_regular_coloring(s: usize, g: &EdgeColoring, h: &EdgeColoring) -> Result<EdgeColoring> {
    check_odd(s)?;
    let r = check_class2_inputs(g, h, &[])?;
    check_class2_inputs(g, h, &[r + 2])?;
    class2_plan(s, g, h, r, false).realize()
}

/// `P_s □ G` with two palettes for odd `s` and class-1 `r`-regular `G`.
///
/// `g` is a coloring of `G` in `[r]`; it is shifted to `{3, ..., r + 2}`.
/// Color `c` of the shifted coloring (default `r + 2`) becomes 2 on layer 0
/// and 1 on layer `s - 1`; rungs out of odd layers are 1 downward and 2
/// upward.
pub fn path_times_class1_regular_coloring(s: usize, g: &EdgeColoring, c: Option<Color>) -> Result<EdgeColoring> {
    check_odd(s)?;
    let gg: &Graph = g.host();
    if !gg.is_regular() || gg.edge_count() == 0 {
        return Err(Error::Precondition("G must be regular with at least one edge".into()));
    }
    g.ensure_proper()?;
    let r = gg.max_degree() as Color;
    if g.max_color() > r {
        return Err(Error::Precondition(format!(
            "g must be a class-1 coloring in [{r}], found color {}",
            g.max_color()
        )));
    }
    let c = c.unwrap_or(r + 2);
    if !(3..=r + 2).contains(&c) {
        return Err(Error::ColorRange(format!("c must lie in 3..={}, got {c}", r + 2)));
    }
    let shifted = g.map_colors(|x| x + 2)?;
    let first = shifted.map_colors(|x| if x == c { 2 } else { x })?;
    let last = shifted.map_colors(|x| if x == c { 1 } else { x })?;
    let n = gg.vertex_count();
    let mut layers = vec![shifted; s];
    layers[0] = first;
    layers[s - 1] = last;
    let rungs = (0..s - 1).map(|i| vec![if i % 2 == 1 { 2 } else { 1 }; n]).collect();
    LayeredColoringPlan {
        layers,
        rungs,
        closed: false,
    }
    .realize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::Budget;
    use crate::chromatic::{class_one_coloring, optimal_coloring};
    use crate::graph::{complete, hypercube};

    fn c3() -> EdgeColoring {
        optimal_coloring(&cycle(3).unwrap(), &Budget::UNLIMITED).unwrap()
    }

    #[test]
    fn c5_times_c3_palette_families() {
        let g = c3();
        let f = cycle_times_regular_coloring(5, &g, &g).unwrap();
        let n = 3;
        for i in 0..5 {
            for v in 0..n {
                let p = f.palette_at(i * n + v);
                let expected = match i {
                    0 => vec![1, 2, 3, 5],
                    4 => {
                        let mut p = g.palette_at(v);
                        p.extend([4, 5]);
                        p
                    }
                    _ => vec![1, 2, 3, 4],
                };
                assert_eq!(p, expected, "layer {i} vertex {v}");
            }
        }
        assert!(f.palette_count().unwrap() <= 5);
    }

    #[test]
    fn path_layer_zero_is_full_range() {
        let g = c3();
        let f = path_times_regular_coloring(3, &g, &g).unwrap();
        for v in 0..3 {
            assert_eq!(f.palette_at(v), vec![1, 2, 3]);
        }
    }

    #[test]
    fn even_s_rejected() {
        let g = c3();
        assert!(cycle_times_regular_coloring(4, &g, &g).is_err());
        assert!(path_times_regular_coloring(6, &g, &g).is_err());
    }

    #[test]
    fn h_must_avoid_rung_colors() {
        let g = c3();
        let h = g.map_colors(|c| if c == 3 { 4 } else { c }).unwrap();
        assert!(matches!(
            cycle_times_regular_coloring(3, &g, &h),
            Err(Error::ColorRange(_))
        ));
    }

    #[test]
    fn p5_times_c4_two_palettes() {
        let g = class_one_coloring(&cycle(4).unwrap(), &Budget::UNLIMITED).unwrap();
        let f = path_times_class1_regular_coloring(5, &g, Some(4)).unwrap();
        let s = f.palette_summary().unwrap();
        assert_eq!(s.distinct, vec![vec![1, 2, 3], vec![1, 2, 3, 4]]);
    }

    #[test]
    fn p3_times_k2() {
        let g = class_one_coloring(&complete(2).unwrap(), &Budget::UNLIMITED).unwrap();
        let f = path_times_class1_regular_coloring(3, &g, None).unwrap();
        let s = f.palette_summary().unwrap();
        assert_eq!(s.distinct, vec![vec![1, 2], vec![1, 2, 3]]);
    }

    #[test]
    fn class2_base_rejected() {
        let g = c3();
        assert!(path_times_class1_regular_coloring(3, &g, None).is_err());
        let q3 = class_one_coloring(&hypercube(3).unwrap(), &Budget::UNLIMITED).unwrap();
        assert!(path_times_class1_regular_coloring(3, &q3, Some(2)).is_err());
    }
}
