//! Edge colorings, properness, palettes, and the two coloring compositions
//! that do not depend on any special structure of the factors.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{canonical, cartesian_product, Edge, Graph, Vertex};
use crate::matching::Matching;

pub type Color = u32;

/// A sorted color set.
pub type Palette = Vec<Color>;

/// A total map from the edges of `host` to positive colors.
///
/// Properness is not assumed; ask [`EdgeColoring::check_proper`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    host: Arc<Graph>,
    colors: Vec<Color>,
}

/// Two incident edges that share a color.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub first: Edge,
    pub second: Edge,
    pub color: Color,
}

impl From<Violation> for Error {
    fn from(v: Violation) -> Self {
        Error::Improper {
            first: v.first,
            second: v.second,
            color: v.color,
        }
    }
}

impl EdgeColoring {
    /// `colors[i]` is the color of `host.edges()[i]`.
    pub fn new(host: Arc<Graph>, colors: Vec<Color>) -> Result<Self> {
        if colors.len() != host.edge_count() {
            return Err(Error::DomainMismatch(format!(
                "{} colors for {} edges",
                colors.len(),
                host.edge_count()
            )));
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            return Err(Error::ZeroColor(host.edges()[i]));
        }
        Ok(EdgeColoring { host, colors })
    }

    /// Builds a coloring from `(u, v, color)` triples that must cover every
    /// edge of `host` exactly once.
    pub fn from_triples(host: Arc<Graph>, triples: &[(Vertex, Vertex, Color)]) -> Result<Self> {
        let mut colors = vec![0; host.edge_count()];
        for &(u, v, c) in triples {
            let idx = host
                .edge_index(u, v)
                .ok_or_else(|| Error::DomainMismatch(format!("({u}, {v}) is not a host edge")))?;
            if colors[idx] != 0 {
                return Err(Error::DomainMismatch(format!("edge ({u}, {v}) colored twice")));
            }
            if c == 0 {
                return Err(Error::ZeroColor(canonical(u, v)));
            }
            colors[idx] = c;
        }
        if let Some(i) = colors.iter().position(|&c| c == 0) {
            let (u, v) = host.edges()[i];
            return Err(Error::DomainMismatch(format!("edge ({u}, {v}) has no color")));
        }
        Ok(EdgeColoring { host, colors })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn host_arc(&self) -> &Arc<Graph> {
        &self.host
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn color_of(&self, u: Vertex, v: Vertex) -> Option<Color> {
        self.host.edge_index(u, v).map(|i| self.colors[i])
    }

    /// `(u, v, color)` in canonical edge order.
    pub fn triples(&self) -> Vec<(Vertex, Vertex, Color)> {
        self.host
            .edges()
            .iter()
            .zip(&self.colors)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect()
    }

    pub fn colors_used(&self) -> BTreeSet<Color> {
        self.colors.iter().copied().collect()
    }

    pub fn max_color(&self) -> Color {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// The first pair of incident edges sharing a color, scanning vertices in
    /// order, or `None` if the coloring is proper.
    pub fn check_proper(&self) -> Option<Violation> {
        for v in 0..self.host.vertex_count() {
            let mut seen: BTreeMap<Color, usize> = BTreeMap::new();
            for &e in self.host.incident_edges(v) {
                let c = self.colors[e];
                if let Some(&prev) = seen.get(&c) {
                    return Some(Violation {
                        first: self.host.edges()[prev],
                        second: self.host.edges()[e],
                        color: c,
                    });
                }
                seen.insert(c, e);
            }
        }
        None
    }

    pub fn is_proper(&self) -> bool {
        self.check_proper().is_none()
    }

    pub fn ensure_proper(&self) -> Result<()> {
        match self.check_proper() {
            Some(v) => Err(v.into()),
            None => Ok(()),
        }
    }

    /// Colors at `v`, sorted, without checking properness.
    pub fn palette_at(&self, v: Vertex) -> Palette {
        let mut p: Palette = self.host.incident_edges(v).iter().map(|&e| self.colors[e]).collect();
        p.sort_unstable();
        p.dedup();
        p
    }

    pub fn palette_summary(&self) -> Result<PaletteSummary> {
        self.ensure_proper()?;
        let palette_of: Vec<Palette> = (0..self.host.vertex_count()).map(|v| self.palette_at(v)).collect();
        let distinct: BTreeSet<Palette> = palette_of.iter().cloned().collect();
        let distinct: Vec<Palette> = distinct.into_iter().collect();
        Ok(PaletteSummary {
            count: distinct.len(),
            palette_of,
            distinct,
        })
    }

    /// Number of distinct palettes; errors on improper colorings.
    pub fn palette_count(&self) -> Result<usize> {
        Ok(self.palette_summary()?.count)
    }

    /// Applies `map` to every color.
    pub fn map_colors(&self, map: impl Fn(Color) -> Color) -> Result<Self> {
        EdgeColoring::new(self.host.clone(), self.colors.iter().map(|&c| map(c)).collect())
    }
}

/// Per-vertex palettes of a proper coloring and their distinct values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaletteSummary {
    pub palette_of: Vec<Palette>,
    /// Sorted lexicographically.
    pub distinct: Vec<Palette>,
    pub count: usize,
}

/// Colors the edges of `M` with `fresh` and keeps `base` elsewhere.
///
/// `base` must color exactly `G - M`; every palette gains `fresh`, so the
/// number of distinct palettes cannot grow.
pub fn extend_by_matching(
    base: &EdgeColoring,
    host: Arc<Graph>,
    matching: &Matching,
    fresh: Color,
) -> Result<EdgeColoring> {
    if fresh == 0 {
        return Err(Error::ZeroColor(matching.edges().first().copied().unwrap_or((0, 0))));
    }
    if base.colors.contains(&fresh) {
        return Err(Error::ColorInUse(fresh));
    }
    let checked = Matching::new(&host, matching.edges().iter().copied())?;
    if !checked.is_perfect() {
        return Err(Error::NotPerfect);
    }
    if base.host.vertex_count() != host.vertex_count() || base.host.edge_count() + checked.len() != host.edge_count() {
        return Err(Error::DomainMismatch("base coloring must cover exactly G - M".into()));
    }
    let mut colors = Vec::with_capacity(host.edge_count());
    for &(u, v) in host.edges() {
        if checked.contains(u, v) {
            colors.push(fresh);
        } else {
            let c = base
                .color_of(u, v)
                .ok_or_else(|| Error::DomainMismatch(format!("edge ({u}, {v}) missing from base coloring")))?;
            colors.push(c);
        }
    }
    EdgeColoring::new(host, colors)
}

/// Colors `G □ H` by copying `g` onto the G-fibers and `h`, shifted past the
/// largest color of `g`, onto the H-fibers.
pub fn disjoint_product_coloring(g: &EdgeColoring, h: &EdgeColoring) -> Result<EdgeColoring> {
    g.ensure_proper()?;
    h.ensure_proper()?;
    let offset = g.max_color();
    let product = Arc::new(cartesian_product(g.host(), h.host())?);
    let nh = h.host().vertex_count();
    let mut colors = Vec::with_capacity(product.edge_count());
    for &(a, b) in product.edges() {
        let (x1, z1) = (a / nh, a % nh);
        let (x2, z2) = (b / nh, b % nh);
        let c = if z1 == z2 {
            g.color_of(x1, x2)
        } else {
            debug_assert_eq!(x1, x2);
            h.color_of(z1, z2).map(|c| c + offset)
        };
        colors.push(c.ok_or_else(|| Error::DomainMismatch("product edge without factor edge".into()))?);
    }
    EdgeColoring::new(product, colors)
}
