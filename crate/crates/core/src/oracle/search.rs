//! Backtracking search for proper edge colorings with few distinct palettes.

use std::collections::HashMap;

use crate::budget::{Budget, Meter};
use crate::chromatic::{edge_order, Mask, MAX_COLORS};
use crate::coloring::{Color, Palette};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub(crate) enum Outcome {
    Found(Vec<Color>),
    Infeasible,
    OutOfBudget,
}

pub(crate) fn palette_mask(p: &[Color]) -> Mask {
    p.iter().fold(0, |m, &c| m | (1 << (c - 1)))
}

/// Searches for a proper coloring whose palettes, together with the `pool`
/// palettes already in use elsewhere, number at most `target`.
///
/// Colors named by the pool keep their identity; colors beyond them are
/// introduced in ascending order of first use.
pub(crate) struct PaletteSearch<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    target: usize,
    named: usize,
    max_label: usize,
    colors: Vec<Color>,
    used: Vec<Mask>,
    remaining: Vec<usize>,
    palettes: HashMap<Mask, usize>,
}

impl<'a> PaletteSearch<'a> {
    pub(crate) fn new(g: &'a Graph, target: usize, pool: &[Palette]) -> Result<Self> {
        let delta = g.max_degree();
        let named = pool.iter().flatten().copied().max().unwrap_or(0) as usize;
        // at most `target` palettes of at most Δ colors each
        let max_label = named + target * delta;
        if named > MAX_COLORS || pool.iter().flatten().any(|&c| c == 0) {
            return Err(Error::ColorRange(format!("pool colors must lie in 1..={MAX_COLORS}")));
        }
        let max_label = max_label.min(MAX_COLORS);
        let mut palettes = HashMap::new();
        for p in pool {
            // pinned entries never leave the multiset
            palettes.insert(palette_mask(p), usize::MAX / 2);
        }
        Ok(PaletteSearch {
            g,
            order: edge_order(g),
            target,
            named,
            max_label,
            colors: vec![0; g.edge_count()],
            used: vec![0; g.vertex_count()],
            remaining: (0..g.vertex_count()).map(|v| g.degree(v)).collect(),
            palettes,
        })
    }

    pub(crate) fn run(mut self, budget: &Budget) -> (Outcome, u64) {
        let mut meter = budget.meter();
        if self.palettes.len() > self.target {
            return (Outcome::Infeasible, 0);
        }
        // isolated vertices have the empty palette
        for v in 0..self.g.vertex_count() {
            if self.g.degree(v) == 0 {
                *self.palettes.entry(0).or_insert(0) += 1;
            }
        }
        if self.palettes.len() > self.target {
            return (Outcome::Infeasible, 0);
        }
        let out = match self.dfs(0, 0, &mut meter) {
            Some(true) => Outcome::Found(self.colors),
            Some(false) => Outcome::Infeasible,
            None => Outcome::OutOfBudget,
        };
        (out, meter.nodes())
    }

    fn add_palette(&mut self, m: Mask) {
        *self.palettes.entry(m).or_insert(0) += 1;
    }

    fn remove_palette(&mut self, m: Mask) {
        if let Some(cnt) = self.palettes.get_mut(&m) {
            *cnt -= 1;
            if *cnt == 0 {
                self.palettes.remove(&m);
            }
        }
    }

    /// An incomplete vertex whose partial palette fits no existing palette
    /// of its size will add a new one.
    fn forces_new_palette(&self, x: usize) -> bool {
        let need = self.g.degree(x) as u32;
        let have = self.used[x];
        !self
            .palettes
            .keys()
            .any(|&p| p.count_ones() == need && p & have == have)
    }

    fn dfs(&mut self, depth: usize, max_used: usize, meter: &mut Meter) -> Option<bool> {
        if depth == self.order.len() {
            return Some(true);
        }
        if meter.tick() {
            return None;
        }
        let e = self.order[depth];
        let (u, v) = self.g.edges()[e];
        let blocked = self.used[u] | self.used[v];
        let limit = (max_used.max(self.named) + 1).min(self.max_label);
        for c in 1..=limit {
            let bit: Mask = 1 << (c - 1);
            if blocked & bit != 0 {
                continue;
            }
            self.colors[e] = c as Color;
            self.used[u] |= bit;
            self.used[v] |= bit;
            self.remaining[u] -= 1;
            self.remaining[v] -= 1;
            let mut completed = [None, None];
            for (slot, x) in [u, v].into_iter().enumerate() {
                if self.remaining[x] == 0 {
                    let m = self.used[x];
                    self.add_palette(m);
                    completed[slot] = Some(m);
                }
            }
            let mut ok = self.palettes.len() <= self.target;
            if ok && self.palettes.len() == self.target {
                ok = [u, v]
                    .into_iter()
                    .all(|x| self.remaining[x] == 0 || !self.forces_new_palette(x));
            }
            let mut result = Some(false);
            if ok {
                result = self.dfs(depth + 1, max_used.max(c), meter);
            }
            if result == Some(true) {
                return result;
            }
            for m in completed.into_iter().flatten() {
                self.remove_palette(m);
            }
            self.remaining[u] += 1;
            self.remaining[v] += 1;
            self.used[u] &= !bit;
            self.used[v] &= !bit;
            self.colors[e] = 0;
            result?;
        }
        Some(false)
    }
}
