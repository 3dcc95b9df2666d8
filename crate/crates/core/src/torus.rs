//! Staircase edge sets of the odd torus `C_s □ C_t` and the six-color,
//! three-palette coloring built from them.
//!
//! Vertex `(j, k)` of the torus is stored at `j * t + k`, matching
//! [`crate::graph::cartesian_product`] of `cycle(s)` and `cycle(t)`.
//! Each staircase `Z_i` starts with `ell` ascending steps, continues with
//! `ell` descending steps, and closes with `t(2h+1)` more descending steps, so
//! it visits every column twice and is a single cycle of length `2s`.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::Serialize;

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{cartesian_product, cycle, Edge, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TorusEdgeKind {
    AscendingVertical,
    DescendingVertical,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TorusEdge {
    pub kind: TorusEdgeKind,
    pub initial: (usize, usize),
    pub s: usize,
    pub t: usize,
}

impl TorusEdge {
    fn new(kind: TorusEdgeKind, j: i64, k: i64, s: usize, t: usize) -> Self {
        TorusEdge {
            kind,
            initial: (j.rem_euclid(s as i64) as usize, k.rem_euclid(t as i64) as usize),
            s,
            t,
        }
    }

    pub fn terminal(&self) -> (usize, usize) {
        let (j, k) = self.initial;
        match self.kind {
            TorusEdgeKind::AscendingVertical => (j, (k + 1) % self.t),
            TorusEdgeKind::DescendingVertical => (j, (k + self.t - 1) % self.t),
            TorusEdgeKind::Horizontal => ((j + 1) % self.s, k),
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.kind == TorusEdgeKind::Horizontal
    }

    /// Endpoints as flat vertices of `C_s □ C_t`, smaller first.
    pub fn as_edge(&self) -> Edge {
        let a = self.initial.0 * self.t + self.initial.1;
        let (j, k) = self.terminal();
        let b = j * self.t + k;
        crate::graph::canonical(a, b)
    }
}

/// `ell = ((s - t) / 2) mod t` and `h = floor((s - t) / (2t))`.
pub fn staircase_params(s: usize, t: usize) -> Result<(usize, usize)> {
    check_dims(s, t)?;
    let half = (s - t) / 2;
    Ok((half % t, half / t))
}

fn check_dims(s: usize, t: usize) -> Result<()> {
    if t < 3 || s < t || s.is_multiple_of(2) || t.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "torus needs odd s >= t >= 3, got s={s}, t={t}"
        )));
    }
    Ok(())
}

/// The staircase `Z_i` of `C_s □ C_t` as a closed walk starting at `(0, i)`.
pub fn z_set(s: usize, t: usize, i: usize) -> Result<Vec<TorusEdge>> {
    let (ell, h) = staircase_params(s, t)?;
    if i >= t {
        return Err(Error::Precondition(format!("index {i} outside 0..{t}")));
    }
    use TorusEdgeKind::*;
    let (ell, i) = (ell as i64, i as i64);
    let tail = (t * (2 * h + 1)) as i64;
    let mut out = Vec::with_capacity(2 * s);
    for j in 0..ell {
        out.push(TorusEdge::new(AscendingVertical, j, i + j, s, t));
        out.push(TorusEdge::new(Horizontal, j, i + j + 1, s, t));
    }
    for j in 0..ell {
        out.push(TorusEdge::new(DescendingVertical, j + ell, i - j + ell, s, t));
        out.push(TorusEdge::new(Horizontal, j + ell, i - j + ell - 1, s, t));
    }
    for j in 0..tail {
        out.push(TorusEdge::new(DescendingVertical, j + 2 * ell, i - j, s, t));
        out.push(TorusEdge::new(Horizontal, j + 2 * ell, i - j - 1, s, t));
    }
    Ok(out)
}

/// Class (0, 1 or 2) of staircase `Z_i`.
///
/// Staircases `Z_i` and `Z_{i+1 mod t}` share vertices, so classes must differ
/// cyclically. Residues mod 3 do that except across the wrap when
/// `t ≡ 1 (mod 3)`, where `Z_{t-1}` and `Z_0` would both get class 0; there
/// `Z_{t-1}` takes class 1.
pub fn staircase_class(i: usize, t: usize) -> usize {
    if t % 3 == 1 && i == t - 1 {
        1
    } else {
        i % 3
    }
}

/// The plain `i mod 3` grouping, kept for comparison: it fails to be an even
/// cycle decomposition when `t ≡ 1 (mod 3)`.
pub fn residue_class(i: usize) -> usize {
    i % 3
}

#[derive(Clone, Debug)]
pub struct TorusDecomposition {
    pub s: usize,
    pub t: usize,
    pub ell: usize,
    pub h: usize,
    pub z_sets: Vec<Vec<TorusEdge>>,
    /// Staircase indices in each of the three classes.
    pub classes: [Vec<usize>; 3],
}

impl TorusDecomposition {
    pub fn class_edges(&self, class: usize) -> Vec<TorusEdge> {
        self.classes[class]
            .iter()
            .flat_map(|&i| self.z_sets[i].iter().copied())
            .collect()
    }
}

/// Checks that `walk` is a single cycle through distinct vertices.
fn check_single_cycle(walk: &[TorusEdge]) -> std::result::Result<(), String> {
    let mut seen = BTreeSet::new();
    for (idx, e) in walk.iter().enumerate() {
        let next = walk[(idx + 1) % walk.len()];
        let (a, b) = (e.as_edge(), next.as_edge());
        let shared = [a.0, a.1].into_iter().find(|x| *x == b.0 || *x == b.1);
        let Some(shared) = shared else {
            return Err(format!("consecutive edges {a:?} and {b:?} are not incident"));
        };
        if !seen.insert(shared) {
            return Err(format!("vertex {shared} visited twice"));
        }
    }
    Ok(())
}

/// Builds every `Z_i`, checks that they partition `E(C_s □ C_t)` into cycles of
/// length `2s`, and groups them into three classes.
pub fn verify_partition(s: usize, t: usize) -> Result<TorusDecomposition> {
    let (ell, h) = staircase_params(s, t)?;
    let host = cartesian_product(&cycle(s)?, &cycle(t)?)?;
    let mut owner = vec![usize::MAX; host.edge_count()];
    let mut z_sets = Vec::with_capacity(t);
    for i in 0..t {
        let z = z_set(s, t, i)?;
        if z.len() != 2 * s {
            return Err(Error::Precondition(format!(
                "Z_{i} has {} edges, expected {}",
                z.len(),
                2 * s
            )));
        }
        for e in &z {
            let (u, v) = e.as_edge();
            let idx = host.edge_index(u, v).ok_or(Error::NotAnEdge((u, v)))?;
            if owner[idx] != usize::MAX {
                return Err(Error::Precondition(format!(
                    "edge ({u}, {v}) lies in Z_{} and Z_{i}",
                    owner[idx]
                )));
            }
            owner[idx] = i;
        }
        check_single_cycle(&z).map_err(|m| Error::Precondition(format!("Z_{i} is not a cycle: {m}")))?;
        z_sets.push(z);
    }
    if let Some(idx) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::Precondition(format!(
            "edge {:?} is not covered",
            host.edges()[idx]
        )));
    }
    let mut classes: [Vec<usize>; 3] = Default::default();
    for i in 0..t {
        classes[staircase_class(i, t)].push(i);
    }
    Ok(TorusDecomposition {
        s,
        t,
        ell,
        h,
        z_sets,
        classes,
    })
}

/// Checks that `edges` induce vertex-disjoint even cycles on `n` vertices.
pub fn is_disjoint_even_cycles(n: usize, edges: &[Edge]) -> bool {
    let Ok(g) = Graph::new(n, edges.iter().copied()) else {
        return false;
    };
    g.components().iter().all(|comp| {
        if comp.len() == 1 {
            return g.degree(comp[0]) == 0;
        }
        comp.iter().all(|&v| g.degree(v) == 2) && comp.len() % 2 == 0
    })
}

/// The three classes `E_0, E_1, E_2`, each checked to be a disjoint union of
/// even cycles.
pub fn even_cycle_classes(s: usize, t: usize) -> Result<[Vec<TorusEdge>; 3]> {
    let dec = verify_partition(s, t)?;
    let classes = [dec.class_edges(0), dec.class_edges(1), dec.class_edges(2)];
    for (j, class) in classes.iter().enumerate() {
        let edges: Vec<Edge> = class.iter().map(TorusEdge::as_edge).collect();
        if !is_disjoint_even_cycles(s * t, &edges) {
            return Err(Error::Precondition(format!(
                "class E_{j} of C_{s} □ C_{t} is not a disjoint union of even cycles"
            )));
        }
    }
    Ok(classes)
}

/// Horizontal edges of class `j` get color `2j + 1`, vertical ones `2j + 2`.
pub fn torus_three_palette_coloring(s: usize, t: usize) -> Result<EdgeColoring> {
    let dec = verify_partition(s, t)?;
    let host = Arc::new(cartesian_product(&cycle(s)?, &cycle(t)?)?);
    let mut colors: Vec<Color> = vec![0; host.edge_count()];
    for (i, z) in dec.z_sets.iter().enumerate() {
        let class = staircase_class(i, t) as Color;
        for e in z {
            let (u, v) = e.as_edge();
            let idx = host.edge_index(u, v).ok_or(Error::NotAnEdge((u, v)))?;
            colors[idx] = if e.is_horizontal() {
                2 * class + 1
            } else {
                2 * class + 2
            };
        }
    }
    EdgeColoring::new(host, colors)
}

/// The palettes every vertex of the torus coloring must have.
pub const TORUS_PALETTES: [[Color; 4]; 3] = [[1, 2, 3, 4], [1, 2, 5, 6], [3, 4, 5, 6]];

#[cfg(test)]
mod tests {
    use super::*;

    fn walk_vertices(z: &[TorusEdge]) -> Vec<(usize, usize)> {
        let mut out = vec![z[0].initial];
        for e in z {
            let (a, b) = (e.initial, e.terminal());
            let last = *out.last().unwrap();
            out.push(if last == a { b } else { a });
        }
        out
    }

    #[test]
    fn params() {
        assert_eq!(staircase_params(13, 5).unwrap(), (4, 0));
        assert_eq!(staircase_params(5, 3).unwrap(), (1, 0));
        assert_eq!(staircase_params(5, 5).unwrap(), (0, 0));
        assert!(staircase_params(4, 3).is_err());
        assert!(staircase_params(3, 5).is_err());
        assert!(z_set(5, 3, 3).is_err());
    }

    #[test]
    fn z_13_5_2_initial_vertices() {
        let z = z_set(13, 5, 2).unwrap();
        // sublists: 2*ell edges, 2*ell edges, rest
        assert_eq!(z[0].initial, (0, 2));
        assert_eq!(z[8].initial, (4, 1));
        assert_eq!(z[16].initial, (8, 2));
        for i in 0..5 {
            assert_eq!(z_set(13, 5, i).unwrap().len(), 26);
        }
    }

    #[test]
    fn z_5_3_0_walk() {
        let z = z_set(5, 3, 0).unwrap();
        let expected = vec![
            (0, 0),
            (0, 1),
            (1, 1),
            (1, 0),
            (2, 0),
            (2, 2),
            (3, 2),
            (3, 1),
            (4, 1),
            (4, 0),
            (0, 0),
        ];
        assert_eq!(walk_vertices(&z), expected);
    }

    #[test]
    fn square_torus_is_pure_descent() {
        let dec = verify_partition(5, 5).unwrap();
        assert_eq!((dec.ell, dec.h), (0, 0));
        for z in &dec.z_sets {
            assert_eq!(z.len(), 10);
            assert!(z.iter().all(|e| e.kind != TorusEdgeKind::AscendingVertical));
        }
    }

    #[test]
    fn c3_c3_and_c13_c5_partitions() {
        let dec = verify_partition(3, 3).unwrap();
        assert_eq!(dec.z_sets.iter().map(Vec::len).sum::<usize>(), 18);
        assert_eq!(dec.classes, [vec![0], vec![1], vec![2]]);
        let dec = verify_partition(13, 5).unwrap();
        assert_eq!(dec.z_sets.iter().map(Vec::len).sum::<usize>(), 130);
        assert_eq!(dec.classes, [vec![0, 3], vec![1, 4], vec![2]]);
    }

    #[test]
    fn every_class_is_even_cycles() {
        for (s, t) in [(13, 5), (3, 3), (7, 7), (13, 13)] {
            let classes = even_cycle_classes(s, t).unwrap();
            let total: usize = classes.iter().map(Vec::len).sum();
            assert_eq!(total, 2 * s * t);
        }
    }

    #[test]
    fn residue_grouping_breaks_when_t_is_1_mod_3() {
        for (s, t) in [(7, 7), (9, 7), (13, 13)] {
            let dec = verify_partition(s, t).unwrap();
            let edges: Vec<Edge> = (0..t)
                .filter(|&i| residue_class(i) == 0)
                .flat_map(|i| dec.z_sets[i].iter().map(TorusEdge::as_edge))
                .collect();
            assert!(!is_disjoint_even_cycles(s * t, &edges));
        }
    }

    #[test]
    fn wrap_incidence() {
        // the last horizontal step of Z_i returns to column 0 next to the first descent
        for (s, t) in [(13, 5), (9, 3), (11, 11)] {
            for i in 0..t {
                let z = z_set(s, t, i).unwrap();
                let last = z.last().unwrap();
                assert!(last.is_horizontal());
                assert_eq!(last.initial, (s - 1, i));
                let first_descent = z
                    .iter()
                    .find(|e| e.kind == TorusEdgeKind::DescendingVertical && e.initial.0 == 0);
                if let Some(d) = first_descent {
                    assert_eq!(last.terminal(), d.initial);
                }
            }
        }
    }

    #[test]
    fn three_palettes_on_5_5() {
        let f = torus_three_palette_coloring(5, 5).unwrap();
        let s = f.palette_summary().unwrap();
        let expected: Vec<Vec<Color>> = TORUS_PALETTES.iter().map(|p| p.to_vec()).collect();
        assert_eq!(s.distinct, expected);
    }
}
