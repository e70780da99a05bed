//! Partial and total vertex colorings, dominance analysis, b-coloring
//! verification, and the dominant-free class-collapse procedure.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Colors are 1-based integers in `[1, palette]`.
pub type Color = usize;

/// A vertex coloring over a fixed palette. Assignments may be partial;
/// totality is a checkable predicate, not a structural invariant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    assignment: Vec<Option<Color>>,
    palette: usize,
}

impl Coloring {
    /// Fully unassigned coloring on `n` vertices.
    pub fn empty(n: usize, palette: usize) -> Self {
        Coloring {
            assignment: vec![None; n],
            palette,
        }
    }

    /// Total coloring from explicit per-vertex colors.
    pub fn total(colors: &[Color], palette: usize) -> Result<Self> {
        let mut coloring = Coloring::empty(colors.len(), palette);
        for (v, &c) in colors.iter().enumerate() {
            coloring.set(v, c)?;
        }
        Ok(coloring)
    }

    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    pub fn get(&self, v: VertexId) -> Option<Color> {
        self.assignment.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: VertexId, c: Color) -> Result<()> {
        if v >= self.assignment.len() {
            return Err(Error::VertexOutOfRange(v, self.assignment.len()));
        }
        if c == 0 || c > self.palette {
            return Err(Error::ColorOutOfRange(c, self.palette));
        }
        self.assignment[v] = Some(c);
        Ok(())
    }

    pub fn unset(&mut self, v: VertexId) {
        self.assignment[v] = None;
    }

    pub fn is_total(&self) -> bool {
        self.assignment.iter().all(Option::is_some)
    }

    pub fn assigned_count(&self) -> usize {
        self.assignment.iter().filter(|c| c.is_some()).count()
    }

    /// Vertices carrying color `c`, ascending.
    pub fn class(&self, c: Color) -> Vec<VertexId> {
        self.assignment
            .iter()
            .enumerate()
            .filter(|(_, col)| **col == Some(c))
            .map(|(v, _)| v)
            .collect()
    }

    /// Colors that appear on at least one vertex, ascending.
    pub fn used_colors(&self) -> BTreeSet<Color> {
        self.assignment.iter().flatten().copied().collect()
    }

    /// Colors on the assigned neighbors of `v`.
    pub fn neighbor_colors(&self, g: &Graph, v: VertexId) -> BTreeSet<Color> {
        g.neighbors(v).iter().filter_map(|&w| self.get(w)).collect()
    }
}

/// Dominant vertices and colors of a total coloring, with one witness
/// vertex per dominant color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominanceProfile {
    pub dominant_vertices: BTreeSet<VertexId>,
    pub dominant_colors: BTreeSet<Color>,
    pub per_color_witness: BTreeMap<Color, Option<VertexId>>,
}

/// True iff no edge joins two vertices of the same color. Partial
/// colorings are allowed: only edges with both ends assigned count.
pub fn is_proper(g: &Graph, col: &Coloring) -> bool {
    bad_edges(g, col).is_empty()
}

/// All monochromatic edges as `(u, v, shared color)` with `u < v`,
/// lexicographically ordered.
pub fn bad_edges(g: &Graph, col: &Coloring) -> Vec<(VertexId, VertexId, Color)> {
    g.edges()
        .filter_map(|(u, v)| match (col.get(u), col.get(v)) {
            (Some(a), Some(b)) if a == b => Some((u, v, a)),
            _ => None,
        })
        .collect()
}

/// True iff `v` has a neighbor in every color class other than its own.
/// Requires `v` and all of `N(v)` to be assigned.
pub fn is_dominant_vertex(g: &Graph, col: &Coloring, v: VertexId) -> Result<bool> {
    let own = col.get(v).ok_or(Error::UnassignedVertex(v))?;
    let mut seen = vec![false; col.palette() + 1];
    for &w in g.neighbors(v) {
        let c = col.get(w).ok_or(Error::UnassignedVertex(w))?;
        seen[c] = true;
    }
    Ok((1..=col.palette()).all(|c| c == own || seen[c]))
}

/// Like [`is_dominant_vertex`] but usable on partial colorings: `None`
/// when `v` or some neighbor is unassigned.
pub fn dominance_status(g: &Graph, col: &Coloring, v: VertexId) -> Option<bool> {
    let own = col.get(v)?;
    let mut seen = vec![false; col.palette() + 1];
    for &w in g.neighbors(v) {
        seen[col.get(w)?] = true;
    }
    Some((1..=col.palette()).all(|c| c == own || seen[c]))
}

/// Dominant colors witnessed by vertices whose closed neighborhood is
/// fully assigned. On a total coloring this is the set of dominant colors.
pub fn dominant_colors_partial(g: &Graph, col: &Coloring) -> BTreeSet<Color> {
    (0..g.n())
        .filter(|&v| dominance_status(g, col, v) == Some(true))
        .filter_map(|v| col.get(v))
        .collect()
}

/// Scans every vertex of a total coloring and reports the dominant
/// vertices, the dominant colors, and the lowest-index witness per color.
pub fn dominance_profile(g: &Graph, col: &Coloring) -> Result<DominanceProfile> {
    if let Some(v) = (0..col.n()).find(|&v| col.get(v).is_none()) {
        return Err(Error::UnassignedVertex(v));
    }
    let mut profile = DominanceProfile {
        dominant_vertices: BTreeSet::new(),
        dominant_colors: BTreeSet::new(),
        per_color_witness: BTreeMap::new(),
    };
    for v in 0..g.n() {
        if is_dominant_vertex(g, col, v)? {
            let c = col.get(v).unwrap();
            profile.dominant_vertices.insert(v);
            profile.dominant_colors.insert(c);
            profile.per_color_witness.entry(c).or_insert(Some(v));
        }
    }
    Ok(profile)
}

/// True iff `col` is a proper total coloring with palette `k`, every
/// color used, and every color class holding a dominant vertex.
/// An unused palette color is an input error: compact the palette first.
pub fn is_b_coloring(g: &Graph, col: &Coloring, k: usize) -> Result<bool> {
    if let Some(v) = (0..col.n()).find(|&v| col.get(v).is_none()) {
        return Err(Error::UnassignedVertex(v));
    }
    if col.palette() != k {
        return Err(Error::ColorOutOfRange(k, col.palette()));
    }
    let used = col.used_colors();
    if let Some(c) = (1..=k).find(|c| !used.contains(c)) {
        return Err(Error::UnusedColor(c));
    }
    if !is_proper(g, col) {
        return Ok(false);
    }
    let profile = dominance_profile(g, col)?;
    Ok((1..=k).all(|c| profile.dominant_colors.contains(&c)))
}

/// Repeatedly eliminates the smallest color class with no dominant vertex:
/// each member (ascending) is recolored with the smallest other color
/// absent from its neighborhood, then colors above the eliminated one
/// shift down so the palette stays contiguous. Returns the resulting
/// b-coloring and its class count.
pub fn collapse_non_dominant(g: &Graph, col: &Coloring) -> Result<(Coloring, usize)> {
    if let Some(v) = (0..col.n()).find(|&v| col.get(v).is_none()) {
        return Err(Error::UnassignedVertex(v));
    }
    let bad = bad_edges(g, col);
    if !bad.is_empty() {
        return Err(Error::ImproperColoring(bad.len()));
    }
    if col.n() == 0 {
        return Ok((col.clone(), 0));
    }
    let mut current = col.clone();
    loop {
        let profile = dominance_profile(g, &current)?;
        let palette = current.palette();
        let Some(victim) = (1..=palette).find(|c| !profile.dominant_colors.contains(c)) else {
            return Ok((current.clone(), palette));
        };
        for v in current.class(victim) {
            let neighbor_colors = current.neighbor_colors(g, v);
            let replacement = (1..=palette)
                .find(|c| *c != victim && !neighbor_colors.contains(c))
                .expect("a vertex in a dominant-free class misses some other color");
            current.set(v, replacement)?;
        }
        // Shift the classes above the now-empty victim down by one.
        let mut next = Coloring::empty(current.n(), palette - 1);
        for v in 0..current.n() {
            let c = current.get(v).unwrap();
            next.set(v, if c > victim { c - 1 } else { c })?;
        }
        current = next;
    }
}
