//! The (K, F) frame: a colored region K, an active vertex, and its freshly
//! colored neighborhood F. Bad edges between F and K are eliminated by a
//! catalog of color-switching moves, each validated before it is committed:
//! a move must remove its target edge, create no new bad edge anywhere,
//! keep protected colors non-dominant inside K, leave pinned vertices
//! untouched, and preserve the dominance already achieved.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::coloring::{self, Color, Coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// One atomic recoloring step from the repair catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RepairMove {
    /// Exchange the colors of two F-vertices, or recolor `u` alone when
    /// the target color does not occur in F.
    Swap {
        u: VertexId,
        partner: Option<VertexId>,
        from: Color,
        to: Color,
    },
    /// Recolor `u` by c(z), `z` by `color_l`, and the F-vertex of color
    /// `color_l` by the bad color.
    Rotation3 {
        u: VertexId,
        z: VertexId,
        pivot: VertexId,
        color_l: Color,
    },
    /// Recolor a dominant K-witness of `color_r` by `theta` and the
    /// theta-colored vertex in its neighborhood by `color_r`.
    DemoteDominant {
        witness: VertexId,
        partner: VertexId,
        color_r: Color,
        theta: Color,
    },
    /// Rotate three color classes inside K: i -> l, l -> a, a -> i.
    GlobalColorRotation {
        color_i: Color,
        color_l: Color,
        color_a: Color,
    },
}

/// Stages of the repair catalog, searched in a fixed order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveStage {
    Swap,
    SwapProtected,
    Rotation3,
    GlobalRotation,
    DemoteThenSwap,
    PairFallback,
}

/// Default catalog order.
pub const FULL_CATALOG: [MoveStage; 6] = [
    MoveStage::Swap,
    MoveStage::SwapProtected,
    MoveStage::Rotation3,
    MoveStage::GlobalRotation,
    MoveStage::DemoteThenSwap,
    MoveStage::PairFallback,
];

/// Only F-local moves touching at most two F-vertices; this is the move
/// space the exhaustive small-frame oracle enumerates.
pub const F_LOCAL_CATALOG: [MoveStage; 3] = [
    MoveStage::Swap,
    MoveStage::SwapProtected,
    MoveStage::PairFallback,
];

/// Plain color switches only, for the procedures whose proofs use nothing
/// else.
pub const SWAP_CATALOG: [MoveStage; 2] = [MoveStage::Swap, MoveStage::SwapProtected];

/// Analysis of one i-bad edge: its F-endpoint, the split of the other
/// F-vertices by whether their color avoids the colors around `u` in K,
/// and the per-color sets of K-vertices with neighbors in F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadEdgeContext {
    pub color_i: Color,
    pub u: VertexId,
    pub a_set: BTreeSet<VertexId>,
    pub b_set: BTreeSet<VertexId>,
    pub c_sets: BTreeMap<Color, BTreeSet<VertexId>>,
}

impl BadEdgeContext {
    /// Counting bounds that hold in the half-neighborhood setup on
    /// C4-free d-regular graphs: a dominant color reaches F through at
    /// most ceil((d-1)/2) K-vertices, a non-dominant one through at most
    /// ceil((d-1)/2)+1; and whenever `u` sees at most ceil((d-1)/2)+1
    /// colors in K, the avoidance set A is at least
    /// |F|-1 - (ceil((d-1)/2)+1) large.
    pub fn half_neighborhood_bounds_hold(&self, frame: &Frame, d: usize) -> bool {
        let half = d / 2;
        let d_k = frame.dominant_colors_in_k();
        let c_ok = self.c_sets.iter().all(|(color, set)| {
            let cap = if d_k.contains(color) { half } else { half + 1 };
            set.len() <= cap
        });
        let u_k_colors: BTreeSet<Color> = frame
            .graph
            .neighbors(self.u)
            .iter()
            .filter(|w| frame.k_vertices.contains(w))
            .filter_map(|&w| frame.coloring.get(w))
            .collect();
        let a_ok = u_k_colors.len() > half + 1
            || self.a_set.len() + half + 1 >= frame.f_vertices.len().saturating_sub(1);
        c_ok && a_ok
    }
}

/// A colored region K with an active vertex and its freshly colored
/// neighborhood F.
#[derive(Debug, Clone)]
pub struct Frame<'g> {
    pub graph: &'g Graph,
    pub k_vertices: BTreeSet<VertexId>,
    pub active: VertexId,
    pub f_vertices: BTreeSet<VertexId>,
    pub coloring: Coloring,
    /// Vertices no move may recolor (centers of the orchestration).
    pub pinned: BTreeSet<VertexId>,
    /// Vertices whose established dominance every move must preserve.
    pub keep_dominant: BTreeSet<VertexId>,
    /// Whether a swap may recolor the active vertex itself (the late-frame
    /// switch with the active color used by the half-neighborhood bound).
    pub allow_active_swap: bool,
}

impl<'g> Frame<'g> {
    /// Builds a frame around a colored active vertex: K is everything
    /// already colored except `active`, F starts as `active` plus its
    /// uncolored neighbors.
    pub fn around(graph: &'g Graph, coloring: Coloring, active: VertexId) -> Result<Self> {
        if active >= graph.n() {
            return Err(Error::VertexOutOfRange(active, graph.n()));
        }
        if coloring.get(active).is_none() {
            return Err(Error::UnassignedVertex(active));
        }
        let k_vertices: BTreeSet<VertexId> = (0..graph.n())
            .filter(|&v| v != active && coloring.get(v).is_some())
            .collect();
        let mut f_vertices = BTreeSet::from([active]);
        for &w in graph.neighbors(active) {
            if coloring.get(w).is_none() {
                f_vertices.insert(w);
            }
        }
        Ok(Frame {
            graph,
            k_vertices,
            active,
            f_vertices,
            coloring,
            pinned: BTreeSet::new(),
            keep_dominant: BTreeSet::new(),
            allow_active_swap: true,
        })
    }

    pub fn palette(&self) -> usize {
        self.coloring.palette()
    }

    /// Assigns distinct colors to the uncolored neighbors of the active
    /// vertex so that it ends up seeing every palette color except its
    /// own. Candidate colors come from `constraints`; per-vertex `forbid`
    /// sets are honored. Vertices are processed in ascending order and
    /// colors tried ascending with the still-missing colors first, with
    /// backtracking so a feasible assignment is never missed. Conflicts
    /// with K are allowed (they become the bad edges to repair); conflicts
    /// inside F are not.
    pub fn color_active_neighborhood(
        &mut self,
        constraints: &BTreeSet<Color>,
        forbid: &BTreeMap<VertexId, BTreeSet<Color>>,
    ) -> Result<()> {
        let own = self.coloring.get(self.active).unwrap();
        let seen: BTreeSet<Color> = self
            .graph
            .neighbors(self.active)
            .iter()
            .filter_map(|&w| self.coloring.get(w))
            .collect();
        let fresh: Vec<VertexId> = self
            .f_vertices
            .iter()
            .copied()
            .filter(|&v| v != self.active && self.coloring.get(v).is_none())
            .collect();
        let needed: BTreeSet<Color> = (1..=self.palette())
            .filter(|&c| c != own && !seen.contains(&c))
            .collect();
        if needed.len() > fresh.len() {
            return Err(Error::InfeasibleFrame {
                active: self.active,
                reason: format!(
                    "{} colors still missing but only {} uncolored neighbors",
                    needed.len(),
                    fresh.len()
                ),
            });
        }
        if let Some(c) = needed.iter().find(|c| !constraints.contains(c)) {
            return Err(Error::InfeasibleFrame {
                active: self.active,
                reason: format!("missing color {c} excluded by the palette constraints"),
            });
        }
        let mut assignment: BTreeMap<VertexId, Color> = BTreeMap::new();
        if !assign_fresh(
            self.graph,
            &fresh,
            0,
            own,
            constraints,
            &needed,
            forbid,
            &mut assignment,
        ) {
            return Err(Error::InfeasibleFrame {
                active: self.active,
                reason: "no injective assignment covers the missing colors".to_string(),
            });
        }
        for (v, c) in assignment {
            self.coloring.set(v, c)?;
        }
        Ok(())
    }

    /// Bad edges between F and K, ordered by (color, F-endpoint, K-endpoint).
    pub fn fk_bad_edges(&self) -> Vec<(VertexId, VertexId, Color)> {
        let mut out = Vec::new();
        for &v in &self.f_vertices {
            let Some(cv) = self.coloring.get(v) else {
                continue;
            };
            for &w in self.graph.neighbors(v) {
                if self.k_vertices.contains(&w) && self.coloring.get(w) == Some(cv) {
                    out.push((v, w, cv));
                }
            }
        }
        out.sort_by_key(|&(v, w, c)| (c, v, w));
        out
    }

    /// The count b_c of bad edges between F and K.
    pub fn bad_edge_count(&self) -> usize {
        self.fk_bad_edges().len()
    }

    /// Colors that have a dominant witness inside K (a K-vertex whose
    /// K-neighborhood shows every other palette color).
    pub fn dominant_colors_in_k(&self) -> BTreeSet<Color> {
        let mut out = BTreeSet::new();
        for &v in &self.k_vertices {
            if let Some(c) = self.coloring.get(v) {
                if !out.contains(&c) && self.is_dominant_in_k(v) {
                    out.insert(c);
                }
            }
        }
        out
    }

    fn is_dominant_in_k(&self, v: VertexId) -> bool {
        let Some(own) = self.coloring.get(v) else {
            return false;
        };
        let mut seen = vec![false; self.palette() + 1];
        for &w in self.graph.neighbors(v) {
            if self.k_vertices.contains(&w) {
                if let Some(c) = self.coloring.get(w) {
                    seen[c] = true;
                }
            }
        }
        (1..=self.palette()).all(|c| c == own || seen[c])
    }

    /// Whether the active vertex currently sees every palette color other
    /// than its own (over its whole colored neighborhood).
    pub fn active_sees_all(&self) -> bool {
        let Some(own) = self.coloring.get(self.active) else {
            return false;
        };
        let mut seen = vec![false; self.palette() + 1];
        for &w in self.graph.neighbors(self.active) {
            if let Some(c) = self.coloring.get(w) {
                seen[c] = true;
            }
        }
        (1..=self.palette()).all(|c| c == own || seen[c])
    }

    /// Analyzes the lowest i-bad edge: `u` is its lowest F-endpoint,
    /// `a_set` the F-vertices (other than the active one) whose color
    /// avoids every color around `u` in K, `b_set` the rest, and
    /// `c_sets[l]` the K-vertices of color `l` with neighbors in F.
    pub fn analyze_bad_edge(&self, color_i: Color) -> Result<BadEdgeContext> {
        let u = self
            .fk_bad_edges()
            .iter()
            .find(|&&(_, _, c)| c == color_i)
            .map(|&(v, _, _)| v)
            .ok_or(Error::NoBadEdge(color_i))?;
        let u_k_colors: BTreeSet<Color> = self
            .graph
            .neighbors(u)
            .iter()
            .filter(|w| self.k_vertices.contains(w))
            .filter_map(|&w| self.coloring.get(w))
            .collect();
        let mut a_set = BTreeSet::new();
        let mut b_set = BTreeSet::new();
        for &v in &self.f_vertices {
            if v == self.active {
                continue;
            }
            match self.coloring.get(v) {
                Some(c) if !u_k_colors.contains(&c) => {
                    a_set.insert(v);
                }
                _ => {
                    b_set.insert(v);
                }
            }
        }
        let mut c_sets: BTreeMap<Color, BTreeSet<VertexId>> = BTreeMap::new();
        for &w in &self.k_vertices {
            let Some(c) = self.coloring.get(w) else {
                continue;
            };
            let touches_f = self
                .graph
                .neighbors(w)
                .iter()
                .any(|x| self.f_vertices.contains(x) && *x != self.active);
            if touches_f {
                c_sets.entry(c).or_default().insert(w);
            }
        }
        Ok(BadEdgeContext {
            color_i,
            u,
            a_set,
            b_set,
            c_sets,
        })
    }
}

/// Backtracking assignment of distinct colors to the fresh F-vertices:
/// ascending vertex order, missing colors tried first (ascending), then
/// the spare constraint colors.
#[allow(clippy::too_many_arguments)]
fn assign_fresh(
    g: &Graph,
    fresh: &[VertexId],
    idx: usize,
    own: Color,
    constraints: &BTreeSet<Color>,
    needed: &BTreeSet<Color>,
    forbid: &BTreeMap<VertexId, BTreeSet<Color>>,
    assignment: &mut BTreeMap<VertexId, Color>,
) -> bool {
    if idx == fresh.len() {
        return needed.iter().all(|c| assignment.values().any(|&a| a == *c));
    }
    let v = fresh[idx];
    let used: BTreeSet<Color> = assignment.values().copied().collect();
    let missing: Vec<Color> = needed
        .iter()
        .copied()
        .filter(|c| !used.contains(c))
        .collect();
    // Remaining slots must still be able to carry the remaining colors.
    if missing.len() > fresh.len() - idx {
        return false;
    }
    let spares: Vec<Color> = constraints
        .iter()
        .copied()
        .filter(|c| !needed.contains(c) && !used.contains(c) && *c != own)
        .collect();
    for c in missing.into_iter().chain(spares) {
        if c == own || forbid.get(&v).is_some_and(|f| f.contains(&c)) {
            continue;
        }
        // Fresh colors are pairwise distinct, so the only possible
        // F-internal conflict is with an adjacent fresh vertex holding the
        // same color; K conflicts are allowed here.
        let f_conflict = g.neighbors(v).iter().any(|w| assignment.get(w) == Some(&c));
        if f_conflict {
            continue;
        }
        assignment.insert(v, c);
        if assign_fresh(
            g,
            fresh,
            idx + 1,
            own,
            constraints,
            needed,
            forbid,
            assignment,
        ) {
            return true;
        }
        assignment.remove(&v);
    }
    false
}

/// Result of a repair descent: the repaired frame when it reached zero
/// bad edges, the bad-edge count at the start of each round, and the
/// applied moves.
#[derive(Debug, Clone)]
pub struct RepairRun<'g> {
    pub frame: Option<Frame<'g>>,
    pub counts: Vec<usize>,
    pub moves: Vec<RepairMove>,
}

/// Searches the move catalog in its fixed stage order for a move sequence
/// that removes the analyzed bad edge, creates no new bad edge, keeps
/// every protected color non-dominant in K, and preserves the dominance
/// already achieved. Returns the repaired frame and the applied moves, or
/// `None` when the catalog is exhausted.
pub fn try_remove_bad_edge<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    protected: &BTreeSet<Color>,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    try_remove_with_catalog(frame, ctx, protected, &FULL_CATALOG)
}

/// Same search restricted to a caller-chosen stage list.
pub fn try_remove_with_catalog<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    protected: &BTreeSet<Color>,
    catalog: &[MoveStage],
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let target = target_edge(frame, ctx)?;
    let checker = Validator::new(frame, target, protected);
    for stage in catalog {
        let found = match stage {
            MoveStage::Swap => stage_swap(frame, ctx, &checker, protected, false),
            MoveStage::SwapProtected => stage_swap(frame, ctx, &checker, protected, true),
            MoveStage::Rotation3 => stage_rotation3(frame, ctx, &checker),
            MoveStage::GlobalRotation => stage_global_rotation(frame, ctx, &checker),
            MoveStage::DemoteThenSwap => stage_demote(frame, ctx, &checker, protected),
            MoveStage::PairFallback => stage_pair_fallback(frame, ctx, &checker),
        };
        if found.is_some() {
            return found;
        }
    }
    None
}

fn target_edge(frame: &Frame, ctx: &BadEdgeContext) -> Option<(VertexId, VertexId)> {
    frame
        .fk_bad_edges()
        .iter()
        .find(|&&(v, _, c)| c == ctx.color_i && v == ctx.u)
        .map(|&(v, w, _)| ordered(v, w))
}

fn ordered(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

/// Shared validation for candidate recolorings.
struct Validator<'a, 'g> {
    frame: &'a Frame<'g>,
    target: (VertexId, VertexId),
    bad_before: BTreeSet<(VertexId, VertexId)>,
    protected_nondominant_before: Vec<Color>,
    dominant_before: Vec<VertexId>,
}

impl<'a, 'g> Validator<'a, 'g> {
    fn new(
        frame: &'a Frame<'g>,
        target: (VertexId, VertexId),
        protected: &'a BTreeSet<Color>,
    ) -> Self {
        let bad_before = coloring::bad_edges(frame.graph, &frame.coloring)
            .into_iter()
            .map(|(u, v, _)| ordered(u, v))
            .collect();
        let d_k = frame.dominant_colors_in_k();
        let protected_nondominant_before = protected
            .iter()
            .copied()
            .filter(|p| !d_k.contains(p))
            .collect();
        let dominant_before = frame
            .keep_dominant
            .iter()
            .copied()
            .filter(|&v| coloring::dominance_status(frame.graph, &frame.coloring, v) == Some(true))
            .collect();
        Validator {
            frame,
            target,
            bad_before,
            protected_nondominant_before,
            dominant_before,
        }
    }

    /// Applies `changes` to a scratch frame and accepts it only when every
    /// repair invariant holds.
    fn accept(&self, changes: &[(VertexId, Color)]) -> Option<Frame<'g>> {
        for &(v, _) in changes {
            if self.frame.pinned.contains(&v) {
                return None;
            }
        }
        let mut after = self.frame.clone();
        for &(v, c) in changes {
            if c == 0 || c > after.palette() {
                return None;
            }
            after.coloring.set(v, c).ok()?;
        }
        let bad_after: BTreeSet<(VertexId, VertexId)> =
            coloring::bad_edges(after.graph, &after.coloring)
                .into_iter()
                .map(|(u, v, _)| ordered(u, v))
                .collect();
        if bad_after.contains(&self.target) || !bad_after.is_subset(&self.bad_before) {
            return None;
        }
        if !after.active_sees_all() {
            return None;
        }
        let d_k_after = after.dominant_colors_in_k();
        if self
            .protected_nondominant_before
            .iter()
            .any(|p| d_k_after.contains(p))
        {
            return None;
        }
        for &v in &self.dominant_before {
            if coloring::dominance_status(after.graph, &after.coloring, v) != Some(true) {
                return None;
            }
        }
        Some(after)
    }
}

/// Plain color switch in F: the bad endpoint trades colors with another
/// F-vertex (or simply takes a color absent from F). `protected_pass`
/// selects whether the partner color may be a protected one.
fn stage_swap<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    checker: &Validator<'_, 'g>,
    protected: &BTreeSet<Color>,
    protected_pass: bool,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let i = ctx.color_i;
    let mut partners: Vec<VertexId> = frame
        .f_vertices
        .iter()
        .copied()
        .filter(|&v| v != ctx.u && v != frame.active)
        .collect();
    if frame.allow_active_swap {
        partners.push(frame.active);
    }
    for y in partners {
        let Some(cy) = frame.coloring.get(y) else {
            continue;
        };
        if protected.contains(&cy) != protected_pass {
            continue;
        }
        let changes = [(ctx.u, cy), (y, i)];
        if let Some(after) = checker.accept(&changes) {
            let mv = RepairMove::Swap {
                u: ctx.u,
                partner: Some(y),
                from: i,
                to: cy,
            };
            return Some((after, vec![mv]));
        }
    }
    if protected_pass {
        // A protected color absent from F: recoloring u alone realizes the
        // switch.
        let f_colors: BTreeSet<Color> = frame
            .f_vertices
            .iter()
            .filter_map(|&v| frame.coloring.get(v))
            .collect();
        for &p in protected {
            if f_colors.contains(&p) {
                continue;
            }
            if let Some(after) = checker.accept(&[(ctx.u, p)]) {
                let mv = RepairMove::Swap {
                    u: ctx.u,
                    partner: None,
                    from: i,
                    to: p,
                };
                return Some((after, vec![mv]));
            }
        }
    }
    None
}

/// Three-way rotation inside F: u takes c(z), z takes l, and the F-vertex
/// of color l takes the bad color.
fn stage_rotation3<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    checker: &Validator<'_, 'g>,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let i = ctx.color_i;
    let members: Vec<(VertexId, Color)> = frame
        .f_vertices
        .iter()
        .filter(|&&v| v != frame.active && v != ctx.u)
        .filter_map(|&v| frame.coloring.get(v).map(|c| (v, c)))
        .collect();
    for &(z, cz) in &members {
        for &(pivot, l) in &members {
            if pivot == z || l == cz || l == i {
                continue;
            }
            let changes = [(ctx.u, cz), (z, l), (pivot, i)];
            if let Some(after) = checker.accept(&changes) {
                let mv = RepairMove::Rotation3 {
                    u: ctx.u,
                    z,
                    pivot,
                    color_l: l,
                };
                return Some((after, vec![mv]));
            }
        }
    }
    None
}

/// Rotation of three whole color classes inside K.
fn stage_global_rotation<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    checker: &Validator<'_, 'g>,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let i = ctx.color_i;
    let palette = frame.palette();
    let pinned_colors: BTreeSet<Color> = frame
        .pinned
        .iter()
        .filter_map(|&v| frame.coloring.get(v))
        .collect();
    for l in 1..=palette {
        if l == i || pinned_colors.contains(&l) {
            continue;
        }
        for a in 1..=palette {
            if a == i || a == l || pinned_colors.contains(&a) || pinned_colors.contains(&i) {
                continue;
            }
            let mut changes = Vec::new();
            for &w in &frame.k_vertices {
                match frame.coloring.get(w) {
                    Some(c) if c == i => changes.push((w, l)),
                    Some(c) if c == l => changes.push((w, a)),
                    Some(c) if c == a => changes.push((w, i)),
                    _ => {}
                }
            }
            if changes.is_empty() {
                continue;
            }
            if let Some(after) = checker.accept(&changes) {
                let mv = RepairMove::GlobalColorRotation {
                    color_i: i,
                    color_l: l,
                    color_a: a,
                };
                return Some((after, vec![mv]));
            }
        }
    }
    None
}

/// Demotes a dominant color inside K (its witness moves to a non-dominant
/// color theta, the theta-neighbor takes its place) and then finishes
/// with a plain switch or a class rotation.
fn stage_demote<'g>(
    frame: &Frame<'g>,
    ctx: &BadEdgeContext,
    checker: &Validator<'_, 'g>,
    protected: &BTreeSet<Color>,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let i = ctx.color_i;
    let palette = frame.palette();
    let d_k = frame.dominant_colors_in_k();
    let theta_pool: Vec<Color> = (1..=palette)
        .filter(|c| !d_k.contains(c) && !protected.contains(c))
        .collect();
    for &r in &d_k {
        let witness = frame
            .k_vertices
            .iter()
            .copied()
            .find(|&v| frame.coloring.get(v) == Some(r) && frame.is_dominant_in_k(v));
        let Some(witness) = witness else { continue };
        if frame.pinned.contains(&witness) || frame.keep_dominant.contains(&witness) {
            continue;
        }
        for &theta in &theta_pool {
            if theta == r {
                continue;
            }
            let partner =
                frame.graph.neighbors(witness).iter().copied().find(|w| {
                    frame.k_vertices.contains(w) && frame.coloring.get(*w) == Some(theta)
                });
            let Some(partner) = partner else { continue };
            let demote = [(witness, theta), (partner, r)];
            let demote_moves = vec![RepairMove::DemoteDominant {
                witness,
                partner,
                color_r: r,
                theta,
            }];
            // Demotion alone may already detach the bad edge.
            if let Some(after) = checker.accept(&demote) {
                return Some((after, demote_moves));
            }
            // Demotion followed by a switch of i with a protected color in F.
            for &k in protected {
                let f_partner = frame
                    .f_vertices
                    .iter()
                    .copied()
                    .find(|&v| frame.coloring.get(v) == Some(k));
                let mut changes = demote.to_vec();
                match f_partner {
                    Some(y) if y != ctx.u => {
                        changes.push((ctx.u, k));
                        changes.push((y, i));
                    }
                    None => changes.push((ctx.u, k)),
                    _ => continue,
                }
                if let Some(after) = checker.accept(&changes) {
                    let mut moves = demote_moves.clone();
                    moves.push(RepairMove::Swap {
                        u: ctx.u,
                        partner: f_partner,
                        from: i,
                        to: k,
                    });
                    return Some((after, moves));
                }
            }
            // Demotion followed by rotating i -> r -> k -> i inside K.
            for &k in protected {
                let mut changes = demote.to_vec();
                for &w in &frame.k_vertices {
                    if w == witness || w == partner {
                        continue;
                    }
                    match frame.coloring.get(w) {
                        Some(c) if c == i => changes.push((w, r)),
                        Some(c) if c == r => changes.push((w, k)),
                        Some(c) if c == k => changes.push((w, i)),
                        _ => {}
                    }
                }
                if let Some(after) = checker.accept(&changes) {
                    let mut moves = demote_moves.clone();
                    moves.push(RepairMove::GlobalColorRotation {
                        color_i: i,
                        color_l: r,
                        color_a: k,
                    });
                    return Some((after, moves));
                }
            }
        }
    }
    None
}

/// Completeness fallback over all recolorings of at most two F-vertices.
/// Anything the exhaustive small-frame oracle would accept is found here,
/// so engine failure really means no F-local pair repair exists.
fn stage_pair_fallback<'g>(
    frame: &Frame<'g>,
    _ctx: &BadEdgeContext,
    checker: &Validator<'_, 'g>,
) -> Option<(Frame<'g>, Vec<RepairMove>)> {
    let palette = frame.palette();
    let members: Vec<VertexId> = frame.f_vertices.iter().copied().collect();
    // Single recolorings first.
    for &v in &members {
        let Some(cv) = frame.coloring.get(v) else {
            continue;
        };
        for c in 1..=palette {
            if c == cv {
                continue;
            }
            if let Some(after) = checker.accept(&[(v, c)]) {
                let mv = RepairMove::Swap {
                    u: v,
                    partner: None,
                    from: cv,
                    to: c,
                };
                return Some((after, vec![mv]));
            }
        }
    }
    for (ai, &v1) in members.iter().enumerate() {
        let Some(c1) = frame.coloring.get(v1) else {
            continue;
        };
        for &v2 in members.iter().skip(ai + 1) {
            let Some(c2) = frame.coloring.get(v2) else {
                continue;
            };
            for n1 in 1..=palette {
                for n2 in 1..=palette {
                    if (n1, n2) == (c1, c2) {
                        continue;
                    }
                    if let Some(after) = checker.accept(&[(v1, n1), (v2, n2)]) {
                        let moves = vec![
                            RepairMove::Swap {
                                u: v1,
                                partner: None,
                                from: c1,
                                to: n1,
                            },
                            RepairMove::Swap {
                                u: v2,
                                partner: None,
                                from: c2,
                                to: n2,
                            },
                        ];
                        return Some((after, moves));
                    }
                }
            }
        }
    }
    None
}

/// Descent loop: repeatedly analyzes the lowest-color bad edge and applies
/// the first catalog repair. Every accepted move strictly decreases the
/// F-K bad-edge count; the loop stops at zero (success), on an
/// unremovable edge, or when `max_rounds` is hit.
pub fn repair_to_proper<'g>(
    frame: Frame<'g>,
    protected: &BTreeSet<Color>,
    max_rounds: usize,
) -> RepairRun<'g> {
    repair_with_catalog(frame, protected, max_rounds, &FULL_CATALOG)
}

/// [`repair_to_proper`] with a restricted move catalog.
pub fn repair_with_catalog<'g>(
    mut frame: Frame<'g>,
    protected: &BTreeSet<Color>,
    max_rounds: usize,
    catalog: &[MoveStage],
) -> RepairRun<'g> {
    let mut counts = Vec::new();
    let mut moves = Vec::new();
    loop {
        let count = frame.bad_edge_count();
        counts.push(count);
        if count == 0 {
            return RepairRun {
                frame: Some(frame),
                counts,
                moves,
            };
        }
        if counts.len() > max_rounds {
            break;
        }
        let (_, _, color) = frame.fk_bad_edges()[0];
        let Ok(ctx) = frame.analyze_bad_edge(color) else {
            break;
        };
        match try_remove_with_catalog(&frame, &ctx, protected, catalog) {
            Some((next, applied)) => {
                debug_assert!(next.bad_edge_count() < count, "descent must be strict");
                frame = next;
                moves.extend(applied);
            }
            None => break,
        }
    }
    RepairRun {
        frame: None,
        counts,
        moves,
    }
}
