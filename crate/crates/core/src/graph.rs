//! Immutable simple undirected graphs with the structural queries the
//! coloring procedures rely on: regularity, girth, diameter, small-cycle
//! detection and second neighborhoods.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Dense vertex index in `[0, n)`.
pub type VertexId = usize;

/// Simple undirected graph with sorted adjacency lists.
///
/// Adjacency lists are kept sorted ascending so that equal graphs compare
/// equal structurally and set operations on neighborhoods stay cheap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<VertexId>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list, rejecting
    /// self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        for (u, list) in adj.iter().enumerate() {
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u, w[0]));
            }
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v, self.n()))
        }
    }

    /// Sorted neighbors of `v`. Panics on an out-of-range vertex; the
    /// checked operations below are the validating entry points.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as `(u, v)` pairs with `u < v`, lexicographically ordered.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// The common degree `d` when every vertex has it, `None` otherwise.
    pub fn is_regular(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        if self.adj.iter().all(|list| list.len() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Breadth-first distances from `root`; unreachable vertices are `None`.
    pub fn bfs_distances(&self, root: VertexId) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Shortest-path length between `u` and `v`, `None` when disconnected.
    pub fn distance(&self, u: VertexId, v: VertexId) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.bfs_distances(u)[v])
    }

    /// Maximum distance from `v` to any other vertex, `None` if some vertex
    /// is unreachable.
    pub fn eccentricity(&self, v: VertexId) -> Option<usize> {
        let dist = self.bfs_distances(v);
        let mut ecc = 0;
        for d in dist {
            ecc = ecc.max(d?);
        }
        Some(ecc)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Exact diameter via all-pairs breadth-first search, `None` when the
    /// graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut diam = 0;
        for v in 0..self.n() {
            diam = diam.max(self.eccentricity(v)?);
        }
        Some(diam)
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        self.girth_with_cycle().map(|(len, _)| len)
    }

    /// Shortest cycle length together with the vertices of one witness
    /// cycle, found by breadth-first search from every vertex.
    pub fn girth_with_cycle(&self) -> Option<(usize, Vec<VertexId>)> {
        let n = self.n();
        let mut best: Option<(usize, VertexId, VertexId, VertexId)> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if w != parent[u] && parent[w] != u {
                        // Non-tree edge: closes a cycle through the root.
                        let len = dist[u] + dist[w] + 1;
                        if best.map_or(true, |(b, ..)| len < b) {
                            best = Some((len, root, u, w));
                        }
                    }
                }
            }
        }
        let (_, root, u, w) = best?;
        Some(self.reconstruct_cycle(root, u, w))
    }

    /// Rebuilds the witness cycle for a closing edge `(u, w)` found during
    /// a breadth-first search from `root`, trimming any shared tree prefix.
    fn reconstruct_cycle(
        &self,
        root: VertexId,
        u: VertexId,
        w: VertexId,
    ) -> (usize, Vec<VertexId>) {
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        let path_to_root = |mut x: VertexId| {
            let mut path = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                path.push(x);
            }
            path
        };
        let pu = path_to_root(u);
        let pw = path_to_root(w);
        // Drop the common suffix (shared ancestors), keeping the branch point.
        let mut iu = pu.len();
        let mut iw = pw.len();
        while iu > 1 && iw > 1 && pu[iu - 2] == pw[iw - 2] {
            iu -= 1;
            iw -= 1;
        }
        // branch, ..., u, w, ..., child-of-branch: a simple cycle.
        let mut cycle: Vec<VertexId> = pu[..iu].iter().rev().copied().collect();
        cycle.extend(pw[..iw - 1].iter());
        (cycle.len(), cycle)
    }

    /// True iff the graph contains a cycle on exactly `k` vertices.
    /// Supports the lengths the theorem hypotheses need: 3, 4, 6.
    pub fn has_cycle_of_length(&self, k: usize) -> Result<bool> {
        match k {
            3 => Ok(self
                .edges()
                .any(|(u, v)| !intersect_sorted(&self.adj[u], &self.adj[v]).is_empty())),
            4 => Ok(self.has_c4()),
            6 => Ok(self.has_c6()),
            other => Err(Error::UnsupportedCycleLength(other)),
        }
    }

    /// Some pair of vertices with two or more common neighbors.
    fn has_c4(&self) -> bool {
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if intersect_sorted(&self.adj[u], &self.adj[v]).len() >= 2 {
                    return true;
                }
            }
        }
        false
    }

    /// Explicit 6-cycle search: depth-first paths of length five from each
    /// canonical start (the minimum vertex of the cycle) closed by an edge.
    fn has_c6(&self) -> bool {
        let n = self.n();
        let mut on_path = vec![false; n];
        for s in 0..n {
            on_path.fill(false);
            if self.c6_dfs(s, s, 1, &mut on_path) {
                return true;
            }
        }
        false
    }

    fn c6_dfs(&self, start: VertexId, u: VertexId, depth: usize, on_path: &mut Vec<bool>) -> bool {
        on_path[u] = true;
        let found = self.adj[u].iter().any(|&w| {
            if w <= start || on_path[w] {
                return false;
            }
            if depth == 5 {
                self.has_edge(w, start)
            } else {
                self.c6_dfs(start, w, depth + 1, on_path)
            }
        });
        on_path[u] = false;
        found
    }

    /// Vertices at distance exactly two from `v`, sorted.
    pub fn second_neighborhood(&self, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(v)?;
        let mut mark = vec![false; self.n()];
        mark[v] = true;
        for &w in &self.adj[v] {
            mark[w] = true;
        }
        let mut second = Vec::new();
        for &w in &self.adj[v] {
            for &x in &self.adj[w] {
                if !mark[x] {
                    mark[x] = true;
                    second.push(x);
                }
            }
        }
        second.sort_unstable();
        Ok(second)
    }

    /// `N(u) ∩ N(v)` for distinct vertices, sorted.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> Result<Vec<VertexId>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::IdenticalVertices(u));
        }
        Ok(intersect_sorted(&self.adj[u], &self.adj[v]))
    }

    /// Consistency check used by tests and generators: symmetric sorted
    /// adjacency, no loops, no duplicates.
    pub fn validate(&self) -> Result<()> {
        for (u, list) in self.adj.iter().enumerate() {
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(Error::DuplicateEdge(u, pair[0]));
                }
            }
            for &w in list {
                if w == u {
                    return Err(Error::SelfLoop(u));
                }
                if w >= self.n() {
                    return Err(Error::VertexOutOfRange(w, self.n()));
                }
                if !self.has_edge(w, u) {
                    return Err(Error::DuplicateEdge(u, w));
                }
            }
        }
        Ok(())
    }
}

fn intersect_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn graphs_are_shareable_across_threads() {
        fn assert_send_sync<T: Send + Sync>() {}
        assert_send_sync::<Graph>();
        let g = std::sync::Arc::new(generators::named_graph("petersen").unwrap());
        let handles: Vec<_> = (0..4)
            .map(|_| {
                let g = g.clone();
                std::thread::spawn(move || g.girth())
            })
            .collect();
        for h in handles {
            assert_eq!(h.join().unwrap(), Some(5));
        }
    }

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::SelfLoop(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(..))
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange(5, 2))
        ));
    }

    #[test]
    fn degree_and_regularity() {
        let petersen = generators::named_graph("petersen").unwrap();
        for v in 0..10 {
            assert_eq!(petersen.degree(v).unwrap(), 3);
        }
        assert_eq!(petersen.is_regular(), Some(3));
        assert_eq!(complete(4).is_regular(), Some(3));
        assert_eq!(complete(5).is_regular(), Some(4));
        assert_eq!(cycle(5).is_regular(), Some(2));

        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(star.is_regular(), None);
        assert!(matches!(star.degree(9), Err(Error::VertexOutOfRange(9, 4))));
    }

    #[test]
    fn girth_basics() {
        assert_eq!(cycle(6).girth(), Some(6));
        assert_eq!(cycle(3).girth(), Some(3));
        assert_eq!(path(4).girth(), None);
        assert_eq!(complete(4).girth(), Some(3));
        assert_eq!(
            generators::named_graph("petersen").unwrap().girth(),
            Some(5)
        );
    }

    #[test]
    fn girth_witness_is_a_cycle() {
        for g in [
            cycle(5),
            cycle(8),
            complete(5),
            generators::named_graph("heawood").unwrap(),
        ] {
            let (len, cyc) = g.girth_with_cycle().unwrap();
            assert_eq!(len, cyc.len());
            assert_eq!(len, g.girth().unwrap());
            for i in 0..cyc.len() {
                assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
            }
            let mut sorted = cyc.clone();
            sorted.sort_unstable();
            sorted.dedup();
            assert_eq!(sorted.len(), cyc.len(), "witness must be a simple cycle");
        }
    }

    #[test]
    fn diameter_and_distance() {
        let petersen = generators::named_graph("petersen").unwrap();
        assert_eq!(petersen.diameter(), Some(2));
        assert_eq!(path(4).diameter(), Some(3));
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(two_edges.diameter(), None);
        assert_eq!(two_edges.distance(0, 2).unwrap(), None);
        assert_eq!(petersen.distance(0, 1).unwrap(), Some(1));
        // Petersen has diameter 2, so any non-adjacent pair sits at distance 2.
        let non_adjacent = (0..10)
            .flat_map(|u| (u + 1..10).map(move |v| (u, v)))
            .find(|&(u, v)| !petersen.has_edge(u, v))
            .unwrap();
        assert_eq!(
            petersen.distance(non_adjacent.0, non_adjacent.1).unwrap(),
            Some(2)
        );
        assert!(petersen.distance(0, 10).is_err());
    }

    #[test]
    fn small_cycle_detection() {
        assert!(cycle(4).has_cycle_of_length(4).unwrap());
        assert!(!cycle(5).has_cycle_of_length(4).unwrap());
        let petersen = generators::named_graph("petersen").unwrap();
        assert!(!petersen.has_cycle_of_length(3).unwrap());
        assert!(!petersen.has_cycle_of_length(4).unwrap());
        assert!(petersen.has_cycle_of_length(6).unwrap());
        let heawood = generators::named_graph("heawood").unwrap();
        assert!(heawood.has_cycle_of_length(6).unwrap());
        assert!(!heawood.has_cycle_of_length(4).unwrap());
        assert!(cycle(6).has_cycle_of_length(6).unwrap());
        assert!(!cycle(7).has_cycle_of_length(6).unwrap());
        assert!(matches!(
            cycle(5).has_cycle_of_length(5),
            Err(Error::UnsupportedCycleLength(5))
        ));
    }

    #[test]
    fn second_neighborhood_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.second_neighborhood(0).unwrap(), vec![2, 3]);
        assert_eq!(
            complete(4).second_neighborhood(0).unwrap(),
            Vec::<usize>::new()
        );
        let petersen = generators::named_graph("petersen").unwrap();
        for v in 0..10 {
            assert_eq!(petersen.second_neighborhood(v).unwrap().len(), 6);
        }
    }

    #[test]
    fn common_neighbors_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.common_neighbors(0, 2).unwrap(), vec![1, 3]);
        let petersen = generators::named_graph("petersen").unwrap();
        for u in 0..10 {
            for v in u + 1..10 {
                let shared = petersen.common_neighbors(u, v).unwrap().len();
                if petersen.has_edge(u, v) {
                    assert_eq!(shared, 0, "girth 5 forbids triangles");
                } else {
                    assert_eq!(shared, 1, "Petersen is strongly regular");
                }
            }
        }
        assert!(matches!(
            c4.common_neighbors(1, 1),
            Err(Error::IdenticalVertices(1))
        ));
    }
}
