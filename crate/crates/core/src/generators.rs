//! Graph generators: named regression instances, parametric families, and
//! the seeded random-regular supply used by the property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Parameters for one generator invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub family: Family,
    pub name: Option<String>,
    pub n: Option<usize>,
    pub d: Option<usize>,
    pub q: Option<usize>,
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Named,
    Complete,
    Cycle,
    RandomRegular,
    ProjectiveIncidence,
}

impl GeneratorSpec {
    pub fn named(name: &str) -> Self {
        GeneratorSpec {
            family: Family::Named,
            name: Some(name.to_string()),
            n: None,
            d: None,
            q: None,
            seed: None,
        }
    }
}

/// Dispatches a spec to the matching generator.
pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    let missing = |what: &str| Error::InvalidSpec(format!("{what} required for this family"));
    match spec.family {
        Family::Named => named_graph(spec.name.as_deref().ok_or_else(|| missing("name"))?),
        Family::Complete => Ok(complete(spec.n.ok_or_else(|| missing("n"))?)),
        Family::Cycle => Ok(cycle(spec.n.ok_or_else(|| missing("n"))?)),
        Family::RandomRegular => random_regular(
            spec.n.ok_or_else(|| missing("n"))?,
            spec.d.ok_or_else(|| missing("d"))?,
            spec.seed.unwrap_or(0),
        ),
        Family::ProjectiveIncidence => projective_incidence(spec.q.ok_or_else(|| missing("q"))?),
    }
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).expect("complete graph edge list is simple")
}

pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("cycle edge list is simple")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("path edge list is simple")
}

// Frozen edge lists for the named instances. Each list was derived once
// from the standard construction and is validated against its (n, d,
// girth, diameter) signature by the tests below.

const PETERSEN_EDGES: [(VertexId, VertexId); 15] = [
    (0, 1),
    (0, 4),
    (0, 5),
    (1, 2),
    (1, 6),
    (2, 3),
    (2, 7),
    (3, 4),
    (3, 8),
    (4, 9),
    (5, 7),
    (5, 8),
    (6, 8),
    (6, 9),
    (7, 9),
];

const HEAWOOD_EDGES: [(VertexId, VertexId); 21] = [
    (0, 1),
    (0, 5),
    (0, 13),
    (1, 2),
    (1, 10),
    (2, 3),
    (2, 7),
    (3, 4),
    (3, 12),
    (4, 5),
    (4, 9),
    (5, 6),
    (6, 7),
    (6, 11),
    (7, 8),
    (8, 9),
    (8, 13),
    (9, 10),
    (10, 11),
    (11, 12),
    (12, 13),
];

const MCGEE_EDGES: [(VertexId, VertexId); 36] = [
    (0, 1),
    (0, 12),
    (0, 23),
    (1, 2),
    (1, 8),
    (2, 3),
    (2, 19),
    (3, 4),
    (3, 15),
    (4, 5),
    (4, 11),
    (5, 6),
    (5, 22),
    (6, 7),
    (6, 18),
    (7, 8),
    (7, 14),
    (8, 9),
    (9, 10),
    (9, 21),
    (10, 11),
    (10, 17),
    (11, 12),
    (12, 13),
    (13, 14),
    (13, 20),
    (14, 15),
    (15, 16),
    (16, 17),
    (16, 23),
    (17, 18),
    (18, 19),
    (19, 20),
    (20, 21),
    (21, 22),
    (22, 23),
];

const ROBERTSON_EDGES: [(VertexId, VertexId); 38] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 5),
    (1, 6),
    (1, 7),
    (2, 8),
    (2, 9),
    (2, 10),
    (3, 11),
    (3, 12),
    (3, 13),
    (4, 14),
    (4, 15),
    (4, 16),
    (5, 8),
    (5, 11),
    (5, 14),
    (6, 9),
    (6, 12),
    (6, 15),
    (7, 10),
    (7, 13),
    (7, 16),
    (8, 12),
    (8, 16),
    (9, 13),
    (9, 17),
    (10, 15),
    (10, 18),
    (11, 15),
    (11, 17),
    (12, 18),
    (13, 14),
    (14, 18),
    (16, 17),
    (17, 18),
];

const HOFFMAN_SINGLETON_EDGES: [(VertexId, VertexId); 175] = [
    (0, 1),
    (0, 4),
    (0, 25),
    (0, 30),
    (0, 35),
    (0, 40),
    (0, 45),
    (1, 2),
    (1, 26),
    (1, 31),
    (1, 36),
    (1, 41),
    (1, 46),
    (2, 3),
    (2, 27),
    (2, 32),
    (2, 37),
    (2, 42),
    (2, 47),
    (3, 4),
    (3, 28),
    (3, 33),
    (3, 38),
    (3, 43),
    (3, 48),
    (4, 29),
    (4, 34),
    (4, 39),
    (4, 44),
    (4, 49),
    (5, 6),
    (5, 9),
    (5, 25),
    (5, 31),
    (5, 37),
    (5, 43),
    (5, 49),
    (6, 7),
    (6, 26),
    (6, 32),
    (6, 38),
    (6, 44),
    (6, 45),
    (7, 8),
    (7, 27),
    (7, 33),
    (7, 39),
    (7, 40),
    (7, 46),
    (8, 9),
    (8, 28),
    (8, 34),
    (8, 35),
    (8, 41),
    (8, 47),
    (9, 29),
    (9, 30),
    (9, 36),
    (9, 42),
    (9, 48),
    (10, 11),
    (10, 14),
    (10, 25),
    (10, 32),
    (10, 39),
    (10, 41),
    (10, 48),
    (11, 12),
    (11, 26),
    (11, 33),
    (11, 35),
    (11, 42),
    (11, 49),
    (12, 13),
    (12, 27),
    (12, 34),
    (12, 36),
    (12, 43),
    (12, 45),
    (13, 14),
    (13, 28),
    (13, 30),
    (13, 37),
    (13, 44),
    (13, 46),
    (14, 29),
    (14, 31),
    (14, 38),
    (14, 40),
    (14, 47),
    (15, 16),
    (15, 19),
    (15, 25),
    (15, 33),
    (15, 36),
    (15, 44),
    (15, 47),
    (16, 17),
    (16, 26),
    (16, 34),
    (16, 37),
    (16, 40),
    (16, 48),
    (17, 18),
    (17, 27),
    (17, 30),
    (17, 38),
    (17, 41),
    (17, 49),
    (18, 19),
    (18, 28),
    (18, 31),
    (18, 39),
    (18, 42),
    (18, 45),
    (19, 29),
    (19, 32),
    (19, 35),
    (19, 43),
    (19, 46),
    (20, 21),
    (20, 24),
    (20, 25),
    (20, 34),
    (20, 38),
    (20, 42),
    (20, 46),
    (21, 22),
    (21, 26),
    (21, 30),
    (21, 39),
    (21, 43),
    (21, 47),
    (22, 23),
    (22, 27),
    (22, 31),
    (22, 35),
    (22, 44),
    (22, 48),
    (23, 24),
    (23, 28),
    (23, 32),
    (23, 36),
    (23, 40),
    (23, 49),
    (24, 29),
    (24, 33),
    (24, 37),
    (24, 41),
    (24, 45),
    (25, 27),
    (25, 28),
    (26, 28),
    (26, 29),
    (27, 29),
    (30, 32),
    (30, 33),
    (31, 33),
    (31, 34),
    (32, 34),
    (35, 37),
    (35, 38),
    (36, 38),
    (36, 39),
    (37, 39),
    (40, 42),
    (40, 43),
    (41, 43),
    (41, 44),
    (42, 44),
    (45, 47),
    (45, 48),
    (46, 48),
    (46, 49),
    (47, 49),
];

/// One of the embedded regression instances:
/// petersen (n=10, d=3, girth 5), heawood (n=14, d=3, girth 6),
/// mcgee (n=24, d=3, girth 7), robertson (n=19, d=4, girth 5),
/// hoffman_singleton (n=50, d=7, girth 5).
pub fn named_graph(name: &str) -> Result<Graph> {
    let (n, edges): (usize, &[(VertexId, VertexId)]) = match name {
        "petersen" => (10, &PETERSEN_EDGES),
        "heawood" => (14, &HEAWOOD_EDGES),
        "mcgee" => (24, &MCGEE_EDGES),
        "robertson" => (19, &ROBERTSON_EDGES),
        "hoffman_singleton" => (50, &HOFFMAN_SINGLETON_EDGES),
        other => return Err(Error::UnknownGraphName(other.to_string())),
    };
    Graph::from_edges(n, edges)
}

pub const NAMED_GRAPHS: [&str; 5] = [
    "petersen",
    "heawood",
    "mcgee",
    "robertson",
    "hoffman_singleton",
];

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..q).take_while(|p| p * p <= q).all(|p| q % p != 0)
}

/// Point-line incidence graph of the projective plane of prime order `q`:
/// bipartite on 2(q^2+q+1) vertices, (q+1)-regular, girth 6, hence C4-free.
///
/// Points are the canonical representatives [1,y,z], [0,1,z], [0,0,1] of
/// the projective plane over GF(q); lines are the same set by duality, and
/// a point lies on a line exactly when their dot product vanishes mod q.
pub fn projective_incidence(q: usize) -> Result<Graph> {
    if !is_prime(q) || q > 13 {
        return Err(Error::NotPrime(q));
    }
    let mut reps: Vec<[usize; 3]> = Vec::new();
    for y in 0..q {
        for z in 0..q {
            reps.push([1, y, z]);
        }
    }
    for z in 0..q {
        reps.push([0, 1, z]);
    }
    reps.push([0, 0, 1]);
    let count = reps.len();
    debug_assert_eq!(count, q * q + q + 1);

    let mut edges = Vec::new();
    for (p, point) in reps.iter().enumerate() {
        for (l, line) in reps.iter().enumerate() {
            let dot: usize = point.iter().zip(line).map(|(a, b)| a * b).sum();
            if dot % q == 0 {
                edges.push((p, count + l));
            }
        }
    }
    Graph::from_edges(2 * count, &edges)
}

const PAIRING_RESTARTS: usize = 10_000;

/// Random `d`-regular simple graph on `n` vertices via the pairing model
/// with restart on self-loops and parallel edges. Deterministic per seed.
pub fn random_regular(n: usize, d: usize, seed: u64) -> Result<Graph> {
    if n == 0 || d >= n || n * d % 2 != 0 {
        return Err(Error::InfeasibleDegree { n, d });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    'restart: for _ in 0..PAIRING_RESTARTS {
        let mut stubs: Vec<VertexId> = (0..n).flat_map(|v| std::iter::repeat(v).take(d)).collect();
        for i in (1..stubs.len()).rev() {
            let j = rng.gen_range(0..=i);
            stubs.swap(i, j);
        }
        let mut seen = std::collections::BTreeSet::new();
        let mut edges = Vec::with_capacity(n * d / 2);
        for pair in stubs.chunks(2) {
            let (u, v) = (pair[0].min(pair[1]), pair[0].max(pair[1]));
            if u == v || !seen.insert((u, v)) {
                continue 'restart;
            }
            edges.push((u, v));
        }
        return Graph::from_edges(n, &edges);
    }
    Err(Error::GenerationFailed(PAIRING_RESTARTS))
}

/// Best-effort girth raising by degree-preserving 2-edge swaps that break
/// shortest cycles. Returns `None` when `max_swaps` runs out before the
/// target girth is reached (or when the input is not regular).
pub fn girth_boost(g: &Graph, target_girth: usize, seed: u64, max_swaps: usize) -> Option<Graph> {
    if g.is_regular().is_none() || target_girth < 4 {
        return None;
    }
    let n = g.n();
    let mut adj: Vec<Vec<VertexId>> = (0..n).map(|v| g.neighbors(v).to_vec()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rebuild = |adj: &[Vec<VertexId>]| {
        let mut edges = Vec::new();
        for (u, list) in adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).expect("swaps preserve simplicity")
    };
    for _ in 0..max_swaps {
        let current = rebuild(&adj);
        let Some((len, cyc)) = current.girth_with_cycle() else {
            return Some(current);
        };
        if len >= target_girth {
            return Some(current);
        }
        // Swap one cycle edge with a random disjoint edge.
        let (u, v) = (cyc[0], cyc[1]);
        let mut done = false;
        for _ in 0..100 {
            let x = rng.gen_range(0..n);
            if x == u || x == v || adj[x].is_empty() {
                continue;
            }
            let y = adj[x][rng.gen_range(0..adj[x].len())];
            if y == u || y == v || adj[u].contains(&x) || adj[v].contains(&y) {
                continue;
            }
            adj[u].retain(|&w| w != v);
            adj[v].retain(|&w| w != u);
            adj[x].retain(|&w| w != y);
            adj[y].retain(|&w| w != x);
            adj[u].push(x);
            adj[x].push(u);
            adj[v].push(y);
            adj[y].push(v);
            for w in [u, v, x, y] {
                adj[w].sort_unstable();
            }
            done = true;
            break;
        }
        if !done {
            return None;
        }
    }
    None
}
