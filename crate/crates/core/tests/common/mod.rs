//! Brute-force oracles shared by the integration tests. None of them call the
//! solvers they are used to check.

#![allow(dead_code)]

use nspg::SimpleGraph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn adjacency_masks(g: &SimpleGraph) -> Vec<u32> {
    let n = g.vertex_count();
    assert!(n <= 20, "bitmask oracles handle at most 20 vertices");
    (0..n)
        .map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u))
        .collect()
}

/// Largest clique by checking every vertex subset.
pub fn brute_clique(g: &SimpleGraph) -> usize {
    let adj = adjacency_masks(g);
    let n = adj.len();
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        if (0..n).all(|v| mask >> v & 1 == 0 || (mask & !(1 << v)) & !adj[v] == 0) {
            best = size;
        }
    }
    best
}

fn is_independent(adj: &[u32], mask: u32) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 0 || mask & adj[v] == 0)
}

/// Chromatic number as the fewest independent sets covering all vertices,
/// by dynamic programming over every subset.
pub fn brute_chromatic(g: &SimpleGraph) -> usize {
    let adj = adjacency_masks(g);
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> = (0..=full).map(|m| is_independent(&adj, m)).collect();
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for set in 1..=full {
        let low = set & set.wrapping_neg();
        let rest = set & !low;
        // every independent subset of `set` that contains its lowest vertex
        let mut sub = rest;
        loop {
            let part = sub | low;
            if independent[part as usize] && best[(set & !part) as usize] != usize::MAX {
                best[set as usize] = best[set as usize].min(best[(set & !part) as usize] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

fn connected_within(adj: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive & alive.wrapping_neg();
    let mut seen = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & alive & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == alive
}

/// Smallest vertex set whose removal disconnects the graph; `n - 1` for
/// complete graphs.
pub fn brute_kappa(g: &SimpleGraph) -> usize {
    let adj = adjacency_masks(g);
    let n = adj.len();
    let full = (1u32 << n) - 1;
    let mut best = n.saturating_sub(1);
    for cut in 0..=full {
        let k = cut.count_ones() as usize;
        if k >= best {
            continue;
        }
        let alive = full & !cut;
        if alive.count_ones() >= 2 && !connected_within(&adj, alive) {
            best = k;
        }
    }
    best
}

/// Hamiltonicity by Held–Karp dynamic programming over (visited set, end).
pub fn brute_hamiltonian(g: &SimpleGraph) -> bool {
    let adj = adjacency_masks(g);
    let n = adj.len();
    if n < 3 {
        return false;
    }
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for set in 1u32..(1 << n) {
        if set & 1 == 0 {
            continue;
        }
        let ends = reach[set as usize];
        for (v, &row) in adj.iter().enumerate() {
            if ends >> v & 1 == 0 {
                continue;
            }
            let mut next = row & !set;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(set | 1 << w) as usize] |= 1 << w;
            }
        }
    }
    let full = ((1u64 << n) - 1) as usize;
    reach[full] & adj[0] != 0
}

fn induced_is_cycle(adj: &[u32], mask: u32) -> bool {
    (0..adj.len()).all(|v| mask >> v & 1 == 0 || (adj[v] & mask).count_ones() == 2)
        && connected_within(adj, mask)
}

/// Whether some vertex subset of odd size at least 5 induces a cycle.
pub fn brute_has_odd_hole(g: &SimpleGraph) -> bool {
    let adj = adjacency_masks(g);
    let n = adj.len();
    (0u32..(1 << n)).any(|m| {
        let k = m.count_ones();
        k >= 5 && k % 2 == 1 && induced_is_cycle(&adj, m)
    })
}

/// Girth as the minimum over edges `uv` of `1 + dist(u, v)` in `G - uv`.
pub fn brute_girth(g: &SimpleGraph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for (u, v) in g.edges() {
        let mut dist = vec![usize::MAX; n];
        dist[u] = 0;
        let mut queue = std::collections::VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in g.neighbors(x) {
                if (x, y) == (u, v) || dist[y] != usize::MAX {
                    continue;
                }
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
        if dist[v] != usize::MAX {
            let len = dist[v] + 1;
            best = Some(best.map_or(len, |b| b.min(len)));
        }
    }
    best
}

/// `G(n, p)` graph with edge probability `p_percent / 100`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p_percent: u32) -> SimpleGraph {
    let mut g = SimpleGraph::with_vertices(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..100) < p_percent {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// The fixed family of 100 seeded random graphs on 1 to 10 vertices.
pub fn seeded_graphs() -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ee_d0f9_a7b5);
    (0..100)
        .map(|_| {
            let n = rng.random_range(1..=10);
            let p = rng.random_range(15..=85);
            random_graph(&mut rng, n, p)
        })
        .collect()
}

pub fn graph_from_edges(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::from_edges((0..n).map(|i| i.to_string()).collect(), edges.iter().copied()).unwrap()
}
