//! Named regression graphs and seeded random graph generators.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, Multiplicity};

use Multiplicity::{Finite, Omega};

fn build(vertices: &[&str], edges: &[(&str, &str, Multiplicity)]) -> Graph {
    Graph::new(vertices, edges).expect("named graph is well formed")
}

/// One vertex with a single loop.
pub fn l1() -> Graph {
    build(&["v"], &[("v", "v", Finite(1))])
}

/// One vertex with two loops.
pub fn r2() -> Graph {
    build(&["v"], &[("v", "v", Finite(2))])
}

/// The path u -> v -> w.
pub fn a3() -> Graph {
    build(&["u", "v", "w"], &[("u", "v", Finite(1)), ("v", "w", Finite(1))])
}

/// Toeplitz graph: loop c at v and an edge f from v to the sink w.
pub fn t1() -> Graph {
    build(&["v", "w"], &[("v", "v", Finite(1)), ("v", "w", Finite(1))])
}

/// Infinite emitter u with ω edges to a and one edge to b.
pub fn b1() -> Graph {
    build(&["u", "a", "b"], &[("u", "a", Omega), ("u", "b", Finite(1))])
}

/// Two-step truncation of the two-loops-per-vertex chain: v2 -> v1.
pub fn c2() -> Graph {
    build(
        &["v1", "v2"],
        &[("v1", "v1", Finite(2)), ("v2", "v2", Finite(2)), ("v2", "v1", Finite(1))],
    )
}

/// Two disjoint single loops.
pub fn d2() -> Graph {
    build(&["v1", "v2"], &[("v1", "v1", Finite(1)), ("v2", "v2", Finite(1))])
}

/// Two disjoint roses with two petals each.
pub fn rr() -> Graph {
    build(&["r1", "r2"], &[("r1", "r1", Finite(2)), ("r2", "r2", Finite(2))])
}

/// u -> a, u -> b.
pub fn fork() -> Graph {
    build(&["u", "a", "b"], &[("u", "a", Finite(1)), ("u", "b", Finite(1))])
}

pub fn isolated() -> Graph {
    build(&["v"], &[])
}

pub fn named() -> Vec<(&'static str, Graph)> {
    vec![
        ("L1", l1()),
        ("R2", r2()),
        ("A3", a3()),
        ("T1", t1()),
        ("B1", b1()),
        ("C2", c2()),
        ("D2", d2()),
        ("RR", rr()),
        ("FORK", fork()),
        ("ISO", isolated()),
    ]
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i:02}")).collect()
}

fn random_multiplicity(rng: &mut ChaCha8Rng, allow_omega: bool) -> Multiplicity {
    let roll: f64 = rng.gen();
    if allow_omega && roll < 0.15 {
        Omega
    } else if roll < 0.4 {
        Finite(2)
    } else {
        Finite(1)
    }
}

/// A random graph on at most `max_vertices` vertices with multiplicities in
/// {1, 2, ω}.
pub fn random_graph(seed: u64, max_vertices: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let density = rng.gen_range(0.1..0.4);
    let names = vertex_names(n);
    let mut edges = Vec::new();
    for s in 0..n {
        for t in 0..n {
            if rng.gen_bool(density) {
                let m = random_multiplicity(&mut rng, true);
                edges.push((names[s].as_str(), names[t].as_str(), m));
            }
        }
    }
    build(&names.iter().map(String::as_str).collect::<Vec<_>>(), &edges)
}

/// A random row-finite acyclic graph (edges only go from lower to higher
/// index, finite multiplicities).
pub fn random_dag(seed: u64, max_vertices: usize) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_vertices);
    let density = rng.gen_range(0.15..0.5);
    let names = vertex_names(n);
    let mut edges = Vec::new();
    for s in 0..n {
        for t in s + 1..n {
            if rng.gen_bool(density) {
                let m = random_multiplicity(&mut rng, false);
                edges.push((names[s].as_str(), names[t].as_str(), m));
            }
        }
    }
    build(&names.iter().map(String::as_str).collect::<Vec<_>>(), &edges)
}

/// Named graphs followed by `random` seeded random graphs (≤ 8 vertices).
pub fn corpus(random: usize) -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> =
        named().into_iter().map(|(n, g)| (n.to_string(), g)).collect();
    for seed in 0..random as u64 {
        out.push((format!("random-{seed}"), random_graph(seed, 8)));
    }
    out
}
