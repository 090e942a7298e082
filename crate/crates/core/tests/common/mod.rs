//! Slow reference implementations written straight from the definitions.
//! They share nothing with the library beyond the graph container.

#![allow(dead_code)]

use switchkit::{Graph, VertexSet};

pub fn naive_switch(g: &Graph, a: &VertexSet) -> Graph {
    let n = g.n();
    let mut out = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) != (a.contains(u) != a.contains(v)) {
                out.add_edge(u, v);
            }
        }
    }
    out
}

pub fn naive_cut(g: &Graph, a: &VertexSet) -> usize {
    g.edges().filter(|&(u, v)| a.contains(u) != a.contains(v)).count()
}

fn all_sets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u64..1 << n).map(move |m| VertexSet::from_mask(n, m))
}

pub fn naive_min_switch_edges(g: &Graph) -> usize {
    all_sets(g.n()).map(|a| naive_switch(g, &a).edge_count()).min().unwrap()
}

pub fn naive_max_cut(g: &Graph) -> usize {
    all_sets(g.n()).map(|a| naive_cut(g, &a)).max().unwrap()
}

pub fn naive_min_bisection(g: &Graph) -> usize {
    let n = g.n();
    all_sets(n)
        .filter(|a| 2 * a.len() == n)
        .map(|a| naive_cut(g, &a))
        .min()
        .unwrap()
}

pub fn random_set<R: rand::Rng>(rng: &mut R, n: usize) -> VertexSet {
    let mut a = VertexSet::empty(n);
    for v in 0..n {
        if rng.random_bool(0.5) {
            a.insert(v);
        }
    }
    a
}
