//! Named graphs and generators used by tests, the verify suites and the CLI.

use rand::Rng;

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    Graph::complete(n)
}

pub fn cycle(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    if n >= 3 {
        for i in 0..n {
            g.add_edge(i, (i + 1) % n);
        }
    }
    g
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// Star with the given number of leaves; the centre is vertex 0.
pub fn star(leaves: usize) -> Graph {
    complete_bipartite(1, leaves)
}

pub fn two_triangles() -> Graph {
    complete(3).disjoint_union(&complete(3))
}

/// Triangular prism: triangles 0-1-2 and 3-4-5 joined by a matching.
pub fn prism() -> Graph {
    let mut g = two_triangles();
    for i in 0..3 {
        g.add_edge(i, i + 3);
    }
    g
}

/// The 3-cube Q3 on bit strings 0..8.
pub fn cube() -> Graph {
    let mut g = Graph::empty(8);
    for v in 0..8 {
        for b in 0..3 {
            let w = v ^ (1 << b);
            if v < w {
                g.add_edge(v, w);
            }
        }
    }
    g
}

/// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i - i+5.
pub fn petersen() -> Graph {
    let mut g = Graph::empty(10);
    for i in 0..5 {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, i + 5);
    }
    g
}

/// G(n, p) with independent edges.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random graph whose degrees never exceed `cap`: pairs are offered in a
/// random order and kept when both endpoints still have room.
pub fn random_graph_max_degree<R: Rng>(rng: &mut R, n: usize, cap: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.random_range(0..=i));
    }
    let mut g = Graph::empty(n);
    for (u, v) in pairs {
        if g.degree(u) < cap && g.degree(v) < cap && rng.random_bool(0.7) {
            g.add_edge(u, v);
        }
    }
    g
}

/// Every labelled graph on `n` vertices, in order of the bitmask over pairs
/// `(0,1), (0,2), ..., (n-2,n-1)`. Only sensible for small `n`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(pairs.len() < 32, "too many labelled graphs on {n} vertices");
    (0u32..1 << pairs.len()).map(move |mask| {
        let mut g = Graph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Every labelled 3-regular graph on `n` vertices, connected or not.
pub fn cubic_graphs(n: usize) -> Vec<Graph> {
    fn extend(g: &mut Graph, v: usize, out: &mut Vec<Graph>) {
        let n = g.n();
        if v == n {
            out.push(g.clone());
            return;
        }
        let need = 3usize.saturating_sub(g.degree(v));
        if g.degree(v) > 3 {
            return;
        }
        let open: Vec<usize> = (v + 1..n).filter(|&w| g.degree(w) < 3).collect();
        if open.len() < need {
            return;
        }
        choose(g, v, &open, 0, need, out);
    }

    fn choose(g: &mut Graph, v: usize, open: &[usize], from: usize, need: usize, out: &mut Vec<Graph>) {
        if need == 0 {
            extend(g, v + 1, out);
            return;
        }
        for i in from..open.len() {
            if open.len() - i < need {
                break;
            }
            g.add_edge(v, open[i]);
            choose(g, v, open, i + 1, need - 1, out);
            g.remove_edge(v, open[i]);
        }
    }

    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        extend(&mut Graph::empty(n), 0, &mut out);
    }
    out
}
