//! Switching-minimality and switching to few edges.
//!
//! A graph is switching-minimal iff every `A` satisfies
//! `2 e(A) <= |A| (n - |A|)`, since `|E(S(G,A))| - |E(G)| = |A|(n-|A|) - 2e(A)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::oracles::{self, check_guard, OracleResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    KozerenkoSearch,
    MaxdegSufficient,
    Oracle,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityVerdict {
    pub minimal: bool,
    /// A set whose switch has strictly fewer edges; present iff not minimal.
    pub witness: Option<VertexSet>,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FewEdgesVerdict {
    pub k: usize,
    pub achievable: bool,
    pub best_edges: usize,
    pub witness: VertexSet,
}

/// Searches for the smallest subset encoding `A` (vertex 0 outside) with
/// `2 e(A) > |A| (n - |A|)`. The witness is reported as the smaller of `A`
/// and its complement; both give the same switch.
pub fn kozerenko_reducible(g: &Graph, guard: usize) -> Result<MinimalityVerdict> {
    let n = g.n();
    check_guard(n, guard)?;
    if n <= 1 {
        return Ok(MinimalityVerdict {
            minimal: true,
            witness: None,
            method: Method::KozerenkoSearch,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    let violates = |free: u64| {
        let a = free << 1;
        let mut cut = 0usize;
        let mut rest = a;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            cut += (rows[v] & !a).count_ones() as usize;
            rest &= rest - 1;
        }
        let k = a.count_ones() as usize;
        2 * cut > k * (n - k)
    };
    let found = (1u64..1 << (n - 1)).into_par_iter().find_first(|&s| violates(s));
    Ok(MinimalityVerdict {
        minimal: found.is_none(),
        witness: found.map(|s| {
            let a = VertexSet::from_mask(n, s << 1);
            if 2 * a.len() > n {
                a.complement()
            } else {
                a
            }
        }),
        method: Method::KozerenkoSearch,
    })
}

/// Declares `g` minimal when its maximum degree is at most `n/4`; `None`
/// when the test does not apply.
pub fn maxdeg_sufficient(g: &Graph) -> Option<MinimalityVerdict> {
    (4 * g.max_degree() <= g.n()).then_some(MinimalityVerdict {
        minimal: true,
        witness: None,
        method: Method::MaxdegSufficient,
    })
}

/// Cheap test first, exhaustive search otherwise.
pub fn decide_minimal(g: &Graph, guard: usize) -> Result<MinimalityVerdict> {
    match maxdeg_sufficient(g) {
        Some(v) => Ok(v),
        None => kozerenko_reducible(g, guard),
    }
}

/// Repeatedly switches the lowest-index vertex of degree above
/// `floor((n-1)/2)`. Each switch removes at least one edge. The result has
/// maximum degree within the bound but need not be switching-minimal.
pub fn degree_reduce(g: &Graph) -> (Graph, VertexSet) {
    let n = g.n();
    let bound = n.saturating_sub(1) / 2;
    let mut cur = g.clone();
    let mut acc = VertexSet::empty(n);
    while let Some(v) = (0..n).find(|&v| cur.degree(v) > bound) {
        let single = VertexSet::from_indices(n, [v]).expect("in range");
        let next = cur.switch(&single).expect("same universe");
        debug_assert!(next.edge_count() < cur.edge_count());
        cur = next;
        acc.toggle(v);
    }
    (cur, acc)
}

/// Minimum edge count over the switching class of `g`.
pub fn min_edges_exact(g: &Graph, guard: usize) -> Result<OracleResult> {
    oracles::min_switch_edges(g, guard)
}

/// Is `g` switchable to at most `k` edges?
pub fn few_edges(g: &Graph, k: usize, guard: usize) -> Result<FewEdgesVerdict> {
    let r = min_edges_exact(g, guard)?;
    Ok(FewEdgesVerdict {
        k,
        achievable: r.optimum <= k,
        best_edges: r.optimum,
        witness: r.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::oracles::DEFAULT_GUARD;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn star_is_reducible_at_its_centre() {
        // centre last so the smallest violating encoding is the centre itself
        let star = Graph::from_edges(5, (0..4).map(|i| (i, 4))).unwrap();
        let v = kozerenko_reducible(&star, DEFAULT_GUARD).unwrap();
        assert!(!v.minimal);
        let w = v.witness.unwrap();
        assert_eq!(w.to_vec(), vec![4]);
        assert!(star.switch(&w).unwrap().edge_count() < star.edge_count());

        // centre at 0: the search finds all leaves, reported as the centre
        let star0 = Graph::from_edges(5, (1..5).map(|i| (0, i))).unwrap();
        let w0 = kozerenko_reducible(&star0, DEFAULT_GUARD).unwrap().witness.unwrap();
        assert_eq!(w0.to_vec(), vec![0]);
    }

    #[test]
    fn empty_and_cycles_are_minimal() {
        assert!(kozerenko_reducible(&Graph::empty(7), DEFAULT_GUARD).unwrap().minimal);
        assert!(kozerenko_reducible(&families::cycle(8), DEFAULT_GUARD).unwrap().minimal);
        let v = maxdeg_sufficient(&families::cycle(9)).unwrap();
        assert!(v.minimal);
        assert_eq!(v.method, Method::MaxdegSufficient);
    }

    #[test]
    fn complete_bipartite_four_four() {
        let k44 = families::complete_bipartite(4, 4);
        assert!(maxdeg_sufficient(&k44).is_none());
        let v = kozerenko_reducible(&k44, DEFAULT_GUARD).unwrap();
        assert!(!v.minimal);
        let side = VertexSet::from_indices(8, 0..4).unwrap();
        assert_eq!(k44.switch(&side).unwrap().edge_count(), 0);
        assert_eq!(min_edges_exact(&k44, DEFAULT_GUARD).unwrap().optimum, 0);
    }

    #[test]
    fn size_guard() {
        assert!(kozerenko_reducible(&Graph::empty(40), DEFAULT_GUARD).is_err());
    }

    #[test]
    fn degree_reduce_examples() {
        let (g, a) = degree_reduce(&Graph::complete(3));
        assert_eq!(g.edge_count(), 1);
        assert_eq!(a.to_vec(), vec![0]);
        let (g, a) = degree_reduce(&Graph::empty(6));
        assert_eq!(g, Graph::empty(6));
        assert!(a.is_empty());
    }

    #[test]
    fn degree_reduce_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.random_range(0..=14);
            let g = families::random_graph(&mut rng, n, 0.5);
            let (h, a) = degree_reduce(&g);
            assert!(h.max_degree() <= n.saturating_sub(1) / 2);
            assert!(h.edge_count() <= g.edge_count());
            assert_eq!(g.switch(&a).unwrap(), h);
        }
    }

    #[test]
    fn few_edges_threshold() {
        let v = few_edges(&Graph::complete(3), 1, DEFAULT_GUARD).unwrap();
        assert!(v.achievable);
        assert_eq!(v.best_edges, 1);
        assert!(!few_edges(&Graph::complete(3), 0, DEFAULT_GUARD).unwrap().achievable);
    }
}
