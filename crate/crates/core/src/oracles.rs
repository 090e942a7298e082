//! Brute-force ground truth: maximum cut, minimum bisection, and the minimum
//! number of edges over a switching class.
//!
//! Subset searches fix vertex 0 outside the candidate set; complementing a
//! set changes neither its cut nor its switch, so nothing is lost. Candidates
//! are split into chunks of at most 2^20 along the high vertex bits, each
//! chunk walked in Gray-code order with an O(1) cut update per step. Chunks
//! run in parallel and are merged with a min/max reduction that breaks ties
//! towards the smaller subset encoding, so the reported witness does not
//! depend on scheduling.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_GUARD: usize = 26;
/// Hard ceiling: subsets are encoded in a single `u64`.
pub const MAX_GUARD: usize = 63;

const CHUNK_BITS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub optimum: usize,
    pub witness: VertexSet,
    pub explored: u64,
}

pub fn check_guard(n: usize, guard: usize) -> Result<()> {
    let guard = guard.min(MAX_GUARD);
    if n > guard {
        return Err(Error::SizeLimit { n, guard });
    }
    Ok(())
}

/// Best (value, mask) seen so far under a "smaller key wins, then smaller
/// mask" order.
#[derive(Clone, Copy)]
struct Best {
    key: i64,
    mask: u64,
}

impl Best {
    const NONE: Best = Best {
        key: i64::MAX,
        mask: u64::MAX,
    };

    fn offer(&mut self, key: i64, mask: u64) {
        if (key, mask) < (self.key, self.mask) {
            *self = Best { key, mask };
        }
    }

    fn merge(self, other: Best) -> Best {
        if (other.key, other.mask) < (self.key, self.mask) {
            other
        } else {
            self
        }
    }
}

/// Walks every subset of `1..n` and minimises `key(|A|, e(A))`.
fn scan_subsets<K>(g: &Graph, key: K) -> (Best, u64)
where
    K: Fn(usize, usize) -> i64 + Sync,
{
    let n = g.n();
    if n <= 1 {
        return (
            Best {
                key: key(0, 0),
                mask: 0,
            },
            1,
        );
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    let deg: Vec<i64> = rows.iter().map(|r| r.count_ones() as i64).collect();
    let free = n - 1;
    let low = free.min(CHUNK_BITS);
    let high = free - low;

    let best = (0u64..1 << high)
        .into_par_iter()
        .map(|prefix| {
            let mut a = prefix << (low + 1);
            let mut size = a.count_ones() as usize;
            let mut cut: i64 = (0..n)
                .filter(|&v| a >> v & 1 == 1)
                .map(|v| (rows[v] & !a).count_ones() as i64)
                .sum();
            let mut best = Best::NONE;
            best.offer(key(size, cut as usize), a);
            for i in 1u64..1 << low {
                let v = 1 + i.trailing_zeros() as usize;
                let inside = (rows[v] & a).count_ones() as i64;
                if a >> v & 1 == 1 {
                    cut += 2 * inside - deg[v];
                    size -= 1;
                } else {
                    cut += deg[v] - 2 * inside;
                    size += 1;
                }
                a ^= 1 << v;
                best.offer(key(size, cut as usize), a);
            }
            if high > 0 {
                log::debug!("subset chunk {prefix}/{} done", 1u64 << high);
            }
            best
        })
        .reduce(|| Best::NONE, Best::merge);
    (best, 1u64 << free)
}

/// Maximum number of cut-edges over all cuts.
pub fn max_cut(g: &Graph, guard: usize) -> Result<OracleResult> {
    check_guard(g.n(), guard)?;
    let (best, explored) = scan_subsets(g, |_, cut| -(cut as i64));
    Ok(OracleResult {
        optimum: (-best.key) as usize,
        witness: VertexSet::from_mask(g.n(), best.mask),
        explored,
    })
}

/// Minimum of `|E(S(G, A))|` over all switch sets `A`.
pub fn min_switch_edges(g: &Graph, guard: usize) -> Result<OracleResult> {
    check_guard(g.n(), guard)?;
    let n = g.n();
    let m = g.edge_count();
    let (best, explored) = scan_subsets(g, |k, cut| (m + k * (n - k) - 2 * cut) as i64);
    Ok(OracleResult {
        optimum: best.key as usize,
        witness: VertexSet::from_mask(n, best.mask),
        explored,
    })
}

/// Minimum cut over balanced partitions; the witness side contains vertex 0.
pub fn min_bisection(g: &Graph, guard: usize) -> Result<OracleResult> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::OddOrder { n });
    }
    check_guard(n, guard)?;
    if n == 0 {
        return Ok(OracleResult {
            optimum: 0,
            witness: VertexSet::empty(0),
            explored: 1,
        });
    }
    let rows: Vec<u64> = (0..n).map(|v| g.row_mask(v)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let pick = n / 2 - 1;
    let limit = 1u64 << (n - 1);
    let mut best = Best::NONE;
    let mut explored = 0;
    // Gosper's hack over (n/2 - 1)-subsets of the n-1 free vertices, in
    // increasing order.
    let mut s: u64 = if pick == 0 { 0 } else { (1 << pick) - 1 };
    loop {
        let a = s << 1 | 1;
        let out = full & !a;
        let cut: u32 = (0..n)
            .filter(|&v| a >> v & 1 == 1)
            .map(|v| (rows[v] & out).count_ones())
            .sum();
        best.offer(cut as i64, a);
        explored += 1;
        if s == 0 {
            break;
        }
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
        if s >= limit {
            break;
        }
    }
    Ok(OracleResult {
        optimum: best.key as usize,
        witness: VertexSet::from_mask(n, best.mask),
        explored,
    })
}

/// Partition of the vertices into twin classes: vertices with equal open
/// neighbourhoods (non-adjacent twins) or equal closed neighbourhoods
/// (adjacent twins). Any permutation inside a class is an automorphism.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut class_of: Vec<Option<usize>> = vec![None; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let closed = |v: usize| {
        let mut r = g.row(v).to_vec();
        r[v / 64] |= 1 << (v % 64);
        r
    };
    for v in 0..n {
        if class_of[v].is_some() {
            continue;
        }
        let id = classes.len();
        class_of[v] = Some(id);
        let mut members = vec![v];
        let cv = closed(v);
        #[allow(clippy::needless_range_loop)]
        for w in v + 1..n {
            if class_of[w].is_none() && (g.row(v) == g.row(w) || cv == closed(w)) {
                class_of[w] = Some(id);
                members.push(w);
            }
        }
        classes.push(members);
    }
    classes
}

/// Minimum of `|E(S(G, A))|` enumerated over one representative per orbit
/// of the twin-permutation group: for each twin class only the number of
/// members taken into `A` matters. The guard bounds the number of
/// representatives by `2^(guard-1)`, the same budget the plain search uses.
pub fn min_switch_edges_by_twins(g: &Graph, guard: usize) -> Result<OracleResult> {
    let classes = twin_classes(g);
    let budget = 1u128 << (guard.min(MAX_GUARD).saturating_sub(1));
    let total: u128 = classes.iter().map(|c| c.len() as u128 + 1).product();
    if total > budget {
        // Report the number of vertex bits the search would need.
        let bits = 128 - (total - 1).leading_zeros() as usize + 1;
        return Err(Error::SizeLimit {
            n: bits,
            guard: guard.min(MAX_GUARD),
        });
    }
    let n = g.n();
    let mut counts = vec![0usize; classes.len()];
    let mut best: Option<(usize, VertexSet)> = None;
    let mut explored = 0u64;
    loop {
        let mut a = VertexSet::empty(n);
        for (class, &k) in classes.iter().zip(&counts) {
            for &v in &class[..k] {
                a.insert(v);
            }
        }
        let edges = g.switched_edge_count(&a)?;
        explored += 1;
        if best.as_ref().is_none_or(|(b, _)| edges < *b) {
            best = Some((edges, a));
        }
        // mixed-radix increment
        let mut i = 0;
        while i < counts.len() {
            if counts[i] < classes[i].len() {
                counts[i] += 1;
                break;
            }
            counts[i] = 0;
            i += 1;
        }
        if i == counts.len() {
            break;
        }
    }
    let (optimum, witness) = best.expect("at least the empty set is explored");
    Ok(OracleResult {
        optimum,
        witness,
        explored,
    })
}

/// Membership pattern of one gadget block: bit `i` of `inside_u` says whether
/// the `i`-th vertex of the first four-tuple is in the switch set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPattern {
    pub inside_u: u8,
    pub inside_v: u8,
    pub edges: usize,
}

impl BlockPattern {
    pub fn count_u(&self) -> u32 {
        self.inside_u.count_ones()
    }

    pub fn count_v(&self) -> u32 {
        self.inside_v.count_ones()
    }

    pub fn is_legal(&self) -> bool {
        let legal = |c: u32| c == 0 || c == 4;
        legal(self.count_u()) && legal(self.count_v())
    }
}

/// Edge counts of the two block types under all 2^8 membership patterns.
#[derive(Clone, Debug, Serialize)]
pub struct BlockPatternTable {
    pub edge_block: Vec<BlockPattern>,
    pub non_edge_block: Vec<BlockPattern>,
}

/// Facts extracted from a [`BlockPatternTable`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockInventory {
    pub legal_edge_counts: BTreeSet<usize>,
    pub legal_non_edge_counts: BTreeSet<usize>,
    pub illegal_non_edge_counts: BTreeSet<usize>,
    /// Counts below 8 among the broken non-edge patterns.
    pub illegal_deficit_counts: BTreeSet<usize>,
    /// Fewer than 8 edges on a non-edge block only when both ends are broken.
    pub deficit_needs_both_broken: bool,
    /// Exactly 4 edges only when some end holds exactly two vertices.
    pub four_needs_symmetric_end: bool,
    /// Legalising either end of a broken non-edge block restores 8 edges.
    pub one_legal_end_gives_eight: bool,
}

/// K_{4,4} between tuples {0..4} and {4..8}.
fn edge_block() -> Graph {
    Graph::from_edges(8, (0..4).flat_map(|i| (4..8).map(move |j| (i, j)))).unwrap()
}

/// Alternating 8-cycle u0-v0-u1-v1-u2-v2-u3-v3-u0 with u = 0..4, v = 4..8.
fn non_edge_block() -> Graph {
    Graph::from_edges(8, (0..4).flat_map(|i| [(i, 4 + i), (4 + i, (i + 1) % 4)])).unwrap()
}

/// Edges between the two tuples after switching; pairs inside a tuple are
/// not part of the block.
fn pattern_edges(block: &Graph, inside_u: u8, inside_v: u8) -> usize {
    let mask = inside_u as u64 | (inside_v as u64) << 4;
    let switched = block.switch(&VertexSet::from_mask(8, mask)).unwrap();
    switched.edges().filter(|&(x, y)| x < 4 && y >= 4).count()
}

pub fn block_pattern_table() -> BlockPatternTable {
    let tabulate = |block: &Graph| {
        let mut rows = Vec::with_capacity(256);
        for inside_u in 0u8..16 {
            for inside_v in 0u8..16 {
                rows.push(BlockPattern {
                    inside_u,
                    inside_v,
                    edges: pattern_edges(block, inside_u, inside_v),
                });
            }
        }
        rows
    };
    BlockPatternTable {
        edge_block: tabulate(&edge_block()),
        non_edge_block: tabulate(&non_edge_block()),
    }
}

impl BlockPatternTable {
    pub fn inventory(&self) -> BlockInventory {
        let broken = |c: u32| (1..=3).contains(&c);
        let legal_edge_counts = self
            .edge_block
            .iter()
            .filter(|p| p.is_legal())
            .map(|p| p.edges)
            .collect();
        let (legal, illegal): (Vec<&BlockPattern>, Vec<&BlockPattern>) =
            self.non_edge_block.iter().partition(|p| p.is_legal());
        let non_edge = non_edge_block();
        let one_legal_end_gives_eight = illegal.iter().all(|p| {
            [0u8, 15].iter().all(|&fill| {
                pattern_edges(&non_edge, fill, p.inside_v) == 8
                    && pattern_edges(&non_edge, p.inside_u, fill) == 8
            })
        });
        BlockInventory {
            legal_edge_counts,
            legal_non_edge_counts: legal.iter().map(|p| p.edges).collect(),
            illegal_non_edge_counts: illegal.iter().map(|p| p.edges).collect(),
            illegal_deficit_counts: illegal.iter().map(|p| p.edges).filter(|&e| e < 8).collect(),
            deficit_needs_both_broken: illegal
                .iter()
                .filter(|p| p.edges < 8)
                .all(|p| broken(p.count_u()) && broken(p.count_v())),
            four_needs_symmetric_end: illegal
                .iter()
                .filter(|p| p.edges == 4)
                .all(|p| p.count_u() == 2 || p.count_v() == 2),
            one_legal_end_gives_eight,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Direct evaluation of every subset, no incremental updates.
    fn naive_min_switch(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .map(|m| g.switch(&VertexSet::from_mask(n, m)).unwrap().edge_count())
            .min()
            .unwrap()
    }

    fn naive_max_cut(g: &Graph) -> usize {
        let n = g.n();
        (0u64..1 << n)
            .map(|m| g.cutset_size(&VertexSet::from_mask(n, m)).unwrap())
            .max()
            .unwrap()
    }

    fn k33() -> Graph {
        Graph::from_edges(6, (0..3).flat_map(|a| (3..6).map(move |b| (a, b)))).unwrap()
    }

    fn two_triangles() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3))
    }

    #[test]
    fn max_cut_examples() {
        let r = max_cut(&Graph::complete(4), DEFAULT_GUARD).unwrap();
        assert_eq!(r.optimum, 4);
        assert_eq!(r.explored, 8);
        assert_eq!(max_cut(&two_triangles(), DEFAULT_GUARD).unwrap().optimum, 4);
        assert_eq!(max_cut(&k33(), DEFAULT_GUARD).unwrap().optimum, 9);
    }

    #[test]
    fn max_cut_witness_is_smallest_encoding() {
        // K4: optimal sides are the 2-sets avoiding 0, smallest is {1,2}.
        let r = max_cut(&Graph::complete(4), DEFAULT_GUARD).unwrap();
        assert_eq!(r.witness.to_vec(), vec![1, 2]);
    }

    #[test]
    fn min_bisection_examples() {
        assert_eq!(min_bisection(&Graph::complete(4), DEFAULT_GUARD).unwrap().optimum, 4);
        let r = min_bisection(&k33(), DEFAULT_GUARD).unwrap();
        assert_eq!(r.optimum, 5);
        assert_eq!(r.explored, 10);
        assert!(r.witness.contains(0) && r.witness.len() == 3);
        assert_eq!(min_bisection(&two_triangles(), DEFAULT_GUARD).unwrap().optimum, 0);
        assert!(matches!(
            min_bisection(&Graph::complete(3), DEFAULT_GUARD),
            Err(Error::OddOrder { n: 3 })
        ));
        assert_eq!(min_bisection(&Graph::empty(2), DEFAULT_GUARD).unwrap().explored, 1);
    }

    #[test]
    fn min_switch_examples() {
        let r = min_switch_edges(&Graph::empty(5), DEFAULT_GUARD).unwrap();
        assert_eq!((r.optimum, r.witness.len()), (0, 0));
        let k44 = Graph::from_edges(8, (0..4).flat_map(|a| (4..8).map(move |b| (a, b)))).unwrap();
        assert_eq!(min_switch_edges(&k44, DEFAULT_GUARD).unwrap().optimum, 0);
        assert_eq!(min_switch_edges(&Graph::complete(3), DEFAULT_GUARD).unwrap().optimum, 1);
    }

    #[test]
    fn guard_is_enforced() {
        assert!(matches!(
            max_cut(&Graph::empty(30), DEFAULT_GUARD),
            Err(Error::SizeLimit { n: 30, guard: 26 })
        ));
        assert!(min_switch_edges(&Graph::empty(70), 100).is_err());
    }

    #[test]
    fn degenerate_orders() {
        for n in 0..2 {
            let g = Graph::empty(n);
            assert_eq!(max_cut(&g, DEFAULT_GUARD).unwrap().optimum, 0);
            assert_eq!(min_switch_edges(&g, DEFAULT_GUARD).unwrap().optimum, 0);
        }
    }

    #[test]
    fn chunked_scan_matches_naive_on_wider_graphs() {
        // 22 vertices forces two Gray-code chunks.
        let mut g = Graph::empty(22);
        for u in 0..22 {
            for v in u + 1..22 {
                if (u * 7 + v * 13) % 5 < 2 {
                    g.add_edge(u, v);
                }
            }
        }
        let r = min_switch_edges(&g, DEFAULT_GUARD).unwrap();
        assert_eq!(g.switch(&r.witness).unwrap().edge_count(), r.optimum);
        let c = max_cut(&g, DEFAULT_GUARD).unwrap();
        assert_eq!(g.cutset_size(&c.witness).unwrap(), c.optimum);
        assert_eq!(c.explored, 1 << 21);
    }

    #[test]
    fn oracles_match_naive_on_small_graphs() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for n in 0..9 {
            for _ in 0..20 {
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        if state & 1 == 1 {
                            g.add_edge(u, v);
                        }
                    }
                }
                assert_eq!(min_switch_edges(&g, DEFAULT_GUARD).unwrap().optimum, naive_min_switch(&g));
                assert_eq!(max_cut(&g, DEFAULT_GUARD).unwrap().optimum, naive_max_cut(&g));
                assert_eq!(min_switch_edges_by_twins(&g, DEFAULT_GUARD).unwrap().optimum, naive_min_switch(&g));
            }
        }
    }

    #[test]
    fn twin_classes_of_complete_bipartite() {
        let classes = twin_classes(&k33());
        assert_eq!(classes, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        let k4 = twin_classes(&Graph::complete(4));
        assert_eq!(k4, vec![vec![0, 1, 2, 3]]);
        let r = min_switch_edges_by_twins(&k33(), DEFAULT_GUARD).unwrap();
        assert_eq!((r.optimum, r.explored), (0, 16));
    }

    #[test]
    fn block_table_examples() {
        let t = block_pattern_table();
        let find = |rows: &[BlockPattern], u, v| rows.iter().find(|p| p.inside_u == u && p.inside_v == v).unwrap().edges;
        assert_eq!(find(&t.edge_block, 15, 15), 16);
        assert_eq!(find(&t.edge_block, 15, 0), 0);
        assert_eq!(find(&t.non_edge_block, 15, 0), 8);
        assert_eq!(t.edge_block.len(), 256);
    }

    #[test]
    fn block_inventory_matches_hand_counts() {
        let inv = block_pattern_table().inventory();
        assert_eq!(inv.legal_edge_counts, BTreeSet::from([0, 16]));
        assert_eq!(inv.legal_non_edge_counts, BTreeSet::from([8]));
        // Enumerated independently: broken non-edge blocks can also carry
        // 10 or 12 edges (e.g. one vertex inside on each side).
        assert_eq!(inv.illegal_non_edge_counts, BTreeSet::from([4, 6, 8, 10, 12]));
        assert_eq!(inv.illegal_deficit_counts, BTreeSet::from([4, 6]));
        assert!(inv.deficit_needs_both_broken);
        assert!(inv.four_needs_symmetric_end);
        assert!(inv.one_legal_end_gives_eight);
    }
}
