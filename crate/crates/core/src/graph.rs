//! Simple undirected graphs over dense vertex indices, vertex subsets, and the
//! Seidel switch.
//!
//! Adjacency is stored as one bit-packed row per vertex. A row occupies
//! `words = ceil(n / 64)` machine words, so a graph on at most 64 vertices has
//! single-word rows and can be handed to the subset oracles as plain masks.

use std::fmt;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Mask of the valid bits in the last word of a row over `n` vertices.
fn tail_mask(n: usize) -> u64 {
    match n % 64 {
        0 => u64::MAX,
        r => (1u64 << r) - 1,
    }
}

/// A subset of `0..n` for a stated ambient `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    bits: Vec<u64>,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            n,
            bits: vec![0; words_for(n)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for w in s.bits.iter_mut() {
            *w = u64::MAX;
        }
        s.trim();
        s
    }

    pub fn from_indices<I>(n: usize, indices: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::empty(n);
        for i in indices {
            if i >= n {
                return Err(Error::InvalidSet { index: i, n });
            }
            s.insert(i);
        }
        Ok(s)
    }

    /// Builds a set from the low `n` bits of `mask`. Requires `n <= 64`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= 64, "from_mask needs n <= 64");
        let mut s = Self::empty(n);
        if n > 0 {
            s.bits[0] = mask & tail_mask(n);
        }
        s
    }

    /// Low word of the set; only meaningful when `n <= 64`.
    pub fn to_mask(&self) -> u64 {
        self.bits.first().copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        if let Some(last) = self.bits.last_mut() {
            *last &= tail_mask(self.n);
        }
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn words(&self) -> &[u64] {
        &self.bits
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.bits[v / 64] >> (v % 64) & 1 == 1
    }

    /// Panics if `v` is outside the universe.
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.bits[v / 64] |= 1 << (v % 64);
    }

    pub fn remove(&mut self, v: usize) {
        if v < self.n {
            self.bits[v / 64] &= !(1 << (v % 64));
        }
    }

    pub fn toggle(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} outside 0..{}", self.n);
        self.bits[v / 64] ^= 1 << (v % 64);
    }

    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    pub fn complement(&self) -> Self {
        let mut s = VertexSet {
            n: self.n,
            bits: self.bits.iter().map(|w| !w).collect(),
        };
        s.trim();
        s
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "universe mismatch");
        VertexSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a ^ b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "universe mismatch");
        VertexSet {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| a & b).collect(),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet[{}]", self.n)?;
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
    edges: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
            edges: 0,
        }
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::InvalidSet { index: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Number of unordered vertex pairs, `n(n-1)/2`.
    pub fn pair_count(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    /// Adjacency row of `v` as a single mask. Requires `n <= 64`.
    pub fn row_mask(&self, v: usize) -> u64 {
        debug_assert!(self.n <= 64);
        self.rows[v * self.words]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adds `uv`, returning whether it was new. Panics on a self-loop or an
    /// index out of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        assert!(u < self.n && v < self.n && u != v, "bad edge {u}-{v}");
        if self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] |= 1 << (v % 64);
        self.rows[v * self.words + u / 64] |= 1 << (u % 64);
        self.edges += 1;
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.has_edge(u, v) {
            return false;
        }
        self.rows[u * self.words + v / 64] &= !(1 << (v % 64));
        self.rows[v * self.words + u / 64] &= !(1 << (u % 64));
        self.edges -= 1;
        true
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    fn check_set(&self, a: &VertexSet) -> Result<()> {
        if a.universe() != self.n {
            return Err(Error::UniverseMismatch {
                set_n: a.universe(),
                graph_n: self.n,
            });
        }
        Ok(())
    }

    /// The Seidel switch `S(G, A)`: every pair with exactly one endpoint in
    /// `A` is toggled.
    pub fn switch(&self, a: &VertexSet) -> Result<Graph> {
        self.check_set(a)?;
        let outside = a.complement();
        let mut rows = self.rows.clone();
        for v in 0..self.n {
            let mask = if a.contains(v) { outside.words() } else { a.words() };
            for (r, m) in rows[v * self.words..(v + 1) * self.words].iter_mut().zip(mask) {
                *r ^= m;
            }
        }
        let degree_sum: usize = rows.iter().map(|w| w.count_ones() as usize).sum();
        Ok(Graph {
            n: self.n,
            words: self.words,
            rows,
            edges: degree_sum / 2,
        })
    }

    pub fn complement(&self) -> Graph {
        let mut rows = vec![0u64; self.n * self.words];
        let tail = tail_mask(self.n);
        for v in 0..self.n {
            let row = &mut rows[v * self.words..(v + 1) * self.words];
            for (i, r) in row.iter_mut().enumerate() {
                *r = !self.rows[v * self.words + i];
            }
            if let Some(last) = row.last_mut() {
                *last &= tail;
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        Graph {
            n: self.n,
            words: self.words,
            rows,
            edges: self.pair_count() - self.edges,
        }
    }

    /// `e(A)`: number of edges with exactly one endpoint in `A`.
    pub fn cutset_size(&self, a: &VertexSet) -> Result<usize> {
        self.check_set(a)?;
        let outside = a.complement();
        Ok(a
            .iter()
            .map(|v| {
                self.row(v)
                    .iter()
                    .zip(outside.words())
                    .map(|(r, o)| (r & o).count_ones() as usize)
                    .sum::<usize>()
            })
            .sum())
    }

    /// `|E(S(G, A))|` without materialising the switch:
    /// `|E| + |A|(n - |A|) - 2 e(A)`.
    pub fn switched_edge_count(&self, a: &VertexSet) -> Result<usize> {
        let cut = self.cutset_size(a)?;
        let k = a.len();
        Ok(self.edges + k * (self.n - k) - 2 * cut)
    }

    /// Exact density `2|E| / (n(n-1))`.
    pub fn density(&self) -> Result<Ratio<u64>> {
        if self.n < 2 {
            return Err(Error::UndefinedDensity { n: self.n });
        }
        Ok(Ratio::new(self.edges as u64, self.pair_count() as u64))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::empty(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen.contains(w) {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    /// Lexicographically first triangle `(a, b, c)` with `a < b < c`, if any.
    pub fn find_triangle(&self) -> Option<(usize, usize, usize)> {
        for (a, b) in self.edges() {
            let common = self
                .row(a)
                .iter()
                .zip(self.row(b))
                .enumerate()
                .find_map(|(wi, (x, y))| {
                    let mut w = x & y;
                    while w != 0 {
                        let c = wi * 64 + w.trailing_zeros() as usize;
                        if c > b {
                            return Some(c);
                        }
                        w &= w - 1;
                    }
                    None
                });
            if let Some(c) = common {
                return Some((a, b, c));
            }
        }
        None
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + shift, v + shift);
        }
        g
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// A cut `(side, V \ side)` together with its number of cut-edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub side: VertexSet,
    pub cut_edges: usize,
}

impl Cut {
    pub fn new(g: &Graph, side: VertexSet) -> Result<Cut> {
        let cut_edges = g.cutset_size(&side)?;
        Ok(Cut { side, cut_edges })
    }
}

/// Rewrites "can `g` be switched to at least `k` edges" as the equivalent
/// "can `complement(g)` be switched to at most `binom(n,2) - k` edges".
///
/// The returned bound is negative when `k` exceeds the number of pairs, in
/// which case neither query is satisfiable.
pub fn ge_k_via_complement(g: &Graph, k: usize) -> (Graph, i64) {
    (g.complement(), g.pair_count() as i64 - k as i64)
}
