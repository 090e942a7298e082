use std::ops::Range;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// `G` extended by `N` vertices joined to all of `V` (the set `Y`) and `N`
/// isolated vertices (the set `Z`), with `N = max{n, ceil(3n / 4c)}`.
///
/// `V` keeps indices `0..n`, `Y` is `n..n+N` and `Z` is `n+N..n+2N`.
#[derive(Clone, Debug, Serialize)]
pub struct PaddedInstance {
    pub base: Graph,
    pub padded: Graph,
    pub pad: usize,
    pub k_shift: usize,
}

impl PaddedInstance {
    pub fn v_range(&self) -> Range<usize> {
        0..self.base.n()
    }

    pub fn y_range(&self) -> Range<usize> {
        let n = self.base.n();
        n..n + self.pad
    }

    pub fn z_range(&self) -> Range<usize> {
        let n = self.base.n();
        n + self.pad..n + 2 * self.pad
    }

    /// Replaces `A` by a subset of `V` whose switch has no more edges:
    /// complement `A` if it holds more than `N` padding vertices, then drop
    /// the padding vertices.
    pub fn restrict_switchset(&self, a: &VertexSet) -> Result<VertexSet> {
        let total = self.padded.n();
        if a.universe() != total {
            return Err(Error::UniverseMismatch {
                set_n: a.universe(),
                graph_n: total,
            });
        }
        let n = self.base.n();
        let padding_inside = (n..total).filter(|&x| a.contains(x)).count();
        let a = if padding_inside > self.pad {
            a.complement()
        } else {
            a.clone()
        };
        VertexSet::from_indices(total, a.iter().filter(|&x| x < n))
    }
}

/// `ceil(3n / 4c)` for `c = p/q`.
fn pad_size(n: usize, c: Ratio<u64>) -> usize {
    let num = 3 * n as u128 * *c.denom() as u128;
    let den = 4 * *c.numer() as u128;
    let ceil = num.div_ceil(den);
    n.max(ceil as usize)
}

/// Pads `g` to density at most `c` and shifts the target `k` by `nN`.
pub fn density_pad(g: &Graph, k: usize, c: Ratio<u64>) -> Result<(PaddedInstance, usize)> {
    if *c.numer() == 0 || c >= Ratio::from_integer(1) {
        return Err(Error::DensityOutOfRange(c.to_string()));
    }
    let n = g.n();
    if n == 0 {
        return Err(Error::UndefinedDensity { n });
    }
    let pad = pad_size(n, c);
    let mut padded = Graph::empty(n + 2 * pad);
    for (u, v) in g.edges() {
        padded.add_edge(u, v);
    }
    for y in n..n + pad {
        for v in 0..n {
            padded.add_edge(y, v);
        }
    }
    let k_shift = n * pad;
    Ok((
        PaddedInstance {
            base: g.clone(),
            padded,
            pad,
            k_shift,
        },
        k + k_shift,
    ))
}
