use crate::error::{Error, Result};
use crate::graph::{Cut, Graph, VertexSet};

use super::{validate_large_deg, Reason};

/// The four-tuple blow-up of a base graph.
///
/// Base vertex `u` becomes the o-vertex `{4u, 4u+1, 4u+2, 4u+3}`. A base
/// edge `uv` becomes a complete bipartite block between the two tuples; a
/// base non-edge becomes the alternating 8-cycle
/// `u0-v0-u1-v1-u2-v2-u3-v3-u0` (with `u < v`).
#[derive(Clone, Debug)]
pub struct GadgetInstance {
    base: Graph,
    gadget: Graph,
    base_defects: Vec<Reason>,
}

impl GadgetInstance {
    pub fn build(base: &Graph) -> GadgetInstance {
        let n = base.n();
        let mut gadget = Graph::empty(4 * n);
        for u in 0..n {
            for v in u + 1..n {
                if base.has_edge(u, v) {
                    for i in 0..4 {
                        for j in 0..4 {
                            gadget.add_edge(4 * u + i, 4 * v + j);
                        }
                    }
                } else {
                    for i in 0..4 {
                        gadget.add_edge(4 * u + i, 4 * v + i);
                        gadget.add_edge(4 * v + i, 4 * u + (i + 1) % 4);
                    }
                }
            }
        }
        GadgetInstance {
            base: base.clone(),
            gadget,
            base_defects: validate_large_deg(base).reasons,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn gadget(&self) -> &Graph {
        &self.gadget
    }

    pub fn base_edges(&self) -> usize {
        self.base.edge_count()
    }

    pub fn base_nonedges(&self) -> usize {
        self.base.pair_count() - self.base.edge_count()
    }

    /// `16 m + 8 (binom(n,2) - m)`.
    pub fn expected_edge_count(&self) -> usize {
        16 * self.base_edges() + 8 * self.base_nonedges()
    }

    pub fn tuple_of(&self, u: usize) -> [usize; 4] {
        [4 * u, 4 * u + 1, 4 * u + 2, 4 * u + 3]
    }

    /// Base vertex owning gadget vertex `x`.
    pub fn owner(&self, x: usize) -> usize {
        x / 4
    }

    /// Whether the base graph is a valid large-degree Max-Cut instance, the
    /// setting in which legalisation costs at most 7 edges.
    pub fn guarantee_applies(&self) -> bool {
        self.base_defects.is_empty()
    }

    pub fn base_defects(&self) -> &[Reason] {
        &self.base_defects
    }

    pub(crate) fn check_gadget_set(&self, a: &VertexSet) -> Result<()> {
        if a.universe() != self.gadget.n() {
            return Err(Error::UniverseMismatch {
                set_n: a.universe(),
                graph_n: self.gadget.n(),
            });
        }
        Ok(())
    }

    /// Number of vertices of each o-vertex inside `a`.
    pub fn inside_counts(&self, a: &VertexSet) -> Result<Vec<u8>> {
        self.check_gadget_set(a)?;
        Ok((0..self.base.n())
            .map(|u| self.tuple_of(u).iter().filter(|&&x| a.contains(x)).count() as u8)
            .collect())
    }

    /// Lowest o-vertex with 1..=3 of its vertices in `a`, with that count.
    pub fn first_broken(&self, a: &VertexSet) -> Result<Option<(usize, usize)>> {
        Ok(self
            .inside_counts(a)?
            .into_iter()
            .enumerate()
            .find(|&(_, c)| (1..=3).contains(&c))
            .map(|(u, c)| (u, c as usize)))
    }

    pub fn is_legal(&self, a: &VertexSet) -> Result<bool> {
        Ok(self.first_broken(a)?.is_none())
    }

    /// `V1'`: the union of the four-tuples of the base vertices in `v1`.
    pub fn cut_to_switchset(&self, v1: &VertexSet) -> Result<VertexSet> {
        if v1.universe() != self.base.n() {
            return Err(Error::UniverseMismatch {
                set_n: v1.universe(),
                graph_n: self.base.n(),
            });
        }
        let mut a = VertexSet::empty(self.gadget.n());
        for u in v1.iter() {
            for x in self.tuple_of(u) {
                a.insert(x);
            }
        }
        Ok(a)
    }

    /// Over all vertices of the o-neighbours of `v`: members of `a` minus
    /// non-members.
    pub fn dif(&self, a: &VertexSet, v: usize) -> Result<i64> {
        if v >= self.base.n() {
            return Err(Error::InvalidSet {
                index: v,
                n: self.base.n(),
            });
        }
        let counts = self.inside_counts(a)?;
        Ok(dif_from_counts(&self.base, &counts, v))
    }

    /// The base cut `V_A` of a legal switch set.
    pub fn switchset_to_cut(&self, a: &VertexSet) -> Result<Cut> {
        if let Some((vertex, inside)) = self.first_broken(a)? {
            return Err(Error::IllegalSwitchSet { vertex, inside });
        }
        let counts = self.inside_counts(a)?;
        let side = VertexSet::from_indices(
            self.base.n(),
            counts.iter().enumerate().filter(|&(_, &c)| c == 4).map(|(u, _)| u),
        )?;
        Cut::new(&self.base, side)
    }
}

pub(crate) fn dif_from_counts(base: &Graph, counts: &[u8], v: usize) -> i64 {
    base.neighbors(v).map(|w| 2 * counts[w] as i64 - 4).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn single_edge_is_one_k44() {
        let inst = GadgetInstance::build(&Graph::complete(2));
        assert_eq!(inst.gadget().n(), 8);
        assert_eq!(inst.gadget().edge_count(), 16);
        assert_eq!(*inst.gadget(), families::complete_bipartite(4, 4));
    }

    #[test]
    fn single_non_edge_is_one_c8() {
        let inst = GadgetInstance::build(&Graph::empty(2));
        let g = inst.gadget();
        assert_eq!(g.edge_count(), 8);
        assert!((0..8).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());
        // alternates between the tuples
        assert!(g.edges().all(|(x, y)| (x < 4) != (y < 4)));
    }

    #[test]
    fn two_triangles_count() {
        let inst = GadgetInstance::build(&families::two_triangles());
        assert_eq!(inst.gadget().n(), 24);
        assert_eq!(inst.expected_edge_count(), 168);
        assert_eq!(inst.gadget().edges().count(), 168);
        assert!(inst.guarantee_applies());
    }

    #[test]
    fn tuples_are_independent() {
        let inst = GadgetInstance::build(&Graph::complete(5));
        for u in 0..5 {
            let t = inst.tuple_of(u);
            for &x in &t {
                assert_eq!(inst.owner(x), u);
                for &y in &t {
                    assert!(!inst.gadget().has_edge(x, y));
                }
            }
        }
    }

    #[test]
    fn cut_to_switchset_examples() {
        let k2 = GadgetInstance::build(&Graph::complete(2));
        let a = k2.cut_to_switchset(&VertexSet::from_indices(2, [0]).unwrap()).unwrap();
        assert_eq!(a.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(k2.gadget().switch(&a).unwrap().edge_count(), 0);

        let inst = GadgetInstance::build(&families::two_triangles());
        let none = inst.cut_to_switchset(&VertexSet::empty(6)).unwrap();
        assert_eq!(inst.gadget().switch(&none).unwrap().edge_count(), 168);
        // one vertex from each triangle: 4 cut edges
        let v1 = VertexSet::from_indices(6, [0, 3]).unwrap();
        assert_eq!(inst.base().cutset_size(&v1).unwrap(), 4);
        let a = inst.cut_to_switchset(&v1).unwrap();
        assert_eq!(inst.gadget().switch(&a).unwrap().edge_count(), 104);
        assert!(inst.cut_to_switchset(&VertexSet::empty(5)).is_err());
    }

    #[test]
    fn dif_examples() {
        let k2 = GadgetInstance::build(&Graph::complete(2));
        let a = VertexSet::from_indices(8, [0]).unwrap();
        assert_eq!(k2.dif(&a, 0).unwrap(), -4);
        assert_eq!(k2.dif(&a, 1).unwrap(), -2);

        let inst = GadgetInstance::build(&families::petersen());
        let empty = VertexSet::empty(40);
        for v in 0..10 {
            assert_eq!(inst.dif(&empty, v).unwrap(), -4 * 3);
        }
        assert!(inst.dif(&empty, 10).is_err());
    }

    #[test]
    fn switchset_to_cut_examples() {
        let inst = GadgetInstance::build(&families::two_triangles());
        let v1 = VertexSet::from_indices(6, [1, 4, 5]).unwrap();
        let a = inst.cut_to_switchset(&v1).unwrap();
        let cut = inst.switchset_to_cut(&a).unwrap();
        assert_eq!(cut.side, v1);
        let empty = inst.switchset_to_cut(&VertexSet::empty(24)).unwrap();
        assert_eq!(empty.cut_edges, 0);
        let broken = VertexSet::from_indices(24, [5]).unwrap();
        assert!(matches!(
            inst.switchset_to_cut(&broken),
            Err(Error::IllegalSwitchSet { vertex: 1, inside: 1 })
        ));
    }
}
