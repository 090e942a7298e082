use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracles;

use super::Reason;

/// A Max-Cut instance on `2n` vertices with minimum degree at least `2n-4`
/// whose complement is connected and triangle-free.
#[derive(Clone, Debug, Serialize)]
pub struct LargeDegInstance {
    pub graph: Graph,
    pub valid: bool,
    pub reasons: Vec<Reason>,
}

pub fn validate_large_deg(g: &Graph) -> LargeDegInstance {
    let n = g.n();
    let mut reasons = Vec::new();
    if n == 0 {
        reasons.push(Reason::EmptyGraph);
    }
    if n % 2 == 1 {
        reasons.push(Reason::OddOrder { n });
    }
    let min_degree = g.min_degree();
    if n > 0 && min_degree + 4 < n {
        reasons.push(Reason::MinDegreeTooSmall {
            min_degree,
            required: n - 4,
        });
    }
    let complement = g.complement();
    if let Some(triangle) = complement.find_triangle() {
        reasons.push(Reason::ComplementHasTriangle { triangle });
    }
    if !complement.is_connected() {
        reasons.push(Reason::ComplementDisconnected);
    }
    LargeDegInstance {
        graph: g.clone(),
        valid: reasons.is_empty(),
        reasons,
    }
}

fn cubic_defects(h: &Graph, need_triangle_free: bool) -> Vec<Reason> {
    let mut reasons = Vec::new();
    if h.n() == 0 {
        reasons.push(Reason::EmptyGraph);
    }
    if h.n() % 2 == 1 {
        reasons.push(Reason::OddOrder { n: h.n() });
    }
    if let Some(vertex) = (0..h.n()).find(|&v| h.degree(v) != 3) {
        reasons.push(Reason::NotCubic {
            vertex,
            degree: h.degree(vertex),
        });
    }
    if !h.is_connected() {
        reasons.push(Reason::Disconnected);
    }
    if need_triangle_free {
        if let Some(triangle) = h.find_triangle() {
            reasons.push(Reason::HasTriangle { triangle });
        }
    }
    reasons
}

/// The complement of a connected triangle-free cubic graph, validated as a
/// large-degree Max-Cut instance.
pub fn cubic_complement_instance(h: &Graph) -> Result<LargeDegInstance> {
    let reasons = cubic_defects(h, true);
    if !reasons.is_empty() {
        return Err(Error::Precondition(reasons));
    }
    let inst = validate_large_deg(&h.complement());
    if !inst.valid {
        return Err(Error::Precondition(inst.reasons));
    }
    Ok(inst)
}

#[derive(Clone, Debug, Serialize)]
pub struct DualityCheck {
    /// Half the order of `H`.
    pub half_order: usize,
    /// Minimum bisection of `H`.
    pub b: usize,
    /// Maximum cut of the complement of `H`.
    pub c: usize,
    pub holds: bool,
    pub bisection_side: VertexSet,
    pub cut_side: VertexSet,
}

/// Computes both sides of `b = n^2 - c` by brute force for a connected
/// cubic `H` on `2n` vertices.
pub fn bisection_duality_check(h: &Graph, guard: usize) -> Result<DualityCheck> {
    let reasons = cubic_defects(h, false);
    if !reasons.is_empty() {
        return Err(Error::Precondition(reasons));
    }
    let bis = oracles::min_bisection(h, guard)?;
    let cut = oracles::max_cut(&h.complement(), guard)?;
    let half = h.n() / 2;
    Ok(DualityCheck {
        half_order: half,
        b: bis.optimum,
        c: cut.optimum,
        holds: bis.optimum + cut.optimum == half * half,
        bisection_side: bis.witness,
        cut_side: cut.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::oracles::DEFAULT_GUARD;

    #[test]
    fn validation_examples() {
        let v = validate_large_deg(&families::two_triangles());
        assert!(v.valid, "{:?}", v.reasons);

        let k4 = validate_large_deg(&Graph::complete(4));
        assert!(!k4.valid);
        assert_eq!(k4.reasons, vec![Reason::ComplementDisconnected]);

        let c6 = validate_large_deg(&families::cycle(6));
        assert!(!c6.valid);
        assert!(matches!(c6.reasons[..], [Reason::ComplementHasTriangle { .. }]));

        let odd = validate_large_deg(&Graph::complete(5));
        assert!(odd.reasons.contains(&Reason::OddOrder { n: 5 }));

        let sparse = validate_large_deg(&families::cycle(8));
        assert!(sparse.reasons.contains(&Reason::MinDegreeTooSmall {
            min_degree: 2,
            required: 4
        }));
    }

    #[test]
    fn cubic_complement_examples() {
        let inst = cubic_complement_instance(&families::complete_bipartite(3, 3)).unwrap();
        assert_eq!(inst.graph, families::two_triangles());
        let p = cubic_complement_instance(&families::petersen()).unwrap();
        assert_eq!(p.graph.n(), 10);
        assert_eq!(p.graph.min_degree(), 6);
        match cubic_complement_instance(&families::prism()) {
            Err(Error::Precondition(r)) => assert!(matches!(r[..], [Reason::HasTriangle { .. }])),
            other => panic!("{other:?}"),
        }
        assert!(cubic_complement_instance(&families::cycle(6)).is_err());
    }

    #[test]
    fn duality_examples() {
        let k4 = bisection_duality_check(&Graph::complete(4), DEFAULT_GUARD).unwrap();
        assert_eq!((k4.b, k4.c, k4.holds), (4, 0, true));
        let k33 = bisection_duality_check(&families::complete_bipartite(3, 3), DEFAULT_GUARD).unwrap();
        assert_eq!((k33.b, k33.c, k33.holds), (5, 4, true));
        let p = bisection_duality_check(&families::petersen(), DEFAULT_GUARD).unwrap();
        assert!(p.holds);
        assert!(bisection_duality_check(&families::two_triangles(), DEFAULT_GUARD).is_err());
    }
}
