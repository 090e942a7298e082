//! Self-contained JSON records of reduction runs. Graphs are embedded as
//! graph6 strings together with their sizes and a SHA-256 of the graph6
//! text, so a reader can recompute every stated number.

use num_rational::Ratio;
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{parse_graph6, write_graph6};
use crate::reductions::{density_pad, GadgetInstance, PaddedInstance, Reason};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub graph6: String,
    pub vertices: usize,
    pub edges: usize,
    pub sha256: String,
}

impl GraphSummary {
    pub fn of(g: &Graph) -> GraphSummary {
        let graph6 = write_graph6(g);
        GraphSummary {
            sha256: hex::encode(Sha256::digest(graph6.as_bytes())),
            graph6,
            vertices: g.n(),
            edges: g.edge_count(),
        }
    }

    /// Decodes the embedded graph and checks the stated sizes and hash.
    pub fn decode(&self) -> Result<Graph> {
        let g = parse_graph6(&self.graph6)?;
        if GraphSummary::of(&g) != *self {
            return Err(Error::Internal(format!(
                "summary of {} does not match its graph",
                self.graph6
            )));
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GadgetCertificate {
    pub base: GraphSummary,
    pub gadget: GraphSummary,
    pub base_edges: usize,
    pub base_nonedges: usize,
    /// `16 * base_edges + 8 * base_nonedges`
    pub expected_edges: usize,
    /// Vertex `u` of the base owns gadget vertices `4u..4u+4`.
    pub tuple_layout: &'static str,
    pub guarantee_applies: bool,
    pub base_defects: Vec<Reason>,
}

impl GadgetCertificate {
    pub fn new(inst: &GadgetInstance) -> GadgetCertificate {
        GadgetCertificate {
            base: GraphSummary::of(inst.base()),
            gadget: GraphSummary::of(inst.gadget()),
            base_edges: inst.base_edges(),
            base_nonedges: inst.base_nonedges(),
            expected_edges: inst.expected_edge_count(),
            tuple_layout: "4u+i",
            guarantee_applies: inst.guarantee_applies(),
            base_defects: inst.base_defects().to_vec(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let base = self.base.decode()?;
        let gadget = self.gadget.decode()?;
        let rebuilt = GadgetInstance::build(&base);
        check(*rebuilt.gadget() == gadget, "gadget is not the blow-up of base")?;
        check(self.base_edges == base.edge_count(), "base edge count")?;
        check(self.base_nonedges == base.pair_count() - base.edge_count(), "base non-edge count")?;
        check(
            self.expected_edges == 16 * self.base_edges + 8 * self.base_nonedges,
            "expected edge formula",
        )?;
        check(gadget.edge_count() == self.expected_edges, "gadget edge count")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PaddingCertificate {
    pub density_bound: String,
    pub pad: usize,
    pub base: GraphSummary,
    pub padded: GraphSummary,
    pub density: String,
    pub k_in: i64,
    pub k_shift: usize,
    pub k_out: i64,
}

impl PaddingCertificate {
    pub fn new(inst: &PaddedInstance, c: Ratio<u64>, k_in: i64) -> Result<PaddingCertificate> {
        Ok(PaddingCertificate {
            density_bound: c.to_string(),
            pad: inst.pad,
            base: GraphSummary::of(&inst.base),
            padded: GraphSummary::of(&inst.padded),
            density: inst.padded.density()?.to_string(),
            k_in,
            k_shift: inst.k_shift,
            k_out: k_in + inst.k_shift as i64,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let c: Ratio<u64> = self
            .density_bound
            .parse()
            .map_err(|_| Error::Internal(format!("bad density {}", self.density_bound)))?;
        let base = self.base.decode()?;
        let padded = self.padded.decode()?;
        let (rebuilt, _) = density_pad(&base, 0, c)?;
        check(rebuilt.padded == padded, "padded graph differs from construction")?;
        check(rebuilt.pad == self.pad, "pad size")?;
        check(rebuilt.k_shift == self.k_shift, "k shift")?;
        check(self.k_out == self.k_in + self.k_shift as i64, "k map")?;
        let density = padded.density()?;
        check(density.to_string() == self.density, "density")?;
        check(density <= c, "density exceeds bound")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PipelineCertificate {
    pub cubic_input: GraphSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<Option<String>>>,
    pub max_cut_instance: GraphSummary,
    pub j: usize,
    pub gadget: GadgetCertificate,
    /// `|E(G')| - 16 j`
    pub k: i64,
    pub padding: Option<PaddingCertificate>,
    pub final_vertices: usize,
    pub final_edges: usize,
    pub final_k: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub solved: Option<SolvedTarget>,
}

/// Exact optimum of the emitted instance, when small enough to enumerate.
#[derive(Clone, Debug, Serialize)]
pub struct SolvedTarget {
    pub min_edges: usize,
    pub achievable: bool,
    pub witness: crate::graph::VertexSet,
}

impl PipelineCertificate {
    pub fn validate(&self) -> Result<()> {
        let h = self.cubic_input.decode()?;
        let base = self.max_cut_instance.decode()?;
        check(h.complement() == base, "max-cut instance is not the complement of the input")?;
        check(self.gadget.base == self.max_cut_instance, "gadget base")?;
        self.gadget.validate()?;
        check(
            self.k == self.gadget.gadget.edges as i64 - 16 * self.j as i64,
            "k = |E(G')| - 16 j",
        )?;
        let (vertices, edges, k) = match &self.padding {
            Some(p) => {
                p.validate()?;
                check(p.base == self.gadget.gadget, "padding base")?;
                check(p.k_in == self.k, "padding input k")?;
                (p.padded.vertices, p.padded.edges, p.k_out)
            }
            None => (self.gadget.gadget.vertices, self.gadget.gadget.edges, self.k),
        };
        check(vertices == self.final_vertices, "final vertex count")?;
        check(edges == self.final_edges, "final edge count")?;
        check(k == self.final_k, "final k")
    }
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Internal(format!("certificate check failed: {what}")))
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}
