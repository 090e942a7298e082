use num_rational::Ratio;

use crate::certificate::{GadgetCertificate, GraphSummary, PaddingCertificate, PipelineCertificate};
use crate::error::Result;
use crate::graph::Graph;

use super::{cubic_complement_instance, density_pad, GadgetInstance};

#[derive(Clone, Debug)]
pub struct PipelineOutput {
    /// The switching instance: the gadget, padded when a density bound was
    /// requested.
    pub instance: Graph,
    /// `instance` switches to at most `k` edges iff the complement of the
    /// input has a cut with at least `j` edges.
    pub k: i64,
    pub certificate: PipelineCertificate,
}

/// Cubic graph `H` and cut target `j` to a switching-to-few-edges instance:
/// complement, four-tuple gadget with `k = |E(G')| - 16 j`, then optional
/// padding to density at most `c`.
pub fn full_pipeline(h: &Graph, j: usize, c: Option<Ratio<u64>>) -> Result<PipelineOutput> {
    let large_deg = cubic_complement_instance(h)?;
    let gadget = GadgetInstance::build(&large_deg.graph);
    let k = gadget.gadget().edge_count() as i64 - 16 * j as i64;
    let (instance, final_k, padding) = match c {
        Some(c) => {
            let (padded, _) = density_pad(gadget.gadget(), 0, c)?;
            let cert = PaddingCertificate::new(&padded, c, k)?;
            (padded.padded, cert.k_out, Some(cert))
        }
        None => (gadget.gadget().clone(), k, None),
    };
    let certificate = PipelineCertificate {
        cubic_input: GraphSummary::of(h),
        labels: None,
        max_cut_instance: GraphSummary::of(&large_deg.graph),
        j,
        gadget: GadgetCertificate::new(&gadget),
        k,
        padding,
        final_vertices: instance.n(),
        final_edges: instance.edge_count(),
        final_k,
        solved: None,
    };
    Ok(PipelineOutput {
        instance,
        k: final_k,
        certificate,
    })
}
