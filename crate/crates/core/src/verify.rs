//! Seeded property suites behind `switchkit verify`.
//!
//! Each suite draws from its own ChaCha stream derived from the run seed, so
//! a report depends only on the seed, the guard and the suite selection.

use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::families;
use crate::graph::{Graph, VertexSet};
use crate::io::write_graph6;
use crate::minimality::{kozerenko_reducible, maxdeg_sufficient};
use crate::oracles::{self, block_pattern_table};
use crate::reductions::{bisection_duality_check, density_pad, GadgetInstance, HalfUnits};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    SwitchAlgebra,
    Kozerenko,
    Gadget,
    Legalize,
    Duality,
    Padding,
    Blocks,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::SwitchAlgebra,
        Suite::Kozerenko,
        Suite::Gadget,
        Suite::Legalize,
        Suite::Duality,
        Suite::Padding,
        Suite::Blocks,
    ];

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl std::str::FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.to_string() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::SwitchAlgebra => "switch-algebra",
            Suite::Kozerenko => "kozerenko",
            Suite::Gadget => "gadget",
            Suite::Legalize => "legalize",
            Suite::Duality => "duality",
            Suite::Padding => "padding",
            Suite::Blocks => "blocks",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub invariant: String,
    pub passed: bool,
    pub trials: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub guard: usize,
    pub passed: bool,
    pub suites: Vec<SuiteReport>,
}

#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    pub guard: usize,
    pub suites: Vec<Suite>,
    /// A gadget graph to inspect instead of freshly built ones.
    pub gadget_input: Option<Graph>,
}

/// Accumulates trials for one invariant and keeps the first failure.
struct Check {
    invariant: &'static str,
    trials: u64,
    counterexample: Option<String>,
}

impl Check {
    fn new(invariant: &'static str) -> Check {
        Check {
            invariant,
            trials: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.trials += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(witness());
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            invariant: self.invariant.to_string(),
            passed: self.counterexample.is_none(),
            trials: self.trials,
            counterexample: self.counterexample,
        }
    }
}

fn show(g: &Graph, sets: &[&VertexSet]) -> String {
    let mut s = format!("graph6={}", write_graph6(g));
    for a in sets {
        s.push_str(&format!(" set={:?}", a.to_vec()));
    }
    s
}

fn random_set<R: Rng>(rng: &mut R, n: usize) -> VertexSet {
    let mut a = VertexSet::empty(n);
    for v in 0..n {
        if rng.random_bool(0.5) {
            a.insert(v);
        }
    }
    a
}

pub fn run(config: &VerifyConfig) -> Result<VerifyReport> {
    let suites = if config.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        let mut s = config.suites.clone();
        s.sort();
        s.dedup();
        s
    };
    let mut reports = Vec::new();
    for suite in suites {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(suite.stream());
        let checks = match suite {
            Suite::SwitchAlgebra => switch_algebra(&mut rng),
            Suite::Kozerenko => kozerenko(&mut rng, config.guard)?,
            Suite::Gadget => match &config.gadget_input {
                Some(g) => inspect_gadget(g, config.guard)?,
                None => gadget_identity(&mut rng),
            },
            Suite::Legalize => legalize(&mut rng)?,
            Suite::Duality => duality(config.guard)?,
            Suite::Padding => padding(&mut rng, config.guard)?,
            Suite::Blocks => blocks(),
        };
        reports.push(SuiteReport {
            suite,
            passed: checks.iter().all(|c| c.passed),
            checks,
        });
    }
    Ok(VerifyReport {
        seed: config.seed,
        guard: config.guard,
        passed: reports.iter().all(|r| r.passed),
        suites: reports,
    })
}

fn switch_algebra(rng: &mut ChaCha8Rng) -> Vec<CheckOutcome> {
    let mut involution = Check::new("switch(switch(G,A),A) = G");
    let mut complement_set = Check::new("switch(G,A) = switch(G,V\\A)");
    let mut composition = Check::new("switch(switch(G,A),B) = switch(G,A xor B)");
    let mut cut_sum = Check::new("e_G(A) + e_co-G(A) = |A|(n-|A|)");
    for _ in 0..1000 {
        let n = rng.random_range(0..=16);
        let g = families::random_graph(rng, n, 0.5);
        let a = random_set(rng, n);
        let b = random_set(rng, n);
        let ga = g.switch(&a).unwrap();
        involution.record(ga.switch(&a).unwrap() == g, || show(&g, &[&a]));
        complement_set.record(g.switch(&a.complement()).unwrap() == ga, || show(&g, &[&a]));
        composition.record(
            ga.switch(&b).unwrap() == g.switch(&a.symmetric_difference(&b)).unwrap(),
            || show(&g, &[&a, &b]),
        );
        let k = a.len();
        cut_sum.record(
            g.cutset_size(&a).unwrap() + g.complement().cutset_size(&a).unwrap() == k * (n - k),
            || show(&g, &[&a]),
        );
    }
    vec![involution.finish(), complement_set.finish(), composition.finish(), cut_sum.finish()]
}

fn kozerenko(rng: &mut ChaCha8Rng, guard: usize) -> Result<Vec<CheckOutcome>> {
    let mut agree = Check::new("Kozerenko criterion agrees with min_switch_edges");
    let mut witness = Check::new("reducing witness strictly lowers the edge count");
    let mut folklore = Check::new("minimal graphs have max degree <= floor((n-1)/2)");
    let mut sufficient = Check::new("max degree <= n/4 implies minimal");
    let mut judge = |g: &Graph| -> Result<()> {
        let v = kozerenko_reducible(g, guard)?;
        let best = oracles::min_switch_edges(g, guard)?.optimum;
        agree.record(v.minimal == (best == g.edge_count()), || show(g, &[]));
        if let Some(w) = &v.witness {
            witness.record(g.switch(w).unwrap().edge_count() < g.edge_count(), || show(g, &[w]));
        } else {
            folklore.record(g.max_degree() <= g.n().saturating_sub(1) / 2, || show(g, &[]));
        }
        Ok(())
    };
    for n in 0..=5 {
        for g in families::all_graphs(n) {
            judge(&g)?;
        }
    }
    for _ in 0..2000 {
        let n = rng.random_range(1..=10);
        let p = rng.random_range(0.1..0.9);
        judge(&families::random_graph(rng, n, p))?;
    }
    for _ in 0..100 {
        let n = rng.random_range(4..=12);
        let g = families::random_graph_max_degree(rng, n, n / 4);
        let declared = maxdeg_sufficient(&g).is_some();
        let best = oracles::min_switch_edges(&g, guard)?.optimum;
        sufficient.record(declared && best == g.edge_count(), || show(&g, &[]));
    }
    Ok(vec![agree.finish(), witness.finish(), folklore.finish(), sufficient.finish()])
}

fn gadget_identity(rng: &mut ChaCha8Rng) -> Vec<CheckOutcome> {
    let mut count = Check::new("|E(G')| = 16m + 8(binom(n,2) - m)");
    let mut identity = Check::new("|E(S(G',V1'))| = |E(G')| - 16 e(V1) for every cut");
    for _ in 0..100 {
        let n = rng.random_range(1..=5);
        let g = families::random_graph(rng, n, 0.5);
        let inst = GadgetInstance::build(&g);
        gadget_checks(inst.gadget(), &g, &mut count, &mut identity);
    }
    vec![count.finish(), identity.finish()]
}

fn gadget_checks(gadget: &Graph, base: &Graph, count: &mut Check, identity: &mut Check) {
    let m = base.edge_count();
    let expected = 16 * m + 8 * (base.pair_count() - m);
    count.record(gadget.edge_count() == expected, || show(gadget, &[]));
    let inst = GadgetInstance::build(base);
    let n = base.n();
    for mask in 0u64..1 << n {
        let v1 = VertexSet::from_mask(n, mask);
        let a = inst.cut_to_switchset(&v1).unwrap();
        let lhs = gadget.switch(&a).unwrap().edge_count() as i64;
        let rhs = gadget.edge_count() as i64 - 16 * base.cutset_size(&v1).unwrap() as i64;
        identity.record(lhs == rhs, || show(gadget, &[&a]));
    }
}

/// Checks a gadget graph read from outside. The base is read off the block
/// sizes: more than 8 edges between two tuples is taken as a base edge.
fn inspect_gadget(gadget: &Graph, guard: usize) -> Result<Vec<CheckOutcome>> {
    let mut shape = Check::new("graph is the four-tuple blow-up of its inferred base");
    if !gadget.n().is_multiple_of(4) {
        shape.record(false, || format!("{} vertices is not a multiple of 4", gadget.n()));
        return Ok(vec![shape.finish()]);
    }
    let n = gadget.n() / 4;
    oracles::check_guard(n, guard)?;
    let mut base = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let block = (0..4)
                .flat_map(|i| (0..4).map(move |j| (4 * u + i, 4 * v + j)))
                .filter(|&(x, y)| gadget.has_edge(x, y))
                .count();
            if block > 8 {
                base.add_edge(u, v);
            }
        }
    }
    shape.record(GadgetInstance::build(&base).gadget() == gadget, || {
        format!("inferred base graph6={}", write_graph6(&base))
    });
    let mut count = Check::new("|E(G')| = 16m + 8(binom(n,2) - m)");
    let mut identity = Check::new("|E(S(G',V1'))| = |E(G')| - 16 e(V1) for every cut");
    gadget_checks(gadget, &base, &mut count, &mut identity);
    Ok(vec![shape.finish(), count.finish(), identity.finish()])
}

fn legalize(rng: &mut ChaCha8Rng) -> Result<Vec<CheckOutcome>> {
    let inst = GadgetInstance::build(&families::two_triangles());
    let mut legal = Check::new("output is legal");
    let mut untouched = Check::new("output differs from input only on broken o-vertices");
    let mut bound = Check::new("final_edges <= initial_edges + 7");
    let mut claim1 = Check::new("final_charge >= final_edges");
    let mut claim2 = Check::new("non-final steps lower the charge by at least 0.5, final step raises it by at most 7");
    for _ in 0..1000 {
        let a = random_set(rng, 24);
        let r = inst.legalize(&a)?;
        legal.record(inst.is_legal(&r.output_set)?, || show(inst.gadget(), &[&a]));
        let before = inst.inside_counts(&a)?;
        let diff = a.symmetric_difference(&r.output_set);
        untouched.record(
            diff.iter().all(|x| (1..=3).contains(&before[inst.owner(x)])),
            || show(inst.gadget(), &[&a]),
        );
        bound.record(r.final_edges <= r.initial_edges + 7, || show(inst.gadget(), &[&a]));
        claim1.record(
            r.final_charge >= HalfUnits::from_integer(r.final_edges as i64),
            || show(inst.gadget(), &[&a]),
        );
        let (last, body) = r.steps.split_last().expect("final step always recorded");
        let ok = body.iter().all(|s| s.charge_delta <= HalfUnits(-1)) && last.charge_delta <= HalfUnits(14);
        claim2.record(ok, || show(inst.gadget(), &[&a]));
    }
    Ok(vec![legal.finish(), untouched.finish(), bound.finish(), claim1.finish(), claim2.finish()])
}

fn duality(guard: usize) -> Result<Vec<CheckOutcome>> {
    let mut named = Check::new("b = n^2 - c on K4, K3,3, Q3, Petersen");
    for h in [families::complete(4), families::complete_bipartite(3, 3), families::cube(), families::petersen()] {
        let d = bisection_duality_check(&h, guard)?;
        named.record(d.holds, || show(&h, &[]));
    }
    let mut cubic = Check::new("b = n^2 - c on every connected labelled cubic graph with at most 8 vertices");
    for n in [4, 6, 8] {
        for h in families::cubic_graphs(n).into_iter().filter(|h| h.is_connected()) {
            let d = bisection_duality_check(&h, guard)?;
            cubic.record(d.holds, || show(&h, &[]));
        }
    }
    Ok(vec![named.finish(), cubic.finish()])
}

fn padding(rng: &mut ChaCha8Rng, guard: usize) -> Result<Vec<CheckOutcome>> {
    let mut density = Check::new("density(padded) <= c");
    let mut optimum = Check::new("min_switch_edges(padded) = min_switch_edges(base) + nN");
    let mut restrict = Check::new("restrict_switchset never increases edges");
    for c in [Ratio::new(1, 10), Ratio::new(1, 4), Ratio::new(1, 2)] {
        for n in 1..=4 {
            for g in families::all_graphs(n) {
                let (p, _) = density_pad(&g, 0, c)?;
                density.record(p.padded.density()? <= c, || show(&g, &[]));
                let base = oracles::min_switch_edges(&g, guard)?.optimum;
                let padded = oracles::min_switch_edges_by_twins(&p.padded, guard)?.optimum;
                optimum.record(padded == base + p.k_shift, || show(&g, &[]));
            }
        }
    }
    let (p, _) = density_pad(&families::complete(3), 0, Ratio::new(1, 2))?;
    for _ in 0..1000 {
        let a = random_set(rng, p.padded.n());
        let r = p.restrict_switchset(&a)?;
        restrict.record(
            p.padded.switched_edge_count(&r)? <= p.padded.switched_edge_count(&a)?,
            || show(&p.padded, &[&a]),
        );
    }
    Ok(vec![density.finish(), optimum.finish(), restrict.finish()])
}

fn blocks() -> Vec<CheckOutcome> {
    let inv = block_pattern_table().inventory();
    let mut out = Vec::new();
    let mut push = |invariant: &'static str, ok: bool, detail: String| {
        let mut c = Check::new(invariant);
        c.record(ok, || detail);
        out.push(c.finish());
    };
    push(
        "legal edge-block counts are {0, 16}",
        inv.legal_edge_counts.iter().copied().eq([0, 16]),
        format!("{:?}", inv.legal_edge_counts),
    );
    push(
        "legal non-edge-block count is 8",
        inv.legal_non_edge_counts.iter().copied().eq([8]),
        format!("{:?}", inv.legal_non_edge_counts),
    );
    push(
        "broken non-edge blocks below 8 carry 4 or 6 edges",
        inv.illegal_deficit_counts.iter().copied().eq([4, 6]),
        format!("{:?}", inv.illegal_deficit_counts),
    );
    push(
        "fewer than 8 only when both ends are broken",
        inv.deficit_needs_both_broken,
        String::new(),
    );
    push("exactly 4 only with a symmetric end", inv.four_needs_symmetric_end, String::new());
    push(
        "legalising one end restores 8 edges",
        inv.one_legal_end_gives_eight,
        String::new(),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(suites: Vec<Suite>) -> VerifyConfig {
        VerifyConfig {
            seed: 1,
            guard: oracles::DEFAULT_GUARD,
            suites,
            gadget_input: None,
        }
    }

    #[test]
    fn quick_suites_pass() {
        let r = run(&config(vec![Suite::SwitchAlgebra, Suite::Blocks, Suite::Gadget])).unwrap();
        assert!(r.passed, "{r:#?}");
        assert_eq!(r.suites.len(), 3);
    }

    #[test]
    fn corrupted_gadget_is_caught() {
        let inst = GadgetInstance::build(&families::two_triangles());
        let mut g = inst.gadget().clone();
        g.remove_edge(0, 4);
        let mut cfg = config(vec![Suite::Gadget]);
        cfg.gadget_input = Some(g);
        let r = run(&cfg).unwrap();
        assert!(!r.passed);
        cfg.gadget_input = Some(inst.gadget().clone());
        assert!(run(&cfg).unwrap().passed);
    }

    #[test]
    fn reports_are_deterministic() {
        let a = serde_json::to_string(&run(&config(vec![Suite::SwitchAlgebra])).unwrap()).unwrap();
        let b = serde_json::to_string(&run(&config(vec![Suite::SwitchAlgebra])).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}
