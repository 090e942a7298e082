use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use log::info;
use num_rational::Ratio;
use serde::Serialize;

use switchkit::certificate::{to_json, GadgetCertificate, PaddingCertificate, SolvedTarget};
use switchkit::io::{parse_graph, parse_set, write_edge_list, write_graph6, ParsedGraph};
use switchkit::minimality::{decide_minimal, few_edges};
use switchkit::oracles::{self, DEFAULT_GUARD, MAX_GUARD};
use switchkit::reductions::{bisection_duality_check, density_pad, full_pipeline, GadgetInstance};
use switchkit::verify::{self, Suite, VerifyConfig};
use switchkit::{Error, Graph, VertexSet};

const EXIT_NEGATIVE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_SIZE: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "switchkit", version, about = "Seidel switching toolkit")]
struct RunConfig {
    /// Largest vertex count handed to exhaustive enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD as u64,
          value_parser = clap::value_parser!(u64).range(1..=MAX_GUARD as u64))]
    guard: u64,

    /// Seed for randomised verification trials.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Graph output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Edgelist)]
    format: Format,

    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Run legalisation even when the base is not a valid large-degree instance.
    #[arg(long, global = true)]
    permissive: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args, Debug)]
struct SetArgs {
    /// Vertex set given inline, e.g. "0,2,5".
    #[arg(long, conflicts_with = "set_file")]
    set: Option<String>,

    /// File holding the vertex set.
    #[arg(long)]
    set_file: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ReduceArgs {
    /// Also write the certificate JSON to this path (it always goes to stdout
    /// when --out receives the instance).
    #[arg(long)]
    certificate: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Apply a Seidel switch and write the resulting graph.
    Switch {
        graph: PathBuf,
        #[command(flatten)]
        set: SetArgs,
    },
    /// Write the complement graph.
    Complement { graph: PathBuf },
    /// Decide switching-minimality; exit 1 with a witness when reducible.
    Minimal { graph: PathBuf },
    /// Decide whether some switch has at most k edges.
    FewEdges {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Build the four-tuple gadget of a base graph.
    Gadget {
        graph: PathBuf,
        #[command(flatten)]
        reduce: ReduceArgs,
    },
    /// Legalise a switch set of the gadget built from a base graph.
    Legalize {
        /// The base graph; set indices refer to its gadget.
        graph: PathBuf,
        #[command(flatten)]
        set: SetArgs,
    },
    /// Pad a graph to density at most c.
    Pad {
        graph: PathBuf,
        #[arg(long)]
        density: Ratio<u64>,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[command(flatten)]
        reduce: ReduceArgs,
    },
    /// Exact maximum cut; with --j, exit 1 when no cut reaches j.
    Maxcut {
        graph: PathBuf,
        #[arg(long)]
        j: Option<usize>,
    },
    /// Exact minimum bisection; with --k, exit 1 when none is at most k.
    Bisection {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Check b = n^2 - c on a connected cubic graph.
    Duality { graph: PathBuf },
    /// Cubic graph and cut target j to a switching instance.
    Pipeline {
        graph: PathBuf,
        #[arg(long)]
        j: usize,
        #[arg(long)]
        density: Option<Ratio<u64>>,
        /// Solve the emitted instance exactly when within the guard.
        #[arg(long)]
        solve: bool,
        #[command(flatten)]
        reduce: ReduceArgs,
    },
    /// Run the seeded property suites.
    Verify {
        /// Suite to run; repeatable. Defaults to all.
        #[arg(long)]
        suite: Vec<Suite>,
        /// Gadget graph to inspect in the gadget suite.
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

/// A report body with the input's vertex labels attached, if it had any.
#[derive(Serialize)]
struct Labelled<T: Serialize> {
    #[serde(flatten)]
    body: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<Option<String>>>,
}

fn labelled<T: Serialize>(body: T, parsed: &ParsedGraph) -> Labelled<T> {
    Labelled {
        body,
        labels: parsed.labels.clone(),
    }
}

#[derive(Serialize)]
struct Threshold<T: Serialize> {
    #[serde(flatten)]
    result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    target: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    achievable: Option<bool>,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: String,
    exit_code: u8,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    reasons: &'a [switchkit::reductions::Reason],
}

enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type CmdResult = Result<u8, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_owned(), e))
}

fn read_graph(path: &Path) -> Result<ParsedGraph, Failure> {
    let parsed = parse_graph(&read(path)?)?;
    info!("read {} ({} vertices, {} edges)", path.display(), parsed.graph.n(), parsed.graph.edge_count());
    Ok(parsed)
}

fn read_set(args: &SetArgs, parsed: &ParsedGraph) -> Result<VertexSet, Failure> {
    let text = match (&args.set, &args.set_file) {
        (Some(s), _) => s.clone(),
        (None, Some(p)) => read(p)?,
        (None, None) => String::new(),
    };
    Ok(parse_set(&text, parsed)?)
}

fn write(path: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Io(p.clone(), e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Edgelist => write_edge_list(g),
        Format::Graph6 => format!("{}\n", write_graph6(g)),
    }
}

/// Instance to `--out` when given, certificate to stdout (and optionally a
/// file); without `--out` only the certificate is printed.
fn emit_reduction(cfg: &RunConfig, instance: &Graph, cert_json: &str, reduce: &ReduceArgs) -> Result<(), Failure> {
    if let Some(out) = &cfg.out {
        write(&Some(out.clone()), &render(instance, cfg.format))?;
    }
    if let Some(p) = &reduce.certificate {
        write(&Some(p.clone()), cert_json)?;
    }
    write(&None, cert_json)
}

fn run(cfg: &RunConfig) -> CmdResult {
    let guard = cfg.guard as usize;
    match &cfg.command {
        Command::Switch { graph, set } => {
            let parsed = read_graph(graph)?;
            let a = read_set(set, &parsed)?;
            write(&cfg.out, &render(&parsed.graph.switch(&a)?, cfg.format))?;
            Ok(0)
        }
        Command::Complement { graph } => {
            let parsed = read_graph(graph)?;
            write(&cfg.out, &render(&parsed.graph.complement(), cfg.format))?;
            Ok(0)
        }
        Command::Minimal { graph } => {
            let parsed = read_graph(graph)?;
            let verdict = decide_minimal(&parsed.graph, guard)?;
            let code = if verdict.minimal { 0 } else { EXIT_NEGATIVE };
            write(&cfg.out, &to_json(&labelled(verdict, &parsed)))?;
            Ok(code)
        }
        Command::FewEdges { graph, k } => {
            let parsed = read_graph(graph)?;
            let verdict = few_edges(&parsed.graph, *k, guard)?;
            let code = if verdict.achievable { 0 } else { EXIT_NEGATIVE };
            write(&cfg.out, &to_json(&labelled(verdict, &parsed)))?;
            Ok(code)
        }
        Command::Gadget { graph, reduce } => {
            let parsed = read_graph(graph)?;
            let inst = GadgetInstance::build(&parsed.graph);
            let cert = GadgetCertificate::new(&inst);
            cert.validate()?;
            emit_reduction(cfg, inst.gadget(), &to_json(&labelled(cert, &parsed)), reduce)?;
            Ok(0)
        }
        Command::Legalize { graph, set } => {
            let parsed = read_graph(graph)?;
            let inst = GadgetInstance::build(&parsed.graph);
            if !inst.guarantee_applies() && !cfg.permissive {
                return Err(Error::Precondition(inst.base_defects().to_vec()).into());
            }
            let gadget = ParsedGraph {
                graph: inst.gadget().clone(),
                labels: None,
            };
            let a = read_set(set, &gadget)?;
            let result = inst.legalize(&a)?;
            write(&cfg.out, &to_json(&result))?;
            Ok(0)
        }
        Command::Pad { graph, density, k, reduce } => {
            let parsed = read_graph(graph)?;
            let (inst, _) = density_pad(&parsed.graph, *k, *density)?;
            let cert = PaddingCertificate::new(&inst, *density, *k as i64)?;
            cert.validate()?;
            emit_reduction(cfg, &inst.padded, &to_json(&labelled(cert, &parsed)), reduce)?;
            Ok(0)
        }
        Command::Maxcut { graph, j } => {
            let parsed = read_graph(graph)?;
            let r = oracles::max_cut(&parsed.graph, guard)?;
            let achievable = j.map(|j| r.optimum >= j);
            let report = Threshold { result: r, target: *j, achievable };
            write(&cfg.out, &to_json(&labelled(report, &parsed)))?;
            Ok(if achievable == Some(false) { EXIT_NEGATIVE } else { 0 })
        }
        Command::Bisection { graph, k } => {
            let parsed = read_graph(graph)?;
            let r = oracles::min_bisection(&parsed.graph, guard)?;
            let achievable = k.map(|k| r.optimum <= k);
            let report = Threshold { result: r, target: *k, achievable };
            write(&cfg.out, &to_json(&labelled(report, &parsed)))?;
            Ok(if achievable == Some(false) { EXIT_NEGATIVE } else { 0 })
        }
        Command::Duality { graph } => {
            let parsed = read_graph(graph)?;
            let check = bisection_duality_check(&parsed.graph, guard)?;
            let code = if check.holds { 0 } else { EXIT_NEGATIVE };
            write(&cfg.out, &to_json(&labelled(check, &parsed)))?;
            Ok(code)
        }
        Command::Pipeline { graph, j, density, solve, reduce } => {
            let parsed = read_graph(graph)?;
            let mut out = full_pipeline(&parsed.graph, *j, *density)?;
            out.certificate.labels = parsed.labels.clone();
            let mut code = 0;
            if *solve {
                let best = oracles::min_switch_edges(&out.instance, guard)?;
                let achievable = best.optimum as i64 <= out.k;
                if !achievable {
                    code = EXIT_NEGATIVE;
                }
                out.certificate.solved = Some(SolvedTarget {
                    min_edges: best.optimum,
                    achievable,
                    witness: best.witness,
                });
            }
            out.certificate.validate()?;
            emit_reduction(cfg, &out.instance, &to_json(&out.certificate), reduce)?;
            Ok(code)
        }
        Command::Verify { suite, input } => {
            let gadget_input = match input {
                Some(p) => Some(read_graph(p)?.graph),
                None => None,
            };
            let report = verify::run(&VerifyConfig {
                seed: cfg.seed,
                guard,
                suites: suite.clone(),
                gadget_input,
            })?;
            write(&cfg.out, &to_json(&report))?;
            Ok(if report.passed { 0 } else { EXIT_NEGATIVE })
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } | Error::Graph6(_) | Error::SelfLoop(_) => EXIT_PARSE,
        Error::SizeLimit { .. } => EXIT_SIZE,
        Error::Internal(_) => EXIT_NEGATIVE,
        Error::Io(_) => EXIT_PARSE,
        _ => EXIT_PRECONDITION,
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Io(path, e)) => {
            eprintln!("error: {}: {e}", path.display());
            ExitCode::from(EXIT_PARSE)
        }
        Err(Failure::Lib(e)) => {
            let code = exit_code(&e);
            eprintln!("error: {e}");
            let reasons = match &e {
                Error::Precondition(r) => r.as_slice(),
                _ => &[],
            };
            print!(
                "{}",
                to_json(&ErrorReport {
                    error: e.to_string(),
                    exit_code: code,
                    reasons,
                })
            );
            ExitCode::from(code)
        }
    }
}
