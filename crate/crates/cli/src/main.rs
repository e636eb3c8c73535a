//! Command-line front end: generate topologies, run the connectivity
//! engine, run claim verifiers, and emit machine-readable documents.
//!
//! Exit codes: 0 verified/definitive, 1 refuted, 2 usage error, 3 I/O
//! error, 4 budget-bounded outcome.

mod output;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hlnet_core::{
    exact_extra_connectivity, f_monotonicity_check, f_sum_inequality_check, f_value,
    generating_set, hl_decompose, is_rg_cutset, min_star_neighborhood, neighborhood_bound_check,
    upper_bound_by_small_side, verify_big_component, verify_component_lemma, verify_counterexample,
    verify_hyper_kappa, verify_small_g_witness, verify_star_lemma, verify_unique_common_neighbor,
    verify_vq_delta_iso, verify_vq_upper_bound, BoundOutcome, CertificateKind, CompactGraph,
    CutsetCertificate, Error, ExactOutcome, SearchBudget, TopologySpec, VerificationReport,
    VerifyStatus, VertexSet,
};

const EXIT_OK: i32 = 0;
const EXIT_REFUTED: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_IO: i32 = 3;
const EXIT_BOUNDED: i32 = 4;

const G84_SPEC: &str = "compose(hypercube:n=2,hypercube:n=2,explicit=0-1-3-2)";

const VERIFY_HELP: &str = "\
Claim identifiers and their parameters (defaults in parentheses):
  f-monotone               --n (10)
  f-sum-inequality         --nmax (12)
  lemma-star               --n (4) --gmax (4) [--probe admits n=3, reported only]
  hyper-kappa              --spec ... (both 8-vertex members plus five seeded
                           16-vertex instances)
  unique-common-neighbor   --k (1) --l (0)
  component-lemma          --k (2) --l (0) --gmax (2)
  big-component            --n (5) --g (2) --trials (1000) --seed (12345)
  iso-vq-delta             --nmax (10) --nmax-rule (12)
  vq-upper-bound           --n (9) --gmax (6)
  small-g-witness          --g (required: 2 or 3) --spec ...
  thm-cor                  --k (5)
  neighborhood-bound       --spec (hypercube:n=4) --gmax (2) --cap (3)
                           --samples (1000) --seed (12345)
  hl-decompose             --k (1) --l (0)";

#[derive(Parser)]
#[command(
    name = "hlnet",
    version,
    about = "Hypercube-like topologies, Cayley families, and exact g-extra connectivity certification"
)]
struct Cli {
    /// Worker threads for parallel searches (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Zero elapsed-time fields so reruns produce byte-identical output.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a topology and write it out.
    Gen {
        /// Topology spec, e.g. hypercube:n=3, gamma:k=1,l=0, vq:n=4,
        /// random-hl:n=6,seed=42, compose(a,b,identity|seeded=S|explicit=i-j-..).
        #[arg(long)]
        topology: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        format: GraphFormat,
        /// Output file (stdout when omitted; relative paths resolve under
        /// HLNET_OUT_DIR when that variable is set).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Evaluate the benchmark function f_n(g).
    F {
        n: usize,
        /// Extra parameter; required unless --table is given.
        g: Option<usize>,
        /// Print the whole row f_n(0..=n) as tab-separated lines.
        #[arg(long)]
        table: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compute or bound the g-extra connectivity of an instance.
    Kappa {
        /// Topology spec to build (alternative to --input).
        #[arg(long)]
        topology: Option<String>,
        /// Graph JSON document to load (alternative to --topology).
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        g: usize,
        #[arg(long, value_enum)]
        mode: KappaMode,
        /// Largest cutset cardinality the exact search may enumerate.
        #[arg(long)]
        max_cardinality: Option<usize>,
        /// Largest small-side size the witness search may enumerate.
        #[arg(long)]
        size_cap: Option<usize>,
        /// Allow exact search on graphs over 64 vertices.
        #[arg(long)]
        force: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run one claim verifier and emit its report.
    #[command(after_help = VERIFY_HELP)]
    Verify {
        claim: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        gmax: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        g: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        nmax_rule: Option<usize>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long)]
        samples: Option<u64>,
        /// Topology specs for instance-quantified claims (repeatable).
        #[arg(long = "spec")]
        specs: Vec<String>,
        /// Admit parameters outside the stated range, reported but not
        /// asserted (lemma-star at n=3).
        #[arg(long)]
        probe: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Verify the matched-composition structure of a Cayley family member.
    Decompose {
        k: usize,
        l: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Json,
    Dot,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum KappaMode {
    /// Exhaustive subset enumeration; definitive minimum.
    Exact,
    /// Minimum neighborhood over connected small sides.
    Upper,
    /// Exhaustive sweep of star witnesses around the identity of a Cayley
    /// instance (gamma/delta topologies only).
    StarUpper,
}

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        // Ignore the error if a pool already exists; tests install one.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Gen {
            topology,
            format,
            output,
        } => cmd_gen(&topology, format, output.as_deref()),
        Command::F {
            n,
            g,
            table,
            output,
        } => cmd_f(n, g, table, output.as_deref()),
        Command::Kappa {
            topology,
            input,
            g,
            mode,
            max_cardinality,
            size_cap,
            force,
            output,
        } => cmd_kappa(
            topology.as_deref(),
            input.as_deref(),
            g,
            mode,
            max_cardinality,
            size_cap,
            force,
            cli.no_timing,
            output.as_deref(),
        ),
        Command::Verify {
            claim,
            n,
            gmax,
            k,
            l,
            g,
            nmax,
            nmax_rule,
            trials,
            seed,
            cap,
            samples,
            specs,
            probe,
            output,
        } => {
            let params = VerifyParams {
                n,
                gmax,
                k,
                l,
                g,
                nmax,
                nmax_rule,
                trials,
                seed,
                cap,
                samples,
                specs,
                probe,
            };
            cmd_verify(&claim, params, cli.no_timing, output.as_deref())
        }
        Command::Decompose { k, l, output } => {
            let report = match hl_decompose(k, l) {
                Ok(report) => report,
                Err(err) => return usage(&err),
            };
            emit_report(report, cli.no_timing, output.as_deref())
        }
    }
}

fn usage(err: &dyn std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    EXIT_USAGE
}

fn emit_or_io(content: &str, output: Option<&std::path::Path>) -> i32 {
    match output::emit(content, output) {
        Ok(()) => EXIT_OK,
        Err(err) => {
            eprintln!("error: {err}");
            EXIT_IO
        }
    }
}

fn cmd_gen(topology: &str, format: GraphFormat, output: Option<&std::path::Path>) -> i32 {
    let spec = match TopologySpec::parse(topology) {
        Ok(spec) => spec,
        Err(err) => return usage(&err),
    };
    let graph = match spec.build() {
        Ok(graph) => graph,
        Err(err) => return usage(&err),
    };
    let doc = output::GraphDoc::from_graph(&spec.canonical(), &graph);
    let content = match format {
        GraphFormat::Json => output::render_json(&doc),
        GraphFormat::Dot => output::render_dot(&doc),
        GraphFormat::Edgelist => output::render_edgelist(&doc),
    };
    emit_or_io(&content, output)
}

fn cmd_f(n: usize, g: Option<usize>, table: bool, output: Option<&std::path::Path>) -> i32 {
    if n == 0 {
        return usage(&"n must be at least 1");
    }
    let content = if table {
        let mut rows = String::new();
        for g in 0..=n {
            rows.push_str(&format!("{g}\t{}\n", f_value(n, g)));
        }
        rows
    } else {
        match g {
            Some(g) => format!("{}\n", f_value(n, g)),
            None => return usage(&"pass g, or --table for the whole row"),
        }
    };
    emit_or_io(&content, output)
}

/// Serialized result of a kappa run.
#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct KappaDoc {
    spec: String,
    g: usize,
    mode: KappaMode,
    outcome: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    lower_bound: Option<CutsetCertificate>,
    elapsed_millis: u64,
}

#[allow(clippy::too_many_arguments)]
fn cmd_kappa(
    topology: Option<&str>,
    input: Option<&std::path::Path>,
    g: usize,
    mode: KappaMode,
    max_cardinality: Option<usize>,
    size_cap: Option<usize>,
    force: bool,
    no_timing: bool,
    output: Option<&std::path::Path>,
) -> i32 {
    let (spec_string, parsed_spec, graph) = match (topology, input) {
        (Some(text), None) => {
            let spec = match TopologySpec::parse(text) {
                Ok(spec) => spec,
                Err(err) => return usage(&err),
            };
            let graph = match spec.build() {
                Ok(graph) => graph,
                Err(err) => return usage(&err),
            };
            (spec.canonical(), Some(spec), graph)
        }
        (None, Some(path)) => {
            let text = match std::fs::read_to_string(output::resolve_path(path)) {
                Ok(text) => text,
                Err(err) => {
                    eprintln!("error: {err}");
                    return EXIT_IO;
                }
            };
            let doc: output::GraphDoc = match serde_json::from_str(&text) {
                Ok(doc) => doc,
                Err(err) => return usage(&err),
            };
            let spec = doc.spec.clone();
            match doc.into_graph() {
                Ok(graph) => (spec, None, graph),
                Err(err) => return usage(&err),
            }
        }
        _ => return usage(&"pass exactly one of --topology or --input"),
    };

    let started = Instant::now();
    let (outcome, lower_bound, exit) = match mode {
        KappaMode::Exact => match exact_extra_connectivity(&graph, g, max_cardinality, force) {
            Ok(ExactOutcome::Found(cert)) => (
                serde_json::to_value(&cert).expect("serializable"),
                None,
                EXIT_OK,
            ),
            Ok(ExactOutcome::Exhausted {
                searched_max_cardinality,
                definitive,
            }) => (
                serde_json::json!({
                    "kind": "none-found",
                    "searchedMaxCardinality": searched_max_cardinality,
                    "definitive": definitive,
                }),
                None,
                if definitive { EXIT_OK } else { EXIT_BOUNDED },
            ),
            Err(err) => return usage(&err),
        },
        KappaMode::Upper => {
            let cap = size_cap.unwrap_or(g + 1);
            match upper_bound_by_small_side(&graph, g, cap) {
                Ok(BoundOutcome::Found(cert)) => (
                    serde_json::to_value(&cert).expect("serializable"),
                    None,
                    EXIT_OK,
                ),
                Ok(BoundOutcome::NoneFound { size_cap }) => (
                    serde_json::json!({ "kind": "none-found", "sizeCap": size_cap }),
                    None,
                    EXIT_BOUNDED,
                ),
                Err(err) => return usage(&err),
            }
        }
        KappaMode::StarUpper => match star_upper(&parsed_spec, &graph, g) {
            Ok((outcome, lower, exit)) => (outcome, lower, exit),
            Err(err) => return usage(&err),
        },
    };
    let doc = KappaDoc {
        spec: spec_string,
        g,
        mode,
        outcome,
        lower_bound,
        elapsed_millis: if no_timing {
            0
        } else {
            started.elapsed().as_millis() as u64
        },
    };
    let code = emit_or_io(&output::render_json(&doc), output);
    if code != EXIT_OK {
        code
    } else {
        exit
    }
}

/// Star witness sweep around the identity of a Cayley instance. Valid only
/// for gamma/delta topologies, where the generator vertices are known.
fn star_upper(
    spec: &Option<TopologySpec>,
    graph: &CompactGraph,
    g: usize,
) -> hlnet_core::Result<(serde_json::Value, Option<CutsetCertificate>, i32)> {
    let (k, l) = match spec {
        Some(TopologySpec::Gamma { k, l }) => (*k, *l),
        Some(TopologySpec::Delta { n }) => (n / 3, n % 3),
        _ => {
            return Err(Error::InvalidArgument(
                "star-upper mode needs a gamma:k=..,l=.. or delta:n=.. topology".into(),
            ))
        }
    };
    let n = 3 * k + l;
    let gens = generating_set(k, l)?;
    let pool: Vec<usize> = gens.elements().iter().map(|e| e.index()).collect();
    let scan = min_star_neighborhood(graph, 0, &pool, g)?
        .ok_or_else(|| Error::InvalidArgument("no leaf subset induces a star".into()))?;

    let mut side = VertexSet::new(graph.order());
    side.insert(0);
    for &leaf in &scan.leaf_set {
        side.insert(leaf);
    }
    let cutset = graph.neighborhood(&side)?;
    let lower = CutsetCertificate {
        kind: CertificateKind::LowerBoundCited,
        value: f_value(n, g).max(0) as usize,
        witness_set: Vec::new(),
        component_sizes: Vec::new(),
        search_budget: SearchBudget::default(),
    };
    if is_rg_cutset(graph, &cutset, g)? {
        let mut sizes: Vec<usize> = graph
            .components(&cutset)?
            .iter()
            .map(VertexSet::len)
            .collect();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        let cert = CutsetCertificate {
            kind: CertificateKind::UpperBound,
            value: scan.min_neighborhood,
            witness_set: side.to_vec(),
            component_sizes: sizes,
            search_budget: SearchBudget {
                leaf_subsets: Some(scan.leaf_subsets_scanned),
                ..SearchBudget::default()
            },
        };
        Ok((
            serde_json::to_value(&cert).expect("serializable"),
            Some(lower),
            EXIT_OK,
        ))
    } else {
        Ok((
            serde_json::json!({
                "kind": "witness-not-a-cutset",
                "minNeighborhood": scan.min_neighborhood,
                "leafSubsets": scan.leaf_subsets_scanned,
            }),
            Some(lower),
            EXIT_BOUNDED,
        ))
    }
}

struct VerifyParams {
    n: Option<usize>,
    gmax: Option<usize>,
    k: Option<usize>,
    l: Option<usize>,
    g: Option<usize>,
    nmax: Option<usize>,
    nmax_rule: Option<usize>,
    trials: Option<u64>,
    seed: Option<u64>,
    cap: Option<usize>,
    samples: Option<u64>,
    specs: Vec<String>,
    probe: bool,
}

fn parse_specs(texts: &[String]) -> hlnet_core::Result<Vec<TopologySpec>> {
    texts.iter().map(|t| TopologySpec::parse(t)).collect()
}

fn default_hyper_kappa_specs() -> Vec<String> {
    let mut specs = vec!["hypercube:n=3".to_string(), G84_SPEC.to_string()];
    for seed in 1..=5 {
        specs.push(format!("random-hl:n=4,seed={seed}"));
    }
    specs
}

fn cmd_verify(
    claim: &str,
    params: VerifyParams,
    no_timing: bool,
    output: Option<&std::path::Path>,
) -> i32 {
    let report = match run_claim(claim, &params) {
        Ok(report) => report,
        Err(err) => return usage(&err),
    };
    emit_report(report, no_timing, output)
}

fn run_claim(claim: &str, p: &VerifyParams) -> hlnet_core::Result<VerificationReport> {
    match claim {
        "f-monotone" => f_monotonicity_check(p.n.unwrap_or(10)),
        "f-sum-inequality" => f_sum_inequality_check(p.nmax.unwrap_or(12)),
        "lemma-star" => verify_star_lemma(p.n.unwrap_or(4), p.gmax.unwrap_or(4), p.probe),
        "hyper-kappa" => {
            let texts = if p.specs.is_empty() {
                default_hyper_kappa_specs()
            } else {
                p.specs.clone()
            };
            verify_hyper_kappa(&parse_specs(&texts)?)
        }
        "unique-common-neighbor" => {
            verify_unique_common_neighbor(p.k.unwrap_or(1), p.l.unwrap_or(0))
        }
        "component-lemma" => {
            verify_component_lemma(p.k.unwrap_or(2), p.l.unwrap_or(0), p.gmax.unwrap_or(2))
        }
        "big-component" => verify_big_component(
            p.n.unwrap_or(5),
            p.g.unwrap_or(2),
            p.trials.unwrap_or(1000),
            p.seed.unwrap_or(12345),
        ),
        "iso-vq-delta" => verify_vq_delta_iso(p.nmax.unwrap_or(10), p.nmax_rule.unwrap_or(12)),
        "vq-upper-bound" => verify_vq_upper_bound(p.n.unwrap_or(9), p.gmax.unwrap_or(6)),
        "small-g-witness" => {
            let g = p
                .g
                .ok_or_else(|| Error::InvalidArgument("small-g-witness needs --g 2 or 3".into()))?;
            let texts = if p.specs.is_empty() {
                let n = if g == 2 { 5 } else { 6 };
                vec![
                    format!("hypercube:n={n}"),
                    format!("random-hl:n={n},seed=1"),
                ]
            } else {
                p.specs.clone()
            };
            verify_small_g_witness(&parse_specs(&texts)?, g)
        }
        "thm-cor" => verify_counterexample(p.k.unwrap_or(5)),
        "neighborhood-bound" => {
            let text = p
                .specs
                .first()
                .cloned()
                .unwrap_or_else(|| "hypercube:n=4".to_string());
            let graph = TopologySpec::parse(&text)?.build()?;
            neighborhood_bound_check(
                &graph,
                p.gmax.unwrap_or(2),
                p.cap.unwrap_or(3),
                p.samples.unwrap_or(1000),
                p.seed.unwrap_or(12345),
            )
        }
        "hl-decompose" => hl_decompose(p.k.unwrap_or(1), p.l.unwrap_or(0)),
        other => Err(Error::InvalidArgument(format!(
            "unknown claim `{other}`; documented claims:\n{VERIFY_HELP}"
        ))),
    }
}

fn emit_report(
    mut report: VerificationReport,
    no_timing: bool,
    output: Option<&std::path::Path>,
) -> i32 {
    if no_timing {
        report.elapsed_millis = 0;
    }
    let code = emit_or_io(&output::render_json(&report), output);
    if code != EXIT_OK {
        return code;
    }
    match report.status {
        VerifyStatus::Verified => EXIT_OK,
        VerifyStatus::Refuted => EXIT_REFUTED,
        VerifyStatus::Bounded => EXIT_BOUNDED,
    }
}
