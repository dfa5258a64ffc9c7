//! Command-line front end for the abmod library.
//!
//! Exit codes: 0 on success, 1 when a decision command answers no, 2 on bad
//! input or usage.

use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use abmod::bipartite::{maximal_one_sided_modules, BipartiteGraph};
use abmod::decomposition::{decomposition_tree, is_ab_cograph, matching_cut, Strategy};
use abmod::enumeration::{
    all_modules_oracle, covering_from, is_brittle_exact, is_brittle_fast, is_prime_with, minimal_nontrivial_modules_with,
    EnumOptions, PrimeStatus, ENUMERATION_WARN_SUM,
};
use abmod::io::output::{family_json, set_json, tree_dot, tree_json, tree_text, Meta, ResultDocument};
use abmod::io::{generate, parse_graph, parse_side, write_graph, GraphDocument, Labels};
use abmod::ksplitter::k_splitter_report;
use abmod::{closure, is_ab_module, splitter_set, AbParams, ClosureAlgorithm, Graph, VertexSet};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "abmod", version, about = "(alpha, beta)-modules of graphs")]
struct Cli {
    /// Tolerated missing edges towards an α-neighbour.
    #[arg(long, global = true, default_value_t = 0)]
    alpha: usize,
    /// Tolerated edges towards a β-non-neighbour.
    #[arg(long, global = true, default_value_t = 0)]
    beta: usize,
    /// Seed for generators and sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print a JSON result document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for module enumeration.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Include wall time in JSON output.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// A `.g` file, or `-` for standard input.
    graph: PathBuf,
}

#[derive(Args)]
struct WithSet {
    /// Comma-separated vertex labels or ids.
    #[arg(long)]
    set: String,
    #[command(flatten)]
    input: Input,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exact,
    Grow,
}

#[derive(Subcommand)]
enum Command {
    /// Is the set an (α, β)-module?
    Check(WithSet),
    /// α-neighbours, β-non-neighbours and splitters of a set.
    Splitters(WithSet),
    /// The smallest module containing a set.
    Closure {
        #[command(flatten)]
        with: WithSet,
        /// Use the round-based algorithm instead of partition refinement.
        #[arg(long)]
        naive: bool,
    },
    /// Inclusion-minimal non-trivial modules.
    Minimal(Input),
    /// Minimal non-trivial modules plus singletons for uncovered vertices.
    Cover(Input),
    /// Does the graph have no non-trivial module?
    Prime(Input),
    /// Is every vertex subset an (α, β)-module?
    Brittle {
        #[command(flatten)]
        input: Input,
        /// Degree-based sufficient test only.
        #[arg(long)]
        fast: bool,
    },
    /// Decomposition tree.
    Tree {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "exact")]
        strategy: StrategyArg,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// Is the graph an (α, β)-cograph? Prints a cotree when it is.
    Cograph(Input),
    /// A bipartition whose crossing edges form a matching.
    MatchingCut(Input),
    /// Maximal modules inside the X side of a bipartite graph.
    BipartiteMax {
        #[command(flatten)]
        input: Input,
        /// File holding the X side as an id list or bitmask; defaults to the
        /// graph's `s` line, then to a two-colouring.
        #[arg(long)]
        side_file: Option<PathBuf>,
    },
    /// Classical splitters of a set against a budget of `k`.
    Ksplitter {
        #[command(flatten)]
        with: WithSet,
        #[arg(short, default_value_t = 0)]
        k: usize,
    },
    /// Write a graph in `.g` format.
    #[command(subcommand)]
    Gen(Gen),
    /// Exhaustive reference computations.
    #[command(subcommand)]
    Oracle(Oracle),
}

#[derive(Subcommand)]
enum Gen {
    /// Erdős–Rényi graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
    },
    /// Perfect-matching join of order-4 graphs, 4·2^depth vertices.
    Pmg4 {
        #[arg(long, default_value_t = 1)]
        depth: u32,
        /// `.g` files to use as seeds instead of the six order-4 graphs.
        #[arg(long, num_args = 1..)]
        seeds: Vec<PathBuf>,
    },
    /// A built-in labelled example: gallai8, near-module7, two-p4-join, c5, bull.
    Fixture { name: String },
}

#[derive(Subcommand)]
enum Oracle {
    /// Every (α, β)-module, by checking all subsets.
    AllModules {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        max_n: Option<usize>,
    },
}

/// A finished command: what to print and whether the answer was negative.
struct Outcome {
    text: String,
    json: Value,
    negative: bool,
    algorithm: Option<&'static str>,
    strategy: Option<&'static str>,
    seeded: bool,
}

impl Outcome {
    fn new(text: impl Into<String>, json: Value) -> Outcome {
        Outcome { text: text.into(), json, negative: false, algorithm: None, strategy: None, seeded: false }
    }

    fn negative_if(mut self, negative: bool) -> Outcome {
        self.negative = negative;
        self
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let mut meta = Meta::new(AbParams::new(cli.alpha, cli.beta));
                meta.algorithm = out.algorithm.map(str::to_owned);
                meta.strategy = out.strategy.map(str::to_owned);
                meta.seed = out.seeded.then_some(cli.seed);
                if cli.timing {
                    meta.wall_time_ms = Some(started.elapsed().as_secs_f64() * 1e3);
                }
                println!("{}", ResultDocument::new(command_name(&cli.command), meta, out.json).to_json());
            } else {
                print!("{}", out.text);
                if !out.text.is_empty() && !out.text.ends_with('\n') {
                    println!();
                }
            }
            if out.negative {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Check(_) => "check",
        Command::Splitters(_) => "splitters",
        Command::Closure { .. } => "closure",
        Command::Minimal(_) => "minimal",
        Command::Cover(_) => "cover",
        Command::Prime(_) => "prime",
        Command::Brittle { .. } => "brittle",
        Command::Tree { .. } => "tree",
        Command::Cograph(_) => "cograph",
        Command::MatchingCut(_) => "matching-cut",
        Command::BipartiteMax { .. } => "bipartite-max",
        Command::Ksplitter { .. } => "ksplitter",
        Command::Gen(_) => "gen",
        Command::Oracle(_) => "oracle",
    }
}

type Res<T> = std::result::Result<T, String>;

fn read_text(path: &Path) -> Res<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
    }
}

fn load(path: &Path) -> Res<GraphDocument> {
    let text = read_text(path)?;
    parse_graph(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn family_text(labels: &Labels, family: &[VertexSet]) -> String {
    abmod::io::output::sorted_family(family).iter().map(|s| format!("{{{}}}\n", labels.format_set(s))).collect()
}

fn run(cli: &Cli) -> Res<Outcome> {
    let p = AbParams::new(cli.alpha, cli.beta);
    let opts = EnumOptions { jobs: cli.jobs, ..EnumOptions::default() };
    let err = |e: abmod::Error| e.to_string();
    let open = |input: &Input| -> Res<GraphDocument> {
        let doc = load(&input.graph)?;
        p.check_for(doc.graph.n()).map_err(err)?;
        Ok(doc)
    };
    let warn = || {
        if p.alpha + p.beta > ENUMERATION_WARN_SUM {
            eprintln!(
                "warning: alpha+beta = {} enumerates n^{} tuples; this may be slow",
                p.alpha + p.beta,
                p.alpha + p.beta + 2
            );
        }
    };
    let with_set = |w: &WithSet| -> Res<(GraphDocument, VertexSet)> {
        let doc = open(&w.input)?;
        let set = doc.labels.parse_set(&doc.graph, &w.set).map_err(err)?;
        Ok((doc, set))
    };

    Ok(match &cli.command {
        Command::Check(w) => {
            let (doc, set) = with_set(w)?;
            let ok = is_ab_module(&doc.graph, &set, p).map_err(err)?;
            Outcome::new(ok.to_string(), json!(ok)).negative_if(!ok)
        }
        Command::Splitters(w) => {
            let (doc, set) = with_set(w)?;
            let r = splitter_set(&doc.graph, &set, p).map_err(err)?;
            let l = &doc.labels;
            let text = format!(
                "alpha_neighbours {{{}}}\nbeta_non_neighbours {{{}}}\nsplitters {{{}}}\n",
                l.format_set(&r.n_alpha),
                l.format_set(&r.n_bar_beta),
                l.format_set(&r.splitters)
            );
            let json = json!({
                "alpha_neighbours": set_json(l, &r.n_alpha),
                "beta_non_neighbours": set_json(l, &r.n_bar_beta),
                "splitters": set_json(l, &r.splitters),
            });
            Outcome::new(text, json)
        }
        Command::Closure { with, naive } => {
            let (doc, set) = with_set(with)?;
            let algorithm = if *naive { ClosureAlgorithm::Naive } else { ClosureAlgorithm::Refined };
            let trace = closure(&doc.graph, &set, p, algorithm).map_err(err)?;
            let mut out = Outcome::new(doc.labels.format_set(&trace.result), set_json(&doc.labels, &trace.result));
            out.algorithm = Some(if *naive { "naive" } else { "refined" });
            out
        }
        Command::Minimal(input) => {
            let doc = open(input)?;
            warn();
            let fam = minimal_nontrivial_modules_with(&doc.graph, p, opts).map_err(err)?;
            Outcome::new(family_text(&doc.labels, &fam.members), family_json(&doc.labels, &fam.members))
        }
        Command::Cover(input) => {
            let doc = open(input)?;
            warn();
            let fam = covering_from(&doc.graph, minimal_nontrivial_modules_with(&doc.graph, p, opts).map_err(err)?);
            Outcome::new(family_text(&doc.labels, &fam.members), family_json(&doc.labels, &fam.members))
        }
        Command::Prime(input) => {
            let doc = open(input)?;
            warn();
            match is_prime_with(&doc.graph, p, opts) {
                PrimeStatus::Prime => Outcome::new("prime", json!({"prime": true, "degenerate": false})),
                PrimeStatus::DegeneratePrime => {
                    Outcome::new("prime (degenerate)", json!({"prime": true, "degenerate": true}))
                }
                PrimeStatus::NotPrime { witness } => Outcome::new(
                    format!("not prime: {{{}}}", doc.labels.format_set(&witness)),
                    json!({"prime": false, "witness": set_json(&doc.labels, &witness)}),
                )
                .negative_if(true),
            }
        }
        Command::Brittle { input, fast } => {
            let doc = open(input)?;
            let answer = if *fast {
                is_brittle_fast(&doc.graph, p)
            } else {
                Some(is_brittle_exact(&doc.graph, p, None).map_err(err)?)
            };
            let mut out = match answer {
                Some(b) => Outcome::new(b.to_string(), json!(b)).negative_if(!b),
                None => Outcome::new("inconclusive", Value::Null),
            };
            out.algorithm = Some(if *fast { "degree" } else { "exhaustive" });
            out
        }
        Command::Tree { input, strategy, dot } => {
            let doc = open(input)?;
            warn();
            let (s, name) = match strategy {
                StrategyArg::Exact => (Strategy::Exact, "exact"),
                StrategyArg::Grow => (Strategy::Grow, "grow"),
            };
            let tree = decomposition_tree(&doc.graph, p, s).map_err(err)?;
            let text = if *dot { tree_dot(&doc.labels, &tree) } else { tree_text(&doc.labels, &tree) };
            let mut out = Outcome::new(text, tree_json(&doc.labels, &tree));
            out.strategy = Some(name);
            out
        }
        Command::Cograph(input) => {
            let doc = open(input)?;
            let r = is_ab_cograph(&doc.graph, p, None).map_err(err)?;
            match &r.cotree {
                Some(t) => Outcome::new(
                    format!("true\n{}", tree_text(&doc.labels, t)),
                    json!({"cograph": true, "cotree": tree_json(&doc.labels, t)}),
                ),
                None => Outcome::new("false", json!({"cograph": false})).negative_if(true),
            }
        }
        Command::MatchingCut(input) => {
            let doc = load(&input.graph)?;
            let l = &doc.labels;
            match matching_cut(&doc.graph).map_err(err)? {
                Some(cut) => {
                    let edges: Vec<_> = cut.cut_edges.iter().map(|&(u, v)| [l.name(u), l.name(v)]).collect();
                    let text = format!(
                        "{{{}}} | {{{}}}\n{}\n",
                        l.format_set(&cut.side_a),
                        l.format_set(&cut.side_b),
                        edges.iter().map(|[u, v]| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
                    );
                    let json = json!({
                        "side_a": set_json(l, &cut.side_a),
                        "side_b": set_json(l, &cut.side_b),
                        "cut_edges": edges,
                    });
                    Outcome::new(text, json)
                }
                None => Outcome::new("none", Value::Null).negative_if(true),
            }
        }
        Command::BipartiteMax { input, side_file } => {
            let doc = open(input)?;
            let n = doc.graph.n();
            let side = match side_file {
                Some(path) => {
                    let text = read_text(path)?;
                    Some(parse_side(text.trim(), n).map_err(|e| format!("{}: {e}", path.display()))?)
                }
                None => doc.side.clone(),
            };
            let bg = match side {
                Some(x) => BipartiteGraph::new(doc.graph.clone(), x),
                None => BipartiteGraph::two_colour(doc.graph.clone()),
            }
            .map_err(err)?;
            let fam = maximal_one_sided_modules(&bg, p).map_err(err)?;
            Outcome::new(family_text(&doc.labels, &fam.maximal_members), family_json(&doc.labels, &fam.maximal_members))
        }
        Command::Ksplitter { with, k } => {
            let (doc, set) = with_set(with)?;
            let r = k_splitter_report(&doc.graph, &set, *k).map_err(err)?;
            let text = format!("{}\nsplitters {{{}}}\n", r.is_k_module, doc.labels.format_set(&r.classical_splitters));
            let json = json!({
                "k": r.k,
                "is_k_module": r.is_k_module,
                "splitters": set_json(&doc.labels, &r.classical_splitters),
            });
            Outcome::new(text, json).negative_if(!r.is_k_module)
        }
        Command::Gen(gen) => {
            let (g, labels, seeded) = match gen {
                Gen::Random { n, p: prob } => {
                    if !(0.0..=1.0).contains(prob) {
                        return Err(format!("edge probability {prob} is outside [0, 1]"));
                    }
                    (generate::gen_random(*n, *prob, cli.seed), Labels::numeric(*n), true)
                }
                Gen::Pmg4 { depth, seeds } => {
                    let g = if seeds.is_empty() {
                        generate::gen_pmg4(*depth, cli.seed)
                    } else {
                        let graphs = seeds.iter().map(|s| load(s).map(|d| d.graph)).collect::<Res<Vec<Graph>>>()?;
                        generate::gen_pmg(*depth, cli.seed, &graphs).map_err(err)?
                    };
                    let n = g.n();
                    (g, Labels::numeric(n), true)
                }
                Gen::Fixture { name } => {
                    let (g, l) = abmod::fixtures::by_name(name).ok_or_else(|| format!("unknown fixture `{name}`"))?;
                    (g, l, false)
                }
            };
            let text = write_graph(&g, &labels, None);
            let mut out = Outcome::new(text.clone(), json!({ "n": g.n(), "m": g.m(), "document": text }));
            out.seeded = seeded;
            out
        }
        Command::Oracle(Oracle::AllModules { input, max_n }) => {
            let doc = open(input)?;
            let fam = all_modules_oracle(&doc.graph, p, *max_n).map_err(err)?;
            Outcome::new(family_text(&doc.labels, &fam.members), family_json(&doc.labels, &fam.members))
        }
    })
}
