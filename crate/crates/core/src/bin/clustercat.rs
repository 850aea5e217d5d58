//! Command-line surface over the cluster-category library: root data,
//! indecomposables, hom matrices, tilting enumeration, completions,
//! cluster-tilted algebras, APR tilting, Grothendieck quotients, reflection
//! functors, the verification suite and DOT output.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error.

use clap::{Parser, Subcommand, ValueEnum};
use clustercat::algebra::{apr_tilting, cluster_tilted_algebra, module_summands, GabrielQuiver};
use clustercat::cache::{cache_dir_from_env, catalog_cached};
use clustercat::cluster::{
    complete_almost_tilting, enumerate_tilting_sets, ext_matrix, hom_cluster, ind_cluster,
    ind_root_category, k0_quotient, ClusterObject, K0Auto, TiltingSet,
};
use clustercat::dot::{exchange_dot, ext_graph_dot, gabriel_dot, quiver_dot};
use clustercat::orbit::{
    cluster_labels, cluster_reflect_label, gamma, object_to_label, root_dim, root_labels,
    root_reflect_label, verify_cluster_diagram, verify_root_diagram,
};
use clustercat::quiver::ValuedQuiver;
use clustercat::quiverfile::{parse_object_list, parse_quiver, quiver_hash};
use clustercat::rep::Catalog;
use clustercat::report::{Report, SuiteOutcome, Verification};
use clustercat::verify::full_verification;
use serde_json::json;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "clustercat", version, about = "Cluster categories of valued Dynkin quivers")]
struct Cli {
    /// Path to a quiver file; `-` reads standard input.
    #[arg(short, long, global = true)]
    quiver: Option<String>,
    /// Inline quiver text, e.g. "1 -> 2\n2 -> 3".
    #[arg(short, long, global = true)]
    inline: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Rank cap for enumeration commands.
    #[arg(long, global = true, default_value_t = 8)]
    cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Positive and almost positive roots.
    Roots,
    /// Fundamental-domain indecomposables with their root labels.
    Ind {
        #[arg(long, value_enum, default_value_t = Category::Cluster)]
        category: Category,
    },
    /// Hom and extension dimension matrices over the cluster indecomposables.
    Homs,
    /// Enumerate the tilting sets.
    Tilting {
        /// Print every set, not only the count.
        #[arg(long)]
        sets: bool,
    },
    /// Complete an almost complete tilting set (rank-1 many objects).
    Complete {
        /// Comma-separated objects, e.g. "P1,M(0,1,1)".
        #[arg(long)]
        objects: String,
    },
    /// Cluster-tilted algebra of a tilting module.
    Cta {
        /// Comma-separated tilting summands, e.g. "E1,P1,P3".
        #[arg(long)]
        tilting: String,
    },
    /// APR tilting at a vertex: the set, the algebras and the added arrows.
    Apr {
        #[arg(long)]
        vertex: usize,
    },
    /// Grothendieck group of an orbit category as invariant factors.
    K0 {
        #[arg(long, value_enum, default_value_t = AutoChoice::F)]
        auto: AutoChoice,
    },
    /// Induced reflection functor at a sink or source.
    Reflect {
        #[arg(long)]
        vertex: usize,
        #[arg(long, value_enum, default_value_t = Category::Cluster)]
        category: Category,
    },
    /// Run the full invariant suite; exit 1 on any failure.
    Verify,
    /// Emit DOT graphs.
    Dot {
        #[arg(long, value_enum)]
        graph: GraphKind,
        /// Tilting summands for the algebra graphs.
        #[arg(long)]
        tilting: Option<String>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Category {
    Cluster,
    Root,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AutoChoice {
    /// The cluster-category orbit functor.
    F,
    /// The double shift (root category).
    Shift2,
    /// Identity (test hook).
    Identity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Quiver,
    Ext,
    Exchange,
    TiltedAlgebra,
    ClusterTilted,
}

struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn load_quiver(cli: &Cli) -> Result<ValuedQuiver, InputError> {
    let text = match (&cli.quiver, &cli.inline) {
        (Some(path), None) if path == "-" => {
            use std::io::Read;
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
        (Some(path), None) => std::fs::read_to_string(path)?,
        (None, Some(text)) => text.replace("\\n", "\n"),
        (None, None) => return Err(InputError("provide --quiver or --inline".into())),
        (Some(_), Some(_)) => {
            return Err(InputError("--quiver and --inline are mutually exclusive".into()))
        }
    };
    Ok(parse_quiver(&text)?)
}

fn catalog_for(q: &ValuedQuiver, cap: usize) -> Result<Catalog, InputError> {
    if q.rank() > cap {
        return Err(InputError(format!(
            "rank {} exceeds the cap {cap}; raise it with --cap",
            q.rank()
        )));
    }
    if !q.is_simply_laced() {
        return Err(InputError("this command needs a simply-laced quiver".into()));
    }
    Ok(catalog_cached(Arc::new(q.clone()), cache_dir_from_env().as_deref())?)
}

fn gabriel_json(g: &GabrielQuiver) -> serde_json::Value {
    json!({
        "vertices": g.vertex_count,
        "arrows": g.arrows().iter().map(|(i, j, c)| json!([i + 1, j + 1, c])).collect::<Vec<_>>(),
    })
}

fn gabriel_text(g: &GabrielQuiver) -> String {
    let arrows: Vec<String> = g
        .arrows()
        .iter()
        .flat_map(|&(i, j, c)| std::iter::repeat_n(format!("{} -> {}", i + 1, j + 1), c))
        .collect();
    if arrows.is_empty() {
        "(no arrows)".to_string()
    } else {
        arrows.join(", ")
    }
}

fn tilting_json(set: &TiltingSet) -> serde_json::Value {
    json!(set.objects.iter().map(ClusterObject::describe).collect::<Vec<_>>())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode, InputError> {
    let started = Instant::now();
    let q = load_quiver(cli)?;
    let hash = quiver_hash(&q);
    let mut report = Report::new(command_name(&cli.command), hash);
    let mut text_out = String::new();
    let mut exit = ExitCode::SUCCESS;

    match &cli.command {
        Command::Roots => {
            let cartan = q.cartan();
            let pos = cartan.positive_roots()?;
            let apr = cartan.almost_positive_roots()?;
            report.results = json!({
                "type": cartan.type_label(),
                "positive_roots": pos.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
                "positive_count": pos.len(),
                "almost_positive": apr.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
                "almost_positive_count": apr.len(),
            });
            text_out.push_str(&format!(
                "type: {}\npositive roots ({}):\n",
                cartan.type_label().unwrap_or("unknown"),
                pos.len()
            ));
            for r in &pos {
                text_out.push_str(&format!("  {r}\n"));
            }
            text_out.push_str(&format!("almost positive roots: {}\n", apr.len()));
        }
        Command::Ind { category } => {
            let cat = catalog_for(&q, cli.cap)?;
            match category {
                Category::Cluster => {
                    let objects = ind_cluster(&cat);
                    let rows: Vec<_> = objects
                        .iter()
                        .map(|o| {
                            let label = object_to_label(&cat, o);
                            json!({
                                "object": o.describe(),
                                "root": gamma(&label).to_string(),
                            })
                        })
                        .collect();
                    report.results = json!({ "count": objects.len(), "objects": rows });
                    text_out.push_str(&format!("{} cluster indecomposables:\n", objects.len()));
                    for o in &objects {
                        let label = object_to_label(&cat, o);
                        text_out.push_str(&format!(
                            "  {:<20} -> {}\n",
                            o.describe(),
                            gamma(&label)
                        ));
                    }
                }
                Category::Root => {
                    let objects = ind_root_category(&cat);
                    let rows: Vec<_> = objects
                        .iter()
                        .map(|o| {
                            json!({
                                "object": format!("M{:?}[{}]", o.key, o.shift),
                                "class": o.k0_class(),
                            })
                        })
                        .collect();
                    report.results = json!({ "count": objects.len(), "objects": rows });
                    text_out
                        .push_str(&format!("{} root-category indecomposables\n", objects.len()));
                }
            }
        }
        Command::Homs => {
            let cat = catalog_for(&q, cli.cap)?;
            let objects = ind_cluster(&cat);
            let names: Vec<String> = objects.iter().map(ClusterObject::describe).collect();
            let mut hom_rows = Vec::new();
            let (_, ext_rows) = ext_matrix(&cat);
            for x in &objects {
                let row: Vec<usize> =
                    objects.iter().map(|y| hom_cluster(&cat, x, y).total_dim()).collect();
                hom_rows.push(row);
            }
            report.results = json!({ "objects": names, "hom": hom_rows, "ext": ext_rows });
            text_out.push_str("objects:\n");
            for (i, n) in names.iter().enumerate() {
                text_out.push_str(&format!("  [{i}] {n}\n"));
            }
            text_out.push_str("hom dimensions:\n");
            for row in &hom_rows {
                let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
                text_out.push_str(&format!("  {}\n", cells.join(" ")));
            }
            text_out.push_str("ext dimensions:\n");
            for row in &ext_rows {
                let cells: Vec<String> = row.iter().map(|d| d.to_string()).collect();
                text_out.push_str(&format!("  {}\n", cells.join(" ")));
            }
        }
        Command::Tilting { sets } => {
            let cat = catalog_for(&q, cli.cap)?;
            let tilting = enumerate_tilting_sets(&cat);
            report.results = json!({
                "count": tilting.len(),
                "sets": if *sets {
                    json!(tilting.iter().map(tilting_json).collect::<Vec<_>>())
                } else {
                    serde_json::Value::Null
                },
            });
            text_out.push_str(&format!("{} tilting sets\n", tilting.len()));
            if *sets {
                for t in &tilting {
                    text_out.push_str(&format!("  {}\n", t.describe()));
                }
            }
        }
        Command::Complete { objects } => {
            let cat = catalog_for(&q, cli.cap)?;
            let almost = parse_object_list(&cat, objects)?;
            let completions = complete_almost_tilting(&cat, &almost)?;
            report.results = json!({
                "completions":
                    completions.iter().map(ClusterObject::describe).collect::<Vec<_>>(),
            });
            text_out.push_str("completions:\n");
            for c in &completions {
                text_out.push_str(&format!("  {}\n", c.describe()));
            }
        }
        Command::Cta { tilting } => {
            let cat = catalog_for(&q, cli.cap)?;
            let objects = parse_object_list(&cat, tilting)?;
            let set = TiltingSet { objects };
            let summands = module_summands(&cat, &set)?;
            let ct = cluster_tilted_algebra(&cat.quiver, summands)?;
            let ga = ct.tilted.gabriel_quiver()?;
            let gl = ct.lambda.gabriel_quiver()?;
            report.results = json!({
                "tilted_dim": ct.tilted.dim(),
                "cluster_tilted_dim": ct.lambda.dim(),
                "bimodule_dim": ct.bimodule_dim,
                "tilted_quiver": gabriel_json(&ga),
                "cluster_tilted_quiver": gabriel_json(&gl),
            });
            text_out.push_str(&format!(
                "tilted algebra: dim {}, quiver {}\n",
                ct.tilted.dim(),
                gabriel_text(&ga)
            ));
            text_out.push_str(&format!("bimodule dimension: {}\n", ct.bimodule_dim));
            text_out.push_str(&format!(
                "cluster-tilted algebra: dim {}, quiver {}\n",
                ct.lambda.dim(),
                gabriel_text(&gl)
            ));
        }
        Command::Apr { vertex } => {
            if *vertex == 0 || *vertex > q.rank() {
                return Err(InputError(format!("vertex must be in 1..={}", q.rank())));
            }
            let k = vertex - 1;
            let cat = catalog_for(&q, cli.cap)?;
            let set = apr_tilting(&cat, k);
            let all_modules = set.objects.iter().all(ClusterObject::is_module);
            // A source vertex realizes the algebra over the reflected quiver,
            // where the image of the tilting set is the full projective slice.
            let (algebra_cat, realized): (Catalog, Vec<_>) = if all_modules {
                let summands =
                    set.objects.iter().map(|o| cat.rep(&o.0.key).clone()).collect();
                (cat, summands)
            } else {
                let reflected = q.reflect_orientation(k);
                let rcat = catalog_for(&reflected, cli.cap)?;
                let summands = (0..reflected.rank())
                    .map(|i| rcat.rep(&rcat.projective_key(i)).clone())
                    .collect();
                (rcat, summands)
            };
            let ct = cluster_tilted_algebra(&algebra_cat.quiver, realized)?;
            let ga = ct.tilted.gabriel_quiver()?;
            let gl = ct.lambda.gabriel_quiver()?;
            report.results = json!({
                "tilting_set": tilting_json(&set),
                "bimodule_dim": ct.bimodule_dim,
                "tilted_dim": ct.tilted.dim(),
                "cluster_tilted_dim": ct.lambda.dim(),
                "tilted_quiver": gabriel_json(&ga),
                "cluster_tilted_quiver": gabriel_json(&gl),
                "hereditary": ct.bimodule_dim == 0,
            });
            text_out.push_str(&format!("tilting set: {}\n", set.describe()));
            text_out.push_str(&format!("bimodule dimension: {}\n", ct.bimodule_dim));
            text_out.push_str(&format!(
                "cluster-tilted algebra: dim {}, quiver {}\n",
                ct.lambda.dim(),
                gabriel_text(&gl)
            ));
            if ct.bimodule_dim == 0 {
                text_out.push_str("the algebra is hereditary\n");
            }
        }
        Command::K0 { auto } => {
            let choice = match auto {
                AutoChoice::F => K0Auto::F,
                AutoChoice::Shift2 => K0Auto::ShiftTwo,
                AutoChoice::Identity => K0Auto::Identity,
            };
            let quotient = k0_quotient(&q, choice);
            report.results = json!({
                "rank": quotient.rank,
                "invariant_factors": quotient.factors,
                "group": quotient.description,
            });
            text_out.push_str(&format!(
                "invariant factors: {:?}\ngroup: {}\n",
                quotient.factors, quotient.description
            ));
        }
        Command::Reflect { vertex, category } => {
            if *vertex == 0 || *vertex > q.rank() {
                return Err(InputError(format!("vertex must be in 1..={}", q.rank())));
            }
            let k = vertex - 1;
            let (rows, diagram_name, diagram) = match category {
                Category::Cluster => {
                    let labels = cluster_labels(q.cartan())?;
                    let mut rows = Vec::new();
                    for l in &labels {
                        let image = cluster_reflect_label(&q, k, l)?;
                        rows.push(json!({
                            "object": l.to_string(),
                            "image": image.to_string(),
                            "root": gamma(l).to_string(),
                            "image_root": gamma(&image).to_string(),
                        }));
                        text_out.push_str(&format!("  {l} -> {image}\n"));
                    }
                    (rows, "cluster-diagram", verify_cluster_diagram(&q, k)?)
                }
                Category::Root => {
                    let labels = root_labels(q.cartan())?;
                    let mut rows = Vec::new();
                    for l in &labels {
                        let image = root_reflect_label(&q, k, l)?;
                        rows.push(json!({
                            "object": l.to_string(),
                            "image": image.to_string(),
                            "dim": root_dim(l).to_string(),
                            "image_dim": root_dim(&image).to_string(),
                        }));
                        text_out.push_str(&format!("  {l} -> {image}\n"));
                    }
                    (rows, "root-diagram", verify_root_diagram(&q, k)?)
                }
            };
            report.results = json!({ "mapping": rows });
            report.verification = Some(Verification {
                passed: diagram.passed(),
                suites: vec![SuiteOutcome {
                    name: diagram_name.into(),
                    checked: diagram.checked,
                    failures: diagram
                        .failures
                        .iter()
                        .map(|f| {
                            format!("{}: {} vs {}", f.object, f.through_functor, f.through_reflection)
                        })
                        .collect(),
                }],
            });
            let status = if diagram.passed() { "PASS" } else { "FAIL" };
            text_out.push_str(&format!(
                "{status} {diagram_name} ({} objects)\n",
                diagram.checked
            ));
            if !diagram.passed() {
                exit = ExitCode::from(1);
            }
        }
        Command::Verify => {
            if q.rank() > cli.cap {
                return Err(InputError(format!(
                    "rank {} exceeds the cap {cap}; raise it with --cap",
                    q.rank(),
                    cap = cli.cap
                )));
            }
            let suites = full_verification(&q);
            let passed = suites.iter().all(|s| s.passed());
            for s in &suites {
                let status = if s.passed() { "PASS" } else { "FAIL" };
                text_out.push_str(&format!("{status} {} ({} checks)\n", s.name, s.checked));
                for f in &s.failures {
                    text_out.push_str(&format!("      {f}\n"));
                }
            }
            report.verification = Some(Verification {
                passed,
                suites: suites.iter().map(|s| s.outcome()).collect(),
            });
            report.results = json!({ "passed": passed });
            if !passed {
                exit = ExitCode::from(1);
            }
        }
        Command::Dot { graph, tilting } => {
            let dot_text = match graph {
                GraphKind::Quiver => quiver_dot(&q),
                GraphKind::Ext => {
                    let cat = catalog_for(&q, cli.cap)?;
                    let (objects, ext) = ext_matrix(&cat);
                    ext_graph_dot(&cat, &objects, &ext)
                }
                GraphKind::Exchange => {
                    let cat = catalog_for(&q, cli.cap)?;
                    exchange_dot(&enumerate_tilting_sets(&cat))
                }
                GraphKind::TiltedAlgebra | GraphKind::ClusterTilted => {
                    let spec = tilting
                        .as_ref()
                        .ok_or_else(|| InputError("--tilting is required".into()))?;
                    let cat = catalog_for(&q, cli.cap)?;
                    let objects = parse_object_list(&cat, spec)?;
                    let set = TiltingSet { objects };
                    let summands = module_summands(&cat, &set)?;
                    let ct = cluster_tilted_algebra(&cat.quiver, summands)?;
                    if matches!(graph, GraphKind::TiltedAlgebra) {
                        gabriel_dot("tilted", &ct.tilted.gabriel_quiver()?)
                    } else {
                        gabriel_dot("cluster_tilted", &ct.lambda.gabriel_quiver()?)
                    }
                }
            };
            report.results = json!({ "dot": dot_text });
            text_out.push_str(&dot_text);
        }
    }

    match cli.format {
        Format::Json => {
            report.timing_ms = Some(started.elapsed().as_millis());
            println!("{}", report.to_json());
        }
        Format::Text => {
            print!("{text_out}");
        }
    }
    Ok(exit)
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Roots => "roots",
        Command::Ind { .. } => "ind",
        Command::Homs => "homs",
        Command::Tilting { .. } => "tilting",
        Command::Complete { .. } => "complete",
        Command::Cta { .. } => "cta",
        Command::Apr { .. } => "apr",
        Command::K0 { .. } => "k0",
        Command::Reflect { .. } => "reflect",
        Command::Verify => "verify",
        Command::Dot { .. } => "dot",
    }
}
