//! Thin command-line front end. All logic lives in the library; this
//! binary parses flags, reads the input document, and prints results in
//! text or json-lines form.
//!
//! Exit codes: 0 success, 1 I/O or parse error, 2 recognition or
//! verification refutation (including failed relation checks), 3 resource
//! cap exceeded.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use uct::gen;
use uct::oracle::Verification;
use uct::reductions::RelationOutcome;
use uct::{
    check_relation, gen_chordal_gadget, gen_line_graph, gen_subdivision, gen_two_star, recognize,
    star_forest_oracle, uct_dispatch, uct_oracle, verify_minimal_ct, Caps, Error, ForcedClass,
    GadgetInstance, Graph, Method, UctResult,
};

#[derive(Parser)]
#[command(
    name = "uct",
    version,
    about = "Upper clique transversal numbers with certified witnesses"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    JsonLines,
}

#[derive(Subcommand)]
enum Command {
    /// Solve via class dispatch (cograph, split, proper interval, forest,
    /// oracle), printing the value, method, and witness.
    Solve {
        /// Edge-list file; `-` or absent reads stdin
        #[arg(long)]
        input: Option<PathBuf>,
        /// Force a class instead of probing (cograph, split,
        /// proper-interval, forest, triangle-free, oracle)
        #[arg(long)]
        class: Option<String>,
        /// Also print per-vertex private-clique certificates
        #[arg(long)]
        witness: bool,
        /// Vertex cap for oracle fallback
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        /// Cap on enumerated maximal cliques
        #[arg(long, default_value_t = 1_000_000)]
        max_cliques: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact brute-force computation, regardless of graph class.
    Oracle {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        witness: bool,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_cliques: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check whether a vertex set is a minimal clique transversal.
    Verify {
        #[arg(long)]
        input: Option<PathBuf>,
        /// The candidate set, comma- or space-separated vertex ids
        #[arg(long)]
        set: String,
        #[arg(long, default_value_t = 1_000_000)]
        max_cliques: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the recognized graph classes.
    Recognize {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Emit a gadget instance as an edge list with a relation header.
    Generate {
        /// One of: chordal-ssf, two-star, line-graph, subdivision
        #[arg(long)]
        gadget: String,
        /// Star size for the two-star gadget
        #[arg(long)]
        q: Option<u32>,
        /// Source graph; when absent a random suitable source is drawn
        #[arg(long)]
        input: Option<PathBuf>,
        /// Seed for random source generation
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check the declared relation of a generated gadget document.
    Check {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 20)]
        max_n: usize,
        #[arg(long, default_value_t = 1_000_000)]
        max_cliques: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::NotSplit
        | Error::NotProperInterval
        | Error::NotCograph(_)
        | Error::NotTriangleFree(_)
        | Error::DegreeTooSmall(_)
        | Error::Edgeless
        | Error::InvalidPartition(_) => 2,
        Error::Parse { .. } | Error::Invalid(_) | Error::Internal(_) => 1,
    }
}

fn read_input(path: &Option<PathBuf>) -> uct::Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p.as_os_str() != "-" => {
            text = std::fs::read_to_string(p).map_err(|e| Error::Invalid(format!("{e}")))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Error::Invalid(format!("{e}")))?;
        }
    }
    Ok(text)
}

fn load_graph(path: &Option<PathBuf>) -> uct::Result<Graph> {
    Graph::parse(&read_input(path)?)
}

fn caps_with(max_n: usize, max_cliques: usize) -> uct::Result<Caps> {
    if max_n == 0 || max_cliques == 0 {
        return Err(Error::Invalid("caps must be positive".into()));
    }
    Ok(Caps {
        max_oracle_vertices: max_n,
        max_cliques,
        ..Caps::default()
    })
}

fn print_result(r: &UctResult, with_certs: bool, format: Format) {
    match format {
        Format::Text => print!("{}", r.to_document(with_certs)),
        Format::JsonLines => {
            let mut obj = json!({
                "type": "result",
                "value": r.value,
                "method": r.method,
                "witness": r.witness.vertices,
            });
            if with_certs {
                obj["certificates"] = serde_json::to_value(&r.witness.certificates).unwrap();
            }
            println!("{obj}");
        }
    }
}

fn run(cli: Cli) -> uct::Result<ExitCode> {
    match cli.command {
        Command::Solve {
            input,
            class,
            witness,
            max_n,
            max_cliques,
            format,
        } => {
            let g = load_graph(&input)?;
            let forced: Option<ForcedClass> = match class {
                Some(s) => Some(s.parse()?),
                None => None,
            };
            let r = uct_dispatch(&g, forced, &caps_with(max_n, max_cliques)?)?;
            print_result(&r, witness, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            input,
            witness,
            max_n,
            max_cliques,
            format,
        } => {
            let g = load_graph(&input)?;
            let (value, w) = uct_oracle(&g, &caps_with(max_n, max_cliques)?)?;
            let r = UctResult {
                value,
                witness: w,
                method: Method::Oracle,
            };
            print_result(&r, witness, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            set,
            max_cliques,
            format,
        } => {
            let g = load_graph(&input)?;
            let ids: Vec<u32> = set
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse()
                        .map_err(|_| Error::Invalid(format!("bad vertex id {s:?}")))
                })
                .collect::<uct::Result<_>>()?;
            let caps = caps_with(20, max_cliques)?;
            match verify_minimal_ct(&g, &ids, &caps)? {
                Verification::Verified(w) => {
                    match format {
                        Format::Text => {
                            println!("verified");
                            for (u, c) in &w.certificates {
                                let ids: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                                println!("cert {u}: {}", ids.join(" "));
                            }
                        }
                        Format::JsonLines => {
                            println!(
                                "{}",
                                json!({
                                    "type": "verified",
                                    "set": w.vertices,
                                    "certificates": w.certificates,
                                })
                            );
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                Verification::Refuted(r) => {
                    match format {
                        Format::Text => println!("refuted: {r:?}"),
                        Format::JsonLines => {
                            println!("{}", json!({ "type": "refuted", "refutation": r }))
                        }
                    }
                    Ok(ExitCode::from(2))
                }
            }
        }
        Command::Recognize { input, format } => {
            let g = load_graph(&input)?;
            let tags = recognize(&g);
            match format {
                Format::Text => {
                    let words: Vec<String> = tags.iter().map(|t| t.to_string()).collect();
                    println!(
                        "{}",
                        if words.is_empty() {
                            "none".into()
                        } else {
                            words.join(" ")
                        }
                    );
                }
                Format::JsonLines => println!("{}", json!({ "type": "classes", "tags": tags })),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate {
            gadget,
            q,
            input,
            seed,
            format,
        } => {
            let inst = generate(&gadget, q, &input, seed)?;
            match format {
                Format::Text => print!("{}", inst.to_document()),
                Format::JsonLines => {
                    let src = inst
                        .source
                        .as_ref()
                        .map(|s| json!({ "n": s.n(), "m": s.m(), "edges": s.edge_list() }));
                    println!(
                        "{}",
                        json!({
                            "type": "gadget",
                            "kind": inst.kind.name(),
                            "relation": inst.relation,
                            "n": inst.graph.n(),
                            "m": inst.graph.m(),
                            "edges": inst.graph.edge_list(),
                            "source": src,
                        })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            input,
            max_n,
            max_cliques,
            format,
        } => {
            let inst = GadgetInstance::parse_document(&read_input(&input)?)?;
            let report = check_relation(&inst, &caps_with(max_n, max_cliques)?);
            match format {
                Format::Text => print!("{}", report.to_document()),
                Format::JsonLines => println!("{}", serde_json::to_string(&report).unwrap()),
            }
            Ok(match report.outcome {
                RelationOutcome::Pass => ExitCode::SUCCESS,
                RelationOutcome::Fail => ExitCode::from(2),
                RelationOutcome::Skipped { cap_exceeded, .. } => {
                    if cap_exceeded {
                        ExitCode::from(3)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
            })
        }
    }
}

fn generate(
    gadget: &str,
    q: Option<u32>,
    input: &Option<PathBuf>,
    seed: u64,
) -> uct::Result<GadgetInstance> {
    let source = match input {
        Some(_) => Some(load_graph(input)?),
        None => None,
    };
    let caps = Caps::default();
    match gadget {
        "two-star" => {
            let q = q.ok_or_else(|| Error::Invalid("two-star requires --q".into()))?;
            gen_two_star(q)
        }
        "chordal-ssf" => match source {
            Some(g) => gen_chordal_gadget(&g),
            None => {
                let mut r = gen::rng(seed);
                loop {
                    let g = gen::random_sparse_source(8, 6, &mut r);
                    if star_forest_oracle(&g, &caps)? >= 2 {
                        return gen_chordal_gadget(&g);
                    }
                }
            }
        },
        "line-graph" => match source {
            Some(g) => gen_line_graph(&g),
            None => {
                let mut r = gen::rng(seed);
                let g = gen::random_bipartite_min_deg2(8, 0.4, &mut r);
                gen_line_graph(&g)
            }
        },
        "subdivision" => match source {
            Some(g) => gen_subdivision(&g),
            None => {
                let mut r = gen::rng(seed);
                let g = gen::random_bipartite_min_deg2(8, 0.4, &mut r);
                gen_subdivision(&g)
            }
        },
        other => Err(Error::Invalid(format!(
            "unknown gadget {other:?}; expected chordal-ssf, two-star, line-graph, or subdivision"
        ))),
    }
}
