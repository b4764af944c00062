//! The `homcx` command line. [`run`] takes the argument list and output
//! sinks and returns the process exit code, so tests drive it directly.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 usage or parse
//! error, 3 a size cap was hit.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::chromatic::chromatic_number;
use crate::complex::{CellSearch, DEFAULT_MAX_CELLS};
use crate::counterexample::verify_graph;
use crate::error::Error;
use crate::flip::FlipGraph;
use crate::graph::{Family, Graph};
use crate::hom::{Coloring, HomSearch, DEFAULT_MAX_COLORINGS};
use crate::homology::{homology, DEFAULT_MAX_CHAINS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "homcx", version, about = "Graph homomorphisms, coloring flip graphs and Hom complexes")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Worker threads for enumeration; output does not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    pub threads: usize,

    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, default_value_t = DEFAULT_MAX_COLORINGS, global = true)]
    pub max_colorings: usize,

    #[arg(long, default_value_t = DEFAULT_MAX_CELLS, global = true)]
    pub max_cells: usize,

    /// Cap on order-complex simplices for homology.
    #[arg(long, default_value_t = DEFAULT_MAX_CHAINS, global = true)]
    pub max_chains: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact chromatic number with witness and clique bound.
    Chi {
        /// Generator, e.g. `kneser:5,2`.
        #[arg(long, conflicts_with = "graph", required_unless_present = "graph")]
        family: Option<String>,
        /// DIMACS file or `family:<name>[:params]`.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Homomorphisms G -> H.
    Hom {
        #[arg(value_enum)]
        action: HomAction,
        #[command(flatten)]
        pair: Pair,
    },
    /// Flip graph of homomorphisms G -> H.
    Flip {
        #[arg(value_enum)]
        action: FlipAction,
        #[command(flatten)]
        pair: Pair,
        /// Start coloring for `path`, 1-indexed and space separated.
        #[arg(long, required_if_eq("action", "path"))]
        from: Option<String>,
        #[arg(long, required_if_eq("action", "path"))]
        to: Option<String>,
    },
    /// Cells and GF(2) homology of Hom(G, H).
    Complex {
        #[arg(value_enum)]
        action: ComplexAction,
        #[command(flatten)]
        pair: Pair,
        /// Only enumerate cells up to this dimension (`cells` only).
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Check every claim about the 9-vertex graph with connected 5-coloring flip graph.
    VerifyPaper {
        /// Run the checks on another graph instead.
        #[arg(long)]
        graph: Option<String>,
        /// Delete this edge (0-based, in sorted edge order) first.
        #[arg(long)]
        delete_edge: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct Pair {
    /// Source graph: DIMACS file or `family:<name>[:params]`.
    #[arg(long)]
    pub g: String,
    /// Target graph.
    #[arg(long)]
    pub h: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HomAction {
    Count,
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FlipAction {
    Components,
    Path,
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComplexAction {
    Cells,
    Homology,
}

/// Loads `family:<name>[:params]` or a DIMACS file.
pub fn load_graph(src: &str) -> Result<Graph, Error> {
    match src.strip_prefix("family:") {
        Some(spec) => spec.parse::<Family>()?.generate(),
        None => Graph::parse_dimacs(&std::fs::read_to_string(src)?),
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::TooLarge(_) => EXIT_CAP,
        Error::Unclassifiable(_) => EXIT_VERIFY,
        Error::Parse { .. } | Error::InvalidParams(_) | Error::NotInHomSet(_) | Error::Io(_) => EXIT_USAGE,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cfg) {
        Ok((text, code)) => {
            let written = match &cfg.output {
                Some(path) => std::fs::write(path, &text).map_err(Error::from),
                None => out.write_all(text.as_bytes()).map_err(Error::from),
            };
            match written {
                Ok(()) => code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    EXIT_USAGE
                }
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn join(xs: impl IntoIterator<Item = impl ToString>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn one_indexed(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn parse_coloring(s: &str) -> Result<Coloring, Error> {
    s.parse()
}

/// Runs the configured command, returning its rendered output and exit code.
pub fn execute(cfg: &RunConfig) -> Result<(String, i32), Error> {
    let homs = |pair: &Pair| -> Result<_, Error> {
        let (g, h) = (load_graph(&pair.g)?, load_graph(&pair.h)?);
        let search = HomSearch { max_colorings: cfg.max_colorings, threads: cfg.threads };
        Ok((search, g, h))
    };
    match &cfg.command {
        Command::Chi { family, graph } => {
            let g = match (family, graph) {
                (Some(f), _) => f.parse::<Family>()?.generate()?,
                (None, Some(src)) => load_graph(src)?,
                (None, None) => return Err(Error::InvalidParams("chi needs --family or --graph".into())),
            };
            let r = chromatic_number(&g)?;
            let text = match cfg.format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Chi {
                        chi: usize,
                        clique: Vec<usize>,
                        witness: Vec<usize>,
                    }
                    json(&Chi {
                        chi: r.chi,
                        clique: one_indexed(&r.lower_bound_clique),
                        witness: one_indexed(&r.witness),
                    })
                }
                _ => format!(
                    "chi: {}\nclique: {}\nwitness: {}\n",
                    r.chi,
                    join(one_indexed(&r.lower_bound_clique)),
                    join(one_indexed(&r.witness))
                ),
            };
            Ok((text, EXIT_OK))
        }
        Command::Hom { action, pair } => {
            let (search, g, h) = homs(pair)?;
            let text = match action {
                HomAction::Count => {
                    let n = search.count(&g, &h)?;
                    match cfg.format {
                        Format::Json => json(&serde_json::json!({ "count": n })),
                        _ => format!("{n}\n"),
                    }
                }
                HomAction::List => {
                    let set = search.enumerate(&g, &h)?;
                    match cfg.format {
                        Format::Json => {
                            let rows: Vec<Vec<usize>> =
                                set.colorings().iter().map(|c| one_indexed(&c.as_usizes())).collect();
                            json(&serde_json::json!({ "count": set.len(), "colorings": rows }))
                        }
                        _ => set.to_text(),
                    }
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Flip { action, pair, from, to } => {
            let (search, g, h) = homs(pair)?;
            let fg = FlipGraph::build(search.enumerate(&g, &h)?, cfg.threads);
            let text = match action {
                FlipAction::Components => {
                    let r = fg.components();
                    match cfg.format {
                        Format::Json => json(r),
                        _ => format!("components: {}\nsizes: {}\n", r.component_count, join(&r.component_sizes)),
                    }
                }
                FlipAction::Export => match cfg.format {
                    Format::Json => {
                        let edges: Vec<[usize; 2]> = (0..fg.homset().len())
                            .flat_map(|i| fg.neighbors(i).iter().filter(move |&&j| j > i).map(move |&j| [i, j]))
                            .collect();
                        let nodes: Vec<String> = fg.homset().colorings().iter().map(|c| c.to_string()).collect();
                        json(&serde_json::json!({ "nodes": nodes, "edges": edges }))
                    }
                    _ => fg.to_dot(),
                },
                FlipAction::Path => {
                    let a = parse_coloring(from.as_deref().unwrap_or_default())?;
                    let b = parse_coloring(to.as_deref().unwrap_or_default())?;
                    let path = fg.shortest_path(&a, &b)?;
                    match cfg.format {
                        Format::Json => {
                            let p = path.as_ref().map(|p| p.iter().map(|c| c.to_string()).collect::<Vec<_>>());
                            let len = path.as_ref().map(|p| p.len() - 1);
                            json(&serde_json::json!({ "path": p, "length": len }))
                        }
                        _ => match path {
                            Some(p) => {
                                let mut s = format!("length: {}\n", p.len() - 1);
                                for c in p {
                                    s.push_str(&format!("{c}\n"));
                                }
                                s
                            }
                            None => "no path: different components\n".to_string(),
                        },
                    }
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Complex { action, pair, max_dim } => {
            let (g, h) = (load_graph(&pair.g)?, load_graph(&pair.h)?);
            let search = CellSearch {
                max_dim: if *action == ComplexAction::Homology { None } else { *max_dim },
                max_cells: cfg.max_cells,
                threads: cfg.threads,
            };
            let fp = search.run(&g, &h)?;
            let text = match action {
                ComplexAction::Cells => {
                    let counts = fp.cell_counts();
                    match cfg.format {
                        Format::Json => json(&serde_json::json!({
                            "cells": counts,
                            "total": fp.len(),
                            "euler": fp.is_complete().then(|| fp.euler_characteristic()),
                        })),
                        _ => {
                            let mut s = format!("cells: {}\ntotal: {}\n", join(&counts), fp.len());
                            if fp.is_complete() {
                                s.push_str(&format!("euler: {}\n", fp.euler_characteristic()));
                            }
                            s
                        }
                    }
                }
                ComplexAction::Homology => {
                    let r = homology(&fp, cfg.max_chains)?;
                    match cfg.format {
                        Format::Json => json(&r),
                        _ => format!(
                            "cells: {}\neuler: {}\norder complex simplices: {}\nbetti_gf2 (homological evidence): {}\n",
                            join(&r.cell_counts),
                            r.euler_characteristic,
                            join(&r.chain_counts),
                            join(&r.betti_gf2)
                        ),
                    }
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::VerifyPaper { graph, delete_edge } => {
            let mut g = match graph {
                Some(src) => load_graph(src)?,
                None => Graph::counterexample_g9(),
            };
            if let Some(idx) = delete_edge {
                if *idx >= g.edge_count() {
                    return Err(Error::InvalidParams(format!("edge {idx} out of range 0..{}", g.edge_count())));
                }
                g = g.without_edge(*idx);
            }
            let report = verify_graph(&g, cfg.threads);
            let text = match cfg.format {
                Format::Json => json(&report),
                _ => report.summary(),
            };
            Ok((text, if report.pass { EXIT_OK } else { EXIT_VERIFY }))
        }
    }
}
