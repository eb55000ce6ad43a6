//! Command-line front end: parse wall spaces, run the pipeline, emit graphs,
//! complexes, and verification reports in stable formats.
//!
//! Exit codes: 0 on success or all checks passing, 1 on a verification
//! failure (the report is still emitted), 2 on an input error.

use std::fs;
use std::io::Read as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cubulate::cubecomplex::fill_cubes;
use cubulate::cubulation::{cubulate, MedianGraph};
use cubulate::io;
use cubulate::morphism::{permutation_order, GroupAction};
use cubulate::random::random_corpus;
use cubulate::verify::{verify_cubulation, verify_idempotence, verify_median_graph};
use cubulate::wallspace::WallSpace;
use cubulate::{Error, VerificationReport};

#[derive(Parser)]
#[command(name = "cubulate", version, about = "Cubulate finite spaces with walls")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Table,
    Off,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate a wall-space document; print its canonical form.
    Validate { input: String },
    /// Build the median graph of ultrafilters.
    Cubulate {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Wall metric between two named points.
    Dist { input: String, x: String, y: String },
    /// Median vertex of three vertices (point names or bitstrings).
    Median {
        input: String,
        u: String,
        v: String,
        t: String,
    },
    /// A geodesic between two vertices (point names or bitstrings).
    Path { input: String, u: String, v: String },
    /// Fill cubes over the median graph.
    Cubes {
        input: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the verifier battery on a wall space or a raw graph document.
    Verify {
        input: String,
        /// Seed for the extra randomized corpus.
        #[arg(long)]
        seed: Option<u64>,
        /// How many random wall spaces to verify in addition to the input.
        #[arg(long, default_value = "20")]
        random: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Extend a group action on the wall space to the cubulation.
    Act {
        input: String,
        action: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
    /// Derive a wall space from a median graph, re-cubulate, and compare.
    Roundtrip {
        input: String,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
    },
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Error::Parse(e.to_string()))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
    }
}

fn load_space(path: &str) -> Result<WallSpace, Error> {
    let (space, notes) = io::parse_wallspace(&read_input(path)?)?;
    for note in notes {
        eprintln!("note: {note}");
    }
    Ok(space)
}

/// A vertex named by a point (its principal ultrafilter) or by a bitstring.
fn resolve_vertex(g: &MedianGraph, token: &str) -> Result<usize, Error> {
    if let Some(x) = g.space().point_index(token) {
        return g.sigma(x);
    }
    let o = g.space().orientation_from_bitstring(token)?;
    g.vertex_index(&o)
        .ok_or_else(|| Error::Parse(format!("{token:?} is not a vertex of the cubulation")))
}

fn vertex_label(g: &MedianGraph, v: usize) -> String {
    match g.principal_point(v) {
        Some(x) => format!("σ_{}", g.space().point_name(x)),
        None => g.space().bitstring(&g.vertices()[v]),
    }
}

fn print_reports(reports: &[VerificationReport], format: Format) -> bool {
    let all_pass = reports.iter().all(|r| r.pass);
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
        }
        _ => {
            for r in reports {
                let status = match (&r.scope, r.pass) {
                    (cubulate::Scope::Skipped { reason }, _) => format!("SKIP ({reason})"),
                    (_, true) => "PASS".into(),
                    (_, false) => "FAIL".into(),
                };
                println!("{:<28} {}", r.check, status);
                if let Some(ce) = &r.counterexample {
                    println!("  counterexample: {ce:?}");
                }
            }
        }
    }
    all_pass
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Validate { input } => {
            let raw = io::parse_raw_wallspace(&read_input(&input)?)?;
            match raw.build() {
                Ok((space, notes)) => {
                    for note in notes {
                        eprintln!("note: {note}");
                    }
                    println!("{}", io::export_wallspace(&space));
                    Ok(ExitCode::SUCCESS)
                }
                Err(report) => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report).expect("serializable")
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Cubulate { input, format } => {
            let g = cubulate(&load_space(&input)?);
            match format {
                Format::Json => print!("{}", io::export_graph_json(&g)),
                Format::Dot => print!("{}", io::export_graph_dot(&g)),
                Format::Table => {
                    println!("{} vertices, {} edges", g.num_vertices(), g.edges().len());
                    for v in 0..g.num_vertices() {
                        println!(
                            "  {} {}",
                            g.space().bitstring(&g.vertices()[v]),
                            vertex_label(&g, v)
                        );
                    }
                }
                Format::Off => return Err(Error::Parse("off is only valid for cubes".into())),
            }
            if format == Format::Json {
                println!();
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Dist { input, x, y } => {
            let space = load_space(&input)?;
            let xi = space
                .point_index(&x)
                .ok_or_else(|| Error::Parse(format!("unknown point name {x:?}")))?;
            let yi = space
                .point_index(&y)
                .ok_or_else(|| Error::Parse(format!("unknown point name {y:?}")))?;
            println!("{}", space.wall_metric(xi, yi)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Median { input, u, v, t } => {
            let g = cubulate(&load_space(&input)?);
            let m = g.median_vertex(
                resolve_vertex(&g, &u)?,
                resolve_vertex(&g, &v)?,
                resolve_vertex(&g, &t)?,
            )?;
            println!("{}", vertex_label(&g, m));
            Ok(ExitCode::SUCCESS)
        }
        Command::Path { input, u, v } => {
            let g = cubulate(&load_space(&input)?);
            let path = g.geodesic_path(resolve_vertex(&g, &u)?, resolve_vertex(&g, &v)?)?;
            for step in path {
                println!("{}", vertex_label(&g, step));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Cubes { input, format } => {
            let g = cubulate(&load_space(&input)?);
            let complex = fill_cubes(&g);
            match format {
                Format::Json => println!("{}", io::export_complex_json(&g, &complex)),
                Format::Off => print!("{}", io::export_squares_off(&g, &complex)),
                Format::Table => {
                    println!("f-vector: {:?}", complex.f_vector());
                    println!("dimension: {}", complex.dim());
                    println!("euler characteristic: {}", complex.euler_characteristic());
                    println!("maximal cubes:");
                    for cube in complex.maximal_cubes() {
                        println!(
                            "  dim {} at {} over walls {:?}",
                            cube.dim(),
                            g.space().bitstring(&g.vertices()[cube.base]),
                            cube.walls.to_vec()
                        );
                    }
                }
                Format::Dot => return Err(Error::Parse("dot is only valid for cubulate".into())),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            input,
            seed,
            random,
            format,
        } => {
            let text = read_input(&input)?;
            let mut reports = Vec::new();
            if io::looks_like_graph(&text) {
                let (graph, _) = io::parse_graph(&text)?;
                reports.push(verify_median_graph(&graph)?);
                if reports[0].pass {
                    reports.push(verify_idempotence(&graph)?);
                }
            } else {
                let (space, notes) = io::parse_wallspace(&text)?;
                for note in notes {
                    eprintln!("note: {note}");
                }
                reports.extend(verify_cubulation(&cubulate(&space)));
                if let Some(seed) = seed {
                    for (i, random_space) in random_corpus(seed, random, 7, 9).iter().enumerate() {
                        let mut batch = verify_cubulation(&cubulate(random_space));
                        for r in &mut batch {
                            r.check = format!("random[{i}].{}", r.check);
                            r.scope = cubulate::Scope::Sampled { seed };
                        }
                        reports.extend(batch);
                    }
                }
            }
            let all_pass = print_reports(&reports, format);
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Act {
            input,
            action,
            format,
        } => {
            let space = load_space(&input)?;
            let generators = io::parse_action_generators(&read_input(&action)?, &space)?;
            let action = GroupAction::new(space, generators)?;
            let g = cubulate(action.space());
            let extended = action.extend(&g)?;
            match format {
                Format::Json => {
                    let records: Vec<serde_json::Value> = extended
                        .iter()
                        .map(|m| {
                            serde_json::json!({
                                "vertex_map": m.vertex_map,
                                "order": permutation_order(&m.vertex_map),
                                "median_morphism": m.median_morphism,
                                "graph_automorphism": m.graph_automorphism,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&records).expect("serializable")
                    );
                }
                _ => {
                    for (i, m) in extended.iter().enumerate() {
                        println!(
                            "generator {i}: order {}, median morphism: {}, graph automorphism: {}",
                            permutation_order(&m.vertex_map),
                            m.median_morphism,
                            m.graph_automorphism
                        );
                        for (v, &img) in m.vertex_map.iter().enumerate() {
                            println!("  {} -> {}", vertex_label(&g, v), vertex_label(&g, img));
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Roundtrip { input, format } => {
            let text = read_input(&input)?;
            let graph = if io::looks_like_graph(&text) {
                io::parse_graph(&text)?.0
            } else {
                let (space, _) = io::parse_wallspace(&text)?;
                cubulate(&space).underlying_graph()
            };
            let report = verify_idempotence(&graph)?;
            let all_pass = print_reports(std::slice::from_ref(&report), format);
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
