use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use bicayley::bci::bci_by_criterion;
use bicayley::census::{self, CensusRow, Report};
use bicayley::symmetry::{canonical_form_bounded, k_arc_regularity_with};
use bicayley::voltage::fig1;
use bicayley::{BiCayleyGraph, BiCayleySpec, Graph};

#[derive(Parser)]
#[command(name = "bicayley", version, about = "Symmetry of bi-Cayley graphs over abelian groups")]
struct Cli {
    /// Vertex bound: census size for table1/theorem-b, search bound otherwise
    #[arg(long, global = true)]
    max_vertices: Option<usize>,

    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    /// Write graph6 output to this file (one graph per line)
    #[arg(long, global = true)]
    graph6_out: Option<PathBuf>,

    /// Seed for randomized relabeling in `iso`
    #[arg(long, global = true)]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from a spec (inline text or a file path)
    Build { spec: String },
    /// Automorphism group, arc-regularity and BCI verdict of a spec
    Analyze { spec: String },
    /// Regenerate the 0-type census
    Table1,
    /// Regenerate the 2-type census and the Petersen negative controls
    Table2,
    /// Exhaustive 1-type search
    TheoremA {
        #[arg(long, default_value_t = census::DEFAULT_MAX_GROUP_ORDER)]
        max_group_order: usize,
    },
    /// BCI certification of the 0-type census
    TheoremB,
    /// The Q3 voltage example over Z_n
    VoltageFig1 {
        #[arg(long, value_delimiter = ',', default_values_t = [3usize, 5, 7])]
        orders: Vec<usize>,
    },
    /// Isomorphism test between two specs or graph6 strings
    Iso { a: String, b: String },
}

fn read_spec(arg: &str) -> Result<BiCayleySpec> {
    let text = if Path::new(arg).is_file() {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    } else {
        arg.to_owned()
    };
    Ok(BiCayleySpec::parse(text.trim())?)
}

fn read_graph(arg: &str) -> Result<Graph> {
    if arg.contains('=') || Path::new(arg).is_file() {
        Ok(BiCayleyGraph::build(read_spec(arg)?)?.graph().clone())
    } else {
        Ok(Graph::from_graph6(arg)?)
    }
}

fn write_graph6(path: &Option<PathBuf>, graphs: &[String]) -> Result<()> {
    if let Some(path) = path {
        let mut text = graphs.join("\n");
        text.push('\n');
        fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn print_report(report: &Report, json: bool) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(report)?);
        return Ok(());
    }
    for i in &report.instances {
        let failed: Vec<&str> = i.checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
        println!(
            "{} table {} row {} {} n={} girth={} k={} |Aut|={}{}{}",
            if i.pass { "PASS" } else { "FAIL" },
            i.row.table,
            i.row.row,
            describe(&i.row),
            i.vertices,
            i.girth.map_or("-".into(), |g| g.to_string()),
            i.k.map_or("-".into(), |k| k.to_string()),
            i.aut_order,
            i.bci.as_ref().map_or(String::new(), |b| format!(" bci={}", b.is_bci)),
            if failed.is_empty() { String::new() } else { format!(" failed: {}", failed.join(", ")) },
        );
    }
    println!("note: {}", report.note);
    println!("{}", if report.pass { "all checks passed" } else { "some checks FAILED" });
    Ok(())
}

fn describe(row: &CensusRow) -> String {
    let params: Vec<String> = row.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    match &row.expected_name {
        Some(name) if params.is_empty() => name.clone(),
        Some(name) => format!("{name} [{}]", params.join(" ")),
        None => format!("[{}]", params.join(" ")),
    }
}

fn emit(json: bool, value: Value, text: &str) {
    if json {
        println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn run(cli: Cli) -> Result<bool> {
    let search_bound = cli.max_vertices.unwrap_or(bicayley::symmetry::DEFAULT_MAX_VERTICES);
    let census_bound = cli.max_vertices.unwrap_or(census::DEFAULT_MAX_VERTICES);
    match cli.command {
        Command::Build { spec } => {
            let b = BiCayleyGraph::build(read_spec(&spec)?)?;
            let g = b.graph();
            write_graph6(&cli.graph6_out, &[g.to_graph6()])?;
            emit(
                cli.json,
                json!({
                    "spec": b.spec().to_string(),
                    "graph6": g.to_graph6(),
                    "vertices": g.n(),
                    "edges": g.edge_count(),
                    "type": b.spec().type_tag(),
                }),
                &format!("{}\n{}", b.spec(), g.to_graph6()),
            );
            Ok(true)
        }
        Command::Analyze { spec } => {
            let b = BiCayleyGraph::build(read_spec(&spec)?)?;
            let g = b.graph();
            let canon = canonical_form_bounded(g, search_bound)?;
            let reg = if g.is_cubic() { Some(k_arc_regularity_with(g, &canon.automorphisms)?) } else { None };
            let bci = if b.spec().is_zero_type() { Some(bci_by_criterion(&b)?) } else { None };
            write_graph6(&cli.graph6_out, &[g.to_graph6()])?;
            let value = json!({
                "spec": b.spec().to_string(),
                "graph6": g.to_graph6(),
                "certificate": canon.certificate,
                "vertices": g.n(),
                "connected": g.is_connected(),
                "girth": g.girth(),
                "aut_order": canon.automorphisms.order().to_string(),
                "arc_regularity": reg,
                "bci": bci,
            });
            let text = format!(
                "{}\nn={} connected={} girth={} |Aut|={} k={} bci={}",
                b.spec(),
                g.n(),
                g.is_connected(),
                g.girth().map_or("-".into(), |x| x.to_string()),
                canon.automorphisms.order(),
                reg.and_then(|r| r.k).map_or("-".into(), |k| k.to_string()),
                bci.as_ref().map_or("-".into(), |v| v.is_bci.to_string()),
            );
            emit(cli.json, value, &text);
            Ok(true)
        }
        Command::Table1 => {
            let report = census::table1_report(census_bound)?;
            write_graph6(&cli.graph6_out, &report.instances.iter().map(|i| i.graph6.clone()).collect::<Vec<_>>())?;
            print_report(&report, cli.json)?;
            Ok(report.pass)
        }
        Command::Table2 => {
            let report = census::table2_report()?;
            let controls = census::negative_controls(24)?;
            write_graph6(&cli.graph6_out, &report.instances.iter().map(|i| i.graph6.clone()).collect::<Vec<_>>())?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "version": report.version,
                        "note": report.note,
                        "instances": report.instances,
                        "negative_controls": controls,
                        "pass": report.pass && controls.pass,
                    }))?
                );
            } else {
                print_report(&report, false)?;
                println!(
                    "{} GP(10,3) has no 0-type representation over groups of order 10 ({} matches)",
                    if controls.desargues_matches.is_empty() { "PASS" } else { "FAIL" },
                    controls.desargues_matches.len()
                );
                println!(
                    "{} arc-transitive GP(n,k) with n <= 24: {:?}",
                    if controls.pass { "PASS" } else { "FAIL" },
                    controls.arc_transitive_petersen
                );
            }
            Ok(report.pass && controls.pass)
        }
        Command::TheoremA { max_group_order } => {
            let hits = census::theorem_a_search(max_group_order)?;
            let mut names: Vec<&str> = hits.iter().filter_map(|h| h.name.as_deref()).collect();
            names.sort_unstable();
            let pass = hits.len() == 4 && names == ["GP(12,5)", "GP(8,3)", "K4", "Q3"];
            write_graph6(&cli.graph6_out, &hits.iter().map(|h| h.certificate.clone()).collect::<Vec<_>>())?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "version": census::REPORT_VERSION,
                        "note": census::BOUNDED_NOTE,
                        "max_group_order": max_group_order,
                        "instances": hits,
                        "pass": pass,
                    }))?
                );
            } else {
                for h in &hits {
                    println!("{} n={} k={:?} {}", h.name.as_deref().unwrap_or("unnamed"), h.vertices, h.k, h.spec);
                }
                println!("{} {} graphs for |H| <= {max_group_order}", if pass { "PASS" } else { "FAIL" }, hits.len());
            }
            Ok(pass)
        }
        Command::TheoremB => {
            let report = census::theorem_b_verify(census_bound)?;
            write_graph6(&cli.graph6_out, &report.instances.iter().map(|i| i.graph6.clone()).collect::<Vec<_>>())?;
            print_report(&report, cli.json)?;
            Ok(report.pass)
        }
        Command::VoltageFig1 { orders } => {
            let gp = bicayley::bicayley::generalized_petersen(12, 5)?;
            let mut rows = Vec::new();
            let mut pass = true;
            for n in orders {
                let v = fig1::assignment(n)?;
                let cover = v.derive();
                let is_gp = bicayley::symmetry::are_isomorphic(&cover, gp.graph())?;
                let lifts = v.lifts(&fig1::alpha())?.is_some();
                pass &= lifts == (n == 3) && is_gp == (n == 3);
                rows.push(json!({ "n": n, "cover_is_gp_12_5": is_gp, "alpha_lifts": lifts, "voltages": v.to_record() }));
                if !cli.json {
                    println!("Z_{n}: cover ~ GP(12,5): {is_gp}, alpha lifts: {lifts}");
                }
            }
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "instances": rows, "pass": pass }))?);
            } else {
                println!("{}", if pass { "PASS" } else { "FAIL" });
            }
            Ok(pass)
        }
        Command::Iso { a, b } => {
            let ga = read_graph(&a)?;
            let mut gb = read_graph(&b)?;
            if let Some(seed) = cli.seed {
                let mut images: Vec<usize> = (0..gb.n()).collect();
                images.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
                gb = gb.relabeled(&images);
            }
            let ca = canonical_form_bounded(&ga, search_bound)?;
            let cb = canonical_form_bounded(&gb, search_bound)?;
            let iso = ca.certificate == cb.certificate;
            emit(
                cli.json,
                json!({ "isomorphic": iso, "certificates": [ca.certificate, cb.certificate] }),
                &format!("isomorphic: {iso}"),
            );
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

