//! Batch verification harness: builds the models, realizes the gradings,
//! certifies the Weyl groups, and emits deterministic JSON and markdown
//! certificates. Nonzero exit on any failed check.

use clap::{Parser, Subcommand};
use e6cert::gradings::{build_gamma, export_json};
use e6cert::liealg::{classify, dump, order_of};
use e6cert::models::{build_all, ModelSet};
use e6cert::modular::modular_verify;
use e6cert::report::{markdown_summary, model_reports, VerificationReport, TOOL_VERSION};
use e6cert::weyl::obstructions::obstruction_checks;
use e6cert::weyl::verify::verify_weyl;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "e6cert",
    version,
    about = "exact certification of the fine gradings on e6 and their Weyl groups"
)]
struct Cli {
    /// arithmetic mode: exact | modular
    #[arg(long, global = true, default_value = "exact")]
    arith: String,
    /// prime for modular mode (1 mod 36)
    #[arg(long, global = true, default_value_t = 37)]
    prime: u64,
    /// worker threads (0 = all cores)
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// output path for reports
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the five models and report dimensions and Jacobi status
    Build,
    /// Run a verification target
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
    /// Write the structure-constant dump of a model
    Dump {
        #[arg(long)]
        model: String,
    },
    /// Classify a registered automorphism by (order, fixed dimension)
    Classify {
        #[arg(long)]
        model: String,
        #[arg(long)]
        aut: String,
    },
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Jacobi, dimension and registered-automorphism checks for one model
    Model {
        #[arg(long)]
        name: String,
    },
    /// Build one grading and check its type
    Grading {
        #[arg(long)]
        id: usize,
        #[arg(long)]
        emit_type: bool,
    },
    /// Full Weyl verification for one grading
    Weyl {
        #[arg(long)]
        id: usize,
        #[arg(long)]
        expect_order: Option<usize>,
    },
    /// Conjugacy-type obstruction suite for one grading
    Obstructions {
        #[arg(long)]
        id: usize,
    },
    /// Everything: the full acceptance run
    All,
}

fn model_handle<'a>(models: &'a ModelSet, name: &str) -> Option<&'a e6cert::models::ModelHandle> {
    match name {
        "tits-oct-mat3" => Some(&models.tits_oct.handle),
        "tits-binarion-albert" => Some(&models.tits_alb.handle),
        "elduque-s8-s2" => Some(&models.elduque.handle),
        "five-grading" => Some(&models.five.handle),
        "adams" => Some(&models.adams.handle),
        "a1a5" => Some(&models.a1a5.handle),
        _ => None,
    }
}

fn main() {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .expect("thread pool");
    }
    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    let t0 = Instant::now();
    eprintln!("building models...");
    let models = match build_all() {
        Ok(m) => m,
        Err(e) => {
            eprintln!("model construction failed: {e}");
            return 2;
        }
    };
    eprintln!("models built in {:.1}s", t0.elapsed().as_secs_f64());
    match cli.cmd {
        Cmd::Build => {
            for r in model_reports(&models, false) {
                println!(
                    "{}: dim {} jacobi {}{}",
                    r.name,
                    r.dim,
                    if r.jacobi_ok { "ok" } else { "FAIL" },
                    r.scalars.map(|s| format!(" [{}]", s)).unwrap_or_default()
                );
            }
            0
        }
        Cmd::Dump { model } => {
            let Some(h) = model_handle(&models, &model) else {
                eprintln!("unknown model `{model}`");
                return 2;
            };
            let text = dump(&h.algebra);
            match cli.out {
                Some(path) => {
                    std::fs::write(&path, text).expect("write dump");
                    println!("wrote {}", path.display());
                }
                None => print!("{}", text),
            }
            0
        }
        Cmd::Classify { model, aut } => {
            let Some(h) = model_handle(&models, &model) else {
                eprintln!("unknown model `{model}`");
                return 2;
            };
            match h.named_aut(&aut) {
                Ok(f) => match classify(&h.algebra, f) {
                    Ok(label) => {
                        println!(
                            "{}/{}: order {} fix {} class {}",
                            model,
                            aut,
                            order_of(f, 72).unwrap_or(0),
                            e6cert::liealg::fixed_subspace(f).dim(),
                            label
                        );
                        0
                    }
                    Err(e) => {
                        eprintln!("unclassifiable: {e}");
                        1
                    }
                },
                Err(e) => {
                    eprintln!("{e}");
                    2
                }
            }
        }
        Cmd::Verify { target } => match target {
            VerifyCmd::Model { name } => {
                let Some(h) = model_handle(&models, &name) else {
                    eprintln!("unknown model `{name}`");
                    return 2;
                };
                let mut alg = h.algebra.clone();
                let jac = alg.check_jacobi();
                let fails = h.verify_auts();
                println!(
                    "{}: dim {} jacobi {} automorphisms {}",
                    name,
                    h.algebra.dim,
                    if jac.is_ok() { "ok" } else { "FAIL" },
                    if fails.is_empty() {
                        format!("ok ({})", h.auts.len())
                    } else {
                        format!("FAIL {:?}", fails)
                    }
                );
                if jac.is_ok() && fails.is_empty() && h.algebra.dim == 78 {
                    0
                } else {
                    1
                }
            }
            VerifyCmd::Grading { id, emit_type } => match build_gamma(id, &models) {
                Ok(g) => {
                    let ty = g.primary.decomposition.grading_type();
                    if emit_type {
                        println!(
                            "({})",
                            ty.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                        );
                    } else {
                        println!(
                            "gamma {}: type {:?} components {} model {}",
                            id,
                            ty,
                            g.primary.decomposition.comps.len(),
                            g.primary.model
                        );
                    }
                    if let Some(path) = cli.out {
                        let json = export_json(&g.primary.decomposition);
                        std::fs::write(&path, serde_json::to_string_pretty(&json).unwrap())
                            .expect("write grading export");
                    }
                    0
                }
                Err(e) => {
                    eprintln!("grading failed: {e}");
                    1
                }
            },
            VerifyCmd::Weyl { id, expect_order } => match verify_weyl(id, &models) {
                Ok(r) => {
                    println!(
                        "gamma {}: closure {} claimed {} pass {}",
                        id, r.closure_order, r.claimed_order, r.pass
                    );
                    let ok =
                        r.pass && expect_order.map(|x| x == r.closure_order).unwrap_or(true);
                    if let Some(path) = cli.out {
                        std::fs::write(&path, serde_json::to_string_pretty(&r).unwrap())
                            .expect("write weyl report");
                    }
                    if ok {
                        0
                    } else {
                        1
                    }
                }
                Err(e) => {
                    eprintln!("weyl verification failed: {e}");
                    1
                }
            },
            VerifyCmd::Obstructions { id } => {
                let lines = obstruction_checks(id, &models);
                let mut ok = true;
                for l in lines.iter() {
                    if !l.pass {
                        ok = false;
                        println!("FAIL {}: want {} got {}", l.name, l.expected, l.got);
                    }
                }
                println!(
                    "gamma {}: {} obstruction checks, {}",
                    id,
                    lines.len(),
                    if ok { "all pass" } else { "FAILURES" }
                );
                if ok {
                    0
                } else {
                    1
                }
            }
            VerifyCmd::All => {
                let mut timings: BTreeMap<String, u128> = BTreeMap::new();
                timings.insert("build-models".into(), t0.elapsed().as_millis());
                let modular_mode = cli.arith == "modular";
                let tm = Instant::now();
                let model_reps = model_reports(&models, true);
                timings.insert("models".into(), tm.elapsed().as_millis());
                let mut all_ok = model_reps
                    .iter()
                    .all(|r| r.jacobi_ok && r.automorphism_failures.is_empty() && r.dim == 78);
                let mut gradings = BTreeMap::new();
                let mut weyl = Vec::new();
                for id in 1..=6 {
                    let tw = Instant::now();
                    match verify_weyl(id, &models) {
                        Ok(r) => {
                            println!(
                                "gamma {}: type {:?} closure {} claimed {} -> {}",
                                id,
                                r.grading_type,
                                r.closure_order,
                                r.claimed_order,
                                if r.pass { "pass" } else { "FAIL" }
                            );
                            all_ok &= r.pass;
                            if let Ok(g) = build_gamma(id, &models) {
                                gradings.insert(
                                    format!("gamma{}", id),
                                    export_json(&g.primary.decomposition),
                                );
                            }
                            weyl.push(r);
                        }
                        Err(e) => {
                            println!("gamma {id}: ERROR {e}");
                            all_ok = false;
                        }
                    }
                    timings.insert(format!("weyl-gamma{}", id), tw.elapsed().as_millis());
                }
                let mut modular = Vec::new();
                if modular_mode {
                    let tp = Instant::now();
                    match modular_verify(&models, cli.prime) {
                        Ok(r) => {
                            println!(
                                "modular p={}: {} checks, {}",
                                cli.prime,
                                r.checks.len(),
                                if r.pass { "pass" } else { "FAIL" }
                            );
                            all_ok &= r.pass;
                            modular.push(r);
                        }
                        Err(e) => {
                            println!("modular p={}: ERROR {e}", cli.prime);
                            all_ok = false;
                        }
                    }
                    timings.insert("modular".into(), tp.elapsed().as_millis());
                }
                let report = VerificationReport {
                    tool_version: TOOL_VERSION.to_string(),
                    arithmetic_mode: if modular_mode {
                        format!("modular({})", cli.prime)
                    } else {
                        "exact".to_string()
                    },
                    certified: all_ok && !modular_mode,
                    models: model_reps,
                    gradings,
                    weyl,
                    modular,
                    timings_ms: timings,
                };
                println!("{}", markdown_summary(&report.weyl));
                if let Some(path) = cli.out {
                    std::fs::create_dir_all(&path).ok();
                    std::fs::write(
                        path.join("report.json"),
                        serde_json::to_string_pretty(&report).unwrap(),
                    )
                    .expect("write report");
                    std::fs::write(path.join("summary.md"), markdown_summary(&report.weyl))
                        .expect("write summary");
                    println!("wrote {}", path.display());
                }
                if all_ok {
                    0
                } else {
                    1
                }
            }
        },
    }
}
