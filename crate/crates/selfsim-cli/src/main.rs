use anyhow::Result;
use clap::{Args, Parser, Subcommand};
use direct_limit::CertBounds;
use fullgroup_lab::{factor, index, validate_and_canonicalize, BisectionTable};
use homology_engine::{depth_module, group_homology, homology_colimit, stabilized_homology, ResolutionComplex};
use ktheory_engine::{k0_colimit, pv_compute};
use selfsim_cli::config::RunConfig;
use selfsim_cli::report::{Report, Status};
use selfsim_cli::verify::verify_paper;
use selfsim_core::{check_pseudo_free, PseudoFreeOutcome, TreeWord};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "selfsim",
    version,
    about = "Exact computations for self-similar group actions: homology, K-theory and the topological full group"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Built-in group name or path to a definition file
    #[arg(long, global = true, default_value = "dihedral-z2-z2")]
    group: String,
    /// Depth bound for coefficient modules
    #[arg(long, global = true, default_value_t = 8)]
    depth: usize,
    /// Degree bound for homology
    #[arg(long, global = true, default_value_t = 6)]
    degree: usize,
    /// Word-length bound for the pseudo-freeness search
    #[arg(long, global = true, default_value_t = 16)]
    max_word_len: usize,
    /// Seed for the randomized suites
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Write the JSON report here
    #[arg(long, global = true)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a group word to a tree word
    Act {
        /// Group word over the generator names (e for the identity)
        word: String,
        /// Tree word of digits (- for the root)
        tree_word: String,
    },
    /// Search for pseudo-freeness violations and verify the closed forms
    PseudoFree,
    /// Group homology with cylinder coefficients and its depth colimit
    Homology,
    /// Stabilized homology with the shift action
    Stabilized,
    /// K-theory of the recursion tower and the crossed product
    Ktheory,
    /// Topological full group operations
    Fullgroup {
        #[command(subcommand)]
        op: FullgroupOp,
    },
    /// Run every claim and write the full report
    VerifyPaper,
}

#[derive(Subcommand)]
enum FullgroupOp {
    /// Index of a bisection table
    Index {
        #[arg(long)]
        table: String,
    },
    /// Factor an index-zero table into transpositions
    Factor {
        #[arg(long)]
        table: String,
    },
    /// Compose two tables (the second acts first)
    Compose {
        #[arg(long)]
        table: String,
        #[arg(long)]
        with: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        group_source: cli.common.group.clone(),
        depth_bound: cli.common.depth,
        degree_bound: cli.common.degree,
        max_word_len: cli.common.max_word_len,
        seed: cli.common.seed,
        out: cli.common.out.clone(),
    };
    if let Err(e) = cfg.validate() {
        eprintln!("error: {}", e);
        return ExitCode::from(2);
    }
    match run(&cfg, &cli.command) {
        Ok(report) => {
            if let Some(path) = &cfg.out {
                if let Err(e) = report.emit(&cfg, path) {
                    eprintln!("error: {}", e);
                    return ExitCode::from(2);
                }
                println!("report written to {}", path.display());
            }
            if report.has_failures() {
                ExitCode::FAILURE
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cfg: &RunConfig, command: &Command) -> Result<Report> {
    let mut report = Report::new();
    match command {
        Command::Act { word, tree_word } => {
            let group = cfg.load_group()?;
            let w = group.reduce(&group.parse_word(word)?)?;
            let t = TreeWord::parse(tree_word)
                .ok_or_else(|| anyhow::anyhow!("bad tree word `{}`", tree_word))?;
            let (img, rest) = group.act(&w, &t)?;
            println!(
                "{} . {} = {}   (restriction {})",
                group.word_string(&w),
                t,
                img,
                group.word_string(&rest)
            );
            report.set_section(
                "action",
                json!({
                    "word": group.word_string(&w),
                    "input": t.to_string(),
                    "image": img.to_string(),
                    "restriction": group.word_string(&rest),
                }),
            );
        }
        Command::PseudoFree => {
            let group = cfg.load_group()?;
            let outcome = check_pseudo_free(&group, cfg.max_word_len)?;
            match &outcome {
                PseudoFreeOutcome::Certificate {
                    triples,
                    closed_forms_checked,
                    ..
                } => {
                    println!(
                        "pseudo-free up to word length {}: {} triples verified, {} closed forms",
                        cfg.max_word_len,
                        triples.len(),
                        closed_forms_checked
                    );
                    report.claim(
                        "pseudo_free.certificate",
                        json!({"verified_triples": triples.len()}),
                        json!("pseudo-free"),
                        Status::Pass,
                        "exhaustive search",
                    );
                }
                PseudoFreeOutcome::Counterexample { word, letter } => {
                    println!(
                        "NOT pseudo-free: {} fixes letter {} with trivial restriction",
                        group.word_string(word),
                        letter
                    );
                    report.claim(
                        "pseudo_free.certificate",
                        json!({"counterexample": group.word_string(word)}),
                        json!("pseudo-free"),
                        Status::Fail,
                        "search hit a violation",
                    );
                }
            }
        }
        Command::Homology => {
            let group = cfg.load_group()?;
            let p = cfg.degree_bound;
            let per_depth: Vec<String> = (0..=cfg.depth_bound.min(6))
                .map(|k| {
                    let cx = ResolutionComplex::new(depth_module(&group, k)?)?;
                    Ok(group_homology(&cx, p)?.group.group_string())
                })
                .collect::<Result<_>>()?;
            println!("H_{} per depth: {}", p, per_depth.join(", "));
            let hc = homology_colimit(&group, p, cfg.depth_bound.max(2), CertBounds::default())?;
            println!("H_{} colimit: {}", p, hc.descriptor.model_string());
            report.set_section(
                "homology",
                json!({
                    "degree": p,
                    "group": hc.descriptor.model_string(),
                    "per_depth": per_depth,
                    "certified": true,
                }),
            );
        }
        Command::Stabilized => {
            let group = cfg.load_group()?;
            let p = cfg.degree_bound.min(2);
            let s = stabilized_homology(&group, p, cfg.depth_bound.min(4), CertBounds::default())?;
            println!(
                "stabilized H_{} = {}   (shift acts as {})",
                p,
                s.descriptor.model_string(),
                s.sigma.as_str()
            );
            report.set_section(
                "stabilized",
                json!({
                    "degree": p,
                    "group": s.descriptor.model_string(),
                    "sigma": s.sigma.as_str(),
                }),
            );
        }
        Command::Ktheory => {
            let group = cfg.load_group()?;
            let k0 = k0_colimit(&group, CertBounds::default())?;
            let pv = pv_compute(&k0, CertBounds::default())?;
            println!("connecting matrix:\n{}", k0.connecting);
            println!("K0 colimit of the tower: {}", k0.descriptor.model_string());
            println!("K0 = {}   K1 = {}", pv.k0.model_string(), pv.k1.model_string());
            let (d, z) = &pv.k1_generator_psi;
            println!("computed K1 generator: ({}, {})", d, z);
            let (pd, pz) = &pv.stated_generator_psi;
            println!(
                "stated K1 generator ({}, {}) {} the kernel per the generator formulas",
                pd,
                pz,
                if pv.stated_generator_in_kernel { "lies in" } else { "does NOT lie in" }
            );
            report.set_section(
                "ktheory",
                json!({
                    "K0": pv.k0.model_string(),
                    "K1": pv.k1.model_string(),
                    "tower": k0.descriptor.model_string(),
                }),
            );
        }
        Command::Fullgroup { op } => {
            let group = cfg.load_group()?;
            match op {
                FullgroupOp::Index { table } => {
                    let t = validate_and_canonicalize(&group, &BisectionTable::parse(&group, table)?)?;
                    let i = index(&group, &t)?;
                    println!("{}", i);
                    report.set_section("fullgroup", json!({"index": i.to_string()}));
                }
                FullgroupOp::Factor { table } => {
                    let t = validate_and_canonicalize(&group, &BisectionTable::parse(&group, table)?)?;
                    match factor(&group, &t) {
                        Ok(factors) => {
                            println!("{} transpositions:", factors.len());
                            let mut listed = Vec::new();
                            for f in &factors {
                                let line = format!(
                                    "alpha={} g={} beta={}",
                                    f.entry.alpha,
                                    group.word_string(&f.entry.g),
                                    f.entry.beta
                                );
                                println!("  {}", line);
                                listed.push(line);
                            }
                            report.set_section("fullgroup", json!({"factors": listed}));
                        }
                        Err(fullgroup_lab::FullGroupError::IndexNonzero) => {
                            println!("IndexNonzero: the table has index 1 and does not factor");
                            report.claim(
                                "fullgroup.factor",
                                json!("IndexNonzero"),
                                json!("factors exactly when the index vanishes"),
                                Status::Pass,
                                "obstruction reported",
                            );
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
                FullgroupOp::Compose { table, with } => {
                    let t1 = validate_and_canonicalize(&group, &BisectionTable::parse(&group, table)?)?;
                    let t2 = validate_and_canonicalize(&group, &BisectionTable::parse(&group, with)?)?;
                    let c = fullgroup_lab::compose(&group, &t1, &t2)?;
                    println!("{}", c.format(&group));
                    report.set_section("fullgroup", json!({"composite": c.format(&group)}));
                }
            }
        }
        Command::VerifyPaper => {
            report = verify_paper(cfg)?;
            println!("{}", report.summary());
        }
    }
    Ok(report)
}
