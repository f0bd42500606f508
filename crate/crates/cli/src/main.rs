mod input;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use formation_core::gen::{generate, GenKind};
use formation_core::graph::{formation_to_dot, meta_to_dot, Edge, Formation, UndirectedView};
use formation_core::merge::{feasibility, plan_collection, verify_plan};
use formation_core::meta::{meta_rigid_2d, meta_rigid_3d, DEFAULT_META_SUBSET_CAP};
use formation_core::persistence::{
    is_persistent_with_cap, local_dof_compliance, merged_persistence, DEFAULT_TERMINAL_CAP,
};
use formation_core::rigidity::{check_rigidity, OracleConfig};
use formation_core::Dim;

use input::Input;
use report::{Outcome, Report};

#[derive(Parser)]
#[command(name = "formation", version, about = "Rigidity, persistence and merge planning for directed formations")]
struct Cli {
    /// Ambient dimension; required by every analysis command.
    #[arg(long, global = true, value_parser = ["2", "3"])]
    dim: Option<String>,
    /// Seed of the randomized rank oracle and of the generators.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Rank oracle trials.
    #[arg(long, global = true, default_value_t = 3)]
    trials: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Enumeration cap: terminal subgraphs for persistence, vertices for
    /// subset searches elsewhere.
    #[arg(long, global = true)]
    cap: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Generic rigidity of a formation (or of a flattened meta-formation).
    CheckRigidity { file: PathBuf },
    /// Persistence and structural persistence of a formation.
    CheckPersistence { file: PathBuf },
    /// Rigidity and persistence of a meta-formation.
    CheckMeta { file: PathBuf },
    /// Plan inter-edges merging the given formations.
    PlanMerge {
        /// Formation, formation list or meta-formation files.
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Check a merged meta-formation (or a plan-merge report).
    VerifyPlan { file: PathBuf },
    /// Generate a test instance.
    Gen {
        #[arg(value_enum)]
        kind: Kind,
        #[arg(short, long, default_value_t = 6)]
        n: usize,
        /// Smallest vertex id, for building disjoint members.
        #[arg(long, default_value_t = 1)]
        first_id: u32,
    },
    /// Re-emit a formation or meta-formation as JSON or DOT.
    Export { file: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "min-rigid-2d")]
    MinRigid2d,
    #[value(name = "min-persistent-2d")]
    MinPersistent2d,
    #[value(name = "min-persistent-3d")]
    MinPersistent3d,
    Tetra,
    Banana,
}

impl From<Kind> for GenKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::MinRigid2d => GenKind::MinRigid2d,
            Kind::MinPersistent2d => GenKind::MinPersistent2d,
            Kind::MinPersistent3d => GenKind::MinPersistent3d,
            Kind::Tetra => GenKind::Tetra,
            Kind::Banana => GenKind::Banana,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.holds {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dim(cli: &Cli) -> Result<Dim> {
    let d = cli.dim.as_deref().ok_or_else(|| anyhow!("--dim is required for this command"))?;
    Dim::try_from(d.parse::<u8>()?).map_err(|e| anyhow!(e))
}

fn shift(f: Formation, by: u32) -> Result<Formation> {
    let vertices = f.vertices().iter().map(|&v| v + by).collect();
    let edges = f.edges().iter().map(|e| Edge::new(e.tail + by, e.head + by)).collect();
    Ok(Formation::new(vertices, edges)?)
}

fn run(cli: &Cli) -> Result<Outcome> {
    let cfg = OracleConfig { seed: cli.seed, trials: cli.trials };
    let mut r = Report::new(cli, cfg);
    match &cli.command {
        Command::CheckRigidity { file } => {
            let d = dim(cli)?;
            let f = Input::read(file)?.formation()?;
            let v = check_rigidity(&UndirectedView::of(&f), d, &cfg);
            r.dim(d).holds(v.rigid).criterion(&v.criterion).dot(formation_to_dot(&f));
            r.line("rigid", v.rigid).line("minimally rigid", v.minimally_rigid);
            r.witness(&v.witness);
            r.finish("check-rigidity", &v)
        }
        Command::CheckPersistence { file } => {
            let d = dim(cli)?;
            let f = Input::read(file)?.formation()?;
            let v = is_persistent_with_cap(&f, d, &cfg, cli.cap.unwrap_or(DEFAULT_TERMINAL_CAP))?;
            r.dim(d).holds(v.persistent).criterion(&v.criterion).dot(formation_to_dot(&f));
            r.line("persistent", v.persistent)
                .line("structurally persistent", v.structurally_persistent)
                .line("minimally persistent", v.minimally_persistent)
                .line("total dof", v.ledger.total_dof);
            r.witness(&v.witness);
            r.finish("check-persistence", &v)
        }
        Command::CheckMeta { file } => {
            let d = dim(cli)?;
            let meta = Input::read(file)?.meta()?;
            let rigidity = match d {
                Dim::Two => meta_rigid_2d(&meta, &cfg)?,
                Dim::Three => meta_rigid_3d(&meta, &cfg, cli.cap.unwrap_or(DEFAULT_META_SUBSET_CAP))?,
            };
            let persistence = if local_dof_compliance(&meta, d).compliant || meta.vertex_count() <= 12 {
                merged_persistence(&meta, d, &cfg).ok()
            } else {
                None
            };
            r.dim(d).holds(rigidity.rigid).criterion(&rigidity.criterion).dot(meta_to_dot(&meta));
            r.line("rigid", rigidity.rigid)
                .line("edge optimal", rigidity.edge_optimal)
                .line("inter-edges", format!("{} (required {})", rigidity.inter_edges, rigidity.required_inter_edges));
            if let Some(p) = &persistence {
                r.line("persistent", p.persistent).line("structurally persistent", p.structurally_persistent);
            }
            r.witness(&rigidity.witness);
            r.finish("check-meta", &serde_json::json!({ "rigidity": rigidity, "persistence": persistence }))
        }
        Command::PlanMerge { files } => {
            let d = dim(cli)?;
            let mut collection = Vec::new();
            for file in files {
                collection.extend(Input::read(file)?.collection()?);
            }
            let feas = feasibility(&collection, d, &cfg)?;
            r.dim(d).holds(feas.feasible).line("feasible", feas.feasible).line("reason", feas.reason.code());
            if !feas.feasible {
                r.criterion("necessary merge conditions");
                return r.finish("plan-merge", &serde_json::json!({ "feasibility": feas }));
            }
            let plan = plan_collection(&collection, d, &cfg)?;
            let merged = plan.apply(&collection)?;
            r.criterion("pairwise merge constructions").dot(meta_to_dot(&merged));
            r.line("inter-edges", plan.edges.len());
            for e in &plan.edges {
                let rule = serde_json::to_value(e.rule)?;
                r.line(
                    "edge",
                    format!("{} -> {} ({}, step {})", e.edge.tail, e.edge.head, rule.as_str().unwrap_or(""), e.step),
                );
            }
            r.finish("plan-merge", &serde_json::json!({ "feasibility": feas, "plan": plan, "merged": merged }))
        }
        Command::VerifyPlan { file } => {
            let d = dim(cli)?;
            let meta = Input::read(file)?.meta()?;
            let rep = verify_plan(meta.meta_vertices(), meta.inter_edges(), d, &cfg)?;
            r.dim(d).holds(rep.passed()).criterion(&rep.criterion).dot(meta_to_dot(&meta));
            r.line("persistent", rep.persistent)
                .line("structurally persistent", rep.structurally_persistent)
                .line("edge optimal", rep.edge_optimal_persistent)
                .line("missing dof conserved", rep.missing_dof_conserved)
                .line("tails have local dof", rep.tails_have_local_dof);
            r.finish("verify-plan", &rep)
        }
        Command::Gen { kind, n, first_id } => {
            let f = shift(
                generate((*kind).into(), *n, cli.seed, &cfg)?,
                first_id.checked_sub(1).context("--first-id must be positive")?,
            )?;
            r.holds(true).dot(formation_to_dot(&f));
            r.line("vertices", f.vertex_count()).line("edges", f.edge_count());
            let mut json = serde_json::to_value(&f)?;
            json["kind"] = serde_json::to_value(GenKind::from(*kind))?;
            json["seed"] = cli.seed.into();
            Ok(r.raw_or_text(json))
        }
        Command::Export { file } => {
            let input = Input::read(file)?;
            let (json, dot) = match input.as_meta()? {
                Some(m) => (serde_json::to_value(&m)?, meta_to_dot(&m)),
                None => {
                    let f = input.formation().context("not a formation or meta-formation")?;
                    (serde_json::to_value(&f)?, formation_to_dot(&f))
                }
            };
            r.holds(true).dot(dot);
            Ok(r.raw_or_text(json))
        }
    }
}
