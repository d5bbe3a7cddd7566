//! Command-line driver: mesh utilities, single solves and convergence studies.
//!
//! Every output file embeds the resolved configuration. Files are written to
//! a temporary sibling first and renamed into place.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::analysis::{
    build_system, evaluate_cell, run_study, solve_system, ConvergenceReport, StudyMesh, RATE_QUANTITIES,
};
use crate::benchmarks::{problem, sample_boundary_field, write_boundary_csv, CubeFace, TestProblem};
use crate::krylov::{write_vector, SolverParams, DEFAULT_DROP_TOL, DEFAULT_MAX_ITER, DEFAULT_RTOL};
use crate::mesh::{generate_structured_cube_mesh, quality_report, TetMesh};
use crate::{Error, Result, Vec3};

/// Environment variable capping worker threads (0 = all cores).
pub const THREADS_ENV: &str = "MINISTOKES_THREADS";

#[derive(Debug, Parser)]
#[command(name = "ministokes", version, about = "MINI element Stokes solver and convergence studies")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate, inspect or convert meshes.
    #[command(subcommand)]
    Mesh(MeshCommand),
    /// Solve one benchmark on one mesh.
    Solve(SolveArgs),
    /// Run a convergence study over several meshes.
    Study(StudyArgs),
    /// Sample a benchmark's boundary velocity on one cube face.
    Boundary(BoundaryArgs),
}

#[derive(Debug, Subcommand)]
pub enum MeshCommand {
    /// Structured Kuhn tetrahedralization of the unit cube.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Shape ratio and dihedral angle statistics.
    Quality {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between the text (`.txt`) and JSON (`.json`) mesh formats.
    Convert {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = DEFAULT_DROP_TOL)]
    pub drop_tol: f64,
    #[arg(long, default_value_t = DEFAULT_RTOL)]
    pub rtol: f64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    pub max_iter: usize,
}

impl SolverArgs {
    fn params(&self) -> Result<SolverParams, String> {
        if !(self.mu > 0.0) {
            return Err(format!("--mu must be positive, got {}", self.mu));
        }
        if !(self.drop_tol >= 0.0) {
            return Err(format!("--drop-tol must be non-negative, got {}", self.drop_tol));
        }
        if !(self.rtol > 0.0) {
            return Err(format!("--rtol must be positive, got {}", self.rtol));
        }
        if self.max_iter == 0 {
            return Err("--max-iter must be positive".into());
        }
        Ok(SolverParams {
            drop_tol: self.drop_tol,
            rtol: self.rtol,
            max_iter: self.max_iter,
        })
    }
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
    pub problem: u32,
    /// Structured mesh subdivisions.
    #[arg(long, conflicts_with = "mesh", required_unless_present = "mesh")]
    pub n: Option<usize>,
    /// Mesh file (`.txt` or `.json`).
    #[arg(long)]
    pub mesh: Option<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, default_value = ".")]
    pub out_dir: PathBuf,
    /// Also write the constrained matrix (`system.coo`) and right-hand side (`rhs.txt`).
    #[arg(long)]
    pub export_system: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct StudyArgs {
    #[arg(long, value_delimiter = ',', default_values_t = [1u32, 2, 3, 4, 5],
          value_parser = clap::value_parser!(u32).range(1..=5))]
    pub problems: Vec<u32>,
    /// Structured mesh subdivisions; used when no `--mesh` is given.
    #[arg(long, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Mesh files, coarsest first.
    #[arg(long, num_args = 1..)]
    pub mesh: Vec<PathBuf>,
    #[command(flatten)]
    pub solver: SolverArgs,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Output file; stdout when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Default structured levels of a bare `study`.
pub const DEFAULT_STUDY_LEVELS: [usize; 3] = [4, 8, 16];

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
    pub problem: u32,
    #[arg(long, value_enum)]
    pub face: CubeFace,
    #[arg(long, default_value_t = 11)]
    pub resolution: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Configuration echoed into every output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StudyConfig {
    pub command: String,
    pub problems: Vec<u32>,
    pub meshes: Vec<String>,
    pub mu: f64,
    pub solver: SolverParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
}

/// Outcome of a command: `Ok(false)` means the command ran but must exit nonzero.
pub fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Mesh(cmd) => run_mesh(cmd).map(|_| true),
        Command::Solve(args) => run_solve(args),
        Command::Study(args) => run_study_cmd(args),
        Command::Boundary(args) => run_boundary(args).map(|_| true),
    }
}

fn usage(msg: impl Into<String>) -> Error {
    Error::Io(std::io::Error::new(std::io::ErrorKind::InvalidInput, msg.into()))
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

#[derive(Serialize, Deserialize)]
struct MeshJson {
    vertices: Vec<[f64; 3]>,
    tets: Vec<[usize; 4]>,
}

/// Reads a mesh; `.json` files use the JSON layout, anything else the text format.
pub fn read_mesh(path: &Path) -> Result<TetMesh> {
    let reader = BufReader::new(File::open(path)?);
    if is_json(path) {
        let m: MeshJson = serde_json::from_reader(reader)?;
        Ok(TetMesh::new(m.vertices.into_iter().map(Vec3::from).collect(), m.tets)?)
    } else {
        Ok(TetMesh::load(reader)?)
    }
}

pub fn write_mesh(path: &Path, mesh: &TetMesh) -> Result<()> {
    let mut buf = Vec::new();
    if is_json(path) {
        let m = MeshJson {
            vertices: mesh.vertices().iter().map(|v| [v.x, v.y, v.z]).collect(),
            tets: mesh.tets().to_vec(),
        };
        serde_json::to_writer(&mut buf, &m)?;
        buf.push(b'\n');
    } else {
        mesh.save(&mut buf)?;
    }
    write_atomic(path, &buf)
}

/// Writes via a temporary sibling and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| usage(format!("not a file path: {}", path.display())))?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(".tmp");
    let tmp = path.with_file_name(tmp_name);
    {
        let mut f = BufWriter::new(File::create(&tmp)?);
        f.write_all(bytes)?;
        f.flush()?;
    }
    std::fs::rename(&tmp, path)?;
    Ok(())
}

fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match out {
        Some(p) => write_atomic(p, bytes),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}

fn run_mesh(cmd: MeshCommand) -> Result<()> {
    match cmd {
        MeshCommand::Gen { n, out } => write_mesh(&out, &generate_structured_cube_mesh(n)?),
        MeshCommand::Quality { input, out } => {
            let report = quality_report(&read_mesh(&input)?)?;
            let mut bytes = serde_json::to_vec_pretty(&report)?;
            bytes.push(b'\n');
            emit(out.as_deref(), &bytes)
        }
        MeshCommand::Convert { input, out } => write_mesh(&out, &read_mesh(&input)?),
    }
}

fn structured_label(n: usize) -> String {
    format!("structured-n{n}")
}

fn run_solve(args: SolveArgs) -> Result<bool> {
    let params = args.solver.params().map_err(usage)?;
    let test = problem(args.problem)?;
    let (label, mesh) = match (&args.mesh, args.n) {
        (Some(path), _) => (path.display().to_string(), read_mesh(path)?),
        (None, Some(n)) => (structured_label(n), generate_structured_cube_mesh(n)?),
        (None, None) => return Err(usage("one of --n or --mesh is required")),
    };
    let config = StudyConfig {
        command: "solve".into(),
        problems: vec![args.problem],
        meshes: vec![label.clone()],
        mu: args.solver.mu,
        solver: params,
        format: None,
    };
    let config_line = serde_json::to_string(&config)?;
    std::fs::create_dir_all(&args.out_dir)?;

    let system = build_system(&mesh, &test, args.solver.mu)?;
    if args.export_system {
        let mut coo = format!("# config: {config_line}\n").into_bytes();
        system.matrix.write_coo(&mut coo)?;
        write_atomic(&args.out_dir.join("system.coo"), &coo)?;
        let mut rhs = format!("# config: {config_line}\n").into_bytes();
        write_vector(&mut rhs, &system.rhs)?;
        write_atomic(&args.out_dir.join("rhs.txt"), &rhs)?;
    }
    let solved = solve_system(system, &params)?;
    let cell = evaluate_cell(&mesh, &label, &test, &solved)?;

    let sol = &solved.solution;
    let mut text = format!(
        "# config: {config_line}\n# layout: velocity 3x{}, bubbles 3x{}, pressure {}, multiplier 1\n",
        sol.velocity.len(),
        sol.bubbles.len(),
        sol.pressure.len()
    )
    .into_bytes();
    let dofs: Vec<f64> = sol
        .velocity
        .iter()
        .flatten()
        .chain(sol.bubbles.iter().flatten())
        .chain(&sol.pressure)
        .copied()
        .chain(std::iter::once(sol.multiplier))
        .collect();
    write_vector(&mut text, &dofs)?;
    write_atomic(&args.out_dir.join("solution.txt"), &text)?;

    let metrics = serde_json::json!({ "config": config, "result": cell });
    let mut bytes = serde_json::to_vec_pretty(&metrics)?;
    bytes.push(b'\n');
    write_atomic(&args.out_dir.join("metrics.json"), &bytes)?;

    if !cell.solver.converged {
        log::error!(
            "GMRES did not converge: relative residual {:e} after {} iterations",
            cell.solver.relative_residual,
            cell.solver.iterations
        );
    }
    Ok(cell.solver.converged)
}

fn run_study_cmd(args: StudyArgs) -> Result<bool> {
    let params = args.solver.params().map_err(usage)?;
    let mut problems: Vec<TestProblem> = Vec::new();
    for id in &args.problems {
        problems.push(problem(*id)?);
    }
    let mut meshes = Vec::new();
    let levels: &[usize] = if args.n.is_empty() && args.mesh.is_empty() {
        &DEFAULT_STUDY_LEVELS
    } else {
        &args.n
    };
    for &n in levels {
        meshes.push(StudyMesh {
            label: structured_label(n),
            mesh: generate_structured_cube_mesh(n)?,
        });
    }
    for path in &args.mesh {
        meshes.push(StudyMesh {
            label: path.display().to_string(),
            mesh: read_mesh(path)?,
        });
    }
    if meshes.len() < 2 {
        return Err(usage(format!("a study needs at least two meshes, got {}", meshes.len())));
    }
    let config = StudyConfig {
        command: "study".into(),
        problems: args.problems.clone(),
        meshes: meshes.iter().map(|m| m.label.clone()).collect(),
        mu: args.solver.mu,
        solver: params,
        format: Some(args.format),
    };
    let report = run_study(&problems, &meshes, args.solver.mu, &params)?;
    let bytes = match args.format {
        Format::Csv => {
            let mut buf = Vec::new();
            write_report_csv(&mut buf, &config, &report)?;
            buf
        }
        Format::Json => {
            let mut b = serde_json::to_vec_pretty(&serde_json::json!({ "config": config, "report": report }))?;
            b.push(b'\n');
            b
        }
    };
    emit(args.out.as_deref(), &bytes)?;
    for c in report.cells.iter().filter(|c| !c.solver.converged) {
        log::error!("problem {} on {} did not converge", c.problem, c.mesh);
    }
    Ok(report.all_converged())
}

/// Column names of the per-cell CSV rows.
pub const CELL_COLUMNS: [&str; 30] = [
    "problem",
    "mesh",
    "h",
    "num_vertices",
    "num_tets",
    "num_unknowns",
    "u_minus_uh_l2",
    "u_minus_uh_h1",
    "p_minus_ph_l2",
    "ihu_minus_uhl_l2",
    "ihu_minus_uhl_h1",
    "u_minus_uhl_l2",
    "u_minus_uhl_h1",
    "div_uh_l2",
    "div_uhl_l2",
    "h1_error_ratio",
    "l2_error_ratio",
    "divergence_ratio",
    "pressure_mean",
    "ph_l2",
    "jhp_minus_p_l2",
    "ph_minus_jhp_l2",
    "u_minus_ihu_h1",
    "split_residual",
    "quasi_optimal",
    "pressure_chain_holds",
    "iterations",
    "relative_residual",
    "converged",
    "preconditioned",
];

fn sci(v: f64) -> String {
    format!("{v:.16e}")
}

fn opt(v: Option<f64>) -> String {
    v.map(sci).unwrap_or_default()
}

/// Cell rows, then one block of rates per problem. Lines starting with `#`
/// are comments.
pub fn write_report_csv<W: Write>(mut w: W, config: &StudyConfig, report: &ConvergenceReport) -> Result<()> {
    writeln!(w, "# config: {}", serde_json::to_string(config)?)?;
    writeln!(w, "{}", CELL_COLUMNS.join(","))?;
    for c in &report.cells {
        let n = &c.norms;
        let r = &c.ratios;
        let d = &c.diagnostics;
        let fields: Vec<String> = vec![
            c.problem.to_string(),
            c.mesh.clone(),
            sci(c.h),
            c.num_vertices.to_string(),
            c.num_tets.to_string(),
            c.num_unknowns.to_string(),
            sci(n.u_minus_uh_l2),
            sci(n.u_minus_uh_h1),
            sci(n.p_minus_ph_l2),
            sci(n.ihu_minus_uhl_l2),
            sci(n.ihu_minus_uhl_h1),
            sci(n.u_minus_uhl_l2),
            sci(n.u_minus_uhl_h1),
            sci(n.div_uh_l2),
            sci(n.div_uhl_l2),
            sci(r.h1_error_ratio),
            sci(r.l2_error_ratio),
            sci(r.divergence_ratio),
            sci(d.pressure_mean),
            sci(d.ph_l2),
            sci(d.jhp_minus_p_l2),
            sci(d.ph_minus_jhp_l2),
            sci(d.u_minus_ihu_h1),
            sci(d.split_residual),
            d.quasi_optimal.to_string(),
            d.pressure_chain_holds.to_string(),
            c.solver.iterations.to_string(),
            sci(c.solver.relative_residual),
            c.solver.converged.to_string(),
            c.solver.preconditioned.to_string(),
        ];
        writeln!(w, "{}", fields.join(","))?;
    }
    for pr in &report.rates {
        writeln!(w)?;
        writeln!(
            w,
            "# rates problem {} meshes_used {} gap {}",
            pr.problem, pr.meshes_used, pr.has_gap
        )?;
        writeln!(w, "problem,quantity,rate_least_squares,rate_last_pair")?;
        for q in RATE_QUANTITIES {
            let e = pr.rates.iter().find(|e| e.quantity == q);
            writeln!(
                w,
                "{},{},{},{}",
                pr.problem,
                q,
                opt(e.and_then(|e| e.least_squares)),
                opt(e.and_then(|e| e.last_pair))
            )?;
        }
    }
    Ok(())
}

fn run_boundary(args: BoundaryArgs) -> Result<()> {
    let test = problem(args.problem)?;
    if args.resolution == 0 {
        return Err(usage("--resolution must be positive"));
    }
    let samples = sample_boundary_field(&test, args.face, args.resolution);
    let mut buf = Vec::new();
    write_boundary_csv(&mut buf, &samples)?;
    emit(args.out.as_deref(), &buf)
}
