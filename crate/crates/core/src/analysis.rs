//! Error norms, nodal interpolants, the linear/bubble velocity split and the
//! convergence-study harness.
//!
//! All integrals are element-wise degree-10 quadrature. H1 errors are full
//! norms: `sqrt(||e||_L2^2 + ||grad e||_L2^2)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::assembly::{apply_dirichlet, assemble, AssemblyError, DofMap, SaddleSystem};
use crate::benchmarks::TestProblem;
use crate::element::{bubble_value, ElementError, LocalBasis};
use crate::krylov::{self, KrylovError, SolveStats, SolverParams};
use crate::mesh::{mesh_spacing, MeshError, TetMesh};
use crate::quadrature::{rule_for_degree, MAX_DEGREE};
use crate::Vec3;

#[derive(Debug, thiserror::Error)]
pub enum AnalysisError {
    #[error("field has no gradient")]
    GradientUnavailable,
    #[error("fields have {0} and {1} components")]
    ComponentMismatch(usize, usize),
    #[error("divergence needs a 3-component field, got {0}")]
    NotAVectorField(usize),
    #[error("need at least two points for a rate fit, got {0}")]
    TooFewPoints(usize),
    #[error("rate fit needs positive h and errors")]
    NonPositiveInput,
    #[error("h and error lists differ in length ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("field sized for {expected} entities, mesh has {found}")]
    MeshMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error(transparent)]
    Krylov(#[from] KrylovError),
}

/// A quadrature node inside one tet.
pub struct EvalPoint<'a> {
    pub tet: usize,
    pub vertices: [usize; 4],
    pub bary: [f64; 4],
    pub x: Vec3,
    pub basis: &'a LocalBasis,
}

/// Scalar or vector field evaluable at quadrature nodes.
pub trait Field: Sync {
    fn components(&self) -> usize;

    fn value(&self, at: &EvalPoint, out: &mut [f64]);

    /// Row `c` of `out` receives the gradient of component `c`.
    fn gradient(&self, _at: &EvalPoint, _out: &mut [Vec3]) -> Result<(), AnalysisError> {
        Err(AnalysisError::GradientUnavailable)
    }

    /// Entity counts the field was built for, checked against the mesh.
    fn expected_sizes(&self) -> Option<(usize, usize)> {
        None
    }
}

/// Continuous piecewise-linear field from vertex values (`components` per vertex).
#[derive(Debug, Clone, PartialEq)]
pub struct P1Field {
    pub components: usize,
    pub values: Vec<f64>,
}

impl P1Field {
    pub fn vertex_value(&self, v: usize) -> &[f64] {
        &self.values[v * self.components..(v + 1) * self.components]
    }

    fn num_vertices(&self) -> usize {
        self.values.len() / self.components
    }
}

impl Field for P1Field {
    fn components(&self) -> usize {
        self.components
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        for (c, o) in out.iter_mut().enumerate() {
            *o = (0..4)
                .map(|i| at.bary[i] * self.values[at.vertices[i] * self.components + c])
                .sum();
        }
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        for (c, o) in out.iter_mut().enumerate() {
            *o = (0..4).fold(Vec3::zeros(), |acc, i| {
                acc + at.basis.grads[i] * self.values[at.vertices[i] * self.components + c]
            });
        }
        Ok(())
    }

    fn expected_sizes(&self) -> Option<(usize, usize)> {
        Some((self.num_vertices(), usize::MAX))
    }
}

/// Element-wise bubble field `sum_T e_T b_T`.
#[derive(Debug, Clone, PartialEq)]
pub struct BubbleField {
    pub coefficients: Vec<[f64; 3]>,
}

impl Field for BubbleField {
    fn components(&self) -> usize {
        3
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        let b = bubble_value(&at.bary);
        for (o, e) in out.iter_mut().zip(&self.coefficients[at.tet]) {
            *o = e * b;
        }
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        let g = at.basis.bubble_gradient(&at.bary);
        for (o, e) in out.iter_mut().zip(&self.coefficients[at.tet]) {
            *o = g * *e;
        }
        Ok(())
    }

    fn expected_sizes(&self) -> Option<(usize, usize)> {
        Some((usize::MAX, self.coefficients.len()))
    }
}

/// Pointwise sum of two fields with equal component counts.
pub struct SumField<'a> {
    pub a: &'a dyn Field,
    pub b: &'a dyn Field,
}

impl Field for SumField<'_> {
    fn components(&self) -> usize {
        self.a.components()
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        let mut tmp = [0.0; 3];
        let n = out.len();
        self.a.value(at, out);
        self.b.value(at, &mut tmp[..n]);
        for (o, t) in out.iter_mut().zip(&tmp) {
            *o += t;
        }
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        let mut tmp = [Vec3::zeros(); 3];
        let n = out.len();
        self.a.gradient(at, out)?;
        self.b.gradient(at, &mut tmp[..n])?;
        for (o, t) in out.iter_mut().zip(&tmp) {
            *o += t;
        }
        Ok(())
    }
}

/// Identically zero field.
pub struct ZeroField(pub usize);

impl Field for ZeroField {
    fn components(&self) -> usize {
        self.0
    }

    fn value(&self, _at: &EvalPoint, out: &mut [f64]) {
        out.fill(0.0);
    }

    fn gradient(&self, _at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        out.fill(Vec3::zeros());
        Ok(())
    }
}

/// Closed-form field, with an optional closed-form gradient.
pub struct AnalyticField<V, G = fn(Vec3, &mut [Vec3])> {
    components: usize,
    value: V,
    gradient: Option<G>,
}

impl<V> AnalyticField<V>
where
    V: Fn(Vec3, &mut [f64]) + Sync,
{
    pub fn new(components: usize, value: V) -> Self {
        Self {
            components,
            value,
            gradient: None,
        }
    }
}

impl<V, G> AnalyticField<V, G>
where
    V: Fn(Vec3, &mut [f64]) + Sync,
    G: Fn(Vec3, &mut [Vec3]) + Sync,
{
    pub fn with_gradient(components: usize, value: V, gradient: G) -> Self {
        Self {
            components,
            value,
            gradient: Some(gradient),
        }
    }
}

impl<V, G> Field for AnalyticField<V, G>
where
    V: Fn(Vec3, &mut [f64]) + Sync,
    G: Fn(Vec3, &mut [Vec3]) + Sync,
{
    fn components(&self) -> usize {
        self.components
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        (self.value)(at.x, out)
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        match &self.gradient {
            Some(g) => {
                g(at.x, out);
                Ok(())
            }
            None => Err(AnalysisError::GradientUnavailable),
        }
    }
}

/// Exact velocity of a benchmark, with its closed-form gradient.
pub struct ExactVelocity(pub TestProblem);

impl Field for ExactVelocity {
    fn components(&self) -> usize {
        3
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        out.copy_from_slice(&self.0.exact_velocity(at.x));
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        let g = self.0.exact_velocity_gradient(at.x);
        for (o, row) in out.iter_mut().zip(g) {
            *o = Vec3::from(row);
        }
        Ok(())
    }
}

/// Exact pressure of a benchmark (no gradient needed by any norm used).
pub struct ExactPressure(pub TestProblem);

impl Field for ExactPressure {
    fn components(&self) -> usize {
        1
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        out[0] = self.0.exact_pressure(at.x);
    }
}

/// Discrete solution split into its parts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StokesSolution {
    /// Linear velocity coefficients per vertex (`u_hl`).
    pub velocity: Vec<[f64; 3]>,
    /// Bubble coefficients per tet (`u_hb`).
    pub bubbles: Vec<[f64; 3]>,
    pub pressure: Vec<f64>,
    pub multiplier: f64,
}

impl StokesSolution {
    pub fn from_dofs(dofs: &DofMap, x: &[f64]) -> Self {
        Self {
            velocity: (0..dofs.num_vertices)
                .map(|v| std::array::from_fn(|c| x[dofs.velocity(v, c)]))
                .collect(),
            bubbles: (0..dofs.num_tets)
                .map(|t| std::array::from_fn(|c| x[dofs.bubble(t, c)]))
                .collect(),
            pressure: (0..dofs.num_vertices).map(|v| x[dofs.pressure(v)]).collect(),
            multiplier: x[dofs.multiplier()],
        }
    }

    pub fn pressure_field(&self) -> P1Field {
        P1Field {
            components: 1,
            values: self.pressure.clone(),
        }
    }

    /// `u_h` evaluated directly from the five local shape functions.
    pub fn velocity_field(&self) -> MiniVelocity<'_> {
        MiniVelocity { solution: self }
    }
}

/// The full MINI velocity `u_h` of a solution.
pub struct MiniVelocity<'a> {
    solution: &'a StokesSolution,
}

impl Field for MiniVelocity<'_> {
    fn components(&self) -> usize {
        3
    }

    fn value(&self, at: &EvalPoint, out: &mut [f64]) {
        let psi = [at.bary[0], at.bary[1], at.bary[2], at.bary[3], bubble_value(&at.bary)];
        for (c, o) in out.iter_mut().enumerate() {
            let mut s = psi[4] * self.solution.bubbles[at.tet][c];
            for i in 0..4 {
                s += psi[i] * self.solution.velocity[at.vertices[i]][c];
            }
            *o = s;
        }
    }

    fn gradient(&self, at: &EvalPoint, out: &mut [Vec3]) -> Result<(), AnalysisError> {
        let g = at.basis.shape_gradients(&at.bary);
        for (c, o) in out.iter_mut().enumerate() {
            let mut s = g[4] * self.solution.bubbles[at.tet][c];
            for i in 0..4 {
                s += g[i] * self.solution.velocity[at.vertices[i]][c];
            }
            *o = s;
        }
        Ok(())
    }

    fn expected_sizes(&self) -> Option<(usize, usize)> {
        Some((self.solution.velocity.len(), self.solution.bubbles.len()))
    }
}

/// `u_h = u_hl + u_hb`: the piecewise-linear part and the bubble part.
pub fn split_velocity(sol: &StokesSolution) -> (P1Field, BubbleField) {
    (
        P1Field {
            components: 3,
            values: sol.velocity.iter().flatten().copied().collect(),
        },
        BubbleField {
            coefficients: sol.bubbles.clone(),
        },
    )
}

/// Piecewise-linear interpolant matching `f` at every vertex.
pub fn nodal_interpolant<F>(mesh: &TetMesh, components: usize, f: F) -> P1Field
where
    F: Fn(Vec3, &mut [f64]),
{
    let mut values = vec![0.0; mesh.num_vertices() * components];
    for (v, chunk) in values.chunks_mut(components).enumerate() {
        f(mesh.vertices()[v], chunk);
    }
    P1Field { components, values }
}

pub fn interpolate_velocity(mesh: &TetMesh, problem: &TestProblem) -> P1Field {
    nodal_interpolant(mesh, 3, |x, out| out.copy_from_slice(&problem.exact_velocity(x)))
}

pub fn interpolate_pressure(mesh: &TetMesh, problem: &TestProblem) -> P1Field {
    nodal_interpolant(mesh, 1, |x, out| out[0] = problem.exact_pressure(x))
}

fn check_sizes(field: &dyn Field, mesh: &TetMesh) -> Result<(), AnalysisError> {
    if let Some((nv, nt)) = field.expected_sizes() {
        if nv != usize::MAX && nv != mesh.num_vertices() {
            return Err(AnalysisError::MeshMismatch {
                expected: nv,
                found: mesh.num_vertices(),
            });
        }
        if nt != usize::MAX && nt != mesh.num_tets() {
            return Err(AnalysisError::MeshMismatch {
                expected: nt,
                found: mesh.num_tets(),
            });
        }
    }
    Ok(())
}

/// Sum over tets of degree-10 quadrature of `integrand`. Per-tet partial sums
/// are reduced in tet order.
fn integrate<F>(mesh: &TetMesh, integrand: F) -> Result<f64, AnalysisError>
where
    F: Fn(&EvalPoint) -> Result<f64, AnalysisError> + Sync,
{
    let rule = rule_for_degree(MAX_DEGREE);
    let partial: Vec<f64> = (0..mesh.num_tets())
        .into_par_iter()
        .map(|t| {
            let basis = LocalBasis::new(mesh.tet_points(t))?;
            let mut sum = 0.0;
            for (w, bary) in basis.quadrature(rule) {
                let at = EvalPoint {
                    tet: t,
                    vertices: mesh.tets()[t],
                    bary,
                    x: basis.point_at(&bary),
                    basis: &basis,
                };
                sum += w * integrand(&at)?;
            }
            Ok(sum)
        })
        .collect::<Result<_, AnalysisError>>()?;
    Ok(partial.iter().sum())
}

fn pair_check(a: &dyn Field, b: &dyn Field, mesh: &TetMesh) -> Result<usize, AnalysisError> {
    if a.components() != b.components() {
        return Err(AnalysisError::ComponentMismatch(a.components(), b.components()));
    }
    check_sizes(a, mesh)?;
    check_sizes(b, mesh)?;
    Ok(a.components())
}

fn value_diff_sq(a: &dyn Field, b: &dyn Field, at: &EvalPoint, n: usize) -> f64 {
    let (mut va, mut vb) = ([0.0; 3], [0.0; 3]);
    a.value(at, &mut va[..n]);
    b.value(at, &mut vb[..n]);
    (0..n).map(|c| (va[c] - vb[c]).powi(2)).sum()
}

fn grad_diff_sq(a: &dyn Field, b: &dyn Field, at: &EvalPoint, n: usize) -> Result<f64, AnalysisError> {
    let (mut ga, mut gb) = ([Vec3::zeros(); 3], [Vec3::zeros(); 3]);
    a.gradient(at, &mut ga[..n])?;
    b.gradient(at, &mut gb[..n])?;
    Ok((0..n).map(|c| (ga[c] - gb[c]).norm_squared()).sum())
}

/// `||a - b||_L2`, root-sum-of-squares over components.
pub fn l2_norm_error(a: &dyn Field, b: &dyn Field, mesh: &TetMesh) -> Result<f64, AnalysisError> {
    let n = pair_check(a, b, mesh)?;
    Ok(integrate(mesh, |at| Ok(value_diff_sq(a, b, at, n)))?.sqrt())
}

/// Full `H1` norm of `a - b`.
pub fn h1_norm_error(a: &dyn Field, b: &dyn Field, mesh: &TetMesh) -> Result<f64, AnalysisError> {
    let n = pair_check(a, b, mesh)?;
    Ok(integrate(mesh, |at| Ok(value_diff_sq(a, b, at, n) + grad_diff_sq(a, b, at, n)?))?.sqrt())
}

/// `H1` seminorm of `a - b`.
pub fn h1_seminorm_error(a: &dyn Field, b: &dyn Field, mesh: &TetMesh) -> Result<f64, AnalysisError> {
    let n = pair_check(a, b, mesh)?;
    Ok(integrate(mesh, |at| grad_diff_sq(a, b, at, n))?.sqrt())
}

pub fn l2_norm(a: &dyn Field, mesh: &TetMesh) -> Result<f64, AnalysisError> {
    l2_norm_error(a, &ZeroField(a.components()), mesh)
}

/// `||div u||_L2` of a 3-component field.
pub fn divergence_l2(field: &dyn Field, mesh: &TetMesh) -> Result<f64, AnalysisError> {
    if field.components() != 3 {
        return Err(AnalysisError::NotAVectorField(field.components()));
    }
    check_sizes(field, mesh)?;
    Ok(integrate(mesh, |at| {
        let mut g = [Vec3::zeros(); 3];
        field.gradient(at, &mut g)?;
        Ok((g[0].x + g[1].y + g[2].z).powi(2))
    })?
    .sqrt())
}

fn validate_rate_input(h: &[f64], e: &[f64]) -> Result<(), AnalysisError> {
    if h.len() != e.len() {
        return Err(AnalysisError::LengthMismatch(h.len(), e.len()));
    }
    if h.len() < 2 {
        return Err(AnalysisError::TooFewPoints(h.len()));
    }
    if h.iter().chain(e).any(|&v| !(v > 0.0) || !v.is_finite()) {
        return Err(AnalysisError::NonPositiveInput);
    }
    Ok(())
}

/// Least-squares slope of `log e` against `log h`.
pub fn convergence_rate(h: &[f64], e: &[f64]) -> Result<f64, AnalysisError> {
    validate_rate_input(h, e)?;
    let n = h.len() as f64;
    let lx: Vec<f64> = h.iter().map(|v| v.ln()).collect();
    let ly: Vec<f64> = e.iter().map(|v| v.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx == 0.0 {
        return Err(AnalysisError::TooFewPoints(1));
    }
    Ok(sxy / sxx)
}

/// Slope between the two finest (last) points.
pub fn last_pair_rate(h: &[f64], e: &[f64]) -> Result<f64, AnalysisError> {
    validate_rate_input(h, e)?;
    let k = h.len();
    convergence_rate(&h[k - 2..], &e[k - 2..])
}

/// The seven rate-fitted error quantities, in report order.
pub const RATE_QUANTITIES: [&str; 7] = [
    "u_minus_uh_l2",
    "u_minus_uh_h1",
    "p_minus_ph_l2",
    "ihu_minus_uhl_l2",
    "ihu_minus_uhl_h1",
    "u_minus_uhl_l2",
    "u_minus_uhl_h1",
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorNorms {
    pub u_minus_uh_l2: f64,
    pub u_minus_uh_h1: f64,
    pub p_minus_ph_l2: f64,
    pub ihu_minus_uhl_l2: f64,
    pub ihu_minus_uhl_h1: f64,
    pub u_minus_uhl_l2: f64,
    pub u_minus_uhl_h1: f64,
    pub div_uh_l2: f64,
    pub div_uhl_l2: f64,
}

impl ErrorNorms {
    /// Values of [`RATE_QUANTITIES`] in order.
    pub fn rate_values(&self) -> [f64; 7] {
        [
            self.u_minus_uh_l2,
            self.u_minus_uh_h1,
            self.p_minus_ph_l2,
            self.ihu_minus_uhl_l2,
            self.ihu_minus_uhl_h1,
            self.u_minus_uhl_l2,
            self.u_minus_uhl_h1,
        ]
    }
}

/// Ratios comparing `u_h` with its linear part `u_hl`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct VelocityRatios {
    /// `||u - u_h||_H1 / ||u - u_hl||_H1`
    pub h1_error_ratio: f64,
    /// `||u - u_h||_L2 / ||u - u_hl||_L2`
    pub l2_error_ratio: f64,
    /// `||div u_h||_L2 / ||div u_hl||_L2`
    pub divergence_ratio: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    /// `|m^T P_h| = |int P_h|`.
    pub pressure_mean: f64,
    pub ph_l2: f64,
    pub jhp_minus_p_l2: f64,
    pub ph_minus_jhp_l2: f64,
    pub u_minus_ihu_h1: f64,
    /// `||u_h - (u_hl + u_hb)||_L2`.
    pub split_residual: f64,
    /// `||u - u_h||_H1 <= 3 ||u - i_h u||_H1`; flagged, never fatal.
    pub quasi_optimal: bool,
    /// `||P - P_h|| <= ||P_h - j_h P|| + ||j_h P - P|| + 1e-10`.
    pub pressure_chain_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolverSummary {
    pub iterations: usize,
    pub relative_residual: f64,
    pub converged: bool,
    pub preconditioned: bool,
}

impl From<&SolveStats> for SolverSummary {
    fn from(s: &SolveStats) -> Self {
        Self {
            iterations: s.iterations,
            relative_residual: s.relative_residual,
            converged: s.converged,
            preconditioned: s.preconditioned,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellReport {
    pub problem: u32,
    pub mesh: String,
    pub h: f64,
    pub num_vertices: usize,
    pub num_tets: usize,
    pub num_unknowns: usize,
    pub norms: ErrorNorms,
    pub ratios: VelocityRatios,
    pub diagnostics: Diagnostics,
    pub solver: SolverSummary,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RateEntry {
    pub quantity: String,
    pub least_squares: Option<f64>,
    pub last_pair: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProblemRates {
    pub problem: u32,
    /// Meshes contributing to the fit (converged cells only).
    pub meshes_used: usize,
    /// Set when some cell of this problem did not converge.
    pub has_gap: bool,
    pub rates: Vec<RateEntry>,
}

impl ProblemRates {
    pub fn rate(&self, quantity: &str) -> Option<f64> {
        self.rates
            .iter()
            .find(|r| r.quantity == quantity)
            .and_then(|r| r.least_squares)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceReport {
    pub cells: Vec<CellReport>,
    pub rates: Vec<ProblemRates>,
}

impl ConvergenceReport {
    pub fn all_converged(&self) -> bool {
        self.cells.iter().all(|c| c.solver.converged)
    }

    pub fn rates_for(&self, problem: u32) -> Option<&ProblemRates> {
        self.rates.iter().find(|r| r.problem == problem)
    }

    pub fn cells_for(&self, problem: u32) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(move |c| c.problem == problem)
    }
}

/// Output of one assemble-constrain-solve run.
pub struct SolvedCell {
    pub solution: StokesSolution,
    pub stats: SolveStats,
    pub dof_map: DofMap,
    pub pressure_weights: Vec<f64>,
}

/// Assembles, applies the benchmark's Dirichlet data and solves.
pub fn solve_problem(
    mesh: &TetMesh,
    problem: &TestProblem,
    mu: f64,
    params: &SolverParams,
) -> Result<SolvedCell, AnalysisError> {
    solve_system(build_system(mesh, problem, mu)?, params)
}

/// Assembled system with the benchmark's Dirichlet data eliminated.
pub fn build_system(mesh: &TetMesh, problem: &TestProblem, mu: f64) -> Result<SaddleSystem, AnalysisError> {
    let system = assemble(mesh, problem, mu, 1.0)?;
    Ok(apply_dirichlet(mesh, system, |x| problem.boundary_velocity(x))?)
}

pub fn solve_system(system: SaddleSystem, params: &SolverParams) -> Result<SolvedCell, AnalysisError> {
    let (x, stats) = krylov::solve(&system.matrix, &system.rhs, params)?;
    Ok(SolvedCell {
        solution: StokesSolution::from_dofs(&system.dof_map, &x),
        stats,
        dof_map: system.dof_map,
        pressure_weights: system.pressure_weights,
    })
}

/// All norms, ratios and diagnostics for one solved cell.
pub fn evaluate_cell(
    mesh: &TetMesh,
    label: &str,
    problem: &TestProblem,
    solved: &SolvedCell,
) -> Result<CellReport, AnalysisError> {
    let sol = &solved.solution;
    let exact_u = ExactVelocity(*problem);
    let exact_p = ExactPressure(*problem);
    let (uhl, uhb) = split_velocity(sol);
    let uh = sol.velocity_field();
    let uh_sum = SumField { a: &uhl, b: &uhb };
    let ph = sol.pressure_field();
    let ihu = interpolate_velocity(mesh, problem);
    let jhp = interpolate_pressure(mesh, problem);

    let norms = ErrorNorms {
        u_minus_uh_l2: l2_norm_error(&exact_u, &uh, mesh)?,
        u_minus_uh_h1: h1_norm_error(&exact_u, &uh, mesh)?,
        p_minus_ph_l2: l2_norm_error(&exact_p, &ph, mesh)?,
        ihu_minus_uhl_l2: l2_norm_error(&ihu, &uhl, mesh)?,
        ihu_minus_uhl_h1: h1_norm_error(&ihu, &uhl, mesh)?,
        u_minus_uhl_l2: l2_norm_error(&exact_u, &uhl, mesh)?,
        u_minus_uhl_h1: h1_norm_error(&exact_u, &uhl, mesh)?,
        div_uh_l2: divergence_l2(&uh, mesh)?,
        div_uhl_l2: divergence_l2(&uhl, mesh)?,
    };
    let ratios = VelocityRatios {
        h1_error_ratio: norms.u_minus_uh_h1 / norms.u_minus_uhl_h1,
        l2_error_ratio: norms.u_minus_uh_l2 / norms.u_minus_uhl_l2,
        divergence_ratio: norms.div_uh_l2 / norms.div_uhl_l2,
    };
    let jhp_minus_p_l2 = l2_norm_error(&jhp, &exact_p, mesh)?;
    let ph_minus_jhp_l2 = l2_norm_error(&ph, &jhp, mesh)?;
    let u_minus_ihu_h1 = h1_norm_error(&exact_u, &ihu, mesh)?;
    let pressure_mean = sol
        .pressure
        .iter()
        .zip(&solved.pressure_weights)
        .map(|(p, m)| p * m)
        .sum::<f64>()
        .abs();
    let diagnostics = Diagnostics {
        pressure_mean,
        ph_l2: l2_norm(&ph, mesh)?,
        jhp_minus_p_l2,
        ph_minus_jhp_l2,
        u_minus_ihu_h1,
        split_residual: l2_norm_error(&uh, &uh_sum, mesh)?,
        quasi_optimal: norms.u_minus_uh_h1 <= 3.0 * u_minus_ihu_h1,
        pressure_chain_holds: norms.p_minus_ph_l2 <= ph_minus_jhp_l2 + jhp_minus_p_l2 + 1e-10,
    };
    if !diagnostics.quasi_optimal {
        log::warn!(
            "problem {} on {label}: ||u-u_h||_H1 exceeds 3 ||u-i_h u||_H1",
            problem.id()
        );
    }
    Ok(CellReport {
        problem: problem.id(),
        mesh: label.to_string(),
        h: mesh_spacing(mesh)?,
        num_vertices: mesh.num_vertices(),
        num_tets: mesh.num_tets(),
        num_unknowns: solved.dof_map.dim(),
        norms,
        ratios,
        diagnostics,
        solver: SolverSummary::from(&solved.stats),
    })
}

/// A labelled mesh of a study.
#[derive(Debug, Clone)]
pub struct StudyMesh {
    pub label: String,
    pub mesh: TetMesh,
}

/// Fits the seven rates for one problem from its converged cells.
pub fn fit_rates(problem: u32, cells: &[&CellReport]) -> ProblemRates {
    let used: Vec<&&CellReport> = cells.iter().filter(|c| c.solver.converged).collect();
    let h: Vec<f64> = used.iter().map(|c| c.h).collect();
    let rates = RATE_QUANTITIES
        .iter()
        .enumerate()
        .map(|(q, name)| {
            let e: Vec<f64> = used.iter().map(|c| c.norms.rate_values()[q]).collect();
            RateEntry {
                quantity: name.to_string(),
                least_squares: convergence_rate(&h, &e).ok(),
                last_pair: last_pair_rate(&h, &e).ok(),
            }
        })
        .collect();
    ProblemRates {
        problem,
        meshes_used: used.len(),
        has_gap: used.len() < cells.len(),
        rates,
    }
}

/// Runs every (problem, mesh) cell, then fits rates per problem. Cells run
/// concurrently; results are ordered by problem, then by mesh.
pub fn run_study(
    problems: &[TestProblem],
    meshes: &[StudyMesh],
    mu: f64,
    params: &SolverParams,
) -> Result<ConvergenceReport, AnalysisError> {
    let jobs: Vec<(TestProblem, &StudyMesh)> = problems
        .iter()
        .flat_map(|p| meshes.iter().map(move |m| (*p, m)))
        .collect();
    let cells: Vec<CellReport> = jobs
        .par_iter()
        .map(|(p, m)| {
            let solved = solve_problem(&m.mesh, p, mu, params)?;
            if !solved.stats.converged {
                log::warn!(
                    "problem {} on {}: GMRES stopped at residual {:e}",
                    p.id(),
                    m.label,
                    solved.stats.relative_residual
                );
            }
            evaluate_cell(&m.mesh, &m.label, p, &solved)
        })
        .collect::<Result<_, AnalysisError>>()?;
    let rates = problems
        .iter()
        .map(|p| {
            let mine: Vec<&CellReport> = cells.iter().filter(|c| c.problem == p.id()).collect();
            fit_rates(p.id(), &mine)
        })
        .collect();
    Ok(ConvergenceReport { cells, rates })
}
