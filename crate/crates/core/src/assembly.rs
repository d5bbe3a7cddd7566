//! Global saddle-point system for the MINI discretization.
//!
//! Unknown ordering: linear velocity `(x, y, z)` per vertex, bubble velocity
//! `(x, y, z)` per tet, pressure per vertex, then one Lagrange multiplier
//! enforcing zero mean pressure. The matrix is
//!
//! ```text
//! [ A   B^T  0 ]
//! [ B   0    m ]
//! [ 0   m^T  0 ]
//! ```
//!
//! with `A` the componentwise viscous stiffness, `B_{k,i} = -int phi_k div psi_i`
//! and `m_j = int phi_j`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::benchmarks::TestProblem;
use crate::element::{
    local_divergence, local_load_vector, local_stiffness, ElementError, LocalBasis,
    LocalDivergence, LocalLoad, LocalStiffness, DIVERGENCE_DEGREE, STIFFNESS_DEGREE,
};
use crate::krylov::SparseMatrix;
use crate::mesh::TetMesh;
use crate::quadrature::{rule_for_degree, QuadratureRule, MAX_DEGREE};
use crate::Vec3;

#[derive(Debug, thiserror::Error)]
pub enum AssemblyError {
    #[error(transparent)]
    Element(#[from] ElementError),
    #[error("boundary velocity undefined at vertex {vertex} ({x}, {y}, {z})")]
    BoundaryDataUndefined { vertex: usize, x: f64, y: f64, z: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DofMap {
    pub num_vertices: usize,
    pub num_tets: usize,
}

impl DofMap {
    pub fn velocity(&self, vertex: usize, component: usize) -> usize {
        3 * vertex + component
    }

    pub fn bubble(&self, tet: usize, component: usize) -> usize {
        3 * self.num_vertices + 3 * tet + component
    }

    pub fn pressure(&self, vertex: usize) -> usize {
        3 * self.num_vertices + 3 * self.num_tets + vertex
    }

    pub fn multiplier(&self) -> usize {
        self.dim() - 1
    }

    /// `4 N_v + 3 N_t + 1`.
    pub fn dim(&self) -> usize {
        4 * self.num_vertices + 3 * self.num_tets + 1
    }
}

pub fn build_dof_map(mesh: &TetMesh) -> DofMap {
    DofMap {
        num_vertices: mesh.num_vertices(),
        num_tets: mesh.num_tets(),
    }
}

#[derive(Debug, Clone)]
pub struct SaddleSystem {
    pub matrix: SparseMatrix,
    pub rhs: Vec<f64>,
    pub dof_map: DofMap,
    /// Constrained unknown -> prescribed value. Empty until Dirichlet data is applied.
    pub dirichlet_values: BTreeMap<usize, f64>,
    /// `m_j = int phi_j`, the multiplier column restricted to pressure unknowns.
    pub pressure_weights: Vec<f64>,
}

struct ElementContribution {
    stiffness: LocalStiffness,
    divergence: LocalDivergence,
    load: LocalLoad,
    volume: f64,
}

/// Assembles with an arbitrary body force and load quadrature rule.
pub fn assemble_with<F>(
    mesh: &TetMesh,
    force: F,
    mu: f64,
    rho: f64,
    load_rule: &QuadratureRule,
) -> Result<SaddleSystem, AssemblyError>
where
    F: Fn(Vec3) -> [f64; 3] + Sync,
{
    let dofs = build_dof_map(mesh);
    let stiff_rule = rule_for_degree(STIFFNESS_DEGREE);
    let div_rule = rule_for_degree(DIVERGENCE_DEGREE);

    let contributions: Vec<ElementContribution> = (0..mesh.num_tets())
        .into_par_iter()
        .map(|t| {
            let basis = LocalBasis::new(mesh.tet_points(t))?;
            Ok(ElementContribution {
                stiffness: local_stiffness(&basis, mu, stiff_rule)?,
                divergence: local_divergence(&basis, div_rule)?,
                load: local_load_vector(&basis, &force, rho, load_rule),
                volume: basis.volume,
            })
        })
        .collect::<Result<_, ElementError>>()?;

    let mut triplets = Vec::with_capacity(mesh.num_tets() * 180);
    let mut rhs = vec![0.0; dofs.dim()];
    let mut weights = vec![0.0; mesh.num_vertices()];
    for (t, (tet, local)) in mesh.tets().iter().zip(&contributions).enumerate() {
        // Local velocity unknown i of component c.
        let vel = |i: usize, c: usize| {
            if i < 4 {
                dofs.velocity(tet[i], c)
            } else {
                dofs.bubble(t, c)
            }
        };
        for c in 0..3 {
            for i in 0..4 {
                for j in 0..4 {
                    triplets.push((vel(i, c), vel(j, c), local.stiffness[i][j]));
                }
            }
            // Linear-bubble stiffness coupling vanishes identically.
            triplets.push((vel(4, c), vel(4, c), local.stiffness[4][4]));
            for k in 0..4 {
                let p = dofs.pressure(tet[k]);
                for i in 0..5 {
                    let v = local.divergence[c][k][i];
                    triplets.push((p, vel(i, c), v));
                    triplets.push((vel(i, c), p, v));
                }
            }
            for i in 0..5 {
                rhs[vel(i, c)] += local.load[c][i];
            }
        }
        for &v in tet {
            weights[v] += local.volume / 4.0;
        }
    }
    let lm = dofs.multiplier();
    for (v, &w) in weights.iter().enumerate() {
        triplets.push((dofs.pressure(v), lm, w));
        triplets.push((lm, dofs.pressure(v), w));
    }

    Ok(SaddleSystem {
        matrix: SparseMatrix::from_triplets(dofs.dim(), &triplets),
        rhs,
        dof_map: dofs,
        dirichlet_values: BTreeMap::new(),
        pressure_weights: weights,
    })
}

/// Assembles a benchmark problem. Loads use the degree-10 rule since the
/// forcing terms are non-polynomial or of degree above 10 against the bubble.
pub fn assemble(
    mesh: &TetMesh,
    problem: &TestProblem,
    mu: f64,
    rho: f64,
) -> Result<SaddleSystem, AssemblyError> {
    assemble_with(mesh, |x| problem.force(x), mu, rho, rule_for_degree(MAX_DEGREE))
}

/// Symmetric Dirichlet elimination on the linear velocity unknowns of every
/// boundary vertex: known values move to the right-hand side, constrained rows
/// and columns are cleared and given a unit diagonal.
pub fn apply_dirichlet<G>(
    mesh: &TetMesh,
    mut system: SaddleSystem,
    boundary_velocity: G,
) -> Result<SaddleSystem, AssemblyError>
where
    G: Fn(Vec3) -> Option<[f64; 3]>,
{
    let dofs = system.dof_map;
    let dim = dofs.dim();
    let mut prescribed: Vec<Option<f64>> = vec![None; dim];
    for v in mesh.boundary_vertices() {
        let p = mesh.vertices()[v];
        let g = boundary_velocity(p).ok_or(AssemblyError::BoundaryDataUndefined {
            vertex: v,
            x: p.x,
            y: p.y,
            z: p.z,
        })?;
        for (c, value) in g.into_iter().enumerate() {
            prescribed[dofs.velocity(v, c)] = Some(value);
        }
    }

    let a = &system.matrix;
    let mut triplets = Vec::with_capacity(a.nnz());
    for i in 0..dim {
        if let Some(g) = prescribed[i] {
            triplets.push((i, i, 1.0));
            system.rhs[i] = g;
            continue;
        }
        for (j, v) in a.row(i) {
            match prescribed[j] {
                Some(g) => system.rhs[i] -= v * g,
                None => triplets.push((i, j, v)),
            }
        }
    }
    system.matrix = SparseMatrix::from_triplets(dim, &triplets);
    system.dirichlet_values = prescribed
        .into_iter()
        .enumerate()
        .filter_map(|(i, g)| g.map(|g| (i, g)))
        .collect();
    Ok(system)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::benchmarks::problem;
    use crate::mesh::generate_structured_cube_mesh;

    #[test]
    fn dof_dimensions() {
        let m1 = generate_structured_cube_mesh(1).unwrap();
        assert_eq!(build_dof_map(&m1).dim(), 4 * 8 + 3 * 6 + 1);
        let m2 = generate_structured_cube_mesh(2).unwrap();
        assert_eq!(build_dof_map(&m2).dim(), 4 * 27 + 3 * 48 + 1);
        let single = TetMesh::new(
            vec![Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::z()],
            vec![[0, 1, 2, 3]],
        )
        .unwrap();
        assert_eq!(build_dof_map(&single).dim(), 20);
    }

    #[test]
    fn dof_map_is_a_bijection() {
        let d = DofMap {
            num_vertices: 5,
            num_tets: 3,
        };
        let mut seen = vec![false; d.dim()];
        let mut mark = |i: usize| {
            assert!(!seen[i]);
            seen[i] = true;
        };
        for v in 0..5 {
            for c in 0..3 {
                mark(d.velocity(v, c));
            }
        }
        for t in 0..3 {
            for c in 0..3 {
                mark(d.bubble(t, c));
            }
        }
        for v in 0..5 {
            mark(d.pressure(v));
        }
        mark(d.multiplier());
        assert!(seen.into_iter().all(|s| s));
    }

    #[test]
    fn assembled_structure() {
        let mesh = generate_structured_cube_mesh(2).unwrap();
        let sys = assemble(&mesh, &problem(1).unwrap(), 1.0, 1.0).unwrap();
        let m = &sys.matrix;
        assert!(m.max_asymmetry() <= 1e-13 * m.max_abs());
        let d = sys.dof_map;
        let weight_sum: f64 = sys.pressure_weights.iter().sum();
        assert!((weight_sum - 1.0).abs() < 1e-14);
        // zero pressure-pressure block
        for v in 0..d.num_vertices {
            for w in 0..d.num_vertices {
                assert_eq!(m.get(d.pressure(v), d.pressure(w)), 0.0);
            }
        }
        // multiplier row touches pressure only
        for (j, _) in m.row(d.multiplier()) {
            assert!(j >= d.pressure(0) && j < d.multiplier());
        }
        // bubble rows of A are diagonal
        for (j, _) in m.row(d.bubble(7, 1)) {
            assert!(j == d.bubble(7, 1) || j >= d.pressure(0));
        }
        assert!(sys.rhs[d.pressure(3)] == 0.0 && sys.rhs[d.multiplier()] == 0.0);
    }

    #[test]
    fn dirichlet_elimination_is_symmetric() {
        let mesh = generate_structured_cube_mesh(2).unwrap();
        let p5 = problem(5).unwrap();
        let sys = assemble(&mesh, &p5, 1.0, 1.0).unwrap();
        let sys = apply_dirichlet(&mesh, sys, |x| p5.boundary_velocity(x)).unwrap();
        let m = &sys.matrix;
        assert!(m.max_asymmetry() <= 1e-13 * m.max_abs());
        let d = sys.dof_map;
        // 26 boundary vertices x 3 components
        assert_eq!(sys.dirichlet_values.len(), 78);
        for (&k, &g) in &sys.dirichlet_values {
            assert_eq!(m.row(k).collect::<Vec<_>>(), vec![(k, 1.0)]);
            assert_eq!(sys.rhs[k], g);
            assert!(k < 3 * d.num_vertices);
        }
    }

    #[test]
    fn dirichlet_values_from_published_faces() {
        let mesh = generate_structured_cube_mesh(2).unwrap();
        let p4 = problem(4).unwrap();
        let sys = assemble(&mesh, &p4, 1.0, 1.0).unwrap();
        let sys = apply_dirichlet(&mesh, sys, |x| p4.boundary_velocity(x)).unwrap();
        // vertex (1/2, 1/2, 1) has index 1 + 3 * (1 + 3 * 2) = 22
        let v = 22;
        assert_eq!(mesh.vertices()[v], Vec3::new(0.5, 0.5, 1.0));
        assert!(sys.dirichlet_values[&sys.dof_map.velocity(v, 0)].abs() < 1e-16);

        let p5 = problem(5).unwrap();
        let sys = assemble(&mesh, &p5, 1.0, 1.0).unwrap();
        let sys = apply_dirichlet(&mesh, sys, |x| p5.boundary_velocity(x)).unwrap();
        // vertex (1/2, 0, 1/2) has index 1 + 3 * (0 + 3 * 1) = 10
        for c in 0..3 {
            assert!(sys.dirichlet_values[&sys.dof_map.velocity(10, c)].abs() < 1e-15);
        }
    }

    #[test]
    fn undefined_boundary_data_is_an_error() {
        let mesh = generate_structured_cube_mesh(1).unwrap();
        let sys = assemble(&mesh, &problem(1).unwrap(), 1.0, 1.0).unwrap();
        assert!(matches!(
            apply_dirichlet(&mesh, sys, |_| None),
            Err(AssemblyError::BoundaryDataUndefined { .. })
        ));
    }
}
