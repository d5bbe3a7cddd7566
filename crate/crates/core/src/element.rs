//! The MINI reference element on one tetrahedron.
//!
//! Local degrees of freedom per scalar velocity component are ordered
//! `(phi_0, phi_1, phi_2, phi_3, b)`, where `phi_i` are the barycentric
//! coordinates and `b = phi_0 phi_1 phi_2 phi_3` is the unnormalized bubble.
//! Pressure uses the four `phi_i`.

use crate::mesh::{is_degenerate_volume, signed_volume};
use crate::quadrature::QuadratureRule;
use crate::Vec3;

/// Minimum rule degree for the stiffness matrix (`grad b . grad b` is degree 6).
pub const STIFFNESS_DEGREE: usize = 6;
/// Minimum rule degree for the divergence coupling (`phi_k d(b)` is degree 4).
pub const DIVERGENCE_DEGREE: usize = 4;

#[derive(Debug, thiserror::Error)]
pub enum ElementError {
    #[error("degenerate tetrahedron")]
    DegenerateTet,
    #[error("quadrature degree {got} is below the required {required}")]
    RuleDegreeTooLow { required: usize, got: usize },
}

pub type LocalStiffness = [[f64; 5]; 5];
/// `[component][pressure row k][velocity column i]`.
pub type LocalDivergence = [[[f64; 5]; 4]; 3];
/// `[component][velocity row i]`.
pub type LocalLoad = [[f64; 5]; 3];

/// Barycentric basis of a fixed tetrahedron.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalBasis {
    pub points: [Vec3; 4],
    pub volume: f64,
    pub grads: [Vec3; 4],
}

impl LocalBasis {
    pub fn new(points: [Vec3; 4]) -> Result<Self, ElementError> {
        let grads = barycentric_gradients(&points)?;
        Ok(Self {
            points,
            volume: signed_volume(&points).abs(),
            grads,
        })
    }

    /// Barycentric coordinates of `x`.
    pub fn barycentric(&self, x: &Vec3) -> [f64; 4] {
        let d = x - self.points[0];
        let l1 = self.grads[1].dot(&d);
        let l2 = self.grads[2].dot(&d);
        let l3 = self.grads[3].dot(&d);
        [1.0 - l1 - l2 - l3, l1, l2, l3]
    }

    /// Physical point with the given barycentric coordinates.
    pub fn point_at(&self, bary: &[f64; 4]) -> Vec3 {
        self.points
            .iter()
            .zip(bary)
            .fold(Vec3::zeros(), |acc, (p, l)| acc + p * *l)
    }

    pub fn centroid(&self) -> Vec3 {
        self.point_at(&[0.25; 4])
    }

    /// Bubble gradient `sum_k (prod_{j != k} phi_j) grad phi_k`.
    pub fn bubble_gradient(&self, bary: &[f64; 4]) -> Vec3 {
        (0..4).fold(Vec3::zeros(), |acc, k| {
            let others: f64 = (0..4).filter(|&j| j != k).map(|j| bary[j]).product();
            acc + self.grads[k] * others
        })
    }

    /// Gradients of the five local shape functions at a point.
    pub fn shape_gradients(&self, bary: &[f64; 4]) -> [Vec3; 5] {
        [
            self.grads[0],
            self.grads[1],
            self.grads[2],
            self.grads[3],
            self.bubble_gradient(bary),
        ]
    }

    /// Quadrature nodes mapped to this tet as `(physical weight, barycentric)`.
    pub fn quadrature<'a>(
        &'a self,
        rule: &'a QuadratureRule,
    ) -> impl Iterator<Item = (f64, [f64; 4])> + 'a {
        let scale = 6.0 * self.volume;
        rule.weights
            .iter()
            .zip(rule.barycentric_points())
            .map(move |(w, b)| (w * scale, b))
    }
}

pub fn bubble_value(bary: &[f64; 4]) -> f64 {
    bary.iter().product()
}

/// Constant gradients of the four barycentric coordinates.
pub fn barycentric_gradients(p: &[Vec3; 4]) -> Result<[Vec3; 4], ElementError> {
    let volume = signed_volume(p);
    if is_degenerate_volume(volume, p) {
        return Err(ElementError::DegenerateTet);
    }
    let (e1, e2, e3) = (p[1] - p[0], p[2] - p[0], p[3] - p[0]);
    let det = 6.0 * volume;
    let g1 = e2.cross(&e3) / det;
    let g2 = e3.cross(&e1) / det;
    let g3 = e1.cross(&e2) / det;
    Ok([-(g1 + g2 + g3), g1, g2, g3])
}

/// Bubble value and gradient at a physical point.
pub fn bubble_eval(tet: &[Vec3; 4], x: &Vec3) -> Result<(f64, Vec3), ElementError> {
    let basis = LocalBasis::new(*tet)?;
    let bary = basis.barycentric(x);
    Ok((bubble_value(&bary), basis.bubble_gradient(&bary)))
}

fn require_degree(rule: &QuadratureRule, required: usize) -> Result<(), ElementError> {
    if rule.degree < required {
        return Err(ElementError::RuleDegreeTooLow {
            required,
            got: rule.degree,
        });
    }
    Ok(())
}

/// `K[i][j] = mu * integral of grad psi_i . grad psi_j` over the tet.
pub fn local_stiffness(
    basis: &LocalBasis,
    mu: f64,
    rule: &QuadratureRule,
) -> Result<LocalStiffness, ElementError> {
    require_degree(rule, STIFFNESS_DEGREE)?;
    let mut k = [[0.0; 5]; 5];
    for (w, bary) in basis.quadrature(rule) {
        let g = basis.shape_gradients(&bary);
        for i in 0..5 {
            for j in i..5 {
                k[i][j] += w * g[i].dot(&g[j]);
            }
        }
    }
    for i in 0..5 {
        for j in i..5 {
            k[i][j] *= mu;
            k[j][i] = k[i][j];
        }
    }
    Ok(k)
}

/// `B_c[k][i] = -integral of phi_k * d(psi_i)/dx_c` over the tet.
pub fn local_divergence(
    basis: &LocalBasis,
    rule: &QuadratureRule,
) -> Result<LocalDivergence, ElementError> {
    require_degree(rule, DIVERGENCE_DEGREE)?;
    let mut b = [[[0.0; 5]; 4]; 3];
    for (w, bary) in basis.quadrature(rule) {
        let g = basis.shape_gradients(&bary);
        for (c, block) in b.iter_mut().enumerate() {
            for (k, row) in block.iter_mut().enumerate() {
                for (i, entry) in row.iter_mut().enumerate() {
                    *entry -= w * bary[k] * g[i][c];
                }
            }
        }
    }
    Ok(b)
}

/// Load integrals `rho * integral of f_c psi_i` for a vector forcing.
pub fn local_load_vector<F>(
    basis: &LocalBasis,
    force: F,
    rho: f64,
    rule: &QuadratureRule,
) -> LocalLoad
where
    F: Fn(Vec3) -> [f64; 3],
{
    let mut load = [[0.0; 5]; 3];
    for (w, bary) in basis.quadrature(rule) {
        let f = force(basis.point_at(&bary));
        let psi = [bary[0], bary[1], bary[2], bary[3], bubble_value(&bary)];
        for c in 0..3 {
            for i in 0..5 {
                load[c][i] += w * f[c] * psi[i];
            }
        }
    }
    for row in &mut load {
        for v in row.iter_mut() {
            *v *= rho;
        }
    }
    load
}

/// Load integrals of one scalar forcing component.
pub fn local_load<F>(
    basis: &LocalBasis,
    f_component: F,
    rho: f64,
    rule: &QuadratureRule,
) -> [f64; 5]
where
    F: Fn(Vec3) -> f64,
{
    local_load_vector(basis, |x| [f_component(x), 0.0, 0.0], rho, rule)[0]
}
