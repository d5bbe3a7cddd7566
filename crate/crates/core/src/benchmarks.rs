//! The five manufactured Stokes solutions on the unit cube.
//!
//! All problems use `mu = 1`; the forcing functions return `rho * f` directly.
//! Problems 1-3 have homogeneous Dirichlet data, problems 4 and 5 prescribe
//! tangential-only boundary velocity.

use std::f64::consts::PI;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::Vec3;

/// Viscosity the forcing expressions are written for.
pub const MU: f64 = 1.0;

/// Distance from a cube face within which a point is treated as on it.
pub const FACE_TOL: f64 = 1e-10;

#[derive(Debug, thiserror::Error)]
pub enum BenchmarkError {
    #[error("unknown test problem {0}; valid ids are 1-5")]
    InvalidId(u32),
}

/// `d[i][j] = d u_i / d x_j`.
pub type Gradient = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TestProblem {
    id: u32,
}

pub fn problem(id: u32) -> Result<TestProblem, BenchmarkError> {
    if (1..=5).contains(&id) {
        Ok(TestProblem { id })
    } else {
        Err(BenchmarkError::InvalidId(id))
    }
}

pub fn all_problems() -> Vec<TestProblem> {
    (1..=5).map(|id| TestProblem { id }).collect()
}

// x^2 (1-x)^2 and its derivatives
fn g0(t: f64) -> f64 {
    t * t - 2.0 * t.powi(3) + t.powi(4)
}
fn g1(t: f64) -> f64 {
    2.0 * t - 6.0 * t * t + 4.0 * t.powi(3)
}
fn g2(t: f64) -> f64 {
    2.0 - 12.0 * t + 12.0 * t * t
}
fn g3(t: f64) -> f64 {
    -12.0 + 24.0 * t
}

// z-profiles of problem 4
fn s0(z: f64) -> f64 {
    -z + 2.0 * z.powi(3)
}
fn s1(z: f64) -> f64 {
    -1.0 + 6.0 * z * z
}
fn r0(z: f64) -> f64 {
    -z * z + z.powi(4)
}
fn r1(z: f64) -> f64 {
    -2.0 * z + 4.0 * z.powi(3)
}

// pressure factor of problem 4
fn q0(t: f64) -> f64 {
    t - 3.0 * t * t + 2.0 * t.powi(3)
}
fn q1(t: f64) -> f64 {
    1.0 - 6.0 * t + 6.0 * t * t
}

impl TestProblem {
    pub fn id(&self) -> u32 {
        self.id
    }

    /// Whether the exact velocity vanishes on the whole boundary.
    pub fn has_homogeneous_boundary(&self) -> bool {
        self.id <= 3
    }

    /// Body force `rho * f`.
    pub fn force(&self, p: Vec3) -> [f64; 3] {
        let (x, y, z) = (p.x, p.y, p.z);
        let mu = MU;
        match self.id {
            1 => [
                -mu * ((2.0 - 12.0 * x + 12.0 * x * x) * g1(y) * g1(z)
                    + g0(x) * (-12.0 + 24.0 * y) * g1(z)
                    + g0(x) * g1(y) * (-12.0 + 24.0 * z))
                    + 0.01,
                -mu * ((-12.0 + 24.0 * x) * g0(y) * g1(z)
                    + g1(x) * (2.0 - 12.0 * y + 12.0 * y * y) * g1(z)
                    + g1(x) * g0(y) * (-12.0 + 24.0 * z))
                    + 0.01,
                2.0 * mu
                    * ((-12.0 + 24.0 * x) * g1(y) * g0(z)
                        + g1(x) * (-12.0 + 24.0 * y) * g0(z)
                        + g1(x) * g1(y) * (2.0 - 12.0 * z + 12.0 * z * z))
                    // dP/dz = +0.01; the minus sign in the published form is a typo
                    + 0.01,
            ],
            2 => {
                let (sx, sy, sz) = ((2.0 * PI * x).sin(), (2.0 * PI * y).sin(), (2.0 * PI * z).sin());
                let (cx, cy, cz) = ((2.0 * PI * x).cos(), (2.0 * PI * y).cos(), (2.0 * PI * z).cos());
                let k = 4.0 * PI * PI * mu;
                [
                    -k * (3.0 * cx - 2.0) * sy * sz - 2.0 * PI * sx,
                    -k * sx * (3.0 * cy - 2.0) * sz - 2.0 * PI * sy,
                    2.0 * k * sx * sy * (3.0 * cz - 2.0) - 2.0 * PI * sz,
                ]
            }
            3 => {
                let ex = x.exp();
                let a = 2.0 - 8.0 * x + x * x + 6.0 * x.powi(3) + x.powi(4);
                let b = -8.0 + 2.0 * x + 18.0 * x * x + 4.0 * x.powi(3);
                [
                    -mu * ex
                        * (a * g1(y) * g1(z) + g0(x) * g3(y) * g1(z) + g0(x) * g1(y) * g3(z))
                        + 0.01 * y * z,
                    mu * ex * (b * g0(y) * g1(z) + g1(x) * g2(y) * g1(z) + g1(x) * g0(y) * g3(z))
                        + 0.01 * x * z,
                    mu * ex * (a * g1(y) * g0(z) + g0(x) * g3(y) * g0(z) + g0(x) * g1(y) * g2(z))
                        + 0.01 * x * y,
                ]
            }
            4 => [
                -mu * (g2(x) * g1(y) * s0(z) + g0(x) * g3(y) * s0(z) + g0(x) * g1(y) * 12.0 * z)
                    + q1(x) * q0(y) * q0(z),
                -mu * (g3(x) * g0(y) * s0(z) + g1(x) * g2(y) * s0(z) + g1(x) * g0(y) * 12.0 * z)
                    + q0(x) * q1(y) * q0(z),
                mu * (g3(x) * g1(y) * r0(z)
                    + g1(x) * g3(y) * r0(z)
                    + g1(x) * g1(y) * (-2.0 + 12.0 * z * z))
                    + q0(x) * q0(y) * q1(z),
            ],
            5 => {
                let (sx, sy, sz) = ((PI * x).sin(), (PI * y).sin(), (PI * z).sin());
                let (cx, cy, cz) = ((PI * x).cos(), (PI * y).cos(), (PI * z).cos());
                let k = 3.0 * mu * PI * PI - PI;
                [
                    k * sx * cy * cz,
                    k * cx * sy * cz,
                    -(6.0 * mu * PI * PI + PI) * cx * cy * sz,
                ]
            }
            _ => unreachable!(),
        }
    }

    pub fn exact_velocity(&self, p: Vec3) -> [f64; 3] {
        let (x, y, z) = (p.x, p.y, p.z);
        match self.id {
            1 => [
                g0(x) * g1(y) * g1(z),
                g1(x) * g0(y) * g1(z),
                -2.0 * g1(x) * g1(y) * g0(z),
            ],
            2 => {
                let (sx, sy, sz) = ((2.0 * PI * x).sin(), (2.0 * PI * y).sin(), (2.0 * PI * z).sin());
                let (cx, cy, cz) = ((2.0 * PI * x).cos(), (2.0 * PI * y).cos(), (2.0 * PI * z).cos());
                [
                    (1.0 - cx) * sy * sz,
                    sx * (1.0 - cy) * sz,
                    -2.0 * sx * sy * (1.0 - cz),
                ]
            }
            3 => {
                let ex = x.exp();
                [
                    ex * g0(x) * g1(y) * g1(z),
                    -ex * g1(x) * g0(y) * g1(z),
                    -ex * g0(x) * g1(y) * g0(z),
                ]
            }
            4 => [
                g0(x) * g1(y) * s0(z),
                g1(x) * g0(y) * s0(z),
                -g1(x) * g1(y) * r0(z),
            ],
            5 => {
                let (sx, sy, sz) = ((PI * x).sin(), (PI * y).sin(), (PI * z).sin());
                let (cx, cy, cz) = ((PI * x).cos(), (PI * y).cos(), (PI * z).cos());
                [sx * cy * cz, cx * sy * cz, -2.0 * cx * cy * sz]
            }
            _ => unreachable!(),
        }
    }

    pub fn exact_velocity_gradient(&self, p: Vec3) -> Gradient {
        let (x, y, z) = (p.x, p.y, p.z);
        match self.id {
            1 => [
                [g1(x) * g1(y) * g1(z), g0(x) * g2(y) * g1(z), g0(x) * g1(y) * g2(z)],
                [g2(x) * g0(y) * g1(z), g1(x) * g1(y) * g1(z), g1(x) * g0(y) * g2(z)],
                [
                    -2.0 * g2(x) * g1(y) * g0(z),
                    -2.0 * g1(x) * g2(y) * g0(z),
                    -2.0 * g1(x) * g1(y) * g1(z),
                ],
            ],
            2 => {
                let w = 2.0 * PI;
                let (sx, sy, sz) = ((w * x).sin(), (w * y).sin(), (w * z).sin());
                let (cx, cy, cz) = ((w * x).cos(), (w * y).cos(), (w * z).cos());
                [
                    [w * sx * sy * sz, w * (1.0 - cx) * cy * sz, w * (1.0 - cx) * sy * cz],
                    [w * cx * (1.0 - cy) * sz, w * sx * sy * sz, w * sx * (1.0 - cy) * cz],
                    [
                        -2.0 * w * cx * sy * (1.0 - cz),
                        -2.0 * w * sx * cy * (1.0 - cz),
                        -2.0 * w * sx * sy * sz,
                    ],
                ]
            }
            3 => {
                let ex = x.exp();
                [
                    [
                        ex * (g0(x) + g1(x)) * g1(y) * g1(z),
                        ex * g0(x) * g2(y) * g1(z),
                        ex * g0(x) * g1(y) * g2(z),
                    ],
                    [
                        -ex * (g1(x) + g2(x)) * g0(y) * g1(z),
                        -ex * g1(x) * g1(y) * g1(z),
                        -ex * g1(x) * g0(y) * g2(z),
                    ],
                    [
                        -ex * (g0(x) + g1(x)) * g1(y) * g0(z),
                        -ex * g0(x) * g2(y) * g0(z),
                        -ex * g0(x) * g1(y) * g1(z),
                    ],
                ]
            }
            4 => [
                [g1(x) * g1(y) * s0(z), g0(x) * g2(y) * s0(z), g0(x) * g1(y) * s1(z)],
                [g2(x) * g0(y) * s0(z), g1(x) * g1(y) * s0(z), g1(x) * g0(y) * s1(z)],
                [-g2(x) * g1(y) * r0(z), -g1(x) * g2(y) * r0(z), -g1(x) * g1(y) * r1(z)],
            ],
            5 => {
                let (sx, sy, sz) = ((PI * x).sin(), (PI * y).sin(), (PI * z).sin());
                let (cx, cy, cz) = ((PI * x).cos(), (PI * y).cos(), (PI * z).cos());
                [
                    [PI * cx * cy * cz, -PI * sx * sy * cz, -PI * sx * cy * sz],
                    [-PI * sx * sy * cz, PI * cx * cy * cz, -PI * cx * sy * sz],
                    [
                        2.0 * PI * sx * cy * sz,
                        2.0 * PI * cx * sy * sz,
                        -2.0 * PI * cx * cy * cz,
                    ],
                ]
            }
            _ => unreachable!(),
        }
    }

    pub fn exact_pressure(&self, p: Vec3) -> f64 {
        let (x, y, z) = (p.x, p.y, p.z);
        match self.id {
            1 => 0.01 * (x + y + z - 1.5),
            2 => (2.0 * PI * x).cos() + (2.0 * PI * y).cos() + (2.0 * PI * z).cos(),
            3 => 0.01 * (x * y * z - 0.125),
            4 => q0(x) * q0(y) * q0(z),
            5 => (PI * x).cos() * (PI * y).cos() * (PI * z).cos(),
            _ => unreachable!(),
        }
    }

    /// Dirichlet data, face by face as published. `None` off the cube boundary.
    pub fn boundary_velocity(&self, p: Vec3) -> Option<[f64; 3]> {
        let face = CubeFace::containing(&p)?;
        let (x, y, z) = (p.x, p.y, p.z);
        Some(match self.id {
            1..=3 => [0.0; 3],
            4 => match face {
                CubeFace::ZMax => [g0(x) * g1(y), g1(x) * g0(y), 0.0],
                _ => [0.0; 3],
            },
            5 => {
                let (sx, sy, sz) = ((PI * x).sin(), (PI * y).sin(), (PI * z).sin());
                let (cx, cy, cz) = ((PI * x).cos(), (PI * y).cos(), (PI * z).cos());
                match face {
                    CubeFace::ZMin => [sx * cy, cx * sy, 0.0],
                    CubeFace::ZMax => [-sx * cy, -cx * sy, 0.0],
                    CubeFace::YMin => [sx * cz, 0.0, -2.0 * cx * sz],
                    CubeFace::YMax => [-sx * cz, 0.0, 2.0 * cx * sz],
                    CubeFace::XMin => [0.0, sy * cz, -2.0 * cy * sz],
                    CubeFace::XMax => [0.0, -sy * cz, 2.0 * cy * sz],
                }
            }
            _ => unreachable!(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum CubeFace {
    XMin,
    XMax,
    YMin,
    YMax,
    ZMin,
    ZMax,
}

impl CubeFace {
    pub const ALL: [CubeFace; 6] = [
        CubeFace::XMin,
        CubeFace::XMax,
        CubeFace::YMin,
        CubeFace::YMax,
        CubeFace::ZMin,
        CubeFace::ZMax,
    ];

    /// Normal axis and the constant coordinate on the face.
    pub fn axis_and_level(self) -> (usize, f64) {
        match self {
            CubeFace::XMin => (0, 0.0),
            CubeFace::XMax => (0, 1.0),
            CubeFace::YMin => (1, 0.0),
            CubeFace::YMax => (1, 1.0),
            CubeFace::ZMin => (2, 0.0),
            CubeFace::ZMax => (2, 1.0),
        }
    }

    /// First face (z faces, then y, then x) the point lies on, if any.
    pub fn containing(p: &Vec3) -> Option<CubeFace> {
        let inside = (0..3).all(|a| p[a] > -FACE_TOL && p[a] < 1.0 + FACE_TOL);
        if !inside {
            return None;
        }
        [
            CubeFace::ZMin,
            CubeFace::ZMax,
            CubeFace::YMin,
            CubeFace::YMax,
            CubeFace::XMin,
            CubeFace::XMax,
        ]
        .into_iter()
        .find(|f| {
            let (axis, level) = f.axis_and_level();
            (p[axis] - level).abs() <= FACE_TOL
        })
    }

    fn point(self, s: f64, t: f64) -> Vec3 {
        let (axis, level) = self.axis_and_level();
        let mut p = Vec3::zeros();
        p[axis] = level;
        let (a, b) = tangential_axes(axis);
        p[a] = s;
        p[b] = t;
        p
    }
}

fn tangential_axes(axis: usize) -> (usize, usize) {
    match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BoundarySample {
    pub point: [f64; 3],
    pub velocity: [f64; 3],
    /// Components along the two in-face axes, in ascending axis order.
    pub tangential: [f64; 2],
    pub normal: f64,
}

/// Dirichlet data on a uniform `resolution x resolution` grid of one face,
/// corners included (`resolution = 1` samples the face centre).
pub fn sample_boundary_field(
    problem: &TestProblem,
    face: CubeFace,
    resolution: usize,
) -> Vec<BoundarySample> {
    let coord = |i: usize| {
        if resolution <= 1 {
            0.5
        } else {
            i as f64 / (resolution - 1) as f64
        }
    };
    let (axis, _) = face.axis_and_level();
    let (a, b) = tangential_axes(axis);
    let n = resolution.max(1);
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            let p = face.point(coord(i), coord(j));
            let v = problem
                .boundary_velocity(p)
                .expect("face points lie on the boundary");
            out.push(BoundarySample {
                point: [p.x, p.y, p.z],
                velocity: v,
                tangential: [v[a], v[b]],
                normal: v[axis],
            });
        }
    }
    out
}

/// CSV with header `x,y,z,vx,vy,vz`.
pub fn write_boundary_csv<W: Write>(mut w: W, samples: &[BoundarySample]) -> std::io::Result<()> {
    writeln!(w, "x,y,z,vx,vy,vz")?;
    for s in samples {
        writeln!(
            w,
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}",
            s.point[0], s.point[1], s.point[2], s.velocity[0], s.velocity[1], s.velocity[2]
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invalid_ids_rejected() {
        assert!(matches!(problem(0), Err(BenchmarkError::InvalidId(0))));
        assert!(matches!(problem(7), Err(BenchmarkError::InvalidId(7))));
    }

    #[test]
    fn problem_two_at_quarter_point() {
        let p = problem(2).unwrap();
        let q = Vec3::new(0.25, 0.25, 0.25);
        let u = p.exact_velocity(q);
        assert!((u[0] - 1.0).abs() < 1e-15);
        assert!((u[1] - 1.0).abs() < 1e-15);
        assert!((u[2] + 2.0).abs() < 1e-15);
        assert!(p.exact_pressure(q).abs() < 1e-15);
    }

    #[test]
    fn problem_five_pressure_at_centre() {
        let p = problem(5).unwrap();
        assert!(p.exact_pressure(Vec3::new(0.5, 0.5, 0.5)).abs() < 1e-15);
    }

    #[test]
    fn problem_one_vanishes_on_boundary() {
        let p = problem(1).unwrap();
        for q in [Vec3::new(0.0, 0.3, 0.7), Vec3::new(0.2, 1.0, 0.4), Vec3::new(0.6, 0.1, 1.0)] {
            assert_eq!(p.exact_velocity(q).map(|v| v.abs() < 1e-15), [true; 3]);
            assert_eq!(p.boundary_velocity(q), Some([0.0; 3]));
        }
    }

    #[test]
    fn boundary_data_undefined_inside() {
        assert_eq!(problem(5).unwrap().boundary_velocity(Vec3::new(0.5, 0.5, 0.5)), None);
        assert_eq!(CubeFace::containing(&Vec3::new(1.5, 0.0, 0.0)), None);
    }

    #[test]
    fn lid_samples() {
        let p4 = problem(4).unwrap();
        let top = sample_boundary_field(&p4, CubeFace::ZMax, 3);
        let centre = top.iter().find(|s| s.point == [0.5, 0.5, 1.0]).unwrap();
        assert!(centre.tangential[0].abs() < 1e-15 && centre.tangential[1].abs() < 1e-15);
        for s in sample_boundary_field(&p4, CubeFace::ZMin, 5) {
            assert_eq!(s.velocity, [0.0; 3]);
        }
        let p5 = problem(5).unwrap();
        let side = sample_boundary_field(&p5, CubeFace::XMin, 1);
        assert_eq!(side[0].point, [0.0, 0.5, 0.5]);
        assert!(side[0].tangential.iter().all(|v| v.abs() < 1e-15));
        assert_eq!(side[0].normal, 0.0);
    }

    #[test]
    fn csv_layout() {
        let samples = sample_boundary_field(&problem(5).unwrap(), CubeFace::ZMax, 2);
        let mut buf = Vec::new();
        write_boundary_csv(&mut buf, &samples).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "x,y,z,vx,vy,vz");
        assert_eq!(lines.len(), 5);
        assert_eq!(lines[1].split(',').count(), 6);
    }
}
