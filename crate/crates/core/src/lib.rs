//! MINI mixed finite element solver for the 3D Stokes problem.
//!
//! The velocity space is continuous piecewise-linear enriched with one quartic
//! bubble per tetrahedron, the pressure space is continuous piecewise-linear.
//! The crate ships five manufactured-solution benchmarks on the unit cube and a
//! convergence-study harness measuring velocity and pressure error rates.
//!
//! Pipeline: [`mesh`] -> [`assembly`] (uses [`element`] and [`quadrature`])
//! -> [`krylov`] -> [`analysis`].

pub mod analysis;
pub mod assembly;
pub mod benchmarks;
pub mod cli;
pub mod element;
pub mod krylov;
pub mod mesh;
pub mod quadrature;

pub use nalgebra::Vector3;

/// Cartesian point or vector in 3D.
pub type Vec3 = Vector3<f64>;

/// Crate-level error.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Mesh(#[from] mesh::MeshError),
    #[error(transparent)]
    Quadrature(#[from] quadrature::QuadratureError),
    #[error(transparent)]
    Element(#[from] element::ElementError),
    #[error(transparent)]
    Assembly(#[from] assembly::AssemblyError),
    #[error(transparent)]
    Krylov(#[from] krylov::KrylovError),
    #[error(transparent)]
    Benchmark(#[from] benchmarks::BenchmarkError),
    #[error(transparent)]
    Analysis(#[from] analysis::AnalysisError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
