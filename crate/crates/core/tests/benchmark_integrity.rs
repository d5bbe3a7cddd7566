mod common;

use common::*;
use ministokes::benchmarks::{all_problems, sample_boundary_field, CubeFace, MU};
use ministokes::Vec3;

const FD_STEP: f64 = 1e-2;

#[test]
fn momentum_balance_holds_pointwise() {
    for p in all_problems() {
        let worst = halton_points(256, 0.02)
            .into_iter()
            .map(|x| momentum_residual(&p, MU, x, FD_STEP))
            .fold(0.0, f64::max);
        assert!(worst <= 1e-5, "problem {}: momentum residual {worst:e}", p.id());
    }
}

#[test]
fn velocity_is_divergence_free() {
    for p in all_problems() {
        for x in halton_points(256, 0.02) {
            let d = divergence_fd(&p, x, FD_STEP).abs();
            assert!(d <= 1e-6, "problem {} at {x:?}: div {d:e}", p.id());
        }
    }
}

#[test]
fn gradients_match_finite_differences() {
    for p in all_problems() {
        for x in halton_points(256, 0.02) {
            let e = gradient_mismatch(&p, x, FD_STEP);
            assert!(e <= 1e-6, "problem {} at {x:?}: {e:e}", p.id());
        }
    }
}

#[test]
fn pressure_has_zero_mean() {
    for p in all_problems() {
        let mean = cube_integral(24, |x| p.exact_pressure(x));
        assert!(mean.abs() <= 1e-8, "problem {}: {mean:e}", p.id());
    }
}

#[test]
fn boundary_data_matches_exact_velocity() {
    for p in all_problems() {
        for face in CubeFace::ALL {
            let samples = sample_boundary_field(&p, face, 8);
            assert!(samples.len() >= 50);
            for s in samples {
                let exact = p.exact_velocity(Vec3::from(s.point));
                for c in 0..3 {
                    assert!(
                        (s.velocity[c] - exact[c]).abs() <= 1e-12,
                        "problem {} face {face:?} at {:?}",
                        p.id(),
                        s.point
                    );
                }
                if p.id() >= 4 {
                    assert!(s.normal.abs() <= 1e-12);
                }
            }
        }
    }
}

#[test]
fn gauss_legendre_is_exact_for_polynomials() {
    let i = cube_integral(4, |x| x.x.powi(7) * x.y * x.y);
    assert!((i - 1.0 / 24.0).abs() < 1e-15);
}
