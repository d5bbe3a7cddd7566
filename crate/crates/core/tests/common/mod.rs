#![allow(dead_code)]

use ministokes::benchmarks::TestProblem;
use ministokes::Vec3;

/// `i`-th element of the van der Corput sequence in `base`.
pub fn radical_inverse(mut i: u64, base: u64) -> f64 {
    let mut f = 1.0;
    let mut r = 0.0;
    while i > 0 {
        f /= base as f64;
        r += f * (i % base) as f64;
        i /= base;
    }
    r
}

/// Halton points in `[margin, 1 - margin]^3`.
pub fn halton_points(count: usize, margin: f64) -> Vec<Vec3> {
    (1..=count as u64)
        .map(|i| {
            let s = 1.0 - 2.0 * margin;
            Vec3::new(
                margin + s * radical_inverse(i, 2),
                margin + s * radical_inverse(i, 3),
                margin + s * radical_inverse(i, 5),
            )
        })
        .collect()
}

/// Gauss-Legendre nodes and weights on [0, 1].
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let mut x = (std::f64::consts::PI * (k as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push(((1.0 - x) / 2.0, 1.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// Tensor Gauss-Legendre integral over the unit cube.
pub fn cube_integral(n: usize, f: impl Fn(Vec3) -> f64) -> f64 {
    let gl = gauss_legendre(n);
    let mut s = 0.0;
    for &(x, wx) in &gl {
        for &(y, wy) in &gl {
            for &(z, wz) in &gl {
                s += wx * wy * wz * f(Vec3::new(x, y, z));
            }
        }
    }
    s
}

fn axis(i: usize) -> Vec3 {
    let mut e = Vec3::zeros();
    e[i] = 1.0;
    e
}

/// Richardson-extrapolated central first derivative.
pub fn d1(f: &impl Fn(Vec3) -> f64, p: Vec3, dir: usize, h: f64) -> f64 {
    let e = axis(dir);
    let c = |h: f64| (f(p + e * h) - f(p - e * h)) / (2.0 * h);
    (4.0 * c(h / 2.0) - c(h)) / 3.0
}

/// Richardson-extrapolated central second derivative.
pub fn d2(f: &impl Fn(Vec3) -> f64, p: Vec3, dir: usize, h: f64) -> f64 {
    let e = axis(dir);
    let c = |h: f64| (f(p + e * h) - 2.0 * f(p) + f(p - e * h)) / (h * h);
    (4.0 * c(h / 2.0) - c(h)) / 3.0
}

/// `-mu lap u + grad P - f` evaluated by finite differences, max over components.
pub fn momentum_residual(problem: &TestProblem, mu: f64, p: Vec3, h: f64) -> f64 {
    let f = problem.force(p);
    let pressure = |x: Vec3| problem.exact_pressure(x);
    (0..3)
        .map(|c| {
            let uc = |x: Vec3| problem.exact_velocity(x)[c];
            let lap: f64 = (0..3).map(|d| d2(&uc, p, d, h)).sum();
            (-mu * lap + d1(&pressure, p, c, h) - f[c]).abs()
        })
        .fold(0.0, f64::max)
}

pub fn divergence_fd(problem: &TestProblem, p: Vec3, h: f64) -> f64 {
    (0..3)
        .map(|c| d1(&|x: Vec3| problem.exact_velocity(x)[c], p, c, h))
        .sum()
}

/// Max deviation of the closed-form gradient from finite differences.
pub fn gradient_mismatch(problem: &TestProblem, p: Vec3, h: f64) -> f64 {
    let g = problem.exact_velocity_gradient(p);
    let mut worst: f64 = 0.0;
    for (c, row) in g.iter().enumerate() {
        for (d, v) in row.iter().enumerate() {
            let fd = d1(&|x: Vec3| problem.exact_velocity(x)[c], p, d, h);
            worst = worst.max((fd - v).abs());
        }
    }
    worst
}
