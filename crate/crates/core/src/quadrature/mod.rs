//! Symmetric, positive-weight, interior-point quadrature on the reference
//! tetrahedron, degrees 1 through 10.

use std::sync::OnceLock;

use serde::Serialize;

use crate::mesh::{is_degenerate_volume, signed_volume};
use crate::Vec3;

mod tables;

/// Highest available degree. Requests above it are clamped.
pub const MAX_DEGREE: usize = 10;

/// Relative tolerance of the monomial exactness check.
pub const EXACTNESS_TOL: f64 = 1e-12;

#[derive(Debug, thiserror::Error)]
pub enum QuadratureError {
    #[error("cannot integrate over a degenerate tetrahedron")]
    DegenerateTet,
}

/// Quadrature rule on `{x, y, z >= 0, x + y + z <= 1}`, weights summing to 1/6.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub degree: usize,
    pub points: Vec<[f64; 3]>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    fn from_table(degree: usize, rows: &[[f64; 4]]) -> Self {
        Self {
            degree,
            points: rows.iter().map(|r| [r[0], r[1], r[2]]).collect(),
            weights: rows.iter().map(|r| r[3]).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Barycentric coordinates `(1-x-y-z, x, y, z)` of each node.
    pub fn barycentric_points(&self) -> impl Iterator<Item = [f64; 4]> + '_ {
        self.points
            .iter()
            .map(|&[x, y, z]| [1.0 - x - y - z, x, y, z])
    }

    /// JSON dump with keys `degree`, `points`, `weights`.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("rule serializes")
    }
}

fn rules() -> &'static [QuadratureRule] {
    static RULES: OnceLock<Vec<QuadratureRule>> = OnceLock::new();
    RULES.get_or_init(|| {
        vec![
            QuadratureRule::from_table(1, &tables::DEGREE_1),
            QuadratureRule::from_table(2, &tables::DEGREE_2),
            QuadratureRule::from_table(3, &tables::DEGREE_3),
            QuadratureRule::from_table(5, &tables::DEGREE_5),
            QuadratureRule::from_table(6, &tables::DEGREE_6),
            QuadratureRule::from_table(7, &tables::DEGREE_7),
            QuadratureRule::from_table(8, &tables::DEGREE_8),
            QuadratureRule::from_table(9, &tables::DEGREE_9),
            QuadratureRule::from_table(10, &tables::DEGREE_10),
        ]
    })
}

/// Lowest-degree rule exact for polynomials of degree `d`, clamped to
/// `1..=10`. Degree 4 is served by the degree-5 rule.
pub fn rule_for_degree(d: usize) -> &'static QuadratureRule {
    let d = d.clamp(1, MAX_DEGREE);
    rules()
        .iter()
        .find(|r| r.degree >= d)
        .expect("degree-10 rule exists")
}

/// Every distinct rule, ascending by degree.
pub fn all_rules() -> &'static [QuadratureRule] {
    rules()
}

/// Closed form `a! b! c! / (a+b+c+3)!` of the integral of `x^a y^b z^c` over
/// the reference tetrahedron.
pub fn monomial_integral(a: u32, b: u32, c: u32) -> f64 {
    fn factorial(n: u32) -> f64 {
        (1..=n).map(f64::from).product()
    }
    factorial(a) * factorial(b) * factorial(c) / factorial(a + b + c + 3)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonomialFailure {
    pub exponents: [u32; 3],
    pub relative_error: f64,
}

/// Monomials of total degree up to `rule.degree` that the rule fails to
/// integrate within [`EXACTNESS_TOL`]. Empty for a correct rule.
pub fn validate_rule(rule: &QuadratureRule) -> Vec<MonomialFailure> {
    let deg = rule.degree as u32;
    let mut failures = Vec::new();
    for a in 0..=deg {
        for b in 0..=deg - a {
            for c in 0..=deg - a - b {
                let exact = monomial_integral(a, b, c);
                let approx: f64 = rule
                    .points
                    .iter()
                    .zip(&rule.weights)
                    .map(|(&[x, y, z], w)| w * x.powi(a as i32) * y.powi(b as i32) * z.powi(c as i32))
                    .sum();
                let relative_error = (approx - exact).abs() / exact;
                if relative_error > EXACTNESS_TOL || !relative_error.is_finite() {
                    failures.push(MonomialFailure {
                        exponents: [a, b, c],
                        relative_error,
                    });
                }
            }
        }
    }
    failures
}

/// Integrates `f` over a physical tet by affine pullback of `rule`; each node
/// carries weight `w * 6 V`.
pub fn integrate_on_tet<F>(f: F, tet: &[Vec3; 4], rule: &QuadratureRule) -> Result<f64, QuadratureError>
where
    F: Fn(Vec3) -> f64,
{
    let volume = signed_volume(tet);
    if is_degenerate_volume(volume, tet) {
        return Err(QuadratureError::DegenerateTet);
    }
    let scale = 6.0 * volume.abs();
    let (e1, e2, e3) = (tet[1] - tet[0], tet[2] - tet[0], tet[3] - tet[0]);
    Ok(rule
        .points
        .iter()
        .zip(&rule.weights)
        .map(|(&[x, y, z], w)| w * f(tet[0] + e1 * x + e2 * y + e3 * z))
        .sum::<f64>()
        * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reference_tet() -> [Vec3; 4] {
        [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::z()]
    }

    #[test]
    fn oracle_values() {
        assert_eq!(monomial_integral(0, 0, 0), 1.0 / 6.0);
        assert!((monomial_integral(1, 0, 0) - 1.0 / 24.0).abs() < 1e-18);
        assert!((monomial_integral(1, 1, 1) - 1.0 / 720.0).abs() < 1e-18);
    }

    #[test]
    fn degree_one_is_centroid_rule() {
        let r = rule_for_degree(1);
        assert_eq!(r.len(), 1);
        assert_eq!(r.points[0], [0.25; 3]);
        assert!((r.weights[0] - 1.0 / 6.0).abs() < 1e-17);
        assert_eq!(rule_for_degree(0).degree, 1);
    }

    #[test]
    fn clamps_high_degree_requests() {
        assert_eq!(rule_for_degree(14).degree, 10);
        assert_eq!(rule_for_degree(14), rule_for_degree(10));
        assert_eq!(rule_for_degree(4).degree, 5);
    }

    #[test]
    fn every_rule_is_exact_positive_and_interior() {
        for d in 0..=12 {
            let r = rule_for_degree(d);
            assert!(r.degree >= d.clamp(1, 10));
            assert!(validate_rule(r).is_empty(), "degree {}", r.degree);
            let sum: f64 = r.weights.iter().sum();
            assert!((sum - 1.0 / 6.0).abs() < 1e-14);
            for (w, b) in r.weights.iter().zip(r.barycentric_points()) {
                assert!(*w > 0.0);
                assert!(b.iter().all(|&l| l > 0.0));
            }
        }
    }

    #[test]
    fn perturbed_rule_fails_validation() {
        let mut r = rule_for_degree(5).clone();
        r.weights[0] *= 1.0 + 1e-9;
        let failures = validate_rule(&r);
        assert!(!failures.is_empty());
        assert_eq!(failures[0].exponents, [0, 0, 0]);
    }

    #[test]
    fn integrate_examples() {
        let t = reference_tet();
        let one = integrate_on_tet(|_| 1.0, &t, rule_for_degree(1)).unwrap();
        assert!((one - 1.0 / 6.0).abs() < 1e-16);
        let x = integrate_on_tet(|p| p.x, &t, rule_for_degree(1)).unwrap();
        assert!((x - 1.0 / 24.0).abs() < 1e-16);
        let bubble = integrate_on_tet(
            |p| (1.0 - p.x - p.y - p.z) * p.x * p.y * p.z,
            &t,
            rule_for_degree(4),
        )
        .unwrap();
        assert!((bubble - 1.0 / 5040.0).abs() < 1e-17);
    }

    #[test]
    fn integrate_rejects_degenerate() {
        let flat = [Vec3::zeros(), Vec3::x(), Vec3::y(), Vec3::new(1.0, 1.0, 0.0)];
        assert!(integrate_on_tet(|_| 1.0, &flat, rule_for_degree(2)).is_err());
    }

    #[test]
    fn json_dump_has_expected_keys() {
        let v: serde_json::Value = serde_json::from_str(&rule_for_degree(2).to_json()).unwrap();
        assert_eq!(v["degree"], 2);
        assert_eq!(v["points"].as_array().unwrap().len(), 4);
        assert_eq!(v["weights"].as_array().unwrap().len(), 4);
    }
}
