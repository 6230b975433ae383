//! Slow reference implementations for cross-checking.
//!
//! Everything here is a literal loop over a displayed formula. Nothing calls
//! into the transform, polygon, curve or support-function fast paths beyond
//! reading coefficients and vertices.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::chernoff::SupportFunction;
use crate::fourier::{ComplexSeq, Spectrum};
use crate::polygon::Polygon;
use crate::smooth::FourierCurve;

const TAU: f64 = 2.0 * PI;

/// `ζ_ν = (1/k) Σ_j z_j e^{-2πiνj/k}` by a double loop.
pub fn direct_dft(z: &ComplexSeq) -> Spectrum {
    let k = z.len();
    let mut out = Vec::with_capacity(k);
    for nu in 0..k {
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..k {
            let angle = -TAU * ((nu * j) % k) as f64 / k as f64;
            acc += z[j] * Complex64::new(angle.cos(), angle.sin());
        }
        out.push(acc / k as f64);
    }
    Spectrum::new(out).expect("k >= 1")
}

/// `z_ν = Σ_n ζ_n e^{2πinν/k}` by a double loop.
pub fn direct_idft(s: &Spectrum) -> ComplexSeq {
    let k = s.k();
    let zeta = s.coeffs();
    let mut out = Vec::with_capacity(k);
    for nu in 0..k {
        let mut acc = Complex64::new(0.0, 0.0);
        for (n, z) in zeta.iter().enumerate() {
            let angle = TAU * ((n * nu) % k) as f64 / k as f64;
            acc += z * Complex64::new(angle.cos(), angle.sin());
        }
        out.push(acc);
    }
    ComplexSeq::new(out).expect("k >= 1")
}

/// `‖z^{(order)}‖²` by repeated differencing in a plain vector.
pub fn direct_derivative_norm(z: &ComplexSeq, order: usize) -> f64 {
    let k = z.len();
    let mut v: Vec<Complex64> = z.iter().copied().collect();
    for _ in 0..order {
        let first = v[0];
        for j in 0..k - 1 {
            v[j] = v[j + 1] - v[j];
        }
        v[k - 1] = first - v[k - 1];
    }
    v.iter().map(|c| c.re * c.re + c.im * c.im).sum()
}

/// Signed area, squared side sum and perimeter, transcribed literally.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectForms {
    pub area: f64,
    pub squared_sides: f64,
    pub perimeter: f64,
}

pub fn direct_forms(p: &Polygon) -> DirectForms {
    let z = p.vertices().as_slice();
    let k = z.len();
    let mut four_i_area = Complex64::new(0.0, 0.0);
    let mut squared_sides = 0.0;
    let mut perimeter = 0.0;
    for j in 0..k {
        let next = z[(j + 1) % k];
        four_i_area += next * z[j].conj() - z[j] * next.conj();
        let dx = next.re - z[j].re;
        let dy = next.im - z[j].im;
        squared_sides += dx * dx + dy * dy;
        perimeter += dx.hypot(dy);
    }
    DirectForms { area: (four_i_area / Complex64::new(0.0, 4.0)).re, squared_sides, perimeter }
}

/// Shoelace area of a closed point list.
pub fn shoelace(points: &[Complex64]) -> f64 {
    let n = points.len();
    (0..n)
        .map(|j| {
            let a = points[j];
            let b = points[(j + 1) % n];
            a.re * b.im - b.re * a.im
        })
        .sum::<f64>()
        / 2.0
}

/// Periodic trapezoid rule: `period/n Σ f_i` for samples on a uniform grid
/// covering one period.
pub fn quadrature(samples: &[f64], period: f64) -> f64 {
    assert!(samples.len() >= 3, "quadrature needs at least 3 samples");
    period * samples.iter().sum::<f64>() / samples.len() as f64
}

/// Samples `f` on `n` uniform points of `[0, period)` and integrates.
pub fn integrate(f: impl Fn(f64) -> f64, period: f64, n: usize) -> f64 {
    let samples: Vec<f64> = (0..n).map(|i| f(period * i as f64 / n as f64)).collect();
    quadrature(&samples, period)
}

/// `β_n = (1/k) Σ_{m=1}^k cos(n(2m-1)π/k)` as the literal cosine sum.
pub fn beta_sum(n: i64, k: usize) -> f64 {
    (1..=k).map(|m| (n as f64 * (2 * m - 1) as f64 * PI / k as f64).cos()).sum::<f64>() / k as f64
}

/// Operators applied by their defining formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operator {
    /// Average over the k half-step translates.
    TK(usize),
    /// `h + h''`.
    A,
    /// Sum over the k equally spaced translates.
    Width(usize),
}

/// `Σ (in)^j a_n e^{int}` with explicit cos/sin.
fn series_at(coeffs: &std::collections::BTreeMap<i64, Complex64>, t: f64, j: u32) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (&n, &a) in coeffs {
        let mut factor = Complex64::new(1.0, 0.0);
        for _ in 0..j {
            factor *= Complex64::new(0.0, n as f64);
        }
        acc += factor * a * Complex64::new((n as f64 * t).cos(), (n as f64 * t).sin());
    }
    acc
}

fn curve_at(c: &FourierCurve, t: f64, j: u32) -> Complex64 {
    series_at(c.coeffs(), t, j)
}

fn support_at(h: &SupportFunction, theta: f64, j: u32) -> f64 {
    series_at(h.coeffs(), theta, j).re
}

/// `h(θ)` and `h''(θ)` from the coefficient sum.
fn h_at(h: &SupportFunction, theta: f64, second: bool) -> f64 {
    support_at(h, theta, if second { 2 } else { 0 })
}

/// Applies `op` to `h` pointwise on the grid `θ_i = 2πi/grid`.
pub fn pointwise_operator(h: &SupportFunction, op: Operator, grid: usize) -> Vec<f64> {
    (0..grid)
        .map(|i| {
            let theta = TAU * i as f64 / grid as f64;
            match op {
                Operator::TK(k) => {
                    (1..=k).map(|m| h_at(h, theta + (2 * m - 1) as f64 * PI / k as f64, false)).sum::<f64>()
                        / k as f64
                }
                Operator::A => h_at(h, theta, false) + h_at(h, theta, true),
                Operator::Width(k) => (0..k).map(|j| h_at(h, theta + TAU * j as f64 / k as f64, false)).sum(),
            }
        })
        .collect()
}

/// `(1/2) ∫ (h1^{(j)} h2^{(j)} - h1^{(j+1)} h2^{(j+1)}) dθ` by quadrature.
pub fn mixed_area_quadrature(h1: &SupportFunction, h2: &SupportFunction, j: u32, grid: usize) -> f64 {
    let integrand = |theta: f64| {
        support_at(h1, theta, j) * support_at(h2, theta, j)
            - support_at(h1, theta, j + 1) * support_at(h2, theta, j + 1)
    };
    integrate(integrand, TAU, grid) / 2.0
}

/// `-(1/2) ∫ Im(z conj(z')) dt` by quadrature.
pub fn curve_area_quadrature(c: &FourierCurve, grid: usize) -> f64 {
    integrate(|t| -(curve_at(c, t, 0) * curve_at(c, t, 1).conj()).im, TAU, grid) / 2.0
}

/// `∫ |z^{(j)}(t)|² dt` by quadrature.
pub fn curve_energy_quadrature(c: &FourierCurve, j: u32, grid: usize) -> f64 {
    integrate(|t| curve_at(c, t, j).norm_sqr(), TAU, grid)
}

/// Unit outward normal and curvature vector of a regular positively
/// oriented curve at parameter t.
pub fn normal_and_curvature(c: &FourierCurve, t: f64) -> (Complex64, Complex64) {
    let d1 = curve_at(c, t, 1);
    let d2 = curve_at(c, t, 2);
    let speed = d1.norm();
    let tangent = d1 / speed;
    let normal = Complex64::new(0.0, -1.0) * tangent;
    let along = d2.re * tangent.re + d2.im * tangent.im;
    let kappa = (d2 - along * tangent) / (speed * speed);
    (normal, kappa)
}

/// The functional
/// `∫_C |z - (L/2π) n|² ds + (1/3) ∫_C |z + (L/2π)² κ|² ds - (L/2π²)(L² - 4πF)`
/// evaluated pointwise with arclength quadrature.
pub fn kl_functional(c: &FourierCurve, grid: usize) -> f64 {
    let length = integrate(|t| curve_at(c, t, 1).norm(), TAU, grid);
    let area = curve_area_quadrature(c, grid);
    let r = length / TAU;
    let normal_term = integrate(
        |t| {
            let (n, _) = normal_and_curvature(c, t);
            (curve_at(c, t, 0) - r * n).norm_sqr() * curve_at(c, t, 1).norm()
        },
        TAU,
        grid,
    );
    let curvature_term = integrate(
        |t| {
            let (_, kappa) = normal_and_curvature(c, t);
            (curve_at(c, t, 0) + r * r * kappa).norm_sqr() * curve_at(c, t, 1).norm()
        },
        TAU,
        grid,
    );
    normal_term + curvature_term / 3.0 - length / (2.0 * PI * PI) * (length * length - 4.0 * PI * area)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrature_exactness() {
        assert!((integrate(|t| t.cos().powi(2), TAU, 8) - PI).abs() < 1e-14);
        assert!((integrate(|_| 1.0, TAU, 5) - TAU).abs() < 1e-14);
        let f = |t: f64| (t.sin()).exp();
        assert!((integrate(f, TAU, 257) - integrate(f, TAU, 513)).abs() < 1e-12);
    }

    #[test]
    fn triangle_area() {
        let p = Polygon::new(vec![
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 1.0),
        ])
        .unwrap();
        assert!((direct_forms(&p).area - 0.5).abs() < 1e-15);
    }

    #[test]
    fn regular_triangle_sides() {
        let p = crate::polygon::make_regular(1, 3, Complex64::new(1.0, 0.0)).unwrap();
        assert!((direct_forms(&p).squared_sides - 9.0).abs() < 1e-13);
    }

    #[test]
    fn pointwise_a_on_cos2() {
        let h = SupportFunction::cosine(2, 1.0);
        assert!((pointwise_operator(&h, Operator::A, 4)[0] + 3.0).abs() < 1e-14);
        let w = pointwise_operator(&SupportFunction::constant(1.0), Operator::Width(2), 6);
        assert!(w.iter().all(|v| (v - 2.0).abs() < 1e-15));
    }

    #[test]
    fn dft_of_basis() {
        let r2 = ComplexSeq::regular(2, 6);
        let s = direct_dft(&r2);
        for (nu, c) in s.coeffs().iter().enumerate() {
            let expected = if nu == 2 { 1.0 } else { 0.0 };
            assert!((c - expected).norm() < 1e-15);
        }
        assert!(direct_dft(&ComplexSeq::zeros(5)).max_abs() == 0.0);
    }
}
