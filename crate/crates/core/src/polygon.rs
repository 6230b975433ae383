//! Polygons as vectors in `C^k` and the polygonal forms on them.
//!
//! A k-gon is any ordered k-tuple of complex vertices. Nothing here checks
//! simplicity or convexity: `signed_area` is the algebraic area, and a star
//! pentagon or a polygon traced twice is as good an input as a square.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fourier::{self, ComplexSeq, Spectrum};
use crate::tolerance;

/// A k-gon with k >= 3.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    z: ComplexSeq,
}

impl Polygon {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::TooFewVertices(vertices.len()));
        }
        if vertices.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Format("vertex coordinates must be finite".into()));
        }
        Ok(Polygon { z: ComplexSeq::new(vertices)? })
    }

    pub fn from_seq(z: ComplexSeq) -> Result<Self> {
        Self::new(z.into_vec())
    }

    /// The polygon whose finite Fourier coefficients are `zeta`.
    pub fn from_spectrum(zeta: &Spectrum) -> Result<Self> {
        Self::from_seq(fourier::inverse_transform(zeta))
    }

    pub fn k(&self) -> usize {
        self.z.len()
    }

    pub fn vertices(&self) -> &ComplexSeq {
        &self.z
    }

    pub fn spectrum(&self) -> Spectrum {
        fourier::forward_transform(&self.z)
    }

    pub fn scaled(&self, c: Complex64) -> Polygon {
        Polygon { z: self.z.scale(c) }
    }

    pub fn translated(&self, c: Complex64) -> Polygon {
        Polygon { z: self.z.map(|v| v + c) }
    }

    pub fn conjugate(&self) -> Polygon {
        Polygon { z: self.z.conj() }
    }

    pub fn shifted(&self, n: i64) -> Polygon {
        Polygon { z: fourier::cyclic_shift(&self.z, n) }
    }

    /// |centroid| <= 1e-12 · max |z_ν|.
    pub fn has_zero_centroid(&self) -> bool {
        centroid(self).norm() <= tolerance::ZERO_CENTROID * self.z.max_abs()
    }
}

/// `R_n` scaled by a complex factor: vertex ν is `scale · e^{2πinν/k}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegularPolygon {
    pub n: i64,
    pub k: usize,
    pub scale: Complex64,
}

impl RegularPolygon {
    pub fn polygon(&self) -> Result<Polygon> {
        make_regular(self.n, self.k, self.scale)
    }
}

pub fn make_regular(n: i64, k: usize, scale: Complex64) -> Result<Polygon> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    Polygon::from_seq(ComplexSeq::regular(n, k).scale(scale))
}

/// `F(P) = (1/4i) Σ (z_{j+1} conj(z_j) - z_j conj(z_{j+1}))`.
pub fn signed_area(p: &Polygon) -> f64 {
    let z = p.vertices();
    let k = p.k();
    // (1/4i)(w - conj(w)) = Im(w)/2 with w = z_{j+1} conj(z_j).
    (0..k).map(|j| (z[(j + 1) % k] * z[j].conj()).im).sum::<f64>() / 2.0
}

/// `S(P) = Σ |z_{j+1} - z_j|²`.
pub fn squared_side_sum(p: &Polygon) -> f64 {
    fourier::derivative(p.vertices(), 1).norm_sqr()
}

/// `L(P) = Σ |z_{j+1} - z_j|`.
pub fn perimeter(p: &Polygon) -> f64 {
    side_lengths(p).iter().sum()
}

pub fn side_lengths(p: &Polygon) -> Vec<f64> {
    fourier::derivative(p.vertices(), 1).iter().map(|e| e.norm()).collect()
}

/// `k·S - L²`, computed as `Σ_{i<j} (|e_i| - |e_j|)²` so that it is never
/// negative and vanishes exactly for equilateral polygons.
pub fn cauchy_schwarz_gap(p: &Polygon) -> f64 {
    let sides = side_lengths(p);
    let mut gap = 0.0;
    for i in 0..sides.len() {
        for j in i + 1..sides.len() {
            let d = sides[i] - sides[j];
            gap += d * d;
        }
    }
    gap
}

/// `t = ż`.
pub fn tangent_vectors(p: &Polygon) -> ComplexSeq {
    fourier::derivative(p.vertices(), 1)
}

/// `κ = τ z̈`; entry ν is `(z_{ν+1} - z_ν) - (z_ν - z_{ν-1})`.
pub fn curvature_vectors(p: &Polygon) -> ComplexSeq {
    fourier::cyclic_shift(&fourier::derivative(p.vertices(), 2), 1)
}

pub fn centroid(p: &Polygon) -> Complex64 {
    p.vertices().sum() / p.k() as f64
}

/// Subtracts the vertex mean.
pub fn recenter(p: &Polygon) -> Polygon {
    let c = centroid(p);
    Polygon { z: p.vertices().map(|v| v - c) }
}

/// Seeded random zero-centroid polygon, sampled in the spectral domain.
///
/// Coefficients are uniform in the unit disc. With `mode_bound = Some(b)`
/// only the modes `1..=b` and `k-b..k` are populated; `None` populates every
/// mode `0 < ν < k`.
pub fn random_polygon(k: usize, mode_bound: Option<usize>, seed: u64) -> Result<Polygon> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    if let Some(b) = mode_bound {
        if b < 1 || b > k - 1 {
            return Err(Error::InvalidParameter(format!("mode bound {b} must lie in 1..={}", k - 1)));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let zeta = (0..k)
        .map(|nu| {
            let keep = nu != 0 && mode_bound.is_none_or(|b| nu <= b || nu >= k - b);
            let sample = random_in_disc(&mut rng);
            if keep {
                sample
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
        .collect();
    Polygon::from_spectrum(&Spectrum::new(zeta)?)
}

/// Seeded polygon whose spectrum is supported exactly on `modes` (indices
/// taken mod k), coefficients uniform in the unit disc.
pub fn random_polygon_on_modes(k: usize, modes: &[i64], seed: u64) -> Result<Polygon> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut zeta = vec![Complex64::new(0.0, 0.0); k];
    for &m in modes {
        zeta[m.rem_euclid(k as i64) as usize] = random_in_disc(&mut rng);
    }
    Polygon::from_spectrum(&Spectrum::new(zeta)?)
}

pub(crate) fn random_in_disc<R: Rng>(rng: &mut R) -> Complex64 {
    let r: f64 = rng.gen::<f64>().sqrt();
    let theta: f64 = rng.gen_range(0.0..2.0 * PI);
    Complex64::from_polar(r, theta)
}

/// `F(R_ν) = k sin(νπ/k) cos(νπ/k)`.
pub fn regular_area(nu: i64, k: usize) -> f64 {
    let a = nu as f64 * PI / k as f64;
    k as f64 * a.sin() * a.cos()
}

/// `S(R_ν) = 4k sin²(νπ/k)`.
pub fn regular_squared_sides(nu: i64, k: usize) -> f64 {
    k as f64 * fourier::difference_symbol(nu, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_small_or_non_finite() {
        assert_eq!(Polygon::new(vec![c(0.0, 0.0); 2]).unwrap_err(), Error::TooFewVertices(2));
        assert!(Polygon::new(vec![c(0.0, 0.0), c(f64::NAN, 0.0), c(1.0, 1.0)]).is_err());
        assert!(make_regular(1, 2, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn unit_square_forms() {
        let sq = make_regular(1, 4, c(1.0, 0.0)).unwrap();
        assert!((signed_area(&sq) - 2.0).abs() < 1e-15);
        assert!((squared_side_sum(&sq) - 8.0).abs() < 1e-14);
        assert!((perimeter(&sq) - 4.0 * 2f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn degenerate_polygon() {
        let p = Polygon::new(vec![c(1.5, -2.0); 5]).unwrap();
        assert_eq!(signed_area(&p), 0.0);
        assert_eq!(perimeter(&p), 0.0);
        assert_eq!(tangent_vectors(&p).max_abs(), 0.0);
    }

    #[test]
    fn regular_polygon_closed_forms() {
        for k in 3..12 {
            for nu in 0..k as i64 {
                let p = make_regular(nu, k, c(1.0, 0.0)).unwrap();
                assert!((signed_area(&p) - regular_area(nu, k)).abs() < 1e-13);
                assert!((squared_side_sum(&p) - regular_squared_sides(nu, k)).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn conjugate_regular_is_reverse_mode() {
        let k = 7;
        let a = make_regular(1, k, c(1.0, 0.0)).unwrap();
        let b = make_regular(k as i64 - 1, k, c(1.0, 0.0)).unwrap();
        for nu in 0..k {
            assert!((a.vertices()[nu].conj() - b.vertices()[nu]).norm() < 1e-15);
        }
        assert!((signed_area(&a) + signed_area(&b)).abs() < 1e-14);
    }

    #[test]
    fn regular_tangent_and_curvature() {
        for k in [3usize, 5, 8] {
            let p = make_regular(1, k, c(0.7, -0.4)).unwrap();
            let s = (PI / k as f64).sin();
            let factor = c(0.0, 2.0 * s) * Complex64::from_polar(1.0, PI / k as f64);
            let t = tangent_vectors(&p);
            let kappa = curvature_vectors(&p);
            for nu in 0..k {
                assert!((t[nu] - factor * p.vertices()[nu]).norm() < 1e-14);
                assert!((kappa[nu] + 4.0 * s * s * p.vertices()[nu]).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn curvature_entries_are_second_differences() {
        let p = Polygon::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(1.0, 2.0)]).unwrap();
        let kappa = curvature_vectors(&p);
        let z = p.vertices();
        for nu in 0..5i64 {
            let expected = (z.at(nu + 1) - z.at(nu)) - (z.at(nu) - z.at(nu - 1));
            assert!((kappa[nu as usize] - expected).norm() < 1e-15);
        }
        // Collinear equally spaced run: vertices 1 and 2.
        assert_eq!(kappa[1], c(0.0, 0.0));
        assert_eq!(kappa[2], c(0.0, 0.0));
        assert!(kappa.sum().norm() < 1e-14);
    }

    #[test]
    fn recenter_and_centroid() {
        let r = make_regular(1, 6, c(1.0, 0.0)).unwrap();
        let moved = r.translated(c(5.0, 0.0));
        let back = recenter(&moved);
        for nu in 0..6 {
            assert!((back.vertices()[nu] - r.vertices()[nu]).norm() < 1e-14);
        }
        for nu in 1..6 {
            assert!(centroid(&make_regular(nu, 6, c(1.0, 0.0)).unwrap()).norm() < 1e-15);
        }
    }

    #[test]
    fn random_polygon_contract() {
        let p = random_polygon(9, Some(1), 3).unwrap();
        let s = p.spectrum();
        for nu in 2..8 {
            assert!(s.coeffs()[nu].norm() < 1e-15);
        }
        assert!(s.coeff(0).norm() < 1e-15);
        assert_eq!(random_polygon(9, Some(1), 3).unwrap(), p);
        assert_ne!(random_polygon(9, Some(1), 4).unwrap(), p);
        assert!(random_polygon(9, Some(0), 1).is_err());
        assert!(random_polygon(9, Some(9), 1).is_err());
        assert!(random_polygon(9, None, 1).unwrap().has_zero_centroid());
    }

    #[test]
    fn cauchy_schwarz_gap_matches_definition() {
        let p = random_polygon(7, None, 11).unwrap();
        let l = perimeter(&p);
        let gap = 7.0 * squared_side_sum(&p) - l * l;
        assert!((cauchy_schwarz_gap(&p) - gap).abs() < 1e-12 * l * l);
        assert!(cauchy_schwarz_gap(&make_regular(2, 7, c(2.0, 1.0)).unwrap()) < 1e-28);
    }
}
