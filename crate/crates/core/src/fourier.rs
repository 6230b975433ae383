//! Finite Fourier analysis on `C^k`.
//!
//! Conventions, fixed once for the whole crate:
//!
//! * `ω_ν = e^{2πiν/k}` and the coefficients are `ζ_ν = (1/k) Σ_j z_j conj(ω_ν)^j`,
//!   so the *forward* transform carries the `1/k` and `z_ν = Σ_n ζ_n ω_ν^n`.
//!   Many FFT libraries normalise the inverse instead; this one does not.
//! * Indices are cyclic: `z_{k-l}` and `z_{-l}` name the same entry, and the
//!   same for `ζ`.
//! * The derivative is the forward difference `ż_ν = z_{ν+1} - z_ν`, which
//!   multiplies `ζ_ν` by `ω_ν - 1`.
//! * `τ` shifts entries one place to the right: `τ(z_0, …, z_{k-1}) = (z_{k-1}, z_0, …, z_{k-2})`.

use std::cell::RefCell;
use std::f64::consts::PI;
use std::ops::{Add, Index, Mul, Sub};
use std::sync::Arc;

use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};

use crate::error::{Error, Result};

/// Below this length transforms use direct summation; at or above it, an FFT.
pub const FFT_THRESHOLD: usize = 16;

/// An ordered k-tuple of complex numbers with cyclic indexing.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexSeq {
    entries: Vec<Complex64>,
}

impl ComplexSeq {
    pub fn new(entries: Vec<Complex64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidParameter("a sequence needs k >= 1 entries".into()));
        }
        Ok(ComplexSeq { entries })
    }

    pub fn zeros(k: usize) -> Self {
        assert!(k >= 1, "k must be positive");
        ComplexSeq { entries: vec![Complex64::new(0.0, 0.0); k] }
    }

    /// `(1, ω^n, ω^{2n}, …)`, the n-regular k-gon `R_n`.
    pub fn regular(n: i64, k: usize) -> Self {
        assert!(k >= 1, "k must be positive");
        ComplexSeq { entries: (0..k).map(|j| root_of_unity(n * j as i64, k)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.entries
    }

    pub fn into_vec(self) -> Vec<Complex64> {
        self.entries
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.entries.iter()
    }

    /// Entry at a cyclic (possibly negative) index.
    pub fn at(&self, index: i64) -> Complex64 {
        self.entries[index.rem_euclid(self.len() as i64) as usize]
    }

    pub fn scale(&self, c: Complex64) -> Self {
        self.map(|z| z * c)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        ComplexSeq { entries: self.entries.iter().map(|&z| f(z)).collect() }
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    /// `‖z‖² = Σ |z_ν|²`.
    pub fn norm_sqr(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn sum(&self) -> Complex64 {
        self.entries.iter().sum()
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.len(), other.len(), "sequence lengths differ");
        ComplexSeq {
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| f(a, b)).collect(),
        }
    }
}

impl Index<usize> for ComplexSeq {
    type Output = Complex64;

    fn index(&self, i: usize) -> &Complex64 {
        &self.entries[i]
    }
}

impl Add for &ComplexSeq {
    type Output = ComplexSeq;

    fn add(self, rhs: &ComplexSeq) -> ComplexSeq {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &ComplexSeq {
    type Output = ComplexSeq;

    fn sub(self, rhs: &ComplexSeq) -> ComplexSeq {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul<&ComplexSeq> for Complex64 {
    type Output = ComplexSeq;

    fn mul(self, rhs: &ComplexSeq) -> ComplexSeq {
        rhs.scale(self)
    }
}

impl Mul<&ComplexSeq> for f64 {
    type Output = ComplexSeq;

    fn mul(self, rhs: &ComplexSeq) -> ComplexSeq {
        rhs.scale(Complex64::new(self, 0.0))
    }
}

/// Finite Fourier coefficients `ζ_0, …, ζ_{k-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    coeffs: Vec<Complex64>,
}

impl Spectrum {
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter("a spectrum needs k >= 1 coefficients".into()));
        }
        Ok(Spectrum { coeffs })
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// `ζ_ν` for any integer ν, using `ζ_{k-l} = ζ_{-l}`.
    pub fn coeff(&self, nu: i64) -> Complex64 {
        self.coeffs[nu.rem_euclid(self.k() as i64) as usize]
    }

    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Indices `ν ∈ [0, k)` whose coefficient exceeds `rel` times the largest modulus.
    pub fn active_modes(&self, rel: f64) -> Vec<usize> {
        let cutoff = rel * self.max_abs();
        (0..self.k()).filter(|&nu| self.coeffs[nu].norm() > cutoff).collect()
    }

    /// Σ_ν weight(ν)·|ζ_ν|² over ν ∈ [0, k).
    pub fn weighted_energy(&self, weight: impl Fn(usize) -> f64) -> f64 {
        self.coeffs.iter().enumerate().map(|(nu, z)| weight(nu) * z.norm_sqr()).sum()
    }
}

/// `e^{2πi·n/k}` with the exponent reduced mod k first.
pub fn root_of_unity(n: i64, k: usize) -> Complex64 {
    let r = n.rem_euclid(k as i64) as f64;
    Complex64::from_polar(1.0, 2.0 * PI * r / k as f64)
}

/// `|1 - ω_ν|² = 4 sin²(νπ/k)`.
///
/// Angles whose cosine is rational (multiples of a sixth or a quarter turn)
/// give exact integers.
pub fn difference_symbol(nu: i64, k: usize) -> f64 {
    let kk = k as i64;
    let r = nu.rem_euclid(kk);
    let r = r.min(kk - r);
    let exact = match ((12 * r) % kk, 12 * r / kk) {
        (0, 0) => Some(0.0),
        (0, 2) => Some(1.0),
        (0, 3) => Some(2.0),
        (0, 4) => Some(3.0),
        (0, 6) => Some(4.0),
        _ => None,
    };
    exact.unwrap_or_else(|| {
        let s = (r as f64 * PI / k as f64).sin();
        4.0 * s * s
    })
}

pub fn forward_transform(z: &ComplexSeq) -> Spectrum {
    let coeffs = if z.len() < FFT_THRESHOLD { forward_direct(z.as_slice()) } else { forward_fft(z.as_slice()) };
    Spectrum { coeffs }
}

pub fn inverse_transform(s: &Spectrum) -> ComplexSeq {
    let entries = if s.k() < FFT_THRESHOLD { inverse_direct(s.coeffs()) } else { inverse_fft(s.coeffs()) };
    ComplexSeq { entries }
}

pub(crate) fn forward_direct(z: &[Complex64]) -> Vec<Complex64> {
    let k = z.len();
    let scale = 1.0 / k as f64;
    (0..k)
        .map(|nu| {
            let acc: Complex64 = z
                .iter()
                .enumerate()
                .map(|(j, &zj)| zj * root_of_unity(-((nu * j) as i64), k))
                .sum();
            acc * scale
        })
        .collect()
}

pub(crate) fn inverse_direct(zeta: &[Complex64]) -> Vec<Complex64> {
    let k = zeta.len();
    (0..k)
        .map(|nu| zeta.iter().enumerate().map(|(n, &c)| c * root_of_unity((nu * n) as i64, k)).sum())
        .collect()
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

fn plan(len: usize, inverse: bool) -> Arc<dyn Fft<f64>> {
    PLANNER.with(|p| {
        let mut p = p.borrow_mut();
        if inverse {
            p.plan_fft_inverse(len)
        } else {
            p.plan_fft_forward(len)
        }
    })
}

pub(crate) fn forward_fft(z: &[Complex64]) -> Vec<Complex64> {
    let k = z.len();
    let mut buf = z.to_vec();
    plan(k, false).process(&mut buf);
    let scale = 1.0 / k as f64;
    buf.iter_mut().for_each(|c| *c *= scale);
    buf
}

pub(crate) fn inverse_fft(zeta: &[Complex64]) -> Vec<Complex64> {
    let mut buf = zeta.to_vec();
    plan(zeta.len(), true).process(&mut buf);
    buf
}

/// `τ^n z`: entry j of the result is entry `j - n (mod k)` of the input.
pub fn cyclic_shift(z: &ComplexSeq, n: i64) -> ComplexSeq {
    let k = z.len() as i64;
    ComplexSeq { entries: (0..k).map(|j| z.at(j - n)).collect() }
}

/// `z^{(order)}` by repeated forward differencing.
pub fn derivative(z: &ComplexSeq, order: usize) -> ComplexSeq {
    let k = z.len();
    let mut cur = z.entries.clone();
    let mut next = vec![Complex64::new(0.0, 0.0); k];
    for _ in 0..order {
        for nu in 0..k {
            next[nu] = cur[(nu + 1) % k] - cur[nu];
        }
        std::mem::swap(&mut cur, &mut next);
    }
    ComplexSeq { entries: cur }
}

/// `⟨z, w⟩ = Σ z_ν conj(w_ν)`.
pub fn inner_product(z: &ComplexSeq, w: &ComplexSeq) -> Result<Complex64> {
    if z.len() != w.len() {
        return Err(Error::DimensionMismatch { expected: z.len(), found: w.len() });
    }
    Ok(z.iter().zip(w.iter()).map(|(a, b)| a * b.conj()).sum())
}

/// `‖z^{(order)}‖²` from the spectrum: `k Σ 4^j sin^{2j}(νπ/k) |ζ_ν|²`.
pub fn parseval_norm(z: &ComplexSeq, order: usize) -> f64 {
    spectral_norm(&forward_transform(z), order)
}

/// Same as [`parseval_norm`] for a precomputed spectrum.
pub fn spectral_norm(s: &Spectrum, order: usize) -> f64 {
    let k = s.k();
    k as f64 * s.weighted_energy(|nu| difference_symbol(nu as i64, k).powi(order as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn pseudo_random(k: usize, salt: u64) -> ComplexSeq {
        // Small LCG so the unit tests do not depend on the rand crate.
        let mut state = 0x9E37_79B9_7F4A_7C15u64 ^ salt;
        let mut next = || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        ComplexSeq::new((0..k).map(|_| c(next(), next())).collect()).unwrap()
    }

    fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
    }

    #[test]
    fn square_transforms_to_first_mode() {
        let z = ComplexSeq::new(vec![c(1.0, 0.0), c(0.0, 1.0), c(-1.0, 0.0), c(0.0, -1.0)]).unwrap();
        let s = forward_transform(&z);
        let expected = [c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)];
        assert!(max_diff(s.coeffs(), &expected) < 1e-15);
    }

    #[test]
    fn constant_sequence_is_mean_mode() {
        let z = ComplexSeq::new(vec![c(2.0, -3.0); 7]).unwrap();
        let s = forward_transform(&z);
        assert!((s.coeff(0) - c(2.0, -3.0)).norm() < 1e-15);
        assert!(s.coeffs()[1..].iter().all(|x| x.norm() < 1e-15));
    }

    #[test]
    fn inverse_of_unit_mode_is_regular_pentagon() {
        let mut zeta = vec![c(0.0, 0.0); 5];
        zeta[1] = c(1.0, 0.0);
        let z = inverse_transform(&Spectrum::new(zeta).unwrap());
        for nu in 0..5 {
            let expected = Complex64::from_polar(1.0, 2.0 * PI * nu as f64 / 5.0);
            assert!((z[nu] - expected).norm() < 1e-15);
        }
        let zero = inverse_transform(&Spectrum::new(vec![c(0.0, 0.0); 5]).unwrap());
        assert_eq!(zero.max_abs(), 0.0);
    }

    #[test]
    fn direct_and_fast_paths_agree() {
        for k in [3, 8, 15, 16, 17, 31, 64, 100] {
            let z = pseudo_random(k, k as u64);
            let d = forward_direct(z.as_slice());
            let f = forward_fft(z.as_slice());
            assert!(max_diff(&d, &f) < 1e-13, "k = {k}");
            let back_d = inverse_direct(&d);
            let back_f = inverse_fft(&f);
            assert!(max_diff(&back_d, &back_f) < 1e-13, "k = {k}");
            assert!(max_diff(&back_f, z.as_slice()) < 1e-13, "k = {k}");
        }
    }

    #[test]
    fn shift_moves_entries_right() {
        let z = ComplexSeq::new(vec![c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0)]).unwrap();
        let t = cyclic_shift(&z, 1);
        assert_eq!(t.as_slice(), &[c(2.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(cyclic_shift(&z, 3), z);
        assert_eq!(cyclic_shift(&cyclic_shift(&z, 1), -1), z);
        assert_eq!(cyclic_shift(&z, -1), cyclic_shift(&z, 2));
    }

    #[test]
    fn derivative_of_regular_polygon_and_constant() {
        let k = 7;
        for nu in 0..k as i64 {
            let r = ComplexSeq::regular(nu, k);
            let d = derivative(&r, 1);
            let factor = root_of_unity(nu, k) - 1.0;
            assert!(max_diff(d.as_slice(), r.scale(factor).as_slice()) < 1e-14);
        }
        let constant = ComplexSeq::new(vec![c(3.0, 1.0); 6]).unwrap();
        assert_eq!(derivative(&constant, 1).max_abs(), 0.0);
        assert_eq!(derivative(&constant, 0), constant);
    }

    #[test]
    fn derivative_has_zero_mean() {
        let z = pseudo_random(9, 4);
        for order in 1..5 {
            assert!(derivative(&z, order).sum().norm() < 1e-13);
        }
    }

    #[test]
    fn inner_product_on_characters() {
        let k = 6;
        let r1 = ComplexSeq::regular(1, k);
        let r2 = ComplexSeq::regular(2, k);
        assert!((inner_product(&r1, &r1).unwrap() - c(k as f64, 0.0)).norm() < 1e-14);
        assert!(inner_product(&r1, &r2).unwrap().norm() < 1e-14);
        let err = inner_product(&r1, &ComplexSeq::regular(1, 5)).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 6, found: 5 });
    }

    #[test]
    fn parseval_on_regular_polygon() {
        let k = 9;
        let r1 = ComplexSeq::regular(1, k);
        assert!((parseval_norm(&r1, 0) - k as f64).abs() < 1e-13);
        let s = (PI / k as f64).sin();
        assert!((parseval_norm(&r1, 1) - 4.0 * k as f64 * s * s).abs() < 1e-13);
    }

    #[test]
    fn summation_by_parts() {
        let w = pseudo_random(11, 99);
        let lhs = inner_product(&derivative(&w, 1), &derivative(&w, 1)).unwrap();
        let rhs = -inner_product(&cyclic_shift(&derivative(&w, 2), 1), &w).unwrap();
        assert!((lhs - rhs).norm() < 1e-12 * lhs.norm());
    }

    #[test]
    fn derivative_commutes_with_shift() {
        let z = pseudo_random(10, 5);
        let a = derivative(&cyclic_shift(&z, 1), 1);
        let b = cyclic_shift(&derivative(&z, 1), 1);
        assert!(max_diff(a.as_slice(), b.as_slice()) < 1e-15);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert!(ComplexSeq::new(vec![]).is_err());
        assert!(Spectrum::new(vec![]).is_err());
    }
}
