//! Support functions and the generalized Chernoff inequalities.
//!
//! A support function is a real trigonometric polynomial
//! `h(θ) = Σ_{|n|<=N} a_n e^{inθ}` with `a_{-n} = conj(a_n)`. All operators
//! below are diagonal on the coefficients:
//!
//! | operator | multiplier on `a_n` |
//! |---|---|
//! | `T_k[h](θ) = (1/k) Σ_{m=1}^k h(θ + (2m-1)π/k)` | `β_n`: `(-1)^{n/k}` if `k | n`, else `0` |
//! | `A[h] = h + h''` | `δ_n = 1 - n²` |
//! | `w_k(θ) = Σ_{j=0}^{k-1} h(θ + 2jπ/k)` | `k` if `k | n`, else `0` |
//!
//! Areas follow `F[γ_(j)] = (1/2) ∫ (h^{(j)}² - h^{(j+1)}²) dθ = π Σ n^{2j}(1-n²)|a_n|²`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::polygon::random_in_disc;
use crate::report::{Direction, InequalityReport, Sides, TheoremId};
use crate::tolerance::{ACTIVE_MODE_REL, DEFAULT_TOLERANCE, REALITY};

const TAU: f64 = 2.0 * PI;

/// A real 2π-periodic trigonometric polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct SupportFunction {
    coeffs: BTreeMap<i64, Complex64>,
}

impl SupportFunction {
    /// Validates `a_{-n} = conj(a_n)`; a missing partner counts as zero.
    pub fn new(coeffs: BTreeMap<i64, Complex64>) -> Result<Self> {
        if coeffs.values().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Format("support coefficients must be finite".into()));
        }
        let largest = coeffs.values().map(|a| a.norm()).fold(1.0, f64::max);
        for (&n, &a) in &coeffs {
            let partner = coeffs.get(&-n).copied().unwrap_or_default();
            if (partner - a.conj()).norm() > REALITY * largest {
                return Err(Error::Format(format!(
                    "not a real function: a_{} = {} but a_{} = {}",
                    n, a, -n, partner
                )));
            }
        }
        let mut coeffs = coeffs;
        for n in coeffs.keys().copied().collect::<Vec<_>>() {
            coeffs.entry(-n).or_default();
        }
        Ok(SupportFunction { coeffs })
    }

    /// Builds `h` from `a_0` (real part used) and `a_n` for `n >= 1`.
    pub fn from_nonnegative(modes: impl IntoIterator<Item = (u32, Complex64)>) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for (n, a) in modes {
            let n = n as i64;
            if n == 0 {
                coeffs.insert(0, Complex64::new(a.re, 0.0));
            } else {
                coeffs.insert(n, a);
                coeffs.insert(-n, a.conj());
            }
        }
        Self::new(coeffs)
    }

    /// `h ≡ r`, the support function of a disc of radius r centred at 0.
    pub fn constant(r: f64) -> Self {
        SupportFunction { coeffs: BTreeMap::from([(0, Complex64::new(r, 0.0))]) }
    }

    /// `amplitude · cos(nθ)`.
    pub fn cosine(n: u32, amplitude: f64) -> Self {
        if n == 0 {
            return Self::constant(amplitude);
        }
        let half = Complex64::new(amplitude / 2.0, 0.0);
        SupportFunction { coeffs: BTreeMap::from([(n as i64, half), (-(n as i64), half)]) }
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, Complex64> {
        &self.coeffs
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        self.coeffs.get(&n).copied().unwrap_or_default()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(|n| n.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Pointwise sum `self + other`.
    pub fn add(&self, other: &SupportFunction) -> SupportFunction {
        let mut coeffs = self.coeffs.clone();
        for (&n, &b) in &other.coeffs {
            *coeffs.entry(n).or_default() += b;
        }
        SupportFunction { coeffs }
    }

    pub fn scaled(&self, s: f64) -> SupportFunction {
        self.map_diagonal(|_| s)
    }

    /// Adds `Re(c e^{iθ})`, the support function of a translation by `c`.
    pub fn translated(&self, c: Complex64) -> SupportFunction {
        let mut coeffs = self.coeffs.clone();
        *coeffs.entry(1).or_default() += c / 2.0;
        *coeffs.entry(-1).or_default() += c.conj() / 2.0;
        SupportFunction { coeffs }
    }

    /// Multiplies `a_n` by `f(n)` for real `f`.
    pub fn map_diagonal(&self, f: impl Fn(i64) -> f64) -> SupportFunction {
        SupportFunction { coeffs: self.coeffs.iter().map(|(&n, &a)| (n, a * f(n))).collect() }
    }

    /// `h^{(j)}(θ)`.
    pub fn eval_derivative(&self, theta: f64, j: u32) -> f64 {
        self.coeffs
            .iter()
            .map(|(&n, &a)| {
                (Complex64::new(0.0, n as f64).powu(j) * a * Complex64::from_polar(1.0, n as f64 * theta)).re
            })
            .sum()
    }

    pub fn eval(&self, theta: f64) -> f64 {
        self.eval_derivative(theta, 0)
    }

    /// `h^{(j)}` on the grid `θ_i = 2πi/samples`.
    pub fn sample(&self, samples: usize, j: u32) -> Vec<f64> {
        (0..samples).map(|i| self.eval_derivative(TAU * i as f64 / samples as f64, j)).collect()
    }

    /// `ρ = h + h''` is positive on a uniform grid of `4N + 1` points.
    pub fn convexity_certificate(&self) -> bool {
        let samples = 4 * self.degree() + 1;
        let rho = apply_a(self);
        rho.sample(samples, 0).iter().all(|&v| v > 0.0)
    }

    /// Modes with `|a_n|` above the activity threshold.
    pub fn active_modes(&self) -> Vec<i64> {
        let largest = self.coeffs.values().map(|a| a.norm()).fold(0.0, f64::max);
        self.coeffs.iter().filter(|(_, a)| a.norm() > ACTIVE_MODE_REL * largest).map(|(&n, _)| n).collect()
    }
}

fn check_k(k: usize) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    Ok(())
}

fn check_m(m: usize) -> Result<()> {
    if m < 1 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    Ok(())
}

/// `β_n = (1/k) Σ_{m=1}^k cos(n(2m-1)π/k)` in closed form.
pub fn beta(n: i64, k: usize) -> f64 {
    let k = k as i64;
    if n.rem_euclid(k) != 0 {
        0.0
    } else if (n / k).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `δ_n = 1 - n²`.
pub fn delta(n: i64) -> f64 {
    (1 - n * n) as f64
}

pub fn apply_t_k(h: &SupportFunction, k: usize) -> Result<SupportFunction> {
    check_k(k)?;
    Ok(h.map_diagonal(|n| beta(n, k)))
}

pub fn apply_a(h: &SupportFunction) -> SupportFunction {
    h.map_diagonal(delta)
}

pub fn width_k(h: &SupportFunction, k: usize) -> Result<SupportFunction> {
    check_k(k)?;
    Ok(h.map_diagonal(|n| if n.rem_euclid(k as i64) == 0 { k as f64 } else { 0.0 }))
}

/// `n^{2j}` with `0^0 = 1`.
fn even_power(n: i64, j: usize) -> f64 {
    ((n * n) as f64).powi(j as i32)
}

/// Algebraic area of the j-th locus of curvature centres.
pub fn locus_area(h: &SupportFunction, j: usize) -> f64 {
    PI * h.coeffs.iter().map(|(&n, a)| even_power(n, j) * delta(n) * a.norm_sqr()).sum::<f64>()
}

/// `(1/2) ∫ (h1^{(j)} h2^{(j)} - h1^{(j+1)} h2^{(j+1)}) dθ = π Σ n^{2j}(1-n²) Re(a_n conj(b_n))`.
pub fn mixed_area(h1: &SupportFunction, h2: &SupportFunction, j: usize) -> f64 {
    PI * h1
        .coeffs
        .iter()
        .map(|(&n, a)| even_power(n, j) * delta(n) * (a * h2.coeff(n).conj()).re)
        .sum::<f64>()
}

fn binomial(n: usize, r: usize) -> f64 {
    if r > n {
        return 0.0;
    }
    (0..r).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn sign(e: usize) -> f64 {
    if e.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `∫ h A^p[g] dθ = 2 Σ_{r=0}^{p-1} (-1)^r C(p-1, r) F[h_(r), g_(r)]` for `p >= 1`.
fn area_expansion(h: &SupportFunction, g: &SupportFunction, p: usize) -> (f64, f64) {
    let mut value = 0.0;
    let mut magnitude = 0.0;
    for r in 0..p {
        let term = 2.0 * sign(r) * binomial(p - 1, r) * mixed_area(h, g, r);
        value += term;
        magnitude += term.abs();
    }
    (value, magnitude)
}

/// Both sides of `∫ h A^m[h] dθ = 2 Σ_{r=0}^{m-1} (-1)^r C(m-1, r) F[γ_(r)]`.
/// The left side is a trapezoid sum on a grid fine enough to be exact.
pub fn binomial_area_identity(h: &SupportFunction, m: usize) -> Result<(f64, f64)> {
    check_m(m)?;
    let samples = 4 * h.degree() + 8;
    let am = h.map_diagonal(|n| delta(n).powi(m as i32));
    let left = TAU / samples as f64
        * h.sample(samples, 0).iter().zip(am.sample(samples, 0)).map(|(a, b)| a * b).sum::<f64>();
    let right: f64 = (0..m).map(|r| 2.0 * sign(r) * binomial(m - 1, r) * locus_area(h, r)).sum();
    Ok((left, right))
}

/// `∫ h (T_k - A)^m [h] dθ >= 0`, with equality exactly when `h` is the
/// support function of a circle.
pub fn chernoff_core(h: &SupportFunction, k: usize, m: usize, tolerance: f64) -> Result<InequalityReport> {
    check_k(k)?;
    check_m(m)?;
    let deficit = TAU
        * h.coeffs
            .iter()
            .map(|(&n, a)| (beta(n, k) - delta(n)).powi(m as i32) * a.norm_sqr())
            .sum::<f64>();
    // Binomial expansion Σ_j C(m,j)(-1)^{m-j} ∫ h T^j A^{m-j} h, term by term.
    let mut direct = 0.0;
    let mut magnitude = 0.0;
    for j in 0..=m {
        let term = binomial(m, j)
            * sign(m - j)
            * TAU
            * h.coeffs
                .iter()
                .map(|(&n, a)| beta(n, k).powi(j as i32) * delta(n).powi((m - j) as i32) * a.norm_sqr())
                .sum::<f64>();
        direct += term;
        magnitude += term.abs();
    }
    Ok(circle_report(
        TheoremId::ChernoffCore,
        h,
        k,
        m,
        Sides::nonnegative(deficit, direct, magnitude),
        tolerance,
    ))
}

fn circle_report(
    id: TheoremId,
    h: &SupportFunction,
    k: usize,
    m: usize,
    sides: Sides,
    tolerance: f64,
) -> InequalityReport {
    let active = h.active_modes();
    let in_class = active.iter().all(|n| n.abs() <= 1);
    InequalityReport::assemble(id, Some(k), Some(m), sides, in_class, active, tolerance)
}

/// Switches for [`chernoff_theorem`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChernoffOptions {
    /// Record convexity certificates of `h`, `T_k h` and `T_k² h` in the notes.
    pub certify_convexity: bool,
    pub tolerance: f64,
}

impl Default for ChernoffOptions {
    fn default() -> Self {
        ChernoffOptions { certify_convexity: false, tolerance: DEFAULT_TOLERANCE }
    }
}

/// The width side of the theorem.
///
/// Odd m: `(1/k) ∫_0^{π/k} w_k(θ) w_k(θ + π/k) dθ`.
/// Even m: `(1/2k) ∫_0^{2π/k} w_k(θ)² dθ`.
/// Both by the trapezoid rule on a grid that integrates them exactly.
pub fn width_term(h: &SupportFunction, k: usize, m: usize) -> Result<f64> {
    check_k(k)?;
    check_m(m)?;
    let w = width_k(h, k)?;
    let kf = k as f64;
    let samples = 2 * h.degree() + 8;
    if m % 2 == 1 {
        let step = PI / kf / samples as f64;
        let sum: f64 = (0..samples)
            .map(|i| {
                let t = i as f64 * step;
                w.eval(t) * w.eval(t + PI / kf)
            })
            .sum();
        Ok(sum * step / kf)
    } else {
        let step = TAU / kf / samples as f64;
        let sum: f64 = (0..samples).map(|i| w.eval(i as f64 * step).powi(2)).sum();
        Ok(sum * step / (2.0 * kf))
    }
}

/// The geometric form of `∫ h (T_k - A)^m [h] >= 0`:
///
/// ```text
/// -(-1)^m Σ_r (-1)^r C(m-1,r) F[γ_(r)]
///   - Σ_{j=1}^{m-1} (-1)^{m-j} C(m,j) Σ_r (-1)^r C(m-1-j,r) F[γ_(r), (T_k^j γ)_(r)]
/// <= width term
/// ```
///
/// where `T_k^j` is `T_k` for odd j and `T_k²` for even j. The report's
/// deficit is twice `rhs - lhs`, i.e. `∫ h (T_k - A)^m [h]`.
pub fn chernoff_theorem(h: &SupportFunction, k: usize, m: usize, opts: &ChernoffOptions) -> Result<InequalityReport> {
    check_k(k)?;
    check_m(m)?;
    let t1 = apply_t_k(h, k)?;
    let t2 = apply_t_k(&t1, k)?;

    let (own, mut magnitude) = area_expansion(h, h, m);
    let mut area_side = sign(m) * own;
    for j in 1..m {
        let tj = if j % 2 == 1 { &t1 } else { &t2 };
        let (mixed, mag) = area_expansion(h, tj, m - j);
        area_side += sign(m - j) * binomial(m, j) * mixed;
        magnitude += binomial(m, j) * mag;
    }
    let lhs = -area_side / 2.0;
    let rhs = width_term(h, k, m)?;
    let deficit = 2.0 * (rhs - lhs);
    magnitude += 2.0 * rhs.abs();
    let sides = Sides { lhs, rhs, direction: Direction::LessEqual, deficit, direct: deficit, magnitude };
    let mut report = circle_report(TheoremId::ChernoffTheorem, h, k, m, sides, opts.tolerance);
    if opts.certify_convexity {
        for (name, f) in [("h", h), ("T_k h", &t1), ("T_k^2 h", &t2)] {
            report.notes.push(format!("convexity certificate for {name}: {}", f.convexity_certificate()));
        }
    }
    Ok(report)
}

/// `γ_(j)(θ) = i^j (h^{(j)} + i h^{(j+1)}) e^{iθ}`; `j = 0` is the curve
/// `h n + h' t` itself.
pub fn support_curve_points(h: &SupportFunction, samples: usize, j: u32) -> Result<Vec<Complex64>> {
    if samples < 3 {
        return Err(Error::InvalidParameter(format!("need at least 3 samples, got {samples}")));
    }
    let ij = Complex64::i().powu(j);
    Ok((0..samples)
        .map(|s| {
            let theta = TAU * s as f64 / samples as f64;
            ij * Complex64::new(h.eval_derivative(theta, j), h.eval_derivative(theta, j + 1))
                * Complex64::from_polar(1.0, theta)
        })
        .collect())
}

/// The j-th locus of curvature centres of the curve with support function `base`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocusCurve {
    pub base: SupportFunction,
    pub order: u32,
}

impl LocusCurve {
    pub fn points(&self, samples: usize) -> Result<Vec<Complex64>> {
        support_curve_points(&self.base, samples, self.order)
    }

    pub fn area(&self) -> f64 {
        locus_area(&self.base, self.order as usize)
    }
}

/// Seeded support function `1 + Σ_{1<=n<=degree} (a_n e^{inθ} + c.c.)` with
/// `|a_n| <= amplitude / n⁴` for `n >= 2`. For `amplitude <= 0.5` the
/// radius of curvature stays positive.
pub fn random_support(degree: usize, amplitude: f64, seed: u64) -> Result<SupportFunction> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut modes = vec![(0u32, Complex64::new(1.0, 0.0))];
    for n in 1..=degree as u32 {
        let r = if n == 1 { amplitude } else { amplitude / (n as f64).powi(4) };
        modes.push((n, r * random_in_disc(&mut rng)));
    }
    SupportFunction::from_nonnegative(modes)
}
