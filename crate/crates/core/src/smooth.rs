//! Closed curves `z(t) = Σ_{|n| <= N} a_n e^{int}`, `t ∈ [0, 2π)`.
//!
//! Derivatives and every `∫_0^{2π} |·|² dt` are exact coefficient sums via
//! `∫ |Σ b_n e^{int}|² dt = 2π Σ |b_n|²`. Only the length needs quadrature.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::smooth_table;
use crate::error::{Error, Result};
use crate::fourier;
use crate::polygon::random_in_disc;
use crate::report::{InequalityReport, Sides, TheoremId};
use crate::tolerance::{ACTIVE_MODE_REL, CONSTANT_SPEED_REL, DEFAULT_TOLERANCE, ZERO_MEAN};

const TAU: f64 = 2.0 * PI;

/// A closed curve given by finitely many Fourier coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCurve {
    coeffs: BTreeMap<i64, Complex64>,
}

impl FourierCurve {
    /// Builds a curve; zero coefficients are dropped. At least one mode
    /// `n ≠ 0` must remain.
    pub fn new(coeffs: BTreeMap<i64, Complex64>) -> Result<Self> {
        if coeffs.values().any(|a| !a.re.is_finite() || !a.im.is_finite()) {
            return Err(Error::Format("curve coefficients must be finite".into()));
        }
        let coeffs: BTreeMap<i64, Complex64> = coeffs.into_iter().filter(|(_, a)| a.norm_sqr() > 0.0).collect();
        if coeffs.keys().all(|&n| n == 0) {
            return Err(Error::InvalidParameter("a curve needs a nonzero coefficient with n ≠ 0".into()));
        }
        Ok(FourierCurve { coeffs })
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, Complex64)>) -> Result<Self> {
        Self::new(pairs.into_iter().collect())
    }

    /// `b e^{it}`.
    pub fn circle(b: Complex64) -> Result<Self> {
        Self::from_pairs([(1, b)])
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, Complex64> {
        &self.coeffs
    }

    pub fn coeff(&self, n: i64) -> Complex64 {
        self.coeffs.get(&n).copied().unwrap_or_default()
    }

    /// Truncation degree `N = max |n|`.
    pub fn degree(&self) -> usize {
        self.coeffs.keys().map(|n| n.unsigned_abs() as usize).max().unwrap_or(0)
    }

    pub fn has_zero_mean(&self) -> bool {
        let largest = self.coeffs.values().map(|a| a.norm()).fold(0.0, f64::max);
        self.coeff(0).norm() <= ZERO_MEAN * largest
    }

    /// Coefficients of `z^{(order)}`: `(in)^order a_n`.
    pub fn derivative_coeffs(&self, order: u32) -> BTreeMap<i64, Complex64> {
        self.coeffs.iter().map(|(&n, &a)| (n, Complex64::new(0.0, n as f64).powu(order) * a)).collect()
    }

    /// `z^{(order)}(t)`.
    pub fn eval_derivative(&self, t: f64, order: u32) -> Complex64 {
        self.coeffs
            .iter()
            .map(|(&n, &a)| Complex64::new(0.0, n as f64).powu(order) * a * Complex64::from_polar(1.0, n as f64 * t))
            .sum()
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.eval_derivative(t, 0)
    }

    /// `z^{(order)}` on the uniform grid `t_j = 2πj/samples`.
    pub fn sample(&self, samples: usize, order: u32) -> Vec<Complex64> {
        if samples <= 2 * self.degree() {
            return (0..samples).map(|j| self.eval_derivative(TAU * j as f64 / samples as f64, order)).collect();
        }
        let mut folded = vec![Complex64::new(0.0, 0.0); samples];
        for (n, b) in self.derivative_coeffs(order) {
            folded[n.rem_euclid(samples as i64) as usize] += b;
        }
        let spectrum = fourier::Spectrum::new(folded).expect("nonempty grid");
        fourier::inverse_transform(&spectrum).as_slice().to_vec()
    }

    /// `|z'(t)|` on a uniform grid.
    pub fn speed_samples(&self, samples: usize) -> Vec<f64> {
        self.sample(samples, 1).iter().map(|v| v.norm()).collect()
    }

    /// `max |z'| - min |z'|` relative to the mean speed.
    pub fn speed_deviation(&self, samples: usize) -> f64 {
        let speeds = self.speed_samples(samples);
        let mean = speeds.iter().sum::<f64>() / speeds.len() as f64;
        let dev = speeds.iter().map(|s| (s - mean).abs()).fold(0.0, f64::max);
        if mean > 0.0 {
            dev / mean
        } else {
            f64::INFINITY
        }
    }

    pub fn is_constant_speed(&self) -> bool {
        self.speed_deviation(self.speed_grid()) <= CONSTANT_SPEED_REL
    }

    fn speed_grid(&self) -> usize {
        (16 * self.degree() + 1).next_power_of_two().max(256)
    }

    /// The curve traversed backwards, `t ↦ -t`.
    pub fn reversed(&self) -> Self {
        FourierCurve { coeffs: self.coeffs.iter().map(|(&n, &a)| (-n, a)).collect() }
    }

    pub fn scaled(&self, c: Complex64) -> Self {
        FourierCurve { coeffs: self.coeffs.iter().map(|(&n, &a)| (n, c * a)).collect() }
    }

    pub fn translated(&self, c: Complex64) -> Self {
        let mut coeffs = self.coeffs.clone();
        *coeffs.entry(0).or_default() += c;
        FourierCurve { coeffs }
    }

    /// Adds `eps` to the coefficient of `e^{int}`.
    pub fn perturbed(&self, n: i64, eps: Complex64) -> Self {
        let mut coeffs = self.coeffs.clone();
        *coeffs.entry(n).or_default() += eps;
        FourierCurve { coeffs }
    }

    /// Active modes relative to the largest coefficient.
    pub fn active_modes(&self) -> Vec<i64> {
        let largest = self.coeffs.values().map(|a| a.norm()).fold(0.0, f64::max);
        self.coeffs.iter().filter(|(_, a)| a.norm() > ACTIVE_MODE_REL * largest).map(|(&n, _)| n).collect()
    }
}

/// `∫_0^{2π} |Σ b_n e^{int}|² dt`.
pub fn l2_energy(b: &BTreeMap<i64, Complex64>) -> f64 {
    TAU * b.values().map(|v| v.norm_sqr()).sum::<f64>()
}

/// Power-of-two grid of at least `8N + 1` points, and never fewer than 1024.
fn dense_grid(c: &FourierCurve) -> usize {
    (8 * c.degree() + 1).next_power_of_two().max(1024)
}

/// `L = ∫ |z'(t)| dt` by the periodic trapezoid rule.
pub fn curve_length(c: &FourierCurve) -> f64 {
    curve_length_with(c, dense_grid(c))
}

/// [`curve_length`] on a grid of `samples` points (at least `8N + 1` are used).
pub fn curve_length_with(c: &FourierCurve, samples: usize) -> f64 {
    let samples = samples.max(8 * c.degree() + 1);
    TAU * c.speed_samples(samples).iter().sum::<f64>() / samples as f64
}

/// Signed area `F = π Σ n |a_n|²`.
pub fn curve_area(c: &FourierCurve) -> f64 {
    PI * c.coeffs.iter().map(|(&n, a)| n as f64 * a.norm_sqr()).sum::<f64>()
}

/// Switches for the smooth evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothOptions {
    /// Reparametrize by arclength when the input is not constant speed.
    pub reparametrize: bool,
    /// Truncation degree of the reparametrized curve.
    pub target_degree: usize,
    pub tolerance: f64,
}

impl Default for SmoothOptions {
    fn default() -> Self {
        SmoothOptions { reparametrize: false, target_degree: 64, tolerance: DEFAULT_TOLERANCE }
    }
}

fn require_zero_mean(c: &FourierCurve) -> Result<()> {
    if c.has_zero_mean() {
        Ok(())
    } else {
        Err(Error::Hypothesis(format!("curve has nonzero mean a_0 = {}", c.coeff(0))))
    }
}

/// `Π_{j=1..m} (n² - j²)`, exact in integers for moderate n and m.
fn smooth_weight(n: i64, m: usize) -> f64 {
    (1..=m as i64).map(|j| (n * n - j * j) as f64).product()
}

/// `∫ |z^{(l+1)} + z^{(l-1)}|² dt` for `l >= 1`.
fn paired_energy(c: &FourierCurve, l: u32) -> f64 {
    let hi = c.derivative_coeffs(l + 1);
    let lo = c.derivative_coeffs(l - 1);
    l2_energy(&hi.iter().map(|(n, a)| (*n, a + lo[n])).collect())
}

fn gen_report(
    id: TheoremId,
    c: &FourierCurve,
    m: usize,
    sides: Sides,
    allowed: impl Fn(i64) -> bool,
    tolerance: f64,
) -> InequalityReport {
    let active = c.active_modes();
    let in_class = active.iter().all(|&n| allowed(n));
    InequalityReport::assemble(id, None, Some(m), sides, in_class, active, tolerance)
}

/// For a zero-mean curve and `m >= 1`:
///
/// ```text
/// 0 <= P_m(1) ∫(|ż|² - |z|²) dt + Σ_{l=1}^{m-1} s_{m,l} ∫|z^{(l+1)} + z^{(l-1)}|² dt
/// ```
///
/// with equality exactly for `z = Σ_{1<=|n|<=m} a_n e^{int}`.
pub fn gen_wirtinger(c: &FourierCurve, m: usize, tolerance: f64) -> Result<InequalityReport> {
    let table = smooth_table(m)?;
    require_zero_mean(c)?;
    let first = l2_energy(&c.derivative_coeffs(1)) - l2_energy(&c.derivative_coeffs(0));
    let first_mag = l2_energy(&c.derivative_coeffs(1)) + l2_energy(&c.derivative_coeffs(0));
    let mut direct = table.p_at_one * first;
    let mut magnitude = table.p_at_one.abs() * first_mag;
    for l in 1..m {
        let e = paired_energy(c, l as u32);
        direct += table.s_coeff(l) * e;
        magnitude += table.s_coeff(l).abs() * e;
    }
    let deficit = TAU * c.coeffs.iter().map(|(&n, a)| smooth_weight(n, m) * a.norm_sqr()).sum::<f64>();
    let m_i = m as i64;
    Ok(gen_report(
        TheoremId::GenWirtinger,
        c,
        m,
        Sides::nonnegative(deficit, direct, magnitude),
        |n| n.abs() <= m_i,
        tolerance,
    ))
}

/// The geometric terms of the smooth higher-order isoperimetric inequality.
#[derive(Debug, Clone, PartialEq)]
pub struct GeometricTerms {
    pub length: f64,
    pub area: f64,
    /// `∫_C |(d/ds)^{l-1}(z + (L/2π)² κ)|² ds` for `l = 1..m-1`.
    pub curvature: Vec<f64>,
    /// `∫_C |z - (L/2π) n|² ds`.
    pub normal: f64,
    /// `(1/π)(L² - 4πF) - (2π/L) ∫_C |z - (L/2π) n|² ds`, evaluated literally.
    pub isoperimetric: f64,
    /// The same quantity with `L² - 4πF` split as
    /// `(L² - 2π∫|ż|²) + 4π² Σ (n² - n)|a_n|²`, where the first part is
    /// `-4π²` times the variance of the sampled speed.
    pub isoperimetric_split: f64,
}

/// Evaluates the geometric terms of a constant-speed curve through the
/// `t`-domain identities `z^{(l+1)} + z^{(l-1)} = (L/2π)^{l-1} (d/ds)^{l-1}(z + (L/2π)²κ)`
/// and `z - (L/2π) n = z + i ż`.
pub fn geometric_terms(c: &FourierCurve, m: usize) -> GeometricTerms {
    let samples = dense_grid(c);
    let speeds = c.speed_samples(samples);
    let mean = speeds.iter().sum::<f64>() / samples as f64;
    let variance = speeds.iter().map(|s| (s - mean) * (s - mean)).sum::<f64>() / samples as f64;
    let length = TAU * mean;
    let area = curve_area(c);
    let r = length / TAU;
    let curvature = (1..m).map(|l| r.powi(3 - 2 * l as i32) * paired_energy(c, l as u32)).collect();
    let z = c.derivative_coeffs(0);
    let dz = c.derivative_coeffs(1);
    let shifted: BTreeMap<i64, Complex64> = z.iter().map(|(n, a)| (*n, a + Complex64::i() * dz[n])).collect();
    let shifted_energy = l2_energy(&shifted);
    let normal = r * shifted_energy;
    let isoperimetric = (length * length - 4.0 * PI * area) / PI - normal / r;
    let excess: f64 = c.coeffs.iter().map(|(&n, a)| ((n * n - n) as f64) * a.norm_sqr()).sum();
    let isoperimetric_split = -4.0 * PI * variance + 4.0 * PI * excess - shifted_energy;
    GeometricTerms { length, area, curvature, normal, isoperimetric, isoperimetric_split }
}

/// For a zero-mean, constant-speed, positively oriented curve of length L:
///
/// ```text
/// 0 <= Σ_{l=1}^{m-1} s_{m,l} (L/2π)^{2l-3} ∫_C |(d/ds)^{l-1}(z + (L/2π)² κ)|² ds
///      - (-1)^m (m-1)!(m+1)!/2 · [ (1/π)(L² - 4πF) - (2π/L) ∫_C |z - (L/2π) n|² ds ]
/// ```
///
/// with equality exactly for `z = b e^{it}`. Simplicity of the curve is not checked.
pub fn smooth_isoperimetric(c: &FourierCurve, m: usize, opts: &SmoothOptions) -> Result<InequalityReport> {
    let table = smooth_table(m)?;
    require_zero_mean(c)?;
    let mut notes = vec!["unchecked hypothesis: simple curve".to_string()];
    let curve = if c.is_constant_speed() {
        c.clone()
    } else if opts.reparametrize {
        let out = reparametrize_by_arclength(c, opts.target_degree)?;
        notes.push(format!("reparametrized by arclength to degree {}", opts.target_degree));
        let shift = out.coeff(0);
        if shift != Complex64::new(0.0, 0.0) {
            notes.push(format!("translated by {} to zero arclength mean", -shift));
        }
        out.translated(-shift)
    } else {
        return Err(Error::Hypothesis(format!(
            "curve is not constant speed (relative deviation {:.3e})",
            c.speed_deviation(c.speed_grid())
        )));
    };
    let area = curve_area(&curve);
    if area <= 0.0 {
        return Err(Error::Orientation { area });
    }
    let g = geometric_terms(&curve, m);
    let r = g.length / TAU;
    let mut direct = table.theorem_constant * g.isoperimetric;
    let mut deficit = table.theorem_constant * g.isoperimetric_split;
    let mut magnitude =
        table.theorem_constant.abs() * ((g.length * g.length + 4.0 * PI * area.abs()) / PI + g.normal / r);
    for l in 1..m {
        let term = table.s_coeff(l) * r.powi(2 * l as i32 - 3) * g.curvature[l - 1];
        direct += term;
        deficit += term;
        magnitude += term.abs();
    }
    let mut report = gen_report(
        TheoremId::SmoothIsoperimetric,
        &curve,
        m,
        Sides::nonnegative(deficit, direct, magnitude),
        |n| n == 1,
        opts.tolerance,
    );
    report.notes.extend(notes);
    Ok(report)
}

/// Monotone piecewise-cubic Hermite interpolant (Fritsch–Carlson slopes).
struct Pchip {
    x: Vec<f64>,
    y: Vec<f64>,
    d: Vec<f64>,
}

impl Pchip {
    fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        let n = x.len();
        let h: Vec<f64> = x.windows(2).map(|w| w[1] - w[0]).collect();
        let delta: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
        let mut d = vec![0.0; n];
        d[0] = delta[0];
        d[n - 1] = delta[n - 2];
        for i in 1..n - 1 {
            if delta[i - 1] * delta[i] > 0.0 {
                let w1 = 2.0 * h[i] + h[i - 1];
                let w2 = h[i] + 2.0 * h[i - 1];
                d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
            }
        }
        Pchip { x, y, d }
    }

    fn eval(&self, t: f64) -> f64 {
        let i = match self.x.partition_point(|&v| v <= t) {
            0 => 0,
            p => (p - 1).min(self.x.len() - 2),
        };
        let h = self.x[i + 1] - self.x[i];
        let s = (t - self.x[i]) / h;
        let h00 = (1.0 + 2.0 * s) * (1.0 - s) * (1.0 - s);
        let h10 = s * (1.0 - s) * (1.0 - s);
        let h01 = s * s * (3.0 - 2.0 * s);
        let h11 = s * s * (s - 1.0);
        h00 * self.y[i] + h10 * h * self.d[i] + h01 * self.y[i + 1] + h11 * h * self.d[i + 1]
    }
}

/// Arclength `σ(t) = ∫_0^t |z'|` represented by the Fourier series of the speed.
struct Arclength {
    length: f64,
    /// `σ_n / (in)` for the speed `|z'(t)| = Σ σ_n e^{int}`, indexed by `n = 1..`,
    /// stored as the pairs for `+n` and `-n`, cut after the last non-negligible mode.
    modes: Vec<(Complex64, Complex64)>,
    /// `Σ_n σ_n / (in)` over all kept modes, the value of the series at `t = 0`.
    offset: f64,
}

impl Arclength {
    fn new(c: &FourierCurve, samples: usize) -> Self {
        let speed: Vec<Complex64> = c.speed_samples(samples).into_iter().map(|s| Complex64::new(s, 0.0)).collect();
        let sigma = fourier::forward_transform(&fourier::ComplexSeq::new(speed).expect("nonempty grid"));
        let half = samples as i64 / 2;
        let negligible = 1e-15 * sigma.coeff(0).re;
        let last = (1..half)
            .filter(|&n| sigma.coeff(n).norm().max(sigma.coeff(-n).norm()) > negligible)
            .max()
            .unwrap_or(0);
        let modes: Vec<(Complex64, Complex64)> = (1..=last)
            .map(|n| {
                let i_n = Complex64::new(0.0, n as f64);
                (sigma.coeff(n) / i_n, -sigma.coeff(-n) / i_n)
            })
            .collect();
        let offset = modes.iter().map(|(p, q)| (p + q).re).sum();
        Arclength { length: TAU * sigma.coeff(0).re, modes, offset }
    }

    fn at(&self, t: f64) -> f64 {
        let w = Complex64::from_polar(1.0, t);
        let mut power = w;
        let mut osc = 0.0;
        for (p, q) in &self.modes {
            osc += (p * power + q * power.conj()).re;
            power *= w;
        }
        self.length * t / TAU + osc - self.offset
    }
}

/// Re-expands `c` in the arclength parameter `τ = 2π s / L`, truncated to
/// `target_degree`. The result traces the same curve from the same start
/// point at constant speed `L / 2π`.
pub fn reparametrize_by_arclength(c: &FourierCurve, target_degree: usize) -> Result<FourierCurve> {
    if target_degree < 1 {
        return Err(Error::InvalidParameter("target degree must be at least 1".into()));
    }
    let samples = (16 * target_degree).max(32 * c.degree()).max(512).next_power_of_two();
    let speeds = c.speed_samples(samples);
    let fastest = speeds.iter().cloned().fold(0.0, f64::max);
    let slowest = speeds.iter().cloned().fold(f64::INFINITY, f64::min);
    if fastest == 0.0 || slowest <= 1e-8 * fastest {
        return Err(Error::DegenerateCurve(format!(
            "speed nearly vanishes (min {slowest:.3e}, max {fastest:.3e})"
        )));
    }

    let arc = Arclength::new(c, samples);
    let grid: Vec<f64> = (0..=samples).map(|j| TAU * j as f64 / samples as f64).collect();
    let cumulative: Vec<f64> = grid.iter().map(|&t| arc.at(t)).collect();
    let inverse = Pchip::new(cumulative, grid);

    let points: Vec<Complex64> = (0..samples)
        .map(|j| {
            let target = arc.length * j as f64 / samples as f64;
            let mut t = inverse.eval(target);
            for _ in 0..8 {
                let step = (arc.at(t) - target) / c.eval_derivative(t, 1).norm();
                t -= step;
                if step.abs() < 1e-14 {
                    break;
                }
            }
            c.eval(t)
        })
        .collect();

    let spectrum = fourier::forward_transform(&fourier::ComplexSeq::new(points).expect("nonempty grid"));
    let deg = target_degree.min(samples / 2 - 1) as i64;
    let out = FourierCurve::new((-deg..=deg).map(|n| (n, spectrum.coeff(n))).collect())?;
    let deviation = out.speed_deviation(out.speed_grid());
    if deviation > CONSTANT_SPEED_REL {
        return Err(Error::InvalidParameter(format!(
            "degree {target_degree} is too low for a constant-speed re-expansion (speed deviation {deviation:.3e})"
        )));
    }
    Ok(out)
}

/// Seeded random positively oriented immersed curve: `e^{it}` plus
/// perturbations with `|a_n| <= amplitude / |n|³` on `2 <= |n| <= degree`
/// and `|a_{-1}| <= amplitude`. The curve is immersed whenever
/// `amplitude <= 0.3`.
pub fn random_curve(degree: usize, amplitude: f64, seed: u64) -> Result<FourierCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = BTreeMap::new();
    coeffs.insert(1, Complex64::new(1.0, 0.0));
    coeffs.insert(-1, amplitude * random_in_disc(&mut rng));
    for n in 2..=degree as i64 {
        let r = amplitude / (n * n * n) as f64;
        coeffs.insert(n, r * random_in_disc(&mut rng));
        coeffs.insert(-n, r * random_in_disc(&mut rng));
    }
    FourierCurve::new(coeffs)
}

/// Seeded zero-mean curve supported on `1 <= |n| <= m`.
pub fn random_band_curve(m: usize, seed: u64) -> Result<FourierCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coeffs = BTreeMap::new();
    for n in 1..=m.max(1) as i64 {
        coeffs.insert(n, random_in_disc(&mut rng));
        coeffs.insert(-n, random_in_disc(&mut rng));
    }
    FourierCurve::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn circle_length_and_area() {
        let unit = FourierCurve::circle(c(1.0, 0.0)).unwrap();
        assert!((curve_length(&unit) - TAU).abs() < 1e-12);
        assert!((curve_area(&unit) - PI).abs() < 1e-12);
        let big = FourierCurve::circle(c(0.0, 3.0)).unwrap();
        assert!((curve_length(&big) - 6.0 * PI).abs() < 1e-12);
        assert!((curve_area(&unit.reversed()) + PI).abs() < 1e-12);
    }

    #[test]
    fn area_example() {
        let z = FourierCurve::from_pairs([(1, c(1.0, 0.0)), (3, c(0.2, 0.0))]).unwrap();
        assert!((curve_area(&z) - 1.12 * PI).abs() < 1e-12);
    }

    #[test]
    fn circle_is_equality() {
        let z = FourierCurve::circle(c(0.7, -0.2)).unwrap();
        for m in 1..=5 {
            let g = gen_wirtinger(&z, m, 1e-9).unwrap();
            assert!(g.equality && g.deficit == 0.0, "{g:?}");
            let s = smooth_isoperimetric(&z, m, &SmoothOptions::default()).unwrap();
            assert!(s.equality, "{s:?}");
        }
    }

    #[test]
    fn rejections() {
        let off = FourierCurve::from_pairs([(0, c(1.0, 0.0)), (1, c(1.0, 0.0))]).unwrap();
        assert!(gen_wirtinger(&off, 2, 1e-9).unwrap_err().is_hypothesis());
        let neg = FourierCurve::circle(c(1.0, 0.0)).unwrap().reversed();
        assert!(matches!(
            smooth_isoperimetric(&neg, 2, &SmoothOptions::default()),
            Err(Error::Orientation { .. })
        ));
        let wobbly = FourierCurve::from_pairs([(1, c(1.0, 0.0)), (2, c(0.1, 0.0))]).unwrap();
        assert!(smooth_isoperimetric(&wobbly, 2, &SmoothOptions::default()).unwrap_err().is_hypothesis());
    }

    #[test]
    fn reparametrized_ellipse_is_constant_speed() {
        let z = FourierCurve::from_pairs([(1, c(1.0, 0.0)), (-1, c(0.3, 0.0))]).unwrap();
        let out = reparametrize_by_arclength(&z, 64).unwrap();
        assert!(out.speed_deviation(2049) <= 1e-8);
        assert!((curve_length(&out) - curve_length(&z)).abs() <= 1e-8 * curve_length(&z));
        assert!((curve_area(&out) - curve_area(&z)).abs() <= 1e-8 * curve_area(&z));
    }

    #[test]
    fn reparametrizing_a_circle_is_a_fixed_point() {
        let z = FourierCurve::circle(c(2.0, 1.0)).unwrap();
        let out = reparametrize_by_arclength(&z, 8).unwrap();
        for n in -8..=8 {
            assert!((out.coeff(n) - z.coeff(n)).norm() < 1e-10, "n = {n}");
        }
    }

    #[test]
    fn pchip_is_monotone_and_exact_on_lines() {
        let p = Pchip::new(vec![0.0, 1.0, 2.0, 4.0], vec![0.0, 2.0, 4.0, 8.0]);
        for i in 0..40 {
            let t = i as f64 * 0.1;
            assert!((p.eval(t) - 2.0 * t).abs() < 1e-14);
        }
    }
}
