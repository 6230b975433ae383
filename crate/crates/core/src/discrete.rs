//! Evaluators for the discrete inequalities on k-gons.
//!
//! Each inequality here is a polygonal form, hence diagonal in the Fourier
//! basis: its deficit is `k Σ_ν w(ν) |ζ_ν|²` for an explicit per-mode weight
//! `w`. The reported `deficit` sums that weight written as a product of sines,
//! which keeps it accurate when the displayed terms are large and nearly
//! cancel. The displayed expression itself, built from vertex-domain norms,
//! is reported next to it as `direct`.
//!
//! Notation: `λ_j = 4 sin²(jπ/k)`, `s = sin(π/k)`, `c = cos(π/k)`,
//! `t = ż` (tangents), `κ = τ z̈` (curvature vectors),
//! `X = S - 4 tan(π/k) F` (isoperimetric deficit),
//! `A = ‖t - 2i s e^{iπ/k} z‖²`.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::coeff::{check_order, discrete_table, max_order, DiscreteTable};
use crate::error::{Error, Result};
use crate::fourier::{self, cyclic_shift, derivative, difference_symbol, ComplexSeq, Spectrum};
use crate::polygon::{self, Polygon};
use crate::report::{Bound, BoundKind, Direction, InequalityReport, Sides, TheoremId};
use crate::tolerance::{ACTIVE_MODE_REL, DEFAULT_TOLERANCE, EQUILATERAL_REL};

/// Evaluator switches shared by all discrete inequalities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    /// Subtract the centroid instead of rejecting off-centre input.
    pub auto_recenter: bool,
    /// Relative slack for `holds`.
    pub tolerance: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { auto_recenter: false, tolerance: DEFAULT_TOLERANCE }
    }
}

impl EvalOptions {
    pub fn recentering() -> Self {
        EvalOptions { auto_recenter: true, ..Self::default() }
    }

    pub fn with_tolerance(self, tolerance: f64) -> Self {
        EvalOptions { tolerance, ..self }
    }
}

/// `sin(nπ/k)`, exactly zero when k divides n.
fn sin_pi(n: i64, k: usize) -> f64 {
    let k = k as i64;
    let r = n.rem_euclid(2 * k);
    if r == 0 || r == k {
        0.0
    } else {
        (r as f64 * PI / k as f64).sin()
    }
}

/// `λ_ν - λ_j = 4 sin((ν-j)π/k) sin((ν+j)π/k)`.
fn symbol_gap(nu: i64, j: i64, k: usize) -> f64 {
    4.0 * sin_pi(nu - j, k) * sin_pi(nu + j, k)
}

/// `Q_m(λ_ν)` as a product of symbol gaps.
fn q_weight(nu: i64, m: usize, k: usize) -> f64 {
    (1..=m as i64).map(|j| symbol_gap(nu, j, k)).product()
}

/// Per-mode weight of `X`.
fn x_weight(nu: i64, k: usize) -> f64 {
    4.0 * sin_pi(nu, k) * sin_pi(nu - 1, k) / (PI / k as f64).cos()
}

/// Per-mode weight of `A`: `|ω_ν - ω_1|²`.
fn a_weight(nu: i64, k: usize) -> f64 {
    let s = sin_pi(nu - 1, k);
    4.0 * s * s
}

/// Everything the evaluators need about a (possibly recentred) polygon.
struct Prepared {
    polygon: Polygon,
    spectrum: Spectrum,
    k: usize,
    notes: Vec<String>,
}

impl Prepared {
    fn new(p: &Polygon, opts: &EvalOptions) -> Result<Self> {
        let mut notes = Vec::new();
        let polygon = if p.has_zero_centroid() {
            p.clone()
        } else if opts.auto_recenter {
            notes.push(format!("recentred: centroid was {}", polygon::centroid(p)));
            polygon::recenter(p)
        } else {
            return Err(Error::Hypothesis(format!(
                "centroid {} is not zero (pass auto_recenter to subtract it)",
                polygon::centroid(p)
            )));
        };
        let spectrum = polygon.spectrum();
        Ok(Prepared { k: polygon.k(), polygon, spectrum, notes })
    }

    fn unchecked(p: &Polygon) -> Self {
        Prepared { polygon: p.clone(), spectrum: p.spectrum(), k: p.k(), notes: Vec::new() }
    }

    /// `k Σ_ν w(ν) |ζ_ν|²`.
    fn modal(&self, w: impl Fn(i64) -> f64) -> f64 {
        self.k as f64 * self.spectrum.weighted_energy(|nu| w(nu as i64))
    }

    fn active(&self) -> Vec<i64> {
        self.spectrum.active_modes(ACTIVE_MODE_REL).into_iter().map(|nu| nu as i64).collect()
    }

    fn z(&self) -> &ComplexSeq {
        self.polygon.vertices()
    }

    /// `‖z^{(j)}‖²` for `j = 0..=top`, by direct differencing.
    fn derivative_norms(&self, top: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(top + 1);
        let mut cur = self.z().clone();
        for j in 0..=top {
            if j > 0 {
                cur = derivative(&cur, 1);
            }
            out.push(cur.norm_sqr());
        }
        out
    }

    fn finish(self, mut report: InequalityReport) -> InequalityReport {
        report.notes.extend(self.notes);
        report
    }
}

/// `true` when every active mode satisfies `allowed`.
fn within(active: &[i64], allowed: impl Fn(i64) -> bool) -> bool {
    active.iter().all(|&nu| allowed(nu))
}

/// Modes `ν ≤ b` or `ν ≥ k - b`, i.e. `|ν| ≤ b` under `ζ_{k-l} = ζ_{-l}`.
fn low_band(b: usize, k: usize) -> impl Fn(i64) -> bool {
    move |nu| nu <= b as i64 || nu >= k as i64 - b as i64
}

fn lambda1(k: usize) -> f64 {
    difference_symbol(1, k)
}

/// `‖τ z^{(l+1)} + λ_1 z^{(l-1)}‖²` for `l >= 1`.
fn s_form_term(z: &ComplexSeq, l: usize, l1: f64) -> f64 {
    let shifted = cyclic_shift(&derivative(z, l + 1), 1);
    (&shifted + &(l1 * &derivative(z, l - 1))).norm_sqr()
}

/// `‖D^{l-1}(κ + λ_1 z)‖²` for `l >= 1`.
fn curvature_term(base: &ComplexSeq, l: usize) -> f64 {
    derivative(base, l - 1).norm_sqr()
}

/// `A = ‖t - 2i s e^{iπ/k} z‖²`, literally.
fn a_direct(p: &Polygon) -> f64 {
    let k = p.k();
    let s = (PI / k as f64).sin();
    let rot = Complex64::new(0.0, 2.0 * s) * Complex64::from_polar(1.0, PI / k as f64);
    let t = polygon::tangent_vectors(p);
    (&t - &(rot * p.vertices())).norm_sqr()
}

/// `S - 4 tan(π/k) F` literally, and the sum of the magnitudes of its two terms.
fn x_direct(p: &Polygon) -> (f64, f64) {
    let tan = (PI / p.k() as f64).tan();
    let s = polygon::squared_side_sum(p);
    let f = 4.0 * tan * polygon::signed_area(p);
    (s - f, s + f.abs())
}

/// `Σ_j c_{m,j} ‖z^{(j)}‖² >= 0` for a zero-centroid k-gon and `1 <= m <= ⌊k/2⌋`.
///
/// Equality exactly when `ζ_ν = 0` for `m < ν < k - m`.
pub fn wirtinger_m(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let table = discrete_table(m, p.k())?;
    let prep = Prepared::new(p, opts)?;
    let norms = prep.derivative_norms(m);
    let direct: f64 = table.c.iter().zip(&norms).map(|(c, n)| c * n).sum();
    let magnitude: f64 = table.c.iter().zip(&norms).map(|(c, n)| c.abs() * n).sum();
    Ok(wirtinger_family(TheoremId::WirtingerM, &table, prep, direct, magnitude, opts))
}

/// `Σ_j λ_{m,j} (‖z^{(j+1)}‖² - λ_1 ‖z^{(j)}‖²) >= 0`; same form as [`wirtinger_m`].
pub fn wirtinger_lambda_form(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let table = discrete_table(m, p.k())?;
    let prep = Prepared::new(p, opts)?;
    let l1 = table.lambda1();
    let norms = prep.derivative_norms(m);
    let mut direct = 0.0;
    let mut magnitude = 0.0;
    for (j, lam) in table.lambda.iter().enumerate() {
        direct += lam * (norms[j + 1] - l1 * norms[j]);
        magnitude += lam.abs() * (norms[j + 1] + l1 * norms[j]);
    }
    Ok(wirtinger_family(TheoremId::WirtingerLambdaForm, &table, prep, direct, magnitude, opts))
}

/// `0 <= S_{m,0}(‖ż‖² - λ_1‖z‖²) + Σ_{l=1}^{m-1} S_{m,l} ‖τ z^{(l+1)} + λ_1 z^{(l-1)}‖²`.
pub fn wirtinger_s_form(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let table = discrete_table(m, p.k())?;
    let prep = Prepared::new(p, opts)?;
    let l1 = table.lambda1();
    let norms = prep.derivative_norms(1);
    let s0 = table.s_cap[0];
    let mut direct = s0 * (norms[1] - l1 * norms[0]);
    let mut magnitude = s0.abs() * (norms[1] + l1 * norms[0]);
    for l in 1..m {
        let term = s_form_term(prep.z(), l, l1);
        direct += table.s_cap[l] * term;
        magnitude += table.s_cap[l].abs() * term;
    }
    Ok(wirtinger_family(TheoremId::WirtingerSForm, &table, prep, direct, magnitude, opts))
}

fn wirtinger_family(
    id: TheoremId,
    table: &DiscreteTable,
    prep: Prepared,
    direct: f64,
    magnitude: f64,
    opts: &EvalOptions,
) -> InequalityReport {
    let (m, k) = (table.m, table.k);
    let deficit = prep.modal(|nu| q_weight(nu, m, k));
    let active = prep.active();
    let in_class = within(&active, low_band(m, k));
    let report = InequalityReport::assemble(
        id,
        Some(k),
        Some(m),
        Sides::nonnegative(deficit, direct, magnitude),
        in_class,
        active,
        opts.tolerance,
    );
    prep.finish(report)
}

fn check_stability_order(m: usize, k: usize) -> Result<()> {
    check_order(m, k, max_order(k).saturating_sub(1))
}

/// `Σ C_{m,l}‖z^{(l)}‖² <= λ_{m+1}^{-1} Σ C_{m,l}‖z^{(l+1)}‖²` for `1 <= m <= ⌊k/2⌋ - 1`.
///
/// Equality exactly when the spectrum lies in `0 < |ν| <= m + 1`.
pub fn stability_c(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let k = p.k();
    check_stability_order(m, k)?;
    let table = discrete_table(m, k)?;
    let prep = Prepared::new(p, opts)?;
    let lam_next = difference_symbol(m as i64 + 1, k);
    let norms = prep.derivative_norms(m + 1);
    let lhs_direct: f64 = table.c.iter().zip(&norms).map(|(c, n)| c * n).sum();
    let rhs_direct: f64 = table.c.iter().zip(&norms[1..]).map(|(c, n)| c * n).sum::<f64>() / lam_next;
    let magnitude: f64 = table
        .c
        .iter()
        .enumerate()
        .map(|(l, c)| c.abs() * (norms[l] + norms[l + 1] / lam_next))
        .sum();
    Ok(stability_family(TheoremId::StabilityC, m, prep, rhs_direct - lhs_direct, magnitude, opts))
}

/// The same comparison for the `S_{m,l}` form:
///
/// ```text
/// S_{m,0}(‖ż‖² - λ_1‖z‖²) + Σ_{l=1}^{m-1} S_{m,l}‖τz^{(l+1)} + λ_1 z^{(l-1)}‖²
///   <= λ_{m+1}^{-1} [ λ_1 S_{m,0}(‖ż‖² - λ_1‖z‖²) + Σ_{l=0}^{m-1} S_{m,l}‖τz^{(l+2)} + λ_1 z^{(l)}‖² ]
/// ```
pub fn stability_s(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let k = p.k();
    check_stability_order(m, k)?;
    let table = discrete_table(m, k)?;
    let prep = Prepared::new(p, opts)?;
    let l1 = table.lambda1();
    let lam_next = difference_symbol(m as i64 + 1, k);
    let norms = prep.derivative_norms(1);
    let s0 = table.s_cap[0];
    let wirt = norms[1] - l1 * norms[0];
    let wirt_mag = norms[1] + l1 * norms[0];

    let mut lhs_direct = s0 * wirt;
    let mut magnitude = s0.abs() * wirt_mag;
    for l in 1..m {
        let term = s_form_term(prep.z(), l, l1);
        lhs_direct += table.s_cap[l] * term;
        magnitude += table.s_cap[l].abs() * term;
    }
    let mut bracket = l1 * s0 * wirt;
    let mut bracket_mag = l1 * s0.abs() * wirt_mag;
    for l in 0..m {
        // ‖τ z^{(l+2)} + λ_1 z^{(l)}‖² is the s-form term at index l + 1.
        let term = s_form_term(prep.z(), l + 1, l1);
        bracket += table.s_cap[l] * term;
        bracket_mag += table.s_cap[l].abs() * term;
    }
    let rhs_direct = bracket / lam_next;
    magnitude += bracket_mag / lam_next;
    Ok(stability_family(TheoremId::StabilityS, m, prep, rhs_direct - lhs_direct, magnitude, opts))
}

fn stability_family(
    id: TheoremId,
    m: usize,
    prep: Prepared,
    direct: f64,
    magnitude: f64,
    opts: &EvalOptions,
) -> InequalityReport {
    let k = prep.k;
    let lam_next = difference_symbol(m as i64 + 1, k);
    let lhs = prep.modal(|nu| q_weight(nu, m, k));
    let rhs = prep.modal(|nu| difference_symbol(nu, k) * q_weight(nu, m, k) / lam_next);
    let deficit = prep.modal(|nu| q_weight(nu, m + 1, k) / lam_next);
    let active = prep.active();
    let in_class = within(&active, low_band(m + 1, k));
    let sides = Sides { lhs, rhs, direction: Direction::LessEqual, deficit, direct, magnitude };
    let report = InequalityReport::assemble(id, Some(k), Some(m), sides, in_class, active, opts.tolerance);
    prep.finish(report)
}

/// Both sides of `‖ż‖² - λ_1‖z‖² = 2c²(S - 4 tan(π/k) F) - ‖ż - 2i s e^{iπ/k} z‖²`,
/// evaluated literally. No centroid hypothesis.
pub fn chakerian_identity(p: &Polygon) -> (f64, f64) {
    let k = p.k();
    let c = (PI / k as f64).cos();
    let dz = polygon::tangent_vectors(p).norm_sqr();
    let left = dz - lambda1(k) * p.vertices().norm_sqr();
    let (x, _) = x_direct(p);
    let right = 2.0 * c * c * x - a_direct(p);
    (left, right)
}

/// Sum of the magnitudes of the terms on either side of [`chakerian_identity`].
pub fn chakerian_identity_magnitude(p: &Polygon) -> f64 {
    let k = p.k();
    let c = (PI / k as f64).cos();
    let dz = polygon::tangent_vectors(p).norm_sqr();
    let (_, x_mag) = x_direct(p);
    dz + lambda1(k) * p.vertices().norm_sqr() + 2.0 * c * c * x_mag + a_direct(p)
}

/// `S - 4 tan(π/k) F >= 2 tan²(π/k) ‖z + i e^{-iπ/k} t / (2 sin(π/k))‖²`.
///
/// Equality exactly for `ζ_1 R_1 + ζ_{k-1} R_{k-1}`.
pub fn chakerian_v1(p: &Polygon, opts: &EvalOptions) -> Result<InequalityReport> {
    chakerian(p, opts, TheoremId::ChakerianV1)
}

/// `S - 4 tan(π/k) F >= 2 sin²(π/k) ‖z + i e^{-iπ/k} t / (2 sin(π/k))‖²`.
///
/// Equality exactly for positively oriented regular k-gons.
pub fn chakerian_v2(p: &Polygon, opts: &EvalOptions) -> Result<InequalityReport> {
    chakerian(p, opts, TheoremId::ChakerianV2)
}

fn chakerian(p: &Polygon, opts: &EvalOptions, id: TheoremId) -> Result<InequalityReport> {
    let prep = Prepared::new(p, opts)?;
    let k = prep.k;
    let s = (PI / k as f64).sin();
    let c = (PI / k as f64).cos();
    let tan = s / c;

    let lhs = prep.modal(|nu| x_weight(nu, k));
    let a = prep.modal(|nu| a_weight(nu, k));
    let j0 = prep.modal(|nu| symbol_gap(nu, 1, k));

    // ‖z + i e^{-iπ/k} t/(2s)‖², literally.
    let rot = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, -PI / k as f64) / (2.0 * s);
    let t = polygon::tangent_vectors(&prep.polygon);
    let shifted_norm = (prep.z() + &(rot * &t)).norm_sqr();
    let (x_lit, x_mag) = x_direct(&prep.polygon);

    let v1 = id == TheoremId::ChakerianV1;
    let (factor, rhs, deficit) = if v1 {
        (2.0 * tan * tan, a / (2.0 * c * c), j0 / (2.0 * c * c))
    } else {
        (2.0 * s * s, a / 2.0, j0 / (2.0 * c * c) + tan * tan * a / 2.0)
    };
    let allowed = |nu: i64| nu == 1 || (v1 && nu == k as i64 - 1);
    let direct = x_lit - factor * shifted_norm;
    let magnitude = x_mag + factor * shifted_norm;
    let active = prep.active();
    let in_class = within(&active, allowed) && !active.is_empty();
    let sides = Sides { lhs, rhs, direction: Direction::GreaterEqual, deficit, direct, magnitude };
    let mut report = InequalityReport::assemble(id, Some(k), None, sides, in_class, active, opts.tolerance);
    let area = polygon::signed_area(&prep.polygon);
    if report.equality && area.abs() <= 1e-12 * polygon::squared_side_sum(&prep.polygon) {
        report = report.with_note("equality-class member with zero signed area (degenerate)");
    }
    Ok(prep.finish(report))
}

/// `0 <= S_{m,0}(2c² X - A) + Σ_{l=1}^{m-1} S_{m,l} ‖D^{l-1}(κ + λ_1 z)‖²`.
///
/// The report's bound is the resulting estimate of `X`: a lower bound for
/// odd m and an upper bound for even m.
pub fn isoperimetric_higher(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    let table = discrete_table(m, p.k())?;
    let prep = Prepared::new(p, opts)?;
    let k = prep.k;
    let c = (PI / k as f64).cos();
    let l1 = table.lambda1();
    let s0 = table.s_cap[0];

    let (x_lit, x_mag) = x_direct(&prep.polygon);
    let a_lit = a_direct(&prep.polygon);
    let kappa = polygon::curvature_vectors(&prep.polygon);
    let base = &kappa + &(l1 * prep.z());
    let mut direct = s0 * (2.0 * c * c * x_lit - a_lit);
    let mut magnitude = s0.abs() * (2.0 * c * c * x_mag + a_lit);
    for l in 1..m {
        let term = curvature_term(&base, l);
        direct += table.s_cap[l] * term;
        magnitude += table.s_cap[l].abs() * term;
    }

    let deficit = prep.modal(|nu| q_weight(nu, m, k));
    let x = prep.modal(|nu| x_weight(nu, k));
    let a = prep.modal(|nu| a_weight(nu, k));
    let b = prep.modal(|nu| {
        let lam = difference_symbol(nu, k);
        let gap = symbol_gap(nu, 1, k);
        (1..m).map(|l| table.s_cap[l] * lam.powi(l as i32 - 1) * gap * gap).sum::<f64>()
    });
    let bound = Bound {
        kind: if m % 2 == 1 { BoundKind::Lower } else { BoundKind::Upper },
        quantity: "S - 4 tan(pi/k) F".into(),
        value: (a - b / s0) / (2.0 * c * c),
        actual: x,
    };

    let active = prep.active();
    let in_class = within(&active, low_band(m, k));
    let report = InequalityReport::assemble(
        TheoremId::IsoperimetricHigher,
        Some(k),
        Some(m),
        Sides::nonnegative(deficit, direct, magnitude),
        in_class,
        active,
        opts.tolerance,
    )
    .with_bound(bound);
    Ok(prep.finish(report))
}

/// `L² >= 4k tan(π/k) |F|` for an equilateral k-gon.
///
/// Equality exactly for regular k-gons. No centroid hypothesis.
pub fn equilateral_bound(p: &Polygon, opts: &EvalOptions) -> Result<InequalityReport> {
    let k = p.k();
    let sides = polygon::side_lengths(p);
    let longest = sides.iter().cloned().fold(0.0, f64::max);
    let shortest = sides.iter().cloned().fold(f64::INFINITY, f64::min);
    if longest - shortest > EQUILATERAL_REL * longest {
        return Err(Error::Hypothesis(format!(
            "polygon is not equilateral (side lengths range over [{shortest}, {longest}])"
        )));
    }
    let prep = Prepared::unchecked(&polygon::recenter(p));
    let tan = (PI / k as f64).tan();
    let l = polygon::perimeter(p);
    let f = polygon::signed_area(p);
    let lhs = l * l;
    let rhs = 4.0 * k as f64 * tan * f.abs();
    // k X for the positively oriented copy, less the Cauchy-Schwarz gap k S - L².
    let oriented = if f >= 0.0 {
        prep.modal(|nu| x_weight(nu, k))
    } else {
        prep.modal(|nu| x_weight(k as i64 - nu, k))
    };
    let deficit = k as f64 * oriented - polygon::cauchy_schwarz_gap(p);
    let active: Vec<i64> = prep.active().into_iter().filter(|&nu| nu != 0).collect();
    let in_class = active.len() == 1 && (active[0] == 1 || active[0] == k as i64 - 1);
    let sides = Sides { lhs, rhs, direction: Direction::GreaterEqual, deficit, direct: lhs - rhs, magnitude: lhs + rhs };
    Ok(InequalityReport::assemble(TheoremId::EquilateralBound, Some(k), None, sides, in_class, active, opts.tolerance))
}

/// For even `m <= ⌊k/2⌋` and a zero-centroid k-gon:
///
/// ```text
/// 2c²(L² - 4k tan(π/k) F) <= k (A - S_{m,0}^{-1} Σ_{l=1}^{m-1} S_{m,l} ‖D^{l-1}(κ + λ_1 z)‖²)
/// ```
///
/// Equality exactly for `z = ζ_ν R_ν` with `0 < |ν| <= m`.
pub fn length_form_even(p: &Polygon, m: usize, opts: &EvalOptions) -> Result<InequalityReport> {
    if m % 2 == 1 {
        return Err(Error::InvalidParameter(format!("the length form needs an even order, got m = {m}")));
    }
    let table = discrete_table(m, p.k())?;
    let prep = Prepared::new(p, opts)?;
    let k = prep.k;
    let kf = k as f64;
    let c = (PI / kf).cos();
    let tan = (PI / kf).tan();
    let l1 = table.lambda1();
    let s0 = table.s_cap[0];

    let len = polygon::perimeter(&prep.polygon);
    let f = polygon::signed_area(&prep.polygon);
    let lhs_direct = 2.0 * c * c * (len * len - 4.0 * kf * tan * f);
    let kappa = polygon::curvature_vectors(&prep.polygon);
    let base = &kappa + &(l1 * prep.z());
    let b_lit: f64 = (1..m).map(|l| table.s_cap[l] * curvature_term(&base, l)).sum();
    let b_mag: f64 = (1..m).map(|l| table.s_cap[l].abs() * curvature_term(&base, l)).sum();
    let a_lit = a_direct(&prep.polygon);
    let rhs_direct = kf * (a_lit - b_lit / s0);
    let magnitude = 2.0 * c * c * (len * len + 4.0 * kf * tan * f.abs()) + kf * (a_lit + b_mag / s0.abs());

    let a = prep.modal(|nu| a_weight(nu, k));
    let b = prep.modal(|nu| {
        let lam = difference_symbol(nu, k);
        let gap = symbol_gap(nu, 1, k);
        (1..m).map(|l| table.s_cap[l] * lam.powi(l as i32 - 1) * gap * gap).sum::<f64>()
    });
    let x = prep.modal(|nu| x_weight(nu, k));
    let gap = polygon::cauchy_schwarz_gap(&prep.polygon);
    let rhs = kf * (a - b / s0);
    let lhs = 2.0 * c * c * (kf * x - gap);
    let higher = prep.modal(|nu| q_weight(nu, m, k));
    let deficit = kf * higher / s0.abs() + 2.0 * c * c * gap;

    let active: Vec<i64> = prep.active().into_iter().filter(|&nu| nu != 0).collect();
    let in_class = active.len() == 1 && low_band(m, k)(active[0]);
    let sides = Sides {
        lhs,
        rhs,
        direction: Direction::LessEqual,
        deficit,
        direct: rhs_direct - lhs_direct,
        magnitude,
    };
    let report =
        InequalityReport::assemble(TheoremId::LengthFormEven, Some(k), Some(m), sides, in_class, active, opts.tolerance);
    Ok(prep.finish(report))
}

/// Outcome of [`sparse_mode_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SparseModeCheck {
    /// All correlations `c_n`, `n ≠ 0`, are within the threshold.
    pub sparse: bool,
    /// Number of coefficients with modulus above the threshold.
    pub above_threshold: usize,
    /// Largest `|c_n|` over `n ≠ 0`.
    pub max_correlation: f64,
}

/// Correlations `c_n = Σ_{p-q=n} a_p conj(a_q)` of a finite coefficient map.
pub fn correlations(a: &BTreeMap<i64, Complex64>) -> BTreeMap<i64, Complex64> {
    let mut out = BTreeMap::new();
    for (&p, &ap) in a {
        for (&q, &aq) in a {
            *out.entry(p - q).or_insert(Complex64::new(0.0, 0.0)) += ap * aq.conj();
        }
    }
    out
}

/// Tests whether every off-diagonal correlation of `a` vanishes, which
/// forces at most one nonzero coefficient.
pub fn sparse_mode_check(a: &BTreeMap<i64, Complex64>, threshold: f64) -> SparseModeCheck {
    let max_correlation = correlations(a)
        .into_iter()
        .filter(|&(n, _)| n != 0)
        .map(|(_, c)| c.norm())
        .fold(0.0, f64::max);
    SparseModeCheck {
        sparse: max_correlation <= threshold,
        above_threshold: a.values().filter(|v| v.norm() > threshold).count(),
        max_correlation,
    }
}

/// The spectral form of the `m`-th order Wirtinger deficit, summed over
/// `m < ν < k - m` with each weight written as `Π_j (|1-ω_ν|² - |1-ω_j|²)`.
pub fn wirtinger_spectral_sum(spectrum: &Spectrum, m: usize) -> f64 {
    let k = spectrum.k();
    let mut total = 0.0;
    for nu in m + 1..k.saturating_sub(m) {
        let w = fourier::root_of_unity(nu as i64, k);
        let lam = (Complex64::new(1.0, 0.0) - w).norm_sqr();
        let weight: f64 = (1..=m)
            .map(|j| lam - (Complex64::new(1.0, 0.0) - fourier::root_of_unity(j as i64, k)).norm_sqr())
            .product();
        total += weight * spectrum.coeffs()[nu].norm_sqr();
    }
    k as f64 * total
}
