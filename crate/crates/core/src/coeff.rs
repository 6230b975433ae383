//! Coefficient polynomials behind the higher order inequalities.
//!
//! Discrete family, for `1 <= m <= floor(k/2)` and `λ_j = 4 sin²(jπ/k)`:
//!
//! ```text
//! Q_m(x) = Π_{j=1..m} (x - λ_j)       = Σ c_{m,j} x^j
//! P_m(x) = Π_{j=2..m} (x - λ_j)       = Σ λ_{m,j} x^j      (P_1 = 1)
//! 𝒮_m(x) = (P_m(x) - P_m(λ_1)) / (x - λ_1) = Σ_{l>=1} S_{m,l} x^{l-1},   S_{m,0} = P_m(λ_1)
//! ```
//!
//! Smooth family: `P_m(t) = Π_{j=2..m} (t - j²)` and
//! `(P_m(t) - P_m(1)) / (t - 1) = Σ s_{m,l} t^{l-1}`.
//!
//! All polynomials are dense, lowest degree first. Tables check their own
//! defining identities when built and refuse to exist if one fails.

use crate::error::{Error, Result};
use crate::fourier::difference_symbol;
use crate::tolerance::IDENTITY_REL;

/// Coefficients of `Π (x - r)` over `roots`, lowest degree first.
pub fn poly_from_roots(roots: &[f64]) -> Vec<f64> {
    let mut p = vec![1.0];
    for &r in roots {
        let mut next = vec![0.0; p.len() + 1];
        for (i, &a) in p.iter().enumerate() {
            next[i + 1] += a;
            next[i] -= r * a;
        }
        p = next;
    }
    p
}

/// Horner evaluation.
pub fn poly_eval(p: &[f64], x: f64) -> f64 {
    p.iter().rev().fold(0.0, |acc, &a| acc * x + a)
}

/// Divides `p` by `(x - r)`: returns (quotient, remainder = p(r)).
pub fn divide_linear(p: &[f64], r: f64) -> (Vec<f64>, f64) {
    if p.len() <= 1 {
        return (Vec::new(), p.first().copied().unwrap_or(0.0));
    }
    let d = p.len() - 1;
    let mut q = vec![0.0; d];
    q[d - 1] = p[d];
    for i in (1..d).rev() {
        q[i - 1] = p[i] + r * q[i];
    }
    let rem = p[0] + r * q[0];
    (q, rem)
}

/// Coefficient at `i`, zero outside the stored range.
fn coef(p: &[f64], i: isize) -> f64 {
    if i < 0 {
        0.0
    } else {
        p.get(i as usize).copied().unwrap_or(0.0)
    }
}

fn agree(a: f64, b: f64, magnitude: f64) -> bool {
    (a - b).abs() <= IDENTITY_REL * magnitude.max(a.abs()).max(b.abs()) + 1e-300
}

/// Largest admissible order for a k-gon.
pub fn max_order(k: usize) -> usize {
    k / 2
}

pub(crate) fn check_order(m: usize, k: usize, max: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::TooFewVertices(k));
    }
    if m < 1 {
        return Err(Error::InvalidParameter("order m must be at least 1".into()));
    }
    if m > max {
        return Err(Error::OrderOutOfRange { m, k, min: 1, max });
    }
    Ok(())
}

/// `Q_m`, `P_m`, `𝒮_m` for a fixed k.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteTable {
    pub m: usize,
    pub k: usize,
    /// `λ_1..λ_m`, the roots of `Q_m`.
    pub roots: Vec<f64>,
    /// `c_{m,0..=m}`.
    pub c: Vec<f64>,
    /// `λ_{m,0..m}`.
    pub lambda: Vec<f64>,
    /// `S_{m,0..m}`; entry 0 is `P_m(λ_1)`.
    pub s_cap: Vec<f64>,
}

impl DiscreteTable {
    pub fn lambda1(&self) -> f64 {
        self.roots[0]
    }

    /// `Q_m(x)` evaluated in product form.
    pub fn q_product(&self, x: f64) -> f64 {
        self.roots.iter().map(|&r| x - r).product()
    }

    /// `𝒮_m` coefficients, `S_{m,1..m}` shifted down by one.
    pub fn s_poly(&self) -> &[f64] {
        &self.s_cap[1..]
    }

    fn verify(&self) -> Result<()> {
        let l1 = self.lambda1();
        let fail = |what: &str, i: usize| {
            Err(Error::InternalConsistency(format!("{what} fails at index {i} (m = {}, k = {})", self.m, self.k)))
        };
        if (self.c[self.m] - 1.0).abs() > 0.0 {
            return fail("leading coefficient of Q_m", self.m);
        }
        for j in 0..=self.m {
            let rhs = coef(&self.lambda, j as isize - 1) - l1 * coef(&self.lambda, j as isize);
            let mag = coef(&self.lambda, j as isize - 1).abs() + (l1 * coef(&self.lambda, j as isize)).abs();
            if !agree(self.c[j], rhs, mag) {
                return fail("c_{m,j} = λ_{m,j-1} - λ_1 λ_{m,j}", j);
            }
        }
        for l in 0..self.m {
            let rhs = coef(&self.s_cap, l as isize) - l1 * coef(&self.s_cap, l as isize + 1);
            let mag = coef(&self.s_cap, l as isize).abs() + (l1 * coef(&self.s_cap, l as isize + 1)).abs();
            if !agree(self.lambda[l], rhs, mag) {
                return fail("λ_{m,l} = S_{m,l} - λ_1 S_{m,l+1}", l);
            }
        }
        Ok(())
    }
}

/// Builds and self-checks the discrete table for `1 <= m <= floor(k/2)`.
pub fn discrete_table(m: usize, k: usize) -> Result<DiscreteTable> {
    check_order(m, k, max_order(k))?;
    let roots: Vec<f64> = (1..=m).map(|j| difference_symbol(j as i64, k)).collect();
    let c = poly_from_roots(&roots);
    let lambda = poly_from_roots(&roots[1..]);
    let (quotient, s0) = divide_linear(&lambda, roots[0]);
    let mut s_cap = Vec::with_capacity(m);
    s_cap.push(s0);
    s_cap.extend(quotient);
    let table = DiscreteTable { m, k, roots, c, lambda, s_cap };
    table.verify()?;
    Ok(table)
}

/// `P_m(t) = Π_{j=2..m}(t - j²)` and the division of `P_m` by `(t - 1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoothTable {
    pub m: usize,
    /// Coefficients of `P_m(t)`.
    pub p: Vec<f64>,
    /// `s_{m,1..m}` stored at indices `0..m-1`.
    pub s: Vec<f64>,
    /// `P_m(1) = Π_{j=2..m}(1 - j²)`.
    pub p_at_one: f64,
    /// `-(-1)^m (m-1)! (m+1)! / 2`, the factor in front of the isoperimetric term.
    pub theorem_constant: f64,
}

impl SmoothTable {
    /// `s_{m,l}` for `1 <= l <= m-1`.
    pub fn s_coeff(&self, l: usize) -> f64 {
        self.s[l - 1]
    }
}

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

pub fn smooth_table(m: usize) -> Result<SmoothTable> {
    if m < 1 {
        return Err(Error::InvalidParameter("order m must be at least 1".into()));
    }
    let roots: Vec<f64> = (2..=m).map(|j| (j * j) as f64).collect();
    let p = poly_from_roots(&roots);
    let (s, p_at_one) = divide_linear(&p, 1.0);
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let theorem_constant = -sign * factorial(m - 1) * factorial(m + 1) / 2.0;
    let direct: f64 = roots.iter().map(|r| 1.0 - r).product();
    if !agree(p_at_one, theorem_constant, direct.abs()) || !agree(p_at_one, direct, direct.abs()) {
        return Err(Error::InternalConsistency(format!(
            "P_{m}(1) = {p_at_one} disagrees with the factorial constant {theorem_constant}"
        )));
    }
    Ok(SmoothTable { m, p, s, p_at_one, theorem_constant })
}

/// Checks `c_{m+1,l} = c_{m,l-1} - λ_{m+1} c_{m,l}` and
/// `S_{m+1,l} = S_{m,l-1} - λ_{m+1} S_{m,l}` (l >= 1) entrywise.
pub fn stability_recurrences_hold(m: usize, k: usize) -> Result<bool> {
    check_order(m, k, max_order(k).saturating_sub(1))?;
    let cur = discrete_table(m, k)?;
    let next = discrete_table(m + 1, k)?;
    let lam = difference_symbol(m as i64 + 1, k);
    let c_ok = (0..=m + 1).all(|l| {
        let a = coef(&cur.c, l as isize - 1);
        let b = lam * coef(&cur.c, l as isize);
        agree(next.c[l], a - b, a.abs() + b.abs())
    });
    let s_ok = (1..=m).all(|l| {
        let a = coef(&cur.s_cap, l as isize - 1);
        let b = lam * coef(&cur.s_cap, l as isize);
        agree(next.s_cap[l], a - b, a.abs() + b.abs())
    });
    Ok(c_ok && s_ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_vec(actual: &[f64], expected: &[f64]) {
        assert_eq!(actual.len(), expected.len(), "{actual:?} vs {expected:?}");
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < 1e-12, "{actual:?} vs {expected:?}");
        }
    }

    #[test]
    fn first_order_table() {
        for k in [3, 4, 7, 20] {
            let t = discrete_table(1, k).unwrap();
            assert_vec(&t.c, &[-difference_symbol(1, k), 1.0]);
            assert_vec(&t.lambda, &[1.0]);
            assert_vec(&t.s_cap, &[1.0]);
        }
    }

    #[test]
    fn second_order_square() {
        // roots 2 and 4: (x - 2)(x - 4) = x² - 6x + 8, P_2 = x - 4, P_2(2) = -2.
        let t = discrete_table(2, 4).unwrap();
        assert_vec(&t.c, &[8.0, -6.0, 1.0]);
        assert_vec(&t.lambda, &[-4.0, 1.0]);
        assert_vec(&t.s_cap, &[-2.0, 1.0]);
    }

    #[test]
    fn s0_sign_alternates() {
        for k in 3..40 {
            for m in 1..=k / 2 {
                let s0 = discrete_table(m, k).unwrap().s_cap[0];
                if m % 2 == 1 {
                    assert!(s0 > 0.0, "m = {m}, k = {k}");
                } else {
                    assert!(s0 < 0.0, "m = {m}, k = {k}");
                }
            }
        }
    }

    #[test]
    fn order_range_errors() {
        assert!(matches!(discrete_table(2, 3), Err(Error::OrderOutOfRange { m: 2, k: 3, .. })));
        assert!(matches!(discrete_table(0, 6), Err(Error::InvalidParameter(_))));
        assert!(matches!(discrete_table(1, 2), Err(Error::TooFewVertices(2))));
        assert!(matches!(smooth_table(0), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn smooth_tables() {
        let t1 = smooth_table(1).unwrap();
        assert!(t1.s.is_empty());
        assert_eq!(t1.p_at_one, 1.0);
        assert_eq!(t1.theorem_constant, 1.0);

        let t2 = smooth_table(2).unwrap();
        assert_vec(&t2.p, &[-4.0, 1.0]);
        assert_vec(&t2.s, &[1.0]);
        assert_eq!(t2.theorem_constant, -3.0);

        let t3 = smooth_table(3).unwrap();
        assert_vec(&t3.p, &[36.0, -13.0, 1.0]);
        assert_vec(&t3.s, &[-12.0, 1.0]);
        assert_eq!(t3.p_at_one, 24.0);
    }

    #[test]
    fn recurrences() {
        assert!(stability_recurrences_hold(1, 6).unwrap());
        assert!(stability_recurrences_hold(2, 8).unwrap());
        assert!(matches!(stability_recurrences_hold(3, 6), Err(Error::OrderOutOfRange { .. })));
    }

    #[test]
    fn division_helper() {
        let (q, r) = divide_linear(&[36.0, -13.0, 1.0], 1.0);
        assert_vec(&q, &[-12.0, 1.0]);
        assert_eq!(r, 24.0);
        let (q, r) = divide_linear(&[5.0], 2.0);
        assert!(q.is_empty());
        assert_eq!(r, 5.0);
    }
}
