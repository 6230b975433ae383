//! Numerical thresholds shared by the evaluators.
//!
//! Every comparison in the crate goes through one of these constants. They
//! are grouped by what they guard.

// ---------------------------------------------------------------------------
// Floating point identities
// ---------------------------------------------------------------------------

/// Relative agreement for quantities that are algebraically identical and
/// computed by two routes of comparable length (transforms, Parseval,
/// polygonal forms).
pub const IDENTITY_REL: f64 = 1e-12;

/// Absolute floor added to relative comparisons so that exact zeros compare
/// equal to rounding noise.
pub const ABS_FLOOR: f64 = 1e-14;

// ---------------------------------------------------------------------------
// Hypotheses
// ---------------------------------------------------------------------------

/// A polygon has zero centroid when |centroid| <= ZERO_CENTROID * max |z_v|.
pub const ZERO_CENTROID: f64 = 1e-12;

/// A curve or support function has zero mean when |a_0| <= ZERO_MEAN * max |a_n|.
pub const ZERO_MEAN: f64 = 1e-12;

/// Relative spread of side lengths accepted as "equilateral".
pub const EQUILATERAL_REL: f64 = 1e-9;

/// Relative max-deviation of |z'(t)| from its mean accepted as constant speed.
pub const CONSTANT_SPEED_REL: f64 = 1e-8;

/// Reality of support-function coefficients: |a_{-n} - conj(a_n)| bound.
pub const REALITY: f64 = 1e-14;

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Default slack for "holds": deficit >= -DEFAULT_TOLERANCE * scale.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// A Fourier mode is active when its modulus exceeds this fraction of the
/// largest modulus in the spectrum.
pub const ACTIVE_MODE_REL: f64 = 1e-9;

/// Equality additionally requires |deficit| <= EQUALITY_DEFICIT * scale.
pub const EQUALITY_DEFICIT: f64 = 1e-10;

/// Compare `a` and `b` relative to `scale`, with the absolute floor.
pub fn close(a: f64, b: f64, rel: f64, scale: f64) -> bool {
    (a - b).abs() <= rel * scale.abs() + ABS_FLOOR
}

/// Relative comparison scaled by the larger of the two magnitudes.
pub fn close_rel(a: f64, b: f64, rel: f64) -> bool {
    close(a, b, rel, a.abs().max(b.abs()))
}
