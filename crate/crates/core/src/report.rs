//! The common result type of every evaluator.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::tolerance::EQUALITY_DEFICIT;

/// Which inequality a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    WirtingerM,
    WirtingerLambdaForm,
    WirtingerSForm,
    StabilityC,
    StabilityS,
    ChakerianV1,
    ChakerianV2,
    IsoperimetricHigher,
    EquilateralBound,
    LengthFormEven,
    GenWirtinger,
    SmoothIsoperimetric,
    ChernoffCore,
    ChernoffTheorem,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::WirtingerM,
        TheoremId::WirtingerLambdaForm,
        TheoremId::WirtingerSForm,
        TheoremId::StabilityC,
        TheoremId::StabilityS,
        TheoremId::ChakerianV1,
        TheoremId::ChakerianV2,
        TheoremId::IsoperimetricHigher,
        TheoremId::EquilateralBound,
        TheoremId::LengthFormEven,
        TheoremId::GenWirtinger,
        TheoremId::SmoothIsoperimetric,
        TheoremId::ChernoffCore,
        TheoremId::ChernoffTheorem,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::WirtingerM => "wirtinger-m",
            TheoremId::WirtingerLambdaForm => "wirtinger-lambda-form",
            TheoremId::WirtingerSForm => "wirtinger-s-form",
            TheoremId::StabilityC => "stability-c",
            TheoremId::StabilityS => "stability-s",
            TheoremId::ChakerianV1 => "chakerian-v1",
            TheoremId::ChakerianV2 => "chakerian-v2",
            TheoremId::IsoperimetricHigher => "isoperimetric-higher",
            TheoremId::EquilateralBound => "equilateral-bound",
            TheoremId::LengthFormEven => "length-form-even",
            TheoremId::GenWirtinger => "gen-wirtinger",
            TheoremId::SmoothIsoperimetric => "smooth-isoperimetric",
            TheoremId::ChernoffCore => "chernoff-core",
            TheoremId::ChernoffTheorem => "chernoff-theorem",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        TheoremId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown theorem {s:?}")))
    }
}

/// How the two sides of the inequality are displayed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `lhs >= rhs`
    GreaterEqual,
    /// `lhs <= rhs`
    LessEqual,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Lower,
    Upper,
}

/// A bound on a secondary quantity implied by the inequality, e.g. on the
/// isoperimetric deficit `S - 4 tan(π/k) F`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Bound {
    pub kind: BoundKind,
    pub quantity: String,
    pub value: f64,
    pub actual: f64,
}

impl Bound {
    pub fn satisfied(&self, tolerance: f64) -> bool {
        let slack = tolerance * self.value.abs().max(self.actual.abs()).max(1.0);
        match self.kind {
            BoundKind::Lower => self.actual >= self.value - slack,
            BoundKind::Upper => self.actual <= self.value + slack,
        }
    }
}

/// Both sides of one inequality on one input.
///
/// `deficit >= 0` always means "holds". `direct` is the deficit evaluated
/// literally from the displayed terms and `magnitude` is the sum of the
/// absolute values of those terms; `|deficit - direct| / magnitude` measures
/// round-off in the literal form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem_id: TheoremId,
    pub k: Option<usize>,
    pub m: Option<usize>,
    pub lhs: f64,
    pub rhs: f64,
    pub direction: Direction,
    pub deficit: f64,
    pub direct: f64,
    pub magnitude: f64,
    pub scale: f64,
    pub holds: bool,
    pub equality: bool,
    pub active_modes: Vec<i64>,
    pub tolerance: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<Bound>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

/// Inputs for [`InequalityReport::assemble`].
#[derive(Debug, Clone)]
pub(crate) struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    pub direction: Direction,
    pub deficit: f64,
    pub direct: f64,
    pub magnitude: f64,
}

impl Sides {
    /// `0 <= value`, displayed with `lhs = 0`.
    pub fn nonnegative(deficit: f64, direct: f64, magnitude: f64) -> Sides {
        Sides { lhs: 0.0, rhs: deficit, direction: Direction::LessEqual, deficit, direct, magnitude }
    }
}

impl InequalityReport {
    pub(crate) fn assemble(
        theorem_id: TheoremId,
        k: Option<usize>,
        m: Option<usize>,
        sides: Sides,
        in_equality_class: bool,
        active_modes: Vec<i64>,
        tolerance: f64,
    ) -> InequalityReport {
        let scale = sides.lhs.abs().max(sides.rhs.abs()).max(1.0);
        let holds = sides.deficit >= -tolerance * scale;
        let equality = holds && in_equality_class && sides.deficit.abs() <= EQUALITY_DEFICIT * scale;
        InequalityReport {
            theorem_id,
            k,
            m,
            lhs: sides.lhs,
            rhs: sides.rhs,
            direction: sides.direction,
            deficit: sides.deficit,
            direct: sides.direct,
            magnitude: sides.magnitude,
            scale,
            holds,
            equality,
            active_modes,
            tolerance,
            bound: None,
            notes: Vec::new(),
        }
    }

    pub(crate) fn with_bound(mut self, bound: Bound) -> Self {
        self.bound = Some(bound);
        self
    }

    pub(crate) fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Relative disagreement between the stable and the literal deficit.
    pub fn direct_error(&self) -> f64 {
        (self.deficit - self.direct).abs() / self.magnitude.max(f64::MIN_POSITIVE)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sides(deficit: f64) -> Sides {
        Sides::nonnegative(deficit, deficit, deficit.abs())
    }

    #[test]
    fn holds_uses_scale() {
        let r = InequalityReport::assemble(TheoremId::WirtingerM, Some(5), Some(1), sides(-1e-10), true, vec![1], 1e-9);
        assert!(r.holds);
        assert!(r.equality);
        let r = InequalityReport::assemble(TheoremId::WirtingerM, Some(5), Some(1), sides(-1e-8), true, vec![1], 1e-9);
        assert!(!r.holds);
        assert!(!r.equality);
    }

    #[test]
    fn equality_needs_class_and_small_deficit() {
        let r = InequalityReport::assemble(TheoremId::WirtingerM, Some(5), Some(1), sides(0.0), false, vec![2], 1e-9);
        assert!(r.holds && !r.equality);
        let r = InequalityReport::assemble(TheoremId::WirtingerM, Some(5), Some(1), sides(1e-3), true, vec![1], 1e-9);
        assert!(r.holds && !r.equality);
    }

    #[test]
    fn json_field_names() {
        let r = InequalityReport::assemble(TheoremId::ChakerianV2, Some(4), None, sides(0.5), false, vec![1, 3], 1e-9);
        let v = serde_json::to_value(&r).unwrap();
        for key in ["theorem_id", "k", "m", "lhs", "rhs", "deficit", "holds", "equality", "active_modes", "tolerance"] {
            assert!(v.get(key).is_some(), "{key}");
        }
        assert_eq!(v["theorem_id"], "chakerian-v2");
        assert!(v.get("notes").is_none());
        let back: InequalityReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn bound_sides() {
        let lower = Bound { kind: BoundKind::Lower, quantity: "x".into(), value: 1.0, actual: 2.0 };
        assert!(lower.satisfied(1e-9));
        let upper = Bound { kind: BoundKind::Upper, ..lower.clone() };
        assert!(!upper.satisfied(1e-9));
    }
}
