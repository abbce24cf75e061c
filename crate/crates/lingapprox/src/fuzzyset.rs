//! Discrete fuzzy sets over a shared sample grid.
//!
//! A [`Universe`] is an ordered grid of real sample points; a [`FuzzySet`] is a
//! membership vector over that grid. Possibility distributions are represented
//! the same way, so one type serves both roles. Everything here is immutable
//! after construction and safe to share across threads.

use std::sync::Arc;

use crate::error::{Error, Result};

/// Ordered grid of sample points all fuzzy sets of one problem live on.
#[derive(Debug, Clone, PartialEq)]
pub struct Universe {
    name: String,
    points: Vec<f64>,
    unit: Option<String>,
}

impl Universe {
    /// Builds a universe from explicit points. Points must be finite,
    /// strictly increasing and at least two.
    pub fn new(name: impl Into<String>, points: Vec<f64>, unit: Option<String>) -> Result<Self> {
        let name = name.into();
        if points.len() < 2 {
            return Err(Error::InvalidUniverse(
                name,
                format!("needs at least 2 points, got {}", points.len()),
            ));
        }
        if points.iter().any(|p| !p.is_finite()) {
            return Err(Error::InvalidUniverse(name, "non-finite point".into()));
        }
        if points.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidUniverse(
                name,
                "points must be strictly increasing".into(),
            ));
        }
        Ok(Universe { name, points, unit })
    }

    /// Builds a regular grid from `min` to `max` with the given step.
    /// The point count comes from rounding `(max - min) / step`, so a step
    /// that does not evenly divide the range is rejected rather than drifting.
    pub fn from_range(
        name: impl Into<String>,
        min: f64,
        max: f64,
        step: f64,
        unit: Option<String>,
    ) -> Result<Self> {
        let name = name.into();
        if !(step.is_finite() && step > 0.0) || !min.is_finite() || !max.is_finite() || max <= min {
            return Err(Error::InvalidUniverse(
                name,
                "range needs min < max and step > 0".into(),
            ));
        }
        let steps = (max - min) / step;
        let n = steps.round();
        if (steps - n).abs() > 1e-9 * steps.max(1.0) {
            return Err(Error::InvalidUniverse(
                name,
                format!("step {step} does not evenly divide [{min}, {max}]"),
            ));
        }
        let count = n as usize + 1;
        let points = (0..count).map(|i| min + i as f64 * step).collect();
        Universe::new(name, points, unit)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn unit(&self) -> Option<&str> {
        self.unit.as_deref()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: at least two points
    }

    /// Range covered by the grid.
    pub fn span(&self) -> (f64, f64) {
        (self.points[0], *self.points.last().unwrap())
    }
}

/// Crisp set of grid indices whose membership reaches a given level.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaCut {
    pub level: f64,
    pub indices: Vec<usize>,
}

impl AlphaCut {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Membership vector over a [`Universe`], one value per grid point.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzySet {
    universe: Arc<Universe>,
    memberships: Vec<f64>,
}

impl FuzzySet {
    /// Validates lengths and the [0, 1] range. Out-of-range values are
    /// rejected, never clamped.
    pub fn new(universe: Arc<Universe>, memberships: Vec<f64>) -> Result<Self> {
        if memberships.len() != universe.len() {
            return Err(Error::LengthMismatch {
                universe: universe.name().to_string(),
                got: memberships.len(),
                expected: universe.len(),
            });
        }
        for (index, &value) in memberships.iter().enumerate() {
            if !(0.0..=1.0).contains(&value) {
                return Err(Error::MembershipOutOfRange { index, value });
            }
        }
        Ok(FuzzySet {
            universe,
            memberships,
        })
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn memberships(&self) -> &[f64] {
        &self.memberships
    }

    pub fn len(&self) -> usize {
        self.memberships.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    fn check_same_universe(&self, other: &FuzzySet) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe.name().to_string(),
                right: other.universe.name().to_string(),
            });
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(f64) -> f64) -> FuzzySet {
        FuzzySet {
            universe: Arc::clone(&self.universe),
            memberships: self.memberships.iter().map(|&m| f(m)).collect(),
        }
    }

    fn zip(&self, other: &FuzzySet, f: impl Fn(f64, f64) -> f64) -> Result<FuzzySet> {
        self.check_same_universe(other)?;
        Ok(FuzzySet {
            universe: Arc::clone(&self.universe),
            memberships: self
                .memberships
                .iter()
                .zip(&other.memberships)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    /// Pointwise 1 - mu.
    pub fn complement(&self) -> FuzzySet {
        self.map(|m| 1.0 - m)
    }

    /// Pointwise minimum.
    pub fn intersect(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip(other, f64::min)
    }

    /// Pointwise maximum.
    pub fn union(&self, other: &FuzzySet) -> Result<FuzzySet> {
        self.zip(other, f64::max)
    }

    /// Maximum membership; 0 for the all-zero set.
    pub fn height(&self) -> f64 {
        self.memberships.iter().fold(0.0, |acc, &m| acc.max(m))
    }

    /// Indices whose membership is at least `level`. The comparison is exact:
    /// memberships are data, not computed roots, so no epsilon applies.
    pub fn alpha_cut(&self, level: f64) -> Result<AlphaCut> {
        if !(level > 0.0 && level <= 1.0) {
            return Err(Error::InvalidAlpha(level));
        }
        let indices = self
            .memberships
            .iter()
            .enumerate()
            .filter(|(_, &m)| m >= level)
            .map(|(i, _)| i)
            .collect();
        Ok(AlphaCut { level, indices })
    }

    /// Sum of memberships (scalar cardinality), in [0, N].
    pub fn sigma_count(&self) -> f64 {
        self.memberships.iter().sum()
    }

    /// Replaces the membership vector, keeping the universe. Used by engine
    /// code that has already established the [0, 1] range.
    pub(crate) fn with_memberships(&self, memberships: Vec<f64>) -> FuzzySet {
        debug_assert_eq!(memberships.len(), self.universe.len());
        FuzzySet {
            universe: Arc::clone(&self.universe),
            memberships,
        }
    }
}

/// Pointwise operation selector for [`pointwise`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointwiseOp {
    Complement,
    Intersect,
    Union,
}

/// Applies a pointwise connective. `Complement` takes no second operand;
/// `Intersect`/`Union` require one.
pub fn pointwise(op: PointwiseOp, a: &FuzzySet, b: Option<&FuzzySet>) -> Result<FuzzySet> {
    match (op, b) {
        (PointwiseOp::Complement, None) => Ok(a.complement()),
        (PointwiseOp::Complement, Some(_)) => Err(Error::ArityError {
            op: "complement",
            expected: 1,
        }),
        (PointwiseOp::Intersect, Some(b)) => a.intersect(b),
        (PointwiseOp::Intersect, None) => Err(Error::ArityError {
            op: "intersect",
            expected: 2,
        }),
        (PointwiseOp::Union, Some(b)) => a.union(b),
        (PointwiseOp::Union, None) => Err(Error::ArityError {
            op: "union",
            expected: 2,
        }),
    }
}

/// Proportion of `x` that lies in `a`: SigmaCount(a AND x) / SigmaCount(x).
pub fn relative_sigma_count(a: &FuzzySet, x: &FuzzySet) -> Result<f64> {
    let denom = x.sigma_count();
    if denom == 0.0 {
        return Err(Error::EmptyReference);
    }
    let num = a.intersect(x)?.sigma_count();
    Ok(num / denom)
}
