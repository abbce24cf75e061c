//! Membership-function shapes and their sampling onto a universe grid.

use crate::error::{Error, Result};
use crate::fuzzyset::Universe;

/// Parametric membership shape in universe units. `Explicit` carries a
/// ready-made membership vector instead.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Triangular(f64, f64, f64),
    Trapezoidal(f64, f64, f64, f64),
    Explicit(Vec<f64>),
}

impl Shape {
    /// Checks parameter ordering (a <= b <= c [<= d]). Explicit vectors are
    /// checked against a universe at sampling time instead.
    pub fn validate(&self, owner: &str) -> Result<()> {
        let ordered = match *self {
            Shape::Triangular(a, b, c) => a <= b && b <= c,
            Shape::Trapezoidal(a, b, c, d) => a <= b && b <= c && c <= d,
            Shape::Explicit(_) => true,
        };
        if ordered {
            Ok(())
        } else {
            Err(Error::ShapeNotOrdered(owner.to_string()))
        }
    }

    /// Membership at a single point. Degenerate ramps (equal parameters)
    /// become jumps.
    pub fn membership_at(&self, x: f64) -> f64 {
        match *self {
            Shape::Triangular(a, b, c) => ramp_up(x, a, b).min(ramp_down(x, b, c)),
            Shape::Trapezoidal(a, b, c, d) => ramp_up(x, a, b).min(ramp_down(x, c, d)),
            Shape::Explicit(_) => 0.0,
        }
    }

    /// Samples the shape at every grid point. A parametric shape whose
    /// support misses the grid entirely is an error, as is an explicit
    /// vector of the wrong length.
    pub fn sample(&self, owner: &str, universe: &Universe) -> Result<Vec<f64>> {
        match self {
            Shape::Explicit(values) => {
                if values.len() != universe.len() {
                    return Err(Error::LengthMismatch {
                        universe: universe.name().to_string(),
                        got: values.len(),
                        expected: universe.len(),
                    });
                }
                for (index, &value) in values.iter().enumerate() {
                    if !(0.0..=1.0).contains(&value) {
                        return Err(Error::MembershipOutOfRange { index, value });
                    }
                }
                Ok(values.clone())
            }
            _ => {
                let sampled: Vec<f64> = universe
                    .points()
                    .iter()
                    .map(|&x| self.membership_at(x))
                    .collect();
                if sampled.iter().all(|&m| m == 0.0) {
                    return Err(Error::ShapeOutOfRange(owner.to_string()));
                }
                Ok(sampled)
            }
        }
    }
}

fn ramp_up(x: f64, a: f64, b: f64) -> f64 {
    if x < a {
        0.0
    } else if x >= b {
        1.0
    } else {
        (x - a) / (b - a)
    }
}

fn ramp_down(x: f64, c: f64, d: f64) -> f64 {
    if x > d {
        0.0
    } else if x <= c {
        1.0
    } else {
        (d - x) / (d - c)
    }
}
