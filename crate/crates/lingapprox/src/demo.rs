//! Reconstructed two-hump demo problem used by the test suites, the CLI
//! fixtures and the README walkthrough.
//!
//! The temperature-style universe carries two bimodal sets. `x1` has a
//! medium-region hump of height 0.70 and a large-region hump of height 1.00;
//! `x2` has heights 1.00 and 0.60. Both approximate to
//! "more or less medium or very large", but their quantified descriptions
//! differ, which is the point of the demo.

use std::sync::Arc;

use crate::fuzzyset::{FuzzySet, Universe};
use crate::shape::Shape;
use crate::vocab::{default_modifiers, default_quantifiers, TermDef, Vocabulary};

/// 0..=100 in steps of 5, 21 points.
pub fn universe() -> Arc<Universe> {
    Arc::new(Universe::from_range("temperature", 0.0, 100.0, 5.0, Some("°C".to_string())).unwrap())
}

/// Demo vocabulary: small / medium / large with a steep large term whose
/// squared meaning ("very large") hugs the right end of the range.
pub fn vocabulary() -> Vocabulary {
    let u = universe();
    let terms = vec![
        TermDef::new("small", Shape::Trapezoidal(0.0, 0.0, 15.0, 35.0)).unwrap(),
        TermDef::new("medium", Shape::Triangular(25.0, 50.0, 75.0)).unwrap(),
        TermDef::new("large", Shape::Trapezoidal(65.0, 95.0, 100.0, 100.0)).unwrap(),
    ];
    Vocabulary::new(u, terms, default_modifiers(), default_quantifiers()).unwrap()
}

/// First demo set: a medium-region plateau capped at 0.70, then a hump that
/// tracks "very large" but peaks early, reaching 1.0 already at 90 where the
/// term itself is still climbing.
pub fn x1() -> FuzzySet {
    let s2 = 0.2f64.sqrt();
    let s4 = 0.4f64.sqrt();
    #[rustfmt::skip]
    let values = vec![
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        s2, s4, 0.7, 0.7, 0.7, 0.7, 0.7, s4, s2,
        1.0 / 9.0, 0.25, 4.0 / 9.0, 1.0, 1.0, 1.0,
    ];
    FuzzySet::new(universe(), values).unwrap()
}

/// Second demo set: "more or less medium" verbatim on the left, a flat-ish
/// 0.60-high hump loosely following "very large" on the right.
pub fn x2() -> FuzzySet {
    let s2 = 0.2f64.sqrt();
    let s4 = 0.4f64.sqrt();
    let s6 = 0.6f64.sqrt();
    let s8 = 0.8f64.sqrt();
    #[rustfmt::skip]
    let values = vec![
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        s2, s4, s6, s8, 1.0, s8, s6, s4, s2,
        0.13, 0.24, 0.37, 0.5, 0.6, 0.6,
    ];
    FuzzySet::new(universe(), values).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::segment::segment;

    #[test]
    fn demo_sets_have_two_humps_at_the_stated_heights() {
        let segs = segment(&x1()).unwrap();
        assert_eq!(segs.len(), 2);
        assert!((segs[0].height() - 0.7).abs() < 1e-12);
        assert!((segs[1].height() - 1.0).abs() < 1e-12);

        let segs = segment(&x2()).unwrap();
        assert_eq!(segs.len(), 2);
        assert!((segs[0].height() - 1.0).abs() < 1e-12);
        assert!((segs[1].height() - 0.6).abs() < 1e-12);
    }
}
