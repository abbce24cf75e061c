//! Selecting the best-fitting linguistic quantifier for a proportion or a
//! compatibility profile.

use crate::error::{Error, Result};
use crate::vocab::QuantifierDef;

/// Two quantifiers within this compatibility gap of each other are reported
/// as a tie ("some/few").
pub const DEFAULT_TIE_TOLERANCE: f64 = 0.05;

/// Winning quantifier, with the runner-up attached when the race was within
/// the tie tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantifierChoice {
    pub primary: String,
    pub secondary: Option<String>,
    pub compatibility: f64,
}

impl QuantifierChoice {
    /// "few", or "some/few" for a tie.
    pub fn joined(&self) -> String {
        match &self.secondary {
            Some(second) => format!("{}/{second}", self.primary),
            None => self.primary.clone(),
        }
    }
}

/// Picks the argmax of a (name, compatibility) profile. Returns `None` when
/// the best compatibility falls below `threshold`. Exact ties go to the
/// earlier name; a positive runner-up within `tie_tolerance` is reported as
/// the secondary name.
pub fn select_quantifier(
    compats: &[(String, f64)],
    threshold: f64,
    tie_tolerance: f64,
) -> Result<Option<QuantifierChoice>> {
    if compats.is_empty() {
        return Err(Error::EmptyQuantifierSet);
    }
    let best = compats
        .iter()
        .enumerate()
        .max_by(|(ai, a), (bi, b)| a.1.total_cmp(&b.1).then(bi.cmp(ai)))
        .map(|(i, _)| i)
        .unwrap();
    let (ref best_name, best_compat) = compats[best];
    if best_compat < threshold {
        return Ok(None);
    }
    let secondary = compats
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != best)
        .max_by(|(ai, a), (bi, b)| a.1.total_cmp(&b.1).then(bi.cmp(ai)))
        .filter(|(_, (_, c))| *c > 0.0 && best_compat - c < tie_tolerance)
        .map(|(_, (name, _))| name.clone());
    Ok(Some(QuantifierChoice {
        primary: best_name.clone(),
        secondary,
        compatibility: best_compat,
    }))
}

/// Assigns a quantifier to a proportion: the one whose membership at `p` is
/// highest, with the tie and threshold behavior of [`select_quantifier`].
pub fn assign_quantifier(
    p: f64,
    quantifiers: &[QuantifierDef],
    threshold: f64,
) -> Result<Option<QuantifierChoice>> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidConfig(format!(
            "proportion {p} outside [0, 1]"
        )));
    }
    if !(0.0..=1.0).contains(&threshold) {
        return Err(Error::InvalidConfig(format!(
            "threshold {threshold} outside [0, 1]"
        )));
    }
    let compats: Vec<(String, f64)> = quantifiers
        .iter()
        .map(|q| (q.name.clone(), q.membership(p)))
        .collect();
    select_quantifier(&compats, threshold, DEFAULT_TIE_TOLERANCE)
}
