//! Quality measures comparing a target fuzzy set with the meaning of a
//! candidate label.

use crate::error::{Error, Result};
use crate::fuzzyset::FuzzySet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    /// Height of the target; the label set is ignored.
    Height,
    /// 1 - mean absolute membership difference.
    HammingComplement,
    /// 1 - absolute-difference mass over the union mass; equivalently the
    /// ratio of intersection to union sigma counts.
    Similarity,
    /// Proportion of the label set covered by the target:
    /// SigmaCount(target AND label) / SigmaCount(label).
    RelativeCount,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 4] = [
        MeasureKind::Height,
        MeasureKind::HammingComplement,
        MeasureKind::Similarity,
        MeasureKind::RelativeCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MeasureKind::Height => "height",
            MeasureKind::HammingComplement => "hamming",
            MeasureKind::Similarity => "similarity",
            MeasureKind::RelativeCount => "relcount",
        }
    }

    pub fn from_name(name: &str) -> Option<MeasureKind> {
        MeasureKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

/// Scores how well `label_set` matches `target`. All measures return values
/// in [0, 1] on valid inputs.
pub fn measure(kind: MeasureKind, target: &FuzzySet, label_set: &FuzzySet) -> Result<f64> {
    if target.universe() != label_set.universe() {
        return Err(Error::UniverseMismatch {
            left: target.universe().name().to_string(),
            right: label_set.universe().name().to_string(),
        });
    }
    let t = target.memberships();
    let l = label_set.memberships();
    match kind {
        MeasureKind::Height => Ok(target.height()),
        MeasureKind::HammingComplement => {
            let sum: f64 = t.iter().zip(l).map(|(&a, &b)| (a - b).abs()).sum();
            Ok(1.0 - sum / t.len() as f64)
        }
        MeasureKind::Similarity => {
            let union: f64 = t.iter().zip(l).map(|(&a, &b)| a.max(b)).sum();
            if union == 0.0 {
                return Err(Error::EmptyReference);
            }
            let diff: f64 = t.iter().zip(l).map(|(&a, &b)| (a - b).abs()).sum();
            Ok(1.0 - diff / union)
        }
        MeasureKind::RelativeCount => {
            let denom: f64 = l.iter().sum();
            if denom == 0.0 {
                return Err(Error::EmptyReference);
            }
            let num: f64 = t.iter().zip(l).map(|(&a, &b)| a.min(b)).sum();
            Ok(num / denom)
        }
    }
}
