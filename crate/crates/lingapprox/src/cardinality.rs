//! Fuzzy cardinalities of discrete fuzzy sets.
//!
//! `fg_count` answers "at least how many elements are in A", `fl_count`
//! "at most how many", and `fe_count` is their intersection, "exactly how
//! many". Each comes in an absolute form (over counts 0..=N) and a relative
//! form against a reference set (over proportions in [0, 1]).
//!
//! All three are computed by sweeping a finite grid of alpha levels: cut
//! sizes only change at membership values occurring in the operands (or
//! their complements), so the supremum over continuous alpha is attained on
//! that grid. Level 1 is always probed; cuts are constant above the largest
//! membership value.

use crate::error::{Error, Result};
use crate::fuzzyset::FuzzySet;

/// Whether the cardinality ranges over counts or proportions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CardinalityKind {
    Absolute,
    Relative,
}

/// How memberships between support points are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completion {
    /// Nonincreasing step function; a query rounds up to the next support value.
    AtLeast,
    /// Nondecreasing step function; a query rounds down to the previous support value.
    AtMost,
    /// Discrete support only; anything off-support has membership zero.
    None,
}

/// Discrete fuzzy number over counts or proportions.
#[derive(Debug, Clone, PartialEq)]
pub struct FuzzyCardinality {
    kind: CardinalityKind,
    completion: Completion,
    support: Vec<(f64, f64)>,
}

impl FuzzyCardinality {
    fn new(kind: CardinalityKind, completion: Completion, support: Vec<(f64, f64)>) -> Self {
        debug_assert!(support.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(support.iter().all(|&(_, m)| (0.0..=1.0).contains(&m)));
        FuzzyCardinality {
            kind,
            completion,
            support,
        }
    }

    pub fn kind(&self) -> CardinalityKind {
        self.kind
    }

    pub fn completion(&self) -> Completion {
        self.completion
    }

    /// Support pairs `(value, membership)`, values strictly ascending.
    pub fn support(&self) -> &[(f64, f64)] {
        &self.support
    }

    /// Membership of an arbitrary value under this cardinality's completion.
    pub fn membership(&self, value: f64) -> f64 {
        match self.completion {
            Completion::AtLeast => match self.support.iter().find(|&&(v, _)| v >= value) {
                Some(&(_, m)) => m,
                None => 0.0,
            },
            Completion::AtMost => match self.support.iter().rev().find(|&&(v, _)| v <= value) {
                Some(&(_, m)) => m,
                None => 0.0,
            },
            Completion::None => self
                .support
                .iter()
                .find(|&&(v, _)| v == value)
                .map_or(0.0, |&(_, m)| m),
        }
    }
}

/// Distinct alpha levels at which any cut of the given sets can change,
/// including complements and the top level 1.
fn alpha_grid(sets: &[&FuzzySet]) -> Vec<f64> {
    let mut grid = vec![1.0];
    for set in sets {
        for &m in set.memberships() {
            if m > 0.0 {
                grid.push(m);
            }
            let c = 1.0 - m;
            if c > 0.0 {
                grid.push(c);
            }
        }
    }
    grid.sort_by(f64::total_cmp);
    grid.dedup();
    grid
}

fn sorted_ascending(set: &FuzzySet) -> Vec<f64> {
    let mut v = set.memberships().to_vec();
    v.sort_by(f64::total_cmp);
    v
}

/// Number of memberships >= alpha in an ascending-sorted vector.
fn count_ge(sorted: &[f64], alpha: f64) -> usize {
    sorted.len() - sorted.partition_point(|&m| m < alpha)
}

/// Number of memberships > beta in an ascending-sorted vector.
fn count_gt(sorted: &[f64], beta: f64) -> usize {
    sorted.len() - sorted.partition_point(|&m| m <= beta)
}

/// Builds the support of a relative cardinality from `(alpha, value)` pairs:
/// each distinct achieved value, with membership sup over qualifying levels.
fn envelope(
    pairs: &[(f64, f64)],
    anchor: f64,
    qualifies: impl Fn(f64, f64) -> bool,
) -> Vec<(f64, f64)> {
    let mut values: Vec<f64> = pairs.iter().map(|&(_, v)| v).collect();
    values.push(anchor);
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
        .into_iter()
        .map(|v| {
            let m = pairs
                .iter()
                .filter(|&&(_, achieved)| qualifies(achieved, v))
                .map(|&(alpha, _)| alpha)
                .fold(0.0, f64::max);
            (v, m)
        })
        .collect()
}

fn fg_absolute(a: &FuzzySet) -> FuzzyCardinality {
    let mut desc = a.memberships().to_vec();
    desc.sort_by(|x, y| y.total_cmp(x));
    let mut support = Vec::with_capacity(desc.len() + 1);
    support.push((0.0, 1.0));
    for (c, &m) in desc.iter().enumerate() {
        support.push(((c + 1) as f64, m));
    }
    FuzzyCardinality::new(CardinalityKind::Absolute, Completion::AtLeast, support)
}

fn fl_absolute(a: &FuzzySet) -> FuzzyCardinality {
    let mut desc = a.memberships().to_vec();
    desc.sort_by(|x, y| y.total_cmp(x));
    let n = desc.len();
    // Degree that at most c elements are in A: the (c+1)-largest membership
    // must fail, so 1 - mu_(c+1), with mu beyond N read as 0.
    let support = (0..=n)
        .map(|c| {
            let next = if c < n { desc[c] } else { 0.0 };
            (c as f64, 1.0 - next)
        })
        .collect();
    FuzzyCardinality::new(CardinalityKind::Absolute, Completion::AtMost, support)
}

fn fg_relative(a: &FuzzySet, x: &FuzzySet) -> Result<FuzzyCardinality> {
    let min_ax = sorted_ascending(&a.intersect(x)?);
    let x_sorted = sorted_ascending(x);
    let mut pairs = Vec::new();
    for alpha in alpha_grid(&[a, x]) {
        let denom = count_ge(&x_sorted, alpha);
        if denom == 0 {
            continue; // empty level of a subnormal reference contributes nothing
        }
        let prop = count_ge(&min_ax, alpha) as f64 / denom as f64;
        pairs.push((alpha, prop));
    }
    if pairs.is_empty() {
        return Err(Error::EmptyReference);
    }
    let support = envelope(&pairs, 0.0, |achieved, v| achieved >= v);
    Ok(FuzzyCardinality::new(
        CardinalityKind::Relative,
        Completion::AtLeast,
        support,
    ))
}

fn fl_relative(a: &FuzzySet, x: &FuzzySet) -> Result<FuzzyCardinality> {
    let min_ax = sorted_ascending(&a.intersect(x)?);
    let x_sorted = sorted_ascending(x);
    let mut pairs = Vec::new();
    // The at-most count proxy uses strong cuts at 1 - alpha: with alpha = 1
    // it counts supports, with alpha near 0 it counts cores, so low levels
    // make the strong statements, mirroring the absolute complement form.
    for alpha in alpha_grid(&[a, x]) {
        let beta = 1.0 - alpha;
        let denom = count_gt(&x_sorted, beta);
        if denom == 0 {
            continue;
        }
        let prop = count_gt(&min_ax, beta) as f64 / denom as f64;
        pairs.push((alpha, prop));
    }
    if pairs.is_empty() {
        return Err(Error::EmptyReference);
    }
    let support = envelope(&pairs, 1.0, |achieved, v| achieved <= v);
    Ok(FuzzyCardinality::new(
        CardinalityKind::Relative,
        Completion::AtMost,
        support,
    ))
}

/// Fuzzy count of "at least n elements of A" (absolute) or "at least
/// proportion p of `relative_to` is in A" (relative).
pub fn fg_count(a: &FuzzySet, relative_to: Option<&FuzzySet>) -> Result<FuzzyCardinality> {
    match relative_to {
        None => Ok(fg_absolute(a)),
        Some(x) => fg_relative(a, x),
    }
}

/// Fuzzy count of "at most n elements", the at-most dual of [`fg_count`].
pub fn fl_count(a: &FuzzySet, relative_to: Option<&FuzzySet>) -> Result<FuzzyCardinality> {
    match relative_to {
        None => Ok(fl_absolute(a)),
        Some(x) => fl_relative(a, x),
    }
}

/// Fuzzy count of "exactly n elements": pointwise minimum of [`fg_count`]
/// and [`fl_count`] over their merged supports. May be subnormal.
pub fn fe_count(a: &FuzzySet, relative_to: Option<&FuzzySet>) -> Result<FuzzyCardinality> {
    let fg = fg_count(a, relative_to)?;
    let fl = fl_count(a, relative_to)?;
    let mut values: Vec<f64> = fg
        .support()
        .iter()
        .chain(fl.support())
        .map(|&(v, _)| v)
        .collect();
    values.sort_by(f64::total_cmp);
    values.dedup();
    let support = values
        .into_iter()
        .map(|v| (v, fg.membership(v).min(fl.membership(v))))
        .collect();
    let kind = match relative_to {
        None => CardinalityKind::Absolute,
        Some(_) => CardinalityKind::Relative,
    };
    Ok(FuzzyCardinality::new(kind, Completion::None, support))
}
