//! Vocabulary: primary terms, linguistic modifiers, and linguistic
//! quantifiers, plus the standard defaults.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fuzzyset::{FuzzySet, Universe};
use crate::shape::Shape;

/// Built-in unary membership transforms (hedges).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModifierRule {
    Not,
    Very,
    MoreLess,
    Indeed,
    Above,
    Below,
}

impl ModifierRule {
    pub const ALL: [ModifierRule; 6] = [
        ModifierRule::Not,
        ModifierRule::Very,
        ModifierRule::MoreLess,
        ModifierRule::Indeed,
        ModifierRule::Above,
        ModifierRule::Below,
    ];

    /// Canonical name of the rule.
    pub fn canonical_name(self) -> &'static str {
        match self {
            ModifierRule::Not => "not",
            ModifierRule::Very => "very",
            ModifierRule::MoreLess => "more or less",
            ModifierRule::Indeed => "indeed",
            ModifierRule::Above => "above",
            ModifierRule::Below => "below",
        }
    }

    pub fn from_canonical(name: &str) -> Option<ModifierRule> {
        ModifierRule::ALL
            .into_iter()
            .find(|r| r.canonical_name() == name)
    }

    /// Applies the hedge to a whole set.
    pub fn apply(self, a: &FuzzySet) -> FuzzySet {
        let mu = a.memberships();
        let out = match self {
            ModifierRule::Not => mu.iter().map(|&m| 1.0 - m).collect(),
            ModifierRule::Very => mu.iter().map(|&m| m * m).collect(),
            ModifierRule::MoreLess => mu.iter().map(|&m| m.sqrt()).collect(),
            ModifierRule::Indeed => mu.iter().map(|&m| indeed(m)).collect(),
            ModifierRule::Above => {
                // zero at and left of the peak, complemented membership right of it;
                // a plateau at the height extends the zeroed region to its end
                let anchor = last_peak_index(mu);
                one_sided(mu, |i| i > anchor)
            }
            ModifierRule::Below => {
                let anchor = first_peak_index(mu);
                one_sided(mu, |i| i < anchor)
            }
        };
        a.with_memberships(out)
    }
}

/// Contrast intensification: fixes 0, 0.5 and 1, pushes everything else
/// away from 0.5.
fn indeed(m: f64) -> f64 {
    if m <= 0.5 {
        2.0 * m * m
    } else {
        1.0 - 2.0 * (1.0 - m) * (1.0 - m)
    }
}

fn first_peak_index(mu: &[f64]) -> usize {
    let h = mu.iter().fold(0.0, |acc: f64, &m| acc.max(m));
    mu.iter().position(|&m| m == h).unwrap_or(0)
}

fn last_peak_index(mu: &[f64]) -> usize {
    let first = first_peak_index(mu);
    let h = mu[first];
    let mut end = first;
    while end + 1 < mu.len() && mu[end + 1] == h {
        end += 1;
    }
    end
}

fn one_sided(mu: &[f64], keep: impl Fn(usize) -> bool) -> Vec<f64> {
    mu.iter()
        .enumerate()
        .map(|(i, &m)| if keep(i) { 1.0 - m } else { 0.0 })
        .collect()
}

/// Named primary term with its shape.
#[derive(Debug, Clone, PartialEq)]
pub struct TermDef {
    pub name: String,
    pub shape: Shape,
}

impl TermDef {
    pub fn new(name: impl Into<String>, shape: Shape) -> Result<Self> {
        let name = name.into();
        shape.validate(&name)?;
        Ok(TermDef { name, shape })
    }

    /// Samples the term's shape at every grid point of the universe.
    pub fn sample(&self, universe: &Arc<Universe>) -> Result<FuzzySet> {
        let values = self.shape.sample(&self.name, universe)?;
        FuzzySet::new(Arc::clone(universe), values)
    }
}

/// Named modifier bound to one of the built-in rules.
#[derive(Debug, Clone, PartialEq)]
pub struct ModifierDef {
    pub name: String,
    pub rule: ModifierRule,
}

/// Named linguistic quantifier: a fuzzy subset of the proportion scale [0, 1].
#[derive(Debug, Clone, PartialEq)]
pub struct QuantifierDef {
    pub name: String,
    pub shape: Shape,
}

impl QuantifierDef {
    pub fn new(name: impl Into<String>, shape: Shape) -> Result<Self> {
        let name = name.into();
        if matches!(shape, Shape::Explicit(_)) {
            return Err(Error::InvalidConfig(format!(
                "quantifier '{name}' needs a triangular or trapezoidal shape"
            )));
        }
        shape.validate(&name)?;
        Ok(QuantifierDef { name, shape })
    }

    /// Membership of a proportion in [0, 1].
    pub fn membership(&self, p: f64) -> f64 {
        self.shape.membership_at(p)
    }

    /// Proportion where the shape peaks (left edge of the core).
    pub fn peak(&self) -> f64 {
        match self.shape {
            Shape::Triangular(_, b, _) => b,
            Shape::Trapezoidal(_, b, _, _) => b,
            Shape::Explicit(_) => unreachable!("rejected at construction"),
        }
    }
}

/// The seven default quantifiers over the proportion scale, ordered
/// none -> all. The shapes are implementation defaults calibrated by the
/// acceptance suite, not data from any source.
pub fn default_quantifiers() -> Vec<QuantifierDef> {
    [
        ("none", Shape::Triangular(0.0, 0.0, 0.05)),
        ("almost none", Shape::Triangular(0.0, 0.07, 0.14)),
        ("some", Shape::Triangular(0.10, 0.17, 0.30)),
        ("few", Shape::Triangular(0.16, 0.45, 0.75)),
        ("most", Shape::Triangular(0.68, 0.80, 0.87)),
        ("almost all", Shape::Triangular(0.85, 0.93, 0.995)),
        ("all", Shape::Triangular(0.98, 1.0, 1.0)),
    ]
    .into_iter()
    .map(|(name, shape)| QuantifierDef::new(name, shape).expect("default shapes are valid"))
    .collect()
}

const RESERVED: [&str; 4] = ["and", "or", "(", ")"];

/// Terms, modifiers, connectives and quantifiers over one universe.
/// Term sets are sampled once at construction; lookups are by name.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    universe: Arc<Universe>,
    terms: Vec<TermDef>,
    term_sets: Vec<FuzzySet>,
    modifiers: Vec<ModifierDef>,
    quantifiers: Vec<QuantifierDef>,
}

impl Vocabulary {
    pub fn new(
        universe: Arc<Universe>,
        terms: Vec<TermDef>,
        modifiers: Vec<ModifierDef>,
        quantifiers: Vec<QuantifierDef>,
    ) -> Result<Self> {
        check_unique(terms.iter().map(|t| t.name.as_str()))?;
        check_unique(modifiers.iter().map(|m| m.name.as_str()))?;
        check_unique(quantifiers.iter().map(|q| q.name.as_str()))?;
        for name in terms
            .iter()
            .map(|t| t.name.as_str())
            .chain(modifiers.iter().map(|m| m.name.as_str()))
        {
            if RESERVED.contains(&name) || name.contains('(') || name.contains(')') {
                return Err(Error::ReservedName(name.to_string()));
            }
        }
        let term_sets = terms
            .iter()
            .map(|t| t.sample(&universe))
            .collect::<Result<Vec<_>>>()?;
        Ok(Vocabulary {
            universe,
            terms,
            term_sets,
            modifiers,
            quantifiers,
        })
    }

    /// Default vocabulary: small / medium / large over the universe span,
    /// all six modifiers, and the default quantifier set.
    pub fn standard(universe: Arc<Universe>) -> Result<Self> {
        let (lo, hi) = universe.span();
        let w = hi - lo;
        let terms = vec![
            TermDef::new(
                "small",
                Shape::Trapezoidal(lo, lo, lo + 0.15 * w, lo + 0.35 * w),
            )?,
            TermDef::new(
                "medium",
                Shape::Triangular(lo + 0.25 * w, lo + 0.5 * w, lo + 0.75 * w),
            )?,
            TermDef::new(
                "large",
                Shape::Trapezoidal(lo + 0.65 * w, lo + 0.85 * w, hi, hi),
            )?,
        ];
        Vocabulary::new(universe, terms, default_modifiers(), default_quantifiers())
    }

    pub fn universe(&self) -> &Arc<Universe> {
        &self.universe
    }

    pub fn terms(&self) -> &[TermDef] {
        &self.terms
    }

    pub fn modifiers(&self) -> &[ModifierDef] {
        &self.modifiers
    }

    pub fn quantifiers(&self) -> &[QuantifierDef] {
        &self.quantifiers
    }

    /// Pre-sampled fuzzy set of a term.
    pub fn term_set(&self, name: &str) -> Option<&FuzzySet> {
        self.terms
            .iter()
            .position(|t| t.name == name)
            .map(|i| &self.term_sets[i])
    }

    pub fn term_set_at(&self, index: usize) -> &FuzzySet {
        &self.term_sets[index]
    }

    pub fn modifier(&self, name: &str) -> Option<&ModifierDef> {
        self.modifiers.iter().find(|m| m.name == name)
    }

    pub fn quantifier(&self, name: &str) -> Option<&QuantifierDef> {
        self.quantifiers.iter().find(|q| q.name == name)
    }

    /// Applies a modifier by vocabulary name.
    pub fn apply_modifier(&self, name: &str, a: &FuzzySet) -> Result<FuzzySet> {
        let def = self
            .modifier(name)
            .ok_or_else(|| Error::UnknownModifier(name.to_string()))?;
        Ok(def.rule.apply(a))
    }

    /// All names the label tokenizer must recognize, with their token kinds.
    pub(crate) fn token_names(&self) -> Vec<(&str, NameKind)> {
        let mut names: Vec<(&str, NameKind)> = self
            .terms
            .iter()
            .map(|t| (t.name.as_str(), NameKind::Term))
            .chain(
                self.modifiers
                    .iter()
                    .map(|m| (m.name.as_str(), NameKind::Modifier)),
            )
            .collect();
        // longest match first
        names.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then(a.0.cmp(b.0)));
        names
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum NameKind {
    Term,
    Modifier,
}

/// All six built-in modifiers under their canonical names.
pub fn default_modifiers() -> Vec<ModifierDef> {
    ModifierRule::ALL
        .into_iter()
        .map(|rule| ModifierDef {
            name: rule.canonical_name().to_string(),
            rule,
        })
        .collect()
}

fn check_unique<'a>(names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = Vec::new();
    for name in names {
        if seen.contains(&name) {
            return Err(Error::DuplicateName(name.to_string()));
        }
        seen.push(name);
    }
    Ok(())
}
