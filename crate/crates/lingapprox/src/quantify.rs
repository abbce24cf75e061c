//! Quantified linguistic approximation: attaching linguistic quantifiers to
//! label clauses via relative sigma counts (non-fuzzy method) or relative
//! FECounts (fuzzy method), plus truth assessment of quantified propositions.

use crate::cardinality::{fe_count, FuzzyCardinality};
use crate::error::{Error, Result};
use crate::fuzzyset::{relative_sigma_count, FuzzySet};
use crate::label::{evaluate, render, LabelExpr};
use crate::quantifier::{select_quantifier, QuantifierChoice, DEFAULT_TIE_TOLERANCE};
use crate::vocab::Vocabulary;

/// Which cardinality notion produced a proposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantMethod {
    Sigma,
    Fuzzy,
}

impl QuantMethod {
    pub fn name(self) -> &'static str {
        match self {
            QuantMethod::Sigma => "sigma",
            QuantMethod::Fuzzy => "fuzzy",
        }
    }
}

/// A quantified statement "Q subject is clause", e.g. "most X2 are more or
/// less medium". `quantifier` is `None` when no quantifier cleared the
/// threshold; ties render as "name1/name2".
#[derive(Debug, Clone, PartialEq)]
pub struct QuantifiedProposition {
    pub quantifier: Option<QuantifierChoice>,
    pub subject: String,
    pub clause: LabelExpr,
    pub clause_text: String,
    /// Assignment score of the chosen quantifier under the method used.
    pub compatibility: f64,
    /// Relative sigma count of the clause (sigma method only).
    pub proportion: Option<f64>,
    pub method: QuantMethod,
}

impl QuantifiedProposition {
    /// "most X2 are more or less medium" or "(no quantifier) ..." when
    /// everything fell below the threshold.
    pub fn sentence(&self) -> String {
        let q = match &self.quantifier {
            Some(choice) => choice.joined(),
            None => "(no quantifier)".to_string(),
        };
        format!("{q} {} are {}", self.subject, self.clause_text)
    }
}

/// The label as a whole plus, for composites, each top-level or-clause.
fn proposition_scopes(label: &LabelExpr) -> Vec<LabelExpr> {
    let clauses = label.or_clauses();
    if clauses.len() <= 1 {
        vec![label.clone()]
    } else {
        let mut scopes = vec![label.clone()];
        scopes.extend(clauses.into_iter().cloned());
        scopes
    }
}

/// Quantifies `label` against `target` with relative sigma counts: one
/// proposition for the whole label and one per top-level or-clause.
pub fn quantify_sigma(
    target: &FuzzySet,
    label: &LabelExpr,
    vocab: &Vocabulary,
    subject: &str,
    threshold: f64,
) -> Result<Vec<QuantifiedProposition>> {
    if target.sigma_count() == 0.0 {
        return Err(Error::EmptyFuzzySet);
    }
    proposition_scopes(label)
        .into_iter()
        .map(|scope| {
            let meaning = evaluate(&scope, vocab)?;
            let proportion = relative_sigma_count(&meaning, target)?;
            let compats: Vec<(String, f64)> = vocab
                .quantifiers()
                .iter()
                .map(|q| (q.name.clone(), q.membership(proportion)))
                .collect();
            let choice = select_quantifier(&compats, threshold, DEFAULT_TIE_TOLERANCE)?;
            let compatibility = choice.as_ref().map_or(0.0, |c| c.compatibility);
            Ok(QuantifiedProposition {
                quantifier: choice,
                subject: subject.to_string(),
                clause_text: render(&scope),
                clause: scope,
                compatibility,
                proportion: Some(proportion),
                method: QuantMethod::Sigma,
            })
        })
        .collect()
}

/// Possibility of match between a quantifier and a discrete fuzzy
/// cardinality: sup over the cardinality's support of min(mu_Q, mu_card).
pub fn possibility_of_match(
    quantifier: &crate::vocab::QuantifierDef,
    cardinality: &FuzzyCardinality,
) -> f64 {
    cardinality
        .support()
        .iter()
        .map(|&(value, m)| quantifier.membership(value).min(m))
        .fold(0.0, f64::max)
}

/// Quantifies `label` with the fuzzy method: per scope, the relative FECount
/// of the clause against the target is matched to each quantifier by
/// sup-min possibility.
pub fn quantify_fuzzy(
    target: &FuzzySet,
    label: &LabelExpr,
    vocab: &Vocabulary,
    subject: &str,
    threshold: f64,
) -> Result<Vec<QuantifiedProposition>> {
    if target.sigma_count() == 0.0 {
        return Err(Error::EmptyFuzzySet);
    }
    proposition_scopes(label)
        .into_iter()
        .map(|scope| {
            let meaning = evaluate(&scope, vocab)?;
            let cardinality = fe_count(&meaning, Some(target))?;
            let compats: Vec<(String, f64)> = vocab
                .quantifiers()
                .iter()
                .map(|q| (q.name.clone(), possibility_of_match(q, &cardinality)))
                .collect();
            let choice = select_quantifier(&compats, threshold, DEFAULT_TIE_TOLERANCE)?;
            let compatibility = choice.as_ref().map_or(0.0, |c| c.compatibility);
            Ok(QuantifiedProposition {
                quantifier: choice,
                subject: subject.to_string(),
                clause_text: render(&scope),
                clause: scope,
                compatibility,
                proportion: None,
                method: QuantMethod::Fuzzy,
            })
        })
        .collect()
}

/// Degree to which "Q X is clause" holds: mu_Q of the clause's relative
/// sigma count against the target.
pub fn truth_of(
    quantifier: &str,
    clause: &LabelExpr,
    target: &FuzzySet,
    vocab: &Vocabulary,
) -> Result<f64> {
    if target.sigma_count() == 0.0 {
        return Err(Error::EmptyFuzzySet);
    }
    let q = vocab
        .quantifier(quantifier)
        .ok_or_else(|| Error::UnknownName(quantifier.to_string()))?;
    let meaning = evaluate(clause, vocab)?;
    let proportion = relative_sigma_count(&meaning, target)?;
    Ok(q.membership(proportion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzyset::Universe;
    use crate::label::parse;
    use std::sync::Arc;

    fn vocab() -> Vocabulary {
        let u = Arc::new(Universe::from_range("u", 0.0, 100.0, 5.0, None).unwrap());
        Vocabulary::standard(u).unwrap()
    }

    fn quantifier_names(props: &[QuantifiedProposition]) -> Vec<String> {
        props
            .iter()
            .map(|p| {
                p.quantifier
                    .as_ref()
                    .map(|c| c.joined())
                    .unwrap_or_default()
            })
            .collect()
    }

    #[test]
    fn superset_label_is_all() {
        let v = vocab();
        let label = parse("medium", &v).unwrap();
        let medium = v.term_set("medium").unwrap();
        // target strictly inside medium
        let target = crate::vocab::ModifierRule::Very.apply(medium);
        let props = quantify_sigma(&target, &label, &v, "X", 0.0).unwrap();
        assert_eq!(props.len(), 1);
        let q = props[0].quantifier.as_ref().unwrap();
        assert_eq!(q.primary, "all");
        assert_eq!(q.compatibility, 1.0);
        assert_eq!(props[0].proportion, Some(1.0));
        assert_eq!(props[0].sentence(), "all X are medium");
    }

    #[test]
    fn composite_label_quantifies_whole_then_clauses() {
        let v = vocab();
        let label = parse("medium or large", &v).unwrap();
        let target = evaluate(&label, &v).unwrap();
        let props = quantify_sigma(&target, &label, &v, "X", 0.0).unwrap();
        assert_eq!(props.len(), 3);
        assert_eq!(props[0].clause_text, "medium or large");
        assert_eq!(props[1].clause_text, "medium");
        assert_eq!(props[2].clause_text, "large");
        assert_eq!(quantifier_names(&props)[0], "all");
    }

    #[test]
    fn fuzzy_identity_is_all_with_full_compatibility() {
        let v = vocab();
        let label = parse("medium", &v).unwrap();
        let target = v.term_set("medium").unwrap().clone();
        let props = quantify_fuzzy(&target, &label, &v, "X", 0.0).unwrap();
        let q = props[0].quantifier.as_ref().unwrap();
        assert_eq!(q.primary, "all");
        assert_eq!(q.compatibility, 1.0);
    }

    #[test]
    fn sigma_and_fuzzy_agree_on_crisp_extremes() {
        let u = Arc::new(Universe::from_range("u", 0.0, 100.0, 5.0, None).unwrap());
        let v = Vocabulary::standard(Arc::clone(&u)).unwrap();

        // crisp target inside the label's core: proportion 1 -> all, both methods
        let small = v.term_set("small").unwrap();
        let core = FuzzySet::new(
            Arc::clone(&u),
            small
                .memberships()
                .iter()
                .map(|&m| if m == 1.0 { 1.0 } else { 0.0 })
                .collect(),
        )
        .unwrap();
        let label = parse("small", &v).unwrap();
        let s = quantify_sigma(&core, &label, &v, "X", 0.0).unwrap();
        let f = quantify_fuzzy(&core, &label, &v, "X", 0.0).unwrap();
        assert_eq!(s[0].quantifier.as_ref().unwrap().primary, "all");
        assert_eq!(f[0].quantifier.as_ref().unwrap().primary, "all");

        // label disjoint from the target: proportion 0 -> none, both methods
        let medium = v.term_set("medium").unwrap();
        let disjoint = FuzzySet::new(
            Arc::clone(&u),
            medium
                .memberships()
                .iter()
                .map(|&m| if m == 0.0 { 1.0 } else { 0.0 })
                .collect(),
        )
        .unwrap();
        let label = parse("medium", &v).unwrap();
        let s = quantify_sigma(&disjoint, &label, &v, "X", 0.0).unwrap();
        let f = quantify_fuzzy(&disjoint, &label, &v, "X", 0.0).unwrap();
        assert_eq!(s[0].quantifier.as_ref().unwrap().primary, "none");
        assert_eq!(f[0].quantifier.as_ref().unwrap().primary, "none");
    }

    #[test]
    fn threshold_converts_results_to_no_quantifier() {
        let v = vocab();
        let label = parse("medium", &v).unwrap();
        let medium = v.term_set("medium").unwrap();
        let target = crate::vocab::ModifierRule::Very.apply(medium);
        let lenient = quantify_sigma(&target, &label, &v, "X", 0.0).unwrap();
        let strict = quantify_sigma(&target, &label, &v, "X", 1.0).unwrap();
        // compatibility 1.0 survives even a threshold of 1
        assert_eq!(
            lenient[0].quantifier.as_ref().unwrap().primary,
            strict[0].quantifier.as_ref().unwrap().primary
        );

        // a mid-range proportion has compatibility < 1 and gets eliminated
        let half = FuzzySet::new(
            Arc::clone(v.universe()),
            medium
                .memberships()
                .iter()
                .map(|&m| m * 0.5 + 0.3)
                .collect(),
        )
        .unwrap();
        let lenient = quantify_sigma(&half, &label, &v, "X", 0.0).unwrap();
        let strict = quantify_sigma(&half, &label, &v, "X", 0.999).unwrap();
        assert!(lenient[0].quantifier.is_some());
        assert!(strict[0].quantifier.is_none());
        assert_eq!(strict[0].sentence(), "(no quantifier) X are medium");
    }

    #[test]
    fn truth_matches_sigma_compatibility() {
        let v = vocab();
        let label = parse("more or less medium", &v).unwrap();
        let target = evaluate(&parse("medium or very large", &v).unwrap(), &v).unwrap();
        let props = quantify_sigma(&target, &label, &v, "X", 0.0).unwrap();
        let q = props[0].quantifier.as_ref().unwrap();
        let t = truth_of(&q.primary, &label, &target, &v).unwrap();
        assert!((t - props[0].compatibility).abs() < 1e-12);
    }

    #[test]
    fn truth_of_extremes() {
        let v = vocab();
        let medium = v.term_set("medium").unwrap();
        let inner = crate::vocab::ModifierRule::Very.apply(medium);
        let label = parse("medium", &v).unwrap();
        assert_eq!(truth_of("all", &label, &inner, &v).unwrap(), 1.0);
        assert!(matches!(
            truth_of("sometimes", &label, &inner, &v),
            Err(Error::UnknownName(_))
        ));

        // disjoint target: "none X are medium" holds fully
        let disjoint = FuzzySet::new(
            Arc::clone(v.universe()),
            medium
                .memberships()
                .iter()
                .map(|&m| if m == 0.0 { 1.0 } else { 0.0 })
                .collect(),
        )
        .unwrap();
        assert_eq!(truth_of("none", &label, &disjoint, &v).unwrap(), 1.0);
    }

    #[test]
    fn truth_of_most_peaks_at_eighty_percent() {
        // a universe sized so that a crisp 4-of-5 subset gives proportion 0.8
        let u = Arc::new(Universe::new("u", (0..5).map(|i| i as f64).collect(), None).unwrap());
        let v = Vocabulary::new(
            Arc::clone(&u),
            vec![crate::vocab::TermDef::new(
                "covered",
                crate::shape::Shape::Explicit(vec![1.0, 1.0, 1.0, 1.0, 0.0]),
            )
            .unwrap()],
            crate::vocab::default_modifiers(),
            crate::vocab::default_quantifiers(),
        )
        .unwrap();
        let everything = FuzzySet::new(u, vec![1.0; 5]).unwrap();
        let label = parse("covered", &v).unwrap();
        assert_eq!(truth_of("most", &label, &everything, &v).unwrap(), 1.0);
    }

    #[test]
    fn empty_target_is_rejected() {
        let v = vocab();
        let label = parse("medium", &v).unwrap();
        let zero = FuzzySet::new(Arc::clone(v.universe()), vec![0.0; 21]).unwrap();
        assert!(matches!(
            quantify_sigma(&zero, &label, &v, "X", 0.0),
            Err(Error::EmptyFuzzySet)
        ));
        assert!(matches!(
            quantify_fuzzy(&zero, &label, &v, "X", 0.0),
            Err(Error::EmptyFuzzySet)
        ));
        assert!(matches!(
            truth_of("most", &label, &zero, &v),
            Err(Error::EmptyFuzzySet)
        ));
    }
}
