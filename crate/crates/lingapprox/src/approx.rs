//! Enumeration search for the best-fitting label of a target fuzzy set.
//!
//! The candidate space is every expression of at most `max_clauses` clauses
//! joined by a single connective kind, where each clause is a term carrying
//! up to `max_modifiers_per_term` stacked modifiers. Candidates are scored
//! with the configured measure minus a complexity penalty and ranked under a
//! total order (score, node count, canonical rendering), so the output is
//! identical no matter how scoring is scheduled.

use crate::error::{Error, Result};
use crate::fuzzyset::FuzzySet;
use crate::label::{render, Connective, LabelExpr};
use crate::measure::{measure, MeasureKind};
use crate::segment::segment;
use crate::vocab::Vocabulary;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Search bounds and scoring configuration.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchConfig {
    pub measure: MeasureKind,
    pub max_clauses: usize,
    pub max_modifiers_per_term: usize,
    pub top_k: usize,
    pub complexity_penalty: f64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            measure: MeasureKind::HammingComplement,
            max_clauses: 2,
            max_modifiers_per_term: 1,
            top_k: 5,
            complexity_penalty: 0.0,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_clauses < 1 {
            return Err(Error::InvalidConfig("max_clauses must be >= 1".into()));
        }
        if self.top_k < 1 {
            return Err(Error::InvalidConfig("top_k must be >= 1".into()));
        }
        if !(self.complexity_penalty >= 0.0 && self.complexity_penalty.is_finite()) {
            return Err(Error::InvalidConfig(
                "complexity_penalty must be finite and >= 0".into(),
            ));
        }
        Ok(())
    }
}

/// Score of one clause against one segment of the target.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentScore {
    /// 1-based segment number, left to right.
    pub segment: usize,
    pub clause: String,
    pub value: f64,
}

/// One ranked search result.
#[derive(Debug, Clone, PartialEq)]
pub struct Approximation {
    pub expr: LabelExpr,
    pub rendered: String,
    /// Measure of the evaluated label against the whole target (before the
    /// complexity penalty).
    pub score: f64,
    pub segment_scores: Vec<SegmentScore>,
}

/// Which scoring path to use; results are identical by construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Backend {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Backend {
    /// Parallel when the feature is enabled, sequential otherwise.
    pub fn preferred() -> Backend {
        #[cfg(feature = "parallel")]
        {
            Backend::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Backend::Sequential
        }
    }
}

/// A term with stacked modifiers, pre-evaluated and pre-rendered.
#[derive(Debug, Clone)]
struct Clause {
    expr: LabelExpr,
    set: FuzzySet,
    rendered: String,
    nodes: usize,
}

fn build_clauses(vocab: &Vocabulary, max_modifiers: usize) -> Vec<Clause> {
    let mut clauses = Vec::new();
    for (ti, term) in vocab.terms().iter().enumerate() {
        let expr = LabelExpr::term(term.name.clone());
        let base = Clause {
            rendered: render(&expr),
            nodes: 1,
            expr,
            set: vocab.term_set_at(ti).clone(),
        };
        let mut frontier = vec![base.clone()];
        clauses.push(base);
        for _ in 0..max_modifiers {
            let mut next = Vec::new();
            for clause in &frontier {
                for def in vocab.modifiers() {
                    let expr = LabelExpr::modified(def.name.clone(), clause.expr.clone());
                    let wrapped = Clause {
                        rendered: render(&expr),
                        nodes: clause.nodes + 1,
                        expr,
                        set: def.rule.apply(&clause.set),
                    };
                    clauses.push(wrapped.clone());
                    next.push(wrapped);
                }
            }
            frontier = next;
        }
    }
    clauses
}

/// Candidate: indices into the clause pool plus a connective for k >= 2.
#[derive(Debug, Clone)]
struct Candidate {
    clause_indices: Vec<usize>,
    connective: Connective,
}

/// Clause sets, not sequences: the connectives are commutative and
/// idempotent, so permutations and repeats of a combination evaluate
/// identically and could never outrank its canonical form.
fn enumerate_candidates(pool_len: usize, max_clauses: usize) -> Vec<Candidate> {
    let mut out = Vec::new();
    for i in 0..pool_len {
        out.push(Candidate {
            clause_indices: vec![i],
            connective: Connective::Or,
        });
    }
    let mut combo: Vec<usize> = Vec::new();
    for k in 2..=max_clauses {
        combo.clear();
        combo.extend(0..k);
        if k > pool_len {
            break;
        }
        loop {
            for connective in [Connective::And, Connective::Or] {
                out.push(Candidate {
                    clause_indices: combo.clone(),
                    connective,
                });
            }
            // next k-combination of 0..pool_len in lexicographic order
            let mut i = k;
            while i > 0 && combo[i - 1] == pool_len - k + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            combo[i - 1] += 1;
            for j in i..k {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    out
}

fn candidate_expr(candidate: &Candidate, pool: &[Clause]) -> LabelExpr {
    let mut iter = candidate.clause_indices.iter();
    let first = pool[*iter.next().unwrap()].expr.clone();
    iter.fold(first, |acc, &i| {
        LabelExpr::composite(acc, candidate.connective, pool[i].expr.clone())
    })
}

fn candidate_set(candidate: &Candidate, pool: &[Clause]) -> FuzzySet {
    let first = &pool[candidate.clause_indices[0]].set;
    let mut acc = first.memberships().to_vec();
    for &i in &candidate.clause_indices[1..] {
        for (a, &b) in acc.iter_mut().zip(pool[i].set.memberships()) {
            *a = match candidate.connective {
                Connective::And => a.min(b),
                Connective::Or => a.max(b),
            };
        }
    }
    first.with_memberships(acc)
}

struct Scored {
    candidate_index: usize,
    adjusted: f64,
    score: f64,
    nodes: usize,
    rendered: String,
}

fn score_one(
    index: usize,
    candidate: &Candidate,
    pool: &[Clause],
    target: &FuzzySet,
    config: &SearchConfig,
) -> Option<Scored> {
    // candidates whose meaning degenerates (e.g. an all-zero label under
    // relative count) fall out of the ranking
    let score = match candidate.clause_indices.as_slice() {
        [single] => measure(config.measure, target, &pool[*single].set).ok()?,
        _ => measure(config.measure, target, &candidate_set(candidate, pool)).ok()?,
    };
    let k = candidate.clause_indices.len();
    let nodes = candidate
        .clause_indices
        .iter()
        .map(|&i| pool[i].nodes)
        .sum::<usize>()
        + (k - 1);
    // clauses are terms or modified terms, so joining them reproduces the
    // canonical left-associative rendering without building the AST
    let mut rendered = pool[candidate.clause_indices[0]].rendered.clone();
    for &i in &candidate.clause_indices[1..] {
        rendered.push(' ');
        rendered.push_str(candidate.connective.name());
        rendered.push(' ');
        rendered.push_str(&pool[i].rendered);
    }
    Some(Scored {
        candidate_index: index,
        adjusted: score - config.complexity_penalty * nodes as f64,
        score,
        nodes,
        rendered,
    })
}

fn rank(mut scored: Vec<Scored>, top_k: usize) -> Vec<Scored> {
    scored.sort_by(|a, b| {
        b.adjusted
            .total_cmp(&a.adjusted)
            .then_with(|| a.nodes.cmp(&b.nodes))
            .then_with(|| a.rendered.cmp(&b.rendered))
    });
    scored.truncate(top_k);
    scored
}

/// Ranked linguistic approximations of `target`, best first.
pub fn approximate(
    target: &FuzzySet,
    vocab: &Vocabulary,
    config: &SearchConfig,
) -> Result<Vec<Approximation>> {
    approximate_with_backend(target, vocab, config, Backend::preferred())
}

/// Same search on an explicit backend. The ranked output is byte-identical
/// across backends; the parallel one only schedules scoring differently.
pub fn approximate_with_backend(
    target: &FuzzySet,
    vocab: &Vocabulary,
    config: &SearchConfig,
    backend: Backend,
) -> Result<Vec<Approximation>> {
    config.validate()?;
    if target.sigma_count() == 0.0 {
        return Err(Error::EmptyFuzzySet);
    }
    if vocab.terms().is_empty() {
        return Err(Error::VocabularyEmpty);
    }
    if target.universe() != vocab.universe() {
        return Err(Error::UniverseMismatch {
            left: target.universe().name().to_string(),
            right: vocab.universe().name().to_string(),
        });
    }

    let pool = build_clauses(vocab, config.max_modifiers_per_term);
    let candidates = enumerate_candidates(pool.len(), config.max_clauses);

    let scored: Vec<Scored> = match backend {
        Backend::Sequential => candidates
            .iter()
            .enumerate()
            .filter_map(|(i, c)| score_one(i, c, &pool, target, config))
            .collect(),
        #[cfg(feature = "parallel")]
        Backend::Parallel => {
            // individual candidates are microsecond-sized; chunking keeps the
            // scheduling overhead below the work
            const CHUNK: usize = 256;
            let pool = &pool;
            candidates
                .par_chunks(CHUNK)
                .enumerate()
                .flat_map_iter(|(chunk_index, chunk)| {
                    chunk.iter().enumerate().filter_map(move |(offset, c)| {
                        score_one(chunk_index * CHUNK + offset, c, pool, target, config)
                    })
                })
                .collect()
        }
    };

    let segments = segment(target)?;
    rank(scored, config.top_k)
        .into_iter()
        .map(|s| {
            let candidate = &candidates[s.candidate_index];
            let expr = candidate_expr(candidate, &pool);
            debug_assert_eq!(s.rendered, render(&expr));
            let segment_scores =
                annotate_segments(&expr, &segments, config.measure, &pool, candidate)?;
            Ok(Approximation {
                expr,
                rendered: s.rendered,
                score: s.score,
                segment_scores,
            })
        })
        .collect()
}

/// Pairs the label's top-level or-clauses with the target's segments.
/// Matching counts pair i with i; otherwise pairs are chosen greedily by
/// best measure. Results are ordered by segment.
fn annotate_segments(
    expr: &LabelExpr,
    segments: &[FuzzySet],
    kind: MeasureKind,
    pool: &[Clause],
    candidate: &Candidate,
) -> Result<Vec<SegmentScore>> {
    // or-composites decompose into their clauses; anything else is one clause
    let whole;
    let clause_sets: Vec<(String, &FuzzySet)> =
        if candidate.clause_indices.len() > 1 && candidate.connective == Connective::Or {
            candidate
                .clause_indices
                .iter()
                .map(|&i| (pool[i].rendered.clone(), &pool[i].set))
                .collect()
        } else {
            whole = candidate_set(candidate, pool);
            vec![(render(expr), &whole)]
        };
    score_clauses_against_segments(&clause_sets, segments, kind)
}

fn score_clauses_against_segments(
    clauses: &[(String, &FuzzySet)],
    segments: &[FuzzySet],
    kind: MeasureKind,
) -> Result<Vec<SegmentScore>> {
    let mut out = Vec::new();
    if clauses.len() == segments.len() {
        for (i, ((text, set), seg)) in clauses.iter().zip(segments).enumerate() {
            if let Ok(value) = measure(kind, seg, set) {
                out.push(SegmentScore {
                    segment: i + 1,
                    clause: text.clone(),
                    value,
                });
            }
        }
        return Ok(out);
    }
    // greedy best-measure matching when counts differ
    let mut free_clauses: Vec<usize> = (0..clauses.len()).collect();
    let mut free_segments: Vec<usize> = (0..segments.len()).collect();
    while !free_clauses.is_empty() && !free_segments.is_empty() {
        let mut best: Option<(f64, usize, usize)> = None;
        for &ci in &free_clauses {
            for &si in &free_segments {
                if let Ok(v) = measure(kind, &segments[si], clauses[ci].1) {
                    let better = match best {
                        None => true,
                        Some((bv, bc, bs)) => v > bv || (v == bv && (ci, si) < (bc, bs)),
                    };
                    if better {
                        best = Some((v, ci, si));
                    }
                }
            }
        }
        let Some((value, ci, si)) = best else { break };
        out.push(SegmentScore {
            segment: si + 1,
            clause: clauses[ci].0.clone(),
            value,
        });
        free_clauses.retain(|&c| c != ci);
        free_segments.retain(|&s| s != si);
    }
    out.sort_by_key(|s| s.segment);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fuzzyset::Universe;
    use crate::label::{evaluate, parse};
    use std::sync::Arc;

    fn vocab() -> Vocabulary {
        let u = Arc::new(Universe::from_range("u", 0.0, 100.0, 5.0, None).unwrap());
        Vocabulary::standard(u).unwrap()
    }

    #[test]
    fn finds_a_target_inside_the_search_space() {
        let v = vocab();
        let target = evaluate(&parse("very large", &v).unwrap(), &v).unwrap();
        let results = approximate(&target, &v, &SearchConfig::default()).unwrap();
        let top = &results[0];
        assert_eq!(top.rendered, "very large");
        assert!((top.score - 1.0).abs() < 1e-12);
        let meaning = evaluate(&top.expr, &v).unwrap();
        assert_eq!(meaning.memberships(), target.memberships());
    }

    #[test]
    fn composite_target_is_recovered() {
        let v = vocab();
        let target =
            evaluate(&parse("more or less medium or very large", &v).unwrap(), &v).unwrap();
        let results = approximate(&target, &v, &SearchConfig::default()).unwrap();
        assert_eq!(results[0].rendered, "more or less medium or very large");
        assert!((results[0].score - 1.0).abs() < 1e-12);
    }

    #[test]
    fn empty_target_is_rejected() {
        let v = vocab();
        let zero = FuzzySet::new(Arc::clone(v.universe()), vec![0.0; 21]).unwrap();
        assert!(matches!(
            approximate(&zero, &v, &SearchConfig::default()),
            Err(Error::EmptyFuzzySet)
        ));
    }

    #[test]
    fn empty_vocabulary_is_rejected() {
        let u = Arc::new(Universe::from_range("u", 0.0, 100.0, 5.0, None).unwrap());
        let v = Vocabulary::new(Arc::clone(&u), vec![], vec![], vec![]).unwrap();
        let target = FuzzySet::new(u, vec![0.5; 21]).unwrap();
        assert!(matches!(
            approximate(&target, &v, &SearchConfig::default()),
            Err(Error::VocabularyEmpty)
        ));
    }

    #[test]
    fn invalid_config_is_rejected() {
        let v = vocab();
        let target = evaluate(&parse("medium", &v).unwrap(), &v).unwrap();
        let bad = SearchConfig {
            top_k: 0,
            ..SearchConfig::default()
        };
        assert!(matches!(
            approximate(&target, &v, &bad),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn ties_prefer_fewer_nodes_then_lexicographic() {
        let v = vocab();
        let target = evaluate(&parse("small", &v).unwrap(), &v).unwrap();
        let results = approximate(&target, &v, &SearchConfig::default()).unwrap();
        // "small" ties at 1.0 with e.g. "small or very small" but has fewer nodes
        assert_eq!(results[0].rendered, "small");
    }

    #[test]
    fn sequential_and_default_backends_agree() {
        let v = vocab();
        let target =
            evaluate(&parse("more or less medium or very large", &v).unwrap(), &v).unwrap();
        let config = SearchConfig::default();
        let a = approximate(&target, &v, &config).unwrap();
        let b = approximate_with_backend(&target, &v, &config, Backend::Sequential).unwrap();
        assert_eq!(a, b);
        let c = approximate(&target, &v, &config).unwrap();
        assert_eq!(a, c);
    }

    #[test]
    fn complexity_penalty_prefers_short_labels() {
        let v = vocab();
        let target = evaluate(&parse("medium or large", &v).unwrap(), &v).unwrap();
        let config = SearchConfig {
            complexity_penalty: 0.2,
            ..SearchConfig::default()
        };
        let results = approximate(&target, &v, &config).unwrap();
        // with a harsh penalty a single term can overtake the exact composite
        assert!(results[0].expr.node_count() <= 3);
    }

    #[test]
    fn segment_scores_follow_clause_order() {
        let v = vocab();
        let target =
            evaluate(&parse("more or less medium or very large", &v).unwrap(), &v).unwrap();
        let results = approximate(&target, &v, &SearchConfig::default()).unwrap();
        let top = &results[0];
        assert_eq!(top.segment_scores.len(), 2);
        assert_eq!(top.segment_scores[0].segment, 1);
        assert_eq!(top.segment_scores[0].clause, "more or less medium");
        assert_eq!(top.segment_scores[1].clause, "very large");
        // the valley point belongs to the left segment, so clause-vs-segment
        // fits are near but not exactly 1
        for s in &top.segment_scores {
            assert!(s.value > 0.9, "segment score {}", s.value);
        }
    }
}
