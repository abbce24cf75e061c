//! Linguistic approximation of discrete fuzzy sets.
//!
//! The engine assigns best-fitting linguistic labels (primary terms, hedges
//! and connectives) to fuzzy sets sampled on a grid, scores the fit with
//! several quality measures, and augments labels with linguistic quantifiers
//! computed from scalar (sigma count) and fuzzy (FGCount / FLCount / FECount)
//! cardinalities.
//!
//! ```
//! use lingapprox::{approximate, parse, quantify_sigma, SearchConfig, Universe, Vocabulary};
//! use std::sync::Arc;
//!
//! let universe = Arc::new(Universe::from_range("t", 0.0, 100.0, 5.0, None).unwrap());
//! let vocab = Vocabulary::standard(Arc::clone(&universe)).unwrap();
//! let target = lingapprox::evaluate(&parse("very large", &vocab).unwrap(), &vocab).unwrap();
//!
//! let ranked = approximate(&target, &vocab, &SearchConfig::default()).unwrap();
//! assert_eq!(ranked[0].rendered, "very large");
//!
//! let props = quantify_sigma(&target, &ranked[0].expr, &vocab, "X", 0.0).unwrap();
//! assert_eq!(props[0].sentence(), "all X are very large");
//! ```
//!
//! Candidate scoring in [`approximate`] runs on rayon when the default
//! `parallel` feature is enabled and falls back to a sequential sweep
//! without it; the ranked output is identical either way.

pub mod approx;
pub mod cardinality;
pub mod demo;
pub mod error;
pub mod fuzzyset;
pub mod label;
pub mod measure;
pub mod quantifier;
pub mod quantify;
pub mod segment;
pub mod shape;
pub mod vocab;

pub use approx::{approximate, approximate_with_backend, Approximation, Backend, SearchConfig};
pub use cardinality::{
    fe_count, fg_count, fl_count, CardinalityKind, Completion, FuzzyCardinality,
};
pub use error::{Error, Result};
pub use fuzzyset::{pointwise, relative_sigma_count, AlphaCut, FuzzySet, PointwiseOp, Universe};
pub use label::{evaluate, parse, render, Connective, LabelExpr};
pub use measure::{measure, MeasureKind};
pub use quantifier::{assign_quantifier, QuantifierChoice};
pub use quantify::{quantify_fuzzy, quantify_sigma, truth_of, QuantMethod, QuantifiedProposition};
pub use segment::segment;
pub use shape::Shape;
pub use vocab::{
    default_modifiers, default_quantifiers, ModifierDef, ModifierRule, QuantifierDef, TermDef,
    Vocabulary,
};
