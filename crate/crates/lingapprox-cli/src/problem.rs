//! Problem and vocabulary file loading.
//!
//! A problem is a single JSON document: a universe (explicit points or a
//! min/max/step range), named membership vectors, and an optional vocabulary
//! override. A two-column CSV (x, mu) is accepted as a one-set alternative.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;

use lingapprox::{
    default_modifiers, default_quantifiers, FuzzySet, ModifierRule, QuantifierDef, Shape, TermDef,
    Universe, Vocabulary,
};

use crate::{CliError, EXIT_FILE, EXIT_VALIDATION};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemSpec {
    pub universe: UniverseSpec,
    pub sets: BTreeMap<String, Vec<f64>>,
    #[serde(default)]
    pub vocabulary: Option<VocabularySpec>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UniverseSpec {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub unit: Option<String>,
    #[serde(default)]
    pub points: Option<Vec<f64>>,
    #[serde(default)]
    pub min: Option<f64>,
    #[serde(default)]
    pub max: Option<f64>,
    #[serde(default)]
    pub step: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VocabularySpec {
    pub terms: Vec<ShapedName>,
    #[serde(default)]
    pub modifiers: Option<Vec<String>>,
    #[serde(default)]
    pub quantifiers: Option<Vec<ShapedName>>,
}

/// A named shape: exactly one of `triangular`, `trapezoidal`, `explicit`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ShapedName {
    pub name: String,
    #[serde(default)]
    pub triangular: Option<[f64; 3]>,
    #[serde(default)]
    pub trapezoidal: Option<[f64; 4]>,
    #[serde(default)]
    pub explicit: Option<Vec<f64>>,
}

impl ShapedName {
    fn shape(&self, allow_explicit: bool) -> Result<Shape, CliError> {
        let mut shapes = Vec::new();
        if let Some(p) = self.triangular {
            shapes.push(Shape::Triangular(p[0], p[1], p[2]));
        }
        if let Some(p) = self.trapezoidal {
            shapes.push(Shape::Trapezoidal(p[0], p[1], p[2], p[3]));
        }
        if let Some(p) = &self.explicit {
            if !allow_explicit {
                return Err(CliError::new(
                    EXIT_VALIDATION,
                    format!("'{}': explicit shapes are not allowed here", self.name),
                ));
            }
            shapes.push(Shape::Explicit(p.clone()));
        }
        match shapes.len() {
            1 => Ok(shapes.pop().unwrap()),
            0 => Err(CliError::new(
                EXIT_VALIDATION,
                format!(
                    "'{}' has no shape (triangular, trapezoidal or explicit)",
                    self.name
                ),
            )),
            _ => Err(CliError::new(
                EXIT_VALIDATION,
                format!("'{}' has more than one shape", self.name),
            )),
        }
    }
}

/// A fully loaded problem: universe, validated sets, vocabulary in force.
pub struct Problem {
    pub universe: Arc<Universe>,
    pub sets: BTreeMap<String, FuzzySet>,
    pub vocabulary: Vocabulary,
    pub digest: String,
}

type RawProblem = (Universe, BTreeMap<String, Vec<f64>>, Option<VocabularySpec>);

pub fn load_problem(path: &Path) -> Result<Problem, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::new(EXIT_FILE, format!("cannot read {}: {e}", path.display())))?;
    let digest = fnv1a64_hex(&bytes);
    let is_csv = path
        .extension()
        .is_some_and(|ext| ext.eq_ignore_ascii_case("csv"));
    let (universe, raw_sets, vocab_spec) = if is_csv {
        parse_csv(path, &bytes)?
    } else {
        parse_json(path, &bytes)?
    };
    let universe = Arc::new(universe);

    let mut sets = BTreeMap::new();
    for (name, values) in raw_sets {
        let set = FuzzySet::new(Arc::clone(&universe), values)
            .map_err(|e| CliError::new(EXIT_VALIDATION, format!("set '{name}': {e}")))?;
        sets.insert(name, set);
    }

    let vocabulary = match vocab_spec {
        Some(spec) => build_vocabulary(&spec, &universe)?,
        None => match std::env::var_os("LINGAPPROX_VOCAB") {
            Some(vocab_path) => {
                let spec = load_vocab_file(Path::new(&vocab_path))?;
                build_vocabulary(&spec, &universe)?
            }
            None => Vocabulary::standard(Arc::clone(&universe))
                .map_err(|e| CliError::new(EXIT_VALIDATION, e.to_string()))?,
        },
    };

    Ok(Problem {
        universe,
        sets,
        vocabulary,
        digest,
    })
}

fn parse_json(path: &Path, bytes: &[u8]) -> Result<RawProblem, CliError> {
    let spec: ProblemSpec = serde_json::from_slice(bytes)
        .map_err(|e| CliError::new(EXIT_FILE, format!("cannot parse {}: {e}", path.display())))?;
    let universe = build_universe(&spec.universe, path)?;
    Ok((universe, spec.sets, spec.vocabulary))
}

/// Two columns per line, comma or whitespace separated; the set takes the
/// file stem as its name.
fn parse_csv(path: &Path, bytes: &[u8]) -> Result<RawProblem, CliError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| CliError::new(EXIT_FILE, format!("{} is not UTF-8: {e}", path.display())))?;
    let mut xs = Vec::new();
    let mut mus = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        if fields.len() != 2 {
            return Err(CliError::new(
                EXIT_FILE,
                format!(
                    "{}:{}: expected two columns (x, mu)",
                    path.display(),
                    lineno + 1
                ),
            ));
        }
        let parse = |f: &str| -> Result<f64, CliError> {
            f.parse().map_err(|e| {
                CliError::new(
                    EXIT_FILE,
                    format!("{}:{}: bad number {f:?}: {e}", path.display(), lineno + 1),
                )
            })
        };
        xs.push(parse(fields[0])?);
        mus.push(parse(fields[1])?);
    }
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "set".to_string());
    let universe = Universe::new(stem.clone(), xs, None)
        .map_err(|e| CliError::new(EXIT_VALIDATION, e.to_string()))?;
    let mut sets = BTreeMap::new();
    sets.insert(stem, mus);
    Ok((universe, sets, None))
}

fn build_universe(spec: &UniverseSpec, path: &Path) -> Result<Universe, CliError> {
    let name = spec.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "universe".to_string())
    });
    let validation = |e: lingapprox::Error| CliError::new(EXIT_VALIDATION, e.to_string());
    match (&spec.points, spec.min, spec.max, spec.step) {
        (Some(points), None, None, None) => {
            Universe::new(name, points.clone(), spec.unit.clone()).map_err(validation)
        }
        (None, Some(min), Some(max), Some(step)) => {
            Universe::from_range(name, min, max, step, spec.unit.clone()).map_err(validation)
        }
        _ => Err(CliError::new(
            EXIT_VALIDATION,
            "universe needs either points or min/max/step".to_string(),
        )),
    }
}

fn load_vocab_file(path: &Path) -> Result<VocabularySpec, CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::new(EXIT_FILE, format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_slice(&bytes)
        .map_err(|e| CliError::new(EXIT_FILE, format!("cannot parse {}: {e}", path.display())))
}

fn build_vocabulary(
    spec: &VocabularySpec,
    universe: &Arc<Universe>,
) -> Result<Vocabulary, CliError> {
    let validation = |e: lingapprox::Error| CliError::new(EXIT_VALIDATION, e.to_string());
    let terms = spec
        .terms
        .iter()
        .map(|t| TermDef::new(t.name.clone(), t.shape(true)?).map_err(validation))
        .collect::<Result<Vec<_>, _>>()?;
    let modifiers = match &spec.modifiers {
        None => default_modifiers(),
        Some(names) => names
            .iter()
            .map(|name| {
                ModifierRule::from_canonical(name)
                    .map(|rule| lingapprox::ModifierDef {
                        name: name.clone(),
                        rule,
                    })
                    .ok_or_else(|| {
                        CliError::new(EXIT_VALIDATION, format!("unknown modifier '{name}'"))
                    })
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    let quantifiers = match &spec.quantifiers {
        None => default_quantifiers(),
        Some(shaped) => shaped
            .iter()
            .map(|q| QuantifierDef::new(q.name.clone(), q.shape(false)?).map_err(validation))
            .collect::<Result<Vec<_>, _>>()?,
    };
    Vocabulary::new(Arc::clone(universe), terms, modifiers, quantifiers).map_err(validation)
}

pub fn fnv1a64_hex(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        hash ^= b as u64;
        hash = hash.wrapping_mul(0x100000001b3);
    }
    format!("{hash:016x}")
}
