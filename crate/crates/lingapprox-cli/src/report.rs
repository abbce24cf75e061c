//! Report structure shared by the approximate and quantify commands, with
//! deterministic text and JSON renderings. Text prints 4 decimal places;
//! JSON keeps full precision. No timestamp unless requested.

use serde::{Deserialize, Serialize};

use lingapprox::{Approximation, QuantMethod, QuantifiedProposition};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct Report {
    pub command: String,
    pub input: InputEcho,
    pub config: ConfigEcho,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub approximations: Vec<ApproximationReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub propositions: Vec<PropositionReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct InputEcho {
    pub path: String,
    pub digest: String,
    pub set: String,
    pub universe: String,
    pub points: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ConfigEcho {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_clauses: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_modifiers: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threshold: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ApproximationReport {
    pub label: String,
    pub score: f64,
    pub segments: Vec<SegmentReport>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct SegmentReport {
    pub segment: usize,
    pub clause: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct PropositionReport {
    pub method: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantifier: Option<String>,
    pub subject: String,
    pub clause: String,
    pub sentence: String,
    pub compatibility: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub proportion: Option<f64>,
    /// Relative FECount support of the clause against the target
    /// (fuzzy method only): pairs of (proportion, membership).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fe_support: Option<Vec<(f64, f64)>>,
}

pub fn approximation_report(a: &Approximation) -> ApproximationReport {
    ApproximationReport {
        label: a.rendered.clone(),
        score: a.score,
        segments: a
            .segment_scores
            .iter()
            .map(|s| SegmentReport {
                segment: s.segment,
                clause: s.clause.clone(),
                value: s.value,
            })
            .collect(),
    }
}

pub fn proposition_report(
    p: &QuantifiedProposition,
    fe_support: Option<Vec<(f64, f64)>>,
) -> PropositionReport {
    PropositionReport {
        method: match p.method {
            QuantMethod::Sigma => "sigma".to_string(),
            QuantMethod::Fuzzy => "fuzzy".to_string(),
        },
        quantifier: p.quantifier.as_ref().map(|c| c.joined()),
        subject: p.subject.clone(),
        clause: p.clause_text.clone(),
        sentence: p.sentence(),
        compatibility: p.compatibility,
        proportion: p.proportion,
        fe_support,
    }
}

impl Report {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let push = |out: &mut String, line: String| {
            out.push_str(&line);
            out.push('\n');
        };
        push(
            &mut out,
            format!(
                "# {} · set {} · {} ({} points)",
                self.command, self.input.set, self.input.universe, self.input.points
            ),
        );
        push(
            &mut out,
            format!("# input {} · digest {}", self.input.path, self.input.digest),
        );
        if let Some(ts) = self.input.timestamp {
            push(&mut out, format!("# generated at unix {ts}"));
        }
        let mut config_parts = Vec::new();
        if let Some(m) = &self.config.measure {
            config_parts.push(format!("measure {m}"));
        }
        if let Some(k) = self.config.max_clauses {
            config_parts.push(format!("max-clauses {k}"));
        }
        if let Some(k) = self.config.max_modifiers {
            config_parts.push(format!("max-modifiers {k}"));
        }
        if let Some(k) = self.config.top_k {
            config_parts.push(format!("top-k {k}"));
        }
        if let Some(m) = &self.config.method {
            config_parts.push(format!("method {m}"));
        }
        if let Some(t) = self.config.threshold {
            config_parts.push(format!("threshold {t:.4}"));
        }
        if let Some(l) = &self.config.label {
            config_parts.push(format!("label \"{l}\""));
        }
        if !config_parts.is_empty() {
            push(&mut out, format!("# {}", config_parts.join(" · ")));
        }
        for (i, a) in self.approximations.iter().enumerate() {
            push(
                &mut out,
                format!("{:2}. {}  score {:.4}", i + 1, a.label, a.score),
            );
            for s in &a.segments {
                push(
                    &mut out,
                    format!("    segment {}: {} ({:.4})", s.segment, s.clause, s.value),
                );
            }
        }
        for p in &self.propositions {
            let mut tail = format!("compatibility {:.4}", p.compatibility);
            if let Some(prop) = p.proportion {
                tail = format!("proportion {prop:.4} · {tail}");
            }
            push(
                &mut out,
                format!("{}: {}  ({})", p.method, p.sentence, tail),
            );
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
