//! Label expressions: the little language of terms, modifiers and
//! connectives, with a parser, a canonical renderer and an evaluator.
//!
//! Tokenization is vocabulary-driven with longest match, so multiword names
//! like "more or less" bind before the connective "or". "and" binds tighter
//! than "or"; both associate left; parentheses override.

use crate::error::{Error, Result};
use crate::fuzzyset::FuzzySet;
use crate::vocab::{NameKind, Vocabulary};

/// Nesting bound for parsing and construction.
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Connective {
    And,
    Or,
}

impl Connective {
    pub fn name(self) -> &'static str {
        match self {
            Connective::And => "and",
            Connective::Or => "or",
        }
    }
}

/// AST of a linguistic label.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum LabelExpr {
    Term(String),
    Modified(String, Box<LabelExpr>),
    Composite(Box<LabelExpr>, Connective, Box<LabelExpr>),
}

impl LabelExpr {
    pub fn term(name: impl Into<String>) -> LabelExpr {
        LabelExpr::Term(name.into())
    }

    pub fn modified(modifier: impl Into<String>, inner: LabelExpr) -> LabelExpr {
        LabelExpr::Modified(modifier.into(), Box::new(inner))
    }

    pub fn composite(left: LabelExpr, connective: Connective, right: LabelExpr) -> LabelExpr {
        LabelExpr::Composite(Box::new(left), connective, Box::new(right))
    }

    /// Number of AST nodes; used as the complexity measure in search.
    pub fn node_count(&self) -> usize {
        match self {
            LabelExpr::Term(_) => 1,
            LabelExpr::Modified(_, inner) => 1 + inner.node_count(),
            LabelExpr::Composite(l, _, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            LabelExpr::Term(_) => 1,
            LabelExpr::Modified(_, inner) => 1 + inner.depth(),
            LabelExpr::Composite(l, _, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Top-level or-operands, flattened left to right. A label without a
    /// top-level `or` is a single clause.
    pub fn or_clauses(&self) -> Vec<&LabelExpr> {
        match self {
            LabelExpr::Composite(l, Connective::Or, r) => {
                let mut clauses = l.or_clauses();
                clauses.extend(r.or_clauses());
                clauses
            }
            other => vec![other],
        }
    }
}

/// Canonical text form: minimal parentheses, single spaces, names verbatim.
pub fn render(expr: &LabelExpr) -> String {
    match expr {
        LabelExpr::Term(name) => name.clone(),
        LabelExpr::Modified(modifier, inner) => {
            let inner_s = render(inner);
            if matches!(**inner, LabelExpr::Composite(..)) {
                format!("{modifier} ({inner_s})")
            } else {
                format!("{modifier} {inner_s}")
            }
        }
        LabelExpr::Composite(left, conn, right) => {
            let ls = render(left);
            let rs = render(right);
            // left keeps unparenthesized only when its connective binds at
            // least as tightly; the right side reparenthesizes any composite
            // of equal or looser precedence to survive left-associative parsing
            let lp = matches!(
                (conn, &**left),
                (Connective::And, LabelExpr::Composite(_, Connective::Or, _))
            );
            let rp = matches!(
                (&conn, &**right),
                (Connective::Or, LabelExpr::Composite(_, Connective::Or, _))
                    | (Connective::And, LabelExpr::Composite(..))
            );
            let ls = if lp { format!("({ls})") } else { ls };
            let rs = if rp { format!("({rs})") } else { rs };
            format!("{ls} {} {rs}", conn.name())
        }
    }
}

/// Evaluates a label against the vocabulary: terms resolve to their sampled
/// sets, modifiers apply their rules, `and`/`or` are pointwise min/max.
pub fn evaluate(expr: &LabelExpr, vocab: &Vocabulary) -> Result<FuzzySet> {
    match expr {
        LabelExpr::Term(name) => vocab
            .term_set(name)
            .cloned()
            .ok_or_else(|| Error::UnknownName(name.clone())),
        LabelExpr::Modified(modifier, inner) => {
            let inner_set = evaluate(inner, vocab)?;
            let def = vocab
                .modifier(modifier)
                .ok_or_else(|| Error::UnknownName(modifier.clone()))?;
            Ok(def.rule.apply(&inner_set))
        }
        LabelExpr::Composite(left, conn, right) => {
            let l = evaluate(left, vocab)?;
            let r = evaluate(right, vocab)?;
            match conn {
                Connective::And => l.intersect(&r),
                Connective::Or => l.union(&r),
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Term(String),
    Modifier(String),
    And,
    Or,
    Open,
    Close,
}

/// Splits label text into tokens by longest match against vocabulary names.
/// "more/less" is accepted as an alias of "more or less".
fn tokenize(text: &str, vocab: &Vocabulary) -> Result<Vec<Token>> {
    let spaced = text.replace('(', " ( ").replace(')', " ) ");
    let words: Vec<&str> = spaced
        .split_whitespace()
        .flat_map(|w| {
            if w == "more/less" {
                vec!["more", "or", "less"]
            } else {
                vec![w]
            }
        })
        .collect();
    let names = vocab.token_names();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < words.len() {
        let mut matched = false;
        for &(name, kind) in &names {
            let parts: Vec<&str> = name.split_whitespace().collect();
            if words[i..].len() >= parts.len() && words[i..i + parts.len()] == parts[..] {
                tokens.push(match kind {
                    NameKind::Term => Token::Term(name.to_string()),
                    NameKind::Modifier => Token::Modifier(name.to_string()),
                });
                i += parts.len();
                matched = true;
                break;
            }
        }
        if matched {
            continue;
        }
        match words[i] {
            "and" => tokens.push(Token::And),
            "or" => tokens.push(Token::Or),
            "(" => tokens.push(Token::Open),
            ")" => tokens.push(Token::Close),
            other => return Err(Error::UnknownToken(other.to_string())),
        }
        i += 1;
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<&Token> {
        let t = self.tokens.get(self.pos);
        self.pos += 1;
        t
    }

    fn parse_or(&mut self, depth: usize) -> Result<LabelExpr> {
        let mut expr = self.parse_and(depth)?;
        while matches!(self.peek(), Some(Token::Or)) {
            self.bump();
            let rhs = self.parse_and(depth)?;
            expr = LabelExpr::composite(expr, Connective::Or, rhs);
        }
        Ok(expr)
    }

    fn parse_and(&mut self, depth: usize) -> Result<LabelExpr> {
        let mut expr = self.parse_unary(depth)?;
        while matches!(self.peek(), Some(Token::And)) {
            self.bump();
            let rhs = self.parse_unary(depth)?;
            expr = LabelExpr::composite(expr, Connective::And, rhs);
        }
        Ok(expr)
    }

    fn parse_unary(&mut self, depth: usize) -> Result<LabelExpr> {
        if depth > MAX_DEPTH {
            return Err(Error::DepthExceeded(MAX_DEPTH));
        }
        match self.peek().cloned() {
            Some(Token::Modifier(name)) => {
                self.bump();
                match self.peek() {
                    Some(Token::Term(_)) | Some(Token::Modifier(_)) | Some(Token::Open) => {
                        let inner = self.parse_unary(depth + 1)?;
                        Ok(LabelExpr::modified(name, inner))
                    }
                    _ => Err(Error::DanglingModifier(name)),
                }
            }
            _ => self.parse_atom(depth),
        }
    }

    fn parse_atom(&mut self, depth: usize) -> Result<LabelExpr> {
        match self.bump().cloned() {
            Some(Token::Term(name)) => Ok(LabelExpr::Term(name)),
            Some(Token::Open) => {
                let inner = self.parse_or(depth + 1)?;
                match self.bump() {
                    Some(Token::Close) => Ok(inner),
                    _ => Err(Error::UnbalancedParens),
                }
            }
            Some(Token::Close) => Err(Error::UnbalancedParens),
            Some(Token::And) => Err(Error::UnexpectedToken("and".to_string())),
            Some(Token::Or) => Err(Error::UnexpectedToken("or".to_string())),
            Some(Token::Modifier(name)) => Err(Error::DanglingModifier(name)),
            None => Err(Error::EmptyExpression),
        }
    }
}

/// Parses label text against a vocabulary.
pub fn parse(text: &str, vocab: &Vocabulary) -> Result<LabelExpr> {
    let tokens = tokenize(text, vocab)?;
    if tokens.is_empty() {
        return Err(Error::EmptyExpression);
    }
    let mut parser = Parser {
        tokens: &tokens,
        pos: 0,
    };
    let expr = parser.parse_or(0)?;
    match parser.peek() {
        None => Ok(expr),
        Some(Token::Close) => Err(Error::UnbalancedParens),
        Some(Token::Term(t)) => Err(Error::UnexpectedToken(t.clone())),
        Some(Token::Modifier(m)) => Err(Error::UnexpectedToken(m.clone())),
        Some(t) => Err(Error::UnexpectedToken(format!("{t:?}"))),
    }
}
