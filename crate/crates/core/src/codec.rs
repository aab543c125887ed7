//! Text corpus format and tab-separated result reports.
//!
//! ```text
//! # comment
//! trefoil: a+ b- c+ a+ b- c+ | tricolor=true fox3=9
//! circle:
//! ```
//!
//! Each label appears twice with the same sign. Everything after `|` lists
//! expected property values.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::curve::{canonical_label, CurveError, PlanarCurve, Sign, SignedGaussCode};
use crate::invariants::{is_weak13_trivial, weak13_invariant, Invariant};
use crate::reduction::{is_lune_free, reduce, ReductionMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: label `{label}` is marked both + and -")]
    SignMismatch { line: usize, column: usize, label: String },
    #[error("{line}: {source}")]
    Validation { line: usize, source: CurveError },
}

impl CodecError {
    pub fn line(&self) -> usize {
        match self {
            CodecError::Syntax { line, .. } | CodecError::SignMismatch { line, .. } | CodecError::Validation { line, .. } => {
                *line
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusEntry {
    pub name: String,
    pub code: SignedGaussCode,
    pub expected: BTreeMap<String, String>,
}

impl CorpusEntry {
    pub fn curve(&self) -> PlanarCurve {
        PlanarCurve::from_signed_gauss_code(&self.code).expect("entries are validated on parse")
    }
}

fn is_ident(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-' || c == '.')
}

/// Parses a token list such as `a+ b- a+ b-` with 1-based column offsets
/// reported relative to `column0`.
pub fn parse_code(text: &str, line: usize, column0: usize) -> Result<SignedGaussCode, CodecError> {
    let mut tokens = Vec::new();
    let mut signs: HashMap<&str, Sign> = HashMap::new();
    let mut offset = 0;
    for tok in text.split_whitespace() {
        let at = text[offset..].find(tok).unwrap() + offset;
        offset = at + tok.len();
        let column = column0 + at;
        let syntax = |message: String| CodecError::Syntax { line, column, message };
        let (label, sign) = match tok.strip_suffix('+') {
            Some(l) => (l, Sign::Pos),
            None => match tok.strip_suffix('-') {
                Some(l) => (l, Sign::Neg),
                None => return Err(syntax(format!("token `{tok}` lacks a + or - sign"))),
            },
        };
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(syntax(format!("bad label in `{tok}`")));
        }
        if let Some(&prev) = signs.get(label) {
            if prev != sign {
                return Err(CodecError::SignMismatch { line, column, label: label.to_string() });
            }
        }
        signs.insert(label, sign);
        tokens.push((label.to_string(), sign));
    }
    let code = SignedGaussCode::new(tokens);
    PlanarCurve::from_signed_gauss_code(&code).map_err(|source| CodecError::Validation { line, source })?;
    Ok(code)
}

pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CodecError> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let column = content.len() - content.trim_start().len() + 1;
            return Err(CodecError::Syntax { line, column, message: "expected `name: tokens`".into() });
        };
        let name = content[..colon].trim();
        if !is_ident(name) {
            let column = content.len() - content.trim_start().len() + 1;
            return Err(CodecError::Syntax { line, column, message: format!("bad entry name `{name}`") });
        }
        if !names.insert(name.to_string()) {
            return Err(CodecError::Syntax { line, column: 1, message: format!("duplicate entry `{name}`") });
        }
        let rest = &content[colon + 1..];
        let (code_text, props_text) = match rest.find('|') {
            Some(bar) => (&rest[..bar], Some((&rest[bar + 1..], colon + bar + 2))),
            None => (rest, None),
        };
        let code = parse_code(code_text, line, colon + 2)?;
        let mut expected = BTreeMap::new();
        if let Some((props, base)) = props_text {
            let mut offset = 0;
            for item in props.split_whitespace() {
                let at = props[offset..].find(item).unwrap() + offset;
                offset = at + item.len();
                let column = base + at + 1;
                let bad = |message: String| CodecError::Syntax { line, column, message };
                let (k, v) = item.split_once('=').ok_or_else(|| bad(format!("expected `property=value`, got `{item}`")))?;
                if !is_ident(k) || v.is_empty() {
                    return Err(bad(format!("bad expectation `{item}`")));
                }
                if !PROPERTIES.contains(&k) {
                    return Err(bad(format!("unknown property `{k}`")));
                }
                expected.insert(k.to_string(), v.to_string());
            }
        }
        entries.push(CorpusEntry { name: name.to_string(), code, expected });
    }
    Ok(entries)
}

/// Relabels with `a`, `b`, ... in order of first occurrence.
pub fn relabel(code: &SignedGaussCode) -> SignedGaussCode {
    let mut names: HashMap<&str, String> = HashMap::new();
    let tokens: Vec<(String, Sign)> = code
        .word
        .iter()
        .map(|l| {
            let next = names.len();
            let new = names.entry(l.as_str()).or_insert_with(|| canonical_label(next)).clone();
            (new, code.signs[l])
        })
        .collect();
    SignedGaussCode::new(tokens)
}

pub fn serialize(entry: &CorpusEntry) -> String {
    let code = relabel(&entry.code).to_string();
    let mut out = format!("{}:", entry.name);
    if !code.is_empty() {
        out.push(' ');
        out.push_str(&code);
    }
    if !entry.expected.is_empty() {
        out.push_str(" |");
        for (k, v) in &entry.expected {
            out.push_str(&format!(" {k}={v}"));
        }
    }
    out
}

pub fn serialize_corpus(entries: &[CorpusEntry]) -> String {
    entries.iter().map(|e| serialize(e) + "\n").collect()
}

/// Properties understood in expectations and reports.
pub const PROPERTIES: &[&str] = &[
    "crossings",
    "lunefree",
    "reduced1",
    "reduced2",
    "reduced12",
    "tricolor",
    "fox3",
    "fox5",
    "fox7",
    "fox11",
    "fox13",
    "weak13trivial",
];

/// Value of a property; reductions report the crossing number of the
/// reduced curve.
pub fn property(curve: &PlanarCurve, name: &str) -> Option<String> {
    let v = match name {
        "crossings" => curve.crossings().to_string(),
        "lunefree" => is_lune_free(curve).to_string(),
        "reduced1" => reduce(curve, ReductionMode::One).result.crossings().to_string(),
        "reduced2" => reduce(curve, ReductionMode::Two).result.crossings().to_string(),
        "reduced12" => reduce(curve, ReductionMode::OneTwo).result.crossings().to_string(),
        "weak13trivial" => is_weak13_trivial(curve).to_string(),
        other => weak13_invariant(curve, other.parse::<Invariant>().ok()?).value.to_string(),
    };
    Some(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record {
    pub name: String,
    pub property: String,
    pub value: String,
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}", self.name, self.property, self.value)
    }
}

pub fn format_report(records: &[Record]) -> String {
    records.iter().map(|r| format!("{r}\n")).collect()
}

pub fn parse_report(text: &str) -> Result<Vec<Record>, CodecError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            let mut parts = l.splitn(3, '\t');
            match (parts.next(), parts.next(), parts.next()) {
                (Some(n), Some(p), Some(v)) => Ok(Record { name: n.into(), property: p.into(), value: v.into() }),
                _ => Err(CodecError::Syntax { line: i + 1, column: 1, message: "expected three tab-separated fields".into() }),
            }
        })
        .collect()
}

/// An expectation that did not hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub name: String,
    pub property: String,
    pub expected: String,
    pub actual: String,
}

/// Evaluates every expectation; records come back in file order.
pub fn run_corpus(entries: &[CorpusEntry]) -> (Vec<Record>, Vec<Mismatch>) {
    let per_entry: Vec<Vec<(Record, Option<Mismatch>)>> = entries
        .par_iter()
        .map(|e| {
            let curve = e.curve();
            e.expected
                .iter()
                .map(|(k, want)| {
                    let actual = property(&curve, k).expect("properties are checked on parse");
                    let rec = Record { name: e.name.clone(), property: k.clone(), value: actual.clone() };
                    let miss = (actual != *want).then(|| Mismatch {
                        name: e.name.clone(),
                        property: k.clone(),
                        expected: want.clone(),
                        actual,
                    });
                    (rec, miss)
                })
                .collect()
        })
        .collect();
    let mut records = Vec::new();
    let mut mismatches = Vec::new();
    for (r, m) in per_entry.into_iter().flatten() {
        records.push(r);
        mismatches.extend(m);
    }
    (records, mismatches)
}
