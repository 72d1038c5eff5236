//! Space description files.
//!
//! ```toml
//! name = "split"
//! points = ["a", "b", "c"]
//! generators = [["a"]]
//!
//! [functions]
//! f = "{a:1, b:0, c:0}"
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use measring::{GroundSet, MeasurableFn, MeasurableSpace};
use serde::Deserialize;
use toml::Spanned;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    name: Option<String>,
    points: Spanned<Vec<Spanned<String>>>,
    #[serde(default)]
    generators: Vec<Spanned<Vec<Spanned<String>>>>,
    #[serde(default)]
    functions: BTreeMap<String, Spanned<String>>,
}

/// A validated space description.
#[derive(Debug, Clone)]
pub struct SpaceDoc {
    pub name: String,
    pub space: MeasurableSpace,
    pub functions: Vec<(String, MeasurableFn)>,
}

/// Why a description was rejected, with the offending line when known.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub source: String,
    pub line: Option<usize>,
    pub message: String,
    /// The space is well formed but exceeds a size limit.
    pub resource_cap: bool,
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "{}:{}: {}", self.source, l, self.message),
            None => write!(f, "{}: {}", self.source, self.message),
        }
    }
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '-')
}

fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

impl SpaceDoc {
    pub fn load(path: &Path) -> Result<Self, DocError> {
        let source = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|e| DocError {
            source: source.clone(),
            line: None,
            message: e.to_string(),
            resource_cap: false,
        })?;
        let fallback = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
        Self::parse(&source, &fallback, &text)
    }

    /// Parses and validates `text`; `fallback` names the space when the
    /// document has no `name`.
    pub fn parse(source: &str, fallback: &str, text: &str) -> Result<Self, DocError> {
        let err = |span: Option<std::ops::Range<usize>>, message: String| DocError {
            source: source.to_string(),
            line: span.map(|s| line_of(text, s.start)),
            message,
            resource_cap: false,
        };
        let raw: RawDoc = toml::from_str(text).map_err(|e| {
            let message = e.message().trim().to_string();
            err(e.span(), message)
        })?;

        let mut labels = Vec::new();
        for p in raw.points.get_ref() {
            let label = p.get_ref();
            if !is_label(label) {
                return Err(err(Some(p.span()), format!("malformed point label '{label}'")));
            }
            if labels.contains(label) {
                return Err(err(Some(p.span()), format!("duplicate point label '{label}'")));
            }
            labels.push(label.clone());
        }
        if labels.is_empty() {
            return Err(err(Some(raw.points.span()), "points must not be empty".into()));
        }
        let ground = GroundSet::with_labels(labels).map_err(|e| err(Some(raw.points.span()), e.to_string()))?;

        let mut generators = Vec::new();
        for (i, g) in raw.generators.iter().enumerate() {
            let mut s = ground.empty();
            for l in g.get_ref() {
                let label = l.get_ref();
                if !is_label(label) {
                    return Err(err(Some(l.span()), format!("malformed label '{label}' in generator {}", i + 1)));
                }
                let p = ground
                    .index_of(label)
                    .ok_or_else(|| err(Some(l.span()), format!("unknown point '{label}' in generator {}", i + 1)))?;
                s = s.with(p);
            }
            generators.push(s);
        }
        let space = MeasurableSpace::generated(&ground, &generators).map_err(|e| DocError {
            resource_cap: matches!(e, measring::Error::ResourceCap { .. }),
            ..err(None, e.to_string())
        })?;

        let mut functions = Vec::new();
        for (name, literal) in &raw.functions {
            let f = MeasurableFn::parse(&space, literal.get_ref())
                .map_err(|e| err(Some(literal.span()), format!("function '{name}': {e}")))?;
            functions.push((name.clone(), f));
        }
        Ok(SpaceDoc { name: raw.name.unwrap_or_else(|| fallback.to_string()), space, functions })
    }
}
