//! Recipe corpus ingestion and the ingredient co-occurrence graph.

mod graph;
mod normalize;

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use graph::{build_graph, extract_pairs, GraphError, IngredientGraph, NodeId};
pub use normalize::{
    normalize, CanonicalIngredient, NormalizationRules, NormalizeError, RulesError, RULES_HEADER,
};

/// One corpus entry as read from disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawRecipe {
    pub id: String,
    pub title: String,
    #[serde(rename = "ingredients")]
    pub ingredient_lines: Vec<String>,
    #[serde(
        default,
        rename = "instructions",
        skip_serializing_if = "Option::is_none"
    )]
    pub instruction_text: Option<String>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("corpus is not a JSON array of recipes: {0}")]
    NotAnArray(serde_json::Error),
    #[error("corpus entry {index}: {reason}")]
    Entry { index: usize, reason: String },
}

/// A skipped entry in non-strict parsing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusWarning {
    pub index: usize,
    pub reason: String,
}

#[derive(Clone, Debug, Default)]
pub struct ParsedCorpus {
    pub recipes: Vec<RawRecipe>,
    pub warnings: Vec<CorpusWarning>,
}

fn check_entry(value: serde_json::Value, seen: &mut HashSet<String>) -> Result<RawRecipe, String> {
    let recipe: RawRecipe = serde_json::from_value(value).map_err(|e| e.to_string())?;
    if recipe.id.is_empty() {
        return Err("empty id".into());
    }
    if recipe.ingredient_lines.is_empty() {
        return Err(format!("recipe {:?} has no ingredient lines", recipe.id));
    }
    if !seen.insert(recipe.id.clone()) {
        return Err(format!("duplicate recipe id {:?}", recipe.id));
    }
    Ok(recipe)
}

/// Parses corpus JSON text: an array of `{id, title, ingredients, instructions}`.
///
/// With `strict`, the first malformed entry aborts; otherwise it is skipped
/// and reported in `warnings`. Empty (or whitespace-only) input is an empty
/// corpus.
pub fn parse_corpus_str(text: &str, strict: bool) -> Result<ParsedCorpus, CorpusError> {
    if text.trim().is_empty() {
        return Ok(ParsedCorpus::default());
    }
    let entries: Vec<serde_json::Value> =
        serde_json::from_str(text).map_err(CorpusError::NotAnArray)?;
    let mut out = ParsedCorpus::default();
    let mut seen = HashSet::new();
    for (index, value) in entries.into_iter().enumerate() {
        match check_entry(value, &mut seen) {
            Ok(r) => out.recipes.push(r),
            Err(reason) if strict => return Err(CorpusError::Entry { index, reason }),
            Err(reason) => {
                log::warn!("skipping corpus entry {index}: {reason}");
                out.warnings.push(CorpusWarning { index, reason });
            }
        }
    }
    Ok(out)
}

pub fn parse_corpus(path: impl AsRef<Path>, strict: bool) -> Result<ParsedCorpus, CorpusError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_corpus_str(&text, strict)
}

/// Distinct canonical ingredients of a recipe in first-seen order. Lines
/// that normalize to nothing are dropped.
pub fn canonical_ingredients(
    recipe: &RawRecipe,
    rules: &NormalizationRules,
) -> Vec<CanonicalIngredient> {
    let mut seen = HashSet::new();
    recipe
        .ingredient_lines
        .iter()
        .filter_map(|line| normalize(line, rules).ok())
        .filter(|ing| seen.insert(ing.name().to_string()))
        .collect()
}
