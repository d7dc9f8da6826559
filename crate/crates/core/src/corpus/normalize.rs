//! Ingredient-line normalization.
//!
//! A raw line such as `"2 cups White Sugar, sifted"` is reduced to a
//! canonical ingredient name by a fixed grammar:
//!
//! 1. lowercase, drop parenthesised text and everything after the first comma;
//! 2. strip leading quantity tokens (integers, decimals, ranges, fractions,
//!    unicode vulgar fractions) and unit words, plus an `of` directly after a
//!    unit;
//! 3. look the remainder up in the merge map, then the brand map.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Deserialize;
use thiserror::Error;

use crate::versioned::{split_header, HeaderError};

const UNIT_WORDS: &[&str] = &[
    "bag",
    "bags",
    "bottle",
    "bottles",
    "box",
    "boxes",
    "bunch",
    "bunches",
    "c",
    "can",
    "cans",
    "clove",
    "cloves",
    "container",
    "containers",
    "cup",
    "cups",
    "dash",
    "dashes",
    "envelope",
    "envelopes",
    "g",
    "gallon",
    "gallons",
    "gram",
    "grams",
    "head",
    "heads",
    "jar",
    "jars",
    "kg",
    "l",
    "lb",
    "lbs",
    "liter",
    "liters",
    "litre",
    "litres",
    "loaf",
    "loaves",
    "ml",
    "ounce",
    "ounces",
    "oz",
    "package",
    "packages",
    "packet",
    "packets",
    "pinch",
    "pinches",
    "pint",
    "pints",
    "pkg",
    "pound",
    "pounds",
    "quart",
    "quarts",
    "slice",
    "slices",
    "sprig",
    "sprigs",
    "stalk",
    "stalks",
    "stick",
    "sticks",
    "t",
    "tablespoon",
    "tablespoons",
    "tbs",
    "tbsp",
    "teaspoon",
    "teaspoons",
    "tsp",
];

const VULGAR_FRACTIONS: &[char] = &[
    '¼', '½', '¾', '⅐', '⅑', '⅒', '⅓', '⅔', '⅕', '⅖', '⅗', '⅘', '⅙', '⅚', '⅛', '⅜', '⅝', '⅞',
];

/// A normalized ingredient. All comparisons use `name` only;
/// `token_bag` is derived from it.
#[derive(Clone, Debug)]
pub struct CanonicalIngredient {
    name: String,
    token_bag: BTreeSet<String>,
}

impl CanonicalIngredient {
    /// Wraps an already-canonical name. Panics on an empty name.
    pub fn new(name: impl Into<String>) -> Self {
        let name: String = name.into();
        assert!(!name.trim().is_empty(), "ingredient name must be non-empty");
        let token_bag = name.split_whitespace().map(str::to_string).collect();
        Self { name, token_bag }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// 1-gram bag of words of the name.
    pub fn token_bag(&self) -> &BTreeSet<String> {
        &self.token_bag
    }
}

impl PartialEq for CanonicalIngredient {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}
impl Eq for CanonicalIngredient {}

impl PartialOrd for CanonicalIngredient {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for CanonicalIngredient {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.name.cmp(&other.name)
    }
}

impl std::hash::Hash for CanonicalIngredient {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.name.hash(state)
    }
}

impl fmt::Display for CanonicalIngredient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[derive(Debug, Error)]
pub enum NormalizeError {
    #[error("ingredient line {0:?} is empty after normalization")]
    Empty(String),
}

#[derive(Debug, Error)]
pub enum RulesError {
    #[error(transparent)]
    Header(#[from] HeaderError),
    #[error("rules file: {0}")]
    Toml(#[from] toml::de::Error),
    #[error("rule target {target:?} (from {source_name:?}) is not a canonical name")]
    NotCanonical { source_name: String, target: String },
    #[error("rule target {target:?} is itself remapped to {next:?}")]
    Chained { target: String, next: String },
}

/// Merge and brand maps, keyed by stripped lowercase names.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormalizationRules {
    merge_map: BTreeMap<String, String>,
    brand_map: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RulesFile {
    #[serde(default)]
    merge: BTreeMap<String, String>,
    #[serde(default)]
    brand: BTreeMap<String, String>,
}

pub const RULES_HEADER: &str = "rules-version";

impl NormalizationRules {
    /// Builds a rule set, rejecting rules that would break idempotence: each
    /// target must survive the prefix grammar unchanged and must not be
    /// remapped again.
    pub fn new(
        merge_map: BTreeMap<String, String>,
        brand_map: BTreeMap<String, String>,
    ) -> Result<Self, RulesError> {
        let lower = |m: BTreeMap<String, String>| -> BTreeMap<String, String> {
            m.into_iter()
                .map(|(k, v)| (strip(&k).unwrap_or_default(), v.trim().to_lowercase()))
                .filter(|(k, _)| !k.is_empty())
                .collect()
        };
        let rules = Self {
            merge_map: lower(merge_map),
            brand_map: lower(brand_map),
        };
        for (src, target) in rules.merge_map.iter().chain(rules.brand_map.iter()) {
            if strip(target).as_deref() != Some(target.as_str()) {
                return Err(RulesError::NotCanonical {
                    source_name: src.clone(),
                    target: target.clone(),
                });
            }
            let next = rules.apply_maps(target.clone());
            if &next != target {
                return Err(RulesError::Chained {
                    target: target.clone(),
                    next,
                });
            }
        }
        Ok(rules)
    }

    /// Parses a `rules-version: 1` file with `[merge]` and `[brand]` tables.
    pub fn parse(text: &str) -> Result<Self, RulesError> {
        let body = split_header(text, RULES_HEADER, 1)?;
        let file: RulesFile = toml::from_str(body)?;
        Self::new(file.merge, file.brand)
    }

    pub fn merge_map(&self) -> &BTreeMap<String, String> {
        &self.merge_map
    }

    pub fn brand_map(&self) -> &BTreeMap<String, String> {
        &self.brand_map
    }

    fn apply_maps(&self, mut name: String) -> String {
        if let Some(t) = self.merge_map.get(&name) {
            name = t.clone();
        }
        if let Some(t) = self.brand_map.get(&name) {
            name = t.clone();
        }
        name
    }
}

fn is_quantity(token: &str) -> bool {
    let mut has_digit = false;
    for c in token.chars() {
        if c.is_ascii_digit() || VULGAR_FRACTIONS.contains(&c) {
            has_digit = true;
        } else if !matches!(c, '/' | '.' | '-' | '⁄') {
            return false;
        }
    }
    has_digit
}

fn is_unit(token: &str) -> bool {
    let t = token.trim_end_matches('.');
    UNIT_WORDS.binary_search(&t).is_ok()
}

fn remove_parentheticals(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' if depth > 0 => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out
}

/// Lowercase + parentheticals + comma tail + quantity/unit prefix.
fn strip(raw: &str) -> Option<String> {
    let lowered = raw.to_lowercase();
    let no_parens = remove_parentheticals(&lowered);
    let head = no_parens.split(',').next().unwrap_or("");
    let tokens: Vec<&str> = head.split_whitespace().collect();
    let mut i = 0;
    while i < tokens.len() {
        if is_quantity(tokens[i]) {
            i += 1;
        } else if is_unit(tokens[i]) {
            i += 1;
            if tokens.get(i) == Some(&"of") {
                i += 1;
            }
        } else {
            break;
        }
    }
    let name = tokens[i..].join(" ");
    (!name.is_empty()).then_some(name)
}

pub fn normalize(
    raw_line: &str,
    rules: &NormalizationRules,
) -> Result<CanonicalIngredient, NormalizeError> {
    let stripped = strip(raw_line).ok_or_else(|| NormalizeError::Empty(raw_line.to_string()))?;
    Ok(CanonicalIngredient::new(rules.apply_maps(stripped)))
}

impl serde::Serialize for CanonicalIngredient {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name)
    }
}

impl<'de> Deserialize<'de> for CanonicalIngredient {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let name = String::deserialize(d)?;
        if name.trim().is_empty() || name.split_whitespace().collect::<Vec<_>>().join(" ") != name {
            return Err(serde::de::Error::custom(format!(
                "{name:?} is not a canonical ingredient name"
            )));
        }
        Ok(CanonicalIngredient::new(name))
    }
}
