//! Recipe generators: the weighted graph walk, an n-gram ingredient-sequence
//! model, and a uniform random baseline.
//!
//! Generators only choose ingredients. Titles and step text are attached by
//! [`crate::assembly::describe_recipe`], which needs the action graph.

mod markov;
mod ngram;
mod random;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::CanonicalIngredient;

pub use markov::{
    alpha, beta, candidate_scores, generate_markov, next_ingredient, sample_initial, CorpusSets,
};
pub use ngram::{sample_ngram, sample_ngram_from, train_ngram, NgramModel, Token, NGRAM_CAP};
pub use random::generate_random;

pub const DEFAULT_MAX_RETRIES: u32 = 100;
pub const DEFAULT_TOP_K: usize = 5;
pub const DEFAULT_NGRAM_ORDER: usize = 3;
pub const SIMPLE_INGREDIENTS: usize = 4;
pub const COMPLEX_INGREDIENTS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Markov,
    Ngram,
    Random,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Markov, Mode::Ngram, Mode::Random];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Markov => "markov",
            Mode::Ngram => "ngram",
            Mode::Random => "random",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "markov" => Ok(Mode::Markov),
            "ngram" => Ok(Mode::Ngram),
            "random" => Ok(Mode::Random),
            _ => Err(format!(
                "unknown mode {s:?} (expected markov, ngram or random)"
            )),
        }
    }
}

/// `simple` and `complex` recipe sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Complexity {
    Simple,
    Complex,
}

impl Complexity {
    pub fn n_ingredients(self) -> usize {
        match self {
            Complexity::Simple => SIMPLE_INGREDIENTS,
            Complexity::Complex => COMPLEX_INGREDIENTS,
        }
    }
}

impl FromStr for Complexity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "simple" => Ok(Complexity::Simple),
            "complex" => Ok(Complexity::Complex),
            _ => Err(format!(
                "unknown complexity {s:?} (expected simple or complex)"
            )),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationParams {
    /// Target size for markov and random modes. The n-gram model stops at
    /// its end token instead.
    pub n_ingredients: usize,
    pub seed: u64,
    pub max_retries: u32,
    pub mode: Mode,
    pub top_k: usize,
}

impl GenerationParams {
    pub fn new(mode: Mode, n_ingredients: usize, seed: u64) -> Self {
        Self {
            n_ingredients,
            seed,
            max_retries: DEFAULT_MAX_RETRIES,
            mode,
            top_k: DEFAULT_TOP_K,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.n_ingredients < 2 {
            return Err(GenError::InvalidParams(
                "n_ingredients must be at least 2".into(),
            ));
        }
        if self.top_k < 1 {
            return Err(GenError::InvalidParams("top_k must be at least 1".into()));
        }
        if self.max_retries < 1 {
            return Err(GenError::InvalidParams(
                "max_retries must be at least 1".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub mode: Mode,
    pub seed: u64,
    pub rng: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Recipe {
    pub title: String,
    pub ingredients: Vec<CanonicalIngredient>,
    pub steps: Vec<String>,
    /// Absent for hand-authored recipes.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl Recipe {
    pub(crate) fn bare(ingredients: Vec<CanonicalIngredient>, mode: Mode, seed: u64) -> Self {
        Self {
            title: String::new(),
            ingredients,
            steps: Vec::new(),
            provenance: Some(Provenance {
                mode,
                seed,
                rng: crate::rng::RNG_ALGORITHM.to_string(),
            }),
        }
    }

    /// A hand-authored ingredient list with no provenance.
    pub fn authored<'a>(names: impl IntoIterator<Item = &'a str>) -> Self {
        Self {
            title: String::new(),
            ingredients: names.into_iter().map(CanonicalIngredient::new).collect(),
            steps: Vec::new(),
            provenance: None,
        }
    }

    pub fn ingredient_names(&self) -> impl Iterator<Item = &str> {
        self.ingredients.iter().map(CanonicalIngredient::name)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("graph has no edges to walk")]
    EdgelessGraph,
    #[error("dead end: no eligible candidate after {selected} ingredients")]
    DeadEnd { selected: usize },
    #[error(
        "generation failed after {attempts} attempts ({dead_ends} dead ends, {collisions} corpus collisions)"
    )]
    GenerationFailed {
        attempts: u32,
        dead_ends: u32,
        collisions: u32,
    },
    #[error("need {needed} distinct ingredients, vocabulary has {available}")]
    InsufficientVocabulary { needed: usize, available: usize },
    #[error("invalid generation parameters: {0}")]
    InvalidParams(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_and_complexity_parse() {
        assert_eq!("MARKOV".parse::<Mode>().unwrap(), Mode::Markov);
        assert!("lstm".parse::<Mode>().is_err());
        assert_eq!("simple".parse::<Complexity>().unwrap().n_ingredients(), 4);
        assert_eq!("complex".parse::<Complexity>().unwrap().n_ingredients(), 8);
    }

    #[test]
    fn params_validation() {
        assert!(GenerationParams::new(Mode::Markov, 1, 0)
            .validate()
            .is_err());
        let mut p = GenerationParams::new(Mode::Ngram, 4, 0);
        p.top_k = 0;
        assert!(p.validate().is_err());
        assert!(GenerationParams::new(Mode::Random, 2, 0).validate().is_ok());
    }
}
