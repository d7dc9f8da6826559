//! Count-based n-gram model over ingredient sequences.
//!
//! Each training recipe becomes `START, x1, .., xm, END` with every
//! ingredient name a single token. Sampling uses the longest context seen
//! in training, backing off to shorter ones, and draws from the `top_k`
//! most frequent successors in proportion to their counts.

use std::collections::{BTreeMap, HashMap, HashSet};

use rand::Rng;

use super::{GenerationParams, Mode, Recipe};
use crate::corpus::{canonical_ingredients, CanonicalIngredient, NormalizationRules, RawRecipe};

/// Hard cap on sampled recipe length.
pub const NGRAM_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Start,
    Ingredient(String),
    End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NgramModel {
    order: usize,
    counts: HashMap<Vec<Token>, BTreeMap<Token, u32>>,
}

impl NgramModel {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Successor counts of an exact context.
    pub fn successors(&self, context: &[Token]) -> Option<&BTreeMap<Token, u32>> {
        self.counts.get(context)
    }

    pub fn context_count(&self) -> usize {
        self.counts.len()
    }

    fn pick<R: Rng + ?Sized>(
        &self,
        history: &[Token],
        used: &HashSet<String>,
        top_k: usize,
        rng: &mut R,
    ) -> Token {
        let longest = (self.order - 1).min(history.len());
        for len in (0..=longest).rev() {
            let Some(next) = self.counts.get(&history[history.len() - len..]) else {
                continue;
            };
            let mut candidates: Vec<(&Token, u32)> = next
                .iter()
                .filter(|(t, _)| match t {
                    Token::Ingredient(name) => !used.contains(name),
                    Token::End => true,
                    Token::Start => false,
                })
                .map(|(t, &c)| (t, c))
                .collect();
            if candidates.is_empty() {
                continue;
            }
            // most frequent first; ties in token order
            candidates.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
            candidates.truncate(top_k);
            let total: u32 = candidates.iter().map(|&(_, c)| c).sum();
            let mut target = rng.random_range(0..total);
            for (t, c) in candidates {
                if target < c {
                    return t.clone();
                }
                target -= c;
            }
            unreachable!("counts sum to total");
        }
        Token::End
    }
}

/// Counts successors for every context of length `0..order` (contexts may
/// include the start marker; the start marker is never a successor).
pub fn train_ngram(recipes: &[RawRecipe], rules: &NormalizationRules, order: usize) -> NgramModel {
    assert!(order >= 1, "n-gram order must be at least 1");
    let mut counts: HashMap<Vec<Token>, BTreeMap<Token, u32>> = HashMap::new();
    for recipe in recipes {
        let items = canonical_ingredients(recipe, rules);
        if items.is_empty() {
            continue;
        }
        let mut seq = vec![Token::Start];
        seq.extend(
            items
                .into_iter()
                .map(|i| Token::Ingredient(i.name().to_string())),
        );
        seq.push(Token::End);
        for t in 1..seq.len() {
            for len in 0..=(order - 1).min(t) {
                *counts
                    .entry(seq[t - len..t].to_vec())
                    .or_default()
                    .entry(seq[t].clone())
                    .or_default() += 1;
            }
        }
    }
    NgramModel { order, counts }
}

/// Samples an ingredient sequence until the end token or [`NGRAM_CAP`].
pub fn sample_ngram<R: Rng + ?Sized>(
    model: &NgramModel,
    params: &GenerationParams,
    rng: &mut R,
) -> Recipe {
    sample_ngram_from(model, &[], params, rng)
}

/// Like [`sample_ngram`] but with a forced opening `prefix`.
pub fn sample_ngram_from<R: Rng + ?Sized>(
    model: &NgramModel,
    prefix: &[&str],
    params: &GenerationParams,
    rng: &mut R,
) -> Recipe {
    let mut history = vec![Token::Start];
    let mut used = HashSet::new();
    let mut out = Vec::new();
    for &p in prefix.iter().take(NGRAM_CAP) {
        if used.insert(p.to_string()) {
            history.push(Token::Ingredient(p.to_string()));
            out.push(CanonicalIngredient::new(p));
        }
    }
    while out.len() < NGRAM_CAP {
        match model.pick(&history, &used, params.top_k.max(1), rng) {
            Token::Ingredient(name) => {
                used.insert(name.clone());
                out.push(CanonicalIngredient::new(name.as_str()));
                history.push(Token::Ingredient(name));
            }
            Token::End | Token::Start => break,
        }
    }
    Recipe::bare(out, Mode::Ngram, params.seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_corpus_str;
    use crate::rng::{stream, Stream};

    fn toy() -> Vec<RawRecipe> {
        parse_corpus_str(include_str!("../../data/corpus/toy.json"), true)
            .unwrap()
            .recipes
    }

    fn tok(s: &str) -> Token {
        Token::Ingredient(s.to_string())
    }

    #[test]
    fn bigram_counts() {
        let m = train_ngram(&toy(), &NormalizationRules::default(), 2);
        assert_eq!(
            m.successors(&[tok("eggs")]).unwrap()[&tok("white sugar")],
            2
        );
    }

    #[test]
    fn unigram_mass() {
        let m = train_ngram(&toy(), &NormalizationRules::default(), 1);
        let root = m.successors(&[]).unwrap();
        assert_eq!(root.values().sum::<u32>(), 17 + 5);
        assert_eq!(root[&Token::End], 5);
        assert!(!root.contains_key(&Token::Start));
        assert_eq!(m.context_count(), 1);
    }

    #[test]
    fn single_recipe_replays() {
        let r = RawRecipe {
            id: "x".into(),
            title: "x".into(),
            ingredient_lines: vec!["a".into(), "b".into()],
            instruction_text: None,
        };
        let m = train_ngram(&[r], &NormalizationRules::default(), 2);
        for seed in 0..20 {
            let out = sample_ngram(
                &m,
                &GenerationParams::new(Mode::Ngram, 4, seed),
                &mut stream(seed, Stream::Recipe),
            );
            assert_eq!(out.ingredient_names().collect::<Vec<_>>(), ["a", "b"]);
        }
    }

    #[test]
    fn greedy_trace_from_eggs() {
        // [eggs] -> white sugar (2); [white sugar] -> butter/flour tie, butter
        // sorts first; [butter] -> END/salt/vanilla tie, salt sorts first;
        // [salt] -> END.
        let m = train_ngram(&toy(), &NormalizationRules::default(), 2);
        let mut p = GenerationParams::new(Mode::Ngram, 4, 1);
        p.top_k = 1;
        for seed in 0..5 {
            let r = sample_ngram_from(&m, &["eggs"], &p, &mut stream(seed, Stream::Recipe));
            assert_eq!(
                r.ingredient_names().collect::<Vec<_>>(),
                ["eggs", "white sugar", "butter", "salt"]
            );
        }
    }

    #[test]
    fn sequences_terminate_without_duplicates() {
        let m = train_ngram(&toy(), &NormalizationRules::default(), 3);
        let p = GenerationParams::new(Mode::Ngram, 4, 0);
        let mut rng = stream(11, Stream::Recipe);
        for _ in 0..1000 {
            let r = sample_ngram(&m, &p, &mut rng);
            let names: Vec<_> = r.ingredient_names().collect();
            assert!(!names.is_empty() && names.len() <= NGRAM_CAP);
            let set: HashSet<_> = names.iter().collect();
            assert_eq!(set.len(), names.len());
        }
    }
}
