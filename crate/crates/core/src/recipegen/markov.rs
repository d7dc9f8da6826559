//! Weighted walk over the ingredient graph.
//!
//! The first ingredient is drawn in proportion to its weighted degree. Each
//! later candidate `x` is scored against the selected list `S` as
//!
//! ```text
//! score(x) = alpha(x, S) * beta(x, S) * sum_{s in S} w(s, x) / deg(s)
//! ```
//!
//! where `alpha` rules out candidates whose token bag nests with a selected
//! one, `beta` is the squared number of selected ingredients sharing an edge
//! with `x`, and `deg(s)` is the weighted degree of `s`. Scores are
//! renormalized over the positive-score candidates before sampling.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;

use super::{GenError, GenerationParams, Mode, Recipe};
use crate::corpus::{
    canonical_ingredients, CanonicalIngredient, IngredientGraph, NodeId, NormalizationRules,
    RawRecipe,
};

/// Ingredient sets of the corpus recipes, for the novelty check.
#[derive(Clone, Debug, Default)]
pub struct CorpusSets(HashSet<BTreeSet<String>>);

impl CorpusSets {
    pub fn from_recipes(recipes: &[RawRecipe], rules: &NormalizationRules) -> Self {
        Self(
            recipes
                .iter()
                .map(|r| {
                    canonical_ingredients(r, rules)
                        .into_iter()
                        .map(|i| i.name().to_string())
                        .collect()
                })
                .collect(),
        )
    }

    pub fn contains<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> bool {
        let set: BTreeSet<String> = names.into_iter().map(str::to_string).collect();
        self.0.contains(&set)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Draws the opening ingredient with probability
/// `weighted_degree(x) / total_ordered_weight`.
pub fn sample_initial<R: Rng + ?Sized>(
    graph: &IngredientGraph,
    rng: &mut R,
) -> Result<NodeId, GenError> {
    let total = graph.total_ordered_weight();
    if total == 0 {
        return Err(GenError::EdgelessGraph);
    }
    let mut target = rng.random_range(0..total);
    for id in 0..graph.node_count() {
        let d = graph.weighted_degree(id);
        if target < d {
            return Ok(id);
        }
        target -= d;
    }
    unreachable!("weighted degrees sum to the ordered total")
}

/// 0 when the candidate's token bag contains, or is contained in, the bag of
/// any selected ingredient; 1 otherwise.
pub fn alpha(candidate: &CanonicalIngredient, selected: &[CanonicalIngredient]) -> u32 {
    let b = candidate.token_bag();
    let nested = selected.iter().any(|s| {
        let a = s.token_bag();
        a.is_subset(b) || b.is_subset(a)
    });
    u32::from(!nested)
}

/// Squared count of selected ingredients that share an edge with the candidate.
pub fn beta(
    candidate: &CanonicalIngredient,
    selected: &[CanonicalIngredient],
    graph: &IngredientGraph,
) -> u64 {
    let shared = selected
        .iter()
        .filter(|s| graph.weight(s.name(), candidate.name()) > 0)
        .count() as u64;
    shared * shared
}

/// Unnormalized scores of every candidate with a positive score, sorted by
/// node id.
pub fn candidate_scores(graph: &IngredientGraph, selected: &[NodeId]) -> Vec<(NodeId, f64)> {
    let chosen: Vec<CanonicalIngredient> =
        selected.iter().map(|&i| graph.node(i).clone()).collect();
    // only neighbours of the selection can have beta > 0
    let pool: BTreeSet<NodeId> = selected
        .iter()
        .flat_map(|&s| graph.neighbors(s).iter().map(|&(n, _)| n))
        .collect();
    let mut out = Vec::new();
    for x in pool {
        let cand = graph.node(x);
        if alpha(cand, &chosen) == 0 {
            continue;
        }
        let shared = selected
            .iter()
            .filter(|&&s| graph.weight_by_id(s, x) > 0)
            .count() as f64;
        let conditional: f64 = selected
            .iter()
            .map(|&s| f64::from(graph.weight_by_id(s, x)) / graph.weighted_degree(s) as f64)
            .sum();
        let score = shared * shared * conditional;
        if score > 0.0 {
            out.push((x, score));
        }
    }
    out
}

/// Samples the next ingredient from the renormalized candidate scores.
pub fn next_ingredient<R: Rng + ?Sized>(
    graph: &IngredientGraph,
    selected: &[NodeId],
    rng: &mut R,
) -> Result<NodeId, GenError> {
    let scores = candidate_scores(graph, selected);
    let total: f64 = scores.iter().map(|&(_, s)| s).sum();
    if scores.is_empty() || total <= 0.0 {
        return Err(GenError::DeadEnd {
            selected: selected.len(),
        });
    }
    let mut target = rng.random::<f64>() * total;
    for &(id, s) in &scores {
        if target < s {
            return Ok(id);
        }
        target -= s;
    }
    // floating-point slack lands on the last candidate
    Ok(scores[scores.len() - 1].0)
}

fn walk<R: Rng + ?Sized>(
    graph: &IngredientGraph,
    n: usize,
    rng: &mut R,
) -> Result<Vec<NodeId>, GenError> {
    let mut selected = vec![sample_initial(graph, rng)?];
    while selected.len() < n {
        let next = next_ingredient(graph, &selected, rng)?;
        selected.push(next);
    }
    Ok(selected)
}

/// Walks the graph until a recipe of `n_ingredients` is found whose
/// ingredient set is not a corpus recipe. Each dead end or corpus collision
/// restarts the walk from scratch on the same random stream.
pub fn generate_markov<R: Rng + ?Sized>(
    graph: &IngredientGraph,
    corpus_sets: &CorpusSets,
    params: &GenerationParams,
    rng: &mut R,
) -> Result<Recipe, GenError> {
    params.validate()?;
    if params.n_ingredients > graph.node_count() {
        return Err(GenError::InsufficientVocabulary {
            needed: params.n_ingredients,
            available: graph.node_count(),
        });
    }
    let (mut dead_ends, mut collisions) = (0, 0);
    for _ in 0..params.max_retries {
        match walk(graph, params.n_ingredients, rng) {
            Ok(ids) => {
                let ingredients: Vec<CanonicalIngredient> =
                    ids.iter().map(|&i| graph.node(i).clone()).collect();
                if corpus_sets.contains(ingredients.iter().map(CanonicalIngredient::name)) {
                    collisions += 1;
                    continue;
                }
                return Ok(Recipe::bare(ingredients, Mode::Markov, params.seed));
            }
            Err(GenError::DeadEnd { .. }) => dead_ends += 1,
            Err(e) => return Err(e),
        }
    }
    Err(GenError::GenerationFailed {
        attempts: params.max_retries,
        dead_ends,
        collisions,
    })
}
