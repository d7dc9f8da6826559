use rand::seq::index;
use rand::Rng;

use super::{GenError, GenerationParams, Mode, Recipe};
use crate::corpus::IngredientGraph;

/// Uniform draw of `n_ingredients` distinct graph nodes, ignoring edges.
pub fn generate_random<R: Rng + ?Sized>(
    graph: &IngredientGraph,
    params: &GenerationParams,
    rng: &mut R,
) -> Result<Recipe, GenError> {
    params.validate()?;
    let available = graph.node_count();
    if params.n_ingredients > available {
        return Err(GenError::InsufficientVocabulary {
            needed: params.n_ingredients,
            available,
        });
    }
    let picked = index::sample(rng, available, params.n_ingredients)
        .into_iter()
        .map(|i| graph.node(i).clone())
        .collect();
    Ok(Recipe::bare(picked, Mode::Random, params.seed))
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::corpus::{build_graph, parse_corpus_str, NormalizationRules};
    use crate::rng::{stream, Stream};

    fn toy() -> IngredientGraph {
        let recipes = parse_corpus_str(include_str!("../../data/corpus/toy.json"), true)
            .unwrap()
            .recipes;
        build_graph(&recipes, &NormalizationRules::default()).unwrap()
    }

    #[test]
    fn distinct_draws() {
        let g = toy();
        let r = generate_random(
            &g,
            &GenerationParams::new(Mode::Random, 4, 1),
            &mut stream(1, Stream::Recipe),
        )
        .unwrap();
        let set: BTreeSet<_> = r.ingredient_names().collect();
        assert_eq!(set.len(), 4);
    }

    #[test]
    fn whole_vocabulary() {
        let g = toy();
        let r = generate_random(
            &g,
            &GenerationParams::new(Mode::Random, 9, 2),
            &mut stream(2, Stream::Recipe),
        )
        .unwrap();
        let set: BTreeSet<_> = r.ingredient_names().collect();
        assert_eq!(set.len(), g.node_count());
    }

    #[test]
    fn seeded_runs_match() {
        let g = toy();
        let p = GenerationParams::new(Mode::Random, 4, 5);
        let a = generate_random(&g, &p, &mut stream(5, Stream::Recipe)).unwrap();
        let b = generate_random(&g, &p, &mut stream(5, Stream::Recipe)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_few_nodes() {
        let g = toy();
        let err = generate_random(
            &g,
            &GenerationParams::new(Mode::Random, 10, 0),
            &mut stream(0, Stream::Recipe),
        );
        assert!(matches!(
            err,
            Err(GenError::InsufficientVocabulary {
                needed: 10,
                available: 9
            })
        ));
    }
}
