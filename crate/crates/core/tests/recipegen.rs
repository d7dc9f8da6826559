mod common;

use std::collections::BTreeSet;

use common::Oracle;
use cookquest::corpus::{
    build_graph, parse_corpus_str, IngredientGraph, NormalizationRules, RawRecipe,
};
use cookquest::pipeline::Pipeline;
use cookquest::recipegen::{
    candidate_scores, generate_markov, CorpusSets, GenError, GenerationParams, Mode, NGRAM_CAP,
};
use cookquest::rng::{stream, Stream};
use cookquest::worldkb::MapId;
use proptest::prelude::*;

fn toy() -> (Vec<RawRecipe>, IngredientGraph) {
    let recipes = parse_corpus_str(include_str!("../data/corpus/toy.json"), true)
        .unwrap()
        .recipes;
    let g = build_graph(&recipes, &NormalizationRules::default()).unwrap();
    (recipes, g)
}

#[test]
fn toy_initial_probabilities() {
    let (_, g) = toy();
    let o = Oracle::new(&g);
    let p = o.initial();
    let id = |n: &str| g.id_of(n).unwrap();
    assert!((p[id("eggs")] - 8.0 / 42.0).abs() < 1e-12);
    assert!((p[id("vanilla")] - 3.0 / 42.0).abs() < 1e-12);
}

proptest! {
    #[test]
    fn scores_match_brute_force(
        corpus in prop::collection::vec(prop::collection::btree_set(0usize..10, 2..6), 2..15),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..4),
    ) {
        let recipes: Vec<RawRecipe> = corpus
            .iter()
            .enumerate()
            .map(|(i, items)| RawRecipe {
                id: format!("r{i}"),
                title: String::new(),
                // a few nested names exercise the bag rule
                ingredient_lines: items
                    .iter()
                    .map(|k| if k % 3 == 0 { format!("red item{k}") } else { format!("item{k}") })
                    .collect(),
                instruction_text: None,
            })
            .collect();
        let g = build_graph(&recipes, &NormalizationRules::default()).unwrap();
        let o = Oracle::new(&g);
        let mut selected: Vec<usize> = picks.iter().map(|i| i.index(g.node_count())).collect();
        selected.dedup();
        let want = o.scores(&selected);
        let got = candidate_scores(&g, &selected);
        for (id, s) in &got {
            prop_assert!((want[*id] - s).abs() < 1e-12);
        }
        let support: BTreeSet<usize> = got.iter().map(|&(id, _)| id).collect();
        let oracle_support: BTreeSet<usize> = (0..want.len()).filter(|&i| want[i] > 0.0).collect();
        prop_assert_eq!(support, oracle_support);
    }
}

#[test]
fn toy_eight_ingredient_walks() {
    // Every 9-node walk stays connected and no toy names nest, so 8-walks
    // exist and none of them is a corpus recipe. The sampler must find one.
    let (recipes, g) = toy();
    let o = Oracle::new(&g);
    let reachable = o.reachable_sets(8);
    assert!(!reachable.is_empty());
    let sets = CorpusSets::from_recipes(&recipes, &NormalizationRules::default());
    for seed in 0..20 {
        let r = generate_markov(
            &g,
            &sets,
            &GenerationParams::new(Mode::Markov, 8, seed),
            &mut stream(seed, Stream::Recipe),
        )
        .unwrap();
        let ids: BTreeSet<usize> = r.ingredient_names().map(|n| g.id_of(n).unwrap()).collect();
        assert!(reachable.contains(&ids));
    }
    let err = generate_markov(
        &g,
        &sets,
        &GenerationParams::new(Mode::Markov, 10, 0),
        &mut stream(0, Stream::Recipe),
    );
    assert_eq!(
        err.unwrap_err(),
        GenError::InsufficientVocabulary {
            needed: 10,
            available: 9
        }
    );
}

#[test]
fn toy_four_walk_avoids_r1() {
    let (recipes, g) = toy();
    let sets = CorpusSets::from_recipes(&recipes, &NormalizationRules::default());
    assert!(sets.contains(["eggs", "white sugar", "flour", "butter"]));
    for seed in 0..200 {
        let r = generate_markov(
            &g,
            &sets,
            &GenerationParams::new(Mode::Markov, 4, seed),
            &mut stream(seed, Stream::Recipe),
        )
        .unwrap();
        assert!(!sets.contains(r.ingredient_names()));
    }
}

#[test]
fn recipes_are_deterministic_in_every_mode() {
    let p = Pipeline::builtin();
    for mode in Mode::ALL {
        for seed in 0..20 {
            let params = GenerationParams::new(mode, 4, seed);
            assert_eq!(
                p.generate_recipe(&params, MapId::OneRoom).unwrap(),
                p.generate_recipe(&params, MapId::OneRoom).unwrap()
            );
        }
    }
}

#[test]
fn ngram_sequences_end_cleanly() {
    let p = Pipeline::builtin();
    for seed in 0..500 {
        let r = p
            .generate_recipe(&GenerationParams::new(Mode::Ngram, 4, seed), MapId::OneRoom)
            .unwrap();
        let names: Vec<&str> = r.ingredient_names().collect();
        assert!(!names.is_empty() && names.len() <= NGRAM_CAP);
        assert_eq!(names.iter().collect::<BTreeSet<_>>().len(), names.len());
    }
}
