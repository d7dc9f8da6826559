//! End-to-end generation: corpus and knowledge base in, game specs out.

use std::path::Path;

use rayon::prelude::*;
use thiserror::Error;

use crate::assembly::{
    assemble, describe_recipe, AssemblyError, GameCondition, GameSpec, Generator,
};
use crate::corpus::{
    build_graph, parse_corpus, parse_corpus_str, CorpusError, GraphError, IngredientGraph,
    NormalizationRules, RawRecipe, RulesError,
};
use crate::recipegen::{
    generate_markov, generate_random, sample_ngram, train_ngram, CorpusSets, GenError,
    GenerationParams, Mode, NgramModel, Recipe, DEFAULT_NGRAM_ORDER,
};
use crate::rng::{stream, Stream};
use crate::solver::{solve, BatchSummary, SolveReport};
use crate::worldkb::{load_kb_dir, KbError, MapId, WorldKb};

pub const BUILTIN_CORPUS: &str = include_str!("../data/corpus/sample.json");
pub const BUILTIN_RULES: &str = include_str!("../data/rules.toml");

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Rules(#[from] RulesError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Kb(#[from] KbError),
    #[error(transparent)]
    Generation(#[from] GenError),
    #[error(transparent)]
    Assembly(#[from] AssemblyError),
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

/// Everything derived from one corpus and knowledge base.
pub struct Pipeline {
    recipes: Vec<RawRecipe>,
    rules: NormalizationRules,
    graph: IngredientGraph,
    corpus_sets: CorpusSets,
    ngram: NgramModel,
    kb_1r: WorldKb,
    kb_5r: WorldKb,
}

impl Pipeline {
    pub fn new(
        recipes: Vec<RawRecipe>,
        rules: NormalizationRules,
        kb_1r: WorldKb,
        kb_5r: WorldKb,
    ) -> Result<Self, PipelineError> {
        let graph = build_graph(&recipes, &rules)?;
        let corpus_sets = CorpusSets::from_recipes(&recipes, &rules);
        let ngram = train_ngram(&recipes, &rules, DEFAULT_NGRAM_ORDER);
        Ok(Self {
            recipes,
            rules,
            graph,
            corpus_sets,
            ngram,
            kb_1r,
            kb_5r,
        })
    }

    /// Built from the data files bundled with the crate.
    pub fn builtin() -> Self {
        let recipes = parse_corpus_str(BUILTIN_CORPUS, true)
            .expect("bundled corpus parses")
            .recipes;
        let rules = NormalizationRules::parse(BUILTIN_RULES).expect("bundled rules parse");
        Self::new(
            recipes,
            rules,
            WorldKb::builtin(MapId::OneRoom),
            WorldKb::builtin(MapId::FiveRoom),
        )
        .expect("bundled corpus has edges")
    }

    /// Loads from disk; `None` falls back to the bundled file.
    pub fn load(
        corpus: Option<&Path>,
        rules: Option<&Path>,
        kb_dir: Option<&Path>,
    ) -> Result<Self, PipelineError> {
        let recipes = match corpus {
            Some(p) => parse_corpus(p, false)?.recipes,
            None => parse_corpus_str(BUILTIN_CORPUS, true)?.recipes,
        };
        let rules = match rules {
            Some(p) => NormalizationRules::parse(&read(p)?)?,
            None => NormalizationRules::parse(BUILTIN_RULES)?,
        };
        let (kb_1r, kb_5r) = match kb_dir {
            Some(d) => (
                load_kb_dir(d, MapId::OneRoom)?,
                load_kb_dir(d, MapId::FiveRoom)?,
            ),
            None => (
                WorldKb::builtin(MapId::OneRoom),
                WorldKb::builtin(MapId::FiveRoom),
            ),
        };
        Self::new(recipes, rules, kb_1r, kb_5r)
    }

    pub fn recipes(&self) -> &[RawRecipe] {
        &self.recipes
    }

    pub fn rules(&self) -> &NormalizationRules {
        &self.rules
    }

    pub fn graph(&self) -> &IngredientGraph {
        &self.graph
    }

    pub fn corpus_sets(&self) -> &CorpusSets {
        &self.corpus_sets
    }

    pub fn kb(&self, map: MapId) -> &WorldKb {
        match map {
            MapId::OneRoom => &self.kb_1r,
            MapId::FiveRoom => &self.kb_5r,
        }
    }

    /// Samples an ingredient list and describes it against `map`'s KB.
    pub fn generate_recipe(
        &self,
        params: &GenerationParams,
        map: MapId,
    ) -> Result<Recipe, GenError> {
        let mut rng = stream(params.seed, Stream::Recipe);
        let mut recipe = match params.mode {
            Mode::Markov => generate_markov(&self.graph, &self.corpus_sets, params, &mut rng)?,
            Mode::Ngram => {
                params.validate()?;
                sample_ngram(&self.ngram, params, &mut rng)
            }
            Mode::Random => generate_random(&self.graph, params, &mut rng)?,
        };
        describe_recipe(&mut recipe, self.kb(map));
        Ok(recipe)
    }

    /// Recipe and placement draw from separate streams of the same seed.
    pub fn generate_game(
        &self,
        params: &GenerationParams,
        map: MapId,
    ) -> Result<GameSpec, PipelineError> {
        let recipe = self.generate_recipe(params, map)?;
        let condition =
            GameCondition::new(Generator::for_mode(params.mode, params.n_ingredients), map);
        let mut rng = stream(params.seed, Stream::Placement);
        Ok(assemble(&recipe, self.kb(map), condition, &mut rng)?)
    }

    /// Generates and solves one game per seed in `seeds`, in parallel.
    pub fn validate_batch(
        &self,
        mode: Mode,
        map: MapId,
        n_ingredients: usize,
        seeds: std::ops::Range<u64>,
        budget: usize,
    ) -> (BatchSummary, Vec<Option<SolveReport>>) {
        let reports: Vec<Option<SolveReport>> = seeds
            .into_par_iter()
            .map(|seed| {
                let params = GenerationParams::new(mode, n_ingredients, seed);
                match self.generate_game(&params, map) {
                    Ok(spec) => Some(solve(&spec, budget)),
                    Err(e) => {
                        log::warn!("seed {seed}: {e}");
                        None
                    }
                }
            })
            .collect();
        let condition = GameCondition::new(Generator::for_mode(mode, n_ingredients), map);
        (
            BatchSummary::from_reports(condition, n_ingredients, &reports),
            reports,
        )
    }
}

fn read(path: &Path) -> Result<String, PipelineError> {
    std::fs::read_to_string(path).map_err(|source| PipelineError::Io {
        path: path.display().to_string(),
        source,
    })
}
