//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::time::{Duration, Instant};

use common::{total_variation, Oracle};
use cookquest::assembly::{serialize_game, EntityKind};
use cookquest::corpus::{
    build_graph, normalize, parse_corpus, parse_corpus_str, IngredientGraph, NormalizationRules,
    RawRecipe,
};
use cookquest::engine::{replay, World};
use cookquest::pipeline::{Pipeline, BUILTIN_CORPUS, BUILTIN_RULES};
use cookquest::recipegen::{
    next_ingredient, sample_initial, GenerationParams, Mode, COMPLEX_INGREDIENTS,
    SIMPLE_INGREDIENTS,
};
use cookquest::rng::{stream, Stream};
use cookquest::solver::DEFAULT_BUDGET;
use cookquest::worldkb::{FoodCategory, MapId};
use rand::{Rng, SeedableRng};
use statrs::distribution::{ChiSquared, ContinuousCDF};

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn check(ok: bool, detail: String) -> Verdict {
    if ok {
        Verdict::Pass(detail)
    } else {
        Verdict::Fail(detail)
    }
}

fn within(limit: Duration, start: Instant) -> (bool, String) {
    let took = start.elapsed();
    (
        took <= limit,
        format!("{:.2}s of {}s", took.as_secs_f64(), limit.as_secs()),
    )
}

fn toy_graph() -> IngredientGraph {
    let recipes = parse_corpus_str(include_str!("../data/corpus/toy.json"), true)
        .unwrap()
        .recipes;
    build_graph(&recipes, &NormalizationRules::default()).unwrap()
}

fn initial_distribution() -> Verdict {
    let start = Instant::now();
    let g = toy_graph();
    let exact = Oracle::new(&g).initial();
    let draws = 100_000;
    let mut counts = vec![0u64; g.node_count()];
    let mut rng = stream(20_240_601, Stream::Recipe);
    for _ in 0..draws {
        counts[sample_initial(&g, &mut rng).unwrap()] += 1;
    }
    let stat: f64 = counts
        .iter()
        .zip(&exact)
        .map(|(&o, &p)| {
            let e = p * draws as f64;
            (o as f64 - e).powi(2) / e
        })
        .sum();
    let df = (g.node_count() - 1) as f64;
    let critical = ChiSquared::new(df).unwrap().inverse_cdf(0.99);
    let (fast, t) = within(Duration::from_secs(5), start);
    check(
        stat < critical && fast,
        format!("chi2={stat:.2} < {critical:.2} (df={df}, alpha=0.01), {t}"),
    )
}

/// Random small corpus with some nested names.
fn random_fixture(rng: &mut impl Rng) -> IngredientGraph {
    loop {
        let vocab = rng.random_range(5..14);
        let n_recipes = rng.random_range(4..20);
        let recipes: Vec<RawRecipe> = (0..n_recipes)
            .map(|i| {
                let size = rng.random_range(2..6);
                let items: BTreeSet<usize> =
                    (0..size).map(|_| rng.random_range(0..vocab)).collect();
                RawRecipe {
                    id: format!("f{i}"),
                    title: String::new(),
                    ingredient_lines: items
                        .iter()
                        .map(|k| match k % 4 {
                            0 => format!("green item{k}"),
                            1 => format!("item{}", k - 1),
                            _ => format!("item{k}"),
                        })
                        .collect(),
                    instruction_text: None,
                }
            })
            .collect();
        if let Ok(g) = build_graph(&recipes, &NormalizationRules::default()) {
            if g.node_count() >= 4 {
                return g;
            }
        }
    }
}

fn next_distribution() -> Verdict {
    let start = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let draws = 50_000;
    let mut worst = 0.0f64;
    let mut fixtures = 0;
    while fixtures < 50 {
        let g = random_fixture(&mut rng);
        let o = Oracle::new(&g);
        // selection: a short walk along positive-score candidates
        let len = rng.random_range(1..4);
        let mut selected = vec![rng.random_range(0..g.node_count())];
        while selected.len() < len {
            let Some(d) = o.next_distribution(&selected) else {
                break;
            };
            let support: Vec<usize> = (0..d.len()).filter(|&i| d[i] > 0.0).collect();
            selected.push(support[rng.random_range(0..support.len())]);
        }
        let Some(exact) = o.next_distribution(&selected) else {
            continue;
        };
        let mut counts = vec![0u64; g.node_count()];
        let mut sampler = stream(fixtures, Stream::Recipe);
        for _ in 0..draws {
            counts[next_ingredient(&g, &selected, &mut sampler).unwrap()] += 1;
        }
        let empirical: Vec<f64> = counts.iter().map(|&c| c as f64 / draws as f64).collect();
        worst = worst.max(total_variation(&empirical, &exact));
        fixtures += 1;
    }
    let (fast, t) = within(Duration::from_secs(60), start);
    check(
        worst <= 0.02 && fast,
        format!("max TV {worst:.4} <= 0.02 over 50 fixtures x {draws} draws, {t}"),
    )
}

struct Generated {
    ids: Vec<Vec<usize>>,
}

fn markov_generations(p: &Pipeline) -> Generated {
    let g = p.graph();
    let ids = (0..1000u64)
        .map(|seed| {
            let n = if seed % 2 == 0 {
                SIMPLE_INGREDIENTS
            } else {
                COMPLEX_INGREDIENTS
            };
            p.generate_recipe(
                &GenerationParams::new(Mode::Markov, n, seed),
                MapId::OneRoom,
            )
            .unwrap()
            .ingredient_names()
            .map(|name| g.id_of(name).unwrap())
            .collect()
        })
        .collect();
    Generated { ids }
}

fn alpha_beta(p: &Pipeline, gen: &Generated) -> Verdict {
    let o = Oracle::new(p.graph());
    let mut nested = 0;
    let mut zero = 0;
    for ids in &gen.ids {
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if o.nested(ids[i], ids[j]) {
                    nested += 1;
                }
            }
            let score = if i == 0 {
                o.degree(ids[0]) as f64
            } else {
                o.scores(&ids[..i])[ids[i]]
            };
            if score <= 0.0 {
                zero += 1;
            }
        }
    }
    check(
        nested == 0 && zero == 0,
        format!(
            "{nested} subset violations, {zero} zero-score emissions over {} generations",
            gen.ids.len()
        ),
    )
}

fn novelty(p: &Pipeline, gen: &Generated) -> Verdict {
    let rules = NormalizationRules::parse(BUILTIN_RULES).unwrap();
    let corpus: HashSet<BTreeSet<String>> = p
        .recipes()
        .iter()
        .map(|r| {
            r.ingredient_lines
                .iter()
                .filter_map(|l| normalize(l, &rules).ok())
                .map(|c| c.name().to_string())
                .collect()
        })
        .collect();
    let g = p.graph();
    let copies = gen
        .ids
        .iter()
        .filter(|ids| {
            let set: BTreeSet<String> = ids.iter().map(|&i| g.node(i).name().to_string()).collect();
            corpus.contains(&set)
        })
        .count();
    check(
        copies == 0,
        format!(
            "{copies} of {} markov sets equal a corpus recipe",
            gen.ids.len()
        ),
    )
}

/// Mean plan lengths keyed by (mode, map, n).
type PlanStats = BTreeMap<(Mode, MapId, usize), f64>;

fn solvability(p: &Pipeline) -> (Verdict, PlanStats) {
    let start = Instant::now();
    let mut stats = PlanStats::new();
    let mut failures = Vec::new();
    let mut total = 0;
    for mode in Mode::ALL {
        for map in [MapId::OneRoom, MapId::FiveRoom] {
            for n in [SIMPLE_INGREDIENTS, COMPLEX_INGREDIENTS] {
                let (summary, reports) = p.validate_batch(mode, map, n, 0..100, DEFAULT_BUDGET);
                stats.insert((mode, map, n), summary.mean_plan_length);
                for (seed, r) in reports.iter().enumerate() {
                    total += 1;
                    let Some(r) = r else {
                        failures.push(format!("{mode}/{map}/n={n}/seed={seed}: generation failed"));
                        continue;
                    };
                    if !r.solvable {
                        failures.push(format!(
                            "{mode}/{map}/n={n}/seed={seed}: {:?}",
                            r.failure_reason
                        ));
                        continue;
                    }
                    // replay independently of the solver's own check
                    let spec = p
                        .generate_game(&GenerationParams::new(mode, n, seed as u64), map)
                        .unwrap();
                    let world = World::new(spec).unwrap();
                    let (end, _) = replay(&world, r.plan.iter().map(String::as_str));
                    if !end.done() || end.score() != world.score_max() {
                        failures.push(format!(
                            "{mode}/{map}/n={n}/seed={seed}: plan does not replay"
                        ));
                    }
                }
            }
        }
    }
    let (fast, t) = within(Duration::from_secs(300), start);
    let detail = format!(
        "{}/{total} solved and replayed to full score, {t}{}",
        total - failures.len(),
        failures
            .first()
            .map(|f| format!("; first failure {f}"))
            .unwrap_or_default()
    );
    (check(failures.is_empty() && fast, detail), stats)
}

fn coherence(p: &Pipeline) -> Verdict {
    let mut model_total = 0;
    let mut model_fridge = 0;
    let mut ra_total = 0;
    let mut ra_elsewhere = 0;
    for seed in 0..1000 {
        for mode in Mode::ALL {
            let spec = p
                .generate_game(&GenerationParams::new(mode, 4, seed), MapId::OneRoom)
                .unwrap();
            for e in &spec.entities {
                if e.kind != EntityKind::Ingredient || e.category != Some(FoodCategory::Vegetable) {
                    continue;
                }
                let fridge = e.container.as_deref() == Some("refrigerator");
                if mode == Mode::Random {
                    ra_total += 1;
                    ra_elsewhere += usize::from(!fridge);
                } else {
                    model_total += 1;
                    model_fridge += usize::from(fridge);
                }
            }
        }
    }
    check(
        model_total > 0 && model_fridge == model_total && ra_elsewhere > 0,
        format!(
            "markov/ngram 1R vegetables in refrigerator {model_fridge}/{model_total}; RA elsewhere {ra_elsewhere}/{ra_total}"
        ),
    )
}

fn complexity(stats: &PlanStats) -> Verdict {
    let mut bad = Vec::new();
    for mode in Mode::ALL {
        for n in [SIMPLE_INGREDIENTS, COMPLEX_INGREDIENTS] {
            let (a, b) = (
                stats[&(mode, MapId::OneRoom, n)],
                stats[&(mode, MapId::FiveRoom, n)],
            );
            if b <= a {
                bad.push(format!("{mode}/n={n}: 5R {b:.2} <= 1R {a:.2}"));
            }
        }
    }
    // the n-gram model picks its own length, so size only varies for the
    // other two generators
    for mode in [Mode::Markov, Mode::Random] {
        for map in [MapId::OneRoom, MapId::FiveRoom] {
            let (a, b) = (
                stats[&(mode, map, SIMPLE_INGREDIENTS)],
                stats[&(mode, map, COMPLEX_INGREDIENTS)],
            );
            if b <= a {
                bad.push(format!("{mode}/{map}: n=8 {b:.2} <= n=4 {a:.2}"));
            }
        }
    }
    let table: Vec<String> = stats
        .iter()
        .map(|((m, map, n), v)| format!("{m}/{map}/{n}={v:.2}"))
        .collect();
    check(
        bad.is_empty(),
        format!("5R>1R for all modes, n=8>n=4 for markov and random (ngram has no size variant); means {}{}", table.join(" "), bad.first().map(|b| format!("; {b}")).unwrap_or_default()),
    )
}

fn determinism() -> Verdict {
    let a = Pipeline::builtin();
    let b = Pipeline::builtin();
    let mut compared = 0;
    let mut differ = 0;
    for mode in Mode::ALL {
        for map in [MapId::OneRoom, MapId::FiveRoom] {
            for n in [SIMPLE_INGREDIENTS, COMPLEX_INGREDIENTS] {
                for seed in [0, 7, 12_345, u64::MAX] {
                    let params = GenerationParams::new(mode, n, seed);
                    let x = serialize_game(&a.generate_game(&params, map).unwrap());
                    let y = serialize_game(&b.generate_game(&params, map).unwrap());
                    compared += 1;
                    differ += usize::from(x != y);
                }
            }
        }
    }
    check(
        differ == 0,
        format!("{compared} spec files compared, {differ} differ"),
    )
}

/// Runs only when `COOKQUEST_FULL_CORPUS` points at the full dataset.
fn corpus_statistics() -> Verdict {
    let Some(path) = std::env::var_os("COOKQUEST_FULL_CORPUS") else {
        return Verdict::Skip(
            "full recipe dataset not available (set COOKQUEST_FULL_CORPUS)".into(),
        );
    };
    let recipes = match parse_corpus(&path, false) {
        Ok(c) => c.recipes,
        Err(e) => return Verdict::Skip(format!("could not read dataset: {e}")),
    };
    let rules = NormalizationRules::parse(BUILTIN_RULES).unwrap();
    let g = build_graph(&recipes, &rules).unwrap();
    let singletons = g.edges().filter(|&(_, _, w)| w == 1).count();
    let frac = singletons as f64 / g.edge_count() as f64;
    let w = g.weight("eggs", "white sugar");
    let detail = format!(
        "pairs {} (published 118116), singleton fraction {:.3} (published 0.62), w(eggs, white sugar) {w} (published 3774)",
        g.edge_count(),
        frac
    );
    if g.edge_count() == 118_116 && (frac - 0.62).abs() <= 0.01 && w == 3774 {
        Verdict::Pass(detail)
    } else {
        // a mismatch is reported, not fatal
        Verdict::Skip(format!("DIFF {detail}"))
    }
}

fn main() {
    // `cargo test -- --list` and filters pass arguments; only run on a plain invocation
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let sample = parse_corpus_str(BUILTIN_CORPUS, true).unwrap();
    assert!(!sample.recipes.is_empty());
    let p = Pipeline::builtin();
    let generated = markov_generations(&p);
    let mut results: Vec<(&str, Verdict)> = vec![
        ("initial-ingredient distribution", initial_distribution()),
        ("next-ingredient distribution", next_distribution()),
        (
            "subset exclusion and positive support",
            alpha_beta(&p, &generated),
        ),
        ("novelty against corpus", novelty(&p, &generated)),
    ];
    let (solved, stats) = solvability(&p);
    results.push(("solvability", solved));
    results.push(("placement coherence contrast", coherence(&p)));
    results.push(("complexity ordering", complexity(&stats)));
    results.push(("determinism", determinism()));
    results.push(("full-corpus statistics", corpus_statistics()));

    let mut failed = 0;
    println!();
    for (name, v) in &results {
        match v {
            Verdict::Pass(d) => println!("PASS  {name}: {d}"),
            Verdict::Fail(d) => {
                failed += 1;
                println!("FAIL  {name}: {d}")
            }
            Verdict::Skip(d) => println!("SKIP  {name}: {d}"),
        }
    }
    println!(
        "\nacceptance: {} passed, {failed} failed, {} skipped\n",
        results
            .iter()
            .filter(|(_, v)| matches!(v, Verdict::Pass(_)))
            .count(),
        results
            .iter()
            .filter(|(_, v)| matches!(v, Verdict::Skip(_)))
            .count()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
