use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use cookquest::assembly::{assemble, describe_recipe, GameCondition, GameSpec, Generator};
use cookquest::engine::{GameState, World};
use cookquest::pipeline::Pipeline;
use cookquest::recipegen::{GenerationParams, Mode, Recipe};
use cookquest::rng::{stream, Stream};
use cookquest::solver::{solve, DEFAULT_BUDGET};
use cookquest::worldkb::{MapId, WorldKb};

/// Plain BFS over every admissible command, drops included, with no
/// reductions. Returns the shortest plan length.
fn exhaustive_shortest(spec: &GameSpec, cap: usize) -> Option<usize> {
    let world: Arc<World> = World::new(spec.clone()).unwrap();
    let start = GameState::new(world);
    let mut depth = HashMap::from([(start.key(), 0usize)]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        let d = depth[&s.key()];
        if s.done() {
            return Some(d);
        }
        assert!(depth.len() < cap, "state space larger than {cap}");
        for cmd in s.admissible_commands() {
            let mut next = s.clone();
            next.execute(&cmd);
            let key = next.key();
            if let std::collections::hash_map::Entry::Vacant(e) = depth.entry(key) {
                e.insert(d + 1);
                queue.push_back(next);
            }
        }
    }
    None
}

fn authored(names: &[&str], map: MapId, seed: u64) -> GameSpec {
    let kb = WorldKb::builtin(map);
    let mut r = Recipe::authored(names.iter().copied());
    describe_recipe(&mut r, &kb);
    assemble(
        &r,
        &kb,
        GameCondition::new(Generator::HD, map),
        &mut stream(seed, Stream::Placement),
    )
    .unwrap()
}

#[test]
fn shortest_matches_exhaustive_search_on_small_games() {
    let p = Pipeline::builtin();
    let mut specs = Vec::new();
    for seed in 0..12 {
        for (mode, n) in [
            (Mode::Markov, 2),
            (Mode::Markov, 3),
            (Mode::Random, 3),
            (Mode::Random, 2),
        ] {
            specs.push(
                p.generate_game(&GenerationParams::new(mode, n, seed), MapId::OneRoom)
                    .unwrap(),
            );
        }
    }
    for seed in 0..4 {
        specs.push(authored(&["apple"], MapId::FiveRoom, seed));
        specs.push(authored(&["steak"], MapId::FiveRoom, seed));
        specs.push(authored(&["milk", "salt"], MapId::FiveRoom, seed));
    }
    let mut seen_lengths = HashSet::new();
    for spec in &specs {
        let report = solve(spec, DEFAULT_BUDGET);
        assert!(report.solvable, "{report:?}");
        let truth = exhaustive_shortest(spec, 2_000_000).expect("exhaustive search finds a plan");
        assert_eq!(report.plan.len(), truth, "{:?}", spec.recipe.ingredients);
        seen_lengths.insert(truth);
    }
    // the fixtures are not all the same shape
    assert!(seen_lengths.len() > 3);
}

#[test]
fn solve_rate_examples() {
    let p = Pipeline::builtin();
    let (mcs_1r, _) = p.validate_batch(Mode::Markov, MapId::OneRoom, 4, 0..100, DEFAULT_BUDGET);
    assert_eq!(mcs_1r.solve_rate, 1.0);
    let (ra_5r, _) = p.validate_batch(Mode::Random, MapId::FiveRoom, 4, 0..100, DEFAULT_BUDGET);
    assert_eq!(ra_5r.solve_rate, 1.0);
    let (mcs_5r, _) = p.validate_batch(Mode::Markov, MapId::FiveRoom, 4, 0..100, DEFAULT_BUDGET);
    assert!(mcs_5r.mean_plan_length > mcs_1r.mean_plan_length);
}

#[test]
fn reports_serialize_as_json() {
    let spec = authored(&["carrot"], MapId::OneRoom, 0);
    let r = solve(&spec, DEFAULT_BUDGET);
    let json = serde_json::to_string(&r).unwrap();
    assert!(json.contains("\"plan\""));
    assert!(json.contains("\"budget\":200000"));
}
