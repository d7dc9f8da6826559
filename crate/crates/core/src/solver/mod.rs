//! Breadth-first planner proving a spec completable.
//!
//! Two reductions keep the search small without losing shortest plans.
//! Every quest step is completed exactly once in any plan, and every state
//! change is monotone (doors and containers never close, completed steps
//! stay completed), so an enabled scoring action can be moved to the front
//! of any optimal plan. When one exists it is the only successor. `drop`,
//! `look`, `examine` and `inventory` never enable anything and are skipped.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::assembly::{EntityKind, GameCondition, GameSpec};
use crate::engine::{replay, Command, GameState, Verb, World};

pub const DEFAULT_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub solvable: bool,
    pub plan: Vec<String>,
    pub states_expanded: usize,
    pub budget: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure_reason: Option<String>,
}

impl SolveReport {
    fn failed(reason: String, states_expanded: usize, budget: usize) -> Self {
        Self {
            solvable: false,
            plan: Vec::new(),
            states_expanded,
            budget,
            failure_reason: Some(reason),
        }
    }
}

/// Tools and objects named by quest steps that the spec never places.
fn missing_entities(spec: &GameSpec) -> Option<String> {
    let has = |name: &str, kind: Option<EntityKind>| {
        spec.entities
            .iter()
            .any(|e| e.name == name && kind.is_none_or(|k| e.kind == k))
    };
    for step in &spec.quest {
        if let Some(tool) = &step.tool {
            if !has(tool, Some(EntityKind::Tool)) {
                return Some(format!(
                    "missing tool {tool:?} needed to {} {}",
                    step.verb, step.object
                ));
            }
        }
        if !step.is_goal() && !has(&step.object, None) {
            return Some(format!("missing entity {:?}", step.object));
        }
    }
    None
}

fn successors(state: &GameState) -> Vec<Command> {
    let mut cmds = state.admissible_commands();
    if let Some(i) = cmds.iter().position(|c| state.would_score(c) == Some(true)) {
        return vec![cmds.swap_remove(i)];
    }
    cmds.retain(|c| {
        !matches!(
            c.verb,
            Verb::Drop | Verb::Look | Verb::Examine | Verb::Inventory
        )
    });
    cmds
}

/// Shortest plan for `spec`, exploring at most `budget` states.
pub fn solve(spec: &GameSpec, budget: usize) -> SolveReport {
    if let Some(reason) = missing_entities(spec) {
        return SolveReport::failed(reason, 0, budget);
    }
    let world = match World::new(spec.clone()) {
        Ok(w) => w,
        Err(e) => return SolveReport::failed(e.to_string(), 0, budget),
    };
    let start = GameState::new(world.clone());
    // arena of (state, parent, command text)
    let mut nodes: Vec<(GameState, usize, String)> =
        vec![(start.clone(), usize::MAX, String::new())];
    let mut seen = HashSet::from([start.key()]);
    let mut queue = VecDeque::from([0usize]);
    let mut expanded = 0;
    while let Some(i) = queue.pop_front() {
        if nodes[i].0.done() {
            let mut plan = Vec::new();
            let mut at = i;
            while nodes[at].1 != usize::MAX {
                plan.push(nodes[at].2.clone());
                at = nodes[at].1;
            }
            plan.reverse();
            let (end, _) = replay(&world, plan.iter().map(String::as_str));
            if !end.done() || end.score() != world.score_max() {
                return SolveReport::failed(
                    format!("plan did not replay to completion: {plan:?}"),
                    expanded,
                    budget,
                );
            }
            return SolveReport {
                solvable: true,
                plan,
                states_expanded: expanded,
                budget,
                failure_reason: None,
            };
        }
        if expanded >= budget {
            return SolveReport::failed("budget".into(), expanded, budget);
        }
        expanded += 1;
        let state = nodes[i].0.clone();
        for cmd in successors(&state) {
            let mut next = state.clone();
            let obs = next.execute(&cmd);
            debug_assert!(obs.admissible);
            if seen.insert(next.key()) {
                nodes.push((next, i, cmd.text(&world)));
                queue.push_back(nodes.len() - 1);
            }
        }
    }
    SolveReport::failed(
        format!("no reachable completion after {expanded} states"),
        expanded,
        budget,
    )
}

/// Aggregate of one batch of solves.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BatchSummary {
    pub condition: GameCondition,
    pub n_ingredients: usize,
    pub seeds: usize,
    /// Games that could not be generated at all.
    pub generation_failures: usize,
    pub solved: usize,
    pub solve_rate: f64,
    pub mean_plan_length: f64,
    pub median_plan_length: f64,
}

impl BatchSummary {
    /// `reports` holds one entry per seed; `None` is a generation failure.
    pub fn from_reports(
        condition: GameCondition,
        n_ingredients: usize,
        reports: &[Option<SolveReport>],
    ) -> Self {
        let mut lengths: Vec<usize> = reports
            .iter()
            .flatten()
            .filter(|r| r.solvable)
            .map(|r| r.plan.len())
            .collect();
        lengths.sort_unstable();
        let solved = lengths.len();
        let mean = if solved == 0 {
            0.0
        } else {
            lengths.iter().sum::<usize>() as f64 / solved as f64
        };
        let median = match solved {
            0 => 0.0,
            n if n % 2 == 1 => lengths[n / 2] as f64,
            n => (lengths[n / 2 - 1] + lengths[n / 2]) as f64 / 2.0,
        };
        Self {
            condition,
            n_ingredients,
            seeds: reports.len(),
            generation_failures: reports.iter().filter(|r| r.is_none()).count(),
            solved,
            solve_rate: if reports.is_empty() {
                0.0
            } else {
                solved as f64 / reports.len() as f64
            },
            mean_plan_length: mean,
            median_plan_length: median,
        }
    }

    pub const TABLE_HEADER: &'static str =
        "condition  n   seeds  gen-fail  solve-rate  mean-plan  median-plan";
}

impl fmt::Display for BatchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} {:<3} {:<6} {:<9} {:<11.3} {:<10.2} {:.1}",
            self.condition.to_string(),
            self.n_ingredients,
            self.seeds,
            self.generation_failures,
            self.solve_rate,
            self.mean_plan_length,
            self.median_plan_length
        )
    }
}
