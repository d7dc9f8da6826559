use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use thiserror::Error;

use super::{canonical_ingredients, CanonicalIngredient, NormalizationRules, RawRecipe};

pub type NodeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("no ingredient pairs in corpus; graph would be empty")]
    Empty,
    #[error("graph file line {line}: {reason}")]
    Parse { line: usize, reason: String },
}

/// Undirected weighted co-occurrence graph over canonical ingredients.
///
/// Nodes are sorted by name, so a `NodeId` is stable for a given node set.
/// Only ingredients that take part in at least one pair are nodes. Weights
/// are stored in both directions and every stored weight is at least 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngredientGraph {
    nodes: Vec<CanonicalIngredient>,
    index: HashMap<String, NodeId>,
    adjacency: Vec<Vec<(NodeId, u32)>>,
    weighted_degree: Vec<u64>,
    total_ordered_weight: u64,
    edge_count: usize,
}

fn ordered(
    a: CanonicalIngredient,
    b: CanonicalIngredient,
) -> (CanonicalIngredient, CanonicalIngredient) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// All unordered pairs of a recipe's distinct canonical ingredients, each
/// pair stored with the smaller name first.
pub fn extract_pairs(
    recipe: &RawRecipe,
    rules: &NormalizationRules,
) -> BTreeSet<(CanonicalIngredient, CanonicalIngredient)> {
    let items = canonical_ingredients(recipe, rules);
    let mut pairs = BTreeSet::new();
    for (i, a) in items.iter().enumerate() {
        for b in &items[i + 1..] {
            pairs.insert(ordered(a.clone(), b.clone()));
        }
    }
    pairs
}

/// Counts, for every unordered pair, the number of recipes containing it.
pub fn build_graph(
    recipes: &[RawRecipe],
    rules: &NormalizationRules,
) -> Result<IngredientGraph, GraphError> {
    let mut counts: BTreeMap<(String, String), u32> = BTreeMap::new();
    for recipe in recipes {
        for (a, b) in extract_pairs(recipe, rules) {
            *counts
                .entry((a.name().to_string(), b.name().to_string()))
                .or_default() += 1;
        }
    }
    IngredientGraph::from_weighted_edges(counts)
}

impl IngredientGraph {
    fn from_weighted_edges(edges: BTreeMap<(String, String), u32>) -> Result<Self, GraphError> {
        if edges.is_empty() {
            return Err(GraphError::Empty);
        }
        let names: BTreeSet<&str> = edges
            .keys()
            .flat_map(|(a, b)| [a.as_str(), b.as_str()])
            .collect();
        let nodes: Vec<CanonicalIngredient> =
            names.into_iter().map(CanonicalIngredient::new).collect();
        let index: HashMap<String, NodeId> = nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.name().to_string(), i))
            .collect();
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for ((a, b), &w) in &edges {
            debug_assert!(a < b && w >= 1);
            let (ia, ib) = (index[a], index[b]);
            adjacency[ia].push((ib, w));
            adjacency[ib].push((ia, w));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        let weighted_degree: Vec<u64> = adjacency
            .iter()
            .map(|row| row.iter().map(|&(_, w)| u64::from(w)).sum())
            .collect();
        let total_ordered_weight = weighted_degree.iter().sum();
        Ok(Self {
            nodes,
            index,
            adjacency,
            weighted_degree,
            total_ordered_weight,
            edge_count: edges.len(),
        })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> &[CanonicalIngredient] {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> &CanonicalIngredient {
        &self.nodes[id]
    }

    pub fn id_of(&self, name: &str) -> Option<NodeId> {
        self.index.get(name).copied()
    }

    /// Neighbours of `id` with edge weights, sorted by neighbour id.
    pub fn neighbors(&self, id: NodeId) -> &[(NodeId, u32)] {
        &self.adjacency[id]
    }

    pub fn weight_by_id(&self, a: NodeId, b: NodeId) -> u32 {
        self.adjacency[a]
            .binary_search_by_key(&b, |&(n, _)| n)
            .map(|i| self.adjacency[a][i].1)
            .unwrap_or(0)
    }

    /// Weight of the pair, 0 when absent or when either name is unknown.
    pub fn weight(&self, a: &str, b: &str) -> u32 {
        match (self.id_of(a), self.id_of(b)) {
            (Some(x), Some(y)) => self.weight_by_id(x, y),
            _ => 0,
        }
    }

    /// Sum of the weights of all edges touching `id`.
    pub fn weighted_degree(&self, id: NodeId) -> u64 {
        self.weighted_degree[id]
    }

    /// Sum of `w(a, b)` over ordered pairs: twice the undirected total.
    pub fn total_ordered_weight(&self) -> u64 {
        self.total_ordered_weight
    }

    /// Undirected edges `(a, b, w)` with `a < b`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId, u32)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(a, row)| {
            row.iter()
                .filter(move |&&(b, _)| b > a)
                .map(move |&(b, w)| (a, b, w))
        })
    }

    /// Plain-text adjacency table: `nodes=<n> edges=<e>` then
    /// `a<TAB>b<TAB>weight` rows sorted with `a < b`.
    pub fn to_text(&self) -> String {
        let mut out = format!("nodes={} edges={}\n", self.node_count(), self.edge_count());
        for (a, b, w) in self.edges() {
            let _ = writeln!(out, "{}\t{}\t{}", self.nodes[a], self.nodes[b], w);
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, reason: String| GraphError::Parse { line, reason };
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| err(1, "missing header".into()))?;
        let (nodes, edges) = parse_header(header)
            .ok_or_else(|| err(1, format!("expected `nodes=<n> edges=<e>`, got {header:?}")))?;
        let mut table: BTreeMap<(String, String), u32> = BTreeMap::new();
        let mut last: Option<(String, String)> = None;
        for (i, line) in lines {
            let lineno = i + 1;
            if line.is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let [a, b, w] = fields[..] else {
                return Err(err(
                    lineno,
                    format!("expected 3 tab-separated fields, got {}", fields.len()),
                ));
            };
            if a.trim() != a || b.trim() != b || a.is_empty() || b.is_empty() {
                return Err(err(lineno, "empty or padded ingredient name".into()));
            }
            if a >= b {
                return Err(err(lineno, format!("pair not ordered: {a:?} >= {b:?}")));
            }
            let w: u32 = w
                .parse()
                .map_err(|_| err(lineno, format!("bad weight {w:?}")))?;
            if w == 0 {
                return Err(err(lineno, "zero weight".into()));
            }
            let key = (a.to_string(), b.to_string());
            if last.as_ref().is_some_and(|prev| *prev >= key) {
                return Err(err(lineno, "rows not strictly sorted".into()));
            }
            last = Some(key.clone());
            table.insert(key, w);
        }
        let graph = Self::from_weighted_edges(table).map_err(|_| err(2, "no edges".into()))?;
        if graph.node_count() != nodes || graph.edge_count() != edges {
            return Err(err(
                1,
                format!(
                    "header says nodes={nodes} edges={edges}, rows give nodes={} edges={}",
                    graph.node_count(),
                    graph.edge_count()
                ),
            ));
        }
        Ok(graph)
    }
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut parts = line.split(' ');
    let nodes = parts.next()?.strip_prefix("nodes=")?.parse().ok()?;
    let edges = parts.next()?.strip_prefix("edges=")?.parse().ok()?;
    parts.next().is_none().then_some((nodes, edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::parse_corpus_str;

    fn toy() -> Vec<RawRecipe> {
        parse_corpus_str(include_str!("../../data/corpus/toy.json"), true)
            .unwrap()
            .recipes
    }

    fn recipe(lines: &[&str]) -> RawRecipe {
        RawRecipe {
            id: "t".into(),
            title: "t".into(),
            ingredient_lines: lines.iter().map(|s| s.to_string()).collect(),
            instruction_text: None,
        }
    }

    #[test]
    fn pairs_of_r1() {
        let pairs = extract_pairs(&toy()[0], &NormalizationRules::default());
        assert_eq!(pairs.len(), 6);
    }

    #[test]
    fn single_ingredient_has_no_pairs() {
        assert!(extract_pairs(&recipe(&["eggs"]), &NormalizationRules::default()).is_empty());
    }

    #[test]
    fn duplicates_collapse_before_pairing() {
        let pairs = extract_pairs(
            &recipe(&["eggs", "flour", "2 eggs"]),
            &NormalizationRules::default(),
        );
        let names: Vec<_> = pairs.iter().map(|(a, b)| (a.name(), b.name())).collect();
        assert_eq!(names, [("eggs", "flour")]);
    }

    #[test]
    fn toy_weights() {
        let g = build_graph(&toy(), &NormalizationRules::default()).unwrap();
        assert_eq!(g.node_count(), 9);
        assert_eq!(g.edge_count(), 16);
        assert_eq!(g.weight("eggs", "white sugar"), 2);
        assert_eq!(g.weight("white sugar", "eggs"), 2);
        assert_eq!(g.weight("flour", "butter"), 2);
        assert_eq!(g.weight("fish", "lemon"), 1);
        assert_eq!(g.weight("fish", "eggs"), 0);
        assert_eq!(g.total_ordered_weight(), 42);
        assert_eq!(g.weighted_degree(g.id_of("eggs").unwrap()), 8);
    }

    #[test]
    fn empty_corpus_is_error() {
        assert_eq!(
            build_graph(&[recipe(&["eggs"])], &NormalizationRules::default()),
            Err(GraphError::Empty)
        );
        assert_eq!(
            build_graph(&[], &NormalizationRules::default()),
            Err(GraphError::Empty)
        );
    }

    #[test]
    fn text_round_trip() {
        let g = build_graph(&toy(), &NormalizationRules::default()).unwrap();
        let text = g.to_text();
        assert!(text.starts_with("nodes=9 edges=16\nbutter\teggs\t2\n"));
        assert_eq!(IngredientGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            "",
            "nodes=2 edges=1",
            "nodes=2 edges=1\nb\ta\t1\n",
            "nodes=2 edges=1\na\tb\t0\n",
            "nodes=2 edges=1\na\tb\n",
            "nodes=3 edges=1\na\tb\t1\n",
            "nodes=3 edges=2\na\tc\t1\na\tb\t1\n",
            "nodes=2 edges=1 extra\na\tb\t1\n",
        ] {
            assert!(IngredientGraph::from_text(bad).is_err(), "accepted {bad:?}");
        }
    }
}
