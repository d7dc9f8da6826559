//! Brute-force reference computations. They read only the edge list and the
//! ingredient names, never the sampler's internals.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use cookquest::corpus::IngredientGraph;

pub struct Oracle {
    pub names: Vec<String>,
    pub w: BTreeMap<(usize, usize), u64>,
}

impl Oracle {
    pub fn new(g: &IngredientGraph) -> Self {
        let names = g.nodes().iter().map(|n| n.name().to_string()).collect();
        let mut w = BTreeMap::new();
        for (a, b, weight) in g.edges() {
            w.insert((a, b), u64::from(weight));
            w.insert((b, a), u64::from(weight));
        }
        Self { names, w }
    }

    pub fn weight(&self, a: usize, b: usize) -> u64 {
        self.w.get(&(a, b)).copied().unwrap_or(0)
    }

    pub fn degree(&self, a: usize) -> u64 {
        (0..self.names.len()).map(|b| self.weight(a, b)).sum()
    }

    /// Exact initial-ingredient distribution.
    pub fn initial(&self) -> Vec<f64> {
        let total: u64 = self.w.values().sum();
        (0..self.names.len())
            .map(|a| self.degree(a) as f64 / total as f64)
            .collect()
    }

    fn bag(&self, i: usize) -> BTreeSet<&str> {
        self.names[i].split_whitespace().collect()
    }

    pub fn nested(&self, a: usize, b: usize) -> bool {
        let (x, y) = (self.bag(a), self.bag(b));
        x.is_subset(&y) || y.is_subset(&x)
    }

    /// Unnormalized next-ingredient score of every node.
    pub fn scores(&self, selected: &[usize]) -> Vec<f64> {
        (0..self.names.len())
            .map(|x| {
                if selected.iter().any(|&s| self.nested(s, x)) {
                    return 0.0;
                }
                let linked = selected.iter().filter(|&&s| self.weight(s, x) > 0).count() as f64;
                let cond: f64 = selected
                    .iter()
                    .map(|&s| self.weight(s, x) as f64 / self.degree(s) as f64)
                    .sum();
                linked * linked * cond
            })
            .collect()
    }

    /// Normalized next-ingredient distribution, `None` at a dead end.
    pub fn next_distribution(&self, selected: &[usize]) -> Option<Vec<f64>> {
        let s = self.scores(selected);
        let total: f64 = s.iter().sum();
        (total > 0.0).then(|| s.into_iter().map(|v| v / total).collect())
    }

    /// Every ingredient set reachable by a walk of exactly `n` steps.
    pub fn reachable_sets(&self, n: usize) -> BTreeSet<BTreeSet<usize>> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<Vec<usize>> = (0..self.names.len())
            .filter(|&a| self.degree(a) > 0)
            .map(|a| vec![a])
            .collect();
        let mut seen = BTreeSet::new();
        while let Some(sel) = stack.pop() {
            if sel.len() == n {
                out.insert(sel.iter().copied().collect());
                continue;
            }
            // the distribution depends only on the set, so visit each set once
            let key: BTreeSet<usize> = sel.iter().copied().collect();
            if !seen.insert(key) {
                continue;
            }
            for (x, s) in self.scores(&sel).into_iter().enumerate() {
                if s > 0.0 {
                    let mut next = sel.clone();
                    next.push(x);
                    stack.push(next);
                }
            }
        }
        out
    }
}

pub fn total_variation(p: &[f64], q: &[f64]) -> f64 {
    p.iter().zip(q).map(|(a, b)| (a - b).abs()).sum::<f64>() / 2.0
}
