//! Maximum independent set by branch and bound.
//!
//! Vertices of degree at most one in the remaining candidate set are taken
//! greedily (some maximum independent set always contains them). The bound
//! is the size of a greedy clique cover of the candidates, and branching is
//! on a candidate of maximum remaining degree, include-first.

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// A maximum independent set of `g`, sorted.
pub fn max_independent_set(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>> {
    let mut search = MisSearch {
        g,
        budget,
        current: Vec::new(),
        best: greedy_independent_set(g),
    };
    search.run(g.vertex_set())?;
    let mut best = search.best;
    best.sort_unstable();
    debug_assert!(g.is_independent(&best));
    Ok(best)
}

/// Minimum-degree greedy independent set, used as the incumbent.
fn greedy_independent_set(g: &Graph) -> Vec<usize> {
    let mut cand = g.vertex_set();
    let mut out = Vec::new();
    while let Some(v) = cand
        .ones()
        .min_by_key(|&v| (g.neighbors(v).intersection_count(&cand), v))
    {
        out.push(v);
        cand.set(v, false);
        cand.difference_with(g.neighbors(v));
    }
    out
}

/// Number of cliques in a first-fit clique cover of `cand`; an upper
/// bound on the independence number of `g[cand]`.
pub(crate) fn clique_cover_bound(g: &Graph, cand: &VertexSet) -> usize {
    // common neighbourhood of each open clique
    let mut commons: Vec<VertexSet> = Vec::new();
    for v in cand.ones() {
        match commons.iter_mut().find(|c| c.contains(v)) {
            Some(c) => c.intersect_with(g.neighbors(v)),
            None => commons.push(g.neighbors(v).clone()),
        }
    }
    commons.len()
}

struct MisSearch<'a> {
    g: &'a Graph,
    budget: &'a mut Budget,
    current: Vec<usize>,
    best: Vec<usize>,
}

impl MisSearch<'_> {
    fn run(&mut self, mut cand: VertexSet) -> Result<()> {
        self.budget.tick()?;
        let g = self.g;
        let depth = self.current.len();

        // take vertices of candidate degree <= 1 until none remain
        loop {
            let low = cand
                .ones()
                .find(|&v| g.neighbors(v).intersection_count(&cand) <= 1);
            match low {
                Some(v) => {
                    self.current.push(v);
                    cand.set(v, false);
                    cand.difference_with(g.neighbors(v));
                }
                None => break,
            }
        }

        if cand.is_clear() {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
        } else if self.current.len() + clique_cover_bound(g, &cand) > self.best.len() {
            let v = cand
                .ones()
                .max_by_key(|&v| (g.neighbors(v).intersection_count(&cand), std::cmp::Reverse(v)))
                .expect("non-empty");

            let mut with = cand.clone();
            with.set(v, false);
            with.difference_with(g.neighbors(v));
            self.current.push(v);
            self.run(with)?;
            self.current.pop();

            cand.set(v, false);
            self.run(cand)?;
        }

        self.current.truncate(depth);
        Ok(())
    }
}
