//! Exact t-tessellability search and the iterative-deepening T(G) solver.
//!
//! A cover with `t` tessellations is searched as `t` label classes, each a
//! partition of the vertices into cliques. Assigning an uncovered edge `uv`
//! to class `i` merges the blocks of `u` and `v` in that class, which is
//! allowed only when the union is still a clique of `g`; all edges between
//! the two blocks become covered at once. Any cover can be reached this way,
//! since its cliques can be grown one edge at a time from singletons.
//!
//! The edge with the fewest admissible classes is branched on first. Empty
//! classes are interchangeable, so at most one of them is tried per node,
//! and the edges of a maximum induced star are pinned to distinct classes
//! before the search starts.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::invariants::star_number;
use crate::ops::induced_subgraph;

use super::bounds::{cover_from_clique_graph, cover_from_edge_coloring, lower_bound};
use super::cover::{Tessellation, TessellationCover};

const NONE: usize = usize::MAX;

/// Outcome of [`solve_exact`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SolveResult {
    /// T(G)
    pub value: usize,
    /// a cover with exactly `value` tessellations
    pub cover: TessellationCover,
    pub lower_bound_used: usize,
    pub nodes_explored: u64,
}

/// A cover of `g` with at most `t` tessellations, or `None` if none exists.
pub fn feasible(g: &Graph, t: usize, budget: &mut Budget) -> Result<Option<TessellationCover>> {
    feasible_seeded(g, t, &[], budget)
}

/// As [`feasible`], with `seed[j]` pre-assigned to class `j`. The seed edges
/// must be pairwise impossible to share a tessellation (the edges of an
/// induced star), so that the pinning loses no solution.
pub fn feasible_seeded(
    g: &Graph,
    t: usize,
    seed: &[(usize, usize)],
    budget: &mut Budget,
) -> Result<Option<TessellationCover>> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "the number of tessellations must be at least 1".into(),
        ));
    }
    if g.edge_count() == 0 {
        return Ok(Some(TessellationCover::default()));
    }
    if seed.len() > t {
        return Ok(None);
    }
    let mut s = CoverSearch::new(g, t);
    for (i, &(u, v)) in seed.iter().enumerate() {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidParameter(format!("seed pair {u}-{v} is not an edge")));
        }
        s.merge(i, u, v);
    }
    if s.run(budget)? {
        let cover = s.to_cover();
        debug_assert!(cover.validate(g).is_ok());
        Ok(Some(cover))
    } else {
        Ok(None)
    }
}

struct CoverSearch<'a> {
    g: &'a Graph,
    n: usize,
    edges: Vec<(usize, usize)>,
    edge_id: Vec<usize>,
    /// `rep[i][v]`: representative of v's block in class i
    rep: Vec<Vec<usize>>,
    /// `block[i][r]`: members of the block represented by r
    block: Vec<Vec<VertexSet>>,
    merges: Vec<usize>,
    /// number of classes covering each edge
    count: Vec<u32>,
    uncovered: usize,
}

struct Undo {
    class: usize,
    keep: usize,
    moved: usize,
}

impl<'a> CoverSearch<'a> {
    fn new(g: &'a Graph, t: usize) -> Self {
        let n = g.n();
        let edges = g.edges();
        let mut edge_id = vec![NONE; n * n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            edge_id[u * n + v] = i;
            edge_id[v * n + u] = i;
        }
        let singletons: Vec<VertexSet> = (0..n)
            .map(|v| {
                let mut s = VertexSet::with_capacity(n);
                s.insert(v);
                s
            })
            .collect();
        CoverSearch {
            g,
            n,
            uncovered: edges.len(),
            count: vec![0; edges.len()],
            edges,
            edge_id,
            rep: vec![(0..n).collect(); t],
            block: vec![singletons; t],
            merges: vec![0; t],
        }
    }

    fn can_merge(&self, i: usize, u: usize, v: usize) -> bool {
        let (a, b) = (self.rep[i][u], self.rep[i][v]);
        if a == b {
            return false;
        }
        let (small, large) = {
            let (ba, bb) = (&self.block[i][a], &self.block[i][b]);
            if ba.count_ones(..) <= bb.count_ones(..) {
                (ba, bb)
            } else {
                (bb, ba)
            }
        };
        small.ones().all(|x| large.is_subset(self.g.neighbors(x)))
    }

    fn merge(&mut self, i: usize, u: usize, v: usize) -> Undo {
        let (a, b) = (self.rep[i][u], self.rep[i][v]);
        let (keep, moved) = (a.min(b), a.max(b));
        let n = self.n;
        for x in self.block[i][keep].ones() {
            for y in self.block[i][moved].ones() {
                let e = self.edge_id[x * n + y];
                if self.count[e] == 0 {
                    self.uncovered -= 1;
                }
                self.count[e] += 1;
            }
        }
        let moved_block = std::mem::take(&mut self.block[i][moved]);
        for y in moved_block.ones() {
            self.rep[i][y] = keep;
        }
        self.block[i][keep].union_with(&moved_block);
        self.block[i][moved] = moved_block;
        self.merges[i] += 1;
        Undo { class: i, keep, moved }
    }

    fn undo(&mut self, u: Undo) {
        let Undo { class: i, keep, moved } = u;
        let n = self.n;
        let moved_block = std::mem::take(&mut self.block[i][moved]);
        self.block[i][keep].difference_with(&moved_block);
        for y in moved_block.ones() {
            self.rep[i][y] = moved;
        }
        for x in self.block[i][keep].ones() {
            for y in moved_block.ones() {
                let e = self.edge_id[x * n + y];
                self.count[e] -= 1;
                if self.count[e] == 0 {
                    self.uncovered += 1;
                }
            }
        }
        self.block[i][moved] = moved_block;
        self.merges[i] -= 1;
    }

    /// Admissible classes for edge `uv`, best first.
    fn options(&self, u: usize, v: usize, first_empty: Option<usize>) -> Vec<usize> {
        let mut opts: Vec<(usize, usize)> = (0..self.merges.len())
            .filter(|&i| self.merges[i] > 0 && self.can_merge(i, u, v))
            .map(|i| {
                let gain = self.block[i][self.rep[i][u]].count_ones(..)
                    * self.block[i][self.rep[i][v]].count_ones(..);
                (gain, i)
            })
            .collect();
        // larger merges first, then lower class index
        opts.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut out: Vec<usize> = opts.into_iter().map(|(_, i)| i).collect();
        out.extend(first_empty);
        out
    }

    fn run(&mut self, budget: &mut Budget) -> Result<bool> {
        budget.tick()?;
        if self.uncovered == 0 {
            return Ok(true);
        }
        let first_empty = self.merges.iter().position(|&m| m == 0);
        let mut chosen: Option<Vec<usize>> = None;
        let mut chosen_edge = NONE;
        for e in 0..self.edges.len() {
            if self.count[e] != 0 {
                continue;
            }
            let (u, v) = self.edges[e];
            let opts = self.options(u, v, first_empty);
            if opts.is_empty() {
                return Ok(false);
            }
            if chosen.as_ref().map_or(true, |c| opts.len() < c.len()) {
                let single = opts.len() == 1;
                chosen = Some(opts);
                chosen_edge = e;
                if single {
                    break;
                }
            }
        }
        let (u, v) = self.edges[chosen_edge];
        for i in chosen.expect("an uncovered edge exists") {
            let undo = self.merge(i, u, v);
            if self.run(budget)? {
                return Ok(true);
            }
            self.undo(undo);
        }
        Ok(false)
    }

    fn to_cover(&self) -> TessellationCover {
        let tessellations = (0..self.merges.len())
            .filter(|&i| self.merges[i] > 0)
            .map(|i| {
                let cliques = (0..self.n)
                    .filter(|&v| self.rep[i][v] == v && self.block[i][v].count_ones(..) >= 2)
                    .map(|v| self.block[i][v].ones().collect())
                    .collect();
                Tessellation::new(cliques)
            })
            .collect();
        TessellationCover::new(tessellations)
    }
}

/// First-fit edge colouring as a cover: valid, cheap, at most `2Δ − 1`
/// tessellations.
pub fn greedy_cover(g: &Graph) -> TessellationCover {
    let n = g.n();
    let mut used: Vec<Vec<bool>> = vec![Vec::new(); n];
    let mut classes: Vec<Vec<Vec<usize>>> = Vec::new();
    for (u, v) in g.edges() {
        let c = (0..)
            .find(|&c| !used[u].get(c).copied().unwrap_or(false) && !used[v].get(c).copied().unwrap_or(false))
            .expect("unbounded search");
        for x in [u, v] {
            if used[x].len() <= c {
                used[x].resize(c + 1, false);
            }
            used[x][c] = true;
        }
        if classes.len() <= c {
            classes.resize(c + 1, Vec::new());
        }
        classes[c].push(vec![u, v]);
    }
    TessellationCover::new(classes.into_iter().map(Tessellation::new).collect())
}

struct ComponentOutcome {
    value: usize,
    cover: TessellationCover,
    lower: usize,
}

fn solve_connected(g: &Graph, budget: &mut Budget) -> Result<ComponentOutcome, (usize, usize)> {
    let fallback = greedy_cover(g);
    let lb = match lower_bound(g, budget) {
        Ok(lb) => lb.max(1),
        Err(_) => return Err((1, fallback.size())),
    };
    let seed: Vec<(usize, usize)> = match star_number(g, budget) {
        Ok(star) => match star.center {
            Some(c) => star.leaves.iter().map(|&l| (c.min(l), c.max(l))).collect(),
            None => Vec::new(),
        },
        Err(_) => return Err((lb, fallback.size())),
    };
    let mut upper = fallback;
    let mut exact_upper_done = false;
    let mut t = lb;
    loop {
        if t >= upper.size() {
            return Ok(ComponentOutcome {
                value: upper.size(),
                cover: upper.normalized(),
                lower: lb,
            });
        }
        match feasible_seeded(g, t, &seed, budget) {
            Ok(Some(cover)) => {
                return Ok(ComponentOutcome {
                    value: cover.size(),
                    cover,
                    lower: lb,
                })
            }
            Ok(None) => t += 1,
            Err(_) => return Err((t, upper.size())),
        }
        if !exact_upper_done {
            exact_upper_done = true;
            for cover in [
                cover_from_edge_coloring(g, budget),
                cover_from_clique_graph(g, budget),
            ]
            .into_iter()
            .flatten()
            {
                if cover.size() < upper.size() {
                    upper = cover;
                }
            }
        }
    }
}

/// T(G) with an optimal cover.
///
/// Each connected component is solved on its own by iterative deepening
/// from [`lower_bound`]; T(G) is the maximum over components and the covers
/// are merged tessellation by tessellation. When the budget runs out the
/// error is [`Error::Undecided`] with the best bracket known.
pub fn solve_exact(g: &Graph, budget: &mut Budget) -> Result<SolveResult> {
    let start = budget.used();
    let mut value = 0;
    let mut lower_used = 0;
    let mut merged: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut bracket: Option<(usize, usize)> = None;
    let mut upper_all = 0;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = induced_subgraph(g, &comp)?;
        match solve_connected(&sub, budget) {
            Ok(out) => {
                value = value.max(out.value);
                lower_used = lower_used.max(out.lower);
                upper_all = upper_all.max(out.value);
                for (k, t) in out.cover.tessellations.iter().enumerate() {
                    if merged.len() <= k {
                        merged.resize(k + 1, Vec::new());
                    }
                    merged[k].extend(
                        t.cliques()
                            .iter()
                            .map(|c| c.iter().map(|&v| comp[v]).collect::<Vec<_>>()),
                    );
                }
            }
            Err((lo, hi)) => {
                let (l, h) = bracket.unwrap_or((0, 0));
                bracket = Some((l.max(lo), h.max(hi)));
                upper_all = upper_all.max(hi);
            }
        }
    }
    if let Some((lo, hi)) = bracket {
        return Err(Error::Undecided {
            lower: lo.max(value),
            upper: hi.max(upper_all),
        });
    }
    let cover = TessellationCover::new(merged.into_iter().map(Tessellation::new).collect());
    if cover.validate(g).is_err() || cover.size() != value {
        return Err(Error::Internal("solver produced an invalid cover".into()));
    }
    Ok(SolveResult {
        value,
        cover,
        lower_bound_used: lower_used,
        nodes_explored: budget.used() - start,
    })
}
