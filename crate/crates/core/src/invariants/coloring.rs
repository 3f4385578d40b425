//! Exact vertex colouring, clique covers and edge colouring.
//!
//! `chromatic_number` brackets χ between a maximum clique and a DSATUR
//! colouring, then runs a DSATUR-ordered backtracking k-colourability test
//! for increasing k with the clique pre-coloured.

use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::ops::{complement, line_graph};

use super::cliques::max_clique;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub k: usize,
    /// colour of each vertex, in `0..k`
    pub colors: Vec<usize>,
}

impl Coloring {
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.n()
            && self.colors.iter().all(|&c| c < self.k)
            && g.edges()
                .into_iter()
                .all(|(u, v)| self.colors[u] != self.colors[v])
    }

    /// Colour classes as sorted vertex lists, ordered by colour.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.k];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Renumbers colours by first appearance so the output is canonical.
    fn normalized(mut self) -> Self {
        let mut map = vec![usize::MAX; self.k];
        let mut next = 0;
        for c in &mut self.colors {
            if map[*c] == usize::MAX {
                map[*c] = next;
                next += 1;
            }
            *c = map[*c];
        }
        self.k = next;
        self
    }
}

/// A minimum partition of the vertices into cliques.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliquePartition {
    pub classes: Vec<Vec<usize>>,
}

impl CliquePartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub k: usize,
    /// `edges[i]` receives colour `colors[i]`
    pub edges: Vec<(usize, usize)>,
    pub colors: Vec<usize>,
}

impl EdgeColoring {
    /// The matchings, ordered by colour.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut out = vec![Vec::new(); self.k];
        for (&e, &c) in self.edges.iter().zip(&self.colors) {
            out[c].push(e);
        }
        out
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = vec![vec![false; self.k]; g.n()];
        self.edges.len() == g.edge_count()
            && self.edges.iter().zip(&self.colors).all(|(&(u, v), &c)| {
                let ok = g.has_edge(u, v) && c < self.k && !seen[u][c] && !seen[v][c];
                if ok {
                    seen[u][c] = true;
                    seen[v][c] = true;
                }
                ok
            })
    }
}

/// χ(G) with a witness colouring.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<Coloring> {
    let n = g.n();
    if n == 0 {
        return Ok(Coloring {
            k: 0,
            colors: Vec::new(),
        });
    }
    let clique = max_clique(g, budget)?;
    let upper = dsatur_greedy(g, &clique);
    if upper.k == clique.len() {
        return Ok(upper.normalized());
    }
    for k in clique.len()..upper.k {
        if let Some(c) = k_coloring(g, k, &clique, budget)? {
            return Ok(c.normalized());
        }
    }
    Ok(upper.normalized())
}

/// θ(G) = χ(G^c) with the colour classes of the complement as cliques.
pub fn clique_cover_number(g: &Graph, budget: &mut Budget) -> Result<CliquePartition> {
    let coloring = chromatic_number(&complement(g), budget)?;
    let classes = coloring.classes();
    debug_assert!(classes.iter().all(|c| g.is_clique(c)));
    Ok(CliquePartition { classes })
}

/// χ′(G) = χ(L(G)), with colours mapped back to the edges.
pub fn chromatic_index(g: &Graph, budget: &mut Budget) -> Result<EdgeColoring> {
    let coloring = chromatic_number(&line_graph(g), budget)?;
    Ok(EdgeColoring {
        k: coloring.k,
        edges: g.edges(),
        colors: coloring.colors,
    })
}

struct Dsatur<'a> {
    g: &'a Graph,
    colors: Vec<Option<usize>>,
    /// `nbr_count[v][c]`: neighbours of v currently coloured c
    nbr_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
    uncolored_degree: Vec<usize>,
}

impl<'a> Dsatur<'a> {
    fn new(g: &'a Graph, k: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            colors: vec![None; n],
            nbr_count: vec![vec![0; k]; n],
            saturation: vec![0; n],
            uncolored_degree: (0..n).map(|v| g.degree(v)).collect(),
        }
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for w in self.g.neighbors(v).ones() {
            let cnt = &mut self.nbr_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
            self.uncolored_degree[w] -= 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colors[v].take().expect("coloured");
        for w in self.g.neighbors(v).ones() {
            let cnt = &mut self.nbr_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
            self.uncolored_degree[w] += 1;
        }
    }

    /// Uncoloured vertex of maximum saturation, then degree, then lowest id.
    fn select(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| {
                (
                    self.saturation[v],
                    self.uncolored_degree[v],
                    std::cmp::Reverse(v),
                )
            })
    }
}

fn dsatur_greedy(g: &Graph, clique: &[usize]) -> Coloring {
    let n = g.n();
    let mut d = Dsatur::new(g, n.max(1));
    for (c, &v) in clique.iter().enumerate() {
        d.assign(v, c);
    }
    let mut k = clique.len();
    while let Some(v) = d.select() {
        let c = (0..n).find(|&c| d.nbr_count[v][c] == 0).expect("n colours suffice");
        k = k.max(c + 1);
        d.assign(v, c);
    }
    Coloring {
        k,
        colors: d.colors.into_iter().map(|c| c.expect("all coloured")).collect(),
    }
}

/// A proper k-colouring extending the clique colouring, if one exists.
fn k_coloring(
    g: &Graph,
    k: usize,
    clique: &[usize],
    budget: &mut Budget,
) -> Result<Option<Coloring>> {
    let mut d = Dsatur::new(g, k);
    for (c, &v) in clique.iter().enumerate() {
        d.assign(v, c);
    }
    let used = clique.len();
    if backtrack(&mut d, k, used, budget)? {
        Ok(Some(Coloring {
            k,
            colors: d.colors.into_iter().map(|c| c.expect("all coloured")).collect(),
        }))
    } else {
        Ok(None)
    }
}

fn backtrack(d: &mut Dsatur<'_>, k: usize, used: usize, budget: &mut Budget) -> Result<bool> {
    budget.tick()?;
    let Some(v) = d.select() else {
        return Ok(true);
    };
    if d.saturation[v] >= k {
        return Ok(false);
    }
    // colours beyond `used` are interchangeable: try only the first fresh one
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if d.nbr_count[v][c] != 0 {
            continue;
        }
        d.assign(v, c);
        if backtrack(d, k, used.max(c + 1), budget)? {
            return Ok(true);
        }
        d.unassign(v);
    }
    Ok(false)
}
