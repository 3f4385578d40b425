use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ops::complement;

use super::independent::max_independent_set;

/// A maximum clique of `g`, sorted; computed as a maximum independent set
/// of the complement.
pub fn max_clique(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>> {
    max_independent_set(&complement(g), budget)
}

/// All maximal cliques of `g` (Bron–Kerbosch with pivoting). Each clique is
/// sorted and the list is in lexicographic order. Isolated vertices form
/// singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    bron_kerbosch(g, &mut r, g.vertex_set(), VertexSet::with_capacity(g.n()), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_clear() {
        if x.is_clear() && !r.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    // pivot maximising |P ∩ N(u)| over P ∪ X
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| g.neighbors(u).intersection_count(&p))
        .expect("P non-empty");
    let mut todo = p.clone();
    todo.difference_with(g.neighbors(pivot));
    for v in todo.ones() {
        let mut np = p.clone();
        np.intersect_with(g.neighbors(v));
        let mut nx = x.clone();
        nx.intersect_with(g.neighbors(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}
