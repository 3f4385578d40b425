//! Lower and upper bounds on T(G).

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::invariants::{
    chromatic_index, chromatic_number, local_chromatic_bound, maximal_cliques, star_number,
};
use crate::ops::clique_graph;

use super::cover::{Tessellation, TessellationCover};

/// max(is(G), max_v χ(G^c[N(v)])); 0 for edgeless graphs.
pub fn lower_bound(g: &Graph, budget: &mut Budget) -> Result<usize> {
    let star = star_number(g, budget)?.size();
    let local = local_chromatic_bound(g, budget)?.value;
    Ok(star.max(local))
}

/// One tessellation of 2-cliques per colour class of an optimal edge
/// colouring; size χ′(G).
pub fn cover_from_edge_coloring(g: &Graph, budget: &mut Budget) -> Result<TessellationCover> {
    let ec = chromatic_index(g, budget)?;
    let tessellations = ec
        .classes()
        .into_iter()
        .map(|m| Tessellation::new(m.into_iter().map(|(u, v)| vec![u, v]).collect()))
        .collect();
    Ok(TessellationCover::new(tessellations))
}

/// Colours the clique graph K(G); each colour class is a set of pairwise
/// disjoint maximal cliques and becomes one tessellation. Size χ(K(G)),
/// ignoring classes made only of isolated vertices.
pub fn cover_from_clique_graph(g: &Graph, budget: &mut Budget) -> Result<TessellationCover> {
    let cliques = maximal_cliques(g);
    let coloring = chromatic_number(&clique_graph(g), budget)?;
    let tessellations = coloring
        .classes()
        .into_iter()
        .map(|class| {
            Tessellation::without_singletons(class.into_iter().map(|i| cliques[i].clone()).collect())
        })
        .filter(|t| !t.is_empty())
        .collect();
    Ok(TessellationCover::new(tessellations))
}
