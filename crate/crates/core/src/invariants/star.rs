use serde::Serialize;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;
use crate::ops::{complement, induced_subgraph};

use super::coloring::chromatic_number;
use super::independent::max_independent_set;

/// A maximum induced star: `center` with pairwise non-adjacent `leaves`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Star {
    pub center: Option<usize>,
    pub leaves: Vec<usize>,
}

impl Star {
    /// is(G), the number of edges of the star.
    pub fn size(&self) -> usize {
        self.leaves.len()
    }
}

/// is(G) = max over v of α(G[N(v)]); ties go to the lowest centre.
pub fn star_number(g: &Graph, budget: &mut Budget) -> Result<Star> {
    let mut best = Star {
        center: None,
        leaves: Vec::new(),
    };
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).ones().collect();
        if nb.len() <= best.size() {
            continue;
        }
        let local = induced_subgraph(g, &nb)?;
        let leaves: Vec<usize> = max_independent_set(&local, budget)?
            .into_iter()
            .map(|i| nb[i])
            .collect();
        if leaves.len() > best.size() {
            best = Star {
                center: Some(v),
                leaves,
            };
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LocalBound {
    pub value: usize,
    /// vertex attaining the maximum (lowest on ties)
    pub vertex: Option<usize>,
}

/// max over v of χ(G^c[N(v)]), a lower bound on T(G).
pub fn local_chromatic_bound(g: &Graph, budget: &mut Budget) -> Result<LocalBound> {
    let mut best = LocalBound {
        value: 0,
        vertex: None,
    };
    for v in 0..g.n() {
        let nb: Vec<usize> = g.neighbors(v).ones().collect();
        if nb.len() <= best.value {
            continue;
        }
        let chi = chromatic_number(&complement(&induced_subgraph(g, &nb)?), budget)?.k;
        if chi > best.value {
            best = LocalBound {
                value: chi,
                vertex: Some(v),
            };
        }
    }
    Ok(best)
}
