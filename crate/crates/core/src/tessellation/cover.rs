use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

/// A set of pairwise vertex-disjoint cliques of a host graph.
///
/// Cliques are kept sorted, and the list is ordered by minimum vertex, so two
/// tessellations with the same cliques compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tessellation {
    cliques: Vec<Vec<usize>>,
}

impl Tessellation {
    pub fn new(cliques: Vec<Vec<usize>>) -> Self {
        let mut cliques: Vec<Vec<usize>> = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cliques.sort();
        Tessellation { cliques }
    }

    /// Like [`Tessellation::new`] but drops cliques with fewer than two
    /// vertices, which cover no edge.
    pub fn without_singletons(cliques: Vec<Vec<usize>>) -> Self {
        Tessellation::new(cliques.into_iter().filter(|c| c.len() >= 2).collect())
    }

    pub fn cliques(&self) -> &[Vec<usize>] {
        &self.cliques
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Checks the tessellation against `g` without reference to coverage.
    pub fn validate(&self, g: &Graph, index: usize) -> Result<(), CoverViolation> {
        let mut seen = vec![false; g.n()];
        for (ci, c) in self.cliques.iter().enumerate() {
            if c.len() < 2 {
                return Err(CoverViolation::CliqueTooSmall {
                    tessellation: index,
                    clique: ci,
                });
            }
            for (i, &u) in c.iter().enumerate() {
                if u >= g.n() {
                    return Err(CoverViolation::VertexOutOfRange {
                        tessellation: index,
                        vertex: u,
                    });
                }
                if seen[u] {
                    return Err(CoverViolation::NotDisjoint {
                        tessellation: index,
                        vertex: u,
                    });
                }
                seen[u] = true;
                if let Some(&v) = c[i + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                    return Err(CoverViolation::NotClique {
                        tessellation: index,
                        clique: ci,
                        u,
                        v,
                    });
                }
            }
        }
        Ok(())
    }

    /// Edges inside the cliques, sorted; fails if the tessellation is invalid
    /// on `g`.
    pub fn covered_edges(&self, g: &Graph) -> Result<Vec<(usize, usize)>, CoverViolation> {
        self.validate(g, 0)?;
        Ok(self.edges_unchecked())
    }

    pub(crate) fn edges_unchecked(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for c in &self.cliques {
            for (i, &u) in c.iter().enumerate() {
                for &v in &c[i + 1..] {
                    out.push((u, v));
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// An ordered list of tessellations meant to cover every edge of a host.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TessellationCover {
    pub tessellations: Vec<Tessellation>,
}

impl TessellationCover {
    pub fn new(tessellations: Vec<Tessellation>) -> Self {
        TessellationCover { tessellations }
    }

    /// Number of distinct non-empty tessellations. Repeated or empty
    /// tessellations contribute nothing to a cover and are not counted.
    pub fn size(&self) -> usize {
        self.tessellations
            .iter()
            .filter(|t| !t.is_empty())
            .collect::<BTreeSet<_>>()
            .len()
    }

    pub fn validate(&self, g: &Graph) -> Result<(), CoverViolation> {
        validate_cover(g, self)
    }

    /// Drops empty and repeated tessellations, keeping first occurrences.
    pub fn normalized(&self) -> Self {
        let mut seen = BTreeSet::new();
        TessellationCover {
            tessellations: self
                .tessellations
                .iter()
                .filter(|t| !t.is_empty() && seen.insert((*t).clone()))
                .cloned()
                .collect(),
        }
    }
}

/// The first problem found when checking a cover, with its location.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum CoverViolation {
    VertexOutOfRange { tessellation: usize, vertex: usize },
    CliqueTooSmall { tessellation: usize, clique: usize },
    NotDisjoint { tessellation: usize, vertex: usize },
    NotClique { tessellation: usize, clique: usize, u: usize, v: usize },
    EdgeUncovered { u: usize, v: usize },
}

impl fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoverViolation::VertexOutOfRange { tessellation, vertex } => {
                write!(f, "vertex out of range: {vertex} in tessellation {tessellation}")
            }
            CoverViolation::CliqueTooSmall { tessellation, clique } => write!(
                f,
                "clique too small: clique {clique} of tessellation {tessellation} has fewer than 2 vertices"
            ),
            CoverViolation::NotDisjoint { tessellation, vertex } => write!(
                f,
                "not disjoint: vertex {vertex} lies in two cliques of tessellation {tessellation}"
            ),
            CoverViolation::NotClique { tessellation, clique, u, v } => write!(
                f,
                "not a clique: clique {clique} of tessellation {tessellation} contains non-adjacent {u} and {v}"
            ),
            CoverViolation::EdgeUncovered { u, v } => write!(f, "edge uncovered: {u}-{v}"),
        }
    }
}

impl std::error::Error for CoverViolation {}

/// Checks disjointness, clique-ness and clique size of every tessellation,
/// then that every edge of `g` is covered.
pub fn validate_cover(g: &Graph, cover: &TessellationCover) -> Result<(), CoverViolation> {
    let n = g.n();
    let mut covered = vec![false; n * n];
    for (i, t) in cover.tessellations.iter().enumerate() {
        t.validate(g, i)?;
        for (u, v) in t.edges_unchecked() {
            covered[u * n + v] = true;
        }
    }
    match g.edges().into_iter().find(|&(u, v)| !covered[u * n + v]) {
        Some((u, v)) => Err(CoverViolation::EdgeUncovered { u, v }),
        None => Ok(()),
    }
}
