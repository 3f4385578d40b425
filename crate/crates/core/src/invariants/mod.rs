//! Exact classical invariants with witnesses: α, ω, χ, θ, χ′, μ, Δ and the
//! star number is(G).
//!
//! Every invariant is exact. Searches draw on a [`Budget`] and fail with
//! [`Error::BudgetExceeded`](crate::Error::BudgetExceeded) rather than
//! return an approximation.

mod cliques;
mod coloring;
mod independent;
mod matching;
mod star;

pub use cliques::{max_clique, maximal_cliques};
pub use coloring::{
    chromatic_index, chromatic_number, clique_cover_number, CliquePartition, Coloring,
    EdgeColoring,
};
pub use independent::max_independent_set;
pub use matching::max_matching;
pub use star::{local_chromatic_bound, star_number, LocalBound, Star};

use once_cell::sync::OnceCell;

use crate::budget::{Budget, DEFAULT_NODE_LIMIT};
use crate::error::Result;
use crate::graph::Graph;

/// Lazily computed, cached invariants of one graph.
///
/// Each quantity is computed on first request with its own node budget and
/// cached; the cache is safe to share between threads.
#[derive(Debug)]
pub struct InvariantReport<'g> {
    graph: &'g Graph,
    node_limit: u64,
    alpha: OnceCell<Vec<usize>>,
    omega: OnceCell<Vec<usize>>,
    chi: OnceCell<Coloring>,
    chi_prime: OnceCell<EdgeColoring>,
    theta: OnceCell<CliquePartition>,
    mu: OnceCell<Vec<(usize, usize)>>,
    star: OnceCell<Star>,
}

impl<'g> InvariantReport<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        Self::with_node_limit(graph, DEFAULT_NODE_LIMIT)
    }

    pub fn with_node_limit(graph: &'g Graph, node_limit: u64) -> Self {
        InvariantReport {
            graph,
            node_limit,
            alpha: OnceCell::new(),
            omega: OnceCell::new(),
            chi: OnceCell::new(),
            chi_prime: OnceCell::new(),
            theta: OnceCell::new(),
            mu: OnceCell::new(),
            star: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    fn budget(&self) -> Budget {
        Budget::new(self.node_limit)
    }

    /// Maximum independent set.
    pub fn alpha(&self) -> Result<&[usize]> {
        self.alpha
            .get_or_try_init(|| max_independent_set(self.graph, &mut self.budget()))
            .map(Vec::as_slice)
    }

    /// Maximum clique.
    pub fn omega(&self) -> Result<&[usize]> {
        self.omega
            .get_or_try_init(|| max_clique(self.graph, &mut self.budget()))
            .map(Vec::as_slice)
    }

    pub fn chi(&self) -> Result<&Coloring> {
        self.chi
            .get_or_try_init(|| chromatic_number(self.graph, &mut self.budget()))
    }

    pub fn chi_prime(&self) -> Result<&EdgeColoring> {
        self.chi_prime
            .get_or_try_init(|| chromatic_index(self.graph, &mut self.budget()))
    }

    pub fn theta(&self) -> Result<&CliquePartition> {
        self.theta
            .get_or_try_init(|| clique_cover_number(self.graph, &mut self.budget()))
    }

    /// Maximum matching.
    pub fn mu(&self) -> &[(usize, usize)] {
        self.mu.get_or_init(|| max_matching(self.graph))
    }

    pub fn delta(&self) -> usize {
        self.graph.max_degree()
    }

    pub fn star(&self) -> Result<&Star> {
        self.star
            .get_or_try_init(|| star_number(self.graph, &mut self.budget()))
    }
}
