//! Tessellations, covers, bounds on T(G) and the exact solver.

mod bounds;
mod cover;
mod oracle;
mod search;

pub use bounds::{cover_from_clique_graph, cover_from_edge_coloring, lower_bound};
pub use cover::{validate_cover, CoverViolation, Tessellation, TessellationCover};
pub use oracle::{brute_force_oracle, ORACLE_MAX_EDGES, ORACLE_MAX_N};
pub use search::{feasible, feasible_seeded, greedy_cover, solve_exact, SolveResult};
