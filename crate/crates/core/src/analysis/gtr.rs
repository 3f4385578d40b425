//! Deciding whether T(G) = is(G).

use serde::Serialize;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{local_chromatic_bound, star_number, Star};
use crate::tessellation::{
    cover_from_clique_graph, cover_from_edge_coloring, greedy_cover, solve_exact,
    TessellationCover,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecidedBy {
    /// lower bound met a constructed cover
    Bracket,
    /// exhaustive search
    Search,
    /// T is still open but its lower bound already exceeds is
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GtrVerdict {
    /// T(G) when known exactly
    pub t_value: Option<usize>,
    pub t_lower: usize,
    pub t_upper: usize,
    pub is_value: usize,
    pub good: bool,
    /// `T − is` when T is known
    pub gap: Option<usize>,
    /// a cover of size `t_upper`
    pub cover: TessellationCover,
    pub star: Star,
    pub decided_by: DecidedBy,
}

pub fn gtr(g: &Graph, budget: &mut Budget) -> Result<GtrVerdict> {
    gtr_with_cover(g, None, budget)
}

/// [`gtr`] with an optional known cover used as an upper bound.
///
/// Cheap bounds come first: when the lower bound meets the smallest
/// available cover no search is run. Otherwise the exact solver decides,
/// and if it runs out of budget the verdict still stands when the bracket
/// alone rules out equality.
pub fn gtr_with_cover(
    g: &Graph,
    hint: Option<&TessellationCover>,
    budget: &mut Budget,
) -> Result<GtrVerdict> {
    let star = star_number(g, budget)?;
    let is = star.size();
    let local = local_chromatic_bound(g, budget).map_or(0, |b| b.value);
    let mut lower = is.max(local);

    let mut best = greedy_cover(g).normalized();
    if let Some(h) = hint {
        h.validate(g)
            .map_err(|v| Error::InvalidParameter(format!("supplied cover is invalid: {v}")))?;
        if h.size() < best.size() {
            best = h.normalized();
        }
    }
    if lower < best.size() {
        for c in [cover_from_edge_coloring(g, budget), cover_from_clique_graph(g, budget)]
            .into_iter()
            .flatten()
        {
            if c.size() < best.size() {
                best = c;
            }
        }
    }
    let verdict = |t_lower: usize, cover: TessellationCover, star: Star, by: DecidedBy| {
        let t_upper = cover.size();
        let t_value = (t_lower == t_upper).then_some(t_upper);
        GtrVerdict {
            t_value,
            t_lower,
            t_upper,
            is_value: is,
            good: t_value == Some(is),
            gap: t_value.map(|t| t - is),
            cover,
            star,
            decided_by: by,
        }
    };
    if lower == best.size() {
        return Ok(verdict(lower, best, star, DecidedBy::Bracket));
    }
    match solve_exact(g, budget) {
        Ok(r) => Ok(verdict(r.value, r.cover, star, DecidedBy::Search)),
        Err(Error::Undecided { lower: l, upper: _ }) => {
            lower = lower.max(l);
            if lower > is {
                Ok(verdict(lower, best, star, DecidedBy::LowerBound))
            } else {
                Err(Error::Undecided {
                    lower,
                    upper: best.size(),
                })
            }
        }
        Err(e) => Err(e),
    }
}
