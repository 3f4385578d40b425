//! Perfect tessellability: every induced subgraph is good tessellable.

use std::collections::HashMap;

use serde::Serialize;

use crate::budget::Budget;
use crate::canon::{canonical_form, CanonicalForm, CANON_MAX_N};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops::induced_subgraph;
use crate::patterns::{contains_induced, Pattern};

use super::gtr::gtr;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PerfectReport {
    pub perfect: bool,
    /// vertices of a smallest induced subgraph that is not good tessellable
    pub witness: Option<Vec<usize>>,
}

/// Checks every induced subgraph, smallest first, once per isomorphism
/// class.
pub fn perfect_tessellable(g: &Graph, node_limit: u64) -> Result<PerfectReport> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::CapExceeded {
            what: "vertices for the perfect-tessellable check",
            value: n,
            cap: CANON_MAX_N,
        });
    }
    let mut subsets: Vec<u32> = (1u32..1 << n).collect();
    subsets.sort_by_key(|&m| (m.count_ones(), m));
    let mut good: HashMap<CanonicalForm, bool> = HashMap::new();
    for mask in subsets {
        let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = induced_subgraph(g, &verts)?;
        if h.edge_count() == 0 {
            continue;
        }
        let key = canonical_form(&h)?;
        let ok = match good.get(&key) {
            Some(&ok) => ok,
            None => {
                let ok = gtr(&h, &mut Budget::new(node_limit))?.good;
                good.insert(key, ok);
                ok
            }
        };
        if !ok {
            return Ok(PerfectReport {
                perfect: false,
                witness: Some(verts),
            });
        }
    }
    Ok(PerfectReport {
        perfect: true,
        witness: None,
    })
}

/// Which cycles count as forbidden "odd cycles".
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OddCycleRule {
    /// induced odd cycles of length at least 5
    HolesOnly,
    /// also the triangle
    WithTriangle,
}

impl OddCycleRule {
    pub const BOTH: [OddCycleRule; 2] = [OddCycleRule::HolesOnly, OddCycleRule::WithTriangle];

    fn patterns(self) -> &'static [Pattern] {
        match self {
            OddCycleRule::HolesOnly => &[Pattern::Gem, Pattern::W4, Pattern::OddHole],
            OddCycleRule::WithTriangle => {
                &[Pattern::Gem, Pattern::W4, Pattern::OddHole, Pattern::Triangle]
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ForbiddenCheck {
    pub free: bool,
    pub pattern: Option<Pattern>,
    pub witness: Option<Vec<usize>>,
}

/// Whether `g` avoids gem, W4 and odd cycles as induced subgraphs.
pub fn forbidden_free(g: &Graph, rule: OddCycleRule) -> ForbiddenCheck {
    for &p in rule.patterns() {
        if let Some(w) = contains_induced(g, p) {
            return ForbiddenCheck {
                free: false,
                pattern: Some(p),
                witness: Some(w),
            };
        }
    }
    ForbiddenCheck {
        free: true,
        pattern: None,
        witness: None,
    }
}
