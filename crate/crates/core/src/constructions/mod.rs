//! Generators for the graph families with known cover numbers, the
//! explicit covers that certify them, and replayable recipes.

mod covers;
mod generators;

pub use covers::{cons2_cover, cons3_cover, join_partition_cover};
pub use generators::{
    cons1, cons2, cons3, cons3_formula, cons4, corollary1_graph, corollary1_prediction,
    gap_family, mycielski_gap, Cons2Output, Cons2Variant, Cons3Output, Cons4Output,
    GapFamilyOutput,
};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ops;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    Cons1,
    Cons2,
    Cons3,
    Cons4,
    Corollary1,
    MycielskiGap,
    GapFamily,
    Mycielski,
    Universal,
    Join,
    Union,
    Complement,
    LineGraph,
    CliqueGraph,
    Subdivide,
}

impl ConstructionKind {
    pub const ALL: [ConstructionKind; 15] = [
        ConstructionKind::Cons1,
        ConstructionKind::Cons2,
        ConstructionKind::Cons3,
        ConstructionKind::Cons4,
        ConstructionKind::Corollary1,
        ConstructionKind::MycielskiGap,
        ConstructionKind::GapFamily,
        ConstructionKind::Mycielski,
        ConstructionKind::Universal,
        ConstructionKind::Join,
        ConstructionKind::Union,
        ConstructionKind::Complement,
        ConstructionKind::LineGraph,
        ConstructionKind::CliqueGraph,
        ConstructionKind::Subdivide,
    ];

    /// Number of source graphs consumed.
    pub fn arity(self) -> usize {
        use ConstructionKind::*;
        match self {
            MycielskiGap | Mycielski => 0,
            Cons4 | Join | Union => 2,
            _ => 1,
        }
    }

    /// Integer parameters read by [`ConstructionRecipe::build`].
    pub fn params(self) -> &'static [&'static str] {
        use ConstructionKind::*;
        match self {
            Cons1 | Cons4 => &["i"],
            Cons2 => &["i", "variant"],
            MycielskiGap | Mycielski => &["j"],
            GapFamily => &["x"],
            Subdivide => &["k"],
            _ => &[],
        }
    }

    pub fn name(self) -> &'static str {
        use ConstructionKind::*;
        match self {
            Cons1 => "cons1",
            Cons2 => "cons2",
            Cons3 => "cons3",
            Cons4 => "cons4",
            Corollary1 => "corollary1",
            MycielskiGap => "mycielski-gap",
            GapFamily => "gap-family",
            Mycielski => "mycielski",
            Universal => "universal",
            Join => "join",
            Union => "union",
            Complement => "complement",
            LineGraph => "line-graph",
            CliqueGraph => "clique-graph",
            Subdivide => "subdivide",
        }
    }
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A source graph stored inline so that a recipe replays on its own.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceGraph {
    pub name: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl SourceGraph {
    pub fn new(name: impl Into<String>, g: &Graph) -> Self {
        SourceGraph {
            name: name.into(),
            n: g.n(),
            edges: g.edges(),
        }
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::from_edges(self.n, &self.edges)
    }
}

/// How an instance was built: replaying [`build`](Self::build) gives the
/// same graph with the same ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionRecipe {
    pub kind: ConstructionKind,
    /// signed so that negative input is reported rather than wrapped
    pub params: BTreeMap<String, i64>,
    pub sources: Vec<SourceGraph>,
}

impl ConstructionRecipe {
    pub fn new(kind: ConstructionKind) -> Self {
        ConstructionRecipe {
            kind,
            params: BTreeMap::new(),
            sources: Vec::new(),
        }
    }

    pub fn param(mut self, key: &str, value: i64) -> Self {
        self.params.insert(key.to_string(), value);
        self
    }

    pub fn source(mut self, name: impl Into<String>, g: &Graph) -> Self {
        self.sources.push(SourceGraph::new(name, g));
        self
    }

    fn get(&self, key: &str) -> Result<usize> {
        let v = *self
            .params
            .get(key)
            .ok_or_else(|| Error::InvalidParameter(format!("{}: missing parameter {key}", self.kind)))?;
        usize::try_from(v).map_err(|_| {
            Error::InvalidParameter(format!("{}: parameter {key} must be non-negative, got {v}", self.kind))
        })
    }

    fn check_shape(&self) -> Result<Vec<Graph>> {
        if self.sources.len() != self.kind.arity() {
            return Err(Error::InvalidParameter(format!(
                "{} takes {} source graph(s), got {}",
                self.kind,
                self.kind.arity(),
                self.sources.len()
            )));
        }
        for key in self.params.keys() {
            if !self.kind.params().contains(&key.as_str()) {
                return Err(Error::InvalidParameter(format!("{}: unknown parameter {key}", self.kind)));
            }
        }
        self.sources.iter().map(SourceGraph::graph).collect()
    }

    pub fn build(&self) -> Result<Graph> {
        use ConstructionKind::*;
        let src = self.check_shape()?;
        Ok(match self.kind {
            Cons1 => cons1(&src[0], self.get("i")?),
            Cons2 => {
                let variant = match self.get("variant")? {
                    1 => Cons2Variant::I,
                    2 => Cons2Variant::II,
                    v => {
                        return Err(Error::InvalidParameter(format!(
                            "cons2: variant must be 1 or 2, got {v}"
                        )))
                    }
                };
                cons2(&src[0], self.get("i")?, variant)?.graph
            }
            Cons3 => cons3(&src[0])?.graph,
            Cons4 => cons4(&src[0], &src[1], self.get("i")?)?.graph,
            Corollary1 => corollary1_graph(&src[0]),
            MycielskiGap => mycielski_gap(self.get("j")?)?,
            GapFamily => gap_family(&src[0], self.get("x")?, &mut Budget::default())?.cons3.graph,
            Mycielski => ops::mycielski(self.get("j")?)?,
            Universal => ops::add_universal(&src[0]),
            Join => ops::join(&src[0], &src[1]),
            Union => ops::disjoint_union(&src[0], &src[1]),
            Complement => ops::complement(&src[0]),
            LineGraph => ops::line_graph(&src[0]),
            CliqueGraph => ops::clique_graph(&src[0]),
            Subdivide => ops::subdivide(&src[0], self.get("k")?),
        })
    }
}
