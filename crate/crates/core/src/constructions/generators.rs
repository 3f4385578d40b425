//! Instance generators for the constructions with known cover numbers.

use serde::{Deserialize, Serialize};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::invariants::{chromatic_number, max_independent_set, max_matching};
use crate::ops::{add_pendants, add_universal, complement, disjoint_union, join, line_graph, mycielski, subdivide};

/// `i` isolated vertices added to `g`, then a universal vertex (id
/// `n + i`).
pub fn cons1(g: &Graph, i: usize) -> Graph {
    let mut b = GraphBuilder::from_graph(g);
    for k in 0..i {
        b.add_vertex(Some(format!("added {k}")));
    }
    let mut out = add_universal(&b.build());
    out.set_label(out.n() - 1, "u");
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Cons2Variant {
    /// second component built on the complement of `M_3`
    I,
    /// second component built on the complement of `M_4`
    II,
}

impl Cons2Variant {
    pub(crate) fn mycielski_order(self) -> usize {
        match self {
            Cons2Variant::I => 3,
            Cons2Variant::II => 4,
        }
    }
}

/// Output of [`cons2`].
///
/// Vertex `v_k` of copy `j` (both 0-based) has id `j·n + k`; `u = i·n`.
/// The second component follows, laid out as [`cons1`] on `M^c` with
/// `n − 3` added vertices, ending with `u′`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cons2Output {
    #[serde(skip)]
    pub graph: Graph,
    pub h1_vertices: Vec<usize>,
    pub h2_vertices: Vec<usize>,
    pub u: usize,
    pub u_prime: usize,
    pub variant: Cons2Variant,
    pub copies: usize,
}

impl Cons2Output {
    /// Id of copy `j` of vertex `k`.
    pub fn copy_vertex(&self, j: usize, k: usize) -> usize {
        let n = self.u / self.copies;
        j * n + k
    }
}

pub(crate) fn check_cons2_source(g: &Graph) -> Result<()> {
    if g.n() < 3 {
        return Err(Error::Precondition(format!(
            "the source graph needs at least 3 vertices, got {}",
            g.n()
        )));
    }
    if let Some(&v) = g.universal_vertices().first() {
        return Err(Error::Precondition(format!(
            "the source graph has a universal vertex ({v})"
        )));
    }
    Ok(())
}

/// `i` copies of `g` with every same-vertex class made a clique and a
/// vertex `u` adjacent to all copies, beside the `(n−3, M^c)` graph of the
/// chosen variant.
pub fn cons2(g: &Graph, i: usize, variant: Cons2Variant) -> Result<Cons2Output> {
    check_cons2_source(g)?;
    if i == 0 {
        return Err(Error::InvalidParameter("the number of copies must be at least 1".into()));
    }
    let n = g.n();
    let mut b = GraphBuilder::new(0);
    for j in 0..i {
        for k in 0..n {
            b.add_vertex(Some(format!("v{k}^{j}")));
        }
    }
    let u = b.add_vertex(Some("u".into()));
    for j in 0..i {
        for (a, c) in g.edges() {
            b.connect(j * n + a, j * n + c);
        }
        for k in 0..n {
            b.connect(j * n + k, u);
            for j2 in j + 1..i {
                b.connect(j * n + k, j2 * n + k);
            }
        }
    }
    let h1 = b.build();
    let h2 = cons1(&complement(&mycielski(variant.mycielski_order())?), n - 3);
    let off = h1.n();
    let mut graph = disjoint_union(&h1, &h2);
    let u_prime = off + h2.n() - 1;
    graph.set_label(u_prime, "u'");
    Ok(Cons2Output {
        h1_vertices: (0..off).collect(),
        h2_vertices: (off..graph.n()).collect(),
        graph,
        u,
        u_prime,
        variant,
        copies: i,
    })
}

/// Output of [`cons3`]: `L(S_2(g)) ∨ {u}`.
///
/// Vertex `e` of the line graph is the `e`-th edge of `s2.edges()`; the
/// universal vertex is last.
#[derive(Debug, Clone, PartialEq)]
pub struct Cons3Output {
    pub graph: Graph,
    pub s2: Graph,
    pub s2_edges: Vec<(usize, usize)>,
    pub u: usize,
}

pub fn cons3(g: &Graph) -> Result<Cons3Output> {
    if g.edge_count() == 0 {
        return Err(Error::Precondition("the source graph has no edges".into()));
    }
    let s2 = subdivide(g, 2);
    let l = line_graph(&s2);
    let u = l.n();
    let graph = add_universal(&l);
    Ok(Cons3Output {
        graph,
        s2_edges: s2.edges(),
        s2,
        u,
    })
}

pub(crate) fn require_four_edges(g: &Graph) -> Result<()> {
    if g.edge_count() < 4 {
        return Err(Error::Precondition(format!(
            "at least 4 edges are required, got {}",
            g.edge_count()
        )));
    }
    Ok(())
}

/// `|V| + |E| − α` for `g` with at least 4 edges.
pub fn cons3_formula(g: &Graph, budget: &mut Budget) -> Result<usize> {
    require_four_edges(g)?;
    let alpha = max_independent_set(g, budget)?.len();
    Ok(g.n() + g.edge_count() - alpha)
}

/// `g` beside a universal vertex carrying `2Δ(g)+1` pendants.
pub fn corollary1_graph(g: &Graph) -> Graph {
    cons1(g, 2 * g.max_degree() + 1)
}

/// `χ(g^c) + 2Δ(g) + 1`, the cover number of [`corollary1_graph`].
pub fn corollary1_prediction(g: &Graph, budget: &mut Budget) -> Result<usize> {
    Ok(chromatic_number(&complement(g), budget)?.k + 2 * g.max_degree() + 1)
}

/// `M_j^c ∨ {u}`: star number 2, cover number at least `j`.
pub fn mycielski_gap(j: usize) -> Result<Graph> {
    if j < 3 {
        return Err(Error::InvalidParameter(format!("j must be at least 3, got {j}")));
    }
    Ok(add_universal(&complement(&mycielski(j)?)))
}

/// Output of [`gap_family`].
#[derive(Debug, Clone, PartialEq)]
pub struct GapFamilyOutput {
    pub cons3: Cons3Output,
    /// `g` joined with `K_x`
    pub augmented: Graph,
    /// `|V| + |E| − α` of the augmented graph
    pub predicted_t: usize,
    /// `|E| + μ` of the augmented graph
    pub predicted_is: usize,
}

impl GapFamilyOutput {
    pub fn gap(&self) -> usize {
        self.predicted_t - self.predicted_is
    }
}

/// [`cons3`] applied to `g` with `x` universal vertices added.
pub fn gap_family(g: &Graph, x: usize, budget: &mut Budget) -> Result<GapFamilyOutput> {
    let augmented = join(g, &Graph::complete(x));
    require_four_edges(&augmented)?;
    let predicted_t = cons3_formula(&augmented, budget)?;
    let predicted_is = augmented.edge_count() + max_matching(&augmented).len();
    Ok(GapFamilyOutput {
        cons3: cons3(&augmented)?,
        augmented,
        predicted_t,
        predicted_is,
    })
}

/// Output of [`cons4`].
///
/// Ids: the [`cons2`] graph first, then the pendants of `u`, then those of
/// `u′`, then the [`cons3`] component.
#[derive(Debug, Clone, PartialEq)]
pub struct Cons4Output {
    pub graph: Graph,
    pub cons2: Cons2Output,
    pub h2: Cons3Output,
    /// is of the [`cons3`] component, from the matching identity
    pub is_h2: usize,
    pub pendants_u: Vec<usize>,
    pub pendants_u_prime: Vec<usize>,
    /// vertices of the [`cons2`] part with its pendants
    pub h1_vertices: Vec<usize>,
    pub h2_vertices: Vec<usize>,
    /// id of the universal vertex of the [`cons3`] component
    pub h2_universal: usize,
}

/// [`cons2`] (variant I) on `g1` with `is(H₂)` pendants at each of `u` and
/// `u′`, beside `H₂ = ` [`cons3`]`(g2 ∨ K_{3|V(g1)|})`.
pub fn cons4(g1: &Graph, g2: &Graph, i: usize) -> Result<Cons4Output> {
    let c2 = cons2(g1, i, Cons2Variant::I)
        .map_err(|e| Error::Precondition(format!("first component: {e}")))?;
    let g2_aug = join(g2, &Graph::complete(3 * g1.n()));
    require_four_edges(&g2_aug).map_err(|e| Error::Precondition(format!("second component: {e}")))?;
    let h2 = cons3(&g2_aug)?;
    let is_h2 = g2_aug.edge_count() + max_matching(&g2_aug).len();

    let base = c2.graph.n();
    let with_u = add_pendants(&c2.graph, c2.u, is_h2)?;
    let h1 = add_pendants(&with_u, c2.u_prime, is_h2)?;
    let pendants_u = (base..base + is_h2).collect();
    let pendants_u_prime = (base + is_h2..base + 2 * is_h2).collect();
    let off = h1.n();
    let graph = disjoint_union(&h1, &h2.graph);
    Ok(Cons4Output {
        h1_vertices: (0..off).collect(),
        h2_vertices: (off..graph.n()).collect(),
        h2_universal: off + h2.u,
        graph,
        cons2: c2,
        h2,
        is_h2,
        pendants_u,
        pendants_u_prime,
    })
}
