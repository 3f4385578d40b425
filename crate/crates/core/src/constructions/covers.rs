//! Explicit optimal covers for the constructed families.

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{chromatic_index, clique_cover_number, max_independent_set};
use crate::ops::{add_universal, complement, join, line_graph, mycielski};
use crate::tessellation::{solve_exact, Tessellation, TessellationCover};

use super::generators::{check_cons2_source, cons3, require_four_edges};

/// Tessellations under construction; cliques may temporarily be singletons.
struct PartialCover {
    cliques: Vec<Vec<Vec<usize>>>,
    /// `slot[t][x]`: index of the clique of tessellation `t` holding `x`
    slot: Vec<Vec<Option<usize>>>,
}

impl PartialCover {
    fn new(k: usize, n: usize) -> Self {
        PartialCover {
            cliques: vec![Vec::new(); k],
            slot: vec![vec![None; n]; k],
        }
    }

    fn len(&self) -> usize {
        self.cliques.len()
    }

    fn is_free(&self, t: usize, x: usize) -> bool {
        self.slot[t][x].is_none()
    }

    fn add(&mut self, t: usize, clique: Vec<usize>) -> usize {
        let idx = self.cliques[t].len();
        for &x in &clique {
            debug_assert!(self.slot[t][x].is_none());
            self.slot[t][x] = Some(idx);
        }
        self.cliques[t].push(clique);
        idx
    }

    fn extend(&mut self, t: usize, idx: usize, x: usize) {
        debug_assert!(self.slot[t][x].is_none());
        self.slot[t][x] = Some(idx);
        self.cliques[t][idx].push(x);
    }

    fn remove(&mut self, t: usize, x: usize) {
        if let Some(idx) = self.slot[t][x].take() {
            self.cliques[t][idx].retain(|&y| y != x);
        }
    }

    fn covered(&self, x: usize, y: usize) -> bool {
        (0..self.len()).any(|t| matches!((self.slot[t][x], self.slot[t][y]), (Some(a), Some(b)) if a == b))
    }

    fn first_free(&self, x: usize, y: usize) -> Option<usize> {
        (0..self.len()).find(|&t| self.is_free(t, x) && self.is_free(t, y))
    }

    fn finish(self) -> TessellationCover {
        TessellationCover::new(
            self.cliques
                .into_iter()
                .map(Tessellation::without_singletons)
                .collect(),
        )
    }
}

fn check_cover(g: &Graph, cover: &TessellationCover, expected: usize, what: &str) -> Result<()> {
    if let Err(v) = cover.validate(g) {
        return Err(Error::Internal(format!("{what}: invalid cover ({v})")));
    }
    if cover.size() != expected {
        return Err(Error::Internal(format!(
            "{what}: cover has {} tessellations, expected {expected}",
            cover.size()
        )));
    }
    Ok(())
}

/// A cover of [`cons2`](super::cons2)`(g, i, I)` with `|V(g)|` tessellations.
///
/// An edge colouring of `g ∨ {x}` with `n` colours leaves each `v_k` one
/// missing colour `m(k)` (the colour of `x v_k`). Every copy reuses the
/// colouring; tessellation `m(k)` also holds the clique of all copies of
/// `v_k` together with `u`. The second component takes three tessellations
/// for `M_3^c ∨ {u′}` and one per pendant.
pub fn cons2_cover(g: &Graph, i: usize, budget: &mut Budget) -> Result<TessellationCover> {
    check_cons2_source(g)?;
    if i == 0 {
        return Err(Error::InvalidParameter("the number of copies must be at least 1".into()));
    }
    let n = g.n();
    let gx = join(g, &Graph::complete(1));
    let coloring = chromatic_index(&gx, budget)?;
    if coloring.k != n {
        return Err(Error::Precondition(format!(
            "no edge colouring of g ∨ {{x}} with {n} colours (chromatic index {})",
            coloring.k
        )));
    }
    let mut missing = vec![0; n];
    let mut tess: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n];
    for (&(a, b), &c) in coloring.edges.iter().zip(&coloring.colors) {
        if b == n {
            missing[a] = c;
        } else {
            for j in 0..i {
                tess[c].push(vec![j * n + a, j * n + b]);
            }
        }
    }
    let u = i * n;
    for k in 0..n {
        let mut clique: Vec<usize> = (0..i).map(|j| j * n + k).collect();
        clique.push(u);
        tess[missing[k]].push(clique);
    }

    let off = u + 1;
    let core = add_universal(&complement(&mycielski(3)?));
    let core_u = core.n() - 1;
    let u_prime = off + core_u + (n - 3);
    let map = |v: usize| if v == core_u { u_prime } else { off + v };
    let core_cover = solve_exact(&core, budget)?.cover;
    for (t, ct) in core_cover.tessellations.iter().enumerate() {
        tess[t].extend(ct.cliques().iter().map(|c| c.iter().map(|&v| map(v)).collect()));
    }
    for p in 0..n - 3 {
        tess[3 + p].push(vec![off + core_u + p, u_prime]);
    }

    let cover = TessellationCover::new(tess.into_iter().map(Tessellation::new).collect());
    let h = super::cons2(g, i, super::Cons2Variant::I)?.graph;
    check_cover(&h, &cover, n, "cons2 cover")?;
    Ok(cover)
}

/// A cover of [`cons3`]`(g)` with `|V| + |E| − α` tessellations.
///
/// The vertices of `L = L(S_2(g))` are the edges of `S = S_2(g)`. A
/// maximum independent set of `S` leaves a minimum vertex cover of centres;
/// the edges at each centre form one clique of `L` and get their own
/// tessellation. The stars of original vertices of degree at least 3 are
/// then completed, either by enlarging the centre's own clique or by
/// grouping the missing pairs by their first free tessellation; the
/// remaining 2-cliques are covered first-fit, and `u` joins each
/// tessellation's centre clique.
pub fn cons3_cover(g: &Graph, budget: &mut Budget) -> Result<TessellationCover> {
    require_four_edges(g)?;
    let c3 = cons3(g)?;
    let s = &c3.s2;
    let edges = &c3.s2_edges;
    let l = line_graph(s);

    let mis = max_independent_set(s, budget)?;
    let alpha = max_independent_set(g, budget)?.len();
    if mis.len() != alpha + g.edge_count() {
        return Err(Error::Internal(format!(
            "α(S_2) = {} differs from α + |E| = {}",
            mis.len(),
            alpha + g.edge_count()
        )));
    }
    let mut in_mis = vec![false; s.n()];
    for &v in &mis {
        in_mis[v] = true;
    }
    let mut tess_of = vec![usize::MAX; s.n()];
    let centers: Vec<usize> = (0..s.n()).filter(|&v| !in_mis[v]).collect();
    for (t, &c) in centers.iter().enumerate() {
        tess_of[c] = t;
    }
    let k = centers.len();

    // each S-edge goes to a centre endpoint, the lower one on ties
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (x, &(a, b)) in edges.iter().enumerate() {
        let c = if !in_mis[a] { a } else { b };
        classes[tess_of[c]].push(x);
    }
    let mut pc = PartialCover::new(k, l.n());
    let mut home = vec![0; k];
    for (t, class) in classes.iter().enumerate() {
        home[t] = pc.add(t, class.clone());
    }

    for v in 0..g.n() {
        if g.degree(v) < 3 {
            continue;
        }
        let ka: Vec<usize> = (0..edges.len())
            .filter(|&x| edges[x].0 == v || edges[x].1 == v)
            .collect();
        let pairs: Vec<(usize, usize)> = ka
            .iter()
            .enumerate()
            .flat_map(|(p, &x)| ka[p + 1..].iter().map(move |&y| (x, y)))
            .filter(|&(x, y)| !pc.covered(x, y))
            .collect();
        if pairs.is_empty() {
            continue;
        }
        let own = (!in_mis[v]).then(|| tess_of[v]);
        match own {
            Some(t) if classes[t].len() >= 2 => {
                // enlarge v's own clique to the whole star; absorbed
                // vertices leave their other cliques in this tessellation
                for &x in &ka {
                    if pc.slot[t][x].is_some_and(|idx| idx != home[t]) {
                        pc.remove(t, x);
                    }
                }
                for &x in &ka {
                    if pc.is_free(t, x) {
                        pc.extend(t, home[t], x);
                    }
                }
            }
            _ => {
                let mut groups: Vec<Vec<usize>> = vec![Vec::new(); k];
                for &(x, y) in &pairs {
                    let t = pc.first_free(x, y).ok_or_else(|| {
                        Error::Internal(format!("no free tessellation for a pair in the star of {v}"))
                    })?;
                    groups[t].extend([x, y]);
                }
                for (t, mut grp) in groups.into_iter().enumerate() {
                    if grp.is_empty() {
                        continue;
                    }
                    grp.sort_unstable();
                    grp.dedup();
                    pc.add(t, grp);
                }
            }
        }
    }

    for (x, y) in l.edges() {
        if pc.covered(x, y) {
            continue;
        }
        let t = pc.first_free(x, y).ok_or_else(|| {
            Error::Internal(format!("no free tessellation for the 2-clique {x}-{y}"))
        })?;
        pc.add(t, vec![x, y]);
    }

    for t in 0..k {
        pc.cliques[t][home[t]].push(c3.u);
    }
    let cover = pc.finish();
    check_cover(&c3.graph, &cover, k, "cons3 cover")?;
    Ok(cover)
}

/// A cover of `g ∨ {u}` with `θ(g)` tessellations when `θ(g) ≥ 2Δ(g)+1`.
///
/// Tessellation `j` holds clique `P_j ∪ {u}` of a minimum clique
/// partition; each edge between two classes then gets, as a 2-clique, the
/// first tessellation unused at both endpoints.
pub fn join_partition_cover(g: &Graph, budget: &mut Budget) -> Result<TessellationCover> {
    let partition = clique_cover_number(g, budget)?;
    let theta = partition.len();
    let delta = g.max_degree();
    if theta < 2 * delta + 1 {
        return Err(Error::Precondition(format!(
            "θ = {theta} is below 2Δ+1 = {}",
            2 * delta + 1
        )));
    }
    let n = g.n();
    let mut class = vec![0; n];
    let mut pc = PartialCover::new(theta, n + 1);
    for (j, p) in partition.classes.iter().enumerate() {
        for &v in p {
            class[v] = j;
        }
        let mut clique = p.clone();
        clique.push(n);
        pc.add(j, clique);
    }
    for (a, b) in g.edges() {
        if class[a] == class[b] {
            continue;
        }
        let t = pc
            .first_free(a, b)
            .ok_or_else(|| Error::Internal(format!("no free tessellation for {a}-{b}")))?;
        pc.add(t, vec![a, b]);
    }
    let cover = pc.finish();
    check_cover(&add_universal(g), &cover, theta, "join partition cover")?;
    Ok(cover)
}
