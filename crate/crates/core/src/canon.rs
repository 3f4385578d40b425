//! Canonical forms for small graphs, isomorphism tests, and exhaustive
//! enumeration of isomorphism classes.
//!
//! The canonical code of a graph is the lexicographically smallest upper
//! triangle of its adjacency matrix (read row-by-row over positions
//! `(0,1), (0,2), (1,2), (0,3), …`) over all vertex orderings that list
//! vertices by an isomorphism-invariant key (degree, then the sorted degrees
//! of the neighbours). Restricting to such orderings keeps the code canonical
//! while cutting the number of permutations tried.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

/// Largest vertex count supported by [`canonical_form`] (45 bits of code).
pub const CANON_MAX_N: usize = 10;

/// Default cap for [`enumerate_graphs`].
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

impl CanonicalForm {
    /// The graph whose adjacency matrix is this code, in canonical order.
    pub fn to_graph(self) -> Graph {
        let n = self.n;
        let bits = n * n.saturating_sub(1) / 2;
        let mut b = GraphBuilder::new(n);
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.code >> (bits - 1 - k)) & 1 == 1 {
                    b.connect(i, j);
                }
                k += 1;
            }
        }
        b.build()
    }
}

fn vertex_keys(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    (0..g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).ones().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect()
}

struct CanonSearch<'a> {
    g: &'a Graph,
    /// cell index of each position
    pos_cell: Vec<usize>,
    /// vertices of each cell
    cells: Vec<Vec<usize>>,
    order: Vec<usize>,
    used: Vec<bool>,
    best: Option<u64>,
    total_bits: usize,
}

impl CanonSearch<'_> {
    fn run(&mut self, depth: usize, prefix: u64) {
        let n = self.g.n();
        if depth == n {
            if self.best.map_or(true, |b| prefix < b) {
                self.best = Some(prefix);
            }
            return;
        }
        let cell = self.pos_cell[depth];
        for idx in 0..self.cells[cell].len() {
            let v = self.cells[cell][idx];
            if self.used[v] {
                continue;
            }
            let mut code = prefix;
            for i in 0..depth {
                code = (code << 1) | u64::from(self.g.has_edge(self.order[i], v));
            }
            // bits fixed so far: depth·(depth+1)/2
            if let Some(best) = self.best {
                let fixed = (depth + 1) * depth / 2;
                let best_prefix = best >> (self.total_bits - fixed);
                if code > best_prefix {
                    continue;
                }
            }
            self.used[v] = true;
            self.order.push(v);
            self.run(depth + 1, code);
            self.order.pop();
            self.used[v] = false;
        }
    }
}

/// Canonical code of `g`; errors when `g.n() > CANON_MAX_N`.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    if n > CANON_MAX_N {
        return Err(Error::CapExceeded {
            what: "vertices for canonical form",
            value: n,
            cap: CANON_MAX_N,
        });
    }
    let keys = vertex_keys(g);
    let mut distinct: Vec<_> = keys.clone();
    distinct.sort();
    distinct.dedup();
    let mut cells = vec![Vec::new(); distinct.len()];
    for v in 0..n {
        let c = distinct.binary_search(&keys[v]).expect("key present");
        cells[c].push(v);
    }
    let pos_cell = cells
        .iter()
        .enumerate()
        .flat_map(|(c, vs)| std::iter::repeat(c).take(vs.len()))
        .collect();
    let mut search = CanonSearch {
        g,
        pos_cell,
        cells,
        order: Vec::with_capacity(n),
        used: vec![false; n],
        best: None,
        total_bits: n * n.saturating_sub(1) / 2,
    };
    search.run(0, 0);
    Ok(CanonicalForm {
        n,
        code: search.best.unwrap_or(0),
    })
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    Ok(canonical_form(g)? == canonical_form(h)?)
}

static ENUMERATION_CACHE: Lazy<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// One representative per isomorphism class of graphs on `n` vertices, in
/// increasing canonical-code order. `n` is limited by
/// [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    enumerate_graphs_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_graphs_capped(n: usize, cap: usize) -> Result<Arc<Vec<Graph>>> {
    let cap = cap.min(CANON_MAX_N);
    if n > cap {
        return Err(Error::CapExceeded {
            what: "vertices for enumeration",
            value: n,
            cap,
        });
    }
    if let Some(hit) = ENUMERATION_CACHE.lock().unwrap().get(&n) {
        return Ok(Arc::clone(hit));
    }
    let graphs = if n == 0 {
        vec![Graph::empty(0)]
    } else {
        // extend every class on n-1 vertices by a vertex with any neighbourhood
        let smaller = enumerate_graphs_capped(n - 1, cap)?;
        let mut codes = BTreeSet::new();
        for h in smaller.iter() {
            for mask in 0u32..(1 << (n - 1)) {
                let mut b = GraphBuilder::from_graph(h);
                let v = b.add_vertex(None);
                for w in 0..n - 1 {
                    if mask >> w & 1 == 1 {
                        b.connect(w, v);
                    }
                }
                codes.insert(canonical_form(&b.build())?);
            }
        }
        codes.into_iter().map(CanonicalForm::to_graph).collect()
    };
    let graphs = Arc::new(graphs);
    ENUMERATION_CACHE
        .lock()
        .unwrap()
        .insert(n, Arc::clone(&graphs));
    Ok(graphs)
}

/// Calls `emit` on each class representative on `n` vertices.
pub fn for_each_graph(n: usize, mut emit: impl FnMut(&Graph)) -> Result<()> {
    for g in enumerate_graphs(n)?.iter() {
        emit(g);
    }
    Ok(())
}
