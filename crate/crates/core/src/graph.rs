use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A set of vertex ids, one bit per vertex.
pub type VertexSet = FixedBitSet;

/// A finite simple undirected graph on the vertices `0..n`.
///
/// Adjacency is stored as one bitset per vertex so neighbourhood
/// intersections and subset tests cost one operation per machine word.
/// Graphs are immutable once built; every operator returns a new graph.
///
/// Vertex labels are provenance strings only (for example `"copy 2 of v3"`);
/// they are ignored by equality and by every algorithm.
#[derive(Clone)]
pub struct Graph {
    adj: Vec<VertexSet>,
    labels: Vec<Option<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        GraphBuilder::new(n).build()
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.connect(u, v);
            }
        }
        b.build()
    }

    /// The cycle `C_n`. Panics if `n < 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut b = GraphBuilder::new(n);
        for v in 0..n {
            b.connect(v, (v + 1) % n);
        }
        b.build()
    }

    /// The path `P_n` on `n` vertices.
    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for v in 1..n {
            b.connect(v - 1, v);
        }
        b.build()
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Self {
        let mut b = GraphBuilder::new(k + 1);
        for v in 1..=k {
            b.connect(0, v);
        }
        b.build()
    }

    pub fn complete_bipartite(a: usize, c: usize) -> Self {
        let mut b = GraphBuilder::new(a + c);
        for u in 0..a {
            for v in a..a + c {
                b.connect(u, v);
            }
        }
        b.build()
    }

    /// `k` disjoint edges, `kK_2`.
    pub fn matching(k: usize) -> Self {
        let mut b = GraphBuilder::new(2 * k);
        for i in 0..k {
            b.connect(2 * i, 2 * i + 1);
        }
        b.build()
    }

    /// The wheel `C_k ∨ K_1`; the hub is vertex `k`.
    pub fn wheel(k: usize) -> Self {
        let mut b = GraphBuilder::from_graph(&Graph::cycle(k));
        let hub = b.add_vertex(Some("hub".into()));
        for v in 0..k {
            b.connect(v, hub);
        }
        b.build()
    }

    /// The gem `P_4 ∨ K_1`; the hub is vertex 4.
    pub fn gem() -> Self {
        let mut b = GraphBuilder::from_graph(&Graph::path(4));
        let hub = b.add_vertex(Some("hub".into()));
        for v in 0..4 {
            b.connect(v, hub);
        }
        b.build()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones(..)).sum::<usize>() / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Δ(G); 0 for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_universal(&self, v: usize) -> bool {
        self.degree(v) + 1 == self.n()
    }

    pub fn universal_vertices(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_universal(v)).collect()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels[v].as_deref()
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    /// A copy of this graph with its labels replaced.
    pub fn with_labels<I, S>(&self, labels: I) -> Self
    where
        I: IntoIterator<Item = Option<S>>,
        S: Into<String>,
    {
        let mut labels: Vec<Option<String>> =
            labels.into_iter().map(|l| l.map(Into::into)).collect();
        labels.resize(self.n(), None);
        Graph {
            adj: self.adj.clone(),
            labels,
        }
    }

    pub fn vertex_set(&self) -> VertexSet {
        let mut s = VertexSet::with_capacity(self.n());
        s.insert_range(..);
        s
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Whether `set` induces a complete subgraph.
    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    /// Connected components, each sorted, ordered by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.adj[v].ones() {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Symmetry and irreflexivity of the adjacency relation.
    pub fn is_well_formed(&self) -> bool {
        (0..self.n()).all(|u| {
            self.adj[u].len() == self.n()
                && !self.adj[u].contains(u)
                && self.adj[u].ones().all(|v| self.adj[v].contains(u))
        })
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

/// Mutable staging area for building a [`Graph`].
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    labels: Vec<Option<String>>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
            labels: vec![None; n],
        }
    }

    /// Starts from a copy of `g`, keeping its vertex ids and labels.
    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            adj: (0..g.n()).map(|v| g.adj[v].ones().collect()).collect(),
            labels: g.labels.clone(),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn add_vertex(&mut self, label: Option<String>) -> usize {
        self.adj.push(Vec::new());
        self.labels.push(label);
        self.adj.len() - 1
    }

    pub fn set_label(&mut self, v: usize, label: impl Into<String>) {
        self.labels[v] = Some(label.into());
    }

    /// Adds the edge `uv`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.connect(u, v);
        Ok(())
    }

    /// Infallible edge insertion for operators whose ids are valid by construction.
    pub(crate) fn connect(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n() && v < self.n());
        self.adj[u].push(v);
        self.adj[v].push(u);
    }

    pub fn build(self) -> Graph {
        let n = self.adj.len();
        let adj = self
            .adj
            .into_iter()
            .map(|list| {
                let mut s = VertexSet::with_capacity(n);
                s.extend(list);
                s
            })
            .collect();
        let g = Graph {
            adj,
            labels: self.labels,
        };
        debug_assert!(g.is_well_formed());
        g
    }
}
