//! Graph operators. Every operator returns a new graph and documents how
//! vertex ids of the inputs map to ids of the output.

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::invariants::maximal_cliques;

/// `G^c`, on the same vertex ids.
pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let mut b = GraphBuilder::new(n);
    for u in 0..n {
        if let Some(l) = g.label(u) {
            b.set_label(u, l);
        }
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                b.connect(u, v);
            }
        }
    }
    b.build()
}

/// `G ∪ H` on disjoint vertex sets: ids of `h` are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let mut b = GraphBuilder::from_graph(g);
    let off = g.n();
    for v in 0..h.n() {
        b.add_vertex(h.label(v).map(str::to_owned));
    }
    for (u, v) in h.edges() {
        b.connect(u + off, v + off);
    }
    b.build()
}

/// `G ∨ H`: the disjoint union plus every edge between the two sides.
/// Ids of `h` are shifted by `g.n()`.
pub fn join(g: &Graph, h: &Graph) -> Graph {
    let mut b = GraphBuilder::from_graph(&disjoint_union(g, h));
    let off = g.n();
    for u in 0..g.n() {
        for v in 0..h.n() {
            b.connect(u, v + off);
        }
    }
    b.build()
}

/// `G[S]`. Vertices of `s` are relabelled `0..|s|` in increasing id order;
/// duplicates in `s` are ignored.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<Graph> {
    let mut verts = s.to_vec();
    verts.sort_unstable();
    verts.dedup();
    for &v in &verts {
        g.check_vertex(v)?;
    }
    let mut b = GraphBuilder::new(verts.len());
    for (i, &u) in verts.iter().enumerate() {
        if let Some(l) = g.label(u) {
            b.set_label(i, l);
        }
        for (j, &v) in verts.iter().enumerate().skip(i + 1) {
            if g.has_edge(u, v) {
                b.connect(i, j);
            }
        }
    }
    Ok(b.build())
}

/// `S_k(G)`: every edge `xy` becomes the path `x, v_1, …, v_k, y`.
///
/// Original vertices keep their ids. The internal vertices of the `e`-th
/// edge of `g.edges()` get ids `n + e·k .. n + (e+1)·k`, ordered from the
/// lower endpoint to the higher one.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    if k == 0 {
        return g.clone();
    }
    let mut b = GraphBuilder::new(g.n());
    for v in 0..g.n() {
        if let Some(l) = g.label(v) {
            b.set_label(v, l);
        }
    }
    for (x, y) in g.edges() {
        let mut prev = x;
        for pos in 1..=k {
            let v = b.add_vertex(Some(format!("sub {x}-{y} #{pos}")));
            b.connect(prev, v);
            prev = v;
        }
        b.connect(prev, y);
    }
    b.build()
}

/// `L(G)`: vertex `i` is the `i`-th edge of `g.edges()`.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut b = GraphBuilder::new(edges.len());
    // edges incident to each vertex
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(x, y)) in edges.iter().enumerate() {
        b.set_label(i, format!("edge {x}-{y}"));
        incident[x].push(i);
        incident[y].push(i);
    }
    for list in &incident {
        for (a, &i) in list.iter().enumerate() {
            for &j in &list[a + 1..] {
                b.connect(i, j);
            }
        }
    }
    b.build()
}

/// `K(G)`: vertex `i` is the `i`-th clique of [`maximal_cliques`]`(g)`.
pub fn clique_graph(g: &Graph) -> Graph {
    let cliques = maximal_cliques(g);
    let mut b = GraphBuilder::new(cliques.len());
    for (i, c) in cliques.iter().enumerate() {
        b.set_label(i, format!("clique {c:?}"));
        for (j, d) in cliques.iter().enumerate().skip(i + 1) {
            if c.iter().any(|v| d.binary_search(v).is_ok()) {
                b.connect(i, j);
            }
        }
    }
    b.build()
}

/// Adds one vertex adjacent to every vertex; its id is `g.n()`.
pub fn add_universal(g: &Graph) -> Graph {
    let mut b = GraphBuilder::from_graph(g);
    let u = b.add_vertex(Some("universal".into()));
    for v in 0..g.n() {
        b.connect(v, u);
    }
    b.build()
}

/// Adds `count` degree-1 vertices adjacent to `v`, with ids `g.n()..`.
pub fn add_pendants(g: &Graph, v: usize, count: usize) -> Result<Graph> {
    g.check_vertex(v)?;
    let mut b = GraphBuilder::from_graph(g);
    for _ in 0..count {
        let p = b.add_vertex(Some(format!("pendant of {v}")));
        b.connect(v, p);
    }
    Ok(b.build())
}

/// The Mycielski graph `M_j`, starting from `M_2 = K_2`.
///
/// Building `M_j` from `M_{j-1}` on vertices `v_0..v_{m-1}` adds shadows
/// `u_i = m + i` adjacent to `N(v_i) ∪ {w}` and the apex `w = 2m`.
pub fn mycielski(j: usize) -> Result<Graph> {
    if j < 2 {
        return Err(Error::InvalidParameter(format!(
            "Mycielski graphs start at j = 2, got {j}"
        )));
    }
    let mut g = Graph::complete(2);
    for _ in 2..j {
        let m = g.n();
        let mut b = GraphBuilder::from_graph(&g);
        for i in 0..m {
            b.add_vertex(Some(format!("shadow of {i}")));
        }
        let w = b.add_vertex(Some("apex".into()));
        for i in 0..m {
            for x in g.neighbors(i).ones() {
                b.connect(m + i, x);
            }
            b.connect(m + i, w);
        }
        g = b.build();
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    #[test]
    fn complement_examples() {
        assert_eq!(complement(&Graph::complete(4)), Graph::empty(4));
        let c5 = Graph::cycle(5);
        assert_eq!(complement(&complement(&c5)), c5);
        let cc = complement(&c5);
        assert_eq!(cc.edge_count(), 5);
        assert!(are_isomorphic(&cc, &c5).unwrap());
    }

    #[test]
    fn join_examples() {
        assert_eq!(join(&Graph::empty(1), &Graph::empty(1)), Graph::complete(2));
        let star = join(&Graph::empty(3), &Graph::empty(1));
        assert!(are_isomorphic(&star, &Graph::star(3)).unwrap());
        let w = join(&Graph::cycle(4), &Graph::empty(1));
        assert_eq!((w.n(), w.edge_count()), (5, 8));
        assert_eq!(w, Graph::wheel(4));
    }

    #[test]
    fn union_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(disjoint_union(&k2, &k2), Graph::matching(2));
        let c5 = Graph::cycle(5);
        assert_eq!(disjoint_union(&c5, &Graph::empty(0)), c5);
        let u = disjoint_union(&Graph::cycle(3), &Graph::cycle(4));
        assert_eq!((u.n(), u.edge_count(), u.components().len()), (7, 7, 2));
    }

    #[test]
    fn induced_examples() {
        let c5 = Graph::cycle(5);
        assert_eq!(induced_subgraph(&c5, &[0, 1, 2]).unwrap(), Graph::path(3));
        assert_eq!(induced_subgraph(&c5, &[0, 1, 2, 3, 4]).unwrap(), c5);
        assert_eq!(
            induced_subgraph(&Graph::complete(5), &[1, 3, 4]).unwrap(),
            Graph::complete(3)
        );
        assert_eq!(
            induced_subgraph(&c5, &[0, 7]),
            Err(Error::VertexOutOfRange { vertex: 7, n: 5 })
        );
    }

    #[test]
    fn subdivide_examples() {
        let c4 = Graph::cycle(4);
        assert_eq!(subdivide(&c4, 0), c4);
        let s = subdivide(&c4, 2);
        // 12 vertices of degree 2 in one component: C_12
        assert_eq!((s.n(), s.edge_count()), (12, 12));
        assert!((0..12).all(|v| s.degree(v) == 2));
        assert_eq!(s.components().len(), 1);
        let p = subdivide(&Graph::complete(2), 2);
        assert_eq!(p, Graph::from_edges(4, &[(0, 2), (2, 3), (3, 1)]).unwrap());
        assert!(are_isomorphic(&p, &Graph::path(4)).unwrap());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&Graph::star(3)), Graph::complete(3));
        let l = line_graph(&Graph::cycle(6));
        assert_eq!((l.n(), l.edge_count()), (6, 6));
        assert!((0..6).all(|v| l.degree(v) == 2));
        assert_eq!(line_graph(&Graph::path(4)), Graph::path(3));
    }

    #[test]
    fn clique_graph_examples() {
        assert_eq!(clique_graph(&Graph::complete(5)), Graph::complete(1));
        assert_eq!(clique_graph(&Graph::path(4)), Graph::path(3));
        let k = clique_graph(&Graph::cycle(5));
        assert!(are_isomorphic(&k, &Graph::cycle(5)).unwrap());
    }

    #[test]
    fn universal_and_pendants() {
        assert_eq!(add_universal(&Graph::empty(3)), {
            let mut e = vec![];
            for v in 0..3 {
                e.push((v, 3));
            }
            Graph::from_edges(4, &e).unwrap()
        });
        assert_eq!(add_universal(&Graph::complete(3)), Graph::complete(4));
        assert_eq!(add_universal(&Graph::cycle(4)), Graph::wheel(4));
        assert_eq!(add_pendants(&Graph::empty(1), 0, 3).unwrap(), Graph::star(3));
        let k2 = Graph::complete(2);
        assert_eq!(add_pendants(&k2, 0, 0).unwrap(), k2);
        let p = add_pendants(&k2, 0, 2).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.degree(0)), (4, 3, 3));
        assert!(add_pendants(&k2, 2, 1).is_err());
    }

    #[test]
    fn mycielski_examples() {
        assert_eq!(mycielski(2).unwrap(), Graph::complete(2));
        assert!(are_isomorphic(&mycielski(3).unwrap(), &Graph::cycle(5)).unwrap());
        let m4 = mycielski(4).unwrap();
        assert_eq!((m4.n(), m4.edge_count()), (11, 20));
        assert!(mycielski(1).is_err());
    }
}
