//! Brute-force reference computations, written independently of the
//! library's solvers, plus helpers for driving the binary.

#![allow(dead_code)]

use std::collections::HashMap;
use std::path::Path;
use std::process::{Command, Output};

use tessella_core::tessellation::TessellationCover;
use tessella_core::Graph;

pub fn tessella(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tessella"))
        .args(args)
        .current_dir(dir)
        .env_remove("TESSELLA_BUDGET")
        .output()
        .expect("binary runs")
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

pub fn write_graph(dir: &Path, name: &str, g: &Graph) -> String {
    let mut text = format!("p {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        text.push_str(&format!("e {u} {v}\n"));
    }
    std::fs::write(dir.join(name), text).unwrap();
    name.to_string()
}

/// Every labelled graph on `n` vertices with at most `max_edges` edges.
pub fn labelled_graphs(n: usize, max_edges: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        if mask.count_ones() as usize > max_edges {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| pairs[i])
            .collect();
        out.push(Graph::from_edges(n, &edges).unwrap());
    }
    out
}

fn adjacency(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for (u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

/// Independence number by subset enumeration, for small `n`.
pub fn alpha(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    (0u64..1 << n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Star number: the largest independent set inside one neighbourhood.
pub fn star_number(g: &Graph) -> usize {
    let adj = adjacency(g);
    (0..g.n())
        .map(|c| {
            let nb: Vec<usize> = (0..g.n()).filter(|&v| adj[c] >> v & 1 == 1).collect();
            (0u64..1 << nb.len())
                .filter(|&s| {
                    (0..nb.len()).all(|i| {
                        s >> i & 1 == 0
                            || (0..nb.len()).all(|j| s >> j & 1 == 0 || adj[nb[i]] >> nb[j] & 1 == 0)
                    })
                })
                .map(|s| s.count_ones() as usize)
                .max()
                .unwrap_or(0)
        })
        .max()
        .unwrap_or(0)
}

/// Chromatic number by trying each `k` with plain backtracking.
pub fn chromatic(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.n();
    fn go(v: usize, k: usize, adj: &[u64], col: &mut Vec<usize>) -> bool {
        if v == adj.len() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|w| adj[v] >> w & 1 == 0 || col[w] != c) {
                col[v] = c;
                if go(v + 1, k, adj, col) {
                    return true;
                }
            }
        }
        false
    }
    (0..=n).find(|&k| go(0, k, &adj, &mut vec![0; n])).unwrap()
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.n();
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Chromatic index by backtracking over edges.
pub fn chromatic_index(g: &Graph) -> usize {
    let edges = g.edges();
    fn go(i: usize, k: usize, edges: &[(usize, usize)], col: &mut Vec<usize>) -> bool {
        if i == edges.len() {
            return true;
        }
        let (a, b) = edges[i];
        for c in 0..k {
            let clash = (0..i).any(|j| {
                let (x, y) = edges[j];
                col[j] == c && (x == a || x == b || y == a || y == b)
            });
            if !clash {
                col[i] = c;
                if go(i + 1, k, edges, col) {
                    return true;
                }
            }
        }
        false
    }
    (0..=edges.len())
        .find(|&k| go(0, k, &edges, &mut vec![0; edges.len()]))
        .unwrap()
}

pub fn is_triangle_free(g: &Graph) -> bool {
    let adj = adjacency(g);
    g.edges().iter().all(|&(u, v)| adj[u] & adj[v] == 0)
}

/// Maximum matching by exhaustive search with memoisation on the set of
/// still-free vertices; vertices are decided in index order.
pub fn matching_number(g: &Graph) -> usize {
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| g.has_edge(v, w)).collect())
        .collect();
    fn go(
        v: usize,
        used: &mut Vec<bool>,
        nbrs: &[Vec<usize>],
        memo: &mut HashMap<(usize, Vec<bool>), usize>,
    ) -> usize {
        let n = nbrs.len();
        let mut v = v;
        while v < n && used[v] {
            v += 1;
        }
        if v == n {
            return 0;
        }
        // only vertices after v can still be matched
        let key = (v, used[v..].to_vec());
        if let Some(&r) = memo.get(&key) {
            return r;
        }
        used[v] = true;
        let mut best = go(v + 1, used, nbrs, memo);
        for &w in &nbrs[v] {
            if w > v && !used[w] {
                used[w] = true;
                best = best.max(1 + go(v + 1, used, nbrs, memo));
                used[w] = false;
            }
        }
        used[v] = false;
        memo.insert(key, best);
        best
    }
    go(0, &mut vec![false; n], &nbrs, &mut HashMap::new())
}

/// `G` with every edge replaced by a path of three edges.
pub fn subdivide_twice(g: &Graph) -> Graph {
    let n = g.n();
    let mut edges = Vec::new();
    for (i, (u, v)) in g.edges().into_iter().enumerate() {
        let a = n + 2 * i;
        edges.extend([(u, a), (a, a + 1), (a + 1, v)]);
    }
    Graph::from_edges(n + 2 * g.edge_count(), &edges).unwrap()
}

/// Checks a cover from first principles: each tessellation is a family of
/// vertex-disjoint cliques and every edge lies inside one of them.
pub fn cover_is_valid(g: &Graph, cover: &TessellationCover) -> bool {
    let n = g.n();
    let mut covered = vec![vec![false; n]; n];
    for t in &cover.tessellations {
        let mut seen = vec![false; n];
        for clique in t.cliques() {
            for (i, &a) in clique.iter().enumerate() {
                if a >= n || seen[a] {
                    return false;
                }
                seen[a] = true;
                for &b in &clique[i + 1..] {
                    if b >= n || !g.has_edge(a, b) {
                        return false;
                    }
                    covered[a][b] = true;
                    covered[b][a] = true;
                }
            }
        }
    }
    g.edges().into_iter().all(|(u, v)| covered[u][v])
}
