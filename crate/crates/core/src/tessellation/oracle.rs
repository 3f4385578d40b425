//! Independent brute-force computation of T(G) for tiny graphs: enumerate
//! every tessellation, then find a minimum set cover of the edges by
//! breadth-first search over covered-edge bitmasks.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ORACLE_MAX_N: usize = 8;
pub const ORACLE_MAX_EDGES: usize = 14;

pub fn brute_force_oracle(g: &Graph) -> Result<usize> {
    if g.n() > ORACLE_MAX_N {
        return Err(Error::CapExceeded {
            what: "oracle vertices",
            value: g.n(),
            cap: ORACLE_MAX_N,
        });
    }
    let edges = g.edges();
    let m = edges.len();
    if m > ORACLE_MAX_EDGES {
        return Err(Error::CapExceeded {
            what: "oracle edges",
            value: m,
            cap: ORACLE_MAX_EDGES,
        });
    }
    if m == 0 {
        return Ok(0);
    }
    let n = g.n();
    let mut bit = vec![vec![0u32; n]; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        bit[u][v] = 1 << i;
        bit[v][u] = 1 << i;
    }

    // every partition of V into cliques, as the mask of edges it covers
    let mut masks = BTreeSet::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    partitions(g, 0, &mut blocks, &bit, &mut masks);
    masks.remove(&0);
    let masks: Vec<u32> = masks.into_iter().collect();

    let full: u32 = if m == 32 { u32::MAX } else { (1 << m) - 1 };
    let mut dist = vec![u8::MAX; 1 << m];
    dist[0] = 0;
    let mut frontier = vec![0u32];
    let mut depth = 0u8;
    while !frontier.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &s in &frontier {
            for &t in &masks {
                let r = s | t;
                if dist[r as usize] == u8::MAX {
                    if r == full {
                        return Ok(depth as usize);
                    }
                    dist[r as usize] = depth;
                    next.push(r);
                }
            }
        }
        frontier = next;
    }
    Err(Error::Internal("edge set not coverable".into()))
}

fn partitions(
    g: &Graph,
    v: usize,
    blocks: &mut Vec<Vec<usize>>,
    bit: &[Vec<u32>],
    out: &mut BTreeSet<u32>,
) {
    if v == g.n() {
        let mut mask = 0;
        for b in blocks.iter() {
            for (i, &x) in b.iter().enumerate() {
                for &y in &b[i + 1..] {
                    mask |= bit[x][y];
                }
            }
        }
        out.insert(mask);
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].iter().all(|&w| g.has_edge(v, w)) {
            blocks[i].push(v);
            partitions(g, v + 1, blocks, bit, out);
            blocks[i].pop();
        }
    }
    blocks.push(vec![v]);
    partitions(g, v + 1, blocks, bit, out);
    blocks.pop();
}
