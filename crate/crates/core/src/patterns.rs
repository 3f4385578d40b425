//! Induced-subgraph detection for the forbidden patterns of the
//! perfect-tessellable scan.

use std::fmt;

use serde::Serialize;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Pattern {
    /// `P_4 ∨ K_1`.
    Gem,
    /// `C_4 ∨ K_1`.
    W4,
    /// An induced odd cycle of length at least 5.
    OddHole,
    /// `C_3`, reported separately so callers can choose whether "odd
    /// cycles" includes it.
    Triangle,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Pattern::Gem => "gem",
            Pattern::W4 => "W4",
            Pattern::OddHole => "odd-hole",
            Pattern::Triangle => "triangle",
        })
    }
}

/// The vertices of an induced copy of `pattern`, or `None`.
///
/// For gem and W4 the witness lists the four rim vertices in path/cycle
/// order followed by the hub; for cycles it lists the cycle in order
/// starting from its smallest vertex. The first witness in lexicographic
/// search order is returned.
pub fn contains_induced(g: &Graph, pattern: Pattern) -> Option<Vec<usize>> {
    match pattern {
        Pattern::Gem => find_hub_pattern(g, false),
        Pattern::W4 => find_hub_pattern(g, true),
        Pattern::OddHole => find_induced_cycle(g, |len| len >= 5 && len % 2 == 1),
        Pattern::Triangle => find_induced_cycle(g, |len| len == 3),
    }
}

/// A hub adjacent to four vertices inducing `P_4` (or `C_4` when `cycle`).
fn find_hub_pattern(g: &Graph, cycle: bool) -> Option<Vec<usize>> {
    let n = g.n();
    for hub in 0..n {
        let nb: Vec<usize> = g.neighbors(hub).ones().collect();
        if nb.len() < 4 {
            continue;
        }
        let mut pick = Vec::with_capacity(4);
        if let Some(rim) = choose_rim(g, &nb, 0, &mut pick, cycle) {
            let mut w = rim;
            w.push(hub);
            return Some(w);
        }
    }
    None
}

fn choose_rim(
    g: &Graph,
    pool: &[usize],
    from: usize,
    pick: &mut Vec<usize>,
    cycle: bool,
) -> Option<Vec<usize>> {
    if pick.len() == 4 {
        return rim_order(g, pick, cycle);
    }
    for i in from..pool.len() {
        pick.push(pool[i]);
        if let Some(r) = choose_rim(g, pool, i + 1, pick, cycle) {
            return Some(r);
        }
        pick.pop();
    }
    None
}

/// Orders four vertices as an induced `P_4` / `C_4` if they form one.
fn rim_order(g: &Graph, four: &[usize], cycle: bool) -> Option<Vec<usize>> {
    let deg = |v: usize| four.iter().filter(|&&w| g.has_edge(v, w)).count();
    let edges: usize = four.iter().map(|&v| deg(v)).sum::<usize>() / 2;
    if cycle {
        if edges != 4 || four.iter().any(|&v| deg(v) != 2) {
            return None;
        }
    } else {
        let mut degs: Vec<usize> = four.iter().map(|&v| deg(v)).collect();
        degs.sort_unstable();
        if edges != 3 || degs != [1, 1, 2, 2] {
            return None;
        }
    }
    // walk the path or cycle from an end (or the smallest vertex)
    let start = if cycle {
        four[0]
    } else {
        *four.iter().find(|&&v| deg(v) == 1)?
    };
    let mut order = vec![start];
    while order.len() < 4 {
        let last = *order.last().unwrap();
        let next = four
            .iter()
            .copied()
            .find(|&w| g.has_edge(last, w) && !order.contains(&w))?;
        order.push(next);
    }
    Some(order)
}

/// First induced cycle whose length satisfies `accept`.
fn find_induced_cycle(g: &Graph, accept: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let n = g.n();
    for s in 0..n {
        let mut path = vec![s];
        if let Some(c) = extend_cycle(g, s, &mut path, &accept) {
            return Some(c);
        }
    }
    None
}

/// `path` is an induced path starting at `s` whose vertices are all `> s`
/// except `s`; only `path[1]` may be adjacent to `s`.
fn extend_cycle(
    g: &Graph,
    s: usize,
    path: &mut Vec<usize>,
    accept: &impl Fn(usize) -> bool,
) -> Option<Vec<usize>> {
    let last = *path.last().unwrap();
    let k = path.len();
    for v in g.neighbors(last).ones() {
        if v <= s || path.contains(&v) {
            continue;
        }
        // v may only touch `last` among the interior vertices
        if k > 2 && path[1..k - 1].iter().any(|&p| g.has_edge(p, v)) {
            continue;
        }
        if k >= 2 && g.has_edge(s, v) {
            let len = k + 1;
            if accept(len) && (len > 3 || path[1] < v) {
                let mut c = path.clone();
                c.push(v);
                return Some(c);
            }
            continue;
        }
        path.push(v);
        if let Some(c) = extend_cycle(g, s, path, accept) {
            return Some(c);
        }
        path.pop();
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::add_universal;

    #[test]
    fn examples() {
        let mut w = contains_induced(&Graph::cycle(5), Pattern::OddHole).unwrap();
        w.sort_unstable();
        assert_eq!(w, vec![0, 1, 2, 3, 4]);
        assert!(contains_induced(&Graph::cycle(4), Pattern::Gem).is_none());
        assert!(contains_induced(&add_universal(&Graph::cycle(4)), Pattern::W4).is_some());
    }

    #[test]
    fn hub_patterns_are_distinguished() {
        assert!(contains_induced(&Graph::gem(), Pattern::Gem).is_some());
        assert!(contains_induced(&Graph::gem(), Pattern::W4).is_none());
        assert!(contains_induced(&Graph::wheel(4), Pattern::Gem).is_none());
        // K_5 has neither
        assert!(contains_induced(&Graph::complete(5), Pattern::Gem).is_none());
        assert!(contains_induced(&Graph::complete(5), Pattern::W4).is_none());
        let w = contains_induced(&Graph::gem(), Pattern::Gem).unwrap();
        assert_eq!(w[4], 4);
    }

    #[test]
    fn holes() {
        assert!(contains_induced(&Graph::cycle(7), Pattern::OddHole).is_some());
        assert!(contains_induced(&Graph::cycle(6), Pattern::OddHole).is_none());
        assert!(contains_induced(&Graph::cycle(6), Pattern::Triangle).is_none());
        assert!(contains_induced(&Graph::complete(3), Pattern::Triangle).is_some());
        assert!(contains_induced(&Graph::complete(3), Pattern::OddHole).is_none());
        // W_5 contains the rim C_5 as an induced hole
        assert_eq!(
            contains_induced(&Graph::wheel(5), Pattern::OddHole).map(|c| c.len()),
            Some(5)
        );
        // C_7 plus a chord 0-2 leaves an induced C_6 and a triangle only
        let mut e: Vec<_> = (0..7).map(|v| (v, (v + 1) % 7)).collect();
        e.push((0, 2));
        let g = Graph::from_edges(7, &e).unwrap();
        assert!(contains_induced(&g, Pattern::OddHole).is_none());
        assert!(contains_induced(&g, Pattern::Triangle).is_some());
    }
}
