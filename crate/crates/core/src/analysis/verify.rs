//! Replayable checks of every formula and constructive procedure on
//! enumerated and constructed instances.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::{Budget, DEFAULT_NODE_LIMIT};
use crate::canon::enumerate_graphs;
use crate::constructions::{
    cons2, cons2_cover, cons3, cons3_cover, cons3_formula, cons4, corollary1_graph,
    corollary1_prediction, gap_family, join_partition_cover, Cons2Variant,
};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::{
    chromatic_index, chromatic_number, clique_cover_number, local_chromatic_bound,
    max_independent_set, max_matching, star_number,
};
use crate::ops::{add_universal, complement, disjoint_union, induced_subgraph, subdivide};
use crate::tessellation::{lower_bound, solve_exact, Tessellation, TessellationCover};

use super::gtr::gtr_with_cover;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Lemma1,
    Eq1,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    TriangleFree,
}

impl Suite {
    pub const EACH: [Suite; 8] = [
        Suite::Lemma1,
        Suite::Eq1,
        Suite::Thm1,
        Suite::Thm2,
        Suite::Thm3,
        Suite::Thm4,
        Suite::Thm5,
        Suite::TriangleFree,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Lemma1 => "lemma1",
            Suite::Eq1 => "eq1",
            Suite::Thm1 => "thm1",
            Suite::Thm2 => "thm2",
            Suite::Thm3 => "thm3",
            Suite::Thm4 => "thm4",
            Suite::Thm5 => "thm5",
            Suite::TriangleFree => "triangle-free",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        std::iter::once(Suite::All)
            .chain(Suite::EACH)
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// How far the enumerated checks reach.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Profile {
    Small,
    Default,
}

impl Profile {
    /// `default` when the profile is [`Profile::Default`], else `small`.
    fn pick(self, small: usize, default: usize) -> usize {
        match self {
            Profile::Small => small,
            Profile::Default => default,
        }
    }
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "small" => Ok(Profile::Small),
            "default" => Ok(Profile::Default),
            _ => Err(Error::InvalidParameter(format!("unknown budget profile {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub theorem: String,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub profile: Profile,
    pub checks: Vec<CheckRecord>,
}

impl VerifyReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == Status::Pass).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }
}

struct Ctx {
    suite: Suite,
    node_limit: u64,
}

impl Ctx {
    fn budget(&self) -> Budget {
        Budget::new(self.node_limit)
    }

    /// `actual` carries the observed value and whether it matches.
    fn record(
        &self,
        instance: impl Into<String>,
        expected: impl fmt::Display,
        actual: Result<(String, bool)>,
    ) -> CheckRecord {
        let (actual, ok) = actual.unwrap_or_else(|e| (format!("error: {e}"), false));
        CheckRecord {
            theorem: self.suite.name().to_string(),
            instance: instance.into(),
            expected: expected.to_string(),
            actual,
            status: if ok { Status::Pass } else { Status::Fail },
        }
    }

    /// One record for a property over all graphs of one order: `check`
    /// returns `Ok(None)` when the property holds and a description of the
    /// first failure otherwise.
    fn over_graphs(
        &self,
        n: usize,
        what: &str,
        filter: impl Fn(&Graph) -> bool + Sync,
        check: impl Fn(&Graph, &mut Budget) -> Result<Option<String>> + Sync,
    ) -> CheckRecord {
        let result = enumerate_graphs(n).and_then(|graphs| {
            let selected: Vec<&Graph> = graphs.iter().filter(|g| filter(g)).collect();
            let outcomes: Vec<Result<Option<String>>> = selected
                .par_iter()
                .map(|g| check(g, &mut self.budget()))
                .collect();
            for (g, o) in selected.iter().zip(outcomes) {
                if let Some(msg) = o? {
                    return Ok((format!("fails on edges {:?}: {msg}", g.edges()), false));
                }
            }
            Ok((format!("holds on {} graphs", selected.len()), true))
        });
        self.record(format!("all graphs on {n} vertices"), what, result)
    }
}

fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).expect("valid edges")
}

fn is_triangle_free(g: &Graph) -> bool {
    g.edges()
        .into_iter()
        .all(|(u, v)| g.neighbors(u).intersection(g.neighbors(v)).next().is_none())
}

pub fn verify_theorems(suite: Suite, profile: Profile) -> VerifyReport {
    verify_with_limit(suite, profile, DEFAULT_NODE_LIMIT)
}

pub fn verify_with_limit(suite: Suite, profile: Profile, node_limit: u64) -> VerifyReport {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    let checks = suites
        .into_iter()
        .flat_map(|s| {
            let ctx = Ctx {
                suite: s,
                node_limit,
            };
            match s {
                Suite::Lemma1 => lower_bounds(&ctx, profile),
                Suite::Eq1 => universal_bracket(&ctx, profile),
                Suite::Thm1 => copy_construction(&ctx, profile),
                Suite::Thm2 => join_partition(&ctx, profile),
                Suite::Thm3 => line_graph_construction(&ctx, profile),
                Suite::Thm4 => gap_widening(&ctx, profile),
                Suite::Thm5 => two_sided(&ctx),
                Suite::TriangleFree => triangle_free(&ctx, profile),
                Suite::All => unreachable!(),
            }
        })
        .collect();
    VerifyReport {
        suite,
        profile,
        checks,
    }
}

fn lower_bounds(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    (1..=profile.pick(5, 6))
        .map(|n| {
            ctx.over_graphs(n, "max(is, local bound) ≤ T", |_| true, |g, b| {
                let lb = lower_bound(g, b)?;
                let local = local_chromatic_bound(g, b)?.value;
                let t = solve_exact(g, b)?.value;
                Ok((lb > t || local > t).then(|| format!("bound {lb} (local {local}) > T = {t}")))
            })
        })
        .collect()
}

fn universal_bracket(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    (1..=profile.pick(4, 5))
        .map(|n| {
            ctx.over_graphs(n, "χ(h^c) ≤ T(h∨u) ≤ χ(h^c)+Δ(h)+1", |_| true, |h, b| {
                let chi = chromatic_number(&complement(h), b)?.k;
                let t = solve_exact(&add_universal(h), b)?.value;
                let hi = chi + h.max_degree() + 1;
                Ok((t < chi || t > hi).then(|| format!("T = {t} outside [{chi}, {hi}]")))
            })
        })
        .collect()
}

fn copy_construction(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for (name, g) in [("C4", Graph::cycle(4)), ("2K2", Graph::matching(2))] {
        for i in 1..=2 {
            let n = g.n();
            let mut b = ctx.budget();
            let actual = (|| -> Result<(String, bool)> {
                let h = cons2(&g, i, Cons2Variant::I)?.graph;
                let cover = cons2_cover(&g, i, &mut b)?;
                let lb = lower_bound(&h, &mut b)?;
                let colorable = chromatic_number(&g, &mut b)?.k <= i;
                let v = gtr_with_cover(&h, Some(&cover), &mut b)?;
                Ok((
                    format!(
                        "cover {}, lower bound {lb}, good {}, {i}-colourable {colorable}",
                        cover.size(),
                        v.good
                    ),
                    cover.size() == n && lb == n && v.good == colorable,
                ))
            })();
            out.push(ctx.record(
                format!("cons2({name}, {i}, I)"),
                format!("cover {n}, lower bound {n}, good iff {i}-colourable"),
                actual,
            ));
        }
    }
    for n in 3..=profile.pick(4, 5) {
        out.push(ctx.over_graphs(
            n,
            "T(cons2(g, i, I)) = |V(g)| for i = 1, 2",
            |g| g.universal_vertices().is_empty(),
            |g, b| {
                for i in 1..=2 {
                    let h = cons2(g, i, Cons2Variant::I)?.graph;
                    let t = solve_exact(&h, b)?.value;
                    if t != g.n() {
                        return Ok(Some(format!("i = {i}: T = {t}")));
                    }
                }
                Ok(None)
            },
        ));
    }
    out
}

fn join_partition(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    let solve_up_to = profile.pick(4, 5);
    let mut out: Vec<CheckRecord> = (1..=profile.pick(5, 6))
        .map(|n| {
            ctx.over_graphs(
                n,
                "θ ≥ 2Δ+1 ⇒ cover of g∨u of size θ and lower bound θ",
                |g| {
                    let theta = clique_cover_number(g, &mut Budget::default()).map_or(0, |p| p.len());
                    theta > 2 * g.max_degree()
                },
                move |g, b| {
                    let theta = clique_cover_number(g, b)?.len();
                    let h = add_universal(g);
                    let cover = join_partition_cover(g, b)?;
                    let lb = lower_bound(&h, b)?;
                    if cover.size() != theta || lb != theta {
                        return Ok(Some(format!("θ = {theta}, cover {}, bound {lb}", cover.size())));
                    }
                    if n <= solve_up_to {
                        let t = solve_exact(&h, b)?.value;
                        if t != theta {
                            return Ok(Some(format!("θ = {theta}, T = {t}")));
                        }
                    }
                    Ok(None)
                },
            )
        })
        .collect();
    for n in 1..=profile.pick(3, 4) {
        out.push(ctx.over_graphs(
            n,
            "pendant graph has T = χ(g^c)+2Δ+1",
            |_| true,
            |g, b| {
                let want = corollary1_prediction(g, b)?;
                let h = corollary1_graph(g);
                let padded = disjoint_union(g, &Graph::empty(2 * g.max_degree() + 1));
                let cover = join_partition_cover(&padded, b)?;
                let lb = lower_bound(&h, b)?;
                Ok((cover.size() != want || lb != want)
                    .then(|| format!("predicted {want}, cover {}, bound {lb}", cover.size())))
            },
        ));
    }
    out
}

fn line_graph_construction(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    let named = [
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("K1,4", Graph::star(4)),
        ("paw+K2", disjoint_union(&paw(), &Graph::complete(2))),
    ];
    let mut out = Vec::new();
    for (name, g) in named {
        let mut b = ctx.budget();
        let actual = (|| -> Result<(String, bool)> {
            let formula = cons3_formula(&g, &mut b)?;
            let h = cons3(&g)?.graph;
            let cover = cons3_cover(&g, &mut b)?;
            let lb = lower_bound(&h, &mut b)?;
            let mut s = format!("formula {formula}, cover {}, lower bound {lb}", cover.size());
            let mut ok = cover.size() == formula && lb == formula;
            if name == "C4" {
                let t = solve_exact(&h, &mut b)?.value;
                s.push_str(&format!(", T {t}"));
                ok &= t == formula;
            }
            Ok((s, ok))
        })();
        out.push(ctx.record(
            format!("cons3({name})"),
            "cover and lower bound equal |V|+|E|−α",
            actual,
        ));
    }
    for n in 2..=profile.pick(4, 5) {
        out.push(ctx.over_graphs(
            n,
            "cons3 cover has |V|+|E|−α tessellations, matching the lower bound",
            |g| g.edge_count() >= 4,
            move |g, b| {
                let formula = cons3_formula(g, b)?;
                let cover = cons3_cover(g, b)?;
                if cover.size() != formula {
                    return Ok(Some(format!("formula {formula}, cover {}", cover.size())));
                }
                if n <= 4 {
                    let lb = lower_bound(&cons3(g)?.graph, b)?;
                    if lb != formula {
                        return Ok(Some(format!("formula {formula}, lower bound {lb}")));
                    }
                }
                Ok(None)
            },
        ));
    }
    out
}

fn gap_widening(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    let mut out: Vec<CheckRecord> = (1..=profile.pick(5, 6))
        .map(|n| {
            ctx.over_graphs(n, "μ(S_2(g)) = |E| + μ(g)", |_| true, |g, _| {
                let lhs = max_matching(&subdivide(g, 2)).len();
                let rhs = g.edge_count() + max_matching(g).len();
                Ok((lhs != rhs).then(|| format!("{lhs} ≠ {rhs}")))
            })
        })
        .collect();
    // every two added universal vertices widen the gap by one; small members
    // are checked against exact is and the cover
    let mut gaps = Vec::new();
    let xs = 1..=profile.pick(4, 5);
    for x in xs.clone() {
        let mut b = ctx.budget();
        let g = Graph::matching(2);
        let actual = (|| -> Result<(String, bool)> {
            let fam = gap_family(&g, x, &mut b)?;
            let cover = cons3_cover(&fam.augmented, &mut b)?;
            let mut s = format!(
                "T {}, cover {}, is {}",
                fam.predicted_t,
                cover.size(),
                fam.predicted_is
            );
            let mut ok = cover.size() == fam.predicted_t;
            if x <= 1 {
                let is = star_number(&fam.cons3.graph, &mut b)?.size();
                s.push_str(&format!(", exact is {is}"));
                ok &= is == fam.predicted_is;
            }
            gaps.push(fam.gap());
            Ok((s, ok))
        })();
        out.push(ctx.record(
            format!("gap_family(2K2, {x})"),
            "cover size = predicted T; predicted is = exact is",
            actual,
        ));
    }
    let widening = gaps.len() == xs.count() && gaps.windows(3).all(|w| w[2] == w[0] + 1);
    out.push(ctx.record(
        "gap_family(2K2, x) for increasing x",
        "gap(x+2) = gap(x)+1",
        Ok((format!("gaps {gaps:?}"), widening)),
    ));
    out
}

/// Exact brackets for the two sides of [`cons4`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Cons4Brackets {
    pub is_h1: usize,
    pub t_h1: (usize, usize),
    pub is_h2: usize,
    pub t_h2: (usize, usize),
    /// `is_h2` recomputed as `|E| + μ` of the source of the second side
    pub is_h2_identity: usize,
}

impl Cons4Brackets {
    pub fn chain_holds(&self) -> bool {
        self.is_h2 <= self.is_h1 && self.is_h1 <= self.t_h1.0 && self.t_h1.1 <= self.t_h2.0
    }

    /// Whether the bracket proves `T(H) ≠ is(H)` for the whole graph.
    pub fn combined_not_good(&self) -> bool {
        let t_lower = self.t_h1.0.max(self.t_h2.0);
        t_lower > self.is_h1.max(self.is_h2)
    }
}

/// Brackets T and is on both sides of `cons4(g1, g2, i)` without search.
///
/// Second side: is equals `μ(S_2)` (the star at the universal vertex is a
/// matching of `S_2`; other stars have at most two leaves), T is bounded
/// below by the clique partition number of `L(S_2)`, which for the
/// triangle-free `S_2` is its vertex cover number `|V| − α`, and above by
/// the constructed cover. First side: is and the lower bound are computed
/// directly; the upper bound is the copy cover plus one tessellation per
/// pendant pair.
pub fn cons4_brackets(g1: &Graph, g2: &Graph, i: usize, budget: &mut Budget) -> Result<Cons4Brackets> {
    let out = cons4(g1, g2, i)?;
    let s2 = &out.h2.s2;
    let mu = max_matching(s2).len();
    let is_h2 = mu.max(2);
    let tau = s2.n() - max_independent_set(s2, budget)?.len();
    let source = crate::ops::join(g2, &Graph::complete(3 * g1.n()));
    let h2_cover = cons3_cover(&source, budget)?;

    let h1 = induced_subgraph(&out.graph, &out.h1_vertices)?;
    let mut tess = cons2_cover(g1, i, budget)?.tessellations;
    for (&p, &q) in out.pendants_u.iter().zip(&out.pendants_u_prime) {
        tess.push(Tessellation::new(vec![vec![p, out.cons2.u], vec![q, out.cons2.u_prime]]));
    }
    let h1_cover = TessellationCover::new(tess);
    h1_cover
        .validate(&h1)
        .map_err(|v| Error::Internal(format!("first side cover: {v}")))?;
    let is_h1 = star_number(&h1, budget)?.size();
    let lb_h1 = is_h1.max(local_chromatic_bound(&h1, budget)?.value);

    Ok(Cons4Brackets {
        is_h1,
        t_h1: (lb_h1, h1_cover.size()),
        is_h2,
        t_h2: (tau, h2_cover.size()),
        is_h2_identity: out.is_h2,
    })
}

fn two_sided(ctx: &Ctx) -> Vec<CheckRecord> {
    let mut b = ctx.budget();
    let instance = "cons4(C4, K2, 2)";
    match cons4_brackets(&Graph::cycle(4), &Graph::complete(2), 2, &mut b) {
        Ok(br) => vec![
            ctx.record(
                instance,
                "is(H2) from the matching identity equals μ(S_2)",
                Ok((
                    format!("{} and {}", br.is_h2_identity, br.is_h2),
                    br.is_h2 == br.is_h2_identity,
                )),
            ),
            ctx.record(
                instance,
                "T(H1) and T(H2) pinned by their brackets",
                Ok((
                    format!("T(H1) in {:?}, T(H2) in {:?}", br.t_h1, br.t_h2),
                    br.t_h1.0 == br.t_h1.1 && br.t_h2.0 == br.t_h2.1,
                )),
            ),
            ctx.record(
                instance,
                "is(H2) ≤ is(H1) ≤ T(H1) ≤ T(H2)",
                Ok((
                    format!("{} ≤ {} ≤ {} ≤ {}", br.is_h2, br.is_h1, br.t_h1.1, br.t_h2.0),
                    br.chain_holds(),
                )),
            ),
            ctx.record(
                instance,
                "not good tessellable",
                Ok((
                    format!(
                        "T ≥ {}, is = {}",
                        br.t_h1.0.max(br.t_h2.0),
                        br.is_h1.max(br.is_h2)
                    ),
                    br.combined_not_good(),
                )),
            ),
        ],
        Err(e) => vec![ctx.record(instance, "brackets computed", Err(e))],
    }
}

fn triangle_free(ctx: &Ctx, profile: Profile) -> Vec<CheckRecord> {
    (1..=profile.pick(6, 7))
        .map(|n| {
            ctx.over_graphs(n, "triangle-free ⇒ T = χ′", is_triangle_free, |g, b| {
                let t = solve_exact(g, b)?.value;
                let ci = chromatic_index(g, b)?.k;
                Ok((t != ci).then(|| format!("T = {t}, χ′ = {ci}")))
            })
        })
        .collect()
}
