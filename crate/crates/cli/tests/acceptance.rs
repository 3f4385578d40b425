//! Acceptance criteria 1 to 11. Prints one PASS or FAIL line per criterion
//! and exits non-zero if any fails.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use tessella_core::analysis::{conjecture_scan, cons4_brackets, gtr, OddCycleRule};
use tessella_core::canon::enumerate_graphs;
use tessella_core::constructions::{
    cons2, cons2_cover, cons3, cons3_cover, cons3_formula, join_partition_cover, mycielski_gap,
    Cons2Variant,
};
use tessella_core::io::{emit_edge_list, parse_edge_list};
use tessella_core::ops::{add_universal, disjoint_union, subdivide};
use tessella_core::tessellation::{brute_force_oracle, feasible, lower_bound, solve_exact};
use tessella_core::{Budget, Graph};

use support::*;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn t(g: &Graph) -> usize {
    solve_exact(g, &mut Budget::default()).expect("decided").value
}

fn classes(n: usize) -> Vec<Graph> {
    enumerate_graphs(n).unwrap().to_vec()
}

fn oracle_equivalence() -> Outcome {
    let mut count = 0;
    for n in 0..=5 {
        for g in classes(n) {
            let (a, b) = (t(&g), brute_force_oracle(&g).unwrap());
            ensure!(a == b, "solver {a} vs oracle {b} on {:?}", g.edges());
            count += 1;
        }
    }
    for g in labelled_graphs(6, 10) {
        let (a, b) = (t(&g), brute_force_oracle(&g).unwrap());
        ensure!(a == b, "solver {a} vs oracle {b} on {:?}", g.edges());
        count += 1;
    }
    Ok(format!("{count} graphs agree"))
}

fn triangle_free_identity() -> Outcome {
    let mut count = 0;
    for n in 1..=7 {
        for g in classes(n).into_iter().filter(is_triangle_free) {
            let (a, b) = (t(&g), chromatic_index(&g));
            ensure!(a == b, "T = {a} but χ′ = {b} on {:?}", g.edges());
            count += 1;
        }
    }
    ensure!(count == 1 + 2 + 3 + 7 + 14 + 38 + 107, "saw {count} triangle-free classes");
    Ok(format!("{count} triangle-free graphs"))
}

fn universal_bracket_and_lower_bound() -> Outcome {
    let mut joins = 0;
    for n in 1..=5 {
        for h in classes(n) {
            let chi = chromatic(&complement(&h));
            let th = t(&add_universal(&h));
            let upper = chi + h.max_degree() + 1;
            ensure!(chi <= th && th <= upper, "{chi} ≤ {th} ≤ {upper} fails on {:?}", h.edges());
            joins += 1;
        }
    }
    let mut bounded = 0;
    for n in 1..=6 {
        for g in classes(n) {
            let lb = lower_bound(&g, &mut Budget::default()).unwrap();
            ensure!(lb >= star_number(&g), "lower bound below is on {:?}", g.edges());
            ensure!(lb <= t(&g), "lower bound {lb} above T on {:?}", g.edges());
            bounded += 1;
        }
    }
    Ok(format!("{joins} joins, {bounded} lower bounds"))
}

fn join_partition() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for g in classes(n) {
            let theta = chromatic(&complement(&g));
            if theta < 2 * g.max_degree() + 1 {
                continue;
            }
            let h = add_universal(&g);
            let cover = join_partition_cover(&g, &mut Budget::default()).unwrap();
            ensure!(cover_is_valid(&h, &cover), "invalid cover on {:?}", g.edges());
            ensure!(cover.size() == theta, "cover {} vs θ {theta}", cover.size());
            let lb = lower_bound(&h, &mut Budget::default()).unwrap();
            ensure!(lb == theta, "lower bound {lb} vs θ {theta} on {:?}", g.edges());
            if n <= 5 {
                ensure!(t(&h) == theta, "solver disagrees on {:?}", g.edges());
            }
            count += 1;
        }
    }
    ensure!(count > 0, "no graph qualified");
    Ok(format!("{count} graphs with θ ≥ 2Δ+1"))
}

fn cons3_formula_check() -> Outcome {
    let paw = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap();
    let named = [
        ("C4", Graph::cycle(4)),
        ("K4", Graph::complete(4)),
        ("K1,4", Graph::star(4)),
        ("paw+K2", disjoint_union(&paw, &Graph::complete(2))),
    ];
    let mut values = Vec::new();
    for (name, g) in named {
        let want = g.n() + g.edge_count() - alpha(&g);
        let mut b = Budget::default();
        ensure!(cons3_formula(&g, &mut b).unwrap() == want, "{name}: formula");
        let h = cons3(&g).unwrap().graph;
        let cover = cons3_cover(&g, &mut b).unwrap();
        ensure!(cover_is_valid(&h, &cover), "{name}: invalid cover");
        ensure!(cover.size() == want, "{name}: cover {} vs {want}", cover.size());
        let lb = lower_bound(&h, &mut b).unwrap();
        ensure!(lb == want, "{name}: lower bound {lb} vs {want}");
        if name == "C4" {
            ensure!(is_cycle_plus_apex(&h, 12), "C4 does not give C12 ∨ u");
            ensure!(t(&h) == 6, "T(C12 ∨ u) = {}", t(&h));
        }
        values.push(format!("{name}={want}"));
    }
    Ok(values.join(" "))
}

/// Whether `h` is `C_len` joined with one vertex.
fn is_cycle_plus_apex(h: &Graph, len: usize) -> bool {
    let n = h.n();
    let Some(apex) = (0..n).find(|&v| h.degree(v) == n - 1) else {
        return false;
    };
    let rest: Vec<usize> = (0..n).filter(|&v| v != apex).collect();
    if rest.len() != len || rest.iter().any(|&v| h.degree(v) != 3) {
        return false;
    }
    // walk the 2-regular remainder from one vertex back to itself
    let (mut prev, mut cur) = (usize::MAX, rest[0]);
    for step in 1..=len {
        let next = rest.iter().copied().find(|&w| w != prev && w != cur && h.has_edge(cur, w));
        let Some(next) = next else { return false };
        (prev, cur) = (cur, next);
        if cur == rest[0] {
            return step == len;
        }
    }
    false
}

fn matching_identity() -> Outcome {
    let mut count = 0;
    for n in 1..=6 {
        for g in classes(n) {
            let lhs = matching_number(&subdivide_twice(&g));
            let rhs = g.edge_count() + matching_number(&g);
            ensure!(lhs == rhs, "{lhs} ≠ {rhs} on {:?}", g.edges());
            let engine = tessella_core::invariants::max_matching(&subdivide(&g, 2)).len();
            ensure!(engine == lhs, "engine {engine} vs reference {lhs}");
            count += 1;
        }
    }
    Ok(format!("{count} graphs"))
}

fn mycielski_gap_four() -> Outcome {
    let g = mycielski_gap(4).unwrap();
    ensure!(g.n() == 12, "{} vertices", g.n());
    let is = star_number(&g);
    ensure!(is == 2, "is = {is}");
    let lb = lower_bound(&g, &mut Budget::default()).unwrap();
    ensure!(lb == 4, "lower bound {lb}");
    let cover = feasible(&g, 4, &mut Budget::default()).unwrap().ok_or("no 4-cover")?;
    ensure!(cover_is_valid(&g, &cover) && cover.size() <= 4, "bad 4-cover");
    ensure!(t(&g) == 4, "solver gives {}", t(&g));
    Ok(format!("is=2 T=4 gap={}", 4 - is))
}

fn cons2_family() -> Outcome {
    let mut out = Vec::new();
    for (name, g) in [("C4", Graph::cycle(4)), ("2K2", Graph::matching(2))] {
        for i in 1..=2 {
            let mut b = Budget::default();
            let h = cons2(&g, i, Cons2Variant::I).unwrap().graph;
            let cover = cons2_cover(&g, i, &mut b).unwrap();
            ensure!(cover_is_valid(&h, &cover), "{name}, i={i}: invalid cover");
            ensure!(cover.size() == g.n(), "{name}, i={i}: cover {}", cover.size());
            let lb = lower_bound(&h, &mut b).unwrap();
            ensure!(lb == g.n(), "{name}, i={i}: lower bound {lb}");
            let good = gtr(&h, &mut b).unwrap().good;
            let colourable = chromatic(&g) <= i;
            ensure!(good == colourable, "{name}, i={i}: good {good}, colourable {colourable}");
            out.push(format!("{name}/{i}:{}", if good { "good" } else { "not-good" }));
        }
    }
    Ok(out.join(" "))
}

fn cons4_chain() -> Outcome {
    let (g1, g2) = (Graph::cycle(4), Graph::complete(2));
    let br = cons4_brackets(&g1, &g2, 2, &mut Budget::default()).map_err(|e| e.to_string())?;
    // the second side is built on K2 ∨ K12 = K14
    let k14 = Graph::complete(14);
    let (edges, mu) = (k14.edge_count(), 7);
    ensure!(br.is_h2 == edges + mu && br.is_h2_identity == edges + mu, "is(H2) = {}", br.is_h2);
    let formula = 14 + edges - 1;
    ensure!(br.t_h2 == (formula, formula), "T(H2) in {:?}", br.t_h2);
    let cover = cons3_cover(&k14, &mut Budget::default()).unwrap();
    ensure!(cover_is_valid(&cons3(&k14).unwrap().graph, &cover), "invalid H2 cover");
    ensure!(br.t_h1.0 == br.t_h1.1, "T(H1) in {:?}", br.t_h1);
    ensure!(br.chain_holds(), "chain fails: {br:?}");
    let (t_all, is_all) = (br.t_h1.0.max(br.t_h2.0), br.is_h1.max(br.is_h2));
    ensure!(t_all > is_all, "combined graph good: T ≥ {t_all}, is = {is_all}");
    Ok(format!(
        "{} ≤ {} ≤ {} ≤ {}, T ≥ {t_all} > is = {is_all}",
        br.is_h2, br.is_h1, br.t_h1.1, br.t_h2.0
    ))
}

fn scan_five() -> Outcome {
    let a = conjecture_scan(5).map_err(|e| e.to_string())?;
    let b = conjecture_scan(5).map_err(|e| e.to_string())?;
    ensure!(a == b, "two runs differ");
    let counts: Vec<usize> = a.checked.iter().map(|c| c.graphs).collect();
    ensure!(counts == [1, 2, 4, 11, 34], "class counts {counts:?}");
    ensure!(a.undecided.is_empty(), "{} undecided", a.undecided.len());
    ensure!(a.interpretations.len() == 2, "both readings reported");
    let mut summary = Vec::new();
    for rule in OddCycleRule::BOTH {
        let r = a.interpretation(rule);
        ensure!(r.counterexamples.iter().all(|c| c.oracle_checked), "{rule:?}: unconfirmed");
        ensure!(r.agreements + r.counterexamples.len() == a.total_checked(), "{rule:?}: tally");
        summary.push(format!("{rule:?}: {} counterexamples", r.counterexamples.len()));
    }
    Ok(summary.join(", "))
}

fn cli_contract() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let d = dir.path();
    for n in 0..=6 {
        for g in classes(n) {
            let text = emit_edge_list(&g, &[]);
            ensure!(parse_edge_list(&text).unwrap().graph == g, "core round trip");
        }
    }
    // two complements through the binary give back the input
    for (k, g) in (1..=5).flat_map(classes).enumerate() {
        let f = write_graph(d, &format!("g{k}.txt"), &g);
        let once = tessella(&["generate", "complement", "--input", &f, "--out", "c.txt"], d);
        ensure!(code(&once) == 0, "generate failed");
        let twice = tessella(&["generate", "complement", "--input", "c.txt"], d);
        let back = parse_edge_list(&stdout(&twice)).unwrap().graph;
        ensure!(back == g, "CLI round trip changed {:?}", g.edges());
    }

    let c5 = write_graph(d, "c5.txt", &Graph::cycle(5));
    let mg4 = write_graph(d, "mg4.txt", &mycielski_gap(4).unwrap());
    std::fs::write(d.join("bad.txt"), "p 3 1\ne 0 5\n").unwrap();
    std::fs::write(d.join("wrong.json"), "{\"tessellations\": [[[0, 1]]]}").unwrap();
    for args in [
        vec!["solve", &c5],
        vec!["gtr", &mg4],
        vec!["verify", "thm3", "--budget", "small"],
        vec!["scan", "--n-max", "5"],
        vec!["generate", "mycielski-gap", "--j", "4"],
    ] {
        let (a, b) = (tessella(&args, d), tessella(&args, d));
        ensure!(a.stdout == b.stdout && a.status == b.status, "{args:?} not deterministic");
    }
    let solved = tessella(&["solve", &c5], d);
    ensure!(stdout(&solved).trim() == "T=3 is=2 gap=1", "solve c5: {}", stdout(&solved));
    let cases: [(&[&str], i32); 7] = [
        (&["solve", &c5], 0),
        (&["verify", "thm3"], 0),
        (&["check-cover", &c5, "wrong.json"], 1),
        (&["solve", "bad.txt"], 2),
        (&["verify", "bogus-suite"], 2),
        (&["scan", "--n-max", "99"], 2),
        (&["solve", &mg4, "--budget", "5"], 3),
    ];
    for (args, want) in cases {
        let got = code(&tessella(args, d));
        ensure!(got == want, "{args:?} exited {got}, expected {want}");
    }
    Ok("round trips, determinism and exit statuses".into())
}

fn main() {
    if std::env::args().any(|a| a == "--list") {
        return;
    }
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("solver agrees with the brute-force oracle", oracle_equivalence),
        ("T = χ′ on triangle-free graphs up to 7 vertices", triangle_free_identity),
        ("universal-vertex bracket and lower bound", universal_bracket_and_lower_bound),
        ("join partition cover pins T at θ", join_partition),
        ("line-graph construction meets |V|+|E|−α", cons3_formula_check),
        ("μ(S_2(G)) = |E| + μ(G) up to 6 vertices", matching_identity),
        ("Mycielski gap graph has is 2 and T 4", mycielski_gap_four),
        ("copy construction covers with |V| tessellations", cons2_family),
        ("two-sided construction bracket chain", cons4_chain),
        ("perfect tessellability scan up to 5 vertices", scan_five),
        ("CLI round trip, determinism and exit statuses", cli_contract),
    ];
    let mut failed = 0;
    for (idx, (title, run)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {:>2}  {title}: {detail} ({secs:.2}s)", idx + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}  {title}: {why} ({secs:.2}s)", idx + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
