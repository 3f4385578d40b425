use super::*;
use crate::budget::{Budget, DEFAULT_NODE_LIMIT};
use crate::constructions::mycielski_gap;
use crate::error::Error;
use crate::graph::Graph;
use crate::ops::add_universal;
use crate::patterns::Pattern;

fn gem() -> Graph {
    add_universal(&Graph::path(4))
}

#[test]
fn gtr_examples() {
    let v = gtr(&Graph::cycle(4), &mut Budget::default()).unwrap();
    assert!(v.good);
    assert_eq!((v.t_value, v.is_value, v.gap), (Some(2), 2, Some(0)));

    let v = gtr(&Graph::cycle(5), &mut Budget::default()).unwrap();
    assert!(!v.good);
    assert_eq!((v.t_value, v.is_value, v.gap), (Some(3), 2, Some(1)));
    v.cover.validate(&Graph::cycle(5)).unwrap();

    let g = mycielski_gap(4).unwrap();
    let v = gtr(&g, &mut Budget::default()).unwrap();
    assert!(!v.good);
    assert_eq!(v.gap, Some(2));
}

#[test]
fn gtr_rejects_a_bad_hint() {
    let g = Graph::cycle(4);
    let bogus = crate::tessellation::TessellationCover::new(vec![]);
    let err = gtr_with_cover(&g, Some(&bogus), &mut Budget::default()).unwrap_err();
    assert!(matches!(err, Error::InvalidParameter(_)));
}

#[test]
fn perfect_examples() {
    let r = perfect_tessellable(&Graph::complete(4), DEFAULT_NODE_LIMIT).unwrap();
    assert!(r.perfect && r.witness.is_none());
    let r = perfect_tessellable(&Graph::cycle(5), DEFAULT_NODE_LIMIT).unwrap();
    assert_eq!((r.perfect, r.witness), (false, Some(vec![0, 1, 2, 3, 4])));
    assert!(perfect_tessellable(&Graph::path(4), DEFAULT_NODE_LIMIT).unwrap().perfect);
    let r = perfect_tessellable(&gem(), DEFAULT_NODE_LIMIT).unwrap();
    assert!(!r.perfect);
}

#[test]
fn forbidden_examples() {
    let w4 = add_universal(&Graph::cycle(4));
    let c = forbidden_free(&w4, OddCycleRule::HolesOnly);
    assert_eq!((c.free, c.pattern), (false, Some(Pattern::W4)));
    assert_eq!(c.witness.map(|w| w.len()), Some(5));

    let c = forbidden_free(&Graph::cycle(7), OddCycleRule::HolesOnly);
    assert_eq!((c.free, c.pattern), (false, Some(Pattern::OddHole)));

    assert!(forbidden_free(&Graph::cycle(6), OddCycleRule::HolesOnly).free);
    assert!(forbidden_free(&Graph::complete(3), OddCycleRule::HolesOnly).free);
    let c = forbidden_free(&Graph::complete(3), OddCycleRule::WithTriangle);
    assert_eq!(c.pattern, Some(Pattern::Triangle));
}

#[test]
fn scan_small_orders() {
    let r = conjecture_scan(1).unwrap();
    assert_eq!(r.total_checked(), 1);
    for rule in OddCycleRule::BOTH {
        assert!(r.interpretation(rule).counterexamples.is_empty());
    }

    let r = conjecture_scan(4).unwrap();
    assert_eq!(r.checked.last().unwrap().graphs, 11);
    assert!(r.undecided.is_empty());
    assert!(r.interpretation(OddCycleRule::HolesOnly).counterexamples.is_empty());
    assert_eq!(r.interpretation(OddCycleRule::HolesOnly).agreements, r.total_checked());
}

#[test]
fn scan_order_five_classifies_c5_and_gem() {
    let r = conjecture_scan(5).unwrap();
    assert_eq!(r.checked.iter().map(|c| c.graphs).collect::<Vec<_>>(), [1, 2, 4, 11, 34]);
    let holes = r.interpretation(OddCycleRule::HolesOnly);
    // both sides reject C5 and the gem, so neither is a counterexample
    for g in [Graph::cycle(5), gem()] {
        assert!(!forbidden_free(&g, OddCycleRule::HolesOnly).free);
        assert!(!perfect_tessellable(&g, DEFAULT_NODE_LIMIT).unwrap().perfect);
        assert!(holes.counterexamples.iter().all(|c| c.edges != g.edges()));
    }
    for c in &holes.counterexamples {
        assert_ne!(c.perfect, c.forbidden_free);
    }
}

#[test]
fn scan_cap() {
    let err = conjecture_scan(8).unwrap_err();
    assert!(matches!(err, Error::CapExceeded { value: 8, cap: 7, .. }), "{err}");
}

#[test]
fn suite_names_round_trip() {
    for s in std::iter::once(Suite::All).chain(Suite::EACH) {
        assert_eq!(s.name().parse::<Suite>().unwrap(), s);
    }
    assert!("thm9".parse::<Suite>().is_err());
    assert!("huge".parse::<Profile>().is_err());
}

#[test]
fn verify_small_suites_pass() {
    for s in [Suite::Lemma1, Suite::Thm1, Suite::Thm3, Suite::Thm4] {
        let r = verify_theorems(s, Profile::Small);
        let failures: Vec<_> = r.checks.iter().filter(|c| c.status == Status::Fail).collect();
        assert!(failures.is_empty(), "{s}: {failures:#?}");
        assert!(!r.checks.is_empty());
    }
}

#[test]
fn cons4_brackets_separate() {
    let br = cons4_brackets(&Graph::cycle(4), &Graph::complete(2), 2, &mut Budget::default())
        .unwrap();
    assert_eq!(br.is_h2, 98);
    assert_eq!(br.is_h2_identity, 98);
    assert_eq!(br.t_h2, (104, 104));
    assert_eq!(br.is_h1, 102);
    assert_eq!(br.t_h1, (102, 102));
    assert!(br.chain_holds());
    assert!(br.combined_not_good());
}
