use glpdom::graph::are_isomorphic;
use glpdom::theorems::{check, resolve_pool, sweep, InstanceSpace, Status, TheoremId};
use glpdom::{Graph, Guards, ParamName, ProductGraph, Solver};
use serde_json::json;

fn k(n: usize) -> Graph {
    Graph::complete(n)
}

#[test]
fn four_cycle_from_two_edgeless_factors() {
    let p = ProductGraph::build(&k(2), &[Graph::empty(2), Graph::empty(2)]).unwrap();
    assert!(are_isomorphic(p.graph(), &Graph::cycle(4).unwrap()).unwrap());
}

#[test]
fn total_domination_on_path_of_edges() {
    let v = check(TheoremId::T2, &Graph::path(3), &[k(2), k(2), k(2)]).unwrap();
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("gamma_t_product"), Some(&json!(2)));
}

#[test]
fn well_dominated_examples() {
    let s = Solver::default();
    let ii = ParamName::Gamma.pair();
    let p = ProductGraph::build(&k(2), &[Graph::path(4), Graph::path(4)]).unwrap();
    assert!(s.is_well_ab_dominated(p.graph(), ii).unwrap());
    assert_eq!(s.gamma_ab(p.graph(), ii).unwrap().unwrap().value, 2);
    let p = ProductGraph::build(&Graph::path(3), &[k(2), k(2), k(2)]).unwrap();
    assert!(!s.is_well_ab_dominated(p.graph(), ii).unwrap());
    for id in [TheoremId::T14, TheoremId::T15] {
        assert_ne!(check(id, &Graph::path(3), &[k(2), k(2), k(2)]).unwrap().status, Status::Violated);
    }
}

#[test]
fn factor_of_order_one_is_not_applicable() {
    for id in [TheoremId::T5, TheoremId::T6, TheoremId::T7] {
        let v = check(id, &Graph::path(3), &[k(1), k(2), k(2)]).unwrap();
        assert_eq!(v.status, Status::NotApplicable, "{id}");
    }
}

#[test]
fn core_checks_hold_on_a_small_exhaustive_space() {
    let ids: Vec<TheoremId> = TheoremId::ALL
        .into_iter()
        .filter(|id| !matches!(id, TheoremId::T10 | TheoremId::T11))
        .collect();
    let space = InstanceSpace::Exhaustive {
        bmin: 2,
        bmax: 3,
        pool: resolve_pool("default", 3).unwrap(),
        samples: 20,
        seed: 5,
    };
    let out = sweep(&Solver::default(), &ids, &space, None).unwrap();
    assert_eq!(out.violations(), 0, "{:?}", out.first_violation());
}

// With the empty complement counted as free of isolated vertices, K2[(K2,K2)]
// is K4 and {0} is already restrained dominating, so the union {0,1} built
// from the factor sets is not minimal. Both chain checks report it.
#[test]
fn restrained_union_is_not_minimal_in_k4() {
    for id in [TheoremId::T10, TheoremId::T11] {
        let v = check(id, &k(2), &[k(2), k(2)]).unwrap();
        assert!(v.is_violated(), "{id}");
        assert_eq!(v.value("failed_pairs"), Some(&json!(["(I,T)"])));
    }
    let s = Solver::default();
    let r = s.gamma_ab(&k(4), ParamName::GammaR.pair()).unwrap().unwrap();
    assert_eq!(r.value, 1);
}

#[test]
fn guard_breach_becomes_not_applicable_in_sweeps() {
    let solver = Solver::new(Guards::default().with_subset_order(3));
    let space = InstanceSpace::Exhaustive {
        bmin: 2,
        bmax: 2,
        pool: resolve_pool("tiny", 3).unwrap(),
        samples: 9,
        seed: 0,
    };
    let out = sweep(&solver, &[TheoremId::T2], &space, Some(1)).unwrap();
    let big = out.records.iter().find(|r| r.factors_g6.iter().all(|f| f != "@")).unwrap();
    assert_eq!(big.status, Status::NotApplicable);
    assert!(big.reason.as_deref().unwrap().starts_with("guard:"));
}
