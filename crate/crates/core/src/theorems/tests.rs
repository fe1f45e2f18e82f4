use serde_json::json;

use super::*;
use crate::graph::Graph;

fn k(n: usize) -> Graph {
    Graph::complete(n)
}

fn run(id: TheoremId, base: &Graph, factors: &[Graph]) -> Verdict {
    check(id, base, factors).unwrap()
}

#[test]
fn ids_round_trip() {
    for id in TheoremId::ALL {
        assert_eq!(id.to_string().parse::<TheoremId>().unwrap(), id);
        assert_eq!(id.name().parse::<TheoremId>().unwrap(), id);
    }
    assert_eq!(TheoremId::parse_list("T2, t6,T2").unwrap(), vec![TheoremId::T2, TheoremId::T6]);
    assert_eq!(TheoremId::parse_list("all").unwrap().len(), 17);
    assert!("T18".parse::<TheoremId>().is_err());
}

#[test]
fn total_invariance_on_path_of_edges() {
    let v = run(TheoremId::T2, &Graph::path(3), &[k(2), k(2), k(2)]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("gamma_t_base"), Some(&json!(2)));
    assert_eq!(v.value("gamma_t_product"), Some(&json!(2)));
}

#[test]
fn independence_on_trivial_product() {
    let v = run(TheoremId::T12, &k(2), &[k(1), k(1)]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("i"), Some(&json!([1, 1, 1])));
}

#[test]
fn uniform_well_dominated_example() {
    let p4 = Graph::path(4);
    let v = run(TheoremId::T15, &k(2), &[p4.clone(), p4.clone()]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("well_dominated"), Some(&json!(true)));
    let v = run(TheoremId::T14, &k(2), &[p4.clone(), p4]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("r_plus_ir"), Some(&json!([2])));
}

#[test]
fn not_well_dominated_example() {
    let v = run(TheoremId::T15, &Graph::path(3), &[k(2), k(2), k(2)]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("well_dominated"), Some(&json!(false)));
}

#[test]
fn hypothesis_filter() {
    let v = run(TheoremId::T6, &Graph::path(3), &[k(1), k(2), k(2)]);
    assert_eq!(v.status, Status::NotApplicable);
    let v = run(TheoremId::T2, &Graph::empty(2), &[k(2), k(2)]);
    assert_eq!(v.status, Status::NotApplicable);
    assert_eq!(v.reason.as_deref(), Some("base is disconnected"));
}

#[test]
fn efficient_chain_on_four_cycle() {
    let v = run(TheoremId::T9, &k(2), &[Graph::empty(2), Graph::empty(2)]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("chain"), Some(&json!(vec![2; 10])));
}

#[test]
fn well_total_on_complete_base() {
    for n in 2..=3 {
        let fs = vec![Graph::path(4); n];
        let v = run(TheoremId::T16, &k(n), &fs);
        assert_eq!(v.status, Status::Holds, "{v:?}");
        assert_eq!(v.value("well_total"), Some(&json!(true)));
        assert_eq!(v.value("gamma_t_product"), Some(&json!(2)));
    }
}

#[test]
fn circulant_target_only_on_members() {
    let c6 = Graph::cycle(6).unwrap();
    let v = run(TheoremId::T17, &c6, &vec![k(1); 6]);
    assert_eq!(v.status, Status::Holds);
    assert_eq!(v.value("gamma_t"), Some(&json!(4)));
    let v = run(TheoremId::T17, &Graph::path(3), &vec![k(1); 3]);
    assert_eq!(v.status, Status::NotApplicable);
}

#[test]
fn folklore_on_mixed_products() {
    let cases = [
        (Graph::cycle(4).unwrap(), vec![k(2), k(1), k(2), k(1)]),
        (Graph::empty(3), vec![k(2), Graph::path(3), k(1)]),
        (Graph::path(3), vec![k(1); 3]),
    ];
    for (b, fs) in cases {
        assert_eq!(run(TheoremId::T1, &b, &fs).status, Status::Holds);
    }
}

#[test]
fn violations_carry_sets() {
    let mut c = Checker::new();
    let s = VertexSet::from_vertices(4, [1, 3]);
    c.expect(true, || unreachable!());
    c.expect_sets(false, &[&s], || "first".into());
    c.expect(false, || "second".into());
    let v = c.finish();
    assert!(v.is_violated());
    assert_eq!(v.reason.as_deref(), Some("first"));
    assert_eq!(v.sets, vec![vec![1, 3]]);
    assert_eq!(v.value("failures"), Some(&json!(2)));
}

#[test]
fn circulant_reports() {
    let s = Solver::default();
    for k in 1..=3 {
        let r = circulant_report(&s, k).unwrap();
        assert!(r.holds);
        assert_eq!(r.gamma_t, Some(4));
        assert_eq!(r.efficient_sets[0], vec![0, 2 * k + 1]);
    }
}

#[test]
fn hunt_budget_zero_is_empty() {
    let s = Solver::default();
    let t: HuntTarget = "well-mu-glp:gamma_p".parse().unwrap();
    assert!(hunt(&s, t, 0, 1, &[k(1)]).unwrap().is_empty());
    assert!("well-mu-glp:gamma".parse::<HuntTarget>().is_err());
    assert!("nope".parse::<HuntTarget>().is_err());
}

#[test]
fn eff_hunt_confirms_circulants_and_is_deterministic() {
    let s = Solver::default();
    let a = hunt(&s, HuntTarget::EffGtHalf, 30, 7, &[]).unwrap();
    let b = hunt(&s, HuntTarget::EffGtHalf, 30, 7, &[]).unwrap();
    assert_eq!(a, b);
    let confirmed: Vec<_> = a.iter().filter(|v| v["kind"] == "circulant").collect();
    assert_eq!(confirmed.len(), 3);
    assert!(confirmed.iter().all(|v| v["holds"] == true));
}

#[test]
fn sweep_is_deterministic_across_worker_counts() {
    let pool = resolve_pool("tiny", 3).unwrap();
    let space = InstanceSpace::Exhaustive {
        bmin: 2,
        bmax: 3,
        pool,
        samples: 10,
        seed: 3,
    };
    let s = Solver::default();
    let ids = [TheoremId::T2, TheoremId::T3, TheoremId::T14];
    let one = sweep(&s, &ids, &space, Some(1)).unwrap();
    let many = sweep(&s, &ids, &space, Some(4)).unwrap();
    assert_eq!(one.records, many.records);
    assert_eq!(one.summaries, many.summaries);
}

#[test]
fn exhaustive_space_enumerates_small_bases_fully() {
    let space = InstanceSpace::Exhaustive {
        bmin: 2,
        bmax: 3,
        pool: resolve_pool("tiny", 3).unwrap(),
        samples: 100,
        seed: 0,
    };
    // K2 gets 3^2 assignments, P3 and K3 get 3^3 each.
    assert_eq!(space.instances().unwrap().len(), 9 + 27 + 27);
}
