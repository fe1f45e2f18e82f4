use glpdom::domination::is_ab_dominating;
use glpdom::graph::are_isomorphic;
use glpdom::io::{parse_edgelist, parse_graph6, to_edgelist, to_graph6};
use glpdom::{Graph, ParamName, ProductGraph, Solver, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut it = bits.into_iter();
            Graph::from_fn(n, |_, _| it.next().unwrap())
        })
    })
}

fn product(max_base: usize, max_factor: usize) -> impl Strategy<Value = (Graph, Vec<Graph>)> {
    graph(max_base).prop_flat_map(move |b| {
        let n = b.order();
        (Just(b), proptest::collection::vec(graph(max_factor), n))
    })
}

/// Relabels `g` so vertex `v` becomes `perm[v]`.
fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    Graph::from_edges(g.order(), g.edges().map(|(u, v)| (perm[u], perm[v]))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_and_edgelist_round_trip(g in graph(20)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        prop_assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        let c = g.complement();
        prop_assert!(c.check_invariants());
        prop_assert_eq!(g.size() + c.size(), g.order() * (g.order() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn isomorphism_survives_relabeling(g in graph(9), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.order()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = relabel(&g, &perm);
        prop_assert!(are_isomorphic(&g, &g).unwrap());
        prop_assert!(are_isomorphic(&g, &h).unwrap());
        prop_assert!(are_isomorphic(&h, &g).unwrap());
    }

    #[test]
    fn product_order_and_blocks((b, fs) in product(5, 3)) {
        let p = ProductGraph::build(&b, &fs).unwrap();
        prop_assert_eq!(p.order(), fs.iter().map(Graph::order).sum::<usize>());
        for v in 0..p.order() {
            let (i, u) = p.locate(v);
            prop_assert_eq!(p.vertex(i, u), v);
        }
        for (i, f) in fs.iter().enumerate() {
            let local = f.vertices();
            prop_assert_eq!(p.restrict_to_block(&p.embed_in_block(i, &local), i), local);
            // each block induces its factor
            prop_assert_eq!(p.graph().induced_subgraph(&p.block(i)), f.clone());
        }
    }

    #[test]
    fn adjacency_follows_the_definition((b, fs) in product(4, 3)) {
        let p = ProductGraph::build(&b, &fs).unwrap();
        let g = p.graph();
        for x in 0..g.order() {
            for y in x + 1..g.order() {
                let ((i, u), (j, v)) = (p.locate(x), p.locate(y));
                let expect = if i == j { fs[i].has_edge(u, v) } else { b.has_edge(i, j) };
                prop_assert_eq!(g.has_edge(x, y), expect);
            }
        }
    }

    #[test]
    fn layers_copy_the_base((b, fs) in product(4, 3)) {
        let p = ProductGraph::build(&b, &fs).unwrap();
        for choice in p.layer_choices().take(32) {
            let layer = p.g_layer(&choice).unwrap();
            prop_assert_eq!(p.graph().induced_subgraph(&layer), b.clone());
        }
    }

    #[test]
    fn distances_lift_between_blocks((b, fs) in product(5, 2)) {
        prop_assume!(b.is_connected() && b.order() >= 2);
        let p = ProductGraph::build(&b, &fs).unwrap();
        let g = p.graph();
        prop_assert!(g.is_connected());
        for x in 0..g.order() {
            for y in 0..g.order() {
                let ((i, _), (j, _)) = (p.locate(x), p.locate(y));
                if i != j {
                    prop_assert_eq!(g.distance(x, y), b.distance(i, j));
                }
            }
        }
    }

    #[test]
    fn uniform_factors_give_the_lexicographic_product((b, f) in (graph(4), graph(3))) {
        let fs = vec![f.clone(); b.order()];
        let p = ProductGraph::build(&b, &fs).unwrap();
        let m = f.order();
        let lex = Graph::from_fn(b.order() * m, |x, y| {
            let (i, u, j, v) = (x / m, x % m, y / m, y % m);
            b.has_edge(i, j) || (i == j && f.has_edge(u, v))
        });
        prop_assert_eq!(p.graph().clone(), lex);
    }

    #[test]
    fn witnesses_are_valid_and_ordered(g in graph(9)) {
        let s = Solver::default();
        for name in ParamName::NAMED {
            let pair = name.pair();
            let lo = s.gamma_ab(&g, pair).unwrap();
            let hi = s.upper_gamma_ab(&g, pair).unwrap();
            prop_assert_eq!(lo.is_some(), hi.is_some());
            if let (Some(lo), Some(hi)) = (lo, hi) {
                prop_assert!(lo.value <= hi.value);
                for w in [&lo.witness, &hi.witness] {
                    prop_assert!(is_ab_dominating(&g, w, pair));
                    prop_assert!(s.is_minimal_ab_dominating(&g, w, pair).unwrap());
                }
            }
        }
    }

    #[test]
    fn minimal_family_is_an_antichain(g in graph(8)) {
        let s = Solver::default();
        for name in [ParamName::Gamma, ParamName::GammaT, ParamName::GammaR, ParamName::GammaOc] {
            let fam = s.enumerate_minimal(&g, name.pair()).unwrap();
            for (a, x) in fam.iter().enumerate() {
                for y in &fam[a + 1..] {
                    prop_assert!(!x.is_subset(y) && !y.is_subset(x));
                }
            }
            prop_assert_eq!(fam.first().map(VertexSet::len), s.gamma_ab(&g, name.pair()).unwrap().map(|e| e.value));
        }
    }

    #[test]
    fn total_domination_ignores_factors((b, fs) in product(4, 3)) {
        prop_assume!(b.is_connected() && b.order() >= 2);
        let s = Solver::default();
        let t = ParamName::GammaT;
        let p = ProductGraph::build(&b, &fs).unwrap();
        let lhs = s.param(&b, t, false).unwrap().map(|e| e.value);
        let rhs = s.param(p.graph(), t, false).unwrap().map(|e| e.value);
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn edgeless_base_splits_into_factors() {
    let fs = [Graph::path(3), Graph::complete(2), Graph::cycle(4).unwrap()];
    let p = ProductGraph::build(&Graph::empty(3), &fs).unwrap();
    let union = fs[0].disjoint_union(&fs[1]).disjoint_union(&fs[2]);
    assert_eq!(p.graph(), &union);
    assert_eq!(p.graph().components().len(), 3);
}
