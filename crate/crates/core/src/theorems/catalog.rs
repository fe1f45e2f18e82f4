//! Named small graphs, factor pools, base enumeration and random generators.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Graph};
use crate::io::parse_graph6_lines;

/// Largest base order [`connected_graphs`] will enumerate.
pub const MAX_ENUMERATED_ORDER: usize = 6;

/// Edge probabilities for random bases.
pub const EDGE_PROBABILITIES: [f64; 3] = [0.3, 0.5, 0.7];

/// `(name, graph)` for every catalog entry, ordered by order then name.
pub fn factor_catalog() -> Vec<(&'static str, Graph)> {
    let k1 = Graph::complete(1);
    let k2 = Graph::complete(2);
    let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).expect("static edges");
    let diamond =
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("static edges");
    vec![
        ("K1", k1.clone()),
        ("K2", k2.clone()),
        ("2K1", Graph::empty(2)),
        ("P3", Graph::path(3)),
        ("K3", Graph::complete(3)),
        ("3K1", Graph::empty(3)),
        ("K2+K1", k2.disjoint_union(&k1)),
        ("P4", Graph::path(4)),
        ("C4", Graph::cycle(4).expect("n >= 3")),
        ("paw", paw),
        ("diamond", diamond),
        ("C5", Graph::cycle(5).expect("n >= 3")),
        ("C6", Graph::cycle(6).expect("n >= 3")),
    ]
}

/// Resolves a pool name or a path to a file of graph6 lines.
///
/// Named pools: `default` (catalog entries of order `<= fmax`), `tiny`
/// (`K1, K2, 2K1`), `k1` / `contains-K1` (only `K1`).
pub fn resolve_pool(spec: &str, fmax: usize) -> Result<Vec<Graph>> {
    let pick = |names: &[&str]| -> Vec<Graph> {
        factor_catalog()
            .into_iter()
            .filter(|(n, _)| names.contains(n))
            .map(|(_, g)| g)
            .collect()
    };
    let pool = match spec {
        "default" => factor_catalog()
            .into_iter()
            .filter(|(_, g)| g.order() <= fmax)
            .map(|(_, g)| g)
            .collect(),
        "tiny" => pick(&["K1", "K2", "2K1"]),
        "k1" | "contains-K1" => pick(&["K1"]),
        path => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::invalid(format!("pool '{path}': {e}")))?;
            parse_graph6_lines(&text)?
        }
    };
    if pool.is_empty() {
        return Err(Error::invalid(format!("pool '{spec}' is empty")));
    }
    if pool.iter().any(|g| g.order() == 0) {
        return Err(Error::invalid(format!("pool '{spec}' contains the order-0 graph")));
    }
    Ok(pool)
}

/// One representative of every connected graph of order `n`, up to
/// isomorphism, in order of first appearance by edge bitmask.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_ENUMERATED_ORDER {
        return Err(Error::SizeLimitExceeded {
            what: "enumerated base order",
            limit: MAX_ENUMERATED_ORDER,
            actual: n,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut reps: Vec<Graph> = Vec::new();
    for mask in 0u64..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).expect("valid pairs");
        if !g.is_connected() {
            continue;
        }
        let seen = reps
            .iter()
            .any(|r| are_isomorphic(r, &g).expect("order within isomorphism limit"));
        if !seen {
            reps.push(g);
        }
    }
    Ok(reps)
}

/// Connected bases of every order in `lo..=hi`.
pub fn connected_bases(lo: usize, hi: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(connected_graphs(n)?);
    }
    Ok(out)
}

/// Erdős–Rényi graph with `p` drawn from [`EDGE_PROBABILITIES`], redrawn
/// until connected.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let p = *EDGE_PROBABILITIES.choose(rng).expect("nonempty");
        let g = Graph::from_fn(n, |_, _| rng.gen_bool(p));
        if g.is_connected() {
            return g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349: 1, 1, 1, 2, 6, 21, 112.
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        assert!(connected_graphs(7).is_err());
    }

    #[test]
    fn pools() {
        assert_eq!(resolve_pool("tiny", 3).unwrap().len(), 3);
        assert_eq!(resolve_pool("contains-K1", 3).unwrap(), vec![Graph::complete(1)]);
        let d = resolve_pool("default", 3).unwrap();
        assert!(d.iter().all(|g| g.order() <= 3));
        assert_eq!(d.len(), 7);
        assert!(resolve_pool("/nonexistent/pool.g6", 3).is_err());
    }

    #[test]
    fn catalog_has_no_duplicates() {
        let cat = factor_catalog();
        for (i, (a, ga)) in cat.iter().enumerate() {
            for (b, gb) in &cat[i + 1..] {
                assert!(!are_isomorphic(ga, gb).unwrap(), "{a} ~ {b}");
            }
        }
    }
}
