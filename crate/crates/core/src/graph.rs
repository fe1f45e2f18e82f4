//! Simple undirected graphs with bitset adjacency rows.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// Default order limit for [`are_isomorphic`].
pub const ISOMORPHISM_LIMIT: usize = 12;

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardKind {
    Complete,
    Path,
    Cycle,
    Empty,
    Circulant,
}

impl Graph {
    /// The edgeless graph on `n` vertices (`n = 0` gives the order-0 graph).
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![VertexSet::empty(n); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge {u}-{v} outside 0..{n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Builds a graph from an adjacency predicate evaluated on `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Graph {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    g.adj[u].insert(v);
                    g.adj[v].insert(u);
                }
            }
        }
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn path(n: usize) -> Graph {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::invalid(format!("cycle needs n >= 3, got {n}")));
        }
        Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
    }

    /// Circulant graph: `i ~ i + j (mod n)` for each offset `j`. The offset
    /// list must be closed under negation mod `n`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("circulant needs n >= 1"));
        }
        if jumps.is_empty() {
            return Err(Error::invalid("circulant needs at least one offset"));
        }
        for &j in jumps {
            if j == 0 || j >= n {
                return Err(Error::invalid(format!("offset {j} outside 1..{n}")));
            }
            if !jumps.contains(&(n - j)) {
                return Err(Error::invalid(format!(
                    "offsets not closed under negation: {j} present, {} missing",
                    n - j
                )));
            }
        }
        Ok(Graph::from_fn(n, |u, v| jumps.contains(&(v - u))))
    }

    /// The circulant `C(4k+2; ±1..±k)`.
    pub fn circulant_family(k: usize) -> Result<Graph> {
        if k == 0 {
            return Err(Error::invalid("circulant family needs k >= 1"));
        }
        let n = 4 * k + 2;
        let jumps: Vec<usize> = (1..=k).chain((n - k)..n).collect();
        Graph::circulant(n, &jumps)
    }

    pub fn make_standard(kind: StandardKind, n: usize, jumps: &[usize]) -> Result<Graph> {
        if n == 0 {
            return Err(Error::invalid("standard graphs need n >= 1"));
        }
        match kind {
            StandardKind::Complete => Ok(Graph::complete(n)),
            StandardKind::Path => Ok(Graph::path(n)),
            StandardKind::Cycle => Graph::cycle(n),
            StandardKind::Empty => Ok(Graph::empty(n)),
            StandardKind::Circulant => Graph::circulant(n, jumps),
        }
    }

    /// Star `K_{1,n-1}` centered at 0.
    pub fn star(n: usize) -> Graph {
        Graph::from_fn(n, |u, _| u == 0)
    }

    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static edges")
    }

    /// Disjoint union, second graph relabeled after the first.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + off, v + off)));
        Graph::from_edges(self.n + other.n, edges).expect("relabeled edges are valid")
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    /// `N[S]`.
    pub fn closed_neighborhood_of(&self, s: &VertexSet) -> VertexSet {
        let mut out = s.clone();
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_complete(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(VertexSet::is_empty)
    }

    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.n, |u, v| !self.has_edge(u, v))
    }

    /// Subgraph induced by `s`, relabeled `0..|s|` in ascending original order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let verts = s.to_vec();
        let k = verts.len();
        Graph::from_fn(k, |a, b| self.has_edge(verts[a], verts[b]))
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable_within(&self, start: usize, within: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::empty(self.n);
        seen.insert(start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.n);
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next = next.intersection(within).difference(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    /// Connected; the order-0 graph and `K_1` count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.reachable_within(0, &self.vertices()).len() == self.n
    }

    /// Connected components, each listed by ascending least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.reachable_within(v, &left);
            left = left.difference(&c);
            out.push(c);
        }
        out
    }

    /// Shortest-path distance; `None` when `u` and `v` are disconnected.
    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        self.distances_from(u)[v]
    }

    /// BFS distances from `src` to every vertex.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let d = dist[x].expect("queued vertices are labeled");
            for y in &self.adj[x] {
                if dist[y].is_none() {
                    dist[y] = Some(d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// `(δ, Δ)`.
    pub fn degree_stats(&self) -> Result<(usize, usize)> {
        if self.n == 0 {
            return Err(Error::invalid("degree statistics of the order-0 graph"));
        }
        let degs = (0..self.n).map(|v| self.degree(v));
        let min = degs.clone().min().expect("n >= 1");
        let max = degs.max().expect("n >= 1");
        Ok((min, max))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.degree_stats().ok().map(|(d, _)| d)
    }

    /// Checks symmetry, irreflexivity and range of every adjacency row.
    pub fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u)
                && self.adj[u].universe() == self.n
                && self.adj[u].iter().all(|v| v < self.n && self.adj[v].contains(u))
        })
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

/// Isomorphism test with the default order limit.
pub fn are_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    are_isomorphic_with_limit(g1, g2, ISOMORPHISM_LIMIT)
}

/// Plain backtracking isomorphism search with degree pruning.
pub fn are_isomorphic_with_limit(g1: &Graph, g2: &Graph, limit: usize) -> Result<bool> {
    let n = g1.order();
    if n.max(g2.order()) > limit {
        return Err(Error::SizeLimitExceeded {
            what: "isomorphism order",
            limit,
            actual: n.max(g2.order()),
        });
    }
    if n != g2.order() || g1.size() != g2.size() {
        return Ok(false);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let deg1 = d1.clone();
    let deg2 = d2.clone();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(false);
    }
    // Map high-degree vertices first; they constrain the search most.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(deg1[v]));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    Ok(extend_iso(g1, g2, &deg1, &deg2, &order, 0, &mut map, &mut used))
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    g1: &Graph,
    g2: &Graph,
    deg1: &[usize],
    deg2: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..g2.order() {
        if used[w] || deg2[w] != deg1[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.has_edge(u, v) == g2.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(g1, g2, deg1, deg2, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
    }
    map[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    #[test]
    fn standard_constructors() {
        let k3 = Graph::make_standard(StandardKind::Complete, 3, &[]).unwrap();
        assert_eq!(k3.size(), 3);
        let p1 = Graph::make_standard(StandardKind::Path, 1, &[]).unwrap();
        assert_eq!((p1.order(), p1.size()), (1, 0));
        let c6 = Graph::make_standard(StandardKind::Circulant, 6, &[1, 5]).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                let expect = (i + 1) % 6 == j || (j + 1) % 6 == i;
                assert_eq!(c6.has_edge(i, j), expect, "{i} {j}");
            }
        }
        assert!(are_isomorphic(&c6, &Graph::cycle(6).unwrap()).unwrap());
    }

    #[test]
    fn invalid_standard_parameters() {
        assert!(matches!(
            Graph::make_standard(StandardKind::Cycle, 2, &[]),
            Err(Error::InvalidParameter(_))
        ));
        assert!(Graph::make_standard(StandardKind::Path, 0, &[]).is_err());
        assert!(Graph::circulant(6, &[1]).is_err());
        assert!(Graph::circulant(6, &[]).is_err());
        assert!(Graph::circulant(6, &[0, 6]).is_err());
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        assert_eq!(Graph::empty(2).complement(), Graph::complete(2));
        let c5 = Graph::cycle(5).unwrap();
        assert!(are_isomorphic(&c5, &c5.complement()).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.induced_subgraph(&set(4, &[1, 2])), Graph::complete(2));
        let c4 = Graph::cycle(4).unwrap();
        assert_eq!(c4.induced_subgraph(&set(4, &[0, 2])), Graph::empty(2));
        let c6 = Graph::cycle(6).unwrap();
        assert_eq!(c6.induced_subgraph(&set(6, &[0, 1, 2, 3])), Graph::path(4));
        assert_eq!(c6.induced_subgraph(&VertexSet::empty(6)).order(), 0);
    }

    #[test]
    fn connectivity_examples() {
        assert!(Graph::path(5).is_connected());
        assert!(!Graph::empty(2).is_connected());
        assert!(Graph::complete(1).is_connected());
        assert!(Graph::empty(0).is_connected());
        assert_eq!(Graph::empty(3).components().len(), 3);
    }

    #[test]
    fn distance_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.distance(0, 3), Some(3));
        assert_eq!(p4.distance(2, 2), Some(0));
        assert_eq!(Graph::empty(2).distance(0, 1), None);
    }

    #[test]
    fn degree_examples() {
        assert_eq!(Graph::complete(4).degree_stats().unwrap(), (3, 3));
        assert_eq!(Graph::path(3).degree_stats().unwrap(), (1, 2));
        assert_eq!(Graph::star(5).degree_stats().unwrap(), (1, 4));
        assert!(Graph::empty(0).degree_stats().is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let c4 = Graph::cycle(4).unwrap();
        assert!(are_isomorphic(&c4, &Graph::circulant(4, &[1, 3]).unwrap()).unwrap());
        assert!(!are_isomorphic(&Graph::path(4), &Graph::star(4)).unwrap());
        let big = Graph::path(13);
        assert!(matches!(
            are_isomorphic(&big, &big),
            Err(Error::SizeLimitExceeded { .. })
        ));
        assert!(are_isomorphic_with_limit(&big, &big, 13).unwrap());
    }

    #[test]
    fn petersen_is_cubic() {
        let p = Graph::petersen();
        assert_eq!(p.degree_stats().unwrap(), (3, 3));
        assert_eq!(p.size(), 15);
        assert!(p.check_invariants());
    }

    #[test]
    fn circulant_family_shape() {
        let g = Graph::circulant_family(2).unwrap();
        assert_eq!(g.order(), 10);
        assert_eq!(g.degree_stats().unwrap(), (4, 4));
    }
}
