//! Generalized lexicographic products `G[Φ]`.
//!
//! Factor `F_i` replaces base vertex `i`; vertices of distinct blocks `i != j`
//! are adjacent exactly when `ij` is a base edge. Blocks are laid out
//! contiguously in base order.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// The product graph together with its block layout.
#[derive(Debug, Clone)]
pub struct ProductGraph {
    graph: Graph,
    base: Graph,
    factors: Vec<Graph>,
    offsets: Vec<usize>,
}

impl ProductGraph {
    pub fn build(base: &Graph, factors: &[Graph]) -> Result<ProductGraph> {
        if factors.len() != base.order() {
            return Err(Error::invalid(format!(
                "{} factors for a base of order {}",
                factors.len(),
                base.order()
            )));
        }
        if let Some(i) = factors.iter().position(|f| f.order() == 0) {
            return Err(Error::invalid(format!("factor {i} has order 0")));
        }
        let mut offsets = Vec::with_capacity(factors.len() + 1);
        let mut total = 0;
        for f in factors {
            offsets.push(total);
            total += f.order();
        }
        offsets.push(total);

        let block_of: Vec<usize> = (0..factors.len())
            .flat_map(|i| std::iter::repeat_n(i, factors[i].order()))
            .collect();
        let graph = Graph::from_fn(total, |x, y| {
            let (i, j) = (block_of[x], block_of[y]);
            if i == j {
                factors[i].has_edge(x - offsets[i], y - offsets[i])
            } else {
                base.has_edge(i, j)
            }
        });
        Ok(ProductGraph {
            graph,
            base: base.clone(),
            factors: factors.to_vec(),
            offsets,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &Graph {
        &self.factors[i]
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// First product vertex of block `i`.
    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    /// Product vertices of block `i`.
    pub fn block(&self, i: usize) -> VertexSet {
        VertexSet::range(self.order(), self.offsets[i], self.offsets[i + 1])
    }

    /// Product vertex for `(i, u)`.
    pub fn vertex(&self, i: usize, u: usize) -> usize {
        debug_assert!(u < self.factors[i].order());
        self.offsets[i] + u
    }

    /// `(base index, factor-local vertex)` of product vertex `v`.
    pub fn locate(&self, v: usize) -> (usize, usize) {
        assert!(v < self.order(), "product vertex {v} out of range");
        let i = self.offsets.partition_point(|&o| o <= v) - 1;
        (i, v - self.offsets[i])
    }

    pub fn block_of(&self, v: usize) -> usize {
        self.locate(v).0
    }

    /// The G-layer `{u_1, .., u_n}` picking `choice[i]` from block `i`.
    pub fn g_layer(&self, choice: &[usize]) -> Result<VertexSet> {
        if choice.len() != self.factors.len() {
            return Err(Error::invalid(format!(
                "layer needs {} choices, got {}",
                self.factors.len(),
                choice.len()
            )));
        }
        let mut s = VertexSet::empty(self.order());
        for (i, &u) in choice.iter().enumerate() {
            if u >= self.factors[i].order() {
                return Err(Error::invalid(format!(
                    "choice {u} outside factor {i} of order {}",
                    self.factors[i].order()
                )));
            }
            s.insert(self.vertex(i, u));
        }
        Ok(s)
    }

    /// Number of distinct G-layers, saturating.
    pub fn layer_count(&self) -> usize {
        self.factors
            .iter()
            .fold(1usize, |acc, f| acc.saturating_mul(f.order()))
    }

    /// All layer choices in odometer order (last block varies fastest).
    pub fn layer_choices(&self) -> LayerChoices {
        LayerChoices {
            sizes: self.factors.iter().map(Graph::order).collect(),
            next: Some(vec![0; self.factors.len()]),
        }
    }

    /// Maps a base-vertex set through a layer choice.
    pub fn lift_through_layer(&self, base_set: &VertexSet, choice: &[usize]) -> VertexSet {
        VertexSet::from_vertices(self.order(), base_set.iter().map(|i| self.vertex(i, choice[i])))
    }

    /// Base indices whose block meets `s`.
    pub fn blocks_hit(&self, s: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.base.order(), s.iter().map(|v| self.block_of(v)))
    }

    /// `|s ∩ V(F_i)|` for each block.
    pub fn block_counts(&self, s: &VertexSet) -> Vec<usize> {
        let mut counts = vec![0; self.factors.len()];
        for v in s {
            counts[self.block_of(v)] += 1;
        }
        counts
    }

    /// The part of `s` inside block `i`, in factor-local labels.
    pub fn restrict_to_block(&self, s: &VertexSet, i: usize) -> VertexSet {
        let f = self.factors[i].order();
        VertexSet::from_vertices(
            f,
            s.iter()
                .filter(|&v| self.block_of(v) == i)
                .map(|v| v - self.offsets[i]),
        )
    }

    /// Inverse of [`ProductGraph::restrict_to_block`]: a factor-local set
    /// placed into block `i`.
    pub fn embed_in_block(&self, i: usize, local: &VertexSet) -> VertexSet {
        VertexSet::from_vertices(self.order(), local.iter().map(|u| self.vertex(i, u)))
    }
}

pub struct LayerChoices {
    sizes: Vec<usize>,
    next: Option<Vec<usize>>,
}

impl Iterator for LayerChoices {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let cur = self.next.take()?;
        let mut nxt = cur.clone();
        for k in (0..nxt.len()).rev() {
            nxt[k] += 1;
            if nxt[k] < self.sizes[k] {
                self.next = Some(nxt);
                break;
            }
            nxt[k] = 0;
        }
        Some(cur)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;

    fn k1() -> Graph {
        Graph::complete(1)
    }

    #[test]
    fn product_examples() {
        let k2 = Graph::complete(2);
        let p = ProductGraph::build(&k2, &[Graph::empty(2), Graph::empty(2)]).unwrap();
        assert!(are_isomorphic(p.graph(), &Graph::cycle(4).unwrap()).unwrap());

        let p3 = Graph::path(3);
        let p = ProductGraph::build(&p3, &[k1(), k1(), k1()]).unwrap();
        assert_eq!(p.graph(), &p3);

        let p = ProductGraph::build(&k2, &[k1(), Graph::complete(2)]).unwrap();
        assert_eq!(p.graph(), &Graph::complete(3));
    }

    #[test]
    fn factor_count_mismatch() {
        assert!(matches!(
            ProductGraph::build(&Graph::complete(2), &[k1()]),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn layer_examples() {
        let p3 = Graph::path(3);
        let k2 = Graph::complete(2);
        let p = ProductGraph::build(&p3, &[k2.clone(), k2.clone(), k2]).unwrap();
        let layer = p.g_layer(&[0, 0, 0]).unwrap();
        assert_eq!(layer.len(), 3);
        assert_eq!(p.graph().induced_subgraph(&layer), p3);
        assert!(p.g_layer(&[0, 2, 0]).is_err());
        assert!(p.g_layer(&[0, 0]).is_err());

        let p = ProductGraph::build(&Graph::complete(2), &[k1(), k1()]).unwrap();
        assert_eq!(p.g_layer(&[0, 0]).unwrap(), p.graph().vertices());

        let c4 = Graph::cycle(4).unwrap();
        let fs = [Graph::complete(2), k1(), Graph::complete(2), k1()];
        let p = ProductGraph::build(&c4, &fs).unwrap();
        let layer = p.g_layer(&[1, 0, 1, 0]).unwrap();
        assert_eq!(layer.len(), 4);
        assert!(are_isomorphic(&p.graph().induced_subgraph(&layer), &c4).unwrap());
        assert_eq!(p.layer_choices().count(), 4);
    }

    #[test]
    fn locate_examples() {
        let k2 = Graph::complete(2);
        let p = ProductGraph::build(&k2, &[Graph::complete(2), Graph::complete(2)]).unwrap();
        assert_eq!(p.locate(3), (1, 1));
        assert_eq!(p.locate(0), (0, 0));
        let p = ProductGraph::build(&k2, &[Graph::complete(3), Graph::complete(2)]).unwrap();
        assert_eq!(p.locate(4), (1, 1));
        for v in 0..p.order() {
            let (i, u) = p.locate(v);
            assert_eq!(p.vertex(i, u), v);
        }
    }

    #[test]
    fn uniform_factors_give_lexicographic_product() {
        let g = Graph::path(3);
        let f = Graph::path(2);
        let p = ProductGraph::build(&g, &[f.clone(), f.clone(), f.clone()]).unwrap();
        let m = f.order();
        for x in 0..p.order() {
            for y in 0..p.order() {
                let (g1, f1) = (x / m, x % m);
                let (g2, f2) = (y / m, y % m);
                let expect = g.has_edge(g1, g2) || (g1 == g2 && f.has_edge(f1, f2));
                assert_eq!(p.graph().has_edge(x, y), expect);
            }
        }
    }
}
