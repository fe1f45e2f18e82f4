//! Set constructions on products: the `I_R` index set and the
//! one-vertex-per-block rewrite of optimal sets.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::glp::ProductGraph;
use crate::graph::Graph;
use crate::properties::{PropertyId, PropertyPair};

use super::{is_ab_dominating, Solver};

/// Which optimum a set is taken to realize.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mu {
    Gamma,
    GammaT,
}

impl Mu {
    pub fn pair(self) -> PropertyPair {
        match self {
            Mu::Gamma => PropertyPair::new(PropertyId::All, PropertyId::All),
            Mu::GammaT => PropertyPair::new(PropertyId::MinDegOne, PropertyId::All),
        }
    }
}

impl Solver {
    /// `I_R`: indices isolated in `⟨R⟩` whose factor has `γ(F_i) >= 2`.
    pub fn i_r_set(&self, base: &Graph, factors: &[Graph], r: &VertexSet) -> Result<VertexSet> {
        let gamma = PropertyPair::new(PropertyId::All, PropertyId::All);
        if factors.len() != base.order() {
            return Err(Error::invalid("factor count differs from base order"));
        }
        if !self.is_minimal_ab_dominating(base, r, gamma)? {
            return Err(Error::invalid(format!("{r} is not a minimal dominating set of the base")));
        }
        let mut out = VertexSet::empty(base.order());
        for i in r {
            if base.neighbors(i).intersects(r) {
                continue;
            }
            let g = self
                .gamma_ab(&factors[i], gamma)?
                .expect("every graph has a dominating set")
                .value;
            if g >= 2 {
                out.insert(i);
            }
        }
        Ok(out)
    }

    /// Rewrites a `μ`-set `d` of the product so every block holds at most one
    /// vertex: in each block meeting `d` twice, the larger of the two vertices
    /// is replaced by its least neighbor outside the block. Requires every
    /// factor to have order at least 2.
    pub fn d_star_transform(&self, p: &ProductGraph, d: &VertexSet, mu: Mu) -> Result<VertexSet> {
        if let Some(i) = p.factors().iter().position(|f| f.order() < 2) {
            return Err(Error::invalid(format!("factor {i} has order < 2")));
        }
        let pair = mu.pair();
        let g = p.graph();
        let optimum = self
            .gamma_ab(g, pair)?
            .ok_or_else(|| Error::NoFeasibleSet(format!("{pair} on the product")))?
            .value;
        if d.len() != optimum || !is_ab_dominating(g, d, pair) {
            return Err(Error::invalid(format!("{d} is not a {mu:?}-set of the product")));
        }
        let counts = p.block_counts(d);
        if let Some(i) = counts.iter().position(|&c| c > 2) {
            return Err(Error::invalid(format!("{d} meets block {i} {} times", counts[i])));
        }
        let mut out = d.clone();
        for (i, &c) in counts.iter().enumerate() {
            if c != 2 {
                continue;
            }
            let pair_in_block = d.intersection(&p.block(i));
            let z2 = pair_in_block.iter().nth(1).expect("two vertices in block");
            let x = g
                .neighbors(z2)
                .difference(&p.block(i))
                .first()
                .ok_or_else(|| Error::invalid(format!("block {i} has no outside neighbor")))?;
            out.remove(z2);
            out.insert(x);
        }
        Ok(out)
    }
}

/// Free-function form of [`Solver::i_r_set`] with default guards.
pub fn i_r_set(base: &Graph, factors: &[Graph], r: &VertexSet) -> Result<VertexSet> {
    Solver::default().i_r_set(base, factors, r)
}

/// Free-function form of [`Solver::d_star_transform`] with default guards.
pub fn d_star_transform(p: &ProductGraph, d: &VertexSet, mu: Mu) -> Result<VertexSet> {
    Solver::default().d_star_transform(p, d, mu)
}
