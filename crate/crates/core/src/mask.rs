//! Single-word bitmask view of a graph with at most 64 vertices.
//!
//! All exhaustive searches run on this representation.

use std::collections::HashSet;

use crate::bitset::{mask_bits, VertexSet};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::{PropertyId, PropertyPair};

pub(crate) const MAX_MASK_ORDER: usize = 64;

#[derive(Debug, Clone)]
pub(crate) struct MaskGraph {
    pub n: usize,
    pub adj: Vec<u64>,
    pub closed: Vec<u64>,
    pub full: u64,
}

impl MaskGraph {
    pub fn new(g: &Graph) -> Result<MaskGraph> {
        let n = g.order();
        if n > MAX_MASK_ORDER {
            return Err(Error::SizeLimitExceeded {
                what: "bitmask search order",
                limit: MAX_MASK_ORDER,
                actual: n,
            });
        }
        let adj: Vec<u64> = (0..n)
            .map(|v| g.neighbors(v).to_mask().expect("n <= 64"))
            .collect();
        let closed = adj.iter().enumerate().map(|(v, &a)| a | 1 << v).collect();
        let full = VertexSet::full(n).to_mask().expect("n <= 64");
        Ok(MaskGraph { n, adj, closed, full })
    }

    pub fn to_set(&self, m: u64) -> VertexSet {
        VertexSet::from_mask(self.n, m)
    }

    pub fn dominated_by(&self, s: u64) -> u64 {
        mask_bits(s).fold(0, |acc, v| acc | self.closed[v])
    }

    pub fn dominates(&self, s: u64) -> bool {
        self.dominated_by(s) == self.full
    }

    pub fn is_ab(&self, pair: PropertyPair, s: u64) -> bool {
        self.dominates(s) && self.prop(pair.a, s) && self.prop(pair.b, self.full & !s)
    }

    pub fn prop(&self, p: PropertyId, s: u64) -> bool {
        match p {
            PropertyId::All => true,
            PropertyId::MinDegOne => mask_bits(s).all(|v| self.adj[v] & s != 0),
            PropertyId::MaxDeg(k) => {
                mask_bits(s).all(|v| (self.adj[v] & s).count_ones() as usize <= k)
            }
            PropertyId::Connected => self.connected(s),
            PropertyId::Forest => {
                let edges: u32 = mask_bits(s).map(|v| (self.adj[v] & s).count_ones()).sum();
                edges / 2 + self.component_count(s) == s.count_ones()
            }
            PropertyId::PerfectMatching => self.perfect_matching(s),
        }
    }

    pub fn reach(&self, start: u64, within: u64) -> u64 {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let next = mask_bits(frontier).fold(0, |acc, v| acc | self.adj[v]) & within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn connected(&self, s: u64) -> bool {
        s == 0 || self.reach(s & s.wrapping_neg(), s) == s
    }

    pub fn component_count(&self, mut s: u64) -> u32 {
        let mut c = 0;
        while s != 0 {
            let comp = self.reach(s & s.wrapping_neg(), s);
            s &= !comp;
            c += 1;
        }
        c
    }

    pub fn perfect_matching(&self, s: u64) -> bool {
        if s.count_ones() % 2 == 1 || mask_bits(s).any(|v| self.adj[v] & s == 0) {
            return false;
        }
        let mut failed = HashSet::new();
        self.match_rest(s, &mut failed)
    }

    fn match_rest(&self, rest: u64, failed: &mut HashSet<u64>) -> bool {
        if rest == 0 {
            return true;
        }
        if failed.contains(&rest) {
            return false;
        }
        let v = rest.trailing_zeros() as usize;
        for u in mask_bits(self.adj[v] & rest) {
            if self.match_rest(rest & !(1 << v) & !(1 << u), failed) {
                return true;
            }
        }
        failed.insert(rest);
        false
    }
}
