//! Memoized per-graph quantities shared by the checkers of one instance.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use crate::bitset::VertexSet;
use crate::domination::Solver;
use crate::error::Result;
use crate::graph::Graph;
use crate::properties::{PropertyId, PropertyPair};

pub(crate) const II: PropertyPair = PropertyPair::new(PropertyId::All, PropertyId::All);
pub(crate) const S0I: PropertyPair = PropertyPair::new(PropertyId::MaxDeg(0), PropertyId::All);
pub(crate) const TI: PropertyPair = PropertyPair::new(PropertyId::MinDegOne, PropertyId::All);
pub(crate) const IT: PropertyPair = PropertyPair::new(PropertyId::All, PropertyId::MinDegOne);
pub(crate) const TT: PropertyPair = PropertyPair::new(PropertyId::MinDegOne, PropertyId::MinDegOne);
pub(crate) const IC: PropertyPair = PropertyPair::new(PropertyId::All, PropertyId::Connected);
pub(crate) const TC: PropertyPair = PropertyPair::new(PropertyId::MinDegOne, PropertyId::Connected);
pub(crate) const MI: PropertyPair = PropertyPair::new(PropertyId::PerfectMatching, PropertyId::All);
pub(crate) const FI: PropertyPair = PropertyPair::new(PropertyId::Forest, PropertyId::All);
pub(crate) const MC: PropertyPair = PropertyPair::new(PropertyId::PerfectMatching, PropertyId::Connected);

type Family = Rc<Vec<VertexSet>>;

pub(crate) struct Facts<'s> {
    pub g: Graph,
    solver: &'s Solver,
    minimal: RefCell<HashMap<PropertyPair, Family>>,
    minimum: RefCell<HashMap<PropertyPair, Family>>,
    mis: RefCell<Option<Family>>,
}

impl<'s> Facts<'s> {
    pub fn new(g: Graph, solver: &'s Solver) -> Self {
        Facts {
            g,
            solver,
            minimal: RefCell::default(),
            minimum: RefCell::default(),
            mis: RefCell::default(),
        }
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    fn tabulated(&self) -> bool {
        self.g.order() <= self.solver.guards.family_order
    }

    /// `MD_(A,B)`, sorted by size then lexicographically.
    pub fn minimal(&self, pair: PropertyPair) -> Result<Family> {
        if let Some(f) = self.minimal.borrow().get(&pair) {
            return Ok(f.clone());
        }
        let f = Rc::new(self.solver.enumerate_minimal(&self.g, pair)?);
        self.minimal.borrow_mut().insert(pair, f.clone());
        Ok(f)
    }

    /// The minimum sets; read off the minimal family when it is tabulated.
    pub fn minimum(&self, pair: PropertyPair) -> Result<Family> {
        if let Some(f) = self.minimum.borrow().get(&pair) {
            return Ok(f.clone());
        }
        let f = if self.tabulated() {
            let all = self.minimal(pair)?;
            let k = all.first().map_or(0, VertexSet::len);
            Rc::new(all.iter().take_while(|s| s.len() == k).cloned().collect())
        } else {
            Rc::new(self.solver.minimum_sets(&self.g, pair)?)
        };
        self.minimum.borrow_mut().insert(pair, f.clone());
        Ok(f)
    }

    pub fn gamma(&self, pair: PropertyPair) -> Result<Option<usize>> {
        if self.tabulated() {
            return Ok(self.minimal(pair)?.first().map(VertexSet::len));
        }
        Ok(self.solver.gamma_ab(&self.g, pair)?.map(|e| e.value))
    }

    pub fn upper(&self, pair: PropertyPair) -> Result<Option<usize>> {
        Ok(self.minimal(pair)?.last().map(VertexSet::len))
    }

    /// `Some(γ = Γ)`, or `None` without a feasible set.
    pub fn well(&self, pair: PropertyPair) -> Result<Option<bool>> {
        Ok(match (self.gamma(pair)?, self.upper(pair)?) {
            (Some(lo), Some(hi)) => Some(lo == hi),
            _ => None,
        })
    }

    /// `γ(G)`, which always exists.
    pub fn dom(&self) -> Result<usize> {
        Ok(self.gamma(II)?.expect("V(G) dominates"))
    }

    pub fn independent_sets(&self) -> Result<Family> {
        if let Some(f) = self.mis.borrow().as_ref() {
            return Ok(f.clone());
        }
        let f = Rc::new(self.solver.maximal_independent_sets(&self.g)?);
        *self.mis.borrow_mut() = Some(f.clone());
        Ok(f)
    }

    pub fn min_degree(&self) -> usize {
        self.g.min_degree().unwrap_or(0)
    }
}
