//! Induced-subgraph properties used to parameterize domination.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// One of the graph classes a set or its complement may be required to induce.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PropertyId {
    /// Every graph.
    All,
    /// No isolated vertices.
    MinDegOne,
    Forest,
    PerfectMatching,
    /// Maximum degree at most `k`; `MaxDeg(0)` is independence.
    MaxDeg(usize),
    Connected,
}

impl PropertyId {
    pub fn symbol(self) -> String {
        match self {
            PropertyId::All => "I".into(),
            PropertyId::MinDegOne => "T".into(),
            PropertyId::Forest => "F".into(),
            PropertyId::PerfectMatching => "M".into(),
            PropertyId::MaxDeg(k) => format!("S{k}"),
            PropertyId::Connected => "C".into(),
        }
    }

    /// Name accepted on the command line.
    pub fn cli_name(self) -> String {
        match self {
            PropertyId::All => "all".into(),
            PropertyId::MinDegOne => "total".into(),
            PropertyId::Forest => "forest".into(),
            PropertyId::PerfectMatching => "matching".into(),
            PropertyId::MaxDeg(k) => format!("maxdeg:{k}"),
            PropertyId::Connected => "connected".into(),
        }
    }

    /// Whether `g` itself has the property.
    pub fn test_graph(self, g: &Graph) -> bool {
        match self {
            PropertyId::All => true,
            PropertyId::MinDegOne => (0..g.order()).all(|v| g.degree(v) >= 1),
            PropertyId::Forest => is_forest(g),
            PropertyId::PerfectMatching => has_perfect_matching(g),
            PropertyId::MaxDeg(k) => (0..g.order()).all(|v| g.degree(v) <= k),
            PropertyId::Connected => g.is_connected(),
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let parse_k = |k: &str| {
            k.parse::<usize>()
                .map_err(|_| Error::invalid(format!("bad degree bound in property '{s}'")))
        };
        match t {
            "all" | "I" => Ok(PropertyId::All),
            "total" | "T" => Ok(PropertyId::MinDegOne),
            "forest" | "F" => Ok(PropertyId::Forest),
            "matching" | "M" => Ok(PropertyId::PerfectMatching),
            "connected" | "C" => Ok(PropertyId::Connected),
            _ => {
                if let Some(k) = t.strip_prefix("maxdeg:") {
                    Ok(PropertyId::MaxDeg(parse_k(k)?))
                } else if let Some(k) = t.strip_prefix("S_").or_else(|| t.strip_prefix('S')) {
                    Ok(PropertyId::MaxDeg(parse_k(k)?))
                } else {
                    Err(Error::invalid(format!("unknown property '{s}'")))
                }
            }
        }
    }
}

/// The pair `(A, B)`: `⟨S⟩` must lie in `A` and `⟨V - S⟩` in `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PropertyPair {
    pub a: PropertyId,
    pub b: PropertyId,
}

impl PropertyPair {
    pub const fn new(a: PropertyId, b: PropertyId) -> Self {
        PropertyPair { a, b }
    }

    /// Adding vertices to a dominating `(A,B)`-set keeps it one, so
    /// minimality reduces to single-vertex deletions.
    pub fn is_superset_closed(self) -> bool {
        matches!(self.b, PropertyId::All)
            && matches!(self.a, PropertyId::All | PropertyId::MinDegOne)
    }
}

impl fmt::Display for PropertyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

impl FromStr for PropertyPair {
    type Err = Error;

    /// Parses `A,B`, optionally parenthesized.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let (a, b) = t
            .split_once(',')
            .ok_or_else(|| Error::invalid(format!("pair '{s}' must look like A,B")))?;
        Ok(PropertyPair::new(a.parse()?, b.parse()?))
    }
}

/// Whether `⟨s⟩` has `prop`. The empty induced subgraph has every property.
pub fn holds(prop: PropertyId, g: &Graph, s: &VertexSet) -> bool {
    prop.test_graph(&g.induced_subgraph(s))
}

/// `|E| = n - #components`.
pub fn is_forest(g: &Graph) -> bool {
    g.size() + g.components().len() == g.order()
}

/// Exact perfect-matching test: match the least unmatched vertex with each
/// available neighbor in turn, memoizing failed remainders.
pub fn has_perfect_matching(g: &Graph) -> bool {
    if g.order() % 2 == 1 {
        return false;
    }
    let mut failed = HashSet::new();
    match_rest(g, g.vertices(), &mut failed)
}

fn match_rest(g: &Graph, rest: VertexSet, failed: &mut HashSet<VertexSet>) -> bool {
    let Some(v) = rest.first() else {
        return true;
    };
    if failed.contains(&rest) {
        return false;
    }
    let candidates = g.neighbors(v).intersection(&rest);
    for u in &candidates {
        let mut next = rest.clone();
        next.remove(v);
        next.remove(u);
        if match_rest(g, next, failed) {
            return true;
        }
    }
    failed.insert(rest);
    false
}
