//! Exact `(A,B)`-domination parameters.
//!
//! A set `S` is a dominating `(A,B)`-set when `N[S] = V`, `⟨S⟩ ∈ A` and
//! `⟨V - S⟩ ∈ B`. The lower parameter `γ_(A,B)` is the least size of such a
//! set; the upper parameter `Γ_(A,B)` is the largest size of one that has no
//! proper subset with the same property.
//!
//! Everything here is exhaustive. Two order limits apply (see [`Guards`]):
//! enumerating whole minimal families is capped lower than searching for a
//! single optimum.

mod search;
mod transform;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mask::MaskGraph;
use crate::properties::{holds, PropertyId, PropertyPair};

pub use transform::{d_star_transform, i_r_set, Mu};

/// Environment variable overriding [`Guards::search_order`].
pub const GUARD_ENV: &str = "GLPDOM_GUARD_N";

pub const DEFAULT_FAMILY_ORDER: usize = 18;
pub const DEFAULT_SEARCH_ORDER: usize = 26;
pub const DEFAULT_MINIMALITY_SUBSET: usize = 20;

/// Order limits for exhaustive work.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Guards {
    /// Largest graph whose full minimal family is tabulated.
    pub family_order: usize,
    /// Largest graph searched for a single optimum.
    pub search_order: usize,
    /// Largest set whose minimality is decided by walking all proper subsets.
    pub minimality_subset: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            family_order: DEFAULT_FAMILY_ORDER,
            search_order: DEFAULT_SEARCH_ORDER,
            minimality_subset: DEFAULT_MINIMALITY_SUBSET,
        }
    }
}

impl Guards {
    /// Defaults, with the subset limit taken from `GLPDOM_GUARD_N` when set.
    pub fn from_env() -> Result<Guards> {
        match std::env::var(GUARD_ENV) {
            Ok(v) => {
                let n = v
                    .trim()
                    .parse()
                    .map_err(|_| Error::invalid(format!("{GUARD_ENV}='{v}' is not an integer")))?;
                Ok(Guards::default().with_subset_order(n))
            }
            Err(_) => Ok(Guards::default()),
        }
    }

    /// Sets the search limit to `n`; family tabulation never exceeds it.
    pub fn with_subset_order(self, n: usize) -> Guards {
        Guards {
            search_order: n,
            family_order: self.family_order.min(n),
            ..self
        }
    }

    fn check(limit: usize, actual: usize, what: &'static str) -> Result<()> {
        if actual > limit {
            Err(Error::SizeLimitExceeded { what, limit, actual })
        } else {
            Ok(())
        }
    }
}

/// An optimum value and the lexicographically least set attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extremum {
    pub value: usize,
    pub witness: VertexSet,
}

/// Both parameters for one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominationResult {
    pub gamma: Option<Extremum>,
    pub upper: Option<Extremum>,
    /// `|MD_(A,B)(G)|`.
    pub family_size: usize,
}

/// Named parameters and the pairs behind them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParamName {
    Gamma,
    /// Independent domination `i`.
    I,
    /// Independence number `β_0`, the upper `(S_0, I)` parameter.
    Beta0,
    GammaT,
    GammaR,
    GammaTr,
    GammaOc,
    GammaTOc,
    GammaP,
    GammaA,
    GammaK(usize),
    /// Paired outer-connected domination, pair `(M, C)`.
    GammaMc,
}

impl ParamName {
    pub const NAMED: [ParamName; 12] = [
        ParamName::Gamma,
        ParamName::I,
        ParamName::Beta0,
        ParamName::GammaT,
        ParamName::GammaR,
        ParamName::GammaTr,
        ParamName::GammaOc,
        ParamName::GammaTOc,
        ParamName::GammaP,
        ParamName::GammaA,
        ParamName::GammaK(1),
        ParamName::GammaMc,
    ];

    pub fn pair(self) -> PropertyPair {
        use PropertyId::*;
        let (a, b) = match self {
            ParamName::Gamma => (All, All),
            ParamName::I | ParamName::Beta0 => (MaxDeg(0), All),
            ParamName::GammaT => (MinDegOne, All),
            ParamName::GammaR => (All, MinDegOne),
            ParamName::GammaTr => (MinDegOne, MinDegOne),
            ParamName::GammaOc => (All, Connected),
            ParamName::GammaTOc => (MinDegOne, Connected),
            ParamName::GammaP => (PerfectMatching, All),
            ParamName::GammaA => (Forest, All),
            ParamName::GammaK(k) => (MaxDeg(k), All),
            ParamName::GammaMc => (PerfectMatching, Connected),
        };
        PropertyPair::new(a, b)
    }

    /// `β_0` is an upper parameter by definition.
    pub fn forces_upper(self) -> bool {
        matches!(self, ParamName::Beta0)
    }
}

impl fmt::Display for ParamName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParamName::Gamma => write!(f, "gamma"),
            ParamName::I => write!(f, "i"),
            ParamName::Beta0 => write!(f, "beta0"),
            ParamName::GammaT => write!(f, "gamma_t"),
            ParamName::GammaR => write!(f, "gamma_r"),
            ParamName::GammaTr => write!(f, "gamma_tr"),
            ParamName::GammaOc => write!(f, "gamma_oc"),
            ParamName::GammaTOc => write!(f, "gamma_t_oc"),
            ParamName::GammaP => write!(f, "gamma_p"),
            ParamName::GammaA => write!(f, "gamma_a"),
            ParamName::GammaK(k) => write!(f, "gamma_k:{k}"),
            ParamName::GammaMc => write!(f, "gamma_mc"),
        }
    }
}

impl FromStr for ParamName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim() {
            "gamma" => ParamName::Gamma,
            "i" => ParamName::I,
            "beta0" => ParamName::Beta0,
            "gamma_t" => ParamName::GammaT,
            "gamma_r" => ParamName::GammaR,
            "gamma_tr" => ParamName::GammaTr,
            "gamma_oc" => ParamName::GammaOc,
            "gamma_t_oc" => ParamName::GammaTOc,
            "gamma_p" => ParamName::GammaP,
            "gamma_a" => ParamName::GammaA,
            "gamma_mc" => ParamName::GammaMc,
            other => match other.strip_prefix("gamma_k:") {
                Some(k) => ParamName::GammaK(
                    k.parse()
                        .map_err(|_| Error::invalid(format!("bad k in parameter '{s}'")))?,
                ),
                None => return Err(Error::invalid(format!("unknown parameter '{s}'"))),
            },
        })
    }
}

/// `N[s] = V`, `⟨s⟩ ∈ A` and `⟨V - s⟩ ∈ B`.
pub fn is_ab_dominating(g: &Graph, s: &VertexSet, pair: PropertyPair) -> bool {
    g.closed_neighborhood_of(s).len() == g.order()
        && holds(pair.a, g, s)
        && holds(pair.b, g, &s.complement())
}

/// Every vertex's closed neighborhood meets `d` exactly once.
pub fn is_efficient_dominating(g: &Graph, d: &VertexSet) -> bool {
    (0..g.order()).all(|v| g.closed_neighborhood(v).intersection_len(d) == 1)
}

/// Exhaustive solver parameterized by order limits.
#[derive(Debug, Clone, Copy, Default)]
pub struct Solver {
    pub guards: Guards,
}

impl Solver {
    pub fn new(guards: Guards) -> Self {
        Solver { guards }
    }

    fn search_graph(&self, g: &Graph) -> Result<MaskGraph> {
        Guards::check(self.guards.search_order, g.order(), "search order")?;
        MaskGraph::new(g)
    }

    fn family_graph(&self, g: &Graph) -> Result<MaskGraph> {
        Guards::check(self.guards.family_order, g.order(), "family enumeration order")?;
        MaskGraph::new(g)
    }

    fn to_sets(mg: &MaskGraph, masks: Vec<u64>) -> Vec<VertexSet> {
        masks.into_iter().map(|m| mg.to_set(m)).collect()
    }

    /// No proper subset of `s` is a dominating `(A,B)`-set. `s` itself is
    /// expected to be one; returns `false` otherwise.
    pub fn is_minimal_ab_dominating(&self, g: &Graph, s: &VertexSet, pair: PropertyPair) -> Result<bool> {
        let mg = MaskGraph::new(g)?;
        let m = s.to_mask().expect("host order <= 64");
        if !mg.is_ab(pair, m) {
            return Ok(false);
        }
        if !pair.is_superset_closed() {
            Guards::check(self.guards.minimality_subset, s.len(), "minimality subset walk")?;
        }
        Ok(search::is_minimal(&mg, pair, m))
    }

    /// `MD_(A,B)(G)`, sorted by size then lexicographically.
    pub fn enumerate_minimal(&self, g: &Graph, pair: PropertyPair) -> Result<Vec<VertexSet>> {
        let mg = self.family_graph(g)?;
        Ok(Self::to_sets(&mg, search::minimal_family(&mg, pair)))
    }

    /// `γ_(A,B)(G)`; `None` when no dominating `(A,B)`-set exists.
    pub fn gamma_ab(&self, g: &Graph, pair: PropertyPair) -> Result<Option<Extremum>> {
        let mg = self.search_graph(g)?;
        Ok(search::minimum(&mg, pair).map(|m| Extremum {
            value: m.count_ones() as usize,
            witness: mg.to_set(m),
        }))
    }

    /// `Γ_(A,B)(G)`; `None` when no dominating `(A,B)`-set exists.
    pub fn upper_gamma_ab(&self, g: &Graph, pair: PropertyPair) -> Result<Option<Extremum>> {
        let mg = self.search_graph(g)?;
        let best = if g.order() <= self.guards.family_order {
            search::lex_max_by_size(&search::minimal_family(&mg, pair))
        } else {
            if !pair.is_superset_closed() {
                Guards::check(self.guards.minimality_subset, g.order(), "minimality subset walk")?;
            }
            search::maximum_minimal_descending(&mg, pair)
        };
        Ok(best.map(|m| Extremum {
            value: m.count_ones() as usize,
            witness: mg.to_set(m),
        }))
    }

    pub fn domination_result(&self, g: &Graph, pair: PropertyPair) -> Result<DominationResult> {
        let mg = self.family_graph(g)?;
        let family = search::minimal_family(&mg, pair);
        let ext = |m: u64| Extremum {
            value: m.count_ones() as usize,
            witness: mg.to_set(m),
        };
        Ok(DominationResult {
            gamma: family.first().copied().map(ext),
            upper: search::lex_max_by_size(&family).map(ext),
            family_size: family.len(),
        })
    }

    /// All minimum dominating `(A,B)`-sets (the `γ_(A,B)`-sets).
    pub fn minimum_sets(&self, g: &Graph, pair: PropertyPair) -> Result<Vec<VertexSet>> {
        let mg = self.search_graph(g)?;
        Ok(Self::to_sets(&mg, search::minimum_family(&mg, pair)))
    }

    /// A named parameter; `upper` selects the `Γ` variant.
    pub fn param(&self, g: &Graph, name: ParamName, upper: bool) -> Result<Option<Extremum>> {
        if upper || name.forces_upper() {
            self.upper_gamma_ab(g, name.pair())
        } else {
            self.gamma_ab(g, name.pair())
        }
    }

    pub fn enumerate_efficient(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        let mg = self.search_graph(g)?;
        Ok(Self::to_sets(&mg, search::efficient_family(&mg)))
    }

    pub fn maximal_independent_sets(&self, g: &Graph) -> Result<Vec<VertexSet>> {
        let mg = self.search_graph(g)?;
        Ok(Self::to_sets(&mg, search::maximal_independent(&mg)))
    }

    /// `γ_(A,B)(G) = Γ_(A,B)(G)`.
    pub fn is_well_ab_dominated(&self, g: &Graph, pair: PropertyPair) -> Result<bool> {
        let r = self.domination_result(g, pair)?;
        match (r.gamma, r.upper) {
            (Some(lo), Some(hi)) => Ok(lo.value == hi.value),
            _ => Err(Error::NoFeasibleSet(format!("{pair} on a graph of order {}", g.order()))),
        }
    }

    /// The minimum sets of both pairs coincide as families.
    pub fn strong_equal(&self, g: &Graph, p1: PropertyPair, p2: PropertyPair) -> Result<bool> {
        let f1 = self.minimum_sets(g, p1)?;
        let f2 = self.minimum_sets(g, p2)?;
        if f1.is_empty() || f2.is_empty() {
            return Err(Error::NoFeasibleSet(format!("{p1} vs {p2}")));
        }
        Ok(f1 == f2)
    }
}
