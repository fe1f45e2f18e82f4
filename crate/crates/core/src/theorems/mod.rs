//! Mechanical checkers for structural results about generalized
//! lexicographic products, a sweep driver and randomized hunts.
//!
//! Every checker first tests its hypotheses. When they fail the verdict is
//! [`Status::NotApplicable`] with a reason; otherwise both sides of every
//! claimed relation are computed exhaustively and compared.

pub mod catalog;
mod checks;
mod facts;
pub mod hunt;
pub mod sweep;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;

use crate::bitset::VertexSet;
use crate::domination::Solver;
use crate::error::{Error, Result};
use crate::glp::ProductGraph;
use crate::graph::{are_isomorphic, Graph};

use facts::Facts;

pub use catalog::{connected_bases, factor_catalog, resolve_pool};
pub use hunt::{circulant_report, hunt, CirculantReport, HuntTarget};
pub use sweep::{sweep, Instance, InstanceSpace, Record, Summary, SweepOutcome};

/// At most this many G-layers are visited by checks that walk layers.
pub const LAYER_LIMIT: usize = 4096;

/// The checked results.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
    T12,
    T13,
    T14,
    T15,
    T16,
    T17,
}

impl TheoremId {
    pub const ALL: [TheoremId; 17] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
        TheoremId::T12,
        TheoremId::T13,
        TheoremId::T14,
        TheoremId::T15,
        TheoremId::T16,
        TheoremId::T17,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::T1 => "folklore-product-facts",
            TheoremId::T2 => "total-invariance",
            TheoremId::T3 => "gamma-bound-and-equality",
            TheoremId::T4 => "gamma-gammat-chain",
            TheoremId::T5 => "structural-lemma",
            TheoremId::T6 => "order-two-equalities",
            TheoremId::T7 => "order-three-strong",
            TheoremId::T8 => "gamma-two-chain",
            TheoremId::T9 => "efficient-chain",
            TheoremId::T10 => "observation-chains",
            TheoremId::T11 => "necessary-conditions",
            TheoremId::T12 => "independence-multiplicativity",
            TheoremId::T13 => "well-covered-characterization",
            TheoremId::T14 => "well-dominated-characterization",
            TheoremId::T15 => "well-dominated-uniform",
            TheoremId::T16 => "well-total-characterizations",
            TheoremId::T17 => "open-problem-targets",
        }
    }

    /// Parses `all` or a comma-separated list of ids or names.
    pub fn parse_list(s: &str) -> Result<Vec<TheoremId>> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(TheoremId::ALL.to_vec());
        }
        let mut out: Vec<TheoremId> = s
            .split(',')
            .map(|t| t.trim().parse())
            .collect::<Result<_>>()?;
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}", *self as usize + 1)
    }
}

impl Serialize for TheoremId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s) || t.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown theorem id '{s}'")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Holds,
    Violated,
    NotApplicable,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Holds => "holds",
            Status::Violated => "violated",
            Status::NotApplicable => "not-applicable",
        })
    }
}

/// Outcome of one check. A violation names the first failed relation in
/// `reason` and lists the offending sets (product vertex indices).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Vec<usize>>,
    pub values: BTreeMap<String, Value>,
}

impl Verdict {
    pub fn not_applicable(reason: impl Into<String>) -> Verdict {
        Verdict {
            status: Status::NotApplicable,
            reason: Some(reason.into()),
            sets: Vec::new(),
            values: BTreeMap::new(),
        }
    }

    pub fn is_violated(&self) -> bool {
        self.status == Status::Violated
    }

    pub fn value(&self, key: &str) -> Option<&Value> {
        self.values.get(key)
    }
}

/// Accumulates values and failed expectations for one verdict.
pub(crate) struct Checker {
    values: BTreeMap<String, Value>,
    failures: usize,
    first: Option<(String, Vec<Vec<usize>>)>,
}

impl Checker {
    pub fn new() -> Self {
        Checker {
            values: BTreeMap::new(),
            failures: 0,
            first: None,
        }
    }

    pub fn value<T: Serialize>(&mut self, key: &str, v: T) {
        let v = serde_json::to_value(v).expect("plain data serializes");
        self.values.insert(key.to_string(), v);
    }

    pub fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.expect_sets(ok, &[], what)
    }

    pub fn expect_sets(&mut self, ok: bool, sets: &[&VertexSet], what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some((what(), sets.iter().map(|s| s.to_vec()).collect()));
            }
        }
        ok
    }

    pub fn failures(&self) -> usize {
        self.failures
    }

    /// Unwraps a value the hypotheses guarantee, failing the check otherwise.
    pub fn present(&mut self, v: Option<usize>, what: &str) -> Option<usize> {
        self.expect(v.is_some(), || format!("{what} has no feasible set"));
        v
    }

    pub fn finish(mut self) -> Verdict {
        let (status, reason, sets) = match self.first.take() {
            None => (Status::Holds, None, Vec::new()),
            Some((why, sets)) => {
                self.value("failures", self.failures);
                (Status::Violated, Some(why), sets)
            }
        };
        Verdict {
            status,
            reason,
            sets,
            values: self.values,
        }
    }
}

/// A product together with memoized facts about its base, factors and itself.
pub(crate) struct Analysis<'s> {
    pub solver: &'s Solver,
    pub p: ProductGraph,
    pub base: Facts<'s>,
    pub factors: Vec<Facts<'s>>,
    pub prod: Facts<'s>,
}

impl<'s> Analysis<'s> {
    pub fn new(solver: &'s Solver, base: &Graph, factors: &[Graph]) -> Result<Self> {
        let p = ProductGraph::build(base, factors)?;
        Ok(Analysis {
            solver,
            base: Facts::new(base.clone(), solver),
            factors: factors.iter().map(|f| Facts::new(f.clone(), solver)).collect(),
            prod: Facts::new(p.graph().clone(), solver),
            p,
        })
    }

    /// The standing hypothesis: a connected base of order at least 2.
    pub fn standing(&self) -> Option<String> {
        let b = &self.base.g;
        if b.order() < 2 {
            Some("base has order < 2".into())
        } else if !b.is_connected() {
            Some("base is disconnected".into())
        } else {
            None
        }
    }

    pub fn min_factor_order(&self) -> usize {
        self.factors.iter().map(Facts::order).min().unwrap_or(0)
    }

    /// Requires the standing hypothesis and every factor of order `>= k`.
    pub fn orders_at_least(&self, k: usize) -> Option<String> {
        self.standing().or_else(|| {
            (self.min_factor_order() < k).then(|| format!("a factor has order < {k}"))
        })
    }

    pub fn factor_gammas(&self) -> Result<Vec<usize>> {
        self.factors.iter().map(Facts::dom).collect()
    }

    /// Every factor isomorphic to the first one.
    pub fn uniform(&self) -> Result<bool> {
        let f0 = &self.factors[0].g;
        for f in &self.factors[1..] {
            if !are_isomorphic(f0, &f.g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn run(&self, id: TheoremId) -> Result<Verdict> {
        match id {
            TheoremId::T1 => checks::folklore(self),
            TheoremId::T2 => checks::total_invariance(self),
            TheoremId::T3 => checks::gamma_bound(self),
            TheoremId::T4 => checks::gamma_total_chain(self),
            TheoremId::T5 => checks::structural_lemma(self),
            TheoremId::T6 => checks::order_two(self),
            TheoremId::T7 => checks::order_three(self),
            TheoremId::T8 => checks::gamma_two(self),
            TheoremId::T9 => checks::efficient_chain(self),
            TheoremId::T10 => checks::observation_chains(self),
            TheoremId::T11 => checks::necessary_conditions(self),
            TheoremId::T12 => checks::independence_product(self),
            TheoremId::T13 => checks::well_covered(self),
            TheoremId::T14 => checks::well_dominated(self),
            TheoremId::T15 => checks::well_dominated_uniform(self),
            TheoremId::T16 => checks::well_total(self),
            TheoremId::T17 => checks::circulant_target(self),
        }
    }

    /// Like [`Analysis::run`], but solver errors become not-applicable
    /// verdicts carrying the error text.
    pub fn run_lenient(&self, id: TheoremId) -> Verdict {
        self.run(id)
            .unwrap_or_else(|e| Verdict::not_applicable(format!("guard: {e}")))
    }
}

/// Checks one result on `G[Φ]` with default guards.
pub fn check(id: TheoremId, base: &Graph, factors: &[Graph]) -> Result<Verdict> {
    check_with(&Solver::default(), id, base, factors)
}

pub fn check_with(solver: &Solver, id: TheoremId, base: &Graph, factors: &[Graph]) -> Result<Verdict> {
    Analysis::new(solver, base, factors)?.run(id)
}

/// Checks several results on one instance, sharing memoized work. Solver
/// errors become not-applicable verdicts.
pub fn check_many(solver: &Solver, ids: &[TheoremId], base: &Graph, factors: &[Graph]) -> Result<Vec<Verdict>> {
    let a = Analysis::new(solver, base, factors)?;
    Ok(ids.iter().map(|&id| a.run_lenient(id)).collect())
}

#[cfg(test)]
mod tests;
