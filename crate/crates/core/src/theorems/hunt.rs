//! Randomized searches for open-problem witnesses.
//!
//! Every find is re-validated through the domination module before it is
//! reported, and every report row is plain JSON so it can be appended to a
//! JSON-lines log.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::bitset::VertexSet;
use crate::domination::{is_ab_dominating, is_efficient_dominating, ParamName, Solver};
use crate::error::{Error, Result};
use crate::glp::ProductGraph;
use crate::graph::{are_isomorphic, Graph};
use crate::io::to_graph6;

use super::catalog::random_connected;
use super::facts::TI;

/// How the circulant family is read: order `4k+2`, jumps `±1..±k`.
pub const CIRCULANT_READING: &str = "C(4k+2; 1..k and n-k..n-1)";

/// Members of the circulant family confirmed by every efficient-set hunt.
pub const CIRCULANT_KS: [usize; 3] = [1, 2, 3];

/// Order range of random graphs in the efficient-set hunt.
const EFF_ORDERS: (usize, usize) = (4, 12);
/// Base order range of random products in the well-dominated hunt.
const GLP_BASE_ORDERS: (usize, usize) = (2, 4);

/// Parameters the well-dominated product hunt accepts.
pub const HUNT_PARAMS: &str = "gamma_r, gamma_oc, gamma_tr, gamma_t_oc, gamma_a, gamma_p, gamma_k:<k>";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HuntTarget {
    /// Graphs with an efficient dominating set of size `γ_t/2`.
    EffGtHalf,
    /// Products that are well dominated for the given parameter.
    WellMu(ParamName),
}

impl fmt::Display for HuntTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HuntTarget::EffGtHalf => f.write_str("eff-gt-half"),
            HuntTarget::WellMu(p) => write!(f, "well-mu-glp:{p}"),
        }
    }
}

impl FromStr for HuntTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "eff-gt-half" {
            return Ok(HuntTarget::EffGtHalf);
        }
        let Some(param) = s.strip_prefix("well-mu-glp:") else {
            return Err(Error::invalid(format!("unknown hunt target '{s}'")));
        };
        let p: ParamName = param.parse()?;
        let ok = matches!(
            p,
            ParamName::GammaR
                | ParamName::GammaOc
                | ParamName::GammaTr
                | ParamName::GammaTOc
                | ParamName::GammaA
                | ParamName::GammaP
        ) || matches!(p, ParamName::GammaK(k) if k >= 1);
        if !ok {
            return Err(Error::invalid(format!("hunt parameter must be one of {HUNT_PARAMS}")));
        }
        Ok(HuntTarget::WellMu(p))
    }
}

/// Efficient dominating sets and `γ_t` of one circulant family member.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CirculantReport {
    pub k: usize,
    pub n: usize,
    pub graph_g6: String,
    pub efficient_sets: Vec<Vec<usize>>,
    pub gamma_t: Option<usize>,
    pub gamma_t_witness: Option<Vec<usize>>,
    /// Some efficient dominating set has size exactly `γ_t/2`.
    pub holds: bool,
}

pub fn circulant_report(solver: &Solver, k: usize) -> Result<CirculantReport> {
    let g = Graph::circulant_family(k)?;
    let eds = solver.enumerate_efficient(&g)?;
    let gt = solver.gamma_ab(&g, TI)?;
    if let Some(e) = &gt {
        assert!(is_ab_dominating(&g, &e.witness, TI), "total dominating witness re-validates");
    }
    assert!(eds.iter().all(|d| is_efficient_dominating(&g, d)));
    let value = gt.as_ref().map(|e| e.value);
    Ok(CirculantReport {
        k,
        n: g.order(),
        graph_g6: to_graph6(&g),
        holds: eds.iter().any(|d| Some(2 * d.len()) == value),
        efficient_sets: eds.iter().map(VertexSet::to_vec).collect(),
        gamma_t: value,
        gamma_t_witness: gt.map(|e| e.witness.to_vec()),
    })
}

/// Runs `budget` seeded trials and returns the report rows: circulant
/// confirmations first (efficient-set target), then finds in trial order.
/// A zero budget gives an empty report.
pub fn hunt(solver: &Solver, target: HuntTarget, budget: usize, seed: u64, pool: &[Graph]) -> Result<Vec<Value>> {
    if budget == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match target {
        HuntTarget::EffGtHalf => {
            let mut out = Vec::new();
            for k in CIRCULANT_KS {
                let r = circulant_report(solver, k)?;
                let mut v = serde_json::to_value(&r).expect("plain data");
                v["kind"] = json!("circulant");
                out.push(v);
            }
            let graphs: Vec<Graph> = (0..budget)
                .map(|_| {
                    let n = rng.gen_range(EFF_ORDERS.0..=EFF_ORDERS.1);
                    random_connected(&mut rng, n)
                })
                .collect();
            let finds: Vec<Option<Value>> = graphs
                .par_iter()
                .enumerate()
                .map(|(t, g)| eff_trial(solver, t, g, seed))
                .collect::<Result<_>>()?;
            out.extend(finds.into_iter().flatten());
            Ok(out)
        }
        HuntTarget::WellMu(param) => {
            if pool.is_empty() {
                return Err(Error::invalid("factor pool is empty"));
            }
            let instances: Vec<(Graph, Vec<Graph>)> = (0..budget)
                .map(|_| {
                    let n = rng.gen_range(GLP_BASE_ORDERS.0..=GLP_BASE_ORDERS.1);
                    let base = random_connected(&mut rng, n);
                    let factors = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
                    (base, factors)
                })
                .collect();
            let finds: Vec<Option<Value>> = instances
                .par_iter()
                .enumerate()
                .map(|(t, (b, f))| well_trial(solver, t, b, f, param, seed))
                .collect::<Result<_>>()?;
            Ok(finds.into_iter().flatten().collect())
        }
    }
}

fn eff_trial(solver: &Solver, trial: usize, g: &Graph, seed: u64) -> Result<Option<Value>> {
    let eds = solver.enumerate_efficient(g)?;
    if eds.is_empty() {
        return Ok(None);
    }
    let Some(gt) = solver.gamma_ab(g, TI)? else {
        return Ok(None);
    };
    let Some(d) = eds.iter().find(|d| 2 * d.len() == gt.value) else {
        return Ok(None);
    };
    assert!(is_efficient_dominating(g, d) && is_ab_dominating(g, &gt.witness, TI));
    let n = g.order();
    let member = n >= 6 && n % 4 == 2 && are_isomorphic(g, &Graph::circulant_family((n - 2) / 4)?)?;
    Ok(Some(json!({
        "kind": "find",
        "trial": trial,
        "seed": seed,
        "graph_g6": to_graph6(g),
        "order": n,
        "efficient_set": d.to_vec(),
        "gamma_t": gt.value,
        "gamma_t_witness": gt.witness.to_vec(),
        "circulant_member": member,
    })))
}

fn well_trial(solver: &Solver, trial: usize, base: &Graph, factors: &[Graph], param: ParamName, seed: u64) -> Result<Option<Value>> {
    let p = ProductGraph::build(base, factors)?;
    let g = p.graph();
    let pair = param.pair();
    let r = solver.domination_result(g, pair)?;
    let (Some(lo), Some(hi)) = (r.gamma, r.upper) else {
        return Ok(None);
    };
    if lo.value != hi.value {
        return Ok(None);
    }
    for w in [&lo.witness, &hi.witness] {
        assert!(solver.is_minimal_ab_dominating(g, w, pair)?, "witness re-validates");
    }
    Ok(Some(json!({
        "kind": "find",
        "trial": trial,
        "seed": seed,
        "param": param.to_string(),
        "base_g6": to_graph6(base),
        "factors_g6": factors.iter().map(to_graph6).collect::<Vec<_>>(),
        "product_g6": to_graph6(g),
        "value": lo.value,
        "minimal_sets": r.family_size,
        "witness": lo.witness.to_vec(),
    })))
}
