//! Instance spaces and the parallel sweep driver.

use std::collections::BTreeMap;

use rand::seq::index;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::domination::Solver;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::to_graph6;

use super::catalog::{connected_bases, random_connected};
use super::{check_many, Status, TheoremId, Verdict};

#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub base: Graph,
    pub factors: Vec<Graph>,
}

/// Where a sweep draws its instances from.
#[derive(Debug, Clone)]
pub enum InstanceSpace {
    /// Every connected base of order `bmin..=bmax` (up to isomorphism),
    /// crossed with factor assignments from `pool`. Bases with more than
    /// `samples` assignments get `samples` distinct ones drawn with `seed`.
    Exhaustive {
        bmin: usize,
        bmax: usize,
        pool: Vec<Graph>,
        samples: usize,
        seed: u64,
    },
    /// `count` random connected bases of order `bmin..=bmax` with factors
    /// drawn uniformly from `pool`.
    Random {
        count: usize,
        bmin: usize,
        bmax: usize,
        pool: Vec<Graph>,
        seed: u64,
    },
    Explicit(Vec<Instance>),
}

impl InstanceSpace {
    pub fn seed(&self) -> Option<u64> {
        match self {
            InstanceSpace::Exhaustive { seed, .. } | InstanceSpace::Random { seed, .. } => Some(*seed),
            InstanceSpace::Explicit(_) => None,
        }
    }

    /// The instances in deterministic order.
    pub fn instances(&self) -> Result<Vec<Instance>> {
        match self {
            InstanceSpace::Explicit(v) => Ok(v.clone()),
            InstanceSpace::Exhaustive { bmin, bmax, pool, samples, seed } => {
                check_pool(pool)?;
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut out = Vec::new();
                for base in connected_bases((*bmin).max(1), *bmax)? {
                    for a in assignments(base.order(), pool.len(), *samples, &mut rng) {
                        out.push(Instance {
                            factors: a.iter().map(|&k| pool[k].clone()).collect(),
                            base: base.clone(),
                        });
                    }
                }
                Ok(out)
            }
            InstanceSpace::Random { count, bmin, bmax, pool, seed } => {
                check_pool(pool)?;
                if bmin > bmax || *bmin == 0 {
                    return Err(Error::invalid(format!("bad base order range {bmin}..={bmax}")));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..*count)
                    .map(|_| {
                        let n = rng.gen_range(*bmin..=*bmax);
                        let base = random_connected(&mut rng, n);
                        let factors = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
                        Instance { base, factors }
                    })
                    .collect())
            }
        }
    }
}

fn check_pool(pool: &[Graph]) -> Result<()> {
    if pool.is_empty() {
        return Err(Error::invalid("factor pool is empty"));
    }
    Ok(())
}

/// Index tuples into the pool: all of them in odometer order when there are
/// at most `samples`, otherwise `samples` distinct ones in ascending order.
fn assignments(n: usize, k: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
    let decode = |mut code: usize| {
        let mut a = vec![0; n];
        for slot in a.iter_mut().rev() {
            *slot = code % k;
            code /= k;
        }
        a
    };
    match k.checked_pow(n as u32) {
        Some(total) if total <= samples => (0..total).map(decode).collect(),
        Some(total) => {
            let mut picks = index::sample(rng, total, samples).into_vec();
            picks.sort_unstable();
            picks.into_iter().map(decode).collect()
        }
        None => (0..samples)
            .map(|_| (0..n).map(|_| rng.gen_range(0..k)).collect())
            .collect(),
    }
}

/// One JSON-lines report row.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub theorem: TheoremId,
    pub base_g6: String,
    pub factors_g6: Vec<String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sets: Vec<Vec<usize>>,
    pub values: BTreeMap<String, Value>,
    pub seed: Option<u64>,
}

impl Record {
    pub fn new(theorem: TheoremId, inst: &Instance, v: Verdict, seed: Option<u64>) -> Record {
        Record {
            theorem,
            base_g6: to_graph6(&inst.base),
            factors_g6: inst.factors.iter().map(to_graph6).collect(),
            status: v.status,
            reason: v.reason,
            sets: v.sets,
            values: v.values,
            seed,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    pub holds: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub first_violation: Option<Record>,
}

#[derive(Debug, Clone, Default)]
pub struct SweepOutcome {
    /// Instance-major, then theorem order.
    pub records: Vec<Record>,
    pub summaries: BTreeMap<TheoremId, Summary>,
}

impl SweepOutcome {
    pub fn violations(&self) -> usize {
        self.summaries.values().map(|s| s.violated).sum()
    }

    pub fn first_violation(&self) -> Option<&Record> {
        self.records.iter().find(|r| r.status == Status::Violated)
    }
}

/// Runs every check in `ids` on every instance of `space`. Instances run in
/// parallel (`jobs` worker threads, or rayon's default); results are
/// collected in instance order so the outcome does not depend on timing.
pub fn sweep(solver: &Solver, ids: &[TheoremId], space: &InstanceSpace, jobs: Option<usize>) -> Result<SweepOutcome> {
    let instances = space.instances()?;
    let seed = space.seed();
    let work = || -> Result<Vec<Vec<Verdict>>> {
        instances
            .par_iter()
            .map(|inst| check_many(solver, ids, &inst.base, &inst.factors))
            .collect()
    };
    let verdicts = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| Error::invalid(format!("thread pool: {e}")))?
            .install(work)?,
        None => work()?,
    };
    let mut out = SweepOutcome::default();
    for &id in ids {
        out.summaries.insert(id, Summary::default());
    }
    for (inst, vs) in instances.iter().zip(verdicts) {
        for (&id, v) in ids.iter().zip(vs) {
            let rec = Record::new(id, inst, v, seed);
            let s = out.summaries.get_mut(&id).expect("inserted above");
            match rec.status {
                Status::Holds => s.holds += 1,
                Status::NotApplicable => s.not_applicable += 1,
                Status::Violated => {
                    s.violated += 1;
                    if s.first_violation.is_none() {
                        s.first_violation = Some(rec.clone());
                    }
                }
            }
            out.records.push(rec);
        }
    }
    Ok(out)
}
