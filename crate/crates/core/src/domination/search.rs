//! Exhaustive search kernels over single-word vertex masks.

use rayon::prelude::*;

use crate::bitset::{mask_bits, mask_cmp};
use crate::mask::MaskGraph;
use crate::properties::PropertyPair;

/// Orders at or above this split the top level of a search across threads.
const PARALLEL_ORDER: usize = 18;

/// Ascending-cardinality scan with lexicographic combination order.
pub(crate) struct SizeScan<'a> {
    mg: &'a MaskGraph,
    pair: PropertyPair,
    /// Largest closed neighborhood among vertices `>= i`.
    suffix_max_closed: Vec<u32>,
}

impl<'a> SizeScan<'a> {
    pub fn new(mg: &'a MaskGraph, pair: PropertyPair) -> Self {
        let mut suffix = vec![0u32; mg.n + 1];
        for v in (0..mg.n).rev() {
            suffix[v] = suffix[v + 1].max(mg.closed[v].count_ones());
        }
        SizeScan {
            mg,
            pair,
            suffix_max_closed: suffix,
        }
    }

    /// Lexicographically least `(A,B)`-dominating set of size `k`.
    pub fn first_of_size(&self, k: usize) -> Option<u64> {
        if k > self.mg.n {
            return None;
        }
        if k == 0 || self.mg.n < PARALLEL_ORDER {
            return self.first_from(0, k, 0, 0);
        }
        let hits: Vec<Option<u64>> = (0..=self.mg.n - k)
            .into_par_iter()
            .map(|v| self.first_from(v + 1, k - 1, 1 << v, self.mg.closed[v]))
            .collect();
        hits.into_iter().flatten().next()
    }

    /// Every `(A,B)`-dominating set of size `k`, in lexicographic order.
    pub fn all_of_size(&self, k: usize) -> Vec<u64> {
        if k > self.mg.n {
            return Vec::new();
        }
        if k == 0 || self.mg.n < PARALLEL_ORDER {
            let mut out = Vec::new();
            self.collect_from(0, k, 0, 0, &mut out);
            return out;
        }
        (0..=self.mg.n - k)
            .into_par_iter()
            .map(|v| {
                let mut out = Vec::new();
                self.collect_from(v + 1, k - 1, 1 << v, self.mg.closed[v], &mut out);
                out
            })
            .collect::<Vec<_>>()
            .concat()
    }

    fn hopeless(&self, start: usize, remaining: usize, covered: u64) -> bool {
        let missing = self.mg.full & !covered;
        if missing == 0 {
            return false;
        }
        if remaining == 0 || start >= self.mg.n {
            return true;
        }
        // The least undominated vertex needs a dominator at index >= start.
        let w = missing.trailing_zeros() as usize;
        if self.mg.closed[w] >> start == 0 {
            return true;
        }
        (remaining as u32) * self.suffix_max_closed[start] < missing.count_ones()
    }

    fn first_from(&self, start: usize, remaining: usize, chosen: u64, covered: u64) -> Option<u64> {
        if self.hopeless(start, remaining, covered) {
            return None;
        }
        if remaining == 0 {
            return self.accept(chosen).then_some(chosen);
        }
        for v in start..=self.mg.n - remaining {
            let hit = self.first_from(v + 1, remaining - 1, chosen | 1 << v, covered | self.mg.closed[v]);
            if hit.is_some() {
                return hit;
            }
        }
        None
    }

    fn collect_from(&self, start: usize, remaining: usize, chosen: u64, covered: u64, out: &mut Vec<u64>) {
        if self.hopeless(start, remaining, covered) {
            return;
        }
        if remaining == 0 {
            if self.accept(chosen) {
                out.push(chosen);
            }
            return;
        }
        for v in start..=self.mg.n - remaining {
            self.collect_from(v + 1, remaining - 1, chosen | 1 << v, covered | self.mg.closed[v], out);
        }
    }

    fn accept(&self, s: u64) -> bool {
        self.mg.prop(self.pair.a, s) && self.mg.prop(self.pair.b, self.mg.full & !s)
    }
}

/// Smallest `(A,B)`-dominating set, lexicographically least among optima.
pub(crate) fn minimum(mg: &MaskGraph, pair: PropertyPair) -> Option<u64> {
    if pair.is_superset_closed() && !mg.is_ab(pair, mg.full) {
        return None;
    }
    let scan = SizeScan::new(mg, pair);
    (0..=mg.n).find_map(|k| scan.first_of_size(k))
}

/// All minimum `(A,B)`-dominating sets.
pub(crate) fn minimum_family(mg: &MaskGraph, pair: PropertyPair) -> Vec<u64> {
    match minimum(mg, pair) {
        None => Vec::new(),
        Some(best) => SizeScan::new(mg, pair).all_of_size(best.count_ones() as usize),
    }
}

/// `MD_(A,B)` by tabulating every subset and taking a subset-OR transform:
/// `s` is minimal iff it is feasible and no `s - {v}` has a feasible subset.
pub(crate) fn minimal_family(mg: &MaskGraph, pair: PropertyPair) -> Vec<u64> {
    let n = mg.n;
    let size = 1usize << n;
    let feasible: Vec<bool> = if n >= 14 {
        (0..size as u64).into_par_iter().map(|s| mg.is_ab(pair, s)).collect()
    } else {
        (0..size as u64).map(|s| mg.is_ab(pair, s)).collect()
    };
    let mut below = feasible.clone();
    for i in 0..n {
        let bit = 1usize << i;
        for s in 0..size {
            if s & bit != 0 && below[s ^ bit] {
                below[s] = true;
            }
        }
    }
    let mut out: Vec<u64> = (0..size)
        .filter(|&s| feasible[s] && mask_bits(s as u64).all(|v| !below[s ^ (1 << v)]))
        .map(|s| s as u64)
        .collect();
    out.sort_by(|&a, &b| mask_cmp(a, b));
    out
}

/// Whether a feasible set has no feasible proper subset.
pub(crate) fn is_minimal(mg: &MaskGraph, pair: PropertyPair, s: u64) -> bool {
    if pair.is_superset_closed() {
        return mask_bits(s).all(|v| !mg.is_ab(pair, s & !(1 << v)));
    }
    // Walk the proper submasks of s.
    let mut sub = s.wrapping_sub(1) & s;
    loop {
        if sub != s && mg.is_ab(pair, sub) {
            return false;
        }
        if sub == 0 {
            return true;
        }
        sub = (sub - 1) & s;
    }
}

/// Largest minimal set by descending size, lexicographically least at that size.
pub(crate) fn maximum_minimal_descending(mg: &MaskGraph, pair: PropertyPair) -> Option<u64> {
    let scan = SizeScan::new(mg, pair);
    for k in (0..=mg.n).rev() {
        let hit = scan
            .all_of_size(k)
            .into_iter()
            .find(|&s| is_minimal(mg, pair, s));
        if hit.is_some() {
            return hit;
        }
    }
    None
}

/// Sets whose closed neighborhoods partition the vertex set.
pub(crate) fn efficient_family(mg: &MaskGraph) -> Vec<u64> {
    fn go(mg: &MaskGraph, chosen: u64, covered: u64, out: &mut Vec<u64>) {
        let missing = mg.full & !covered;
        if missing == 0 {
            out.push(chosen);
            return;
        }
        let w = missing.trailing_zeros() as usize;
        for u in mask_bits(mg.closed[w]) {
            if mg.closed[u] & covered == 0 {
                go(mg, chosen | 1 << u, covered | mg.closed[u], out);
            }
        }
    }
    let mut out = Vec::new();
    go(mg, 0, 0, &mut out);
    out.sort_by(|&a, &b| mask_cmp(a, b));
    out
}

/// Maximal independent sets by Bron–Kerbosch with pivoting on the
/// non-adjacency relation.
pub(crate) fn maximal_independent(mg: &MaskGraph) -> Vec<u64> {
    let compat: Vec<u64> = mg.closed.iter().map(|&c| mg.full & !c).collect();
    fn go(compat: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = mask_bits(p | x)
            .max_by_key(|&u| (p & compat[u]).count_ones())
            .expect("p is nonempty");
        for v in mask_bits(p & !compat[pivot]) {
            go(compat, r | 1 << v, p & compat[v], x & compat[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    go(&compat, 0, mg.full, 0, &mut out);
    out.sort_by(|&a, &b| mask_cmp(a, b));
    out
}

pub(crate) fn lex_max_by_size(family: &[u64]) -> Option<u64> {
    family.iter().copied().max_by(|&a, &b| {
        a.count_ones()
            .cmp(&b.count_ones())
            .then_with(|| mask_cmp(b, a))
    })
}
