//! One function per checked result. Each returns `not-applicable` when its
//! hypotheses fail and otherwise compares exact values.

use std::collections::HashSet;

use crate::bitset::VertexSet;
use crate::domination::{is_ab_dominating, is_efficient_dominating, Mu};
use crate::error::Result;
use crate::graph::{are_isomorphic, Graph, ISOMORPHISM_LIMIT};
use crate::properties::{PropertyId, PropertyPair};

use super::facts::{Facts, FI, IC, II, IT, MC, MI, S0I, TC, TI, TT};
use super::{Analysis, Checker, Verdict, LAYER_LIMIT};

macro_rules! applicable {
    ($reason:expr) => {
        if let Some(r) = $reason {
            return Ok(Verdict::not_applicable(r));
        }
    };
}

fn sum_over(set: &VertexSet, vals: &[usize]) -> usize {
    set.iter().map(|i| vals[i]).sum()
}

/// Odometer step; `false` once every index has wrapped.
fn advance(idx: &mut [usize], sizes: &[usize]) -> bool {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < sizes[k] {
            return true;
        }
        idx[k] = 0;
    }
    false
}

fn all_equal(vals: &[usize]) -> bool {
    vals.windows(2).all(|w| w[0] == w[1])
}

pub(crate) fn folklore(a: &Analysis) -> Result<Verdict> {
    let p = &a.p;
    let g = p.graph();
    let base = p.base();
    let nb = base.order();
    let mut c = Checker::new();

    for (i, f) in p.factors().iter().enumerate() {
        c.expect(g.induced_subgraph(&p.block(i)) == *f, || {
            format!("block {i} does not induce its factor")
        });
    }

    let base_dist: Vec<_> = (0..nb).map(|i| base.distances_from(i)).collect();
    let mut pairs = 0usize;
    for x in 0..g.order() {
        let i = p.block_of(x);
        let dx = g.distances_from(x);
        for (y, &d) in dx.iter().enumerate().skip(x + 1) {
            let j = p.block_of(y);
            if i == j {
                continue;
            }
            pairs += 1;
            c.expect(g.has_edge(x, y) == base.has_edge(i, j), || {
                format!("adjacency of {x},{y} differs from base pair {i},{j}")
            });
            c.expect(d == base_dist[i][j], || {
                format!("dist({x},{y}) = {d:?} but base dist({i},{j}) = {:?}", base_dist[i][j])
            });
        }
    }
    c.value("cross_pairs", pairs);

    let mut layers = 0usize;
    for choice in p.layer_choices().take(LAYER_LIMIT) {
        let u = p.g_layer(&choice)?;
        let ok = (0..nb).all(|i| {
            (i + 1..nb).all(|j| {
                g.has_edge(p.vertex(i, choice[i]), p.vertex(j, choice[j])) == base.has_edge(i, j)
            })
        });
        c.expect_sets(ok && u.len() == nb, &[&u], || format!("layer {choice:?} is not a copy of the base"));
        if layers == 0 && nb <= 8 {
            let iso = are_isomorphic(&g.induced_subgraph(&u), base)?;
            c.expect_sets(iso, &[&u], || "first layer not isomorphic to the base".into());
        }
        layers += 1;
    }
    c.value("layers", layers);

    if nb >= 2 {
        c.value("connected", g.is_connected());
        c.expect(g.is_connected() == base.is_connected(), || {
            "product connectivity differs from base connectivity".into()
        });
    }

    if base.is_edgeless() {
        let union = p.factors()[1..]
            .iter()
            .fold(p.factors()[0].clone(), |acc, f| acc.disjoint_union(f));
        c.expect(*g == union, || "edgeless base does not give the disjoint union".into());
    }

    let trivial = p.factors().iter().all(|f| f.order() == 1);
    let iso = if g.order() != nb {
        false
    } else if nb <= ISOMORPHISM_LIMIT {
        are_isomorphic(g, base)?
    } else {
        g == base
    };
    c.value("trivial", trivial);
    c.expect(iso == trivial, || {
        format!("product isomorphic to base is {iso} but all factors K1 is {trivial}")
    });
    Ok(c.finish())
}

pub(crate) fn total_invariance(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let p = &a.p;
    let mut c = Checker::new();
    let gb = a.base.gamma(TI)?;
    let gp = a.prod.gamma(TI)?;
    c.value("gamma_t_base", gb);
    c.value("gamma_t_product", gp);
    let (Some(gb), Some(gp)) = (c.present(gb, "total domination of the base"), c.present(gp, "total domination of the product")) else {
        return Ok(c.finish());
    };
    c.expect(gb == gp, || format!("gamma_t(G) = {gb} but gamma_t(G[F]) = {gp}"));
    let mut lifted = 0usize;
    for i in a.base.minimum(TI)?.iter() {
        for choice in p.layer_choices().take(LAYER_LIMIT) {
            let u = p.lift_through_layer(i, &choice);
            lifted += 1;
            c.expect_sets(is_ab_dominating(p.graph(), &u, TI) && u.len() == gp, &[&u], || {
                format!("layer image of {i} is not a gamma_t-set of the product")
            });
        }
    }
    c.value("lifted_sets", lifted);
    Ok(c.finish())
}

pub(crate) fn gamma_bound(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let p = &a.p;
    let base = &a.base.g;
    let mut c = Checker::new();
    let gb = a.base.dom()?;
    let gp = a.prod.dom()?;
    let fg = a.factor_gammas()?;
    c.value("gamma_base", gb);
    c.value("gamma_product", gp);
    c.value("gamma_factors", &fg);
    c.expect(gb <= gp, || format!("gamma(G) = {gb} > gamma(G[F]) = {gp}"));

    let condition = a
        .base
        .minimum(II)?
        .iter()
        .any(|i| i.iter().all(|j| base.neighbors(j).intersects(i) || fg[j] == 1));
    c.value("condition", condition);
    c.expect(condition == (gb == gp), || {
        format!("equality is {} but the gamma-set condition is {condition}", gb == gp)
    });
    if gb == gp {
        for d in a.prod.minimum(II)?.iter() {
            c.expect_sets(p.block_counts(d).iter().all(|&k| k <= 1), &[d], || {
                "a gamma-set meets a block twice although gamma(G) = gamma(G[F])".into()
            });
        }
    }
    if fg.iter().all(|&x| x == 1) {
        c.expect(gb == gp, || "all factors have gamma 1 but gamma changed".into());
    }
    Ok(c.finish())
}

pub(crate) fn gamma_total_chain(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let mut c = Checker::new();
    let g = a.base.dom()?;
    let gp = a.prod.dom()?;
    let gtb = c.present(a.base.gamma(TI)?, "total domination of the base");
    let gtp = c.present(a.prod.gamma(TI)?, "total domination of the product");
    let (Some(gtb), Some(gtp)) = (gtb, gtp) else {
        return Ok(c.finish());
    };
    c.value("chain", [g, gp, gtp, gtb, 2 * g, 2 * gp]);
    c.expect(g <= gp && gp <= gtp && gtp == gtb && gtb <= 2 * g && g <= gp, || {
        format!("chain {g} <= {gp} <= {gtp} = {gtb} <= {} <= {} fails", 2 * g, 2 * gp)
    });
    if g == gtb {
        c.expect(gp == gtp, || "gamma(G) = gamma_t(G) but the product values differ".into());
    }
    if gtp == 2 * gp {
        c.expect(gtb == 2 * g, || "gamma_t(G[F]) = 2 gamma(G[F]) but not on the base".into());
    }
    Ok(c.finish())
}

/// Checks `U` is a minimum `ν`-set of the product.
fn optimal_for(c: &mut Checker, a: &Analysis, u: &VertexSet, nu: PropertyPair, tag: &str) -> Result<()> {
    let opt = a.prod.gamma(nu)?;
    let g = a.p.graph();
    c.expect_sets(is_ab_dominating(g, u, nu) && opt == Some(u.len()), &[u], || {
        format!("{tag}: set of size {} is not a {nu}-set (optimum {opt:?})", u.len())
    });
    Ok(())
}

pub(crate) fn structural_lemma(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(2));
    let p = &a.p;
    let base = &a.base.g;
    let g = p.graph();
    let fg = a.factor_gammas()?;
    let all_two = fg.iter().all(|&x| x >= 2);
    let mut c = Checker::new();
    let mut sets = 0usize;
    let mut rewritten = 0usize;
    for mu in [Mu::Gamma, Mu::GammaT] {
        let pair = mu.pair();
        for d in a.prod.minimum(pair)?.iter() {
            sets += 1;
            let counts = p.block_counts(d);
            if !c.expect_sets(counts.iter().all(|&k| k <= 2), &[d], || format!("{mu:?}-set meets a block 3+ times")) {
                continue;
            }
            let doubly: Vec<usize> = (0..counts.len()).filter(|&i| counts[i] == 2).collect();
            for &s in &doubly {
                c.expect_sets(base.neighbors(s).iter().all(|j| counts[j] == 0), &[d], || {
                    format!("doubly-hit block {s} has a set vertex in a neighboring block")
                });
                let local = p.restrict_to_block(d, s);
                let is_mu = a.factors[s].minimum(pair)?.contains(&local);
                c.expect_sets(is_mu, &[d], || format!("pair in block {s} is not a {mu:?}-set of its factor"));
            }
            for (k, &s) in doubly.iter().enumerate() {
                for &t in &doubly[k + 1..] {
                    let far = base.distance(s, t).is_none_or(|x| x >= 3);
                    c.expect_sets(far, &[d], || format!("doubly-hit blocks {s},{t} are closer than 3"));
                }
            }
            let u = if doubly.is_empty() {
                d.clone()
            } else {
                rewritten += 1;
                match a.solver.d_star_transform(p, d, mu) {
                    Ok(u) => u,
                    Err(e) => {
                        c.expect_sets(false, &[d], || format!("rewrite failed: {e}"));
                        continue;
                    }
                }
            };
            let one_per_block = p.block_counts(&u).iter().all(|&k| k <= 1);
            c.expect_sets(u.len() == d.len() && is_ab_dominating(g, &u, pair) && one_per_block, &[d, &u], || {
                format!("rewritten set is not a {mu:?}-set with one vertex per block")
            });
            let extra = match mu {
                Mu::Gamma => [IT, IC],
                Mu::GammaT => [TT, TC],
            };
            for nu in extra {
                optimal_for(&mut c, a, &u, nu, "part (iii)")?;
            }
            if mu == Mu::Gamma && all_two {
                for nu in [IT, TI, TT, IC, TC] {
                    optimal_for(&mut c, a, &u, nu, "part (iv)")?;
                }
            }
        }
    }
    c.value("sets_checked", sets);
    c.value("sets_rewritten", rewritten);
    c.value("all_factor_gamma_ge_2", all_two);
    Ok(c.finish())
}

pub(crate) fn order_two(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(2));
    let mut c = Checker::new();
    let lower = [a.prod.gamma(II)?, a.prod.gamma(IT)?, a.prod.gamma(IC)?];
    let total = [a.base.gamma(TI)?, a.prod.gamma(TI)?, a.prod.gamma(TT)?, a.prod.gamma(TC)?];
    c.value("gamma_r_oc", lower);
    c.value("gamma_t_base_t_tr_toc", total);
    c.expect(lower.iter().all(|&x| x.is_some() && x == lower[0]), || {
        format!("gamma, gamma_r, gamma_oc differ: {lower:?}")
    });
    c.expect(total.iter().all(|&x| x.is_some() && x == total[0]), || {
        format!("gamma_t(G), gamma_t, gamma_tr, gamma_t_oc differ: {total:?}")
    });
    Ok(c.finish())
}

fn same_family(c: &mut Checker, f: &Facts, pairs: &[PropertyPair]) -> Result<()> {
    let first = f.minimum(pairs[0])?;
    for &q in &pairs[1..] {
        let other = f.minimum(q)?;
        c.expect(!first.is_empty() && first == other, || {
            format!("minimum {} sets and minimum {q} sets differ", pairs[0])
        });
    }
    Ok(())
}

pub(crate) fn order_three(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(3));
    let mut c = Checker::new();
    same_family(&mut c, &a.prod, &[II, IT, IC])?;
    same_family(&mut c, &a.prod, &[TI, TT, TC])?;
    c.value("gamma_sets", a.prod.minimum(II)?.len());
    c.value("gamma_t_sets", a.prod.minimum(TI)?.len());
    Ok(c.finish())
}

pub(crate) fn gamma_two(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let fg = a.factor_gammas()?;
    let least = fg.iter().copied().min().unwrap_or(0);
    applicable!((least < 2).then_some("a factor has gamma < 2"));
    let six = [II, IT, TI, TT, IC, TC];
    let mut c = Checker::new();
    let vals = six.map(|q| a.prod.gamma(q));
    let vals: Vec<Option<usize>> = vals.into_iter().collect::<Result<_>>()?;
    c.value("six", &vals);
    c.expect(vals.iter().all(|&x| x.is_some() && x == vals[0]), || {
        format!("six parameters differ: {vals:?}")
    });
    if least >= 3 {
        same_family(&mut c, &a.prod, &six)?;
    }
    c.value("strong", least >= 3);
    Ok(c.finish())
}

pub(crate) fn efficient_chain(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(2));
    let p = &a.p;
    let g = p.graph();
    let hyp: Vec<VertexSet> = a
        .prod
        .minimum(II)?
        .iter()
        .filter(|d| p.block_counts(d).iter().all(|&k| k != 1))
        .cloned()
        .collect();
    applicable!(hyp.is_empty().then_some("no gamma-set avoids meeting a block exactly once"));
    let mut c = Checker::new();
    let gb = a.base.dom()?;
    let chain = [
        Some(2 * gb),
        a.base.gamma(TI)?,
        a.prod.gamma(II)?,
        a.prod.gamma(IT)?,
        a.prod.gamma(TI)?,
        a.prod.gamma(TT)?,
        a.prod.gamma(IC)?,
        a.prod.gamma(TC)?,
        a.prod.gamma(MI)?,
        a.prod.gamma(MC)?,
    ];
    c.value("chain", chain);
    c.value("hypothesis_sets", hyp.len());
    c.expect(chain.iter().all(|&x| x == chain[0]), || format!("chain not constant: {chain:?}"));
    for d in &hyp {
        let counts = p.block_counts(d);
        c.expect_sets(counts.iter().all(|&k| k == 0 || k == 2), &[d], || "a block meets the set 3+ times".into());
        let hit = p.blocks_hit(d);
        c.expect_sets(is_efficient_dominating(&a.base.g, &hit), &[d], || {
            format!("hit blocks {hit} are not efficient dominating in the base")
        });
        match a.solver.d_star_transform(p, d, Mu::Gamma) {
            Ok(u) => {
                c.expect_sets(u.len() == d.len() && is_ab_dominating(g, &u, MC), &[d, &u], || {
                    "rewritten set is not a dominating (M,C)-set".into()
                });
            }
            Err(e) => {
                c.expect_sets(false, &[d], || format!("rewrite failed: {e}"));
            }
        }
    }
    Ok(c.finish())
}

/// Pairs covered by the observation on maximal independent sets, and
/// whether each needs every factor to have minimum degree at least 1.
fn observation_pairs() -> Vec<(PropertyPair, bool)> {
    let mut out = vec![(II, false), (FI, false)];
    for k in 0..=2 {
        out.push((PropertyPair::new(PropertyId::MaxDeg(k), PropertyId::All), false));
    }
    out.extend([(IT, true), (TI, true), (TT, true), (MI, true)]);
    out
}

/// Largest `|𝒟|` enumerated by the observation check.
const UNION_LIMIT: usize = 20_000;

/// Factor parameters for one pair, or a reason to skip the pair.
struct PairData {
    lo: Vec<usize>,
    hi: Vec<usize>,
}

fn pair_data(a: &Analysis, pair: PropertyPair, needs_degree: bool) -> Result<std::result::Result<PairData, String>> {
    if needs_degree && a.factors.iter().any(|f| f.min_degree() == 0) {
        return Ok(Err("a factor has an isolated vertex".into()));
    }
    let mut lo = Vec::new();
    let mut hi = Vec::new();
    for (i, f) in a.factors.iter().enumerate() {
        match (f.gamma(pair)?, f.upper(pair)?) {
            (Some(l), Some(h)) => {
                lo.push(l);
                hi.push(h);
            }
            _ => return Ok(Err(format!("factor {i} has no dominating {pair}-set"))),
        }
    }
    Ok(Ok(PairData { lo, hi }))
}

pub(crate) fn observation_chains(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let p = &a.p;
    let mut c = Checker::new();
    let mis = a.base.independent_sets()?;
    let i_g = mis.iter().map(VertexSet::len).min().unwrap_or(0);
    let beta = mis.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut checked = Vec::new();
    let mut skipped = Vec::new();
    let mut failed = Vec::new();
    for (pair, needs_degree) in observation_pairs() {
        let before = c.failures();
        let data = match pair_data(a, pair, needs_degree)? {
            Ok(d) => d,
            Err(why) => {
                skipped.push(format!("{pair}: {why}"));
                continue;
            }
        };
        let total: usize = mis
            .iter()
            .map(|i| i.iter().map(|l| a.factors[l].minimal(pair).map(|f| f.len())).product::<Result<usize>>())
            .sum::<Result<usize>>()?;
        if total > UNION_LIMIT {
            skipped.push(format!("{pair}: {total} unions exceed {UNION_LIMIT}"));
            continue;
        }
        let family: HashSet<VertexSet> = a.prod.minimal(pair)?.iter().cloned().collect();
        let (mut min_u, mut max_u) = (usize::MAX, 0usize);
        for i in mis.iter() {
            let blocks: Vec<usize> = i.to_vec();
            let local: Vec<_> = blocks
                .iter()
                .map(|&l| a.factors[l].minimal(pair))
                .collect::<Result<_>>()?;
            let sizes: Vec<usize> = local.iter().map(|f| f.len()).collect();
            let mut idx = vec![0usize; blocks.len()];
            loop {
                let mut u = VertexSet::empty(p.order());
                for (k, &l) in blocks.iter().enumerate() {
                    u.union_with(&p.embed_in_block(l, &local[k][idx[k]]));
                }
                c.expect_sets(family.contains(&u), &[&u], || {
                    format!("{pair}: union over maximal independent set {i} is not minimal in the product")
                });
                min_u = min_u.min(u.len());
                max_u = max_u.max(u.len());
                if !advance(&mut idx, &sizes) {
                    break;
                }
            }
        }
        let gp = a.prod.gamma(pair)?;
        let up = a.prod.upper(pair)?;
        let min_sum = mis.iter().map(|i| sum_over(i, &data.lo)).min().unwrap_or(0);
        let max_sum = mis.iter().map(|i| sum_over(i, &data.hi)).max().unwrap_or(0);
        let min_iset = mis.iter().filter(|i| i.len() == i_g).map(|i| sum_over(i, &data.lo)).min().unwrap_or(0);
        let max_bset = mis.iter().filter(|i| i.len() == beta).map(|i| sum_over(i, &data.hi)).max().unwrap_or(0);
        let lo_bound = i_g * data.lo.iter().copied().max().unwrap_or(0);
        let hi_bound = beta * data.hi.iter().copied().min().unwrap_or(0);
        c.value(&format!("chain1 {pair}"), [gp, Some(min_u), Some(min_sum), Some(min_iset), Some(lo_bound)]);
        c.value(&format!("chain2 {pair}"), [up, Some(max_u), Some(max_sum), Some(max_bset), Some(hi_bound)]);
        let ok1 = gp.is_some_and(|x| x <= min_u) && min_u == min_sum && min_sum <= min_iset && min_iset <= lo_bound;
        let ok2 = up.is_some_and(|x| x >= max_u) && max_u == max_sum && max_sum >= max_bset && max_bset >= hi_bound;
        c.expect(ok1, || format!("{pair}: lower chain fails: {gp:?} <= {min_u} = {min_sum} <= {min_iset} <= {lo_bound}"));
        c.expect(ok2, || format!("{pair}: upper chain fails: {up:?} >= {max_u} = {max_sum} >= {max_bset} >= {hi_bound}"));
        checked.push(pair.to_string());
        if c.failures() > before {
            failed.push(pair.to_string());
        }
    }
    c.value("pairs", &checked);
    if !skipped.is_empty() {
        c.value("skipped", &skipped);
    }
    if !failed.is_empty() {
        c.value("failed_pairs", &failed);
    }
    Ok(c.finish())
}

pub(crate) fn necessary_conditions(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let mut c = Checker::new();
    let mis = a.base.independent_sets()?;
    let i_g = mis.iter().map(VertexSet::len).min().unwrap_or(0);
    let beta = mis.iter().map(VertexSet::len).max().unwrap_or(0);
    let mut checked = Vec::new();
    let mut failed = Vec::new();
    for (pair, needs_degree) in observation_pairs() {
        let Ok(data) = pair_data(a, pair, needs_degree)? else {
            continue;
        };
        let before = c.failures();
        let (Some(gp), Some(up)) = (a.prod.gamma(pair)?, a.prod.upper(pair)?) else {
            c.expect(false, || format!("{pair}: product has no feasible set"));
            continue;
        };
        let well = gp == up;
        if well {
            c.expect((0..data.lo.len()).all(|i| data.lo[i] == data.hi[i]), || {
                format!("{pair}: product well dominated but a factor is not")
            });
            for i in mis.iter() {
                let s = sum_over(i, &data.lo);
                c.expect(s == gp, || format!("{pair}: sum over {i} is {s}, product value {gp}"));
            }
        }
        if all_equal(&data.lo) && all_equal(&data.hi) {
            let (l, h) = (data.lo[0], data.hi[0]);
            c.expect(gp <= i_g * l && i_g * l <= beta * h && beta * h <= up, || {
                format!("{pair}: {gp} <= {} <= {} <= {up} fails", i_g * l, beta * h)
            });
            if well {
                c.expect(i_g == beta, || format!("{pair}: product well dominated but base not well covered"));
            }
        }
        checked.push(format!("{pair}{}", if well { " well" } else { "" }));
        if c.failures() > before {
            failed.push(pair.to_string());
        }
    }
    c.value("pairs", &checked);
    if !failed.is_empty() {
        c.value("failed_pairs", &failed);
    }
    Ok(c.finish())
}

/// `(i, β_0)` via the independent-dominating pair.
fn independence(f: &Facts) -> Result<(usize, usize)> {
    let lo = f.gamma(S0I)?.expect("maximal independent sets exist");
    let hi = f.upper(S0I)?.expect("maximal independent sets exist");
    Ok((lo, hi))
}

pub(crate) fn independence_product(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let fi: Vec<(usize, usize)> = a.factors.iter().map(independence).collect::<Result<_>>()?;
    let lows: Vec<usize> = fi.iter().map(|x| x.0).collect();
    let highs: Vec<usize> = fi.iter().map(|x| x.1).collect();
    let (eq_i, eq_b) = (all_equal(&lows), all_equal(&highs));
    applicable!((!eq_i && !eq_b).then_some("neither i nor beta0 is constant over factors"));
    let (ib, bb) = independence(&a.base)?;
    let (ip, bp) = independence(&a.prod)?;
    let mut c = Checker::new();
    c.value("i", [ip, ib, lows[0]]);
    c.value("beta0", [bp, bb, highs[0]]);
    if eq_i {
        c.expect(ip == ib * lows[0], || format!("i(G[F]) = {ip} but i(G) i(F) = {}", ib * lows[0]));
    }
    if eq_b {
        c.expect(bp == bb * highs[0], || format!("beta0(G[F]) = {bp} but product is {}", bb * highs[0]));
    }
    Ok(c.finish())
}

pub(crate) fn well_covered(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let fi: Vec<(usize, usize)> = a.factors.iter().map(independence).collect::<Result<_>>()?;
    let (ip, bp) = independence(&a.prod)?;
    let direct = ip == bp;
    let factors_ok = fi.iter().all(|&(i, b)| i == b);
    let betas: Vec<usize> = fi.iter().map(|x| x.1).collect();
    let sums: Vec<usize> = a.base.independent_sets()?.iter().map(|i| sum_over(i, &betas)).collect();
    let characterized = factors_ok && all_equal(&sums);
    let mut c = Checker::new();
    c.value("well_covered", direct);
    c.value("characterization", characterized);
    c.expect(direct == characterized, || {
        format!("i = beta0 is {direct} but the characterization gives {characterized}")
    });
    Ok(c.finish())
}

pub(crate) fn well_dominated(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(2));
    let mut c = Checker::new();
    let direct = a.prod.well(II)?.expect("V dominates");
    let factors_ok = a
        .factors
        .iter()
        .map(|f| Ok(f.well(II)?.expect("V dominates") && f.dom()? <= 2))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|x| x);
    let fs: Vec<Graph> = a.factors.iter().map(|f| f.g.clone()).collect();
    let mut ks = Vec::new();
    for r in a.base.minimal(II)?.iter() {
        let ir = a.solver.i_r_set(&a.base.g, &fs, r)?;
        ks.push(r.len() + ir.len());
    }
    ks.sort_unstable();
    ks.dedup();
    let characterized = factors_ok && ks.len() == 1;
    c.value("well_dominated", direct);
    c.value("factors_condition", factors_ok);
    c.value("r_plus_ir", &ks);
    c.expect(direct == characterized, || {
        format!("gamma = Gamma is {direct} but the characterization gives {characterized}")
    });
    if direct {
        let gp = a.prod.dom()?;
        c.expect(ks == [gp], || format!("|R| + |I_R| takes values {ks:?}, gamma(G[F]) = {gp}"));
    }
    Ok(c.finish())
}

pub(crate) fn well_dominated_uniform(a: &Analysis) -> Result<Verdict> {
    applicable!(a.orders_at_least(2));
    let fg = a.factor_gammas()?;
    let fu: Vec<usize> = a
        .factors
        .iter()
        .map(|f| Ok(f.upper(II)?.expect("V dominates")))
        .collect::<Result<_>>()?;
    applicable!((!all_equal(&fg) || !all_equal(&fu)).then_some("factor gamma or Gamma values differ"));
    let mut c = Checker::new();
    let direct = a.prod.well(II)?.expect("V dominates");
    let base_well = a.base.well(II)?.expect("V dominates");
    let all_complete = a.factors.iter().all(|f| f.g.is_complete());
    let first = base_well && all_complete;
    let second = a.base.g.is_complete() && fg[0] == 2 && fu[0] == 2;
    c.value("well_dominated", direct);
    c.value("uniform", a.uniform()?);
    c.value("conditions", [first, second]);
    c.expect(direct == (first || second), || {
        format!("gamma = Gamma is {direct} but conditions give {}", first || second)
    });
    Ok(c.finish())
}

pub(crate) fn well_total(a: &Analysis) -> Result<Verdict> {
    applicable!(a.standing());
    let p = &a.p;
    let degs: Vec<usize> = a.factors.iter().map(Facts::min_degree).collect();
    let positive = degs.iter().all(|&d| d >= 1);
    let zero = degs.iter().all(|&d| d == 0) && a.min_factor_order() >= 2;
    let uniform = a.min_factor_order() >= 2 && a.uniform()?;
    applicable!((!positive && !zero && !uniform).then_some("factor degrees are mixed"));
    let mut c = Checker::new();
    let direct = a.prod.well(TI)?;
    let Some(direct) = direct else {
        c.expect(false, || "product has no total dominating set".into());
        return Ok(c.finish());
    };
    let gtp = a.prod.gamma(TI)?.expect("checked above");
    c.value("well_total", direct);
    c.value("gamma_t_product", gtp);
    let base_complete = a.base.g.is_complete();
    let factor_two = |f: &Facts| -> Result<bool> { Ok(f.well(TI)? == Some(true) && f.gamma(TI)? == Some(2)) };

    if positive {
        let mut all_two = true;
        for f in &a.factors {
            all_two &= factor_two(f)?;
        }
        let rhs = base_complete && all_two;
        c.value("complete_case", rhs);
        c.expect(direct == rhs, || format!("well total is {direct} but the complete-base case gives {rhs}"));
        if direct {
            c.expect(gtp == 2, || format!("well total product has gamma_t = {gtp}"));
        }
    }

    if zero {
        let prod_family: HashSet<VertexSet> = a.prod.minimal(TI)?.iter().cloned().collect();
        let mut from_layers = HashSet::new();
        let mut layers = 0usize;
        for choice in p.layer_choices().take(LAYER_LIMIT) {
            layers += 1;
            let u = p.g_layer(&choice)?;
            let members = u.to_vec();
            let sub = p.graph().induced_subgraph(&u);
            for t in a.solver.enumerate_minimal(&sub, TI)? {
                from_layers.insert(VertexSet::from_vertices(p.order(), t.iter().map(|k| members[k])));
            }
        }
        c.value("layers_compared", layers == p.layer_count());
        if layers == p.layer_count() {
            let same = from_layers == prod_family;
            let extra: Vec<&VertexSet> = from_layers.symmetric_difference(&prod_family).take(1).collect();
            c.expect_sets(same, &extra, || "minimal total dominating sets differ from layer images".into());
        }
        let ub = a.base.upper(TI)?;
        let up = a.prod.upper(TI)?;
        c.value("upper_total", [ub, up]);
        c.expect(ub == up, || format!("Gamma_t(G) = {ub:?} but Gamma_t(G[F]) = {up:?}"));
        let base_well = a.base.well(TI)?;
        c.expect(Some(direct) == base_well, || {
            format!("product well total is {direct} but the base gives {base_well:?}")
        });
    }

    if uniform {
        let f = &a.factors[0];
        let first = base_complete && factor_two(f)?;
        let second = a.base.well(TI)? == Some(true) && f.min_degree() == 0;
        c.value("uniform_conditions", [first, second]);
        c.expect(direct == (first || second), || {
            format!("well total is {direct} but the uniform conditions give {}", first || second)
        });
    }
    Ok(c.finish())
}

pub(crate) fn circulant_target(a: &Analysis) -> Result<Verdict> {
    let base = &a.base.g;
    let n = base.order();
    applicable!((n < 6 || n % 4 != 2).then_some("base order is not 4k+2 with k >= 1"));
    let k = (n - 2) / 4;
    let member = Graph::circulant_family(k)?;
    let iso = if n <= ISOMORPHISM_LIMIT {
        are_isomorphic(base, &member)?
    } else {
        *base == member
    };
    applicable!((!iso).then_some("base is not a member of the circulant family"));
    let mut c = Checker::new();
    let eds = a.solver.enumerate_efficient(base)?;
    let gt = a.base.gamma(TI)?;
    c.value("k", k);
    c.value("gamma_t", gt);
    c.value("efficient_sets", eds.len());
    c.expect(eds.iter().any(|d| Some(2 * d.len()) == gt), || {
        format!("no efficient dominating set of size gamma_t/2 (gamma_t = {gt:?})")
    });
    Ok(c.finish())
}
