//! Functorial series and heights, the quasinilpotent residual,
//! subnormality, mutually permutable products and the nilpotency criteria.

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::functorial::{check_axioms, evaluate, Axiom, FunctorialExpr};
use crate::group::{intersect, join, join_all, normal_closure, quotient, Group, SubgroupSummary};
use crate::lattice::{all_subgroups, maximal_indices, normal_lattice};
use crate::radicals::{self, is_quasinilpotent, prime_divisors, Context};

/// Ascending series `1 = g_0 < g_1 < ... < g_h = G` with `g_{i+1}` the
/// preimage of `expr(G/g_i)`.
#[derive(Clone, Debug)]
pub struct GammaSeries {
    pub expr: FunctorialExpr,
    pub terms: Vec<Group>,
}

impl GammaSeries {
    pub fn height(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn group(&self) -> &Group {
        self.terms.last().unwrap()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.terms.iter().map(Group::order).collect()
    }
}

pub fn gamma_series(ctx: &Context, g: &Group, expr: &FunctorialExpr) -> Result<GammaSeries> {
    let mut terms = vec![Group::trivial(g.degree())];
    while terms.last().unwrap().order() < g.order() {
        let q = quotient(g, terms.last().unwrap(), &ctx.caps)?;
        let value = evaluate(ctx, expr, q.target())?;
        if value.is_trivial() {
            return Err(Error::StalledSeries {
                order: q.target().order(),
            });
        }
        terms.push(q.preimage(&value));
    }
    Ok(GammaSeries {
        expr: expr.clone(),
        terms,
    })
}

pub fn h_gamma(ctx: &Context, g: &Group, expr: &FunctorialExpr) -> Result<usize> {
    Ok(gamma_series(ctx, g, expr)?.height())
}

/// Height of the `F*`-series; `h*(1) = 0`.
pub fn h_star(ctx: &Context, g: &Group) -> Result<usize> {
    h_gamma(ctx, g, &FunctorialExpr::f_star())
}

/// Fitting height of a soluble group.
pub fn fitting_height(ctx: &Context, g: &Group) -> Result<usize> {
    if !radicals::is_soluble(g) {
        return Err(Error::NotSoluble(g.order()));
    }
    h_gamma(ctx, g, &FunctorialExpr::fitting())
}

/// Smallest normal subgroup with quasinilpotent quotient.
pub fn quasinilpotent_residual(ctx: &Context, g: &Group) -> Result<Group> {
    let caps = &ctx.caps;
    let l = normal_lattice(g, caps)?;
    let mut acc = g.clone();
    for n in l.members() {
        if n.is_subgroup_of(&acc) && acc.order() != n.order() {
            let q = quotient(g, n, caps)?;
            if is_quasinilpotent(q.target(), caps)? {
                acc = intersect(&acc, n, caps.max_elements)?;
            }
        }
    }
    if !is_quasinilpotent(quotient(g, &acc, caps)?.target(), caps)? {
        return Err(Error::Invalid(
            "quotient by the quasinilpotent residual is not quasinilpotent".into(),
        ));
    }
    Ok(acc)
}

/// `h` is subnormal in `g`: the chain `K_0 = g`, `K_{i+1} = h^{K_i}` reaches `h`.
pub fn is_subnormal(h: &Group, g: &Group) -> bool {
    if !h.is_subgroup_of(g) {
        return false;
    }
    let mut k = g.clone();
    loop {
        let next = normal_closure(&k, h);
        if next.order() == k.order() {
            return k.order() == h.order();
        }
        k = next;
    }
}

/// `h` is subnormal in `<h, r>`.
pub fn is_r_subnormal(h: &Group, r: &Group) -> Result<bool> {
    Ok(is_subnormal(h, &join(h, r)?))
}

#[derive(Clone, Debug)]
pub struct MutuallyPermutablePair {
    pub group: Group,
    pub a: Group,
    pub b: Group,
}

fn set_product(t: &crate::group::ElementTable, a: &FixedBitSet, b: &FixedBitSet) -> FixedBitSet {
    let mut out = FixedBitSet::with_capacity(t.len());
    for i in a.ones() {
        for j in b.ones() {
            out.insert(t.mul(i, j));
        }
    }
    out
}

/// All unordered pairs `(A, B)` with `AB = G`, `A` permuting with every
/// subgroup of `B` and `B` with every subgroup of `A`.
pub fn find_mutually_permutable(ctx: &Context, g: &Group) -> Result<Vec<MutuallyPermutablePair>> {
    let subs = all_subgroups(g, &ctx.caps)?;
    let t = subs.elements().clone();
    let sets = subs.sets();
    let n = subs.len();
    let total = g.order() as usize;
    let orders: Vec<usize> = sets.iter().map(|s| s.count_ones(..)).collect();
    let normal: Vec<bool> = subs.groups().iter().map(|h| h.is_normal_in(g)).collect();
    let mut memo: Vec<Option<bool>> = vec![None; n * n];
    let mut permutes = |i: usize, k: usize| -> bool {
        if let Some(v) = memo[i * n + k] {
            return v;
        }
        let v =
            if normal[i] || normal[k] || sets[i].is_subset(&sets[k]) || sets[k].is_subset(&sets[i])
            {
                true
            } else {
                let meet = sets[i].intersection_count(&sets[k]);
                let size = orders[i] * orders[k] / meet;
                total.is_multiple_of(size)
                    && set_product(&t, &sets[i], &sets[k]) == set_product(&t, &sets[k], &sets[i])
            };
        memo[i * n + k] = Some(v);
        memo[k * n + i] = Some(v);
        v
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let meet = sets[i].intersection_count(&sets[j]);
            if orders[i] * orders[j] / meet != total {
                continue;
            }
            let ok = subs
                .below(j)
                .collect::<Vec<_>>()
                .into_iter()
                .all(|k| permutes(i, k))
                && subs
                    .below(i)
                    .collect::<Vec<_>>()
                    .into_iter()
                    .all(|k| permutes(j, k));
            if ok {
                out.push(MutuallyPermutablePair {
                    group: g.clone(),
                    a: subs.groups()[i].clone(),
                    b: subs.groups()[j].clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Height bounds for a mutually permutable product.
#[derive(Clone, Debug, Serialize)]
pub struct ProductHeightVerdict {
    pub a_order: u64,
    pub b_order: u64,
    pub h_a: usize,
    pub h_b: usize,
    pub h_g: usize,
    /// `max <= h(G) <= max + 1` for `h*`.
    pub passed: bool,
    /// Same bounds with the Fitting height, for soluble groups.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fitting: Option<(usize, usize, usize, bool)>,
    /// Both factors quasinilpotent, in which case `h*(G) <= 2` is required.
    pub quasinilpotent_factors: bool,
    pub quasinilpotent_bound: bool,
}

fn within_one(ha: usize, hb: usize, hg: usize) -> bool {
    let m = ha.max(hb);
    m <= hg && hg <= m + 1
}

pub fn verify_permutable_product(
    ctx: &Context,
    pair: &MutuallyPermutablePair,
) -> Result<ProductHeightVerdict> {
    let (h_a, h_b, h_g) = (
        h_star(ctx, &pair.a)?,
        h_star(ctx, &pair.b)?,
        h_star(ctx, &pair.group)?,
    );
    let fitting = if radicals::is_soluble(&pair.group) {
        let (fa, fb, fg) = (
            fitting_height(ctx, &pair.a)?,
            fitting_height(ctx, &pair.b)?,
            fitting_height(ctx, &pair.group)?,
        );
        Some((fa, fb, fg, within_one(fa, fb, fg)))
    } else {
        None
    };
    let quasinilpotent_factors =
        is_quasinilpotent(&pair.a, &ctx.caps)? && is_quasinilpotent(&pair.b, &ctx.caps)?;
    Ok(ProductHeightVerdict {
        a_order: pair.a.order(),
        b_order: pair.b.order(),
        h_a,
        h_b,
        h_g,
        passed: within_one(h_a, h_b, h_g),
        fitting,
        quasinilpotent_factors,
        quasinilpotent_bound: !quasinilpotent_factors || h_g <= 2,
    })
}

impl ProductHeightVerdict {
    pub fn all_passed(&self) -> bool {
        self.passed && self.quasinilpotent_bound && self.fitting.is_none_or(|f| f.3)
    }
}

/// `h(G)` against the heights of factors that generate `G`.
#[derive(Clone, Debug, Serialize)]
pub struct JoinHeightVerdict {
    pub factors: Vec<SubgroupSummary>,
    pub factor_heights: Vec<usize>,
    pub h_g: usize,
    /// Equality was required (direct product, or F5 held for the join).
    pub equality_required: bool,
    pub passed: bool,
}

/// `G` is the direct product of the normal subgroups `factors`; requires
/// `h*(G) = max h*(factor)`.
pub fn verify_direct_product_height(
    ctx: &Context,
    g: &Group,
    factors: &[Group],
) -> Result<JoinHeightVerdict> {
    let product: u64 = factors.iter().map(Group::order).product();
    if product != g.order()
        || join_all(g.degree(), factors) != *g
        || !factors.iter().all(|f| f.is_normal_in(g))
    {
        return Err(Error::Invalid(
            "factors do not form a direct decomposition".into(),
        ));
    }
    join_verdict(ctx, g, factors, true)
}

/// `G` is generated by the subnormal subgroups `factors`: `h*(G) <= max`
/// always, with equality required when F5 holds for `F*` on `G`.
pub fn verify_subnormal_join_height(
    ctx: &Context,
    g: &Group,
    factors: &[Group],
) -> Result<JoinHeightVerdict> {
    if join_all(g.degree(), factors) != *g || !factors.iter().all(|f| is_subnormal(f, g)) {
        return Err(Error::Invalid(
            "factors are not subnormal generators".into(),
        ));
    }
    let f5 = check_axioms(ctx, &FunctorialExpr::f_star(), g, &[Axiom::F5])?.passed();
    join_verdict(ctx, g, factors, f5)
}

fn join_verdict(
    ctx: &Context,
    g: &Group,
    factors: &[Group],
    equality: bool,
) -> Result<JoinHeightVerdict> {
    let factor_heights = factors
        .iter()
        .map(|f| h_star(ctx, f))
        .collect::<Result<Vec<_>>>()?;
    let h_g = h_star(ctx, g)?;
    let m = factor_heights.iter().copied().max().unwrap_or(0);
    Ok(JoinHeightVerdict {
        factors: factors.iter().map(Group::summary).collect(),
        factor_heights,
        h_g,
        equality_required: equality,
        passed: if equality { h_g == m } else { h_g <= m },
    })
}

/// `h_~F(G) <= h_gamma(G) <= 2 h_~F(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct HeightBoundVerdict {
    pub expr: String,
    pub h_tilde: usize,
    pub h_gamma: usize,
    pub passed: bool,
}

pub fn verify_height_bounds(
    ctx: &Context,
    g: &Group,
    expr: &FunctorialExpr,
) -> Result<HeightBoundVerdict> {
    let h_tilde = h_gamma(ctx, g, &FunctorialExpr::f_tilde())?;
    let h = h_gamma(ctx, g, expr)?;
    Ok(HeightBoundVerdict {
        expr: expr.to_string(),
        h_tilde,
        h_gamma: h,
        passed: h_tilde <= h && h <= 2 * h_tilde,
    })
}

/// `h*(residual) = h*(G) - 1` for nontrivial `G`, and the `n`-th upper
/// power of `F*` reaches `G` exactly when `n >= h*(G)`.
#[derive(Clone, Debug, Serialize)]
pub struct ResidualVerdict {
    pub residual_order: u64,
    pub h_residual: usize,
    pub h_g: usize,
    pub residual_passed: bool,
    pub powers_passed: bool,
}

/// `F* * F* * ... * F*` with `n` factors, left nested.
pub fn upper_power(n: usize) -> FunctorialExpr {
    let mut e = FunctorialExpr::f_star();
    for _ in 1..n {
        e = FunctorialExpr::star(e, FunctorialExpr::f_star());
    }
    e
}

pub fn verify_residual_height(ctx: &Context, g: &Group) -> Result<ResidualVerdict> {
    let residual = quasinilpotent_residual(ctx, g)?;
    let h_residual = h_star(ctx, &residual)?;
    let h_g = h_star(ctx, g)?;
    let mut powers_passed = true;
    for n in 1..=h_g + 1 {
        let reaches = evaluate(ctx, &upper_power(n), g)? == *g;
        powers_passed &= reaches == (h_g <= n);
    }
    Ok(ResidualVerdict {
        residual_order: residual.order(),
        h_residual,
        h_g,
        residual_passed: g.is_trivial() || h_residual + 1 == h_g,
        powers_passed,
    })
}

/// Abnormal: `x` lies in `<H, H^x>` for every `x`.
pub fn is_abnormal(h: &Group, g: &Group, ctx: &Context) -> Result<bool> {
    let table = g.elements(ctx.caps.max_elements)?;
    for x in table.iter() {
        if h.contains(x) {
            continue;
        }
        let gens = h
            .generators()
            .iter()
            .cloned()
            .chain(h.generators().iter().map(|p| p.conjugate(x)));
        let gens: Vec<_> = gens.collect();
        if !Group::generated_by(g.degree(), gens.iter()).contains(x) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn normalizer(h: &Group, g: &Group, ctx: &Context) -> Result<Group> {
    let table = g.elements(ctx.caps.max_elements)?;
    Ok(Group::generated_by(
        g.degree(),
        table
            .iter()
            .filter(|x| h.generators().iter().all(|a| h.contains(&a.conjugate(x)))),
    ))
}

/// Sylow subgroups as the maximal `p`-subgroups, all primes.
pub fn sylow_subgroups(ctx: &Context, g: &Group) -> Result<Vec<Group>> {
    let subs = all_subgroups(g, &ctx.caps)?;
    let mut out = Vec::new();
    for p in prime_divisors(g.order()) {
        let mut part = 1;
        while g.order().is_multiple_of(part * p) {
            part *= p;
        }
        let is_p = |h: &Group| prime_divisors(h.order()).iter().all(|&q| q == p);
        let ps: Vec<usize> = (0..subs.len())
            .filter(|&i| is_p(&subs.groups()[i]))
            .collect();
        for &i in &ps {
            let maximal = !ps
                .iter()
                .any(|&j| j != i && subs.sets()[i].is_subset(&subs.sets()[j]));
            if maximal {
                let h = subs.groups()[i].clone();
                assert_eq!(
                    h.order(),
                    part,
                    "maximal p-subgroup is not a full Sylow subgroup"
                );
                out.push(h);
            }
        }
    }
    Ok(out)
}

/// Verdicts of the six equivalent nilpotency conditions.
#[derive(Clone, Debug, Serialize)]
pub struct NilpotencyVerdict {
    pub nilpotent: bool,
    pub maximal_tilde_subnormal: bool,
    pub abnormal_star_subnormal: bool,
    pub sylow_normalizers_star_subnormal: bool,
    pub cyclic_primary_star_subnormal: bool,
    pub sylow_star_subnormal: bool,
}

impl NilpotencyVerdict {
    pub fn values(&self) -> [bool; 6] {
        [
            self.nilpotent,
            self.maximal_tilde_subnormal,
            self.abnormal_star_subnormal,
            self.sylow_normalizers_star_subnormal,
            self.cyclic_primary_star_subnormal,
            self.sylow_star_subnormal,
        ]
    }

    pub fn agree(&self) -> bool {
        let v = self.values();
        v.iter().all(|&b| b == v[0])
    }
}

fn all_r_subnormal(hs: &[Group], r: &Group) -> Result<bool> {
    for h in hs {
        if !is_r_subnormal(h, r)? {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn verify_nilpotency_criteria(ctx: &Context, g: &Group) -> Result<NilpotencyVerdict> {
    let caps = &ctx.caps;
    let subs = all_subgroups(g, caps)?;
    let f_star = radicals::f_star(g, caps)?;
    let f_tilde = radicals::f_tilde(g, caps)?;

    let maximal: Vec<Group> = maximal_indices(&subs)
        .into_iter()
        .map(|i| subs.groups()[i].clone())
        .collect();
    let mut abnormal = Vec::new();
    for h in subs.groups() {
        if is_abnormal(h, g, ctx)? {
            abnormal.push(h.clone());
        }
    }
    let sylows = sylow_subgroups(ctx, g)?;
    let normalizers = sylows
        .iter()
        .map(|p| normalizer(p, g, ctx))
        .collect::<Result<Vec<_>>>()?;
    let cyclic_primary: Vec<Group> = subs
        .groups()
        .iter()
        .filter(|h| h.generators().len() == 1 && prime_divisors(h.order()).len() == 1)
        .cloned()
        .collect();

    Ok(NilpotencyVerdict {
        nilpotent: radicals::is_nilpotent(g),
        maximal_tilde_subnormal: all_r_subnormal(&maximal, &f_tilde)?,
        abnormal_star_subnormal: all_r_subnormal(&abnormal, &f_star)?,
        sylow_normalizers_star_subnormal: all_r_subnormal(&normalizers, &f_star)?,
        cyclic_primary_star_subnormal: all_r_subnormal(&cyclic_primary, &f_star)?,
        sylow_star_subnormal: all_r_subnormal(&sylows, &f_star)?,
    })
}
