//! Acceptance run: one PASS/FAIL line per criterion, then a single assert.
//!
//! `cargo test -p fitfunc-core --test acceptance -- --nocapture` shows the lines.

use std::collections::{HashSet, VecDeque};
use std::time::{Duration, Instant};

use fitfunc_core::catalog::{self, CatalogEntry};
use fitfunc_core::functorial::{check_axioms, evaluate, omega, values_lattice, Axiom};
use fitfunc_core::group::{centralizer, direct_product_of};
use fitfunc_core::heights::{
    find_mutually_permutable, h_star, is_subnormal, verify_direct_product_height,
    verify_height_bounds, verify_nilpotency_criteria, verify_permutable_product,
    verify_residual_height, MutuallyPermutablePair,
};
use fitfunc_core::lattice::{all_subgroups, frattini, m_intersection};
use fitfunc_core::radicals;
use fitfunc_core::suite::{height_family, lattice_family, phi_pi_family, run_suite, Suite};
use fitfunc_core::{Caps, Context, FunctorialExpr as E, Group, Permutation};

/// Subgroup enumeration reaches every catalog entry (largest order 720).
const CAPS: Caps = Caps {
    max_order: 720,
    max_elements: 1_000_000,
    max_degree: 5000,
};
const CRITERION_1_BUDGET: Duration = Duration::from_secs(1);
const FULL_SUITE_BUDGET: Duration = Duration::from_secs(300);
/// Engine checks against naive closure stop at this order.
const CLOSURE_ORDER_LIMIT: u64 = 200;
/// Subnormality is checked pair by pair up to this order.
const SUBNORMAL_ORDER_LIMIT: u64 = 48;
const MIN_DICHOTOMY_SIDE: usize = 5;
const MIN_PRODUCT_ENTRIES: usize = 10;

type Outcome = Result<String, String>;

struct World {
    ctx: Context,
    groups: Vec<(CatalogEntry, Group)>,
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn s<T: std::fmt::Display>(e: T) -> String {
    e.to_string()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let ctx = Context::new(Caps::default());
    let g = catalog::named("S3");
    let h = h_star(&ctx, &g).map_err(s)?;
    ensure(h == 2, || format!("h*(S3) = {h}"))?;
    let a = Group::new(3, vec![Permutation::parse(3, "(1 2)").map_err(s)?]).map_err(s)?;
    let b = Group::new(3, vec![Permutation::parse(3, "(1 2 3)").map_err(s)?]).map_err(s)?;
    let pairs = find_mutually_permutable(&ctx, &g).map_err(s)?;
    let listed = pairs
        .iter()
        .any(|p| (p.a == a && p.b == b) || (p.a == b && p.b == a));
    ensure(listed, || {
        "(C2, A3) not found as a mutually permutable pair".into()
    })?;
    let v =
        verify_permutable_product(&ctx, &MutuallyPermutablePair { group: g, a, b }).map_err(s)?;
    let m = v.h_a.max(v.h_b);
    ensure(v.all_passed() && m == 1 && v.h_g == 2, || format!("{v:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < CRITERION_1_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "h*(S3) = 2, {m} <= {} <= {} in {elapsed:?}",
        v.h_g,
        m + 1
    ))
}

fn criterion_2(w: &World) -> Outcome {
    for (e, g) in &w.groups {
        let caps = &w.ctx.caps;
        let a = radicals::f_star(g, caps).map_err(s)?;
        let b = radicals::f_star_oracle(g, caps).map_err(s)?;
        let c = radicals::f_star_by_innerisers(g, caps).map_err(s)?;
        ensure(a == b && b == c, || {
            format!(
                "{}: orders {} {} {}",
                e.name,
                a.order(),
                b.order(),
                c.order()
            )
        })?;
    }
    let start = Instant::now();
    let report = run_suite(&catalog::catalog(), Caps::default(), &Suite::ALL);
    let elapsed = start.elapsed();
    ensure(report.passed(), || {
        let (g, c) = report.failures().next().unwrap();
        format!(
            "full suite failure: {} {} {}",
            g.name,
            c.suite.name(),
            c.check
        )
    })?;
    ensure(elapsed < FULL_SUITE_BUDGET, || {
        format!("full suite took {elapsed:?}")
    })?;
    Ok(format!(
        "{} groups agree; full suite {} checks in {elapsed:?}",
        w.groups.len(),
        report.summary.pass
    ))
}

fn criterion_3(w: &World) -> Outcome {
    for (e, g) in &w.groups {
        let a = radicals::fitting(g, &w.ctx.caps).map_err(s)?;
        let b = radicals::fitting_by_centralizers(g, &w.ctx.caps).map_err(s)?;
        ensure(a == b, || {
            format!("{}: {} vs {}", e.name, a.order(), b.order())
        })?;
    }
    Ok(format!("{} groups", w.groups.len()))
}

fn criterion_4(w: &World) -> Outcome {
    for (e, g) in &w.groups {
        let caps = &w.ctx.caps;
        let a = radicals::f_tilde(g, caps).map_err(s)?;
        let b = radicals::f_tilde_forster(g, caps).map_err(s)?;
        let c = radicals::f_tilde_by_innerisers(g, caps).map_err(s)?;
        ensure(a == b && b == c, || {
            format!(
                "{}: orders {} {} {}",
                e.name,
                a.order(),
                b.order(),
                c.order()
            )
        })?;
    }
    Ok(format!("{} groups", w.groups.len()))
}

fn criterion_5(w: &World) -> Outcome {
    let (mut full, mut not_full) = (0, 0);
    for (e, g) in &w.groups {
        let caps = &w.ctx.caps;
        let is_full = radicals::f_tilde(g, caps).map_err(s)? == *g;
        let m_is_phi = m_intersection(g, caps).map_err(s)? == frattini(g, caps).map_err(s)?;
        ensure(is_full == m_is_phi, || {
            format!("{}: F~=G {is_full}, M=Phi {m_is_phi}", e.name)
        })?;
        if is_full {
            full += 1;
        } else {
            not_full += 1;
        }
    }
    ensure(
        full >= MIN_DICHOTOMY_SIDE && not_full >= MIN_DICHOTOMY_SIDE,
        || format!("sides {full} and {not_full}"),
    )?;
    Ok(format!("{full} groups with F~(G) = G, {not_full} without"))
}

fn criterion_6(w: &World) -> Outcome {
    let mut checked = 0;
    for (e, g) in &w.groups {
        let mut cases = vec![
            (E::f_star(), Axiom::ALL.to_vec()),
            (E::f_tilde(), Axiom::F1_TO_F4.to_vec()),
        ];
        cases.extend(
            phi_pi_family()
                .into_iter()
                .map(|x| (x, Axiom::F1_TO_F4.to_vec())),
        );
        for (expr, axioms) in cases {
            let r = check_axioms(&w.ctx, &expr, g, &axioms).map_err(s)?;
            ensure(r.passed(), || {
                let f = r.failures().next().unwrap();
                format!("{}: {expr} fails {:?}", e.name, f.axiom)
            })?;
            checked += 1;
        }
    }
    let s3 = catalog::named("S3");
    let triv = check_axioms(&w.ctx, &E::triv(), &s3, &[Axiom::F3]).map_err(s)?;
    let r = triv.result(Axiom::F3).unwrap();
    ensure(!r.passed && r.witness.is_some(), || {
        "Triv on S3 has no F3 witness".into()
    })?;
    let s4 = catalog::named("S4");
    let id = check_axioms(&w.ctx, &E::id(), &s4, &[Axiom::F4]).map_err(s)?;
    let r = id.result(Axiom::F4).unwrap();
    ensure(!r.passed && r.witness.is_some(), || {
        "Id on S4 has no F4 witness".into()
    })?;
    Ok(format!(
        "{checked} axiom reports pass; Triv/S3/F3 and Id/S4/F4 witnessed"
    ))
}

fn criterion_7(w: &World) -> Outcome {
    let mut soluble = 0;
    for (e, g) in &w.groups {
        let caps = &w.ctx.caps;
        let f = radicals::fitting(g, caps).map_err(s)?;
        let fs = radicals::f_star(g, caps).map_err(s)?;
        let ft = radicals::f_tilde(g, caps).map_err(s)?;
        if radicals::is_soluble(g) {
            soluble += 1;
            ensure(f == fs && fs == ft, || {
                format!("{}: soluble but values differ", e.name)
            })?;
        }
        ensure(f.is_subgroup_of(&fs) && fs.is_subgroup_of(&ft), || {
            format!("{}: sandwich broken", e.name)
        })?;
        for (label, x) in [("F*", &fs), ("F~", &ft)] {
            let c = centralizer(g, x, caps.max_elements).map_err(s)?;
            ensure(c.is_subgroup_of(x), || {
                format!("{}: C_G({label}) not inside {label}", e.name)
            })?;
        }
    }
    Ok(format!(
        "{soluble} soluble groups collapse; sandwich on all {}",
        w.groups.len()
    ))
}

fn criterion_8(w: &World) -> Outcome {
    let (mut qn_pairs, mut products) = (0, 0);
    for (e, g) in &w.groups {
        for expr in height_family() {
            let v = verify_height_bounds(&w.ctx, g, &expr).map_err(s)?;
            ensure(v.passed, || format!("{}: {v:?}", e.name))?;
        }
        if !g.is_trivial() {
            let v = verify_residual_height(&w.ctx, g).map_err(s)?;
            ensure(v.residual_passed, || format!("{}: {v:?}", e.name))?;
        }
        for pair in find_mutually_permutable(&w.ctx, g).map_err(s)? {
            let v = verify_permutable_product(&w.ctx, &pair).map_err(s)?;
            if v.quasinilpotent_factors {
                qn_pairs += 1;
                ensure(v.h_g <= 2, || format!("{}: {v:?}", e.name))?;
            }
        }
        let parts = e.factor_groups().map_err(s)?;
        if parts.len() >= 2 {
            let dp = direct_product_of(&parts);
            let factors: Vec<Group> = (0..parts.len()).map(|i| dp.factor_image(i)).collect();
            let v = verify_direct_product_height(&w.ctx, g, &factors).map_err(s)?;
            ensure(v.passed, || format!("{}: {v:?}", e.name))?;
            products += 1;
        }
    }
    ensure(qn_pairs > 0, || "no quasinilpotent pair found".into())?;
    ensure(products >= MIN_PRODUCT_ENTRIES, || {
        format!("only {products} product entries")
    })?;
    Ok(format!(
        "{qn_pairs} quasinilpotent pairs within h* <= 2; {products} direct products"
    ))
}

fn criterion_9(w: &World) -> Outcome {
    for (e, g) in &w.groups {
        let v = verify_nilpotency_criteria(&w.ctx, g).map_err(s)?;
        ensure(v.agree(), || format!("{}: {:?}", e.name, v.values()))?;
        let expect = match e.name.as_str() {
            "D8" | "Q8" | "C12" => Some(true),
            "S3" | "S4" | "A4" => Some(false),
            _ => None,
        };
        if let Some(x) = expect {
            ensure(v.nilpotent == x, || format!("{}: expected {x}", e.name))?;
        }
    }
    Ok(format!("six predicates agree on {} groups", w.groups.len()))
}

fn criterion_10(w: &World) -> Outcome {
    let family = lattice_family();
    for (e, g) in &w.groups {
        let ctx = &w.ctx;
        let v = values_lattice(ctx, g, &family).map_err(s)?;
        ensure(v.distributive, || format!("{}: not distributive", e.name))?;
        let fs = evaluate(ctx, &E::f_star(), g).map_err(s)?;
        for x in &family {
            let left = evaluate(ctx, &E::circ(E::f_star(), x.clone()), g).map_err(s)?;
            let right = evaluate(ctx, &E::circ(x.clone(), E::f_star()), g).map_err(s)?;
            ensure(left == fs && right == fs, || {
                format!("{}: zero-element law with {x}", e.name)
            })?;
        }
        let ft = evaluate(ctx, &E::f_tilde(), g).map_err(s)?;
        let phi_star = evaluate(ctx, &E::star(E::phi(), E::f_tilde()), g).map_err(s)?;
        ensure(phi_star == ft, || {
            format!("{}: Phi*Ftilde differs from Ftilde", e.name)
        })?;
        for base in [E::f_tilde(), E::star(E::phi_pi([2]), E::f_star())] {
            let (value, _) = omega(ctx, &base, g).map_err(s)?;
            let again = evaluate(ctx, &base, &value).map_err(s)?;
            let twice = evaluate(ctx, &E::omega(E::omega(base.clone())), g).map_err(s)?;
            ensure(again == value && twice == value, || {
                format!("{}: {base}^inf not idempotent", e.name)
            })?;
        }
    }
    Ok(format!("{} groups", w.groups.len()))
}

fn closure_count(g: &Group) -> usize {
    let gens: Vec<Vec<u32>> = g.generators().iter().map(|p| p.images().to_vec()).collect();
    let id: Vec<u32> = (0..g.degree() as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for q in &gens {
            let y: Vec<u32> = x.iter().map(|&i| q[i as usize]).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

fn criterion_11(w: &World) -> Outcome {
    let (mut chains, mut pairs) = (0, 0);
    for (e, g) in &w.groups {
        if g.order() > CLOSURE_ORDER_LIMIT {
            continue;
        }
        let n = closure_count(g);
        ensure(n as u64 == g.order(), || {
            format!("{}: chain {} vs closure {n}", e.name, g.order())
        })?;
        chains += 1;
        if g.order() > SUBNORMAL_ORDER_LIMIT {
            continue;
        }
        let subs = all_subgroups(g, &w.ctx.caps).map_err(s)?;
        let t = subs.elements();
        let sets = subs.sets();
        let one = t.position(&g.identity()).unwrap();
        let inverses: Vec<usize> = (0..t.len())
            .map(|i| (0..t.len()).find(|&j| t.mul(i, j) == one).unwrap())
            .collect();
        let normal_in = |k: usize, l: usize| {
            sets[k].is_subset(&sets[l])
                && sets[l].ones().all(|x| {
                    sets[k]
                        .ones()
                        .all(|a| sets[k].contains(t.mul(t.mul(inverses[x], a), x)))
                })
        };
        // subnormal subgroups: close {G} downward under "is normal in"
        let whole = (0..subs.len())
            .find(|&i| sets[i].count_ones(..) == t.len())
            .unwrap();
        let mut subnormal = vec![false; subs.len()];
        subnormal[whole] = true;
        let mut stack = vec![whole];
        while let Some(l) = stack.pop() {
            let below: Vec<usize> = (0..subs.len())
                .filter(|&k| !subnormal[k] && normal_in(k, l))
                .collect();
            for k in below {
                subnormal[k] = true;
                stack.push(k);
            }
        }
        for (i, h) in subs.groups().iter().enumerate() {
            ensure(is_subnormal(h, g) == subnormal[i], || {
                format!("{}: subgroup of order {} disagrees", e.name, h.order())
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{chains} chain orders; {pairs} subgroup pairs"))
}

#[test]
fn acceptance() {
    let t1 = criterion_1();
    let world = World {
        ctx: Context::new(CAPS),
        groups: catalog::catalog()
            .into_iter()
            .map(|e| {
                let g = e.build().unwrap();
                (e, g)
            })
            .collect(),
    };
    let results: Vec<(&str, Outcome)> = vec![
        ("h*(S3) and the (C2, A3) product", t1),
        ("F* characterizations agree", criterion_2(&world)),
        ("Fitting by centralizers", criterion_3(&world)),
        ("F~ characterizations agree", criterion_4(&world)),
        ("F~(G) = G iff M(G) = Phi(G)", criterion_5(&world)),
        ("axioms and negative controls", criterion_6(&world)),
        (
            "soluble collapse, sandwich, self-centralizing",
            criterion_7(&world),
        ),
        ("height bounds, residual, products", criterion_8(&world)),
        ("nilpotency predicates", criterion_9(&world)),
        (
            "lattice of values and Omega fixpoints",
            criterion_10(&world),
        ),
        ("engine against brute force", criterion_11(&world)),
    ];
    let mut failed = 0;
    for (i, (label, r)) in results.iter().enumerate() {
        match r {
            Ok(d) => println!("PASS criterion {}: {label} ({d})", i + 1),
            Err(d) => {
                failed += 1;
                println!("FAIL criterion {}: {label} ({d})", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} criteria failed");
}
