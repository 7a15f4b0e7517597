//! Catalog-wide verification suites and the JSON report.

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::caps::Caps;
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::functorial::{
    check_axioms, evaluate, gamma_class_radical, omega, relabel_invariant, values_lattice, Axiom,
    Builtin, FunctorialExpr as E,
};
use crate::group::{centralizer, direct_product_of, join, Group, SubgroupSummary};
use crate::heights::{
    find_mutually_permutable, fitting_height, h_gamma, h_star, is_subnormal,
    verify_direct_product_height, verify_height_bounds, verify_nilpotency_criteria,
    verify_permutable_product, verify_residual_height, verify_subnormal_join_height,
};
use crate::lattice::{all_subgroups, frattini, m_intersection, ChiefPick};
use crate::radicals::{self, Context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// The independent characterizations of `F`, `F*` and `F~` agree.
    RadicalsAgreement,
    /// Axiom checks for the standard functorials and negative controls.
    Axioms,
    /// `F~(G) = G` exactly when `M(G) = Phi(G)`.
    FrattiniDichotomy,
    /// `h_~F <= h_gamma <= 2 h_~F`.
    HeightBounds,
    /// Height bounds on mutually permutable products.
    PermutableProducts,
    /// Heights of direct products and subnormal joins.
    ProductHeights,
    NilpotencyCriteria,
    LatticeDistributivity,
    /// Height drop of the quasinilpotent residual.
    ResidualHeight,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::RadicalsAgreement,
        Suite::Axioms,
        Suite::FrattiniDichotomy,
        Suite::HeightBounds,
        Suite::PermutableProducts,
        Suite::ProductHeights,
        Suite::NilpotencyCriteria,
        Suite::LatticeDistributivity,
        Suite::ResidualHeight,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RadicalsAgreement => "radicals-agreement",
            Suite::Axioms => "axioms",
            Suite::FrattiniDichotomy => "frattini-dichotomy",
            Suite::HeightBounds => "height-bounds",
            Suite::PermutableProducts => "permutable-products",
            Suite::ProductHeights => "product-heights",
            Suite::NilpotencyCriteria => "nilpotency-criteria",
            Suite::LatticeDistributivity => "lattice-distributivity",
            Suite::ResidualHeight => "residual-height",
        }
    }

    /// A suite name, or `all`.
    pub fn parse_selection(text: &str) -> Result<Vec<Suite>> {
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim) {
            if part == "all" {
                return Ok(Suite::ALL.to_vec());
            }
            match Suite::ALL.iter().find(|s| s.name() == part) {
                Some(&s) => out.push(s),
                None => {
                    let names: Vec<&str> = Suite::ALL.iter().map(|s| s.name()).collect();
                    return Err(Error::parse(
                        1,
                        1,
                        format!(
                            "unknown suite {part:?}; expected `all` or one of {}",
                            names.join(", ")
                        ),
                    ));
                }
            }
        }
        Ok(out)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub check: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupReport {
    pub index: usize,
    pub name: String,
    pub order: u64,
    pub degree: usize,
    pub radicals: BTreeMap<String, SubgroupSummary>,
    pub heights: BTreeMap<String, usize>,
    pub checks: Vec<CheckResult>,
    pub elapsed_ms: u64,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool_version: String,
    /// Seconds since the Unix epoch.
    pub generated_at: u64,
    pub caps: Caps,
    pub suites: Vec<Suite>,
    pub groups: Vec<GroupReport>,
    pub summary: Summary,
}

impl Report {
    /// Passes iff no check failed; skips do not count either way.
    pub fn passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = (&GroupReport, &CheckResult)> {
        self.groups
            .iter()
            .flat_map(|g| g.checks.iter().map(move |c| (g, c)))
            .filter(|(_, c)| c.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the timing fields removed, for comparing runs.
    pub fn canonical_json(&self) -> String {
        let mut v = serde_json::to_value(self).expect("report serializes");
        v.as_object_mut().unwrap().remove("generated_at");
        for g in v["groups"].as_array_mut().unwrap() {
            g.as_object_mut().unwrap().remove("elapsed_ms");
        }
        serde_json::to_string_pretty(&v).unwrap()
    }
}

type Checks = Vec<(String, bool, Value)>;

fn same(a: &Group, b: &Group) -> bool {
    a == b
}

fn radicals_agreement(ctx: &Context, g: &Group) -> Result<Checks> {
    let caps = &ctx.caps;
    let mut out: Checks = Vec::new();
    let f = radicals::fitting(g, caps)?;
    let fs = radicals::f_star(g, caps)?;
    let fs_oracle = radicals::f_star_oracle(g, caps)?;
    let fs_inner = radicals::f_star_by_innerisers(g, caps)?;
    out.push((
        "f-star-triple".into(),
        same(&fs, &fs_oracle) && same(&fs, &fs_inner),
        json!({"formula": fs.order(), "oracle": fs_oracle.order(), "innerisers": fs_inner.order()}),
    ));
    let f_oracle = radicals::fitting_oracle(g, caps)?;
    let f_cent = radicals::fitting_by_centralizers(g, caps)?;
    out.push((
        "fitting-agreement".into(),
        same(&f, &f_oracle) && same(&f, &f_cent),
        json!({"cores": f.order(), "oracle": f_oracle.order(), "centralizers": f_cent.order()}),
    ));
    let fs_of_fs = radicals::f_star(&fs, caps)?;
    out.push((
        "f-star-idempotent".into(),
        same(&fs_of_fs, &fs),
        Value::Null,
    ));
    let c = centralizer(g, &fs, caps.max_elements)?;
    out.push((
        "f-star-self-centralizing".into(),
        c.is_subgroup_of(&fs),
        json!({"centralizer": c.order()}),
    ));
    for h in [g, &fs] {
        let a = radicals::is_quasinilpotent_with(h, caps, ChiefPick::Smallest)?;
        let b = radicals::is_quasinilpotent_with(h, caps, ChiefPick::Largest)?;
        out.push((
            format!("quasinilpotence-series-independent-{}", h.order()),
            a == b,
            json!({"smallest": a, "largest": b}),
        ));
    }
    for b in [Builtin::F, Builtin::FStar, Builtin::Soc] {
        out.push((
            format!("relabel-{}", b.name()),
            relabel_invariant(ctx, &b.into(), g)?,
            Value::Null,
        ));
    }

    Ok(out)
}

/// The checks that need the Frattini subgroup.
fn tilde_agreement(ctx: &Context, g: &Group) -> Result<Checks> {
    let caps = &ctx.caps;
    let mut out: Checks = Vec::new();
    let f = radicals::fitting(g, caps)?;
    let fs = radicals::f_star(g, caps)?;
    let ft = radicals::f_tilde(g, caps)?;
    let ft_forster = radicals::f_tilde_forster(g, caps)?;
    let ft_inner = radicals::f_tilde_by_innerisers(g, caps)?;
    out.push((
        "f-tilde-triple".into(),
        same(&ft, &ft_forster) && same(&ft, &ft_inner),
        json!({"socle": ft.order(), "forster": ft_forster.order(), "innerisers": ft_inner.order()}),
    ));
    out.push((
        "sandwich".into(),
        f.is_subgroup_of(&fs) && fs.is_subgroup_of(&ft),
        json!({"F": f.order(), "Fstar": fs.order(), "Ftilde": ft.order()}),
    ));
    let c = centralizer(g, &ft, caps.max_elements)?;
    out.push((
        "f-tilde-self-centralizing".into(),
        c.is_subgroup_of(&ft),
        json!({"centralizer": c.order()}),
    ));
    if radicals::is_soluble(g) {
        out.push((
            "soluble-collapse".into(),
            same(&f, &fs) && same(&fs, &ft),
            json!({"F": f.order(), "Fstar": fs.order(), "Ftilde": ft.order()}),
        ));
    }
    for b in [Builtin::FTilde, Builtin::Phi] {
        out.push((
            format!("relabel-{}", b.name()),
            relabel_invariant(ctx, &b.into(), g)?,
            Value::Null,
        ));
    }
    Ok(out)
}

/// `Phi_pi * Fstar` for the four prime sets used throughout.
pub fn phi_pi_family() -> Vec<E> {
    let sets: [&[u64]; 4] = [&[], &[2], &[3], &[2, 3]];
    sets.iter()
        .map(|pi| E::star(E::phi_pi(pi.iter().copied()), E::f_star()))
        .collect()
}

fn report_check(name: String, report: crate::functorial::AxiomReport) -> (String, bool, Value) {
    let passed = report.passed();
    (
        name,
        passed,
        if passed {
            Value::Null
        } else {
            serde_json::to_value(&report).unwrap()
        },
    )
}

fn axioms(ctx: &Context, g: &Group) -> Result<Checks> {
    let mut out = Vec::new();
    out.push(report_check(
        "Fstar".into(),
        check_axioms(ctx, &E::f_star(), g, &Axiom::ALL)?,
    ));
    out.push(report_check(
        "Ftilde".into(),
        check_axioms(ctx, &E::f_tilde(), g, &Axiom::F1_TO_F4)?,
    ));
    for e in phi_pi_family() {
        out.push(report_check(
            e.to_string(),
            check_axioms(ctx, &e, g, &Axiom::F1_TO_F4)?,
        ));
    }
    // negative controls: Triv breaks F3 on every nontrivial group, and Id
    // satisfies F4 only when F~(G) = G
    let triv = check_axioms(ctx, &E::triv(), g, &[Axiom::F3])?;
    let triv_ok = triv.passed() == g.is_trivial()
        && triv.results.iter().all(|r| r.passed || r.witness.is_some());
    out.push((
        "Triv-control".into(),
        triv_ok,
        serde_json::to_value(&triv).unwrap(),
    ));
    let id = check_axioms(ctx, &E::id(), g, &[Axiom::F4])?;
    let full = radicals::f_tilde(g, &ctx.caps)? == *g;
    let id_ok = id.passed() == full && id.results.iter().all(|r| r.passed || r.witness.is_some());
    out.push((
        "Id-control".into(),
        id_ok,
        serde_json::to_value(&id).unwrap(),
    ));
    Ok(out)
}

fn frattini_dichotomy(ctx: &Context, g: &Group) -> Result<Checks> {
    let full = radicals::f_tilde(g, &ctx.caps)? == *g;
    let m = m_intersection(g, &ctx.caps)?;
    let phi = frattini(g, &ctx.caps)?;
    Ok(vec![(
        "equivalence".into(),
        full == (m == phi),
        json!({"ftilde_is_whole": full, "M": m.order(), "Phi": phi.order()}),
    )])
}

/// The functorials whose heights are compared against `h_~F`.
pub fn height_family() -> Vec<E> {
    vec![
        E::f_tilde(),
        E::star(E::phi_pi([2]), E::f_star()),
        E::star(E::phi_pi([3]), E::f_star()),
    ]
}

fn height_bounds(ctx: &Context, g: &Group) -> Result<Checks> {
    let mut out = Vec::new();
    for e in height_family().iter().chain([E::f_star()].iter()) {
        let v = verify_height_bounds(ctx, g, e)?;
        out.push((e.to_string(), v.passed, serde_json::to_value(&v).unwrap()));
    }
    Ok(out)
}

fn permutable_products(ctx: &Context, g: &Group) -> Result<Checks> {
    let pairs = find_mutually_permutable(ctx, g)?;
    let mut failures = Vec::new();
    let mut quasinilpotent = 0;
    for pair in &pairs {
        let v = verify_permutable_product(ctx, pair)?;
        quasinilpotent += v.quasinilpotent_factors as usize;
        if !v.all_passed() {
            failures.push(serde_json::to_value(&v).unwrap());
        }
    }
    Ok(vec![(
        "pairs".into(),
        failures.is_empty(),
        json!({"pairs": pairs.len(), "quasinilpotent_pairs": quasinilpotent, "failures": failures}),
    )])
}

fn product_heights(ctx: &Context, entry: &CatalogEntry, g: &Group) -> Result<Checks> {
    let mut out = Vec::new();
    let parts = entry.factor_groups()?;
    if !parts.is_empty() {
        let dp = direct_product_of(&parts);
        let factors: Vec<Group> = (0..parts.len()).map(|i| dp.factor_image(i)).collect();
        let v = verify_direct_product_height(ctx, g, &factors)?;
        out.push(("direct".into(), v.passed, serde_json::to_value(&v).unwrap()));
    }
    // a few generating pairs of proper subnormal subgroups
    let subs = all_subgroups(g, &ctx.caps)?;
    let proper = subs
        .groups()
        .get(1..subs.len().saturating_sub(1))
        .unwrap_or(&[]);
    let subnormal: Vec<&Group> = proper.iter().filter(|h| is_subnormal(h, g)).collect();
    let mut tried = 0;
    'pairs: for (i, a) in subnormal.iter().enumerate() {
        for b in &subnormal[i + 1..] {
            if join(a, b)? == *g {
                let v = verify_subnormal_join_height(ctx, g, &[(*a).clone(), (*b).clone()])?;
                out.push((
                    format!("subnormal-join-{tried}"),
                    v.passed,
                    serde_json::to_value(&v).unwrap(),
                ));
                tried += 1;
                if tried == 3 {
                    break 'pairs;
                }
            }
        }
    }
    Ok(out)
}

fn nilpotency(ctx: &Context, g: &Group) -> Result<Checks> {
    let v = verify_nilpotency_criteria(ctx, g)?;
    Ok(vec![(
        "agree".into(),
        v.agree(),
        serde_json::to_value(&v).unwrap(),
    )])
}

/// The four functorials whose values form a distributive lattice.
pub fn lattice_family() -> Vec<E> {
    vec![
        E::f_star(),
        E::f_tilde(),
        E::star(E::phi_pi([2]), E::f_star()),
        E::star(E::phi_pi([3]), E::f_star()),
    ]
}

fn lattice_distributivity(ctx: &Context, entry: &CatalogEntry, g: &Group) -> Result<Checks> {
    let mut out = Vec::new();
    let family = lattice_family();
    let v = values_lattice(ctx, g, &family)?;
    out.push((
        "distributive".into(),
        v.distributive,
        serde_json::to_value(&v).unwrap(),
    ));

    let fs = evaluate(ctx, &E::f_star(), g)?;
    let mut zero = true;
    for e in &family {
        zero &= evaluate(ctx, &E::circ(E::f_star(), e.clone()), g)? == fs;
        zero &= evaluate(ctx, &E::circ(e.clone(), E::f_star()), g)? == fs;
    }
    out.push(("f-star-zero-element".into(), zero, Value::Null));

    let ft = evaluate(ctx, &E::f_tilde(), g)?;
    let phi_star = evaluate(ctx, &E::star(E::phi(), E::f_tilde()), g)?;
    out.push(("phi-star-ftilde".into(), phi_star == ft, Value::Null));

    for base in [
        E::f_tilde(),
        E::star(E::phi_pi([2]), E::f_star()),
        E::f_star(),
    ] {
        let (value, steps) = omega(ctx, &base, g)?;
        let again = evaluate(ctx, &base, &value)?;
        out.push((
            format!("omega-fixpoint {base}"),
            again == value,
            json!({"order": value.order(), "iterations": steps}),
        ));
    }
    for base in [E::f_star(), E::f_tilde()] {
        let radical = gamma_class_radical(ctx, &base, g)?;
        let stable = evaluate(ctx, &E::omega(base.clone()), g)?;
        out.push((
            format!("class-radical {base}"),
            radical == stable,
            Value::Null,
        ));
    }

    let parts = entry.factor_groups()?;
    if parts.len() >= 2 {
        let dp = direct_product_of(&parts);
        for e in [E::f_star(), E::f_tilde()] {
            let whole = evaluate(ctx, &e, g)?;
            let mut pieces = Vec::new();
            for (i, p) in parts.iter().enumerate() {
                pieces.push(dp.embed(i, &evaluate(ctx, &e, p)?));
            }
            let product = crate::group::join_all(g.degree(), &pieces);
            out.push((
                format!("direct-product-law {e}"),
                whole == product,
                Value::Null,
            ));
        }
    }
    Ok(out)
}

fn residual_height(ctx: &Context, g: &Group) -> Result<Checks> {
    let v = verify_residual_height(ctx, g)?;
    Ok(vec![
        (
            "residual".into(),
            v.residual_passed,
            serde_json::to_value(&v).unwrap(),
        ),
        ("upper-powers".into(), v.powers_passed, Value::Null),
    ])
}

fn run_one(ctx: &Context, entry: &CatalogEntry, g: &Group, suite: Suite) -> Result<Checks> {
    match suite {
        Suite::RadicalsAgreement => radicals_agreement(ctx, g),
        Suite::Axioms => axioms(ctx, g),
        Suite::FrattiniDichotomy => frattini_dichotomy(ctx, g),
        Suite::HeightBounds => height_bounds(ctx, g),
        Suite::PermutableProducts => permutable_products(ctx, g),
        Suite::ProductHeights => product_heights(ctx, entry, g),
        Suite::NilpotencyCriteria => nilpotency(ctx, g),
        Suite::LatticeDistributivity => lattice_distributivity(ctx, entry, g),
        Suite::ResidualHeight => residual_height(ctx, g),
    }
}

fn record(out: &mut Vec<CheckResult>, suite: Suite, result: Result<Checks>) {
    match result {
        Ok(checks) => out.extend(checks.into_iter().map(|(check, ok, detail)| CheckResult {
            suite,
            check,
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        })),
        Err(e) => out.push(CheckResult {
            suite,
            check: "run".into(),
            status: if e.is_cap() {
                Status::Skipped
            } else {
                Status::Fail
            },
            detail: json!({"reason": e.to_string()}),
        }),
    }
}

fn group_report(
    ctx: &Context,
    index: usize,
    entry: &CatalogEntry,
    suites: &[Suite],
) -> GroupReport {
    let start = Instant::now();
    let mut report = GroupReport {
        index,
        name: entry.name.clone(),
        order: entry.order,
        degree: 0,
        radicals: BTreeMap::new(),
        heights: BTreeMap::new(),
        checks: Vec::new(),
        elapsed_ms: 0,
    };
    let g = match entry.build() {
        Ok(g) => g,
        Err(e) => {
            report.checks.push(CheckResult {
                suite: suites.first().copied().unwrap_or(Suite::RadicalsAgreement),
                check: "load".into(),
                status: Status::Fail,
                detail: json!({"reason": e.to_string()}),
            });
            return report;
        }
    };
    report.degree = g.degree();
    for b in [
        Builtin::F,
        Builtin::FStar,
        Builtin::FTilde,
        Builtin::Phi,
        Builtin::Soc,
    ] {
        if let Ok(v) = evaluate(ctx, &b.clone().into(), &g) {
            report.radicals.insert(b.name(), v.summary());
        }
    }
    if let Ok(h) = h_star(ctx, &g) {
        report.heights.insert("h_star".into(), h);
    }
    if let Ok(h) = h_gamma(ctx, &g, &E::f_tilde()) {
        report.heights.insert("h_tilde".into(), h);
    }
    if let Ok(h) = fitting_height(ctx, &g) {
        report.heights.insert("fitting".into(), h);
    }
    for &suite in suites {
        let result = run_one(ctx, entry, &g, suite);
        record(&mut report.checks, suite, result);
        if suite == Suite::RadicalsAgreement {
            record(&mut report.checks, suite, tilde_agreement(ctx, &g));
        }
    }
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Runs `suites` over `entries` in parallel; the report keeps catalog order.
pub fn run_suite(entries: &[CatalogEntry], caps: Caps, suites: &[Suite]) -> Report {
    let ctx = Context::new(caps);
    let groups: Vec<GroupReport> = entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| group_report(&ctx, i, e, suites))
        .collect();
    let mut summary = Summary::default();
    for c in groups.iter().flat_map(|g| &g.checks) {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Skipped => summary.skipped += 1,
        }
    }
    Report {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        generated_at: std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map_or(0, |d| d.as_secs()),
        caps,
        suites: suites.to_vec(),
        groups,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find;

    #[test]
    fn selection() {
        assert_eq!(Suite::parse_selection("all").unwrap().len(), 9);
        assert_eq!(
            Suite::parse_selection("axioms,height-bounds").unwrap(),
            vec![Suite::Axioms, Suite::HeightBounds]
        );
        assert!(Suite::parse_selection("bogus").is_err());
    }

    #[test]
    fn small_run_passes() {
        let entries: Vec<CatalogEntry> = ["S3", "Q8", "A4"]
            .iter()
            .map(|n| find(n).unwrap())
            .collect();
        let report = run_suite(&entries, Caps::default(), &Suite::ALL);
        let fails: Vec<_> = report
            .failures()
            .map(|(g, c)| (g.name.clone(), c.check.clone()))
            .collect();
        assert!(report.passed(), "{fails:?}");
        assert_eq!(report.groups[0].heights["h_star"], 2);
        assert_eq!(
            report
                .groups
                .iter()
                .map(|g| g.name.as_str())
                .collect::<Vec<_>>(),
            ["S3", "Q8", "A4"]
        );
    }

    #[test]
    fn caps_are_skips() {
        let entries = vec![find("A6").unwrap()];
        let report = run_suite(&entries, Caps::default(), &[Suite::FrattiniDichotomy]);
        assert_eq!(
            report.summary,
            Summary {
                pass: 0,
                fail: 0,
                skipped: 1
            }
        );
        assert!(report.passed());
    }

    #[test]
    fn deterministic_modulo_timing() {
        let entries: Vec<CatalogEntry> = ["S4", "D8"].iter().map(|n| find(n).unwrap()).collect();
        let a = run_suite(
            &entries,
            Caps::default(),
            &[Suite::Axioms, Suite::RadicalsAgreement],
        );
        let b = run_suite(
            &entries,
            Caps::default(),
            &[Suite::Axioms, Suite::RadicalsAgreement],
        );
        assert_eq!(a.canonical_json(), b.canonical_json());
    }
}
