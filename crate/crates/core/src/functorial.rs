//! Functorial expressions: builtins, upper and lower products, meets,
//! joins, powers and the stable power, plus the axiom checker.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{centralizer, intersect, join, join_all, quotient, Group, SubgroupSummary};
use crate::lattice::{frattini, normal_lattice, socle};
use crate::perm::Permutation;
use crate::radicals::{self, Context};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Fitting subgroup.
    F,
    FStar,
    FTilde,
    Phi,
    PhiPi(BTreeSet<u64>),
    Soc,
    /// Constant trivial subgroup.
    Triv,
    /// The whole group.
    Id,
}

impl Builtin {
    pub fn name(&self) -> String {
        match self {
            Builtin::F => "F".into(),
            Builtin::FStar => "Fstar".into(),
            Builtin::FTilde => "Ftilde".into(),
            Builtin::Phi => "Phi".into(),
            Builtin::PhiPi(pi) => {
                let primes: Vec<String> = pi.iter().map(u64::to_string).collect();
                format!("Phi_pi{{{}}}", primes.join(","))
            }
            Builtin::Soc => "Soc".into(),
            Builtin::Triv => "Triv".into(),
            Builtin::Id => "Id".into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FunctorialExpr {
    Builtin(Builtin),
    /// Upper product: preimage of `right(G / left(G))`.
    Star(Box<FunctorialExpr>, Box<FunctorialExpr>),
    /// Lower product: `right(left(G))`.
    Circ(Box<FunctorialExpr>, Box<FunctorialExpr>),
    Meet(Vec<FunctorialExpr>),
    Join(Vec<FunctorialExpr>),
    /// `k`-fold lower product of the base with itself, `k >= 1`.
    Power(Box<FunctorialExpr>, u32),
    /// Stable power: iterate the base until the value stops changing.
    Omega(Box<FunctorialExpr>),
}

impl From<Builtin> for FunctorialExpr {
    fn from(b: Builtin) -> Self {
        FunctorialExpr::Builtin(b)
    }
}

impl FunctorialExpr {
    pub fn fitting() -> Self {
        Builtin::F.into()
    }

    pub fn f_star() -> Self {
        Builtin::FStar.into()
    }

    pub fn f_tilde() -> Self {
        Builtin::FTilde.into()
    }

    pub fn phi() -> Self {
        Builtin::Phi.into()
    }

    pub fn phi_pi(primes: impl IntoIterator<Item = u64>) -> Self {
        Builtin::PhiPi(primes.into_iter().collect()).into()
    }

    pub fn triv() -> Self {
        Builtin::Triv.into()
    }

    pub fn id() -> Self {
        Builtin::Id.into()
    }

    pub fn star(left: FunctorialExpr, right: FunctorialExpr) -> Self {
        FunctorialExpr::Star(Box::new(left), Box::new(right))
    }

    pub fn circ(left: FunctorialExpr, right: FunctorialExpr) -> Self {
        FunctorialExpr::Circ(Box::new(left), Box::new(right))
    }

    pub fn power(base: FunctorialExpr, k: u32) -> Self {
        assert!(k >= 1, "power exponent must be at least 1");
        FunctorialExpr::Power(Box::new(base), k)
    }

    pub fn omega(base: FunctorialExpr) -> Self {
        FunctorialExpr::Omega(Box::new(base))
    }

    /// Binding strength used by the printer; larger binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            FunctorialExpr::Join(_) => 1,
            FunctorialExpr::Meet(_) => 2,
            FunctorialExpr::Star(..) | FunctorialExpr::Circ(..) => 3,
            FunctorialExpr::Power(..) | FunctorialExpr::Omega(_) => 4,
            FunctorialExpr::Builtin(_) => 5,
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            FunctorialExpr::Builtin(_) => 1,
            FunctorialExpr::Star(a, b) | FunctorialExpr::Circ(a, b) => 1 + a.depth().max(b.depth()),
            FunctorialExpr::Meet(xs) | FunctorialExpr::Join(xs) => {
                1 + xs.iter().map(Self::depth).max().unwrap_or(0)
            }
            FunctorialExpr::Power(a, _) | FunctorialExpr::Omega(a) => 1 + a.depth(),
        }
    }
}

fn write_child(f: &mut fmt::Formatter<'_>, e: &FunctorialExpr, parens: bool) -> fmt::Result {
    if parens {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

/// Canonical form: parses back to the same tree.
impl fmt::Display for FunctorialExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.precedence();
        match self {
            FunctorialExpr::Builtin(b) => f.write_str(&b.name()),
            FunctorialExpr::Star(a, b) | FunctorialExpr::Circ(a, b) => {
                let op = if matches!(self, FunctorialExpr::Star(..)) {
                    " * "
                } else {
                    " o "
                };
                write_child(f, a, a.precedence() < p)?;
                f.write_str(op)?;
                write_child(f, b, b.precedence() <= p)
            }
            FunctorialExpr::Meet(xs) | FunctorialExpr::Join(xs) => {
                let op = if matches!(self, FunctorialExpr::Meet(_)) {
                    " & "
                } else {
                    " | "
                };
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(op)?;
                    }
                    write_child(f, x, x.precedence() <= p)?;
                }
                Ok(())
            }
            FunctorialExpr::Power(a, k) => {
                write_child(f, a, a.precedence() < 5)?;
                write!(f, "^{k}")
            }
            FunctorialExpr::Omega(a) => {
                write_child(f, a, a.precedence() < 5)?;
                f.write_str("^inf")
            }
        }
    }
}

impl std::str::FromStr for FunctorialExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_functorial(s)
    }
}

fn builtin_value(ctx: &Context, b: &Builtin, g: &Group) -> Result<Group> {
    let caps = &ctx.caps;
    match b {
        Builtin::Triv => Ok(Group::trivial(g.degree())),
        Builtin::Id => Ok(g.clone()),
        Builtin::F => ctx.memo("F", g, || radicals::fitting(g, caps)),
        Builtin::FStar => ctx.memo("Fstar", g, || radicals::f_star(g, caps)),
        Builtin::FTilde => ctx.memo("Ftilde", g, || radicals::f_tilde(g, caps)),
        Builtin::Phi => ctx.memo("Phi", g, || frattini(g, caps)),
        Builtin::Soc => ctx.memo("Soc", g, || socle(g, caps)),
        Builtin::PhiPi(pi) => ctx.memo(&b.name(), g, || radicals::phi_pi(g, pi, caps)),
    }
}

/// Value of `expr` on `g`, a normal subgroup of `g`.
pub fn evaluate(ctx: &Context, expr: &FunctorialExpr, g: &Group) -> Result<Group> {
    match expr {
        FunctorialExpr::Builtin(b) => builtin_value(ctx, b, g),
        FunctorialExpr::Star(a, b) => {
            let inner = evaluate(ctx, a, g)?;
            let q = quotient(g, &inner, &ctx.caps)?;
            let upper = evaluate(ctx, b, q.target())?;
            Ok(q.preimage(&upper))
        }
        FunctorialExpr::Circ(a, b) => {
            // the inner value is already a standalone group on the same points
            let inner = evaluate(ctx, a, g)?;
            evaluate(ctx, b, &inner)
        }
        FunctorialExpr::Meet(xs) => {
            let mut acc = g.clone();
            for x in xs {
                acc = intersect(&acc, &evaluate(ctx, x, g)?, ctx.caps.max_elements)?;
            }
            Ok(acc)
        }
        FunctorialExpr::Join(xs) => {
            let values = xs
                .iter()
                .map(|x| evaluate(ctx, x, g))
                .collect::<Result<Vec<_>>>()?;
            Ok(join_all(g.degree(), &values))
        }
        FunctorialExpr::Power(a, k) => {
            let mut value = g.clone();
            for _ in 0..*k {
                value = evaluate(ctx, a, &value)?;
            }
            Ok(value)
        }
        FunctorialExpr::Omega(a) => Ok(omega(ctx, a, g)?.0),
    }
}

/// Stable power of `base` on `g` with the number of evaluations it took,
/// counting the final one that confirmed the fixpoint.
pub fn omega(ctx: &Context, base: &FunctorialExpr, g: &Group) -> Result<(Group, usize)> {
    let bound = g.order();
    let mut value = g.clone();
    for step in 1..=bound + 1 {
        let next = evaluate(ctx, base, &value)?;
        if next == value {
            return Ok((value, step as usize));
        }
        value = next;
    }
    Err(Error::IterationBound(bound))
}

/// `evaluate(expr, g) == g`.
pub fn radical_class_membership(ctx: &Context, expr: &FunctorialExpr, g: &Group) -> Result<bool> {
    Ok(evaluate(ctx, expr, g)? == *g)
}

/// Join of the normal subgroups `N` with `expr(N) = N`.
pub fn gamma_class_radical(ctx: &Context, expr: &FunctorialExpr, g: &Group) -> Result<Group> {
    let l = normal_lattice(g, &ctx.caps)?;
    let mut idx = Vec::new();
    for (i, n) in l.members().iter().enumerate() {
        if radical_class_membership(ctx, expr, n)? {
            idx.push(i);
        }
    }
    Ok(l.members()[l.join_of(idx)].clone())
}

/// Compares `expr` on `g` and on a relabeled copy of `g` (points reversed).
pub fn relabel_invariant(ctx: &Context, expr: &FunctorialExpr, g: &Group) -> Result<bool> {
    let n = g.degree();
    let images: Vec<u32> = (0..n as u32).rev().collect();
    let x = Permutation::from_images(images)?;
    let copy = Group::new(n, g.generators().iter().map(|p| p.conjugate(&x)).collect())?;
    let lhs = evaluate(ctx, expr, &copy)?;
    let rhs = evaluate(ctx, expr, g)?.conjugate(&x);
    Ok(lhs == rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Axiom {
    /// Compatible with epimorphisms: `f(gamma(G)) <= gamma(f(G))`.
    F1,
    /// Monotone on normal subgroups: `gamma(N) <= gamma(G)`.
    F2,
    /// Self-centralizing: `C_G(gamma(G)) <= gamma(G)`.
    F3,
    /// `gamma(G)/Phi(G) <= Soc(G/Phi(G))`.
    F4,
    /// Hereditary on normal subgroups: `gamma(G) & N <= gamma(N)`.
    F5,
}

impl Axiom {
    pub const ALL: [Axiom; 5] = [Axiom::F1, Axiom::F2, Axiom::F3, Axiom::F4, Axiom::F5];
    pub const F1_TO_F4: [Axiom; 4] = [Axiom::F1, Axiom::F2, Axiom::F3, Axiom::F4];
}

/// Subgroups reproducing an axiom violation.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub description: String,
    pub subgroups: Vec<(String, SubgroupSummary)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomReport {
    pub expr: String,
    pub group: SubgroupSummary,
    /// How the epimorphism quantifier of F1 was discharged.
    pub preamble: &'static str,
    pub results: Vec<AxiomResult>,
}

const F1_PREAMBLE: &str = "F1 is checked on the quotient map G -> G/N for every normal N; \
     any epimorphism is such a map followed by an isomorphism, and relabeled copies are \
     compared separately";

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn result(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.axiom == axiom)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }
}

fn witness(description: String, subgroups: &[(&str, &Group)]) -> Option<Witness> {
    Some(Witness {
        description,
        subgroups: subgroups
            .iter()
            .map(|(label, h)| (label.to_string(), h.summary()))
            .collect(),
    })
}

fn check_one(
    ctx: &Context,
    expr: &FunctorialExpr,
    g: &Group,
    value: &Group,
    axiom: Axiom,
) -> Result<Option<Witness>> {
    let caps = &ctx.caps;
    match axiom {
        Axiom::F1 => {
            let l = normal_lattice(g, caps)?;
            for n in l.members() {
                let f = quotient(g, n, caps)?;
                let lhs = f.image_group(value);
                let rhs = evaluate(ctx, expr, f.target())?;
                if !lhs.is_subgroup_of(&rhs) {
                    return Ok(witness(
                        format!(
                            "image of gamma(G) in G/N has order {}, not inside gamma(G/N) of order {}",
                            lhs.order(),
                            rhs.order()
                        ),
                        &[("N", n), ("image", &lhs), ("gamma(G/N)", &rhs)],
                    ));
                }
            }
            Ok(None)
        }
        Axiom::F2 => {
            let l = normal_lattice(g, caps)?;
            for n in l.members() {
                let v = evaluate(ctx, expr, n)?;
                if !v.is_subgroup_of(value) {
                    return Ok(witness(
                        "gamma(N) is not contained in gamma(G)".into(),
                        &[("N", n), ("gamma(N)", &v), ("gamma(G)", value)],
                    ));
                }
            }
            Ok(None)
        }
        Axiom::F3 => {
            let c = centralizer(g, value, caps.max_elements)?;
            if c.is_subgroup_of(value) {
                Ok(None)
            } else {
                Ok(witness(
                    "C_G(gamma(G)) is not contained in gamma(G)".into(),
                    &[("C_G(gamma(G))", &c), ("gamma(G)", value)],
                ))
            }
        }
        Axiom::F4 => {
            let phi = frattini(g, caps)?;
            let q = quotient(g, &phi, caps)?;
            let bound = q.preimage(&socle(q.target(), caps)?);
            if value.is_subgroup_of(&bound) {
                Ok(None)
            } else {
                Ok(witness(
                    "gamma(G) is not inside the preimage of Soc(G/Phi(G))".into(),
                    &[
                        ("gamma(G)", value),
                        ("Phi(G)", &phi),
                        ("preimage of Soc(G/Phi(G))", &bound),
                    ],
                ))
            }
        }
        Axiom::F5 => {
            let l = normal_lattice(g, caps)?;
            for n in l.members() {
                let v = evaluate(ctx, expr, n)?;
                let meet = intersect(value, n, caps.max_elements)?;
                if !meet.is_subgroup_of(&v) {
                    return Ok(witness(
                        "gamma(G) & N is not contained in gamma(N)".into(),
                        &[("N", n), ("gamma(G) & N", &meet), ("gamma(N)", &v)],
                    ));
                }
            }
            Ok(None)
        }
    }
}

pub fn check_axioms(
    ctx: &Context,
    expr: &FunctorialExpr,
    g: &Group,
    which: &[Axiom],
) -> Result<AxiomReport> {
    let value = evaluate(ctx, expr, g)?;
    let mut results = Vec::new();
    for &axiom in which {
        let w = check_one(ctx, expr, g, &value, axiom)?;
        results.push(AxiomResult {
            axiom,
            passed: w.is_none(),
            witness: w,
        });
    }
    Ok(AxiomReport {
        expr: expr.to_string(),
        group: g.summary(),
        preamble: F1_PREAMBLE,
        results,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LatticeVerdict {
    /// Distinct values of the family.
    pub values: Vec<SubgroupSummary>,
    /// Size of the closure under meet and join.
    pub closure_size: usize,
    pub distributive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<[SubgroupSummary; 3]>,
}

/// Closes the values of `family` on `g` under meet and join and tests both
/// distributive laws over all triples.
pub fn values_lattice(
    ctx: &Context,
    g: &Group,
    family: &[FunctorialExpr],
) -> Result<LatticeVerdict> {
    let table = g.elements(ctx.caps.max_elements)?;
    let mut groups: Vec<Group> = Vec::new();
    let mut sets: Vec<FixedBitSet> = Vec::new();
    let add = |h: Group, groups: &mut Vec<Group>, sets: &mut Vec<FixedBitSet>| -> Result<usize> {
        let set = table.subset_of(&h, ctx.caps.max_elements)?;
        if let Some(i) = sets.iter().position(|s| *s == set) {
            return Ok(i);
        }
        groups.push(h);
        sets.push(set);
        Ok(sets.len() - 1)
    };
    for e in family {
        add(evaluate(ctx, e, g)?, &mut groups, &mut sets)?;
    }
    let values: Vec<SubgroupSummary> = groups.iter().map(Group::summary).collect();

    let mut meet_t: Vec<Vec<usize>> = Vec::new();
    let mut join_t: Vec<Vec<usize>> = Vec::new();
    let mut done = 0;
    // grow until every pair has its meet and join recorded
    while done < sets.len() {
        let n = sets.len();
        for i in 0..n {
            for j in 0..n {
                if i < done && j < done {
                    continue;
                }
                let mut m = sets[i].clone();
                m.intersect_with(&sets[j]);
                add(table.group_of(g.degree(), &m), &mut groups, &mut sets)?;
                add(join(&groups[i], &groups[j])?, &mut groups, &mut sets)?;
            }
        }
        done = n;
    }
    let n = sets.len();
    for i in 0..n {
        let mut mrow = Vec::with_capacity(n);
        let mut jrow = Vec::with_capacity(n);
        for j in 0..n {
            let mut m = sets[i].clone();
            m.intersect_with(&sets[j]);
            mrow.push(
                sets.iter()
                    .position(|s| *s == m)
                    .expect("closed under meet"),
            );
            let js = table.subset_of(&join(&groups[i], &groups[j])?, ctx.caps.max_elements)?;
            jrow.push(
                sets.iter()
                    .position(|s| *s == js)
                    .expect("closed under join"),
            );
        }
        meet_t.push(mrow);
        join_t.push(jrow);
    }

    let mut counterexample = None;
    'outer: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let meet_law = meet_t[x][join_t[y][z]] == join_t[meet_t[x][y]][meet_t[x][z]];
                let join_law = join_t[x][meet_t[y][z]] == meet_t[join_t[x][y]][join_t[x][z]];
                if !(meet_law && join_law) {
                    counterexample = Some([
                        groups[x].summary(),
                        groups[y].summary(),
                        groups[z].summary(),
                    ]);
                    break 'outer;
                }
            }
        }
    }
    Ok(LatticeVerdict {
        values,
        closure_size: n,
        distributive: counterexample.is_none(),
        counterexample,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::named;
    use crate::group::direct_product;
    use FunctorialExpr as E;

    fn eval(e: &E, name: &str) -> Group {
        evaluate(&Context::default(), e, &named(name)).unwrap()
    }

    #[test]
    fn printer() {
        let e = E::star(E::phi_pi([2, 3]), E::f_star());
        assert_eq!(e.to_string(), "Phi_pi{2,3} * Fstar");
        let j = E::Join(vec![E::Meet(vec![E::f_star(), E::f_tilde()]), E::triv()]);
        assert_eq!(j.to_string(), "Fstar & Ftilde | Triv");
        let m = E::Meet(vec![E::Join(vec![E::f_star(), E::f_tilde()]), E::triv()]);
        assert_eq!(m.to_string(), "(Fstar | Ftilde) & Triv");
        let s = E::star(E::f_star(), E::circ(E::fitting(), E::phi()));
        assert_eq!(s.to_string(), "Fstar * (F o Phi)");
        assert_eq!(
            E::omega(E::star(E::phi(), E::f_tilde())).to_string(),
            "(Phi * Ftilde)^inf"
        );
        assert_eq!(
            E::power(E::power(E::fitting(), 2), 3).to_string(),
            "(F^2)^3"
        );
    }

    #[test]
    fn builtin_values() {
        assert_eq!(eval(&E::star(E::phi(), E::f_star()), "S4").order(), 4);
        assert_eq!(eval(&E::triv(), "S4").order(), 1);
        assert_eq!(eval(&E::id(), "S4").order(), 24);
        assert_eq!(eval(&E::phi_pi([2]), "Q8").order(), 2);
    }

    #[test]
    fn products() {
        // F*(S4) = V4 and F*(S4/V4) = A3, so the upper product is A4
        assert_eq!(eval(&E::star(E::f_star(), E::f_star()), "S4").order(), 12);
        // F(F*(S4)) = V4
        assert_eq!(eval(&E::circ(E::f_star(), E::fitting()), "S4").order(), 4);
        assert_eq!(eval(&E::power(E::f_star(), 3), "S4").order(), 4);
        assert_eq!(eval(&E::Meet(vec![E::id(), E::f_star()]), "S3").order(), 3);
        assert_eq!(
            eval(&E::Join(vec![E::triv(), E::f_star()]), "S5").order(),
            60
        );
    }

    #[test]
    fn omega_on_sl23() {
        let ctx = Context::default();
        let g = named("SL(2,3)");
        let (v, steps) = omega(&ctx, &E::f_tilde(), &g).unwrap();
        assert_eq!(v.order(), 8);
        assert!(steps <= 2);
        assert!(radical_class_membership(&ctx, &E::f_star(), &v).unwrap());
    }

    #[test]
    fn class_radicals() {
        let ctx = Context::default();
        assert!(radical_class_membership(&ctx, &E::f_star(), &named("A5")).unwrap());
        assert!(radical_class_membership(&ctx, &E::triv(), &named("C1")).unwrap());
        assert_eq!(
            gamma_class_radical(&ctx, &E::f_star(), &named("S5"))
                .unwrap()
                .order(),
            60
        );
    }

    #[test]
    fn negative_controls() {
        let ctx = Context::default();
        let r = check_axioms(&ctx, &E::triv(), &named("S3"), &[Axiom::F3]).unwrap();
        let w = r.result(Axiom::F3).unwrap().witness.as_ref().unwrap();
        assert_eq!(w.subgroups[0].1.order, 6);
        let r = check_axioms(&ctx, &E::id(), &named("S4"), &[Axiom::F4]).unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn axioms_small() {
        let ctx = Context::default();
        for name in ["S3", "S4", "Q8", "A5", "SL(2,3)", "D8xS3"] {
            let g = named(name);
            assert!(
                check_axioms(&ctx, &E::f_star(), &g, &Axiom::ALL)
                    .unwrap()
                    .passed(),
                "{name}"
            );
            assert!(
                check_axioms(&ctx, &E::f_tilde(), &g, &Axiom::F1_TO_F4)
                    .unwrap()
                    .passed(),
                "{name}"
            );
        }
    }

    #[test]
    fn lattice_of_values() {
        let ctx = Context::default();
        let family = [
            E::f_star(),
            E::f_tilde(),
            E::star(E::phi_pi([2]), E::f_star()),
            E::star(E::phi_pi([3]), E::f_star()),
        ];
        let s4 = values_lattice(&ctx, &named("S4"), &family).unwrap();
        assert_eq!(s4.values.len(), 1);
        assert!(s4.distributive);
        let single = values_lattice(&ctx, &named("Q8"), &family[..1]).unwrap();
        assert_eq!(single.closure_size, 1);
        let sl = values_lattice(&ctx, &named("SL(2,3)"), &family).unwrap();
        assert!(sl.distributive);
    }

    #[test]
    fn relabeling() {
        let ctx = Context::default();
        for name in ["S4", "D12", "Q8"] {
            for e in [
                E::f_star(),
                E::f_tilde(),
                E::fitting(),
                E::phi(),
                E::Builtin(Builtin::Soc),
            ] {
                assert!(relabel_invariant(&ctx, &e, &named(name)).unwrap());
            }
        }
    }

    #[test]
    fn direct_product_law() {
        let ctx = Context::default();
        let (a, b) = (named("S3"), named("Q8"));
        let p = direct_product(&a, &b);
        for e in [E::f_star(), E::f_tilde()] {
            let whole = evaluate(&ctx, &e, &p.group).unwrap();
            let parts = join(
                &p.embed(0, &evaluate(&ctx, &e, &a).unwrap()),
                &p.embed(1, &evaluate(&ctx, &e, &b).unwrap()),
            )
            .unwrap();
            assert_eq!(whole, parts);
        }
    }
}
