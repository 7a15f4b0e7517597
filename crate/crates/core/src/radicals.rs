//! Fitting-like radicals: `O_p`, `O_pi`, `F`, `F*`, `F~`, `Phi_pi`, the
//! inneriser machinery, and brute-force oracles for each.
//!
//! Every radical of the trivial group is the trivial group.

use std::collections::BTreeSet;
use std::sync::RwLock;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{centralizer, commutator_subgroup, intersect, join, join_all, quotient, Group};
use crate::lattice::{
    chief_series, chief_series_through, chief_series_with, frattini, normal_lattice, socle,
    socle_above, ChiefPick, Section,
};
use crate::perm::Permutation;

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

/// Distinct prime divisors, ascending.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `n` is a product of primes from `pi` (1 always is).
pub fn is_pi_number(n: u64, pi: &BTreeSet<u64>) -> bool {
    prime_divisors(n).iter().all(|p| pi.contains(p))
}

type Entries = FxHashMap<(u64, String), Vec<(Group, Group)>>;

/// Memo of radical values keyed by group element set and radical name.
/// Safe under concurrent insert-or-get; a racing insert keeps the first value.
#[derive(Default)]
pub struct RadicalCache {
    map: RwLock<Entries>,
}

impl RadicalCache {
    pub fn get(&self, key: u64, name: &str, g: &Group) -> Option<Group> {
        let map = self.map.read().unwrap();
        map.get(&(key, name.to_string()))?
            .iter()
            .find(|(h, _)| h == g)
            .map(|(_, v)| v.clone())
    }

    pub fn insert(&self, key: u64, name: &str, g: &Group, value: Group) -> Group {
        let mut map = self.map.write().unwrap();
        let bucket = map.entry((key, name.to_string())).or_default();
        if let Some((_, v)) = bucket.iter().find(|(h, _)| h == g) {
            return v.clone();
        }
        bucket.push((g.clone(), value.clone()));
        value
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Caps plus the per-session radical cache.
#[derive(Default)]
pub struct Context {
    pub caps: Caps,
    pub cache: RadicalCache,
}

impl Context {
    pub fn new(caps: Caps) -> Self {
        Context {
            caps,
            cache: RadicalCache::default(),
        }
    }

    /// Looks up `name` for `g`, computing and storing it on a miss. Groups
    /// too large to fingerprint are computed uncached.
    pub fn memo(&self, name: &str, g: &Group, f: impl FnOnce() -> Result<Group>) -> Result<Group> {
        let Ok(key) = g.fingerprint(self.caps.max_elements) else {
            return f();
        };
        if let Some(v) = self.cache.get(key, name, g) {
            return Ok(v);
        }
        let value = f()?;
        Ok(self.cache.insert(key, name, g, value))
    }
}

/// Does `x` act on `s` as some element of `s.top` does? Searches every
/// `h` in the top group.
pub fn acts_as_inner(x: &Permutation, s: &Section, caps: &Caps) -> Result<bool> {
    let gens = s.top.generators();
    let conj_x: Vec<Permutation> = gens.iter().map(|a| a.conjugate(x).inverse()).collect();
    let top = s.top.elements(caps.max_elements)?;
    Ok(top.iter().any(|h| {
        gens.iter()
            .zip(&conj_x)
            .all(|(a, ax_inv)| s.bottom.contains(&ax_inv.mul(&a.conjugate(h))))
    }))
}

/// `C_G(H/K) = { x : [x, a] in K for all a in H }`, by element filtering.
pub fn section_centralizer(g: &Group, s: &Section, caps: &Caps) -> Result<Group> {
    let table = g.elements(caps.max_elements)?;
    let gens = s.top.generators();
    Ok(Group::generated_by(
        g.degree(),
        table.iter().filter(|x| {
            gens.iter()
                .all(|a| s.bottom.contains(&Permutation::commutator(x, a)))
        }),
    ))
}

/// Inneriser `H * C_G(H/K)` of a chief factor.
pub fn inneriser(g: &Group, s: &Section, caps: &Caps) -> Result<Group> {
    join(&s.top, &section_centralizer(g, s, caps)?)
}

/// Largest normal `pi`-subgroup.
pub fn o_pi(g: &Group, pi: &BTreeSet<u64>, caps: &Caps) -> Result<Group> {
    let l = normal_lattice(g, caps)?;
    let idx = (0..l.len()).filter(|&i| is_pi_number(l.members()[i].order(), pi));
    Ok(l.members()[l.join_of(idx)].clone())
}

/// Largest normal `p`-subgroup.
pub fn o_p(g: &Group, p: u64, caps: &Caps) -> Result<Group> {
    o_pi(g, &BTreeSet::from([p]), caps)
}

/// Fitting subgroup as the product of the `O_p`.
pub fn fitting(g: &Group, caps: &Caps) -> Result<Group> {
    let cores = prime_divisors(g.order())
        .into_iter()
        .map(|p| o_p(g, p, caps))
        .collect::<Result<Vec<_>>>()?;
    Ok(join_all(g.degree(), &cores))
}

/// Oracle: join of all normal nilpotent subgroups.
pub fn fitting_oracle(g: &Group, caps: &Caps) -> Result<Group> {
    let l = normal_lattice(g, caps)?;
    let idx = (0..l.len()).filter(|&i| is_nilpotent(&l.members()[i]));
    Ok(l.members()[l.join_of(idx)].clone())
}

pub fn lower_central_series(g: &Group) -> Vec<Group> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().unwrap();
        let next = commutator_subgroup(g, last, g);
        if next == *last {
            break;
        }
        out.push(next);
    }
    out
}

pub fn derived_series(g: &Group) -> Vec<Group> {
    let mut out = vec![g.clone()];
    loop {
        let last = out.last().unwrap();
        let next = commutator_subgroup(last, last, last);
        if next == *last {
            break;
        }
        out.push(next);
    }
    out
}

pub fn is_nilpotent(g: &Group) -> bool {
    lower_central_series(g).last().unwrap().is_trivial()
}

pub fn is_soluble(g: &Group) -> bool {
    derived_series(g).last().unwrap().is_trivial()
}

/// Every element induces an inner automorphism on every factor of the
/// default chief series. Elements acting as inner form a subgroup, so
/// checking the generators of `g` covers its closure.
pub fn is_quasinilpotent(g: &Group, caps: &Caps) -> Result<bool> {
    let series = chief_series(g, caps)?;
    quasinilpotent_on(g, &series.factors(), caps)
}

/// Same check against the chief series built with the other pick rule.
pub fn is_quasinilpotent_with(g: &Group, caps: &Caps, how: ChiefPick) -> Result<bool> {
    let series = chief_series_with(g, caps, how)?;
    quasinilpotent_on(g, &series.factors(), caps)
}

fn quasinilpotent_on(g: &Group, factors: &[Section], caps: &Caps) -> Result<bool> {
    for s in factors {
        for x in g.generators() {
            if !acts_as_inner(x, s, caps)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `F*(G)` from `F*(G)/F(G) = Soc(F(G) C_G(F(G)) / F(G))`.
pub fn f_star(g: &Group, caps: &Caps) -> Result<Group> {
    let f = fitting(g, caps)?;
    let c = centralizer(g, &f, caps.max_elements)?;
    let fc = join(&f, &c)?;
    // normal subgroups of FC/F are the normal subgroups of FC above F
    let l = normal_lattice(&fc, caps)?;
    let fi = l
        .position_of(&f, caps)?
        .expect("F(G) is normal in F(G)C_G(F(G))");
    Ok(l.members()[socle_above(&l, fi)].clone())
}

/// Oracle: join of all normal quasinilpotent subgroups.
pub fn f_star_oracle(g: &Group, caps: &Caps) -> Result<Group> {
    let l = normal_lattice(g, caps)?;
    let mut idx = Vec::new();
    for i in 0..l.len() {
        if is_quasinilpotent(&l.members()[i], caps)? {
            idx.push(i);
        }
    }
    let value = l.members()[l.join_of(idx)].clone();
    if !is_quasinilpotent(&value, caps)? {
        return Err(Error::Invalid(
            "join of normal quasinilpotent subgroups is not quasinilpotent".into(),
        ));
    }
    Ok(value)
}

/// Per-factor data recorded by the inneriser characterizations.
#[derive(Clone, Debug, Serialize)]
pub struct FactorWitness {
    pub top_order: u64,
    pub bottom_order: u64,
    pub inneriser_order: u64,
    pub centralizer_order: u64,
    /// Set by the `F~` characterization only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub non_frattini: Option<bool>,
}

fn intersect_all(g: &Group, groups: &[Group], caps: &Caps) -> Result<Group> {
    let mut acc = g.clone();
    for h in groups {
        acc = intersect(&acc, h, caps.max_elements)?;
    }
    Ok(acc)
}

/// Intersection of innerisers over one chief series, with the witness.
pub fn f_star_by_innerisers_witnessed(
    g: &Group,
    caps: &Caps,
) -> Result<(Group, Vec<FactorWitness>)> {
    let series = chief_series(g, caps)?;
    let mut values = Vec::new();
    let mut witness = Vec::new();
    for s in series.factors() {
        let c = section_centralizer(g, &s, caps)?;
        let inner = join(&s.top, &c)?;
        witness.push(FactorWitness {
            top_order: s.top.order(),
            bottom_order: s.bottom.order(),
            inneriser_order: inner.order(),
            centralizer_order: c.order(),
            non_frattini: None,
        });
        values.push(inner);
    }
    Ok((intersect_all(g, &values, caps)?, witness))
}

pub fn f_star_by_innerisers(g: &Group, caps: &Caps) -> Result<Group> {
    Ok(f_star_by_innerisers_witnessed(g, caps)?.0)
}

/// Intersection of the chief-factor centralizers over one chief series.
pub fn fitting_by_centralizers(g: &Group, caps: &Caps) -> Result<Group> {
    let series = chief_series(g, caps)?;
    let values = series
        .factors()
        .iter()
        .map(|s| section_centralizer(g, s, caps))
        .collect::<Result<Vec<_>>>()?;
    intersect_all(g, &values, caps)
}

/// `F~(G)`: preimage of `Soc(G/Phi(G))`.
pub fn f_tilde(g: &Group, caps: &Caps) -> Result<Group> {
    let phi = frattini(g, caps)?;
    let l = normal_lattice(g, caps)?;
    let pi = l
        .position_of(&phi, caps)?
        .expect("Frattini subgroup is normal");
    Ok(l.members()[socle_above(&l, pi)].clone())
}

/// `F~(G)` as the preimage of `F*(G/Phi(G))`, through an actual quotient.
pub fn f_tilde_forster(g: &Group, caps: &Caps) -> Result<Group> {
    let phi = frattini(g, caps)?;
    let q = quotient(g, &phi, caps)?;
    Ok(q.preimage(&f_star(q.target(), caps)?))
}

/// Intersection of `H C_G(H/K)` over the non-Frattini factors `H/K` of a
/// chief series through `Phi(G)`: those with `H` not inside the preimage
/// of `Phi(G/K)`.
pub fn f_tilde_by_innerisers_witnessed(
    g: &Group,
    caps: &Caps,
) -> Result<(Group, Vec<FactorWitness>)> {
    let phi = frattini(g, caps)?;
    let series = chief_series_through(g, &phi, caps)?;
    let mut values = Vec::new();
    let mut witness = Vec::new();
    for s in series.factors() {
        let q = quotient(g, &s.bottom, caps)?;
        let phi_q = q.preimage(&frattini(q.target(), caps)?);
        let non_frattini = !s.top.is_subgroup_of(&phi_q);
        let c = section_centralizer(g, &s, caps)?;
        let inner = join(&s.top, &c)?;
        witness.push(FactorWitness {
            top_order: s.top.order(),
            bottom_order: s.bottom.order(),
            inneriser_order: inner.order(),
            centralizer_order: c.order(),
            non_frattini: Some(non_frattini),
        });
        if non_frattini {
            values.push(inner);
        }
    }
    Ok((intersect_all(g, &values, caps)?, witness))
}

pub fn f_tilde_by_innerisers(g: &Group, caps: &Caps) -> Result<Group> {
    Ok(f_tilde_by_innerisers_witnessed(g, caps)?.0)
}

/// `Phi_pi(G) = O_pi(Phi(G))`.
pub fn phi_pi(g: &Group, pi: &BTreeSet<u64>, caps: &Caps) -> Result<Group> {
    if pi.is_empty() {
        return Ok(Group::trivial(g.degree()));
    }
    o_pi(&frattini(g, caps)?, pi, caps)
}

/// Named radicals, for the CLI and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Radical {
    Fitting,
    FittingOracle,
    FittingByCentralizers,
    FStar,
    FStarOracle,
    FStarByInnerisers,
    FTilde,
    FTildeForster,
    FTildeByInnerisers,
    Frattini,
    Socle,
    MIntersection,
    OPi(BTreeSet<u64>),
    PhiPi(BTreeSet<u64>),
}

impl Radical {
    pub const NAMES: &'static [&'static str] = &[
        "F",
        "F_oracle",
        "F_centralizers",
        "Fstar",
        "Fstar_oracle",
        "Fstar_innerisers",
        "Ftilde",
        "Ftilde_forster",
        "Ftilde_innerisers",
        "Phi",
        "Soc",
        "M",
        "O_pi{..}",
        "Phi_pi{..}",
    ];

    pub fn parse(name: &str) -> Result<Radical> {
        let primes = |s: &str| -> Result<BTreeSet<u64>> {
            crate::parse::parse_prime_list(s).map_err(|m| Error::parse(1, 1, m))
        };
        Ok(match name {
            "F" => Radical::Fitting,
            "F_oracle" => Radical::FittingOracle,
            "F_centralizers" => Radical::FittingByCentralizers,
            "Fstar" => Radical::FStar,
            "Fstar_oracle" => Radical::FStarOracle,
            "Fstar_innerisers" => Radical::FStarByInnerisers,
            "Ftilde" => Radical::FTilde,
            "Ftilde_forster" => Radical::FTildeForster,
            "Ftilde_innerisers" => Radical::FTildeByInnerisers,
            "Phi" => Radical::Frattini,
            "Soc" => Radical::Socle,
            "M" => Radical::MIntersection,
            _ => {
                if let Some(rest) = name.strip_prefix("O_pi{").and_then(|r| r.strip_suffix('}')) {
                    Radical::OPi(primes(rest)?)
                } else if let Some(rest) = name
                    .strip_prefix("Phi_pi{")
                    .and_then(|r| r.strip_suffix('}'))
                {
                    Radical::PhiPi(primes(rest)?)
                } else {
                    return Err(Error::parse(
                        1,
                        1,
                        format!(
                            "unknown radical {name:?}; expected one of {:?}",
                            Radical::NAMES
                        ),
                    ));
                }
            }
        })
    }
}

/// A computed radical with its definitional witness.
#[derive(Clone, Debug)]
pub struct RadicalResult {
    pub name: String,
    pub value: Group,
    pub witness: Vec<FactorWitness>,
}

pub fn compute(g: &Group, radical: &Radical, caps: &Caps) -> Result<RadicalResult> {
    let mut witness = Vec::new();
    let value = match radical {
        Radical::Fitting => fitting(g, caps)?,
        Radical::FittingOracle => fitting_oracle(g, caps)?,
        Radical::FittingByCentralizers => fitting_by_centralizers(g, caps)?,
        Radical::FStar => f_star(g, caps)?,
        Radical::FStarOracle => f_star_oracle(g, caps)?,
        Radical::FStarByInnerisers => {
            let (v, w) = f_star_by_innerisers_witnessed(g, caps)?;
            witness = w;
            v
        }
        Radical::FTilde => f_tilde(g, caps)?,
        Radical::FTildeForster => f_tilde_forster(g, caps)?,
        Radical::FTildeByInnerisers => {
            let (v, w) = f_tilde_by_innerisers_witnessed(g, caps)?;
            witness = w;
            v
        }
        Radical::Frattini => frattini(g, caps)?,
        Radical::Socle => socle(g, caps)?,
        Radical::MIntersection => crate::lattice::m_intersection(g, caps)?,
        Radical::OPi(pi) => o_pi(g, pi, caps)?,
        Radical::PhiPi(pi) => phi_pi(g, pi, caps)?,
    };
    debug_assert!(value.is_normal_in(g));
    Ok(RadicalResult {
        name: format!("{radical:?}"),
        value,
        witness,
    })
}
