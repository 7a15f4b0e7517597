//! Permutation groups and the subgroup operations everything else is built on.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::caps::Caps;
use crate::chain::StabChain;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite permutation group with an eagerly built stabilizer chain.
///
/// Cloning is cheap. Subgroups are plain `Group`s of the same degree; two
/// groups compare equal when they have the same elements.
#[derive(Clone)]
pub struct Group(Arc<GroupData>);

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: u64,
    elements: OnceLock<Arc<ElementTable>>,
    pub(crate) memo: crate::lattice::GroupMemo,
}

impl Group {
    /// Builds the chain for `generators`. An empty list gives the trivial group.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut chain = StabChain::new(degree);
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch(degree, g.degree()));
            }
            chain.add_generator(g);
        }
        Ok(Group::from_chain(generators, chain))
    }

    /// `build_chain`: the degree is taken from the generators.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Group> {
        let degree = generators
            .first()
            .map(Permutation::degree)
            .ok_or_else(|| Error::InvalidPermutation("empty generator list".into()))?;
        Group::new(degree, generators)
    }

    fn from_chain(generators: Vec<Permutation>, chain: StabChain) -> Group {
        let order = chain.order();
        Group(Arc::new(GroupData {
            degree: chain.degree(),
            generators,
            chain,
            order,
            elements: OnceLock::new(),
            memo: Default::default(),
        }))
    }

    pub fn trivial(degree: usize) -> Group {
        Group::new(degree, Vec::new()).expect("positive degree")
    }

    /// Group generated by `elements`, keeping only those that enlarge it.
    pub fn generated_by<'a>(
        degree: usize,
        elements: impl IntoIterator<Item = &'a Permutation>,
    ) -> Group {
        let mut chain = StabChain::new(degree);
        let mut gens = Vec::new();
        for e in elements {
            if chain.add_generator(e) {
                gens.push(e.clone());
            }
        }
        Group::from_chain(gens, chain)
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.0.generators
    }

    pub fn order(&self) -> u64 {
        self.0.order
    }

    pub fn is_trivial(&self) -> bool {
        self.0.order == 1
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree())
    }

    pub fn base(&self) -> Vec<usize> {
        self.0.chain.base()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.0.chain.orbit_sizes()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        self.0.chain.strong_generators()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.0.chain.contains(p)
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && other.order().is_multiple_of(self.order())
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// Normalized by every generator of `g` (does not check `self <= g`).
    pub fn is_normalized_by(&self, g: &Group) -> bool {
        g.generators().iter().all(|x| {
            self.generators()
                .iter()
                .all(|h| self.contains(&h.conjugate(x)))
        })
    }

    pub fn is_normal_in(&self, g: &Group) -> bool {
        self.is_subgroup_of(g) && self.is_normalized_by(g)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.mul(b) == b.mul(a)))
    }

    /// Conjugate group `self^x`.
    pub fn conjugate(&self, x: &Permutation) -> Group {
        let gens = self.generators().iter().map(|g| g.conjugate(x)).collect();
        Group::new(self.degree(), gens).expect("same degree")
    }

    /// Enumerated elements, cached; fails past `cap`.
    pub fn elements(&self, cap: u64) -> Result<Arc<ElementTable>> {
        if self.order() > cap {
            return Err(Error::EnumerationTooLarge {
                order: self.order(),
                cap,
            });
        }
        Ok(self
            .0
            .elements
            .get_or_init(|| Arc::new(ElementTable::new(self.0.chain.elements())))
            .clone())
    }

    /// Order-independent hash of the element set; equal groups agree.
    pub fn fingerprint(&self, cap: u64) -> Result<u64> {
        let table = self.elements(cap)?;
        let mut acc = (self.degree() as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ self.order();
        for e in table.iter() {
            let mut h = DefaultHasher::new();
            e.hash(&mut h);
            acc = acc.wrapping_add(h.finish());
        }
        Ok(acc)
    }

    pub(crate) fn memo(&self) -> &crate::lattice::GroupMemo {
        &self.0.memo
    }

    /// Generator list in cycle notation.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators().iter().map(|g| g.to_string()).collect()
    }

    pub fn summary(&self) -> SubgroupSummary {
        SubgroupSummary {
            order: self.order(),
            generators: self.generator_strings(),
        }
    }

    /// Element-order multiset, sorted.
    pub fn element_orders(&self, cap: u64) -> Result<Vec<u64>> {
        let table = self.elements(cap)?;
        let mut orders: Vec<u64> = table.iter().map(Permutation::order).collect();
        orders.sort_unstable();
        Ok(orders)
    }
}

/// Serialized form of a subgroup: order plus generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct SubgroupSummary {
    pub order: u64,
    pub generators: Vec<String>,
}

impl PartialEq for Group {
    fn eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.degree() == other.degree()
                && self.order() == other.order()
                && self.is_subgroup_of(other))
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, <", self.order())?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(">)")
    }
}

const MUL_TABLE_LIMIT: usize = 1024;

/// Elements of a group in a fixed order, with index lookup and an optional
/// multiplication table.
pub struct ElementTable {
    elements: Vec<Permutation>,
    index: FxHashMap<Permutation, u32>,
    table: OnceLock<Vec<u32>>,
}

impl ElementTable {
    fn new(elements: Vec<Permutation>) -> Self {
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        ElementTable {
            elements,
            index,
            table: OnceLock::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).map(|&i| i as usize)
    }

    /// Index of `elements[i] * elements[j]`. Small tables build a full
    /// multiplication table on first use.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if n > MUL_TABLE_LIMIT {
            return self.index[&self.elements[i].mul(&self.elements[j])] as usize;
        }
        let table = self.table.get_or_init(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    let p = self.elements[a].mul(&self.elements[b]);
                    t[a * n + b] = self.index[&p];
                }
            }
            t
        });
        table[i * n + j] as usize
    }

    /// Element set of a subgroup as a bit set over this table.
    pub fn subset_of(&self, sub: &Group, cap: u64) -> Result<FixedBitSet> {
        let mut set = FixedBitSet::with_capacity(self.len());
        for e in sub.elements(cap)?.iter() {
            let i = self
                .position(e)
                .ok_or_else(|| Error::NotSubgroup(format!("{e} is not in the ambient group")))?;
            set.insert(i);
        }
        Ok(set)
    }

    /// Subgroup generated by the elements of a bit set.
    pub fn group_of(&self, degree: usize, set: &FixedBitSet) -> Group {
        Group::generated_by(degree, set.ones().map(|i| &self.elements[i]))
    }
}

/// `compose(p, q)`.
pub fn compose(p: &Permutation, q: &Permutation) -> Result<Permutation> {
    p.compose(q)
}

/// `invert(p)`.
pub fn invert(p: &Permutation) -> Permutation {
    p.inverse()
}

/// Smallest normal subgroup of `g` containing `seed`.
pub fn normal_closure(g: &Group, seed: &Group) -> Group {
    normal_closure_of(g, seed.generators())
}

/// Normal closure in `g` of a set of elements.
pub fn normal_closure_of(g: &Group, seed: &[Permutation]) -> Group {
    let degree = g.degree();
    let mut chain = StabChain::new(degree);
    let mut gens: Vec<Permutation> = Vec::new();
    for s in seed {
        if chain.add_generator(s) {
            gens.push(s.clone());
        }
    }
    let mut i = 0;
    while i < gens.len() {
        for x in g.generators() {
            let c = gens[i].conjugate(x);
            if chain.add_generator(&c) {
                gens.push(c);
            }
        }
        i += 1;
    }
    Group::from_chain(gens, chain)
}

/// Centralizer in `g` of `s`, by element filtering.
pub fn centralizer(g: &Group, s: &Group, cap: u64) -> Result<Group> {
    let table = g.elements(cap)?;
    let gens = s.generators();
    Ok(Group::generated_by(
        g.degree(),
        table
            .iter()
            .filter(|x| gens.iter().all(|a| x.mul(a) == a.mul(x))),
    ))
}

/// Intersection of two groups of the same degree: elements of the smaller
/// filtered by membership in the larger.
pub fn intersect(a: &Group, b: &Group, cap: u64) -> Result<Group> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    if a.is_subgroup_of(b) {
        return Ok(a.clone());
    }
    if b.is_subgroup_of(a) {
        return Ok(b.clone());
    }
    let (small, large) = if a.order() <= b.order() {
        (a, b)
    } else {
        (b, a)
    };
    let table = small.elements(cap)?;
    Ok(Group::generated_by(
        a.degree(),
        table.iter().filter(|x| large.contains(x)),
    ))
}

/// Subgroup generated by both.
pub fn join(a: &Group, b: &Group) -> Result<Group> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch(a.degree(), b.degree()));
    }
    if b.is_subgroup_of(a) {
        return Ok(a.clone());
    }
    if a.is_subgroup_of(b) {
        return Ok(b.clone());
    }
    Ok(Group::generated_by(
        a.degree(),
        a.generators().iter().chain(b.generators()),
    ))
}

/// Join of a list of groups; trivial for an empty list.
pub fn join_all<'a>(degree: usize, groups: impl IntoIterator<Item = &'a Group>) -> Group {
    let gens: Vec<&Permutation> = groups.into_iter().flat_map(|g| g.generators()).collect();
    Group::generated_by(degree, gens)
}

/// Commutator subgroup `[a, b]` for `a`, `b` normal in `g`.
pub fn commutator_subgroup(g: &Group, a: &Group, b: &Group) -> Group {
    let mut seed = Vec::new();
    for x in a.generators() {
        for y in b.generators() {
            let c = Permutation::commutator(x, y);
            if !c.is_identity() {
                seed.push(c);
            }
        }
    }
    normal_closure_of(g, &seed)
}

#[derive(Clone)]
enum MapKind {
    Identity,
    Cosets {
        table: Arc<ElementTable>,
        coset_of: Vec<u32>,
        reps: Vec<Permutation>,
    },
    Restriction {
        offset: usize,
        len: usize,
    },
}

/// A surjective homomorphism with computable images and preimages.
#[derive(Clone)]
pub struct Epimorphism {
    source: Group,
    target: Group,
    kernel: Group,
    map: MapKind,
}

impl Epimorphism {
    pub fn source(&self) -> &Group {
        &self.source
    }

    pub fn target(&self) -> &Group {
        &self.target
    }

    pub fn kernel(&self) -> &Group {
        &self.kernel
    }

    pub fn image(&self, x: &Permutation) -> Permutation {
        match &self.map {
            MapKind::Identity => x.clone(),
            MapKind::Cosets {
                table,
                coset_of,
                reps,
            } => {
                let images = reps
                    .iter()
                    .map(|r| {
                        let i = table.position(&r.mul(x)).expect("element of source");
                        coset_of[i]
                    })
                    .collect();
                Permutation::from_images(images).expect("coset action is a permutation")
            }
            MapKind::Restriction { offset, len } => x.restrict(*offset, *len),
        }
    }

    /// Image of a subgroup of the source.
    pub fn image_group(&self, h: &Group) -> Group {
        let gens: Vec<Permutation> = h.generators().iter().map(|x| self.image(x)).collect();
        Group::generated_by(self.target.degree(), &gens)
    }

    /// Some preimage of an element of the target.
    pub fn lift(&self, y: &Permutation) -> Permutation {
        match &self.map {
            MapKind::Identity => y.clone(),
            // the image of x sends coset 0 (the kernel) to the coset of x
            MapKind::Cosets { reps, .. } => reps[y.apply(0)].clone(),
            MapKind::Restriction { offset, .. } => y.embed(*offset, self.source.degree()),
        }
    }

    /// Full preimage of a subgroup of the target.
    pub fn preimage(&self, q: &Group) -> Group {
        let lifted: Vec<Permutation> = q.generators().iter().map(|y| self.lift(y)).collect();
        Group::generated_by(
            self.source.degree(),
            self.kernel.generators().iter().chain(&lifted),
        )
    }
}

/// Quotient by a normal subgroup, realized as the action on cosets.
///
/// Quotients by the trivial subgroup return the identity map onto `g`.
pub fn quotient(g: &Group, n: &Group, caps: &Caps) -> Result<Epimorphism> {
    if !n.is_normal_in(g) {
        return Err(Error::NotNormal(format!(
            "subgroup of order {} is not normal in the group of order {}",
            n.order(),
            g.order()
        )));
    }
    if n.is_trivial() {
        return Ok(Epimorphism {
            source: g.clone(),
            target: g.clone(),
            kernel: n.clone(),
            map: MapKind::Identity,
        });
    }
    let index = g.order() / n.order();
    if index > caps.max_degree {
        return Err(Error::DegreeCapExceeded {
            index,
            cap: caps.max_degree,
        });
    }
    let table = g.elements(caps.max_elements)?;
    let kernel_elems = n.elements(caps.max_elements)?;
    const UNSET: u32 = u32::MAX;
    let mut coset_of = vec![UNSET; table.len()];
    let mut reps = Vec::with_capacity(index as usize);
    for (i, x) in table.iter().enumerate() {
        if coset_of[i] != UNSET {
            continue;
        }
        let id = reps.len() as u32;
        for k in kernel_elems.iter() {
            let j = table.position(&x.mul(k)).expect("closed");
            coset_of[j] = id;
        }
        reps.push(x.clone());
    }
    debug_assert_eq!(reps.len() as u64, index);
    let degree = reps.len();
    let action = |x: &Permutation| -> Permutation {
        let images = reps
            .iter()
            .map(|r| coset_of[table.position(&r.mul(x)).unwrap()])
            .collect();
        Permutation::from_images(images).unwrap()
    };
    let target_gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(action)
        .filter(|p| !p.is_identity())
        .collect();
    let target = Group::new(degree, target_gens)?;
    debug_assert_eq!(target.order(), index);
    Ok(Epimorphism {
        source: g.clone(),
        target,
        kernel: n.clone(),
        map: MapKind::Cosets {
            table,
            coset_of,
            reps,
        },
    })
}

/// External direct product on disjoint point sets.
#[derive(Clone)]
pub struct DirectProduct {
    pub group: Group,
    factors: Vec<Group>,
    offsets: Vec<usize>,
}

impl DirectProduct {
    pub fn factors(&self) -> &[Group] {
        &self.factors
    }

    /// Canonical embedding of a subgroup of factor `i`.
    pub fn embed(&self, i: usize, h: &Group) -> Group {
        let degree = self.group.degree();
        let gens = h
            .generators()
            .iter()
            .map(|x| x.embed(self.offsets[i], degree))
            .collect();
        Group::new(degree, gens).expect("degree")
    }

    /// Image of factor `i` inside the product.
    pub fn factor_image(&self, i: usize) -> Group {
        self.embed(i, &self.factors[i])
    }

    pub fn projection(&self, i: usize) -> Epimorphism {
        let kernel = join_all(
            self.group.degree(),
            (0..self.factors.len())
                .filter(|&j| j != i)
                .map(|j| self.factor_image(j))
                .collect::<Vec<_>>()
                .iter(),
        );
        Epimorphism {
            source: self.group.clone(),
            target: self.factors[i].clone(),
            kernel,
            map: MapKind::Restriction {
                offset: self.offsets[i],
                len: self.factors[i].degree(),
            },
        }
    }
}

pub fn direct_product(g1: &Group, g2: &Group) -> DirectProduct {
    direct_product_of(&[g1.clone(), g2.clone()])
}

pub fn direct_product_of(factors: &[Group]) -> DirectProduct {
    let degree: usize = factors.iter().map(Group::degree).sum();
    let mut offsets = Vec::with_capacity(factors.len());
    let mut gens = Vec::new();
    let mut offset = 0;
    for f in factors {
        offsets.push(offset);
        gens.extend(f.generators().iter().map(|x| x.embed(offset, degree)));
        offset += f.degree();
    }
    DirectProduct {
        group: Group::new(degree.max(1), gens).expect("degree"),
        factors: factors.to_vec(),
        offsets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse(n, s).unwrap()
    }

    fn grp(n: usize, gens: &[&str]) -> Group {
        Group::new(n, gens.iter().map(|s| p(n, s)).collect()).unwrap()
    }

    /// Naive closure under right multiplication by generators.
    fn naive_closure(g: &Group) -> HashSet<Permutation> {
        let mut seen = HashSet::new();
        let mut queue = vec![g.identity()];
        seen.insert(g.identity());
        while let Some(x) = queue.pop() {
            for s in g.generators() {
                let y = x.mul(s);
                if seen.insert(y.clone()) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    const CAP: u64 = 1_000_000;

    #[test]
    fn orders_match_naive_closure() {
        for g in [
            grp(3, &["(1 2)", "(1 2 3)"]),
            grp(1, &[]),
            grp(5, &["(1 2 3 4 5)", "(3 4 5)"]),
            grp(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]),
        ] {
            let naive = naive_closure(&g);
            assert_eq!(g.order(), naive.len() as u64);
            let elems: HashSet<_> = g.elements(CAP).unwrap().iter().cloned().collect();
            assert_eq!(elems, naive);
        }
    }

    #[test]
    fn identity_generator_gives_trivial_group() {
        let g = grp(3, &["()"]);
        assert_eq!(g.order(), 1);
        assert_eq!(g.elements(CAP).unwrap().len(), 1);
    }

    #[test]
    fn cyclic_four_elements_are_powers() {
        let g = grp(4, &["(1 2 3 4)"]);
        let c = p(4, "(1 2 3 4)");
        let powers: HashSet<_> = (0..4)
            .scan(g.identity(), |acc, _| {
                let out = acc.clone();
                *acc = acc.mul(&c);
                Some(out)
            })
            .collect();
        let elems: HashSet<_> = g.elements(CAP).unwrap().iter().cloned().collect();
        assert_eq!(elems, powers);
    }

    #[test]
    fn enumeration_cap_is_loud() {
        let s5 = grp(5, &["(1 2 3 4 5)", "(1 2)"]);
        assert!(matches!(
            s5.elements(100),
            Err(Error::EnumerationTooLarge {
                order: 120,
                cap: 100
            })
        ));
    }

    #[test]
    fn normal_closures() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        assert_eq!(normal_closure(&s3, &grp(3, &["(1 2)"])), s3);
        assert!(normal_closure(&s3, &Group::trivial(3)).is_trivial());
        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = normal_closure(&s4, &grp(4, &["(1 2)(3 4)"]));
        assert_eq!(v4.order(), 4);
        assert_eq!(v4, grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]));
    }

    #[test]
    fn centralizers() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let a3 = grp(3, &["(1 2 3)"]);
        assert_eq!(centralizer(&s3, &a3, CAP).unwrap(), a3);
        assert_eq!(centralizer(&s3, &Group::trivial(3), CAP).unwrap(), s3);
        let q8 = grp(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        let z = grp(8, &["(1 3)(2 4)(5 7)(6 8)"]);
        assert_eq!(centralizer(&q8, &z, CAP).unwrap(), q8);
    }

    #[test]
    fn quotients() {
        let caps = Caps::default();
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let a3 = grp(3, &["(1 2 3)"]);
        assert_eq!(quotient(&s3, &a3, &caps).unwrap().target().order(), 2);
        assert_eq!(quotient(&s3, &s3, &caps).unwrap().target().order(), 1);
        assert!(matches!(
            quotient(&s3, &grp(3, &["(1 2)"]), &caps),
            Err(Error::NotNormal(_))
        ));

        let s4 = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let v4 = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let f = quotient(&s4, &v4, &caps).unwrap();
        let q = f.target();
        assert_eq!(q.order(), 6);
        assert_eq!(q.degree(), 6);
        assert!(!q.is_abelian());
        // S3 fingerprint: one identity, three involutions, two 3-cycles
        assert_eq!(q.element_orders(CAP).unwrap(), vec![1, 2, 2, 2, 3, 3]);
        // homomorphism and kernel
        let elems = s4.elements(CAP).unwrap();
        for x in elems.iter() {
            for y in elems.iter().step_by(5) {
                assert_eq!(f.image(&x.mul(y)), f.image(x).mul(&f.image(y)));
            }
            assert_eq!(f.image(x).is_identity(), v4.contains(x));
        }
        assert_eq!(f.preimage(&Group::trivial(6)), v4);
        assert_eq!(f.preimage(q), s4);
    }

    #[test]
    fn meet_and_join() {
        let s3 = grp(3, &["(1 2)", "(1 2 3)"]);
        let a3 = grp(3, &["(1 2 3)"]);
        let t = grp(3, &["(1 2)"]);
        assert!(intersect(&a3, &t, CAP).unwrap().is_trivial());
        assert_eq!(join(&a3, &t).unwrap(), s3);
        assert_eq!(join(&a3, &intersect(&a3, &t, CAP).unwrap()).unwrap(), a3);
    }

    #[test]
    fn direct_product_of_coprime_cyclics() {
        let c2 = grp(2, &["(1 2)"]);
        let c3 = grp(3, &["(1 2 3)"]);
        let d = direct_product(&c2, &c3);
        assert_eq!(d.group.order(), 6);
        assert!(d.group.is_abelian());
        let pr = d.projection(1);
        assert_eq!(pr.kernel(), &d.factor_image(0));
        assert_eq!(pr.image_group(&d.group), c3);
        assert_eq!(pr.preimage(&Group::trivial(3)), d.factor_image(0));
    }
}
