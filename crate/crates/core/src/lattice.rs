//! Subgroup-level structure: all subgroups, Frattini subgroup, the normal
//! subgroup lattice, socle and chief series.

use std::cmp::Ordering;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;
use rustc_hash::FxHashMap;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::group::{ElementTable, Group};
use crate::perm::Permutation;

/// Per-group memo of derived structure. Lives inside [`Group`].
#[derive(Default)]
pub(crate) struct GroupMemo {
    subgroups: OnceLock<Arc<SubgroupTable>>,
    normals: OnceLock<Arc<NormalLattice>>,
    chief: OnceLock<Arc<ChiefSeries>>,
    frattini: OnceLock<Group>,
}

/// Smallest subset containing `start` and closed under right
/// multiplication by `gens`.
pub(crate) fn closure(table: &ElementTable, start: &FixedBitSet, gens: &[usize]) -> FixedBitSet {
    let mut set = start.clone();
    set.insert(0);
    let mut queue: Vec<usize> = set.ones().collect();
    while let Some(x) = queue.pop() {
        for &s in gens {
            let y = table.mul(x, s);
            if !set.contains(y) {
                set.insert(y);
                queue.push(y);
            }
        }
    }
    set
}

/// Every subgroup of a group, deduplicated by element set.
pub struct SubgroupTable {
    table: Arc<ElementTable>,
    sets: Vec<FixedBitSet>,
    groups: Vec<Group>,
    index: FxHashMap<FixedBitSet, usize>,
}

impl SubgroupTable {
    pub fn groups(&self) -> &[Group] {
        &self.groups
    }

    pub fn sets(&self) -> &[FixedBitSet] {
        &self.sets
    }

    pub fn elements(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn position(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Index of a subgroup given as a group.
    pub fn position_of(&self, h: &Group, caps: &Caps) -> Result<usize> {
        let set = self.table.subset_of(h, caps.max_elements)?;
        self.position(&set)
            .ok_or_else(|| Error::NotSubgroup("not a subgroup of the ambient group".into()))
    }

    /// Indices of subgroups contained in subgroup `i`.
    pub fn below(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let top = &self.sets[i];
        (0..self.sets.len()).filter(move |&j| self.sets[j].is_subset(top))
    }
}

/// All subgroups of `g`, seeded by cyclic subgroups and closed under
/// joining with cyclic subgroups. Sorted by order, stable otherwise.
pub fn all_subgroups(g: &Group, caps: &Caps) -> Result<Arc<SubgroupTable>> {
    if g.order() > caps.max_order {
        return Err(Error::SubgroupCapExceeded {
            order: g.order(),
            cap: caps.max_order,
        });
    }
    if let Some(t) = g.memo().subgroups.get() {
        return Ok(t.clone());
    }
    let table = g.elements(caps.max_elements)?;
    let n = table.len();
    let empty = FixedBitSet::with_capacity(n);

    let mut sets: Vec<FixedBitSet> = Vec::new();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let mut index: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
    let mut cyclic: Vec<usize> = Vec::new();

    for x in 0..n {
        let set = closure(&table, &empty, &[x]);
        if !index.contains_key(&set) {
            index.insert(set.clone(), sets.len());
            sets.push(set);
            gens.push(if x == 0 { vec![] } else { vec![x] });
            if x != 0 {
                cyclic.push(x);
            }
        }
    }

    let mut i = 0;
    while i < sets.len() {
        for &c in &cyclic {
            if sets[i].contains(c) {
                continue;
            }
            let mut new_gens = gens[i].clone();
            new_gens.push(c);
            let set = closure(&table, &sets[i], &new_gens);
            if !index.contains_key(&set) {
                index.insert(set.clone(), sets.len());
                sets.push(set);
                gens.push(new_gens);
            }
        }
        i += 1;
    }

    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&k| sets[k].count_ones(..));
    let sets: Vec<FixedBitSet> = order.iter().map(|&k| sets[k].clone()).collect();
    let groups: Vec<Group> = order
        .iter()
        .map(|&k| {
            let perms: Vec<Permutation> = gens[k].iter().map(|&e| table.get(e).clone()).collect();
            Group::new(g.degree(), perms).expect("same degree")
        })
        .collect();
    let index = sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, s)| (s, k))
        .collect();

    let out = Arc::new(SubgroupTable {
        table,
        sets,
        groups,
        index,
    });
    let _ = g.memo().subgroups.set(out.clone());
    Ok(out)
}

/// Proper subgroups maximal under inclusion.
pub fn maximal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Group>> {
    let subs = all_subgroups(g, caps)?;
    Ok(maximal_indices(&subs)
        .into_iter()
        .map(|i| subs.groups()[i].clone())
        .collect())
}

pub(crate) fn maximal_indices(subs: &SubgroupTable) -> Vec<usize> {
    let n = subs.len();
    let whole = n - 1;
    let sets = subs.sets();
    (0..whole)
        .filter(|&i| {
            (0..whole).all(|j| j == i || !(sets[i].is_subset(&sets[j]) && sets[i] != sets[j]))
        })
        .collect()
}

/// Intersection of all maximal subgroups; the whole group if it is trivial.
pub fn frattini(g: &Group, caps: &Caps) -> Result<Group> {
    if let Some(f) = g.memo().frattini.get() {
        return Ok(f.clone());
    }
    if g.is_trivial() {
        return Ok(g.clone());
    }
    let subs = all_subgroups(g, caps)?;
    let mut acc = subs.sets()[subs.len() - 1].clone();
    for i in maximal_indices(&subs) {
        acc.intersect_with(&subs.sets()[i]);
    }
    let phi = subs.groups()[subs.position(&acc).expect("intersection of subgroups")].clone();
    let _ = g.memo().frattini.set(phi.clone());
    Ok(phi)
}

/// The lattice of normal subgroups of a group.
pub struct NormalLattice {
    table: Arc<ElementTable>,
    members: Vec<Group>,
    sets: Vec<FixedBitSet>,
    index: FxHashMap<FixedBitSet, usize>,
    // inclusion[i][j]: members[i] <= members[j]
    inclusion: Vec<Vec<bool>>,
}

impl NormalLattice {
    pub fn members(&self) -> &[Group] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn elements(&self) -> &Arc<ElementTable> {
        &self.table
    }

    pub fn set(&self, i: usize) -> &FixedBitSet {
        &self.sets[i]
    }

    pub fn trivial(&self) -> usize {
        0
    }

    pub fn whole(&self) -> usize {
        self.members.len() - 1
    }

    pub fn is_below(&self, i: usize, j: usize) -> bool {
        self.inclusion[i][j]
    }

    pub fn is_strictly_below(&self, i: usize, j: usize) -> bool {
        i != j && self.inclusion[i][j]
    }

    pub fn position(&self, set: &FixedBitSet) -> Option<usize> {
        self.index.get(set).copied()
    }

    /// Index of a normal subgroup given as a group; `None` if not normal.
    pub fn position_of(&self, h: &Group, caps: &Caps) -> Result<Option<usize>> {
        if !h.is_subgroup_of(&self.members[self.whole()]) {
            return Ok(None);
        }
        let set = self.table.subset_of(h, caps.max_elements)?;
        Ok(self.position(&set))
    }

    /// Members minimal among those strictly above `i`.
    pub fn covers(&self, i: usize) -> Vec<usize> {
        let above: Vec<usize> = (0..self.len())
            .filter(|&j| self.is_strictly_below(i, j))
            .collect();
        above
            .iter()
            .copied()
            .filter(|&j| !above.iter().any(|&k| self.is_strictly_below(k, j)))
            .collect()
    }

    /// Members maximal among those strictly below `i`.
    pub fn co_covers(&self, i: usize) -> Vec<usize> {
        let below: Vec<usize> = (0..self.len())
            .filter(|&j| self.is_strictly_below(j, i))
            .collect();
        below
            .iter()
            .copied()
            .filter(|&j| !below.iter().any(|&k| self.is_strictly_below(j, k)))
            .collect()
    }

    /// Join of members, as a member index.
    pub fn join_of(&self, idx: impl IntoIterator<Item = usize>) -> usize {
        let mut acc = self.sets[self.trivial()].clone();
        let mut gens = Vec::new();
        for i in idx {
            acc.union_with(&self.sets[i]);
            gens.extend(self.sets[i].ones());
        }
        // the union of normal subgroups generates their product
        let set = closure(&self.table, &acc, &dedup_gens(&self.table, &gens));
        self.position(&set)
            .expect("joins of normal subgroups are normal")
    }

    /// Intersection of members, as a member index; the whole group if empty.
    pub fn meet_of(&self, idx: impl IntoIterator<Item = usize>) -> usize {
        let mut acc = self.sets[self.whole()].clone();
        for i in idx {
            acc.intersect_with(&self.sets[i]);
        }
        self.position(&acc)
            .expect("intersections of normal subgroups are normal")
    }
}

fn dedup_gens(table: &ElementTable, elems: &[usize]) -> Vec<usize> {
    // keep a small generating set: drop elements already generated
    let mut set = FixedBitSet::with_capacity(table.len());
    set.insert(0);
    let mut gens = Vec::new();
    for &e in elems {
        if !set.contains(e) {
            gens.push(e);
            set = closure(table, &set, &gens);
        }
    }
    gens
}

/// Normal subgroups: closures of conjugacy classes, closed under join and
/// intersection.
pub fn normal_lattice(g: &Group, caps: &Caps) -> Result<Arc<NormalLattice>> {
    if let Some(l) = g.memo().normals.get() {
        return Ok(l.clone());
    }
    let table = g.elements(caps.max_elements)?;
    let n = table.len();
    let degree = g.degree();

    // conjugacy classes
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut class = vec![start];
        class_of[start] = id;
        let mut k = 0;
        while k < class.len() {
            let x = table.get(class[k]).clone();
            for s in g.generators() {
                let y = table
                    .position(&x.conjugate(s))
                    .expect("closed under conjugation");
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
            k += 1;
        }
        classes.push(class);
    }

    let mut sets: Vec<FixedBitSet> = Vec::new();
    let mut index: FxHashMap<FixedBitSet, usize> = FxHashMap::default();
    let mut push = |set: FixedBitSet, sets: &mut Vec<FixedBitSet>| {
        if !index.contains_key(&set) {
            index.insert(set.clone(), sets.len());
            sets.push(set);
        }
    };
    let mut trivial = FixedBitSet::with_capacity(n);
    trivial.insert(0);
    push(trivial.clone(), &mut sets);
    for class in &classes {
        let set = closure(&table, &trivial, &dedup_gens(&table, class));
        push(set, &mut sets);
    }

    let mut i = 0;
    while i < sets.len() {
        for j in 0..i {
            let mut meet = sets[i].clone();
            meet.intersect_with(&sets[j]);
            push(meet, &mut sets);

            if sets[i].is_subset(&sets[j]) || sets[j].is_subset(&sets[i]) {
                continue;
            }
            let mut start = sets[i].clone();
            start.union_with(&sets[j]);
            let gens: Vec<usize> = start.ones().collect();
            let joined = closure(&table, &start, &dedup_gens(&table, &gens));
            push(joined, &mut sets);
        }
        i += 1;
    }

    sets.sort_by(|a, b| {
        a.count_ones(..)
            .cmp(&b.count_ones(..))
            .then_with(|| a.as_slice().cmp(b.as_slice()).reverse())
    });
    let index: FxHashMap<FixedBitSet, usize> = sets
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, s)| (s, k))
        .collect();
    let members: Vec<Group> = sets.iter().map(|s| table.group_of(degree, s)).collect();
    let inclusion = sets
        .iter()
        .map(|a| sets.iter().map(|b| a.is_subset(b)).collect())
        .collect();

    debug_assert!(members.iter().all(|m| m.is_normalized_by(g)));
    debug_assert_eq!(sets[0].count_ones(..), 1);
    debug_assert_eq!(sets[sets.len() - 1].count_ones(..), n);

    let lattice = Arc::new(NormalLattice {
        table,
        members,
        sets,
        index,
        inclusion,
    });
    let _ = g.memo().normals.set(lattice.clone());
    Ok(lattice)
}

/// Atoms of the normal lattice.
pub fn minimal_normal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Group>> {
    let l = normal_lattice(g, caps)?;
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    Ok(l.covers(l.trivial())
        .into_iter()
        .map(|i| l.members()[i].clone())
        .collect())
}

/// Coatoms of the normal lattice.
pub fn maximal_normal_subgroups(g: &Group, caps: &Caps) -> Result<Vec<Group>> {
    let l = normal_lattice(g, caps)?;
    if g.is_trivial() {
        return Ok(Vec::new());
    }
    Ok(l.co_covers(l.whole())
        .into_iter()
        .map(|i| l.members()[i].clone())
        .collect())
}

/// Join of the minimal normal subgroups.
pub fn socle(g: &Group, caps: &Caps) -> Result<Group> {
    let l = normal_lattice(g, caps)?;
    Ok(l.members()[socle_above(&l, l.trivial())].clone())
}

/// Preimage of `Soc(G/N)` for the member `n`: join of the members
/// covering `n` (equal to `n` when `n` is the whole group).
pub(crate) fn socle_above(l: &NormalLattice, n: usize) -> usize {
    let covers = l.covers(n);
    l.join_of(std::iter::once(n).chain(covers))
}

/// Intersection of the maximal normal subgroups. For the trivial group this
/// is the trivial group.
pub fn m_intersection(g: &Group, caps: &Caps) -> Result<Group> {
    let l = normal_lattice(g, caps)?;
    if g.is_trivial() {
        return Ok(g.clone());
    }
    Ok(l.members()[l.meet_of(l.co_covers(l.whole()))].clone())
}

/// A factor `top / bottom` with `bottom` normal in `top`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub top: Group,
    pub bottom: Group,
}

impl Section {
    pub fn new(top: Group, bottom: Group) -> Result<Section> {
        if !bottom.is_normal_in(&top) {
            return Err(Error::NotNormal(
                "section bottom is not normal in top".into(),
            ));
        }
        Ok(Section { top, bottom })
    }

    pub fn order(&self) -> u64 {
        self.top.order() / self.bottom.order()
    }
}

/// Which minimal normal subgroup the chief series picks at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiefPick {
    /// Smallest order, then lexicographically least element set.
    Smallest,
    /// Largest order, then lexicographically least element set.
    Largest,
}

#[derive(Clone, Debug)]
pub struct ChiefSeries {
    pub terms: Vec<Group>,
}

impl ChiefSeries {
    pub fn group(&self) -> &Group {
        self.terms.last().expect("nonempty series")
    }

    pub fn factors(&self) -> Vec<Section> {
        self.terms
            .windows(2)
            .map(|w| Section {
                top: w[1].clone(),
                bottom: w[0].clone(),
            })
            .collect()
    }

    pub fn factor_orders(&self) -> Vec<u64> {
        self.factors().iter().map(Section::order).collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn sorted_elements(l: &NormalLattice, i: usize) -> Vec<Permutation> {
    let mut v: Vec<Permutation> = l
        .set(i)
        .ones()
        .map(|e| l.elements().get(e).clone())
        .collect();
    v.sort();
    v
}

fn pick(l: &NormalLattice, candidates: &[usize], how: ChiefPick) -> usize {
    let mut best = candidates[0];
    for &c in &candidates[1..] {
        let by_order = l.members()[c].order().cmp(&l.members()[best].order());
        let by_order = match how {
            ChiefPick::Smallest => by_order,
            ChiefPick::Largest => by_order.reverse(),
        };
        let better = match by_order {
            Ordering::Less => true,
            Ordering::Greater => false,
            Ordering::Equal => sorted_elements(l, c) < sorted_elements(l, best),
        };
        if better {
            best = c;
        }
    }
    best
}

/// Climbs from member `from` to member `to`, one minimal step at a time.
fn climb(l: &NormalLattice, from: usize, to: usize, how: ChiefPick, out: &mut Vec<usize>) {
    let mut current = from;
    while current != to {
        let candidates: Vec<usize> = l
            .covers(current)
            .into_iter()
            .filter(|&c| l.is_below(c, to))
            .collect();
        current = pick(l, &candidates, how);
        out.push(current);
    }
}

/// Chief series built bottom-up with the smallest-order pick.
pub fn chief_series(g: &Group, caps: &Caps) -> Result<Arc<ChiefSeries>> {
    if let Some(c) = g.memo().chief.get() {
        return Ok(c.clone());
    }
    let series = Arc::new(chief_series_with(g, caps, ChiefPick::Smallest)?);
    let _ = g.memo().chief.set(series.clone());
    Ok(series)
}

pub fn chief_series_with(g: &Group, caps: &Caps, how: ChiefPick) -> Result<ChiefSeries> {
    let l = normal_lattice(g, caps)?;
    let mut idx = vec![l.trivial()];
    climb(&l, l.trivial(), l.whole(), how, &mut idx);
    Ok(ChiefSeries {
        terms: idx.into_iter().map(|i| l.members()[i].clone()).collect(),
    })
}

/// Chief series having the normal subgroup `n` as one of its terms.
pub fn chief_series_through(g: &Group, n: &Group, caps: &Caps) -> Result<ChiefSeries> {
    let l = normal_lattice(g, caps)?;
    let mid = l
        .position_of(n, caps)?
        .ok_or_else(|| Error::NotNormal("series term must be normal".into()))?;
    let mut idx = vec![l.trivial()];
    climb(&l, l.trivial(), mid, ChiefPick::Smallest, &mut idx);
    climb(&l, mid, l.whole(), ChiefPick::Smallest, &mut idx);
    Ok(ChiefSeries {
        terms: idx.into_iter().map(|i| l.members()[i].clone()).collect(),
    })
}
