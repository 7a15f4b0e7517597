//! Deterministic Schreier-Sims.
//!
//! New base points are always the smallest point moved by the residue being
//! inserted, so the chain depends only on the generator order.

use crate::perm::Permutation;

#[derive(Clone)]
struct Level {
    base: usize,
    generators: Vec<Permutation>,
    orbit: Vec<usize>,
    // transversal[p] maps base to p
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base] = Some(Permutation::identity(degree));
        Level {
            base,
            generators: Vec::new(),
            orbit: vec![base],
            transversal,
        }
    }

    fn grow_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let p = self.orbit[i];
            for s in &self.generators {
                let q = s.apply(p);
                if self.transversal[q].is_none() {
                    let t = self.transversal[p].as_ref().unwrap().mul(s);
                    self.transversal[q] = Some(t);
                    self.orbit.push(q);
                }
            }
            i += 1;
        }
    }
}

#[derive(Clone)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize) -> Self {
        StabChain {
            degree,
            levels: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Strips `g` through the levels starting at `from`. Returns the level
    /// where stripping stopped (or `levels.len()`) and the residue.
    fn sift(&self, g: &Permutation, from: usize) -> (usize, Permutation) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = h.apply(level.base);
            match &level.transversal[p] {
                Some(t) => {
                    if p != level.base {
                        h = h.mul(&t.inverse());
                    }
                }
                None => return (i, h),
            }
        }
        (self.levels.len(), h)
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (i, h) = self.sift(g, 0);
        i == self.levels.len() && h.is_identity()
    }

    /// Adds a generator; returns whether the group grew.
    pub fn add_generator(&mut self, g: &Permutation) -> bool {
        let (i, h) = self.sift(g, 0);
        if h.is_identity() {
            return false;
        }
        self.extend(i, h);
        true
    }

    /// Adds `g`, which fixes the first `i` base points, as a strong
    /// generator of levels `0..=i`, then rechecks those levels.
    fn extend(&mut self, i: usize, g: Permutation) {
        if i == self.levels.len() {
            let base = g.first_moved_point().expect("non-identity residue");
            self.levels.push(Level::new(base, self.degree));
        }
        for level in &mut self.levels[..=i] {
            level.generators.push(g.clone());
            level.grow_orbit();
        }
        for j in (0..=i).rev() {
            self.check_level(j);
        }
    }

    /// Schreier generators `t_p * s * t_{p^s}^-1` of level `i` must sift
    /// through the levels below it.
    fn check_level(&mut self, i: usize) {
        let mut k = 0;
        while k < self.levels[i].orbit.len() {
            let p = self.levels[i].orbit[k];
            let mut j = 0;
            while j < self.levels[i].generators.len() {
                let level = &self.levels[i];
                let s = &level.generators[j];
                let q = s.apply(p);
                let schreier = level.transversal[p]
                    .as_ref()
                    .unwrap()
                    .mul(s)
                    .mul(&level.transversal[q].as_ref().unwrap().inverse());
                if !schreier.is_identity() {
                    let (at, residue) = self.sift(&schreier, i + 1);
                    if !residue.is_identity() {
                        self.extend(at, residue);
                    }
                }
                j += 1;
            }
            k += 1;
        }
    }

    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u64)
            .try_fold(1u64, |acc, n| acc.checked_mul(n))
            .expect("group order overflows u64")
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Strong generators, level by level, deduplicated.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    /// Every element exactly once; the identity comes first.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let reps: Vec<&Permutation> = level
                .orbit
                .iter()
                .map(|&p| level.transversal[p].as_ref().unwrap())
                .collect();
            let mut next = Vec::with_capacity(elems.len() * reps.len());
            for e in &elems {
                for t in &reps {
                    next.push(e.mul(t));
                }
            }
            elems = next;
        }
        elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(degree: usize, gens: &[&str]) -> StabChain {
        let mut c = StabChain::new(degree);
        for g in gens {
            c.add_generator(&Permutation::parse(degree, g).unwrap());
        }
        c
    }

    #[test]
    fn symmetric_orders() {
        assert_eq!(chain(3, &["(1 2)", "(1 2 3)"]).order(), 6);
        assert_eq!(chain(5, &["(1 2 3 4 5)", "(1 2)"]).order(), 120);
        assert_eq!(chain(7, &["(1 2 3 4 5 6 7)", "(1 2)"]).order(), 5040);
    }

    #[test]
    fn base_is_smallest_moved_point() {
        let c = chain(5, &["(3 4 5)", "(1 2 3 4 5)"]);
        assert_eq!(c.base()[0], 2);
        assert_eq!(c.order(), 60);
    }

    #[test]
    fn elements_are_distinct_and_identity_first() {
        let c = chain(5, &["(1 2 3 4 5)", "(3 4 5)"]);
        let elems = c.elements();
        assert!(elems[0].is_identity());
        let set: std::collections::HashSet<_> = elems.iter().cloned().collect();
        assert_eq!(set.len(), 60);
        assert!(elems.iter().all(|e| c.contains(e)));
        assert!(!c.contains(&Permutation::parse(5, "(1 2)").unwrap()));
    }
}
