//! Permutations of `{1..n}` in array form.
//!
//! Points are stored 0-based; everything user-facing (cycle notation,
//! `apply` in docs) is 1-based. Products act left to right:
//! `point^(pq) = (point^p)^q`.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u32]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection of 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from 1-based disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..{degree}"
                    )));
                }
                if used[p - 1] {
                    return Err(Error::InvalidPermutation(format!("point {p} repeated")));
                }
                used[p - 1] = true;
            }
            for (i, &p) in cycle.iter().enumerate() {
                let q = cycle[(i + 1) % cycle.len()];
                images[p - 1] = (q - 1) as u32;
            }
        }
        Ok(Permutation {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses cycle notation such as `(1 2 3)(4 5)` or `()`; commas are
    /// accepted as separators. Products of non-disjoint cycles are not.
    pub fn parse(degree: usize, text: &str) -> Result<Self> {
        let cycles = parse_cycles(text).map_err(|(col, msg)| Error::parse(1, col, msg))?;
        Permutation::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Left-to-right product: `(self * other)(i) = other(self(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.mul(other))
    }

    /// Unchecked version of [`compose`](Self::compose); panics on degree mismatch.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    /// `x^-1 * self * x`.
    pub fn conjugate(&self, x: &Permutation) -> Self {
        let mut out = vec![0u32; self.degree()];
        // (p^x)(i^x) = (p(i))^x
        for (i, &p) in self.images.iter().enumerate() {
            out[x.images[i] as usize] = x.images[p as usize];
        }
        Permutation {
            images: out.into_boxed_slice(),
        }
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Permutation, b: &Permutation) -> Self {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Smallest 0-based point moved by `self`.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Relabels points: the result maps `relabel(i)` to `relabel(self(i))`.
    pub fn relabel(&self, relabel: &Permutation) -> Self {
        self.conjugate(relabel)
    }

    /// Extends to a larger degree by fixing the new points, after shifting
    /// every point by `offset`.
    pub fn embed(&self, offset: usize, degree: usize) -> Self {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = (offset as u32) + x;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }

    /// Restricts to the block `offset..offset + len`, which must be invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Self {
        let images: Vec<u32> = (offset..offset + len)
            .map(|i| {
                let x = self.apply(i);
                debug_assert!((offset..offset + len).contains(&x));
                (x - offset) as u32
            })
            .collect();
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Parses `(1 2 3)(4 5)`; returns 1-based cycles or `(column, message)`.
pub(crate) fn parse_cycles(text: &str) -> std::result::Result<Vec<Vec<usize>>, (usize, String)> {
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let mut chars = text.char_indices().peekable();
    while let Some((i, c)) = chars.next() {
        let col = i + 1;
        match c {
            '(' => {
                if current.is_some() {
                    return Err((col, "nested '('".into()));
                }
                current = Some(Vec::new());
            }
            ')' => match current.take() {
                Some(cycle) => {
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                None => return Err((col, "unmatched ')'".into())),
            },
            ' ' | '\t' | ',' => {}
            d if d.is_ascii_digit() => {
                let Some(cycle) = current.as_mut() else {
                    return Err((col, "point outside of a cycle".into()));
                };
                let mut value = d.to_digit(10).unwrap() as usize;
                while let Some(&(_, d)) = chars.peek() {
                    let Some(digit) = d.to_digit(10) else { break };
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(digit as usize))
                        .ok_or((col, "point too large".to_string()))?;
                    chars.next();
                }
                if value == 0 {
                    return Err((col, "points are 1-based".into()));
                }
                if cycle.contains(&value) || cycles.iter().any(|c: &Vec<usize>| c.contains(&value))
                {
                    return Err((col, format!("repeated point {value}")));
                }
                cycle.push(value);
            }
            other => return Err((col, format!("unexpected character {other:?}"))),
        }
    }
    if current.is_some() {
        return Err((text.len() + 1, "unterminated cycle".into()));
    }
    Ok(cycles)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
