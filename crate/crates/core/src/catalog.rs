//! Curated catalog of small permutation groups.

use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{direct_product_of, Group};
use crate::perm::Permutation;

/// How a catalog group is built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Construction {
    File(PathBuf),
    Cyclic(usize),
    /// Dihedral group of the given order `2n`, acting on `n` points.
    Dihedral(usize),
    Symmetric(usize),
    Alternating(usize),
    Quaternion8,
    /// `SL(2, p)` acting on the nonzero vectors of `F_p^2`.
    SpecialLinear2(usize),
    DirectProduct(Vec<Construction>),
    /// Imprimitive wreath product `base wr top`, `top` acting on blocks.
    WreathSmall(Box<Construction>, Box<Construction>),
}

impl Construction {
    pub fn build(&self) -> Result<Group> {
        match self {
            Construction::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Invalid(format!("cannot read {}: {e}", path.display())))?;
                crate::parse::parse_group_file(&text)
            }
            Construction::Cyclic(n) => {
                let n = *n;
                if n == 1 {
                    return Ok(Group::trivial(1));
                }
                group(n, &[cycle(n, 1..=n)])
            }
            Construction::Dihedral(order) => {
                if order % 2 != 0 || *order < 6 {
                    return Err(Error::Invalid(format!("dihedral order {order}")));
                }
                let n = order / 2;
                let rotation = cycle(n, 1..=n);
                let pairs: Vec<Vec<usize>> = (1..=n / 2).map(|i| vec![i, n + 1 - i]).collect();
                let reflection = Permutation::from_cycles(n, &pairs)?;
                group(n, &[rotation, reflection])
            }
            Construction::Symmetric(n) => {
                let n = *n;
                match n {
                    1 => Ok(Group::trivial(1)),
                    2 => group(2, &[cycle(2, 1..=2)]),
                    _ => group(n, &[cycle(n, 1..=n), cycle(n, 1..=2)]),
                }
            }
            Construction::Alternating(n) => {
                let n = *n;
                if n < 3 {
                    return Ok(Group::trivial(n.max(1)));
                }
                let gens: Vec<Permutation> = (3..=n).map(|k| cycle(n, [1, 2, k])).collect();
                group(n, &gens)
            }
            Construction::Quaternion8 => group(
                8,
                &[
                    Permutation::parse(8, "(1 2 3 4)(5 6 7 8)")?,
                    Permutation::parse(8, "(1 5 3 7)(2 8 4 6)")?,
                ],
            ),
            Construction::SpecialLinear2(p) => special_linear_2(*p),
            Construction::DirectProduct(parts) => {
                let factors = parts
                    .iter()
                    .map(Construction::build)
                    .collect::<Result<Vec<_>>>()?;
                Ok(direct_product_of(&factors).group)
            }
            Construction::WreathSmall(base, top) => wreath(&base.build()?, &top.build()?),
        }
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

fn group(degree: usize, gens: &[Permutation]) -> Result<Group> {
    Group::new(degree, gens.to_vec())
}

fn special_linear_2(p: usize) -> Result<Group> {
    if !crate::radicals::is_prime(p as u64) {
        return Err(Error::Invalid(format!("SL(2, {p}) needs a prime field")));
    }
    // nonzero row vectors (a, b) -> a*p + b - 1
    let degree = p * p - 1;
    let act = |m: [[usize; 2]; 2]| -> Permutation {
        let images = (1..p * p)
            .map(|v| {
                let (a, b) = (v / p, v % p);
                let x = (a * m[0][0] + b * m[1][0]) % p;
                let y = (a * m[0][1] + b * m[1][1]) % p;
                (x * p + y - 1) as u32
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrix")
    };
    group(degree, &[act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

fn wreath(base: &Group, top: &Group) -> Result<Group> {
    let d = base.degree();
    let k = top.degree();
    let degree = d * k;
    let mut gens: Vec<Permutation> = base
        .generators()
        .iter()
        .map(|g| g.embed(0, degree))
        .collect();
    for t in top.generators() {
        let images = (0..degree)
            .map(|x| (t.apply(x / d) * d + x % d) as u32)
            .collect();
        gens.push(Permutation::from_images(images)?);
    }
    Group::new(degree, gens)
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub construction: Construction,
    pub order: u64,
    /// Constructed as a direct product; the factors are recorded.
    pub factors: Vec<String>,
}

impl CatalogEntry {
    /// Builds the group and asserts the advertised order.
    pub fn build(&self) -> Result<Group> {
        let g = self.construction.build()?;
        if g.order() != self.order {
            return Err(Error::Invalid(format!(
                "catalog entry {} has order {}, expected {}",
                self.name,
                g.order(),
                self.order
            )));
        }
        Ok(g)
    }

    /// Factor groups, when the entry is a direct product.
    pub fn factor_groups(&self) -> Result<Vec<Group>> {
        match &self.construction {
            Construction::DirectProduct(parts) => parts.iter().map(Construction::build).collect(),
            _ => Ok(Vec::new()),
        }
    }
}

fn basic(name: &str) -> Construction {
    use Construction::*;
    match name {
        "Q8" => return Quaternion8,
        "SL(2,3)" => return SpecialLinear2(3),
        "SL(2,5)" => return SpecialLinear2(5),
        _ => {}
    }
    let (head, tail) = name.split_at(1);
    let n = tail
        .parse()
        .unwrap_or_else(|_| panic!("unknown basic group {name}"));
    match head {
        "C" => Cyclic(n),
        "D" => Dihedral(n),
        "S" => Symmetric(n),
        "A" => Alternating(n),
        _ => panic!("unknown basic group {name}"),
    }
}

const ENTRIES: &[(&str, u64)] = &[
    ("C1", 1),
    ("C2", 2),
    ("C3", 3),
    ("C4", 4),
    ("C5", 5),
    ("C6", 6),
    ("C8", 8),
    ("C12", 12),
    ("C2xC2", 4),
    ("C2xC4", 8),
    ("C2xC2xC2", 8),
    ("C3xC3", 9),
    ("C4xC4", 16),
    ("C2xC8", 16),
    ("C8xC8", 64),
    ("C2xC4xC8", 64),
    ("D8", 8),
    ("D10", 10),
    ("D12", 12),
    ("D16", 16),
    ("Q8", 8),
    ("SL(2,3)", 24),
    ("SL(2,5)", 120),
    ("S3", 6),
    ("S4", 24),
    ("S5", 120),
    ("S6", 720),
    ("A4", 12),
    ("A5", 60),
    ("A6", 360),
    ("S3xC2", 12),
    ("S3xC3", 18),
    ("S3xS3", 36),
    ("S3xA5", 360),
    ("C2xA5", 120),
    ("C3xA5", 180),
    ("A4xC2", 24),
    ("Q8xC3", 24),
    ("S4xC2", 48),
    ("D8xS3", 48),
    ("Q8xS3", 48),
    ("A4xS3", 72),
    ("SL(2,3)xC2", 48),
    ("C3wrC2", 18),
    ("C2wrC3", 24),
    ("C2wrS3", 48),
];

/// The shipped catalog, in a fixed order.
pub fn catalog() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(name, order)| {
            let (construction, factors) = if let Some((b, t)) = name.split_once("wr") {
                (
                    Construction::WreathSmall(Box::new(basic(b)), Box::new(basic(t))),
                    Vec::new(),
                )
            } else if name.contains('x') {
                let parts: Vec<&str> = name.split('x').collect();
                (
                    Construction::DirectProduct(parts.iter().map(|p| basic(p)).collect()),
                    parts.iter().map(|p| p.to_string()).collect(),
                )
            } else {
                (basic(name), Vec::new())
            };
            CatalogEntry {
                name: name.to_string(),
                construction,
                order,
                factors,
            }
        })
        .collect()
}

pub fn find(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

/// Builds a catalog group by name; panics on unknown names. Meant for tests.
pub fn named(name: &str) -> Group {
    find(name)
        .unwrap_or_else(|| panic!("no catalog entry {name}"))
        .build()
        .unwrap()
}
