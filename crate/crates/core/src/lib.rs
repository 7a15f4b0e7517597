//! Fitting-like functorials on finite permutation groups.
//!
//! Groups are given by generating permutations and carry a stabilizer
//! chain. On top of that sit subgroup and normal-subgroup lattices, chief
//! series, the radicals `F`, `F*`, `F~` and their characterizations,
//! functorial expressions with an axiom checker, and height computations.
//!
//! ```
//! use fitfunc_core::{catalog, radicals, Caps};
//!
//! let s4 = catalog::named("S4");
//! let fs = radicals::f_star(&s4, &Caps::default()).unwrap();
//! assert_eq!(fs.order(), 4);
//! ```

mod caps;
mod chain;
mod error;
mod perm;

pub mod catalog;
pub mod functorial;
pub mod group;
pub mod heights;
pub mod lattice;
pub mod parse;
pub mod radicals;
pub mod suite;

pub use caps::Caps;
pub use error::{Error, Result};
pub use functorial::{Axiom, AxiomReport, Builtin, FunctorialExpr};
pub use group::{DirectProduct, ElementTable, Epimorphism, Group, SubgroupSummary};
pub use lattice::{ChiefSeries, NormalLattice, Section, SubgroupTable};
pub use perm::Permutation;
pub use radicals::Context;
