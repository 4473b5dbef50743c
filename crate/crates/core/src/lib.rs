//! Exploiting permutation symmetries of linear programs.
//!
//! For `max cᵗx` subject to `Ax ≤ b, x ≥ 0`, a permutation `g` of the
//! variables is a symmetry when it fixes `c` and maps the inequality system
//! onto itself up to a reordering of rows. Some optimal solution is then
//! constant on every orbit of the symmetry group, so the LP can be replaced
//! by one with a single variable per orbit. This crate
//!
//! * verifies candidate symmetries and detects the full group for small `n`
//!   ([`symmetry`]),
//! * computes orbits, closures and barycenters ([`group`]),
//! * builds the projection, retraction and inclusion maps and the reduced
//!   LP ([`reduction`]),
//! * solves LPs exactly with a two-phase simplex ([`simplex`]),
//! * reads and writes the text formats used by the `symlp` tool ([`io`]).
//!
//! All arithmetic is exact over arbitrary-precision rationals.
//!
//! ```
//! use symlp::instances::lambda0;
//! use symlp::group::{orbits_from_generators, Permutation};
//! use symlp::reduction::reduce;
//! use symlp::simplex::solve;
//!
//! let lp = lambda0();
//! let g = Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap();
//! let orbits = orbits_from_generators(&[g], 4).unwrap();
//! let reduced = reduce(&lp, &orbits).unwrap();
//! assert_eq!(reduced.lp.n(), 2);
//!
//! let y = solve(&reduced.lp).x.unwrap();
//! let x = reduced.lift(&y).unwrap();
//! assert!(lp.is_feasible(&x).unwrap());
//! ```

pub mod error;
pub mod group;
pub mod instances;
pub mod io;
pub mod lp;
pub mod numeric;
pub mod reduction;
pub mod simplex;
pub mod symmetry;
pub mod vertex;

pub use error::{Error, Result};
pub use group::{OrbitPartition, Permutation};
pub use lp::LpProblem;
pub use numeric::{Matrix, Rational};
pub use reduction::{ReducedLp, ReductionMaps};
pub use simplex::{SolveOutcome, SolveStatus};
pub use symmetry::SymmetryReport;
