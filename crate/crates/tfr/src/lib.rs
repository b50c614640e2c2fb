//! Toric face rings from monoidal complexes on regular cell complexes.
//!
//! A *toric face ring* glues a family of affine semigroup rings along the face
//! poset of a finite regular cell complex. The monomials `t^a` are indexed by
//! the colimit of the per-cell semigroups; two monomials multiply to `t^{a+b}`
//! when their degrees share a cell and to zero otherwise. Stanley-Reisner
//! rings (simplicial complexes with free semigroups) and affine semigroup
//! rings (a single maximal cell) are the two classical special cases.
//!
//! Everything here is computed by exact arithmetic: arbitrary-precision
//! integers and rationals for the polyhedral side, exact Gaussian elimination
//! over `Q` or a prime field for the homological side.
//!
//! The main pipeline:
//!
//! * [`cell_topology`] — validated regular cell posets, incidence functions,
//!   and the cellular cochain engine.
//! * [`polyhedral`] — pointed rational cones, face lattices, integer lattices
//!   in Hermite normal form, and semigroup normality checks.
//! * [`monoidal`] — monoidal complexes (cones + semigroups + gluings), the
//!   partial addition on degrees, and importers for simplicial complexes and
//!   fans.
//! * [`presentation`] — monomial arithmetic, graded primes, radicals, and the
//!   presentation ideal of the ring as a quotient of a polynomial ring.
//! * [`squarefree`] — squarefree modules as representations of the face
//!   poset, the complex of face rings quasi-isomorphic to the normalized
//!   dualizing complex, and the duality functor on bounded complexes.
//! * [`cohomology`] — graded local cohomology by the sheaf-theoretic route,
//!   an independent degreewise Čech oracle, and the Cohen-Macaulay /
//!   Buchsbaum / Gorenstein* verdicts with canonical modules.
//! * [`cli_io`] — the JSON input schema, built-in fixtures, and the
//!   subcommand entry points used by the `tfr` binary.
//!
//! All types are immutable after validation and every operation is a pure
//! function, so independent computations may run concurrently.

pub mod cell_topology;
pub mod cli_io;
pub mod cohomology;
pub mod field;
pub mod linalg;
pub mod monoidal;
pub mod polyhedral;
pub mod presentation;
pub mod squarefree;
pub mod zlinalg;

pub use field::{FieldSpec, Scalar};
