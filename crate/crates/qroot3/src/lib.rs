//! Exact computer algebra for a dual pair of 27-dimensional quantum groups
//! at a cube root of unity and the geometry they generate on the algebra of
//! 3×3 matrices ("the reduced quantum plane").
//!
//! Everything here is computed over the exact field ℚ(q) with q² = −1 − q
//! (so q³ = 1); there is no floating point anywhere in the crate. The main
//! objects are:
//!
//! * [`scalar`] — the scalar fields: ℚ(q), the ordered real field ℚ(√3) and
//!   the complex field ℚ(√3)(i) used for hermitian signature computations.
//! * [`linalg`] — dense exact linear algebra (rank, kernel, solve, inverse,
//!   characteristic polynomial) generic over those fields.
//! * [`hopf`] — structure-constant containers for finite-dimensional
//!   (Hopf) algebras and exhaustive axiom checkers for algebras, Hopf
//!   algebras, module algebras and comodule algebras.
//! * [`qplane`] — the 9-dimensional algebra `M` generated by `x, y` with
//!   `xy = q·yx`, `x³ = y³ = 1`, isomorphic to 3×3 matrices: products,
//!   the matrix isomorphism, a Gell-Mann basis, the star operation,
//!   closed-form inverses and the triadic exponential series.
//! * [`fun_f`] — the 27-dimensional quantum group `F` (quotient of the
//!   q-deformed function algebra of SL(2)): Hopf structure, star, its two
//!   coactions on `M`, a faithful matrix representation over a nilpotent
//!   commutative ring, and the Gell-Mann matrices with entries in `F`.
//! * [`env_h`] — the dual 27-dimensional quantum group `H` (quotient of the
//!   q-deformed enveloping algebra of sl(2)): Hopf structure, the duality
//!   pairing with `F`, the Casimir element, actions on `F` and on `M`, the
//!   star operation, and a faithful block realization by a 3×3 block plus a
//!   3×3 block over a Grassmann algebra.
//! * [`repmod`] — representation theory of `H`: the catalogue of
//!   indecomposable representations, invariant hermitian metrics and their
//!   exact signatures, radicals, submodules, tensor-product decomposition,
//!   and the invariant scalar product on `M` of signature (5,4).
//! * [`wz_forms`] — the reduced Wess–Zumino differential calculus over `M`
//!   (dimensions 9/18/9), the differential, the `H`-action on forms,
//!   cohomology, the star on forms, and representation product tables.
//! * [`gauge`] — noncommutative connections on `M`: curvature, gauge
//!   transformations, a parametrized family of covariant connections and
//!   the classification of their curvatures, with symbolic coefficients.
//! * [`diffops`] — the 81-dimensional algebra of differential operators on
//!   `M`: twisted partial derivatives, twisting homomorphisms, scaling
//!   operators, and the realization of the `H`-generators as differential
//!   operators.
//! * [`rmatrix`] — the universal R-matrix of `H`: quasi-triangularity, the
//!   Yang–Baxter equation, and the fundamental R̂ with its spectral
//!   projectors recovering the quantum-plane and dual-plane relations.
//! * [`expr`] / [`cli`] — a small expression parser/printer and the
//!   `qroot3` command-line front end (`eval`, `table`, `verify`, `export`).
//!
//! The `examples/` directory of this crate is the guided tour: one runnable
//! example per capability listed above.

pub mod scalar;
pub mod linalg;
pub mod report;
pub mod hopf;
pub mod qplane;
pub mod fun_f;
pub mod env_h;
pub mod repmod;
pub mod wz_forms;
pub mod poly;
pub mod gauge;
pub mod diffops;
pub mod rmatrix;
pub mod json;
pub mod expr;
pub mod cli;

pub use linalg::Mat;
pub use report::Report;
pub use scalar::Scalar;
