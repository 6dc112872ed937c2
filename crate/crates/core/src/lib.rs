//! Numerical machinery for the d-bar equation and the Koszul contraction
//! calculus on model domains (unit disc in C, polydiscs in C^2).
//!
//! The crate is organised around a handful of interlocking pieces:
//!
//! - [`grid`]: tensor-grid discretisations of the disc and the bidisc with
//!   quadrature weights, boundary distance, and smooth cutoff functions.
//! - [`forms`]: exterior-algebra valued (0,s)-forms on the grid, the wedge
//!   product, the Koszul contraction against a holomorphic map, and the
//!   discrete Wirtinger d-bar operator.
//! - [`holomap`]: closed-form holomorphic map presets with Jacobian data and
//!   fiber solvers.
//! - [`dbar`]: sup-norm controlled solvers for `dbar u = w` (Cauchy-Pompeiu
//!   transform in one variable, slice-wise solvers for compactly supported
//!   data in two variables), with self-certified residuals.
//! - [`koszul`]: section builders, lifting, the descending induction solving
//!   `T_f dbar Y = W`, and the corona-type division `sum f_j g_j = 1`.
//! - [`approx`]: the approximation pipeline producing elements of
//!   `H^inf(Omega)[conj f_1, ..., conj f_m]` within `2*eps` of a target that
//!   vanishes on the boundary and the degenerate set of `f`.
//! - [`bergman`]: truncated Toeplitz operators in the orthonormal monomial
//!   basis of the Bergman space, commutator experiments, and least-squares
//!   density curves.
//!
//! Everything is deterministic: all randomness is seeded explicitly and all
//! floating-point reductions are sequential.

pub mod approx;
pub mod bergman;
pub mod dbar;
pub mod error;
pub mod field;
pub mod forms;
pub mod grid;
pub mod holomap;
pub mod koszul;
pub mod profile;
pub mod report;
pub mod testforms;

pub use error::{CoreError, Result};
pub use field::Field;
pub use grid::{CutOff, GridDomain};
pub use holomap::HoloMap;

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;
