//! Exact intersection theory on products of projective spaces.
//!
//! The crate computes in the rational Chow rings
//! `Q[h_1..h_k] / (h_i^{n_i + 1})` of `P^{n_1} x ... x P^{n_k}` and builds on
//! them:
//!
//! * [`ring`]: varieties, cycles, intersection product, degree;
//! * [`calculus`]: pullback and pushforward along projections, diagonals,
//!   transpose, composition of (graded) correspondences;
//! * [`classes`]: Chern character, Todd class, `sqrt(td)`, tangent classes;
//! * [`kshadow`]: K-classes via the Chern character, Riemann-Roch, kernels and
//!   the functor `mu`;
//! * [`motive`]: Chow motives, the Karoubi envelope, the orbit category modulo
//!   Tate twists and the derived-equivalence pipeline;
//! * [`cli`]: the command-line front end and the `verify` suite.
//!
//! All arithmetic is exact.

pub mod calculus;
pub mod classes;
pub mod cli;
pub mod error;
pub mod json;
pub mod kshadow;
pub mod linalg;
pub mod motive;
pub mod random;
pub mod rational;
pub mod ring;
pub mod series;
pub mod verify;

pub use calculus::{
    cartesian, compose_graded, compose_homogeneous, diagonal_class, diagonal_pushforward,
    pullback, pushforward, transpose, FactorSelection, GradedCorrespondence,
};
pub use classes::{
    chern_character, line_bundle, power_sums, series_inverse, sqrt_todd, tangent_class,
    todd_class, BundleClass, PowerSumVector,
};
pub use error::{Error, Result};
pub use kshadow::{
    euler_characteristic, identity_kernel, k_compose, mu, support_codim_floor, KClass, KKernel,
};
pub use rational::Rational;
pub use ring::{cycle_add, cycle_scale, degree, graded_component, intersect, make_variety, Cycle, Variety};
