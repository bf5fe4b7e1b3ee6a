//! Chow motives with rational coefficients and the categorical layer on top.

mod additive;
mod chow;
mod orbit;
mod pipeline;

pub use additive::{FormalSum, SumMorphism};
pub use chow::{
    compose_motive, dual, lefschetz_decomposition, motive_of, split_idempotent, tate_lefschetz,
    tate_twist, tensor, LefschetzDecomposition, Motive, MotiveMorphism,
};
pub use orbit::{degree_zero_rigidify, orbit_compose, OrbitMorphism};
pub use pipeline::{
    compatibility_check, compatibility_check_with, nc_compose, nc_hom, orlov_pipeline,
    sqrt_todd_by_factors, OrlovReport, OrlovVerdict,
};
