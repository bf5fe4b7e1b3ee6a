//! Orbit-category morphisms and rigidification to degree zero.

use chowkit::motive::{degree_zero_rigidify, motive_of, orbit_compose, OrbitMorphism};
use chowkit::random;
use chowkit::Variety;

fn main() -> chowkit::Result<()> {
    let mut rng = random::rng(2024);
    let m = motive_of(&Variety::projective(2));

    let (f, g) = random::unipotent_pair(&mut rng, 2);
    let of = OrbitMorphism::from_graded(&m, &m, &f)?;
    let og = OrbitMorphism::from_graded(&m, &m, &g)?;
    for (i, c) in of.components() {
        println!("f[{i}] = {}", c.cycle());
    }
    println!("g o f = identity: {}", orbit_compose(&of, &og)? == OrbitMorphism::identity(&m));
    let (f0, g0) = degree_zero_rigidify(&of, &og)?;
    println!("f0 = {}", f0.corr().cycle());
    println!("g0 = {}", g0.corr().cycle());

    // A perturbation with a negative-index component violates the support condition.
    let (f, g) = random::negative_pair(&mut rng, 2);
    let of = OrbitMorphism::from_graded(&m, &m, &f)?;
    let og = OrbitMorphism::from_graded(&m, &m, &g)?;
    println!("negative control: {}", degree_zero_rigidify(&of, &og).unwrap_err());
    Ok(())
}
