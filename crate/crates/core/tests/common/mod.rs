#![allow(dead_code)]

use chowkit::calculus::GradedCorrespondence;
use chowkit::classes::{line_bundle, BundleClass};
use chowkit::kshadow::{KClass, KKernel};
use chowkit::{Cycle, Rational, Variety};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn variety(max_factors: usize, max_n: u32) -> impl Strategy<Value = Variety> {
    prop::collection::vec(1..=max_n, 1..=max_factors).prop_map(Variety::new)
}

/// Cycles with integer coefficients in [-5, 5] on a fixed variety.
pub fn cycle_on(x: Variety) -> impl Strategy<Value = Cycle> {
    let basis = x.basis();
    prop::collection::vec(prop::option::weighted(0.5, -5i64..=5), basis.len()).prop_map(
        move |coeffs| {
            let terms: Vec<_> = basis
                .iter()
                .zip(coeffs)
                .filter_map(|(e, c)| c.map(|c| (e.clone(), q(c))))
                .collect();
            Cycle::from_terms(&x, terms).unwrap()
        },
    )
}

pub fn cycles_on(x: Variety, count: usize) -> impl Strategy<Value = Vec<Cycle>> {
    prop::collection::vec(cycle_on(x), count)
}

pub fn correspondence(x: Variety, y: Variety) -> impl Strategy<Value = GradedCorrespondence> {
    cycle_on(x.product(&y)).prop_map(move |c| GradedCorrespondence::new(&x, &y, c).unwrap())
}

pub fn kernel(x: Variety, y: Variety) -> impl Strategy<Value = KKernel> {
    cycle_on(x.product(&y)).prop_map(move |c| KKernel::new(&x, &y, KClass::from_ch(c)).unwrap())
}

/// P^1, P^1 x P^1, P^2.
pub fn small_space() -> impl Strategy<Value = Variety> {
    prop_oneof![
        Just(Variety::projective(1)),
        Just(Variety::new(vec![1, 1])),
        Just(Variety::projective(2)),
    ]
}

/// A sum of one to three line bundles with degrees in [-3, 3].
pub fn split_bundle(x: Variety) -> impl Strategy<Value = BundleClass> {
    let k = x.num_factors();
    prop::collection::vec(prop::collection::vec(-3i64..=3, k), 1..=3).prop_map(move |degs| {
        degs.iter()
            .map(|d| line_bundle(&x, d).unwrap())
            .reduce(|a, b| a.direct_sum(&b).unwrap())
            .unwrap()
    })
}
