//! Seeded generators for cycles, bundles, kernels and invertible
//! correspondences. Every generator is deterministic in its seed.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::calculus::{invert, GradedCorrespondence};
use crate::classes::{line_bundle, BundleClass};
use crate::error::Result;
use crate::kshadow::{KClass, KKernel};
use crate::rational::{rat, Rational};
use crate::ring::{Cycle, Variety};

pub type Rng64 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A product of at most `max_factors` projective spaces, each of dimension
/// `1..=max_n`, with total dimension at most `max_dim`.
pub fn variety(rng: &mut Rng64, max_factors: usize, max_n: u32, max_dim: u32) -> Variety {
    let k = rng.gen_range(1..=max_factors);
    let mut factors = Vec::with_capacity(k);
    let mut left = max_dim;
    for _ in 0..k {
        if left == 0 {
            break;
        }
        let n = rng.gen_range(1..=max_n.min(left));
        left -= n;
        factors.push(n);
    }
    Variety::new(factors)
}

pub fn small_coeff(rng: &mut Rng64) -> Rational {
    rat(rng.gen_range(-5..=5))
}

pub fn nonzero_coeff(rng: &mut Rng64) -> Rational {
    let v: i64 = *[-3, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
    rat(v)
}

/// Each basis monomial appears with probability one half, with an integer
/// coefficient in `[-5, 5]`.
pub fn cycle(rng: &mut Rng64, x: &Variety) -> Cycle {
    let terms: Vec<_> = x
        .basis()
        .into_iter()
        .filter_map(|e| rng.gen_bool(0.5).then(|| (e, small_coeff(rng))))
        .collect();
    Cycle::from_terms(x, terms).expect("basis monomials")
}

/// A random cycle with constant term 1.
pub fn unit_cycle(rng: &mut Rng64, x: &Variety) -> Cycle {
    let c = cycle(rng, x);
    &(&c - &Cycle::constant(x, c.constant_term())) + &Cycle::one(x)
}

pub fn correspondence(rng: &mut Rng64, x: &Variety, y: &Variety) -> GradedCorrespondence {
    GradedCorrespondence::new(x, y, cycle(rng, &x.product(y))).expect("matching variety")
}

pub fn kernel(rng: &mut Rng64, x: &Variety, y: &Variety) -> KKernel {
    KKernel::new(x, y, KClass::from_ch(cycle(rng, &x.product(y)))).expect("matching variety")
}

/// A direct sum of `1..=3` line bundles with degrees in `[-3, 3]`.
pub fn split_bundle(rng: &mut Rng64, x: &Variety) -> BundleClass {
    let count = rng.gen_range(1..=3);
    let mut e: Option<BundleClass> = None;
    for _ in 0..count {
        let degs: Vec<i64> = (0..x.num_factors()).map(|_| rng.gen_range(-3..=3)).collect();
        let l = line_bundle(x, &degs).expect("degree count matches");
        e = Some(match e {
            None => l,
            Some(acc) => acc.direct_sum(&l).expect("same variety"),
        });
    }
    e.expect("at least one summand")
}

/// `sum_a c_a pi_a` with `pi_a = h_1^a h_2^{n-a}` and every `c_a` nonzero:
/// an invertible degree-zero correspondence on `P^n`.
pub fn diagonal_unit(rng: &mut Rng64, n: u32) -> GradedCorrespondence {
    let p = Variety::projective(n);
    let q = p.square();
    let terms: Vec<_> = (0..=n).map(|a| (vec![a, n - a], nonzero_coeff(rng))).collect();
    GradedCorrespondence::new(&p, &p, Cycle::from_terms(&q, terms).expect("in range"))
        .expect("matching variety")
}

/// A random correspondence on `P^n` whose components all have degree of the
/// given sign (`positive = true`: degree > 0, otherwise degree < 0).
pub fn signed_degree_part(rng: &mut Rng64, n: u32, positive: bool) -> GradedCorrespondence {
    let p = Variety::projective(n);
    let q = p.square();
    let eligible: Vec<Vec<u32>> = q
        .basis()
        .into_iter()
        .filter(|e| {
            let c = e[0] + e[1];
            if positive {
                c > n
            } else {
                c < n
            }
        })
        .collect();
    loop {
        let terms: Vec<_> = eligible
            .iter()
            .filter_map(|e| rng.gen_bool(0.6).then(|| (e.clone(), nonzero_coeff(rng))))
            .collect();
        if !terms.is_empty() {
            let c = Cycle::from_terms(&q, terms).expect("in range");
            return GradedCorrespondence::new(&p, &p, c).expect("matching variety");
        }
    }
}

/// An invertible `f = u + m` on `P^n` and its inverse, where `u` is a
/// degree-zero unit and `m` has only positive-degree components.
pub fn unipotent_pair(rng: &mut Rng64, n: u32) -> (GradedCorrespondence, GradedCorrespondence) {
    let u = diagonal_unit(rng, n);
    let m = signed_degree_part(rng, n, true);
    let f = u.try_add(&m).expect("parallel");
    let g = invert(&f).expect("unit plus nilpotent is invertible");
    (f, g)
}

/// An invertible `f = u + m` whose perturbation `m` has negative degree.
/// Samples that happen to be singular are redrawn.
pub fn negative_pair(rng: &mut Rng64, n: u32) -> (GradedCorrespondence, GradedCorrespondence) {
    loop {
        let u = diagonal_unit(rng, n);
        let m = signed_degree_part(rng, n, false);
        let f = u.try_add(&m).expect("parallel");
        let inv: Result<_> = invert(&f);
        if let Ok(g) = inv {
            return (f, g);
        }
    }
}
