mod common;

use chowkit::calculus::{transpose, GradedCorrespondence};
use chowkit::motive::{
    compose_motive, dual, motive_of, orbit_compose, split_idempotent, tate_lefschetz, tate_twist,
    tensor, FormalSum, Motive, MotiveMorphism, OrbitMorphism, SumMorphism,
};
use chowkit::{Cycle, Error, Variety};
use common::*;
use proptest::prelude::*;

fn objects() -> Vec<Motive> {
    vec![
        Motive::unit(),
        motive_of(&Variety::projective(1)),
        motive_of(&Variety::projective(2)),
        Motive::lefschetz(),
    ]
}

/// A random morphism `a -> b`: a correspondence of the right degree, sandwiched.
fn morphism(a: &Motive, b: &Motive, c: Cycle) -> MotiveMorphism {
    let raw = GradedCorrespondence::new(a.variety(), b.variety(), c).unwrap();
    let d = b.twist() - a.twist();
    let pure = raw.degree_part(d);
    let s = chowkit::calculus::compose_graded(
        &chowkit::calculus::compose_graded(a.idempotent(), &pure).unwrap(),
        b.idempotent(),
    )
    .unwrap();
    MotiveMorphism::new(a, b, s).unwrap()
}

fn morphism_chain() -> impl Strategy<Value = (MotiveMorphism, MotiveMorphism, MotiveMorphism)> {
    (0..4usize, 0..4usize, 0..4usize, 0..4usize).prop_flat_map(|(i, j, k, l)| {
        let o = objects();
        let (a, b, c, d) = (o[i].clone(), o[j].clone(), o[k].clone(), o[l].clone());
        (
            cycle_on(a.variety().product(b.variety())),
            cycle_on(b.variety().product(c.variety())),
            cycle_on(c.variety().product(d.variety())),
        )
            .prop_map(move |(x, y, z)| (morphism(&a, &b, x), morphism(&b, &c, y), morphism(&c, &d, z)))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn category_laws((f, g, h) in morphism_chain()) {
        let left = compose_motive(&compose_motive(&f, &g).unwrap(), &h).unwrap();
        let right = compose_motive(&f, &compose_motive(&g, &h).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(compose_motive(&f.source().identity(), &f).unwrap(), f.clone());
        prop_assert_eq!(compose_motive(&f, &f.target().identity()).unwrap(), f);
    }

    #[test]
    fn orbit_projection_is_a_functor((f, g, _) in morphism_chain()) {
        prop_assert_eq!(
            OrbitMorphism::project(&compose_motive(&f, &g).unwrap()),
            orbit_compose(&OrbitMorphism::project(&f), &OrbitMorphism::project(&g)).unwrap()
        );
    }

    #[test]
    fn kunneth_projectors_split(n in 1u32..=3, mask in 1u32..8) {
        // Sums of the projectors h1^a h2^(n-a) are idempotent on M(P^n).
        let x = Variety::projective(n);
        let xx = x.square();
        let m = motive_of(&x);
        let terms: Vec<_> = (0..=n).filter(|a| mask & (1 << a) != 0).map(|a| (vec![a, n - a], q(1))).collect();
        let proj = GradedCorrespondence::new(&x, &x, Cycle::from_terms(&xx, terms).unwrap()).unwrap();
        let p = MotiveMorphism::new(&m, &m, proj).unwrap();
        let (img, s, t) = split_idempotent(&m, &p).unwrap();
        prop_assert_eq!(compose_motive(&s, &t).unwrap(), img.identity());
        prop_assert_eq!(compose_motive(&t, &s).unwrap(), p);
    }
}

#[test]
fn duality_and_tensor() {
    for m in objects() {
        assert_eq!(dual(&dual(&m)), m);
        let u = Motive::unit();
        let mu = tensor(&m, &u);
        assert_eq!(mu.twist(), m.twist());
        assert_eq!(mu.idempotent().cycle().num_terms(), m.idempotent().cycle().num_terms());
        assert_eq!(tate_twist(&tate_twist(&m, 2), -2), m);
        assert_eq!(dual(&m).idempotent(), &transpose(m.idempotent()));
    }
    let l = Motive::lefschetz();
    let ld = dual(&l);
    assert_eq!(ld.variety(), l.variety());
    assert_eq!(ld.twist(), 1);
}

#[test]
fn tate_is_lefschetz() {
    let (f, g) = tate_lefschetz().unwrap();
    assert_eq!(compose_motive(&f, &g).unwrap(), Motive::tate().identity());
    assert_eq!(compose_motive(&g, &f).unwrap(), Motive::lefschetz().identity());
}

#[test]
fn non_idempotent_projector_is_rejected() {
    let x = Variety::projective(1);
    let c = Cycle::monomial(&x.square(), vec![1, 0], q(2));
    let r = chowkit::motive::Motive::from_cycle(&x, 0, c);
    assert!(matches!(r, Err(Error::NotIdempotent)));
}

#[test]
fn formal_sums_compose_entrywise() {
    let p1 = Variety::projective(1);
    let m = motive_of(&p1);
    let s = FormalSum::new(vec![m.clone(), Motive::unit()]);
    let id = SumMorphism::identity(&s);
    assert!(id.is_identity());
    assert!(id.compose_then(&id).unwrap().is_identity());
    assert_eq!(s.direct_sum(&s).len(), 4);
}
