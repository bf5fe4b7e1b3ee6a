//! Graded correspondences: composition, transpose, the diagonal, inversion.

use chowkit::calculus::{
    compose_graded, compose_graded_by_parts, invert, transpose, GradedCorrespondence,
};
use chowkit::rational::rat;
use chowkit::{Cycle, Variety};

fn main() -> chowkit::Result<()> {
    let p1 = Variety::projective(1);
    let p2 = Variety::projective(2);

    // Graph-like class P^1 -> P^2 and a class going back.
    let x12 = p1.product(&p2);
    let f = GradedCorrespondence::new(
        &p1,
        &p2,
        &Cycle::monomial(&x12, vec![0, 2], rat(1)) + &Cycle::monomial(&x12, vec![1, 1], rat(2)),
    )?;
    let g = transpose(&f);
    let gf = compose_graded(&f, &g)?;
    println!("f      = {}", f.cycle());
    println!("f^t    = {}", g.cycle());
    println!("f^t o f = {}  (degrees {:?})", gf.cycle(), gf.degrees());
    assert_eq!(gf, compose_graded_by_parts(&f, &g)?);

    let id = GradedCorrespondence::identity(&p2);
    println!("diagonal of P^2 = {}", id.cycle());
    assert_eq!(compose_graded(&f, &id)?, f);

    // Action on classes: f sends the point of P^1 to a line class.
    let pt = Cycle::point_class(&p1);
    println!("f_*(pt) = {}", f.apply(&pt)?);

    // An invertible endomorphism of P^1 and its inverse.
    let q = p1.square();
    let u = GradedCorrespondence::new(
        &p1,
        &p1,
        &(&Cycle::monomial(&q, vec![1, 0], rat(2)) + &Cycle::monomial(&q, vec![0, 1], rat(-3)))
            + &Cycle::monomial(&q, vec![1, 1], rat(5)),
    )?;
    let v = invert(&u)?;
    println!("u = {}, u^-1 = {}", u.cycle(), v.cycle());
    assert_eq!(compose_graded(&u, &v)?, GradedCorrespondence::identity(&p1));
    Ok(())
}
