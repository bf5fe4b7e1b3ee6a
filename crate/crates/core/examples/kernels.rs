//! K-theoretic kernels, their composition, and the identity kernel.

use chowkit::calculus::compose_graded;
use chowkit::classes::line_bundle;
use chowkit::kshadow::{identity_kernel, k_compose, mu, KClass};
use chowkit::motive::compatibility_check;
use chowkit::Variety;

fn main() -> chowkit::Result<()> {
    let p1 = Variety::projective(1);
    let p2 = Variety::projective(2);
    for x in [&p1, &p2] {
        let id = identity_kernel(x);
        println!("ch(O_Delta) on {x} x {x} = {}", id.ch());
        println!("mu(O_Delta)              = {}", mu(&id).cycle());
    }

    // Twisting the diagonal by O(1, 0) and composing with itself.
    let twist = KClass::from_bundle(&line_bundle(&p1.square(), &[1, 0])?);
    let e = identity_kernel(&p1).twisted_by(&twist)?;
    let ee = k_compose(&e, &e)?;
    println!("E   = {}", e.ch());
    println!("E*E = {}", ee.ch());
    assert_eq!(mu(&ee), compose_graded(&mu(&e), &mu(&e))?);
    assert_eq!(k_compose(&identity_kernel(&p1), &e)?, e);
    println!("compatibility: {}", compatibility_check(&e));
    Ok(())
}
