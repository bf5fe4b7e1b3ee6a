//! Kernel pairs through the motive pipeline: exact isomorphism or Tate twist only.

use chowkit::calculus::{compose_graded, invert, GradedCorrespondence};
use chowkit::classes::line_bundle;
use chowkit::kshadow::{identity_kernel, mu, KClass, KKernel};
use chowkit::motive::{orlov_pipeline, OrlovVerdict};
use chowkit::rational::rat;
use chowkit::{Cycle, Variety};

fn verdict(v: &OrlovVerdict) -> &'static str {
    match v {
        OrlovVerdict::NotEquivalent => "not equivalent",
        OrlovVerdict::TateTwistOnly => "isomorphic modulo Tate twist",
        OrlovVerdict::ChowIsomorphism { .. } => "isomorphic Chow motives",
    }
}

fn main() -> chowkit::Result<()> {
    let p1 = Variety::projective(1);
    let q = p1.square();
    for d in -2..=2 {
        let twist = KClass::from_bundle(&line_bundle(&q, &[d, 0])?);
        let e = identity_kernel(&p1).twisted_by(&twist)?;
        let f = KKernel::from_correspondence(&invert(&mu(&e))?);
        let report = orlov_pipeline(&e, &f)?;
        println!("O({d:>2},0): mu(E) = {:<16} -> {}", report.forward.cycle().to_string(), verdict(&report.verdict));
    }

    // Mixing in 1 + h1 h2 adds components of degree -1 and +1.
    let twist = KClass::from_bundle(&line_bundle(&q, &[1, 0])?);
    let e = identity_kernel(&p1).twisted_by(&twist)?;
    let sigma = GradedCorrespondence::new(&p1, &p1, &Cycle::one(&q) + &Cycle::monomial(&q, vec![1, 1], rat(1)))?;
    let shifted = compose_graded(&mu(&e), &sigma)?;
    let e2 = KKernel::from_correspondence(&shifted);
    let f2 = KKernel::from_correspondence(&invert(&shifted)?);
    let report = orlov_pipeline(&e2, &f2)?;
    println!("shifted:   mu(E) = {} -> {}", report.forward.cycle(), verdict(&report.verdict));
    Ok(())
}
