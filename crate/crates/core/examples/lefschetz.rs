//! The motive of P^1 splits as 1 + L.

use chowkit::motive::{
    compose_motive, lefschetz_decomposition, motive_of, split_idempotent, tate_lefschetz, Motive,
};
use chowkit::Variety;

fn main() -> chowkit::Result<()> {
    let mp1 = motive_of(&Variety::projective(1));
    let d = lefschetz_decomposition()?;
    println!("M(P^1) = {mp1}");
    println!("alpha  = {}", d.alpha.corr().cycle());
    println!("beta   = {}", d.beta.corr().cycle());
    println!("alpha o beta = {}", compose_motive(&d.beta, &d.alpha)?.corr().cycle());

    let (img, s, t) = split_idempotent(&mp1, &d.beta)?;
    println!("image(beta) = {img}  (L = {})", Motive::lefschetz());
    println!("section     = {}", s.corr().cycle());
    println!("retraction  = {}", t.corr().cycle());

    println!(
        "split then merge is the identity: {}",
        d.split.compose_then(&d.merge)?.is_identity()
    );
    let (f, g) = tate_lefschetz()?;
    println!("T = {} is isomorphic to L: {}", Motive::tate(), compose_motive(&f, &g)? == Motive::tate().identity());
    Ok(())
}
