//! Hirzebruch-Riemann-Roch: chi(O(d)) on P^n and on P^1 x P^1, and GRR along a projection.

use chowkit::calculus::{pushforward, FactorSelection};
use chowkit::classes::{line_bundle, todd_of_variety};
use chowkit::kshadow::{euler_characteristic, pushforward_class, KClass};
use chowkit::Variety;

fn main() -> chowkit::Result<()> {
    println!("chi(P^n, O(d)):");
    for n in 1..=4 {
        let p = Variety::projective(n);
        let row: Vec<String> = (-4..=4)
            .map(|d| {
                let e = KClass::from_bundle(&line_bundle(&p, &[d]).expect("one factor"));
                format!("{:>4}", euler_characteristic(&e).to_string())
            })
            .collect();
        println!("  n = {n}: {}", row.join(""));
    }

    let q = Variety::new(vec![1, 1]);
    let e = KClass::from_bundle(&line_bundle(&q, &[2, -3])?);
    println!("chi(P^1 x P^1, O(2, -3)) = {}", euler_characteristic(&e));

    // GRR for the first projection P^1 x P^1 -> P^1.
    let p1 = Variety::projective(1);
    let p = FactorSelection::first(&p1, &p1);
    let lhs = pushforward(&p, &(e.ch() * &todd_of_variety(&q)))?;
    let pushed = pushforward_class(&p, &e)?;
    let rhs = pushed.ch() * &todd_of_variety(&p1);
    println!("p_*(ch(E) td) = {lhs}");
    println!("ch(p_! E) td  = {rhs}");
    assert_eq!(lhs, rhs);
    Ok(())
}
