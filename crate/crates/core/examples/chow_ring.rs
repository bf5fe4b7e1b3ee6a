//! Arithmetic in CH*(P^1 x P^2) = Q[h1, h2] / (h1^2, h2^3).

use chowkit::json::Interchange;
use chowkit::rational::frac;
use chowkit::{Cycle, Variety};

fn main() {
    let x = Variety::new(vec![1, 2]);
    let h1 = Cycle::hyperplane(&x, 0);
    let h2 = Cycle::hyperplane(&x, 1);

    // A curve class and a surface class.
    let curve = &(&h1 * &h2) + &h2.pow(2).scale(&frac(3, 2));
    let divisor = &h1.scale(&frac(2, 1)) + &h2;
    let product = &curve * &divisor;
    println!("X = {x}");
    println!("curve    = {curve}");
    println!("divisor  = {divisor}");
    println!("product  = {product}");
    println!("degree   = {}", product.degree());
    // h1^2 = 0 and h2^3 = 0: truncation is applied on every product.
    println!("h1^2     = {}", h1.pow(2));
    println!("(h1 + h2)^3 = {}", (&h1 + &h2).pow(3));
    for k in 0..=x.dim() {
        println!("codim {k}: {}", (&Cycle::one(&x) + &divisor).pow(3).graded_component(k));
    }
    println!("json: {}", curve.to_json_string());
}
