//! Chern character, Todd class and sqrt(td) of bundles on products of projective spaces.

use chowkit::classes::{
    chern_character, line_bundle, power_sums, sqrt_todd, tangent_class, todd_class,
    todd_of_variety,
};
use chowkit::Variety;

fn main() -> chowkit::Result<()> {
    let p3 = Variety::projective(3);
    let e = line_bundle(&p3, &[1])?.direct_sum(&line_bundle(&p3, &[-2])?)?;
    println!("E = O(1) + O(-2) on P^3, c(E) = {}", e.total_chern());
    for (k, p) in power_sums(&e).iter().enumerate() {
        println!("  p_{} = {p}", k + 1);
    }
    println!("  ch(E) = {}", chern_character(&e));
    println!("  td(E) = {}", todd_class(&e));

    for x in [Variety::projective(2), Variety::new(vec![1, 1]), Variety::new(vec![1, 2])] {
        let t = tangent_class(&x);
        let r = sqrt_todd(&x);
        println!("{x}: c(T) = {}", t.total_chern());
        println!("  td      = {}", todd_of_variety(&x));
        println!("  sqrt td = {r}");
        assert_eq!(&r * &r, todd_of_variety(&x));
    }
    Ok(())
}
