//! Real root isolation with rational endpoints.

use symint::algebra::{Poly, Rat};
use symint::definite::{real_roots_in_interval, refine, Interval};

fn main() -> symint::Result<()> {
    // (x^2 - 2)(x - 1)(x^2 + 1)
    let p = &Poly::<Rat>::from_ints(&[-2, 0, -1, 0, 1]) * &Poly::from_ints(&[-1, 1]);
    println!("p = {p}");
    let iv = Interval::new(Rat::from_int(-3), Rat::from_int(3))?;
    for r in real_roots_in_interval(&p, &iv) {
        let fine = refine(&p, &r, &Rat::new(1, 1_000_000));
        println!("{r}  refined to {fine}");
    }
    Ok(())
}
