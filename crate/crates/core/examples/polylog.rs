//! `Li_s(z)` by direct summation with a tail bound.

use symint::numeric::polylog_series;

fn main() {
    for (s, z) in [(1, 0.5), (2, 0.5), (2, -0.9), (3, 0.25)] {
        let r = polylog_series(s, z, 1e-14).unwrap();
        println!("Li_{s}({z}) = {:.15}  ({} terms, tail < {:.1e})", r.value, r.terms, r.tail_bound);
    }
    // Li_1(z) = -log(1 - z), Li_2(1/2) = pi^2/12 - log(2)^2/2
    let ln2 = std::f64::consts::LN_2;
    println!("check: {:.15} {:.15}", ln2, std::f64::consts::PI.powi(2) / 12.0 - ln2 * ln2 / 2.0);
}
