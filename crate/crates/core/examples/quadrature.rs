//! Adaptive Gauss-Kronrod as an independent check.

use symint::numeric::{quad_oracle, quad_oracle_capped};

fn main() {
    let runge = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
    let r = quad_oracle(&runge, -1.0, 1.0, 1e-12).unwrap();
    let exact = 2.0 * (5.0f64).atan() / 5.0;
    println!("runge: {:.15} (err est {:.1e}, {} splits)", r.value, r.error_estimate, r.subdivisions);
    println!("       {:.15} exact", exact);

    let spike = |x: f64| 1.0 / (1e-4 + x * x);
    match quad_oracle_capped(&spike, -1.0, 1.0, 1e-14, 5) {
        Ok(r) => println!("spike: {}", r.value),
        Err(e) => println!("spike with 5 splits: {e}"),
    }
}
