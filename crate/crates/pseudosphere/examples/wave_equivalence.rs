//! The two routes to the first-order wave equation coincide: the residual
//! built in the rotor-transported frame conjugates exactly onto the
//! fixed-frame residual once the two constants are identified.
//!
//! Run with `cargo run --example wave_equivalence`.

use pseudosphere::algebras::e_up;
use pseudosphere::fields::{equivalence_report, OperatorParams, RotorField};
use pseudosphere::poly::Poly;

fn main() {
    // phi' = rho^(1/2) exp(z F) with F = E^1E^0 (F^2 = +1) and z = X^2/10.
    let plane = e_up::<f64>(1).gp(&e_up(0));
    let z = Poly::<f64, 5>::var(1).scale(&0.1);
    let rotor = RotorField::new(1.0, plane, z).unwrap();

    let params = OperatorParams::new(2.0, 1.0);
    println!("lambda = kappa = {:.6}", params.lambda().unwrap());

    let samples: Vec<[f64; 5]> = (0..20)
        .map(|i| {
            let t = i as f64 / 20.0 - 0.5;
            [t, 0.3 * t, -0.2, 0.1 + t * t, 0.4 * t]
        })
        .collect();

    let report = equivalence_report(&rotor, &params, &samples).unwrap();
    println!("derivative-inversion residual: {:.3e}", report.inversion_residual);
    println!("frame-transport residual:      {:.3e}", report.transport_residual);
    println!("two-route agreement residual:  {:.3e}", report.agreement_residual);

    // The trivial exponent collapses both routes onto the same field.
    let constant = RotorField::new(2.0, e_up::<f64>(1).gp(&e_up(0)), Poly::constant(0.0)).unwrap();
    let trivial = equivalence_report(&constant, &params, &samples).unwrap();
    println!("trivial-exponent agreement:    {:.3e}", trivial.agreement_residual);
}
