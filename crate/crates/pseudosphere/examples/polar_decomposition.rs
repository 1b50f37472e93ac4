//! Polar decomposition of invertible even elements into density, duality
//! angle and rotor, plus the degenerate case that is rejected.
//!
//! Run with `cargo run --example polar_decomposition`.

use pseudosphere::algebras::sigma;
use pseudosphere::multivector::Multivector;
use pseudosphere::repr::{singular_even_fixture, takabayasi_decompose};
use pseudosphere::signature::minkowski;

fn main() {
    // A scalar decomposes trivially.
    let psi = Multivector::scalar(minkowski(), 2.0);
    let t = takabayasi_decompose(&psi).unwrap();
    println!("psi = 2:    rho = {}, beta = {}, R = {}", t.rho, t.beta, t.rotor);

    // The unit pseudoscalar sits at the opposite duality angle.
    let tau = Multivector::<f64>::pseudoscalar(minkowski());
    let t = takabayasi_decompose(&tau).unwrap();
    println!("psi = tau:  rho = {}, beta = {:.6}, R = {}", t.rho, t.beta, t.rotor);

    // A generic invertible element reconstructs to working precision.
    let psi = Multivector::scalar(minkowski(), 1.25)
        + sigma::<f64>(1).scale(&0.4)
        + tau.scale(&0.3);
    let t = takabayasi_decompose(&psi).unwrap();
    println!(
        "generic:    rho = {:.6}, beta = {:.6}, reconstruction error = {:.2e}",
        t.rho,
        t.beta,
        t.reconstruct().distance(&psi)
    );

    // Null even elements (psi rev(psi) = 0) are the excluded case.
    match takabayasi_decompose(&singular_even_fixture()) {
        Err(e) => println!("singular fixture rejected: {e}"),
        Ok(_) => println!("unexpected: singular fixture decomposed"),
    }
}
