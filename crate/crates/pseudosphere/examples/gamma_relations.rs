//! The named algebra elements and their defining relations: gamma vectors,
//! the bulk generators, the induced spacetime generators, idempotents and
//! the central volume element.
//!
//! Run with `cargo run --example gamma_relations`.

use num::BigRational;
use pseudosphere::algebras::{
    big_gamma, e_up, eta_minkowski, f41, frak_i, gamma, gamma_down, idempotent_e, sigma,
};

fn main() {
    // Direct and reciprocal spacetime vectors pair to the Kronecker delta.
    for mu in 0..4u8 {
        let pair = gamma::<BigRational>(mu).gp(&gamma_down(mu));
        println!("g^{mu} . g_{mu} pairing: {}", pair.scalar_part());
    }

    // The bulk products Gamma^mu = E^mu E^4 generate a spacetime algebra:
    // their anticommutators reproduce diag(1,-1,-1,-1).
    println!("\nGamma anticommutator diagonal:");
    for mu in 0..4u8 {
        let sq = big_gamma::<BigRational>(mu).gp(&big_gamma(mu));
        println!(
            "  (Gamma^{mu})^2 = {} (expected {})",
            sq.scalar_part(),
            eta_minkowski(mu)
        );
    }
    let off = big_gamma::<BigRational>(0).gp(&big_gamma(1))
        + big_gamma::<BigRational>(1).gp(&big_gamma(0));
    println!("  Gamma^0 Gamma^1 + Gamma^1 Gamma^0 = {off}");

    // sigma_k = gamma_k gamma_0 span the relative directions.
    for k in 1..=3u8 {
        println!("sigma_{k} = {}", sigma::<BigRational>(k));
    }

    // Projectors square to themselves; the bulk volume element is central
    // with square -1.
    let e = idempotent_e::<BigRational>();
    println!("\ne = {e}");
    println!("e*e - e = {}", e.gp(&e) - e.clone());
    let f = f41::<BigRational>();
    println!("f*f - f = {}", f.gp(&f) - f.clone());
    let i = frak_i::<BigRational>();
    println!("i^2 = {}", i.gp(&i));
    let probe = e_up::<BigRational>(2).gp(&e_up(0));
    println!("i commutes with E2E0: {}", i.gp(&probe) == probe.gp(&i));
}
