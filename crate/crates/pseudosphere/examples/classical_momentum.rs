//! Classical angular momentum of a particle on the pseudo-sphere: with the
//! position orthogonal to the momentum, the biform identities hold exactly.
//!
//! Run with `cargo run --example classical_momentum`.

use pseudosphere::fields::ClassicalState;
use pseudosphere::rat;

fn main() {
    // x along the normal axis, p spatial: l = x ∧ p with l^2 = -l^2 p^2.
    let x = [rat(0, 1), rat(0, 1), rat(0, 1), rat(3, 1), rat(0, 1)];
    let p = [rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
    let state = ClassicalState::new(&x, &p).unwrap();
    println!("l = {}", state.biform());
    println!("l^2 = {}", state.biform().gp(&state.biform()).scalar_part());
    println!("identity failures: {:?}", state.identity_failures());

    // A generic rational state: the constructor projects the momentum
    // orthogonal to the position, and every identity is exact.
    let x = [rat(1, 2), rat(1, 3), rat(-2, 5), rat(3, 2), rat(1, 7)];
    let p = [rat(1, 1), rat(-1, 2), rat(2, 3), rat(1, 5), rat(4, 3)];
    let state = ClassicalState::new(&x, &p).unwrap();
    println!("\ngeneric state:");
    println!("  x.p = {}", state.x.scalar_product(&state.p));
    println!("  l ∧ l = {}", state.biform().wedge(&state.biform()));
    println!("  identity failures: {:?}", state.identity_failures());

    // Positions with nonpositive square are rejected.
    let bad = ClassicalState::new(
        &[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(1, 1)],
        &[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
    );
    println!("\ntimelike-dominated position rejected: {:?}", bad.err().map(|e| e.to_string()));
}
