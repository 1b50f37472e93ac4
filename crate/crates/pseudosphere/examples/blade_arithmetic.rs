//! Tour of the Clifford kernel: products, contraction, duality, reversion
//! and bivector exponentials, in exact rational arithmetic.
//!
//! Run with `cargo run --example blade_arithmetic`.

use num::BigRational;
use pseudosphere::multivector::Multivector;
use pseudosphere::rat;
use pseudosphere::signature::{bulk, minkowski};

type Mv = Multivector<BigRational>;

fn main() {
    // The bulk algebra has basis labels (1,2,3,4,0) with squares
    // (+,+,+,+,-): the label-0 direction is timelike.
    let e0 = Mv::basis_vector(bulk(), 0);
    let e1 = Mv::basis_vector(bulk(), 1);
    println!("E0 * E0 = {}", e0.gp(&e0));
    println!("E1 * E0 = {}", e1.gp(&e0));
    println!("E1 * E0 + E0 * E1 = {}", e1.gp(&e0) + e0.gp(&e1));

    // Mixed-grade values print in the canonical text form.
    let a = Mv::one(bulk()) + Mv::blade(bulk(), &[1, 4], rat(3, 2));
    println!("a = {a}");
    println!("rev(a) = {}", a.rev());
    println!("a * a = {}", a.gp(&a));

    // Contraction pulls vectors out of blades.
    let b12 = e1.wedge(&Mv::basis_vector(bulk(), 2));
    println!("E1 ⌟ (E1 ∧ E2) = {}", e1.left_contraction(&b12));

    // Duality by the unit pseudoscalar; its inverse is the negated dual
    // because the pseudoscalar squares to -1 here.
    println!("⋆1 = {}", Mv::one(bulk()).hodge());
    println!("⋆⁻¹(⋆a) = {}", a.hodge().hodge_inv());

    // Exponentials: a timelike plane squares to +1, so the closed form is
    // hyperbolic. The result is a unit versor.
    let plane = e1.gp(&e0).to_f64();
    let u = plane.scale(&0.3).exp_bivector(30).unwrap();
    println!("exp(0.3 E1E0) = {u}");
    println!(
        "u rev(u) - 1 has max coefficient {:.2e}",
        (u.gp(&u.rev()) - Multivector::one(bulk())).max_abs_coeff()
    );

    // The spacetime algebra is registered alongside the bulk one.
    let g0 = Mv::basis_vector(minkowski(), 0);
    let g1 = Mv::basis_vector(minkowski(), 1);
    println!("g0^2 = {}, g1^2 = {}", g0.gp(&g0), g1.gp(&g1));
}
