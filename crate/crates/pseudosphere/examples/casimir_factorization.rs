//! The quadratic and quartic invariants of the angular operator: the
//! grade-4 identity, the graded decomposition of the squared operator with
//! its first-order cross term, and the telescoping factorization of the
//! linear wave operator.
//!
//! Run with `cargo run --example casimir_factorization`.

use num::BigRational;
use pseudosphere::algebras::e_up;
use pseudosphere::fields::{
    casimir_quartic_check, factor_composition, field_max_abs, field_to_f64, fourth_order_residual,
    l_total, lift, quadratic_split, scale_field, telescoping_sides, BulkField, OperatorParams,
    QuadraticSplit,
};
use pseudosphere::multivector::Multivector;
use pseudosphere::poly::Poly;
use pseudosphere::rat;
use pseudosphere::signature::bulk;

fn main() {
    // Quartic identity on a grade-4 element: F F = F ⌟ F = -64 l^2 W.W.
    let f = Multivector::blade(bulk(), &[1, 2, 3, 4], rat(1, 1))
        + Multivector::blade(bulk(), &[1, 2, 3, 0], rat(2, 3));
    println!("quartic identity holds: {}", casimir_quartic_check(&f, &rat(3, 1)).unwrap());

    // A small polynomial test field.
    let phi: BulkField<BigRational> = scale_field(
        &lift(&Multivector::one(bulk())),
        &(Poly::var(0) * Poly::var(4)),
    ) + scale_field(
        &lift(&e_up::<BigRational>(1).gp(&e_up(2))),
        &Poly::var(2),
    );

    // The graded decomposition of L(L phi): scalar part, grade-4 part, and
    // the first-order cross term 3 L(phi) E2E1 that the component operators'
    // non-commutativity produces.
    let split = quadratic_split(&phi);
    let total = l_total(&l_total(&phi));
    println!(
        "contraction + cross + wedge == L(L phi): {}",
        split.total() == total
    );
    println!(
        "cross term equals 3 L(phi) E2E1:          {}",
        split.cross == QuadraticSplit::cross_closed_form(&phi)
    );

    // Telescoping: ((1/l)L + lambda)((1/l)L - lambda) = (1/l^2)L^2 - lambda^2.
    let params = OperatorParams::new(2.0, 1.0);
    let phi_f = field_to_f64(&phi);
    let (lhs, rhs) = telescoping_sides(&phi_f, &params).unwrap();
    println!("telescoping residual: {:.2e}", field_max_abs(&(lhs - rhs)));

    // The two quadratic factors compose to the fourth-order operator.
    let compose = factor_composition(&phi_f, &params);
    let fourth = fourth_order_residual(&phi_f, &params);
    println!("factor-composition residual: {:.2e}", field_max_abs(&(compose - fourth)));
}
