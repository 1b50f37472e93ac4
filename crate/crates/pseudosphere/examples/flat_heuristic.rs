//! The constant-momentum route to the flat first-order equation: currents
//! of even elements, the duality-angle obstruction, and the exact agreement
//! of the even-element residual with the column residual.
//!
//! Run with `cargo run --example flat_heuristic`.

use num::BigRational;
use pseudosphere::algebras::sigma;
use pseudosphere::fields::{
    current, dirac_hestenes_residual, duality_obstruction, lift, residual_routes_agree,
    scale_field, transport_defect, ChartField,
};
use pseudosphere::multivector::Multivector;
use pseudosphere::poly::Poly;
use pseudosphere::rat;
use pseudosphere::signature::minkowski;

fn main() {
    // The current of any even element is grade-1; for the unit element it
    // is the time axis.
    let unit = Multivector::<BigRational>::one(minkowski());
    println!("current(1) = {}", current(&unit));

    // A pseudoscalar admixture leaves the current grade-1 but obstructs the
    // constant-momentum transport step with a grade-3 defect.
    let tau = Multivector::<BigRational>::pseudoscalar(minkowski());
    let off_angle = unit.clone() + tau.scale(&rat(1, 3));
    println!("current(off-angle) = {}", current(&off_angle));
    println!("duality obstruction = {}", duality_obstruction(&off_angle));
    println!(
        "transport defect grade-3 part = {}",
        transport_defect(&off_angle).grade(3).unwrap()
    );
    let on_angle = unit + sigma::<BigRational>(3).scale(&rat(1, 2));
    println!("on-angle transport defect = {}", transport_defect(&on_angle));

    // The polynomial first-order residual, and its exact agreement with the
    // column-spinor route through the translation dictionary.
    let psi: ChartField<BigRational> = scale_field(
        &lift(&(Multivector::one(minkowski()) + sigma::<BigRational>(1).scale(&rat(1, 2)))),
        &(Poly::var(0) * Poly::var(1) + Poly::constant(rat(1, 1))),
    );
    let residual = dirac_hestenes_residual(&psi, rat(3, 4));
    println!("\nresidual blades: {}", residual.num_terms());
    let x = [rat(1, 3), rat(-1, 2), rat(2, 7), rat(1, 5)];
    println!(
        "even-element and column routes agree exactly: {}",
        residual_routes_agree(&psi, &rat(3, 4), &x).unwrap()
    );
}
