//! The ten rotation generators as polynomial vector fields: the Killing
//! equation, tangency to the quadric and the bracket table, verified as
//! exact polynomial identities.
//!
//! Run with `cargo run --example killing_fields`.

use pseudosphere::algebras::generator_pairs;
use num::traits::Zero;
use pseudosphere::geometry::{
    field_bracket, killing_equation_residual, killing_field, tangency_residual,
};

fn main() {
    let xi12 = killing_field(1, 2);
    println!("xi_12 components (over X1,X2,X3,X4,X0):");
    for (i, comp) in xi12.iter().enumerate() {
        println!("  [{i}] {comp}");
    }

    // Brackets close on the generator set: [xi_12, xi_23] = xi_13.
    let bracket = field_bracket(&xi12, &killing_field(2, 3));
    let expect = killing_field(1, 3);
    println!(
        "\n[xi_12, xi_23] == xi_13: {}",
        bracket.iter().zip(expect.iter()).all(|(a, b)| a == b)
    );

    // Killing equation and tangency, for every generator, exactly.
    let mut all_killing = true;
    let mut all_tangent = true;
    for (a, b) in generator_pairs() {
        let xi = killing_field(a, b);
        all_killing &= killing_equation_residual(&xi)
            .iter()
            .all(|row| row.iter().all(|p| p.is_zero()));
        all_tangent &= tangency_residual(&xi).is_zero();
    }
    println!("symmetrized derivatives vanish for all ten generators: {all_killing}");
    println!("all generators are tangent to the quadric:             {all_tangent}");
}
