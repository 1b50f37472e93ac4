//! Column spinors against even multivectors: the exact matrix
//! representation, the component layout, and the six translation lines.
//!
//! Run with `cargo run --example spinor_dictionary`.

use num::BigRational;
use pseudosphere::algebras::{gamma5, sigma};
use pseudosphere::multivector::Multivector;
use pseudosphere::rat;
use pseudosphere::repr::{
    column_to_even, dictionary_lines, even_to_column, rho, rho_first_column, ColumnSpinor,
};
use pseudosphere::signature::minkowski;

fn main() {
    // The layout (m0 + i m3, -m2 + i m1, n0 + i n3, -n2 + i n1).
    let m = [rat(1, 2), rat(0, 1), rat(0, 1), rat(1, 3)];
    let n = [rat(2, 1), rat(0, 1), rat(-1, 4), rat(0, 1)];
    let column = ColumnSpinor::from_parameters(&m, &n);
    println!("column: {}", column.to_json());

    let psi = column_to_even(&column);
    println!("even element: {psi}");
    println!("round trip intact: {}", even_to_column(&psi) == column);

    // The layout is exactly the first column of the matrix image.
    println!(
        "first column of rho(psi) agrees: {}",
        rho_first_column(&psi) == column
    );
    println!("rho(psi) = {}", rho(&psi).to_json());

    // All six translation lines hold with zero residual in exact mode.
    for line in dictionary_lines() {
        println!("line {:<18} residual {}", line.name, (line.check)(&psi));
    }

    // A couple of landmark correspondences.
    let unit = Multivector::<BigRational>::one(minkowski());
    println!(
        "\npsi = 1 maps to {:?}",
        even_to_column(&unit).components.map(|c| format!("{}+{}i", c.re, c.im))
    );
    println!(
        "psi = sigma_3 maps to {:?}",
        even_to_column(&sigma::<BigRational>(3)).components.map(|c| format!("{}+{}i", c.re, c.im))
    );
    let i_sigma3 = gamma5::<BigRational>().gp(&sigma(3));
    println!(
        "psi = i sigma_3 maps to {:?}",
        even_to_column(&i_sigma3).components.map(|c| format!("{}+{}i", c.re, c.im))
    );
}
