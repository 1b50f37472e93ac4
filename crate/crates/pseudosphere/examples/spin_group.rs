//! The isometry generators as bivectors in the algebra, as 5x5 matrices
//! and as Killing vector fields, with the double cover in action.
//!
//! Run with `cargo run --example spin_group`.

use num::BigRational;
use pseudosphere::algebras::{
    adjoint_action, e_up, eta_combination_constants, exp_so41, generator_pairs,
    group_membership_residual, so41_structure_table, spin_generator, spin_plane_rotor,
    spin_structure_table, vector_components,
};
use pseudosphere::geometry::killing_structure_table;
use pseudosphere::matrix::Mat5;

fn main() {
    // Spot bracket: [S_12, S_23] = S_13.
    let s12 = spin_generator::<BigRational>(1, 2);
    let s23 = spin_generator::<BigRational>(2, 3);
    println!("[S_12, S_23] = {}", s12.gp(&s23) - s23.gp(&s12));

    // All three commutator tables close with the same structure constants
    // (the matrix table with the opposite overall sign: coordinate flows
    // compose contravariantly).
    let bivector_table = spin_structure_table();
    let killing_table = killing_structure_table();
    let matrix_table = so41_structure_table();
    println!(
        "bivector table matches the eta combination: {}",
        bivector_table == eta_combination_constants(-1)
    );
    println!("killing table equals bivector table:     {}", killing_table == bivector_table);
    println!(
        "matrix table is the negated combination:   {}",
        matrix_table == eta_combination_constants(1)
    );

    // Exponentials of antisymmetric parameters stay in the group.
    let mut chi = Mat5::<f64>::zero();
    chi.entries[0][1] = 0.4;
    chi.entries[1][0] = -0.4;
    let lam = exp_so41(&chi).unwrap();
    println!("\nmembership residual of a 1-2 rotation: {:.2e}", group_membership_residual(&lam));

    // The double cover: a plane rotor acts on grade-1 elements exactly like
    // the matrix exponential (components pick up the transpose).
    let theta = 0.4;
    let u = spin_plane_rotor(1, 2, theta);
    let rotated = adjoint_action(&u, &e_up::<f64>(1)).unwrap();
    println!("Ad_u(E1) = {rotated}");
    let components = vector_components(&e_up::<f64>(1));
    let mapped = lam.transpose().mul_vec(&components);
    println!("matrix route: ({:.4}, {:.4}, ...)", mapped[0], mapped[1]);

    println!("\ngenerator planes: {:?}", generator_pairs());
}
