//! The projective conformal chart: embedding onto the pseudo-sphere, the
//! inverse chart, the conformally flat pullback metric, and the observer
//! grid.
//!
//! Run with `cargo run --example chart_embedding`.

use pseudosphere::geometry::{
    classify, embed, emit_chart_grid, induced_metric, pseudo_sphere_residual, unembed,
};
use pseudosphere::rat;

fn main() {
    // Exact rational chart data round-trips exactly.
    let x = [rat(1, 3), rat(-2, 7), rat(1, 2), rat(3, 5)];
    let ell = rat(2, 1);
    let p = embed(&x, &ell).unwrap();
    println!("x = {:?}", x.clone().map(|c| c.to_string()));
    println!("Omega = {}", p.omega);
    println!("X = {:?}", p.bulk.clone().map(|c| c.to_string()));
    println!("quadric residual = {}", pseudo_sphere_residual(&p.bulk, &ell));
    println!("round trip intact: {}", unembed(&p.bulk, &ell).unwrap() == x);

    // The pullback metric is Omega^2 times the flat metric, exactly.
    let g = induced_metric(&p);
    println!("g_00 / Omega^2 = {}", g[0][0].clone() / (p.omega.clone() * p.omega.clone()));
    println!("g_11 / Omega^2 = {}", g[1][1].clone() / (p.omega.clone() * p.omega.clone()));
    println!("g_01 = {}", g[0][1]);

    // The origin sits at the south pole.
    let origin = embed(&[rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)], &rat(1, 1)).unwrap();
    println!("\norigin embeds to X = {:?}", origin.bulk.map(|c| c.to_string()));

    // Points on the absolute are rejected; so is inverting the north pole.
    println!(
        "absolute rejected: {:?}",
        embed(&[rat(2, 1), rat(0, 1), rat(0, 1), rat(0, 1)], &rat(1, 1)).err().map(|e| e.to_string())
    );

    // Region flags for the observer grid (written as CSV by the chart
    // subcommand of the binary).
    println!("\n(2l, 0) lies on the absolute: {:?}", classify(2.0, 0.0, 1.0));
    let csv = emit_chart_grid(1.0, 3.0, 3, false);
    println!("3x3 grid:\n{csv}");
}
