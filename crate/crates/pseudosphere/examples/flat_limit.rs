//! The large-radius reduction: the chart-coordinate wave residual
//! approaches the flat first-order residual like one over the radius.
//!
//! Run with `cargo run --example flat_limit`.

use pseudosphere::algebras::e_up;
use pseudosphere::fields::{lift, limit_sweep, scale_field, ChartField};
use pseudosphere::multivector::Multivector;
use pseudosphere::poly::Poly;
use pseudosphere::signature::bulk;

fn main() {
    // A family of low-degree even chart fields.
    let one: ChartField<f64> = lift(&Multivector::one(bulk()));
    let biv: ChartField<f64> = lift(&e_up::<f64>(1).gp(&e_up(2)));
    let family = vec![
        scale_field(&one, &(Poly::var(0) * Poly::var(1))) + scale_field(&biv, &Poly::var(2)),
        scale_field(&biv, &(Poly::var(3) * Poly::var(3))) + one.clone(),
    ];
    let samples = [[1.0, 0.3, -0.2, 0.4], [0.5, -0.1, 0.2, 0.0], [0.2, 0.6, 0.1, -0.3]];
    let ladder = [10.0, 100.0, 1000.0, 10_000.0];

    let report = limit_sweep(&family, 1.0, &ladder, &samples).unwrap();
    println!("radius   deviation");
    for (ell, d) in report.ells.iter().zip(&report.deviations) {
        println!("{ell:>8} {d:.6e}");
    }
    println!("\nfitted log-log slope: {:.4}", report.slope);
    println!("strictly decreasing:  {}", report.strictly_decreasing);

    // Constants with zero mass satisfy both equations identically.
    let trivial = vec![one];
    let zeros = limit_sweep(&trivial, 0.0, &ladder, &samples).unwrap();
    println!("trivial family deviations: {:?}", zeros.deviations);
}
