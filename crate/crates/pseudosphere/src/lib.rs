//! A Clifford algebra kernel and verification toolkit for the spin-1/2 wave
//! equation on the de Sitter pseudo-sphere, seen from its flat
//! five-dimensional bulk.
//!
//! Everything runs at desk scale and, wherever the constants allow, in
//! exact rational arithmetic: blade products, the matrix representation on
//! C(4), the projective conformal chart, polynomial differential operators,
//! and the first-order wave residuals are all checked as identities rather
//! than approximations. Float mode enters only where hyperbolic functions
//! or square roots force it, against stated tolerances.
//!
//! ## Start with the examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --example blade_arithmetic       # kernel tour: products, duality, exponentials
//! cargo run --example gamma_relations        # named elements and their defining relations
//! cargo run --example spin_group             # bivector/matrix/Killing generators, double cover
//! cargo run --example spinor_dictionary      # column spinors vs even elements, six lines
//! cargo run --example polar_decomposition    # density / duality angle / rotor split
//! cargo run --example chart_embedding        # pseudo-sphere chart and induced metric
//! cargo run --example killing_fields         # polynomial Killing identities
//! cargo run --example casimir_factorization  # quadratic/quartic invariants, telescoping
//! cargo run --example wave_equivalence       # the two wave-equation routes coincide
//! cargo run --example flat_limit             # large-radius reduction to the flat equation
//! cargo run --example classical_momentum     # classical biform identities
//! cargo run --example flat_heuristic         # constant-momentum route in flat spacetime
//! ```
//!
//! ## Library layout
//!
//! - [`multivector`]: sparse multivectors over a [`signature`], with the
//!   geometric product, wedge, left contraction, grades, reversion, duality
//!   and bivector exponentials. [`mod@reference`] keeps an independent
//!   brute-force product the kernel is checked against.
//! - [`algebras`]: the canonical signatures' named elements (gamma vectors,
//!   the bulk generators, idempotents) and the isometry generators with
//!   their commutator tables.
//! - [`repr`]: the exact matrix representation on C(4), column spinors, the
//!   translation dictionary and the polar decomposition.
//! - [`geometry`]: the projective conformal chart, the induced metric and
//!   the Killing vector fields (exact polynomials).
//! - [`fields`]: multivector fields with polynomial coefficients and the
//!   angular-momentum operator calculus: quadratic/quartic invariants, the
//!   two first-order wave residuals and their equivalence, chart-coordinate
//!   operators, the flat limit, and the classical identities.
//! - [`suites`] and [`report`]: seeded verification sweeps and their
//!   JSON/Markdown reports, shared by the `pseudosphere` binary and the
//!   acceptance tests.
//!
//! The one binary is thin: `pseudosphere verify` runs suites and writes
//! `report.json`/`report.md`; `pseudosphere chart` emits the observer-region
//! grid as CSV.

pub mod error;
pub mod scalar;
pub mod signature;
pub mod multivector;
pub mod reference;
pub mod poly;
pub mod matrix;
pub mod algebras;
pub mod repr;
pub mod geometry;
pub mod fields;
pub mod report;
pub mod suites;

pub use error::{Error, Result};
pub use multivector::Multivector;
pub use poly::Poly;
pub use scalar::{rat, FieldScalar, NumericScalar, Scalar};
pub use signature::{bulk, minkowski, pauli, Signature};
