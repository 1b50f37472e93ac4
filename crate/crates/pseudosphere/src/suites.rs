//! Verification suites: seeded random sweeps over every identity the crate
//! mechanizes, grouped the way the command-line runner exposes them.

use num::traits::Zero;
use num::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebras::{self, e_up, eta_bulk};
use crate::error::Error;
use crate::fields::{self, BulkField, ChartField, OperatorParams};
use crate::geometry;
use crate::multivector::Multivector;
use crate::poly::Poly;
use crate::repr;
use crate::report::Check;
use crate::scalar::{rat, NumericScalar};
use crate::signature::{bulk, canonical, minkowski, Signature};

/// Arithmetic mode of the sampled sweeps.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    /// Identities without irrational constants run in exact rationals.
    ExactWherePossible,
    /// Everything runs in binary64 against the float tolerances.
    Float,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::ExactWherePossible => "exact",
            Mode::Float => "float",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "exact" | "exact-where-possible" => Ok(Mode::ExactWherePossible),
            "float" => Ok(Mode::Float),
            other => Err(Error::BadConfig(format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub ell: f64,
    pub mass: f64,
    pub mode: Mode,
    /// Relative tolerance for float comparisons.
    pub rel_tol: f64,
    /// Absolute floor for float comparisons.
    pub abs_tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            ell: 1.0,
            mass: 1.0,
            mode: Mode::ExactWherePossible,
            rel_tol: 1e-10,
            abs_tol: 1e-14,
        }
    }
}

impl SuiteConfig {
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(stream);
        rng
    }

    /// Tolerance for checks that are exact in exact mode.
    fn exact_tol(&self) -> f64 {
        match self.mode {
            Mode::ExactWherePossible => 0.0,
            Mode::Float => self.rel_tol,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    Ga,
    Algebras,
    Repr,
    Geometry,
    Operators,
    Limit,
}

pub const ALL_SUITES: [Suite; 6] =
    [Suite::Ga, Suite::Algebras, Suite::Repr, Suite::Geometry, Suite::Operators, Suite::Limit];

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Ga => "ga",
            Suite::Algebras => "algebras",
            Suite::Repr => "repr",
            Suite::Geometry => "geometry",
            Suite::Operators => "operators",
            Suite::Limit => "limit",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        ALL_SUITES
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::BadConfig(format!("unknown suite `{s}`")))
    }
}

/// Runs one suite and returns its checks.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Vec<Check> {
    match suite {
        Suite::Ga => ga_suite(cfg),
        Suite::Algebras => algebras_suite(cfg),
        Suite::Repr => repr_suite(cfg),
        Suite::Geometry => geometry_suite(cfg),
        Suite::Operators => operators_suite(cfg),
        Suite::Limit => limit_suite(cfg),
    }
}

/// Runs several suites in order.
pub fn run_suites(suites: &[Suite], cfg: &SuiteConfig) -> Vec<Check> {
    suites.iter().flat_map(|s| run_suite(*s, cfg)).collect()
}

// ---------------------------------------------------------------------------
// Random value builders (degrees <= 3, numerators/denominators <= 9).
// ---------------------------------------------------------------------------

pub fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    let num = rng.gen_range(-9i64..=9);
    let den = rng.gen_range(1i64..=9);
    rat(num, den)
}

fn rand_nonzero_rational(rng: &mut ChaCha8Rng) -> BigRational {
    loop {
        let r = rand_rational(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// Random multivector with up to `terms` blades.
pub fn rand_multivector(
    sig: &Arc<Signature>,
    rng: &mut ChaCha8Rng,
    terms: usize,
) -> Multivector<BigRational> {
    let mut mv = Multivector::zero(sig);
    for _ in 0..terms {
        let mask = rng.gen_range(0..sig.blade_count() as u16);
        mv = mv + Multivector::from_terms(sig, [(mask, rand_rational(rng))]);
    }
    mv
}

/// Random homogeneous multivector of grade `k`.
pub fn rand_grade(
    sig: &Arc<Signature>,
    rng: &mut ChaCha8Rng,
    k: usize,
    terms: usize,
) -> Multivector<BigRational> {
    let masks: Vec<u16> =
        (0..sig.blade_count() as u16).filter(|m| m.count_ones() as usize == k).collect();
    let mut mv = Multivector::zero(sig);
    for _ in 0..terms {
        let mask = masks[rng.gen_range(0..masks.len())];
        mv = mv + Multivector::from_terms(sig, [(mask, rand_rational(rng))]);
    }
    mv
}

/// Random even multivector.
pub fn rand_even(
    sig: &Arc<Signature>,
    rng: &mut ChaCha8Rng,
    terms: usize,
) -> Multivector<BigRational> {
    let masks: Vec<u16> =
        (0..sig.blade_count() as u16).filter(|m| m.count_ones() % 2 == 0).collect();
    let mut mv = Multivector::zero(sig);
    for _ in 0..terms {
        let mask = masks[rng.gen_range(0..masks.len())];
        mv = mv + Multivector::from_terms(sig, [(mask, rand_rational(rng))]);
    }
    mv
}

/// Random polynomial of total degree at most 3.
pub fn rand_poly<const N: usize>(rng: &mut ChaCha8Rng, terms: usize) -> Poly<BigRational, N> {
    let mut p = Poly::<BigRational, N>::constant(BigRational::zero());
    for _ in 0..terms {
        let mut exps = [0u8; N];
        let degree = rng.gen_range(0..=3u32);
        for _ in 0..degree {
            exps[rng.gen_range(0..N)] += 1;
        }
        p = p + Poly::monomial(exps, rand_rational(rng));
    }
    p
}

/// Random multivector field: up to `blades` blades carrying low-degree
/// polynomial coefficients.
pub fn rand_field<const N: usize>(
    sig: &Arc<Signature>,
    rng: &mut ChaCha8Rng,
    blades: usize,
    poly_terms: usize,
) -> Multivector<Poly<BigRational, N>> {
    let mut mv = Multivector::zero(sig);
    for _ in 0..blades {
        let mask = rng.gen_range(0..sig.blade_count() as u16);
        mv = mv + Multivector::from_terms(sig, [(mask, rand_poly(rng, poly_terms))]);
    }
    mv
}

/// Random even field over the given signature.
pub fn rand_even_field<const N: usize>(
    sig: &Arc<Signature>,
    rng: &mut ChaCha8Rng,
    blades: usize,
    poly_terms: usize,
) -> Multivector<Poly<BigRational, N>> {
    let masks: Vec<u16> =
        (0..sig.blade_count() as u16).filter(|m| m.count_ones() % 2 == 0).collect();
    let mut mv = Multivector::zero(sig);
    for _ in 0..blades {
        let mask = masks[rng.gen_range(0..masks.len())];
        mv = mv + Multivector::from_terms(sig, [(mask, rand_poly(rng, poly_terms))]);
    }
    mv
}

// ---------------------------------------------------------------------------
// The ga suite: kernel products, duality, exponentials.
// ---------------------------------------------------------------------------

/// Max-abs-coefficient distance used by the mode-generic sweeps: exact mode
/// feeds exact values whose difference is exactly zero on success.
fn residual<R: NumericScalar>(a: &Multivector<R>, b: &Multivector<R>) -> f64 {
    (a.clone() - b.clone()).max_abs_coeff()
}

fn ga_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let tol = cfg.exact_tol();

    // Generator relations in all canonical signatures.
    {
        let mut failures = 0usize;
        let mut cases = 0usize;
        for sig in canonical() {
            for i in 0..sig.dim() {
                for j in 0..sig.dim() {
                    cases += 1;
                    let a = Multivector::<BigRational>::basis_vector(sig, sig.label(i));
                    let b = Multivector::<BigRational>::basis_vector(sig, sig.label(j));
                    let anti = a.gp(&b) + b.gp(&a);
                    let expect = if i == j {
                        Multivector::scalar(sig, rat(2 * i64::from(sig.square(i)), 1))
                    } else {
                        Multivector::zero(sig)
                    };
                    if anti != expect {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(Check::exact(
            "ga/generator-relations",
            "basis vectors anticommute onto twice the metric",
            cases,
            failures,
        ));
    }

    // Kernel vs brute-force oracle on all bulk basis-blade pairs.
    {
        let sig = bulk();
        let mut failures = 0;
        for a in 0..sig.blade_count() as u16 {
            for b in 0..sig.blade_count() as u16 {
                if crate::reference::naive_blade_product(sig, a, b)
                    != crate::multivector::blade_product(sig, a, b)
                {
                    failures += 1;
                }
            }
        }
        checks.push(Check::exact(
            "ga/oracle-equivalence",
            "kernel product equals transposition-count oracle on all blade pairs",
            sig.blade_count() * sig.blade_count(),
            failures,
        ));
    }

    // Random dense products against the oracle.
    {
        let mut rng = cfg.rng(1);
        let mut worst: f64 = 0.0;
        let cases = 1000;
        for _ in 0..cases {
            let a = rand_multivector(bulk(), &mut rng, 24);
            let b = rand_multivector(bulk(), &mut rng, 24);
            match cfg.mode {
                Mode::ExactWherePossible => {
                    worst = worst.max(residual(&a.gp(&b), &crate::reference::naive_gp(&a, &b)));
                }
                Mode::Float => {
                    let (af, bf) = (a.to_f64(), b.to_f64());
                    worst =
                        worst.max(residual(&af.gp(&bf), &crate::reference::naive_gp(&af, &bf)));
                }
            }
        }
        checks.push(Check::float(
            "ga/oracle-random-products",
            "random dense products match the oracle term-by-term",
            cases,
            worst,
            tol,
        ));
    }

    // Symmetric duality pairing: A ⌟ ⋆B = B ⌟ ⋆A when grades sum to the
    // dimension.
    {
        fn pairing_residual<R: NumericScalar>(a: &Multivector<R>, b: &Multivector<R>) -> f64 {
            residual(&a.left_contraction(&b.hodge()), &b.left_contraction(&a.hodge()))
        }
        let mut rng = cfg.rng(2);
        let mut worst: f64 = 0.0;
        let cases = 1000;
        for _ in 0..cases {
            let l = rng.gen_range(0..=5usize);
            let a = rand_grade(bulk(), &mut rng, l, 3);
            let b = rand_grade(bulk(), &mut rng, 5 - l, 3);
            worst = worst.max(match cfg.mode {
                Mode::ExactWherePossible => pairing_residual(&a, &b),
                Mode::Float => pairing_residual(&a.to_f64(), &b.to_f64()),
            });
        }
        checks.push(Check::float(
            "ga/duality-pairing",
            "contraction into a dual is symmetric at complementary grades",
            cases,
            worst,
            tol,
        ));
    }

    // Inverse duality: with a negative-square pseudoscalar the inverse is
    // the negated dual at every grade, and the round trip is the identity.
    {
        fn inverse_residual<R: NumericScalar>(v: &Multivector<R>, a: &Multivector<R>) -> f64 {
            residual(&v.hodge_inv(), &(-v.hodge()))
                .max(residual(&a.hodge().hodge_inv(), a))
        }
        let mut rng = cfg.rng(3);
        let mut worst: f64 = 0.0;
        let cases = 1000;
        for _ in 0..cases {
            let v = rand_grade(bulk(), &mut rng, 1, 3);
            let a = rand_multivector(bulk(), &mut rng, 4);
            worst = worst.max(match cfg.mode {
                Mode::ExactWherePossible => inverse_residual(&v, &a),
                Mode::Float => inverse_residual(&v.to_f64(), &a.to_f64()),
            });
        }
        checks.push(Check::float(
            "ga/duality-inverse",
            "inverse dual is the negated dual; dual round trip is identity",
            cases,
            worst,
            tol,
        ));
    }

    // Associativity across all canonical signatures.
    {
        fn assoc_residual<R: NumericScalar>(
            a: &Multivector<R>,
            b: &Multivector<R>,
            c: &Multivector<R>,
        ) -> f64 {
            residual(&a.gp(b).gp(c), &a.gp(&b.gp(c)))
        }
        let mut rng = cfg.rng(4);
        let mut worst: f64 = 0.0;
        let mut cases = 0;
        for sig in canonical() {
            for _ in 0..500 {
                cases += 1;
                let a = rand_multivector(sig, &mut rng, 4);
                let b = rand_multivector(sig, &mut rng, 4);
                let c = rand_multivector(sig, &mut rng, 4);
                worst = worst.max(match cfg.mode {
                    Mode::ExactWherePossible => assoc_residual(&a, &b, &c),
                    Mode::Float => assoc_residual(&a.to_f64(), &b.to_f64(), &c.to_f64()),
                });
            }
        }
        checks.push(Check::float(
            "ga/associativity",
            "geometric product is associative",
            cases,
            worst,
            tol,
        ));
    }

    // Grade decomposition and reversion.
    {
        fn grades_residual<R: NumericScalar>(a: &Multivector<R>, b: &Multivector<R>) -> f64 {
            let mut acc = Multivector::zero(a.signature());
            for k in 0..=a.signature().dim() {
                acc = acc + a.grade(k).unwrap();
            }
            residual(&acc, a)
                .max(residual(&a.gp(b).rev(), &b.rev().gp(&a.rev())))
                .max(residual(&a.rev().rev(), a))
        }
        let mut rng = cfg.rng(5);
        let mut worst: f64 = 0.0;
        let cases = 500;
        for _ in 0..cases {
            let a = rand_multivector(bulk(), &mut rng, 6);
            let b = rand_multivector(bulk(), &mut rng, 6);
            worst = worst.max(match cfg.mode {
                Mode::ExactWherePossible => grades_residual(&a, &b),
                Mode::Float => grades_residual(&a.to_f64(), &b.to_f64()),
            });
        }
        checks.push(Check::float(
            "ga/grades-and-reversion",
            "grade parts sum back; reversion is an anti-automorphism",
            cases,
            worst,
            tol,
        ));
    }

    // Contraction of a bivector with itself against the component sum.
    {
        let mut rng = cfg.rng(6);
        let mut worst: f64 = 0.0;
        let cases = 500;
        for _ in 0..cases {
            let l = rand_grade(bulk(), &mut rng, 2, 4);
            let contraction = l.left_contraction(&l).scalar_part();
            let mut component_sum = BigRational::zero();
            for (mask, c) in l.terms() {
                let mut sign = 1i64;
                let mut m = mask;
                while m != 0 {
                    sign *= i64::from(bulk().square(m.trailing_zeros() as usize));
                    m &= m - 1;
                }
                component_sum = component_sum - rat(sign, 1) * c.clone() * c.clone();
            }
            worst = worst
                .max((contraction.to_f64() - component_sum.to_f64()).abs());
        }
        checks.push(Check::float(
            "ga/bivector-self-contraction",
            "L ⌟ L equals minus half the component square sum",
            cases,
            worst,
            tol,
        ));
    }

    // Exponentials of simple bivectors are unit versors.
    {
        let mut rng = cfg.rng(7);
        let mut worst: f64 = 0.0;
        let cases = 200;
        for _ in 0..cases {
            // Random simple bivector: outer product of two random vectors.
            let u = rand_grade(bulk(), &mut rng, 1, 3).to_f64();
            let v = rand_grade(bulk(), &mut rng, 1, 3).to_f64();
            let b = u.wedge(&v).scale(&0.2);
            let exp = b.exp_bivector(30).expect("grade-2 input");
            worst = worst
                .max(residual(&exp.gp(&exp.rev()), &Multivector::one(bulk())));
        }
        checks.push(Check::float(
            "ga/exponential-versor",
            "exponentials of simple bivectors satisfy u rev(u) = 1",
            cases,
            worst,
            1e-10,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// The algebras suite: named elements, commutator tables, the double cover.
// ---------------------------------------------------------------------------

fn algebras_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();

    // Gamma anticommutation in the effective spacetime algebra of the bulk.
    {
        let mut failures = 0;
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let anti = algebras::big_gamma::<BigRational>(mu).gp(&algebras::big_gamma(nu))
                    + algebras::big_gamma::<BigRational>(nu).gp(&algebras::big_gamma(mu));
                let expect = if mu == nu {
                    Multivector::scalar(bulk(), rat(2 * algebras::eta_minkowski(mu), 1))
                } else {
                    Multivector::zero(bulk())
                };
                if anti != expect {
                    failures += 1;
                }
            }
        }
        checks.push(Check::exact(
            "algebras/effective-gamma-relations",
            "normal-direction products generate a spacetime algebra",
            16,
            failures,
        ));
    }

    // Reciprocal basis pairing.
    {
        let mut failures = 0;
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let lhs = algebras::gamma::<BigRational>(mu).gp(&algebras::gamma_down(nu))
                    + algebras::gamma_down::<BigRational>(nu).gp(&algebras::gamma(mu));
                let expect = if mu == nu {
                    Multivector::scalar(minkowski(), rat(2, 1))
                } else {
                    Multivector::zero(minkowski())
                };
                if lhs != expect {
                    failures += 1;
                }
            }
        }
        checks.push(Check::exact(
            "algebras/reciprocal-basis",
            "direct and reciprocal vectors pair to the Kronecker delta",
            16,
            failures,
        ));
    }

    // Idempotents and the central element.
    {
        let e = algebras::idempotent_e::<BigRational>();
        let f = algebras::f41::<BigRational>();
        let i = algebras::frak_i::<BigRational>();
        let mut failures = 0;
        if e.gp(&e) != e {
            failures += 1;
        }
        if f.gp(&f) != f {
            failures += 1;
        }
        if i.gp(&i) != -Multivector::one(bulk()) {
            failures += 1;
        }
        for mask in 0..32u16 {
            let blade = Multivector::from_terms(bulk(), [(mask, rat(1, 1))]);
            if i.gp(&blade) != blade.gp(&i) {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "algebras/idempotents-and-center",
            "projectors square to themselves; the volume element is central with square -1",
            35,
            failures,
        ));
    }

    // Commutator tables.
    {
        let spin = algebras::spin_structure_table();
        let matrix = algebras::so41_structure_table();
        let killing = geometry::killing_structure_table();
        let bivector_combo = algebras::eta_combination_constants(-1);
        let matrix_combo = algebras::eta_combination_constants(1);
        let mut failures = 0;
        if spin != bivector_combo {
            failures += 1;
        }
        if matrix != matrix_combo {
            failures += 1;
        }
        if killing != bivector_combo {
            failures += 1;
        }
        // Triple agreement: the flows compose contravariantly, so the matrix
        // table is the negated bivector table.
        let negated: Vec<Vec<Vec<BigRational>>> = matrix
            .iter()
            .map(|row| {
                row.iter().map(|entry| entry.iter().map(|c| -c.clone()).collect()).collect()
            })
            .collect();
        if negated != spin || spin != killing {
            failures += 1;
        }
        checks.push(Check::exact(
            "algebras/structure-constants",
            "spin, matrix and Killing commutator tables agree entry-for-entry",
            300,
            failures,
        ));
    }

    // Group membership of exponentials.
    {
        let mut rng = cfg.rng(10);
        let mut worst: f64 = 0.0;
        let cases = 100;
        for _ in 0..cases {
            let mut chi = crate::matrix::Mat5::<f64>::zero();
            for i in 0..5 {
                for j in (i + 1)..5 {
                    let v = rng.gen_range(-0.3..0.3);
                    chi.entries[i][j] = v;
                    chi.entries[j][i] = -v;
                }
            }
            let lam = algebras::exp_so41(&chi).expect("antisymmetric");
            worst = worst.max(algebras::group_membership_residual(&lam));
        }
        checks.push(Check::float(
            "algebras/exponential-membership",
            "exponentials preserve the flat metric matrix",
            cases,
            worst,
            1e-9,
        ));
    }

    // Twisted adjoint: isometry and the double cover against the matrix
    // exponential (components transform by the transpose).
    {
        let mut rng = cfg.rng(11);
        let mut worst_iso: f64 = 0.0;
        let mut worst_cover: f64 = 0.0;
        let cases = 200;
        for _ in 0..cases {
            let i = rng.gen_range(0..5usize);
            let j = (i + rng.gen_range(1..5usize)) % 5;
            let (a, b) = (algebras::BULK_LABELS[i.min(j)], algebras::BULK_LABELS[i.max(j)]);
            let theta = rng.gen_range(-0.8..0.8);
            let u = algebras::spin_plane_rotor(a, b, theta);
            let x = rand_grade(bulk(), &mut rng, 1, 3).to_f64();
            let out = algebras::adjoint_action(&u, &x).expect("unit rotor");
            worst_iso = worst_iso.max(
                (out.scalar_product(&out) - x.scalar_product(&x)).abs(),
            );
            // Matched matrix parameters: chi_ab = theta lowered; raise both.
            let mut chi = crate::matrix::Mat5::<f64>::zero();
            let pa = bulk().position_of(a).unwrap();
            let pb = bulk().position_of(b).unwrap();
            let raised =
                theta * f64::from(eta_bulk(a) as i32) * f64::from(eta_bulk(b) as i32);
            chi.entries[pa][pb] = raised;
            chi.entries[pb][pa] = -raised;
            let lam = algebras::exp_so41(&chi).expect("antisymmetric");
            let components = algebras::vector_components(&x);
            let mapped = lam.transpose().mul_vec(&components);
            let expect = algebras::vector_components(&out);
            for k in 0..5 {
                worst_cover = worst_cover.max((mapped[k] - expect[k]).abs());
            }
        }
        checks.push(Check::float(
            "algebras/adjoint-isometry",
            "the twisted adjoint preserves scalar products",
            cases,
            worst_iso,
            1e-10,
        ));
        checks.push(Check::float(
            "algebras/double-cover",
            "plane rotors act on the coframe like the matrix exponential",
            cases,
            worst_cover,
            1e-9,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// The repr suite: matrix representation, dictionary, polar decomposition.
// ---------------------------------------------------------------------------

fn repr_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();

    // Ring homomorphism on random pairs, through both registered routes.
    {
        let mut rng = cfg.rng(20);
        let mut failures = 0;
        let cases = 500;
        for i in 0..cases {
            let sig = if i % 3 == 0 { minkowski() } else { bulk() };
            let a = rand_multivector(sig, &mut rng, 5);
            let b = rand_multivector(sig, &mut rng, 5);
            let lhs = repr::rho(&a.gp(&b));
            let rhs = repr::rho(&a).mul(&repr::rho(&b));
            if !lhs.sub(&rhs).is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "repr/homomorphism",
            "the matrix image of a product is the product of images",
            cases,
            failures,
        ));
    }

    checks.push(Check::exact(
        "repr/injectivity",
        "the 32 blade images are linearly independent over the rationals",
        1,
        usize::from(!repr::rho_is_injective()),
    ));

    // The six dictionary lines plus the layout bridge.
    {
        let mut rng = cfg.rng(21);
        let lines = repr::dictionary_lines();
        let mut worst: f64 = 0.0;
        let mut layout_failures = 0;
        let cases = 1000;
        for _ in 0..cases {
            let psi = rand_even(minkowski(), &mut rng, 5);
            for line in &lines {
                worst = worst.max((line.check)(&psi));
            }
            if repr::even_to_column(&psi) != repr::rho_first_column(&psi) {
                layout_failures += 1;
            }
            // Column round trip: parameters -> column -> even -> column.
            let m: [BigRational; 4] = std::array::from_fn(|_| rand_rational(&mut rng));
            let n: [BigRational; 4] = std::array::from_fn(|_| rand_rational(&mut rng));
            let column = repr::ColumnSpinor::from_parameters(&m, &n);
            if repr::even_to_column(&repr::column_to_even(&column)) != column {
                layout_failures += 1;
            }
        }
        checks.push(Check::float(
            "repr/dictionary",
            "all six column-spinor translation lines hold",
            cases * lines.len(),
            worst,
            cfg.exact_tol(),
        ));
        checks.push(Check::exact(
            "repr/column-layout",
            "the component layout is the first column of the matrix image and round-trips",
            cases * 2,
            layout_failures,
        ));
    }

    // Polar decomposition round trip and the singular fixture.
    {
        let mut rng = cfg.rng(22);
        let mut worst: f64 = 0.0;
        let mut cases = 0;
        for _ in 0..500 {
            let psi = rand_even(minkowski(), &mut rng, 5).to_f64();
            match repr::takabayasi_decompose(&psi) {
                Ok(data) => {
                    cases += 1;
                    worst = worst.max(data.reconstruct().distance(&psi));
                }
                Err(_) => {} // randomly singular: skip
            }
        }
        let singular_ok =
            matches!(repr::takabayasi_decompose(&repr::singular_even_fixture()), Err(_));
        checks.push(Check::float(
            "repr/polar-roundtrip",
            "density, duality angle and rotor reconstruct the element",
            cases,
            worst,
            1e-10,
        ));
        checks.push(Check::exact(
            "repr/polar-singular",
            "null even elements are rejected by the decomposition",
            1,
            usize::from(!singular_ok),
        ));
    }

    // Generalized bulk spinors.
    {
        let mut rng = cfg.rng(23);
        let f = algebras::f41::<BigRational>();
        let mut failures = 0;
        let cases = 200;
        for _ in 0..cases {
            // Ideal membership: Psi f = Psi for Psi = psi f.
            let psi = rand_even(bulk(), &mut rng, 5);
            let cap = repr::ideal_spinor(&psi);
            if cap.gp(&f) != cap {
                failures += 1;
            }
            // Half-projector decomposition: Z = W (1+Gamma^0)/2 has its
            // normal-direction part equal to the tangent part times Gamma^0.
            let w = rand_even(bulk(), &mut rng, 5);
            let eplus = (Multivector::one(bulk()) + algebras::big_gamma(0))
                .scale(&rat(1, 2));
            let z = w.gp(&eplus);
            let z0 = repr::gamma_even_part(&z);
            let z1 = repr::gamma_odd_part(&z);
            if z1 != z0.gp(&algebras::big_gamma(0)) {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "repr/generalized-spinors",
            "ideal spinors absorb the projector; half-projector parts factor",
            cases * 2,
            failures,
        ));
    }

    // Paired-product normalization of the bulk ansatz: constructed instances
    // yield a scalar, and a generic instance shows the link is needed.
    {
        let mut rng = cfg.rng(24);
        let mut failures = 0;
        let cases = 100;
        for _ in 0..cases {
            let scalar_psi = Multivector::scalar(bulk(), rand_nonzero_rational(&mut rng));
            let xi: [BigRational; 4] = std::array::from_fn(|i| {
                if i == 0 {
                    BigRational::zero()
                } else {
                    rand_rational(&mut rng)
                }
            });
            let p = repr::hestenes_paired_product(&scalar_psi, &xi);
            if !p.grade_select(|g| g != 0).is_zero() {
                failures += 1;
            }
            let expect = -(xi[1].clone() * xi[1].clone()
                + xi[2].clone() * xi[2].clone()
                + xi[3].clone() * xi[3].clone());
            if p.scalar_part() != expect {
                failures += 1;
            }
        }
        // A spatial-even element with no normal components also closes.
        let pauli_even = Multivector::one(bulk())
            + algebras::big_gamma::<BigRational>(1).gp(&algebras::big_gamma(2));
        let zero_xi: [BigRational; 4] = std::array::from_fn(|_| BigRational::zero());
        if !repr::hestenes_paired_product(&pauli_even, &zero_xi).is_zero() {
            failures += 1;
        }
        // The link has content: a plane component out of the xi direction
        // leaves higher-grade residue.
        let generic = algebras::big_gamma::<BigRational>(2).gp(&algebras::big_gamma(3));
        let ones: [BigRational; 4] =
            [BigRational::zero(), rat(1, 1), BigRational::zero(), BigRational::zero()];
        let p = repr::hestenes_paired_product(&generic, &ones);
        if p.grade_select(|g| g != 0).is_zero() {
            failures += 1;
        }
        checks.push(Check::exact(
            "repr/paired-product-link",
            "linked ansatz instances close onto a scalar; unlinked ones do not",
            cases * 2 + 2,
            failures,
        ));
    }

    // Frame-change spot check: representatives transform by right
    // multiplication, and the current transforms covariantly.
    {
        let mut rng = cfg.rng(25);
        let mut worst: f64 = 0.0;
        let cases = 100;
        for _ in 0..cases {
            let psi = rand_even(minkowski(), &mut rng, 4).to_f64();
            let b = rand_grade(minkowski(), &mut rng, 2, 2).to_f64().scale(&0.2);
            let u = b.exp_bivector(40).expect("bivector");
            let transformed = psi.gp(&u);
            worst = worst.max(transformed.gp(&u.rev()).distance(&psi));
            let g0 = algebras::gamma::<f64>(0);
            let v_frame = transformed.gp(&g0).gp(&transformed.rev());
            let expect = psi.gp(&u.gp(&g0).gp(&u.rev())).gp(&psi.rev());
            worst = worst.max(v_frame.distance(&expect));
        }
        checks.push(Check::float(
            "repr/frame-change",
            "right multiplication by a rotor is undone by its reverse",
            cases,
            worst,
            1e-10,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// The geometry suite: chart, metric, Killing fields, grid.
// ---------------------------------------------------------------------------

fn geometry_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();

    // Chart round trip, pseudo-sphere residual and conformal factor on 1e4
    // random float points.
    {
        let mut rng = cfg.rng(30);
        let mut worst_rt: f64 = 0.0;
        let mut worst_sphere: f64 = 0.0;
        let mut worst_metric: f64 = 0.0;
        let cases = 10_000;
        for i in 0..cases {
            let ell = if i % 2 == 0 { 1.0 } else { 10.0 };
            let x: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-0.8..0.8) * ell);
            let p = geometry::embed(&x, &ell).expect("inside the absolute");
            worst_sphere = worst_sphere.max(
                geometry::pseudo_sphere_residual(&p.bulk, &ell).abs() / (ell * ell),
            );
            let back = geometry::unembed(&p.bulk, &ell).expect("off the pole");
            for mu in 0..4 {
                worst_rt = worst_rt.max((back[mu] - x[mu]).abs());
            }
            worst_metric = worst_metric.max(geometry::conformal_flatness_residual(&p));
        }
        checks.push(Check::float(
            "geometry/chart-roundtrip",
            "chart inversion undoes the embedding",
            cases,
            worst_rt,
            1e-12,
        ));
        checks.push(Check::float(
            "geometry/pseudo-sphere-residual",
            "embedded points satisfy the quadric equation",
            cases,
            worst_sphere,
            1e-12,
        ));
        checks.push(Check::float(
            "geometry/conformal-factor",
            "the pullback metric is the conformal factor times the flat metric",
            cases,
            worst_metric,
            1e-10,
        ));
    }

    // Exact chart spot checks.
    {
        let mut rng = cfg.rng(31);
        let mut failures = 0;
        let cases = 50;
        for _ in 0..cases {
            let x: [BigRational; 4] = std::array::from_fn(|_| {
                rat(rng.gen_range(-3i64..=3), rng.gen_range(4i64..=9))
            });
            let ell = rat(rng.gen_range(1i64..=10), 1);
            let p = geometry::embed(&x, &ell).expect("inside the absolute");
            if !geometry::pseudo_sphere_residual(&p.bulk, &ell).is_zero() {
                failures += 1;
            }
            if geometry::unembed(&p.bulk, &ell).expect("off the pole") != x {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "geometry/chart-exact",
            "rational chart data round-trips exactly",
            cases * 2,
            failures,
        ));
    }

    // Killing equation, tangency and the bracket table (all polynomial).
    {
        let mut failures = 0;
        for (a, b) in algebras::generator_pairs() {
            let xi = geometry::killing_field(a, b);
            for row in geometry::killing_equation_residual(&xi) {
                for entry in row {
                    if !entry.is_zero() {
                        failures += 1;
                    }
                }
            }
            if !geometry::tangency_residual(&xi).is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "geometry/killing-property",
            "symmetrized derivatives vanish and flows stay on the quadric",
            10 * 26,
            failures,
        ));
        let table_ok =
            geometry::killing_structure_table() == algebras::eta_combination_constants(-1);
        checks.push(Check::exact(
            "geometry/killing-brackets",
            "vector-field brackets close with the bivector structure constants",
            100,
            usize::from(!table_ok),
        ));
    }

    // Region flags of the grid samples.
    {
        let csv = geometry::emit_chart_grid(1.0, 3.0, 3, false);
        let mut failures = 0;
        let mut cases = 0;
        for line in csv.lines().skip(1) {
            cases += 1;
            let mut parts = line.split(',');
            let t: f64 = parts.next().unwrap().parse().unwrap();
            let x1: f64 = parts.next().unwrap().parse().unwrap();
            let tag = parts.next().unwrap();
            if geometry::classify(t, x1, 1.0).as_str() != tag {
                failures += 1;
            }
        }
        if geometry::classify(2.0, 0.0, 1.0) != geometry::Region::Absolute {
            failures += 1;
        }
        checks.push(Check::exact(
            "geometry/grid-regions",
            "grid rows carry the correct side of the absolute",
            cases + 1,
            failures,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// The operators suite.
// ---------------------------------------------------------------------------

fn operators_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let params = OperatorParams::new(cfg.ell.max(1.0), cfg.mass.max(0.5));

    // Operator commutators close on the derivations with the eta structure.
    {
        let mut rng = cfg.rng(40);
        let mut failures = 0;
        let mut cases = 0;
        let pairs = algebras::generator_pairs();
        for _ in 0..50 {
            let phi: BulkField<BigRational> = rand_field(bulk(), &mut rng, 3, 2);
            let inner: Vec<BulkField<BigRational>> =
                pairs.iter().map(|&(a, b)| fields::angular_op(&phi, a, b)).collect();
            for (pi, &(a, b)) in pairs.iter().enumerate() {
                for (qi, &(c, d)) in pairs.iter().enumerate() {
                    cases += 1;
                    let lhs = fields::angular_op(&inner[qi], a, b)
                        - fields::angular_op(&inner[pi], c, d);
                    let eta = |x: u8, y: u8| if x == y { eta_bulk(x) } else { 0 };
                    let mut rhs: BulkField<BigRational> = Multivector::zero(bulk());
                    let mut add = |coeff: i64, x: u8, y: u8| {
                        if coeff == 0 || x == y {
                            return;
                        }
                        let t = fields::derivation_op(&phi, x, y);
                        rhs = rhs.clone() + if coeff == 1 { t } else { -t };
                    };
                    add(eta(a, c), b, d);
                    add(eta(b, d), a, c);
                    add(-eta(b, c), a, d);
                    add(-eta(a, d), b, c);
                    if !(lhs - rhs).is_zero() {
                        failures += 1;
                    }
                }
            }
        }
        checks.push(Check::exact(
            "operators/angular-commutators",
            "angular operators close on the derivations with the eta structure",
            cases,
            failures,
        ));
    }

    // Graded decomposition of the squared operator, with its first-order
    // cross term pinned to the closed form.
    {
        let mut rng = cfg.rng(41);
        let mut failures = 0;
        let cases = 25;
        for _ in 0..cases {
            let phi: BulkField<BigRational> = rand_field(bulk(), &mut rng, 3, 2);
            let split = fields::quadratic_split(&phi);
            if split.total() != fields::l_total(&fields::l_total(&phi)) {
                failures += 1;
            }
            if split.cross != fields::QuadraticSplit::cross_closed_form(&phi) {
                failures += 1;
            }
            if split.contraction != fields::contraction_component_form(&phi) {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "operators/quadratic-split",
            "graded parts reassemble the square; the cross term is 3 L(phi) E2E1",
            cases * 3,
            failures,
        ));
    }

    // Telescoping factorization of the linear wave operator.
    {
        let mut rng = cfg.rng(42);
        let mut worst: f64 = 0.0;
        let cases = 50;
        for _ in 0..cases {
            let phi = fields::field_to_f64(&rand_field::<5>(bulk(), &mut rng, 3, 2));
            let (lhs, rhs) = fields::telescoping_sides(&phi, &params).expect("plus branch");
            worst = worst.max(fields::field_max_abs(&(lhs - rhs)));
        }
        checks.push(Check::float(
            "operators/telescoping",
            "the two linear factors compose to the quadratic form",
            cases,
            worst,
            1e-9,
        ));
    }

    // Quartic invariant identity on grade-4 elements.
    {
        let mut rng = cfg.rng(43);
        let mut failures = 0;
        let cases = 500;
        for i in 0..cases {
            let f = rand_grade(bulk(), &mut rng, 4, 3);
            let ell = if i % 2 == 0 { rat(1, 1) } else { rat(3, 1) };
            if !fields::casimir_quartic_check(&f, &ell).expect("grade 4") {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "operators/quartic-invariant",
            "the grade-4 square equals its contraction and the dual form",
            cases,
            failures,
        ));
    }

    // Factor composition matches the fourth-order residual.
    {
        let mut rng = cfg.rng(44);
        let mut worst: f64 = 0.0;
        let cases = 25;
        for _ in 0..cases {
            let phi = fields::field_to_f64(&rand_field::<5>(bulk(), &mut rng, 3, 2));
            let lhs = fields::factor_composition(&phi, &params);
            let rhs = fields::fourth_order_residual(&phi, &params);
            worst = worst.max(fields::field_max_abs(&(lhs - rhs)));
        }
        checks.push(Check::float(
            "operators/factor-composition",
            "the quadratic factors compose to the fourth-order operator",
            cases,
            worst,
            1e-9,
        ));
    }

    // Casimir chain decomposition.
    {
        let mut rng = cfg.rng(45);
        let mut worst: f64 = 0.0;
        let cases = 25;
        for _ in 0..cases {
            let phi = fields::field_to_f64(&rand_field::<5>(bulk(), &mut rng, 3, 2));
            let chain = fields::casimir_chain(&phi, &params);
            worst = worst.max(chain.decomposition_residual());
        }
        checks.push(Check::float(
            "operators/casimir-chain",
            "the chain endpoint decomposes into the two defects plus the cross part",
            cases,
            worst,
            1e-9,
        ));
    }

    // Equivalence of the two wave-equation routes.
    {
        let mut rng = cfg.rng(46);
        let mut worst_inv: f64 = 0.0;
        let mut worst_agree: f64 = 0.0;
        let mut worst_transport: f64 = 0.0;
        let configs = 20;
        for _ in 0..configs {
            // A unit plane: rotate E^1E^0 by a random rotor.
            let seed_plane = e_up::<f64>(1).gp(&e_up(0));
            let b = rand_grade(bulk(), &mut rng, 2, 2).to_f64().scale(&0.15);
            let r = b.exp_bivector(40).expect("bivector");
            let plane = r.gp(&seed_plane).gp(&r.rev());
            let mut z = Poly::<f64, 5>::constant(0.0);
            for var in 0..5 {
                z = z + Poly::var(var).scale(&rng.gen_range(-0.1..0.1));
            }
            let rho = rng.gen_range(0.5..2.0);
            let rotor = fields::RotorField::new(rho, plane, z).expect("unit plane");
            let samples: Vec<[f64; 5]> = (0..20)
                .map(|_| std::array::from_fn(|_| rng.gen_range(-0.5..0.5)))
                .collect();
            let report =
                fields::equivalence_report(&rotor, &params, &samples).expect("plus branch");
            worst_inv = worst_inv.max(report.inversion_residual);
            worst_transport = worst_transport.max(report.transport_residual);
            worst_agree = worst_agree.max(report.agreement_residual);
        }
        checks.push(Check::float(
            "operators/derivative-inversion",
            "the closed-form inverse differentiates consistently",
            configs * 20,
            worst_inv,
            1e-11,
        ));
        checks.push(Check::float(
            "operators/frame-transport",
            "conjugated frames round-trip through the rotor",
            configs * 20,
            worst_transport,
            1e-10,
        ));
        checks.push(Check::float(
            "operators/wave-equivalence",
            "the transported residual conjugates onto the fixed-frame residual",
            configs * 20,
            worst_agree,
            1e-9,
        ));
    }

    // Classical identities.
    {
        let mut rng = cfg.rng(47);
        let mut failures = 0;
        let mut cases = 0;
        while cases < 500 {
            let x: [BigRational; 5] = std::array::from_fn(|_| rand_rational(&mut rng));
            let p: [BigRational; 5] = std::array::from_fn(|_| rand_rational(&mut rng));
            match fields::ClassicalState::new(&x, &p) {
                Ok(state) => {
                    cases += 1;
                    if !state.identity_failures().is_empty() {
                        failures += 1;
                    }
                }
                Err(_) => {} // spacelike-dominated draw, try again
            }
        }
        checks.push(Check::exact(
            "operators/classical-identities",
            "orthogonal position and momentum satisfy the biform identities",
            cases,
            failures,
        ));
    }

    // Chart operators against the bulk ones through the chain rule.
    {
        let mut rng = cfg.rng(48);
        let mut failures = 0;
        let cases = 20;
        for _ in 0..cases {
            let phi: BulkField<BigRational> = rand_field(bulk(), &mut rng, 3, 2);
            let x: [BigRational; 4] = std::array::from_fn(|_| {
                rat(rng.gen_range(-2i64..=2), rng.gen_range(3i64..=9))
            });
            let ell = rat(rng.gen_range(1i64..=4), 1);
            let worst = fields::chart_bulk_agreement(&phi, &x, &ell).expect("regular point");
            if !worst.is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "operators/chart-bulk-agreement",
            "chart component operators match the bulk ones through the chain rule",
            cases,
            failures,
        ));
    }

    // Constrained ansatz: normalization and deliberate non-tangency.
    {
        let ansatz = fields::ConstrainedAnsatz::new(
            fields::lift(&Multivector::one(bulk())),
            10.0,
        );
        let mut worst: f64 = 0.0;
        let mut tangent_failures = 0;
        let samples = [[1.0, 0.2, -0.3, 0.1], [2.0, 0.5, 0.5, -0.5], [1.5, 0.0, 0.3, 0.0]];
        for x in &samples {
            worst = worst.max(ansatz.normalization_residual(x).expect("timelike").abs());
            if ansatz.is_tangent_at(x).expect("timelike") {
                tangent_failures += 1;
            }
        }
        checks.push(Check::float(
            "operators/ansatz-normalization",
            "the constrained components have unit Minkowski square",
            samples.len(),
            worst,
            1e-10,
        ));
        checks.push(Check::exact(
            "operators/ansatz-normal-part",
            "the constrained ansatz deliberately carries the normal direction",
            samples.len(),
            tangent_failures,
        ));
    }

    // Flat heuristic checks: currents, duality obstruction, residual routes.
    {
        let mut rng = cfg.rng(49);
        let mut failures = 0;
        let cases = 200;
        for _ in 0..cases {
            let psi = rand_even(minkowski(), &mut rng, 5);
            let v = fields::current(&psi);
            if !(v.is_zero() || v.is_homogeneous(1)) {
                failures += 1;
            }
            let v_sq = v.gp(&v);
            if !v_sq.grade_select(|g| g != 0).is_zero() {
                failures += 1;
            }
            let norm = psi.gp(&psi.rev());
            let s = norm.scalar_part();
            let p = fields::duality_obstruction(&psi);
            if v_sq.scalar_part() != s.clone() * s + p.clone() * p {
                failures += 1;
            }
        }
        // Off-angle obstruction: a pseudoscalar admixture blocks transport.
        let tau = Multivector::<BigRational>::pseudoscalar(minkowski());
        let off = Multivector::one(minkowski()) + tau.scale(&rat(1, 3));
        if fields::transport_defect(&off).grade(3).expect("valid grade").is_zero() {
            failures += 1;
        }
        let clean = Multivector::one(minkowski())
            + algebras::sigma::<BigRational>(3).scale(&rat(1, 2));
        if !fields::transport_defect(&clean).is_zero() {
            failures += 1;
        }
        checks.push(Check::exact(
            "operators/current-grades",
            "even-element currents are grade-1 with nonnegative square",
            cases * 3 + 2,
            failures,
        ));
    }

    {
        let mut rng = cfg.rng(50);
        let mut failures = 0;
        let mut cases = 0;
        for _ in 0..50 {
            let psi: ChartField<BigRational> = rand_even_field(minkowski(), &mut rng, 3, 2);
            let x: [BigRational; 4] = std::array::from_fn(|_| rand_rational(&mut rng));
            let m = rand_rational(&mut rng);
            match fields::residual_routes_agree(&psi, &m, &x) {
                Ok(ok) => {
                    cases += 1;
                    if !ok {
                        failures += 1;
                    }
                }
                Err(_) => {} // singular sample, skip
            }
        }
        checks.push(Check::exact(
            "operators/residual-routes",
            "the even-element residual translates onto the column residual",
            cases,
            failures,
        ));
    }

    // Idempotent projection of the flat equation.
    {
        let mut rng = cfg.rng(51);
        let mut failures = 0;
        let cases = 25;
        for _ in 0..cases {
            let psi: ChartField<BigRational> = rand_even_field(minkowski(), &mut rng, 3, 2);
            let (lhs, rhs) = fields::idempotent_projection_sides(&psi, rand_rational(&mut rng));
            if !(lhs - rhs).is_zero() {
                failures += 1;
            }
        }
        checks.push(Check::exact(
            "operators/idempotent-projection",
            "right projection turns the flat equation into its ideal form",
            cases,
            failures,
        ));
    }

    checks
}

// ---------------------------------------------------------------------------
// The limit suite.
// ---------------------------------------------------------------------------

pub fn default_radius_ladder() -> Vec<f64> {
    vec![10.0, 100.0, 1000.0, 10_000.0]
}

fn limit_suite(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    let mut rng = cfg.rng(60);

    // A family of low-degree even chart fields.
    let mut family: Vec<ChartField<f64>> = Vec::new();
    for _ in 0..3 {
        family.push(fields::field_to_f64(&rand_even_field::<4>(bulk(), &mut rng, 3, 2)));
    }
    let samples: Vec<[f64; 4]> =
        (0..6).map(|_| std::array::from_fn(|_| rng.gen_range(-1.0..1.0))).collect();
    let ladder = default_radius_ladder();
    let report = fields::limit_sweep(&family, cfg.mass.max(0.5), &ladder, &samples)
        .expect("valid ladder");
    let mut table = String::from("| l | D(l) |\n|---:|---:|\n");
    for (ell, d) in report.ells.iter().zip(&report.deviations) {
        table.push_str(&format!("| {ell} | {d:.6e} |\n"));
    }
    table.push_str(&format!("\nfitted log-log slope: {:.4}\n", report.slope));
    checks.push(
        Check::float(
            "limit/deviation-slope",
            "the chart residual approaches the flat residual at least like 1/l",
            family.len() * samples.len() * ladder.len(),
            if report.slope <= -0.8 { 0.0 } else { report.slope + 0.8 },
            0.0,
        )
        .with_detail(table),
    );
    checks.push(Check::exact(
        "limit/deviation-monotone",
        "the deviation decreases strictly along the radius ladder",
        ladder.len(),
        usize::from(!report.strictly_decreasing),
    ));

    // The trivial family: constants with zero mass deviate by nothing.
    let trivial = vec![fields::lift(&Multivector::one(bulk()))];
    let zero_report = fields::limit_sweep(&trivial, 0.0, &ladder, &samples)
        .expect("valid ladder");
    checks.push(Check::float(
        "limit/trivial-family",
        "constant fields with zero mass have identically zero deviation",
        ladder.len(),
        zero_report.deviations.iter().cloned().fold(0.0, f64::max),
        0.0,
    ));

    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse_by_name() {
        assert!(matches!("ga".parse::<Suite>(), Ok(Suite::Ga)));
        assert!(matches!("limit".parse::<Suite>(), Ok(Suite::Limit)));
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn seeded_streams_are_reproducible() {
        let cfg = SuiteConfig::default();
        let mut a = cfg.rng(9);
        let mut b = cfg.rng(9);
        assert_eq!(rand_rational(&mut a), rand_rational(&mut b));
    }
}
