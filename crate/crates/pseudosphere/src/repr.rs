//! Matrix representation of the bulk algebra on C(4) and the column-spinor
//! dictionary.
//!
//! The representation sends `E^mu -> i g^mu g5` and `E^4 -> i g5`, where
//! `g^mu` are the standard Dirac matrices; all entries lie in {0, +-1, +-i},
//! so the whole dictionary runs in exact Gaussian-rational arithmetic. The
//! assignment is validated by the generator-relation and homomorphism tests,
//! not assumed.

use num::complex::Complex;
use num::traits::{One, Zero};
use num::BigRational;

use crate::algebras::{gamma5, sigma};
use crate::error::{Error, Result};
use crate::matrix::{crat, rational_rank, Crat, MatC4};
use crate::multivector::Multivector;
use crate::scalar::NumericScalar;
use crate::signature::{bulk, minkowski, Signature};

use std::sync::{Arc, OnceLock};

type Mv = Multivector<BigRational>;
type Mat = MatC4<BigRational>;

/// Standard-representation Dirac matrix `g^mu` (entries exact).
pub fn dirac_gamma(mu: u8) -> Mat {
    let o = || Complex::<BigRational>::zero();
    let p = || Complex::<BigRational>::one();
    let n = || -Complex::<BigRational>::one();
    let pi = || crat(0, 1);
    let ni = || crat(0, -1);
    let rows = match mu {
        0 => [
            [p(), o(), o(), o()],
            [o(), p(), o(), o()],
            [o(), o(), n(), o()],
            [o(), o(), o(), n()],
        ],
        1 => [
            [o(), o(), o(), p()],
            [o(), o(), p(), o()],
            [o(), n(), o(), o()],
            [n(), o(), o(), o()],
        ],
        2 => [
            [o(), o(), o(), ni()],
            [o(), o(), pi(), o()],
            [o(), pi(), o(), o()],
            [ni(), o(), o(), o()],
        ],
        3 => [
            [o(), o(), p(), o()],
            [o(), o(), o(), n()],
            [n(), o(), o(), o()],
            [o(), p(), o(), o()],
        ],
        _ => panic!("gamma index out of range"),
    };
    Mat::from_rows(rows)
}

/// `g_0 g_1 g_2 g_3` as a matrix (the image of the grade-4 element).
pub fn dirac_gamma5() -> Mat {
    let d = |mu: u8| {
        let g = dirac_gamma(mu);
        if mu == 0 {
            g
        } else {
            g.scale(&crat(-1, 0))
        }
    };
    d(0).mul(&d(1)).mul(&d(2)).mul(&d(3))
}

/// The chirality matrix `i g^0 g^1 g^2 g^3` (off-diagonal identity blocks).
/// This is the matrix whose left action matches right-multiplication by
/// `sigma_3` on the even side.
pub fn chirality_matrix() -> Mat {
    dirac_gamma(0)
        .mul(&dirac_gamma(1))
        .mul(&dirac_gamma(2))
        .mul(&dirac_gamma(3))
        .scale(&crat(0, 1))
}

fn rho_generator_images() -> &'static [Mat; 5] {
    static IMAGES: OnceLock<[Mat; 5]> = OnceLock::new();
    IMAGES.get_or_init(|| {
        let i = crat(0, 1);
        let g5 = dirac_gamma5();
        // Label order (1,2,3,4,0): E^mu -> i g^mu g5 for mu in {1,2,3,0},
        // E^4 -> i g5.
        [
            dirac_gamma(1).mul(&g5).scale(&i),
            dirac_gamma(2).mul(&g5).scale(&i),
            dirac_gamma(3).mul(&g5).scale(&i),
            g5.scale(&i),
            dirac_gamma(0).mul(&g5).scale(&i),
        ]
    })
}

fn minkowski_generator_images() -> &'static [Mat; 4] {
    static IMAGES: OnceLock<[Mat; 4]> = OnceLock::new();
    IMAGES
        .get_or_init(|| [dirac_gamma(0), dirac_gamma(1), dirac_gamma(2), dirac_gamma(3)])
}

fn blade_images(sig: &Arc<Signature>) -> &'static Vec<Mat> {
    static BULK: OnceLock<Vec<Mat>> = OnceLock::new();
    static MINK: OnceLock<Vec<Mat>> = OnceLock::new();
    let build = |gens: &[Mat]| -> Vec<Mat> {
        let count = 1usize << gens.len();
        (0..count)
            .map(|mask| {
                let mut acc = Mat::identity();
                for (i, g) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        acc = acc.mul(g);
                    }
                }
                acc
            })
            .collect()
    };
    if sig == bulk() {
        BULK.get_or_init(|| build(rho_generator_images()))
    } else if sig == minkowski() {
        MINK.get_or_init(|| build(minkowski_generator_images()))
    } else {
        panic!("no matrix representation registered for {}", sig.name());
    }
}

/// Linear ring homomorphism into C(4) for bulk or spacetime elements.
pub fn rho(a: &Mv) -> Mat {
    let images = blade_images(a.signature());
    let mut acc = Mat::zero();
    for (mask, c) in a.terms() {
        let scalar = Complex::new(c.clone(), BigRational::zero());
        acc = acc.add(&images[mask as usize].scale(&scalar));
    }
    acc
}

/// The images of all basis blades are linearly independent over the
/// rationals; the representation is a linear isomorphism onto C(4).
pub fn rho_is_injective() -> bool {
    let images = blade_images(bulk()).clone();
    rational_rank(&images) == 32
}

// ---------------------------------------------------------------------------
// Column spinors.
// ---------------------------------------------------------------------------

/// A Dirac column spinor with exact Gaussian-rational components.
#[derive(Clone, PartialEq, Debug)]
pub struct ColumnSpinor {
    pub components: [Crat; 4],
}

impl ColumnSpinor {
    pub fn zero() -> Self {
        ColumnSpinor { components: std::array::from_fn(|_| Complex::zero()) }
    }

    /// Build from the eight real parameters (m^0..m^3, n^0..n^3): the layout
    /// is (m0+i m3, -m2+i m1, n0+i n3, -n2+i n1).
    pub fn from_parameters(m: &[BigRational; 4], n: &[BigRational; 4]) -> Self {
        let c = |re: &BigRational, im: &BigRational| Complex::new(re.clone(), im.clone());
        ColumnSpinor {
            components: [
                c(&m[0], &m[3]),
                c(&(-m[2].clone()), &m[1]),
                c(&n[0], &n[3]),
                c(&(-n[2].clone()), &n[1]),
            ],
        }
    }

    pub fn parameters(&self) -> ([BigRational; 4], [BigRational; 4]) {
        let m = [
            self.components[0].re.clone(),
            self.components[1].im.clone(),
            -self.components[1].re.clone(),
            self.components[0].im.clone(),
        ];
        let n = [
            self.components[2].re.clone(),
            self.components[3].im.clone(),
            -self.components[3].re.clone(),
            self.components[2].im.clone(),
        ];
        (m, n)
    }

    pub fn scale(&self, s: &Crat) -> Self {
        ColumnSpinor {
            components: std::array::from_fn(|i| self.components[i].clone() * s.clone()),
        }
    }

    pub fn conj(&self) -> Self {
        ColumnSpinor { components: std::array::from_fn(|i| self.components[i].conj()) }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        ColumnSpinor {
            components: std::array::from_fn(|i| {
                self.components[i].clone() - rhs.components[i].clone()
            }),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|c| c.is_zero())
    }

    /// JSON value: `[re, im]` pairs as exact strings.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.components
                .iter()
                .map(|c| serde_json::json!([c.re.to_string(), c.im.to_string()]))
                .collect(),
        )
    }
}

/// The even-subalgebra basis paired with the column layout: `psi = m^0 +
/// m^k i sigma_k + (n^0 + n^k i sigma_k) sigma_3`.
fn even_basis() -> &'static [Mv; 8] {
    static BASIS: OnceLock<[Mv; 8]> = OnceLock::new();
    BASIS.get_or_init(|| {
        let one = Mv::one(minkowski());
        let i = gamma5::<BigRational>();
        let s3 = sigma::<BigRational>(3);
        let m = |k: u8| i.gp(&sigma(k));
        [
            one.clone(),
            m(1),
            m(2),
            m(3),
            s3.clone(),
            m(1).gp(&s3),
            m(2).gp(&s3),
            m(3).gp(&s3),
        ]
    })
}

/// Even spacetime element from a column spinor; exact bijection.
pub fn column_to_even(psi: &ColumnSpinor) -> Mv {
    let (m, n) = psi.parameters();
    let basis = even_basis();
    let mut acc = Mv::zero(minkowski());
    for k in 0..4 {
        acc = acc + basis[k].scale(&m[k]) + basis[k + 4].scale(&n[k]);
    }
    acc
}

/// Column spinor from an even spacetime element; inverse of
/// [`column_to_even`]. Panics if the element is not even.
pub fn even_to_column(psi: &Mv) -> ColumnSpinor {
    assert!(
        psi.odd_part().is_zero(),
        "column spinors correspond to even elements only"
    );
    let basis = even_basis();
    let mut m = [BigRational::zero(), BigRational::zero(), BigRational::zero(), BigRational::zero()];
    let mut n = m.clone();
    // Each basis element is a single blade up to sign, so extraction is a
    // signed coefficient read-off.
    let mut rest = psi.clone();
    for k in 0..4 {
        let (mask, lead) = basis[k].terms().next().expect("single blade");
        m[k] = psi.coeff(mask) / lead.clone();
        let (mask, lead) = basis[k + 4].terms().next().expect("single blade");
        n[k] = psi.coeff(mask) / lead.clone();
        rest = rest - basis[k].scale(&m[k]) - basis[k + 4].scale(&n[k]);
    }
    assert!(rest.is_zero(), "even element outside the spinor basis span");
    ColumnSpinor::from_parameters(&m, &n)
}

/// First column of the matrix image: the ideal picture of the same spinor.
pub fn rho_first_column(psi: &Mv) -> ColumnSpinor {
    let mat = rho(psi);
    ColumnSpinor { components: std::array::from_fn(|i| mat.entries[i][0].clone()) }
}

// ---------------------------------------------------------------------------
// Dictionary between column-spinor operations and even-element operations.
// ---------------------------------------------------------------------------

/// One translation line: a column-side operation and the matching
/// even-element operation.
pub struct DictionaryLine {
    pub name: &'static str,
    /// Residual of the line on the given spinor; zero when the line holds.
    pub check: fn(&Mv) -> f64,
}

fn col_op_matches(psi: &Mv, col_side: impl Fn(&ColumnSpinor) -> ColumnSpinor, mv_side: &Mv) -> f64 {
    let lhs = col_op_apply(psi, col_side);
    let rhs = even_to_column(mv_side);
    let d = lhs.sub(&rhs);
    if d.is_zero() {
        0.0
    } else {
        d.components
            .iter()
            .map(|c| c.re.to_f64().abs().max(c.im.to_f64().abs()))
            .fold(0.0, f64::max)
    }
}

fn col_op_apply(psi: &Mv, col_side: impl Fn(&ColumnSpinor) -> ColumnSpinor) -> ColumnSpinor {
    col_side(&even_to_column(psi))
}

fn mat_residual(lhs: &Mat, rhs: &Mat) -> f64 {
    let d = lhs.sub(rhs);
    if d.is_zero() {
        return 0.0;
    }
    d.entries
        .iter()
        .flatten()
        .map(|c| c.re.to_f64().abs().max(c.im.to_f64().abs()))
        .fold(0.0, f64::max)
}

/// The six translation lines. Lines 1-3 act on columns (they use the
/// idempotent's invariant column); lines 4-6 are matrix identities.
pub fn dictionary_lines() -> Vec<DictionaryLine> {
    vec![
        DictionaryLine {
            name: "vector-action",
            check: |psi| {
                // g_mu psi  <->  gamma_mu psi gamma_0, for every mu.
                (0..4u8)
                    .map(|mu| {
                        let mv = crate::algebras::gamma_down::<BigRational>(mu)
                            .gp(psi)
                            .gp(&crate::algebras::gamma_down(0));
                        col_op_matches(
                            psi,
                            |c| ColumnSpinor {
                                components: rho(&crate::algebras::gamma_down::<BigRational>(mu))
                                    .mul_col(&c.components),
                            },
                            &mv,
                        )
                    })
                    .fold(0.0, f64::max)
            },
        },
        DictionaryLine {
            name: "imaginary-unit",
            check: |psi| {
                // i psi  <->  psi gamma_2 gamma_1.
                let g21 = crate::algebras::gamma_down::<BigRational>(2)
                    .gp(&crate::algebras::gamma_down(1));
                let mv = psi.gp(&g21);
                col_op_matches(psi, |c| c.scale(&crat(0, 1)), &mv)
            },
        },
        DictionaryLine {
            name: "chiral-imaginary",
            check: |psi| {
                // i g5 psi  <->  psi sigma_3 (chirality acting on columns).
                let mv = psi.gp(&sigma(3));
                col_op_matches(
                    psi,
                    |c| ColumnSpinor { components: chirality_matrix().mul_col(&c.components) },
                    &mv,
                )
            },
        },
        DictionaryLine {
            name: "dirac-adjoint",
            check: |psi| {
                // psi-bar = psi^dagger g^0  <->  rev(psi):
                // rho(psi)^dagger g0 = g0 rho(rev psi).
                let lhs = rho(psi).dagger().mul(&dirac_gamma(0));
                let rhs = dirac_gamma(0).mul(&rho(&psi.rev()));
                mat_residual(&lhs, &rhs)
            },
        },
        DictionaryLine {
            name: "hermitian-adjoint",
            check: |psi| {
                // psi^dagger  <->  gamma_0 rev(psi) gamma_0.
                let g0 = crate::algebras::gamma_down::<BigRational>(0);
                let lhs = rho(psi).dagger();
                let rhs = rho(&g0.gp(&psi.rev()).gp(&g0));
                mat_residual(&lhs, &rhs)
            },
        },
        DictionaryLine {
            name: "complex-conjugate",
            check: |psi| {
                // psi^*  <->  -gamma_2 psi gamma_2.
                let g2 = crate::algebras::gamma_down::<BigRational>(2);
                let lhs = rho(psi).conj();
                let rhs = rho(&(-g2.gp(psi).gp(&g2)));
                mat_residual(&lhs, &rhs)
            },
        },
    ]
}

// ---------------------------------------------------------------------------
// Polar decomposition of invertible even elements.
// ---------------------------------------------------------------------------

/// Density, duality angle and rotor of an invertible even element:
/// `psi = rho^(1/2) exp(tau beta / 2) R`.
#[derive(Clone, Debug)]
pub struct TakabayasiData {
    pub rho: f64,
    pub beta: f64,
    pub rotor: Multivector<f64>,
}

/// Splits an invertible even spacetime element into density, duality angle
/// and rotor. `psi rev(psi)` is scalar plus pseudoscalar; its vanishing is
/// the excluded degenerate case.
pub fn takabayasi_decompose(psi: &Multivector<f64>) -> Result<TakabayasiData> {
    assert!(psi.signature() == minkowski(), "spacetime algebra expected");
    assert!(psi.odd_part().is_zero(), "even element expected");
    let tau = Multivector::<f64>::pseudoscalar(minkowski());
    let norm = psi.gp(&psi.rev());
    let s = norm.scalar_part();
    let p = norm.coeff(minkowski().pseudoscalar_mask());
    let rho = (s * s + p * p).sqrt();
    let scale = psi.max_abs_coeff().powi(2).max(1e-300);
    if rho <= 1e-12 * scale {
        return Err(Error::SingularSpinor);
    }
    let beta = p.atan2(s);
    // R = rho^(-1/2) exp(-tau beta/2) psi.
    let half = beta / 2.0;
    let phase = Multivector::scalar(minkowski(), half.cos()) - tau.scale(&half.sin());
    let rotor = phase.gp(psi).scale(&rho.sqrt().recip());
    Ok(TakabayasiData { rho, beta, rotor })
}

impl TakabayasiData {
    /// `rho^(1/2) exp(tau beta/2) R`.
    pub fn reconstruct(&self) -> Multivector<f64> {
        let tau = Multivector::<f64>::pseudoscalar(minkowski());
        let half = self.beta / 2.0;
        let phase = Multivector::scalar(minkowski(), half.cos()) + tau.scale(&half.sin());
        phase.gp(&self.rotor).scale(&self.rho.sqrt())
    }
}

/// An even element with `psi rev(psi) = 0`, pinned as the regression case
/// for the singular branch: `1 + sigma_1` (twice an idempotent).
pub fn singular_even_fixture() -> Multivector<f64> {
    (Mv::one(minkowski()) + sigma::<BigRational>(1)).to_f64()
}

// ---------------------------------------------------------------------------
// Generalized spinors in the bulk algebra.
// ---------------------------------------------------------------------------

/// Gamma-even part of an even bulk element: the blades not containing the
/// normal direction (label 4).
pub fn gamma_even_part(z: &Mv) -> Mv {
    let bit = 1u16 << bulk().position_of(4).unwrap();
    Mv::from_terms(bulk(), z.terms().filter(|(m, _)| m & bit == 0).map(|(m, c)| (m, c.clone())))
}

/// Gamma-odd part: the blades containing the normal direction.
pub fn gamma_odd_part(z: &Mv) -> Mv {
    let bit = 1u16 << bulk().position_of(4).unwrap();
    Mv::from_terms(bulk(), z.terms().filter(|(m, _)| m & bit != 0).map(|(m, c)| (m, c.clone())))
}

/// Ideal spinor built from an even-even bulk element: `Psi = psi f41`.
pub fn ideal_spinor(psi: &Mv) -> Mv {
    psi.gp(&crate::algebras::f41())
}

/// The paired product of the half-projected even element with its reflected
/// partner:
/// `[psi (1+Gamma^0)/2 + K] [rev(psi) (1-Gamma^0)/2 - K]` with
/// `K = xi^alpha Gamma_0 Gamma_alpha`.
///
/// For linked `(psi, xi)` pairs the product closes onto a scalar (the norm
/// of the combined element); the four components are genuinely constrained,
/// and a generic unlinked pair leaves higher-grade residue.
pub fn hestenes_paired_product(psi: &Mv, xi: &[BigRational; 4]) -> Mv {
    use crate::algebras::{big_gamma, big_gamma_down};
    use crate::scalar::rat;
    let one = Mv::one(bulk());
    let g0 = big_gamma::<BigRational>(0);
    let plus = (one.clone() + g0.clone()).scale(&rat(1, 2));
    let minus = (one - g0).scale(&rat(1, 2));
    let mut k = Mv::zero(bulk());
    for alpha in 0..4u8 {
        k = k + big_gamma_down::<BigRational>(0)
            .gp(&big_gamma_down(alpha))
            .scale(&xi[alpha as usize]);
    }
    let left = psi.gp(&plus) + k.clone();
    let right = psi.rev().gp(&minus) - k;
    left.gp(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{big_gamma, e_up, f41, gamma_down};
    use crate::scalar::rat;

    #[test]
    fn rho_is_a_ring_homomorphism_on_spot_blades() {
        let a = Mv::blade(bulk(), &[1, 4], rat(3, 2)) + Mv::one(bulk());
        let b = Mv::blade(bulk(), &[2, 0], rat(1, 3)) + e_up(3);
        assert_eq!(mat_residual(&rho(&a.gp(&b)), &rho(&a).mul(&rho(&b))), 0.0);
        assert_eq!(mat_residual(&rho(&Mv::one(bulk())), &Mat::identity()), 0.0);
    }

    #[test]
    fn rho_respects_generator_relations() {
        for i in 0..5usize {
            for j in 0..5usize {
                let a = rho_generator_images()[i].clone();
                let b = rho_generator_images()[j].clone();
                let anti = a.mul(&b).add(&b.mul(&a));
                let label = crate::algebras::BULK_LABELS[i];
                let expect = if i == j {
                    Mat::identity().scale(&crat(2 * crate::algebras::eta_bulk(label), 0))
                } else {
                    Mat::zero()
                };
                assert_eq!(mat_residual(&anti, &expect), 0.0, "pair ({i},{j})");
            }
        }
    }

    #[test]
    fn rho_maps_big_gamma_to_dirac_matrices() {
        for mu in 0..4u8 {
            assert_eq!(
                mat_residual(&rho(&big_gamma::<BigRational>(mu)), &dirac_gamma(mu)),
                0.0
            );
        }
    }

    #[test]
    fn rho_maps_the_central_element_to_i() {
        let img = rho(&crate::algebras::frak_i::<BigRational>());
        assert_eq!(mat_residual(&img, &Mat::identity().scale(&crat(0, 1))), 0.0);
    }

    #[test]
    fn rho_images_span_thirty_two_dimensions() {
        assert!(rho_is_injective());
    }

    #[test]
    fn rho_of_f41_is_a_rank_one_projector() {
        // The verbatim idempotent projects onto the second coordinate; a
        // rank-one Hermitian projector either way.
        let img = rho(&f41::<BigRational>());
        let mut expect = Mat::zero();
        expect.entries[1][1] = Complex::one();
        assert_eq!(mat_residual(&img, &expect), 0.0);
        assert_eq!(mat_residual(&img.mul(&img), &img), 0.0);
        assert_eq!(mat_residual(&img.dagger(), &img), 0.0);
    }

    #[test]
    fn column_layout_matches_the_matrix_ideal() {
        // The layout bijection and the first-column-of-rho map agree.
        let unit = ColumnSpinor::from_parameters(
            &[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
            &std::array::from_fn(|_| rat(0, 1)),
        );
        assert_eq!(column_to_even(&unit), Mv::one(minkowski()));
        // n^0 = 1 picks out sigma_3.
        let n0 = ColumnSpinor::from_parameters(
            &std::array::from_fn(|_| rat(0, 1)),
            &[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
        );
        assert_eq!(column_to_even(&n0), sigma::<BigRational>(3));
        for psi in [
            Mv::one(minkowski()),
            sigma::<BigRational>(3),
            gamma5::<BigRational>().gp(&sigma(2)),
            Mv::one(minkowski()) + gamma5::<BigRational>().gp(&sigma(1)).scale(&rat(2, 3)),
        ] {
            assert_eq!(even_to_column(&psi), rho_first_column(&psi), "psi = {psi}");
            assert_eq!(column_to_even(&even_to_column(&psi)), psi);
        }
    }

    #[test]
    fn dictionary_lines_hold_on_a_sample() {
        let psi = Mv::one(minkowski())
            + sigma::<BigRational>(1).scale(&rat(2, 5))
            + gamma5::<BigRational>().gp(&sigma(3)).scale(&rat(-1, 3))
            + gamma5::<BigRational>().scale(&rat(1, 7)).gp(&sigma(2)).gp(&sigma(3));
        for line in dictionary_lines() {
            assert_eq!((line.check)(&psi), 0.0, "line {}", line.name);
        }
    }

    #[test]
    fn scalar_conjugate_degenerates_to_identity() {
        // For real scalar psi, the conjugation line reads -g2 psi g2 = psi.
        let psi = Mv::scalar(minkowski(), rat(5, 4));
        let g2 = gamma_down::<BigRational>(2);
        assert_eq!(-g2.gp(&psi).gp(&g2), psi);
    }

    #[test]
    fn takabayasi_of_a_scalar() {
        let psi = Multivector::scalar(minkowski(), 2.0);
        let t = takabayasi_decompose(&psi).unwrap();
        assert!((t.rho - 4.0).abs() < 1e-12);
        assert_eq!(t.beta, 0.0);
        assert!(t.rotor.distance(&Multivector::one(minkowski())) < 1e-12);
    }

    #[test]
    fn takabayasi_of_the_pseudoscalar() {
        // psi = tau: psi rev(psi) = -1, so beta = pi and R = 1.
        let psi = Multivector::<f64>::pseudoscalar(minkowski());
        let t = takabayasi_decompose(&psi).unwrap();
        assert!((t.rho - 1.0).abs() < 1e-12);
        assert!((t.beta - std::f64::consts::PI).abs() < 1e-12);
        assert!(t.rotor.distance(&Multivector::one(minkowski())) < 1e-12);
        assert!(t.reconstruct().distance(&psi) < 1e-12);
    }

    #[test]
    fn takabayasi_rejects_the_singular_fixture() {
        let psi = singular_even_fixture();
        assert!(matches!(takabayasi_decompose(&psi), Err(Error::SingularSpinor)));
    }

    #[test]
    fn ideal_spinor_absorbs_the_idempotent() {
        let f = f41::<BigRational>();
        assert_eq!(ideal_spinor(&Mv::one(bulk())), f);
        let psi = Mv::one(bulk()) + big_gamma::<BigRational>(1).gp(&big_gamma(2)).scale(&rat(3, 7));
        let cap = ideal_spinor(&psi);
        assert_eq!(cap.gp(&f), cap);
    }

    #[test]
    fn gamma_odd_part_factors_through_gamma0() {
        // Z = W (1+Gamma^0)/2 decomposes with Z^1 = Z^0 Gamma^0.
        let w = Mv::one(bulk())
            + Mv::blade(bulk(), &[1, 2], rat(2, 3))
            + Mv::blade(bulk(), &[3, 4], rat(-1, 2))
            + Mv::blade(bulk(), &[1, 2, 3, 0], rat(5, 1));
        let eplus = (Mv::one(bulk()) + big_gamma(0)).scale(&rat(1, 2));
        let z = w.gp(&eplus);
        let z0 = gamma_even_part(&z);
        let z1 = gamma_odd_part(&z);
        assert_eq!(z0.clone() + z1.clone(), z);
        assert_eq!(z1, z0.gp(&big_gamma(0)));
    }
}
