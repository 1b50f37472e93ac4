//! Canonical algebra elements and the pseudo-orthogonal group structures.
//!
//! Named elements: gamma vectors and their reciprocals, the sigma bivectors,
//! the two pseudoscalars, the Gamma bivectors of the bulk algebra, and the
//! primitive idempotents. On the group side: the 5x5 generators of the
//! pseudo-orthogonal Lie algebra, the bivector spin generators, exponentials
//! and the twisted adjoint action.


use crate::error::{Error, Result};
use crate::matrix::Mat5;
use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::{bulk, minkowski};

/// Minkowski metric square for a label in {0,1,2,3}: diag(1,-1,-1,-1).
pub fn eta_minkowski(mu: u8) -> i64 {
    if mu == 0 {
        1
    } else {
        -1
    }
}

/// Bulk metric square for a label in {1,2,3,4,0}: diag(1,1,1,1,-1).
pub fn eta_bulk(a: u8) -> i64 {
    if a == 0 {
        -1
    } else {
        1
    }
}

// ---------------------------------------------------------------------------
// Spacetime algebra elements (labels 0..3).
// ---------------------------------------------------------------------------

/// `gamma^mu`.
pub fn gamma<R: Scalar>(mu: u8) -> Multivector<R> {
    Multivector::basis_vector(minkowski(), mu)
}

/// Reciprocal vector `gamma_mu = eta_mu_mu gamma^mu`.
pub fn gamma_down<R: Scalar>(mu: u8) -> Multivector<R> {
    Multivector::basis_vector_down(minkowski(), mu)
}

/// `sigma_k = gamma_k gamma_0`, k = 1,2,3.
pub fn sigma<R: Scalar>(k: u8) -> Multivector<R> {
    assert!((1..=3).contains(&k));
    gamma_down::<R>(k).gp(&gamma_down(0))
}

/// The element `i = gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3` (grade 4,
/// squares to -1, central in the even subalgebra).
pub fn gamma5<R: Scalar>() -> Multivector<R> {
    gamma_down::<R>(0)
        .gp(&gamma_down(1))
        .gp(&gamma_down(2))
        .gp(&gamma_down(3))
}

/// Unit pseudoscalar of the spacetime algebra, `gamma^0 gamma^1 gamma^2 gamma^3`.
pub fn tau_minkowski<R: Scalar>() -> Multivector<R> {
    Multivector::pseudoscalar(minkowski())
}

/// Primitive idempotent `e = (1 + gamma^0)/2` of the spacetime algebra.
pub fn idempotent_e<R: Scalar>() -> Multivector<R> {
    (Multivector::one(minkowski()) + gamma(0)).scale(&R::from_ratio(1, 2))
}

// ---------------------------------------------------------------------------
// Bulk algebra elements (labels 1,2,3,4,0).
// ---------------------------------------------------------------------------

/// `E^A`.
pub fn e_up<R: Scalar>(a: u8) -> Multivector<R> {
    Multivector::basis_vector(bulk(), a)
}

/// `E_A = eta_AA E^A`.
pub fn e_down<R: Scalar>(a: u8) -> Multivector<R> {
    Multivector::basis_vector_down(bulk(), a)
}

/// The central element `i = E^0 E^1 E^2 E^3 E^4`; equals the bulk unit
/// pseudoscalar and squares to -1.
pub fn frak_i<R: Scalar>() -> Multivector<R> {
    e_up::<R>(0).gp(&e_up(1)).gp(&e_up(2)).gp(&e_up(3)).gp(&e_up(4))
}

/// `Gamma^mu = E^mu E^4`, mu = 0..3. These generate a spacetime algebra
/// inside the even bulk subalgebra.
pub fn big_gamma<R: Scalar>(mu: u8) -> Multivector<R> {
    assert!(mu <= 3);
    e_up::<R>(mu).gp(&e_up(4))
}

/// `Gamma_mu = eta_mu_mu Gamma^mu` with the Minkowski metric.
pub fn big_gamma_down<R: Scalar>(mu: u8) -> Multivector<R> {
    let g = big_gamma::<R>(mu);
    if eta_minkowski(mu) == 1 {
        g
    } else {
        -g
    }
}

/// Primitive idempotent `f = (1+Gamma^0)/2 (1+i Gamma^2 Gamma^1)/2` of the
/// bulk algebra.
pub fn f41<R: Scalar>() -> Multivector<R> {
    let one = Multivector::one(bulk());
    let left = (one.clone() + big_gamma(0)).scale(&R::from_ratio(1, 2));
    let right = (one + frak_i().gp(&big_gamma(2)).gp(&big_gamma(1))).scale(&R::from_ratio(1, 2));
    left.gp(&right)
}

// ---------------------------------------------------------------------------
// Lie algebra generators.
// ---------------------------------------------------------------------------

/// Label order of the bulk coordinates, (1,2,3,4,0).
pub const BULK_LABELS: [u8; 5] = [1, 2, 3, 4, 0];

/// The ten index pairs A < B in label order.
pub fn generator_pairs() -> Vec<(u8, u8)> {
    let mut pairs = Vec::new();
    for i in 0..5 {
        for j in (i + 1)..5 {
            pairs.push((BULK_LABELS[i], BULK_LABELS[j]));
        }
    }
    pairs
}

/// Spin generator `S_AB = (1/2) E_A E_B` for distinct labels.
pub fn spin_generator<R: Scalar>(a: u8, b: u8) -> Multivector<R> {
    assert_ne!(a, b, "spin generator needs distinct labels");
    e_down::<R>(a).gp(&e_down(b)).scale(&R::from_ratio(1, 2))
}

/// Matrix generator `M_AB`: the linearization of the rotation flow in the
/// A-B coordinate plane, `(M_AB)^C_D = eta_AD d^C_B - eta_BD d^C_A`.
/// Row/column indices run over label positions (order 1,2,3,4,0).
pub fn so41_generator<R: Scalar>(a: u8, b: u8) -> Mat5<R> {
    assert_ne!(a, b);
    let sig = bulk();
    let pa = sig.position_of(a).unwrap();
    let pb = sig.position_of(b).unwrap();
    Mat5::from_fn(|c, d| {
        let mut v = 0i64;
        if c == pb && d == pa {
            v += eta_bulk(a);
        }
        if c == pa && d == pb {
            v -= eta_bulk(b);
        }
        R::from_int(v)
    })
}

/// The flat 5x5 metric matrix diag(1,1,1,1,-1) in label order.
pub fn metric_matrix<R: Scalar>() -> Mat5<R> {
    Mat5::from_fn(|i, j| {
        if i == j {
            R::from_int(eta_bulk(BULK_LABELS[i]))
        } else {
            R::zero()
        }
    })
}

/// Membership residual for the pseudo-orthogonal group:
/// `max |Lambda^t G Lambda - G|`.
pub fn group_membership_residual(lambda: &Mat5<f64>) -> f64 {
    let g = metric_matrix::<f64>();
    (&(&(&lambda.transpose() * &g) * lambda) - &g).max_abs()
}

/// `Lambda = exp((1/2) chi^{AB} M_AB)` for an antisymmetric parameter matrix
/// `chi` (entries indexed by label positions).
pub fn exp_so41(chi: &Mat5<f64>) -> Result<Mat5<f64>> {
    if !chi_is_antisymmetric(chi) {
        return Err(Error::NotAntisymmetric);
    }
    let mut gen = Mat5::<f64>::zero();
    for (i, &a) in BULK_LABELS.iter().enumerate() {
        for (j, &b) in BULK_LABELS.iter().enumerate() {
            if i == j {
                continue;
            }
            let m = so41_generator::<f64>(a, b);
            let half_chi = 0.5 * chi.entries[i][j];
            gen = &gen + &m.scale(&half_chi);
        }
    }
    Ok(gen.expm())
}

fn chi_is_antisymmetric(chi: &Mat5<f64>) -> bool {
    for i in 0..5 {
        for j in 0..5 {
            if (chi.entries[i][j] + chi.entries[j][i]).abs() > 1e-12 {
                return false;
            }
        }
    }
    true
}

/// Spin-group element `u = exp((1/4) chi_AB E^A E^B)` for the plane (a,b)
/// with parameter `theta` (so `chi_ab = theta = -chi_ba`): `exp(theta/2 E^a E^b)`.
pub fn spin_plane_rotor(a: u8, b: u8, theta: f64) -> Multivector<f64> {
    let plane = e_up::<f64>(a).gp(&e_up(b));
    plane.scale(&(theta / 2.0)).exp_bivector(40).expect("basis planes are simple")
}

/// Twisted adjoint action `Ad_u(x) = u x rev(u)` for a unit versor.
pub fn adjoint_action(u: &Multivector<f64>, x: &Multivector<f64>) -> Result<Multivector<f64>> {
    u.versor_check(1e-9)?;
    Ok(u.gp(x).gp(&u.rev()))
}

/// Extracts the components of a grade-1 bulk element in the `E^A` basis,
/// ordered by label position.
pub fn vector_components(v: &Multivector<f64>) -> [f64; 5] {
    std::array::from_fn(|i| v.coeff(1 << i))
}

// ---------------------------------------------------------------------------
// Structure-constant tables.
// ---------------------------------------------------------------------------

/// Exact structure constants: `table[p][q][r]` is the coefficient of
/// generator `r` in the bracket of generators `p` and `q`, with pairs
/// indexed into `generator_pairs()`.
pub type StructureTable = Vec<Vec<Vec<num::BigRational>>>;

/// Commutator table of the spin generators `S_AB = E_A E_B / 2`.
///
/// Each generator is a single basis bivector up to a rational factor, so
/// expanding a bracket over the generator set is exact blade extraction.
pub fn spin_structure_table() -> StructureTable {
    let pairs = generator_pairs();
    let gens: Vec<Multivector<num::BigRational>> =
        pairs.iter().map(|&(a, b)| spin_generator(a, b)).collect();
    gens.iter()
        .map(|p| {
            gens.iter()
                .map(|q| {
                    let bracket = p.gp(q) - q.gp(p);
                    expand_in_spin_basis(&bracket, &gens)
                })
                .collect()
        })
        .collect()
}

fn expand_in_spin_basis(
    bracket: &Multivector<num::BigRational>,
    gens: &[Multivector<num::BigRational>],
) -> Vec<num::BigRational> {
    let coeffs: Vec<num::BigRational> = gens
        .iter()
        .map(|g| {
            let (mask, lead) = g.terms().next().expect("nonzero generator");
            bracket.coeff(mask) / lead.clone()
        })
        .collect();
    // The expansion must account for the whole bracket.
    let mut recon = Multivector::zero(bulk());
    for (c, g) in coeffs.iter().zip(gens) {
        recon = recon + g.scale(c);
    }
    assert!(
        (recon - bracket.clone()).is_zero(),
        "bracket does not lie in the generator span"
    );
    coeffs
}

/// Commutator table of the matrix generators `M_AB`.
///
/// The ten generators have pairwise disjoint entry supports, so expansion is
/// entry extraction. The coordinate flow composes contravariantly to the
/// bivector action: this table is the negative of the spin table.
pub fn so41_structure_table() -> StructureTable {
    let pairs = generator_pairs();
    let gens: Vec<Mat5<num::BigRational>> =
        pairs.iter().map(|&(a, b)| so41_generator(a, b)).collect();
    gens.iter()
        .map(|p| {
            gens.iter()
                .map(|q| {
                    let bracket = &(p * q) - &(q * p);
                    expand_in_matrix_basis(&bracket, &gens)
                })
                .collect()
        })
        .collect()
}

fn expand_in_matrix_basis(
    bracket: &Mat5<num::BigRational>,
    gens: &[Mat5<num::BigRational>],
) -> Vec<num::BigRational> {
    use num::traits::Zero;
    let coeffs: Vec<num::BigRational> = gens
        .iter()
        .map(|g| {
            let (i, j) = lead_entry(g);
            bracket.entries[i][j].clone() / g.entries[i][j].clone()
        })
        .collect();
    let mut recon = Mat5::<num::BigRational>::zero();
    for (c, g) in coeffs.iter().zip(gens) {
        recon = &recon + &g.scale(c);
    }
    assert!(
        (0..5).all(|i| (0..5).all(|j| {
            (recon.entries[i][j].clone() - bracket.entries[i][j].clone()).is_zero()
        })),
        "bracket does not lie in the generator span"
    );
    coeffs
}

fn lead_entry(m: &Mat5<num::BigRational>) -> (usize, usize) {
    use num::traits::Zero;
    for i in 0..5 {
        for j in 0..5 {
            if !m.entries[i][j].is_zero() {
                return (i, j);
            }
        }
    }
    panic!("zero generator");
}

/// The eta-combination `eta_AC T_BD + eta_BD T_AC - eta_BC T_AD - eta_AD T_BC`
/// expanded over the pair basis, as structure constants. `sign` scales the
/// whole combination (+1 matches the matrix table, -1 the spin/Killing ones).
pub fn eta_combination_constants(sign: i64) -> StructureTable {
    use crate::scalar::rat;
    let pairs = generator_pairs();
    let index_of = |a: u8, b: u8| -> Option<(usize, i64)> {
        pairs
            .iter()
            .position(|&(x, y)| (x, y) == (a, b))
            .map(|i| (i, 1))
            .or_else(|| pairs.iter().position(|&(x, y)| (x, y) == (b, a)).map(|i| (i, -1)))
    };
    let eta = |a: u8, b: u8| if a == b { eta_bulk(a) } else { 0 };
    pairs
        .iter()
        .map(|&(a, b)| {
            pairs
                .iter()
                .map(|&(c, d)| {
                    let mut row = vec![rat(0, 1); pairs.len()];
                    let mut add = |coeff: i64, x: u8, y: u8| {
                        if coeff == 0 || x == y {
                            return;
                        }
                        let (idx, flip) = index_of(x, y).expect("pair indexed");
                        row[idx] = row[idx].clone() + rat(sign * coeff * flip, 1);
                    };
                    add(eta(a, c), b, d);
                    add(eta(b, d), a, c);
                    add(-eta(b, c), a, d);
                    add(-eta(a, d), b, c);
                    row
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num::BigRational;

    type Mv = Multivector<BigRational>;

    #[test]
    fn reciprocal_basis_pairs_to_kronecker_delta() {
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let lhs = gamma::<BigRational>(mu).gp(&gamma_down(nu))
                    + gamma_down::<BigRational>(nu).gp(&gamma(mu));
                let expect = if mu == nu {
                    Mv::scalar(minkowski(), rat(2, 1))
                } else {
                    Mv::zero(minkowski())
                };
                assert_eq!(lhs, expect);
            }
        }
    }

    #[test]
    fn big_gamma_relations_match_minkowski_metric() {
        for mu in 0..4u8 {
            for nu in 0..4u8 {
                let anti = big_gamma::<BigRational>(mu).gp(&big_gamma(nu))
                    + big_gamma::<BigRational>(nu).gp(&big_gamma(mu));
                let expect = if mu == nu {
                    Mv::scalar(bulk(), rat(2 * eta_minkowski(mu), 1))
                } else {
                    Mv::zero(bulk())
                };
                assert_eq!(anti, expect, "Gamma pair ({mu},{nu})");
            }
        }
        // Spot values: (Gamma^0)^2 = +1 and (Gamma^1)^2 = -1.
        assert_eq!(big_gamma::<BigRational>(0).gp(&big_gamma(0)), Mv::one(bulk()));
        assert_eq!(big_gamma::<BigRational>(1).gp(&big_gamma(1)), -Mv::one(bulk()));
    }

    #[test]
    fn structure_tables_match_the_eta_combination() {
        // The bivector generators close with the opposite overall sign to
        // the matrix generators: coordinate flows compose contravariantly.
        assert_eq!(spin_structure_table(), eta_combination_constants(-1));
        assert_eq!(so41_structure_table(), eta_combination_constants(1));
    }

    #[test]
    fn idempotents_are_idempotent() {
        let e = idempotent_e::<BigRational>();
        assert_eq!(e.gp(&e), e);
        let f = f41::<BigRational>();
        assert_eq!(f.gp(&f), f);
    }

    #[test]
    fn frak_i_is_central_and_squares_to_minus_one() {
        let i = frak_i::<BigRational>();
        assert_eq!(i.gp(&i), -Mv::one(bulk()));
        assert_eq!(i, Mv::pseudoscalar(bulk()));
        for mask in 0..32u16 {
            let blade = Mv::from_terms(bulk(), [(mask, rat(1, 1))]);
            assert_eq!(i.gp(&blade), blade.gp(&i), "blade {mask:#07b}");
        }
    }

    #[test]
    fn spin_bracket_spot_values() {
        let s12 = spin_generator::<BigRational>(1, 2);
        let s23 = spin_generator::<BigRational>(2, 3);
        let s13 = spin_generator::<BigRational>(1, 3);
        // [S_12, S_12] = 0.
        assert!((s12.gp(&s12) - s12.gp(&s12)).is_zero());
        // [S_12, S_23] = eta_22 S_13, the single surviving term.
        let bracket = s12.gp(&s23) - s23.gp(&s12);
        assert_eq!(bracket, s13);
    }

    #[test]
    fn exp_so41_identity_and_rotation_block() {
        let zero = Mat5::<f64>::zero();
        let lam = exp_so41(&zero).unwrap();
        assert!((&lam - &Mat5::identity()).max_abs() < 1e-15);
        assert!(group_membership_residual(&lam) < 1e-15);

        let mut chi = Mat5::<f64>::zero();
        let theta = 0.6;
        chi.entries[0][1] = theta;
        chi.entries[1][0] = -theta;
        let lam = exp_so41(&chi).unwrap();
        assert!(group_membership_residual(&lam) < 1e-12);
        // Rotation block in the 1-2 plane, orientation fixed below by the
        // adjoint calibration test.
        assert!((lam.entries[0][0] - theta.cos()).abs() < 1e-12);
        assert!((lam.entries[1][1] - theta.cos()).abs() < 1e-12);
        assert!((lam.entries[0][0].powi(2)
            + lam.entries[0][1].powi(2)
            - 1.0)
            .abs()
            < 1e-12);
    }

    #[test]
    fn exp_so41_rejects_symmetric_parameters() {
        let mut chi = Mat5::<f64>::zero();
        chi.entries[0][1] = 1.0;
        assert!(matches!(exp_so41(&chi), Err(Error::NotAntisymmetric)));
    }

    #[test]
    fn adjoint_identity_fixes_everything() {
        let one = Multivector::<f64>::one(bulk());
        let x = e_up::<f64>(3) + e_up::<f64>(0).scale(&2.0);
        assert_eq!(adjoint_action(&one, &x).unwrap(), x);
    }

    #[test]
    fn adjoint_rotates_the_calibration_plane() {
        // u = exp(theta/2 E^1E^2) sends E^1 to cos(theta) E^1 - sin(theta) E^2.
        let theta = 0.9;
        let u = spin_plane_rotor(1, 2, theta);
        let out = adjoint_action(&u, &e_up::<f64>(1)).unwrap();
        let expect = e_up::<f64>(1).scale(&theta.cos()) - e_up::<f64>(2).scale(&theta.sin());
        assert!(out.distance(&expect) < 1e-12);
    }
}
