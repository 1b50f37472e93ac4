//! Flat-spacetime first-order equation from the constant-momentum argument:
//! current grade checks, the duality-angle obstruction, and the agreement of
//! the even-element residual with the column-spinor residual through the
//! translation dictionary.

use num::complex::Complex;
use num::traits::Zero;
use num::BigRational;

use super::{eval_field, lift, partial_field, scale_field, ChartField};
use crate::algebras::{gamma, gamma_down};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::poly::Poly;
use crate::repr::{dirac_gamma, even_to_column, ColumnSpinor};
use crate::scalar::Scalar;
use crate::signature::minkowski;

type Mv = Multivector<BigRational>;

/// Flat spacetime field: even multivector over chart coordinates x^0..x^3.
pub type FlatField<R> = ChartField<R>;

/// The current `V = psi gamma^0 rev(psi)`. For any even element this is
/// grade-1 (it is odd and self-reverse), and `V^2 = rho^2 >= 0`.
pub fn current(psi: &Mv) -> Mv {
    psi.gp(&gamma(0)).gp(&psi.rev())
}

/// Transport defect of the constant-momentum step: `psi gamma^0 rev(psi) psi
/// - rho psi gamma^0` with `rho` the scalar part of `rev(psi) psi`. It
/// vanishes exactly when the duality angle is 0 or pi (the pseudoscalar part
/// of `psi rev(psi)` is zero); otherwise it carries a grade-3 component.
pub fn transport_defect(psi: &Mv) -> Mv {
    let norm = psi.rev().gp(psi);
    let rho = norm.scalar_part();
    current(psi).gp(psi) - psi.gp(&gamma(0)).scale(&rho)
}

/// Pseudoscalar part of `psi rev(psi)`; nonzero exactly off the two allowed
/// duality angles.
pub fn duality_obstruction(psi: &Mv) -> BigRational {
    psi.gp(&psi.rev()).coeff(minkowski().pseudoscalar_mask())
}

/// First-order flat residual on an even field:
/// `gamma^mu d_mu psi gamma^2 gamma^1 - m psi gamma^0`.
pub fn dirac_hestenes_residual<R: Scalar>(psi: &FlatField<R>, mass: R) -> FlatField<R> {
    let g21 = lift(&gamma_down::<R>(2).gp(&gamma_down(1)));
    let g0 = lift(&gamma::<R>(0));
    let mut acc: FlatField<R> = Multivector::zero(minkowski());
    for mu in 0..4u8 {
        acc = acc + lift(&gamma::<R>(mu)).gp(&partial_field(psi, mu as usize));
    }
    acc.gp(&g21) - scale_field(psi, &Poly::constant(mass)).gp(&g0)
}

/// Column-side residual of the standard first-order equation,
/// `i g^mu d_mu Psi - m Psi`, evaluated at a sample point.
pub fn dirac_column_residual(
    psi: &FlatField<BigRational>,
    mass: &BigRational,
    x: &[BigRational; 4],
) -> [Complex<BigRational>; 4] {
    let i = Complex::new(BigRational::zero(), BigRational::from_int(1));
    let mut acc: [Complex<BigRational>; 4] = std::array::from_fn(|_| Complex::zero());
    for mu in 0..4u8 {
        let d = eval_field(&partial_field(psi, mu as usize), x);
        let col = even_to_column(&d);
        let acted = dirac_gamma(mu).mul_col(&col.components);
        for k in 0..4 {
            acc[k] = acc[k].clone() + i.clone() * acted[k].clone();
        }
    }
    let m_col = even_to_column(&eval_field(psi, x));
    let m = Complex::new(mass.clone(), BigRational::zero());
    std::array::from_fn(|k| acc[k].clone() - m.clone() * m_col.components[k].clone())
}

/// Both residual routes at a sample: the even-element residual pushed
/// through the dictionary (right-multiplied by `gamma^0` to land in the even
/// subalgebra) and the column residual. They agree exactly.
pub fn residual_routes_agree(
    psi: &FlatField<BigRational>,
    mass: &BigRational,
    x: &[BigRational; 4],
) -> Result<bool> {
    let value = eval_field(psi, x);
    let norm = value.gp(&value.rev());
    if norm.is_zero() {
        return Err(Error::SingularSpinor);
    }
    let dhe = dirac_hestenes_residual(psi, mass.clone());
    let translated = even_to_column(&eval_field(&dhe, x).gp(&gamma(0)));
    let column = dirac_column_residual(psi, mass, x);
    let col = ColumnSpinor { components: column };
    Ok(translated.sub(&col).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebras::{gamma5, sigma};
    use crate::scalar::rat;

    #[test]
    fn unit_spinor_current_is_the_time_axis() {
        let v = current(&Mv::one(minkowski()));
        assert_eq!(v, gamma(0));
        assert_eq!(v.gp(&v).scalar_part(), rat(1, 1));
    }

    #[test]
    fn currents_are_grade_one_even_off_angle() {
        // V is odd and self-reverse, so grade 1 for every even psi.
        let samples = [
            Mv::one(minkowski()) + sigma::<BigRational>(1).scale(&rat(2, 3)),
            gamma5::<BigRational>().scale(&rat(1, 2)) + sigma::<BigRational>(2),
            Mv::one(minkowski()) + gamma5::<BigRational>().scale(&rat(1, 5)),
        ];
        for psi in samples {
            let v = current(&psi);
            assert!(v.is_zero() || v.is_homogeneous(1), "V = {v}");
            let v_sq = v.gp(&v);
            assert!(v_sq.grade_select(|g| g != 0).is_zero());
            // V^2 = (scalar^2 + pseudoscalar^2) of psi rev(psi).
            let norm = psi.gp(&psi.rev());
            let s = norm.scalar_part();
            let p = duality_obstruction(&psi);
            assert_eq!(v_sq.scalar_part(), s.clone() * s + p.clone() * p);
        }
    }

    #[test]
    fn transport_defect_fires_off_the_allowed_angles() {
        // A duality rotation with angle pi/4 (built rationally via a
        // pseudoscalar component) obstructs the constant-momentum step: the
        // defect carries a grade-3 component and the pseudoscalar part of
        // psi rev(psi) is nonzero.
        let tau = Mv::pseudoscalar(minkowski());
        let psi = Mv::one(minkowski()) + tau.scale(&rat(1, 3));
        assert!(!duality_obstruction(&psi).is_zero());
        let defect = transport_defect(&psi);
        assert!(!defect.grade(3).unwrap().is_zero(), "defect = {defect}");
        // On-angle spinors transport cleanly.
        let clean = Mv::one(minkowski()) + sigma::<BigRational>(3).scale(&rat(1, 2));
        assert!(duality_obstruction(&clean).is_zero());
        assert!(transport_defect(&clean).is_zero());
    }

    #[test]
    fn residual_routes_agree_on_a_polynomial_family() {
        let psi: FlatField<BigRational> = scale_field(
            &lift(&(Mv::one(minkowski()) + sigma::<BigRational>(1).scale(&rat(1, 2)))),
            &(Poly::var(0) * Poly::var(1) + Poly::constant(rat(1, 1))),
        ) + scale_field(
            &lift(&gamma5::<BigRational>().gp(&sigma(2))),
            &(Poly::var(3) * Poly::var(3)),
        );
        let x = [rat(1, 3), rat(-1, 2), rat(2, 7), rat(1, 5)];
        assert!(residual_routes_agree(&psi, &rat(3, 4), &x).unwrap());
    }

    #[test]
    fn singular_samples_are_rejected() {
        let psi: FlatField<BigRational> =
            lift(&(Mv::one(minkowski()) + sigma::<BigRational>(1)));
        let x = [rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        assert!(matches!(
            residual_routes_agree(&psi, &rat(1, 1), &x),
            Err(Error::SingularSpinor)
        ));
    }
}
