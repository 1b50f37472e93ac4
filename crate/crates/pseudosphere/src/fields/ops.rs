//! The bulk momentum and angular-momentum operators and their quadratic
//! invariants.

use num::BigRational;

use super::{lift, partial_field, scale_field, BulkField};
use crate::algebras::{e_up, eta_bulk, generator_pairs};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::signature::bulk;

fn var_of(label: u8) -> usize {
    bulk().position_of(label).expect("bulk label")
}

/// The constant right factor of the momentum operator, `E^2 E^1`. It squares
/// to -1 and plays the role of the imaginary unit.
pub fn momentum_factor<R: Scalar, const N: usize>() -> Multivector<Poly<R, N>> {
    lift(&e_up::<R>(2).gp(&e_up(1)))
}

/// The index-lowered coordinate `X_A = eta_AA X^A` as a polynomial.
pub fn coordinate_lowered<R: Scalar>(label: u8) -> Poly<R, 5> {
    let v = Poly::<R, 5>::var(var_of(label));
    if eta_bulk(label) == 1 {
        v
    } else {
        -v
    }
}

/// Momentum operator: `P_A phi = d_A phi E^2 E^1`.
pub fn momentum_op<R: Scalar>(field: &BulkField<R>, label: u8) -> BulkField<R> {
    partial_field(field, var_of(label)).gp(&momentum_factor())
}

/// Angular-momentum component operator:
/// `L_AB phi = eta_AC X^C P_B phi - eta_BC X^C P_A phi`.
pub fn angular_op<R: Scalar>(field: &BulkField<R>, a: u8, b: u8) -> BulkField<R> {
    let pa = momentum_op(field, a);
    let pb = momentum_op(field, b);
    scale_field(&pb, &coordinate_lowered(a)) - scale_field(&pa, &coordinate_lowered(b))
}

/// The scalar derivation part of `L_AB` (no right factor):
/// `D_AB phi = X_A d_B phi - X_B d_A phi`.
pub fn derivation_op<R: Scalar>(field: &BulkField<R>, a: u8, b: u8) -> BulkField<R> {
    let da = partial_field(field, var_of(a));
    let db = partial_field(field, var_of(b));
    scale_field(&db, &coordinate_lowered(a)) - scale_field(&da, &coordinate_lowered(b))
}

/// Total angular operator: `L phi = (1/2) E^A E^B L_AB phi`, summed over the
/// ten planes with the basis bivector as a left Clifford factor.
pub fn l_total<R: Scalar>(field: &BulkField<R>) -> BulkField<R> {
    let mut acc = Multivector::zero(bulk());
    for (a, b) in generator_pairs() {
        let bivec = lift(&e_up::<R>(a).gp(&e_up(b)));
        acc = acc + bivec.gp(&angular_op(field, a, b));
    }
    acc
}

/// The graded decomposition of `L(L phi)` over the bivector-basis products
/// `E^{AB} E^{CD}` (grades 0, 2 and 4).
///
/// The component operators do not commute, so the grade-2 accumulation does
/// not cancel: it equals `3 L(phi) E^2 E^1` (the dimension minus two, times
/// the first-order operator with the momentum plane on the right). The three
/// parts sum to `L(L phi)` exactly.
pub struct QuadraticSplit<R: Scalar> {
    pub contraction: BulkField<R>,
    pub cross: BulkField<R>,
    pub wedge: BulkField<R>,
}

impl<R: Scalar> QuadraticSplit<R> {
    pub fn total(&self) -> BulkField<R> {
        self.contraction.clone() + self.cross.clone() + self.wedge.clone()
    }

    /// Closed form of the cross term, `3 L(phi) E^2 E^1`.
    pub fn cross_closed_form(field: &BulkField<R>) -> BulkField<R> {
        l_total(field).gp(&momentum_factor()).scale(&Poly::constant(R::from_int(3)))
    }
}

pub fn quadratic_split<R: Scalar>(field: &BulkField<R>) -> QuadraticSplit<R> {
    let pairs = generator_pairs();
    let mut contraction = Multivector::zero(bulk());
    let mut cross = Multivector::zero(bulk());
    let mut wedge = Multivector::zero(bulk());
    for &(c, d) in &pairs {
        let inner = angular_op(field, c, d);
        for &(a, b) in &pairs {
            let outer = angular_op(&inner, a, b);
            let prod = e_up::<R>(a).gp(&e_up(b)).gp(&e_up(c)).gp(&e_up(d));
            let grade = prod.grades();
            match grade.as_slice() {
                [0] => contraction = contraction + lift(&prod).gp(&outer),
                [2] => cross = cross + lift(&prod).gp(&outer),
                [4] => wedge = wedge + lift(&prod).gp(&outer),
                other => unreachable!("basis bivector product of grade {other:?}"),
            }
        }
    }
    QuadraticSplit { contraction, cross, wedge }
}

/// The scalar-prefactor and grade-4-prefactor parts of the decomposition.
pub fn l_squared_split<R: Scalar>(field: &BulkField<R>) -> (BulkField<R>, BulkField<R>) {
    let split = quadratic_split(field);
    (split.contraction, split.wedge)
}

/// The wedge-part quadratic operator `(L ∧ L) phi` alone.
pub fn wedge_quadratic_op<R: Scalar>(field: &BulkField<R>) -> BulkField<R> {
    l_squared_split(field).1
}

/// Component form of the contraction invariant:
/// `(L ⌟ L) phi = -(1/2) L_AB (L^AB phi)` summed over ordered pairs.
pub fn contraction_component_form<R: Scalar>(field: &BulkField<R>) -> BulkField<R> {
    let mut acc = Multivector::zero(bulk());
    for (a, b) in generator_pairs() {
        // L^AB = eta^AA eta^BB L_AB; ordered pairs double the A<B sum.
        let sign = eta_bulk(a) * eta_bulk(b);
        let term = angular_op(&angular_op(field, a, b), a, b);
        let term = if sign == 1 { term } else { -term };
        acc = acc - term;
    }
    acc
}

/// The quartic-invariant identity on a grade-4 element: with
/// `W = ⋆F/(8l)`, checks `F·F = F⌟F = FF` and `FF = -64 l^2 W·W`, exactly.
pub fn casimir_quartic_check(f: &Multivector<BigRational>, ell: &BigRational) -> Result<bool> {
    if !f.is_zero() && !f.is_homogeneous(4) {
        return Err(Error::InvalidGrade { grade: 4, dim: 5 });
    }
    let ff = f.gp(f);
    if !ff.grade_select(|g| g != 0).is_zero() {
        return Ok(false);
    }
    let ff = ff.scalar_part();
    let dot = f.scalar_product(f);
    let contraction = f.left_contraction(f).scalar_part();
    let w = f.hodge().scale(&(BigRational::from_ratio(1, 8) / ell.clone()));
    let ww = w.scalar_product(&w);
    let rhs = BigRational::from_int(-64) * ell.clone() * ell.clone() * ww;
    Ok(dot == ff && contraction == ff && ff == rhs)
}

/// True when no stored blade contains the normal direction (label 4).
pub fn tangency_check<R: Scalar, const N: usize>(field: &Multivector<Poly<R, N>>) -> bool {
    let bit = 1u16 << bulk().position_of(4).unwrap();
    field.terms().all(|(m, _)| m & bit == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    type F = BulkField<BigRational>;

    fn x_var(label: u8) -> Poly<BigRational, 5> {
        Poly::var(var_of(label))
    }

    fn scalar_field(p: Poly<BigRational, 5>) -> F {
        Multivector::from_terms(bulk(), [(0u16, p)])
    }

    #[test]
    fn momentum_of_a_constant_vanishes() {
        let one: F = lift(&Multivector::one(bulk()));
        for label in [1u8, 2, 3, 4, 0] {
            assert!(momentum_op(&one, label).is_zero());
        }
    }

    #[test]
    fn momentum_of_a_linear_field_is_the_factor() {
        // phi = X^3: P_3 phi = E^2 E^1.
        let phi = scalar_field(x_var(3));
        assert_eq!(momentum_op(&phi, 3), momentum_factor());
    }

    #[test]
    fn momenta_commute() {
        let phi = scalar_field(x_var(1).clone() * x_var(0) * x_var(0))
            + lift(&e_up::<BigRational>(2)).gp(&scalar_field(x_var(3) * x_var(4)));
        for a in [1u8, 2, 0] {
            for b in [3u8, 4] {
                let ab = momentum_op(&momentum_op(&phi, a), b);
                let ba = momentum_op(&momentum_op(&phi, b), a);
                assert!((ab - ba).is_zero());
            }
        }
    }

    #[test]
    fn angular_component_on_a_coordinate() {
        // phi = X^1: L_12 phi = -X^2 E^2 E^1.
        let phi = scalar_field(x_var(1));
        let expect = -scale_field(&momentum_factor(), &x_var(2));
        assert_eq!(angular_op(&phi, 1, 2), expect);
    }

    #[test]
    fn total_angular_kills_constants() {
        let c: F = lift(&(Multivector::one(bulk()) + e_up::<BigRational>(2).gp(&e_up(1))));
        assert!(l_total(&c).is_zero());
    }

    #[test]
    fn graded_split_reassembles_the_square() {
        let phi = scalar_field(x_var(1).clone() * x_var(2))
            + lift(&e_up::<BigRational>(1).gp(&e_up(2))).gp(&scalar_field(x_var(0)));
        let split = quadratic_split(&phi);
        let total = l_total(&l_total(&phi));
        assert_eq!(split.total(), total);
        // The cross term matches its closed form and the contraction part
        // matches the component form, both exactly.
        assert_eq!(split.cross, QuadraticSplit::cross_closed_form(&phi));
        assert_eq!(split.contraction, contraction_component_form(&phi));
    }

    #[test]
    fn split_of_a_constant_is_zero() {
        let c: F = lift(&Multivector::one(bulk()));
        let split = quadratic_split(&c);
        assert!(split.contraction.is_zero() && split.cross.is_zero() && split.wedge.is_zero());
    }

    #[test]
    fn operator_commutators_close_on_the_derivations() {
        // [L_AB, L_CD] phi = (eta_AC D_BD + eta_BD D_AC - eta_BC D_AD
        //                     - eta_AD D_BC) phi: the momentum factor
        // squares to -1, so the bracket lands on the derivation part.
        let phi = scalar_field(x_var(1).clone() * x_var(3))
            + lift(&e_up::<BigRational>(4)).gp(&scalar_field(x_var(0) * x_var(2)));
        let pairs = [((1u8, 2u8), (2u8, 3u8)), ((1, 0), (1, 2)), ((3, 4), (4, 0))];
        for ((a, b), (c, d)) in pairs {
            let lhs = angular_op(&angular_op(&phi, c, d), a, b)
                - angular_op(&angular_op(&phi, a, b), c, d);
            let eta = |x: u8, y: u8| if x == y { eta_bulk(x) } else { 0 };
            let mut rhs: F = Multivector::zero(bulk());
            let mut add = |coeff: i64, x: u8, y: u8| {
                if coeff == 0 || x == y {
                    return;
                }
                let t = derivation_op(&phi, x, y);
                rhs = rhs.clone() + if coeff == 1 { t } else { -t };
            };
            add(eta(a, c), b, d);
            add(eta(b, d), a, c);
            add(-eta(b, c), a, d);
            add(-eta(a, d), b, c);
            assert!((lhs - rhs).is_zero(), "pair ({a},{b}),({c},{d})");
        }
    }

    #[test]
    fn quartic_identity_on_a_basis_blade() {
        // F = E^1E^2E^3E^4 has FF = +1 and matches -64 l^2 W.W.
        let f = Multivector::blade(bulk(), &[1, 2, 3, 4], rat(1, 1));
        assert_eq!(f.gp(&f).scalar_part(), rat(1, 1));
        assert!(casimir_quartic_check(&f, &rat(1, 1)).unwrap());
        assert!(casimir_quartic_check(&Multivector::zero(bulk()), &rat(3, 1)).unwrap());
        let not4 = Multivector::blade(bulk(), &[1, 2], rat(1, 1));
        assert!(casimir_quartic_check(&not4, &rat(1, 1)).is_err());
    }

    #[test]
    fn tangency_detects_the_normal_direction() {
        let ok: F = lift(&Multivector::one(bulk()))
            + lift(&e_up::<BigRational>(1).gp(&e_up(2))).gp(&scalar_field(x_var(0)));
        assert!(tangency_check(&ok));
        let bad: F = lift(&e_up::<BigRational>(1).gp(&e_up(4)));
        assert!(!tangency_check(&bad));
    }
}
