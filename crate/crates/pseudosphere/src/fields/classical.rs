//! Classical angular-momentum identities for a point particle on the
//! pseudo-sphere, in exact rational arithmetic.

use num::traits::Zero;
use num::BigRational;

use crate::algebras::{eta_bulk, generator_pairs, BULK_LABELS};
use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::signature::bulk;

type Mv = Multivector<BigRational>;

/// Position and momentum covectors with `x.x = l^2 > 0` and `x.p = 0`.
///
/// The position is given by components `X^A` on the reciprocal basis
/// (`x = X^A E_A`), the momentum by components `P_A` on the direct basis
/// (`p = P_A E^A`); the momentum input is projected orthogonal to the
/// position so the constraint holds by construction.
#[derive(Clone, Debug)]
pub struct ClassicalState {
    pub x: Mv,
    pub p: Mv,
    /// Position components `X^A` in label order.
    pub x_upper: [BigRational; 5],
    pub ell_sq: BigRational,
}

fn on_reciprocal_basis(components: &[BigRational; 5]) -> Mv {
    let mut acc = Mv::zero(bulk());
    for (i, c) in components.iter().enumerate() {
        acc = acc + Mv::basis_vector_down(bulk(), BULK_LABELS[i]).scale(c);
    }
    acc
}

fn on_direct_basis(components: &[BigRational; 5]) -> Mv {
    let mut acc = Mv::zero(bulk());
    for (i, c) in components.iter().enumerate() {
        acc = acc + Mv::basis_vector(bulk(), BULK_LABELS[i]).scale(c);
    }
    acc
}

fn inner(a: &Mv, b: &Mv) -> BigRational {
    a.scalar_product(b)
}

impl ClassicalState {
    pub fn new(x_upper: &[BigRational; 5], p_raw: &[BigRational; 5]) -> Result<Self> {
        let x = on_reciprocal_basis(x_upper);
        let ell_sq = inner(&x, &x);
        if ell_sq <= BigRational::zero() {
            return Err(Error::BadConfig("position must have positive square".into()));
        }
        let p0 = on_direct_basis(p_raw);
        let p = p0.clone() - x.scale(&(inner(&x, &p0) / ell_sq.clone()));
        debug_assert!(inner(&x, &p).is_zero());
        Ok(ClassicalState { x, p, x_upper: x_upper.clone(), ell_sq })
    }

    /// The angular-momentum biform `l = x ∧ p`.
    pub fn biform(&self) -> Mv {
        self.x.wedge(&self.p)
    }

    /// Momentum components `P_A` read back from the projected momentum.
    pub fn p_lower(&self) -> [BigRational; 5] {
        std::array::from_fn(|i| self.p.coeff(1 << i))
    }

    /// Verifies the full identity set exactly; returns the failures.
    pub fn identity_failures(&self) -> Vec<&'static str> {
        let mut failures = Vec::new();
        let l = self.biform();
        // Orthogonality turns the product into the wedge: x p = x ∧ p.
        if !(self.x.gp(&self.p) - l.clone()).is_zero() {
            failures.push("product-equals-wedge");
        }
        // l^2 = x p x p = -p x x p = -l^2 p^2 (a scalar).
        let l_sq = l.gp(&l);
        if !l_sq.grade_select(|g| g != 0).is_zero() {
            failures.push("biform-square-scalar");
        }
        let xpxp = self.x.gp(&self.p).gp(&self.x).gp(&self.p);
        if !(l_sq.clone() - xpxp.clone()).is_zero() {
            failures.push("square-as-xpxp");
        }
        let pxxp = self.p.gp(&self.x).gp(&self.x).gp(&self.p);
        if !(xpxp + pxxp.clone()).is_zero() {
            failures.push("xpxp-antisymmetry");
        }
        let p_sq = self.p.gp(&self.p).scalar_part();
        let expect = -(self.ell_sq.clone() * p_sq);
        if l_sq.scalar_part() != expect {
            failures.push("radius-momentum-square");
        }
        // The classical biform is simple: l ∧ l = 0, hence l^2 = l ⌟ l.
        if !l.wedge(&l).is_zero() {
            failures.push("wedge-vanishes");
        }
        if !(l.left_contraction(&l) - l_sq).is_zero() {
            failures.push("square-equals-contraction");
        }
        // Component form from the raw data: the coefficient of E^A E^B in l
        // is L_AB = eta_AC X^C P_B - eta_BC X^C P_A.
        let p_lower = self.p_lower();
        let pos = |label: u8| bulk().position_of(label).unwrap();
        let x_lowered = |label: u8| {
            let c = self.x_upper[pos(label)].clone();
            if eta_bulk(label) == 1 {
                c
            } else {
                -c
            }
        };
        for (a, b) in generator_pairs() {
            let mask = (1u16 << pos(a)) | (1 << pos(b));
            let expect = x_lowered(a) * p_lower[pos(b)].clone()
                - x_lowered(b) * p_lower[pos(a)].clone();
            if l.coeff(mask) != expect {
                failures.push("component-form");
                break;
            }
        }
        failures
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn r(n: i64, d: i64) -> BigRational {
        rat(n, d)
    }

    #[test]
    fn axis_aligned_state() {
        // x along E_4 with radius 3, p along E^1 with weight 2.
        let x = [r(0, 1), r(0, 1), r(0, 1), r(3, 1), r(0, 1)];
        let p = [r(2, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)];
        let state = ClassicalState::new(&x, &p).unwrap();
        assert_eq!(state.ell_sq, r(9, 1));
        assert!(state.identity_failures().is_empty());
        // l^2 = -l^2 p^2 with p^2 = eta^11 * 4 = 4: l^2 = -36.
        assert_eq!(state.biform().gp(&state.biform()).scalar_part(), r(-36, 1));
    }

    #[test]
    fn zero_momentum_trivializes() {
        let x = [r(1, 1), r(1, 1), r(0, 1), r(1, 1), r(1, 2)];
        let p: [BigRational; 5] = std::array::from_fn(|_| r(0, 1));
        let state = ClassicalState::new(&x, &p).unwrap();
        assert!(state.biform().is_zero());
        assert!(state.identity_failures().is_empty());
    }

    #[test]
    fn projection_enforces_orthogonality() {
        let x = [r(1, 2), r(1, 3), r(-2, 5), r(3, 2), r(1, 7)];
        let p = [r(1, 1), r(-1, 2), r(2, 3), r(1, 5), r(4, 3)];
        let state = ClassicalState::new(&x, &p).unwrap();
        assert!(inner(&state.x, &state.p).is_zero());
        assert!(state.identity_failures().is_empty(), "{:?}", state.identity_failures());
    }

    #[test]
    fn negative_square_positions_are_rejected() {
        // A position dominated by the timelike direction has x.x < 0.
        let x = [r(0, 1), r(0, 1), r(0, 1), r(0, 1), r(1, 1)];
        let p = [r(1, 1), r(0, 1), r(0, 1), r(0, 1), r(0, 1)];
        assert!(ClassicalState::new(&x, &p).is_err());
    }
}
