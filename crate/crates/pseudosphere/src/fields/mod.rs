//! Exact polynomial multivector fields and the angular-momentum operator
//! calculus built on them.
//!
//! A field is a multivector whose blade coefficients are polynomials; the
//! Clifford kernel is reused verbatim with the polynomial ring as the
//! coefficient scalar. Bulk fields have five variables ordered like the
//! bulk labels (X^1,X^2,X^3,X^4,X^0); chart fields have four (x^0..x^3).

mod classical;
mod heuristic;
mod ops;
mod projective;
mod wave;

pub use classical::*;
pub use heuristic::*;
pub use ops::*;
pub use projective::*;
pub use wave::*;

use crate::error::{Error, Result};
use crate::multivector::Multivector;
use crate::poly::Poly;
use crate::scalar::{NumericScalar, Scalar};

/// Multivector field over the five bulk coordinates.
pub type BulkField<R> = Multivector<Poly<R, 5>>;
/// Multivector field over the four chart coordinates (any signature).
pub type ChartField<R> = Multivector<Poly<R, 4>>;

/// Lifts a constant multivector into a polynomial field.
pub fn lift<R: Scalar, const N: usize>(mv: &Multivector<R>) -> Multivector<Poly<R, N>> {
    Multivector::from_terms(
        mv.signature(),
        mv.terms().map(|(m, c)| (m, Poly::constant(c.clone()))),
    )
}

/// Multiplies every blade coefficient by a scalar polynomial.
pub fn scale_field<R: Scalar, const N: usize>(
    field: &Multivector<Poly<R, N>>,
    p: &Poly<R, N>,
) -> Multivector<Poly<R, N>> {
    Multivector::from_terms(
        field.signature(),
        field.terms().map(|(m, c)| (m, c.clone() * p.clone())),
    )
}

/// Coefficient-wise partial derivative with respect to variable `var`.
pub fn partial_field<R: Scalar, const N: usize>(
    field: &Multivector<Poly<R, N>>,
    var: usize,
) -> Multivector<Poly<R, N>> {
    Multivector::from_terms(field.signature(), field.terms().map(|(m, c)| (m, c.partial(var))))
}

/// Evaluates the field at a point, yielding a constant multivector.
pub fn eval_field<R: Scalar, const N: usize>(
    field: &Multivector<Poly<R, N>>,
    point: &[R; N],
) -> Multivector<R> {
    Multivector::from_terms(field.signature(), field.terms().map(|(m, c)| (m, c.eval(point))))
}

/// Converts an exact field to float coefficients.
pub fn field_to_f64<R: NumericScalar, const N: usize>(
    field: &Multivector<Poly<R, N>>,
) -> Multivector<Poly<f64, N>> {
    Multivector::from_terms(field.signature(), field.terms().map(|(m, c)| (m, c.to_f64())))
}

/// Largest absolute coefficient across all blades and monomials.
pub fn field_max_abs<R: NumericScalar, const N: usize>(field: &Multivector<Poly<R, N>>) -> f64 {
    field.terms().map(|(_, c)| c.max_abs_coeff()).fold(0.0, f64::max)
}

/// Which root of the quadratic constant is in force.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambdaBranch {
    /// `lambda^2 = m^2 + 4 sqrt(3) m / l`, real for all positive masses.
    Plus,
    /// `lambda^2 = m^2 - 4 sqrt(3) m / l`, real only for `m >= 4 sqrt(3)/l`.
    Minus,
}

/// Radius, mass and derived constants of the wave operators (spin fixed 1/2).
#[derive(Clone, Copy, Debug)]
pub struct OperatorParams {
    pub ell: f64,
    pub mass: f64,
    pub branch: LambdaBranch,
}

impl OperatorParams {
    pub const SPIN: f64 = 0.5;

    pub fn new(ell: f64, mass: f64) -> Self {
        assert!(ell > 0.0 && mass >= 0.0);
        OperatorParams { ell, mass, branch: LambdaBranch::Plus }
    }

    pub fn with_branch(ell: f64, mass: f64, branch: LambdaBranch) -> Self {
        assert!(ell > 0.0 && mass >= 0.0);
        OperatorParams { ell, mass, branch }
    }

    pub fn lambda_squared(&self) -> f64 {
        let shift = 4.0 * 3f64.sqrt() * self.mass / self.ell;
        match self.branch {
            LambdaBranch::Plus => self.mass * self.mass + shift,
            LambdaBranch::Minus => self.mass * self.mass - shift,
        }
    }

    /// The positive root; fails on the alternate branch below its mass bound.
    pub fn lambda(&self) -> Result<f64> {
        let sq = self.lambda_squared();
        if sq < 0.0 {
            return Err(Error::InvalidBranch(sq));
        }
        Ok(sq.sqrt())
    }

    /// The constant of the transported equation, identified with `lambda`.
    pub fn kappa(&self) -> Result<f64> {
        self.lambda()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::signature::bulk;
    use num::BigRational;

    #[test]
    fn lift_and_eval_are_inverse_on_constants() {
        let mv = Multivector::blade(bulk(), &[1, 2], rat(3, 5)) + Multivector::one(bulk());
        let field: BulkField<BigRational> = lift(&mv);
        let back = eval_field(&field, &std::array::from_fn(|_| rat(9, 7)));
        assert_eq!(back, mv);
    }

    #[test]
    fn branch_constants() {
        let p = OperatorParams::new(2.0, 1.0);
        assert!((p.lambda_squared() - (1.0 + 2.0 * 3f64.sqrt())).abs() < 1e-15);
        assert!(p.lambda().is_ok());
        let m = OperatorParams::with_branch(2.0, 1.0, LambdaBranch::Minus);
        assert!(matches!(m.lambda(), Err(Error::InvalidBranch(_))));
        // On the alternate branch the bound is m >= 4 sqrt(3) / l.
        let ok = OperatorParams::with_branch(2.0, 4.0, LambdaBranch::Minus);
        assert!(ok.lambda().is_ok());
    }

    #[test]
    fn spin_half_constant_fold() {
        // 4 sqrt(3) m l = 8 l m sqrt(s(s+1)) at s = 1/2.
        let (m, ell) = (1.7, 3.1);
        let lhs = 4.0 * 3f64.sqrt() * m * ell;
        let rhs = 8.0 * ell * m * (OperatorParams::SPIN * (OperatorParams::SPIN + 1.0)).sqrt();
        assert!((lhs - rhs).abs() <= 1e-15 * lhs.abs());
    }
}
