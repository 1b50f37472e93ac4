//! Sparse multivariate polynomials with exact partial differentiation.
//!
//! `Poly<R, N>` is a polynomial in `N` variables with coefficients in `R`.
//! It implements [`Scalar`], so `Multivector<Poly<R, N>>` runs through the
//! same Clifford kernel as plain multivectors; that composition is what the
//! field-operator modules build on.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::{One, Zero};

use crate::scalar::{NumericScalar, Scalar};

/// Exponent vector, one entry per variable.
pub type Exponents<const N: usize> = [u8; N];

#[derive(Clone, PartialEq)]
pub struct Poly<R: Scalar, const N: usize> {
    terms: BTreeMap<Exponents<N>, R>,
}

impl<R: Scalar, const N: usize> Poly<R, N> {
    pub fn constant(value: R) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], value);
        p
    }

    /// The monomial `x_i`.
    pub fn var(i: usize) -> Self {
        assert!(i < N, "variable index out of range");
        let mut exps = [0u8; N];
        exps[i] = 1;
        let mut p = Self::zero();
        p.add_term(exps, R::one());
        p
    }

    pub fn monomial(exps: Exponents<N>, coeff: R) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    fn add_term(&mut self, exps: Exponents<N>, value: R) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + value;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents<N>, &R)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Exact partial derivative with respect to variable `i`.
    pub fn partial(&self, i: usize) -> Self {
        assert!(i < N, "variable index out of range");
        let mut out = Self::zero();
        for (exps, c) in &self.terms {
            if exps[i] == 0 {
                continue;
            }
            let mut e = *exps;
            e[i] -= 1;
            out.add_term(e, c.clone() * R::from_int(i64::from(exps[i])));
        }
        out
    }

    pub fn eval(&self, point: &[R; N]) -> R {
        let mut acc = R::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term * point[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn map_coeffs<S: Scalar>(&self, f: impl Fn(&R) -> S) -> Poly<S, N> {
        let mut out = Poly::zero();
        for (exps, c) in &self.terms {
            out.add_term(*exps, f(c));
        }
        out
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map_coeffs(|c| c.clone() * s.clone())
    }
}

impl<R: NumericScalar, const N: usize> Poly<R, N> {
    pub fn to_f64(&self) -> Poly<f64, N> {
        self.map_coeffs(|c| c.to_f64())
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }
}

impl<R: Scalar, const N: usize> Add for Poly<R, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for (e, c) in rhs.terms {
            out.add_term(e, c);
        }
        out
    }
}

impl<R: Scalar, const N: usize> Sub for Poly<R, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Scalar, const N: usize> Neg for Poly<R, N> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut out = Self::zero();
        for (e, c) in self.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl<R: Scalar, const N: usize> Mul for Poly<R, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                let mut e = *ea;
                for i in 0..N {
                    e[i] += eb[i];
                }
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<R: Scalar, const N: usize> Zero for Poly<R, N> {
    fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<R: Scalar, const N: usize> One for Poly<R, N> {
    fn one() -> Self {
        Self::constant(R::one())
    }
}

impl<R: Scalar, const N: usize> Scalar for Poly<R, N> {
    fn from_ratio(num: i64, den: i64) -> Self {
        Self::constant(R::from_ratio(num, den))
    }
}

impl<R: Scalar, const N: usize> fmt::Display for Poly<R, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(exps, c)| {
                let vars: String = exps
                    .iter()
                    .enumerate()
                    .filter(|&(_, &e)| e > 0)
                    .map(|(i, &e)| {
                        if e == 1 {
                            format!("*x{i}")
                        } else {
                            format!("*x{i}^{e}")
                        }
                    })
                    .collect();
                format!("{c}{vars}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<R: Scalar, const N: usize> fmt::Debug for Poly<R, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num::BigRational;

    type P = Poly<BigRational, 3>;

    #[test]
    fn product_and_derivative() {
        // d/dx0 (x0^2 x1 + x2) = 2 x0 x1
        let p = P::var(0) * P::var(0) * P::var(1) + P::var(2);
        let d = p.partial(0);
        assert_eq!(d, P::monomial([1, 1, 0], rat(2, 1)));
        assert!(p.partial(2).eval(&[rat(5, 1), rat(7, 1), rat(0, 1)]) == rat(1, 1));
    }

    #[test]
    fn eval_matches_hand_expansion() {
        let p = P::var(0) * P::var(1) + P::constant(rat(1, 2));
        assert_eq!(p.eval(&[rat(2, 1), rat(3, 1), rat(0, 1)]), rat(13, 2));
    }

    #[test]
    fn partials_commute() {
        let p = P::var(0) * P::var(1) * P::var(1) + P::var(2) * P::var(0);
        assert_eq!(p.partial(0).partial(1), p.partial(1).partial(0));
    }
}
