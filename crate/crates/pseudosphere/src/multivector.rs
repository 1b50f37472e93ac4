//! Sparse multivectors over a pseudo-Euclidean signature.
//!
//! A blade is a bitmask over label positions (bit k set means the basis
//! vector at position k is a factor; canonical factor order is ascending
//! position). The geometric product of basis blades is `a XOR b` with a sign
//! from counting transpositions plus the metric squares of repeated vectors.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::scalar::{NumericScalar, Scalar};
use crate::signature::Signature;

/// Sign and result mask of a basis-blade geometric product.
///
/// Counts the transpositions needed to interleave the factors of `b` into
/// `a`, then applies the metric square for every repeated basis vector.
pub fn blade_product(sig: &Signature, a: u16, b: u16) -> (i8, u16) {
    debug_assert!(sig.valid_mask(a) && sig.valid_mask(b));
    let mut swaps = 0u32;
    // Each bit of b must move left past the bits of a above its position.
    let mut a_rest = a;
    for i in 0..sig.dim() {
        if (b >> i) & 1 == 1 {
            swaps += u32::from(a_rest >> (i + 1)).count_ones();
        }
        a_rest &= !(1 << i);
    }
    let mut sign = if swaps % 2 == 0 { 1i8 } else { -1 };
    let mut shared = a & b;
    while shared != 0 {
        let i = shared.trailing_zeros() as usize;
        sign *= sig.square(i);
        shared &= shared - 1;
    }
    (sign, a ^ b)
}

/// Reversion sign for a blade of grade `g`: `(-1)^(g(g-1)/2)`.
pub fn reversion_sign(grade: u32) -> i8 {
    if (grade * grade.wrapping_sub(1) / 2) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A sparse multivector: map from blade mask to a nonzero coefficient.
#[derive(Clone, PartialEq)]
pub struct Multivector<R: Scalar> {
    sig: Arc<Signature>,
    terms: BTreeMap<u16, R>,
}

impl<R: Scalar> Multivector<R> {
    pub fn zero(sig: &Arc<Signature>) -> Self {
        Multivector { sig: sig.clone(), terms: BTreeMap::new() }
    }

    pub fn scalar(sig: &Arc<Signature>, value: R) -> Self {
        let mut mv = Self::zero(sig);
        mv.add_term(0, value);
        mv
    }

    pub fn one(sig: &Arc<Signature>) -> Self {
        Self::scalar(sig, R::one())
    }

    /// Basis vector with the given label, e.g. `E^0` in the bulk algebra.
    pub fn basis_vector(sig: &Arc<Signature>, label: u8) -> Self {
        let pos = sig
            .position_of(label)
            .unwrap_or_else(|| panic!("label {label} not in signature {}", sig.name()));
        let mut mv = Self::zero(sig);
        mv.add_term(1 << pos, R::one());
        mv
    }

    /// Reciprocal (index-lowered) basis vector: `E_A = eta_AA E^A`.
    pub fn basis_vector_down(sig: &Arc<Signature>, label: u8) -> Self {
        let pos = sig.position_of(label).expect("label not in signature");
        let v = Self::basis_vector(sig, label);
        if sig.square(pos) == 1 {
            v
        } else {
            -v
        }
    }

    /// Ordered product of basis vectors given by labels, scaled by `coeff`.
    pub fn blade(sig: &Arc<Signature>, labels: &[u8], coeff: R) -> Self {
        let mut acc = Self::scalar(sig, coeff);
        for &l in labels {
            acc = acc.gp(&Self::basis_vector(sig, l));
        }
        acc
    }

    pub fn from_terms(sig: &Arc<Signature>, terms: impl IntoIterator<Item = (u16, R)>) -> Self {
        let mut mv = Self::zero(sig);
        for (mask, c) in terms {
            assert!(sig.valid_mask(mask), "blade mask out of range for signature");
            mv.add_term(mask, c);
        }
        mv
    }

    /// Unit pseudoscalar: ordered product of all basis vectors.
    pub fn pseudoscalar(sig: &Arc<Signature>) -> Self {
        let mut mv = Self::zero(sig);
        mv.add_term(sig.pseudoscalar_mask(), R::one());
        mv
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn terms(&self) -> impl Iterator<Item = (u16, &R)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mask: u16) -> R {
        self.terms.get(&mask).cloned().unwrap_or_else(R::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, mask: u16, value: R) {
        if value.is_zero() {
            return;
        }
        match self.terms.entry(mask) {
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

    fn assert_compatible(&self, rhs: &Self) {
        assert!(
            self.sig == rhs.sig,
            "signature mismatch: {} vs {}",
            self.sig.name(),
            rhs.sig.name()
        );
    }

    /// Geometric product.
    pub fn gp(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(&self.sig);
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &rhs.terms {
                let (sign, mask) = blade_product(&self.sig, ma, mb);
                let prod = ca.clone() * cb.clone();
                out.add_term(mask, apply_sign(prod, sign));
            }
        }
        out
    }

    /// Exterior (wedge) product: the grade-raising part.
    pub fn wedge(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(&self.sig);
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &rhs.terms {
                if ma & mb != 0 {
                    continue;
                }
                let (sign, mask) = blade_product(&self.sig, ma, mb);
                out.add_term(mask, apply_sign(ca.clone() * cb.clone(), sign));
            }
        }
        out
    }

    /// Left contraction `a ⌟ b`: the grade-lowering part. On basis blades it
    /// is nonzero only when every factor of `a` also occurs in `b`; the
    /// extension to general arguments is by bilinearity.
    pub fn left_contraction(&self, rhs: &Self) -> Self {
        self.assert_compatible(rhs);
        let mut out = Self::zero(&self.sig);
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &rhs.terms {
                if ma & mb != ma {
                    continue;
                }
                let (sign, mask) = blade_product(&self.sig, ma, mb);
                out.add_term(mask, apply_sign(ca.clone() * cb.clone(), sign));
            }
        }
        out
    }

    /// Scalar product `<rev(a) b>_0`.
    pub fn scalar_product(&self, rhs: &Self) -> R {
        self.assert_compatible(rhs);
        let mut acc = R::zero();
        for (&ma, ca) in &self.terms {
            if let Some(cb) = rhs.terms.get(&ma) {
                let (sign, mask) = blade_product(&self.sig, ma, ma);
                debug_assert_eq!(mask, 0);
                let rev = reversion_sign(ma.count_ones());
                acc = acc + apply_sign(ca.clone() * cb.clone(), sign * rev);
            }
        }
        acc
    }

    /// Grade-k part.
    pub fn grade(&self, k: usize) -> Result<Self> {
        if k > self.sig.dim() {
            return Err(Error::InvalidGrade { grade: k, dim: self.sig.dim() });
        }
        Ok(self.grade_select(|g| g as usize == k))
    }

    /// Part of the multivector whose blade grades satisfy the predicate.
    pub fn grade_select(&self, keep: impl Fn(u32) -> bool) -> Self {
        let mut out = Self::zero(&self.sig);
        for (&m, c) in &self.terms {
            if keep(m.count_ones()) {
                out.add_term(m, c.clone());
            }
        }
        out
    }

    pub fn even_part(&self) -> Self {
        self.grade_select(|g| g % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.grade_select(|g| g % 2 == 1)
    }

    /// Grades present in the value.
    pub fn grades(&self) -> Vec<usize> {
        let mut gs: Vec<usize> = self.terms.keys().map(|m| m.count_ones() as usize).collect();
        gs.sort_unstable();
        gs.dedup();
        gs
    }

    pub fn is_homogeneous(&self, k: usize) -> bool {
        self.terms.keys().all(|m| m.count_ones() as usize == k)
    }

    /// Reversion: reverses factor order in every blade.
    pub fn rev(&self) -> Self {
        let mut out = Self::zero(&self.sig);
        for (&m, c) in &self.terms {
            out.add_term(m, apply_sign(c.clone(), reversion_sign(m.count_ones())));
        }
        out
    }

    /// Scalar (grade-0) part.
    pub fn scalar_part(&self) -> R {
        self.coeff(0)
    }

    pub fn scale(&self, s: &R) -> Self {
        let mut out = Self::zero(&self.sig);
        for (&m, c) in &self.terms {
            out.add_term(m, c.clone() * s.clone());
        }
        out
    }

    /// Duality `⋆a = a ⌟ τ` with τ the signature's unit pseudoscalar.
    /// For a full pseudoscalar this coincides with right-multiplication by τ.
    pub fn hodge(&self) -> Self {
        self.gp(&Self::pseudoscalar(&self.sig))
    }

    /// Two-sided inverse of `⋆`: right-multiplication by `τ^{-1}`.
    pub fn hodge_inv(&self) -> Self {
        let tau = Self::pseudoscalar(&self.sig);
        let tau_sq = tau.gp(&tau).scalar_part();
        // τ^{-1} = τ / τ², and τ² = ±1 for a non-degenerate signature.
        let inv = tau.scale(&tau_sq);
        self.gp(&inv)
    }

    /// Canonical text form, e.g. `1 + 3/2*e14`. Compound coefficients
    /// (polynomials) are parenthesized.
    pub fn to_canonical_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (&m, c) in &self.terms {
            let coeff = format!("{c}");
            let coeff = if coeff.contains(' ') { format!("({coeff})") } else { coeff };
            if m == 0 {
                parts.push(coeff);
            } else {
                let labels: String = (0..self.sig.dim())
                    .filter(|i| m >> i & 1 == 1)
                    .map(|i| char::from(b'0' + self.sig.label(i)))
                    .collect();
                parts.push(format!("{coeff}*e{labels}"));
            }
        }
        parts.join(" + ")
    }
}

fn apply_sign<R: Scalar>(value: R, sign: i8) -> R {
    match sign {
        1 => value,
        -1 => -value,
        _ => unreachable!("blade signs are +-1 for non-degenerate metrics"),
    }
}

impl<R: NumericScalar> Multivector<R> {
    /// Euclidean norm of the coefficient vector, in f64.
    pub fn coeff_norm(&self) -> f64 {
        self.terms
            .values()
            .map(|c| {
                let x = c.to_f64();
                x * x
            })
            .sum::<f64>()
            .sqrt()
    }

    /// Largest absolute coefficient, in f64.
    pub fn max_abs_coeff(&self) -> f64 {
        self.terms.values().map(|c| c.to_f64().abs()).fold(0.0, f64::max)
    }

    pub fn to_f64(&self) -> Multivector<f64> {
        Multivector {
            sig: self.sig.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c.to_f64())).collect(),
        }
    }

    /// Max-abs coefficient of the difference.
    pub fn distance(&self, rhs: &Self) -> f64 {
        (self.clone() - rhs.clone()).max_abs_coeff()
    }
}

impl Multivector<num::BigRational> {
    /// Exponential of a simple bivector by truncated rational series.
    ///
    /// Requires `B` grade-2 with `B²` scalar, so the series collapses onto
    /// `span{1, B}`; the scalar series for cosh/sinh (or cos/sin) is summed
    /// to `terms` terms in exact arithmetic.
    pub fn exp_bivector(&self, terms: usize) -> Result<Self> {
        use num::BigRational;
        if !self.is_zero() && !self.is_homogeneous(2) {
            return Err(Error::NotABivector);
        }
        let b_sq = self.gp(self);
        if !b_sq.grade_select(|g| g != 0).is_zero() {
            return Err(Error::NonSimpleBivector);
        }
        let beta = b_sq.scalar_part();
        // c = sum beta^k / (2k)!,  s = sum beta^k / (2k+1)!;  exp B = c + s B.
        let mut c = BigRational::from_ratio(0, 1);
        let mut s = BigRational::from_ratio(0, 1);
        let mut c_term = BigRational::from_ratio(1, 1);
        let mut s_term = BigRational::from_ratio(1, 1);
        for k in 0..terms.max(1) {
            c = c + c_term.clone();
            s = s + s_term.clone();
            let k = k as i64;
            c_term = c_term * beta.clone()
                * BigRational::from_ratio(1, (2 * k + 1) * (2 * k + 2));
            s_term = s_term * beta.clone()
                * BigRational::from_ratio(1, (2 * k + 2) * (2 * k + 3));
        }
        Ok(Multivector::scalar(&self.sig, c) + self.scale(&s))
    }
}

impl Multivector<f64> {
    /// Exponential of a bivector. Uses the closed form when `B²` is
    /// (numerically) scalar; otherwise a truncated power series with `terms`
    /// summands.
    pub fn exp_bivector(&self, terms: usize) -> Result<Self> {
        if !self.is_zero() && !self.is_homogeneous(2) {
            return Err(Error::NotABivector);
        }
        let b_sq = self.gp(self);
        let off = b_sq.grade_select(|g| g != 0).max_abs_coeff();
        let scale = 1.0 + b_sq.scalar_part().abs();
        if off <= 1e-12 * scale {
            let beta = b_sq.scalar_part();
            let (c, s) = if beta >= 0.0 {
                let r = beta.sqrt();
                (r.cosh(), if r == 0.0 { 1.0 } else { r.sinh() / r })
            } else {
                let r = (-beta).sqrt();
                (r.cos(), if r == 0.0 { 1.0 } else { r.sin() / r })
            };
            return Ok(Multivector::scalar(&self.sig, c) + self.scale(&s));
        }
        // General series sum_k B^k / k!, with scaling and squaring.
        let mut squarings = 0u32;
        let mut scale = 1.0;
        while self.max_abs_coeff() * scale > 0.25 {
            scale *= 0.5;
            squarings += 1;
        }
        let scaled = self.scale(&scale);
        let mut acc = Multivector::one(&self.sig);
        let mut pow = Multivector::one(&self.sig);
        for k in 1..=terms.max(1) {
            pow = pow.gp(&scaled).scale(&(1.0 / k as f64));
            acc = acc + pow.clone();
        }
        for _ in 0..squarings {
            acc = acc.gp(&acc);
        }
        Ok(acc)
    }

    /// Checks `u rev(u) = 1` within `tol` and returns the residual on failure.
    pub fn versor_check(&self, tol: f64) -> Result<()> {
        let r = self.gp(&self.rev()) - Multivector::one(&self.sig);
        let res = r.max_abs_coeff();
        if res < tol {
            Ok(())
        } else {
            Err(Error::NotAVersor(res))
        }
    }
}

impl<R: Scalar> Add for Multivector<R> {
    type Output = Multivector<R>;
    fn add(self, rhs: Self) -> Self {
        self.assert_compatible(&rhs);
        let mut out = self;
        for (m, c) in rhs.terms {
            out.add_term(m, c);
        }
        out
    }
}

impl<R: Scalar> Sub for Multivector<R> {
    type Output = Multivector<R>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<R: Scalar> Neg for Multivector<R> {
    type Output = Multivector<R>;
    fn neg(self) -> Self {
        let mut out = Self::zero(&self.sig);
        for (m, c) in self.terms {
            out.add_term(m, -c);
        }
        out
    }
}

impl<R: Scalar> Mul for &Multivector<R> {
    type Output = Multivector<R>;
    fn mul(self, rhs: Self) -> Multivector<R> {
        self.gp(rhs)
    }
}

impl<R: Scalar> fmt::Display for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl<R: Scalar> fmt::Debug for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.sig.name(), self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::signature::{bulk, canonical, minkowski};
    use num::BigRational;

    type Mv = Multivector<BigRational>;

    fn e(label: u8) -> Mv {
        Mv::basis_vector(bulk(), label)
    }

    #[test]
    fn timelike_generator_squares_to_minus_one() {
        // E^0 E^0 = -1 in the bulk signature diag(1,1,1,1,-1).
        let sq = e(0).gp(&e(0));
        assert_eq!(sq, Mv::scalar(bulk(), rat(-1, 1)));
    }

    #[test]
    fn one_is_the_identity() {
        let a = Mv::blade(bulk(), &[1, 2], rat(3, 2)) + Mv::basis_vector(bulk(), 0);
        assert_eq!(Mv::one(bulk()).gp(&a), a);
        assert_eq!(a.gp(&Mv::one(bulk())), a);
    }

    #[test]
    fn generator_relations_hold_in_every_canonical_signature() {
        for sig in canonical() {
            for i in 0..sig.dim() {
                for j in 0..sig.dim() {
                    let a = Mv::basis_vector(sig, sig.label(i));
                    let b = Mv::basis_vector(sig, sig.label(j));
                    let anti = a.gp(&b) + b.gp(&a);
                    let expected = if i == j {
                        Mv::scalar(sig, rat(2 * i64::from(sig.square(i)), 1))
                    } else {
                        Mv::zero(sig)
                    };
                    assert_eq!(anti, expected, "pair ({i},{j}) in {}", sig.name());
                }
            }
        }
    }

    #[test]
    fn contraction_pulls_a_vector_out_of_a_bivector() {
        // E^1 ⌟ (E_1 ∧ E_2) = E_2 (labels 1,2 have positive squares).
        let e1 = e(1);
        let target = Mv::basis_vector_down(bulk(), 1).wedge(&Mv::basis_vector_down(bulk(), 2));
        assert_eq!(e1.left_contraction(&target), Mv::basis_vector_down(bulk(), 2));
    }

    #[test]
    fn wedge_of_vector_with_itself_vanishes() {
        let a = e(1) + e(0).scale(&rat(5, 3)) + e(3).scale(&rat(-2, 7));
        assert!(a.wedge(&a).is_zero());
    }

    #[test]
    fn hodge_at_grade_zero_gives_pseudoscalar() {
        assert_eq!(Mv::one(bulk()).hodge(), Mv::pseudoscalar(bulk()));
    }

    #[test]
    fn hodge_inverse_is_minus_hodge_in_the_bulk() {
        // With τ² = -1 the inverse duality is the negated duality, at every
        // grade, which covers the grade-1 statement in particular.
        for labels in [vec![], vec![1], vec![1, 2], vec![0, 3, 4]] {
            let a = Mv::blade(bulk(), &labels, rat(7, 5));
            assert_eq!(a.hodge_inv(), -a.hodge());
            assert_eq!(a.hodge().hodge_inv(), a);
        }
    }

    #[test]
    fn grade_parts_sum_to_the_value() {
        let a = Mv::one(bulk())
            + Mv::blade(bulk(), &[1, 2], rat(3, 1))
            + Mv::blade(bulk(), &[1, 2, 3, 4, 0], rat(-1, 2));
        let mut acc = Mv::zero(bulk());
        for k in 0..=5 {
            acc = acc + a.grade(k).unwrap();
        }
        assert_eq!(acc, a);
        assert!(a.grade(6).is_err());
    }

    #[test]
    fn reversion_is_an_involution_and_antiautomorphism() {
        let a = Mv::blade(bulk(), &[1, 2], rat(3, 4)) + e(0);
        let b = Mv::blade(bulk(), &[2, 3, 4], rat(1, 3)) + Mv::one(bulk());
        assert_eq!(a.rev().rev(), a);
        assert_eq!(a.gp(&b).rev(), b.rev().gp(&a.rev()));
    }

    #[test]
    fn scalar_product_uses_reversion() {
        let b = Mv::blade(bulk(), &[1, 2], rat(1, 1));
        // <rev(e12) e12>_0 = <e21 e12>_0 = +1 for spatial labels.
        assert_eq!(b.scalar_product(&b), rat(1, 1));
    }

    #[test]
    #[should_panic(expected = "signature mismatch")]
    fn mixing_signatures_panics() {
        let a = Mv::one(bulk());
        let b = Mv::one(minkowski());
        let _ = a.gp(&b);
    }

    #[test]
    fn exact_exp_of_zero_is_one() {
        let z = Mv::zero(bulk());
        assert_eq!(z.exp_bivector(10).unwrap(), Mv::one(bulk()));
    }

    #[test]
    fn exact_exp_of_a_null_plane_is_exactly_unit() {
        // B = (E^1 + E^0) ∧ E^2 squares to zero, so the series terminates:
        // exp(B) = 1 + B with u rev(u) = 1 in exact arithmetic.
        let b = (e(1) + e(0)).wedge(&e(2));
        assert_eq!(b.gp(&b), Mv::zero(bulk()));
        let u = b.exp_bivector(10).unwrap();
        assert_eq!(u, Mv::one(bulk()) + b);
        assert_eq!(u.gp(&u.rev()), Mv::one(bulk()));
    }

    #[test]
    fn exact_exp_rejects_non_simple_bivectors() {
        // E^1E^2 + E^3E^4 squares to a scalar plus a grade-4 part.
        let b = Mv::blade(bulk(), &[1, 2], rat(1, 1)) + Mv::blade(bulk(), &[3, 4], rat(1, 1));
        assert!(matches!(b.exp_bivector(10), Err(Error::NonSimpleBivector)));
        let v = e(1);
        assert!(matches!(v.exp_bivector(10), Err(Error::NotABivector)));
    }

    #[test]
    fn float_exp_closed_form_is_a_versor() {
        // F = E^1E^0 squares to +1; exp(zF) = cosh z + F sinh z.
        let f = Mv::blade(bulk(), &[1, 0], rat(1, 1)).to_f64();
        let z = 0.73_f64;
        let u = f.scale(&z).exp_bivector(30).unwrap();
        let expect = Multivector::scalar(bulk(), z.cosh()) + f.scale(&z.sinh());
        assert!(u.distance(&expect) < 1e-12);
        u.versor_check(1e-12).unwrap();
    }

    #[test]
    fn canonical_string_roundtrip_form() {
        let a = Mv::scalar(bulk(), rat(3, 2)).gp(&Mv::blade(bulk(), &[1, 4], rat(1, 1)))
            + Mv::one(bulk());
        assert_eq!(a.to_canonical_string(), "1 + 3/2*e14");
        assert_eq!(Mv::zero(bulk()).to_canonical_string(), "0");
    }
}
