//! Brute-force reference product, independent of the bitmask kernel.
//!
//! Multiplies basis blades by concatenating their factor lists and sorting
//! with explicit adjacent transpositions, contracting equal neighbours with
//! the metric square. The verification suites compare the kernel against
//! this on every basis-blade pair; keeping the slow path in the library lets
//! the command-line runner exercise it too.

use crate::multivector::Multivector;
use crate::scalar::Scalar;
use crate::signature::Signature;
use std::sync::Arc;

/// Product of two basis blades as (sign, result mask), by term rewriting on
/// the explicit factor sequence.
pub fn naive_blade_product(sig: &Signature, a: u16, b: u16) -> (i8, u16) {
    let mut factors: Vec<usize> = Vec::new();
    for i in 0..sig.dim() {
        if a >> i & 1 == 1 {
            factors.push(i);
        }
    }
    for i in 0..sig.dim() {
        if b >> i & 1 == 1 {
            factors.push(i);
        }
    }
    let mut sign = 1i8;
    // Bubble to canonical order, one adjacent swap at a time; each swap of
    // distinct generators flips the sign, equal neighbours contract to the
    // metric square.
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < factors.len() {
            if factors[i] == factors[i + 1] {
                sign *= sig.square(factors[i]);
                factors.drain(i..=i + 1);
                changed = true;
            } else if factors[i] > factors[i + 1] {
                factors.swap(i, i + 1);
                sign = -sign;
                changed = true;
            } else {
                i += 1;
            }
        }
        if !changed {
            break;
        }
    }
    let mut mask = 0u16;
    for f in factors {
        mask |= 1 << f;
    }
    (sign, mask)
}

/// Term-by-term reference geometric product.
pub fn naive_gp<R: Scalar>(a: &Multivector<R>, b: &Multivector<R>) -> Multivector<R> {
    assert_eq!(a.signature(), b.signature(), "signature mismatch");
    let sig: &Arc<Signature> = a.signature();
    let mut out = Multivector::zero(sig);
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let (sign, mask) = naive_blade_product(sig, ma, mb);
            let coeff = ca.clone() * cb.clone();
            let term = Multivector::from_terms(
                sig,
                [(mask, if sign == 1 { coeff } else { -coeff })],
            );
            out = out + term;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::blade_product;
    use crate::signature::{bulk, canonical};

    #[test]
    fn oracle_matches_kernel_on_all_bulk_blade_pairs() {
        let sig = bulk();
        for a in 0..sig.blade_count() as u16 {
            for b in 0..sig.blade_count() as u16 {
                assert_eq!(
                    naive_blade_product(sig, a, b),
                    blade_product(sig, a, b),
                    "blade pair ({a:#07b}, {b:#07b})"
                );
            }
        }
    }

    #[test]
    fn oracle_matches_kernel_in_every_canonical_signature() {
        for sig in canonical() {
            for a in 0..sig.blade_count() as u16 {
                for b in 0..sig.blade_count() as u16 {
                    assert_eq!(naive_blade_product(sig, a, b), blade_product(sig, a, b));
                }
            }
        }
    }
}
