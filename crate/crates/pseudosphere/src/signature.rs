//! Pseudo-Euclidean signatures and the canonical algebras.
//!
//! A signature declares an ordered list of basis-vector labels with metric
//! squares in {+1, -1}. Blades are bitmasks over the label positions, so the
//! dimension is capped at 16. The orientation (unit pseudoscalar) is the
//! ordered product of the basis vectors in label order.

use std::sync::Arc;
use std::sync::OnceLock;

use crate::error::Error;

/// Maximum number of basis vectors (bitmask width bound).
pub const MAX_DIM: usize = 16;

/// An ordered pseudo-Euclidean basis with per-vector metric squares.
#[derive(Debug, PartialEq, Eq)]
pub struct Signature {
    name: &'static str,
    labels: Vec<u8>,
    squares: Vec<i8>,
}

impl Signature {
    pub fn new(name: &'static str, labels: Vec<u8>, squares: Vec<i8>) -> Result<Arc<Self>, Error> {
        if labels.len() > MAX_DIM {
            return Err(Error::DimensionTooLarge(labels.len()));
        }
        if labels.len() != squares.len() {
            return Err(Error::BadSignature("labels and squares differ in length"));
        }
        if squares.iter().any(|s| *s != 1 && *s != -1) {
            return Err(Error::BadSignature("metric squares must be +1 or -1"));
        }
        let mut sorted = labels.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != labels.len() {
            return Err(Error::BadSignature("duplicate basis labels"));
        }
        Ok(Arc::new(Signature { name, labels, squares }))
    }

    pub fn name(&self) -> &'static str {
        self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Number of basis blades, `2^dim`.
    pub fn blade_count(&self) -> usize {
        1 << self.dim()
    }

    /// Metric square of the basis vector at position `idx` (label order).
    pub fn square(&self, idx: usize) -> i8 {
        self.squares[idx]
    }

    /// Label printed for position `idx`.
    pub fn label(&self, idx: usize) -> u8 {
        self.labels[idx]
    }

    /// Position of a label in the ordering, if present.
    pub fn position_of(&self, label: u8) -> Option<usize> {
        self.labels.iter().position(|l| *l == label)
    }

    /// Bitmask of the unit pseudoscalar (all basis vectors).
    pub fn pseudoscalar_mask(&self) -> u16 {
        ((1u32 << self.dim()) - 1) as u16
    }

    pub fn valid_mask(&self, mask: u16) -> bool {
        u32::from(mask) < (1u32 << self.dim())
    }
}

/// The bulk algebra over R^{4,1}: labels (1,2,3,4,0), squares (+,+,+,+,-).
///
/// Label 0 is the timelike direction; it sits last so that the pseudoscalar
/// is the ordered product of the vectors labelled 1,2,3,4,0.
pub fn bulk() -> &'static Arc<Signature> {
    static SIG: OnceLock<Arc<Signature>> = OnceLock::new();
    SIG.get_or_init(|| {
        Signature::new("R4,1", vec![1, 2, 3, 4, 0], vec![1, 1, 1, 1, -1]).unwrap()
    })
}

/// The spacetime algebra over R^{1,3}: labels (0,1,2,3), squares (+,-,-,-).
pub fn minkowski() -> &'static Arc<Signature> {
    static SIG: OnceLock<Arc<Signature>> = OnceLock::new();
    SIG.get_or_init(|| Signature::new("R1,3", vec![0, 1, 2, 3], vec![1, -1, -1, -1]).unwrap())
}

/// The Pauli algebra over R^{3,0}: labels (1,2,3), all squares +1.
pub fn pauli() -> &'static Arc<Signature> {
    static SIG: OnceLock<Arc<Signature>> = OnceLock::new();
    SIG.get_or_init(|| Signature::new("R3,0", vec![1, 2, 3], vec![1, 1, 1]).unwrap())
}

/// All canonical algebras, for sweeps over "every registered signature".
pub fn canonical() -> [&'static Arc<Signature>; 3] {
    [bulk(), minkowski(), pauli()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_signatures_have_expected_squares() {
        let b = bulk();
        assert_eq!(b.dim(), 5);
        assert_eq!(b.square(b.position_of(0).unwrap()), -1);
        assert_eq!(b.square(b.position_of(4).unwrap()), 1);
        let m = minkowski();
        assert_eq!(m.square(0), 1);
        assert_eq!(m.square(3), -1);
    }

    #[test]
    fn rejects_degenerate_and_oversized() {
        assert!(Signature::new("bad", vec![0, 1], vec![1, 0]).is_err());
        assert!(Signature::new("big", (0..17).collect(), vec![1; 17]).is_err());
        assert!(Signature::new("dup", vec![1, 1], vec![1, 1]).is_err());
    }
}
