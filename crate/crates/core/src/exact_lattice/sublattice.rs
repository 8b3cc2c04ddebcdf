use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::abelian::FgAbGroup;
use super::matrix::IntMatrix;
use super::normal_form::{hermite, integer_kernel, smith_diagonal, Hermite};
use crate::error::{Error, Result};

/// A sublattice of `Z^n` spanned by generator columns, optionally shifted by
/// an integer offset (an affine coset).
#[derive(Clone, Debug)]
pub struct SubLattice {
    ambient_dim: usize,
    generators: IntMatrix,
    offset: Option<Vec<BigInt>>,
    herm: Hermite,
}

/// Index of one lattice in another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LatticeIndex {
    Finite(BigInt),
    Infinite,
}

impl LatticeIndex {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            LatticeIndex::Finite(n) => Some(n),
            LatticeIndex::Infinite => None,
        }
    }
}

impl SubLattice {
    pub fn new(generators: IntMatrix) -> Self {
        let herm = hermite(&generators);
        SubLattice {
            ambient_dim: generators.rows(),
            generators,
            offset: None,
            herm,
        }
    }

    pub fn with_offset(generators: IntMatrix, offset: Vec<BigInt>) -> Self {
        assert_eq!(offset.len(), generators.rows(), "offset length must equal ambient dimension");
        let mut l = Self::new(generators);
        l.offset = if offset.iter().all(Zero::is_zero) { None } else { Some(offset) };
        l.canonicalize_offset();
        l
    }

    pub fn full(n: usize) -> Self {
        Self::new(IntMatrix::identity(n))
    }

    pub fn zero(n: usize) -> Self {
        Self::new(IntMatrix::zeros(n, 0))
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &IntMatrix {
        &self.generators
    }

    pub fn offset(&self) -> Option<&[BigInt]> {
        self.offset.as_deref()
    }

    pub fn is_centered(&self) -> bool {
        self.offset.is_none()
    }

    pub fn rank(&self) -> usize {
        self.herm.rank()
    }

    /// Canonical basis: the nonzero columns of the column HNF.
    pub fn basis(&self) -> IntMatrix {
        self.herm.basis()
    }

    /// The same lattice with the offset dropped.
    pub fn direction(&self) -> SubLattice {
        SubLattice {
            ambient_dim: self.ambient_dim,
            generators: self.generators.clone(),
            offset: None,
            herm: self.herm.clone(),
        }
    }

    fn canonicalize_offset(&mut self) {
        if let Some(off) = self.offset.take() {
            let r = self.reduce(&off);
            self.offset = if r.iter().all(Zero::is_zero) { None } else { Some(r) };
        }
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None` if
    /// `v` is not in the (centered) lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.ambient_dim);
        let h = &self.herm.h;
        let mut w = v.to_vec();
        let mut coeffs = Vec::with_capacity(self.rank());
        for (j, &r) in self.herm.pivots.iter().enumerate() {
            let (q, rem) = w[r].div_rem(&h[(r, j)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, wi) in w.iter_mut().enumerate().skip(r) {
                    *wi -= &q * &h[(i, j)];
                }
            }
            coeffs.push(q);
        }
        w.iter().all(Zero::is_zero).then_some(coeffs)
    }

    /// Membership of `v`, taking the offset into account.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        match &self.offset {
            None => self.coordinates(v).is_some(),
            Some(off) => {
                let d: Vec<BigInt> = v.iter().zip(off).map(|(a, b)| a - b).collect();
                self.coordinates(&d).is_some()
            }
        }
    }

    /// Canonical representative of `v + L` (the direction lattice): every pivot
    /// coordinate is reduced into `[0, pivot)`.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.ambient_dim);
        let h = &self.herm.h;
        let mut w = v.to_vec();
        for (j, &r) in self.herm.pivots.iter().enumerate() {
            let q = w[r].div_floor(&h[(r, j)]);
            if !q.is_zero() {
                for (i, wi) in w.iter_mut().enumerate().skip(r) {
                    *wi -= &q * &h[(i, j)];
                }
            }
        }
        w
    }

    pub fn contains_lattice(&self, other: &SubLattice) -> bool {
        other.generators.columns().iter().all(|c| self.coordinates(c).is_some())
    }

    /// Pure closure `span_Q(L) ∩ Z^n` of a centered lattice.
    pub fn saturate(&self) -> SubLattice {
        let normals = integer_kernel(&self.generators.transpose());
        SubLattice::new(integer_kernel(&normals.transpose()))
    }

    /// Expresses the generators of `small` in the canonical basis of `self`.
    fn relative_coordinates(&self, small: &SubLattice) -> Result<IntMatrix> {
        let mut cols = Vec::new();
        for c in small.generators.columns() {
            match self.coordinates(&c) {
                Some(x) => cols.push(x),
                None => return Err(Error::NotASublattice),
            }
        }
        Ok(IntMatrix::from_columns(self.rank(), &cols))
    }

    /// The group `self / small` for `small ⊆ self` (offsets ignored).
    pub fn relative_quotient(&self, small: &SubLattice) -> Result<FgAbGroup> {
        let coords = self.relative_coordinates(small)?;
        Ok(quotient_of(self.rank(), &coords))
    }
}

impl PartialEq for SubLattice {
    fn eq(&self, other: &Self) -> bool {
        if self.ambient_dim != other.ambient_dim || self.basis() != other.basis() {
            return false;
        }
        match (&self.offset, &other.offset) {
            (None, None) => true,
            (Some(a), None) | (None, Some(a)) => self.coordinates(a).is_some(),
            (Some(a), Some(b)) => {
                let d: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                self.coordinates(&d).is_some()
            }
        }
    }
}

impl Eq for SubLattice {}

/// `Z^n / (columns of gens)` as an abstract group.
pub fn quotient_of(n: usize, gens: &IntMatrix) -> FgAbGroup {
    assert_eq!(gens.rows(), n);
    let diag = smith_diagonal(gens);
    let nonzero: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_zero()).collect();
    FgAbGroup::new(n - nonzero.len(), nonzero)
}

/// `Z^n / L` for a centered sublattice.
pub fn quotient(ambient_dim: usize, l: &SubLattice) -> Result<FgAbGroup> {
    if l.ambient_dim != ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: ambient_dim,
            found: l.ambient_dim,
        });
    }
    if !l.is_centered() {
        return Err(Error::Precondition("quotient of an affine coset".into()));
    }
    Ok(quotient_of(ambient_dim, &l.generators))
}

/// `[big : small]`, finite or infinite. Errors if `small` is not contained in `big`.
pub fn lattice_index(big: &SubLattice, small: &SubLattice) -> Result<LatticeIndex> {
    if big.ambient_dim != small.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: big.ambient_dim,
            found: small.ambient_dim,
        });
    }
    let q = big.relative_quotient(small)?;
    if q.free_rank() > 0 {
        Ok(LatticeIndex::Infinite)
    } else {
        Ok(LatticeIndex::Finite(q.order().unwrap_or_else(BigInt::one)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn membership() {
        let l = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1]]));
        assert!(!l.contains(&v(&[1, 0])));
        assert!(l.contains(&v(&[2, 0])));
        assert!(l.contains(&v(&[0, 0])));
        let shifted = SubLattice::with_offset(IntMatrix::from_rows(&[[1, 1], [1, -1]]), v(&[1, 0]));
        assert!(shifted.contains(&v(&[1, 0])));
        assert!(shifted.contains(&v(&[3, 2])));
        assert!(!shifted.contains(&v(&[0, 0])));
    }

    #[test]
    fn equality_up_to_generators() {
        let a = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1]]));
        let b = SubLattice::new(IntMatrix::from_rows(&[[2, 1, 0], [0, 1, 2]]));
        assert_eq!(a, b);
        let c = SubLattice::with_offset(IntMatrix::from_rows(&[[1, 1], [1, -1]]), v(&[1, 0]));
        let d = SubLattice::with_offset(IntMatrix::from_rows(&[[1, 1], [1, -1]]), v(&[0, 1]));
        assert_eq!(c, d);
        assert_ne!(a, c);
    }

    #[test]
    fn saturation() {
        let l = SubLattice::new(IntMatrix::from_rows(&[[2], [0]]));
        assert_eq!(l.saturate(), SubLattice::new(IntMatrix::from_rows(&[[1], [0]])));
        // A^T Z^2 for A = [[1,1,1],[1,-1,0]]
        let at = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1], [1, 0]]));
        let sat = at.saturate();
        assert_eq!(sat, at);
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                for c in -2i64..=2 {
                    assert_eq!(sat.contains(&v(&[a, b, c])), a + b == 2 * c);
                }
            }
        }
        assert_eq!(sat.saturate(), sat);
    }

    #[test]
    fn quotients_and_indices() {
        let l = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1]]));
        let q = quotient(2, &l).unwrap();
        assert_eq!(q, FgAbGroup::new(0, vec![BigInt::from(2)]));
        let at = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1], [1, 0]]));
        assert_eq!(quotient(3, &at).unwrap(), FgAbGroup::free(1));
        assert_eq!(quotient(3, &SubLattice::zero(3)).unwrap(), FgAbGroup::free(3));

        assert_eq!(
            lattice_index(&SubLattice::full(2), &l).unwrap(),
            LatticeIndex::Finite(BigInt::from(2))
        );
        assert_eq!(lattice_index(&l, &l).unwrap(), LatticeIndex::Finite(BigInt::one()));
        let axis = SubLattice::new(IntMatrix::from_rows(&[[1], [0]]));
        assert_eq!(lattice_index(&SubLattice::full(2), &axis).unwrap(), LatticeIndex::Infinite);
        assert!(matches!(lattice_index(&l, &SubLattice::full(2)), Err(Error::NotASublattice)));
    }

    #[test]
    fn reduction_is_canonical() {
        let l = SubLattice::new(IntMatrix::from_rows(&[[1, 1], [1, -1]]));
        assert_eq!(l.reduce(&v(&[1, 0])), l.reduce(&v(&[0, 1])));
        assert_eq!(l.reduce(&v(&[3, 1])), l.reduce(&v(&[0, 0])));
        assert_ne!(l.reduce(&v(&[1, 0])), l.reduce(&v(&[0, 0])));
    }
}
