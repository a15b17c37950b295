use super::matrix::Gf2Matrix;
use super::vector::Gf2Vector;
use crate::error::{Error, Result};

/// Coordinates on a quotient `space / subspace`.
///
/// The complement basis is the rref of the space rows after clearing the
/// subspace pivots, so it depends only on the two row spaces.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    ambient: usize,
    sub: Gf2Matrix,
    sub_pivots: Vec<usize>,
    complement: Gf2Matrix,
    complement_pivots: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(space_basis: &Gf2Matrix, subspace_basis: &Gf2Matrix) -> Result<Self> {
        if space_basis.cols() != subspace_basis.cols() {
            return Err(Error::DimensionMismatch(format!(
                "space has {} columns, subspace has {}",
                space_basis.cols(),
                subspace_basis.cols()
            )));
        }
        let ambient = space_basis.cols();
        let (sub, sub_pivots) = subspace_basis.rref();
        let mut q = Self {
            ambient,
            sub,
            sub_pivots,
            complement: Gf2Matrix::empty(ambient),
            complement_pivots: Vec::new(),
        };
        let reduced = space_basis
            .row_vectors()
            .iter()
            .map(|v| q.reduce(v))
            .collect();
        let (complement, complement_pivots) = Gf2Matrix::from_rows(ambient, reduced).rref();
        q.complement = complement;
        q.complement_pivots = complement_pivots;
        for v in subspace_basis.row_vectors() {
            if q.try_coordinates(v).is_none() {
                return Err(Error::DimensionMismatch(
                    "subspace is not contained in the ambient space".into(),
                ));
            }
        }
        Ok(q)
    }

    /// Dimension of the quotient.
    pub fn dim(&self) -> usize {
        self.complement.rows()
    }

    /// Canonical complement basis (rows are representatives of a quotient basis).
    pub fn complement_basis(&self) -> &Gf2Matrix {
        &self.complement
    }

    /// Reduced row echelon basis of the subspace.
    pub fn subspace_rref(&self) -> &Gf2Matrix {
        &self.sub
    }

    /// Clears the subspace pivot positions of `v` by adding subspace rows.
    pub fn reduce(&self, v: &Gf2Vector) -> Gf2Vector {
        let mut r = v.clone();
        for (i, &p) in self.sub_pivots.iter().enumerate() {
            if r.get(p) {
                r.xor_assign(self.sub.row(i));
            }
        }
        r
    }

    fn try_coordinates(&self, v: &Gf2Vector) -> Option<Gf2Vector> {
        let r = self.reduce(v);
        let coords = r.select(&self.complement_pivots);
        let mut recon = Gf2Vector::zeros(self.ambient);
        for j in coords.iter_ones() {
            recon.xor_assign(self.complement.row(j));
        }
        (recon == r).then_some(coords)
    }

    /// Coordinates of the class of `v`.
    pub fn coordinates(&self, v: &Gf2Vector) -> Result<Gf2Vector> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {}",
                v.len(),
                self.ambient
            )));
        }
        self.try_coordinates(v).ok_or(Error::VectorOutsideSpace)
    }
}

/// Coordinates of the class of `v` in `space / subspace`.
pub fn quotient_coordinates(
    space_basis: &Gf2Matrix,
    subspace_basis: &Gf2Matrix,
    v: &Gf2Vector,
) -> Result<Gf2Vector> {
    QuotientSpace::new(space_basis, subspace_basis)?.coordinates(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> Gf2Vector {
        Gf2Vector::parse(s).unwrap()
    }

    #[test]
    fn whole_space_quotient_is_zero_dimensional() {
        let id = Gf2Matrix::identity(3);
        let c = quotient_coordinates(&id, &id, &v("101")).unwrap();
        assert_eq!(c.len(), 0);
    }

    #[test]
    fn trivial_subspace_gives_vector_itself() {
        let id = Gf2Matrix::identity(3);
        let c = quotient_coordinates(&id, &Gf2Matrix::empty(3), &v("110")).unwrap();
        assert_eq!(c, v("110"));
    }

    #[test]
    fn vectors_differing_by_subspace_agree() {
        let space = Gf2Matrix::identity(2);
        let sub = Gf2Matrix::parse_rows(&["11"]).unwrap();
        let a = quotient_coordinates(&space, &sub, &v("10")).unwrap();
        let b = quotient_coordinates(&space, &sub, &v("01")).unwrap();
        assert_eq!(a, b);
        assert!(!a.is_zero());
    }

    #[test]
    fn outside_vector_rejected() {
        let space = Gf2Matrix::parse_rows(&["110"]).unwrap();
        let err = quotient_coordinates(&space, &Gf2Matrix::empty(3), &v("001")).unwrap_err();
        assert_eq!(err.to_string(), "vector outside ambient space");
    }
}
