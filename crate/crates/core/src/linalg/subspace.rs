use num_traits::Zero;

use super::matrix::rref_in_place;
use super::{is_zero_vector, LinalgError, Matrix, Scalar, Vector};

/// Subspace of `Q^n` stored by its reduced row-echelon basis.
///
/// The representation is unique, so derived equality is subspace equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

/// The canonical subspace spanned by `vectors`.
pub fn canonicalize(vectors: &[Vector], ambient_dim: usize) -> Result<Subspace, LinalgError> {
    if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
        return Err(LinalgError::DimensionMismatch {
            expected: ambient_dim,
            found: bad.len(),
        });
    }
    let mut rows: Vec<Vector> = vectors.iter().filter(|v| !is_zero_vector(v)).cloned().collect();
    let pivots = rref_in_place(&mut rows, ambient_dim);
    rows.truncate(pivots.len());
    Ok(Subspace {
        ambient_dim,
        basis: rows,
        pivots,
    })
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim)
            .map(|i| super::unit_vector(ambient_dim, i))
            .collect();
        Self {
            ambient_dim,
            basis,
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Self, LinalgError> {
        canonicalize(vectors, ambient_dim)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(&self.basis, self.ambient_dim).expect("basis rows have ambient width")
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinalgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// Canonical remainder of `v` modulo this subspace: the unique vector
    /// congruent to `v` that vanishes on every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vector {
        let mut out = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let c = out[p].clone();
            for (x, b) in out.iter_mut().zip(row) {
                if !b.is_zero() {
                    *x -= &c * b;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.reduce(v))
    }

    /// Coordinates of `v` in the canonical basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vector {
        let mut out = super::zero_vector(self.ambient_dim);
        for (c, b) in coords.iter().zip(&self.basis) {
            super::add_scaled(&mut out, c, b);
        }
        out
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        canonicalize(&vs, self.ambient_dim)
    }

    /// Intersection through the kernel of the stacked bases: every relation
    /// `sum a_i u_i = sum b_j w_j` contributes `sum a_i u_i`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        let stacked = self.basis_matrix().vstack(&other.basis_matrix())?;
        let relations = stacked.transpose().kernel();
        let k = self.dim();
        let vectors: Vec<Vector> = relations.iter().map(|rel| self.combine(&rel[..k])).collect();
        canonicalize(&vectors, self.ambient_dim)
    }

    /// `self ⊆ other`.
    pub fn contained_in(&self, other: &Subspace) -> Result<bool, LinalgError> {
        self.check_ambient(other)?;
        Ok(self.basis.iter().all(|b| other.contains_vector(b)))
    }

    /// Given `sub ⊆ self`, vectors of `self` that complete a basis of `sub` to
    /// a basis of `self`: the canonical basis of the remainders of `self`
    /// modulo `sub`.
    pub fn quotient_basis(&self, sub: &Subspace) -> Result<Vec<Vector>, LinalgError> {
        if !sub.contained_in(self)? {
            return Err(LinalgError::NotContained);
        }
        let remainders: Vec<Vector> = self.basis.iter().map(|b| sub.reduce(b)).collect();
        Ok(canonicalize(&remainders, self.ambient_dim)?.basis)
    }
}
