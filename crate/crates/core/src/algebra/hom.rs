use std::sync::Arc;

use super::{AlgebraError, SCAlgebra};
use crate::linalg::{unit_vector, LinalgError, Matrix, Subspace, Vector};

/// A unital algebra homomorphism `source → target`, stored as a
/// `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: Arc<SCAlgebra>,
    target: Arc<SCAlgebra>,
    matrix: Matrix,
    surjective: bool,
}

impl PartialEq for AlgebraHom {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && *self.source == *other.source && *self.target == *other.target
    }
}

impl AlgebraHom {
    /// Validates multiplicativity on all basis pairs and unitality. When the
    /// map is onto, also checks that `J(source)` maps onto `J(target)`.
    pub fn new(source: Arc<SCAlgebra>, target: Arc<SCAlgebra>, matrix: Matrix) -> Result<Self, AlgebraError> {
        let hom = Self::new_unchecked(source, target, matrix)?;
        hom.check()?;
        Ok(hom)
    }

    /// Homomorphism given by the images of the source basis.
    pub fn from_images(
        source: Arc<SCAlgebra>,
        target: Arc<SCAlgebra>,
        images: &[Vector],
    ) -> Result<Self, AlgebraError> {
        if images.len() != source.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: source.dim(),
                found: images.len(),
            }
            .into());
        }
        let matrix = Matrix::from_columns(images, target.dim())?;
        Self::new(source, target, matrix)
    }

    /// Shape check only; multiplicativity is the caller's responsibility.
    pub(crate) fn new_unchecked(
        source: Arc<SCAlgebra>,
        target: Arc<SCAlgebra>,
        matrix: Matrix,
    ) -> Result<Self, AlgebraError> {
        if matrix.shape() != (target.dim(), source.dim()) {
            return Err(LinalgError::ShapeMismatch {
                expected_rows: target.dim(),
                expected_cols: source.dim(),
                rows: matrix.rows(),
                cols: matrix.cols(),
            }
            .into());
        }
        let surjective = matrix.rank() == target.dim();
        Ok(Self {
            source,
            target,
            matrix,
            surjective,
        })
    }

    pub fn identity(a: Arc<SCAlgebra>) -> Self {
        let n = a.dim();
        Self {
            source: a.clone(),
            target: a,
            matrix: Matrix::identity(n),
            surjective: true,
        }
    }

    /// Exhaustive invariant check.
    pub fn check(&self) -> Result<(), AlgebraError> {
        let images = self.matrix.columns();
        if self.apply(self.source.unit()) != self.target.unit() {
            return Err(AlgebraError::NotUnital);
        }
        for i in 0..self.source.dim() {
            for j in 0..self.source.dim() {
                let lhs = self.apply(&self.source.mul_basis(i, j));
                if lhs != self.target.mul(&images[i], &images[j]) {
                    return Err(AlgebraError::NotMultiplicative(i, j));
                }
            }
        }
        if self.surjective {
            let ja = self.source.radical();
            let jb = self.target.radical();
            if self.map_subspace(ja.radical()) != *jb.radical() {
                return Err(AlgebraError::RadicalNotPreserved);
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<SCAlgebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SCAlgebra> {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.surjective && self.is_injective()
    }

    pub fn apply(&self, x: &[crate::linalg::Scalar]) -> Vector {
        self.matrix.mul_vec(x)
    }

    /// Image of basis element `i`.
    pub fn image_of_basis(&self, i: usize) -> Vector {
        self.apply(&unit_vector(self.source.dim(), i))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &AlgebraHom) -> Result<AlgebraHom, AlgebraError> {
        if *self.target != *next.source {
            return Err(AlgebraError::EndpointMismatch);
        }
        let matrix = &next.matrix * &self.matrix;
        let surjective = self.surjective && next.surjective || matrix.rank() == next.target.dim();
        Ok(AlgebraHom {
            source: self.source.clone(),
            target: next.target.clone(),
            matrix,
            surjective,
        })
    }

    pub fn kernel(&self) -> Subspace {
        Subspace::span(&self.matrix.kernel(), self.source.dim()).expect("kernel vectors live in the source")
    }

    pub fn image(&self) -> Subspace {
        Subspace::span(&self.matrix.columns(), self.target.dim()).expect("columns live in the target")
    }

    pub fn map_subspace(&self, s: &Subspace) -> Subspace {
        let vs: Vec<Vector> = s.basis().iter().map(|v| self.apply(v)).collect();
        Subspace::span(&vs, self.target.dim()).expect("images live in the target")
    }

    pub fn inverse(&self) -> Option<AlgebraHom> {
        let matrix = self.matrix.inverse()?;
        Some(AlgebraHom {
            source: self.target.clone(),
            target: self.source.clone(),
            matrix,
            surjective: true,
        })
    }

    /// `self - other` as a linear map; endpoints must agree.
    pub fn difference(&self, other: &AlgebraHom) -> Result<Matrix, AlgebraError> {
        if *self.source != *other.source || *self.target != *other.target {
            return Err(AlgebraError::EndpointMismatch);
        }
        Ok(&self.matrix - &other.matrix)
    }
}
