use std::sync::Arc;

use super::{sparse, AlgebraError, AlgebraHom, PathBasis, SCAlgebra};
use crate::linalg::{unit_vector, zero_vector, LinalgError, Matrix, Scalar, Subspace, Vector};

/// `A/I` together with the projection and a fixed set of coset
/// representatives: the basis elements of `A` at the non-pivot columns of
/// the canonical basis of `I`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: Arc<SCAlgebra>,
    pub projection: AlgebraHom,
    pub ideal: Subspace,
    /// Indices into the basis of `A`; basis element `k` of the quotient is
    /// the class of `e_{kept[k]}`.
    pub kept: Vec<usize>,
}

impl Quotient {
    pub fn project(&self, x: &[Scalar]) -> Vector {
        let r = self.ideal.reduce(x);
        self.kept.iter().map(|&k| r[k].clone()).collect()
    }

    /// The representative `sum y_k e_{kept[k]}` of a class.
    pub fn lift(&self, y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.ideal.ambient_dim());
        for (c, &k) in y.iter().zip(&self.kept) {
            out[k] = c.clone();
        }
        out
    }

    pub fn representatives(&self) -> Vec<Vector> {
        let n = self.ideal.ambient_dim();
        self.kept.iter().map(|&k| unit_vector(n, k)).collect()
    }
}

/// `A/I` for a proper two-sided ideal `I`.
pub fn quotient_algebra(a: &Arc<SCAlgebra>, ideal: &Subspace) -> Result<Quotient, AlgebraError> {
    let n = a.dim();
    if ideal.ambient_dim() != n {
        return Err(LinalgError::DimensionMismatch {
            expected: n,
            found: ideal.ambient_dim(),
        }
        .into());
    }
    if !a.is_two_sided_ideal(ideal)? {
        return Err(AlgebraError::NotAnIdeal);
    }
    if ideal.is_full() {
        return Err(AlgebraError::IdealIsWhole);
    }
    let kept: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
    let project = |x: &[Scalar]| -> Vector {
        let r = ideal.reduce(x);
        kept.iter().map(|&k| r[k].clone()).collect()
    };
    let mut products = Vec::with_capacity(kept.len() * kept.len());
    for &i in &kept {
        for &j in &kept {
            products.push(sparse(&project(&a.mul_basis(i, j))));
        }
    }
    let labels = kept.iter().map(|&k| a.label(k).to_string()).collect();
    let mut q = SCAlgebra::from_sparse_unchecked(labels, products, project(a.unit()));
    if let Some(pb) = a.path_basis() {
        let structural = pb.paths.iter().enumerate().filter(|(_, p)| p.len() <= 1).all(|(k, _)| kept.contains(&k));
        if structural {
            q = q.with_path_basis(Arc::new(PathBasis {
                quiver: pb.quiver.clone(),
                paths: kept.iter().map(|&k| pb.paths[k].clone()).collect(),
            }));
        }
    }
    let q = Arc::new(q);
    let columns: Vec<Vector> = (0..n).map(|k| project(&unit_vector(n, k))).collect();
    let matrix = Matrix::from_columns(&columns, kept.len())?;
    let projection = AlgebraHom::new_unchecked(a.clone(), q.clone(), matrix)?;
    Ok(Quotient {
        algebra: q,
        projection,
        ideal: ideal.clone(),
        kept,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{truncated_poly, upper_triangular};
    use crate::linalg::int;
    use crate::quiver::Quiver;

    #[test]
    fn zero_ideal_gives_identity() {
        let a = Arc::new(upper_triangular(2).unwrap());
        let q = quotient_algebra(&a, &Subspace::zero(3)).unwrap();
        assert_eq!(*q.algebra, *a);
        assert_eq!(q.projection.matrix(), &Matrix::identity(3));
    }

    #[test]
    fn truncated_poly_by_square() {
        let a = Arc::new(truncated_poly(3).unwrap());
        let ideal = Subspace::span(&[unit_vector(3, 2)], 3).unwrap();
        let q = quotient_algebra(&a, &ideal).unwrap();
        // polynomial oracle: (c0 + c1 x)(d0 + d1 x) mod x^2
        let b = truncated_poly(2).unwrap();
        assert_eq!(*q.algebra, b);
        q.projection.check().unwrap();
        assert_eq!(q.projection.kernel(), ideal);
    }

    #[test]
    fn path_algebra_modulo_arrow() {
        let quiver = Quiver::from_strs(&["1", "2"], &[("h", "1", "2")]).unwrap();
        let a = Arc::new(quiver.path_algebra().unwrap());
        let ideal = Subspace::span(&[unit_vector(3, 2)], 3).unwrap();
        let q = quotient_algebra(&a, &ideal).unwrap();
        assert_eq!(q.algebra.dim(), 2);
        assert!(q.algebra.is_semisimple());
        assert!(q.algebra.is_commutative());
        assert!(q.projection.is_surjective());
        q.projection.check().unwrap();
    }

    #[test]
    fn rejects_non_ideals() {
        let a = Arc::new(truncated_poly(3).unwrap());
        let not_ideal = Subspace::span(&[vec![int(1), int(1), int(0)]], 3).unwrap();
        assert_eq!(quotient_algebra(&a, &not_ideal).unwrap_err(), AlgebraError::NotAnIdeal);
        assert_eq!(quotient_algebra(&a, &Subspace::full(3)).unwrap_err(), AlgebraError::IdealIsWhole);
    }

    #[test]
    fn lift_then_project() {
        let a = Arc::new(truncated_poly(4).unwrap());
        let ideal = a.radical().power(2).clone();
        let q = quotient_algebra(&a, &ideal).unwrap();
        let y = vec![int(3), int(-2)];
        assert_eq!(q.project(&q.lift(&y)), y);
    }
}
