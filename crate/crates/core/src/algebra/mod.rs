//! Finite-dimensional unital associative algebras given by structure
//! constants, with radicals, quotients, idempotents and homomorphisms.

mod builders;
mod hom;
mod quotient;
mod radical;
mod split;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::{
    add_scaled, is_zero_vector, solve_in_span, unit_vector, zero_vector, Bilinear, LinalgError, Matrix, Scalar,
    Subspace, Vector,
};
use crate::quiver::{Path, Quiver};

pub use builders::{
    diagonal_algebra, direct_sum, group_algebra, matrix_algebra, matrix_subalgebra, triangular_dual_numbers,
    truncated_poly, upper_triangular, CayleyTable,
};
pub use hom::AlgebraHom;
pub use quotient::{quotient_algebra, Quotient};
pub use radical::{trace_form, RadicalFiltration};
pub use split::{
    lift_idempotents, minimal_polynomial, primitive_idempotents_of_top, radical_quotient, rational_roots,
    split_commutative_semisimple, AlgebraPredicates, IdempotentSet,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("structure constants are not associative: (e{0}·e{1})·e{2} ≠ e{0}·(e{1}·e{2})")]
    NotAssociative(usize, usize, usize),
    #[error("unit fails on basis element {0}")]
    UnitFails(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("ideal is the whole algebra")]
    IdealIsWhole,
    #[error("vectors do not span a unital subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("algebra is not split over Q: semisimple quotient does not diagonalize over the rationals")]
    NotSplit,
    #[error("algebra is not basic")]
    NotBasic,
    #[error("map is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("map does not send unit to unit")]
    NotUnital,
    #[error("surjective map does not send J(A) onto J(B)")]
    RadicalNotPreserved,
    #[error("homomorphism endpoints do not match")]
    EndpointMismatch,
    #[error("algebra has no path bookkeeping")]
    NoPathBasis,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Bookkeeping for algebras whose basis elements are paths of a quiver
/// (path algebras, truncations and bound path algebras).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBasis {
    pub quiver: Quiver,
    /// `paths[k]` is the path represented by basis element `k`.
    pub paths: Vec<Path>,
}

impl PathBasis {
    pub fn index_of(&self, path: &Path) -> Option<usize> {
        self.paths.iter().position(|p| p == path)
    }

    pub fn vertex_element(&self, vertex: usize) -> Option<usize> {
        self.index_of(&self.quiver.trivial_path(vertex))
    }

    pub fn arrow_element(&self, arrow: usize) -> Option<usize> {
        self.paths.iter().position(|p| p.arrows == [arrow])
    }
}

/// A finite-dimensional algebra over Q: `e_i · e_j = sum_k c[i][j][k] e_k`.
///
/// Products are stored sparsely per basis pair. The radical filtration is
/// computed on first use and cached.
#[derive(Clone)]
pub struct SCAlgebra {
    labels: Vec<String>,
    products: Vec<Vec<(usize, Scalar)>>,
    unit: Vector,
    path_basis: Option<Arc<PathBasis>>,
    radical: OnceLock<Arc<RadicalFiltration>>,
}

impl SCAlgebra {
    /// Validated algebra from a product function on basis indices.
    pub fn new(
        labels: Vec<String>,
        product: impl Fn(usize, usize) -> Vector,
        unit: Vector,
    ) -> Result<Self, AlgebraError> {
        let dim = labels.len();
        if unit.len() != dim {
            return Err(LinalgError::DimensionMismatch {
                expected: dim,
                found: unit.len(),
            }
            .into());
        }
        let mut products = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = product(i, j);
                if v.len() != dim {
                    return Err(LinalgError::DimensionMismatch {
                        expected: dim,
                        found: v.len(),
                    }
                    .into());
                }
                products.push(sparse(&v));
            }
        }
        Self::from_sparse_unchecked(labels, products, unit).validated()
    }

    /// Trusted constructor; callers guarantee associativity and the unit.
    pub(crate) fn from_sparse_unchecked(
        labels: Vec<String>,
        products: Vec<Vec<(usize, Scalar)>>,
        unit: Vector,
    ) -> Self {
        debug_assert_eq!(products.len(), labels.len() * labels.len());
        Self {
            labels,
            products,
            unit,
            path_basis: None,
            radical: OnceLock::new(),
        }
    }

    pub(crate) fn with_path_basis(mut self, basis: Arc<PathBasis>) -> Self {
        self.path_basis = Some(basis);
        self
    }

    /// Exhaustively checks associativity and the unit.
    pub fn validated(self) -> Result<Self, AlgebraError> {
        self.check_unit()?;
        self.check_associative()?;
        Ok(self)
    }

    pub fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = &self.products[i * n + j];
                for k in 0..n {
                    let mut left = zero_vector(n);
                    for (m, c) in ij {
                        for (l, d) in &self.products[m * n + k] {
                            left[*l] += c * d;
                        }
                    }
                    let mut right = zero_vector(n);
                    for (m, c) in &self.products[j * n + k] {
                        for (l, d) in &self.products[i * n + m] {
                            right[*l] += c * d;
                        }
                    }
                    if left != right {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn check_unit(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            let e = unit_vector(n, i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(AlgebraError::UnitFails(i));
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn unit(&self) -> &[Scalar] {
        &self.unit
    }

    pub fn path_basis(&self) -> Option<&PathBasis> {
        self.path_basis.as_deref()
    }

    /// Nonzero structure constants of `e_i · e_j`.
    pub fn product_terms(&self, i: usize, j: usize) -> &[(usize, Scalar)] {
        &self.products[i * self.dim() + j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        unit_vector(self.dim(), i)
    }

    pub fn mul_basis(&self, i: usize, j: usize) -> Vector {
        let mut out = zero_vector(self.dim());
        for (k, c) in self.product_terms(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, c) in &self.products[i * n + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Product of a sequence of elements; the unit for an empty sequence.
    pub fn mul_all<'a>(&self, xs: impl IntoIterator<Item = &'a Vector>) -> Vector {
        xs.into_iter().fold(self.unit.clone(), |acc, x| self.mul(&acc, x))
    }

    pub fn power(&self, x: &[Scalar], k: usize) -> Vector {
        (0..k).fold(self.unit.clone(), |acc, _| self.mul(&acc, x))
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(&cols, n).expect("columns have algebra dimension")
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mult_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.mul(&unit_vector(n, j), x)).collect();
        Matrix::from_columns(&cols, n).expect("columns have algebra dimension")
    }

    /// Two-sided inverse, if `x` is a unit.
    pub fn inverse(&self, x: &[Scalar]) -> Option<Vector> {
        let inv = self.left_mult_matrix(x).inverse()?;
        let y = inv.mul_vec(&self.unit);
        (self.mul(&y, x) == self.unit).then_some(y)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.mul_basis(i, j) == self.mul_basis(j, i)))
    }

    pub fn full_space(&self) -> Subspace {
        Subspace::full(self.dim())
    }

    /// `S` is closed under multiplication by the algebra on both sides.
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> Result<bool, AlgebraError> {
        let full = self.full_space();
        let left = crate::linalg::bilinear_image(self, &full, s)?;
        let right = crate::linalg::bilinear_image(self, s, &full)?;
        Ok(left.contained_in(s)? && right.contained_in(s)?)
    }

    /// Subspace `x·A·y`.
    pub fn corner(&self, x: &[Scalar], y: &[Scalar], within: &Subspace) -> Result<Subspace, AlgebraError> {
        let vs: Vec<Vector> = within
            .basis()
            .iter()
            .map(|b| self.mul(&self.mul(x, b), y))
            .collect();
        Ok(Subspace::span(&vs, self.dim())?)
    }

    /// The center `{z : z·e_i = e_i·z for all i}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        let mut rows = Vec::new();
        for i in 0..n {
            let e = unit_vector(n, i);
            let commutator = &self.right_mult_matrix(&e) - &self.left_mult_matrix(&e);
            rows.extend(commutator.row_vectors());
        }
        let stacked = Matrix::from_rows(&rows, n).expect("rows have algebra dimension");
        Subspace::span(&stacked.kernel(), n).expect("kernel vectors have algebra dimension")
    }

    /// The subalgebra with the given (independent) basis, in that order.
    pub fn subalgebra(&self, basis: &[Vector], labels: Vec<String>) -> Result<SCAlgebra, AlgebraError> {
        let span = Subspace::span(basis, self.dim())?;
        if span.dim() != basis.len() || labels.len() != basis.len() {
            return Err(AlgebraError::NotSubalgebra("basis vectors are dependent or mislabelled".into()));
        }
        let coords = |v: &[Scalar]| solve_in_span(basis, v);
        let unit = coords(&self.unit).ok_or_else(|| AlgebraError::NotSubalgebra("unit not contained".into()))?;
        let k = basis.len();
        let mut products = Vec::with_capacity(k * k);
        for x in basis {
            for y in basis {
                let c = coords(&self.mul(x, y))
                    .ok_or_else(|| AlgebraError::NotSubalgebra("not closed under multiplication".into()))?;
                products.push(sparse(&c));
            }
        }
        Ok(SCAlgebra::from_sparse_unchecked(labels, products, unit))
    }

    /// The same algebra in the basis given by the columns of `change`
    /// (invertible, columns in current coordinates). Labels become `f0, f1, …`.
    pub fn transport(&self, change: &Matrix) -> Result<SCAlgebra, AlgebraError> {
        let inv = change
            .inverse()
            .ok_or_else(|| AlgebraError::InvalidParameter("change of basis is singular".into()))?;
        let n = self.dim();
        let cols = change.columns();
        let mut products = Vec::with_capacity(n * n);
        for x in &cols {
            for y in &cols {
                products.push(sparse(&inv.mul_vec(&self.mul(x, y))));
            }
        }
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        Ok(SCAlgebra::from_sparse_unchecked(labels, products, inv.mul_vec(&self.unit)))
    }

    /// Returns a copy with new basis labels.
    pub fn relabelled(&self, labels: Vec<String>) -> Result<SCAlgebra, AlgebraError> {
        if labels.len() != self.dim() {
            return Err(AlgebraError::InvalidParameter("label count differs from dimension".into()));
        }
        let mut out = self.clone();
        out.labels = labels;
        Ok(out)
    }

    /// Linear combination `sum c_i e_i` rendered with basis labels.
    pub fn format_element(&self, x: &[Scalar]) -> String {
        format_lincomb(x, &self.labels)
    }
}

impl PartialEq for SCAlgebra {
    /// Same dimension, structure constants and unit; labels and caches are
    /// ignored.
    fn eq(&self, other: &Self) -> bool {
        self.products == other.products && self.unit == other.unit
    }
}

impl Eq for SCAlgebra {}

impl fmt::Debug for SCAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SCAlgebra")
            .field("dim", &self.dim())
            .field("labels", &self.labels)
            .finish()
    }
}

impl Bilinear for SCAlgebra {
    fn dim(&self) -> usize {
        self.labels.len()
    }

    fn apply(&self, u: &[Scalar], w: &[Scalar]) -> Vector {
        self.mul(u, w)
    }
}

pub(crate) fn sparse(v: &[Scalar]) -> Vec<(usize, Scalar)> {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k, c.clone()))
        .collect()
}

/// `2*a - 1/2*b`, or `0`.
pub fn format_lincomb(x: &[Scalar], labels: &[String]) -> String {
    if is_zero_vector(x) {
        return "0".into();
    }
    let mut out = String::new();
    for (c, l) in x.iter().zip(labels).filter(|(c, _)| !c.is_zero()) {
        let negative = c < &Scalar::zero();
        let abs = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(l);
        } else {
            out.push_str(&format!("{abs}*{l}"));
        }
    }
    out
}

/// `acc += c * x` re-exported for callers that build elements by hand.
pub fn accumulate(acc: &mut [Scalar], c: &Scalar, x: &[Scalar]) {
    add_scaled(acc, c, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{frac, int};

    fn dual_numbers() -> SCAlgebra {
        SCAlgebra::new(
            vec!["1".into(), "x".into()],
            |i, j| {
                let mut v = zero_vector(2);
                if i + j < 2 {
                    v[i + j] = int(1);
                }
                v
            },
            vec![int(1), int(0)],
        )
        .unwrap()
    }

    #[test]
    fn rationals_as_one_dimensional_algebra() {
        let q = SCAlgebra::new(vec!["1".into()], |_, _| vec![int(1)], vec![int(1)]).unwrap();
        assert_eq!(q.dim(), 1);
    }

    #[test]
    fn dual_numbers_validate() {
        assert_eq!(dual_numbers().dim(), 2);
    }

    #[test]
    fn broken_table_is_rejected() {
        // e0 unit; e1·e1 = e2, e2·e1 = 0 but e1·e2 = e1 breaks (e1e1)e1 = e1(e1e1)
        let r = SCAlgebra::new(
            vec!["1".into(), "a".into(), "b".into()],
            |i, j| {
                let mut v = zero_vector(3);
                match (i, j) {
                    (0, k) | (k, 0) => v[k] = int(1),
                    (1, 1) => v[2] = int(1),
                    (1, 2) => v[1] = int(1),
                    _ => {}
                }
                v
            },
            vec![int(1), int(0), int(0)],
        );
        assert!(matches!(r, Err(AlgebraError::NotAssociative(..))));
    }

    #[test]
    fn wrong_unit_is_rejected() {
        let r = SCAlgebra::new(
            vec!["1".into(), "x".into()],
            |i, j| {
                let mut v = zero_vector(2);
                if i + j < 2 {
                    v[i + j] = int(1);
                }
                v
            },
            vec![int(1), int(1)],
        );
        assert!(matches!(r, Err(AlgebraError::UnitFails(_))));
    }

    #[test]
    fn inverse_of_unipotent() {
        let a = dual_numbers();
        let u = vec![int(1), frac(3, 2)];
        let inv = a.inverse(&u).unwrap();
        assert_eq!(inv, vec![int(1), frac(-3, 2)]);
        assert!(a.inverse(&[int(0), int(1)]).is_none());
    }

    #[test]
    fn lincomb_formatting() {
        let labels = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        assert_eq!(format_lincomb(&[int(1), frac(-1, 2), int(0)], &labels), "a - 1/2*b");
        assert_eq!(format_lincomb(&[int(0), int(0), int(-1)], &labels), "-c");
        assert_eq!(format_lincomb(&zero_vector(3), &labels), "0");
    }
}
