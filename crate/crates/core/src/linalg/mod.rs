//! Exact linear algebra over the rationals.
//!
//! Every subspace is stored by its reduced row-echelon basis, so two
//! subspaces are equal exactly when their representations are equal. That
//! canonical form is also the tie-break wherever a basis has to be chosen.

mod bilinear;
mod duality;
mod matrix;
mod subspace;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub use bilinear::{bilinear_image, Bilinear, StructureTensor};
pub use duality::{
    apply_curried, curry, curry_roundtrip, double_dual_naturality, dual_map, evaluation_map, uncurry, CurriedMap,
};
pub use matrix::Matrix;
pub use subspace::{canonicalize, Subspace};

/// Field element. Always kept in lowest terms with a positive denominator.
pub type Scalar = BigRational;

/// Coordinate vector with respect to some fixed basis.
pub type Vector = Vec<Scalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    ShapeMismatch {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}

/// Scalar from a machine integer.
pub fn int(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Scalar `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Scalar {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `acc += c * v`
pub fn add_scaled(acc: &mut [Scalar], c: &Scalar, v: &[Scalar]) {
    debug_assert_eq!(acc.len(), v.len());
    if c.is_zero() {
        return;
    }
    for (a, x) in acc.iter_mut().zip(v) {
        if !x.is_zero() {
            *a += c * x;
        }
    }
}

pub fn add_vectors(u: &[Scalar], w: &[Scalar]) -> Vector {
    u.iter().zip(w).map(|(a, b)| a + b).collect()
}

pub fn sub_vectors(u: &[Scalar], w: &[Scalar]) -> Vector {
    u.iter().zip(w).map(|(a, b)| a - b).collect()
}

pub fn scale_vector(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Solves `target = sum c_i * vectors[i]` for linearly independent `vectors`.
/// Returns `None` when `target` is outside their span.
pub fn solve_in_span(vectors: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let n = target.len();
    if vectors.is_empty() {
        return is_zero_vector(target).then(Vec::new);
    }
    // Columns are the spanning vectors, last column is the target.
    let mut rows: Vec<Vector> = (0..n)
        .map(|r| {
            let mut row: Vector = vectors.iter().map(|v| v[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let k = vectors.len();
    let pivots = matrix::rref_in_place(&mut rows, k + 1);
    if pivots.contains(&k) {
        return None;
    }
    let mut coeffs = zero_vector(k);
    for (r, &p) in pivots.iter().enumerate() {
        coeffs[p] = rows[r][k].clone();
    }
    Some(coeffs)
}
