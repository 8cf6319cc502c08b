use num_traits::Zero;

use super::{canonicalize, zero_vector, LinalgError, Scalar, Subspace, Vector};

/// A bilinear map `V × V → V` on a finite-dimensional coordinate space.
pub trait Bilinear {
    fn dim(&self) -> usize;

    fn apply(&self, u: &[Scalar], w: &[Scalar]) -> Vector;
}

/// Dense structure tensor: `e_i * e_j = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTensor {
    dim: usize,
    coeffs: Vec<Scalar>,
}

impl StructureTensor {
    pub fn new(dim: usize, coeffs: Vec<Scalar>) -> Result<Self, LinalgError> {
        if coeffs.len() != dim * dim * dim {
            return Err(LinalgError::DimensionMismatch {
                expected: dim * dim * dim,
                found: coeffs.len(),
            });
        }
        Ok(Self { dim, coeffs })
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize, usize) -> Scalar) -> Self {
        let coeffs = (0..dim * dim * dim)
            .map(|n| f(n / (dim * dim), (n / dim) % dim, n % dim))
            .collect();
        Self { dim, coeffs }
    }

    pub fn coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.coeffs[(i * self.dim + j) * self.dim + k]
    }
}

impl Bilinear for StructureTensor {
    fn dim(&self) -> usize {
        self.dim
    }

    fn apply(&self, u: &[Scalar], w: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in w.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.coeff(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }
}

/// `span{ mult(u, w) : u ∈ basis(U), w ∈ basis(W) }`.
pub fn bilinear_image<B: Bilinear + ?Sized>(
    mult: &B,
    u: &Subspace,
    w: &Subspace,
) -> Result<Subspace, LinalgError> {
    for s in [u, w] {
        if s.ambient_dim() != mult.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: mult.dim(),
                found: s.ambient_dim(),
            });
        }
    }
    let products: Vec<Vector> = u
        .basis()
        .iter()
        .flat_map(|x| w.basis().iter().map(move |y| mult.apply(x, y)))
        .collect();
    canonicalize(&products, mult.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{int, unit_vector};

    /// `Q[x]/(x^m)` in the monomial basis.
    fn truncated_poly(m: usize) -> StructureTensor {
        StructureTensor::from_fn(m, |i, j, k| int((i + j == k) as i64))
    }

    /// Independent oracle: multiply polynomials as coefficient lists and
    /// truncate.
    fn poly_mul(a: &[i64], b: &[i64], m: usize) -> Vec<i64> {
        let mut out = vec![0; m];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                if i + j < m {
                    out[i + j] += x * y;
                }
            }
        }
        out
    }

    #[test]
    fn ideal_x_squared_in_cubic_truncation() {
        let t = truncated_poly(3);
        let x = Subspace::span(&[unit_vector(3, 1)], 3).unwrap();
        let img = bilinear_image(&t, &x, &x).unwrap();
        let x2: Vector = poly_mul(&[0, 1], &[0, 1], 3).into_iter().map(int).collect();
        assert_eq!(img, Subspace::span(&[x2], 3).unwrap());
        assert_eq!(img.dim(), 1);
    }

    #[test]
    fn zero_factor_gives_zero() {
        let t = truncated_poly(3);
        let img = bilinear_image(&t, &Subspace::zero(3), &Subspace::full(3)).unwrap();
        assert!(img.is_zero());
    }

    #[test]
    fn mismatched_ambient() {
        let t = truncated_poly(3);
        assert!(bilinear_image(&t, &Subspace::full(2), &Subspace::full(3)).is_err());
    }
}
