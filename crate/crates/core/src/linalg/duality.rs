//! Two naturality facts checked at fixed finite dimension: the embedding of
//! a space into its double dual, and currying `Hom(U⊗V, W) ≅ Hom(U, Hom(V, W))`.

use num_traits::Zero;

use super::{unit_vector, LinalgError, Matrix, Scalar};

/// Matrix of the dual map `L*: V* → U*` in the dual bases, built by
/// evaluating `g ∘ L` on the basis of `U` for each dual basis functional `g`.
pub fn dual_map(l: &Matrix) -> Matrix {
    let (m, n) = l.shape();
    let mut out = Matrix::zeros(n, m);
    for i in 0..m {
        // g = i-th coordinate functional on V
        for j in 0..n {
            let image = l.mul_vec(&unit_vector(n, j));
            out.set(j, i, image[i].clone());
        }
    }
    out
}

/// Matrix of `φ: U → U**`, `φ(u)(g) = g(u)`, in the basis of `U` and the
/// basis of `U**` dual to the dual basis.
pub fn evaluation_map(n: usize) -> Matrix {
    Matrix::from_fn(n, n, |i, j| {
        let u = unit_vector(n, j);
        let g = unit_vector(n, i);
        g.iter().zip(&u).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    })
}

/// Whether `φ_V ∘ L = L** ∘ φ_U` holds entry-exactly.
pub fn double_dual_naturality(l: &Matrix) -> bool {
    let (m, n) = l.shape();
    let phi_u = evaluation_map(n);
    let phi_v = evaluation_map(m);
    let l_star_star = dual_map(&dual_map(l));
    &phi_v * l == &l_star_star * &phi_u
}

/// An element of `Hom(U, Hom(V, W))`: the image of each basis vector of `U`,
/// a `dim W × dim V` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurriedMap {
    pub dims: (usize, usize, usize),
    pub components: Vec<Matrix>,
}

impl CurriedMap {
    /// Scalar coordinates; equals `dim U · dim V · dim W`.
    pub fn coordinate_count(&self) -> usize {
        self.components.iter().map(|c| c.rows() * c.cols()).sum()
    }
}

/// Curries `M: U⊗V → W`, where column `i·dim V + j` is the image of `u_i⊗v_j`.
pub fn curry(dims: (usize, usize, usize), m: &Matrix) -> Result<CurriedMap, LinalgError> {
    let (du, dv, dw) = dims;
    if m.shape() != (dw, du * dv) {
        return Err(LinalgError::ShapeMismatch {
            expected_rows: dw,
            expected_cols: du * dv,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let components = (0..du)
        .map(|i| Matrix::from_fn(dw, dv, |w, j| m.get(w, i * dv + j).clone()))
        .collect();
    Ok(CurriedMap { dims, components })
}

pub fn uncurry(c: &CurriedMap) -> Matrix {
    let (du, dv, dw) = c.dims;
    Matrix::from_fn(dw, du * dv, |w, col| c.components[col / dv].get(w, col % dv).clone())
}

/// Whether `uncurry(curry(M)) = M`.
pub fn curry_roundtrip(dims: (usize, usize, usize), m: &Matrix) -> Result<bool, LinalgError> {
    let c = curry(dims, m)?;
    let (du, dv, dw) = dims;
    if c.coordinate_count() != du * dv * dw {
        return Ok(false);
    }
    Ok(uncurry(&c) == *m)
}

/// Image of `u ⊗ v` under a curried map: `components(u)(v)`.
pub fn apply_curried(c: &CurriedMap, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
    let (_, _, dw) = c.dims;
    let mut out = vec![Scalar::zero(); dw];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let img = c.components[i].mul_vec(v);
        for (o, x) in out.iter_mut().zip(img) {
            *o += a * x;
        }
    }
    out
}
