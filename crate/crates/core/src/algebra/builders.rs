use num_traits::One;

use super::{AlgebraError, SCAlgebra};
use crate::linalg::{int, unit_vector, zero_vector, Matrix, Scalar, Vector};

fn matrix_unit_label(n: usize, i: usize, j: usize) -> String {
    if n > 9 {
        format!("E{},{}", i + 1, j + 1)
    } else {
        format!("E{}{}", i + 1, j + 1)
    }
}

fn require_positive(name: &str, n: usize) -> Result<(), AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::InvalidParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// `M_n(Q)` with matrix units `E_ij` in row-major order.
pub fn matrix_algebra(n: usize) -> Result<SCAlgebra, AlgebraError> {
    require_positive("n", n)?;
    let dim = n * n;
    let labels = (0..dim).map(|k| matrix_unit_label(n, k / n, k % n)).collect();
    let mut products = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let (i, j) = (a / n, a % n);
            let (k, l) = (b / n, b % n);
            products.push(if j == k { vec![(i * n + l, Scalar::one())] } else { Vec::new() });
        }
    }
    let mut unit = zero_vector(dim);
    for i in 0..n {
        unit[i * n + i] = Scalar::one();
    }
    Ok(SCAlgebra::from_sparse_unchecked(labels, products, unit))
}

/// Flattens a square matrix row-major, the coordinate order of `matrix_algebra`.
pub(crate) fn flatten(m: &Matrix) -> Vector {
    m.entries().to_vec()
}

/// Subalgebra of `M_n(Q)` spanned by the given labelled matrices, which must
/// be independent, closed under products and span the identity.
pub fn matrix_subalgebra(n: usize, generators: &[(String, Matrix)]) -> Result<SCAlgebra, AlgebraError> {
    let full = matrix_algebra(n)?;
    for (label, m) in generators {
        if m.shape() != (n, n) {
            return Err(AlgebraError::InvalidParameter(format!("matrix `{label}` is not {n}x{n}")));
        }
    }
    let basis: Vec<Vector> = generators.iter().map(|(_, m)| flatten(m)).collect();
    let labels = generators.iter().map(|(l, _)| l.clone()).collect();
    full.subalgebra(&basis, labels)
}

/// Upper-triangular `n × n` matrices, basis `E_ij` (`i ≤ j`) row-major.
pub fn upper_triangular(n: usize) -> Result<SCAlgebra, AlgebraError> {
    require_positive("n", n)?;
    let gens: Vec<(String, Matrix)> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| {
            let mut m = Matrix::zeros(n, n);
            m.set(i, j, Scalar::one());
            (matrix_unit_label(n, i, j), m)
        })
        .collect();
    matrix_subalgebra(n, &gens)
}

/// `Q[x]/(x^m)` with basis `1, x, …, x^(m-1)`.
pub fn truncated_poly(m: usize) -> Result<SCAlgebra, AlgebraError> {
    require_positive("m", m)?;
    let labels = (0..m)
        .map(|k| match k {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        })
        .collect();
    let products = (0..m * m)
        .map(|ij| {
            let d = ij / m + ij % m;
            if d < m {
                vec![(d, Scalar::one())]
            } else {
                Vec::new()
            }
        })
        .collect();
    Ok(SCAlgebra::from_sparse_unchecked(labels, products, unit_vector(m, 0)))
}

/// `Q^n` with orthogonal idempotent basis `e1, …, en`.
pub fn diagonal_algebra(n: usize) -> Result<SCAlgebra, AlgebraError> {
    require_positive("n", n)?;
    let labels = (1..=n).map(|i| format!("e{i}")).collect();
    let products = (0..n * n)
        .map(|ij| if ij / n == ij % n { vec![(ij / n, Scalar::one())] } else { Vec::new() })
        .collect();
    let unit = vec![Scalar::one(); n];
    Ok(SCAlgebra::from_sparse_unchecked(labels, products, unit))
}

/// `A × B`; labels are prefixed `1:` and `2:`.
pub fn direct_sum(a: &SCAlgebra, b: &SCAlgebra) -> SCAlgebra {
    let (da, db) = (a.dim(), b.dim());
    let dim = da + db;
    let labels = a
        .labels()
        .iter()
        .map(|l| format!("1:{l}"))
        .chain(b.labels().iter().map(|l| format!("2:{l}")))
        .collect();
    let mut products = vec![Vec::new(); dim * dim];
    for i in 0..da {
        for j in 0..da {
            products[i * dim + j] = a.product_terms(i, j).to_vec();
        }
    }
    for i in 0..db {
        for j in 0..db {
            products[(da + i) * dim + da + j] =
                b.product_terms(i, j).iter().map(|(k, c)| (da + k, c.clone())).collect();
        }
    }
    let mut unit = a.unit().to_vec();
    unit.extend(b.unit().iter().cloned());
    SCAlgebra::from_sparse_unchecked(labels, products, unit)
}

/// A finite group by its multiplication table: `table[g][h]` is the index
/// of `g·h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleyTable {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    /// Checks closure, associativity, a two-sided identity and inverses.
    /// Returns the index of the identity.
    pub fn validate(&self) -> Result<usize, AlgebraError> {
        let n = self.elements.len();
        let bad = |msg: String| Err(AlgebraError::InvalidCayleyTable(msg));
        if n == 0 {
            return bad("empty group".into());
        }
        if self.table.len() != n || self.table.iter().any(|r| r.len() != n) {
            return bad(format!("table must be {n}x{n}"));
        }
        if self.table.iter().flatten().any(|&x| x >= n) {
            return bad("entry outside the element set".into());
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.table[self.table[a][b]][c] != self.table[a][self.table[b][c]] {
                        return bad(format!(
                            "not associative on ({}, {}, {})",
                            self.elements[a], self.elements[b], self.elements[c]
                        ));
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| self.table[e][g] == g && self.table[g][e] == g)) else {
            return bad("no identity element".into());
        };
        for g in 0..n {
            if !(0..n).any(|h| self.table[g][h] == e && self.table[h][g] == e) {
                return bad(format!("`{}` has no inverse", self.elements[g]));
            }
        }
        Ok(e)
    }

    /// `Z/n` written additively: `g0, …, g(n-1)`.
    pub fn cyclic(n: usize) -> Self {
        Self {
            elements: (0..n).map(|k| format!("g{k}")).collect(),
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        }
    }

    /// The symmetric group on three letters, permutations in lexicographic
    /// order of their one-line notation; `g·h` applies `h` first.
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed under composition");
        let table = perms
            .iter()
            .map(|g| perms.iter().map(|h| index([g[h[0]], g[h[1]], g[h[2]]])).collect())
            .collect();
        let elements = perms.iter().map(|p| format!("s{}{}{}", p[0] + 1, p[1] + 1, p[2] + 1)).collect();
        Self { elements, table }
    }
}

/// `Q[G]` with the group elements as basis in table order.
pub fn group_algebra(group: &CayleyTable) -> Result<SCAlgebra, AlgebraError> {
    let e = group.validate()?;
    let n = group.elements.len();
    let products = (0..n * n)
        .map(|ij| vec![(group.table[ij / n][ij % n], Scalar::one())])
        .collect();
    Ok(SCAlgebra::from_sparse_unchecked(
        group.elements.clone(),
        products,
        unit_vector(n, e),
    ))
}

fn block_matrix(blocks: [[&Matrix; 2]; 2]) -> Matrix {
    let k = blocks[0][0].rows();
    let mut m = Matrix::zeros(2 * k, 2 * k);
    for (r, row) in blocks.iter().enumerate() {
        for (c, b) in row.iter().enumerate() {
            m.set_block(r * k, c * k, b);
        }
    }
    m
}

/// The algebra of matrices `[[a, p(x)], [0, q(x)]]` with `a ∈ Q` and
/// `p, q ∈ Q[x]/(x^2)`, realised inside `M_4(Q)` with `Q[x]/(x^2)` acting as
/// `2 × 2` blocks `aI + bN`. Basis: `e1, e2, y, b, c`, where `y` is `x` in the
/// lower corner, `b` is `1` in the off-diagonal corner and `c = b·y`.
pub fn triangular_dual_numbers() -> SCAlgebra {
    let i = Matrix::identity(2);
    let z = Matrix::zeros(2, 2);
    let mut nil = Matrix::zeros(2, 2);
    nil.set(1, 0, int(1));
    let gens = [
        ("e1", block_matrix([[&i, &z], [&z, &z]])),
        ("e2", block_matrix([[&z, &z], [&z, &i]])),
        ("y", block_matrix([[&z, &z], [&z, &nil]])),
        ("b", block_matrix([[&z, &i], [&z, &z]])),
        ("c", block_matrix([[&z, &nil], [&z, &z]])),
    ];
    let gens: Vec<(String, Matrix)> = gens.into_iter().map(|(l, m)| (l.to_string(), m)).collect();
    matrix_subalgebra(4, &gens).expect("block algebra is a unital subalgebra of M_4")
}
