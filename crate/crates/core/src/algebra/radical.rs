use std::sync::Arc;

use num_traits::Zero;

use super::{AlgebraError, SCAlgebra};
use crate::linalg::{bilinear_image, Matrix, Scalar, Subspace};

/// The descending chain `A = J^0 ⊇ J^1 ⊇ … ⊇ J^d = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalFiltration {
    powers: Vec<Subspace>,
}

impl RadicalFiltration {
    /// `J^i`; zero past the end of the chain.
    pub fn power(&self, i: usize) -> &Subspace {
        &self.powers[i.min(self.powers.len() - 1)]
    }

    pub fn radical(&self) -> &Subspace {
        self.power(1)
    }

    /// All stored powers, `J^0` first and the zero space last.
    pub fn powers(&self) -> &[Subspace] {
        &self.powers
    }

    /// Least `d` with `J^d = 0`.
    pub fn nilpotency_index(&self) -> usize {
        self.powers.iter().position(Subspace::is_zero).unwrap_or(self.powers.len())
    }

    /// Re-checks the filtration invariants against `a`.
    pub fn verify(&self, a: &SCAlgebra) -> Result<(), AlgebraError> {
        let bad = |m: &str| Err(AlgebraError::Internal(format!("radical filtration: {m}")));
        if self.powers.first() != Some(&a.full_space()) {
            return bad("J^0 is not the whole algebra");
        }
        if !self.powers.last().is_some_and(Subspace::is_zero) {
            return bad("chain does not end at zero");
        }
        let j = self.radical();
        for (i, w) in self.powers.windows(2).enumerate() {
            if i > 0 && bilinear_image(a, j, &w[0])? != w[1] {
                return bad("J^(i+1) differs from J·J^i");
            }
            if !w[1].contained_in(&w[0])? {
                return bad("chain is not descending");
            }
        }
        for p in &self.powers {
            if !a.is_two_sided_ideal(p)? {
                return bad("a power is not a two-sided ideal");
            }
        }
        Ok(())
    }
}

/// `G[i][j] = tr(L_{e_i e_j})`, the trace form in the structure basis.
pub fn trace_form(a: &SCAlgebra) -> Matrix {
    let n = a.dim();
    // tr(L_{e_k}) = sum_j c[k][j][j]
    let traces: Vec<Scalar> = (0..n)
        .map(|k| {
            (0..n)
                .flat_map(|j| a.product_terms(k, j).iter().filter(move |(l, _)| *l == j))
                .fold(Scalar::zero(), |acc, (_, c)| acc + c)
        })
        .collect();
    Matrix::from_fn(n, n, |i, j| {
        a.product_terms(i, j)
            .iter()
            .fold(Scalar::zero(), |acc, (k, c)| acc + c * &traces[*k])
    })
}

impl SCAlgebra {
    /// Jacobson radical and its powers. In characteristic zero `J(A)` is the
    /// radical of the trace form; computed once per algebra value.
    pub fn radical(&self) -> Arc<RadicalFiltration> {
        self.radical
            .get_or_init(|| Arc::new(compute_filtration(self)))
            .clone()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().radical().is_zero()
    }
}

fn compute_filtration(a: &SCAlgebra) -> RadicalFiltration {
    let n = a.dim();
    let full = a.full_space();
    let j = Subspace::span(&trace_form(a).kernel(), n).expect("kernel vectors live in the algebra");
    let mut powers = vec![full];
    let mut current = j.clone();
    while !current.is_zero() {
        let next = bilinear_image(a, &j, &current).expect("subspaces share the ambient space");
        powers.push(current);
        if powers.len() > n + 1 {
            // The trace-form kernel is nilpotent in characteristic zero.
            unreachable!("radical failed to be nilpotent");
        }
        current = next;
    }
    powers.push(current);
    RadicalFiltration { powers }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, truncated_poly, upper_triangular, CayleyTable};
    use crate::linalg::unit_vector;

    #[test]
    fn upper_triangular_two() {
        let a = upper_triangular(2).unwrap();
        let r = a.radical();
        let e12 = a.label_index("E12").unwrap();
        assert_eq!(r.radical(), &Subspace::span(&[unit_vector(3, e12)], 3).unwrap());
        assert!(r.power(2).is_zero());
        assert_eq!(r.nilpotency_index(), 2);
        r.verify(&a).unwrap();
    }

    #[test]
    fn truncated_poly_powers() {
        for m in 2..6 {
            let a = truncated_poly(m).unwrap();
            let r = a.radical();
            for i in 1..=m {
                let expected: Vec<_> = (i..m).map(|k| unit_vector(m, k)).collect();
                assert_eq!(r.power(i), &Subspace::span(&expected, m).unwrap());
            }
            assert_eq!(r.nilpotency_index(), m);
        }
    }

    #[test]
    fn symmetric_group_is_semisimple() {
        assert!(group_algebra(&CayleyTable::symmetric3()).unwrap().is_semisimple());
        assert!(!truncated_poly(2).unwrap().is_semisimple());
    }

    #[test]
    fn nilpotency_of_semisimple_is_one() {
        let a = group_algebra(&CayleyTable::cyclic(2)).unwrap();
        assert_eq!(a.radical().nilpotency_index(), 1);
        a.radical().verify(&a).unwrap();
    }
}
