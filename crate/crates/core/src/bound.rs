//! Relations on path algebras, admissible ideals `R^m ⊆ I ⊆ R^2`, and
//! bound path algebras `kQ/I`.
//!
//! Everything happens inside the truncation `kQ/R^(M+1)` for a user-chosen
//! bound `M`, which is what makes quivers with oriented cycles tractable.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{quotient_algebra, AlgebraError, AlgebraHom, SCAlgebra};
use crate::linalg::{bilinear_image, unit_vector, zero_vector, LinalgError, Scalar, Subspace, Vector};
use crate::quiver::{path_algebra_on, Path, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("truncation bound must be at least 1")]
    InvalidBound,
    #[error("relation {relation} contains `{path}` of length < 2; relations must lie in R^2")]
    ShortPath { relation: usize, path: String },
    #[error("relation {0} is empty")]
    EmptyRelation(usize),
    #[error("relation set is not admissible: {0}")]
    NotAdmissible(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A formal linear combination of paths.
pub type Relation = Vec<(Scalar, Path)>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    quiver: Quiver,
    relations: Vec<Relation>,
    max_len: usize,
}

impl RelationSet {
    pub fn new(quiver: Quiver, relations: Vec<Relation>, max_len: usize) -> Result<Self, BoundError> {
        if max_len == 0 {
            return Err(BoundError::InvalidBound);
        }
        for (i, rel) in relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(BoundError::EmptyRelation(i));
            }
            for (_, p) in rel {
                if p.len() < 2 {
                    return Err(BoundError::ShortPath {
                        relation: i,
                        path: p.label(&quiver),
                    });
                }
                quiver.check_path(p)?;
            }
        }
        Ok(Self {
            quiver,
            relations,
            max_len,
        })
    }

    /// Monomial relations given as arrow-label chains, e.g. `["a", "b"]`.
    pub fn monomial(quiver: Quiver, paths: &[&[&str]], max_len: usize) -> Result<Self, BoundError> {
        let mut relations = Vec::with_capacity(paths.len());
        for labels in paths {
            relations.push(vec![(Scalar::from_integer(1.into()), quiver.path_from_labels(labels)?)]);
        }
        Self::new(quiver, relations, max_len)
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn with_max_len(&self, max_len: usize) -> Result<Self, BoundError> {
        Self::new(self.quiver.clone(), self.relations.clone(), max_len)
    }

    /// `true` when no path is longer than `M`, so the truncation is `kQ`.
    pub fn truncation_is_exact(&self) -> bool {
        self.quiver.longest_path_len().is_some_and(|l| l <= self.max_len)
    }

    /// Relation text such as `2*a*b - c*d`.
    pub fn format_relation(&self, rel: &Relation) -> String {
        let mut out = String::new();
        for (c, p) in rel {
            let negative = c < &Scalar::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&format!("{abs}*{}", p.relation_syntax(&self.quiver)));
        }
        out
    }
}

impl fmt::Display for RelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rel in &self.relations {
            writeln!(f, "relation: {}", self.format_relation(rel))?;
        }
        write!(f, "maxlen: {}", self.max_len)
    }
}

/// `kQ/R^(M+1)`: paths of length at most `M`, longer products vanish.
pub fn truncated_path_algebra(q: &Quiver, max_len: usize) -> Result<SCAlgebra, BoundError> {
    if max_len == 0 {
        return Err(BoundError::InvalidBound);
    }
    Ok(path_algebra_on(q, q.enumerate_paths(max_len)))
}

/// `R^k` inside an algebra with path bookkeeping: span of paths of length `≥ k`.
pub fn arrow_ideal_power(t: &SCAlgebra, k: usize) -> Result<Subspace, BoundError> {
    let pb = t.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let n = t.dim();
    let vs: Vec<Vector> = pb
        .paths
        .iter()
        .enumerate()
        .filter(|(_, p)| p.len() >= k)
        .map(|(i, _)| unit_vector(n, i))
        .collect();
    Ok(Subspace::span(&vs, n)?)
}

/// Smallest two-sided ideal containing the generators.
pub fn ideal_closure(t: &SCAlgebra, generators: &[Vector]) -> Result<Subspace, BoundError> {
    let full = t.full_space();
    let mut current = Subspace::span(generators, t.dim())?;
    loop {
        let left = bilinear_image(t, &full, &current)?;
        let both = bilinear_image(t, &left, &full)?;
        let next = both.sum(&current)?;
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// Coordinates of a relation in the truncation; paths longer than the
/// truncation are zero there.
pub fn relation_vector(t: &SCAlgebra, rel: &Relation) -> Result<Vector, BoundError> {
    let pb = t.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let mut v = zero_vector(t.dim());
    for (c, p) in rel {
        if let Some(i) = pb.index_of(p) {
            v[i] += c;
        }
    }
    Ok(v)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Admissible,
    /// `I ⊄ R^2`.
    NotInRadicalSquare,
    /// No `m ≤ M` works and the truncation is not exact; raising `M` may help.
    Undetermined,
}

#[derive(Clone, Debug)]
pub struct Admissibility {
    pub verdict: Verdict,
    /// The least `m ≥ 2` with `R^m ⊆ I`, when one was found.
    pub m: Option<usize>,
    pub truncation: Arc<SCAlgebra>,
    pub ideal: Subspace,
}

impl Admissibility {
    pub fn admissible(&self) -> bool {
        self.verdict == Verdict::Admissible
    }
}

pub fn check_admissible(r: &RelationSet) -> Result<Admissibility, BoundError> {
    let t = Arc::new(truncated_path_algebra(&r.quiver, r.max_len)?);
    let gens = r
        .relations
        .iter()
        .map(|rel| relation_vector(&t, rel))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = ideal_closure(&t, &gens)?;
    let report = |verdict, m| Admissibility {
        verdict,
        m,
        truncation: t.clone(),
        ideal: ideal.clone(),
    };
    if !ideal.contained_in(&arrow_ideal_power(&t, 2)?)? {
        return Ok(report(Verdict::NotInRadicalSquare, None));
    }
    // R^(M+1) = 0 in the truncation, so the search always ends.
    let mut least = r.max_len + 1;
    for k in 1..=r.max_len {
        if arrow_ideal_power(&t, k)?.contained_in(&ideal)? {
            least = k;
            break;
        }
    }
    let m = least.max(2);
    if least <= r.max_len || r.truncation_is_exact() {
        Ok(report(Verdict::Admissible, Some(m)))
    } else {
        Ok(report(Verdict::Undetermined, None))
    }
}

/// `kQ/I` with the projection from the truncation.
#[derive(Clone, Debug)]
pub struct BoundAlgebra {
    pub algebra: Arc<SCAlgebra>,
    pub projection: AlgebraHom,
    pub ideal: Subspace,
    pub m: usize,
}

pub fn bound_algebra(r: &RelationSet) -> Result<BoundAlgebra, BoundError> {
    let report = check_admissible(r)?;
    let m = match (report.verdict, report.m) {
        (Verdict::Admissible, Some(m)) => m,
        (Verdict::NotInRadicalSquare, _) => {
            return Err(BoundError::NotAdmissible("the ideal is not contained in R^2".into()))
        }
        _ => {
            return Err(BoundError::NotAdmissible(format!(
                "no power of R up to {} lies in the ideal; raise maxlen",
                r.max_len
            )))
        }
    };
    let q = quotient_algebra(&report.truncation, &report.ideal)?;
    Ok(BoundAlgebra {
        algebra: q.algebra,
        projection: q.projection,
        ideal: report.ideal,
        m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{matrix_subalgebra, truncated_poly, upper_triangular};
    use crate::linalg::{int, Matrix};

    fn two_loops() -> Quiver {
        Quiver::from_strs(&["1"], &[("alpha", "1", "1"), ("beta", "1", "1")]).unwrap()
    }

    fn one_loop() -> Quiver {
        Quiver::from_strs(&["1"], &[("x", "1", "1")]).unwrap()
    }

    fn two_loop_relations(max_len: usize) -> RelationSet {
        RelationSet::monomial(
            two_loops(),
            &[&["alpha", "alpha"], &["beta", "beta"], &["alpha", "beta"]],
            max_len,
        )
        .unwrap()
    }

    #[test]
    fn truncation_sizes() {
        assert_eq!(truncated_path_algebra(&two_loops(), 2).unwrap().dim(), 7);
        let q = Quiver::linear(4);
        assert_eq!(truncated_path_algebra(&q, 5).unwrap(), q.path_algebra().unwrap());
        assert_eq!(truncated_path_algebra(&one_loop(), 3).unwrap(), truncated_poly(4).unwrap());
        assert_eq!(truncated_path_algebra(&q, 0).unwrap_err(), BoundError::InvalidBound);
    }

    #[test]
    fn closures() {
        let q = Quiver::from_strs(&["1", "2"], &[("h", "1", "2")]).unwrap();
        let t = q.path_algebra().unwrap();
        assert!(ideal_closure(&t, &[]).unwrap().is_zero());
        let arrows = vec![unit_vector(3, 2)];
        assert_eq!(ideal_closure(&t, &arrows).unwrap(), arrow_ideal_power(&t, 1).unwrap());

        let r = two_loop_relations(2);
        let t = truncated_path_algebra(&two_loops(), 2).unwrap();
        let gens: Vec<Vector> = r.relations().iter().map(|rel| relation_vector(&t, rel).unwrap()).collect();
        let closure = ideal_closure(&t, &gens).unwrap();
        assert_eq!(closure.dim(), 3);
        let ba = t.path_basis().unwrap().index_of(&two_loops().path_from_labels(&["beta", "alpha"]).unwrap());
        assert!(!closure.contains_vector(&unit_vector(7, ba.unwrap())));
    }

    #[test]
    fn admissibility_examples() {
        let q = Quiver::linear(3);
        let r = RelationSet::new(q, vec![], 5).unwrap();
        let rep = check_admissible(&r).unwrap();
        assert!(rep.admissible());
        assert_eq!(rep.m, Some(3));

        let rep = check_admissible(&two_loop_relations(3)).unwrap();
        assert!(rep.admissible());
        assert_eq!(rep.m, Some(3));

        for m in 1..5 {
            let r = RelationSet::new(one_loop(), vec![], m).unwrap();
            let rep = check_admissible(&r).unwrap();
            assert!(!rep.admissible());
            assert_eq!(rep.verdict, Verdict::Undetermined);
        }
    }

    #[test]
    fn undetermined_until_bound_is_large_enough() {
        assert_eq!(check_admissible(&two_loop_relations(2)).unwrap().verdict, Verdict::Undetermined);
        for m in 3..6 {
            assert_eq!(check_admissible(&two_loop_relations(m)).unwrap().m, Some(3));
        }
    }

    #[test]
    fn short_relations_are_rejected() {
        let q = Quiver::linear(3);
        let err = RelationSet::monomial(q, &[&["a1"]], 3).unwrap_err();
        assert!(matches!(err, BoundError::ShortPath { .. }));
    }

    #[test]
    fn relations_outside_radical_square() {
        // a1.a2 - a3 with a parallel arrow a3: 1 → 3
        let q = Quiver::from_strs(&["1", "2", "3"], &[("a1", "1", "2"), ("a2", "2", "3"), ("a3", "1", "3")]).unwrap();
        let t = Arc::new(q.path_algebra().unwrap());
        let long = q.path_from_labels(&["a1", "a2"]).unwrap();
        let short = q.path_from_labels(&["a3"]).unwrap();
        let v = relation_vector(&t, &vec![(int(1), long), (int(-1), short)]).unwrap();
        let closure = ideal_closure(&t, &[v]).unwrap();
        assert!(!closure.contained_in(&arrow_ideal_power(&t, 2).unwrap()).unwrap());
    }

    #[test]
    fn unbound_arrow_is_triangular_matrices() {
        let q = Quiver::from_strs(&["1", "2"], &[("h", "1", "2")]).unwrap();
        let b = bound_algebra(&RelationSet::new(q, vec![], 2).unwrap()).unwrap();
        assert_eq!(b.algebra.dim(), 3);
        let u2 = Arc::new(upper_triangular(2).unwrap());
        let e = |l: &str| unit_vector(3, u2.label_index(l).unwrap());
        AlgebraHom::from_images(b.algebra.clone(), u2.clone(), &[e("E11"), e("E22"), e("E12")]).unwrap();
    }

    #[test]
    fn two_loop_bound_algebra_matches_triangular_subalgebra() {
        let b = bound_algebra(&two_loop_relations(3)).unwrap();
        assert_eq!(b.algebra.labels(), ["p1", "alpha", "beta", "beta.alpha"]);
        let unit = |i, j| {
            let mut m = Matrix::zeros(3, 3);
            m.set(i, j, int(1));
            m
        };
        let c = Arc::new(
            matrix_subalgebra(
                3,
                &[
                    ("I".into(), Matrix::identity(3)),
                    ("E12".into(), unit(0, 1)),
                    ("E13".into(), unit(0, 2)),
                    ("E23".into(), unit(1, 2)),
                ],
            )
            .unwrap(),
        );
        let images: Vec<Vector> =
            ["I", "E23", "E12", "E13"].iter().map(|l| unit_vector(4, c.label_index(l).unwrap())).collect();
        let iso = AlgebraHom::from_images(b.algebra.clone(), c, &images).unwrap();
        assert!(iso.is_isomorphism());
    }

    #[test]
    fn loop_modulo_power_is_truncated_polynomials() {
        for m in 2..6 {
            let labels: Vec<&str> = vec!["x"; m];
            let r = RelationSet::monomial(one_loop(), &[&labels], m).unwrap();
            let b = bound_algebra(&r).unwrap();
            assert_eq!(*b.algebra, truncated_poly(m).unwrap());
            assert_eq!(b.m, m);
        }
    }

    #[test]
    fn dimension_bookkeeping_and_radical() {
        let r = two_loop_relations(4);
        let b = bound_algebra(&r).unwrap();
        let t = b.projection.source().clone();
        let shorter = Subspace::span(
            &t.path_basis()
                .unwrap()
                .paths
                .iter()
                .enumerate()
                .filter(|(_, p)| p.len() < b.m)
                .map(|(i, _)| unit_vector(t.dim(), i))
                .collect::<Vec<_>>(),
            t.dim(),
        )
        .unwrap();
        let expected = shorter.dim() - b.ideal.intersect(&shorter).unwrap().dim();
        assert_eq!(b.algebra.dim(), expected);
        let r1 = arrow_ideal_power(&t, 1).unwrap();
        assert_eq!(b.projection.map_subspace(&r1), *b.algebra.radical().radical());
    }

    #[test]
    fn display_roundtrips_syntax() {
        let r = two_loop_relations(3);
        let text = r.to_string();
        assert!(text.contains("relation: 1*alpha*alpha"));
        assert!(text.ends_with("maxlen: 3"));
    }
}
