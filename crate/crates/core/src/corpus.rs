//! Seeded example collections shared by the acceptance suite, the CLI and
//! the benchmarks.

use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    diagonal_algebra, direct_sum, matrix_subalgebra, triangular_dual_numbers, truncated_poly, upper_triangular,
    AlgebraError, AlgebraHom, SCAlgebra,
};
use crate::bound::{bound_algebra, BoundError, Relation, RelationSet};
use crate::linalg::{add_scaled, int, Matrix, Scalar, Vector};
use crate::quiver::{Path, Quiver};
use crate::vquiver::Vquiver;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn small_nonzero<R: Rng>(rng: &mut R) -> Scalar {
    let n = rng.gen_range(1..=3);
    if rng.gen_bool(0.5) {
        int(n)
    } else {
        int(-n)
    }
}

/// Vertices `1..=n`; every arrow goes from a smaller to a larger vertex.
pub fn random_acyclic_quiver<R: Rng>(rng: &mut R, vertices: usize, arrows: usize) -> Quiver {
    let labels: Vec<String> = (1..=vertices).map(|i| i.to_string()).collect();
    let arrows = (1..=arrows)
        .map(|k| {
            let s = rng.gen_range(0..vertices - 1);
            let t = rng.gen_range(s + 1..vertices);
            (format!("a{k}"), labels[s].clone(), labels[t].clone())
        })
        .collect::<Vec<_>>();
    Quiver::new(labels, arrows).expect("generated quiver is well formed")
}

/// An acyclic quiver with up to three relations, each a random combination
/// of parallel paths of length at least 2.
pub fn random_bound_quiver<R: Rng>(rng: &mut R) -> RelationSet {
    let n = rng.gen_range(2..=5);
    let arrows = rng.gen_range(1..=6);
    let q = random_acyclic_quiver(rng, n, arrows);
    let longest = q.longest_path_len().expect("acyclic").max(1);
    let long: Vec<Path> = q.enumerate_paths(longest).into_iter().filter(|p| p.len() >= 2).collect();
    let mut relations: Vec<Relation> = Vec::new();
    for _ in 0..rng.gen_range(0..=3usize).min(long.len()) {
        let p = long.choose(rng).expect("nonempty").clone();
        let mut rel = vec![(small_nonzero(rng), p.clone())];
        for other in long.iter().filter(|o| **o != p && o.start == p.start && o.end(&q) == p.end(&q)) {
            if rng.gen_bool(0.5) {
                rel.push((small_nonzero(rng), other.clone()));
            }
        }
        relations.push(rel);
    }
    RelationSet::new(q, relations, longest).expect("relations use paths of length at least 2")
}

/// The bound quivers used to cross-check the trace-form radical against the
/// arrow ideal.
pub fn radical_oracle_corpus(seed: u64, count: usize) -> Vec<(String, RelationSet)> {
    let mut r = rng(seed);
    (0..count).map(|i| (format!("bq{i:02}"), random_bound_quiver(&mut r))).collect()
}

/// Acyclic Vquivers: a few named shapes followed by seeded random ones with
/// edge spaces of dimension at most 2.
pub fn vquiver_corpus(seed: u64, random: usize) -> Vec<(String, Vquiver)> {
    let named: Vec<(&str, Vquiver)> = vec![
        ("point", Vquiver::from_dims(["e"], &[]).unwrap()),
        ("two points", Vquiver::from_dims(["e", "f"], &[]).unwrap()),
        ("A2", Vquiver::from_dims(["e", "f"], &[("e", "f", 1)]).unwrap()),
        ("Kronecker", Vquiver::from_dims(["e", "f"], &[("e", "f", 2)]).unwrap()),
        ("A3", Vquiver::from_dims(["1", "2", "3"], &[("1", "2", 1), ("2", "3", 1)]).unwrap()),
        (
            "square",
            Vquiver::from_dims(["1", "2", "3", "4"], &[("1", "2", 1), ("1", "3", 1), ("2", "4", 1), ("3", "4", 1)])
                .unwrap(),
        ),
    ];
    let mut out: Vec<(String, Vquiver)> = named.into_iter().map(|(n, v)| (n.to_string(), v)).collect();
    let mut r = rng(seed);
    for i in 0..random {
        let n = r.gen_range(2..=4);
        let names: Vec<String> = (1..=n).map(|k| format!("v{k}")).collect();
        let mut spaces = Vec::new();
        for e in 0..n {
            for f in e + 1..n {
                let d = r.gen_range(0..=2);
                if d > 0 {
                    spaces.push((names[e].as_str(), names[f].as_str(), d));
                }
            }
        }
        out.push((format!("random{i}"), Vquiver::from_dims(names.clone(), &spaces).unwrap()));
    }
    out
}

fn bound(q: Quiver, paths: &[&[&str]]) -> Result<Arc<SCAlgebra>, BoundError> {
    let m = q.longest_path_len().expect("acyclic").max(1);
    Ok(bound_algebra(&RelationSet::monomial(q, paths, m)?)?.algebra)
}

/// Basic algebras whose Gabriel Vquiver is acyclic, including ones given in
/// a basis unrelated to any quiver.
pub fn acyclic_algebra_corpus() -> Result<Vec<(String, Arc<SCAlgebra>)>, BoundError> {
    let u = |n| upper_triangular(n).map(Arc::new);
    let q = |v: &[&str], a: &[(&str, &str, &str)]| Quiver::from_strs(v, a).expect("well formed");
    let commutative_square = {
        let sq = q(&["1", "2", "3", "4"], &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")]);
        let rel = vec![
            (int(1), sq.path_from_labels(&["a", "b"])?),
            (int(-1), sq.path_from_labels(&["c", "d"])?),
        ];
        bound_algebra(&RelationSet::new(sq, vec![rel], 2)?)?.algebra
    };
    let shear = Matrix::from_fn(6, 6, |i, j| match (i, j) {
        _ if i == j => int(1),
        (0, 3) | (2, 5) => int(2),
        (1, 4) => int(-1),
        _ => int(0),
    });
    Ok(vec![
        ("Q".into(), Arc::new(diagonal_algebra(1)?)),
        ("Q^3".into(), Arc::new(diagonal_algebra(3)?)),
        ("U2".into(), u(2)?),
        ("U3".into(), u(3)?),
        ("U4".into(), u(4)?),
        ("U3 sheared basis".into(), Arc::new(upper_triangular(3)?.transport(&shear)?)),
        ("U2 x Q".into(), Arc::new(direct_sum(&upper_triangular(2)?, &diagonal_algebra(1)?))),
        ("Kronecker".into(), Arc::new(q(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).path_algebra()?)),
        ("A3 mod a1.a2".into(), bound(Quiver::linear(3), &[&["a1", "a2"]])?),
        ("A4 mod a2.a3".into(), bound(Quiver::linear(4), &[&["a2", "a3"]])?),
        ("commutative square".into(), commutative_square),
        ("D4 subspace".into(), Arc::new(q(&["1", "2", "3", "4"], &[("a", "1", "4"), ("b", "2", "4"), ("c", "3", "4")]).path_algebra()?)),
    ])
}

/// `C ⊂ U3`: upper-triangular matrices with constant diagonal.
pub fn constant_diagonal_subalgebra() -> Result<SCAlgebra, AlgebraError> {
    let unit = |i, j| {
        let mut m = Matrix::zeros(3, 3);
        m.set(i, j, int(1));
        m
    };
    matrix_subalgebra(
        3,
        &[
            ("I".into(), Matrix::identity(3)),
            ("E12".into(), unit(0, 1)),
            ("E13".into(), unit(0, 2)),
            ("E23".into(), unit(1, 2)),
        ],
    )
}

/// Basic algebras of every kind: the acyclic corpus plus local and mixed
/// examples whose Gabriel Vquiver has loops.
pub fn basic_algebra_corpus() -> Result<Vec<(String, Arc<SCAlgebra>)>, BoundError> {
    let mut out = acyclic_algebra_corpus()?;
    out.push(("Q[x]/x^3".into(), Arc::new(truncated_poly(3)?)));
    out.push(("triangular dual numbers".into(), Arc::new(triangular_dual_numbers())));
    out.push(("constant-diagonal C".into(), Arc::new(constant_diagonal_subalgebra()?)));
    Ok(out)
}

/// A random unit `1 + r` with `r` a small combination of radical basis
/// vectors; such units fix every class modulo `J`.
pub fn random_radical_unit<R: Rng>(a: &SCAlgebra, rng: &mut R) -> Vector {
    let mut u = a.unit().to_vec();
    for b in a.radical().radical().basis() {
        add_scaled(&mut u, &int(rng.gen_range(-3..=3)), b);
    }
    u
}

/// A surjective endomorphism `x ↦ c₁x + c₂x² + …` of `Q[x]/(x^m)`, with `c₁`
/// drawn from `{1, 2}` so that agreement to first order is common.
pub fn random_truncated_poly_endo<R: Rng>(a: &Arc<SCAlgebra>, rng: &mut R) -> Result<AlgebraHom, AlgebraError> {
    let m = a.dim();
    let mut x = vec![int(0); m];
    if m > 1 {
        x[1] = int(rng.gen_range(1..=2));
        for c in x.iter_mut().skip(2) {
            *c = int(rng.gen_range(-1..=1));
        }
    }
    let images: Vec<Vector> = (0..m).map(|k| a.power(&x, k)).collect();
    AlgebraHom::from_images(a.clone(), a.clone(), &images)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_sizes_and_shapes() {
        let bq = radical_oracle_corpus(7, 24);
        assert_eq!(bq.len(), 24);
        assert!(bq.iter().all(|(_, r)| r.quiver().is_acyclic()));
        assert!(bq.iter().any(|(_, r)| !r.relations().is_empty()));
        let vq = vquiver_corpus(7, 6);
        assert!(vq.len() >= 10 && vq.iter().all(|(_, v)| v.is_acyclic()));
        assert!(acyclic_algebra_corpus().unwrap().len() >= 10);
    }

    #[test]
    fn seeded_generation_is_reproducible() {
        let a: Vec<String> = radical_oracle_corpus(3, 5).iter().map(|(_, r)| r.to_string()).collect();
        let b: Vec<String> = radical_oracle_corpus(3, 5).iter().map(|(_, r)| r.to_string()).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn radical_units_are_invertible() {
        let a = upper_triangular(3).unwrap();
        let mut r = rng(1);
        for _ in 0..5 {
            assert!(a.inverse(&random_radical_unit(&a, &mut r)).is_some());
        }
    }

    #[test]
    fn corpus_algebras_are_basic() {
        for (name, a) in basic_algebra_corpus().unwrap() {
            assert!(a.predicates().unwrap().basic, "{name}");
        }
    }
}
