//! The Gabriel Vquiver functor, the depth-n congruence on surjective
//! homomorphisms, and the unit and counit relating `k[-]` and `GQ(-)`.

use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use thiserror::Error;

use crate::algebra::{
    lift_idempotents, quotient_algebra, radical_quotient, AlgebraError, AlgebraHom, IdempotentSet, Quotient,
    SCAlgebra,
};
use crate::bound::{arrow_ideal_power, BoundError, Relation, RelationSet};
use crate::linalg::{add_scaled, int, solve_in_span, unit_vector, LinalgError, Matrix, Scalar, Subspace, Vector};
use crate::vquiver::{default_labels, induced_hom_on, path_algebra_vq, tensor_extension, Vquiver, VquiverError, VquiverMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdjunctionError {
    #[error("Gabriel Vquiver has an oriented cycle; unit and counit need an acyclic one")]
    CyclicGabriel,
    #[error("homomorphism is not surjective")]
    NotSurjective,
    #[error("homomorphisms do not share source and target")]
    EndpointMismatch,
    #[error("Gabriel Vquiver was built for a different algebra")]
    WrongAlgebra,
    #[error("consistency check failed: {0}")]
    Internal(String),
    #[error(transparent)]
    Vquiver(#[from] VquiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

fn internal<T>(msg: impl Into<String>) -> Result<T, AdjunctionError> {
    Err(AdjunctionError::Internal(msg.into()))
}

/// Whether `(α₁ − α₂)(Jⁱ(A)) ⊆ Jⁱ⁺¹(B)` for every `0 ≤ i ≤ n`.
pub fn ndepth_equivalent(a1: &AlgebraHom, a2: &AlgebraHom, n: usize) -> Result<bool, AdjunctionError> {
    Ok(ndepth_failure(a1, a2, n)?.is_none())
}

/// The least `i ≤ n` at which the containment fails.
pub fn ndepth_failure(a1: &AlgebraHom, a2: &AlgebraHom, n: usize) -> Result<Option<usize>, AdjunctionError> {
    let diff = a1.difference(a2).map_err(|_| AdjunctionError::EndpointMismatch)?;
    let source = a1.source().radical();
    let target = a1.target().radical();
    for i in 0..=n {
        let bound = target.power(i + 1);
        for v in source.power(i).basis() {
            if !bound.contains_vector(&diff.mul_vec(v)) {
                return Ok(Some(i));
            }
        }
    }
    Ok(None)
}

/// A morphism of the depth-`n` quotient category: a representative plus
/// the depth. Equality goes through [`ndepth_equivalent`].
#[derive(Clone, Debug)]
pub struct NDepthClass {
    pub representative: AlgebraHom,
    pub depth: usize,
}

impl NDepthClass {
    pub fn new(representative: AlgebraHom, depth: usize) -> Self {
        Self { representative, depth }
    }

    pub fn equivalent(&self, other: &NDepthClass) -> Result<bool, AdjunctionError> {
        ndepth_equivalent(&self.representative, &other.representative, self.depth.min(other.depth))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &NDepthClass) -> Result<NDepthClass, AdjunctionError> {
        let rep = self
            .representative
            .then(&next.representative)
            .map_err(|_| AdjunctionError::EndpointMismatch)?;
        Ok(NDepthClass::new(rep, self.depth.min(next.depth)))
    }
}

/// `GQ(A)` with the data needed to compute with it: lifted idempotents,
/// orbit keys `π(eᵢ) ∈ A/J`, and coset representatives in `eᵢJeⱼ` for a basis
/// of `eᵢ(J/J²)eⱼ`.
#[derive(Clone, Debug)]
pub struct GabrielVquiver {
    pub underlying: Vquiver,
    algebra: Arc<SCAlgebra>,
    top: Quotient,
    idempotents: IdempotentSet,
    radical_square: Subspace,
    representatives: Vec<Vec<Vec<Vector>>>,
}

impl GabrielVquiver {
    pub fn algebra(&self) -> &Arc<SCAlgebra> {
        &self.algebra
    }

    pub fn idempotents(&self) -> &IdempotentSet {
        &self.idempotents
    }

    /// `π(eᵢ)` in the basis of `A/J`, one per vertex.
    pub fn orbit_keys(&self) -> &[Vector] {
        &self.idempotents.images
    }

    pub fn top(&self) -> &Quotient {
        &self.top
    }

    pub fn representatives(&self, i: usize, j: usize) -> &[Vector] {
        &self.representatives[i][j]
    }

    /// The vertex whose orbit contains the idempotent `x`: `Some(None)` when
    /// `x ∈ J` (the base point), `None` when `π(x)` is not a key.
    pub fn orbit_of(&self, x: &[Scalar]) -> Option<Option<usize>> {
        let key = self.top.project(x);
        if key.iter().all(Zero::is_zero) {
            return Some(None);
        }
        self.orbit_keys().iter().position(|k| *k == key).map(Some)
    }

    /// Coordinates of the class of `eᵢ·x·eⱼ` modulo `J²` in the chosen
    /// basis of `eᵢ(J/J²)eⱼ`. `x` must lie in `J`.
    pub fn class_coordinates(&self, i: usize, j: usize, x: &[Scalar]) -> Result<Vector, AdjunctionError> {
        let a = &self.algebra;
        let corner = a.mul(&a.mul(&self.idempotents.idempotents[i], x), &self.idempotents.idempotents[j]);
        let reps = &self.representatives[i][j];
        let mut spanning = reps.clone();
        spanning.extend(self.radical_square.basis().iter().cloned());
        match solve_in_span(&spanning, &corner) {
            Some(mut c) => {
                c.truncate(reps.len());
                Ok(c)
            }
            None => internal("element is not in the radical"),
        }
    }
}

pub fn gabriel_vquiver(a: &Arc<SCAlgebra>) -> Result<GabrielVquiver, AdjunctionError> {
    let idempotents = lift_idempotents(a)?;
    gabriel_vquiver_with(a, idempotents)
}

/// `GQ(A)` from a given complete set of primitive orthogonal idempotents.
pub fn gabriel_vquiver_with(a: &Arc<SCAlgebra>, idempotents: IdempotentSet) -> Result<GabrielVquiver, AdjunctionError> {
    idempotents.verify(a)?;
    let top = radical_quotient(a)?;
    let filtration = a.radical();
    let radical = filtration.radical();
    let radical_square = filtration.power(2).clone();
    let n = idempotents.len();
    let names: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    let mut representatives = vec![vec![Vec::new(); n]; n];
    let mut spaces = Vec::new();
    for (i, ei) in idempotents.idempotents.iter().enumerate() {
        for (j, ej) in idempotents.idempotents.iter().enumerate() {
            let corner = a.corner(ei, ej, radical)?;
            let deep = corner.intersect(&radical_square)?;
            let reps = corner.quotient_basis(&deep)?;
            if !reps.is_empty() {
                spaces.push((names[i].clone(), names[j].clone(), default_labels(&names[i], &names[j], reps.len())));
            }
            representatives[i][j] = reps;
        }
    }
    Ok(GabrielVquiver {
        underlying: Vquiver::new(names, spaces)?,
        algebra: a.clone(),
        top,
        idempotents,
        radical_square,
        representatives,
    })
}

/// `GQ(α)`: vertex `i` goes to the orbit of `α(eᵢ)`, and the class of `x`
/// goes to the class of `α(x)`.
pub fn gabriel_on_hom(
    alpha: &AlgebraHom,
    source: &GabrielVquiver,
    target: &GabrielVquiver,
) -> Result<VquiverMap, AdjunctionError> {
    if **alpha.source() != *source.algebra || **alpha.target() != *target.algebra {
        return Err(AdjunctionError::WrongAlgebra);
    }
    if !alpha.is_surjective() {
        return Err(AdjunctionError::NotSurjective);
    }
    let n = source.idempotents.len();
    let mut vertex_map = Vec::with_capacity(n);
    for e in &source.idempotents.idempotents {
        match target.orbit_of(&alpha.apply(e)) {
            Some(v) => vertex_map.push(v),
            None => return internal("image of a primitive idempotent is not primitive"),
        }
    }
    let mut edge_maps = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if let (Some(a), Some(b)) = (vertex_map[i], vertex_map[j]) {
                let columns = source.representatives[i][j]
                    .iter()
                    .map(|r| target.class_coordinates(a, b, &alpha.apply(r)))
                    .collect::<Result<Vec<_>, _>>()?;
                let rows = target.underlying.dim(a, b);
                edge_maps.push(((i, j), Matrix::from_columns(&columns, rows)?));
            }
        }
    }
    let map = VquiverMap::new(source.underlying.clone(), target.underlying.clone(), vertex_map, edge_maps)?;
    if !map.is_surjective() {
        return internal("GQ of a surjection is not surjective");
    }
    Ok(map)
}

/// `η_VQ` together with the objects it lands in.
#[derive(Clone, Debug)]
pub struct Unit {
    pub map: VquiverMap,
    pub path_algebra: Arc<SCAlgebra>,
    pub gabriel: GabrielVquiver,
}

/// `η_VQ: VQ → GQ(k[VQ])`: vertices go to the orbits of their trivial paths,
/// edge basis elements to the classes of the corresponding degree-1 words.
pub fn unit(vq: &Vquiver) -> Result<Unit, AdjunctionError> {
    let kvq = Arc::new(path_algebra_vq(vq)?);
    let gabriel = gabriel_vquiver(&kvq)?;
    let pb = kvq.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let d = kvq.dim();
    let mut vertex_map = Vec::with_capacity(vq.vertex_count());
    for v in 0..vq.vertex_count() {
        let p = unit_vector(d, pb.vertex_element(v).expect("trivial paths are basis elements"));
        match gabriel.orbit_of(&p) {
            Some(Some(t)) => vertex_map.push(Some(t)),
            _ => return internal("trivial path is not a primitive idempotent"),
        }
    }
    let edge_ids = vq.edge_ids();
    let mut edge_maps = Vec::new();
    for e in 0..vq.vertex_count() {
        for f in 0..vq.vertex_count() {
            let (a, b) = (vertex_map[e].unwrap(), vertex_map[f].unwrap());
            let columns = edge_ids
                .iter()
                .enumerate()
                .filter(|(_, &(s, t, _))| (s, t) == (e, f))
                .map(|(arrow, _)| {
                    let word = unit_vector(d, pb.arrow_element(arrow).expect("arrows are basis elements"));
                    gabriel.class_coordinates(a, b, &word)
                })
                .collect::<Result<Vec<_>, _>>()?;
            edge_maps.push(((e, f), Matrix::from_columns(&columns, gabriel.underlying.dim(a, b))?));
        }
    }
    let map = VquiverMap::new(vq.clone(), gabriel.underlying.clone(), vertex_map, edge_maps)?;
    if !map.is_isomorphism() {
        return internal("unit is not an isomorphism of Vquivers");
    }
    Ok(Unit {
        map,
        path_algebra: kvq,
        gabriel,
    })
}

/// `ε_A` with the path algebra `k[GQ(A)]` it starts from.
#[derive(Clone, Debug)]
pub struct Counit {
    pub gabriel: GabrielVquiver,
    pub path_algebra: Arc<SCAlgebra>,
    pub class: NDepthClass,
}

fn require_acyclic(g: &GabrielVquiver) -> Result<Arc<SCAlgebra>, AdjunctionError> {
    match path_algebra_vq(&g.underlying) {
        Ok(k) => Ok(Arc::new(k)),
        Err(VquiverError::Cyclic) => Err(AdjunctionError::CyclicGabriel),
        Err(e) => Err(e.into()),
    }
}

/// `ε_A: k[GQ(A)] → A` with the deterministic section, as a depth-1 class.
pub fn counit(a: &Arc<SCAlgebra>) -> Result<Counit, AdjunctionError> {
    let gabriel = gabriel_vquiver(a)?;
    let path_algebra = require_acyclic(&gabriel)?;
    let hom = counit_on(&gabriel, path_algebra.clone())?;
    Ok(Counit {
        gabriel,
        path_algebra,
        class: NDepthClass::new(hom, 1),
    })
}

/// Vertices go to the lifted idempotents and edge basis elements to their
/// coset representatives; the rest follows from the universal property.
pub fn counit_on(g: &GabrielVquiver, kg: Arc<SCAlgebra>) -> Result<AlgebraHom, AdjunctionError> {
    let edges = g
        .underlying
        .edge_ids()
        .into_iter()
        .map(|(i, j, k)| g.representatives[i][j][k].clone())
        .collect::<Vec<_>>();
    extend_counit(g, kg, &edges)
}

/// Same as [`counit_on`] but each representative is shifted by a random
/// element of `eᵢJ²eⱼ`, giving another section of `eᵢJeⱼ → eᵢ(J/J²)eⱼ`.
pub fn counit_with_random_section<R: Rng>(
    g: &GabrielVquiver,
    kg: Arc<SCAlgebra>,
    rng: &mut R,
) -> Result<AlgebraHom, AdjunctionError> {
    let a = &g.algebra;
    let mut edges = Vec::new();
    for (i, j, k) in g.underlying.edge_ids() {
        let (ei, ej) = (&g.idempotents.idempotents[i], &g.idempotents.idempotents[j]);
        let deep = a.corner(ei, ej, &g.radical_square)?;
        let mut r = g.representatives[i][j][k].clone();
        for b in deep.basis() {
            add_scaled(&mut r, &int(rng.gen_range(-3..=3)), b);
        }
        edges.push(r);
    }
    extend_counit(g, kg, &edges)
}

fn extend_counit(g: &GabrielVquiver, kg: Arc<SCAlgebra>, edges: &[Vector]) -> Result<AlgebraHom, AdjunctionError> {
    let hom = tensor_extension(kg, g.algebra.clone(), &g.idempotents.idempotents, edges)?;
    if !hom.is_surjective() {
        return internal("counit is not surjective");
    }
    Ok(hom)
}

/// Outcome of one triangle identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCheck {
    pub passed: bool,
    pub witness: Option<String>,
}

impl TriangleCheck {
    fn pass() -> Self {
        Self {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Self {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// `ε_{k[VQ]} ∘ k[η_VQ] ~₁ id`.
pub fn vquiver_triangle(vq: &Vquiver) -> Result<TriangleCheck, AdjunctionError> {
    let u = unit(vq)?;
    let kg = require_acyclic(&u.gabriel)?;
    let k_eta = induced_hom_on(&u.map, u.path_algebra.clone(), kg.clone())?;
    let eps = counit_on(&u.gabriel, kg)?;
    let composite = k_eta.then(&eps)?;
    let id = AlgebraHom::identity(u.path_algebra);
    Ok(match ndepth_failure(&composite, &id, 1)? {
        None => TriangleCheck::pass(),
        Some(i) => TriangleCheck::fail(format!("difference leaves J^{} at degree {i}", i + 1)),
    })
}

/// `GQ(ε_A) ∘ η_{GQ(A)} = id`, exactly.
pub fn algebra_triangle(a: &Arc<SCAlgebra>) -> Result<TriangleCheck, AdjunctionError> {
    let g = gabriel_vquiver(a)?;
    let kg = require_acyclic(&g)?;
    let eps = counit_on(&g, kg)?;
    let u = unit(&g.underlying)?;
    let gq_eps = gabriel_on_hom(&eps, &u.gabriel, &g)?;
    let composite = u.map.then(&gq_eps)?;
    if composite.is_identity() {
        return Ok(TriangleCheck::pass());
    }
    let n = composite.source().vertex_count();
    if let Some(v) = (0..n).find(|&v| composite.vertex_map()[v] != Some(v)) {
        return Ok(TriangleCheck::fail(format!("vertex {} is moved", v + 1)));
    }
    let bad = (0..n)
        .flat_map(|e| (0..n).map(move |f| (e, f)))
        .find(|&(e, f)| *composite.edge_map(e, f) != Matrix::identity(composite.source().dim(e, f)))
        .expect("a non-identity map differs somewhere");
    Ok(TriangleCheck::fail(format!("edge map ({}, {}) is not the identity", bad.0 + 1, bad.1 + 1)))
}

/// One row of a triangle identity report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangleCase {
    pub name: String,
    pub check: Result<TriangleCheck, AdjunctionError>,
}

/// Runs the Vquiver-side triangle on each Vquiver and the algebra-side one
/// on each algebra.
pub fn triangle_identities(
    vquivers: &[(String, Vquiver)],
    algebras: &[(String, Arc<SCAlgebra>)],
) -> Vec<TriangleCase> {
    let mut out = Vec::new();
    for (name, vq) in vquivers {
        out.push(TriangleCase {
            name: format!("vquiver {name}"),
            check: vquiver_triangle(vq),
        });
    }
    for (name, a) in algebras {
        out.push(TriangleCase {
            name: format!("algebra {name}"),
            check: algebra_triangle(a),
        });
    }
    out
}

/// `A ≅ k[GQ(A)] / ker ε_A`, with the kernel written as relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub gabriel: GabrielVquiver,
    pub path_algebra: Arc<SCAlgebra>,
    pub counit: AlgebraHom,
    pub kernel: Subspace,
    pub relations: RelationSet,
    pub quotient: Quotient,
    /// `k[GQ(A)] / ker ε_A → A`.
    pub isomorphism: AlgebraHom,
}

pub fn present_as_bound_quiver(a: &Arc<SCAlgebra>) -> Result<Presentation, AdjunctionError> {
    let gabriel = gabriel_vquiver(a)?;
    let kg = require_acyclic(&gabriel)?;
    let counit = counit_on(&gabriel, kg.clone())?;
    let kernel = counit.kernel();
    if !kg.is_two_sided_ideal(&kernel)? {
        return internal("counit kernel is not an ideal");
    }
    let m = a.radical().nilpotency_index();
    if !kernel.contained_in(&arrow_ideal_power(&kg, 2)?)? || !arrow_ideal_power(&kg, m)?.contained_in(&kernel)? {
        return internal("counit kernel is not admissible");
    }
    let quotient = quotient_algebra(&kg, &kernel)?;
    let images: Vec<Vector> = quotient.representatives().iter().map(|r| counit.apply(r)).collect();
    let isomorphism = AlgebraHom::from_images(quotient.algebra.clone(), a.clone(), &images)?;
    if !isomorphism.is_isomorphism() {
        return internal("quotient by the counit kernel is not isomorphic to the algebra");
    }
    let pb = kg.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let relations: Vec<Relation> = kernel
        .basis()
        .iter()
        .map(|v| {
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (c.clone(), pb.paths[i].clone()))
                .collect()
        })
        .collect();
    let longest = pb.quiver.longest_path_len().unwrap_or(0);
    let relations = RelationSet::new(pb.quiver.clone(), relations, longest.max(1))?;
    Ok(Presentation {
        gabriel,
        path_algebra: kg,
        counit,
        kernel,
        relations,
        quotient,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{diagonal_algebra, triangular_dual_numbers, truncated_poly, upper_triangular};
    use crate::bound::{bound_algebra, check_admissible};
    use crate::linalg::zero_vector;
    use crate::quiver::Quiver;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn arc(a: SCAlgebra) -> Arc<SCAlgebra> {
        Arc::new(a)
    }

    /// `x ↦ p(x)` on `Q[x]/(x^m)`, given `p` with zero constant term.
    fn poly_endo(a: &Arc<SCAlgebra>, p: &[i64]) -> AlgebraHom {
        let m = a.dim();
        let mut x_image = zero_vector(m);
        for (k, &c) in p.iter().enumerate() {
            if k < m {
                x_image[k] = int(c);
            }
        }
        let images: Vec<Vector> = (0..m).map(|k| a.power(&x_image, k)).collect();
        AlgebraHom::from_images(a.clone(), a.clone(), &images).unwrap()
    }

    fn a3_modulo_long_path() -> Arc<SCAlgebra> {
        let q = Quiver::linear(3);
        let r = RelationSet::monomial(q, &[&["a1", "a2"]], 2).unwrap();
        bound_algebra(&r).unwrap().algebra
    }

    #[test]
    fn depth_one_on_truncated_polynomials() {
        let a = arc(truncated_poly(3).unwrap());
        let id = AlgebraHom::identity(a.clone());
        let shear = poly_endo(&a, &[0, 1, 1]);
        let double = poly_endo(&a, &[0, 2]);
        assert!(ndepth_equivalent(&id, &id, 5).unwrap());
        assert!(ndepth_equivalent(&id, &shear, 1).unwrap());
        // x^k - (x + x^2)^k has order > k, so the shear is equivalent at every depth
        assert!(ndepth_equivalent(&id, &shear, 4).unwrap());
        assert!(!ndepth_equivalent(&id, &double, 1).unwrap());
        assert_eq!(ndepth_failure(&id, &double, 1).unwrap(), Some(1));
        assert!(ndepth_equivalent(&id, &double, 0).unwrap());
    }

    #[test]
    fn endpoint_mismatch() {
        let a = arc(truncated_poly(3).unwrap());
        let b = arc(truncated_poly(2).unwrap());
        assert_eq!(
            ndepth_equivalent(&AlgebraHom::identity(a), &AlgebraHom::identity(b), 1).unwrap_err(),
            AdjunctionError::EndpointMismatch
        );
    }

    #[test]
    fn gabriel_of_truncated_polynomial_is_a_loop() {
        let g = gabriel_vquiver(&arc(truncated_poly(4).unwrap())).unwrap();
        assert_eq!(g.underlying.dim_matrix(), vec![vec![1]]);
        assert!(!g.underlying.is_acyclic());
        assert_eq!(
            present_as_bound_quiver(g.algebra()).unwrap_err(),
            AdjunctionError::CyclicGabriel
        );
    }

    #[test]
    fn gabriel_of_mixed_algebra() {
        let a = arc(triangular_dual_numbers());
        let g = gabriel_vquiver(&a).unwrap();
        let dims = g.underlying.dim_matrix();
        // the vertex with the loop is the one receiving the other edge
        let looped = (0..2).find(|&v| dims[v][v] == 1).unwrap();
        let other = 1 - looped;
        assert_eq!(dims[other][looped], 1);
        assert_eq!(dims[other][other], 0);
        assert_eq!(dims[looped][other], 0);
        let e1 = unit_vector(a.dim(), a.label_index("e1").unwrap());
        assert_eq!(g.orbit_of(&e1), Some(Some(other)));
    }

    #[test]
    fn gabriel_of_upper_triangular_is_linear() {
        let g = gabriel_vquiver(&arc(upper_triangular(3).unwrap())).unwrap();
        assert_eq!(g.underlying.dim_matrix(), vec![vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
    }

    #[test]
    fn gabriel_is_independent_of_the_lift() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for a in [arc(upper_triangular(3).unwrap()), arc(triangular_dual_numbers()), a3_modulo_long_path()] {
            let base = gabriel_vquiver(&a).unwrap();
            let mut u = a.unit().to_vec();
            for b in a.radical().radical().basis() {
                add_scaled(&mut u, &int(rng.gen_range(-4..=4)), b);
            }
            let twisted = base.idempotents().conjugate(&a, &u).unwrap();
            let other = gabriel_vquiver_with(&a, twisted).unwrap();
            assert_eq!(other.orbit_keys(), base.orbit_keys());
            assert_eq!(other.underlying.dim_matrix(), base.underlying.dim_matrix());
        }
    }

    #[test]
    fn gabriel_on_identity_and_projection() {
        let a = arc(upper_triangular(3).unwrap());
        let g = gabriel_vquiver(&a).unwrap();
        let id = gabriel_on_hom(&AlgebraHom::identity(a), &g, &g).unwrap();
        assert!(id.is_identity());

        let big = arc(truncated_poly(3).unwrap());
        let small = arc(truncated_poly(2).unwrap());
        let proj = AlgebraHom::from_images(
            big.clone(),
            small.clone(),
            &[unit_vector(2, 0), unit_vector(2, 1), zero_vector(2)],
        )
        .unwrap();
        let map = gabriel_on_hom(&proj, &gabriel_vquiver(&big).unwrap(), &gabriel_vquiver(&small).unwrap()).unwrap();
        assert_eq!(map.vertex_map(), &[Some(0)]);
        assert_eq!(map.edge_map(0, 0).rank(), 1);
    }

    #[test]
    fn gabriel_of_killing_the_arrow() {
        let q = Quiver::from_strs(&["1", "2"], &[("h", "1", "2")]).unwrap();
        let kq = arc(q.path_algebra().unwrap());
        let semisimple = arc(diagonal_algebra(2).unwrap());
        let h = kq.label_index("h").unwrap();
        let images: Vec<Vector> = (0..3)
            .map(|i| if i == h { zero_vector(2) } else { unit_vector(2, kq.path_basis().unwrap().paths[i].start) })
            .collect();
        let proj = AlgebraHom::from_images(kq.clone(), semisimple.clone(), &images).unwrap();
        let gs = gabriel_vquiver(&kq).unwrap();
        let gt = gabriel_vquiver(&semisimple).unwrap();
        let map = gabriel_on_hom(&proj, &gs, &gt).unwrap();
        assert!(map.is_surjective());
        assert!(map.vertex_map().iter().all(Option::is_some));
        assert_eq!(map.edge_map(0, 1).shape(), (0, 1));
    }

    #[test]
    fn unit_is_an_isomorphism() {
        for dims in [vec![], vec![("a", "b", 1)], vec![("a", "b", 1), ("b", "c", 1)], vec![("a", "b", 2), ("a", "c", 1)]] {
            let vq = Vquiver::from_dims(["a", "b", "c"], &dims).unwrap();
            let u = unit(&vq).unwrap();
            assert!(u.map.is_isomorphism());
            assert_eq!(u.gabriel.underlying.total_edge_dim(), vq.total_edge_dim());
        }
        let looped = Vquiver::from_dims(["a"], &[("a", "a", 1)]).unwrap();
        assert!(unit(&looped).is_err());
    }

    #[test]
    fn counit_examples() {
        let d = counit(&arc(diagonal_algebra(3).unwrap())).unwrap();
        assert!(d.class.representative.is_isomorphism());
        let u2 = counit(&arc(upper_triangular(2).unwrap())).unwrap();
        assert!(u2.class.representative.is_isomorphism());
        assert_eq!(u2.path_algebra.dim(), 3);
        let c = counit(&a3_modulo_long_path()).unwrap();
        assert_eq!(c.path_algebra.dim(), 6);
        assert_eq!(c.class.representative.kernel().dim(), 1);
        assert!(c.class.representative.is_surjective());
    }

    #[test]
    fn counit_is_independent_of_the_section() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for a in [arc(upper_triangular(4).unwrap()), a3_modulo_long_path()] {
            let c = counit(&a).unwrap();
            for _ in 0..3 {
                let other = counit_with_random_section(&c.gabriel, c.path_algebra.clone(), &mut rng).unwrap();
                assert!(ndepth_equivalent(&c.class.representative, &other, 1).unwrap());
            }
        }
    }

    #[test]
    fn triangles_pass() {
        let vqs = vec![
            ("edge".to_string(), Vquiver::from_dims(["1", "2"], &[("1", "2", 1)]).unwrap()),
            (
                "double".to_string(),
                Vquiver::from_dims(["1", "2", "3"], &[("1", "2", 2), ("2", "3", 1)]).unwrap(),
            ),
        ];
        let algebras = vec![
            ("U3".to_string(), arc(upper_triangular(3).unwrap())),
            ("Q2".to_string(), arc(diagonal_algebra(2).unwrap())),
            ("A3/rel".to_string(), a3_modulo_long_path()),
        ];
        for case in triangle_identities(&vqs, &algebras) {
            assert_eq!(case.check, Ok(TriangleCheck::pass()), "{}", case.name);
        }
    }

    #[test]
    fn presentation_of_hereditary_and_bound_algebras() {
        let p = present_as_bound_quiver(&arc(upper_triangular(3).unwrap())).unwrap();
        assert_eq!((p.path_algebra.dim(), p.kernel.dim()), (6, 0));
        let p = present_as_bound_quiver(&a3_modulo_long_path()).unwrap();
        assert_eq!(p.kernel.dim(), 1);
        assert_eq!(p.relations.relations().len(), 1);
        assert_eq!(p.relations.relations()[0][0].1.len(), 2);
        assert!(check_admissible(&p.relations).unwrap().admissible());
    }
}
