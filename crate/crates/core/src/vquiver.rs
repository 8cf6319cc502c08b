//! Vquivers: a finite vertex set plus a base point `*`, with a vector space
//! attached to every ordered pair of ordinary vertices. Maps between them,
//! acyclicity, and the path algebra functor `k[-]` built as a tensor algebra.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{diagonal_algebra, AlgebraError, AlgebraHom, PathBasis, SCAlgebra};
use crate::linalg::{add_scaled, unit_vector, zero_vector, LinalgError, Matrix, Scalar, Vector};
use crate::quiver::{dedup_labels, Path, Quiver, QuiverError};

/// The label reserved for the base point.
pub const BASE_POINT: &str = "*";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VquiverError {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("`*` is the base point; edge spaces touching it must be zero")]
    StarSpace,
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate edge label `{0}`")]
    DuplicateEdgeLabel(String),
    #[error("edge space ({0}, {1}) declared twice")]
    DuplicateSpace(String, String),
    #[error("edge space ({e}, {f}) has {labels} labels for dimension {dim}")]
    LabelCount { e: String, f: String, dim: usize, labels: usize },
    #[error("Vquiver has an oriented cycle; its path algebra is infinite-dimensional")]
    Cyclic,
    #[error("vertex map does not restrict to a bijection onto the target vertices")]
    NotBijective,
    #[error("edge map ({0}, {1}) has the wrong shape")]
    EdgeMapShape(String, String),
    #[error("map is not surjective on edge space ({0}, {1})")]
    NotSurjective(String, String),
    #[error("maps do not compose: target of the first is not the source of the second")]
    NotComposable,
    #[error("φ1 is not a bimodule map over the vertex algebras")]
    NotBimodule,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vquiver {
    vertices: Vec<String>,
    /// `edges[e][f]` are the basis labels of the space at `(e, f)`.
    edges: Vec<Vec<Vec<String>>>,
}

impl Vquiver {
    /// Spaces are `(e, f, labels)`; pairs not listed are zero. Using `*` as
    /// an endpoint with a nonzero space is an error.
    pub fn new<V>(vertices: V, spaces: Vec<(String, String, Vec<String>)>) -> Result<Self, VquiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if v == BASE_POINT {
                return Err(VquiverError::StarSpace);
            }
            if !seen.insert(v.as_str()) {
                return Err(VquiverError::DuplicateVertex(v.clone()));
            }
        }
        let n = vertices.len();
        let mut edges = vec![vec![Vec::new(); n]; n];
        let mut declared = HashSet::new();
        let mut labels = HashSet::new();
        let index = |v: &str| vertices.iter().position(|w| w == v);
        for (e, f, ls) in spaces {
            if e == BASE_POINT || f == BASE_POINT {
                if ls.is_empty() {
                    continue;
                }
                return Err(VquiverError::StarSpace);
            }
            let i = index(&e).ok_or_else(|| VquiverError::UnknownVertex(e.clone()))?;
            let j = index(&f).ok_or_else(|| VquiverError::UnknownVertex(f.clone()))?;
            if !declared.insert((i, j)) {
                return Err(VquiverError::DuplicateSpace(e, f));
            }
            for l in &ls {
                if !labels.insert(l.clone()) {
                    return Err(VquiverError::DuplicateEdgeLabel(l.clone()));
                }
            }
            edges[i][j] = ls;
        }
        Ok(Self { vertices, edges })
    }

    /// Dimensions only; basis labels are generated as `e_f_k`.
    pub fn from_dims<V>(vertices: V, dims: &[(&str, &str, usize)]) -> Result<Self, VquiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
    {
        let spaces = dims
            .iter()
            .map(|&(e, f, d)| (e.to_string(), f.to_string(), default_labels(e, f, d)))
            .collect();
        Self::new(vertices, spaces)
    }

    /// One vertex per quiver vertex, `d_{e,f}` = number of arrows `e → f`,
    /// labelled by the arrows.
    pub fn from_quiver(q: &Quiver) -> Self {
        let n = q.vertex_count();
        let mut edges = vec![vec![Vec::new(); n]; n];
        for a in q.arrows() {
            edges[a.source][a.target].push(a.label.clone());
        }
        Self {
            vertices: q.vertices().to_vec(),
            edges,
        }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn dim(&self, e: usize, f: usize) -> usize {
        self.edges[e][f].len()
    }

    pub fn edge_labels(&self, e: usize, f: usize) -> &[String] {
        &self.edges[e][f]
    }

    /// `d_{e,f}` as a matrix.
    pub fn dim_matrix(&self) -> Vec<Vec<usize>> {
        self.edges.iter().map(|row| row.iter().map(Vec::len).collect()).collect()
    }

    pub fn total_edge_dim(&self) -> usize {
        self.edges.iter().flatten().map(Vec::len).sum()
    }

    /// The multigraph with `d_{e,f}` arrows `e → f`, pairs in row-major order.
    pub fn to_quiver(&self) -> Quiver {
        let arrows = self.edge_ids().into_iter().map(|(e, f, k)| {
            (
                self.edges[e][f][k].clone(),
                self.vertices[e].clone(),
                self.vertices[f].clone(),
            )
        });
        Quiver::new(self.vertices.clone(), arrows).expect("edge labels are unique")
    }

    /// Every edge basis element as `(e, f, k)`, in the arrow order of
    /// `to_quiver`.
    pub fn edge_ids(&self) -> Vec<(usize, usize, usize)> {
        let n = self.vertex_count();
        let mut out = Vec::new();
        for e in 0..n {
            for f in 0..n {
                for k in 0..self.dim(e, f) {
                    out.push((e, f, k));
                }
            }
        }
        out
    }

    /// `Σ_VQ = Q^n` with orthogonal idempotents labelled by the vertices.
    pub fn sigma(&self) -> Result<SCAlgebra, VquiverError> {
        Ok(diagonal_algebra(self.vertex_count().max(1))?.relabelled(if self.vertices.is_empty() {
            vec!["e".into()]
        } else {
            self.vertices.clone()
        })?)
    }

    /// Acyclic when the digraph `e → f` (for `d_{e,f} > 0`) has no cycle;
    /// the index is the longest chain plus one.
    pub fn acyclicity(&self) -> (bool, Option<usize>) {
        match self.to_quiver().longest_path_len() {
            Some(l) => (true, Some(l + 1)),
            None => (false, None),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.acyclicity().0
    }
}

pub(crate) fn default_labels(e: &str, f: &str, d: usize) -> Vec<String> {
    (1..=d).map(|k| format!("{e}_{f}_{k}")).collect()
}

/// A composable word of edge basis elements, `(e, f, k)` each.
type Word = Vec<(usize, usize, usize)>;

/// `k[VQ] = T(Σ, VQ_1)`: vertex idempotents and composable tensor words,
/// graded by length. The basis order and labels agree with the path algebra
/// of `to_quiver()`.
pub fn path_algebra_vq(vq: &Vquiver) -> Result<SCAlgebra, VquiverError> {
    let (acyclic, index) = vq.acyclicity();
    if !acyclic {
        return Err(VquiverError::Cyclic);
    }
    let max_len = index.expect("acyclic has an index") - 1;
    let n = vq.vertex_count();
    let label_of = |w: &Word| -> Vec<&str> { w.iter().map(|&(e, f, k)| vq.edges[e][f][k].as_str()).collect() };

    // Degree 0: vertices; degree l + 1: extend each degree-l word on the right.
    let mut words: Vec<(usize, Word)> = (0..n).map(|v| (v, Vec::new())).collect();
    let mut layer: Vec<(usize, Word)> = words.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for (start, w) in &layer {
            let end = w.last().map_or(*start, |&(_, f, _)| f);
            for g in 0..n {
                for k in 0..vq.dim(end, g) {
                    let mut longer = w.clone();
                    longer.push((end, g, k));
                    next.push((*start, longer));
                }
            }
        }
        next.sort_by(|a, b| label_of(&a.1).cmp(&label_of(&b.1)));
        words.extend(next.iter().cloned());
        layer = next;
    }

    let dim = words.len();
    let lookup: HashMap<(usize, Word), usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let end = |(s, w): &(usize, Word)| w.last().map_or(*s, |&(_, f, _)| f);
    let mut products = vec![Vec::new(); dim * dim];
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            if end(u) != v.0 {
                continue;
            }
            let mut w = u.1.clone();
            w.extend(v.1.iter().copied());
            if let Some(&k) = lookup.get(&(u.0, w)) {
                products[i * dim + j].push((k, Scalar::one()));
            }
        }
    }
    let mut unit = zero_vector(dim);
    for v in 0..n {
        unit[v] = Scalar::one();
    }
    let mut labels: Vec<String> = words
        .iter()
        .map(|(s, w)| {
            if w.is_empty() {
                format!("p{}", vq.vertices[*s])
            } else {
                label_of(w).join(".")
            }
        })
        .collect();
    dedup_labels(&mut labels);

    let quiver = vq.to_quiver();
    let arrow_index: HashMap<(usize, usize, usize), usize> =
        vq.edge_ids().into_iter().enumerate().map(|(i, id)| (id, i)).collect();
    let paths = words
        .iter()
        .map(|(s, w)| Path {
            start: *s,
            arrows: w.iter().map(|id| arrow_index[id]).collect(),
        })
        .collect();
    let basis = PathBasis { quiver, paths };
    Ok(SCAlgebra::from_sparse_unchecked(labels, products, unit).with_path_basis(Arc::new(basis)))
}

/// A structured map `VQ → VR`: a pointed vertex map and one linear map per
/// pair of source vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VquiverMap {
    source: Vquiver,
    target: Vquiver,
    /// `None` is the base point.
    vertex_map: Vec<Option<usize>>,
    /// `edge_maps[e][f]`: `VQ_{e,f} → VR_{ρe,ρf}`, zero rows when either end
    /// goes to `*`.
    edge_maps: Vec<Vec<Matrix>>,
    surjective: bool,
}

impl VquiverMap {
    /// Unlisted pairs get the zero map.
    pub fn new(
        source: Vquiver,
        target: Vquiver,
        vertex_map: Vec<Option<usize>>,
        edge_maps: Vec<((usize, usize), Matrix)>,
    ) -> Result<Self, VquiverError> {
        let (n, m) = (source.vertex_count(), target.vertex_count());
        if vertex_map.len() != n || vertex_map.iter().flatten().any(|&t| t >= m) {
            return Err(VquiverError::NotBijective);
        }
        let hit: Vec<usize> = vertex_map.iter().flatten().copied().collect();
        let distinct: HashSet<usize> = hit.iter().copied().collect();
        if hit.len() != distinct.len() || distinct.len() != m {
            return Err(VquiverError::NotBijective);
        }
        let target_dim = |e: usize, f: usize| match (vertex_map[e], vertex_map[f]) {
            (Some(a), Some(b)) => target.dim(a, b),
            _ => 0,
        };
        let mut maps: Vec<Vec<Matrix>> = (0..n)
            .map(|e| (0..n).map(|f| Matrix::zeros(target_dim(e, f), source.dim(e, f))).collect())
            .collect();
        for ((e, f), mat) in edge_maps {
            if e >= n || f >= n || mat.shape() != (target_dim(e, f), source.dim(e, f)) {
                let name = |v: usize| source.vertices.get(v).cloned().unwrap_or_else(|| v.to_string());
                return Err(VquiverError::EdgeMapShape(name(e), name(f)));
            }
            maps[e][f] = mat;
        }
        let surjective = (0..n).all(|e| (0..n).all(|f| maps[e][f].rank() == target_dim(e, f)));
        Ok(Self {
            source,
            target,
            vertex_map,
            edge_maps: maps,
            surjective,
        })
    }

    pub fn identity(vq: &Vquiver) -> Self {
        let n = vq.vertex_count();
        let edge_maps = (0..n)
            .flat_map(|e| (0..n).map(move |f| ((e, f), Matrix::identity(vq.dim(e, f)))))
            .collect();
        Self::new(vq.clone(), vq.clone(), (0..n).map(Some).collect(), edge_maps).expect("identity is well-formed")
    }

    pub fn source(&self) -> &Vquiver {
        &self.source
    }

    pub fn target(&self) -> &Vquiver {
        &self.target
    }

    pub fn vertex_map(&self) -> &[Option<usize>] {
        &self.vertex_map
    }

    pub fn edge_map(&self, e: usize, f: usize) -> &Matrix {
        &self.edge_maps[e][f]
    }

    pub fn is_surjective(&self) -> bool {
        self.surjective
    }

    /// No vertex goes to `*` and every edge map is invertible.
    pub fn is_isomorphism(&self) -> bool {
        self.vertex_map.iter().all(Option::is_some)
            && self
                .edge_maps
                .iter()
                .flatten()
                .all(|m| m.is_square() && m.rank() == m.rows())
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && *self == Self::identity(&self.source)
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &VquiverMap) -> Result<VquiverMap, VquiverError> {
        if self.target != next.source {
            return Err(VquiverError::NotComposable);
        }
        let n = self.source.vertex_count();
        let vertex_map: Vec<Option<usize>> =
            self.vertex_map.iter().map(|v| v.and_then(|t| next.vertex_map[t])).collect();
        let mut edge_maps = Vec::new();
        for e in 0..n {
            for f in 0..n {
                if let (Some(a), Some(b)) = (self.vertex_map[e], self.vertex_map[f]) {
                    if vertex_map[e].is_some() && vertex_map[f].is_some() {
                        edge_maps.push(((e, f), &next.edge_maps[a][b] * &self.edge_maps[e][f]));
                    }
                }
            }
        }
        Self::new(self.source.clone(), next.target.clone(), vertex_map, edge_maps)
    }
}

/// `k[ρ]` with freshly built path algebras on both sides.
pub fn induced_hom(rho: &VquiverMap) -> Result<AlgebraHom, VquiverError> {
    let source = Arc::new(path_algebra_vq(&rho.source)?);
    let target = Arc::new(path_algebra_vq(&rho.target)?);
    induced_hom_on(rho, source, target)
}

/// `k[ρ]: k[VQ] → k[VR]` by the universal property of the tensor algebra:
/// `φ0(e) = ρ0(e)` (zero when `ρ0(e) = *`), `φ1 = ⊕ ρ_{e,f}`, extended
/// multiplicatively to words.
pub fn induced_hom_on(
    rho: &VquiverMap,
    source: Arc<SCAlgebra>,
    target: Arc<SCAlgebra>,
) -> Result<AlgebraHom, VquiverError> {
    if let Some((e, f)) = first_non_surjective(rho) {
        return Err(VquiverError::NotSurjective(
            rho.source.vertices[e].clone(),
            rho.source.vertices[f].clone(),
        ));
    }
    let tgt_pb = target.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let src_ids = rho.source.edge_ids();
    let tgt_ids = rho.target.edge_ids();
    let tgt_arrow: HashMap<(usize, usize, usize), usize> =
        tgt_ids.iter().copied().enumerate().map(|(i, id)| (id, i)).collect();
    let dt = target.dim();

    let phi0 = |v: usize| -> Vector {
        match rho.vertex_map[v] {
            Some(t) => unit_vector(dt, tgt_pb.vertex_element(t).expect("vertex in basis")),
            None => zero_vector(dt),
        }
    };
    let phi1 = |(e, f, k): (usize, usize, usize)| -> Vector {
        let mut out = zero_vector(dt);
        if let (Some(a), Some(b)) = (rho.vertex_map[e], rho.vertex_map[f]) {
            let m = &rho.edge_maps[e][f];
            for r in 0..m.rows() {
                let c = m.get(r, k);
                if !c.is_zero() {
                    let arrow = tgt_arrow[&(a, b, r)];
                    let idx = tgt_pb.arrow_element(arrow).expect("arrow in basis");
                    add_scaled(&mut out, c, &unit_vector(dt, idx));
                }
            }
        }
        out
    };

    let n = rho.source.vertex_count();
    let vertex_images: Vec<Vector> = (0..n).map(phi0).collect();
    let edge_images: Vec<Vector> = src_ids.iter().map(|&id| phi1(id)).collect();
    tensor_extension(source, target, &vertex_images, &edge_images)
}

/// The unique algebra map out of a path algebra `k[VQ]` with the given
/// images of the vertex idempotents and of the edge basis (arrow order of
/// the path basis). Checks that `φ1` is a bimodule map over `φ0`.
pub fn tensor_extension(
    source: Arc<SCAlgebra>,
    target: Arc<SCAlgebra>,
    vertex_images: &[Vector],
    edge_images: &[Vector],
) -> Result<AlgebraHom, VquiverError> {
    let pb = source.path_basis().ok_or(AlgebraError::NoPathBasis)?;
    let q = &pb.quiver;
    if vertex_images.len() != q.vertex_count() || edge_images.len() != q.arrow_count() {
        return Err(AlgebraError::InvalidParameter("wrong number of generator images".into()).into());
    }
    let dt = target.dim();
    for (arrow, image) in q.arrows().iter().zip(edge_images) {
        for (g, pg) in vertex_images.iter().enumerate() {
            for (h, ph) in vertex_images.iter().enumerate() {
                let expected = if g == arrow.source && h == arrow.target {
                    image.clone()
                } else {
                    zero_vector(dt)
                };
                if target.mul(&target.mul(pg, image), ph) != expected {
                    return Err(VquiverError::NotBimodule);
                }
            }
        }
    }
    let columns: Vec<Vector> = pb
        .paths
        .iter()
        .map(|p| {
            if p.is_trivial() {
                vertex_images[p.start].clone()
            } else {
                target.mul_all(p.arrows.iter().map(|&a| &edge_images[a]))
            }
        })
        .collect();
    Ok(AlgebraHom::from_images(source, target, &columns)?)
}

fn first_non_surjective(rho: &VquiverMap) -> Option<(usize, usize)> {
    let n = rho.source.vertex_count();
    (0..n).flat_map(|e| (0..n).map(move |f| (e, f))).find(|&(e, f)| {
        let target_dim = match (rho.vertex_map[e], rho.vertex_map[f]) {
            (Some(a), Some(b)) => rho.target.dim(a, b),
            _ => 0,
        };
        rho.edge_maps[e][f].rank() != target_dim
    })
}
