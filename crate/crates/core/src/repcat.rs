//! Quiver representations, modules over structure-constant algebras, and the
//! dictionary between representations of `Q` and modules over `kQ/I`.
//!
//! Paths multiply left to right, so a representation `(V_i, V_h)` is a
//! right module: `v·p` for `v ∈ V_{s(p)}` is `V_{a_k} ∘ … ∘ V_{a_1}(v)`.
//! Module actions are stored as matrices acting on column vectors.

use std::sync::Arc;

use thiserror::Error;

use crate::algebra::{AlgebraError, SCAlgebra};
use crate::bound::{bound_algebra, BoundError, RelationSet};
use crate::linalg::{LinalgError, Matrix, Subspace, Vector};
use crate::quiver::{Path, Quiver, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("vertex count {found} differs from quiver ({expected})")]
    VertexCount { expected: usize, found: usize },
    #[error("arrow count {found} differs from quiver ({expected})")]
    ArrowCount { expected: usize, found: usize },
    #[error("map for arrow `{arrow}` has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MapShape {
        arrow: String,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("action of basis element {index} is {rows}x{cols}, expected {dim}x{dim}")]
    ActionShape { index: usize, rows: usize, cols: usize, dim: usize },
    #[error("action count {found} differs from algebra dimension {expected}")]
    ActionCount { expected: usize, found: usize },
    #[error("the unit does not act as the identity")]
    NotUnital,
    #[error("action is not multiplicative on basis pair ({0}, {1})")]
    NotMultiplicative(usize, usize),
    #[error("modules live over different algebras or sides")]
    AlgebraMismatch,
    #[error("morphism has shape {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    MorphismShape {
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
    #[error("relation {0} does not act as zero on the representation")]
    RelationViolated(usize),
    #[error("conversion needs a right module over an algebra with path bookkeeping")]
    NotAPathModule,
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A representation: one space per vertex, one linear map per arrow.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverRep {
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl QuiverRep {
    /// `maps[h]` has shape `dim V_{t(h)} × dim V_{s(h)}`.
    pub fn new(quiver: Quiver, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self, RepError> {
        if dims.len() != quiver.vertex_count() {
            return Err(RepError::VertexCount {
                expected: quiver.vertex_count(),
                found: dims.len(),
            });
        }
        if maps.len() != quiver.arrow_count() {
            return Err(RepError::ArrowCount {
                expected: quiver.arrow_count(),
                found: maps.len(),
            });
        }
        for (a, m) in quiver.arrows().iter().zip(&maps) {
            let expected = (dims[a.target], dims[a.source]);
            if m.shape() != expected {
                return Err(RepError::MapShape {
                    arrow: a.label.clone(),
                    rows: m.rows(),
                    cols: m.cols(),
                    expected_rows: expected.0,
                    expected_cols: expected.1,
                });
            }
        }
        Ok(Self { quiver, dims, maps })
    }

    pub fn zero(quiver: Quiver) -> Self {
        let dims = vec![0; quiver.vertex_count()];
        let maps = vec![Matrix::zeros(0, 0); quiver.arrow_count()];
        Self { quiver, dims, maps }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    fn offset(&self, vertex: usize) -> usize {
        self.dims[..vertex].iter().sum()
    }

    /// `V_{a_k} ∘ … ∘ V_{a_1}`; the identity for a trivial path.
    pub fn path_map(&self, p: &Path) -> Matrix {
        p.arrows
            .iter()
            .fold(Matrix::identity(self.dims[p.start]), |acc, &a| &self.maps[a] * &acc)
    }

    /// The path map placed in block `(t(p), s(p))` of `End(⊕ V_i)`.
    fn path_action(&self, p: &Path) -> Matrix {
        let n = self.total_dim();
        let mut m = Matrix::zeros(n, n);
        let end = p.end(&self.quiver);
        m.set_block(self.offset(end), self.offset(p.start), &self.path_map(p));
        m
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// `ρ(a)ρ(b) = ρ(ab)`.
    Left,
    /// `ρ(b)ρ(a) = ρ(ab)`: column vectors `v` with `v·a = ρ(a)v`.
    Right,
}

#[derive(Clone, Debug)]
pub struct AlgebraModule {
    algebra: Arc<SCAlgebra>,
    side: Side,
    dim: usize,
    action: Vec<Matrix>,
}

impl PartialEq for AlgebraModule {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side && self.action == other.action && *self.algebra == *other.algebra
    }
}

impl AlgebraModule {
    /// Validates that `ρ` is a unital (anti-)homomorphism `A → End(V)`.
    pub fn new(algebra: Arc<SCAlgebra>, side: Side, dim: usize, action: Vec<Matrix>) -> Result<Self, RepError> {
        let m = Self {
            algebra,
            side,
            dim,
            action,
        };
        m.validate()?;
        Ok(m)
    }

    pub fn validate(&self) -> Result<(), RepError> {
        let a = &self.algebra;
        if self.action.len() != a.dim() {
            return Err(RepError::ActionCount {
                expected: a.dim(),
                found: self.action.len(),
            });
        }
        for (i, m) in self.action.iter().enumerate() {
            if m.shape() != (self.dim, self.dim) {
                return Err(RepError::ActionShape {
                    index: i,
                    rows: m.rows(),
                    cols: m.cols(),
                    dim: self.dim,
                });
            }
        }
        if self.act(a.unit()) != Matrix::identity(self.dim) {
            return Err(RepError::NotUnital);
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let composite = match self.side {
                    Side::Left => &self.action[i] * &self.action[j],
                    Side::Right => &self.action[j] * &self.action[i],
                };
                if composite != self.act(&a.mul_basis(i, j)) {
                    return Err(RepError::NotMultiplicative(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<SCAlgebra>, side: Side) -> Self {
        let action = vec![Matrix::zeros(0, 0); algebra.dim()];
        Self {
            algebra,
            side,
            dim: 0,
            action,
        }
    }

    /// `A` acting on itself by left multiplication.
    pub fn left_regular(algebra: Arc<SCAlgebra>) -> Self {
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.left_mult_matrix(&algebra.basis_vector(i))).collect();
        Self {
            algebra,
            side: Side::Left,
            dim: n,
            action,
        }
    }

    /// `A` acting on itself by right multiplication.
    pub fn right_regular(algebra: Arc<SCAlgebra>) -> Self {
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.right_mult_matrix(&algebra.basis_vector(i))).collect();
        Self {
            algebra,
            side: Side::Right,
            dim: n,
            action,
        }
    }

    pub fn algebra(&self) -> &Arc<SCAlgebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// `ρ(x)` for an arbitrary element.
    pub fn act(&self, x: &[crate::linalg::Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !num_traits::Zero::is_zero(c) {
                out = &out + &m.scale(c);
            }
        }
        out
    }
}

/// `φ ρ_1(e_i) = ρ_2(e_i) φ` for every basis element.
pub fn check_rep_morphism(m1: &AlgebraModule, m2: &AlgebraModule, phi: &Matrix) -> Result<bool, RepError> {
    if m1.side != m2.side || *m1.algebra != *m2.algebra {
        return Err(RepError::AlgebraMismatch);
    }
    if phi.shape() != (m2.dim, m1.dim) {
        return Err(RepError::MorphismShape {
            rows: phi.rows(),
            cols: phi.cols(),
            expected_rows: m2.dim,
            expected_cols: m1.dim,
        });
    }
    Ok(m1
        .action
        .iter()
        .zip(&m2.action)
        .all(|(r1, r2)| phi * r1 == r2 * phi))
}

/// The module over `kQ` (acyclic `Q`, no bound) or over `kQ/I` (bound
/// given) attached to a representation. Relations are checked first.
pub fn rep_to_module(rep: &QuiverRep, bound: Option<&RelationSet>) -> Result<AlgebraModule, RepError> {
    let algebra = match bound {
        None => Arc::new(rep.quiver.path_algebra()?),
        Some(rs) => {
            if rs.quiver() != rep.quiver() {
                return Err(RepError::AlgebraMismatch);
            }
            for (i, rel) in rs.relations().iter().enumerate() {
                let n = rep.total_dim();
                let mut total = Matrix::zeros(n, n);
                for (c, p) in rel {
                    total = &total + &rep.path_action(p).scale(c);
                }
                if !total.is_zero() {
                    return Err(RepError::RelationViolated(i));
                }
            }
            bound_algebra(rs)?.algebra
        }
    };
    rep_to_module_over(rep, algebra)
}

/// The module over a given algebra whose basis elements are (classes of)
/// paths of the representation's quiver.
pub fn rep_to_module_over(rep: &QuiverRep, algebra: Arc<SCAlgebra>) -> Result<AlgebraModule, RepError> {
    let pb = algebra.path_basis().ok_or(RepError::NotAPathModule)?;
    if pb.quiver != rep.quiver {
        return Err(RepError::AlgebraMismatch);
    }
    let action = pb.paths.iter().map(|p| rep.path_action(p)).collect();
    let dim = rep.total_dim();
    AlgebraModule::new(algebra, Side::Right, dim, action)
}

/// A representation together with the isomorphism `⊕ V_i → M` that
/// identifies it with the module it came from.
#[derive(Clone, Debug)]
pub struct ModuleAsRep {
    pub rep: QuiverRep,
    /// Columns are the chosen bases of `V_1, V_2, …` in vertex order.
    pub embedding: Matrix,
}

/// `V_i = ρ(p_i) V` with its canonical basis, `V_h = ρ(h)` between them.
pub fn module_to_rep(m: &AlgebraModule) -> Result<ModuleAsRep, RepError> {
    let pb = m.algebra.path_basis().ok_or(RepError::NotAPathModule)?;
    if m.side != Side::Right {
        return Err(RepError::NotAPathModule);
    }
    let q = pb.quiver.clone();
    let mut spaces = Vec::with_capacity(q.vertex_count());
    for v in 0..q.vertex_count() {
        let k = pb.vertex_element(v).ok_or(RepError::NotAPathModule)?;
        spaces.push(Subspace::span(&m.action[k].columns(), m.dim)?);
    }
    let mut maps = Vec::with_capacity(q.arrow_count());
    for (h, arrow) in q.arrows().iter().enumerate() {
        let k = pb.arrow_element(h).ok_or(RepError::NotAPathModule)?;
        let (src, tgt) = (&spaces[arrow.source], &spaces[arrow.target]);
        let mut cols = Vec::with_capacity(src.dim());
        for b in src.basis() {
            let image = m.action[k].mul_vec(b);
            cols.push(tgt.coordinates(&image).ok_or_else(|| {
                AlgebraError::Internal(format!("arrow `{}` leaves its target space", arrow.label))
            })?);
        }
        maps.push(if cols.is_empty() {
            Matrix::zeros(tgt.dim(), 0)
        } else {
            Matrix::from_columns(&cols, tgt.dim())?
        });
    }
    let dims = spaces.iter().map(Subspace::dim).collect();
    let basis: Vec<Vector> = spaces.iter().flat_map(|s| s.basis().iter().cloned()).collect();
    let embedding = if basis.is_empty() {
        Matrix::zeros(m.dim, 0)
    } else {
        Matrix::from_columns(&basis, m.dim)?
    };
    Ok(ModuleAsRep {
        rep: QuiverRep::new(q, dims, maps)?,
        embedding,
    })
}

/// `Σ ρ(p_i) = id`, the block decomposition of a path module.
pub fn trivial_paths_sum_to_identity(m: &AlgebraModule) -> Result<bool, RepError> {
    let pb = m.algebra.path_basis().ok_or(RepError::NotAPathModule)?;
    let mut total = Matrix::zeros(m.dim, m.dim);
    for v in 0..pb.quiver.vertex_count() {
        let k = pb.vertex_element(v).ok_or(RepError::NotAPathModule)?;
        total = &total + &m.action[k];
    }
    Ok(total == Matrix::identity(m.dim))
}
