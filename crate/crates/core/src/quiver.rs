//! Finite quivers, their paths, and path algebras.
//!
//! Paths compose left to right: the product `u·v` of two paths is "first `u`,
//! then `v`" when `u` ends where `v` starts, and zero otherwise. With this
//! convention the arrow `h: 1 → 2` satisfies `p1·h = h = h·p2`.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::One;
use thiserror::Error;

use crate::algebra::{PathBasis, SCAlgebra};
use crate::linalg::{zero_vector, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow label `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` refers to undeclared vertex `{vertex}`")]
    DanglingArrow { arrow: String, vertex: String },
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("arrows `{0}` and `{1}` are not composable")]
    NotComposable(String, String),
    #[error("quiver has an oriented cycle; its path algebra is infinite-dimensional")]
    Cyclic,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A finite directed multigraph. Loops and parallel arrows are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// An oriented path: a start vertex and a composable arrow sequence, read
/// left to right. The empty sequence is the trivial path at `start`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    /// Validates labels and endpoints. Arrows are `(label, source, target)`.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Self, QuiverError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = HashSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let index: HashMap<&str, usize> =
            vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut labels = HashSet::new();
        let mut out = Vec::new();
        for (label, s, t) in arrows {
            if !labels.insert(label.clone()) {
                return Err(QuiverError::DuplicateArrow(label));
            }
            let lookup = |v: &str| {
                index.get(v).copied().ok_or_else(|| QuiverError::DanglingArrow {
                    arrow: label.clone(),
                    vertex: v.to_string(),
                })
            };
            let source = lookup(&s)?;
            let target = lookup(&t)?;
            out.push(Arrow {
                label,
                source,
                target,
            });
        }
        Ok(Self {
            vertices,
            arrows: out,
        })
    }

    /// Shorthand for tests and builders: arrows given as `(&str, &str, &str)`.
    pub fn from_strs(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, QuiverError> {
        Self::new(
            vertices.iter().copied(),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    /// The linear quiver `1 → 2 → … → n` with arrows `a1, …, a(n-1)`.
    pub fn linear(n: usize) -> Self {
        let vertices: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let arrows = (1..n).map(|i| (format!("a{i}"), i.to_string(), (i + 1).to_string()));
        Self::new(vertices, arrows).expect("linear quiver is well-formed")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Kahn's algorithm; a loop counts as a cycle.
    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    fn topological_order(&self) -> Option<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    queue.push_back(a.target);
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Length of the longest path, or `None` for a cyclic quiver.
    pub fn longest_path_len(&self) -> Option<usize> {
        let order = self.topological_order()?;
        let mut longest = vec![0usize; self.vertices.len()];
        for v in order {
            for a in self.arrows.iter().filter(|a| a.source == v) {
                longest[a.target] = longest[a.target].max(longest[v] + 1);
            }
        }
        Some(longest.into_iter().max().unwrap_or(0))
    }

    pub fn trivial_path(&self, vertex: usize) -> Path {
        Path {
            start: vertex,
            arrows: Vec::new(),
        }
    }

    /// The path along the named arrows, checking composability.
    pub fn path_from_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<Path, QuiverError> {
        let mut arrows = Vec::with_capacity(labels.len());
        for l in labels {
            let l = l.as_ref();
            arrows.push(self.arrow_index(l).ok_or_else(|| QuiverError::UnknownArrow(l.to_string()))?);
        }
        let Some(&first) = arrows.first() else {
            return Err(QuiverError::UnknownArrow(String::new()));
        };
        for w in arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(QuiverError::NotComposable(
                    self.arrows[w[0]].label.clone(),
                    self.arrows[w[1]].label.clone(),
                ));
            }
        }
        Ok(Path {
            start: self.arrows[first].source,
            arrows,
        })
    }

    /// Endpoints exist and consecutive arrows compose.
    pub fn check_path(&self, p: &Path) -> Result<(), QuiverError> {
        if p.start >= self.vertices.len() {
            return Err(QuiverError::UnknownVertex(p.start.to_string()));
        }
        if let Some(&bad) = p.arrows.iter().find(|&&a| a >= self.arrows.len()) {
            return Err(QuiverError::UnknownArrow(bad.to_string()));
        }
        if let Some(&first) = p.arrows.first() {
            if self.arrows[first].source != p.start {
                return Err(QuiverError::NotComposable(
                    format!("p{}", self.vertices[p.start]),
                    self.arrows[first].label.clone(),
                ));
            }
        }
        for w in p.arrows.windows(2) {
            if self.arrows[w[0]].target != self.arrows[w[1]].source {
                return Err(QuiverError::NotComposable(
                    self.arrows[w[0]].label.clone(),
                    self.arrows[w[1]].label.clone(),
                ));
            }
        }
        Ok(())
    }

    /// All paths of length at most `max_len`, ordered by length, then by the
    /// arrow-label sequence; trivial paths follow vertex order.
    pub fn enumerate_paths(&self, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..self.vertices.len()).map(|v| self.trivial_path(v)).collect();
        let mut layer: Vec<Path> = out.clone();
        for _ in 0..max_len {
            let mut next: Vec<Path> = layer
                .iter()
                .flat_map(|p| {
                    let end = p.end(self);
                    self.arrows
                        .iter()
                        .enumerate()
                        .filter(move |(_, a)| a.source == end)
                        .map(move |(i, _)| {
                            let mut arrows = p.arrows.clone();
                            arrows.push(i);
                            Path {
                                start: p.start,
                                arrows,
                            }
                        })
                })
                .collect();
            if next.is_empty() {
                break;
            }
            next.sort_by(|a, b| a.label_key(self).cmp(&b.label_key(self)));
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }

    /// The path algebra `kQ`; only finite-dimensional for acyclic quivers.
    pub fn path_algebra(&self) -> Result<SCAlgebra, QuiverError> {
        let longest = self.longest_path_len().ok_or(QuiverError::Cyclic)?;
        Ok(path_algebra_on(self, self.enumerate_paths(longest)))
    }
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn end(&self, q: &Quiver) -> usize {
        self.arrows.last().map_or(self.start, |&a| q.arrows[a].target)
    }

    /// "First `self`, then `other`", or `None` if they do not meet.
    pub fn concat(&self, other: &Path, q: &Quiver) -> Option<Path> {
        if self.end(q) != other.start {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().copied());
        Some(Path {
            start: self.start,
            arrows,
        })
    }

    fn label_key<'q>(&self, q: &'q Quiver) -> (usize, Vec<&'q str>, usize) {
        let labels = self.arrows.iter().map(|&a| q.arrows[a].label.as_str()).collect();
        (self.len(), labels, self.start)
    }

    /// Trivial paths print as `p<vertex>`, others as `a.b.c`.
    pub fn label(&self, q: &Quiver) -> String {
        if self.is_trivial() {
            format!("p{}", q.vertices[self.start])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }

    /// Arrow labels joined with `*`, the syntax used by relation files.
    pub fn relation_syntax(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrows[a].label.as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Structure constants on a path-closed-downward basis: products that leave
/// the basis (longer than any listed path) are zero.
pub(crate) fn path_algebra_on(q: &Quiver, paths: Vec<Path>) -> SCAlgebra {
    let dim = paths.len();
    let index: HashMap<&Path, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let mut products = vec![Vec::new(); dim * dim];
    for (i, u) in paths.iter().enumerate() {
        for (j, v) in paths.iter().enumerate() {
            if let Some(k) = u.concat(v, q).and_then(|w| index.get(&w).copied()) {
                products[i * dim + j].push((k, Scalar::one()));
            }
        }
    }
    let mut unit = zero_vector(dim);
    for v in 0..q.vertex_count() {
        unit[index[&q.trivial_path(v)]] = Scalar::one();
    }
    let mut labels: Vec<String> = paths.iter().map(|p| p.label(q)).collect();
    dedup_labels(&mut labels);
    let basis = PathBasis {
        quiver: q.clone(),
        paths,
    };
    SCAlgebra::from_sparse_unchecked(labels, products, unit).with_path_basis(Arc::new(basis))
}

/// Makes labels unique by priming later duplicates.
pub(crate) fn dedup_labels(labels: &mut [String]) {
    let mut seen = HashSet::new();
    for l in labels.iter_mut() {
        while !seen.insert(l.clone()) {
            l.push('\'');
        }
    }
}
