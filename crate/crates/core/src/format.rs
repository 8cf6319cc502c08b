//! Line-oriented text formats for every object the CLI reads or writes.
//!
//! `#` starts a comment. Labels are whitespace-free and may not contain
//! `+`, `-`, `*`, `:` or `=`. Scalars are integers or fractions `p/q`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{format_lincomb, AlgebraError, SCAlgebra};
use crate::bound::{BoundError, Relation, RelationSet};
use crate::category::{
    CategoryError, FinCategory, FinFunctor, HomBijections, MonotoneMap, Poset, Variance,
};
use crate::linalg::{zero_vector, LinalgError, Matrix, Scalar, Vector};
use crate::quiver::{Path, Quiver, QuiverError};
use crate::repcat::{AlgebraModule, QuiverRep, RepError, Side};
use crate::vquiver::{Vquiver, VquiverError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Missing(String),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Vquiver(#[from] VquiverError),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

impl FormatError {
    /// Whether the text itself is malformed, as opposed to describing an
    /// object that fails validation.
    pub fn is_malformed(&self) -> bool {
        matches!(self, FormatError::Syntax { .. } | FormatError::Missing(_))
    }
}

fn syntax<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError::Syntax {
        line,
        message: message.into(),
    })
}

/// Non-empty lines with comments stripped, numbered from 1.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

/// Splits `head rest` at the first whitespace.
fn split_head(line: &str) -> (&str, &str) {
    match line.split_once(char::is_whitespace) {
        Some((h, r)) => (h, r.trim()),
        None => (line, ""),
    }
}

pub fn parse_scalar(s: &str) -> Option<Scalar> {
    s.trim().parse::<Scalar>().ok()
}

fn parse_count(line: usize, s: &str) -> Result<usize, FormatError> {
    s.trim()
        .parse()
        .or_else(|_| syntax(line, format!("expected a count, found `{s}`")))
}

/// `<label>: <src> -> <tgt>`.
fn parse_edge(line: usize, s: &str) -> Result<(String, String, String), FormatError> {
    let Some((label, ends)) = s.split_once(':') else {
        return syntax(line, "expected `<label>: <source> -> <target>`");
    };
    let Some((src, tgt)) = ends.split_once("->") else {
        return syntax(line, "expected `->`");
    };
    let (label, src, tgt) = (label.trim(), src.trim(), tgt.trim());
    if label.is_empty() || src.is_empty() || tgt.is_empty() {
        return syntax(line, "empty label");
    }
    Ok((label.into(), src.into(), tgt.into()))
}

/// Splits a signed sum into `(sign, term)` pieces. A `-` right after `*` or
/// `/` belongs to a number.
fn signed_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev = ' ';
    for ch in s.chars() {
        if (ch == '+' || ch == '-') && prev != '*' && prev != '/' {
            if !current.trim().is_empty() {
                out.push((negative, current.trim().to_string()));
            }
            current.clear();
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !current.trim().is_empty() {
        out.push((negative, current.trim().to_string()));
    }
    out
}

/// A linear combination of basis labels such as `e1 - 1/2*x^2 + 3*y`. A term
/// that is exactly a label has coefficient 1; otherwise it is split at the
/// first `*` into coefficient and label.
pub fn parse_lincomb(line: usize, s: &str, labels: &[String]) -> Result<Vector, FormatError> {
    let mut out = zero_vector(labels.len());
    if s.trim() == "0" && !labels.iter().any(|l| l == "0") {
        return Ok(out);
    }
    let terms = signed_terms(s);
    if terms.is_empty() {
        return syntax(line, "empty linear combination");
    }
    let index = |l: &str| labels.iter().position(|x| x == l);
    for (negative, term) in terms {
        let (coeff, label) = match index(&term) {
            Some(i) => (Scalar::one(), i),
            None => {
                let Some((c, l)) = term.split_once('*') else {
                    return syntax(line, format!("unknown basis label `{term}`"));
                };
                let Some(c) = parse_scalar(c) else {
                    return syntax(line, format!("bad coefficient `{c}`"));
                };
                let Some(i) = index(l.trim()) else {
                    return syntax(line, format!("unknown basis label `{}`", l.trim()));
                };
                (c, i)
            }
        };
        out[label] += if negative { -coeff } else { coeff };
    }
    Ok(out)
}

/// `[a b; c d]` with the expected shape; `[]` for empty matrices.
pub fn parse_matrix(line: usize, s: &str, rows: usize, cols: usize) -> Result<Matrix, FormatError> {
    let s = s.trim();
    let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) else {
        return syntax(line, "matrix must be written `[a b; c d]`");
    };
    if rows == 0 || cols == 0 {
        if inner.chars().all(|c| c.is_whitespace() || c == ';') {
            return Ok(Matrix::zeros(rows, cols));
        }
        return syntax(line, format!("expected an empty {rows}x{cols} matrix"));
    }
    let parsed: Vec<Vec<&str>> = inner
        .split(';')
        .map(|r| r.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect())
        .collect();
    if parsed.len() != rows || parsed.iter().any(|r| r.len() != cols) {
        return syntax(line, format!("expected a {rows}x{cols} matrix"));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for t in parsed.into_iter().flatten() {
        match parse_scalar(t) {
            Some(x) => entries.push(x),
            None => return syntax(line, format!("bad matrix entry `{t}`")),
        }
    }
    Ok(Matrix::new(rows, cols, entries)?)
}

/// A quiver file, possibly carrying relations.
#[derive(Clone, Debug)]
pub struct QuiverFile {
    pub quiver: Quiver,
    relation_lines: Vec<(usize, String)>,
    max_len: Option<usize>,
}

impl QuiverFile {
    pub fn has_relations(&self) -> bool {
        !self.relation_lines.is_empty() || self.max_len.is_some()
    }

    /// The relations with their truncation; `maxlen` defaults to the longest
    /// path of an acyclic quiver.
    pub fn relation_set(&self) -> Result<RelationSet, FormatError> {
        let q = &self.quiver;
        let max_len = match (self.max_len, q.longest_path_len()) {
            (Some(m), _) => m,
            (None, Some(l)) => l.max(1),
            (None, None) => return Err(FormatError::Missing("`maxlen:` is required for quivers with cycles".into())),
        };
        let rels = self
            .relation_lines
            .iter()
            .map(|(line, text)| parse_relation(*line, q, text))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RelationSet::new(q.clone(), rels, max_len)?)
    }
}

pub fn parse_quiver_file(text: &str) -> Result<QuiverFile, FormatError> {
    let mut header = false;
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut relation_lines = Vec::new();
    let mut max_len = None;
    for (n, l) in lines(text) {
        if l == "quiver" {
            header = true;
            continue;
        }
        if let Some(rest) = l.strip_prefix("relation:") {
            relation_lines.push((n, rest.trim().to_string()));
            continue;
        }
        if let Some(rest) = l.strip_prefix("maxlen:") {
            max_len = Some(parse_count(n, rest)?);
            continue;
        }
        match split_head(l) {
            ("vertex", rest) if !rest.is_empty() => vertices.extend(rest.split_whitespace().map(String::from)),
            ("arrow", rest) => arrows.push(parse_edge(n, rest)?),
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    if !header {
        return Err(FormatError::Missing("missing `quiver` header".into()));
    }
    Ok(QuiverFile {
        quiver: Quiver::new(vertices, arrows)?,
        relation_lines,
        max_len,
    })
}

pub fn parse_quiver(text: &str) -> Result<Quiver, FormatError> {
    Ok(parse_quiver_file(text)?.quiver)
}

pub fn parse_bound_quiver(text: &str) -> Result<RelationSet, FormatError> {
    parse_quiver_file(text)?.relation_set()
}

/// `<coeff>*<path> [+|- ...]` with paths written `a*b`; the leading factor
/// is a coefficient when it parses as a number and more factors follow.
pub fn parse_relation(line: usize, q: &Quiver, text: &str) -> Result<Relation, FormatError> {
    let mut rel = Vec::new();
    for (negative, term) in signed_terms(text) {
        let factors: Vec<&str> = term.split('*').map(str::trim).collect();
        let (coeff, path) = match parse_scalar(factors[0]) {
            Some(c) if factors.len() > 1 => (c, &factors[1..]),
            _ => (Scalar::one(), &factors[..]),
        };
        let path: Path = q.path_from_labels(path)?;
        rel.push((if negative { -coeff } else { coeff }, path));
    }
    if rel.is_empty() {
        return syntax(line, "empty relation");
    }
    Ok(rel)
}

pub fn write_quiver(q: &Quiver) -> String {
    let mut out = String::from("quiver\n");
    for v in q.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    for a in q.arrows() {
        let _ = writeln!(out, "arrow {}: {} -> {}", a.label, q.vertices()[a.source], q.vertices()[a.target]);
    }
    out
}

pub fn write_bound_quiver(r: &RelationSet) -> String {
    format!("{}{r}\n", write_quiver(r.quiver()))
}

pub fn parse_algebra(text: &str) -> Result<SCAlgebra, FormatError> {
    let mut dim = None;
    let mut labels: Option<Vec<String>> = None;
    let mut unit = None;
    let mut products: Vec<(usize, String, String, String)> = Vec::new();
    for (n, l) in lines(text) {
        if let Some(rest) = l.strip_prefix("basis:") {
            labels = Some(rest.split_whitespace().map(String::from).collect());
            continue;
        }
        if let Some(rest) = l.strip_prefix("unit:") {
            unit = Some((n, rest.trim().to_string()));
            continue;
        }
        match split_head(l) {
            ("algebra", rest) => match rest.strip_prefix("dim") {
                Some(d) => dim = Some(parse_count(n, d)?),
                None => return syntax(n, "expected `algebra dim <n>`"),
            },
            ("mul", rest) => {
                let Some((lhs, rhs)) = rest.split_once('=') else {
                    return syntax(n, "expected `mul <a> <b> = <lincomb>`");
                };
                let ops: Vec<&str> = lhs.split_whitespace().collect();
                if ops.len() != 2 {
                    return syntax(n, "`mul` takes two basis labels");
                }
                products.push((n, ops[0].into(), ops[1].into(), rhs.trim().into()));
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    let dim = dim.ok_or_else(|| FormatError::Missing("missing `algebra dim <n>` header".into()))?;
    let labels = labels.unwrap_or_else(|| (1..=dim).map(|i| format!("b{i}")).collect());
    if labels.len() != dim {
        return Err(FormatError::Missing(format!("`basis:` lists {} labels for dimension {dim}", labels.len())));
    }
    let (un, ut) = unit.ok_or_else(|| FormatError::Missing("missing `unit:` line".into()))?;
    let unit = parse_lincomb(un, &ut, &labels)?;
    let mut table: HashMap<(usize, usize), Vector> = HashMap::new();
    for (n, a, b, rhs) in products {
        let idx = |l: &str| labels.iter().position(|x| x == l);
        let (Some(i), Some(j)) = (idx(&a), idx(&b)) else {
            return syntax(n, format!("unknown basis label in `mul {a} {b}`"));
        };
        if table.insert((i, j), parse_lincomb(n, &rhs, &labels)?).is_some() {
            return syntax(n, format!("product `{a} {b}` given twice"));
        }
    }
    Ok(SCAlgebra::new(
        labels,
        |i, j| table.get(&(i, j)).cloned().unwrap_or_else(|| zero_vector(dim)),
        unit,
    )?)
}

/// Nonzero products only.
pub fn write_algebra(a: &SCAlgebra) -> String {
    let labels = a.labels();
    let mut out = format!("algebra dim {}\nbasis: {}\nunit: {}\n", a.dim(), labels.join(" "), a.format_element(a.unit()));
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let p = a.mul_basis(i, j);
            if p.iter().any(|c| !c.is_zero()) {
                let _ = writeln!(out, "mul {} {} = {}", labels[i], labels[j], format_lincomb(&p, labels));
            }
        }
    }
    out
}

pub fn parse_vquiver(text: &str) -> Result<Vquiver, FormatError> {
    let mut header = false;
    let mut vertices = Vec::new();
    let mut spaces = Vec::new();
    for (n, l) in lines(text) {
        match split_head(l) {
            ("vquiver", "") => header = true,
            ("vertex", rest) if !rest.is_empty() => vertices.extend(rest.split_whitespace().map(String::from)),
            ("edges", rest) => {
                let Some((ends, decl)) = rest.split_once(':') else {
                    return syntax(n, "expected `edges <e> <f>: dim <d> [labels]`");
                };
                let ends: Vec<&str> = ends.split_whitespace().collect();
                let decl: Vec<&str> = decl.split_whitespace().collect();
                if ends.len() != 2 || decl.len() < 2 || decl[0] != "dim" {
                    return syntax(n, "expected `edges <e> <f>: dim <d> [labels]`");
                }
                let d = parse_count(n, decl[1])?;
                let labels: Vec<String> = if decl.len() == 2 {
                    crate::vquiver::default_labels(ends[0], ends[1], d)
                } else if decl.len() == 2 + d {
                    decl[2..].iter().map(|s| s.to_string()).collect()
                } else {
                    return syntax(n, format!("dimension {d} needs {d} labels"));
                };
                spaces.push((ends[0].to_string(), ends[1].to_string(), labels));
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    if !header {
        return Err(FormatError::Missing("missing `vquiver` header".into()));
    }
    Ok(Vquiver::new(vertices, spaces)?)
}

pub fn write_vquiver(vq: &Vquiver) -> String {
    let mut out = String::from("vquiver\n");
    for v in vq.vertices() {
        let _ = writeln!(out, "vertex {v}");
    }
    let n = vq.vertex_count();
    for e in 0..n {
        for f in 0..n {
            let labels = vq.edge_labels(e, f);
            if !labels.is_empty() {
                let _ = writeln!(
                    out,
                    "edges {} {}: dim {} {}",
                    vq.vertices()[e],
                    vq.vertices()[f],
                    labels.len(),
                    labels.join(" ")
                );
            }
        }
    }
    out
}

pub fn parse_category(text: &str) -> Result<FinCategory, FormatError> {
    let mut objects: Option<Vec<String>> = None;
    let mut morphisms = Vec::new();
    let mut identities = Vec::new();
    let mut comps = Vec::new();
    for (n, l) in lines(text) {
        if let Some(rest) = l.strip_prefix("objects:") {
            objects = Some(rest.split_whitespace().map(String::from).collect());
            continue;
        }
        match split_head(l) {
            ("mor", rest) => morphisms.push(parse_edge(n, rest)?),
            ("id", rest) => match rest.split_once('=') {
                Some((x, f)) if !x.trim().is_empty() && !f.trim().is_empty() => {
                    identities.push((x.trim().to_string(), f.trim().to_string()))
                }
                _ => return syntax(n, "expected `id <X> = <label>`"),
            },
            ("comp", rest) => {
                let Some((lhs, h)) = rest.split_once('=') else {
                    return syntax(n, "expected `comp <f> <g> = <h>`");
                };
                let fg: Vec<&str> = lhs.split_whitespace().collect();
                if fg.len() != 2 || h.trim().is_empty() {
                    return syntax(n, "expected `comp <f> <g> = <h>`");
                }
                comps.push((fg[0].to_string(), fg[1].to_string(), h.trim().to_string()));
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    let objects = objects.ok_or_else(|| FormatError::Missing("missing `objects:` line".into()))?;
    Ok(FinCategory::new(&objects, &morphisms, &identities, &comps)?)
}

/// `variance covariant|contravariant`, `obj <X> -> <Y>`, `mor <f> -> <g>`.
pub fn parse_functor(
    text: &str,
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
) -> Result<FinFunctor, FormatError> {
    let mut variance = Variance::Covariant;
    let mut objects = vec![None; source.object_count()];
    let mut morphisms = vec![None; source.morphism_count()];
    for (n, l) in lines(text) {
        let (head, rest) = split_head(l);
        if head == "variance" {
            variance = match rest {
                "covariant" => Variance::Covariant,
                "contravariant" => Variance::Contravariant,
                _ => return syntax(n, "variance is `covariant` or `contravariant`"),
            };
            continue;
        }
        let Some((a, b)) = rest.split_once("->") else {
            return syntax(n, format!("unexpected `{l}`"));
        };
        let (a, b) = (a.trim(), b.trim());
        match head {
            "obj" => {
                let (Some(x), Some(y)) = (source.object_index(a), target.object_index(b)) else {
                    return syntax(n, format!("unknown object in `{l}`"));
                };
                objects[x] = Some(y);
            }
            "mor" => {
                let (Some(f), Some(g)) = (source.morphism_index(a), target.morphism_index(b)) else {
                    return syntax(n, format!("unknown morphism in `{l}`"));
                };
                morphisms[f] = Some(g);
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    let objects = objects.into_iter().collect::<Option<Vec<_>>>();
    let morphisms = morphisms.into_iter().collect::<Option<Vec<_>>>();
    match (objects, morphisms) {
        (Some(o), Some(m)) => Ok(FinFunctor::new(source, target, o, m, variance)?),
        _ => Err(FormatError::Missing("functor must map every object and morphism".into())),
    }
}

pub fn write_functor(f: &FinFunctor) -> String {
    let (c, d) = (f.source(), f.target());
    let mut out = format!(
        "variance {}\n",
        match f.variance() {
            Variance::Covariant => "covariant",
            Variance::Contravariant => "contravariant",
        }
    );
    for (x, &y) in f.object_map().iter().enumerate() {
        let _ = writeln!(out, "obj {} -> {}", c.objects()[x], d.objects()[y]);
    }
    for (g, &h) in f.morphism_map().iter().enumerate() {
        let _ = writeln!(out, "mor {} -> {}", c.morphism(g).label, d.morphism(h).label);
    }
    out
}

/// `class <f> <g> ...` lines; unlisted morphisms are singletons.
pub fn parse_congruence(text: &str, c: &FinCategory) -> Result<Vec<usize>, FormatError> {
    let mut class: Vec<usize> = (0..c.morphism_count()).collect();
    let mut assigned = vec![false; c.morphism_count()];
    for (n, l) in lines(text) {
        let (head, rest) = split_head(l);
        if head != "class" {
            return syntax(n, format!("unexpected `{l}`"));
        }
        let members = rest
            .split_whitespace()
            .map(|m| c.morphism_index(m).map_or_else(|| syntax(n, format!("unknown morphism `{m}`")), Ok))
            .collect::<Result<Vec<_>, _>>()?;
        let Some(&first) = members.first() else {
            return syntax(n, "empty class");
        };
        for &m in &members {
            if std::mem::replace(&mut assigned[m], true) {
                return syntax(n, format!("`{}` is in two classes", c.morphism(m).label));
            }
            class[m] = first;
        }
    }
    Ok(class)
}

/// `phi <A> <B>: <m> -> <n>` lines giving `Mor_C(A, G B) → Mor_D(F A, B)`.
pub fn parse_hom_bijections(text: &str, c: &FinCategory, d: &FinCategory) -> Result<HomBijections, FormatError> {
    let mut phi = HomBijections::new();
    for (n, l) in lines(text) {
        let (head, rest) = split_head(l);
        let parsed = (head == "phi")
            .then(|| rest.split_once(':'))
            .flatten()
            .and_then(|(ab, mn)| {
                let ab: Vec<&str> = ab.split_whitespace().collect();
                let (m, k) = mn.split_once("->")?;
                (ab.len() == 2).then(|| (ab[0], ab[1], m.trim(), k.trim()))
            });
        let Some((a, b, m, k)) = parsed else {
            return syntax(n, "expected `phi <A> <B>: <m> -> <n>`");
        };
        let (Some(a), Some(b), Some(m), Some(k)) =
            (c.object_index(a), d.object_index(b), c.morphism_index(m), d.morphism_index(k))
        else {
            return syntax(n, format!("unknown label in `{l}`"));
        };
        phi.entry((a, b)).or_default().insert(m, k);
    }
    Ok(phi)
}

/// A Galois connection file:
///
/// ```text
/// poset I: a b c
/// leq I a b
/// poset J: x y
/// map F I -> J: a=x b=x c=y
/// map G J -> I: x=b y=c
/// ```
///
/// Reflexive pairs are implied; transitivity and antisymmetry are checked.
#[derive(Clone, Debug)]
pub struct GaloisFile {
    pub left: MonotoneMap,
    pub right: MonotoneMap,
}

pub fn parse_galois(text: &str) -> Result<GaloisFile, FormatError> {
    let mut elements: Vec<(String, Vec<String>)> = Vec::new();
    let mut pairs: HashMap<String, Vec<(String, String)>> = HashMap::new();
    let mut maps: Vec<(usize, String, String, String, Vec<(String, String)>)> = Vec::new();
    for (n, l) in lines(text) {
        let (head, rest) = split_head(l);
        match head {
            "poset" => {
                let Some((name, els)) = rest.split_once(':') else {
                    return syntax(n, "expected `poset <name>: <elements>`");
                };
                elements.push((name.trim().into(), els.split_whitespace().map(String::from).collect()));
            }
            "leq" => {
                let w: Vec<&str> = rest.split_whitespace().collect();
                if w.len() != 3 {
                    return syntax(n, "expected `leq <poset> <a> <b>`");
                }
                pairs.entry(w[0].into()).or_default().push((w[1].into(), w[2].into()));
            }
            "map" => {
                let parsed = rest.split_once(':').and_then(|(sig, body)| {
                    let (name_src, tgt) = sig.split_once("->")?;
                    let (name, src) = name_src.trim().split_once(char::is_whitespace)?;
                    let assignments = body
                        .split_whitespace()
                        .map(|t| t.split_once('=').map(|(a, b)| (a.to_string(), b.to_string())))
                        .collect::<Option<Vec<_>>>()?;
                    Some((name.trim().to_string(), src.trim().to_string(), tgt.trim().to_string(), assignments))
                });
                let Some((name, src, tgt, assignments)) = parsed else {
                    return syntax(n, "expected `map <name> <I> -> <J>: a=x ...`");
                };
                maps.push((n, name, src, tgt, assignments));
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    let mut posets: HashMap<String, Arc<Poset>> = HashMap::new();
    for (name, els) in &elements {
        let mut rel: Vec<(String, String)> = els.iter().map(|e| (e.clone(), e.clone())).collect();
        rel.extend(pairs.remove(name).unwrap_or_default());
        posets.insert(name.clone(), Arc::new(Poset::from_pairs(els, &rel)?));
    }
    if let Some(name) = pairs.keys().next() {
        return Err(FormatError::Missing(format!("`leq` refers to undeclared poset `{name}`")));
    }
    if maps.len() != 2 {
        return Err(FormatError::Missing("expected exactly two `map` lines".into()));
    }
    let mut built = Vec::new();
    for (n, _, src, tgt, assignments) in maps {
        let (Some(s), Some(t)) = (posets.get(&src), posets.get(&tgt)) else {
            return syntax(n, "map refers to an undeclared poset");
        };
        let mut image = vec![None; s.len()];
        for (a, b) in assignments {
            let (Some(i), Some(j)) = (s.index(&a), t.index(&b)) else {
                return syntax(n, format!("unknown element in `{a}={b}`"));
            };
            image[i] = Some(j);
        }
        let Some(image) = image.into_iter().collect::<Option<Vec<_>>>() else {
            return syntax(n, "map must assign every element");
        };
        built.push(MonotoneMap::new(s.clone(), t.clone(), image)?);
    }
    let right = built.pop().expect("two maps");
    let left = built.pop().expect("two maps");
    Ok(GaloisFile { left, right })
}

/// `representation`, `vertex <l> dim <d>`, `arrow <l>: <s> -> <t> = <matrix>`,
/// plus optional `relation:`/`maxlen:` lines.
#[derive(Clone, Debug)]
pub struct RepresentationFile {
    pub rep: QuiverRep,
    pub relations: Option<RelationSet>,
}

pub fn parse_representation(text: &str) -> Result<RepresentationFile, FormatError> {
    let mut header = false;
    let mut vertices = Vec::new();
    let mut dims = Vec::new();
    let mut arrows = Vec::new();
    let mut matrices = Vec::new();
    let mut quiver_text = String::from("quiver\n");
    for (n, l) in lines(text) {
        if l.starts_with("relation:") || l.starts_with("maxlen:") {
            quiver_text.push_str(l);
            quiver_text.push('\n');
            continue;
        }
        match split_head(l) {
            ("representation", "") => header = true,
            ("vertex", rest) => {
                let w: Vec<&str> = rest.split_whitespace().collect();
                if w.len() != 3 || w[1] != "dim" {
                    return syntax(n, "expected `vertex <label> dim <d>`");
                }
                vertices.push(w[0].to_string());
                dims.push(parse_count(n, w[2])?);
            }
            ("arrow", rest) => {
                let Some((edge, m)) = rest.split_once('=') else {
                    return syntax(n, "expected `arrow <l>: <s> -> <t> = [..]`");
                };
                arrows.push(parse_edge(n, edge)?);
                matrices.push((n, m.trim().to_string()));
            }
            _ => return syntax(n, format!("unexpected `{l}`")),
        }
    }
    if !header {
        return Err(FormatError::Missing("missing `representation` header".into()));
    }
    let quiver = Quiver::new(vertices.clone(), arrows)?;
    let maps = quiver
        .arrows()
        .iter()
        .zip(&matrices)
        .map(|(a, (n, m))| parse_matrix(*n, m, dims[a.target], dims[a.source]))
        .collect::<Result<Vec<_>, _>>()?;
    let relations = if quiver_text.lines().count() > 1 {
        let mut file = parse_quiver_file(&(write_quiver(&quiver) + &quiver_text[7..]))?;
        file.quiver = quiver.clone();
        Some(file.relation_set()?)
    } else {
        None
    };
    Ok(RepresentationFile {
        rep: QuiverRep::new(quiver, dims, maps)?,
        relations,
    })
}

pub fn write_representation(rep: &QuiverRep) -> String {
    let q = rep.quiver();
    let mut out = String::from("representation\n");
    for (v, d) in q.vertices().iter().zip(rep.dims()) {
        let _ = writeln!(out, "vertex {v} dim {d}");
    }
    for (a, m) in q.arrows().iter().zip(rep.maps()) {
        let _ = writeln!(
            out,
            "arrow {}: {} -> {} = {m}",
            a.label,
            q.vertices()[a.source],
            q.vertices()[a.target]
        );
    }
    out
}

/// The action matrix of every basis element.
pub fn write_module(m: &AlgebraModule) -> String {
    let side = match m.side() {
        Side::Left => "left",
        Side::Right => "right",
    };
    let mut out = format!("module {side} dim {}\n", m.dim());
    for (l, mat) in m.algebra().labels().iter().zip(m.action()) {
        let _ = writeln!(out, "act {l} = {mat}");
    }
    out
}
