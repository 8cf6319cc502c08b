//! Finite categories given by tables, with exhaustive axiom checks.
//!
//! Composition is written diagrammatically: `then(f, g)` is "f, then g" and
//! needs `target(f) = source(g)`.

mod poset;

pub use poset::{
    check_galois_adjunction, divisibility_poset, functor_from_monotone, galois_hom_bijections, monotone_from_functor,
    poset_to_category, ClosureExample, MonotoneMap, Poset,
};

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("duplicate object `{0}`")]
    DuplicateObject(String),
    #[error("duplicate morphism `{0}`")]
    DuplicateMorphism(String),
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("object `{0}` has no identity")]
    MissingIdentity(String),
    #[error("identity of `{0}` is not an endomorphism of it")]
    IdentityType(String),
    #[error("`{0}` then `{1}` is not defined")]
    MissingComposite(String, String),
    #[error("composite given for non-composable `{0}`, `{1}`")]
    NotComposable(String, String),
    #[error("`{0}` then `{1}` is declared twice")]
    DuplicateComposite(String, String),
    #[error("`{f}` then `{g}` = `{h}` has the wrong source or target")]
    CompositeType { f: String, g: String, h: String },
    #[error("identity law fails for `{0}`")]
    IdentityLaw(String),
    #[error("associativity fails for ({0}, {1}, {2})")]
    NotAssociative(String, String, String),
    #[error("functor maps are incomplete")]
    FunctorShape,
    #[error("functor sends `{0}` to a morphism with the wrong endpoints")]
    FunctorType(String),
    #[error("functor does not preserve the identity of `{0}`")]
    FunctorIdentity(String),
    #[error("functor does not preserve the composite of `{0}` and `{1}`")]
    FunctorComposition(String, String),
    #[error("functors do not share source, target and variance")]
    FunctorMismatch,
    #[error("component at `{0}` has the wrong endpoints")]
    ComponentType(String),
    #[error("naturality square fails for `{0}`")]
    NotNatural(String),
    #[error("poset relation is not reflexive at `{0}`")]
    NotReflexive(String),
    #[error("poset relation is not antisymmetric at (`{0}`, `{1}`)")]
    NotAntisymmetric(String, String),
    #[error("poset relation is not transitive at (`{0}`, `{1}`, `{2}`)")]
    NotTransitive(String, String, String),
    #[error("map is not monotone: `{0}` ≤ `{1}` but images are not ordered")]
    NotMonotone(String, String),
    #[error("not a category of a poset")]
    NotPosetCategory,
    #[error("class mixes hom-sets: `{0}` and `{1}`")]
    ClassAcrossHomSets(String, String),
    #[error("partition is not a congruence: `{0}` ~ `{1}` but composing with `{2}` separates them")]
    NotCongruence(String, String, String),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `table[f * m + g] = then(f, g)` for composable pairs.
    table: Vec<Option<usize>>,
}

/// Pass or fail with a human-readable witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass() -> Self {
        Self {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        Self {
            holds: false,
            witness: Some(witness.into()),
        }
    }
}

impl FinCategory {
    /// `compositions` are `(f, g, h)` meaning "f then g is h".
    pub fn new<S: AsRef<str>>(
        objects: &[S],
        morphisms: &[(S, S, S)],
        identities: &[(S, S)],
        compositions: &[(S, S, S)],
    ) -> Result<Self, CategoryError> {
        let objects: Vec<String> = objects.iter().map(|o| o.as_ref().to_string()).collect();
        let mut seen = HashSet::new();
        for o in &objects {
            if !seen.insert(o.as_str()) {
                return Err(CategoryError::DuplicateObject(o.clone()));
            }
        }
        let obj = |l: &str| {
            objects
                .iter()
                .position(|o| o == l)
                .ok_or_else(|| CategoryError::UnknownObject(l.to_string()))
        };
        let mut mors = Vec::with_capacity(morphisms.len());
        let mut labels = HashSet::new();
        for (l, s, t) in morphisms {
            let l = l.as_ref();
            if !labels.insert(l.to_string()) {
                return Err(CategoryError::DuplicateMorphism(l.to_string()));
            }
            mors.push(Morphism {
                label: l.to_string(),
                source: obj(s.as_ref())?,
                target: obj(t.as_ref())?,
            });
        }
        let mor = |l: &str| {
            mors.iter()
                .position(|m| m.label == l)
                .ok_or_else(|| CategoryError::UnknownMorphism(l.to_string()))
        };
        let mut ids = vec![None; objects.len()];
        for (o, l) in identities {
            ids[obj(o.as_ref())?] = Some(mor(l.as_ref())?);
        }
        let identities = ids
            .into_iter()
            .enumerate()
            .map(|(i, id)| id.ok_or_else(|| CategoryError::MissingIdentity(objects[i].clone())))
            .collect::<Result<Vec<_>, _>>()?;
        let m = mors.len();
        let mut table = vec![None; m * m];
        for (f, g, h) in compositions {
            let (f, g, h) = (mor(f.as_ref())?, mor(g.as_ref())?, mor(h.as_ref())?);
            if mors[f].target != mors[g].source {
                return Err(CategoryError::NotComposable(mors[f].label.clone(), mors[g].label.clone()));
            }
            if table[f * m + g].replace(h).is_some() {
                return Err(CategoryError::DuplicateComposite(mors[f].label.clone(), mors[g].label.clone()));
            }
        }
        Self::from_parts(objects, mors, identities, table)
    }

    /// Builds from indices and validates every axiom.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        table: Vec<Option<usize>>,
    ) -> Result<Self, CategoryError> {
        let c = Self {
            objects,
            morphisms,
            identities,
            table,
        };
        c.validate()?;
        Ok(c)
    }

    /// Identities, totality and typing of composition, identity laws and
    /// associativity, each failure naming its witnesses.
    pub fn validate(&self) -> Result<(), CategoryError> {
        let m = self.morphisms.len();
        if self.identities.len() != self.objects.len() || self.table.len() != m * m {
            return Err(CategoryError::Invalid("table sizes do not match".into()));
        }
        let label = |f: usize| self.morphisms[f].label.clone();
        for (x, &id) in self.identities.iter().enumerate() {
            let mo = &self.morphisms[id];
            if mo.source != x || mo.target != x {
                return Err(CategoryError::IdentityType(self.objects[x].clone()));
            }
        }
        for f in 0..m {
            for g in 0..m {
                let composable = self.morphisms[f].target == self.morphisms[g].source;
                match (composable, self.table[f * m + g]) {
                    (true, None) => return Err(CategoryError::MissingComposite(label(f), label(g))),
                    (false, Some(_)) => return Err(CategoryError::NotComposable(label(f), label(g))),
                    (true, Some(h)) => {
                        let hm = &self.morphisms[h];
                        if hm.source != self.morphisms[f].source || hm.target != self.morphisms[g].target {
                            return Err(CategoryError::CompositeType {
                                f: label(f),
                                g: label(g),
                                h: label(h),
                            });
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        for f in 0..m {
            let mo = &self.morphisms[f];
            if self.then(self.identities[mo.source], f) != Some(f) || self.then(f, self.identities[mo.target]) != Some(f) {
                return Err(CategoryError::IdentityLaw(label(f)));
            }
        }
        for f in 0..m {
            for g in self.out_of(self.morphisms[f].target) {
                let fg = self.then(f, g).expect("typed");
                for h in self.out_of(self.morphisms[g].target) {
                    let left = self.then(fg, h);
                    let right = self.then(f, self.then(g, h).expect("typed"));
                    if left != right {
                        return Err(CategoryError::NotAssociative(label(f), label(g), label(h)));
                    }
                }
            }
        }
        Ok(())
    }

    /// The one-object category with only its identity.
    pub fn terminal() -> Self {
        Self::new(&["*"], &[("id", "*", "*")], &[("*", "id")], &[("id", "id", "id")]).expect("terminal category")
    }

    /// Only identity morphisms.
    pub fn discrete<S: AsRef<str>>(objects: &[S]) -> Result<Self, CategoryError> {
        let ids: Vec<(String, String, String)> = objects
            .iter()
            .map(|o| (format!("id_{}", o.as_ref()), o.as_ref().to_string(), o.as_ref().to_string()))
            .collect();
        let id_pairs: Vec<(String, String)> = ids.iter().map(|(l, o, _)| (o.clone(), l.clone())).collect();
        let comps: Vec<(String, String, String)> = ids.iter().map(|(l, _, _)| (l.clone(), l.clone(), l.clone())).collect();
        let objs: Vec<String> = objects.iter().map(|o| o.as_ref().to_string()).collect();
        Self::new(&objs, &ids, &id_pairs, &comps)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, f: usize) -> &Morphism {
        &self.morphisms[f]
    }

    pub fn object_index(&self, label: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == label)
    }

    pub fn morphism_index(&self, label: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.label == label)
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identities[x]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identities
    }

    pub fn is_identity(&self, f: usize) -> bool {
        self.identities[self.morphisms[f].source] == f
    }

    /// "f, then g", when composable.
    pub fn then(&self, f: usize, g: usize) -> Option<usize> {
        self.table[f * self.morphisms.len() + g]
    }

    /// `Mor(x, y)`.
    pub fn hom(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&f| self.morphisms[f].source == x && self.morphisms[f].target == y)
            .collect()
    }

    fn out_of(&self, x: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.morphisms[f].source == x).collect()
    }

    /// A two-sided inverse of `f`, if any.
    pub fn inverse(&self, f: usize) -> Option<usize> {
        let mo = &self.morphisms[f];
        self.hom(mo.target, mo.source).into_iter().find(|&g| {
            self.then(f, g) == Some(self.identities[mo.source]) && self.then(g, f) == Some(self.identities[mo.target])
        })
    }

    pub fn is_isomorphism(&self, f: usize) -> bool {
        self.inverse(f).is_some()
    }

    pub fn are_isomorphic(&self, x: usize, y: usize) -> bool {
        self.hom(x, y).into_iter().any(|f| self.is_isomorphism(f))
    }

    /// All `(f, g, h)` with `then(f, g) = h`, in index order.
    pub fn composition_table(&self) -> Vec<(usize, usize, usize)> {
        let m = self.morphisms.len();
        (0..m)
            .flat_map(|f| (0..m).map(move |g| (f, g)))
            .filter_map(|(f, g)| self.then(f, g).map(|h| (f, g, h)))
            .collect()
    }

    /// Table with one entry replaced, unvalidated; used to exercise the
    /// validator.
    pub fn with_corrupted_entry(&self, f: usize, g: usize, h: usize) -> Self {
        let mut c = self.clone();
        let m = c.morphisms.len();
        c.table[f * m + g] = Some(h);
        c
    }
}

impl fmt::Display for FinCategory {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "objects: {}", self.objects.join(" "))?;
        for m in &self.morphisms {
            writeln!(out, "mor {}: {} -> {}", m.label, self.objects[m.source], self.objects[m.target])?;
        }
        for (x, &id) in self.identities.iter().enumerate() {
            writeln!(out, "id {} = {}", self.objects[x], self.morphisms[id].label)?;
        }
        for (f, g, h) in self.composition_table() {
            writeln!(
                out,
                "comp {} {} = {}",
                self.morphisms[f].label, self.morphisms[g].label, self.morphisms[h].label
            )?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    object_map: Vec<usize>,
    morphism_map: Vec<usize>,
    variance: Variance,
}

impl FinFunctor {
    pub fn new(
        source: Arc<FinCategory>,
        target: Arc<FinCategory>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
        variance: Variance,
    ) -> Result<Self, CategoryError> {
        let f = Self {
            source,
            target,
            object_map,
            morphism_map,
            variance,
        };
        f.validate()?;
        Ok(f)
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let objs = (0..c.object_count()).collect();
        let mors = (0..c.morphism_count()).collect();
        Self::new(c.clone(), c, objs, mors, Variance::Covariant).expect("identity functor")
    }

    /// Endpoints, identities and composites, respecting variance.
    pub fn validate(&self) -> Result<(), CategoryError> {
        let (c, d) = (&self.source, &self.target);
        if self.object_map.len() != c.object_count()
            || self.morphism_map.len() != c.morphism_count()
            || self.object_map.iter().any(|&y| y >= d.object_count())
            || self.morphism_map.iter().any(|&g| g >= d.morphism_count())
        {
            return Err(CategoryError::FunctorShape);
        }
        for (f, mo) in c.morphisms().iter().enumerate() {
            let image = d.morphism(self.morphism_map[f]);
            let (s, t) = (self.object_map[mo.source], self.object_map[mo.target]);
            let expected = match self.variance {
                Variance::Covariant => (s, t),
                Variance::Contravariant => (t, s),
            };
            if (image.source, image.target) != expected {
                return Err(CategoryError::FunctorType(mo.label.clone()));
            }
        }
        for x in 0..c.object_count() {
            if self.morphism_map[c.identity(x)] != d.identity(self.object_map[x]) {
                return Err(CategoryError::FunctorIdentity(c.objects()[x].clone()));
            }
        }
        for (f, g, h) in c.composition_table() {
            let (ff, fg) = (self.morphism_map[f], self.morphism_map[g]);
            let composite = match self.variance {
                Variance::Covariant => d.then(ff, fg),
                Variance::Contravariant => d.then(fg, ff),
            };
            if composite != Some(self.morphism_map[h]) {
                return Err(CategoryError::FunctorComposition(
                    c.morphism(f).label.clone(),
                    c.morphism(g).label.clone(),
                ));
            }
        }
        Ok(())
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    pub fn on_object(&self, x: usize) -> usize {
        self.object_map[x]
    }

    pub fn on_morphism(&self, f: usize) -> usize {
        self.morphism_map[f]
    }

    pub fn object_map(&self) -> &[usize] {
        &self.object_map
    }

    pub fn morphism_map(&self) -> &[usize] {
        &self.morphism_map
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &FinFunctor) -> Result<FinFunctor, CategoryError> {
        if *self.target != *next.source {
            return Err(CategoryError::FunctorMismatch);
        }
        let variance = if self.variance == next.variance {
            Variance::Covariant
        } else {
            Variance::Contravariant
        };
        Self::new(
            self.source.clone(),
            next.target.clone(),
            self.object_map.iter().map(|&x| next.object_map[x]).collect(),
            self.morphism_map.iter().map(|&f| next.morphism_map[f]).collect(),
            variance,
        )
    }
}

/// `α: F ⇒ G` between functors with the same source, target and variance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinNatTrans {
    source: FinFunctor,
    target: FinFunctor,
    components: Vec<usize>,
}

impl FinNatTrans {
    pub fn new(source: FinFunctor, target: FinFunctor, components: Vec<usize>) -> Result<Self, CategoryError> {
        let t = Self {
            source,
            target,
            components,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let components = (0..f.source.object_count())
            .map(|x| f.target.identity(f.on_object(x)))
            .collect();
        Self::new(f.clone(), f.clone(), components).expect("identity transformation")
    }

    /// `α_X: F(X) → G(X)` and, for every `f: X₁ → X₂`,
    /// `F(f) then α_{X₂} = α_{X₁} then G(f)` (ends swapped when contravariant).
    pub fn validate(&self) -> Result<(), CategoryError> {
        let (f, g) = (&self.source, &self.target);
        if f.source != g.source || f.target != g.target || f.variance != g.variance {
            return Err(CategoryError::FunctorMismatch);
        }
        let (c, d) = (&f.source, &f.target);
        if self.components.len() != c.object_count() {
            return Err(CategoryError::FunctorShape);
        }
        for x in 0..c.object_count() {
            let a = self.components[x];
            if a >= d.morphism_count() || d.morphism(a).source != f.on_object(x) || d.morphism(a).target != g.on_object(x) {
                return Err(CategoryError::ComponentType(c.objects()[x].clone()));
            }
        }
        for (h, mo) in c.morphisms().iter().enumerate() {
            let (x1, x2) = match f.variance {
                Variance::Covariant => (mo.source, mo.target),
                Variance::Contravariant => (mo.target, mo.source),
            };
            let left = d.then(f.on_morphism(h), self.components[x2]);
            let right = d.then(self.components[x1], g.on_morphism(h));
            if left.is_none() || left != right {
                return Err(CategoryError::NotNatural(mo.label.clone()));
            }
        }
        Ok(())
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    pub fn source(&self) -> &FinFunctor {
        &self.source
    }

    pub fn target(&self) -> &FinFunctor {
        &self.target
    }

    /// Vertical composite `self then next`, componentwise.
    pub fn then(&self, next: &FinNatTrans) -> Result<FinNatTrans, CategoryError> {
        if self.target != next.source {
            return Err(CategoryError::FunctorMismatch);
        }
        let d = &self.source.target;
        let components = self
            .components
            .iter()
            .zip(&next.components)
            .map(|(&a, &b)| d.then(a, b).expect("components compose"))
            .collect();
        Self::new(self.source.clone(), next.target.clone(), components)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceReport {
    pub essentially_surjective: bool,
    pub full: bool,
    pub faithful: bool,
}

impl EquivalenceReport {
    pub fn is_equivalence(&self) -> bool {
        self.essentially_surjective && self.full && self.faithful
    }
}

/// Essential surjectivity by searching for an isomorphism into each target
/// object; fullness and faithfulness hom-set by hom-set.
pub fn check_equivalence(f: &FinFunctor) -> EquivalenceReport {
    let (c, d) = (&f.source, &f.target);
    let essentially_surjective =
        (0..d.object_count()).all(|y| (0..c.object_count()).any(|x| d.are_isomorphic(f.on_object(x), y)));
    let mut full = true;
    let mut faithful = true;
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            let (fx, fy) = (f.on_object(x), f.on_object(y));
            let target_hom = match f.variance {
                Variance::Covariant => d.hom(fx, fy),
                Variance::Contravariant => d.hom(fy, fx),
            };
            let images: HashSet<usize> = c.hom(x, y).iter().map(|&h| f.on_morphism(h)).collect();
            faithful &= images.len() == c.hom(x, y).len();
            full &= target_hom.iter().all(|g| images.contains(g));
        }
    }
    EquivalenceReport {
        essentially_surjective,
        full,
        faithful,
    }
}

/// For each `(A, B)`, a map `Mor_C(A, G B) → Mor_D(F A, B)`.
pub type HomBijections = HashMap<(usize, usize), HashMap<usize, usize>>;

/// Checks that `φ` is a family of bijections natural in both variables:
/// `φ(f then m) = F(f) then φ(m)` and `φ(m then G(g)) = φ(m) then g`.
pub fn check_adjunction_finite(f: &FinFunctor, g: &FinFunctor, phi: &HomBijections) -> Result<Verdict, CategoryError> {
    if f.variance != Variance::Covariant
        || g.variance != Variance::Covariant
        || f.source != g.target
        || f.target != g.source
    {
        return Err(CategoryError::FunctorMismatch);
    }
    let (c, d) = (&f.source, &f.target);
    let name_c = |x: usize| c.objects()[x].as_str();
    let name_d = |y: usize| d.objects()[y].as_str();
    let empty = HashMap::new();
    let component = |a: usize, b: usize| phi.get(&(a, b)).unwrap_or(&empty);
    for a in 0..c.object_count() {
        for b in 0..d.object_count() {
            let domain: HashSet<usize> = c.hom(a, g.on_object(b)).into_iter().collect();
            let codomain: HashSet<usize> = d.hom(f.on_object(a), b).into_iter().collect();
            let map = component(a, b);
            let keys: HashSet<usize> = map.keys().copied().collect();
            let values: HashSet<usize> = map.values().copied().collect();
            if keys != domain || values != codomain || values.len() != keys.len() {
                return Ok(Verdict::fail(format!(
                    "component at ({}, {}) is not a bijection",
                    name_c(a),
                    name_d(b)
                )));
            }
        }
    }
    for a in 0..c.object_count() {
        for b in 0..d.object_count() {
            for (&m, &pm) in component(a, b) {
                for h in c.hom_into(a) {
                    let a0 = c.morphism(h).source;
                    let lhs = component(a0, b).get(&c.then(h, m).expect("typed"));
                    let rhs = d.then(f.on_morphism(h), pm);
                    if lhs.copied() != rhs {
                        return Ok(Verdict::fail(format!(
                            "naturality in the first variable fails for {} and {}",
                            c.morphism(h).label,
                            c.morphism(m).label
                        )));
                    }
                }
                for k in d.hom_out_of(b) {
                    let b1 = d.morphism(k).target;
                    let lhs = component(a, b1).get(&c.then(m, g.on_morphism(k)).expect("typed"));
                    let rhs = d.then(pm, k);
                    if lhs.copied() != rhs {
                        return Ok(Verdict::fail(format!(
                            "naturality in the second variable fails for {} and {}",
                            c.morphism(m).label,
                            d.morphism(k).label
                        )));
                    }
                }
            }
        }
    }
    Ok(Verdict::pass())
}

/// `φ = id` for `F = G = Id`.
pub fn identity_hom_bijections(c: &FinCategory) -> HomBijections {
    let mut phi = HomBijections::new();
    for a in 0..c.object_count() {
        for b in 0..c.object_count() {
            phi.insert((a, b), c.hom(a, b).into_iter().map(|m| (m, m)).collect());
        }
    }
    phi
}

impl FinCategory {
    fn hom_into(&self, x: usize) -> Vec<usize> {
        (0..self.morphisms.len()).filter(|&f| self.morphisms[f].target == x).collect()
    }

    fn hom_out_of(&self, x: usize) -> Vec<usize> {
        self.out_of(x)
    }
}

/// The quotient by a partition of each hom-set, given as a class id per
/// morphism, with the projection functor.
pub fn quotient_category(c: &Arc<FinCategory>, class_of: &[usize]) -> Result<(FinCategory, FinFunctor), CategoryError> {
    if class_of.len() != c.morphism_count() {
        return Err(CategoryError::Invalid("one class id per morphism is required".into()));
    }
    let m = c.morphism_count();
    let label = |f: usize| c.morphism(f).label.clone();
    for f in 0..m {
        for f2 in f + 1..m {
            if class_of[f] != class_of[f2] {
                continue;
            }
            let (a, b) = (c.morphism(f), c.morphism(f2));
            if (a.source, a.target) != (b.source, b.target) {
                return Err(CategoryError::ClassAcrossHomSets(label(f), label(f2)));
            }
            for g in c.out_of(a.target) {
                if class_of[c.then(f, g).unwrap()] != class_of[c.then(f2, g).unwrap()] {
                    return Err(CategoryError::NotCongruence(label(f), label(f2), label(g)));
                }
            }
            for g in c.hom_into(a.source) {
                if class_of[c.then(g, f).unwrap()] != class_of[c.then(g, f2).unwrap()] {
                    return Err(CategoryError::NotCongruence(label(f), label(f2), label(g)));
                }
            }
        }
    }
    // Classes in order of first appearance; each labelled by its first member.
    let mut class_index: HashMap<usize, usize> = HashMap::new();
    let mut reps = Vec::new();
    let mut projection = Vec::with_capacity(m);
    for (f, &k) in class_of.iter().enumerate() {
        let idx = *class_index.entry(k).or_insert_with(|| {
            reps.push(f);
            reps.len() - 1
        });
        projection.push(idx);
    }
    let morphisms: Vec<Morphism> = reps
        .iter()
        .map(|&f| {
            let mo = c.morphism(f);
            let members = (0..m).filter(|&g| class_of[g] == class_of[f]).count();
            Morphism {
                label: if members > 1 { format!("[{}]", mo.label) } else { mo.label.clone() },
                source: mo.source,
                target: mo.target,
            }
        })
        .collect();
    let q = morphisms.len();
    let mut table = vec![None; q * q];
    for (f, g, h) in c.composition_table() {
        table[projection[f] * q + projection[g]] = Some(projection[h]);
    }
    let identities = c.identities().iter().map(|&i| projection[i]).collect();
    let quotient = FinCategory::from_parts(c.objects().to_vec(), morphisms, identities, table)?;
    let functor = FinFunctor::new(
        c.clone(),
        Arc::new(quotient.clone()),
        (0..c.object_count()).collect(),
        projection,
        Variance::Covariant,
    )?;
    Ok((quotient, functor))
}
