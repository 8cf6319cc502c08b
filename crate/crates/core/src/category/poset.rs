use std::collections::HashMap;
use std::sync::Arc;

use super::{CategoryError, FinCategory, FinFunctor, HomBijections, Morphism, Variance, Verdict};

/// A finite partial order stored as its full `≤` table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity of the given table.
    pub fn new(elements: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self, CategoryError> {
        let n = elements.len();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(CategoryError::Invalid("order table has the wrong shape".into()));
        }
        for i in 0..n {
            if !leq[i][i] {
                return Err(CategoryError::NotReflexive(elements[i].clone()));
            }
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(CategoryError::NotAntisymmetric(elements[i].clone(), elements[j].clone()));
                }
                for k in 0..n {
                    if leq[i][j] && leq[j][k] && !leq[i][k] {
                        return Err(CategoryError::NotTransitive(
                            elements[i].clone(),
                            elements[j].clone(),
                            elements[k].clone(),
                        ));
                    }
                }
            }
        }
        Ok(Self { elements, leq })
    }

    pub fn from_fn(elements: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self, CategoryError> {
        let n = elements.len();
        let table = (0..n).map(|i| (0..n).map(|j| leq(i, j)).collect()).collect();
        Self::new(elements, table)
    }

    /// The relation is exactly the listed pairs; nothing is closed up.
    pub fn from_pairs<S: AsRef<str>>(elements: &[S], pairs: &[(S, S)]) -> Result<Self, CategoryError> {
        let elements: Vec<String> = elements.iter().map(|e| e.as_ref().to_string()).collect();
        let idx = |l: &str| {
            elements
                .iter()
                .position(|e| e == l)
                .ok_or_else(|| CategoryError::UnknownObject(l.to_string()))
        };
        let n = elements.len();
        let mut leq = vec![vec![false; n]; n];
        for (a, b) in pairs {
            leq[idx(a.as_ref())?][idx(b.as_ref())?] = true;
        }
        Self::new(elements, leq)
    }

    pub fn discrete<S: AsRef<str>>(elements: &[S]) -> Self {
        let elements = elements.iter().map(|e| e.as_ref().to_string()).collect();
        Self::from_fn(elements, |i, j| i == j).expect("equality is an order")
    }

    /// `1 < 2 < … < n`.
    pub fn chain(n: usize) -> Self {
        Self::from_fn((1..=n).map(|i| i.to_string()).collect(), |i, j| i <= j).expect("chain")
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e == label)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// The greatest element, if any.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&t| (0..self.len()).all(|i| self.leq[i][t]))
    }
}

/// Divisors of `n` ordered by divisibility.
pub fn divisibility_poset(n: u64) -> Poset {
    let divisors: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
    Poset::from_fn(divisors.iter().map(u64::to_string).collect(), |i, j| divisors[j] % divisors[i] == 0)
        .expect("divisibility is an order")
}

fn arrow_label(p: &Poset, i: usize, j: usize) -> String {
    format!("{}<={}", p.elements[i], p.elements[j])
}

/// One morphism `i<=j` exactly when `i ≤ j`.
pub fn poset_to_category(p: &Poset) -> FinCategory {
    let n = p.len();
    let mut morphisms = Vec::new();
    let mut index = HashMap::new();
    for i in 0..n {
        for j in 0..n {
            if p.leq[i][j] {
                index.insert((i, j), morphisms.len());
                morphisms.push(Morphism {
                    label: arrow_label(p, i, j),
                    source: i,
                    target: j,
                });
            }
        }
    }
    let m = morphisms.len();
    let mut table = vec![None; m * m];
    for (f, mf) in morphisms.iter().enumerate() {
        for (g, mg) in morphisms.iter().enumerate() {
            if mf.target == mg.source {
                table[f * m + g] = Some(index[&(mf.source, mg.target)]);
            }
        }
    }
    let identities = (0..n).map(|i| index[&(i, i)]).collect();
    FinCategory::from_parts(p.elements.clone(), morphisms, identities, table).expect("a poset is a category")
}

/// An order-preserving map between posets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonotoneMap {
    source: Arc<Poset>,
    target: Arc<Poset>,
    map: Vec<usize>,
}

impl MonotoneMap {
    pub fn new(source: Arc<Poset>, target: Arc<Poset>, map: Vec<usize>) -> Result<Self, CategoryError> {
        if map.len() != source.len() || map.iter().any(|&y| y >= target.len()) {
            return Err(CategoryError::FunctorShape);
        }
        for i in 0..source.len() {
            for j in 0..source.len() {
                if source.leq[i][j] && !target.leq[map[i]][map[j]] {
                    return Err(CategoryError::NotMonotone(
                        source.elements[i].clone(),
                        source.elements[j].clone(),
                    ));
                }
            }
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(p: Arc<Poset>) -> Self {
        let map = (0..p.len()).collect();
        Self::new(p.clone(), p, map).expect("identity is monotone")
    }

    pub fn source(&self) -> &Arc<Poset> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Poset> {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }
}

/// The functor `C_I → C_J` induced by a monotone map.
pub fn functor_from_monotone(f: &MonotoneMap) -> FinFunctor {
    let c = Arc::new(poset_to_category(&f.source));
    let d = Arc::new(poset_to_category(&f.target));
    let morphism_map = c
        .morphisms()
        .iter()
        .map(|m| {
            d.morphism_index(&arrow_label(&f.target, f.map[m.source], f.map[m.target]))
                .expect("monotone maps preserve ≤")
        })
        .collect();
    FinFunctor::new(c, d, f.map.clone(), morphism_map, Variance::Covariant).expect("monotone maps are functors")
}

/// Recovers the monotone map of a covariant functor between poset
/// categories and checks the functor is the one it induces.
pub fn monotone_from_functor(
    functor: &FinFunctor,
    source: Arc<Poset>,
    target: Arc<Poset>,
) -> Result<MonotoneMap, CategoryError> {
    if functor.variance() != Variance::Covariant
        || **functor.source() != poset_to_category(&source)
        || **functor.target() != poset_to_category(&target)
    {
        return Err(CategoryError::NotPosetCategory);
    }
    let m = MonotoneMap::new(source, target, functor.object_map().to_vec())?;
    if functor_from_monotone(&m) != *functor {
        return Err(CategoryError::NotPosetCategory);
    }
    Ok(m)
}

/// `F(a) ≤ b ⇔ a ≤ G(b)` for all `a ∈ I`, `b ∈ J`.
pub fn check_galois_adjunction(f: &MonotoneMap, g: &MonotoneMap) -> Result<Verdict, CategoryError> {
    if f.source != g.target || f.target != g.source {
        return Err(CategoryError::FunctorMismatch);
    }
    let (i, j) = (&f.source, &f.target);
    for a in 0..i.len() {
        for b in 0..j.len() {
            if j.leq(f.apply(a), b) != i.leq(a, g.apply(b)) {
                return Ok(Verdict::fail(format!(
                    "F({}) ≤ {} and {} ≤ G({}) disagree",
                    i.elements[a], j.elements[b], i.elements[a], j.elements[b]
                )));
            }
        }
    }
    Ok(Verdict::pass())
}

/// The hom-set maps of a Galois pair: the single arrow `a<=G(b)` goes to
/// the single arrow `F(a)<=b` whenever both exist.
pub fn galois_hom_bijections(f: &MonotoneMap, g: &MonotoneMap) -> HomBijections {
    let c = poset_to_category(&f.source);
    let d = poset_to_category(&f.target);
    let mut phi = HomBijections::new();
    for a in 0..f.source.len() {
        for b in 0..f.target.len() {
            let mut component = HashMap::new();
            if let (Some(&m), Some(&n)) = (c.hom(a, g.apply(b)).first(), d.hom(f.apply(a), b).first()) {
                component.insert(m, n);
            }
            phi.insert((a, b), component);
        }
    }
    phi
}

/// A finite topological space, its closed sets, and the closure operator
/// as the left adjoint of the inclusion of closed sets into all subsets.
#[derive(Clone, Debug)]
pub struct ClosureExample {
    pub subsets: Arc<Poset>,
    pub closed: Arc<Poset>,
    pub closure: MonotoneMap,
    pub inclusion: MonotoneMap,
    closed_masks: Vec<u32>,
}

fn subset_label(mask: u32, points: usize) -> String {
    let items: Vec<String> = (0..points).filter(|p| mask >> p & 1 == 1).map(|p| (p + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl ClosureExample {
    /// Points are `1..=points`; open sets are bitmasks (bit `p-1` for `p`).
    pub fn new(points: usize, opens: &[u32]) -> Result<Self, CategoryError> {
        if points > 16 {
            return Err(CategoryError::Invalid("at most 16 points".into()));
        }
        let full = (1u32 << points) - 1;
        let is_open = |m: u32| opens.contains(&m);
        if !is_open(0) || !is_open(full) || opens.iter().any(|&o| o & !full != 0) {
            return Err(CategoryError::Invalid("opens must contain the empty set and the space".into()));
        }
        for &u in opens {
            for &v in opens {
                if !is_open(u | v) || !is_open(u & v) {
                    return Err(CategoryError::Invalid("opens are not closed under unions and intersections".into()));
                }
            }
        }
        let mut closed_masks: Vec<u32> = opens.iter().map(|o| full & !o).collect();
        closed_masks.sort_unstable();
        closed_masks.dedup();
        let masks: Vec<u32> = (0..=full).collect();
        let subsets = Arc::new(Poset::from_fn(
            masks.iter().map(|&m| subset_label(m, points)).collect(),
            |i, j| masks[i] & !masks[j] == 0,
        )?);
        let closed = Arc::new(Poset::from_fn(
            closed_masks.iter().map(|&m| subset_label(m, points)).collect(),
            |i, j| closed_masks[i] & !closed_masks[j] == 0,
        )?);
        let closure_map = masks
            .iter()
            .map(|&a| {
                let hull = closed_masks.iter().filter(|&&c| a & !c == 0).fold(full, |acc, &c| acc & c);
                closed_masks.iter().position(|&c| c == hull).expect("closed sets are closed under intersection")
            })
            .collect();
        let inclusion_map = closed_masks.iter().map(|&c| c as usize).collect();
        Ok(Self {
            closure: MonotoneMap::new(subsets.clone(), closed.clone(), closure_map)?,
            inclusion: MonotoneMap::new(closed.clone(), subsets.clone(), inclusion_map)?,
            subsets,
            closed,
            closed_masks,
        })
    }

    /// `X = {1, 2}` with opens `∅`, `{1}`, `X`.
    pub fn sierpinski() -> Self {
        Self::new(2, &[0b00, 0b01, 0b11]).expect("valid topology")
    }

    /// The closure of a subset given by its label, as a label.
    pub fn closure_of(&self, subset: &str) -> Option<&str> {
        let i = self.subsets.index(subset)?;
        Some(&self.closed.elements()[self.closure.apply(i)])
    }

    pub fn closed_masks(&self) -> &[u32] {
        &self.closed_masks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::category::check_adjunction_finite;

    #[test]
    fn divisors_of_twelve() {
        let p = divisibility_poset(12);
        assert_eq!(p.elements(), &["1", "2", "3", "4", "6", "12"]);
        let c = poset_to_category(&p);
        let (two, twelve) = (p.index("2").unwrap(), p.index("12").unwrap());
        assert_eq!(c.hom(two, twelve).len(), 1);
        assert_eq!(c.hom(twelve, two).len(), 0);
        // pairs d | e among the divisors of 12
        let oracle = (1..=12u64)
            .filter(|d| 12 % d == 0)
            .map(|d| (1..=12u64).filter(|e| 12 % e == 0 && e % d == 0).count())
            .sum::<usize>();
        assert_eq!(c.morphism_count(), oracle);
    }

    #[test]
    fn small_posets() {
        assert_eq!(poset_to_category(&Poset::discrete(&["a", "b", "c"])).morphism_count(), 3);
        assert_eq!(poset_to_category(&Poset::chain(3)).morphism_count(), 6);
        assert_eq!(
            Poset::from_pairs(&["a", "b"], &[("a", "a"), ("b", "b"), ("a", "b"), ("b", "a")]).unwrap_err(),
            CategoryError::NotAntisymmetric("a".into(), "b".into())
        );
        assert_eq!(
            Poset::from_pairs(&["a", "b"], &[("a", "a")]).unwrap_err(),
            CategoryError::NotReflexive("b".into())
        );
        assert!(matches!(
            Poset::from_pairs(&["a", "b", "c"], &[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]),
            Err(CategoryError::NotTransitive(..))
        ));
    }

    #[test]
    fn sierpinski_closure() {
        let ex = ClosureExample::sierpinski();
        assert_eq!(ex.closed.elements(), &["{}", "{2}", "{1,2}"]);
        assert_eq!(ex.closure_of("{1}"), Some("{1,2}"));
        assert_eq!(ex.closure_of("{2}"), Some("{2}"));
        assert_eq!(ex.closure_of("{}"), Some("{}"));
        assert_eq!(poset_to_category(&ex.closed).object_count(), 3);
        assert!(check_galois_adjunction(&ex.closure, &ex.inclusion).unwrap().holds);
        let f = functor_from_monotone(&ex.closure);
        let g = functor_from_monotone(&ex.inclusion);
        let phi = galois_hom_bijections(&ex.closure, &ex.inclusion);
        assert!(check_adjunction_finite(&f, &g, &phi).unwrap().holds);
    }

    #[test]
    fn every_corruption_of_the_closure_pair_is_caught() {
        let ex = ClosureExample::sierpinski();
        let mut cases = 0;
        for (which, len) in [(0, ex.subsets.len()), (1, ex.closed.len())] {
            for i in 0..len {
                let (original, target_len) = if which == 0 {
                    (ex.closure.map().to_vec(), ex.closed.len())
                } else {
                    (ex.inclusion.map().to_vec(), ex.subsets.len())
                };
                for v in 0..target_len {
                    if v == original[i] {
                        continue;
                    }
                    cases += 1;
                    let mut map = original.clone();
                    map[i] = v;
                    let verdict = if which == 0 {
                        MonotoneMap::new(ex.subsets.clone(), ex.closed.clone(), map)
                            .map(|f| check_galois_adjunction(&f, &ex.inclusion).unwrap())
                    } else {
                        MonotoneMap::new(ex.closed.clone(), ex.subsets.clone(), map)
                            .map(|g| check_galois_adjunction(&ex.closure, &g).unwrap())
                    };
                    assert!(verdict.map_or(true, |v| !v.holds));
                }
            }
        }
        assert_eq!(cases, 4 * 2 + 3 * 3);
    }

    #[test]
    fn monotone_maps_and_functors_correspond() {
        let ex = ClosureExample::sierpinski();
        let f = functor_from_monotone(&ex.inclusion);
        let back = monotone_from_functor(&f, ex.closed.clone(), ex.subsets.clone()).unwrap();
        assert_eq!(back, ex.inclusion);
        let p = Arc::new(divisibility_poset(12));
        let id = functor_from_monotone(&MonotoneMap::identity(p.clone()));
        assert_eq!(id, FinFunctor::identity(Arc::new(poset_to_category(&p))));
        let top = p.top().unwrap();
        let constant = MonotoneMap::new(p.clone(), p.clone(), vec![top; p.len()]).unwrap();
        functor_from_monotone(&constant).validate().unwrap();
        let chain = Arc::new(Poset::chain(2));
        let flip = MonotoneMap::new(chain.clone(), chain, vec![1, 0]);
        assert_eq!(flip.unwrap_err(), CategoryError::NotMonotone("1".into(), "2".into()));
    }

    #[test]
    fn galois_matches_hom_set_adjunction_on_all_pairs_of_chain_maps() {
        let i = Arc::new(Poset::chain(3));
        let maps: Vec<Vec<usize>> = (0..27)
            .map(|k| vec![k % 3, k / 3 % 3, k / 9])
            .filter(|m| m[0] <= m[1] && m[1] <= m[2])
            .collect();
        for fm in &maps {
            for gm in &maps {
                let f = MonotoneMap::new(i.clone(), i.clone(), fm.clone()).unwrap();
                let g = MonotoneMap::new(i.clone(), i.clone(), gm.clone()).unwrap();
                let galois = check_galois_adjunction(&f, &g).unwrap().holds;
                let phi = galois_hom_bijections(&f, &g);
                let hom = check_adjunction_finite(&functor_from_monotone(&f), &functor_from_monotone(&g), &phi)
                    .unwrap()
                    .holds;
                assert_eq!(galois, hom, "{fm:?} {gm:?}");
            }
        }
    }

    #[test]
    fn rejects_non_topologies() {
        assert!(ClosureExample::new(2, &[0b00, 0b01, 0b10, 0b11]).is_ok());
        assert!(ClosureExample::new(2, &[0b00, 0b01, 0b10]).is_err());
        assert!(ClosureExample::new(3, &[0b000, 0b001, 0b010, 0b111]).is_err());
    }
}
