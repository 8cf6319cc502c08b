//! The worked examples as a checklist of named, exact checks.

use std::error::Error;
use std::fmt;
use std::sync::Arc;

use crate::adjunction::gabriel_vquiver;
use crate::algebra::{
    direct_sum, group_algebra, matrix_algebra, quotient_algebra, truncated_poly, upper_triangular, AlgebraHom,
    CayleyTable, SCAlgebra,
};
use crate::bound::{bound_algebra, check_admissible, truncated_path_algebra, RelationSet};
use crate::category::{
    check_adjunction_finite, check_galois_adjunction, divisibility_poset, functor_from_monotone,
    galois_hom_bijections, poset_to_category, ClosureExample,
};
use crate::corpus::constant_diagonal_subalgebra;
use crate::linalg::{int, unit_vector, Subspace, Vector};
use crate::quiver::Quiver;
use crate::repcat::{AlgebraModule, Side};
use crate::vquiver::{path_algebra_vq, Vquiver};

type Outcome = Result<String, Box<dyn Error>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GalleryItem {
    pub id: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for GalleryItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", if self.passed { "PASS" } else { "FAIL" }, self.id, self.detail)
    }
}

fn fail(msg: impl Into<String>) -> Outcome {
    Err(msg.into().into())
}

fn ensure(cond: bool, ok: impl Into<String>, bad: impl Into<String>) -> Outcome {
    if cond {
        Ok(ok.into())
    } else {
        fail(bad)
    }
}

fn a2() -> Quiver {
    Quiver::from_strs(&["1", "2"], &[("h", "1", "2")]).expect("well formed")
}

fn two_loops() -> Quiver {
    Quiver::from_strs(&["1"], &[("alpha", "1", "1"), ("beta", "1", "1")]).expect("well formed")
}

fn one_loop() -> Quiver {
    Quiver::from_strs(&["1"], &[("x", "1", "1")]).expect("well formed")
}

fn basis(a: &SCAlgebra, label: &str) -> Vector {
    unit_vector(a.dim(), a.label_index(label).expect("known label"))
}

/// `p1 ↦ E11`, `p2 ↦ E22`, `h ↦ E12`.
fn a2_to_u2() -> Result<AlgebraHom, Box<dyn Error>> {
    let kq = Arc::new(a2().path_algebra()?);
    let u2 = Arc::new(upper_triangular(2)?);
    let images = ["E11", "E22", "E12"].map(|l| basis(&u2, l));
    Ok(AlgebraHom::from_images(kq, u2, &images)?)
}

/// Basis element `k` of the source goes to `x^k`.
fn to_truncated_poly(a: Arc<SCAlgebra>) -> Result<AlgebraHom, Box<dyn Error>> {
    let t = Arc::new(truncated_poly(a.dim())?);
    let images: Vec<Vector> = (0..a.dim()).map(|k| unit_vector(t.dim(), k)).collect();
    Ok(AlgebraHom::from_images(a, t, &images)?)
}

fn quiver_a2() -> Outcome {
    let q = a2();
    ensure(
        q.vertex_count() == 2 && q.arrow_count() == 1,
        "|Q0| = 2, |Q1| = 1",
        "wrong vertex or arrow count",
    )
}

fn quiver_two_loops() -> Outcome {
    let q = two_loops();
    ensure(q.arrow_count() == 2 && !q.is_acyclic(), "two loops at one vertex", "unexpected shape")
}

fn quiver_loop_cyclic() -> Outcome {
    ensure(!one_loop().is_acyclic(), "a loop is an oriented cycle", "loop reported acyclic")
}

fn paths_a2() -> Outcome {
    let q = a2();
    let labels: Vec<String> = q.enumerate_paths(4).iter().map(|p| p.label(&q)).collect();
    ensure(labels == ["p1", "p2", "h"], "paths p1 p2 h", format!("paths {labels:?}"))
}

fn path_algebra_a2() -> Outcome {
    let kq = a2().path_algebra()?;
    let [p1, p2, h] = ["p1", "p2", "h"].map(|l| basis(&kq, l));
    let zero = vec![int(0); 3];
    let ok = kq.dim() == 3
        && kq.mul(&p1, &h) == h
        && kq.mul(&h, &p2) == h
        && kq.mul(&h, &p1) == zero
        && kq.mul(&p2, &h) == zero
        && kq.mul(&h, &h) == zero;
    ensure(ok, "dim 3, p1*h = h*p2 = h, h*p1 = p2*h = h*h = 0", "multiplication table differs")
}

fn path_algebra_a2_is_u2() -> Outcome {
    let iso = a2_to_u2()?;
    ensure(iso.is_isomorphism(), "p1->E11, p2->E22, h->E12 is an isomorphism", "map is not bijective")
}

fn small_algebras() -> Outcome {
    let k = truncated_poly(1)?;
    let dual = truncated_poly(2)?;
    let x = basis(&dual, "x");
    ensure(
        k.dim() == 1 && dual.dim() == 2 && dual.mul(&x, &x) == vec![int(0); 2],
        "Q has dim 1; Q[x]/(x^2) has dim 2 with x^2 = 0",
        "wrong dimensions",
    )
}

fn builder_dimensions() -> Outcome {
    let u2 = upper_triangular(2)?;
    let m2 = matrix_algebra(2)?;
    let c3 = group_algebra(&CayleyTable::cyclic(3))?;
    ensure(
        u2.dim() == 3 && m2.dim() == 4 && c3.dim() == 3 && c3.is_commutative(),
        "dim U2 = 3, dim M2 = 4, Q[Z/3] has dim 3 and is commutative",
        "builder dimensions differ",
    )
}

fn radical_u2() -> Outcome {
    let u2 = upper_triangular(2)?;
    let rad = u2.radical();
    let e12 = Subspace::span(&[basis(&u2, "E12")], 3)?;
    ensure(
        *rad.radical() == e12 && rad.power(2).is_zero(),
        "J = span{E12}, J^2 = 0",
        format!("dim J = {}", rad.radical().dim()),
    )
}

fn radical_truncated_poly() -> Outcome {
    for m in 2..=6 {
        let a = truncated_poly(m)?;
        let rad = a.radical();
        for i in 1..m {
            let expected: Vec<Vector> = (i..m).map(|k| unit_vector(m, k)).collect();
            if *rad.power(i) != Subspace::span(&expected, m)? {
                return fail(format!("J^{i} != (x^{i}) for m = {m}"));
            }
        }
    }
    Ok("J^i = (x^i) for m = 2..6".into())
}

fn radical_s3() -> Outcome {
    let a = group_algebra(&CayleyTable::symmetric3())?;
    ensure(a.is_semisimple(), "J(Q[S3]) = 0", "nonzero radical")
}

fn matrix_sum_semisimple() -> Outcome {
    let a = direct_sum(&matrix_algebra(2)?, &matrix_algebra(1)?);
    ensure(a.predicates()?.semisimple, "M2 x M1 is semisimple", "nonzero radical")
}

fn upper_triangular_basic() -> Outcome {
    for n in 2..=4 {
        let a = upper_triangular(n)?;
        if !a.predicates()?.basic || a.dim() - a.radical().radical().dim() != n {
            return fail(format!("U{n} is not basic with top Q^{n}"));
        }
    }
    Ok("U_n basic with A/J of dim n, n = 2..4".into())
}

fn local_idempotent() -> Outcome {
    let a = Arc::new(truncated_poly(4)?);
    let g = gabriel_vquiver(&a)?;
    let ids = &g.idempotents().idempotents;
    ensure(
        ids.len() == 1 && ids[0] == a.unit(),
        "the only primitive idempotent of Q[x]/(x^4) is 1",
        "unexpected idempotents",
    )
}

fn projection_preserves_radical() -> Outcome {
    let u3 = Arc::new(upper_triangular(3)?);
    let ideal = Subspace::span(&[basis(&u3, "E13")], u3.dim())?;
    let q = quotient_algebra(&u3, &ideal)?;
    let image = q.projection.map_subspace(u3.radical().radical());
    ensure(
        q.projection.is_surjective() && image == *q.algebra.radical().radical(),
        "U3 -> U3/(E13) maps J onto J",
        "image of J differs from J",
    )
}

fn modules() -> Outcome {
    for a in [upper_triangular(2)?, truncated_poly(3)?, group_algebra(&CayleyTable::symmetric3())?] {
        let a = Arc::new(a);
        AlgebraModule::zero(a.clone(), Side::Left).validate()?;
        AlgebraModule::left_regular(a).validate()?;
    }
    Ok("zero and regular representations validate".into())
}

fn vquiver_a2() -> Outcome {
    let vq = Vquiver::from_dims(["e", "f"], &[("e", "f", 1)])?;
    let a = Arc::new(path_algebra_vq(&vq)?);
    let u2 = Arc::new(upper_triangular(2)?);
    let images = ["E11", "E22", "E12"].map(|l| basis(&u2, l));
    let iso = AlgebraHom::from_images(a.clone(), u2, &images)?;
    ensure(
        a.dim() == 3 && iso.is_isomorphism(),
        "k[VQ] has dim 3 and is U2",
        "not isomorphic to U2",
    )
}

fn gabriel_local() -> Outcome {
    for m in 2..=5 {
        let g = gabriel_vquiver(&Arc::new(truncated_poly(m)?))?;
        if g.underlying.dim_matrix() != vec![vec![1]] {
            return fail(format!("m = {m}: {:?}", g.underlying.dim_matrix()));
        }
    }
    Ok("one vertex with one loop, m = 2..5".into())
}

fn gabriel_mixed() -> Outcome {
    let a = Arc::new(crate::algebra::triangular_dual_numbers());
    let g = gabriel_vquiver(&a)?;
    let (Some(Some(v1)), Some(Some(v2))) = (g.orbit_of(&basis(&a, "e1")), g.orbit_of(&basis(&a, "e2"))) else {
        return fail("diagonal idempotents are not vertices");
    };
    let d = g.underlying.dim_matrix();
    ensure(
        d[v1][v2] == 1 && d[v2][v2] == 1 && d[v1][v1] == 0 && d[v2][v1] == 0,
        "dims (1,2) -> 1, (2,2) -> 1, others 0",
        format!("dims {d:?}"),
    )
}

fn truncated_loop() -> Outcome {
    for m in 2..=5 {
        let t = Arc::new(truncated_path_algebra(&one_loop(), m - 1)?);
        if !to_truncated_poly(t)?.is_isomorphism() {
            return fail(format!("m = {m}"));
        }
    }
    Ok("loop truncated at length m-1 is Q[x]/(x^m), m = 2..5".into())
}

fn two_loop_relations(max_len: usize) -> Result<RelationSet, Box<dyn Error>> {
    Ok(RelationSet::monomial(two_loops(), &[&["alpha", "alpha"], &["beta", "beta"], &["alpha", "beta"]], max_len)?)
}

fn two_loop_admissible() -> Outcome {
    let adm = check_admissible(&two_loop_relations(3)?)?;
    ensure(adm.admissible() && adm.m == Some(3), "admissible with m = 3", format!("{:?} m = {:?}", adm.verdict, adm.m))
}

fn bound_a2() -> Outcome {
    let b = bound_algebra(&RelationSet::new(a2(), vec![], 1)?)?;
    let u2 = Arc::new(upper_triangular(2)?);
    let images = ["E11", "E22", "E12"].map(|l| basis(&u2, l));
    let iso = AlgebraHom::from_images(b.algebra, u2, &images)?;
    ensure(iso.is_isomorphism(), "kQ(1->2) with no relations is U2", "not isomorphic")
}

fn bound_two_loops() -> Outcome {
    let b = bound_algebra(&two_loop_relations(3)?)?;
    let c = Arc::new(constant_diagonal_subalgebra()?);
    let images = ["I", "E23", "E12", "E13"].map(|l| basis(&c, l));
    let iso = AlgebraHom::from_images(b.algebra.clone(), c, &images)?;
    ensure(
        b.algebra.labels() == ["p1", "alpha", "beta", "beta.alpha"] && iso.is_isomorphism(),
        "basis p1 alpha beta beta.alpha; alpha->E23, beta->E12 onto C",
        "presentation of C differs",
    )
}

fn bound_loop_power() -> Outcome {
    for m in 2..=5 {
        let labels = vec!["x"; m];
        let b = bound_algebra(&RelationSet::monomial(one_loop(), &[&labels], m)?)?;
        if !to_truncated_poly(b.algebra)?.is_isomorphism() {
            return fail(format!("m = {m}"));
        }
    }
    Ok("loop modulo x^m is Q[x]/(x^m), m = 2..5".into())
}

fn divisors_of_twelve() -> Outcome {
    let p = divisibility_poset(12);
    let c = poset_to_category(&p);
    c.validate()?;
    let (i2, i12) = (p.index("2").expect("2 | 12"), p.index("12").expect("12 | 12"));
    ensure(
        c.hom(i2, i12).len() == 1 && c.hom(i12, i2).is_empty(),
        "|Mor(2,12)| = 1, |Mor(12,2)| = 0",
        "wrong hom-set sizes",
    )
}

fn closed_sets() -> Outcome {
    let ex = ClosureExample::sierpinski();
    let c = poset_to_category(&ex.closed);
    c.validate()?;
    ensure(
        c.object_count() == 3,
        format!("closed sets {}", ex.closed.elements().join(" ")),
        "wrong number of closed sets",
    )
}

fn closure_galois() -> Outcome {
    let ex = ClosureExample::sierpinski();
    let galois = check_galois_adjunction(&ex.closure, &ex.inclusion)?;
    let phi = galois_hom_bijections(&ex.closure, &ex.inclusion);
    let adj = check_adjunction_finite(&functor_from_monotone(&ex.closure), &functor_from_monotone(&ex.inclusion), &phi)?;
    let closure = ex.closure_of("{1}");
    ensure(
        galois.holds && adj.holds && closure == Some("{1,2}"),
        "closure -| inclusion; closure({1}) = {1,2}",
        format!("galois {} adjunction {} closure {closure:?}", galois.holds, adj.holds),
    )
}

fn cli_radical() -> Outcome {
    let dim = upper_triangular(2)?.radical().radical().dim();
    ensure(dim == 1, "dim J(U2) = 1", format!("dim J(U2) = {dim}"))
}

pub const GALLERY: &[(&str, fn() -> Outcome)] = &[
    ("quiver-a2", quiver_a2),
    ("quiver-two-loops", quiver_two_loops),
    ("quiver-loop-cyclic", quiver_loop_cyclic),
    ("paths-a2", paths_a2),
    ("path-algebra-a2", path_algebra_a2),
    ("path-algebra-a2-iso-u2", path_algebra_a2_is_u2),
    ("algebra-small", small_algebras),
    ("algebra-builders", builder_dimensions),
    ("radical-u2", radical_u2),
    ("radical-truncated-poly", radical_truncated_poly),
    ("radical-s3", radical_s3),
    ("semisimple-matrix-sum", matrix_sum_semisimple),
    ("basic-upper-triangular", upper_triangular_basic),
    ("idempotent-local", local_idempotent),
    ("projection-radical", projection_preserves_radical),
    ("modules-zero-regular", modules),
    ("vquiver-a2", vquiver_a2),
    ("gabriel-local", gabriel_local),
    ("gabriel-mixed", gabriel_mixed),
    ("truncation-loop", truncated_loop),
    ("admissible-two-loops", two_loop_admissible),
    ("bound-a2", bound_a2),
    ("bound-two-loops-c", bound_two_loops),
    ("bound-loop-power", bound_loop_power),
    ("poset-divisors-12", divisors_of_twelve),
    ("poset-closed-sets", closed_sets),
    ("galois-closure", closure_galois),
    ("cli-radical-u2", cli_radical),
];

pub fn run_gallery() -> Vec<GalleryItem> {
    GALLERY
        .iter()
        .map(|(id, check)| match check() {
            Ok(detail) => GalleryItem { id, passed: true, detail },
            Err(e) => GalleryItem {
                id,
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect()
}
