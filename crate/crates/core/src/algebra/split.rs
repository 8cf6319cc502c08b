//! Primitive idempotents of split commutative semisimple algebras, the
//! semisimple/basic/connected predicates, and lifting idempotents modulo the
//! radical.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{quotient_algebra, AlgebraError, Quotient, SCAlgebra};
use crate::linalg::{
    add_scaled, int, is_zero_vector, scale_vector, solve_in_span, sub_vectors, unit_vector, zero_vector, Scalar,
    Vector,
};

/// Trial division stops here; larger constants are reported as an error
/// rather than stalling.
const DIVISOR_SEARCH_LIMIT: u64 = 10_000_000;

/// Minimal polynomial of `x` inside a subalgebra whose identity is `one`,
/// as coefficients from the constant term upwards (monic).
pub fn minimal_polynomial(a: &SCAlgebra, one: &[Scalar], x: &[Scalar]) -> Vector {
    let mut powers: Vec<Vector> = vec![one.to_vec()];
    loop {
        let next = a.mul(powers.last().expect("nonempty"), x);
        if let Some(c) = solve_in_span(&powers, &next) {
            let mut poly: Vector = c.into_iter().map(|v| -v).collect();
            poly.push(Scalar::one());
            return poly;
        }
        powers.push(next);
    }
}

fn positive_divisors(n: &BigInt) -> Result<Vec<BigInt>, AlgebraError> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0u64;
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
        steps += 1;
        if steps > DIVISOR_SEARCH_LIMIT {
            return Err(AlgebraError::Internal("polynomial coefficients too large for root search".into()));
        }
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

fn eval(poly: &[Scalar], t: &Scalar) -> Scalar {
    poly.iter().rev().fold(Scalar::zero(), |acc, c| acc * t + c)
}

/// Distinct rational roots of a nonzero polynomial (constant term first),
/// in increasing order.
pub fn rational_roots(poly: &[Scalar]) -> Result<Vec<Scalar>, AlgebraError> {
    let mut p: Vec<Scalar> = poly.to_vec();
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.len() <= 1 {
        return Ok(Vec::new());
    }
    let mut roots = Vec::new();
    let lead_zeros = p.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        roots.push(Scalar::zero());
        p.drain(..lead_zeros);
    }
    if p.len() > 1 {
        let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = p.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect();
        let constant = &ints[0];
        let leading = ints.last().expect("degree at least one");
        for num in positive_divisors(constant)? {
            for den in positive_divisors(leading)? {
                for sign in [Sign::Plus, Sign::Minus] {
                    let candidate = Scalar::new(BigInt::from_biguint(sign, num.magnitude().clone()), den.clone());
                    if eval(&p, &candidate).is_zero() && !roots.contains(&candidate) {
                        roots.push(candidate);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

fn idempotent_order(a: &Vector, b: &Vector) -> Ordering {
    let first = |v: &Vector| v.iter().position(|c| !c.is_zero());
    first(a).cmp(&first(b)).then_with(|| b.cmp(a))
}

/// Primitive idempotents of a commutative semisimple algebra that splits
/// over Q, ordered by first nonzero coordinate. Fails with `NotSplit`
/// when some element has a minimal polynomial without enough rational roots.
pub fn split_commutative_semisimple(b: &SCAlgebra) -> Result<Vec<Vector>, AlgebraError> {
    if !b.is_commutative() {
        return Err(AlgebraError::NotBasic);
    }
    let n = b.dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut idempotents = vec![b.unit().to_vec()];
    for k in 0..n {
        let basis = unit_vector(n, k);
        let mut refined = Vec::with_capacity(idempotents.len());
        for f in &idempotents {
            let x = b.mul(f, &basis);
            let poly = minimal_polynomial(b, f, &x);
            let degree = poly.len() - 1;
            if degree <= 1 {
                refined.push(f.clone());
                continue;
            }
            let roots = rational_roots(&poly)?;
            if roots.len() < degree {
                return Err(AlgebraError::NotSplit);
            }
            for (i, lambda) in roots.iter().enumerate() {
                // Lagrange projector prod_{mu != lambda} (x - mu f) / (lambda - mu)
                let mut proj = f.clone();
                for (j, mu) in roots.iter().enumerate() {
                    if i == j {
                        continue;
                    }
                    let mut factor = x.clone();
                    add_scaled(&mut factor, &-mu.clone(), f);
                    proj = scale_vector(&(lambda - mu).recip(), &b.mul(&proj, &factor));
                }
                refined.push(proj);
            }
        }
        idempotents = refined;
    }
    idempotents.sort_by(idempotent_order);
    Ok(idempotents)
}

/// Results of the three structural tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AlgebraPredicates {
    pub semisimple: bool,
    pub basic: bool,
    pub connected: bool,
}

impl SCAlgebra {
    /// Semisimple (`J = 0`), basic (`A/J ≅ Q^n`) and connected (only trivial
    /// central idempotents). `NotSplit` when the center modulo its radical
    /// does not diagonalize over Q, so connectedness cannot be decided.
    pub fn predicates(&self) -> Result<AlgebraPredicates, AlgebraError> {
        Ok(AlgebraPredicates {
            semisimple: self.is_semisimple(),
            basic: self.is_basic()?,
            connected: self.central_idempotent_count()? == 1,
        })
    }

    /// Whether `A/J ≅ Q^n`; a commutative top that does not split over Q is
    /// a product of proper field extensions, so the answer is no.
    pub fn is_basic(&self) -> Result<bool, AlgebraError> {
        let top = radical_quotient(&Arc::new(self.clone()))?;
        if !top.algebra.is_commutative() {
            return Ok(false);
        }
        match split_commutative_semisimple(&top.algebra) {
            Ok(_) => Ok(true),
            Err(AlgebraError::NotSplit) => Ok(false),
            Err(e) => Err(e),
        }
    }

    /// Number of primitive central idempotents.
    pub fn central_idempotent_count(&self) -> Result<usize, AlgebraError> {
        let z = self.center();
        let labels = (0..z.dim()).map(|i| format!("z{i}")).collect();
        let center = Arc::new(self.subalgebra(z.basis(), labels)?);
        let top = radical_quotient(&center)?;
        Ok(split_commutative_semisimple(&top.algebra)?.len())
    }
}

/// `A/J(A)`.
pub fn radical_quotient(a: &Arc<SCAlgebra>) -> Result<Quotient, AlgebraError> {
    let radical = a.radical();
    quotient_algebra(a, radical.radical())
}

/// A complete set of orthogonal primitive idempotents of a basic algebra,
/// with their images in `A/J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentSet {
    pub idempotents: Vec<Vector>,
    /// `π(e_i)` in the basis of `A/J`; these are the primitive idempotents
    /// of `A/J` and do not depend on the lift.
    pub images: Vec<Vector>,
}

impl IdempotentSet {
    pub fn len(&self) -> usize {
        self.idempotents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idempotents.is_empty()
    }

    /// Idempotent, orthogonal, complete and primitive.
    pub fn verify(&self, a: &SCAlgebra) -> Result<(), AlgebraError> {
        let bad = |m: String| Err(AlgebraError::Internal(format!("idempotent set: {m}")));
        let n = a.dim();
        let mut sum = zero_vector(n);
        let j = a.radical();
        for (i, e) in self.idempotents.iter().enumerate() {
            for (k, f) in self.idempotents.iter().enumerate() {
                let ef = a.mul(e, f);
                let expected = if i == k { e.clone() } else { zero_vector(n) };
                if ef != expected {
                    return bad(format!("e{i}·e{k} has the wrong value"));
                }
            }
            let corner = a.corner(e, e, &a.full_space())?;
            let radical_corner = a.corner(e, e, j.radical())?;
            if corner.dim() != radical_corner.dim() + 1 {
                return bad(format!("e{i} is not primitive"));
            }
            add_scaled(&mut sum, &Scalar::one(), e);
        }
        if sum != a.unit() {
            return bad("idempotents do not sum to 1".into());
        }
        Ok(())
    }

    /// `u e u^{-1}` for each idempotent. Images in `A/J` are unchanged when
    /// `u ≡ 1` modulo `J`.
    pub fn conjugate(&self, a: &SCAlgebra, u: &[Scalar]) -> Option<IdempotentSet> {
        let inv = a.inverse(u)?;
        Some(IdempotentSet {
            idempotents: self.idempotents.iter().map(|e| a.mul(&a.mul(u, e), &inv)).collect(),
            images: self.images.clone(),
        })
    }
}

fn iteration_cap(dim: usize) -> usize {
    let mut bits = 0;
    while (1usize << bits) < dim.max(1) {
        bits += 1;
    }
    bits + 1
}

/// `e ← 3e² − 2e³` until idempotent.
fn newton(a: &SCAlgebra, mut e: Vector) -> Result<Vector, AlgebraError> {
    let cap = iteration_cap(a.dim());
    for _ in 0..=cap {
        let e2 = a.mul(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.mul(&e2, &e);
        e = sub_vectors(&scale_vector(&int(3), &e2), &scale_vector(&int(2), &e3));
    }
    Err(AlgebraError::Internal("idempotent lifting did not converge".into()))
}

/// Lifts the primitive idempotents of `A/J ≅ Q^n` to a complete orthogonal
/// set in `A`.
pub fn lift_idempotents(a: &Arc<SCAlgebra>) -> Result<IdempotentSet, AlgebraError> {
    let top = radical_quotient(a)?;
    if !top.algebra.is_commutative() {
        return Err(AlgebraError::NotBasic);
    }
    let images = split_commutative_semisimple(&top.algebra)?;
    lift_with_images(a, &top, images)
}

pub(crate) fn lift_with_images(
    a: &SCAlgebra,
    top: &Quotient,
    images: Vec<Vector>,
) -> Result<IdempotentSet, AlgebraError> {
    let one = a.unit().to_vec();
    let mut taken = zero_vector(a.dim());
    let mut idempotents = Vec::with_capacity(images.len());
    for q in &images {
        let lift = top.lift(q);
        let complement = sub_vectors(&one, &taken);
        let squeezed = a.mul(&a.mul(&complement, &lift), &complement);
        let e = newton(a, squeezed)?;
        if is_zero_vector(&e) {
            return Err(AlgebraError::Internal("lifted idempotent vanished".into()));
        }
        add_scaled(&mut taken, &Scalar::one(), &e);
        idempotents.push(e);
    }
    let set = IdempotentSet { idempotents, images };
    set.verify(a)?;
    Ok(set)
}

/// The primitive idempotents of `A/J` for a basic algebra.
pub fn primitive_idempotents_of_top(a: &Arc<SCAlgebra>) -> Result<(Quotient, Vec<Vector>), AlgebraError> {
    let top = radical_quotient(a)?;
    if !top.algebra.is_commutative() {
        return Err(AlgebraError::NotBasic);
    }
    let images = split_commutative_semisimple(&top.algebra)?;
    Ok((top, images))
}
