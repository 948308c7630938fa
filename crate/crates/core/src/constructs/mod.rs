//! Constructions around the threshold m(q): orthogonal bases, Boolean
//! subalgebras, horizontal sums and the two-dimensional case.

mod horizontal;
mod m2;
mod mq;

pub use horizontal::horizontal_sum;
pub use m2::{m2_theorem_check, M2Report};
pub use mq::{compute_mq, divisibility_bounds, BoundClaim, BoundsReport, MqResult};

use crate::error::{Error, Result};
use crate::lattice::{OrthoLattice, SubspaceLattice};
use crate::linvec::{FVector, Subspace};
use crate::props::{check_orthomodular, Verdict, Witness};

/// True iff the `m` vectors are pairwise orthogonal with nonzero
/// self-products. A repeated vector makes the family too small, so the
/// answer is false.
pub fn is_orthogonal_basis(vectors: &[FVector], m: usize) -> Result<bool> {
    if vectors.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            actual: vectors.len(),
        });
    }
    let field = match vectors.first() {
        Some(v) => v.field().clone(),
        None => return Ok(false),
    };
    for v in vectors {
        if v.dim() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                actual: v.dim(),
            });
        }
    }
    for (i, a) in vectors.iter().enumerate() {
        if a.dot(a)?.is_zero() {
            return Ok(false);
        }
        for b in &vectors[i + 1..] {
            if a.indices() == b.indices() || !a.dot(b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    // orthogonal with nonzero self-products forces independence
    assert_eq!(Subspace::span(&field, m, vectors)?.dim(), m);
    Ok(true)
}

/// A subset of a subspace lattice with the induced order and involution.
#[derive(Clone, Debug)]
pub struct SubPoset {
    pub q: u32,
    pub m: usize,
    pub modulus: Vec<u32>,
    /// Indices into the parent lattice.
    pub elements: Vec<usize>,
    /// Induced order and involution; element `i` here is `elements[i]`.
    pub structure: OrthoLattice,
    /// Closure under `+`, `∩` and `⊥`. Witness elements are parent indices
    /// `[a, b, result]` (or `[a, result]` for `⊥`).
    pub subuniverse: Verdict,
    /// Orthomodularity of the induced structure, in local indices.
    pub orthomodular: Verdict,
}

impl SubPoset {
    /// Fails if the subset is not closed under `⊥` or the induced order is
    /// not a lattice.
    pub fn new(lattice: &SubspaceLattice, elements: Vec<usize>) -> Result<Self> {
        let local = |x: usize| elements.iter().position(|&e| e == x);
        let perp = elements
            .iter()
            .map(|&e| {
                local(lattice.perp(e)).ok_or_else(|| {
                    Error::DomainError(format!(
                        "{} has its complement outside the subset",
                        lattice.element(e)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = elements
            .iter()
            .map(|&e| lattice.element(e).to_string())
            .collect();
        let structure =
            OrthoLattice::from_order(labels, |a, b| lattice.leq(elements[a], elements[b]), perp)?;
        let subuniverse = closure_verdict(lattice, &elements);
        let orthomodular = check_orthomodular(&structure);
        let field = lattice.field();
        Ok(SubPoset {
            q: field.q(),
            m: lattice.ambient_dim(),
            modulus: field.modulus().to_vec(),
            elements,
            structure,
            subuniverse,
            orthomodular,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, parent_index: usize) -> bool {
        self.elements.contains(&parent_index)
    }
}

fn closure_verdict(lattice: &SubspaceLattice, elements: &[usize]) -> Verdict {
    let fails = |clause: &str, elements: Vec<usize>| {
        Verdict::Fails(Witness {
            clause: clause.to_string(),
            elements,
        })
    };
    for b in [lattice.bottom(), lattice.top()] {
        if !elements.contains(&b) {
            return fails("bound missing", vec![b]);
        }
    }
    for &a in elements {
        let c = lattice.perp(a);
        if !elements.contains(&c) {
            return fails("a' not in S", vec![a, c]);
        }
    }
    for (i, &a) in elements.iter().enumerate() {
        for &b in &elements[i + 1..] {
            let s = lattice.join(a, b);
            if !elements.contains(&s) {
                return fails("a + b not in S", vec![a, b, s]);
            }
            let t = lattice.meet(a, b);
            if !elements.contains(&t) {
                return fails("a ^ b not in S", vec![a, b, t]);
            }
        }
    }
    Verdict::Holds
}

/// The subspaces `U_I = ⟨b_i : i ∈ I⟩` of an orthogonal basis.
#[derive(Clone, Debug)]
pub struct BooleanSubalgebra {
    /// Element `I` (as a bit mask over the basis) is `U_I`; the structure's
    /// element order is the mask order.
    pub sub: SubPoset,
    /// `U_I^⊥ = U_{N∖I}` for every `I`.
    pub complement_identity: bool,
    /// `I ↦ U_I` is injective, preserves and reflects `⊆`, and sends `∪`, `∩`
    /// to `+`, `∩`.
    pub power_set_isomorphism: bool,
}

pub fn boolean_subalgebra(
    lattice: &SubspaceLattice,
    basis: &[FVector],
) -> Result<BooleanSubalgebra> {
    let m = lattice.ambient_dim();
    let field = lattice.field();
    if basis.iter().any(|b| *b.field() != *field) {
        return Err(Error::FieldMismatch);
    }
    if !is_orthogonal_basis(basis, m)? {
        return Err(Error::NotOrthogonalBasis);
    }
    let full = (1usize << m) - 1;
    let mut elements = Vec::with_capacity(full + 1);
    for mask in 0..=full {
        let chosen: Vec<FVector> = (0..m)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| basis[i].clone())
            .collect();
        let u = Subspace::span(field, m, &chosen)?;
        elements.push(lattice.index_of(&u).expect("every subspace is enumerated"));
    }
    let complement_identity = (0..=full).all(|i| lattice.perp(elements[i]) == elements[full ^ i]);
    let mut power_set_isomorphism = true;
    'outer: for i in 0..=full {
        for j in 0..=full {
            let (a, b) = (elements[i], elements[j]);
            let ok = (i == j) == (a == b)
                && (i & j == i) == lattice.leq(a, b)
                && lattice.join(a, b) == elements[i | j]
                && lattice.meet(a, b) == elements[i & j];
            if !ok {
                power_set_isomorphism = false;
                break 'outer;
            }
        }
    }
    Ok(BooleanSubalgebra {
        sub: SubPoset::new(lattice, elements)?,
        complement_identity,
        power_set_isomorphism,
    })
}

/// The standard basis `e_1, …, e_m` of the lattice's ambient space.
pub fn standard_basis(lattice: &SubspaceLattice) -> Vec<FVector> {
    let m = lattice.ambient_dim();
    (0..m)
        .map(|i| FVector::unit(lattice.field(), m, i))
        .collect()
}

/// `S = {U_I : I ⊆ N} ∪ {W, W^⊥}` for the standard basis and
/// `W = ⟨(1, …, 1)⟩`.
#[derive(Clone, Debug)]
pub struct HorizontalSumSubposet {
    /// Elements in parent index order.
    pub sub: SubPoset,
    pub w: usize,
    pub w_perp: usize,
    /// An isomorphism from the horizontal sum of `2^m` and `2^2` onto the
    /// induced structure, if one exists: entry `i` is the local index of
    /// the image of element `i` of the sum.
    pub isomorphism: Option<Vec<usize>>,
}

impl HorizontalSumSubposet {
    /// The subuniverse verdict agrees with the prediction "iff m = 2".
    pub fn subuniverse_as_predicted(&self) -> bool {
        self.sub.subuniverse.holds() == (self.sub.m == 2)
    }
}

/// The labelled sum `2^m + 2^2` used as the comparison target: the second
/// summand's atoms are named `w` and `w'`.
pub fn boolean_horizontal_sum(m: u32) -> Result<OrthoLattice> {
    let small = OrthoLattice::boolean(2);
    let labels = (0..small.len())
        .map(|i| match i {
            1 => "w".to_string(),
            2 => "w'".to_string(),
            _ => small.label(i).to_string(),
        })
        .collect();
    horizontal_sum(&OrthoLattice::boolean(m), &small.with_labels(labels))
}

pub fn horizontal_sum_subposet(lattice: &SubspaceLattice) -> Result<HorizontalSumSubposet> {
    let m = lattice.ambient_dim();
    let field = lattice.field();
    if m < 2 {
        return Err(Error::HypothesisViolated(
            "the construction needs m >= 2".into(),
        ));
    }
    if m % field.p() as usize == 0 {
        return Err(Error::HypothesisViolated(format!(
            "p = {} divides m = {m}",
            field.p()
        )));
    }
    let boolean = boolean_subalgebra(lattice, &standard_basis(lattice))?;
    let ones = FVector::from_ints(field, &vec![1; m]);
    let w = lattice
        .index_of(&Subspace::span(field, m, &[ones])?)
        .expect("every subspace is enumerated");
    let w_perp = lattice.perp(w);
    let mut elements = boolean.sub.elements;
    elements.extend([w, w_perp]);
    elements.sort_unstable();
    elements.dedup();
    let sub = SubPoset::new(lattice, elements)?;
    let target = boolean_horizontal_sum(m as u32)?;
    let isomorphism = target.find_isomorphism(&sub.structure);
    Ok(HorizontalSumSubposet {
        sub,
        w,
        w_perp,
        isomorphism,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::FieldSpec;

    fn lat(q: u64, m: usize) -> SubspaceLattice {
        SubspaceLattice::build(&FieldSpec::of_order(q).unwrap(), m).unwrap()
    }

    fn vecs(q: u64, rows: &[&[i64]]) -> Vec<FVector> {
        let f = FieldSpec::of_order(q).unwrap();
        rows.iter().map(|r| FVector::from_ints(&f, r)).collect()
    }

    #[test]
    fn orthogonal_bases() {
        assert!(is_orthogonal_basis(&vecs(5, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).unwrap());
        let ones_minus_e = vecs(
            2,
            &[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]],
        );
        assert!(is_orthogonal_basis(&ones_minus_e, 4).unwrap());
        // p must divide m - 2
        let three = vecs(2, &[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]);
        assert!(!is_orthogonal_basis(&three, 3).unwrap());
        assert!(!is_orthogonal_basis(&vecs(3, &[&[1, 1], &[1, 1]]), 2).unwrap());
        assert!(!is_orthogonal_basis(&vecs(2, &[&[1, 1], &[1, 0]]), 2).unwrap());
        assert!(matches!(
            is_orthogonal_basis(&vecs(3, &[&[1, 0]]), 2),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn boolean_subalgebras() {
        for (q, m) in [(2, 1), (2, 3), (3, 2), (5, 3), (4, 2)] {
            let l = lat(q, m);
            let b = boolean_subalgebra(&l, &standard_basis(&l)).unwrap();
            assert_eq!(b.sub.len(), 1 << m);
            assert!(b.complement_identity && b.power_set_isomorphism);
            assert!(b.sub.subuniverse.holds());
            assert!(b.sub.orthomodular.holds());
            assert!(b
                .sub
                .structure
                .find_isomorphism(&OrthoLattice::boolean(m as u32))
                .is_some());
        }
        // the non-standard basis over GF(2)^4
        let l = lat(2, 4);
        let basis = vecs(
            2,
            &[&[0, 1, 1, 1], &[1, 0, 1, 1], &[1, 1, 0, 1], &[1, 1, 1, 0]],
        );
        let b = boolean_subalgebra(&l, &basis).unwrap();
        assert!(b.complement_identity && b.power_set_isomorphism && b.sub.subuniverse.holds());

        let l = lat(2, 2);
        let err = boolean_subalgebra(&l, &vecs(2, &[&[1, 1], &[1, 0]])).unwrap_err();
        assert_eq!(err, Error::NotOrthogonalBasis);
    }

    #[test]
    fn horizontal_sum_subposets() {
        let l = lat(2, 3);
        let h = horizontal_sum_subposet(&l).unwrap();
        assert_eq!(h.sub.len(), 10);
        assert!(h.sub.orthomodular.holds());
        assert!(h.isomorphism.is_some());
        assert!(!h.sub.subuniverse.holds());
        assert!(h.subuniverse_as_predicted());

        let l = lat(3, 2);
        let h = horizontal_sum_subposet(&l).unwrap();
        assert_eq!(h.sub.elements, (0..l.len()).collect::<Vec<_>>());
        assert!(h.sub.subuniverse.holds());
        assert!(h.isomorphism.is_some());

        let h = horizontal_sum_subposet(&lat(3, 4)).unwrap();
        assert!(h.sub.orthomodular.holds() && h.isomorphism.is_some());
        assert!(h.subuniverse_as_predicted());

        assert!(matches!(
            horizontal_sum_subposet(&lat(2, 2)),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            horizontal_sum_subposet(&lat(3, 1)),
            Err(Error::HypothesisViolated(_))
        ));
    }
}
