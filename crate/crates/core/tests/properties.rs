//! Randomized invariants of the constructions.

use proptest::prelude::*;
use sublat::constructs::{compute_mq, horizontal_sum, is_orthogonal_basis};
use sublat::lattice::OrthoLattice;
use sublat::props::check_orthomodular;
use sublat::{FVector, FieldSpec, Subspace};

const ORDERS: [u64; 9] = [2, 3, 4, 5, 7, 8, 9, 11, 13];

fn prefixed(l: OrthoLattice, prefix: &str) -> OrthoLattice {
    let labels = (0..l.len())
        .map(|i| {
            if i == l.bottom() || i == l.top() {
                l.label(i).to_string()
            } else {
                format!("{prefix}{}", l.label(i))
            }
        })
        .collect();
    l.with_labels(labels)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sums_of_boolean_algebras_are_orthomodular(a in 2u32..=4, b in 2u32..=4) {
        let s = horizontal_sum(&prefixed(OrthoLattice::boolean(a), "a"), &prefixed(OrthoLattice::boolean(b), "b")).unwrap();
        prop_assert_eq!(s.len(), (1usize << a) + (1usize << b) - 2);
        prop_assert!(s.operations_match_order().is_ok());
        prop_assert!(check_orthomodular(&s).holds());
    }

    #[test]
    fn mq_witness_is_isotropic_and_threshold_is_sharp(k in 0usize..ORDERS.len()) {
        let f = FieldSpec::of_order(ORDERS[k]).unwrap();
        let r = compute_mq(&f);
        prop_assert!(r.witness_vector().is_isotropic());
        prop_assert!(sublat::linvec::find_isotropic(&f, r.m_q - 1).unwrap().is_none());
        prop_assert!(sublat::linvec::find_isotropic(&f, r.m_q).unwrap().is_some());
    }

    #[test]
    fn scaled_standard_bases_satisfy_the_complement_identity(
        k in 0usize..4,
        m in 1usize..=4,
        scales in proptest::collection::vec(1u32..16, 4),
        mask in 0usize..16,
    ) {
        let f = FieldSpec::of_order([3u64, 5, 7, 9][k]).unwrap();
        let basis: Vec<FVector> = (0..m)
            .map(|i| {
                let mut e = vec![0u32; m];
                e[i] = 1 + (scales[i] - 1) % (f.q() - 1);
                FVector::from_indices(&f, &e)
            })
            .collect();
        prop_assert!(is_orthogonal_basis(&basis, m).unwrap());
        let mask = mask & ((1 << m) - 1);
        let pick = |want: bool| -> Vec<FVector> {
            (0..m).filter(|i| (mask >> i & 1 == 1) == want).map(|i| basis[i].clone()).collect()
        };
        let u = Subspace::span(&f, m, &pick(true)).unwrap();
        let rest = Subspace::span(&f, m, &pick(false)).unwrap();
        prop_assert_eq!(u.orthocomplement(), rest);
    }
}
