//! The plane case m = 2.

use crate::error::Result;
use crate::gfield::FieldSpec;
use crate::lattice::SubspaceLattice;
use crate::props::{check_orthomodular, recognize_mn, recognize_mon};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct M2Report {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    /// `M = {(x, y) : 1 ≤ x ≤ y ≤ p/2}`.
    pub pairs: Vec<(u32, u32)>,
    /// The first pair of `M` with `p | x² + y²`.
    pub divisible_pair: Option<(u32, u32)>,
    /// Orthomodularity of the built lattice of GF(q)^2.
    pub orthomodular: bool,
    pub mn: Option<usize>,
    pub mon: Option<usize>,
    /// A divisible pair rules out orthomodularity.
    pub divisible_pair_consistent: bool,
    /// Prime fields only: orthomodular iff no pair is divisible.
    pub criterion_exact: Option<bool>,
    /// Prime fields only, when orthomodular: the lattice is `MO_{(q+1)/2}`.
    pub mo_shape_matches: Option<bool>,
}

pub fn m2_theorem_check(field: &FieldSpec) -> Result<M2Report> {
    let p = field.p();
    let pairs: Vec<(u32, u32)> = (1..=p / 2)
        .flat_map(|y| (1..=y).map(move |x| (x, y)))
        .collect();
    let divisible_pair = pairs
        .iter()
        .copied()
        .find(|&(x, y)| (x as u64 * x as u64 + y as u64 * y as u64) % p as u64 == 0);
    let lattice = SubspaceLattice::build(field, 2)?;
    let t = lattice.tables()?;
    let orthomodular = check_orthomodular(t).holds();
    let mon = recognize_mon(t);
    let prime = field.n() == 1;
    Ok(M2Report {
        p,
        n: field.n(),
        q: field.q(),
        divisible_pair,
        orthomodular,
        mn: recognize_mn(t),
        mon,
        divisible_pair_consistent: divisible_pair.is_none() || !orthomodular,
        criterion_exact: prime.then_some(divisible_pair.is_none() == orthomodular),
        mo_shape_matches: (prime && orthomodular)
            .then_some(mon == Some((field.q() as usize + 1) / 2)),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(q: u64) -> M2Report {
        m2_theorem_check(&FieldSpec::of_order(q).unwrap()).unwrap()
    }

    #[test]
    fn small_primes() {
        let r = check(5);
        assert_eq!(r.divisible_pair, Some((1, 2)));
        assert!(!r.orthomodular);
        assert_eq!(r.criterion_exact, Some(true));
        assert_eq!(r.mo_shape_matches, None);

        let r = check(3);
        assert_eq!(r.pairs, vec![(1, 1)]);
        assert_eq!(r.divisible_pair, None);
        assert!(r.orthomodular);
        assert_eq!(r.mon, Some(2));
        assert_eq!(r.mo_shape_matches, Some(true));

        assert_eq!(check(13).divisible_pair, Some((2, 3)));
        assert_eq!(check(2).pairs, vec![(1, 1)]);
    }

    #[test]
    fn extension_fields_skip_prime_parts() {
        let r = check(9);
        assert_eq!(r.criterion_exact, None);
        assert_eq!(r.mo_shape_matches, None);
        assert!(r.divisible_pair_consistent);
        assert!(!r.orthomodular);
        assert_eq!(r.mn, Some(10));
    }
}
