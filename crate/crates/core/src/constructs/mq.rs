//! The threshold m(q): the fewest nonzero squares summing to zero in GF(q).

use crate::error::{Error, Result};
use crate::gfield::{poly, FieldElement, FieldSpec};
use crate::linvec::FVector;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MqResult {
    pub q: u32,
    pub p: u32,
    pub modulus: Vec<u32>,
    pub m_q: usize,
    /// `m_q` nonzero elements whose squares sum to zero.
    pub witness: Vec<FieldElement>,
    /// The divisibility bounds for the characteristic and whether they hold.
    pub bounds: BoundsReport,
    pub bounds_respected: bool,
}

/// Reachable sums of squares: `S_1 = {a² : a ≠ 0}`,
/// `S_{k+1} = {s + t : s ∈ S_k, t ∈ S_1}`, stopping at the first `k` with
/// `0 ∈ S_k`. The witness is read back greedily, smallest index first.
pub fn compute_mq(field: &FieldSpec) -> MqResult {
    let q = field.q() as usize;
    let mut squares = vec![false; q];
    for a in 1..field.q() {
        squares[field.mul_idx(a, a) as usize] = true;
    }
    let square_list: Vec<u32> = (0..field.q()).filter(|&s| squares[s as usize]).collect();
    // levels[k - 1] = S_k
    let mut levels = vec![squares.clone()];
    while !levels.last().unwrap()[0] {
        assert!(levels.len() < field.p() as usize, "m(q) never exceeds p");
        let prev = levels.last().unwrap();
        let mut next = vec![false; q];
        for s in (0..field.q()).filter(|&s| prev[s as usize]) {
            for &t in &square_list {
                next[field.add_idx(s, t) as usize] = true;
            }
        }
        levels.push(next);
    }
    let m_q = levels.len();

    let mut witness = Vec::with_capacity(m_q);
    let mut target = 0u32;
    for k in (1..=m_q).rev() {
        // choose a with target - a² ∈ S_{k-1}, or a² = target on the last step
        let a = (1..field.q())
            .find(|&a| {
                let rest = field.sub_idx(target, field.mul_idx(a, a));
                if k == 1 {
                    rest == 0
                } else {
                    levels[k - 2][rest as usize]
                }
            })
            .expect("target is reachable at this level");
        target = field.sub_idx(target, field.mul_idx(a, a));
        witness.push(field.element(a));
    }
    let bounds = divisibility_bounds(field.p()).expect("characteristic is prime");
    MqResult {
        bounds_respected: bounds.respected_by(m_q),
        bounds,
        q: field.q(),
        p: field.p(),
        modulus: field.modulus().to_vec(),
        m_q,
        witness,
    }
}

impl MqResult {
    /// The witness read as a vector of GF(q)^{m(q)}.
    pub fn witness_vector(&self) -> FVector {
        FVector::new(&self.witness).expect("witness is nonempty and from one field")
    }
}

/// One bound from the divisibility criteria, with its explicit isotropic vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundClaim {
    pub bound: u32,
    /// Integer entries of the vector (1, 2, …, bound) over Z_p.
    pub witness: Vec<u32>,
    pub witness_isotropic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub p: u32,
    /// `6 | (p-1)(2p-1)` gives `m(q) ≤ p - 1`.
    pub sum_to_p_minus_1: Option<BoundClaim>,
    /// `p > 2` and `24 | (p+1)(p-1)` gives `m(q) ≤ (p-1)/2`.
    pub sum_to_half: Option<BoundClaim>,
    /// `p > 2` and `p ≡ -1 (mod 3)` gives `m(q) ≤ p - 1`.
    pub minus_one_mod_3: Option<u32>,
}

impl BoundsReport {
    /// Applicable bounds, tightest last.
    pub fn bounds(&self) -> Vec<u32> {
        let mut b: Vec<u32> = [
            self.sum_to_p_minus_1.as_ref().map(|c| c.bound),
            self.minus_one_mod_3,
            self.sum_to_half.as_ref().map(|c| c.bound),
        ]
        .into_iter()
        .flatten()
        .collect();
        b.sort_unstable_by(|x, y| y.cmp(x));
        b
    }

    /// True iff every applicable bound is at least `m_q`.
    pub fn respected_by(&self, m_q: usize) -> bool {
        self.bounds().iter().all(|&b| b as usize >= m_q)
    }
}

fn consecutive_claim(field: &FieldSpec, len: u32) -> BoundClaim {
    let witness: Vec<u32> = (1..=len).collect();
    let ints: Vec<i64> = witness.iter().map(|&x| x as i64).collect();
    BoundClaim {
        bound: len,
        witness_isotropic: FVector::from_ints(field, &ints).is_isotropic(),
        witness,
    }
}

pub fn divisibility_bounds(p: u32) -> Result<BoundsReport> {
    if !poly::is_prime(p) {
        return Err(Error::NonPrimeCharacteristic(p));
    }
    let field = FieldSpec::prime(p)?;
    let p64 = p as u64;
    let first = ((p64 - 1) * (2 * p64 - 1)) % 6 == 0;
    let second = p > 2 && ((p64 + 1) * (p64 - 1)) % 24 == 0;
    let minus_one_mod_3 = p > 2 && p % 3 == 2;
    Ok(BoundsReport {
        p,
        sum_to_p_minus_1: first.then(|| consecutive_claim(&field, p - 1)),
        sum_to_half: second.then(|| consecutive_claim(&field, (p - 1) / 2)),
        minus_one_mod_3: minus_one_mod_3.then_some(p - 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mq(q: u64) -> MqResult {
        compute_mq(&FieldSpec::of_order(q).unwrap())
    }

    fn ints(r: &MqResult) -> Vec<u32> {
        r.witness.iter().map(FieldElement::index).collect()
    }

    #[test]
    fn table_values() {
        assert_eq!(mq(2).m_q, 2);
        assert_eq!(ints(&mq(2)), vec![1, 1]);
        assert_eq!(ints(&mq(3)), vec![1, 1, 1]);
        assert_eq!(ints(&mq(7)), vec![1, 2, 3]);
        assert_eq!(ints(&mq(11)), vec![1, 1, 3]);
        assert_eq!(ints(&mq(17)), vec![1, 4]);
        let nine = mq(9);
        assert_eq!(nine.m_q, 2);
        assert_eq!(nine.witness[1].to_string(), "x");
        for q in [
            2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32,
        ] {
            let r = mq(q);
            assert!(r.m_q > 1 && r.m_q <= r.p as usize);
            assert!(r.witness_vector().is_isotropic());
            assert!(r.witness.iter().all(|a| !a.is_zero()));
        }
    }

    #[test]
    fn bounds() {
        let b = divisibility_bounds(7).unwrap();
        assert_eq!(b.sum_to_p_minus_1.as_ref().unwrap().bound, 6);
        assert_eq!(b.sum_to_half.as_ref().unwrap().bound, 3);
        assert!(b.sum_to_half.as_ref().unwrap().witness_isotropic);
        assert_eq!(b.minus_one_mod_3, None);
        assert!(b.respected_by(3));

        let b = divisibility_bounds(2).unwrap();
        assert_eq!(b.sum_to_p_minus_1, None);
        assert_eq!(b.sum_to_half, None);
        assert!(b.bounds().is_empty());

        let b = divisibility_bounds(5).unwrap();
        assert_eq!(b.sum_to_half.as_ref().unwrap().witness, vec![1, 2]);
        assert_eq!(b.minus_one_mod_3, Some(4));
        assert!(b.respected_by(2));
        assert!(!b.respected_by(3));

        assert_eq!(
            divisibility_bounds(9).unwrap_err(),
            Error::NonPrimeCharacteristic(9)
        );
    }
}
