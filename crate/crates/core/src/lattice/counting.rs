//! Closed-form subspace counts over GF(q).

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// `a_n = Π_{i=1}^n (q^i - 1)`, with `a_0 = 1`.
pub fn flag_product(q: u64, n: u32) -> BigUint {
    let q = BigUint::from(q);
    (1..=n).fold(BigUint::from(1u32), |acc, i| acc * (q.pow(i) - 1u32))
}

fn to_u128(x: BigUint, what: &'static str) -> Result<u128> {
    u128::try_from(x).map_err(|_| Error::Overflow(what))
}

/// `(q^k - 1)/(q - 1) = 1 + q + … + q^{k-1}`.
fn repunit(q: u64, k: u32) -> Result<u128> {
    let q = BigUint::from(q);
    let sum = (0..k).fold(BigUint::from(0u32), |acc, i| acc + q.pow(i));
    to_u128(sum, "(q^k-1)/(q-1)")
}

fn check_q(q: u64) -> Result<()> {
    if q < 2 {
        return Err(Error::DomainError(format!("field order {q} is below 2")));
    }
    Ok(())
}

/// Number of `d`-dimensional subspaces of GF(q)^m: `a_m / (a_d a_{m-d})`.
pub fn gaussian_count(q: u64, m: u32, d: u32) -> Result<u128> {
    check_q(q)?;
    if d > m {
        return Err(Error::DomainError(format!("dimension {d} exceeds {m}")));
    }
    let num = flag_product(q, m);
    let den = flag_product(q, d) * flag_product(q, m - d);
    debug_assert!((&num % &den) == BigUint::from(0u32));
    to_u128(num / den, "gaussian binomial")
}

/// Total number of subspaces of GF(q)^m.
pub fn total_subspaces(q: u64, m: u32) -> Result<u128> {
    (0..=m).try_fold(0u128, |acc, d| {
        acc.checked_add(gaussian_count(q, m, d)?)
            .ok_or(Error::Overflow("subspace total"))
    })
}

pub fn atom_count(q: u64, m: u32) -> Result<u128> {
    check_q(q)?;
    if m == 0 {
        return Err(Error::DomainError("dimension must be at least 1".into()));
    }
    repunit(q, m)
}

/// Number of `(d+1)`-dimensional subspaces above a `d`-dimensional one.
pub fn upper_covers_count(q: u64, m: u32, d: u32) -> Result<u128> {
    check_q(q)?;
    if d >= m {
        return Err(Error::DomainError(format!(
            "{d}-dimensional subspaces of a {m}-dimensional space have no upper covers"
        )));
    }
    repunit(q, m - d)
}

/// Number of `(d-1)`-dimensional subspaces below a `d`-dimensional one.
pub fn lower_covers_count(q: u64, m: u32, d: u32) -> Result<u128> {
    check_q(q)?;
    if d == 0 || d > m {
        return Err(Error::DomainError(format!(
            "dimension {d} has no lower covers in a {m}-dimensional space"
        )));
    }
    repunit(q, d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(gaussian_count(3, 2, 1).unwrap(), 4);
        assert_eq!(gaussian_count(2, 3, 1).unwrap(), 7);
        assert_eq!(gaussian_count(2, 3, 2).unwrap(), 7);
        assert_eq!(gaussian_count(7, 5, 0).unwrap(), 1);
        assert_eq!(atom_count(3, 2).unwrap(), 4);
        assert_eq!(atom_count(9, 1).unwrap(), 1);
        assert_eq!(atom_count(2, 3).unwrap(), 7);
        assert_eq!(upper_covers_count(2, 3, 1).unwrap(), 3);
        assert_eq!(upper_covers_count(5, 4, 3).unwrap(), 1);
        assert_eq!(upper_covers_count(3, 2, 0).unwrap(), 4);
        assert_eq!(lower_covers_count(2, 3, 2).unwrap(), 3);
        assert_eq!(lower_covers_count(5, 4, 1).unwrap(), 1);
        assert_eq!(lower_covers_count(3, 2, 2).unwrap(), 4);
        assert_eq!(total_subspaces(2, 3).unwrap(), 16);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(
            gaussian_count(2, 3, 4),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            upper_covers_count(2, 3, 3),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            lower_covers_count(2, 3, 0),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            gaussian_count(1, 3, 1),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            gaussian_count(65536, 40, 20),
            Err(Error::Overflow(_))
        ));
    }

    #[test]
    fn symmetric_and_pascal_like() {
        // [m,d] = [m,m-d] and [m,d] = [m-1,d-1] + q^d [m-1,d]
        for q in [2u64, 3, 4, 5] {
            for m in 1..=6u32 {
                for d in 0..=m {
                    let g = gaussian_count(q, m, d).unwrap();
                    assert_eq!(g, gaussian_count(q, m, m - d).unwrap());
                    if d > 0 && d < m {
                        let rhs = gaussian_count(q, m - 1, d - 1).unwrap()
                            + (q as u128).pow(d) * gaussian_count(q, m - 1, d).unwrap();
                        assert_eq!(g, rhs);
                    }
                }
            }
        }
    }
}
