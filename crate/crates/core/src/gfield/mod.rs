//! Exact arithmetic in GF(p^n).
//!
//! A field is presented as Z_p[x]/(f) for a monic irreducible `f` of degree
//! `n`. Elements are identified with their integer index `Σ c_i p^i`, where
//! `c_i` are the polynomial coefficients constant term first. Index 0 is
//! zero and index 1 is one.
//!
//! Hot loops (row reduction, lattice construction) work on raw indices via
//! the `*_idx` methods of [`FieldSpec`]; [`FieldElement`] is the checked
//! value type used at API boundaries.

pub mod poly;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug)]
struct Tables {
    p: u32,
    n: u32,
    q: u32,
    modulus: Vec<u32>,
    /// `exp[k] = g^k` for a primitive element `g`, doubled to skip a modulo.
    exp: Vec<u32>,
    /// `log[a]` for nonzero `a`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A validated presentation of GF(p^n). Cheap to clone.
#[derive(Clone)]
pub struct FieldSpec(Arc<Tables>);

impl FieldSpec {
    /// Builds GF(p^n). Without an explicit modulus the smallest monic
    /// irreducible of degree `n` is used, comparing coefficient sequences
    /// constant term first.
    pub fn new(p: u32, n: u32, modulus: Option<Vec<u32>>) -> Result<Self> {
        if !poly::is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if n == 0 {
            return Err(Error::InvalidDegree(n));
        }
        let q = (p as u64)
            .checked_pow(n)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, n })? as u32;
        let modulus = match modulus {
            Some(f) => {
                if f.len() != n as usize + 1 || f[n as usize] != 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected a monic polynomial of degree {n}, got coefficients {f:?}"
                    )));
                }
                if let Some(c) = f.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {c} is not reduced mod {p}"
                    )));
                }
                if !poly::is_irreducible(&f, p) {
                    return Err(Error::ReduciblePolynomial(poly::format(&f)));
                }
                f
            }
            None => poly::smallest_irreducible(p, n as usize),
        };
        let mut tables = Tables {
            p,
            n,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        tables.build_log_tables();
        Ok(FieldSpec(Arc::new(tables)))
    }

    /// The prime field Z_p.
    pub fn prime(p: u32) -> Result<Self> {
        Self::new(p, 1, None)
    }

    /// GF(q) with the default modulus.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, n) = poly::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, n, None)
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn n(&self) -> u32 {
        self.0.n
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn modulus_string(&self) -> String {
        poly::format(&self.0.modulus)
    }

    pub fn zero(&self) -> FieldElement {
        self.element(0)
    }

    pub fn one(&self) -> FieldElement {
        self.element(1)
    }

    /// Element with the given integer index. Panics if `index >= q`.
    pub fn element(&self, index: u32) -> FieldElement {
        assert!(
            index < self.q(),
            "index {index} out of range for GF({})",
            self.q()
        );
        FieldElement {
            field: self.clone(),
            index,
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, k: i64) -> FieldElement {
        self.element(k.rem_euclid(self.p() as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() > self.n() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(Error::DomainError(format!(
                "{coeffs:?} is not a reduced element of GF({})",
                self.q()
            )));
        }
        let index = coeffs.iter().rev().fold(0u32, |acc, &c| acc * self.p() + c);
        Ok(self.element(index))
    }

    /// All `q` elements in ascending index order.
    pub fn all_elements(&self) -> Vec<FieldElement> {
        (0..self.q()).map(|i| self.element(i)).collect()
    }

    pub fn coeffs_of(&self, index: u32) -> Vec<u32> {
        let mut rest = index;
        (0..self.n())
            .map(|_| {
                let c = rest % self.p();
                rest /= self.p();
                c
            })
            .collect()
    }

    pub fn add_idx(&self, a: u32, b: u32) -> u32 {
        let p = self.0.p;
        if self.0.n == 1 {
            return (a + b) % p;
        }
        if p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0, 1);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place *= p;
        }
        out
    }

    pub fn neg_idx(&self, a: u32) -> u32 {
        let p = self.0.p;
        if self.0.n == 1 {
            return (p - a) % p;
        }
        if p == 2 {
            return a;
        }
        let mut a = a;
        let (mut out, mut place) = (0, 1);
        while a > 0 {
            out += ((p - a % p) % p) * place;
            a /= p;
            place *= p;
        }
        out
    }

    pub fn sub_idx(&self, a: u32, b: u32) -> u32 {
        self.add_idx(a, self.neg_idx(b))
    }

    pub fn mul_idx(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    /// Inverse of a nonzero index. Panics on zero.
    pub fn inv_idx(&self, a: u32) -> u32 {
        assert!(a != 0, "zero has no inverse");
        let t = &self.0;
        let order = t.q - 1;
        t.exp[((order - t.log[a as usize]) % order) as usize]
    }

    pub fn pow_idx(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let t = &self.0;
        let order = (t.q - 1) as u64;
        t.exp[((t.log[a as usize] as u64 * (e % order)) % order) as usize]
    }
}

impl Tables {
    /// Polynomial product of two indices reduced mod the modulus; used only
    /// to bootstrap the log tables.
    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let n = self.n as usize;
        let p = self.p as u64;
        let digits = |mut v: u32| {
            (0..n)
                .map(|_| {
                    let c = v % self.p;
                    v /= self.p;
                    c
                })
                .collect::<Vec<_>>()
        };
        let (da, db) = (digits(a), digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
        let r = poly::rem_monic(&prod, &self.modulus, self.p);
        r.iter().rev().fold(0u32, |acc, &c| acc * self.p + c)
    }

    fn build_log_tables(&mut self) {
        let order = self.q - 1;
        let generator = (1..self.q)
            .find(|&g| {
                let mut x = g;
                for _ in 1..order {
                    if x == 1 {
                        return false;
                    }
                    x = self.mul_slow(x, g);
                }
                x == 1
            })
            .expect("the multiplicative group of a finite field is cyclic");
        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; self.q as usize];
        let mut x = 1u32;
        for k in 0..order {
            exp.push(x);
            log[x as usize] = k;
            x = self.mul_slow(x, generator);
        }
        exp.extend_from_within(..);
        self.exp = exp;
        self.log = log;
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for FieldSpec {}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}) = Z_{}[x]/({})",
            self.q(),
            self.p(),
            self.modulus_string()
        )
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An element of a specific field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: FieldSpec,
    index: u32,
}

impl FieldElement {
    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn coeffs(&self) -> Vec<u32> {
        self.field.coeffs_of(self.index)
    }

    pub fn is_zero(&self) -> bool {
        self.index == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self
            .field
            .element(self.field.add_idx(self.index, other.index)))
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self
            .field
            .element(self.field.sub_idx(self.index, other.index)))
    }

    pub fn neg(&self) -> FieldElement {
        self.field.element(self.field.neg_idx(self.index))
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(self
            .field
            .element(self.field.mul_idx(self.index, other.index)))
    }

    pub fn inv(&self) -> Result<FieldElement> {
        if self.index == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.field.element(self.field.inv_idx(self.index)))
    }

    pub fn pow(&self, e: u64) -> FieldElement {
        self.field.element(self.field.pow_idx(self.index, e))
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.n() == 1 {
            write!(f, "{}", self.index)
        } else {
            f.write_str(&poly::format(&self.coeffs()))
        }
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf9() -> FieldSpec {
        FieldSpec::new(3, 2, None).unwrap()
    }

    #[test]
    fn default_moduli() {
        assert_eq!(gf9().modulus(), &[1, 0, 1]);
        assert_eq!(FieldSpec::prime(5).unwrap().modulus(), &[0, 1]);
        let gf16 = FieldSpec::new(2, 4, None).unwrap();
        assert_eq!(gf16.modulus(), &[1, 0, 0, 1, 1]);
        assert_eq!(gf16.all_elements().len(), 16);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            FieldSpec::new(4, 1, None).unwrap_err(),
            Error::NonPrimeCharacteristic(4)
        );
        assert_eq!(
            FieldSpec::new(3, 2, Some(vec![2, 0, 1])).unwrap_err(),
            Error::ReduciblePolynomial("x^2+2".into())
        );
        assert!(matches!(
            FieldSpec::new(3, 2, Some(vec![1, 1])),
            Err(Error::InvalidModulus(_))
        ));
        assert!(matches!(
            FieldSpec::new(2, 17, None),
            Err(Error::FieldTooLarge { .. })
        ));
        assert!(matches!(
            FieldSpec::of_order(12),
            Err(Error::NotPrimePower(12))
        ));
    }

    #[test]
    fn small_examples() {
        let gf2 = FieldSpec::prime(2).unwrap();
        assert_eq!(gf2.one().add(&gf2.one()).unwrap(), gf2.zero());

        let gf5 = FieldSpec::prime(5).unwrap();
        assert_eq!(gf5.from_int(2).add(&gf5.from_int(3)).unwrap(), gf5.zero());
        assert_eq!(gf5.from_int(2).mul(&gf5.from_int(3)).unwrap(), gf5.one());
        assert_eq!(gf5.from_int(2).inv().unwrap(), gf5.from_int(3));

        let f = gf9();
        let x = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!(x.index(), 3);
        assert_eq!(f.all_elements()[3], x);
        let x_plus_2 = f.from_coeffs(&[2, 1]).unwrap();
        assert_eq!(x.add(&x_plus_2).unwrap(), f.from_coeffs(&[2, 2]).unwrap());
        assert_eq!(x.mul(&x).unwrap(), f.from_int(2));
        assert_eq!(x.inv().unwrap(), f.from_coeffs(&[0, 2]).unwrap());
        assert_eq!(f.one().inv().unwrap(), f.one());
        assert_eq!(f.zero().inv().unwrap_err(), Error::ZeroInverse);
        assert_eq!(x.to_string(), "x");
        assert_eq!(f.from_coeffs(&[2, 2]).unwrap().to_string(), "2x+2");
    }

    #[test]
    fn mixing_fields_is_rejected() {
        let a = FieldSpec::prime(5).unwrap().one();
        let b = FieldSpec::prime(7).unwrap().one();
        assert_eq!(a.add(&b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.mul(&b).unwrap_err(), Error::FieldMismatch);
        let other9 = FieldSpec::new(3, 2, Some(vec![2, 1, 1])).unwrap();
        assert_eq!(
            gf9().one().add(&other9.one()).unwrap_err(),
            Error::FieldMismatch
        );
    }

    #[test]
    fn inverse_by_exhaustive_search_in_gf9() {
        let f = gf9();
        let x = f.element(3);
        let found: Vec<_> = f
            .all_elements()
            .into_iter()
            .filter(|y| x.mul(y).unwrap() == f.one())
            .collect();
        assert_eq!(found, vec![f.element(6)]);
    }

    fn small_fields() -> Vec<FieldSpec> {
        [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16]
            .iter()
            .map(|&q| FieldSpec::of_order(q).unwrap())
            .collect()
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in small_fields() {
            let q = f.q();
            for a in 0..q {
                assert_eq!(f.add_idx(a, 0), a);
                assert_eq!(f.mul_idx(a, 1), a);
                assert_eq!(f.add_idx(a, f.neg_idx(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul_idx(a, f.inv_idx(a)), 1);
                    assert_eq!(f.pow_idx(a, (q - 1) as u64), 1, "Fermat in {f}");
                    let inverses = (0..q).filter(|&b| f.mul_idx(a, b) == 1).count();
                    assert_eq!(inverses, 1);
                }
                for b in 0..q {
                    assert_eq!(f.add_idx(a, b), f.add_idx(b, a));
                    assert_eq!(f.mul_idx(a, b), f.mul_idx(b, a));
                    for c in 0..q {
                        assert_eq!(f.add_idx(f.add_idx(a, b), c), f.add_idx(a, f.add_idx(b, c)));
                        assert_eq!(f.mul_idx(f.mul_idx(a, b), c), f.mul_idx(a, f.mul_idx(b, c)));
                        assert_eq!(
                            f.mul_idx(a, f.add_idx(b, c)),
                            f.add_idx(f.mul_idx(a, b), f.mul_idx(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn log_table_product_matches_polynomial_product() {
        for f in small_fields() {
            for a in 0..f.q() {
                for b in 0..f.q() {
                    assert_eq!(f.mul_idx(a, b), f.0.mul_slow(a, b));
                }
            }
        }
    }

    #[test]
    fn characteristic_sum_vanishes() {
        for f in small_fields() {
            let sum = (0..f.p()).fold(0, |acc, _| f.add_idx(acc, 1));
            assert_eq!(sum, 0);
        }
    }
}
