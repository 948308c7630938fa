//! Dense polynomials over the prime field Z_p, stored constant term first.

use std::fmt::Write;

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, n)` with `q = p^n`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2u64;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut rest = q;
    let mut n = 0;
    while rest % p == 0 {
        rest /= p;
        n += 1;
    }
    if rest != 1 || p > u32::MAX as u64 {
        return None;
    }
    Some((p as u32, n))
}

pub fn degree(f: &[u32]) -> Option<usize> {
    f.iter().rposition(|&c| c != 0)
}

fn eval(f: &[u32], x: u32, p: u32) -> u32 {
    let p = p as u64;
    f.iter()
        .rev()
        .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p) as u32
}

pub fn has_root(f: &[u32], p: u32) -> bool {
    (0..p).any(|x| eval(f, x, p) == 0)
}

/// Remainder of `a` modulo the monic polynomial `b`.
pub fn rem_monic(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = degree(b).expect("divisor must be nonzero");
    debug_assert_eq!(b[db], 1);
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let p64 = p as u64;
    while let Some(dr) = r.iter().rposition(|&c| c != 0) {
        if dr < db {
            break;
        }
        let lead = r[dr];
        let shift = dr - db;
        for (i, &bc) in b[..=db].iter().enumerate() {
            let sub = lead * bc as u64 % p64;
            r[shift + i] = (r[shift + i] + p64 - sub) % p64;
        }
    }
    r.truncate(db);
    r.into_iter().map(|c| c as u32).collect()
}

/// All monic polynomials of degree `d`, ordered by their coefficient
/// sequences compared constant term first.
pub fn monic_polys(p: u32, d: usize) -> impl Iterator<Item = Vec<u32>> {
    let count = (p as u64).pow(d as u32);
    (0..count).map(move |k| {
        let mut coeffs = vec![0u32; d + 1];
        let mut rest = k;
        for i in (0..d).rev() {
            coeffs[i] = (rest % p as u64) as u32;
            rest /= p as u64;
        }
        coeffs[d] = 1;
        coeffs
    })
}

/// Irreducibility over Z_p for a monic polynomial: root test up to degree 3,
/// trial division by every lower-degree monic irreducible above that.
pub fn is_irreducible(f: &[u32], p: u32) -> bool {
    let Some(d) = degree(f) else { return false };
    if d == 0 {
        return false;
    }
    if d == 1 {
        return true;
    }
    if d <= 3 {
        return !has_root(f, p);
    }
    for e in 1..=d / 2 {
        for g in monic_polys(p, e).filter(|g| is_irreducible(g, p)) {
            if degree(&rem_monic(f, &g, p)).is_none() {
                return false;
            }
        }
    }
    true
}

pub fn smallest_irreducible(p: u32, d: usize) -> Vec<u32> {
    monic_polys(p, d)
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}

/// Renders a polynomial in the variable `x`, highest degree first.
pub fn format(f: &[u32]) -> String {
    let mut out = String::new();
    for (i, &c) in f.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (i, c) {
            (0, c) => write!(out, "{c}").unwrap(),
            (1, 1) => out.push('x'),
            (1, c) => write!(out, "{c}x").unwrap(),
            (i, 1) => write!(out, "x^{i}").unwrap(),
            (i, c) => write!(out, "{c}x^{i}").unwrap(),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
