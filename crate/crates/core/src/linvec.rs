//! Vectors over GF(q) with the dot form `a·b = Σ a_i b_i`, and subspaces
//! stored by their unique reduced row echelon basis.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::gfield::{FieldElement, FieldSpec};

/// Global cap on the number of vectors any single enumeration may produce.
pub const VECTOR_CAP: u128 = 1 << 20;

#[derive(Clone, PartialEq, Eq)]
pub struct FVector {
    field: FieldSpec,
    entries: Vec<u32>,
}

impl FVector {
    pub fn new(entries: &[FieldElement]) -> Result<Self> {
        let first = entries.first().ok_or(Error::DimensionMismatch {
            expected: 1,
            actual: 0,
        })?;
        let field = first.field().clone();
        if entries.iter().any(|e| *e.field() != field) {
            return Err(Error::FieldMismatch);
        }
        Ok(FVector {
            entries: entries.iter().map(FieldElement::index).collect(),
            field,
        })
    }

    /// Builds a vector from field-element indices. Panics on an empty slice
    /// or an out-of-range index.
    pub fn from_indices(field: &FieldSpec, entries: &[u32]) -> Self {
        assert!(!entries.is_empty(), "vectors have at least one coordinate");
        assert!(entries.iter().all(|&e| e < field.q()));
        FVector {
            field: field.clone(),
            entries: entries.to_vec(),
        }
    }

    /// Builds a vector with entries in the prime subfield.
    pub fn from_ints(field: &FieldSpec, entries: &[i64]) -> Self {
        let idx: Vec<u32> = entries.iter().map(|&k| field.from_int(k).index()).collect();
        Self::from_indices(field, &idx)
    }

    pub fn zero(field: &FieldSpec, m: usize) -> Self {
        Self::from_indices(field, &vec![0; m])
    }

    /// The standard basis vector with a one at `i` (zero-based).
    pub fn unit(field: &FieldSpec, m: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        v[i] = 1;
        Self::from_indices(field, &v)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn indices(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> FieldElement {
        self.field.element(self.entries[i])
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    fn check_ambient(&self, other: &FVector) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }

    pub fn dot(&self, other: &FVector) -> Result<FieldElement> {
        self.check_ambient(other)?;
        Ok(self
            .field
            .element(dot_idx(&self.field, &self.entries, &other.entries)))
    }

    /// Nonzero and orthogonal to itself.
    pub fn is_isotropic(&self) -> bool {
        !self.is_zero() && dot_idx(&self.field, &self.entries, &self.entries) == 0
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &e) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", self.field.element(e))?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn dot_idx(field: &FieldSpec, a: &[u32], b: &[u32]) -> u32 {
    a.iter()
        .zip(b)
        .fold(0, |acc, (&x, &y)| field.add_idx(acc, field.mul_idx(x, y)))
}

/// Reduces `rows` in place to reduced row echelon form, dropping zero rows.
/// Returns the pivot columns.
pub(crate) fn rref_rows(field: &FieldSpec, rows: &mut Vec<Vec<u32>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, found);
        let scale = field.inv_idx(rows[rank][col]);
        for x in rows[rank].iter_mut() {
            *x = field.mul_idx(*x, scale);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                *x = field.sub_idx(*x, field.mul_idx(factor, y));
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Basis of `{x : R x = 0}` for a matrix `R` already in reduced row echelon
/// form with the given pivots.
fn null_space_of_rref(
    field: &FieldSpec,
    rows: &[Vec<u32>],
    pivots: &[usize],
    cols: usize,
) -> Vec<Vec<u32>> {
    let mut basis = Vec::new();
    let mut next_pivot = 0;
    for free in 0..cols {
        if next_pivot < pivots.len() && pivots[next_pivot] == free {
            next_pivot += 1;
            continue;
        }
        let mut v = vec![0u32; cols];
        v[free] = 1;
        for (row, &pc) in rows.iter().zip(pivots) {
            v[pc] = field.neg_idx(row[free]);
        }
        basis.push(v);
    }
    basis
}

/// A linear subspace of GF(q)^m, held as its reduced row echelon basis.
///
/// The zero subspace has an empty basis. Equality, hashing and ordering use
/// the basis matrix, ordered first by dimension and then lexicographically
/// row by row.
#[derive(Clone)]
pub struct Subspace {
    field: FieldSpec,
    m: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: &FieldSpec, m: usize) -> Self {
        Subspace {
            field: field.clone(),
            m,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &FieldSpec, m: usize) -> Self {
        let rows = (0..m)
            .map(|i| {
                let mut r = vec![0; m];
                r[i] = 1;
                r
            })
            .collect();
        Subspace {
            field: field.clone(),
            m,
            rows,
            pivots: (0..m).collect(),
        }
    }

    /// The span of `vectors` in GF(q)^m.
    pub fn span(field: &FieldSpec, m: usize, vectors: &[FVector]) -> Result<Self> {
        for v in vectors {
            if *v.field() != *field {
                return Err(Error::FieldMismatch);
            }
            if v.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    actual: v.dim(),
                });
            }
        }
        let rows = vectors.iter().map(|v| v.entries.clone()).collect();
        Ok(Self::from_rows(field, m, rows))
    }

    /// Row-reduces arbitrary rows of length `m`.
    pub fn from_rows(field: &FieldSpec, m: usize, mut rows: Vec<Vec<u32>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == m));
        let pivots = rref_rows(field, &mut rows, m);
        Subspace {
            field: field.clone(),
            m,
            rows,
            pivots,
        }
    }

    /// Wraps rows that are already in reduced row echelon form.
    pub(crate) fn from_rref_unchecked(
        field: &FieldSpec,
        m: usize,
        rows: Vec<Vec<u32>>,
        pivots: Vec<usize>,
    ) -> Self {
        Subspace {
            field: field.clone(),
            m,
            rows,
            pivots,
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<FVector> {
        self.rows
            .iter()
            .map(|r| FVector::from_indices(&self.field, r))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.m
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.field != other.field || self.m != other.m {
            Err(Error::AmbientMismatch)
        } else {
            Ok(())
        }
    }

    pub(crate) fn contains_idx(&self, v: &[u32]) -> bool {
        // v lies in the row space iff it equals the combination of the rows
        // weighted by its own pivot-column entries
        let mut rest = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = rest[pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in rest.iter_mut().zip(row) {
                *x = self.field.sub_idx(*x, self.field.mul_idx(c, y));
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    pub fn contains(&self, v: &FVector) -> bool {
        v.field == self.field && v.dim() == self.m && self.contains_idx(&v.entries)
    }

    /// `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.field == other.field
            && self.m == other.m
            && self.dim() <= other.dim()
            && self.rows.iter().all(|r| other.contains_idx(r))
    }

    /// Lattice join.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let rows = self.rows.iter().chain(&other.rows).cloned().collect();
        Ok(Self::from_rows(&self.field, self.m, rows))
    }

    /// Lattice meet, computed from the kernel of `[u_1 … u_r w_1 … w_s]`:
    /// every kernel vector `c` gives `Σ c_i u_i = -Σ c_{r+j} w_j`, a vector
    /// lying in both subspaces, and all common vectors arise this way.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let f = &self.field;
        let r = self.dim();
        let cols = r + other.dim();
        if r == 0 || other.is_zero() {
            return Ok(Subspace::zero(f, self.m));
        }
        // Row k of the system is coordinate k across all generators.
        let mut system: Vec<Vec<u32>> = (0..self.m)
            .map(|k| self.rows.iter().chain(&other.rows).map(|g| g[k]).collect())
            .collect();
        let pivots = rref_rows(f, &mut system, cols);
        let kernel = null_space_of_rref(f, &system, &pivots, cols);
        let common = kernel
            .iter()
            .map(|c| {
                let mut v = vec![0u32; self.m];
                for (coef, row) in c[..r].iter().zip(&self.rows) {
                    if *coef == 0 {
                        continue;
                    }
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = f.add_idx(*x, f.mul_idx(*coef, y));
                    }
                }
                v
            })
            .collect();
        Ok(Self::from_rows(f, self.m, common))
    }

    /// `{x : x·u = 0 for all u in self}`.
    pub fn orthocomplement(&self) -> Subspace {
        let kernel = null_space_of_rref(&self.field, &self.rows, &self.pivots, self.m);
        Self::from_rows(&self.field, self.m, kernel)
    }

    /// Every vector of the subspace once, as coefficient combinations of the
    /// basis in lexicographic order (first coefficient most significant).
    pub fn members(&self) -> Result<Vec<FVector>> {
        self.members_capped(VECTOR_CAP)
    }

    pub fn members_capped(&self, cap: u128) -> Result<Vec<FVector>> {
        let q = self.field.q() as u128;
        let count = q
            .checked_pow(self.dim() as u32)
            .filter(|&c| c <= cap)
            .ok_or(Error::CapExceeded {
                what: "subspace members",
                count: q.saturating_pow(self.dim() as u32),
                cap,
            })?;
        let f = &self.field;
        let mut out = Vec::with_capacity(count as usize);
        let mut coeffs = vec![0u32; self.dim()];
        loop {
            let mut v = vec![0u32; self.m];
            for (&c, row) in coeffs.iter().zip(&self.rows) {
                for (x, &y) in v.iter_mut().zip(row) {
                    *x = f.add_idx(*x, f.mul_idx(c, y));
                }
            }
            out.push(FVector::from_indices(f, &v));
            if !increment(&mut coeffs, f.q()) {
                break;
            }
        }
        Ok(out)
    }
}

/// Advances an odometer whose last digit is least significant; false once
/// it wraps back to all zeros.
pub(crate) fn increment(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.m == other.m && self.rows == other.rows && self.field == other.field
    }
}

impl Eq for Subspace {}

impl Hash for Subspace {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.m.hash(state);
        self.rows.hash(state);
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.m, self.rows.len(), &self.rows).cmp(&(other.m, other.rows.len(), &other.rows))
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("<")?;
        for (i, v) in self.basis_vectors().iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(">")
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// First isotropic vector of GF(q)^m in lexicographic order (leftmost
/// coordinate most significant), or `None` if there is none.
pub fn find_isotropic(field: &FieldSpec, m: usize) -> Result<Option<FVector>> {
    find_isotropic_capped(field, m, VECTOR_CAP)
}

pub fn find_isotropic_capped(field: &FieldSpec, m: usize, cap: u128) -> Result<Option<FVector>> {
    if m == 0 {
        return Err(Error::DomainError("dimension must be at least 1".into()));
    }
    let q = field.q() as u128;
    if q.checked_pow(m as u32).map_or(true, |c| c > cap) {
        return Err(Error::CapExceeded {
            what: "vectors to scan",
            count: q.saturating_pow(m as u32),
            cap,
        });
    }
    let mut v = vec![0u32; m];
    while increment(&mut v, field.q()) {
        if dot_idx(field, &v, &v) == 0 {
            return Ok(Some(FVector::from_indices(field, &v)));
        }
    }
    Ok(None)
}
