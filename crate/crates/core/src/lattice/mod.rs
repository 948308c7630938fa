//! The lattice L(V) of all subspaces of GF(q)^m, built exhaustively.

pub mod counting;
pub mod dot;
pub mod ortho;

use std::collections::HashMap;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

pub use counting::{
    atom_count, gaussian_count, lower_covers_count, total_subspaces, upper_covers_count,
};
pub use ortho::OrthoLattice;

use crate::error::{Error, Result};
use crate::gfield::FieldSpec;
use crate::linvec::{increment, Subspace};

/// Largest lattice `build` will enumerate.
pub const SUBSPACE_CAP: u128 = 100_000;

/// Largest lattice whose order relation is stored as bitsets; above it,
/// `leq` tests containment directly.
pub const ORDER_CAP: usize = 16_384;

/// Largest lattice for which join and meet are tabulated (quadratic memory).
pub const TABLE_CAP: usize = 2048;

#[derive(Debug)]
pub struct SubspaceLattice {
    field: FieldSpec,
    m: usize,
    elements: Vec<Subspace>,
    index: HashMap<Subspace, usize>,
    up: Option<Vec<FixedBitSet>>,
    upper_covers: Vec<Vec<usize>>,
    lower_covers: Vec<Vec<usize>>,
    perp: Vec<usize>,
    tables: OnceLock<OrthoLattice>,
}

/// Per-dimension counts observed in a built lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountProfile {
    pub q: u32,
    pub m: usize,
    pub by_dimension: Vec<usize>,
    pub atom_count: usize,
    /// For each dimension `d < m`, the number of upper covers shared by every
    /// `d`-dimensional element, or `None` if they disagree.
    pub upper_cover_counts: Vec<Option<usize>>,
    /// For each dimension `d > 0`, likewise for lower covers (index 0 unused).
    pub lower_cover_counts: Vec<Option<usize>>,
}

/// Representatives of the one-dimensional subspaces of V/U: nonzero vectors
/// vanishing on U's pivot columns, normalized to a leading one. Adjoining
/// each to U yields every upper cover of U exactly once.
fn quotient_points(field: &FieldSpec, u: &Subspace) -> Vec<Vec<u32>> {
    let m = u.ambient_dim();
    let free: Vec<usize> = (0..m).filter(|c| !u.pivots().contains(c)).collect();
    let mut out = Vec::new();
    for (lead, &col) in free.iter().enumerate() {
        let tail = &free[lead + 1..];
        let mut values = vec![0u32; tail.len()];
        loop {
            let mut v = vec![0u32; m];
            v[col] = 1;
            for (&c, &x) in tail.iter().zip(&values) {
                v[c] = x;
            }
            out.push(v);
            if !increment(&mut values, field.q()) {
                break;
            }
        }
    }
    out
}

/// All RREF matrices of rank `d` with `m` columns, each exactly once.
fn rref_matrices(field: &FieldSpec, m: usize, d: usize) -> Vec<Subspace> {
    let q = field.q();
    let mut out = Vec::new();
    for pivots in (0..m).combinations(d) {
        // free slots: (row, col) right of the row's pivot, off every pivot column
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &pc)| {
                let pivots = &pivots;
                (pc + 1..m)
                    .filter(move |c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        let mut values = vec![0u32; free.len()];
        loop {
            let mut rows = vec![vec![0u32; m]; d];
            for (r, &pc) in pivots.iter().enumerate() {
                rows[r][pc] = 1;
            }
            for (&(r, c), &v) in free.iter().zip(&values) {
                rows[r][c] = v;
            }
            out.push(Subspace::from_rref_unchecked(
                field,
                m,
                rows,
                pivots.clone(),
            ));
            if !increment(&mut values, q) {
                break;
            }
        }
    }
    out
}

impl SubspaceLattice {
    pub fn build(field: &FieldSpec, m: usize) -> Result<Self> {
        Self::build_capped(field, m, SUBSPACE_CAP)
    }

    /// Like [`SubspaceLattice::build`] but with a cap no larger than
    /// [`SUBSPACE_CAP`].
    pub fn build_capped(field: &FieldSpec, m: usize, cap: u128) -> Result<Self> {
        if m == 0 {
            return Err(Error::DomainError("dimension must be at least 1".into()));
        }
        let cap = cap.min(SUBSPACE_CAP);
        let q = field.q() as u64;
        let total = match total_subspaces(q, m as u32) {
            Ok(t) => t,
            Err(Error::Overflow(_)) => u128::MAX,
            Err(e) => return Err(e),
        };
        if total > cap {
            return Err(Error::CapExceeded {
                what: "subspaces",
                count: total,
                cap,
            });
        }
        let mut elements = Vec::with_capacity(total as usize);
        for d in 0..=m {
            let mut layer = rref_matrices(field, m, d);
            layer.sort();
            elements.extend(layer);
        }
        let n = elements.len();
        let index: HashMap<Subspace, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, s)| (s, i))
            .collect();
        assert_eq!(index.len(), n, "RREF enumeration produced a duplicate");

        let mut upper_covers = vec![Vec::new(); n];
        let mut lower_covers = vec![Vec::new(); n];
        for (i, u) in elements.iter().enumerate() {
            for v in quotient_points(field, u) {
                let mut rows = u.basis().to_vec();
                rows.push(v);
                let j = index[&Subspace::from_rows(field, m, rows)];
                upper_covers[i].push(j);
                lower_covers[j].push(i);
            }
            upper_covers[i].sort_unstable();
        }
        for lc in lower_covers.iter_mut() {
            lc.sort_unstable();
        }
        let up = (n <= ORDER_CAP).then(|| {
            // indices ascend with dimension, so every cover has a larger index
            let mut up = vec![FixedBitSet::with_capacity(n); n];
            for i in (0..n).rev() {
                let mut set = FixedBitSet::with_capacity(n);
                set.insert(i);
                for &c in &upper_covers[i] {
                    set.union_with(&up[c]);
                }
                up[i] = set;
            }
            up
        });
        let perp = elements
            .iter()
            .map(|s| index[&s.orthocomplement()])
            .collect();
        Ok(SubspaceLattice {
            field: field.clone(),
            m,
            elements,
            index,
            up,
            upper_covers,
            lower_covers,
            perp,
            tables: OnceLock::new(),
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subspace {
        &self.elements[i]
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn dim_of(&self, i: usize) -> usize {
        self.elements[i].dim()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        match &self.up {
            Some(up) => up[i].contains(j),
            None => self.elements[i].is_subspace_of(&self.elements[j]),
        }
    }

    /// Checks the stored order against direct containment of row spaces for
    /// every pair.
    pub fn order_matches_containment(&self) -> bool {
        (0..self.len()).all(|i| {
            (0..self.len())
                .all(|j| self.leq(i, j) == self.elements[i].is_subspace_of(&self.elements[j]))
        })
    }

    fn up_sets(&self) -> Vec<FixedBitSet> {
        match &self.up {
            Some(up) => up.clone(),
            None => (0..self.len())
                .map(|i| {
                    let mut set = FixedBitSet::with_capacity(self.len());
                    set.extend((0..self.len()).filter(|&j| self.leq(i, j)));
                    set
                })
                .collect(),
        }
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower_covers[i]
    }

    pub fn perp(&self, i: usize) -> usize {
        self.perp[i]
    }

    /// Join through subspace sum.
    pub fn join(&self, i: usize, j: usize) -> usize {
        let s = self.elements[i]
            .sum(&self.elements[j])
            .expect("same ambient space");
        self.index[&s]
    }

    /// Meet through the kernel construction of the intersection.
    pub fn meet(&self, i: usize, j: usize) -> usize {
        let s = self.elements[i]
            .intersect(&self.elements[j])
            .expect("same ambient space");
        self.index[&s]
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers[0].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        self.lower_covers[self.top()].clone()
    }

    /// Element indices grouped by dimension.
    pub fn layers(&self) -> Vec<Vec<usize>> {
        let mut layers = vec![Vec::new(); self.m + 1];
        for (i, s) in self.elements.iter().enumerate() {
            layers[s.dim()].push(i);
        }
        layers
    }

    pub fn count_profile(&self) -> CountProfile {
        let layers = self.layers();
        fn shared(mut counts: impl Iterator<Item = usize>) -> Option<usize> {
            let first = counts.next()?;
            counts.all(|c| c == first).then_some(first)
        }
        CountProfile {
            q: self.field.q(),
            m: self.m,
            by_dimension: layers.iter().map(Vec::len).collect(),
            atom_count: self.upper_covers[0].len(),
            upper_cover_counts: layers[..self.m]
                .iter()
                .map(|l| shared(l.iter().map(|&i| self.upper_covers[i].len())))
                .collect(),
            lower_cover_counts: layers
                .iter()
                .enumerate()
                .map(|(d, l)| {
                    if d == 0 {
                        None
                    } else {
                        shared(l.iter().map(|&i| self.lower_covers[i].len()))
                    }
                })
                .collect(),
        }
    }

    /// Table form of the lattice with algebraic join (sum) and meet
    /// (intersection). Built on first use.
    pub fn tables(&self) -> Result<&OrthoLattice> {
        let n = self.len();
        if n > TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "lattice operation tables",
                count: n as u128,
                cap: TABLE_CAP as u128,
            });
        }
        Ok(self.tables.get_or_init(|| {
            let mut join = vec![0u32; n * n];
            let mut meet = vec![0u32; n * n];
            for i in 0..n {
                for j in i..n {
                    let (a, b) = (self.join(i, j) as u32, self.meet(i, j) as u32);
                    join[i * n + j] = a;
                    join[j * n + i] = a;
                    meet[i * n + j] = b;
                    meet[j * n + i] = b;
                }
            }
            let labels = self.elements.iter().map(|s| s.to_string()).collect();
            OrthoLattice::from_operations(
                labels,
                self.up_sets(),
                join,
                meet,
                self.perp.clone(),
                Some(self.upper_covers.clone()),
            )
            .expect("subspace inclusion is a bounded partial order")
        }))
    }

    /// Compares the dimension-derived covers against a generic transitive
    /// reduction of the inclusion order.
    pub fn covers_match_transitive_reduction(&self) -> bool {
        let labels = vec![String::new(); self.len()];
        let generic = OrthoLattice::from_operations(
            labels,
            self.up_sets(),
            vec![0; self.len() * self.len()],
            vec![0; self.len() * self.len()],
            self.perp.clone(),
            None,
        )
        .expect("subspace inclusion is a bounded partial order");
        (0..self.len()).all(|i| generic.upper_covers(i) == self.upper_covers[i].as_slice())
    }
}

/// Outcome of the chain-condition walk.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainCheck {
    /// Every maximal chain from the bottom to element `i` has `lengths[i]` steps.
    Holds { lengths: Vec<usize> },
    /// Two maximal chains ending at the same element with different lengths.
    Fails {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// A maximal chain whose length differs from the dimension of its end.
    LengthMismatch { chain: Vec<usize>, expected: usize },
}

impl ChainCheck {
    pub fn holds(&self) -> bool {
        matches!(self, ChainCheck::Holds { .. })
    }
}

/// Depth-first walk over maximal chains from the bottom along covers. A
/// revisit with the already recorded length is not expanded again, since
/// every continuation from there repeats; any differing length is a witness.
pub fn chain_walk(
    len: usize,
    bottom: usize,
    upper_covers: impl Fn(usize) -> Vec<usize>,
) -> ChainCheck {
    let mut first_path: Vec<Option<Vec<usize>>> = vec![None; len];
    let mut stack = vec![vec![bottom]];
    while let Some(path) = stack.pop() {
        let end = *path.last().unwrap();
        match &first_path[end] {
            Some(seen) if seen.len() == path.len() => continue,
            Some(seen) => {
                return ChainCheck::Fails {
                    first: seen.clone(),
                    second: path,
                }
            }
            None => {}
        }
        for &next in upper_covers(end).iter().rev() {
            let mut longer = path.clone();
            longer.push(next);
            stack.push(longer);
        }
        first_path[end] = Some(path);
    }
    ChainCheck::Holds {
        lengths: first_path
            .iter()
            .map(|p| p.as_ref().map_or(0, |p| p.len() - 1))
            .collect(),
    }
}

/// Every maximal chain from `{0}` to `U` has exactly `dim U` steps.
pub fn chain_condition_check(lattice: &SubspaceLattice) -> ChainCheck {
    match chain_walk(lattice.len(), 0, |i| lattice.upper_covers(i).to_vec()) {
        ChainCheck::Holds { lengths } => {
            if let Some(bad) = (0..lattice.len()).find(|&i| lengths[i] != lattice.dim_of(i)) {
                let mut path = vec![0];
                while *path.last().unwrap() != bad {
                    let cur = *path.last().unwrap();
                    let next = lattice
                        .upper_covers(cur)
                        .iter()
                        .copied()
                        .find(|&j| lattice.leq(j, bad));
                    path.push(next.expect("bad is reachable"));
                }
                return ChainCheck::LengthMismatch {
                    chain: path,
                    expected: lattice.dim_of(bad),
                };
            }
            ChainCheck::Holds { lengths }
        }
        fails => fails,
    }
}
