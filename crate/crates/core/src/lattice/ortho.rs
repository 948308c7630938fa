//! Finite bounded lattices with a unary operation, held as explicit tables.
//!
//! This is the common representation the law checkers work on. Subspace
//! lattices fill the join and meet tables algebraically; abstract inputs
//! (Boolean algebras, horizontal sums, induced subposets) derive them from
//! the order.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct OrthoLattice {
    labels: Vec<String>,
    /// `up[i]` holds every `j` with `i ≤ j`.
    up: Vec<FixedBitSet>,
    /// `down[j]` holds every `i` with `i ≤ j`.
    down: Vec<FixedBitSet>,
    join: Vec<u32>,
    meet: Vec<u32>,
    perp: Vec<usize>,
    bottom: usize,
    top: usize,
    upper_covers: Vec<Vec<usize>>,
}

fn transpose(up: &[FixedBitSet]) -> Vec<FixedBitSet> {
    let n = up.len();
    let mut down = vec![FixedBitSet::with_capacity(n); n];
    for (i, row) in up.iter().enumerate() {
        for j in row.ones() {
            down[j].insert(i);
        }
    }
    down
}

fn check_perp(perp: &[usize], n: usize) -> Result<()> {
    if perp.len() != n || perp.iter().any(|&x| x >= n) {
        return Err(Error::DomainError(
            "unary operation must map every element into the carrier".into(),
        ));
    }
    Ok(())
}

impl OrthoLattice {
    /// Builds the structure from a partial order and a unary map, deriving
    /// join and meet as least upper and greatest lower bounds.
    pub fn from_order(
        labels: Vec<String>,
        leq: impl Fn(usize, usize) -> bool,
        perp: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        check_perp(&perp, n)?;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter_mut().enumerate() {
            for j in 0..n {
                if leq(i, j) {
                    row.insert(j);
                }
            }
        }
        Self::from_up_sets(labels, up, perp)
    }

    pub(crate) fn from_up_sets(
        labels: Vec<String>,
        up: Vec<FixedBitSet>,
        perp: Vec<usize>,
    ) -> Result<Self> {
        let n = labels.len();
        validate_partial_order(&up)?;
        let down = transpose(&up);
        let (bottom, top) = bounds(&up, &down)?;
        let mut join = vec![0u32; n * n];
        let mut meet = vec![0u32; n * n];
        for i in 0..n {
            for j in i..n {
                let lub = least_in(&up, &up[i], &up[j]).ok_or_else(|| {
                    Error::NotALattice(format!("{} and {} have no join", labels[i], labels[j]))
                })?;
                let glb = least_in(&down, &down[i], &down[j]).ok_or_else(|| {
                    Error::NotALattice(format!("{} and {} have no meet", labels[i], labels[j]))
                })?;
                join[i * n + j] = lub as u32;
                join[j * n + i] = lub as u32;
                meet[i * n + j] = glb as u32;
                meet[j * n + i] = glb as u32;
            }
        }
        let upper_covers = reduce(&up, &down);
        Ok(OrthoLattice {
            labels,
            up,
            down,
            join,
            meet,
            perp,
            bottom,
            top,
            upper_covers,
        })
    }

    /// Builds the structure from an order plus explicitly given join and meet
    /// tables (row-major `n × n`). The tables are taken as is; use
    /// [`OrthoLattice::operations_match_order`] to confirm them.
    pub fn from_operations(
        labels: Vec<String>,
        up: Vec<FixedBitSet>,
        join: Vec<u32>,
        meet: Vec<u32>,
        perp: Vec<usize>,
        upper_covers: Option<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        let n = labels.len();
        check_perp(&perp, n)?;
        if up.len() != n || join.len() != n * n || meet.len() != n * n {
            return Err(Error::DomainError(
                "table sizes do not match the carrier".into(),
            ));
        }
        if join.iter().chain(&meet).any(|&x| x as usize >= n) {
            return Err(Error::DomainError(
                "operation table leaves the carrier".into(),
            ));
        }
        validate_partial_order(&up)?;
        let down = transpose(&up);
        let (bottom, top) = bounds(&up, &down)?;
        let upper_covers = upper_covers.unwrap_or_else(|| reduce(&up, &down));
        Ok(OrthoLattice {
            labels,
            up,
            down,
            join,
            meet,
            perp,
            bottom,
            top,
            upper_covers,
        })
    }

    /// The Boolean algebra of subsets of a `k`-set with set complement.
    /// Element `i` is the subset with bit mask `i`.
    pub fn boolean(k: u32) -> Self {
        let n = 1usize << k;
        let full = n - 1;
        let labels = (0..n)
            .map(|mask| {
                let items: Vec<String> = (0..k)
                    .filter(|b| mask >> b & 1 == 1)
                    .map(|b| (b + 1).to_string())
                    .collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        let perp = (0..n).map(|mask| full ^ mask).collect();
        Self::from_order(labels, |a, b| a & b == a, perp).expect("power sets are lattices")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = labels;
        self
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn up_set(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    pub fn down_set(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.join[i * self.len() + j] as usize
    }

    pub fn meet(&self, i: usize, j: usize) -> usize {
        self.meet[i * self.len() + j] as usize
    }

    pub fn perp(&self, i: usize) -> usize {
        self.perp[i]
    }

    pub fn perp_map(&self) -> &[usize] {
        &self.perp
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn upper_covers(&self, i: usize) -> &[usize] {
        &self.upper_covers[i]
    }

    pub fn atoms(&self) -> Vec<usize> {
        self.upper_covers[self.bottom].clone()
    }

    pub fn coatoms(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&i| self.upper_covers[i] == [self.top])
            .collect()
    }

    /// Least upper bound computed from the order alone.
    pub fn order_join(&self, i: usize, j: usize) -> Option<usize> {
        least_in(&self.up, &self.up[i], &self.up[j])
    }

    /// Greatest lower bound computed from the order alone.
    pub fn order_meet(&self, i: usize, j: usize) -> Option<usize> {
        least_in(&self.down, &self.down[i], &self.down[j])
    }

    /// First pair (in index order) whose tabulated join or meet differs from
    /// the order-theoretic one.
    pub fn operations_match_order(&self) -> std::result::Result<(), (usize, usize)> {
        for i in 0..self.len() {
            for j in 0..self.len() {
                if self.order_join(i, j) != Some(self.join(i, j))
                    || self.order_meet(i, j) != Some(self.meet(i, j))
                {
                    return Err((i, j));
                }
            }
        }
        Ok(())
    }

    /// Cover relation by generic transitive reduction of the order.
    pub fn transitive_reduction(&self) -> Vec<Vec<usize>> {
        reduce(&self.up, &self.down)
    }

    /// The induced subposet on `subset` (kept in the given order) with the
    /// unary map restricted to it. Fails if the map leaves the subset or the
    /// induced order is not a lattice.
    pub fn induced(&self, subset: &[usize]) -> Result<OrthoLattice> {
        let pos = |x: usize| subset.iter().position(|&s| s == x);
        let perp = subset
            .iter()
            .map(|&s| {
                pos(self.perp[s]).ok_or_else(|| {
                    Error::DomainError(format!(
                        "{} has its complement outside the subset",
                        self.labels[s]
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let labels = subset.iter().map(|&s| self.labels[s].clone()).collect();
        Self::from_order(labels, |a, b| self.leq(subset[a], subset[b]), perp)
    }

    /// A bijection `f` with `x ≤ y ⟺ f(x) ≤ f(y)` and `f(x') = f(x)'`, found
    /// by backtracking. Intended for small structures.
    pub fn find_isomorphism(&self, other: &OrthoLattice) -> Option<Vec<usize>> {
        let n = self.len();
        if n != other.len() {
            return None;
        }
        let signature = |l: &OrthoLattice, i: usize| {
            (
                l.up[i].count_ones(..),
                l.down[i].count_ones(..),
                l.perp[i] == i,
            )
        };
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        fn extend(
            a: &OrthoLattice,
            b: &OrthoLattice,
            i: usize,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
            sig: &dyn Fn(&OrthoLattice, usize) -> (usize, usize, bool),
        ) -> bool {
            if i == a.len() {
                return (0..a.len()).all(|x| map[a.perp[x]] == b.perp[map[x]]);
            }
            for cand in 0..b.len() {
                if used[cand] || sig(a, i) != sig(b, cand) {
                    continue;
                }
                let consistent = (0..i).all(|x| {
                    a.leq(x, i) == b.leq(map[x], cand) && a.leq(i, x) == b.leq(cand, map[x])
                });
                if !consistent {
                    continue;
                }
                map[i] = cand;
                used[cand] = true;
                if extend(a, b, i + 1, map, used, sig) {
                    return true;
                }
                used[cand] = false;
            }
            false
        }
        extend(self, other, 0, &mut map, &mut used, &signature).then_some(map)
    }
}

fn validate_partial_order(up: &[FixedBitSet]) -> Result<()> {
    let n = up.len();
    for i in 0..n {
        if !up[i].contains(i) {
            return Err(Error::NotAPartialOrder(format!(
                "element {i} is not below itself"
            )));
        }
        for j in up[i].ones() {
            if j != i && up[j].contains(i) {
                return Err(Error::NotAPartialOrder(format!(
                    "elements {i} and {j} are mutually below"
                )));
            }
            if !up[j].is_subset(&up[i]) {
                return Err(Error::NotAPartialOrder(format!(
                    "order is not transitive at {i} ≤ {j}"
                )));
            }
        }
    }
    Ok(())
}

fn bounds(up: &[FixedBitSet], down: &[FixedBitSet]) -> Result<(usize, usize)> {
    let n = up.len();
    let bottom = (0..n)
        .find(|&i| up[i].count_ones(..) == n)
        .ok_or_else(|| Error::NotALattice("no least element".into()))?;
    let top = (0..n)
        .find(|&i| down[i].count_ones(..) == n)
        .ok_or_else(|| Error::NotALattice("no greatest element".into()))?;
    Ok((bottom, top))
}

/// Within `a ∩ b`, the element `c` whose own set (in `sets`) contains all of
/// `a ∩ b`; that is the least element of the bound set.
fn least_in(sets: &[FixedBitSet], a: &FixedBitSet, b: &FixedBitSet) -> Option<usize> {
    let mut common = a.clone();
    common.intersect_with(b);
    common.ones().find(|&c| common.is_subset(&sets[c]))
}

fn reduce(up: &[FixedBitSet], down: &[FixedBitSet]) -> Vec<Vec<usize>> {
    let n = up.len();
    (0..n)
        .map(|i| {
            up[i]
                .ones()
                .filter(|&j| {
                    if j == i {
                        return false;
                    }
                    let mut between = up[i].clone();
                    between.intersect_with(&down[j]);
                    between.count_ones(..) == 2
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> OrthoLattice {
        let labels = (0..n).map(|i| i.to_string()).collect();
        OrthoLattice::from_order(labels, |a, b| a <= b, (0..n).rev().collect()).unwrap()
    }

    #[test]
    fn boolean_algebra_shape() {
        let b3 = OrthoLattice::boolean(3);
        assert_eq!(b3.len(), 8);
        assert_eq!(b3.atoms(), vec![1, 2, 4]);
        assert_eq!(b3.coatoms(), vec![3, 5, 6]);
        assert_eq!(b3.join(1, 2), 3);
        assert_eq!(b3.meet(3, 6), 2);
        assert_eq!(b3.perp(1), 6);
        assert_eq!(b3.label(5), "{1,3}");
        assert!(b3.operations_match_order().is_ok());
    }

    #[test]
    fn rejects_non_lattices() {
        // two incomparable maximal elements
        let labels = vec!["0".into(), "a".into(), "b".into()];
        let err =
            OrthoLattice::from_order(labels, |x, y| x == y || x == 0, vec![0, 2, 1]).unwrap_err();
        assert!(matches!(err, Error::NotALattice(_)));
        // a 2-cycle is not antisymmetric
        let labels = vec!["0".into(), "1".into()];
        let err = OrthoLattice::from_order(labels, |_, _| true, vec![1, 0]).unwrap_err();
        assert!(matches!(err, Error::NotAPartialOrder(_)));
    }

    #[test]
    fn covers_of_chain() {
        let c = chain(4);
        assert_eq!(c.upper_covers(0), &[1]);
        assert_eq!(c.upper_covers(3), &[] as &[usize]);
        assert_eq!(c.transitive_reduction()[1], vec![2]);
    }

    #[test]
    fn isomorphism_search() {
        let b2 = OrthoLattice::boolean(2);
        let relabeled = OrthoLattice::from_order(
            vec!["1".into(), "a".into(), "0".into(), "b".into()],
            |x, y| {
                let rank = [2, 1, 0, 1];
                x == y || rank[x] < rank[y] && (rank[x] == 0 || rank[y] == 2)
            },
            vec![2, 3, 0, 1],
        )
        .unwrap();
        let f = b2.find_isomorphism(&relabeled).unwrap();
        assert_eq!(f[0], 2);
        assert_eq!(f[3], 0);
        assert!(b2.find_isomorphism(&chain(4)).is_none());
        assert!(b2.find_isomorphism(&OrthoLattice::boolean(3)).is_none());
    }

    #[test]
    fn induced_requires_closure_under_perp() {
        let b2 = OrthoLattice::boolean(2);
        assert!(b2.induced(&[0, 1, 3]).is_err());
        let sub = b2.induced(&[0, 3]).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.perp(0), 1);
    }
}
