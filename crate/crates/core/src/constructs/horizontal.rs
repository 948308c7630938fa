//! Horizontal sums: two bounded ortholattices glued at their bounds.

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::lattice::OrthoLattice;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    Bottom,
    Top,
    First(usize),
    Second(usize),
}

/// `L1 + L2` on `L1 ∪ L2`: operations inside one summand are inherited,
/// across summands `x ∨ y = 1` and `x ∧ y = 0`, and `'` is inherited.
///
/// Element order: bottom, the non-bound elements of `l1`, those of `l2`,
/// then top. Bounds take their labels from `l1`.
pub fn horizontal_sum(l1: &OrthoLattice, l2: &OrthoLattice) -> Result<OrthoLattice> {
    if l1.len() <= 2 || l2.len() <= 2 {
        return Err(Error::TrivialSummand);
    }
    let inner = |l: &OrthoLattice| -> Vec<usize> {
        (0..l.len())
            .filter(|&i| i != l.bottom() && i != l.top())
            .collect()
    };
    let (in1, in2) = (inner(l1), inner(l2));
    for &i in &in1 {
        if in2.iter().any(|&j| l2.label(j) == l1.label(i)) {
            return Err(Error::OverlapViolation(l1.label(i).to_string()));
        }
    }

    let mut parts = vec![Part::Bottom];
    parts.extend(in1.iter().map(|&i| Part::First(i)));
    parts.extend(in2.iter().map(|&i| Part::Second(i)));
    parts.push(Part::Top);
    let n = parts.len();
    let top = n - 1;
    let position = |part: Part| parts.iter().position(|&p| p == part).unwrap();
    // local index of an element inside summand 1 or 2, if it belongs there
    let local = |x: usize, which: u8| -> Option<usize> {
        let l = if which == 1 { l1 } else { l2 };
        match parts[x] {
            Part::Bottom => Some(l.bottom()),
            Part::Top => Some(l.top()),
            Part::First(i) if which == 1 => Some(i),
            Part::Second(i) if which == 2 => Some(i),
            _ => None,
        }
    };
    let global = |i: usize, which: u8| -> usize {
        let l = if which == 1 { l1 } else { l2 };
        if i == l.bottom() {
            0
        } else if i == l.top() {
            top
        } else if which == 1 {
            position(Part::First(i))
        } else {
            position(Part::Second(i))
        }
    };
    let shared = |x: usize, y: usize| -> Option<(u8, usize, usize)> {
        [1u8, 2]
            .into_iter()
            .find_map(|w| Some((w, local(x, w)?, local(y, w)?)))
    };

    let mut join = vec![0u32; n * n];
    let mut meet = vec![0u32; n * n];
    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for x in 0..n {
        for y in 0..n {
            let (j, m, le) = match shared(x, y) {
                Some((w, a, b)) => {
                    let l = if w == 1 { l1 } else { l2 };
                    (
                        global(l.join(a, b), w),
                        global(l.meet(a, b), w),
                        l.leq(a, b),
                    )
                }
                None => (top, 0, false),
            };
            join[x * n + y] = j as u32;
            meet[x * n + y] = m as u32;
            if le {
                up[x].insert(y);
            }
        }
    }
    let perp = (0..n)
        .map(|x| {
            let w = if local(x, 1).is_some() { 1 } else { 2 };
            let l = if w == 1 { l1 } else { l2 };
            global(l.perp(local(x, w).unwrap()), w)
        })
        .collect();
    let mut labels = vec![l1.label(l1.bottom()).to_string()];
    labels.extend(in1.iter().map(|&i| l1.label(i).to_string()));
    labels.extend(in2.iter().map(|&i| l2.label(i).to_string()));
    labels.push(l1.label(l1.top()).to_string());
    OrthoLattice::from_operations(labels, up, join, meet, perp, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::{check_orthomodular, recognize_mon};

    fn renamed(l: OrthoLattice, prefix: &str) -> OrthoLattice {
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

    #[test]
    fn two_squares_give_mo2() {
        let a = renamed(OrthoLattice::boolean(2), "a");
        let b = renamed(OrthoLattice::boolean(2), "b");
        let s = horizontal_sum(&a, &b).unwrap();
        assert_eq!(s.len(), 6);
        assert!(s.operations_match_order().is_ok());
        assert!(check_orthomodular(&s).holds());
        assert_eq!(recognize_mon(&s), Some(2));
    }

    #[test]
    fn cube_plus_square() {
        let a = renamed(OrthoLattice::boolean(3), "a");
        let b = renamed(OrthoLattice::boolean(2), "b");
        let s = horizontal_sum(&a, &b).unwrap();
        assert_eq!(s.len(), 10);
        assert!(s.operations_match_order().is_ok());
        assert!(check_orthomodular(&s).holds());
        assert_eq!(s.atoms().len(), 5);
        assert_eq!(s.coatoms().len(), 5);
    }

    #[test]
    fn rejects_bad_inputs() {
        let b1 = OrthoLattice::boolean(1);
        let b2 = OrthoLattice::boolean(2);
        assert_eq!(horizontal_sum(&b2, &b1).unwrap_err(), Error::TrivialSummand);
        assert!(matches!(
            horizontal_sum(&b2, &b2),
            Err(Error::OverlapViolation(_))
        ));
    }
}
