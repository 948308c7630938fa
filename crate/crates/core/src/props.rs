//! Exhaustive decision procedures for lattice laws.
//!
//! Every checker scans all elements, pairs or triples in index order and
//! reports the first counterexample it meets, so witnesses are minimal in
//! that order and stable across runs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::lattice::{chain_condition_check, ChainCheck, OrthoLattice, SubspaceLattice};

/// A counterexample: the clause that failed and the elements involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub clause: String,
    pub elements: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails(Witness),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    fn fails(clause: &str, elements: Vec<usize>) -> Self {
        Verdict::Fails(Witness {
            clause: clause.to_string(),
            elements,
        })
    }
}

/// `x ≤ z ⟹ x ∨ (y ∧ z) = (x ∨ y) ∧ z`; witness `[x, y, z]`.
pub fn check_modular(l: &OrthoLattice) -> Verdict {
    for x in 0..l.len() {
        for z in l.up_set(x).ones() {
            for y in 0..l.len() {
                if l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z) {
                    return Verdict::fails("x <= z but x v (y ^ z) != (x v y) ^ z", vec![x, y, z]);
                }
            }
        }
    }
    Verdict::Holds
}

/// Every element is the join of the atoms below it; witness `[x]`.
pub fn check_atomistic(l: &OrthoLattice) -> Verdict {
    let atoms = l.atoms();
    for x in 0..l.len() {
        let join = atoms
            .iter()
            .filter(|&&a| l.leq(a, x))
            .fold(l.bottom(), |acc, &a| l.join(acc, a));
        if join != x {
            return Verdict::fails("x is not the join of the atoms below it", vec![x]);
        }
    }
    Verdict::Holds
}

/// `x'' = x` for all `x` and `x ≤ y ⟹ y' ≤ x'`.
pub fn check_antitone_involution(l: &OrthoLattice) -> Verdict {
    for x in 0..l.len() {
        if l.perp(l.perp(x)) != x {
            return Verdict::fails("x'' != x", vec![x, l.perp(x)]);
        }
    }
    for x in 0..l.len() {
        for y in l.up_set(x).ones() {
            if !l.leq(l.perp(y), l.perp(x)) {
                return Verdict::fails("x <= y but not y' <= x'", vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

/// `x ∧ x' = 0` and `x ∨ x' = 1` for all `x`; witness
/// `[x, x', x ∨ x', x ∧ x']`. For subspace lattices the two clauses are
/// equivalent through `dim(U+U^⊥) + dim(U∩U^⊥) = m`; both are evaluated,
/// and a disagreement between them is reported as its own clause.
pub fn check_complementation(l: &OrthoLattice) -> Verdict {
    for x in 0..l.len() {
        let xp = l.perp(x);
        let (j, m) = (l.join(x, xp), l.meet(x, xp));
        let meet_ok = m == l.bottom();
        let join_ok = j == l.top();
        if !meet_ok || !join_ok {
            let clause = match (meet_ok, join_ok) {
                (false, false) => "x ^ x' != 0 and x v x' != 1",
                (false, true) => "x ^ x' != 0",
                _ => "x v x' != 1",
            };
            return Verdict::fails(clause, vec![x, xp, j, m]);
        }
    }
    Verdict::Holds
}

/// Antitone involution, complementation, and `x ≤ y ⟹ y = x ∨ (x' ∧ y)`.
/// Each prerequisite is re-checked here; the first failing one is reported.
pub fn check_orthomodular(l: &OrthoLattice) -> Verdict {
    let prerequisite = check_antitone_involution(l);
    if !prerequisite.holds() {
        return prerequisite;
    }
    let prerequisite = check_complementation(l);
    if !prerequisite.holds() {
        return prerequisite;
    }
    for x in 0..l.len() {
        for y in l.up_set(x).ones() {
            if l.join(x, l.meet(l.perp(x), y)) != y {
                return Verdict::fails("x <= y but y != x v (x' ^ y)", vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

/// `x ≤ y` and `x' ∧ y = 0` imply `x = y`; witness `[x, y]`.
pub fn check_paraorthomodular(l: &OrthoLattice) -> Verdict {
    for x in 0..l.len() {
        for y in l.up_set(x).ones() {
            if y != x && l.meet(l.perp(x), y) == l.bottom() {
                return Verdict::fails("x < y and x' ^ y = 0", vec![x, y]);
            }
        }
    }
    Verdict::Holds
}

fn chain_verdict(check: ChainCheck) -> Verdict {
    match check {
        ChainCheck::Holds { .. } => Verdict::Holds,
        ChainCheck::Fails { mut first, second } => {
            first.extend(second);
            Verdict::fails(
                "two maximal chains to the same element differ in length",
                first,
            )
        }
        ChainCheck::LengthMismatch { chain, .. } => {
            Verdict::fails("maximal chain length differs from the dimension", chain)
        }
    }
}

/// Chain condition on an abstract structure: all maximal chains from the
/// bottom to any element have equal length.
pub fn check_chain_condition(l: &OrthoLattice) -> Verdict {
    chain_verdict(crate::lattice::chain_walk(l.len(), l.bottom(), |i| {
        l.upper_covers(i).to_vec()
    }))
}

/// `n` if the structure is M_n: height two with `n ≥ 2` elements, each both
/// an atom and a coatom.
pub fn recognize_mn(l: &OrthoLattice) -> Option<usize> {
    let n = l.len().checked_sub(2)?;
    if n < 2 {
        return None;
    }
    let middle: Vec<usize> = (0..l.len())
        .filter(|&i| i != l.bottom() && i != l.top())
        .collect();
    let shape_ok = l.atoms().len() == n
        && middle
            .iter()
            .all(|&i| l.upper_covers(i) == [l.top()] && l.upper_covers(l.bottom()).contains(&i));
    shape_ok.then_some(n)
}

/// `n` if the structure is MO_n: M_{2n} whose involution swaps the bounds
/// and splits the atoms into `n` pairs `a ≠ a'`.
pub fn recognize_mon(l: &OrthoLattice) -> Option<usize> {
    let atoms = recognize_mn(l)?;
    if atoms % 2 != 0 || l.perp(l.bottom()) != l.top() || l.perp(l.top()) != l.bottom() {
        return None;
    }
    let paired = l.atoms().iter().all(|&a| {
        let b = l.perp(a);
        b != a && l.perp(b) == a && l.atoms().contains(&b)
    });
    paired.then_some(atoms / 2)
}

/// Cross-check of the meet against `U ∩ W = (U^⊥ + W^⊥)^⊥`; witness `[u, w]`.
pub fn check_de_morgan_meet(l: &SubspaceLattice) -> Verdict {
    for i in 0..l.len() {
        for j in 0..l.len() {
            let direct = l
                .element(i)
                .intersect(l.element(j))
                .expect("same ambient space");
            let via_perp = l
                .element(i)
                .orthocomplement()
                .sum(&l.element(j).orthocomplement())
                .expect("same ambient space")
                .orthocomplement();
            if direct != via_perp {
                return Verdict::fails("U ^ W != (U' v W')'", vec![i, j]);
            }
        }
    }
    Verdict::Holds
}

pub const LAWS: [&str; 7] = [
    "antitone_involution",
    "atomistic",
    "chain_condition",
    "complementation",
    "modular",
    "orthomodular",
    "paraorthomodular",
];

/// Verdicts for every named law on one subspace lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub p: u32,
    pub n: u32,
    pub q: u32,
    pub m: usize,
    pub modulus: Vec<u32>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub mn: Option<usize>,
    pub mon: Option<usize>,
}

impl PropertyReport {
    pub fn for_lattice(lattice: &SubspaceLattice) -> Result<Self> {
        let t = lattice.tables()?;
        let mut verdicts = BTreeMap::new();
        verdicts.insert("modular".to_string(), check_modular(t));
        verdicts.insert("atomistic".to_string(), check_atomistic(t));
        verdicts.insert(
            "antitone_involution".to_string(),
            check_antitone_involution(t),
        );
        verdicts.insert("complementation".to_string(), check_complementation(t));
        verdicts.insert("orthomodular".to_string(), check_orthomodular(t));
        verdicts.insert("paraorthomodular".to_string(), check_paraorthomodular(t));
        verdicts.insert(
            "chain_condition".to_string(),
            chain_verdict(chain_condition_check(lattice)),
        );
        let field = lattice.field();
        Ok(PropertyReport {
            p: field.p(),
            n: field.n(),
            q: field.q(),
            m: lattice.ambient_dim(),
            modulus: field.modulus().to_vec(),
            verdicts,
            mn: recognize_mn(t),
            mon: recognize_mon(t),
        })
    }

    pub fn verdict(&self, law: &str) -> &Verdict {
        &self.verdicts[law]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::FieldSpec;
    use crate::linvec::{FVector, Subspace};

    fn lat(q: u64, m: usize) -> SubspaceLattice {
        SubspaceLattice::build(&FieldSpec::of_order(q).unwrap(), m).unwrap()
    }

    fn index_of(l: &SubspaceLattice, rows: &[&[i64]]) -> usize {
        let f = l.field();
        let vs: Vec<_> = rows.iter().map(|r| FVector::from_ints(f, r)).collect();
        l.index_of(&Subspace::span(f, l.ambient_dim(), &vs).unwrap())
            .unwrap()
    }

    #[test]
    fn laws_on_small_lattices() {
        for (q, m) in [(2, 2), (2, 3), (3, 2), (5, 1)] {
            let l = lat(q, m);
            let t = l.tables().unwrap();
            assert!(check_modular(t).holds(), "({q},{m})");
            assert!(check_atomistic(t).holds());
            assert!(check_paraorthomodular(t).holds());
            assert!(check_antitone_involution(t).holds());
            assert!(check_chain_condition(t).holds());
            assert!(check_de_morgan_meet(&l).holds());
        }
    }

    #[test]
    fn complementation_witnesses() {
        let l = lat(3, 2);
        assert!(check_complementation(l.tables().unwrap()).holds());
        assert!(check_orthomodular(l.tables().unwrap()).holds());

        let l = lat(2, 2);
        let c = index_of(&l, &[&[1, 1]]);
        let v = check_complementation(l.tables().unwrap());
        assert_eq!(v.witness().unwrap().elements, vec![c, c, c, c]);

        let l = lat(2, 3);
        let c = index_of(&l, &[&[0, 1, 1]]);
        let m = index_of(&l, &[&[0, 1, 1], &[1, 0, 0]]);
        let w = check_complementation(l.tables().unwrap());
        assert_eq!(w.witness().unwrap().elements, vec![c, m, m, c]);
        assert_eq!(check_orthomodular(l.tables().unwrap()), w);

        let l = lat(5, 2);
        assert!(!check_orthomodular(l.tables().unwrap()).holds());
        let u = index_of(&l, &[&[1, 3]]);
        assert_eq!(l.perp(u), u);
    }

    #[test]
    fn chain_lattice_is_trivially_orthomodular() {
        let l = lat(7, 1);
        let t = l.tables().unwrap();
        assert!(check_orthomodular(t).holds());
        assert!(check_paraorthomodular(t).holds());
        assert!(check_modular(t).holds());
        assert!(check_atomistic(t).holds());
        assert_eq!(recognize_mn(t), None);
    }

    #[test]
    fn recognition() {
        assert_eq!(recognize_mn(lat(3, 2).tables().unwrap()), Some(4));
        assert_eq!(recognize_mn(lat(4, 2).tables().unwrap()), Some(5));
        assert_eq!(recognize_mn(lat(2, 3).tables().unwrap()), None);
        assert_eq!(recognize_mon(lat(3, 2).tables().unwrap()), Some(2));
        assert_eq!(recognize_mon(lat(2, 2).tables().unwrap()), None);
        assert_eq!(recognize_mon(lat(7, 2).tables().unwrap()), Some(4));
        assert_eq!(recognize_mon(lat(5, 2).tables().unwrap()), None);
    }

    #[test]
    fn non_modular_pentagon_is_caught() {
        // N5: 0 < a < b < 1, 0 < c < 1
        let labels: Vec<String> = ["0", "a", "b", "c", "1"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let below = |x: usize, y: usize| x == y || x == 0 || y == 4 || (x == 1 && y == 2);
        let n5 = OrthoLattice::from_order(labels, below, vec![4, 3, 3, 1, 0]).unwrap();
        let v = check_modular(&n5);
        let w = v.witness().unwrap();
        let (x, y, z) = (w.elements[0], w.elements[1], w.elements[2]);
        assert!(n5.leq(x, z));
        assert_ne!(n5.join(x, n5.meet(y, z)), n5.meet(n5.join(x, y), z));
        assert!(!check_chain_condition(&n5).holds());
    }

    #[test]
    fn report_covers_all_laws() {
        let r = PropertyReport::for_lattice(&lat(2, 3)).unwrap();
        assert_eq!(
            r.verdicts.keys().map(String::as_str).collect::<Vec<_>>(),
            LAWS.to_vec()
        );
        assert!(r.verdict("modular").holds());
        assert!(!r.verdict("orthomodular").holds());
        assert_eq!(r.mn, None);
    }
}
