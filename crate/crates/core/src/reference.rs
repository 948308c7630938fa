//! Golden reproduction of the reference tables and figures.
//!
//! Every item recomputes a quantity and compares it with the tabulated
//! value. Tabulated witnesses are validated on their own; whether our
//! witness spells the same way is informational only.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::constructs::{
    boolean_subalgebra, compute_mq, divisibility_bounds, horizontal_sum_subposet,
    is_orthogonal_basis, m2_theorem_check, standard_basis,
};
use crate::error::Result;
use crate::gfield::FieldSpec;
use crate::lattice::{counting, SubspaceLattice};
use crate::linvec::{FVector, Subspace};
use crate::props::{check_orthomodular, recognize_mn, PropertyReport};
use crate::report::VERSION;

pub const GROUPS: [&str; 11] = [
    "plane_gf3",
    "plane_gf2",
    "space_gf2",
    "hsum_gf2",
    "plane_gf5",
    "hsum_gf3",
    "counting",
    "mq",
    "m2",
    "bases",
    "bounds",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Info,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Item {
    pub group: String,
    pub name: String,
    pub status: Status,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Suite {
    pub version: u32,
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Run a single group.
    pub only: Option<String>,
    /// Replacement modulus (constant term first), used for every field
    /// whose characteristic and degree it fits.
    pub modulus: Option<Vec<u32>>,
}

impl Suite {
    pub fn failures(&self) -> usize {
        self.count(Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.items.iter().filter(|i| i.status == status).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for i in &self.items {
            let tag = match i.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            writeln!(out, "{tag} [{}] {}: {}", i.group, i.name, i.detail).unwrap();
        }
        writeln!(
            out,
            "{} passed, {} failed, {} informational",
            self.count(Status::Pass),
            self.failures(),
            self.count(Status::Info)
        )
        .unwrap();
        out
    }
}

struct Run {
    options: SuiteOptions,
    group: &'static str,
    items: Vec<Item>,
}

impl Run {
    fn push(&mut self, name: impl Into<String>, status: Status, detail: impl Into<String>) {
        self.items.push(Item {
            group: self.group.to_string(),
            name: name.into(),
            status,
            detail: detail.into(),
        });
    }

    /// Compares a computed value with the tabulated one.
    fn expect<T: PartialEq + std::fmt::Debug>(
        &mut self,
        name: impl Into<String>,
        expected: T,
        got: T,
    ) {
        if expected == got {
            self.push(name, Status::Pass, format!("{got:?}"));
        } else {
            self.push(
                name,
                Status::Fail,
                format!("expected {expected:?}, got {got:?}"),
            );
        }
    }

    fn info(&mut self, name: impl Into<String>, detail: impl Into<String>) {
        self.push(name, Status::Info, detail);
    }

    /// The field of order `q`, built from the override when it fits.
    fn field(&self, q: u64) -> Result<(FieldSpec, bool)> {
        let default = FieldSpec::of_order(q)?;
        if let Some(m) = &self.options.modulus {
            if m.len() == default.n() as usize + 1 {
                if let Ok(f) = FieldSpec::new(default.p(), default.n(), Some(m.clone())) {
                    let changed = f.modulus() != default.modulus();
                    return Ok((f, changed));
                }
            }
        }
        Ok((default, false))
    }

    fn lattice(&self, q: u64, m: usize) -> Result<SubspaceLattice> {
        SubspaceLattice::build(&self.field(q)?.0, m)
    }
}

/// The subspace whose member list is `members`, if the list is exactly a
/// subspace.
fn from_members(lattice: &SubspaceLattice, members: &[&[i64]]) -> Option<usize> {
    let f = lattice.field();
    let m = lattice.ambient_dim();
    let vs: Vec<FVector> = members.iter().map(|v| FVector::from_ints(f, v)).collect();
    let s = Subspace::span(f, m, &vs).ok()?;
    let size = (f.q() as usize).pow(s.dim() as u32);
    let mut keys: Vec<&[u32]> = vs.iter().map(FVector::indices).collect();
    keys.sort_unstable();
    keys.dedup();
    (keys.len() == size && vs.iter().all(|v| s.contains(v)))
        .then(|| lattice.index_of(&s))
        .flatten()
}

/// Resolves tabulated member lists to lattice indices; a list that is not
/// a subspace is reported as a failure.
fn resolve(
    run: &mut Run,
    lattice: &SubspaceLattice,
    named: &[(&str, &[&[i64]])],
) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for (name, members) in named {
        match from_members(lattice, members) {
            Some(i) => out.push(i),
            None => {
                run.push(
                    format!("{name} is a subspace"),
                    Status::Fail,
                    "member list is not a subspace",
                );
                return None;
            }
        }
    }
    run.push(
        "labelled member lists are subspaces",
        Status::Pass,
        format!("{} subspaces", named.len()),
    );
    Some(out)
}

fn isotropic(field: &FieldSpec, entries: &[u32]) -> bool {
    entries.iter().all(|&e| e < field.q()) && FVector::from_indices(field, entries).is_isotropic()
}

fn show(entries: &[u32], field: &FieldSpec) -> String {
    let parts: Vec<String> = entries
        .iter()
        .map(|&e| field.element(e).to_string())
        .collect();
    format!("({})", parts.join(","))
}

/// Tabulated rows: q, m(q), witness as element indices (`x` is index p).
const MQ_TABLE: [(u64, usize, &[u32]); 11] = [
    (2, 2, &[1, 1]),
    (3, 3, &[1, 1, 1]),
    (4, 2, &[1, 1]),
    (5, 2, &[1, 2]),
    (7, 3, &[1, 2, 3]),
    (8, 2, &[1, 1]),
    (9, 2, &[1, 3]),
    (11, 3, &[1, 1, 3]),
    (13, 2, &[2, 3]),
    (16, 2, &[1, 1]),
    (17, 2, &[1, 4]),
];

/// Tabulated closing table for m = 2: q, MO_n if orthomodular, isotropic vector otherwise.
const M2_TABLE: [(u64, Option<usize>, &[u32]); 11] = [
    (2, None, &[1, 1]),
    (3, Some(2), &[]),
    (4, None, &[1, 1]),
    (5, None, &[1, 2]),
    (7, Some(4), &[]),
    (8, None, &[1, 1]),
    (9, None, &[1, 3]),
    (11, Some(6), &[]),
    (13, None, &[2, 3]),
    (16, None, &[1, 1]),
    (17, None, &[1, 4]),
];

const PLANE_GF3: [(&str, &[&[i64]]); 4] = [
    ("A", &[&[0, 0], &[0, 1], &[0, 2]]),
    ("B", &[&[0, 0], &[1, 0], &[2, 0]]),
    ("C", &[&[0, 0], &[1, 1], &[2, 2]]),
    ("D", &[&[0, 0], &[1, 2], &[2, 1]]),
];

const PLANE_GF2: [(&str, &[&[i64]]); 3] = [
    ("A", &[&[0, 0], &[0, 1]]),
    ("B", &[&[0, 0], &[1, 0]]),
    ("C", &[&[0, 0], &[1, 1]]),
];

const SPACE_GF2: [(&str, &[&[i64]]); 14] = [
    ("A", &[&[0, 0, 0], &[0, 0, 1]]),
    ("B", &[&[0, 0, 0], &[0, 1, 0]]),
    ("C", &[&[0, 0, 0], &[0, 1, 1]]),
    ("D", &[&[0, 0, 0], &[1, 0, 0]]),
    ("E", &[&[0, 0, 0], &[1, 0, 1]]),
    ("F", &[&[0, 0, 0], &[1, 1, 0]]),
    ("G", &[&[0, 0, 0], &[1, 1, 1]]),
    ("H", &[&[0, 0, 0], &[0, 0, 1], &[0, 1, 0], &[0, 1, 1]]),
    ("I", &[&[0, 0, 0], &[0, 0, 1], &[1, 0, 0], &[1, 0, 1]]),
    ("J", &[&[0, 0, 0], &[0, 0, 1], &[1, 1, 0], &[1, 1, 1]]),
    ("K", &[&[0, 0, 0], &[0, 1, 0], &[1, 0, 0], &[1, 1, 0]]),
    ("L", &[&[0, 0, 0], &[0, 1, 0], &[1, 0, 1], &[1, 1, 1]]),
    ("M", &[&[0, 0, 0], &[0, 1, 1], &[1, 0, 0], &[1, 1, 1]]),
    ("N", &[&[0, 0, 0], &[0, 1, 1], &[1, 0, 1], &[1, 1, 0]]),
];

/// Index of `letter` in a label table.
fn at(named: &[(&str, &[&[i64]])], ids: &[usize], letter: &str) -> usize {
    ids[named
        .iter()
        .position(|(n, _)| *n == letter)
        .expect("known label")]
}

/// Tabulated complement table as pairs of labels.
fn perp_table(
    run: &mut Run,
    l: &SubspaceLattice,
    named: &[(&str, &[&[i64]])],
    ids: &[usize],
    table: &[(&str, &str)],
) {
    let name_of = |i: usize| {
        if i == l.bottom() {
            "0".to_string()
        } else if i == l.top() {
            "V".to_string()
        } else {
            ids.iter()
                .position(|&x| x == i)
                .map_or(l.element(i).to_string(), |k| named[k].0.to_string())
        }
    };
    let expected: Vec<String> = table.iter().map(|(u, v)| format!("{u}'={v}")).collect();
    let got: Vec<String> = table
        .iter()
        .map(|(u, _)| format!("{u}'={}", name_of(l.perp(at(named, ids, u)))))
        .collect();
    run.expect("complement table", expected, got);
}

fn plane_gf3(run: &mut Run) -> Result<()> {
    let l = run.lattice(3, 2)?;
    run.expect("element count", 6, l.len());
    run.expect(
        "dimension profile",
        vec![1, 4, 1],
        l.count_profile().by_dimension,
    );
    let Some(ids) = resolve(run, &l, &PLANE_GF3) else {
        return Ok(());
    };
    let mut atoms = l.atoms();
    atoms.sort_unstable();
    let mut labelled = ids.clone();
    labelled.sort_unstable();
    run.expect("atoms are A, B, C, D", labelled, atoms);
    let t = l.tables()?;
    run.expect("(L, +, ∩) is M_n with n", Some(4), recognize_mn(t));
    perp_table(
        run,
        &l,
        &PLANE_GF3,
        &ids,
        &[("A", "B"), ("B", "A"), ("C", "D"), ("D", "C")],
    );
    run.expect("orthomodular", true, check_orthomodular(t).holds());
    run.expect(
        "no isotropic vector",
        true,
        crate::linvec::find_isotropic(l.field(), 2)?.is_none(),
    );
    Ok(())
}

fn plane_gf2(run: &mut Run) -> Result<()> {
    let l = run.lattice(2, 2)?;
    run.expect("element count", 5, l.len());
    let Some(ids) = resolve(run, &l, &PLANE_GF2) else {
        return Ok(());
    };
    let t = l.tables()?;
    run.expect("(L, +, ∩) is M_n with n", Some(3), recognize_mn(t));
    perp_table(
        run,
        &l,
        &PLANE_GF2,
        &ids,
        &[("A", "B"), ("B", "A"), ("C", "C")],
    );
    let c = at(&PLANE_GF2, &ids, "C");
    run.expect(
        "C + C' = C, so not orthomodular",
        (c, false),
        (l.join(c, l.perp(c)), check_orthomodular(t).holds()),
    );
    Ok(())
}

fn space_gf2(run: &mut Run) -> Result<()> {
    let l = run.lattice(2, 3)?;
    run.expect("element count", 16, l.len());
    run.expect(
        "dimension profile",
        vec![1, 7, 7, 1],
        l.count_profile().by_dimension,
    );
    let Some(ids) = resolve(run, &l, &SPACE_GF2) else {
        return Ok(());
    };
    let covers: usize = (0..l.len()).map(|i| l.upper_covers(i).len()).sum();
    run.expect("Hasse edges", 35, covers);
    perp_table(
        run,
        &l,
        &SPACE_GF2,
        &ids,
        &[
            ("A", "K"),
            ("B", "I"),
            ("C", "M"),
            ("D", "H"),
            ("E", "L"),
            ("F", "J"),
            ("G", "N"),
        ],
    );
    let (c, m) = (at(&SPACE_GF2, &ids, "C"), at(&SPACE_GF2, &ids, "M"));
    run.expect("C + C' = M, not V", m, l.join(c, l.perp(c)));
    let report = PropertyReport::for_lattice(&l)?;
    run.expect("modular", true, report.verdict("modular").holds());
    run.expect(
        "orthomodular",
        false,
        report.verdict("orthomodular").holds(),
    );
    run.expect(
        "(1,1,0) is isotropic",
        true,
        isotropic(l.field(), &[1, 1, 0]),
    );
    Ok(())
}

fn hsum_gf2(run: &mut Run) -> Result<()> {
    let l = run.lattice(2, 3)?;
    let Some(ids) = resolve(run, &l, &SPACE_GF2) else {
        return Ok(());
    };
    let letter = |x: &str| at(&SPACE_GF2, &ids, x);
    let h = horizontal_sum_subposet(&l)?;
    let mut expected: Vec<usize> = ["A", "B", "D", "G", "H", "I", "K", "N"]
        .iter()
        .map(|x| letter(x))
        .collect();
    expected.extend([l.bottom(), l.top()]);
    expected.sort_unstable();
    run.expect(
        "S = {0, A, B, D, G, H, I, K, N, V}",
        expected,
        h.sub.elements.clone(),
    );
    run.expect("orthomodular as a poset", true, h.sub.orthomodular.holds());
    run.expect(
        "parent lattice orthomodular",
        false,
        check_orthomodular(l.tables()?).holds(),
    );
    let (d, g, m) = (letter("D"), letter("G"), letter("M"));
    run.expect(
        "D + G = M, not in S",
        (m, false),
        (l.join(d, g), h.sub.contains(l.join(d, g))),
    );
    run.expect("S is a subuniverse", false, h.sub.subuniverse.holds());
    if let Some(w) = h.sub.subuniverse.witness() {
        let names: Vec<String> = w
            .elements
            .iter()
            .map(|&i| l.element(i).to_string())
            .collect();
        run.info(
            "first non-closure found",
            format!("{}: {}", w.clause, names.join(", ")),
        );
    }
    run.expect("isomorphic to 2^3 + 2^2", true, h.isomorphism.is_some());
    // Hasse edges inside S, by label
    let s = &h.sub;
    let name = |local: usize| {
        let i = s.elements[local];
        if i == l.bottom() {
            "0".to_string()
        } else if i == l.top() {
            "V".to_string()
        } else {
            SPACE_GF2[ids.iter().position(|&x| x == i).unwrap()]
                .0
                .to_string()
        }
    };
    let mut got: Vec<String> = (0..s.len())
        .flat_map(|a| s.structure.upper_covers(a).iter().map(move |&b| (a, b)))
        .map(|(a, b)| format!("{}-{}", name(a), name(b)))
        .collect();
    got.sort();
    let mut edges: Vec<String> = [
        "0-A", "0-B", "0-D", "0-G", "0-N", "A-H", "A-I", "B-H", "B-K", "D-I", "D-K", "H-V", "I-V",
        "K-V", "G-V", "N-V",
    ]
    .iter()
    .map(|e| e.to_string())
    .collect();
    edges.sort();
    run.expect("Hasse edges", edges, got);
    Ok(())
}

fn plane_gf5(run: &mut Run) -> Result<()> {
    let l = run.lattice(5, 2)?;
    let u: &[&[i64]] = &[&[0, 0], &[1, 3], &[2, 1], &[3, 4], &[4, 2]];
    let Some(u) = from_members(&l, u) else {
        run.push(
            "U is a subspace",
            Status::Fail,
            "member list is not a subspace",
        );
        return Ok(());
    };
    run.expect("U' = U", u, l.perp(u));
    let t = l.tables()?;
    let verdict = check_orthomodular(t);
    run.expect("orthomodular", false, verdict.holds());
    if let Some(w) = verdict.witness() {
        let names: Vec<String> = w
            .elements
            .iter()
            .map(|&i| l.element(i).to_string())
            .collect();
        run.info(
            "first failure found",
            format!("{}: {}", w.clause, names.join(", ")),
        );
    }
    Ok(())
}

fn hsum_gf3(run: &mut Run) -> Result<()> {
    let l = run.lattice(3, 2)?;
    let h = horizontal_sum_subposet(&l)?;
    run.expect(
        "S = L(V)",
        (0..l.len()).collect::<Vec<_>>(),
        h.sub.elements.clone(),
    );
    run.expect("S is a subuniverse", true, h.sub.subuniverse.holds());
    Ok(())
}

fn counting_group(run: &mut Run) -> Result<()> {
    for (q, m) in [(3u64, 2usize), (2, 2), (2, 3)] {
        let l = run.lattice(q, m)?;
        let profile = l.count_profile();
        let formula = (0..=m as u32)
            .map(|d| counting::gaussian_count(q, m as u32, d).map(|c| c as usize))
            .collect::<Result<Vec<_>>>()?;
        run.expect(
            format!("({q},{m}) subspaces per dimension"),
            formula,
            profile.by_dimension.clone(),
        );
        let up = (0..m as u32)
            .map(|d| counting::upper_covers_count(q, m as u32, d).map(|c| Some(c as usize)))
            .collect::<Result<Vec<_>>>()?;
        run.expect(
            format!("({q},{m}) upper covers per dimension"),
            up,
            profile.upper_cover_counts.clone(),
        );
        let down = (1..=m as u32)
            .map(|d| counting::lower_covers_count(q, m as u32, d).map(|c| Some(c as usize)))
            .collect::<Result<Vec<_>>>()?;
        run.expect(
            format!("({q},{m}) lower covers per dimension"),
            down,
            profile.lower_cover_counts[1..].to_vec(),
        );
        run.expect(
            format!("({q},{m}) atoms"),
            counting::atom_count(q, m as u32)? as usize,
            profile.atom_count,
        );
    }
    Ok(())
}

fn mq_group(run: &mut Run) -> Result<()> {
    for (q, m_q, listed) in MQ_TABLE {
        let (field, overridden) = run.field(q)?;
        let r = compute_mq(&field);
        run.expect(format!("m({q})"), m_q, r.m_q);
        let valid = listed.len() == m_q && isotropic(&field, listed);
        let name = format!("tabulated witness {} for q={q}", show(listed, &field));
        if overridden {
            run.info(
                name,
                format!(
                    "isotropic under modulus {}: {valid}",
                    field.modulus_string()
                ),
            );
        } else {
            run.expect(name, true, valid);
        }
        let ours: Vec<u32> = r.witness.iter().map(|a| a.index()).collect();
        let spelled = if ours == listed {
            "same as tabulated"
        } else {
            "differs from tabulated"
        };
        run.info(
            format!("witness for q={q}"),
            format!("{} ({spelled})", show(&ours, &field)),
        );
    }
    Ok(())
}

fn m2_group(run: &mut Run) -> Result<()> {
    for (q, mo, listed) in M2_TABLE {
        let (field, overridden) = run.field(q)?;
        let r = m2_theorem_check(&field)?;
        run.expect(format!("q={q}: M_n with n"), Some(q as usize + 1), r.mn);
        run.expect(
            format!("q={q}: orthomodular, MO_n with n"),
            (mo.is_some(), mo),
            (r.orthomodular, r.mon),
        );
        if mo.is_none() {
            let name = format!("q={q}: tabulated isotropic vector {}", show(listed, &field));
            let valid = isotropic(&field, listed);
            if overridden {
                run.info(
                    name,
                    format!(
                        "isotropic under modulus {}: {valid}",
                        field.modulus_string()
                    ),
                );
            } else {
                run.expect(name, true, valid);
            }
        }
        let parts_hold = r.divisible_pair_consistent
            && r.criterion_exact != Some(false)
            && r.mo_shape_matches != Some(false);
        run.expect(
            format!("q={q}: divisibility criterion agrees"),
            true,
            parts_hold,
        );
    }
    Ok(())
}

fn bases_group(run: &mut Run) -> Result<()> {
    for (q, m) in [(2u64, 3usize), (3, 2), (5, 3)] {
        let l = run.lattice(q, m)?;
        run.expect(
            format!("standard basis of GF({q})^{m} is orthogonal"),
            true,
            is_orthogonal_basis(&standard_basis(&l), m)?,
        );
        let b = boolean_subalgebra(&l, &standard_basis(&l))?;
        run.expect(
            format!("GF({q})^{m}: 2^m coordinate subspaces, closed, complements swap index sets"),
            (1usize << m, true, true, true),
            (
                b.sub.len(),
                b.sub.subuniverse.holds(),
                b.complement_identity,
                b.power_set_isomorphism,
            ),
        );
    }
    // all-ones minus e_i is orthogonal over GF(2) exactly when 2 | m - 2
    let f = FieldSpec::prime(2)?;
    for m in 2..=6usize {
        let family: Vec<FVector> = (0..m)
            .map(|i| FVector::from_ints(&f, &(0..m).map(|j| i64::from(i != j)).collect::<Vec<_>>()))
            .collect();
        run.expect(
            format!("GF(2)^{m}: all-ones minus e_i orthogonal"),
            (m - 2) % 2 == 0,
            is_orthogonal_basis(&family, m)?,
        );
    }
    Ok(())
}

fn bounds_group(run: &mut Run) -> Result<()> {
    for p in [2u32, 3, 5, 7, 11, 13, 17] {
        let b = divisibility_bounds(p)?;
        let m_q = compute_mq(&FieldSpec::prime(p)?).m_q;
        let shown: Vec<String> = b.bounds().iter().map(u32::to_string).collect();
        run.expect(
            format!(
                "p={p}: bounds [{}] are at least m(p)={m_q}",
                shown.join(",")
            ),
            true,
            b.respected_by(m_q),
        );
        for claim in b.sum_to_p_minus_1.iter().chain(&b.sum_to_half) {
            run.expect(
                format!("p={p}: (1..{}) is isotropic", claim.bound),
                true,
                claim.witness_isotropic,
            );
        }
    }
    Ok(())
}

type GroupFn = fn(&mut Run) -> Result<()>;

pub fn run_suite(options: &SuiteOptions) -> Result<Suite> {
    let groups: [(&'static str, GroupFn); 11] = [
        ("plane_gf3", plane_gf3),
        ("plane_gf2", plane_gf2),
        ("space_gf2", space_gf2),
        ("hsum_gf2", hsum_gf2),
        ("plane_gf5", plane_gf5),
        ("hsum_gf3", hsum_gf3),
        ("counting", counting_group),
        ("mq", mq_group),
        ("m2", m2_group),
        ("bases", bases_group),
        ("bounds", bounds_group),
    ];
    if let Some(only) = &options.only {
        if !GROUPS.contains(&only.as_str()) {
            return Err(crate::Error::DomainError(format!(
                "unknown group {only}; expected one of {}",
                GROUPS.join(", ")
            )));
        }
    }
    let mut run = Run {
        options: options.clone(),
        group: "",
        items: Vec::new(),
    };
    for (name, f) in groups {
        if options.only.as_deref().is_some_and(|o| o != name) {
            continue;
        }
        run.group = name;
        f(&mut run)?;
    }
    Ok(Suite {
        version: VERSION,
        items: run.items,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_suite_passes() {
        let s = run_suite(&SuiteOptions::default()).unwrap();
        let failures: Vec<_> = s
            .items
            .iter()
            .filter(|i| i.status == Status::Fail)
            .collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(s.count(Status::Pass) > 80);
        for g in GROUPS {
            assert!(s.items.iter().any(|i| i.group == g), "{g}");
        }
    }

    #[test]
    fn single_group_and_override() {
        let s = run_suite(&SuiteOptions {
            only: Some("m2".into()),
            modulus: None,
        })
        .unwrap();
        assert!(s.items.iter().all(|i| i.group == "m2"));
        assert_eq!(s.failures(), 0);

        // x^2 + x + 2 over Z_3
        let s = run_suite(&SuiteOptions {
            only: Some("mq".into()),
            modulus: Some(vec![2, 1, 1]),
        })
        .unwrap();
        assert_eq!(s.failures(), 0);
        let nine = s.items.iter().find(|i| i.name == "m(9)").unwrap();
        assert_eq!(nine.status, Status::Pass);
        assert!(s
            .items
            .iter()
            .any(|i| i.name.contains("q=9") && i.status == Status::Info));

        assert!(run_suite(&SuiteOptions {
            only: Some("nope".into()),
            modulus: None,
        })
        .is_err());
    }
}
