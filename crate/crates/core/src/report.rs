//! Serializable documents for the command-line tool, with text renderings.
//!
//! Subspaces appear as their reduced basis matrices, entries being field
//! element indices.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::constructs::MqResult;
use crate::lattice::SubspaceLattice;
use crate::props::{PropertyReport, Verdict};

pub const VERSION: u32 = 1;

pub type Matrix = Vec<Vec<u32>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldInfo {
    pub q: u32,
    pub p: u32,
    pub n: u32,
    /// Coefficients, constant term first.
    pub modulus: Vec<u32>,
}

impl FieldInfo {
    pub fn of(lattice: &SubspaceLattice) -> Self {
        let f = lattice.field();
        FieldInfo {
            q: f.q(),
            p: f.p(),
            n: f.n(),
            modulus: f.modulus().to_vec(),
        }
    }
}

fn matrix(lattice: &SubspaceLattice, i: usize) -> Matrix {
    lattice.element(i).basis().to_vec()
}

fn show_matrix(rows: &Matrix) -> String {
    let rows: Vec<String> = rows
        .iter()
        .map(|r| {
            format!(
                "({})",
                r.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            )
        })
        .collect();
    format!("<{}>", rows.join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildDoc {
    pub version: u32,
    pub field: FieldInfo,
    pub m: usize,
    pub elements: usize,
    pub by_dimension: Vec<usize>,
    pub atoms: usize,
    pub coatoms: usize,
    pub cover_pairs: usize,
}

impl BuildDoc {
    pub fn new(lattice: &SubspaceLattice) -> Self {
        let profile = lattice.count_profile();
        BuildDoc {
            version: VERSION,
            field: FieldInfo::of(lattice),
            m: lattice.ambient_dim(),
            elements: lattice.len(),
            by_dimension: profile.by_dimension,
            atoms: lattice.atoms().len(),
            coatoms: lattice.coatoms().len(),
            cover_pairs: (0..lattice.len())
                .map(|i| lattice.upper_covers(i).len())
                .sum(),
        }
    }

    pub fn to_text(&self) -> String {
        let dims: Vec<String> = self.by_dimension.iter().map(usize::to_string).collect();
        format!(
            "L(GF({})^{}): {} elements; dims [{}]; {} atoms; {} coatoms; {} cover pairs\n",
            self.field.q,
            self.m,
            self.elements,
            dims.join(","),
            self.atoms,
            self.coatoms,
            self.cover_pairs
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawEntry {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub clause: Option<String>,
    /// Witness subspaces, in the order the checker reports them.
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub witness: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub version: u32,
    pub field: FieldInfo,
    pub m: usize,
    pub laws: BTreeMap<String, LawEntry>,
    pub mn: Option<usize>,
    pub mon: Option<usize>,
}

impl CheckDoc {
    pub fn new(lattice: &SubspaceLattice, report: &PropertyReport) -> Self {
        let laws = report
            .verdicts
            .iter()
            .map(|(name, v)| {
                let entry = match v {
                    Verdict::Holds => LawEntry {
                        holds: true,
                        clause: None,
                        witness: Vec::new(),
                    },
                    Verdict::Fails(w) => LawEntry {
                        holds: false,
                        clause: Some(w.clause.clone()),
                        witness: w.elements.iter().map(|&i| matrix(lattice, i)).collect(),
                    },
                };
                (name.clone(), entry)
            })
            .collect();
        CheckDoc {
            version: VERSION,
            field: FieldInfo::of(lattice),
            m: lattice.ambient_dim(),
            laws,
            mn: report.mn,
            mon: report.mon,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("L(GF({})^{}) laws:\n", self.field.q, self.m);
        for (name, e) in &self.laws {
            if e.holds {
                writeln!(out, "  {name}: holds").unwrap();
            } else {
                let w: Vec<String> = e.witness.iter().map(show_matrix).collect();
                writeln!(
                    out,
                    "  {name}: fails ({}); witness {}",
                    e.clause.as_deref().unwrap_or(""),
                    w.join(" ")
                )
                .unwrap();
            }
        }
        let shape =
            |x: Option<usize>, name: &str| x.map_or("no".to_string(), |k| format!("{name}_{k}"));
        writeln!(
            out,
            "  M_n: {}; MO_n: {}",
            shape(self.mn, "M"),
            shape(self.mon, "MO")
        )
        .unwrap();
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MqRow {
    pub q: u32,
    pub p: u32,
    pub modulus: Vec<u32>,
    pub m_q: usize,
    /// Field element indices.
    pub witness: Vec<u32>,
    /// Written form of the witness entries.
    pub witness_text: Vec<String>,
    /// Applicable divisibility bounds keyed by criterion.
    pub bounds: BTreeMap<String, u32>,
    pub bounds_respected: bool,
}

impl MqRow {
    pub fn new(r: &MqResult) -> Self {
        let mut bounds = BTreeMap::new();
        if let Some(c) = &r.bounds.sum_to_p_minus_1 {
            bounds.insert("sum_to_p_minus_1".to_string(), c.bound);
        }
        if let Some(c) = &r.bounds.sum_to_half {
            bounds.insert("sum_to_half".to_string(), c.bound);
        }
        if let Some(b) = r.bounds.minus_one_mod_3 {
            bounds.insert("minus_one_mod_3".to_string(), b);
        }
        MqRow {
            q: r.q,
            p: r.p,
            modulus: r.modulus.clone(),
            m_q: r.m_q,
            witness: r.witness.iter().map(|a| a.index()).collect(),
            witness_text: r.witness.iter().map(|a| a.to_string()).collect(),
            bounds,
            bounds_respected: r.bounds_respected,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MqDoc {
    pub version: u32,
    pub rows: Vec<MqRow>,
}

impl MqDoc {
    pub fn new(results: &[MqResult]) -> Self {
        MqDoc {
            version: VERSION,
            rows: results.iter().map(MqRow::new).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let bounds: Vec<String> = r.bounds.iter().map(|(k, v)| format!("{k}<={v}")).collect();
            writeln!(
                out,
                "m({})={}, witness ({}) sums to 0; bounds [{}]{}",
                r.q,
                r.m_q,
                r.witness_text.join(","),
                bounds.join(", "),
                if r.bounds_respected { "" } else { " VIOLATED" }
            )
            .unwrap();
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructs::compute_mq;
    use crate::gfield::FieldSpec;

    fn lat(q: u64, m: usize) -> SubspaceLattice {
        SubspaceLattice::build(&FieldSpec::of_order(q).unwrap(), m).unwrap()
    }

    fn round_trip<T: Serialize + for<'de> Deserialize<'de>>(doc: &T) {
        let a = to_json(doc);
        let back: T = serde_json::from_str(&a).unwrap();
        assert_eq!(a, to_json(&back));
    }

    #[test]
    fn build_text() {
        assert!(BuildDoc::new(&lat(3, 2))
            .to_text()
            .contains("6 elements; dims [1,4,1]"));
        assert!(BuildDoc::new(&lat(2, 1)).to_text().contains("2 elements"));
        round_trip(&BuildDoc::new(&lat(2, 3)));
    }

    #[test]
    fn check_documents() {
        let l = lat(5, 2);
        let doc = CheckDoc::new(&l, &PropertyReport::for_lattice(&l).unwrap());
        let om = &doc.laws["orthomodular"];
        assert!(!om.holds);
        assert!(doc.laws["modular"].holds);
        round_trip(&doc);
        assert!(doc.to_text().contains("orthomodular: fails"));
    }

    #[test]
    fn mq_documents() {
        let rs: Vec<_> = [2u64, 7, 9]
            .iter()
            .map(|&q| compute_mq(&FieldSpec::of_order(q).unwrap()))
            .collect();
        let doc = MqDoc::new(&rs);
        let text = doc.to_text();
        assert!(text.contains("m(7)=3, witness (1,2,3) sums to 0"));
        assert!(text.contains("m(9)=2, witness (1,x) sums to 0"));
        round_trip(&doc);
    }
}
