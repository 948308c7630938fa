//! Graphviz rendering of the cover (Hasse) relation.

use std::fmt::Write;

use super::SubspaceLattice;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Append each element's basis to its label.
    pub show_basis: bool,
    /// Draw each pair `U`, `U^⊥` as a dashed undirected edge (a loop when `U^⊥ = U`).
    pub show_perp: bool,
}

/// One `digraph` with nodes `u<index>`, one edge per cover pair pointing
/// upward, and a `rank=same` group per dimension.
pub fn export_dot(lattice: &SubspaceLattice, options: &DotOptions) -> String {
    let field = lattice.field();
    let mut out = String::new();
    writeln!(out, "digraph L {{").unwrap();
    writeln!(
        out,
        "  label=\"L(GF({})^{}), modulus {}\";",
        field.q(),
        lattice.ambient_dim(),
        field.modulus_string()
    )
    .unwrap();
    writeln!(out, "  rankdir=BT;").unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for (i, s) in lattice.elements().iter().enumerate() {
        let mut label = format!("u{i} (dim {})", s.dim());
        if options.show_basis {
            write!(label, "\\n{s}").unwrap();
        }
        writeln!(out, "  u{i} [label=\"{label}\"];").unwrap();
    }
    for layer in lattice.layers() {
        let ids: Vec<String> = layer.iter().map(|i| format!("u{i};")).collect();
        writeln!(out, "  {{ rank=same; {} }}", ids.join(" ")).unwrap();
    }
    for i in 0..lattice.len() {
        for &j in lattice.upper_covers(i) {
            writeln!(out, "  u{i} -> u{j};").unwrap();
        }
    }
    if options.show_perp {
        for i in 0..lattice.len() {
            let j = lattice.perp(i);
            if i <= j {
                writeln!(
                    out,
                    "  u{i} -> u{j} [style=dashed, dir=none, constraint=false];"
                )
                .unwrap();
            }
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
