use std::fmt::Write;

use super::formation::Formation;
use super::meta::MetaFormation;

pub fn formation_to_dot(f: &Formation) -> String {
    let mut out = String::from("digraph formation {\n");
    for v in f.vertices() {
        writeln!(out, "  {v};").unwrap();
    }
    for e in f.edges() {
        writeln!(out, "  {} -> {};", e.tail, e.head).unwrap();
    }
    out.push_str("}\n");
    out
}

/// One cluster per meta-vertex; inter-edges are dashed.
pub fn meta_to_dot(m: &MetaFormation) -> String {
    let mut out = String::from("digraph meta {\n");
    for (i, mv) in m.meta_vertices().iter().enumerate() {
        writeln!(out, "  subgraph cluster_{i} {{").unwrap();
        writeln!(out, "    label=\"G{i}\";").unwrap();
        for v in mv.vertices() {
            writeln!(out, "    {v};").unwrap();
        }
        for e in mv.edges() {
            writeln!(out, "    {} -> {};", e.tail, e.head).unwrap();
        }
        out.push_str("  }\n");
    }
    for e in m.inter_edges() {
        writeln!(out, "  {} -> {} [style=dashed];", e.tail, e.head).unwrap();
    }
    out.push_str("}\n");
    out
}
