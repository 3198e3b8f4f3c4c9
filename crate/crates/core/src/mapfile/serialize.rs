use std::fmt::Write;

use super::{MapDocument, MapKind};

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Canonical text form. `parse(&serialize(&d)) == Ok(d)` for every valid
/// document.
pub fn serialize(doc: &MapDocument) -> String {
    let mut out = String::new();
    writeln!(out, "kind {}", doc.kind).unwrap();
    writeln!(out, "policy k={} mode={}", doc.policy.k(), doc.policy.mode()).unwrap();
    for s in &doc.scenarios {
        match s.side {
            Some(side) => writeln!(out, "scenario {} {side}", quote(&s.name)).unwrap(),
            None => writeln!(out, "scenario {}", quote(&s.name)).unwrap(),
        }
    }
    for (c, comp) in doc.components.iter().enumerate() {
        writeln!(out, "\n[component {}]", quote(&comp.name)).unwrap();
        if doc.kind == MapKind::Relational || !comp.domain.is_empty() || !comp.range.is_empty() {
            writeln!(out, "domain {}", comp.domain.join(" ")).unwrap();
            writeln!(out, "range {}", comp.range.join(" ")).unwrap();
        }
        if !comp.nodes.is_empty() || doc.kind != MapKind::Relational {
            writeln!(out, "nodes {}", comp.nodes.join(" ")).unwrap();
        }
        if let Some(order) = &comp.order {
            writeln!(out, "order {}", order.join(" ")).unwrap();
        }
        for e in &comp.edges {
            write!(out, "{} {} {}", e.from, e.op.symbol(), e.to).unwrap();
            if let Some(w) = e.weight {
                write!(out, " : {w}").unwrap();
            }
            out.push('\n');
        }
        for s in &doc.scenarios {
            if let Some(on) = s.on.get(c).filter(|on| !on.is_empty()) {
                writeln!(out, "on {} {}", quote(&s.name), on.join(" ")).unwrap();
            }
        }
    }
    if let Some(m) = &doc.matrix {
        out.push_str("\n[matrix]\n");
        out.push_str(&m.to_string());
    }
    out
}
