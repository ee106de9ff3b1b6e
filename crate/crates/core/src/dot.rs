//! Graphviz export. Cycle edges are drawn heavy, doors dashed and labeled
//! with the step that created them, entrances double-struck.

use std::fmt::Write as _;

use crate::carve::{CarveResult, EdgeRole};
use crate::embedding::PlanarEmbedding;

pub fn to_dot(emb: &PlanarEmbedding, carve: Option<&CarveResult>) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle, fontsize=10];\n");
    if let Some(r) = carve {
        writeln!(out, "  // status {}", r.status).unwrap();
        for o in &r.trace {
            writeln!(out, "  // step {} face {} via {}", o.step, o.face, o.door).unwrap();
        }
    }
    let mut created = vec![None; emb.edge_count()];
    if let Some(r) = carve {
        for o in &r.trace {
            for (e, _) in &o.assigned {
                if let Some(i) = emb.edge_index(*e) {
                    created[i].get_or_insert(o.step);
                }
            }
        }
    }
    for (i, e) in emb.edges().iter().enumerate() {
        let role = carve.map_or(EdgeRole::Unassigned, |r| r.roles[i]);
        let attrs = match role {
            EdgeRole::OuterHamiltonian | EdgeRole::InnerHamiltonian => "style=bold, penwidth=3".to_string(),
            EdgeRole::EntranceDoor => "color=\"black:invis:black\"".to_string(),
            EdgeRole::InnerDoor | EdgeRole::OuterDoor => match created[i] {
                Some(step) => format!("style=dashed, label=\"{step}\""),
                None => "style=dashed".to_string(),
            },
            EdgeRole::Unassigned => String::new(),
        };
        if attrs.is_empty() {
            writeln!(out, "  {} -- {};", e.lo(), e.hi()).unwrap();
        } else {
            writeln!(out, "  {} -- {} [{attrs}];", e.lo(), e.hi()).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
