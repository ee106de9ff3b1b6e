//! Rotation text format.
//!
//! ```text
//! n <vertex_count>
//! outer <v1> <v2> ... <vk>        # optional: outer face by its vertex cycle
//! <vertex_id>: <nbr> <nbr> <nbr>  # one line per vertex, neighbours counterclockwise
//! ```
//!
//! `#` starts a comment. Vertex ids are 0-based and every vertex has exactly
//! one line.

use std::fmt::Write as _;

use crate::embedding::{PlanarEmbedding, Vertex};
use crate::error::EmbeddingError;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push(Token { text: &line[s..i], column: s + 1 });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], column: s + 1 });
    }
    out
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> EmbeddingError {
    EmbeddingError::Syntax { line, column, message: message.into() }
}

fn integer(tok: &Token<'_>, line: usize) -> Result<usize, EmbeddingError> {
    tok.text
        .parse()
        .map_err(|_| syntax(line, tok.column, format!("expected a non-negative integer, found {:?}", tok.text)))
}

pub fn parse_embedding(text: &str) -> Result<PlanarEmbedding, EmbeddingError> {
    let mut n: Option<usize> = None;
    let mut outer: Option<Vec<Vertex>> = None;
    let mut rotations: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(first) = toks.first() else { continue };

        match first.text {
            "n" => {
                if n.is_some() {
                    return Err(syntax(line_no, first.column, "duplicate `n` header"));
                }
                let [_, count] = toks.as_slice() else {
                    return Err(syntax(line_no, first.column, "expected `n <vertex_count>`"));
                };
                let count = integer(count, line_no)?;
                n = Some(count);
                rotations = vec![None; count];
            }
            "outer" => {
                let Some(count) = n else {
                    return Err(syntax(line_no, first.column, "`outer` before `n` header"));
                };
                if outer.is_some() {
                    return Err(syntax(line_no, first.column, "duplicate `outer` directive"));
                }
                let mut cycle = Vec::with_capacity(toks.len() - 1);
                for t in &toks[1..] {
                    let v = integer(t, line_no)?;
                    if v >= count {
                        return Err(EmbeddingError::VertexOutOfRange { index: v, n: count });
                    }
                    cycle.push(v);
                }
                if cycle.len() < 3 {
                    return Err(syntax(line_no, first.column, "outer cycle needs at least 3 vertices"));
                }
                outer = Some(cycle);
            }
            head => {
                let Some(count) = n else {
                    return Err(syntax(line_no, first.column, "vertex line before `n` header"));
                };
                let Some(id_text) = head.strip_suffix(':') else {
                    return Err(syntax(
                        line_no,
                        first.column,
                        format!("expected `<vertex_id>:`, found {head:?}"),
                    ));
                };
                let id = integer(&Token { text: id_text, column: first.column }, line_no)?;
                if id >= count {
                    return Err(EmbeddingError::VertexOutOfRange { index: id, n: count });
                }
                if rotations[id].is_some() {
                    return Err(syntax(line_no, first.column, format!("second line for vertex {id}")));
                }
                let mut rot = Vec::with_capacity(toks.len() - 1);
                for t in &toks[1..] {
                    let u = integer(t, line_no)?;
                    if u >= count {
                        return Err(EmbeddingError::VertexOutOfRange { index: u, n: count });
                    }
                    if rot.contains(&u) {
                        return Err(EmbeddingError::DuplicateNeighbor { vertex: id, neighbor: u });
                    }
                    rot.push(u);
                }
                rotations[id] = Some(rot);
            }
        }
    }

    if n.is_none() {
        return Err(syntax(last_line.max(1), 1, "missing `n <vertex_count>` header"));
    }
    let rotations = rotations
        .into_iter()
        .enumerate()
        .map(|(v, r)| r.ok_or_else(|| syntax(last_line + 1, 1, format!("no line for vertex {v}"))))
        .collect::<Result<Vec<_>, _>>()?;
    PlanarEmbedding::from_rotations(rotations, outer)
}

/// Ascending vertex order, single spaces, LF endings. The `outer` line is
/// written only when the embedding carries an explicit directive.
pub fn to_rotation_format(emb: &PlanarEmbedding) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", emb.vertex_count()).unwrap();
    if let Some(cycle) = emb.outer_directive() {
        out.push_str("outer");
        for v in cycle {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
    }
    for (v, rot) in emb.rotations().iter().enumerate() {
        write!(out, "{v}:").unwrap();
        for u in rot {
            write!(out, " {u}").unwrap();
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    pub(crate) const CUBE: &str = "\
# cube Q3, outer square 0 1 2 3
n 8
0: 1 4 3
1: 2 5 0
2: 3 6 1
3: 0 7 2
4: 0 5 7
5: 1 6 4
6: 2 7 5
7: 3 4 6
";

    #[test]
    fn parses_cube() {
        let emb = parse_embedding(CUBE).unwrap();
        assert_eq!(emb.vertex_count(), 8);
        assert_eq!(emb.edge_count(), 12);
        assert_eq!(emb.rotation(5), &[1, 6, 4]);
    }

    #[test]
    fn asymmetric_adjacency_is_reported() {
        let doc = "n 4\n0: 1 2 3\n1: 2 3\n2: 0 1 3\n3: 0 1 2\n";
        assert_eq!(
            parse_embedding(doc),
            Err(EmbeddingError::AsymmetricAdjacency { vertex: 0, neighbor: 1 })
        );
    }

    #[test]
    fn duplicate_neighbor_is_reported() {
        let doc = "n 4\n0: 1 1 2\n1: 0 2\n2: 0 1 3\n3: 2\n";
        assert_eq!(
            parse_embedding(doc),
            Err(EmbeddingError::DuplicateNeighbor { vertex: 0, neighbor: 1 })
        );
    }

    #[test]
    fn out_of_range_is_reported() {
        let doc = "n 4\n0: 1 9 3\n";
        assert_eq!(parse_embedding(doc), Err(EmbeddingError::VertexOutOfRange { index: 9, n: 4 }));
    }

    #[test]
    fn syntax_errors_carry_position() {
        let doc = "n 4\n0: 1 x 3\n";
        match parse_embedding(doc) {
            Err(EmbeddingError::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 6)),
            other => panic!("unexpected {other:?}"),
        }
        match parse_embedding("0: 1 2 3\n") {
            Err(EmbeddingError::Syntax { line: 1, column: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_embedding("n 4\n0: 1 2 3\n1 0 2 3\n") {
            Err(EmbeddingError::Syntax { line: 3, column: 1, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
        match parse_embedding("n 4\n0: 1 2 3\n") {
            Err(EmbeddingError::Syntax { message, .. }) => assert!(message.contains("vertex 1")),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn outer_directive_is_honoured_and_serialized() {
        let doc = CUBE.replace("n 8\n", "n 8\nouter 4 5 6 7\n");
        let emb = parse_embedding(&doc).unwrap();
        assert_eq!(emb.outer_face().sorted_vertices(), vec![4, 5, 6, 7]);
        let text = to_rotation_format(&emb);
        assert!(text.starts_with("n 8\nouter 4 5 6 7\n0: 1 4 3\n"));
        assert!(text.lines().all(|l| !l.ends_with(' ')));
    }

    proptest! {
        #[test]
        fn serializer_round_trips_prisms(k in 2usize..40, outer_inner in any::<bool>()) {
            let mut emb = crate::corpus::generate_prism(k).unwrap().embedding;
            if outer_inner {
                emb = emb.with_outer((2 * k..4 * k).collect()).unwrap();
            }
            let text = to_rotation_format(&emb);
            let back = parse_embedding(&text).unwrap();
            prop_assert_eq!(&back, &emb);
            prop_assert_eq!(to_rotation_format(&back), text);
        }
    }
}
