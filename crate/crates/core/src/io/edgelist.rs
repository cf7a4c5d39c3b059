//! Plain edge lists: one `<u> <v>` pair per line, 0-based.

use super::ParseError;
use crate::graph::Graph;

/// Lines starting with `#` or `c` are comments. The vertex count is one more than the largest
/// id seen, or `min_vertices` if that is larger.
pub fn parse_edge_list(text: &str, min_vertices: Option<usize>) -> Result<Graph, ParseError> {
    let mut edges = Vec::new();
    let mut n = min_vertices.unwrap_or(0);
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('c') {
            continue;
        }
        let ids: Vec<&str> = trimmed.split_whitespace().collect();
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|_| ParseError::Line {
                line,
                message: format!("bad vertex id '{s}'"),
            })
        };
        if ids.len() != 2 {
            return Err(ParseError::Line {
                line,
                message: format!("expected two vertex ids, got '{trimmed}'"),
            });
        }
        let (u, v) = (parse(ids[0])?, parse(ids[1])?);
        n = n.max(u + 1).max(v + 1);
        edges.push((u, v));
    }
    Ok(Graph::new(n, edges))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# {} vertices\n", g.vertex_count());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        let g = parse_edge_list("# path\n0 1\n1 2\n\n", None).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_edge_list("0 1\n", Some(4)).unwrap().vertex_count(), 4);
    }

    #[test]
    fn round_trip() {
        let g = Graph::new(4, [(0, 1), (2, 3), (0, 3)]);
        assert_eq!(parse_edge_list(&write_edge_list(&g), None).unwrap(), g);
    }

    #[test]
    fn rejects_garbage() {
        assert_eq!(
            parse_edge_list("0 1\n0 x\n", None).unwrap_err(),
            ParseError::Line {
                line: 2,
                message: "bad vertex id 'x'".into()
            }
        );
        assert!(parse_edge_list("0 1 2\n", None).is_err());
    }
}
