//! Line-based decomposition interchange (`s td`, `b`, and edge lines; 1-based ids).

use std::fmt::Write;

use super::{TdError, TreeDecomposition};

/// Serializes `td` for a graph on `n` vertices. Bag ids and vertices are written 1-based.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let n = n.max(td.bags.iter().flatten().map(|&v| v + 1).max().unwrap_or(0));
    let _ = writeln!(out, "s td {} {} {}", td.bags.len(), td.width() + 1, n);
    for (i, bag) in td.bags.iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in &td.tree_edges {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}

/// Parses the interchange format, returning the decomposition (0-based) and the declared
/// vertex count. Lines starting with `c` are comments.
pub fn parse_td(text: &str) -> Result<(TreeDecomposition, usize), TdError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| TdError::Parse { line, message };
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let nums = |toks: &[&str]| -> Result<Vec<usize>, TdError> {
            toks.iter()
                .map(|t| t.parse::<usize>().map_err(|_| err(format!("bad number '{t}'"))))
                .collect()
        };
        match tokens.first().copied() {
            None | Some("c") => continue,
            Some("s") => {
                if tokens.get(1) != Some(&"td") || tokens.len() != 5 {
                    return Err(err("expected 's td <bags> <max bag size> <vertices>'".into()));
                }
                if header.is_some() {
                    return Err(err("duplicate header".into()));
                }
                let v = nums(&tokens[2..])?;
                header = Some((v[0], v[1], v[2]));
                bags = vec![None; v[0]];
            }
            Some("b") => {
                let (_, max_size, n) = header.ok_or_else(|| err("bag before header".into()))?;
                let v = nums(&tokens[1..])?;
                let id = *v.first().ok_or_else(|| err("bag line without id".into()))?;
                if id == 0 || id > bags.len() {
                    return Err(err(format!("bag id {id} out of range")));
                }
                if v.len() - 1 > max_size {
                    return Err(err(format!("bag {id} larger than declared maximum {max_size}")));
                }
                if v[1..].iter().any(|&x| x == 0 || x > n) {
                    return Err(err(format!("bag {id} names a vertex outside 1..={n}")));
                }
                if bags[id - 1].is_some() {
                    return Err(err(format!("bag {id} defined twice")));
                }
                bags[id - 1] = Some(v[1..].iter().map(|x| x - 1).collect());
            }
            Some(_) => {
                header.ok_or_else(|| err("edge before header".into()))?;
                let v = nums(&tokens)?;
                if v.len() != 2 || v.iter().any(|&x| x == 0 || x > bags.len()) {
                    return Err(err("expected two bag ids".into()));
                }
                edges.push((v[0] - 1, v[1] - 1));
            }
        }
    }
    let (_, _, n) = header.ok_or(TdError::Parse {
        line: 0,
        message: "missing 's td' header".into(),
    })?;
    let bags = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| {
            b.ok_or(TdError::Parse {
                line: 0,
                message: format!("bag {} never defined", i + 1),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((TreeDecomposition::new(bags, edges), n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]);
        let text = write_td(&td, 3);
        assert_eq!(text, "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n");
        assert_eq!(parse_td(&text).unwrap(), (td, 3));
    }

    #[test]
    fn comments_and_errors() {
        let ok = "c hello\ns td 1 1 1\nb 1 1\n";
        assert_eq!(parse_td(ok).unwrap().0.bags, vec![vec![0]]);
        let bad = "s td 1 1 1\nb 1 2\n";
        assert!(matches!(parse_td(bad), Err(TdError::Parse { line: 2, .. })));
        assert!(parse_td("b 1 1\n").is_err());
    }
}
