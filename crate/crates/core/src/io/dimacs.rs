//! DIMACS CNF.

use super::ParseError;
use crate::reductions::CnfFormula;

/// Parses `p cnf V C` followed by zero-terminated clauses. Comment lines start with `c`; a line
/// starting with `%` ends the input.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |message: String| ParseError::Line { line, message };
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(err("second problem line".into()));
            }
            let parts: Vec<&str> = trimmed.split_whitespace().collect();
            if parts.len() != 4 || parts[1] != "cnf" {
                return Err(err(format!("expected 'p cnf <vars> <clauses>', got '{trimmed}'")));
            }
            let v = parts[2].parse().map_err(|_| err(format!("bad variable count '{}'", parts[2])))?;
            let c = parts[3].parse().map_err(|_| err(format!("bad clause count '{}'", parts[3])))?;
            header = Some((v, c));
            continue;
        }
        let Some((vars, _)) = header else {
            return Err(err("clause before problem line".into()));
        };
        for tok in trimmed.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal '{tok}'")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else if lit.unsigned_abs() as usize > vars {
                return Err(err(format!("literal {lit} exceeds {vars} variables")));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((vars, count)) = header else {
        return Err(ParseError::Line {
            line: 0,
            message: "missing problem line".into(),
        });
    };
    if !current.is_empty() {
        clauses.push(current);
    }
    if clauses.len() != count {
        return Err(ParseError::Line {
            line: 0,
            message: format!("header declares {count} clauses, found {}", clauses.len()),
        });
    }
    CnfFormula::new(vars, clauses).map_err(|e| ParseError::Invalid(e.to_string()))
}

pub fn write_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.variable_count(), f.clauses().len());
    for clause in f.clauses() {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}
