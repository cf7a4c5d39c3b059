//! CNF formulas and the rewrite into uniform clauses.

use std::collections::BTreeSet;
use std::fmt;

use super::ReductionError;

/// A CNF formula over variables `1..=variable_count`; literal `+i` is `x_i`, `-i` is `¬x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    /// Rejects empty clauses, out-of-range literals and repeated literals within a clause.
    pub fn new(variable_count: usize, clauses: Vec<Vec<i32>>) -> Result<Self, ReductionError> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(ReductionError::InvalidFormula(format!("clause {} is empty", j + 1)));
            }
            let mut seen = BTreeSet::new();
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > variable_count {
                    return Err(ReductionError::InvalidFormula(format!(
                        "clause {} has literal {lit} outside 1..={variable_count}",
                        j + 1
                    )));
                }
                if !seen.insert(lit) {
                    return Err(ReductionError::InvalidFormula(format!(
                        "clause {} repeats literal {lit}",
                        j + 1
                    )));
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn is_uniform(&self) -> bool {
        self.clauses.iter().all(|c| clause_polarity(c).is_some())
    }

    /// Value under `assignment[i - 1]` for variable `i`.
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let clauses: Vec<String> = self
            .clauses
            .iter()
            .map(|c| {
                let lits: Vec<String> = c
                    .iter()
                    .map(|&l| {
                        if l > 0 {
                            format!("x{l}")
                        } else {
                            format!("¬x{}", -l)
                        }
                    })
                    .collect();
                format!("({})", lits.join(" ∨ "))
            })
            .collect();
        f.write_str(&clauses.join(" ∧ "))
    }
}

/// `Some(true)` for an all-positive clause, `Some(false)` for all-negative, `None` if mixed.
pub fn clause_polarity(clause: &[i32]) -> Option<bool> {
    if clause.iter().all(|&l| l > 0) {
        Some(true)
    } else if clause.iter().all(|&l| l < 0) {
        Some(false)
    } else {
        None
    }
}

/// A CNF formula whose clauses are each all-positive or all-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniformCnfFormula(CnfFormula);

impl UniformCnfFormula {
    pub fn new(formula: CnfFormula) -> Result<Self, ReductionError> {
        match formula.clauses.iter().position(|c| clause_polarity(c).is_none()) {
            Some(j) => Err(ReductionError::NotUniform(j + 1)),
            None => Ok(UniformCnfFormula(formula)),
        }
    }

    pub fn formula(&self) -> &CnfFormula {
        &self.0
    }

    /// Polarity of each clause (`true` = positive).
    pub fn polarities(&self) -> Vec<bool> {
        self.0
            .clauses
            .iter()
            .map(|c| clause_polarity(c).expect("uniform"))
            .collect()
    }
}

/// Fresh variables introduced by [`sat_to_uniform`]: `(x, y)` means `y` stands for `¬x`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VariableMap {
    pub complements: Vec<(usize, usize)>,
}

/// Replaces every negative literal `¬x_i` by a fresh variable `y_i` and adds the clauses
/// `x_i ∨ y_i` and `¬x_i ∨ ¬y_i`. Fresh variables are numbered after the originals, in
/// increasing order of `i`; the coupling clauses follow the rewritten originals.
pub fn sat_to_uniform(f: &CnfFormula) -> (UniformCnfFormula, VariableMap) {
    let negated: BTreeSet<usize> = f
        .clauses
        .iter()
        .flatten()
        .filter(|&&l| l < 0)
        .map(|&l| l.unsigned_abs() as usize)
        .collect();
    let mut fresh = vec![0usize; f.variable_count + 1];
    let mut map = VariableMap::default();
    for (offset, &x) in negated.iter().enumerate() {
        let y = f.variable_count + offset + 1;
        fresh[x] = y;
        map.complements.push((x, y));
    }
    let mut clauses: Vec<Vec<i32>> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter()
                .map(|&l| if l < 0 { fresh[l.unsigned_abs() as usize] as i32 } else { l })
                .collect()
        })
        .collect();
    for &(x, y) in &map.complements {
        clauses.push(vec![x as i32, y as i32]);
        clauses.push(vec![-(x as i32), -(y as i32)]);
    }
    let formula = CnfFormula {
        variable_count: f.variable_count + map.complements.len(),
        clauses,
    };
    (UniformCnfFormula(formula), map)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_example() {
        let f = CnfFormula::new(3, vec![vec![1, -2], vec![-1, 3]]).unwrap();
        let (u, map) = sat_to_uniform(&f);
        assert_eq!(map.complements, vec![(1, 4), (2, 5)]);
        assert_eq!(
            u.formula().clauses(),
            &[
                vec![1, 5],
                vec![4, 3],
                vec![1, 4],
                vec![-1, -4],
                vec![2, 5],
                vec![-2, -5]
            ]
        );
        assert_eq!(u.formula().variable_count(), 5);
    }

    #[test]
    fn uniform_input_unchanged() {
        let f = CnfFormula::new(2, vec![vec![1, 2]]).unwrap();
        let (u, map) = sat_to_uniform(&f);
        assert_eq!(u.formula(), &f);
        assert!(map.complements.is_empty());
    }

    #[test]
    fn single_negative_literal() {
        let f = CnfFormula::new(1, vec![vec![-1]]).unwrap();
        let (u, _) = sat_to_uniform(&f);
        assert_eq!(u.formula().clauses(), &[vec![2], vec![1, 2], vec![-1, -2]]);
        assert!(u.formula().evaluate(&[false, true]));
        assert!(!u.formula().evaluate(&[true, false]));
    }

    #[test]
    fn invalid_formulas_rejected() {
        assert!(CnfFormula::new(1, vec![vec![]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![2]]).is_err());
        assert!(CnfFormula::new(1, vec![vec![1, 1]]).is_err());
        let mixed = CnfFormula::new(2, vec![vec![1, -2]]).unwrap();
        assert_eq!(UniformCnfFormula::new(mixed), Err(ReductionError::NotUniform(1)));
    }
}
