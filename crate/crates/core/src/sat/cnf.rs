use std::fmt;

use crate::error::{Error, Result};

/// A CNF formula whose clauses hold two or three literals over distinct
/// variables. Literals are signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        let err = |message: String| Error::Dimacs { line: 0, message };
        if clauses.is_empty() {
            return Err(err("formula has no clauses".into()));
        }
        for (k, clause) in clauses.iter().enumerate() {
            check_clause(clause, num_vars).map_err(|m| err(format!("clause {}: {m}", k + 1)))?;
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }

    /// First satisfying assignment in binary counting order, by exhaustive
    /// search.
    pub fn brute_force_sat(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "brute force limited to 31 variables");
        (0u32..1 << self.num_vars)
            .map(|mask| (0..self.num_vars).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.eval(a))
    }

    pub fn to_dimacs(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "p cnf {} {}", self.num_vars, self.clauses.len())?;
        for c in &self.clauses {
            for l in c {
                write!(f, "{l} ")?;
            }
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

fn check_clause(clause: &[i32], num_vars: usize) -> std::result::Result<(), String> {
    if !(2..=3).contains(&clause.len()) {
        return Err(format!("has {} literals, expected 2 or 3", clause.len()));
    }
    for (j, &l) in clause.iter().enumerate() {
        let v = l.unsigned_abs() as usize;
        if l == 0 || v > num_vars {
            return Err(format!("literal {l} out of range 1..={num_vars}"));
        }
        if clause[..j].iter().any(|&o| o.unsigned_abs() as usize == v) {
            return Err(format!("variable {v} occurs twice"));
        }
    }
    Ok(())
}

/// Parses DIMACS CNF: `c` comment lines, a `p cnf VARS CLAUSES` header, and
/// zero-terminated clauses that may span lines.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut current_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        let err = |message: String| Error::Dimacs { line: line_no, message };
        if line.starts_with('p') {
            if header.is_some() {
                return Err(err("duplicate header".into()));
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parsed = match fields.as_slice() {
                ["p", "cnf", v, c] => v.parse::<usize>().ok().zip(c.parse::<usize>().ok()),
                _ => None,
            };
            let (v, c) =
                parsed.ok_or_else(|| err(format!("malformed header {line:?}, expected \"p cnf VARS CLAUSES\"")))?;
            header = Some((v, c, line_no));
            continue;
        }
        let (num_vars, _, _) = header.ok_or_else(|| err("clause before the \"p cnf\" header".into()))?;
        for tok in line.split_whitespace() {
            let lit: i32 = tok.parse().map_err(|_| err(format!("bad literal {tok:?}")))?;
            if lit == 0 {
                check_clause(&current, num_vars).map_err(|m| Error::Dimacs {
                    line: current_line,
                    message: format!("clause {}: {m}", clauses.len() + 1),
                })?;
                clauses.push(std::mem::take(&mut current));
            } else {
                if lit.unsigned_abs() as usize > num_vars {
                    return Err(err(format!("literal {lit} out of range 1..={num_vars}")));
                }
                if current.is_empty() {
                    current_line = line_no;
                }
                current.push(lit);
            }
        }
    }
    let (num_vars, num_clauses, header_line) =
        header.ok_or(Error::Dimacs { line: 0, message: "missing \"p cnf\" header".into() })?;
    if !current.is_empty() {
        return Err(Error::Dimacs { line: current_line, message: "last clause is not terminated by 0".into() });
    }
    if clauses.is_empty() {
        return Err(Error::Dimacs { line: header_line, message: "formula has no clauses".into() });
    }
    if clauses.len() != num_clauses {
        return Err(Error::Dimacs {
            line: header_line,
            message: format!("header declares {num_clauses} clauses, found {}", clauses.len()),
        });
    }
    Ok(CnfFormula { num_vars, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;

    const OMEGA: &str = "c omega\np cnf 3 4\n1 2 0\n-2 -3 0\n-1 -3 0\n-1 -2 3 0\n";

    fn line_of(e: Error) -> usize {
        match e {
            Error::Dimacs { line, .. } => line,
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn parses_and_prints() {
        let f = parse_dimacs(OMEGA).unwrap();
        assert_eq!((f.num_vars(), f.num_clauses()), (3, 4));
        assert_eq!(f.clauses()[3], vec![-1, -2, 3]);
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
        let split = parse_dimacs("p cnf 2 1\n1\n-2 0\n").unwrap();
        assert_eq!(split.clauses(), &[vec![1, -2]]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(line_of(parse_dimacs("p cnf x 1\n1 2 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs("p cnf 2 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs("p cnf 3 1\n1 2 3 -1 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("p cnf 3 1\nc\n1 2 3 -2 0\n").unwrap_err()), 3);
        assert_eq!(line_of(parse_dimacs("p cnf 2 1\n1 5 0\n").unwrap_err()), 2);
        assert_eq!(line_of(parse_dimacs("1 2 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs("p cnf 2 2\n1 2 0\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_dimacs("p cnf 2 1\n1 -1 0\n").unwrap_err()), 2);
        assert!(parse_dimacs("p cnf 2 1\n1 2\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 0\n").is_err());
        assert!(CnfFormula::new(2, vec![]).is_err());
    }

    #[test]
    fn brute_force() {
        let f = parse_dimacs(OMEGA).unwrap();
        let a = f.brute_force_sat().unwrap();
        assert!(f.eval(&a));
        assert!(f.eval(&[true, false, false]));
        let unsat = CnfFormula::new(2, vec![vec![1, 2], vec![1, -2], vec![-1, 2], vec![-1, -2]]).unwrap();
        assert_eq!(unsat.brute_force_sat(), None);
    }
}
