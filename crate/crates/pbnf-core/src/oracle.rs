//! Brute-force truth-table evaluation.
//!
//! This is the reference semantics the polynomial engine is tested against.
//! Every connective's truth function is spelled out directly here; nothing is
//! derived from the polynomial transform or the operator catalog, so the two
//! paths stay independent.

use crate::formula::{BinaryOp, Formula, SingularOp, TernaryOp};
use crate::gf2poly::{Assignment, EvalError};

pub fn eval_singular(op: SingularOp, a: bool) -> bool {
    match op {
        SingularOp::Identity => a,
        SingularOp::Negation => !a,
        SingularOp::ToTrue => true,
        SingularOp::ToFalse => false,
    }
}

pub fn eval_binary(op: BinaryOp, a: bool, b: bool) -> bool {
    match op {
        BinaryOp::And => a && b,
        BinaryOp::Or => a || b,
        BinaryOp::Imp => !a || b,
        BinaryOp::RevImp => a || !b,
        BinaryOp::Nimp => a && !b,
        BinaryOp::Nrimp => !a && b,
        BinaryOp::Iff => a == b,
        BinaryOp::Xor => a != b,
        BinaryOp::Nand => !(a && b),
        BinaryOp::Nor => !(a || b),
        BinaryOp::Left => a,
        BinaryOp::Right => b,
        BinaryOp::NotLeft => !a,
        BinaryOp::NotRight => !b,
        BinaryOp::Top => true,
        BinaryOp::Bottom => false,
    }
}

pub fn eval_ternary(op: TernaryOp, a: bool, b: bool, c: bool) -> bool {
    match op {
        // "if b then a else c"
        TernaryOp::Cd => {
            if b {
                a
            } else {
                c
            }
        }
        TernaryOp::Majority => (a && b) || (a && c) || (b && c),
        TernaryOp::Parity => a ^ b ^ c,
    }
}

/// Evaluate a formula under a total assignment by structural recursion.
pub fn eval_formula(f: &Formula, t: &Assignment) -> Result<bool, EvalError> {
    match f {
        Formula::Const(b) => Ok(*b),
        Formula::Letter(name) => t
            .get(name)
            .ok_or_else(|| EvalError::MissingLetter(name.clone())),
        Formula::Singular(op, a) => Ok(eval_singular(*op, eval_formula(a, t)?)),
        Formula::Binary(op, a, b) => Ok(eval_binary(
            *op,
            eval_formula(a, t)?,
            eval_formula(b, t)?,
        )),
        Formula::Ternary(op, a, b, c) => Ok(eval_ternary(
            *op,
            eval_formula(a, t)?,
            eval_formula(b, t)?,
            eval_formula(c, t)?,
        )),
    }
}

/// A full truth table: rows in descending lexicographic assignment order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthTable {
    pub order: Vec<String>,
    pub rows: Vec<(Assignment, bool)>,
}

impl TruthTable {
    pub fn is_tautology(&self) -> bool {
        self.rows.iter().all(|(_, v)| *v)
    }

    pub fn is_contradiction(&self) -> bool {
        self.rows.iter().all(|(_, v)| !*v)
    }

    /// The value column as a 0/1 string, row 0 leftmost.
    pub fn bits(&self) -> String {
        self.rows
            .iter()
            .map(|(_, v)| if *v { '1' } else { '0' })
            .collect()
    }

    /// Text rendering: header row of letters, one row per assignment, value
    /// column last.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.order {
            out.push_str(l);
            out.push(' ');
        }
        out.push_str("| value\n");
        for (assignment, value) in &self.rows {
            for l in &self.order {
                let bit = assignment.get(l).expect("row covers order");
                out.push_str(if bit { "1" } else { "0" });
                // Pad to the letter's width so columns line up.
                for _ in 0..l.len().saturating_sub(1) {
                    out.push(' ');
                }
                out.push(' ');
            }
            out.push_str("| ");
            out.push_str(if *value { "1" } else { "0" });
            out.push('\n');
        }
        out
    }
}

/// Enumerate the full truth table of `f` over `order` (which must cover all
/// letters of `f`).
pub fn truth_table(f: &Formula, order: &[String]) -> Result<TruthTable, EvalError> {
    let mut rows = Vec::with_capacity(1 << order.len());
    for assignment in Assignment::descending(order) {
        let value = eval_formula(f, &assignment)?;
        rows.push((assignment, value));
    }
    Ok(TruthTable {
        order: order.to_vec(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conditional_is_false_only_at_true_false() {
        let f = Formula::parse("p -> q").unwrap();
        let t = Assignment::from_pairs([("p", true), ("q", false)]);
        assert_eq!(eval_formula(&f, &t), Ok(false));
        let t = Assignment::from_pairs([("p", false), ("q", false)]);
        assert_eq!(eval_formula(&f, &t), Ok(true));
    }

    #[test]
    fn conditioned_disjunction_selects_on_middle() {
        let f = Formula::parse("cd(p,q,r)").unwrap();
        for p in [false, true] {
            for r in [false, true] {
                let t = Assignment::from_pairs([("p", p), ("q", true), ("r", r)]);
                assert_eq!(eval_formula(&f, &t), Ok(p));
                let t = Assignment::from_pairs([("p", p), ("q", false), ("r", r)]);
                assert_eq!(eval_formula(&f, &t), Ok(r));
            }
        }
    }

    #[test]
    fn majority_needs_two() {
        let f = Formula::parse("maj(p,q,r)").unwrap();
        let t = Assignment::from_pairs([("p", true), ("q", true), ("r", false)]);
        assert_eq!(eval_formula(&f, &t), Ok(true));
        let t = Assignment::from_pairs([("p", true), ("q", false), ("r", false)]);
        assert_eq!(eval_formula(&f, &t), Ok(false));
    }

    #[test]
    fn tables_enumerate_descending() {
        let order = vec!["p".to_string()];
        let table = truth_table(&Formula::parse("p | !p").unwrap(), &order).unwrap();
        assert!(table.is_tautology());
        assert_eq!(table.bits(), "11");

        let order = vec!["p".to_string(), "q".to_string()];
        let table = truth_table(&Formula::parse("p <-> q").unwrap(), &order).unwrap();
        assert_eq!(table.bits(), "1001");
        assert!(!table.is_tautology());
        assert!(!table.is_contradiction());
    }

    #[test]
    fn majority_true_rows() {
        let order: Vec<String> = ["p", "q", "r"].iter().map(|s| s.to_string()).collect();
        let table = truth_table(&Formula::parse("maj(p,q,r)").unwrap(), &order).unwrap();
        let true_rows: Vec<String> = table
            .rows
            .iter()
            .filter(|(_, v)| *v)
            .map(|(a, _)| {
                order
                    .iter()
                    .map(|l| if a.get(l).unwrap() { '1' } else { '0' })
                    .collect()
            })
            .collect();
        assert_eq!(true_rows, vec!["111", "110", "101", "011"]);
    }

    #[test]
    fn missing_letter_is_reported() {
        let f = Formula::parse("p & q").unwrap();
        let t = Assignment::from_pairs([("p", true)]);
        assert_eq!(
            eval_formula(&f, &t),
            Err(EvalError::MissingLetter("q".into()))
        );
    }
}
