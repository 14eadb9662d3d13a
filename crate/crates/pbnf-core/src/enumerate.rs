//! Exhaustive enumeration of statement forms, used by the oracle-equivalence
//! suites.
//!
//! Formulas are enumerated by connective depth: depth 0 is a bare letter, and
//! a formula of depth d+1 applies negation or one of the chosen binary
//! operators to subformulas of depth at most d. Counts grow roughly as
//! 10·N(d)² per level, so exhaustive runs stop at depth 2 (92,259 formulas
//! over three letters with the ten standard binaries).

use crate::formula::{BinaryOp, Formula};

/// The ten binary connectives with infix grammar spellings.
pub const STANDARD_BINARY: [BinaryOp; 10] = [
    BinaryOp::And,
    BinaryOp::Or,
    BinaryOp::Imp,
    BinaryOp::RevImp,
    BinaryOp::Nimp,
    BinaryOp::Nrimp,
    BinaryOp::Iff,
    BinaryOp::Xor,
    BinaryOp::Nand,
    BinaryOp::Nor,
];

/// All formulas over the given letters with connective depth at most `depth`,
/// built from negation and the given binary operators.
pub fn formulas(letters: &[&str], depth: usize, ops: &[BinaryOp]) -> Vec<Formula> {
    let mut current: Vec<Formula> = letters.iter().map(|l| Formula::letter(l)).collect();
    for _ in 0..depth {
        // F(d) = letters ∪ ¬F(d-1) ∪ { a op b : a, b ∈ F(d-1) }, which also
        // contains all of F(d-1) and has no duplicates.
        let mut next: Vec<Formula> = letters.iter().map(|l| Formula::letter(l)).collect();
        next.reserve(current.len() * (1 + ops.len() * current.len()));
        for f in &current {
            next.push(Formula::not(f.clone()));
        }
        for &op in ops {
            for a in &current {
                for b in &current {
                    next.push(Formula::binary(op, a.clone(), b.clone()));
                }
            }
        }
        current = next;
    }
    current
}

/// Number of formulas `formulas` would return, without building them.
pub fn count(letters: usize, depth: usize, ops: usize) -> usize {
    let mut n = letters;
    for _ in 0..depth {
        n = letters + n + ops * n * n;
    }
    n
}
