//! A propositional-calculus engine over multilinear GF(2) polynomials.
//!
//! Formulas over the full sixteen-operator binary connective space (plus the
//! four singular and three named ternary connectives) convert to multilinear
//! polynomials mod 2 in configurable families (a choice of per-letter input
//! polarity and output reading), reduce to canonical form, and pull back to
//! named operators. Tautology, contradiction, equivalence, and entailment all
//! become constant tests on reduced polynomials, and every result can be
//! cross-checked against an independent brute-force truth-table oracle.
//!
//! Module map:
//! - [`formula`]: AST, text grammar, parser, printer
//! - [`gf2poly`]: multilinear polynomial arithmetic over GF(2)
//! - [`opspace`]: truth vectors, the operator catalog, selector arithmetic,
//!   ANF ⇄ vector ⇄ DBNF transforms, duality
//! - [`families`]: polynomial families, the transform, atomic tables, the
//!   fiber back to operators
//! - [`calculus`]: decision procedures
//! - [`boolmat`]: 2×2 GF(2) matrix representations of operators
//! - [`oracle`]: the independent truth-table reference semantics
//! - [`enumerate`]: statement-form enumeration for exhaustive testing

pub mod boolmat;
pub mod calculus;
pub mod enumerate;
pub mod families;
pub mod formula;
pub mod gf2poly;
pub mod opspace;
pub mod oracle;

pub use calculus::{decide, entails, equivalent, Verdict, VerdictKind};
pub use families::{atomic_table, fiber, transform, Family, Reading};
pub use formula::{BinaryOp, Formula, SingularOp, TernaryOp};
pub use gf2poly::{Assignment, Monomial, Polynomial};
pub use opspace::{BitString, OperatorDescriptor, Selector, TruthVector};
