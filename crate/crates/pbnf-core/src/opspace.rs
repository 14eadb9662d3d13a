//! The operator space: truth vectors (number strings), the operator catalog
//! and its taxonomy, selector arithmetic, ANF ⇄ truth-vector ⇄ DBNF
//! transforms, and duality.
//!
//! Column convention: column `j` (0-indexed, leftmost 0) of a vector over the
//! letter order `(v_0, ..., v_{n-1})` encodes the assignment in which letter
//! `v_i` has value `1 - bit_i(j)`, with `bit_i` the i-th bit of `j` written
//! MSB-first in `n` bits. Columns therefore enumerate assignments in
//! descending lexicographic order; over `(p, q)`, p = 1100 and q = 1010.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Deserializer, Serialize};

use crate::formula::{BinaryOp, Formula, SingularOp, TernaryOp};
use crate::gf2poly::{Assignment, EvalError, Monomial, Polynomial};
use crate::oracle;

/// A plain 0/1 string; the "number string" of an operator or statement.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<bool>);

impl BitString {
    pub fn new(bits: Vec<bool>) -> Self {
        BitString(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// Number of ones; the operator's weight.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|b| **b).count()
    }

    pub fn xor(&self, other: &BitString) -> BitString {
        assert_eq!(self.0.len(), other.0.len(), "length mismatch");
        BitString(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a ^ b)
                .collect(),
        )
    }

    pub fn complement(&self) -> BitString {
        BitString(self.0.iter().map(|b| !b).collect())
    }

    pub fn reversed(&self) -> BitString {
        BitString(self.0.iter().rev().copied().collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|b| !b)
    }

    pub fn is_ones(&self) -> bool {
        self.0.iter().all(|b| *b)
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{}", u8::from(*b))?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("invalid bit character `{other}`")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitString)
    }
}

impl Serialize for BitString {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitString {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A length-2^n bit string over a declared letter order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruthVector {
    pub order: Vec<String>,
    pub bits: BitString,
}

impl TruthVector {
    pub fn new(order: Vec<String>, bits: BitString) -> Self {
        assert_eq!(bits.len(), 1 << order.len(), "bit length must be 2^n");
        TruthVector { order, bits }
    }

    pub fn letter_count(&self) -> usize {
        self.order.len()
    }
}

impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl Serialize for TruthVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("TruthVector", 2)?;
        s.serialize_field("order", &self.order)?;
        s.serialize_field("bits", &self.bits)?;
        s.end()
    }
}

/// Taxonomy group of a catalog row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OperatorGroup {
    Singular,
    Binary,
    Trivial,
    BiConstant,
    Constant,
}

/// A row of the operator catalog.
///
/// Rows 1-20 carry a truth vector transcribed literally (the oracle computes
/// its truth functions separately, and tests require the two to agree). Rows
/// 21-24 are the null-class constants, which have no vector or arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorDescriptor {
    pub id: u8,
    pub name: &'static str,
    /// Mathematical display symbol.
    pub symbol: &'static str,
    /// ASCII spelling used by the grammar and the command line.
    pub ascii: &'static str,
    pub group: OperatorGroup,
    vector_bits: Option<&'static str>,
}

impl OperatorDescriptor {
    pub fn bits(&self) -> Option<BitString> {
        self.vector_bits.map(|s| s.parse().expect("catalog bits"))
    }

    /// The vector over the canonical letters: `(p)` for singular rows,
    /// `(p, q)` for binary rows.
    pub fn vector(&self) -> Option<TruthVector> {
        let bits = self.bits()?;
        let order = if bits.len() == 2 {
            vec!["p".to_owned()]
        } else {
            vec!["p".to_owned(), "q".to_owned()]
        };
        Some(TruthVector::new(order, bits))
    }

    /// The number string: vector bits without separators.
    pub fn numberstring(&self) -> Option<String> {
        self.vector_bits.map(str::to_owned)
    }

    pub fn weight(&self) -> Option<usize> {
        self.bits().map(|b| b.weight())
    }

    pub fn arity(&self) -> Option<usize> {
        match self.group {
            OperatorGroup::Singular => Some(1),
            OperatorGroup::Binary | OperatorGroup::Trivial | OperatorGroup::BiConstant => Some(2),
            OperatorGroup::Constant => None,
        }
    }

    pub fn binary_op(&self) -> Option<BinaryOp> {
        binary_op_by_id(self.id)
    }

    pub fn singular_op(&self) -> Option<SingularOp> {
        match self.id {
            1 => Some(SingularOp::Identity),
            2 => Some(SingularOp::ToFalse),
            3 => Some(SingularOp::Negation),
            4 => Some(SingularOp::ToTrue),
            _ => None,
        }
    }
}

const fn row(
    id: u8,
    name: &'static str,
    symbol: &'static str,
    ascii: &'static str,
    group: OperatorGroup,
    vector_bits: Option<&'static str>,
) -> OperatorDescriptor {
    OperatorDescriptor {
        id,
        name,
        symbol,
        ascii,
        group,
        vector_bits,
    }
}

/// The 24-row operator catalog: 4 singular, 10 binary, 2 trivial,
/// 4 bi-constant, 4 constant.
pub const CATALOG: [OperatorDescriptor; 24] = [
    row(1, "identity", "=", "=", OperatorGroup::Singular, Some("10")),
    row(2, "to-false", "−", "-", OperatorGroup::Singular, Some("00")),
    row(3, "negation", "¬", "!", OperatorGroup::Singular, Some("01")),
    row(4, "to-true", "+", "+", OperatorGroup::Singular, Some("11")),
    row(5, "conjunction", "∧", "&", OperatorGroup::Binary, Some("1000")),
    row(6, "disjunction", "∨", "|", OperatorGroup::Binary, Some("1110")),
    row(7, "conditional", "⇒", "->", OperatorGroup::Binary, Some("1011")),
    row(8, "converse", "⇐", "<-", OperatorGroup::Binary, Some("1101")),
    row(9, "negated-conditional", "⇏", "nimp", OperatorGroup::Binary, Some("0100")),
    row(10, "negated-converse", "⇍", "nrimp", OperatorGroup::Binary, Some("0010")),
    row(11, "biconditional", "⇔", "<->", OperatorGroup::Binary, Some("1001")),
    row(12, "exclusive-disjunction", "⊕", "^", OperatorGroup::Binary, Some("0110")),
    row(13, "joint-denial", "↓", "nor", OperatorGroup::Binary, Some("0001")),
    row(14, "alternative-denial", "↑", "nand", OperatorGroup::Binary, Some("0111")),
    row(15, "constant-true", "ι₁", "iota1", OperatorGroup::Trivial, Some("1111")),
    row(16, "constant-false", "ι₀", "iota0", OperatorGroup::Trivial, Some("0000")),
    row(17, "left-projection", "p", "p", OperatorGroup::BiConstant, Some("1100")),
    row(18, "right-projection", "q", "q", OperatorGroup::BiConstant, Some("1010")),
    row(19, "negated-left-projection", "p′", "p'", OperatorGroup::BiConstant, Some("0011")),
    row(20, "negated-right-projection", "q′", "q'", OperatorGroup::BiConstant, Some("0101")),
    row(21, "membership", "∈", "in", OperatorGroup::Constant, None),
    row(22, "equality", "=", "eq", OperatorGroup::Constant, None),
    row(23, "for-all", "(·)", "forall", OperatorGroup::Constant, None),
    row(24, "exists", "[·]", "exists", OperatorGroup::Constant, None),
];

fn binary_op_by_id(id: u8) -> Option<BinaryOp> {
    Some(match id {
        5 => BinaryOp::And,
        6 => BinaryOp::Or,
        7 => BinaryOp::Imp,
        8 => BinaryOp::RevImp,
        9 => BinaryOp::Nimp,
        10 => BinaryOp::Nrimp,
        11 => BinaryOp::Iff,
        12 => BinaryOp::Xor,
        13 => BinaryOp::Nor,
        14 => BinaryOp::Nand,
        15 => BinaryOp::Top,
        16 => BinaryOp::Bottom,
        17 => BinaryOp::Left,
        18 => BinaryOp::Right,
        19 => BinaryOp::NotLeft,
        20 => BinaryOp::NotRight,
        _ => return None,
    })
}

fn binary_id(op: BinaryOp) -> u8 {
    match op {
        BinaryOp::And => 5,
        BinaryOp::Or => 6,
        BinaryOp::Imp => 7,
        BinaryOp::RevImp => 8,
        BinaryOp::Nimp => 9,
        BinaryOp::Nrimp => 10,
        BinaryOp::Iff => 11,
        BinaryOp::Xor => 12,
        BinaryOp::Nor => 13,
        BinaryOp::Nand => 14,
        BinaryOp::Top => 15,
        BinaryOp::Bottom => 16,
        BinaryOp::Left => 17,
        BinaryOp::Right => 18,
        BinaryOp::NotLeft => 19,
        BinaryOp::NotRight => 20,
    }
}

pub fn binary_descriptor(op: BinaryOp) -> &'static OperatorDescriptor {
    &CATALOG[binary_id(op) as usize - 1]
}

pub fn singular_descriptor(op: SingularOp) -> &'static OperatorDescriptor {
    let id = match op {
        SingularOp::Identity => 1,
        SingularOp::ToFalse => 2,
        SingularOp::Negation => 3,
        SingularOp::ToTrue => 4,
    };
    &CATALOG[id - 1]
}

/// The catalog bits of a binary operator, as a 4-bit string.
pub fn binary_bits(op: BinaryOp) -> BitString {
    binary_descriptor(op).bits().expect("binary rows have bits")
}

/// Find the binary operator with the given 4-bit vector.
pub fn binary_by_bits(bits: &BitString) -> Option<BinaryOp> {
    if bits.len() != 4 {
        return None;
    }
    BinaryOp::ALL
        .into_iter()
        .find(|op| &binary_bits(*op) == bits)
}

/// Find the singular operator with the given 2-bit vector.
pub fn singular_by_bits(bits: &BitString) -> Option<SingularOp> {
    if bits.len() != 2 {
        return None;
    }
    SingularOp::ALL
        .into_iter()
        .find(|op| singular_descriptor(*op).bits().as_ref() == Some(bits))
}

/// 8-bit vectors of the three named ternary operators over `(p, q, r)`.
pub fn ternary_bits(op: TernaryOp) -> BitString {
    match op {
        TernaryOp::Cd => "11100010",
        TernaryOp::Majority => "11101000",
        TernaryOp::Parity => "10010110",
    }
    .parse()
    .expect("ternary bits")
}

/// Look up a binary operator by ASCII spelling, name, or symbol.
pub fn find_binary(text: &str) -> Option<BinaryOp> {
    BinaryOp::ALL.into_iter().find(|op| {
        let d = binary_descriptor(*op);
        d.ascii == text || d.name == text || d.symbol == text
    })
}

/// The six selectors: the equally heterogeneous (weight-2) 4-bit vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selector {
    P1,
    P2,
    P3,
    P4,
    Q1,
    Q2,
}

impl Selector {
    pub const ALL: [Selector; 6] = [
        Selector::P1,
        Selector::P2,
        Selector::P3,
        Selector::P4,
        Selector::Q1,
        Selector::Q2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Selector::P1 => "p1",
            Selector::P2 => "p2",
            Selector::P3 => "p3",
            Selector::P4 => "p4",
            Selector::Q1 => "q1",
            Selector::Q2 => "q2",
        }
    }

    pub fn bits(self) -> BitString {
        match self {
            Selector::P1 => "1100",
            Selector::P2 => "0110",
            Selector::P3 => "0011",
            Selector::P4 => "1001",
            Selector::Q1 => "1010",
            Selector::Q2 => "0101",
        }
        .parse()
        .expect("selector bits")
    }

    pub fn from_bits(bits: &BitString) -> Option<Selector> {
        Selector::ALL.into_iter().find(|s| &s.bits() == bits)
    }

    pub fn parse(name: &str) -> Option<Selector> {
        Selector::ALL.into_iter().find(|s| s.name() == name)
    }

    /// The selector with the complemented vector: p1↔p3, p2↔p4, q1↔q2.
    pub fn complement(self) -> Selector {
        Selector::from_bits(&self.bits().complement()).expect("complement is a selector")
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Result of adding two selector vectors: either another selector or one of
/// the constant vectors 0000/1111, which are invalid as selectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SelectorSum {
    Selector(Selector),
    /// The two inputs were equal; the sum is 0000.
    Zero,
    /// The two inputs were complementary; the sum is 1111.
    One,
}

/// Componentwise XOR of two selector vectors. Constants are reported rather
/// than treated as errors.
pub fn selector_add(a: Selector, b: Selector) -> SelectorSum {
    let sum = a.bits().xor(&b.bits());
    if sum.is_zero() {
        SelectorSum::Zero
    } else if sum.is_ones() {
        SelectorSum::One
    } else {
        SelectorSum::Selector(Selector::from_bits(&sum).expect("weight-2 sum is a selector"))
    }
}

/// Apply a binary operator's truth function columnwise to two selector
/// vectors. The result may be a selector or any other operator's vector.
pub fn op_on_selectors(op: BinaryOp, s: Selector, t: Selector) -> BitString {
    BitString::new(
        s.bits()
            .iter()
            .zip(t.bits().iter())
            .map(|(a, b)| oracle::eval_binary(op, a, b))
            .collect(),
    )
}

/// Compute the truth vector of a formula over a letter order covering its
/// letters, one oracle evaluation per column.
pub fn vector_of_formula(f: &Formula, order: &[String]) -> Result<TruthVector, EvalError> {
    for l in f.letters() {
        if !order.contains(&l) {
            return Err(EvalError::MissingLetter(l));
        }
    }
    let mut bits = Vec::with_capacity(1 << order.len());
    for assignment in Assignment::descending(order) {
        bits.push(oracle::eval_formula(f, &assignment)?);
    }
    Ok(TruthVector::new(order.to_vec(), BitString::new(bits)))
}

/// Evaluate a polynomial on every column; the inverse of [`anf_from_vector`].
pub fn vector_from_anf(p: &Polynomial, order: &[String]) -> Result<TruthVector, EvalError> {
    for l in p.letters() {
        if !order.contains(&l) {
            return Err(EvalError::MissingLetter(l));
        }
    }
    let mut bits = Vec::with_capacity(1 << order.len());
    for assignment in Assignment::descending(order) {
        bits.push(p.evaluate(&assignment)?);
    }
    Ok(TruthVector::new(order.to_vec(), BitString::new(bits)))
}

/// The unique multilinear polynomial whose evaluation reproduces the vector,
/// computed by the in-place Möbius (butterfly) transform.
///
/// [`anf_from_vector_minterms`] computes the same polynomial along an
/// independent route; the two must always agree.
pub fn anf_from_vector(tv: &TruthVector) -> Polynomial {
    let n = tv.order.len();
    let size = 1usize << n;
    // Reindex from descending-lexicographic columns to the standard order in
    // which bit i of the index is the value of letter i.
    let mut coeffs = vec![false; size];
    for (m, slot) in coeffs.iter_mut().enumerate() {
        let mut j = 0usize;
        for i in 0..n {
            if (m >> i) & 1 == 0 {
                j |= 1 << (n - 1 - i);
            }
        }
        *slot = tv.bits.get(j);
    }
    for i in 0..n {
        for m in 0..size {
            if (m >> i) & 1 == 1 {
                coeffs[m] ^= coeffs[m ^ (1 << i)];
            }
        }
    }
    Polynomial::from_monomials(coeffs.iter().enumerate().filter(|(_, c)| **c).map(
        |(m, _)| {
            Monomial::from_letters((0..n).filter(|i| (m >> i) & 1 == 1).map(|i| tv.order[i].clone()))
        },
    ))
}

/// Minterm-sum route to the same polynomial: for every 1-column, multiply the
/// particles `v` (letter assigned 1) and `v+1` (letter assigned 0) and sum the
/// products mod 2.
pub fn anf_from_vector_minterms(tv: &TruthVector) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (j, assignment) in Assignment::descending(&tv.order).enumerate() {
        if !tv.bits.get(j) {
            continue;
        }
        let mut product = Polynomial::one();
        for (letter, value) in assignment.iter() {
            let particle = if value {
                Polynomial::letter(letter)
            } else {
                Polynomial::letter(letter).complement()
            };
            product = product.mul(&particle);
        }
        acc = acc.add(&product);
    }
    acc
}

/// A disjunctive-normal-form rendering of a truth vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dbnf {
    pub formula: Formula,
    /// Set when the vector had no 1-column: the formula is the constant F,
    /// which is not itself a DBNF phrase.
    pub empty: bool,
}

/// Disjunction of minterms, one per 1-column in column order; each minterm is
/// a conjunction of possibly negated letters. The result is deliberately not
/// simplified (`p | !p` stays a two-phrase disjunction).
pub fn dbnf_from_vector(tv: &TruthVector) -> Dbnf {
    let mut phrases: Vec<Formula> = Vec::new();
    for (j, assignment) in Assignment::descending(&tv.order).enumerate() {
        if !tv.bits.get(j) {
            continue;
        }
        let mut literals = tv.order.iter().map(|l| {
            let value = assignment.get(l).expect("assignment covers order");
            if value {
                Formula::letter(l)
            } else {
                Formula::not(Formula::letter(l))
            }
        });
        // The empty conjunction (zero-letter vector) is the constant T.
        let first = literals.next().unwrap_or(Formula::Const(true));
        phrases.push(literals.fold(first, Formula::and));
    }
    match phrases.split_first() {
        None => Dbnf {
            formula: Formula::Const(false),
            empty: true,
        },
        Some((first, rest)) => Dbnf {
            formula: rest.iter().cloned().fold(first.clone(), Formula::or),
            empty: false,
        },
    }
}

/// The dual operator: complement of the reversed vector, i.e. ¬op(¬a, ¬b).
pub fn dual_of(op: BinaryOp) -> BinaryOp {
    binary_by_bits(&binary_bits(op).reversed().complement())
        .expect("dual of a binary operator is binary")
}

/// Column permutation that reorders descending-lexicographic columns into the
/// area numbering that sorts assignments by descending weight first (ties by
/// descending value). For n ≤ 2 this is the identity; for n = 3 it swaps
/// columns 3 and 4 (assignments 100 and 011).
pub fn paper_area_order(n: usize) -> Vec<usize> {
    let size = 1usize << n;
    let mut assignments: Vec<usize> = (0..size).collect(); // assignment value A = 2^n - 1 - column
    assignments.sort_by(|a, b| {
        (b.count_ones(), b).cmp(&(a.count_ones(), a))
    });
    assignments.into_iter().map(|a| size - 1 - a).collect()
}

/// Def-2.1 taxonomy tags plus the weight-lattice level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub group: OperatorGroup,
    /// Count of ones; level `op_k` of the weight lattice for binary rows.
    pub weight: Option<usize>,
    pub tags: Vec<&'static str>,
}

/// Classify a catalog row: its group, weight level, and taxonomy tags
/// (normal-form / selector / derived / trivial / bi-constant).
pub fn classify(desc: &OperatorDescriptor) -> Classification {
    let tags: Vec<&'static str> = match desc.group {
        OperatorGroup::Singular => match desc.id {
            3 => vec!["normal-form"],
            _ => vec!["singular"],
        },
        OperatorGroup::Binary => match desc.binary_op().expect("binary row") {
            BinaryOp::And | BinaryOp::Or => vec!["normal-form"],
            BinaryOp::Iff | BinaryOp::Xor => vec!["selector", "s2"],
            _ => vec!["derived"],
        },
        OperatorGroup::Trivial => vec!["trivial"],
        OperatorGroup::BiConstant => vec!["bi-constant", "selector", "s1"],
        OperatorGroup::Constant => vec!["constant", "null-class"],
    };
    Classification {
        group: desc.group,
        weight: desc.weight(),
        tags,
    }
}

/// The four particle polynomials over two letters: pq, p(q+1), (p+1)q,
/// (p+1)(q+1).
pub fn particles(p: &str, q: &str) -> [Polynomial; 4] {
    let pp = Polynomial::letter(p);
    let qq = Polynomial::letter(q);
    let pp1 = pp.complement();
    let qq1 = qq.complement();
    [pp.mul(&qq), pp.mul(&qq1), pp1.mul(&qq), pp1.mul(&qq1)]
}

fn order2() -> &'static Vec<String> {
    static ORDER: OnceLock<Vec<String>> = OnceLock::new();
    ORDER.get_or_init(|| vec!["p".to_owned(), "q".to_owned()])
}

/// The truth vector of a catalog binary operator, over `(p, q)`.
pub fn binary_vector(op: BinaryOp) -> TruthVector {
    TruthVector::new(order2().clone(), binary_bits(op))
}
