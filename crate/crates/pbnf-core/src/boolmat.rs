//! 2×2 matrices over GF(2) as operator representations.
//!
//! An operator's number string x1x2x3x4 splits row-major into [x1 x2 / x3 x4].
//! "Boolean matrix" here means idempotent under GF(2) matrix multiplication;
//! m + m = 0 holds for every matrix mod 2, so only the multiplicative
//! condition selects anything.

use std::fmt;

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::formula::BinaryOp;
use crate::opspace::{self, BitString, OperatorDescriptor, OperatorGroup};

/// A 2×2 matrix over GF(2), entries row-major [x1 x2 / x3 x4].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    entries: [bool; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatError {
    /// Only binary-arity catalog rows have a 4-bit string to split.
    NonBinaryOperator(String),
    WrongLength(usize),
}

impl fmt::Display for MatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatError::NonBinaryOperator(name) => {
                write!(f, "operator `{name}` has no 2x2 matrix form")
            }
            MatError::WrongLength(n) => write!(f, "expected 4 bits, got {n}"),
        }
    }
}

impl std::error::Error for MatError {}

impl Mat2 {
    pub const ZERO: Mat2 = Mat2 {
        entries: [false; 4],
    };
    pub const ONES: Mat2 = Mat2 { entries: [true; 4] };
    pub const IDENTITY: Mat2 = Mat2 {
        entries: [true, false, false, true],
    };

    pub fn new(entries: [bool; 4]) -> Mat2 {
        Mat2 { entries }
    }

    pub fn from_bits(bits: &BitString) -> Result<Mat2, MatError> {
        if bits.len() != 4 {
            return Err(MatError::WrongLength(bits.len()));
        }
        Ok(Mat2 {
            entries: [bits.get(0), bits.get(1), bits.get(2), bits.get(3)],
        })
    }

    /// The matrix of a binary operator's number string.
    pub fn of_op(op: BinaryOp) -> Mat2 {
        Mat2::from_bits(&opspace::binary_bits(op)).expect("binary strings have 4 bits")
    }

    /// The matrix of a catalog row; errors for non-binary arity.
    pub fn of_descriptor(desc: &OperatorDescriptor) -> Result<Mat2, MatError> {
        match desc.group {
            OperatorGroup::Binary | OperatorGroup::Trivial | OperatorGroup::BiConstant => {
                Mat2::from_bits(&desc.bits().expect("binary rows have bits"))
            }
            _ => Err(MatError::NonBinaryOperator(desc.name.to_owned())),
        }
    }

    pub fn bits(&self) -> BitString {
        BitString::new(self.entries.to_vec())
    }

    /// The binary operator owning this matrix's number string. Total: the 16
    /// matrices and the 16 binary operators are in bijection.
    pub fn operator(&self) -> BinaryOp {
        opspace::binary_by_bits(&self.bits()).expect("every 4-bit string is an operator")
    }

    #[allow(clippy::should_implement_trait)] // `a + b` sugar exists below
    pub fn add(self, other: Mat2) -> Mat2 {
        let mut entries = [false; 4];
        for (slot, (a, b)) in entries.iter_mut().zip(self.entries.iter().zip(&other.entries)) {
            *slot = a ^ b;
        }
        Mat2 { entries }
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Mat2) -> Mat2 {
        let [a1, a2, a3, a4] = self.entries;
        let [b1, b2, b3, b4] = other.entries;
        Mat2 {
            entries: [
                (a1 & b1) ^ (a2 & b3),
                (a1 & b2) ^ (a2 & b4),
                (a3 & b1) ^ (a4 & b3),
                (a3 & b2) ^ (a4 & b4),
            ],
        }
    }

    /// Swap x2 and x3.
    pub fn transpose(self) -> Mat2 {
        let [a1, a2, a3, a4] = self.entries;
        Mat2 {
            entries: [a1, a3, a2, a4],
        }
    }

    /// x1·x4 + x2·x3 mod 2.
    pub fn det(self) -> bool {
        let [a1, a2, a3, a4] = self.entries;
        (a1 & a4) ^ (a2 & a3)
    }

    /// m·m = m.
    pub fn is_idempotent(self) -> bool {
        self.mul(self) == self
    }

    pub fn all() -> impl Iterator<Item = Mat2> {
        (0..16u8).map(|n| {
            Mat2::new([
                n & 8 != 0,
                n & 4 != 0,
                n & 2 != 0,
                n & 1 != 0,
            ])
        })
    }
}

impl std::ops::Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::add(self, rhs)
    }
}

impl std::ops::Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::mul(self, rhs)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |i: usize| u8::from(self.entries[i]);
        write!(f, "[{} {} / {} {}]", b(0), b(1), b(2), b(3))
    }
}

/// JSON form: 4-element bit array, row-major.
impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(4))?;
        for e in self.entries {
            seq.serialize_element(&u8::from(e))?;
        }
        seq.end()
    }
}

/// Exhaustive idempotency classification of the 16 operator matrices, with
/// closure checks on the resulting set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixClassification {
    /// Operators whose matrix squares to itself, in catalog order.
    pub boolean: Vec<BinaryOp>,
    /// Pairs from the boolean set whose sum leaves the set.
    pub addition_failures: Vec<(BinaryOp, BinaryOp, BinaryOp)>,
    /// Pairs from the boolean set whose product leaves the set in both
    /// orders; empty means one-sided closure holds.
    pub one_sided_mul_failures: Vec<(BinaryOp, BinaryOp)>,
}

/// Test every binary operator's matrix for idempotency and verify the claimed
/// closures, reporting failures instead of asserting them.
pub fn classify_boolean_matrices() -> MatrixClassification {
    let boolean: Vec<BinaryOp> = BinaryOp::ALL
        .into_iter()
        .filter(|op| Mat2::of_op(*op).is_idempotent())
        .collect();
    let in_set = |m: Mat2| boolean.contains(&m.operator());

    let mut addition_failures = Vec::new();
    let mut one_sided_mul_failures = Vec::new();
    for (i, &a) in boolean.iter().enumerate() {
        for &b in &boolean[i..] {
            let sum = Mat2::of_op(a).add(Mat2::of_op(b));
            if !in_set(sum) {
                addition_failures.push((a, b, sum.operator()));
            }
            let ab = Mat2::of_op(a).mul(Mat2::of_op(b));
            let ba = Mat2::of_op(b).mul(Mat2::of_op(a));
            if !in_set(ab) && !in_set(ba) {
                one_sided_mul_failures.push((a, b));
            }
        }
    }
    MatrixClassification {
        boolean,
        addition_failures,
        one_sided_mul_failures,
    }
}

/// Closure of {matrix of p} under transpose, addition, and multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenerationReport {
    /// The generated matrices, each named by the operator owning its string.
    pub closure: Vec<(Mat2, BinaryOp)>,
}

impl GenerationReport {
    pub fn contains(&self, m: Mat2) -> bool {
        self.closure.iter().any(|(gen, _)| *gen == m)
    }

    pub fn contains_op(&self, op: BinaryOp) -> bool {
        self.contains(Mat2::of_op(op))
    }
}

/// Starting from the left-projection matrix alone, close under transpose,
/// addition, and multiplication. The closure contains the matrices of q
/// (= pᵀ), the zero matrix (= p·q), the all-ones matrix (= q·p), p', q', and
/// the identity: the generators needed for the full polynomial pq+p+q+1.
pub fn selector_generation() -> GenerationReport {
    let mut set = std::collections::BTreeSet::new();
    set.insert(Mat2::of_op(BinaryOp::Left));
    loop {
        let current: Vec<Mat2> = set.iter().copied().collect();
        let before = set.len();
        for &a in &current {
            set.insert(a.transpose());
            for &b in &current {
                set.insert(a.add(b));
                set.insert(a.mul(b));
            }
        }
        if set.len() == before {
            break;
        }
    }
    GenerationReport {
        closure: set.into_iter().map(|m| (m, m.operator())).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matrices_of_worked_displays() {
        assert_eq!(Mat2::of_op(BinaryOp::Nor).to_string(), "[0 0 / 0 1]");
        assert_eq!(Mat2::of_op(BinaryOp::Left).to_string(), "[1 1 / 0 0]");
        assert_eq!(Mat2::of_op(BinaryOp::Iff), Mat2::IDENTITY);
    }

    #[test]
    fn transpose_swaps_projection_families() {
        assert_eq!(
            Mat2::of_op(BinaryOp::Left).transpose(),
            Mat2::of_op(BinaryOp::Right)
        );
        assert_eq!(
            Mat2::of_op(BinaryOp::NotLeft).transpose(),
            Mat2::of_op(BinaryOp::NotRight)
        );
        for m in Mat2::all() {
            assert_eq!(m.transpose().transpose(), m);
        }
    }

    #[test]
    fn determinants() {
        assert!(!Mat2::of_op(BinaryOp::Nor).det());
        assert!(Mat2::of_op(BinaryOp::Iff).det());
    }

    #[test]
    fn idempotency_examples() {
        assert!(Mat2::of_op(BinaryOp::And).is_idempotent());
        assert!(Mat2::of_op(BinaryOp::Nor).is_idempotent());
        assert!(!Mat2::of_op(BinaryOp::Or).is_idempotent());
        // The exclusive disjunction squares to the identity instead.
        let xor = Mat2::of_op(BinaryOp::Xor);
        assert!(!xor.is_idempotent());
        assert_eq!(xor.mul(xor), Mat2::IDENTITY);
        // The all-ones matrix squares to zero.
        assert_eq!(Mat2::ONES.mul(Mat2::ONES), Mat2::ZERO);
    }

    #[test]
    fn every_matrix_cancels_under_addition() {
        for m in Mat2::all() {
            assert_eq!(m.add(m), Mat2::ZERO);
        }
    }

    #[test]
    fn classification_finds_exactly_eight() {
        let report = classify_boolean_matrices();
        let mut expected = vec![
            BinaryOp::Bottom,
            BinaryOp::And,
            BinaryOp::Nor,
            BinaryOp::Left,
            BinaryOp::Right,
            BinaryOp::NotLeft,
            BinaryOp::NotRight,
            BinaryOp::Iff,
        ];
        expected.sort_by_key(|op| opspace::binary_descriptor(*op).id);
        let mut got = report.boolean.clone();
        got.sort_by_key(|op| opspace::binary_descriptor(*op).id);
        assert_eq!(got, expected);
        // Idempotents have det 1 only at the identity.
        for op in &report.boolean {
            let det1 = Mat2::of_op(*op).det();
            assert_eq!(det1, *op == BinaryOp::Iff);
        }
        // Addition leaves the set (p + q is the exclusive disjunction).
        assert!(report
            .addition_failures
            .iter()
            .any(|(a, b, c)| (*a, *b, *c) == (BinaryOp::Left, BinaryOp::Right, BinaryOp::Xor)
                || (*a, *b, *c) == (BinaryOp::Right, BinaryOp::Left, BinaryOp::Xor)));
        // One-sided multiplicative closure does hold.
        assert!(report.one_sided_mul_failures.is_empty());
    }

    #[test]
    fn generation_from_left_projection() {
        let report = selector_generation();
        assert!(report.closure.len() <= 16);
        assert_eq!(report.closure.len(), 8);
        for op in [
            BinaryOp::Left,
            BinaryOp::Right,
            BinaryOp::NotLeft,
            BinaryOp::NotRight,
            BinaryOp::Bottom,
            BinaryOp::Top,
            BinaryOp::Iff,
        ] {
            assert!(report.contains_op(op), "{op:?}");
        }
        // The worked products behind the generation.
        let p = Mat2::of_op(BinaryOp::Left);
        let q = Mat2::of_op(BinaryOp::Right);
        assert_eq!(p.mul(q), Mat2::ZERO);
        assert_eq!(q.mul(p), Mat2::ONES);
        assert_eq!(p.add(Mat2::ONES), Mat2::of_op(BinaryOp::NotLeft));
    }

    #[test]
    fn descriptor_conversion_errors_for_non_binary() {
        let negation = opspace::singular_descriptor(crate::formula::SingularOp::Negation);
        assert!(matches!(
            Mat2::of_descriptor(negation),
            Err(MatError::NonBinaryOperator(_))
        ));
        let and = opspace::binary_descriptor(BinaryOp::And);
        assert!(Mat2::of_descriptor(and).is_ok());
    }
}
