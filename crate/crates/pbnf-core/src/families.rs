//! Polynomial families and the formula → polynomial transform.
//!
//! A [`Family`] fixes an input polarity per letter (normal or complemented)
//! and an output reading (whether 1 or 0 stands for true). The transform maps
//! a formula to the multilinear GF(2) polynomial that computes its encoded
//! truth value from its encoded letters; the [`fiber`] maps a polynomial back
//! to the named operator with the matching truth vector.
//!
//! Composition scheme: internal nodes always use reading-uniform connective
//! templates (the normal-family template for the 1-is-true reading, its
//! conjugate for the 0-is-true reading); leaves absorb any mismatch between
//! their polarity and the reading.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::formula::{BinaryOp, Formula, SingularOp, TernaryOp};
use crate::gf2poly::{Assignment, Polynomial};
use crate::opspace::{
    self, binary_bits, selector_add, singular_descriptor, ternary_bits, BitString,
    OperatorDescriptor, Selector, SelectorSum, TruthVector,
};

/// Which bit stands for "true" when reading polynomial values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reading {
    OneIsTrue,
    ZeroIsTrue,
}

impl Reading {
    pub fn true_bit(self) -> bool {
        matches!(self, Reading::OneIsTrue)
    }
}

/// Template placeholder letters. Uppercase names cannot collide with grammar
/// letters, which are lowercase.
pub const PLACEHOLDERS: [&str; 3] = ["X", "Y", "Z"];

/// A polynomial family: per-letter input polarity (letters not listed are
/// normal) plus the output reading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Family {
    complemented: BTreeSet<String>,
    reading: Reading,
}

impl Family {
    /// g(p,q,1): all letters normal, 1 is true.
    pub fn normal() -> Self {
        Family {
            complemented: BTreeSet::new(),
            reading: Reading::OneIsTrue,
        }
    }

    /// g(p,q,0): all letters normal, 0 is true.
    pub fn complement() -> Self {
        Family {
            complemented: BTreeSet::new(),
            reading: Reading::ZeroIsTrue,
        }
    }

    /// g(p',q',1): p and q complemented, 1 is true.
    pub fn pullback() -> Self {
        Family {
            complemented: ["p".to_owned(), "q".to_owned()].into(),
            reading: Reading::OneIsTrue,
        }
    }

    /// g(p',q',0): p and q complemented, 0 is true.
    pub fn pullback_complement() -> Self {
        Family {
            complemented: ["p".to_owned(), "q".to_owned()].into(),
            reading: Reading::ZeroIsTrue,
        }
    }

    pub fn new<I, S>(complemented: I, reading: Reading) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Family {
            complemented: complemented.into_iter().map(Into::into).collect(),
            reading,
        }
    }

    /// The four named families, in table-column order.
    pub fn named() -> [Family; 4] {
        [
            Family::normal(),
            Family::complement(),
            Family::pullback(),
            Family::pullback_complement(),
        ]
    }

    /// Parse `g(<letter[']>,...,<0|1>)` or one of the aliases
    /// `normal | complement | pullback | pullback-complement`.
    pub fn parse(spec: &str) -> Result<Family, FamilyParseError> {
        let spec = spec.trim();
        match spec {
            "normal" => return Ok(Family::normal()),
            "complement" => return Ok(Family::complement()),
            "pullback" => return Ok(Family::pullback()),
            "pullback-complement" => return Ok(Family::pullback_complement()),
            _ => {}
        }
        let err = |message: &str| FamilyParseError {
            spec: spec.to_owned(),
            message: message.to_owned(),
        };
        let body = spec
            .strip_prefix("g(")
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| err("expected `g(...)` or a family alias"))?;
        let fields: Vec<&str> = body.split(',').map(str::trim).collect();
        if fields.len() < 2 {
            return Err(err("expected at least one letter and a reading"));
        }
        let reading = match *fields.last().unwrap() {
            "1" => Reading::OneIsTrue,
            "0" => Reading::ZeroIsTrue,
            _ => return Err(err("last field must be 0 or 1")),
        };
        let mut complemented = BTreeSet::new();
        for field in &fields[..fields.len() - 1] {
            let (name, primed) = match field.strip_suffix('\'') {
                Some(name) => (name, true),
                None => (*field, false),
            };
            if name.is_empty()
                || !name.chars().next().unwrap().is_ascii_lowercase()
                || !name
                    .chars()
                    .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
            {
                return Err(err("fields must be letters, optionally primed"));
            }
            if primed {
                complemented.insert(name.to_owned());
            }
        }
        Ok(Family {
            complemented,
            reading,
        })
    }

    pub fn reading(&self) -> Reading {
        self.reading
    }

    pub fn is_complemented(&self, letter: &str) -> bool {
        self.complemented.contains(letter)
    }

    pub fn complemented_letters(&self) -> impl Iterator<Item = &str> {
        self.complemented.iter().map(String::as_str)
    }

    /// Encoded polynomial value of a letter carrying the given truth.
    pub fn encode_input(&self, letter: &str, truth: bool) -> bool {
        truth ^ self.is_complemented(letter)
    }

    /// Encoded polynomial value of a statement with the given truth.
    pub fn encode_output(&self, truth: bool) -> bool {
        truth == self.reading.true_bit()
    }

    /// Truth value read from an encoded output bit.
    pub fn decode_output(&self, bit: bool) -> bool {
        bit == self.reading.true_bit()
    }

    /// The constant polynomial encoding "true" in this family.
    pub fn true_constant(&self) -> Polynomial {
        Polynomial::constant(self.reading.true_bit())
    }

    pub fn false_constant(&self) -> Polynomial {
        Polynomial::constant(!self.reading.true_bit())
    }

    /// Encode a truth assignment into polynomial-variable values.
    pub fn encode_assignment(&self, truth: &Assignment) -> Assignment {
        Assignment::from_pairs(
            truth
                .iter()
                .map(|(l, v)| (l.to_owned(), self.encode_input(l, v))),
        )
    }

    /// The alias when this is one of the four named families.
    pub fn alias(&self) -> Option<&'static str> {
        let named = [
            (Family::normal(), "normal"),
            (Family::complement(), "complement"),
            (Family::pullback(), "pullback"),
            (Family::pullback_complement(), "pullback-complement"),
        ];
        named
            .iter()
            .find(|(f, _)| f == self)
            .map(|(_, name)| *name)
    }

    /// Render in `g(...)` notation, always listing p and q.
    pub fn spec_string(&self) -> String {
        let mut letters: BTreeSet<&str> = ["p", "q"].into();
        letters.extend(self.complemented.iter().map(String::as_str));
        let mut out = String::from("g(");
        for l in letters {
            out.push_str(l);
            if self.is_complemented(l) {
                out.push('\'');
            }
            out.push(',');
        }
        out.push(if self.reading.true_bit() { '1' } else { '0' });
        out.push(')');
        out
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.spec_string())
    }
}

/// JSON form: `{"complemented": [letters], "trueIs": 0|1}`.
impl Serialize for Family {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Family", 2)?;
        let letters: Vec<&str> = self.complemented.iter().map(String::as_str).collect();
        s.serialize_field("complemented", &letters)?;
        s.serialize_field("trueIs", &u8::from(self.reading.true_bit()))?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for Family {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct FamilyVisitor;
        impl<'de> Visitor<'de> for FamilyVisitor {
            type Value = Family;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a family object with `complemented` and `trueIs`")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut map: A) -> Result<Family, A::Error> {
                let mut complemented: Option<Vec<String>> = None;
                let mut true_is: Option<u8> = None;
                while let Some(key) = map.next_key::<String>()? {
                    match key.as_str() {
                        "complemented" => complemented = Some(map.next_value()?),
                        "trueIs" => true_is = Some(map.next_value()?),
                        other => return Err(de::Error::unknown_field(other, &["complemented", "trueIs"])),
                    }
                }
                let reading = match true_is.ok_or_else(|| de::Error::missing_field("trueIs"))? {
                    1 => Reading::OneIsTrue,
                    0 => Reading::ZeroIsTrue,
                    other => return Err(de::Error::custom(format!("trueIs out of range: {other}"))),
                };
                Ok(Family::new(complemented.unwrap_or_default(), reading))
            }
        }
        deserializer.deserialize_map(FamilyVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParseError {
    pub spec: String,
    pub message: String,
}

impl fmt::Display for FamilyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "malformed family spec `{}`: {}", self.spec, self.message)
    }
}

impl std::error::Error for FamilyParseError {}

/// Conjugate a template for the 0-is-true reading: complement every
/// placeholder and the output, `T0(x) = 1 + T1(x+1, ...)`.
fn conjugate_template(template: &Polynomial) -> Polynomial {
    let mut out = template.clone();
    for letter in template.letters() {
        out = out.substitute(&letter, &Polynomial::letter(&letter).complement());
    }
    out.complement()
}

fn anf_of_bits(bits: &BitString, arity: usize) -> Polynomial {
    let order: Vec<String> = PLACEHOLDERS[..arity].iter().map(|s| s.to_string()).collect();
    opspace::anf_from_vector(&TruthVector::new(order, bits.clone()))
}

struct Templates {
    singular: HashMap<(SingularOp, bool), Polynomial>,
    binary: HashMap<(BinaryOp, bool), Polynomial>,
    ternary: HashMap<(TernaryOp, bool), Polynomial>,
}

fn templates() -> &'static Templates {
    static TEMPLATES: OnceLock<Templates> = OnceLock::new();
    TEMPLATES.get_or_init(|| {
        let mut singular = HashMap::new();
        for op in SingularOp::ALL {
            let normal = anf_of_bits(&singular_descriptor(op).bits().unwrap(), 1);
            singular.insert((op, false), conjugate_template(&normal));
            singular.insert((op, true), normal);
        }
        let mut binary = HashMap::new();
        for op in BinaryOp::ALL {
            let normal = anf_of_bits(&binary_bits(op), 2);
            binary.insert((op, false), conjugate_template(&normal));
            binary.insert((op, true), normal);
        }
        let mut ternary = HashMap::new();
        for op in TernaryOp::ALL {
            let normal = anf_of_bits(&ternary_bits(op), 3);
            ternary.insert((op, false), conjugate_template(&normal));
            ternary.insert((op, true), normal);
        }
        Templates {
            singular,
            binary,
            ternary,
        }
    })
}

/// The binary connective template in placeholders X, Y: the unique multilinear
/// polynomial with `T(encode(a), encode(b)) = encode(op(a, b))` for all truth
/// pairs under the given reading.
pub fn connective_template(op: BinaryOp, reading: Reading) -> Polynomial {
    templates().binary[&(op, reading.true_bit())].clone()
}

/// The singular connective template in placeholder X.
pub fn connective_template_singular(op: SingularOp, reading: Reading) -> Polynomial {
    templates().singular[&(op, reading.true_bit())].clone()
}

/// The ternary connective template in placeholders X, Y, Z for the family's
/// reading; the 0-is-true versions are conjugated by the template machinery,
/// not hand-coded.
pub fn ternary_pbnf(op: TernaryOp, family: &Family) -> Polynomial {
    templates().ternary[&(op, family.reading.true_bit())].clone()
}

/// Transform a formula into its reduced multilinear polynomial in the family.
///
/// Soundness: for every truth assignment `t`,
/// `transform(f, fam).evaluate(encode_assignment(t)) = encode_output(truth of f under t)`.
pub fn transform(f: &Formula, family: &Family) -> Polynomial {
    match f {
        Formula::Const(b) => Polynomial::constant(family.encode_output(*b)),
        Formula::Letter(name) => {
            let matches_reading =
                family.is_complemented(name) == matches!(family.reading, Reading::ZeroIsTrue);
            if matches_reading {
                Polynomial::letter(name)
            } else {
                Polynomial::letter(name).complement()
            }
        }
        Formula::Singular(op, a) => {
            let template = connective_template_singular(*op, family.reading);
            template.substitute(PLACEHOLDERS[0], &transform(a, family))
        }
        Formula::Binary(op, a, b) => {
            let template = connective_template(*op, family.reading);
            template
                .substitute(PLACEHOLDERS[0], &transform(a, family))
                .substitute(PLACEHOLDERS[1], &transform(b, family))
        }
        Formula::Ternary(op, a, b, c) => {
            let template = ternary_pbnf(*op, family);
            template
                .substitute(PLACEHOLDERS[0], &transform(a, family))
                .substitute(PLACEHOLDERS[1], &transform(b, family))
                .substitute(PLACEHOLDERS[2], &transform(c, family))
        }
    }
}

/// One row of the atomic-entry table.
#[derive(Debug, Clone)]
pub struct AtomicRow {
    pub label: &'static str,
    pub formula: Formula,
    pub polynomial: Polynomial,
}

/// The atomic-entry table of a family: the transform of each one-operator
/// statement, in the classic row order (projections, negation, disjunction
/// and conjunction, the six conjugates, the denials, the biconditional pair,
/// and the two constants).
///
/// The constant rows are the semantically forced values: `iota1` is the
/// family's true constant and `iota0` its false constant in every family.
pub fn atomic_table(family: &Family) -> Vec<AtomicRow> {
    let p = || Formula::letter("p");
    let q = || Formula::letter("q");
    let rows: Vec<(&'static str, Formula)> = vec![
        ("p", Formula::binary(BinaryOp::Left, p(), q())),
        ("p'", Formula::binary(BinaryOp::NotLeft, p(), q())),
        ("q", Formula::binary(BinaryOp::Right, p(), q())),
        ("q'", Formula::binary(BinaryOp::NotRight, p(), q())),
        ("!p", Formula::not(p())),
        ("p | q", Formula::or(p(), q())),
        ("p & q", Formula::and(p(), q())),
        ("p -> q", Formula::imp(p(), q())),
        ("p nimp q", Formula::binary(BinaryOp::Nimp, p(), q())),
        ("!p -> !q", Formula::imp(Formula::not(p()), Formula::not(q()))),
        ("p <- q", Formula::revimp(p(), q())),
        ("p nrimp q", Formula::binary(BinaryOp::Nrimp, p(), q())),
        ("!p <- !q", Formula::revimp(Formula::not(p()), Formula::not(q()))),
        ("p nor q", Formula::binary(BinaryOp::Nor, p(), q())),
        ("p nand q", Formula::binary(BinaryOp::Nand, p(), q())),
        ("p <-> q", Formula::iff(p(), q())),
        ("p ^ q", Formula::binary(BinaryOp::Xor, p(), q())),
        ("iota1", Formula::binary(BinaryOp::Top, p(), q())),
        ("iota0", Formula::binary(BinaryOp::Bottom, p(), q())),
    ];
    rows.into_iter()
        .map(|(label, formula)| {
            let polynomial = transform(&formula, family);
            AtomicRow {
                label,
                formula,
                polynomial,
            }
        })
        .collect()
}

/// Result of pulling a polynomial back to the operator space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fiber {
    /// One- or two-letter context: the unique matching catalog operator.
    Operator(&'static OperatorDescriptor),
    /// Three or more letters: the truth vector, with a named match only for
    /// the three named ternary operators.
    Compound {
        vector: TruthVector,
        named: Option<TernaryOp>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiberError {
    /// The polynomial mentions a letter outside the context.
    ContextMissingLetter(String),
    EmptyContext,
}

impl fmt::Display for FiberError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiberError::ContextMissingLetter(l) => {
                write!(f, "context does not cover letter `{l}`")
            }
            FiberError::EmptyContext => write!(f, "fiber context must name at least one letter"),
        }
    }
}

impl std::error::Error for FiberError {}

/// The fiber (pull-back) g⁻¹: compute the truth vector of the polynomial
/// under the family's encodings and look up the operator that owns it. Always
/// succeeds for one- and two-letter contexts; three-letter contexts name only
/// the three known ternaries.
pub fn fiber(p: &Polynomial, family: &Family, context: &[String]) -> Result<Fiber, FiberError> {
    if context.is_empty() {
        return Err(FiberError::EmptyContext);
    }
    for l in p.letters() {
        if !context.contains(&l) {
            return Err(FiberError::ContextMissingLetter(l));
        }
    }
    let mut bits = Vec::with_capacity(1 << context.len());
    for truth in Assignment::descending(context) {
        let encoded = family.encode_assignment(&truth);
        let value = p.evaluate(&encoded).expect("context covers polynomial");
        bits.push(family.decode_output(value));
    }
    let vector = TruthVector::new(context.to_vec(), BitString::new(bits));
    match context.len() {
        1 => {
            let op = opspace::singular_by_bits(&vector.bits).expect("2-bit lookup is total");
            Ok(Fiber::Operator(singular_descriptor(op)))
        }
        2 => {
            let op = opspace::binary_by_bits(&vector.bits).expect("4-bit lookup is total");
            Ok(Fiber::Operator(opspace::binary_descriptor(op)))
        }
        3 => {
            let named = TernaryOp::ALL
                .into_iter()
                .find(|op| ternary_bits(*op) == vector.bits);
            Ok(Fiber::Compound { vector, named })
        }
        _ => Ok(Fiber::Compound {
            vector,
            named: None,
        }),
    }
}

/// The dual-space count: ordered selector pairs whose sum is neither constant,
/// times the two readings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualSpaces {
    pub selector_pairs: usize,
    pub spaces: usize,
    /// Spaces other than the base space on the 1st and 2nd selectors.
    pub beyond_base: usize,
}

pub fn dual_space_count() -> DualSpaces {
    let mut selector_pairs = 0;
    for s in Selector::ALL {
        for t in Selector::ALL {
            if matches!(selector_add(s, t), SelectorSum::Selector(_)) {
                selector_pairs += 1;
            }
        }
    }
    let spaces = selector_pairs * 2;
    DualSpaces {
        selector_pairs,
        spaces,
        beyond_base: spaces - 1,
    }
}
