//! Decision procedures: tautology, contradiction, equivalence, entailment,
//! conjugate-sentence reports, and the biconditional decompositions.
//!
//! Everything here routes through the polynomial transform; the brute-force
//! oracle is never consulted outside of tests.

use std::fmt;

use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::families::{transform, Family};
use crate::formula::{BinaryOp, Formula};
use crate::gf2poly::{Assignment, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictKind {
    Tautology,
    Contradiction,
    Contingent,
}

impl fmt::Display for VerdictKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerdictKind::Tautology => "tautology",
            VerdictKind::Contradiction => "contradiction",
            VerdictKind::Contingent => "contingent",
        })
    }
}

/// Outcome of deciding a statement in a family.
///
/// The witness is a truth assignment on which the statement is false, checked
/// by evaluation before emission. A contingent verdict carries the first
/// falsifying assignment over the polynomial's letters (descending
/// lexicographic search order); a contradiction verdict carries the first
/// assignment over the formula's letters as a sample, every assignment being
/// falsifying. Tautologies have no witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub family: Family,
    pub polynomial: Polynomial,
    pub witness: Option<Assignment>,
}

/// JSON form: `{"verdict", "family", "polynomial", "witness"?}`.
impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 3 + usize::from(self.witness.is_some());
        let mut s = serializer.serialize_struct("Verdict", fields)?;
        s.serialize_field("verdict", &self.kind)?;
        s.serialize_field("family", &self.family)?;
        s.serialize_field("polynomial", &self.polynomial)?;
        if let Some(witness) = &self.witness {
            s.serialize_field("witness", witness)?;
        }
        s.end()
    }
}

/// Check that a claimed witness really falsifies the polynomial: its encoded
/// evaluation must come out as the family's false constant.
fn check_falsifying(polynomial: &Polynomial, family: &Family, witness: &Assignment) -> bool {
    let encoded = family.encode_assignment(witness);
    match polynomial.evaluate(&encoded) {
        Ok(bit) => !family.decode_output(bit),
        Err(_) => false,
    }
}

/// Decide a statement: transform it and compare against the family's
/// constants; a contingent result comes with a falsifying witness found by
/// descending-lexicographic enumeration over the polynomial's letters.
pub fn decide(f: &Formula, family: &Family) -> Verdict {
    let polynomial = transform(f, family);
    if polynomial == family.true_constant() {
        return Verdict {
            kind: VerdictKind::Tautology,
            family: family.clone(),
            polynomial,
            witness: None,
        };
    }
    if polynomial == family.false_constant() {
        let letters = f.letters();
        let witness = Assignment::descending(&letters)
            .next()
            .filter(|w| !w.is_empty());
        if let Some(w) = &witness {
            debug_assert!(check_falsifying(&polynomial, family, w));
        }
        return Verdict {
            kind: VerdictKind::Contradiction,
            family: family.clone(),
            polynomial,
            witness,
        };
    }
    let letters = polynomial.letters();
    let witness = Assignment::descending(&letters)
        .find(|truth| check_falsifying(&polynomial, family, truth))
        .expect("a non-constant polynomial takes both values");
    Verdict {
        kind: VerdictKind::Contingent,
        family: family.clone(),
        polynomial,
        witness: Some(witness),
    }
}

/// Equivalence report: both canonical polynomials in the normal family and
/// their difference (zero exactly when equivalent).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Equivalence {
    pub equivalent: bool,
    pub left: Polynomial,
    pub right: Polynomial,
    pub difference: Polynomial,
}

/// Two statements are equivalent iff their normal-family polynomials are the
/// same monomial set over the union of their letters.
pub fn equivalent(f: &Formula, g: &Formula) -> Equivalence {
    let family = Family::normal();
    let left = transform(f, &family);
    let right = transform(g, &family);
    let difference = left.add(&right);
    Equivalence {
        equivalent: difference.is_zero(),
        left,
        right,
        difference,
    }
}

/// Entailment report. `certificate` is the antecedent's reduced normal-family
/// polynomial, the form that pulls back to the consequent in the idempotence
/// cases; `implication` is the polynomial of `f -> g` (1 exactly when the
/// entailment holds); `countermodel` is a truth assignment making `f` true
/// and `g` false when it does not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entailment {
    pub holds: bool,
    pub certificate: Polynomial,
    pub consequent: Polynomial,
    pub implication: Polynomial,
    pub countermodel: Option<Assignment>,
}

impl Serialize for Entailment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 4 + usize::from(self.countermodel.is_some());
        let mut s = serializer.serialize_struct("Entailment", fields)?;
        s.serialize_field("entails", &self.holds)?;
        s.serialize_field("certificate", &self.certificate)?;
        s.serialize_field("consequent", &self.consequent)?;
        s.serialize_field("implication", &self.implication)?;
        if let Some(countermodel) = &self.countermodel {
            s.serialize_field("countermodel", countermodel)?;
        }
        s.end()
    }
}

/// f entails g iff `f -> g` decides to a tautology in the normal family.
pub fn entails(f: &Formula, g: &Formula) -> Entailment {
    let family = Family::normal();
    let implication = Formula::imp(f.clone(), g.clone());
    let verdict = decide(&implication, &family);
    Entailment {
        holds: verdict.kind == VerdictKind::Tautology,
        certificate: transform(f, &family),
        consequent: transform(g, &family),
        implication: verdict.polynomial,
        countermodel: verdict.witness,
    }
}

/// One of the four conjugate sentences of an implication, with its polynomial
/// in g(p,q,1) and g(p',q',0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateRow {
    pub name: &'static str,
    pub formula: Formula,
    pub normal: Polynomial,
    pub pullback_complement: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateReport {
    /// Conditional, inverse, converse, contrapositive, in that order.
    pub rows: [ConjugateRow; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CalculusError {
    /// The principal operator is not `->` or `<-`.
    NotConditional,
}

impl fmt::Display for CalculusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CalculusError::NotConditional => {
                write!(f, "principal operator must be `->` or `<-`")
            }
        }
    }
}

impl std::error::Error for CalculusError {}

/// The conjugate sentences generated by an implication's two operands:
/// conditional a -> b, inverse !a -> !b, converse a <- b, contrapositive
/// !a <- !b. The pairings conditional = contrapositive and inverse = converse
/// hold as polynomials in both reported families.
pub fn conjugates(f: &Formula) -> Result<ConjugateReport, CalculusError> {
    let (a, b) = match f {
        Formula::Binary(BinaryOp::Imp, a, b) | Formula::Binary(BinaryOp::RevImp, a, b) => {
            ((**a).clone(), (**b).clone())
        }
        _ => return Err(CalculusError::NotConditional),
    };
    let sentences = [
        ("conditional", Formula::imp(a.clone(), b.clone())),
        (
            "inverse",
            Formula::imp(Formula::not(a.clone()), Formula::not(b.clone())),
        ),
        ("converse", Formula::revimp(a.clone(), b.clone())),
        (
            "contrapositive",
            Formula::revimp(Formula::not(a), Formula::not(b)),
        ),
    ];
    let normal = Family::normal();
    let pullback_complement = Family::pullback_complement();
    let rows = sentences.map(|(name, formula)| ConjugateRow {
        normal: transform(&formula, &normal),
        pullback_complement: transform(&formula, &pullback_complement),
        name,
        formula,
    });
    // Tarski pairings: 1 = 4 and 2 = 3.
    assert_eq!(rows[0].normal, rows[3].normal);
    assert_eq!(rows[0].pullback_complement, rows[3].pullback_complement);
    assert_eq!(rows[1].normal, rows[2].normal);
    assert_eq!(rows[1].pullback_complement, rows[2].pullback_complement);
    Ok(ConjugateReport { rows })
}

/// One biconditional decomposition together with its tautology verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub name: &'static str,
    pub statement: Formula,
    pub verdict: Verdict,
}

/// The four decompositions of `a <-> b` into conjunctions of conjugate
/// sentences, each verified to be a tautology via `decide`.
pub fn biconditional_decompositions(a: &str, b: &str) -> [Decomposition; 4] {
    let p = || Formula::letter(a);
    let q = || Formula::letter(b);
    let conditional = || Formula::imp(p(), q());
    let inverse = || Formula::imp(Formula::not(p()), Formula::not(q()));
    let converse = || Formula::revimp(p(), q());
    let contrapositive = || Formula::revimp(Formula::not(p()), Formula::not(q()));

    let family = Family::normal();
    [
        ("conditional-converse", Formula::and(conditional(), converse())),
        ("conditional-inverse", Formula::and(conditional(), inverse())),
        ("contrapositive-converse", Formula::and(contrapositive(), converse())),
        ("contrapositive-inverse", Formula::and(contrapositive(), inverse())),
    ]
    .map(|(name, right)| {
        let statement = Formula::iff(Formula::iff(p(), q()), right);
        let verdict = decide(&statement, &family);
        assert_eq!(verdict.kind, VerdictKind::Tautology, "{name}");
        Decomposition {
            name,
            statement,
            verdict,
        }
    })
}
