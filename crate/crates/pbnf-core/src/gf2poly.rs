//! Multilinear polynomial arithmetic over GF(2).
//!
//! A [`Polynomial`] is a set of [`Monomial`]s; a monomial is a set of letters.
//! Set semantics make the representation canonical by construction: duplicate
//! monomials cancel (coefficients are mod 2) and a letter never repeats inside
//! a monomial (x·x = x). The empty monomial is the constant 1, the empty
//! polynomial is 0.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::{self, Deserializer, Visitor};
use serde::ser::{SerializeMap, SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

/// A product of distinct letters. The empty product is the constant 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(BTreeSet<String>);

impl Monomial {
    /// The constant monomial 1.
    pub fn one() -> Self {
        Monomial(BTreeSet::new())
    }

    pub fn letter(name: &str) -> Self {
        let mut set = BTreeSet::new();
        set.insert(name.to_owned());
        Monomial(set)
    }

    pub fn from_letters<I, S>(letters: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Monomial(letters.into_iter().map(Into::into).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_constant(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, letter: &str) -> bool {
        self.0.contains(letter)
    }

    pub fn letters(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }

    /// Product of two monomials: union of letter sets (idempotent letters).
    pub fn merge(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.union(&other.0).cloned().collect())
    }

    fn without(&self, letter: &str) -> Monomial {
        let mut set = self.0.clone();
        set.remove(letter);
        Monomial(set)
    }

    fn joined_bytes(&self) -> impl Iterator<Item = u8> + '_ {
        self.0.iter().flat_map(|l| l.bytes())
    }
}

/// Canonical display order: degree descending, then lexicographic on the
/// joined letter names. The final comparison on the raw sets only breaks
/// ties between multi-character letters whose concatenations collide.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .0
            .len()
            .cmp(&self.0.len())
            .then_with(|| self.joined_bytes().cmp(other.joined_bytes()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for letter in &self.0 {
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

/// A multilinear polynomial over GF(2), stored as a set of monomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Polynomial(BTreeSet<Monomial>);

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial(BTreeSet::new())
    }

    pub fn one() -> Self {
        Polynomial::from(Monomial::one())
    }

    pub fn constant(bit: bool) -> Self {
        if bit {
            Polynomial::one()
        } else {
            Polynomial::zero()
        }
    }

    pub fn letter(name: &str) -> Self {
        Polynomial::from(Monomial::letter(name))
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(monomials: I) -> Self {
        // Duplicates cancel mod 2.
        let mut set = BTreeSet::new();
        for m in monomials {
            if !set.remove(&m) {
                set.insert(m);
            }
        }
        Polynomial(set)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0.iter().next().unwrap().is_constant()
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    /// Monomials in canonical order (degree descending, then lexicographic).
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.0.iter()
    }

    pub fn monomial_count(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Distinct letters of the polynomial, sorted lexicographically.
    pub fn letters(&self) -> Vec<String> {
        let mut set = BTreeSet::new();
        for m in &self.0 {
            for l in m.letters() {
                set.insert(l.to_owned());
            }
        }
        set.into_iter().collect()
    }

    /// Sum mod 2: symmetric difference of the monomial sets.
    #[allow(clippy::should_implement_trait)] // `&P + &Q` sugar exists below
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        Polynomial(self.0.symmetric_difference(&other.0).cloned().collect())
    }

    /// Product: distribute, merge letter sets per monomial pair, cancel mod 2.
    #[allow(clippy::should_implement_trait)]
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut acc = BTreeSet::new();
        for a in &self.0 {
            for b in &other.0 {
                let m = a.merge(b);
                if !acc.remove(&m) {
                    acc.insert(m);
                }
            }
        }
        Polynomial(acc)
    }

    /// P + 1.
    pub fn complement(&self) -> Polynomial {
        self.add(&Polynomial::one())
    }

    /// Replace every occurrence of `letter` by `replacement`, expanded and
    /// reduced to multilinear form.
    pub fn substitute(&self, letter: &str, replacement: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        let mut untouched = BTreeSet::new();
        for m in &self.0 {
            if m.contains(letter) {
                let rest = Polynomial::from(m.without(letter));
                acc = acc.add(&rest.mul(replacement));
            } else if !untouched.remove(m) {
                untouched.insert(m.clone());
            }
        }
        acc.add(&Polynomial(untouched))
    }

    /// Evaluate at an assignment covering all letters of the polynomial.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<bool, EvalError> {
        let mut acc = false;
        for m in &self.0 {
            let mut term = true;
            for l in m.letters() {
                term &= assignment
                    .get(l)
                    .ok_or_else(|| EvalError::MissingLetter(l.to_owned()))?;
            }
            acc ^= term;
        }
        Ok(acc)
    }

    /// Canonical text: monomials sorted by degree descending then
    /// lexicographically, joined by `+`; zero renders `0`.
    pub fn canonical_text(&self) -> String {
        self.to_string()
    }

    /// Parse polynomial text: `+`-separated terms where a term is a product of
    /// juxtaposed factors. A factor is `0`, `1`, a letter, or a parenthesized
    /// polynomial. Juxtaposed letters are single characters with any trailing
    /// digits/underscores bound to them (`pq` is p·q, `x1y2` is x1·y2); a `.`
    /// separator introduces a full multi-character identifier (`.ab.cd` is
    /// ab·cd). Factored forms like `(p+1)(q+1)+1` expand and reduce. Note
    /// that canonical text joins a monomial's letters without separators, so
    /// it round-trips only for single-character letter names.
    pub fn parse(text: &str) -> Result<Polynomial, PolyParseError> {
        Polynomial::parse_with_order(text).map(|(poly, _)| poly)
    }

    /// Like [`Polynomial::parse`], also reporting the letters in first
    /// occurrence order within the text.
    pub fn parse_with_order(text: &str) -> Result<(Polynomial, Vec<String>), PolyParseError> {
        let mut parser = PolyParser {
            bytes: text.as_bytes(),
            pos: 0,
            order: Vec::new(),
        };
        parser.skip_ws();
        let poly = parser.parse_sum()?;
        parser.skip_ws();
        if parser.pos != parser.bytes.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        let order = std::mem::take(&mut parser.order);
        Ok((poly, order))
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        let mut set = BTreeSet::new();
        set.insert(m);
        Polynomial(set)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::add(self, rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        Polynomial::mul(self, rhs)
    }
}

/// JSON form: sorted list of monomials, each a sorted list of letter strings;
/// the constant monomial is the empty list.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for m in &self.0 {
            let letters: Vec<&str> = m.letters().collect();
            seq.serialize_element(&letters)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let monomials: Vec<Vec<String>> = Vec::deserialize(deserializer)?;
        Ok(Polynomial::from_monomials(
            monomials.into_iter().map(Monomial::from_letters),
        ))
    }
}

/// A total map from letters to bits.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Assignment(BTreeMap<String, bool>);

impl Assignment {
    pub fn new() -> Self {
        Assignment(BTreeMap::new())
    }

    pub fn from_pairs<I, S>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (S, bool)>,
        S: Into<String>,
    {
        Assignment(pairs.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn set(&mut self, letter: &str, value: bool) {
        self.0.insert(letter.to_owned(), value);
    }

    pub fn get(&self, letter: &str) -> Option<bool> {
        self.0.get(letter).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, bool)> {
        self.0.iter().map(|(k, v)| (k.as_str(), *v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// All assignments over `order` in descending lexicographic order: the
    /// first sets every letter to 1, the last sets every letter to 0. Index
    /// `j` in this enumeration is column `j` of a truth vector.
    pub fn descending(order: &[String]) -> impl Iterator<Item = Assignment> + '_ {
        let n = order.len();
        assert!(n < usize::BITS as usize, "letter order too long");
        (0..1usize << n).map(move |j| {
            Assignment(
                order
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (l.clone(), (j >> (n - 1 - i)) & 1 == 0))
                    .collect(),
            )
        })
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, value)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{letter}:{}", u8::from(*value))?;
        }
        Ok(())
    }
}

/// JSON form: object mapping each letter to 0 or 1.
impl Serialize for Assignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, &u8::from(*v))?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Assignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MapVisitor;
        impl<'de> Visitor<'de> for MapVisitor {
            type Value = Assignment;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a map from letters to 0/1")
            }
            fn visit_map<A: de::MapAccess<'de>>(self, mut map: A) -> Result<Self::Value, A::Error> {
                let mut out = BTreeMap::new();
                while let Some((k, v)) = map.next_entry::<String, u8>()? {
                    match v {
                        0 => out.insert(k, false),
                        1 => out.insert(k, true),
                        other => return Err(de::Error::custom(format!("bit out of range: {other}"))),
                    };
                }
                Ok(Assignment(out))
            }
        }
        deserializer.deserialize_map(MapVisitor)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    /// The assignment does not cover this letter.
    MissingLetter(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::MissingLetter(l) => write!(f, "assignment is missing letter `{l}`"),
        }
    }
}

impl std::error::Error for EvalError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyParseError {
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for PolyParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial syntax error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for PolyParseError {}

struct PolyParser<'a> {
    bytes: &'a [u8],
    pos: usize,
    order: Vec<String>,
}

impl<'a> PolyParser<'a> {
    fn error(&self, message: &str) -> PolyParseError {
        PolyParseError {
            offset: self.pos,
            message: message.to_owned(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_sum(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = self.parse_term()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                self.skip_ws();
                let term = self.parse_term()?;
                acc = acc.add(&term);
            } else {
                return Ok(acc);
            }
        }
    }

    fn parse_term(&mut self) -> Result<Polynomial, PolyParseError> {
        let mut acc = if self.peek() == Some(b'.') {
            self.pos += 1;
            self.skip_ws();
            self.parse_factor_after_dot()?
        } else {
            self.parse_factor()?
        };
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b'.') => {
                    self.pos += 1;
                    self.skip_ws();
                    let factor = self.parse_factor_after_dot()?;
                    acc = acc.mul(&factor);
                }
                Some(c) if c == b'(' || c == b'0' || c == b'1' || c.is_ascii_alphabetic() => {
                    let factor = self.parse_factor()?;
                    acc = acc.mul(&factor);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn parse_factor(&mut self) -> Result<Polynomial, PolyParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                self.skip_ws();
                let inner = self.parse_sum()?;
                self.skip_ws();
                if self.peek() != Some(b')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(b'0') => {
                self.pos += 1;
                Ok(Polynomial::zero())
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Polynomial::one())
            }
            Some(c) if c.is_ascii_alphabetic() => {
                // Juxtaposition rule: one letter character plus any digits or
                // underscores that follow it. Uppercase letters appear only as
                // template placeholders.
                let start = self.pos;
                self.pos += 1;
                while matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                self.note_letter(name);
                Ok(Polynomial::letter(name))
            }
            _ => Err(self.error("expected a letter, `0`, `1`, or `(`")),
        }
    }

    fn parse_factor_after_dot(&mut self) -> Result<Polynomial, PolyParseError> {
        // A dot separator introduces a full (possibly multi-character)
        // identifier.
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                self.pos += 1;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
                self.note_letter(name);
                Ok(Polynomial::letter(name))
            }
            _ => self.parse_factor(),
        }
    }

    fn note_letter(&mut self, name: &str) {
        if !self.order.iter().any(|l| l == name) {
            self.order.push(name.to_owned());
        }
    }
}
