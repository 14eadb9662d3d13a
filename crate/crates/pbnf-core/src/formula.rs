//! Formula abstract syntax, the text grammar, a recursive-descent parser, and
//! a minimal-parenthesis printer.
//!
//! Grammar (tokens separated by whitespace or adjacency):
//!
//! ```text
//! formula := iff
//! iff     := imp ( "<->" imp )*                                    left-assoc
//! imp     := orx ( ("->" | "<-" | "nimp" | "nrimp") orx )*
//!            "->"/"nimp" right-assoc; "<-"/"nrimp" left-assoc;
//!            mixing directions at one level is a parse error
//! orx     := andx ( ("|" | "^" | "nor") andx )*                    left-assoc
//! andx    := unary ( ("&" | "nand") unary )*                       left-assoc
//! unary   := "!" unary | atom
//! atom    := letter | "T" | "F" | "(" formula ")" | func
//! func    := ("cd" | "maj" | "xor3") "(" formula "," formula "," formula ")"
//! letter  := [a-z][a-z0-9_]*   excluding keywords
//! ```
//!
//! The projection and constant binary operators (`Left`, `Right`, `NotLeft`,
//! `NotRight`, `Top`, `Bottom`) and the singular operators other than negation
//! have no infix syntax; the printer renders them in a function-like spelling
//! (`left(p,q)`, `id(p)`, ...) that the parser deliberately rejects, so they
//! are reachable only through the API.

use std::fmt;

/// One-place operators. Only negation has concrete syntax (`!`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularOp {
    /// Passes its operand through unchanged.
    Identity,
    Negation,
    /// Constant-true regardless of the operand.
    ToTrue,
    /// Constant-false regardless of the operand.
    ToFalse,
}

impl SingularOp {
    pub const ALL: [SingularOp; 4] = [
        SingularOp::Identity,
        SingularOp::Negation,
        SingularOp::ToTrue,
        SingularOp::ToFalse,
    ];
}

/// The sixteen two-place operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryOp {
    And,
    Or,
    /// `->`
    Imp,
    /// `<-`
    RevImp,
    /// Negated conditional (`p & !q`), spelled `nimp`.
    Nimp,
    /// Negated converse (`!p & q`), spelled `nrimp`.
    Nrimp,
    /// `<->`
    Iff,
    /// Exclusive disjunction, spelled `^`.
    Xor,
    Nand,
    Nor,
    /// Projection on the left operand.
    Left,
    /// Projection on the right operand.
    Right,
    /// Negated left projection.
    NotLeft,
    /// Negated right projection.
    NotRight,
    /// Constant true.
    Top,
    /// Constant false.
    Bottom,
}

impl BinaryOp {
    pub const ALL: [BinaryOp; 16] = [
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
        BinaryOp::Left,
        BinaryOp::Right,
        BinaryOp::NotLeft,
        BinaryOp::NotRight,
        BinaryOp::Top,
        BinaryOp::Bottom,
    ];

    /// The infix token, for the ten operators the grammar spells.
    pub fn token(self) -> Option<&'static str> {
        Some(match self {
            BinaryOp::And => "&",
            BinaryOp::Or => "|",
            BinaryOp::Imp => "->",
            BinaryOp::RevImp => "<-",
            BinaryOp::Nimp => "nimp",
            BinaryOp::Nrimp => "nrimp",
            BinaryOp::Iff => "<->",
            BinaryOp::Xor => "^",
            BinaryOp::Nand => "nand",
            BinaryOp::Nor => "nor",
            _ => return None,
        })
    }
}

/// The three named three-place operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TernaryOp {
    /// Conditioned disjunction `cd(a, b, c)`: if `b` then `a` else `c`.
    Cd,
    /// True when at least two operands are true; spelled `maj`.
    Majority,
    /// True when an odd number of operands are true; spelled `xor3`.
    Parity,
}

impl TernaryOp {
    pub const ALL: [TernaryOp; 3] = [TernaryOp::Cd, TernaryOp::Majority, TernaryOp::Parity];

    pub fn token(self) -> &'static str {
        match self {
            TernaryOp::Cd => "cd",
            TernaryOp::Majority => "maj",
            TernaryOp::Parity => "xor3",
        }
    }
}

/// A propositional formula over constants, letters, and the singular, binary,
/// and ternary operator kinds.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Const(bool),
    Letter(String),
    Singular(SingularOp, Box<Formula>),
    Binary(BinaryOp, Box<Formula>, Box<Formula>),
    Ternary(TernaryOp, Box<Formula>, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn letter(name: &str) -> Formula {
        Formula::Letter(name.to_owned())
    }

    pub fn singular(op: SingularOp, a: Formula) -> Formula {
        Formula::Singular(op, Box::new(a))
    }

    pub fn binary(op: BinaryOp, a: Formula, b: Formula) -> Formula {
        Formula::Binary(op, Box::new(a), Box::new(b))
    }

    pub fn ternary(op: TernaryOp, a: Formula, b: Formula, c: Formula) -> Formula {
        Formula::Ternary(op, Box::new(a), Box::new(b), Box::new(c))
    }

    #[allow(clippy::should_implement_trait)] // constructor, not an operator on Formula
    pub fn not(a: Formula) -> Formula {
        Formula::singular(SingularOp::Negation, a)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::binary(BinaryOp::And, a, b)
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::binary(BinaryOp::Or, a, b)
    }

    pub fn imp(a: Formula, b: Formula) -> Formula {
        Formula::binary(BinaryOp::Imp, a, b)
    }

    pub fn revimp(a: Formula, b: Formula) -> Formula {
        Formula::binary(BinaryOp::RevImp, a, b)
    }

    pub fn iff(a: Formula, b: Formula) -> Formula {
        Formula::binary(BinaryOp::Iff, a, b)
    }

    /// Parse the text grammar. The resulting tree is unique up to redundant
    /// parentheses.
    pub fn parse(text: &str) -> Result<Formula, ParseError> {
        let tokens = lex(text)?;
        let mut parser = Parser { tokens, pos: 0 };
        let formula = parser.parse_iff()?;
        match parser.peek() {
            None => Ok(formula),
            Some(t) => Err(ParseError {
                offset: t.offset,
                kind: ParseErrorKind::UnexpectedToken {
                    found: t.text(),
                    expected: vec!["end of input"],
                },
            }),
        }
    }

    /// Distinct letters in first-occurrence order.
    pub fn letters(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut Vec<String>) {
        match self {
            Formula::Const(_) => {}
            Formula::Letter(name) => {
                if !out.iter().any(|l| l == name) {
                    out.push(name.clone());
                }
            }
            Formula::Singular(_, a) => a.collect_letters(out),
            Formula::Binary(_, a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
            Formula::Ternary(_, a, b, c) => {
                a.collect_letters(out);
                b.collect_letters(out);
                c.collect_letters(out);
            }
        }
    }

    /// Number of connective nodes (singular, binary, and ternary).
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Letter(_) => 0,
            Formula::Singular(_, a) => 1 + a.connective_count(),
            Formula::Binary(_, a, b) => 1 + a.connective_count() + b.connective_count(),
            Formula::Ternary(_, a, b, c) => {
                1 + a.connective_count() + b.connective_count() + c.connective_count()
            }
        }
    }

    /// Number of distinct connective kinds appearing in the formula.
    pub fn distinct_connective_count(&self) -> usize {
        fn walk(f: &Formula, seen: &mut std::collections::BTreeSet<&'static str>) {
            match f {
                Formula::Const(_) | Formula::Letter(_) => {}
                Formula::Singular(op, a) => {
                    seen.insert(match op {
                        SingularOp::Identity => "id",
                        SingularOp::Negation => "!",
                        SingularOp::ToTrue => "to_true",
                        SingularOp::ToFalse => "to_false",
                    });
                    walk(a, seen);
                }
                Formula::Binary(op, a, b) => {
                    seen.insert(op.token().unwrap_or_else(|| func_name(*op)));
                    walk(a, seen);
                    walk(b, seen);
                }
                Formula::Ternary(op, a, b, c) => {
                    seen.insert(op.token());
                    walk(a, seen);
                    walk(b, seen);
                    walk(c, seen);
                }
            }
        }
        let mut seen = std::collections::BTreeSet::new();
        walk(self, &mut seen);
        seen.len()
    }

    /// The statement-form class `(k, l)`: connective count and distinct
    /// letter count.
    pub fn statement_class(&self) -> (usize, usize) {
        (self.connective_count(), self.letters().len())
    }
}

fn func_name(op: BinaryOp) -> &'static str {
    match op {
        BinaryOp::Left => "left",
        BinaryOp::Right => "right",
        BinaryOp::NotLeft => "not_left",
        BinaryOp::NotRight => "not_right",
        BinaryOp::Top => "const_true",
        BinaryOp::Bottom => "const_false",
        _ => unreachable!("infix operator"),
    }
}

// Printer precedence levels; larger binds tighter.
const LEVEL_IFF: u8 = 1;
const LEVEL_IMP: u8 = 2;
const LEVEL_OR: u8 = 3;
const LEVEL_AND: u8 = 4;

#[derive(PartialEq, Clone, Copy)]
enum Dir {
    LeftAssoc,
    RightAssoc,
}

fn infix_level(op: BinaryOp) -> Option<(u8, Dir)> {
    match op {
        BinaryOp::Iff => Some((LEVEL_IFF, Dir::LeftAssoc)),
        BinaryOp::Imp | BinaryOp::Nimp => Some((LEVEL_IMP, Dir::RightAssoc)),
        BinaryOp::RevImp | BinaryOp::Nrimp => Some((LEVEL_IMP, Dir::LeftAssoc)),
        BinaryOp::Or | BinaryOp::Xor | BinaryOp::Nor => Some((LEVEL_OR, Dir::LeftAssoc)),
        BinaryOp::And | BinaryOp::Nand => Some((LEVEL_AND, Dir::LeftAssoc)),
        _ => None,
    }
}

#[derive(PartialEq, Clone, Copy)]
enum Side {
    LeftChild,
    RightChild,
}

fn child_needs_parens(child: &Formula, parent: (u8, Dir), side: Side) -> bool {
    let Formula::Binary(c_op, ..) = child else {
        return false;
    };
    let Some((c_level, c_dir)) = infix_level(*c_op) else {
        return false; // function-spelled operators are self-delimiting
    };
    let (p_level, p_dir) = parent;
    if c_level > p_level {
        return false;
    }
    if c_level < p_level {
        return true;
    }
    // Same level. Associativity decides, and at the implication level a
    // direction change always needs parentheses (the grammar rejects mixed
    // directions in one chain).
    if c_dir != p_dir {
        return true;
    }
    match c_dir {
        Dir::LeftAssoc => side != Side::LeftChild,
        Dir::RightAssoc => side != Side::RightChild,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Const(true) => write!(f, "T"),
            Formula::Const(false) => write!(f, "F"),
            Formula::Letter(name) => write!(f, "{name}"),
            Formula::Singular(SingularOp::Negation, a) => {
                if matches!(
                    **a,
                    Formula::Binary(op, ..) if infix_level(op).is_some()
                ) {
                    write!(f, "!({a})")
                } else {
                    write!(f, "!{a}")
                }
            }
            Formula::Singular(op, a) => {
                let name = match op {
                    SingularOp::Identity => "id",
                    SingularOp::ToTrue => "to_true",
                    SingularOp::ToFalse => "to_false",
                    SingularOp::Negation => unreachable!(),
                };
                write!(f, "{name}({a})")
            }
            Formula::Binary(op, a, b) => match infix_level(*op) {
                Some(parent) => {
                    if child_needs_parens(a, parent, Side::LeftChild) {
                        write!(f, "({a})")?;
                    } else {
                        write!(f, "{a}")?;
                    }
                    write!(f, " {} ", op.token().unwrap())?;
                    if child_needs_parens(b, parent, Side::RightChild) {
                        write!(f, "({b})")
                    } else {
                        write!(f, "{b}")
                    }
                }
                None => write!(f, "{}({a},{b})", func_name(*op)),
            },
            Formula::Ternary(op, a, b, c) => write!(f, "{}({a},{b},{c})", op.token()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// Byte offset into the input where the error was detected.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    UnexpectedChar(char),
    UnexpectedToken {
        found: String,
        expected: Vec<&'static str>,
    },
    UnexpectedEnd {
        expected: Vec<&'static str>,
    },
    UnknownFunction {
        name: String,
    },
    WrongArity {
        name: String,
        expected: usize,
        found: usize,
    },
    /// `->`/`nimp` and `<-`/`nrimp` mixed in one unparenthesized chain.
    MixedImplicationDirections,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::UnexpectedChar(c) => write!(f, "unexpected character `{c}`"),
            ParseErrorKind::UnexpectedToken { found, expected } => {
                write!(f, "found `{found}`, expected one of: {}", expected.join(", "))
            }
            ParseErrorKind::UnexpectedEnd { expected } => {
                write!(f, "unexpected end of input, expected one of: {}", expected.join(", "))
            }
            ParseErrorKind::UnknownFunction { name } => write!(f, "unknown function name `{name}`"),
            ParseErrorKind::WrongArity {
                name,
                expected,
                found,
            } => write!(f, "`{name}` takes {expected} arguments, found {found}"),
            ParseErrorKind::MixedImplicationDirections => write!(
                f,
                "`->`/`nimp` and `<-`/`nrimp` cannot be mixed at one level; parenthesize"
            ),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum TokenKind {
    LParen,
    RParen,
    Comma,
    Bang,
    Amp,
    Pipe,
    Caret,
    Arrow,
    RevArrow,
    IffArrow,
    Nand,
    Nor,
    Nimp,
    Nrimp,
    ConstT,
    ConstF,
    Func(TernaryOp),
    Letter,
}

#[derive(Debug, Clone)]
struct Token {
    kind: TokenKind,
    offset: usize,
    lexeme: String,
}

impl Token {
    fn text(&self) -> String {
        self.lexeme.clone()
    }
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos];
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let kind = match c {
            b'(' => {
                pos += 1;
                TokenKind::LParen
            }
            b')' => {
                pos += 1;
                TokenKind::RParen
            }
            b',' => {
                pos += 1;
                TokenKind::Comma
            }
            b'!' => {
                pos += 1;
                TokenKind::Bang
            }
            b'&' => {
                pos += 1;
                TokenKind::Amp
            }
            b'|' => {
                pos += 1;
                TokenKind::Pipe
            }
            b'^' => {
                pos += 1;
                TokenKind::Caret
            }
            b'-' if bytes.get(pos + 1) == Some(&b'>') => {
                pos += 2;
                TokenKind::Arrow
            }
            b'<' if bytes.get(pos + 1) == Some(&b'-') => {
                if bytes.get(pos + 2) == Some(&b'>') {
                    pos += 3;
                    TokenKind::IffArrow
                } else {
                    pos += 2;
                    TokenKind::RevArrow
                }
            }
            b'T' => {
                pos += 1;
                TokenKind::ConstT
            }
            b'F' => {
                pos += 1;
                TokenKind::ConstF
            }
            c if c.is_ascii_lowercase() => {
                pos += 1;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_lowercase()
                        || bytes[pos].is_ascii_digit()
                        || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                match &text[start..pos] {
                    "nand" => TokenKind::Nand,
                    "nor" => TokenKind::Nor,
                    "nimp" => TokenKind::Nimp,
                    "nrimp" => TokenKind::Nrimp,
                    "cd" => TokenKind::Func(TernaryOp::Cd),
                    "maj" => TokenKind::Func(TernaryOp::Majority),
                    "xor3" => TokenKind::Func(TernaryOp::Parity),
                    _ => TokenKind::Letter,
                }
            }
            other => {
                return Err(ParseError {
                    offset: pos,
                    kind: ParseErrorKind::UnexpectedChar(other as char),
                })
            }
        };
        tokens.push(Token {
            kind,
            offset: start,
            lexeme: text[start..pos].to_owned(),
        });
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn end_offset(&self) -> usize {
        self.tokens
            .last()
            .map(|t| t.offset + t.lexeme.len())
            .unwrap_or(0)
    }

    fn unexpected(&self, expected: Vec<&'static str>) -> ParseError {
        match self.peek() {
            Some(t) => ParseError {
                offset: t.offset,
                kind: ParseErrorKind::UnexpectedToken {
                    found: t.text(),
                    expected,
                },
            },
            None => ParseError {
                offset: self.end_offset(),
                kind: ParseErrorKind::UnexpectedEnd { expected },
            },
        }
    }

    fn expect(&mut self, kind: TokenKind, name: &'static str) -> Result<Token, ParseError> {
        match self.peek() {
            Some(t) if t.kind == kind => Ok(self.bump().unwrap()),
            _ => Err(self.unexpected(vec![name])),
        }
    }

    fn parse_iff(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_imp()?;
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::IffArrow) {
            self.bump();
            let rhs = self.parse_imp()?;
            acc = Formula::iff(acc, rhs);
        }
        Ok(acc)
    }

    fn parse_imp(&mut self) -> Result<Formula, ParseError> {
        let first = self.parse_or()?;
        let mut ops: Vec<(BinaryOp, usize)> = Vec::new();
        let mut operands = vec![first];
        loop {
            let (op, offset) = match self.peek() {
                Some(t) if t.kind == TokenKind::Arrow => (BinaryOp::Imp, t.offset),
                Some(t) if t.kind == TokenKind::Nimp => (BinaryOp::Nimp, t.offset),
                Some(t) if t.kind == TokenKind::RevArrow => (BinaryOp::RevImp, t.offset),
                Some(t) if t.kind == TokenKind::Nrimp => (BinaryOp::Nrimp, t.offset),
                _ => break,
            };
            self.bump();
            operands.push(self.parse_or()?);
            ops.push((op, offset));
        }
        if ops.is_empty() {
            return Ok(operands.pop().unwrap());
        }
        let rightward = |op: BinaryOp| matches!(op, BinaryOp::Imp | BinaryOp::Nimp);
        let first_dir = rightward(ops[0].0);
        if let Some(&(_, offset)) = ops.iter().find(|(op, _)| rightward(*op) != first_dir) {
            return Err(ParseError {
                offset,
                kind: ParseErrorKind::MixedImplicationDirections,
            });
        }
        if first_dir {
            // Right-associative fold.
            let mut acc = operands.pop().unwrap();
            while let Some((op, _)) = ops.pop() {
                let lhs = operands.pop().unwrap();
                acc = Formula::binary(op, lhs, acc);
            }
            Ok(acc)
        } else {
            let mut operands = operands.into_iter();
            let mut acc = operands.next().unwrap();
            for ((op, _), rhs) in ops.into_iter().zip(operands) {
                acc = Formula::binary(op, acc, rhs);
            }
            Ok(acc)
        }
    }

    fn parse_or(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_and()?;
        loop {
            let op = match self.peek() {
                Some(t) if t.kind == TokenKind::Pipe => BinaryOp::Or,
                Some(t) if t.kind == TokenKind::Caret => BinaryOp::Xor,
                Some(t) if t.kind == TokenKind::Nor => BinaryOp::Nor,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.parse_and()?;
            acc = Formula::binary(op, acc, rhs);
        }
    }

    fn parse_and(&mut self) -> Result<Formula, ParseError> {
        let mut acc = self.parse_unary()?;
        loop {
            let op = match self.peek() {
                Some(t) if t.kind == TokenKind::Amp => BinaryOp::And,
                Some(t) if t.kind == TokenKind::Nand => BinaryOp::Nand,
                _ => return Ok(acc),
            };
            self.bump();
            let rhs = self.parse_unary()?;
            acc = Formula::binary(op, acc, rhs);
        }
    }

    fn parse_unary(&mut self) -> Result<Formula, ParseError> {
        if matches!(self.peek(), Some(t) if t.kind == TokenKind::Bang) {
            self.bump();
            let inner = self.parse_unary()?;
            return Ok(Formula::not(inner));
        }
        self.parse_atom()
    }

    fn parse_atom(&mut self) -> Result<Formula, ParseError> {
        match self.peek().map(|t| t.kind) {
            Some(TokenKind::ConstT) => {
                self.bump();
                Ok(Formula::Const(true))
            }
            Some(TokenKind::ConstF) => {
                self.bump();
                Ok(Formula::Const(false))
            }
            Some(TokenKind::LParen) => {
                self.bump();
                let inner = self.parse_iff()?;
                self.expect(TokenKind::RParen, ")")?;
                Ok(inner)
            }
            Some(TokenKind::Func(op)) => {
                let name = self.bump().unwrap();
                self.parse_func(op, name)
            }
            Some(TokenKind::Letter) => {
                let tok = self.bump().unwrap();
                // A letter directly followed by `(` reads as an unknown
                // function application, which deserves a sharper error.
                if matches!(self.peek(), Some(t) if t.kind == TokenKind::LParen) {
                    return Err(ParseError {
                        offset: tok.offset,
                        kind: ParseErrorKind::UnknownFunction { name: tok.text() },
                    });
                }
                Ok(Formula::Letter(tok.text()))
            }
            _ => Err(self.unexpected(vec!["letter", "T", "F", "(", "!", "cd", "maj", "xor3"])),
        }
    }

    fn parse_func(&mut self, op: TernaryOp, name: Token) -> Result<Formula, ParseError> {
        self.expect(TokenKind::LParen, "(")?;
        let mut args = vec![self.parse_iff()?];
        while matches!(self.peek(), Some(t) if t.kind == TokenKind::Comma) {
            self.bump();
            args.push(self.parse_iff()?);
        }
        self.expect(TokenKind::RParen, ")")?;
        if args.len() != 3 {
            return Err(ParseError {
                offset: name.offset,
                kind: ParseErrorKind::WrongArity {
                    name: name.text(),
                    expected: 3,
                    found: args.len(),
                },
            });
        }
        let c = args.pop().unwrap();
        let b = args.pop().unwrap();
        let a = args.pop().unwrap();
        Ok(Formula::ternary(op, a, b, c))
    }
}
