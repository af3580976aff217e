//! Expression language over the four frozen algebras.
//!
//! Grammar:
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := factor ('*'? factor)*          (juxtaposition multiplies)
//! factor := atom ('^' nonneg-integer)?
//! atom   := generator | scalar | '(' expr ')'
//! ```
//!
//! Multiplication is left-associative and the noncommutative order of the
//! written word is preserved. Scalars are integers, rationals `n/m`, and
//! the root of unity `q`; exponents are nonnegative integers, so `q⁻¹` is
//! written `q^2` (and `1/q` is rejected). The generators per context are
//!
//! * `M`:  `x`, `y`
//! * `F`:  `a`, `b`, `c`, `d`
//! * `H`:  `X+`, `X-`, `K`, `K-`  (`K-` denotes K⁻¹ = K²)
//! * `WZ`: `x`, `y`, `dx`, `dy`
//!
//! `X+`, `X-` and `K-` are single lexemes recognised by longest match with
//! no intervening space: `K-1` is the product K⁻¹·1, while `K - 1` is a
//! difference. Beyond the strict binary grammar, a single leading `-` is
//! accepted at the start of an expression (also inside parentheses) so
//! that every printed normal form re-parses to the element it denotes.

use std::fmt;

use crate::env_h;
use crate::fun_f;
use crate::hopf::{elem_add, elem_is_zero, elem_neg, elem_sub, elem_zero, FiniteAlgebra};
use crate::qplane;
use crate::scalar::{Q, Scalar};
use crate::wz_forms;

// ---------------------------------------------------------------------------
// Algebra contexts
// ---------------------------------------------------------------------------

/// The four algebra contexts expressions can be evaluated in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algebra {
    /// The 9-dimensional reduced quantum plane (3×3 matrices).
    M,
    /// The 27-dimensional function Hopf algebra.
    F,
    /// The 27-dimensional enveloping Hopf algebra.
    H,
    /// The 36-dimensional graded differential algebra Ω.
    WZ,
}

impl Algebra {
    pub const ALL: [Algebra; 4] = [Algebra::M, Algebra::F, Algebra::H, Algebra::WZ];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::M => "M",
            Algebra::F => "F",
            Algebra::H => "H",
            Algebra::WZ => "WZ",
        }
    }

    pub fn by_name(name: &str) -> Option<Algebra> {
        Algebra::ALL.into_iter().find(|a| a.name() == name)
    }

    pub fn dim(self) -> usize {
        self.finite().dim
    }

    /// The underlying associative algebra with its frozen basis.
    pub fn finite(self) -> &'static FiniteAlgebra {
        match self {
            Algebra::M => &qplane::ALGEBRA,
            Algebra::F => &fun_f::HOPF.alg,
            Algebra::H => &env_h::HOPF.alg,
            Algebra::WZ => &wz_forms::WZ_ALGEBRA,
        }
    }

    /// Generator names and elements, in longest-match lexing order.
    pub fn generators(self) -> Vec<(&'static str, Vec<Scalar>)> {
        match self {
            Algebra::M => vec![("x", qplane::x()), ("y", qplane::y())],
            Algebra::F => vec![
                ("a", fun_f::a()),
                ("b", fun_f::b()),
                ("c", fun_f::c()),
                ("d", fun_f::d_element()),
            ],
            Algebra::H => vec![
                ("X+", env_h::xp()),
                ("X-", env_h::xm()),
                ("K-", env_h::k_inv()),
                ("K", env_h::k()),
            ],
            Algebra::WZ => {
                let deg0 = |m: usize| {
                    let mut v = elem_zero(wz_forms::DIM);
                    v[wz_forms::flat0(m)] = Scalar::one();
                    v
                };
                vec![
                    ("dx", wz_forms::WZForm::dx().coeffs),
                    ("dy", wz_forms::WZForm::dy().coeffs),
                    ("x", deg0(qplane::idx(1, 0))),
                    ("y", deg0(qplane::idx(0, 1))),
                ]
            }
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An element of one of the four algebras: a dense coefficient vector on
/// the frozen basis, tagged with its context.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgElem {
    pub algebra: Algebra,
    pub coeffs: Vec<Scalar>,
}

impl AlgElem {
    pub fn new(algebra: Algebra, coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), algebra.dim(), "coefficient vector length");
        AlgElem { algebra, coeffs }
    }

    pub fn zero(algebra: Algebra) -> Self {
        AlgElem::new(algebra, elem_zero(algebra.dim()))
    }

    pub fn unit(algebra: Algebra) -> Self {
        AlgElem::new(algebra, algebra.finite().unit())
    }

    /// The scalar `c` as the element `c·1`.
    pub fn scalar(algebra: Algebra, c: &Scalar) -> Self {
        AlgElem::new(algebra, algebra.finite().scalar_elem(c))
    }

    pub fn is_zero(&self) -> bool {
        elem_is_zero(&self.coeffs)
    }

    fn same_context(&self, other: &AlgElem) -> Algebra {
        assert_eq!(self.algebra, other.algebra, "mixed algebra contexts");
        self.algebra
    }

    pub fn add(&self, other: &AlgElem) -> AlgElem {
        AlgElem::new(self.same_context(other), elem_add(&self.coeffs, &other.coeffs))
    }

    pub fn sub(&self, other: &AlgElem) -> AlgElem {
        AlgElem::new(self.same_context(other), elem_sub(&self.coeffs, &other.coeffs))
    }

    pub fn neg(&self) -> AlgElem {
        AlgElem::new(self.algebra, elem_neg(&self.coeffs))
    }

    pub fn mul(&self, other: &AlgElem) -> AlgElem {
        let a = self.same_context(other);
        AlgElem::new(a, a.finite().mul(&self.coeffs, &other.coeffs))
    }

    /// Nonnegative power by binary exponentiation (`u^0 = 1`).
    pub fn pow(&self, mut k: u64) -> AlgElem {
        let alg = self.algebra.finite();
        let mut acc = alg.unit();
        let mut base = self.coeffs.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = alg.mul(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = alg.mul(&base, &base);
            }
        }
        AlgElem::new(self.algebra, acc)
    }
}

impl fmt::Display for AlgElem {
    /// Normal form on the frozen basis; the output re-parses (in the same
    /// context) to an equal element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.algebra.finite().format_element(&self.coeffs))
    }
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

/// Parse failure; `pos` is the 1-based character position in the input.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl ParseError {
    fn at(pos: usize, msg: impl Into<String>) -> Self {
        ParseError { pos, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "syntax error at position {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, PartialEq, Eq, Debug)]
enum Tok {
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Int(String),
    /// Index into the context's generator list.
    Gen(usize),
    QLiteral,
}

#[derive(Clone, Debug)]
struct Lexeme {
    tok: Tok,
    pos: usize,
}

fn lex(src: &str, algebra: Algebra) -> Result<Vec<Lexeme>, ParseError> {
    let gens = algebra.generators();
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        let pos = i + 1;
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            out.push(Lexeme { tok, pos });
            i += 1;
            continue;
        }
        if ch.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            out.push(Lexeme {
                tok: Tok::Int(chars[start..i].iter().collect()),
                pos,
            });
            continue;
        }
        // Generators by longest match, then the scalar literal q.
        let rest: String = chars[i..].iter().collect();
        if let Some(g) = gens.iter().position(|(name, _)| rest.starts_with(name)) {
            let len = gens[g].0.chars().count();
            out.push(Lexeme { tok: Tok::Gen(g), pos });
            i += len;
            continue;
        }
        if ch == 'q' {
            out.push(Lexeme { tok: Tok::QLiteral, pos });
            i += 1;
            continue;
        }
        // Unknown symbol: report the whole letter run for readability.
        let start = i;
        while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
            i += 1;
        }
        let sym: String = if i > start {
            chars[start..i].iter().collect()
        } else {
            ch.to_string()
        };
        let names: Vec<&str> = gens.iter().map(|(n, _)| *n).collect();
        return Err(ParseError::at(
            pos,
            format!(
                "unknown symbol '{sym}' (algebra {} has generators {})",
                algebra.name(),
                names.join(", ")
            ),
        ));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct Parser {
    algebra: Algebra,
    gens: Vec<(&'static str, Vec<Scalar>)>,
    toks: Vec<Lexeme>,
    at: usize,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|l| &l.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end_pos, |l| l.pos)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|l| l.tok.clone());
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn parse_expr(&mut self) -> Result<AlgElem, ParseError> {
        let negated = self.eat(&Tok::Minus);
        let mut acc = self.parse_term()?;
        if negated {
            acc = acc.neg();
        }
        loop {
            if self.eat(&Tok::Plus) {
                acc = acc.add(&self.parse_term()?);
            } else if self.eat(&Tok::Minus) {
                acc = acc.sub(&self.parse_term()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Int(_) | Tok::Gen(_) | Tok::QLiteral | Tok::LParen)
        )
    }

    fn parse_term(&mut self) -> Result<AlgElem, ParseError> {
        let mut acc = self.parse_factor()?;
        loop {
            if self.eat(&Tok::Star) {
                acc = acc.mul(&self.parse_factor()?);
            } else if self.starts_factor() {
                acc = acc.mul(&self.parse_factor()?);
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn parse_factor(&mut self) -> Result<AlgElem, ParseError> {
        let base = self.parse_atom()?;
        if !self.eat(&Tok::Caret) {
            return Ok(base);
        }
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let k: u64 = digits.parse().map_err(|_| {
                    ParseError::at(pos, format!("exponent {digits} is too large"))
                })?;
                Ok(base.pow(k))
            }
            Some(Tok::Minus) => Err(ParseError::at(
                pos,
                "negative exponents are not allowed (q^-1 is written q^2)",
            )),
            _ => Err(ParseError::at(pos, "expected a nonnegative integer exponent")),
        }
    }

    fn parse_atom(&mut self) -> Result<AlgElem, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(digits)) => {
                let num: Q = digits
                    .parse()
                    .map_err(|_| ParseError::at(pos, "invalid integer literal"))?;
                // Rational literal n/m.
                if self.peek() == Some(&Tok::Slash) {
                    self.at += 1;
                    let dpos = self.pos();
                    match self.bump() {
                        Some(Tok::Int(den)) => {
                            let den: Q = den
                                .parse()
                                .map_err(|_| ParseError::at(dpos, "invalid integer literal"))?;
                            if den == Q::from_integer(0.into()) {
                                return Err(ParseError::at(
                                    dpos,
                                    "zero denominator in rational literal",
                                ));
                            }
                            Ok(AlgElem::scalar(self.algebra, &Scalar::from_q(num / den)))
                        }
                        _ => Err(ParseError::at(
                            dpos,
                            "expected an integer denominator after '/'",
                        )),
                    }
                } else {
                    Ok(AlgElem::scalar(self.algebra, &Scalar::from_q(num)))
                }
            }
            Some(Tok::QLiteral) => Ok(AlgElem::scalar(self.algebra, &Scalar::q())),
            Some(Tok::Gen(g)) => Ok(AlgElem::new(self.algebra, self.gens[g].1.clone())),
            Some(Tok::LParen) => {
                let inner = self.parse_expr()?;
                if self.eat(&Tok::RParen) {
                    Ok(inner)
                } else {
                    Err(ParseError::at(self.pos(), "expected ')'"))
                }
            }
            Some(Tok::Slash) => Err(ParseError::at(
                pos,
                "'/' is only allowed between integer literals (and 1/q is written q^2)",
            )),
            _ => Err(ParseError::at(
                pos,
                "expected a generator, a scalar, or '('",
            )),
        }
    }
}

/// Parse and evaluate `src` in the given algebra context.
pub fn parse(src: &str, algebra: Algebra) -> Result<AlgElem, ParseError> {
    if src.trim().is_empty() {
        return Err(ParseError::at(1, "empty expression"));
    }
    let toks = lex(src, algebra)?;
    let end_pos = src.chars().count() + 1;
    let mut p = Parser {
        algebra,
        gens: algebra.generators(),
        toks,
        at: 0,
        end_pos,
    };
    let v = p.parse_expr()?;
    if p.at != p.toks.len() {
        return Err(ParseError::at(p.pos(), "unexpected trailing input"));
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// Tests
// ---------------------------------------------------------------------------
