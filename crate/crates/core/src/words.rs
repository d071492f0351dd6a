//! The monodromy-word DSL: parsing, canonical printing, evaluation into
//! Sp(2h, Z), and elementary (Hurwitz) transformations of twist
//! factorizations.
//!
//! Grammar (whitespace separates tokens, `#` starts a comment):
//!
//! ```text
//! word   := item*                     juxtaposition = concatenation
//! item   := atom postfix*
//! postfix:= '                         inverse (folds into a plain twist)
//!         | ^<int>                    power (nonzero exponent)
//! atom   := t(<name>)                 twist along a named curve
//!         | t(<name> @ <word>)        twist along the image of the curve
//!                                     under the word
//!         | [ <word> , <word> ]       commutator
//!         | ( <word> )                grouping
//!         | <name>                    named diffeomorphism
//! ```
//!
//! Powers and quotes bind tightest; commutator brackets and parentheses
//! group explicitly. Evaluation is a monoid homomorphism multiplying
//! left-to-right in word order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::atlas::{CurveAtlas, SepType};
use crate::error::{Error, Result};
use crate::sympl::{
    transvection, HomologyVector, IntersectionForm, SymplecticMatrix, TwistSign,
};

/// AST of a monodromy word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Word {
    /// `t(curve)` with a folded exponent; `under` conjugates the curve
    /// through another word first.
    Twist {
        curve: String,
        under: Option<Box<Word>>,
        exp: i64,
    },
    /// Reference to a `def`-bound diffeomorphism.
    Named(String),
    Inverse(Box<Word>),
    Power(Box<Word>, i64),
    Commutator(Box<Word>, Box<Word>),
    Concat(Vec<Word>),
}

impl Word {
    pub fn twist(curve: &str) -> Word {
        Word::Twist {
            curve: curve.into(),
            under: None,
            exp: 1,
        }
    }

    pub fn empty() -> Word {
        Word::Concat(Vec::new())
    }
}

// ---------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    line: usize,
    col: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    T,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    At,
    Quote,
    Caret,
    Int(i64),
    Name(String),
    Eof,
}

struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer {
            src: src.as_bytes(),
            pos: 0,
            line: 1,
            col: 1,
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let c = self.src.get(self.pos).copied()?;
        self.pos += 1;
        if c == b'\n' {
            self.line += 1;
            self.col = 1;
        } else {
            self.col += 1;
        }
        Some(c)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn next_tok(&mut self) -> Result<Spanned> {
        loop {
            match self.peek() {
                Some(c) if (c as char).is_whitespace() => {
                    self.bump();
                }
                Some(b'#') => {
                    while let Some(c) = self.peek() {
                        if c == b'\n' {
                            break;
                        }
                        self.bump();
                    }
                }
                _ => break,
            }
        }
        let (line, col) = (self.line, self.col);
        let spanned = |tok| Spanned { tok, line, col };
        let Some(c) = self.peek() else {
            return Ok(spanned(Tok::Eof));
        };
        let tok = match c {
            b'(' => {
                self.bump();
                Tok::LParen
            }
            b')' => {
                self.bump();
                Tok::RParen
            }
            b'[' => {
                self.bump();
                Tok::LBracket
            }
            b']' => {
                self.bump();
                Tok::RBracket
            }
            b',' => {
                self.bump();
                Tok::Comma
            }
            b'@' => {
                self.bump();
                Tok::At
            }
            b'\'' => {
                self.bump();
                Tok::Quote
            }
            b'^' => {
                self.bump();
                Tok::Caret
            }
            b'-' | b'0'..=b'9' => {
                let mut s = String::new();
                if c == b'-' {
                    s.push('-');
                    self.bump();
                }
                while let Some(d) = self.peek() {
                    if d.is_ascii_digit() {
                        s.push(d as char);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if s == "-" || s.is_empty() {
                    return Err(Error::Parse {
                        line,
                        column: col,
                        expected: "digits after `-`".into(),
                    });
                }
                Tok::Int(s.parse().map_err(|_| Error::Parse {
                    line,
                    column: col,
                    expected: "integer".into(),
                })?)
            }
            c if (c as char).is_ascii_alphabetic() || c == b'_' => {
                let mut s = String::new();
                while let Some(d) = self.peek() {
                    if (d as char).is_ascii_alphanumeric() || d == b'_' {
                        s.push(d as char);
                        self.bump();
                    } else {
                        break;
                    }
                }
                if s == "t" && self.peek() == Some(b'(') {
                    Tok::T
                } else {
                    Tok::Name(s)
                }
            }
            other => {
                return Err(Error::Parse {
                    line,
                    column: col,
                    expected: format!("token (found `{}`)", other as char),
                })
            }
        };
        Ok(spanned(tok))
    }
}

pub struct Parser {
    toks: Vec<Spanned>,
    idx: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self> {
        let mut lx = Lexer::new(src);
        let mut toks = Vec::new();
        loop {
            let t = lx.next_tok()?;
            let eof = t.tok == Tok::Eof;
            toks.push(t);
            if eof {
                break;
            }
        }
        Ok(Parser { toks, idx: 0 })
    }

    fn peek(&self) -> &Spanned {
        &self.toks[self.idx]
    }

    fn bump(&mut self) -> &Spanned {
        let t = &self.toks[self.idx];
        if self.idx + 1 < self.toks.len() {
            self.idx += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<()> {
        let t = self.bump();
        if t.tok == want {
            Ok(())
        } else {
            Err(Error::Parse {
                line: t.line,
                column: t.col,
                expected: what.into(),
            })
        }
    }

    fn err_here(&self, expected: &str) -> Error {
        let t = self.peek();
        Error::Parse {
            line: t.line,
            column: t.col,
            expected: expected.into(),
        }
    }

    /// word := item* until a stop token
    fn word(&mut self) -> Result<Word> {
        let mut items = Vec::new();
        loop {
            match self.peek().tok {
                Tok::Eof | Tok::RParen | Tok::RBracket | Tok::Comma => break,
                _ => items.push(self.item()?),
            }
        }
        Ok(match items.len() {
            1 => items.pop().unwrap(),
            _ => Word::Concat(items),
        })
    }

    fn item(&mut self) -> Result<Word> {
        let (mut node, mut plain_twist) = self.atom()?;
        loop {
            match self.peek().tok {
                Tok::Quote => {
                    self.bump();
                    node = match (plain_twist, node) {
                        (true, Word::Twist { curve, under, exp }) => Word::Twist {
                            curve,
                            under,
                            exp: -exp,
                        },
                        (_, w) => {
                            plain_twist = false;
                            Word::Inverse(Box::new(w))
                        }
                    };
                }
                Tok::Caret => {
                    self.bump();
                    let t = self.bump();
                    let Tok::Int(k) = t.tok else {
                        return Err(Error::Parse {
                            line: t.line,
                            column: t.col,
                            expected: "integer exponent".into(),
                        });
                    };
                    if k == 0 {
                        return Err(Error::Parse {
                            line: t.line,
                            column: t.col,
                            expected: "nonzero exponent".into(),
                        });
                    }
                    node = Word::Power(Box::new(node), k);
                    plain_twist = false;
                }
                _ => break,
            }
        }
        Ok(node)
    }

    fn atom(&mut self) -> Result<(Word, bool)> {
        let t = self.bump();
        match t.tok.clone() {
            Tok::T => {
                self.expect(Tok::LParen, "`(` after t")?;
                let nt = self.bump();
                let Tok::Name(curve) = nt.tok.clone() else {
                    return Err(Error::Parse {
                        line: nt.line,
                        column: nt.col,
                        expected: "curve name".into(),
                    });
                };
                let under = if self.peek().tok == Tok::At {
                    self.bump();
                    Some(Box::new(self.word()?))
                } else {
                    None
                };
                self.expect(Tok::RParen, "`)` closing twist")?;
                Ok((
                    Word::Twist {
                        curve,
                        under,
                        exp: 1,
                    },
                    true,
                ))
            }
            Tok::LBracket => {
                let a = self.word()?;
                self.expect(Tok::Comma, "`,` in commutator")?;
                let b = self.word()?;
                self.expect(Tok::RBracket, "`]` closing commutator")?;
                Ok((Word::Commutator(Box::new(a), Box::new(b)), false))
            }
            Tok::LParen => {
                let w = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                // parenthesized twists are not "plain": a following quote
                // wraps in Inverse instead of folding into the exponent,
                // which keeps printing injective
                Ok((w, false))
            }
            Tok::Name(n) => Ok((Word::Named(n), false)),
            _ => Err(Error::Parse {
                line: t.line,
                column: t.col,
                expected: "twist, commutator, `(`, or name".into(),
            }),
        }
    }
}

/// Parse a single word; the entire input must be consumed.
pub fn parse_word(src: &str) -> Result<Word> {
    let mut p = Parser::new(src)?;
    let w = p.word()?;
    if p.peek().tok != Tok::Eof {
        return Err(p.err_here("end of input"));
    }
    Ok(w)
}

/// Parse a definition file: one `def <name> = <word>` per line,
/// blank lines and `#` comments allowed.
pub fn parse_defs(src: &str) -> Result<BTreeMap<String, Word>> {
    let mut defs = BTreeMap::new();
    for (i, line) in src.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (name, word) = parse_def_line(line, i + 1)?;
        defs.insert(name, word);
    }
    Ok(defs)
}

/// Parse one `def <name> = <word>` line.
pub fn parse_def_line(line: &str, lineno: usize) -> Result<(String, Word)> {
    let rest = line.strip_prefix("def ").ok_or_else(|| Error::Parse {
        line: lineno,
        column: 1,
        expected: "`def`".into(),
    })?;
    let eq = rest.find('=').ok_or_else(|| Error::Parse {
        line: lineno,
        column: 1,
        expected: "`=` in definition".into(),
    })?;
    let name = rest[..eq].trim().to_string();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(Error::Parse {
            line: lineno,
            column: 1,
            expected: "definition name".into(),
        });
    }
    let word = parse_word(&rest[eq + 1..])?;
    Ok((name, word))
}

// ---------------------------------------------------------------------
// Printing
// ---------------------------------------------------------------------

/// Canonical text form; `parse_word(print_word(w))` is structurally `w`
/// for every parser-reachable AST.
pub fn print_word(w: &Word) -> String {
    let mut out = String::new();
    print_into(w, &mut out);
    out
}

fn print_into(w: &Word, out: &mut String) {
    match w {
        Word::Twist { curve, under, exp } => {
            out.push_str("t(");
            out.push_str(curve);
            if let Some(u) = under {
                out.push_str(" @ ");
                print_into(u, out);
            }
            out.push(')');
            match exp {
                1 => {}
                -1 => out.push('\''),
                e => {
                    let _ = write!(out, "^{e}");
                }
            }
        }
        Word::Named(n) => out.push_str(n),
        Word::Inverse(inner) => {
            print_atomized(inner, out);
            out.push('\'');
        }
        Word::Power(inner, k) => {
            print_atomized(inner, out);
            let _ = write!(out, "^{k}");
        }
        Word::Commutator(a, b) => {
            out.push_str("[ ");
            print_into(a, out);
            out.push_str(" , ");
            print_into(b, out);
            out.push_str(" ]");
        }
        Word::Concat(items) => {
            for (i, item) in items.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                if matches!(item, Word::Concat(_)) {
                    // nested concatenation survives reparse only inside
                    // an explicit group
                    out.push('(');
                    print_into(item, out);
                    out.push(')');
                } else {
                    print_into(item, out);
                }
            }
        }
    }
}

fn print_atomized(w: &Word, out: &mut String) {
    // Power/Inverse postfixes attach to atoms; anything non-atomic gets
    // wrapped. A plain twist must also be wrapped under Inverse so the
    // quote does not fold back into the twist on reparse.
    match w {
        Word::Named(_) | Word::Commutator(..) | Word::Power(..) | Word::Inverse(..) => {
            print_into(w, out)
        }
        _ => {
            out.push('(');
            print_into(w, out);
            out.push(')');
        }
    }
}

// ---------------------------------------------------------------------
// Evaluation
// ---------------------------------------------------------------------

/// Evaluation context: atlas for curve classes, `def` bindings for
/// named diffeomorphisms, and the calibrated twist convention.
pub struct EvalCtx<'a> {
    pub atlas: &'a CurveAtlas,
    pub defs: &'a BTreeMap<String, Word>,
    pub sign: TwistSign,
}

impl<'a> EvalCtx<'a> {
    pub fn new(atlas: &'a CurveAtlas, defs: &'a BTreeMap<String, Word>, sign: TwistSign) -> Self {
        EvalCtx { atlas, defs, sign }
    }

    pub fn form(&self) -> IntersectionForm {
        IntersectionForm::new(self.atlas.genus())
    }
}

/// Evaluate a word to its symplectic image. A homomorphism:
/// concatenation multiplies left-to-right, inverse inverts.
pub fn evaluate(w: &Word, ctx: &EvalCtx) -> Result<SymplecticMatrix> {
    let mut stack = Vec::new();
    eval_rec(w, ctx, &mut stack)
}

fn eval_rec(w: &Word, ctx: &EvalCtx, visiting: &mut Vec<String>) -> Result<SymplecticMatrix> {
    let j = ctx.form();
    match w {
        Word::Twist { curve, under, exp } => {
            let class = resolve_class(curve, under.as_deref(), ctx, visiting)?;
            transvection(&class, *exp, &j, ctx.sign)
        }
        Word::Named(n) => {
            if visiting.iter().any(|v| v == n) {
                return Err(Error::CyclicDefinition(n.clone()));
            }
            let def = ctx.defs.get(n).ok_or_else(|| Error::UnknownName(n.clone()))?;
            visiting.push(n.clone());
            let m = eval_rec(def, ctx, visiting)?;
            visiting.pop();
            Ok(m)
        }
        Word::Inverse(inner) => Ok(eval_rec(inner, ctx, visiting)?.inverse()),
        Word::Power(inner, k) => Ok(eval_rec(inner, ctx, visiting)?.pow(*k)),
        Word::Commutator(a, b) => {
            let ma = eval_rec(a, ctx, visiting)?;
            let mb = eval_rec(b, ctx, visiting)?;
            Ok(crate::sympl::commutator(&ma, &mb))
        }
        Word::Concat(items) => {
            let mut acc = SymplecticMatrix::identity(ctx.atlas.genus());
            for item in items {
                acc = acc.mul(&eval_rec(item, ctx, visiting)?);
            }
            Ok(acc)
        }
    }
}

/// The homology class a twist letter acts along, conjugating through
/// `under` when present.
pub fn resolve_class(
    curve: &str,
    under: Option<&Word>,
    ctx: &EvalCtx,
    visiting: &mut Vec<String>,
) -> Result<HomologyVector> {
    let c = ctx.atlas.curve(curve)?;
    match under {
        None => Ok(c.homology.clone()),
        Some(u) => {
            let m = eval_rec(u, ctx, visiting)?;
            Ok(m.apply(&c.homology))
        }
    }
}

// ---------------------------------------------------------------------
// Factorizations and Hurwitz moves
// ---------------------------------------------------------------------

/// Handedness of a twist letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Chirality {
    Right,
    Left,
}

impl Chirality {
    pub fn exponent(self) -> i64 {
        match self {
            Chirality::Right => 1,
            Chirality::Left => -1,
        }
    }
}

/// One singular-fiber letter: a twist along a concrete homology class
/// with its separation type and handedness. Conjugated letters produced
/// by Hurwitz moves store the image class directly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistLetter {
    pub class: HomologyVector,
    pub sep: SepType,
    pub chirality: Chirality,
    pub label: String,
}

impl TwistLetter {
    pub fn matrix(&self, h: usize, sign: TwistSign) -> Result<SymplecticMatrix> {
        let j = IntersectionForm::new(h);
        transvection(&self.class, self.chirality.exponent(), &j, sign)
    }
}

/// Ordered twist factorization over a fixed genus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub h: usize,
    pub letters: Vec<TwistLetter>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MoveDirection {
    Left,
    Right,
}

impl Factorization {
    pub fn product(&self, sign: TwistSign) -> Result<SymplecticMatrix> {
        let mut acc = SymplecticMatrix::identity(self.h);
        for l in &self.letters {
            acc = acc.mul(&l.matrix(self.h, sign)?);
        }
        Ok(acc)
    }

    /// Elementary transformation at position i (1-based pairs (i, i+1)
    /// in the spec; here 0-based index of the left letter). The right
    /// move replaces (t_i, t_{i+1}) by (t_{i+1}, t_{i+1}^-1 t_i t_{i+1});
    /// the left move is its inverse. The product of the evaluations and
    /// the multiset of types are unchanged.
    pub fn hurwitz_move(
        &self,
        i: usize,
        dir: MoveDirection,
        sign: TwistSign,
    ) -> Result<Factorization> {
        if i + 1 >= self.letters.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.letters.len(),
            });
        }
        let mut letters = self.letters.clone();
        match dir {
            MoveDirection::Right => {
                let conj = letters[i + 1].matrix(self.h, sign)?.inverse();
                let moved = TwistLetter {
                    class: conj.apply(&letters[i].class),
                    ..letters[i].clone()
                };
                letters.swap(i, i + 1);
                letters[i + 1] = moved;
            }
            MoveDirection::Left => {
                let conj = letters[i].matrix(self.h, sign)?;
                let moved = TwistLetter {
                    class: conj.apply(&letters[i + 1].class),
                    ..letters[i + 1].clone()
                };
                letters.swap(i, i + 1);
                letters[i] = moved;
            }
        }
        Ok(Factorization {
            h: self.h,
            letters,
        })
    }

    /// Rotate the closed factorization by one letter; conjugates the
    /// product, so a trivial product stays trivial.
    pub fn cycled(&self) -> Factorization {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let first = letters.remove(0);
            letters.push(first);
        }
        Factorization {
            h: self.h,
            letters,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    fn ctx_atlas() -> CurveAtlas {
        atlas::load_atlas("ko").unwrap()
    }

    #[test]
    fn parse_power_of_twist() {
        let w = parse_word("t(a4)^2").unwrap();
        assert_eq!(
            w,
            Word::Power(Box::new(Word::twist("a4")), 2)
        );
    }

    #[test]
    fn parse_commutator_with_quote() {
        let w = parse_word("[ t(b3)' t(a1) , phi1 ]").unwrap();
        let lhs = Word::Concat(vec![
            Word::Twist {
                curve: "b3".into(),
                under: None,
                exp: -1,
            },
            Word::twist("a1"),
        ]);
        assert_eq!(
            w,
            Word::Commutator(Box::new(lhs), Box::new(Word::Named("phi1".into())))
        );
    }

    #[test]
    fn parse_error_carries_position() {
        let err = parse_word("t(a4^)").unwrap_err();
        match err {
            Error::Parse { line, column, .. } => {
                assert_eq!(line, 1);
                assert!(column >= 5);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn empty_word_round_trips() {
        let w = parse_word("").unwrap();
        assert_eq!(w, Word::empty());
        assert_eq!(print_word(&w), "");
        assert_eq!(parse_word(&print_word(&w)).unwrap(), w);
    }

    #[test]
    fn prop44_relator_round_trips() {
        let text = "[ t(b3)' t(a1) , phi1 ] [ t(b1)' t(a2) , phi2 ] t(a4)^2";
        let w = parse_word(text).unwrap();
        let printed = print_word(&w);
        assert_eq!(parse_word(&printed).unwrap(), w);
    }

    #[test]
    fn conjugated_twist_round_trips() {
        let w = parse_word("t(a2 @ t(a1))^4").unwrap();
        let printed = print_word(&w);
        assert_eq!(parse_word(&printed).unwrap(), w);
    }

    #[test]
    fn evaluate_twist_times_inverse_is_identity() {
        let atlas = ctx_atlas();
        let defs = BTreeMap::new();
        let ctx = EvalCtx::new(&atlas, &defs, TwistSign::Plus);
        let m = evaluate(&parse_word("t(a) t(a)'").unwrap(), &ctx).unwrap();
        assert!(m.is_identity());
    }

    #[test]
    fn evaluate_is_a_homomorphism_on_concat() {
        let atlas = ctx_atlas();
        let defs = BTreeMap::new();
        let ctx = EvalCtx::new(&atlas, &defs, TwistSign::Plus);
        let u = parse_word("t(a1) t(b2)'").unwrap();
        let v = parse_word("t(a3)^2 t(c1)").unwrap();
        let uv = parse_word("t(a1) t(b2)' t(a3)^2 t(c1)").unwrap();
        let mu = evaluate(&u, &ctx).unwrap();
        let mv = evaluate(&v, &ctx).unwrap();
        assert_eq!(mu.mul(&mv), evaluate(&uv, &ctx).unwrap());
    }

    #[test]
    fn conjugation_evaluates_to_image_twist() {
        // t(a1) t(a2) t(a1)' equals the twist along the image of a2
        // under t(a1): the conjugation law through homology.
        let atlas = ctx_atlas();
        let defs = BTreeMap::new();
        for sign in [TwistSign::Plus, TwistSign::Minus] {
            let ctx = EvalCtx::new(&atlas, &defs, sign);
            let conj = evaluate(&parse_word("t(a1) t(a2) t(a1)'").unwrap(), &ctx).unwrap();
            let direct = evaluate(&parse_word("t(a2 @ t(a1))").unwrap(), &ctx).unwrap();
            assert_eq!(conj, direct);
        }
    }

    #[test]
    fn unknown_name_and_cycle_are_reported() {
        let atlas = ctx_atlas();
        let mut defs = BTreeMap::new();
        let ctx = EvalCtx::new(&atlas, &defs, TwistSign::Plus);
        assert!(matches!(
            evaluate(&parse_word("phi9").unwrap(), &ctx),
            Err(Error::UnknownName(_))
        ));
        defs.insert("p".into(), parse_word("q").unwrap());
        defs.insert("q".into(), parse_word("p").unwrap());
        let ctx = EvalCtx::new(&atlas, &defs, TwistSign::Plus);
        assert!(matches!(
            evaluate(&parse_word("p").unwrap(), &ctx),
            Err(Error::CyclicDefinition(_))
        ));
    }

    #[test]
    fn hurwitz_move_then_inverse_restores() {
        let atlas = ctx_atlas();
        let fact = Factorization {
            h: 3,
            letters: vec![
                TwistLetter {
                    class: atlas.curve("a1").unwrap().homology.clone(),
                    sep: SepType::Nonseparating,
                    chirality: Chirality::Right,
                    label: "a1".into(),
                },
                TwistLetter {
                    class: atlas.curve("c1").unwrap().homology.clone(),
                    sep: SepType::Nonseparating,
                    chirality: Chirality::Right,
                    label: "c1".into(),
                },
            ],
        };
        let sign = TwistSign::Plus;
        let moved = fact.hurwitz_move(0, MoveDirection::Right, sign).unwrap();
        assert_ne!(moved, fact);
        let back = moved.hurwitz_move(0, MoveDirection::Left, sign).unwrap();
        assert_eq!(back, fact);
        assert_eq!(
            moved.product(sign).unwrap(),
            fact.product(sign).unwrap()
        );
    }

    #[test]
    fn hurwitz_move_out_of_range() {
        let fact = Factorization {
            h: 3,
            letters: vec![],
        };
        assert!(matches!(
            fact.hurwitz_move(0, MoveDirection::Right, TwistSign::Plus),
            Err(Error::IndexOutOfRange { .. })
        ));
    }
}
