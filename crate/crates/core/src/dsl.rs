//! The text syntax for signatures, diagrams and scripts.
//!
//! ```text
//! document := decl* term?
//! decl     := "object" ident ("," ident)*
//!           | "gen" ident ":" word "->" word
//!           | "gen2" ident ":" diagram "=>" diagram "invertible"?
//! word     := "1" | ident ("*" ident)*
//! slice    := "[" word "|" (ident | "swap(" ident "," ident ")") "|" word "]"
//! diagram  := "id(" word ")" | slice (";" slice)*
//! script   := "from" diagram ("do" cell ("," cell)*)?
//! cell     := "interchange@" int "back"?
//!           | "move:" kind "@" int ("/" int)?
//!           | "gen2:" ident "@" int ("l=" word)? ("r=" word)? "back"?
//! ```
//!
//! `#` starts a comment. Whitespace, newlines included, is insignificant.

use std::fmt::Write as _;

use thiserror::Error;

use crate::diagram::{Diagram, Move, Slice, SliceBody};
use crate::signature::{Gen1, Gen2, ObjGen, Signature, Word};
use crate::twocell::{Cell, Script};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DslError {
    #[error("{line}:{col}: expected {expected}, found {found}")]
    Syntax { line: usize, col: usize, expected: String, found: String },
    #[error("{line}:{col}: unknown {kind} `{name}`")]
    Unknown { line: usize, col: usize, kind: &'static str, name: String },
    #[error("{line}:{col}: {reason}")]
    Invalid { line: usize, col: usize, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Term {
    Diagram(Diagram),
    Script(Script),
}

/// Declarations followed by at most one term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub sig: Signature,
    pub term: Option<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(usize),
    Sym(&'static str),
    Eof,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(n) => format!("`{n}`"),
            Tok::Sym(s) => format!("`{s}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pos {
    line: usize,
    col: usize,
}

const SYMBOLS: [&str; 14] = ["->", "=>", "[", "]", "|", ";", "(", ")", ",", "*", ":", "@", "/", "="];

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, n: usize| {
        for _ in 0..n {
            if chars[*i] == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
            *i += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, 1);
        } else if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                advance(&mut i, &mut line, &mut col, 1);
            }
        } else if c.is_ascii_alphabetic() || c == '_' {
            let mut j = i + 1;
            while j < chars.len() {
                let d = chars[j];
                let hyphen = d == '-' && chars.get(j + 1).is_some_and(|e| e.is_ascii_alphabetic());
                if d.is_ascii_alphanumeric() || d == '_' || d == '\'' || hyphen {
                    j += 1;
                } else {
                    break;
                }
            }
            out.push((Tok::Ident(chars[i..j].iter().collect()), pos));
            let n = j - i;
            advance(&mut i, &mut line, &mut col, n);
        } else if c.is_ascii_digit() {
            let mut j = i;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            let s: String = chars[i..j].iter().collect();
            let n = s.parse().map_err(|_| DslError::Invalid { line, col, reason: format!("integer `{s}` is too large") })?;
            out.push((Tok::Int(n), pos));
            let n = j - i;
            advance(&mut i, &mut line, &mut col, n);
        } else {
            let rest: String = chars[i..(i + 2).min(chars.len())].iter().collect();
            let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
                return Err(DslError::Syntax { line, col, expected: "a token".into(), found: format!("`{c}`") });
            };
            out.push((Tok::Sym(sym), pos));
            advance(&mut i, &mut line, &mut col, sym.len());
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    sig: &'a mut Signature,
}

impl<'a> Parser<'a> {
    fn new(text: &str, sig: &'a mut Signature) -> Result<Self, DslError> {
        Ok(Parser { toks: lex(text)?, at: 0, sig })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn fail<T>(&self, expected: &str) -> Result<T, DslError> {
        let p = self.pos();
        Err(DslError::Syntax { line: p.line, col: p.col, expected: expected.into(), found: self.peek().describe() })
    }

    fn invalid<T>(&self, p: Pos, reason: impl Into<String>) -> Result<T, DslError> {
        Err(DslError::Invalid { line: p.line, col: p.col, reason: reason.into() })
    }

    fn at_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Tok::Sym(t) if *t == s)
    }

    fn at_kw(&self, k: &str) -> bool {
        matches!(self.peek(), Tok::Ident(t) if t == k)
    }

    fn sym(&mut self, s: &str) -> Result<(), DslError> {
        if self.at_sym(s) {
            self.bump();
            Ok(())
        } else {
            self.fail(&format!("`{s}`"))
        }
    }

    fn kw(&mut self, k: &str) -> Result<(), DslError> {
        if self.at_kw(k) {
            self.bump();
            Ok(())
        } else {
            self.fail(&format!("`{k}`"))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String, DslError> {
        match self.peek() {
            Tok::Ident(s) => {
                let s = s.clone();
                self.bump();
                Ok(s)
            }
            _ => self.fail(what),
        }
    }

    fn int(&mut self) -> Result<usize, DslError> {
        match *self.peek() {
            Tok::Int(n) => {
                self.bump();
                Ok(n)
            }
            _ => self.fail("an integer"),
        }
    }

    fn word(&mut self) -> Result<Word, DslError> {
        if *self.peek() == Tok::Int(1) {
            self.bump();
            return Ok(Word::unit());
        }
        let mut letters = vec![self.ident("a word")?];
        while self.at_sym("*") {
            self.bump();
            letters.push(self.ident("an object letter")?);
        }
        Ok(Word::from_letters(letters))
    }

    fn slice(&mut self) -> Result<Slice, DslError> {
        self.sym("[")?;
        let left = self.word()?;
        self.sym("|")?;
        let p = self.pos();
        let body = if self.at_kw("swap") && *self.peek2() == Tok::Sym("(") {
            self.bump();
            self.bump();
            let x = self.ident("an object letter")?;
            self.sym(",")?;
            let y = self.ident("an object letter")?;
            self.sym(")")?;
            SliceBody::Braid(x.into(), y.into())
        } else {
            let id = self.ident("a generator or `swap(`")?;
            match self.sig.gen1(&id) {
                Some(g) => SliceBody::gen(g),
                None => return Err(DslError::Unknown { line: p.line, col: p.col, kind: "generator", name: id }),
            }
        };
        self.sym("|")?;
        let right = self.word()?;
        self.sym("]")?;
        Ok(Slice::new(left, body, right))
    }

    fn at_diagram(&self) -> bool {
        self.at_sym("[") || (self.at_kw("id") && *self.peek2() == Tok::Sym("("))
    }

    fn diagram(&mut self) -> Result<Diagram, DslError> {
        let p = self.pos();
        if self.at_kw("id") && *self.peek2() == Tok::Sym("(") {
            self.bump();
            self.bump();
            let w = self.word()?;
            self.sym(")")?;
            return Ok(Diagram::identity(w));
        }
        if !self.at_sym("[") {
            return self.fail("a diagram");
        }
        let mut slices = vec![self.slice()?];
        while self.at_sym(";") {
            self.bump();
            slices.push(self.slice()?);
        }
        match Diagram::from_slices(slices) {
            Ok(d) => Ok(d),
            Err(e) => self.invalid(p, e.to_string()),
        }
    }

    fn cell(&mut self) -> Result<Cell, DslError> {
        let p = self.pos();
        let head = self.ident("a cell")?;
        match head.as_str() {
            "interchange" => {
                self.sym("@")?;
                let at = self.int()?;
                let back = self.at_kw("back");
                if back {
                    self.bump();
                }
                Ok(Cell::Interchange { at, back })
            }
            "move" => {
                self.sym(":")?;
                let kp = self.pos();
                let kind = self.ident("a move kind")?;
                self.sym("@")?;
                let at = self.int()?;
                let extra = if self.at_sym("/") {
                    self.bump();
                    Some(self.int()?)
                } else {
                    None
                };
                let m = match (kind.as_str(), extra) {
                    ("cancel", None) => Move::Cancel { at },
                    ("transpose", None) => Move::Transpose { at },
                    ("insert", Some(wire)) => Move::Insert { at, wire },
                    ("slide-up", Some(len)) => Move::SlideUp { at, len },
                    ("slide-down", Some(len)) => Move::SlideDown { at, len },
                    ("cancel" | "transpose", Some(_)) => return self.invalid(kp, format!("`{kind}` takes no `/` argument")),
                    ("insert" | "slide-up" | "slide-down", None) => {
                        return self.invalid(kp, format!("`{kind}` needs a `/` argument"))
                    }
                    _ => return Err(DslError::Unknown { line: kp.line, col: kp.col, kind: "move kind", name: kind }),
                };
                Ok(Cell::StructMove(m))
            }
            "gen2" => {
                self.sym(":")?;
                let gp = self.pos();
                let id = self.ident("a 2-cell generator")?;
                let gen = match self.sig.gen2(&id) {
                    Some(g) => g.clone(),
                    None => return Err(DslError::Unknown { line: gp.line, col: gp.col, kind: "2-cell generator", name: id }),
                };
                self.sym("@")?;
                let at = self.int()?;
                let (mut left, mut right) = (Word::unit(), Word::unit());
                if self.at_kw("l") && *self.peek2() == Tok::Sym("=") {
                    self.bump();
                    self.bump();
                    left = self.word()?;
                }
                if self.at_kw("r") && *self.peek2() == Tok::Sym("=") {
                    self.bump();
                    self.bump();
                    right = self.word()?;
                }
                let back = self.at_kw("back");
                if back {
                    if !gen.invertible {
                        return self.invalid(self.pos(), format!("`{}` is not invertible", gen.id));
                    }
                    self.bump();
                }
                Ok(Cell::GenCell { gen, at, left, right, back })
            }
            _ => Err(DslError::Syntax {
                line: p.line,
                col: p.col,
                expected: "`interchange`, `move` or `gen2`".into(),
                found: format!("`{head}`"),
            }),
        }
    }

    fn script(&mut self) -> Result<Script, DslError> {
        self.kw("from")?;
        let src = self.diagram()?;
        let mut cells = Vec::new();
        let mut positions = Vec::new();
        if self.at_kw("do") {
            self.bump();
            loop {
                positions.push(self.pos());
                cells.push(self.cell()?);
                if !self.at_sym(",") {
                    break;
                }
                self.bump();
            }
        }
        let s = Script::new(src, cells);
        if let Err(crate::twocell::TwoCellError::CellMisapplied { index, reason }) = s.trajectory() {
            return self.invalid(positions[index], format!("cell does not apply: {reason}"));
        }
        Ok(s)
    }

    fn decl(&mut self) -> Result<bool, DslError> {
        let p = self.pos();
        if self.at_kw("object") {
            self.bump();
            loop {
                let id = self.ident("an object name")?;
                self.declare(p, &id)?;
                self.sig.objects.push(ObjGen { id: id.into() });
                if !self.at_sym(",") {
                    break;
                }
                self.bump();
            }
        } else if self.at_kw("gen") {
            self.bump();
            let id = self.ident("a generator name")?;
            self.declare(p, &id)?;
            self.sym(":")?;
            let dom = self.word()?;
            self.sym("->")?;
            let cod = self.word()?;
            self.sig.gens1.push(Gen1 { id: id.into(), dom, cod });
        } else if self.at_kw("gen2") && *self.peek2() != Tok::Sym(":") {
            self.bump();
            let id = self.ident("a 2-cell generator name")?;
            self.declare(p, &id)?;
            self.sym(":")?;
            let src = self.diagram()?;
            self.sym("=>")?;
            let tgt = self.diagram()?;
            let invertible = self.at_kw("invertible");
            if invertible {
                self.bump();
            }
            if src.src != tgt.src || src.tgt() != tgt.tgt() {
                return self.invalid(p, format!("`{id}`: source and target have different endpoints"));
            }
            self.sig.gens2.push(Gen2 { id: id.into(), src, tgt, invertible });
        } else {
            return Ok(false);
        }
        Ok(true)
    }

    fn declare(&self, p: Pos, id: &str) -> Result<(), DslError> {
        if self.sig.object(id).is_some() || self.sig.gen1(id).is_some() || self.sig.gen2(id).is_some() {
            return self.invalid(p, format!("`{id}` is already declared"));
        }
        Ok(())
    }

    fn eof(&mut self) -> Result<(), DslError> {
        if *self.peek() == Tok::Eof {
            Ok(())
        } else {
            self.fail("end of input")
        }
    }
}

/// Parses a document, extending `base` with its declarations.
pub fn parse_document(text: &str, base: &Signature) -> Result<Document, DslError> {
    let mut sig = base.clone();
    let term = {
        let mut p = Parser::new(text, &mut sig)?;
        while p.decl()? {}
        let term = if p.at_kw("from") {
            Some(Term::Script(p.script()?))
        } else if p.at_diagram() {
            Some(Term::Diagram(p.diagram()?))
        } else {
            None
        };
        p.eof()?;
        term
    };
    Ok(Document { sig, term })
}

pub fn parse_signature(text: &str) -> Result<Signature, DslError> {
    let doc = parse_document(text, &Signature::new())?;
    if doc.term.is_some() {
        return Err(DslError::Invalid { line: 1, col: 1, reason: "expected only declarations".into() });
    }
    Ok(doc.sig)
}

pub fn parse_diagram(text: &str, sig: &Signature) -> Result<Diagram, DslError> {
    let mut sig = sig.clone();
    let mut p = Parser::new(text, &mut sig)?;
    let d = p.diagram()?;
    p.eof()?;
    Ok(d)
}

pub fn parse_script(text: &str, sig: &Signature) -> Result<Script, DslError> {
    let mut sig = sig.clone();
    let mut p = Parser::new(text, &mut sig)?;
    let s = p.script()?;
    p.eof()?;
    Ok(s)
}

pub fn print_diagram(d: &Diagram) -> String {
    format!("{d:?}")
}

pub fn print_script(s: &Script) -> String {
    s.to_string()
}

pub fn print_signature(sig: &Signature) -> String {
    let mut out = String::new();
    for o in &sig.objects {
        writeln!(out, "object {}", o.id).unwrap();
    }
    for g in &sig.gens1 {
        writeln!(out, "gen {} : {} -> {}", g.id, g.dom, g.cod).unwrap();
    }
    for g in &sig.gens2 {
        let inv = if g.invertible { " invertible" } else { "" };
        writeln!(out, "gen2 {} : {:?} => {:?}{inv}", g.id, g.src, g.tgt).unwrap();
    }
    out
}

pub fn print_term(t: &Term) -> String {
    match t {
        Term::Diagram(d) => print_diagram(d),
        Term::Script(s) => print_script(s),
    }
}

pub fn print_document(doc: &Document) -> String {
    let mut out = print_signature(&doc.sig);
    if let Some(t) = &doc.term {
        out.push_str(&print_term(t));
        out.push('\n');
    }
    out
}
