//! Concrete syntax for terms, presentations and the small `key: value`
//! input files read by the command line tool.
//!
//! ```text
//! expr := expr "|" expr | expr "&" expr | "~" expr | "0" | "1" | ident | "(" expr ")"
//! ```
//!
//! `~` binds tighter than `&`, which binds tighter than `|`; both binary
//! operators associate to the left. A presentation is written as
//!
//! ```text
//! gens: g0 g1 g2
//! rels: g0 & g1, g1 & g2
//! ```
//!
//! where each relation `r` asserts `r = 0`. Blank lines and lines starting
//! with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::boolalg::{BoolAlgError, Presentation, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, message: impl Into<String>) -> ParseError {
        ParseError { line, col, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] BoolAlgError),
}

pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Zero,
    One,
    Ident(String),
    Not,
    And,
    Or,
    LParen,
    RParen,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Zero => f.write_str("`0`"),
            Tok::One => f.write_str("`1`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Not => f.write_str("`~`"),
            Tok::And => f.write_str("`&`"),
            Tok::Or => f.write_str("`|`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
        }
    }
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
}

fn tokenize(text: &str, line: usize, col0: usize) -> Result<Vec<(Tok, usize)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        let single = match c {
            '~' => Some(Tok::Not),
            '&' => Some(Tok::And),
            '|' => Some(Tok::Or),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            toks.push((t, col));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_alphanumeric() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let word: String = chars[start..i].iter().collect();
            let tok = match word.as_str() {
                "0" => Tok::Zero,
                "1" => Tok::One,
                w if is_identifier(w) => Tok::Ident(word),
                _ => return Err(ParseError::new(line, col, format!("invalid identifier `{word}`"))),
            };
            toks.push((tok, col));
        } else {
            return Err(ParseError::new(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(toks)
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(t, _)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(_, c)| *c)
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.col(), message)
    }

    fn or(&mut self) -> Result<Term, ParseError> {
        let mut t = self.and()?;
        while self.peek() == Some(&Tok::Or) {
            self.pos += 1;
            t = Term::or(t, self.and()?);
        }
        Ok(t)
    }

    fn and(&mut self) -> Result<Term, ParseError> {
        let mut t = self.unary()?;
        while self.peek() == Some(&Tok::And) {
            self.pos += 1;
            t = Term::and(t, self.unary()?);
        }
        Ok(t)
    }

    fn unary(&mut self) -> Result<Term, ParseError> {
        let Some(tok) = self.peek().cloned() else {
            return Err(self.error("unexpected end of expression"));
        };
        self.pos += 1;
        match tok {
            Tok::Not => Ok(Term::not(self.unary()?)),
            Tok::Zero => Ok(Term::Zero),
            Tok::One => Ok(Term::One),
            Tok::Ident(name) => Ok(Term::Gen(name)),
            Tok::LParen => {
                let t = self.or()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(t)
            }
            other => {
                self.pos -= 1;
                Err(self.error(format!("unexpected {other}")))
            }
        }
    }
}

/// Parses a term located at `line`, starting at column `col0` (1-based).
fn parse_term_at(text: &str, line: usize, col0: usize) -> Result<Term, ParseError> {
    let toks = tokenize(text, line, col0)?;
    let mut p = Parser { toks, pos: 0, line, end_col: col0 + text.chars().count() };
    let t = p.or()?;
    if let Some(tok) = p.peek() {
        return Err(p.error(format!("unexpected {tok}")));
    }
    Ok(t)
}

pub fn parse_term(text: &str) -> Result<Term, ParseError> {
    parse_term_at(text, 1, 1)
}

/// One `key: value` line of an input document.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub value: String,
    pub line: usize,
    /// Column of the first character of `value`.
    pub col: usize,
}

/// An input file made of `key: value` lines.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Document {
    entries: BTreeMap<String, Entry>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Document, ParseError> {
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim_start();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indent = raw.chars().count() - trimmed.chars().count();
            let Some((key, value)) = trimmed.split_once(':') else {
                return Err(ParseError::new(line, indent + 1, "expected `key: value`"));
            };
            let key = key.trim_end();
            if key.is_empty() || !key.chars().all(|c| c.is_ascii_alphanumeric() || "_.-".contains(c)) {
                return Err(ParseError::new(line, indent + 1, format!("invalid key `{key}`")));
            }
            let col = indent + trimmed[..trimmed.len() - value.len()].chars().count() + 1;
            let entry = Entry { value: value.to_string(), line, col };
            if entries.insert(key.to_string(), entry).is_some() {
                return Err(ParseError::new(line, indent + 1, format!("duplicate key `{key}`")));
            }
        }
        Ok(Document { entries })
    }

    pub fn get(&self, key: &str) -> Option<&Entry> {
        self.entries.get(key)
    }

    pub fn require(&self, key: &str) -> Result<&Entry, ParseError> {
        self.get(key).ok_or_else(|| ParseError::new(1, 1, format!("missing `{key}:` line")))
    }

    /// Rejects keys outside `allowed`.
    pub fn only(&self, allowed: &[&str]) -> Result<(), ParseError> {
        for (k, e) in &self.entries {
            if !allowed.contains(&k.as_str()) {
                return Err(ParseError::new(e.line, 1, format!("unknown key `{k}`")));
            }
        }
        Ok(())
    }

    /// Whitespace-separated identifiers.
    pub fn names(&self, key: &str) -> Result<Vec<String>, ParseError> {
        let e = self.require(key)?;
        let mut out = Vec::new();
        let mut offset = 0;
        for word in e.value.split_whitespace() {
            let at = e.value[offset..].find(word).expect("word comes from the same string") + offset;
            offset = at + word.len();
            if !is_identifier(word) {
                let col = e.col + e.value[..at].chars().count();
                return Err(ParseError::new(e.line, col, format!("invalid identifier `{word}`")));
            }
            out.push(word.to_string());
        }
        Ok(out)
    }

    /// Comma-separated terms; a missing key or empty value gives no terms.
    pub fn terms(&self, key: &str) -> Result<Vec<Term>, ParseError> {
        let Some(e) = self.get(key) else { return Ok(Vec::new()) };
        split_commas(e)?.into_iter().map(|(s, col)| parse_term_at(s, e.line, col)).collect()
    }

    /// Comma-separated `name -> term` pairs.
    pub fn images(&self, key: &str) -> Result<BTreeMap<String, Term>, ParseError> {
        let e = self.require(key)?;
        let mut out = BTreeMap::new();
        for (item, col) in split_commas(e)? {
            let Some((name, term)) = item.split_once("->") else {
                return Err(ParseError::new(e.line, col, "expected `generator -> term`"));
            };
            let name = name.trim();
            if !is_identifier(name) {
                return Err(ParseError::new(e.line, col, format!("invalid identifier `{name}`")));
            }
            let tcol = col + item[..item.len() - term.len()].chars().count();
            let t = parse_term_at(term, e.line, tcol)?;
            if out.insert(name.to_string(), t).is_some() {
                return Err(ParseError::new(e.line, col, format!("generator `{name}` mapped twice")));
            }
        }
        Ok(out)
    }

    pub fn natural(&self, key: &str) -> Result<Option<usize>, ParseError> {
        let Some(e) = self.get(key) else { return Ok(None) };
        e.value
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| ParseError::new(e.line, e.col, format!("`{key}` must be a natural number")))
    }

    /// The presentation given by `<prefix>gens` and `<prefix>rels`.
    pub fn presentation(&self, prefix: &str) -> Result<Presentation, SyntaxError> {
        let gens = self.names(&format!("{prefix}gens"))?;
        let rels = self.terms(&format!("{prefix}rels"))?;
        Ok(Presentation::new(gens, rels)?)
    }
}

/// Splits an entry's value at commas. An all-blank value has no items; an
/// empty item between commas is an error.
fn split_commas(e: &Entry) -> Result<Vec<(&str, usize)>, ParseError> {
    if e.value.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = 0;
    for item in e.value.split(',') {
        let col = e.col + e.value[..offset].chars().count();
        if item.trim().is_empty() {
            return Err(ParseError::new(e.line, col, "empty item"));
        }
        out.push((item, col));
        offset += item.len() + 1;
    }
    Ok(out)
}

pub fn parse_presentation(text: &str) -> Result<Presentation, SyntaxError> {
    let doc = Document::parse(text)?;
    doc.only(&["gens", "rels"])?;
    doc.presentation("")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> Term {
        Term::gen(s)
    }

    #[test]
    fn precedence() {
        let t = parse_term("~g0 & g1 | g2").unwrap();
        assert_eq!(t, Term::or(Term::and(Term::not(g("g0")), g("g1")), g("g2")));
        let t = parse_term("(g0 | g1) & ~1").unwrap();
        assert_eq!(t, Term::and(Term::or(g("g0"), g("g1")), Term::not(Term::One)));
    }

    #[test]
    fn left_associative() {
        let t = parse_term("a | b | c").unwrap();
        assert_eq!(t, Term::or(Term::or(g("a"), g("b")), g("c")));
        assert_eq!(parse_term("~~a").unwrap(), Term::not(Term::not(g("a"))));
    }

    #[test]
    fn trailing_operator_is_an_error() {
        let e = parse_term("g0 &").unwrap_err();
        assert_eq!((e.line, e.col), (1, 5));
        let e = parse_term("g0 g1").unwrap_err();
        assert_eq!(e.col, 4);
        assert!(parse_term("(a").is_err());
        assert!(parse_term("a)").is_err());
        assert!(parse_term("2a").is_err());
        assert!(parse_term("a + b").is_err());
        assert!(parse_term("").is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["~g0 & g1 | g2", "(g0 | g1) & ~1", "a & (b & c)", "~(a | 0)"] {
            let t = parse_term(s).unwrap();
            assert_eq!(t.to_string(), s);
            assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn presentations() {
        let p = parse_presentation("gens: g0 g1\nrels: g0 & g1").unwrap();
        assert_eq!(p.gens().len(), 2);
        assert_eq!(p.rels().len(), 1);
        let p = parse_presentation("gens:\nrels: 1").unwrap();
        assert_eq!(p, Presentation::trivial());
        assert!(matches!(
            parse_presentation("gens: g0 g0\nrels:"),
            Err(SyntaxError::Algebra(BoolAlgError::DuplicateGenerator(_)))
        ));
        let p = parse_presentation("# comment\n\ngens: a\n").unwrap();
        assert!(p.rels().is_empty());
    }

    #[test]
    fn presentation_errors_carry_positions() {
        let Err(SyntaxError::Parse(e)) = parse_presentation("gens: a b\nrels: a &, b") else { panic!() };
        assert_eq!((e.line, e.col), (2, 10));
        let Err(SyntaxError::Parse(e)) = parse_presentation("gens: a 9b") else { panic!() };
        assert_eq!((e.line, e.col), (1, 9));
        assert!(matches!(parse_presentation("rels: 1"), Err(SyntaxError::Parse(_))));
        assert!(matches!(parse_presentation("gens: a\nfoo: 1"), Err(SyntaxError::Parse(_))));
        assert!(matches!(
            parse_presentation("gens: a\nrels: b"),
            Err(SyntaxError::Algebra(BoolAlgError::UnknownGenerator(_)))
        ));
    }

    #[test]
    fn image_lists() {
        let doc = Document::parse("map: g0 -> h0 & h1, g1 -> 0").unwrap();
        let m = doc.images("map").unwrap();
        assert_eq!(m["g0"], Term::and(g("h0"), g("h1")));
        assert_eq!(m["g1"], Term::Zero);
        assert!(Document::parse("map: g0 -> a, g0 -> b").unwrap().images("map").is_err());
        assert!(Document::parse("a: 1\na: 2").is_err());
    }
}
