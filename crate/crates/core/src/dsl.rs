//! Recursive-descent parser for group specifications and element words.
//!
//! ```text
//! Expr   := Atom | "DP(" Expr "," Expr ")" | "SD(" Expr "," Expr "," Action ")"
//!         | "Wr(" Expr "," Expr ")"
//! Atom   := "Cyc(" n ")" | "Dih(" n ")" | "Quat(" n ")" | "Sym(" n ")"
//!         | "Alt(" n ")" | "EA(" p "," k ")" | "MM" | "W4200"
//! Action := "pow=" r | "mats=" "[" Matrix ("," Matrix)* "]"
//! Matrix := "[" Row ("," Row)* "]"      Row := "[" int ("," int)* "]"
//! ```
//!
//! Whitespace is ignored between tokens. Positions are 1-based line and
//! column; the end of input sits one column past an implicit line
//! terminator after the last line.

use std::fmt;

use crate::construct::{GroupSpec, SdAction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AstKind {
    Atom { name: String, params: Vec<u64> },
    DP(Box<SpecAst>, Box<SpecAst>),
    SD(Box<SpecAst>, Box<SpecAst>, SdAction),
    Wr(Box<SpecAst>, Box<SpecAst>),
}

/// Parse tree with the source position of each node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecAst {
    pub kind: AstKind,
    pub span: Span,
}

const ATOMS: [(&str, usize); 8] = [
    ("Cyc", 1),
    ("Dih", 1),
    ("Quat", 1),
    ("Sym", 1),
    ("Alt", 1),
    ("EA", 2),
    ("MM", 0),
    ("W4200", 0),
];

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.chars().collect(),
            pos: 0,
            src,
        }
    }

    fn span_at(&self, pos: usize) -> Span {
        if pos >= self.chars.len() {
            let body = self.src.strip_suffix('\n').unwrap_or(self.src);
            let line = body.split('\n').count().max(1);
            let last = body.rsplit('\n').next().unwrap_or("");
            return Span {
                line,
                column: last.chars().count() + 2,
            };
        }
        let (mut line, mut column) = (1, 1);
        for &c in &self.chars[..pos] {
            if c == '\n' {
                line += 1;
                column = 1;
            } else {
                column += 1;
            }
        }
        Span { line, column }
    }

    fn error<T>(&self, pos: usize, message: impl Into<String>) -> Result<T> {
        let Span { line, column } = self.span_at(pos);
        Err(Error::Syntax {
            line,
            column,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn found(&mut self) -> String {
        match self.peek() {
            Some(c) => format!("{c:?}"),
            None => "end of input".into(),
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let found = self.found();
            self.error(self.pos, format!("expected {c:?}, found {found}"))
        }
    }

    fn ident(&mut self) -> Option<(String, usize)> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_alphanumeric() {
            self.pos += 1;
        }
        (self.pos > start).then(|| (self.chars[start..self.pos].iter().collect(), start))
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        match text.parse::<i64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                let found = self.found();
                self.error(start, format!("expected an integer, found {found}"))
            }
        }
    }

    fn natural(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        let v = self.integer()?;
        u64::try_from(v).or_else(|_| self.error(start, "expected a non-negative integer"))
    }

    fn expr(&mut self) -> Result<SpecAst> {
        let Some((name, start)) = self.ident() else {
            let found = self.found();
            return self.error(
                self.pos,
                format!("expected a group expression, found {found}"),
            );
        };
        let span = self.span_at(start);
        let kind = match name.as_str() {
            "DP" | "Wr" => {
                self.expect('(')?;
                let a = Box::new(self.expr()?);
                self.expect(',')?;
                let b = Box::new(self.expr()?);
                self.expect(')')?;
                if name == "DP" {
                    AstKind::DP(a, b)
                } else {
                    AstKind::Wr(a, b)
                }
            }
            "SD" => {
                self.expect('(')?;
                let v = Box::new(self.expr()?);
                self.expect(',')?;
                let h = Box::new(self.expr()?);
                self.expect(',')?;
                let action = self.action()?;
                self.expect(')')?;
                AstKind::SD(v, h, action)
            }
            _ => {
                let Some(&(_, arity)) = ATOMS.iter().find(|(a, _)| *a == name) else {
                    return self.error(start, format!("unknown group name {name:?}"));
                };
                let mut params = Vec::with_capacity(arity);
                if arity > 0 {
                    self.expect('(')?;
                    for i in 0..arity {
                        if i > 0 {
                            self.expect(',')?;
                        }
                        params.push(self.natural()?);
                    }
                    self.expect(')')?;
                }
                AstKind::Atom { name, params }
            }
        };
        Ok(SpecAst { kind, span })
    }

    fn action(&mut self) -> Result<SdAction> {
        let Some((key, start)) = self.ident() else {
            let found = self.found();
            return self.error(self.pos, format!("expected pow= or mats=, found {found}"));
        };
        self.expect('=')?;
        match key.as_str() {
            "pow" => Ok(SdAction::Pow(self.natural()?)),
            "mats" => {
                let mats = self.list(|p| p.list(|p| p.list(Parser::integer)))?;
                Ok(SdAction::Mats(mats))
            }
            _ => self.error(start, format!("unknown action {key:?}")),
        }
    }

    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T>) -> Result<Vec<T>> {
        self.expect('[')?;
        let mut out = vec![item(self)?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(item(self)?);
        }
        self.expect(']')?;
        Ok(out)
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.error(self.pos, format!("unexpected {c:?} after expression")),
        }
    }
}

/// Parses a specification into a tree with source spans.
pub fn parse_spec(text: &str) -> Result<SpecAst> {
    let mut p = Parser::new(text);
    let ast = p.expr()?;
    p.finish()?;
    Ok(ast)
}

/// Parses and checks a specification.
pub fn parse_group_spec(text: &str) -> Result<GroupSpec> {
    parse_spec(text)?.to_spec()
}

impl SpecAst {
    /// Lowers to a [`GroupSpec`], reporting semantic errors at node spans.
    pub fn to_spec(&self) -> Result<GroupSpec> {
        let semantic = |span: Span, message: String| Error::Semantic {
            line: span.line,
            column: span.column,
            message,
        };
        let spec = match &self.kind {
            AstKind::Atom { name, params } => match (name.as_str(), params.as_slice()) {
                ("Cyc", &[n]) => GroupSpec::Cyc(n),
                ("Dih", &[n]) => GroupSpec::Dih(n),
                ("Quat", &[n]) => GroupSpec::Quat(n),
                ("Sym", &[n]) => GroupSpec::Sym(n),
                ("Alt", &[n]) => GroupSpec::Alt(n),
                ("EA", &[p, k]) => GroupSpec::EA(p, k),
                ("MM", []) => GroupSpec::MM,
                ("W4200", []) => GroupSpec::W4200,
                _ => return Err(semantic(self.span, format!("malformed atom {name}"))),
            },
            AstKind::DP(a, b) => GroupSpec::dp(a.to_spec()?, b.to_spec()?),
            AstKind::Wr(a, b) => GroupSpec::wr(a.to_spec()?, b.to_spec()?),
            AstKind::SD(v, h, action) => {
                let base = v.to_spec()?;
                if !matches!(base, GroupSpec::Cyc(_) | GroupSpec::EA(..)) {
                    return Err(semantic(
                        v.span,
                        format!("SD base must be Cyc or EA, found {base}"),
                    ));
                }
                GroupSpec::SD(Box::new(base), Box::new(h.to_spec()?), action.clone())
            }
        };
        if let AstKind::Atom { .. } = self.kind {
            spec.validate()
                .map_err(|e| semantic(self.span, e.to_string()))?;
        } else if let AstKind::SD(..) = self.kind {
            spec.validate()
                .map_err(|e| semantic(self.span, e.to_string()))?;
        }
        Ok(spec)
    }

    /// Same tree with every span reset, for structural comparison.
    pub fn strip_spans(&self) -> SpecAst {
        let zero = Span { line: 0, column: 0 };
        let kind = match &self.kind {
            AstKind::Atom { name, params } => AstKind::Atom {
                name: name.clone(),
                params: params.clone(),
            },
            AstKind::DP(a, b) => AstKind::DP(Box::new(a.strip_spans()), Box::new(b.strip_spans())),
            AstKind::Wr(a, b) => AstKind::Wr(Box::new(a.strip_spans()), Box::new(b.strip_spans())),
            AstKind::SD(a, b, act) => AstKind::SD(
                Box::new(a.strip_spans()),
                Box::new(b.strip_spans()),
                act.clone(),
            ),
        };
        SpecAst { kind, span: zero }
    }
}

impl fmt::Display for SpecAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            AstKind::Atom { name, params } if params.is_empty() => f.write_str(name),
            AstKind::Atom { name, params } => {
                let ps: Vec<String> = params.iter().map(u64::to_string).collect();
                write!(f, "{name}({})", ps.join(","))
            }
            AstKind::DP(a, b) => write!(f, "DP({a},{b})"),
            AstKind::Wr(a, b) => write!(f, "Wr({a},{b})"),
            AstKind::SD(a, b, act) => write!(f, "SD({a},{b},{act})"),
        }
    }
}

/// Parses a word such as `g0*g1^-1*g0^2` into `(generator, exponent)` pairs.
/// `1` or `e` denotes the empty word.
pub fn parse_word(text: &str) -> Result<Vec<(usize, i64)>> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t == "1" || t == "e" || t.is_empty() {
        return Ok(Vec::new());
    }
    t.split('*')
        .map(|factor| {
            let bad = || Error::InvalidWord(format!("bad factor {factor:?} in {text:?}"));
            let rest = factor.strip_prefix('g').ok_or_else(bad)?;
            let (gen, exp) = match rest.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| bad())?),
                None => (rest, 1),
            };
            Ok((gen.parse::<usize>().map_err(|_| bad())?, exp))
        })
        .collect()
}

/// Element index of a word in the group's generators.
pub fn eval_word(g: &FiniteGroup, text: &str) -> Result<usize> {
    let mut acc = g.identity();
    for (k, e) in parse_word(text)? {
        if k >= g.generators().len() {
            return Err(Error::InvalidWord(format!(
                "generator g{k} out of range (group has {})",
                g.generators().len()
            )));
        }
        acc = g.mul(acc, g.pow(g.generator_index(k), e));
    }
    Ok(acc)
}
