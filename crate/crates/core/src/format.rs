//! Text format for presentations and limit specifications.
//!
//! ```text
//! # comments run to the end of the line
//! algebra A3
//! generators x=1 y=1
//! relations
//!   x^2 - 1/2*x*y
//! family t from 0
//!   x*y^t*x
//! end
//! ```
//!
//! The `relations` block holds fixed relations; each `family NAME from N
//! [to M]` header starts a block of templates `u*(w)^NAME*v` with words
//! `u, v, w`. A single `end` closes the file.

use std::fmt;

use num::{BigInt, BigRational, One, Zero};
use thiserror::Error;

use crate::algebra::{DegreeFunction, GeneratorSet, NcPolynomial, Presentation, Word};
use crate::limits::{LimitSpec, RelationFamily};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax(String),
    UnknownGenerator(String),
    DuplicateGenerator(String),
    NonPositiveDegree(String),
    ZeroRelation,
    ConstantRelation,
    BadTemplate(String),
}

impl fmt::Display for ParseErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseErrorKind::Syntax(m) => write!(f, "{m}"),
            ParseErrorKind::UnknownGenerator(g) => write!(f, "unknown generator `{g}`"),
            ParseErrorKind::DuplicateGenerator(g) => write!(f, "generator `{g}` declared twice"),
            ParseErrorKind::NonPositiveDegree(g) => write!(f, "degree of `{g}` must be positive"),
            ParseErrorKind::ZeroRelation => write!(f, "relation expands to zero"),
            ParseErrorKind::ConstantRelation => write!(f, "relation has a constant term"),
            ParseErrorKind::BadTemplate(m) => write!(f, "bad family template: {m}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{line}:{col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyDecl {
    pub param: String,
    pub templates: Vec<RelationFamily>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: Option<String>,
    pub presentation: Presentation,
    pub families: Vec<FamilyDecl>,
}

impl AlgebraFile {
    pub fn has_families(&self) -> bool {
        !self.families.is_empty()
    }

    pub fn limit_spec(&self) -> LimitSpec {
        let fams = self
            .families
            .iter()
            .flat_map(|d| d.templates.iter().cloned())
            .collect();
        LimitSpec::new(self.presentation.clone(), fams)
            .expect("templates were checked against the generators")
    }

    /// The presentation with every bounded family member added.
    pub fn finite_presentation(&self) -> Option<Presentation> {
        let spec = self.limit_spec();
        if spec.has_infinite_tail() {
            return None;
        }
        let top = spec
            .families()
            .iter()
            .filter_map(RelationFamily::end)
            .max()
            .unwrap_or(0);
        Some(crate::limits::instantiate(&spec, top))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Slash,
    Star,
    Caret,
    Plus,
    Minus,
    LParen,
    RParen,
    Eq,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    col: usize,
}

fn lex_line(line: &str, lineno: usize) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = line.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let tok = if c.is_ascii_alphabetic() || c == '_' {
            let s = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Spanned {
                tok: Tok::Ident(chars[s..i].iter().collect()),
                col,
            });
            continue;
        } else if c.is_ascii_digit() {
            let s = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[s..i].iter().collect();
            out.push(Spanned {
                tok: Tok::Int(digits.parse().expect("ascii digits")),
                col,
            });
            continue;
        } else {
            match c {
                '/' => Tok::Slash,
                '*' => Tok::Star,
                '^' => Tok::Caret,
                '+' => Tok::Plus,
                '-' => Tok::Minus,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                '=' => Tok::Eq,
                _ => {
                    return Err(ParseError {
                        line: lineno,
                        col,
                        kind: ParseErrorKind::Syntax(format!("unexpected character `{c}`")),
                    })
                }
            }
        };
        out.push(Spanned { tok, col });
        i += 1;
    }
    Ok(out)
}

const KEYWORDS: [&str; 7] = [
    "algebra",
    "generators",
    "relations",
    "family",
    "from",
    "to",
    "end",
];

#[derive(Clone, Debug)]
enum Expr {
    Num(BigRational),
    Gen(usize),
    Sum(Vec<(bool, Expr)>),
    Product(Vec<Expr>),
    Pow(Box<Expr>, Exponent, usize),
}

#[derive(Clone, Debug)]
enum Exponent {
    Int(usize),
    Param,
}

struct LineParser<'a> {
    toks: &'a [Spanned],
    pos: usize,
    line: usize,
    end_col: usize,
    gens: &'a GeneratorSet,
    param: Option<&'a str>,
}

impl LineParser<'_> {
    fn err<T>(&self, col: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError {
            line: self.line,
            col,
            kind,
        })
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.col)
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn expected<T>(&self, what: &str) -> Result<T, ParseError> {
        let found = match self.peek() {
            None => "end of line".to_string(),
            Some(t) => format!("{t:?}"),
        };
        self.err(
            self.col(),
            ParseErrorKind::Syntax(format!("expected {what}, found {found}")),
        )
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut parts = Vec::new();
        let mut neg = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                true
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            parts.push((neg, self.term()?));
            neg = match self.peek() {
                Some(Tok::Minus) => true,
                Some(Tok::Plus) => false,
                _ => break,
            };
            self.pos += 1;
        }
        Ok(if parts.len() == 1 && !parts[0].0 {
            parts.pop().expect("one part").1
        } else {
            Expr::Sum(parts)
        })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Tok::Star) {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            Expr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(k)) => {
                self.pos += 1;
                match usize::try_from(k) {
                    Ok(k) if k <= 4096 => Ok(Expr::Pow(Box::new(base), Exponent::Int(k), col)),
                    _ => self.err(col, ParseErrorKind::Syntax("exponent too large".into())),
                }
            }
            Some(Tok::Ident(name)) => {
                if self.param == Some(name.as_str()) {
                    self.pos += 1;
                    Ok(Expr::Pow(Box::new(base), Exponent::Param, col))
                } else if self.param.is_none() {
                    self.err(
                        col,
                        ParseErrorKind::Syntax(format!(
                            "parameter `{name}` outside a family block"
                        )),
                    )
                } else {
                    self.err(
                        col,
                        ParseErrorKind::Syntax(format!("unknown parameter `{name}`")),
                    )
                }
            }
            _ => self.expected("an exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            Ok(Expr::Num(BigRational::new(n, d)))
                        }
                        Some(Tok::Int(_)) => self.err(
                            self.col(),
                            ParseErrorKind::Syntax("zero denominator".into()),
                        ),
                        _ => self.expected("a denominator"),
                    }
                } else {
                    Ok(Expr::Num(BigRational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                match self.gens.index_of(&name) {
                    Some(i) => Ok(Expr::Gen(i)),
                    None => self.err(col, ParseErrorKind::UnknownGenerator(name)),
                }
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.expected("`)`");
                }
                self.pos += 1;
                Ok(e)
            }
            _ => self.expected("a generator, number or `(`"),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        if self.pos < self.toks.len() {
            return self.expected("end of line");
        }
        Ok(())
    }
}

fn eval(e: &Expr, line: usize) -> Result<NcPolynomial, ParseError> {
    Ok(match e {
        Expr::Num(q) => NcPolynomial::from_terms([(Word::empty(), q.clone())]),
        Expr::Gen(i) => NcPolynomial::word(Word::letter(*i)),
        Expr::Sum(parts) => {
            let mut acc = NcPolynomial::zero();
            for (neg, p) in parts {
                let v = eval(p, line)?;
                acc = if *neg { &acc - &v } else { &acc + &v };
            }
            acc
        }
        Expr::Product(fs) => {
            let mut acc = NcPolynomial::one();
            for f in fs {
                acc = &acc * &eval(f, line)?;
            }
            acc
        }
        Expr::Pow(b, Exponent::Int(k), _) => {
            let b = eval(b, line)?;
            (0..*k).fold(NcPolynomial::one(), |acc, _| &acc * &b)
        }
        Expr::Pow(_, Exponent::Param, col) => {
            return Err(ParseError {
                line,
                col: *col,
                kind: ParseErrorKind::Syntax(
                    "the parameter may only be the exponent of a top-level factor".into(),
                ),
            })
        }
    })
}

/// Word with coefficient one, if `p` is one.
fn as_word(p: &NcPolynomial) -> Option<Word> {
    let mut it = p.terms();
    let (w, c) = it.next()?;
    (it.next().is_none() && c.is_one()).then(|| w.clone())
}

fn template(e: &Expr, line: usize, col: usize) -> Result<(Word, Word, Word), ParseError> {
    let bad = |m: &str| ParseError {
        line,
        col,
        kind: ParseErrorKind::BadTemplate(m.into()),
    };
    let factors: Vec<&Expr> = match e {
        Expr::Product(fs) => fs.iter().collect(),
        Expr::Sum(_) => return Err(bad("templates must be words")),
        other => vec![other],
    };
    let mut parts: Vec<Word> = vec![Word::empty()];
    let mut block = None;
    for f in factors {
        if let Expr::Pow(b, Exponent::Param, _) = f {
            if block.is_some() {
                return Err(bad("the parameter may appear only once"));
            }
            let w =
                as_word(&eval(b, line)?).ok_or_else(|| bad("the repeated block must be a word"))?;
            if w.is_empty() {
                return Err(bad("the repeated block must be nonempty"));
            }
            block = Some(w);
            parts.push(Word::empty());
        } else {
            let w = as_word(&eval(f, line)?).ok_or_else(|| bad("templates must be words"))?;
            let last = parts.last_mut().expect("nonempty");
            *last = last.concat(&w);
        }
    }
    match block {
        Some(b) => Ok((parts[0].clone(), b, parts[1].clone())),
        None => Err(bad("the family parameter does not appear")),
    }
}

struct Line {
    no: usize,
    toks: Vec<Spanned>,
    end_col: usize,
}

fn keyword(l: &Line) -> Option<&str> {
    match l.toks.first() {
        Some(Spanned {
            tok: Tok::Ident(s), ..
        }) if KEYWORDS.contains(&s.as_str()) => Some(s.as_str()),
        _ => None,
    }
}

fn syntax<T>(line: usize, col: usize, m: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        col,
        kind: ParseErrorKind::Syntax(m.into()),
    })
}

fn int_at(l: &Line, i: usize, what: &str) -> Result<u64, ParseError> {
    match l.toks.get(i) {
        Some(Spanned {
            tok: Tok::Int(n),
            col,
        }) => {
            u64::try_from(n.clone()).or_else(|_| syntax(l.no, *col, format!("{what} out of range")))
        }
        Some(t) => syntax(l.no, t.col, format!("expected {what}")),
        None => syntax(l.no, l.end_col, format!("expected {what}")),
    }
}

fn ident_at<'a>(l: &'a Line, i: usize, what: &str) -> Result<&'a str, ParseError> {
    match l.toks.get(i) {
        Some(Spanned {
            tok: Tok::Ident(s),
            col,
        }) => {
            if KEYWORDS.contains(&s.as_str()) {
                syntax(
                    l.no,
                    *col,
                    format!("keyword `{s}` cannot be used as {what}"),
                )
            } else {
                Ok(s)
            }
        }
        Some(t) => syntax(l.no, t.col, format!("expected {what}")),
        None => syntax(l.no, l.end_col, format!("expected {what}")),
    }
}

fn parse_generators(l: &Line) -> Result<(GeneratorSet, DegreeFunction), ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut weights = Vec::new();
    let mut i = 1;
    while i < l.toks.len() {
        let col = l.toks[i].col;
        let name = ident_at(l, i, "a generator name")?.to_string();
        if names.contains(&name) {
            return Err(ParseError {
                line: l.no,
                col,
                kind: ParseErrorKind::DuplicateGenerator(name),
            });
        }
        if l.toks.get(i + 1).map(|t| &t.tok) != Some(&Tok::Eq) {
            let c = l.toks.get(i + 1).map_or(l.end_col, |t| t.col);
            return syntax(l.no, c, "expected `=`");
        }
        i += 2;
        let negative = l.toks.get(i).map(|t| &t.tok) == Some(&Tok::Minus);
        if negative {
            i += 1;
        }
        let num = BigInt::from(int_at(l, i, "a degree")?);
        i += 1;
        let den = if l.toks.get(i).map(|t| &t.tok) == Some(&Tok::Slash) {
            let d = int_at(l, i + 1, "a denominator")?;
            i += 2;
            BigInt::from(d)
        } else {
            BigInt::one()
        };
        if negative || num.is_zero() || den.is_zero() {
            return Err(ParseError {
                line: l.no,
                col,
                kind: ParseErrorKind::NonPositiveDegree(name),
            });
        }
        names.push(name);
        weights.push(BigRational::new(num, den));
    }
    if names.is_empty() {
        return syntax(l.no, l.end_col, "at least one generator is required");
    }
    let gens = GeneratorSet::new(names).expect("names are distinct and nonempty");
    let deg = DegreeFunction::new(&gens, weights).expect("weights are positive");
    Ok((gens, deg))
}

fn parse_relation(l: &Line, gens: &GeneratorSet) -> Result<NcPolynomial, ParseError> {
    let mut p = LineParser {
        toks: &l.toks,
        pos: 0,
        line: l.no,
        end_col: l.end_col,
        gens,
        param: None,
    };
    let e = p.expr()?;
    p.finish()?;
    let poly = eval(&e, l.no)?;
    let col = l.toks[0].col;
    if poly.is_zero() {
        return Err(ParseError {
            line: l.no,
            col,
            kind: ParseErrorKind::ZeroRelation,
        });
    }
    if poly.coefficient(&Word::empty()).is_some() {
        return Err(ParseError {
            line: l.no,
            col,
            kind: ParseErrorKind::ConstantRelation,
        });
    }
    Ok(poly)
}

pub fn parse(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let toks = lex_line(raw, i + 1)?;
        if !toks.is_empty() {
            lines.push(Line {
                no: i + 1,
                toks,
                end_col: raw.chars().count() + 1,
            });
        }
    }
    let eof_line = text.lines().count().max(1);
    let mut it = lines.iter().peekable();

    let mut name = None;
    if let Some(l) = it.peek() {
        if keyword(l) == Some("algebra") {
            let n = ident_at(l, 1, "an algebra name")?;
            if l.toks.len() > 2 {
                return syntax(l.no, l.toks[2].col, "expected end of line");
            }
            name = Some(n.to_string());
            it.next();
        }
    }

    let (gens, deg) = match it.next() {
        Some(l) if keyword(l) == Some("generators") => parse_generators(l)?,
        Some(l) => return syntax(l.no, l.toks[0].col, "expected `generators`"),
        None => return syntax(eof_line, 1, "expected `generators`"),
    };

    match it.next() {
        Some(l) if keyword(l) == Some("relations") && l.toks.len() == 1 => {}
        Some(l) => return syntax(l.no, l.toks[0].col, "expected `relations`"),
        None => return syntax(eof_line, 1, "expected `relations`"),
    }

    let mut relations = Vec::new();
    let mut families: Vec<FamilyDecl> = Vec::new();
    let mut current: Option<(String, u64, Option<u64>)> = None;
    loop {
        let Some(l) = it.next() else {
            return syntax(eof_line, 1, "missing `end`");
        };
        match keyword(l) {
            Some("end") => {
                if l.toks.len() > 1 {
                    return syntax(l.no, l.toks[1].col, "expected end of line");
                }
                if let Some(extra) = it.next() {
                    return syntax(extra.no, extra.toks[0].col, "text after `end`");
                }
                break;
            }
            Some("family") => {
                let param = ident_at(l, 1, "a parameter name")?.to_string();
                if gens.index_of(&param).is_some() {
                    return syntax(
                        l.no,
                        l.toks[1].col,
                        format!("parameter `{param}` shadows a generator"),
                    );
                }
                if !matches!(l.toks.get(2), Some(Spanned { tok: Tok::Ident(s), .. }) if s == "from")
                {
                    return syntax(
                        l.no,
                        l.toks.get(2).map_or(l.end_col, |t| t.col),
                        "expected `from`",
                    );
                }
                let start = int_at(l, 3, "a start value")?;
                let end = match l.toks.get(4) {
                    None => None,
                    Some(Spanned {
                        tok: Tok::Ident(s), ..
                    }) if s == "to" => {
                        let e = int_at(l, 5, "an end value")?;
                        if let Some(t) = l.toks.get(6) {
                            return syntax(l.no, t.col, "expected end of line");
                        }
                        if e < start {
                            return syntax(l.no, l.toks[5].col, "family range is empty");
                        }
                        Some(e)
                    }
                    Some(t) => return syntax(l.no, t.col, "expected `to` or end of line"),
                };
                families.push(FamilyDecl {
                    param: param.clone(),
                    templates: Vec::new(),
                });
                current = Some((param, start, end));
            }
            Some(k) if k != "to" && k != "from" => {
                return syntax(l.no, l.toks[0].col, format!("unexpected `{k}`"));
            }
            _ => match &current {
                None => relations.push(parse_relation(l, &gens)?),
                Some((param, start, end)) => {
                    let mut p = LineParser {
                        toks: &l.toks,
                        pos: 0,
                        line: l.no,
                        end_col: l.end_col,
                        gens: &gens,
                        param: Some(param),
                    };
                    let e = p.expr()?;
                    p.finish()?;
                    let col = l.toks[0].col;
                    let (u, b, v) = template(&e, l.no, col)?;
                    let fam =
                        RelationFamily::new(u, b, v, *start, *end).map_err(|err| ParseError {
                            line: l.no,
                            col,
                            kind: ParseErrorKind::BadTemplate(err.to_string()),
                        })?;
                    families
                        .last_mut()
                        .expect("inside a family")
                        .templates
                        .push(fam);
                }
            },
        }
    }
    if let Some(d) = families.iter().find(|d| d.templates.is_empty()) {
        let l = lines
            .iter()
            .find(|l| {
                keyword(l) == Some("family")
                    && matches!(&l.toks[1].tok, Tok::Ident(s) if *s == d.param)
            })
            .expect("header exists");
        return syntax(l.no, l.toks[0].col, "family block has no templates");
    }
    let presentation = Presentation::new(gens, deg, relations).expect("relations were validated");
    Ok(AlgebraFile {
        name,
        presentation,
        families,
    })
}

fn word_text(w: &Word, g: &GeneratorSet) -> String {
    w.display(g).to_string()
}

impl fmt::Display for AlgebraFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g = self.presentation.generators();
        if let Some(n) = &self.name {
            writeln!(f, "algebra {n}")?;
        }
        write!(f, "generators")?;
        for (i, name) in g.names().iter().enumerate() {
            write!(f, " {name}={}", self.presentation.degrees().weight(i))?;
        }
        writeln!(f)?;
        writeln!(f, "relations")?;
        for r in self.presentation.relations() {
            writeln!(f, "  {}", r.display(g))?;
        }
        for d in &self.families {
            let Some(first) = d.templates.first() else {
                continue;
            };
            write!(f, "family {} from {}", d.param, first.start())?;
            if let Some(e) = first.end() {
                write!(f, " to {e}")?;
            }
            writeln!(f)?;
            for t in &d.templates {
                let mut parts = Vec::new();
                if !t.prefix().is_empty() {
                    parts.push(word_text(t.prefix(), g));
                }
                let block = word_text(t.block(), g);
                if t.block().len() == 1 {
                    parts.push(format!("{block}^{}", d.param));
                } else {
                    parts.push(format!("({block})^{}", d.param));
                }
                if !t.suffix().is_empty() {
                    parts.push(word_text(t.suffix(), g));
                }
                writeln!(f, "  {}", parts.join("*"))?;
            }
        }
        writeln!(f, "end")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn parses_weighted_monomial_algebra() {
        let a =
            parse("algebra M\ngenerators x=2 y=2 z=1\nrelations\n x*x\n y*y\n x*z\nend").unwrap();
        assert_eq!(a.name.as_deref(), Some("M"));
        let p = &a.presentation;
        assert_eq!(p.degrees().weights(), &[q(2, 1), q(2, 1), q(1, 1)]);
        assert_eq!(p.relation_degrees(), vec![q(4, 1), q(4, 1), q(3, 1)]);
        assert!(!a.has_families());
    }

    #[test]
    fn free_algebra_without_header() {
        let a = parse("generators x=1\nrelations\nend\n").unwrap();
        assert!(a.name.is_none());
        assert!(a.presentation.relations().is_empty());
    }

    #[test]
    fn expressions_expand() {
        let a = parse("generators x=1 y=1/2\nrelations\n (x - y)^2 + 1/2*x*y   # c\n -(x*y)^2*x + 2*y^0*x\nend").unwrap();
        let g = a.presentation.generators();
        let shown: Vec<String> = a
            .presentation
            .relations()
            .iter()
            .map(|r| r.display(g).to_string())
            .collect();
        assert_eq!(shown, ["x*x - 1/2*x*y - y*x + y*y", "2*x - x*y*x*y*x"]);
        assert_eq!(a.presentation.degrees().weight(1), &q(1, 2));
    }

    #[test]
    fn family_blocks() {
        let a = parse("algebra E\ngenerators x=1 y=1\nrelations\nfamily t from 0\n x*y^t*x\nend")
            .unwrap();
        assert_eq!(a.families.len(), 1);
        let s = a.limit_spec();
        assert!(s.has_infinite_tail());
        assert_eq!(crate::limits::instantiate(&s, 1).relations().len(), 2);

        let b = parse(
            "generators x=1 y=1\nrelations\n x*x\nfamily s from 1 to 3\n x*(x*y)^s*y\n y^s*x\nend",
        )
        .unwrap();
        let t = &b.families[0].templates;
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].block(), &Word::new(vec![0, 1]));
        assert_eq!(t[1].end(), Some(3));
        assert_eq!(b.finite_presentation().unwrap().relations().len(), 7);
    }

    fn err(text: &str) -> ParseError {
        parse(text).unwrap_err()
    }

    #[test]
    fn positioned_errors() {
        let e = err("generators x=1\nrelations\n x*w\nend");
        assert_eq!((e.line, e.col), (3, 4));
        assert_eq!(e.kind, ParseErrorKind::UnknownGenerator("w".into()));

        let e = err("generators x=0\nrelations\nend");
        assert_eq!(e.kind, ParseErrorKind::NonPositiveDegree("x".into()));
        assert_eq!((e.line, e.col), (1, 12));

        assert_eq!(
            err("generators x=1\nrelations\n x - x\nend").kind,
            ParseErrorKind::ZeroRelation
        );
        assert_eq!(
            err("generators x=1\nrelations\n x + 1\nend").kind,
            ParseErrorKind::ConstantRelation
        );
        assert_eq!(
            err("generators x=1 x=2\nrelations\nend").kind,
            ParseErrorKind::DuplicateGenerator("x".into())
        );
        let e = err("generators x=1\nrelations\n x*(x\nend");
        assert_eq!((e.line, e.col), (3, 6));
        assert!(matches!(e.kind, ParseErrorKind::Syntax(_)));
        assert_eq!(err("generators x=1\nrelations\n x").line, 3);
        assert_eq!(err("generators x=1\nrelations\n x^t\nend").line, 3);
        assert!(matches!(
            err("generators x=1 y=1\nrelations\nfamily t from 0\n x^t + y\nend").kind,
            ParseErrorKind::BadTemplate(_)
        ));
        assert!(matches!(
            err("generators x=1 y=1\nrelations\nfamily t from 0\n x^t*y^t\nend").kind,
            ParseErrorKind::BadTemplate(_)
        ));
        assert_eq!(err("generators x=1\nrelations\n x $ x\nend").col, 4);
        assert_eq!(err("generators x=1\nrelations\nend\nx").line, 4);
    }

    #[test]
    fn pretty_print_round_trips() {
        let texts = [
            "algebra M\ngenerators x=2 y=2 z=1\nrelations\n x*x\n y*y\n x*z\nend",
            "generators x=1 y=1/3\nrelations\n (x - 2*y)^2 - 1/7*y*x\nend",
            "generators x=1 y=1\nrelations\n x^2\nfamily t from 2 to 5\n x*(y*x)^t*y\n y^t\nfamily u from 0\n x*y^u*x*x\nend",
        ];
        for t in texts {
            let a = parse(t).unwrap();
            let printed = a.to_string();
            assert_eq!(parse(&printed).unwrap(), a, "{printed}");
        }
    }
}
