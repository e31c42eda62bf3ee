//! Line-oriented diagram files.
//!
//! ```text
//! # cable of degree 2
//! name "cable 2"
//! companion twist-spun 2 trefoil
//! pattern unknot
//! component c1
//! component c2
//! band t1 from c1.0 to c2.0 word "" twists 1
//! gamma word "c1 c2" framing 0
//! ```
//!
//! A letter is a component id; a trailing `'` or an uppercase first
//! character marks the inverse. Sites may be omitted, in which case they
//! are appended in order of appearance.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use gluck_core::fiber::SeifertMatrix;
use gluck_core::satellite::{CompanionDescriptor, KnotSpec, PatternKind};
use gluck_core::{Band, BandedUnlink, Component, Endpoint, Letter, MarkedCurve, Word};
use thiserror::Error;

/// A parsed diagram plus optional metadata.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiagramFile {
    pub name: Option<String>,
    pub diagram: BandedUnlink,
    pub companion: Option<CompanionDescriptor>,
    pub pattern: Option<PatternKind>,
}

impl DiagramFile {
    pub fn new(diagram: BandedUnlink) -> Self {
        DiagramFile { diagram, ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown reference: {0}")]
    UnknownReference(String),
    #[error("duplicate definition: {0}")]
    Duplicate(String),
    #[error("bad twist count: {0}")]
    BadTwists(String),
    #[error("bad attachment site: {0}")]
    BadSite(String),
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

/// Error with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone)]
struct Token {
    text: String,
    col: usize,
    quoted: bool,
}

type PResult<T> = std::result::Result<T, ParseError>;

fn err<T>(line: usize, column: usize, kind: ParseErrorKind) -> PResult<T> {
    Err(ParseError { line, column, kind })
}

fn tokenize(line_no: usize, line: &str) -> PResult<Vec<Token>> {
    let chars: Vec<char> = line.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c == '#' {
            break;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '"' {
            let start = i;
            i += 1;
            let mut text = String::new();
            while i < chars.len() && chars[i] != '"' {
                text.push(chars[i]);
                i += 1;
            }
            if i == chars.len() {
                return err(line_no, start + 1, ParseErrorKind::Syntax("unterminated string".into()));
            }
            i += 1;
            out.push(Token { text, col: start + 1, quoted: true });
            continue;
        }
        let start = i;
        let mut text = String::new();
        while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '"' && chars[i] != '#' {
            text.push(chars[i]);
            i += 1;
        }
        out.push(Token { text, col: start + 1, quoted: false });
    }
    Ok(out)
}

fn is_component_id(s: &str) -> bool {
    let mut it = s.chars();
    matches!(it.next(), Some(c) if c.is_ascii_lowercase())
        && it.all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '-')
}

fn is_label(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || "_-()+,.".contains(c))
}

struct PendingBand {
    line: usize,
    name: String,
    ends: [(usize, Option<(usize, usize)>); 2],
    core: Word,
    twists: u32,
}

struct Cursor<'a> {
    line: usize,
    toks: &'a [Token],
    pos: usize,
    eol_col: usize,
}

impl<'a> Cursor<'a> {
    fn next(&mut self, what: &str) -> PResult<&'a Token> {
        match self.toks.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
            None => err(self.line, self.eol_col, ParseErrorKind::Syntax(format!("expected {what}"))),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let t = self.next(&format!("`{kw}`"))?;
        if t.quoted || t.text != kw {
            return err(self.line, t.col, ParseErrorKind::Syntax(format!("expected `{kw}`, found `{}`", t.text)));
        }
        Ok(())
    }

    fn peek_is(&self, kw: &str) -> bool {
        self.toks.get(self.pos).is_some_and(|t| !t.quoted && t.text == kw)
    }

    fn quoted(&mut self, what: &str) -> PResult<&'a Token> {
        let t = self.next(what)?;
        if !t.quoted {
            return err(self.line, t.col, ParseErrorKind::Syntax(format!("expected quoted {what}")));
        }
        Ok(t)
    }

    fn finish(&self) -> PResult<()> {
        match self.toks.get(self.pos) {
            Some(t) => err(self.line, t.col, ParseErrorKind::Syntax(format!("unexpected `{}`", t.text))),
            None => Ok(()),
        }
    }
}

struct Parser {
    file: DiagramFile,
    bands: Vec<PendingBand>,
    gamma_seen: bool,
}

impl Parser {
    fn component(&self, line: usize, t: &Token) -> PResult<usize> {
        self.file
            .diagram
            .component_index(&t.text)
            .map_or_else(|| err(line, t.col, ParseErrorKind::UnknownReference(format!("component `{}`", t.text))), Ok)
    }

    fn word(&self, line: usize, t: &Token) -> PResult<Word> {
        let mut w = Word::empty();
        let mut offset = 0;
        for piece in t.text.split(' ') {
            let col = t.col + 1 + offset;
            offset += piece.chars().count() + 1;
            if piece.is_empty() {
                continue;
            }
            let (id, inverse) = if let Some(base) = piece.strip_suffix('\'') {
                (base.to_string(), true)
            } else if piece.starts_with(|c: char| c.is_ascii_uppercase()) {
                let mut s = piece.to_string();
                s[..1].make_ascii_lowercase();
                (s, true)
            } else {
                (piece.to_string(), false)
            };
            let gen = self.file.diagram.component_index(&id).map_or_else(
                || err(line, col, ParseErrorKind::UnknownReference(format!("component `{id}` in word"))),
                Ok,
            )?;
            w.push(if inverse { Letter::neg(gen) } else { Letter::pos(gen) });
        }
        Ok(w)
    }

    fn endpoint(&self, line: usize, t: &Token) -> PResult<(usize, Option<(usize, usize)>)> {
        let (comp, site) = match t.text.split_once('.') {
            Some((c, s)) => (c, Some(s)),
            None => (t.text.as_str(), None),
        };
        let c = self.component(line, &Token { text: comp.into(), col: t.col, quoted: false })?;
        let site = match site {
            Some(s) => {
                let col = t.col + comp.chars().count() + 1;
                let v = s
                    .parse::<usize>()
                    .map_or_else(|_| err(line, col, ParseErrorKind::BadSite(format!("`{s}` is not a site index"))), Ok)?;
                Some((v, col))
            }
            None => None,
        };
        Ok((c, site))
    }

    fn int(line: usize, t: &Token) -> PResult<i64> {
        t.text
            .parse::<i64>()
            .map_or_else(|_| err(line, t.col, ParseErrorKind::Syntax(format!("expected an integer, found `{}`", t.text))), Ok)
    }

    fn label(line: usize, t: &Token) -> PResult<String> {
        if t.quoted || !is_label(&t.text) {
            return err(line, t.col, ParseErrorKind::Syntax(format!("bad label `{}`", t.text)));
        }
        Ok(t.text.clone())
    }

    fn statement(&mut self, cur: &mut Cursor) -> PResult<()> {
        let line = cur.line;
        let head = cur.next("a keyword")?;
        match head.text.as_str() {
            "name" => {
                let t = cur.next("a name")?;
                if self.file.name.is_some() {
                    return err(line, head.col, ParseErrorKind::Duplicate("name".into()));
                }
                self.file.name = Some(t.text.clone());
            }
            "component" => {
                let t = cur.next("a component id")?;
                if t.quoted || !is_component_id(&t.text) {
                    return err(
                        line,
                        t.col,
                        ParseErrorKind::Syntax(format!("component ids start with a lowercase letter: `{}`", t.text)),
                    );
                }
                if self.file.diagram.component_index(&t.text).is_some() {
                    return err(line, t.col, ParseErrorKind::Duplicate(format!("component `{}`", t.text)));
                }
                self.file.diagram.add_component(t.text.clone());
            }
            "band" => {
                let id = cur.next("a band id")?;
                if id.quoted || !is_label(&id.text) {
                    return err(line, id.col, ParseErrorKind::Syntax(format!("bad band id `{}`", id.text)));
                }
                if self.bands.iter().any(|b| b.name == id.text) {
                    return err(line, id.col, ParseErrorKind::Duplicate(format!("band `{}`", id.text)));
                }
                cur.keyword("from")?;
                let from = self.endpoint(line, cur.next("an endpoint")?)?;
                cur.keyword("to")?;
                let to = self.endpoint(line, cur.next("an endpoint")?)?;
                let mut core = Word::empty();
                if cur.peek_is("word") {
                    cur.keyword("word")?;
                    core = self.word(line, cur.quoted("word")?)?;
                }
                let mut twists = 0;
                if cur.peek_is("twists") {
                    cur.keyword("twists")?;
                    let t = cur.next("a twist count")?;
                    twists = t.text.parse::<u32>().map_or_else(
                        |_| err(line, t.col, ParseErrorKind::BadTwists(format!("`{}` is not a non-negative integer", t.text))),
                        Ok,
                    )?;
                }
                self.bands.push(PendingBand { line, name: id.text.clone(), ends: [from, to], core, twists });
            }
            "gamma" => {
                if self.gamma_seen {
                    return err(line, head.col, ParseErrorKind::Duplicate("gamma".into()));
                }
                self.gamma_seen = true;
                cur.keyword("word")?;
                let word = self.word(line, cur.quoted("word")?)?;
                let mut framing = 0;
                if cur.peek_is("framing") {
                    cur.keyword("framing")?;
                    framing = Self::int(line, cur.next("a framing")?)?;
                }
                self.file.diagram.gamma = Some(MarkedCurve::new(word, framing));
            }
            "companion" => {
                if self.file.companion.is_some() {
                    return err(line, head.col, ParseErrorKind::Duplicate("companion".into()));
                }
                let kind = cur.next("a companion kind")?;
                let c = match kind.text.as_str() {
                    "unknot" => CompanionDescriptor::Unknot,
                    "twist-spun" => {
                        let n = cur.next("a twist")?;
                        let twist = n.text.parse::<usize>().map_or_else(
                            |_| err(line, n.col, ParseErrorKind::Syntax(format!("bad twist `{}`", n.text))),
                            Ok,
                        )?;
                        let k = cur.next("a knot")?;
                        let knot = if !k.quoted && k.text == "matrix" {
                            let m = cur.quoted("matrix")?;
                            KnotSpec::Matrix(parse_matrix(&m.text).map_or_else(
                                |e| err(line, m.col, ParseErrorKind::Invalid(e)),
                                Ok,
                            )?)
                        } else {
                            KnotSpec::Named(k.text.parse().map_or_else(
                                |e: gluck_core::Error| err(line, k.col, ParseErrorKind::Invalid(e.to_string())),
                                Ok,
                            )?)
                        };
                        CompanionDescriptor::TwistSpun { twist, knot }
                    }
                    "ribbon" => CompanionDescriptor::Ribbon { label: Self::label(line, cur.next("a label")?)? },
                    "opaque" => CompanionDescriptor::Opaque { label: Self::label(line, cur.next("a label")?)? },
                    other => {
                        return err(line, kind.col, ParseErrorKind::Syntax(format!("unknown companion kind `{other}`")))
                    }
                };
                self.file.companion = Some(c);
            }
            "pattern" => {
                if self.file.pattern.is_some() {
                    return err(line, head.col, ParseErrorKind::Duplicate("pattern".into()));
                }
                let kind = cur.next("a pattern kind")?;
                let p = match kind.text.as_str() {
                    "unknot" => PatternKind::Unknot,
                    "ribbon" => PatternKind::Ribbon { label: Self::label(line, cur.next("a label")?)? },
                    "twist-spun" => PatternKind::TwistSpun { label: Self::label(line, cur.next("a label")?)? },
                    "opaque" => PatternKind::Opaque { label: Self::label(line, cur.next("a label")?)? },
                    other => {
                        return err(line, kind.col, ParseErrorKind::Syntax(format!("unknown pattern kind `{other}`")))
                    }
                };
                self.file.pattern = Some(p);
            }
            other => {
                return err(line, head.col, ParseErrorKind::Syntax(format!("unknown statement `{other}`")));
            }
        }
        cur.finish()
    }

    /// Assigns omitted sites and builds the bands.
    fn resolve_bands(&mut self) -> PResult<()> {
        let n = self.file.diagram.num_components();
        let mut explicit: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        for b in &self.bands {
            for &(c, site) in &b.ends {
                if let Some((s, col)) = site {
                    if !explicit[c].insert(s) {
                        return err(b.line, col, ParseErrorKind::BadSite(format!("site {s} used twice")));
                    }
                }
            }
        }
        let mut count = vec![0usize; n];
        for b in &self.bands {
            for &(c, _) in &b.ends {
                count[c] += 1;
            }
        }
        let mut next = vec![0usize; n];
        for b in &self.bands {
            let mut ends = [Endpoint { component: 0, site: 0 }; 2];
            for (k, &(c, site)) in b.ends.iter().enumerate() {
                let s = match site {
                    Some((s, col)) => {
                        if s >= count[c] {
                            return err(
                                b.line,
                                col,
                                ParseErrorKind::BadSite(format!("site {s} out of range: component has {} sites", count[c])),
                            );
                        }
                        s
                    }
                    None => {
                        while explicit[c].contains(&next[c]) {
                            next[c] += 1;
                        }
                        let s = next[c];
                        next[c] += 1;
                        s
                    }
                };
                ends[k] = Endpoint { component: c, site: s };
            }
            self.file.diagram.bands.push(Band {
                name: b.name.clone(),
                start: ends[0],
                end: ends[1],
                core: b.core.clone(),
                half_twists: b.twists,
            });
        }
        Ok(())
    }
}

fn parse_matrix(s: &str) -> Result<SeifertMatrix, String> {
    let rows: Vec<Vec<i64>> = s
        .split(';')
        .map(|r| r.split_whitespace().map(|x| x.parse::<i64>().map_err(|_| format!("bad entry `{x}`"))).collect())
        .collect::<Result<_, _>>()?;
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    SeifertMatrix::from_i64(&refs).map_err(|e| e.to_string())
}

fn print_matrix(v: &SeifertMatrix) -> String {
    v.matrix()
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Parses a diagram file.
pub fn parse(text: &str) -> Result<DiagramFile, ParseError> {
    let mut p = Parser { file: DiagramFile::default(), bands: Vec::new(), gamma_seen: false };
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let toks = tokenize(line, raw)?;
        if toks.is_empty() {
            continue;
        }
        let mut cur = Cursor { line, toks: &toks, pos: 0, eol_col: raw.chars().count() + 1 };
        p.statement(&mut cur)?;
    }
    p.resolve_bands()?;
    if let Err(e) = p.file.diagram.validate() {
        return err(1, 1, ParseErrorKind::Invalid(e.to_string()));
    }
    Ok(p.file)
}

/// A word spelled with component ids.
pub fn word_text(d: &BandedUnlink, w: &Word) -> String {
    w.letters()
        .iter()
        .map(|l| {
            let name = &d.components[l.gen].name;
            if l.inverse {
                format!("{name}'")
            } else {
                name.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Prints a diagram file; `parse(&print(f)) == f` for every valid file.
pub fn print(f: &DiagramFile) -> String {
    let d = &f.diagram;
    let mut out = String::new();
    if let Some(n) = &f.name {
        let _ = writeln!(out, "name \"{n}\"");
    }
    if let Some(c) = &f.companion {
        let text = match c {
            CompanionDescriptor::Unknot => "unknot".to_string(),
            CompanionDescriptor::TwistSpun { twist, knot: KnotSpec::Named(k) } => format!("twist-spun {twist} {k}"),
            CompanionDescriptor::TwistSpun { twist, knot: KnotSpec::Matrix(v) } => {
                format!("twist-spun {twist} matrix \"{}\"", print_matrix(v))
            }
            CompanionDescriptor::Ribbon { label } => format!("ribbon {label}"),
            CompanionDescriptor::Opaque { label } => format!("opaque {label}"),
        };
        let _ = writeln!(out, "companion {text}");
    }
    if let Some(p) = &f.pattern {
        let text = match p {
            PatternKind::Unknot => "unknot".to_string(),
            PatternKind::Ribbon { label } => format!("ribbon {label}"),
            PatternKind::TwistSpun { label } => format!("twist-spun {label}"),
            PatternKind::Opaque { label } => format!("opaque {label}"),
        };
        let _ = writeln!(out, "pattern {text}");
    }
    for Component { name } in &d.components {
        let _ = writeln!(out, "component {name}");
    }
    for b in &d.bands {
        let _ = writeln!(
            out,
            "band {} from {}.{} to {}.{} word \"{}\" twists {}",
            b.name,
            d.components[b.start.component].name,
            b.start.site,
            d.components[b.end.component].name,
            b.end.site,
            word_text(d, &b.core),
            b.half_twists
        );
    }
    if let Some(g) = &d.gamma {
        let _ = writeln!(out, "gamma word \"{}\" framing {}", word_text(d, &g.word), g.framing);
    }
    out
}
