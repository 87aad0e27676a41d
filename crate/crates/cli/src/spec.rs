//! Spec-file parser.
//!
//! A document is a sequence of statements separated by newlines or `;`
//! (a `;` inside brackets does not end a statement). `#` starts a comment.
//! Declarations bind a name; `check` lines name a command and its
//! arguments. Declarations may only refer to names declared earlier.
//!
//! ```text
//! chain L3
//! product P = L2 x L3
//! algebra A = gen P {(1, 1/2)}
//! algebra F = full P
//! space X = points p q
//! fuzzy a = X L3 (1, 1/2)
//! topology T = base X L3 {a, (1, 1)}
//! topology D = dual A
//! map f = X -> X {p -> q, q -> q}
//! metric d = X [0, 1; 1, 0]
//! boolean B = atoms 2
//! boolen N = B n 3 [a, a]
//! boolhom h = B -> B {a -> a, b -> b}
//! supernatural s = 2^omega*3
//! check roundtrip-algebra A
//! ```

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use mvstone::stone_n::{BoolHom, BoolIdeal, BooleNObject, FiniteBooleanAlgebra};
use mvstone::supernatural::Supernatural;
use mvstone::topology::{Distance, Metric, MvTopology};
use mvstone::{Chain, FiniteMvAlgebra, FuzzySubset, MvElement, MvError, PointMap, ProductSignature, Universe};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("{at}: syntax error: {message}")]
    Syntax { at: Location, message: String },
    #[error("{at}: `{name}` is already declared at {first}")]
    Duplicate { name: String, first: Location, at: Location },
    #[error("{at}: unresolved reference `{name}`")]
    Unresolved { name: String, at: Location },
    #[error("{at}: `{name}` is a {found}, expected a {expected}")]
    WrongKind {
        name: String,
        found: &'static str,
        expected: &'static str,
        at: Location,
    },
    #[error("{at}: {source}")]
    Invalid { at: Location, source: MvError },
}

type PResult<T> = std::result::Result<T, ParseError>;

/// How a topology was declared; families are validated when checked.
#[derive(Clone, Debug)]
pub enum TopologyDecl {
    Ready(MvTopology),
    Family {
        universe: Arc<Universe>,
        chain: Chain,
        opens: Vec<FuzzySubset>,
    },
    Base {
        universe: Arc<Universe>,
        chain: Chain,
        base: Vec<FuzzySubset>,
    },
    Dual(String),
}

#[derive(Clone, Debug)]
pub enum Object {
    Chain(Chain),
    Product(ProductSignature),
    Algebra(Arc<FiniteMvAlgebra>),
    Space(Arc<Universe>),
    Fuzzy(FuzzySubset),
    Topology(TopologyDecl),
    Map(PointMap),
    Metric(Metric),
    Boolean(FiniteBooleanAlgebra),
    BooleN(BooleNObject),
    BoolHom(BoolHom),
    Supernatural(Supernatural),
}

impl Object {
    pub fn kind(&self) -> &'static str {
        match self {
            Object::Chain(_) => "chain",
            Object::Product(_) => "product",
            Object::Algebra(_) => "algebra",
            Object::Space(_) => "space",
            Object::Fuzzy(_) => "fuzzy subset",
            Object::Topology(_) => "topology",
            Object::Map(_) => "map",
            Object::Metric(_) => "metric",
            Object::Boolean(_) => "boolean algebra",
            Object::BooleN(_) => "boolen object",
            Object::BoolHom(_) => "boolean homomorphism",
            Object::Supernatural(_) => "supernatural",
        }
    }
}

#[derive(Clone, Debug)]
pub struct Declaration {
    pub name: String,
    pub at: Location,
    pub object: Object,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub command: String,
    pub args: Vec<String>,
    pub at: Location,
}

#[derive(Clone, Debug, Default)]
pub struct SpecDocument {
    pub declarations: Vec<Declaration>,
    pub checks: Vec<Check>,
    index: BTreeMap<String, usize>,
    /// Chains referred to as `L<n>` without a declaration.
    implicit: BTreeMap<String, Object>,
}

impl SpecDocument {
    pub fn get(&self, name: &str) -> Option<&Object> {
        match self.index.get(name) {
            Some(&i) => Some(&self.declarations[i].object),
            None => self.implicit.get(name),
        }
    }

    fn add_implicit_chain(&mut self, name: &str) {
        if self.index.contains_key(name) || self.implicit.contains_key(name) {
            return;
        }
        if let Some(ch) = chain_literal(name).and_then(|n| Chain::new(n).ok()) {
            self.implicit.insert(name.to_string(), Object::Chain(ch));
        }
    }

    pub fn location_of(&self, name: &str) -> Option<Location> {
        self.index.get(name).map(|&i| self.declarations[i].at)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(u64),
    Ratio(u64, u64),
    Sym(&'static str),
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Num(n) => write!(f, "`{n}`"),
            Tok::Ratio(p, q) => write!(f, "`{p}/{q}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
        }
    }
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    at: Location,
}

const SYMBOLS: [&str; 14] = ["->", "=", "{", "}", "(", ")", "[", "]", ",", ";", "^", "*", "+", "×"];

fn is_ident_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_ident_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\'' || c == '.'
}

/// Splits the text into statements of tokens.
fn tokenize(text: &str) -> PResult<Vec<Vec<Token>>> {
    let mut statements = Vec::new();
    let mut current: Vec<Token> = Vec::new();
    let mut depth = 0usize;
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut col) = (0usize, 1usize, 1usize);
    let mut flush = |current: &mut Vec<Token>| {
        if !current.is_empty() {
            statements.push(std::mem::take(current));
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let at = Location { line, column: col };
        let advance = |n: usize, i: &mut usize, col: &mut usize| {
            *i += n;
            *col += n;
        };
        if c == '\n' {
            if depth == 0 {
                flush(&mut current);
            }
            i += 1;
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            advance(1, &mut i, &mut col);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        }
        if c == ';' && depth == 0 {
            flush(&mut current);
            advance(1, &mut i, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let p: String = chars[start..i].iter().collect();
            let p: u64 = p.parse().map_err(|_| ParseError::Syntax {
                at,
                message: "number too large".into(),
            })?;
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                let qs = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let q: String = chars[qs..i].iter().collect();
                let q: u64 = q.parse().map_err(|_| ParseError::Syntax {
                    at,
                    message: "number too large".into(),
                })?;
                if q == 0 {
                    return Err(ParseError::Syntax {
                        at,
                        message: "zero denominator".into(),
                    });
                }
                current.push(Token { tok: Tok::Ratio(p, q), at });
            } else {
                current.push(Token { tok: Tok::Num(p), at });
            }
            col += i - start;
            continue;
        }
        if is_ident_start(c) {
            let start = i;
            i += 1;
            while i < chars.len()
                && (is_ident_char(chars[i]) || (chars[i] == '-' && chars.get(i + 1).is_some_and(|d| is_ident_char(*d))))
            {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            current.push(Token { tok: Tok::Ident(s), at });
            col += i - start;
            continue;
        }
        let rest: String = chars[i..chars.len().min(i + 2)].iter().collect();
        let Some(sym) = SYMBOLS.iter().find(|s| rest.starts_with(**s)) else {
            return Err(ParseError::Syntax {
                at,
                message: format!("unexpected character `{c}`"),
            });
        };
        match *sym {
            "{" | "(" | "[" => depth += 1,
            "}" | ")" | "]" => {
                depth = depth.checked_sub(1).ok_or_else(|| ParseError::Syntax {
                    at,
                    message: format!("unbalanced `{sym}`"),
                })?
            }
            _ => {}
        }
        current.push(Token { tok: Tok::Sym(sym), at });
        let n = sym.chars().count();
        advance(n, &mut i, &mut col);
    }
    if depth != 0 {
        return Err(ParseError::Syntax {
            at: Location { line, column: col },
            message: "unclosed bracket at end of input".into(),
        });
    }
    flush(&mut current);
    Ok(statements)
}

struct Cursor<'a> {
    tokens: &'a [Token],
    pos: usize,
    end: Location,
}

impl<'a> Cursor<'a> {
    fn new(tokens: &'a [Token]) -> Self {
        let last = tokens.last().expect("statements are nonempty").at;
        Cursor {
            tokens,
            pos: 0,
            end: Location {
                line: last.line,
                column: last.column + 1,
            },
        }
    }

    fn here(&self) -> Location {
        self.tokens.get(self.pos).map_or(self.end, |t| t.at)
    }

    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn done(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn err<T>(&self, message: impl Into<String>) -> PResult<T> {
        Err(ParseError::Syntax {
            at: self.here(),
            message: message.into(),
        })
    }

    fn next(&mut self, what: &str) -> PResult<&'a Token> {
        match self.tokens.get(self.pos) {
            Some(t) => {
                self.pos += 1;
                Ok(t)
            }
            None => self.err(format!("expected {what}, found end of statement")),
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Location)> {
        let t = self.next(what)?;
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.at)),
            other => Err(ParseError::Syntax {
                at: t.at,
                message: format!("expected {what}, found {other}"),
            }),
        }
    }

    fn keyword(&mut self, kw: &str) -> PResult<()> {
        let at = self.here();
        let (s, _) = self.ident(&format!("`{kw}`"))?;
        if s != kw {
            return Err(ParseError::Syntax {
                at,
                message: format!("expected `{kw}`, found `{s}`"),
            });
        }
        Ok(())
    }

    fn sym(&mut self, sym: &str) -> PResult<()> {
        let t = self.next(&format!("`{sym}`"))?;
        match &t.tok {
            Tok::Sym(s) if *s == sym => Ok(()),
            other => Err(ParseError::Syntax {
                at: t.at,
                message: format!("expected `{sym}`, found {other}"),
            }),
        }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if self.peek() == Some(&Tok::Sym(leak(sym))) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self, what: &str) -> PResult<u64> {
        let t = self.next(what)?;
        match t.tok {
            Tok::Num(n) => Ok(n),
            ref other => Err(ParseError::Syntax {
                at: t.at,
                message: format!("expected {what}, found {other}"),
            }),
        }
    }

    /// `k/m`, or a bare integer.
    fn ratio(&mut self) -> PResult<(u64, u64, Location)> {
        let t = self.next("a value")?;
        match t.tok {
            Tok::Num(n) => Ok((n, 1, t.at)),
            Tok::Ratio(p, q) => Ok((p, q, t.at)),
            ref other => Err(ParseError::Syntax {
                at: t.at,
                message: format!("expected a value, found {other}"),
            }),
        }
    }

    fn finish(&self) -> PResult<()> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(ParseError::Syntax {
                at: t.at,
                message: format!("unexpected {} after statement", t.tok),
            }),
        }
    }

    /// `open item (, item)* close`, allowing an empty list.
    fn list<T>(&mut self, open: &str, close: &str, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.sym(open)?;
        let mut out = Vec::new();
        if self.eat(close) {
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            if self.eat(close) {
                return Ok(out);
            }
            self.sym(",")?;
        }
    }
}

fn leak(sym: &str) -> &'static str {
    SYMBOLS.iter().find(|s| **s == sym).copied().expect("known symbol")
}

fn invalid(at: Location) -> impl Fn(MvError) -> ParseError {
    move |source| ParseError::Invalid { at, source }
}

fn chain_literal(name: &str) -> Option<u32> {
    name.strip_prefix('L')?.parse().ok()
}

struct Builder {
    doc: SpecDocument,
}

impl Builder {
    fn lookup(&self, name: &str, at: Location) -> PResult<&Object> {
        self.doc.get(name).ok_or_else(|| ParseError::Unresolved {
            name: name.to_string(),
            at,
        })
    }

    fn wrong(name: &str, found: &Object, expected: &'static str, at: Location) -> ParseError {
        ParseError::WrongKind {
            name: name.to_string(),
            found: found.kind(),
            expected,
            at,
        }
    }

    fn chain(&mut self, c: &mut Cursor) -> PResult<Chain> {
        let (name, at) = c.ident("a chain name")?;
        self.doc.add_implicit_chain(&name);
        match self.lookup(&name, at)? {
            Object::Chain(ch) => Ok(*ch),
            o => Err(Self::wrong(&name, o, "chain", at)),
        }
    }

    fn signature(&mut self, c: &mut Cursor) -> PResult<ProductSignature> {
        let (name, at) = c.ident("a chain or product name")?;
        self.doc.add_implicit_chain(&name);
        match self.lookup(&name, at)? {
            Object::Chain(ch) => ProductSignature::new(vec![*ch]).map_err(invalid(at)),
            Object::Product(p) => Ok(p.clone()),
            o => Err(Self::wrong(&name, o, "chain or product", at)),
        }
    }

    fn space(&self, c: &mut Cursor) -> PResult<Arc<Universe>> {
        let (name, at) = c.ident("a space name")?;
        match self.lookup(&name, at)? {
            Object::Space(u) => Ok(u.clone()),
            o => Err(Self::wrong(&name, o, "space", at)),
        }
    }

    fn boolean(&self, c: &mut Cursor) -> PResult<FiniteBooleanAlgebra> {
        let (name, at) = c.ident("a boolean algebra name")?;
        match self.lookup(&name, at)? {
            Object::Boolean(b) => Ok(*b),
            o => Err(Self::wrong(&name, o, "boolean algebra", at)),
        }
    }

    /// A tuple `(v, …)` of values on the given grids, or a single bare value
    /// when there is one coordinate.
    fn values(c: &mut Cursor, chains: &[Chain]) -> PResult<(Vec<u32>, Location)> {
        let at = c.here();
        let raw = if c.peek() == Some(&Tok::Sym("(")) {
            c.list("(", ")", |c| c.ratio())?
        } else {
            vec![c.ratio()?]
        };
        if raw.len() != chains.len() {
            return Err(ParseError::Syntax {
                at,
                message: format!("expected {} coordinates, found {}", chains.len(), raw.len()),
            });
        }
        let values = raw
            .iter()
            .zip(chains)
            .map(|(&(p, q, vat), ch)| ch.value_of_ratio(p, q).map(|v| v.numerator()).map_err(invalid(vat)))
            .collect::<PResult<Vec<_>>>()?;
        Ok((values, at))
    }

    fn fuzzy_item(&self, c: &mut Cursor, universe: &Arc<Universe>, chain: Chain) -> PResult<FuzzySubset> {
        if let Some(Tok::Ident(_)) = c.peek() {
            let (name, at) = c.ident("a fuzzy subset")?;
            return match self.lookup(&name, at)? {
                Object::Fuzzy(f) => {
                    let f = f.to_chain(chain).ok_or_else(|| {
                        invalid(at)(MvError::OffGrid {
                            value: f.to_string(),
                            order: chain.order(),
                        })
                    })?;
                    f.with_universe(universe.clone()).map_err(invalid(at))
                }
                o => Err(Self::wrong(&name, o, "fuzzy subset", at)),
            };
        }
        let (values, at) = Self::values(c, &vec![chain; universe.len()])?;
        FuzzySubset::new(universe.clone(), chain, values).map_err(invalid(at))
    }

    fn declare(&mut self, kind: &str, c: &mut Cursor) -> PResult<()> {
        let (name, at) = c.ident("a name")?;
        if let Some(first) = self.doc.location_of(&name) {
            return Err(ParseError::Duplicate { name, first, at });
        }
        let object = match kind {
            "chain" => {
                let order = if c.eat("=") {
                    let (lit, lat) = c.ident("a chain literal like L3")?;
                    chain_literal(&lit).ok_or_else(|| ParseError::Syntax {
                        at: lat,
                        message: format!("`{lit}` is not a chain literal"),
                    })?
                } else {
                    chain_literal(&name).ok_or_else(|| ParseError::Syntax {
                        at,
                        message: format!("`{name}` is not a chain literal; write `chain {name} = L<n>`"),
                    })?
                };
                Object::Chain(Chain::new(order).map_err(invalid(at))?)
            }
            "product" => {
                c.sym("=")?;
                let mut factors = vec![self.chain(c)?];
                while matches!(c.peek(), Some(Tok::Ident(s)) if s == "x") || c.peek() == Some(&Tok::Sym("×")) {
                    c.pos += 1;
                    factors.push(self.chain(c)?);
                }
                Object::Product(ProductSignature::new(factors).map_err(invalid(at))?)
            }
            "algebra" => {
                c.sym("=")?;
                let (how, hat) = c.ident("`gen` or `full`")?;
                let sig = self.signature(c)?;
                let algebra = match how.as_str() {
                    "full" => FiniteMvAlgebra::full_product(sig),
                    "gen" => {
                        let chains = sig.factors().to_vec();
                        let gens = c.list("{", "}", |c| Self::values(c, &chains))?;
                        let gens = gens.into_iter().map(|(v, _)| MvElement(v));
                        FiniteMvAlgebra::generate(sig, gens).map_err(invalid(at))?
                    }
                    other => {
                        return Err(ParseError::Syntax {
                            at: hat,
                            message: format!("expected `gen` or `full`, found `{other}`"),
                        })
                    }
                };
                Object::Algebra(Arc::new(algebra))
            }
            "space" => {
                c.sym("=")?;
                c.keyword("points")?;
                let mut names = Vec::new();
                while !c.done() {
                    names.push(c.ident("a point name")?.0);
                }
                Object::Space(Universe::new(names).map_err(invalid(at))?)
            }
            "fuzzy" => {
                c.sym("=")?;
                let u = self.space(c)?;
                let ch = self.chain(c)?;
                Object::Fuzzy(self.fuzzy_item(c, &u, ch)?)
            }
            "topology" => {
                c.sym("=")?;
                let (how, hat) = c.ident("a topology form")?;
                if how == "dual" {
                    let (an, aat) = c.ident("an algebra name")?;
                    match self.lookup(&an, aat)? {
                        Object::Algebra(_) => Object::Topology(TopologyDecl::Dual(an)),
                        o => return Err(Self::wrong(&an, o, "algebra", aat)),
                    }
                } else {
                    let u = self.space(c)?;
                    let ch = self.chain(c)?;
                    let decl = match how.as_str() {
                        "discrete" => TopologyDecl::Ready(MvTopology::discrete(u, ch)),
                        "indiscrete" => TopologyDecl::Ready(MvTopology::indiscrete(u, ch)),
                        "full" => TopologyDecl::Ready(MvTopology::full(u, ch)),
                        "opens" | "base" => {
                            let family = c.list("{", "}", |c| self.fuzzy_item(c, &u, ch))?;
                            if how == "opens" {
                                TopologyDecl::Family {
                                    universe: u,
                                    chain: ch,
                                    opens: family,
                                }
                            } else {
                                TopologyDecl::Base {
                                    universe: u,
                                    chain: ch,
                                    base: family,
                                }
                            }
                        }
                        other => {
                            return Err(ParseError::Syntax {
                                at: hat,
                                message: format!("unknown topology form `{other}`"),
                            })
                        }
                    };
                    Object::Topology(decl)
                }
            }
            "map" => {
                c.sym("=")?;
                let src = self.space(c)?;
                c.sym("->")?;
                let dst = self.space(c)?;
                let pairs = c.list("{", "}", |c| {
                    let (x, xat) = c.ident("a source point")?;
                    c.sym("->")?;
                    let (y, yat) = c.ident("a target point")?;
                    Ok((x, xat, y, yat))
                })?;
                let mut assignment = vec![None; src.len()];
                for (x, xat, y, yat) in pairs {
                    let i = src.position(&x).ok_or(ParseError::Unresolved { name: x.clone(), at: xat })?;
                    let j = dst.position(&y).ok_or(ParseError::Unresolved { name: y, at: yat })?;
                    if assignment[i].replace(j).is_some() {
                        return Err(ParseError::Syntax {
                            at: xat,
                            message: format!("point `{x}` assigned twice"),
                        });
                    }
                }
                let assignment = assignment
                    .into_iter()
                    .enumerate()
                    .map(|(i, j)| {
                        j.ok_or_else(|| ParseError::Syntax {
                            at,
                            message: format!("point `{}` has no image", src.name(i)),
                        })
                    })
                    .collect::<PResult<Vec<_>>>()?;
                Object::Map(PointMap::new(src, dst, assignment).map_err(invalid(at))?)
            }
            "metric" => {
                c.sym("=")?;
                let u = self.space(c)?;
                c.sym("[")?;
                let mut rows = vec![Vec::new()];
                loop {
                    let (p, q, _) = c.ratio()?;
                    rows.last_mut().expect("nonempty").push(Distance::new(p, q));
                    if c.eat("]") {
                        break;
                    }
                    if c.eat(";") {
                        rows.push(Vec::new());
                    } else {
                        c.sym(",")?;
                    }
                }
                Object::Metric(Metric::new(u, rows).map_err(invalid(at))?)
            }
            "boolean" => {
                c.sym("=")?;
                c.keyword("atoms")?;
                let k = c.number("an atom count")?;
                Object::Boolean(FiniteBooleanAlgebra::new(k.min(u32::MAX as u64) as u32).map_err(invalid(at))?)
            }
            "boolen" => {
                c.sym("=")?;
                let b = self.boolean(c)?;
                c.keyword("n")?;
                let n = c.number("n")?.min(u32::MAX as u64) as u32;
                let gens = c.list("[", "]", |c| Self::bool_element(c, b))?;
                let ideals = gens.into_iter().map(|g| BoolIdeal::principal(b, g)).collect();
                Object::BooleN(BooleNObject::new(b, n, ideals).map_err(invalid(at))?)
            }
            "boolhom" => {
                c.sym("=")?;
                let from = self.boolean(c)?;
                c.sym("->")?;
                let to = self.boolean(c)?;
                let pairs = c.list("{", "}", |c| {
                    let a = Self::bool_element(c, from)?;
                    c.sym("->")?;
                    let b = Self::bool_element(c, to)?;
                    Ok((a, b))
                })?;
                let mut atoms = vec![None; from.atoms() as usize];
                for (a, b) in pairs {
                    if a.count_ones() != 1 {
                        return c.err("boolhom entries map atoms");
                    }
                    atoms[a.trailing_zeros() as usize] = Some(b);
                }
                let atoms: Option<Vec<u32>> = atoms.into_iter().collect();
                let Some(atoms) = atoms else {
                    return Err(ParseError::Syntax {
                        at,
                        message: "every atom needs an image".into(),
                    });
                };
                Object::BoolHom(BoolHom::from_atom_images(from, to, &atoms).map_err(invalid(at))?)
            }
            "supernatural" => {
                c.sym("=")?;
                let start = c.pos;
                while !c.done() {
                    c.pos += 1;
                }
                let text: String = c.tokens[start..]
                    .iter()
                    .map(|t| match &t.tok {
                        Tok::Ident(s) => s.clone(),
                        Tok::Num(n) => n.to_string(),
                        Tok::Ratio(p, q) => format!("{p}/{q}"),
                        Tok::Sym(s) => s.to_string(),
                    })
                    .collect();
                Object::Supernatural(text.parse().map_err(invalid(at))?)
            }
            _ => unreachable!("caller filters kinds"),
        };
        c.finish()?;
        self.doc.index.insert(name.clone(), self.doc.declarations.len());
        self.doc.declarations.push(Declaration { name, at, object });
        Ok(())
    }

    /// `0`, `1`, an atom letter, or a join `a+b`.
    fn bool_element(c: &mut Cursor, b: FiniteBooleanAlgebra) -> PResult<u32> {
        let at = c.here();
        let mut text = String::new();
        loop {
            match &c.next("a boolean element")?.tok {
                Tok::Ident(s) => text.push_str(s),
                Tok::Num(n) => text.push_str(&n.to_string()),
                other => {
                    return Err(ParseError::Syntax {
                        at,
                        message: format!("expected a boolean element, found {other}"),
                    })
                }
            }
            if c.eat("+") {
                text.push('+');
            } else {
                break;
            }
        }
        b.parse(&text).map_err(invalid(at))
    }
}

/// Parses a whole document; the first error stops parsing.
pub fn parse_spec(text: &str) -> PResult<SpecDocument> {
    let mut b = Builder {
        doc: SpecDocument::default(),
    };
    for statement in tokenize(text)? {
        let mut c = Cursor::new(&statement);
        let (head, at) = c.ident("a declaration or `check`")?;
        match head.as_str() {
            "check" => {
                let (command, _) = c.ident("a command name")?;
                let mut args = Vec::new();
                while !c.done() {
                    let t = c.next("an argument")?;
                    args.push(match &t.tok {
                        Tok::Ident(s) => {
                            b.doc.add_implicit_chain(s);
                            s.clone()
                        }
                        Tok::Num(n) => n.to_string(),
                        Tok::Ratio(p, q) => format!("{p}/{q}"),
                        Tok::Sym(s) => s.to_string(),
                    });
                }
                b.doc.checks.push(Check { command, args, at });
            }
            "chain" | "product" | "algebra" | "space" | "fuzzy" | "topology" | "map" | "metric" | "boolean"
            | "boolen" | "boolhom" | "supernatural" => b.declare(&head, &mut c)?,
            other => {
                return Err(ParseError::Syntax {
                    at,
                    message: format!("unknown statement `{other}`"),
                })
            }
        }
    }
    Ok(b.doc)
}
