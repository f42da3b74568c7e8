//! Text format for root data:
//!
//! ```text
//! # comment
//! name: SL2
//! rank: 1
//! coroots: [[1], [-1]]
//! roots: [[2], [-2]]
//! simple: [0]
//! ```
//!
//! Values may span lines. Every field is required exactly once.

use std::fmt;

use metacover::root_data::BasedRootDatum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Word(String),
    Int(i64),
    Open,
    Close,
    Comma,
    Colon,
    Newline,
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

fn tokenize(text: &str) -> Result<Vec<Spanned>, ParseError> {
    let mut out = Vec::new();
    for (li, raw) in text.lines().enumerate() {
        let line = li + 1;
        let chars: Vec<char> = raw.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let column = i + 1;
            let push = |out: &mut Vec<Spanned>, tok| out.push(Spanned { tok, line, column });
            match c {
                '#' => break,
                c if c.is_whitespace() => i += 1,
                '[' | ']' | ',' | ':' => {
                    push(&mut out, match c {
                        '[' => Tok::Open,
                        ']' => Tok::Close,
                        ',' => Tok::Comma,
                        _ => Tok::Colon,
                    });
                    i += 1;
                }
                '-' | '0'..='9' => {
                    let start = i;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let s: String = chars[start..i].iter().collect();
                    let v = s.parse().map_err(|_| err(line, column, format!("bad integer {s:?}")))?;
                    push(&mut out, Tok::Int(v));
                }
                c if c.is_alphanumeric() || c == '_' => {
                    let start = i;
                    while i < chars.len() && (chars[i].is_alphanumeric() || "_^.+".contains(chars[i])) {
                        i += 1;
                    }
                    push(&mut out, Tok::Word(chars[start..i].iter().collect()));
                }
                c => return Err(err(line, column, format!("unexpected character {c:?}"))),
            }
        }
        out.push(Spanned { tok: Tok::Newline, line, column: chars.len() + 1 });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
    end: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.toks.get(self.pos)
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.end, |t| (t.line, t.column))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (l, c) = self.here();
        Err(err(l, c, message))
    }

    fn skip_newlines(&mut self) {
        while matches!(self.peek(), Some(Spanned { tok: Tok::Newline, .. })) {
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        self.skip_newlines();
        match self.peek() {
            Some(t) if t.tok == want => {
                self.pos += 1;
                Ok(())
            }
            _ => self.fail(format!("expected {what}")),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_newlines();
        match self.peek().map(|t| t.tok.clone()) {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(v)
            }
            _ => self.fail("expected an integer"),
        }
    }

    /// `[a, b, ...]` of items read by `item`.
    fn list<T>(&mut self, mut item: impl FnMut(&mut Self) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
        self.expect(Tok::Open, "'['")?;
        let mut out = Vec::new();
        self.skip_newlines();
        if matches!(self.peek(), Some(Spanned { tok: Tok::Close, .. })) {
            self.pos += 1;
            return Ok(out);
        }
        loop {
            out.push(item(self)?);
            self.skip_newlines();
            match self.peek().map(|t| t.tok.clone()) {
                Some(Tok::Comma) => self.pos += 1,
                Some(Tok::Close) => {
                    self.pos += 1;
                    return Ok(out);
                }
                _ => return self.fail("expected ',' or ']'"),
            }
        }
    }

    fn vectors(&mut self) -> Result<(Vec<Vec<i64>>, Vec<(usize, usize)>), ParseError> {
        let mut spots = Vec::new();
        let v = self.list(|p| {
            p.skip_newlines();
            spots.push(p.here());
            p.list(Parser::int)
        })?;
        Ok((v, spots))
    }
}

/// Parses the text form. Structural consistency (lengths, indices) is checked
/// here; the root datum axioms are left to `validate`.
pub fn parse_root_datum(text: &str) -> Result<BasedRootDatum, ParseError> {
    let toks = tokenize(text)?;
    let lines = text.lines().count();
    let mut p = Parser { toks, pos: 0, end: (lines.max(1), text.lines().last().map_or(0, |l| l.chars().count()) + 1) };
    let mut name = None;
    let mut rank: Option<(i64, (usize, usize))> = None;
    let mut coroots = None;
    let mut roots = None;
    let mut simple = None;
    loop {
        p.skip_newlines();
        let Some(t) = p.peek().cloned() else { break };
        let Tok::Word(key) = t.tok else {
            return p.fail("expected a field name");
        };
        p.pos += 1;
        p.expect(Tok::Colon, "':'")?;
        let at = (t.line, t.column);
        let dup = |set: bool| if set { Err(err(at.0, at.1, format!("duplicate field {key:?}"))) } else { Ok(()) };
        match key.as_str() {
            "name" => {
                dup(name.is_some())?;
                p.skip_newlines();
                name = Some(match p.peek().map(|t| t.tok.clone()) {
                    Some(Tok::Word(w)) => w,
                    Some(Tok::Int(v)) => v.to_string(),
                    _ => return p.fail("expected a name"),
                });
                p.pos += 1;
            }
            "rank" => {
                dup(rank.is_some())?;
                p.skip_newlines();
                let here = p.here();
                rank = Some((p.int()?, here));
            }
            "coroots" => {
                dup(coroots.is_some())?;
                coroots = Some(p.vectors()?);
            }
            "roots" => {
                dup(roots.is_some())?;
                roots = Some(p.vectors()?);
            }
            "simple" => {
                dup(simple.is_some())?;
                p.skip_newlines();
                let here = p.here();
                simple = Some((p.list(Parser::int)?, here));
            }
            _ => return Err(err(at.0, at.1, format!("unknown field {key:?}"))),
        }
        match p.peek().map(|t| t.tok.clone()) {
            None | Some(Tok::Newline) => {}
            _ => return p.fail("expected end of line"),
        }
    }
    let (l, c) = p.end;
    let missing = |f: &str| err(l, c, format!("missing field {f:?}"));
    let name = name.ok_or_else(|| missing("name"))?;
    let (rank, rank_at) = rank.ok_or_else(|| missing("rank"))?;
    let (coroots, coroot_spots) = coroots.ok_or_else(|| missing("coroots"))?;
    let (roots, root_spots) = roots.ok_or_else(|| missing("roots"))?;
    let (simple, simple_at) = simple.ok_or_else(|| missing("simple"))?;
    if rank < 0 {
        return Err(err(rank_at.0, rank_at.1, "rank must be nonnegative"));
    }
    let r = rank as usize;
    for (vs, spots, what) in [(&coroots, &coroot_spots, "coroot"), (&roots, &root_spots, "root")] {
        for (k, (v, at)) in vs.iter().zip(spots).enumerate() {
            if v.len() != r {
                return Err(err(at.0, at.1, format!("{what} {k} has length {} but rank is {r}", v.len())));
            }
        }
    }
    if coroots.len() != roots.len() {
        let at = root_spots.first().copied().unwrap_or(p.end);
        return Err(err(at.0, at.1, format!("{} coroots but {} roots", coroots.len(), roots.len())));
    }
    let simple: Vec<usize> = simple
        .into_iter()
        .map(|k| usize::try_from(k).ok().filter(|&k| k < coroots.len()))
        .collect::<Option<_>>()
        .ok_or_else(|| err(simple_at.0, simple_at.1, "simple index out of range"))?;
    Ok(BasedRootDatum { name, rank: r, coroots, roots, simple })
}

fn vec_text(v: &[i64]) -> String {
    format!("[{}]", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
}

fn vecs_text(vs: &[Vec<i64>]) -> String {
    format!("[{}]", vs.iter().map(|v| vec_text(v)).collect::<Vec<_>>().join(", "))
}

/// The text form read by [`parse_root_datum`].
pub fn format_root_datum(rd: &BasedRootDatum) -> String {
    let simple: Vec<i64> = rd.simple.iter().map(|&k| k as i64).collect();
    format!(
        "name: {}\nrank: {}\ncoroots: {}\nroots: {}\nsimple: {}\n",
        rd.name,
        rd.rank,
        vecs_text(&rd.coroots),
        vecs_text(&rd.roots),
        vec_text(&simple)
    )
}

/// A bracketed integer vector, or a bare comma-separated one.
pub fn parse_int_list(text: &str) -> Result<Vec<i64>, ParseError> {
    let t = text.trim();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| err(1, 1, format!("bad integer {:?}", s.trim()))))
        .collect()
}

/// A square integer matrix `[[..], [..]]`.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<i64>>, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, pos: 0, end: (1, 1) };
    let (m, _) = p.vectors()?;
    p.skip_newlines();
    if p.peek().is_some() {
        return p.fail("trailing input after matrix");
    }
    Ok(m)
}
