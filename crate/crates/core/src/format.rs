//! Line-oriented instance files.
//!
//! ```text
//! format_version 1
//! kind curves
//! seed 7
//! generator segments n=3 side=100
//! end_header
//! curve 0 red 1/2 3/1 7/1 2/3
//! ground 0 0/1 0/1 0/1 10/1
//! end
//! ```
//!
//! Rationals are always written reduced as `p/q` with `q > 0`. Body records
//! depend on the kind: `curve` and `ground` for curves, `vertices` and `edge`
//! for graphs, `point` and `dedge` for drawings. Blank lines and lines
//! starting with `#` are skipped.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::geom::{Color, CurveFamily, PolylineCurve, RPoint, Rational};
use crate::graph::SimpleGraph;
use crate::topo::TopoDrawing;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Curves,
    Graph,
    Drawing,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Curves => "curves",
            Kind::Graph => "graph",
            Kind::Drawing => "drawing",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Generator {
    pub name: String,
    /// `key=value` pairs in file order.
    pub params: Vec<(String, String)>,
}

impl Generator {
    pub fn new(name: &str, params: &[(&str, String)]) -> Self {
        Generator {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
        }
    }

    pub fn param(&self, key: &str) -> Option<&str> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Header {
    pub format_version: u32,
    pub seed: Option<u64>,
    pub generator: Option<Generator>,
}

impl Default for Header {
    fn default() -> Self {
        Header { format_version: FORMAT_VERSION, seed: None, generator: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Curves(CurveFamily),
    Graph(SimpleGraph),
    Drawing(TopoDrawing),
}

impl Instance {
    pub fn kind(&self) -> Kind {
        match self {
            Instance::Curves(_) => Kind::Curves,
            Instance::Graph(_) => Kind::Graph,
            Instance::Drawing(_) => Kind::Drawing,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub header: Header,
    pub body: Instance,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Unknown header keys and record types are errors; rationals must be
    /// canonical.
    #[default]
    Strict,
    /// Unknown keys and records are skipped; rationals may be unreduced or
    /// bare integers.
    Lenient,
}

impl InstanceFile {
    pub fn new(body: Instance) -> Self {
        InstanceFile { header: Header::default(), body }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.header.seed = Some(seed);
        self
    }

    pub fn with_generator(mut self, g: Generator) -> Self {
        self.header.generator = Some(g);
        self
    }

    pub fn kind(&self) -> Kind {
        self.body.kind()
    }
}

pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn push_point(out: &mut String, p: &RPoint) {
    let _ = write!(out, " {} {}", format_rational(&p.x), format_rational(&p.y));
}

fn push_curve(out: &mut String, c: &PolylineCurve) {
    for p in c.vertices() {
        push_point(out, p);
    }
}

pub fn serialize(file: &InstanceFile) -> String {
    let mut out = String::new();
    let h = &file.header;
    let _ = writeln!(out, "format_version {}", h.format_version);
    let _ = writeln!(out, "kind {}", file.kind().name());
    if let Some(s) = h.seed {
        let _ = writeln!(out, "seed {s}");
    }
    if let Some(g) = &h.generator {
        out.push_str("generator ");
        out.push_str(&g.name);
        for (k, v) in &g.params {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
    }
    out.push_str("end_header\n");
    match &file.body {
        Instance::Curves(f) => {
            for (i, c) in f.curves.iter().enumerate() {
                let color = match f.color_of(i) {
                    Some(Color::Red) => "red",
                    Some(Color::Blue) => "blue",
                    None => "-",
                };
                let _ = write!(out, "curve {} {color}", c.id);
                push_curve(&mut out, c);
                out.push('\n');
            }
            if let Some((g1, g2)) = &f.grounds {
                for g in [g1, g2] {
                    let _ = write!(out, "ground {}", g.id);
                    push_curve(&mut out, g);
                    out.push('\n');
                }
            }
        }
        Instance::Graph(g) => {
            let _ = writeln!(out, "vertices {}", g.n());
            for (u, v) in g.edges() {
                let _ = writeln!(out, "edge {u} {v}");
            }
        }
        Instance::Drawing(d) => {
            for (i, p) in d.points.iter().enumerate() {
                let _ = write!(out, "point {i}");
                push_point(&mut out, p);
                out.push('\n');
            }
            for (i, e) in d.edges.iter().enumerate() {
                let _ = write!(out, "dedge {i} {} {}", e.u, e.v);
                push_curve(&mut out, &e.curve);
                out.push('\n');
            }
        }
    }
    out.push_str("end\n");
    out
}

/// Whitespace-separated token with its 1-based column.
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

struct Line<'a> {
    no: usize,
    toks: Vec<Tok<'a>>,
    /// Column just past the last character, for "missing field" errors.
    end: usize,
}

impl<'a> Line<'a> {
    fn split(no: usize, raw: &'a str) -> Self {
        let mut toks = Vec::new();
        let mut start = None;
        for (i, ch) in raw.char_indices() {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    toks.push(Tok { text: &raw[s..i], col: raw[..s].chars().count() + 1 });
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(s) = start {
            toks.push(Tok { text: &raw[s..], col: raw[..s].chars().count() + 1 });
        }
        Line { no, toks, end: raw.chars().count() + 1 }
    }

    fn err(&self, k: usize, msg: impl Into<String>) -> Error {
        let col = self.toks.get(k).map_or(self.end, |t| t.col);
        Error::parse(self.no, col, msg)
    }

    fn tok(&self, k: usize, what: &str) -> Result<&'a str> {
        self.toks.get(k).map(|t| t.text).ok_or_else(|| self.err(k, format!("missing {what}")))
    }

    fn uint<T: std::str::FromStr>(&self, k: usize, what: &str) -> Result<T> {
        let t = self.tok(k, what)?;
        if !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.err(k, format!("{what} must be a non-negative integer, got {t:?}")));
        }
        t.parse().map_err(|_| self.err(k, format!("{what} out of range: {t:?}")))
    }

    fn exact_len(&self, want: usize) -> Result<()> {
        if self.toks.len() > want {
            return Err(self.err(want, "unexpected trailing field"));
        }
        Ok(())
    }

    fn rational(&self, k: usize, mode: Mode) -> Result<Rational> {
        let t = self.tok(k, "coordinate")?;
        parse_rational(t, mode).map_err(|m| self.err(k, m))
    }

    /// Points from field `from` to the end of the line.
    fn points(&self, from: usize, mode: Mode) -> Result<Vec<RPoint>> {
        let rest = self.toks.len().saturating_sub(from);
        if rest % 2 == 1 {
            return Err(self.err(self.toks.len(), "odd number of coordinates"));
        }
        (0..rest / 2)
            .map(|i| Ok(RPoint::new(self.rational(from + 2 * i, mode)?, self.rational(from + 2 * i + 1, mode)?)))
            .collect()
    }
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses `p/q`; lenient mode also accepts a bare integer and unreduced
/// fractions.
pub fn parse_rational(s: &str, mode: Mode) -> std::result::Result<Rational, String> {
    let (p, q) = match s.split_once('/') {
        Some((p, q)) => (p, Some(q)),
        None => (s, None),
    };
    let num = parse_int(p).ok_or_else(|| format!("bad numerator in {s:?}"))?;
    let den = match q {
        Some(q) => parse_int(q).ok_or_else(|| format!("bad denominator in {s:?}"))?,
        None if mode == Mode::Lenient => BigInt::one(),
        None => return Err(format!("expected p/q, got {s:?}")),
    };
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    let r = Rational::new(num.clone(), den.clone());
    if mode == Mode::Strict && (den.is_negative() || *r.numer() != num || *r.denom() != den) {
        return Err(format!("{s:?} is not in lowest terms with positive denominator"));
    }
    Ok(r)
}

fn curve(line: &Line, id: usize, from: usize, mode: Mode) -> Result<PolylineCurve> {
    let pts = line.points(from, mode)?;
    PolylineCurve::new(id, pts).map_err(|e| line.err(from, e.to_string()))
}

pub fn parse(text: &str) -> Result<InstanceFile> {
    parse_with(text, Mode::Strict)
}

pub fn parse_with(text: &str, mode: Mode) -> Result<InstanceFile> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| Line::split(i + 1, raw))
        .filter(|l| l.toks.first().is_some_and(|t| !t.text.starts_with('#')));
    let last_line = text.lines().count().max(1);
    let eof = |what: &str| Error::parse(last_line, 1, format!("unexpected end of file: {what}"));

    let first = lines.next().ok_or_else(|| eof("missing format_version"))?;
    if first.tok(0, "key")? != "format_version" {
        return Err(first.err(0, "file must start with format_version"));
    }
    let version: u32 = first.uint(1, "format_version")?;
    first.exact_len(2)?;
    if version != FORMAT_VERSION {
        return Err(first.err(1, format!("format_version {version} is not supported (expected {FORMAT_VERSION})")));
    }

    let mut header = Header { format_version: version, seed: None, generator: None };
    let mut kind = None;
    loop {
        let line = lines.next().ok_or_else(|| eof("missing end_header"))?;
        let key = line.tok(0, "key")?;
        let dup = |seen: bool| if seen { Err(line.err(0, format!("duplicate header key {key}"))) } else { Ok(()) };
        match key {
            "end_header" => {
                line.exact_len(1)?;
                break;
            }
            "kind" => {
                dup(kind.is_some())?;
                kind = Some(match line.tok(1, "kind")? {
                    "curves" => Kind::Curves,
                    "graph" => Kind::Graph,
                    "drawing" => Kind::Drawing,
                    other => return Err(line.err(1, format!("unknown kind {other:?}"))),
                });
                line.exact_len(2)?;
            }
            "seed" => {
                dup(header.seed.is_some())?;
                header.seed = Some(line.uint(1, "seed")?);
                line.exact_len(2)?;
            }
            "generator" => {
                dup(header.generator.is_some())?;
                let mut g = Generator { name: line.tok(1, "generator name")?.to_string(), params: Vec::new() };
                for k in 2..line.toks.len() {
                    let (key, value) = line.toks[k]
                        .text
                        .split_once('=')
                        .ok_or_else(|| line.err(k, "generator parameter must be key=value"))?;
                    if key.is_empty() {
                        return Err(line.err(k, "empty generator parameter name"));
                    }
                    g.params.push((key.to_string(), value.to_string()));
                }
                header.generator = Some(g);
            }
            "format_version" => return Err(line.err(0, "duplicate header key format_version")),
            _ if mode == Mode::Lenient => {}
            _ => return Err(line.err(0, format!("unknown header key {key:?}"))),
        }
    }
    let kind = kind.ok_or_else(|| Error::parse(first.no, 1, "header has no kind"))?;

    let mut curves = Vec::new();
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut grounds = Vec::new();
    let mut vertices: Option<usize> = None;
    let mut edges = Vec::new();
    let mut points = Vec::new();
    let mut dedges = Vec::new();
    let mut ended = false;
    for line in lines.by_ref() {
        let rec = line.tok(0, "record")?;
        match (kind, rec) {
            (_, "end") => {
                line.exact_len(1)?;
                ended = true;
                break;
            }
            (Kind::Curves, "curve") => {
                let id = line.uint(1, "curve id")?;
                colors.push(match line.tok(2, "color")? {
                    "red" => Some(Color::Red),
                    "blue" => Some(Color::Blue),
                    "-" => None,
                    other => return Err(line.err(2, format!("color must be red, blue or -, got {other:?}"))),
                });
                curves.push(curve(&line, id, 3, mode)?);
            }
            (Kind::Curves, "ground") => {
                if grounds.len() == 2 {
                    return Err(line.err(0, "more than two grounds"));
                }
                let id = line.uint(1, "ground id")?;
                grounds.push(curve(&line, id, 2, mode)?);
            }
            (Kind::Graph, "vertices") => {
                if vertices.is_some() {
                    return Err(line.err(0, "duplicate vertices record"));
                }
                vertices = Some(line.uint(1, "vertex count")?);
                line.exact_len(2)?;
            }
            (Kind::Graph, "edge") => {
                let n = vertices.ok_or_else(|| line.err(0, "edge before vertices"))?;
                let (u, v): (usize, usize) = (line.uint(1, "endpoint")?, line.uint(2, "endpoint")?);
                line.exact_len(3)?;
                if u >= n || v >= n || u == v {
                    return Err(line.err(1, format!("edge {u} {v} is not a pair of distinct vertices below {n}")));
                }
                edges.push((u, v));
            }
            (Kind::Drawing, "point") => {
                let i: usize = line.uint(1, "point index")?;
                if i != points.len() {
                    return Err(line.err(1, format!("expected point {}", points.len())));
                }
                let p = line.points(2, mode)?;
                if p.len() != 1 {
                    return Err(line.err(2, "point needs exactly two coordinates"));
                }
                points.extend(p);
            }
            (Kind::Drawing, "dedge") => {
                let i: usize = line.uint(1, "edge index")?;
                if i != dedges.len() {
                    return Err(line.err(1, format!("expected edge {}", dedges.len())));
                }
                let (u, v): (usize, usize) = (line.uint(2, "endpoint")?, line.uint(3, "endpoint")?);
                if u >= points.len() || v >= points.len() {
                    return Err(line.err(2, "edge names a point not yet declared"));
                }
                dedges.push((u, v, curve(&line, i, 4, mode)?));
            }
            _ if mode == Mode::Lenient => {}
            _ => return Err(line.err(0, format!("record {rec:?} is not allowed in a {} file", kind.name()))),
        }
    }
    if !ended {
        return Err(eof("missing end"));
    }
    if let Some(extra) = lines.next() {
        return Err(extra.err(0, "content after end"));
    }

    let body = match kind {
        Kind::Curves => {
            let mut f = CurveFamily::new(curves);
            if colors.iter().any(Option::is_some) {
                let all: Option<Vec<Color>> = colors.into_iter().collect();
                let all = all.ok_or_else(|| Error::parse(last_line, 1, "either every curve has a color or none does"))?;
                f = f.with_colors(all)?;
            }
            match grounds.len() {
                0 => {}
                2 => {
                    let g2 = grounds.pop().expect("two");
                    let g1 = grounds.pop().expect("two");
                    f = f.with_grounds(g1, g2);
                }
                _ => return Err(Error::parse(last_line, 1, "grounds come in pairs")),
            }
            Instance::Curves(f)
        }
        Kind::Graph => {
            let n = vertices.ok_or_else(|| eof("graph has no vertices record"))?;
            Instance::Graph(SimpleGraph::from_edges(n, edges)?)
        }
        Kind::Drawing => Instance::Drawing(TopoDrawing::new(points, dedges)?),
    };
    Ok(InstanceFile { header, body })
}
