//! Line-oriented text formats for groups, actions, binary tables, fields and
//! Malcev tables.
//!
//! Tokens are whitespace-separated; a token starting with `#` begins a
//! comment. Every file opens with `kind <group|action|binary|field|malcev>`.
//! Emission is canonical, so `emit(parse(emit(v))) == emit(v)`.

use std::collections::HashMap;

use thiserror::Error;

use crate::actions::{Action, ActionDomain, BinaryActionTable};
use crate::carriers::{Endofunction, FiniteSet};
use crate::fields::{verify_field, ActionField, PointwiseKind};
use crate::groups::{catalog, FiniteGroup, VectorGroup};
use crate::malcev::MalcevStructure;

/// A parse diagnostic at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {rule}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub rule: String,
}

/// Any value the formats describe.
#[derive(Clone, Debug)]
pub enum Structure {
    Group(FiniteGroup),
    Action(Action),
    Binary(BinaryActionTable),
    Field(ActionField),
    Malcev(MalcevStructure),
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Group(_) => "group",
            Structure::Action(_) => "action",
            Structure::Binary(_) => "binary",
            Structure::Field(_) => "field",
            Structure::Malcev(_) => "malcev",
        }
    }
}

const DEFAULT_CARRIER_NAME: &str = "X";
const DEFAULT_SET_NAME: &str = "G";

#[derive(Clone, Copy)]
struct Tok<'a> {
    line: usize,
    column: usize,
    text: &'a str,
}

struct Line<'a> {
    toks: Vec<Tok<'a>>,
}

fn lex(text: &str) -> Vec<Line<'_>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let mut toks = Vec::new();
        let mut start = None;
        let mut col_of_start = 0;
        let mut col = 0;
        let mut comment = false;
        for (b, ch) in raw.char_indices() {
            col += 1;
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    toks.push(Tok {
                        line: i + 1,
                        column: col_of_start,
                        text: &raw[s..b],
                    });
                }
            } else if start.is_none() {
                if ch == '#' {
                    comment = true;
                    break;
                }
                start = Some(b);
                col_of_start = col;
            }
        }
        if !comment {
            if let Some(s) = start {
                toks.push(Tok {
                    line: i + 1,
                    column: col_of_start,
                    text: &raw[s..],
                });
            }
        }
        if !toks.is_empty() {
            out.push(Line { toks });
        }
    }
    out
}

fn err_at(t: Tok<'_>, rule: impl Into<String>) -> ParseError {
    ParseError {
        line: t.line,
        column: t.column,
        rule: rule.into(),
    }
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = lex(text);
        let last_line = text.lines().count().max(1);
        Cursor {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn peek_keyword(&self) -> Option<&'a str> {
        self.peek().map(|l| l.toks[0].text)
    }

    fn eof_error(&self, rule: impl Into<String>) -> ParseError {
        ParseError {
            line: self.last_line + 1,
            column: 1,
            rule: rule.into(),
        }
    }

    /// Next line, which must start with `keyword`; returns the remaining tokens.
    fn expect(&mut self, keyword: &str) -> Result<(Tok<'a>, Vec<Tok<'a>>), ParseError> {
        let Some(line) = self.lines.get(self.pos) else {
            return Err(self.eof_error(format!("expected `{keyword}`, found end of input")));
        };
        let head = line.toks[0];
        if head.text != keyword {
            return Err(err_at(head, format!("expected `{keyword}`, found `{}`", head.text)));
        }
        self.pos += 1;
        Ok((head, line.toks[1..].to_vec()))
    }

    fn optional(&mut self, keyword: &str) -> Result<Option<(Tok<'a>, Vec<Tok<'a>>)>, ParseError> {
        if self.peek_keyword() == Some(keyword) {
            self.expect(keyword).map(Some)
        } else {
            Ok(None)
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.peek() {
            None => Ok(()),
            Some(l) => Err(err_at(
                l.toks[0],
                format!("unexpected `{}` after the last block", l.toks[0].text),
            )),
        }
    }
}

fn single<'a>(head: Tok<'a>, rest: &[Tok<'a>]) -> Result<Tok<'a>, ParseError> {
    match rest {
        [t] => Ok(*t),
        [] => Err(err_at(head, format!("`{}` needs one argument", head.text))),
        [_, extra, ..] => Err(err_at(*extra, format!("`{}` takes one argument", head.text))),
    }
}

fn labels_of<'a>(head: Tok<'a>, rest: &[Tok<'a>]) -> Result<Vec<&'a str>, ParseError> {
    if rest.is_empty() {
        return Err(err_at(head, format!("`{}` needs at least one label", head.text)));
    }
    let mut seen = HashMap::new();
    for t in rest {
        if t.text == ":" {
            return Err(err_at(*t, "`:` is not a valid label"));
        }
        if seen.insert(t.text, ()).is_some() {
            return Err(err_at(*t, format!("duplicate label `{}`", t.text)));
        }
    }
    Ok(rest.iter().map(|t| t.text).collect())
}

fn finite_set(head: Tok<'_>, name: &str, labels: &[&str]) -> Result<FiniteSet, ParseError> {
    FiniteSet::new(name, labels.iter().copied()).map_err(|e| err_at(head, e.to_string()))
}

fn lookup(set: &FiniteSet, t: Tok<'_>, what: &str) -> Result<usize, ParseError> {
    set.index_of(t.text)
        .ok_or_else(|| err_at(t, format!("unknown {what} `{}`", t.text)))
}

/// Splits `<key…> : <values…>` and resolves both sides.
fn keyed_row<'a>(
    head: Tok<'a>,
    rest: &[Tok<'a>],
    keys: &[(&FiniteSet, &str)],
    values: (&FiniteSet, &str, usize),
) -> Result<(Vec<usize>, Vec<usize>), ParseError> {
    let k = keys.len();
    if rest.len() < k + 1 || rest[k].text != ":" {
        let at = rest.get(k).copied().unwrap_or(*rest.last().unwrap_or(&head));
        return Err(err_at(at, format!("`{}` needs {k} key label(s) then `:`", head.text)));
    }
    let key = keys
        .iter()
        .zip(&rest[..k])
        .map(|((set, what), t)| lookup(set, *t, what))
        .collect::<Result<Vec<_>, _>>()?;
    let vals = &rest[k + 1..];
    let (set, what, count) = values;
    if vals.len() != count {
        let at = vals.get(count).copied().unwrap_or(*rest.last().unwrap_or(&head));
        return Err(err_at(at, format!("expected {count} value(s), found {}", vals.len())));
    }
    let v = vals
        .iter()
        .map(|t| lookup(set, *t, what))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((key, v))
}

fn parse_kind<'a>(c: &mut Cursor<'a>) -> Result<(Tok<'a>, &'a str), ParseError> {
    let (head, rest) = c.expect("kind")?;
    let t = single(head, &rest)?;
    match t.text {
        "group" | "action" | "binary" | "field" | "malcev" => Ok((t, t.text)),
        other => Err(err_at(t, format!("unknown kind `{other}`"))),
    }
}

pub fn parse(text: &str) -> Result<Structure, ParseError> {
    let mut c = Cursor::new(text);
    let (_, kind) = parse_kind(&mut c)?;
    let s = match kind {
        "group" => Structure::Group(group_body(&mut c)?),
        "action" => Structure::Action(action_body(&mut c)?),
        "binary" => Structure::Binary(binary_body(&mut c)?),
        "field" => Structure::Field(field_body(&mut c)?),
        "malcev" => Structure::Malcev(malcev_body(&mut c)?),
        _ => unreachable!("kind validated"),
    };
    c.finish()?;
    Ok(s)
}

fn wrong_kind(text: &str, want: &str, found: &str) -> ParseError {
    let col = text
        .lines()
        .find(|l| l.trim_start().starts_with("kind"))
        .and_then(|l| l.find(found))
        .map_or(1, |b| b + 1);
    ParseError {
        line: 1,
        column: col,
        rule: format!("expected kind `{want}`, found `{found}`"),
    }
}

macro_rules! typed_parser {
    ($name:ident, $variant:ident, $ty:ty, $kind:literal) => {
        pub fn $name(text: &str) -> Result<$ty, ParseError> {
            match parse(text)? {
                Structure::$variant(v) => Ok(v),
                other => Err(wrong_kind(text, $kind, other.kind())),
            }
        }
    };
}

typed_parser!(parse_group, Group, FiniteGroup, "group");
typed_parser!(parse_action, Action, Action, "action");
typed_parser!(parse_binary, Binary, BinaryActionTable, "binary");
typed_parser!(parse_field, Field, ActionField, "field");
typed_parser!(parse_malcev, Malcev, MalcevStructure, "malcev");

fn group_body(c: &mut Cursor<'_>) -> Result<FiniteGroup, ParseError> {
    let (nh, nr) = c.expect("name")?;
    let name = single(nh, &nr)?;
    let (eh, er) = c.expect("elements")?;
    let labels = labels_of(eh, &er)?;
    let set = finite_set(eh, name.text, &labels)?;
    let (ih, ir) = c.expect("identity")?;
    let id_tok = single(ih, &ir)?;
    let declared = lookup(&set, id_tok, "element")?;
    let n = set.len();
    let mut rows: Vec<Option<Vec<usize>>> = vec![None; n];
    for _ in 0..n {
        let (rh, rr) = c.expect("row")?;
        let (key, vals) = keyed_row(rh, &rr, &[(&set, "element")], (&set, "element", n))?;
        if rows[key[0]].is_some() {
            return Err(err_at(rr[0], format!("duplicate row `{}`", rr[0].text)));
        }
        rows[key[0]] = Some(vals);
    }
    let rows: Vec<Vec<usize>> = rows.into_iter().map(|r| r.expect("n distinct rows")).collect();
    let g = FiniteGroup::validate(set, rows).map_err(|e| err_at(nh, format!("invalid group: {e}")))?;
    if g.identity() != declared {
        return Err(err_at(
            id_tok,
            format!(
                "declared identity `{}` is not the identity `{}`",
                id_tok.text,
                g.label(g.identity())
            ),
        ));
    }
    Ok(g)
}

/// `group <catalog name>` or `group inline` … `end`.
fn group_ref(c: &mut Cursor<'_>) -> Result<FiniteGroup, ParseError> {
    let (head, rest) = c.expect("group")?;
    let t = single(head, &rest)?;
    if t.text == "inline" {
        let g = group_body(c)?;
        c.expect("end")?;
        Ok(g)
    } else {
        catalog(t.text).map_err(|e| err_at(t, e.to_string()))
    }
}

fn domain_ref(c: &mut Cursor<'_>) -> Result<ActionDomain, ParseError> {
    if c.peek_keyword() == Some("set_name") || c.peek_keyword() == Some("set") {
        let name = match c.optional("set_name")? {
            Some((h, r)) => single(h, &r)?.text,
            None => DEFAULT_SET_NAME,
        };
        let (sh, sr) = c.expect("set")?;
        let labels = labels_of(sh, &sr)?;
        Ok(ActionDomain::Set(finite_set(sh, name, &labels)?))
    } else {
        Ok(ActionDomain::Group(group_ref(c)?))
    }
}

fn carrier(c: &mut Cursor<'_>) -> Result<(Tok<'static>, FiniteSet), ParseError> {
    let name = match c.optional("carrier_name")? {
        Some((h, r)) => single(h, &r)?.text.to_string(),
        None => DEFAULT_CARRIER_NAME.to_string(),
    };
    let (ch, cr) = c.expect("carrier")?;
    let labels = labels_of(ch, &cr)?;
    let set = finite_set(ch, &name, &labels)?;
    let head = Tok {
        line: ch.line,
        column: ch.column,
        text: "carrier",
    };
    Ok((head, set))
}

/// One `map <g> : …` line per domain element, any order.
fn map_block(c: &mut Cursor<'_>, domain: &FiniteSet, carrier: &FiniteSet) -> Result<Vec<Endofunction>, ParseError> {
    let k = domain.len();
    let n = carrier.len();
    let mut maps: Vec<Option<Endofunction>> = vec![None; k];
    for _ in 0..k {
        let (mh, mr) = c.expect("map")?;
        let (key, vals) = keyed_row(mh, &mr, &[(domain, "domain element")], (carrier, "carrier element", n))?;
        if maps[key[0]].is_some() {
            return Err(err_at(mr[0], format!("duplicate map `{}`", mr[0].text)));
        }
        maps[key[0]] = Some(Endofunction::new(vals).expect("values are in range"));
    }
    Ok(maps.into_iter().map(|m| m.expect("k distinct maps")).collect())
}

fn action_body(c: &mut Cursor<'_>) -> Result<Action, ParseError> {
    let start = c.peek().map(|l| l.toks[0]);
    let domain = domain_ref(c)?;
    let (ch, set) = carrier(c)?;
    let maps = map_block(c, domain.elements(), &set)?;
    Action::new(domain, set, maps).map_err(|e| err_at(start.unwrap_or(ch), e.to_string()))
}

fn binary_body(c: &mut Cursor<'_>) -> Result<BinaryActionTable, ParseError> {
    let domain = domain_ref(c)?;
    let (_, set) = carrier(c)?;
    let (k, n) = (domain.len(), set.len());
    let mut table = vec![vec![usize::MAX; n]; k];
    for _ in 0..k * n {
        let (eh, er) = c.expect("entry")?;
        let (key, vals) = keyed_row(
            eh,
            &er,
            &[(domain.elements(), "domain element"), (&set, "carrier element")],
            (&set, "carrier element", 1),
        )?;
        let slot = &mut table[key[0]][key[1]];
        if *slot != usize::MAX {
            return Err(err_at(er[0], "duplicate entry"));
        }
        *slot = vals[0];
    }
    Ok(BinaryActionTable {
        domain,
        carrier: set,
        table,
    })
}

fn field_body(c: &mut Cursor<'_>) -> Result<ActionField, ParseError> {
    let gtok = c.peek().map(|l| l.toks[0]);
    let g = group_ref(c)?;
    let gtok = gtok.expect("group line was read");
    let v = VectorGroup::certify(g).map_err(|e| err_at(gtok, e.to_string()))?;
    let declared = match c.optional("pointwise")? {
        Some((h, r)) => {
            let t = single(h, &r)?;
            Some(match t.text {
                "monoidal" => PointwiseKind::Monoidal,
                "premonoidal" => PointwiseKind::Premonoidal,
                other => return Err(err_at(t, format!("unknown pointwise kind `{other}`"))),
            })
        }
        None => None,
    };
    let (ch, set) = carrier(c)?;
    let n = set.len();
    let mut per_point: Vec<Option<Action>> = vec![None; n];
    for _ in 0..n {
        let (ah, ar) = c.expect("at")?;
        let t = single(ah, &ar)?;
        let p = lookup(&set, t, "point")?;
        if per_point[p].is_some() {
            return Err(err_at(t, format!("duplicate point `{}`", t.text)));
        }
        let maps = map_block(c, v.base().carrier(), &set)?;
        let a = Action::new(v.base().clone(), set.clone(), maps).map_err(|e| err_at(ah, e.to_string()))?;
        per_point[p] = Some(a);
    }
    let per_point: Vec<Action> = per_point.into_iter().map(|a| a.expect("n distinct points")).collect();
    let kind = declared.unwrap_or_else(|| {
        let monoidal = verify_field(&v, &set, per_point.clone(), PointwiseKind::Monoidal).is_ok();
        if monoidal {
            PointwiseKind::Monoidal
        } else {
            PointwiseKind::Premonoidal
        }
    });
    verify_field(&v, &set, per_point, kind).map_err(|e| err_at(ch, format!("invalid field: {e}")))
}

fn malcev_body(c: &mut Cursor<'_>) -> Result<MalcevStructure, ParseError> {
    let (ch, set) = carrier(c)?;
    let n = set.len();
    let total = n * n * n;
    let mut table = vec![usize::MAX; total];
    for _ in 0..total {
        let (eh, er) = c.expect("entry")?;
        let keys = [(&set, "element"), (&set, "element"), (&set, "element")];
        let (key, vals) = keyed_row(eh, &er, &keys, (&set, "element", 1))?;
        let i = (key[0] * n + key[1]) * n + key[2];
        if table[i] != usize::MAX {
            return Err(err_at(er[0], "duplicate entry"));
        }
        table[i] = vals[0];
    }
    MalcevStructure::new(set, table).map_err(|e| err_at(ch, e.to_string()))
}

// ---------------------------------------------------------------- emission

fn join(labels: impl IntoIterator<Item = impl AsRef<str>>) -> String {
    labels
        .into_iter()
        .map(|s| s.as_ref().to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn emit_group_body(g: &FiniteGroup, out: &mut String) {
    let c = g.carrier();
    out.push_str(&format!("name {}\n", g.name()));
    out.push_str(&format!("elements {}\n", join(c.labels())));
    out.push_str(&format!("identity {}\n", g.label(g.identity())));
    for x in 0..g.order() {
        out.push_str(&format!(
            "row {} : {}\n",
            c.label(x),
            join(g.row(x).iter().map(|&y| c.label(y)))
        ));
    }
}

fn emit_group_ref(g: &FiniteGroup, out: &mut String) {
    match catalog(g.name()) {
        Ok(c) if c == *g => out.push_str(&format!("group {}\n", g.name())),
        _ => {
            out.push_str("group inline\n");
            emit_group_body(g, out);
            out.push_str("end\n");
        }
    }
}

fn emit_domain(d: &ActionDomain, out: &mut String) {
    match d {
        ActionDomain::Group(g) => emit_group_ref(g, out),
        ActionDomain::Set(s) => {
            if s.name() != DEFAULT_SET_NAME {
                out.push_str(&format!("set_name {}\n", s.name()));
            }
            out.push_str(&format!("set {}\n", join(s.labels())));
        }
    }
}

fn emit_carrier(s: &FiniteSet, out: &mut String) {
    if s.name() != DEFAULT_CARRIER_NAME {
        out.push_str(&format!("carrier_name {}\n", s.name()));
    }
    out.push_str(&format!("carrier {}\n", join(s.labels())));
}

fn emit_maps(domain: &FiniteSet, carrier: &FiniteSet, maps: &[Endofunction], out: &mut String) {
    for (g, m) in maps.iter().enumerate() {
        out.push_str(&format!("map {} : {}\n", domain.label(g), m.render(carrier)));
    }
}

pub fn emit(s: &Structure) -> String {
    let mut out = format!("kind {}\n", s.kind());
    match s {
        Structure::Group(g) => emit_group_body(g, &mut out),
        Structure::Action(a) => {
            emit_domain(a.domain(), &mut out);
            emit_carrier(a.carrier(), &mut out);
            emit_maps(a.domain().elements(), a.carrier(), a.maps(), &mut out);
        }
        Structure::Binary(b) => {
            emit_domain(&b.domain, &mut out);
            emit_carrier(&b.carrier, &mut out);
            for (g, row) in b.table.iter().enumerate() {
                for (x, &y) in row.iter().enumerate() {
                    out.push_str(&format!(
                        "entry {} {} : {}\n",
                        b.domain.label(g),
                        b.carrier.label(x),
                        b.carrier.label(y)
                    ));
                }
            }
        }
        Structure::Field(f) => {
            emit_group_ref(f.vectors().base(), &mut out);
            out.push_str(&format!("pointwise {}\n", f.kind().name()));
            emit_carrier(f.carrier(), &mut out);
            for p in 0..f.size() {
                out.push_str(&format!("at {}\n", f.carrier().label(p)));
                let a = f.action_at(p);
                emit_maps(a.domain().elements(), a.carrier(), a.maps(), &mut out);
            }
        }
        Structure::Malcev(m) => {
            emit_carrier(m.carrier(), &mut out);
            let c = m.carrier();
            for (x, y, z, w) in m.entries() {
                out.push_str(&format!(
                    "entry {} {} {} : {}\n",
                    c.label(x),
                    c.label(y),
                    c.label(z),
                    c.label(w)
                ));
            }
        }
    }
    out
}

pub fn emit_group(g: &FiniteGroup) -> String {
    emit(&Structure::Group(g.clone()))
}

pub fn emit_action(a: &Action) -> String {
    emit(&Structure::Action(a.clone()))
}

pub fn emit_field(f: &ActionField) -> String {
    emit(&Structure::Field(f.clone()))
}

pub fn emit_malcev(m: &MalcevStructure) -> String {
    emit(&Structure::Malcev(m.clone()))
}
