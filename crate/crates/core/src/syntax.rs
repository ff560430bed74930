//! Text formats: words, `.map` mapping-class files, `.tor` Torelli-word
//! files and quadratic-form literals.
//!
//! ```text
//! # boundary twist, genus 1
//! genus 1
//! let z = a1 b1 a1' b1'
//! map
//! a1 -> z a1 z'
//! b1 -> z b1 z'
//! ```
//!
//! ```text
//! genus 2
//! gen T1 bscc pairs (x1 y1)
//! gen T2 bp class x2 pair (x1 y1) action bp.map
//! word T1 T2 T1' T2'
//! ```

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::error::{Error, ParseError, Result};
use crate::freegroup::{generator_name, Letter, MappingClass, Word};
use crate::library::{builtin, handle_block_twist, GeneratorEntry, SurfaceModel, TorelliWord};
use crate::spin::{DescriptorKind, H1Vector, QuadForm};

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError { line, column, message: message.into() })
}

#[derive(Clone, Copy, Debug)]
struct Tok<'a> {
    text: &'a str,
    col: usize,
}

/// Splits a line on whitespace; `(` and `)` are tokens of their own.
/// Everything after `#` is a comment.
fn lex(line: &str) -> Vec<Tok<'_>> {
    let line = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    let col = |b: usize| line[..b].chars().count() + 1;
    for (b, ch) in line.char_indices() {
        let is_sep = ch.is_whitespace() || ch == '(' || ch == ')';
        if is_sep {
            if let Some(s) = start.take() {
                out.push(Tok { text: &line[s..b], col: col(s) });
            }
            if ch != ' ' && !ch.is_whitespace() {
                out.push(Tok { text: &line[b..b + 1], col: col(b) });
            }
        } else if start.is_none() {
            start = Some(b);
        }
    }
    if let Some(s) = start {
        out.push(Tok { text: &line[s..], col: col(s) });
    }
    out
}

fn significant_lines(text: &str) -> impl Iterator<Item = (usize, Vec<Tok<'_>>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, lex(l)))
        .filter(|(_, t)| !t.is_empty())
}

/// `a3` ↦ 5, `b3` ↦ 6 in a group of the given rank.
fn generator_index(name: &str, rank: usize) -> Option<Letter> {
    if rank % 2 == 1 && name == "gamma" {
        return Some(rank as Letter);
    }
    let (kind, num) = name.split_at_checked(1)?;
    if num.starts_with('0') || !num.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let i: usize = num.parse().ok()?;
    let idx = match kind {
        "a" => 2 * i.checked_sub(1)? + 1,
        "b" => 2 * i,
        _ => return None,
    };
    (idx >= 1 && idx <= rank - rank % 2).then_some(idx as Letter)
}

fn parse_tokens(
    toks: &[Tok<'_>],
    line: usize,
    rank: usize,
    aliases: &HashMap<String, Word>,
) -> Result<Word> {
    let mut w = Word::identity(rank);
    for t in toks {
        let (name, inv) = match t.text.strip_suffix('\'') {
            Some(n) => (n, true),
            None => (t.text, false),
        };
        if name == "1" && !inv {
            continue;
        }
        let piece = if let Some(a) = aliases.get(name) {
            a.clone()
        } else if let Some(i) = generator_index(name, rank) {
            Word::reduce(rank, [i])?
        } else {
            return Err(err(line, t.col, format!("unknown token `{}`", t.text)));
        };
        w = w.multiply(&if inv { piece.inverse() } else { piece })?;
    }
    Ok(w)
}

/// Parses a whitespace-separated word such as `a1 b1' a1' b1`.
pub fn parse_word(text: &str, rank: usize) -> Result<Word> {
    if text.lines().count() > 1 {
        return Err(err(2, 1, "word must be a single line"));
    }
    parse_tokens(&lex(text), 1, rank, &HashMap::new())
}

fn parse_genus(toks: &[Tok<'_>], line: usize) -> Result<usize> {
    match toks {
        [kw, g] if kw.text == "genus" => match g.text.parse::<usize>() {
            Ok(n) if (1..=64).contains(&n) => Ok(n),
            _ => Err(err(line, g.col, format!("invalid genus `{}`", g.text))),
        },
        _ => Err(err(line, toks.first().map_or(1, |t| t.col), "expected `genus <g>`")),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Parses and validates a `.map` file.
pub fn parse_map(text: &str) -> Result<MappingClass> {
    let mut lines = significant_lines(text);
    let (l0, t0) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let genus = parse_genus(&t0, l0)?;
    let rank = 2 * genus;

    let mut aliases: HashMap<String, Word> = HashMap::new();
    let mut images: Vec<Option<Word>> = vec![None; rank];
    let mut inverse: Vec<Option<Word>> = vec![None; rank];
    // 0: before `map`, 1: images, 2: inverse images
    let mut section = 0;
    let mut last_line = l0;

    for (ln, toks) in lines {
        last_line = ln;
        let head = toks[0];
        match head.text {
            "let" if section == 0 => {
                if toks.len() < 3 || toks[2].text != "=" {
                    return Err(err(ln, head.col, "expected `let <name> = <word>`"));
                }
                let name = toks[1];
                if !is_identifier(name.text) || generator_index(name.text, rank).is_some() {
                    return Err(err(ln, name.col, format!("invalid alias name `{}`", name.text)));
                }
                if aliases.contains_key(name.text) {
                    return Err(err(ln, name.col, format!("alias `{}` defined twice", name.text)));
                }
                let w = parse_tokens(&toks[3..], ln, rank, &aliases)?;
                aliases.insert(name.text.to_string(), w);
            }
            "map" if section == 0 && toks.len() == 1 => section = 1,
            "inverse" if section == 1 && toks.len() == 1 => section = 2,
            _ if section > 0 => {
                if toks.len() < 2 || toks[1].text != "->" {
                    return Err(err(ln, head.col, "expected `<generator> -> <word>`"));
                }
                let Some(i) = generator_index(head.text, rank) else {
                    return Err(err(ln, head.col, format!("unknown generator `{}`", head.text)));
                };
                let slot = if section == 1 { &mut images } else { &mut inverse };
                let slot = &mut slot[i as usize - 1];
                if slot.is_some() {
                    return Err(err(ln, head.col, format!("generator `{}` assigned twice", head.text)));
                }
                *slot = Some(parse_tokens(&toks[2..], ln, rank, &aliases)?);
            }
            _ => return Err(err(ln, head.col, format!("unexpected `{}`", head.text))),
        }
    }
    if section == 0 {
        return Err(err(last_line + 1, 1, "missing `map` section"));
    }
    let complete = |v: Vec<Option<Word>>, what: &str| -> Result<Vec<Word>> {
        v.into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| {
                    err(last_line + 1, 1, format!("{what}: no image for `{}`", generator_name(i as u32 + 1, rank)))
                })
            })
            .collect()
    };
    let images = complete(images, "map")?;
    let f = if section == 2 {
        MappingClass::with_inverse(genus, images, complete(inverse, "inverse")?)?
    } else {
        MappingClass::new(genus, images)?
    };
    f.require_valid()?;
    Ok(f)
}

/// Canonical `.map` text: images written out in full, no aliases.
pub fn serialize_map(f: &MappingClass) -> String {
    let mut s = format!("genus {}\nmap\n", f.genus());
    let rank = f.rank();
    for (i, w) in f.images().iter().enumerate() {
        let _ = writeln!(s, "{} -> {w}", generator_name(i as u32 + 1, rank));
    }
    if let Some(inv) = f.inverse_images() {
        s.push_str("inverse\n");
        for (i, w) in inv.iter().enumerate() {
            let _ = writeln!(s, "{} -> {w}", generator_name(i as u32 + 1, rank));
        }
    }
    s
}

/// `x1+y2` style sums in `H₁(Σ_g; Z₂)`.
pub fn parse_h1_sum(text: &str, genus: usize) -> Result<H1Vector> {
    parse_sum_at(text, genus, 1, 1)
}

fn parse_sum_at(text: &str, genus: usize, line: usize, col: usize) -> Result<H1Vector> {
    let mut v = H1Vector::zero(genus);
    let mut offset = 0;
    for term in text.split('+') {
        let bad = || err(line, col + offset, format!("invalid homology term `{term}`"));
        let (kind, num) = term.split_at_checked(1).ok_or_else(bad)?;
        let i: usize = match num.parse() {
            Ok(i) if i >= 1 && i <= genus && !num.starts_with('0') => i,
            _ => return Err(bad()),
        };
        let basis = match kind {
            "x" => H1Vector::x(genus, i),
            "y" => H1Vector::y(genus, i),
            _ => return Err(bad()),
        };
        v = v.add(basis)?;
        offset += term.len() + 1;
    }
    Ok(v)
}

/// `q: x1=0 y1=1 x2=0 y2=0`; every basis vector exactly once.
pub fn parse_form(text: &str) -> Result<QuadForm> {
    if text.lines().count() > 1 {
        return Err(err(2, 1, "form literal must be a single line"));
    }
    let toks = lex(text);
    let Some(head) = toks.first() else {
        return Err(err(1, 1, "empty form literal"));
    };
    if head.text != "q:" {
        return Err(err(1, head.col, "form literal must start with `q:`"));
    }
    let body = &toks[1..];
    if body.is_empty() || body.len() % 2 == 1 {
        return Err(err(1, head.col, "form literal needs values for x_i and y_i"));
    }
    let genus = body.len() / 2;
    let mut values: Vec<Option<bool>> = vec![None; 2 * genus];
    for t in body {
        let bad = || err(1, t.col, format!("invalid assignment `{}`", t.text));
        let (name, val) = t.text.split_once('=').ok_or_else(bad)?;
        let v = parse_sum_at(name, genus, 1, t.col)?;
        if v.bits().count_ones() != 1 || name.contains('+') {
            return Err(bad());
        }
        let j = v.bits().trailing_zeros() as usize;
        let b = match val {
            "0" => false,
            "1" => true,
            _ => return Err(bad()),
        };
        if values[j].replace(b).is_some() {
            return Err(err(1, t.col, format!("`{name}` assigned twice")));
        }
    }
    let values: Vec<bool> = values.into_iter().map(|v| v.expect("all slots filled")).collect();
    QuadForm::new(genus, &values)
}

/// One `gen` declaration of a `.tor` file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenDecl {
    pub name: String,
    pub kind: DescriptorKind,
    pub action_path: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorFile {
    pub genus: usize,
    pub decls: Vec<GenDecl>,
    pub word: TorelliWord,
}

fn is_builtin_name(s: &str) -> bool {
    s == "BDRY" || s.starts_with("BSCC:") || s.starts_with("BP:")
}

fn expect<'a>(toks: &[Tok<'a>], i: usize, line: usize, what: &str) -> Result<Tok<'a>> {
    match toks.get(i) {
        Some(t) if what.is_empty() || t.text == what => Ok(*t),
        Some(t) => Err(err(line, t.col, format!("expected `{what}`, found `{}`", t.text))),
        None => {
            let col = toks.last().map_or(1, |t| t.col + t.text.chars().count());
            Err(err(line, col, format!("expected {}", if what.is_empty() { "more input" } else { what })))
        }
    }
}

/// `( <sum> <sum> )` starting at `toks[i]`; returns the pair and the next index.
fn parse_pair(toks: &[Tok<'_>], i: usize, line: usize, genus: usize) -> Result<((H1Vector, H1Vector), usize)> {
    expect(toks, i, line, "(")?;
    let x = expect(toks, i + 1, line, "")?;
    let y = expect(toks, i + 2, line, "")?;
    expect(toks, i + 3, line, ")")?;
    let x = parse_sum_at(x.text, genus, line, x.col)?;
    let y = parse_sum_at(y.text, genus, line, y.col)?;
    Ok(((x, y), i + 4))
}

/// The handle range `p..=q` when `pairs` is `(x_p y_p)…(x_q y_q)`.
fn standard_block(pairs: &[(H1Vector, H1Vector)], genus: usize) -> Option<(usize, usize)> {
    let first = pairs.first()?.0.bits().trailing_zeros() as usize / 2 + 1;
    let last = first + pairs.len() - 1;
    let expected = SurfaceModel::new(genus).ok()?.standard_pairs(first, last.min(genus));
    (last <= genus && expected == pairs).then_some((first, last))
}

fn parse_decl(
    toks: &[Tok<'_>],
    line: usize,
    genus: usize,
    resolve: &dyn Fn(&str) -> Result<String>,
) -> Result<(GenDecl, GeneratorEntry)> {
    let name = expect(toks, 1, line, "")?;
    if !is_identifier(name.text) || is_builtin_name(name.text) {
        return Err(err(line, name.col, format!("invalid generator name `{}`", name.text)));
    }
    let kind_tok = expect(toks, 2, line, "")?;
    let (kind, mut i) = match kind_tok.text {
        "bscc" => {
            expect(toks, 3, line, "pairs")?;
            let mut i = 4;
            let mut pairs = Vec::new();
            while toks.get(i).is_some_and(|t| t.text == "(") {
                let (p, next) = parse_pair(toks, i, line, genus)?;
                pairs.push(p);
                i = next;
            }
            if pairs.is_empty() {
                return Err(err(line, expect(toks, i, line, "(")?.col, "expected at least one pair"));
            }
            (DescriptorKind::Bscc { pairs }, i)
        }
        "bp" => {
            expect(toks, 3, line, "class")?;
            let c = expect(toks, 4, line, "")?;
            let curve_class = parse_sum_at(c.text, genus, line, c.col)?;
            expect(toks, 5, line, "pair")?;
            let (pair, next) = parse_pair(toks, 6, line, genus)?;
            (DescriptorKind::Bp { curve_class, pair }, next)
        }
        other => return Err(err(line, kind_tok.col, format!("unknown descriptor kind `{other}`"))),
    };
    kind.validate(genus)
        .map_err(|e| err(line, kind_tok.col, e.to_string()))?;

    let mut action_path = None;
    if i < toks.len() {
        expect(toks, i, line, "action")?;
        let p = expect(toks, i + 1, line, "")?;
        action_path = Some(p.text.to_string());
        i += 2;
        if let Some(t) = toks.get(i) {
            return Err(err(line, t.col, format!("unexpected `{}`", t.text)));
        }
    }
    let action = match (&action_path, &kind) {
        (Some(path), _) => {
            let f = parse_map(&resolve(path)?)?;
            if f.genus() != genus {
                return Err(Error::GenusMismatch { left: genus, right: f.genus() });
            }
            if f.inverse_images().is_none() {
                return Err(Error::MissingInverse);
            }
            f
        }
        (None, DescriptorKind::Bscc { pairs }) => match standard_block(pairs, genus) {
            Some((first, last)) => handle_block_twist(genus, first, last)?,
            None => {
                return Err(err(line, kind_tok.col, "non-standard pairs need an `action` file"));
            }
        },
        (None, DescriptorKind::Bp { .. }) => {
            return Err(err(line, kind_tok.col, "bp descriptors need an `action` file"));
        }
    };
    let entry = GeneratorEntry::new(name.text, action, Some(kind.clone()))?;
    Ok((GenDecl { name: name.text.to_string(), kind, action_path }, entry))
}

/// Parses a `.tor` file. `resolve` reads the map files named by `action`.
pub fn parse_tor(text: &str, resolve: &dyn Fn(&str) -> Result<String>) -> Result<TorFile> {
    let mut lines = significant_lines(text);
    let (l0, t0) = lines.next().ok_or_else(|| err(1, 1, "empty input"))?;
    let genus = parse_genus(&t0, l0)?;

    let mut decls = Vec::new();
    let mut entries: HashMap<String, Arc<GeneratorEntry>> = HashMap::new();
    let mut word: Option<TorelliWord> = None;
    let mut last_line = l0;

    for (ln, toks) in lines {
        last_line = ln;
        let head = toks[0];
        if word.is_some() {
            return Err(err(ln, head.col, "nothing may follow the `word` line"));
        }
        match head.text {
            "gen" => {
                let (decl, entry) = parse_decl(&toks, ln, genus, resolve)?;
                if entries.contains_key(&decl.name) {
                    return Err(err(ln, toks[1].col, format!("generator `{}` declared twice", decl.name)));
                }
                entries.insert(decl.name.clone(), Arc::new(entry));
                decls.push(decl);
            }
            "word" => {
                let mut letters = Vec::new();
                for t in &toks[1..] {
                    let (name, x) = match t.text.strip_suffix('\'') {
                        Some(n) => (n, -1),
                        None => (t.text, 1),
                    };
                    if name == "1" && x == 1 {
                        continue;
                    }
                    let e = match entries.get(name) {
                        Some(e) => e.clone(),
                        None if is_builtin_name(name) => {
                            let e = Arc::new(builtin(name, genus).map_err(|e| match e {
                                Error::UnknownGenerator(_) | Error::InvalidDescriptor(_) => {
                                    err(ln, t.col, e.to_string())
                                }
                                other => other,
                            })?);
                            entries.insert(name.to_string(), e.clone());
                            e
                        }
                        None => return Err(Error::UnknownGenerator(name.to_string())),
                    };
                    letters.push((e, x));
                }
                word = Some(TorelliWord::new(genus, letters)?);
            }
            other => return Err(err(ln, head.col, format!("unexpected `{other}`"))),
        }
    }
    let word = word.ok_or_else(|| err(last_line + 1, 1, "missing `word` line"))?;
    Ok(TorFile { genus, decls, word })
}

fn write_pair(s: &mut String, (x, y): &(H1Vector, H1Vector)) {
    let _ = write!(s, "({x} {y})");
}

pub fn serialize_tor(t: &TorFile) -> String {
    let mut s = format!("genus {}\n", t.genus);
    for d in &t.decls {
        let _ = write!(s, "gen {} ", d.name);
        match &d.kind {
            DescriptorKind::Bscc { pairs } => {
                s.push_str("bscc pairs ");
                pairs.iter().for_each(|p| write_pair(&mut s, p));
            }
            DescriptorKind::Bp { curve_class, pair } => {
                let _ = write!(s, "bp class {curve_class} pair ");
                write_pair(&mut s, pair);
            }
        }
        if let Some(p) = &d.action_path {
            let _ = write!(s, " action {p}");
        }
        s.push('\n');
    }
    s.push_str("word");
    for (e, x) in t.word.letters() {
        let _ = write!(s, " {}{}", e.name, if *x < 0 { "'" } else { "" });
    }
    s.push('\n');
    s
}

/// A parsed input file of either kind.
#[derive(Clone, Debug)]
pub enum Input {
    Map(MappingClass),
    Tor(TorFile),
}

impl Input {
    /// The mapping class described by the file.
    pub fn action(&self) -> Result<MappingClass> {
        match self {
            Input::Map(f) => Ok(f.clone()),
            Input::Tor(t) => t.word.composed_action(),
        }
    }
}

/// Parses `.map` or `.tor` text; the kind is inferred from the section
/// headers (`map` vs. `gen`/`word`).
pub fn parse_input(text: &str, resolve: &dyn Fn(&str) -> Result<String>) -> Result<Input> {
    let is_map = significant_lines(text).any(|(_, t)| t[0].text == "map");
    if is_map {
        parse_map(text).map(Input::Map)
    } else {
        parse_tor(text, resolve).map(Input::Tor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library::boundary_twist;

    fn no_files(p: &str) -> Result<String> {
        Err(Error::Io { path: p.to_string(), message: "not available".into() })
    }

    #[test]
    fn words() {
        assert_eq!(parse_word("a1 b1 a1' b1'", 2).unwrap().letters(), &[1, 2, -1, -2]);
        assert_eq!(parse_word("a2 a2'", 4).unwrap().letters(), &[] as &[Letter]);
        assert_eq!(parse_word("1", 2).unwrap().letters(), &[] as &[Letter]);
        assert!(matches!(parse_word("a1 c1", 2), Err(Error::Parse(ParseError { column: 4, .. }))));
        assert!(parse_word("a2", 2).is_err());
        assert!(parse_word("a01", 2).is_err());
    }

    #[test]
    fn map_identity_and_alias() {
        let id = parse_map("genus 2\nmap\na1 -> a1\nb1 -> b1\na2 -> a2\nb2 -> b2\n").unwrap();
        assert!(id.is_identity());

        let text = "# boundary twist\ngenus 1\nlet z = a1 b1 a1' b1'\nmap\na1 -> z a1 z'\nb1 -> z b1 z'\n\
                    inverse\na1 -> z' a1 z\nb1 -> z' b1 z\n";
        let f = parse_map(text).unwrap();
        assert_eq!(f.images(), boundary_twist(1).unwrap().action.images());
        assert_eq!(parse_map(&serialize_map(&f)).unwrap(), f);
    }

    #[test]
    fn map_errors() {
        let bad = parse_map("genus 2\nmap\na1 -> a2\nb1 -> b1\na2 -> a2\nb2 -> b2\n");
        match bad {
            Err(Error::Validation(r)) => assert_eq!(r.check("boundary").unwrap().status, crate::freegroup::CheckStatus::Fail),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_map("genus 1\nmap\na1 -> a1\n"),
            Err(Error::Parse(ParseError { line: 4, .. }))
        ));
        assert!(matches!(
            parse_map("genus 1\nmap\na1 -> a1 q\nb1 -> b1\n"),
            Err(Error::Parse(ParseError { line: 3, column: 10, .. }))
        ));
        assert!(parse_map("genus x\n").is_err());
        assert!(parse_map("").is_err());
    }

    #[test]
    fn forms() {
        let q = parse_form("q: x1=0 y1=1 x2=0 y2=0").unwrap();
        assert_eq!(q.basis_values(), [false, true, false, false]);
        assert_eq!(parse_form(&q.to_string()).unwrap(), q);
        assert!(parse_form("q: x1=0 x1=1").is_err());
        assert!(parse_form("q: x1=0").is_err());
        assert!(parse_form("x1=0 y1=0").is_err());
        assert!(parse_form("q: x1=2 y1=0").is_err());
    }

    #[test]
    fn tor_words() {
        let t = parse_tor("genus 2\ngen T1 bscc pairs (x1 y1)\nword T1 T1'\n", &no_files).unwrap();
        assert_eq!(t.word.len(), 2);
        assert!(t.word.composed_action().unwrap().is_identity());

        let t = parse_tor("genus 2\ngen T1 bscc pairs (x1 y1)\nword T1 BP:std T1' BP:std'\n", &no_files).unwrap();
        assert_eq!(t.word.len(), 4);
        assert_eq!(parse_tor(&serialize_tor(&t), &no_files).unwrap(), t);

        assert_eq!(
            parse_tor("genus 2\nword T9\n", &no_files).unwrap_err(),
            Error::UnknownGenerator("T9".into())
        );
    }

    #[test]
    fn tor_descriptors() {
        let bp_map = serialize_map(&crate::library::bp_map(2, "std").unwrap().action);
        let files = move |p: &str| -> Result<String> {
            if p == "bp.map" {
                Ok(bp_map.clone())
            } else {
                no_files(p)
            }
        };
        let text = "genus 2\ngen P bp class x2 pair (x1 y1) action bp.map\nword P\n";
        let t = parse_tor(text, &files).unwrap();
        assert_eq!(serialize_tor(&t), text);

        let bad = parse_tor("genus 2\ngen P bscc pairs (x1 x2)\nword P\n", &no_files);
        assert!(matches!(bad, Err(Error::Parse(ParseError { line: 2, .. }))));
        let bad = parse_tor("genus 2\ngen P bscc pairs (x1+x2 y1)\nword P\n", &no_files);
        assert!(matches!(bad, Err(Error::Parse(_))));
        let bad = parse_tor("genus 2\ngen P bp class x2 pair (x1 y1)\nword P\n", &no_files);
        assert!(matches!(bad, Err(Error::Parse(_))));
        assert!(parse_tor("genus 2\ngen P bscc pairs (x1 y1) action a.map\nword P\n", &no_files).is_err());
        assert!(parse_tor("genus 2\nword\nword\n", &no_files).is_err());
    }

    #[test]
    fn inline_block_twist() {
        let t = parse_tor("genus 3\ngen S bscc pairs (x2 y2)(x3 y3)\nword S\n", &no_files).unwrap();
        let f = t.word.composed_action().unwrap();
        assert!(f.validate().passed());
        assert_eq!(f.images()[0].letters(), &[1]);
    }

    #[test]
    fn lexer_columns() {
        let toks = lex("gen T bscc pairs (x1 y1)(x2 y2) # note");
        let texts: Vec<_> = toks.iter().map(|t| t.text).collect();
        assert_eq!(texts, ["gen", "T", "bscc", "pairs", "(", "x1", "y1", ")", "(", "x2", "y2", ")"]);
        assert_eq!(toks[4].col, 18);
    }
}
