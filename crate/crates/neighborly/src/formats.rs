//! Text formats for chirotopes, point configurations, signatures, flags,
//! facet lists, enumeration results and bound reports.
//!
//! Every writer emits a trailing newline and every reader accepts one. Minus
//! signs are written as ASCII `-`; readers also accept U+2212.

use neighborly_core::enumeration::{BoundReport, TypeSet};
use neighborly_core::realization::{PointConfig, Subdivision};
use neighborly_core::{Chirotope, CombType, ElemSet, FacetList, Flag, LexSignature, Sign};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: neighborly_core::Error,
    },
    #[error("unexpected end of input, expected {0}")]
    Truncated(&'static str),
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// Non-blank lines with their 1-based numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize, FormatError> {
    tok.parse().map_err(|_| syntax(line, format!("{what} {tok:?} is not a non-negative integer")))
}

fn header(line: usize, text: &str, what: [&str; 2]) -> Result<(usize, usize), FormatError> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(syntax(line, format!("expected \"{} {}\"", what[0], what[1])));
    }
    Ok((parse_usize(line, toks[0], what[0])?, parse_usize(line, toks[1], what[1])?))
}

fn sign_of_char(c: char) -> Option<Sign> {
    match c {
        '+' => Some(Sign::Pos),
        '-' | '\u{2212}' => Some(Sign::Neg),
        _ => None,
    }
}

/// `true` unless the second non-blank line is something other than a sign
/// string, which marks a point file.
pub fn looks_like_chirotope(text: &str) -> bool {
    lines(text).nth(1).is_none_or(|(_, l)| l.chars().all(|c| sign_of_char(c).is_some()))
}

pub fn write_chirotope(chi: &Chirotope) -> String {
    let signs: String = chi.signs().map(Sign::as_char).collect();
    format!("{} {}\n{signs}\n", chi.n(), chi.rank())
}

pub fn read_chirotope(text: &str) -> Result<Chirotope, FormatError> {
    let mut it = lines(text);
    let (l1, h) = it.next().ok_or(FormatError::Truncated("header \"n r\""))?;
    let (n, r) = header(l1, h, ["n", "r"])?;
    let (l2, body) = it.next().ok_or(FormatError::Truncated("sign string"))?;
    let signs = body
        .chars()
        .enumerate()
        .map(|(i, c)| sign_of_char(c).ok_or_else(|| syntax(l2, format!("character {} is {c:?}, not a sign", i + 1))))
        .collect::<Result<Vec<Sign>, _>>()?;
    if let Some((l, _)) = it.next() {
        return Err(syntax(l, "trailing content after the sign string"));
    }
    Chirotope::from_signs(n, r, &signs).map_err(|source| FormatError::Invalid { line: l2, source })
}

/// Comma-separated `e+` / `e-` tokens.
pub fn parse_signature(text: &str) -> Result<LexSignature, FormatError> {
    let mut entries = Vec::new();
    for tok in text.split(',').map(str::trim) {
        let mut chars = tok.chars();
        let sign = chars.next_back().and_then(sign_of_char);
        let Some(sign) = sign else {
            return Err(syntax(1, format!("signature token {tok:?} does not end in + or -")));
        };
        entries.push((parse_usize(1, chars.as_str(), "element")?, sign));
    }
    Ok(LexSignature::new(entries))
}

fn parse_set(line: usize, text: &str) -> Result<ElemSet, FormatError> {
    let mut set = ElemSet::EMPTY;
    for tok in text.split(',').map(str::trim) {
        let e = parse_usize(line, tok, "vertex")?;
        if e >= 64 {
            return Err(syntax(line, format!("vertex {e} exceeds 63")));
        }
        if set.contains(e) {
            return Err(syntax(line, format!("vertex {e} repeated")));
        }
        set = set.with(e);
    }
    Ok(set)
}

/// Faces separated by `<`, vertices by commas. Universal levels are
/// detected from the shape of the chain.
pub fn parse_flag(text: &str) -> Result<Flag, FormatError> {
    let text = text.trim();
    if text.is_empty() {
        return Flag::new(Vec::new()).map_err(|source| FormatError::Invalid { line: 1, source });
    }
    let faces = text.split('<').map(|f| parse_set(1, f)).collect::<Result<Vec<_>, _>>()?;
    Flag::new(faces).map(Flag::with_detected_levels).map_err(|source| FormatError::Invalid { line: 1, source })
}

/// Comma-separated element list; the empty string is the empty set.
pub fn parse_elements(text: &str) -> Result<ElemSet, FormatError> {
    if text.trim().is_empty() {
        Ok(ElemSet::EMPTY)
    } else {
        parse_set(1, text)
    }
}

fn parse_rational(line: usize, tok: &str) -> Result<BigRational, FormatError> {
    let bad = || syntax(line, format!("{tok:?} is not a rational p/q"));
    let tok = tok.replace('\u{2212}', "-");
    let (p, q) = match tok.split_once('/') {
        Some((p, q)) => (p.parse::<BigInt>().map_err(|_| bad())?, q.parse::<BigInt>().map_err(|_| bad())?),
        None => (tok.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if q.is_zero() {
        return Err(syntax(line, format!("{tok:?} has a zero denominator")));
    }
    Ok(BigRational::new(p, q))
}

fn write_rational(out: &mut String, x: &BigRational) {
    if x.denom().is_one() {
        let _ = write!(out, "{}", x.numer());
    } else {
        let _ = write!(out, "{}/{}", x.numer(), x.denom());
    }
}

/// Header `n d`, then `n` affine points with `d` coordinates each.
pub fn read_points(text: &str) -> Result<PointConfig, FormatError> {
    let mut it = lines(text);
    let (l1, h) = it.next().ok_or(FormatError::Truncated("header \"n d\""))?;
    let (n, d) = header(l1, h, ["n", "d"])?;
    let mut rows = Vec::with_capacity(n);
    for _ in 0..n {
        let (l, row) = it.next().ok_or(FormatError::Truncated("point row"))?;
        let coords = row.split_whitespace().map(|t| parse_rational(l, t)).collect::<Result<Vec<_>, _>>()?;
        if coords.len() != d {
            return Err(syntax(l, format!("expected {d} coordinates, found {}", coords.len())));
        }
        rows.push(coords);
    }
    if let Some((l, _)) = it.next() {
        return Err(syntax(l, format!("more than {n} points")));
    }
    PointConfig::from_affine(rows).map_err(|source| FormatError::Invalid { line: l1, source })
}

/// Affine form of a homogeneous configuration: every vector is divided by
/// its first coordinate, which must be positive so that orientations are
/// kept.
pub fn write_points(cfg: &PointConfig) -> Result<String, FormatError> {
    let d = cfg.rank().saturating_sub(1);
    let mut out = format!("{} {d}\n", cfg.len());
    for (i, p) in cfg.points.iter().enumerate() {
        let w = &p[0];
        if !w.is_positive() {
            return Err(syntax(i + 2, "vector with non-positive first coordinate has no affine form"));
        }
        for (j, x) in p[1..].iter().enumerate() {
            if j > 0 {
                out.push(' ');
            }
            write_rational(&mut out, &(x / w));
        }
        out.push('\n');
    }
    Ok(out)
}

fn set_line(set: ElemSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

/// Sorted vertex sets, one per line, lines sorted.
fn write_sets(sets: impl Iterator<Item = ElemSet>) -> String {
    let mut rows: Vec<Vec<usize>> = sets.map(ElemSet::to_vec).collect();
    rows.sort();
    let mut out = String::new();
    for r in rows {
        out.push_str(&set_line(r.into_iter().collect()));
        out.push('\n');
    }
    out
}

pub fn write_facets(fl: &FacetList) -> String {
    write_sets(fl.facets.iter().copied())
}

pub fn write_subdivision(sub: &Subdivision) -> String {
    write_sets(sub.cells.iter().copied())
}

pub fn read_facets(n: usize, text: &str) -> Result<FacetList, FormatError> {
    let mut facets = Vec::new();
    for (l, row) in lines(text) {
        let mut set = ElemSet::EMPTY;
        for tok in row.split_whitespace() {
            let v = parse_usize(l, tok, "vertex")?;
            if v >= n {
                return Err(syntax(l, format!("vertex {v} outside 0..{n}")));
            }
            set = set.with(v);
        }
        facets.push(set);
    }
    Ok(FacetList::new(n, facets))
}

/// The canonical facet list of a type: this text is the canonical form.
pub fn write_type(ty: &CombType) -> String {
    let mut out = String::new();
    for l in ty.lines() {
        out.push_str(&l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "));
        out.push('\n');
    }
    out
}

/// One type on one line: facets separated by `;`, vertices by spaces.
pub fn type_line(ty: &CombType) -> String {
    ty.lines().iter().map(|l| l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(";")
}

/// Types in sorted order, one per line when `list` is set, then the count.
pub fn write_type_set(set: &TypeSet, list: bool) -> String {
    let mut out = String::new();
    if list {
        for ty in set.keys() {
            out.push_str(&type_line(&ty));
            out.push('\n');
        }
    }
    let _ = writeln!(out, "{}", set.len());
    out
}

pub fn write_flag(flag: &Flag) -> String {
    format!("{flag}\n")
}

/// `key: value` lines.
pub fn write_bound_report(rep: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", rep.n);
    let _ = writeln!(out, "d: {}", rep.d);
    let _ = writeln!(out, "r: {}", rep.r);
    let _ = writeln!(out, "m: {}", rep.m);
    for e in &rep.entries {
        if let Some(x) = &e.exact {
            let _ = writeln!(out, "{}: {x}", e.id);
        }
        let _ = writeln!(out, "ln {}: {:.12}", e.id, e.ln);
    }
    if let Some(b) = &rep.brute {
        let _ = writeln!(out, "brute: {b}");
    }
    let verdict = |ok: bool| if ok { "pass" } else { "FAIL" };
    for (name, ok) in &rep.checks {
        let _ = writeln!(out, "check {name}: {}", verdict(*ok));
    }
    for (name, ok) in &rep.info {
        let _ = writeln!(out, "info {name}: {}", if *ok { "holds" } else { "fails" });
    }
    let _ = writeln!(out, "verdict: {}", verdict(rep.passed()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use neighborly_core::analysis::facets;
    use neighborly_core::cyclic;

    #[test]
    fn chirotope_round_trip() {
        let chi = cyclic(7, 4).unwrap().reorient(ElemSet::from_slice(&[2, 5]));
        let text = write_chirotope(&chi);
        assert_eq!(read_chirotope(&text).unwrap(), chi);
        assert_eq!(write_chirotope(&read_chirotope(&text).unwrap()), text);
    }

    #[test]
    fn unicode_minus_is_accepted() {
        let chi = read_chirotope("4 3\n+\u{2212}+\u{2212}\n").unwrap();
        assert_eq!(write_chirotope(&chi), "4 3\n+-+-\n");
    }

    #[test]
    fn chirotope_errors_carry_lines() {
        assert_eq!(read_chirotope("4 3\n\n+x++\n").unwrap_err(), syntax(3, "character 2 is 'x', not a sign"));
        assert!(matches!(read_chirotope("4 3\n+++\n"), Err(FormatError::Invalid { line: 2, .. })));
        assert_eq!(read_chirotope(""), Err(FormatError::Truncated("header \"n r\"")));
    }

    #[test]
    fn signature_syntax() {
        let s = parse_signature("0+,1-, 2\u{2212}").unwrap();
        assert_eq!(s.to_string(), "0+,1-,2-");
        assert!(parse_signature("0+,1").is_err());
        assert!(parse_signature("x+").is_err());
    }

    #[test]
    fn flag_syntax() {
        let f = parse_flag("0,1 < 0,1,2,3").unwrap();
        assert_eq!(write_flag(&f), "0,1 < 0,1,2,3\n");
        assert_eq!(f.universal_faces().len(), 2);
        assert!(parse_flag("0,1 < 0,2").is_err());
        assert!(parse_flag("0,0").is_err());
    }

    #[test]
    fn points_round_trip() {
        let text = "3 2\n0 0\n1/2 -3\n2 7/4\n";
        let cfg = read_points(text).unwrap();
        assert_eq!(cfg.rank(), 3);
        assert_eq!(write_points(&cfg).unwrap(), text);
        assert!(matches!(read_points("2 2\n0 0\n1\n"), Err(FormatError::Syntax { line: 3, .. })));
        assert!(read_points("1 1\n1/0\n").is_err());
        assert!(looks_like_chirotope("3 2\n+-+\n"));
        assert!(!looks_like_chirotope(text));
    }

    #[test]
    fn facets_round_trip() {
        let fl = facets(&cyclic(6, 4).unwrap());
        let text = write_facets(&fl);
        assert_eq!(read_facets(6, &text).unwrap(), fl);
        assert!(text.lines().collect::<Vec<_>>().windows(2).all(|w| w[0] < w[1]));
    }
}
