//! Line-oriented text format for structures.
//!
//! ```text
//! # the two-element chain 0 < e
//! n 2
//! labels 0 e
//! mult
//! 0 0
//! 0 e
//! leq
//! 0 <= e
//! star
//! 0 -> 0
//! e -> e
//! ```
//!
//! `labels` is optional (elements are then named `0..n`). The `leq` section
//! lists generating pairs; the parser takes the reflexive-transitive closure
//! and rejects cycles. A missing `leq` section means the equality order, a
//! missing `star` section means no involution. `#` starts a comment.
//! [`write_structure`] emits the transitive reduction of the order.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::structure::{Elem, RawStructure, MAX_ORDER};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    Top,
    Mult,
    Leq,
    Star,
}

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Header {
    n: usize,
    names: HashMap<String, Elem>,
    labels: Option<Vec<String>>,
}

impl Header {
    fn resolve(&self, tok: &str, line: usize) -> Result<Elem> {
        self.names
            .get(tok)
            .copied()
            .ok_or_else(|| perr(line, format!("unknown element `{tok}`")))
    }

    fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }
}

pub fn parse_structure(src: &str) -> Result<RawStructure> {
    let mut n: Option<usize> = None;
    let mut header: Option<Header> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut mult: Vec<Vec<Elem>> = Vec::new();
    let mut mult_line = 0;
    let mut leq: Option<Vec<Vec<bool>>> = None;
    let mut star: Option<Vec<Option<Elem>>> = None;
    let mut star_line = 0;
    let mut section = Section::Top;
    let mut last_line = 0;

    // The header is frozen at the first section that needs element names.
    fn freeze(n: Option<usize>, labels: &Option<Vec<String>>, line: usize) -> Result<Header> {
        let n = n.ok_or_else(|| perr(line, "`n <count>` must come before any table"))?;
        let names = match labels {
            Some(l) => l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect(),
            None => (0..n).map(|i| (i.to_string(), i)).collect(),
        };
        Ok(Header {
            n,
            names,
            labels: labels.clone(),
        })
    }

    for (idx, raw_line) in src.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw_line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        match toks[0] {
            "n" if toks.len() == 2 => {
                if n.is_some() {
                    return Err(perr(line, "duplicate `n`"));
                }
                let count: usize = toks[1]
                    .parse()
                    .map_err(|_| perr(line, format!("bad element count `{}`", toks[1])))?;
                if count == 0 || count > MAX_ORDER {
                    return Err(perr(line, format!("element count {count} outside 1..={MAX_ORDER}")));
                }
                n = Some(count);
                section = Section::Top;
                continue;
            }
            "labels" => {
                if header.is_some() || labels.is_some() {
                    return Err(perr(line, "`labels` must appear once, before the tables"));
                }
                let count = n.ok_or_else(|| perr(line, "`n` must come before `labels`"))?;
                let l: Vec<String> = toks[1..].iter().map(|s| s.to_string()).collect();
                if l.len() != count {
                    return Err(perr(line, format!("{} labels for {count} elements", l.len())));
                }
                for (i, s) in l.iter().enumerate() {
                    if l[..i].contains(s) {
                        return Err(perr(line, format!("duplicate label `{s}`")));
                    }
                }
                labels = Some(l);
                section = Section::Top;
                continue;
            }
            "mult" | "leq" | "star" if toks.len() == 1 => {
                if header.is_none() {
                    header = Some(freeze(n, &labels, line)?);
                }
                let size = header.as_ref().unwrap().n;
                if section == Section::Mult && mult.len() != size {
                    return Err(perr(line, format!("mult has {} rows, expected {size}", mult.len())));
                }
                section = match toks[0] {
                    "mult" => {
                        if mult_line != 0 {
                            return Err(perr(line, "duplicate `mult` section"));
                        }
                        mult_line = line;
                        Section::Mult
                    }
                    "leq" => {
                        if leq.is_some() {
                            return Err(perr(line, "duplicate `leq` section"));
                        }
                        leq = Some((0..size).map(|a| (0..size).map(|b| a == b).collect()).collect());
                        Section::Leq
                    }
                    _ => {
                        if star.is_some() {
                            return Err(perr(line, "duplicate `star` section"));
                        }
                        star = Some(vec![None; size]);
                        star_line = line;
                        Section::Star
                    }
                };
                continue;
            }
            _ => {}
        }

        let Some(h) = header.as_ref() else {
            return Err(perr(line, format!("unexpected `{content}`")));
        };
        match section {
            Section::Top => return Err(perr(line, format!("unexpected `{content}` outside a section"))),
            Section::Mult => {
                if mult.len() == h.n {
                    return Err(perr(line, format!("mult has more than {} rows", h.n)));
                }
                if toks.len() != h.n {
                    return Err(perr(line, format!("mult row has {} entries, expected {}", toks.len(), h.n)));
                }
                let row = toks.iter().map(|t| h.resolve(t, line)).collect::<Result<Vec<_>>>()?;
                mult.push(row);
            }
            Section::Leq => {
                let rel = leq.as_mut().unwrap();
                let parts: Vec<&str> = content.split("<=").map(str::trim).collect();
                if parts.len() < 2 || parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
                    return Err(perr(line, format!("expected `x <= y`, got `{content}`")));
                }
                for w in parts.windows(2) {
                    let a = h.resolve(w[0], line)?;
                    let b = h.resolve(w[1], line)?;
                    if a != b && rel[b][a] {
                        return Err(perr(
                            line,
                            format!("order cycle: {} <= {} <= {}", h.label(a), h.label(b), h.label(a)),
                        ));
                    }
                    add_pair(rel, a, b);
                }
            }
            Section::Star => {
                let map = star.as_mut().unwrap();
                let parts: Vec<&str> = content.split("->").map(str::trim).collect();
                if parts.len() != 2 || parts.iter().any(|p| p.is_empty() || p.contains(char::is_whitespace)) {
                    return Err(perr(line, format!("expected `x -> y`, got `{content}`")));
                }
                let a = h.resolve(parts[0], line)?;
                let b = h.resolve(parts[1], line)?;
                if map[a].is_some() {
                    return Err(perr(line, format!("star of `{}` given twice", parts[0])));
                }
                map[a] = Some(b);
            }
        }
    }

    let Some(h) = header else {
        return Err(perr(last_line.max(1), "missing `mult` section"));
    };
    if mult_line == 0 {
        return Err(perr(last_line, "missing `mult` section"));
    }
    if mult.len() != h.n {
        return Err(perr(last_line, format!("mult has {} rows, expected {}", mult.len(), h.n)));
    }
    let star = match star {
        None => None,
        Some(map) => {
            let mut out = Vec::with_capacity(h.n);
            for (a, s) in map.into_iter().enumerate() {
                out.push(s.ok_or_else(|| perr(star_line, format!("star section does not map `{}`", h.label(a))))?);
            }
            Some(out)
        }
    };
    let leq = leq.unwrap_or_else(|| (0..h.n).map(|a| (0..h.n).map(|b| a == b).collect()).collect());
    Ok(RawStructure {
        n: h.n,
        mult,
        leq,
        star,
        labels: h.labels,
    })
}

/// Adds `a ≤ b` to a reflexive-transitive relation and keeps it closed.
fn add_pair(rel: &mut [Vec<bool>], a: Elem, b: Elem) {
    let n = rel.len();
    let below: Vec<Elem> = (0..n).filter(|&x| rel[x][a]).collect();
    let above: Vec<Elem> = (0..n).filter(|&y| rel[b][y]).collect();
    for &x in &below {
        for &y in &above {
            rel[x][y] = true;
        }
    }
}

/// Covering pairs `a < b` with nothing strictly between.
pub fn transitive_reduction(leq: &[Vec<bool>]) -> Vec<(Elem, Elem)> {
    let n = leq.len();
    let lt = |a: Elem, b: Elem| a != b && leq[a][b];
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if lt(a, b) && !(0..n).any(|c| lt(a, c) && lt(c, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn write_structure(raw: &RawStructure) -> String {
    let n = raw.n;
    let name = |a: Elem| match &raw.labels {
        Some(l) => l[a].clone(),
        None => a.to_string(),
    };
    let mut out = String::new();
    writeln!(out, "n {n}").unwrap();
    if let Some(l) = &raw.labels {
        writeln!(out, "labels {}", l.join(" ")).unwrap();
    }
    out.push_str("mult\n");
    for row in &raw.mult {
        let cells: Vec<String> = row.iter().map(|&x| name(x)).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out.push_str("leq\n");
    for (a, b) in transitive_reduction(&raw.leq) {
        writeln!(out, "{} <= {}", name(a), name(b)).unwrap();
    }
    if let Some(star) = &raw.star {
        out.push_str("star\n");
        for (a, &s) in star.iter().enumerate() {
            writeln!(out, "{} -> {}", name(a), name(s)).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const CHAIN: &str = "# chain\nn 2\nlabels 0 e\nmult\n0 0\n0 e\nleq\n0 <= e\nstar\n0 -> 0\ne -> e\n";

    #[test]
    fn parses_chain() {
        let raw = parse_structure(CHAIN).unwrap();
        assert_eq!(raw.mult, vec![vec![0, 0], vec![0, 1]]);
        assert_eq!(raw.leq, vec![vec![true, true], vec![false, true]]);
        assert_eq!(raw.star, Some(vec![0, 1]));
        assert_eq!(write_structure(&raw), CHAIN.trim_start_matches("# chain\n"));
    }

    #[test]
    fn closure_is_applied() {
        let src = "n 3\nmult\n0 0 0\n0 0 0\n0 0 0\nleq\n0 <= 1\n1 <= 2\n";
        let raw = parse_structure(src).unwrap();
        assert!(raw.leq[0][2]);
        assert!(write_structure(&raw).contains("leq\n0 <= 1\n1 <= 2\n"));
        let chained = parse_structure("n 3\nmult\n0 0 0\n0 0 0\n0 0 0\nleq\n0 <= 1 <= 2\n").unwrap();
        assert_eq!(chained, raw);
    }

    #[test]
    fn cycle_rejected_with_line() {
        let src = "n 2\nmult\n0 0\n0 0\nleq\n0 <= 1\n1 <= 0\n";
        let err = parse_structure(src).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 7, ref message } if message.contains("cycle")), "{err}");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("mult\n0\n", 1),
            ("n 2\nmult\n0 0\n0 x\n", 4),
            ("n 2\nmult\n0 0\n0\n", 4),
            ("n 2\nmult\n0 0\n0 0\nstar\n0 -> 1\n", 5),
            ("n 2\nmult\n0 0\n0 0\nstar\n0 -> 1\n0 -> 0\n", 7),
            ("n 2\nlabels a\n", 2),
            ("n 2\nmult\n0 0\n", 3),
        ];
        for (src, line) in cases {
            match parse_structure(src) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{src:?}"),
                other => panic!("{src:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn missing_sections_default() {
        let raw = parse_structure("n 1\nmult\n0\n").unwrap();
        assert_eq!(raw.leq, vec![vec![true]]);
        assert_eq!(raw.star, None);
        assert_eq!(raw.labels, None);
    }
}
