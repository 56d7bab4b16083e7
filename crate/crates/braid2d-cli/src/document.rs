use std::fmt;

use braid2d::braid::BraidWord;
use braid2d::surface::{BandEntry, MonodromyTuple};

pub const FORMAT_VERSION: u32 = 1;

/// A tuple document: one monodromy tuple with an optional label.
///
/// Text form, one item per line: `degree <m>`, an optional `label <text>`,
/// then `band (<letters>) <index> <+1|-1>` per entry with comma-separated
/// signed letters. Serialization is canonical, so parse and serialize
/// round-trip bit-exactly on serialized documents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TupleDocument {
    pub label: Option<String>,
    pub tuple: MonodromyTuple,
}

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

fn parse_band(line_no: usize, rest: &str, degree: usize) -> Result<BandEntry, ParseError> {
    let rest = rest.trim();
    let Some(open) = rest.strip_prefix('(') else {
        return err(line_no, "expected `band (<letters>) <index> <+1|-1>`");
    };
    let Some(close) = open.find(')') else {
        return err(line_no, "unclosed letter list");
    };
    let (inside, tail) = open.split_at(close);
    let mut letters = Vec::new();
    if !inside.trim().is_empty() {
        for piece in inside.split(',') {
            match piece.trim().parse::<i32>() {
                Ok(l) => letters.push(l),
                Err(_) => return err(line_no, format!("bad letter `{}`", piece.trim())),
            }
        }
    }
    let mut fields = tail[1..].split_whitespace();
    let Some(index_tok) = fields.next() else {
        return err(line_no, "missing band index");
    };
    let Ok(index) = index_tok.parse::<usize>() else {
        return err(line_no, format!("bad band index `{}`", index_tok));
    };
    let exponent = match fields.next() {
        Some("+1") => 1i8,
        Some("-1") => -1,
        Some(other) => return err(line_no, format!("bad exponent `{}`, want +1 or -1", other)),
        None => return err(line_no, "missing exponent"),
    };
    if let Some(extra) = fields.next() {
        return err(line_no, format!("unexpected trailing `{}`", extra));
    }
    let w = BraidWord::new(degree, letters).map_err(|e| ParseError {
        line: line_no,
        message: e.to_string(),
    })?;
    BandEntry::new(w, index, exponent).map_err(|e| ParseError {
        line: line_no,
        message: e.to_string(),
    })
}

pub fn parse(text: &str) -> Result<TupleDocument, ParseError> {
    let mut degree: Option<(usize, usize)> = None;
    let mut label: Option<String> = None;
    let mut entries = Vec::new();
    for (no, raw) in text.lines().enumerate() {
        let line_no = no + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match keyword {
            "degree" => {
                if degree.is_some() {
                    return err(line_no, "duplicate degree line");
                }
                match rest.trim().parse::<usize>() {
                    Ok(m) if m >= 1 => degree = Some((m, line_no)),
                    _ => return err(line_no, format!("bad degree `{}`", rest.trim())),
                }
            }
            "label" => {
                let Some((m, _)) = degree else {
                    return err(line_no, "label before degree");
                };
                let _ = m;
                if label.is_some() || !entries.is_empty() {
                    return err(line_no, "label must follow the degree line");
                }
                let text = rest.trim();
                if text.is_empty() {
                    return err(line_no, "empty label");
                }
                label = Some(text.to_string());
            }
            "band" => {
                let Some((m, _)) = degree else {
                    return err(line_no, "band before degree");
                };
                entries.push(parse_band(line_no, rest, m)?);
            }
            other => return err(line_no, format!("unrecognized line `{}`", other)),
        }
    }
    let Some((m, degree_line)) = degree else {
        return err(1, "missing `degree <m>` line");
    };
    let tuple = MonodromyTuple::new(m, entries).map_err(|e| ParseError {
        line: degree_line,
        message: e.to_string(),
    })?;
    Ok(TupleDocument { label, tuple })
}

pub fn serialize(doc: &TupleDocument) -> String {
    let mut out = format!("degree {}\n", doc.tuple.degree());
    if let Some(label) = &doc.label {
        out.push_str(&format!("label {}\n", label));
    }
    for e in doc.tuple.entries() {
        let letters: Vec<String> = e.conjugator().letters().iter().map(i32::to_string).collect();
        out.push_str(&format!(
            "band ({}) {} {:+}\n",
            letters.join(","),
            e.index(),
            e.exponent()
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = "degree 3\nlabel sample\nband (1,-2) 2 +1\nband (1,-2) 2 -1\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.label.as_deref(), Some("sample"));
        assert_eq!(doc.tuple.degree(), 3);
        assert_eq!(doc.tuple.branch_count(), 2);
        let canonical = serialize(&doc);
        assert_eq!(parse(&canonical).unwrap(), doc);
        assert_eq!(serialize(&parse(&canonical).unwrap()), canonical);
    }

    #[test]
    fn b_star_document() {
        let text = "degree 2\nband () 1 +1\nband () 1 -1\n";
        let doc = parse(text).unwrap();
        assert_eq!(doc.tuple, braid2d::surface::MonodromyTuple::b_star());
        assert_eq!(serialize(&doc), text);
    }

    #[test]
    fn reports_line_numbers() {
        for (text, line, needle) in [
            ("band () 1 +1\n", 1, "before degree"),
            ("degree 2\nband () 1 +2\n", 2, "exponent"),
            ("degree 2\n\nband (3) 1 +1\n", 3, "degree"),
            ("degree 2\nband () 9 +1\n", 2, "index"),
            ("degree 0\n", 1, "bad degree"),
            ("degree 2\nband ( 1\n", 2, "unclosed"),
            ("degree 2\nnoise\n", 2, "unrecognized"),
        ] {
            let e = parse(text).unwrap_err();
            assert_eq!(e.line, line, "for {:?}: {}", text, e);
            assert!(
                e.message.to_lowercase().contains(needle),
                "for {:?}: {}",
                text,
                e
            );
        }
    }

    #[test]
    fn tolerates_loose_whitespace() {
        let doc = parse("degree 3\nband ( 2 , -1 ) 2 +1\n").unwrap();
        assert_eq!(doc.tuple.entries()[0].conjugator().letters(), [2, -1]);
    }
}
