use std::fmt::Write as _;

use algebra_core::{GroupoidTable, Symbol};
use markovski_cipher::CipherKey;

use crate::error::KeyError;

/// The parsed form of a `GCK1` key file.
///
/// The format is line-oriented ASCII with `\n` terminators, single spaces,
/// decimal integers without leading zeros, and no trailing whitespace:
///
/// ```text
/// GCK1
/// n <int> q <int> i <int>
/// table <q^n ints, row-major, a₁ most significant>
/// leaders <(n²−n)/2 ints>
/// exponents <m ints, m ≥ 1>
/// # <free-form comment>          (optional)
/// ```
///
/// Parsing is strict, so every accepted file is canonical:
/// `serialize(parse(b)) = b` and `parse(serialize(k)) = k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyFile {
    pub arity: usize,
    pub order: usize,
    pub place: usize,
    pub table: Vec<Symbol>,
    pub leaders: Vec<Symbol>,
    pub exponents: Vec<u32>,
    pub comment: Option<String>,
}

impl KeyFile {
    /// Canonical, comment-free key file contents for a validated key.
    pub fn from_key(key: &CipherKey) -> Self {
        KeyFile {
            arity: key.arity(),
            order: key.order(),
            place: key.arity(),
            table: key.forward().entries().to_vec(),
            leaders: key.leaders().to_vec(),
            exponents: key.exponents().to_vec(),
            comment: None,
        }
    }

    /// Attaches the optional trailing comment line. The text must be
    /// nonempty single-line ASCII.
    pub fn with_comment(mut self, comment: impl Into<String>) -> Self {
        let comment = comment.into();
        assert!(
            !comment.is_empty() && comment.is_ascii() && !comment.contains('\n'),
            "comment must be nonempty single-line ASCII"
        );
        self.comment = Some(comment);
        self
    }

    /// Renders the canonical byte form.
    pub fn serialize(&self) -> Vec<u8> {
        let mut out = String::new();
        out.push_str("GCK1\n");
        let _ = writeln!(out, "n {} q {} i {}", self.arity, self.order, self.place);
        push_line(&mut out, "table", self.table.iter().map(|&s| s as u64));
        push_line(&mut out, "leaders", self.leaders.iter().map(|&s| s as u64));
        push_line(
            &mut out,
            "exponents",
            self.exponents.iter().map(|&e| e as u64),
        );
        if let Some(comment) = &self.comment {
            let _ = writeln!(out, "# {comment}");
        }
        out.into_bytes()
    }

    /// Parses and structurally validates a key file: magic, header ranges,
    /// entry counts, and symbol ranges. Semantic validation (invertibility,
    /// exponent bounds) happens in [`KeyFile::into_key`].
    pub fn parse(bytes: &[u8]) -> Result<Self, KeyError> {
        if !bytes.is_ascii() {
            return Err(KeyError::NotAscii);
        }
        let text = std::str::from_utf8(bytes).expect("ascii is valid utf-8");
        if text.is_empty() {
            return Err(KeyError::MissingLine {
                line: 1,
                expected: "GCK1",
            });
        }
        if !text.ends_with('\n') {
            return Err(KeyError::Malformed {
                line: text.lines().count(),
                detail: "missing final newline".into(),
            });
        }
        let lines: Vec<&str> = text[..text.len() - 1].split('\n').collect();
        for (idx, line) in lines.iter().enumerate() {
            if line.contains('\r') {
                return Err(KeyError::Malformed {
                    line: idx + 1,
                    detail: "carriage return in line".into(),
                });
            }
        }

        let magic = line_at(&lines, 1, "GCK1")?;
        if magic != "GCK1" {
            let mut found = magic.to_string();
            found.truncate(16);
            return Err(KeyError::BadMagic { found });
        }

        let header = line_at(&lines, 2, "n <int> q <int> i <int>")?;
        let fields = parse_fields(header, 2, &["n", "q", "i"])?;
        let (arity, order, place) = (fields[0], fields[1], fields[2]);
        let cells =
            GroupoidTable::cell_count(as_usize(arity, 2)?, as_usize(order, 2)?).map_err(|e| {
                KeyError::Malformed {
                    line: 2,
                    detail: e.to_string(),
                }
            })?;
        let arity = arity as usize;
        let order = order as usize;
        if place == 0 || place > arity as u64 {
            return Err(KeyError::Malformed {
                line: 2,
                detail: format!("place i = {place} out of range for n = {arity}"),
            });
        }
        let place = place as usize;

        let table = parse_symbols(
            line_at(&lines, 3, "table <ints>")?,
            3,
            "table",
            "table entries",
            cells,
            order,
        )?;
        let leaders = parse_symbols(
            line_at(&lines, 4, "leaders <ints>")?,
            4,
            "leaders",
            "leaders",
            CipherKey::leader_count(arity),
            order,
        )?;

        let exponent_line = line_at(&lines, 5, "exponents <ints>")?;
        let raw = parse_ints(strip_tag(exponent_line, "exponents", 5)?, 5)?;
        let mut exponents = Vec::with_capacity(raw.len());
        for value in raw {
            exponents.push(u32::try_from(value).map_err(|_| KeyError::Malformed {
                line: 5,
                detail: format!("exponent {value} too large"),
            })?);
        }

        let comment = match lines.get(5) {
            None => None,
            Some(line) => match line.strip_prefix("# ") {
                Some(rest) if !rest.is_empty() => Some(rest.to_string()),
                _ => return Err(KeyError::TrailingGarbage { line: 6 }),
            },
        };
        if lines.len() > 6 {
            return Err(KeyError::TrailingGarbage { line: 7 });
        }

        Ok(KeyFile {
            arity,
            order,
            place,
            table,
            leaders,
            exponents,
            comment,
        })
    }

    /// Validates the contents into a usable cipher key: the place must be
    /// the last one, the table invertible there (a collision witness is
    /// reported otherwise), and leaders/exponents within their bounds.
    pub fn into_key(self) -> Result<CipherKey, KeyError> {
        if self.place != self.arity {
            return Err(KeyError::PlaceNotLast {
                place: self.place,
                arity: self.arity,
            });
        }
        let forward = GroupoidTable::new(self.arity, self.order, self.table)?;
        Ok(CipherKey::new(forward, self.leaders, self.exponents)?)
    }
}

/// Canonical (comment-free) serialization of a key.
pub fn serialize_key(key: &CipherKey) -> Vec<u8> {
    KeyFile::from_key(key).serialize()
}

/// Parses and fully validates a key file into a cipher key. Comments are
/// accepted and dropped; use [`KeyFile::parse`] to keep them.
pub fn parse_key(bytes: &[u8]) -> Result<CipherKey, KeyError> {
    KeyFile::parse(bytes)?.into_key()
}

fn push_line(out: &mut String, tag: &str, values: impl Iterator<Item = u64>) {
    out.push_str(tag);
    for value in values {
        out.push(' ');
        let _ = write!(out, "{value}");
    }
    out.push('\n');
}

fn line_at<'a>(
    lines: &[&'a str],
    line: usize,
    expected: &'static str,
) -> Result<&'a str, KeyError> {
    lines
        .get(line - 1)
        .copied()
        .ok_or(KeyError::MissingLine { line, expected })
}

fn as_usize(value: u64, line: usize) -> Result<usize, KeyError> {
    usize::try_from(value).map_err(|_| KeyError::Malformed {
        line,
        detail: format!("value {value} too large"),
    })
}

/// Strict decimal: nonempty, digits only, no leading zeros.
fn parse_int(token: &str, line: usize) -> Result<u64, KeyError> {
    if token.is_empty() {
        return Err(KeyError::Malformed {
            line,
            detail: "empty token (double or trailing space?)".into(),
        });
    }
    if !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(KeyError::Malformed {
            line,
            detail: format!("invalid integer {token:?}"),
        });
    }
    if token.len() > 1 && token.starts_with('0') {
        return Err(KeyError::Malformed {
            line,
            detail: format!("leading zero in {token:?}"),
        });
    }
    token.parse().map_err(|_| KeyError::Malformed {
        line,
        detail: format!("integer {token:?} out of range"),
    })
}

fn parse_ints(rest: &str, line: usize) -> Result<Vec<u64>, KeyError> {
    if rest.is_empty() {
        return Ok(Vec::new());
    }
    rest.split(' ')
        .map(|token| parse_int(token, line))
        .collect()
}

fn strip_tag<'a>(line_text: &'a str, tag: &str, line: usize) -> Result<&'a str, KeyError> {
    if line_text == tag {
        return Ok("");
    }
    line_text
        .strip_prefix(tag)
        .and_then(|rest| rest.strip_prefix(' '))
        .ok_or_else(|| KeyError::Malformed {
            line,
            detail: format!("expected line to start with {tag:?}"),
        })
}

fn parse_fields(line_text: &str, line: usize, names: &[&str]) -> Result<Vec<u64>, KeyError> {
    let tokens: Vec<&str> = line_text.split(' ').collect();
    if tokens.len() != names.len() * 2 {
        return Err(KeyError::Malformed {
            line,
            detail: format!("expected `{} <int>` pairs", names.join(" <int> ")),
        });
    }
    let mut values = Vec::with_capacity(names.len());
    for (k, name) in names.iter().enumerate() {
        if tokens[2 * k] != *name {
            return Err(KeyError::Malformed {
                line,
                detail: format!("expected field {name:?}, found {:?}", tokens[2 * k]),
            });
        }
        values.push(parse_int(tokens[2 * k + 1], line)?);
    }
    Ok(values)
}

fn parse_symbols(
    line_text: &str,
    line: usize,
    tag: &str,
    what: &'static str,
    expected: usize,
    order: usize,
) -> Result<Vec<Symbol>, KeyError> {
    let raw = parse_ints(strip_tag(line_text, tag, line)?, line)?;
    if raw.len() != expected {
        return Err(KeyError::WrongCount {
            line,
            what,
            expected,
            actual: raw.len(),
        });
    }
    raw.into_iter()
        .map(|value| {
            if value >= order as u64 {
                Err(KeyError::Malformed {
                    line,
                    detail: format!("symbol {value} out of range (q = {order})"),
                })
            } else {
                Ok(value as Symbol)
            }
        })
        .collect()
}
