//! Character-table files.
//!
//! ```text
//! # comment
//! group S3 6
//! classes 1 3 2
//! irrep 1 1 1 1
//! irrep 1 1 -1 1
//! irrep 2 2 0 -1
//! ```
//! Character values are Gaussian rationals such as `1/2+3/4i`.

use std::fmt;

use witten::finite::{CharacterTable, ConjugacyClass, GaussianRational, Irrep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for TableError {}

fn err(line: usize, message: impl Into<String>) -> TableError {
    TableError {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, what: &str, tok: &str) -> Result<T, TableError> {
    tok.parse()
        .map_err(|_| err(line, format!("{what} '{tok}' is not a valid number")))
}

/// Parses and validates a table. Structural failures (orthogonality,
/// class sizes) are reported against the last line of the table.
pub fn parse_table(text: &str) -> Result<CharacterTable, TableError> {
    let mut header: Option<(String, u64)> = None;
    let mut classes: Option<Vec<ConjugacyClass>> = None;
    let mut irreps = Vec::new();
    let mut last = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        last = line;
        let mut toks = content.split_whitespace();
        let keyword = toks.next().unwrap_or_default();
        let rest: Vec<&str> = toks.collect();
        match keyword {
            "group" => {
                if header.is_some() {
                    return Err(err(line, "duplicate 'group' line"));
                }
                let [name, order] = rest[..] else {
                    return Err(err(line, "expected 'group <name> <order>'"));
                };
                header = Some((name.to_string(), number(line, "order", order)?));
            }
            "classes" => {
                if header.is_none() {
                    return Err(err(line, "'classes' before 'group'"));
                }
                if classes.is_some() {
                    return Err(err(line, "duplicate 'classes' line"));
                }
                if rest.is_empty() {
                    return Err(err(line, "expected at least one class size"));
                }
                let sizes = rest
                    .iter()
                    .enumerate()
                    .map(|(i, t)| {
                        Ok(ConjugacyClass {
                            label: format!("c{}", i + 1),
                            size: number(line, "class size", t)?,
                        })
                    })
                    .collect::<Result<Vec<_>, TableError>>()?;
                classes = Some(sizes);
            }
            "irrep" => {
                let Some(cls) = &classes else {
                    return Err(err(line, "'irrep' before 'classes'"));
                };
                let Some((degree, chars)) = rest.split_first() else {
                    return Err(err(line, "expected 'irrep <degree> <chi...>'"));
                };
                if chars.len() != cls.len() {
                    return Err(err(
                        line,
                        format!("{} character values for {} classes", chars.len(), cls.len()),
                    ));
                }
                let chars = chars
                    .iter()
                    .map(|t| {
                        t.parse::<GaussianRational>()
                            .map_err(|_| err(line, format!("bad character value '{t}'")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                irreps.push(Irrep {
                    degree: number(line, "degree", degree)?,
                    chars,
                });
            }
            other => return Err(err(line, format!("unknown keyword '{other}'"))),
        }
    }
    let (name, order) = header.ok_or_else(|| err(last.max(1), "missing 'group' line"))?;
    let classes = classes.ok_or_else(|| err(last, "missing 'classes' line"))?;
    CharacterTable::new(&name, order, classes, irreps).map_err(|e| err(last, e.to_string()))
}
