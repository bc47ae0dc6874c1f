//! Plain-text permutation group input.
//!
//! ```text
//! # comment
//! name S4
//! domain 4
//! gen (1 2 3 4)
//! gen (1 2)
//! ```

use std::fmt;

use modrep::group::{Group, Perm};

#[derive(Debug, Clone, PartialEq, Eq)]
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

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInput {
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<Perm>,
}

impl GroupInput {
    pub fn build(&self) -> modrep::Result<Group> {
        Group::from_generators(self.degree, &self.generators)
    }

    /// Canonical text form, accepted by [`parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            s.push_str(&format!("name {n}\n"));
        }
        s.push_str(&format!("domain {}\n", self.degree));
        for g in &self.generators {
            s.push_str(&format!("gen {g}\n"));
        }
        s
    }
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse(text: &str) -> Result<GroupInput, ParseError> {
    let mut name = None;
    let mut degree: Option<usize> = None;
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.chars().count() - trimmed.chars().count();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_col = indent + keyword.len() + 2;
        match keyword {
            "name" => {
                let label = rest.trim();
                if label.is_empty() {
                    return Err(err(line_no, rest_col, "expected a label"));
                }
                name = Some(label.to_string());
            }
            "domain" => {
                if degree.is_some() {
                    return Err(err(line_no, indent + 1, "duplicate domain line"));
                }
                let d: usize = rest
                    .trim()
                    .parse()
                    .map_err(|_| err(line_no, rest_col, "expected a positive integer"))?;
                if d == 0 {
                    return Err(err(line_no, rest_col, "domain must be positive"));
                }
                degree = Some(d);
            }
            "gen" => {
                let d = degree.ok_or_else(|| err(line_no, indent + 1, "gen before domain"))?;
                generators.push(parse_cycles(rest, d, line_no, rest_col)?);
            }
            other => {
                return Err(err(line_no, indent + 1, format!("unknown keyword '{other}'")));
            }
        }
    }
    let degree = degree.ok_or_else(|| err(1, 1, "missing domain line"))?;
    Ok(GroupInput {
        name,
        degree,
        generators,
    })
}

/// Parses `(a b c)(d e)` with 1-based points; `col0` is the column of `s[0]`.
fn parse_cycles(s: &str, degree: usize, line: usize, col0: usize) -> Result<Perm, ParseError> {
    let chars: Vec<char> = s.chars().collect();
    let mut cycles: Vec<Vec<u32>> = Vec::new();
    let mut seen = vec![false; degree];
    let mut current: Option<Vec<u32>> = None;
    let mut k = 0;
    while k < chars.len() {
        let c = chars[k];
        let col = col0 + k;
        match c {
            ' ' | '\t' | ',' => k += 1,
            '(' => {
                if current.is_some() {
                    return Err(err(line, col, "nested '('"));
                }
                current = Some(Vec::new());
                k += 1;
            }
            ')' => {
                let cyc = current.take().ok_or_else(|| err(line, col, "unmatched ')'"))?;
                if !cyc.is_empty() {
                    cycles.push(cyc);
                }
                k += 1;
            }
            '0'..='9' => {
                let start = k;
                while k < chars.len() && chars[k].is_ascii_digit() {
                    k += 1;
                }
                let text: String = chars[start..k].iter().collect();
                let cyc = current
                    .as_mut()
                    .ok_or_else(|| err(line, col, "point outside a cycle"))?;
                let x: usize = text.parse().map_err(|_| err(line, col, "point out of range"))?;
                if x == 0 || x > degree {
                    return Err(err(line, col, format!("point {x} outside 1..{degree}")));
                }
                if seen[x - 1] {
                    return Err(err(line, col, format!("point {x} repeated")));
                }
                seen[x - 1] = true;
                cyc.push(x as u32 - 1);
            }
            other => return Err(err(line, col, format!("unexpected character '{other}'"))),
        }
    }
    if current.is_some() {
        return Err(err(line, col0 + chars.len(), "unclosed '('"));
    }
    Ok(Perm::from_cycles(degree, &cycles).expect("validated cycles"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_s4() {
        let g = parse("name S4\ndomain 4\ngen (1 2 3 4)\ngen (1 2)\n").unwrap();
        assert_eq!(g.build().unwrap().order(), 24);
        assert_eq!(parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn identity_and_comments() {
        let g = parse("# c1\ndomain 3  # points\ngen ()\n").unwrap();
        assert_eq!(g.build().unwrap().order(), 1);
    }

    #[test]
    fn diagnostics() {
        let e = parse("domain 4\ngen (1 2)(2 3)").unwrap_err();
        assert_eq!((e.line, e.column), (2, 11));
        let e = parse("domain 4\ngen (1 5)").unwrap_err();
        assert_eq!((e.line, e.column), (2, 8));
        let e = parse("gen (1 2)").unwrap_err();
        assert_eq!((e.line, e.column), (1, 1));
        let e = parse("domain 4\n  bogus").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse("domain 4\ngen (1 2").unwrap_err();
        assert_eq!(e.line, 2);
    }
}
