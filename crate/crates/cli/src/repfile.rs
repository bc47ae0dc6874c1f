//! Residual representations as JSON generator-matrix lists, and integer
//! polynomials in `t`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use modrep::arith::{FiniteField, FiniteFieldElem, Mat};
use modrep::group::Group;
use modrep::rep::MatRep;
use modrep::{Error, Result};

/// An entry is a coefficient list (zero-padded to length `e`) or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Int(u32),
    Coeffs(Vec<u32>),
}

/// `{"p": 2, "e": 1, "generators": [[[1, 1], [0, 1]]]}`: one matrix per
/// group generator, in the order of the group file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepInput {
    pub p: u32,
    pub e: u32,
    pub generators: Vec<Vec<Vec<Entry>>>,
}

impl RepInput {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("representation file: {e}")))
    }

    pub fn build(&self, group: Arc<Group>) -> Result<MatRep> {
        let field = Arc::new(FiniteField::new(self.p, self.e)?);
        let mut mats = Vec::new();
        for (gi, m) in self.generators.iter().enumerate() {
            let n = m.len();
            let mut rows = Vec::with_capacity(n);
            for row in m {
                if row.len() != n {
                    return Err(Error::InvalidInput(format!("generator {gi} is not square")));
                }
                let mut r = Vec::with_capacity(n);
                for x in row {
                    let mut coeffs = match x {
                        Entry::Int(c) => vec![*c],
                        Entry::Coeffs(c) => c.clone(),
                    };
                    if coeffs.len() < self.e as usize {
                        coeffs.resize(self.e as usize, 0);
                    }
                    r.push(field.from_elem(&FiniteFieldElem {
                        p: self.p,
                        e: self.e,
                        coeffs,
                    })?);
                }
                rows.push(r);
            }
            mats.push(Mat::from_rows(&rows));
        }
        MatRep::new(group, field, mats)
    }
}

/// Parses `t^3 + 2*t - 4` (also `2t`, `-t^2`) into coefficients, constant first.
pub fn parse_polynomial(s: &str) -> Result<Vec<i64>> {
    let bad = |m: &str| Error::InvalidInput(format!("polynomial '{s}': {m}"));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad("empty"));
    }
    let mut coeffs: Vec<i64> = Vec::new();
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in compact.char_indices() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(&compact[start..i]);
            start = i;
        }
    }
    terms.push(&compact[start..]);
    for term in terms {
        let (sign, body) = match term.as_bytes().first() {
            Some(b'-') => (-1, &term[1..]),
            Some(b'+') => (1, &term[1..]),
            _ => (1, term),
        };
        if body.is_empty() {
            return Err(bad("dangling sign"));
        }
        let (c, deg) = match body.find('t') {
            None => (body.parse::<i64>().map_err(|_| bad("bad constant"))?, 0usize),
            Some(k) => {
                let head = body[..k].trim_end_matches('*');
                let c = if head.is_empty() {
                    1
                } else {
                    head.parse::<i64>().map_err(|_| bad("bad coefficient"))?
                };
                let tail = &body[k + 1..];
                let deg = match tail.strip_prefix('^') {
                    Some(d) => d.parse::<usize>().map_err(|_| bad("bad exponent"))?,
                    None if tail.is_empty() => 1,
                    None => return Err(bad("unexpected text after t")),
                };
                (c, deg)
            }
        };
        if deg > 64 {
            return Err(bad("degree too large"));
        }
        if coeffs.len() <= deg {
            coeffs.resize(deg + 1, 0);
        }
        coeffs[deg] += sign * c;
    }
    Ok(coeffs)
}
