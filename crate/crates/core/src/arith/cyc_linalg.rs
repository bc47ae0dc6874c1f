//! Exact linear algebra over cyclotomic fields.

use super::cyclotomic::CycNumber;
use crate::error::{Error, Result};

/// Solves `A x = b` exactly for square invertible `A`.
pub fn cyc_solve(a: &[Vec<CycNumber>], b: &[CycNumber]) -> Result<Vec<CycNumber>> {
    let rhs: Vec<Vec<CycNumber>> = b.iter().map(|x| vec![x.clone()]).collect();
    Ok(cyc_solve_many(a, &rhs)?
        .into_iter()
        .map(|mut r| r.pop().unwrap())
        .collect())
}

/// Solves `A X = B` for a block of right-hand sides (`B` is `n × k`).
pub fn cyc_solve_many(a: &[Vec<CycNumber>], b: &[Vec<CycNumber>]) -> Result<Vec<Vec<CycNumber>>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return Err(Error::InvalidInput("cyc_solve needs a square system".into()));
    }
    let k = b.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<CycNumber>> = a
        .iter()
        .zip(b)
        .map(|(r, x)| r.iter().chain(x).cloned().collect())
        .collect();
    for c in 0..n {
        // Prefer pivots of small conductor: they keep intermediate values cheap.
        let piv = (c..n)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| (m[i][c].conductor(), i))
            .ok_or(Error::SingularSystem)?;
        m.swap(c, piv);
        let inv = m[c][c].inv().expect("nonzero pivot");
        m[c] = m[c].iter().map(|x| x.mul(&inv)).collect();
        let prow = m[c].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == c || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
    }
    Ok(m.into_iter().map(|r| r[n..n + k].to_vec()).collect())
}

/// Rank of a matrix over the cyclotomic field.
pub fn cyc_rank(a: &[Vec<CycNumber>]) -> usize {
    let mut m: Vec<Vec<CycNumber>> = a.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, piv);
        let inv = m[r][c].inv().unwrap();
        let prow: Vec<CycNumber> = m[r].iter().map(|x| x.mul(&inv)).collect();
        for row in m.iter_mut().skip(r + 1) {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&prow).skip(c) {
                *x = x.sub(&f.mul(y));
            }
        }
        r += 1;
    }
    r
}

/// `A · x`.
pub fn cyc_mat_vec(a: &[Vec<CycNumber>], x: &[CycNumber]) -> Vec<CycNumber> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(x)
                .fold(CycNumber::zero(), |acc, (u, v)| acc.add(&u.mul(v)))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_diagonal() {
        let one = CycNumber::one;
        let zero = CycNumber::zero;
        let id = vec![vec![one(), zero()], vec![zero(), one()]];
        let b = vec![CycNumber::zeta(3, 1), CycNumber::from_int(5)];
        assert_eq!(cyc_solve(&id, &b).unwrap(), b);
        let i = CycNumber::zeta(4, 1);
        let a = vec![vec![i.clone(), zero()], vec![zero(), one()]];
        let x = cyc_solve(&a, &[one(), one()]).unwrap();
        assert_eq!(x, vec![i.neg(), one()]);
    }

    #[test]
    fn singular_is_reported() {
        let a = vec![
            vec![CycNumber::one(), CycNumber::from_int(2)],
            vec![CycNumber::from_int(2), CycNumber::from_int(4)],
        ];
        assert_eq!(cyc_solve(&a, &[CycNumber::one(), CycNumber::one()]), Err(Error::SingularSystem));
        assert_eq!(cyc_rank(&a), 1);
    }
}
