//! Dixon–Schneider: common eigenvectors of the class matrices over a prime
//! field `GF(l)` with `l ≡ 1 (mod exp G)`, lifted by inverse DFT along the
//! power maps.

use crate::arith::prime::is_prime;
use crate::arith::{CycNumber, FiniteField, Fq, Mat};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::group::{Group, StructureConstants};

/// Smallest prime `l ≡ 1 (mod exponent)` with `l > 2 sqrt(order)`.
pub fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut l = exponent + 1;
    while !(is_prime(l) && l * l > 4 * order) {
        l += exponent;
    }
    l
}

fn splitting_spaces(sc: &StructureConstants, f: &FiniteField) -> Result<Vec<Vec<Fq>>> {
    let r = sc.num_classes();
    let mut spaces: Vec<Mat> = vec![Mat::identity(r)];
    for j in 1..r {
        if spaces.iter().all(|s| s.rows == 1) {
            break;
        }
        // omega . B_j = omega(K_j) omega
        let mut b = Mat::zeros(r, r);
        for i in 0..r {
            for k in 0..r {
                b.set(k, i, f.from_int(sc.get(j, i, k) as i64));
            }
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.rows == 1 {
                next.push(space);
                continue;
            }
            next.extend(split_space(&space, &b, f)?);
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.rows != 1) {
        return Err(Error::InternalInconsistency(
            "class matrices failed to separate the characters".into(),
        ));
    }
    Ok(spaces.into_iter().map(|s| s.row(0).to_vec()).collect())
}

/// Splits the invariant row space `space` into eigenspaces of `b`.
fn split_space(space: &Mat, b: &Mat, f: &FiniteField) -> Result<Vec<Mat>> {
    let d = space.rows;
    let mut echelon = space.clone();
    let pivots = echelon.rref(f);
    let images = space.mul(b, f);
    // coordinates of each image row in the basis `space`
    let inv_basis = {
        let mut sub = Mat::zeros(d, d);
        for (a, &pc) in pivots.iter().enumerate() {
            for c in 0..d {
                sub.set(c, a, space.get(c, pc));
            }
        }
        sub.inverse(f).ok_or(Error::SingularSystem)?
    };
    let mut restricted = Mat::zeros(d, d);
    for a in 0..d {
        let picked: Vec<Fq> = pivots.iter().map(|&pc| images.get(a, pc)).collect();
        let coords = inv_basis.vec_mul(&picked, f);
        for c in 0..d {
            restricted.set(a, c, coords[c]);
        }
    }
    let cp = restricted.charpoly(f);
    let mut roots = Vec::new();
    for x in f.elements() {
        if crate::arith::matrix::poly_eval(&cp, x, f) == 0 {
            roots.push(x);
        }
    }
    let mut out = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted = restricted.sub(&Mat::scalar(d, lambda), f);
        let kernel = shifted.left_kernel(f);
        total += kernel.len();
        let coords = Mat::from_rows(&kernel);
        out.push(coords.mul(space, f));
    }
    if total != d {
        return Err(Error::InternalInconsistency(
            "class matrix not diagonalizable over the Dixon prime field".into(),
        ));
    }
    Ok(out)
}

fn sqrt_bounded(x: u64, bound: u64, l: u64) -> Option<u64> {
    (1..=bound).find(|&d| d * d % l == x)
}

/// Irreducible characters as `(degree, values)` with values indexed by class.
pub fn dixon_schneider(g: &Group, exec: Exec) -> Result<Vec<(u64, Vec<CycNumber>)>> {
    let frame = g.classes();
    let r = frame.len();
    let n = g.order() as u64;
    let exponent = g.exponent();
    let l = dixon_prime(exponent, n);
    let f = FiniteField::new(l as u32, 1)?;
    let sc = StructureConstants::compute(g, exec);
    let omegas = splitting_spaces(&sc, &f)?;
    let sizes = frame.sizes();
    let powers: Vec<Vec<usize>> = (0..r)
        .map(|c| {
            let o = frame.classes[c].element_order as i64;
            (0..o).map(|k| frame.power_class(g, c, k)).collect()
        })
        .collect();
    let root = |o: u64| f.root_of_unity(o).expect("l - 1 divisible by element orders");

    let mut chars = exec
        .map_slice(&omegas, |v| -> Result<(u64, Vec<Fq>, Vec<CycNumber>)> {
            let lead = f.inv(v[0]);
            let w: Vec<Fq> = v.iter().map(|&x| f.mul(x, lead)).collect();
            let mut s = 0;
            for j in 0..r {
                let t = f.mul(w[j], w[frame.inverse_class[j]]);
                s = f.add(s, f.div(t, f.from_int(sizes[j] as i64)));
            }
            if s == 0 {
                return Err(Error::InternalInconsistency("zero norm eigenvector".into()));
            }
            let deg_sq = f.div(f.from_int(n as i64), s) as u64;
            let bound = (n as f64).sqrt() as u64 + 1;
            let deg = sqrt_bounded(deg_sq, bound, l)
                .ok_or_else(|| Error::InternalInconsistency("degree not recoverable".into()))?;
            let deg_f = f.from_int(deg as i64);
            let residues: Vec<Fq> = (0..r)
                .map(|j| f.div(f.mul(w[j], deg_f), f.from_int(sizes[j] as i64)))
                .collect();
            let mut values = Vec::with_capacity(r);
            for c in 0..r {
                let o = frame.classes[c].element_order;
                let z = root(o);
                let o_inv = f.inv(f.from_int(o as i64));
                let mut mult = vec![0i64; o as usize];
                for (t, m) in mult.iter_mut().enumerate() {
                    let mut acc = 0;
                    for k in 0..o {
                        let e = (o - (k * t as u64) % o) % o;
                        acc = f.add(acc, f.mul(residues[powers[c][k as usize]], f.pow(z, e)));
                    }
                    let mt = f.mul(acc, o_inv) as u64;
                    if mt > deg {
                        return Err(Error::InternalInconsistency(
                            "eigenvalue multiplicity out of range".into(),
                        ));
                    }
                    *m = mt as i64;
                }
                values.push(CycNumber::from_root_multiplicities(o, &mult).minimize_conductor());
            }
            Ok((deg, residues, values))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    chars.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(chars.into_iter().map(|(d, _, v)| (d, v)).collect())
}
