//! Reduce-and-chop oracle for decomposition numbers.
//!
//! For a p-adic Galois orbit O of ordinary characters, the lattice
//! L = (p^a e_O) · O G inside the group algebra over a Galois ring is
//! G-stable of rank Σ_{χ∈O} χ(1)². Its reduction L/pL is chopped, and each
//! simple's multiplicity divided by χ(1)·|O| is d_{χν}.

use std::sync::Arc;

use modrep::arith::prime::{split_part, valuation};
use modrep::arith::{CycNumber, FiniteField, GaloisRing, Mat};
use modrep::chartab::galois_orbits_padic;
use modrep::rep::{brauer_character, chop, MatRep};
use modrep::ModularSystem;
use num_traits::{Signed, ToPrimitive};

type Gr = Vec<u64>;

fn rational_to_gr(ring: &GaloisRing, r: &num_rational::BigRational) -> Gr {
    let modulus = num_bigint::BigInt::from(ring.char_modulus());
    let reduce = |x: &num_bigint::BigInt| -> i64 {
        let mut y = x % &modulus;
        if y.is_negative() {
            y += &modulus;
        }
        y.to_i64().unwrap()
    };
    let num = ring.from_int(reduce(r.numer()));
    let den = ring.from_int(reduce(r.denom()));
    ring.mul(&num, &ring.inv(&den).expect("denominator prime to p"))
}

/// Image of a `p`-integral element of `Q(ζ_{M'})` under `ζ_{M'} ↦`
/// Teichmüller lift of the field's canonical `M'`-th root of unity.
fn cyc_to_gr(ring: &GaloisRing, x: &CycNumber, exponent: u64, m_prime: u64) -> Gr {
    let y = x.embed(exponent).descend(m_prime).expect("value lies in Q(zeta_M')");
    let f = ring.field();
    let t = ring.teichmueller(f.root_of_unity(m_prime).unwrap());
    let mut acc = ring.zero();
    let mut power = ring.one();
    for c in y.coefficients() {
        if !num_traits::Zero::is_zero(&c) {
            acc = ring.add(&acc, &ring.mul(&rational_to_gr(ring, &c), &power));
        }
        power = ring.mul(&power, &t);
    }
    acc
}

struct Echelon {
    rows: Vec<Gr2>,
    pivots: Vec<(usize, u32)>,
}

type Gr2 = Vec<Gr>;

/// Chain-ring elimination: repeatedly pivot on an entry of globally minimal
/// valuation among the remaining rows.
fn echelon(ring: &GaloisRing, mut rows: Vec<Gr2>) -> Echelon {
    let m = ring.precision();
    let mut out = Echelon { rows: Vec::new(), pivots: Vec::new() };
    loop {
        let mut best: Option<(u32, usize, usize)> = None;
        for (i, r) in rows.iter().enumerate() {
            for (j, x) in r.iter().enumerate() {
                let v = ring.valuation(x);
                if v < m && best.is_none_or(|b| v < b.0) {
                    best = Some((v, i, j));
                }
            }
        }
        let Some((v, i, j)) = best else { break };
        let pivot_row = rows.swap_remove(i);
        let unit_inv = ring.inv(&ring.div_p_pow(&pivot_row[j], v)).unwrap();
        for r in rows.iter_mut() {
            if ring.valuation(&r[j]) >= m {
                continue;
            }
            let c = ring.mul(&ring.div_p_pow(&r[j], v), &unit_inv);
            for (x, y) in r.iter_mut().zip(&pivot_row) {
                *x = ring.sub(x, &ring.mul(&c, y));
            }
        }
        out.pivots.push((j, v));
        out.rows.push(pivot_row);
    }
    out
}

/// Reduction mod p of the lattice spanned by the orbit idempotent; `None`
/// when the precision is too small.
fn reduced_module(sys: &ModularSystem, orbit: &[usize], precision: u32) -> Option<MatRep> {
    let g = sys.group();
    let f: Arc<FiniteField> = sys.field().clone();
    let p = sys.p();
    let n = g.order();
    let frame = g.classes();
    let chars = sys.characters().unwrap();
    let exponent = g.exponent();
    let (_, m_prime) = split_part(exponent, p);
    let a = valuation(n as u64, p);
    let ring = GaloisRing::new(f.clone(), precision).unwrap();
    let scale = CycNumber::from_rational(p.pow(a) as i64, n as i64);
    let class_coeffs: Vec<Gr> = (0..frame.len())
        .map(|k| {
            let mut acc = CycNumber::zero();
            for &i in orbit {
                let chi = &chars[i];
                acc = acc.add(&chi.values[frame.inverse_class[k]].mul_int(chi.degree as i64));
            }
            cyc_to_gr(&ring, &acc.mul(&scale), exponent, m_prime)
        })
        .collect();
    let e: Gr2 = (0..n).map(|x| class_coeffs[frame.class_of[x]].clone()).collect();
    let right_mul = |v: &Gr2, s: usize| -> Gr2 {
        let mut out = vec![ring.zero(); n];
        for (y, c) in v.iter().enumerate() {
            out[g.mul(y, s)] = c.clone();
        }
        out
    };
    let generators: Vec<Gr2> = (0..n).map(|s| right_mul(&e, s)).collect();
    let ech = echelon(&ring, generators);
    let rank: u64 = orbit.iter().map(|&i| chars[i].degree.pow(2)).sum();
    let max_v = ech.pivots.iter().map(|p| p.1).max().unwrap_or(0);
    if ech.rows.len() as u64 != rank || precision < 2 * max_v + 2 {
        return None;
    }
    let r = ech.rows.len();
    let mats: Vec<Mat> = g
        .generators()
        .iter()
        .map(|&s| {
            let mut m = Mat::zeros(r, r);
            for (t, w) in ech.rows.iter().enumerate() {
                let mut y = right_mul(w, s);
                for (u, (row, &(col, v))) in ech.rows.iter().zip(&ech.pivots).enumerate() {
                    let unit_inv = ring.inv(&ring.div_p_pow(&row[col], v)).unwrap();
                    let c = ring.mul(&ring.div_p_pow(&y[col], v), &unit_inv);
                    m.set(t, u, ring.residue(&c));
                    for (x, z) in y.iter_mut().zip(row) {
                        *x = ring.sub(x, &ring.mul(&c, z));
                    }
                }
                assert!(y.iter().all(|x| ring.valuation(x) >= precision - max_v));
            }
            m
        })
        .collect();
    Some(MatRep::new(g.clone(), f, mats).expect("reduced lattice is a representation"))
}

/// Decomposition matrix computed by reducing lattices and chopping.
pub fn oracle_decomposition(sys: &ModularSystem, seed: u64) -> Vec<Vec<i64>> {
    let g = sys.group();
    let p = sys.p();
    let chars = sys.characters().unwrap();
    let simples = sys.simples().unwrap();
    let mut d = vec![vec![0i64; simples.len()]; chars.len()];
    for orbit in galois_orbits_padic(g, chars, p) {
        let mut precision = 4;
        let module = loop {
            if let Some(m) = reduced_module(sys, &orbit, precision) {
                break m;
            }
            precision *= 2;
            assert!(precision <= 24, "oracle precision exhausted");
        };
        let mut mult = vec![0i64; simples.len()];
        for (factor, k) in chop(&module, seed).unwrap() {
            let b = brauer_character(&factor).unwrap();
            let nu = simples.iter().position(|s| s.brauer == b).expect("factor is a known simple");
            mult[nu] += k as i64;
        }
        for &i in &orbit {
            let denom = chars[i].degree as i64 * orbit.len() as i64;
            for nu in 0..simples.len() {
                assert_eq!(mult[nu] % denom, 0);
                d[i][nu] = mult[nu] / denom;
            }
        }
    }
    d
}
