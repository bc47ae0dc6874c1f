//! Ordinary character tables and their `p`-adic Galois orbits.

mod dixon;

use serde::{Deserialize, Serialize};

pub use dixon::{dixon_prime, dixon_schneider};

use crate::arith::prime::{gcd, split_part};
use crate::arith::{CycNumber, CycValue};
use crate::error::Result;
use crate::exec::Exec;
use crate::group::Group;

/// An irreducible ordinary character, values indexed by conjugacy class.
#[derive(Debug, Clone, PartialEq)]
pub struct Character {
    pub degree: u64,
    pub values: Vec<CycNumber>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterValue {
    pub degree: u64,
    pub values: Vec<CycValue>,
}

impl Character {
    pub fn to_value(&self) -> CharacterValue {
        CharacterValue {
            degree: self.degree,
            values: self.values.iter().map(CycNumber::to_value).collect(),
        }
    }

    pub fn galois(&self, c: i64) -> Character {
        Character {
            degree: self.degree,
            values: self.values.iter().map(|v| v.galois(c)).collect(),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.values
            .iter()
            .fold(1, |acc, v| crate::arith::prime::lcm(acc, v.conductor()))
    }

    pub fn is_rational(&self) -> bool {
        self.values.iter().all(CycNumber::is_rational)
    }
}

/// `(1/|G|) Σ_g a(g) conj(b(g))` for class functions on `g`.
pub fn inner_product(g: &Group, a: &[CycNumber], b: &[CycNumber]) -> CycNumber {
    let sizes = g.classes().sizes();
    let mut acc = CycNumber::zero();
    for ((x, y), &s) in a.iter().zip(b).zip(&sizes) {
        acc = acc.add(&x.mul(&y.conj()).mul_int(s as i64));
    }
    acc.mul(&CycNumber::from_rational(1, g.order() as i64))
}

pub fn character_table(g: &Group) -> Result<Vec<Character>> {
    character_table_with(g, Exec::default())
}

pub fn character_table_with(g: &Group, exec: Exec) -> Result<Vec<Character>> {
    Ok(dixon_schneider(g, exec)?
        .into_iter()
        .map(|(degree, values)| Character { degree, values })
        .collect())
}

/// Checks both orthogonality relations exactly.
pub fn check_orthogonality(g: &Group, chars: &[Character]) -> bool {
    let frame = g.classes();
    let r = frame.len();
    if chars.len() != r {
        return false;
    }
    for (i, a) in chars.iter().enumerate() {
        for (j, b) in chars.iter().enumerate() {
            let ip = inner_product(g, &a.values, &b.values);
            if ip != CycNumber::from_int((i == j) as i64) {
                return false;
            }
        }
    }
    for c in 0..r {
        for d in 0..r {
            let mut acc = CycNumber::zero();
            for ch in chars {
                acc = acc.add(&ch.values[c].mul(&ch.values[d].conj()));
            }
            let expect = if c == d {
                frame.classes[c].centralizer_order as i64
            } else {
                0
            };
            if acc != CycNumber::from_int(expect) {
                return false;
            }
        }
    }
    true
}

/// Partition of `chars` into orbits under the automorphisms `ζ ↦ ζ^c` with
/// `c ≡ 1` modulo the `p'`-part of the exponent (so prime-to-`p` roots of
/// unity are fixed). Orbits are listed by smallest member.
pub fn galois_orbits_padic(g: &Group, chars: &[Character], p: u64) -> Vec<Vec<usize>> {
    let exponent = g.exponent();
    let (_, m_prime) = split_part(exponent, p);
    let n = chars.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    for c in (1..exponent).filter(|&c| gcd(c, exponent) == 1 && c % m_prime == 1 % m_prime) {
        for i in 0..n {
            let image = chars[i].galois(c as i64);
            if let Some(j) = chars.iter().position(|x| x.values == image.values) {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = orbits.len();
            orbits.push(Vec::new());
        }
        orbits[slot[root]].push(i);
    }
    orbits
}

/// Values on the `p`-regular classes, in class order.
pub fn restrict_p_regular(g: &Group, values: &[CycNumber], p: u64) -> Vec<CycNumber> {
    g.classes()
        .p_regular(p)
        .into_iter()
        .map(|c| values[c].clone())
        .collect()
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library::*;

    fn ints(c: &Character) -> Vec<i64> {
        c.values.iter().map(|v| v.to_i64().unwrap()).collect()
    }

    #[test]
    fn trivial_and_c2() {
        let t = character_table(&trivial()).unwrap();
        assert_eq!(t.len(), 1);
        assert_eq!(ints(&t[0]), vec![1]);
        let t = character_table(&cyclic(2)).unwrap();
        assert_eq!(ints(&t[0]), vec![1, 1]);
        assert_eq!(ints(&t[1]), vec![1, -1]);
    }

    #[test]
    fn s3_and_s4() {
        let g = symmetric(3);
        let t = character_table(&g).unwrap();
        let degs: Vec<u64> = t.iter().map(|c| c.degree).collect();
        assert_eq!(degs, vec![1, 1, 2]);
        assert!(check_orthogonality(&g, &t));
        let g = symmetric(4);
        let t = character_table(&g).unwrap();
        assert!(check_orthogonality(&g, &t));
        let two = t.iter().find(|c| c.degree == 2).unwrap();
        assert_eq!(ints(two), vec![2, 2, 0, -1, 0]);
        let r = restrict_p_regular(&g, &two.values, 2);
        assert_eq!(r, vec![CycNumber::from_int(2), CycNumber::from_int(-1)]);
    }

    #[test]
    fn c4_orbits() {
        let g = cyclic(4);
        let t = character_table(&g).unwrap();
        let orbits = galois_orbits_padic(&g, &t, 2);
        let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 1, 2]);
        let s3 = symmetric(3);
        let t = character_table(&s3).unwrap();
        assert_eq!(galois_orbits_padic(&s3, &t, 2).len(), 3);
    }

    #[test]
    fn sequential_matches_parallel() {
        let g = special_linear_2(3);
        let a = character_table_with(&g, Exec::Sequential).unwrap();
        let b = character_table_with(&g, Exec::default()).unwrap();
        assert_eq!(a, b);
    }
}
