//! Standard groups as permutation groups.

use super::{Group, Perm};
use crate::arith::prime::{is_prime, primitive_root};

fn build(n: usize, gens: Vec<Perm>) -> Group {
    Group::from_generators(n, &gens).expect("library group within cap")
}

fn cycle(n: usize, points: &[u32]) -> Perm {
    Perm::from_cycles(n, &[points.to_vec()]).unwrap()
}

pub fn trivial() -> Group {
    build(1, vec![])
}

/// Cyclic group of order `n` acting regularly.
pub fn cyclic(n: usize) -> Group {
    let pts: Vec<u32> = (0..n as u32).collect();
    build(n, vec![cycle(n, &pts)])
}

pub fn symmetric(n: usize) -> Group {
    if n < 2 {
        return build(n.max(1), vec![]);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    build(n, vec![cycle(n, &[0, 1]), cycle(n, &all)])
}

pub fn alternating(n: usize) -> Group {
    if n < 3 {
        return build(n.max(1), vec![]);
    }
    let gens = (2..n as u32).map(|k| cycle(n, &[0, 1, k])).collect();
    build(n, gens)
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<u32> = (0..n as u32).collect();
    let refl = Perm((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect());
    build(n, vec![cycle(n, &rot), refl])
}

pub fn dihedral_8() -> Group {
    build(4, vec![cycle(4, &[0, 1, 2, 3]), cycle(4, &[0, 2])])
}

pub fn klein_four() -> Group {
    let a = Perm::from_cycles(4, &[vec![0, 1], vec![2, 3]]).unwrap();
    let b = Perm::from_cycles(4, &[vec![0, 2], vec![1, 3]]).unwrap();
    build(4, vec![a, b])
}

type Mat2 = [[u64; 2]; 2];

/// Permutation of the nonzero row vectors of `GF(p)^2` induced by `v -> v m`.
fn vector_action(p: u64, m: Mat2) -> Perm {
    let idx = |a: u64, b: u64| (a * p + b - 1) as u32;
    let mut images = vec![0u32; (p * p - 1) as usize];
    for a in 0..p {
        for b in 0..p {
            if a == 0 && b == 0 {
                continue;
            }
            let x = (a * m[0][0] + b * m[1][0]) % p;
            let y = (a * m[0][1] + b * m[1][1]) % p;
            images[idx(a, b) as usize] = idx(x, y);
        }
    }
    Perm(images)
}

/// Permutation of the projective line `P^1(GF(p))`: point `x` is `(x:1)`
/// and point `p` is `(1:0)`.
fn projective_action(p: u64, m: Mat2) -> Perm {
    let inv = |a: u64| crate::arith::prime::inv_mod(a, p).unwrap();
    let images = (0..=p)
        .map(|pt| {
            let (a, b) = if pt == p { (1, 0) } else { (pt, 1) };
            let x = (a * m[0][0] + b * m[1][0]) % p;
            let y = (a * m[0][1] + b * m[1][1]) % p;
            if y == 0 {
                p as u32
            } else {
                (x * inv(y) % p) as u32
            }
        })
        .collect();
    Perm(images)
}

pub fn quaternion_8() -> Group {
    build(
        8,
        vec![
            vector_action(3, [[0, 1], [2, 0]]),
            vector_action(3, [[1, 1], [1, 2]]),
        ],
    )
}

/// `SL(2, p)` on the `p^2 - 1` nonzero vectors.
pub fn special_linear_2(p: u64) -> Group {
    assert!(is_prime(p));
    build(
        (p * p - 1) as usize,
        vec![
            vector_action(p, [[1, 1], [0, 1]]),
            vector_action(p, [[1, 0], [1, 1]]),
        ],
    )
}

/// `GL(2, p)` on the `p^2 - 1` nonzero vectors.
pub fn general_linear_2(p: u64) -> Group {
    assert!(is_prime(p));
    let g = primitive_root(p);
    build(
        (p * p - 1) as usize,
        vec![
            vector_action(p, [[g, 0], [0, 1]]),
            vector_action(p, [[1, 1], [0, 1]]),
            vector_action(p, [[1, 0], [1, 1]]),
        ],
    )
}

/// `PGL(2, p)` on the `p + 1` points of the projective line.
pub fn projective_general_linear_2(p: u64) -> Group {
    assert!(is_prime(p));
    let g = primitive_root(p);
    build(
        (p + 1) as usize,
        vec![
            projective_action(p, [[g, 0], [0, 1]]),
            projective_action(p, [[1, 1], [0, 1]]),
            projective_action(p, [[0, 1], [1, 0]]),
        ],
    )
}

/// Looks up a group by a short name such as `s4`, `c6`, `q8`, `sl2_7`,
/// `pgl2_7`, `a5`, `d8`, `v4`.
pub fn by_name(name: &str) -> Option<Group> {
    let name = name.to_ascii_lowercase();
    let num = |prefix: &str| -> Option<u64> { name.strip_prefix(prefix)?.parse().ok() };
    match name.as_str() {
        "1" | "trivial" => return Some(trivial()),
        "q8" => return Some(quaternion_8()),
        "v4" | "klein4" => return Some(klein_four()),
        "d8" => return Some(dihedral_8()),
        _ => {}
    }
    if let Some(p) = num("pgl2_") {
        return is_prime(p).then(|| projective_general_linear_2(p));
    }
    if let Some(p) = num("gl2_") {
        return is_prime(p).then(|| general_linear_2(p));
    }
    if let Some(p) = num("sl2_") {
        return is_prime(p).then(|| special_linear_2(p));
    }
    if let Some(n) = num("c").filter(|&n| (1..=10_000).contains(&n)) {
        return Some(cyclic(n as usize));
    }
    if let Some(n) = num("s").filter(|&n| (1..=8).contains(&n)) {
        return Some(symmetric(n as usize));
    }
    if let Some(n) = num("a").filter(|&n| (1..=8).contains(&n)) {
        return Some(alternating(n as usize));
    }
    if let Some(n) = num("d").filter(|&n| n % 2 == 0 && (4..=2000).contains(&n)) {
        return Some(dihedral(n as usize / 2));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involutions(g: &Group) -> usize {
        (0..g.order()).filter(|&x| g.element_order(x) == 2).count()
    }

    #[test]
    fn orders_and_class_counts() {
        let cases: Vec<(Group, usize, usize)> = vec![
            (cyclic(2), 2, 2),
            (cyclic(4), 4, 4),
            (symmetric(3), 6, 3),
            (dihedral_8(), 8, 5),
            (quaternion_8(), 8, 5),
            (symmetric(4), 24, 5),
            (special_linear_2(3), 24, 7),
            (alternating(5), 60, 5),
            (special_linear_2(7), 336, 11),
            (projective_general_linear_2(7), 336, 9),
            (klein_four(), 4, 4),
            (dihedral(8), 16, 7),
        ];
        for (g, order, classes) in cases {
            assert_eq!(g.order(), order);
            assert_eq!(g.classes().len(), classes);
            assert_eq!(g.classes().sizes().iter().sum::<usize>(), order);
        }
    }

    #[test]
    fn involution_counts() {
        assert_eq!(involutions(&quaternion_8()), 1);
        assert_eq!(involutions(&dihedral_8()), 5);
        assert_eq!(involutions(&special_linear_2(7)), 1);
        assert_eq!(involutions(&projective_general_linear_2(7)), 49);
    }

    #[test]
    fn names() {
        assert_eq!(by_name("S4").unwrap().order(), 24);
        assert_eq!(by_name("sl2_7").unwrap().order(), 336);
        assert_eq!(by_name("d16").unwrap().order(), 16);
        assert!(by_name("sl2_8").is_none());
    }
}
