use std::sync::Arc;

use modrep::arith::{cyc_rank, CycNumber, FiniteField, Mat};
use modrep::chartab::{character_table, restrict_p_regular};
use modrep::group::library::*;
use modrep::group::Group;
use modrep::rep::*;
use proptest::prelude::*;

fn gf(p: u32, e: u32) -> Arc<FiniteField> {
    Arc::new(FiniteField::new(p, e).unwrap())
}

fn ints(values: &[CycNumber]) -> Vec<i64> {
    values.iter().map(|v| v.to_i64().unwrap()).collect()
}

#[test]
fn chop_small_modules() {
    let c2 = Arc::new(cyclic(2));
    let triv = MatRep::trivial(c2.clone(), gf(2, 1), 1);
    let f = chop(&triv, 1).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].0.dim(), f[0].1), (1, 1));

    let reg = MatRep::regular(c2.clone(), gf(2, 1));
    let f = chop(&reg, 1).unwrap();
    assert_eq!(f.len(), 1);
    assert_eq!((f[0].0.dim(), f[0].1), (1, 2));
    assert!(brauer_character(&f[0].0).unwrap().is_trivial());

    let s3 = Arc::new(symmetric(3));
    let perm = MatRep::permutation(s3, gf(3, 1));
    let f = chop(&perm, 7).unwrap();
    let mut found: Vec<(Vec<i64>, usize)> = f
        .iter()
        .map(|(s, m)| (ints(&brauer_character(s).unwrap().values), *m))
        .collect();
    found.sort();
    assert_eq!(found, vec![(vec![1, -1], 1), (vec![1, 1], 2)]);
}

#[test]
fn simple_counts_and_dimensions() {
    let dims = |g: Group, p: u64| -> Vec<usize> {
        simples(&Arc::new(g), p, 1)
            .unwrap()
            .iter()
            .map(|s| s.rep.dim())
            .collect()
    };
    assert_eq!(dims(cyclic(2), 2), vec![1]);
    assert_eq!(dims(symmetric(4), 2), vec![1, 2]);
    assert_eq!(dims(symmetric(3), 3), vec![1, 1]);
    assert_eq!(dims(alternating(5), 2), vec![1, 2, 2, 4]);
    assert_eq!(dims(alternating(5), 5), vec![1, 3, 5]);
    assert_eq!(dims(special_linear_2(3), 2), vec![1, 1, 1]);
    assert_eq!(dims(special_linear_2(7), 2), vec![1, 3, 3, 8]);
    assert_eq!(dims(projective_general_linear_2(7), 2), vec![1, 6, 8]);
}

#[test]
fn brauer_character_examples() {
    let s3 = Arc::new(symmetric(3));
    let s = simples(&s3, 3, 1).unwrap();
    assert_eq!(ints(&s[0].brauer.values), vec![1, 1]);
    assert_eq!(ints(&s[1].brauer.values), vec![1, -1]);
    let s4 = Arc::new(symmetric(4));
    let s = simples(&s4, 2, 1).unwrap();
    assert_eq!(ints(&s[1].brauer.values), vec![2, -1]);
}

#[test]
fn brauer_characters_are_independent() {
    for (g, p) in [(symmetric(4), 2), (alternating(5), 2), (special_linear_2(3), 3), (dihedral_8(), 2)] {
        let g = Arc::new(g);
        let s = simples(&g, p, 3).unwrap();
        let rows: Vec<Vec<CycNumber>> = s.iter().map(|x| x.brauer.values.clone()).collect();
        assert_eq!(cyc_rank(&rows), g.classes().p_regular(p).len());
    }
}

#[test]
fn coprime_characteristic_matches_ordinary_table() {
    let g = Arc::new(symmetric(4));
    let s = simples(&g, 5, 2).unwrap();
    let table = character_table(&g).unwrap();
    for simple in &s {
        assert!(table
            .iter()
            .any(|c| restrict_p_regular(&g, &c.values, 5) == simple.brauer.values));
    }
    let g = Arc::new(symmetric(3));
    let s = simples(&g, 5, 2).unwrap();
    let perm = MatRep::permutation(g.clone(), s[0].rep.field().clone());
    for (factor, _) in chop(&perm, 4).unwrap() {
        let b = brauer_character(&factor).unwrap();
        assert!(character_table(&g).unwrap().iter().any(|c| c.values == b.values));
    }
}

#[test]
fn endomorphism_examples() {
    let c2 = Arc::new(cyclic(2));
    let k = gf(2, 1);
    let triv = MatRep::trivial(c2.clone(), k.clone(), 1);
    assert_eq!(end_ring(&triv).len(), 1);
    assert_eq!(stable_end(&triv), 1);
    let reg = MatRep::regular(c2.clone(), k.clone());
    assert_eq!(end_ring(&reg).len(), 2);
    assert_eq!(stable_end(&reg), 0);
    let kk = MatRep::trivial(c2, k, 2);
    assert_eq!(end_ring(&kk).len(), 4);
    assert_eq!(stable_end(&kk), 4);
}

#[test]
fn projective_cover_examples() {
    let c2 = Arc::new(cyclic(2));
    let data = projective_indecomposables(&c2, 2, 1).unwrap();
    let triv = data.simples[0].rep.clone();
    let pc = projective_cover(&triv, &data).unwrap();
    assert_eq!(pc.cover.dim(), 2);
    let omega = syzygy(&triv, &data).unwrap();
    assert_eq!(omega.dim(), 1);
    assert!(brauer_character(&omega).unwrap().is_trivial());
    assert_eq!(syzygy(&pc.cover, &data).unwrap().dim(), 0);

    let s4 = Arc::new(symmetric(4));
    let data = projective_indecomposables(&s4, 2, 1).unwrap();
    let dims: Vec<usize> = data.pims.iter().map(|p| p.rep.dim()).collect();
    assert_eq!(dims, vec![8, 8]);
    let two = data.simples[1].rep.clone();
    let pc = projective_cover(&two, &data).unwrap();
    assert_eq!(pc.cover.dim(), 8);
    assert_eq!(syzygy(&two, &data).unwrap().dim(), 6);
}

#[test]
fn stable_end_preserved_by_syzygy() {
    for (g, p) in [(cyclic(4), 2), (symmetric(3), 3), (symmetric(4), 2), (klein_four(), 2)] {
        let g = Arc::new(g);
        let data = projective_indecomposables(&g, p, 5).unwrap();
        for s in &data.simples {
            if stable_end(&s.rep) == 1 {
                let omega = syzygy(&s.rep, &data).unwrap();
                assert_eq!(stable_end(&omega), 1);
            }
        }
    }
}

#[test]
fn ext_of_cyclic_group() {
    let c4 = Arc::new(cyclic(4));
    let data = projective_indecomposables(&c4, 2, 1).unwrap();
    let k = data.simples[0].rep.clone();
    for n in 0..4 {
        assert_eq!(ext_dim(&k, &k, n, &data).unwrap(), 1);
    }
    let v4 = Arc::new(klein_four());
    let data = projective_indecomposables(&v4, 2, 1).unwrap();
    let k = data.simples[0].rep.clone();
    let dims: Vec<usize> = (0..4).map(|n| ext_dim(&k, &k, n, &data).unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 3, 4]);
}

fn random_invertible(n: usize, f: &FiniteField, seed: &[u32]) -> Option<Mat> {
    let q = f.order();
    let data = (0..n * n).map(|i| seed[i % seed.len()].wrapping_add(i as u32 * 7) % q).collect();
    let m = Mat { rows: n, cols: n, data };
    m.inverse(f).map(|_| m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn composition_factors_invariant_under_base_change(
        seed in proptest::collection::vec(0u32..1000, 1..8),
        chop_seed in 0u64..1000,
    ) {
        let g = Arc::new(symmetric(4));
        let s = simples(&g, 2, 1).unwrap();
        let k = s[0].rep.field().clone();
        let perm = MatRep::permutation(g.clone(), k.clone());
        let v = perm.direct_sum(&s[1].rep);
        if let Some(t) = random_invertible(v.dim(), &k, &seed) {
            let w = v.conjugate(&t).unwrap();
            let profile = |m: &MatRep, sd: u64| {
                let mut out: Vec<(usize, usize)> = chop(m, sd)
                    .unwrap()
                    .iter()
                    .map(|(x, mult)| (x.dim(), *mult))
                    .collect();
                out.sort();
                out
            };
            prop_assert_eq!(profile(&v, 0), profile(&w, chop_seed));
        }
    }
}
