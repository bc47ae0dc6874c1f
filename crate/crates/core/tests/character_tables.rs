use modrep::chartab::{character_table, check_orthogonality, galois_orbits_padic};
use modrep::group::library::*;
use modrep::group::Group;

fn corpus() -> Vec<(&'static str, Group)> {
    vec![
        ("C2", cyclic(2)),
        ("C4", cyclic(4)),
        ("S3", symmetric(3)),
        ("D8", dihedral_8()),
        ("Q8", quaternion_8()),
        ("S4", symmetric(4)),
        ("SL(2,3)", special_linear_2(3)),
        ("A5", alternating(5)),
        ("SL(2,7)", special_linear_2(7)),
        ("PGL(2,7)", projective_general_linear_2(7)),
    ]
}

#[test]
fn corpus_tables_are_orthogonal() {
    for (name, g) in corpus() {
        let t = character_table(&g).unwrap();
        assert!(check_orthogonality(&g, &t), "{name}");
        let sq: u64 = t.iter().map(|c| c.degree * c.degree).sum();
        assert_eq!(sq, g.order() as u64, "{name}");
        assert!(t[0].values.iter().all(|v| v.to_i64() == Some(1)));
        for c in &t {
            assert!(c.values.iter().all(|v| v.is_algebraic_integer()));
            assert_eq!(c.values[0].to_i64(), Some(c.degree as i64));
            let frame = g.classes();
            for k in 0..frame.len() {
                assert_eq!(c.values[frame.inverse_class[k]], c.values[k].conj());
            }
        }
    }
}

#[test]
fn degree_multisets() {
    let degs = |g: &Group| -> Vec<u64> {
        character_table(g).unwrap().iter().map(|c| c.degree).collect()
    };
    assert_eq!(degs(&alternating(5)), vec![1, 3, 3, 4, 5]);
    assert_eq!(degs(&special_linear_2(3)), vec![1, 1, 1, 2, 2, 2, 3]);
    assert_eq!(degs(&special_linear_2(7)), vec![1, 3, 3, 4, 4, 6, 6, 6, 7, 8, 8]);
    assert_eq!(degs(&projective_general_linear_2(7)), vec![1, 1, 6, 6, 6, 7, 7, 8, 8]);
}

#[test]
fn sl27_faithful_orbits_at_two() {
    let g = special_linear_2(7);
    let t = character_table(&g).unwrap();
    let orbits = galois_orbits_padic(&g, &t, 2);
    // The 3-dimensional pair is Galois conjugate over Q(sqrt(-7)), which the
    // 2-adic automorphisms fix; the faithful 4s and 6s lie in Q(sqrt 2) orbits.
    assert!(orbits.iter().all(|o| o.len() <= 2));
}
