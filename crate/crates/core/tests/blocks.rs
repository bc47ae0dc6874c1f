use std::sync::Arc;

use modrep::block::{brauer_correspondent, class_algebra_mul, RepresentationType, TwoGroupShape};
use modrep::group::library::*;
use modrep::group::{Group, StructureConstants};
use modrep::{Exec, ModularSystem};

fn system(g: Group, p: u64) -> ModularSystem {
    ModularSystem::new(Arc::new(g), p, 11).unwrap()
}

fn check_idempotents(sys: &ModularSystem) {
    let g = sys.group();
    let sc = StructureConstants::compute(g, Exec::default());
    let f = sys.field();
    let bs = sys.blocks().unwrap();
    let r = g.classes().len();
    let mut sum = vec![0; r];
    for (i, a) in bs.blocks.iter().enumerate() {
        assert!(a.idempotent.iter().any(|&x| x != 0));
        assert_eq!(class_algebra_mul(&sc, f, &a.idempotent, &a.idempotent), a.idempotent);
        for (j, b) in bs.blocks.iter().enumerate() {
            if i != j {
                assert!(class_algebra_mul(&sc, f, &a.idempotent, &b.idempotent).iter().all(|&x| x == 0));
            }
        }
        for k in 0..r {
            sum[k] = f.add(sum[k], a.idempotent[k]);
        }
    }
    let mut one = vec![0; r];
    one[0] = 1;
    assert_eq!(sum, one);
    let chars = sys.characters().unwrap();
    let p = sys.p();
    let a = modrep::arith::prime::valuation(g.order() as u64, p);
    for b in &bs.blocks {
        let min_nu = b
            .characters
            .iter()
            .map(|&i| modrep::arith::prime::valuation(chars[i].degree, p))
            .min()
            .unwrap();
        assert_eq!(b.defect, a - min_nu);
        assert_eq!(b.defect_group.len() as u64, p.pow(b.defect));
    }
    let principal = bs.principal();
    assert!(principal.characters.contains(&0));
    assert!(g.are_conjugate_subgroups(&principal.defect_group, &g.sylow_elements(p)));
    let mut seen = vec![0; chars.len()];
    for b in &bs.blocks {
        for &c in &b.characters {
            seen[c] += 1;
        }
    }
    assert!(seen.iter().all(|&x| x == 1));
}

#[test]
fn corpus_idempotents() {
    for (g, p) in [
        (cyclic(4), 2),
        (symmetric(3), 2),
        (symmetric(3), 3),
        (symmetric(3), 5),
        (dihedral_8(), 2),
        (quaternion_8(), 2),
        (symmetric(4), 2),
        (symmetric(4), 3),
        (special_linear_2(3), 2),
        (special_linear_2(3), 3),
        (alternating(5), 2),
        (alternating(5), 3),
        (alternating(5), 5),
        (special_linear_2(7), 2),
        (projective_general_linear_2(7), 2),
    ] {
        check_idempotents(&system(g, p));
    }
}

#[test]
fn semisimple_case() {
    let sys = system(symmetric(3), 5);
    let bs = sys.blocks().unwrap();
    assert_eq!(bs.blocks.len(), 3);
    assert!(bs.blocks.iter().all(|b| b.defect == 0 && b.characters.len() == 1));
    assert!(bs
        .blocks
        .iter()
        .all(|b| b.representation_type == RepresentationType::Finite));
}

#[test]
fn block_examples() {
    let sys = system(symmetric(4), 2);
    let bs = sys.blocks().unwrap();
    assert_eq!(bs.blocks.len(), 1);
    assert_eq!(bs.blocks[0].characters.len(), 5);
    assert_eq!(bs.blocks[0].defect_group.len(), 8);
    assert_eq!(bs.blocks[0].shape, Some(TwoGroupShape::Dihedral));
    assert_eq!(
        bs.blocks[0].representation_type,
        RepresentationType::Tame(TwoGroupShape::Dihedral)
    );

    let sys = system(alternating(5), 5);
    let bs = sys.blocks().unwrap();
    assert_eq!(bs.blocks.len(), 2);
    assert_eq!(bs.blocks[0].characters.len(), 4);
    let chars = sys.characters().unwrap();
    assert_eq!(bs.blocks[1].characters.len(), 1);
    assert_eq!(chars[bs.blocks[1].characters[0]].degree, 5);
    assert_eq!(bs.blocks[1].defect, 0);
    assert_eq!(bs.blocks[1].defect_group.len(), 1);

    let sys = system(alternating(5), 2);
    let bs = sys.blocks().unwrap();
    assert_eq!(bs.principal().shape, Some(TwoGroupShape::KleinFour));
    assert_eq!(
        bs.principal().representation_type,
        RepresentationType::Tame(TwoGroupShape::KleinFour)
    );

    let sys = system(special_linear_2(7), 2);
    let bs = sys.blocks().unwrap();
    assert_eq!(bs.principal().defect_group.len(), 16);
    assert_eq!(bs.principal().shape, Some(TwoGroupShape::Quaternion));
}

#[test]
fn correspondents() {
    for (g, p) in [(cyclic(4), 2), (symmetric(4), 2), (alternating(5), 5), (special_linear_2(3), 2)] {
        let sys = system(g, p);
        let gb = sys.blocks().unwrap();
        let frame = sys.frame();
        for i in 0..frame.slots.len() {
            let cs = sys.slot_system(i);
            let cb = cs.blocks().unwrap();
            for b in 0..cb.blocks.len() {
                let corr = brauer_correspondent(sys.group(), gb, &frame.slots[i].centralizer, cb, b).unwrap();
                if i == 0 {
                    assert_eq!(corr, b);
                }
                if gb.blocks.len() == 1 {
                    assert_eq!(corr, 0);
                }
            }
        }
    }
}
