use std::sync::Arc;

use modrep::arith::{FiniteField, Mat};
use modrep::deform::*;
use modrep::group::library::*;
use modrep::group::Group;
use modrep::rep::{stable_end, MatRep};

fn gf(p: u32, e: u32) -> Arc<FiniteField> {
    Arc::new(FiniteField::new(p, e).unwrap())
}

fn triv(g: Group, f: &Arc<FiniteField>, n: usize) -> MatRep {
    MatRep::trivial(Arc::new(g), f.clone(), n)
}

#[test]
fn cohomology_examples() {
    let f2 = gf(2, 1);
    let c = cohomology_dims(&triv(trivial(), &f2, 2)).unwrap();
    assert_eq!((c.h0, c.h1, c.h2), (4, 0, 0));
    let c = cohomology_dims(&triv(cyclic(2), &f2, 1)).unwrap();
    assert_eq!((c.h0, c.h1, c.h2), (1, 1, 1));
    let c = cohomology_dims(&triv(klein_four(), &f2, 1)).unwrap();
    assert_eq!(c.h1, 2);
    let c = cohomology_dims(&triv(cyclic(3), &f2, 1)).unwrap();
    assert_eq!((c.h1, c.h2), (0, 0));
}

#[test]
fn lifts_of_trivial_character() {
    let f2 = gf(2, 1);
    let rho = triv(cyclic(2), &f2, 1);
    let k = Arc::new(LocalAlgebra::residue_field(f2.clone()));
    assert_eq!(enumerate_lifts(&rho, k).unwrap().len(), 1);
    let ke = Arc::new(LocalAlgebra::dual_numbers(f2.clone()));
    assert_eq!(enumerate_lifts(&rho, ke).unwrap().len(), 2);
    let z4 = Arc::new(LocalAlgebra::witt(f2.clone(), 2).unwrap());
    assert_eq!(enumerate_lifts(&rho, z4).unwrap().len(), 2);
}

#[test]
fn tangent_round_trip() {
    let f4 = gf(2, 2);
    let g = Arc::new(cyclic(4));
    let x = Mat::from_rows(&[vec![1, 1], vec![0, 1]]);
    let rho = MatRep::new(g, f4.clone(), vec![x]).unwrap();
    let bar = BarComplex::new(&rho).unwrap();
    let ke = Arc::new(LocalAlgebra::dual_numbers(f4.clone()));
    let lifts = enumerate_lifts(&rho, ke).unwrap();
    assert_eq!(lifts.len() as u64, 4u64.pow(bar.h1() as u32));
    let mut classes: Vec<_> = lifts.iter().map(|l| tangent_class(l, &bar).unwrap()).collect();
    classes.sort();
    classes.dedup();
    assert_eq!(classes.len(), lifts.len());
    for c in classes {
        let l = lift_from_class(&rho, &c, &bar).unwrap();
        assert_eq!(tangent_class(&l, &bar).unwrap(), c);
    }
}

#[test]
fn obstruction_for_unipotent_c2_over_z4() {
    let f2 = gf(2, 1);
    let g = Arc::new(cyclic(2));
    let rho = MatRep::new(g, f2.clone(), vec![Mat::from_rows(&[vec![1, 1], vec![0, 1]])]).unwrap();
    let bar = BarComplex::new(&rho).unwrap();
    let z4 = Arc::new(LocalAlgebra::witt(f2.clone(), 2).unwrap());
    let z2 = Arc::new(z4.quotient(&[z4.from_int(2)]).unwrap());
    let ext = SmallExtension::new(z4.clone(), z2.clone()).unwrap();
    assert_eq!(ext.kernel_dim(), 1);
    let rho0 = Lift::teichmueller(z2, &rho).unwrap();
    let ob = obstruction_class(&rho0, &ext, &bar).unwrap();
    assert!(ob.vanishes());
    let lift = ob.lift.unwrap();
    let m = &lift.generator_images()[0];
    assert_eq!(m.mul(m, &z4), RMat::identity(&z4, 2));
    assert!(!enumerate_lifts_through(&rho0, &ext).unwrap().is_empty());
}

#[test]
fn obstructed_second_order_lift() {
    // 1 + t over k[t]/(t²) does not lift to k[t]/(t³)
    let f2 = gf(2, 1);
    let rho = triv(cyclic(2), &f2, 1);
    let bar = BarComplex::new(&rho).unwrap();
    let r1 = Arc::new(LocalAlgebra::truncated_polynomial(f2.clone(), 3).unwrap());
    let t = r1.var(0);
    let r0 = Arc::new(r1.quotient(&[r1.mul(&t, &t)]).unwrap());
    let ext = SmallExtension::new(r1.clone(), r0.clone()).unwrap();
    let gen = RMat {
        n: 1,
        entries: vec![r0.add(&r0.one(), &t)],
    };
    let rho0 = Lift::new(r0, rho.clone(), vec![gen]).unwrap();
    let ob = obstruction_class(&rho0, &ext, &bar).unwrap();
    assert!(!ob.vanishes());
    assert!(enumerate_lifts_through(&rho0, &ext).unwrap().is_empty());
}

#[test]
fn versal_ring_of_trivial_c2() {
    let f2 = gf(2, 1);
    let rho = triv(cyclic(2), &f2, 1);
    let v = versal_presentation_truncated(&rho, 4, 4).unwrap();
    assert_eq!((v.r, v.s), (1, 1));
    assert_eq!(v.relations.len(), 1);
    let amb = &v.ambient;
    let t = amb.var(0);
    let expected = amb.add(&amb.mul(&t, &t), &amb.scale_int(&t, 2));
    assert!(amb.quotient(&[expected]).unwrap().same_ring(&v.ring));
    let targets = [
        LocalAlgebra::dual_numbers(f2.clone()),
        LocalAlgebra::witt(f2.clone(), 2).unwrap(),
        LocalAlgebra::witt(f2.clone(), 3).unwrap(),
        LocalAlgebra::truncated_polynomial(f2.clone(), 3).unwrap(),
    ];
    let counts: Vec<u64> = targets.iter().map(|r| v.count_maps_to(r).unwrap()).collect();
    assert_eq!(counts, vec![2, 2, 4, 2]);
    let oracle: Vec<u64> = targets
        .into_iter()
        .map(|r| enumerate_lifts(&rho, Arc::new(r)).unwrap().len() as u64)
        .collect();
    assert_eq!(counts, oracle);
}

#[test]
fn rigid_when_coprime() {
    let f2 = gf(2, 1);
    let v = versal_presentation_truncated(&triv(cyclic(3), &f2, 1), 3, 3).unwrap();
    assert_eq!(v.r, 0);
    assert!(v.relations.is_empty());
}

#[test]
fn remark_pair_is_not_isomorphic() {
    for p in [2u32, 3] {
        let f = gf(p, 1);
        let g = Arc::new(cyclic(p as usize));
        let v = MatRep::trivial(g, f.clone(), 2);
        assert!(stable_end(&v) > 1);
        let ke = Arc::new(LocalAlgebra::dual_numbers(f.clone()));
        let one = ke.one();
        let eps = ke.var(0);
        let zero = ke.zero();
        let m1 = RMat {
            n: 2,
            entries: vec![one.clone(), eps.clone(), zero.clone(), one.clone()],
        };
        let m2 = RMat {
            n: 2,
            entries: vec![one.clone(), zero, eps, one],
        };
        let l1 = Lift::new(ke.clone(), v.clone(), vec![m1]).unwrap();
        let l2 = Lift::new(ke, v, vec![m2]).unwrap();
        assert!(lifts_isomorphic(&l1, &l1).unwrap());
        assert!(!lifts_isomorphic(&l1, &l2).unwrap());
        assert!(modules_isomorphic(&l1, &l2).unwrap());
    }
}

fn perturbed_sections(rho0: &Lift, ext: &SmallExtension, seed: u64) -> Vec<RMat> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let q = ext.r1.field().order();
    let mut gamma = canonical_section(rho0, ext);
    for m in gamma.iter_mut().skip(1) {
        for x in m.entries.iter_mut() {
            let coords: Vec<u32> = (0..ext.kernel_dim()).map(|_| rng.gen_range(0..q)).collect();
            *x = ext.r1.add(x, &ext.from_coordinates(&coords));
        }
    }
    gamma
}

#[test]
fn obstruction_independent_of_section() {
    let f2 = gf(2, 1);
    // obstructed: 1 + t over k[t]/(t²)
    let r1 = Arc::new(LocalAlgebra::truncated_polynomial(f2.clone(), 3).unwrap());
    let t = r1.var(0);
    let r0 = Arc::new(r1.quotient(&[r1.mul(&t, &t)]).unwrap());
    let ext_t = SmallExtension::new(r1, r0.clone()).unwrap();
    let triv = triv(cyclic(2), &f2, 1);
    let gen = RMat {
        n: 1,
        entries: vec![r0.add(&r0.one(), &t)],
    };
    let obstructed = Lift::new(r0, triv.clone(), vec![gen]).unwrap();
    // unobstructed: unipotent C4 over Z/4 → Z/2
    let z4 = Arc::new(LocalAlgebra::witt(f2.clone(), 2).unwrap());
    let z2 = Arc::new(z4.quotient(&[z4.from_int(2)]).unwrap());
    let ext_z = SmallExtension::new(z4, z2.clone()).unwrap();
    let jordan = MatRep::new(Arc::new(cyclic(4)), f2.clone(), vec![Mat::from_rows(&[vec![1, 1], vec![0, 1]])]).unwrap();
    let unipotent = Lift::teichmueller(z2, &jordan).unwrap();
    for (rho0, ext) in [(&obstructed, &ext_t), (&unipotent, &ext_z)] {
        let bar = BarComplex::new(rho0.residual()).unwrap();
        let reference = obstruction_class(rho0, ext, &bar).unwrap();
        for seed in 0..5 {
            let gamma = perturbed_sections(rho0, ext, seed);
            let ob = obstruction_class_from(rho0, ext, &bar, &gamma).unwrap();
            assert_eq!(ob.class, reference.class);
            assert_eq!(ob.vanishes(), ob.lift.is_some());
        }
    }
    assert!(!obstruction_class(&obstructed, &ext_t, &BarComplex::new(&triv).unwrap())
        .unwrap()
        .vanishes());
}

mod tangent_bijection {
    use super::*;
    use proptest::prelude::*;

    fn corpus() -> Vec<MatRep> {
        let f4 = gf(2, 2);
        let f3 = gf(3, 1);
        vec![
            MatRep::new(Arc::new(cyclic(4)), f4.clone(), vec![Mat::from_rows(&[vec![1, 1], vec![0, 1]])]).unwrap(),
            triv(klein_four(), &f4, 1),
            triv(cyclic(3), &f3, 2),
            triv(symmetric(3), &f3, 1),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn class_lift_round_trip(which in 0usize..4, raw in proptest::collection::vec(0u32..1000, 8)) {
            let rho = &corpus()[which];
            let bar = BarComplex::new(rho).unwrap();
            let q = rho.field().order();
            let coords: Vec<u32> = raw.iter().take(bar.h1()).map(|x| x % q).collect();
            let lift = lift_from_class(rho, &coords, &bar).unwrap();
            prop_assert_eq!(tangent_class(&lift, &bar).unwrap(), coords);
        }
    }
}
