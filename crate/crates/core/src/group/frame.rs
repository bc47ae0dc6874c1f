//! The frame of `p`-singular class representatives `u_i` and the
//! `p`-regular classes `v_{i,j}` of their centralizers.

use super::{Group, Subgroup};
use crate::arith::prime::valuation;

#[derive(Debug, Clone)]
pub struct SingularSlot {
    /// `u_i` as an element of `G`.
    pub u: usize,
    /// `u_i` has order `p^alpha`.
    pub alpha: u32,
    /// `C_G(u_i)` with its embedding into `G`.
    pub centralizer: Subgroup,
    /// Indices into the centralizer's class list of its `p`-regular classes.
    pub v_classes: Vec<usize>,
    /// Representatives `v_{i,j}` as elements of `G`.
    pub v: Vec<usize>,
    /// The `G`-class of `u_i v_{i,j}`.
    pub class_index: Vec<usize>,
}

impl SingularSlot {
    pub fn ell(&self) -> usize {
        self.v.len()
    }
}

#[derive(Debug, Clone)]
pub struct PSingularFrame {
    pub p: u64,
    /// Sorted element list of the fixed Sylow subgroup.
    pub sylow: Vec<usize>,
    pub slots: Vec<SingularSlot>,
}

impl PSingularFrame {
    pub fn compute(g: &Group, p: u64) -> Self {
        let sylow = g.sylow_elements(p);
        let frame = g.classes();
        let mut reps: Vec<usize> = Vec::new();
        let mut seen = vec![false; frame.len()];
        let mut candidates = sylow.clone();
        candidates.sort_by_key(|&x| (g.element_order(x), x));
        for x in candidates {
            let c = frame.class_of[x];
            if !seen[c] {
                seen[c] = true;
                reps.push(x);
            }
        }
        let slots = reps
            .into_iter()
            .map(|u| {
                let centralizer = g.centralizer(u);
                let cf = centralizer.group.classes();
                let v_classes = cf.p_regular(p);
                let v: Vec<usize> = v_classes
                    .iter()
                    .map(|&c| centralizer.embedding[cf.classes[c].representative])
                    .collect();
                let class_index = v.iter().map(|&x| frame.class_of[g.mul(u, x)]).collect();
                SingularSlot {
                    u,
                    alpha: valuation(g.element_order(u), p),
                    centralizer,
                    v_classes,
                    v,
                    class_index,
                }
            })
            .collect();
        PSingularFrame { p, sylow, slots }
    }

    pub fn h(&self) -> usize {
        self.slots.len() - 1
    }

    pub fn pair_count(&self) -> usize {
        self.slots.iter().map(|s| s.ell()).sum()
    }

    /// The pair `(i, j)` covering each class of `G`.
    pub fn pair_of_class(&self, num_classes: usize) -> Vec<Option<(usize, usize)>> {
        let mut out = vec![None; num_classes];
        for (i, s) in self.slots.iter().enumerate() {
            for (j, &c) in s.class_index.iter().enumerate() {
                out[c] = Some((i, j));
            }
        }
        out
    }
}

impl Group {
    pub fn p_singular_frame(&self, p: u64) -> PSingularFrame {
        PSingularFrame::compute(self, p)
    }
}

#[cfg(test)]
mod tests {
    use super::super::library::*;
    use super::*;

    fn check_bijection(g: &Group, p: u64) -> PSingularFrame {
        let f = g.p_singular_frame(p);
        assert_eq!(f.slots[0].u, 0);
        let mut hits = vec![0; g.classes().len()];
        for s in &f.slots {
            assert_eq!(s.v[0], 0);
            for &v in &s.v {
                assert!(g.commute(s.u, v));
            }
            for &c in &s.class_index {
                hits[c] += 1;
            }
        }
        assert!(hits.iter().all(|&h| h == 1), "{hits:?}");
        f
    }

    #[test]
    fn small_frames() {
        let f = check_bijection(&cyclic(2), 2);
        assert_eq!(f.slots.len(), 2);
        assert!(f.slots.iter().all(|s| s.ell() == 1));
        let f = check_bijection(&cyclic(4), 2);
        assert_eq!(f.slots.len(), 4);
        assert_eq!(f.pair_count(), 4);
        let f = check_bijection(&symmetric(4), 2);
        assert_eq!(f.slots.len(), 4);
        assert_eq!(f.pair_count(), 5);
        let alphas: Vec<u32> = f.slots.iter().map(|s| s.alpha).collect();
        assert_eq!(alphas, vec![0, 1, 1, 2]);
    }

    #[test]
    fn corpus_frames() {
        for g in [symmetric(5), special_linear_2(3), dihedral_8(), quaternion_8()] {
            for p in [2, 3, 5] {
                check_bijection(&g, p);
            }
        }
    }
}
