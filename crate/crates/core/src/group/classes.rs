use std::collections::BTreeMap;

use super::Group;
use crate::arith::prime::prime_divisors;
use crate::exec::Exec;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub element_order: u64,
    pub centralizer_order: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Conjugacy classes in canonical order: by element order, then class size,
/// then smallest element index. Representatives are the smallest members.
#[derive(Debug, Clone)]
pub struct ConjClassFrame {
    pub classes: Vec<ConjClass>,
    pub class_of: Vec<usize>,
    pub inverse_class: Vec<usize>,
    /// Power maps for each prime dividing the group order.
    pub power_maps: BTreeMap<u64, Vec<usize>>,
}

impl ConjClassFrame {
    pub(super) fn compute(g: &Group) -> Self {
        let n = g.order();
        let mut seen = vec![false; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            seen[x] = true;
            let mut orbit = vec![x];
            let mut head = 0;
            while head < orbit.len() {
                let y = orbit[head];
                for &s in g.generators() {
                    let z = g.conjugate(y, s);
                    if !seen[z] {
                        seen[z] = true;
                        orbit.push(z);
                    }
                }
                head += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits.sort_by_key(|o| (g.element_order(o[0]), o.len(), o[0]));
        let mut class_of = vec![0; n];
        for (c, o) in orbits.iter().enumerate() {
            for &x in o {
                class_of[x] = c;
            }
        }
        let classes: Vec<ConjClass> = orbits
            .into_iter()
            .map(|members| ConjClass {
                representative: members[0],
                element_order: g.element_order(members[0]),
                centralizer_order: n / members.len(),
                members,
            })
            .collect();
        let inverse_class = classes
            .iter()
            .map(|c| class_of[g.inv(c.representative)])
            .collect();
        let power_maps = prime_divisors(n as u64)
            .into_iter()
            .map(|p| {
                let map = classes
                    .iter()
                    .map(|c| class_of[g.pow(c.representative, p as i64)])
                    .collect();
                (p, map)
            })
            .collect();
        ConjClassFrame {
            classes,
            class_of,
            inverse_class,
            power_maps,
        }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.representative).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.size()).collect()
    }

    pub fn orders(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.element_order).collect()
    }

    /// Class of `g^k` for `g` in class `c`.
    pub fn power_class(&self, g: &Group, c: usize, k: i64) -> usize {
        self.class_of[g.pow(self.classes[c].representative, k)]
    }

    /// Classes whose elements have order prime to `p`.
    pub fn p_regular(&self, p: u64) -> Vec<usize> {
        (0..self.len())
            .filter(|&c| !self.classes[c].element_order.is_multiple_of(p))
            .collect()
    }
}

/// Class multiplication coefficients: `get(i, j, k)` counts pairs
/// `(x, y)` in `K_i x K_j` with `x y` equal to the representative of `K_k`.
#[derive(Debug, Clone)]
pub struct StructureConstants {
    r: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    pub fn compute(g: &Group, exec: Exec) -> Self {
        let frame = g.classes();
        let r = frame.len();
        let cols = exec.map_range(r, |k| {
            let gk = frame.classes[k].representative;
            let mut col = vec![0u64; r * r];
            for x in 0..g.order() {
                let y = g.mul(g.inv(x), gk);
                col[frame.class_of[x] * r + frame.class_of[y]] += 1;
            }
            col
        });
        let mut data = vec![0u64; r * r * r];
        for (k, col) in cols.into_iter().enumerate() {
            for ij in 0..r * r {
                data[ij * r + k] = col[ij];
            }
        }
        StructureConstants { r, data }
    }

    pub fn num_classes(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize) -> u64 {
        self.data[(i * self.r + j) * self.r + k]
    }
}

#[cfg(test)]
mod tests {
    use super::super::library::*;
    use super::*;

    #[test]
    fn s4_class_data() {
        let g = symmetric(4);
        let f = g.classes();
        assert_eq!(f.sizes(), vec![1, 3, 6, 8, 6]);
        assert_eq!(f.orders(), vec![1, 2, 2, 3, 4]);
        assert_eq!(f.power_maps[&2], vec![0, 0, 0, 3, 1]);
        assert_eq!(f.power_maps[&3], vec![0, 1, 2, 0, 4]);
    }

    #[test]
    fn structure_constant_identities() {
        for g in [symmetric(4), dihedral_8(), special_linear_2(3)] {
            let sc = StructureConstants::compute(&g, Exec::default());
            let f = g.classes();
            let r = f.len();
            let sizes = f.sizes();
            for i in 0..r {
                for k in 0..r {
                    let row: u64 = (0..r).map(|j| sc.get(i, j, k)).sum();
                    assert_eq!(row, sizes[i] as u64);
                }
                assert_eq!(sc.get(0, i, i), 1);
            }
            let seq = StructureConstants::compute(&g, Exec::Sequential);
            assert_eq!(seq.data, sc.data);
        }
    }
}
