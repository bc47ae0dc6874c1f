//! Finite permutation groups, fully materialized.
//!
//! Elements are enumerated breadth-first from the generators, so the element
//! numbering is a deterministic function of the generator list. Index 0 is
//! always the identity.

mod classes;
pub mod frame;
pub mod library;
mod perm;
mod subgroups;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

pub use classes::{ConjClass, ConjClassFrame, StructureConstants};
pub use frame::{PSingularFrame, SingularSlot};
pub use perm::Perm;

use crate::arith::prime::{gcd, inv_mod, lcm, split_part};
use crate::error::{Error, Result};

pub const DEFAULT_ORDER_CAP: usize = 100_000;
const TABLE_CAP: usize = 4096;

pub fn build_group(degree: usize, generators: &[Perm]) -> Result<Group> {
    Group::from_generators(degree, generators)
}

#[derive(Debug, Clone)]
pub struct Group {
    degree: usize,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    generators: Vec<usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    /// `elements[i] = elements[parent[i].0] * generators[parent[i].1]`.
    parent: Vec<(usize, usize)>,
    classes: OnceLock<Arc<ConjClassFrame>>,
}

/// A subgroup realized as a group in its own right, with the map back into
/// the parent's element numbering.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub group: Group,
    pub embedding: Vec<usize>,
}

impl Group {
    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Group> {
        Self::from_generators_capped(degree, gens, DEFAULT_ORDER_CAP)
    }

    pub fn from_generators_capped(degree: usize, gens: &[Perm], cap: usize) -> Result<Group> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(format!(
                "generator {g} does not act on {degree} points"
            )));
        }
        let id = Perm::identity(degree);
        let mut elements = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut parent = vec![(0, 0)];
        let mut head = 0;
        while head < elements.len() {
            for (gi, g) in gens.iter().enumerate() {
                let y = elements[head].then(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    elements.push(y);
                    parent.push((head, gi));
                }
            }
            head += 1;
        }
        let generators = gens.iter().map(|g| index[g]).collect();
        let n = elements.len();
        let table = (n <= TABLE_CAP).then(|| {
            let mut t = vec![0u32; n * n];
            for i in 0..n {
                for j in 0..n {
                    t[i * n + j] = index[&elements[i].then(&elements[j])] as u32;
                }
            }
            t
        });
        let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
        let mut group = Group {
            degree,
            elements,
            index,
            generators,
            table,
            inverses,
            orders: Vec::new(),
            parent,
            classes: OnceLock::new(),
        };
        group.orders = (0..n).map(|i| group.compute_order(i)).collect();
        Ok(group)
    }

    fn compute_order(&self, g: usize) -> u64 {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }
    pub fn index_of(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }
    /// Element indices of the generators, in input order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }
    pub fn generator_perms(&self) -> Vec<Perm> {
        self.generators.iter().map(|&g| self.elements[g].clone()).collect()
    }
    /// Breadth-first spanning tree: `(parent element, generator position)`.
    pub fn bfs_parent(&self, i: usize) -> Option<(usize, usize)> {
        (i != 0).then(|| self.parent[i])
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.elements.len() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }
    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }
    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a] as i64;
        let k = k.rem_euclid(o);
        (0..k).fold(0, |acc, _| self.mul(acc, a))
    }
    /// `h^{-1} g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(self.inv(h), g), h)
    }
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }
    pub fn exponent(&self) -> u64 {
        self.orders.iter().fold(1, |acc, &o| lcm(acc, o))
    }
    pub fn is_abelian(&self) -> bool {
        let g = &self.generators;
        g.iter().all(|&a| g.iter().all(|&b| self.commute(a, b)))
    }

    /// Sorted element list of the subgroup generated by `gens`.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        member[0] = true;
        let mut list = vec![0];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    list.push(y);
                }
            }
            head += 1;
        }
        list.sort_unstable();
        list
    }

    /// The decomposition `g = u v = v u` with `u` a `p`-element and `v`
    /// `p`-regular; both are powers of `g`.
    pub fn p_part_decomposition(&self, g: usize, p: u64) -> (usize, usize) {
        let o = self.orders[g];
        let (pa, m) = split_part(o, p);
        if m == 1 {
            return (g, 0);
        }
        if pa == 1 {
            return (0, g);
        }
        let a = m * inv_mod(m % pa, pa).unwrap();
        let b = pa * inv_mod(pa % m, m).unwrap();
        (self.pow(g, a as i64), self.pow(g, b as i64))
    }

    pub fn is_p_element(&self, g: usize, p: u64) -> bool {
        split_part(self.orders[g], p).1 == 1
    }

    pub fn is_p_regular(&self, g: usize, p: u64) -> bool {
        gcd(self.orders[g], p) == 1
    }

    pub fn centralizer_elements(&self, g: usize) -> Vec<usize> {
        (0..self.order()).filter(|&h| self.commute(g, h)).collect()
    }

    pub fn centralizer(&self, g: usize) -> Subgroup {
        self.subgroup(&self.centralizer_elements(g))
    }

    /// Elements normalizing the subgroup with sorted element list `h`.
    pub fn normalizer_elements(&self, h: &[usize]) -> Vec<usize> {
        let mut member = vec![false; self.order()];
        for &x in h {
            member[x] = true;
        }
        let gens = self.small_generating_set(h);
        (0..self.order())
            .filter(|&g| gens.iter().all(|&x| member[self.conjugate(x, g)]))
            .collect()
    }

    /// Greedy generating set for a subgroup given by its sorted elements.
    pub fn small_generating_set(&self, h: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![0usize];
        for &x in h {
            if span.binary_search(&x).is_err() {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == h.len() {
                    break;
                }
            }
        }
        gens
    }

    /// Realizes the subgroup with sorted element list `elems` as a [`Group`].
    pub fn subgroup(&self, elems: &[usize]) -> Subgroup {
        if elems.len() == self.order() {
            return Subgroup {
                group: self.clone(),
                embedding: (0..self.order()).collect(),
            };
        }
        let gens: Vec<Perm> = self
            .small_generating_set(elems)
            .into_iter()
            .map(|g| self.elements[g].clone())
            .collect();
        let group = Group::from_generators_capped(self.degree, &gens, usize::MAX)
            .expect("subgroup of a valid group");
        let embedding = group.elements.iter().map(|p| self.index[p]).collect();
        Subgroup { group, embedding }
    }

    /// A Sylow `p`-subgroup (sorted elements), grown greedily: repeatedly
    /// adjoin the first element of the normalizer whose `p`-th power lies in
    /// the current subgroup.
    pub fn sylow_elements(&self, p: u64) -> Vec<usize> {
        let target = split_part(self.order() as u64, p).0 as usize;
        let mut current = vec![0usize];
        while current.len() < target {
            let norm = self.normalizer_elements(&current);
            let x = norm
                .into_iter()
                .find(|&x| {
                    current.binary_search(&x).is_err()
                        && current.binary_search(&self.pow(x, p as i64)).is_ok()
                })
                .expect("a non-Sylow p-subgroup has a larger p-subgroup in its normalizer");
            let mut gens = self.small_generating_set(&current);
            gens.push(x);
            current = self.closure(&gens);
        }
        current
    }

    pub fn sylow(&self, p: u64) -> Subgroup {
        self.subgroup(&self.sylow_elements(p))
    }

    pub fn classes(&self) -> &ConjClassFrame {
        self.classes
            .get_or_init(|| Arc::new(ConjClassFrame::compute(self)))
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.classes().class_of[g]
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    #[test]
    fn basic_constructions() {
        let c2 = cyclic(2);
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.classes().len(), 2);
        let s4 = symmetric(4);
        assert_eq!(s4.order(), 24);
        assert_eq!(s4.classes().len(), 5);
        let triv = Group::from_generators(1, &[]).unwrap();
        assert_eq!(triv.order(), 1);
        assert!(matches!(
            Group::from_generators_capped(5, &symmetric(5).generator_perms(), 100),
            Err(Error::GroupTooLarge { cap: 100 })
        ));
    }

    #[test]
    fn p_part_of_order_six() {
        let c6 = cyclic(6);
        let g = c6.generators()[0];
        let (u, v) = c6.p_part_decomposition(g, 2);
        assert_eq!(u, c6.pow(g, 3));
        assert_eq!(v, c6.pow(g, 4));
        assert_eq!(c6.mul(u, v), g);
        assert_eq!(c6.p_part_decomposition(c6.pow(g, 3), 2), (c6.pow(g, 3), 0));
        assert_eq!(c6.p_part_decomposition(c6.pow(g, 2), 2), (0, c6.pow(g, 2)));
    }

    #[test]
    fn p_part_is_conjugation_equivariant() {
        let g = symmetric(4);
        for x in 0..g.order() {
            for p in [2, 3] {
                let (u, v) = g.p_part_decomposition(x, p);
                assert!(g.is_p_element(u, p) && g.is_p_regular(v, p));
                assert!(g.commute(u, v) && g.mul(u, v) == x);
                for h in 0..g.order() {
                    let (cu, cv) = g.p_part_decomposition(g.conjugate(x, h), p);
                    assert_eq!((cu, cv), (g.conjugate(u, h), g.conjugate(v, h)));
                }
            }
        }
    }

    #[test]
    fn sylow_orders() {
        assert_eq!(cyclic(6).sylow_elements(2).len(), 2);
        let s4 = symmetric(4);
        assert_eq!(s4.sylow_elements(2).len(), 8);
        assert_eq!(s4.sylow_elements(3).len(), 3);
        assert_eq!(s4.sylow_elements(5).len(), 1);
        let sl27 = special_linear_2(7);
        assert_eq!(sl27.sylow_elements(2).len(), 16);
        assert_eq!(sl27.sylow_elements(7).len(), 7);
    }

    #[test]
    fn centralizer_of_three_cycle() {
        let s3 = symmetric(3);
        let c = s3.centralizer(s3.index_of(&Perm(vec![1, 2, 0])).unwrap());
        assert_eq!(c.group.order(), 3);
        assert!(c.group.is_abelian());
    }
}
