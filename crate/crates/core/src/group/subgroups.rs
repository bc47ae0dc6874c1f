use std::collections::HashSet;

use super::Group;

impl Group {
    /// All subgroups of the subgroup with sorted elements `p`, as sorted
    /// element lists, ordered by size then lexicographically.
    pub fn all_subgroups_of(&self, p: &[usize]) -> Vec<Vec<usize>> {
        let mut seen: HashSet<Vec<usize>> = HashSet::from([vec![0]]);
        let mut list = vec![vec![0usize]];
        let mut head = 0;
        while head < list.len() {
            let h = list[head].clone();
            let gens = self.small_generating_set(&h);
            for &x in p {
                if h.binary_search(&x).is_ok() {
                    continue;
                }
                let mut g2 = gens.clone();
                g2.push(x);
                let k = self.closure(&g2);
                if seen.insert(k.clone()) {
                    list.push(k);
                }
            }
            head += 1;
        }
        list.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        list
    }

    /// `h^g` as a sorted element list.
    pub fn conjugate_subgroup(&self, h: &[usize], g: usize) -> Vec<usize> {
        let mut out: Vec<usize> = h.iter().map(|&x| self.conjugate(x, g)).collect();
        out.sort_unstable();
        out
    }

    /// Representatives of the `G`-conjugacy classes among `subgroups`.
    pub fn conjugacy_representatives(&self, subgroups: &[Vec<usize>]) -> Vec<Vec<usize>> {
        let mut covered: HashSet<Vec<usize>> = HashSet::new();
        let mut reps = Vec::new();
        for h in subgroups {
            if covered.contains(h) {
                continue;
            }
            for g in 0..self.order() {
                covered.insert(self.conjugate_subgroup(h, g));
            }
            reps.push(h.clone());
        }
        reps
    }

    pub fn are_conjugate_subgroups(&self, a: &[usize], b: &[usize]) -> bool {
        a.len() == b.len() && (0..self.order()).any(|g| self.conjugate_subgroup(a, g) == b)
    }
}

#[cfg(test)]
mod tests {
    use super::super::library::*;

    #[test]
    fn subgroup_counts() {
        let d8 = dihedral_8();
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(d8.all_subgroups_of(&all).len(), 10);
        let q8 = quaternion_8();
        assert_eq!(q8.all_subgroups_of(&all).len(), 6);
        let s4 = symmetric(4);
        let p = s4.sylow_elements(2);
        let subs = s4.all_subgroups_of(&p);
        assert_eq!(subs.len(), 10);
        // S4 has 11 conjugacy classes of subgroups, 7 of them 2-subgroups.
        let every: Vec<usize> = (0..24).collect();
        let two_subs: Vec<Vec<usize>> = s4
            .all_subgroups_of(&every)
            .into_iter()
            .filter(|h| h.len().is_power_of_two())
            .collect();
        assert_eq!(s4.conjugacy_representatives(&two_subs).len(), 7);
    }
}
