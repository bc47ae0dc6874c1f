use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwoGroupShape {
    Cyclic,
    KleinFour,
    Dihedral,
    Semidihedral,
    Quaternion,
    Other,
}

impl TwoGroupShape {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoGroupShape::Cyclic => "cyclic",
            TwoGroupShape::KleinFour => "klein-four",
            TwoGroupShape::Dihedral => "dihedral",
            TwoGroupShape::Semidihedral => "semidihedral",
            TwoGroupShape::Quaternion => "quaternion",
            TwoGroupShape::Other => "other",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "type", content = "shape")]
pub enum RepresentationType {
    Finite,
    Tame(TwoGroupShape),
    Wild,
}

/// Classifies a 2-group by element orders, involution count and the action
/// on a cyclic subgroup of index 2.
pub fn classify_2group(d: &Group) -> Result<TwoGroupShape> {
    let n = d.order();
    if !n.is_power_of_two() {
        return Err(Error::NotA2Group(n));
    }
    if (0..n).any(|x| d.element_order(x) == n as u64) {
        return Ok(TwoGroupShape::Cyclic);
    }
    if n == 4 {
        return Ok(TwoGroupShape::KleinFour);
    }
    let involutions = (0..n).filter(|&x| d.element_order(x) == 2).count();
    if involutions == 1 {
        return Ok(TwoGroupShape::Quaternion);
    }
    let half = (n / 2) as u64;
    let log_n = n.trailing_zeros();
    for c in (0..n).filter(|&x| d.element_order(x) == half) {
        let cyclic: Vec<usize> = (0..half as i64).map(|k| d.pow(c, k)).collect();
        let Some(x) = (0..n).find(|y| !cyclic.contains(y)) else {
            continue;
        };
        let image = d.conjugate(c, x);
        let Some(k) = cyclic.iter().position(|&y| y == image) else {
            continue;
        };
        let k = k as u64;
        if k == half - 1 && involutions == n / 2 + 1 {
            return Ok(TwoGroupShape::Dihedral);
        }
        if log_n >= 4 && k == (1 << (log_n - 2)) - 1 && involutions == n / 4 + 1 {
            return Ok(TwoGroupShape::Semidihedral);
        }
    }
    Ok(TwoGroupShape::Other)
}

/// Representation type of a block from its defect group.
pub fn representation_type(p: u64, defect_group: &Group) -> Result<(RepresentationType, Option<TwoGroupShape>)> {
    if p == 2 {
        let shape = classify_2group(defect_group)?;
        let t = match shape {
            TwoGroupShape::Cyclic => RepresentationType::Finite,
            TwoGroupShape::Other => RepresentationType::Wild,
            s => RepresentationType::Tame(s),
        };
        return Ok((t, Some(shape)));
    }
    let n = defect_group.order() as u64;
    let cyclic = (0..defect_group.order()).any(|x| defect_group.element_order(x) == n);
    Ok((
        if cyclic {
            RepresentationType::Finite
        } else {
            RepresentationType::Wild
        },
        None,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::library::*;

    #[test]
    fn shapes() {
        assert_eq!(classify_2group(&cyclic(4)).unwrap(), TwoGroupShape::Cyclic);
        assert_eq!(classify_2group(&trivial()).unwrap(), TwoGroupShape::Cyclic);
        assert_eq!(classify_2group(&klein_four()).unwrap(), TwoGroupShape::KleinFour);
        assert_eq!(classify_2group(&dihedral_8()).unwrap(), TwoGroupShape::Dihedral);
        assert_eq!(classify_2group(&dihedral(8)).unwrap(), TwoGroupShape::Dihedral);
        assert_eq!(classify_2group(&quaternion_8()).unwrap(), TwoGroupShape::Quaternion);
        let s4 = symmetric(4);
        assert_eq!(classify_2group(&s4.sylow(2).group).unwrap(), TwoGroupShape::Dihedral);
        let sl23 = special_linear_2(3);
        assert_eq!(classify_2group(&sl23.sylow(2).group).unwrap(), TwoGroupShape::Quaternion);
        let sl27 = special_linear_2(7);
        assert_eq!(classify_2group(&sl27.sylow(2).group).unwrap(), TwoGroupShape::Quaternion);
        let pgl = projective_general_linear_2(7);
        assert_eq!(classify_2group(&pgl.sylow(2).group).unwrap(), TwoGroupShape::Dihedral);
        let gl23 = general_linear_2(3);
        assert_eq!(classify_2group(&gl23.sylow(2).group).unwrap(), TwoGroupShape::Semidihedral);
        assert!(matches!(classify_2group(&cyclic(6)), Err(Error::NotA2Group(6))));
        let c4c2 = crate::group::Group::from_generators(
            6,
            &[
                Perm::from_cycles(6, &[vec![0, 1, 2, 3]]).unwrap(),
                Perm::from_cycles(6, &[vec![4, 5]]).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(classify_2group(&c4c2).unwrap(), TwoGroupShape::Other);
    }

    use crate::group::Perm;
}
