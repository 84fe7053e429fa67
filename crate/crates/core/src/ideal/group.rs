//! Distinguished ideals and elements of group algebras.

use super::{ideal_generated, Ideal, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::group::{Group, SubgroupHandle};

fn group_of(kg: &Algebra) -> Result<&Group> {
    kg.group().ok_or(Error::NotGroupAlgebra)
}

fn check_parent(kg: &Algebra, h: &SubgroupHandle) -> Result<()> {
    let g = group_of(kg)?;
    if h.parent() == g {
        Ok(())
    } else {
        Err(Error::ParentMismatch)
    }
}

/// `y - 1` as an element of `kG`.
fn minus_one(kg: &Algebra, g: &Group, y: usize) -> Vec<u32> {
    let f = kg.field();
    let mut v = kg.zero();
    v[y] = f.add(v[y], 1);
    v[g.identity()] = f.sub(v[g.identity()], 1);
    v
}

/// Kernel of the coefficient-sum map.
pub fn augmentation_ideal(kg: &Algebra) -> Result<Ideal> {
    let g = group_of(kg)?;
    let gens: Vec<Vec<u32>> = (0..g.order()).map(|y| minus_one(kg, g, y)).collect();
    ideal_generated(kg, &gens, Side::TwoSided)
}

/// `σ_H = Σ_{y ∈ H} y`.
pub fn subgroup_sum(kg: &Algebra, h: &SubgroupHandle) -> Result<Vec<u32>> {
    check_parent(kg, h)?;
    let f = kg.field();
    let mut v = kg.zero();
    for &y in h.members() {
        v[y] = f.add(v[y], 1);
    }
    Ok(v)
}

/// `kG · I(kN)` for a normal subgroup `N`.
pub fn induced_ideal(kg: &Algebra, n: &SubgroupHandle) -> Result<Ideal> {
    check_parent(kg, n)?;
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = group_of(kg)?;
    let gens: Vec<Vec<u32>> = n.members().iter().map(|&y| minus_one(kg, g, y)).collect();
    ideal_generated(kg, &gens, Side::TwoSided)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::gflinalg::Field;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn trivial_subgroup() {
        let g = Group::cyclic(4).unwrap();
        let kg = group_algebra(&g, f(2)).unwrap();
        let t = g.trivial_subgroup();
        assert!(induced_ideal(&kg, &t).unwrap().is_zero());
        assert_eq!(subgroup_sum(&kg, &t).unwrap(), kg.one());
        assert_eq!(augmentation_ideal(&kg).unwrap().dim(), 3);
    }

    #[test]
    fn c4_over_c2() {
        let g = Group::cyclic(4).unwrap();
        let kg = group_algebra(&g, f(2)).unwrap();
        let n = g.subgroup(&[0, 2]).unwrap();
        let i = induced_ideal(&kg, &n).unwrap();
        assert_eq!(i.dim(), 2);
        let sigma = subgroup_sum(&kg, &n).unwrap();
        assert!(i.contains_element(&sigma));
        let r = i.right_annihilator();
        assert_eq!(r, ideal_generated(&kg, &[sigma], Side::TwoSided).unwrap());
    }

    #[test]
    fn c6_over_c3() {
        let g = Group::cyclic(6).unwrap();
        let kg = group_algebra(&g, f(2)).unwrap();
        let n = g.subgroup(&[0, 2, 4]).unwrap();
        let i = induced_ideal(&kg, &n).unwrap();
        assert!(!i.contains_element(&subgroup_sum(&kg, &n).unwrap()));
    }

    #[test]
    fn non_normal_rejected() {
        let g = Group::symmetric3();
        let kg = group_algebra(&g, f(3)).unwrap();
        let c2 = g.subgroup(&[0, 3]).unwrap();
        assert_eq!(induced_ideal(&kg, &c2).unwrap_err(), Error::NotNormal);
        let other = Group::cyclic(6).unwrap();
        assert_eq!(
            subgroup_sum(&kg, &other.whole()).unwrap_err(),
            Error::ParentMismatch
        );
    }
}
