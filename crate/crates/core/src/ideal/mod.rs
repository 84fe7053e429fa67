//! Ideals, annihilators, radical and socle series.

mod group;
mod radical;

use std::fmt;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gflinalg::{FpMatrix, RowReducer, Subspace};

pub use group::{augmentation_ideal, induced_ideal, subgroup_sum};
pub use radical::{
    jacobson_radical, jacobson_radical_with_method, radical_by_exhaustion, radical_unchecked,
    regular_trace_form, RadicalMethod,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    Left,
    Right,
    TwoSided,
}

impl Side {
    fn left(self) -> bool {
        matches!(self, Side::Left | Side::TwoSided)
    }
    fn right(self) -> bool {
        matches!(self, Side::Right | Side::TwoSided)
    }
}

/// A subspace of an algebra closed under the declared multiplications.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    parent: Algebra,
    space: Subspace,
    side: Side,
}

impl Ideal {
    /// Checks closure under multiplication by the algebra generators.
    pub fn new(parent: &Algebra, space: Subspace, side: Side) -> Result<Self> {
        if space.ambient_dim() != parent.dim() || space.field() != parent.field() {
            return Err(Error::DimensionMismatch("ideal ambient space".into()));
        }
        let closed = |mats: Vec<FpMatrix>| mats.iter().all(|m| space.is_invariant(m));
        if side.left()
            && !closed(
                parent
                    .generators()
                    .iter()
                    .map(|g| parent.left_mult(g))
                    .collect(),
            )
        {
            return Err(Error::NotAnIdeal(if side == Side::Left {
                "left"
            } else {
                "two-sided"
            }));
        }
        if side.right()
            && !closed(
                parent
                    .generators()
                    .iter()
                    .map(|g| parent.right_mult(g))
                    .collect(),
            )
        {
            return Err(Error::NotAnIdeal(if side == Side::Right {
                "right"
            } else {
                "two-sided"
            }));
        }
        Ok(Ideal {
            parent: parent.clone(),
            space,
            side,
        })
    }

    pub(crate) fn trusted(parent: &Algebra, space: Subspace, side: Side) -> Self {
        debug_assert!(Ideal::new(parent, space.clone(), side).is_ok());
        Ideal {
            parent: parent.clone(),
            space,
            side,
        }
    }

    pub fn zero(parent: &Algebra) -> Self {
        Ideal::trusted(
            parent,
            Subspace::zero(parent.field(), parent.dim()),
            Side::TwoSided,
        )
    }

    pub fn whole(parent: &Algebra) -> Self {
        Ideal::trusted(
            parent,
            Subspace::full(parent.field(), parent.dim()),
            Side::TwoSided,
        )
    }

    /// Strongest sidedness the subspace supports, if any.
    pub fn classify(parent: &Algebra, space: Subspace) -> Option<Self> {
        [Side::TwoSided, Side::Left, Side::Right]
            .into_iter()
            .find_map(|s| Ideal::new(parent, space.clone(), s).ok())
    }

    pub fn parent(&self) -> &Algebra {
        &self.parent
    }
    pub fn space(&self) -> &Subspace {
        &self.space
    }
    pub fn side(&self) -> Side {
        self.side
    }
    pub fn dim(&self) -> usize {
        self.space.dim()
    }
    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }
    pub fn is_proper(&self) -> bool {
        !self.space.contains_vector(&self.parent.one())
    }
    pub fn contains_element(&self, x: &[u32]) -> bool {
        self.space.contains_vector(x)
    }
    pub fn basis(&self) -> Vec<Vec<u32>> {
        self.space.basis_vectors()
    }

    fn same_parent(&self, other: &Ideal) -> Result<()> {
        if self.parent.same_as(&other.parent) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// Subspace inclusion `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Ideal) -> Result<bool> {
        self.same_parent(other)?;
        other.space.contains(&self.space)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        let space = self.space.sum(&other.space)?;
        self.combined(other, space)
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        let space = self.space.intersect(&other.space)?;
        self.combined(other, space)
    }

    fn combined(&self, other: &Ideal, space: Subspace) -> Result<Ideal> {
        match meet_side(self.side, other.side) {
            Some(side) => Ok(Ideal::trusted(&self.parent, space, side)),
            None => Ideal::classify(&self.parent, space).ok_or(Error::NotAnIdeal("one-sided")),
        }
    }

    /// `self · other = span{xy}`.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.same_parent(other)?;
        let a = &self.parent;
        let mut rr = RowReducer::new(a.field(), a.dim());
        'outer: for x in self.basis() {
            for y in other.basis() {
                rr.insert(&a.mul(&x, &y));
                if rr.is_full() {
                    break 'outer;
                }
            }
        }
        // IJ is a left ideal when I is, a right ideal when J is
        let side = match (self.side.left(), other.side.right()) {
            (true, true) => Side::TwoSided,
            (true, false) => Side::Left,
            (false, true) => Side::Right,
            (false, false) => {
                return Ideal::classify(a, rr.to_subspace()).ok_or(Error::NotAnIdeal("one-sided"))
            }
        };
        Ok(Ideal::trusted(a, rr.to_subspace(), side))
    }

    pub fn power(&self, n: usize) -> Result<Ideal> {
        let mut acc = Ideal::whole(&self.parent);
        for _ in 0..n {
            acc = acc.product(self)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    pub fn is_nilpotent(&self) -> bool {
        let mut acc = self.clone();
        for _ in 0..=self.parent.dim() {
            if acc.is_zero() {
                return true;
            }
            let next = acc.product(self).expect("same parent");
            if next.dim() == acc.dim() {
                return false;
            }
            acc = next;
        }
        acc.is_zero()
    }

    /// `r(I) = {a : I a = 0}`.
    pub fn right_annihilator(&self) -> Ideal {
        let a = &self.parent;
        let space = joint_kernel(a, self.basis().iter().map(|x| a.left_mult(x)));
        let side = if self.side.right() {
            Side::TwoSided
        } else {
            Side::Right
        };
        Ideal::trusted(a, space, side)
    }

    /// `l(I) = {a : a I = 0}`.
    pub fn left_annihilator(&self) -> Ideal {
        let a = &self.parent;
        let space = joint_kernel(a, self.basis().iter().map(|x| a.right_mult(x)));
        let side = if self.side.left() {
            Side::TwoSided
        } else {
            Side::Left
        };
        Ideal::trusted(a, space, side)
    }

    /// Same subspace viewed with a weaker sidedness.
    pub fn as_side(&self, side: Side) -> Result<Ideal> {
        Ideal::new(&self.parent, self.space.clone(), side)
    }
}

fn meet_side(a: Side, b: Side) -> Option<Side> {
    match (a.left() && b.left(), a.right() && b.right()) {
        (true, true) => Some(Side::TwoSided),
        (true, false) => Some(Side::Left),
        (false, true) => Some(Side::Right),
        (false, false) => None,
    }
}

fn joint_kernel(a: &Algebra, mats: impl Iterator<Item = FpMatrix>) -> Subspace {
    let d = a.dim();
    let mut rr = RowReducer::new(a.field(), d);
    for m in mats {
        for i in 0..m.rows() {
            rr.insert(m.row(i));
        }
        if rr.is_full() {
            break;
        }
    }
    rr.to_subspace().perp()
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Ideal({:?}, dim {} of {})",
            self.side,
            self.dim(),
            self.parent.name()
        )
    }
}

/// Smallest ideal of the given sidedness containing `gens`.
pub fn ideal_generated(a: &Algebra, gens: &[Vec<u32>], side: Side) -> Result<Ideal> {
    let d = a.dim();
    if gens.iter().any(|g| g.len() != d) {
        return Err(Error::DimensionMismatch("generator length".into()));
    }
    let mut mats = Vec::new();
    if side.left() {
        mats.extend(a.generators().iter().map(|g| a.left_mult(g)));
    }
    if side.right() {
        mats.extend(a.generators().iter().map(|g| a.right_mult(g)));
    }
    let mut rr = RowReducer::new(a.field(), d);
    let mut frontier: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if rr.insert(g) {
            frontier.push(g.clone());
        }
    }
    while let Some(v) = frontier.pop() {
        if rr.is_full() {
            break;
        }
        for m in &mats {
            let w = m.mul_vec(&v);
            if rr.insert(&w) {
                frontier.push(w);
            }
        }
    }
    Ok(Ideal::trusted(a, rr.to_subspace(), side))
}

/// `J, J^2, …` ending with the zero ideal.
pub fn radical_series(a: &Algebra) -> Result<Vec<Ideal>> {
    let j = jacobson_radical(a)?;
    let mut series = vec![j.clone()];
    let mut cur = j.clone();
    while !cur.is_zero() {
        cur = cur.product(&j)?;
        series.push(cur.clone());
    }
    Ok(series)
}

/// `soc^n(A) = r(J^n)` for `n = 1, 2, …` until it reaches `A`.
pub fn socle_series(a: &Algebra) -> Result<Vec<Ideal>> {
    annihilator_series(a, Ideal::right_annihilator)
}

/// `l(J^n)` for `n = 1, 2, …` until it reaches `A`.
pub fn left_socle_series(a: &Algebra) -> Result<Vec<Ideal>> {
    annihilator_series(a, Ideal::left_annihilator)
}

fn annihilator_series(a: &Algebra, ann: fn(&Ideal) -> Ideal) -> Result<Vec<Ideal>> {
    let series = radical_series(a)?;
    let mut out = Vec::new();
    for jn in &series {
        let s = ann(jn);
        let full = s.space().is_full();
        out.push(s);
        if full {
            break;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, quantum_complete_intersection, truncated_polynomial};
    use crate::gflinalg::Field;
    use crate::group::Group;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn generated_extremes() {
        let a = truncated_polynomial(f(3), 3).unwrap();
        assert!(ideal_generated(&a, &[a.one()], Side::TwoSided)
            .unwrap()
            .space()
            .is_full());
        assert!(ideal_generated(&a, &[], Side::TwoSided).unwrap().is_zero());
    }

    #[test]
    fn qci_principal_ideal() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        let z = a.basis_element(4 * 7 + 4);
        let az = ideal_generated(&a, &[z], Side::TwoSided).unwrap();
        assert_eq!(az.dim(), 9);
        for i in 4..7 {
            for j in 4..7 {
                assert!(az.contains_element(&a.basis_element(i * 7 + j)));
            }
        }
        assert_eq!(az.right_annihilator().dim(), 40);
    }

    #[test]
    fn annihilators_small() {
        let a = truncated_polynomial(f(2), 2).unwrap();
        let x = ideal_generated(&a, &[vec![0, 1]], Side::TwoSided).unwrap();
        assert_eq!(x.right_annihilator(), x);
        assert!(Ideal::zero(&a).right_annihilator().space().is_full());
        assert!(Ideal::whole(&a).right_annihilator().is_zero());
        assert!(x.power(2).unwrap().is_zero());
        assert!(x.is_nilpotent());
    }

    #[test]
    fn kc4_induced_annihilator() {
        let g = Group::cyclic(4).unwrap();
        let a = group_algebra(&g, f(2)).unwrap();
        // t = a^2 generates C_2; I = kG(t - 1)
        let mut gen = vec![0; 4];
        gen[2] = 1;
        gen[0] = 1;
        let i = ideal_generated(&a, &[gen.clone()], Side::TwoSided).unwrap();
        assert_eq!(i.dim(), 2);
        let r = i.right_annihilator();
        let sigma = ideal_generated(&a, &[gen], Side::TwoSided).unwrap();
        assert_eq!(r, sigma);
    }

    #[test]
    fn truncated_series() {
        let a = truncated_polynomial(f(2), 4).unwrap();
        let dims: Vec<usize> = radical_series(&a).unwrap().iter().map(Ideal::dim).collect();
        assert_eq!(dims, vec![3, 2, 1, 0]);
        let soc: Vec<usize> = socle_series(&a).unwrap().iter().map(Ideal::dim).collect();
        assert_eq!(soc, vec![1, 2, 3, 4]);
    }

    #[test]
    fn not_an_ideal_rejected() {
        let a = truncated_polynomial(f(2), 3).unwrap();
        let s = Subspace::from_vectors(f(2), 3, &[vec![0, 1, 0]]);
        assert!(Ideal::new(&a, s, Side::TwoSided).is_err());
    }
}
