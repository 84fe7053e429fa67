//! Finite groups given by multiplication table.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gflinalg::{Field, RowReducer};

/// Largest order accepted by [`Group::from_table`].
pub const MAX_ORDER: usize = 64;

#[derive(Debug, PartialEq, Eq)]
struct GroupData {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverses: Vec<usize>,
    labels: Vec<String>,
    name: String,
}

/// A finite group; cloning is cheap.
#[derive(Clone, PartialEq, Eq)]
pub struct Group(Arc<GroupData>);

impl Group {
    /// Validate a table (row `a`, column `b` holds `a·b`) and build the group.
    pub fn from_table(table: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidGroupTable(format!(
                "order {n} outside 1..={MAX_ORDER}"
            )));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroupTable(format!(
                    "row {a} has length {}",
                    row.len()
                )));
            }
            let distinct: BTreeSet<usize> = row.iter().copied().collect();
            if distinct.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::InvalidGroupTable(format!(
                    "row {a} is not a permutation"
                )));
            }
            flat.extend_from_slice(row);
        }
        for b in 0..n {
            let col: BTreeSet<usize> = (0..n).map(|a| flat[a * n + b]).collect();
            if col.len() != n {
                return Err(Error::InvalidGroupTable(format!(
                    "column {b} is not a permutation"
                )));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| flat[e * n + a] == a && flat[a * n + e] == a))
            .ok_or_else(|| Error::InvalidGroupTable("no identity element".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b];
                for c in 0..n {
                    if flat[ab * n + c] != flat[a * n + flat[b * n + c]] {
                        return Err(Error::InvalidGroupTable(format!(
                            "associativity fails on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        // Latin square with identity: every row contains the identity exactly once
        let inverses = (0..n)
            .map(|a| (0..n).find(|&b| flat[a * n + b] == identity).unwrap())
            .collect();
        let labels = match labels {
            Some(l) if l.len() == n => l,
            Some(l) => {
                return Err(Error::InvalidGroupTable(format!(
                    "{} labels for {n} elements",
                    l.len()
                )))
            }
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        Ok(Group(Arc::new(GroupData {
            order: n,
            table: flat,
            identity,
            inverses,
            labels,
            name: format!("G{n}"),
        })))
    }

    fn from_mul(
        n: usize,
        name: String,
        labels: Vec<String>,
        mul: impl Fn(usize, usize) -> usize,
    ) -> Self {
        let table = (0..n)
            .map(|a| (0..n).map(|b| mul(a, b)).collect())
            .collect();
        let g = Self::from_table(table, Some(labels)).expect("builder tables are valid");
        g.renamed(name)
    }

    fn renamed(self, name: String) -> Self {
        let mut d = Arc::try_unwrap(self.0).unwrap_or_else(|a| (*a).clone_data());
        d.name = name;
        Group(Arc::new(d))
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("cyclic order {n}")));
        }
        let labels = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
            .collect();
        Ok(Self::from_mul(n, format!("C{n}"), labels, |a, b| {
            (a + b) % n
        }))
    }

    /// Dihedral group of the given order (twice the polygon size).
    pub fn dihedral(order: usize) -> Result<Self> {
        if order < 2 || !order.is_multiple_of(2) || order > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("dihedral order {order}")));
        }
        let n = order / 2;
        // index e*n + i encodes r^i s^e
        let labels = (0..order)
            .map(|x| {
                let (e, i) = (x / n, x % n);
                let r = match i {
                    0 => String::new(),
                    1 => "r".into(),
                    _ => format!("r^{i}"),
                };
                match (e, r.is_empty()) {
                    (0, true) => "1".into(),
                    (0, false) => r,
                    (_, true) => "s".into(),
                    (_, false) => format!("{r}s"),
                }
            })
            .collect();
        Ok(Self::from_mul(
            order,
            format!("D{order}"),
            labels,
            move |x, y| {
                let (a, i) = (x / n, x % n);
                let (b, j) = (y / n, y % n);
                let k = if a == 0 { (i + j) % n } else { (i + n - j) % n };
                ((a + b) % 2) * n + k
            },
        ))
    }

    pub fn quaternion8() -> Self {
        // index 2*u + s: unit u in {1, i, j, k}, sign s (1 = negative)
        const UNIT: [[(usize, usize); 4]; 4] = [
            [(0, 0), (1, 0), (2, 0), (3, 0)],
            [(1, 0), (0, 1), (3, 0), (2, 1)],
            [(2, 0), (3, 1), (0, 1), (1, 0)],
            [(3, 0), (2, 0), (1, 1), (0, 1)],
        ];
        let names = ["1", "i", "j", "k"];
        let labels = (0..8)
            .map(|x| {
                let sign = if x % 2 == 1 { "-" } else { "" };
                format!("{sign}{}", names[x / 2])
            })
            .collect();
        Self::from_mul(8, "Q8".into(), labels, |x, y| {
            let (u, s) = (x / 2, x % 2);
            let (v, t) = (y / 2, y % 2);
            let (w, r) = UNIT[u][v];
            2 * w + (s + t + r) % 2
        })
    }

    pub fn symmetric3() -> Self {
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [1, 2, 0],
            [2, 0, 1],
            [1, 0, 2],
            [0, 2, 1],
            [2, 1, 0],
        ];
        let labels = ["()", "(123)", "(132)", "(12)", "(23)", "(13)"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        // (a·b)(x) = a(b(x))
        Self::from_mul(6, "S3".into(), labels, |a, b| {
            let c: [usize; 3] = std::array::from_fn(|x| perms[a][perms[b][x]]);
            perms.iter().position(|p| *p == c).unwrap()
        })
    }

    pub fn direct_product(g: &Group, h: &Group) -> Result<Self> {
        let (m, n) = (g.order(), h.order());
        if m * n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!("product order {}", m * n)));
        }
        let labels = (0..m * n)
            .map(|x| format!("({},{})", g.label(x / n), h.label(x % n)))
            .collect();
        let (g2, h2) = (g.clone(), h.clone());
        Ok(Self::from_mul(
            m * n,
            format!("{}x{}", g.name(), h.name()),
            labels,
            move |x, y| g2.mul(x / n, y / n) * n + h2.mul(x % n, y % n),
        ))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }
    pub fn identity(&self) -> usize {
        self.0.identity
    }
    pub fn name(&self) -> &str {
        &self.0.name
    }
    pub fn label(&self, a: usize) -> &str {
        &self.0.labels[a]
    }
    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.0.table[a * self.0.order + b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.0.inverses[a]
    }
    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity(), |acc, _| self.mul(acc, a))
    }
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity() {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> SubgroupHandle {
        SubgroupHandle {
            parent: self.clone(),
            members: (0..self.order()).collect(),
        }
    }

    pub fn trivial_subgroup(&self) -> SubgroupHandle {
        SubgroupHandle {
            parent: self.clone(),
            members: vec![self.identity()],
        }
    }

    /// Validate that `members` is a subgroup.
    pub fn subgroup(&self, members: &[usize]) -> Result<SubgroupHandle> {
        let set: BTreeSet<usize> = members.iter().copied().collect();
        if set.iter().any(|&x| x >= self.order()) {
            return Err(Error::NotASubgroup("element index out of range".into()));
        }
        if !set.contains(&self.identity()) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        for &a in &set {
            for &b in &set {
                if !set.contains(&self.mul(a, b)) {
                    return Err(Error::NotASubgroup(format!(
                        "{} * {} leaves the subset",
                        self.label(a),
                        self.label(b)
                    )));
                }
            }
        }
        Ok(SubgroupHandle {
            parent: self.clone(),
            members: set.into_iter().collect(),
        })
    }

    pub fn generated_subgroup(&self, gens: &[usize]) -> SubgroupHandle {
        let mut set = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    frontier.push(y);
                }
            }
        }
        SubgroupHandle {
            parent: self.clone(),
            members: set.into_iter().collect(),
        }
    }

    /// Greedy generating set, deterministic by element order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut h = self.trivial_subgroup();
        for a in 0..self.order() {
            if !h.contains(a) {
                gens.push(a);
                h = self.generated_subgroup(&gens);
            }
        }
        gens
    }

    pub fn center(&self) -> SubgroupHandle {
        let n = self.order();
        let members: Vec<usize> = (0..n)
            .filter(|&z| (0..n).all(|a| self.mul(z, a) == self.mul(a, z)))
            .collect();
        SubgroupHandle {
            parent: self.clone(),
            members,
        }
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn commutator_subgroup(&self) -> SubgroupHandle {
        let n = self.order();
        let comms: BTreeSet<usize> = (0..n)
            .flat_map(|a| (0..n).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.generated_subgroup(&comms.into_iter().collect::<Vec<_>>())
    }

    /// `O^p(G)`: the subgroup generated by elements of order prime to `p`.
    pub fn o_p(&self, p: u64) -> SubgroupHandle {
        let gens: Vec<usize> = (0..self.order())
            .filter(|&a| !(self.element_order(a) as u64).is_multiple_of(p))
            .collect();
        let h = self.generated_subgroup(&gens);
        debug_assert!(h.is_normal());
        debug_assert!(is_power_of(self.order() / h.order(), p));
        h
    }

    /// Rank of the largest elementary abelian `p`-quotient, from `|G : G'G^p|`.
    pub fn p_rank_abelianization(&self, p: u64) -> usize {
        let n = self.order();
        let mut gens: Vec<usize> = self.commutator_subgroup().members;
        gens.extend((0..n).map(|a| self.pow(a, p as usize)));
        let index = n / self.generated_subgroup(&gens).order();
        log_exact(index, p).expect("G/G'G^p is an elementary abelian p-group")
    }

    /// `dim_{F_p}` of the solution space of `f(ab) = f(a) + f(b)`.
    pub fn hom_to_fp_dim(&self, p: u64) -> Result<usize> {
        let field = Field::new(p)?;
        let n = self.order();
        let mut rr = RowReducer::new(field, n);
        let minus_one = field.neg(1);
        for a in 0..n {
            for b in 0..n {
                let mut row = vec![0u32; n];
                let ab = self.mul(a, b);
                row[ab] = field.add(row[ab], 1);
                row[a] = field.add(row[a], minus_one);
                row[b] = field.add(row[b], minus_one);
                rr.insert(&row);
                if rr.is_full() {
                    return Ok(0);
                }
            }
        }
        Ok(n - rr.rank())
    }

    pub fn is_p_group(&self, p: u64) -> bool {
        is_power_of(self.order(), p)
    }
}

impl GroupData {
    fn clone_data(&self) -> GroupData {
        GroupData {
            order: self.order,
            table: self.table.clone(),
            identity: self.identity,
            inverses: self.inverses.clone(),
            labels: self.labels.clone(),
            name: self.name.clone(),
        }
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group({}, order {})", self.name(), self.order())
    }
}

pub(crate) fn is_power_of(n: usize, p: u64) -> bool {
    log_exact(n, p).is_some()
}

fn log_exact(mut n: usize, p: u64) -> Option<usize> {
    let p = p as usize;
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

/// A subgroup of a parent group, as a sorted member list.
#[derive(Clone, PartialEq, Eq)]
pub struct SubgroupHandle {
    parent: Group,
    members: Vec<usize>,
}

impl SubgroupHandle {
    pub fn parent(&self) -> &Group {
        &self.parent
    }
    pub fn members(&self) -> &[usize] {
        &self.members
    }
    pub fn order(&self) -> usize {
        self.members.len()
    }
    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }
    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
    pub fn is_subgroup_of(&self, other: &SubgroupHandle) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        (0..g.order()).all(|x| {
            self.members
                .iter()
                .all(|&h| self.contains(g.mul(g.mul(x, h), g.inv(x))))
        })
    }

    /// The quotient group and the map sending each element to its coset.
    pub fn quotient_group(&self) -> Result<(Group, Vec<usize>)> {
        if !self.is_normal() {
            return Err(Error::NotNormal);
        }
        let g = &self.parent;
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::new();
        for x in 0..g.order() {
            if coset_of[x] == usize::MAX {
                let c = reps.len();
                reps.push(x);
                for &h in &self.members {
                    coset_of[g.mul(x, h)] = c;
                }
            }
        }
        let labels = reps.iter().map(|&r| format!("{}N", g.label(r))).collect();
        let table = reps
            .iter()
            .map(|&a| reps.iter().map(|&b| coset_of[g.mul(a, b)]).collect())
            .collect();
        let q = Group::from_table(table, Some(labels))?.renamed(format!(
            "{}/N{}",
            g.name(),
            self.order()
        ));
        Ok((q, coset_of))
    }

    /// The subgroup as a group in its own right, indexed by member position.
    pub fn as_group(&self) -> Group {
        let g = &self.parent;
        let pos = |x: usize| self.members.binary_search(&x).unwrap();
        let table = self
            .members
            .iter()
            .map(|&a| self.members.iter().map(|&b| pos(g.mul(a, b))).collect())
            .collect();
        let labels = self
            .members
            .iter()
            .map(|&a| g.label(a).to_string())
            .collect();
        Group::from_table(table, Some(labels))
            .expect("subgroup table is valid")
            .renamed(format!("{}<{}", self.order(), g.name()))
    }
}

impl fmt::Debug for SubgroupHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup of {} with members {:?}",
            self.parent.name(),
            self.members
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builders_validate() {
        assert_eq!(Group::cyclic(1).unwrap().order(), 1);
        let d10 = Group::dihedral(10).unwrap();
        assert_eq!(d10.order(), 10);
        assert!(!d10.is_abelian());
        let c6 =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(3).unwrap()).unwrap();
        assert_eq!(c6.order(), 6);
        assert!(c6.is_abelian());
        assert_eq!((0..6).map(|a| c6.element_order(a)).max(), Some(6));
        let q8 = Group::quaternion8();
        assert!(!q8.is_abelian());
        assert_eq!(q8.center().order(), 2);
        assert_eq!((0..8).filter(|&a| q8.element_order(a) == 4).count(), 6);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(Group::from_table(vec![vec![0, 1], vec![0, 1]], None).is_err());
        // Latin square without associativity
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(Group::from_table(t, None).is_err());
    }

    #[test]
    fn quaternion_center_quotient() {
        let q8 = Group::quaternion8();
        let z = q8.center();
        assert!(z.is_normal());
        let (q, _) = z.quotient_group().unwrap();
        assert_eq!(q.order(), 4);
        assert!((0..4).all(|a| q.element_order(a) <= 2));
    }

    #[test]
    fn s3_normality() {
        let s3 = Group::symmetric3();
        let c3 = s3.subgroup(&[0, 1, 2]).unwrap();
        assert!(c3.is_normal());
        assert_eq!(c3.quotient_group().unwrap().0.order(), 2);
        let c2 = s3.subgroup(&[0, 3]).unwrap();
        assert!(!c2.is_normal());
        assert_eq!(c2.quotient_group().unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn o_p_and_p_rank() {
        let c2 = Group::cyclic(2).unwrap();
        assert!(c2.o_p(2).is_trivial());
        assert_eq!(c2.p_rank_abelianization(2), 1);
        let s3 = Group::symmetric3();
        assert_eq!(s3.o_p(3).order(), 6);
        assert_eq!(s3.p_rank_abelianization(3), 0);
        assert_eq!(s3.o_p(2).order(), 3);
        assert_eq!(s3.p_rank_abelianization(2), 1);
        for g in [c2, s3, Group::quaternion8(), Group::cyclic(4).unwrap()] {
            for p in [2, 3] {
                assert_eq!(g.hom_to_fp_dim(p).unwrap(), g.p_rank_abelianization(p));
            }
        }
    }

    #[test]
    fn subset_not_subgroup() {
        let s3 = Group::symmetric3();
        assert!(s3.subgroup(&[0, 3, 4]).is_err());
        assert!(s3.subgroup(&[1, 2]).is_err());
    }

    #[test]
    fn as_group_reindexes() {
        let g = Group::direct_product(&Group::symmetric3(), &Group::cyclic(2).unwrap()).unwrap();
        let n = g
            .subgroup(&(0..6).map(|a| a * 2).collect::<Vec<_>>())
            .unwrap();
        assert!(n.is_normal());
        let s = n.as_group();
        assert_eq!(s.order(), 6);
        assert!(!s.is_abelian());
    }
}
