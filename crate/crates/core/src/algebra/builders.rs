use super::{Algebra, AlgebraHom, AlgebraSpec, ValidationLevel};
use crate::error::{Error, Result};
use crate::gflinalg::{Field, FpMatrix};
use crate::group::Group;
use crate::ideal::{Ideal, Side};

fn unit_vector(d: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; d];
    v[i] = 1;
    v
}

/// `k⟨x, y | x^m = y^n = 0, xy = q·yx⟩` with basis `x^i y^j` at index `i*n + j`.
pub fn quantum_complete_intersection(field: Field, q: i64, m: usize, n: usize) -> Result<Algebra> {
    let q = field.reduce(q);
    if q == 0 {
        return Err(Error::InvalidParameter("q must be nonzero".into()));
    }
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter("m and n must be at least 2".into()));
    }
    let d = m * n;
    let qinv = field.inv(q);
    let mut structure = vec![0u32; d * d * d];
    // (x^a y^b)(x^c y^e) = q^{-bc} x^{a+c} y^{b+e}
    for a in 0..m {
        for b in 0..n {
            for c in 0..m - a {
                for e in 0..n - b {
                    let coeff = field.pow(qinv, (b * c) as u64);
                    let (i, j, k) = (a * n + b, c * n + e, (a + c) * n + b + e);
                    structure[(i * d + j) * d + k] = coeff;
                }
            }
        }
    }
    let labels = (0..d).map(|t| format!("x^{}*y^{}", t / n, t % n)).collect();
    let spec = AlgebraSpec::new(field, d, structure, unit_vector(d, 0))
        .labels(labels)
        .name(format!(
            "qci(p={}, q={}, {m}, {n})",
            field.modulus(),
            field.signed(q)
        ))
        .generators(vec![unit_vector(d, n), unit_vector(d, 1)])
        .candidate_form(unit_vector(d, d - 1));
    Algebra::new(spec, ValidationLevel::default_for(d))
}

/// The group algebra `F_p[G]`, basis in table order, tagged with `G`.
pub fn group_algebra(group: &Group, field: Field) -> Result<Algebra> {
    let n = group.order();
    let mut structure = vec![0u32; n * n * n];
    for g in 0..n {
        for h in 0..n {
            structure[(g * n + h) * n + group.mul(g, h)] = 1;
        }
    }
    let gens = group
        .generators()
        .into_iter()
        .map(|g| unit_vector(n, g))
        .collect();
    let spec = AlgebraSpec::new(field, n, structure, unit_vector(n, group.identity()))
        .labels(group.labels().to_vec())
        .name(format!("F{}[{}]", field.modulus(), group.name()))
        .generators(gens)
        .candidate_form(unit_vector(n, group.identity()));
    Algebra::with_group(spec, group.clone())
}

/// `F_p[x]/(x^n)`.
pub fn truncated_polynomial(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "truncation degree must be positive".into(),
        ));
    }
    let mut structure = vec![0u32; n * n * n];
    for i in 0..n {
        for j in 0..n - i {
            structure[(i * n + j) * n + i + j] = 1;
        }
    }
    let labels = (0..n)
        .map(|i| match i {
            0 => "1".into(),
            1 => "x".into(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut spec = AlgebraSpec::new(field, n, structure, unit_vector(n, 0))
        .labels(labels)
        .name(format!("F{}[x]/(x^{n})", field.modulus()))
        .candidate_form(unit_vector(n, n - 1));
    if n > 1 {
        spec = spec.generators(vec![unit_vector(n, 1)]);
    }
    Algebra::new(spec, ValidationLevel::default_for(n))
}

/// The full matrix algebra `M_n(F_p)` on matrix units `E_ab` (index `a*n + b`).
pub fn matrix_algebra(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be positive".into(),
        ));
    }
    let d = n * n;
    let mut structure = vec![0u32; d * d * d];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                structure[((a * n + b) * d + b * n + c) * d + a * n + c] = 1;
            }
        }
    }
    let unit = (0..d).map(|t| u32::from(t / n == t % n)).collect();
    let labels = (0..d)
        .map(|t| format!("E{}{}", t / n + 1, t % n + 1))
        .collect();
    let spec = AlgebraSpec::new(field, d, structure, unit)
        .labels(labels)
        .name(format!("M{n}(F{})", field.modulus()))
        .candidate_form((0..d).map(|t| u32::from(t / n == t % n)).collect());
    Algebra::new(spec, ValidationLevel::default_for(d))
}

/// Upper triangular `n×n` matrices on the units `E_ab`, `a ≤ b`.
pub fn upper_triangular(field: Field, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::InvalidParameter(
            "matrix size must be positive".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
    let d = pairs.len();
    let idx = |a: usize, b: usize| pairs.iter().position(|&p| p == (a, b)).unwrap();
    let mut structure = vec![0u32; d * d * d];
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, e)) in pairs.iter().enumerate() {
            if b == c {
                structure[(i * d + j) * d + idx(a, e)] = 1;
            }
        }
    }
    let unit = pairs.iter().map(|&(a, b)| u32::from(a == b)).collect();
    let labels = pairs
        .iter()
        .map(|&(a, b)| format!("E{}{}", a + 1, b + 1))
        .collect();
    let spec = AlgebraSpec::new(field, d, structure, unit)
        .labels(labels)
        .name(format!("T{n}(F{})", field.modulus()));
    Algebra::new(spec, ValidationLevel::default_for(d))
}

/// `A/I` on the basis of non-pivot coordinates of `I`, with the projection.
pub fn quotient_algebra(ideal: &Ideal) -> Result<(Algebra, AlgebraHom)> {
    if ideal.side() != Side::TwoSided {
        return Err(Error::NotAnIdeal("two-sided"));
    }
    let a = ideal.parent();
    let space = ideal.space();
    if space.contains_vector(&a.one()) {
        return Err(Error::ImproperIdeal);
    }
    let keep = space.complement_indices();
    let q = keep.len();
    let project = |v: &[u32]| -> Vec<u32> {
        let r = space.reduce(v);
        keep.iter().map(|&c| r[c]).collect()
    };
    let mut structure = vec![0u32; q * q * q];
    for (i, &bi) in keep.iter().enumerate() {
        for (j, &bj) in keep.iter().enumerate() {
            let prod = a.mul(&a.basis_element(bi), &a.basis_element(bj));
            for (k, c) in project(&prod).into_iter().enumerate() {
                structure[(i * q + j) * q + k] = c;
            }
        }
    }
    let proj_cols: Vec<Vec<u32>> = (0..a.dim()).map(|j| project(&a.basis_element(j))).collect();
    let proj = FpMatrix::from_columns(a.field(), q, &proj_cols);
    let gens = a.generators().iter().map(|g| proj.mul_vec(g)).collect();
    let spec = AlgebraSpec::new(a.field(), q, structure, project(&a.one()))
        .labels(keep.iter().map(|&c| a.label(c).to_string()).collect())
        .name(format!("{}/I{}", a.name(), space.dim()))
        .generators(gens);
    let quotient = Algebra::new(spec, ValidationLevel::default_for(q))?;
    let hom = AlgebraHom::new(a.clone(), quotient.clone(), proj)?;
    Ok((quotient, hom))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn qci_dimensions() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        assert_eq!(a.dim(), 49);
        assert!(!a.is_commutative());
        let b = quantum_complete_intersection(f(2), 1, 2, 2).unwrap();
        assert_eq!(b.dim(), 4);
        assert!(b.is_commutative());
        assert_eq!(
            quantum_complete_intersection(f(7), -1, 3, 3).unwrap().dim(),
            9
        );
        assert!(quantum_complete_intersection(f(7), 0, 3, 3).is_err());
    }

    #[test]
    fn qci_relations() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        let x = a.basis_element(a.label_index("x^1*y^0").unwrap());
        let y = a.basis_element(a.label_index("x^0*y^1").unwrap());
        let xy = a.mul(&x, &y);
        let yx = a.mul(&y, &x);
        assert_eq!(xy, a.scale(a.field().reduce(-1), &yx));
        assert!(Algebra::is_zero_element(&a.pow(&x, 7)));
        assert!(!Algebra::is_zero_element(&a.pow(&x, 6)));
    }

    #[test]
    fn qci_center_monomials() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        let z = a.center();
        for i in 0..7 {
            for j in 0..7 {
                let central = (i % 2 == 0 && j % 2 == 0) || i == 6 || j == 6;
                assert_eq!(
                    z.contains_vector(&a.basis_element(i * 7 + j)),
                    central,
                    "x^{i}y^{j}"
                );
            }
        }
        assert_eq!(a.left_mult(&a.basis_element(4 * 7 + 4)).rank(), 9);
    }

    #[test]
    fn group_algebra_of_trivial_group_is_field() {
        let a = group_algebra(&Group::cyclic(1).unwrap(), f(3)).unwrap();
        assert_eq!(a.dim(), 1);
    }

    #[test]
    fn matrix_algebra_center_and_commutators() {
        let m2 = matrix_algebra(f(2), 2).unwrap();
        assert_eq!(m2.center().dim(), 1);
        assert_eq!(
            matrix_algebra(f(3), 2).unwrap().commutator_subspace().dim(),
            3
        );
    }

    #[test]
    fn s3_commutators() {
        let a = group_algebra(&Group::symmetric3(), f(2)).unwrap();
        assert_eq!(a.commutator_subspace().dim(), 3);
        assert_eq!(a.center().dim(), 3);
    }

    #[test]
    fn opposite_involution() {
        let t = upper_triangular(f(2), 2).unwrap();
        let op = t.opposite();
        assert_ne!(t.structure(), op.structure());
        op.revalidate().unwrap();
        assert_eq!(op.opposite().structure(), t.structure());
        let q = quantum_complete_intersection(f(7), -1, 3, 3).unwrap();
        assert_eq!(q.opposite().opposite().structure(), q.structure());
        let c = truncated_polynomial(f(5), 3).unwrap();
        assert_eq!(c.opposite().structure(), c.structure());
    }
}
