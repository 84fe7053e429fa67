//! The Jacobson radical by the trace filtration of Cohen, Ivanyos and Wales,
//! with an exhaustive fallback and a post-hoc contract check.

use super::{ideal_generated, Ideal, Side};
use crate::algebra::{quotient_algebra, Algebra};
use crate::error::{Error, Result};
use crate::gflinalg::{decode_vector, FpMatrix, RowReducer, Subspace};

/// Exhaustive search is attempted only when `p^d` is at most this.
const EXHAUSTIVE_LIMIT: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RadicalMethod {
    TraceFiltration,
    Exhaustive,
}

/// The largest nilpotent ideal, certified nilpotent with semisimple quotient.
pub fn jacobson_radical(a: &Algebra) -> Result<Ideal> {
    jacobson_radical_with_method(a).map(|(j, _)| j)
}

pub fn jacobson_radical_with_method(a: &Algebra) -> Result<(Ideal, RadicalMethod)> {
    let n = radical_unchecked(a);
    let first = match check_contract(a, &n) {
        Ok(()) => return Ok((n, RadicalMethod::TraceFiltration)),
        Err(e) => e,
    };
    if let Some(e) = radical_by_exhaustion(a) {
        if check_contract(a, &e).is_ok() {
            return Ok((e, RadicalMethod::Exhaustive));
        }
    }
    Err(first)
}

fn check_contract(a: &Algebra, n: &Ideal) -> Result<()> {
    if !n.is_nilpotent() {
        return Err(Error::RadicalContractViolation(
            "candidate is not nilpotent".into(),
        ));
    }
    if n.is_zero() {
        if is_semisimple_unchecked(a) {
            return Ok(());
        }
    } else {
        let (q, _) = quotient_algebra(n)?;
        if is_semisimple_unchecked(&q) {
            return Ok(());
        }
    }
    Err(Error::RadicalContractViolation(
        "quotient is not semisimple".into(),
    ))
}

/// A nondegenerate regular trace form certifies semisimplicity; otherwise
/// fall back to the trace filtration on the algebra itself.
fn is_semisimple_unchecked(a: &Algebra) -> bool {
    regular_trace_form(a).rank() == a.dim() || radical_unchecked(a).is_zero()
}

/// `T_ij = Tr(L_{e_i e_j})`.
pub fn regular_trace_form(a: &Algebra) -> FpMatrix {
    let d = a.dim();
    let f = a.field();
    let tr: Vec<u32> = (0..d)
        .map(|k| {
            (0..d).fold(0, |acc, j| {
                let c = a
                    .basis_product(k, j)
                    .iter()
                    .find(|&&(m, _)| m == j)
                    .map_or(0, |&(_, c)| c);
                f.add(acc, c)
            })
        })
        .collect();
    let mut t = FpMatrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let v = a
                .basis_product(i, j)
                .iter()
                .fold(0, |acc, &(k, c)| f.add(acc, f.mul(c, tr[k])));
            t.set(i, j, v);
        }
    }
    t
}

/// The trace filtration without any contract check.
pub fn radical_unchecked(a: &Algebra) -> Ideal {
    let f = a.field();
    let p = f.modulus() as u64;
    let d = a.dim();
    let mut levels = 0u32;
    while p.pow(levels + 1) <= d as u64 {
        levels += 1;
    }
    let mut current = Subspace::full(f, d);
    for i in 0..=levels {
        if current.is_zero() {
            break;
        }
        let basis = current.basis_vectors();
        let gamma: Vec<u32> = basis.iter().map(|b| trace_functional(a, b, i)).collect();
        if gamma.iter().all(|&g| g == 0) {
            continue;
        }
        // g_i is linear on I_{i-1}; impose g_i(x e_j) = 0 in coordinates of I_{i-1}
        let r = basis.len();
        let mut rows = Vec::with_capacity(d);
        for j in 0..d {
            let ej = a.basis_element(j);
            let row: Vec<u32> = basis
                .iter()
                .map(|b| {
                    let c = current
                        .coords(&a.mul(b, &ej))
                        .expect("filtration terms are ideals");
                    c.iter()
                        .zip(&gamma)
                        .fold(0, |acc, (&x, &g)| f.add(acc, f.mul(x, g)))
                })
                .collect();
            rows.push(row);
        }
        let sol = FpMatrix::from_row_vectors(f, r, &rows).kernel();
        let next: Vec<Vec<u32>> = sol
            .basis_vectors()
            .iter()
            .map(|c| current.combine(c))
            .collect();
        current = Subspace::from_vectors(f, d, &next);
    }
    Ideal::trusted_or_closed(a, current)
}

/// `g_i(b) = (Tr(L̂_b^{p^i}) mod p^{i+1}) / p^i` with `L̂_b` the integer lift.
fn trace_functional(a: &Algebra, b: &[u32], i: u32) -> u32 {
    let p = a.field().modulus() as u64;
    let m = p.pow(i + 1);
    let d = a.dim();
    let lb = a.left_mult(b);
    let mut base: Vec<u64> = lb.as_slice().iter().map(|&x| x as u64).collect();
    let mut e = p.pow(i);
    let mut acc: Option<Vec<u64>> = None;
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(x) => matmul_mod(&x, &base, d, m),
            });
        }
        e >>= 1;
        if e > 0 {
            base = matmul_mod(&base, &base, d, m);
        }
    }
    let power = acc.expect("exponent is positive");
    let tr = (0..d).fold(0, |t, k| (t + power[k * d + k]) % m);
    let scale = p.pow(i);
    debug_assert_eq!(tr % scale, 0, "trace of a p^i-th power is divisible by p^i");
    ((tr / scale) % p) as u32
}

fn matmul_mod(x: &[u64], y: &[u64], d: usize, m: u64) -> Vec<u64> {
    let mut out = vec![0u64; d * d];
    for i in 0..d {
        for k in 0..d {
            let a = x[i * d + k];
            if a == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] = (out[i * d + j] + a * y[k * d + j]) % m;
            }
        }
    }
    out
}

/// `span{x : the ideal generated by x is nilpotent}`, or `None` when `p^d` is too large.
pub fn radical_by_exhaustion(a: &Algebra) -> Option<Ideal> {
    let p = a.field().modulus() as u64;
    let d = a.dim() as u32;
    let total = p.checked_pow(d).filter(|&t| t <= EXHAUSTIVE_LIMIT)?;
    let mut rr = RowReducer::new(a.field(), a.dim());
    for code in 1..total {
        let x = decode_vector(code, p, a.dim());
        if rr.contains(&x) {
            continue;
        }
        let ideal = ideal_generated(a, std::slice::from_ref(&x), Side::TwoSided).ok()?;
        if ideal.is_nilpotent() {
            rr.insert(&x);
        }
    }
    Some(Ideal::trusted_or_closed(a, rr.to_subspace()))
}

impl Ideal {
    /// Wrap a subspace expected to be two-sided; if it is not, take the ideal it generates.
    fn trusted_or_closed(a: &Algebra, space: Subspace) -> Ideal {
        match Ideal::new(a, space.clone(), Side::TwoSided) {
            Ok(i) => i,
            Err(_) => ideal_generated(a, &space.basis_vectors(), Side::TwoSided)
                .expect("generator lengths match"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, matrix_algebra, truncated_polynomial, upper_triangular};
    use crate::gflinalg::Field;
    use crate::group::Group;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn maschke_case_is_semisimple() {
        let a = group_algebra(&Group::cyclic(2).unwrap(), f(5)).unwrap();
        assert!(jacobson_radical(&a).unwrap().is_zero());
    }

    #[test]
    fn dual_numbers() {
        let a = truncated_polynomial(f(2), 2).unwrap();
        let j = jacobson_radical(&a).unwrap();
        assert_eq!(j.basis(), vec![vec![0, 1]]);
    }

    #[test]
    fn small_char_matrix_algebra() {
        // regular trace form of M_2(F_2) is zero, yet the algebra is simple
        let a = matrix_algebra(f(2), 2).unwrap();
        assert_eq!(regular_trace_form(&a).rank(), 0);
        assert!(jacobson_radical(&a).unwrap().is_zero());
    }

    #[test]
    fn agrees_with_exhaustion() {
        let algebras = vec![
            group_algebra(&Group::cyclic(4).unwrap(), f(2)).unwrap(),
            group_algebra(&Group::symmetric3(), f(2)).unwrap(),
            group_algebra(&Group::symmetric3(), f(3)).unwrap(),
            upper_triangular(f(2), 3).unwrap(),
            upper_triangular(f(3), 2).unwrap(),
            truncated_polynomial(f(3), 5).unwrap(),
        ];
        for a in algebras {
            let ciw = radical_unchecked(&a);
            let brute = radical_by_exhaustion(&a).unwrap();
            assert_eq!(ciw, brute, "{a:?}");
        }
    }

    #[test]
    fn d10_radical_series() {
        let a = group_algebra(&Group::dihedral(10).unwrap(), f(5)).unwrap();
        let dims: Vec<usize> = super::super::radical_series(&a)
            .unwrap()
            .iter()
            .map(Ideal::dim)
            .collect();
        assert_eq!(dims, vec![8, 6, 4, 2, 0]);
    }
}
