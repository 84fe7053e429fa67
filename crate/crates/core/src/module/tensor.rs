use super::{hom_space, quotient_module_with_projection, regular_module, AModule, EndAlgebra};
use crate::algebra::{quotient_algebra, Algebra};
use crate::error::{Error, Result};
use crate::gflinalg::{FpMatrix, RowReducer};
use crate::ideal::{Ideal, Side};

/// An `A`-`D`-bimodule. `right[i]` is the matrix of `y ↦ y·e_i`, so
/// `right` is an anti-homomorphism `D → End(Y)`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: AModule,
    right_algebra: Algebra,
    right: Vec<FpMatrix>,
}

impl Bimodule {
    /// Checks the right module law on generators and that the two actions commute.
    pub fn new(left: AModule, right_algebra: &Algebra, right: Vec<FpMatrix>) -> Result<Self> {
        let n = left.dim();
        let f = right_algebra.field();
        if right.len() != right_algebra.dim()
            || right.iter().any(|r| r.rows() != n || r.cols() != n)
        {
            return Err(Error::InvalidModule(
                "right action has the wrong shape".into(),
            ));
        }
        let b = Bimodule {
            left,
            right_algebra: right_algebra.clone(),
            right,
        };
        if b.rho_right(&right_algebra.one()) != FpMatrix::identity(f, n) {
            return Err(Error::InvalidModule(
                "unit does not act as identity on the right".into(),
            ));
        }
        for s in right_algebra.generators() {
            let rs = b.rho_right(s);
            for j in 0..right_algebra.dim() {
                let js = right_algebra.mul(&right_algebra.basis_element(j), s);
                if rs.mul(&b.right[j]) != b.rho_right(&js) {
                    return Err(Error::InvalidModule(
                        "right action is not multiplicative".into(),
                    ));
                }
            }
        }
        for g in b.left.algebra().generators() {
            let l = b.left.rho(g);
            for s in right_algebra.generators() {
                let r = b.rho_right(s);
                if l.mul(&r) != r.mul(&l) {
                    return Err(Error::InvalidModule(
                        "left and right actions do not commute".into(),
                    ));
                }
            }
        }
        Ok(b)
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(a: &Algebra) -> Self {
        Bimodule {
            left: regular_module(a),
            right_algebra: a.clone(),
            right: a.right_basis_mults().to_vec(),
        }
    }

    /// `A/I` as an `A`-`A/I`-bimodule, for a two-sided ideal `I`.
    pub fn quotient(ideal: &Ideal) -> Result<Self> {
        if ideal.side() != Side::TwoSided {
            return Err(Error::NotAnIdeal("two-sided"));
        }
        let (q, _) = quotient_algebra(ideal)?;
        let left = super::quotient_by_ideal(ideal)?;
        Ok(Bimodule {
            left,
            right: q.right_basis_mults().to_vec(),
            right_algebra: q,
        })
    }

    /// `Y` as an `A`-`End_A(Y)^op`-bimodule.
    pub fn from_end(end: &EndAlgebra) -> Self {
        Bimodule {
            left: end.homs.source().clone(),
            right_algebra: end.algebra.opposite(),
            right: end.maps.clone(),
        }
    }

    pub fn left_module(&self) -> &AModule {
        &self.left
    }
    pub fn left_algebra(&self) -> &Algebra {
        self.left.algebra()
    }
    pub fn right_algebra(&self) -> &Algebra {
        &self.right_algebra
    }
    pub fn dim(&self) -> usize {
        self.left.dim()
    }
    pub fn right_action(&self) -> &[FpMatrix] {
        &self.right
    }

    pub fn rho_right(&self, x: &[u32]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.right_algebra.field(), self.dim(), self.dim());
        for (i, &c) in x.iter().enumerate() {
            m.add_scaled(c, &self.right[i]);
        }
        m
    }
}

fn tensor_with_projection(y: &Bimodule, m: &AModule) -> Result<(AModule, FpMatrix)> {
    if !y.right_algebra.same_as(m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let f = m.algebra().field();
    let (n, k) = (y.dim(), m.dim());
    let iy = FpMatrix::identity(f, n);
    let im = FpMatrix::identity(f, k);
    let mut rr = RowReducer::new(f, n * k);
    for d in y.right_algebra.generators() {
        let rel = y.rho_right(d).kron(&im).sub(&iy.kron(&m.rho(d)));
        for c in 0..rel.cols() {
            rr.insert(&rel.column(c));
        }
    }
    let relations = rr.to_subspace();
    let action = y.left.action().iter().map(|l| l.kron(&im)).collect();
    let full = AModule::trusted(y.left_algebra(), action, "YxM");
    let (q, proj) = quotient_module_with_projection(&full, &relations)?;
    Ok((q.renamed(format!("{}(x){}", y.left.name(), m.name())), proj))
}

/// `Y ⊗_D M` as a left `A`-module.
pub fn tensor_over(y: &Bimodule, m: &AModule) -> Result<AModule> {
    tensor_with_projection(y, m).map(|(t, _)| t)
}

/// Whether `M → Hom_A(Y, Y ⊗_D M)`, `m ↦ (y ↦ y ⊗ m)`, is bijective.
pub fn adjunction_unit_iso(y: &Bimodule, m: &AModule) -> Result<bool> {
    let (t, proj) = tensor_with_projection(y, m)?;
    let f = m.algebra().field();
    let (n, k) = (y.dim(), m.dim());
    let mut rr = RowReducer::new(f, t.dim() * n);
    for s in 0..k {
        let mut eta = FpMatrix::zeros(f, t.dim(), n);
        for r in 0..n {
            let col = proj.column(r * k + s);
            for (i, &v) in col.iter().enumerate() {
                eta.set(i, r, v);
            }
        }
        if !rr.insert(eta.as_slice()) {
            return Ok(false);
        }
    }
    Ok(hom_space(&y.left, &t)?.dim() == k)
}

#[cfg(test)]
mod tests {
    use super::super::{end_algebra, is_isomorphic, restrict, trivial_module};
    use super::*;
    use crate::algebra::{group_algebra, truncated_polynomial};
    use crate::gflinalg::Field;
    use crate::group::Group;
    use crate::ideal::jacobson_radical;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn regular_bimodule_is_identity_functor() {
        let a = group_algebra(&Group::symmetric3(), f(2)).unwrap();
        let y = Bimodule::regular(&a);
        let k = trivial_module(&a).unwrap();
        let t = tensor_over(&y, &k).unwrap();
        assert!(is_isomorphic(&t, &k, 0).unwrap().is_isomorphic());
        let reg = regular_module(&a);
        assert!(is_isomorphic(&tensor_over(&y, &reg).unwrap(), &reg, 0)
            .unwrap()
            .is_isomorphic());
        assert!(adjunction_unit_iso(&y, &k).unwrap());
    }

    #[test]
    fn quotient_bimodule_restricts() {
        let a = truncated_polynomial(f(3), 4).unwrap();
        let j2 = jacobson_radical(&a).unwrap().power(2).unwrap();
        let y = Bimodule::quotient(&j2).unwrap();
        let (q, hom) = quotient_algebra(&j2).unwrap();
        let m = regular_module(&q);
        let m = AModule::trusted(y.right_algebra(), m.action().to_vec(), "Q");
        let t = tensor_over(&y, &m).unwrap();
        let r = restrict(&hom, &regular_module(&q)).unwrap();
        assert!(is_isomorphic(&t, &r, 0).unwrap().is_isomorphic());
        assert!(adjunction_unit_iso(&y, &m).unwrap());
    }

    #[test]
    fn end_bimodule_validates() {
        let a = group_algebra(&Group::cyclic(4).unwrap(), f(2)).unwrap();
        let k = trivial_module(&a).unwrap();
        let e = end_algebra(&k).unwrap();
        let y = Bimodule::from_end(&e);
        assert!(Bimodule::new(
            y.left_module().clone(),
            y.right_algebra(),
            y.right_action().to_vec()
        )
        .is_ok());
        assert_eq!(y.right_algebra().dim(), 1);
    }
}
