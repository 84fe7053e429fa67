use super::{verdict_of, Certificate, Verdict};
use crate::algebra::Algebra;
use crate::duality::{find_frobenius_form, SearchOptions, SelfinjectiveTag};
use crate::error::{Error, Result};
use crate::gflinalg::FpMatrix;
use crate::ideal::{jacobson_radical, Ideal};
use crate::module::{
    adjunction_unit_iso, end_algebra, hom_pr, is_projective_over, quotient_by_ideal,
    quotient_module_with_projection, regular_module, stable_hom_dim, submodule, AModule, Bimodule,
    ModHom,
};

/// Whether `mod_Y(A)` is a distinguished abelian subcategory: `End^pr(Y) = 0`,
/// `End(Y)` Frobenius and `Y` projective over `End(Y)`.
pub fn certify_mod_y(
    a: &Algebra,
    tag: &SelfinjectiveTag,
    y: &AModule,
    opts: SearchOptions,
) -> Result<Certificate> {
    tag.check(a)?;
    if !y.algebra().same_as(a) {
        return Err(Error::AlgebraMismatch);
    }
    let mut c = Certificate::new(
        "endomorphism-embedding",
        "mod_Y(A) is a distinguished abelian subcategory equivalent to mod(End(Y)^op)",
        format!("{}, module {} of dim {}", a.name(), y.name(), y.dim()),
    );
    c.count("dim_y", y.dim());
    let (hom, pr) = hom_pr(y, y)?;
    c.count("dim_end", hom.dim());
    c.count("dim_end_pr", pr.dim());
    let end_pr_zero = c.flag("end_pr_zero", pr.dim() == 0);
    let e = end_algebra(y)?;
    let form = find_frobenius_form(&e.algebra, opts);
    let frobenius = c.flag("end_frobenius", form.is_frobenius());
    c.flag("end_search_exhaustive", form.evidence.exhaustive);
    let projective = c.flag(
        "projective_over_end",
        is_projective_over(&e.algebra, &e.module)?,
    );
    let jr = jacobson_radical(&e.algebra)?;
    c.count("dim_end_top", e.algebra.dim() - jr.dim());

    if frobenius && projective {
        let bi = Bimodule::from_end(&e);
        let d = bi.right_algebra().clone();
        let regular = adjunction_unit_iso(&bi, &regular_module(&d))?;
        c.cross("unit_iso.regular", regular, true);
        let jd = jacobson_radical(&d)?;
        if !jd.is_zero() {
            let top = quotient_by_ideal(&jd)?;
            let ok = adjunction_unit_iso(&bi, &top)?;
            c.cross("unit_iso.top", ok, true);
        }
    }
    let verdict = if end_pr_zero && frobenius && projective {
        Verdict::Positive
    } else if end_pr_zero && projective && !form.is_disproof() {
        Verdict::Inconclusive
    } else {
        Verdict::Negative
    };
    Ok(c.finish(verdict))
}

/// Stable `End` of each module is one-dimensional and stable cross-`Hom` vanishes.
pub fn check_orthogonal_family(a: &Algebra, xs: &[AModule]) -> Result<Certificate> {
    if xs.iter().any(|x| !x.algebra().same_as(a)) {
        return Err(Error::AlgebraMismatch);
    }
    let mut c = Certificate::new(
        "orthogonal-family",
        "the family spans a semisimple distinguished abelian subcategory",
        format!("{}, {} modules", a.name(), xs.len()),
    );
    c.count("family_size", xs.len());
    let mut ok = true;
    for (s, u) in xs.iter().enumerate() {
        for (t, v) in xs.iter().enumerate() {
            let d = stable_hom_dim(u, v)?;
            c.count(&format!("stable_hom[{s},{t}]"), d);
            ok &= d == usize::from(s == t);
        }
    }
    if ok {
        c.count("ell", xs.len());
    }
    Ok(c.finish(verdict_of(ok)))
}

/// `U → U/IU` and `ann_U(I) → U`.
pub fn approximations(a: &Algebra, i: &Ideal, u: &AModule) -> Result<(ModHom, ModHom)> {
    if !u.algebra().same_as(a) || !i.parent().same_as(a) {
        return Err(Error::AlgebraMismatch);
    }
    let (top, proj) = quotient_module_with_projection(u, &u.ideal_times(i))?;
    assert!(top.is_annihilated_by(i), "I must kill U/IU");
    let left = ModHom::new(u, &top, proj)?;
    let ann = u.annihilated_by(i);
    let sub = submodule(u, &ann)?;
    assert!(sub.is_annihilated_by(i), "I must kill ann_U(I)");
    let basis = ann.basis_vectors();
    let incl = FpMatrix::from_columns(a.field(), u.dim(), &basis);
    let right = ModHom::new(&sub, u, incl)?;
    Ok((left, right))
}

/// Certificate wrapper around [`approximations`].
pub fn certify_approximations(a: &Algebra, i: &Ideal, u: &AModule) -> Result<Certificate> {
    let (left, right) = approximations(a, i, u)?;
    let mut c = Certificate::new(
        "approximations",
        "U -> U/IU and ann_U(I) -> U are the approximations of U by modules killed by I",
        format!(
            "{}, ideal of dim {}, module {} of dim {}",
            a.name(),
            i.dim(),
            u.name(),
            u.dim()
        ),
    );
    c.count("dim_u", u.dim());
    c.count("dim_top", left.target().dim());
    c.count("dim_ann", right.source().dim());
    let s = c.flag("left_surjective", left.is_surjective());
    let t = c.flag("right_injective", right.is_injective());
    c.cross(
        "dim_iu+dim_top==dim_u",
        u.ideal_times(i).dim() + left.target().dim(),
        u.dim(),
    );
    Ok(c.finish(verdict_of(s && t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::group_algebra;
    use crate::duality::certify_selfinjective;
    use crate::gflinalg::Field;
    use crate::group::Group;
    use crate::ideal::induced_ideal;
    use crate::module::trivial_module;

    #[test]
    fn regular_module_is_negative() {
        let a = group_algebra(&Group::cyclic(2).unwrap(), Field::new(2).unwrap()).unwrap();
        let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
        let c = certify_mod_y(&a, &tag, &regular_module(&a), SearchOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Negative);
        let k = trivial_module(&a).unwrap();
        let c = certify_mod_y(&a, &tag, &k, SearchOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        let fam = check_orthogonal_family(&a, std::slice::from_ref(&k)).unwrap();
        assert_eq!(fam.verdict, Verdict::Positive);
        let fam = check_orthogonal_family(&a, &[k, regular_module(&a)]).unwrap();
        assert_eq!(fam.verdict, Verdict::Negative);
    }

    #[test]
    fn approximations_of_c4() {
        let g = Group::cyclic(4).unwrap();
        let a = group_algebra(&g, Field::new(2).unwrap()).unwrap();
        let i = induced_ideal(&a, &g.subgroup(&[0, 2]).unwrap()).unwrap();
        let (l, r) = approximations(&a, &i, &regular_module(&a)).unwrap();
        assert_eq!(l.target().dim(), 2);
        assert_eq!(r.source().dim(), 2);
        let (l, r) = approximations(&a, &Ideal::zero(&a), &regular_module(&a)).unwrap();
        assert!(l.is_isomorphism() && r.is_isomorphism());
    }
}
