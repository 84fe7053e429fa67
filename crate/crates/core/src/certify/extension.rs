use super::{certify_quotient_embedding, Certificate, Verdict};
use crate::algebra::{group_algebra, quotient_algebra, Algebra};
use crate::duality::{DualityCertificate, SelfinjectiveTag};
use crate::error::{Error, Result};
use crate::gflinalg::Field;
use crate::group::SubgroupHandle;
use crate::ideal::{augmentation_ideal, jacobson_radical, Ideal};
use crate::module::{
    ext1_dim, hom_pr, hom_space, ideal_as_module, quotient_by_ideal, trivial_module,
};

/// Non-closure of `mod(A/I)` under extensions, witnessed by
/// `Ext^1(A/I, A/I) ≅ Hom(I, A/I) ≠ 0` when `A/I` is selfinjective and `I ⊆ J(A)`.
pub fn extension_closure_obstruction(
    a: &Algebra,
    tag: &SelfinjectiveTag,
    i: &Ideal,
    quotient_cert: &DualityCertificate,
) -> Result<Certificate> {
    let embedding = certify_quotient_embedding(a, tag, i)?;
    if !embedding.is_positive() {
        return Err(Error::MissingPrerequisite(
            "positive embedding certificate".into(),
        ));
    }
    let (q_alg, _) = quotient_algebra(i)?;
    if quotient_cert.fingerprint() != q_alg.fingerprint() {
        return Err(Error::TagMismatch);
    }
    let mut c = Certificate::new(
        "extension-obstruction",
        "mod(A/I) is not extension closed in the stable category",
        format!("{}, ideal of dim {}", a.name(), i.dim()),
    );
    c.absorb("embedding", &embedding);
    let q = quotient_by_ideal(i)?;
    let im = ideal_as_module(i)?;
    let d1 = c.count("ext1_quotient", ext1_dim(&q, &q)?);
    let d2 = c.count("hom_ideal_to_quotient", hom_space(&im, &q)?.dim());
    c.cross("ext1==hom(I,A/I)", d1, d2);
    c.cross("hom_pr(I,A/I)", hom_pr(&im, &q)?.1.dim(), 0);

    let j = jacobson_radical(a)?;
    let selfinjective = c.flag("quotient_selfinjective", quotient_cert.is_frobenius());
    let in_radical = c.flag("ideal_in_radical", i.is_contained_in(&j)?);
    let top = quotient_by_ideal(&j)?;
    c.count("ext1_top_to_quotient", ext1_dim(&top, &q)?);
    c.count("ext1_quotient_to_quotient", d1);
    let verdict = if !(selfinjective && in_radical) {
        c.note("criterion", "inapplicable: dimensions reported only");
        Verdict::Inconclusive
    } else if d1 > 0 {
        Verdict::Positive
    } else {
        Verdict::Negative
    };
    Ok(c.finish(verdict))
}

/// Three routes to `Hom(N, F_p) ≠ 0`: `O^p(N) ⊊ N`, the abelianisation
/// `p`-rank, and `Hom_{kN}(I(kN), k)`.
pub fn certify_group_extension_closure(n: &SubgroupHandle, p: u64) -> Result<Certificate> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let field = Field::new(p)?;
    let h = n.as_group();
    let mut c = Certificate::new(
        "group-extension-obstruction",
        "mod(k[G/N]) is not extension closed in the stable category of kG",
        format!("{} over F_{p}, |N| = {}", n.parent().name(), n.order()),
    );
    c.count("order_n", h.order());
    let opn = c.count("order_o_p", h.o_p(p).order());
    let route_group = c.flag("route_o_p_proper", opn < h.order());
    let rank = c.count("p_rank", h.p_rank_abelianization(p));
    let route_rank = c.flag("route_p_rank", rank > 0);
    let kn = group_algebra(&h, field)?;
    let aug = ideal_as_module(&augmentation_ideal(&kn)?)?;
    let hom = c.count(
        "hom_aug_trivial",
        hom_space(&aug, &trivial_module(&kn)?)?.dim(),
    );
    let route_algebra = c.flag("route_hom", hom > 0);
    c.cross("route_o_p==route_p_rank", route_group, route_rank);
    c.cross("route_p_rank==route_hom", route_rank, route_algebra);
    c.cross("p_rank==hom_aug_trivial", rank, hom);
    c.cross("p_rank==hom_to_fp", rank, h.hom_to_fp_dim(p)?);
    let divides = c.flag("p_divides_n", (h.order() as u64).is_multiple_of(p));
    let verdict = if divides && route_group {
        Verdict::Positive
    } else {
        Verdict::Inconclusive
    };
    Ok(c.finish(verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_polynomial;
    use crate::duality::{certify_selfinjective, find_frobenius_form, SearchOptions};
    use crate::group::Group;
    use crate::ideal::induced_ideal;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn c4_over_c2_not_extension_closed() {
        let g = Group::cyclic(4).unwrap();
        let a = group_algebra(&g, f(2)).unwrap();
        let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
        let i = induced_ideal(&a, &g.subgroup(&[0, 2]).unwrap()).unwrap();
        let (q, _) = quotient_algebra(&i).unwrap();
        let qc = find_frobenius_form(&q, SearchOptions::default());
        let c = extension_closure_obstruction(&a, &tag, &i, &qc).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        assert!(c.count_value("ext1_quotient").unwrap() > 0);
    }

    #[test]
    fn dual_numbers() {
        let a = truncated_polynomial(f(2), 2).unwrap();
        let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
        let j = jacobson_radical(&a).unwrap();
        let (q, _) = quotient_algebra(&j).unwrap();
        let qc = find_frobenius_form(&q, SearchOptions::default());
        let c = extension_closure_obstruction(&a, &tag, &j, &qc).unwrap();
        assert_eq!(c.count_value("ext1_quotient"), Some(1));
        assert_eq!(c.verdict, Verdict::Positive);
        assert_eq!(
            extension_closure_obstruction(
                &a,
                &tag,
                &j,
                &find_frobenius_form(&a, SearchOptions::default())
            )
            .unwrap_err(),
            Error::TagMismatch
        );
    }

    #[test]
    fn group_routes() {
        let c4 = Group::cyclic(4).unwrap();
        let c = certify_group_extension_closure(&c4.subgroup(&[0, 2]).unwrap(), 2).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        let s3c2 = Group::direct_product(&Group::symmetric3(), &Group::cyclic(2).unwrap()).unwrap();
        let n = s3c2.subgroup(&[0, 2, 4, 6, 8, 10]).unwrap();
        let c = certify_group_extension_closure(&n, 3).unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert_eq!(c.flag_value("route_o_p_proper"), Some(false));
        assert_eq!(c.flag_value("route_hom"), Some(false));
        let v4 =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap();
        let c = certify_group_extension_closure(&v4.whole(), 2).unwrap();
        assert_eq!(c.count_value("p_rank"), Some(2));
        assert_eq!(c.count_value("hom_aug_trivial"), Some(2));
    }
}
