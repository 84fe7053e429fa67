use super::{verdict_of, Certificate, Verdict};
use crate::algebra::{group_algebra, quotient_algebra, Algebra, AlgebraHom};
use crate::duality::{
    assert_selfinjective, is_symmetric, DualityCertificate, SearchOptions, SelfinjectiveTag,
};
use crate::error::{Error, Result};
use crate::gflinalg::{Field, FpMatrix, Subspace};
use crate::group::{Group, SubgroupHandle};
use crate::ideal::{
    ideal_generated, induced_ideal, jacobson_radical, socle_series, subgroup_sum, Ideal, Side,
};
use crate::module::{
    hom_pr, ideal_as_module, is_projective_over, quotient_by_ideal, quotient_module,
    regular_module, restrict, AModule,
};

fn two_sided_proper(a: &Algebra, i: &Ideal) -> Result<()> {
    if !i.parent().same_as(a) {
        return Err(Error::ParentMismatch);
    }
    if i.side() != Side::TwoSided {
        return Err(Error::NotAnIdeal("two-sided"));
    }
    if !i.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    Ok(())
}

fn hom_pr_dim(u: &AModule, v: &AModule) -> Result<usize> {
    Ok(hom_pr(u, v)?.1.dim())
}

/// `I / I²` as a module annihilated by `I`.
fn top_of_ideal(i: &Ideal) -> Result<AModule> {
    let m = ideal_as_module(i)?;
    let sq = i.product(i)?;
    let coords: Vec<Vec<u32>> = sq
        .basis()
        .iter()
        .map(|x| i.space().coords(x).expect("I² ⊆ I"))
        .collect();
    let sub = Subspace::from_vectors(i.parent().field(), i.dim(), &coords);
    quotient_module(&m, &sub)
}

/// Whether `A/I` embeds as a distinguished abelian subcategory: the five
/// equivalent conditions plus sampled vanishing of `Hom^pr` inside `mod(A/I)`.
pub fn certify_quotient_embedding(
    a: &Algebra,
    tag: &SelfinjectiveTag,
    i: &Ideal,
) -> Result<Certificate> {
    tag.check(a)?;
    two_sided_proper(a, i)?;
    let mut c = Certificate::new(
        "quotient-embedding",
        "mod(A/I) is a distinguished abelian subcategory of the stable category",
        format!("{}, ideal of dim {}", a.name(), i.dim()),
    );
    c.count("dim_a", a.dim());
    c.count("dim_i", i.dim());
    let r = i.right_annihilator();
    let l = i.left_annihilator();
    c.count("dim_r", r.dim());
    c.count("dim_l", l.dim());
    let conds = [
        c.flag("r_in_i", r.is_contained_in(i)?),
        c.flag("l_in_i", l.is_contained_in(i)?),
        c.flag("r_squared_zero", r.product(&r)?.is_zero()),
        c.flag("l_squared_zero", l.product(&l)?.is_zero()),
    ];
    let q = quotient_by_ideal(i)?;
    let end_pr = c.count("dim_end_pr", hom_pr_dim(&q, &q)?);
    let end_pr_zero = c.flag("end_pr_zero", end_pr == 0);
    for (name, v) in ["l_in_i", "r_squared_zero", "l_squared_zero", "end_pr_zero"]
        .iter()
        .zip(conds[1..].iter().chain([&end_pr_zero]))
    {
        c.cross(&format!("r_in_i=={name}"), conds[0], *v);
    }
    if tag.provenance == crate::duality::Provenance::Certified {
        c.cross("dim_i+dim_r==dim_a", i.dim() + r.dim(), a.dim());
    }

    // sampled pairs inside mod(A/I)
    let j = jacobson_radical(a)?;
    let top = quotient_by_ideal(&i.sum(&j)?)?;
    let mut samples = vec![("quotient_to_top", hom_pr_dim(&q, &top)?)];
    let ii = top_of_ideal(i)?;
    if ii.dim() > 0 {
        samples.push(("ideal_top_end", hom_pr_dim(&ii, &ii)?));
        samples.push(("quotient_to_ideal_top", hom_pr_dim(&q, &ii)?));
    }
    let mut sampled_zero = true;
    for (name, d) in samples {
        c.count(&format!("hom_pr.{name}"), d);
        sampled_zero &= d == 0;
    }
    c.flag("sampled_hom_pr_zero", sampled_zero);
    if end_pr_zero {
        c.cross("end_pr_zero=>sampled_hom_pr_zero", true, sampled_zero);
    }
    let positive = conds.iter().all(|&b| b) && end_pr_zero;
    Ok(c.finish(verdict_of(positive)))
}

/// `I = l(J)` for `J² = 0`, with the round trip `r(I) = J`.
pub fn certify_square_zero(a: &Algebra, tag: &SelfinjectiveTag, j: &Ideal) -> Result<Certificate> {
    tag.check(a)?;
    if !j.parent().same_as(a) {
        return Err(Error::ParentMismatch);
    }
    if j.side() != Side::TwoSided {
        return Err(Error::NotAnIdeal("two-sided"));
    }
    if !j.product(j)?.is_zero() {
        return Err(Error::NotSquareZero);
    }
    let i = j.left_annihilator();
    let inner = certify_quotient_embedding(a, tag, &i)?;
    let mut c = Certificate::new(
        "square-zero-annihilator",
        "for J with J² = 0, mod(A/l(J)) is a distinguished abelian subcategory",
        format!("{}, square-zero ideal of dim {}", a.name(), j.dim()),
    );
    c.count("dim_j", j.dim());
    c.count("dim_i", i.dim());
    c.absorb("embedding", &inner);
    let back = i.right_annihilator();
    c.cross("r(l(J))==J", back.space() == j.space(), true);
    Ok(c.finish(inner.verdict))
}

/// `I = ann(z)` for central `z`, embedding iff `z² = 0`, plus the
/// quiver-preservation branch when `soc²(A) ⊆ Az`.
pub fn certify_central_quotient(
    a: &Algebra,
    cert: &DualityCertificate,
    z: &[u32],
    opts: SearchOptions,
) -> Result<Certificate> {
    if !cert.is_symmetric() {
        return Err(Error::MissingPrerequisite("symmetric form".into()));
    }
    let tag = assert_selfinjective(a, cert, false)?;
    if z.len() != a.dim() {
        return Err(Error::DimensionMismatch("central element".into()));
    }
    if !a.is_central(z) {
        return Err(Error::NotCentral);
    }
    let az = ideal_generated(a, &[z.to_vec()], Side::TwoSided)?;
    let i = az.right_annihilator();
    if !i.is_proper() {
        return Err(Error::ImproperIdeal);
    }
    let mut c = Certificate::new(
        "central-quotient",
        "mod(A/ann(z)) is a distinguished abelian subcategory",
        format!("{}, z = {}", a.name(), a.format_element(z)),
    );
    let z2 = c.flag("z_squared_zero", Algebra::is_zero_element(&a.mul(z, z)));
    c.count("dim_az", az.dim());
    c.count("dim_ann", i.dim());
    let inner = certify_quotient_embedding(a, &tag, &i)?;
    c.absorb("embedding", &inner);
    c.cross(
        "z_squared_zero==end_pr_zero",
        z2,
        inner.flag_value("end_pr_zero") == Some(true),
    );

    let (q, _) = quotient_algebra(&i)?;
    c.count("dim_quotient", q.dim());
    c.flag("quotient_symmetric", is_symmetric(&q, opts).is_symmetric());

    let socles = socle_series(a)?;
    let soc2 = socles
        .get(1)
        .unwrap_or_else(|| socles.last().expect("series is nonempty"));
    c.count("dim_soc", socles[0].dim());
    c.count("dim_soc2", soc2.dim());
    let soc2_in_az = c.flag("soc2_in_az", soc2.is_contained_in(&az)?);
    if soc2_in_az {
        let j = jacobson_radical(a)?;
        let j2 = j.product(&j)?;
        let in_j2 = c.flag("ann_in_j2", i.is_contained_in(&j2)?);
        let jq = jacobson_radical(&q)?;
        let jq2 = jq.product(&jq)?;
        let arrows_a = c.count("dim_j_over_j2", j.dim() - j2.dim());
        let arrows_q = c.count("dim_quotient_j_over_j2", jq.dim() - jq2.dim());
        c.flag("quiver_preserved", in_j2 && arrows_a == arrows_q);
    } else {
        c.flag("quiver_preserved", false);
    }
    Ok(c.finish(inner.verdict))
}

/// `I = kG·I(kN)`: embedding iff `p` divides `|N|`, and `r(I) = kG·σ_N`.
pub fn certify_group_quotient(n: &SubgroupHandle, p: u64) -> Result<Certificate> {
    if !n.is_normal() {
        return Err(Error::NotNormal);
    }
    let g = n.parent();
    let kg = group_algebra(g, Field::new(p)?)?;
    let cert = is_symmetric(&kg, SearchOptions::default());
    let tag = assert_selfinjective(&kg, &cert, false)?;
    let i = induced_ideal(&kg, n)?;
    let mut c = Certificate::new(
        "group-quotient",
        "mod(k[G/N]) is a distinguished abelian subcategory of the stable category of kG",
        format!("{} over F_{p}, |N| = {}", g.name(), n.order()),
    );
    c.count("order_g", g.order());
    c.count("order_n", n.order());
    c.count("dim_i", i.dim());
    let arithmetic = c.flag("p_divides_n", (n.order() as u64).is_multiple_of(p));
    let inner = certify_quotient_embedding(&kg, &tag, &i)?;
    c.absorb("embedding", &inner);
    c.cross("embedding==p_divides_n", inner.is_positive(), arithmetic);
    let sigma = ideal_generated(&kg, &[subgroup_sum(&kg, n)?], Side::TwoSided)?;
    c.cross(
        "r(I)==kG*sigma_N",
        i.right_annihilator().space() == sigma.space(),
        true,
    );
    let verdict = if inner.verdict == Verdict::Inconsistent {
        Verdict::Inconsistent
    } else {
        verdict_of(arithmetic)
    };
    Ok(c.finish(verdict))
}

/// `I = I(kZ)·A` for a central `p`-subgroup `Z` of units, when `A` is free over `kZ`.
pub fn certify_central_p_subgroup(
    a: &Algebra,
    tag: &SelfinjectiveTag,
    elements: &[Vec<u32>],
) -> Result<Certificate> {
    tag.check(a)?;
    let f = a.field();
    let p = f.modulus() as u64;
    let n = elements.len();
    if elements.iter().any(|x| x.len() != a.dim()) {
        return Err(Error::DimensionMismatch("group element".into()));
    }
    if !elements.contains(&a.one()) {
        return Err(Error::InvalidParameter("the unit must be listed".into()));
    }
    for x in elements {
        if !a.left_mult(x).is_invertible() {
            return Err(Error::InvalidParameter(format!(
                "{} is not a unit",
                a.format_element(x)
            )));
        }
        if !a.is_central(x) {
            return Err(Error::NotCentral);
        }
    }
    let mut table = vec![vec![0usize; n]; n];
    for (s, x) in elements.iter().enumerate() {
        for (t, y) in elements.iter().enumerate() {
            let xy = a.mul(x, y);
            table[s][t] = elements.iter().position(|e| *e == xy).ok_or_else(|| {
                Error::InvalidParameter("elements are not closed under products".into())
            })?;
        }
    }
    if !crate::group::is_power_of(n, p) {
        return Err(Error::InvalidParameter(format!(
            "{n} elements is not a power of {p}"
        )));
    }
    let z = Group::from_table(table, None)?;
    let kz = group_algebra(&z, f)?;
    let embed = AlgebraHom::new(
        kz.clone(),
        a.clone(),
        FpMatrix::from_columns(f, a.dim(), elements),
    )?;
    let gens: Vec<Vec<u32>> = elements.iter().map(|x| a.sub(x, &a.one())).collect();
    let i = ideal_generated(a, &gens, Side::TwoSided)?;
    if i.is_zero() {
        return Err(Error::Degenerate("trivial group gives I = 0".into()));
    }
    let mut c = Certificate::new(
        "central-p-subgroup",
        "mod(A/I(kZ)A) is a distinguished abelian subcategory",
        format!("{}, |Z| = {n}", a.name()),
    );
    c.count("order_z", n);
    c.count("dim_i", i.dim());
    let free = c.flag(
        "free_over_kz",
        is_projective_over(&kz, &restrict(&embed, &regular_module(a))?)?,
    );
    let inner = certify_quotient_embedding(a, tag, &i)?;
    c.absorb("embedding", &inner);
    let verdict = if free {
        c.cross("free=>embedding", inner.is_positive(), true);
        inner.verdict
    } else {
        Verdict::Inconclusive
    };
    Ok(c.finish(verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{quantum_complete_intersection, truncated_polynomial};
    use crate::duality::{certify_selfinjective, find_frobenius_form};

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    fn tag(a: &Algebra) -> SelfinjectiveTag {
        certify_selfinjective(a, SearchOptions::default()).unwrap()
    }

    #[test]
    fn dual_numbers_positive() {
        let a = truncated_polynomial(f(2), 2).unwrap();
        let j = jacobson_radical(&a).unwrap();
        let c = certify_quotient_embedding(&a, &tag(&a), &j).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        assert!(certify_quotient_embedding(&a, &tag(&a), &Ideal::whole(&a)).is_err());
    }

    #[test]
    fn socle_of_c4_negative() {
        let a = group_algebra(&Group::cyclic(4).unwrap(), f(2)).unwrap();
        let soc = &socle_series(&a).unwrap()[0];
        assert_eq!(soc.dim(), 1);
        let c = certify_quotient_embedding(&a, &tag(&a), soc).unwrap();
        assert_eq!(c.verdict, Verdict::Negative);
        assert_eq!(c.count_value("dim_r"), Some(3));
    }

    #[test]
    fn missing_tag_is_rejected() {
        let a = truncated_polynomial(f(2), 2).unwrap();
        let b = truncated_polynomial(f(2), 3).unwrap();
        let j = jacobson_radical(&a).unwrap();
        assert_eq!(
            certify_quotient_embedding(&a, &tag(&b), &j).unwrap_err(),
            Error::TagMismatch
        );
    }

    #[test]
    fn square_zero_klein() {
        let g =
            Group::direct_product(&Group::cyclic(2).unwrap(), &Group::cyclic(2).unwrap()).unwrap();
        let a = group_algebra(&g, f(2)).unwrap();
        let soc = socle_series(&a).unwrap()[0].clone();
        let c = certify_square_zero(&a, &tag(&a), &soc).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        assert_eq!(c.count_value("dim_i"), Some(3));
        assert!(matches!(
            certify_square_zero(&a, &tag(&a), &Ideal::zero(&a)),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn qci_socle_element() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        let cert = find_frobenius_form(&a, SearchOptions::default());
        let mut z = a.zero();
        z[48] = 1;
        let c = certify_central_quotient(&a, &cert, &z, SearchOptions::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        assert_eq!(c.flag_value("soc2_in_az"), Some(false));
        assert_eq!(c.flag_value("quiver_preserved"), Some(false));
        assert!(matches!(
            certify_central_quotient(&a, &cert, &a.zero(), SearchOptions::default()),
            Err(Error::ImproperIdeal)
        ));
    }

    #[test]
    fn group_catalog_routes_agree() {
        let c4 = Group::cyclic(4).unwrap();
        let c6 = Group::cyclic(6).unwrap();
        let s3 = Group::symmetric3();
        let cases = [
            (c4.subgroup(&[0, 2]).unwrap(), 2, Verdict::Positive),
            (c6.subgroup(&[0, 2, 4]).unwrap(), 2, Verdict::Negative),
            (s3.subgroup(&[0, 1, 2]).unwrap(), 3, Verdict::Positive),
        ];
        for (n, p, want) in cases {
            let c = certify_group_quotient(&n, p).unwrap();
            assert_eq!(c.verdict, want, "{c:?}");
        }
    }

    #[test]
    fn central_subgroup_of_c4() {
        let g = Group::cyclic(4).unwrap();
        let a = group_algebra(&g, f(2)).unwrap();
        let elems = vec![a.basis_element(0), a.basis_element(2)];
        let c = certify_central_p_subgroup(&a, &tag(&a), &elems).unwrap();
        assert_eq!(c.verdict, Verdict::Positive);
        assert_eq!(c.flag_value("free_over_kz"), Some(true));
        assert!(matches!(
            certify_central_p_subgroup(&a, &tag(&a), &[a.one()]),
            Err(Error::Degenerate(_))
        ));
    }
}
