//! Frozen values for the worked examples, computed once by the independent
//! routes noted beside each check.

use distab_core::algebra::{group_algebra, quotient_algebra, Algebra};
use distab_core::certify::{
    certify_central_p_subgroup, certify_quotient_embedding, check_orthogonal_family, Verdict,
};
use distab_core::duality::{
    certify_selfinjective, find_frobenius_form, DualityKind, SearchOptions,
};
use distab_core::gflinalg::{Field, FpMatrix};
use distab_core::group::Group;
use distab_core::ideal::{induced_ideal, jacobson_radical};
use distab_core::module::{
    ext1_dim, quotient_by_ideal, quotient_module, regular_module, stable_hom_dim, submodule,
    trivial_module, AModule,
};

fn d10() -> (Group, Algebra) {
    let g = Group::dihedral(10).unwrap();
    let a = group_algebra(&g, Field::new(5).unwrap()).unwrap();
    (g, a)
}

/// `A e / J^2 A e` for `e = (1 ± s)/2`.
fn uniserial(a: &Algebra, sign: i64) -> AModule {
    let f = a.field();
    let mut e = a.zero();
    e[0] = f.inv(2);
    e[5] = f.reduce(sign * i64::from(f.inv(2)));
    let reg = regular_module(a);
    let ae = submodule(&reg, &reg.span_submodule(&[e])).unwrap();
    let j2 = jacobson_radical(a).unwrap().power(2).unwrap();
    quotient_module(&ae, &ae.ideal_times(&j2)).unwrap()
}

fn sign_module(a: &Algebra) -> AModule {
    let f = a.field();
    // basis element r^i s^e sits at index 5e + i
    let action = (0..a.dim())
        .map(|g| FpMatrix::from_rows(f, &[vec![if g >= 5 { -1 } else { 1 }]]).unwrap())
        .collect();
    AModule::new(a, action, "sgn").unwrap()
}

#[test]
fn dihedral_simples_form_an_orthogonal_family() {
    let (_, a) = d10();
    let k = trivial_module(&a).unwrap();
    let sgn = sign_module(&a);
    let c = check_orthogonal_family(&a, &[k, sgn]).unwrap();
    assert_eq!(c.verdict, Verdict::Positive);
    assert_eq!(c.count_value("ell"), Some(2));
}

#[test]
fn dihedral_uniserials_are_not_orthogonal() {
    // Ext^1 between the two simples is one-dimensional, so each of
    // U_+ and U_- maps stably onto the other's socle
    let (_, a) = d10();
    let (u1, u2) = (uniserial(&a, 1), uniserial(&a, -1));
    assert_eq!((u1.dim(), u2.dim()), (2, 2));
    assert_eq!(stable_hom_dim(&u1, &u1).unwrap(), 1);
    assert_eq!(stable_hom_dim(&u2, &u2).unwrap(), 1);
    assert_eq!(stable_hom_dim(&u1, &u2).unwrap(), 1);
    assert_eq!(stable_hom_dim(&u2, &u1).unwrap(), 1);
    assert_eq!(
        check_orthogonal_family(&a, &[u1, u2]).unwrap().verdict,
        Verdict::Negative
    );
    let k = trivial_module(&a).unwrap();
    assert_eq!(ext1_dim(&k, &sign_module(&a)).unwrap(), 1);
}

#[test]
fn dihedral_top_quotient_is_frobenius_but_not_symmetric() {
    // exhaustive search over all 5^4 functionals of A/J^2
    let (_, a) = d10();
    let j2 = jacobson_radical(&a).unwrap().power(2).unwrap();
    let (q, _) = quotient_algebra(&j2).unwrap();
    assert_eq!(q.dim(), 4);
    let cert = find_frobenius_form(&q, SearchOptions::default());
    assert_eq!(cert.kind, DualityKind::Frobenius);
    let sym = distab_core::duality::is_symmetric(&q, SearchOptions::default());
    assert_eq!(sym.kind, DualityKind::Unknown);
    assert!(sym.evidence.exhaustive);
}

#[test]
fn klein_four_quotient_modules_have_two_dimensional_stable_end() {
    let c2 = Group::cyclic(2).unwrap();
    let g = Group::direct_product(&c2, &c2).unwrap();
    let a = group_algebra(&g, Field::new(2).unwrap()).unwrap();
    let ms: Vec<AModule> = [[0, 1], [0, 2], [0, 3]]
        .iter()
        .map(|h| quotient_by_ideal(&induced_ideal(&a, &g.subgroup(h).unwrap()).unwrap()).unwrap())
        .collect();
    for (s, u) in ms.iter().enumerate() {
        for (t, v) in ms.iter().enumerate() {
            assert_eq!(
                stable_hom_dim(u, v).unwrap(),
                if s == t { 2 } else { 0 },
                "({s}, {t})"
            );
        }
    }
    assert_eq!(
        check_orthogonal_family(&a, &ms).unwrap().verdict,
        Verdict::Negative
    );
}

#[test]
fn central_subgroup_of_klein_four() {
    let c2 = Group::cyclic(2).unwrap();
    let g = Group::direct_product(&c2, &c2).unwrap();
    let a = group_algebra(&g, Field::new(2).unwrap()).unwrap();
    let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
    let c =
        certify_central_p_subgroup(&a, &tag, &[a.basis_element(0), a.basis_element(2)]).unwrap();
    assert_eq!(c.verdict, Verdict::Positive);
    assert_eq!(c.flag_value("free_over_kz"), Some(true));
    assert_eq!(c.count_value("dim_i"), Some(2));
}

#[test]
fn positive_embeddings_pass_the_sampled_hom_pr_checks() {
    let (_, a) = d10();
    let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
    let j2 = jacobson_radical(&a).unwrap().power(2).unwrap();
    let c = certify_quotient_embedding(&a, &tag, &j2).unwrap();
    assert!(c.is_positive());
    assert_eq!(c.flag_value("sampled_hom_pr_zero"), Some(true));
    assert_eq!(c.count_value("dim_end_pr"), Some(0));
}
