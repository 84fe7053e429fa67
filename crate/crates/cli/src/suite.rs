//! The regression suite: the worked examples and structural invariants the
//! library must reproduce exactly, numbered as in the acceptance criteria.

use std::collections::BTreeSet;
use std::fmt::{Debug, Display};
use std::sync::OnceLock;

use distab_core::algebra::{
    group_algebra, quantum_complete_intersection, quotient_algebra, truncated_polynomial,
    upper_triangular, Algebra,
};
use distab_core::certify::{
    certify_group_extension_closure, certify_group_quotient, certify_mod_y,
    certify_quotient_embedding, enumerate_embedding_ideals, extension_closure_obstruction,
    EnumerationOptions, EnumerationReport, Verdict,
};
use distab_core::duality::{
    certify_selfinjective, find_frobenius_form, is_symmetric, SearchOptions,
};
use distab_core::gflinalg::{decode_vector, Field, FpMatrix, Subspace};
use distab_core::group::Group;
use distab_core::ideal::{
    augmentation_ideal, ideal_generated, induced_ideal, jacobson_radical, radical_by_exhaustion,
    radical_series, socle_series, Ideal, Side,
};
use distab_core::module::{
    ext1_dim, ext1_dim_with, hom_pr, hom_pr_with, hom_space, hom_space_with, ideal_as_module,
    intertwiner_space, is_isomorphic, quotient_by_ideal, quotient_module, regular_module,
    stable_hom_dim, submodule, syzygy, trivial_module, AModule, Cover, IsoOutcome,
};
use distab_core::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub const CRITERIA: [&str; 11] = [
    "qci example: 9-dimensional central quotient",
    "group criterion catalog",
    "Ext oracle on positive embeddings",
    "extension-closure obstruction",
    "H1 cross-check",
    "Nakayama duality on enumerated ideals",
    "equivalence integrity",
    "enumeration count against the subspace oracle",
    "kD_10 over F_5",
    "syzygy periodicity of k[C_4/C_2]",
    "property suites",
];

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub seed: u64,
    /// Criterion whose first comparison is forced to fail.
    pub fault: Option<u8>,
    pub linalg_cases: usize,
    pub cover_pairs: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            fault: None,
            linalg_cases: 10_000,
            cover_pairs: 100,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteCheck {
    pub criterion: u8,
    pub name: String,
    pub passed: bool,
    /// Failures first, then notes.
    pub details: Vec<String>,
}

struct Checker {
    fault: bool,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Checker {
    fn eq<T: PartialEq + Debug>(&mut self, what: impl Display, got: T, want: T) -> bool {
        let injected = std::mem::take(&mut self.fault);
        let ok = got == want && !injected;
        if !ok {
            let tail = if injected { " (injected fault)" } else { "" };
            self.failures
                .push(format!("{what}: got {got:?}, expected {want:?}{tail}"));
        }
        ok
    }

    fn ok(&mut self, what: impl Display, cond: bool) -> bool {
        self.eq(what, cond, true)
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

struct Survey {
    name: String,
    algebra: Algebra,
    report: EnumerationReport,
}

pub struct Suite {
    opts: SuiteOptions,
    surveys: OnceLock<std::result::Result<Vec<Survey>, distab_core::Error>>,
}

fn field(p: u64) -> Field {
    Field::new(p).expect("suite moduli are prime")
}

fn klein() -> Group {
    let c2 = Group::cyclic(2).expect("C_2");
    Group::direct_product(&c2, &c2).expect("C_2 x C_2")
}

fn kg(g: &Group, p: u64) -> Result<Algebra> {
    group_algebra(g, field(p))
}

fn search() -> SearchOptions {
    SearchOptions::default()
}

impl Suite {
    pub fn new(opts: SuiteOptions) -> Self {
        Suite {
            opts,
            surveys: OnceLock::new(),
        }
    }

    pub fn run_all(&self) -> Vec<SuiteCheck> {
        (1..=CRITERIA.len() as u8)
            .into_par_iter()
            .map(|n| self.run(n))
            .collect()
    }

    pub fn run_selected(&self, criteria: &[u8]) -> Vec<SuiteCheck> {
        criteria.par_iter().map(|&n| self.run(n)).collect()
    }

    pub fn run(&self, n: u8) -> SuiteCheck {
        let mut c = Checker {
            fault: self.opts.fault == Some(n),
            failures: Vec::new(),
            notes: Vec::new(),
        };
        let result = match n {
            1 => self.qci_example(&mut c),
            2 => self.group_catalog(&mut c),
            3 => self.ext_oracle(&mut c),
            4 => self.extension_obstruction(&mut c),
            5 => self.h1_cross_check(&mut c),
            6 => self.nakayama_duality(&mut c),
            7 => self.equivalence_integrity(&mut c),
            8 => self.enumeration_count(&mut c),
            9 => self.dihedral_example(&mut c),
            10 => self.syzygy_periodicity(&mut c),
            11 => self.property_suites(&mut c),
            _ => {
                c.failures.push(format!("no criterion {n}"));
                Ok(())
            }
        };
        if let Err(e) = result {
            c.failures.push(format!("error: {e}"));
        }
        // a fault aimed at a criterion that made no comparison still has to show
        if c.fault {
            c.failures.push("injected fault".into());
        }
        let passed = c.failures.is_empty();
        let mut details = c.failures;
        details.extend(c.notes);
        SuiteCheck {
            criterion: n,
            name: CRITERIA
                .get(usize::from(n).wrapping_sub(1))
                .unwrap_or(&"unknown")
                .to_string(),
            passed,
            details,
        }
    }

    fn surveys(&self) -> Result<&[Survey]> {
        self.surveys
            .get_or_init(|| {
                let algebras: Vec<(&str, Algebra, usize)> = vec![
                    ("F_2[C_2xC_2]", kg(&klein(), 2)?, 0),
                    ("F_2[C_4]", kg(&Group::cyclic(4)?, 2)?, 0),
                    ("F_2[x]/(x^4)", truncated_polynomial(field(2), 4)?, 0),
                    ("F_2[C_2]", kg(&Group::cyclic(2)?, 2)?, 0),
                    ("F_2[C_6]", kg(&Group::cyclic(6)?, 2)?, 0),
                    ("F_2[S_3]", kg(&Group::symmetric3(), 2)?, 0),
                    ("F_3[S_3]", kg(&Group::symmetric3(), 3)?, 0),
                    ("F_2[Q_8]", kg(&Group::quaternion8(), 2)?, 0),
                    ("F_5[D_10]", kg(&Group::dihedral(10)?, 5)?, 2048),
                    (
                        "qci(7,-1,3,3)",
                        quantum_complete_intersection(field(7), -1, 3, 3)?,
                        2048,
                    ),
                    (
                        "qci(7,-1,7,7)",
                        quantum_complete_intersection(field(7), -1, 7, 7)?,
                        64,
                    ),
                ];
                algebras
                    .into_par_iter()
                    .map(|(name, a, samples)| {
                        let cert = find_frobenius_form(&a, search());
                        let opts = EnumerationOptions {
                            seed: self.opts.seed,
                            samples: samples.max(1),
                            ..EnumerationOptions::default()
                        };
                        let report = enumerate_embedding_ideals(&a, &cert, opts)?;
                        Ok(Survey {
                            name: name.to_string(),
                            algebra: a,
                            report,
                        })
                    })
                    .collect()
            })
            .as_ref()
            .map(|v| v.as_slice())
            .map_err(Clone::clone)
    }

    fn qci_example(&self, c: &mut Checker) -> Result<()> {
        let a = quantum_complete_intersection(field(7), -1, 7, 7)?;
        c.eq("dim A", a.dim(), 49);
        let e = |l: &str| a.label_index(l).map(|i| a.basis_element(i));
        let z = e("x^4*y^4")?;
        c.ok("z is central", a.is_central(&z));
        c.ok("z^2 = 0", Algebra::is_zero_element(&a.mul(&z, &z)));
        let soc = socle_series(&a)?;
        c.eq("soc(A)", soc[0].basis(), vec![e("x^6*y^6")?]);
        let soc2 = Subspace::from_vectors(
            a.field(),
            a.dim(),
            &[e("x^5*y^6")?, e("x^6*y^5")?, e("x^6*y^6")?],
        );
        c.eq("dim soc^2(A)", soc[1].dim(), 3);
        c.ok("soc^2(A) basis", soc[1].space() == &soc2);
        let az = ideal_generated(&a, std::slice::from_ref(&z), Side::Left)?;
        c.ok("soc^2(A) in Az", az.space().includes(soc[1].space()));
        let ann = ideal_generated(&a, &[z], Side::TwoSided)?.right_annihilator();
        c.eq("dim ann(z)", ann.dim(), 40);
        let (q, _) = quotient_algebra(&ann)?;
        c.eq("dim A/ann(z)", q.dim(), 9);
        c.ok(
            "A/ann(z) symmetric",
            is_symmetric(&q, search()).is_symmetric(),
        );
        let model = quantum_complete_intersection(field(7), -1, 3, 3)?;
        c.ok("A/ann(z) equals qci(7,-1,3,3)", q.same_as(&model));
        let tag = certify_selfinjective(&a, search())?;
        let cert = certify_quotient_embedding(&a, &tag, &ann)?;
        c.eq(
            "quotient-embedding verdict",
            cert.verdict,
            Verdict::Positive,
        );
        Ok(())
    }

    fn group_catalog(&self, c: &mut Checker) -> Result<()> {
        let c4 = Group::cyclic(4)?;
        let c6 = Group::cyclic(6)?;
        let s3 = Group::symmetric3();
        let q8 = Group::quaternion8();
        let v4 = klein();
        let catalog = [
            ("(C_4, C_2, 2)", c4.subgroup(&[0, 2])?, 2, true),
            ("(C_2xC_2, C_2, 2)", v4.subgroup(&[0, 2])?, 2, true),
            ("(S_3, C_3, 3)", s3.subgroup(&[0, 1, 2])?, 3, true),
            ("(Q_8, Z(Q_8), 2)", q8.center(), 2, true),
            ("(C_6, C_3, 2)", c6.subgroup(&[0, 2, 4])?, 2, false),
            ("(S_3, C_3, 2)", s3.subgroup(&[0, 1, 2])?, 2, false),
        ];
        for (name, n, p, expected) in catalog {
            let cert = certify_group_quotient(&n, p)?;
            let arithmetic = (n.order() as u64).is_multiple_of(p);
            c.eq(format!("{name} p | |N|"), arithmetic, expected);
            c.eq(
                format!("{name} embedding"),
                cert.flag_value("embedding.r_in_i"),
                Some(expected),
            );
            c.eq(
                format!("{name} verdict"),
                cert.verdict,
                if expected {
                    Verdict::Positive
                } else {
                    Verdict::Negative
                },
            );
            let sigma = cert
                .cross_checks
                .iter()
                .find(|x| x.name == "r(I)==kG*sigma_N");
            c.ok(
                format!("{name} r(I) = kG*sigma_N"),
                sigma.is_some_and(|x| x.equal),
            );
        }
        Ok(())
    }

    fn ext_oracle(&self, c: &mut Checker) -> Result<()> {
        let mut cases: Vec<(String, Algebra, Ideal)> = Vec::new();
        let qci = quantum_complete_intersection(field(7), -1, 7, 7)?;
        let z = qci.basis_element(qci.label_index("x^4*y^4")?);
        let ann = ideal_generated(&qci, &[z], Side::TwoSided)?.right_annihilator();
        cases.push(("qci ann(z)".into(), qci, ann));
        let d10 = kg(&Group::dihedral(10)?, 5)?;
        let j2 = jacobson_radical(&d10)?.power(2)?;
        cases.push(("kD_10 J^2".into(), d10, j2));
        let c4 = Group::cyclic(4)?;
        let s3 = Group::symmetric3();
        let v4 = klein();
        let q8 = Group::quaternion8();
        for (name, g, n, p) in [
            ("F_2[C_4] N=C_2", &c4, c4.subgroup(&[0, 2])?, 2),
            ("F_2[C_2xC_2] N=C_2", &v4, v4.subgroup(&[0, 2])?, 2),
            ("F_3[S_3] N=C_3", &s3, s3.subgroup(&[0, 1, 2])?, 3),
            ("F_2[Q_8] N=Z", &q8, q8.center(), 2),
        ] {
            let a = kg(g, p)?;
            let i = induced_ideal(&a, &n)?;
            cases.push((name.into(), a, i));
        }
        let x4 = truncated_polynomial(field(2), 4)?;
        let j2 = jacobson_radical(&x4)?.power(2)?;
        cases.push(("F_2[x]/(x^4) J^2".into(), x4, j2));

        let results = cases
            .par_iter()
            .map(|(name, a, i)| {
                let tag = certify_selfinjective(a, search())?;
                let positive = certify_quotient_embedding(a, &tag, i)?.is_positive();
                let q = quotient_by_ideal(i)?;
                let im = ideal_as_module(i)?;
                let ext = ext1_dim(&q, &q)?;
                let hom = hom_space(&im, &q)?.dim();
                let pr = hom_pr(&im, &q)?.1.dim();
                Ok((name.clone(), positive, ext, hom, pr))
            })
            .collect::<Result<Vec<_>>>()?;
        for (name, positive, ext, hom, pr) in results {
            c.ok(format!("{name}: positive embedding"), positive);
            c.eq(
                format!("{name}: Ext^1(A/I, A/I) = dim Hom(I, A/I)"),
                ext,
                hom,
            );
            c.eq(format!("{name}: hom_pr(I, A/I)"), pr, 0);
            c.note(format!("{name}: Ext^1 = {ext}"));
        }
        Ok(())
    }

    fn extension_obstruction(&self, c: &mut Checker) -> Result<()> {
        let c4 = Group::cyclic(4)?;
        let a = kg(&c4, 2)?;
        let tag = certify_selfinjective(&a, search())?;
        let n = c4.subgroup(&[0, 2])?;
        let i = induced_ideal(&a, &n)?;
        let (q, _) = quotient_algebra(&i)?;
        let cert = extension_closure_obstruction(&a, &tag, &i, &find_frobenius_form(&q, search()))?;
        c.eq(
            "C_4/C_2 obstruction verdict",
            cert.verdict,
            Verdict::Positive,
        );
        let ext = cert.count_value("ext1_quotient").unwrap_or(0);
        c.ok("C_4/C_2 Ext^1 positive", ext > 0);
        c.note(format!("C_4/C_2: Ext^1(A/I, A/I) = {ext}"));
        let routes = certify_group_extension_closure(&n, 2)?;
        c.eq("C_4/C_2 group routes", routes.verdict, Verdict::Positive);

        let s3 = Group::symmetric3();
        let s3c2 = Group::direct_product(&s3, &Group::cyclic(2)?)?;
        for (name, n) in [
            ("S_3", s3.whole()),
            ("S_3 in S_3xC_2", s3c2.subgroup(&[0, 2, 4, 6, 8, 10])?),
        ] {
            let cert = certify_group_extension_closure(&n, 3)?;
            for route in ["route_o_p_proper", "route_p_rank", "route_hom"] {
                c.eq(
                    format!("{name} p=3 {route}"),
                    cert.flag_value(route),
                    Some(false),
                );
            }
            c.ok(format!("{name} p=3 routes agree"), cert.is_consistent());
        }
        Ok(())
    }

    fn h1_cross_check(&self, c: &mut Checker) -> Result<()> {
        // p-rank of the abelianisation, frozen from the group-theoretic route
        let cases = [
            ("C_2", Group::cyclic(2)?, 2, 1),
            ("C_4", Group::cyclic(4)?, 2, 1),
            ("C_2xC_2", klein(), 2, 2),
            ("S_3", Group::symmetric3(), 2, 1),
            ("S_3", Group::symmetric3(), 3, 0),
            ("Q_8", Group::quaternion8(), 2, 2),
        ];
        for (name, g, p, frozen) in cases {
            let a = kg(&g, p)?;
            let aug = ideal_as_module(&augmentation_ideal(&a)?)?;
            let hom = hom_space(&aug, &trivial_module(&a)?)?.dim();
            let rank = g.p_rank_abelianization(p);
            c.eq(format!("{name} p={p}: Hom(I(kN), k) = p-rank"), hom, rank);
            c.eq(format!("{name} p={p}: p-rank"), rank, frozen);
        }
        Ok(())
    }

    fn nakayama_duality(&self, c: &mut Checker) -> Result<()> {
        let surveys = self.surveys()?;
        for s in surveys.iter().take(3) {
            c.ok(
                format!("{} enumeration exhaustive", s.name),
                s.report.exhaustive,
            );
            let d = s.algebra.dim();
            let mut violations = 0;
            for r in &s.report.records {
                let i = &r.ideal;
                let ri = i.right_annihilator();
                let li = i.left_annihilator();
                violations += usize::from(ri.left_annihilator().space() != i.space());
                violations += usize::from(li.right_annihilator().space() != i.space());
                violations += usize::from(i.dim() + ri.dim() != d);
                violations += usize::from(ri.space() != li.space());
            }
            c.eq(format!("{} duality violations", s.name), violations, 0);
            c.note(format!("{}: {} ideals", s.name, s.report.records.len()));
        }
        Ok(())
    }

    fn equivalence_integrity(&self, c: &mut Checker) -> Result<()> {
        for s in self.surveys()? {
            let disagreements = s
                .report
                .records
                .iter()
                .filter(|r| r.conditions.windows(2).any(|w| w[0] != w[1]) || !r.consistent)
                .count();
            c.eq(
                format!("{} condition disagreements", s.name),
                disagreements,
                0,
            );
            c.eq(
                format!("{} inconsistent certificates", s.name),
                s.report.inconsistent,
                0,
            );
            c.note(format!(
                "{}: {} ideals ({}), {} positive",
                s.name,
                s.report.records.len(),
                if s.report.exhaustive {
                    "exhaustive"
                } else {
                    "sampled"
                },
                s.report.positives
            ));
        }
        Ok(())
    }

    fn enumeration_count(&self, c: &mut Checker) -> Result<()> {
        let a = kg(&klein(), 2)?;
        let oracle = subspace_oracle(&a);
        c.eq(
            "positive ideals by the subspace oracle",
            oracle.positives,
            4,
        );
        let survey = &self.surveys()?[0];
        c.eq(
            "positive ideals by enumeration",
            survey.report.positives,
            oracle.positives,
        );
        c.eq(
            "two-sided ideals by enumeration",
            survey.report.records.len(),
            oracle.ideals,
        );
        c.eq(
            "positives below half dimension",
            survey.report.half_dim_violations,
            0,
        );
        let min = survey
            .report
            .records
            .iter()
            .filter(|r| r.positive == Some(true))
            .map(|r| r.dim)
            .min();
        c.ok(
            "every positive has dim I >= dim A/2",
            min.is_some_and(|m| 2 * m >= a.dim()),
        );
        Ok(())
    }

    fn dihedral_example(&self, c: &mut Checker) -> Result<()> {
        let g = Group::dihedral(10)?;
        let a = kg(&g, 5)?;
        let mut dims = vec![a.dim()];
        dims.extend(radical_series(&a)?.iter().map(|i| i.dim()));
        c.eq("radical series", dims, vec![10, 8, 6, 4, 2, 0]);
        let j = jacobson_radical(&a)?;
        c.eq("dim A/J", a.dim() - j.dim(), 2);
        let j2 = j.power(2)?;
        let soc = socle_series(&a)?;
        c.ok("soc^2(A) in J^2", soc[1].is_contained_in(&j2)?);
        let tag = certify_selfinjective(&a, search())?;
        c.eq(
            "embedding for J^2",
            certify_quotient_embedding(&a, &tag, &j2)?.verdict,
            Verdict::Positive,
        );

        // e = (1 + s)/2 is the idempotent for the trivial character of <s>
        let f = a.field();
        let half = f.inv(2);
        let mut e = a.zero();
        e[g.identity()] = half;
        e[5] = half;
        let reg = regular_module(&a);
        let ae = submodule(&reg, &reg.span_submodule(&[e]))?;
        let u = quotient_module(&ae, &ae.ideal_times(&j2))?;
        c.eq("dim U", u.dim(), 2);
        c.eq("dim J U", u.ideal_times(&j).dim(), 1);
        c.eq("stable End(U)", stable_hom_dim(&u, &u)?, 1);
        let cert = certify_mod_y(&a, &tag, &u, search())?;
        c.eq("mod_Y verdict for U", cert.verdict, Verdict::Positive);
        c.eq("dim End(U)", cert.count_value("dim_end"), Some(1));
        Ok(())
    }

    fn syzygy_periodicity(&self, c: &mut Checker) -> Result<()> {
        let p = Group::cyclic(4)?;
        let a = kg(&p, 2)?;
        let z = p.subgroup(&[0, 2])?;
        let u = quotient_by_ideal(&induced_ideal(&a, &z)?)?;
        let om = syzygy(&u);
        c.eq("dim k[P/Z]", u.dim(), 2);
        c.eq("dim syzygy", om.dim(), 2);
        match is_isomorphic(&om, &u, self.opts.seed)? {
            IsoOutcome::Isomorphic(h) => {
                c.ok("intertwiner is invertible", h.matrix().is_invertible());
                let m = h.matrix();
                let commutes = h
                    .source()
                    .action()
                    .iter()
                    .zip(h.target().action())
                    .all(|(s, t)| m.mul(s) == t.mul(m));
                c.ok("intertwiner commutes with the action", commutes);
            }
            other => {
                c.eq(
                    "syzygy(k[P/Z]) isomorphic to k[P/Z]",
                    other.decided(),
                    Some(true),
                );
            }
        }
        Ok(())
    }

    fn property_suites(&self, c: &mut Checker) -> Result<()> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.opts.seed);
        let (rn, ml) = linalg_properties(&mut rng, self.opts.linalg_cases);
        c.eq("rank-nullity failures", rn, 0);
        c.eq("modular law failures", ml, 0);

        let (pairs, cover_failures) = cover_independence()?;
        c.ok(
            format!("{pairs} module pairs >= {}", self.opts.cover_pairs),
            pairs >= self.opts.cover_pairs,
        );
        c.eq("cover-independence failures", cover_failures, 0);

        let mut algebras: Vec<Algebra> = module_algebras()?;
        let surveys = self.surveys()?;
        algebras.extend(surveys.iter().map(|s| s.algebra.clone()));
        algebras.push(kg(&Group::dihedral(10)?, 5)?);
        let mut contract = 0;
        for a in &algebras {
            contract += usize::from(!radical_contract_holds(a)?);
        }
        c.eq(
            format!("radical contract failures over {} algebras", algebras.len()),
            contract,
            0,
        );

        let monotone: usize = surveys
            .iter()
            .map(|s| s.report.monotonicity_violations)
            .sum();
        c.eq("monotonicity violations", monotone, 0);
        c.note(format!(
            "{} linear algebra cases, {pairs} module pairs, {} algebras",
            self.opts.linalg_cases,
            algebras.len()
        ));
        Ok(())
    }
}

struct OracleCount {
    ideals: usize,
    positives: usize,
}

/// Every subspace of `A`, tested by brute force for two-sidedness and `r(I) ⊆ I`.
fn subspace_oracle(a: &Algebra) -> OracleCount {
    let f = a.field();
    let p = f.modulus() as u64;
    let d = a.dim();
    let elements: Vec<Vec<u32>> = (0..p.pow(d as u32))
        .map(|c| decode_vector(c, p, d))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = OracleCount {
        ideals: 0,
        positives: 0,
    };
    for code in 0..p.pow((d * d) as u32) {
        let flat = decode_vector(code, p, d * d);
        let rows: Vec<Vec<u32>> = flat.chunks(d).map(<[u32]>::to_vec).collect();
        let s = Subspace::from_vectors(f, d, &rows);
        if !seen.insert(s.basis_vectors()) {
            continue;
        }
        let members: Vec<&Vec<u32>> = elements.iter().filter(|x| s.contains_vector(x)).collect();
        let closed = members.iter().all(|x| {
            elements
                .iter()
                .all(|y| s.contains_vector(&a.mul(x, y)) && s.contains_vector(&a.mul(y, x)))
        });
        if !closed {
            continue;
        }
        out.ideals += 1;
        if s.is_zero() || s.contains_vector(&a.one()) {
            continue;
        }
        let r_in_i = elements
            .iter()
            .filter(|y| {
                members
                    .iter()
                    .all(|x| Algebra::is_zero_element(&a.mul(x, y)))
            })
            .all(|y| s.contains_vector(y));
        out.positives += usize::from(r_in_i);
    }
    out
}

fn random_matrix(rng: &mut ChaCha8Rng, f: Field, rows: usize, cols: usize) -> FpMatrix {
    let p = f.modulus();
    // sparse-ish entries make rank deficiency common
    let data = (0..rows * cols)
        .map(|_| {
            if rng.gen_bool(0.4) {
                0
            } else {
                rng.gen_range(0..p)
            }
        })
        .collect();
    FpMatrix::from_vec(f, rows, cols, data)
}

fn linalg_properties(rng: &mut ChaCha8Rng, cases: usize) -> (usize, usize) {
    let primes = [2u64, 3, 5, 7, 11, 65521];
    let mut rank_nullity = 0;
    let mut modular = 0;
    for _ in 0..cases {
        let f = field(primes[rng.gen_range(0..primes.len())]);
        let (r, k) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let m = random_matrix(rng, f, r, k);
        let rank = m.rank();
        let ok = rank + m.kernel().dim() == k
            && rank == m.transpose().rank()
            && m.kernel().image(&m).is_zero();
        rank_nullity += usize::from(!ok);

        let n = rng.gen_range(1..=6);
        let sub = |rng: &mut ChaCha8Rng| {
            let rows = rng.gen_range(0..=n);
            Subspace::from_matrix(&random_matrix(rng, f, rows, n))
        };
        let a = sub(rng);
        let b = sub(rng);
        let c = a.sum(&sub(rng)).expect("same ambient");
        let lhs = a
            .sum(&b.intersect(&c).expect("same ambient"))
            .expect("same ambient");
        let rhs = a
            .sum(&b)
            .and_then(|ab| ab.intersect(&c))
            .expect("same ambient");
        modular += usize::from(lhs != rhs);
    }
    (rank_nullity, modular)
}

fn module_algebras() -> Result<Vec<Algebra>> {
    Ok(vec![
        kg(&Group::cyclic(2)?, 2)?,
        kg(&Group::cyclic(4)?, 2)?,
        kg(&klein(), 2)?,
        kg(&Group::cyclic(3)?, 3)?,
        kg(&Group::symmetric3(), 2)?,
        kg(&Group::symmetric3(), 3)?,
        truncated_polynomial(field(3), 3)?,
        upper_triangular(field(3), 2)?,
        quantum_complete_intersection(field(3), 2, 2, 2)?,
    ])
}

fn small_modules(a: &Algebra) -> Result<Vec<AModule>> {
    let mut out = vec![regular_module(a)];
    let j = jacobson_radical(a)?;
    let mut power = j.clone();
    while !power.is_zero() {
        out.push(quotient_by_ideal(&power)?);
        out.push(ideal_as_module(&power)?);
        power = power.product(&j)?;
    }
    if a.group().is_some() {
        out.push(trivial_module(a)?);
    }
    if !j.is_zero() {
        out.push(syzygy(&quotient_by_ideal(&j)?));
    }
    Ok(out)
}

/// Hom, Hom^pr and Ext^1 from a minimal cover and from the full-basis cover.
fn cover_independence() -> Result<(usize, usize)> {
    let mut jobs = Vec::new();
    for a in module_algebras()? {
        let ms = small_modules(&a)?;
        for u in &ms {
            for v in &ms {
                jobs.push((u.clone(), v.clone()));
            }
        }
    }
    let failures: Vec<bool> = jobs
        .par_iter()
        .map(|(u, v)| -> Result<bool> {
            let small = hom_space_with(u, v, Cover::Minimal)?;
            let full = hom_space_with(u, v, Cover::FullBasis)?;
            let naive = intertwiner_space(u, v)?.dim();
            let pr_small = hom_pr_with(&small, Cover::Minimal).dim();
            let pr_full = hom_pr_with(&full, Cover::FullBasis).dim();
            let ext_small = ext1_dim_with(u, v, Cover::Minimal)?;
            let ext_full = ext1_dim_with(u, v, Cover::FullBasis)?;
            Ok(small.dim() != full.dim()
                || small.dim() != naive
                || pr_small != pr_full
                || ext_small != ext_full)
        })
        .collect::<Result<_>>()?;
    Ok((jobs.len(), failures.into_iter().filter(|&x| x).count()))
}

/// `J` nilpotent, `A/J` radical-free, and agreement with brute force when feasible.
fn radical_contract_holds(a: &Algebra) -> Result<bool> {
    let j = jacobson_radical(a)?;
    let mut ok = j.is_nilpotent();
    if !j.is_zero() {
        let (q, _) = quotient_algebra(&j)?;
        ok &= jacobson_radical(&q)?.is_zero();
    }
    if let Some(e) = radical_by_exhaustion(a) {
        ok &= e.space() == j.space();
    }
    Ok(ok)
}
