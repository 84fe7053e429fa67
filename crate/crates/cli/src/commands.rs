use std::time::Instant;

use distab_core::algebra::{quotient_algebra, Algebra, ValidationLevel};
use distab_core::certify::{
    certify_approximations, certify_central_p_subgroup, certify_central_quotient,
    certify_group_extension_closure, certify_group_quotient, certify_mod_y,
    certify_quotient_embedding, certify_square_zero, check_orthogonal_family,
    enumerate_embedding_ideals, extension_closure_obstruction, Certificate, EnumerationOptions,
};
use distab_core::duality::{
    assert_selfinjective, find_frobenius_form, is_symmetric, DualityCertificate, SearchOptions,
    SelfinjectiveTag,
};
use distab_core::ideal::{jacobson_radical_with_method, radical_series, socle_series};
use rayon::prelude::*;

use crate::report::{Analysis, Report};
use crate::scene::{CertifyDecl, Scene};
use crate::suite::{Suite, SuiteOptions};
use crate::CliError;

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    pub seed: u64,
    /// Caps enumeration work (generator evaluations plus ideal sums).
    pub budget: Option<u64>,
    pub validation: Option<ValidationLevel>,
    /// Record wall-clock time; off by default so reports stay byte-identical.
    pub timing: bool,
    /// Suite criterion whose first comparison is forced to fail.
    pub inject_fault: Option<u8>,
    /// Suite criteria to run; empty means all.
    pub criteria: Vec<u8>,
}

impl RunOptions {
    fn search(&self) -> SearchOptions {
        SearchOptions {
            seed: self.seed,
            ..SearchOptions::default()
        }
    }
}

fn base(command: &str, scene: Option<&Scene>, opts: &RunOptions) -> Report {
    let mut r = Report::new(command, opts.seed);
    if let Some(s) = scene {
        r.input_digest = Some(s.digest.clone());
        r.scene = Some(s.name.clone());
    }
    r
}

fn finish(mut r: Report, start: Instant, opts: &RunOptions) -> Report {
    if opts.timing {
        r.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    r
}

fn core_err(path: &str) -> impl Fn(distab_core::Error) -> CliError + '_ {
    move |e| CliError::Scene {
        path: path.to_string(),
        message: e.to_string(),
    }
}

pub fn analyze(scene: &Scene, opts: &RunOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let a = &scene.algebra;
    let e = core_err("algebra");
    let (j, method) = jacobson_radical_with_method(a).map_err(&e)?;
    let mut radical = vec![a.dim()];
    radical.extend(radical_series(a).map_err(&e)?.iter().map(|i| i.dim()));
    let socle = socle_series(a)
        .map_err(&e)?
        .iter()
        .map(|i| i.dim())
        .collect();
    let mut r = base("analyze", Some(scene), opts);
    r.analysis = Some(Analysis {
        algebra: a.name().to_string(),
        modulus: a.field().modulus(),
        dim: a.dim(),
        commutative: a.is_commutative(),
        center_dim: a.center().dim(),
        radical_method: method,
        radical_series: radical,
        socle_series: socle,
        dim_top: a.dim() - j.dim(),
        frobenius: find_frobenius_form(a, opts.search()),
        symmetric: is_symmetric(a, opts.search()),
        ideals: scene
            .ideals
            .iter()
            .map(|(k, v)| (k.clone(), v.dim()))
            .collect(),
        modules: scene
            .modules
            .iter()
            .map(|(k, v)| (k.clone(), v.dim()))
            .collect(),
    });
    Ok(finish(r, start, opts))
}

struct Tags {
    cert: DualityCertificate,
}

impl Tags {
    fn get(&self, a: &Algebra, assert: bool, path: &str) -> Result<SelfinjectiveTag, CliError> {
        assert_selfinjective(a, &self.cert, assert).map_err(core_err(path))
    }
}

fn certify_one(
    scene: &Scene,
    tags: &Tags,
    decl: &CertifyDecl,
    path: &str,
    opts: &RunOptions,
) -> Result<Certificate, CliError> {
    let a = &scene.algebra;
    let e = core_err(path);
    let p = a.field().modulus() as u64;
    let at = |key: &str| format!("{path}.{key}");
    match decl {
        CertifyDecl::QuotientEmbedding {
            ideal,
            assert_selfinjective,
        } => {
            let i = scene.ideal(ideal, &at("ideal"))?;
            certify_quotient_embedding(a, &tags.get(a, *assert_selfinjective, path)?, i).map_err(e)
        }
        CertifyDecl::SquareZero {
            ideal,
            assert_selfinjective,
        } => {
            let i = scene.ideal(ideal, &at("ideal"))?;
            certify_square_zero(a, &tags.get(a, *assert_selfinjective, path)?, i).map_err(e)
        }
        CertifyDecl::CentralQuotient { element } => {
            let z = scene.element(element, &at("element"))?;
            let cert = is_symmetric(a, opts.search());
            certify_central_quotient(a, &cert, &z, opts.search()).map_err(e)
        }
        CertifyDecl::GroupQuotient { subgroup } => {
            certify_group_quotient(scene.subgroup(subgroup, &at("subgroup"))?, p).map_err(e)
        }
        CertifyDecl::CentralPSubgroup {
            elements,
            assert_selfinjective,
        } => {
            let xs = elements
                .iter()
                .enumerate()
                .map(|(t, x)| scene.element(x, &at(&format!("elements[{t}]"))))
                .collect::<Result<Vec<_>, _>>()?;
            certify_central_p_subgroup(a, &tags.get(a, *assert_selfinjective, path)?, &xs)
                .map_err(e)
        }
        CertifyDecl::ExtensionObstruction {
            ideal,
            assert_selfinjective,
        } => {
            let i = scene.ideal(ideal, &at("ideal"))?;
            let (q, _) = quotient_algebra(i).map_err(&e)?;
            let qc = find_frobenius_form(&q, opts.search());
            extension_closure_obstruction(a, &tags.get(a, *assert_selfinjective, path)?, i, &qc)
                .map_err(e)
        }
        CertifyDecl::GroupExtension { subgroup } => {
            certify_group_extension_closure(scene.subgroup(subgroup, &at("subgroup"))?, p)
                .map_err(e)
        }
        CertifyDecl::ModY {
            module,
            assert_selfinjective,
        } => {
            let y = scene.module(module, &at("module"))?;
            certify_mod_y(
                a,
                &tags.get(a, *assert_selfinjective, path)?,
                y,
                opts.search(),
            )
            .map_err(e)
        }
        CertifyDecl::OrthogonalFamily { modules } => {
            let xs = modules
                .iter()
                .enumerate()
                .map(|(t, m)| scene.module(m, &at(&format!("modules[{t}]"))).cloned())
                .collect::<Result<Vec<_>, _>>()?;
            check_orthogonal_family(a, &xs).map_err(e)
        }
        CertifyDecl::Approximations { ideal, module } => {
            let i = scene.ideal(ideal, &at("ideal"))?;
            let u = scene.module(module, &at("module"))?;
            certify_approximations(a, i, u).map_err(e)
        }
    }
}

/// Run every `[[certify]]` entry; entries are independent and run in parallel.
pub fn certify(scene: &Scene, opts: &RunOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    if scene.certify.is_empty() {
        return Err(CliError::Scene {
            path: "certify".into(),
            message: "the scene declares no [[certify]] entries".into(),
        });
    }
    let tags = Tags {
        cert: find_frobenius_form(&scene.algebra, opts.search()),
    };
    let certificates = scene
        .certify
        .par_iter()
        .enumerate()
        .map(|(t, d)| certify_one(scene, &tags, d, &format!("certify[{t}]"), opts))
        .collect::<Result<Vec<_>, _>>()?;
    let mut r = base("certify", Some(scene), opts);
    r.certificates = certificates;
    Ok(finish(r, start, opts))
}

pub fn enumerate(scene: &Scene, opts: &RunOptions) -> Result<Report, CliError> {
    let start = Instant::now();
    let a = &scene.algebra;
    let cert = find_frobenius_form(a, opts.search());
    let mut eo = EnumerationOptions {
        budget: opts.budget,
        seed: opts.seed,
        ..EnumerationOptions::default()
    };
    if let Some(s) = scene.enumerate.samples {
        eo.samples = s;
    }
    let report = enumerate_embedding_ideals(a, &cert, eo).map_err(core_err("algebra"))?;
    let mut r = base("enumerate", Some(scene), opts);
    r.enumeration = Some(report);
    Ok(finish(r, start, opts))
}

pub fn verify_suite(opts: &RunOptions) -> Report {
    let start = Instant::now();
    let suite = Suite::new(SuiteOptions {
        seed: opts.seed,
        fault: opts.inject_fault,
        ..SuiteOptions::default()
    });
    let mut r = base("verify-suite", None, opts);
    r.suite = Some(if opts.criteria.is_empty() {
        suite.run_all()
    } else {
        suite.run_selected(&opts.criteria)
    });
    finish(r, start, opts)
}
