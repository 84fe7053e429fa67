//! Frobenius and symmetrising forms, and selfinjectivity tags.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::gflinalg::{decode_vector, FpMatrix, Subspace};

/// Exhaustive search runs when the search space has at most this many points.
pub const EXHAUSTIVE_LIMIT: u64 = 1 << 20;
pub const DEFAULT_RANDOM_TRIALS: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityKind {
    Frobenius,
    Symmetric,
    AssertedSelfinjective,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStrategy {
    Candidate,
    Exhaustive,
    Random,
    Override,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchEvidence {
    /// Branch that produced the verdict (for `unknown`: the last one tried).
    pub strategy: SearchStrategy,
    pub trials: u64,
    pub seed: u64,
    /// Whether the exhaustive branch ran to completion or produced the hit.
    pub exhaustive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityCertificate {
    pub kind: DualityKind,
    pub form: Option<Vec<u32>>,
    pub evidence: SearchEvidence,
    #[serde(skip)]
    fingerprint: u64,
}

impl DualityCertificate {
    pub fn is_frobenius(&self) -> bool {
        matches!(self.kind, DualityKind::Frobenius | DualityKind::Symmetric)
    }
    pub fn is_symmetric(&self) -> bool {
        self.kind == DualityKind::Symmetric
    }
    /// `unknown` after an exhaustive search is a disproof.
    pub fn is_disproof(&self) -> bool {
        self.kind == DualityKind::Unknown && self.evidence.exhaustive
    }
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    pub random_trials: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            seed: 0,
            random_trials: DEFAULT_RANDOM_TRIALS,
        }
    }
}

/// `P(λ)_ij = λ(e_i e_j)`.
pub fn pairing_matrix(a: &Algebra, form: &[u32]) -> FpMatrix {
    let d = a.dim();
    let f = a.field();
    let mut m = FpMatrix::zeros(f, d, d);
    for i in 0..d {
        for j in 0..d {
            let v = a
                .basis_product(i, j)
                .iter()
                .fold(0, |acc, &(k, c)| f.add(acc, f.mul(c, form[k])));
            m.set(i, j, v);
        }
    }
    m
}

pub fn is_frobenius_form(a: &Algebra, form: &[u32]) -> bool {
    form.len() == a.dim() && pairing_matrix(a, form).is_invertible()
}

/// `λ(xy) = λ(yx)` on all basis pairs.
pub fn is_trace_like(a: &Algebra, form: &[u32]) -> bool {
    let p = pairing_matrix(a, form);
    p == p.transpose()
}

pub fn is_symmetrising_form(a: &Algebra, form: &[u32]) -> bool {
    is_trace_like(a, form) && is_frobenius_form(a, form)
}

fn certificate(a: &Algebra, form: Vec<u32>, evidence: SearchEvidence) -> DualityCertificate {
    let pm = pairing_matrix(a, &form);
    assert!(
        pm.is_invertible(),
        "accepted form must have invertible pairing"
    );
    let kind = if pm == pm.transpose() {
        DualityKind::Symmetric
    } else {
        DualityKind::Frobenius
    };
    DualityCertificate {
        kind,
        form: Some(form),
        evidence,
        fingerprint: a.fingerprint(),
    }
}

/// Search for a Frobenius form in `space` (candidates, then exhaustive, then random).
fn search(a: &Algebra, space: &Subspace, opts: SearchOptions) -> DualityCertificate {
    let p = a.field().modulus() as u64;
    let ev = |strategy, trials, exhaustive| SearchEvidence {
        strategy,
        trials,
        seed: opts.seed,
        exhaustive,
    };
    for (t, c) in a.candidate_forms().iter().enumerate() {
        if space.contains_vector(c) && is_frobenius_form(a, c) {
            return certificate(
                a,
                c.clone(),
                ev(SearchStrategy::Candidate, t as u64 + 1, false),
            );
        }
    }
    let r = space.dim();
    let unknown = |evidence| DualityCertificate {
        kind: DualityKind::Unknown,
        form: None,
        evidence,
        fingerprint: a.fingerprint(),
    };
    if r == 0 {
        return unknown(ev(SearchStrategy::Exhaustive, 0, true));
    }
    if let Some(total) = p.checked_pow(r as u32).filter(|&t| t <= EXHAUSTIVE_LIMIT) {
        let hit = (1..total).into_par_iter().find_first(|&code| {
            let form = space.combine(&decode_vector(code, p, r));
            is_frobenius_form(a, &form)
        });
        return match hit {
            Some(code) => certificate(
                a,
                space.combine(&decode_vector(code, p, r)),
                ev(SearchStrategy::Exhaustive, code, true),
            ),
            None => unknown(ev(SearchStrategy::Exhaustive, total - 1, true)),
        };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let trials: Vec<Vec<u32>> = (0..opts.random_trials)
        .map(|_| (0..r).map(|_| rng.gen_range(0..p as u32)).collect())
        .collect();
    let hit = trials
        .par_iter()
        .position_first(|c| is_frobenius_form(a, &space.combine(c)));
    match hit {
        Some(t) => certificate(
            a,
            space.combine(&trials[t]),
            ev(SearchStrategy::Random, t as u64 + 1, false),
        ),
        None => unknown(ev(SearchStrategy::Random, opts.random_trials as u64, false)),
    }
}

/// Look for `λ` with invertible pairing. `unknown` is not a disproof unless exhaustive.
pub fn find_frobenius_form(a: &Algebra, opts: SearchOptions) -> DualityCertificate {
    search(a, &Subspace::full(a.field(), a.dim()), opts)
}

/// Same search restricted to forms vanishing on `[A, A]`.
pub fn is_symmetric(a: &Algebra, opts: SearchOptions) -> DualityCertificate {
    let space = a.commutator_subspace().perp();
    search(a, &space, opts)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Certified,
    Asserted,
}

/// Permission to run the selfinjective-only criteria on one algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfinjectiveTag {
    pub provenance: Provenance,
    pub kind: DualityKind,
    #[serde(skip)]
    fingerprint: u64,
}

impl SelfinjectiveTag {
    pub fn check(&self, a: &Algebra) -> Result<()> {
        if self.fingerprint == a.fingerprint() {
            Ok(())
        } else {
            Err(Error::TagMismatch)
        }
    }
}

/// Grant a tag from a Frobenius certificate, or from an explicit override.
pub fn assert_selfinjective(
    a: &Algebra,
    cert: &DualityCertificate,
    user_override: bool,
) -> Result<SelfinjectiveTag> {
    if cert.fingerprint != a.fingerprint() {
        return Err(Error::TagMismatch);
    }
    if cert.is_frobenius() {
        return Ok(SelfinjectiveTag {
            provenance: Provenance::Certified,
            kind: cert.kind,
            fingerprint: a.fingerprint(),
        });
    }
    if user_override {
        return Ok(SelfinjectiveTag {
            provenance: Provenance::Asserted,
            kind: DualityKind::AssertedSelfinjective,
            fingerprint: a.fingerprint(),
        });
    }
    Err(Error::NotCertifiedSelfinjective)
}

/// Find a form and turn it into a tag; refuses when no form is found.
pub fn certify_selfinjective(a: &Algebra, opts: SearchOptions) -> Result<SelfinjectiveTag> {
    assert_selfinjective(a, &find_frobenius_form(a, opts), false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{
        group_algebra, quantum_complete_intersection, truncated_polynomial, upper_triangular,
    };
    use crate::gflinalg::Field;
    use crate::group::Group;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn group_algebra_form_is_candidate() {
        let a = group_algebra(&Group::symmetric3(), f(3)).unwrap();
        let c = find_frobenius_form(&a, SearchOptions::default());
        assert_eq!(c.kind, DualityKind::Symmetric);
        assert_eq!(c.evidence.strategy, SearchStrategy::Candidate);
        assert!(is_symmetric(&a, SearchOptions::default()).is_symmetric());
    }

    #[test]
    fn qci_top_monomial() {
        let a = quantum_complete_intersection(f(7), -1, 7, 7).unwrap();
        let c = find_frobenius_form(&a, SearchOptions::default());
        assert!(c.is_symmetric());
        assert_eq!(c.form.as_deref().unwrap()[48], 1);
        let b = quantum_complete_intersection(f(7), -1, 3, 3).unwrap();
        assert!(is_symmetric(&b, SearchOptions::default()).is_symmetric());
    }

    #[test]
    fn upper_triangular_not_frobenius() {
        let a = upper_triangular(f(2), 2).unwrap();
        let c = find_frobenius_form(&a, SearchOptions::default());
        assert_eq!(c.kind, DualityKind::Unknown);
        assert!(c.is_disproof());
        assert_eq!(c.evidence.trials, 7);
        assert_eq!(
            assert_selfinjective(&a, &c, false),
            Err(Error::NotCertifiedSelfinjective)
        );
        let tag = assert_selfinjective(&a, &c, true).unwrap();
        assert_eq!(tag.provenance, Provenance::Asserted);
    }

    #[test]
    fn truncated_cubic_symmetric() {
        let a = truncated_polynomial(f(2), 3).unwrap();
        let c = is_symmetric(&a, SearchOptions::default());
        assert!(c.is_symmetric());
        assert_eq!(c.form.unwrap(), vec![0, 0, 1]);
    }

    #[test]
    fn tag_is_bound_to_algebra() {
        let a = truncated_polynomial(f(2), 3).unwrap();
        let b = truncated_polynomial(f(2), 2).unwrap();
        let tag = certify_selfinjective(&a, SearchOptions::default()).unwrap();
        assert!(tag.check(&a).is_ok());
        assert_eq!(tag.check(&b), Err(Error::TagMismatch));
    }
}
