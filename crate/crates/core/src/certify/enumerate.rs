use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::certify_quotient_embedding;
use crate::algebra::Algebra;
use crate::duality::{assert_selfinjective, DualityCertificate};
use crate::error::Result;
use crate::gflinalg::decode_vector;
use crate::ideal::{ideal_generated, radical_series, Ideal, Side};

/// Principal ideals of every element are generated when `p^d` is at most this.
pub const ENUMERATION_EXHAUSTIVE_LIMIT: u64 = 1 << 20;

/// Condition names shared with the embedding certificate.
pub const EQUIVALENT_CONDITIONS: [&str; 5] = [
    "r_in_i",
    "l_in_i",
    "r_squared_zero",
    "l_squared_zero",
    "end_pr_zero",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Cap on generator evaluations plus ideal sums.
    pub budget: Option<u64>,
    pub seed: u64,
    /// Random generators drawn when exhaustive generation is too large.
    pub samples: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            budget: None,
            seed: 0,
            samples: 2048,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealRecord {
    #[serde(skip)]
    pub ideal: Ideal,
    pub dim: usize,
    pub basis: Vec<Vec<u32>>,
    /// `None` for the zero ideal and the whole algebra.
    pub positive: Option<bool>,
    pub conditions: Vec<bool>,
    pub consistent: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DimensionRow {
    pub dim: usize,
    pub ideals: usize,
    pub positives: usize,
    pub improper: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct EnumerationReport {
    pub algebra: String,
    pub dim_a: usize,
    pub exhaustive: bool,
    pub partial: bool,
    pub work: u64,
    pub records: Vec<IdealRecord>,
    pub rows: Vec<DimensionRow>,
    pub positives: usize,
    pub inconsistent: usize,
    pub half_dim_violations: usize,
    pub monotonicity_violations: usize,
}

struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    fn take(&mut self, n: u64) -> bool {
        if self.limit.is_some_and(|l| self.used + n > l) {
            return false;
        }
        self.used += n;
        true
    }
}

fn generator_pool(a: &Algebra, opts: &EnumerationOptions) -> Result<(Vec<Vec<u32>>, bool)> {
    let f = a.field();
    let p = f.modulus() as u64;
    let d = a.dim();
    if let Some(total) = p
        .checked_pow(d as u32)
        .filter(|&t| t <= ENUMERATION_EXHAUSTIVE_LIMIT)
    {
        // one representative per line: leading nonzero coordinate equal to 1
        let pool = (1..total)
            .map(|c| decode_vector(c, p, d))
            .filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
            .collect();
        return Ok((pool, true));
    }
    // random elements of random radical powers, so small ideals are reached
    let layers: Vec<Vec<Vec<u32>>> = std::iter::once(Ideal::whole(a))
        .chain(radical_series(a)?)
        .filter(|i| !i.is_zero())
        .map(|i| i.basis())
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let pool = (0..opts.samples)
        .map(|_| {
            let layer = &layers[rng.gen_range(0..layers.len())];
            let mut x = a.zero();
            for b in layer {
                let c = rng.gen_range(0..p as u32);
                for (xi, &bi) in x.iter_mut().zip(b) {
                    *xi = f.add(*xi, f.mul(c, bi));
                }
            }
            x
        })
        .collect();
    Ok((pool, false))
}

/// Survey the two-sided ideals: principal ideals of a generator pool, closed
/// under sums, each tested for the embedding conditions.
pub fn enumerate_embedding_ideals(
    a: &Algebra,
    cert: &DualityCertificate,
    opts: EnumerationOptions,
) -> Result<EnumerationReport> {
    let tag = assert_selfinjective(a, cert, false)?;
    let (pool, exhaustive) = generator_pool(a, &opts)?;
    let mut budget = Budget {
        limit: opts.budget,
        used: 0,
    };
    let mut partial = false;
    let take = pool.len().min(
        opts.budget
            .map_or(usize::MAX, |b| usize::try_from(b).unwrap_or(usize::MAX)),
    );
    if take < pool.len() {
        partial = true;
    }
    budget.take(take as u64);
    let principal: Vec<Ideal> = pool[..take]
        .par_iter()
        .map(|x| ideal_generated(a, std::slice::from_ref(x), Side::TwoSided))
        .collect::<Result<_>>()?;

    let mut known: BTreeMap<Vec<Vec<u32>>, Ideal> = BTreeMap::new();
    let mut list: Vec<Ideal> = Vec::new();
    for i in [Ideal::zero(a), Ideal::whole(a)]
        .into_iter()
        .chain(principal)
    {
        if let std::collections::btree_map::Entry::Vacant(e) = known.entry(i.basis()) {
            e.insert(i.clone());
            list.push(i);
        }
    }
    let mut idx = 0;
    'closure: while idx < list.len() {
        for j in 0..idx {
            if !budget.take(1) {
                partial = true;
                break 'closure;
            }
            let s = list[idx].sum(&list[j])?;
            let key = s.basis();
            if let std::collections::btree_map::Entry::Vacant(e) = known.entry(key) {
                e.insert(s.clone());
                list.push(s);
            }
        }
        idx += 1;
    }

    let dim_a = a.dim();
    let mut ideals: Vec<Ideal> = known.into_values().collect();
    ideals.sort_by_key(|i| (i.dim(), i.basis()));
    let records: Vec<IdealRecord> = ideals
        .par_iter()
        .map(|i| -> Result<IdealRecord> {
            let trivial = i.is_zero() || !i.is_proper();
            let (positive, conditions, consistent) = if trivial {
                (None, Vec::new(), true)
            } else {
                let c = certify_quotient_embedding(a, &tag, i)?;
                let conds: Vec<bool> = EQUIVALENT_CONDITIONS
                    .iter()
                    .map(|n| {
                        c.flag_value(n)
                            .expect("embedding certificate records the condition")
                    })
                    .collect();
                (Some(c.is_positive()), conds, c.is_consistent())
            };
            Ok(IdealRecord {
                ideal: i.clone(),
                dim: i.dim(),
                basis: i.basis(),
                positive,
                conditions,
                consistent,
            })
        })
        .collect::<Result<_>>()?;

    let mut rows: BTreeMap<usize, DimensionRow> = BTreeMap::new();
    for r in &records {
        let row = rows.entry(r.dim).or_insert(DimensionRow {
            dim: r.dim,
            ideals: 0,
            positives: 0,
            improper: r.positive.is_none(),
        });
        row.ideals += 1;
        row.positives += usize::from(r.positive == Some(true));
    }
    let positives: Vec<&IdealRecord> = records
        .iter()
        .filter(|r| r.positive == Some(true))
        .collect();
    let half_dim_violations = positives.iter().filter(|r| 2 * r.dim < dim_a).count();
    let mut monotonicity_violations = 0;
    for small in &positives {
        for big in records.iter().filter(|r| r.positive == Some(false)) {
            if big.dim > small.dim && small.ideal.is_contained_in(&big.ideal)? {
                monotonicity_violations += 1;
            }
        }
    }
    Ok(EnumerationReport {
        algebra: a.name().to_string(),
        dim_a,
        exhaustive: exhaustive && !partial,
        partial,
        work: budget.used,
        positives: positives.len(),
        inconsistent: records.iter().filter(|r| !r.consistent).count(),
        half_dim_violations,
        monotonicity_violations,
        rows: rows.into_values().collect(),
        records,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{group_algebra, truncated_polynomial};
    use crate::duality::{find_frobenius_form, SearchOptions};
    use crate::gflinalg::Field;
    use crate::group::Group;

    fn run(a: &Algebra, opts: EnumerationOptions) -> EnumerationReport {
        let cert = find_frobenius_form(a, SearchOptions::default());
        enumerate_embedding_ideals(a, &cert, opts).unwrap()
    }

    #[test]
    fn dual_numbers() {
        let a = truncated_polynomial(Field::new(2).unwrap(), 2).unwrap();
        let r = run(&a, EnumerationOptions::default());
        assert!(r.exhaustive);
        assert_eq!(r.records.len(), 3);
        assert_eq!(r.positives, 1);
    }

    #[test]
    fn klein_four() {
        let c2 = Group::cyclic(2).unwrap();
        let a = group_algebra(
            &Group::direct_product(&c2, &c2).unwrap(),
            Field::new(2).unwrap(),
        )
        .unwrap();
        let r = run(&a, EnumerationOptions::default());
        assert_eq!(r.records.len(), 7);
        assert_eq!(r.positives, 4);
        assert_eq!(r.half_dim_violations, 0);
        assert_eq!(r.inconsistent, 0);
        assert_eq!(r.monotonicity_violations, 0);
    }

    #[test]
    fn budget_marks_partial() {
        let a = truncated_polynomial(Field::new(3).unwrap(), 4).unwrap();
        let r = run(
            &a,
            EnumerationOptions {
                budget: Some(5),
                ..Default::default()
            },
        );
        assert!(r.partial);
        assert!(!r.exhaustive);
    }

    #[test]
    fn semisimple_has_only_trivial_rows() {
        let a = group_algebra(&Group::cyclic(2).unwrap(), Field::new(3).unwrap()).unwrap();
        let r = run(&a, EnumerationOptions::default());
        // F_3[C_2] ≅ F_3 × F_3 has two proper nonzero ideals, neither positive
        assert_eq!(r.positives, 0);
        assert!(r.rows.iter().filter(|row| row.improper).count() >= 2);
    }
}
