use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{hom_space, AModule, ModHom};
use crate::error::Result;
use crate::gflinalg::{decode_vector, FpMatrix};

/// `Hom` spaces with at most this many elements are searched completely.
pub const ISO_EXHAUSTIVE_LIMIT: u64 = 1 << 16;
pub const ISO_RANDOM_TRIALS: usize = 1024;

#[derive(Clone, Debug)]
pub enum IsoOutcome {
    Isomorphic(ModHom),
    NotIsomorphic,
    /// Random search found no isomorphism; not a disproof.
    Undetermined {
        trials: usize,
    },
}

impl IsoOutcome {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoOutcome::Isomorphic(_))
    }
    /// `Some(answer)` when the outcome is decided.
    pub fn decided(&self) -> Option<bool> {
        match self {
            IsoOutcome::Isomorphic(_) => Some(true),
            IsoOutcome::NotIsomorphic => Some(false),
            IsoOutcome::Undetermined { .. } => None,
        }
    }
}

/// Look for an invertible element of `Hom_A(U, V)`.
pub fn is_isomorphic(u: &AModule, v: &AModule, seed: u64) -> Result<IsoOutcome> {
    let hom = hom_space(u, v)?;
    if u.dim() != v.dim() {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let f = u.algebra().field();
    if u.dim() == 0 {
        return Ok(IsoOutcome::Isomorphic(ModHom::trusted(
            u,
            v,
            FpMatrix::zeros(f, 0, 0),
        )));
    }
    let basis: Vec<FpMatrix> = hom
        .params()
        .basis_vectors()
        .iter()
        .map(|w| hom.matrix_of(w))
        .collect();
    let h = basis.len();
    if h == 0 {
        return Ok(IsoOutcome::NotIsomorphic);
    }
    let combine = |c: &[u32]| {
        let mut m = FpMatrix::zeros(f, v.dim(), u.dim());
        for (b, &x) in basis.iter().zip(c) {
            m.add_scaled(x, b);
        }
        m
    };
    let p = f.modulus() as u64;
    if let Some(total) = p
        .checked_pow(h as u32)
        .filter(|&t| t <= ISO_EXHAUSTIVE_LIMIT)
    {
        let hit = (1..total)
            .into_par_iter()
            .map(|code| combine(&decode_vector(code, p, h)))
            .find_first(FpMatrix::is_invertible);
        return Ok(match hit {
            Some(m) => IsoOutcome::Isomorphic(ModHom::trusted(u, v, m)),
            None => IsoOutcome::NotIsomorphic,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trials: Vec<Vec<u32>> = (0..ISO_RANDOM_TRIALS)
        .map(|_| (0..h).map(|_| rng.gen_range(0..p as u32)).collect())
        .collect();
    let hit = trials
        .par_iter()
        .map(|c| combine(c))
        .find_first(FpMatrix::is_invertible);
    Ok(match hit {
        Some(m) => IsoOutcome::Isomorphic(ModHom::trusted(u, v, m)),
        None => IsoOutcome::Undetermined {
            trials: ISO_RANDOM_TRIALS,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::super::{direct_sum, regular_module, syzygy, trivial_module};
    use super::*;
    use crate::algebra::group_algebra;
    use crate::gflinalg::Field;
    use crate::group::Group;

    #[test]
    fn trivial_versus_regular() {
        let a = group_algebra(&Group::cyclic(2).unwrap(), Field::new(2).unwrap()).unwrap();
        let k = trivial_module(&a).unwrap();
        let kk = direct_sum(&k, &k).unwrap();
        let reg = regular_module(&a);
        assert_eq!(is_isomorphic(&kk, &reg, 0).unwrap().decided(), Some(false));
        assert!(is_isomorphic(&syzygy(&k), &k, 0).unwrap().is_isomorphic());
        let out = is_isomorphic(&reg, &reg, 0).unwrap();
        let IsoOutcome::Isomorphic(f) = out else {
            panic!()
        };
        assert!(f.is_isomorphism());
    }
}
