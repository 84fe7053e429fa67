//! Exact linear algebra over prime fields.

mod field;
mod matrix;
mod subspace;

pub use field::{Field, Fp, MAX_MODULUS};
pub use matrix::{AffineSolution, FpMatrix, Rref};
pub use subspace::{Coordinates, RowReducer, Subspace};

/// The vector of base-`p` digits of `code`, least significant first.
pub fn decode_vector(mut code: u64, p: u64, d: usize) -> Vec<u32> {
    let mut v = vec![0u32; d];
    for slot in v.iter_mut() {
        *slot = (code % p) as u32;
        code /= p;
    }
    v
}
