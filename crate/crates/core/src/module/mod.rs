//! Finite-dimensional left modules and their homomorphism spaces.

mod hom;
mod iso;
mod tensor;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraHom};
use crate::error::{Error, Result};
use crate::gflinalg::{FpMatrix, RowReducer, Subspace};
use crate::ideal::{Ideal, Side};

pub use hom::{
    end_algebra, ext1_dim, ext1_dim_with, hom_pr, hom_pr_with, hom_space, hom_space_with,
    intertwiner_space, is_projective_over, stable_hom_dim, syzygy, syzygy_with, Cover, EndAlgebra,
    HomSpace, Presentation,
};
pub use iso::{is_isomorphic, IsoOutcome, ISO_EXHAUSTIVE_LIMIT, ISO_RANDOM_TRIALS};
pub use tensor::{adjunction_unit_iso, tensor_over, Bimodule};

struct ModuleData {
    algebra: Algebra,
    dim: usize,
    action: Vec<FpMatrix>,
    name: String,
}

/// A left module: one `dim × dim` action matrix per algebra basis vector.
#[derive(Clone)]
pub struct AModule(Arc<ModuleData>);

impl AModule {
    /// Checks `ρ(s)ρ(e_j) = ρ(s e_j)` for generators `s` and `ρ(1) = id`.
    pub fn new(algebra: &Algebra, action: Vec<FpMatrix>, name: impl Into<String>) -> Result<Self> {
        let d = algebra.dim();
        if action.len() != d {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for a {d}-dimensional algebra",
                action.len()
            )));
        }
        let m = action.first().map_or(0, |a| a.rows());
        if action
            .iter()
            .any(|a| a.rows() != m || a.cols() != m || a.field() != algebra.field())
        {
            return Err(Error::InvalidModule(
                "action matrices must be square of one size".into(),
            ));
        }
        let module = Self::trusted(algebra, action, name);
        module.validate()?;
        Ok(module)
    }

    pub(crate) fn trusted(
        algebra: &Algebra,
        action: Vec<FpMatrix>,
        name: impl Into<String>,
    ) -> Self {
        let dim = action.first().map_or(0, |a| a.rows());
        AModule(Arc::new(ModuleData {
            algebra: algebra.clone(),
            dim,
            action,
            name: name.into(),
        }))
    }

    fn validate(&self) -> Result<()> {
        let a = self.algebra();
        let m = self.dim();
        if self.rho(&a.one()) != FpMatrix::identity(a.field(), m) {
            return Err(Error::InvalidModule("unit does not act as identity".into()));
        }
        for s in a.generators() {
            let rs = self.rho(s);
            for j in 0..a.dim() {
                let sj = a.mul(s, &a.basis_element(j));
                if rs.mul(&self.0.action[j]) != self.rho(&sj) {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative at {}",
                        a.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }
    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn name(&self) -> &str {
        &self.0.name
    }
    pub fn action(&self) -> &[FpMatrix] {
        &self.0.action
    }
    pub fn renamed(&self, name: impl Into<String>) -> AModule {
        AModule::trusted(self.algebra(), self.0.action.clone(), name)
    }

    /// `ρ(x) = Σ x_i ρ(e_i)`.
    pub fn rho(&self, x: &[u32]) -> FpMatrix {
        let f = self.algebra().field();
        let mut m = FpMatrix::zeros(f, self.dim(), self.dim());
        for (i, &c) in x.iter().enumerate() {
            m.add_scaled(c, &self.0.action[i]);
        }
        m
    }

    pub fn act(&self, x: &[u32], v: &[u32]) -> Vec<u32> {
        let f = self.algebra().field();
        let mut out = vec![0u32; self.dim()];
        for (i, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, w) in out.iter_mut().zip(self.0.action[i].mul_vec(v)) {
                *o = f.add(*o, f.mul(c, w));
            }
        }
        out
    }

    /// `n × d` matrix whose column `i` is `e_i · v`.
    pub fn orbit_matrix(&self, v: &[u32]) -> FpMatrix {
        let cols: Vec<Vec<u32>> = self.0.action.iter().map(|m| m.mul_vec(v)).collect();
        FpMatrix::from_columns(self.algebra().field(), self.dim(), &cols)
    }

    fn same_algebra(&self, other: &AModule) -> Result<()> {
        if self.algebra().same_as(other.algebra()) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The submodule generated by `vs`, as a subspace.
    pub fn span_submodule(&self, vs: &[Vec<u32>]) -> Subspace {
        let mut rr = RowReducer::new(self.algebra().field(), self.dim());
        self.close_into(&mut rr, vs);
        rr.to_subspace()
    }

    fn close_into(&self, rr: &mut RowReducer, vs: &[Vec<u32>]) {
        let gens: Vec<FpMatrix> = self
            .algebra()
            .generators()
            .iter()
            .map(|g| self.rho(g))
            .collect();
        let mut frontier: Vec<Vec<u32>> = vs.iter().filter(|v| rr.insert(v)).cloned().collect();
        while let Some(v) = frontier.pop() {
            if rr.is_full() {
                break;
            }
            for g in &gens {
                let w = g.mul_vec(&v);
                if rr.insert(&w) {
                    frontier.push(w);
                }
            }
        }
    }

    /// Greedy module generators among the basis vectors of `space`.
    pub fn generators_of(&self, space: &Subspace) -> Vec<Vec<u32>> {
        let mut rr = RowReducer::new(self.algebra().field(), self.dim());
        let mut gens = Vec::new();
        for v in space.basis_vectors() {
            if rr.rank() == space.dim() {
                break;
            }
            if !rr.contains(&v) {
                self.close_into(&mut rr, std::slice::from_ref(&v));
                gens.push(v);
            }
        }
        gens
    }

    pub fn is_submodule(&self, space: &Subspace) -> bool {
        space.ambient_dim() == self.dim() && self.0.action.iter().all(|m| space.is_invariant(m))
    }

    pub fn is_annihilated_by(&self, ideal: &Ideal) -> bool {
        ideal.basis().iter().all(|x| self.rho(x).is_zero())
    }

    /// `I·U`, a submodule when `I` is a right ideal.
    pub fn ideal_times(&self, ideal: &Ideal) -> Subspace {
        let f = self.algebra().field();
        let mut rr = RowReducer::new(f, self.dim());
        for x in ideal.basis() {
            let m = self.rho(&x);
            for c in 0..m.cols() {
                rr.insert(&m.column(c));
            }
        }
        rr.to_subspace()
    }

    /// `ann_U(I) = {u : I·u = 0}`.
    pub fn annihilated_by(&self, ideal: &Ideal) -> Subspace {
        let f = self.algebra().field();
        let mut rr = RowReducer::new(f, self.dim());
        for x in ideal.basis() {
            let m = self.rho(&x);
            for r in 0..m.rows() {
                rr.insert(m.row(r));
            }
        }
        rr.to_subspace().perp()
    }
}

impl fmt::Debug for AModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AModule({}, dim {} over {})",
            self.name(),
            self.dim(),
            self.algebra().name()
        )
    }
}

/// The regular module `A`.
pub fn regular_module(a: &Algebra) -> AModule {
    AModule::trusted(a, a.left_basis_mults().to_vec(), a.name().to_string())
}

/// `A^n`, with coordinates `(j, i) ↦ j*d + i`.
pub fn free_module(a: &Algebra, n: usize) -> AModule {
    let base = a.left_basis_mults();
    let action = base
        .iter()
        .map(|l| {
            let mut m = FpMatrix::zeros(a.field(), 0, 0);
            for _ in 0..n {
                m = m.direct_sum(l);
            }
            m
        })
        .collect();
    AModule::trusted(a, action, format!("{}^{n}", a.name()))
}

/// A left (or two-sided) ideal as a module, on its canonical basis.
pub fn ideal_as_module(ideal: &Ideal) -> Result<AModule> {
    if ideal.side() == Side::Right {
        return Err(Error::NotAnIdeal("left"));
    }
    let u = regular_module(ideal.parent());
    Ok(submodule(&u, ideal.space())?.renamed(format!("I{}", ideal.dim())))
}

/// Restriction of the action to an invariant subspace, on its canonical basis.
pub fn submodule(u: &AModule, space: &Subspace) -> Result<AModule> {
    if !u.is_submodule(space) {
        return Err(Error::NotInvariantSubspace);
    }
    let f = u.algebra().field();
    let basis = space.basis_vectors();
    let action = u
        .action()
        .iter()
        .map(|m| {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|b| space.coords(&m.mul_vec(b)).expect("invariant"))
                .collect();
            FpMatrix::from_columns(f, space.dim(), &cols)
        })
        .collect();
    Ok(AModule::trusted(
        u.algebra(),
        action,
        format!("sub{}({})", space.dim(), u.name()),
    ))
}

/// `U / W` on the non-pivot coordinates of `W`, with the projection matrix.
pub fn quotient_module_with_projection(
    u: &AModule,
    space: &Subspace,
) -> Result<(AModule, FpMatrix)> {
    if !u.is_submodule(space) {
        return Err(Error::NotInvariantSubspace);
    }
    let f = u.algebra().field();
    let keep = space.complement_indices();
    let q = keep.len();
    let project = |v: &[u32]| -> Vec<u32> {
        let r = space.reduce(v);
        keep.iter().map(|&c| r[c]).collect()
    };
    let action = u
        .action()
        .iter()
        .map(|m| {
            let cols: Vec<Vec<u32>> = keep.iter().map(|&c| project(&m.column(c))).collect();
            FpMatrix::from_columns(f, q, &cols)
        })
        .collect();
    let proj_cols: Vec<Vec<u32>> = (0..u.dim())
        .map(|j| {
            let mut e = vec![0; u.dim()];
            e[j] = 1;
            project(&e)
        })
        .collect();
    let proj = FpMatrix::from_columns(f, q, &proj_cols);
    let module = AModule::trusted(u.algebra(), action, format!("{}/{}", u.name(), space.dim()));
    Ok((module, proj))
}

pub fn quotient_module(u: &AModule, space: &Subspace) -> Result<AModule> {
    quotient_module_with_projection(u, space).map(|(m, _)| m)
}

/// `A/I` as a left `A`-module.
pub fn quotient_by_ideal(ideal: &Ideal) -> Result<AModule> {
    if ideal.side() == Side::Right {
        return Err(Error::NotAnIdeal("left"));
    }
    let q = quotient_module(&regular_module(ideal.parent()), ideal.space())?;
    Ok(q.renamed(format!("{}/I{}", ideal.parent().name(), ideal.dim())))
}

/// The trivial module of a group algebra: every group element acts as 1.
pub fn trivial_module(kg: &Algebra) -> Result<AModule> {
    if kg.group().is_none() {
        return Err(Error::NotGroupAlgebra);
    }
    let id = FpMatrix::identity(kg.field(), 1);
    Ok(AModule::trusted(kg, vec![id; kg.dim()], "k"))
}

/// View a module over the target of `hom` as a module over its source.
pub fn restrict(hom: &AlgebraHom, u: &AModule) -> Result<AModule> {
    if !hom.target().same_as(u.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let action = (0..hom.source().dim())
        .map(|i| u.rho(&hom.matrix().column(i)))
        .collect();
    Ok(AModule::trusted(
        hom.source(),
        action,
        format!("res({})", u.name()),
    ))
}

pub fn direct_sum(u: &AModule, v: &AModule) -> Result<AModule> {
    u.same_algebra(v)?;
    let action = u
        .action()
        .iter()
        .zip(v.action())
        .map(|(a, b)| a.direct_sum(b))
        .collect();
    Ok(AModule::trusted(
        u.algebra(),
        action,
        format!("{}+{}", u.name(), v.name()),
    ))
}

/// A module homomorphism, stored as a `dim target × dim source` matrix.
#[derive(Clone)]
pub struct ModHom {
    source: AModule,
    target: AModule,
    matrix: FpMatrix,
}

impl ModHom {
    /// Checks `ρ_V(e_i) f = f ρ_U(e_i)` on algebra generators.
    pub fn new(source: &AModule, target: &AModule, matrix: FpMatrix) -> Result<Self> {
        source.same_algebra(target)?;
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("homomorphism matrix shape".into()));
        }
        let a = source.algebra();
        for g in a.generators() {
            if target.rho(g).mul(&matrix) != matrix.mul(&source.rho(g)) {
                return Err(Error::InvalidModule(
                    "matrix does not intertwine the actions".into(),
                ));
            }
        }
        Ok(ModHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub(crate) fn trusted(source: &AModule, target: &AModule, matrix: FpMatrix) -> Self {
        ModHom {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn source(&self) -> &AModule {
        &self.source
    }
    pub fn target(&self) -> &AModule {
        &self.target
    }
    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }
    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }
    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }
    pub fn is_isomorphism(&self) -> bool {
        self.source.dim() == self.target.dim() && self.matrix.is_invertible()
    }
    pub fn compose(&self, first: &ModHom) -> ModHom {
        ModHom::trusted(&first.source, &self.target, self.matrix.mul(&first.matrix))
    }
}

impl fmt::Debug for ModHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModHom({} -> {}) {:?}",
            self.source.name(),
            self.target.name(),
            self.matrix
        )
    }
}
