//! Hom spaces through presentations, projective factorisation, syzygies,
//! `Ext^1`, endomorphism algebras and projectivity.

use std::sync::Arc;

use super::{AModule, ModHom};
use crate::algebra::{Algebra, AlgebraSpec, ValidationLevel};
use crate::error::{Error, Result};
use crate::gflinalg::{FpMatrix, RowReducer, Subspace};

/// Which generators a presentation uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Cover {
    /// Greedy: basis vectors outside the submodule generated so far.
    Minimal,
    /// Every basis vector of the module.
    FullBasis,
}

/// A free cover `π: A^r ↠ U` with its kernel.
///
/// Coordinates on `A^r` are `(j, i) ↦ j*d + i`: component `j`, algebra basis `i`.
#[derive(Clone, Debug)]
pub struct Presentation {
    module: AModule,
    gens: Vec<Vec<u32>>,
    pi: FpMatrix,
    section: FpMatrix,
    kernel: Subspace,
    relations: Vec<Vec<u32>>,
}

fn free_act(block: &FpMatrix, v: &[u32], r: usize) -> Vec<u32> {
    let d = block.rows();
    let mut out = Vec::with_capacity(v.len());
    for j in 0..r {
        out.extend(block.mul_vec(&v[j * d..(j + 1) * d]));
    }
    out
}

/// Greedy module generators of a subspace of `A^r`.
fn free_generators_of(a: &Algebra, r: usize, space: &Subspace) -> Vec<Vec<u32>> {
    let mats: Vec<FpMatrix> = a.generators().iter().map(|g| a.left_mult(g)).collect();
    let mut rr = RowReducer::new(a.field(), r * a.dim());
    let mut gens = Vec::new();
    for v in space.basis_vectors() {
        if rr.rank() == space.dim() {
            break;
        }
        if rr.contains(&v) {
            continue;
        }
        rr.insert(&v);
        let mut frontier = vec![v.clone()];
        while let Some(w) = frontier.pop() {
            for m in &mats {
                let x = free_act(m, &w, r);
                if rr.insert(&x) {
                    frontier.push(x);
                }
            }
        }
        gens.push(v);
    }
    gens
}

impl Presentation {
    pub fn new(u: &AModule, cover: Cover) -> Self {
        let a = u.algebra();
        let f = a.field();
        let m = u.dim();
        let d = a.dim();
        let gens = match cover {
            Cover::Minimal => u.generators_of(&Subspace::full(f, m)),
            Cover::FullBasis => Subspace::full(f, m).basis_vectors(),
        };
        let r = gens.len();
        let mut cols = Vec::with_capacity(r * d);
        for g in &gens {
            for act in u.action() {
                cols.push(act.mul_vec(g));
            }
        }
        let pi = FpMatrix::from_columns(f, m, &cols);
        let section = pi
            .solve_matrix(&FpMatrix::identity(f, m))
            .expect("a generator cover is surjective");
        let kernel = pi.kernel();
        let relations = free_generators_of(a, r, &kernel);
        Presentation {
            module: u.clone(),
            gens,
            pi,
            section,
            kernel,
            relations,
        }
    }

    pub fn module(&self) -> &AModule {
        &self.module
    }
    /// Number of generators `r`.
    pub fn rank(&self) -> usize {
        self.gens.len()
    }
    pub fn generators(&self) -> &[Vec<u32>] {
        &self.gens
    }
    /// `dim U × r·d` matrix of the cover.
    pub fn cover_matrix(&self) -> &FpMatrix {
        &self.pi
    }
    /// The syzygy `Ω = ker π` inside `A^r`.
    pub fn kernel(&self) -> &Subspace {
        &self.kernel
    }
    /// Module generators of the kernel.
    pub fn relations(&self) -> &[Vec<u32>] {
        &self.relations
    }

    /// Parameters `(v_j) ∈ V^r` of homomorphisms `U → V`: those killing every relation.
    fn hom_params(&self, v: &AModule) -> Subspace {
        let a = self.module.algebra();
        let f = a.field();
        let d = a.dim();
        let r = self.rank();
        let n = v.dim();
        let mut rr = RowReducer::new(f, r * n);
        for omega in &self.relations {
            let blocks: Vec<FpMatrix> = (0..r).map(|j| v.rho(&omega[j * d..(j + 1) * d])).collect();
            for row in 0..n {
                let mut line = Vec::with_capacity(r * n);
                for b in &blocks {
                    line.extend_from_slice(b.row(row));
                }
                rr.insert(&line);
            }
            if rr.is_full() {
                break;
            }
        }
        rr.to_subspace().perp()
    }

    /// Full matrix of the homomorphism with generator images `w`.
    fn matrix_of(&self, v: &AModule, w: &[u32]) -> FpMatrix {
        let n = v.dim();
        let mut cols = Vec::with_capacity(self.pi.cols());
        for j in 0..self.rank() {
            let vj = &w[j * n..(j + 1) * n];
            for act in v.action() {
                cols.push(act.mul_vec(vj));
            }
        }
        FpMatrix::from_columns(v.algebra().field(), n, &cols).mul(&self.section)
    }
}

/// `Hom_A(U, V)` in presentation coordinates of `U`.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: AModule,
    target: AModule,
    pres: Arc<Presentation>,
    params: Subspace,
}

impl HomSpace {
    pub fn source(&self) -> &AModule {
        &self.source
    }
    pub fn target(&self) -> &AModule {
        &self.target
    }
    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }
    pub fn dim(&self) -> usize {
        self.params.dim()
    }
    /// The space of generator images `(f(u_j))_j ⊆ V^r`.
    pub fn params(&self) -> &Subspace {
        &self.params
    }
    pub fn matrix_of(&self, w: &[u32]) -> FpMatrix {
        self.pres.matrix_of(&self.target, w)
    }
    /// Generator images of a full matrix.
    pub fn params_of(&self, m: &FpMatrix) -> Vec<u32> {
        self.pres.gens.iter().flat_map(|g| m.mul_vec(g)).collect()
    }
    pub fn basis(&self) -> Vec<ModHom> {
        self.params
            .basis_vectors()
            .iter()
            .map(|w| ModHom::trusted(&self.source, &self.target, self.matrix_of(w)))
            .collect()
    }
    /// Row-major flattenings of the maps in a parameter subspace.
    pub fn flatten(&self, sub: &Subspace) -> Subspace {
        let n = self.target.dim() * self.source.dim();
        let vs: Vec<Vec<u32>> = sub
            .basis_vectors()
            .iter()
            .map(|w| self.matrix_of(w).as_slice().to_vec())
            .collect();
        Subspace::from_vectors(self.source.algebra().field(), n, &vs)
    }
}

fn check_same(u: &AModule, v: &AModule) -> Result<()> {
    if u.algebra().same_as(v.algebra()) {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch)
    }
}

pub fn hom_space(u: &AModule, v: &AModule) -> Result<HomSpace> {
    hom_space_with(u, v, Cover::Minimal)
}

pub fn hom_space_with(u: &AModule, v: &AModule, cover: Cover) -> Result<HomSpace> {
    check_same(u, v)?;
    let pres = Arc::new(Presentation::new(u, cover));
    Ok(hom_from_presentation(pres, v))
}

fn hom_from_presentation(pres: Arc<Presentation>, v: &AModule) -> HomSpace {
    let params = pres.hom_params(v);
    HomSpace {
        source: pres.module.clone(),
        target: v.clone(),
        pres,
        params,
    }
}

/// Homomorphisms `U → V` factoring through a projective, in the coordinates of `hom`.
///
/// Computed as `π_V ∘ Hom(U, A^k)` for a cover `π_V: A^k ↠ V`.
pub fn hom_pr_with(hom: &HomSpace, cover_v: Cover) -> Subspace {
    let u = &hom.source;
    let v = &hom.target;
    let a = u.algebra();
    let d = a.dim();
    let r = hom.pres.rank();
    let n = v.dim();
    let to_free = hom.pres.hom_params(&super::regular_module(a));
    let vgens = match cover_v {
        Cover::Minimal => v.generators_of(&Subspace::full(a.field(), n)),
        Cover::FullBasis => Subspace::full(a.field(), n).basis_vectors(),
    };
    let mut rr = RowReducer::new(a.field(), r * n);
    for g in &vgens {
        let orbit = v.orbit_matrix(g);
        for h in to_free.basis_vectors() {
            let w: Vec<u32> = (0..r)
                .flat_map(|j| orbit.mul_vec(&h[j * d..(j + 1) * d]))
                .collect();
            rr.insert(&w);
        }
        if rr.rank() == hom.dim() {
            break;
        }
    }
    let pr = rr.to_subspace();
    debug_assert!(hom.params.includes(&pr));
    pr
}

/// `Hom^pr(U, V)` as a subspace of `hom_space(U, V).params()`.
pub fn hom_pr(u: &AModule, v: &AModule) -> Result<(HomSpace, Subspace)> {
    let hom = hom_space(u, v)?;
    let pr = hom_pr_with(&hom, Cover::Minimal);
    Ok((hom, pr))
}

/// `dim Hom(U, V) - dim Hom^pr(U, V)`.
pub fn stable_hom_dim(u: &AModule, v: &AModule) -> Result<usize> {
    let (hom, pr) = hom_pr(u, v)?;
    Ok(hom.dim() - pr.dim())
}

/// The kernel of the minimal generator cover, as a submodule of `A^r`.
pub fn syzygy(u: &AModule) -> AModule {
    syzygy_with(&Presentation::new(u, Cover::Minimal))
}

pub fn syzygy_with(pres: &Presentation) -> AModule {
    let a = pres.module.algebra();
    let r = pres.rank();
    let ker = &pres.kernel;
    let basis = ker.basis_vectors();
    let action = a
        .left_basis_mults()
        .iter()
        .map(|l| {
            let cols: Vec<Vec<u32>> = basis
                .iter()
                .map(|b| {
                    ker.coords(&free_act(l, b, r))
                        .expect("kernel is a submodule")
                })
                .collect();
            FpMatrix::from_columns(a.field(), ker.dim(), &cols)
        })
        .collect();
    AModule::trusted(a, action, format!("Omega({})", pres.module.name()))
}

/// `dim Ext^1(U, V)` as the cokernel of restriction `Hom(A^r, V) → Hom(Ω, V)`.
pub fn ext1_dim(u: &AModule, v: &AModule) -> Result<usize> {
    ext1_dim_with(u, v, Cover::Minimal)
}

pub fn ext1_dim_with(u: &AModule, v: &AModule, cover: Cover) -> Result<usize> {
    check_same(u, v)?;
    let a = u.algebra();
    let d = a.dim();
    let pres = Presentation::new(u, cover);
    let r = pres.rank();
    let omega = syzygy_with(&pres);
    let pres_omega = Presentation::new(&omega, cover);
    let hom_omega = pres_omega.hom_params(v);
    // generators of Ω back in A^r coordinates
    let ws: Vec<Vec<u32>> = pres_omega
        .gens
        .iter()
        .map(|w| pres.kernel.combine(w))
        .collect();
    let n = v.dim();
    let t = ws.len();
    let mut rr = RowReducer::new(a.field(), t * n);
    for j in 0..r {
        let blocks: Vec<FpMatrix> = ws.iter().map(|w| v.rho(&w[j * d..(j + 1) * d])).collect();
        for c in 0..n {
            let image: Vec<u32> = blocks.iter().flat_map(|b| b.column(c)).collect();
            rr.insert(&image);
        }
    }
    let restricted = rr.to_subspace();
    debug_assert!(hom_omega.includes(&restricted));
    Ok(hom_omega.dim() - restricted.dim())
}

/// Naive oracle: all `f` with `ρ_V(g) f = f ρ_U(g)` for algebra generators `g`,
/// as row-major flattened matrices.
pub fn intertwiner_space(u: &AModule, v: &AModule) -> Result<Subspace> {
    check_same(u, v)?;
    let a = u.algebra();
    let f = a.field();
    let (m, n) = (u.dim(), v.dim());
    let mut rr = RowReducer::new(f, n * m);
    for g in a.generators() {
        let lhs = v.rho(g).kron(&FpMatrix::identity(f, m));
        let rhs = FpMatrix::identity(f, n).kron(&u.rho(g).transpose());
        let eq = lhs.sub(&rhs);
        for i in 0..eq.rows() {
            rr.insert(eq.row(i));
        }
    }
    Ok(rr.to_subspace().perp())
}

/// `End_A(U)` with product `f·g = f∘g`, and `U` as a left module over it.
#[derive(Clone, Debug)]
pub struct EndAlgebra {
    pub algebra: Algebra,
    pub homs: HomSpace,
    /// Full matrix of each basis endomorphism.
    pub maps: Vec<FpMatrix>,
    /// `U` with `f · u = f(u)`.
    pub module: AModule,
}

pub fn end_algebra(u: &AModule) -> Result<EndAlgebra> {
    let homs = hom_space(u, u)?;
    let f = u.algebra().field();
    let params = homs.params().clone();
    let basis = params.basis_vectors();
    let e = basis.len();
    let maps: Vec<FpMatrix> = basis.iter().map(|w| homs.matrix_of(w)).collect();
    let mut structure = vec![0u32; e * e * e];
    for (x, fx) in maps.iter().enumerate() {
        for (y, wy) in basis.iter().enumerate() {
            let composite = homs.params_of(&fx.mul(&homs.matrix_of(wy)));
            let c = params
                .coords(&composite)
                .expect("composite of endomorphisms");
            for (k, v) in c.into_iter().enumerate() {
                structure[(x * e + y) * e + k] = v;
            }
        }
    }
    let id = homs.params_of(&FpMatrix::identity(f, u.dim()));
    let unit = params.coords(&id).expect("identity is an endomorphism");
    let spec = AlgebraSpec::new(f, e, structure, unit)
        .labels((0..e).map(|i| format!("f{i}")).collect())
        .name(format!("End({})", u.name()));
    let algebra = Algebra::new(spec, ValidationLevel::default_for(e))?;
    let module = AModule::trusted(&algebra, maps.clone(), u.name());
    Ok(EndAlgebra {
        algebra,
        homs,
        maps,
        module,
    })
}

/// Whether `M` is projective over its algebra: the cover `E^r ↠ M` must split.
pub fn is_projective_over(e: &Algebra, m: &AModule) -> Result<bool> {
    if !e.same_as(m.algebra()) {
        return Err(Error::AlgebraMismatch);
    }
    let pres = Presentation::new(m, Cover::Minimal);
    let r = pres.rank();
    let d = e.dim();
    let dm = m.dim();
    let to_free = pres.hom_params(&super::regular_module(e));
    // s = (s_t)_t with s_t ∈ Hom(M, E); require Σ_t s_t(m_j)·m_t = m_j for all j
    let mut cols = Vec::new();
    for g in &pres.gens {
        let orbit = m.orbit_matrix(g);
        for h in to_free.basis_vectors() {
            let col: Vec<u32> = (0..r)
                .flat_map(|j| orbit.mul_vec(&h[j * d..(j + 1) * d]))
                .collect();
            cols.push(col);
        }
    }
    let target: Vec<u32> = pres.gens.iter().flatten().copied().collect();
    if cols.is_empty() {
        return Ok(dm == 0);
    }
    let sys = FpMatrix::from_columns(e.field(), r * dm, &cols);
    Ok(sys.solve_affine(&target).is_some())
}

#[cfg(test)]
mod tests {
    use super::super::{quotient_by_ideal, regular_module, trivial_module};
    use super::*;
    use crate::algebra::{group_algebra, truncated_polynomial};
    use crate::gflinalg::Field;
    use crate::group::Group;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn hom_from_regular() {
        let a = group_algebra(&Group::cyclic(4).unwrap(), f(2)).unwrap();
        let k = trivial_module(&a).unwrap();
        let reg = regular_module(&a);
        assert_eq!(hom_space(&reg, &k).unwrap().dim(), 1);
        assert_eq!(hom_space(&reg, &reg).unwrap().dim(), 4);
    }

    #[test]
    fn trivial_module_c2() {
        let a = group_algebra(&Group::cyclic(2).unwrap(), f(2)).unwrap();
        let k = trivial_module(&a).unwrap();
        let (hom, pr) = hom_pr(&k, &k).unwrap();
        assert_eq!(hom.dim(), 1);
        assert_eq!(pr.dim(), 0);
        assert_eq!(stable_hom_dim(&k, &k).unwrap(), 1);
        assert_eq!(syzygy(&k).dim(), 1);
        assert_eq!(ext1_dim(&k, &k).unwrap(), 1);
        assert!(!is_projective_over(&a, &k).unwrap());
        assert!(is_projective_over(&a, &regular_module(&a)).unwrap());
    }

    #[test]
    fn projective_targets() {
        let a = truncated_polynomial(f(3), 3).unwrap();
        let reg = regular_module(&a);
        let j = crate::ideal::jacobson_radical(&a).unwrap();
        let s = quotient_by_ideal(&j).unwrap();
        let (hom, pr) = hom_pr(&s, &reg).unwrap();
        assert_eq!(hom.params(), &pr);
        assert_eq!(stable_hom_dim(&reg, &s).unwrap(), 0);
        assert_eq!(syzygy(&reg).dim(), 0);
        assert_eq!(ext1_dim(&reg, &s).unwrap(), 0);
    }

    #[test]
    fn presentation_matches_intertwiners() {
        let a = group_algebra(&Group::symmetric3(), f(3)).unwrap();
        let reg = regular_module(&a);
        let k = trivial_module(&a).unwrap();
        for (u, v) in [(&k, &reg), (&reg, &k), (&k, &k)] {
            let h = hom_space(u, v).unwrap();
            assert_eq!(h.flatten(h.params()), intertwiner_space(u, v).unwrap());
        }
    }

    #[test]
    fn end_of_regular_is_opposite() {
        let a = group_algebra(&Group::symmetric3(), f(2)).unwrap();
        let e = end_algebra(&regular_module(&a)).unwrap();
        assert_eq!(e.algebra.dim(), 6);
        assert!(!e.algebra.is_commutative());
        assert!(is_projective_over(&e.algebra, &e.module).unwrap());
    }
}
