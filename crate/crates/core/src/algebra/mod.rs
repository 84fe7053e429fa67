//! Associative unital algebras by structure constants.

mod builders;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::gflinalg::{Field, FpMatrix, RowReducer, Subspace};
use crate::group::Group;

pub use builders::*;

/// How much of the associativity law to check on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ValidationLevel {
    /// Every basis triple.
    Full,
    /// Triples `(s, e_j, e_k)` with `s` in a generating set, plus unit laws.
    Generators,
}

impl ValidationLevel {
    /// Full validation up to dimension 64.
    pub fn default_for(dim: usize) -> Self {
        if dim <= 64 {
            ValidationLevel::Full
        } else {
            ValidationLevel::Generators
        }
    }
}

struct AlgebraData {
    field: Field,
    dim: usize,
    /// `products[i*d + j]` lists the nonzero `(k, c_ijk)`.
    products: Vec<Vec<(usize, u32)>>,
    unit: Vec<u32>,
    labels: Vec<String>,
    name: String,
    generators: Vec<Vec<u32>>,
    candidate_forms: Vec<Vec<u32>>,
    group: Option<Group>,
    left_basis: OnceLock<Vec<FpMatrix>>,
    right_basis: OnceLock<Vec<FpMatrix>>,
}

/// A finite-dimensional associative unital algebra over `F_p`.
///
/// Basis order and labels are part of the value. Cloning shares storage.
#[derive(Clone)]
pub struct Algebra(Arc<AlgebraData>);

/// Raw ingredients for [`Algebra::new`].
#[derive(Clone, Debug)]
pub struct AlgebraSpec {
    pub field: Field,
    pub dim: usize,
    /// Dense tensor: entry `(i*d + j)*d + k` is the coefficient of `e_k` in `e_i e_j`.
    pub structure: Vec<u32>,
    pub unit: Vec<u32>,
    pub labels: Option<Vec<String>>,
    pub name: String,
    pub generators: Option<Vec<Vec<u32>>>,
    pub candidate_forms: Vec<Vec<u32>>,
}

impl AlgebraSpec {
    pub fn new(field: Field, dim: usize, structure: Vec<u32>, unit: Vec<u32>) -> Self {
        AlgebraSpec {
            field,
            dim,
            structure,
            unit,
            labels: None,
            name: format!("A{dim}"),
            generators: None,
            candidate_forms: Vec::new(),
        }
    }

    /// Build the dense tensor from `(i, j, k, value)` entries; repeated entries add.
    pub fn from_sparse(
        field: Field,
        dim: usize,
        entries: &[(usize, usize, usize, i64)],
        unit: Vec<u32>,
    ) -> Result<Self> {
        let mut structure = vec![0u32; dim * dim * dim];
        for &(i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::DimensionMismatch(format!(
                    "structure entry ({i}, {j}, {k}) outside dimension {dim}"
                )));
            }
            let slot = &mut structure[(i * dim + j) * dim + k];
            *slot = field.add(*slot, field.reduce(v));
        }
        Ok(Self::new(field, dim, structure, unit))
    }

    pub fn labels(mut self, labels: Vec<String>) -> Self {
        self.labels = Some(labels);
        self
    }
    pub fn name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
    pub fn generators(mut self, gens: Vec<Vec<u32>>) -> Self {
        self.generators = Some(gens);
        self
    }
    pub fn candidate_form(mut self, form: Vec<u32>) -> Self {
        self.candidate_forms.push(form);
        self
    }
}

impl Algebra {
    /// Validate and build an algebra.
    pub fn new(spec: AlgebraSpec, level: ValidationLevel) -> Result<Self> {
        Self::build(spec, level, None)
    }

    fn build(spec: AlgebraSpec, level: ValidationLevel, group: Option<Group>) -> Result<Self> {
        let d = spec.dim;
        let field = spec.field;
        if d == 0 {
            return Err(Error::InvalidParameter(
                "algebra dimension must be at least 1".into(),
            ));
        }
        if spec.structure.len() != d * d * d {
            return Err(Error::DimensionMismatch(format!(
                "structure tensor has {} entries, expected {}",
                spec.structure.len(),
                d * d * d
            )));
        }
        if spec.unit.len() != d {
            return Err(Error::DimensionMismatch("unit vector length".into()));
        }
        let p = field.modulus();
        let products = (0..d * d)
            .map(|ij| {
                (0..d)
                    .filter_map(|k| {
                        let c = spec.structure[ij * d + k] % p;
                        (c != 0).then_some((k, c))
                    })
                    .collect()
            })
            .collect();
        let labels = match spec.labels {
            Some(l) if l.len() == d => l,
            Some(_) => return Err(Error::DimensionMismatch("label count".into())),
            None => (0..d).map(|i| format!("e{i}")).collect(),
        };
        for f in &spec.candidate_forms {
            if f.len() != d {
                return Err(Error::DimensionMismatch("candidate form length".into()));
            }
        }
        let unit: Vec<u32> = spec.unit.iter().map(|&x| x % p).collect();
        let mut a = Algebra(Arc::new(AlgebraData {
            field,
            dim: d,
            products,
            unit,
            labels,
            name: spec.name,
            generators: Vec::new(),
            candidate_forms: spec.candidate_forms,
            group,
            left_basis: OnceLock::new(),
            right_basis: OnceLock::new(),
        }));
        a.check_unit()?;
        let generators = match spec.generators {
            Some(g) => {
                if g.iter().any(|v| v.len() != d) {
                    return Err(Error::DimensionMismatch("generator length".into()));
                }
                if !a.generates(&g) {
                    return Err(Error::InvalidParameter(
                        "supplied generators do not generate the algebra".into(),
                    ));
                }
                g
            }
            None => a.greedy_generators(),
        };
        Arc::get_mut(&mut a.0).unwrap().generators = generators;
        match level {
            ValidationLevel::Full => a.check_associativity_full()?,
            ValidationLevel::Generators => a.check_associativity_generators()?,
        }
        Ok(a)
    }

    pub(crate) fn with_group(spec: AlgebraSpec, group: Group) -> Result<Self> {
        let level = ValidationLevel::default_for(spec.dim);
        Self::build(spec, level, Some(group))
    }

    fn check_unit(&self) -> Result<()> {
        let d = self.dim();
        for j in 0..d {
            let e = self.basis_element(j);
            if self.mul(&self.0.unit, &e) != e || self.mul(&e, &self.0.unit) != e {
                return Err(Error::UnitViolation(j));
            }
        }
        Ok(())
    }

    fn check_associativity_full(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..d {
                let ij = self.basis_product(i, j);
                for k in 0..d {
                    let lhs = self.mul_sparse_basis(ij, k, true);
                    let jk = self.basis_product(j, k);
                    let rhs = self.mul_sparse_basis(jk, i, false);
                    if lhs != rhs {
                        return Err(Error::AssociativityViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// `(x e_b)` when `right` is set, otherwise `(e_b x)`, for sparse `x`.
    fn mul_sparse_basis(&self, x: &[(usize, u32)], b: usize, right: bool) -> Vec<u32> {
        let f = self.field();
        let d = self.dim();
        let mut out = vec![0u32; d];
        for &(m, c) in x {
            let prod = if right {
                self.basis_product(m, b)
            } else {
                self.basis_product(b, m)
            };
            for &(k, v) in prod {
                out[k] = f.add(out[k], f.mul(c, v));
            }
        }
        out
    }

    fn check_associativity_generators(&self) -> Result<()> {
        let d = self.dim();
        for s in &self.0.generators {
            for j in 0..d {
                let sj = self.mul(s, &self.basis_element(j));
                for k in 0..d {
                    let lhs = self.mul(&sj, &self.basis_element(k));
                    let jk = self.sparse_to_dense(self.basis_product(j, k));
                    if lhs != self.mul(s, &jk) {
                        let i = s.iter().position(|&x| x != 0).unwrap_or(0);
                        return Err(Error::AssociativityViolation { i, j, k });
                    }
                }
            }
        }
        Ok(())
    }

    /// Re-run full associativity and unit validation.
    pub fn revalidate(&self) -> Result<()> {
        self.check_unit()?;
        self.check_associativity_full()
    }

    fn sparse_to_dense(&self, x: &[(usize, u32)]) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        for &(k, c) in x {
            v[k] = c;
        }
        v
    }

    /// Span of left-nested words in `gens` applied to 1.
    fn generated_span(&self, gens: &[Vec<u32>]) -> RowReducer {
        let mut rr = RowReducer::new(self.field(), self.dim());
        rr.insert(&self.0.unit);
        let mut frontier = vec![self.0.unit.clone()];
        while let Some(v) = frontier.pop() {
            for s in gens {
                let w = self.mul(s, &v);
                if rr.insert(&w) {
                    frontier.push(w);
                }
            }
            if rr.is_full() {
                break;
            }
        }
        rr
    }

    fn generates(&self, gens: &[Vec<u32>]) -> bool {
        self.generated_span(gens).is_full()
    }

    fn greedy_generators(&self) -> Vec<Vec<u32>> {
        let mut gens: Vec<Vec<u32>> = Vec::new();
        let mut span = self.generated_span(&gens);
        for i in 0..self.dim() {
            if span.is_full() {
                break;
            }
            let e = self.basis_element(i);
            if !span.contains(&e) {
                gens.push(e);
                span = self.generated_span(&gens);
            }
        }
        gens
    }

    pub fn field(&self) -> Field {
        self.0.field
    }
    pub fn dim(&self) -> usize {
        self.0.dim
    }
    pub fn name(&self) -> &str {
        &self.0.name
    }
    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }
    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }
    pub fn one(&self) -> Vec<u32> {
        self.0.unit.clone()
    }
    pub fn zero(&self) -> Vec<u32> {
        vec![0; self.dim()]
    }
    pub fn generators(&self) -> &[Vec<u32>] {
        &self.0.generators
    }
    pub fn candidate_forms(&self) -> &[Vec<u32>] {
        &self.0.candidate_forms
    }
    pub fn group(&self) -> Option<&Group> {
        self.0.group.as_ref()
    }

    /// Index of the basis vector with this label.
    pub fn label_index(&self, label: &str) -> Result<usize> {
        self.0
            .labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn basis_element(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dim()];
        v[i] = 1;
        v
    }

    /// Nonzero coefficients of `e_i e_j`.
    #[inline]
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.0.products[i * self.0.dim + j]
    }

    /// Dense structure tensor, `(i*d + j)*d + k`.
    pub fn structure(&self) -> Vec<u32> {
        let d = self.dim();
        let mut c = vec![0; d * d * d];
        for ij in 0..d * d {
            for &(k, v) in &self.0.products[ij] {
                c[ij * d + k] = v;
            }
        }
        c
    }

    /// Nonzero structure constants as `(i, j, k, c)`.
    pub fn sparse_structure(&self) -> Vec<(usize, usize, usize, u32)> {
        let d = self.dim();
        (0..d * d)
            .flat_map(|ij| {
                self.0.products[ij]
                    .iter()
                    .map(move |&(k, c)| (ij / d, ij % d, k, c))
            })
            .collect()
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let d = self.dim();
        let p = self.field().modulus() as u64;
        let mut acc = vec![0u64; d];
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in y.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let ab = a as u64 * b as u64 % p;
                for &(k, c) in self.basis_product(i, j) {
                    acc[k] += ab * c as u64;
                }
            }
            if i % 1024 == 1023 {
                acc.iter_mut().for_each(|v| *v %= p);
            }
        }
        acc.into_iter().map(|v| (v % p) as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        x.iter().zip(y).map(|(&a, &b)| f.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let f = self.field();
        x.iter().zip(y).map(|(&a, &b)| f.sub(a, b)).collect()
    }

    pub fn scale(&self, c: u32, x: &[u32]) -> Vec<u32> {
        let f = self.field();
        x.iter().map(|&a| f.mul(c, a)).collect()
    }

    pub fn pow(&self, x: &[u32], e: usize) -> Vec<u32> {
        (0..e).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    pub fn is_zero_element(x: &[u32]) -> bool {
        x.iter().all(|&a| a == 0)
    }

    /// Matrix of `v ↦ x v`.
    pub fn left_mult(&self, x: &[u32]) -> FpMatrix {
        let d = self.dim();
        let f = self.field();
        let mut m = FpMatrix::zeros(f, d, d);
        for (i, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for j in 0..d {
                for &(k, c) in self.basis_product(i, j) {
                    m.set(k, j, f.add(m.get(k, j), f.mul(a, c)));
                }
            }
        }
        m
    }

    /// Matrix of `v ↦ v x`.
    pub fn right_mult(&self, x: &[u32]) -> FpMatrix {
        let d = self.dim();
        let f = self.field();
        let mut m = FpMatrix::zeros(f, d, d);
        for (j, &a) in x.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for i in 0..d {
                for &(k, c) in self.basis_product(i, j) {
                    m.set(k, i, f.add(m.get(k, i), f.mul(a, c)));
                }
            }
        }
        m
    }

    /// `L_{e_i}` for every basis vector.
    pub fn left_basis_mults(&self) -> &[FpMatrix] {
        self.0.left_basis.get_or_init(|| {
            (0..self.dim())
                .map(|i| self.left_mult(&self.basis_element(i)))
                .collect()
        })
    }

    /// `R_{e_i}` for every basis vector.
    pub fn right_basis_mults(&self) -> &[FpMatrix] {
        self.0.right_basis.get_or_init(|| {
            (0..self.dim())
                .map(|i| self.right_mult(&self.basis_element(i)))
                .collect()
        })
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.dim();
        (0..d).all(|i| (i + 1..d).all(|j| self.basis_product(i, j) == self.basis_product(j, i)))
    }

    pub fn is_central(&self, z: &[u32]) -> bool {
        self.0
            .generators
            .iter()
            .all(|s| self.mul(z, s) == self.mul(s, z))
    }

    /// `Z(A)`: elements commuting with a generating set.
    pub fn center(&self) -> Subspace {
        let d = self.dim();
        let mut rows = Vec::new();
        for s in &self.0.generators {
            let diff = self.right_mult(s).sub(&self.left_mult(s));
            rows.extend(diff.row_vectors());
        }
        if rows.is_empty() {
            return Subspace::full(self.field(), d);
        }
        FpMatrix::from_row_vectors(self.field(), d, &rows).kernel()
    }

    /// Span of all `e_i e_j - e_j e_i`.
    pub fn commutator_subspace(&self) -> Subspace {
        let d = self.dim();
        let f = self.field();
        let mut rr = RowReducer::new(f, d);
        for i in 0..d {
            for j in i + 1..d {
                let a = self.sparse_to_dense(self.basis_product(i, j));
                let b = self.sparse_to_dense(self.basis_product(j, i));
                rr.insert(&self.sub(&a, &b));
            }
        }
        rr.to_subspace()
    }

    pub fn opposite(&self) -> Algebra {
        let d = self.dim();
        let c = self.structure();
        let mut op = vec![0; d * d * d];
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    op[(i * d + j) * d + k] = c[(j * d + i) * d + k];
                }
            }
        }
        let name = match self.name().strip_suffix("^op") {
            Some(n) => n.to_string(),
            None => format!("{}^op", self.name()),
        };
        let spec = AlgebraSpec {
            field: self.field(),
            dim: d,
            structure: op,
            unit: self.one(),
            labels: Some(self.labels().to_vec()),
            name,
            generators: Some(self.generators().to_vec()),
            candidate_forms: self.candidate_forms().to_vec(),
        };
        Algebra::build(spec, ValidationLevel::Generators, self.0.group.clone())
            .expect("opposite of a valid algebra is valid")
    }

    /// The same algebra with an extra candidate Frobenius form.
    pub fn with_candidate_form(&self, form: Vec<u32>) -> Result<Algebra> {
        if form.len() != self.dim() {
            return Err(Error::DimensionMismatch("candidate form length".into()));
        }
        let mut forms = self.candidate_forms().to_vec();
        forms.push(form);
        let spec = AlgebraSpec {
            field: self.field(),
            dim: self.dim(),
            structure: self.structure(),
            unit: self.one(),
            labels: Some(self.labels().to_vec()),
            name: self.name().to_string(),
            generators: Some(self.generators().to_vec()),
            candidate_forms: forms,
        };
        Algebra::build(spec, ValidationLevel::Generators, self.0.group.clone())
    }

    /// The same algebra under another name.
    pub fn renamed(&self, name: impl Into<String>) -> Algebra {
        let spec = AlgebraSpec {
            field: self.field(),
            dim: self.dim(),
            structure: self.structure(),
            unit: self.one(),
            labels: Some(self.labels().to_vec()),
            name: name.into(),
            generators: Some(self.generators().to_vec()),
            candidate_forms: self.candidate_forms().to_vec(),
        };
        Algebra::build(spec, ValidationLevel::Generators, self.0.group.clone())
            .expect("renaming keeps validity")
    }

    /// Structural identity: same field, basis, products and unit.
    pub fn same_as(&self, other: &Algebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.field() == other.field()
                && self.dim() == other.dim()
                && self.0.unit == other.0.unit
                && self.0.products == other.0.products)
    }

    /// A stable 64-bit digest of field, products and unit.
    pub fn fingerprint(&self) -> u64 {
        // FNV-1a
        let mut h: u64 = 0xcbf29ce484222325;
        let mut eat = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= b as u64;
                h = h.wrapping_mul(0x100000001b3);
            }
        };
        eat(self.field().modulus() as u64);
        eat(self.dim() as u64);
        for (i, j, k, c) in self.sparse_structure() {
            eat(i as u64);
            eat(j as u64);
            eat(k as u64);
            eat(c as u64);
        }
        for &u in &self.0.unit {
            eat(u as u64);
        }
        h
    }

    /// Render an element as a linear combination of labels.
    pub fn format_element(&self, x: &[u32]) -> String {
        let f = self.field();
        let terms: Vec<String> = x
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match f.signed(c) {
                1 => self.label(i).to_string(),
                -1 => format!("-{}", self.label(i)),
                s => format!("{s}*{}", self.label(i)),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Algebra) -> bool {
        self.same_as(other)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra({}, dim {} over {})",
            self.name(),
            self.dim(),
            self.field()
        )
    }
}

/// A unital algebra homomorphism, stored as a `dim target × dim source` matrix.
#[derive(Clone, Debug)]
pub struct AlgebraHom {
    source: Algebra,
    target: Algebra,
    matrix: FpMatrix,
}

impl AlgebraHom {
    /// Checks unitality and multiplicativity on all basis pairs.
    pub fn new(source: Algebra, target: Algebra, matrix: FpMatrix) -> Result<Self> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::DimensionMismatch("homomorphism matrix shape".into()));
        }
        if source.field() != target.field() || matrix.field() != source.field() {
            return Err(Error::ModulusMismatch(
                source.field().modulus(),
                target.field().modulus(),
            ));
        }
        if matrix.mul_vec(&source.one()) != target.one() {
            return Err(Error::NotAHomomorphism("unit not preserved".into()));
        }
        let images: Vec<Vec<u32>> = (0..source.dim()).map(|i| matrix.column(i)).collect();
        for i in 0..source.dim() {
            for j in 0..source.dim() {
                let e = source.sparse_to_dense(source.basis_product(i, j));
                if matrix.mul_vec(&e) != target.mul(&images[i], &images[j]) {
                    return Err(Error::NotAHomomorphism(format!(
                        "fails on ({}, {})",
                        source.label(i),
                        source.label(j)
                    )));
                }
            }
        }
        Ok(AlgebraHom {
            source,
            target,
            matrix,
        })
    }

    pub fn source(&self) -> &Algebra {
        &self.source
    }
    pub fn target(&self) -> &Algebra {
        &self.target
    }
    pub fn matrix(&self) -> &FpMatrix {
        &self.matrix
    }
    pub fn apply(&self, x: &[u32]) -> Vec<u32> {
        self.matrix.mul_vec(x)
    }
    pub fn kernel(&self) -> Subspace {
        self.matrix.kernel()
    }
    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> Field {
        Field::new(p).unwrap()
    }

    #[test]
    fn field_as_algebra() {
        let spec = AlgebraSpec::new(f(5), 1, vec![1], vec![1]);
        let a = Algebra::new(spec, ValidationLevel::Full).unwrap();
        assert_eq!(a.dim(), 1);
        assert!(a.is_commutative());
    }

    #[test]
    fn dual_numbers_valid() {
        let spec = AlgebraSpec::from_sparse(
            f(2),
            2,
            &[(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)],
            vec![1, 0],
        )
        .unwrap();
        let a = Algebra::new(spec, ValidationLevel::Full).unwrap();
        assert_eq!(a.left_mult(&[0, 1]).rank(), 1);
        assert!(a.left_mult(&[0, 1]).mul(&a.left_mult(&[0, 1])).is_zero());
        assert_eq!(a.left_mult(&a.one()), FpMatrix::identity(f(2), 2));
    }

    #[test]
    fn associativity_violation_detected() {
        // e0 unit, e1 e1 = e2, e2 e1 = e1: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
        let mut entries = vec![];
        for i in 0..3 {
            entries.push((0, i, i, 1));
            if i > 0 {
                entries.push((i, 0, i, 1));
            }
        }
        entries.push((1, 1, 2, 1));
        entries.push((2, 1, 1, 1));
        let spec = AlgebraSpec::from_sparse(f(3), 3, &entries, vec![1, 0, 0]).unwrap();
        assert_eq!(
            Algebra::new(spec.clone(), ValidationLevel::Full).unwrap_err(),
            Error::AssociativityViolation { i: 1, j: 1, k: 1 }
        );
        assert!(matches!(
            Algebra::new(spec, ValidationLevel::Generators),
            Err(Error::AssociativityViolation { .. })
        ));
    }

    #[test]
    fn unit_violation_detected() {
        let spec = AlgebraSpec::from_sparse(f(2), 2, &[(0, 0, 0, 1)], vec![1, 0]).unwrap();
        assert_eq!(
            Algebra::new(spec, ValidationLevel::Full).unwrap_err(),
            Error::UnitViolation(1)
        );
    }
}
