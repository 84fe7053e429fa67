//! TOML scene files: an algebra, optional group data, named ideals, elements
//! and modules, and the certifications to run.

use std::collections::BTreeMap;
use std::path::Path;

use distab_core::algebra::{
    group_algebra, matrix_algebra, quantum_complete_intersection, truncated_polynomial,
    upper_triangular, Algebra, AlgebraSpec, ValidationLevel,
};
use distab_core::gflinalg::{Field, FpMatrix};
use distab_core::group::{Group, SubgroupHandle};
use distab_core::ideal::{
    augmentation_ideal, ideal_generated, induced_ideal, jacobson_radical, socle_series, Ideal, Side,
};
use distab_core::module::{
    direct_sum, ideal_as_module, quotient_by_ideal, quotient_module, regular_module, submodule,
    syzygy, trivial_module, AModule,
};
use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::CliError;

pub const SCENE_FORMAT: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneFile {
    pub format: u32,
    pub modulus: u64,
    pub name: Option<String>,
    pub algebra: AlgebraDecl,
    pub group: Option<GroupDecl>,
    #[serde(default)]
    pub subgroups: BTreeMap<String, SubgroupDecl>,
    #[serde(default)]
    pub elements: BTreeMap<String, ElementDecl>,
    #[serde(default)]
    pub ideals: BTreeMap<String, IdealDecl>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleDecl>,
    #[serde(default)]
    pub certify: Vec<CertifyDecl>,
    pub enumerate: Option<EnumerateDecl>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "builder", rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraDecl {
    Group,
    Qci {
        q: i64,
        m: usize,
        n: usize,
    },
    Truncated {
        n: usize,
    },
    Matrix {
        n: usize,
    },
    UpperTriangular {
        n: usize,
    },
    Table {
        dim: usize,
        unit: Vec<i64>,
        /// `[i, j, k, c]`: `e_i e_j` has coefficient `c` on `e_k`.
        structure: Vec<[i64; 4]>,
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "builder", rename_all = "kebab-case", deny_unknown_fields)]
pub enum GroupDecl {
    Cyclic {
        n: usize,
    },
    /// `n` is the order of the group.
    Dihedral {
        n: usize,
    },
    Quaternion8,
    Symmetric3,
    Product {
        factors: Vec<GroupDecl>,
    },
    Table {
        table: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum GroupElement {
    Index(usize),
    Label(String),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SubgroupDecl {
    Members { members: Vec<GroupElement> },
    Generated { generators: Vec<GroupElement> },
    Center,
    Commutator,
    Whole,
    Trivial,
}

/// A dense coefficient list, a basis label (or element name), or `{label = coeff}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
pub enum ElementDecl {
    Dense(Vec<i64>),
    Label(String),
    Terms(BTreeMap<String, i64>),
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum IdealDecl {
    Radical,
    RadicalPower {
        n: usize,
    },
    Socle {
        n: usize,
    },
    Induced {
        subgroup: String,
    },
    Augmentation,
    /// Annihilator `r(AzA)` of an element.
    Ann {
        element: ElementDecl,
    },
    RightAnnihilator {
        ideal: String,
    },
    LeftAnnihilator {
        ideal: String,
    },
    Generated {
        generators: Vec<ElementDecl>,
        #[serde(default = "two_sided")]
        side: Side,
    },
}

fn two_sided() -> Side {
    Side::TwoSided
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModuleDecl {
    Regular,
    Trivial,
    Quotient {
        ideal: String,
    },
    Ideal {
        ideal: String,
    },
    /// `A·x / I·A·x`.
    Cyclic {
        generator: ElementDecl,
        modulo: Option<String>,
    },
    Syzygy {
        module: String,
    },
    DirectSum {
        modules: Vec<String>,
    },
    /// One square matrix (list of rows) per algebra basis vector.
    Explicit {
        action: Vec<Vec<Vec<i64>>>,
    },
}

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum CertifyDecl {
    QuotientEmbedding {
        ideal: String,
        #[serde(default)]
        assert_selfinjective: bool,
    },
    SquareZero {
        ideal: String,
        #[serde(default)]
        assert_selfinjective: bool,
    },
    CentralQuotient {
        element: ElementDecl,
    },
    GroupQuotient {
        subgroup: String,
    },
    CentralPSubgroup {
        elements: Vec<ElementDecl>,
        #[serde(default)]
        assert_selfinjective: bool,
    },
    ExtensionObstruction {
        ideal: String,
        #[serde(default)]
        assert_selfinjective: bool,
    },
    GroupExtension {
        subgroup: String,
    },
    ModY {
        module: String,
        #[serde(default)]
        assert_selfinjective: bool,
    },
    OrthogonalFamily {
        modules: Vec<String>,
    },
    Approximations {
        ideal: String,
        module: String,
    },
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnumerateDecl {
    pub samples: Option<usize>,
}

/// A parsed scene with every named object constructed and validated.
pub struct Scene {
    pub name: String,
    pub digest: String,
    pub algebra: Algebra,
    pub group: Option<Group>,
    pub subgroups: BTreeMap<String, SubgroupHandle>,
    pub elements: BTreeMap<String, Vec<u32>>,
    pub ideals: BTreeMap<String, Ideal>,
    pub modules: BTreeMap<String, AModule>,
    pub certify: Vec<CertifyDecl>,
    pub enumerate: EnumerateDecl,
}

fn err(path: impl Into<String>, message: impl ToString) -> CliError {
    CliError::Scene {
        path: path.into(),
        message: message.to_string(),
    }
}

pub fn digest(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

impl Scene {
    pub fn load(path: &Path, validation: Option<ValidationLevel>) -> Result<Scene, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(path.display().to_string(), e))?;
        Scene::parse(&text, validation)
    }

    pub fn parse(text: &str, validation: Option<ValidationLevel>) -> Result<Scene, CliError> {
        let file: SceneFile = toml::from_str(text).map_err(|e| CliError::Toml(e.to_string()))?;
        if file.format != SCENE_FORMAT {
            return Err(err(
                "format",
                format!("unsupported scene format {}", file.format),
            ));
        }
        let field = Field::new(file.modulus).map_err(|e| err("modulus", e))?;
        let group = file
            .group
            .as_ref()
            .map(|g| build_group(g, "group"))
            .transpose()?;
        let algebra = build_algebra(&file, field, group.as_ref(), validation)?;
        let mut b = Builder {
            file: &file,
            algebra: &algebra,
            group: group.as_ref(),
            subgroups: BTreeMap::new(),
            elements: BTreeMap::new(),
            ideals: BTreeMap::new(),
            modules: BTreeMap::new(),
        };
        for name in file.subgroups.keys() {
            b.subgroup(name, &format!("subgroups.{name}"))?;
        }
        for (name, decl) in &file.elements {
            let v = b.element_literal(decl, &format!("elements.{name}"))?;
            b.elements.insert(name.clone(), v);
        }
        for name in file.ideals.keys() {
            b.ideal(name, &mut Vec::new())?;
        }
        for name in file.modules.keys() {
            b.module(name, &mut Vec::new())?;
        }
        let (subgroups, elements, ideals, modules) = (b.subgroups, b.elements, b.ideals, b.modules);
        Ok(Scene {
            name: file
                .name
                .clone()
                .unwrap_or_else(|| algebra.name().to_string()),
            digest: digest(text.as_bytes()),
            algebra,
            group,
            subgroups,
            elements,
            ideals,
            modules,
            certify: file.certify,
            enumerate: file.enumerate.unwrap_or_default(),
        })
    }

    /// Resolve an element given inline or by name.
    pub fn element(&self, decl: &ElementDecl, path: &str) -> Result<Vec<u32>, CliError> {
        if let ElementDecl::Label(name) = decl {
            if let Some(v) = self.elements.get(name) {
                return Ok(v.clone());
            }
        }
        element_from(&self.algebra, decl, path)
    }

    pub fn ideal(&self, name: &str, path: &str) -> Result<&Ideal, CliError> {
        self.ideals
            .get(name)
            .ok_or_else(|| err(path, format!("unknown ideal {name:?}")))
    }

    pub fn module(&self, name: &str, path: &str) -> Result<&AModule, CliError> {
        self.modules
            .get(name)
            .ok_or_else(|| err(path, format!("unknown module {name:?}")))
    }

    pub fn subgroup(&self, name: &str, path: &str) -> Result<&SubgroupHandle, CliError> {
        self.subgroups
            .get(name)
            .ok_or_else(|| err(path, format!("unknown subgroup {name:?}")))
    }
}

fn build_group(decl: &GroupDecl, path: &str) -> Result<Group, CliError> {
    let g = match decl {
        GroupDecl::Cyclic { n } => Group::cyclic(*n),
        GroupDecl::Dihedral { n } => Group::dihedral(*n),
        GroupDecl::Quaternion8 => Ok(Group::quaternion8()),
        GroupDecl::Symmetric3 => Ok(Group::symmetric3()),
        GroupDecl::Product { factors } => {
            let mut acc: Option<Group> = None;
            for (t, f) in factors.iter().enumerate() {
                let h = build_group(f, &format!("{path}.factors[{t}]"))?;
                acc = Some(match acc {
                    None => h,
                    Some(g) => Group::direct_product(&g, &h).map_err(|e| err(path, e))?,
                });
            }
            return acc.ok_or_else(|| err(path, "a product needs at least one factor"));
        }
        GroupDecl::Table { table, labels } => Group::from_table(table.clone(), labels.clone()),
    };
    g.map_err(|e| err(path, e))
}

fn build_algebra(
    file: &SceneFile,
    field: Field,
    group: Option<&Group>,
    validation: Option<ValidationLevel>,
) -> Result<Algebra, CliError> {
    let path = "algebra";
    let a = match &file.algebra {
        AlgebraDecl::Group => {
            let g = group.ok_or_else(|| err(path, "builder \"group\" needs a [group] table"))?;
            group_algebra(g, field)
        }
        AlgebraDecl::Qci { q, m, n } => quantum_complete_intersection(field, *q, *m, *n),
        AlgebraDecl::Truncated { n } => truncated_polynomial(field, *n),
        AlgebraDecl::Matrix { n } => matrix_algebra(field, *n),
        AlgebraDecl::UpperTriangular { n } => upper_triangular(field, *n),
        AlgebraDecl::Table {
            dim,
            unit,
            structure,
            labels,
        } => {
            if unit.len() != *dim {
                return Err(err(
                    "algebra.unit",
                    format!("expected {dim} coefficients, got {}", unit.len()),
                ));
            }
            let entries: Vec<(usize, usize, usize, i64)> = structure
                .iter()
                .enumerate()
                .map(|(t, &[i, j, k, c])| {
                    let idx = |x: i64| {
                        usize::try_from(x)
                            .map_err(|_| err(format!("algebra.structure[{t}]"), "negative index"))
                    };
                    Ok((idx(i)?, idx(j)?, idx(k)?, c))
                })
                .collect::<Result<_, CliError>>()?;
            let unit = unit.iter().map(|&c| field.reduce(c)).collect();
            let mut spec = AlgebraSpec::from_sparse(field, *dim, &entries, unit)
                .map_err(|e| err("algebra.structure", e))?;
            if let Some(l) = labels {
                spec = spec.labels(l.clone());
            }
            if let Some(n) = &file.name {
                spec = spec.name(n.clone());
            }
            let level = validation.unwrap_or_else(|| ValidationLevel::default_for(*dim));
            Algebra::new(spec, level)
        }
    }
    .map_err(|e| err(path, e))?;
    if validation == Some(ValidationLevel::Full) {
        a.revalidate().map_err(|e| err(path, e))?;
    }
    Ok(a)
}

fn element_from(a: &Algebra, decl: &ElementDecl, path: &str) -> Result<Vec<u32>, CliError> {
    let f = a.field();
    match decl {
        ElementDecl::Dense(v) => {
            if v.len() != a.dim() {
                return Err(err(
                    path,
                    format!("expected {} coefficients, got {}", a.dim(), v.len()),
                ));
            }
            Ok(v.iter().map(|&c| f.reduce(c)).collect())
        }
        ElementDecl::Label(l) => label_vector(a, l).map_err(|e| err(path, e)),
        ElementDecl::Terms(terms) => {
            let mut x = a.zero();
            for (l, &c) in terms {
                let v = label_vector(a, l).map_err(|e| err(format!("{path}.{l}"), e))?;
                for (xi, vi) in x.iter_mut().zip(v) {
                    *xi = f.add(*xi, f.mul(f.reduce(c), vi));
                }
            }
            Ok(x)
        }
    }
}

fn label_vector(a: &Algebra, label: &str) -> distab_core::Result<Vec<u32>> {
    if label == "1" {
        return Ok(a.one());
    }
    Ok(a.basis_element(a.label_index(label)?))
}

struct Builder<'a> {
    file: &'a SceneFile,
    algebra: &'a Algebra,
    group: Option<&'a Group>,
    subgroups: BTreeMap<String, SubgroupHandle>,
    elements: BTreeMap<String, Vec<u32>>,
    ideals: BTreeMap<String, Ideal>,
    modules: BTreeMap<String, AModule>,
}

impl Builder<'_> {
    fn group_element(&self, g: &Group, e: &GroupElement, path: &str) -> Result<usize, CliError> {
        match e {
            GroupElement::Index(i) if *i < g.order() => Ok(*i),
            GroupElement::Index(i) => Err(err(
                path,
                format!("element {i} outside a group of order {}", g.order()),
            )),
            GroupElement::Label(l) => g
                .labels()
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| err(path, format!("unknown group element {l:?}"))),
        }
    }

    fn subgroup(&mut self, name: &str, path: &str) -> Result<(), CliError> {
        let g = self
            .group
            .ok_or_else(|| err(path, "subgroups need a [group] table"))?;
        let decl = &self.file.subgroups[name];
        let list = |b: &Self, xs: &[GroupElement], key: &str| -> Result<Vec<usize>, CliError> {
            xs.iter()
                .enumerate()
                .map(|(t, e)| b.group_element(g, e, &format!("{path}.{key}[{t}]")))
                .collect()
        };
        let h = match decl {
            SubgroupDecl::Members { members } => g
                .subgroup(&list(self, members, "members")?)
                .map_err(|e| err(path, e))?,
            SubgroupDecl::Generated { generators } => {
                g.generated_subgroup(&list(self, generators, "generators")?)
            }
            SubgroupDecl::Center => g.center(),
            SubgroupDecl::Commutator => g.commutator_subgroup(),
            SubgroupDecl::Whole => g.whole(),
            SubgroupDecl::Trivial => g.trivial_subgroup(),
        };
        self.subgroups.insert(name.to_string(), h);
        Ok(())
    }

    fn element_literal(&self, decl: &ElementDecl, path: &str) -> Result<Vec<u32>, CliError> {
        element_from(self.algebra, decl, path)
    }

    fn element(&self, decl: &ElementDecl, path: &str) -> Result<Vec<u32>, CliError> {
        if let ElementDecl::Label(name) = decl {
            if let Some(v) = self.elements.get(name) {
                return Ok(v.clone());
            }
        }
        self.element_literal(decl, path)
    }

    fn ideal(&mut self, name: &str, stack: &mut Vec<String>) -> Result<Ideal, CliError> {
        if let Some(i) = self.ideals.get(name) {
            return Ok(i.clone());
        }
        let path = format!("ideals.{name}");
        let decl = self.file.ideals.get(name).ok_or_else(|| {
            err(
                stack.last().cloned().unwrap_or_default(),
                format!("unknown ideal {name:?}"),
            )
        })?;
        if stack.iter().any(|s| s == name) {
            return Err(err(&path, "ideal definitions form a cycle"));
        }
        stack.push(name.to_string());
        let a = self.algebra;
        let core = |e| err(&path, e);
        let ideal = match decl {
            IdealDecl::Radical => jacobson_radical(a).map_err(core)?,
            IdealDecl::RadicalPower { n } => jacobson_radical(a)
                .and_then(|j| j.power(*n))
                .map_err(core)?,
            IdealDecl::Socle { n } => {
                if *n == 0 {
                    Ideal::zero(a)
                } else {
                    let series = socle_series(a).map_err(core)?;
                    series
                        .get(n - 1)
                        .or(series.last())
                        .cloned()
                        .ok_or_else(|| err(&path, "empty socle series"))?
                }
            }
            IdealDecl::Induced { subgroup } => {
                let h = self.subgroups.get(subgroup).ok_or_else(|| {
                    err(
                        format!("{path}.subgroup"),
                        format!("unknown subgroup {subgroup:?}"),
                    )
                })?;
                induced_ideal(a, h).map_err(core)?
            }
            IdealDecl::Augmentation => augmentation_ideal(a).map_err(core)?,
            IdealDecl::Ann { element } => {
                let z = self.element(element, &format!("{path}.element"))?;
                ideal_generated(a, &[z], Side::TwoSided)
                    .map_err(core)?
                    .right_annihilator()
            }
            IdealDecl::RightAnnihilator { ideal } => self.ideal(ideal, stack)?.right_annihilator(),
            IdealDecl::LeftAnnihilator { ideal } => self.ideal(ideal, stack)?.left_annihilator(),
            IdealDecl::Generated { generators, side } => {
                let gens = generators
                    .iter()
                    .enumerate()
                    .map(|(t, g)| self.element(g, &format!("{path}.generators[{t}]")))
                    .collect::<Result<Vec<_>, _>>()?;
                ideal_generated(a, &gens, *side).map_err(core)?
            }
        };
        stack.pop();
        self.ideals.insert(name.to_string(), ideal.clone());
        Ok(ideal)
    }

    fn module(&mut self, name: &str, stack: &mut Vec<String>) -> Result<AModule, CliError> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let path = format!("modules.{name}");
        let decl = self.file.modules.get(name).ok_or_else(|| {
            err(
                stack.last().cloned().unwrap_or_default(),
                format!("unknown module {name:?}"),
            )
        })?;
        if stack.iter().any(|s| s == name) {
            return Err(err(&path, "module definitions form a cycle"));
        }
        stack.push(name.to_string());
        let a = self.algebra;
        let core = |e| err(&path, e);
        let named_ideal = |b: &Self, i: &str| {
            b.ideals
                .get(i)
                .cloned()
                .ok_or_else(|| err(format!("{path}.ideal"), format!("unknown ideal {i:?}")))
        };
        let m = match decl {
            ModuleDecl::Regular => regular_module(a),
            ModuleDecl::Trivial => trivial_module(a).map_err(core)?,
            ModuleDecl::Quotient { ideal } => {
                quotient_by_ideal(&named_ideal(self, ideal)?).map_err(core)?
            }
            ModuleDecl::Ideal { ideal } => {
                ideal_as_module(&named_ideal(self, ideal)?).map_err(core)?
            }
            ModuleDecl::Cyclic { generator, modulo } => {
                let x = self.element(generator, &format!("{path}.generator"))?;
                let reg = regular_module(a);
                let ax = submodule(&reg, &reg.span_submodule(&[x])).map_err(core)?;
                match modulo {
                    None => ax,
                    Some(i) => {
                        let i = named_ideal(self, i)?;
                        quotient_module(&ax, &ax.ideal_times(&i)).map_err(core)?
                    }
                }
            }
            ModuleDecl::Syzygy { module } => syzygy(&self.module(module, stack)?),
            ModuleDecl::DirectSum { modules } => {
                let mut acc: Option<AModule> = None;
                for m in modules {
                    let next = self.module(m, stack)?;
                    acc = Some(match acc {
                        None => next,
                        Some(prev) => direct_sum(&prev, &next).map_err(core)?,
                    });
                }
                acc.ok_or_else(|| err(&path, "a direct sum needs at least one summand"))?
            }
            ModuleDecl::Explicit { action } => {
                let f = a.field();
                let mats = action
                    .iter()
                    .enumerate()
                    .map(|(t, rows)| {
                        FpMatrix::from_rows(f, rows)
                            .map_err(|e| err(format!("{path}.action[{t}]"), e))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                AModule::new(a, mats, name).map_err(core)?
            }
        };
        stack.pop();
        let m = m.renamed(name);
        self.modules.insert(name.to_string(), m.clone());
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(body: &str) -> Result<Scene, CliError> {
        Scene::parse(body, None)
    }

    fn path_of(e: CliError) -> String {
        match e {
            CliError::Scene { path, .. } => path,
            other => panic!("expected a positioned error, got {other}"),
        }
    }

    #[test]
    fn group_scene_constructions() {
        let s = parse(
            r#"
format = 1
modulus = 2
[algebra]
builder = "group"
[group]
builder = "cyclic"
n = 4
[subgroups]
c2 = { kind = "generated", generators = [2] }
whole = { kind = "whole" }
[elements]
sigma = { "1" = 1, "a^2" = 1 }
[ideals]
induced = { kind = "induced", subgroup = "c2" }
aug = { kind = "augmentation" }
r = { kind = "right-annihilator", ideal = "induced" }
sig = { kind = "generated", generators = ["sigma"] }
zero = { kind = "socle", n = 0 }
[modules]
k = { kind = "trivial" }
q = { kind = "quotient", ideal = "induced" }
om = { kind = "syzygy", module = "q" }
both = { kind = "direct-sum", modules = ["k", "q"] }
"#,
        );
        let s = match s {
            Ok(s) => s,
            Err(e) => panic!("{e}"),
        };
        assert_eq!(s.subgroups["c2"].order(), 2);
        assert_eq!(s.subgroups["whole"].order(), 4);
        assert_eq!(s.ideals["induced"].dim(), 2);
        assert_eq!(s.ideals["aug"].dim(), 3);
        assert_eq!(s.ideals["r"].space(), s.ideals["sig"].space());
        assert!(s.ideals["zero"].is_zero());
        assert_eq!(s.modules["om"].dim(), 2);
        assert_eq!(s.modules["both"].dim(), 3);
        assert_eq!(s.modules["both"].name(), "both");
        assert_eq!(s.digest.len(), 64);
    }

    #[test]
    fn explicit_module_and_labels() {
        let s = parse(
            r#"
format = 1
modulus = 3
[algebra]
builder = "truncated"
n = 2
[modules]
m = { kind = "explicit", action = [[[1, 0], [0, 1]], [[0, 0], [1, 0]]] }
[ideals]
j = { kind = "generated", generators = ["x"] }
"#,
        )
        .map_err(|e| e.to_string())
        .unwrap();
        assert_eq!(s.modules["m"].dim(), 2);
        assert_eq!(s.ideals["j"].dim(), 1);
        assert_eq!(
            s.element(&ElementDecl::Label("1".into()), "e").unwrap(),
            vec![1, 0]
        );
        assert_eq!(
            s.element(&ElementDecl::Dense(vec![-1, 4]), "e").unwrap(),
            vec![2, 1]
        );
    }

    #[test]
    fn positioned_errors() {
        let base = "format = 1\nmodulus = 2\n[algebra]\nbuilder = \"truncated\"\nn = 2\n";
        let e = parse(&format!(
            "{base}[modules]\nm = {{ kind = \"explicit\", action = [[[1]]] }}\n"
        ))
        .err()
        .unwrap();
        assert_eq!(path_of(e), "modules.m");
        let e = parse(&format!(
            "{base}[ideals]\nz = {{ kind = \"ann\", element = {{ w = 1 }} }}\n"
        ))
        .err()
        .unwrap();
        assert_eq!(path_of(e), "ideals.z.element.w");
        let e = parse(&format!(
            "{base}[subgroups]\nh = {{ kind = \"trivial\" }}\n"
        ))
        .err()
        .unwrap();
        assert_eq!(path_of(e), "subgroups.h");
        let e = parse(&format!(
            "{base}[modules]\nq = {{ kind = \"quotient\", ideal = \"nope\" }}\n"
        ))
        .err()
        .unwrap();
        assert_eq!(path_of(e), "modules.q.ideal");
        let e = parse(&format!(
            "{base}[ideals]\ni = {{ kind = \"induced\", subgroup = \"h\" }}\n"
        ))
        .err()
        .unwrap();
        assert_eq!(path_of(e), "ideals.i.subgroup");
    }

    #[test]
    fn unknown_keys_are_rejected() {
        let e =
            parse("format = 1\nmodulus = 2\nextra = 3\n[algebra]\nbuilder = \"matrix\"\nn = 1\n")
                .err()
                .unwrap();
        assert!(matches!(e, CliError::Toml(_)));
    }
}
