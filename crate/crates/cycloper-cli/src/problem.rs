//! Problem files: JSON documents whose scalars are exact expressions.
//!
//! Node indices (diagram cycles, Weyl words, orbit and colour choices) are
//! 1-based, matching the basis labels `E1`, `h2`, ... printed in reports.

use std::collections::BTreeMap;

use cycloper::arith::{parse_expr, Cyclo, CycloField, Field, ParamScalar, RatFunc};
use cycloper::lie::{CartanDatum, ChevalleyAlgebra, DiagramAut, WeylElement};
use cycloper::{ExtraPole, GaudinSite, Site, Symmetry};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSpec {
    Label(String),
    Cartan { cartan: Vec<Vec<i64>> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrderSpec {
    Int(u32),
    Expr(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SiteSpec {
    pub z: String,
    pub coweight: Vec<String>,
    #[serde(default)]
    pub w: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExtraPoleSpec {
    pub x: String,
    #[serde(default)]
    pub y: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaudinSiteSpec {
    pub z: String,
    pub weight: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BetheRootSpec {
    pub x: String,
    pub colour: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GaudinSpec {
    pub sites: Vec<GaudinSiteSpec>,
    #[serde(default)]
    pub roots: Vec<BetheRootSpec>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchSpec {
    Regular,
    Singular,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OptionsSpec {
    /// Node whose `ν`-orbit directs a reproduction.
    pub orbit: Option<usize>,
    pub branch: Option<BranchSpec>,
    /// Integration constant of the Riccati solution on the regular branch.
    pub constant: Option<String>,
    /// `X ∈ n` by basis label; the reproduction seed is `exp(ad X)`.
    #[serde(default)]
    pub g0: BTreeMap<String, String>,
    /// Degree `q` of the cover `t = u^q`.
    pub cover: Option<u32>,
    /// Additional candidate poles for rational integration.
    #[serde(default)]
    pub hints: Vec<String>,
}

/// The document as written on disk.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub algebra: AlgebraSpec,
    /// `T`, the order of the rotation `t ↦ ωt`.
    pub order: OrderSpec,
    #[serde(default)]
    pub cycles: Vec<Vec<usize>>,
    /// Parameter defaults; `null` leaves a parameter free.
    #[serde(default)]
    pub parameters: BTreeMap<String, Option<String>>,
    pub lambda0: Option<Vec<String>>,
    #[serde(default)]
    pub w0: Vec<usize>,
    #[serde(default)]
    pub sites: Vec<SiteSpec>,
    #[serde(default)]
    pub extra_poles: Vec<ExtraPoleSpec>,
    pub gaudin: Option<GaudinSpec>,
    #[serde(default)]
    pub options: OptionsSpec,
}

impl ProblemFile {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("line {}, column {}", e.line(), e.column()), e))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("problem files serialize")
    }
}

/// Scalars the front end can compute over: numbers in `ℚ(ζ)` or rational
/// functions of one free parameter.
pub trait Scalar: CycloField {
    fn from_cyclo(c: &Cyclo) -> Self;

    /// The free parameter, when there is one.
    fn generator() -> Option<Self>;
}

impl Scalar for Cyclo {
    fn from_cyclo(c: &Cyclo) -> Self {
        c.clone()
    }

    fn generator() -> Option<Self> {
        None
    }
}

impl Scalar for ParamScalar {
    fn from_cyclo(c: &Cyclo) -> Self {
        RatFunc::constant(c.clone())
    }

    fn generator() -> Option<Self> {
        Some(RatFunc::t())
    }
}

#[derive(Clone, Debug)]
pub struct GaudinData<K> {
    pub sites: Vec<GaudinSite<K>>,
    pub colours: Vec<usize>,
    pub roots: Vec<K>,
}

#[derive(Clone, Debug)]
pub struct Options<K> {
    pub orbit: Option<usize>,
    pub branch: BranchSpec,
    pub constant: K,
    pub g0: Option<Vec<K>>,
    pub cover: Option<u32>,
    pub hints: Vec<K>,
}

/// A validated problem with every scalar in the working field.
#[derive(Clone, Debug)]
pub struct Problem<K: Scalar> {
    pub label: String,
    pub alg: ChevalleyAlgebra,
    pub sym: Symmetry<K>,
    pub order: u32,
    pub cycles: Vec<Vec<usize>>,
    pub lambda0: Vec<K>,
    pub w0: WeylElement,
    pub sites: Vec<Site<K>>,
    pub extra: Vec<ExtraPole<K>>,
    pub gaudin: Option<GaudinData<K>>,
    pub options: Options<K>,
    pub bound: BTreeMap<String, Cyclo>,
    pub free: Option<String>,
}

impl<K: Scalar> Problem<K> {
    /// Variable names for rendering functions: `t`, then the free parameter.
    pub fn vars(&self) -> Vec<&str> {
        std::iter::once("t").chain(self.free.as_deref()).collect()
    }

    pub fn scalar(&self, k: &K) -> String {
        k.render(&self.vars()[1..], Some(self.order))
    }

    pub fn function(&self, f: &RatFunc<K>) -> String {
        f.render(&self.vars(), Some(self.order))
    }

    /// Candidate poles for integration: the origin, every rotated site and
    /// extra pole, and the user hints.
    pub fn hints(&self) -> Vec<K> {
        let mut out = vec![K::zero()];
        for p in self.sites.iter().map(|s| &s.z).chain(self.extra.iter().map(|e| &e.x)) {
            out.extend(self.sym.orbit(p));
        }
        out.extend(self.options.hints.iter().cloned());
        out
    }

    /// `λ̌₀` as integers, for constructions that need an integral coweight.
    pub fn lambda0_integral(&self) -> Option<Vec<i64>> {
        self.lambda0.iter().map(|c| c.to_i64()).collect()
    }
}

/// A problem over the field selected by its free parameters.
#[derive(Clone, Debug)]
pub enum Loaded {
    Numeric(Problem<Cyclo>),
    Symbolic(Problem<ParamScalar>),
}

/// Reads and validates a problem file. `instantiate` overrides parameter
/// values, as `name = expression` pairs.
pub fn parse_problem(path: &std::path::Path, instantiate: &[(String, String)]) -> Result<Loaded, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    load(&ProblemFile::from_json(&text)?, instantiate)
}

/// Splits `k=v,k2=v2` into pairs.
pub fn parse_instantiation(s: &str) -> Result<Vec<(String, String)>, CliError> {
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (k, v) = p.split_once('=').ok_or_else(|| CliError::Usage(format!("expected name=value, got `{p}`")))?;
            Ok((k.trim().to_string(), v.trim().to_string()))
        })
        .collect()
}

fn zeta_order(name: &str) -> Option<u32> {
    name.strip_prefix("zeta_").and_then(|n| n.parse().ok()).filter(|&n| n > 0)
}

fn reserved(name: &str) -> bool {
    name == "t" || name == "zeta" || name.starts_with("zeta_")
}

fn parse_number(field: &str, s: &str, bound: &BTreeMap<String, Cyclo>) -> Result<Cyclo, CliError> {
    parse_expr(s, &|n: &str| bound.get(n).cloned().or_else(|| zeta_order(n).map(Cyclo::zeta)))
        .map_err(|e| CliError::parse(field, e))
}

pub fn load(file: &ProblemFile, instantiate: &[(String, String)]) -> Result<Loaded, CliError> {
    let mut values = file.parameters.clone();
    for name in values.keys() {
        if reserved(name) || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(CliError::Validation(format!("`{name}` cannot name a parameter")));
        }
    }
    for (name, v) in instantiate {
        match values.get_mut(name) {
            Some(slot) => *slot = Some(v.clone()),
            None => return Err(CliError::Validation(format!("unknown parameter `{name}`"))),
        }
    }
    let mut bound = BTreeMap::new();
    let mut free = Vec::new();
    for (name, v) in &values {
        match v {
            Some(s) => {
                let c = parse_number(&format!("parameters.{name}"), s, &BTreeMap::new())?;
                bound.insert(name.clone(), c);
            }
            None => free.push(name.clone()),
        }
    }
    if free.len() > 1 {
        return Err(CliError::Validation(format!(
            "at most one parameter may stay free, found {}; bind the others with --instantiate",
            free.join(", ")
        )));
    }
    let order = match &file.order {
        OrderSpec::Int(n) => *n,
        OrderSpec::Expr(s) => {
            let v = parse_number("order", s, &bound)?;
            v.to_i64()
                .and_then(|n| u32::try_from(n).ok())
                .ok_or_else(|| CliError::Validation(format!("order `{s}` is not a positive integer")))?
        }
    };
    if order == 0 {
        return Err(CliError::Validation("order must be positive".into()));
    }
    Ok(match free.pop() {
        None => Loaded::Numeric(Builder { file, bound, free: None, order }.build()?),
        Some(name) => Loaded::Symbolic(Builder { file, bound, free: Some(name), order }.build()?),
    })
}

struct Builder<'a> {
    file: &'a ProblemFile,
    bound: BTreeMap<String, Cyclo>,
    free: Option<String>,
    order: u32,
}

impl Builder<'_> {
    fn scalar<K: Scalar>(&self, field: &str, s: &str) -> Result<K, CliError> {
        let resolve = |n: &str| -> Option<K> {
            if self.free.as_deref() == Some(n) {
                return K::generator();
            }
            if let Some(c) = self.bound.get(n) {
                return Some(K::from_cyclo(c));
            }
            if n == "zeta" {
                return Some(K::zeta(self.order));
            }
            zeta_order(n).map(K::zeta)
        };
        parse_expr(s, &resolve).map_err(|e| CliError::parse(field, e))
    }

    fn vector<K: Scalar>(&self, field: &str, v: &[String], rank: usize) -> Result<Vec<K>, CliError> {
        if v.len() != rank {
            return Err(CliError::Validation(format!("{field} has {} entries, expected {rank}", v.len())));
        }
        v.iter().enumerate().map(|(i, s)| self.scalar(&format!("{field}[{i}]"), s)).collect()
    }

    fn build<K: Scalar>(self) -> Result<Problem<K>, CliError> {
        let file = self.file;
        let (label, alg) = match &file.algebra {
            AlgebraSpec::Label(l) => {
                let alg = ChevalleyAlgebra::from_label(l).map_err(|e| CliError::Validation(format!("algebra: {e}")))?;
                (l.clone(), alg)
            }
            AlgebraSpec::Cartan { cartan } => {
                let datum = CartanDatum::new(cartan.clone()).map_err(|e| CliError::Validation(format!("algebra: {e}")))?;
                ("custom".to_string(), ChevalleyAlgebra::build(&datum))
            }
        };
        let rank = alg.rank();
        let node = |field: &str, i: usize| -> Result<usize, CliError> {
            if i == 0 || i > rank {
                return Err(CliError::Validation(format!("{field}: node {i} outside 1..={rank}")));
            }
            Ok(i - 1)
        };
        let word = |field: &str, w: &[usize]| -> Result<WeylElement, CliError> {
            let w: Vec<usize> = w.iter().map(|&i| node(field, i)).collect::<Result<_, _>>()?;
            Ok(WeylElement::from_word(alg.cartan(), &w))
        };

        let cycles: Vec<Vec<usize>> = file
            .cycles
            .iter()
            .map(|c| c.iter().map(|&i| node("cycles", i)).collect())
            .collect::<Result<_, _>>()?;
        let nu = DiagramAut::from_cycles(alg.cartan(), &cycles).map_err(|e| CliError::Validation(format!("cycles: {e}")))?;
        let sym = Symmetry::new(&alg, nu, self.order).map_err(|e| CliError::Validation(format!("symmetry: {e}")))?;

        let lambda0 = match &file.lambda0 {
            Some(v) => self.vector("lambda0", v, rank)?,
            None => vec![K::zero(); rank],
        };
        let w0 = word("w0", &file.w0)?;
        let sites = file
            .sites
            .iter()
            .enumerate()
            .map(|(i, s)| {
                Ok(Site::<K> {
                    z: self.scalar(&format!("sites[{i}].z"), &s.z)?,
                    coweight: self.vector(&format!("sites[{i}].coweight"), &s.coweight, rank)?,
                    w: word(&format!("sites[{i}].w"), &s.w)?,
                })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let extra = file
            .extra_poles
            .iter()
            .enumerate()
            .map(|(i, e)| {
                Ok(ExtraPole::<K> { x: self.scalar(&format!("extra_poles[{i}].x"), &e.x)?, y: word(&format!("extra_poles[{i}].y"), &e.y)? })
            })
            .collect::<Result<Vec<_>, CliError>>()?;
        let points: Vec<(String, K)> = sites
            .iter()
            .enumerate()
            .map(|(i, s)| (format!("sites[{i}].z"), s.z.clone()))
            .chain(extra.iter().enumerate().map(|(i, e)| (format!("extra_poles[{i}].x"), e.x.clone())))
            .collect();
        check_orbits(&sym, &points)?;

        let gaudin = match &file.gaudin {
            None => None,
            Some(g) => {
                let sites = g
                    .sites
                    .iter()
                    .enumerate()
                    .map(|(i, s)| {
                        Ok(GaudinSite::<K> {
                            z: self.scalar(&format!("gaudin.sites[{i}].z"), &s.z)?,
                            weight: self.vector(&format!("gaudin.sites[{i}].weight"), &s.weight, rank)?,
                        })
                    })
                    .collect::<Result<Vec<_>, CliError>>()?;
                let colours = g.roots.iter().map(|r| node("gaudin.roots.colour", r.colour)).collect::<Result<Vec<_>, _>>()?;
                let roots = g
                    .roots
                    .iter()
                    .enumerate()
                    .map(|(i, r)| self.scalar(&format!("gaudin.roots[{i}].x"), &r.x))
                    .collect::<Result<Vec<K>, _>>()?;
                let points: Vec<(String, K)> = sites
                    .iter()
                    .enumerate()
                    .map(|(i, s)| (format!("gaudin.sites[{i}].z"), s.z.clone()))
                    .chain(roots.iter().enumerate().map(|(i, x)| (format!("gaudin.roots[{i}].x"), x.clone())))
                    .collect();
                check_orbits(&sym, &points)?;
                Some(GaudinData { sites, colours, roots })
            }
        };

        let o = &file.options;
        let g0 = if o.g0.is_empty() {
            None
        } else {
            let mut x = vec![K::zero(); alg.dim()];
            for (lab, s) in &o.g0 {
                let k = alg
                    .positive_indices()
                    .into_iter()
                    .find(|&k| alg.basis_label(k) == *lab)
                    .ok_or_else(|| CliError::Validation(format!("options.g0: `{lab}` is not a positive root vector")))?;
                x[k] = self.scalar(&format!("options.g0.{lab}"), s)?;
            }
            Some(x)
        };
        if o.cover == Some(0) {
            return Err(CliError::Validation("options.cover must be positive".into()));
        }
        let options = Options {
            orbit: o.orbit.map(|i| node("options.orbit", i)).transpose()?,
            branch: o.branch.unwrap_or(BranchSpec::Regular),
            constant: match &o.constant {
                Some(s) => self.scalar("options.constant", s)?,
                None => K::zero(),
            },
            g0,
            cover: o.cover,
            hints: o
                .hints
                .iter()
                .enumerate()
                .map(|(i, s)| self.scalar(&format!("options.hints[{i}]"), s))
                .collect::<Result<_, _>>()?,
        };

        Ok(Problem {
            label,
            alg,
            sym,
            order: self.order,
            cycles: file.cycles.clone(),
            lambda0,
            w0,
            sites,
            extra,
            gaudin,
            options,
            bound: self.bound,
            free: self.free,
        })
    }
}

/// Marked points must avoid the origin and lie in pairwise distinct orbits
/// of `t ↦ ωt`.
fn check_orbits<K: Scalar>(sym: &Symmetry<K>, points: &[(String, K)]) -> Result<(), CliError> {
    for (a, (name, p)) in points.iter().enumerate() {
        if p.is_zero() {
            return Err(CliError::Validation(format!("{name} is the origin")));
        }
        for (other, q) in &points[a + 1..] {
            if sym.orbit(q).contains(p) {
                return Err(CliError::Validation(format!("orbit collision: {name} and {other} lie in the same orbit")));
            }
        }
    }
    Ok(())
}
