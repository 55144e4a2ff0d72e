//! JSON and CSV encodings.
//!
//! A scalar is `{"N": n, "coeffs": ["p/q", ...]}` with `φ(n)` power-basis
//! coordinates; rational values are always written with `N = 1`.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{Algebra, Element};
use crate::constructions::NamedConstruction;
use crate::decomp::{Decomposition, ThetaTable};
use crate::error::{Error, Result};
use crate::exactnum::{Cyclotomic, Rational};
use crate::gradedgroup::{CayleyTable, Cocycle};
use crate::identities::MultilinearPoly;

fn format_err(e: impl std::fmt::Display) -> Error {
    Error::Format(e.to_string())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarJson {
    #[serde(rename = "N")]
    pub n: u32,
    pub coeffs: Vec<String>,
}

impl From<&Cyclotomic> for ScalarJson {
    fn from(c: &Cyclotomic) -> Self {
        match c.as_rational() {
            Some(r) => ScalarJson {
                n: 1,
                coeffs: vec![r.to_string()],
            },
            None => ScalarJson {
                n: c.order(),
                coeffs: c.coeffs().iter().map(Rational::to_string).collect(),
            },
        }
    }
}

impl TryFrom<&ScalarJson> for Cyclotomic {
    type Error = Error;

    fn try_from(s: &ScalarJson) -> Result<Self> {
        let coeffs = s
            .coeffs
            .iter()
            .map(|c| c.parse::<Rational>().map_err(format_err))
            .collect::<Result<Vec<_>>>()?;
        Cyclotomic::from_coeffs(s.n, coeffs)
    }
}

fn scalars(v: &[Cyclotomic]) -> Vec<ScalarJson> {
    v.iter().map(ScalarJson::from).collect()
}

fn parse_scalars(v: &[ScalarJson]) -> Result<Vec<Cyclotomic>> {
    v.iter().map(Cyclotomic::try_from).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub unit: Vec<ScalarJson>,
    pub structure: Vec<(usize, usize, usize, ScalarJson)>,
    pub components: Option<Vec<(usize, usize)>>,
}

impl From<&Algebra> for AlgebraJson {
    fn from(a: &Algebra) -> Self {
        AlgebraJson {
            dim: a.dim(),
            n: a.conductor(),
            unit: scalars(a.unit().coords()),
            structure: a
                .structure_entries()
                .map(|(i, j, k, c)| (i, j, k, ScalarJson::from(c)))
                .collect(),
            components: a.components().map(<[_]>::to_vec),
        }
    }
}

impl TryFrom<&AlgebraJson> for Algebra {
    type Error = Error;

    fn try_from(j: &AlgebraJson) -> Result<Self> {
        let entries = j
            .structure
            .iter()
            .map(|(a, b, c, s)| Ok((*a, *b, *c, Cyclotomic::try_from(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Algebra::new(
            j.dim,
            j.n,
            entries,
            parse_scalars(&j.unit)?,
            j.components.clone(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub coords: Vec<ScalarJson>,
}

impl From<&Element> for ElementJson {
    fn from(e: &Element) -> Self {
        ElementJson {
            coords: scalars(e.coords()),
        }
    }
}

impl TryFrom<&ElementJson> for Element {
    type Error = Error;

    fn try_from(j: &ElementJson) -> Result<Self> {
        Ok(Element::new(parse_scalars(&j.coords)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaJson {
    pub m: usize,
    pub entries: Vec<Vec<ScalarJson>>,
    pub constrained: Vec<Vec<bool>>,
}

impl From<&ThetaTable> for ThetaJson {
    fn from(t: &ThetaTable) -> Self {
        ThetaJson {
            m: t.m(),
            entries: t.entries().iter().map(|r| scalars(r)).collect(),
            constrained: t.constrained().to_vec(),
        }
    }
}

impl TryFrom<&ThetaJson> for ThetaTable {
    type Error = Error;

    fn try_from(j: &ThetaJson) -> Result<Self> {
        let entries = j
            .entries
            .iter()
            .map(|r| parse_scalars(r))
            .collect::<Result<Vec<_>>>()?;
        if entries.len() != j.m {
            return Err(Error::Format(format!("expected {} rows", j.m)));
        }
        ThetaTable::new(entries, j.constrained.clone())
    }
}

/// Extra information carried by files written from named constructions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaJson {
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
    #[serde(default)]
    pub ambient_size: Option<u32>,
    #[serde(default)]
    pub block_sizes: Option<Vec<usize>>,
    #[serde(default)]
    pub expected_theta: Option<ThetaJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlgebraSource {
    Path(String),
    Inline(AlgebraJson),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub algebra: AlgebraSource,
    pub components: Vec<Vec<Vec<ScalarJson>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<MetaJson>,
}

impl DecompositionJson {
    pub fn new(d: &Decomposition, algebra: AlgebraSource, meta: Option<MetaJson>) -> Self {
        DecompositionJson {
            algebra,
            components: d
                .components()
                .iter()
                .map(|c| c.iter().map(|e| scalars(e.coords())).collect())
                .collect(),
            meta,
        }
    }

    /// Resolves a path-valued algebra relative to `base`.
    pub fn decode(&self, base: Option<&Path>) -> Result<Decomposition> {
        let algebra = match &self.algebra {
            AlgebraSource::Inline(j) => Algebra::try_from(j)?,
            AlgebraSource::Path(p) => {
                let path = match base {
                    Some(b) if Path::new(p).is_relative() => b.join(p),
                    _ => PathBuf::from(p),
                };
                read_algebra(&path)?
            }
        };
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|v| parse_scalars(v).map(Element::new))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Decomposition::new(Arc::new(algebra), components)
    }
}

pub fn construction_meta(c: &NamedConstruction) -> MetaJson {
    MetaJson {
        name: Some(c.name.clone()),
        labels: Some(c.labels.clone()),
        ambient_size: Some(c.ambient_size),
        block_sizes: (!c.block_sizes.is_empty()).then(|| c.block_sizes.clone()),
        expected_theta: c.expected_theta.as_ref().map(ThetaJson::from),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Format(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    Algebra::try_from(&read_json::<AlgebraJson>(path)?)
}

/// Reads a decomposition file and its metadata.
pub fn read_decomposition(path: &Path) -> Result<(Decomposition, Option<MetaJson>)> {
    let j: DecompositionJson = read_json(path)?;
    let d = j.decode(path.parent())?;
    Ok((d, j.meta))
}

pub fn read_theta(path: &Path) -> Result<ThetaTable> {
    ThetaTable::try_from(&read_json::<ThetaJson>(path)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CayleyJson {
    pub m: usize,
    pub identity: usize,
    pub table: Vec<Vec<usize>>,
}

impl From<&CayleyTable> for CayleyJson {
    fn from(t: &CayleyTable) -> Self {
        CayleyJson {
            m: t.order(),
            identity: t.identity(),
            table: t.table().to_vec(),
        }
    }
}

impl TryFrom<&CayleyJson> for CayleyTable {
    type Error = Error;

    fn try_from(j: &CayleyJson) -> Result<Self> {
        if j.table.len() != j.m {
            return Err(Error::Format(format!("expected {} rows", j.m)));
        }
        CayleyTable::new(j.table.clone(), j.identity)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleJson {
    pub group: CayleyJson,
    pub values: Vec<Vec<ScalarJson>>,
}

impl From<&Cocycle> for CocycleJson {
    fn from(c: &Cocycle) -> Self {
        CocycleJson {
            group: CayleyJson::from(c.group()),
            values: c.values().iter().map(|r| scalars(r)).collect(),
        }
    }
}

impl TryFrom<&CocycleJson> for Cocycle {
    type Error = Error;

    fn try_from(j: &CocycleJson) -> Result<Self> {
        let values = j
            .values
            .iter()
            .map(|r| parse_scalars(r))
            .collect::<Result<Vec<_>>>()?;
        Cocycle::new(CayleyTable::try_from(&j.group)?, values)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    /// One-based.
    pub perm: Vec<usize>,
    pub coeff: ScalarJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

impl From<&MultilinearPoly> for PolyJson {
    fn from(p: &MultilinearPoly) -> Self {
        PolyJson {
            n: p.n,
            terms: p
                .terms
                .iter()
                .map(|(perm, c)| TermJson {
                    perm: perm.iter().map(|i| i + 1).collect(),
                    coeff: c.into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<&PolyJson> for MultilinearPoly {
    type Error = Error;

    fn try_from(j: &PolyJson) -> Result<Self> {
        let terms = j
            .terms
            .iter()
            .map(|t| {
                let mut seen = vec![false; j.n];
                let perm = t
                    .perm
                    .iter()
                    .map(|&i| {
                        if i == 0 || i > j.n || std::mem::replace(&mut seen[i - 1], true) {
                            Err(Error::Format(format!("{:?} is not a permutation", t.perm)))
                        } else {
                            Ok(i - 1)
                        }
                    })
                    .collect::<Result<Vec<_>>>()?;
                if perm.len() != j.n {
                    return Err(Error::Format(format!("{:?} is not a permutation", t.perm)));
                }
                Ok((perm, Cyclotomic::try_from(&t.coeff)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MultilinearPoly { n: j.n, terms })
    }
}

pub fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

pub fn scalar_value(c: &Cyclotomic) -> Value {
    to_value(&ScalarJson::from(c))
}

/// `{"check": name, "pass": bool, "certificate": {...}}`.
pub fn report(check: &str, pass: bool, certificate: Value) -> Value {
    json!({ "check": check, "pass": pass, "certificate": certificate })
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_pretty(v: &Value) -> String {
    // serde_json's default map is ordered by key
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// `zeta(N)^k` for a root of unity, else `vec(N)[c0 c1 ...]`.
pub fn csv_scalar(c: &Cyclotomic) -> String {
    if let Some((t, k)) = c.root_exponent() {
        return format!("zeta({t})^{k}");
    }
    let s = ScalarJson::from(c);
    format!("vec({})[{}]", s.n, s.coeffs.join(" "))
}

pub fn theta_csv(t: &ThetaTable) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in t.entries() {
        w.write_record(row.iter().map(csv_scalar))
            .map_err(format_err)?;
    }
    let bytes = w.into_inner().map_err(format_err)?;
    String::from_utf8(bytes).map_err(format_err)
}
