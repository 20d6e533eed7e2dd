//! Instance documents: one JSON object per instance with a top-level `kind`.
//!
//! ```json
//! {"kind": "toric", "rank": 2, "rays": [[1, 0], [0, 1], [-1, -1]]}
//! {"kind": "p1-group", "family": "dihedral", "parameter": 4}
//! {"kind": "p1-logpair", "multiplicities": [2, 3, 5]}
//! {"kind": "spherical", "n_rank": 1, "t_rank": 2, "pi": [[1, 1]], ...}
//! ```
//!
//! Rationals are bare integers or `"p/q"` strings; floating-point literals are
//! rejected.

use std::fmt;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::exactgeom::{parse_rat, Halfspace, Polytope, QMat, QVec, Rat};
use crate::logcurve::{BranchSignature, GroupFamily};
use crate::measure::{dh_density, PolyDensity};
use crate::spherical::{ColoredEdge, SphericalFanoData, SphericalInput};
use crate::toric::ToricFano;

/// An exact rational literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatLit(pub Rat);

impl From<Rat> for RatLit {
    fn from(r: Rat) -> Self {
        RatLit(r)
    }
}

impl From<i64> for RatLit {
    fn from(n: i64) -> Self {
        RatLit(Rat::from_integer(n.into()))
    }
}

impl Serialize for RatLit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use num_traits::ToPrimitive;
        match self
            .0
            .is_integer()
            .then(|| self.0.to_integer().to_i64())
            .flatten()
        {
            Some(n) => s.serialize_i64(n),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = RatLit;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("an integer or an exact fraction string \"p/q\"")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<RatLit, E> {
        Ok(RatLit::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<RatLit, E> {
        Ok(RatLit(Rat::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<RatLit, E> {
        Err(E::custom(format!(
            "floating-point literal {v} is not allowed; write an exact fraction \"p/q\""
        )))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<RatLit, E> {
        parse_rat(v).map(RatLit).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for RatLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

fn qvec(v: &[RatLit]) -> QVec {
    QVec::new(v.iter().map(|r| r.0.clone()).collect())
}

fn lits(v: &QVec) -> Vec<RatLit> {
    v.iter().cloned().map(RatLit).collect()
}

fn lit_rows(rows: &[&[i64]]) -> Vec<Vec<RatLit>> {
    rows.iter()
        .map(|r| r.iter().map(|&c| RatLit::from(c)).collect())
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToricSpec {
    pub rank: usize,
    pub rays: Vec<Vec<RatLit>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub gen: Vec<RatLit>,
    pub a: RatLit,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HalfspaceSpec {
    pub normal: Vec<RatLit>,
    pub offset: RatLit,
}

/// Exactly one of `vertices` or `halfspaces`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<RatLit>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub halfspaces: Option<Vec<HalfspaceSpec>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub exponents: Vec<u32>,
    pub coeff: RatLit,
}

/// Either explicit `terms`, or `{"construct": "root-squares"}` for the
/// product of squared pairings with the roots outside the Levi subset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DensitySpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<Vec<TermSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construct: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphericalSpec {
    pub n_rank: usize,
    pub t_rank: usize,
    pub pi: Vec<Vec<RatLit>>,
    pub valuation_cone_generators: Vec<Vec<RatLit>>,
    pub colored_fan_edges: Vec<EdgeSpec>,
    pub moment_polytope: PolytopeSpec,
    #[serde(default)]
    pub positive_roots: Vec<Vec<RatLit>>,
    #[serde(default)]
    pub levi_subset: Vec<Vec<RatLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dh: Option<DensitySpec>,
    #[serde(rename = "V", default, skip_serializing_if = "Option::is_none")]
    pub v: Option<RatLit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct P1GroupSpec {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameter: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct P1LogpairSpec {
    pub multiplicities: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum InstanceBody {
    #[serde(rename = "toric")]
    Toric(ToricSpec),
    #[serde(rename = "spherical")]
    Spherical(Box<SphericalSpec>),
    #[serde(rename = "p1-group")]
    P1Group(P1GroupSpec),
    #[serde(rename = "p1-logpair")]
    P1Logpair(P1LogpairSpec),
}

/// A parsed, not yet validated, instance document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceFile {
    pub id: Option<String>,
    pub body: InstanceBody,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Toric,
    Spherical,
    P1Group,
    P1Logpair,
}

impl InstanceKind {
    pub fn as_str(self) -> &'static str {
        match self {
            InstanceKind::Toric => "toric",
            InstanceKind::Spherical => "spherical",
            InstanceKind::P1Group => "p1-group",
            InstanceKind::P1Logpair => "p1-logpair",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "toric" => Ok(InstanceKind::Toric),
            "spherical" => Ok(InstanceKind::Spherical),
            "p1-group" => Ok(InstanceKind::P1Group),
            "p1-logpair" => Ok(InstanceKind::P1Logpair),
            other => Err(Error::Parse(format!(
                "unknown kind {other:?} (expected toric, spherical, p1-group or p1-logpair)"
            ))),
        }
    }
}

/// A validated instance ready for evaluation.
#[derive(Clone, Debug)]
pub enum Instance {
    Toric(ToricFano),
    Spherical(Box<SphericalFanoData>),
    P1Group(GroupFamily),
    P1Logpair(BranchSignature),
}

impl Instance {
    pub fn kind(&self) -> InstanceKind {
        match self {
            Instance::Toric(_) => InstanceKind::Toric,
            Instance::Spherical(_) => InstanceKind::Spherical,
            Instance::P1Group(_) => InstanceKind::P1Group,
            Instance::P1Logpair(_) => InstanceKind::P1Logpair,
        }
    }
}

fn typed<T: serde::de::DeserializeOwned>(value: Value) -> Result<T> {
    serde_path_to_error::deserialize(value).map_err(|e| {
        let path = e.path().to_string();
        Error::Parse(format!("at {path}: {}", e.inner()))
    })
}

impl InstanceFile {
    pub fn parse(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let Value::Object(mut obj) = value else {
            return Err(Error::Parse(
                "instance document must be a JSON object".into(),
            ));
        };
        let kind = match obj.remove("kind") {
            Some(Value::String(k)) => InstanceKind::parse(&k)?,
            Some(_) => return Err(Error::Parse("field \"kind\" must be a string".into())),
            None => return Err(Error::Parse("missing field \"kind\"".into())),
        };
        let id = match obj.remove("id") {
            None => None,
            Some(Value::String(s)) => Some(s),
            Some(_) => return Err(Error::Parse("field \"id\" must be a string".into())),
        };
        let rest = Value::Object(obj);
        let body = match kind {
            InstanceKind::Toric => InstanceBody::Toric(typed(rest)?),
            InstanceKind::Spherical => InstanceBody::Spherical(Box::new(typed(rest)?)),
            InstanceKind::P1Group => InstanceBody::P1Group(typed(rest)?),
            InstanceKind::P1Logpair => InstanceBody::P1Logpair(typed(rest)?),
        };
        Ok(InstanceFile { id, body })
    }

    pub fn to_json(&self) -> String {
        let mut value = serde_json::to_value(&self.body).expect("instance serializes");
        if let (Some(id), Value::Object(obj)) = (&self.id, &mut value) {
            obj.insert("id".into(), Value::String(id.clone()));
        }
        serde_json::to_string_pretty(&value).expect("instance serializes")
    }

    pub fn kind(&self) -> InstanceKind {
        match self.body {
            InstanceBody::Toric(_) => InstanceKind::Toric,
            InstanceBody::Spherical(_) => InstanceKind::Spherical,
            InstanceBody::P1Group(_) => InstanceKind::P1Group,
            InstanceBody::P1Logpair(_) => InstanceKind::P1Logpair,
        }
    }

    pub fn toric(rays: &[&[i64]]) -> Self {
        InstanceFile {
            id: None,
            body: InstanceBody::Toric(ToricSpec {
                rank: rays.first().map_or(0, |r| r.len()),
                rays: lit_rows(rays),
            }),
        }
    }

    /// The toric variety of `rays` presented as spherical data: identity
    /// projection, full valuation cone, unit coefficients, Lebesgue density.
    pub fn toric_as_spherical(rays: &[&[i64]]) -> Self {
        let n = rays.first().map_or(0, |r| r.len());
        let mut cone = Vec::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            cone.push(e.clone());
            e[i] = -1;
            cone.push(e);
        }
        let cone_refs: Vec<&[i64]> = cone.iter().map(Vec::as_slice).collect();
        let identity: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        let id_refs: Vec<&[i64]> = identity.iter().map(Vec::as_slice).collect();
        InstanceFile {
            id: None,
            body: InstanceBody::Spherical(Box::new(SphericalSpec {
                n_rank: n,
                t_rank: n,
                pi: lit_rows(&id_refs),
                valuation_cone_generators: lit_rows(&cone_refs),
                colored_fan_edges: lit_rows(rays)
                    .into_iter()
                    .map(|gen| EdgeSpec {
                        gen,
                        a: RatLit::from(1),
                    })
                    .collect(),
                moment_polytope: PolytopeSpec {
                    vertices: None,
                    halfspaces: Some(
                        lit_rows(rays)
                            .into_iter()
                            .map(|normal| HalfspaceSpec {
                                normal,
                                offset: RatLit::from(-1),
                            })
                            .collect(),
                    ),
                },
                positive_roots: vec![],
                levi_subset: vec![],
                dh: Some(DensitySpec {
                    terms: None,
                    construct: Some("root-squares".into()),
                    exponent: None,
                }),
                v: Some(RatLit::from(1)),
            })),
        }
    }

    pub fn p1_group(family: &str, parameter: Option<u32>) -> Self {
        InstanceFile {
            id: None,
            body: InstanceBody::P1Group(P1GroupSpec {
                family: family.into(),
                parameter,
            }),
        }
    }

    pub fn p1_logpair(multiplicities: &[u32]) -> Self {
        InstanceFile {
            id: None,
            body: InstanceBody::P1Logpair(P1LogpairSpec {
                multiplicities: multiplicities.to_vec(),
            }),
        }
    }

    pub fn with_id(mut self, id: &str) -> Self {
        self.id = Some(id.into());
        self
    }

    /// Validates the document and builds the domain objects.
    pub fn build(&self) -> Result<Instance> {
        match &self.body {
            InstanceBody::Toric(t) => {
                let rays: Vec<QVec> = t.rays.iter().map(|r| qvec(r)).collect();
                if let Some(bad) = rays.iter().find(|r| r.dim() != t.rank) {
                    return Err(Error::InvalidData(format!(
                        "ray {bad} has dimension {}, but rank is {}",
                        bad.dim(),
                        t.rank
                    )));
                }
                Ok(Instance::Toric(ToricFano::new(rays)?))
            }
            InstanceBody::Spherical(s) => Ok(Instance::Spherical(Box::new(build_spherical(s)?))),
            InstanceBody::P1Group(g) => Ok(Instance::P1Group(GroupFamily::parse(
                &g.family,
                g.parameter,
            )?)),
            InstanceBody::P1Logpair(p) => Ok(Instance::P1Logpair(BranchSignature::new(
                p.multiplicities.clone(),
            )?)),
        }
    }
}

impl SphericalSpec {
    /// Inverse of `build` for data that came from vertices and explicit terms.
    pub fn from_data(d: &SphericalFanoData) -> Self {
        SphericalSpec {
            n_rank: d.n_rank(),
            t_rank: d.t_rank(),
            pi: d.pi().rows().iter().map(lits).collect(),
            valuation_cone_generators: d.valuation_cone().generators().iter().map(lits).collect(),
            colored_fan_edges: d
                .colored_fan_edges()
                .iter()
                .map(|e| EdgeSpec {
                    gen: lits(&e.generator),
                    a: RatLit(e.a.clone()),
                })
                .collect(),
            moment_polytope: PolytopeSpec {
                vertices: Some(d.moment_polytope().vertices().iter().map(lits).collect()),
                halfspaces: None,
            },
            positive_roots: d.positive_roots().iter().map(lits).collect(),
            levi_subset: d.levi_subset().iter().map(lits).collect(),
            dh: Some(DensitySpec {
                terms: Some(
                    d.dh()
                        .terms()
                        .iter()
                        .map(|(e, c)| TermSpec {
                            exponents: e.clone(),
                            coeff: RatLit(c.clone()),
                        })
                        .collect(),
                ),
                construct: None,
                exponent: None,
            }),
            v: Some(RatLit(d.v_const().clone())),
        }
    }
}

fn build_spherical(s: &SphericalSpec) -> Result<SphericalFanoData> {
    let rows = |v: &[Vec<RatLit>]| -> Vec<QVec> { v.iter().map(|r| qvec(r)).collect() };
    let pi = QMat::from_rows(rows(&s.pi), s.t_rank)?;
    let moment_polytope = match (&s.moment_polytope.vertices, &s.moment_polytope.halfspaces) {
        (Some(vs), None) => Polytope::from_vertices(s.t_rank, rows(vs))?,
        (None, Some(hs)) => {
            let hs: Vec<Halfspace> = hs
                .iter()
                .map(|h| Halfspace::new(qvec(&h.normal), h.offset.0.clone()))
                .collect();
            Polytope::from_halfspaces(s.t_rank, &hs)?
        }
        _ => {
            return Err(Error::InvalidData(
                "moment_polytope needs exactly one of \"vertices\" or \"halfspaces\"".into(),
            ))
        }
    };
    let positive_roots = rows(&s.positive_roots);
    let levi_subset = rows(&s.levi_subset);
    let dh = match &s.dh {
        None => dh_density(s.t_rank, &positive_roots, &levi_subset, 2)?,
        Some(DensitySpec {
            terms: Some(terms),
            construct: None,
            exponent: None,
        }) => PolyDensity::from_terms(
            s.t_rank,
            terms
                .iter()
                .map(|t| (t.exponents.clone(), t.coeff.0.clone())),
        )?,
        Some(DensitySpec {
            terms: None,
            construct: Some(c),
            exponent,
        }) if c == "root-squares" => dh_density(
            s.t_rank,
            &positive_roots,
            &levi_subset,
            exponent.unwrap_or(2),
        )?,
        Some(_) => {
            return Err(Error::InvalidData(
                "dh must be {\"terms\": [...]} or {\"construct\": \"root-squares\"}".into(),
            ))
        }
    };
    SphericalFanoData::new(SphericalInput {
        n_rank: s.n_rank,
        t_rank: s.t_rank,
        pi,
        valuation_cone_generators: rows(&s.valuation_cone_generators),
        colored_fan_edges: s
            .colored_fan_edges
            .iter()
            .map(|e| ColoredEdge::new(qvec(&e.gen), e.a.0.clone()))
            .collect(),
        moment_polytope,
        positive_roots,
        levi_subset,
        dh,
        v_const: s
            .v
            .as_ref()
            .map_or_else(|| Rat::from_integer(1.into()), |v| v.0.clone()),
    })
}

/// Parses inline rays such as `"1,0;0,1;-1,-1"`.
pub fn parse_rays(s: &str) -> Result<Vec<Vec<i64>>> {
    s.split(';')
        .filter(|r| !r.trim().is_empty())
        .map(|r| {
            r.split(',')
                .map(|c| {
                    c.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad ray coordinate {c:?} in {s:?}")))
                })
                .collect()
        })
        .collect()
}
