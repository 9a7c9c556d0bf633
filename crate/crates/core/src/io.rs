//! JSON forms of polytopes, GKM graphs, reports and tables. Every number is
//! exact: a bare JSON integer when it fits in `i64`, otherwise a string
//! `"p/q"` (or a decimal integer string).

use std::fmt;

use num_traits::{One, ToPrimitive};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bounds::{AdmissibleSet, TableCell};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, Integer, LatticeVector, Rational, RationalPoint};
use crate::gkm::{GkmGraph, GkmVertex};
use crate::polytope::{Halfspace, Polytope};
use crate::report::{ItemResult, VerificationReport};

/// An exact rational as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Num(pub Rational);

impl From<Rational> for Num {
    fn from(r: Rational) -> Self {
        Num(r)
    }
}

impl From<&Integer> for Num {
    fn from(i: &Integer) -> Self {
        Num(Rational::from_integer(i.clone()))
    }
}

impl Num {
    fn integer(&self) -> Result<Integer> {
        if self.0.denom().is_one() {
            Ok(self.0.numer().clone())
        } else {
            Err(Error::Parse(format!("expected an integer, found {}", self.0)))
        }
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match (self.0.denom().is_one(), self.0.numer().to_i64()) {
            (true, Some(v)) => s.serialize_i64(v),
            _ => s.serialize_str(&self.0.to_string()),
        }
    }
}

struct NumVisitor;

impl Visitor<'_> for NumVisitor {
    type Value = Num;

    fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
        f.write_str("an integer or a \"p/q\" string")
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Num, E> {
        Ok(Num(Rational::from_integer(v.into())))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Num, E> {
        Ok(Num(Rational::from_integer(v.into())))
    }

    fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Num, E> {
        Err(E::custom(format!("inexact number {v}; use \"p/q\"")))
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Num, E> {
        parse_rational(v).map(Num).map_err(E::custom)
    }
}

impl<'de> Deserialize<'de> for Num {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Num, D::Error> {
        d.deserialize_any(NumVisitor)
    }
}

fn point_json(p: &RationalPoint) -> Vec<Num> {
    p.coords().iter().cloned().map(Num).collect()
}

fn lattice_json(v: &LatticeVector) -> Vec<Num> {
    v.coords().iter().map(Num::from).collect()
}

fn to_point(c: &[Num]) -> RationalPoint {
    RationalPoint::new(c.iter().map(|x| x.0.clone()).collect())
}

fn to_lattice(c: &[Num]) -> Result<LatticeVector> {
    Ok(LatticeVector::new(
        c.iter().map(Num::integer).collect::<Result<_>>()?,
    ))
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FacetJson {
    pub normal: Vec<Num>,
    pub offset: Num,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub dim: usize,
    #[serde(default)]
    pub vertices: Vec<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<FacetJson>>,
}

impl PolytopeJson {
    pub fn from_polytope(p: &Polytope) -> Self {
        Self {
            dim: p.dim(),
            vertices: p.vertices().iter().map(point_json).collect(),
            facets: Some(
                p.facets()
                    .iter()
                    .map(|h| FacetJson {
                        normal: lattice_json(h.normal()),
                        offset: Num(h.offset().clone()),
                    })
                    .collect(),
            ),
        }
    }

    /// Builds from the vertices when present, otherwise from the facets.
    /// Facets given next to vertices must agree with the recomputed hull.
    pub fn to_polytope(&self) -> Result<Polytope> {
        let halfspaces = match &self.facets {
            Some(fs) => Some(
                fs.iter()
                    .map(|f| {
                        check_len(self.dim, f.normal.len())?;
                        Halfspace::new(to_lattice(&f.normal)?, f.offset.0.clone())
                    })
                    .collect::<Result<Vec<_>>>()?,
            ),
            None => None,
        };
        if self.vertices.is_empty() {
            return match halfspaces {
                Some(hs) => Polytope::from_halfspaces(&hs),
                None => Err(Error::Empty),
            };
        }
        let pts = self
            .vertices
            .iter()
            .map(|v| {
                check_len(self.dim, v.len())?;
                Ok(to_point(v))
            })
            .collect::<Result<Vec<_>>>()?;
        let p = Polytope::from_vertices(&pts)?;
        if let Some(mut hs) = halfspaces {
            hs.sort();
            let mut ours = p.facets().to_vec();
            ours.sort();
            if hs != ours {
                return Err(Error::Parse(
                    "facets do not match the hull of the vertices".into(),
                ));
            }
        }
        Ok(p)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexJson {
    pub id: String,
    pub coords: Vec<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weight: Option<Vec<Num>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<Num>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphJson {
    pub ambient_dim: usize,
    pub degree: usize,
    pub vertices: Vec<VertexJson>,
    pub edges: Vec<EdgeJson>,
}

impl GraphJson {
    /// Emits derived weights and lengths; edges whose weight cannot be
    /// derived are left bare.
    pub fn from_graph(g: &GkmGraph) -> Self {
        let edges = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(a, b))| {
                let derived = g.edge_weight(e).ok();
                EdgeJson {
                    u: g.vertices()[a].id.clone(),
                    v: g.vertices()[b].id.clone(),
                    weight: derived.as_ref().map(|(w, _)| lattice_json(w)),
                    length: derived.map(|(_, l)| Num(l)),
                }
            })
            .collect();
        Self {
            ambient_dim: g.ambient_dim(),
            degree: g.degree(),
            vertices: g
                .vertices()
                .iter()
                .map(|v| VertexJson {
                    id: v.id.clone(),
                    coords: point_json(&v.coords),
                })
                .collect(),
            edges,
        }
    }

    /// Weights and lengths are recomputed; supplied ones must agree.
    pub fn to_graph(&self) -> Result<GkmGraph> {
        let vertices: Vec<GkmVertex> = self
            .vertices
            .iter()
            .map(|v| GkmVertex {
                id: v.id.clone(),
                coords: to_point(&v.coords),
            })
            .collect();
        let find = |id: &str| {
            self.vertices
                .iter()
                .position(|v| v.id == id)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {id}")))
        };
        let edges = self
            .edges
            .iter()
            .map(|e| Ok((find(&e.u)?, find(&e.v)?)))
            .collect::<Result<Vec<_>>>()?;
        let g = GkmGraph::new(self.ambient_dim, self.degree, vertices, edges)?;
        for (i, e) in self.edges.iter().enumerate() {
            if e.weight.is_none() && e.length.is_none() {
                continue;
            }
            let (w, l) = g.edge_weight(i)?;
            if let Some(given) = &e.weight {
                if to_lattice(given)? != w {
                    return Err(Error::InvalidGraph(format!(
                        "edge {}-{}: weight does not match coordinates",
                        e.u, e.v
                    )));
                }
            }
            if let Some(given) = &e.length {
                if given.0 != l {
                    return Err(Error::InvalidGraph(format!(
                        "edge {}-{}: length does not match coordinates",
                        e.u, e.v
                    )));
                }
            }
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ItemJson {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportJson {
    pub identity: String,
    pub pass: bool,
    pub lhs: Num,
    pub rhs: Vec<Num>,
    pub per_item: Vec<ItemJson>,
}

impl From<&VerificationReport> for ReportJson {
    fn from(r: &VerificationReport) -> Self {
        Self {
            identity: r.identity.clone(),
            pass: r.pass,
            lhs: Num(r.lhs.clone()),
            rhs: r.rhs.iter().cloned().map(Num).collect(),
            per_item: r
                .per_item
                .iter()
                .map(|i| ItemJson {
                    id: i.id.clone(),
                    pass: i.pass,
                    detail: i.detail.clone(),
                })
                .collect(),
        }
    }
}

impl From<ReportJson> for VerificationReport {
    fn from(r: ReportJson) -> Self {
        Self {
            identity: r.identity,
            pass: r.pass,
            lhs: r.lhs.0,
            rhs: r.rhs.into_iter().map(|x| x.0).collect(),
            per_item: r
                .per_item
                .into_iter()
                .map(|i| ItemResult::new(i.id, i.pass, i.detail))
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootRequest {
    #[serde(rename = "type")]
    pub root_type: String,
    pub rank: usize,
    #[serde(rename = "I", default)]
    pub subset: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RootResponse {
    #[serde(flatten)]
    pub graph: GraphJson,
    pub h_vector: Vec<Num>,
    pub sum_lengths: Num,
    pub report: ReportJson,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableCellJson {
    pub n: usize,
    pub k0: usize,
    pub coefficients: Vec<Num>,
    pub expression: String,
}

impl From<&TableCell> for TableCellJson {
    fn from(c: &TableCell) -> Self {
        Self {
            n: c.n,
            k0: c.k0,
            coefficients: c.coefficients.iter().map(Num::from).collect(),
            expression: c.expression(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AdmissibleJson {
    pub n: usize,
    pub k0: usize,
    pub unimodal: bool,
    pub bound: Num,
    pub complete: bool,
    /// `(b_2, ..., b_2m)` per admissible vector.
    pub vectors: Vec<Vec<Num>>,
}

impl From<&AdmissibleSet> for AdmissibleJson {
    fn from(s: &AdmissibleSet) -> Self {
        Self {
            n: s.n,
            k0: s.k0,
            unimodal: s.require_unimodal,
            bound: Num::from(&s.bound),
            complete: s.complete,
            vectors: s
                .vectors
                .iter()
                .map(|v| v.iter().map(Num::from).collect())
                .collect(),
        }
    }
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_polytope(s: &str) -> Result<Polytope> {
    serde_json::from_str::<PolytopeJson>(s)
        .map_err(parse_err)?
        .to_polytope()
}

pub fn parse_graph(s: &str) -> Result<GkmGraph> {
    serde_json::from_str::<GraphJson>(s)
        .map_err(parse_err)?
        .to_graph()
}

pub fn parse_root_request(s: &str) -> Result<RootRequest> {
    serde_json::from_str(s).map_err(parse_err)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable")
}

pub fn polytope_to_json(p: &Polytope) -> String {
    to_json(&PolytopeJson::from_polytope(p))
}

pub fn graph_to_json(g: &GkmGraph) -> String {
    to_json(&GraphJson::from_graph(g))
}

pub fn report_to_json(r: &VerificationReport) -> String {
    to_json(&ReportJson::from(r))
}
