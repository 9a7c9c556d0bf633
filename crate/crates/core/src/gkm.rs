//! GKM graphs embedded in a rational vector space. Edge weights and lengths
//! are always derived from the vertex coordinates.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use crate::cfunc::{eval_c, CParams, CVector};
use crate::delzant::{is_delzant, is_reflexive};
use crate::error::{Error, Result};
use crate::exact::{
    primitive_direction, solve_scalar_rational, LatticeVector, Rational, RationalPoint,
};
use crate::polytope::{generic_directions, in_degree_census, HVector, Polytope};
use crate::report::{ItemResult, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmVertex {
    pub id: String,
    pub coords: RationalPoint,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GkmGraph {
    ambient_dim: usize,
    degree: usize,
    vertices: Vec<GkmVertex>,
    edges: Vec<(usize, usize)>,
}

/// `r` with `sum of weights = -r v` at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GorensteinCertificate {
    pub r: Rational,
    pub residuals: Vec<RationalPoint>,
}

impl GorensteinCertificate {
    pub fn is_valid(&self) -> bool {
        self.r.is_positive() && self.residuals.iter().all(RationalPoint::is_zero)
    }
}

impl GkmGraph {
    /// Checks only shape: coordinate dimensions, endpoint indices and
    /// self-loops. Everything else is reported by [`validate`].
    pub fn new(
        ambient_dim: usize,
        degree: usize,
        vertices: Vec<GkmVertex>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        if let Some(v) = vertices.iter().find(|v| v.coords.dim() != ambient_dim) {
            return Err(Error::InvalidGraph(format!(
                "vertex {} has {} coordinates, expected {ambient_dim}",
                v.id,
                v.coords.dim()
            )));
        }
        let mut ids = BTreeSet::new();
        if let Some(v) = vertices.iter().find(|v| !ids.insert(&v.id)) {
            return Err(Error::InvalidGraph(format!("duplicate vertex id {}", v.id)));
        }
        for &(u, v) in &edges {
            if u >= vertices.len() || v >= vertices.len() {
                return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!(
                    "self-loop at {}",
                    vertices[u].id
                )));
            }
        }
        Ok(Self {
            ambient_dim,
            degree,
            vertices,
            edges,
        })
    }

    /// 1-skeleton of any polytope, with vertex ids `v0, v1, ...`.
    pub fn skeleton(p: &Polytope) -> Self {
        let vertices = p
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| GkmVertex {
                id: format!("v{i}"),
                coords: v.clone(),
            })
            .collect();
        let degree = (0..p.vertices().len())
            .map(|v| p.incident_edges(v).len())
            .max()
            .unwrap_or(0);
        Self {
            ambient_dim: p.dim(),
            degree,
            vertices,
            edges: p.edges().to_vec(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn vertices(&self) -> &[GkmVertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.id == id)
    }

    fn coords(&self, v: usize) -> &RationalPoint {
        &self.vertices[v].coords
    }

    /// Primitive weight from `u` towards `v` and the rational length.
    pub fn edge_weight(&self, e: usize) -> Result<(LatticeVector, Rational)> {
        let (u, v) = self.edges[e];
        primitive_direction(&(self.coords(v) - self.coords(u))).map_err(|_| {
            Error::InvalidGraph(format!(
                "edge {}-{} joins coincident points",
                self.vertices[u].id, self.vertices[v].id
            ))
        })
    }

    pub fn length(&self, e: usize) -> Result<Rational> {
        Ok(self.edge_weight(e)?.1)
    }

    pub fn sum_lengths(&self) -> Result<Rational> {
        (0..self.edges.len()).map(|e| self.length(e)).sum()
    }

    /// Weights pointing away from `v`, one per incident edge.
    pub fn weights_at(&self, v: usize) -> Result<Vec<LatticeVector>> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            if a == v || b == v {
                let (w, _) = self.edge_weight(e)?;
                out.push(if a == v { w } else { -&w });
            }
        }
        Ok(out)
    }

    fn edge_directions(&self) -> Vec<RationalPoint> {
        self.edges
            .iter()
            .map(|&(a, b)| self.coords(b) - self.coords(a))
            .collect()
    }
}

/// Degree regularity, pairwise independent weights, simple edges and an
/// injective embedding.
pub fn validate(g: &GkmGraph) -> VerificationReport {
    let mut items = Vec::new();
    let mut seen_pairs = BTreeSet::new();
    for &(u, v) in g.edges() {
        let key = (u.min(v), u.max(v));
        if !seen_pairs.insert(key) {
            items.push(ItemResult::new(
                format!("edge:{}-{}", g.vertices[u].id, g.vertices[v].id),
                false,
                "more than one edge joins this pair",
            ));
        }
    }
    let mut positions: BTreeMap<&RationalPoint, &str> = BTreeMap::new();
    for v in g.vertices() {
        if let Some(other) = positions.insert(&v.coords, &v.id) {
            items.push(ItemResult::new(
                format!("embedding:{}", v.id),
                false,
                format!("same coordinates as {other}"),
            ));
        }
    }
    for (i, vert) in g.vertices().iter().enumerate() {
        let id = format!("v:{}", vert.id);
        let weights = match g.weights_at(i) {
            Ok(w) => w,
            Err(e) => {
                items.push(ItemResult::new(id, false, e.to_string()));
                continue;
            }
        };
        if weights.len() != g.degree() {
            items.push(ItemResult::new(
                id,
                false,
                format!("degree {} instead of {}", weights.len(), g.degree()),
            ));
            continue;
        }
        let parallel = (0..weights.len()).find_map(|a| {
            (a + 1..weights.len())
                .find(|&b| weights[a] == weights[b] || weights[a] == -&weights[b])
                .map(|b| (a, b))
        });
        match parallel {
            Some((a, b)) => items.push(ItemResult::new(
                id,
                false,
                format!("weights {} and {} are parallel", weights[a], weights[b]),
            )),
            None => items.push(ItemResult::new(
                id,
                true,
                format!("{} pairwise independent weights", weights.len()),
            )),
        }
    }
    VerificationReport::from_items("gkm", items)
}

fn require_valid(g: &GkmGraph) -> Result<()> {
    let rep = validate(g);
    match rep.failures().next() {
        None => Ok(()),
        Some(i) => Err(Error::InvalidGraph(format!("{}: {}", i.id, i.detail))),
    }?;
    Ok(())
}

fn weight_sum(g: &GkmGraph, v: usize) -> Result<RationalPoint> {
    Ok(g
        .weights_at(v)?
        .iter()
        .fold(RationalPoint::origin(g.ambient_dim()), |acc, w| {
            &acc + &w.to_point()
        }))
}

/// Weight sum `-v` at every vertex, lattice vertices, and vertex sum zero.
pub fn is_reflexive_graph(g: &GkmGraph) -> Result<VerificationReport> {
    require_valid(g)?;
    let mut items = Vec::new();
    let mut total = RationalPoint::origin(g.ambient_dim());
    for (i, v) in g.vertices().iter().enumerate() {
        let s = weight_sum(g, i)?;
        let target = -&v.coords;
        let lattice = v.coords.to_lattice().is_some();
        items.push(ItemResult::new(
            format!("v:{}", v.id),
            s == target && lattice,
            format!("weight sum {s}, -v = {target}, lattice point: {lattice}"),
        ));
        total = &total + &v.coords;
    }
    items.push(ItemResult::new(
        "vertex-sum",
        total.is_zero(),
        format!("sum of vertices {total}"),
    ));
    Ok(VerificationReport::from_items("reflexive-graph", items))
}

pub fn gorenstein_index(g: &GkmGraph) -> Result<GorensteinCertificate> {
    require_valid(g)?;
    let mut r: Option<Rational> = None;
    for (i, v) in g.vertices().iter().enumerate() {
        if v.coords.is_zero() {
            return Err(Error::InvalidGraph(format!("vertex {} is the origin", v.id)));
        }
        let s = weight_sum(g, i)?;
        let ri = solve_scalar_rational(&v.coords, &-&s).map_err(|_| Error::Inconsistent)?;
        match &r {
            None => r = Some(ri),
            Some(r0) if *r0 != ri => return Err(Error::Inconsistent),
            Some(_) => {}
        }
    }
    let r = r.ok_or_else(|| Error::InvalidGraph("graph has no vertices".into()))?;
    if !r.is_positive() {
        return Err(Error::NonPositive);
    }
    let residuals = (0..g.vertices().len())
        .map(|i| Ok(&weight_sum(g, i)? + &g.coords(i).scale(&r)))
        .collect::<Result<_>>()?;
    Ok(GorensteinCertificate { r, residuals })
}

/// In-degree census, recomputed for three distinct generic directions (the
/// given one first, when present).
pub fn h_vector_graph(g: &GkmGraph, xi: Option<&LatticeVector>) -> Result<HVector> {
    let dirs = g.edge_directions();
    let mut xis: Vec<LatticeVector> = xi.into_iter().cloned().collect();
    for d in generic_directions(g.ambient_dim(), &dirs, 3) {
        if xis.len() == 3 {
            break;
        }
        if !xis.contains(&d) {
            xis.push(d);
        }
    }
    let edges: Vec<(usize, usize, RationalPoint)> = g
        .edges()
        .iter()
        .zip(dirs)
        .map(|(&(a, b), d)| (a, b, d))
        .collect();
    let mut result: Option<HVector> = None;
    for x in &xis {
        let h = in_degree_census(g.vertices().len(), g.degree(), &edges, x)?;
        match &result {
            None => result = Some(h),
            Some(h0) if *h0 != h => return Err(Error::DirectionDependent),
            Some(_) => {}
        }
    }
    Ok(result.expect("at least one direction"))
}

/// `sum l(e) = C(n, h) / r`, with `r = 1` for reflexive graphs.
pub fn verify_graph_corollary(g: &GkmGraph) -> Result<VerificationReport> {
    let cert = gorenstein_index(g).map_err(|e| match e {
        Error::Inconsistent | Error::NonPositive => Error::NotGorenstein,
        other => other,
    })?;
    let h = h_vector_graph(g, None)?;
    let c = eval_c(&CParams::new(g.degree(), None, CVector::H(h.clone())))?;
    let lhs = g.sum_lengths()?;
    let rhs = Rational::from_integer(c.clone()) / &cert.r;
    let items = vec![
        ItemResult::new("index", true, format!("r = {}", cert.r)),
        ItemResult::new("h-vector", true, format!("h = {h}, C(n,h) = {c}")),
    ];
    Ok(VerificationReport::equality(
        "graph-corollary",
        lhs,
        vec![rhs],
        items,
    ))
}

/// The 1-skeleton of a Delzant reflexive polytope.
pub fn from_polytope(p: &Polytope) -> Result<GkmGraph> {
    if !is_delzant(p).overall {
        return Err(Error::NotDelzant);
    }
    if !is_reflexive(p) {
        return Err(Error::NotReflexive);
    }
    Ok(GkmGraph::skeleton(p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn poly(ps: &[&[i64]]) -> Polytope {
        let pts: Vec<RationalPoint> = ps.iter().map(|p| RationalPoint::from_i64s(p)).collect();
        Polytope::from_vertices(&pts).unwrap()
    }

    fn square() -> Polytope {
        poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]])
    }

    fn octahedron_skeleton() -> GkmGraph {
        GkmGraph::skeleton(&poly(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]))
    }

    fn graph(points: &[&[i64]], edges: &[(usize, usize)], degree: usize) -> Result<GkmGraph> {
        let vertices = points
            .iter()
            .enumerate()
            .map(|(i, p)| GkmVertex {
                id: format!("p{i}"),
                coords: RationalPoint::from_i64s(p),
            })
            .collect();
        GkmGraph::new(points[0].len(), degree, vertices, edges.to_vec())
    }

    #[test]
    fn validation() {
        let sq = GkmGraph::skeleton(&square());
        assert!(validate(&sq).pass);
        let oct = octahedron_skeleton();
        assert_eq!(oct.degree(), 4);
        assert_eq!(oct.edges().len(), 12);
        assert!(validate(&oct).pass);

        // the middle vertex sees (1,0) and (-1,0)
        let bad = graph(&[&[0, 0], &[1, 0], &[-1, 0]], &[(0, 1), (0, 2)], 2).unwrap();
        let rep = validate(&bad);
        assert!(!rep.pass);
        assert!(rep.failures().any(|i| i.detail.contains("parallel")));

        let multi = graph(&[&[0, 0], &[1, 0]], &[(0, 1), (1, 0)], 2).unwrap();
        assert!(!validate(&multi).pass);
        assert!(graph(&[&[0, 0]], &[(0, 0)], 0).is_err());
    }

    #[test]
    fn reflexive_graphs() {
        let sq = from_polytope(&square()).unwrap();
        assert!(is_reflexive_graph(&sq).unwrap().pass);
        assert!(!is_reflexive_graph(&octahedron_skeleton()).unwrap().pass);
    }

    #[test]
    fn gorenstein() {
        let cert = gorenstein_index(&octahedron_skeleton()).unwrap();
        assert_eq!(cert.r, rat(4, 1));
        assert!(cert.is_valid());
        let cert = gorenstein_index(&from_polytope(&square()).unwrap()).unwrap();
        assert_eq!(cert.r, rat(1, 1));

        // unit square skeleton is not centred, so residuals disagree
        let off = GkmGraph::skeleton(&poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]));
        assert!(matches!(gorenstein_index(&off), Err(Error::InvalidGraph(_))));
        let shifted = GkmGraph::skeleton(&poly(&[&[1, 1], &[2, 1], &[1, 2], &[2, 2]]));
        assert_eq!(gorenstein_index(&shifted), Err(Error::Inconsistent));
    }

    #[test]
    fn triangle_index() {
        // at (1,0): (-1,1) + (-2,-1) = -3 (1,0)
        let g = graph(&[&[1, 0], &[0, 1], &[-1, -1]], &[(0, 1), (1, 2), (2, 0)], 2).unwrap();
        let cert = gorenstein_index(&g).unwrap();
        assert_eq!(cert.r, rat(3, 1));
        assert!(cert.is_valid());
    }

    #[test]
    fn h_vectors() {
        let sq = GkmGraph::skeleton(&square());
        assert_eq!(h_vector_graph(&sq, None).unwrap(), HVector::from_i64s(&[1, 2, 1]));
        let bad = LatticeVector::from_i64s(&[0, 1]);
        assert_eq!(h_vector_graph(&sq, Some(&bad)), Err(Error::NonGenericDirection));
        let oct = octahedron_skeleton();
        let xi = LatticeVector::from_i64s(&[1, 2, 4]);
        assert_eq!(
            h_vector_graph(&oct, Some(&xi)).unwrap(),
            HVector::from_i64s(&[1, 1, 2, 1, 1])
        );
    }

    #[test]
    fn direction_dependence_is_detected() {
        // a path is not a manifold graph: (1,0) and (1,2) orient it differently
        let g = graph(&[&[0, 0], &[1, 0], &[2, -5]], &[(0, 1), (1, 2)], 2).unwrap();
        let xi = LatticeVector::from_i64s(&[1, 0]);
        assert_eq!(h_vector_graph(&g, Some(&xi)), Err(Error::DirectionDependent));
    }

    #[test]
    fn corollary() {
        let rep = verify_graph_corollary(&octahedron_skeleton()).unwrap();
        assert!(rep.pass, "{rep}");
        assert_eq!(rep.lhs, rat(12, 1));
        let sq = from_polytope(&square()).unwrap();
        let rep = verify_graph_corollary(&sq).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, rat(8, 1));
        let shifted = GkmGraph::skeleton(&poly(&[&[1, 1], &[2, 1], &[1, 2], &[2, 2]]));
        assert_eq!(verify_graph_corollary(&shifted), Err(Error::NotGorenstein));
    }

    #[test]
    fn from_polytope_preconditions() {
        let cube = square().product(&poly(&[&[-1], &[1]]));
        let g = from_polytope(&cube).unwrap();
        assert_eq!(g.sum_lengths().unwrap(), rat(24, 1));
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(from_polytope(&unit), Err(Error::NotReflexive));
        let oct = poly(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]);
        assert_eq!(from_polytope(&oct), Err(Error::NotDelzant));
    }
}
