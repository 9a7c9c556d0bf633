//! Rational polytopes in both vertex and halfspace form.
//!
//! Conversion between the two descriptions is brute-force double
//! description: facets are found among hyperplanes through `n` affinely
//! independent input points, vertices among solutions of `n` facet
//! equations. That is quadratic-ish in the worst case but exact and plenty
//! fast for the dimensions and vertex counts this crate is meant for.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{
    affine_dim, binomial, cofactor_normal, primitive, primitive_direction, rank, solve_square,
    Integer, LatticeVector, Rational, RationalPoint,
};

/// `{x : <x, normal> <= offset}` with a primitive integer normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Halfspace {
    normal: LatticeVector,
    offset: Rational,
}

impl Halfspace {
    /// Builds a halfspace, rescaling a non-primitive normal (and the offset
    /// with it) so the normal becomes primitive.
    pub fn new(normal: LatticeVector, offset: Rational) -> Result<Self> {
        let (normal, m) = primitive(&normal)?;
        Ok(Self {
            normal,
            offset: offset / Rational::from_integer(m),
        })
    }

    pub fn normal(&self) -> &LatticeVector {
        &self.normal
    }

    pub fn offset(&self) -> &Rational {
        &self.offset
    }

    /// `offset - <x, normal>`; non-negative exactly on the halfspace.
    pub fn slack(&self, x: &RationalPoint) -> Rational {
        &self.offset - x.dot_lattice(&self.normal)
    }
}

/// A nonempty face, identified by the vertices it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub active_facets: Vec<usize>,
    pub vertex_ids: Vec<usize>,
    pub dim: usize,
}

#[derive(Clone, Debug)]
struct FaceLattice {
    faces: Vec<Face>,
    edges: Vec<(usize, usize)>,
    incident_edges: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FVector(pub Vec<Integer>);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HVector(pub Vec<Integer>);

impl FVector {
    pub fn from_i64s(f: &[i64]) -> Self {
        Self(f.iter().map(|&x| Integer::from(x)).collect())
    }

    /// Alternating sum `sum (-1)^i f_i`, including `f_n`.
    pub fn euler_characteristic(&self) -> Integer {
        self.0
            .iter()
            .enumerate()
            .map(|(i, f)| if i % 2 == 0 { f.clone() } else { -f })
            .sum()
    }

    /// Binomial transform to the h-vector (only meaningful for simple
    /// polytopes, but defined for any f-vector).
    pub fn to_h_vector(&self) -> HVector {
        let n = self.0.len() - 1;
        let h = (0..=n)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        let t = binomial(n - i, n - j) * &self.0[n - i];
                        if (j - i) % 2 == 0 {
                            t
                        } else {
                            -t
                        }
                    })
                    .sum()
            })
            .collect();
        HVector(h)
    }
}

impl HVector {
    pub fn from_i64s(h: &[i64]) -> Self {
        Self(h.iter().map(|&x| Integer::from(x)).collect())
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.0.len();
        (0..n).all(|j| self.0[j] == self.0[n - 1 - j])
    }

    /// Non-decreasing up to the middle.
    pub fn is_unimodal(&self) -> bool {
        let n = self.0.len();
        (0..n / 2).all(|i| i + 1 >= n || self.0[i] <= self.0[i + 1])
    }

    pub fn total(&self) -> Integer {
        self.0.iter().sum()
    }
}

fn fmt_tuple(f: &mut fmt::Formatter<'_>, xs: &[Integer]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(f, &self.0)
    }
}

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<RationalPoint>,
    facets: Vec<Halfspace>,
    vertex_facets: Vec<Vec<usize>>,
    lattice: OnceLock<FaceLattice>,
}

impl PartialEq for Polytope {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.vertices == other.vertices && self.facets == other.facets
    }
}

impl Eq for Polytope {}

fn combinations(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn check_dims<'a>(dim: usize, mut it: impl Iterator<Item = usize> + 'a) -> Result<()> {
    match it.find(|&d| d != dim) {
        Some(found) => Err(Error::DimensionMismatch {
            expected: dim,
            found,
        }),
        None => Ok(()),
    }
}

impl Polytope {
    /// Convex hull of a finite point set.
    pub fn from_vertices(points: &[RationalPoint]) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty)?;
        let n = first.dim();
        check_dims(n, points.iter().map(RationalPoint::dim))?;
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let points: Vec<RationalPoint> = points
            .iter()
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        if points.len() < n + 1 || affine_dim(&points) < n {
            return Err(Error::NotFullDimensional);
        }

        // Work on integer coordinates scaled by a common denominator.
        let scale = points
            .iter()
            .fold(Integer::one(), |acc, p| acc.lcm(&p.denominator_lcm()));
        let ints: Vec<LatticeVector> = points
            .iter()
            .map(|p| {
                LatticeVector::new(
                    p.coords()
                        .iter()
                        .map(|c| c.numer() * (&scale / c.denom()))
                        .collect(),
                )
            })
            .collect();

        let mut seen: HashSet<LatticeVector> = HashSet::new();
        let mut facets = Vec::new();
        combinations(ints.len(), n, |c| {
            let base = &ints[c[0]];
            let rows: Vec<Vec<Integer>> = c[1..]
                .iter()
                .map(|&i| (&ints[i] - base).into_coords())
                .collect();
            let normal = cofactor_normal(&rows);
            let Ok((normal, _)) = primitive(&normal) else {
                return;
            };
            let b = normal.dot(base);
            let (mut above, mut below) = (false, false);
            for p in &ints {
                match normal.dot(p).cmp(&b) {
                    std::cmp::Ordering::Greater => above = true,
                    std::cmp::Ordering::Less => below = true,
                    std::cmp::Ordering::Equal => {}
                }
                if above && below {
                    return;
                }
            }
            let (normal, b) = if above { (-&normal, -b) } else { (normal, b) };
            if !seen.insert(normal.clone()) {
                return;
            }
            facets.push(Halfspace {
                normal,
                offset: Rational::new(b, scale.clone()),
            });
        });

        // Keep only points where the active normals have full rank.
        let vertices: Vec<RationalPoint> = points
            .into_iter()
            .filter(|p| {
                let active: Vec<Vec<Rational>> = facets
                    .iter()
                    .filter(|h| h.slack(p).is_zero())
                    .map(|h| h.normal.to_point().coords().to_vec())
                    .collect();
                active.len() >= n && rank(&active) == n
            })
            .collect();
        Ok(Self::assemble(n, vertices, facets))
    }

    /// Intersection of halfspaces; must be bounded and full-dimensional.
    pub fn from_halfspaces(hs: &[Halfspace]) -> Result<Self> {
        let first = hs.first().ok_or(Error::Unbounded)?;
        let n = first.normal.dim();
        check_dims(n, hs.iter().map(|h| h.normal.dim()))?;
        if n == 0 {
            return Err(Error::UnsupportedDimension(0));
        }
        let normals: Vec<Vec<Rational>> = hs
            .iter()
            .map(|h| h.normal.to_point().coords().to_vec())
            .collect();
        if rank(&normals) < n {
            return Err(Error::Unbounded);
        }
        // A pointed recession cone is nontrivial iff it has an extreme ray,
        // which lies on n - 1 independent constraint hyperplanes.
        let mut unbounded = false;
        combinations(hs.len(), n - 1, |c| {
            if unbounded {
                return;
            }
            let rows: Vec<Vec<Integer>> = c
                .iter()
                .map(|&i| hs[i].normal.coords().to_vec())
                .collect();
            let d = cofactor_normal(&rows);
            if d.is_zero() {
                return;
            }
            for ray in [d.clone(), -&d] {
                if hs.iter().all(|h| !h.normal.dot(&ray).is_positive()) {
                    unbounded = true;
                }
            }
        });
        if unbounded {
            return Err(Error::Unbounded);
        }

        let mut vertices = BTreeSet::new();
        combinations(hs.len(), n, |c| {
            let a: Vec<Vec<Rational>> = c.iter().map(|&i| normals[i].clone()).collect();
            let b: Vec<Rational> = c.iter().map(|&i| hs[i].offset.clone()).collect();
            if let Some(x) = solve_square(&a, &b) {
                let x = RationalPoint::new(x);
                if hs.iter().all(|h| !h.slack(&x).is_negative()) {
                    vertices.insert(x);
                }
            }
        });
        if vertices.is_empty() {
            return Err(Error::Empty);
        }
        let vertices: Vec<RationalPoint> = vertices.into_iter().collect();
        Self::from_vertices(&vertices)
    }

    /// Builds the struct from an already irredundant description.
    fn assemble(dim: usize, mut vertices: Vec<RationalPoint>, mut facets: Vec<Halfspace>) -> Self {
        vertices.sort();
        facets.sort();
        let vertex_facets = vertices
            .iter()
            .map(|v| {
                facets
                    .iter()
                    .enumerate()
                    .filter(|(_, h)| h.slack(v).is_zero())
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Self {
            dim,
            vertices,
            facets,
            vertex_facets,
            lattice: OnceLock::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn vertex(&self, id: usize) -> &RationalPoint {
        &self.vertices[id]
    }

    pub fn facets(&self) -> &[Halfspace] {
        &self.facets
    }

    /// Facets containing the given vertex.
    pub fn facets_at(&self, vertex: usize) -> &[usize] {
        &self.vertex_facets[vertex]
    }

    pub fn vertex_index(&self, p: &RationalPoint) -> Option<usize> {
        self.vertices.binary_search(p).ok()
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        self.facets.iter().all(|h| !h.slack(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &RationalPoint) -> bool {
        self.facets.iter().all(|h| h.slack(x).is_positive())
    }

    fn lattice(&self) -> &FaceLattice {
        self.lattice.get_or_init(|| self.compute_lattice())
    }

    fn compute_lattice(&self) -> FaceLattice {
        let facet_sets: Vec<Vec<usize>> = (0..self.facets.len())
            .map(|f| {
                (0..self.vertices.len())
                    .filter(|&v| self.vertex_facets[v].contains(&f))
                    .collect()
            })
            .collect();
        let all: Vec<usize> = (0..self.vertices.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        seen.insert(all);
        let mut queue: Vec<Vec<usize>> = Vec::new();
        for s in &facet_sets {
            if seen.insert(s.clone()) {
                queue.push(s.clone());
            }
        }
        while let Some(face) = queue.pop() {
            for s in &facet_sets {
                let inter: Vec<usize> = face.iter().copied().filter(|v| s.contains(v)).collect();
                if !inter.is_empty() && seen.insert(inter.clone()) {
                    queue.push(inter);
                }
            }
        }
        let mut faces: Vec<Face> = seen
            .into_iter()
            .map(|vertex_ids| {
                let dim = affine_dim(vertex_ids.iter().map(|&v| &self.vertices[v]));
                let active_facets = (0..self.facets.len())
                    .filter(|&f| vertex_ids.iter().all(|v| self.vertex_facets[*v].contains(&f)))
                    .collect();
                Face {
                    active_facets,
                    vertex_ids,
                    dim,
                }
            })
            .collect();
        faces.sort_by(|a, b| (a.dim, &a.vertex_ids).cmp(&(b.dim, &b.vertex_ids)));
        let edges: Vec<(usize, usize)> = faces
            .iter()
            .filter(|f| f.dim == 1)
            .map(|f| (f.vertex_ids[0], f.vertex_ids[1]))
            .collect();
        let mut incident_edges = vec![Vec::new(); self.vertices.len()];
        for (i, &(a, b)) in edges.iter().enumerate() {
            incident_edges[a].push(i);
            incident_edges[b].push(i);
        }
        FaceLattice {
            faces,
            edges,
            incident_edges,
        }
    }

    /// All nonempty faces, sorted by dimension then vertex set. The index in
    /// this list is the face id used elsewhere.
    pub fn faces(&self) -> &[Face] {
        &self.lattice().faces
    }

    pub fn faces_of_dim(&self, d: usize) -> impl Iterator<Item = (usize, &Face)> {
        self.faces().iter().enumerate().filter(move |(_, f)| f.dim == d)
    }

    /// Edges as vertex id pairs `(a, b)` with `a < b`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.lattice().edges
    }

    /// Indices into `edges()` of the edges at a vertex.
    pub fn incident_edges(&self, vertex: usize) -> &[usize] {
        &self.lattice().incident_edges[vertex]
    }

    pub fn neighbors(&self, vertex: usize) -> Vec<usize> {
        self.incident_edges(vertex)
            .iter()
            .map(|&e| {
                let (a, b) = self.edges()[e];
                if a == vertex {
                    b
                } else {
                    a
                }
            })
            .collect()
    }

    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        let key = (a.min(b), a.max(b));
        self.edges().iter().position(|&e| e == key)
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = vec![Integer::zero(); self.dim + 1];
        for face in self.faces() {
            f[face.dim] += 1;
        }
        FVector(f)
    }

    pub fn h_vector_comb(&self) -> HVector {
        self.f_vector().to_h_vector()
    }

    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len()).all(|v| self.incident_edges(v).len() == self.dim)
    }

    fn edge_directions(&self) -> Vec<RationalPoint> {
        self.edges()
            .iter()
            .map(|&(a, b)| &self.vertices[b] - &self.vertices[a])
            .collect()
    }

    /// The first `count` directions of the deterministic generic sequence
    /// that are not orthogonal to any edge.
    pub fn generic_directions(&self, count: usize) -> Vec<LatticeVector> {
        generic_directions(self.dim, &self.edge_directions(), count)
    }

    /// In-degree census after orienting every edge towards increasing
    /// `<., xi>`.
    pub fn h_vector_directed(&self, xi: Option<&LatticeVector>) -> Result<HVector> {
        if !self.is_simple() {
            return Err(Error::NotSimple);
        }
        let xi = match xi {
            Some(xi) => xi.clone(),
            None => self.generic_directions(1).remove(0),
        };
        let edges: Vec<(usize, usize, RationalPoint)> = self
            .edges()
            .iter()
            .map(|&(a, b)| (a, b, &self.vertices[b] - &self.vertices[a]))
            .collect();
        in_degree_census(self.vertices.len(), self.dim, &edges, &xi)
    }

    /// Primitive lattice vectors from `vertex` along each incident edge, in
    /// the order of `incident_edges`.
    pub fn vertex_weights(&self, vertex: usize) -> Vec<LatticeVector> {
        self.neighbors(vertex)
            .into_iter()
            .map(|u| {
                let d = &self.vertices[u] - &self.vertices[vertex];
                primitive_direction(&d).expect("distinct vertices").0
            })
            .collect()
    }

    /// Polar dual `{y : <x, y> >= -1 for all x}`.
    pub fn dual(&self) -> Result<Polytope> {
        if !self.facets.iter().all(|h| h.offset.is_positive()) {
            return Err(Error::OriginNotInterior);
        }
        let points: Vec<RationalPoint> = self
            .facets
            .iter()
            .map(|h| {
                h.normal
                    .to_point()
                    .scale(&(-Rational::one() / &h.offset))
            })
            .collect();
        Self::from_vertices(&points)
    }

    pub fn dilate(&self, r: &Integer) -> Result<Polytope> {
        if !r.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "dilation factor must be positive, got {r}"
            )));
        }
        let r = Rational::from_integer(r.clone());
        let vertices = self.vertices.iter().map(|v| v.scale(&r)).collect();
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset * &r,
            })
            .collect();
        Ok(Self::assemble(self.dim, vertices, facets))
    }

    pub fn translate(&self, t: &LatticeVector) -> Result<Polytope> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: t.dim(),
            });
        }
        let tp = t.to_point();
        let vertices = self.vertices.iter().map(|v| v + &tp).collect();
        let facets = self
            .facets
            .iter()
            .map(|h| Halfspace {
                normal: h.normal.clone(),
                offset: &h.offset + Rational::from_integer(h.normal.dot(t)),
            })
            .collect();
        Ok(Self::assemble(self.dim, vertices, facets))
    }

    /// Cartesian product `self x other` in the direct-sum lattice.
    pub fn product(&self, other: &Polytope) -> Polytope {
        let (n, m) = (self.dim, other.dim);
        let mut vertices = Vec::new();
        for a in &self.vertices {
            for b in &other.vertices {
                let mut c = a.coords().to_vec();
                c.extend_from_slice(b.coords());
                vertices.push(RationalPoint::new(c));
            }
        }
        let pad = |h: &Halfspace, before: usize, after: usize| {
            let mut c = vec![Integer::zero(); before];
            c.extend_from_slice(h.normal.coords());
            c.extend(std::iter::repeat_n(Integer::zero(), after));
            Halfspace {
                normal: LatticeVector::new(c),
                offset: h.offset.clone(),
            }
        };
        let facets = self
            .facets
            .iter()
            .map(|h| pad(h, 0, m))
            .chain(other.facets.iter().map(|h| pad(h, n, 0)))
            .collect();
        Self::assemble(n + m, vertices, facets)
    }

    /// Lattice points strictly inside, by bounding box scan.
    pub fn interior_lattice_points(&self) -> Vec<LatticeVector> {
        let n = self.dim;
        let lo: Vec<Integer> = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].floor().to_integer()).min().unwrap())
            .collect();
        let hi: Vec<Integer> = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].ceil().to_integer()).max().unwrap())
            .collect();
        let mut out = Vec::new();
        let mut cur = lo.clone();
        loop {
            let p = LatticeVector::new(cur.clone());
            if self.contains_in_interior(&p.to_point()) {
                out.push(p);
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if cur[i] < hi[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = lo[i].clone();
                i += 1;
            }
        }
    }
}

/// Shared by polytopes and GKM graphs: `edges` carry `(tail, head, head - tail)`.
pub(crate) fn in_degree_census(
    vertex_count: usize,
    degree: usize,
    edges: &[(usize, usize, RationalPoint)],
    xi: &LatticeVector,
) -> Result<HVector> {
    let mut indeg = vec![0usize; vertex_count];
    for (a, b, d) in edges {
        if d.dim() != xi.dim() {
            return Err(Error::DimensionMismatch {
                expected: d.dim(),
                found: xi.dim(),
            });
        }
        let s = d.dot_lattice(xi);
        if s.is_zero() {
            return Err(Error::NonGenericDirection);
        }
        indeg[if s.is_positive() { *b } else { *a }] += 1;
    }
    let mut h = vec![Integer::zero(); degree + 1];
    for k in indeg {
        if k > degree {
            return Err(Error::InvalidGraph(format!(
                "vertex has in-degree {k} above degree {degree}"
            )));
        }
        h[k] += 1;
    }
    Ok(HVector(h))
}

/// Walks `(1, B, B^2, ..., B^(n-1))` for primes `B = 2, 3, 5, ...` and keeps
/// the first `count` that are orthogonal to none of `directions`.
pub fn generic_directions(
    dim: usize,
    directions: &[RationalPoint],
    count: usize,
) -> Vec<LatticeVector> {
    let mut out = Vec::with_capacity(count);
    let mut base: u64 = 1;
    while out.len() < count {
        base += 1;
        if (2..base).any(|p| p * p <= base && base.is_multiple_of(p)) {
            continue;
        }
        let b = Integer::from(base);
        let mut coords = Vec::with_capacity(dim);
        let mut pow = Integer::one();
        for _ in 0..dim {
            coords.push(pow.clone());
            pow *= &b;
        }
        let xi = LatticeVector::new(coords);
        if directions.iter().all(|d| !d.dot_lattice(&xi).is_zero()) {
            out.push(xi);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};

    fn pts(ps: &[&[i64]]) -> Vec<RationalPoint> {
        ps.iter().map(|p| RationalPoint::from_i64s(p)).collect()
    }

    fn hs(n: &[i64], off: i64) -> Halfspace {
        Halfspace::new(LatticeVector::from_i64s(n), rat(off, 1)).unwrap()
    }

    fn cube(n: usize) -> Polytope {
        let mut ps = Vec::new();
        for mask in 0..(1u32 << n) {
            ps.push(RationalPoint::from_i64s(
                &(0..n)
                    .map(|i| if mask >> i & 1 == 1 { 1 } else { -1 })
                    .collect::<Vec<_>>(),
            ));
        }
        Polytope::from_vertices(&ps).unwrap()
    }

    fn octahedron() -> Polytope {
        Polytope::from_vertices(&pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]))
        .unwrap()
    }

    fn simplex3() -> Polytope {
        Polytope::from_vertices(&pts(&[
            &[-1, -1, -1],
            &[3, -1, -1],
            &[-1, 3, -1],
            &[-1, -1, 3],
        ]))
        .unwrap()
    }

    fn triangle() -> Polytope {
        Polytope::from_vertices(&pts(&[&[-1, -1], &[2, -1], &[-1, 2]])).unwrap()
    }

    #[test]
    fn square_from_vertices() {
        let sq = cube(2);
        let expected: BTreeSet<Halfspace> =
            [hs(&[1, 0], 1), hs(&[-1, 0], 1), hs(&[0, 1], 1), hs(&[0, -1], 1)].into();
        assert_eq!(sq.facets().iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn triangle_from_vertices() {
        let t = triangle();
        let expected: BTreeSet<Halfspace> =
            [hs(&[-1, 0], 1), hs(&[0, -1], 1), hs(&[1, 1], 1)].into();
        assert_eq!(t.facets().iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn collinear_is_not_full_dimensional() {
        let r = Polytope::from_vertices(&pts(&[&[0, 0], &[1, 1], &[2, 2]]));
        assert_eq!(r, Err(Error::NotFullDimensional));
        assert_eq!(Polytope::from_vertices(&[]), Err(Error::Empty));
    }

    #[test]
    fn redundant_points_are_dropped() {
        let p = Polytope::from_vertices(&pts(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1], &[0, 0], &[1, 0]]))
            .unwrap();
        assert_eq!(p.vertices().len(), 4);
        assert_eq!(p, cube(2));
    }

    #[test]
    fn halfspace_examples() {
        let sq = Polytope::from_halfspaces(&[
            hs(&[1, 0], 1),
            hs(&[-1, 0], 1),
            hs(&[0, 1], 1),
            hs(&[0, -1], 1),
        ])
        .unwrap();
        assert_eq!(sq, cube(2));
        let t = Polytope::from_halfspaces(&[hs(&[-1, 0], 1), hs(&[0, -1], 1), hs(&[1, 1], 1)])
            .unwrap();
        assert_eq!(t, triangle());
        assert_eq!(
            Polytope::from_halfspaces(&[hs(&[1], 1), hs(&[1], 2)]),
            Err(Error::Unbounded)
        );
        // quadrant has a vertex but is unbounded
        assert_eq!(
            Polytope::from_halfspaces(&[hs(&[-1, 0], 0), hs(&[0, -1], 0)]),
            Err(Error::Unbounded)
        );
        assert_eq!(
            Polytope::from_halfspaces(&[hs(&[1], -1), hs(&[-1], -1)]),
            Err(Error::Empty)
        );
    }

    #[test]
    fn redundant_halfspaces_are_dropped() {
        let p = Polytope::from_halfspaces(&[
            hs(&[1, 0], 1),
            hs(&[-1, 0], 1),
            hs(&[0, 1], 1),
            hs(&[0, -1], 1),
            hs(&[1, 1], 5),
            hs(&[2, 0], 2),
        ])
        .unwrap();
        assert_eq!(p.facets().len(), 4);
    }

    #[test]
    fn f_vectors() {
        assert_eq!(cube(3).f_vector(), FVector::from_i64s(&[8, 12, 6, 1]));
        assert_eq!(cube(2).f_vector(), FVector::from_i64s(&[4, 4, 1]));
        assert_eq!(octahedron().f_vector(), FVector::from_i64s(&[6, 12, 8, 1]));
        assert_eq!(cube(4).f_vector(), FVector::from_i64s(&[16, 32, 24, 8, 1]));
    }

    #[test]
    fn h_vectors_from_f() {
        assert_eq!(cube(3).h_vector_comb(), HVector::from_i64s(&[1, 3, 3, 1]));
        assert_eq!(cube(2).h_vector_comb(), HVector::from_i64s(&[1, 2, 1]));
        assert_eq!(simplex3().h_vector_comb(), HVector::from_i64s(&[1, 1, 1, 1]));
    }

    #[test]
    fn h_vector_directed_examples() {
        let sq = cube(2);
        let xi = LatticeVector::from_i64s(&[1, 2]);
        assert_eq!(sq.h_vector_directed(Some(&xi)).unwrap(), HVector::from_i64s(&[1, 2, 1]));
        assert_eq!(cube(3).h_vector_directed(None).unwrap(), HVector::from_i64s(&[1, 3, 3, 1]));
        let bad = LatticeVector::from_i64s(&[1, 0]);
        assert_eq!(sq.h_vector_directed(Some(&bad)), Err(Error::NonGenericDirection));
        assert_eq!(octahedron().h_vector_directed(None), Err(Error::NotSimple));
    }

    #[test]
    fn edge_counts() {
        assert_eq!(cube(2).edges().len(), 4);
        assert_eq!(cube(3).edges().len(), 12);
        assert_eq!(simplex3().edges().len(), 6);
    }

    #[test]
    fn weights() {
        let sq = cube(2);
        let v = sq.vertex_index(&RationalPoint::from_i64s(&[1, 1])).unwrap();
        let w: BTreeSet<_> = sq.vertex_weights(v).into_iter().collect();
        assert_eq!(
            w,
            [LatticeVector::from_i64s(&[-1, 0]), LatticeVector::from_i64s(&[0, -1])].into()
        );

        let t = triangle();
        let v = t.vertex_index(&RationalPoint::from_i64s(&[2, -1])).unwrap();
        let w: BTreeSet<_> = t.vertex_weights(v).into_iter().collect();
        assert_eq!(
            w,
            [LatticeVector::from_i64s(&[-1, 0]), LatticeVector::from_i64s(&[-1, 1])].into()
        );

        let s = simplex3();
        let v = s.vertex_index(&RationalPoint::from_i64s(&[-1, -1, -1])).unwrap();
        let w: BTreeSet<_> = s.vertex_weights(v).into_iter().collect();
        let e: BTreeSet<_> = (0..3).map(|i| LatticeVector::unit(3, i)).collect();
        assert_eq!(w, e);
    }

    #[test]
    fn duals() {
        let diamond = Polytope::from_vertices(&pts(&[&[1, 0], &[-1, 0], &[0, 1], &[0, -1]])).unwrap();
        assert_eq!(cube(2).dual().unwrap(), diamond);
        assert_eq!(cube(3).dual().unwrap().dual().unwrap(), cube(3));
        assert_eq!(cube(3).dual().unwrap(), octahedron());
        let off = Polytope::from_vertices(&pts(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])).unwrap();
        assert_eq!(off.dual(), Err(Error::OriginNotInterior));
    }

    #[test]
    fn interior_points() {
        assert_eq!(cube(2).interior_lattice_points(), vec![LatticeVector::zeros(2)]);
        let big = cube(2).dilate(&int(2)).unwrap();
        assert_eq!(big.interior_lattice_points().len(), 9);
    }

    #[test]
    fn dilate_and_translate_match_hull() {
        let t = triangle();
        let moved = t
            .dilate(&int(3))
            .unwrap()
            .translate(&LatticeVector::from_i64s(&[5, -2]))
            .unwrap();
        let rebuilt = Polytope::from_vertices(moved.vertices()).unwrap();
        assert_eq!(moved, rebuilt);
        assert!(t.dilate(&int(0)).is_err());
    }

    #[test]
    fn products() {
        let seg = Polytope::from_vertices(&pts(&[&[-1], &[1]])).unwrap();
        let prism = triangle().product(&seg);
        assert_eq!(prism, Polytope::from_vertices(prism.vertices()).unwrap());
        assert_eq!(prism.f_vector(), FVector::from_i64s(&[6, 9, 5, 1]));
        assert_eq!(cube(2).product(&seg), cube(3));
    }

    #[test]
    fn rational_vertices_are_accepted() {
        let p = Polytope::from_vertices(&[
            RationalPoint::new(vec![rat(1, 2), rat(0, 1)]),
            RationalPoint::new(vec![rat(-1, 3), rat(1, 1)]),
            RationalPoint::new(vec![rat(0, 1), rat(-2, 5)]),
        ])
        .unwrap();
        assert_eq!(p.f_vector(), FVector::from_i64s(&[3, 3, 1]));
        for v in p.vertices() {
            assert!(p.facets().iter().all(|h| !h.slack(v).is_negative()));
        }
    }
}
