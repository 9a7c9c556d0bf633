//! Delzant and reflexivity checks, relative lengths, normal contributions
//! and the identities relating them to face numbers.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use crate::cfunc::{eval_c, CParams, CVector};
use crate::error::{Error, Result};
use crate::exact::{
    content, det, is_lattice_basis, primitive, primitive_direction, solve_scalar, Integer,
    LatticeVector, Rational, RationalPoint,
};
use crate::polytope::Polytope;
use crate::report::{ItemResult, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantReport {
    pub simple: bool,
    pub rational: bool,
    pub smooth_per_vertex: BTreeMap<usize, bool>,
    pub overall: bool,
}

impl DelzantReport {
    pub fn to_report(&self, p: &Polytope) -> VerificationReport {
        let mut items = vec![
            ItemResult::new("simple", self.simple, "n edges at every vertex"),
            ItemResult::new("rational", self.rational, "edge directions are lattice directions"),
        ];
        for (&v, &ok) in &self.smooth_per_vertex {
            items.push(ItemResult::new(
                format!("smooth:v{v}"),
                ok,
                format!("weights at {} form a lattice basis", p.vertex(v)),
            ));
        }
        VerificationReport::from_items("delzant", items)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub edge: (usize, usize),
    /// Primitive, pointing from `edge.0` to `edge.1`.
    pub weight: LatticeVector,
    pub length: Integer,
    /// `(face_id, a)` for each 2-face containing the edge.
    pub contributions: Vec<(usize, Integer)>,
}

impl EdgeData {
    pub fn contribution_sum(&self) -> Integer {
        self.contributions.iter().map(|(_, a)| a).sum()
    }
}

pub fn is_delzant(p: &Polytope) -> DelzantReport {
    let n = p.dim();
    let simple = p.is_simple();
    // Edges of a polytope with rational vertices always have a primitive
    // lattice direction, so this can only fail for malformed data.
    let rational = p
        .edges()
        .iter()
        .all(|&(a, b)| primitive_direction(&(p.vertex(b) - p.vertex(a))).is_ok());
    let smooth_per_vertex: BTreeMap<usize, bool> = (0..p.vertices().len())
        .map(|v| {
            let w = p.vertex_weights(v);
            let ok = w.len() == n && is_lattice_basis(&w).unwrap_or(false);
            (v, ok)
        })
        .collect();
    let overall = simple && rational && smooth_per_vertex.values().all(|&b| b);
    DelzantReport {
        simple,
        rational,
        smooth_per_vertex,
        overall,
    }
}

/// Integral vertices and every facet `<x, l> <= 1` with `l` primitive.
pub fn is_reflexive(p: &Polytope) -> bool {
    p.vertices().iter().all(|v| v.to_lattice().is_some())
        && p.facets().iter().all(|h| h.offset().is_one())
}

fn require_delzant(p: &Polytope) -> Result<()> {
    if is_delzant(p).overall {
        Ok(())
    } else {
        Err(Error::NotDelzant)
    }
}

fn require_reflexive(p: &Polytope) -> Result<()> {
    if is_reflexive(p) {
        Ok(())
    } else {
        Err(Error::NotReflexive)
    }
}

fn sum_points(dim: usize, vs: impl IntoIterator<Item = LatticeVector>) -> LatticeVector {
    vs.into_iter()
        .fold(LatticeVector::zeros(dim), |acc, w| &acc + &w)
}

/// Per-vertex check that the weights sum to `-v`.
pub fn vertex_fano_check(p: &Polytope) -> Result<VerificationReport> {
    require_delzant(p)?;
    let items = (0..p.vertices().len())
        .map(|v| {
            let s = sum_points(p.dim(), p.vertex_weights(v)).to_point();
            let target = -p.vertex(v);
            ItemResult::new(
                format!("v{v}"),
                s == target,
                format!("weight sum {s} vs -v = {target}"),
            )
        })
        .collect();
    Ok(VerificationReport::from_items("vertex-fano", items))
}

pub fn relative_length(p: &Polytope, edge: usize) -> Result<Integer> {
    let (a, b) = p.edges()[edge];
    let d = (p.vertex(b) - p.vertex(a))
        .to_lattice()
        .ok_or(Error::NonLatticeEdge(a, b))?;
    Ok(content(&d))
}

pub fn sum_lengths(p: &Polytope) -> Result<Integer> {
    (0..p.edges().len()).map(|e| relative_length(p, e)).sum()
}

/// Lengths allowing rational vertices: `v - u = t w` with `w` primitive.
pub fn rational_sum_lengths(p: &Polytope) -> Rational {
    p.edges()
        .iter()
        .map(|&(a, b)| {
            primitive_direction(&(p.vertex(b) - p.vertex(a)))
                .expect("distinct vertices")
                .1
        })
        .sum()
}

fn other_neighbor_in_face(p: &Polytope, face: &[usize], at: usize, not: usize) -> Option<usize> {
    p.neighbors(at)
        .into_iter()
        .find(|&x| x != not && face.contains(&x))
}

fn unit_weight(from: &RationalPoint, to: &RationalPoint) -> LatticeVector {
    primitive_direction(&(to - from)).expect("distinct vertices").0
}

fn contributions_unchecked(p: &Polytope, edge: usize) -> Result<Vec<(usize, Integer)>> {
    let (u, v) = p.edges()[edge];
    let w1 = unit_weight(p.vertex(u), p.vertex(v));
    let mut out = Vec::new();
    for (face_id, face) in p.faces_of_dim(2) {
        if !(face.vertex_ids.contains(&u) && face.vertex_ids.contains(&v)) {
            continue;
        }
        let a = other_neighbor_in_face(p, &face.vertex_ids, u, v)
            .ok_or(Error::MatchingFailed(u, v))?;
        let b = other_neighbor_in_face(p, &face.vertex_ids, v, u)
            .ok_or(Error::MatchingFailed(u, v))?;
        let wi = unit_weight(p.vertex(u), p.vertex(a));
        let wt = unit_weight(p.vertex(v), p.vertex(b));
        let diff = &wi - &wt;
        let coef = if diff.is_zero() {
            Rational::zero()
        } else {
            solve_scalar(&w1, &diff).map_err(|_| Error::MatchingFailed(u, v))?
        };
        if !coef.is_integer() {
            return Err(Error::MatchingFailed(u, v));
        }
        out.push((face_id, coef.to_integer()));
    }
    Ok(out)
}

/// For each 2-face `F` containing edge `(u, v)`: the integer `a` with
/// `w - w~ = a w1`, where `w1` points along the edge from `u`, and `w`, `w~`
/// are the other edges of `F` at `u` and at `v`.
pub fn normal_contributions(p: &Polytope, edge: usize) -> Result<Vec<(usize, Integer)>> {
    require_delzant(p)?;
    contributions_unchecked(p, edge)
}

/// Weight, length and contributions for every edge of a Delzant polytope
/// with lattice vertices.
pub fn edge_data(p: &Polytope) -> Result<Vec<EdgeData>> {
    require_delzant(p)?;
    (0..p.edges().len())
        .map(|e| {
            let (u, v) = p.edges()[e];
            let length = relative_length(p, e)?;
            Ok(EdgeData {
                edge: (u, v),
                weight: unit_weight(p.vertex(u), p.vertex(v)),
                length,
                contributions: contributions_unchecked(p, e)?,
            })
        })
        .collect()
}

fn f(p: &Polytope, i: usize) -> Integer {
    p.f_vector().0[i].clone()
}

fn r(x: Integer) -> Rational {
    Rational::from_integer(x)
}

/// `sum_e sum_i a_i^e = 12 f_2 - 3 (n - 1) f_1`.
pub fn verify_thm_combinatorics2(p: &Polytope) -> Result<VerificationReport> {
    require_delzant(p)?;
    let n = p.dim();
    let mut total = Integer::zero();
    let mut items = Vec::new();
    for e in 0..p.edges().len() {
        let c = contributions_unchecked(p, e)?;
        let s: Integer = c.iter().map(|(_, a)| a).sum();
        let (u, v) = p.edges()[e];
        let ok = n < 2 || c.len() == n - 1;
        items.push(ItemResult::new(
            format!("e{u}-{v}"),
            ok,
            format!("{} contributions, sum {s}", c.len()),
        ));
        total += s;
    }
    let rhs = Integer::from(12) * f(p, 2) - Integer::from(3 * (n - 1)) * f(p, 1);
    Ok(VerificationReport::equality(
        "combinatorics2",
        r(total),
        vec![r(rhs)],
        items,
    ))
}

/// `l(e) = 2 + sum_i a_i^e` on every edge.
pub fn verify_length_decomposition(p: &Polytope) -> Result<VerificationReport> {
    require_delzant(p)?;
    require_reflexive(p)?;
    let data = edge_data(p)?;
    let mut lhs = Integer::zero();
    let mut rhs = Integer::zero();
    let items = data
        .iter()
        .map(|d| {
            let expected = Integer::from(2) + d.contribution_sum();
            lhs += &d.length;
            rhs += &expected;
            ItemResult::new(
                format!("e{}-{}", d.edge.0, d.edge.1),
                d.length == expected,
                format!("l = {}, 2 + sum a = {expected}", d.length),
            )
        })
        .collect();
    Ok(VerificationReport::equality(
        "length-decomposition",
        r(lhs),
        vec![r(rhs)],
        items,
    ))
}

/// `sum l(e) = 12 f_2 + (5 - 3n) f_1 = C(n, h)`, and for `n >= 3` also
/// `24 f_3 / (n - 2) + (3 - n) f_1`.
pub fn verify_main_theorem(p: &Polytope) -> Result<VerificationReport> {
    require_delzant(p)?;
    require_reflexive(p)?;
    let n = p.dim();
    if n < 2 {
        return Err(Error::UnsupportedDimension(n));
    }
    let lhs = sum_lengths(p)?;
    let f1 = f(p, 1);
    let f_form = Integer::from(12) * f(p, 2) + (Integer::from(5) - Integer::from(3 * n)) * &f1;
    let h = p.h_vector_comb();
    let c = eval_c(&CParams::new(n, None, CVector::H(h.clone())))?;
    let mut rhs = vec![r(f_form.clone()), r(c.clone())];
    let mut items = vec![
        ItemResult::new("f-form", f_form == lhs, format!("12 f2 + (5-3n) f1 = {f_form}")),
        ItemResult::new("C(n,h)", c == lhs, format!("h = {h}, C = {c}")),
    ];
    if n >= 3 {
        let f3_form = Rational::new(Integer::from(24) * f(p, 3), Integer::from(n - 2))
            + r((Integer::from(3) - Integer::from(n)) * &f1);
        items.push(ItemResult::new(
            "f3-form",
            f3_form == r(lhs.clone()),
            format!("24 f3/(n-2) + (3-n) f1 = {f3_form}"),
        ));
        rhs.push(f3_form);
    }
    Ok(VerificationReport::equality("main", r(lhs), rhs, items))
}

fn dual_vertex_point(normal: &LatticeVector) -> RationalPoint {
    (-normal).to_point()
}

/// `n = 2`: `sum l(e) + sum l(e*) = 12`. `n = 3`: `sum l(e) l(e*) = 24`
/// with `e* = conv{-l_i, -l_j}` for the two facets through `e`.
pub fn verify_12_24(p: &Polytope) -> Result<VerificationReport> {
    require_reflexive(p)?;
    let n = p.dim();
    let dual = p.dual()?;
    match n {
        2 => {
            let a = sum_lengths(p)?;
            let b = sum_lengths(&dual)?;
            let items = vec![
                ItemResult::new("edges", true, format!("sum over edges {a}")),
                ItemResult::new("dual-edges", true, format!("sum over dual edges {b}")),
            ];
            Ok(VerificationReport::equality(
                "12-24",
                r(a + b),
                vec![r(Integer::from(12))],
                items,
            ))
        }
        3 => {
            let mut total = Integer::zero();
            let mut items = Vec::new();
            for (e, face) in p.faces_of_dim(1) {
                let (u, v) = (face.vertex_ids[0], face.vertex_ids[1]);
                let id = format!("e{u}-{v}");
                let le = relative_length(p, p.edge_index(u, v).expect("edge face"))?;
                let [i, j] = face.active_facets[..] else {
                    items.push(ItemResult::new(
                        id,
                        false,
                        format!("face {e} lies on {} facets", face.active_facets.len()),
                    ));
                    continue;
                };
                let a = dual.vertex_index(&dual_vertex_point(p.facets()[i].normal()));
                let b = dual.vertex_index(&dual_vertex_point(p.facets()[j].normal()));
                let dual_edge = match (a, b) {
                    (Some(a), Some(b)) => dual.edge_index(a, b),
                    _ => None,
                };
                let Some(de) = dual_edge else {
                    items.push(ItemResult::new(id, false, "dual pair is not an edge"));
                    continue;
                };
                let ld = relative_length(&dual, de)?;
                let prod = &le * &ld;
                items.push(ItemResult::new(id, true, format!("{le} * {ld} = {prod}")));
                total += prod;
            }
            Ok(VerificationReport::equality(
                "12-24",
                r(total),
                vec![r(Integer::from(24))],
                items,
            ))
        }
        _ => Err(Error::UnsupportedDimension(n)),
    }
}

/// gcd of all relative lengths.
pub fn index_k0(p: &Polytope) -> Result<Integer> {
    require_reflexive(p)?;
    let mut g = Integer::zero();
    for e in 0..p.edges().len() {
        g = g.gcd(&relative_length(p, e)?);
    }
    Ok(g)
}

/// `C(k0, n, f) = C(k0, n, h)` is a non-negative multiple of `k0`, zero
/// exactly when every edge has length `k0`.
pub fn verify_index_corollary(p: &Polytope) -> Result<VerificationReport> {
    require_delzant(p)?;
    require_reflexive(p)?;
    let n = p.dim();
    let k0 = index_k0(p)?;
    let cf = eval_c(&CParams::new(n, Some(k0.clone()), CVector::F(p.f_vector())))?;
    let ch = eval_c(&CParams::new(
        n,
        Some(k0.clone()),
        CVector::H(p.h_vector_comb()),
    ))?;
    let all_equal = (0..p.edges().len())
        .map(|e| relative_length(p, e))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|l| *l == k0);
    let in_range = k0 >= Integer::one() && k0 <= Integer::from(n + 1);
    let items = vec![
        ItemResult::new("k0-range", in_range, format!("k0 = {k0}, n + 1 = {}", n + 1)),
        ItemResult::new("non-negative", !cf.is_negative(), format!("C = {cf}")),
        ItemResult::new(
            "divisible",
            cf.is_multiple_of(&k0),
            format!("C mod k0 = {}", cf.mod_floor(&k0)),
        ),
        ItemResult::new(
            "zero-iff-equal",
            cf.is_zero() == all_equal,
            format!("C = {cf}, all lengths equal k0: {all_equal}"),
        ),
    ];
    Ok(VerificationReport::equality(
        "index-corollary",
        r(cf),
        vec![r(ch)],
        items,
    ))
}

/// Interior lattice point `t` of `rP` with `rP - t` reflexive, if any.
pub fn gorenstein_translation(p: &Polytope, r: &Integer) -> Result<Option<LatticeVector>> {
    let rp = p.dilate(r)?;
    for t in rp.interior_lattice_points() {
        if is_reflexive(&rp.translate(&-&t)?) {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// `sum l(e) = (12 f_2 + (5 - 3n) f_1) / r` when some lattice translate of
/// `rP` is reflexive.
pub fn verify_gorenstein(p: &Polytope, r_index: &Integer) -> Result<VerificationReport> {
    require_delzant(p)?;
    let t = gorenstein_translation(p, r_index)?
        .ok_or_else(|| Error::NotGorensteinOfIndex(r_index.clone()))?;
    let n = p.dim();
    let lhs = rational_sum_lengths(p);
    let top = Integer::from(12) * f(p, 2) + (Integer::from(5) - Integer::from(3 * n)) * f(p, 1);
    let rhs = Rational::new(top, r_index.clone());
    let items = vec![ItemResult::new(
        "translation",
        true,
        format!("{r_index}P - {t} is reflexive"),
    )];
    Ok(VerificationReport::equality(
        format!("gorenstein:{r_index}"),
        lhs,
        vec![rhs],
        items,
    ))
}

/// Vertex cones labelled `v0, v1, ...` in vertex order.
pub fn vertex_cones(p: &Polytope) -> BTreeMap<String, Vec<LatticeVector>> {
    (0..p.vertices().len())
        .map(|v| (format!("v{v}"), p.vertex_weights(v)))
        .collect()
}

/// Rebuilds a Delzant reflexive polytope from its vertex cones, placing
/// each vertex at minus the sum of its generators.
pub fn reconstruct_from_cones(cones: &BTreeMap<String, Vec<LatticeVector>>) -> Result<Polytope> {
    let mut placed: BTreeMap<RationalPoint, &str> = BTreeMap::new();
    let mut dim = None;
    for (label, cone) in cones {
        let n = cone.len();
        if *dim.get_or_insert(n) != n || cone.iter().any(|w| w.dim() != n) {
            return Err(Error::InconsistentCones(format!(
                "cone {label} has the wrong shape"
            )));
        }
        let rows: Vec<Vec<Integer>> = cone.iter().map(|w| w.coords().to_vec()).collect();
        if !det(&rows)?.abs().is_one() {
            return Err(Error::InconsistentCones(format!(
                "cone {label} is not unimodular"
            )));
        }
        let v = -&sum_points(n, cone.iter().cloned()).to_point();
        if let Some(other) = placed.insert(v.clone(), label) {
            return Err(Error::InconsistentCones(format!(
                "cones {other} and {label} both place a vertex at {v}"
            )));
        }
    }
    let points: Vec<RationalPoint> = placed.keys().cloned().collect();
    let p = Polytope::from_vertices(&points)
        .map_err(|e| Error::InconsistentCones(format!("vertex set does not span: {e}")))?;
    if p.vertices().len() != points.len() {
        return Err(Error::InconsistentCones(
            "some reconstructed vertices are not extreme".into(),
        ));
    }
    for (v, label) in &placed {
        let id = p.vertex_index(v).expect("all points are vertices");
        let got: BTreeSet<LatticeVector> = p.vertex_weights(id).into_iter().collect();
        let want: BTreeSet<LatticeVector> = cones[*label]
            .iter()
            .map(|w| primitive(w).map(|(w, _)| w))
            .collect::<Result<_>>()?;
        if got != want {
            return Err(Error::InconsistentCones(format!(
                "cone {label} does not match the rebuilt vertex {v}"
            )));
        }
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn poly(ps: &[&[i64]]) -> Polytope {
        let pts: Vec<RationalPoint> = ps.iter().map(|p| RationalPoint::from_i64s(p)).collect();
        Polytope::from_vertices(&pts).unwrap()
    }

    fn square() -> Polytope {
        poly(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]])
    }

    fn triangle() -> Polytope {
        poly(&[&[-1, -1], &[2, -1], &[-1, 2]])
    }

    fn hexagon() -> Polytope {
        poly(&[&[1, 0], &[1, 1], &[0, 1], &[-1, 0], &[-1, -1], &[0, -1]])
    }

    fn cube() -> Polytope {
        square().product(&poly(&[&[-1], &[1]]))
    }

    fn simplex3() -> Polytope {
        poly(&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]])
    }

    fn octahedron() -> Polytope {
        poly(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ])
    }

    fn tesseract() -> Polytope {
        cube().product(&poly(&[&[-1], &[1]]))
    }

    fn edge(p: &Polytope, a: &[i64], b: &[i64]) -> usize {
        let a = p.vertex_index(&RationalPoint::from_i64s(a)).unwrap();
        let b = p.vertex_index(&RationalPoint::from_i64s(b)).unwrap();
        p.edge_index(a, b).unwrap()
    }

    #[test]
    fn delzant_examples() {
        assert!(is_delzant(&square()).overall);
        let o = is_delzant(&octahedron());
        assert!(!o.simple && !o.overall);
        let t = is_delzant(&poly(&[&[0, 0], &[1, 0], &[1, 2]]));
        assert!(t.simple && t.rational && !t.overall);
        assert_eq!(t.smooth_per_vertex.values().filter(|b| !**b).count(), 1);
    }

    #[test]
    fn reflexive_examples() {
        assert!(is_reflexive(&square()));
        assert!(!is_reflexive(&poly(&[&[0, 0], &[2, 0], &[0, 2], &[2, 2]])));
        assert!(is_reflexive(&square().dual().unwrap()));
        assert!(is_reflexive(&octahedron()));
    }

    #[test]
    fn fano_examples() {
        assert!(vertex_fano_check(&square()).unwrap().pass);
        assert!(vertex_fano_check(&simplex3()).unwrap().pass);
        let big = square().dilate(&int(2)).unwrap();
        let rep = vertex_fano_check(&big).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.pass, is_reflexive(&big));
        assert_eq!(vertex_fano_check(&octahedron()), Err(Error::NotDelzant));
    }

    #[test]
    fn contribution_examples() {
        let sq = square();
        for e in 0..4 {
            let c = normal_contributions(&sq, e).unwrap();
            assert_eq!(c.len(), 1);
            assert_eq!(c[0].1, int(0));
        }
        let t = triangle();
        let e = edge(&t, &[-1, -1], &[2, -1]);
        assert_eq!(normal_contributions(&t, e).unwrap()[0].1, int(1));
        let h = hexagon();
        for e in 0..6 {
            assert_eq!(normal_contributions(&h, e).unwrap()[0].1, int(-1));
        }
        assert_eq!(normal_contributions(&octahedron(), 0), Err(Error::NotDelzant));
    }

    #[test]
    fn combinatorics2_examples() {
        for p in [square(), cube(), triangle(), hexagon(), simplex3(), tesseract()] {
            let rep = verify_thm_combinatorics2(&p).unwrap();
            assert!(rep.pass, "{rep}");
        }
        let rep = verify_thm_combinatorics2(&square()).unwrap();
        assert_eq!(rep.lhs, Rational::zero());
        let rect = poly(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]);
        assert!(verify_thm_combinatorics2(&rect).unwrap().pass);
    }

    #[test]
    fn length_examples() {
        let sq = square();
        assert_eq!(relative_length(&sq, edge(&sq, &[-1, -1], &[1, -1])).unwrap(), int(2));
        assert_eq!(sum_lengths(&cube()).unwrap(), int(24));
        assert_eq!(sum_lengths(&triangle()).unwrap(), int(9));
        let half = Polytope::from_vertices(&[
            RationalPoint::new(vec![Rational::new(1.into(), 2.into()), Rational::zero()]),
            RationalPoint::from_i64s(&[2, 0]),
            RationalPoint::from_i64s(&[0, 1]),
        ])
        .unwrap();
        assert!(matches!(sum_lengths(&half), Err(Error::NonLatticeEdge(_, _))));
    }

    #[test]
    fn decomposition_examples() {
        for p in [square(), triangle(), hexagon(), cube(), simplex3()] {
            assert!(verify_length_decomposition(&p).unwrap().pass);
        }
        let rect = poly(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]);
        assert_eq!(verify_length_decomposition(&rect), Err(Error::NotReflexive));
    }

    #[test]
    fn main_theorem_examples() {
        let rep = verify_main_theorem(&cube()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(24)));
        assert_eq!(rep.rhs.len(), 3);
        let rep = verify_main_theorem(&square()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(8)));
        let rep = verify_main_theorem(&tesseract()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(64)));
    }

    #[test]
    fn twelve_twenty_four_examples() {
        let rep = verify_12_24(&square()).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(12)));
        assert!(verify_12_24(&cube()).unwrap().pass);
        let rep = verify_12_24(&octahedron()).unwrap();
        assert!(rep.pass, "{rep}");
        assert_eq!(verify_12_24(&tesseract()), Err(Error::UnsupportedDimension(4)));
    }

    #[test]
    fn index_examples() {
        assert_eq!(index_k0(&square()).unwrap(), int(2));
        assert_eq!(index_k0(&simplex3()).unwrap(), int(4));
        assert_eq!(index_k0(&hexagon()).unwrap(), int(1));
        for p in [square(), cube(), tesseract(), triangle(), hexagon(), simplex3()] {
            let rep = verify_index_corollary(&p).unwrap();
            assert!(rep.pass, "{rep}");
            assert_eq!(rep.lhs, Rational::zero());
        }
    }

    #[test]
    fn gorenstein_examples() {
        let unit = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let rep = verify_gorenstein(&unit, &int(2)).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(4)));
        let std = poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let rep = verify_gorenstein(&std, &int(4)).unwrap();
        assert!(rep.pass);
        assert_eq!(rep.lhs, r(int(6)));
        assert_eq!(
            verify_gorenstein(&square(), &int(2)),
            Err(Error::NotGorensteinOfIndex(int(2)))
        );
    }

    #[test]
    fn reconstruction() {
        for p in [square(), triangle(), hexagon(), cube(), simplex3()] {
            assert_eq!(reconstruct_from_cones(&vertex_cones(&p)).unwrap(), p);
        }
        let mut cones = vertex_cones(&square());
        let c0 = cones["v0"].clone();
        cones.insert("v1".into(), c0);
        assert!(matches!(
            reconstruct_from_cones(&cones),
            Err(Error::InconsistentCones(_))
        ));

        let mut cones = vertex_cones(&triangle());
        let a = cones["v0"][0].clone();
        let b = cones["v1"][0].clone();
        cones.get_mut("v0").unwrap()[0] = b;
        cones.get_mut("v1").unwrap()[0] = a;
        assert!(matches!(
            reconstruct_from_cones(&cones),
            Err(Error::InconsistentCones(_))
        ));
    }
}
