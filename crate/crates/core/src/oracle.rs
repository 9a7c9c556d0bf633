//! Brute-force cross-checks. Nothing here reuses the face lattice, the hull
//! code or the length helpers; only the number types are shared.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{Signed, Zero};

use crate::delzant::{is_delzant, is_reflexive};
use crate::error::{Error, Result};
use crate::exact::{det, Integer, Rational, RationalPoint};
use crate::polytope::{FVector, Polytope};
use crate::report::{ItemResult, VerificationReport};

/// Number of lattice points on the closed segment `[u, v]`, by scanning the
/// bounding box.
pub fn lattice_points_on_segment(u: &RationalPoint, v: &RationalPoint) -> Integer {
    let n = u.dim();
    let d: Vec<Rational> = (0..n).map(|i| &v[i] - &u[i]).collect();
    let lo: Vec<Integer> = (0..n)
        .map(|i| u[i].clone().min(v[i].clone()).ceil().to_integer())
        .collect();
    let hi: Vec<Integer> = (0..n)
        .map(|i| u[i].clone().max(v[i].clone()).floor().to_integer())
        .collect();
    if (0..n).any(|i| lo[i] > hi[i]) {
        return Integer::zero();
    }
    let norm: Rational = d.iter().map(|x| x * x).sum();
    let mut count = Integer::zero();
    let mut cur = lo.clone();
    loop {
        let x: Vec<Rational> = (0..n)
            .map(|i| Rational::from_integer(cur[i].clone()) - &u[i])
            .collect();
        let collinear = (0..n).all(|i| (0..n).all(|j| &x[i] * &d[j] == &x[j] * &d[i]));
        if collinear {
            let t = x.iter().zip(&d).map(|(a, b)| a * b).sum::<Rational>() / &norm;
            if !t.is_negative() && t <= Rational::from_integer(1.into()) {
                count += 1;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return count;
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

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &rows[r][c];
                for j in c..cols {
                    let t = &f * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}

fn dimension_of(points: &[&RationalPoint]) -> usize {
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| (0..p.dim()).map(|i| &p[i] - &points[0][i]).collect())
        .collect();
    if rows.is_empty() {
        0
    } else {
        rank(rows)
    }
}

fn on_facet(p: &Polytope, f: usize, x: &RationalPoint) -> bool {
    let h = &p.facets()[f];
    let s: Rational = (0..x.dim())
        .map(|i| &x[i] * Rational::from_integer(h.normal()[i].clone()))
        .sum();
    s == *h.offset()
}

/// Tallies faces by intersecting every subset of facets with the vertex
/// set; exponential in the number of facets.
pub fn brute_f_vector(p: &Polytope) -> FVector {
    let n = p.dim();
    let m = p.facets().len();
    let verts = p.vertices();
    let incidence: Vec<Vec<bool>> = (0..m)
        .map(|f| verts.iter().map(|v| on_facet(p, f, v)).collect())
        .collect();
    let mut faces: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for mask in 0u64..(1u64 << m) {
        let set: Vec<usize> = (0..verts.len())
            .filter(|&v| (0..m).all(|f| mask >> f & 1 == 0 || incidence[f][v]))
            .collect();
        if set.is_empty() || faces.contains_key(&set) {
            continue;
        }
        let pts: Vec<&RationalPoint> = set.iter().map(|&v| &verts[v]).collect();
        faces.insert(set, dimension_of(&pts));
    }
    let mut f = vec![Integer::zero(); n + 1];
    for d in faces.values() {
        f[*d] += 1;
    }
    FVector(f)
}

fn segment_length(a: &RationalPoint, b: &RationalPoint) -> Integer {
    lattice_points_on_segment(a, b) - 1
}

fn neg_normal(p: &Polytope, f: usize) -> RationalPoint {
    let l = p.facets()[f].normal();
    RationalPoint::new(
        l.coords()
            .iter()
            .map(|c| Rational::from_integer(-c))
            .collect(),
    )
}

/// Lengths of dual edges through lattice counting. `n = 2`: at every
/// vertex `l(e*) = |det(weights)| = 1` and the total is `f_0`. `n = 3`:
/// every dual edge has length 1.
pub fn dual_edge_lengths_check(p: &Polytope) -> Result<VerificationReport> {
    let n = p.dim();
    if n != 2 && n != 3 {
        return Err(Error::UnsupportedDimension(n));
    }
    if !is_delzant(p).overall {
        return Err(Error::NotDelzant);
    }
    if !is_reflexive(p) {
        return Err(Error::NotReflexive);
    }
    let verts = p.vertices();
    let facets_at: Vec<BTreeSet<usize>> = verts
        .iter()
        .map(|v| (0..p.facets().len()).filter(|&f| on_facet(p, f, v)).collect())
        .collect();
    let mut items = Vec::new();
    let mut total = Integer::zero();
    if n == 2 {
        for (i, fs) in facets_at.iter().enumerate() {
            let fs: Vec<usize> = fs.iter().copied().collect();
            let l = segment_length(&neg_normal(p, fs[0]), &neg_normal(p, fs[1]));
            let w = p.vertex_weights(i);
            let rows: Vec<Vec<Integer>> = w.iter().map(|x| x.coords().to_vec()).collect();
            let d = det(&rows)?.abs();
            items.push(ItemResult::new(
                format!("v{i}"),
                l == d && l == Integer::from(1),
                format!("l(e*) = {l}, |det| = {d}"),
            ));
            total += l;
        }
        let f0 = Integer::from(verts.len());
        items.push(ItemResult::new(
            "sum",
            total == f0,
            format!("sum l(e*) = {total}, f0 = {f0}"),
        ));
    } else {
        // pairs of vertices sharing exactly two facets span an edge
        for a in 0..verts.len() {
            for b in a + 1..verts.len() {
                let common: Vec<usize> = facets_at[a].intersection(&facets_at[b]).copied().collect();
                if common.len() != 2 {
                    continue;
                }
                let l = segment_length(&neg_normal(p, common[0]), &neg_normal(p, common[1]));
                items.push(ItemResult::new(
                    format!("e{a}-{b}"),
                    l == Integer::from(1),
                    format!("l(e*) = {l}"),
                ));
                total += l;
            }
        }
    }
    Ok(VerificationReport::from_items("dual-edge-lengths", items))
}

/// Every edge length against the lattice-point count, and the f-vector
/// against the brute-force tally.
pub fn cross_check(p: &Polytope) -> VerificationReport {
    let mut items = Vec::new();
    for (e, &(a, b)) in p.edges().iter().enumerate() {
        let (u, v) = (p.vertex(a), p.vertex(b));
        if u.to_lattice().is_none() || v.to_lattice().is_none() {
            continue;
        }
        let counted = segment_length(u, v);
        let main = crate::delzant::relative_length(p, e);
        let shown = match &main {
            Ok(l) => l.to_string(),
            Err(err) => err.to_string(),
        };
        items.push(ItemResult::new(
            format!("length:e{a}-{b}"),
            main.as_ref() == Ok(&counted),
            format!("content {shown}, lattice points - 1 = {counted}"),
        ));
    }
    let f = p.f_vector();
    let g = brute_f_vector(p);
    items.push(ItemResult::new(
        "f-vector",
        f == g,
        format!("face lattice {f}, brute force {g}"),
    ));
    VerificationReport::from_items("oracle", items)
}
