//! Named fixtures used by the CLI, the tests and the benches.

use crate::error::{Error, Result};
use crate::exact::{Integer, RationalPoint};
use crate::gkm::GkmGraph;
use crate::polytope::Polytope;
use crate::roots::{RootSystem, RootType};

pub const POLYTOPES: &[&str] = &[
    "square",
    "cp2-triangle",
    "bl1-trapezoid",
    "bl2-pentagon",
    "hexagon",
    "cube",
    "cp3-simplex",
    "tesseract",
    "triangle-prism",
    "pentagon-prism",
    "hexagon-prism",
    "blown-up-simplex",
    "octahedron",
    "diamond",
    "nonsmooth-triangle",
    "rect-1x2",
    "unit-square",
    "standard-simplex-3",
    "square-2",
];

pub const GRAPHS: &[&str] = &[
    "a2-full-flag",
    "a2-cp2",
    "gr24-graph",
    "b2-full-flag",
    "b2-i0",
    "b2-i1",
    "octahedron-skeleton",
    "b2-gorenstein-r3",
    "a2-gorenstein-r2",
];

/// One-line description of a catalog entry.
pub fn describe(name: &str) -> Option<&'static str> {
    let d = match name {
        "square" => "[-1,1]^2, toric CP1 x CP1",
        "cp2-triangle" => "conv{(-1,-1),(2,-1),(-1,2)}, toric CP2",
        "bl1-trapezoid" => "CP2 blown up at one point",
        "bl2-pentagon" => "CP2 blown up at two points",
        "hexagon" => "CP2 blown up at three points",
        "cube" => "[-1,1]^3",
        "cp3-simplex" => "conv{-1 + 4 e_i}, toric CP3",
        "tesseract" => "[-1,1]^4",
        "triangle-prism" => "cp2-triangle x [-1,1]",
        "pentagon-prism" => "bl2-pentagon x [-1,1]",
        "hexagon-prism" => "hexagon x [-1,1]",
        "blown-up-simplex" => "cp3-simplex cut by x <= 1, CP3 blown up at a point",
        "octahedron" => "conv{+-e_i}, reflexive but not simple",
        "diamond" => "conv{+-e_1, +-e_2}, reflexive but not smooth",
        "nonsmooth-triangle" => "conv{(1,0),(0,1),(-1,-1)}, reflexive but not smooth",
        "rect-1x2" => "[0,1] x [0,2], Delzant, not reflexive",
        "unit-square" => "[0,1]^2, Delzant, Gorenstein of index 2",
        "standard-simplex-3" => "conv{0, e_i}, Delzant, Gorenstein of index 4",
        "square-2" => "[-2,2]^2, Delzant, not reflexive",
        "a2-full-flag" => "A2 coadjoint orbit, I = {}",
        "a2-cp2" => "A2 coadjoint orbit, I = {0}, CP2",
        "gr24-graph" => "A3 coadjoint orbit, I = {0,2}, Gr(2,4)",
        "b2-full-flag" => "B2 coadjoint orbit, I = {}",
        "b2-i0" => "B2 coadjoint orbit, I = {0}",
        "b2-i1" => "B2 coadjoint orbit, I = {1}",
        "octahedron-skeleton" => "1-skeleton of the octahedron, Gorenstein of index 4",
        "b2-gorenstein-r3" => "B2 Weyl orbit of (-1,-1), Gorenstein of index 3",
        "a2-gorenstein-r2" => "A2 Weyl orbit of (-1,-1), Gorenstein of index 2",
        _ => return None,
    };
    Some(d)
}

fn hull(points: &[&[i64]]) -> Polytope {
    let pts: Vec<RationalPoint> = points.iter().map(|p| RationalPoint::from_i64s(p)).collect();
    Polytope::from_vertices(&pts).expect("catalog polytope")
}

fn segment() -> Polytope {
    hull(&[&[-1], &[1]])
}

pub fn polytope(name: &str) -> Result<Polytope> {
    let p = match name {
        "square" => hull(&[&[-1, -1], &[1, -1], &[-1, 1], &[1, 1]]),
        "cp2-triangle" => hull(&[&[-1, -1], &[2, -1], &[-1, 2]]),
        "bl1-trapezoid" => hull(&[&[-1, -1], &[1, -1], &[1, 0], &[-1, 2]]),
        "bl2-pentagon" => hull(&[&[-1, -1], &[1, -1], &[1, 0], &[0, 1], &[-1, 1]]),
        "hexagon" => hull(&[&[-1, -1], &[0, -1], &[1, 0], &[1, 1], &[0, 1], &[-1, 0]]),
        "cube" => polytope("square")?.product(&segment()),
        "cp3-simplex" => hull(&[&[-1, -1, -1], &[3, -1, -1], &[-1, 3, -1], &[-1, -1, 3]]),
        "tesseract" => polytope("cube")?.product(&segment()),
        "triangle-prism" => polytope("cp2-triangle")?.product(&segment()),
        "pentagon-prism" => polytope("bl2-pentagon")?.product(&segment()),
        "hexagon-prism" => polytope("hexagon")?.product(&segment()),
        // cp3-simplex cut by x <= 1
        "blown-up-simplex" => hull(&[
            &[-1, -1, -1],
            &[1, -1, -1],
            &[1, 1, -1],
            &[1, -1, 1],
            &[-1, 3, -1],
            &[-1, -1, 3],
        ]),
        "octahedron" => hull(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]),
        "diamond" => hull(&[&[1, 0], &[0, 1], &[-1, 0], &[0, -1]]),
        "nonsmooth-triangle" => hull(&[&[1, 0], &[0, 1], &[-1, -1]]),
        "rect-1x2" => hull(&[&[0, 0], &[1, 0], &[0, 2], &[1, 2]]),
        "unit-square" => hull(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]),
        "standard-simplex-3" => hull(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]),
        "square-2" => polytope("square")?.dilate(&Integer::from(2))?,
        other => return Err(Error::InvalidArgument(format!("unknown polytope {other}"))),
    };
    Ok(p)
}

pub fn graph(name: &str) -> Result<GkmGraph> {
    let a2 = || RootSystem::build(RootType::A, 2);
    let b2 = || RootSystem::build(RootType::B, 2);
    match name {
        "a2-full-flag" => a2()?.coadjoint_graph(&[]),
        "a2-cp2" => a2()?.coadjoint_graph(&[0]),
        "gr24-graph" => RootSystem::build(RootType::A, 3)?.coadjoint_graph(&[0, 2]),
        "b2-full-flag" => b2()?.coadjoint_graph(&[]),
        "b2-i0" => b2()?.coadjoint_graph(&[0]),
        "b2-i1" => b2()?.coadjoint_graph(&[1]),
        "octahedron-skeleton" => Ok(GkmGraph::skeleton(&polytope("octahedron")?)),
        "b2-gorenstein-r3" => b2()?.orbit_graph(&RationalPoint::from_i64s(&[-1, -1])),
        "a2-gorenstein-r2" => a2()?.orbit_graph(&RationalPoint::from_i64s(&[-1, -1])),
        other => Err(Error::InvalidArgument(format!("unknown graph {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delzant::{is_delzant, is_reflexive};
    use crate::exact::rat;
    use crate::gkm::{gorenstein_index, is_reflexive_graph, validate};
    use crate::polytope::FVector;

    #[test]
    fn every_name_builds() {
        for name in POLYTOPES {
            polytope(name).unwrap();
        }
        for name in GRAPHS {
            assert!(validate(&graph(name).unwrap()).pass, "{name}");
        }
        assert!(polytope("nope").is_err());
        for name in POLYTOPES.iter().chain(GRAPHS) {
            assert!(describe(name).is_some(), "{name}");
        }
        assert!(graph("nope").is_err());
    }

    #[test]
    fn classification() {
        let reflexive_delzant = &POLYTOPES[..12];
        for name in reflexive_delzant {
            let p = polytope(name).unwrap();
            assert!(is_delzant(&p).overall, "{name}");
            assert!(is_reflexive(&p), "{name}");
        }
        for name in ["octahedron", "diamond", "nonsmooth-triangle"] {
            let p = polytope(name).unwrap();
            assert!(is_reflexive(&p), "{name}");
            assert!(!is_delzant(&p).overall, "{name}");
        }
        for name in ["rect-1x2", "unit-square", "standard-simplex-3", "square-2"] {
            let p = polytope(name).unwrap();
            assert!(is_delzant(&p).overall, "{name}");
            assert!(!is_reflexive(&p), "{name}");
        }
        assert_eq!(
            polytope("blown-up-simplex").unwrap().f_vector(),
            FVector::from_i64s(&[6, 9, 5, 1])
        );
    }

    #[test]
    fn graph_indices() {
        for name in &GRAPHS[..6] {
            assert!(is_reflexive_graph(&graph(name).unwrap()).unwrap().pass, "{name}");
        }
        let cases = [
            ("octahedron-skeleton", 4),
            ("b2-gorenstein-r3", 3),
            ("a2-gorenstein-r2", 2),
        ];
        for (name, r) in cases {
            let cert = gorenstein_index(&graph(name).unwrap()).unwrap();
            assert_eq!(cert.r, rat(r, 1), "{name}");
            assert!(cert.is_valid());
        }
    }
}
