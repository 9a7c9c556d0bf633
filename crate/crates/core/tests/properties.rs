use proptest::prelude::*;

use reflexive_core::catalog::{self, POLYTOPES};
use reflexive_core::delzant::{is_delzant, is_reflexive, rational_sum_lengths, sum_lengths};
use reflexive_core::oracle::{brute_f_vector, lattice_points_on_segment};
use reflexive_core::roots::{RootSystem, RootType};
use reflexive_core::{Integer, LatticeVector, Rational, RationalPoint};

fn entry() -> impl Strategy<Value = &'static str> {
    prop::sample::select(POLYTOPES)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn dilation_scales_lengths(name in entry(), k in 1i64..5) {
        let p = catalog::polytope(name).unwrap();
        let q = p.dilate(&Integer::from(k)).unwrap();
        prop_assert_eq!(
            rational_sum_lengths(&q),
            rational_sum_lengths(&p) * Rational::from_integer(k.into())
        );
        prop_assert_eq!(q.f_vector(), p.f_vector());
    }

    #[test]
    fn translation_keeps_combinatorics(name in entry(), t in prop::collection::vec(-6i64..6, 4)) {
        let p = catalog::polytope(name).unwrap();
        let shift = LatticeVector::from_i64s(&t[..p.dim()]);
        let q = p.translate(&shift).unwrap();
        prop_assert_eq!(rational_sum_lengths(&q), rational_sum_lengths(&p));
        prop_assert_eq!(q.h_vector_comb(), p.h_vector_comb());
        prop_assert_eq!(is_delzant(&q).overall, is_delzant(&p).overall);
    }

    #[test]
    fn face_numbers(name in entry()) {
        let p = catalog::polytope(name).unwrap();
        let f = p.f_vector();
        prop_assert_eq!(&f, &brute_f_vector(&p));
        // Euler-Poincare for the boundary complex
        let n = p.dim();
        let chi: Integer = (0..n).map(|i| if i % 2 == 0 { f.0[i].clone() } else { -f.0[i].clone() }).sum();
        let expected = if n % 2 == 1 { 2 } else { 0 };
        prop_assert_eq!(chi, Integer::from(expected));
        if p.is_simple() {
            let h = p.h_vector_comb();
            prop_assert!(h.is_symmetric());
            prop_assert!(h.is_unimodal());
            prop_assert_eq!(h.total(), f.0[0].clone());
        }
    }

    #[test]
    fn segment_count_matches_gcd(a in prop::collection::vec(-20i64..20, 3), b in prop::collection::vec(-20i64..20, 3)) {
        let g = a.iter().zip(&b).fold(0i64, |g, (x, y)| num_integer::gcd(g, x - y));
        let count = lattice_points_on_segment(&RationalPoint::from_i64s(&a), &RationalPoint::from_i64s(&b));
        prop_assert_eq!(count, Integer::from(g + 1));
    }

    #[test]
    fn weyl_reflections_preserve_orbits(rank in 2usize..4, t in 0usize..3) {
        let ty = [RootType::A, RootType::B, RootType::C][t];
        let rs = RootSystem::build(ty, rank).unwrap();
        let g = rs.coadjoint_graph(&[]).unwrap();
        let w = rs.weyl_group_order();
        prop_assert_eq!(Integer::from(g.vertices().len()), w);
        for beta in &rs.positive_roots {
            let moved = rs.reflect(beta, &g.vertices()[0].coords).unwrap();
            prop_assert!(g.vertices().iter().any(|v| v.coords == moved));
        }
    }
}

#[test]
fn reflexive_delzant_sums_are_integers() {
    for name in POLYTOPES {
        let p = catalog::polytope(name).unwrap();
        if is_delzant(&p).overall && is_reflexive(&p) {
            let s = sum_lengths(&p).unwrap();
            assert_eq!(Rational::from_integer(s), rational_sum_lengths(&p));
        }
    }
}
