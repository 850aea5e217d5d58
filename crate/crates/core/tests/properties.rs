//! Property tests for the machinery with unbounded input spaces: Smith
//! normal form on random integer matrices, Weyl reflections on arbitrary
//! vectors, and quiver-file round trips on random orientations.

use clustercat::linalg::IMat;
use clustercat::quiver::{Arrow, ValuedQuiver};
use clustercat::quiverfile::{parse_quiver, print_quiver};
use clustercat::roots::{CartanData, RootVec};
use proptest::prelude::*;

fn small_matrix() -> impl Strategy<Value = IMat> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
        proptest::collection::vec(-9i64..=9, r * c).prop_map(move |data| {
            let rows: Vec<Vec<i64>> =
                data.chunks(c).map(|chunk| chunk.to_vec()).collect();
            IMat::from_rows(&rows)
        })
    })
}

proptest! {
    #[test]
    fn smith_factors_divide_successively(m in small_matrix()) {
        let factors = m.smith_invariant_factors();
        for w in factors.windows(2) {
            let (a, b) = (w[0], w[1]);
            prop_assert!(a >= 0 && b >= 0);
            if a == 0 {
                prop_assert_eq!(b, 0);
            } else {
                prop_assert_eq!(b % a, 0);
            }
        }
    }

    #[test]
    fn smith_factors_match_determinant(m in small_matrix()) {
        if m.rows() == m.cols() {
            let det = num_traits::Signed::abs(&m.det());
            let factors = m.smith_invariant_factors();
            if factors.iter().all(|&d| d != 0) {
                let product: num_bigint::BigInt =
                    factors.iter().map(|&d| num_bigint::BigInt::from(d)).product();
                prop_assert_eq!(product, det);
            } else {
                prop_assert!(num_traits::Zero::is_zero(&det));
            }
        }
    }

    #[test]
    fn simple_reflections_are_involutions(
        coords in proptest::collection::vec(-20i64..=20, 3),
        k in 0usize..3,
    ) {
        let cartan = CartanData::new(vec![
            vec![2, -1, 0],
            vec![-1, 2, -1],
            vec![0, -1, 2],
        ]).unwrap();
        let v = RootVec(coords);
        let twice = cartan.simple_reflection(k, &cartan.simple_reflection(k, &v));
        prop_assert_eq!(twice, v);
    }

    #[test]
    fn parser_never_panics(text in "\\PC{0,60}") {
        let _ = parse_quiver(&text);
    }

    #[test]
    fn parser_never_panics_on_arrowish_lines(
        a in 0u32..20, b in 0u32..20, v in -3i64..=9, w in -3i64..=9,
    ) {
        let _ = parse_quiver(&format!("{a} -> {b} [{v} {w}]"));
        let _ = parse_quiver(&format!("{a} -> {b}\n{b} -> {a}"));
    }

    #[test]
    fn quiver_print_parse_round_trip(mask in 0u32..16, valued in proptest::bool::ANY) {
        // Orientations of a four-vertex path, optionally with one valued edge.
        let arrows: Vec<Arrow> = (0..3)
            .map(|i| {
                let val = if valued && i == 1 { (1, 2) } else { (1, 1) };
                if mask & (1 << i) == 0 {
                    Arrow { from: i, to: i + 1, val }
                } else {
                    Arrow { from: i + 1, to: i, val: (val.1, val.0) }
                }
            })
            .collect();
        let q = ValuedQuiver::new(4, arrows).unwrap();
        let reparsed = parse_quiver(&print_quiver(&q)).unwrap();
        prop_assert_eq!(q, reparsed);
    }
}
