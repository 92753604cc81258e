//! Property tests: invariance laws for the pairing, the dominance order,
//! weight multiplicities, and the Smith normal form.

mod common;

use mindeg::build_root_datum;
use mindeg::linalg::smith_normal_form_i64;
use mindeg::root::{dominance_leq, dominant_weights_below, pairing, weyl_orbit, RootVector};
use mindeg::weyl::freudenthal_multiplicity;
use proptest::prelude::*;

const TYPES: [&str; 8] = ["A1", "A2", "A3", "B2", "B3", "C3", "D4", "G2"];

fn labeled_coeffs(min: i64, max: i64) -> impl Strategy<Value = (&'static str, Vec<i64>)> {
    prop::sample::select(&TYPES[..]).prop_flat_map(move |label| {
        let rank = build_root_datum(label).unwrap().rank();
        (Just(label), prop::collection::vec(min..=max, rank))
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(-9i64..=9, r * c)
            .prop_map(move |flat| flat.chunks(c).map(|ch| ch.to_vec()).collect())
    })
}

proptest! {
    /// ⟨wλ, wγ∨⟩ = ⟨λ, γ∨⟩ for simple reflections w (and hence for all of W).
    #[test]
    fn pairing_is_invariant_under_simple_reflections(
        (label, coeffs) in labeled_coeffs(-3, 3),
        root_pick in any::<prop::sample::Index>(),
        node_pick in any::<prop::sample::Index>(),
    ) {
        let datum = build_root_datum(label).unwrap();
        let lambda = datum.weight(&coeffs).unwrap();
        let roots = datum.positive_roots();
        let gamma = roots[root_pick.index(roots.len())].clone();
        let i = node_pick.index(datum.rank());

        let mut refl = coeffs.clone();
        datum.reflect_weight(i, &mut refl);
        let s_lambda = datum.weight(&refl).unwrap();

        let mut g = gamma.coeffs().to_vec();
        g[i] -= datum.root_pairing_with_simple_coroot(&gamma, i);
        let s_gamma = RootVector::new(g);

        prop_assert_eq!(
            pairing(&s_lambda, &s_gamma).unwrap(),
            pairing(&lambda, &gamma).unwrap()
        );
    }

    /// Root-lattice vectors survive the trip through weight coordinates.
    #[test]
    fn root_coordinates_round_trip((label, combo) in labeled_coeffs(-3, 3)) {
        let datum = build_root_datum(label).unwrap();
        let v = RootVector::new(combo);
        let w = datum.root_to_weight(&v);
        prop_assert_eq!(datum.weight_to_root(&w), Some(v));
    }

    /// Smith divisors: right length, divisibility chain, zeros trailing,
    /// rank consistent, and (when square) product equal to |det|.
    #[test]
    fn smith_form_chain_and_determinant(m in matrix()) {
        let s = smith_normal_form_i64(&m);
        let ds = s.divisors_u64();
        prop_assert_eq!(ds.len(), m.len().min(m[0].len()));
        for w in ds.windows(2) {
            if w[0] == 0 {
                prop_assert_eq!(w[1], 0);
            } else {
                prop_assert_eq!(w[1] % w[0], 0);
            }
        }
        prop_assert_eq!(s.rank(), ds.iter().filter(|&&d| d != 0).count());
        if m.len() == m[0].len() {
            let prod: u128 = ds.iter().map(|&d| d as u128).product();
            prop_assert_eq!(prod, common::det_i64(&m).unsigned_abs());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// μ ≤ ν ≤ λ composes, with difference coordinates adding up, and the
    /// order is antisymmetric.
    #[test]
    fn dominance_is_transitive_and_antisymmetric(
        (label, coeffs) in labeled_coeffs(0, 2),
        pick1 in any::<prop::sample::Index>(),
        pick2 in any::<prop::sample::Index>(),
    ) {
        let datum = build_root_datum(label).unwrap();
        let lambda = datum.weight(&coeffs).unwrap();
        let below = dominant_weights_below(&lambda).unwrap();
        let nu = below[pick1.index(below.len())].clone();
        let mid = dominant_weights_below(&nu).unwrap();
        let mu = mid[pick2.index(mid.len())].clone();

        let d1 = dominance_leq(&nu, &lambda).unwrap().expect("ν ≤ λ");
        let d2 = dominance_leq(&mu, &nu).unwrap().expect("μ ≤ ν");
        let d = dominance_leq(&mu, &lambda).unwrap().expect("μ ≤ λ");
        prop_assert_eq!(d, d1.plus(&d2));

        if mu != lambda {
            prop_assert!(dominance_leq(&lambda, &mu).unwrap().is_none());
        }
    }

    /// Weight multiplicities are constant on Weyl orbits.
    #[test]
    fn multiplicities_are_weyl_invariant(
        (label, coeffs) in labeled_coeffs(0, 2),
        pick in any::<prop::sample::Index>(),
        orbit_pick in any::<prop::sample::Index>(),
    ) {
        let datum = build_root_datum(label).unwrap();
        let lambda = datum.weight(&coeffs).unwrap();
        let below = dominant_weights_below(&lambda).unwrap();
        let nu = below[pick.index(below.len())].clone();
        let orbit = weyl_orbit(&nu).unwrap();
        let conjugate = orbit[orbit_pick.index(orbit.len())].clone();

        prop_assert_eq!(
            freudenthal_multiplicity(&lambda, &conjugate).unwrap(),
            freudenthal_multiplicity(&lambda, &nu).unwrap()
        );
    }
}
