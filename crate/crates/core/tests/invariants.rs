use hnsplit::*;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn ci_spec() -> impl Strategy<Value = CompleteIntersectionSpec> {
    (2u32..=8)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(1u32..=6, 1..n as usize)))
        .prop_map(|(n, d)| CompleteIntersectionSpec::new(n, d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn three_routes_agree(spec in ci_spec()) {
        let st = splitting_type(&spec).unwrap();
        prop_assert_eq!(&st, &splitting_product_oracle(spec.degrees()).unwrap());
        let table = HilbertTable::compute(&spec, spec.j_max());
        for j in 0..=spec.j_max() {
            prop_assert_eq!(&table.row(spec.codim())[j], &hilbert_oracle(&spec, j as i64));
        }
    }

    #[test]
    fn resubstitution_reproduces_hilbert_function(spec in ci_spec()) {
        let st = splitting_type(&spec).unwrap();
        for m in 0..=spec.j_max() + 3 {
            prop_assert_eq!(resubstitute(&spec, &st, m), hilbert_oracle(&spec, m as i64));
        }
    }

    #[test]
    fn structural_invariants(spec in ci_spec()) {
        let st = splitting_type(&spec).unwrap();
        prop_assert!(st.get(0).is_one());
        prop_assert_eq!(st.rank(), spec.degree_product());
        prop_assert!(st.multiplicities().iter().all(|a| !a.is_negative()));
        prop_assert_eq!(st.top_twist(), spec.top_twist());
        prop_assert!(st.is_palindromic());
        prop_assert_eq!(
            euler_characteristic_on(&st, spec.target_dim()),
            hilbert_polynomial_constant(&spec)
        );
    }

    #[test]
    fn only_codimension_matters(d in prop::collection::vec(1u32..=6, 1..4), extra in 1u32..6) {
        let r = d.len() as u32;
        let low = CompleteIntersectionSpec::new(r + 1, d.clone()).unwrap();
        let high = CompleteIntersectionSpec::new(r + extra, d).unwrap();
        prop_assert_eq!(splitting_type(&low).unwrap(), splitting_type(&high).unwrap());
    }

    #[test]
    fn degree_order_is_irrelevant(spec in ci_spec()) {
        let mut rev = spec.degrees().to_vec();
        rev.reverse();
        let other = CompleteIntersectionSpec::new(spec.n(), rev).unwrap();
        prop_assert_eq!(splitting_type(&spec).unwrap(), splitting_type(&other).unwrap());
    }

    #[test]
    fn sym_power_pieces(m in 1u32..=10, t in -40i64..40, gap in 1i64..20) {
        let s = t + gap;
        let p = sym_power_hn(m, s, t).unwrap();
        prop_assert_eq!(p.len(), m as usize + 1);
        prop_assert!(p.pieces().iter().all(|q| q.rank().is_one()));
        prop_assert_eq!(p.degree(), binomial(i64::from(m) + 1, 2) * (s + t));
        prop_assert_eq!(sym_rank_deg(2, s + t, i64::from(m)).unwrap(), RankDegree::new(p.rank(), p.degree()));
    }

    #[test]
    fn ruled_quotient_unstable(n in 2u32..=12, t in -20i64..20, gap in 1i64..10, alpha in -20i64..20) {
        let s = t + gap;
        let spec = RuledSurfaceSpec::new(n, alpha, Stability::Unstable { s, t }, Characteristic::Zero).unwrap();
        let q = direct_image_quotient_hn(&spec).unwrap();
        let p = q.polygon().unwrap();
        prop_assert_eq!(p.len(), n as usize - 1);
        let k = i64::from(n) - 1;
        prop_assert_eq!(p.degree(), -binomial(k, 2) * (s + t) - BigInt::from(k * (alpha + s + t)));
        for w in p.pieces().windows(2) {
            prop_assert_eq!(w[0].degree() - w[1].degree(), BigInt::from(s - t));
        }
        // Dualizing E swaps (s, t) -> (-t, -s); twisting by A^* ⊗ det E^* shifts every degree.
        if n >= 3 {
            let sym = sym_power_hn(n - 2, s, t).unwrap();
            let expected: Vec<BigInt> = sym
                .pieces()
                .iter()
                .rev()
                .map(|x| -x.degree() - (alpha + s + t))
                .collect();
            let got: Vec<BigInt> = p.pieces().iter().map(|x| x.degree().clone()).collect();
            prop_assert_eq!(got, expected);
        }
    }

    #[test]
    fn two_hypersurface_swap_symmetry(n1 in 1u32..15, n2 in 1u32..15, a1 in -9i64..9, a2 in -9i64..9, e in -9i64..9) {
        let spec = TwoHypersurfaceSpec::new(n1, n2, a1, a2, e).unwrap();
        let p = quotient_presentation(&spec).unwrap();
        let q = quotient_presentation(&spec.swapped()).unwrap();
        prop_assert_eq!(p.presentation().map(|x| x.kernel.clone()), q.presentation().map(|x| x.kernel.clone()));
        if let Some(p) = p.presentation() {
            prop_assert_eq!(p.kernel.rank.clone(), BigInt::from(n1 * n2 - 1));
        }
    }

    #[test]
    fn acyclic_output(cover in 1u64..20, rank in 1u64..10, genus in 0u64..10) {
        let degree = rank as i64 * (genus as i64 - 1);
        let st = pushforward_splitting(&AcyclicSpec::new(cover, rank, degree, genus).unwrap()).unwrap();
        prop_assert!(euler_characteristic(&st).is_zero());
        let p = polygon_from_splitting(&st);
        prop_assert!(p.is_semistable());
        prop_assert_eq!(p.rank(), BigInt::from(cover * rank));
        prop_assert_eq!(p.pieces()[0].slope(), (BigInt::from(-1), BigInt::one()));
    }
}

#[test]
fn two_hypersurface_rank_identity() {
    for n1 in 1..=30i64 {
        for n2 in 1..=30i64 {
            if n1 + n2 < 3 {
                continue;
            }
            let lhs = binomial(n1 + n2 - 1, 2) - binomial(n1 - 1, 2) - binomial(n2 - 1, 2);
            assert_eq!(lhs, BigInt::from(n1 * n2 - 1), "n1 = {n1}, n2 = {n2}");
        }
    }
}

// Curves of bidegree (d1, d2) in P^3 sit on the blow-up of P^3 along a line,
// which is the P^2-bundle P(O ⊕ O ⊕ O(1)) over P^1 (deg E = 1). Both routes
// must give the same rank and degree for the quotient by O.
#[test]
fn kernel_matches_complete_intersection_curves() {
    for d1 in 1..=7u32 {
        for d2 in 1..=7u32 {
            if d1 + d2 < 3 {
                continue;
            }
            let spec = TwoHypersurfaceSpec::new(d1, d2, 0, 0, 1).unwrap();
            let kernel = quotient_presentation(&spec).unwrap().presentation().unwrap().kernel.clone();
            let ci = splitting_type(&CompleteIntersectionSpec::new(3, vec![d1, d2]).unwrap()).unwrap();
            assert_eq!(kernel.rank, ci.rank() - 1, "({d1}, {d2})");
            assert_eq!(kernel.degree, ci.degree(), "({d1}, {d2})");
        }
    }
}

#[test]
fn large_inputs_stay_exact() {
    // Coefficients beyond 64 bits: seven sextics in P^60 and a huge Hilbert value.
    let spec = CompleteIntersectionSpec::new(60, vec![6; 7]).unwrap();
    let st = splitting_type(&spec).unwrap();
    assert_eq!(st, splitting_product_oracle(&[6; 7]).unwrap());
    let h = hilbert_function(&spec, 0, 60).unwrap();
    assert_eq!(h, binomial(120, 60));
    assert!(h > BigInt::from(u64::MAX));
}
