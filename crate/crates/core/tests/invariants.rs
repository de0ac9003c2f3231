use bigraph_entropy::constructions::{b_nmy, prop32_maximizer};
use bigraph_entropy::indices::{builtin_indices, ti_g};
use bigraph_entropy::kernel::{delta, f, DegreeSequence};
use bigraph_entropy::majorization::{is_bigraphical, karamata_compare, majorizes, KaramataOrdering};
use bigraph_entropy::tableau::{is_difference_graph, is_young, Biadjacency, BipartiteDegreePair, YoungTableau};
use proptest::prelude::*;

fn tableau_strategy() -> impl Strategy<Value = YoungTableau> {
    proptest::collection::vec(1u64..=8, 1..=6).prop_map(|mut rows| {
        rows.sort_unstable_by(|a, b| b.cmp(a));
        YoungTableau::new(rows).unwrap()
    })
}

fn matrix_strategy(max: usize) -> impl Strategy<Value = Vec<Vec<bool>>> {
    (1..=max, 1..=max).prop_flat_map(|(nu, nv)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), nv), nu)
    })
}

proptest! {
    #[test]
    fn f_is_convex(x in 1u64..10_000) {
        prop_assert!(f(x + 1) + f(x - 1) >= 2.0 * f(x) - 1e-9);
    }

    #[test]
    fn delta_is_increasing(x in 1u64..10_000) {
        prop_assert!(delta(x + 1).unwrap() > delta(x).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(t in tableau_strategy()) {
        let c = t.conjugate();
        prop_assert_eq!(c.conjugate(), t.clone());
        prop_assert_eq!(c.cell_count(), t.cell_count());
        prop_assert!((c.h() - t.h()).abs() <= 1e-9 * t.h().abs().max(1.0));
    }

    // h(T) equals the sum over cells of ln(row length * column height).
    #[test]
    fn cell_sum_identity(t in tableau_strategy()) {
        let cols = t.column_heights();
        let mut total = 0.0;
        for &len in t.rows() {
            for &height in &cols[..len as usize] {
                total += ((len * height) as f64).ln();
            }
        }
        prop_assert!((total - t.h()).abs() <= 1e-9 * t.h().abs().max(1.0));
    }

    // h <= m ln m, with equality exactly for rectangles.
    #[test]
    fn h_bounded_by_m_ln_m(t in tableau_strategy()) {
        let m = t.cell_count() as f64;
        let bound = m * m.ln();
        if t.is_rectangle() {
            prop_assert!((t.h() - bound).abs() <= 1e-9 * bound.abs().max(1.0));
        } else {
            prop_assert!(t.h() < bound - 1e-9);
        }
    }

    #[test]
    fn majorization_is_a_partial_order(
        a in proptest::collection::vec(0u64..8, 1..6),
        b in proptest::collection::vec(0u64..8, 1..6),
    ) {
        let a = DegreeSequence::new(a);
        let b = DegreeSequence::new(b);
        prop_assert!(majorizes(&a, &a));
        if majorizes(&a, &b) && majorizes(&b, &a) {
            prop_assert_eq!(a.nonzero(), b.nonzero());
        }
    }

    // Karamata: strict majorization forces a strictly larger h.
    #[test]
    fn karamata_orders_h(
        a in proptest::collection::vec(0u64..8, 1..6),
        b in proptest::collection::vec(0u64..8, 1..6),
    ) {
        let a = DegreeSequence::new(a);
        let b = DegreeSequence::new(b);
        match karamata_compare(&a, &b) {
            KaramataOrdering::Equal => prop_assert!((a.h() - b.h()).abs() <= 1e-9),
            KaramataOrdering::StrictlyGreater => prop_assert!(a.h() > b.h() - 1e-9),
            KaramataOrdering::Incomparable => {}
        }
    }

    // Gale-Ryser agrees with exhaustive 0/1-matrix realization.
    #[test]
    fn gale_ryser_matches_exhaustive_search(
        a in proptest::collection::vec(1u64..=4, 1..=3),
        b in proptest::collection::vec(1u64..=4, 1..=3),
    ) {
        let da = DegreeSequence::new(a.clone());
        let db = DegreeSequence::new(b.clone());
        let (nu, nv) = (a.len(), b.len());
        let mut realizable = false;
        'outer: for mask in 0u32..(1 << (nu * nv)) {
            for (i, &want) in da.degrees().iter().enumerate() {
                let row = (0..nv).filter(|j| mask >> (i * nv + j) & 1 == 1).count() as u64;
                if row != want {
                    continue 'outer;
                }
            }
            for (j, &want) in db.degrees().iter().enumerate() {
                let col = (0..nu).filter(|i| mask >> (i * nv + j) & 1 == 1).count() as u64;
                if col != want {
                    continue 'outer;
                }
            }
            realizable = true;
            break;
        }
        prop_assert_eq!(is_bigraphical(&da, &db), realizable);
    }

    // A bipartite graph is a difference graph exactly when sorting its
    // classes by degree yields a Young tableau.
    #[test]
    fn young_iff_difference_graph(matrix in matrix_strategy(6)) {
        let adj = Biadjacency::from_matrix(matrix).unwrap();
        let pair = BipartiteDegreePair::new(
            DegreeSequence::new(adj.u_degrees()),
            DegreeSequence::new(adj.v_degrees()),
        ).unwrap();
        prop_assert_eq!(is_young(&pair, &adj).unwrap(), is_difference_graph(&adj));
    }

    // The entropy index sums ln(d_u d_v) over edges, which is h.
    #[test]
    fn entropy_index_equals_h(t in tableau_strategy()) {
        let registry = builtin_indices();
        let g = registry.get("entropy").unwrap();
        prop_assert!((ti_g(&t, g) - t.h()).abs() <= 1e-9 * t.h().abs().max(1.0));
    }

    #[test]
    fn prop32_shape_is_the_b_shape(
        (q, y, r) in (2u64..=30).prop_flat_map(|q| (Just(q), 2..=q))
            .prop_flat_map(|(q, y)| (Just(q), Just(y), 1..y)),
    ) {
        let shape = b_nmy(None, q * y + r, y).unwrap().tableau();
        prop_assert_eq!(shape, prop32_maximizer(q, y, r).unwrap());
    }
}
