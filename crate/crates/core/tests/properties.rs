use proptest::prelude::*;

use strongchordal::catalog;
use strongchordal::domination::{
    greedy_domination, max_disjoint_in_neighborhoods_bruteforce, min_dominating_bruteforce, verify_disjoint_in_neighborhoods,
    verify_dominating,
};
use strongchordal::gamma::{
    check_biadjacency_ordering, check_strong_ordering, find_strong_ordering, gamma_free_matrix, is_totally_balanced_bruteforce,
    BiadjacencyOrdering,
};
use strongchordal::io::{emit_digraph, parse_digraph, serialize_result, DigraphDocument};
use strongchordal::recognize::{self as rec, Confidence, Layering};
use strongchordal::{BitMatrix, Digraph, Ordering};

fn digraph(max_n: usize) -> impl Strategy<Value = Digraph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut d = Digraph::new(n);
            for (c, b) in bits.into_iter().enumerate() {
                if b {
                    d.add_arc(c / n, c % n);
                }
            }
            d
        })
    })
}

fn tournament(max_n: usize) -> impl Strategy<Value = Digraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut d = Digraph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        d.add_arc(u, v);
                    } else {
                        d.add_arc(v, u);
                    }
                    k += 1;
                }
            }
            d
        })
    })
}

fn matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r)
            .prop_map(|rows| BitMatrix::from_rows(&rows).unwrap())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn auto_recognition_is_sound_and_matches_oracle(d in digraph(6)) {
        let r = rec::recognize_auto(&d);
        prop_assert_eq!(r.is_yes(), find_strong_ordering(&d, None).is_found());
        if let Some(ord) = &r.ordering {
            prop_assert!(check_strong_ordering(&d, ord).unwrap().is_none());
        } else if r.confidence == Confidence::Certified {
            prop_assert!(rec::verify_certificate(&d, r.certificate.as_ref().unwrap()));
        }
    }

    #[test]
    fn strong_orderings_survive_relabelling_and_reversal(
        (d, perm) in digraph(6).prop_flat_map(|d| { let n = d.n(); (Just(d), permutation(n)) })
    ) {
        if let Some(ord) = find_strong_ordering(&d, None).ordering() {
            prop_assert!(check_strong_ordering(&d.reverse(), ord).unwrap().is_none());
            let mut inv = vec![0; perm.len()];
            for (a, &v) in perm.iter().enumerate() {
                inv[v] = a;
            }
            let moved = Ordering::new(ord.as_slice().iter().map(|&v| inv[v]).collect()).unwrap();
            prop_assert!(check_strong_ordering(&d.relabeled(&perm), &moved).unwrap().is_none());
        }
    }

    #[test]
    fn gamma_free_matrix_matches_total_balance(m in matrix(6)) {
        let balanced = is_totally_balanced_bruteforce(&m).unwrap().is_none();
        match gamma_free_matrix(&m) {
            BiadjacencyOrdering::Found { rows, cols } => {
                prop_assert!(balanced);
                prop_assert!(check_biadjacency_ordering(&m, &rows, &cols).unwrap().is_none());
            }
            BiadjacencyOrdering::Impossible => prop_assert!(!balanced),
            BiadjacencyOrdering::Unresolved => prop_assert!(false, "small matrices are always resolved"),
        }
    }

    #[test]
    fn packing_never_exceeds_domination(d in digraph(7)) {
        if (0..d.n()).all(|v| d.in_degree(v) > 0) {
            let min = min_dominating_bruteforce(&d).unwrap();
            let max = max_disjoint_in_neighborhoods_bruteforce(&d).unwrap();
            prop_assert!(verify_dominating(&d, &min));
            prop_assert!(verify_disjoint_in_neighborhoods(&d, &max));
            prop_assert!(max.len() <= min.len());
            if let Some(ord) = find_strong_ordering(&d, None).ordering() {
                let s = greedy_domination(&d, ord).unwrap();
                prop_assert_eq!(s.dominating_set.len(), min.len());
                prop_assert_eq!(s.packing_set.len(), max.len());
            }
        }
    }

    #[test]
    fn text_format_round_trips(d in digraph(8), name in "[a-z]{1,6}") {
        let mut doc = DigraphDocument::from_digraph(&d);
        doc.name = Some(name);
        let text = emit_digraph(&doc);
        let back = parse_digraph(&text).unwrap();
        prop_assert_eq!(back.normalized(), doc.normalized());
        prop_assert_eq!(back.to_digraph().unwrap(), d);
        prop_assert_eq!(emit_digraph(&back), text);
    }

    #[test]
    fn layers_hold_every_arc(d in digraph(8)) {
        let d = d.without_loops();
        match rec::layering(&d).unwrap() {
            Layering::Layers(layers) => {
                let mut at = vec![0; d.n()];
                for (i, l) in layers.iter().enumerate() {
                    for &v in l {
                        at[v] = i;
                    }
                }
                prop_assert!(d.arcs().iter().all(|&(u, v)| at[v] == at[u] + 1));
            }
            Layering::Unbalanced(walk) => {
                // net arc count along the closed walk is non-zero
                let k = walk.len();
                let net: i64 = (0..k)
                    .map(|i| {
                        let (a, b) = (walk[i], walk[(i + 1) % k]);
                        if d.has_arc(a, b) { 1 } else if d.has_arc(b, a) { -1 } else { 0 }
                    })
                    .sum();
                let steps_are_arcs = (0..k).all(|i| d.adjacent(walk[i], walk[(i + 1) % k]));
                prop_assert!(steps_are_arcs);
                prop_assert_ne!(net, 0);
            }
        }
    }

    #[test]
    fn restoring_arcs_restore_transitivity(d in tournament(9)) {
        for (u, v) in rec::transitivity_restoring_arcs(&d) {
            let mut e = d.clone();
            e.remove_arc(u, v);
            e.add_arc(v, u);
            prop_assert!(rec::transitive_order(&e).is_some());
        }
    }

    #[test]
    fn fast_triangle_pairs_match_exhaustive_search(d in tournament(8)) {
        let fast = rec::arc_disjoint_triangle_pair(&d);
        prop_assert_eq!(fast.is_some(), catalog::find_arc_disjoint_triangles(&d).is_some());
        if let Some((a, b)) = fast {
            prop_assert!(catalog::is_directed_triangle(&d, &a) && catalog::is_directed_triangle(&d, &b));
            prop_assert!(catalog::arc_disjoint(&a, &b));
        }
    }

    #[test]
    fn one_way_bigraphs_are_complementary(p in 1usize..5, q in 1usize..5, seed in any::<u64>()) {
        let mut d = Digraph::new(p + q);
        for i in 0..p {
            for j in 0..q {
                if seed >> ((i * q + j) % 64) & 1 == 1 { d.add_arc(i, p + j) } else { d.add_arc(p + j, i) }
            }
        }
        let xs: Vec<usize> = (0..p).collect();
        let ys: Vec<usize> = (p..p + q).collect();
        let (bx, by) = rec::one_way_bigraphs(&d, &xs, &ys).unwrap();
        for i in 0..p {
            for j in 0..q {
                prop_assert_eq!(bx.biadj.get(i, j), !by.biadj.get(j, i));
            }
        }
    }

    #[test]
    fn json_is_stable(d in digraph(5)) {
        let r = rec::recognize_auto(&d);
        let a = serialize_result(&r);
        prop_assert_eq!(&a, &serialize_result(&rec::recognize_auto(&d)));
        prop_assert!(a.starts_with(r#"{"verdict":"#), "key order: {}", a);
        let v: serde_json::Value = serde_json::from_str(&a).unwrap();
        prop_assert_eq!(v.get("ordering").is_some(), r.is_yes());
    }
}
