use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cliquehull::hull::{check_certificate, membership_coefficients, membership_inequalities};
use cliquehull::operators::{balance_multipartite, cone_over_link, symmetrize_to_multipartite, zykov_shift};
use cliquehull::turan::{complete_multipartite, turan_clique_vector, turan_graph, turan_parts};
use cliquehull::verify::random_colorable_complex;
use cliquehull::{Face, Graph, HullCertificate, HullInstance, IntVector, SimplicialComplex};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::empty(n).unwrap();
            let mut i = 0;
            for u in 1..=n {
                for v in u + 1..=n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn arb_complex(max_n: usize) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(1u64..1 << n, 0..8).prop_map(move |masks| {
            let facets: Vec<Face> = masks.into_iter().map(Face::from_mask).collect();
            SimplicialComplex::from_facets(n, &facets).unwrap()
        })
    })
}

/// Clique counts by scanning every vertex subset.
fn subset_scan(g: &Graph) -> Vec<u64> {
    let n = g.order();
    let mut counts = vec![0u64; n];
    for mask in 1u64..1 << n {
        let verts: Vec<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        if verts.iter().all(|&u| verts.iter().all(|&v| u == v || g.has_edge(u, v))) {
            counts[verts.len() - 1] += 1;
        }
    }
    counts
}

fn chromatic_number(g: &Graph) -> usize {
    (0..=g.order()).find(|&r| g.is_r_colorable(r)).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_vector_matches_subset_scan(g in arb_graph(11)) {
        prop_assert_eq!(g.clique_vector().into_entries(), subset_scan(&g));
    }

    #[test]
    fn deletion_link_recurrence(delta in arb_complex(7), v in 1usize..=7) {
        // f_j(delta) = f_j(delta - v) + f_{j-1}(link v)
        prop_assume!(delta.vertex_set().contains(v));
        let link = delta.link(v).unwrap();
        let rest = delta.induced_subcomplex(delta.vertex_set().without(v));
        for j in 1..=delta.ground_size() {
            prop_assert_eq!(delta.face_count(j), rest.face_count(j) + link.face_count(j - 1));
        }
    }

    #[test]
    fn skeleton_is_truncation(delta in arb_complex(7), k in 1usize..=7) {
        prop_assume!(k <= delta.ground_size());
        let skeleton = delta.skeleton(k);
        prop_assert_eq!(skeleton.face_vector(), delta.face_vector().truncation(k).unwrap());
        prop_assert!(skeleton.is_downward_closed());
    }

    #[test]
    fn flag_complexes_lie_in_the_turan_hull(g in arb_graph(10)) {
        let n = g.order();
        let r = g.clique_number().max(1);
        let f = SimplicialComplex::clique_complex(&g).face_vector();
        let t = turan_clique_vector(n, r).unwrap();
        prop_assert!(f.dominated_by(&t));
        for k in 2..=n {
            prop_assert!(f.get(k) as u128 * t.get(k - 1) as u128 <= f.get(k - 1) as u128 * t.get(k) as u128);
        }
        let cert = HullInstance::new(t.clone()).unwrap().by_coefficients(&f).unwrap();
        prop_assert!(cert.is_inside());
        prop_assert_eq!(check_certificate(&f, &t, &cert), Ok(()));
    }

    #[test]
    fn join_identity(h in arb_graph(9), m in 0usize..5) {
        let joined = h.join_with_independent_set(m).unwrap();
        let (ch, cg) = (h.clique_vector(), joined.clique_vector());
        for t in 1..=joined.order() {
            prop_assert_eq!(cg.get(t), m as u64 * ch.get_or_unit(t - 1) + ch.get(t));
        }
    }

    #[test]
    fn zykov_shift_keeps_order_and_clique_bound(g in arb_graph(12), pick in any::<proptest::sample::Index>()) {
        let n = g.order();
        let non_edges: Vec<(usize, usize)> = (1..=n)
            .flat_map(|u| (1..=n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v && !g.has_edge(u, v))
            .collect();
        prop_assume!(!non_edges.is_empty());
        let (u, v) = *pick.get(&non_edges);
        let shifted = zykov_shift(&g, u, v).unwrap();
        prop_assert_eq!(shifted.order(), n);
        prop_assert!(shifted.clique_number() <= g.clique_number());
        prop_assert_eq!(shifted.neighborhood(u).unwrap(), g.neighborhood(v).unwrap());
    }

    #[test]
    fn symmetrization_on_larger_graphs(g in arb_graph(14)) {
        let n = g.order();
        let sym = symmetrize_to_multipartite(&g);
        prop_assert!(sym.rounds <= n);
        prop_assert!(sym.trace.len() < n);
        prop_assert!(sym.graph.is_complete_multipartite());
        prop_assert!(sym.graph.clique_number() <= g.clique_number());
        let parts = sym.graph.multipartite_parts().unwrap().len();
        let balanced = balance_multipartite(&sym.graph).unwrap();
        prop_assert_eq!(balanced.clique_vector(), turan_clique_vector(n, parts).unwrap());
    }

    #[test]
    fn turan_vector_is_a_sum_over_part_subsets(n in 1usize..=20, r in 1usize..=20) {
        // e_k of the part sizes, summed directly over all subsets of parts
        let parts = turan_parts(n, r).unwrap();
        let mut expected = vec![0u64; n];
        for mask in 1u64..1 << parts.len() {
            let chosen: Vec<usize> = (0..parts.len()).filter(|&i| mask >> i & 1 == 1).collect();
            expected[chosen.len() - 1] += chosen.iter().map(|&i| parts[i] as u64).product::<u64>();
        }
        prop_assert_eq!(turan_clique_vector(n, r).unwrap().into_entries(), expected);
    }

    #[test]
    fn turan_dominates_any_multipartite_graph(sizes in proptest::collection::vec(1usize..4, 1..6)) {
        let n: usize = sizes.iter().sum();
        let g = complete_multipartite(&sizes).unwrap();
        prop_assert!(g.clique_vector().dominated_by(&turan_clique_vector(n, sizes.len()).unwrap()));
    }

    #[test]
    fn hull_deciders_agree(f in proptest::collection::vec(0u64..40, 1..6), g in proptest::collection::vec(1u64..40, 1..6)) {
        let d = f.len().max(g.len());
        let f = IntVector::new(f).resized(d);
        let g = IntVector::new(g).resized(d);
        let a = membership_inequalities(&f, &g).unwrap();
        let b = membership_coefficients(&f, &g).unwrap();
        prop_assert_eq!(a.is_inside(), b.is_inside());
        prop_assert_eq!(check_certificate(&f, &g, &a), Ok(()));
        prop_assert_eq!(check_certificate(&f, &g, &b), Ok(()));
        let text = serde_json::to_string(&b).unwrap();
        let back: HullCertificate = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, b);
    }

    #[test]
    fn colorable_complexes_lie_in_the_turan_hull(seed in any::<u64>(), n in 2usize..=9, r in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let delta = random_colorable_complex(n, r, &mut rng).unwrap();
        prop_assert!(chromatic_number(&delta.underlying_graph()) <= r);
        let f = delta.face_vector();
        let t = turan_clique_vector(n, r).unwrap();
        let hull = HullInstance::new(t.clone()).unwrap();
        prop_assert!(hull.by_inequalities(&f).unwrap().is_inside());
        prop_assert!(hull.by_coefficients(&f).unwrap().is_inside());
    }

    #[test]
    fn cone_decomposition_counts(delta in arb_complex(7), t in 1usize..=7) {
        prop_assume!(delta.vertex_set().contains(t));
        let cone = cone_over_link(&delta, t).unwrap();
        prop_assert!(cone.shifted.is_downward_closed());
        prop_assert_eq!(cone.multiplicity, cone.moved.len() + 1);
        for j in 1..=delta.ground_size() {
            prop_assert_eq!(cone.shifted.face_count(j), cone.predicted_face_count(j));
        }
        prop_assert!(chromatic_number(&cone.shifted.underlying_graph()) <= chromatic_number(&delta.underlying_graph()).max(1));
    }
}

#[test]
fn turan_graph_is_tight_for_every_ratio() {
    for n in 1..=10 {
        for r in 1..=n {
            let c = turan_graph(n, r).unwrap().clique_vector();
            let t = turan_clique_vector(n, r).unwrap();
            assert_eq!(c, t);
            let cert = HullInstance::new(t.clone()).unwrap().by_inequalities(&c).unwrap();
            assert!(cert.is_inside());
        }
    }
}
