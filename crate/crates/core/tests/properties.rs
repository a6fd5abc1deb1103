use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::{select, Index};

use mcgraph::canon::{canonical_form, is_isomorphic};
use mcgraph::decomposition::tight_cut_decomposition;
use mcgraph::format::{decode_graph6, decode_mg, encode_graph6, encode_mg};
use mcgraph::generate::enumerate_connected_graphs;
use mcgraph::graph::{Multigraph, VertexSet};
use mcgraph::matching::max_matching;
use mcgraph::mc::{is_brick, is_matching_covered, removable_classes, removable_edges, RemovableClass};
use mcgraph::wheels::{is_wheel_like, make_wheel, splice, SpliceSpec, WheelSpec};

/// Matching covered simple graphs on 4, 6 and 8 vertices.
fn mc_pool() -> &'static Vec<Multigraph> {
    static POOL: OnceLock<Vec<Multigraph>> = OnceLock::new();
    POOL.get_or_init(|| {
        [4, 6, 8]
            .iter()
            .flat_map(|&n| enumerate_connected_graphs(n, 2).unwrap())
            .filter(is_matching_covered)
            .collect()
    })
}

fn bricks_up_to_six() -> &'static Vec<Multigraph> {
    static POOL: OnceLock<Vec<Multigraph>> = OnceLock::new();
    POOL.get_or_init(|| mc_pool().iter().filter(|g| g.n() <= 6 && is_brick(g)).cloned().collect())
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let k = pairs.len();
        proptest::collection::vec(any::<bool>(), k).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            Multigraph::new(n, edges).unwrap()
        })
    })
}

fn relabel(g: &Multigraph, seed: &[Index]) -> Multigraph {
    let mut perm: Vec<usize> = (0..g.n()).collect();
    for (i, ix) in seed.iter().enumerate().take(g.n()) {
        let j = i + ix.index(g.n() - i);
        perm.swap(i, j);
    }
    g.permute(&perm)
}

/// Adds a parallel copy of each listed edge.
fn thicken(g: &Multigraph, picks: &[Index]) -> Multigraph {
    let mut h = g.clone();
    for ix in picks {
        let (a, b) = g.endpoints(ix.index(g.m()));
        h.add_edge(a, b).unwrap();
    }
    h
}

fn brute_matching(adj: &[u64], free: u64) -> usize {
    if free == 0 {
        return 0;
    }
    let v = free.trailing_zeros() as usize;
    let rest = free & !(1 << v);
    let mut best = brute_matching(adj, rest);
    let mut nbrs = adj[v] & rest;
    while nbrs != 0 {
        let w = nbrs.trailing_zeros() as usize;
        nbrs &= nbrs - 1;
        best = best.max(1 + brute_matching(adj, rest & !(1 << w)));
    }
    best
}

fn mc_multigraph() -> impl Strategy<Value = Multigraph> {
    (select(mc_pool().clone()), proptest::collection::vec(any::<Index>(), 0..4), proptest::collection::vec(any::<Index>(), 8))
        .prop_map(|(g, picks, perm)| relabel(&thicken(&g, &picks), &perm))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn canonical_form_ignores_labels(g in arb_graph(9), perm in proptest::collection::vec(any::<Index>(), 9)) {
        let h = relabel(&g, &perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn canonical_form_separates_edge_counts(g in arb_graph(7)) {
        if g.m() > 0 {
            let h = g.delete_edges(&[0]).unwrap();
            prop_assert_ne!(canonical_form(&g), canonical_form(&h));
        }
    }

    #[test]
    fn formats_round_trip(g in mc_multigraph(), s in arb_graph(12)) {
        prop_assert_eq!(decode_mg(&encode_mg(&g)).unwrap(), g);
        // graph6 fixes its own edge order
        let back = decode_graph6(&encode_graph6(&s).unwrap()).unwrap();
        prop_assert_eq!(back.multiplicity_matrix(), s.multiplicity_matrix());
    }

    #[test]
    fn maximum_matching_matches_brute_force(g in arb_graph(10)) {
        let m = max_matching(&g);
        let mut covered = VertexSet::EMPTY;
        for &e in &m.edges {
            let (a, b) = g.endpoints(e);
            prop_assert!(!covered.contains(a) && !covered.contains(b));
            covered.insert(a);
            covered.insert(b);
        }
        prop_assert_eq!(m.len(), brute_matching(&g.adjacency(), g.vertices().0));
    }

    #[test]
    fn parallel_copies_are_removable(g in mc_multigraph()) {
        let rem = removable_edges(&g).unwrap();
        for e in 0..g.m() {
            let (a, b) = g.endpoints(e);
            if g.multiplicity(a, b) > 1 {
                prop_assert!(rem.contains(&e));
            }
        }
    }

    #[test]
    fn removable_classes_follow_definitions(g in mc_multigraph()) {
        let classes = removable_classes(&g).unwrap();
        let mut singles = Vec::new();
        for c in &classes {
            match *c {
                RemovableClass::Single(e) => {
                    prop_assert!(is_matching_covered(&g.delete_edges(&[e]).unwrap()));
                    singles.push(e);
                }
                RemovableClass::Doubleton(e, f) => {
                    prop_assert!(is_matching_covered(&g.delete_edges(&[e, f]).unwrap()));
                    prop_assert!(!is_matching_covered(&g.delete_edges(&[e]).unwrap()));
                    prop_assert!(!is_matching_covered(&g.delete_edges(&[f]).unwrap()));
                }
            }
        }
        for c in &classes {
            if let RemovableClass::Doubleton(e, f) = *c {
                prop_assert!(!singles.contains(&e) && !singles.contains(&f));
            }
        }
        prop_assert_eq!(singles, removable_edges(&g).unwrap());
    }

    #[test]
    fn decomposition_accounts_for_every_vertex(g in mc_multigraph(), perm in proptest::collection::vec(any::<Index>(), 8)) {
        let d = tight_cut_decomposition(&g).unwrap();
        let cuts = d.cut_trace.len();
        prop_assert_eq!(d.components.len(), cuts + 1);
        let total: usize = d.components.iter().map(|c| c.graph.n()).sum();
        prop_assert_eq!(total, g.n() + 2 * cuts);
        for c in &d.components {
            prop_assert!(is_matching_covered(&c.graph));
        }
        let other = tight_cut_decomposition(&relabel(&g, &perm)).unwrap();
        prop_assert_eq!(d.brick_count(), other.brick_count());
        prop_assert_eq!(d.simple_signature(), other.simple_signature());
        if g.is_bipartite() {
            prop_assert_eq!(d.brick_count(), 0);
        }
    }

    #[test]
    fn splicing_preserves_matching_covered(
        g in mc_multigraph(),
        h in mc_multigraph(),
        u in any::<Index>(),
        v in any::<Index>(),
        order in proptest::collection::vec(any::<Index>(), 8),
    ) {
        let u = u.index(g.n());
        let v = v.index(h.n());
        let d = g.degree(u);
        prop_assume!(d == h.degree(v));
        let mut theta: Vec<usize> = (0..d).collect();
        for (i, ix) in order.iter().enumerate().take(d) {
            let j = i + ix.index(d - i);
            theta.swap(i, j);
        }
        let s = splice(&SpliceSpec { g: g.clone(), u, h: h.clone(), v, theta }).unwrap();
        prop_assert_eq!(s.n(), g.n() + h.n() - 2);
        prop_assert_eq!(s.m(), g.m() + h.m() - d);
        prop_assert!(is_matching_covered(&s));
    }

    #[test]
    fn hub_set_is_exactly_the_defined_set(
        g in select(bricks_up_to_six().clone()),
        picks in proptest::collection::vec(any::<Index>(), 0..3),
    ) {
        let g = thicken(&g, &picks);
        let classes = removable_classes(&g).unwrap();
        let expected: Vec<usize> = (0..g.n())
            .filter(|&h| {
                classes.iter().all(|c| c.edges().iter().filter(|&&e| g.is_incident(e, h)).count() == 1)
            })
            .collect();
        prop_assert_eq!(is_wheel_like(&g).unwrap().to_vec(), expected);
    }

    #[test]
    fn odd_wheels_with_hub_parallels_have_one_hub(
        k in prop::sample::select(vec![5usize, 7]),
        mults in proptest::collection::vec(1usize..=3, 7),
    ) {
        let w = make_wheel(&WheelSpec { k, mults: mults[..k].to_vec() }).unwrap();
        prop_assert_eq!(is_wheel_like(&w).unwrap().to_vec(), vec![k]);
    }
}
