//! Property tests for the structural invariants: join degrees, complement
//! involution, blow-up projections, Turán extremality, twin-reduction
//! preservation, chromatic pipeline agreement, canonical-form invariance and
//! graph6 round trips.

use proptest::prelude::*;

use kfree::canon::canonical_form;
use kfree::enumerate::psi_oracle;
use kfree::graph::Graph;
use kfree::graph6::{from_graph6, pair_at, to_graph6};
use kfree::solve::{
    chromatic_number, chromatic_number_unreduced, clique_number, find_homomorphism,
    find_homomorphism_unreduced, Outcome, DEFAULT_NODE_BUDGET as B,
};

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let bits = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), bits).prop_map(move |mask| {
            let edges = mask
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(k, _)| pair_at(k));
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn complement_is_involution(g in graph_strategy(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn join_min_degree_formula(a in graph_strategy(7), b in graph_strategy(7)) {
        let joined = a.join(&b);
        let expected = match (a.min_degree(), b.min_degree()) {
            (Some(da), Some(db)) => Some((da + b.order()).min(db + a.order())),
            (Some(da), None) => Some(da + b.order()),
            (None, Some(db)) => Some(db + a.order()),
            (None, None) => None,
        };
        prop_assert_eq!(joined.min_degree(), expected);
    }

    #[test]
    fn join_decompose_rejoins_in_order(g in graph_strategy(9)) {
        let parts = g.join_decompose();
        let mut rejoined = Graph::empty(0);
        let mut order = Vec::new();
        for (verts, part) in &parts {
            rejoined = rejoined.join(part);
            order.extend_from_slice(verts);
        }
        let mut perm = vec![0usize; g.order()];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        prop_assert_eq!(g.permute(&perm), rejoined);
    }

    #[test]
    fn blow_up_projects_and_preserves_cliques(g in graph_strategy(6), t in 1usize..4) {
        let b = g.blow_up(t).unwrap();
        // class projection is a homomorphism onto the base
        if g.order() > 0 {
            prop_assert!(find_homomorphism(&b, &g, B).is_found());
        }
        let w_base = clique_number(&g, B).found().unwrap();
        let w_blown = clique_number(&b, B).found().unwrap();
        prop_assert_eq!(w_base.max(usize::from(b.order() > 0)), w_blown);
    }

    #[test]
    fn turan_is_extremal(p in 1usize..6, n in 0usize..18) {
        let t = Graph::turan(p, n).unwrap();
        if n >= p {
            prop_assert!(kfree::solve::find_clique(&t, p, B).is_found());
        }
        prop_assert!(kfree::solve::find_clique(&t, p + 1, B).is_absent());
        if n > 0 {
            prop_assert_eq!(t.min_degree(), Some(n - n.div_ceil(p)));
        }
    }

    #[test]
    fn twin_reduction_preserves_everything(g in graph_strategy(8), h in graph_strategy(5)) {
        let (q, class_of) = g.twin_reduce();
        for (v, &c) in class_of.iter().enumerate() {
            // class members share the row that defines the class
            prop_assert_eq!(g.neighbors(v).to_vec(), g.neighbors(q_rep(&class_of, c)).to_vec());
        }
        // every clique meets each twin class at most once, so ω transfers
        prop_assert_eq!(
            clique_number(&g, B).found().unwrap(),
            clique_number(&q, B).found().unwrap()
        );
        if g.order() > 0 {
            let (chi_g, _) = chromatic_number_unreduced(&g, B).unwrap();
            let (chi_q, _) = chromatic_number_unreduced(&q, B).unwrap();
            prop_assert_eq!(chi_g, chi_q);
        }
        prop_assert_eq!(
            find_homomorphism_unreduced(&g, &h, B).is_found(),
            find_homomorphism_unreduced(&q, &h, B).is_found()
        );
    }

    #[test]
    fn chromatic_pipeline_agrees_with_direct_search(g in graph_strategy(11)) {
        if g.order() > 0 {
            let (chi, coloring) = chromatic_number(&g, B).unwrap();
            let (direct, _) = chromatic_number_unreduced(&g, B).unwrap();
            prop_assert_eq!(chi, direct);
            prop_assert!(g.edges().all(|(u, v)| coloring[u] != coloring[v]));
            prop_assert_eq!(coloring.iter().max().map(|&m| m as usize + 1).unwrap_or(0), chi);
        }
    }

    #[test]
    fn canonical_form_is_permutation_invariant(
        g in graph_strategy(8),
        seed in any::<u64>(),
    ) {
        let n = g.order();
        let mut perm: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle from the seed
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (state >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm);
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn graph6_round_trip_is_exact(g in graph_strategy(11)) {
        let s = to_graph6(&g);
        let back = from_graph6(&s).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back), s);
    }
}

fn q_rep(class_of: &[usize], class: usize) -> usize {
    class_of.iter().position(|&c| c == class).unwrap()
}

#[test]
fn psi_is_monotone_in_h() {
    // the maximum over a shrinking class cannot grow
    for n in 1..=6 {
        for r in 2..=3 {
            let values: Vec<Option<usize>> =
                (1..=4).map(|h| psi_oracle(n, r, h, B).unwrap().value).collect();
            for (h, pair) in values.windows(2).enumerate() {
                match (pair[0], pair[1]) {
                    (Some(a), Some(b)) => {
                        assert!(b <= a, "psi({n},{r},{}) > psi({n},{r},{})", h + 2, h + 1)
                    }
                    (None, Some(_)) => panic!("psi({n},{r},{}) defined but not at h-1", h + 2),
                    _ => {}
                }
            }
        }
    }
}

#[test]
fn certificate_soundness_on_solver_returns() {
    use kfree::cert::Certificate;
    use kfree::generators::{andrasfai, haggkvist, mycielski};
    use kfree::solve::{contains_subgraph, find_clique, is_k_colorable};

    let m3 = mycielski(3).unwrap();
    let coloring = is_k_colorable(&m3, 4, B).found().unwrap();
    Certificate::Coloring(coloring).check(&m3, None).unwrap();

    let k5 = Graph::complete(5);
    let clique = find_clique(&k5, 4, B).found().unwrap();
    Certificate::Clique(clique).check(&k5, None).unwrap();

    let h1 = haggkvist(1).unwrap();
    let map = find_homomorphism(&h1, &m3, B).found().unwrap();
    Certificate::Homomorphism(map).check(&h1, Some(&m3)).unwrap();

    let emb = contains_subgraph(&h1, &m3, B).found().unwrap();
    Certificate::Embedding(emb).check(&h1, Some(&m3)).unwrap();

    let blown = andrasfai(2).unwrap().blow_up(2).unwrap();
    let proj = find_homomorphism(&blown, &andrasfai(2).unwrap(), B).found().unwrap();
    Certificate::Homomorphism(proj)
        .check(&blown, Some(&andrasfai(2).unwrap()))
        .unwrap();
}

#[test]
fn out_of_budget_is_never_absent() {
    // a tiny budget must surface as OutOfBudget, not as a wrong "none"
    let g = Graph::complete(40);
    match kfree::solve::find_clique(&g, 30, 5) {
        Outcome::OutOfBudget => {}
        other => panic!("expected OutOfBudget, got {other:?}"),
    }
    let m3 = kfree::generators::mycielski(3).unwrap();
    match kfree::solve::is_k_colorable(&m3, 3, 3) {
        Outcome::OutOfBudget => {}
        other => panic!("expected OutOfBudget, got {other:?}"),
    }
}
