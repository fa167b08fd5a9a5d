use graphlab::bounds::{check_thm2_open, check_thm2_pack};
use graphlab::corpus::{parse_graph6, to_graph6};
use graphlab::families::{
    gen_omega, gen_omega_prime, recognize_omega, recognize_omega_prime, OmegaParams,
};
use graphlab::graph::canonical_code;
use graphlab::solvers::{brute_force_optimum, solve, validate, Invariant};
use graphlab::{Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut it = bits.into_iter();
            for v in 0..n {
                for u in 0..v {
                    if it.next().unwrap() {
                        edges.push((u, v));
                    }
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn omega_params(max_t: usize, max_p: usize) -> impl Strategy<Value = OmegaParams> {
    (1..=max_t, 1..=max_p).prop_flat_map(|(t, p)| {
        proptest::collection::vec(0..p, 2 * t).prop_map(move |attachment| OmegaParams {
            t,
            p,
            attachment,
        })
    })
}

const INVARIANTS: [Invariant; 5] = [
    Invariant::Packing,
    Invariant::OpenPacking,
    Invariant::Domination,
    Invariant::LimitedPacking(1),
    Invariant::LimitedPacking(2),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn branch_and_bound_matches_brute_force(g in graph(11)) {
        for inv in INVARIANTS {
            let fast = solve(&g, inv).unwrap();
            let slow = brute_force_optimum(&g, inv).unwrap();
            prop_assert_eq!(fast.value, slow.value, "{}", inv);
            prop_assert_eq!(fast.witness, slow.witness, "{}", inv);
            prop_assert!(validate(&g, inv, fast.witness).unwrap());
        }
    }

    #[test]
    fn invariant_orderings(g in graph(14)) {
        let rho = solve(&g, Invariant::Packing).unwrap().value;
        let rho_o = solve(&g, Invariant::OpenPacking).unwrap().value;
        let gamma = solve(&g, Invariant::Domination).unwrap().value;
        let l1 = solve(&g, Invariant::LimitedPacking(1)).unwrap().value;
        let l2 = solve(&g, Invariant::LimitedPacking(2)).unwrap().value;
        prop_assert_eq!(l1, rho);
        prop_assert!(rho <= gamma);
        prop_assert!(rho <= rho_o);
        prop_assert!(l1 <= l2);
    }

    #[test]
    fn graph6_round_trip(g in graph(40)) {
        let text = to_graph6(&g).unwrap();
        let back = parse_graph6(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(to_graph6(&back).unwrap(), text);
    }

    #[test]
    fn canonical_code_ignores_labels(g in graph(8), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        let h = Graph::from_edges(n, &edges).unwrap();
        prop_assert_eq!(canonical_code(&g).unwrap(), canonical_code(&h).unwrap());
    }

    #[test]
    fn omega_members_meet_the_open_packing_bound(params in omega_params(3, 3)) {
        if let Ok(g) = gen_omega(&params) {
            prop_assert_eq!(g.n(), 2 * params.t + 2 * params.p);
            prop_assert!(recognize_omega(&g).member);
            let c = check_thm2_open(&g).unwrap();
            prop_assert!(c.holds && c.tight);
        }
    }

    #[test]
    fn omega_prime_members_meet_the_packing_bound(params in omega_params(3, 3)) {
        if let Ok(g) = gen_omega_prime(&params) {
            prop_assert_eq!(g.n(), 2 * params.t + params.p);
            prop_assert!(recognize_omega_prime(&g).member);
            let c = check_thm2_pack(&g).unwrap();
            prop_assert!(c.holds && c.tight);
        }
    }

    #[test]
    fn lexicographically_smallest_witness(g in graph(9)) {
        // No optimal set precedes the reported one in the crate's order.
        let best = solve(&g, Invariant::Packing).unwrap();
        for bits in 0..(1u64 << g.n()) {
            let b = VertexSet::from_bits(bits);
            if b.len() == best.value && validate(&g, Invariant::Packing, b).unwrap() {
                prop_assert!(best.witness <= b);
            }
        }
    }
}
