mod common;

use common::{min_code, permutations, random_graph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use tfx_core::constructions::{cycle, grotzsch};
use tfx_core::graph6::parse_lines;
use tfx_core::{blow_up, from_graph6, is_isomorphic, to_graph6, BlowupSpec, Graph};

fn fixtures() -> Vec<(String, Graph, String)> {
    include_str!("fixtures/networkx_graph6.tsv")
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|line| {
            let cols: Vec<&str> = line.split('\t').collect();
            let n: usize = cols[1].parse().unwrap();
            let edges = cols[2].split_whitespace().map(|e| {
                let (u, v) = e.split_once('-').unwrap();
                (u.parse().unwrap(), v.parse().unwrap())
            });
            (
                cols[0].to_string(),
                Graph::from_edges(n, edges).unwrap(),
                cols[3].to_string(),
            )
        })
        .collect()
}

#[test]
fn graph6_matches_networkx() {
    for (name, g, g6) in fixtures() {
        assert_eq!(to_graph6(&g), g6, "{name}");
        assert_eq!(from_graph6(&g6).unwrap(), g, "{name}");
    }
}

#[test]
fn mycielski_fixture_is_grotzsch() {
    let (_, g, _) = fixtures()
        .into_iter()
        .find(|(n, _, _)| n == "mycielski4")
        .unwrap();
    assert!(is_isomorphic(&g, &grotzsch()));
}

#[test]
fn multi_line_input_with_header() {
    let text = ">>graph6<<Dhc\nEFz_\n\n";
    let gs = parse_lines(text).unwrap();
    assert_eq!(gs.len(), 2);
    assert_eq!(gs[0], cycle(5).unwrap());
    match parse_lines("Dhc\nE!z_\n") {
        Err(tfx_core::Error::Parse { offset, .. }) => assert_eq!(offset, 5),
        other => panic!("expected parse error, got {other:?}"),
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 1..n {
                for u in 0..v {
                    if bits[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(80)) {
        let s = to_graph6(&g);
        prop_assert!(s.bytes().all(|b| (63..=126).contains(&b)));
        prop_assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn isomorphism_matches_permutation_oracle(a in arb_graph(6), seed in any::<u64>()) {
        let n = a.n();
        let mut rng = StdRng::seed_from_u64(seed);
        // half the time a relabelling, half the time an unrelated graph of the same order
        let b = if rng.gen_bool(0.5) {
            let mut perm: Vec<usize> = (0..n).collect();
            rand::seq::SliceRandom::shuffle(&mut perm[..], &mut rng);
            a.permute(&perm)
        } else {
            random_graph(&mut rng, n, 0.5)
        };
        let perms = permutations(n);
        prop_assert_eq!(is_isomorphic(&a, &b), min_code(&a, &perms) == min_code(&b, &perms));
    }
}

#[test]
fn isomorphism_exhaustive_seven_vertices() {
    let perms = permutations(7);
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..300 {
        let p = rng.gen_range(0.2..0.8);
        let a = random_graph(&mut rng, 7, p);
        let b = random_graph(&mut rng, 7, p);
        assert_eq!(
            is_isomorphic(&a, &b),
            min_code(&a, &perms) == min_code(&b, &perms)
        );
    }
}

#[test]
fn blow_up_edge_formula() {
    let mut rng = StdRng::seed_from_u64(1000);
    for _ in 0..1000 {
        let k = rng.gen_range(1..=7);
        let base = random_graph(&mut rng, k, 0.5);
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(0..=5)).collect();
        let g = blow_up(&BlowupSpec::new(base.clone(), sizes.clone()).unwrap());
        let want: usize = base.edges().map(|(u, v)| sizes[u] * sizes[v]).sum();
        assert_eq!(g.n(), sizes.iter().sum::<usize>());
        assert_eq!(g.edge_count(), want);
    }
}
