//! Every construction family instance small enough to build explicitly is
//! checked against breadth-first search: the validated certificate must
//! equal the true graph distance, not merely bound it.

use fibrun::bounds;
use fibrun::constructions::{
    h_type_pair, nh_bar1_pair, thick_chain_pair, ConstructionSpec, Family,
};
use fibrun::graph::GraphIndex;
use std::collections::HashMap;

struct GraphCache(HashMap<usize, GraphIndex>);

impl GraphCache {
    fn new() -> Self {
        GraphCache(HashMap::new())
    }
    fn get(&mut self, n: usize) -> &GraphIndex {
        self.0
            .entry(n)
            .or_insert_with(|| GraphIndex::build(n).expect("graph fits in budget"))
    }
}

#[test]
fn h_family_matches_bfs() {
    let mut cache = GraphCache::new();
    for (q, n) in [(0, 3), (0, 4), (1, 8), (1, 13), (2, 14), (2, 20), (3, 18)] {
        let w = h_type_pair(q, n).unwrap();
        assert_eq!(w.certified_distance(), n - q);
        assert!(w.certificate.barriers.is_empty());
        let bfs = cache.get(n).distance_bfs(&w.u, &w.v).unwrap();
        assert_eq!(bfs, n - q, "h pair q={q} n={n}");
    }
}

#[test]
fn bar1_family_matches_bfs() {
    let mut cache = GraphCache::new();
    // (q, n, b) instances covering all five rewrite sub-cases at oracle
    // scale: n=21 has k=3b (case 1), n=20/q=3 has k=3b-1 (case 2),
    // n=19/18 at q=3 hit k=3b-2 and k=3b-3 (case 3), n=16/17/20 hit
    // the short-offset case 4, and n=23 forces the staircase-consuming
    // case 5.
    // At q=2 the first full staircase run is too short for the rewrite
    // (it would need a run of 1s followed by a shorter run of 0s); the
    // constructor must refuse instead of emitting a non-vertex.
    for (q, n, b) in [(2, 20, 2), (2, 19, 2)] {
        let spec = ConstructionSpec {
            family: Family::NhBar1,
            n,
            q,
            b: Some(b),
            w: None,
            c: None,
            prefixed: false,
        };
        assert!(nh_bar1_pair(&spec).is_err(), "q={q} n={n} b={b}");
    }
    for (q, n, b) in [
        (3, 21, 2),
        (3, 20, 2),
        (3, 19, 2),
        (3, 18, 2),
        (3, 17, 2),
        (3, 16, 2),
        (4, 20, 2),
        (3, 23, 2),
    ] {
        let spec = ConstructionSpec {
            family: Family::NhBar1,
            n,
            q,
            b: Some(b),
            w: None,
            c: None,
            prefixed: false,
        };
        let w = nh_bar1_pair(&spec).unwrap_or_else(|e| panic!("q={q} n={n} b={b}: {e}"));
        assert_eq!(w.certified_distance(), n - q + b - 2);
        assert_eq!(w.certificate.barriers.len(), 1);
        let bfs = cache.get(n).distance_bfs(&w.u, &w.v).unwrap();
        assert_eq!(bfs, w.certified_distance(), "bar1 q={q} n={n} b={b}");
    }
}

#[test]
fn thick_chain_matches_bfs() {
    let mut cache = GraphCache::new();
    for (q, n, w_, c) in [(3, 18, 1, 2), (3, 19, 1, 2), (3, 20, 1, 2), (4, 24, 2, 2)] {
        let spec = ConstructionSpec {
            family: Family::ThickChain,
            n,
            q,
            b: None,
            w: Some(w_),
            c: Some(c),
            prefixed: false,
        };
        let w = thick_chain_pair(&spec).unwrap_or_else(|e| panic!("q={q} n={n}: {e}"));
        assert_eq!(w.certified_distance(), n - q + w_ * (c - 2));
        let bfs = cache.get(n).distance_bfs(&w.u, &w.v).unwrap();
        assert_eq!(bfs, w.certified_distance(), "chain q={q} n={n} w={w_} c={c}");
    }
}

#[test]
fn best_bound_witnesses_match_bfs_at_small_n() {
    // The search's chosen witness at oracle-reachable lengths must be a
    // true-distance pair, and its delta must be 0 there (the conjectured
    // value is verified exact for n ≤ 18 elsewhere).
    let mut cache = GraphCache::new();
    for n in [10, 14, 17, 18, 20] {
        let r = bounds::best_lower_bound(n);
        let bfs = cache
            .get(n)
            .distance_bfs(&r.witness.u, &r.witness.v)
            .unwrap();
        assert_eq!(bfs as u64, r.certified, "n={n}");
        if n <= 18 {
            assert_eq!(r.delta, 0, "n={n}");
        }
    }
}
