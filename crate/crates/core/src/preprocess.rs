//! Graph shrinking ahead of enumeration: global degree peeling and
//! per-seed dichromatic one-hop/two-hop candidate reduction.

use std::collections::HashMap;
use std::collections::VecDeque;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{dichromatic_ego, SignedGraph, VertexId};
use crate::params::Params;

/// Aggregate of what preprocessing removed. `per_seed_candidates` is filled
/// by the driver as dichromatic reduction runs per seed.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionReport {
    pub removed_vr: usize,
    pub survivors: Vec<VertexId>,
    pub per_seed_candidates: Vec<(VertexId, usize)>,
}

/// Candidate sets built around one seed: qualified one-hop sets, raw
/// two-hop unions, and the final friend/foe candidate sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopCandidates {
    pub l1: Vec<VertexId>,
    pub r1: Vec<VertexId>,
    pub l2: Vec<VertexId>,
    pub r2: Vec<VertexId>,
    pub ln: Vec<VertexId>,
    pub rn: Vec<VertexId>,
}

/// Queue-based peeling: removes every vertex violating
/// `d+ >= t-k`, `d- >= t-k+1`, or `d >= 2t-k`, cascading degree updates,
/// until all survivors satisfy all three. Returns the peeled graph (same
/// vertex ids, removed vertices isolated) and a report.
pub fn vertex_reduction(g: &SignedGraph, params: Params) -> (SignedGraph, ReductionReport) {
    let (reduced, report, _) = vertex_reduction_counted(g, params);
    (reduced, report)
}

/// Same as `vertex_reduction` but also reports how many adjacency entries
/// the peeling touched, for complexity checks.
pub fn vertex_reduction_counted(
    g: &SignedGraph,
    params: Params,
) -> (SignedGraph, ReductionReport, usize) {
    let n = g.n();
    let min_pos = params.t() as i64 - params.k() as i64;
    let min_neg = params.t() as i64 - params.k() as i64 + 1;
    let min_tot = 2 * params.t() as i64 - params.k() as i64;

    let mut d_pos: Vec<i64> = (0..n).map(|v| g.deg_pos(v as VertexId) as i64).collect();
    let mut d_neg: Vec<i64> = (0..n).map(|v| g.deg_neg(v as VertexId) as i64).collect();
    let mut alive = vec![true; n];
    let mut queued = vec![false; n];
    let mut work = 0usize;

    let violates =
        |dp: i64, dn: i64| dp < min_pos || dn < min_neg || dp + dn < min_tot;

    let mut queue: VecDeque<usize> = VecDeque::new();
    for v in 0..n {
        work += 1;
        if violates(d_pos[v], d_neg[v]) {
            queue.push_back(v);
            queued[v] = true;
        }
    }
    while let Some(v) = queue.pop_front() {
        alive[v] = false;
        for &u in g.pos_neighbors(v as VertexId) {
            work += 1;
            let u = u as usize;
            if alive[u] {
                d_pos[u] -= 1;
                if !queued[u] && violates(d_pos[u], d_neg[u]) {
                    queue.push_back(u);
                    queued[u] = true;
                }
            }
        }
        for &u in g.neg_neighbors(v as VertexId) {
            work += 1;
            let u = u as usize;
            if alive[u] {
                d_neg[u] -= 1;
                if !queued[u] && violates(d_pos[u], d_neg[u]) {
                    queue.push_back(u);
                    queued[u] = true;
                }
            }
        }
    }

    let filter = |list: &[VertexId], keep: &[bool]| -> Vec<VertexId> {
        list.iter().copied().filter(|&u| keep[u as usize]).collect()
    };
    let mut pos = Vec::with_capacity(n);
    let mut neg = Vec::with_capacity(n);
    for v in 0..n {
        if alive[v] {
            pos.push(filter(g.pos_neighbors(v as VertexId), &alive));
            neg.push(filter(g.neg_neighbors(v as VertexId), &alive));
        } else {
            pos.push(Vec::new());
            neg.push(Vec::new());
        }
    }
    let survivors: Vec<VertexId> = (0..n as VertexId).filter(|&v| alive[v as usize]).collect();
    let report = ReductionReport {
        removed_vr: n - survivors.len(),
        survivors,
        per_seed_candidates: Vec::new(),
    };
    let reduced = SignedGraph::from_adjacency(pos, neg, g.labels().to_vec());
    (reduced, report, work)
}

/// Peels the seed's dichromatic ego: members with ego-internal
/// `d+ < t-2k` or `d < 2t-2k` are deleted (degrees tracked in the shrinking
/// ego), leaving the qualified one-hop friend/foe candidates.
pub fn dichromatic_onehop(
    g: &SignedGraph,
    seed: VertexId,
    params: Params,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let ego = dichromatic_ego(g, seed);
    let min_pos = params.t() as i64 - 2 * params.k() as i64;
    let min_tot = 2 * params.t() as i64 - 2 * params.k() as i64;

    let mut d_pos: HashMap<VertexId, i64> =
        ego.pos.iter().map(|(&v, l)| (v, l.len() as i64)).collect();
    let mut d_neg: HashMap<VertexId, i64> =
        ego.neg.iter().map(|(&v, l)| (v, l.len() as i64)).collect();
    let mut alive: HashMap<VertexId, bool> =
        ego.pos.keys().map(|&v| (v, true)).collect();
    let violates = |dp: i64, dn: i64| dp < min_pos || dp + dn < min_tot;

    let mut queue: VecDeque<VertexId> = Vec::from_iter(
        ego.pos
            .keys()
            .copied()
            .filter(|v| violates(d_pos[v], d_neg[v])),
    )
    .into();
    let mut queued: HashMap<VertexId, bool> =
        queue.iter().map(|&v| (v, true)).collect();
    while let Some(v) = queue.pop_front() {
        alive.insert(v, false);
        for &u in &ego.pos[&v] {
            if alive[&u] {
                *d_pos.get_mut(&u).unwrap() -= 1;
                if !queued.get(&u).copied().unwrap_or(false) && violates(d_pos[&u], d_neg[&u]) {
                    queue.push_back(u);
                    queued.insert(u, true);
                }
            }
        }
        for &u in &ego.neg[&v] {
            if alive[&u] {
                *d_neg.get_mut(&u).unwrap() -= 1;
                if !queued.get(&u).copied().unwrap_or(false) && violates(d_pos[&u], d_neg[&u]) {
                    queue.push_back(u);
                    queued.insert(u, true);
                }
            }
        }
    }

    let keep = |side: &[VertexId]| -> Vec<VertexId> {
        side.iter().copied().filter(|v| alive[v]).collect()
    };
    (keep(&ego.left), keep(&ego.right))
}

/// Extends the qualified one-hop sets with two-hop candidates: a vertex `w`
/// outside the seed's neighborhood joins the friend side iff
/// `|N+(w) ∩ l1| >= t-2k+2` and that count plus `|N-(w) ∩ r1| >= 2t-2k+2`
/// (mirrored for the foe side). Returns all intermediate sets.
pub fn dichromatic_twohop(
    g: &SignedGraph,
    seed: VertexId,
    l1: &[VertexId],
    r1: &[VertexId],
    params: Params,
) -> HopCandidates {
    let min_a = params.t() as i64 - 2 * params.k() as i64 + 2;
    let min_ab = 2 * params.t() as i64 - 2 * params.k() as i64 + 2;

    let mut in_l2 = vec![false; g.n()];
    let mut in_r2 = vec![false; g.n()];
    for &u in l1 {
        for &v in g.pos_neighbors(u) {
            in_l2[v as usize] = true;
        }
        for &v in g.neg_neighbors(u) {
            in_r2[v as usize] = true;
        }
    }
    for &u in r1 {
        for &v in g.pos_neighbors(u) {
            in_r2[v as usize] = true;
        }
        for &v in g.neg_neighbors(u) {
            in_l2[v as usize] = true;
        }
    }
    in_l2[seed as usize] = false;
    in_r2[seed as usize] = false;
    let collect = |mask: &[bool]| -> Vec<VertexId> {
        mask.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as VertexId)
            .collect()
    };
    let l2 = collect(&in_l2);
    let r2 = collect(&in_r2);

    let count_in = |adj: &[VertexId], set: &[VertexId]| -> i64 {
        adj.iter().filter(|v| set.binary_search(v).is_ok()).count() as i64
    };
    let mut ln = Vec::new();
    let mut rn = Vec::new();
    for &w in &l2 {
        if g.has_edge(seed, w) {
            continue;
        }
        let a = count_in(g.pos_neighbors(w), l1);
        let b = count_in(g.neg_neighbors(w), r1);
        if a >= min_a && a + b >= min_ab {
            ln.push(w);
        }
    }
    for &w in &r2 {
        if g.has_edge(seed, w) {
            continue;
        }
        let a = count_in(g.pos_neighbors(w), r1);
        let b = count_in(g.neg_neighbors(w), l1);
        if a >= min_a && a + b >= min_ab {
            rn.push(w);
        }
    }
    ln.extend_from_slice(l1);
    rn.extend_from_slice(r1);
    ln.sort_unstable();
    rn.sort_unstable();
    HopCandidates { l1: l1.to_vec(), r1: r1.to_vec(), l2, r2, ln, rn }
}

/// One-hop peeling followed by the two-hop extension for one seed.
pub fn dichromatic_reduction(g: &SignedGraph, seed: VertexId, params: Params) -> HopCandidates {
    let (l1, r1) = dichromatic_onehop(g, seed, params);
    dichromatic_twohop(g, seed, &l1, &r1, params)
}

/// Validates parameters and runs the peeling; thin error-typed wrapper for
/// callers holding raw `(k, t)` pairs.
pub fn vertex_reduction_checked(
    g: &SignedGraph,
    k: u32,
    t: u32,
) -> Result<(SignedGraph, ReductionReport)> {
    let params = Params::new(k, t)?;
    Ok(vertex_reduction(g, params))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gen::random_graph;
    use crate::graph::{enumeration_order, Sign};
    use crate::oracle::enumerate_bruteforce;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn params(k: u32, t: u32) -> Params {
        Params::new(k, t).unwrap()
    }

    #[test]
    fn vr_removes_vertex_without_negative_edges() {
        // k=2, t=3: d- must be >= 2; a vertex with zero negative edges dies.
        let g = fixtures::by_name("camps_with_spoiler").graph();
        let mut edges = Vec::new();
        for v in 0..g.n() as VertexId {
            for &u in g.pos_neighbors(v).iter().filter(|&&u| u > v) {
                edges.push((v, u, Sign::Pos));
            }
            for &u in g.neg_neighbors(v).iter().filter(|&&u| u > v) {
                edges.push((v, u, Sign::Neg));
            }
        }
        let extra = g.n() as VertexId;
        edges.push((0, extra, Sign::Pos));
        let g2 = SignedGraph::from_edges(g.n() + 1, &edges);
        let (_, report) = vertex_reduction(&g2, params(2, 3));
        assert!(!report.survivors.contains(&extra));
        assert_eq!(report.removed_vr, 1);
    }

    #[test]
    fn vr_clears_all_positive_clique() {
        let mut edges = Vec::new();
        for u in 0..6u32 {
            for v in (u + 1)..6 {
                edges.push((u, v, Sign::Pos));
            }
        }
        let g = SignedGraph::from_edges(6, &edges);
        let (reduced, report) = vertex_reduction(&g, params(2, 3));
        assert_eq!(report.removed_vr, 6);
        assert!(report.survivors.is_empty());
        assert_eq!(reduced.m_pos() + reduced.m_neg(), 0);
    }

    #[test]
    fn vr_keeps_the_spoiler_fixture_intact() {
        let g = fixtures::by_name("camps_with_spoiler").graph();
        let (_, report) = vertex_reduction(&g, params(2, 4));
        assert_eq!(report.survivors, (0..9).collect::<Vec<_>>());
    }

    /// Peel in an arbitrary order instead of FIFO; survivors must agree.
    fn peel_any_order(g: &SignedGraph, params: Params, seed: u64) -> Vec<VertexId> {
        let min_pos = params.t() as i64 - params.k() as i64;
        let min_neg = params.t() as i64 - params.k() as i64 + 1;
        let min_tot = 2 * params.t() as i64 - params.k() as i64;
        let n = g.n();
        let mut d_pos: Vec<i64> = (0..n).map(|v| g.deg_pos(v as u32) as i64).collect();
        let mut d_neg: Vec<i64> = (0..n).map(|v| g.deg_neg(v as u32) as i64).collect();
        let mut alive = vec![true; n];
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        loop {
            let mut violators: Vec<usize> = (0..n)
                .filter(|&v| {
                    alive[v]
                        && (d_pos[v] < min_pos || d_neg[v] < min_neg || d_pos[v] + d_neg[v] < min_tot)
                })
                .collect();
            if violators.is_empty() {
                break;
            }
            violators.shuffle(&mut rng);
            let v = violators[0];
            alive[v] = false;
            for &u in g.pos_neighbors(v as u32) {
                d_pos[u as usize] -= 1;
            }
            for &u in g.neg_neighbors(v as u32) {
                d_neg[u as usize] -= 1;
            }
        }
        (0..n as VertexId).filter(|&v| alive[v as usize]).collect()
    }

    #[test]
    fn vr_touches_each_edge_a_constant_number_of_times() {
        for seed in 0..20 {
            let g = random_graph(40, 0.3, 0.4, seed);
            let (_, _, work) = vertex_reduction_counted(&g, params(2, 4));
            let bound = 3 * (g.n() + g.m_pos() + g.m_neg());
            assert!(work <= bound, "work {work} exceeds {bound}");
        }
    }

    #[test]
    fn onehop_peels_weakly_attached_friend() {
        let g = fixtures::by_name("ego_peel").graph();
        let (l1, r1) = dichromatic_onehop(&g, 0, params(2, 4));
        assert_eq!(l1, vec![1, 2, 3, 4]);
        assert_eq!(r1, vec![6, 7, 8, 9]);
    }

    #[test]
    fn onehop_with_vacuous_thresholds_keeps_everything() {
        // k=1, t=1: both thresholds are <= 0.
        let g = random_graph(12, 0.5, 0.5, 11);
        let p = params(1, 1);
        for seed in 0..g.n() as VertexId {
            let (l1, r1) = dichromatic_onehop(&g, seed, p);
            assert_eq!(l1, g.pos_neighbors(seed));
            assert_eq!(r1, g.neg_neighbors(seed));
        }
    }

    #[test]
    fn twohop_keeps_and_rejects_by_common_neighbor_counts() {
        let g = fixtures::by_name("two_hop_reach").graph();
        let p = params(2, 4);
        let hops = dichromatic_reduction(&g, 0, p);
        assert_eq!(hops.l1, vec![1, 2, 3, 4]);
        assert_eq!(hops.r1, vec![5, 6, 7, 8]);
        // 9 has four positive anchors in l1 and four negative in r1; 10 only
        // reaches a combined count of 5 < 2t-2k+2 = 6.
        assert!(hops.l2.contains(&9) && hops.l2.contains(&10));
        assert_eq!(hops.ln, vec![1, 2, 3, 4, 9]);
        assert_eq!(hops.rn, vec![5, 6, 7, 8]);
    }

    #[test]
    fn twohop_of_empty_onehop_is_empty() {
        let g = random_graph(10, 0.4, 0.5, 3);
        let hops = dichromatic_twohop(&g, 0, &[], &[], params(2, 4));
        assert!(hops.ln.is_empty() && hops.rn.is_empty());
        assert!(hops.l2.is_empty() && hops.r2.is_empty());
    }

    /// Orients an oracle result so that its lowest-ordered member sits on
    /// the left, mirroring how the enumerator anchors a seed.
    fn orient_by_seed(
        left: &[VertexId],
        right: &[VertexId],
        rank: &[usize],
    ) -> (VertexId, Vec<VertexId>, Vec<VertexId>) {
        let seed = left
            .iter()
            .chain(right.iter())
            .copied()
            .min_by_key(|&v| rank[v as usize])
            .unwrap();
        if left.contains(&seed) {
            (seed, left.to_vec(), right.to_vec())
        } else {
            (seed, right.to_vec(), left.to_vec())
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn prop_vr_confluent_and_monotone(seed in 0u64..500) {
            let g = random_graph(14, 0.4, 0.4, seed);
            let p = params(2, 4);
            let (_, report) = vertex_reduction(&g, p);
            for order_seed in 0..3u64 {
                prop_assert_eq!(&report.survivors, &peel_any_order(&g, p, order_seed));
            }
            // survivors never grow as t grows
            let mut prev = report.survivors.clone();
            for t in 5..8u32 {
                let (_, r) = vertex_reduction(&g, params(2, t));
                prop_assert!(r.survivors.iter().all(|v| prev.contains(v)));
                prev = r.survivors;
            }
        }

        #[test]
        fn prop_vr_never_removes_result_members(seed in 0u64..200) {
            let g = random_graph(11, 0.55, 0.45, seed);
            for (k, t) in [(1, 1), (1, 2), (2, 3), (2, 4)] {
                let p = params(k, t);
                let results = enumerate_bruteforce(&g, p).unwrap();
                let (_, report) = vertex_reduction(&g, p);
                for plex in &results {
                    for v in plex.left().iter().chain(plex.right()) {
                        prop_assert!(report.survivors.contains(v),
                            "vertex {} of an oracle result peeled at k={k} t={t}", v);
                    }
                }
            }
        }

        #[test]
        fn prop_dr_never_removes_result_members(seed in 500u64..650) {
            let g = random_graph(12, 0.5, 0.45, seed);
            for (k, t) in [(1, 2), (2, 3), (2, 4)] {
                let p = params(k, t);
                let results = enumerate_bruteforce(&g, p).unwrap();
                let rank = {
                    let order = enumeration_order(&g);
                    let mut rank = vec![0usize; g.n()];
                    for (i, &v) in order.iter().enumerate() { rank[v as usize] = i; }
                    rank
                };
                for plex in &results {
                    let (seed_v, c_l, c_r) = orient_by_seed(plex.left(), plex.right(), &rank);
                    let hops = dichromatic_reduction(&g, seed_v, p);
                    for &v in c_l.iter().filter(|&&v| v != seed_v) {
                        prop_assert!(hops.ln.contains(&v), "friend {v} pruned for seed {seed_v}");
                    }
                    for &v in &c_r {
                        prop_assert!(hops.rn.contains(&v), "foe {v} pruned for seed {seed_v}");
                    }
                }
            }
        }

        #[test]
        fn prop_hop_sets_nest_correctly(seed in 0u64..100) {
            let g = random_graph(12, 0.5, 0.5, seed);
            let p = params(2, 4);
            for v in 0..g.n() as VertexId {
                let hops = dichromatic_reduction(&g, v, p);
                for u in &hops.l1 {
                    prop_assert!(g.has_pos(v, *u));
                    prop_assert!(hops.ln.contains(u));
                }
                for u in &hops.r1 {
                    prop_assert!(g.has_neg(v, *u));
                    prop_assert!(hops.rn.contains(u));
                }
                prop_assert!(!hops.ln.contains(&v) && !hops.rn.contains(&v));
            }
        }
    }
}
