//! Signed-graph representation and neighborhood queries.
//!
//! Vertices are dense indices `0..n` assigned by sorting the original input
//! labels, so ascending internal ids always correspond to ascending labels.

use std::collections::{BTreeMap, HashMap};
use std::io::BufRead;

use crate::error::{Error, Result};

/// Dense vertex index after label remapping.
pub type VertexId = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Pos,
    Neg,
}

/// Undirected signed graph with sign-partitioned adjacency.
///
/// Adjacency lists are sorted ascending and duplicate-free; a pair of
/// vertices carries at most one edge (one sign) and never a self-loop.
#[derive(Debug, Clone)]
pub struct SignedGraph {
    pos: Vec<Vec<VertexId>>,
    neg: Vec<Vec<VertexId>>,
    labels: Vec<u64>,
    m_pos: usize,
    m_neg: usize,
}

/// What the loader dropped: exact duplicates, pairs seen with both signs
/// (dropped entirely), and self-loops.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LoadReport {
    pub duplicate_edges: usize,
    pub conflicting_pairs: usize,
    pub self_loops: usize,
}

impl SignedGraph {
    /// Builds a graph from deduplicated edges over vertices `0..n`.
    /// Panics on self-loops or a pair appearing twice; callers own dedup.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId, Sign)]) -> Self {
        let mut pos = vec![Vec::new(); n];
        let mut neg = vec![Vec::new(); n];
        let mut seen: HashMap<(VertexId, VertexId), Sign> = HashMap::new();
        for &(u, v, s) in edges {
            assert!(u != v, "self-loop {u}");
            assert!((u as usize) < n && (v as usize) < n, "vertex out of range");
            let key = (u.min(v), u.max(v));
            assert!(seen.insert(key, s).is_none(), "pair ({u},{v}) listed twice");
            match s {
                Sign::Pos => {
                    pos[u as usize].push(v);
                    pos[v as usize].push(u);
                }
                Sign::Neg => {
                    neg[u as usize].push(v);
                    neg[v as usize].push(u);
                }
            }
        }
        let m_pos = edges.iter().filter(|e| e.2 == Sign::Pos).count();
        let m_neg = edges.len() - m_pos;
        for list in pos.iter_mut().chain(neg.iter_mut()) {
            list.sort_unstable();
        }
        SignedGraph { pos, neg, labels: (0..n as u64).collect(), m_pos, m_neg }
    }

    pub(crate) fn from_adjacency(
        pos: Vec<Vec<VertexId>>,
        neg: Vec<Vec<VertexId>>,
        labels: Vec<u64>,
    ) -> Self {
        let m_pos = pos.iter().map(Vec::len).sum::<usize>() / 2;
        let m_neg = neg.iter().map(Vec::len).sum::<usize>() / 2;
        SignedGraph { pos, neg, labels, m_pos, m_neg }
    }

    pub fn n(&self) -> usize {
        self.pos.len()
    }

    pub fn m_pos(&self) -> usize {
        self.m_pos
    }

    pub fn m_neg(&self) -> usize {
        self.m_neg
    }

    pub fn pos_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.pos[v as usize]
    }

    pub fn neg_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.neg[v as usize]
    }

    pub fn deg_pos(&self, v: VertexId) -> usize {
        self.pos[v as usize].len()
    }

    pub fn deg_neg(&self, v: VertexId) -> usize {
        self.neg[v as usize].len()
    }

    pub fn deg(&self, v: VertexId) -> usize {
        self.deg_pos(v) + self.deg_neg(v)
    }

    /// Maximum total degree over all vertices.
    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.deg(v as VertexId)).max().unwrap_or(0)
    }

    pub fn has_pos(&self, u: VertexId, v: VertexId) -> bool {
        self.pos[u as usize].binary_search(&v).is_ok()
    }

    pub fn has_neg(&self, u: VertexId, v: VertexId) -> bool {
        self.neg[u as usize].binary_search(&v).is_ok()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.has_pos(u, v) || self.has_neg(u, v)
    }

    /// Original input label of a dense id.
    pub fn label(&self, v: VertexId) -> u64 {
        self.labels[v as usize]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }
}

/// Parses a line-oriented signed edge list: `u v s` with `s` one of
/// `1`, `-1`, `+`, `-`; `#` starts a comment line. Every label mentioned
/// becomes a vertex. Exact duplicate edges collapse, a pair seen with both
/// signs is dropped entirely, self-loops are dropped; all three are counted
/// in the report.
pub fn load_signed_edge_list(reader: impl BufRead) -> Result<(SignedGraph, LoadReport)> {
    #[derive(Clone, Copy)]
    struct PairState {
        pos: bool,
        neg: bool,
    }

    let mut report = LoadReport::default();
    let mut pairs: HashMap<(u64, u64), PairState> = HashMap::new();
    let mut label_ids: BTreeMap<u64, VertexId> = BTreeMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected 3 tokens, found {}", tokens.len()),
            });
        }
        let parse_id = |tok: &str| {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("bad vertex id {tok:?}"),
            })
        };
        let u = parse_id(tokens[0])?;
        let v = parse_id(tokens[1])?;
        let sign = match tokens[2] {
            "1" | "+" => Sign::Pos,
            "-1" | "-" => Sign::Neg,
            other => {
                return Err(Error::Parse {
                    line: lineno,
                    reason: format!("bad sign {other:?}"),
                })
            }
        };
        label_ids.entry(u).or_insert(0);
        label_ids.entry(v).or_insert(0);
        if u == v {
            report.self_loops += 1;
            continue;
        }
        let state = pairs
            .entry((u.min(v), u.max(v)))
            .or_insert(PairState { pos: false, neg: false });
        let slot = match sign {
            Sign::Pos => &mut state.pos,
            Sign::Neg => &mut state.neg,
        };
        if *slot {
            report.duplicate_edges += 1;
        }
        *slot = true;
    }

    for (next, (_, id)) in label_ids.iter_mut().enumerate() {
        *id = next as VertexId;
    }

    let n = label_ids.len();
    let mut pos = vec![Vec::new(); n];
    let mut neg = vec![Vec::new(); n];
    let mut m_pos = 0;
    let mut m_neg = 0;
    for (&(lu, lv), state) in &pairs {
        if state.pos && state.neg {
            report.conflicting_pairs += 1;
            continue;
        }
        let u = label_ids[&lu];
        let v = label_ids[&lv];
        if state.pos {
            pos[u as usize].push(v);
            pos[v as usize].push(u);
            m_pos += 1;
        } else {
            neg[u as usize].push(v);
            neg[v as usize].push(u);
            m_neg += 1;
        }
    }
    for list in pos.iter_mut().chain(neg.iter_mut()) {
        list.sort_unstable();
    }
    let labels: Vec<u64> = label_ids.keys().copied().collect();
    Ok((SignedGraph { pos, neg, labels, m_pos, m_neg }, report))
}

/// Two-hop neighborhoods split by composed sign.
///
/// `n2plus` collects endpoints of `++` and `--` walks from `v`, `n2minus`
/// endpoints of `+-` and `-+` walks. `v` itself is excluded; one-hop
/// neighbors are not, and a vertex may sit in both sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoHopSets {
    pub n2plus: Vec<VertexId>,
    pub n2minus: Vec<VertexId>,
}

pub fn two_hop_signed(g: &SignedGraph, v: VertexId) -> TwoHopSets {
    let mut in_plus = vec![false; g.n()];
    let mut in_minus = vec![false; g.n()];
    for &w in g.pos_neighbors(v) {
        for &u in g.pos_neighbors(w) {
            in_plus[u as usize] = true;
        }
        for &u in g.neg_neighbors(w) {
            in_minus[u as usize] = true;
        }
    }
    for &w in g.neg_neighbors(v) {
        for &u in g.neg_neighbors(w) {
            in_plus[u as usize] = true;
        }
        for &u in g.pos_neighbors(w) {
            in_minus[u as usize] = true;
        }
    }
    in_plus[v as usize] = false;
    in_minus[v as usize] = false;
    let collect = |mask: &[bool]| -> Vec<VertexId> {
        mask.iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i as VertexId)
            .collect()
    };
    TwoHopSets { n2plus: collect(&in_plus), n2minus: collect(&in_minus) }
}

/// A vertex's neighborhood subgraph with every conflicting edge removed:
/// no negative edge survives inside either side and no positive edge
/// survives between the sides. The center itself is not a member.
#[derive(Debug, Clone)]
pub struct DichromaticEgo {
    pub center: VertexId,
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    pub pos: HashMap<VertexId, Vec<VertexId>>,
    pub neg: HashMap<VertexId, Vec<VertexId>>,
}

pub fn dichromatic_ego(g: &SignedGraph, v: VertexId) -> DichromaticEgo {
    let left = g.pos_neighbors(v).to_vec();
    let right = g.neg_neighbors(v).to_vec();
    let mut side = vec![0u8; g.n()]; // 0 = outside, 1 = left, 2 = right
    for &u in &left {
        side[u as usize] = 1;
    }
    for &u in &right {
        side[u as usize] = 2;
    }
    let mut pos = HashMap::new();
    let mut neg = HashMap::new();
    for &u in left.iter().chain(right.iter()) {
        let su = side[u as usize];
        let p: Vec<VertexId> = g
            .pos_neighbors(u)
            .iter()
            .copied()
            .filter(|&w| side[w as usize] == su)
            .collect();
        let n: Vec<VertexId> = g
            .neg_neighbors(u)
            .iter()
            .copied()
            .filter(|&w| side[w as usize] != 0 && side[w as usize] != su)
            .collect();
        pos.insert(u, p);
        neg.insert(u, n);
    }
    DichromaticEgo { center: v, left, right, pos, neg }
}

/// Seed processing order: ascending `min(d+, d-)`, ties by ascending id.
pub fn enumeration_order(g: &SignedGraph) -> Vec<VertexId> {
    let mut order: Vec<VertexId> = (0..g.n() as VertexId).collect();
    order.sort_by_key(|&v| (g.deg_pos(v).min(g.deg_neg(v)), v));
    order
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn load(text: &str) -> (SignedGraph, LoadReport) {
        load_signed_edge_list(text.as_bytes()).unwrap()
    }

    /// Symmetry and pos/neg disjointness over every vertex.
    pub(crate) fn check_invariants(g: &SignedGraph) {
        for v in 0..g.n() as VertexId {
            let p = g.pos_neighbors(v);
            let n = g.neg_neighbors(v);
            assert!(p.windows(2).all(|w| w[0] < w[1]), "pos list unsorted at {v}");
            assert!(n.windows(2).all(|w| w[0] < w[1]), "neg list unsorted at {v}");
            for &u in p {
                assert_ne!(u, v, "self-loop");
                assert!(g.has_pos(u, v), "pos asymmetry {u} {v}");
                assert!(!g.has_neg(v, u), "multi-edge {v} {u}");
            }
            for &u in n {
                assert_ne!(u, v, "self-loop");
                assert!(g.has_neg(u, v), "neg asymmetry {u} {v}");
            }
        }
    }

    #[test]
    fn load_basic() {
        let (g, rep) = load("0 1 +\n1 2 -\n");
        assert_eq!(g.n(), 3);
        assert_eq!(g.m_pos(), 1);
        assert_eq!(g.m_neg(), 1);
        assert!(g.has_pos(0, 1));
        assert!(g.has_neg(1, 2));
        assert_eq!(rep, LoadReport::default());
        check_invariants(&g);
    }

    #[test]
    fn load_collapses_duplicates() {
        let (g, rep) = load("0 1 +\n0 1 +\n");
        assert_eq!(g.m_pos(), 1);
        assert_eq!(rep.duplicate_edges, 1);
        assert_eq!(rep.conflicting_pairs, 0);
    }

    #[test]
    fn load_drops_conflicting_pair() {
        let (g, rep) = load("0 1 +\n1 0 -\n");
        assert_eq!(g.m_pos(), 0);
        assert_eq!(g.m_neg(), 0);
        assert_eq!(g.n(), 2);
        assert_eq!(rep.conflicting_pairs, 1);
    }

    #[test]
    fn load_drops_self_loops() {
        let (g, rep) = load("0 0 +\n0 1 -\n");
        assert_eq!(rep.self_loops, 1);
        assert_eq!(g.n(), 2);
        assert_eq!(g.m_neg(), 1);
    }

    #[test]
    fn load_numeric_signs_and_comments() {
        let (g, _) = load("# comment\n3 7 1\n7 9 -1\n");
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels(), &[3, 7, 9]);
        assert!(g.has_pos(0, 1));
        assert!(g.has_neg(1, 2));
    }

    #[test]
    fn load_rejects_malformed_lines() {
        let err = load_signed_edge_list("0 1 +\n0 1\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        let err = load_signed_edge_list("a b +\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
        let err = load_signed_edge_list("0 1 +\n\n2 3 x\n".as_bytes()).unwrap_err();
        assert!(err.to_string().contains("line 3"), "{err}");
    }

    #[test]
    fn two_hop_sign_composition_on_paths() {
        let (g, _) = load("0 1 +\n1 2 +\n");
        assert!(two_hop_signed(&g, 0).n2plus.contains(&2));
        let (g, _) = load("0 1 +\n1 2 -\n");
        assert!(two_hop_signed(&g, 0).n2minus.contains(&2));
    }

    #[test]
    fn two_hop_overlaps_one_hop() {
        // ++ walk reaches 2 even though 2 is already a direct foe of 0.
        let (g, _) = load("0 1 +\n1 2 +\n0 2 -\n");
        let th = two_hop_signed(&g, 0);
        assert_eq!(th.n2plus, vec![2]);
        assert!(g.has_neg(0, 2));
    }

    /// Matrix-product recount of the signed two-hop sets.
    fn two_hop_by_matrix(g: &SignedGraph, v: VertexId) -> TwoHopSets {
        let n = g.n();
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for u in 0..n as VertexId {
            if u == v {
                continue;
            }
            let mut pp = false;
            let mut mm = false;
            for w in 0..n as VertexId {
                pp |= (g.has_pos(v, w) && g.has_pos(w, u)) || (g.has_neg(v, w) && g.has_neg(w, u));
                mm |= (g.has_pos(v, w) && g.has_neg(w, u)) || (g.has_neg(v, w) && g.has_pos(w, u));
            }
            if pp {
                plus.push(u);
            }
            if mm {
                minus.push(u);
            }
        }
        TwoHopSets { n2plus: plus, n2minus: minus }
    }

    fn bfs_dist(g: &SignedGraph, src: VertexId) -> Vec<usize> {
        let mut dist = vec![usize::MAX; g.n()];
        dist[src as usize] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &w in g.pos_neighbors(u).iter().chain(g.neg_neighbors(u)) {
                if dist[w as usize] == usize::MAX {
                    dist[w as usize] = dist[u as usize] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    #[test]
    fn order_prefers_small_min_degree() {
        // v0: d+=3 d-=3, v1: d+=1 d-=5  =>  min 1 beats min 3.
        let mut edges = Vec::new();
        for i in 0..3 {
            edges.push((0, 2 + i, Sign::Pos));
        }
        for i in 0..3 {
            edges.push((0, 5 + i, Sign::Neg));
        }
        edges.push((1, 8, Sign::Pos));
        for i in 0..5 {
            edges.push((1, 9 + i, Sign::Neg));
        }
        let g = SignedGraph::from_edges(14, &edges);
        let order = enumeration_order(&g);
        let rank = |v: VertexId| order.iter().position(|&x| x == v).unwrap();
        assert!(rank(1) < rank(0));
    }

    #[test]
    fn order_breaks_ties_by_id() {
        let g = SignedGraph::from_edges(
            4,
            &[(0, 1, Sign::Pos), (2, 3, Sign::Pos), (0, 2, Sign::Neg), (1, 3, Sign::Neg)],
        );
        assert_eq!(enumeration_order(&g), vec![0, 1, 2, 3]);
    }

    #[test]
    fn ego_of_positive_star_has_no_edges() {
        let g = SignedGraph::from_edges(
            4,
            &[(0, 1, Sign::Pos), (0, 2, Sign::Pos), (0, 3, Sign::Pos)],
        );
        let ego = dichromatic_ego(&g, 0);
        assert_eq!(ego.left, vec![1, 2, 3]);
        assert!(ego.right.is_empty());
        assert!(ego.pos.values().all(Vec::is_empty));
        assert!(ego.neg.values().all(Vec::is_empty));
    }

    #[test]
    fn ego_drops_negative_edge_inside_left() {
        let g = SignedGraph::from_edges(
            3,
            &[(0, 1, Sign::Pos), (0, 2, Sign::Pos), (1, 2, Sign::Neg)],
        );
        let ego = dichromatic_ego(&g, 0);
        assert!(ego.neg[&1].is_empty());
        assert!(ego.neg[&2].is_empty());
    }

    proptest! {
        #[test]
        fn prop_two_hop_matches_matrix_and_distance(seed in 0u64..200, n in 4usize..10, density in 0.1f64..0.7) {
            let g = crate::gen::random_graph(n, density, 0.4, seed);
            check_invariants(&g);
            for v in 0..g.n() as VertexId {
                let th = two_hop_signed(&g, v);
                let by_matrix = two_hop_by_matrix(&g, v);
                prop_assert_eq!(&th, &by_matrix);
                let dist = bfs_dist(&g, v);
                for &u in th.n2plus.iter().chain(th.n2minus.iter()) {
                    prop_assert!(u != v && dist[u as usize] <= 2);
                }
            }
        }

        #[test]
        fn prop_ego_has_no_conflicting_edge(seed in 0u64..200, n in 4usize..12) {
            let g = crate::gen::random_graph(n, 0.5, 0.5, seed);
            for v in 0..g.n() as VertexId {
                let ego = dichromatic_ego(&g, v);
                let side = |u: VertexId| if ego.left.contains(&u) { 1 } else if ego.right.contains(&u) { 2 } else { 0 };
                for (&u, list) in &ego.pos {
                    for &w in list {
                        prop_assert!(g.has_pos(u, w));
                        prop_assert_eq!(side(u), side(w));
                    }
                }
                for (&u, list) in &ego.neg {
                    for &w in list {
                        prop_assert!(g.has_neg(u, w));
                        prop_assert!(side(u) != side(w) && side(w) != 0);
                    }
                }
            }
        }

        #[test]
        fn prop_order_is_deterministic_permutation(seed in 0u64..200, n in 2usize..12) {
            let g = crate::gen::random_graph(n, 0.4, 0.5, seed);
            let order = enumeration_order(&g);
            prop_assert_eq!(order.clone(), enumeration_order(&g));
            let mut sorted = order.clone();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (0..g.n() as VertexId).collect::<Vec<_>>());
            for w in order.windows(2) {
                let key = |v: VertexId| g.deg_pos(v).min(g.deg_neg(v));
                prop_assert!(key(w[0]) < key(w[1]) || (key(w[0]) == key(w[1]) && w[0] < w[1]));
            }
        }
    }
}
