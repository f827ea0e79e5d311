//! Set-enumeration engines for maximal antagonistic k-plexes: the plain
//! recursive search and the optimized variant with pivoting, early
//! termination, and color bounds, plus the run driver that wires in vertex
//! reduction, per-seed dichromatic reduction, and worker pools.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::colorbound::{
    bounds_from_partitions, color_candidates, color_degree, NodePartitions, Side,
};
use crate::graph::{enumeration_order, two_hop_signed, SignedGraph, VertexId};
use crate::params::Params;
use crate::preprocess::{dichromatic_reduction, vertex_reduction};

/// One result: an unordered pair of disjoint vertex sets. Canonical form
/// keeps both sides sorted with the overall smallest vertex on the left.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AntagonisticPlex {
    left: Vec<VertexId>,
    right: Vec<VertexId>,
}

impl AntagonisticPlex {
    pub fn new(mut left: Vec<VertexId>, mut right: Vec<VertexId>) -> Self {
        left.sort_unstable();
        right.sort_unstable();
        let swap = match (left.first(), right.first()) {
            (Some(&l), Some(&r)) => r < l,
            (None, Some(_)) => true,
            _ => false,
        };
        if swap {
            std::mem::swap(&mut left, &mut right);
        }
        AntagonisticPlex { left, right }
    }

    pub fn left(&self) -> &[VertexId] {
        &self.left
    }

    pub fn right(&self) -> &[VertexId] {
        &self.right
    }

    /// `L=[a,b,...] R=[c,d,...]` in original labels, members ascending,
    /// no spaces inside the brackets.
    pub fn format_line(&self, labels: &[u64]) -> String {
        let fmt = |side: &[VertexId]| {
            side.iter()
                .map(|&v| labels[v as usize].to_string())
                .collect::<Vec<_>>()
                .join(",")
        };
        format!("L=[{}] R=[{}]", fmt(&self.left), fmt(&self.right))
    }
}

/// Formats a collected result set: one newline-terminated line per plex,
/// lines sorted lexicographically.
pub fn format_results(plexes: &[AntagonisticPlex], labels: &[u64]) -> String {
    let mut lines: Vec<String> = plexes.iter().map(|p| p.format_line(labels)).collect();
    lines.sort();
    let mut out = String::new();
    for line in lines {
        out.push_str(&line);
        out.push('\n');
    }
    out
}

/// The six-set enumeration state. `c_l`/`c_r` are the growing sides,
/// `p_l`/`p_r` the forward candidates, `q_l`/`q_r` the already-processed
/// candidates that guard against non-maximal and duplicate output.
/// `parity` picks which side's branch loop runs first and flips per level.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchNode {
    pub c_l: Vec<VertexId>,
    pub c_r: Vec<VertexId>,
    pub p_l: Vec<VertexId>,
    pub p_r: Vec<VertexId>,
    pub q_l: Vec<VertexId>,
    pub q_r: Vec<VertexId>,
    pub parity: bool,
}

impl SearchNode {
    pub fn seed(v: VertexId) -> Self {
        SearchNode {
            c_l: vec![v],
            c_r: Vec::new(),
            p_l: Vec::new(),
            p_r: Vec::new(),
            q_l: Vec::new(),
            q_r: Vec::new(),
            parity: false,
        }
    }

    /// Child state after moving `v` from a candidate set into `side`.
    /// `v` is stripped from every candidate set; a vertex that sat in both
    /// side universes must not linger once it is a member.
    fn child(&self, v: VertexId, side: Side) -> SearchNode {
        let strip = |s: &[VertexId]| -> Vec<VertexId> {
            s.iter().copied().filter(|&x| x != v).collect()
        };
        let mut c_l = self.c_l.clone();
        let mut c_r = self.c_r.clone();
        match side {
            Side::Left => insert_sorted(&mut c_l, v),
            Side::Right => insert_sorted(&mut c_r, v),
        }
        SearchNode {
            c_l,
            c_r,
            p_l: strip(&self.p_l),
            p_r: strip(&self.p_r),
            q_l: strip(&self.q_l),
            q_r: strip(&self.q_r),
            parity: !self.parity,
        }
    }
}

fn insert_sorted(v: &mut Vec<VertexId>, x: VertexId) {
    if let Err(pos) = v.binary_search(&x) {
        v.insert(pos, x);
    }
}

fn remove_sorted(v: &mut Vec<VertexId>, x: VertexId) {
    if let Ok(pos) = v.binary_search(&x) {
        v.remove(pos);
    }
}

/// Members of the growing plex whose slack is exhausted: any new vertex
/// must be adjacent to all of them with the correct sign.
fn saturated(g: &SignedGraph, c_l: &[VertexId], c_r: &[VertexId], k: usize) -> (Vec<VertexId>, Vec<VertexId>) {
    let size = c_l.len() + c_r.len();
    let degree = |u: VertexId| {
        c_l.iter()
            .chain(c_r.iter())
            .filter(|&&w| w != u && g.has_edge(u, w))
            .count()
    };
    let pick = |side: &[VertexId]| -> Vec<VertexId> {
        side.iter().copied().filter(|&u| degree(u) + k == size).collect()
    };
    (pick(c_l), pick(c_r))
}

fn expansion_ok(
    g: &SignedGraph,
    v: VertexId,
    side: Side,
    c_l: &[VertexId],
    c_r: &[VertexId],
    sat_l: &[VertexId],
    sat_r: &[VertexId],
    k: usize,
) -> bool {
    let (same, other, sat_same, sat_other) = match side {
        Side::Left => (c_l, c_r, sat_l, sat_r),
        Side::Right => (c_r, c_l, sat_r, sat_l),
    };
    let mut adjacent = 0usize;
    for &u in same {
        if g.has_neg(u, v) {
            return false;
        }
        if g.has_pos(u, v) {
            adjacent += 1;
        }
    }
    for &u in other {
        if g.has_pos(u, v) {
            return false;
        }
        if g.has_neg(u, v) {
            adjacent += 1;
        }
    }
    if sat_same.iter().any(|&u| !g.has_pos(u, v)) {
        return false;
    }
    if sat_other.iter().any(|&u| !g.has_neg(u, v)) {
        return false;
    }
    // |N(v) ∩ C| >= |C| + 1 - k
    adjacent + k >= c_l.len() + c_r.len() + 1
}

/// True iff moving `v` into `side` keeps the node's plex antagonistic:
/// no wrong-signed edge into either side, every saturated member covered
/// with the correct sign, and enough adjacency into the union.
pub fn can_extend(v: VertexId, side: Side, node: &SearchNode, g: &SignedGraph, k: usize) -> bool {
    let (sat_l, sat_r) = saturated(g, &node.c_l, &node.c_r, k);
    expansion_ok(g, v, side, &node.c_l, &node.c_r, &sat_l, &sat_r, k)
}

/// Filters a candidate set down to the vertices that can still extend the
/// node's plex on the given side.
pub fn update_candidates(
    x: &[VertexId],
    side: Side,
    node: &SearchNode,
    g: &SignedGraph,
    k: usize,
) -> Vec<VertexId> {
    let (sat_l, sat_r) = saturated(g, &node.c_l, &node.c_r, k);
    x.iter()
        .copied()
        .filter(|&v| expansion_ok(g, v, side, &node.c_l, &node.c_r, &sat_l, &sat_r, k))
        .collect()
}

fn count_in(adj: &[VertexId], set: &[VertexId]) -> usize {
    if adj.len() <= set.len() {
        adj.iter().filter(|v| set.binary_search(v).is_ok()).count()
    } else {
        set.iter().filter(|v| adj.binary_search(v).is_ok()).count()
    }
}

/// Pivot choice: the candidate (forward or processed) covering the most
/// forward candidates with the sign pattern of its side; ties fall to the
/// smallest id. `None` when the pool is empty.
pub fn choose_pivot(node: &SearchNode, side: Side, g: &SignedGraph) -> Option<VertexId> {
    let (p_side, q_side) = match side {
        Side::Left => (&node.p_l, &node.q_l),
        Side::Right => (&node.p_r, &node.q_r),
    };
    let mut pool: Vec<VertexId> = p_side.iter().chain(q_side.iter()).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let score = |u: VertexId| match side {
        Side::Left => {
            count_in(g.pos_neighbors(u), &node.p_l) + count_in(g.neg_neighbors(u), &node.p_r)
        }
        Side::Right => {
            count_in(g.neg_neighbors(u), &node.p_l) + count_in(g.pos_neighbors(u), &node.p_r)
        }
    };
    let mut best: Option<(usize, VertexId)> = None;
    for u in pool {
        let s = score(u);
        if best.map_or(true, |(bs, _)| s > bs) {
            best = Some((s, u));
        }
    }
    best.map(|(_, u)| u)
}

/// The pivot's safe-to-skip machinery: `a_side` holds pivot-neighbors in
/// the forward set with no common positive non-neighbor with the pivot in
/// the same-side plex, `b_side` those with no common negative non-neighbor
/// in the opposite plex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotSets {
    pub pivot: VertexId,
    pub a_side: Vec<VertexId>,
    pub b_side: Vec<VertexId>,
}

pub fn pivot_sets(node: &SearchNode, side: Side, pivot: VertexId, g: &SignedGraph) -> PivotSets {
    let (p_side, c_same, c_other) = match side {
        Side::Left => (&node.p_l, &node.c_l, &node.c_r),
        Side::Right => (&node.p_r, &node.c_r, &node.c_l),
    };
    let mut a_side = Vec::new();
    let mut b_side = Vec::new();
    for &c in p_side.iter().filter(|&&c| g.has_edge(pivot, c)) {
        if c_same.iter().all(|&w| g.has_pos(pivot, w) || g.has_pos(c, w)) {
            a_side.push(c);
        }
        if c_other.iter().all(|&w| g.has_neg(pivot, w) || g.has_neg(c, w)) {
            b_side.push(c);
        }
    }
    PivotSets { pivot, a_side, b_side }
}

/// Branch roots for one side under a pivot oriented toward `pivot_side`.
///
/// A candidate may be skipped only when the pivot could replace it in any
/// maximal plex built from the skips: besides having no common
/// non-neighbor with the pivot in both camps (the safe sets), the edge to
/// the pivot must carry the sign that lets both sit in the final plex —
/// positive when the candidate branches into the pivot's own side,
/// negative when it branches into the opposite side. A wrong-signed
/// neighbor can never coexist with the pivot and must stay a branch root.
/// The pivot itself is never its own neighbor, so it always remains one.
pub fn pivot_branch_set(
    node: &SearchNode,
    side: Side,
    pivot: VertexId,
    pivot_side: Side,
    g: &SignedGraph,
) -> Vec<VertexId> {
    let sets = pivot_sets(node, side, pivot, g);
    let p_side = match side {
        Side::Left => &node.p_l,
        Side::Right => &node.p_r,
    };
    let compatible = |v: VertexId| {
        if side == pivot_side {
            g.has_pos(pivot, v)
        } else {
            g.has_neg(pivot, v)
        }
    };
    p_side
        .iter()
        .copied()
        .filter(|&v| !(compatible(v) && sets.a_side.contains(&v) && sets.b_side.contains(&v)))
        .collect()
}

#[derive(Debug, Clone, Copy)]
struct EngineOpts {
    pivoting: bool,
    early_term: bool,
    colorbound: bool,
}

const OPTS_PLAIN: EngineOpts = EngineOpts { pivoting: false, early_term: false, colorbound: false };
const OPTS_NO_COLOR: EngineOpts = EngineOpts { pivoting: true, early_term: true, colorbound: false };
const OPTS_FULL: EngineOpts = EngineOpts { pivoting: true, early_term: true, colorbound: true };

struct Ctx<'a> {
    g: &'a SignedGraph,
    params: Params,
    opts: EngineOpts,
    sink: &'a mut dyn FnMut(AntagonisticPlex),
    nodes: u64,
    deadline: Option<Instant>,
    timed_out: bool,
    trace: Option<Vec<(u32, bool)>>,
}

impl<'a> Ctx<'a> {
    fn new(
        g: &'a SignedGraph,
        params: Params,
        opts: EngineOpts,
        sink: &'a mut dyn FnMut(AntagonisticPlex),
    ) -> Self {
        Ctx { g, params, opts, sink, nodes: 0, deadline: None, timed_out: false, trace: None }
    }
}

fn node_is_sound(g: &SignedGraph, c_l: &[VertexId], c_r: &[VertexId], k: usize) -> bool {
    let size = c_l.len() + c_r.len();
    for side in [c_l, c_r] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                if g.has_neg(u, v) {
                    return false;
                }
            }
        }
    }
    for &u in c_l {
        for &v in c_r {
            if g.has_pos(u, v) {
                return false;
            }
        }
    }
    c_l.iter().chain(c_r.iter()).all(|&u| {
        let d = c_l
            .iter()
            .chain(c_r.iter())
            .filter(|&&w| w != u && g.has_edge(u, w))
            .count();
        d + k >= size
    })
}

fn expand(ctx: &mut Ctx, node: &mut SearchNode, depth: u32) {
    if ctx.timed_out {
        return;
    }
    if let Some(deadline) = ctx.deadline {
        if Instant::now() >= deadline {
            ctx.timed_out = true;
            return;
        }
    }
    ctx.nodes += 1;
    debug_assert!(node_is_sound(ctx.g, &node.c_l, &node.c_r, ctx.params.k()));

    let k = ctx.params.k();
    let t = ctx.params.t();
    let (sat_l, sat_r) = saturated(ctx.g, &node.c_l, &node.c_r, k);
    let refresh = |set: &[VertexId], side: Side| -> Vec<VertexId> {
        set.iter()
            .copied()
            .filter(|&v| expansion_ok(ctx.g, v, side, &node.c_l, &node.c_r, &sat_l, &sat_r, k))
            .collect()
    };
    node.p_l = refresh(&node.p_l, Side::Left);
    node.q_l = refresh(&node.q_l, Side::Left);
    node.p_r = refresh(&node.p_r, Side::Right);
    node.q_r = refresh(&node.q_r, Side::Right);

    if node.p_l.is_empty() && node.p_r.is_empty() && node.q_l.is_empty() && node.q_r.is_empty() {
        if node.c_l.len() >= t && node.c_r.len() >= t {
            let plex = AntagonisticPlex::new(node.c_l.clone(), node.c_r.clone());
            #[cfg(debug_assertions)]
            debug_assert_eq!(crate::oracle::validate_plex(&plex, ctx.g, ctx.params), Ok(()));
            (ctx.sink)(plex);
        }
        return;
    }

    if ctx.opts.early_term
        && (node.c_l.len() + node.p_l.len() < t || node.c_r.len() + node.p_r.len() < t)
    {
        return;
    }

    let parts = if ctx.opts.colorbound {
        let parts = color_candidates(&node.p_l, &node.p_r, ctx.g);
        let bounds = bounds_from_partitions(&node.c_l, &node.c_r, &parts, k);
        if bounds.cd_l < t || bounds.cd_r < t || bounds.cd_a < 2 * t {
            return;
        }
        Some(parts)
    } else {
        None
    };

    let left_first = node.parity;
    if let Some(trace) = ctx.trace.as_mut() {
        trace.push((depth, left_first));
    }
    // one pivot per node, drawn from the leading side's pool and reused
    // for both loops; independent per-side pivots can lose plexes whose
    // additions are split across both skip sets
    let pivot_side = if left_first { Side::Left } else { Side::Right };
    let pivot = if ctx.opts.pivoting { choose_pivot(node, pivot_side, ctx.g) } else { None };
    let order = if left_first { [Side::Left, Side::Right] } else { [Side::Right, Side::Left] };
    for side in order {
        branch_side(ctx, node, side, pivot.map(|u| (u, pivot_side)), parts.as_ref(), depth);
        if ctx.timed_out {
            return;
        }
    }
}

fn branch_side(
    ctx: &mut Ctx,
    node: &mut SearchNode,
    side: Side,
    pivot: Option<(VertexId, Side)>,
    parts: Option<&NodePartitions>,
    depth: u32,
) {
    let roots: Vec<VertexId> = match pivot {
        Some((u, u_side)) => pivot_branch_set(node, side, u, u_side, ctx.g),
        None => match side {
            Side::Left => node.p_l.clone(),
            Side::Right => node.p_r.clone(),
        },
    };
    let t = ctx.params.t();
    for v in roots {
        match side {
            Side::Left => remove_sorted(&mut node.p_l, v),
            Side::Right => remove_sorted(&mut node.p_r, v),
        }
        if let Some(parts) = parts {
            let (cd_side, cd_a) =
                color_degree(v, side, parts, &node.c_l, &node.c_r, ctx.g, ctx.params.k());
            // pruned roots leave the forward set without entering Q: no
            // qualified plex below this node can contain them
            if cd_side < t as i64 || cd_a < (2 * t) as i64 {
                continue;
            }
        }
        let mut child = node.child(v, side);
        expand(ctx, &mut child, depth + 1);
        if ctx.timed_out {
            return;
        }
        match side {
            Side::Left => insert_sorted(&mut node.q_l, v),
            Side::Right => insert_sorted(&mut node.q_r, v),
        }
    }
}

/// Runs the optimized recursion from an explicit state: refresh, emit or
/// cut off, then branch each side under a fresh pivot with color-degree
/// filtering.
pub fn sapeutil(
    node: SearchNode,
    g: &SignedGraph,
    params: Params,
    sink: &mut dyn FnMut(AntagonisticPlex),
) {
    let mut ctx = Ctx::new(g, params, OPTS_FULL, sink);
    let mut node = node;
    expand(&mut ctx, &mut node, 0);
}

fn rank_of(order: &[VertexId], n: usize) -> Vec<usize> {
    let mut rank = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        rank[v as usize] = i;
    }
    rank
}

fn merge_sorted(a: &[VertexId], b: &[VertexId]) -> Vec<VertexId> {
    let mut out: Vec<VertexId> = a.iter().chain(b.iter()).copied().collect();
    out.sort_unstable();
    out.dedup();
    out
}

fn split_by_rank(
    base: &[VertexId],
    rank: &[usize],
    seed_rank: usize,
) -> (Vec<VertexId>, Vec<VertexId>) {
    let mut later = Vec::new();
    let mut earlier = Vec::new();
    for &v in base {
        match rank[v as usize].cmp(&seed_rank) {
            std::cmp::Ordering::Greater => later.push(v),
            std::cmp::Ordering::Less => earlier.push(v),
            std::cmp::Ordering::Equal => {}
        }
    }
    (later, earlier)
}

/// Seed state from the raw signed one- and two-hop neighborhoods.
fn init_two_hop(g: &SignedGraph, seed: VertexId, rank: &[usize]) -> SearchNode {
    let hops = two_hop_signed(g, seed);
    let base_l = merge_sorted(g.pos_neighbors(seed), &hops.n2plus);
    let base_r = merge_sorted(g.neg_neighbors(seed), &hops.n2minus);
    let (p_l, q_l) = split_by_rank(&base_l, rank, rank[seed as usize]);
    let (p_r, q_r) = split_by_rank(&base_r, rank, rank[seed as usize]);
    SearchNode { p_l, p_r, q_l, q_r, ..SearchNode::seed(seed) }
}

/// Seed state from dichromatic reduction; also reports `|Ln| + |Rn|`.
fn init_dr(g: &SignedGraph, seed: VertexId, rank: &[usize], params: Params) -> (SearchNode, usize) {
    let hops = dichromatic_reduction(g, seed, params);
    let (p_l, q_l) = split_by_rank(&hops.ln, rank, rank[seed as usize]);
    let (p_r, q_r) = split_by_rank(&hops.rn, rank, rank[seed as usize]);
    let candidates = hops.ln.len() + hops.rn.len();
    (SearchNode { p_l, p_r, q_l, q_r, ..SearchNode::seed(seed) }, candidates)
}

struct SeedOutcome {
    plexes: Vec<AntagonisticPlex>,
    count: usize,
    dr_candidates: usize,
    dr_nanos: u64,
    nodes: u64,
    timed_out: bool,
}

#[allow(clippy::too_many_arguments)]
fn run_seed(
    g: &SignedGraph,
    seed: VertexId,
    rank: &[usize],
    params: Params,
    opts: EngineOpts,
    use_dr: bool,
    deadline: Option<Instant>,
    collect: bool,
) -> SeedOutcome {
    let dr_start = Instant::now();
    let (mut node, dr_candidates) = if use_dr {
        init_dr(g, seed, rank, params)
    } else {
        (init_two_hop(g, seed, rank), 0)
    };
    let dr_nanos = dr_start.elapsed().as_nanos() as u64;
    let mut plexes = Vec::new();
    let mut count = 0usize;
    let mut sink = |p: AntagonisticPlex| {
        count += 1;
        if collect {
            plexes.push(p);
        }
    };
    let mut ctx = Ctx::new(g, params, opts, &mut sink);
    ctx.deadline = deadline;
    expand(&mut ctx, &mut node, 0);
    let (nodes, timed_out) = (ctx.nodes, ctx.timed_out);
    SeedOutcome { plexes, count, dr_candidates, dr_nanos, nodes, timed_out }
}

struct SweepOutcome {
    plexes: Vec<AntagonisticPlex>,
    count: usize,
    per_seed_candidates: Vec<(VertexId, usize)>,
    dr_time: Duration,
    nodes: u64,
    timed_out: bool,
}

#[allow(clippy::too_many_arguments)]
fn sweep_seeds(
    g: &SignedGraph,
    seeds: &[VertexId],
    rank: &[usize],
    params: Params,
    opts: EngineOpts,
    use_dr: bool,
    workers: usize,
    deadline: Option<Instant>,
    collect: bool,
) -> SweepOutcome {
    let outcomes: Vec<SeedOutcome> = if workers > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .stack_size(16 << 20)
            .build()
            .expect("worker pool");
        pool.install(|| {
            seeds
                .par_iter()
                .map(|&s| run_seed(g, s, rank, params, opts, use_dr, deadline, collect))
                .collect()
        })
    } else {
        seeds
            .iter()
            .map(|&s| run_seed(g, s, rank, params, opts, use_dr, deadline, collect))
            .collect()
    };
    let mut merged = SweepOutcome {
        plexes: Vec::new(),
        count: 0,
        per_seed_candidates: Vec::new(),
        dr_time: Duration::ZERO,
        nodes: 0,
        timed_out: false,
    };
    for (seed, o) in seeds.iter().zip(outcomes) {
        merged.plexes.extend(o.plexes);
        merged.count += o.count;
        if use_dr {
            merged.per_seed_candidates.push((*seed, o.dr_candidates));
        }
        merged.dr_time += Duration::from_nanos(o.dr_nanos);
        merged.nodes += o.nodes;
        merged.timed_out |= o.timed_out;
    }
    merged.plexes.sort();
    merged
}

/// Plain recursive enumeration over the graph as given (any global
/// reduction is the caller's business). Candidates per seed come from the
/// signed two-hop neighborhoods; results are canonical and sorted.
pub fn bape(g: &SignedGraph, params: Params) -> Vec<AntagonisticPlex> {
    let order = enumeration_order(g);
    let rank = rank_of(&order, g.n());
    sweep_seeds(g, &order, &rank, params, OPTS_PLAIN, false, 1, None, true).plexes
}

/// Everything `sape` does except color-bound pruning.
pub fn sanc(g: &SignedGraph, params: Params) -> Vec<AntagonisticPlex> {
    let (reduced, report) = vertex_reduction(g, params);
    let order = enumeration_order(&reduced);
    let rank = rank_of(&order, reduced.n());
    let seeds: Vec<VertexId> = order
        .iter()
        .copied()
        .filter(|v| report.survivors.binary_search(v).is_ok())
        .collect();
    sweep_seeds(&reduced, &seeds, &rank, params, OPTS_NO_COLOR, true, 1, None, true).plexes
}

/// Optimized enumeration: vertex reduction once, then per seed the
/// dichromatic candidate reduction and the pivoted, color-bounded search.
pub fn sape(g: &SignedGraph, params: Params) -> Vec<AntagonisticPlex> {
    let (reduced, report) = vertex_reduction(g, params);
    let order = enumeration_order(&reduced);
    let rank = rank_of(&order, reduced.n());
    let seeds: Vec<VertexId> = order
        .iter()
        .copied()
        .filter(|v| report.survivors.binary_search(v).is_ok())
        .collect();
    sweep_seeds(&reduced, &seeds, &rank, params, OPTS_FULL, true, 1, None, true).plexes
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algo {
    Bape,
    Sanc,
    Sape,
}

impl Algo {
    pub fn parse(s: &str) -> Option<Algo> {
        match s {
            "bape" => Some(Algo::Bape),
            "sanc" => Some(Algo::Sanc),
            "sape" => Some(Algo::Sape),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Algo::Bape => "bape",
            Algo::Sanc => "sanc",
            Algo::Sape => "sape",
        }
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub algo: Algo,
    pub workers: usize,
    pub timeout: Option<Duration>,
    pub collect: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig { algo: Algo::Sape, workers: 1, timeout: None, collect: true }
    }
}

#[derive(Debug, Clone)]
pub struct RunReport {
    pub plexes: Vec<AntagonisticPlex>,
    pub count: usize,
    pub vr_removed: usize,
    pub dr_candidate_total: usize,
    pub per_seed_candidates: Vec<(VertexId, usize)>,
    pub nodes: u64,
    pub vr_time: Duration,
    pub dr_time: Duration,
    pub enumerate_time: Duration,
    pub timed_out: bool,
}

/// Full driver used by the command-line front end: vertex reduction is
/// applied for every algorithm, then the selected engine runs over the
/// surviving seeds, optionally across a worker pool with a wall-clock
/// timeout.
pub fn run(g: &SignedGraph, params: Params, cfg: &RunConfig) -> RunReport {
    let vr_start = Instant::now();
    let (reduced, report) = vertex_reduction(g, params);
    let vr_time = vr_start.elapsed();

    let order = enumeration_order(&reduced);
    let rank = rank_of(&order, reduced.n());
    let seeds: Vec<VertexId> = order
        .iter()
        .copied()
        .filter(|v| report.survivors.binary_search(v).is_ok())
        .collect();
    let (opts, use_dr) = match cfg.algo {
        Algo::Bape => (OPTS_PLAIN, false),
        Algo::Sanc => (OPTS_NO_COLOR, true),
        Algo::Sape => (OPTS_FULL, true),
    };
    let deadline = cfg.timeout.map(|d| Instant::now() + d);
    let enum_start = Instant::now();
    let sweep = sweep_seeds(
        &reduced,
        &seeds,
        &rank,
        params,
        opts,
        use_dr,
        cfg.workers.max(1),
        deadline,
        cfg.collect,
    );
    let enumerate_time = enum_start.elapsed();
    RunReport {
        plexes: sweep.plexes,
        count: sweep.count,
        vr_removed: report.removed_vr,
        dr_candidate_total: sweep.per_seed_candidates.iter().map(|&(_, c)| c).sum(),
        per_seed_candidates: sweep.per_seed_candidates,
        nodes: sweep.nodes,
        vr_time,
        dr_time: sweep.dr_time,
        enumerate_time: enumerate_time.saturating_sub(sweep.dr_time),
        timed_out: sweep.timed_out,
    }
}
