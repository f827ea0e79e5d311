//! Greedy coloring of candidate sets and the three colornum upper bounds
//! used to cut off hopeless search branches.

use std::collections::HashMap;

use crate::graph::{SignedGraph, VertexId};

/// Disjoint independent classes over a candidate set, under whatever
/// adjacency predicate produced them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorPartition {
    pub classes: Vec<Vec<VertexId>>,
    pub class_of: HashMap<VertexId, usize>,
}

impl ColorPartition {
    /// Sum over classes of `min(|class|, k)`: an upper bound on how many
    /// colored vertices any k-plex can absorb.
    pub fn colornum(&self, k: usize) -> usize {
        self.classes.iter().map(|c| c.len().min(k)).sum()
    }
}

/// Upper bounds on the friend-side, foe-side, and combined plex sizes
/// reachable from the current search node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ColorBounds {
    pub cd_l: usize,
    pub cd_r: usize,
    pub cd_a: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// First-fit coloring in ascending id order: each vertex lands in the
/// lowest-indexed class containing none of its neighbors.
pub fn greedy_color(
    vertices: &[VertexId],
    adjacent: impl Fn(VertexId, VertexId) -> bool,
) -> ColorPartition {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut classes: Vec<Vec<VertexId>> = Vec::new();
    let mut class_of = HashMap::new();
    for &v in &sorted {
        let slot = classes
            .iter()
            .position(|class| class.iter().all(|&u| !adjacent(u, v)));
        match slot {
            Some(i) => {
                classes[i].push(v);
                class_of.insert(v, i);
            }
            None => {
                class_of.insert(v, classes.len());
                classes.push(vec![v]);
            }
        }
    }
    ColorPartition { classes, class_of }
}

/// The three partitions a search node colors: friend candidates and foe
/// candidates under positive edges only, their union under all edges.
#[derive(Debug, Clone)]
pub struct NodePartitions {
    pub pl: ColorPartition,
    pub pr: ColorPartition,
    pub all: ColorPartition,
}

pub fn color_candidates(p_l: &[VertexId], p_r: &[VertexId], g: &SignedGraph) -> NodePartitions {
    let pl = greedy_color(p_l, |a, b| g.has_pos(a, b));
    let pr = greedy_color(p_r, |a, b| g.has_pos(a, b));
    let mut union = p_l.to_vec();
    union.extend_from_slice(p_r);
    let all = greedy_color(&union, |a, b| g.has_edge(a, b));
    NodePartitions { pl, pr, all }
}

/// Colornum bounds for the current node:
/// `cd_l = Σ min(|pl_j|, k) + |C_L|`, mirrored for the right side, and the
/// combined bound over all candidates against `|C_L| + |C_R|`.
pub fn colornum_bounds(
    c_l: &[VertexId],
    c_r: &[VertexId],
    p_l: &[VertexId],
    p_r: &[VertexId],
    g: &SignedGraph,
    k: usize,
) -> ColorBounds {
    let parts = color_candidates(p_l, p_r, g);
    bounds_from_partitions(c_l, c_r, &parts, k)
}

pub fn bounds_from_partitions(
    c_l: &[VertexId],
    c_r: &[VertexId],
    parts: &NodePartitions,
    k: usize,
) -> ColorBounds {
    ColorBounds {
        cd_l: parts.pl.colornum(k) + c_l.len(),
        cd_r: parts.pr.colornum(k) + c_r.len(),
        cd_a: parts.all.colornum(k) + c_l.len() + c_r.len(),
    }
}

/// Per-vertex refinement: with `F(X, Y) = Σ_{j, v ∉ X_j} min(|X_j ∩ Y|, k)`
/// over the classes of a partition,
/// `cd_side(v) = F(side classes, N+(v)) + (k - |C_side \ N+(v)|) + |C_side|`
/// and `cd_a(v)` is the analogue over all classes and all edges. Values can
/// go negative when `v` misses more than `k` members of the growing side.
pub fn color_degree(
    v: VertexId,
    side: Side,
    parts: &NodePartitions,
    c_l: &[VertexId],
    c_r: &[VertexId],
    g: &SignedGraph,
    k: usize,
) -> (i64, i64) {
    let f = |part: &ColorPartition, hit: &dyn Fn(VertexId) -> bool| -> i64 {
        part.classes
            .iter()
            .enumerate()
            .filter(|&(j, _)| part.class_of.get(&v).copied() != Some(j))
            .map(|(_, class)| class.iter().filter(|&&u| hit(u)).count().min(k) as i64)
            .sum()
    };
    let (part, c_side) = match side {
        Side::Left => (&parts.pl, c_l),
        Side::Right => (&parts.pr, c_r),
    };
    let missed_side = c_side.iter().filter(|&&u| !g.has_pos(v, u)).count() as i64;
    let cd_side = f(part, &|u| g.has_pos(v, u)) + (k as i64 - missed_side) + c_side.len() as i64;

    let missed_all = c_l
        .iter()
        .chain(c_r.iter())
        .filter(|&&u| !g.has_edge(v, u))
        .count() as i64;
    let cd_a = f(&parts.all, &|u| g.has_edge(v, u))
        + (k as i64 - missed_all)
        + (c_l.len() + c_r.len()) as i64;
    (cd_side, cd_a)
}
