//! Brute-force ground truth for small graphs, plus the structural
//! validator used on every emitted result. Deliberately simple: the value
//! of this module is being dumb and independent of the search engine.

use std::collections::VecDeque;

use crate::enumerate::AntagonisticPlex;
use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexId};
use crate::params::Params;

/// Hard cap for the exhaustive subset scan.
pub const BRUTE_FORCE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFilter {
    All,
    PositiveOnly,
}

/// True iff every member of `s` has at least `|s| - k` neighbors inside
/// `s` under the chosen edge filter.
pub fn is_kplex(s: &[VertexId], g: &SignedGraph, k: usize, edges: EdgeFilter) -> bool {
    s.iter().all(|&v| {
        let d = s
            .iter()
            .filter(|&&u| {
                u != v
                    && match edges {
                        EdgeFilter::All => g.has_edge(u, v),
                        EdgeFilter::PositiveOnly => g.has_pos(u, v),
                    }
            })
            .count();
        d + k >= s.len()
    })
}

/// Tries to split `s` into two camps so that every positive edge stays
/// inside a camp and every negative edge crosses. BFS 2-coloring per
/// connected component; each component's minimum vertex goes left. Returns
/// `None` on any conflict.
pub fn antagonistic_bipartition(
    s: &[VertexId],
    g: &SignedGraph,
) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    let mut color: Vec<Option<bool>> = vec![None; s.len()];
    let index_of = |v: VertexId| s.iter().position(|&u| u == v).unwrap();
    for start in 0..s.len() {
        if color[start].is_some() {
            continue;
        }
        // components are scanned in ascending order, so `start` is the
        // component minimum; it goes left
        color[start] = Some(true);
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let v = s[i];
            let side = color[i].unwrap();
            for &u in s {
                if u == v {
                    continue;
                }
                let want = if g.has_pos(u, v) {
                    side
                } else if g.has_neg(u, v) {
                    !side
                } else {
                    continue;
                };
                let j = index_of(u);
                match color[j] {
                    None => {
                        color[j] = Some(want);
                        queue.push_back(j);
                    }
                    Some(c) if c != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, &v) in s.iter().enumerate() {
        if color[i] == Some(true) {
            left.push(v);
        } else {
            right.push(v);
        }
    }
    Some((left, right))
}

/// Structural test used by both the subset scan and the maximality check:
/// k-plex over all edges, a consistent two-camp split, and each camp a
/// k-plex over positive edges alone.
fn structure(s: &[VertexId], g: &SignedGraph, k: usize) -> Option<(Vec<VertexId>, Vec<VertexId>)> {
    if !is_kplex(s, g, k, EdgeFilter::All) {
        return None;
    }
    let (left, right) = antagonistic_bipartition(s, g)?;
    if is_kplex(&left, g, k, EdgeFilter::PositiveOnly)
        && is_kplex(&right, g, k, EdgeFilter::PositiveOnly)
    {
        Some((left, right))
    } else {
        None
    }
}

/// Exhaustive enumeration of qualified maximal antagonistic k-plexes by
/// scanning all vertex subsets. Maximality is single-vertex extension,
/// which suffices because both the k-plex and the antagonistic property
/// are hereditary. Refuses graphs above `BRUTE_FORCE_CAP` vertices.
pub fn enumerate_bruteforce(g: &SignedGraph, params: Params) -> Result<Vec<AntagonisticPlex>> {
    let n = g.n();
    if n > BRUTE_FORCE_CAP {
        return Err(Error::TooLarge { n, cap: BRUTE_FORCE_CAP });
    }
    let k = params.k();
    let t = params.t();
    let mut results = Vec::new();
    for mask in 1u32..(1u32 << n) {
        if (mask.count_ones() as usize) < 2 * t {
            continue;
        }
        let s: Vec<VertexId> = (0..n as VertexId).filter(|&v| mask >> v & 1 == 1).collect();
        let Some((left, right)) = structure(&s, g, k) else {
            continue;
        };
        if left.len() < t || right.len() < t {
            continue;
        }
        let extendable = (0..n as VertexId).any(|v| {
            if mask >> v & 1 == 1 {
                return false;
            }
            let mut bigger = s.clone();
            bigger.push(v);
            bigger.sort_unstable();
            structure(&bigger, g, k).is_some()
        });
        if !extendable {
            results.push(AntagonisticPlex::new(left, right));
        }
    }
    results.sort();
    Ok(results)
}

/// First structural condition an alleged result violates.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PlexViolation {
    #[error("sides overlap or are unsorted")]
    MalformedSides,
    #[error("left side does not hold the smallest vertex")]
    NotCanonical,
    #[error("negative edge ({0}, {1}) inside a side")]
    NegativeEdgeInside(VertexId, VertexId),
    #[error("positive edge ({0}, {1}) across sides")]
    PositiveEdgeAcross(VertexId, VertexId),
    #[error("vertex {0} breaks the positive k-plex condition of its side")]
    SideNotPositivePlex(VertexId),
    #[error("vertex {0} breaks the k-plex condition of the union")]
    NotKplex(VertexId),
    #[error("not maximal: vertex {0} still fits")]
    NotMaximal(VertexId),
    #[error("side of size {0} is below t={1}")]
    SideTooSmall(usize, usize),
    #[error("vertices {0} and {1} are more than two hops apart")]
    DiameterExceeded(VertexId, VertexId),
}

/// Checks every invariant a qualified maximal antagonistic k-plex must
/// satisfy, against the full graph. Reports the first violation found.
pub fn validate_plex(
    plex: &AntagonisticPlex,
    g: &SignedGraph,
    params: Params,
) -> std::result::Result<(), PlexViolation> {
    let k = params.k();
    let t = params.t();
    let left = plex.left();
    let right = plex.right();
    let sorted = |s: &[VertexId]| s.windows(2).all(|w| w[0] < w[1]);
    if !sorted(left) || !sorted(right) || left.iter().any(|v| right.contains(v)) {
        return Err(PlexViolation::MalformedSides);
    }
    let min_all = left.iter().chain(right.iter()).min().copied();
    if min_all.is_some() && left.first().copied() != min_all {
        return Err(PlexViolation::NotCanonical);
    }

    for side in [left, right] {
        for (i, &u) in side.iter().enumerate() {
            for &v in &side[i + 1..] {
                if g.has_neg(u, v) {
                    return Err(PlexViolation::NegativeEdgeInside(u, v));
                }
            }
        }
    }
    for &u in left {
        for &v in right {
            if g.has_pos(u, v) {
                return Err(PlexViolation::PositiveEdgeAcross(u, v));
            }
        }
    }

    for side in [left, right] {
        for &v in side {
            let d = side.iter().filter(|&&u| u != v && g.has_pos(u, v)).count();
            if d + k < side.len() {
                return Err(PlexViolation::SideNotPositivePlex(v));
            }
        }
    }
    let union: Vec<VertexId> = {
        let mut u = left.to_vec();
        u.extend_from_slice(right);
        u.sort_unstable();
        u
    };
    for &v in &union {
        let d = union.iter().filter(|&&u| u != v && g.has_edge(u, v)).count();
        if d + k < union.len() {
            return Err(PlexViolation::NotKplex(v));
        }
    }

    for v in 0..g.n() as VertexId {
        if union.binary_search(&v).is_err() {
            let mut bigger = union.clone();
            bigger.push(v);
            bigger.sort_unstable();
            if structure(&bigger, g, k).is_some() {
                return Err(PlexViolation::NotMaximal(v));
            }
        }
    }

    if left.len() < t {
        return Err(PlexViolation::SideTooSmall(left.len(), t));
    }
    if right.len() < t {
        return Err(PlexViolation::SideTooSmall(right.len(), t));
    }

    for (i, &u) in union.iter().enumerate() {
        for &v in &union[i + 1..] {
            let close = g.has_edge(u, v)
                || union
                    .iter()
                    .any(|&w| w != u && w != v && g.has_edge(u, w) && g.has_edge(v, w));
            if !close {
                return Err(PlexViolation::DiameterExceeded(u, v));
            }
        }
    }
    Ok(())
}
