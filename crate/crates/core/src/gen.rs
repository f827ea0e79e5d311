//! Seeded synthetic signed-graph generators.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, VertexId};

/// Planted-community generator: `planted` disjoint community pairs, each of
/// two sides with `side` vertices, dense positive edges inside a side and
/// dense negative edges across; leftover pairs get noise edges with random
/// signs. Deterministic for a fixed seed.
#[derive(Debug, Clone, Copy)]
pub struct GenSpec {
    pub n: u32,
    pub planted: u32,
    pub side: u32,
    pub p_pos_in: f64,
    pub p_neg_cross: f64,
    pub p_noise: f64,
    pub seed: u64,
}

impl GenSpec {
    fn validate(&self) -> Result<()> {
        for (name, p) in [
            ("p_pos_in", self.p_pos_in),
            ("p_neg_cross", self.p_neg_cross),
            ("p_noise", self.p_noise),
        ] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidGenSpec(format!("{name}={p} outside [0,1]")));
            }
        }
        let needed = self.planted as u64 * 2 * self.side as u64;
        if needed > self.n as u64 {
            return Err(Error::InvalidGenSpec(format!(
                "{} planted communities of side {} need {} vertices, n={}",
                self.planted, self.side, needed, self.n
            )));
        }
        Ok(())
    }
}

/// Edge list for a planted-community instance, pairs in ascending order.
pub fn planted_edges(spec: &GenSpec) -> Result<Vec<(VertexId, VertexId, Sign)>> {
    spec.validate()?;
    let n = spec.n as usize;
    let block = 2 * spec.side as usize;
    // community(v) = Some((index, left-side?)) for planted vertices
    let community = |v: usize| -> Option<(usize, bool)> {
        if block == 0 {
            return None;
        }
        let c = v / block;
        if c < spec.planted as usize {
            Some((c, v % block < spec.side as usize))
        } else {
            None
        }
    };
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            match (community(u), community(v)) {
                (Some((cu, lu)), Some((cv, lv))) if cu == cv => {
                    if lu == lv {
                        if rng.gen_bool(spec.p_pos_in) {
                            edges.push((u as VertexId, v as VertexId, Sign::Pos));
                        }
                    } else if rng.gen_bool(spec.p_neg_cross) {
                        edges.push((u as VertexId, v as VertexId, Sign::Neg));
                    }
                }
                _ => {
                    if spec.p_noise > 0.0 && rng.gen_bool(spec.p_noise) {
                        let sign = if rng.gen_bool(0.5) { Sign::Pos } else { Sign::Neg };
                        edges.push((u as VertexId, v as VertexId, sign));
                    }
                }
            }
        }
    }
    Ok(edges)
}

pub fn planted_graph(spec: &GenSpec) -> Result<SignedGraph> {
    Ok(SignedGraph::from_edges(spec.n as usize, &planted_edges(spec)?))
}

/// Writes an edge list as loader-compatible text (`u v +` / `u v -`).
pub fn edges_to_text(edges: &[(VertexId, VertexId, Sign)]) -> String {
    let mut out = String::new();
    for &(u, v, s) in edges {
        let sign = match s {
            Sign::Pos => '+',
            Sign::Neg => '-',
        };
        out.push_str(&format!("{u} {v} {sign}\n"));
    }
    out
}

/// Erdos-Renyi-style signed graph: each pair gets an edge with probability
/// `density`, negative with probability `neg_frac`. Deterministic per seed.
pub fn random_graph(n: usize, density: f64, neg_frac: f64, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(density) {
                let sign = if rng.gen_bool(neg_frac) { Sign::Neg } else { Sign::Pos };
                edges.push((u as VertexId, v as VertexId, sign));
            }
        }
    }
    SignedGraph::from_edges(n, &edges)
}
