//! Small hand-built graphs with known enumeration results, embedded as
//! edge-list text and loaded through the standard loader. The test suite
//! re-derives every expected result with the brute-force scan before
//! trusting a fixture.

use crate::graph::{load_signed_edge_list, SignedGraph};
use crate::params::Params;

pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub k: u32,
    pub t: u32,
    /// Canonical result lines, sorted, as `format_results` would print them.
    pub expected: &'static [&'static str],
}

impl Fixture {
    pub fn graph(&self) -> SignedGraph {
        let (g, report) = load_signed_edge_list(self.text.as_bytes())
            .unwrap_or_else(|e| panic!("fixture {}: {e}", self.name));
        assert_eq!(
            (report.duplicate_edges, report.conflicting_pairs, report.self_loops),
            (0, 0, 0),
            "fixture {} is not clean",
            self.name
        );
        g
    }

    pub fn params(&self) -> Params {
        Params::new(self.k, self.t).unwrap()
    }
}

pub const ALL: &[Fixture] = &[
    Fixture {
        name: "balanced_pair",
        text: include_str!("../fixtures/balanced_pair.edges"),
        k: 2,
        t: 3,
        expected: &["L=[0,1,2] R=[3,4,5]"],
    },
    Fixture {
        name: "camps_with_spoiler",
        text: include_str!("../fixtures/camps_with_spoiler.edges"),
        k: 2,
        t: 4,
        expected: &["L=[0,1,2,3] R=[4,5,6,7]"],
    },
    Fixture {
        name: "coloring_fan",
        text: include_str!("../fixtures/coloring_fan.edges"),
        k: 2,
        t: 4,
        expected: &[],
    },
    Fixture {
        name: "ego_peel",
        text: include_str!("../fixtures/ego_peel.edges"),
        k: 2,
        t: 4,
        expected: &["L=[0,1,2,3,4] R=[6,7,8,9]"],
    },
    Fixture {
        name: "two_hop_reach",
        text: include_str!("../fixtures/two_hop_reach.edges"),
        k: 2,
        t: 4,
        expected: &["L=[0,1,2,3,4,9] R=[5,6,7,8]"],
    },
];

pub fn by_name(name: &str) -> &'static Fixture {
    ALL.iter()
        .find(|f| f.name == name)
        .unwrap_or_else(|| panic!("no fixture named {name}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::format_results;
    use crate::oracle::enumerate_bruteforce;

    /// Every fixture's frozen expectation must match a fresh brute-force
    /// run; a mismatch means the fixture drifted and nothing downstream
    /// can be trusted.
    #[test]
    fn fixtures_reproduce_under_brute_force() {
        for fixture in ALL {
            let g = fixture.graph();
            let results = enumerate_bruteforce(&g, fixture.params())
                .unwrap_or_else(|e| panic!("fixture {}: {e}", fixture.name));
            let got = format_results(&results, g.labels());
            let want: String = fixture.expected.iter().map(|l| format!("{l}\n")).collect();
            assert_eq!(got, want, "fixture {} drifted", fixture.name);
        }
    }
}
