//! Exhaustive perfect-matching enumeration and type classification.
//!
//! The enumeration is deliberately plain backtracking — always extend at the
//! lowest-index uncovered vertex, trying incident edges by ascending serial —
//! so that it can serve as a trusted oracle for every count in this crate.
//! The output order is fully determined by the canonical labelling.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::family::FSGraph;
use crate::graph::{EdgeId, EdgeTag, MultiGraph, Role, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MatchingError {
    #[error("edge serial {0} is out of range")]
    UnknownEdge(EdgeId),
    #[error("vertex {0} is covered by more than one edge")]
    VertexCoveredTwice(VertexId),
    #[error("vertex {0} is not covered")]
    VertexUncovered(VertexId),
    #[error("gap profile fits none of the three matching types")]
    UnrecognizedGapProfile,
}

/// How a perfect matching distributes over the inter-claw gaps.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum MatchingType {
    /// Exactly one matching edge crosses every gap.
    One,
    /// Two matching edges cross every even gap, none cross an odd gap.
    TwoZero,
    /// Two matching edges cross every odd gap, none cross an even gap.
    TwoOne,
}

impl fmt::Display for MatchingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatchingType::One => write!(f, "1"),
            MatchingType::TwoZero => write!(f, "2.0"),
            MatchingType::TwoOne => write!(f, "2.1"),
        }
    }
}

/// Per-gap count of matching edges; gap `g` sits between claws `g` and
/// `g + 1`, with the seam counted as gap `k - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapProfile(Vec<u8>);

impl GapProfile {
    pub fn counts(&self) -> &[u8] {
        &self.0
    }
}

/// A validated perfect matching of some FS(j,k), stored as a sorted list of
/// edge serials.
#[derive(Clone, Debug)]
pub struct Matching<'g> {
    host: &'g FSGraph,
    edges: Vec<EdgeId>,
}

impl<'g> Matching<'g> {
    /// Validates that the edges cover every vertex of the host exactly once.
    pub fn new(
        host: &'g FSGraph,
        edges: impl IntoIterator<Item = EdgeId>,
    ) -> Result<Self, MatchingError> {
        let g = host.graph();
        let mut cover: Vec<Option<EdgeId>> = vec![None; g.vertex_count()];
        let mut sorted = BTreeSet::new();
        for e in edges {
            if e.0 >= g.edge_count() {
                return Err(MatchingError::UnknownEdge(e));
            }
            if !sorted.insert(e) {
                continue;
            }
            let (u, v) = g.endpoints(e);
            for w in [u, v] {
                let slot = &mut cover[g.vertex_index(w).expect("endpoint exists")];
                if slot.is_some() {
                    return Err(MatchingError::VertexCoveredTwice(w));
                }
                *slot = Some(e);
            }
        }
        for (i, slot) in cover.iter().enumerate() {
            if slot.is_none() {
                return Err(MatchingError::VertexUncovered(g.vertices()[i]));
            }
        }
        Ok(Matching {
            host,
            edges: sorted.into_iter().collect(),
        })
    }

    pub fn host(&self) -> &'g FSGraph {
        self.host
    }

    /// Matching edges in ascending serial order.
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn serials(&self) -> Vec<usize> {
        self.edges.iter().map(|e| e.0).collect()
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// The matching edge covering `v`.
    pub fn edge_at(&self, v: VertexId) -> EdgeId {
        let g = self.host.graph();
        *g.incident_edges(v)
            .iter()
            .find(|&&e| self.contains(e))
            .expect("perfect matching covers every vertex")
    }

    /// The external role matched to the center of the given claw. Every
    /// perfect matching contains exactly one star edge per claw.
    pub fn star_role(&self, claw: usize) -> Role {
        let t = self.host.vertex(claw, Role::T);
        let e = self.edge_at(t);
        self.host.graph().other_endpoint(e, t).role
    }

    /// Edges of the host not in the matching, in ascending serial order.
    pub fn complement_edges(&self) -> Vec<EdgeId> {
        (0..self.host.graph().edge_count())
            .map(EdgeId)
            .filter(|&e| !self.contains(e))
            .collect()
    }

    /// Classifies the matching by its gap profile.
    pub fn classify(&self) -> Result<(MatchingType, GapProfile), MatchingError> {
        let k = self.host.k();
        let mut counts = vec![0u8; k];
        for &e in &self.edges {
            match self.host.graph().edge(e).tag {
                Some(EdgeTag::Path(g)) => counts[g] += 1,
                Some(EdgeTag::Seam) => counts[k - 1] += 1,
                _ => {}
            }
        }
        let profile = GapProfile(counts);
        let ty = if profile.0.iter().all(|&c| c == 1) {
            MatchingType::One
        } else if profile
            .0
            .iter()
            .enumerate()
            .all(|(g, &c)| c == if g % 2 == 0 { 2 } else { 0 })
        {
            MatchingType::TwoZero
        } else if profile
            .0
            .iter()
            .enumerate()
            .all(|(g, &c)| c == if g % 2 == 1 { 2 } else { 0 })
        {
            MatchingType::TwoOne
        } else {
            return Err(MatchingError::UnrecognizedGapProfile);
        };
        Ok((ty, profile))
    }

    /// Shorthand for the type component of [`classify`](Self::classify).
    pub fn matching_type(&self) -> MatchingType {
        self.classify().expect("valid matchings classify").0
    }
}

impl PartialEq for Matching<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.host, other.host) && self.edges == other.edges
    }
}

impl Eq for Matching<'_> {}

/// All perfect matchings of an arbitrary multigraph, in the deterministic
/// backtracking order. Generic so that the fixture graphs can be counted too.
pub fn perfect_matchings(g: &MultiGraph) -> Vec<Vec<EdgeId>> {
    let n = g.vertex_count();
    let mut covered = vec![false; n];
    let mut picked: Vec<EdgeId> = Vec::with_capacity(n / 2);
    let mut out = Vec::new();
    if n % 2 == 1 {
        return out;
    }

    fn extend(
        g: &MultiGraph,
        covered: &mut Vec<bool>,
        picked: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        let v = match covered.iter().position(|&c| !c) {
            None => {
                let mut m = picked.clone();
                m.sort_unstable();
                out.push(m);
                return;
            }
            Some(i) => i,
        };
        let vid = g.vertices()[v];
        for &e in g.incident_edges(vid) {
            let w = g.other_endpoint(e, vid);
            let wi = g.vertex_index(w).expect("endpoint exists");
            if covered[wi] {
                continue;
            }
            covered[v] = true;
            covered[wi] = true;
            picked.push(e);
            extend(g, covered, picked, out);
            picked.pop();
            covered[v] = false;
            covered[wi] = false;
        }
    }

    extend(g, &mut covered, &mut picked, &mut out);
    out
}

/// All perfect matchings of FS(j,k), in the deterministic enumeration order.
pub fn enumerate_perfect_matchings(host: &FSGraph) -> Vec<Matching<'_>> {
    perfect_matchings(host.graph())
        .into_iter()
        .map(|edges| Matching {
            host,
            edges, // already sorted and validated by construction
        })
        .collect()
}

/// Enumerated totals per matching type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TypeCounts {
    pub mu: u64,
    pub mu1: u64,
    pub mu2_0: u64,
    pub mu2_1: u64,
}

/// Enumerates and classifies every perfect matching of the host.
pub fn count_by_type(host: &FSGraph) -> TypeCounts {
    let mut counts = TypeCounts {
        mu: 0,
        mu1: 0,
        mu2_0: 0,
        mu2_1: 0,
    };
    for m in enumerate_perfect_matchings(host) {
        counts.mu += 1;
        match m.matching_type() {
            MatchingType::One => counts.mu1 += 1,
            MatchingType::TwoZero => counts.mu2_0 += 1,
            MatchingType::TwoOne => counts.mu2_1 += 1,
        }
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::FSGraph;

    #[test]
    fn small_hosts_have_the_expected_counts() {
        let cases = [
            ((1, 3), 9),
            ((2, 3), 8),
            ((3, 3), 6),
            ((1, 2), 9),
            ((2, 2), 10),
            ((3, 2), 12),
        ];
        for ((j, k), mu) in cases {
            let g = FSGraph::build(j, k).unwrap();
            assert_eq!(
                enumerate_perfect_matchings(&g).len(),
                mu,
                "mu({j},{k})"
            );
        }
    }

    #[test]
    fn every_matching_has_one_star_edge_per_claw() {
        for (j, k) in [(1, 4), (2, 5), (3, 2)] {
            let g = FSGraph::build(j, k).unwrap();
            for m in enumerate_perfect_matchings(&g) {
                for claw in 0..k {
                    let stars = Role::EXTERNAL
                        .iter()
                        .filter(|&&r| m.contains(g.star_edge(claw, r)))
                        .count();
                    assert_eq!(stars, 1);
                }
            }
        }
    }

    #[test]
    fn odd_k_matchings_are_all_type_one() {
        let g = FSGraph::build(1, 3).unwrap();
        for m in enumerate_perfect_matchings(&g) {
            assert_eq!(m.matching_type(), MatchingType::One);
        }
    }

    #[test]
    fn explicit_type_two_matching_classifies_as_2_0() {
        let g = FSGraph::build(3, 4).unwrap();
        let mut edges = vec![
            g.path_edge(0, Role::Y),
            g.path_edge(0, Role::Z),
            g.path_edge(2, Role::Y),
            g.path_edge(2, Role::Z),
        ];
        for claw in 0..4 {
            edges.push(g.star_edge(claw, Role::X));
        }
        let m = Matching::new(&g, edges).unwrap();
        let (ty, profile) = m.classify().unwrap();
        assert_eq!(ty, MatchingType::TwoZero);
        assert_eq!(profile.counts(), &[2, 0, 2, 0]);
    }

    #[test]
    fn non_matchings_are_rejected() {
        let g = FSGraph::build(3, 4).unwrap();
        // x path edges together with all x star edges double-cover x1
        let edges = vec![
            g.path_edge(0, Role::X),
            g.star_edge(1, Role::X),
        ];
        assert_eq!(
            Matching::new(&g, edges).unwrap_err(),
            MatchingError::VertexCoveredTwice(g.vertex(1, Role::X))
        );
        assert!(matches!(
            Matching::new(&g, vec![g.star_edge(0, Role::X)]).unwrap_err(),
            MatchingError::VertexUncovered(_)
        ));
        assert_eq!(
            Matching::new(&g, vec![EdgeId(999)]).unwrap_err(),
            MatchingError::UnknownEdge(EdgeId(999))
        );
    }

    #[test]
    fn type_two_split_is_even_for_fs_2_4() {
        let g = FSGraph::build(2, 4).unwrap();
        let counts = count_by_type(&g);
        assert_eq!(counts.mu2_0 + counts.mu2_1, 18);
        assert_eq!(counts.mu2_0, 9);
        assert_eq!(counts.mu2_1, 9);
    }

    #[test]
    fn count_report_examples() {
        let c = count_by_type(&FSGraph::build(2, 5).unwrap());
        assert_eq!((c.mu, c.mu1, c.mu2_0 + c.mu2_1), (32, 32, 0));

        let c = count_by_type(&FSGraph::build(1, 4).unwrap());
        assert_eq!(c.mu, 33);

        let c = count_by_type(&FSGraph::build(3, 2).unwrap());
        assert_eq!((c.mu, c.mu1), (12, 6));
    }

    #[test]
    fn enumeration_is_reproducible() {
        let g = FSGraph::build(2, 4).unwrap();
        let a: Vec<Vec<usize>> = enumerate_perfect_matchings(&g)
            .iter()
            .map(|m| m.serials())
            .collect();
        let b: Vec<Vec<usize>> = enumerate_perfect_matchings(&g)
            .iter()
            .map(|m| m.serials())
            .collect();
        assert_eq!(a, b);
        let dedup: BTreeSet<_> = a.iter().collect();
        assert_eq!(dedup.len(), a.len(), "no duplicates");
    }

    #[test]
    fn fixture_matching_counts() {
        use crate::fixtures;
        assert_eq!(perfect_matchings(&fixtures::petersen()).len(), 6);
        assert_eq!(perfect_matchings(&fixtures::k33()).len(), 6);
        assert_eq!(perfect_matchings(&fixtures::cube()).len(), 9);
    }
}
