//! Strong matchings and Jaeger decompositions.
//!
//! A strong (induced) matching has no host edge joining two of its edges.
//! A perfect matching that splits into two strong matchings is a Jaeger
//! matching; a cubic graph possessing one is a Jaeger graph. Deciding
//! whether a given perfect matching splits reduces to 2-colouring its
//! conflict graph, whose vertices are the matching edges and whose edges
//! record "some host edge joins these two".

use thiserror::Error;

use crate::family::FSGraph;
use crate::graph::EdgeId;
use crate::matchings::{enumerate_perfect_matchings, Matching};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum JaegerError {
    #[error("edge serial {0} is out of range")]
    UnknownEdge(EdgeId),
    #[error("edge set is not a matching: two edges share a vertex")]
    NotAMatching,
    #[error("expected exactly 6 matchings (got {0})")]
    WrongCount(usize),
    #[error("matchings belong to different hosts")]
    HostMismatch,
}

/// A perfect matching split into two strong matchings. The colouring is
/// canonical: conflict-graph components are 2-coloured in ascending order of
/// their minimum edge serial, with that minimum edge blue.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JaegerDecomposition {
    pub blue: Vec<EdgeId>,
    pub red: Vec<EdgeId>,
}

/// True when no host edge joins two distinct edges of the set.
///
/// An edge parallel to a member of the set does not disqualify it: only
/// connections between two *different* set edges count.
pub fn is_strong_matching(g: &FSGraph, set: &[EdgeId]) -> Result<bool, JaegerError> {
    let graph = g.graph();
    let mut owner: Vec<Option<EdgeId>> = vec![None; graph.vertex_count()];
    for &e in set {
        if e.0 >= graph.edge_count() {
            return Err(JaegerError::UnknownEdge(e));
        }
        let (u, v) = graph.endpoints(e);
        for w in [u, v] {
            let slot = &mut owner[graph.vertex_index(w).expect("endpoint exists")];
            if slot.is_some() && *slot != Some(e) {
                return Err(JaegerError::NotAMatching);
            }
            *slot = Some(e);
        }
    }
    for edge in graph.edges() {
        let a = owner[graph.vertex_index(edge.endpoints.0).expect("endpoint exists")];
        let b = owner[graph.vertex_index(edge.endpoints.1).expect("endpoint exists")];
        if let (Some(a), Some(b)) = (a, b) {
            if a != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Splits a perfect matching into two strong matchings if possible.
///
/// Returns `None` when the conflict graph has an odd cycle; otherwise the
/// canonical 2-colouring as `(blue, red)`.
pub fn jaeger_decompose(m: &Matching<'_>) -> Option<JaegerDecomposition> {
    let g = m.host().graph();
    let edges = m.edges();
    let pos_of = |e: EdgeId| edges.binary_search(&e).expect("matching edge");

    // vertex -> covering matching edge (as index into `edges`)
    let mut owner = vec![usize::MAX; g.vertex_count()];
    for (i, &e) in edges.iter().enumerate() {
        let (u, v) = g.endpoints(e);
        owner[g.vertex_index(u).expect("endpoint exists")] = i;
        owner[g.vertex_index(v).expect("endpoint exists")] = i;
    }

    let mut conflicts: Vec<Vec<usize>> = vec![Vec::new(); edges.len()];
    for edge in g.edges() {
        let a = owner[g.vertex_index(edge.endpoints.0).expect("endpoint exists")];
        let b = owner[g.vertex_index(edge.endpoints.1).expect("endpoint exists")];
        if a != b {
            conflicts[a].push(b);
            conflicts[b].push(a);
        }
    }

    // breadth-first 2-colouring, components by ascending minimum serial
    let mut color: Vec<Option<bool>> = vec![None; edges.len()];
    for start in 0..edges.len() {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(true);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let c = color[i].expect("queued edges are colored");
            for &n in &conflicts[i] {
                match color[n] {
                    None => {
                        color[n] = Some(!c);
                        queue.push_back(n);
                    }
                    Some(other) if other == c => return None,
                    Some(_) => {}
                }
            }
        }
    }

    let blue: Vec<EdgeId> = edges
        .iter()
        .copied()
        .filter(|&e| color[pos_of(e)] == Some(true))
        .collect();
    let red: Vec<EdgeId> = edges
        .iter()
        .copied()
        .filter(|&e| color[pos_of(e)] == Some(false))
        .collect();
    debug_assert_eq!(is_strong_matching(m.host(), &blue), Ok(true));
    debug_assert_eq!(is_strong_matching(m.host(), &red), Ok(true));
    Some(JaegerDecomposition { blue, red })
}

/// All perfect matchings that split into two strong matchings, in
/// enumeration order, each with its canonical decomposition.
pub fn enumerate_jaeger_matchings(g: &FSGraph) -> Vec<(Matching<'_>, JaegerDecomposition)> {
    enumerate_perfect_matchings(g)
        .into_iter()
        .filter_map(|m| jaeger_decompose(&m).map(|d| (m, d)))
        .collect()
}

/// True when the host has at least one Jaeger matching.
pub fn is_jaeger_graph(g: &FSGraph) -> bool {
    enumerate_perfect_matchings(g)
        .iter()
        .any(|m| jaeger_decompose(m).is_some())
}

/// Closed-form membership predicate for the family: FS(j,k) is a Jaeger
/// graph exactly when j = 1 and k is not divisible by 3, or j = 3 and k is.
pub fn jaeger_family_predicate(j: u8, k: usize) -> bool {
    (j == 1 && k % 3 != 0) || (j == 3 && k % 3 == 0)
}

/// Checks the exact double cover property: every host edge lies in exactly
/// two of the six given matchings.
pub fn berge_fulkerson_check(ms: &[Matching<'_>]) -> Result<bool, JaegerError> {
    let [first, rest @ ..] = ms else {
        return Err(JaegerError::WrongCount(0));
    };
    if ms.len() != 6 {
        return Err(JaegerError::WrongCount(ms.len()));
    }
    let host = first.host();
    // members are canonically labelled, so equal parameters mean equal hosts
    if rest
        .iter()
        .any(|m| (m.host().j(), m.host().k()) != (host.j(), host.k()))
    {
        return Err(JaegerError::HostMismatch);
    }
    let mut cover = vec![0usize; host.graph().edge_count()];
    for m in ms {
        for &e in m.edges() {
            cover[e.0] += 1;
        }
    }
    Ok(cover.iter().all(|&c| c == 2))
}
