//! Generic undirected multigraph substrate.
//!
//! Vertices carry a `(claw, role)` label and edges are identified by a dense
//! serial number, so two parallel edges are always distinguishable. Every
//! algorithm in this crate works on [`EdgeId`]s, never on endpoint pairs,
//! which is what keeps the `k = 2` multigraph members of the family from
//! needing special cases downstream.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

/// Position of a vertex within its claw: the center `T` or one of the three
/// external roles `X`, `Y`, `Z`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Role {
    T,
    X,
    Y,
    Z,
}

impl Role {
    /// The three external roles, in canonical order.
    pub const EXTERNAL: [Role; 3] = [Role::X, Role::Y, Role::Z];

    /// Index of an external role in canonical order; `None` for the center.
    pub fn external_index(self) -> Option<usize> {
        match self {
            Role::T => None,
            Role::X => Some(0),
            Role::Y => Some(1),
            Role::Z => Some(2),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Role::T => 't',
            Role::X => 'x',
            Role::Y => 'y',
            Role::Z => 'z',
        }
    }

    pub fn from_letter(c: char) -> Option<Role> {
        match c.to_ascii_lowercase() {
            't' => Some(Role::T),
            'x' => Some(Role::X),
            'y' => Some(Role::Y),
            'z' => Some(Role::Z),
            _ => None,
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A labelled vertex: claw index plus role within the claw.
///
/// The ordering (claw-major, `t < x < y < z`) is the canonical vertex order
/// used by the enumeration kernels and by all text output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct VertexId {
    pub claw: usize,
    pub role: Role,
}

impl VertexId {
    pub fn new(claw: usize, role: Role) -> Self {
        VertexId { claw, role }
    }

    pub fn is_center(self) -> bool {
        self.role == Role::T
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.claw, self.role).cmp(&(other.claw, other.role))
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.role.letter(), self.claw)
    }
}

impl FromStr for VertexId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut chars = s.chars();
        let role = chars
            .next()
            .and_then(Role::from_letter)
            .ok_or_else(|| format!("bad vertex name `{s}`"))?;
        let claw = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| format!("bad vertex name `{s}`"))?;
        Ok(VertexId { claw, role })
    }
}

/// Dense serial number identifying one edge instance. Parallel edges get
/// distinct serials.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Structural tag of an edge in a claw-ring graph.
///
/// `Star` joins a center to an external of the same claw, `Path(g)` joins
/// externals of claws `g` and `g + 1`, and `Seam` is one of the three edges
/// closing the ring between the last claw and claw 0. Fixture graphs and
/// inflation products carry untagged edges.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeTag {
    Star,
    Path(usize),
    Seam,
}

impl fmt::Display for EdgeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeTag::Star => write!(f, "star"),
            EdgeTag::Path(g) => write!(f, "path({g})"),
            EdgeTag::Seam => write!(f, "seam"),
        }
    }
}

/// One edge instance: an unordered endpoint pair (stored in canonical order)
/// plus an optional structural tag.
#[derive(Clone, Debug)]
pub struct Edge {
    pub endpoints: (VertexId, VertexId),
    pub tag: Option<EdgeTag>,
}

impl Edge {
    pub fn touches(&self, v: VertexId) -> bool {
        self.endpoints.0 == v || self.endpoints.1 == v
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge serial {0} is out of range")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("vertex {vertex} has {count} incident edges in the set; expected 0 or 2")]
    BadCycleIncidence { vertex: VertexId, count: usize },
    #[error("vertex {vertex} has induced degree {degree}; expected 2")]
    NotTwoRegular { vertex: VertexId, degree: usize },
    #[error("vertex {vertex} has degree {degree}; host must be cubic")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("vertex {0} has an incident parallel edge pair")]
    IncidentParallelPair(VertexId),
    #[error("edge list line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A cycle reported by [`MultiGraph::cycle_decomposition`].
///
/// `edges[i]` joins `vertices[i]` to `vertices[i + 1]` (indices mod length).
/// The rotation and direction are canonical: the cycle starts at its
/// minimum-serial edge and proceeds toward the lower-serial second edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    /// Set of claw indices visited by this cycle.
    pub fn claw_span(&self) -> BTreeSet<usize> {
        self.vertices.iter().map(|v| v.claw).collect()
    }
}

/// An immutable undirected multigraph with labelled vertices and
/// serial-numbered edges.
#[derive(Clone, Debug)]
pub struct MultiGraph {
    vertices: Vec<VertexId>,
    index: BTreeMap<VertexId, usize>,
    edges: Vec<Edge>,
    incidence: Vec<Vec<EdgeId>>,
}

impl MultiGraph {
    /// Creates a graph with the given vertices (kept in the given order) and
    /// no edges. Panics on duplicate labels.
    pub fn new(vertices: Vec<VertexId>) -> Self {
        let mut index = BTreeMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            let prev = index.insert(v, i);
            assert!(prev.is_none(), "duplicate vertex label {v}");
        }
        let incidence = vec![Vec::new(); vertices.len()];
        MultiGraph {
            vertices,
            index,
            edges: Vec::new(),
            incidence,
        }
    }

    /// Adds an edge; the new serial is the previous edge count. Endpoints are
    /// stored in canonical order. Panics on unknown endpoints or self-loops.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId, tag: Option<EdgeTag>) -> EdgeId {
        assert!(u != v, "self-loops are not supported");
        let iu = *self.index.get(&u).unwrap_or_else(|| panic!("unknown vertex {u}"));
        let iv = *self.index.get(&v).unwrap_or_else(|| panic!("unknown vertex {v}"));
        let id = EdgeId(self.edges.len());
        let endpoints = if u <= v { (u, v) } else { (v, u) };
        self.edges.push(Edge { endpoints, tag });
        self.incidence[iu].push(id);
        self.incidence[iv].push(id);
        id
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e.0]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index.contains_key(&v)
    }

    pub fn vertex_index(&self, v: VertexId) -> Option<usize> {
        self.index.get(&v).copied()
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e.0].endpoints
    }

    /// The endpoint of `e` other than `v`.
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Incident edges of `v`, in ascending serial order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[self.index[&v]]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incident_edges(v).len()
    }

    pub fn is_cubic(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() == 3)
    }

    /// True when some pair of edges joins the same two endpoints.
    pub fn has_parallel_pair(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges.iter().any(|e| !seen.insert(e.endpoints))
    }

    /// Full rescan check that the incidence map matches the edge list.
    pub fn check_consistency(&self) -> bool {
        let mut rebuilt = vec![Vec::new(); self.vertices.len()];
        for (i, e) in self.edges.iter().enumerate() {
            for v in [e.endpoints.0, e.endpoints.1] {
                match self.index.get(&v) {
                    Some(&iv) if self.vertices[iv] == v => rebuilt[iv].push(EdgeId(i)),
                    _ => return false,
                }
            }
        }
        rebuilt == self.incidence
    }

    fn validate_edge_set(&self, set: &[EdgeId]) -> Result<BTreeSet<EdgeId>, GraphError> {
        let mut out = BTreeSet::new();
        for &e in set {
            if e.0 >= self.edges.len() {
                return Err(GraphError::UnknownEdge(e));
            }
            out.insert(e);
        }
        Ok(out)
    }

    /// Decomposes an edge set in which every touched vertex has exactly two
    /// incident set edges into vertex-disjoint cycles.
    ///
    /// Cycles are reported in ascending order of their minimum edge serial,
    /// each in canonical rotation. A parallel pair forms a valid 2-cycle.
    pub fn cycle_decomposition(&self, set: &[EdgeId]) -> Result<Vec<Cycle>, GraphError> {
        let set = self.validate_edge_set(set)?;

        // incident set-edges per vertex
        let mut at: Vec<Vec<EdgeId>> = vec![Vec::new(); self.vertices.len()];
        for &e in &set {
            let (u, v) = self.endpoints(e);
            at[self.index[&u]].push(e);
            at[self.index[&v]].push(e);
        }
        for (i, inc) in at.iter().enumerate() {
            if !(inc.len() == 0 || inc.len() == 2) {
                return Err(GraphError::BadCycleIncidence {
                    vertex: self.vertices[i],
                    count: inc.len(),
                });
            }
        }

        let other_at = |vertex: VertexId, not: EdgeId| -> EdgeId {
            let inc = &at[self.index[&vertex]];
            if inc[0] == not {
                inc[1]
            } else {
                inc[0]
            }
        };

        let mut used = BTreeSet::new();
        let mut cycles = Vec::new();
        for &e0 in &set {
            if used.contains(&e0) {
                continue;
            }
            let (a, b) = self.endpoints(e0);
            let fa = other_at(a, e0);
            let fb = other_at(b, e0);
            // canonical direction: the second edge is the lower-serial
            // neighbour of e0; ties only happen for parallel pairs
            let (start, mut cur) = if fb <= fa { (a, b) } else { (b, a) };
            let mut edges = vec![e0];
            let mut vertices = vec![start, cur];
            used.insert(e0);
            let mut prev = e0;
            loop {
                let next = other_at(cur, prev);
                if next == e0 {
                    break;
                }
                used.insert(next);
                edges.push(next);
                cur = self.other_endpoint(next, cur);
                vertices.push(cur);
                prev = next;
            }
            vertices.pop(); // the walk closes back on `start`
            cycles.push(Cycle { edges, vertices });
        }
        Ok(cycles)
    }

    /// Number of cycles induced by a 2-regular vertex set.
    pub fn induced_cycle_count(&self, verts: &[VertexId]) -> Result<usize, GraphError> {
        let mut set = BTreeSet::new();
        for &v in verts {
            if !self.contains_vertex(v) {
                return Err(GraphError::UnknownVertex(v));
            }
            set.insert(v);
        }
        let induced: Vec<EdgeId> = (0..self.edges.len())
            .map(EdgeId)
            .filter(|&e| {
                let (u, v) = self.endpoints(e);
                set.contains(&u) && set.contains(&v)
            })
            .collect();
        for &v in &set {
            let degree = self
                .incident_edges(v)
                .iter()
                .filter(|&&e| {
                    let w = self.other_endpoint(e, v);
                    set.contains(&w)
                })
                .count();
            if degree != 2 {
                return Err(GraphError::NotTwoRegular { vertex: v, degree });
            }
        }
        Ok(self.cycle_decomposition(&induced)?.len())
    }

    /// Replaces a vertex of a cubic host by a triangle, joining each former
    /// neighbour to a distinct triangle vertex. The result is cubic with two
    /// more vertices and three more edges.
    pub fn inflate_vertex(&self, v: VertexId) -> Result<MultiGraph, GraphError> {
        if !self.contains_vertex(v) {
            return Err(GraphError::UnknownVertex(v));
        }
        for (i, inc) in self.incidence.iter().enumerate() {
            if inc.len() != 3 {
                return Err(GraphError::NotCubic {
                    vertex: self.vertices[i],
                    degree: inc.len(),
                });
            }
        }
        let incident = self.incident_edges(v).to_vec();
        for (i, &e) in incident.iter().enumerate() {
            for &f in &incident[i + 1..] {
                if self.endpoints(e) == self.endpoints(f) {
                    return Err(GraphError::IncidentParallelPair(v));
                }
            }
        }

        let fresh_claw = self.vertices.iter().map(|w| w.claw).max().unwrap_or(0) + 1;
        let triangle: Vec<VertexId> = Role::EXTERNAL
            .iter()
            .map(|&r| VertexId::new(fresh_claw, r))
            .collect();

        let mut vertices: Vec<VertexId> =
            self.vertices.iter().copied().filter(|&w| w != v).collect();
        vertices.extend(&triangle);
        let mut out = MultiGraph::new(vertices);

        // surviving edges keep their relative order (and tags)
        for e in &self.edges {
            if !e.touches(v) {
                out.add_edge(e.endpoints.0, e.endpoints.1, e.tag);
            }
        }
        // attachments, in ascending serial order of the replaced edges
        for (slot, &e) in incident.iter().enumerate() {
            let n = self.other_endpoint(e, v);
            out.add_edge(n, triangle[slot], None);
        }
        out.add_edge(triangle[0], triangle[1], None);
        out.add_edge(triangle[0], triangle[2], None);
        out.add_edge(triangle[1], triangle[2], None);

        debug_assert!(out.is_cubic());
        Ok(out)
    }

    /// Text edge list, one `<u> <v> #<serial>` line per edge. The serial
    /// suffix keeps parallel edges distinguishable on round-trips.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (i, e) in self.edges.iter().enumerate() {
            out.push_str(&format!("{} {} #{}\n", e.endpoints.0, e.endpoints.1, i));
        }
        out
    }

    /// Parses the `to_edge_list` format. Serials must form a dense range;
    /// vertices are collected from the endpoint names and sorted canonically.
    pub fn from_edge_list(text: &str) -> Result<MultiGraph, GraphError> {
        let mut parsed: Vec<(usize, VertexId, VertexId)> = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| GraphError::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            let mut parts = line.split_whitespace();
            let u: VertexId = parts
                .next()
                .ok_or_else(|| err("missing first endpoint"))?
                .parse()
                .map_err(|m: String| err(&m))?;
            let v: VertexId = parts
                .next()
                .ok_or_else(|| err("missing second endpoint"))?
                .parse()
                .map_err(|m: String| err(&m))?;
            let serial = parts
                .next()
                .and_then(|s| s.strip_prefix('#'))
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| err("missing or malformed #serial"))?;
            if parts.next().is_some() {
                return Err(err("trailing tokens"));
            }
            parsed.push((serial, u, v));
        }
        parsed.sort_by_key(|&(s, _, _)| s);
        for (want, &(got, _, _)) in parsed.iter().enumerate() {
            if want != got {
                return Err(GraphError::Parse {
                    line: 0,
                    msg: format!("serials are not dense: expected {want}, found {got}"),
                });
            }
        }
        let mut vertices: Vec<VertexId> = parsed
            .iter()
            .flat_map(|&(_, u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        vertices.sort();
        let mut g = MultiGraph::new(vertices);
        for &(_, u, v) in &parsed {
            g.add_edge(u, v, None);
        }
        Ok(g)
    }

    /// JSON export: vertex names plus per-edge serial, endpoints and tag.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct EdgeView {
            serial: usize,
            endpoints: [String; 2],
            #[serde(skip_serializing_if = "Option::is_none")]
            tag: Option<String>,
        }
        #[derive(Serialize)]
        struct GraphView {
            vertices: Vec<String>,
            edges: Vec<EdgeView>,
        }
        let view = GraphView {
            vertices: self.vertices.iter().map(|v| v.to_string()).collect(),
            edges: self
                .edges
                .iter()
                .enumerate()
                .map(|(i, e)| EdgeView {
                    serial: i,
                    endpoints: [e.endpoints.0.to_string(), e.endpoints.1.to_string()],
                    tag: e.tag.map(|t| t.to_string()),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&view).expect("graph serialization cannot fail")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> MultiGraph {
        let vs: Vec<VertexId> = (0..3).map(|i| VertexId::new(i, Role::X)).collect();
        let mut g = MultiGraph::new(vs.clone());
        g.add_edge(vs[0], vs[1], None);
        g.add_edge(vs[1], vs[2], None);
        g.add_edge(vs[0], vs[2], None);
        g
    }

    #[test]
    fn empty_edge_set_decomposes_to_nothing() {
        let g = triangle();
        assert!(g.cycle_decomposition(&[]).unwrap().is_empty());
    }

    #[test]
    fn triangle_is_one_cycle() {
        let g = triangle();
        let cycles = g
            .cycle_decomposition(&[EdgeId(0), EdgeId(1), EdgeId(2)])
            .unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 3);
        assert_eq!(cycles[0].edges()[0], EdgeId(0));
    }

    #[test]
    fn parallel_pair_is_a_two_cycle() {
        let vs = vec![VertexId::new(0, Role::X), VertexId::new(1, Role::X)];
        let mut g = MultiGraph::new(vs.clone());
        g.add_edge(vs[0], vs[1], None);
        g.add_edge(vs[1], vs[0], None);
        let cycles = g.cycle_decomposition(&[EdgeId(0), EdgeId(1)]).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].len(), 2);
        assert_eq!(cycles[0].vertices(), &[vs[0], vs[1]]);
    }

    #[test]
    fn odd_incidence_is_rejected() {
        let g = triangle();
        let err = g.cycle_decomposition(&[EdgeId(0)]).unwrap_err();
        assert!(matches!(err, GraphError::BadCycleIncidence { count: 1, .. }));
    }

    #[test]
    fn decomposition_ignores_input_order() {
        let g = triangle();
        let a = g
            .cycle_decomposition(&[EdgeId(2), EdgeId(0), EdgeId(1)])
            .unwrap();
        let b = g
            .cycle_decomposition(&[EdgeId(0), EdgeId(1), EdgeId(2)])
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn induced_count_rejects_non_two_regular_sets() {
        let g = triangle();
        let err = g
            .induced_cycle_count(&[VertexId::new(0, Role::X), VertexId::new(1, Role::X)])
            .unwrap_err();
        assert!(matches!(err, GraphError::NotTwoRegular { degree: 1, .. }));
    }

    #[test]
    fn vertex_names_round_trip() {
        for name in ["t0", "x12", "y3", "z0"] {
            let v: VertexId = name.parse().unwrap();
            assert_eq!(v.to_string(), name);
        }
        assert!("q1".parse::<VertexId>().is_err());
        assert!("x".parse::<VertexId>().is_err());
    }

    #[test]
    fn edge_list_round_trips_parallel_edges() {
        let vs = vec![VertexId::new(0, Role::X), VertexId::new(1, Role::X)];
        let mut g = MultiGraph::new(vs.clone());
        g.add_edge(vs[0], vs[1], None);
        g.add_edge(vs[1], vs[0], None);
        let text = g.to_edge_list();
        let back = MultiGraph::from_edge_list(&text).unwrap();
        assert_eq!(back.vertex_count(), 2);
        assert_eq!(back.edge_count(), 2);
        assert!(back.has_parallel_pair());
        assert_eq!(back.to_edge_list(), text);
    }

    #[test]
    fn consistency_rescan_passes() {
        assert!(triangle().check_consistency());
    }
}
