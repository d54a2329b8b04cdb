//! Small named cubic graphs used as test fixtures and inflation hosts.

use crate::graph::{MultiGraph, Role, VertexId};

/// The Petersen graph: outer 5-cycle on `x0..x4`, spokes, inner pentagram
/// on `y0..y4`.
pub fn petersen() -> MultiGraph {
    let outer: Vec<VertexId> = (0..5).map(|i| VertexId::new(i, Role::X)).collect();
    let inner: Vec<VertexId> = (0..5).map(|i| VertexId::new(i, Role::Y)).collect();
    let mut vs = outer.clone();
    vs.extend(inner.iter().copied());
    let mut g = MultiGraph::new(vs);
    for i in 0..5 {
        g.add_edge(outer[i], outer[(i + 1) % 5], None);
    }
    for i in 0..5 {
        g.add_edge(outer[i], inner[i], None);
    }
    for i in 0..5 {
        g.add_edge(inner[i], inner[(i + 2) % 5], None);
    }
    g
}

/// The complete bipartite graph K_{3,3} with colour classes `x0..x2` and
/// `y0..y2`.
pub fn k33() -> MultiGraph {
    let left: Vec<VertexId> = (0..3).map(|i| VertexId::new(i, Role::X)).collect();
    let right: Vec<VertexId> = (0..3).map(|i| VertexId::new(i, Role::Y)).collect();
    let mut vs = left.clone();
    vs.extend(right.iter().copied());
    let mut g = MultiGraph::new(vs);
    for &u in &left {
        for &v in &right {
            g.add_edge(u, v, None);
        }
    }
    g
}

/// The 3-cube: top 4-cycle on `x0..x3`, bottom 4-cycle on `y0..y3`, verticals.
pub fn cube() -> MultiGraph {
    let top: Vec<VertexId> = (0..4).map(|i| VertexId::new(i, Role::X)).collect();
    let bottom: Vec<VertexId> = (0..4).map(|i| VertexId::new(i, Role::Y)).collect();
    let mut vs = top.clone();
    vs.extend(bottom.iter().copied());
    let mut g = MultiGraph::new(vs);
    for i in 0..4 {
        g.add_edge(top[i], top[(i + 1) % 4], None);
    }
    for i in 0..4 {
        g.add_edge(bottom[i], bottom[(i + 1) % 4], None);
    }
    for i in 0..4 {
        g.add_edge(top[i], bottom[i], None);
    }
    g
}

fn multiplicity_matrix(g: &MultiGraph) -> Vec<Vec<u8>> {
    let n = g.vertex_count();
    let mut m = vec![vec![0u8; n]; n];
    for e in g.edges() {
        let iu = g.vertex_index(e.endpoints.0).unwrap();
        let iv = g.vertex_index(e.endpoints.1).unwrap();
        m[iu][iv] += 1;
        m[iv][iu] += 1;
    }
    m
}

/// Backtracking isomorphism test for the small fixture graphs (multigraph
/// aware: edge multiplicities must match). Exponential in general; only
/// meant for graphs of a dozen or so vertices.
pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let am = multiplicity_matrix(a);
    let bm = multiplicity_matrix(b);
    let adeg: Vec<usize> = a.vertices().iter().map(|&v| a.degree(v)).collect();
    let bdeg: Vec<usize> = b.vertices().iter().map(|&v| b.degree(v)).collect();
    {
        let mut sa = adeg.clone();
        let mut sb = bdeg.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return false;
        }
    }

    fn extend(
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        am: &[Vec<u8>],
        bm: &[Vec<u8>],
        adeg: &[usize],
        bdeg: &[usize],
    ) -> bool {
        let n = am.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || adeg[i] != bdeg[cand] {
                continue;
            }
            if (0..i).all(|h| am[i][h] == bm[cand][map[h]]) {
                map.push(cand);
                used[cand] = true;
                if extend(i + 1, map, used, am, bm, adeg, bdeg) {
                    return true;
                }
                used[cand] = false;
                map.pop();
            }
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    extend(0, &mut map, &mut used, &am, &bm, &adeg, &bdeg)
}
