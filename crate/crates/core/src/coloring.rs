//! Exact chromatic-index computation for the family.
//!
//! A cubic multigraph has chromatic index 3 or 4, so deciding 3-edge
//! colourability settles it. The search is deterministic backtracking with
//! colour-symmetry breaking: the three star edges of claw 0 are fixed to
//! colours 0, 1, 2.
//!
//! Edges are assigned in a claw-interleaved static order (stars of claw `i`,
//! then the path edges of gap `i`, with the seam last) rather than in raw
//! serial order: raw serial order would postpone every star/path constraint
//! until all `6^(k-1)` star permutations had been enumerated, which makes
//! the chromatic-index-4 members exponentially slow to refute. The
//! interleaved order is just as deterministic.

use crate::family::FSGraph;
use crate::graph::EdgeId;
use crate::matchings::{enumerate_perfect_matchings, Matching};
use crate::two_factor::complement_two_factor;

/// A proper 3-edge colouring, indexed by edge serial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: Vec<u8>,
}

impl EdgeColoring {
    pub fn color(&self, e: EdgeId) -> u8 {
        self.colors[e.0]
    }

    /// The three colour classes as sorted serial lists. On a cubic host each
    /// class is a perfect matching.
    pub fn classes(&self) -> [Vec<EdgeId>; 3] {
        let mut out: [Vec<EdgeId>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (i, &c) in self.colors.iter().enumerate() {
            out[c as usize].push(EdgeId(i));
        }
        out
    }

    /// Rechecks properness against a host.
    pub fn is_proper(&self, g: &FSGraph) -> bool {
        g.graph().vertices().iter().all(|&v| {
            let mut seen = [false; 3];
            g.graph().incident_edges(v).iter().all(|&e| {
                let c = self.colors[e.0] as usize;
                !std::mem::replace(&mut seen[c], true)
            })
        })
    }
}

fn search_order(g: &FSGraph) -> Vec<EdgeId> {
    let k = g.k();
    let mut order = Vec::with_capacity(6 * k);
    for claw in 0..k {
        for r in crate::graph::Role::EXTERNAL {
            order.push(g.star_edge(claw, r));
        }
        if claw < k - 1 {
            for r in crate::graph::Role::EXTERNAL {
                order.push(g.path_edge(claw, r));
            }
        }
    }
    for r in crate::graph::Role::EXTERNAL {
        order.push(g.seam_edge(r));
    }
    order
}

/// Finds the first proper 3-edge colouring in the deterministic search
/// order, or `None` when the host is not 3-edge colourable.
pub fn find_3_edge_coloring(g: &FSGraph) -> Option<EdgeColoring> {
    let graph = g.graph();
    let m = graph.edge_count();

    // adjacency lists over edge serials
    let mut adjacent: Vec<Vec<usize>> = vec![Vec::new(); m];
    for v in graph.vertices() {
        let inc = graph.incident_edges(*v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                adjacent[e.0].push(f.0);
                adjacent[f.0].push(e.0);
            }
        }
    }

    const UNSET: u8 = u8::MAX;
    let mut colors = vec![UNSET; m];
    // symmetry breaking: claw 0's stars take colours 0, 1, 2
    for (c, r) in crate::graph::Role::EXTERNAL.into_iter().enumerate() {
        colors[g.star_edge(0, r).0] = c as u8;
    }
    let order: Vec<usize> = search_order(g)
        .into_iter()
        .map(|e| e.0)
        .filter(|&e| colors[e] == UNSET)
        .collect();

    fn assign(
        pos: usize,
        order: &[usize],
        adjacent: &[Vec<usize>],
        colors: &mut Vec<u8>,
    ) -> bool {
        let Some(&e) = order.get(pos) else {
            return true;
        };
        for c in 0..3u8 {
            if adjacent[e].iter().any(|&f| colors[f] == c) {
                continue;
            }
            colors[e] = c;
            if assign(pos + 1, order, adjacent, colors) {
                return true;
            }
            colors[e] = u8::MAX;
        }
        false
    }

    if assign(0, &order, &adjacent, &mut colors) {
        let coloring = EdgeColoring { colors };
        debug_assert!(coloring.is_proper(g));
        Some(coloring)
    } else {
        None
    }
}

/// Chromatic index of the host: 3 when a proper 3-edge colouring exists,
/// 4 otherwise.
pub fn chromatic_index(g: &FSGraph) -> u8 {
    if find_3_edge_coloring(g).is_some() {
        3
    } else {
        4
    }
}

/// True when some perfect matching is complementary to a 2-factor all of
/// whose cycles have even length. On cubic graphs this is equivalent to
/// 3-edge colourability, which the test suite uses as a cross-check between
/// the two code paths.
pub fn even_2_factor_exists(g: &FSGraph) -> bool {
    enumerate_perfect_matchings(g).iter().any(|m| {
        complement_two_factor(m)
            .lengths()
            .iter()
            .all(|&l| l % 2 == 0)
    })
}

/// Converts the colour classes of a colouring into validated matchings.
pub fn classes_as_matchings<'g>(g: &'g FSGraph, coloring: &EdgeColoring) -> [Matching<'g>; 3] {
    coloring
        .classes()
        .map(|class| Matching::new(g, class).expect("colour classes of a cubic host are perfect"))
}
