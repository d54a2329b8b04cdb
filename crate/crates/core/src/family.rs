//! Construction of the claw-ring graphs FS(j,k).
//!
//! FS(j,k) is the cubic graph on 4k vertices made of k claws
//! `C_i = {t_i, x_i, y_i, z_i}` joined in a ring: star edges inside each
//! claw, role-preserving path edges between consecutive claws, and a seam
//! matching between `C_{k-1}` and `C_0` whose role permutation determines
//! how many cycles the external vertices induce — that count is `j`.
//!
//! The edge serial layout is fixed once and for all so that every
//! enumeration in this crate is reproducible byte for byte:
//!
//! * serials `0 .. 3k`: star edges, by claw then role `x, y, z`;
//! * serials `3k .. 6k-3`: path edges, by gap then role;
//! * serials `6k-3 .. 6k`: seam edges, by the role of the `C_{k-1}` endpoint.
//!
//! For `k = 2` the gap between `C_0` and `C_1` is the path class and the
//! seam contributes the second parallel class, so FS(2,2) and FS(3,2) are
//! honest multigraphs while FS(1,2) is the cube.

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeId, EdgeTag, MultiGraph, Role, VertexId};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("j must be 1, 2 or 3 (got {0})")]
    InvalidJ(u8),
    #[error("k must be at least 2 (got {0})")]
    InvalidK(usize),
}

/// The role permutation applied by the seam: an external of `C_{k-1}` with
/// role `r` is joined to the external of `C_0` with role `apply(r)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeamPermutation {
    image: [Role; 3],
}

impl SeamPermutation {
    /// The canonical seam for each family member: the identity for j = 3,
    /// a transposition fixing `x` for j = 2, and a 3-cycle for j = 1.
    pub fn for_family(j: u8) -> Result<Self, FamilyError> {
        let image = match j {
            1 => [Role::Z, Role::X, Role::Y],
            2 => [Role::X, Role::Z, Role::Y],
            3 => [Role::X, Role::Y, Role::Z],
            other => return Err(FamilyError::InvalidJ(other)),
        };
        Ok(SeamPermutation { image })
    }

    pub fn apply(&self, r: Role) -> Role {
        self.image[r.external_index().expect("seam acts on external roles")]
    }
}

impl fmt::Display for SeamPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x->{} y->{} z->{}",
            self.image[0], self.image[1], self.image[2]
        )
    }
}

/// One member of the family, with its parameters and canonical labelling.
#[derive(Clone, Debug)]
pub struct FSGraph {
    j: u8,
    k: usize,
    seam: SeamPermutation,
    graph: MultiGraph,
}

impl FSGraph {
    /// Builds FS(j,k) with the canonical labelling.
    pub fn build(j: u8, k: usize) -> Result<FSGraph, FamilyError> {
        let seam = SeamPermutation::for_family(j)?;
        if k < 2 {
            return Err(FamilyError::InvalidK(k));
        }

        let mut vertices = Vec::with_capacity(4 * k);
        for claw in 0..k {
            vertices.push(VertexId::new(claw, Role::T));
            for r in Role::EXTERNAL {
                vertices.push(VertexId::new(claw, r));
            }
        }
        let mut graph = MultiGraph::new(vertices);
        for claw in 0..k {
            for r in Role::EXTERNAL {
                graph.add_edge(
                    VertexId::new(claw, Role::T),
                    VertexId::new(claw, r),
                    Some(EdgeTag::Star),
                );
            }
        }
        for gap in 0..k - 1 {
            for r in Role::EXTERNAL {
                graph.add_edge(
                    VertexId::new(gap, r),
                    VertexId::new(gap + 1, r),
                    Some(EdgeTag::Path(gap)),
                );
            }
        }
        for r in Role::EXTERNAL {
            graph.add_edge(
                VertexId::new(k - 1, r),
                VertexId::new(0, seam.apply(r)),
                Some(EdgeTag::Seam),
            );
        }

        let fs = FSGraph { j, k, seam, graph };
        debug_assert!(fs.verify_construction().ok());
        Ok(fs)
    }

    pub fn j(&self) -> u8 {
        self.j
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn seam(&self) -> SeamPermutation {
        self.seam
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn vertex(&self, claw: usize, role: Role) -> VertexId {
        debug_assert!(claw < self.k);
        VertexId::new(claw, role)
    }

    /// All external vertices, in canonical order.
    pub fn external_vertices(&self) -> Vec<VertexId> {
        (0..self.k)
            .flat_map(|c| Role::EXTERNAL.map(|r| VertexId::new(c, r)))
            .collect()
    }

    /// The star edge `t_claw -- role_claw`.
    pub fn star_edge(&self, claw: usize, role: Role) -> EdgeId {
        let idx = role.external_index().expect("star edges end on externals");
        EdgeId(3 * claw + idx)
    }

    /// The path edge of the given role between claws `gap` and `gap + 1`
    /// (`gap < k - 1`).
    pub fn path_edge(&self, gap: usize, role: Role) -> EdgeId {
        debug_assert!(gap < self.k - 1);
        let idx = role.external_index().expect("path edges join externals");
        EdgeId(3 * self.k + 3 * gap + idx)
    }

    /// The seam edge whose `C_{k-1}` endpoint has the given role.
    pub fn seam_edge(&self, role: Role) -> EdgeId {
        let idx = role.external_index().expect("seam edges join externals");
        EdgeId(6 * self.k - 3 + idx)
    }

    /// The three edges crossing gap `g` (between `C_g` and `C_{g+1}`, the
    /// seam counting as gap `k - 1`), indexed by the role of the left (for
    /// path gaps) or `C_{k-1}` (for the seam) endpoint.
    pub fn gap_edges(&self, gap: usize) -> [EdgeId; 3] {
        debug_assert!(gap < self.k);
        if gap == self.k - 1 {
            Role::EXTERNAL.map(|r| self.seam_edge(r))
        } else {
            Role::EXTERNAL.map(|r| self.path_edge(gap, r))
        }
    }

    /// The gap crossed by an edge, if it is a path or seam edge.
    pub fn gap_of_edge(&self, e: EdgeId) -> Option<usize> {
        match self.graph.edge(e).tag {
            Some(EdgeTag::Path(g)) => Some(g),
            Some(EdgeTag::Seam) => Some(self.k - 1),
            _ => None,
        }
    }

    /// Re-checks every construction invariant and reports each as pass/fail.
    pub fn verify_construction(&self) -> ConstructionReport {
        Self::verify_parts(self.j, self.k, &self.graph)
    }

    pub(crate) fn verify_parts(j: u8, k: usize, graph: &MultiGraph) -> ConstructionReport {
        let mut checks = Vec::new();
        checks.push(ConstructionCheck {
            name: "vertex count is 4k",
            pass: graph.vertex_count() == 4 * k,
        });
        checks.push(ConstructionCheck {
            name: "edge count is 6k",
            pass: graph.edge_count() == 6 * k,
        });
        checks.push(ConstructionCheck {
            name: "graph is cubic",
            pass: graph.is_cubic(),
        });
        checks.push(ConstructionCheck {
            name: "incidence map matches edge list",
            pass: graph.check_consistency(),
        });
        let externals: Vec<VertexId> = (0..k)
            .flat_map(|c| Role::EXTERNAL.map(|r| VertexId::new(c, r)))
            .collect();
        checks.push(ConstructionCheck {
            name: "external vertices induce j cycles",
            pass: graph.induced_cycle_count(&externals) == Ok(j as usize),
        });
        checks.push(ConstructionCheck {
            name: "parallel classes appear exactly when k = 2 and j != 1",
            pass: graph.has_parallel_pair() == (k == 2 && j != 1),
        });
        // each role class without its seam edge must be a path on k vertices
        let role_paths = Role::EXTERNAL.iter().all(|&r| {
            let mut degree = vec![0usize; k];
            for e in graph.edges() {
                if e.tag == Some(EdgeTag::Seam) {
                    continue;
                }
                let (u, v) = e.endpoints;
                if u.role == r && v.role == r {
                    degree[u.claw] += 1;
                    degree[v.claw] += 1;
                }
            }
            let ends = degree.iter().filter(|&&d| d == 1).count();
            let inner = degree.iter().filter(|&&d| d == 2).count();
            ends == 2 && inner == k - 2
        });
        checks.push(ConstructionCheck {
            name: "each role class minus the seam is a path",
            pass: role_paths,
        });
        ConstructionReport { checks }
    }
}

/// One named invariant check.
#[derive(Clone, Debug)]
pub struct ConstructionCheck {
    pub name: &'static str,
    pub pass: bool,
}

/// Diagnostic report from [`FSGraph::verify_construction`].
#[derive(Clone, Debug)]
pub struct ConstructionReport {
    pub checks: Vec<ConstructionCheck>,
}

impl ConstructionReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

impl fmt::Display for ConstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{}: {}", c.name, if c.pass { "pass" } else { "FAIL" })?;
        }
        Ok(())
    }
}
