//! Complementary 2-factor analysis.
//!
//! Removing a perfect matching from a cubic graph leaves a spanning
//! 2-regular subgraph. For type-1 matchings of FS(j,k) that 2-factor has one
//! or two cycles; in the two-cycle case each claw contributes three vertices
//! to one cycle (its *major* cycle) and one to the other, and three local
//! rewiring moves walk between such matchings. For type-2 matchings the
//! 2-factor is one long even cycle plus a number of block-local 6-cycles.

use std::fmt;

use thiserror::Error;

use crate::graph::{Cycle, EdgeId, Role, VertexId};
use crate::matchings::{Matching, MatchingType};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TwoFactorError {
    #[error("matching is not of type 1")]
    NotTypeOne,
    #[error("matching is not of type 2")]
    NotTypeTwo,
    #[error("2-factor has {0} cycles; expected exactly 2")]
    NotTwoCycles(usize),
    #[error("2-factor violates the type-2 structure: {0}")]
    StructureViolation(String),
}

/// Errors from [`local_transform`], naming the precondition clause that
/// failed.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("matching is not of type 1")]
    NotTypeOne,
    #[error("2-factor has {0} cycles; the transformation needs exactly 2")]
    NotTwoCycles(usize),
    #[error("anchor {anchor} out of range; this variant needs anchor <= {limit}")]
    AnchorOutOfRange { anchor: usize, limit: usize },
    #[error("claw {claw} must be major in the {expected} cycle")]
    PatternMismatch { claw: usize, expected: &'static str },
}

/// The spanning 2-regular complement of a perfect matching.
#[derive(Clone, Debug)]
pub struct TwoFactor {
    cycles: Vec<Cycle>,
}

impl TwoFactor {
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }

    /// Index of the cycle containing the given vertex.
    pub fn cycle_of(&self, v: VertexId) -> usize {
        self.cycles
            .iter()
            .position(|c| c.contains_vertex(v))
            .expect("a 2-factor covers every vertex")
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.cycles.iter().any(|c| c.edges().contains(&e))
    }
}

/// The cycle decomposition of the host edges not in the matching.
pub fn complement_two_factor(m: &Matching<'_>) -> TwoFactor {
    let cycles = m
        .host()
        .graph()
        .cycle_decomposition(&m.complement_edges())
        .expect("the complement of a perfect matching of a cubic graph is 2-regular");
    TwoFactor { cycles }
}

/// True when the 2-factor is a single (hence hamiltonian) cycle.
pub fn is_hamiltonian(tf: &TwoFactor) -> bool {
    tf.cycle_count() == 1
}

/// Per-claw major assignment of a two-cycle 2-factor.
///
/// Claw `i` is major in the cycle that contains its center `t_i`; that cycle
/// holds three of the claw's four vertices. Cycle indices refer to the
/// canonical cycle order of the 2-factor, so index 0 is the cycle containing
/// the lowest-serial complement edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorProfile {
    pub assignment: Vec<usize>,
    pub k1: usize,
    pub k2: usize,
}

impl fmt::Display for MajorProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let majors: Vec<String> = self.assignment.iter().map(|c| (c + 1).to_string()).collect();
        write!(f, "majors {} (k1={}, k2={})", majors.join(" "), self.k1, self.k2)
    }
}

/// Computes the major profile of a type-1 matching whose 2-factor has
/// exactly two cycles.
pub fn major_profile(m: &Matching<'_>, tf: &TwoFactor) -> Result<MajorProfile, TwoFactorError> {
    if m.matching_type() != MatchingType::One {
        return Err(TwoFactorError::NotTypeOne);
    }
    if tf.cycle_count() != 2 {
        return Err(TwoFactorError::NotTwoCycles(tf.cycle_count()));
    }
    let k = m.host().k();
    let assignment: Vec<usize> = (0..k)
        .map(|claw| tf.cycle_of(m.host().vertex(claw, Role::T)))
        .collect();
    let k1 = assignment.iter().filter(|&&c| c == 0).count();
    let k2 = k - k1;
    debug_assert_eq!(tf.cycles()[0].len(), 3 * k1 + k2);
    debug_assert_eq!(tf.cycles()[1].len(), 3 * k2 + k1);
    Ok(MajorProfile { assignment, k1, k2 })
}

/// The three local rewiring moves on type-1 matchings with a two-cycle
/// complement. Numbering follows the order in which the patterns consume
/// consecutive claws: variant 1 needs two adjacent claws major in the
/// anchored cycle, variants 2 and 3 need a three-claw window with the other
/// cycle major in the middle (variant 2) or in the last two claws
/// (variant 3).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformVariant {
    One,
    Two,
    Three,
}

impl TransformVariant {
    pub fn from_index(i: u8) -> Option<Self> {
        match i {
            1 => Some(TransformVariant::One),
            2 => Some(TransformVariant::Two),
            3 => Some(TransformVariant::Three),
            _ => None,
        }
    }

    fn window(self) -> usize {
        match self {
            TransformVariant::One => 2,
            TransformVariant::Two | TransformVariant::Three => 3,
        }
    }

    /// Expected major pattern over the window, relative to the anchored
    /// cycle (`true` = major in the cycle that is major at the anchor).
    fn pattern(self) -> &'static [bool] {
        match self {
            TransformVariant::One => &[true, true],
            TransformVariant::Two => &[true, false, true],
            TransformVariant::Three => &[true, false, false],
        }
    }
}

/// Applies one local rewiring move at the anchor claw, returning the new
/// perfect matching. The anchor window never crosses the seam.
///
/// The move exchanges star and path edges inside the window so that the
/// 2-factor cycle lengths change by exactly (-4, +4), (-2, +2) or (0, 0)
/// for variants 1, 2, 3 respectively, measured against the cycle that was
/// major at the anchor.
pub fn local_transform<'g>(
    m: &Matching<'g>,
    variant: TransformVariant,
    anchor: usize,
) -> Result<Matching<'g>, TransformError> {
    let host = m.host();
    let k = host.k();
    if m.matching_type() != MatchingType::One {
        return Err(TransformError::NotTypeOne);
    }
    let tf = complement_two_factor(m);
    if tf.cycle_count() != 2 {
        return Err(TransformError::NotTwoCycles(tf.cycle_count()));
    }
    let window = variant.window();
    if anchor + window > k {
        return Err(TransformError::AnchorOutOfRange {
            anchor,
            limit: k - window,
        });
    }

    let major_at = |claw: usize| tf.cycle_of(host.vertex(claw, Role::T));
    let anchored = major_at(anchor);
    for (offset, &same) in variant.pattern().iter().enumerate() {
        let claw = anchor + offset;
        if (major_at(claw) == anchored) != same {
            return Err(TransformError::PatternMismatch {
                claw,
                expected: if same { "anchored" } else { "other" },
            });
        }
    }

    // Local role frame at the anchor: `center` is matched to the center of
    // C_anchor, `crossing` is the role of the matching edge over the anchor
    // gap, `third` is the remaining role.
    let center = m.star_role(anchor);
    let crossing = Role::EXTERNAL
        .into_iter()
        .find(|&r| m.contains(host.path_edge(anchor, r)))
        .expect("a type-1 matching has one edge on every gap");
    let third = Role::EXTERNAL
        .into_iter()
        .find(|&r| r != center && r != crossing)
        .expect("three external roles");

    let mut edges: Vec<EdgeId> = m.edges().to_vec();
    let mut remove = |e: EdgeId| {
        let pos = edges.iter().position(|&x| x == e);
        debug_assert!(pos.is_some(), "pattern guarantees edge membership");
        edges.swap_remove(pos.expect("edge present"));
    };
    match variant {
        TransformVariant::One => {
            debug_assert_eq!(m.star_role(anchor + 1), center);
            remove(host.star_edge(anchor, center));
            remove(host.star_edge(anchor + 1, center));
            remove(host.path_edge(anchor, crossing));
            edges.push(host.star_edge(anchor, crossing));
            edges.push(host.star_edge(anchor + 1, crossing));
            edges.push(host.path_edge(anchor, center));
        }
        TransformVariant::Two => {
            debug_assert_eq!(m.star_role(anchor + 1), third);
            debug_assert_eq!(m.star_role(anchor + 2), crossing);
            remove(host.star_edge(anchor, center));
            remove(host.path_edge(anchor, crossing));
            remove(host.path_edge(anchor + 1, center));
            remove(host.star_edge(anchor + 2, crossing));
            edges.push(host.star_edge(anchor, crossing));
            edges.push(host.path_edge(anchor, center));
            edges.push(host.path_edge(anchor + 1, crossing));
            edges.push(host.star_edge(anchor + 2, center));
        }
        TransformVariant::Three => {
            debug_assert_eq!(m.star_role(anchor + 1), third);
            debug_assert_eq!(m.star_role(anchor + 2), third);
            remove(host.star_edge(anchor, center));
            remove(host.path_edge(anchor, crossing));
            remove(host.star_edge(anchor + 1, third));
            remove(host.path_edge(anchor + 1, center));
            remove(host.star_edge(anchor + 2, third));
            edges.push(host.star_edge(anchor, crossing));
            edges.push(host.path_edge(anchor, center));
            edges.push(host.star_edge(anchor + 1, crossing));
            edges.push(host.path_edge(anchor + 1, third));
            edges.push(host.star_edge(anchor + 2, center));
        }
    }

    Ok(Matching::new(host, edges).expect("local moves preserve perfect matchings"))
}

/// Shape of the 2-factor of a type-2 matching: one spanning even cycle plus
/// `six_cycle_count` block-local 6-cycles, with
/// `long_cycle_length + 6 * six_cycle_count = 4k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Type2Structure {
    /// Index of the long cycle in the 2-factor's canonical cycle order.
    pub long_cycle: usize,
    pub long_cycle_length: usize,
    pub six_cycle_count: usize,
}

/// Analyses the 2-factor of a type-2 matching.
///
/// The long cycle is identified as the cycle through the complement edge at
/// the first doubly-crossed gap; any cycle that is neither that spanning
/// cycle nor a 6-cycle confined to two consecutive claws is reported as a
/// structure violation.
pub fn type2_structure(
    m: &Matching<'_>,
    tf: &TwoFactor,
) -> Result<Type2Structure, TwoFactorError> {
    let host = m.host();
    let k = host.k();
    let (ty, profile) = m.classify().expect("valid matchings classify");
    if ty == MatchingType::One {
        return Err(TwoFactorError::NotTypeTwo);
    }

    let full_gap = profile
        .counts()
        .iter()
        .position(|&c| c == 2)
        .expect("a type-2 matching has doubly-crossed gaps");
    let crossing_edge = host.gap_edges(full_gap)
        .into_iter()
        .find(|&e| !m.contains(e))
        .expect("one complement edge crosses a full gap");
    let long_cycle = tf
        .cycles()
        .iter()
        .position(|c| c.edges().contains(&crossing_edge))
        .expect("the 2-factor covers the complement");

    let long = &tf.cycles()[long_cycle];
    let long_cycle_length = long.len();
    if long_cycle_length % 2 != 0 {
        return Err(TwoFactorError::StructureViolation(format!(
            "spanning cycle has odd length {long_cycle_length}"
        )));
    }
    if long_cycle_length < k {
        return Err(TwoFactorError::StructureViolation(format!(
            "spanning cycle has length {long_cycle_length} < k"
        )));
    }
    if long.claw_span().len() != k {
        return Err(TwoFactorError::StructureViolation(
            "long cycle does not visit every claw".to_string(),
        ));
    }
    for (i, c) in tf.cycles().iter().enumerate() {
        if i == long_cycle {
            continue;
        }
        if c.len() != 6 {
            return Err(TwoFactorError::StructureViolation(format!(
                "cycle of length {} is neither the spanning cycle nor a 6-cycle",
                c.len()
            )));
        }
        let span = c.claw_span();
        let consecutive = span.len() == 2
            && span
                .iter()
                .any(|&c0| span.contains(&((c0 + 1) % k)));
        if !consecutive {
            return Err(TwoFactorError::StructureViolation(
                "6-cycle is not confined to two consecutive claws".to_string(),
            ));
        }
    }
    let six_cycle_count = tf.cycle_count() - 1;
    if long_cycle_length + 6 * six_cycle_count != 4 * k {
        return Err(TwoFactorError::StructureViolation(format!(
            "lengths do not satisfy l + 6p = 4k (l={long_cycle_length}, p={six_cycle_count})"
        )));
    }
    Ok(Type2Structure {
        long_cycle,
        long_cycle_length,
        six_cycle_count,
    })
}
