//! Decision procedures for structural controllability of switched systems.
//!
//! The necessary-and-sufficient test has two conditions on the colored union
//! graph: every state vertex must be reachable from the inputs, and there
//! must exist `n` S-disjoint edges (edges with pairwise distinct end
//! vertices in which edges sharing a begin vertex carry distinct subsystem
//! colors). The second condition is equivalent to the stacked pattern
//! `[A_1,...,A_m, B_1,...,B_m]` having generic rank `n`, and is decided by a
//! maximum matching in a bipartite graph whose left nodes are the
//! (begin vertex, color) pairs with an outgoing edge — one node per nonzero
//! column of the stacked pattern — and whose right nodes are the states.
//!
//! Every verdict ships a machine-checkable certificate: the nonaccessible
//! states, an S-dilation witness (a state set whose color-counted
//! in-neighborhood is too small), or the n S-disjoint edges plus a
//! reachability forest.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{
    accessibility, colored_union_graph, subsystem_graph, union_graph, AccessReport, Vertex,
};
use crate::matching::BipartiteGraph;
use crate::system::{StructuredMatrix, SwitchedSystem};

/// Largest state dimension accepted by the exhaustive form-I scan.
pub const FORM_I_MAX_N: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CriteriaError {
    #[error("state dimension {n} too large for exhaustive subset scan (max {max})")]
    TooLarge { n: usize, max: usize },
}

/// Generic rank of a sparsity pattern: the maximum number of free entries no
/// two of which share a row or column, computed as a maximum bipartite
/// matching between rows and columns.
pub fn g_rank(pattern: &StructuredMatrix) -> usize {
    let mut g: BipartiteGraph<usize, usize> = BipartiteGraph::new(
        (0..pattern.rows()).collect(),
        (0..pattern.cols()).collect(),
    );
    for (row, col, _) in pattern.entries() {
        g.add_edge(row, col);
    }
    g.max_matching().size()
}

/// Outcome of the color-blind union-graph test. Both conditions together are
/// sufficient (not necessary) for structural controllability.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnionTest {
    /// No nonaccessible state vertex in the union graph.
    pub accessible: bool,
    /// The union graph has no dilation, equivalently the sum pattern
    /// `[A_1+...+A_m, B_1+...+B_m]` has generic rank `n`.
    pub dilation_free: bool,
}

impl UnionTest {
    pub fn sufficient(&self) -> bool {
        self.accessible && self.dilation_free
    }
}

/// Sufficient-only test on the color-blind union graph.
pub fn union_sufficient_check(sys: &SwitchedSystem) -> UnionTest {
    UnionTest {
        accessible: accessibility(&union_graph(sys)).all_accessible(),
        dilation_free: g_rank(&sys.sum_pattern()) == sys.n(),
    }
}

/// One edge of an S-disjoint set: a begin vertex, the state it enters, and
/// the subsystem color it is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SDisjointEdge {
    pub color: usize,
    pub begin: Vertex,
    pub end: usize,
}

impl fmt::Display for SDisjointEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -[{}]-> x{}", self.begin, self.color, self.end + 1)
    }
}

/// A set of S-disjoint edges: distinct end vertices, and distinct colors
/// among edges sharing a begin vertex. `n` of them certify that the stacked
/// pattern has full generic rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SDisjointEdgeSet {
    pub edges: Vec<SDisjointEdge>,
}

impl SDisjointEdgeSet {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Re-checks the defining conditions from scratch against `sys`:
    /// distinct ends, distinct colors per shared begin vertex, and every
    /// edge present in its subsystem's graph.
    pub fn verify(&self, sys: &SwitchedSystem) -> bool {
        let ends: BTreeSet<_> = self.edges.iter().map(|e| e.end).collect();
        if ends.len() != self.edges.len() {
            return false;
        }
        let begins: BTreeSet<_> = self.edges.iter().map(|e| (e.begin, e.color)).collect();
        if begins.len() != self.edges.len() {
            return false;
        }
        self.edges.iter().all(|e| {
            subsystem_graph(sys, e.color)
                .map(|g| g.colors_of(e.begin, Vertex::State(e.end)).is_some())
                .unwrap_or(false)
        })
    }
}

/// Witness that some state set `S` has too few in-neighbors when these are
/// counted per color: `t_size = sum_i |T_i(S)| < |S|`, where `T_i(S)` is the
/// set of begin vertices of color-`i` edges into `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationWitness {
    pub s_set: BTreeSet<usize>,
    pub t_size: usize,
    pub per_color_t: BTreeMap<usize, BTreeSet<Vertex>>,
}

impl DilationWitness {
    /// Recomputes every `T_i(S)` from the subsystem graphs and checks the
    /// witness is exact and deficient.
    pub fn verify(&self, sys: &SwitchedSystem) -> bool {
        let mut total = 0;
        for color in 1..=sys.m() {
            let g = match subsystem_graph(sys, color) {
                Ok(g) => g,
                Err(_) => return false,
            };
            let mut t_i = BTreeSet::new();
            for (from, to, _) in g.edges() {
                if let Vertex::State(s) = to {
                    if self.s_set.contains(&s) {
                        t_i.insert(from);
                    }
                }
            }
            total += t_i.len();
            let recorded = self.per_color_t.get(&color).cloned().unwrap_or_default();
            if recorded != t_i {
                return false;
            }
        }
        total == self.t_size && self.t_size < self.s_set.len()
    }
}

/// The bipartite graph deciding the S-disjoint edge count: left nodes are
/// (begin vertex, color) pairs with at least one outgoing edge in that
/// subsystem — exactly the nonzero columns of the stacked pattern, in its
/// column order — and right nodes are the states.
fn color_expanded_bipartite(
    sys: &SwitchedSystem,
) -> BipartiteGraph<(Vertex, usize), usize> {
    let graphs: Vec<_> = (1..=sys.m())
        .map(|i| subsystem_graph(sys, i).expect("index in range"))
        .collect();

    let mut left = Vec::new();
    // Stacked-pattern column order: A blocks by color, then B blocks.
    for (idx, g) in graphs.iter().enumerate() {
        for v in 0..sys.n() {
            if !g.out_neighbors(Vertex::State(v)).is_empty() {
                left.push((Vertex::State(v), idx + 1));
            }
        }
    }
    for (idx, g) in graphs.iter().enumerate() {
        for u in 0..sys.r() {
            if !g.out_neighbors(Vertex::Input(u)).is_empty() {
                left.push((Vertex::Input(u), idx + 1));
            }
        }
    }

    let mut bip = BipartiteGraph::new(left, (0..sys.n()).collect());
    for li in 0..bip.left_len() {
        let (v, color) = *bip.left_label(li);
        for target in graphs[color - 1].out_neighbors(v) {
            bip.add_edge(li, target);
        }
    }
    bip
}

/// Maximum S-disjoint edge set of the colored union graph. The returned
/// count equals the generic rank of the stacked pattern; edges are sorted by
/// (color, begin, end).
pub fn max_s_disjoint(sys: &SwitchedSystem) -> (usize, SDisjointEdgeSet) {
    let bip = color_expanded_bipartite(sys);
    let matching = bip.max_matching();
    let mut edges: Vec<SDisjointEdge> = matching
        .pairs()
        .into_iter()
        .map(|(l, r)| {
            let (begin, color) = *bip.left_label(l);
            SDisjointEdge {
                color,
                begin,
                end: r,
            }
        })
        .collect();
    edges.sort();
    (edges.len(), SDisjointEdgeSet { edges })
}

/// Finds an S-dilation, i.e. a deficient state set in the color-counted
/// sense. `None` exactly when `n` S-disjoint edges exist.
pub fn find_s_dilation(sys: &SwitchedSystem) -> Option<DilationWitness> {
    let bip = color_expanded_bipartite(sys);
    let matching = bip.max_matching();
    let violator = bip
        .hall_violator(&matching)
        .expect("matching is maximum by construction")?;
    let mut per_color_t: BTreeMap<usize, BTreeSet<Vertex>> = BTreeMap::new();
    for &l in &violator.neighborhood {
        let (v, color) = *bip.left_label(l);
        per_color_t.entry(color).or_default().insert(v);
    }
    Some(DilationWitness {
        s_set: violator.right_set,
        t_size: violator.neighborhood.len(),
        per_color_t,
    })
}

/// Why a verdict holds, in machine-checkable form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// States unreachable from every input; any one of them blocks
    /// controllability. Reported when accessibility fails (even if the rank
    /// condition fails too).
    Nonaccessible { states: BTreeSet<usize> },
    /// Rank condition fails: a color-counted deficient state set.
    SDilation(DilationWitness),
    /// Both conditions hold: `n` S-disjoint edges plus a witness stem per
    /// state.
    SDisjoint {
        edges: SDisjointEdgeSet,
        access: AccessReport,
    },
}

/// Full decision outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub controllable: bool,
    /// No nonaccessible state in the colored union graph.
    pub accessibility_ok: bool,
    /// `n` S-disjoint edges exist (stacked pattern has full generic rank).
    pub rank_ok: bool,
    /// The color-blind union-graph test also passed. Implies `controllable`;
    /// the converse fails in general.
    pub union_sufficient: bool,
    pub certificate: Certificate,
}

/// Decides structural controllability of `sys` and produces a certificate.
pub fn decide(sys: &SwitchedSystem) -> Verdict {
    let access = accessibility(&colored_union_graph(sys));
    let accessibility_ok = access.all_accessible();
    let (count, edges) = max_s_disjoint(sys);
    let rank_ok = count == sys.n();
    let union_sufficient = union_sufficient_check(sys).sufficient();

    let certificate = if !accessibility_ok {
        Certificate::Nonaccessible {
            states: access.nonaccessible().clone(),
        }
    } else if !rank_ok {
        let witness = find_s_dilation(sys)
            .expect("a deficient right side always yields a Hall violator");
        Certificate::SDilation(witness)
    } else {
        Certificate::SDisjoint { edges, access }
    };

    Verdict {
        controllable: accessibility_ok && rank_ok,
        accessibility_ok,
        rank_ok,
        union_sufficient,
        certificate,
    }
}

/// Exhaustive test for the reducible block structure of the sum pattern:
/// true iff some nonempty state set `K` receives no free entry from states
/// outside `K` and none from any input column. Equivalent to the existence
/// of a nonaccessible vertex; kept as an independent small-`n` oracle.
pub fn is_form_i_bruteforce(sys: &SwitchedSystem) -> Result<bool, CriteriaError> {
    let n = sys.n();
    if n > FORM_I_MAX_N {
        return Err(CriteriaError::TooLarge {
            n,
            max: FORM_I_MAX_N,
        });
    }
    let sum = sys.sum_pattern();
    for mask in 1u32..(1u32 << n) {
        let in_k = |state: usize| mask & (1 << state) != 0;
        let mut closed = true;
        'rows: for row in 0..n {
            if !in_k(row) {
                continue;
            }
            for (r, col, _) in sum.entries() {
                if r != row {
                    continue;
                }
                let from_outside_state = col < n && !in_k(col);
                let from_input = col >= n;
                if from_outside_state || from_input {
                    closed = false;
                    break 'rows;
                }
            }
        }
        if closed {
            return Ok(true);
        }
    }
    Ok(false)
}
