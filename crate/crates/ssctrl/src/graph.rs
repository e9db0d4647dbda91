//! Digraph representations of switched systems and input-reachability.
//!
//! Every subsystem pair `(A_i, B_i)` induces a digraph on state and input
//! vertices: `B_i(j,k)` free puts an edge from input `u_k` to state `x_j`,
//! `A_i(j,k)` free an edge from state `x_k` to state `x_j`. Superposing the
//! subsystem graphs and tagging each edge with the set of subsystems that
//! carry it gives the colored union graph; dropping the tags gives the plain
//! union graph, which is exactly the graph of the sum pattern.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::system::{SwitchedSystem, SystemError};

/// A state or input vertex, 0-based. Rendered 1-based as `x3` / `u1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    State(usize),
    Input(usize),
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::State(i) => write!(f, "x{}", i + 1),
            Vertex::Input(i) => write!(f, "u{}", i + 1),
        }
    }
}

impl FromStr for Vertex {
    type Err = String;

    fn from_str(s: &str) -> Result<Vertex, String> {
        let (kind, rest) = s.split_at(1.min(s.len()));
        let index: usize = rest
            .parse()
            .ok()
            .filter(|&i| i >= 1)
            .ok_or_else(|| format!("invalid vertex label {s:?}"))?;
        match kind {
            "x" => Ok(Vertex::State(index - 1)),
            "u" => Ok(Vertex::Input(index - 1)),
            _ => Err(format!("invalid vertex label {s:?}")),
        }
    }
}

/// The set of subsystems carrying an edge. The plain union graph uses the
/// single sentinel color [`UNION_COLOR`].
pub type ColorSet = BTreeSet<usize>;

/// Sentinel color for color-blind union graphs.
pub const UNION_COLOR: usize = 0;

/// Directed graph on `n` state and `r` input vertices with colored edges.
/// Edges always terminate at state vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDigraph {
    n: usize,
    r: usize,
    edges: BTreeMap<(Vertex, Vertex), ColorSet>,
}

impl ColoredDigraph {
    pub fn new(n: usize, r: usize) -> ColoredDigraph {
        ColoredDigraph {
            n,
            r,
            edges: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn check_vertex(&self, v: Vertex) {
        match v {
            Vertex::State(i) => assert!(i < self.n, "state vertex out of range"),
            Vertex::Input(i) => assert!(i < self.r, "input vertex out of range"),
        }
    }

    pub fn add_edge(&mut self, from: Vertex, to: Vertex, color: usize) {
        self.check_vertex(from);
        self.check_vertex(to);
        assert!(
            matches!(to, Vertex::State(_)),
            "edges must terminate at state vertices"
        );
        self.edges.entry((from, to)).or_default().insert(color);
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn colors_of(&self, from: Vertex, to: Vertex) -> Option<&ColorSet> {
        self.edges.get(&(from, to))
    }

    /// Edges with their color sets, in deterministic (Ord) order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, &ColorSet)> {
        self.edges.iter().map(|(&(f, t), c)| (f, t, c))
    }

    /// Uncolored edge pairs.
    pub fn edge_pairs(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges.keys().copied().collect()
    }

    /// Targets of edges leaving `from`, ascending by state index.
    pub fn out_neighbors(&self, from: Vertex) -> Vec<usize> {
        if self.n == 0 {
            return Vec::new();
        }
        self.edges
            .range((from, Vertex::State(0))..=(from, Vertex::State(self.n - 1)))
            .map(|(&(_, to), _)| match to {
                Vertex::State(i) => i,
                Vertex::Input(_) => unreachable!("edges end at states"),
            })
            .collect()
    }
}

/// Digraph of a single subsystem (1-based index); all edges carry color `i`.
pub fn subsystem_graph(sys: &SwitchedSystem, i: usize) -> Result<ColoredDigraph, SystemError> {
    let sub = sys.subsystem(i)?;
    let mut g = ColoredDigraph::new(sys.n(), sys.r());
    for (row, col, _) in sub.a().entries() {
        g.add_edge(Vertex::State(col), Vertex::State(row), i);
    }
    for (row, col, _) in sub.b().entries() {
        g.add_edge(Vertex::Input(col), Vertex::State(row), i);
    }
    Ok(g)
}

/// Color-blind superposition of all subsystem graphs; every edge carries the
/// sentinel color. This is the graph of the sum pattern.
pub fn union_graph(sys: &SwitchedSystem) -> ColoredDigraph {
    let mut g = ColoredDigraph::new(sys.n(), sys.r());
    for sub in sys.subsystems() {
        for (row, col, _) in sub.a().entries() {
            g.add_edge(Vertex::State(col), Vertex::State(row), UNION_COLOR);
        }
        for (row, col, _) in sub.b().entries() {
            g.add_edge(Vertex::Input(col), Vertex::State(row), UNION_COLOR);
        }
    }
    g
}

/// Superposition keeping, per edge, the set of subsystems that carry it.
pub fn colored_union_graph(sys: &SwitchedSystem) -> ColoredDigraph {
    let mut g = ColoredDigraph::new(sys.n(), sys.r());
    for (idx, sub) in sys.subsystems().iter().enumerate() {
        let color = idx + 1;
        for (row, col, _) in sub.a().entries() {
            g.add_edge(Vertex::State(col), Vertex::State(row), color);
        }
        for (row, col, _) in sub.b().entries() {
            g.add_edge(Vertex::Input(col), Vertex::State(row), color);
        }
    }
    g
}

/// Which states are reachable from the inputs, with one witness path each.
///
/// `forest` maps each accessible state to its parent on a shortest
/// input-to-state path; following parents always reaches an input vertex
/// through distinct vertices, so each chain is a valid stem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AccessReport {
    accessible: BTreeSet<usize>,
    nonaccessible: BTreeSet<usize>,
    forest: BTreeMap<usize, Vertex>,
}

impl AccessReport {
    pub fn accessible(&self) -> &BTreeSet<usize> {
        &self.accessible
    }

    pub fn nonaccessible(&self) -> &BTreeSet<usize> {
        &self.nonaccessible
    }

    pub fn all_accessible(&self) -> bool {
        self.nonaccessible.is_empty()
    }

    pub fn parent(&self, state: usize) -> Option<Vertex> {
        self.forest.get(&state).copied()
    }

    pub fn forest(&self) -> &BTreeMap<usize, Vertex> {
        &self.forest
    }

    /// The witness stem for `state`, from an input vertex to the state.
    /// `None` when the state is nonaccessible.
    pub fn stem_to(&self, state: usize) -> Option<Vec<Vertex>> {
        if !self.accessible.contains(&state) {
            return None;
        }
        let mut path = vec![Vertex::State(state)];
        let mut current = state;
        while let Some(parent) = self.forest.get(&current).copied() {
            path.push(parent);
            match parent {
                Vertex::State(s) => current = s,
                Vertex::Input(_) => break,
            }
        }
        path.reverse();
        Some(path)
    }
}

/// Breadth-first reachability from all input vertices at once, colors
/// ignored. Inputs enter the queue in ascending index order and neighbors
/// are visited in ascending state order, so the witness forest is
/// deterministic.
pub fn accessibility(g: &ColoredDigraph) -> AccessReport {
    let mut forest = BTreeMap::new();
    let mut accessible = BTreeSet::new();
    let mut queue: VecDeque<Vertex> = (0..g.r()).map(Vertex::Input).collect();
    while let Some(v) = queue.pop_front() {
        for target in g.out_neighbors(v) {
            if accessible.insert(target) {
                forest.insert(target, v);
                queue.push_back(Vertex::State(target));
            }
        }
    }
    let nonaccessible = (0..g.n()).filter(|i| !accessible.contains(i)).collect();
    AccessReport {
        accessible,
        nonaccessible,
        forest,
    }
}

/// Palette for rendering subsystem colors in DOT output; cycles past ten.
const DOT_COLORS: [&str; 10] = [
    "black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan4", "magenta",
    "gold3",
];

/// Graphviz DOT rendering. Output is byte-identical for identical graphs:
/// vertices in index order, edges in `Ord` order. Colored edges are labeled
/// with their subsystem indices; the sentinel union color is unlabeled.
pub fn export_dot(g: &ColoredDigraph) -> String {
    let mut out = String::from("digraph system {\n  rankdir=LR;\n");
    for i in 0..g.r() {
        out.push_str(&format!("  u{0} [shape=box, label=\"u{0}\"];\n", i + 1));
    }
    for i in 0..g.n() {
        out.push_str(&format!("  x{0} [shape=circle, label=\"x{0}\"];\n", i + 1));
    }
    for (from, to, colors) in g.edges() {
        let is_union = colors.len() == 1 && colors.contains(&UNION_COLOR);
        if is_union {
            out.push_str(&format!("  {from} -> {to};\n"));
        } else {
            let label = colors
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let first = colors.iter().next().copied().unwrap_or(UNION_COLOR);
            let color = DOT_COLORS[first % DOT_COLORS.len()];
            out.push_str(&format!(
                "  {from} -> {to} [label=\"{label}\", color={color}];\n"
            ));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::{Block, Param, StructuredMatrix};

    fn sample() -> SwitchedSystem {
        let mut b1 = StructuredMatrix::zeros(3, 1);
        b1.set_free(2, 0, Param::subsystem("lam1", 1, Block::B))
            .unwrap();
        let mut a2 = StructuredMatrix::zeros(3, 3);
        a2.set_free(1, 2, Param::subsystem("lam2", 2, Block::A))
            .unwrap();
        let mut b2 = StructuredMatrix::zeros(3, 1);
        b2.set_free(0, 0, Param::subsystem("lam3", 2, Block::B))
            .unwrap();
        SwitchedSystem::new(3, 1, vec![(StructuredMatrix::zeros(3, 3), b1), (a2, b2)]).unwrap()
    }

    #[test]
    fn subsystem_graphs_of_sample() {
        let sys = sample();
        let g1 = subsystem_graph(&sys, 1).unwrap();
        assert_eq!(
            g1.edge_pairs(),
            [(Vertex::Input(0), Vertex::State(2))].into()
        );
        assert_eq!(
            g1.colors_of(Vertex::Input(0), Vertex::State(2)),
            Some(&[1].into())
        );
        let g2 = subsystem_graph(&sys, 2).unwrap();
        assert_eq!(
            g2.edge_pairs(),
            [
                (Vertex::Input(0), Vertex::State(0)),
                (Vertex::State(2), Vertex::State(1)),
            ]
            .into()
        );
        assert!(matches!(
            subsystem_graph(&sys, 3),
            Err(SystemError::IndexOutOfRange { index: 3, m: 2 })
        ));
        assert!(subsystem_graph(&sys, 0).is_err());
    }

    #[test]
    fn all_zero_subsystem_has_no_edges() {
        let sys = SwitchedSystem::from_supports(2, 1, &[(vec![], vec![])]).unwrap();
        assert_eq!(subsystem_graph(&sys, 1).unwrap().edge_count(), 0);
    }

    #[test]
    fn union_graph_of_sample() {
        let sys = sample();
        let g = union_graph(&sys);
        assert_eq!(
            g.edge_pairs(),
            [
                (Vertex::Input(0), Vertex::State(0)),
                (Vertex::Input(0), Vertex::State(2)),
                (Vertex::State(2), Vertex::State(1)),
            ]
            .into()
        );
        for (_, _, colors) in g.edges() {
            assert_eq!(colors, &[UNION_COLOR].into());
        }
    }

    #[test]
    fn union_equals_subsystem_union() {
        let sys = sample();
        let mut expected = BTreeSet::new();
        for i in 1..=sys.m() {
            expected.extend(subsystem_graph(&sys, i).unwrap().edge_pairs());
        }
        assert_eq!(union_graph(&sys).edge_pairs(), expected);
    }

    #[test]
    fn shared_edge_collapses_in_union() {
        // Both subsystems actuate state 1 through the same input.
        let sys =
            SwitchedSystem::from_supports(2, 1, &[(vec![], vec![(0, 0)]), (vec![], vec![(0, 0)])])
                .unwrap();
        let g = union_graph(&sys);
        assert_eq!(g.edge_count(), 1);
        let colored = colored_union_graph(&sys);
        assert_eq!(
            colored.colors_of(Vertex::Input(0), Vertex::State(0)),
            Some(&[1, 2].into())
        );
    }

    #[test]
    fn colored_union_of_sample() {
        let sys = sample();
        let g = colored_union_graph(&sys);
        assert_eq!(
            g.colors_of(Vertex::Input(0), Vertex::State(2)),
            Some(&[1].into())
        );
        assert_eq!(
            g.colors_of(Vertex::Input(0), Vertex::State(0)),
            Some(&[2].into())
        );
        assert_eq!(
            g.colors_of(Vertex::State(2), Vertex::State(1)),
            Some(&[2].into())
        );
    }

    #[test]
    fn single_subsystem_colors_are_one() {
        let sys = SwitchedSystem::from_supports(2, 1, &[(vec![(1, 0)], vec![(0, 0)])]).unwrap();
        for (_, _, colors) in colored_union_graph(&sys).edges() {
            assert_eq!(colors, &[1].into());
        }
    }

    #[test]
    fn sample_fully_accessible() {
        let sys = sample();
        let report = accessibility(&colored_union_graph(&sys));
        assert!(report.all_accessible());
        assert_eq!(report.accessible(), &[0, 1, 2].into());
        // Stems: x2 <- x3 <- u1 is the only route to x2.
        assert_eq!(
            report.stem_to(1),
            Some(vec![Vertex::Input(0), Vertex::State(2), Vertex::State(1)])
        );
    }

    #[test]
    fn no_input_edges_means_nothing_accessible() {
        let sys = SwitchedSystem::from_supports(3, 1, &[(vec![(0, 1), (1, 2)], vec![])]).unwrap();
        let report = accessibility(&union_graph(&sys));
        assert_eq!(report.nonaccessible(), &[0, 1, 2].into());
        assert!(report.stem_to(0).is_none());
    }

    #[test]
    fn chain_with_isolated_state() {
        // u1 -> x1 -> x2 -> x3, x4 isolated.
        let sys = SwitchedSystem::from_supports(
            4,
            1,
            &[(vec![(1, 0), (2, 1)], vec![(0, 0)])],
        )
        .unwrap();
        let report = accessibility(&union_graph(&sys));
        assert_eq!(report.nonaccessible(), &[3].into());
        assert_eq!(
            report.stem_to(2),
            Some(vec![
                Vertex::Input(0),
                Vertex::State(0),
                Vertex::State(1),
                Vertex::State(2),
            ])
        );
    }

    #[test]
    fn stems_are_simple_and_start_at_inputs() {
        let sys = sample();
        let report = accessibility(&colored_union_graph(&sys));
        for &state in report.accessible() {
            let stem = report.stem_to(state).unwrap();
            assert!(matches!(stem[0], Vertex::Input(_)));
            let distinct: BTreeSet<_> = stem.iter().collect();
            assert_eq!(distinct.len(), stem.len());
        }
    }

    #[test]
    fn dot_output_is_deterministic_and_labeled() {
        let sys = sample();
        let g = colored_union_graph(&sys);
        let dot = export_dot(&g);
        assert_eq!(dot, export_dot(&g));
        assert_eq!(dot.matches("label=\"1\"").count(), 1);
        assert_eq!(dot.matches("label=\"2\"").count(), 2);
        assert!(dot.starts_with("digraph system {"));
    }

    #[test]
    fn dot_of_empty_graph_lists_vertices() {
        let g = ColoredDigraph::new(2, 1);
        let dot = export_dot(&g);
        assert!(dot.contains("u1 [shape=box"));
        assert!(dot.contains("x2 [shape=circle"));
        assert!(!dot.contains("->"));
    }

    #[test]
    fn vertex_labels_roundtrip() {
        for v in [Vertex::State(0), Vertex::State(11), Vertex::Input(2)] {
            assert_eq!(v.to_string().parse::<Vertex>().unwrap(), v);
        }
        assert!("x0".parse::<Vertex>().is_err());
        assert!("y1".parse::<Vertex>().is_err());
        assert!("".parse::<Vertex>().is_err());
    }
}
