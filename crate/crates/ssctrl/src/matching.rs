//! Maximum bipartite matching (Hopcroft-Karp) and Hall-violator extraction.
//!
//! This is the computational engine behind every generic-rank question in the
//! crate: the generic rank of a sparsity pattern equals the maximum number of
//! free entries no two of which share a row or column, which is a maximum
//! matching. When the right side cannot be saturated, `hall_violator`
//! produces the canonical deficient set as a machine-checkable certificate.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    #[error("matching is not maximum: an augmenting path exists")]
    NotMaximum,
    #[error("pair ({left},{right}) is not an edge of the graph")]
    EdgeNotInGraph { left: usize, right: usize },
    #[error("node used twice in matching")]
    EndpointReused,
}

/// Bipartite graph with opaque node labels. Edges go left to right and are
/// kept sorted with no duplicates, so all algorithms are deterministic for a
/// fixed construction order.
#[derive(Clone, Debug)]
pub struct BipartiteGraph<L, R> {
    left: Vec<L>,
    right: Vec<R>,
    adj: Vec<Vec<usize>>,
}

impl<L, R> BipartiteGraph<L, R> {
    pub fn new(left: Vec<L>, right: Vec<R>) -> BipartiteGraph<L, R> {
        let adj = vec![Vec::new(); left.len()];
        BipartiteGraph { left, right, adj }
    }

    pub fn add_edge(&mut self, left: usize, right: usize) {
        assert!(left < self.left.len(), "left index out of range");
        assert!(right < self.right.len(), "right index out of range");
        let list = &mut self.adj[left];
        if let Err(pos) = list.binary_search(&right) {
            list.insert(pos, right);
        }
    }

    pub fn left_len(&self) -> usize {
        self.left.len()
    }

    pub fn right_len(&self) -> usize {
        self.right.len()
    }

    pub fn left_label(&self, i: usize) -> &L {
        &self.left[i]
    }

    pub fn right_label(&self, j: usize) -> &R {
        &self.right[j]
    }

    pub fn neighbors(&self, left: usize) -> &[usize] {
        &self.adj[left]
    }

    pub fn has_edge(&self, left: usize, right: usize) -> bool {
        self.adj[left].binary_search(&right).is_ok()
    }

    /// Maximum-cardinality matching via Hopcroft-Karp layered augmentation.
    /// Left nodes are processed in index order, so the result is
    /// deterministic for a fixed input ordering.
    pub fn max_matching(&self) -> Matching {
        let n_left = self.left.len();
        let n_right = self.right.len();
        let mut left_to_right = vec![None; n_left];
        let mut right_to_left = vec![None; n_right];
        let mut dist = vec![usize::MAX; n_left];

        while self.bfs_layers(&left_to_right, &right_to_left, &mut dist) {
            for u in 0..n_left {
                if left_to_right[u].is_none() {
                    self.augment(u, &mut left_to_right, &mut right_to_left, &mut dist);
                }
            }
        }
        Matching {
            left_to_right,
            right_to_left,
        }
    }

    fn bfs_layers(
        &self,
        left_to_right: &[Option<usize>],
        right_to_left: &[Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        let mut queue = VecDeque::new();
        for (u, m) in left_to_right.iter().enumerate() {
            if m.is_none() {
                dist[u] = 0;
                queue.push_back(u);
            } else {
                dist[u] = usize::MAX;
            }
        }
        let mut reachable_free_right = false;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                match right_to_left[v] {
                    Some(u2) => {
                        if dist[u2] == usize::MAX {
                            dist[u2] = dist[u] + 1;
                            queue.push_back(u2);
                        }
                    }
                    None => reachable_free_right = true,
                }
            }
        }
        reachable_free_right
    }

    fn augment(
        &self,
        u: usize,
        left_to_right: &mut [Option<usize>],
        right_to_left: &mut [Option<usize>],
        dist: &mut [usize],
    ) -> bool {
        for &v in &self.adj[u] {
            let advance = match right_to_left[v] {
                None => true,
                Some(u2) => {
                    dist[u2] == dist[u].wrapping_add(1)
                        && self.augment(u2, left_to_right, right_to_left, dist)
                }
            };
            if advance {
                left_to_right[u] = Some(v);
                right_to_left[v] = Some(u);
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }

    /// Extracts the canonical Hall violator witnessing that `matching` cannot
    /// saturate the right side: the set of right nodes reachable from the
    /// unmatched right nodes by alternating paths, whose whole neighborhood
    /// is strictly smaller.
    ///
    /// Returns `Ok(None)` when the matching saturates the right side.
    /// Returns `Err(NotMaximum)` when the search uncovers an augmenting path,
    /// which proves the supplied matching is not maximum.
    pub fn hall_violator(
        &self,
        matching: &Matching,
    ) -> Result<Option<HallViolator>, MatchingError> {
        assert_eq!(matching.left_to_right.len(), self.left.len());
        assert_eq!(matching.right_to_left.len(), self.right.len());
        if matching.size() == self.right.len() {
            return Ok(None);
        }

        // Reverse adjacency, built on demand.
        let mut radj = vec![Vec::new(); self.right.len()];
        for (u, vs) in self.adj.iter().enumerate() {
            for &v in vs {
                radj[v].push(u);
            }
        }

        let mut right_set = BTreeSet::new();
        let mut neighborhood = BTreeSet::new();
        let mut queue: VecDeque<usize> = VecDeque::new();
        for (v, m) in matching.right_to_left.iter().enumerate() {
            if m.is_none() {
                right_set.insert(v);
                queue.push_back(v);
            }
        }
        while let Some(v) = queue.pop_front() {
            for &u in &radj[v] {
                if neighborhood.insert(u) {
                    match matching.left_to_right[u] {
                        // Free left node reachable by an alternating path
                        // from a free right node: augmenting path.
                        None => return Err(MatchingError::NotMaximum),
                        Some(v2) => {
                            if right_set.insert(v2) {
                                queue.push_back(v2);
                            }
                        }
                    }
                }
            }
        }
        Ok(Some(HallViolator {
            right_set,
            neighborhood,
        }))
    }
}

/// A matching: left/right partner arrays. Only valid matchings can be
/// constructed (via [`BipartiteGraph::max_matching`] or
/// [`Matching::from_pairs`]).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    left_to_right: Vec<Option<usize>>,
    right_to_left: Vec<Option<usize>>,
}

impl Matching {
    /// Builds a matching from explicit pairs, validating that every pair is
    /// an edge and no endpoint repeats.
    pub fn from_pairs<L, R>(
        graph: &BipartiteGraph<L, R>,
        pairs: &[(usize, usize)],
    ) -> Result<Matching, MatchingError> {
        let mut left_to_right = vec![None; graph.left_len()];
        let mut right_to_left = vec![None; graph.right_len()];
        for &(l, r) in pairs {
            if l >= graph.left_len() || r >= graph.right_len() || !graph.has_edge(l, r) {
                return Err(MatchingError::EdgeNotInGraph { left: l, right: r });
            }
            if left_to_right[l].is_some() || right_to_left[r].is_some() {
                return Err(MatchingError::EndpointReused);
            }
            left_to_right[l] = Some(r);
            right_to_left[r] = Some(l);
        }
        Ok(Matching {
            left_to_right,
            right_to_left,
        })
    }

    pub fn size(&self) -> usize {
        self.left_to_right.iter().flatten().count()
    }

    pub fn right_of(&self, left: usize) -> Option<usize> {
        self.left_to_right[left]
    }

    pub fn left_of(&self, right: usize) -> Option<usize> {
        self.right_to_left[right]
    }

    /// Matched pairs in ascending left order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.left_to_right
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
            .collect()
    }
}

/// A right-side set whose left neighborhood is strictly smaller, violating
/// Hall's condition. `neighborhood` is exactly the set of left nodes with an
/// edge into `right_set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    pub right_set: BTreeSet<usize>,
    pub neighborhood: BTreeSet<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n_left: usize, n_right: usize, edges: &[(usize, usize)]) -> BipartiteGraph<usize, usize> {
        let mut g = BipartiteGraph::new((0..n_left).collect(), (0..n_right).collect());
        for &(l, r) in edges {
            g.add_edge(l, r);
        }
        g
    }

    /// Exhaustive maximum matching by recursion over left nodes; the
    /// independent oracle for small graphs.
    fn brute_max(g: &BipartiteGraph<usize, usize>) -> usize {
        fn go(g: &BipartiteGraph<usize, usize>, u: usize, used: &mut Vec<bool>) -> usize {
            if u == g.left_len() {
                return 0;
            }
            let mut best = go(g, u + 1, used); // leave u unmatched
            for &v in g.neighbors(u) {
                if !used[v] {
                    used[v] = true;
                    best = best.max(1 + go(g, u + 1, used));
                    used[v] = false;
                }
            }
            best
        }
        go(g, 0, &mut vec![false; g.right_len()])
    }

    #[test]
    fn complete_3x3_has_perfect_matching() {
        let edges: Vec<_> = (0..3).flat_map(|l| (0..3).map(move |r| (l, r))).collect();
        let g = graph(3, 3, &edges);
        assert_eq!(g.max_matching().size(), 3);
    }

    #[test]
    fn single_left_node_matches_once() {
        let g = graph(1, 2, &[(0, 0), (0, 1)]);
        let m = g.max_matching();
        assert_eq!(m.size(), 1);
        let violator = g.hall_violator(&m).unwrap().unwrap();
        assert_eq!(violator.right_set, [0, 1].into());
        assert_eq!(violator.neighborhood, [0].into());
    }

    #[test]
    fn perfect_matching_has_no_violator() {
        let g = graph(2, 2, &[(0, 0), (1, 1)]);
        let m = g.max_matching();
        assert_eq!(m.size(), 2);
        assert_eq!(g.hall_violator(&m).unwrap(), None);
    }

    #[test]
    fn deficient_right_side_yields_canonical_violator() {
        // left {a,b}, right {x,y,z}; a->x, a->y, b->z. Max matching 2,
        // violator {x,y} with neighborhood {a}.
        let g = graph(2, 3, &[(0, 0), (0, 1), (1, 2)]);
        let m = g.max_matching();
        assert_eq!(m.size(), 2);
        let v = g.hall_violator(&m).unwrap().unwrap();
        assert_eq!(v.right_set, [0, 1].into());
        assert_eq!(v.neighborhood, [0].into());
        assert!(v.neighborhood.len() < v.right_set.len());
    }

    #[test]
    fn non_maximum_matching_detected() {
        let g = graph(2, 2, &[(0, 0), (1, 1)]);
        let empty = Matching::from_pairs(&g, &[]).unwrap();
        assert_eq!(g.hall_violator(&empty), Err(MatchingError::NotMaximum));
    }

    #[test]
    fn from_pairs_validates() {
        let g = graph(2, 2, &[(0, 0), (1, 1)]);
        assert!(matches!(
            Matching::from_pairs(&g, &[(0, 1)]),
            Err(MatchingError::EdgeNotInGraph { left: 0, right: 1 })
        ));
        let g2 = graph(2, 2, &[(0, 0), (1, 0)]);
        assert!(matches!(
            Matching::from_pairs(&g2, &[(0, 0), (1, 0)]),
            Err(MatchingError::EndpointReused)
        ));
    }

    #[test]
    fn matches_brute_force_on_small_corpus() {
        // Deterministic pseudo-random corpus over graphs up to 6+6.
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..300 {
            let n_left = (next() % 6 + 1) as usize;
            let n_right = (next() % 6 + 1) as usize;
            let mut g = graph(n_left, n_right, &[]);
            for l in 0..n_left {
                for r in 0..n_right {
                    if next() % 100 < 40 {
                        g.add_edge(l, r);
                    }
                }
            }
            let m = g.max_matching();
            assert_eq!(m.size(), brute_max(&g));
            // The violator, when present, must violate Hall's condition
            // with its exact neighborhood.
            match g.hall_violator(&m).unwrap() {
                Some(v) => {
                    assert!(m.size() < g.right_len());
                    let mut expected = BTreeSet::new();
                    for l in 0..n_left {
                        if g.neighbors(l).iter().any(|r| v.right_set.contains(r)) {
                            expected.insert(l);
                        }
                    }
                    assert_eq!(v.neighborhood, expected);
                    assert!(v.neighborhood.len() < v.right_set.len());
                }
                None => assert_eq!(m.size(), g.right_len()),
            }
        }
    }

    #[test]
    fn duplicate_edges_are_collapsed() {
        let mut g = graph(1, 1, &[]);
        g.add_edge(0, 0);
        g.add_edge(0, 0);
        assert_eq!(g.neighbors(0), &[0]);
    }

    #[test]
    fn deterministic_matching_for_fixed_order() {
        let g = graph(3, 3, &[(0, 0), (0, 1), (1, 0), (1, 2), (2, 1)]);
        let m1 = g.max_matching();
        let m2 = g.max_matching();
        assert_eq!(m1, m2);
        assert_eq!(m1.size(), 3);
    }
}
