//! Shared brute-force oracles for the integration suites. Everything here
//! is deliberately independent of the implementation paths it checks:
//! matchings by exhaustive search, dilations by subset enumeration, generic
//! rank by random evaluation over F_p.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ssctrl::field::{EchelonBasis, Fp, PRIME};
use ssctrl::graph::{subsystem_graph, Vertex};
use ssctrl::matching::BipartiteGraph;
use ssctrl::system::{auto_name, Block, Param, StructuredMatrix, SwitchedSystem};

/// Exhaustive maximum-matching size by recursion over left nodes. Usable up
/// to roughly 8+8 nodes.
pub fn brute_max_matching(g: &BipartiteGraph<usize, usize>) -> usize {
    fn go(g: &BipartiteGraph<usize, usize>, u: usize, used: &mut Vec<bool>) -> usize {
        if u == g.left_len() {
            return 0;
        }
        let mut best = go(g, u + 1, used);
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

/// Subset-enumeration search for a color-counted deficient state set:
/// some nonempty S with sum_i |T_i(S)| < |S|. Returns the witnessing set
/// and its in-neighbor count. Exponential in n; fine for n <= 12.
pub fn brute_s_dilation(sys: &SwitchedSystem) -> Option<(BTreeSet<usize>, usize)> {
    let n = sys.n();
    let graphs: Vec<_> = (1..=sys.m())
        .map(|i| subsystem_graph(sys, i).unwrap())
        .collect();
    for mask in 1u32..(1u32 << n) {
        let s_set: BTreeSet<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let mut t_total = 0;
        for g in &graphs {
            let mut t_i: BTreeSet<Vertex> = BTreeSet::new();
            for (from, to, _) in g.edges() {
                if let Vertex::State(s) = to {
                    if s_set.contains(&s) {
                        t_i.insert(from);
                    }
                }
            }
            t_total += t_i.len();
        }
        if t_total < s_set.len() {
            return Some((s_set, t_total));
        }
    }
    None
}

/// Generic rank of a pattern by random evaluation: substitute uniform
/// nonzero field elements for the free entries and take the best rank over
/// `trials` draws. Underestimates with probability <= (deg/p)^trials.
pub fn numeric_g_rank(pattern: &StructuredMatrix, trials: usize, seed: u64) -> usize {
    let mut best = 0;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
        let mut rows = vec![vec![Fp::ZERO; pattern.cols()]; pattern.rows()];
        for (row, col, _) in pattern.entries() {
            rows[row][col] = Fp::new(rng.random_range(1..PRIME));
        }
        let mut basis = EchelonBasis::new(pattern.cols());
        for row in rows {
            basis.insert(row);
        }
        best = best.max(basis.dim());
    }
    best
}

/// Builds a system from a template of candidate positions and a subset mask:
/// position k of the flattened template is free iff bit k of `mask` is set.
/// The template lists, per subsystem, A positions then B positions.
#[allow(clippy::type_complexity)]
pub fn system_from_template(
    n: usize,
    r: usize,
    template: &[(Vec<(usize, usize)>, Vec<(usize, usize)>)],
    mask: u64,
) -> SwitchedSystem {
    let mut bit = 0;
    let mut supports = Vec::with_capacity(template.len());
    for (a_pos, b_pos) in template {
        let mut a = Vec::new();
        for &p in a_pos {
            if mask & (1 << bit) != 0 {
                a.push(p);
            }
            bit += 1;
        }
        let mut b = Vec::new();
        for &p in b_pos {
            if mask & (1 << bit) != 0 {
                b.push(p);
            }
            bit += 1;
        }
        supports.push((a, b));
    }
    SwitchedSystem::from_supports(n, r, &supports).unwrap()
}

/// Number of candidate positions in a template.
#[allow(clippy::type_complexity)]
pub fn template_size(template: &[(Vec<(usize, usize)>, Vec<(usize, usize)>)]) -> usize {
    template.iter().map(|(a, b)| a.len() + b.len()).sum()
}

/// Builds a system from a dense bit vector over all m(n*n + n*r) candidate
/// entries, subsystem-major, A before B, row-major.
pub fn system_from_bits(n: usize, r: usize, m: usize, bits: &[bool]) -> SwitchedSystem {
    assert_eq!(bits.len(), m * (n * n + n * r));
    let mut pairs = Vec::with_capacity(m);
    let mut k = 0;
    for i in 1..=m {
        let mut a = StructuredMatrix::zeros(n, n);
        for row in 0..n {
            for col in 0..n {
                if bits[k] {
                    a.set_free(
                        row,
                        col,
                        Param::subsystem(auto_name(i, Block::A, row, col, n), i, Block::A),
                    )
                    .unwrap();
                }
                k += 1;
            }
        }
        let mut b = StructuredMatrix::zeros(n, r);
        for row in 0..n {
            for col in 0..r {
                if bits[k] {
                    b.set_free(
                        row,
                        col,
                        Param::subsystem(auto_name(i, Block::B, row, col, n), i, Block::B),
                    )
                    .unwrap();
                }
                k += 1;
            }
        }
        pairs.push((a, b));
    }
    SwitchedSystem::new(n, r, pairs).unwrap()
}

/// The worked two-subsystem sample used across the suites: subsystem 1
/// actuates x3 only, subsystem 2 actuates x1 and couples x3 into x2.
pub fn two_subsystem_sample() -> SwitchedSystem {
    SwitchedSystem::from_supports(3, 1, &[(vec![], vec![(2, 0)]), (vec![(1, 2)], vec![(0, 0)])])
        .unwrap()
}
