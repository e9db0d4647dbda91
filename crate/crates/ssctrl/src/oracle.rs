//! Independent numerical verification over the prime field F_p.
//!
//! Structural controllability means some assignment of the free parameters
//! makes the switched system controllable in the classical rank sense. The
//! oracle draws random nonzero values for every parameter, computes the
//! controllable subspace (the smallest subspace containing all `Im B_i` and
//! invariant under every `A_i`), and declares success when it reaches full
//! dimension. A full-dimension trial is a constructive certificate; a
//! negative answer is one-sided Monte Carlo with failure probability bounded
//! by Schwartz-Zippel, numerically negligible at p = 2^31 - 1.
//!
//! The word-expansion controllability matrix (all products
//! `A_{i_k}...A_{i_1} B_j` up to length n-1) is kept as a small-size
//! cross-check of the subspace iteration; its column count is exponential in
//! `n`, so it is guarded by a column budget.

use std::collections::BTreeMap;
use std::env;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{EchelonBasis, Fp, FpMatrix, PRIME};
use crate::system::{SwitchedSystem, Block};

/// Default number of randomized trials for a verdict.
pub const DEFAULT_TRIALS: usize = 3;

/// Default cap on the number of controllability-matrix columns.
pub const DEFAULT_COLUMN_BUDGET: u64 = 1_000_000;

/// Environment variable overriding [`DEFAULT_COLUMN_BUDGET`].
pub const COLUMN_BUDGET_ENV: &str = "SSCTRL_COLUMN_BUDGET";

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("controllability matrix needs {required} columns, over the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
}

/// A numeric realization of a system: every free parameter fixed to a
/// uniform nonzero element of F_p, zeros kept exactly zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Realization {
    n: usize,
    r: usize,
    assignment: BTreeMap<String, Fp>,
    a: Vec<FpMatrix>,
    b: Vec<FpMatrix>,
}

impl Realization {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.a.len()
    }

    pub fn a(&self, i: usize) -> &FpMatrix {
        &self.a[i]
    }

    pub fn b(&self, i: usize) -> &FpMatrix {
        &self.b[i]
    }

    pub fn assignment(&self) -> &BTreeMap<String, Fp> {
        &self.assignment
    }
}

/// Draws a deterministic realization: parameters are visited in system order
/// (subsystem 1..m, A before B, row-major) and assigned values from a
/// ChaCha8 stream seeded with `seed`, each uniform in `1..PRIME`.
pub fn realize(sys: &SwitchedSystem, seed: u64) -> Realization {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = BTreeMap::new();
    let mut a = Vec::with_capacity(sys.m());
    let mut b = Vec::with_capacity(sys.m());
    for sub in sys.subsystems() {
        for (block, pattern, cols) in [
            (Block::A, sub.a(), sys.n()),
            (Block::B, sub.b(), sys.r()),
        ] {
            let mut matrix = FpMatrix::zeros(sys.n(), cols);
            for (row, col, param) in pattern.entries() {
                let value = Fp::new(rng.random_range(1..PRIME));
                matrix.set(row, col, value);
                assignment.insert(param.name.clone(), value);
            }
            match block {
                Block::A => a.push(matrix),
                Block::B => b.push(matrix),
            }
        }
    }
    Realization {
        n: sys.n(),
        r: sys.r(),
        assignment,
        a,
        b,
    }
}

/// A reduced basis of a subspace of F_p^n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceBasis {
    vectors: Vec<Vec<Fp>>,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn vectors(&self) -> &[Vec<Fp>] {
        &self.vectors
    }
}

/// Computes the controllable subspace of a realization by closure iteration:
/// start from the span of all B columns and keep adding `A_i v` for basis
/// vectors `v` until the dimension stabilizes. At most `n` vectors ever
/// enter the basis, so this terminates in at most `n` rounds.
pub fn controllable_subspace(real: &Realization) -> SubspaceBasis {
    let n = real.n();
    let mut basis = EchelonBasis::new(n);
    let mut frontier: Vec<Vec<Fp>> = Vec::new();
    for b in &real.b {
        for col in 0..b.cols() {
            if let Some(added) = basis.insert(b.column(col)) {
                frontier.push(added);
            }
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for a in &real.a {
                if let Some(added) = basis.insert(a.mul_vec(v)) {
                    next.push(added);
                }
            }
        }
        frontier = next;
    }
    SubspaceBasis {
        vectors: basis.rows().to_vec(),
    }
}

fn column_budget() -> u64 {
    env::var(COLUMN_BUDGET_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_COLUMN_BUDGET)
}

/// Rank of the full word-expansion controllability matrix, whose columns are
/// `W B_i e_j` for every product `W` of at most `n-1` A-matrices. Columns
/// are enumerated level by level (word length 0, 1, ...), each level in
/// word-lexicographic order. Errors out when the total column count exceeds
/// the budget (override with the `SSCTRL_COLUMN_BUDGET` environment
/// variable); use [`controllable_subspace`] instead for large systems.
pub fn switched_ctrb_rank(real: &Realization) -> Result<usize, OracleError> {
    switched_ctrb_rank_with_budget(real, column_budget())
}

/// [`switched_ctrb_rank`] with an explicit column budget.
pub fn switched_ctrb_rank_with_budget(
    real: &Realization,
    budget: u64,
) -> Result<usize, OracleError> {
    let n = real.n();
    let m = real.m() as u128;
    let mut level_cols = m * real.r() as u128;
    let mut required: u128 = 0;
    for _ in 0..n {
        required += level_cols;
        if required > budget as u128 {
            return Err(OracleError::BudgetExceeded {
                required,
                budget,
            });
        }
        level_cols *= m;
    }

    let mut basis = EchelonBasis::new(n);
    let mut level: Vec<Vec<Fp>> = Vec::new();
    for b in &real.b {
        for col in 0..b.cols() {
            let v = b.column(col);
            basis.insert(v.clone());
            level.push(v);
        }
    }
    for _ in 1..n {
        if basis.dim() == n {
            break;
        }
        let mut next = Vec::with_capacity(level.len() * real.m());
        for a in &real.a {
            for v in &level {
                let w = a.mul_vec(v);
                basis.insert(w.clone());
                next.push(w);
            }
        }
        level = next;
    }
    Ok(basis.dim())
}

/// Dimensions reached by `trials` independent realizations; trial `t` uses
/// seed `seed + t`.
pub fn oracle_dims(sys: &SwitchedSystem, trials: usize, seed: u64) -> Vec<usize> {
    (0..trials)
        .map(|t| controllable_subspace(&realize(sys, seed.wrapping_add(t as u64))).dim())
        .collect()
}

/// One-sided Monte Carlo verdict: true iff some trial's controllable
/// subspace reaches dimension `n`. A true answer is a constructive proof of
/// structural controllability; a false answer is wrong only if every trial
/// hit a measure-zero parameter variety.
pub fn oracle_verdict(sys: &SwitchedSystem, trials: usize, seed: u64) -> bool {
    (0..trials).any(|t| {
        controllable_subspace(&realize(sys, seed.wrapping_add(t as u64))).dim() == sys.n()
    })
}
