//! Structured matrices and switched structured systems.
//!
//! A structured matrix records only a sparsity pattern: every entry is either
//! a fixed zero or a named free parameter. A switched system is a family of
//! `m` pairs `(A_i, B_i)` over a shared state dimension `n` and input
//! dimension `r`, with all parameter names globally unique (independence).
//! Two aggregate patterns drive the graph criteria: the sum pattern
//! `[A_1+...+A_m, B_1+...+B_m]` and the stacked pattern
//! `[A_1,...,A_m, B_1,...,B_m]`.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

/// Which matrix of a subsystem pair an entry belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    A,
    B,
}

/// Where a free parameter comes from.
///
/// Parameters of a system always carry their subsystem and block; the sum
/// pattern mints aggregate parameters that belong to no subsystem (the sum
/// of several independent parameters is a fresh free parameter of the
/// collapsed pattern).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParamSource {
    /// 1-based subsystem index plus the block within the pair.
    Subsystem { index: usize, block: Block },
    Aggregate,
}

/// A named independent free parameter. Names are the identity: validation
/// rejects any system in which two entries share a name.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Param {
    pub name: String,
    pub source: ParamSource,
}

impl Param {
    pub fn subsystem(name: impl Into<String>, index: usize, block: Block) -> Param {
        Param {
            name: name.into(),
            source: ParamSource::Subsystem { index, block },
        }
    }

    pub fn aggregate(name: impl Into<String>) -> Param {
        Param {
            name: name.into(),
            source: ParamSource::Aggregate,
        }
    }
}

/// Auto-generated parameter name for subsystem `index` (1-based) at 0-based
/// `(row, col)`. Columns of the B block are offset by `n` so that names stay
/// unique across the `[A_i | B_i]` pair: `p2_1_4` is the entry of subsystem 2
/// in row 1, combined column 4.
pub fn auto_name(index: usize, block: Block, row: usize, col: usize, n: usize) -> String {
    let combined_col = match block {
        Block::A => col + 1,
        Block::B => n + col + 1,
    };
    format!("p{}_{}_{}", index, row + 1, combined_col)
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SystemError {
    #[error("empty system: n, r, and m must all be at least 1")]
    EmptySystem,
    #[error(
        "subsystem {subsystem}: {block:?} is {got_rows}x{got_cols}, expected {want_rows}x{want_cols}"
    )]
    DimensionMismatch {
        subsystem: usize,
        block: Block,
        got_rows: usize,
        got_cols: usize,
        want_rows: usize,
        want_cols: usize,
    },
    #[error("parameter name {name:?} is used more than once; free parameters must be independent")]
    DuplicateParameter { name: String },
    #[error("position ({row},{col}) out of bounds for a {rows}x{cols} pattern")]
    PositionOutOfBounds {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("parameter {name:?} is tagged for a different subsystem or block than it occupies")]
    MisplacedParameter { name: String },
    #[error("subsystem index {index} out of range 1..={m}")]
    IndexOutOfRange { index: usize, m: usize },
}

/// Sparsity pattern: entries are fixed zeros except at the stored positions,
/// which hold named free parameters. Absence alone encodes zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Param>,
}

impl StructuredMatrix {
    pub fn zeros(rows: usize, cols: usize) -> StructuredMatrix {
        StructuredMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    /// Marks `(row, col)` as a free parameter. Re-setting a position replaces
    /// the previous parameter.
    pub fn set_free(&mut self, row: usize, col: usize, param: Param) -> Result<(), SystemError> {
        if row >= self.rows || col >= self.cols {
            return Err(SystemError::PositionOutOfBounds {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        self.entries.insert((row, col), param);
        Ok(())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Param> {
        self.entries.get(&(row, col))
    }

    pub fn is_free(&self, row: usize, col: usize) -> bool {
        self.entries.contains_key(&(row, col))
    }

    /// Number of free entries.
    pub fn free_count(&self) -> usize {
        self.entries.len()
    }

    /// Free positions with their parameters, in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Param)> {
        self.entries.iter().map(|(&(r, c), p)| (r, c, p))
    }

    /// The set of free positions.
    pub fn support(&self) -> BTreeSet<(usize, usize)> {
        self.entries.keys().copied().collect()
    }
}

/// One subsystem pair `(A_i, B_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsystem {
    a: StructuredMatrix,
    b: StructuredMatrix,
}

impl Subsystem {
    pub fn a(&self) -> &StructuredMatrix {
        &self.a
    }

    pub fn b(&self) -> &StructuredMatrix {
        &self.b
    }
}

/// A switched structured system: `m` subsystem pairs over shared dimensions.
///
/// Construction validates every invariant; values are immutable afterwards,
/// so shared references are safe across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchedSystem {
    n: usize,
    r: usize,
    subsystems: Vec<Subsystem>,
}

impl SwitchedSystem {
    /// Builds and validates a system from `(A_i, B_i)` pairs.
    pub fn new(
        n: usize,
        r: usize,
        pairs: Vec<(StructuredMatrix, StructuredMatrix)>,
    ) -> Result<SwitchedSystem, SystemError> {
        let system = SwitchedSystem {
            n,
            r,
            subsystems: pairs
                .into_iter()
                .map(|(a, b)| Subsystem { a, b })
                .collect(),
        };
        system.validate()?;
        Ok(system)
    }

    /// Convenience constructor: free positions only, parameters auto-named.
    /// `supports[i] = (a_positions, b_positions)` with 0-based `(row, col)`.
    #[allow(clippy::type_complexity)]
    pub fn from_supports(
        n: usize,
        r: usize,
        supports: &[(Vec<(usize, usize)>, Vec<(usize, usize)>)],
    ) -> Result<SwitchedSystem, SystemError> {
        let mut pairs = Vec::with_capacity(supports.len());
        for (idx, (a_pos, b_pos)) in supports.iter().enumerate() {
            let i = idx + 1;
            let mut a = StructuredMatrix::zeros(n, n);
            for &(row, col) in a_pos {
                a.set_free(
                    row,
                    col,
                    Param::subsystem(auto_name(i, Block::A, row, col, n), i, Block::A),
                )?;
            }
            let mut b = StructuredMatrix::zeros(n, r);
            for &(row, col) in b_pos {
                b.set_free(
                    row,
                    col,
                    Param::subsystem(auto_name(i, Block::B, row, col, n), i, Block::B),
                )?;
            }
            pairs.push((a, b));
        }
        SwitchedSystem::new(n, r, pairs)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn m(&self) -> usize {
        self.subsystems.len()
    }

    pub fn subsystems(&self) -> &[Subsystem] {
        &self.subsystems
    }

    /// Subsystem pair by 1-based index.
    pub fn subsystem(&self, index: usize) -> Result<&Subsystem, SystemError> {
        if index == 0 || index > self.m() {
            return Err(SystemError::IndexOutOfRange {
                index,
                m: self.m(),
            });
        }
        Ok(&self.subsystems[index - 1])
    }

    /// Re-checks every invariant: dimensions, parameter placement, and global
    /// name uniqueness (the syntactic form of parameter independence).
    pub fn validate(&self) -> Result<(), SystemError> {
        if self.n == 0 || self.r == 0 || self.subsystems.is_empty() {
            return Err(SystemError::EmptySystem);
        }
        for (idx, sub) in self.subsystems.iter().enumerate() {
            let i = idx + 1;
            for (block, matrix, want_cols) in
                [(Block::A, &sub.a, self.n), (Block::B, &sub.b, self.r)]
            {
                if matrix.rows() != self.n || matrix.cols() != want_cols {
                    return Err(SystemError::DimensionMismatch {
                        subsystem: i,
                        block,
                        got_rows: matrix.rows(),
                        got_cols: matrix.cols(),
                        want_rows: self.n,
                        want_cols,
                    });
                }
                for (_, _, param) in matrix.entries() {
                    match &param.source {
                        ParamSource::Subsystem {
                            index: pi,
                            block: pb,
                        } if *pi == i && *pb == block => {}
                        _ => {
                            return Err(SystemError::MisplacedParameter {
                                name: param.name.clone(),
                            })
                        }
                    }
                }
            }
        }
        let mut seen = BTreeSet::new();
        for param in self.params() {
            if !seen.insert(param.name.as_str()) {
                return Err(SystemError::DuplicateParameter {
                    name: param.name.clone(),
                });
            }
        }
        Ok(())
    }

    /// All parameters in deterministic order: subsystem 1..m, A before B,
    /// row-major within each matrix.
    pub fn params(&self) -> impl Iterator<Item = &Param> {
        self.subsystems.iter().flat_map(|sub| {
            sub.a
                .entries()
                .map(|(_, _, p)| p)
                .chain(sub.b.entries().map(|(_, _, p)| p))
        })
    }

    /// The `n x (n+r)` pattern of `[A_1+...+A_m, B_1+...+B_m]`.
    ///
    /// An entry is free iff it is free in at least one subsystem; the
    /// resulting pattern gets fresh aggregate parameters `s{row}_{col}`
    /// (1-based, B columns offset by `n`).
    pub fn sum_pattern(&self) -> StructuredMatrix {
        let mut out = StructuredMatrix::zeros(self.n, self.n + self.r);
        for sub in &self.subsystems {
            for (row, col, _) in sub.a.entries() {
                mint_aggregate(&mut out, row, col);
            }
            for (row, col, _) in sub.b.entries() {
                mint_aggregate(&mut out, row, self.n + col);
            }
        }
        out
    }

    /// The `n x m(n+r)` pattern of `[A_1,...,A_m, B_1,...,B_m]`, preserving
    /// the original parameters. Column blocks are all A's, then all B's.
    pub fn stacked_pattern(&self) -> StructuredMatrix {
        let m = self.m();
        let mut out = StructuredMatrix::zeros(self.n, m * (self.n + self.r));
        for (idx, sub) in self.subsystems.iter().enumerate() {
            let a_offset = idx * self.n;
            let b_offset = m * self.n + idx * self.r;
            for (row, col, param) in sub.a.entries() {
                out.set_free(row, a_offset + col, param.clone())
                    .expect("stacked position in bounds");
            }
            for (row, col, param) in sub.b.entries() {
                out.set_free(row, b_offset + col, param.clone())
                    .expect("stacked position in bounds");
            }
        }
        out
    }
}

fn mint_aggregate(out: &mut StructuredMatrix, row: usize, col: usize) {
    if !out.is_free(row, col) {
        out.set_free(
            row,
            col,
            Param::aggregate(format!("s{}_{}", row + 1, col + 1)),
        )
        .expect("aggregate position in bounds");
    }
}
