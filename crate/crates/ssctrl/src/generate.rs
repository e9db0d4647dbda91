//! Reproducible random system generation for fuzzing and sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::system::{auto_name, Block, Param, StructuredMatrix, SwitchedSystem, SystemError};

/// Generates a random system in which every candidate entry of every `A_i`
/// and `B_i` is independently free with probability `density`.
///
/// Fully reproducible: the entry stream comes from a ChaCha8 generator
/// seeded with `seed` via `seed_from_u64`, visiting subsystem 1..m, A before
/// B, row-major, drawing one `f64` in `[0,1)` per candidate entry.
/// Parameters are auto-named (`p{i}_{row}_{col}`, B columns offset by `n`).
///
/// `density` must lie in `[0, 1]`; dimensions of zero yield `EmptySystem`.
pub fn gen_random(
    n: usize,
    r: usize,
    m: usize,
    density: f64,
    seed: u64,
) -> Result<SwitchedSystem, SystemError> {
    assert!(
        (0.0..=1.0).contains(&density),
        "density must be a fraction in [0, 1]"
    );
    if n == 0 || r == 0 || m == 0 {
        return Err(SystemError::EmptySystem);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(m);
    for i in 1..=m {
        let mut a = StructuredMatrix::zeros(n, n);
        for row in 0..n {
            for col in 0..n {
                if rng.random::<f64>() < density {
                    a.set_free(
                        row,
                        col,
                        Param::subsystem(auto_name(i, Block::A, row, col, n), i, Block::A),
                    )?;
                }
            }
        }
        let mut b = StructuredMatrix::zeros(n, r);
        for row in 0..n {
            for col in 0..r {
                if rng.random::<f64>() < density {
                    b.set_free(
                        row,
                        col,
                        Param::subsystem(auto_name(i, Block::B, row, col, n), i, Block::B),
                    )?;
                }
            }
        }
        pairs.push((a, b));
    }
    SwitchedSystem::new(n, r, pairs)
}
