//! Exact arithmetic over the prime field F_p with p = 2^31 - 1, plus an
//! incremental row-reduction basis used for all rank computations.
//!
//! Working over a large prime field instead of floats gives exact ranks with
//! no tolerance tuning: a random evaluation of a structured matrix achieves
//! the generic rank unless the point hits a measure-zero variety, and over
//! F_p the Schwartz-Zippel bound makes that probability at most deg/p per
//! trial.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// The field modulus, the Mersenne prime 2^31 - 1.
pub const PRIME: u64 = 2_147_483_647;

/// An element of F_p, always kept reduced to `0..PRIME`.
#[derive(Clone, Copy, PartialEq, Eq, Default, Hash)]
pub struct Fp(u32);

impl Fp {
    pub const ZERO: Fp = Fp(0);
    pub const ONE: Fp = Fp(1);

    /// Reduces an arbitrary u64 into the field.
    pub fn new(value: u64) -> Fp {
        Fp((value % PRIME) as u32)
    }

    pub fn value(self) -> u64 {
        u64::from(self.0)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn pow(self, mut exp: u64) -> Fp {
        let mut base = self;
        let mut acc = Fp::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    ///
    /// Panics on zero; callers pivot on nonzero entries only.
    pub fn inv(self) -> Fp {
        assert!(!self.is_zero(), "zero has no inverse in F_p");
        self.pow(PRIME - 2)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let s = u64::from(self.0) + u64::from(rhs.0);
        Fp(if s >= PRIME { (s - PRIME) as u32 } else { s as u32 })
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let s = u64::from(self.0) + PRIME - u64::from(rhs.0);
        Fp(if s >= PRIME { (s - PRIME) as u32 } else { s as u32 })
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        // Both operands are < 2^31, so the product fits in a u64.
        Fp::new(u64::from(self.0) * u64::from(rhs.0))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::ZERO - self
    }
}

impl AddAssign for Fp {
    fn add_assign(&mut self, rhs: Fp) {
        *self = *self + rhs;
    }
}

impl SubAssign for Fp {
    fn sub_assign(&mut self, rhs: Fp) {
        *self = *self - rhs;
    }
}

impl MulAssign for Fp {
    fn mul_assign(&mut self, rhs: Fp) {
        *self = *self * rhs;
    }
}

/// Dense matrix over F_p, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Fp>,
}

impl FpMatrix {
    pub fn zeros(rows: usize, cols: usize) -> FpMatrix {
        FpMatrix {
            rows,
            cols,
            data: vec![Fp::ZERO; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> Fp {
        assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Fp) {
        assert!(row < self.rows && col < self.cols);
        self.data[row * self.cols + col] = value;
    }

    pub fn column(&self, col: usize) -> Vec<Fp> {
        assert!(col < self.cols);
        (0..self.rows).map(|i| self.get(i, col)).collect()
    }

    /// Matrix-vector product; `v.len()` must equal `cols`.
    pub fn mul_vec(&self, v: &[Fp]) -> Vec<Fp> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Fp::ZERO; self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = Fp::ZERO;
            for j in 0..self.cols {
                acc += self.data[i * self.cols + j] * v[j];
            }
            *slot = acc;
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }
}

/// Incremental reduced row echelon basis over F_p.
///
/// Vectors are inserted one at a time; each insertion reports whether the
/// vector was independent of the current span. Stored rows are kept fully
/// reduced (each pivot column is zero in every other row) so the rows form
/// a canonical basis of the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    width: usize,
    rows: Vec<Vec<Fp>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(width: usize) -> EchelonBasis {
        EchelonBasis {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Basis rows in insertion order, fully reduced, pivot entries 1.
    pub fn rows(&self) -> &[Vec<Fp>] {
        &self.rows
    }

    /// Inserts `v` into the basis. Returns the reduced, normalized row that
    /// was added, or `None` when `v` already lies in the span.
    pub fn insert(&mut self, mut v: Vec<Fp>) -> Option<Vec<Fp>> {
        assert_eq!(v.len(), self.width);
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if !c.is_zero() {
                for (vj, rj) in v.iter_mut().zip(row) {
                    *vj -= c * *rj;
                }
            }
        }
        let pivot = v.iter().position(|e| !e.is_zero())?;
        let scale = v[pivot].inv();
        for e in v.iter_mut() {
            *e *= scale;
        }
        // Keep the stored rows reduced against the new pivot.
        for row in self.rows.iter_mut() {
            let c = row[pivot];
            if !c.is_zero() {
                for (rj, vj) in row.iter_mut().zip(&v) {
                    *rj -= c * *vj;
                }
            }
        }
        self.rows.push(v.clone());
        self.pivots.push(pivot);
        Some(v)
    }

    /// Rank of the set of vectors inserted so far.
    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops_small_values() {
        let a = Fp::new(5);
        let b = Fp::new(PRIME - 2);
        assert_eq!(a + b, Fp::new(3));
        assert_eq!(a - b, Fp::new(7));
        assert_eq!(a * b, Fp::new((5 * (PRIME - 2)) % PRIME));
        assert_eq!(-a, Fp::new(PRIME - 5));
    }

    #[test]
    fn inverse_roundtrip() {
        for v in [1u64, 2, 3, 12345, PRIME - 1] {
            let x = Fp::new(v);
            assert_eq!(x * x.inv(), Fp::ONE);
        }
    }

    #[test]
    #[should_panic(expected = "zero has no inverse")]
    fn zero_inverse_panics() {
        let _ = Fp::ZERO.inv();
    }

    #[test]
    fn echelon_basis_rank() {
        let mut b = EchelonBasis::new(3);
        let e = |xs: [u64; 3]| xs.iter().map(|&x| Fp::new(x)).collect::<Vec<_>>();
        assert!(b.insert(e([1, 2, 3])).is_some());
        assert!(b.insert(e([2, 4, 6])).is_none()); // dependent
        assert!(b.insert(e([0, 1, 1])).is_some());
        assert!(b.insert(e([1, 3, 4])).is_none()); // sum of the two
        assert!(b.insert(e([0, 0, 5])).is_some());
        assert_eq!(b.dim(), 3);
        assert!(b.insert(e([7, 7, 7])).is_none()); // full space now
    }

    #[test]
    fn echelon_rows_stay_reduced() {
        let mut b = EchelonBasis::new(4);
        let e = |xs: [u64; 4]| xs.iter().map(|&x| Fp::new(x)).collect::<Vec<_>>();
        b.insert(e([0, 0, 1, 1]));
        b.insert(e([1, 1, 1, 0]));
        b.insert(e([0, 1, 0, 0]));
        for (i, row) in b.rows().iter().enumerate() {
            for (j, other_pivot) in b.pivots.iter().enumerate() {
                if i != j {
                    assert!(row[*other_pivot].is_zero());
                }
            }
            assert_eq!(row[b.pivots[i]], Fp::ONE);
        }
    }

    #[test]
    fn matrix_mul_vec() {
        let mut m = FpMatrix::zeros(2, 3);
        m.set(0, 0, Fp::new(1));
        m.set(0, 2, Fp::new(2));
        m.set(1, 1, Fp::new(3));
        let v = vec![Fp::new(10), Fp::new(20), Fp::new(30)];
        assert_eq!(m.mul_vec(&v), vec![Fp::new(70), Fp::new(60)]);
    }
}
