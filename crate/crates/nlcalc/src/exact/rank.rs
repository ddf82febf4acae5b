//! Rank computations: exact fraction-free elimination and modular fast paths.
//!
//! The certified pipeline computes rank modulo two independent primes; on
//! agreement that value is accepted (a modular rank can only undercount, and
//! two simultaneous drops at independently chosen large primes would require
//! both primes to divide every maximal minor). On disagreement the rank is
//! escalated to exact fraction-free Bareiss elimination over the integers.
//! For wide matrices the exact path first forms the Gram matrix M·Mᵀ, which
//! has the same rank over the rationals and far smaller dimensions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{powmod, primitive_int_row, validate_prime, DenseMatrix, ExactScalar, ModScalar};
use crate::error::Result;

/// Default prime pair for the two-prime rank policy. Both sit near 2^26 so
/// row operations can defer reduction (see `rank_mod_lazy`), and both are far
/// above the 2^20 floor.
pub const RANK_PRIME_A: u64 = 67_108_859;
pub const RANK_PRIME_B: u64 = 67_108_879;

/// How certified rank computations are carried out.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum PrimePolicy {
    /// Two-prime agreement with escalation to exact elimination on mismatch.
    #[default]
    TwoPrime,
    /// Exact fraction-free elimination only.
    ExactOnly,
}

/// Outcome of a certified rank computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CertifiedRank {
    pub rank: usize,
    pub method: RankMethod,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RankMethod {
    TwoPrime { p1: u64, p2: u64 },
    Exact { escalated: bool },
}

impl std::fmt::Display for RankMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RankMethod::TwoPrime { p1, p2 } => write!(f, "two-prime({p1},{p2})"),
            RankMethod::Exact { escalated: false } => f.write_str("exact"),
            RankMethod::Exact { escalated: true } => f.write_str("exact(escalated)"),
        }
    }
}

// ---------------------------------------------------------------------------
// Public entry points on rational matrices
// ---------------------------------------------------------------------------

/// Exact rank of a rational matrix via fraction-free elimination.
/// Pivoting is deterministic (first nonzero), so repeated calls agree.
pub fn rank(m: &DenseMatrix<ExactScalar>) -> usize {
    IntMatrix::from_exact(m).exact_rank()
}

/// Rank of a matrix over Z/p. Rejects moduli below 2^20 and composites.
/// All entries must already live in Z/p for the same p.
pub fn rank_modp(m: &DenseMatrix<ModScalar>, p: u64) -> Result<usize> {
    validate_prime(p)?;
    let rows: Vec<Vec<u64>> = m
        .iter_rows()
        .map(|row| {
            row.iter()
                .map(|e| {
                    assert_eq!(
                        e.prime(),
                        p,
                        "matrix entries disagree with the given modulus"
                    );
                    e.value()
                })
                .collect()
        })
        .collect();
    Ok(rank_mod_rows(rows, m.cols(), p))
}

// ---------------------------------------------------------------------------
// Integer matrices (internal workhorse)
// ---------------------------------------------------------------------------

/// Integer matrix with a compact fast path. Rank-preserving row scaling has
/// already been applied, so entries are plain integers.
pub(crate) struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    store: Store,
}

enum Store {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

const SMALL_BITS: u64 = 126;

impl IntMatrix {
    pub fn from_exact(m: &DenseMatrix<ExactScalar>) -> Self {
        let mut data: Vec<BigInt> = Vec::with_capacity(m.rows() * m.cols());
        for row in m.iter_rows() {
            data.extend(primitive_int_row(row));
        }
        Self::from_big(m.rows(), m.cols(), data)
    }

    pub fn from_big(rows: usize, cols: usize, data: Vec<BigInt>) -> Self {
        assert_eq!(data.len(), rows * cols);
        if data.iter().all(|e| e.bits() <= SMALL_BITS) {
            let small = data
                .iter()
                .map(|e| e.to_i128().expect("bit bound guarantees i128 fit"))
                .collect();
            IntMatrix {
                rows,
                cols,
                store: Store::Small(small),
            }
        } else {
            IntMatrix {
                rows,
                cols,
                store: Store::Big(data),
            }
        }
    }

    pub fn from_i128(rows: usize, cols: usize, data: Vec<i128>) -> Self {
        assert_eq!(data.len(), rows * cols);
        IntMatrix {
            rows,
            cols,
            store: Store::Small(data),
        }
    }

    /// Rank modulo a prime (no primality re-check; internal use).
    pub fn rank_mod(&self, p: u64) -> usize {
        let rows = self.reduced_rows(p);
        rank_mod_rows(rows, self.cols, p)
    }

    fn reduced_rows(&self, p: u64) -> Vec<Vec<u64>> {
        let pi = p as i128;
        match &self.store {
            Store::Small(data) => data
                .chunks(self.cols.max(1))
                .take(self.rows)
                .map(|row| row.iter().map(|&e| (((e % pi) + pi) % pi) as u64).collect())
                .collect(),
            Store::Big(data) => {
                let pb = BigInt::from(p);
                data.chunks(self.cols.max(1))
                    .take(self.rows)
                    .map(|row| {
                        row.iter()
                            .map(|e| e.mod_floor(&pb).to_u64().unwrap())
                            .collect()
                    })
                    .collect()
            }
        }
    }

    fn big_rows(&self) -> Vec<Vec<BigInt>> {
        match &self.store {
            Store::Small(data) => data
                .chunks(self.cols.max(1))
                .take(self.rows)
                .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
                .collect(),
            Store::Big(data) => data
                .chunks(self.cols.max(1))
                .take(self.rows)
                .map(|row| row.to_vec())
                .collect(),
        }
    }

    /// Exact rank over the rationals.
    ///
    /// Wide (or tall) matrices are first compressed through the Gram matrix:
    /// over an ordered field, M·Mᵀ·x = 0 forces |Mᵀx|² = 0, so the Gram
    /// matrix has exactly the rank of M while being square of the short side.
    pub fn exact_rank(&self) -> usize {
        let (n, m) = (self.rows, self.cols);
        if n == 0 || m == 0 {
            return 0;
        }
        let short = n.min(m);
        let long = n.max(m);
        if short >= 16 && long >= 2 * short {
            bareiss_rank(self.gram())
        } else {
            bareiss_rank(self.big_rows())
        }
    }

    /// Gram matrix over the shorter axis, as big integers.
    fn gram(&self) -> Vec<Vec<BigInt>> {
        let by_rows = self.rows <= self.cols;
        let n = if by_rows { self.rows } else { self.cols };
        match &self.store {
            Store::Small(data) => {
                let max_abs = data.iter().map(|e| e.unsigned_abs()).max().unwrap_or(0);
                let len = if by_rows { self.cols } else { self.rows } as u128;
                // Products must fit i128 even after summing `len` of them.
                let fits = max_abs != 0
                    && max_abs
                        .checked_mul(max_abs)
                        .and_then(|sq| sq.checked_mul(len))
                        .map(|total| total <= i128::MAX as u128)
                        .unwrap_or(false);
                if fits || max_abs == 0 {
                    self.gram_small(by_rows, n)
                } else {
                    gram_big(&self.big_rows(), by_rows, n)
                }
            }
            Store::Big(_) => gram_big(&self.big_rows(), by_rows, n),
        }
    }

    fn gram_small(&self, by_rows: bool, n: usize) -> Vec<Vec<BigInt>> {
        let Store::Small(data) = &self.store else {
            unreachable!()
        };
        let cols = self.cols;
        let mut g = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in i..n {
                let mut acc: i128 = 0;
                if by_rows {
                    let a = &data[i * cols..(i + 1) * cols];
                    let b = &data[j * cols..(j + 1) * cols];
                    for c in 0..cols {
                        acc += a[c] * b[c];
                    }
                } else {
                    for r in 0..self.rows {
                        acc += data[r * cols + i] * data[r * cols + j];
                    }
                }
                g[i][j] = BigInt::from(acc);
                if i != j {
                    g[j][i] = g[i][j].clone();
                }
            }
        }
        g
    }
}

fn gram_big(rows: &[Vec<BigInt>], by_rows: bool, n: usize) -> Vec<Vec<BigInt>> {
    let mut g = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in i..n {
            let mut acc = BigInt::zero();
            if by_rows {
                for (a, b) in rows[i].iter().zip(rows[j].iter()) {
                    acc += a * b;
                }
            } else {
                for row in rows {
                    acc += &row[i] * &row[j];
                }
            }
            g[i][j] = acc;
            if i != j {
                g[j][i] = g[i][j].clone();
            }
        }
    }
    g
}

/// Certified rank under the given policy.
pub(crate) fn certified_rank_int(m: &IntMatrix, policy: PrimePolicy) -> CertifiedRank {
    match policy {
        PrimePolicy::TwoPrime => {
            let r1 = m.rank_mod(RANK_PRIME_A);
            let r2 = m.rank_mod(RANK_PRIME_B);
            if r1 == r2 {
                CertifiedRank {
                    rank: r1,
                    method: RankMethod::TwoPrime {
                        p1: RANK_PRIME_A,
                        p2: RANK_PRIME_B,
                    },
                }
            } else {
                CertifiedRank {
                    rank: m.exact_rank(),
                    method: RankMethod::Exact { escalated: true },
                }
            }
        }
        PrimePolicy::ExactOnly => CertifiedRank {
            rank: m.exact_rank(),
            method: RankMethod::Exact { escalated: false },
        },
    }
}

// ---------------------------------------------------------------------------
// Fraction-free Bareiss elimination
// ---------------------------------------------------------------------------

/// Rank by fraction-free Bareiss elimination with deterministic first-nonzero
/// pivoting. Every division is checked to be exact; a nonzero remainder would
/// mean the elimination bookkeeping is broken, so it panics loudly.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut rank = 0usize;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = &prow[col];
        for row in tail.iter_mut() {
            let lead = std::mem::replace(&mut row[col], BigInt::zero());
            for c in col + 1..ncols {
                let num = pv * &row[c] - &lead * &prow[c];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "fraction-free elimination lost exactness");
                row[c] = q;
            }
        }
        prev = prow[col].clone();
        rank += 1;
    }
    rank
}

// ---------------------------------------------------------------------------
// Modular elimination
// ---------------------------------------------------------------------------

/// Rank over Z/p of rows already reduced mod p. Dispatches between a
/// lazy-reduction path (small primes, bounded row count) and generic paths.
pub(crate) fn rank_mod_rows(rows: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let steps = rows.len().min(cols) as u128;
    let headroom = (p as u128 - 1) * (p as u128 - 1);
    if steps > 0
        && headroom
            .checked_mul(steps)
            .is_some_and(|t| t + (p as u128 - 1) <= u64::MAX as u128)
    {
        rank_mod_lazy(rows, cols, p)
    } else {
        rank_mod_generic(rows, cols, p)
    }
}

/// Elimination that defers all reductions: with p near 2^26 and at most ~2^11
/// pivot steps, accumulated entries stay below 2^64, so the inner loop is one
/// multiply and one add per entry.
fn rank_mod_lazy(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let nrows = m.len();
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| !m[r][col].is_multiple_of(p)) else {
            continue;
        };
        m.swap(rank, piv);
        for v in &mut m[rank][col..cols] {
            *v %= p;
        }
        let pinv = powmod(m[rank][col], p - 2, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let lead = row[col] % p;
            if lead == 0 {
                row[col] = 0;
                continue;
            }
            let f = super::mulmod(lead, pinv, p);
            let g = p - f;
            for c in col..cols {
                row[c] += g * prow[c];
            }
        }
        rank += 1;
    }
    rank
}

/// Reduction-per-update elimination; correct for any prime modulus.
fn rank_mod_generic(mut m: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let nrows = m.len();
    let wide = p >= (1u64 << 31);
    let mut rank = 0usize;
    for col in 0..cols {
        if rank == nrows {
            break;
        }
        let Some(piv) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, piv);
        let pinv = powmod(m[rank][col], p - 2, p);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col] == 0 {
                continue;
            }
            let f = super::mulmod(row[col], pinv, p);
            let g = p - f;
            for c in col..cols {
                row[c] = if wide {
                    (row[c] + super::mulmod(g, prow[c], p)) % p
                } else {
                    (row[c] + g * prow[c]) % p
                };
            }
        }
        rank += 1;
    }
    rank
}
