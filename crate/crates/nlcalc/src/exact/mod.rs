//! Exact and modular scalar arithmetic, graded monomials, and dense matrices.
//!
//! Everything downstream (restriction matrices, Hilbert functions, bound
//! verification) reduces to linear algebra over the rationals. This module
//! provides the scalar types and the matrix container; rank computations live
//! in [`rank`].

pub mod rank;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar, always in lowest terms with a
/// positive denominator (maintained by the underlying representation).
pub type ExactScalar = BigRational;

/// Smallest modulus accepted for modular rank computations. Primes below
/// this make accidental rank drops too likely to ignore.
pub const PRIME_FLOOR: u64 = 1 << 20;

/// Convenience constructor for an integer scalar.
pub fn scalar_int(n: i64) -> ExactScalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Convenience constructor for a fraction; `den` must be nonzero.
pub fn scalar_ratio(num: i64, den: i64) -> ExactScalar {
    assert!(den != 0, "fraction denominator must be nonzero");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient C(n, k) as u64; exact for the sizes used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

// ---------------------------------------------------------------------------
// Primality (deterministic Miller-Rabin, valid for all u64)
// ---------------------------------------------------------------------------

pub(crate) fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin. The fixed witness set decides primality
/// correctly for every 64-bit integer.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Validates a modulus for modular rank work: must be prime and at least 2^20.
pub fn validate_prime(p: u64) -> Result<()> {
    if p < PRIME_FLOOR {
        return Err(Error::PrimeTooSmall(p));
    }
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// ModScalar
// ---------------------------------------------------------------------------

/// An element of the prime field Z/p, stored reduced (`value < prime`).
///
/// Arithmetic between scalars of different moduli is a programming error and
/// panics. Construction validates the modulus once; cloning is free.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ModScalar {
    value: u64,
    prime: u64,
}

impl ModScalar {
    /// Reduces `value` into Z/p. Negative inputs are mapped to their
    /// canonical nonnegative residue.
    pub fn new(value: i128, prime: u64) -> Result<Self> {
        validate_prime(prime)?;
        let p = prime as i128;
        let v = ((value % p) + p) % p;
        Ok(ModScalar {
            value: v as u64,
            prime,
        })
    }

    /// Constructor that skips revalidating the modulus; for internal loops.
    pub(crate) fn from_reduced(value: u64, prime: u64) -> Self {
        debug_assert!(value < prime);
        ModScalar { value, prime }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &Self) {
        assert_eq!(
            self.prime, other.prime,
            "mixed moduli in modular arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.same_field(other);
        let mut v = self.value + other.value;
        if v >= self.prime {
            v -= self.prime;
        }
        ModScalar::from_reduced(v, self.prime)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.same_field(other);
        let v = if self.value >= other.value {
            self.value - other.value
        } else {
            self.value + self.prime - other.value
        };
        ModScalar::from_reduced(v, self.prime)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.same_field(other);
        ModScalar::from_reduced(mulmod(self.value, other.value, self.prime), self.prime)
    }

    /// Multiplicative inverse via Fermat's little theorem; errors on zero.
    pub fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::ZeroDivisor(self.prime));
        }
        Ok(ModScalar::from_reduced(
            powmod(self.value, self.prime - 2, self.prime),
            self.prime,
        ))
    }
}

// ---------------------------------------------------------------------------
// Monomials
// ---------------------------------------------------------------------------

/// A monomial in the four homogeneous coordinates of projective 3-space,
/// recorded by its exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Monomial {
    exps: [u32; 4],
}

impl Monomial {
    pub fn new(exps: [u32; 4]) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> [u32; 4] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Evaluates the monomial at a point with exact rational coordinates.
    pub fn evaluate(&self, pt: &[ExactScalar; 4]) -> ExactScalar {
        let mut acc = ExactScalar::one();
        for (c, &e) in pt.iter().zip(self.exps.iter()) {
            for _ in 0..e {
                acc *= c;
            }
        }
        acc
    }

    /// Evaluates the monomial at a point with modular coordinates. All four
    /// coordinates must share one modulus.
    pub fn evaluate_mod(&self, pt: &[ModScalar; 4]) -> ModScalar {
        let p = pt[0].prime();
        let mut acc = ModScalar::from_reduced(1 % p, p);
        for (c, &e) in pt.iter().zip(self.exps.iter()) {
            for _ in 0..e {
                acc = acc.mul(c);
            }
        }
        acc
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{e}")?;
            }
        }
        Ok(())
    }
}

/// All degree-`d` monomials in graded-lexicographic order with
/// x0 > x1 > x2 > x3. The list has length C(d+3, 3).
pub fn monomials(d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(binomial(d as u64 + 3, 3) as usize);
    for a0 in (0..=d).rev() {
        for a1 in (0..=d - a0).rev() {
            for a2 in (0..=d - a0 - a1).rev() {
                let a3 = d - a0 - a1 - a2;
                out.push(Monomial::new([a0, a1, a2, a3]));
            }
        }
    }
    debug_assert_eq!(out.len() as u64, binomial(d as u64 + 3, 3));
    out
}

// ---------------------------------------------------------------------------
// DenseMatrix
// ---------------------------------------------------------------------------

/// Row-major dense matrix. The entry count always equals `rows * cols`.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T> DenseMatrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count must be rows * cols");
        DenseMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            assert_eq!(row.len(), ncols, "all rows must have equal length");
            data.extend(row);
        }
        DenseMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone + Zero> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> DenseMatrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
}

impl<T> std::ops::Index<(usize, usize)> for DenseMatrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        self.at(r, c)
    }
}

/// Clears denominators and common content from one rational row, returning a
/// primitive integer row spanning the same line of row space.
pub(crate) fn primitive_int_row(row: &[ExactScalar]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for e in row {
        lcm = lcm.lcm(e.denom());
    }
    let mut out: Vec<BigInt> = row.iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let mut content = BigInt::zero();
    for e in &out {
        content = content.gcd(e);
    }
    if !content.is_zero() && !content.is_one() {
        for e in &mut out {
            *e /= &content;
        }
    }
    // Sign convention: first nonzero entry positive, for deterministic output.
    if let Some(first) = out.iter().find(|e| !e.is_zero()) {
        if first.is_negative() {
            for e in &mut out {
                *e = -std::mem::take(e);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_small_table() {
        assert_eq!(binomial(3, 3), 1);
        assert_eq!(binomial(4, 3), 4);
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(33, 3), 5456);
        assert_eq!(binomial(2, 5), 0);
    }

    #[test]
    fn monomial_count_matches_binomial() {
        for d in 0..=40u32 {
            assert_eq!(
                monomials(d).len() as u64,
                binomial(d as u64 + 3, 3),
                "monomial count at degree {d}"
            );
        }
    }

    #[test]
    fn monomial_order_is_graded_lex() {
        let m1 = monomials(1);
        let exps: Vec<[u32; 4]> = m1.iter().map(|m| m.exps()).collect();
        assert_eq!(
            exps,
            vec![[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
        );
        let m2 = monomials(2);
        assert_eq!(m2[0].exps(), [2, 0, 0, 0]);
        assert_eq!(m2[1].exps(), [1, 1, 0, 0]);
        assert_eq!(m2.last().unwrap().exps(), [0, 0, 0, 2]);
        // Strictly descending in lexicographic order on exponent vectors.
        for w in m2.windows(2) {
            assert!(w[0].exps() > w[1].exps());
        }
    }

    #[test]
    fn monomial_evaluation() {
        let sq = Monomial::new([2, 0, 0, 0]);
        let pt = [scalar_int(3), scalar_int(1), scalar_int(1), scalar_int(1)];
        assert_eq!(sq.evaluate(&pt), scalar_int(9));

        let xy = Monomial::new([1, 1, 0, 0]);
        let pt = [scalar_int(0), scalar_int(5), scalar_int(7), scalar_int(1)];
        assert_eq!(xy.evaluate(&pt), scalar_int(0));

        let z = Monomial::new([0, 0, 0, 1]);
        let pt = [scalar_int(0), scalar_int(0), scalar_int(0), scalar_int(1)];
        assert_eq!(z.evaluate(&pt), scalar_int(1));

        let frac = Monomial::new([0, 2, 0, 0]);
        let pt = [
            scalar_int(1),
            scalar_ratio(1, 2),
            scalar_int(0),
            scalar_int(0),
        ];
        assert_eq!(frac.evaluate(&pt), scalar_ratio(1, 4));
    }

    #[test]
    fn primality_table() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(1_000_003));
        assert!(is_prime_u64(1_048_583));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(561)); // Carmichael
        assert!(!is_prime_u64(1 << 20));
        assert!(is_prime_u64(0xFFFF_FFFF_FFFF_FFC5)); // largest 64-bit prime
    }

    #[test]
    fn modulus_validation() {
        assert!(matches!(
            ModScalar::new(1, 65_537),
            Err(Error::PrimeTooSmall(_))
        ));
        assert!(matches!(
            ModScalar::new(1, 1 << 21),
            Err(Error::NotPrime(_))
        ));
        assert!(ModScalar::new(1, 1_048_583).is_ok());
    }

    #[test]
    fn modular_arithmetic_basics() {
        let p = 1_048_583;
        let a = ModScalar::new(-3, p).unwrap();
        assert_eq!(a.value(), p - 3);
        let b = ModScalar::new(5, p).unwrap();
        assert_eq!(a.add(&b).value(), 2);
        assert_eq!(b.sub(&a).value(), 8);
        let inv = b.inv().unwrap();
        assert_eq!(b.mul(&inv).value(), 1);
        assert!(ModScalar::new(0, p).unwrap().inv().is_err());
    }

    #[test]
    fn primitive_row_clears_denominators() {
        let row = vec![scalar_ratio(1, 2), scalar_ratio(-3, 4), scalar_int(0)];
        let cleared = primitive_int_row(&row);
        assert_eq!(
            cleared,
            vec![BigInt::from(2), BigInt::from(-3), BigInt::from(0)]
        );
    }
}
