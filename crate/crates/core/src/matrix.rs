//! Square matrices over a generic scalar ring, plus residue matrices with a
//! carried modulus and the packed byte keys used by the enumeration cores.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::{Coeff, Laurent};

/// Scalar ring for [`Mat`]. `num-traits` supplies zero/one; the ops come
/// from the standard operator traits.
pub trait Scalar:
    Clone
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + fmt::Debug
{
}

impl Scalar for BigInt {}
impl Scalar for i64 {}
impl Scalar for f64 {}
impl<C: Coeff> Scalar for Laurent<C> {}

/// Dense square matrix in row-major order.
#[derive(Clone, PartialEq)]
pub struct Mat<R: Scalar> {
    n: usize,
    e: Vec<R>,
}

/// Exact integer matrix (arbitrary precision).
pub type IntMatrix = Mat<BigInt>;
/// Machine-integer matrix used by the enumeration cores.
pub type SmallIntMatrix = Mat<i64>;
/// Floating-point matrix for non-small labels.
pub type NumMatrix = Mat<f64>;
/// Matrix over the exact two-variable Laurent ring.
pub type LaurentMatrix = Mat<Laurent<BigInt>>;
/// Matrix over the floating-point Laurent ring.
pub type LaurentMatrixF = Mat<Laurent<f64>>;

impl<R: Scalar> Mat<R> {
    pub fn zero(n: usize) -> Self {
        Mat {
            n,
            e: vec![R::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.e[i * n + i] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "rows must form a square");
        Mat {
            n,
            e: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn at(&self, i: usize, j: usize) -> &R {
        &self.e[i * self.n + j]
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[R] {
        &self.e
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.e[i * self.n + j] = v;
    }

    pub fn is_identity(&self) -> bool {
        self == &Self::identity(self.n)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let add = a.clone() * rhs.at(k, j).clone();
                    let cur = out.at(i, j).clone();
                    out.set(i, j, cur + add);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (a, b) in out.e.iter_mut().zip(&rhs.e) {
            *a = a.clone() + b.clone();
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        let mut out = self.clone();
        for (a, b) in out.e.iter_mut().zip(&rhs.e) {
            *a = a.clone() - b.clone();
        }
        Ok(out)
    }

    pub fn scale(&self, c: &R) -> Self {
        let mut out = self.clone();
        for a in out.e.iter_mut() {
            *a = c.clone() * a.clone();
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for a in out.e.iter_mut() {
            *a = -a.clone();
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.at(i, j).clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u64) -> Result<Self> {
        let mut acc = Self::identity(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn commutes_with(&self, rhs: &Self) -> Result<bool> {
        Ok(self.mul(rhs)? == rhs.mul(self)?)
    }

    /// Rows as owned vectors, for rendering.
    pub fn rows(&self) -> Vec<Vec<R>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.at(i, j).clone()).collect())
            .collect()
    }

    /// Conjugate by the permutation that lists `order[k]` as the new `k`-th
    /// basis vector. Used to render affine matrices with the affine vertex
    /// first, the order the displayed central-element matrices use.
    pub fn permute_basis(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.n);
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.at(order[i], order[j]).clone());
            }
        }
        out
    }
}

impl<C: Coeff> Mat<Laurent<C>> {
    /// Conjugate-transpose: entrywise bar followed by transpose.
    pub fn star(&self) -> Self {
        let n = self.n;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.at(i, j).bar());
            }
        }
        out
    }
}

impl Mat<Laurent<BigInt>> {
    /// Entrywise evaluation at unit values `s, t in {1, -1}`.
    pub fn specialize(&self, s: i64, t: i64) -> Result<IntMatrix> {
        let s = unit(s)?;
        let t = unit(t)?;
        let mut out = IntMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.at(i, j).eval_units(s, t));
            }
        }
        Ok(out)
    }
}

impl Mat<Laurent<f64>> {
    pub fn specialize_f(&self, s: i64, t: i64) -> Result<NumMatrix> {
        let s = unit(s)?;
        let t = unit(t)?;
        let mut out = NumMatrix::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                out.set(i, j, self.at(i, j).eval_units(s, t));
            }
        }
        Ok(out)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.n == rhs.n
            && self
                .e
                .iter()
                .zip(&rhs.e)
                .all(|(a, b)| a.approx_eq(b, tol))
    }
}

impl Mat<f64> {
    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.n == rhs.n
            && self
                .e
                .iter()
                .zip(&rhs.e)
                .all(|(a, b)| (a - b).abs() <= tol)
    }

    pub fn approx_identity(&self, tol: f64) -> bool {
        self.approx_eq(&Self::identity(self.n), tol)
    }
}

fn unit(v: i64) -> Result<i8> {
    match v {
        1 => Ok(1),
        -1 => Ok(-1),
        other => Err(Error::NonUnitValue(other)),
    }
}

impl IntMatrix {
    /// Determinant by cofactor expansion with memoised minors is overkill;
    /// plain fraction-free (Bareiss) elimination keeps everything integral.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = self.rows();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                    Some(r) => {
                        a.swap(k, r);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a[k][k].clone() * &a[i][j] - a[i][k].clone() * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
                a[i][k] = BigInt::zero();
            }
            prev = a[k][k].clone();
        }
        sign * a[n - 1][n - 1].clone()
    }

    fn minor(&self, row: usize, col: usize) -> IntMatrix {
        let n = self.n;
        let mut rows = Vec::with_capacity(n - 1);
        for i in 0..n {
            if i == row {
                continue;
            }
            let mut r = Vec::with_capacity(n - 1);
            for j in 0..n {
                if j == col {
                    continue;
                }
                r.push(self.at(i, j).clone());
            }
            rows.push(r);
        }
        IntMatrix::from_rows(rows)
    }

    /// Exact inverse of a unimodular matrix via the adjugate.
    pub fn inverse(&self) -> Result<IntMatrix> {
        let d = self.det();
        if !d.abs().is_one() {
            return Err(Error::NotUnimodular { det: d.to_string() });
        }
        let n = self.n;
        if n == 0 {
            return Ok(self.clone());
        }
        let mut adj = IntMatrix::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(i, j).det();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                adj.set(j, i, c);
            }
        }
        Ok(adj.scale(&d))
    }

    /// Entrywise reduction into `[0, m)`.
    pub fn reduce_mod(&self, m: u64) -> Result<ResidueMatrix> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        let mb = BigInt::from(m);
        let e = self
            .e
            .iter()
            .map(|v| {
                let mut r = v % &mb;
                if r.is_negative() {
                    r += &mb;
                }
                u64::try_from(r).expect("residue fits u64")
            })
            .collect();
        Ok(ResidueMatrix { m, n: self.n, e })
    }

    pub fn to_small(&self) -> Option<SmallIntMatrix> {
        let e: Option<Vec<i64>> = self.e.iter().map(|v| i64::try_from(v).ok()).collect();
        Some(SmallIntMatrix { n: self.n, e: e? })
    }
}

impl SmallIntMatrix {
    pub fn to_big(&self) -> IntMatrix {
        IntMatrix {
            n: self.n,
            e: self.e.iter().map(|&v| BigInt::from(v)).collect(),
        }
    }

    /// Canonical byte key: a width tag then little-endian signed entries,
    /// row-major. Stable across runs.
    pub fn byte_key(&self) -> Box<[u8]> {
        let need = self
            .e
            .iter()
            .map(|&v| signed_width(v))
            .max()
            .unwrap_or(1);
        let mut out = Vec::with_capacity(1 + self.e.len() * need as usize);
        out.push(need);
        for &v in &self.e {
            out.extend_from_slice(&v.to_le_bytes()[..need as usize]);
        }
        out.into_boxed_slice()
    }
}

fn signed_width(v: i64) -> u8 {
    for w in 1..8u8 {
        let bits = 8 * w as u32;
        let lo = -(1i64 << (bits - 1));
        let hi = (1i64 << (bits - 1)) - 1;
        if v >= lo && v <= hi {
            return w;
        }
    }
    8
}

/// Square matrix over `Z/m`; the modulus travels with the value and mixing
/// moduli is a hard error.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ResidueMatrix {
    m: u64,
    n: usize,
    e: Vec<u64>,
}

impl ResidueMatrix {
    pub fn identity(n: usize, m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        let mut e = vec![0u64; n * n];
        for i in 0..n {
            e[i * n + i] = 1 % m;
        }
        Ok(ResidueMatrix { m, n, e })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.e[i * self.n + j]
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| self.at(i, j) == if i == j { 1 % self.m } else { 0 })
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::DimensionMismatch(self.n, rhs.n));
        }
        if self.m != rhs.m {
            return Err(Error::BadModulus(rhs.m));
        }
        let n = self.n;
        let m = self.m as u128;
        let mut e = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k) as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let cell = &mut e[i * n + j];
                    *cell = ((*cell as u128 + a * rhs.at(k, j) as u128) % m) as u64;
                }
            }
        }
        Ok(ResidueMatrix { m: self.m, n, e })
    }

    pub fn commutes_with(&self, rhs: &Self) -> Result<bool> {
        Ok(self.mul(rhs)? == rhs.mul(self)?)
    }

    /// Packed canonical key, row-major: one bit per entry when `m == 2`,
    /// otherwise the minimal whole number of bytes per entry.
    pub fn byte_key(&self) -> Box<[u8]> {
        if self.m == 2 {
            let mut out = vec![0u8; self.e.len().div_ceil(8)];
            for (idx, &v) in self.e.iter().enumerate() {
                if v != 0 {
                    out[idx / 8] |= 1 << (idx % 8);
                }
            }
            return out.into_boxed_slice();
        }
        let width = bytes_for_modulus(self.m);
        let mut out = Vec::with_capacity(self.e.len() * width);
        for &v in &self.e {
            out.extend_from_slice(&v.to_le_bytes()[..width]);
        }
        out.into_boxed_slice()
    }
}

/// A generator matrix that differs from the identity in one row only,
/// stored as that row's nonzero entries. Left-multiplication then touches a
/// single row, which is what makes word evaluation and the enumeration
/// cores cheap.
#[derive(Clone, Debug)]
pub struct GenRow<R: Scalar> {
    pub row: usize,
    pub entries: Vec<(usize, R)>,
}

impl<R: Scalar> GenRow<R> {
    /// Dense form of the generator.
    pub fn to_matrix(&self, n: usize) -> Mat<R> {
        let mut m = Mat::identity(n);
        for j in 0..n {
            m.set(self.row, j, R::zero());
        }
        for (k, v) in &self.entries {
            m.set(self.row, *k, v.clone());
        }
        m
    }

    /// `G * M` where `G` is this generator.
    pub fn apply_left(&self, m: &Mat<R>) -> Mat<R> {
        let n = m.n();
        let mut out = m.clone();
        for c in 0..n {
            let mut acc = R::zero();
            for (k, v) in &self.entries {
                let cell = m.at(*k, c);
                if !cell.is_zero() {
                    acc = acc + v.clone() * cell.clone();
                }
            }
            out.set(self.row, c, acc);
        }
        out
    }

    /// `M * G` where `G` is this generator.
    pub fn apply_right(&self, m: &Mat<R>) -> Mat<R> {
        let n = m.n();
        let j = self.row;
        let mut out = m.clone();
        for r in 0..n {
            for c in 0..n {
                let mut acc = if c == j { R::zero() } else { m.at(r, c).clone() };
                for (k, v) in &self.entries {
                    if *k == c {
                        acc = acc + m.at(r, j).clone() * v.clone();
                    }
                }
                out.set(r, c, acc);
            }
        }
        out
    }
}

/// Residue counterpart of [`GenRow`].
#[derive(Clone, Debug)]
pub struct GenRowMod {
    pub row: usize,
    pub entries: Vec<(usize, u64)>,
    pub modulus: u64,
}

impl GenRowMod {
    /// Reduce an integer generator row into `Z/m`, dropping zero entries.
    pub fn from_int(row: &GenRow<BigInt>, m: u64) -> Result<GenRowMod> {
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        let mb = BigInt::from(m);
        let mut entries = Vec::with_capacity(row.entries.len());
        for (k, v) in &row.entries {
            let mut r = v % &mb;
            if r.is_negative() {
                r += &mb;
            }
            let r = u64::try_from(r).expect("residue fits u64");
            if r != 0 {
                entries.push((*k, r));
            }
        }
        Ok(GenRowMod {
            row: row.row,
            entries,
            modulus: m,
        })
    }

    pub fn to_matrix(&self, n: usize) -> Result<ResidueMatrix> {
        let mut m = ResidueMatrix::identity(n, self.modulus)?;
        for j in 0..n {
            m.e[self.row * n + j] = 0;
        }
        for (k, v) in &self.entries {
            m.e[self.row * n + k] = *v;
        }
        Ok(m)
    }

    pub fn apply_left(&self, m: &ResidueMatrix) -> ResidueMatrix {
        debug_assert_eq!(self.modulus, m.m);
        let n = m.n;
        let md = m.m as u128;
        let mut out = m.clone();
        for c in 0..n {
            let mut acc: u128 = 0;
            for (k, v) in &self.entries {
                acc += *v as u128 * m.at(*k, c) as u128;
            }
            out.e[self.row * n + c] = (acc % md) as u64;
        }
        out
    }
}

fn bytes_for_modulus(m: u64) -> usize {
    let max = m - 1;
    if max < 1 << 8 {
        1
    } else if max < 1 << 16 {
        2
    } else if max < 1 << 32 {
        4
    } else {
        8
    }
}

impl<R: Scalar> fmt::Debug for Mat<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for row in self.rows() {
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for ResidueMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "mod {} [", self.m)?;
        for i in 0..self.n {
            let row: Vec<u64> = (0..self.n).map(|j| self.at(i, j)).collect();
            writeln!(f, "  {:?}", row)?;
        }
        write!(f, "]")
    }
}

/// Build an exact integer matrix from machine integers, for tests and
/// embedded expected values.
pub fn int_matrix(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unipotent_inverse() {
        let a = int_matrix(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.inverse().unwrap(), int_matrix(&[&[1, -1], &[0, 1]]));
        let r = int_matrix(&[&[0, 1], &[-1, 0]]);
        assert_eq!(r.inverse().unwrap(), int_matrix(&[&[0, -1], &[1, 0]]));
    }

    #[test]
    fn product_example() {
        let a = int_matrix(&[&[1, 2], &[0, 1]]);
        let b = int_matrix(&[&[1, 0], &[-2, 1]]);
        assert_eq!(a.mul(&b).unwrap(), int_matrix(&[&[-3, 2], &[-2, 1]]));
    }

    #[test]
    fn non_unimodular_rejected() {
        let a = int_matrix(&[&[2, 0], &[0, 1]]);
        assert!(matches!(a.inverse(), Err(Error::NotUnimodular { .. })));
    }

    #[test]
    fn reduce_mod_examples() {
        let a = int_matrix(&[&[13, 8], &[8, 5]]);
        assert!(a.reduce_mod(4).unwrap().is_identity());
        let b = int_matrix(&[&[-1, 2], &[0, 1]]);
        assert!(b.reduce_mod(2).unwrap().is_identity());
        assert!(matches!(a.reduce_mod(1), Err(Error::BadModulus(1))));
    }

    #[test]
    fn residue_modulus_mismatch_is_error() {
        let a = int_matrix(&[&[1, 0], &[0, 1]]);
        let x = a.reduce_mod(2).unwrap();
        let y = a.reduce_mod(3).unwrap();
        assert!(x.mul(&y).is_err());
    }

    #[test]
    fn mod2_key_packs_bits() {
        let a = int_matrix(&[&[1, 0], &[0, 1]]);
        let k = a.reduce_mod(2).unwrap().byte_key();
        assert_eq!(k.len(), 1); // 4 entries -> 1 byte
        assert_eq!(k[0], 0b1001);
    }

    #[test]
    fn det_bareiss_matches_small_cases() {
        let a = int_matrix(&[&[2, -1, 0], &[-1, 2, -1], &[0, -1, 2]]);
        assert_eq!(a.det(), BigInt::from(4));
        let b = int_matrix(&[&[0, 1], &[-1, 0]]);
        assert_eq!(b.det(), BigInt::from(1));
    }
}
